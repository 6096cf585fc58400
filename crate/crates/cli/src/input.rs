// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::io::Read;
use std::path::Path;

use oddimm::graph::{graph6, io::parse_graph};
use oddimm::{ImmersionCertificate, Multigraph};

use crate::commands::CliError;

pub fn read_text(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Text-format graph, or a single graph6 line.
pub fn parse_any_graph(text: &str) -> Result<Multigraph, String> {
    match parse_graph(text) {
        Ok(g) => Ok(g),
        Err(err) => {
            let t = text.trim();
            if !t.is_empty() && !t.contains(char::is_whitespace) {
                graph6::decode(t).map_err(|g6| format!("{err} (as graph6: {g6})"))
            } else {
                Err(err.to_string())
            }
        }
    }
}

pub fn read_graph(path: &Path) -> Result<Multigraph, CliError> {
    let text = read_text(path)?;
    parse_any_graph(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn read_certificate(path: &Path) -> Result<ImmersionCertificate, CliError> {
    let text = read_text(path)?;
    ImmersionCertificate::from_json(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
