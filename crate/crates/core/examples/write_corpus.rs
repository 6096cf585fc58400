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

//! Regenerates `corpus/class2.g6` from the built-in corpus definition.
//!
//! ```text
//! cargo run -p oddimm --example write_corpus
//! ```

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/class2.g6");
    let text = oddimm::corpus::write_corpus(&oddimm::corpus::class_two_corpus()).expect("corpus graphs are simple");
    std::fs::write(path, text).expect("write corpus file");
    println!("wrote {path}");
}
