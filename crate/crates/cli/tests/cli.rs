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

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const C5: &str = "p mg 5 5\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 4 5 1\ne 1 5 1\n";
const C4: &str = "p mg 4 4\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 1 4 1\n";
const PETERSEN_G6: &str = "IheA@GUAo\n";

fn dir(name: &str) -> PathBuf {
    let d = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn write(d: &Path, name: &str, text: &str) -> String {
    let p = d.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn oddimm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddimm"))
        .args(args)
        .env_remove("ODDIMM_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn construct_then_verify() {
    let d = dir("construct_then_verify");
    let g = write(&d, "c5.mg", C5);
    let cert = d.join("c5.json");
    let c = cert.to_str().unwrap();
    let o = oddimm(&["construct", &g, "-o", c]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = oddimm(&["verify", "--line", &g, c]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("overall PASS\n"));
    // L(C5) is C5 again, with the same labels
    let o = oddimm(&["verify", &g, c]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn blowup_three_verifies() {
    let d = dir("blowup_three_verifies");
    let g = write(&d, "c5.mg", C5);
    let c1 = d.join("c5.json").to_str().unwrap().to_string();
    let c3 = d.join("c5m3.json").to_str().unwrap().to_string();
    assert_eq!(oddimm(&["construct", &g, "-o", &c1]).status.code(), Some(0));
    assert_eq!(oddimm(&["blowup", &g, &c1, "-m", "3", "-o", &c3]).status.code(), Some(0));
    let o = oddimm(&["verify", "--line", "--multiply", "3", &g, &c3]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&c3).unwrap()).unwrap();
    assert_eq!(json["t"], 9);
    assert_eq!(json["paths"].as_array().unwrap().len(), 36);
    // wrong host for the lifted certificate
    let o = oddimm(&["verify", "--line", &g, &c3]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL host"));
}

#[test]
fn tampered_certificate_fails_with_witness() {
    let d = dir("tampered");
    let g = write(&d, "c5.mg", C5);
    let o = oddimm(&["construct", &g]);
    let mut cert: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    // shorten one path to an even walk by dropping its last step
    let paths = cert["paths"].as_array_mut().unwrap();
    let long = paths.iter_mut().find(|p| p["vertices"].as_array().unwrap().len() > 2).unwrap();
    long["vertices"].as_array_mut().unwrap().pop();
    let c = write(&d, "bad.json", &cert.to_string());
    let o = oddimm(&["verify", "--line", &g, &c]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().any(|l| l.starts_with("FAIL ")));
    let o = oddimm(&["--format", "json", "verify", "--line", &g, &c]);
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["overall"], false);
}

#[test]
fn outputs_are_byte_stable() {
    let d = dir("stable");
    let g = write(&d, "p.g6", PETERSEN_G6);
    let a = oddimm(&["construct", &g]);
    let b = oddimm(&["construct", &g]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let a = oddimm(&["scan", "--random", "4", "--vertices", "6", "--seed", "9"]);
    let b = oddimm(&["scan", "--random", "4", "--vertices", "6", "--seed", "9"]);
    let strip = |o: &Output| stdout(o).lines().map(|l| l.split(" ms=").next().unwrap().to_string()).collect::<Vec<_>>();
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn exit_statuses() {
    let d = dir("exit_statuses");
    let c4 = write(&d, "c4.mg", C4);
    let pet = write(&d, "p.g6", PETERSEN_G6);
    let bad = write(&d, "bad.mg", "p mg 2 1\ne 1 3 1\n");
    assert_eq!(oddimm(&["search", &c4, "--t", "3"]).status.code(), Some(1));
    assert_eq!(oddimm(&["search", &c4, "--t", "2"]).status.code(), Some(0));
    assert_eq!(oddimm(&["critical", &c4]).status.code(), Some(1));
    assert_eq!(oddimm(&["--budget", "1", "construct", &pet]).status.code(), Some(3));
    assert_eq!(oddimm(&["search", "--line", &pet, "--t", "4", "--budget", "3"]).status.code(), Some(3));
    assert_eq!(oddimm(&["chi", &bad]).status.code(), Some(2));
    assert_eq!(oddimm(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(oddimm(&["search", &c4, "--t", "3", "--weak", "--strong"]).status.code(), Some(2));
    assert_eq!(oddimm(&["search", &c4, "--terminals", "0,0"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_oddimm"))
        .args(["construct", &pet])
        .env("ODDIMM_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(!o.stderr.is_empty());
}

#[test]
fn coloring_reports() {
    let d = dir("coloring_reports");
    let g = write(&d, "p.g6", PETERSEN_G6);
    let o = oddimm(&["chi-index", &g]);
    let text = stdout(&o);
    assert!(text.starts_with("chromatic-index 4\nmax-degree 3\nclass 2\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("color ")).count(), 15);
    let o = oddimm(&["--format", "json", "chi", &g]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["chromatic_number"], 3);
    let o = oddimm(&["thomassen", &g]);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("path ")).count(), 3);
    let o = oddimm(&["critical", &g]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\np mg "));
}

#[test]
fn linegraph_round_trips() {
    let d = dir("linegraph");
    let g = write(&d, "c5.mg", C5);
    let o = oddimm(&["linegraph", &g, "--multiply", "2"]);
    let text = stdout(&o);
    assert!(text.contains("c vertex 1 edge 1 2\n"));
    let lg = write(&d, "l.mg", &text);
    let o = oddimm(&["chi", &lg]);
    assert!(stdout(&o).starts_with("chromatic-number 5\n"));
    let o = oddimm(&["--format", "json", "linegraph", &g]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["graph"]["n"], 5);
    assert_eq!(v["vertex_to_edge"].as_array().unwrap().len(), 5);
}

#[test]
fn flower_terminals_search() {
    let d = dir("flower");
    let o = oddimm(&["flower", "3"]);
    let f = write(&d, "f.mg", &stdout(&o));
    assert!(stdout(&o).starts_with("c center 1\nc terminals 2 3 4\n"));
    let o = oddimm(&["search", &f, "--terminals", "1,2,3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = oddimm(&["flower", "3", "--no-parity-fix"]);
    let f = write(&d, "skeleton.mg", &stdout(&o));
    let o = oddimm(&["search", &f, "--terminals", "1,2,3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).split(' ').next(), Some("exhausted-no"));
}

#[test]
fn scan_generated_graphs() {
    let o = oddimm(&["scan", "--generate", "5", "--workers", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("summary graphs=31 found=31 exhausted-no=0 budget-out=0\n"));
    let d = dir("scan");
    let corpus = write(&d, "c.g6", "# two graphs\nDhc c5\nbad!\nC~ k4\n");
    let o = oddimm(&["--format", "json", "scan", "--corpus", &corpus, "--line"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 2);
}
