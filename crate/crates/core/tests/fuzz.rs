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

mod common;

#[test]
fn verifier_catches_mutants() {
    let pool = common::valid_pool();
    for (g, cert) in &pool {
        assert!(common::reference_accepts(g, cert, cert.t), "pool entry {}", cert.provenance.case);
    }
    let tally = common::fuzz_verifier(&pool, 300, 11);
    assert!(tally.missed.is_empty(), "missed: {:?}", tally.missed);
    assert_eq!(tally.detected, 300);
    assert_eq!(tally.equivalent_rejected, 0);
}
