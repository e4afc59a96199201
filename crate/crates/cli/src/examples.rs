//! Registered worked examples with their expected verdicts.

use serde::Serialize;
use serde_json::{json, Value};
use skewlab_core::lab::{run_property, PropertyReport, Verdict};
use skewlab_core::Bounds;

use crate::descriptor::{InputError, InstanceDescriptor};

#[derive(Debug, Clone)]
pub struct Expectation {
    pub property: &'static str,
    pub bounds: Bounds,
    pub verdict: Verdict,
    /// Must be contained in the witness JSON (see [`json_contains`]).
    pub witness: Option<Value>,
}

#[derive(Debug, Clone)]
pub struct ExampleRecord {
    pub name: &'static str,
    pub summary: &'static str,
    pub descriptor: Value,
    pub expected: Vec<Expectation>,
}

fn expect(property: &'static str, bounds: (usize, usize), verdict: Verdict, witness: Option<Value>) -> Expectation {
    Expectation { property, bounds: Bounds::new(bounds.0, bounds.1), verdict, witness }
}

fn z2xz2() -> Value {
    json!({"kind": "product", "args": [{"kind": "zmod", "n": 2}, {"kind": "zmod", "n": 2}]})
}

fn swap_inner(name: &str) -> Value {
    json!({"name": name, "ring": z2xz2(), "sigma": {"kind": "swap"}, "delta": {"kind": "inner", "c": "(1,1)"}})
}

use Verdict::{Fails, HoldsUpToBound as Holds};

pub fn registry() -> Vec<ExampleRecord> {
    vec![
        ExampleRecord {
            name: "exp-2.5",
            summary: "Z2+Z2, sigma = swap, delta = id - sigma: McCoy, not skew McCoy, not compatible",
            descriptor: swap_inner("exp-2.5"),
            expected: vec![
                expect(
                    "skew-mccoy",
                    (1, 1),
                    Fails,
                    Some(json!({"kind": "mccoy", "m": {"text": "(1,0)*x"}, "f": {"text": "(1,1) + (1,0)*x"}})),
                ),
                expect("mccoy", (2, 2), Holds, None),
                expect(
                    "compatible",
                    (0, 0),
                    Fails,
                    Some(json!({"kind": "compatibility", "m": {"label": "(0,1)"}, "a": {"label": "(1,0)"}})),
                ),
                expect("semicommutative", (0, 0), Holds, None),
                expect("reduced", (0, 0), Holds, None),
            ],
        },
        ExampleRecord {
            name: "exp-2.5-id",
            summary: "Z2+Z2 with the identity quasi-derivation",
            descriptor: json!({"name": "exp-2.5-id", "ring": z2xz2()}),
            expected: vec![
                expect("mccoy", (2, 2), Holds, None),
                expect("skew-mccoy", (2, 2), Holds, None),
                expect("compatible", (0, 0), Holds, None),
            ],
        },
        ExampleRecord {
            name: "ex-2.14",
            summary: "the same swap instance is semicommutative but fails condition (*)",
            descriptor: swap_inner("ex-2.14"),
            expected: vec![
                expect(
                    "star",
                    (1, 1),
                    Fails,
                    Some(json!({
                        "kind": "star",
                        "m": {"text": "(1,0)*x"},
                        "f": {"text": "(1,1) + (1,0)*x"},
                        "r": {"label": "(1,0)"},
                        "residue": {"text": "(1,0) + (1,0)*x"},
                    })),
                ),
                expect("semicommutative", (0, 0), Holds, None),
            ],
        },
        ExampleRecord {
            name: "ex-2.12",
            summary: "Z2[x]/(x^3) with sigma = evaluation at zero is not sigma-compatible",
            descriptor: json!({
                "name": "ex-2.12",
                "ring": {"kind": "poly_quotient", "base": {"kind": "zmod", "n": 2}, "sigma": {"kind": "identity"}, "n": 3},
                "sigma": {"kind": "eval_at_zero"},
            }),
            expected: vec![expect(
                "compatible",
                (0, 0),
                Fails,
                Some(json!({"kind": "compatibility", "clause": "backward_sigma", "a": {"label": "x"}})),
            )],
        },
        ExampleRecord {
            name: "r4-s4z2",
            summary: "S4(Z2) is McCoy but not Armendariz",
            descriptor: json!({"name": "r4-s4z2", "ring": {"kind": "sn", "base": {"kind": "zmod", "n": 2}, "n": 4}}),
            expected: vec![
                expect("mccoy", (1, 1), Holds, None),
                expect("skew-armendariz", (1, 1), Fails, Some(json!({"kind": "armendariz"}))),
            ],
        },
        ExampleRecord {
            name: "s2-exp-2.5",
            summary: "the swap instance lifted entrywise to S2 stays non-skew-McCoy",
            descriptor: json!({
                "name": "s2-exp-2.5",
                "ring": {"kind": "sn", "base": z2xz2(), "n": 2},
                "sigma": {"kind": "entrywise", "inner": {"kind": "swap"}},
                "delta": {"kind": "entrywise", "inner": {"kind": "inner", "c": "(1,1)"}},
                "module": {"kind": "sn"},
            }),
            expected: vec![expect("skew-mccoy", (1, 1), Fails, Some(json!({"kind": "mccoy"})))],
        },
        ExampleRecord {
            name: "v2-z2",
            summary: "V2(Z2) = Z2[x]/(x^2) is McCoy and skew McCoy but not reduced",
            descriptor: json!({"name": "v2-z2", "ring": {"kind": "vn", "base": {"kind": "zmod", "n": 2}, "n": 2}, "module": {"kind": "vn"}}),
            expected: vec![
                expect("mccoy", (2, 2), Holds, None),
                expect("skew-mccoy", (2, 2), Holds, None),
                expect("reduced", (0, 0), Fails, Some(json!({"kind": "reduced"}))),
            ],
        },
    ]
}

pub fn find(name: &str) -> Option<ExampleRecord> {
    registry().into_iter().find(|r| r.name == name)
}

/// True when every field of `fragment` appears in `value` with a matching
/// value; arrays must match element for element.
pub fn json_contains(value: &Value, fragment: &Value) -> bool {
    match (value, fragment) {
        (Value::Object(v), Value::Object(f)) => f.iter().all(|(k, fv)| v.get(k).is_some_and(|vv| json_contains(vv, fv))),
        (Value::Array(v), Value::Array(f)) => v.len() == f.len() && v.iter().zip(f).all(|(a, b)| json_contains(a, b)),
        _ => value == fragment,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub property: String,
    pub expected: Verdict,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
    pub report: PropertyReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExampleOutcome {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

impl ExampleRecord {
    pub fn instance_descriptor(&self) -> Result<InstanceDescriptor, InputError> {
        serde_json::from_value(self.descriptor.clone()).map_err(|e| InputError::new(self.name, e))
    }

    /// Builds the instance and runs every expected check.
    pub fn run(&self, jobs: usize) -> Result<ExampleOutcome, InputError> {
        let inst = self.instance_descriptor()?.build()?;
        let mut checks = Vec::new();
        for e in &self.expected {
            let report = run_property(e.property, &inst, e.bounds, jobs).map_err(|err| InputError::new(self.name, err))?;
            let mismatch = if report.verdict != e.verdict {
                Some(format!("expected {:?}, got {:?}", e.verdict, report.verdict))
            } else if report.fails() && !report.replay(&inst) {
                Some("witness does not replay".to_string())
            } else {
                match (&e.witness, &report.witness) {
                    (None, _) => None,
                    (Some(_), None) => Some("no witness reported".to_string()),
                    (Some(frag), Some(w)) => {
                        let got = serde_json::to_value(w).expect("witnesses serialize");
                        (!json_contains(&got, frag)).then(|| format!("witness {got} does not contain {frag}"))
                    }
                }
            };
            checks.push(CheckOutcome {
                property: e.property.to_string(),
                expected: e.verdict,
                passed: mismatch.is_none(),
                mismatch,
                report,
            });
        }
        Ok(ExampleOutcome { name: self.name.to_string(), passed: checks.iter().all(|c| c.passed), checks })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fragment_matching() {
        let v = json!({"kind": "star", "r": {"index": 1, "label": "(1,0)"}, "xs": [1, 2]});
        assert!(json_contains(&v, &json!({"r": {"label": "(1,0)"}})));
        assert!(json_contains(&v, &json!({"xs": [1, 2]})));
        assert!(!json_contains(&v, &json!({"xs": [1]})));
        assert!(!json_contains(&v, &json!({"r": {"label": "(0,1)"}})));
        assert!(!json_contains(&v, &json!({"missing": 0})));
    }

    #[test]
    fn registry_descriptors_build() {
        let names: Vec<_> = registry().iter().map(|r| r.name).collect();
        let mut unique = names.clone();
        unique.dedup();
        assert_eq!(names, unique);
        for r in registry() {
            r.instance_descriptor().unwrap().build().unwrap();
        }
    }

    #[test]
    fn small_examples_pass() {
        for name in ["exp-2.5", "exp-2.5-id", "ex-2.14", "ex-2.12"] {
            let out = find(name).unwrap().run(2).unwrap();
            assert!(out.passed, "{}", serde_json::to_string_pretty(&out).unwrap());
        }
    }
}
