//! Configurations of smooth rational curves and divisor classes on them.

use serde_json::json;

use super::Lattice;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveConfig {
    pub name: String,
    pub names: Vec<String>,
    pub gram: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    pub coefficients: Vec<i64>,
}

impl CurveConfig {
    fn from_edges(name: &str, names: &[&str], edges: &[(&str, &str)]) -> Self {
        let n = names.len();
        let mut gram = vec![vec![0; n]; n];
        for (i, row) in gram.iter_mut().enumerate() {
            row[i] = -2;
        }
        let mut cfg = CurveConfig { name: name.into(), names: names.iter().map(|s| s.to_string()).collect(), gram };
        for (a, b) in edges {
            let (i, j) = (cfg.index(a).expect("edge endpoint"), cfg.index(b).expect("edge endpoint"));
            cfg.gram[i][j] += 1;
            cfg.gram[j][i] += 1;
        }
        cfg
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Class Σ cᵢ·Cᵢ from (label, coefficient) terms; repeated labels add up.
    pub fn class(&self, terms: &[(&str, i64)]) -> Result<DivisorClass> {
        let mut c = vec![0; self.len()];
        for (name, k) in terms {
            let i = self.index(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
            c[i] += k;
        }
        Ok(DivisorClass { coefficients: c })
    }

    pub fn curve(&self, name: &str) -> Result<DivisorClass> {
        self.class(&[(name, 1)])
    }

    pub fn intersect(&self, a: &DivisorClass, b: &DivisorClass) -> Result<i64> {
        for v in [a, b] {
            if v.coefficients.len() != self.len() {
                return Err(Error::DimensionMismatch { expected: self.len(), got: v.coefficients.len() });
            }
        }
        let lat = Lattice { name: String::new(), gram: self.gram.clone() };
        Ok(lat.pair(&a.coefficients, &b.coefficients))
    }

    /// Gram matrix of a list of classes.
    pub fn span_gram(&self, classes: &[DivisorClass]) -> Result<Vec<Vec<i64>>> {
        classes.iter().map(|a| classes.iter().map(|b| self.intersect(a, b)).collect()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "name": self.name, "names": self.names, "gram": self.gram, "rank": self.len() })
    }
}

pub fn divisor_square(config: &CurveConfig, class: &DivisorClass) -> Result<i64> {
    config.intersect(class, class)
}

fn chain<'a>(labels: &[&'a str]) -> Vec<(&'a str, &'a str)> {
    labels.windows(2).map(|w| (w[0], w[1])).collect()
}

/// C/D/S₁ configuration: two II* trees joined through S₁ and the sections C₁, D₁.
fn inose_diag11() -> CurveConfig {
    let names = ["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "S1", "D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "D9"];
    let mut edges = vec![("C1", "C2"), ("C2", "C3"), ("C3", "C4"), ("D1", "D2"), ("D2", "D3"), ("D3", "D4")];
    edges.extend(chain(&["C3", "C5", "C6", "C7", "C8", "C9", "S1", "D9", "D8", "D7", "D6", "D5", "D3"]));
    CurveConfig::from_edges("inose_diag11", &names, &edges)
}

/// R/S̃₁/F configuration on the quotient; F₃..F₈ are isolated.
fn quotient_diag22_33() -> CurveConfig {
    let names = ["R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "St1", "F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8"];
    let mut edges = vec![("R1", "R2"), ("R2", "R3"), ("R3", "R4"), ("St1", "F1"), ("St1", "F2")];
    edges.extend(chain(&["R3", "R5", "R6", "R7", "R8", "R9", "St1"]));
    CurveConfig::from_edges("quotient_diag22_33", &names, &edges)
}

fn double_kummer_pencil() -> CurveConfig {
    let mut names = Vec::new();
    for i in 0..4 {
        names.push(format!("H{i}"));
    }
    for j in 0..4 {
        names.push(format!("G{j}"));
    }
    let mut edges = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            let e = format!("E{i}{j}");
            edges.push((format!("H{i}"), e.clone()));
            edges.push((format!("G{j}"), e.clone()));
            names.push(e);
        }
    }
    let nref: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let eref: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    CurveConfig::from_edges("double_kummer_pencil", &nref, &eref)
}

/// Curves on the resolved quartic: chain a₁..a₁₁, L₂, e₁, e₂, e₃, e₅, e₆ with
/// L₁ on a₃ and e₄ on e₃.
fn inose_quartic_diag() -> CurveConfig {
    let names = ["a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "a10", "a11", "L1", "L2", "e1", "e2", "e3", "e4", "e5", "e6"];
    let mut edges = chain(&["a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "a10", "a11", "L2", "e1", "e2", "e3", "e5", "e6"]);
    edges.push(("a3", "L1"));
    edges.push(("e3", "e4"));
    CurveConfig::from_edges("inose_quartic_diag", &names, &edges)
}

pub const CURVE_CONFIGS: [&str; 4] = ["inose_diag11", "quotient_diag22_33", "double_kummer_pencil", "inose_quartic_diag"];

pub fn curve_config(name: &str) -> Result<CurveConfig> {
    match name {
        "inose_diag11" => Ok(inose_diag11()),
        "quotient_diag22_33" => Ok(quotient_diag22_33()),
        "double_kummer_pencil" => Ok(double_kummer_pencil()),
        "inose_quartic_diag" => Ok(inose_quartic_diag()),
        _ => Err(Error::UnknownName(name.into())),
    }
}

/// A fiber class on a configuration together with a curve meeting it once.
#[derive(Clone, Debug)]
pub struct FiberDivisor {
    pub config: &'static str,
    pub label: &'static str,
    pub terms: Vec<(&'static str, i64)>,
    pub section: &'static str,
}

impl FiberDivisor {
    pub fn class(&self) -> Result<(CurveConfig, DivisorClass)> {
        let cfg = curve_config(self.config)?;
        let c = cfg.class(&self.terms)?;
        Ok((cfg, c))
    }

    pub fn square(&self) -> Result<i64> {
        let (cfg, c) = self.class()?;
        divisor_square(&cfg, &c)
    }

    pub fn section_degree(&self) -> Result<i64> {
        let (cfg, c) = self.class()?;
        cfg.intersect(&c, &cfg.curve(self.section)?)
    }
}

fn ii_star(labels: [&'static str; 9]) -> Vec<(&'static str, i64)> {
    labels.into_iter().zip([2, 4, 6, 3, 5, 4, 3, 2, 1]).collect()
}

/// I*₁₂ on the C/D/S₁ configuration: C₂ + C₄ + 2(C₃ + C₅ + … + D₃) + D₄ + D₂.
pub fn i12_star_terms() -> Vec<(&'static str, i64)> {
    let mut t = vec![("C2", 1), ("C4", 1), ("D4", 1), ("D2", 1)];
    for c in ["C3", "C5", "C6", "C7", "C8", "C9", "S1", "D9", "D8", "D7", "D6", "D5", "D3"] {
        t.push((c, 2));
    }
    t
}

/// The same divisor with C₄ also listed inside the doubled chain.
pub fn i12_star_terms_as_printed() -> Vec<(&'static str, i64)> {
    let mut t = i12_star_terms();
    t.push(("C4", 2));
    t
}

/// II* class on the quartic configuration, with a₈ as the simple end.
pub fn quartic_fiber_terms() -> Vec<(&'static str, i64)> {
    vec![("a1", 2), ("a2", 4), ("L1", 3), ("a3", 6), ("a4", 5), ("a5", 4), ("a6", 3), ("a7", 2), ("a8", 1)]
}

pub fn quartic_fiber_terms_as_printed() -> Vec<(&'static str, i64)> {
    let mut t = quartic_fiber_terms();
    t.pop();
    t
}

/// I*₆ on the double Kummer pencil through G₁, E₀₁, H₀, E₀₀, G₀, E₁₀, H₁.
pub fn special_pencil_terms() -> Vec<(&'static str, i64)> {
    let mut t = vec![("E21", 1), ("E31", 1), ("E12", 1), ("E13", 1)];
    for c in ["G1", "E01", "H0", "E00", "G0", "E10", "H1"] {
        t.push((c, 2));
    }
    t
}

pub fn shipped_fiber_divisors() -> Vec<FiberDivisor> {
    let mut quotient_i6 = vec![("R2", 1), ("R4", 1), ("F1", 1), ("F2", 1)];
    for c in ["R3", "R5", "R6", "R7", "R8", "R9", "St1"] {
        quotient_i6.push((c, 2));
    }
    vec![
        FiberDivisor { config: "inose_diag11", label: "I12*", terms: i12_star_terms(), section: "C1" },
        FiberDivisor {
            config: "inose_diag11",
            label: "II* (C side)",
            terms: ii_star(["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9"]),
            section: "S1",
        },
        FiberDivisor {
            config: "inose_diag11",
            label: "II* (D side)",
            terms: ii_star(["D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "D9"]),
            section: "S1",
        },
        FiberDivisor {
            config: "quotient_diag22_33",
            label: "II* (R side)",
            terms: ii_star(["R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9"]),
            section: "St1",
        },
        FiberDivisor { config: "quotient_diag22_33", label: "I6*", terms: quotient_i6, section: "R1" },
        FiberDivisor { config: "double_kummer_pencil", label: "I6* (special)", terms: special_pencil_terms(), section: "H2" },
        FiberDivisor { config: "inose_quartic_diag", label: "II*", terms: quartic_fiber_terms(), section: "a9" },
    ]
}

/// The three mutually orthogonal spans on the quartic configuration: two E8
/// trees and the hyperbolic plane spanned by a₉ and the II* fiber class.
pub fn quartic_spans() -> Result<(CurveConfig, [Vec<DivisorClass>; 3])> {
    let cfg = curve_config("inose_quartic_diag")?;
    let first = ["a1", "a2", "L1", "a3", "a4", "a5", "a6", "a7"].iter().map(|c| cfg.curve(c)).collect::<Result<Vec<_>>>()?;
    let second = ["a11", "L2", "e1", "e2", "e3", "e4", "e5", "e6"].iter().map(|c| cfg.curve(c)).collect::<Result<Vec<_>>>()?;
    let third = vec![cfg.curve("a9")?, cfg.class(&quartic_fiber_terms())?];
    Ok((cfg, [first, second, third]))
}
