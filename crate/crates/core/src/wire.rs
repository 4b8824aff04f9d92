//! JSON renderings shared by the command-line tool and the Python module.
//! Rationals are "p/q" strings in lowest terms ("p" for integers); maps are
//! serde_json's default BTreeMap so keys come out sorted.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{fmt_rational, CubicExtElement, Polynomial, QuadExtElement, Rational};
use crate::inose::{
    j_pair, modular_invariants, psi2_weierstrass, theta2_fiber_case, theta2_weierstrass, InoseContext,
};
use crate::kummer::{upsilon2_fiber_cases, LegendrePair};
use crate::matching::{
    build_match, build_match_any, invariants_consistency, q_branch_holds, verify_case_identity, verify_functional_match,
    verify_multiplicities, MatchCase,
};
use crate::modular::{bits_below, modular_j, period_vector_checks, sigma_pi_from_periods, PeriodPoint};
use crate::weierstrass::{euler_sum, infinity_type, FiberLocation, FiberRecord, KodairaType};
use crate::exact::BigComplex;

pub fn rational(r: &Rational) -> Value {
    Value::String(fmt_rational(r))
}

/// A rational as a string, otherwise {base, coeff, radicand}.
pub fn quad(x: &QuadExtElement) -> Value {
    match x.as_rational() {
        Some(r) => rational(&r),
        None => json!({ "base": rational(x.base()), "coeff": rational(x.coeff()), "radicand": rational(x.radicand()) }),
    }
}

/// c0 + c1·q + c2·q² with q³ = q_cubed.
pub fn cubic(x: &CubicExtElement) -> Value {
    match x.as_rational() {
        Some(r) => rational(&r),
        None => json!({ "coeffs": x.coeffs().iter().map(rational).collect::<Vec<_>>(), "q_cubed": rational(x.modulus()) }),
    }
}

pub fn polynomial(f: &Polynomial) -> Value {
    json!({ "coeffs": f.coeffs().iter().map(rational).collect::<Vec<_>>(), "text": f.fmt_var("X") })
}

fn ord(o: Option<u32>) -> Value {
    o.map_or(Value::String("inf".into()), Value::from)
}

pub fn fiber_record(r: &FiberRecord) -> Value {
    let location = match &r.location {
        FiberLocation::Infinity => Value::String("infinity".into()),
        FiberLocation::Finite { factor, approx } => json!({
            "factor": polynomial(factor),
            "roots": approx.iter().map(|z| Value::String(z.to_wire())).collect::<Vec<_>>(),
        }),
    };
    json!({
        "count": r.count(),
        "euler": r.euler_total(),
        "kodaira": r.kodaira.to_string(),
        "location": location,
        "ord_delta": r.delta_order,
        "ord_g2": ord(r.ord_g2),
        "ord_g3": ord(r.ord_g3),
    })
}

fn type_counts<'a>(it: impl Iterator<Item = (&'a KodairaType, usize)>) -> Value {
    Value::Object(it.map(|(k, c)| (k.to_string(), Value::from(c))).collect())
}

pub fn invariants(a: &Rational, b: &Rational) -> Value {
    let ctx = InoseContext::from_ab(a.clone(), b.clone());
    let inv = modular_invariants(&ctx);
    let jp = j_pair(&ctx);
    json!({ "pi": rational(&inv.pi), "sigma": rational(&inv.sigma), "j1": quad(&jp.j1), "j2": quad(&jp.j2) })
}

/// Fiber table of Θ₂ ("theta2") or Ψ₂ ("psi2").
pub fn inose_fibers(which: &str, a: &Rational, b: &Rational) -> Result<Value> {
    let ctx = InoseContext::from_ab(a.clone(), b.clone());
    let w = match which {
        "theta2" => theta2_weierstrass(&ctx),
        "psi2" => psi2_weierstrass(&ctx),
        other => return Err(Error::UnknownName(other.to_string())),
    };
    let table = w.full_fiber_table()?;
    let mut counts = std::collections::BTreeMap::new();
    for r in &table {
        *counts.entry(r.kodaira).or_insert(0usize) += r.count();
    }
    Ok(json!({
        "case": theta2_fiber_case(&ctx).tag(),
        "counts": type_counts(counts.iter().map(|(k, c)| (k, *c))),
        "discriminant": polynomial(&w.discriminant()?),
        "euler_sum": euler_sum(&table),
        "fibers": table.iter().map(fiber_record).collect::<Vec<_>>(),
        "fibration": which,
        "g2": polynomial(&w.g2),
        "g3": polynomial(&w.g3),
        "infinity": infinity_type(&table).map(|k| k.to_string()),
    }))
}

pub fn upsilon_fibers(alpha: &Rational, beta: &Rational) -> Result<Value> {
    let pair = LegendrePair::new(alpha.clone(), beta.clone())?;
    let f = upsilon2_fiber_cases(&pair)?;
    let mut counts = f.finite.clone();
    *counts.entry(f.infinity).or_insert(0) += 1;
    Ok(json!({
        "case": f.case.tag(),
        "consistent": f.consistent,
        "counts": type_counts(counts.iter().map(|(k, c)| (k, *c))),
        "euler_sum": f.euler_sum(),
        "fibration": "upsilon2",
        "infinity": f.infinity.to_string(),
        "j1": rational(&f.j1),
        "j2": rational(&f.j2),
        "profile": f.profile,
    }))
}

/// Coefficient matching for one pair together with its certificates.
/// Degenerate pairs go through the multiplicity comparison instead and
/// carry a warning.
pub fn match_report(alpha: &Rational, beta: &Rational, verify_all: bool) -> Result<(Value, bool)> {
    let pair = LegendrePair::new(alpha.clone(), beta.clone())?;
    let inv = invariants_consistency(&pair)?;
    let (m, degenerate) = match build_match(&pair, MatchCase::A) {
        Ok(m) => (m, false),
        Err(Error::DegenerateMatch) => (build_match_any(&pair, MatchCase::A), true),
        Err(e) => return Err(e),
    };
    let mut certs = serde_json::Map::new();
    certs.insert("invariants".into(), Value::Bool(inv.holds()));
    let mut ok = inv.holds();
    if degenerate {
        let mc = verify_multiplicities(&m, &pair)?;
        certs.insert("multiplicities".into(), Value::Bool(mc.holds()));
        ok &= mc.holds();
    } else {
        let case = verify_case_identity(&m, &pair).holds;
        let fm = verify_functional_match(&m, &pair)?;
        certs.insert("case_identity".into(), Value::Bool(case));
        certs.insert("functional_match".into(), Value::Bool(fm.holds));
        certs.insert("q_branch".into(), Value::Bool(q_branch_holds(&pair, &m)));
        ok &= case && fm.holds;
        if verify_all {
            let mb = build_match(&pair, MatchCase::B)?;
            let case_b = verify_case_identity(&mb, &pair).holds && verify_functional_match(&mb, &pair)?.holds;
            certs.insert("case_b".into(), Value::Bool(case_b));
            let mc = verify_multiplicities(&m, &pair)?;
            certs.insert("multiplicities".into(), Value::Bool(mc.holds()));
            ok &= case_b && mc.holds();
        }
    }
    let mut out = json!({
        "a": cubic(&m.a),
        "a_cubed": rational(&m.a_cubed()),
        "b": rational(&m.b),
        "branch": if m.q_rational().is_some() { "rational" } else { "quotient_ring" },
        "case": m.case.to_string(),
        "certificates": Value::Object(certs),
        "degenerate": degenerate,
        "p": rational(&m.p),
        "pi": rational(&inv.pi),
        "q": cubic(&m.q),
        "q_cubed": rational(&m.q_cubed),
        "sigma": rational(&inv.sigma),
    });
    if let Some(a) = m.a_rational() {
        out["a"] = rational(&a);
    }
    if degenerate {
        out["warning"] = Value::String("D(mu) has a repeated root; compared multiplicity profiles instead of coefficients".into());
    }
    Ok((out, ok))
}

pub fn complex(z: &BigComplex) -> Value {
    Value::String(z.to_wire())
}

pub fn modj(tau: &BigComplex, prec: usize) -> Result<Value> {
    let j = modular_j(tau, prec)?;
    Ok(json!({ "j": complex(&j), "precision": prec, "tau": complex(&tau.with_precision(prec)) }))
}

pub fn periods(tau: &BigComplex, u: &BigComplex, prec: usize) -> Result<(Value, bool)> {
    let pt = PeriodPoint::new(tau.with_precision(prec), u.with_precision(prec))?;
    let (s, p) = sigma_pi_from_periods(&pt, prec)?;
    let c = period_vector_checks(&pt);
    let ok = c.holds(prec);
    Ok((
        json!({
            "certificate": {
                "holds": ok,
                "omega_omega_bar": complex(&c.omega_omega_bar),
                "positive": c.positive,
                "riemann_bits": bits_below(c.omega_omega.log2_abs()).min(prec as i64),
                "symbolic_zero": c.symbolic_zero,
            },
            "pi": complex(&p),
            "precision": prec,
            "sigma": complex(&s),
        }),
        ok,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn invariants_examples() {
        assert_eq!(invariants(&rat(1, 1), &rat(0, 1)), json!({"pi":"1","sigma":"2","j1":"1","j2":"1"}));
        assert_eq!(invariants(&rat(0, 1), &rat(1, 1)), json!({"pi":"0","sigma":"0","j1":"0","j2":"0"}));
        let v = invariants(&rat(4, 1), &rat(7, 1));
        assert_eq!((v["pi"].as_str(), v["sigma"].as_str()), (Some("64"), Some("16")));
        // σ² = 4π here, so the pair collapses to the double value 8
        assert_eq!((v["j1"].as_str(), v["j2"].as_str()), (Some("8"), Some("8")));
        assert!(invariants(&rat(2, 1), &rat(3, 1))["j1"].is_object());
    }

    #[test]
    fn match_examples() {
        let (v, ok) = match_report(&rat(2, 1), &rat(3, 1), false).unwrap();
        assert!(ok);
        assert_eq!(v["p"], "2/3");
        assert_eq!(v["q_cubed"], "-1/9");
        assert_eq!(v["b"], "0");
        let (v, ok) = match_report(&rat(2, 1), &rat(1, 2), false).unwrap();
        assert!(ok);
        assert_eq!((v["branch"].as_str(), v["a"].as_str(), v["b"].as_str()), (Some("rational"), Some("1"), Some("0")));
        let (v, ok) = match_report(&rat(2, 1), &rat(2, 1), false).unwrap();
        assert!(ok);
        assert_eq!(v["degenerate"], true);
    }

    #[test]
    fn fiber_examples() {
        let v = inose_fibers("theta2", &rat(0, 1), &rat(0, 1)).unwrap();
        assert_eq!(v["counts"], json!({"I1": 6, "I*12": 1}));
        assert_eq!(v["euler_sum"], 24);
        let v = inose_fibers("psi2", &rat(1, 1), &rat(0, 1)).unwrap();
        assert_eq!(v["counts"], json!({"I2": 2, "I4": 2, "I*6": 1}));
        let v = upsilon_fibers(&rat(2, 1), &rat(3, 1)).unwrap();
        assert_eq!(v["case"], "(a)");
        assert_eq!(v["counts"]["I2"], 6);
    }
}
