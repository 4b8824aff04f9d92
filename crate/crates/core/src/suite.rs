//! The verification battery: one check per acceptance criterion, each
//! returning a pass flag and a short detail line.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::bigcomplex::bf_to_rational;
use crate::exact::{rat, rational_function_equal, BigComplex, Polynomial, QuadExtElement, Rational};
use crate::inose::{
    from_j_pair, j_pair, modular_invariants, psi2_weierstrass, theta2_fiber_case, theta2_weierstrass, FiberCase, InoseContext,
};
use crate::kummer::{cross_ratio_poly, j_of_cross_ratio, legendre_j, upsilon2_data, upsilon2_fiber_cases, upsilon2_functional_invariant, LegendrePair, UpsilonCase};
use crate::lattice::{self, config, discriminant_form, named_lattice, roots, unimodular_type};
use crate::matching::{build_match, verify_case_identity, verify_functional_match, MatchCase};
use crate::modular::{modular_j, period_vector_checks, sigma_pi_from_periods, PeriodPoint};
use crate::reconcile::reconciliation_report;
use crate::weierstrass::{euler_sum, finite_type_counts, infinity_type, KodairaType};

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub invariant_samples: usize,
    /// bound on numerators and denominators for criterion 1
    pub invariant_height: i64,
    pub discriminant_samples: usize,
    pub match_samples: usize,
    pub match_height: i64,
    pub upsilon_samples: usize,
    pub upsilon_height: i64,
    pub precision: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 20240601,
            invariant_samples: 500,
            invariant_height: 1_000_000,
            discriminant_samples: 100,
            match_samples: 50,
            match_height: 40,
            upsilon_samples: 50,
            upsilon_height: 1000,
            precision: 128,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!("criterion {} [{}] {}: {} ({} ms)", self.id, if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail, self.millis)
    }

    /// Timing is left out so the output is reproducible.
    pub fn to_json(&self) -> serde_json::Value {
        json!({ "id": self.id, "name": self.name, "passed": self.passed, "detail": self.detail })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub results: Vec<CriterionResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "criteria": self.results.iter().map(|r| r.to_json()).collect::<Vec<_>>(), "passed": self.passed() })
    }
}

pub fn random_rational(rng: &mut impl Rng, height: i64) -> Rational {
    let n = rng.gen_range(-height..=height);
    let d = rng.gen_range(1..=height);
    rat(n, d)
}

fn rng_for(opts: &SuiteOptions, id: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(opts.seed.wrapping_mul(31).wrapping_add(id))
}

fn timed(id: u8, name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) -> CriterionResult {
    let t = Instant::now();
    let (passed, detail) = match f() {
        Ok(v) => v,
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionResult { id, name, passed, detail, millis: t.elapsed().as_millis() }
}

/// 1: σ = a³ − b² + 1, π = a³, and the J-pair has sum σ and product π.
pub fn criterion_invariants(opts: &SuiteOptions) -> CriterionResult {
    timed(1, "modular invariants and J-pair", || {
        let mut rng = rng_for(opts, 1);
        let mut bad = 0;
        for _ in 0..opts.invariant_samples {
            let a = random_rational(&mut rng, opts.invariant_height);
            let b = random_rational(&mut rng, opts.invariant_height);
            let ctx = InoseContext::from_ab(a.clone(), b.clone());
            let inv = modular_invariants(&ctx);
            let a3 = &a * &a * &a;
            let ok_inv = inv.pi == a3 && inv.sigma == &a3 - &b * &b + Rational::one();
            let jp = j_pair(&ctx);
            let ok_pair = jp.sum() == QuadExtElement::rational(inv.sigma.clone()) && jp.product() == QuadExtElement::rational(inv.pi.clone());
            if !(ok_inv && ok_pair) {
                bad += 1;
            }
        }
        Ok((bad == 0, format!("{} samples, {} failures", opts.invariant_samples, bad)))
    })
}

/// 2: Δ_Θ₂ = 4(1 − P²) and Δ_Ψ₂ = −4(P² − 1)².
pub fn criterion_discriminants(opts: &SuiteOptions) -> CriterionResult {
    timed(2, "discriminant identities", || {
        let mut rng = rng_for(opts, 2);
        let mut bad = 0;
        let one = Polynomial::from_ints(&[1]);
        for _ in 0..opts.discriminant_samples {
            let ctx = InoseContext::from_ab(random_rational(&mut rng, 1000), random_rational(&mut rng, 1000));
            let p2 = &ctx.p_poly * &ctx.p_poly;
            let th = theta2_weierstrass(&ctx).discriminant()? == (&one - &p2).scale(&rat(4, 1));
            let ps = psi2_weierstrass(&ctx).discriminant()? == (&p2 - &one).pow(2).scale(&rat(-4, 1));
            if !(th && ps) {
                bad += 1;
            }
        }
        Ok((bad == 0, format!("{} samples, {} failures", opts.discriminant_samples, bad)))
    })
}

/// Instances for every Θ₂/Ψ₂ case, with the expected case.
pub fn fiber_case_instances() -> Vec<((i64, i64), FiberCase)> {
    vec![
        ((0, 0), FiberCase::Generic),
        ((2, 3), FiberCase::Generic),
        ((4, 7), FiberCase::TangentPlus),
        ((4, -9), FiberCase::TangentPlus),
        ((4, 9), FiberCase::TangentMinus),
        ((0, 1), FiberCase::A0Bpm1),
        ((0, -1), FiberCase::A0Bpm1),
        ((1, 0), FiberCase::A3One),
    ]
}

/// 3: every case reproduces its Kodaira multiset, Euler sum 24, and the
/// fibers at infinity are I*₁₂ (Θ₂) and I*₆ (Ψ₂).
pub fn criterion_fiber_cases(_opts: &SuiteOptions) -> CriterionResult {
    timed(3, "fiber case coverage", || {
        let mut failures = Vec::new();
        let instances = fiber_case_instances();
        for ((a, b), want) in &instances {
            let ctx = InoseContext::ints(*a, *b);
            let case = theta2_fiber_case(&ctx);
            let t = theta2_weierstrass(&ctx).full_fiber_table()?;
            let p = psi2_weierstrass(&ctx).full_fiber_table()?;
            let ok = case == *want
                && finite_type_counts(&t) == want.predicted_theta2()
                && finite_type_counts(&p) == want.predicted_psi2()
                && euler_sum(&t) == 24
                && euler_sum(&p) == 24
                && infinity_type(&t) == Some(KodairaType::IStar(12))
                && infinity_type(&p) == Some(KodairaType::IStar(6));
            if !ok {
                failures.push(format!("({a},{b})"));
            }
        }
        Ok((failures.is_empty(), format!("{} instances over 5 cases, failures: [{}]", instances.len(), failures.join(", "))))
    })
}

/// Random (α, β) away from 0, 1 for which D has six distinct roots.
pub fn random_nondegenerate_pairs(rng: &mut impl Rng, n: usize, height: i64) -> Vec<LegendrePair> {
    let mut out = Vec::new();
    while out.len() < n {
        let a = random_rational(rng, height);
        let b = random_rational(rng, height);
        let Ok(pair) = LegendrePair::new(a, b) else { continue };
        if upsilon2_data(&pair).d_poly.is_squarefree() {
            out.push(pair);
        }
    }
    out
}

/// 4: coefficient matching over ℚ[q]/(q³ − c) and the functional match.
pub fn criterion_matching(opts: &SuiteOptions) -> CriterionResult {
    timed(4, "Psi2/Upsilon2 coefficient matching", || {
        let mut rng = rng_for(opts, 4);
        let pairs = random_nondegenerate_pairs(&mut rng, opts.match_samples, opts.match_height);
        let (mut bad, mut rational_branch) = (0, 0);
        for pair in &pairs {
            let (al, be) = (&pair.alpha, &pair.beta);
            let one = Rational::one();
            let m = build_match(pair, MatchCase::A)?;
            let j1 = legendre_j(al)?;
            let j2 = legendre_j(be)?;
            let p_ok = m.p == (al + &one) * (be + &one) / (rat(3, 1) * al * be);
            let q3_ok = m.q_cubed == rat(-2, 1) * (al - &one) * (be - &one) / (al * al * be * be);
            let b_ok = &m.b * &m.b == (&j1 - &one) * (&j2 - &one);
            let a_ok = m.a_cubed() == &j1 * &j2;
            let case_ok = verify_case_identity(&m, pair).holds;
            let fm = verify_functional_match(&m, pair)?;
            if fm.rational_branch {
                rational_branch += 1;
            }
            if !(p_ok && q3_ok && b_ok && a_ok && case_ok && fm.holds) {
                bad += 1;
            }
        }
        Ok((
            bad == 0,
            format!("{} pairs ({} rational branch, {} quotient ring), {} failures", pairs.len(), rational_branch, pairs.len() - rational_branch, bad),
        ))
    })
}

/// Υ₂ case instances (a)–(c) over ℚ; (d) needs ω = ½ + ½√−3.
pub fn upsilon_case_instances() -> Vec<((Rational, Rational), UpsilonCase)> {
    vec![
        ((rat(2, 1), rat(3, 1)), UpsilonCase::A),
        ((rat(3, 1), rat(1, 3)), UpsilonCase::B),
        ((rat(2, 1), rat(1, 2)), UpsilonCase::C),
    ]
}

/// 5: J_Υ₂ closed form against the cross-ratio composition, Σ_Υ₂ against the
/// roots of D, and the four case structures.
pub fn criterion_upsilon(opts: &SuiteOptions) -> CriterionResult {
    timed(5, "Upsilon2 functional invariant and cases", || {
        let mut rng = rng_for(opts, 5);
        let mut bad = 0;
        let mut n = 0;
        while n < opts.upsilon_samples {
            let Ok(pair) = LegendrePair::new(random_rational(&mut rng, opts.upsilon_height), random_rational(&mut rng, opts.upsilon_height)) else {
                continue;
            };
            n += 1;
            let derived = upsilon2_functional_invariant(&pair)?;
            let composed = j_of_cross_ratio(&cross_ratio_poly(&pair))?;
            let ctx = upsilon2_data(&pair);
            let mut prod = Polynomial::from_ints(&[1]);
            for (s, k) in &ctx.sigma_upsilon {
                prod = &prod * &Polynomial::new(vec![-s.clone(), Rational::one()]).pow(*k);
            }
            if !(rational_function_equal(&derived, &composed) && prod == ctx.d_poly) {
                bad += 1;
            }
        }
        let mut case_fail = Vec::new();
        for ((a, b), want) in upsilon_case_instances() {
            let f = upsilon2_fiber_cases(&LegendrePair::new(a, b)?)?;
            if !(f.case == want && f.profile == want.predicted_profile() && f.consistent && f.euler_sum() == 24) {
                case_fail.push(want.tag());
            }
        }
        let w = QuadExtElement::new(rat(1, 2), rat(1, 2), rat(-3, 1));
        let f = upsilon2_fiber_cases(&LegendrePair::new(w.clone(), w)?)?;
        if !(f.case == UpsilonCase::D && f.profile == UpsilonCase::D.predicted_profile() && f.consistent && f.euler_sum() == 24) {
            case_fail.push(UpsilonCase::D.tag());
        }
        Ok((
            bad == 0 && case_fail.is_empty(),
            format!("{} pairs, {} failures; cases (a)-(d) failures: [{}]", n, bad, case_fail.join(", ")),
        ))
    })
}

/// 6: discriminant forms, unimodularity, the E8/E8/H spans, fiber squares,
/// and the 240 roots of E8.
pub fn criterion_lattice(_opts: &SuiteOptions) -> CriterionResult {
    timed(6, "lattice claims", || {
        let mut notes = Vec::new();
        let target = discriminant_form(&named_lattice("H2_cubed")?)?;
        let mut ok = true;
        for name in ["Kummer", "Nikulin"] {
            let f = discriminant_form(&named_lattice(name)?)?;
            let good = f.invariant_factors == vec![2; 6] && f.is_isomorphic(&target)?;
            ok &= good;
            notes.push(format!("{name} form {}", if good { "matches" } else { "differs" }));
        }
        let e8 = named_lattice("E8")?.det();
        let d16 = named_lattice("D16plus")?.det();
        ok &= e8 == BigInt::one() && d16 == BigInt::one();
        notes.push(format!("det E8 = {e8}, det D16plus = {d16}"));

        let (cfg, spans) = config::quartic_spans()?;
        let types: Vec<&str> =
            spans.iter().map(|s| cfg.span_gram(s).map(|g| unimodular_type(&g).unwrap_or("not unimodular"))).collect::<Result<_>>()?;
        let mut orth = true;
        for x in 0..3 {
            for y in x + 1..3 {
                for u in &spans[x] {
                    for v in &spans[y] {
                        orth &= cfg.intersect(u, v)? == 0;
                    }
                }
            }
        }
        ok &= orth && types == ["E8", "E8", "H"];
        notes.push(format!("spans {}, orthogonal {orth}", types.join("/")));

        let mut squares = Vec::new();
        for (cfg_name, terms) in [
            ("double_kummer_pencil", config::special_pencil_terms()),
            ("inose_diag11", config::i12_star_terms()),
            ("quotient_diag22_33", vec![("R1", 2), ("R2", 4), ("R3", 6), ("R4", 3), ("R5", 5), ("R6", 4), ("R7", 3), ("R8", 2), ("R9", 1)]),
        ] {
            let c = lattice::curve_config(cfg_name)?;
            squares.push(lattice::divisor_square(&c, &c.class(&terms)?)?);
        }
        ok &= squares.iter().all(|s| *s == 0);
        notes.push(format!("divisor squares {squares:?}"));
        for f in lattice::shipped_fiber_divisors() {
            ok &= f.square()? == 0 && f.section_degree()? == 1;
        }

        let r = roots(&named_lattice("E8")?)?;
        ok &= r.len() == 240;
        notes.push(format!("E8 roots {}", r.len()));
        Ok((ok, notes.join("; ")))
    })
}

/// 7: J(i) = 1, J(ρ) = 0, and (τ, u) = (i, i) leading back to (a, b) = (1, 0).
pub fn criterion_modular(opts: &SuiteOptions) -> CriterionResult {
    timed(7, "numeric modular layer", || {
        let p = opts.precision;
        let tol = -100.0;
        let ji = modular_j(&BigComplex::i(p), p)?;
        let e_i = ji.log2_dist(&BigComplex::one(p));
        let rho = BigComplex::parse("-1/2,0", p + 32)
            .ok_or_else(|| Error::Parse("rho".into()))?
            .add(&BigComplex::from_rational(&rat(3, 4), p + 32).sqrt().mul(&BigComplex::i(p + 32)))
            .with_precision(p);
        let jr = modular_j(&rho, p)?;
        let e_r = jr.log2_abs();
        let pt = PeriodPoint::new(BigComplex::i(p), BigComplex::i(p))?;
        let (s, pi) = sigma_pi_from_periods(&pt, p)?;
        let e_s = s.log2_dist(&BigComplex::from_f64(2.0, 0.0, p));
        let e_p = pi.log2_dist(&BigComplex::one(p));
        // round to the nearest rationals and close the loop through the inverse map
        let round = |z: &BigComplex| bf_to_rational(z.re()).round();
        let (sr, pr) = (round(&s), round(&pi));
        let disc = &sr * &sr - rat(4, 1) * &pr;
        let (j1, j2) = if disc.is_zero() {
            let h = &sr / rat(2, 1);
            (QuadExtElement::rational(h.clone()), QuadExtElement::rational(h))
        } else {
            return Ok((false, "J-pair at (i, i) is not a double value".into()));
        };
        let pre = from_j_pair(&j1, &j2)?;
        let back = pre.rational_solutions.iter().any(|s| s.a == Rational::one() && s.b.is_zero());
        let hr = period_vector_checks(&pt).holds(p);
        let ok = e_i < tol && e_r < tol && e_s < tol && e_p < tol && back && hr;
        Ok((
            ok,
            format!(
                "log2|J(i)-1| = {e_i:.1}, log2|J(rho)| = {e_r:.1}, (sigma, pi) = ({}, {}), (a,b) = (1,0) recovered: {back}",
                crate::exact::fmt_rational(&sr),
                crate::exact::fmt_rational(&pr)
            ),
        ))
    })
}

/// 8: the reconciliation report.
pub fn criterion_reconcile(_opts: &SuiteOptions) -> CriterionResult {
    timed(8, "reconciliation report", || {
        let r = reconciliation_report()?;
        let summary: Vec<String> = r.items.iter().map(|i| format!("{}={}", i.name, i.status())).collect();
        Ok((r.passed(), summary.join(", ")))
    })
}

pub fn run_suite(opts: &SuiteOptions) -> SuiteReport {
    let checks: [fn(&SuiteOptions) -> CriterionResult; 8] = [
        criterion_invariants,
        criterion_discriminants,
        criterion_fiber_cases,
        criterion_matching,
        criterion_upsilon,
        criterion_lattice,
        criterion_modular,
        criterion_reconcile,
    ];
    let results = checks.iter().map(|f| f(opts)).collect();
    SuiteReport { results }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let opts = SuiteOptions {
            invariant_samples: 20,
            discriminant_samples: 5,
            match_samples: 3,
            match_height: 12,
            upsilon_samples: 4,
            upsilon_height: 50,
            ..SuiteOptions::default()
        };
        let r = run_suite(&opts);
        for c in &r.results {
            assert!(c.passed, "{}", c.line());
        }
    }
}
