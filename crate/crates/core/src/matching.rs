//! Coefficient matching between Ψ₂ on the Inose side and Υ₂ on the Kummer
//! side: the affine change Ξ(λ) = qλ + p, the parameters (a, b) it forces,
//! and exact certificates for the resulting identities.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    rat, squarefree_decompose, CubicExtElement, Field, Poly, Polynomial, Rational, RationalFunction, Ring,
};
use crate::kummer::{legendre_j, upsilon2_data, upsilon2_functional_invariant, LegendrePair};
use crate::weierstrass::weierstrass_discriminant;

/// Which cubic factor of D is bound to P − 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatchCase {
    /// q³(P − 1) = 4D₁(qλ + p), q³(P + 1) = 4D₂(qλ + p)
    A,
    /// q³(P − 1) = 4D₂(qλ + p), q³(P + 1) = 4D₁(qλ + p)
    B,
}

impl fmt::Display for MatchCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatchCase::A => "A",
            MatchCase::B => "B",
        })
    }
}

/// Ξ(λ) = qλ + p with q living in ℚ[q]/(q³ − q_cubed).
#[derive(Clone, Debug, PartialEq)]
pub struct AffineMatch {
    pub p: Rational,
    pub q_cubed: Rational,
    pub q: CubicExtElement,
    pub case: MatchCase,
    pub a: CubicExtElement,
    pub b: Rational,
    /// D(μ) has a repeated root
    pub degenerate: bool,
}

impl AffineMatch {
    pub fn a_cubed(&self) -> Rational {
        let a3 = self.a.pow(3);
        a3.as_rational().expect("a³ is rational by construction")
    }

    /// Rational cube root of q³ when the quotient ring splits.
    pub fn q_rational(&self) -> Option<Rational> {
        self.q.rational_generator()
    }

    /// a as a rational number on the split branch, or when a ∈ ℚ already.
    pub fn a_rational(&self) -> Option<Rational> {
        self.a.as_rational().or_else(|| self.q_rational().map(|q0| self.a.specialize(&q0)))
    }

    /// ℚ-coefficient polynomial image of a ring polynomial under the split branch.
    fn specialize_poly(&self, f: &Poly<CubicExtElement>) -> Option<Polynomial> {
        let q0 = self.q_rational()?;
        Some(Poly::new(f.coeffs().iter().map(|c| c.specialize(&q0)).collect()))
    }

    /// Ξ as a polynomial over the quotient ring.
    pub fn xi(&self) -> Poly<CubicExtElement> {
        Poly::affine(self.q.clone(), self.q.embed(&self.p))
    }
}

fn elementary<F: Field>(roots: &[F; 3]) -> (F, F, F) {
    let e1 = roots[0].plus(&roots[1]).plus(&roots[2]);
    let e2 = roots[0].times(&roots[1]).plus(&roots[0].times(&roots[2])).plus(&roots[1].times(&roots[2]));
    let e3 = roots[0].times(&roots[1]).times(&roots[2]);
    (e1, e2, e3)
}

/// Solve the λ², λ¹, λ⁰ coefficient equations for one case.
fn solve(pair: &LegendrePair, case: MatchCase) -> AffineMatch {
    let ctx = upsilon2_data(pair);
    let (e1, e2, _) = elementary(&pair.d1_roots());
    let p = &e1 / rat(3, 1);
    // constant terms: q³(−b ∓ 1) = 4D_{1,2}(p), difference gives q³
    let d1p = ctx.d1.eval(&p);
    let d2p = ctx.d2.eval(&p);
    let (dm, dp) = match case {
        MatchCase::A => (&d1p, &d2p),
        MatchCase::B => (&d2p, &d1p),
    };
    let q_cubed = rat(-2, 1) * (dm - dp);
    let b = -(dm + dp) * rat(2, 1) / &q_cubed;
    // linear terms: −3a·q³ = 4q·(3p² − 2e₁p + e₂)
    let k = rat(4, 9) * (&e1 * &e1 - rat(3, 1) * &e2);
    let q = CubicExtElement::generator(&q_cubed);
    let a = q.times(&q.embed(&(&k / &q_cubed)));
    let degenerate = !ctx.d_poly.is_squarefree();
    AffineMatch { p, q_cubed, q, case, a, b, degenerate }
}

/// Match for a pair whose D(μ) has six distinct roots.
pub fn build_match(pair: &LegendrePair, case: MatchCase) -> Result<AffineMatch> {
    let m = solve(pair, case);
    if m.degenerate {
        return Err(Error::DegenerateMatch);
    }
    Ok(m)
}

/// Match for any valid pair; the `degenerate` flag tells which path applies.
pub fn build_match_any(pair: &LegendrePair, case: MatchCase) -> AffineMatch {
    solve(pair, case)
}

/// Outcome of comparing both sides of the two case identities.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseCertificate {
    pub holds: bool,
    /// q³(P − 1) − 4D(Ξ) for the factor bound to P − 1
    pub residual_minus: Poly<CubicExtElement>,
    /// q³(P + 1) − 4D(Ξ) for the factor bound to P + 1
    pub residual_plus: Poly<CubicExtElement>,
}

impl CaseCertificate {
    /// Highest λ-degree carrying a nonzero residual.
    pub fn residual_degree(&self) -> Option<usize> {
        self.residual_minus.degree().max(self.residual_plus.degree())
    }
}

/// P(λ) = 4λ³ − 3aλ − b over the quotient ring.
pub fn p_poly_ring(m: &AffineMatch) -> Poly<CubicExtElement> {
    let e = |r: Rational| m.q.embed(&r);
    Poly::new(vec![e(-&m.b), m.a.times(&e(rat(-3, 1))), e(Rational::zero()), e(rat(4, 1))])
}

fn lift(f: &Polynomial, like: &CubicExtElement) -> Poly<CubicExtElement> {
    f.map(|c| like.embed(c))
}

pub fn verify_case_identity(m: &AffineMatch, pair: &LegendrePair) -> CaseCertificate {
    let ctx = upsilon2_data(pair);
    let (dm, dp) = match m.case {
        MatchCase::A => (&ctx.d1, &ctx.d2),
        MatchCase::B => (&ctx.d2, &ctx.d1),
    };
    let q3 = m.q.pow(3);
    let one = Poly::constant(m.q.one_like());
    let p = p_poly_ring(m);
    let xi = m.xi();
    let four = m.q.embed(&rat(4, 1));
    let side = |shift: &Poly<CubicExtElement>, d: &Polynomial| {
        &shift.scale(&q3) - &lift(d, &m.q).compose(&xi).scale(&four)
    };
    let residual_minus = side(&(&p - &one), dm);
    let residual_plus = side(&(&p + &one), dp);
    CaseCertificate { holds: residual_minus.is_zero() && residual_plus.is_zero(), residual_minus, residual_plus }
}

/// Multiplicity profiles of q³(P ∓ 1) and 4D(Ξ) on the matched factors.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiplicityCertificate {
    pub inose_minus: Vec<u32>,
    pub kummer_minus: Vec<u32>,
    pub inose_plus: Vec<u32>,
    pub kummer_plus: Vec<u32>,
}

impl MultiplicityCertificate {
    pub fn holds(&self) -> bool {
        self.inose_minus == self.kummer_minus && self.inose_plus == self.kummer_plus
    }
}

fn profile(m: &AffineMatch, f: &Poly<CubicExtElement>) -> Result<Vec<u32>> {
    Ok(match m.specialize_poly(f) {
        Some(r) => squarefree_decompose(&r)?.multiplicity_profile(),
        None => squarefree_decompose(f)?.multiplicity_profile(),
    })
}

/// Root-structure comparison used for degenerate pairs.
pub fn verify_multiplicities(m: &AffineMatch, pair: &LegendrePair) -> Result<MultiplicityCertificate> {
    let ctx = upsilon2_data(pair);
    let (dm, dp) = match m.case {
        MatchCase::A => (&ctx.d1, &ctx.d2),
        MatchCase::B => (&ctx.d2, &ctx.d1),
    };
    let q3 = m.q.pow(3);
    let one = Poly::constant(m.q.one_like());
    let p = p_poly_ring(m);
    let xi = m.xi();
    let four = m.q.embed(&rat(4, 1));
    let k = |d: &Polynomial| lift(d, &m.q).compose(&xi).scale(&four);
    Ok(MultiplicityCertificate {
        inose_minus: profile(m, &(&p - &one).scale(&q3))?,
        kummer_minus: profile(m, &k(dm))?,
        inose_plus: profile(m, &(&p + &one).scale(&q3))?,
        kummer_plus: profile(m, &k(dp))?,
    })
}

/// Outcome of 𝒥_Ψ₂(λ) = 𝒥_Υ₂(Ξ(λ)).
#[derive(Clone, Debug, PartialEq)]
pub struct FunctionalMatch {
    pub holds: bool,
    /// true when checked as an identity of rational functions over ℚ
    pub rational_branch: bool,
    /// sample points checked on the quotient-ring branch
    pub samples: usize,
}

/// 4g₂³ and Δ of Ψ₂ for a P over any ring.
fn psi2_j_parts<R: Ring>(p: &Poly<R>, like: &R) -> (Poly<R>, Poly<R>) {
    let e = |r: Rational| Poly::constant(like.embed(&r));
    let p2 = p * p;
    let g2 = -&(&(&p2 * &e(rat(1, 3))) + &e(rat(1, 1)));
    let g3 = &(&(&p2 * p) * &e(rat(2, 27))) - &(p * &e(rat(2, 3)));
    let num = &g2.pow(3) * &e(rat(4, 1));
    (num, weierstrass_discriminant(&g2, &g3))
}

pub fn verify_functional_match(m: &AffineMatch, pair: &LegendrePair) -> Result<FunctionalMatch> {
    let ju = upsilon2_functional_invariant(pair)?;
    if let (Some(a), Some(q)) = (m.a_rational(), m.q_rational()) {
        let p = Polynomial::new(vec![-&m.b, a * rat(-3, 1), Rational::zero(), rat(4, 1)]);
        let (n, d) = psi2_j_parts(&p, &Rational::one());
        let jpsi = RationalFunction::new(n, d)?;
        let composed = ju.compose_poly(&Polynomial::affine(q, m.p.clone()))?;
        return Ok(FunctionalMatch {
            holds: crate::exact::rational_function_equal(&jpsi, &composed),
            rational_branch: true,
            samples: 0,
        });
    }
    // 𝒥_Ψ₂ = 4g₂³/Δ from P(λ) against 𝒥_Υ₂ = 4(D + c²)³/(27c²D²) with
    // D = D₁(Ξ)·D₂(Ξ), cross-multiplied over the quotient ring
    let ctx = upsilon2_data(pair);
    let c = pair.gap();
    let c2 = Poly::constant(m.q.embed(&(&c * &c)));
    let (num1, den1) = psi2_j_parts(&p_poly_ring(m), &m.q);
    let xi = m.xi();
    let dx = &lift(&ctx.d1, &m.q).compose(&xi) * &lift(&ctx.d2, &m.q).compose(&xi);
    let num2 = (&dx + &c2).pow(3).scale(&m.q.embed(&rat(4, 1)));
    let den2 = (&(&dx * &dx) * &c2).scale(&m.q.embed(&rat(27, 1)));
    // both sides have degree at most n, so agreement at n + 1 points is an
    // identity; evaluating avoids expanding the products over the ring
    let deg = |p: &Poly<CubicExtElement>| p.degree().unwrap_or(0);
    let n = (deg(&num1) + deg(&den2)).max(deg(&num2) + deg(&den1));
    let samples = n + 1;
    let mut holds = true;
    for k in 0..samples {
        let lam = m.q.embed(&rat(k as i64 - (samples as i64) / 2, 1));
        holds &= num1.eval(&lam).times(&den2.eval(&lam)) == num2.eval(&lam).times(&den1.eval(&lam));
    }
    Ok(FunctionalMatch { holds, rational_branch: false, samples })
}

/// σ = J₁ + J₂ = a³ − b² + 1 and π = J₁J₂ = a³, with both sides recorded.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantsCertificate {
    pub j1: Rational,
    pub j2: Rational,
    pub sigma: Rational,
    pub pi: Rational,
    pub a_cubed: Rational,
    pub b_squared: Rational,
    pub sigma_ok: bool,
    pub pi_ok: bool,
    /// b² = (J₁ − 1)(J₂ − 1)
    pub b_ok: bool,
}

impl InvariantsCertificate {
    pub fn holds(&self) -> bool {
        self.sigma_ok && self.pi_ok && self.b_ok
    }
}

pub fn invariants_consistency(pair: &LegendrePair) -> Result<InvariantsCertificate> {
    let j1 = legendre_j(&pair.alpha)?;
    let j2 = legendre_j(&pair.beta)?;
    let m = build_match_any(pair, MatchCase::A);
    let a_cubed = m.a_cubed();
    let b_squared = &m.b * &m.b;
    let sigma = &j1 + &j2;
    let pi = &j1 * &j2;
    let one = Rational::one();
    Ok(InvariantsCertificate {
        sigma_ok: sigma == &a_cubed - &b_squared + &one,
        pi_ok: pi == a_cubed,
        b_ok: b_squared == (&j1 - &one) * (&j2 - &one),
        j1,
        j2,
        sigma,
        pi,
        a_cubed,
        b_squared,
    })
}

/// Closed forms as usually printed, for comparison with the solved values.
#[derive(Clone, Debug, PartialEq)]
pub struct PrintedForms {
    pub p: Rational,
    pub q_cubed: Rational,
    /// (α−2)(α+1)(2α−1)(β−2)(β+1)(2β−1) / (27α(α−1)β(β−1)), up to sign
    pub b_abs: Rational,
    /// 4(α²−α+1)(β²−β+1)/(9α²β²)·q⁻²
    pub a: CubicExtElement,
    /// the constant k in q = ±k
    pub q_printed: Rational,
}

fn s(x: &Rational) -> Rational {
    x * x - x + Rational::one()
}

pub fn printed_forms(pair: &LegendrePair, m: &AffineMatch) -> PrintedForms {
    let (a, b) = (&pair.alpha, &pair.beta);
    let one = Rational::one();
    let two = rat(2, 1);
    let ab = a * b;
    let n = (a - &one) * (b - &one);
    let p = (a + &one) * (b + &one) / (rat(3, 1) * &ab);
    let q_cubed = -(&two * &n) / (&ab * &ab);
    let b_abs = (a - &two) * (a + &one) * (&two * a - &one) * (b - &two) * (b + &one) * (&two * b - &one)
        / (rat(27, 1) * a * (a - &one) * b * (b - &one));
    let k = rat(4, 9) * s(a) * s(b) / (&ab * &ab);
    let q2_inv = m.q.inverse().unwrap().pow(2);
    let a_printed = q2_inv.times(&m.q.embed(&k));
    let q_printed = rat(-9, 1) * &n / (&two * s(a) * s(b));
    PrintedForms { p, q_cubed, b_abs, a: a_printed, q_printed }
}

/// Relation between q and a found by matching:
/// q = ∓9(α−1)(β−1)·a / (2(α²−α+1)(β²−β+1)), upper sign for case A.
pub fn q_branch_factor(pair: &LegendrePair, case: MatchCase) -> Rational {
    let (a, b) = (&pair.alpha, &pair.beta);
    let n = (a - Rational::one()) * (b - Rational::one());
    let k = rat(-9, 1) * n / (rat(2, 1) * s(a) * s(b));
    match case {
        MatchCase::A => k,
        MatchCase::B => -k,
    }
}

/// q = k·a holds in the quotient ring.
pub fn q_branch_holds(pair: &LegendrePair, m: &AffineMatch) -> bool {
    let k = q_branch_factor(pair, m.case);
    m.q == m.a.times(&m.q.embed(&k))
}

/// q = ±k (no factor a) holds, i.e. q is rational and equals ±k.
pub fn q_printed_holds(pair: &LegendrePair, m: &AffineMatch) -> bool {
    let k = printed_forms(pair, m).q_printed;
    m.q == m.q.embed(&k) || m.q == m.q.embed(&-k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: Rational, b: Rational) -> LegendrePair {
        LegendrePair::new(a, b).unwrap()
    }

    #[test]
    fn two_three() {
        let pr = pair(rat(2, 1), rat(3, 1));
        let m = build_match(&pr, MatchCase::A).unwrap();
        assert_eq!(m.p, rat(2, 3));
        assert_eq!(m.q_cubed, rat(-1, 9));
        assert_eq!(m.b, rat(0, 1));
        assert_eq!(m.a_cubed(), rat(343, 243));
        assert!(verify_case_identity(&m, &pr).holds);
        let f = verify_functional_match(&m, &pr).unwrap();
        assert!(f.holds && !f.rational_branch && f.samples >= 25);
        let c = invariants_consistency(&pr).unwrap();
        assert!(c.holds());
        assert_eq!(c.sigma, rat(586, 243));
    }

    #[test]
    fn case_b_and_signs() {
        let pr = pair(rat(5, 1), rat(-2, 3));
        let a = build_match(&pr, MatchCase::A).unwrap();
        let b = build_match(&pr, MatchCase::B).unwrap();
        assert_eq!(b.q_cubed, -&a.q_cubed);
        assert_eq!(b.b, -&a.b);
        assert!(verify_case_identity(&b, &pr).holds);
        assert!(verify_functional_match(&b, &pr).unwrap().holds);
        let pf = printed_forms(&pr, &a);
        assert_eq!(pf.p, a.p);
        assert_eq!(pf.q_cubed, a.q_cubed);
        assert_eq!(pf.b_abs, -&a.b);
        assert_eq!(pf.a, a.a);
        assert!(q_branch_holds(&pr, &a) && q_branch_holds(&pr, &b));
        assert!(!q_printed_holds(&pr, &a));
    }

    #[test]
    fn wrong_p_leaves_quadratic_residual() {
        let pr = pair(rat(2, 1), rat(3, 1));
        let mut m = build_match(&pr, MatchCase::A).unwrap();
        m.p = rat(1, 2);
        let cert = verify_case_identity(&m, &pr);
        assert!(!cert.holds);
        assert_eq!(cert.residual_degree(), Some(2));
    }

    #[test]
    fn degenerate_pairs() {
        let pr = pair(rat(2, 1), rat(1, 2));
        assert!(matches!(build_match(&pr, MatchCase::A), Err(Error::DegenerateMatch)));
        let m = build_match_any(&pr, MatchCase::A);
        assert_eq!((m.a_rational(), m.b.clone()), (Some(rat(1, 1)), rat(0, 1)));
        let f = verify_functional_match(&m, &pr).unwrap();
        assert!(f.holds && f.rational_branch);
        assert!(verify_multiplicities(&m, &pr).unwrap().holds());

        let pr = pair(rat(3, 1), rat(1, 3));
        let a = build_match_any(&pr, MatchCase::A);
        assert!(a.degenerate && verify_case_identity(&a, &pr).holds);
        assert!(verify_multiplicities(&a, &pr).unwrap().holds());
        let mut swapped = a.clone();
        swapped.case = MatchCase::B;
        assert!(!verify_case_identity(&swapped, &pr).holds);

        let c = invariants_consistency(&pair(rat(-1, 1), rat(-1, 1))).unwrap();
        assert!(c.holds());
        assert_eq!((c.sigma, c.pi), (rat(2, 1), rat(1, 1)));
        let pr = pair(rat(2, 1), rat(2, 1));
        let m = build_match_any(&pr, MatchCase::A);
        assert!(m.degenerate && verify_multiplicities(&m, &pr).unwrap().holds());
    }

    #[test]
    fn mismatched_parameters_fail() {
        let pr = pair(rat(4, 1), rat(7, 1));
        let mut m = build_match(&pr, MatchCase::A).unwrap();
        m.b = &m.b + rat(1, 1);
        assert!(!verify_functional_match(&m, &pr).unwrap().holds);
    }
}
