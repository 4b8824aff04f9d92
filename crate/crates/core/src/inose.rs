//! The Inose quartic family X(a,b): Weierstrass data of the fibrations Θ₂ and
//! Ψ₂, modular invariants (π, σ) = (a³, a³ − b² + 1), the J-pair and its
//! inverse, and exact checks on the quartic model and its involution.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::Rng as _;

use crate::error::{Error, Result};
use crate::exact::mpoly::Exponents;
use crate::exact::rational::{rational_cbrt, rational_sqrt};
use crate::exact::{rat, BigComplex, MPoly, Poly, Polynomial, QuadExtElement, Rational, Ring};
use crate::weierstrass::{KodairaType, WeierstrassFibration};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InoseParams {
    pub a: Rational,
    pub b: Rational,
}

impl InoseParams {
    pub fn new(a: Rational, b: Rational) -> Self {
        InoseParams { a, b }
    }

    pub fn ints(a: i64, b: i64) -> Self {
        InoseParams::new(rat(a, 1), rat(b, 1))
    }
}

/// Parameters together with P(X) = 4X³ − 3aX − b.
#[derive(Clone, Debug, PartialEq)]
pub struct InoseContext {
    pub params: InoseParams,
    pub p_poly: Polynomial,
}

impl InoseContext {
    pub fn new(params: InoseParams) -> Self {
        let p_poly = Poly::new(vec![-&params.b, -&params.a * rat(3, 1), Rational::zero(), rat(4, 1)]);
        InoseContext { params, p_poly }
    }

    pub fn from_ab(a: Rational, b: Rational) -> Self {
        InoseContext::new(InoseParams::new(a, b))
    }

    pub fn ints(a: i64, b: i64) -> Self {
        InoseContext::new(InoseParams::ints(a, b))
    }

    pub fn a(&self) -> &Rational {
        &self.params.a
    }

    pub fn b(&self) -> &Rational {
        &self.params.b
    }

    pub fn p_at(&self, lambda: &Rational) -> Rational {
        self.p_poly.eval(lambda)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModularInvariants {
    pub pi: Rational,
    pub sigma: Rational,
}

pub fn modular_invariants(ctx: &InoseContext) -> ModularInvariants {
    let a3 = ctx.a() * ctx.a() * ctx.a();
    let sigma = &a3 - ctx.b() * ctx.b() + Rational::one();
    ModularInvariants { pi: a3, sigma }
}

/// Unordered pair of J-invariants, the roots of x² − σx + π.
#[derive(Clone, Debug, PartialEq)]
pub struct JPair {
    pub j1: QuadExtElement,
    pub j2: QuadExtElement,
}

impl JPair {
    pub fn sum(&self) -> QuadExtElement {
        self.j1.plus(&self.j2)
    }

    pub fn product(&self) -> QuadExtElement {
        self.j1.times(&self.j2)
    }
}

pub fn j_pair_from_invariants(inv: &ModularInvariants) -> JPair {
    let disc = &inv.sigma * &inv.sigma - rat(4, 1) * &inv.pi;
    let half_sigma = &inv.sigma * rat(1, 2);
    JPair {
        j1: QuadExtElement::new(half_sigma.clone(), rat(-1, 2), disc.clone()),
        j2: QuadExtElement::new(half_sigma, rat(1, 2), disc),
    }
}

pub fn j_pair(ctx: &InoseContext) -> JPair {
    j_pair_from_invariants(&modular_invariants(ctx))
}

/// All (a, b) with a³ = j1·j2 and b² = a³ + 1 − (j1 + j2).
#[derive(Clone, Debug, PartialEq)]
pub struct JPairPreimage {
    pub a_cubed: Rational,
    pub b_squared: Rational,
    /// rational cube root of a³ when it exists
    pub a_rational: Option<Rational>,
    /// rational square root of b² when it exists
    pub b_rational: Option<Rational>,
    /// every (a, b) with both coordinates rational
    pub rational_solutions: Vec<InoseParams>,
    /// number of distinct solutions over ℂ
    pub complex_count: usize,
}

pub fn from_j_pair(j1: &QuadExtElement, j2: &QuadExtElement) -> Result<JPairPreimage> {
    let s = j1.plus(j2).as_rational().ok_or_else(|| Error::Precondition("j1 + j2 must be rational".into()))?;
    let p = j1.times(j2).as_rational().ok_or_else(|| Error::Precondition("j1 * j2 must be rational".into()))?;
    Ok(from_invariants(&ModularInvariants { pi: p, sigma: s }))
}

pub fn from_invariants(inv: &ModularInvariants) -> JPairPreimage {
    let a_cubed = inv.pi.clone();
    let b_squared = &a_cubed + Rational::one() - &inv.sigma;
    let a_rational = rational_cbrt(&a_cubed);
    let b_rational = rational_sqrt(&b_squared);
    let mut rational_solutions = Vec::new();
    if let (Some(a), Some(b)) = (&a_rational, &b_rational) {
        rational_solutions.push(InoseParams::new(a.clone(), b.clone()));
        if !b.is_zero() {
            rational_solutions.push(InoseParams::new(a.clone(), -b));
        }
    }
    let na = if a_cubed.is_zero() { 1 } else { 3 };
    let nb = if b_squared.is_zero() { 1 } else { 2 };
    JPairPreimage { a_cubed, b_squared, a_rational, b_rational, rational_solutions, complex_count: na * nb }
}

pub fn theta2_weierstrass(ctx: &InoseContext) -> WeierstrassFibration {
    let p = &ctx.p_poly;
    let g2 = &Polynomial::from_ints(&[1]) - &p.pow(2).scale(&rat(4, 3));
    let g3 = &p.pow(3).scale(&rat(16, 27)) - &p.scale(&rat(2, 3));
    WeierstrassFibration::new(g2, g3).expect("theta2 model is elliptic")
}

pub fn psi2_weierstrass(ctx: &InoseContext) -> WeierstrassFibration {
    let p = &ctx.p_poly;
    let g2 = -&(&p.pow(2).scale(&rat(1, 3)) + &Polynomial::from_ints(&[1]));
    let g3 = &p.pow(3).scale(&rat(2, 27)) - &p.scale(&rat(2, 3));
    WeierstrassFibration::new(g2, g3).expect("psi2 model is elliptic")
}

/// The five configurations of P² − 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiberCase {
    Generic,
    /// a³ = (b + 1)² with a, b ≠ 0: P − 1 has a double root
    TangentPlus,
    /// a³ = (b − 1)² with a, b ≠ 0: P + 1 has a double root
    TangentMinus,
    /// a = 0, b = ±1
    A0Bpm1,
    /// a³ = 1, b = 0
    A3One,
}

impl FiberCase {
    pub fn tag(&self) -> &'static str {
        match self {
            FiberCase::Generic => "generic",
            FiberCase::TangentPlus => "tangent_plus",
            FiberCase::TangentMinus => "tangent_minus",
            FiberCase::A0Bpm1 => "a0_bpm1",
            FiberCase::A3One => "a3_1_b0",
        }
    }

    /// Finite Kodaira types predicted for Θ₂; Ψ₂ doubles every index.
    pub fn predicted_theta2(&self) -> BTreeMap<KodairaType, usize> {
        let v: &[(u32, usize)] = match self {
            FiberCase::Generic => &[(1, 6)],
            FiberCase::TangentPlus | FiberCase::TangentMinus => &[(2, 1), (1, 4)],
            FiberCase::A0Bpm1 => &[(3, 1), (1, 3)],
            FiberCase::A3One => &[(2, 2), (1, 2)],
        };
        v.iter().map(|&(n, c)| (KodairaType::I(n), c)).collect()
    }

    pub fn predicted_psi2(&self) -> BTreeMap<KodairaType, usize> {
        self.predicted_theta2()
            .into_iter()
            .map(|(k, c)| match k {
                KodairaType::I(n) => (KodairaType::I(2 * n), c),
                other => (other, c),
            })
            .collect()
    }
}

impl fmt::Display for FiberCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Purely arithmetic case detection (no root finding).
pub fn theta2_fiber_case(ctx: &InoseContext) -> FiberCase {
    let (a, b) = (ctx.a(), ctx.b());
    let a3 = a * a * a;
    let one = Rational::one();
    if a.is_zero() && (b == &one || b == &-&one) {
        return FiberCase::A0Bpm1;
    }
    if a3 == one && b.is_zero() {
        return FiberCase::A3One;
    }
    let bp = b + &one;
    let bm = b - &one;
    if a3 == &bp * &bp {
        FiberCase::TangentPlus
    } else if a3 == &bm * &bm {
        FiberCase::TangentMinus
    } else {
        FiberCase::Generic
    }
}

/// y²zw − 4x³z + 3axzw² − ½(z²w² + w⁴) + bzw³
pub fn inose_quartic(ctx: &InoseContext) -> MPoly {
    let t = |c: Rational, e: Exponents| MPoly::term(c, e);
    t(rat(1, 1), [0, 2, 1, 1])
        .add(&t(rat(-4, 1), [3, 0, 1, 0]))
        .add(&t(ctx.a() * rat(3, 1), [1, 0, 1, 2]))
        .add(&t(rat(-1, 2), [0, 0, 2, 2]))
        .add(&t(rat(-1, 2), [0, 0, 0, 4]))
        .add(&t(ctx.b().clone(), [0, 0, 1, 3]))
}

/// Fiber cubic at λ by substituting x = λw, dividing by w and doubling.
pub fn fiber_cubic(ctx: &InoseContext, lambda: &Rational) -> MPoly {
    let q = inose_quartic(ctx);
    let sub = q.compose(&[MPoly::var(3).scale(lambda), MPoly::var(1), MPoly::var(2), MPoly::var(3)]);
    sub.div_monomial(&[0, 0, 0, 1]).expect("every term carries w").scale(&rat(2, 1))
}

/// 2y²z − (8λ³ − 6aλ − 2b)zw² − z²w − w³
pub fn fiber_cubic_closed_form(ctx: &InoseContext, lambda: &Rational) -> MPoly {
    let c = rat(8, 1) * lambda * lambda * lambda - rat(6, 1) * ctx.a() * lambda - rat(2, 1) * ctx.b();
    MPoly::term(rat(2, 1), [0, 2, 1, 0])
        .add(&MPoly::term(-c, [0, 0, 1, 2]))
        .add(&MPoly::term(rat(-1, 1), [0, 0, 2, 1]))
        .add(&MPoly::term(rat(-1, 1), [0, 0, 0, 3]))
}

/// The cubic exactly as it is usually printed, with "6azw²" in place of
/// "6aλ" inside the zw² coefficient.
pub fn fiber_cubic_printed(ctx: &InoseContext, lambda: &Rational) -> MPoly {
    let inner = MPoly::constant(rat(8, 1) * lambda * lambda * lambda - rat(2, 1) * ctx.b())
        .sub(&MPoly::term(rat(6, 1) * ctx.a(), [0, 0, 1, 2]));
    MPoly::term(rat(2, 1), [0, 2, 1, 0])
        .sub(&inner.mul(&MPoly::term(rat(1, 1), [0, 0, 1, 2])))
        .add(&MPoly::term(rat(-1, 1), [0, 0, 2, 1]))
        .add(&MPoly::term(rat(-1, 1), [0, 0, 0, 3]))
}

/// z·C(y, z, 1) = 2(yz)² − (t³ + g2·t + g3) with t = z + 2P/3, at one λ.
pub fn cubic_to_weierstrass_check(ctx: &InoseContext, lambda: &Rational) -> bool {
    let p = ctx.p_at(lambda);
    let cubic = fiber_cubic(ctx, lambda);
    let affine = cubic.compose(&[MPoly::var(0), MPoly::var(1), MPoly::var(2), MPoly::constant(rat(1, 1))]);
    let lhs = affine.mul(&MPoly::var(2));
    let fib = theta2_weierstrass(ctx);
    let g2 = fib.g2.eval(lambda);
    let g3 = fib.g3.eval(lambda);
    let t = MPoly::var(2).add(&MPoly::constant(&p * rat(2, 3)));
    let rhs_w = t.pow(3).add(&t.scale(&g2)).add(&MPoly::constant(g3));
    let yz = MPoly::var(1).mul(&MPoly::var(2));
    lhs == yz.mul(&yz).scale(&rat(2, 1)).sub(&rhs_w)
}

/// Rational map given by four homogeneous components.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectiveMap {
    pub name: String,
    pub components: [MPoly; 4],
}

impl ProjectiveMap {
    pub fn compose_with(&self, inner: &ProjectiveMap) -> [MPoly; 4] {
        self.components.clone().map(|c| c.compose(&inner.components))
    }

    pub fn degree(&self) -> Option<u32> {
        let d: Vec<Option<u32>> = self.components.iter().filter(|c| !c.is_zero()).map(|c| c.homogeneous_degree()).collect();
        let first = *d.first()?;
        d.iter().all(|x| *x == first).then_some(first)?
    }
}

/// Evidence that β₁ is an involution preserving the quartic.
#[derive(Clone, Debug, PartialEq)]
pub struct InvolutionCertificate {
    /// β₁∘β₁ = m·(x, y, z, w)
    pub square_factor: Exponents,
    /// Q∘β₁ = c·m·Q
    pub quartic_factor: (Rational, Exponents),
}

fn proportional_to_identity(comp: &[MPoly; 4], used: &[usize]) -> Option<Exponents> {
    let first = used[0];
    let (c, m) = comp[first].monomial_multiple_of(&MPoly::var(first))?;
    for &i in used {
        let (ci, mi) = comp[i].monomial_multiple_of(&MPoly::var(i))?;
        if ci != c || mi != m {
            return None;
        }
    }
    c.is_one().then_some(m)
}

/// β₁: [x, y, z, w] ↦ [xz, −yz, w², zw] with its certificate.
pub fn involution_beta(ctx: &InoseContext) -> Result<(ProjectiveMap, InvolutionCertificate)> {
    let (x, y, z, w) = (MPoly::var(0), MPoly::var(1), MPoly::var(2), MPoly::var(3));
    let map = ProjectiveMap { name: "beta1".into(), components: [x.mul(&z), y.mul(&z).neg(), w.mul(&w), z.mul(&w)] };
    let sq = map.compose_with(&map);
    let square_factor = proportional_to_identity(&sq, &[0, 1, 2, 3])
        .ok_or_else(|| Error::InvolutionCheckFailed { residual: format!("beta1∘beta1 = [{}, {}, {}, {}]", sq[0], sq[1], sq[2], sq[3]) })?;
    let q = inose_quartic(ctx);
    let qb = q.compose(&map.components);
    let quartic_factor = qb
        .monomial_multiple_of(&q)
        .ok_or_else(|| Error::InvolutionCheckFailed { residual: format!("Q∘beta1 = {qb}") })?;
    Ok((map, InvolutionCertificate { square_factor, quartic_factor }))
}

/// [y, z, w] ↦ [−yz, w², zw] on the fiber cubic at λ: returns the monomial
/// factors (square, cubic) when it is an involution of the cubic.
pub fn fiber_involution_check(ctx: &InoseContext, lambda: &Rational) -> Result<(Exponents, (Rational, Exponents))> {
    let (x, y, z, w) = (MPoly::var(0), MPoly::var(1), MPoly::var(2), MPoly::var(3));
    let map = ProjectiveMap { name: "fiber".into(), components: [x, y.mul(&z).neg(), w.mul(&w), z.mul(&w)] };
    let sq = map.compose_with(&map);
    let sqf = proportional_to_identity(&sq, &[1, 2, 3])
        .ok_or_else(|| Error::InvolutionCheckFailed { residual: format!("square = [{}, {}, {}]", sq[1], sq[2], sq[3]) })?;
    let c = fiber_cubic(ctx, lambda);
    let cb = c.compose(&map.components);
    let cf = cb.monomial_multiple_of(&c).ok_or_else(|| Error::InvolutionCheckFailed { residual: format!("C∘map = {cb}") })?;
    Ok((sqf, cf))
}

fn small_rationals() -> Vec<Rational> {
    [(2, 1), (3, 1), (-1, 2), (5, 7), (-3, 1), (7, 3), (1, 5), (-9, 4)].iter().map(|&(n, d)| rat(n, d)).collect()
}

/// v² = (u + P)(u − 1)(u + 1) on sampled points of the affine cubic (w = 1)
/// with u = y² − P, v = ½·y·(z − 1/z); y lives in a quadratic extension.
pub fn quotient_substitution_check(ctx: &InoseContext, lambda: &Rational) -> Result<bool> {
    let p = ctx.p_at(lambda);
    if &p * &p == Rational::one() {
        return Err(Error::Precondition("P(lambda)^2 = 1: singular fiber".into()));
    }
    let cubic = fiber_cubic(ctx, lambda);
    for zr in small_rationals() {
        // 2y²z − 2Pz − z² − 1 = 0
        let y2 = (&zr * &zr + rat(2, 1) * &p * &zr + rat(1, 1)) / (rat(2, 1) * &zr);
        let y = QuadExtElement::sqrt_of(&y2);
        let pt = [y.embed(&Rational::zero()), y.clone(), y.embed(&zr), y.embed(&rat(1, 1))];
        if !cubic.eval(&pt).vanishes() {
            return Ok(false);
        }
        let u = y.times(&y).minus(&y.embed(&p));
        let v = y.times(&y.embed(&((&zr - zr.recip()) * rat(1, 2))));
        let one = y.embed(&rat(1, 1));
        let rhs = u.plus(&y.embed(&p)).times(&u.minus(&one)).times(&u.plus(&one));
        if v.times(&v) != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Gradient of the quartic at a projective point given by rationals.
pub fn gradient_at(q: &MPoly, pt: &[Rational; 4]) -> [Rational; 4] {
    q.gradient().map(|g| g.eval(pt))
}

/// Random points of the surface (y solved in a quadratic extension); returns
/// the number of sampled points at which the gradient vanishes.
pub fn singular_sample_count(ctx: &InoseContext, samples: usize, rng: &mut impl rand::Rng) -> usize {
    let q = inose_quartic(ctx);
    let grad = q.gradient();
    let mut bad = 0;
    let mut taken = 0;
    while taken < samples {
        let r = |rng: &mut dyn rand::RngCore| rat(rng.gen_range(-30..=30), rng.gen_range(1..=9));
        let (x, z, w) = (r(rng), r(rng), r(rng));
        if z.is_zero() || w.is_zero() {
            continue;
        }
        let zw = &z * &w;
        let rest = rat(4, 1) * &x * &x * &x * &z - rat(3, 1) * ctx.a() * &x * &z * &w * &w
            + rat(1, 2) * (&z * &z * &w * &w + &w * &w * &w * &w)
            - ctx.b() * &z * &w * &w * &w;
        let y = QuadExtElement::sqrt_of(&(rest / zw));
        let e = |r: &Rational| y.embed(r);
        let pt = [e(&x), y.clone(), e(&z), e(&w)];
        debug_assert!(q.eval(&pt).vanishes());
        taken += 1;
        if grad.iter().all(|g| g.eval(&pt).vanishes()) {
            bad += 1;
        }
    }
    bad
}

/// Numeric mirror over ℂ: (π, σ) for complex (a, b).
pub fn modular_invariants_numeric(a: &BigComplex, b: &BigComplex) -> (BigComplex, BigComplex) {
    let p = a.powi(3);
    let s = p.sub(&b.powi(2)).add(&BigComplex::one(a.precision().min(b.precision())));
    (p, s)
}

/// Roots of x² − σx + π over ℂ.
pub fn j_pair_numeric(sigma: &BigComplex, pi: &BigComplex) -> (BigComplex, BigComplex) {
    let prec = sigma.precision().min(pi.precision());
    let four = BigComplex::from_f64(4.0, 0.0, prec);
    let d = sigma.mul(sigma).sub(&four.mul(pi)).sqrt();
    let half = rat(1, 2);
    (sigma.sub(&d).scale_rational(&half), sigma.add(&d).scale_rational(&half))
}

/// All (a, b) over ℂ with a³ = j1·j2, b² = a³ + 1 − j1 − j2.
pub fn from_j_pair_numeric(j1: &BigComplex, j2: &BigComplex) -> Vec<(BigComplex, BigComplex)> {
    let prec = j1.precision().min(j2.precision());
    let a3 = j1.mul(j2);
    let b2 = a3.add(&BigComplex::one(prec)).sub(j1).sub(j2);
    let b = b2.sqrt();
    let mut out = Vec::new();
    for a in a3.nth_roots(3) {
        out.push((a.clone(), b.clone()));
        out.push((a, b.neg()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weierstrass::{euler_sum, finite_type_counts, infinity_type};

    #[test]
    fn p_poly_coefficients() {
        let ctx = InoseContext::ints(2, 3);
        assert_eq!(ctx.p_poly, Polynomial::from_ints(&[-3, -6, 0, 4]));
    }

    #[test]
    fn invariant_examples() {
        let m = |a, b| modular_invariants(&InoseContext::ints(a, b));
        assert_eq!(m(1, 0), ModularInvariants { pi: rat(1, 1), sigma: rat(2, 1) });
        assert_eq!(m(0, 1), ModularInvariants { pi: rat(0, 1), sigma: rat(0, 1) });
        assert_eq!(m(2, 3), ModularInvariants { pi: rat(8, 1), sigma: rat(0, 1) });
    }

    #[test]
    fn j_pair_examples() {
        let jp = j_pair(&InoseContext::ints(1, 0));
        assert_eq!(jp.j1.as_rational(), Some(rat(1, 1)));
        assert_eq!(jp.j2.as_rational(), Some(rat(1, 1)));
        let jp = j_pair(&InoseContext::ints(0, -1));
        assert_eq!(jp.j1.as_rational(), Some(rat(0, 1)));
        let jp = j_pair_from_invariants(&ModularInvariants { pi: rat(4, 1), sigma: rat(5, 1) });
        assert_eq!((jp.j1.as_rational(), jp.j2.as_rational()), (Some(rat(1, 1)), Some(rat(4, 1))));
        let jp = j_pair(&InoseContext::ints(2, 3));
        assert!(!jp.j1.is_rational());
        assert_eq!(jp.sum().as_rational(), Some(rat(0, 1)));
        assert_eq!(jp.product().as_rational(), Some(rat(8, 1)));
    }

    #[test]
    fn preimage_examples() {
        let one = QuadExtElement::rational(rat(1, 1));
        let pre = from_j_pair(&one, &one).unwrap();
        assert!(pre.rational_solutions.contains(&InoseParams::ints(1, 0)));
        let zero = QuadExtElement::rational(rat(0, 1));
        let pre = from_j_pair(&zero, &zero).unwrap();
        assert_eq!(pre.rational_solutions, vec![InoseParams::ints(0, 1), InoseParams::ints(0, -1)]);
        let pre = from_j_pair(&one, &QuadExtElement::rational(rat(343, 243))).unwrap();
        assert_eq!(pre.a_cubed, rat(343, 243));
        assert_eq!(pre.a_rational, None);
        assert_eq!(pre.b_rational, Some(rat(0, 1)));
        assert_eq!(pre.complex_count, 3);
    }

    #[test]
    fn theta2_g2_at_origin() {
        let f = theta2_weierstrass(&InoseContext::ints(0, 0));
        assert_eq!(f.g2, Poly::new(vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(-64, 3)]));
        assert_eq!(f.classify_infinity_fiber().unwrap(), KodairaType::IStar(12));
    }

    #[test]
    fn case_tags() {
        assert_eq!(theta2_fiber_case(&InoseContext::ints(0, 0)), FiberCase::Generic);
        assert_eq!(theta2_fiber_case(&InoseContext::ints(4, 7)), FiberCase::TangentPlus);
        assert_eq!(theta2_fiber_case(&InoseContext::ints(4, -9)), FiberCase::TangentPlus);
        assert_eq!(theta2_fiber_case(&InoseContext::ints(4, 9)), FiberCase::TangentMinus);
        assert_eq!(theta2_fiber_case(&InoseContext::ints(0, 1)), FiberCase::A0Bpm1);
        assert_eq!(theta2_fiber_case(&InoseContext::ints(0, -1)), FiberCase::A0Bpm1);
        assert_eq!(theta2_fiber_case(&InoseContext::ints(1, 0)), FiberCase::A3One);
    }

    #[test]
    fn classification_examples() {
        let f = theta2_weierstrass(&InoseContext::ints(4, 7));
        assert_eq!(f.classify_at(&rat(-1, 1)).unwrap(), KodairaType::I(2));
        let f = theta2_weierstrass(&InoseContext::ints(0, 1));
        assert_eq!(f.classify_at(&rat(0, 1)).unwrap(), KodairaType::I(3));
        let f = psi2_weierstrass(&InoseContext::ints(1, 0));
        assert_eq!(f.classify_at(&rat(1, 2)).unwrap(), KodairaType::I(4));
        let t = f.full_fiber_table().unwrap();
        assert_eq!(infinity_type(&t), Some(KodairaType::IStar(6)));
        assert_eq!(euler_sum(&t), 24);
        let counts = finite_type_counts(&t);
        assert_eq!(counts, FiberCase::A3One.predicted_psi2());
    }

    #[test]
    fn quartic_special_points() {
        for (a, b) in [(0, 0), (2, 3), (-1, 5)] {
            let q = inose_quartic(&InoseContext::ints(a, b));
            assert_eq!(q.homogeneous_degree(), Some(4));
            for pt in [[0, 1, 0, 0], [0, 0, 1, 0]] {
                let pt = pt.map(|v| rat(v, 1));
                assert!(gradient_at(&q, &pt).iter().all(|g| g.is_zero()));
            }
        }
    }

    #[test]
    fn fiber_cubic_matches_closed_form_not_printed() {
        let ctx = InoseContext::ints(2, 3);
        for l in [rat(0, 1), rat(1, 1), rat(-2, 3), rat(5, 2)] {
            assert_eq!(fiber_cubic(&ctx, &l), fiber_cubic_closed_form(&ctx, &l));
            assert!(cubic_to_weierstrass_check(&ctx, &l));
        }
        assert_ne!(fiber_cubic(&ctx, &rat(1, 1)), fiber_cubic_printed(&ctx, &rat(1, 1)));
    }

    #[test]
    fn involutions() {
        let (map, cert) = involution_beta(&InoseContext::ints(2, 3)).unwrap();
        assert_eq!(map.degree(), Some(2));
        assert_eq!(cert.square_factor, [0, 0, 1, 2]);
        assert_eq!(cert.quartic_factor, (rat(1, 1), [0, 0, 2, 2]));
        let (sq, cf) = fiber_involution_check(&InoseContext::ints(2, 3), &rat(1, 3)).unwrap();
        assert_eq!(sq, [0, 0, 1, 2]);
        assert_eq!(cf, (rat(1, 1), [0, 0, 1, 2]));
    }

    #[test]
    fn quotient_substitution() {
        assert!(quotient_substitution_check(&InoseContext::ints(0, 0), &rat(1, 1)).unwrap());
        assert!(quotient_substitution_check(&InoseContext::ints(2, 3), &rat(0, 1)).unwrap());
        // (1,0): P(1) = 1
        assert!(matches!(quotient_substitution_check(&InoseContext::ints(1, 0), &rat(1, 1)), Err(Error::Precondition(_))));
    }

    #[test]
    fn smooth_at_random_surface_points() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        assert_eq!(singular_sample_count(&InoseContext::ints(0, 0), 40, &mut rng), 0);
    }

    #[test]
    fn numeric_mirror() {
        let p = 128;
        let a = BigComplex::from_f64(1.0, 0.0, p);
        let b = BigComplex::zero(p);
        let (pi, sigma) = modular_invariants_numeric(&a, &b);
        let (j1, j2) = j_pair_numeric(&sigma, &pi);
        assert!(j1.log2_dist(&BigComplex::one(p)) < -50.0);
        assert!(j2.log2_dist(&BigComplex::one(p)) < -50.0);
        let sols = from_j_pair_numeric(&j1, &j2);
        assert_eq!(sols.len(), 6);
        assert!(sols.iter().any(|(x, y)| x.log2_dist(&a) < -40.0 && y.log2_abs() < -40.0));
    }
}
