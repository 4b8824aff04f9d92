//! Legendre curves, the Kummer quartic of E₁ × E₂, and the fibration Υ₂ with
//! its branch data, cross-ratio and functional invariant.
//!
//! Most operations are generic over the coefficient field so that the
//! J = 0 configuration can be handled exactly over ℚ(√−3).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, squarefree_decompose, Field, MPoly, Poly, Polynomial, Rational, RationalFunction, Ring};
use crate::weierstrass::KodairaType;

/// Legendre parameters of E₁: y² = x(x−1)(x−α) and E₂ (same with β).
#[derive(Clone, Debug, PartialEq)]
pub struct LegendrePair<F = Rational> {
    pub alpha: F,
    pub beta: F,
}

fn check_legendre<F: Field>(l: &F) -> Result<()> {
    if l.vanishes() || l.minus(&l.one_like()).vanishes() {
        return Err(Error::DegenerateLegendre);
    }
    Ok(())
}

impl<F: Field> LegendrePair<F> {
    pub fn new(alpha: F, beta: F) -> Result<Self> {
        check_legendre(&alpha)?;
        check_legendre(&beta)?;
        Ok(LegendrePair { alpha, beta })
    }

    fn c(&self, r: &Rational) -> F {
        self.alpha.embed(r)
    }

    fn ab(&self) -> F {
        self.alpha.times(&self.beta)
    }

    /// c = (α−1)(β−1)/(α²β²), the constant D₁ − D₂.
    pub fn gap(&self) -> F {
        let one = self.c(&Rational::one());
        let ab = self.ab();
        self.alpha.minus(&one).times(&self.beta.minus(&one)).divided(&ab.times(&ab)).unwrap()
    }

    /// Roots of D₁: 1, 1/(αβ), (α+β)/(αβ).
    pub fn d1_roots(&self) -> [F; 3] {
        let ab = self.ab();
        [self.c(&Rational::one()), ab.inverse().unwrap(), self.alpha.plus(&self.beta).divided(&ab).unwrap()]
    }

    /// Roots of D₂: 1/α, 1/β, (αβ+1)/(αβ).
    pub fn d2_roots(&self) -> [F; 3] {
        let ab = self.ab();
        [self.alpha.inverse().unwrap(), self.beta.inverse().unwrap(), ab.plus(&ab.one_like()).divided(&ab).unwrap()]
    }

    /// Σ_Υ₂ in the order 1, 1/α, 1/β, 1/(αβ), (αβ+1)/(αβ), (α+β)/(αβ).
    pub fn sigma_list(&self) -> [F; 6] {
        let [r1, r2, r3] = self.d1_roots();
        let [s1, s2, s3] = self.d2_roots();
        [r1, s1, s2, r2, s3, r3]
    }
}

impl LegendrePair<Rational> {
    pub fn ints(alpha: i64, beta: i64) -> Result<Self> {
        LegendrePair::new(rat(alpha, 1), rat(beta, 1))
    }
}

/// J(E_λ) = 4(λ²−λ+1)³ / (27λ²(λ−1)²), normalized so that J(−1) = 1.
pub fn legendre_j<F: Field>(lambda: &F) -> Result<F> {
    check_legendre(lambda)?;
    let one = lambda.one_like();
    let lm1 = lambda.minus(&one);
    let num = lambda.times(lambda).minus(lambda).plus(&one).pow(3).times_int(4);
    let den = lambda.times(lambda).times(&lm1).times(&lm1).times_int(27);
    Ok(num.divided(&den).unwrap())
}

/// The S₃-orbit λ, 1/λ, 1−λ, 1/(1−λ), λ/(λ−1), (λ−1)/λ with repeats dropped.
pub fn legendre_orbit<F: Field>(lambda: &F) -> Result<Vec<F>> {
    check_legendre(lambda)?;
    let one = lambda.one_like();
    let l = lambda.clone();
    let oml = one.minus(&l);
    let lm1 = l.minus(&one);
    let cands = [
        l.clone(),
        l.inverse().unwrap(),
        oml.clone(),
        oml.inverse().unwrap(),
        l.divided(&lm1).unwrap(),
        lm1.divided(&l).unwrap(),
    ];
    let mut out: Vec<F> = Vec::new();
    for c in cands {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    Ok(out)
}

/// z²xy − (x−w)(x−αw)(y−w)(y−βw)
pub fn kummer_quartic(pair: &LegendrePair) -> MPoly {
    let (x, y, z, w) = (MPoly::var(0), MPoly::var(1), MPoly::var(2), MPoly::var(3));
    let lin = |v: &MPoly, c: &Rational| v.sub(&w.scale(c));
    let prod = lin(&x, &Rational::one())
        .mul(&lin(&x, &pair.alpha))
        .mul(&lin(&y, &Rational::one()))
        .mul(&lin(&y, &pair.beta));
    z.mul(&z).mul(&x).mul(&y).sub(&prod)
}

/// The three A₃ points followed by the four A₁ points.
pub fn kummer_singular_points(pair: &LegendrePair) -> Vec<[Rational; 4]> {
    let o = Rational::one;
    let z = Rational::zero;
    let (a, b) = (pair.alpha.clone(), pair.beta.clone());
    vec![
        [o(), z(), z(), z()],
        [z(), o(), z(), z()],
        [z(), z(), o(), z()],
        [o(), o(), z(), o()],
        [a.clone(), o(), z(), o()],
        [o(), b.clone(), z(), o()],
        [a, b, z(), o()],
    ]
}

fn det3<F: Ring>(m: &[[F; 3]; 3]) -> F {
    let t = |i: usize, j: usize, k: usize| m[0][i].times(&m[1][j]).times(&m[2][k]);
    t(0, 1, 2).plus(&t(1, 2, 0)).plus(&t(2, 0, 1)).minus(&t(2, 1, 0)).minus(&t(0, 2, 1)).minus(&t(1, 0, 2))
}

/// Determinant of the Hessian of the affine equation (w = 1) in (x, y, z).
pub fn affine_hessian_det(q: &MPoly, pt: &[Rational; 4]) -> Rational {
    let grads = [q.partial(0), q.partial(1), q.partial(2)];
    let h: [[Rational; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| grads[i].partial(j).eval(pt)));
    det3(&h)
}

/// Everything about Υ₂ that depends only on (α, β).
#[derive(Clone, Debug, PartialEq)]
pub struct KummerFibrationContext<F = Rational> {
    pub pair: LegendrePair<F>,
    pub d_poly: Poly<F>,
    pub d1: Poly<F>,
    pub d2: Poly<F>,
    /// distinct elements of Σ_Υ₂ with their multiplicities
    pub sigma_upsilon: Vec<(F, u32)>,
}

fn from_roots<F: Field>(roots: &[F]) -> Poly<F> {
    let one = roots[0].one_like();
    roots.iter().fold(Poly::constant(one.clone()), |acc, r| &acc * &Poly::new(vec![r.negated(), one.clone()]))
}

pub fn upsilon2_data<F: Field>(pair: &LegendrePair<F>) -> KummerFibrationContext<F> {
    let d1 = from_roots(&pair.d1_roots());
    let d2 = from_roots(&pair.d2_roots());
    let d_poly = &d1 * &d2;
    let mut sigma_upsilon: Vec<(F, u32)> = Vec::new();
    for s in pair.sigma_list() {
        match sigma_upsilon.iter_mut().find(|(v, _)| *v == s) {
            Some(e) => e.1 += 1,
            None => sigma_upsilon.push((s, 1)),
        }
    }
    KummerFibrationContext { pair: pair.clone(), d_poly, d1, d2, sigma_upsilon }
}

/// r(μ) = (μ−1)(μαβ−1)(μαβ−α−β) / ((α−1)(β−1))
pub fn upsilon2_cross_ratio<F: Field>(pair: &LegendrePair<F>, mu: &F) -> F {
    let one = mu.one_like();
    let ab = pair.ab();
    let mab = mu.times(&ab);
    let num = mu.minus(&one).times(&mab.minus(&one)).times(&mab.minus(&pair.alpha).minus(&pair.beta));
    let den = pair.alpha.minus(&one).times(&pair.beta.minus(&one));
    num.divided(&den).unwrap()
}

/// r(μ) as a polynomial: D₁(μ)/c.
pub fn cross_ratio_poly(pair: &LegendrePair) -> Polynomial {
    upsilon2_data(pair).d1.scale(&pair.gap().recip())
}

/// 4(x²−x+1)³ / (27x²(x−1)²) composed with a polynomial x(μ).
pub fn j_of_cross_ratio(r: &Polynomial) -> Result<RationalFunction> {
    let one = Polynomial::from_ints(&[1]);
    let num = (&(&(r * r) - r) + &one).pow(3).scale(&rat(4, 1));
    let rm1 = r - &one;
    let den = (&(r * r) * &(&rm1 * &rm1)).scale(&rat(27, 1));
    RationalFunction::new(num, den)
}

/// J_Υ₂ = 4(D + c²)³ / (27c²D²), c = (α−1)(β−1)/(α²β²).
pub fn upsilon2_functional_invariant(pair: &LegendrePair) -> Result<RationalFunction> {
    let ctx = upsilon2_data(pair);
    let c = pair.gap();
    let c2 = &c * &c;
    let num = (&ctx.d_poly + &Polynomial::constant_rat(c2.clone())).pow(3).scale(&rat(4, 1));
    let den = ctx.d_poly.pow(2).scale(&(rat(27, 1) * c2));
    RationalFunction::new(num, den)
}

/// The closed form as usually printed:
/// 4(α⁴β⁴D + (α−1)²(β−1)²)³ / (27α⁸β⁸(α−1)⁴(β−1)⁴D²).
pub fn upsilon2_functional_invariant_printed(pair: &LegendrePair) -> Result<RationalFunction> {
    let ctx = upsilon2_data(pair);
    let ab = &pair.alpha * &pair.beta;
    let n = (&pair.alpha - Rational::one()) * (&pair.beta - Rational::one());
    let ab4 = ab.pow(4);
    let num = (&ctx.d_poly.scale(&ab4) + &Polynomial::constant_rat(&n * &n)).pow(3).scale(&rat(4, 1));
    let den = ctx.d_poly.pow(2).scale(&(rat(27, 1) * &ab4 * &ab4 * n.pow(4)));
    RationalFunction::new(num, den)
}

/// R(x, y, w) − μxy as a symmetric 3×3 matrix in (x, y, w).
pub fn conic_matrix<F: Field>(pair: &LegendrePair<F>, mu: &F) -> [[F; 3]; 3] {
    let (a, b) = (&pair.alpha, &pair.beta);
    let half = a.embed(&rat(1, 2));
    let one = a.one_like();
    let ia = a.inverse().unwrap();
    let ib = b.inverse().unwrap();
    let xw = a.plus(&one).times(&ia).times(&half);
    let yw = b.plus(&one).times(&ib).times(&half);
    let xy = mu.times(&half).negated();
    [
        [ia.negated(), xy.clone(), xw.clone()],
        [xy, ib.negated(), yw.clone()],
        [xw, yw, one.negated()],
    ]
}

/// Evaluate R(x, y, w) − μxy.
pub fn conic_value<F: Field>(pair: &LegendrePair<F>, mu: &F, pt: &[F; 3]) -> F {
    let m = conic_matrix(pair, mu);
    let mut acc = mu.zero_like();
    for i in 0..3 {
        for j in 0..3 {
            acc = acc.plus(&m[i][j].times(&pt[i]).times(&pt[j]));
        }
    }
    acc
}

pub fn conic_is_singular<F: Field>(pair: &LegendrePair<F>, mu: &F) -> bool {
    det3(&conic_matrix(pair, mu)).vanishes()
}

/// The four branch points of the double cover of the conic R = μxy.
pub fn upsilon2_branch_points<F: Field>(pair: &LegendrePair<F>, mu: &F) -> Result<[[F; 3]; 4]> {
    if conic_is_singular(pair, mu) {
        return Err(Error::SingularConic(format!("{mu:?}")));
    }
    let (a, b) = (&pair.alpha, &pair.beta);
    let one = a.one_like();
    let one_minus = |t: &F| one.minus(&mu.times(t));
    Ok([
        [one.clone(), one_minus(&one).times(b).plus(&one), one.clone()],
        [a.clone(), one_minus(a).times(b).plus(&one), one.clone()],
        [one_minus(&one).times(a).plus(&one), one.clone(), one.clone()],
        [one_minus(b).times(a).plus(&one), b.clone(), one.clone()],
    ])
}

pub fn projective_eq<F: Field>(p: &[F; 3], q: &[F; 3]) -> bool {
    (0..3).all(|i| (0..3).all(|j| p[i].times(&q[j]).minus(&p[j].times(&q[i])).vanishes()))
}

/// True iff two of the four branch points coincide.
pub fn branch_points_collide<F: Field>(pts: &[[F; 3]; 4]) -> bool {
    (0..4).any(|i| (i + 1..4).any(|j| projective_eq(&pts[i], &pts[j])))
}

/// J of the four branch points, computed by projecting the conic from the
/// point [1, 0, 1] onto a line and taking a cross ratio there.
pub fn upsilon2_j_by_projection(pair: &LegendrePair, mu: &Rational) -> Result<Rational> {
    let pts = upsilon2_branch_points(pair, mu)?;
    let base = [rat(1, 1), rat(0, 1), rat(1, 1)];
    let mut line = Vec::new();
    for p in &pts {
        if projective_eq(p, &base) {
            return Err(Error::Precondition("branch point at the projection centre".into()));
        }
        line.push((p[1].clone(), &p[0] - &p[2]));
    }
    let d = |i: usize, j: usize| &line[i].0 * &line[j].1 - &line[j].0 * &line[i].1;
    let den = d(1, 2) * d(0, 3);
    if den.is_zero() {
        return Err(Error::Precondition("branch points collide".into()));
    }
    let r = d(0, 2) * d(1, 3) / den;
    let r = RationalFunction::from_poly(Polynomial::constant_rat(r));
    let j = j_of_cross_ratio(&Polynomial::constant_rat(r.eval(&Rational::zero()).unwrap()))?;
    j.eval(&Rational::zero()).ok_or(Error::Precondition("degenerate cross ratio".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UpsilonCase {
    /// J₁ ≠ J₂
    A,
    /// J₁ = J₂ ∉ {0, 1}
    B,
    /// J₁ = J₂ = 1
    C,
    /// J₁ = J₂ = 0
    D,
}

impl UpsilonCase {
    pub fn tag(&self) -> &'static str {
        match self {
            UpsilonCase::A => "(a)",
            UpsilonCase::B => "(b)",
            UpsilonCase::C => "(c)",
            UpsilonCase::D => "(d)",
        }
    }

    /// Finite fibers: a root of D of multiplicity m carries I_{2m}.
    pub fn predicted(&self) -> BTreeMap<KodairaType, usize> {
        let v: &[(u32, usize)] = match self {
            UpsilonCase::A => &[(2, 6)],
            UpsilonCase::B => &[(4, 1), (2, 4)],
            UpsilonCase::C => &[(4, 2), (2, 2)],
            UpsilonCase::D => &[(6, 1), (2, 3)],
        };
        v.iter().map(|&(n, c)| (KodairaType::I(n), c)).collect()
    }

    /// Multiplicity profile of D(μ), sorted.
    pub fn predicted_profile(&self) -> Vec<u32> {
        match self {
            UpsilonCase::A => vec![1; 6],
            UpsilonCase::B => vec![1, 1, 1, 1, 2],
            UpsilonCase::C => vec![1, 1, 2, 2],
            UpsilonCase::D => vec![1, 1, 1, 3],
        }
    }
}

impl fmt::Display for UpsilonCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct UpsilonFibers<F = Rational> {
    pub case: UpsilonCase,
    pub j1: F,
    pub j2: F,
    /// multiplicity profile of D(μ)
    pub profile: Vec<u32>,
    /// finite fibers read off from D
    pub finite: BTreeMap<KodairaType, usize>,
    pub infinity: KodairaType,
    /// J-based case and D-based multiplicities agree
    pub consistent: bool,
}

impl<F> UpsilonFibers<F> {
    pub fn euler_sum(&self) -> u32 {
        self.infinity.euler_number() + self.finite.iter().map(|(k, c)| k.euler_number() * *c as u32).sum::<u32>()
    }
}

pub fn upsilon2_fiber_cases<F: Field>(pair: &LegendrePair<F>) -> Result<UpsilonFibers<F>> {
    let j1 = legendre_j(&pair.alpha)?;
    let j2 = legendre_j(&pair.beta)?;
    let case = if j1 != j2 {
        UpsilonCase::A
    } else if j1.vanishes() {
        UpsilonCase::D
    } else if j1.minus(&j1.one_like()).vanishes() {
        UpsilonCase::C
    } else {
        UpsilonCase::B
    };
    let ctx = upsilon2_data(pair);
    let rs = squarefree_decompose(&ctx.d_poly)?;
    let profile = rs.multiplicity_profile();
    let mut finite = BTreeMap::new();
    for m in &profile {
        *finite.entry(KodairaType::I(2 * m)).or_insert(0) += 1;
    }
    let consistent = profile == case.predicted_profile() && finite == case.predicted();
    Ok(UpsilonFibers { case, j1, j2, profile, finite, infinity: KodairaType::IStar(6), consistent })
}

/// The 24 curves of the double Kummer pencil on the resolved quartic, each
/// with the singular point or plane curve it comes from.
pub const DOUBLE_KUMMER_DICTIONARY: [(&str, &str); 24] = [
    ("H0", "A3 chain at [0,0,1,0]"),
    ("E00", "A3 chain at [0,0,1,0]"),
    ("G0", "A3 chain at [0,0,1,0]"),
    ("E21", "A3 chain at [1,0,0,0]"),
    ("G1", "A3 chain at [1,0,0,0]"),
    ("E31", "A3 chain at [1,0,0,0]"),
    ("E12", "A3 chain at [0,1,0,0]"),
    ("H1", "A3 chain at [0,1,0,0]"),
    ("E13", "A3 chain at [0,1,0,0]"),
    ("E22", "A1 curve at [1,1,0,1]"),
    ("E32", "A1 curve at [alpha,1,0,1]"),
    ("E23", "A1 curve at [1,beta,0,1]"),
    ("E33", "A1 curve at [alpha,beta,0,1]"),
    ("H2", "x = w, z = 0"),
    ("H3", "x = alpha w, z = 0"),
    ("G2", "y = w, z = 0"),
    ("G3", "y = beta w, z = 0"),
    ("E01", "x = w = 0"),
    ("E10", "y = w = 0"),
    ("E11", "w = 0, z^2 = xy"),
    ("E02", "x = 0, y = w"),
    ("E03", "x = 0, y = beta w"),
    ("E20", "y = 0, x = w"),
    ("E30", "y = 0, x = alpha w"),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rational_function_equal, QuadExtElement};

    fn omega() -> QuadExtElement {
        QuadExtElement::new(rat(1, 2), rat(1, 2), rat(-3, 1))
    }

    #[test]
    fn legendre_values() {
        assert_eq!(legendre_j(&rat(-1, 1)).unwrap(), rat(1, 1));
        assert_eq!(legendre_j(&rat(2, 1)).unwrap(), rat(1, 1));
        assert_eq!(legendre_j(&rat(3, 1)).unwrap(), rat(343, 243));
        assert!(matches!(legendre_j(&rat(1, 1)), Err(Error::DegenerateLegendre)));
        assert!(legendre_j(&omega()).unwrap().vanishes());
    }

    #[test]
    fn orbits() {
        let o = legendre_orbit(&rat(2, 1)).unwrap();
        assert_eq!(o, vec![rat(2, 1), rat(1, 2), rat(-1, 1)]);
        let o = legendre_orbit(&rat(3, 1)).unwrap();
        assert_eq!(o, vec![rat(3, 1), rat(1, 3), rat(-2, 1), rat(-1, 2), rat(3, 2), rat(2, 3)]);
        assert_eq!(legendre_orbit(&rat(-1, 1)).unwrap().len(), 3);
        for l in o {
            assert_eq!(legendre_j(&l).unwrap(), rat(343, 243));
        }
    }

    #[test]
    fn quartic_singularities() {
        let pair = LegendrePair::ints(2, 3).unwrap();
        let q = kummer_quartic(&pair);
        assert_eq!(q.homogeneous_degree(), Some(4));
        for pt in kummer_singular_points(&pair) {
            assert!(q.gradient().iter().all(|g| g.eval(&pt).is_zero()), "{pt:?}");
        }
        for pt in &kummer_singular_points(&pair)[3..] {
            assert!(!affine_hessian_det(&q, pt).is_zero());
        }
        // det = −2(1−α)²(1−β)² at (1,1,0)
        assert_eq!(affine_hessian_det(&q, &kummer_singular_points(&pair)[3]), rat(-8, 1));
    }

    #[test]
    fn sigma_and_d() {
        let pair = LegendrePair::ints(2, 3).unwrap();
        let ctx = upsilon2_data(&pair);
        let s: Vec<Rational> = ctx.sigma_upsilon.iter().map(|(v, _)| v.clone()).collect();
        assert_eq!(s, vec![rat(1, 1), rat(1, 2), rat(1, 3), rat(1, 6), rat(7, 6), rat(5, 6)]);
        assert_eq!(ctx.d_poly, &ctx.d1 * &ctx.d2);
        assert_eq!(ctx.d1.coeff(2), ctx.d2.coeff(2));
        assert_eq!(ctx.d1.coeff(1), ctx.d2.coeff(1));
        assert_eq!(&ctx.d1 - &ctx.d2, Polynomial::constant_rat(rat(1, 18)));
    }

    #[test]
    fn cross_ratio_examples() {
        let pair = LegendrePair::ints(2, 3).unwrap();
        assert!(upsilon2_cross_ratio(&pair, &rat(1, 1)).is_zero());
        assert!(upsilon2_cross_ratio(&pair, &rat(1, 6)).is_zero());
        assert_eq!(upsilon2_cross_ratio(&pair, &rat(2, 1)), rat(77, 2));
        assert_eq!(cross_ratio_poly(&pair).eval(&rat(2, 1)), rat(77, 2));
    }

    #[test]
    fn functional_invariant_forms() {
        let pair = LegendrePair::ints(2, 3).unwrap();
        let derived = upsilon2_functional_invariant(&pair).unwrap();
        let composed = j_of_cross_ratio(&cross_ratio_poly(&pair)).unwrap();
        assert!(rational_function_equal(&derived, &composed));
        let printed = upsilon2_functional_invariant_printed(&pair).unwrap();
        assert!(!rational_function_equal(&derived, &printed));
        for mu in [rat(2, 1), rat(0, 1), rat(-3, 7)] {
            assert_eq!(upsilon2_j_by_projection(&pair, &mu).unwrap(), derived.eval(&mu).unwrap());
        }
        assert_eq!(derived.eval(&rat(1, 2)), None);
    }

    #[test]
    fn branch_points() {
        let pair = LegendrePair::ints(2, 3).unwrap();
        for mu in [rat(2, 1), rat(0, 1), rat(-5, 3)] {
            let pts = upsilon2_branch_points(&pair, &mu).unwrap();
            for p in &pts {
                assert!(conic_value(&pair, &mu, p).is_zero());
            }
            assert!(!branch_points_collide(&pts));
        }
        for mu in [rat(1, 1), rat(1, 2), rat(1, 3), rat(1, 6)] {
            assert!(branch_points_collide(&upsilon2_branch_points(&pair, &mu).unwrap()));
        }
        for mu in [rat(7, 6), rat(5, 6)] {
            assert!(matches!(upsilon2_branch_points(&pair, &mu), Err(Error::SingularConic(_))));
        }
    }

    #[test]
    fn fiber_cases() {
        let f = upsilon2_fiber_cases(&LegendrePair::ints(2, 3).unwrap()).unwrap();
        assert_eq!(f.case, UpsilonCase::A);
        assert!(f.consistent);
        let f = upsilon2_fiber_cases(&LegendrePair::new(rat(2, 1), rat(1, 2)).unwrap()).unwrap();
        assert_eq!((f.case, f.profile.clone()), (UpsilonCase::C, vec![1, 1, 2, 2]));
        assert!(f.consistent);
        let f = upsilon2_fiber_cases(&LegendrePair::new(rat(3, 1), rat(1, 3)).unwrap()).unwrap();
        assert_eq!(f.case, UpsilonCase::B);
        assert_eq!(f.j1, rat(343, 243));
        assert!(f.consistent);
        let f = upsilon2_fiber_cases(&LegendrePair::new(omega(), omega()).unwrap()).unwrap();
        assert_eq!((f.case, f.profile.clone()), (UpsilonCase::D, vec![1, 1, 1, 3]));
        assert!(f.consistent);
        assert_eq!(f.euler_sum(), 24);
    }

    #[test]
    fn dictionary_covers_every_curve_once() {
        let mut names: Vec<&str> = DOUBLE_KUMMER_DICTIONARY.iter().map(|(n, _)| *n).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), 24);
        assert_eq!(names.iter().filter(|n| n.starts_with('E')).count(), 16);
    }
}
