//! Short Weierstrass fibrations y² = x³ + g2(λ)x + g3(λ) over the projective
//! line: discriminant, functional invariant and Kodaira types from valuation
//! triples, including the fiber at λ = ∞.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::bigcomplex::DEFAULT_PRECISION;
use crate::exact::{
    complex_roots, split_rational_roots, squarefree_decompose, BigComplex, Poly, Polynomial, RationalFunction, Ring,
};

/// Kodaira fiber type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KodairaType {
    I(u32),
    IStar(u32),
    II,
    III,
    IV,
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    pub fn euler_number(&self) -> u32 {
        match self {
            KodairaType::I(n) => *n,
            KodairaType::IStar(n) => n + 6,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::IStar(n) => write!(f, "I*{n}"),
            KodairaType::II => f.write_str("II"),
            KodairaType::III => f.write_str("III"),
            KodairaType::IV => f.write_str("IV"),
            KodairaType::IVStar => f.write_str("IV*"),
            KodairaType::IIIStar => f.write_str("III*"),
            KodairaType::IIStar => f.write_str("II*"),
        }
    }
}

/// Vanishing order; `None` stands for +∞ (the zero polynomial).
pub type Ord = Option<u32>;

fn ord_str(o: Ord) -> String {
    o.map_or_else(|| "inf".to_string(), |k| k.to_string())
}

fn at_least(o: Ord, k: u32) -> bool {
    o.is_none_or(|v| v >= k)
}

/// Tate's table for short Weierstrass models over a smooth complex curve.
/// `Ok(None)` means the fiber is smooth.
pub fn classify_triple(g2: Ord, g3: Ord, delta: u32) -> Result<Option<KodairaType>> {
    let bad = || Error::NonMinimalModel { ord_g2: ord_str(g2), ord_g3: ord_str(g3), ord_delta: delta.to_string() };
    if at_least(g2, 4) && at_least(g3, 6) {
        return Err(bad());
    }
    if delta == 0 {
        return Ok(None);
    }
    let t = match (g2, g3, delta) {
        (Some(0), Some(0), n) => KodairaType::I(n),
        (a, Some(1), 2) if at_least(a, 1) => KodairaType::II,
        (Some(1), b, 3) if at_least(b, 2) => KodairaType::III,
        (a, Some(2), 4) if at_least(a, 2) => KodairaType::IV,
        (a, b, 6) if at_least(a, 2) && at_least(b, 3) => KodairaType::IStar(0),
        (Some(2), Some(3), n) if n > 6 => KodairaType::IStar(n - 6),
        (a, Some(4), 8) if at_least(a, 3) => KodairaType::IVStar,
        (Some(3), b, 9) if at_least(b, 5) => KodairaType::IIIStar,
        (a, Some(5), 10) if at_least(a, 4) => KodairaType::IIStar,
        _ => return Err(bad()),
    };
    Ok(Some(t))
}

pub(crate) fn scale_int<R: Ring>(p: &Poly<R>, n: i64) -> Poly<R> {
    p.map(|c| c.times_int(n))
}

/// 4·g2³ + 27·g3² over any coefficient ring.
pub fn weierstrass_discriminant<R: Ring>(g2: &Poly<R>, g3: &Poly<R>) -> Poly<R> {
    &scale_int(&g2.pow(3), 4) + &scale_int(&g3.pow(2), 27)
}

/// Model y² = x³ + g2(λ)·x + g3(λ) with section weights 8 and 12.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassFibration {
    pub g2: Polynomial,
    pub g3: Polynomial,
    pub weight_g2: u32,
    pub weight_g3: u32,
}

#[derive(Clone, Debug)]
pub enum FiberLocation {
    /// all roots of an exact square-free factor, with numeric approximations
    Finite { factor: Polynomial, approx: Vec<BigComplex> },
    Infinity,
}

#[derive(Clone, Debug)]
pub struct FiberRecord {
    pub location: FiberLocation,
    pub kodaira: KodairaType,
    pub delta_order: u32,
    pub ord_g2: Ord,
    pub ord_g3: Ord,
}

impl FiberRecord {
    /// Number of fibers the record stands for (degree of its factor).
    pub fn count(&self) -> usize {
        match &self.location {
            FiberLocation::Finite { factor, .. } => factor.degree().unwrap_or(0),
            FiberLocation::Infinity => 1,
        }
    }

    pub fn euler_total(&self) -> u32 {
        self.kodaira.euler_number() * self.count() as u32
    }
}

impl WeierstrassFibration {
    /// K3 weights 8 and 12; rejects Δ ≡ 0 and degree overflow.
    pub fn new(g2: Polynomial, g3: Polynomial) -> Result<Self> {
        WeierstrassFibration::with_weights(g2, g3, 8, 12)
    }

    pub fn with_weights(g2: Polynomial, g3: Polynomial, weight_g2: u32, weight_g3: u32) -> Result<Self> {
        if g2.degree().unwrap_or(0) > weight_g2 as usize || g3.degree().unwrap_or(0) > weight_g3 as usize {
            return Err(Error::Precondition("degree of g2/g3 exceeds the section weight".into()));
        }
        let f = WeierstrassFibration { g2, g3, weight_g2, weight_g3 };
        f.discriminant()?;
        Ok(f)
    }

    pub fn discriminant(&self) -> Result<Polynomial> {
        let d = weierstrass_discriminant(&self.g2, &self.g3);
        if d.is_zero() {
            Err(Error::NotAnEllipticFibration)
        } else {
            Ok(d)
        }
    }

    /// J = 4g2³/Δ, reduced.
    pub fn functional_invariant(&self) -> Result<RationalFunction> {
        let d = self.discriminant()?;
        RationalFunction::new(scale_int(&self.g2.pow(3), 4), d)
    }

    /// Kodaira type along the roots of `factor` (assumed to share one type).
    pub fn classify_finite_fiber(&self, factor: &Polynomial) -> Result<KodairaType> {
        let d = self.discriminant()?;
        if factor.degree().unwrap_or(0) == 0 {
            return Err(Error::Precondition("location factor must be non-constant".into()));
        }
        let od = d.valuation(factor).unwrap();
        if od == 0 {
            return Err(Error::NotSingularHere);
        }
        classify_triple(self.g2.valuation(factor), self.g3.valuation(factor), od)?.ok_or(Error::NotSingularHere)
    }

    pub fn classify_at(&self, lambda: &crate::exact::Rational) -> Result<KodairaType> {
        let lin = Poly::new(vec![-lambda, crate::exact::rat(1, 1)]);
        self.classify_finite_fiber(&lin)
    }

    /// Valuations at ∞ from the weight deficiency, after removing
    /// (4, 6, 12) as long as the model is non-minimal there.
    pub fn infinity_triple(&self) -> Result<(Ord, Ord, u32)> {
        let d = self.discriminant()?;
        let w_d = 2 * self.weight_g3.max(3 * self.weight_g2 / 2);
        let mut o2 = self.g2.degree().map(|k| self.weight_g2 - k as u32);
        let mut o3 = self.g3.degree().map(|k| self.weight_g3 - k as u32);
        let mut od = w_d - d.degree().unwrap() as u32;
        while at_least(o2, 4) && at_least(o3, 6) && od >= 12 {
            o2 = o2.map(|v| v - 4);
            o3 = o3.map(|v| v - 6);
            od -= 12;
        }
        Ok((o2, o3, od))
    }

    pub fn classify_infinity_fiber(&self) -> Result<KodairaType> {
        let (o2, o3, od) = self.infinity_triple()?;
        classify_triple(o2, o3, od)?.ok_or(Error::NotSingularAtInfinity)
    }

    /// Every singular fiber, grouped by exact factor, plus ∞ when singular.
    pub fn full_fiber_table(&self) -> Result<Vec<FiberRecord>> {
        self.fiber_table(true)
    }

    /// Same as `full_fiber_table`, optionally skipping numeric root placement.
    pub fn fiber_table(&self, with_approx: bool) -> Result<Vec<FiberRecord>> {
        let d = self.discriminant()?;
        let rs = split_rational_roots(&squarefree_decompose(&d)?)?;
        let mut out = Vec::new();
        for (phi, m) in &rs.factors {
            for (piece, o2, o3) in refine(phi, &self.g2, &self.g3)? {
                let kodaira = classify_triple(o2, o3, *m)?.ok_or(Error::NotSingularHere)?;
                let approx = if with_approx {
                    complex_roots(&piece, DEFAULT_PRECISION)?.into_iter().map(|(z, _)| z).collect()
                } else {
                    Vec::new()
                };
                out.push(FiberRecord {
                    location: FiberLocation::Finite { factor: piece, approx },
                    kodaira,
                    delta_order: *m,
                    ord_g2: o2,
                    ord_g3: o3,
                });
            }
        }
        let (o2, o3, od) = self.infinity_triple()?;
        if let Some(k) = classify_triple(o2, o3, od)? {
            out.push(FiberRecord { location: FiberLocation::Infinity, kodaira: k, delta_order: od, ord_g2: o2, ord_g3: o3 });
        }
        Ok(out)
    }
}

/// Split a square-free factor so that g2 and g3 have constant order along
/// each piece.
fn refine(phi: &Polynomial, g2: &Polynomial, g3: &Polynomial) -> Result<Vec<(Polynomial, Ord, Ord)>> {
    let mut pieces = vec![(phi.clone(), None::<u32>, None::<u32>)];
    for (which, g) in [(0, g2), (1, g3)] {
        let layers = if g.is_zero() { Vec::new() } else { squarefree_decompose(g)?.factors };
        let mut next = Vec::new();
        for (psi, o2, o3) in pieces {
            let mut rest = psi.clone();
            for (u, i) in &layers {
                let h = rest.gcd(u);
                if h.degree().unwrap_or(0) > 0 {
                    rest = rest.exact_div(&h).unwrap();
                    next.push(set_ord(h, o2, o3, which, Some(*i)));
                }
            }
            if rest.degree().unwrap_or(0) > 0 {
                let ord = if g.is_zero() { None } else { Some(0) };
                next.push(set_ord(rest.monic(), o2, o3, which, ord));
            }
        }
        pieces = next;
    }
    Ok(pieces)
}

fn set_ord(p: Polynomial, o2: Ord, o3: Ord, which: usize, v: Ord) -> (Polynomial, Ord, Ord) {
    if which == 0 {
        (p, v, o3)
    } else {
        (p, o2, v)
    }
}

pub fn euler_sum(table: &[FiberRecord]) -> u32 {
    table.iter().map(|r| r.euler_total()).sum()
}

/// Counts of finite fibers by type (∞ excluded), keyed by type.
pub fn finite_type_counts(table: &[FiberRecord]) -> BTreeMap<KodairaType, usize> {
    let mut m = BTreeMap::new();
    for r in table {
        if let FiberLocation::Finite { .. } = r.location {
            *m.entry(r.kodaira).or_insert(0) += r.count();
        }
    }
    m
}

pub fn infinity_type(table: &[FiberRecord]) -> Option<KodairaType> {
    table.iter().find(|r| matches!(r.location, FiberLocation::Infinity)).map(|r| r.kodaira)
}
