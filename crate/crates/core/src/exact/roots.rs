use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::bigcomplex::{BigComplex, DEFAULT_PRECISION, MAX_PRECISION};
use super::poly::{nonzero, Poly, Polynomial};
use super::rational::Rational;
use super::ring::Field;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldNote {
    /// every factor is linear
    Rational,
    /// factors of degree at most two
    Quadratic,
    Numeric,
}

/// f = unit · Π factorᵢ^mᵢ with monic, square-free, pairwise coprime factors.
#[derive(Clone, Debug, PartialEq)]
pub struct RootStructure<F = Rational> {
    pub unit: F,
    pub factors: Vec<(Poly<F>, u32)>,
    pub field_note: FieldNote,
}

impl<F: Field> RootStructure<F> {
    fn new(unit: F, factors: Vec<(Poly<F>, u32)>) -> Self {
        let maxdeg = factors.iter().filter_map(|(p, _)| p.degree()).max().unwrap_or(0);
        let field_note = match maxdeg {
            0 | 1 => FieldNote::Rational,
            2 => FieldNote::Quadratic,
            _ => FieldNote::Numeric,
        };
        RootStructure { unit, factors, field_note }
    }

    pub fn recombine(&self) -> Poly<F> {
        let mut acc = Poly::constant(self.unit.clone());
        for (p, m) in &self.factors {
            acc = &acc * &p.pow(*m);
        }
        acc
    }

    /// Number of roots counted with multiplicity.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(p, m)| p.degree().unwrap_or(0) * *m as usize).sum()
    }

    /// Multiset of multiplicities, one entry per distinct root, sorted.
    pub fn multiplicity_profile(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .factors
            .iter()
            .flat_map(|(p, m)| std::iter::repeat_n(*m, p.degree().unwrap_or(0)))
            .collect();
        v.sort_unstable();
        v
    }
}

/// Yun's square-free decomposition over a field of characteristic zero.
pub fn squarefree_decompose<F: Field>(f: &Poly<F>) -> Result<RootStructure<F>> {
    nonzero(f)?;
    let unit = f.leading().unwrap().clone();
    let f = f.monic();
    let mut factors = Vec::new();
    if f.degree() == Some(0) {
        return Ok(RootStructure::new(unit, factors));
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).unwrap();
    let c = df.exact_div(&a0).unwrap();
    let mut d = &c - &b.derivative();
    let mut i = 1u32;
    loop {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            factors.push((a.clone(), i));
        }
        b = b.exact_div(&a).unwrap();
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        let c = d.exact_div(&a).unwrap();
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(RootStructure::new(unit, factors))
}

/// Split every rational linear factor off the square-free factors.
pub fn split_rational_roots(rs: &RootStructure) -> Result<RootStructure> {
    let mut out = Vec::new();
    for (p, m) in &rs.factors {
        let roots = rational_roots(p)?;
        let mut rest = p.clone();
        for r in &roots {
            let lin = Poly::new(vec![-r, Rational::from_integer(1.into())]);
            rest = rest.exact_div(&lin).unwrap();
            out.push((lin, *m));
        }
        if rest.degree().unwrap_or(0) > 0 {
            out.push((rest, *m));
        }
    }
    out.sort_by(|(a, ma), (b, mb)| {
        (ma, a.degree())
            .cmp(&(mb, b.degree()))
            .then_with(|| a.coeffs().iter().cmp(b.coeffs().iter()))
    });
    Ok(RootStructure::new(rs.unit.clone(), out))
}

/// Distinct rational roots of a nonzero polynomial, ascending.
///
/// Candidates come from real root approximations: a root n/d in lowest terms
/// has d | L (leading coefficient of the primitive integer form), so L·root is
/// an integer and rounding a good enough approximation recovers it; each
/// candidate is then checked exactly.
pub fn rational_roots(f: &Polynomial) -> Result<Vec<Rational>> {
    nonzero(f)?;
    let sf = squarefree_part(f);
    let mut found = Vec::new();
    let mut rest = sf;
    // zero root
    while rest.degree().unwrap_or(0) > 0 && rest.coeffs()[0].is_zero() {
        found.push(Rational::zero());
        rest = Poly::new(rest.coeffs()[1..].to_vec());
    }
    if rest.degree().unwrap_or(0) == 0 {
        return Ok(found);
    }
    if rest.degree() == Some(1) {
        found.push(-&rest.coeffs()[0] / &rest.coeffs()[1]);
        found.sort();
        return Ok(found);
    }
    let (_, prim) = rest.primitive_part();
    let lead = prim.last().unwrap().abs();
    let maxc = prim.iter().map(|c| c.bits()).max().unwrap_or(1) as usize;
    let prec = (DEFAULT_PRECISION + 2 * lead.bits() as usize + 2 * maxc).next_power_of_two();
    let approx = isolate_with_retry(&rest, prec)?;
    let lead_r = Rational::from_integer(lead.clone());
    for z in approx {
        let (_, im) = z.to_f64();
        let re = super::bigcomplex::bf_to_rational(z.re());
        if im.abs() > 1e-6 * (1.0 + z.to_f64().0.abs()) {
            continue;
        }
        let m: BigInt = (re * &lead_r).round().to_integer();
        let cand = Rational::new(m, lead.clone());
        if rest.eval(&cand).is_zero() && !found.contains(&cand) {
            found.push(cand);
        }
    }
    found.sort();
    Ok(found)
}

fn squarefree_part(f: &Polynomial) -> Polynomial {
    let g = f.gcd(&f.derivative());
    f.exact_div(&g).unwrap().monic()
}

/// Roots with multiplicity, each square-free factor isolated numerically;
/// rational roots are placed exactly.
pub fn complex_roots(f: &Polynomial, precision_bits: usize) -> Result<Vec<(BigComplex, u32)>> {
    if precision_bits < 64 {
        return Err(Error::Precondition("precision must be at least 64 bits".into()));
    }
    let rs = split_rational_roots(&squarefree_decompose(f)?)?;
    let mut out = Vec::new();
    for (p, m) in &rs.factors {
        if p.degree() == Some(1) {
            let r = -&p.coeffs()[0] / &p.coeffs()[1];
            out.push((BigComplex::from_rational(&r, precision_bits), *m));
            continue;
        }
        for z in isolate_with_retry(p, precision_bits)? {
            out.push((z.with_precision(precision_bits), *m));
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        let (ar, ai) = a.to_f64();
        let (br, bi) = b.to_f64();
        ar.total_cmp(&br).then(ai.total_cmp(&bi))
    });
    Ok(out)
}

fn isolate_with_retry(p: &Polynomial, start: usize) -> Result<Vec<BigComplex>> {
    let mut bits = start;
    loop {
        match aberth(p, bits) {
            Ok(v) => return Ok(v),
            Err(Error::PrecisionExhausted { .. }) if bits < MAX_PRECISION => bits *= 2,
            Err(e) => return Err(e),
        }
    }
}

fn horner(c: &[BigComplex], z: &BigComplex) -> (BigComplex, BigComplex) {
    let p = z.precision();
    let mut f = BigComplex::zero(p);
    let mut df = BigComplex::zero(p);
    for a in c.iter().rev() {
        df = df.mul(z).add(&f);
        f = f.mul(z).add(a);
    }
    (f, df)
}

/// Aberth–Ehrlich iteration on a square-free polynomial.
fn aberth(p: &Polynomial, prec: usize) -> Result<Vec<BigComplex>> {
    let n = p.degree().unwrap_or(0);
    if n == 0 {
        return Ok(Vec::new());
    }
    let w = prec + 32;
    let monic = p.monic();
    let c: Vec<BigComplex> = monic.coeffs().iter().map(|r| BigComplex::from_rational(r, w)).collect();
    // Fujiwara-style radius in log space
    let logs: Vec<f64> = c.iter().map(|z| z.log2_abs()).collect();
    let mut lr = f64::NEG_INFINITY;
    for (i, l) in logs.iter().enumerate().take(n) {
        if l.is_finite() {
            lr = lr.max(l / (n - i) as f64);
        }
    }
    let radius = if lr.is_finite() { 2f64.powf(lr).max(1e-3) } else { 1.0 };
    let mut z: Vec<BigComplex> = (0..n)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            BigComplex::from_f64(radius * t.cos(), radius * t.sin(), w)
        })
        .collect();
    let one = BigComplex::one(w);
    let tol = -(w as f64) + 12.0;
    let mut converged = false;
    for _ in 0..(200 + 20 * n) {
        let mut max_step = f64::NEG_INFINITY;
        for k in 0..n {
            let (f, df) = horner(&c, &z[k]);
            if f.is_zero() {
                continue;
            }
            let Some(ratio) = f.div(&df) else { continue };
            let mut s = BigComplex::zero(w);
            for j in 0..n {
                if j != k {
                    if let Some(t) = one.div(&z[k].sub(&z[j])) {
                        s = s.add(&t);
                    }
                }
            }
            let denom = one.sub(&ratio.mul(&s));
            let step = ratio.div(&denom).unwrap_or(ratio);
            let rel = step.log2_abs() - z[k].log2_abs().max(0.0);
            max_step = max_step.max(rel);
            z[k] = z[k].sub(&step);
        }
        if max_step < tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::PrecisionExhausted { bits: prec });
    }
    // separation: Newton error bounds must not overlap
    let errs: Vec<f64> = z
        .iter()
        .map(|zk| {
            let (f, df) = horner(&c, zk);
            match f.div(&df) {
                Some(r) => r.log2_abs() + (n as f64).log2() + 1.0,
                None => f64::INFINITY,
            }
        })
        .collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let d = z[i].log2_dist(&z[j]);
            if d <= errs[i].max(errs[j]) + 2.0 || d < -(prec as f64) / 2.0 {
                return Err(Error::PrecisionExhausted { bits: prec });
            }
        }
    }
    Ok(z.into_iter().map(|x| x.with_precision(prec)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn yun_examples() {
        let f = Polynomial::from_ints(&[-8, -12, 0, 4]);
        let rs = squarefree_decompose(&f).unwrap();
        assert_eq!(rs.unit, rat(4, 1));
        assert_eq!(rs.factors, vec![(Polynomial::from_ints(&[-2, 1]), 1), (Polynomial::from_ints(&[1, 1]), 2)]);
        assert_eq!(rs.recombine(), f);
        let x = squarefree_decompose(&Polynomial::x()).unwrap();
        assert_eq!(x.factors, vec![(Polynomial::x(), 1)]);
        let g = Polynomial::from_ints(&[1, 0, 1]).pow(2);
        let rs = squarefree_decompose(&g).unwrap();
        assert_eq!(rs.factors, vec![(Polynomial::from_ints(&[1, 0, 1]), 2)]);
        assert_eq!(rs.field_note, FieldNote::Quadratic);
        assert_eq!(squarefree_decompose(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn rational_root_extraction() {
        // (2X − 3)(X + 5)(X² + 2)
        let f = &(&Polynomial::from_ints(&[-3, 2]) * &Polynomial::from_ints(&[5, 1])) * &Polynomial::from_ints(&[2, 0, 1]);
        assert_eq!(rational_roots(&f).unwrap(), vec![rat(-5, 1), rat(3, 2)]);
        let g = Poly::new(vec![rat(-1, 4), rat(0, 1), rat(0, 1), rat(1, 1)]);
        assert!(rational_roots(&g).unwrap().is_empty());
    }

    #[test]
    fn complex_root_examples() {
        let r = complex_roots(&Polynomial::from_ints(&[1, 0, 1]), 128).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r[0].0.log2_dist(&BigComplex::from_f64(0.0, -1.0, 128)) < -120.0);
        assert!(r[1].0.log2_dist(&BigComplex::from_f64(0.0, 1.0, 128)) < -120.0);

        let r = complex_roots(&Polynomial::from_ints(&[-8, -12, 0, 4]), 128).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].1, 2);
        assert_eq!(r[0].0.to_f64(), (-1.0, 0.0));
        assert_eq!(r[1].1, 1);

        let g = Poly::new(vec![rat(-1, 4), rat(0, 1), rat(0, 1), rat(1, 1)]);
        let r = complex_roots(&g, 128).unwrap();
        assert_eq!(r.len(), 3);
        let quarter = BigComplex::from_rational(&rat(1, 4), 128);
        for (z, m) in r {
            assert_eq!(m, 1);
            assert!(z.powi(3).log2_dist(&quarter) < -120.0);
        }
    }
}
