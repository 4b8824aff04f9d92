use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, Rational};
use super::ring::Ring;

pub type Exponents = [u32; 4];

/// Sparse polynomial in four variables (x, y, z, w) over ℚ. Only as much
/// algebra as the quartic models need.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Exponents, Rational>,
}

pub const VARS: [&str; 4] = ["x", "y", "z", "w"];

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        MPoly::term(c, [0, 0, 0, 0])
    }

    pub fn term(c: Rational, e: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MPoly { terms }
    }

    /// The i-th coordinate variable.
    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        MPoly::term(Rational::one(), e)
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut t = self.terms.clone();
        for (e, c) in &o.terms {
            let v = t.entry(*e).or_insert_with(Rational::zero);
            *v += c;
            if v.is_zero() {
                t.remove(e);
            }
        }
        MPoly { terms: t }
    }

    pub fn neg(&self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut t: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                *t.entry(e).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        t.retain(|_, c| !c.is_zero());
        MPoly { terms: t }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::constant(Rational::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Total degree if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = it.next()?;
        it.all(|k| k == d).then_some(d)
    }

    pub fn partial(&self, i: usize) -> MPoly {
        let mut t = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = *e;
                f[i] -= 1;
                t.insert(f, c * Rational::from_integer(e[i].into()));
            }
        }
        MPoly { terms: t }
    }

    pub fn gradient(&self) -> [MPoly; 4] {
        [self.partial(0), self.partial(1), self.partial(2), self.partial(3)]
    }

    /// Substitute polynomials for the four variables.
    pub fn compose(&self, s: &[MPoly; 4]) -> MPoly {
        let mut cache: [Vec<MPoly>; 4] = Default::default();
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let mut m = MPoly::constant(c.clone());
            for i in 0..4 {
                let k = e[i] as usize;
                while cache[i].len() <= k {
                    let next = match cache[i].last() {
                        None => MPoly::constant(Rational::one()),
                        Some(p) => p.mul(&s[i]),
                    };
                    cache[i].push(next);
                }
                m = m.mul(&cache[i][k]);
            }
            out = out.add(&m);
        }
        out
    }

    /// Evaluate at a point of any ring containing ℚ.
    pub fn eval<R: Ring>(&self, pt: &[R; 4]) -> R {
        let mut acc = pt[0].zero_like();
        for (e, c) in &self.terms {
            let mut m = pt[0].embed(c);
            for i in 0..4 {
                m = m.times(&pt[i].pow(e[i]));
            }
            acc = acc.plus(&m);
        }
        acc
    }

    /// Exact division by a monomial; None if some term is not divisible.
    pub fn div_monomial(&self, e: &Exponents) -> Option<MPoly> {
        let mut t = BTreeMap::new();
        for (f, c) in &self.terms {
            if (0..4).any(|i| f[i] < e[i]) {
                return None;
            }
            t.insert([f[0] - e[0], f[1] - e[1], f[2] - e[2], f[3] - e[3]], c.clone());
        }
        Some(MPoly { terms: t })
    }

    /// If self = c·m·other for a monomial m and rational c, return (c, m).
    pub fn monomial_multiple_of(&self, other: &MPoly) -> Option<(Rational, Exponents)> {
        let (e_s, c_s) = self.terms.iter().next_back()?;
        let (e_o, c_o) = other.terms.iter().next_back()?;
        if (0..4).any(|i| e_s[i] < e_o[i]) {
            return None;
        }
        let m = [e_s[0] - e_o[0], e_s[1] - e_o[1], e_s[2] - e_o[2], e_s[3] - e_o[3]];
        let c = c_s / c_o;
        let cand = other.mul(&MPoly::term(c.clone(), m));
        (cand == *self).then_some((c, m))
    }
}

pub fn fmt_monomial(e: &Exponents) -> String {
    let mut parts = Vec::new();
    for i in 0..4 {
        match e[i] {
            0 => {}
            1 => parts.push(VARS[i].to_string()),
            k => parts.push(format!("{}^{}", VARS[i], k)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            let mono = fmt_monomial(e);
            if a.is_one() {
                f.write_str(&mono)?;
            } else if mono == "1" {
                f.write_str(&fmt_rational(&a))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&a), mono)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn compose_and_monomial_multiple() {
        let x = MPoly::var(0);
        let y = MPoly::var(1);
        let f = x.mul(&x).sub(&y.mul(&y)); // x² − y²
        let g = f.compose(&[x.mul(&y), y.mul(&y), MPoly::var(2), MPoly::var(3)]);
        let (c, m) = g.monomial_multiple_of(&f).unwrap();
        assert_eq!(c, rat(1, 1));
        assert_eq!(m, [0, 2, 0, 0]);
        assert_eq!(f.homogeneous_degree(), Some(2));
        assert_eq!(f.partial(0), x.scale(&rat(2, 1)));
        assert_eq!(f.eval(&[rat(3, 1), rat(1, 1), rat(0, 1), rat(0, 1)]), rat(8, 1));
        assert_eq!(f.to_string(), "x^2 - y^2");
    }
}
