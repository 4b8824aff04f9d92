use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{common_denominator, fmt_rational, Rational};
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

pub type Polynomial = Poly<Rational>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.vanishes()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// c·X^n
    pub fn monomial(c: R, n: usize) -> Self {
        let mut v = vec![c.zero_like(); n];
        v.push(c);
        Poly::new(v)
    }

    /// The affine polynomial q·X + p.
    pub fn affine(q: R, p: R) -> Self {
        Poly::new(vec![p, q])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&R> {
        self.coeffs.get(k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|x| x.times(c)).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(x).plus(c);
        }
        acc
    }

    /// Evaluate with coefficients pushed into another ring.
    pub fn eval_in<S: Ring>(&self, x: &S, embed: impl Fn(&R) -> S) -> S {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(x).plus(&embed(c));
        }
        acc
    }

    /// f(g(X)).
    pub fn compose(&self, g: &Poly<R>) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.times_int(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = match self.coeffs.first() {
            Some(c) => Poly::constant(c.one_like()),
            // zero polynomial: no ring element to build 1 from, 0^0 is taken as 0
            None => return Poly::zero(),
        };
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, o: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(match (self.coeffs.get(k), o.coeffs.get(k)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(v)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly { coeffs: self.coeffs.iter().map(|c| c.negated()).collect() }
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, o: &Poly<R>) -> Poly<R> {
        self + &(-o)
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, o: &Poly<R>) -> Poly<R> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let z = self.coeffs[0].zero_like();
        let mut v = vec![z; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.vanishes() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].plus(&a.times(b));
            }
        }
        Poly::new(v)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, o: Poly<R>) -> Poly<R> {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

impl<F: Field> Poly<F> {
    /// Euclidean division; panics on a zero divisor polynomial.
    pub fn div_rem(&self, d: &Poly<F>) -> (Poly<F>, Poly<F>) {
        let dl = d.leading().expect("division by zero polynomial");
        let inv = dl.inverse().expect("leading coefficient not invertible");
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let z = dl.zero_like();
        let mut q = vec![z; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].times(&inv);
            if !c.vanishes() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].minus(&c.times(dc));
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    /// Exact quotient when `d` divides `self`.
    pub fn exact_div(&self, d: &Poly<F>) -> Option<Poly<F>> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Poly<F> {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &Poly<F>) -> Poly<F> {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Vanishing order of `self` along the factor `phi` (`None` when self is zero).
    pub fn valuation(&self, phi: &Poly<F>) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut k = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.exact_div(phi) {
            cur = q;
            k += 1;
        }
        Some(k)
    }
}

impl Polynomial {
    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn x() -> Self {
        Polynomial::from_ints(&[0, 1])
    }

    pub fn constant_rat(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// Primitive integer polynomial with positive leading coefficient, and the
    /// rational unit u with self = u·result.
    pub fn primitive_part(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let den = common_denominator(self.coeffs());
        let ints: Vec<BigInt> = self.coeffs().iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = num_integer::Integer::gcd(&g, c);
        }
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Rational::new(g, den), prim)
    }

    /// Maximum absolute coefficient, a coefficient scale for residual checks.
    pub fn max_abs_coeff(&self) -> Rational {
        self.coeffs().iter().map(|c| c.abs()).max().unwrap_or_else(Rational::zero)
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.vanishes() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coef = fmt_rational(&a);
            match k {
                0 => out.push_str(&coef),
                _ => {
                    if !a.is_one() {
                        out.push_str(&coef);
                        out.push('*');
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("X"))
    }
}

pub(crate) fn nonzero<R: Ring>(f: &Poly<R>) -> Result<()> {
    if f.is_zero() {
        Err(Error::ZeroPolynomial)
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn arithmetic_and_degree() {
        let f = Polynomial::from_ints(&[-8, -12, 0, 4]);
        let g = Polynomial::from_ints(&[1, 1]);
        assert_eq!((&f * &g).degree(), Some(4));
        let (q, r) = f.div_rem(&g);
        assert!(r.is_zero());
        assert_eq!(q, Polynomial::from_ints(&[-8, -4, 4]));
        assert_eq!(f.gcd(&f.derivative()), Polynomial::from_ints(&[1, 1]));
        assert_eq!(f.valuation(&g), Some(2));
    }

    #[test]
    fn compose_and_eval() {
        let f = Polynomial::from_ints(&[0, 0, 1]);
        let g = Poly::affine(rat(2, 1), rat(1, 1));
        let h = f.compose(&g);
        assert_eq!(h, Polynomial::from_ints(&[1, 4, 4]));
        assert_eq!(h.eval(&rat(1, 2)), rat(4, 1));
    }

    #[test]
    fn display() {
        let f = Polynomial::from_ints(&[-8, -12, 0, 4]);
        assert_eq!(f.to_string(), "4*X^3 - 12*X - 8");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn primitive_part_recombines() {
        let f = Poly::new(vec![rat(-1, 2), rat(0, 1), rat(-3, 4)]);
        let (u, p) = f.primitive_part();
        let back: Vec<Rational> = p.iter().map(|c| &u * Rational::from_integer(c.clone())).collect();
        assert_eq!(Poly::new(back), f);
        assert!(p.last().unwrap() > &BigInt::zero());
    }
}
