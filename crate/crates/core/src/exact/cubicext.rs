use std::fmt;

use num_traits::{One, Zero};

use super::rational::{fmt_rational, rational_cbrt, Rational};
use super::ring::{Field, Ring};

/// c0 + c1·q + c2·q² in ℚ[q]/(q³ − m).
#[derive(Clone, PartialEq, Debug)]
pub struct CubicExtElement {
    c: [Rational; 3],
    modulus: Rational,
}

impl CubicExtElement {
    pub fn new(c0: Rational, c1: Rational, c2: Rational, modulus: Rational) -> Self {
        CubicExtElement { c: [c0, c1, c2], modulus }
    }

    pub fn rational(r: Rational, modulus: &Rational) -> Self {
        CubicExtElement::new(r, Rational::zero(), Rational::zero(), modulus.clone())
    }

    /// The generator q.
    pub fn generator(modulus: &Rational) -> Self {
        CubicExtElement::new(Rational::zero(), Rational::one(), Rational::zero(), modulus.clone())
    }

    pub fn coeffs(&self) -> &[Rational; 3] {
        &self.c
    }

    pub fn modulus(&self) -> &Rational {
        &self.modulus
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.c[0].clone())
    }

    /// Rational cube root of the modulus when the ring splits off ℚ.
    pub fn rational_generator(&self) -> Option<Rational> {
        rational_cbrt(&self.modulus)
    }

    /// Image under q ↦ r for a rational r with r³ = modulus.
    pub fn specialize(&self, r: &Rational) -> Rational {
        &self.c[0] + &self.c[1] * r + &self.c[2] * r * r
    }

    /// N(x) = c0³ + m·c1³ + m²·c2³ − 3m·c0c1c2
    pub fn norm(&self) -> Rational {
        let [c0, c1, c2] = &self.c;
        let m = &self.modulus;
        c0 * c0 * c0 + m * c1 * c1 * c1 + m * m * c2 * c2 * c2 - Rational::from_integer(3.into()) * m * c0 * c1 * c2
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.modulus, o.modulus, "cubic ring elements with different moduli");
    }
}

impl Ring for CubicExtElement {
    fn embed(&self, r: &Rational) -> Self {
        CubicExtElement::rational(r.clone(), &self.modulus)
    }
    fn vanishes(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
    fn plus(&self, o: &Self) -> Self {
        self.check(o);
        CubicExtElement {
            c: [&self.c[0] + &o.c[0], &self.c[1] + &o.c[1], &self.c[2] + &o.c[2]],
            modulus: self.modulus.clone(),
        }
    }
    fn minus(&self, o: &Self) -> Self {
        self.check(o);
        CubicExtElement {
            c: [&self.c[0] - &o.c[0], &self.c[1] - &o.c[1], &self.c[2] - &o.c[2]],
            modulus: self.modulus.clone(),
        }
    }
    fn times(&self, o: &Self) -> Self {
        self.check(o);
        let [a0, a1, a2] = &self.c;
        let [b0, b1, b2] = &o.c;
        let m = &self.modulus;
        if o.is_rational() {
            return CubicExtElement { c: [a0 * b0, a1 * b0, a2 * b0], modulus: m.clone() };
        }
        if self.is_rational() {
            return CubicExtElement { c: [a0 * b0, a0 * b1, a0 * b2], modulus: m.clone() };
        }
        let c0 = a0 * b0 + m * (a1 * b2 + a2 * b1);
        let c1 = a0 * b1 + a1 * b0 + m * a2 * b2;
        let c2 = a0 * b2 + a1 * b1 + a2 * b0;
        CubicExtElement { c: [c0, c1, c2], modulus: m.clone() }
    }
    fn negated(&self) -> Self {
        CubicExtElement { c: [-&self.c[0], -&self.c[1], -&self.c[2]], modulus: self.modulus.clone() }
    }
}

impl Field for CubicExtElement {
    /// Adjugate over the norm; `None` for zero divisors.
    fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let [c0, c1, c2] = &self.c;
        let m = &self.modulus;
        let adj = [c0 * c0 - m * c1 * c2, m * c2 * c2 - c0 * c1, c1 * c1 - c0 * c2];
        Some(CubicExtElement { c: adj.map(|x| x / &n), modulus: m.clone() })
    }
}

impl fmt::Display for CubicExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            parts.push(match k {
                0 => fmt_rational(x),
                1 => format!("({})*q", fmt_rational(x)),
                _ => format!("({})*q^2", fmt_rational(x)),
            });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn q_cubed_reduces() {
        let m = rat(-1, 9);
        let q = CubicExtElement::generator(&m);
        assert_eq!(q.times(&q).times(&q), CubicExtElement::rational(m.clone(), &m));
    }

    #[test]
    fn inverse_of_generator() {
        let m = rat(5, 1);
        let q = CubicExtElement::generator(&m);
        let inv = q.inverse().unwrap();
        assert_eq!(inv, CubicExtElement::new(rat(0, 1), rat(0, 1), rat(1, 5), m.clone()));
        let x = CubicExtElement::new(rat(1, 1), rat(-2, 3), rat(7, 2), m.clone());
        assert_eq!(x.times(&x.inverse().unwrap()), x.one_like());
    }

    #[test]
    fn split_ring_zero_divisor() {
        // q³ = 8: (q − 2) is a zero divisor
        let m = rat(8, 1);
        let x = CubicExtElement::new(rat(-2, 1), rat(1, 1), rat(0, 1), m);
        assert!(x.inverse().is_none());
    }
}
