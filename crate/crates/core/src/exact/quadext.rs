use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, rational_sqrt, Rational};
use super::ring::{Field, Ring};

/// base + coeff·√radicand. The radicand is kept as an integer with its
/// square factors below 2^16 (and a perfect-square cofactor) removed.
#[derive(Clone, Debug)]
pub struct QuadExtElement {
    base: Rational,
    coeff: Rational,
    radicand: Rational,
}

const TRIAL_LIMIT: u64 = 1 << 16;

fn small_primes() -> &'static [u64] {
    use std::sync::OnceLock;
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; n];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i < n {
            if sieve[i] {
                let mut j = i * i;
                while j < n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (0..n).filter(|&k| sieve[k]).map(|k| k as u64).collect()
    })
}

/// Split an integer m as s²·m' with m' free of the detectable square factors.
fn split_square(m: &BigInt) -> (BigInt, BigInt) {
    let neg = m.is_negative();
    let mut rest = m.abs();
    let mut s = BigInt::one();
    if rest.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    for &p in small_primes() {
        let pb = BigInt::from(p);
        let p2 = &pb * &pb;
        if p2 > rest {
            break;
        }
        while (&rest % &p2).is_zero() {
            rest /= &p2;
            s *= &pb;
        }
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        s *= r;
        rest = BigInt::one();
    }
    if neg {
        rest = -rest;
    }
    (s, rest)
}

impl QuadExtElement {
    pub fn new(base: Rational, coeff: Rational, radicand: Rational) -> Self {
        if radicand.is_zero() || coeff.is_zero() {
            return QuadExtElement::rational(base);
        }
        let mut e = QuadExtElement { base, coeff, radicand: Rational::zero() };
        // r = n/d = n·d / d²
        let m = radicand.numer() * radicand.denom();
        let (s, rest) = split_square(&m);
        let factor = Rational::new(s, radicand.denom().clone());
        e.coeff = &e.coeff * factor;
        if rest.is_one() {
            e.base = &e.base + &e.coeff;
            e.coeff = Rational::zero();
            e.radicand = Rational::one();
        } else {
            e.radicand = Rational::from_integer(rest);
        }
        e
    }

    pub fn rational(r: Rational) -> Self {
        QuadExtElement { base: r, coeff: Rational::zero(), radicand: Rational::one() }
    }

    /// √r as an element.
    pub fn sqrt_of(r: &Rational) -> Self {
        QuadExtElement::new(Rational::zero(), Rational::one(), r.clone())
    }

    pub fn base(&self) -> &Rational {
        &self.base
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.base.clone())
    }

    pub fn conj(&self) -> Self {
        QuadExtElement { base: self.base.clone(), coeff: -&self.coeff, radicand: self.radicand.clone() }
    }

    /// base² − coeff²·radicand
    pub fn norm(&self) -> Rational {
        &self.base * &self.base - &self.coeff * &self.coeff * &self.radicand
    }

    pub fn trace(&self) -> Rational {
        &self.base + &self.base
    }

    /// Express both operands over a common radicand.
    fn align(&self, o: &Self) -> (Self, Self) {
        if self.coeff.is_zero() {
            let mut a = self.clone();
            a.radicand = o.radicand.clone();
            return (a, o.clone());
        }
        if o.coeff.is_zero() || self.radicand == o.radicand {
            let mut b = o.clone();
            b.radicand = self.radicand.clone();
            return (self.clone(), b);
        }
        // √r2 = t·√r1 with t² = r2/r1
        let t = rational_sqrt(&(&o.radicand / &self.radicand)).expect("elements from different quadratic fields");
        let b = QuadExtElement { base: o.base.clone(), coeff: &o.coeff * t, radicand: self.radicand.clone() };
        (self.clone(), b)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        use super::rational::to_f64;
        let r = to_f64(&self.radicand);
        let c = to_f64(&self.coeff);
        if r >= 0.0 {
            (to_f64(&self.base) + c * r.sqrt(), 0.0)
        } else {
            (to_f64(&self.base), c * (-r).sqrt())
        }
    }
}

impl PartialEq for QuadExtElement {
    fn eq(&self, o: &Self) -> bool {
        if self.base != o.base {
            return false;
        }
        match (self.coeff.is_zero(), o.coeff.is_zero()) {
            (true, true) => true,
            (false, false) => {
                self.coeff.signum() == o.coeff.signum()
                    && &self.coeff * &self.coeff * &self.radicand == &o.coeff * &o.coeff * &o.radicand
            }
            _ => false,
        }
    }
}

impl Ring for QuadExtElement {
    fn embed(&self, r: &Rational) -> Self {
        QuadExtElement { base: r.clone(), coeff: Rational::zero(), radicand: self.radicand.clone() }
    }
    fn vanishes(&self) -> bool {
        self.base.is_zero() && self.coeff.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        let (a, b) = self.align(o);
        QuadExtElement { base: &a.base + &b.base, coeff: &a.coeff + &b.coeff, radicand: a.radicand }
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }
    fn times(&self, o: &Self) -> Self {
        let (a, b) = self.align(o);
        let base = &a.base * &b.base + &a.coeff * &b.coeff * &a.radicand;
        let coeff = &a.base * &b.coeff + &a.coeff * &b.base;
        QuadExtElement { base, coeff, radicand: a.radicand }
    }
    fn negated(&self) -> Self {
        QuadExtElement { base: -&self.base, coeff: -&self.coeff, radicand: self.radicand.clone() }
    }
}

impl Field for QuadExtElement {
    fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(QuadExtElement { base: &c.base / &n, coeff: &c.coeff / &n, radicand: c.radicand })
    }
}

impl fmt::Display for QuadExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            write!(f, "{}", fmt_rational(&self.base))
        } else {
            write!(f, "{} + ({})*sqrt({})", fmt_rational(&self.base), fmt_rational(&self.coeff), fmt_rational(&self.radicand))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn canonical_radicand() {
        let x = QuadExtElement::new(rat(0, 1), rat(1, 1), rat(12, 1));
        assert_eq!(x.radicand(), &rat(3, 1));
        assert_eq!(x.coeff(), &rat(2, 1));
        let y = QuadExtElement::new(rat(1, 1), rat(1, 1), rat(9, 4));
        assert!(y.is_rational());
        assert_eq!(y.as_rational(), Some(rat(5, 2)));
        let z = QuadExtElement::new(rat(0, 1), rat(1, 1), rat(1, 2));
        assert_eq!(z.radicand(), &rat(2, 1));
        assert_eq!(z.coeff(), &rat(1, 2));
    }

    #[test]
    fn square_of_sqrt_is_rational() {
        let s = QuadExtElement::sqrt_of(&rat(-3, 5));
        assert_eq!(s.times(&s), QuadExtElement::rational(rat(-3, 5)));
    }

    #[test]
    fn large_square_factor_equality() {
        // 65537 is above the trial-division bound
        let p = BigInt::from(65537);
        let r = Rational::from_integer(&p * &p * 7);
        let a = QuadExtElement::sqrt_of(&r);
        let b = QuadExtElement::new(rat(0, 1), Rational::from_integer(p), rat(7, 1));
        assert_eq!(a, b);
        let d = a.minus(&b);
        assert!(d.vanishes());
    }

    #[test]
    fn inverse() {
        let x = QuadExtElement::new(rat(1, 1), rat(2, 1), rat(5, 1));
        let y = x.inverse().unwrap();
        assert_eq!(x.times(&y), x.one_like());
    }
}
