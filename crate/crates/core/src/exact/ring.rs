use std::fmt::Debug;

use num_traits::{One, Zero};

use super::rational::Rational;

/// Commutative ring containing the rationals. Every element knows how to
/// embed rational constants into its own ring (needed for quotient rings
/// whose modulus is carried by the element).
pub trait Ring: Clone + PartialEq + Debug {
    fn embed(&self, r: &Rational) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;

    fn zero_like(&self) -> Self {
        self.embed(&Rational::zero())
    }
    fn one_like(&self) -> Self {
        self.embed(&Rational::one())
    }
    fn times_int(&self, n: i64) -> Self {
        self.times(&self.embed(&Rational::from_integer(n.into())))
    }
    fn pow(&self, n: u32) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

pub trait Field: Ring {
    /// `None` for zero (or a zero divisor when the ring is not a field).
    fn inverse(&self) -> Option<Self>;

    fn divided(&self, o: &Self) -> Option<Self> {
        o.inverse().map(|inv| self.times(&inv))
    }
}

impl Ring for Rational {
    fn embed(&self, r: &Rational) -> Self {
        r.clone()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Field for Rational {
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}
