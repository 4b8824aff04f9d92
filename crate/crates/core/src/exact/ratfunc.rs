use std::fmt;

use num_traits::Zero;

use super::poly::{nonzero, Polynomial};
use super::rational::Rational;
use super::ring::Field;
use crate::error::{Error, Result};

/// num/den with gcd(num, den) = 1 and den monic.
#[derive(Clone, PartialEq, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        nonzero(&den)?;
        let g = num.gcd(&den);
        let (mut n, mut d) = if num.is_zero() {
            (Polynomial::zero(), Polynomial::constant_rat(Rational::from_integer(1.into())))
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        if let Some(l) = d.leading().cloned() {
            let inv = l.inverse().unwrap();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        Ok(RationalFunction { num: n, den: d })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::from_ints(&[1]) }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    /// `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        RationalFunction::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }

    pub fn add(&self, o: &Self) -> Self {
        RationalFunction::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).unwrap()
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.num.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        RationalFunction::new(&self.num * &o.den, &self.den * &o.num)
    }

    /// f(g) for a polynomial argument g.
    pub fn compose_poly(&self, g: &Polynomial) -> Result<Self> {
        RationalFunction::new(self.num.compose(g), self.den.compose(g))
    }

    /// Pole order along a factor of the denominator (0 if not a pole).
    pub fn pole_order(&self, phi: &Polynomial) -> u32 {
        self.den.valuation(phi).unwrap_or(0)
    }
}

/// True iff f.num·g.den = g.num·f.den.
pub fn rational_function_equal(f: &RationalFunction, g: &RationalFunction) -> bool {
    &f.num * &g.den == &g.num * &f.den
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_compares() {
        let f = RationalFunction::new(Polynomial::from_ints(&[-1, 0, 1]), Polynomial::from_ints(&[-1, 1])).unwrap();
        let g = RationalFunction::from_poly(Polynomial::from_ints(&[1, 1]));
        assert!(rational_function_equal(&f, &g));
        assert_eq!(f, g);
        let x = RationalFunction::from_poly(Polynomial::x());
        assert!(!rational_function_equal(&x, &g));
    }

    #[test]
    fn monic_denominator() {
        let f = RationalFunction::new(Polynomial::from_ints(&[3]), Polynomial::from_ints(&[0, 6])).unwrap();
        assert_eq!(f.den(), &Polynomial::x());
        assert_eq!(f.num(), &Polynomial::constant_rat(Rational::new(1.into(), 2.into())));
        assert!(RationalFunction::new(Polynomial::x(), Polynomial::zero()).is_err());
    }
}
