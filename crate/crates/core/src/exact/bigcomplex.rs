use std::cell::RefCell;
use std::fmt;

use astro_float::{BigFloat, Consts, RoundingMode, Sign, Word};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

pub const DEFAULT_PRECISION: usize = 128;
pub const MAX_PRECISION: usize = 1024;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Exact binary float from an integer.
pub fn bf_from_bigint(n: &BigInt) -> BigFloat {
    if n.is_zero() {
        return BigFloat::from_u64(0, 64);
    }
    let words: Vec<Word> = n.magnitude().to_u64_digits();
    let sign = if n.is_negative() { Sign::Neg } else { Sign::Pos };
    BigFloat::from_words(&words, sign, (64 * words.len()) as i32)
}

pub fn bf_from_rational(r: &Rational, p: usize) -> BigFloat {
    let n = bf_from_bigint(r.numer());
    if r.denom().is_one() {
        let mut n = n;
        if n.precision().unwrap_or(0) > p {
            let _ = n.set_precision(p, RM);
        }
        return n;
    }
    n.div(&bf_from_bigint(r.denom()), p, RM)
}

/// Exact dyadic rational value of a finite binary float.
pub fn bf_to_rational(x: &BigFloat) -> Rational {
    let Some((m, _n, s, e, _)) = x.as_raw_parts() else {
        return Rational::zero();
    };
    let mag = BigInt::from(BigUint::new(m.iter().flat_map(|w| [*w as u32, (*w >> 32) as u32]).collect()));
    if mag.is_zero() {
        return Rational::zero();
    }
    let shift = e as i64 - 64 * m.len() as i64;
    let mut r = Rational::from_integer(mag);
    if shift >= 0 {
        r *= Rational::from_integer(BigInt::one() << shift as usize);
    } else {
        r /= Rational::from_integer(BigInt::one() << (-shift) as usize);
    }
    if s == Sign::Neg {
        -r
    } else {
        r
    }
}

pub fn bf_to_f64(x: &BigFloat) -> f64 {
    super::rational::to_f64(&bf_to_rational(x))
}

/// log2 |x|, roughly; -inf for zero.
pub fn bf_log2_abs(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    match x.exponent() {
        Some(e) => {
            let Some((m, _, _, _, _)) = x.as_raw_parts() else { return f64::NAN };
            let top = *m.last().unwrap() as f64 / 2f64.powi(64);
            e as f64 + top.log2()
        }
        None => f64::NAN,
    }
}

/// Fixed-point decimal with `digits` fractional digits, rounded half away from zero.
pub fn bf_to_decimal(x: &BigFloat, digits: usize) -> String {
    let r = bf_to_rational(x);
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r * Rational::from_integer(scale.clone());
    let neg = scaled.is_negative();
    let a = scaled.abs();
    let (q, rem) = a.numer().div_rem(a.denom());
    let mut q = q;
    if &rem * 2u32 >= *a.denom() {
        q += 1u32;
    }
    let (ip, fp) = q.div_rem(&scale);
    let mut s = String::new();
    if neg && !q.is_zero() {
        s.push('-');
    }
    s.push_str(&ip.to_string());
    if digits > 0 {
        s.push('.');
        let f = fp.to_string();
        s.push_str(&"0".repeat(digits - f.len()));
        s.push_str(&f);
    }
    s
}

/// Decimal digits that are meaningful at a given binary precision.
pub fn decimal_digits(prec: usize) -> usize {
    (prec as f64 * std::f64::consts::LOG10_2).floor() as usize
}

/// Complex number with arbitrary precision binary float parts.
#[derive(Clone, Debug)]
pub struct BigComplex {
    re: BigFloat,
    im: BigFloat,
    prec: usize,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat, prec: usize) -> Self {
        BigComplex { re, im, prec }
    }

    pub fn zero(prec: usize) -> Self {
        BigComplex::from_f64(0.0, 0.0, prec)
    }

    pub fn one(prec: usize) -> Self {
        BigComplex::from_f64(1.0, 0.0, prec)
    }

    pub fn i(prec: usize) -> Self {
        BigComplex::from_f64(0.0, 1.0, prec)
    }

    pub fn from_f64(re: f64, im: f64, prec: usize) -> Self {
        BigComplex { re: BigFloat::from_f64(re, prec), im: BigFloat::from_f64(im, prec), prec }
    }

    pub fn from_rational(r: &Rational, prec: usize) -> Self {
        BigComplex { re: bf_from_rational(r, prec), im: BigFloat::from_u64(0, prec), prec }
    }

    pub fn from_rationals(re: &Rational, im: &Rational, prec: usize) -> Self {
        BigComplex { re: bf_from_rational(re, prec), im: bf_from_rational(im, prec), prec }
    }

    /// Parse "re,im" where each part is a decimal or "p/q".
    pub fn parse(s: &str, prec: usize) -> Option<Self> {
        let (a, b) = s.split_once(',')?;
        let re = parse_real(a, prec)?;
        let im = parse_real(b, prec)?;
        Some(BigComplex { re, im, prec })
    }

    pub fn re(&self) -> &BigFloat {
        &self.re
    }

    pub fn im(&self) -> &BigFloat {
        &self.im
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn with_precision(&self, prec: usize) -> Self {
        let mut re = self.re.clone();
        let mut im = self.im.clone();
        let _ = re.set_precision(prec, RM);
        let _ = im.set_precision(prec, RM);
        BigComplex { re, im, prec }
    }

    pub fn pi(prec: usize) -> BigFloat {
        with_consts(|cc| cc.pi(prec, RM))
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec.min(o.prec);
        BigComplex { re: self.re.add(&o.re, p, RM), im: self.im.add(&o.im, p, RM), prec: p }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec.min(o.prec);
        BigComplex { re: self.re.sub(&o.re, p, RM), im: self.im.sub(&o.im, p, RM), prec: p }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec.min(o.prec);
        let w = p + 16;
        let re = self.re.mul(&o.re, w, RM).sub(&self.im.mul(&o.im, w, RM), p, RM);
        let im = self.re.mul(&o.im, w, RM).add(&self.im.mul(&o.re, w, RM), p, RM);
        BigComplex { re, im, prec: p }
    }

    pub fn scale(&self, x: &BigFloat) -> Self {
        BigComplex { re: self.re.mul(x, self.prec, RM), im: self.im.mul(x, self.prec, RM), prec: self.prec }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&bf_from_rational(r, self.prec + 16))
    }

    pub fn norm_sqr(&self) -> BigFloat {
        let w = self.prec + 16;
        self.re.mul(&self.re, w, RM).add(&self.im.mul(&self.im, w, RM), self.prec, RM)
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt(self.prec, RM)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// None on division by zero.
    pub fn div(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            return None;
        }
        let p = self.prec.min(o.prec);
        let w = p + 16;
        let d = o.norm_sqr();
        let num = self.mul(&o.conj());
        Some(BigComplex { re: num.re.div(&d, w, RM), im: num.im.div(&d, w, RM), prec: p }.with_precision(p))
    }

    pub fn recip(&self) -> Option<Self> {
        BigComplex::one(self.prec).div(self)
    }

    pub fn neg(&self) -> Self {
        BigComplex { re: self.re.neg(), im: self.im.neg(), prec: self.prec }
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: self.im.neg(), prec: self.prec }
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut acc = BigComplex::one(self.prec);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Principal argument in (−π, π].
    pub fn arg(&self) -> BigFloat {
        let p = self.prec + 16;
        with_consts(|cc| {
            let pi = cc.pi(p, RM);
            if self.re.is_zero() {
                if self.im.is_zero() {
                    return BigFloat::from_u64(0, p);
                }
                let half = pi.div(&BigFloat::from_u64(2, p), p, RM);
                return if self.im.is_negative() { half.neg() } else { half };
            }
            let t = self.im.div(&self.re, p, RM).atan(p, RM, cc);
            if self.re.is_negative() {
                if self.im.is_negative() {
                    t.sub(&pi, p, RM)
                } else {
                    t.add(&pi, p, RM)
                }
            } else {
                t
            }
        })
    }

    /// exp(z)
    pub fn exp(&self) -> Self {
        let p = self.prec;
        let w = p + 16;
        with_consts(|cc| {
            let m = self.re.exp(w, RM, cc);
            let c = self.im.cos(w, RM, cc);
            let s = self.im.sin(w, RM, cc);
            BigComplex { re: m.mul(&c, p, RM), im: m.mul(&s, p, RM), prec: p }
        })
    }

    /// Principal logarithm; None at zero.
    pub fn ln(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let p = self.prec;
        let w = p + 16;
        let lr = with_consts(|cc| self.norm_sqr().ln(w, RM, cc)).div(&BigFloat::from_u64(2, w), p, RM);
        Some(BigComplex { re: lr, im: self.arg(), prec: p }.with_precision(p))
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let p = self.prec;
        let w = p + 16;
        let r = self.abs().with_prec(w);
        let two = BigFloat::from_u64(2, w);
        // sqrt((r + re)/2) and sign(im)·sqrt((r − re)/2)
        let a = r.add(&self.re, w, RM).div(&two, w, RM).sqrt(w, RM);
        let b = r.sub(&self.re, w, RM).div(&two, w, RM).sqrt(w, RM);
        let b = if self.im.is_negative() { b.neg() } else { b };
        BigComplex { re: a, im: b, prec: w }.with_precision(p)
    }

    /// All n-th roots.
    pub fn nth_roots(&self, n: u32) -> Vec<Self> {
        let p = self.prec;
        if self.is_zero() {
            return vec![self.clone(); n as usize];
        }
        let w = p + 32;
        let z = self.with_precision(w);
        let l = z.ln().unwrap();
        let base = BigComplex { re: l.re.div(&BigFloat::from_u64(n as u64, w), w, RM), im: l.im.div(&BigFloat::from_u64(n as u64, w), w, RM), prec: w }.exp();
        let two_pi_n = Self::pi(w).mul(&BigFloat::from_u64(2, w), w, RM).div(&BigFloat::from_u64(n as u64, w), w, RM);
        (0..n)
            .map(|k| {
                let ang = two_pi_n.mul(&BigFloat::from_u64(k as u64, w), w, RM);
                let rot = BigComplex { re: BigFloat::from_u64(0, w), im: ang, prec: w }.exp();
                base.mul(&rot).with_precision(p)
            })
            .collect()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (bf_to_f64(&self.re), bf_to_f64(&self.im))
    }

    /// log2 of |z| (approximate), -inf at zero.
    pub fn log2_abs(&self) -> f64 {
        let a = bf_log2_abs(&self.re);
        let b = bf_log2_abs(&self.im);
        let m = a.max(b);
        if m == f64::NEG_INFINITY {
            return m;
        }
        m + 0.5 * (1.0 + 2f64.powf(2.0 * (a.min(b) - m))).log2()
    }

    /// Distance |z − w| as log2, for tolerance checks.
    pub fn log2_dist(&self, o: &Self) -> f64 {
        self.sub(o).log2_abs()
    }

    /// "re,im" with the digits warranted by the precision.
    pub fn to_wire(&self) -> String {
        let d = decimal_digits(self.prec);
        format!("{},{}", bf_to_decimal(&self.re, d), bf_to_decimal(&self.im, d))
    }
}

trait WithPrec {
    fn with_prec(self, p: usize) -> Self;
}

impl WithPrec for BigFloat {
    fn with_prec(mut self, p: usize) -> Self {
        let _ = self.set_precision(p, RM);
        self
    }
}

fn parse_real(s: &str, prec: usize) -> Option<BigFloat> {
    let t = s.trim();
    if let Ok(r) = super::rational::parse_rational(t) {
        return Some(bf_from_rational(&r, prec));
    }
    let x = with_consts(|cc| BigFloat::parse(t, astro_float::Radix::Dec, prec, RM, cc));
    if x.is_nan() || x.is_inf() {
        None
    } else {
        Some(x)
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_wire())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn rational_round_trip_is_exact_for_dyadics() {
        for r in [rat(3, 8), rat(-5, 1), rat(1, 1 << 20), rat(0, 1)] {
            assert_eq!(bf_to_rational(&bf_from_rational(&r, 128)), r);
        }
        let big = Rational::from_integer(BigInt::from(10).pow(50));
        assert_eq!(bf_to_rational(&bf_from_rational(&big, 256)), big);
    }

    #[test]
    fn third_is_close() {
        let x = bf_from_rational(&rat(1, 3), 128);
        let err = (bf_to_rational(&x) - rat(1, 3)).abs();
        assert!(err < Rational::new(1.into(), BigInt::one() << 127));
        assert_eq!(bf_to_decimal(&x, 5), "0.33333");
        assert_eq!(bf_to_decimal(&bf_from_rational(&rat(-2, 3), 128), 3), "-0.667");
    }

    #[test]
    fn precision_is_min_of_operands() {
        let a = BigComplex::one(128);
        let b = BigComplex::one(256);
        assert_eq!(a.add(&b).precision(), 128);
        assert_eq!(b.mul(&a).precision(), 128);
    }

    #[test]
    fn elementary_functions() {
        let p = 192;
        let pi = BigComplex::pi(p);
        let ipi = BigComplex::new(BigFloat::from_u64(0, p), pi, p);
        // e^{iπ} = −1
        let e = ipi.exp();
        assert!(e.log2_dist(&BigComplex::from_f64(-1.0, 0.0, p)) < -180.0);
        let s = BigComplex::from_f64(-4.0, 0.0, p).sqrt();
        assert!(s.log2_dist(&BigComplex::from_f64(0.0, 2.0, p)) < -180.0);
        let roots = BigComplex::from_f64(8.0, 0.0, p).nth_roots(3);
        for r in &roots {
            assert!(r.powi(3).log2_dist(&BigComplex::from_f64(8.0, 0.0, p)) < -170.0);
        }
        let z = BigComplex::from_f64(0.3, -1.7, p);
        assert!(z.ln().unwrap().exp().log2_dist(&z) < -180.0);
    }

    #[test]
    fn parse_wire() {
        let z = BigComplex::parse("-1/2,0.25", 128).unwrap();
        assert_eq!(z.to_f64(), (-0.5, 0.25));
        assert!(BigComplex::parse("1", 128).is_none());
    }
}
