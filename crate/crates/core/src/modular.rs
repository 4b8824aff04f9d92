//! Klein's modular function normalized to J(i) = 1, and the period vector
//! of a point (τ, u) of the product of two upper half planes.

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::bigcomplex::{bf_to_f64, bf_to_rational, MAX_PRECISION};
use crate::exact::{BigComplex, MPoly, Rational};

const GUARD_BITS: usize = 64;
const MAX_REDUCTION_STEPS: usize = 10_000;

/// σ_k(n) = Σ_{d | n} d^k.
pub fn divisor_power_sum(n: u64, k: u32) -> BigInt {
    let mut s = BigInt::zero();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            s += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                s += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    s
}

/// Standard fundamental domain representative: |Re τ| ≤ ½, |τ| ≥ 1.
pub fn reduce_to_fundamental_domain(tau: &BigComplex) -> Result<BigComplex> {
    if !tau.im().is_positive() {
        return Err(Error::Precondition("Im(tau) must be positive".into()));
    }
    let p = tau.precision();
    let mut t = tau.clone();
    let slack = Rational::new(BigInt::one(), BigInt::one() << (p / 2));
    for _ in 0..MAX_REDUCTION_STEPS {
        let n = bf_to_rational(t.re()).round();
        if !n.is_zero() {
            t = t.sub(&BigComplex::from_rational(&n, p));
        }
        let r2 = bf_to_rational(&t.norm_sqr());
        if r2 < Rational::one() - &slack {
            t = t.recip().ok_or(Error::PrecisionExhausted { bits: p })?.neg();
        } else {
            return Ok(t);
        }
    }
    Err(Error::PrecisionExhausted { bits: p })
}

/// Number of q-series terms so that 504·1.04·n⁵·|q|ⁿ drops below 2^(−bits)
/// for every omitted n (σ₅(n) < ζ(5)·n⁵ < 1.04·n⁵).
fn series_length(log2_abs_q: f64, bits: usize) -> Option<u64> {
    if log2_abs_q >= 0.0 {
        return None;
    }
    let c = (504.0f64 * 1.04).log2();
    let mut n = 1u64;
    loop {
        let t = c + 5.0 * (n as f64).log2() + n as f64 * log2_abs_q;
        // the geometric tail after n is at most twice the n-th term here
        if t + 1.0 < -(bits as f64) && n > 5 {
            return Some(n);
        }
        n += 1;
        if n > 100_000 {
            return None;
        }
    }
}

/// (E₄, E₆) at τ from their integer q-expansions.
pub fn eisenstein_e4_e6(tau: &BigComplex, prec: usize) -> Result<(BigComplex, BigComplex)> {
    let w = prec + GUARD_BITS;
    let t = tau.with_precision(w);
    let two_pi = BigComplex::pi(w).mul(&BigFloat::from_u64(2, w), w, astro_float::RoundingMode::ToEven);
    // 2πiτ = −2π·Im τ + i·2π·Re τ
    let z = BigComplex::new(t.im().neg(), t.re().clone(), w).scale(&two_pi);
    let q = z.exp();
    let log2q = -2.0 * std::f64::consts::PI * bf_to_f64(t.im()) * std::f64::consts::LOG2_E;
    let n_terms = series_length(log2q, w).ok_or(Error::PrecisionExhausted { bits: prec })?;
    let mut e4 = BigComplex::one(w);
    let mut e6 = BigComplex::one(w);
    let mut qn = BigComplex::one(w);
    for n in 1..=n_terms {
        qn = qn.mul(&q);
        let c4 = Rational::from_integer(BigInt::from(240) * divisor_power_sum(n, 3));
        let c6 = Rational::from_integer(BigInt::from(-504) * divisor_power_sum(n, 5));
        e4 = e4.add(&qn.scale_rational(&c4));
        e6 = e6.add(&qn.scale_rational(&c6));
    }
    Ok((e4, e6))
}

/// J(τ) = E₄³/(E₄³ − E₆²), evaluated after reduction to the fundamental domain.
pub fn modular_j(tau: &BigComplex, prec: usize) -> Result<BigComplex> {
    if prec > MAX_PRECISION {
        return Err(Error::PrecisionExhausted { bits: prec });
    }
    let w = prec + GUARD_BITS;
    let t = reduce_to_fundamental_domain(&tau.with_precision(w))?;
    let (e4, e6) = eisenstein_e4_e6(&t, prec)?;
    let e43 = e4.powi(3);
    let den = e43.sub(&e6.powi(2));
    let j = e43.div(&den).ok_or(Error::PrecisionExhausted { bits: prec })?;
    Ok(j.with_precision(prec))
}

/// A point of ℍ × ℍ.
#[derive(Clone, Debug)]
pub struct PeriodPoint {
    pub tau: BigComplex,
    pub u: BigComplex,
}

impl PeriodPoint {
    pub fn new(tau: BigComplex, u: BigComplex) -> Result<Self> {
        if !tau.im().is_positive() || !u.im().is_positive() {
            return Err(Error::Precondition("period point needs Im(tau) > 0 and Im(u) > 0".into()));
        }
        Ok(PeriodPoint { tau, u })
    }

    pub fn precision(&self) -> usize {
        self.tau.precision().min(self.u.precision())
    }
}

/// ω = τx₁ + x₂ + uy₁ − τu·y₂ in the basis {x₁, x₂, y₁, y₂} with
/// (x₁, y₁) = (x₂, y₂) = 1 and all other pairings zero.
#[derive(Clone, Debug)]
pub struct PeriodVector {
    pub coords: [BigComplex; 4],
    pub gram: [[i64; 4]; 4],
}

pub const PERIOD_GRAM: [[i64; 4]; 4] = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]];

impl PeriodVector {
    pub fn from_point(pt: &PeriodPoint) -> Self {
        let p = pt.precision();
        let coords = [pt.tau.clone(), BigComplex::one(p), pt.u.clone(), pt.tau.mul(&pt.u).neg()];
        PeriodVector { coords, gram: PERIOD_GRAM }
    }

    /// Bilinear (not Hermitian) pairing.
    pub fn pair(&self, o: &PeriodVector) -> BigComplex {
        let p = self.coords[0].precision();
        let mut acc = BigComplex::zero(p);
        for i in 0..4 {
            for j in 0..4 {
                if self.gram[i][j] != 0 {
                    let g = Rational::from_integer(self.gram[i][j].into());
                    acc = acc.add(&self.coords[i].mul(&o.coords[j]).scale_rational(&g));
                }
            }
        }
        acc
    }

    pub fn conj(&self) -> PeriodVector {
        PeriodVector { coords: self.coords.clone().map(|c| c.conj()), gram: self.gram }
    }
}

/// (ω, ω) with τ and u kept as indeterminates; zero as a polynomial.
pub fn symbolic_self_pairing() -> MPoly {
    let tau = MPoly::var(0);
    let u = MPoly::var(1);
    let coords = [tau.clone(), MPoly::constant(Rational::one()), u.clone(), tau.mul(&u).neg()];
    let mut acc = MPoly::zero();
    for (i, row) in PERIOD_GRAM.iter().enumerate() {
        for (j, &g) in row.iter().enumerate() {
            if g != 0 {
                acc = acc.add(&coords[i].mul(&coords[j]).scale(&Rational::from_integer(g.into())));
            }
        }
    }
    acc
}

#[derive(Clone, Debug)]
pub struct PeriodCertificate {
    pub symbolic_zero: bool,
    pub omega_omega: BigComplex,
    pub omega_omega_bar: BigComplex,
    /// 4·Im τ·Im u
    pub expected: BigComplex,
    pub log2_error: f64,
    pub positive: bool,
    /// log2 of the largest coordinate magnitude, for relative tolerances
    pub log2_scale: f64,
}

impl PeriodCertificate {
    pub fn holds(&self, prec: usize) -> bool {
        let tol = -(prec as f64) + 8.0 + 2.0 * self.log2_scale.max(0.0);
        self.symbolic_zero && self.positive && self.log2_error < tol && self.omega_omega.log2_abs() < tol
    }
}

pub fn period_vector_checks(pt: &PeriodPoint) -> PeriodCertificate {
    let p = pt.precision();
    let w = PeriodVector::from_point(pt);
    let ww = w.pair(&w);
    let wwb = w.pair(&w.conj());
    let four = Rational::from_integer(4.into());
    let expected = BigComplex::new(pt.tau.im().mul(pt.u.im(), p, astro_float::RoundingMode::ToEven), BigFloat::from_u64(0, p), p).scale_rational(&four);
    let log2_error = wwb.log2_dist(&expected);
    PeriodCertificate {
        symbolic_zero: symbolic_self_pairing().is_zero(),
        omega_omega: ww,
        positive: wwb.re().is_positive(),
        omega_omega_bar: wwb,
        expected,
        log2_error,
        log2_scale: w.coords.iter().map(|c| c.log2_abs()).fold(f64::NEG_INFINITY, f64::max),
    }
}

/// (σ, π) = (J(τ) + J(u), J(τ)·J(u)).
pub fn sigma_pi_from_periods(pt: &PeriodPoint, prec: usize) -> Result<(BigComplex, BigComplex)> {
    let jt = modular_j(&pt.tau, prec)?;
    let ju = modular_j(&pt.u, prec)?;
    Ok((jt.add(&ju), jt.mul(&ju)))
}

/// Number of bits of agreement implied by a log2 error.
pub fn bits_below(err_log2: f64) -> i64 {
    if err_log2 == f64::NEG_INFINITY {
        i64::MAX
    } else {
        (-err_log2).floor().to_i64().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn rho(prec: usize) -> BigComplex {
        // e^{2πi/3} = −½ + i·√3/2
        let s3 = BigComplex::from_rational(&rat(3, 1), prec + 32).sqrt().scale_rational(&rat(1, 2));
        BigComplex::new(BigFloat::from_f64(-0.5, prec + 32), s3.re().clone(), prec + 32).with_precision(prec)
    }

    #[test]
    fn divisor_sums() {
        assert_eq!(divisor_power_sum(6, 3), BigInt::from(1 + 8 + 27 + 216));
        assert_eq!(divisor_power_sum(1, 5), BigInt::from(1));
        assert_eq!(divisor_power_sum(4, 5), BigInt::from(1 + 32 + 1024));
    }

    #[test]
    fn normalization_points() {
        let p = 128;
        let one = BigComplex::one(p);
        let j_i = modular_j(&BigComplex::i(p), p).unwrap();
        assert!(j_i.log2_dist(&one) < -100.0);
        let j_rho = modular_j(&rho(p), p).unwrap();
        assert!(j_rho.log2_abs() < -100.0);
        // (1 + i√3)/2 = ρ + 1
        let rho1 = rho(p).add(&BigComplex::one(p));
        let j_rho1 = modular_j(&rho1, p).unwrap();
        assert!(j_rho1.log2_abs() < -100.0);
    }

    #[test]
    fn known_value_at_2i() {
        // j(2i) = 66³, J = j/1728
        let p = 128;
        let j = modular_j(&BigComplex::from_f64(0.0, 2.0, p), p).unwrap();
        let want = BigComplex::from_rational(&rat(287496, 1728), p);
        assert!(j.log2_dist(&want) < -90.0);
    }

    #[test]
    fn reduction_lands_in_domain() {
        let t = BigComplex::from_f64(7.3, 0.01, 128);
        let r = reduce_to_fundamental_domain(&t).unwrap();
        let (x, y) = r.to_f64();
        assert!(x.abs() <= 0.5 + 1e-12 && x * x + y * y >= 1.0 - 1e-12);
        assert!(reduce_to_fundamental_domain(&BigComplex::from_f64(0.0, -1.0, 64)).is_err());
    }

    #[test]
    fn periods_at_i_i() {
        let p = 128;
        let pt = PeriodPoint::new(BigComplex::i(p), BigComplex::i(p)).unwrap();
        let (s, pi) = sigma_pi_from_periods(&pt, p).unwrap();
        assert!(s.log2_dist(&BigComplex::from_f64(2.0, 0.0, p)) < -100.0);
        assert!(pi.log2_dist(&BigComplex::one(p)) < -100.0);
        let c = period_vector_checks(&pt);
        assert!(c.holds(p));
        assert!(c.omega_omega_bar.log2_dist(&BigComplex::from_f64(4.0, 0.0, p)) < -100.0);
        let pt = PeriodPoint::new(BigComplex::from_f64(0.0, 2.0, p), BigComplex::from_f64(0.0, 3.0, p)).unwrap();
        let c = period_vector_checks(&pt);
        assert!(c.omega_omega_bar.log2_dist(&BigComplex::from_f64(24.0, 0.0, p)) < -100.0);
    }

    #[test]
    fn symbolic_pairing_cancels() {
        assert!(symbolic_self_pairing().is_zero());
    }
}
