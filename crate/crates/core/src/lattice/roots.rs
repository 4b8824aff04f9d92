//! Enumeration of (−2)-vectors in a negative definite lattice.

use super::Lattice;
use crate::error::{Error, Result};

pub const MAX_ROOT_RANK: usize = 18;

/// All v with v·v = −2, in basis coordinates, in lexicographic order.
///
/// Works on Q = −G: Q(x) = Σᵢ qᵢᵢ (xᵢ + Σ_{j>i} qᵢⱼ xⱼ)², enumerated from the
/// last coordinate down with the remaining budget bounding each range.
pub fn roots(lat: &Lattice) -> Result<Vec<Vec<i64>>> {
    vectors_of_norm(lat, 2)
}

pub fn vectors_of_norm(lat: &Lattice, norm: i64) -> Result<Vec<Vec<i64>>> {
    let n = lat.rank();
    if n > MAX_ROOT_RANK {
        return Err(Error::Precondition(format!("rank {n} exceeds {MAX_ROOT_RANK}")));
    }
    if !lat.is_negative_definite() {
        return Err(Error::IndefiniteLattice);
    }
    let q: Vec<Vec<f64>> = lat.gram.iter().map(|r| r.iter().map(|&x| -x as f64).collect()).collect();
    // upper-triangular Cholesky-style coefficients
    let mut c = q.clone();
    for i in 0..n {
        for j in i + 1..n {
            c[j][i] = c[i][j];
            c[i][j] /= c[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                c[k][l] -= c[k][i] * c[i][l];
            }
        }
    }
    let bound = norm as f64 + 1e-6;
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    let mut rem = vec![0f64; n + 1];
    rem[n] = bound;
    enumerate(n, n, &c, &mut x, &mut rem, &mut |v| {
        if lat.pair(v, v) == -norm {
            out.push(v.to_vec());
        }
    });
    out.sort();
    Ok(out)
}

fn enumerate(n: usize, level: usize, c: &[Vec<f64>], x: &mut [i64], rem: &mut [f64], f: &mut impl FnMut(&[i64])) {
    if level == 0 {
        if x.iter().any(|&t| t != 0) {
            f(x);
        }
        return;
    }
    let i = level - 1;
    let center: f64 = -(i + 1..n).map(|j| c[i][j] * x[j] as f64).sum::<f64>();
    let budget = rem[level];
    let r = (budget / c[i][i]).max(0.0).sqrt();
    let lo = (center - r - 1e-9).ceil() as i64;
    let hi = (center + r + 1e-9).floor() as i64;
    for t in lo..=hi {
        let d = t as f64 - center;
        let left = budget - c[i][i] * d * d;
        if left < -1e-9 {
            continue;
        }
        x[i] = t;
        rem[i] = left.max(0.0);
        enumerate(n, i, c, x, rem, f);
    }
    x[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{named_lattice, nikulin};
    use crate::exact::Rational;

    #[test]
    fn e8_has_240_roots() {
        let r = roots(&named_lattice("E8").unwrap()).unwrap();
        assert_eq!(r.len(), 240);
        for v in &r {
            let neg: Vec<i64> = v.iter().map(|x| -x).collect();
            assert!(r.binary_search(&neg).is_ok());
        }
    }

    #[test]
    fn nikulin_roots_are_the_sixteen_curves() {
        let nk = nikulin();
        let r = roots(&nk.lattice).unwrap();
        assert_eq!(r.len(), 16);
        for v in &r {
            let amb = nk.to_ambient(v);
            let nonzero: Vec<&Rational> = amb.iter().filter(|x| !num_traits::Zero::is_zero(*x)).collect();
            assert_eq!(nonzero.len(), 1);
            assert_eq!(num_traits::Signed::abs(nonzero[0]), Rational::from_integer(1.into()));
        }
    }

    #[test]
    fn indefinite_rejected() {
        let l = named_lattice("DK_complement").unwrap();
        assert_eq!(roots(&l), Err(Error::IndefiniteLattice));
    }

    #[test]
    fn d16plus_and_kummer_counts() {
        assert_eq!(roots(&named_lattice("D16plus").unwrap()).unwrap().len(), 480);
        assert_eq!(roots(&named_lattice("Kummer").unwrap()).unwrap().len(), 32);
    }
}
