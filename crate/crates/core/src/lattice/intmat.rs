//! Dense integer matrices over BigInt: Hermite and Smith normal forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn from_i64(m: &[Vec<i64>]) -> IntMatrix {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| row.iter().zip(b.iter()).fold(BigInt::zero(), |acc, (x, br)| acc + x * &br[j]))
                .collect()
        })
        .collect()
}

pub fn transpose(a: &IntMatrix) -> IntMatrix {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Row-style Hermite normal form; returns the nonzero rows, which form a
/// basis of the row lattice. Pivots are positive and entries above a pivot
/// are reduced into [0, pivot).
pub fn hermite_rows(gens: &IntMatrix) -> IntMatrix {
    let mut a = gens.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            // smallest nonzero entry in column c at or below r
            let piv = (r..rows).filter(|&i| !a[i][c].is_zero()).min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(p) = piv else { break };
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].div_floor(&a[r][c]);
                let pr = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(pr.iter()) {
                    *x -= &f * y;
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a.get(r).is_none_or(|row| row[c].is_zero()) {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -&*x;
            }
        }
        let pr = a[r].clone();
        for i in 0..r {
            let f = a[i][c].div_floor(&pr[c]);
            if !f.is_zero() {
                for (x, y) in a[i].iter_mut().zip(pr.iter()) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

/// Smith normal form U·A·V = D with U, V unimodular.
pub struct Smith {
    pub diag: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith(a0: &IntMatrix) -> Smith {
    let mut a = a0.clone();
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut u = identity(m);
    let mut v = identity(n);

    fn swap_cols(a: &mut IntMatrix, i: usize, j: usize) {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
    // col_j -= f·col_i
    fn col_axpy(a: &mut IntMatrix, j: usize, i: usize, f: &BigInt) {
        for row in a.iter_mut() {
            let t = &row[i] * f;
            row[j] -= t;
        }
    }
    fn row_axpy(a: &mut IntMatrix, j: usize, i: usize, f: &BigInt) {
        let ri = a[i].clone();
        for (x, y) in a[j].iter_mut().zip(ri.iter()) {
            *x -= f * y;
        }
    }

    let t_max = m.min(n);
    for t in 0..t_max {
        // pivot: smallest nonzero in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let mut changed = false;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let f = a[i][t].div_floor(&a[t][t]);
                row_axpy(&mut a, i, t, &f);
                row_axpy(&mut u, i, t, &f);
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    u.swap(t, i);
                    changed = true;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let f = a[t][j].div_floor(&a[t][t]);
                col_axpy(&mut a, j, t, &f);
                col_axpy(&mut v, j, t, &f);
                if !a[t][j].is_zero() {
                    swap_cols(&mut a, t, j);
                    swap_cols(&mut v, t, j);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // divisibility of the trailing block
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    // add row i into row t and redo
                    let mone = -BigInt::one();
                    row_axpy(&mut a, t, i, &mone);
                    row_axpy(&mut u, t, i, &mone);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    let diag = (0..t_max).map(|i| a[i][i].clone()).collect();
    Smith { diag, u, v }
}

/// Basis (as rows) of the integer kernel {x : A·x = 0}; the kernel is
/// automatically saturated in ℤⁿ.
pub fn integer_kernel(a: &IntMatrix, n: usize) -> IntMatrix {
    if a.is_empty() {
        return identity(n);
    }
    let s = smith(a);
    let r = s.rank();
    (r..n).map(|j| s.v.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn determinant(a: &IntMatrix) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let s = smith(a);
    if s.rank() < n {
        return BigInt::zero();
    }
    // |det| from the diagonal; sign from a fraction-free elimination
    let abs: BigInt = s.diag.iter().product();
    let sign = bareiss_sign(a);
    if sign < 0 {
        -abs
    } else {
        abs
    }
}

/// Sign of the determinant via Bareiss elimination (exact).
fn bareiss_sign(a0: &IntMatrix) -> i32 {
    let mut a = a0.clone();
    let n = a.len();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else { return 0 };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if a[n - 1][n - 1].is_negative() {
        -sign
    } else {
        sign
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_of_small_matrix() {
        let a = from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = smith(&a);
        let d: Vec<i64> = s.diag.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(d, vec![2, 6, 12]);
        let uav = mat_mul(&mat_mul(&s.u, &a), &s.v);
        for (i, row) in uav.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(*x, if i == j { s.diag[i].clone() } else { BigInt::zero() });
            }
        }
    }

    #[test]
    fn determinant_with_sign() {
        assert_eq!(determinant(&from_i64(&[vec![0, 1], vec![1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(&from_i64(&[vec![2, 1], vec![1, 2]])), BigInt::from(3));
        assert_eq!(determinant(&from_i64(&[vec![1, 2], vec![2, 4]])), BigInt::zero());
    }

    #[test]
    fn hermite_extracts_basis() {
        let g = from_i64(&[vec![2, 0], vec![0, 2], vec![1, 1]]);
        let h = hermite_rows(&g);
        assert_eq!(h, from_i64(&[vec![1, 1], vec![0, 2]]));
    }

    #[test]
    fn kernel_is_saturated() {
        let a = from_i64(&[vec![2, 4, 6]]);
        let k = integer_kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for row in &k {
            let s: BigInt = row.iter().zip([2, 4, 6]).map(|(x, c)| x * c).sum();
            assert!(s.is_zero());
        }
        // index 1 in the full kernel: the 2×2 minors have gcd 1
        let m01 = &k[0][0] * &k[1][1] - &k[0][1] * &k[1][0];
        let m02 = &k[0][0] * &k[1][2] - &k[0][2] * &k[1][0];
        let m12 = &k[0][1] * &k[1][2] - &k[0][2] * &k[1][1];
        assert!(m01.gcd(&m02).gcd(&m12).is_one());
    }
}
