//! Integer lattices given by Gram matrices, the named lattices used for the
//! Kummer and Shioda-Inose checks, discriminant forms, root enumeration and
//! curve configurations.

pub mod config;
pub mod disc;
pub mod intmat;
pub mod roots;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::Rational;
use intmat::{from_i64, hermite_rows, integer_kernel, smith, IntMatrix};

pub use config::{curve_config, divisor_square, shipped_fiber_divisors, CurveConfig, DivisorClass, FiberDivisor};
pub use disc::{discriminant_form, DiscriminantForm};
pub use roots::roots;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub name: String,
    pub gram: Vec<Vec<i64>>,
}

impl Lattice {
    pub fn new(name: impl Into<String>, gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        for row in &gram {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: row.len() });
            }
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Precondition(format!("Gram matrix not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(Lattice { name: name.into(), gram })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[i][i] % 2 == 0)
    }

    pub fn det(&self) -> BigInt {
        intmat::determinant(&from_i64(&self.gram))
    }

    pub fn pair(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut s = 0;
        for (i, ui) in u.iter().enumerate() {
            if *ui == 0 {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                s += ui * self.gram[i][j] * vj;
            }
        }
        s
    }

    /// (positive, negative, zero) eigenvalue counts.
    pub fn signature(&self) -> (usize, usize, usize) {
        signature(&self.gram)
    }

    pub fn is_negative_definite(&self) -> bool {
        let (p, _, z) = self.signature();
        p == 0 && z == 0
    }

    pub fn direct_sum(&self, o: &Lattice, name: impl Into<String>) -> Lattice {
        let (n, m) = (self.rank(), o.rank());
        let mut g = vec![vec![0; n + m]; n + m];
        for i in 0..n {
            g[i][..n].copy_from_slice(&self.gram[i]);
        }
        for i in 0..m {
            g[n + i][n..].copy_from_slice(&o.gram[i]);
        }
        Lattice { name: name.into(), gram: g }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "name": self.name, "rank": self.rank(), "gram": self.gram })
    }
}

/// Signature by symmetric elimination over ℚ (congruence, so inertia is kept).
pub fn signature(gram: &[Vec<i64>]) -> (usize, usize, usize) {
    let n = gram.len();
    let mut a: Vec<Vec<Rational>> = gram.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
    let swap = |a: &mut Vec<Vec<Rational>>, i: usize, j: usize| {
        a.swap(i, j);
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    };
    let (mut pos, mut neg) = (0, 0);
    for k in 0..n {
        if let Some(i) = (k..n).find(|&i| !a[i][i].is_zero()) {
            swap(&mut a, k, i);
        } else if let Some((i, j)) = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero()) {
            // zero diagonal: row/col i += row/col j gives diagonal 2·a[i][j]
            for c in 0..n {
                let t = a[j][c].clone();
                a[i][c] += t;
            }
            for r in 0..n {
                let t = a[r][j].clone();
                a[r][i] += t;
            }
            swap(&mut a, k, i);
        } else {
            break;
        }
        if a[k][k].is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let piv = a[k][k].clone();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &piv;
            for c in k..n {
                let t = &f * &a[k][c];
                a[i][c] -= t;
            }
        }
        for i in k + 1..n {
            a[k][i] = Rational::zero();
        }
    }
    (pos, neg, n - pos - neg)
}

/// A lattice given by a rational basis of an ambient integral form.
#[derive(Clone, Debug)]
pub struct Overlattice {
    pub lattice: Lattice,
    pub ambient_gram: Vec<Vec<i64>>,
    /// basis vectors in ambient coordinates, one per row
    pub basis: Vec<Vec<Rational>>,
}

impl Overlattice {
    /// Lattice spanned by `gens` (ambient coordinates, denominators dividing
    /// `den`), basis taken from the Hermite form of den·gens.
    pub fn from_generators(name: &str, ambient_gram: Vec<Vec<i64>>, gens: &[Vec<Rational>], den: i64) -> Result<Self> {
        let d = Rational::from_integer(den.into());
        let scaled: IntMatrix = gens
            .iter()
            .map(|g| {
                g.iter()
                    .map(|x| {
                        let y = x * &d;
                        if !y.is_integer() {
                            return Err(Error::Precondition("generator denominator exceeds scale".into()));
                        }
                        Ok(y.to_integer())
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let h = hermite_rows(&scaled);
        let basis: Vec<Vec<Rational>> = h.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone()) / &d).collect()).collect();
        Self::from_basis(name, ambient_gram, basis)
    }

    pub fn from_basis(name: &str, ambient_gram: Vec<Vec<i64>>, basis: Vec<Vec<Rational>>) -> Result<Self> {
        let n = basis.len();
        let mut gram = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let v = ambient_pair(&ambient_gram, &basis[i], &basis[j]);
                if !v.is_integer() {
                    return Err(Error::Precondition(format!("non-integral pairing between basis vectors {i} and {j}")));
                }
                gram[i][j] = v.to_integer().to_i64().ok_or_else(|| Error::TooLarge("Gram entry".into()))?;
            }
        }
        Ok(Overlattice { lattice: Lattice { name: name.into(), gram }, ambient_gram, basis })
    }

    /// Coordinates of an ambient vector in the lattice basis, if it lies in
    /// the lattice.
    pub fn coords_of(&self, v: &[Rational]) -> Option<Vec<i64>> {
        let sol = solve_rows(&self.basis, v)?;
        sol.iter().map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None }).collect()
    }

    pub fn to_ambient(&self, c: &[i64]) -> Vec<Rational> {
        let m = self.ambient_gram.len();
        let mut out = vec![Rational::zero(); m];
        for (ci, b) in c.iter().zip(&self.basis) {
            if *ci == 0 {
                continue;
            }
            let f = Rational::from_integer((*ci).into());
            for (o, x) in out.iter_mut().zip(b) {
                *o += &f * x;
            }
        }
        out
    }
}

pub fn ambient_pair(g: &[Vec<i64>], u: &[Rational], v: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for (i, ui) in u.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            if g[i][j] != 0 && !vj.is_zero() {
                s += ui * vj * Rational::from_integer(g[i][j].into());
            }
        }
    }
    s
}

/// Solve x·B = v for x (B given by rows); `None` if inconsistent.
fn solve_rows(b: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    let n = b.len();
    let m = v.len();
    // columns of the augmented system: unknowns x_0..x_{n-1}, equations per ambient coordinate
    let mut a: Vec<Vec<Rational>> = (0..m).map(|c| {
        let mut row: Vec<Rational> = (0..n).map(|i| b[i][c].clone()).collect();
        row.push(v[c].clone());
        row
    }).collect();
    let mut piv_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = Rational::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..=n {
                    let t = &f * &a[r][k];
                    a[i][k] -= t;
                }
            }
        }
        piv_cols.push(c);
        r += 1;
    }
    if (r..m).any(|i| !a[i][n].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &c) in piv_cols.iter().enumerate() {
        x[c] = a[i][n].clone();
    }
    Some(x)
}

fn diag_gram(n: usize, d: i64) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { d } else { 0 }).collect()).collect()
}

fn hyperbolic(k: i64) -> Lattice {
    Lattice { name: if k == 1 { "H".into() } else { format!("H({k})") }, gram: vec![vec![0, k], vec![k, 0]] }
}

/// Negative of the E8 Cartan matrix, Bourbaki numbering (node 2 on node 4).
fn e8() -> Lattice {
    let edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)];
    let mut g = diag_gram(8, -2);
    for (a, b) in edges {
        g[a - 1][b - 1] = 1;
        g[b - 1][a - 1] = 1;
    }
    Lattice { name: "E8".into(), gram: g }
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|k| if k == i { Rational::one() } else { Rational::zero() }).collect()
}

/// D16 together with the glue vector ½(1,…,1), inside −ℤ¹⁶.
pub fn d16plus() -> Overlattice {
    let n = 16;
    let mut gens = Vec::new();
    for i in 0..n - 1 {
        let mut v = unit(n, i);
        v[i + 1] = -Rational::one();
        gens.push(v);
    }
    let mut v = unit(n, n - 2);
    v[n - 1] = Rational::one();
    gens.push(v);
    gens.push(vec![half(); n]);
    Overlattice::from_generators("D16plus", diag_gram(n, -1), &gens, 2).expect("D16plus generators")
}

/// Point sets of the affine hyperplanes of 𝔽₂⁴ and the whole space, with
/// points indexed 0..16 by their bit patterns.
pub fn affine_hyperplanes() -> Vec<Vec<usize>> {
    let mut sets = Vec::new();
    for a in 1u32..16 {
        for c in 0..2 {
            sets.push((0..16usize).filter(|&p| (a & p as u32).count_ones() % 2 == c).collect());
        }
    }
    sets.push((0..16).collect());
    sets
}

/// The Kummer lattice: sixteen disjoint (−2)-classes x_p, p ∈ 𝔽₂⁴, and the
/// halves ½Σ_{p∈S} x_p over affine hyperplanes S and S = 𝔽₂⁴. The basis is the
/// Hermite basis of the doubled generators, halved.
pub fn kummer() -> Overlattice {
    let n = 16;
    let mut gens: Vec<Vec<Rational>> = (0..n).map(|i| unit(n, i)).collect();
    for s in affine_hyperplanes() {
        let mut v = vec![Rational::zero(); n];
        for p in s {
            v[p] = half();
        }
        gens.push(v);
    }
    Overlattice::from_generators("Kummer", diag_gram(n, -2), &gens, 2).expect("Kummer generators")
}

/// Eight disjoint (−2)-classes and their half sum; basis F₁..F₇, ½ΣFᵢ.
pub fn nikulin() -> Overlattice {
    let n = 8;
    let mut basis: Vec<Vec<Rational>> = (0..7).map(|i| unit(n, i)).collect();
    basis.push(vec![half(); n]);
    Overlattice::from_basis("Nikulin", diag_gram(n, -2), basis).expect("Nikulin basis")
}

/// Ambient coordinates for the double Kummer lattice: E_ij (index 4i + j),
/// then H₀, G₀. Every H_i and G_j is expressed through the relation
/// 2H_i + Σ_j E_ij = 2H₀ + Σ_j E_0j (and its G analogue).
pub fn double_kummer_ambient() -> (Vec<Vec<i64>>, Vec<(String, Vec<Rational>)>) {
    let n = 18;
    let (h0, g0) = (16, 17);
    let mut g = diag_gram(n, -2);
    for i in 0..4 {
        for j in 0..4 {
            let e = 4 * i + j;
            if i == 0 {
                g[h0][e] = 1;
                g[e][h0] = 1;
            }
            if j == 0 {
                g[g0][e] = 1;
                g[e][g0] = 1;
            }
        }
    }
    let mut classes = Vec::new();
    for i in 0..4 {
        let mut v = unit(n, h0);
        for j in 0..4 {
            v[j] += half();
            v[4 * i + j] -= half();
        }
        classes.push((format!("H{i}"), v));
    }
    for j in 0..4 {
        let mut v = unit(n, g0);
        for i in 0..4 {
            v[4 * i] += half();
            v[4 * i + j] -= half();
        }
        classes.push((format!("G{j}"), v));
    }
    for i in 0..4 {
        for j in 0..4 {
            classes.push((format!("E{i}{j}"), unit(n, 4 * i + j)));
        }
    }
    (g, classes)
}

/// Span of the 24 pencil curves together with the Kummer halves of the E_ij.
pub fn double_kummer() -> Overlattice {
    let (g, classes) = double_kummer_ambient();
    let mut gens: Vec<Vec<Rational>> = classes.into_iter().map(|(_, v)| v).collect();
    for s in affine_hyperplanes() {
        let mut v = vec![Rational::zero(); 18];
        for p in s {
            v[p] = half();
        }
        gens.push(v);
    }
    Overlattice::from_generators("DK", g, &gens, 2).expect("double Kummer generators")
}

fn normalize(name: &str) -> String {
    name.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase()
}

pub const NAMED_LATTICES: [&str; 11] = ["H", "H2", "E8", "D16plus", "Kummer", "Nikulin", "M", "HH", "DK_complement", "H2_cubed", "DK"];

/// Named lattices; matching ignores case and punctuation ("dk_complement",
/// "DKcomplement" and "DK-complement" are the same name).
pub fn named_lattice(name: &str) -> Result<Lattice> {
    let h = hyperbolic(1);
    let h2 = hyperbolic(2);
    let lat = match normalize(name).as_str() {
        "h" | "u" => h,
        "h2" => h2,
        "e8" => e8(),
        "d16plus" | "d16" => d16plus().lattice,
        "kummer" => kummer().lattice,
        "nikulin" => nikulin().lattice,
        "m" => h.direct_sum(&e8(), "").direct_sum(&e8(), "M"),
        "hh" => h.direct_sum(&h, "HH"),
        "dkcomplement" => h2.direct_sum(&h2, "DK_complement"),
        "h2cubed" => h2.direct_sum(&h2, "").direct_sum(&h2, "H2_cubed"),
        "dk" => double_kummer().lattice,
        _ => return Err(Error::UnknownName(name.into())),
    };
    Ok(lat)
}

/// Orthogonal complement of a sublattice, with primitivity of the input.
#[derive(Clone, Debug)]
pub struct Complement {
    pub lattice: Lattice,
    /// complement basis in coordinates of the ambient lattice
    pub basis: Vec<Vec<i64>>,
    pub input_primitive: bool,
    /// index of the input span in its saturation
    pub saturation_index: BigInt,
}

pub fn orthogonal_complement_in(lat: &Lattice, sub: &[Vec<i64>]) -> Result<Complement> {
    let n = lat.rank();
    for v in sub {
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: v.len() });
        }
    }
    let (input_primitive, saturation_index) = if sub.is_empty() {
        (true, BigInt::one())
    } else {
        let s = smith(&from_i64(sub));
        let nz: Vec<&BigInt> = s.diag.iter().filter(|d| !d.is_zero()).collect();
        let idx: BigInt = nz.iter().copied().product();
        (idx.is_one(), idx)
    };
    let a: Vec<Vec<i64>> = sub
        .iter()
        .map(|v| (0..n).map(|j| (0..n).map(|i| v[i] * lat.gram[i][j]).sum()).collect())
        .collect();
    let ker = integer_kernel(&from_i64(&a), n);
    let basis: Vec<Vec<i64>> = ker
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64().ok_or_else(|| Error::TooLarge("kernel entry".into()))).collect())
        .collect::<Result<_>>()?;
    // reduce the kernel basis to Hermite form for readability
    let basis: Vec<Vec<i64>> = hermite_rows(&from_i64(&basis))
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64().expect("Hermite entry fits")).collect())
        .collect();
    let k = basis.len();
    let gram = (0..k).map(|i| (0..k).map(|j| lat.pair(&basis[i], &basis[j])).collect()).collect();
    Ok(Complement {
        lattice: Lattice { name: format!("{}^perp", lat.name), gram },
        basis,
        input_primitive,
        saturation_index,
    })
}

/// Recognizes E8 (even, unimodular, negative definite of rank 8) and H (even,
/// unimodular, rank 2, indefinite) by their invariants.
pub fn unimodular_type(gram: &[Vec<i64>]) -> Option<&'static str> {
    let lat = Lattice { name: String::new(), gram: gram.to_vec() };
    if !lat.is_even() || lat.det().abs() != BigInt::one() {
        return None;
    }
    match (lat.rank(), lat.signature()) {
        (8, (0, 8, 0)) => Some("E8"),
        (2, (1, 1, 0)) => Some("H"),
        (16, (0, 16, 0)) => Some("E8+E8 or D16plus"),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_determinants() {
        assert_eq!(named_lattice("E8").unwrap().det(), BigInt::from(1));
        assert_eq!(named_lattice("D16plus").unwrap().det(), BigInt::from(1));
        assert_eq!(named_lattice("H").unwrap().det(), BigInt::from(-1));
        let k = named_lattice("Kummer").unwrap();
        assert_eq!(k.det(), BigInt::from(64));
        assert!(k.is_even() && k.is_negative_definite());
        assert_eq!(named_lattice("Nikulin").unwrap().det(), BigInt::from(64));
        assert_eq!(named_lattice("M").unwrap().signature(), (1, 17, 0));
        assert!(matches!(named_lattice("K3"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn double_kummer_lattice() {
        let dk = double_kummer();
        assert_eq!(dk.lattice.rank(), 18);
        assert_eq!(dk.lattice.signature(), (1, 17, 0));
        assert_eq!(dk.lattice.det().abs(), BigInt::from(16));
        // the ambient expressions reproduce the pencil intersection rules
        let (g, classes) = double_kummer_ambient();
        let cfg = curve_config("double_kummer_pencil").unwrap();
        for (a, (na, va)) in classes.iter().enumerate() {
            for (b, (nb, vb)) in classes.iter().enumerate() {
                let ia = cfg.index(na).unwrap();
                let ib = cfg.index(nb).unwrap();
                let _ = (a, b);
                assert_eq!(ambient_pair(&g, va, vb), Rational::from_integer(cfg.gram[ia][ib].into()), "{na}.{nb}");
            }
        }
    }

    #[test]
    fn signature_of_indefinite_forms() {
        assert_eq!(signature(&[vec![0, 1], vec![1, 0]]), (1, 1, 0));
        assert_eq!(signature(&[vec![0, 0], vec![0, 0]]), (0, 0, 2));
        assert_eq!(signature(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]), (1, 1, 1));
        assert_eq!(signature(&[vec![-2, 1], vec![1, -2]]), (0, 2, 0));
    }

    #[test]
    fn complements() {
        let eh = e8().direct_sum(&hyperbolic(1), "E8+H");
        let sub: Vec<Vec<i64>> = (0..8).map(|i| (0..10).map(|j| i64::from(i == j)).collect()).collect();
        let c = orthogonal_complement_in(&eh, &sub).unwrap();
        assert!(c.input_primitive);
        assert_eq!(c.lattice.rank(), 2);
        assert_eq!(unimodular_type(&c.lattice.gram), Some("H"));

        let m = named_lattice("M").unwrap();
        let sub = vec![(0..18).map(|j| i64::from(j == 0)).collect(), (0..18).map(|j| i64::from(j == 1)).collect()];
        let c = orthogonal_complement_in(&m, &sub).unwrap();
        assert_eq!(c.lattice.rank(), 16);
        assert_eq!(c.lattice.det(), BigInt::from(1));
        assert_eq!(c.lattice.signature(), (0, 16, 0));

        let twice = vec![(0..18).map(|j| 2 * i64::from(j == 0)).collect::<Vec<_>>()];
        let c = orthogonal_complement_in(&m, &twice).unwrap();
        assert!(!c.input_primitive);
        assert_eq!(c.saturation_index, BigInt::from(2));
    }

    #[test]
    fn pencil_classes_span_h2_with_kummer_complement() {
        let dk = double_kummer();
        let (_, classes) = double_kummer_ambient();
        let amb = |name: &str| classes.iter().find(|(n, _)| n == name).unwrap().1.clone();
        let mut h = amb("H0").iter().map(|x| x * Rational::from_integer(2.into())).collect::<Vec<_>>();
        let mut g = amb("G0").iter().map(|x| x * Rational::from_integer(2.into())).collect::<Vec<_>>();
        for k in 0..4 {
            for (o, x) in h.iter_mut().zip(amb(&format!("E0{k}"))) {
                *o += x;
            }
            for (o, x) in g.iter_mut().zip(amb(&format!("E{k}0"))) {
                *o += x;
            }
        }
        let hc = dk.coords_of(&h).unwrap();
        let gc = dk.coords_of(&g).unwrap();
        let l = &dk.lattice;
        assert_eq!([[l.pair(&hc, &hc), l.pair(&hc, &gc)], [l.pair(&gc, &hc), l.pair(&gc, &gc)]], [[0, 2], [2, 0]]);
        // every H_i gives the same class
        for i in 1..4 {
            let mut hi = amb(&format!("H{i}")).iter().map(|x| x * Rational::from_integer(2.into())).collect::<Vec<_>>();
            for k in 0..4 {
                for (o, x) in hi.iter_mut().zip(amb(&format!("E{i}{k}"))) {
                    *o += x;
                }
            }
            assert_eq!(hi, h);
        }
        let c = orthogonal_complement_in(l, &[hc, gc]).unwrap();
        assert!(c.input_primitive);
        assert_eq!(c.lattice.rank(), 16);
        assert_eq!(c.lattice.det(), BigInt::from(64));
        assert!(c.lattice.is_negative_definite());
        // the complement holds the sixteen E_ij and nothing else of norm −2
        assert_eq!(roots(&c.lattice).unwrap().len(), 32);
        let kf = discriminant_form(&c.lattice).unwrap();
        assert!(kf.is_isomorphic(&discriminant_form(&kummer().lattice).unwrap()).unwrap());
    }

    #[test]
    fn kummer_and_nikulin_forms_match_h2_cubed() {
        let target = discriminant_form(&named_lattice("H2_cubed").unwrap()).unwrap();
        for name in ["Kummer", "Nikulin"] {
            let f = discriminant_form(&named_lattice(name).unwrap()).unwrap();
            assert_eq!(f.invariant_factors, vec![2; 6], "{name}");
            assert_eq!(f.q_multiset().unwrap(), target.q_multiset().unwrap(), "{name}");
            assert!(f.is_isomorphic(&target).unwrap(), "{name}");
        }
    }

    #[test]
    fn json_shape() {
        let v = named_lattice("h").unwrap().to_json();
        assert_eq!(v.to_string(), r#"{"gram":[[0,1],[1,0]],"name":"H","rank":2}"#);
    }
}
