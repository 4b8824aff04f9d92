//! Discriminant groups L*/L and their finite quadratic forms.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::json;

use super::intmat::{from_i64, smith};
use super::Lattice;
use crate::error::{Error, Result};
use crate::exact::{fmt_rational, Rational};

/// Largest group handled by the isomorphism search.
pub const MAX_ISO_GROUP: u64 = 1 << 12;

#[derive(Clone, Debug, PartialEq)]
pub struct DiscriminantForm {
    /// nontrivial invariant factors d₁ | d₂ | …
    pub invariant_factors: Vec<u64>,
    /// generators of L*/L in coordinates of the lattice basis
    pub generators: Vec<Vec<Rational>>,
    /// q(gᵢ) in [0, 2)
    pub q_values: Vec<Rational>,
    /// b(gᵢ, gⱼ) in [0, 1)
    pub pairing: Vec<Vec<Rational>>,
}

fn mod_q(x: &Rational, m: i64) -> Rational {
    let m = Rational::from_integer(m.into());
    let f = (x / &m).floor();
    x - f * m
}

pub fn discriminant_form(lat: &Lattice) -> Result<DiscriminantForm> {
    let n = lat.rank();
    let g = from_i64(&lat.gram);
    let s = smith(&g);
    if s.rank() < n {
        return Err(Error::DegenerateLattice);
    }
    // L* = G⁻¹ℤⁿ = V·D⁻¹ℤⁿ, so the columns V·eᵢ/dᵢ generate L*/L
    let mut factors = Vec::new();
    let mut gens = Vec::new();
    for (i, d) in s.diag.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        factors.push(d.to_u64().ok_or_else(|| Error::TooLarge("invariant factor".into()))?);
        gens.push((0..n).map(|r| Rational::new(s.v[r][i].clone(), d.clone())).collect::<Vec<_>>());
    }
    let pair = |u: &[Rational], v: &[Rational]| {
        let mut acc = Rational::zero();
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if lat.gram[i][j] != 0 {
                    acc += &u[i] * &v[j] * Rational::from_integer(lat.gram[i][j].into());
                }
            }
        }
        acc
    };
    let q_values = gens.iter().map(|x| mod_q(&pair(x, x), 2)).collect();
    let pairing = gens.iter().map(|x| gens.iter().map(|y| mod_q(&pair(x, y), 1)).collect()).collect();
    Ok(DiscriminantForm { invariant_factors: factors, generators: gens, q_values, pairing })
}

impl DiscriminantForm {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    /// q on the element Σ xᵢgᵢ, in [0, 2).
    pub fn q_of(&self, x: &[u64]) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..x.len() {
            if x[i] == 0 {
                continue;
            }
            let xi = Rational::from_integer(x[i].into());
            acc += &xi * &xi * &self.q_values[i];
            for j in i + 1..x.len() {
                if x[j] != 0 {
                    acc += Rational::from_integer(2.into()) * &xi * Rational::from_integer(x[j].into()) * &self.pairing[i][j];
                }
            }
        }
        mod_q(&acc, 2)
    }

    pub fn b_of(&self, x: &[u64], y: &[u64]) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..x.len() {
            for j in 0..y.len() {
                if x[i] != 0 && y[j] != 0 {
                    acc += Rational::from_integer((x[i] * y[j]).into()) * &self.pairing[i][j];
                }
            }
        }
        mod_q(&acc, 1)
    }

    fn element_order(&self, x: &[u64]) -> u64 {
        x.iter().zip(&self.invariant_factors).fold(1, |acc, (&xi, &d)| acc.lcm(&(d / d.gcd(&xi))))
    }

    fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &d in &self.invariant_factors {
            out = out.into_iter().flat_map(|e| (0..d).map(move |k| [e.clone(), vec![k]].concat())).collect();
        }
        out
    }

    fn add(&self, x: &[u64], y: &[u64], m: u64) -> Vec<u64> {
        x.iter().zip(y).zip(&self.invariant_factors).map(|((a, b), d)| (a + m * b) % d).collect()
    }

    /// Sorted multiset of q over all group elements.
    pub fn q_multiset(&self) -> Result<Vec<Rational>> {
        if self.order() > MAX_ISO_GROUP {
            return Err(Error::TooLarge(format!("discriminant group of order {}", self.order())));
        }
        let mut v: Vec<Rational> = self.elements().iter().map(|x| self.q_of(x)).collect();
        v.sort();
        Ok(v)
    }

    /// Decides whether the two finite quadratic forms are isometric by
    /// searching for generator images with matching orders, q-values and
    /// pairings that generate a subgroup of full size.
    pub fn is_isomorphic(&self, other: &DiscriminantForm) -> Result<bool> {
        if self.invariant_factors != other.invariant_factors {
            return Ok(false);
        }
        if self.order() > MAX_ISO_GROUP {
            return Err(Error::TooLarge(format!("discriminant group of order {}", self.order())));
        }
        if self.q_multiset()? != other.q_multiset()? {
            return Ok(false);
        }
        let elems = other.elements();
        let k = self.invariant_factors.len();
        // candidates per generator, filtered on order and q
        let cands: Vec<Vec<&Vec<u64>>> = (0..k)
            .map(|i| {
                elems
                    .iter()
                    .filter(|e| other.element_order(e) == self.invariant_factors[i] && other.q_of(e) == self.q_values[i])
                    .collect()
            })
            .collect();
        let zero = vec![0u64; k];
        let mut span: HashSet<Vec<u64>> = HashSet::from([zero]);
        let mut chosen: Vec<Vec<u64>> = Vec::new();
        Ok(self.extend(other, &cands, &mut chosen, &mut span))
    }

    fn extend(&self, other: &DiscriminantForm, cands: &[Vec<&Vec<u64>>], chosen: &mut Vec<Vec<u64>>, span: &mut HashSet<Vec<u64>>) -> bool {
        let i = chosen.len();
        if i == cands.len() {
            return true;
        }
        let d = self.invariant_factors[i];
        for h in &cands[i] {
            if !(0..i).all(|j| other.b_of(h, &chosen[j]) == self.pairing[i][j]) {
                continue;
            }
            let mut next = HashSet::with_capacity(span.len() * d as usize);
            for s in span.iter() {
                for m in 0..d {
                    next.insert(other.add(s, h, m));
                }
            }
            if next.len() != span.len() * d as usize {
                continue;
            }
            chosen.push((*h).clone());
            std::mem::swap(span, &mut next);
            if self.extend(other, cands, chosen, span) {
                return true;
            }
            std::mem::swap(span, &mut next);
            chosen.pop();
        }
        false
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "invariant_factors": self.invariant_factors,
            "q_values": self.q_values.iter().map(fmt_rational).collect::<Vec<_>>(),
            "pairing": self.pairing.iter().map(|r| r.iter().map(fmt_rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "order": self.order(),
        })
    }
}

/// Determinant sign-free check: product of factors equals |det|.
pub fn order_matches_det(form: &DiscriminantForm, lat: &Lattice) -> bool {
    BigInt::from(form.order()) == num_traits::Signed::abs(&lat.det())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::named_lattice;

    #[test]
    fn unimodular_is_trivial() {
        let f = discriminant_form(&named_lattice("H").unwrap()).unwrap();
        assert!(f.invariant_factors.is_empty());
        assert_eq!(f.order(), 1);
    }

    #[test]
    fn h2_cubed_tables() {
        let lat = named_lattice("H2_cubed").unwrap();
        let f = discriminant_form(&lat).unwrap();
        assert_eq!(f.invariant_factors, vec![2; 6]);
        assert!(order_matches_det(&f, &lat));
        // q takes values 0 and 1 only; 36 zeros, 28 ones
        let ms = f.q_multiset().unwrap();
        assert_eq!(ms.iter().filter(|x| x.is_zero()).count(), 36);
        assert_eq!(ms.iter().filter(|x| x.is_one()).count(), 28);
        assert!(f.is_isomorphic(&f).unwrap());
    }

    #[test]
    fn a1_sum_is_not_h2_cubed() {
        let a1_6 = Lattice::new("6A1", (0..6).map(|i| (0..6).map(|j| if i == j { -2 } else { 0 }).collect()).collect()).unwrap();
        let f = discriminant_form(&a1_6).unwrap();
        let g = discriminant_form(&named_lattice("H2_cubed").unwrap()).unwrap();
        assert_eq!(f.invariant_factors, g.invariant_factors);
        assert!(!f.is_isomorphic(&g).unwrap());
    }

    #[test]
    fn degenerate_rejected() {
        let z = Lattice::new("z", vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(discriminant_form(&z), Err(Error::DegenerateLattice));
    }
}
