use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use k3inv::exact::{fmt_rational, parse_rational, rat, rational_function_equal, BigComplex, Polynomial, QuadExtElement, Rational};
use k3inv::inose::{from_invariants, j_pair, modular_invariants, psi2_weierstrass, theta2_weierstrass, InoseContext};
use k3inv::kummer::{cross_ratio_poly, j_of_cross_ratio, legendre_j, legendre_orbit, upsilon2_functional_invariant, LegendrePair};
use k3inv::lattice::intmat::{determinant, from_i64, mat_mul, smith};
use k3inv::lattice::{self, Lattice};
use k3inv::modular::{modular_j, sigma_pi_from_periods, PeriodPoint};
use k3inv::weierstrass::euler_sum;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=30).prop_map(|(n, d)| rat(n, d))
}

fn big_rational() -> impl Strategy<Value = Rational> {
    (-1_000_000i64..=1_000_000, 1i64..=1_000_000).prop_map(|(n, d)| rat(n, d))
}

fn legendre_param() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("away from 0 and 1", |x| !x.is_zero() && !x.is_one())
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_rational(), 1..6).prop_map(Polynomial::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_wire_round_trip(r in big_rational()) {
        prop_assert_eq!(parse_rational(&fmt_rational(&r)).unwrap(), r);
    }

    #[test]
    fn division_with_remainder(f in poly(), g in poly()) {
        prop_assume!(!g.is_zero());
        let (q, r) = f.div_rem(&g);
        prop_assert_eq!(&(&q * &g) + &r, f);
        prop_assert!(r.is_zero() || r.degree() < g.degree());
    }

    #[test]
    fn gcd_divides_both(f in poly(), g in poly(), h in poly()) {
        prop_assume!(!h.is_zero() && !f.is_zero() && !g.is_zero());
        let (fh, gh) = (&f * &h, &g * &h);
        let d = fh.gcd(&gh);
        prop_assert!(fh.exact_div(&d).is_some() && gh.exact_div(&d).is_some());
        prop_assert!(d.exact_div(&h.monic()).is_some());
    }

    #[test]
    fn invariants_and_preimage(a in big_rational(), b in big_rational()) {
        let ctx = InoseContext::from_ab(a.clone(), b.clone());
        let inv = modular_invariants(&ctx);
        prop_assert_eq!(&inv.sigma, &(&inv.pi - &b * &b + Rational::one()));
        let jp = j_pair(&ctx);
        prop_assert_eq!(jp.sum(), QuadExtElement::rational(inv.sigma.clone()));
        prop_assert_eq!(jp.product(), QuadExtElement::rational(inv.pi.clone()));
        let pre = from_invariants(&inv);
        prop_assert!(pre.rational_solutions.iter().any(|s| s.a == a && (s.b == b || s.b == -b.clone())));
    }

    #[test]
    fn discriminants_and_euler_sum(a in small_rational(), b in small_rational()) {
        let ctx = InoseContext::from_ab(a, b);
        let one = Polynomial::from_ints(&[1]);
        let p2 = &ctx.p_poly * &ctx.p_poly;
        let th = theta2_weierstrass(&ctx);
        let ps = psi2_weierstrass(&ctx);
        prop_assert_eq!(th.discriminant().unwrap(), (&one - &p2).scale(&rat(4, 1)));
        prop_assert_eq!(ps.discriminant().unwrap(), (&p2 - &one).pow(2).scale(&rat(-4, 1)));
        prop_assert_eq!(euler_sum(&th.full_fiber_table().unwrap()), 24);
        prop_assert_eq!(euler_sum(&ps.full_fiber_table().unwrap()), 24);
    }

    #[test]
    fn legendre_j_is_orbit_invariant(l in legendre_param()) {
        let j = legendre_j(&l).unwrap();
        for m in legendre_orbit(&l).unwrap() {
            prop_assert_eq!(legendre_j(&m).unwrap(), j.clone());
        }
    }

    #[test]
    fn upsilon_invariant_is_composed_cross_ratio(al in legendre_param(), be in legendre_param()) {
        let pair = LegendrePair::new(al, be).unwrap();
        let closed = upsilon2_functional_invariant(&pair).unwrap();
        let composed = j_of_cross_ratio(&cross_ratio_poly(&pair)).unwrap();
        prop_assert!(rational_function_equal(&closed, &composed));
    }

    #[test]
    fn signature_agrees_with_det_sign(entries in prop::collection::vec(-4i64..=4, 21)) {
        // symmetric 6×6 from the upper triangle
        let n = 6;
        let mut g = vec![vec![0i64; n]; n];
        let mut it = entries.into_iter();
        for i in 0..n {
            for j in i..n {
                let x = it.next().unwrap();
                g[i][j] = x;
                g[j][i] = x;
            }
        }
        let det = determinant(&from_i64(&g));
        let (pos, neg, zero) = lattice::signature(&g);
        prop_assert_eq!(pos + neg + zero, n);
        prop_assert_eq!(zero == 0, !det.is_zero());
        if !det.is_zero() {
            prop_assert_eq!(det.is_negative(), neg % 2 == 1);
        }
    }

    #[test]
    fn smith_form_is_a_factorization(entries in prop::collection::vec(-9i64..=9, 12)) {
        let a: Vec<Vec<i64>> = entries.chunks(4).map(|r| r.to_vec()).collect();
        let am = from_i64(&a);
        let s = smith(&am);
        let d = mat_mul(&mat_mul(&s.u, &am), &s.v);
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let want = if i == j && i < s.diag.len() { s.diag[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(x, &want);
            }
        }
        for w in s.diag.windows(2) {
            prop_assert!(w[1].is_zero() || (&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn direct_sum_multiplies_determinants(k in 1usize..4) {
        let h = lattice::named_lattice("H").unwrap();
        let e8 = lattice::named_lattice("E8").unwrap();
        let mut l: Lattice = e8.clone();
        for _ in 0..k {
            l = l.direct_sum(&h, "E8+kH");
        }
        prop_assert_eq!(l.det(), BigInt::from(if k % 2 == 1 { -1 } else { 1 }));
        prop_assert_eq!(l.signature(), (k, 8 + k, 0));
    }
}

fn tau_strategy() -> impl Strategy<Value = (Rational, Rational)> {
    ((-200i64..=200), (30i64..=300)).prop_map(|(x, y)| (rat(x, 100), rat(y, 100)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn j_is_modular((x, y) in tau_strategy()) {
        let p = 128;
        let tau = BigComplex::from_rationals(&x, &y, p + 32);
        let j = modular_j(&tau, p).unwrap();
        let shifted = tau.add(&BigComplex::one(p + 32));
        let inverted = BigComplex::one(p + 32).neg().div(&tau).unwrap();
        let scale = j.log2_abs().max(0.0);
        for other in [shifted, inverted] {
            let err = modular_j(&other, p).unwrap().log2_dist(&j);
            prop_assert!(err < -100.0 + scale, "error 2^{err} at tau = {x} + {y}i");
        }
    }

    #[test]
    fn sigma_pi_symmetric_in_tau_and_u(t in tau_strategy(), u in tau_strategy()) {
        let p = 128;
        let a = BigComplex::from_rationals(&t.0, &t.1, p);
        let b = BigComplex::from_rationals(&u.0, &u.1, p);
        let (s1, p1) = sigma_pi_from_periods(&PeriodPoint::new(a.clone(), b.clone()).unwrap(), p).unwrap();
        let (s2, p2) = sigma_pi_from_periods(&PeriodPoint::new(b, a).unwrap(), p).unwrap();
        prop_assert!(s1.log2_dist(&s2) < -100.0 + s1.log2_abs().max(0.0));
        prop_assert!(p1.log2_dist(&p2) < -100.0 + p1.log2_abs().max(0.0));
    }
}
