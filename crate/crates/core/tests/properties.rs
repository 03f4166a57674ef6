//! Randomized invariants across the modules.

mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use gm2_height::algebra::{modp::is_prime_u64, FieldElement, IntPoly1, IntPoly2, NumberField};
use gm2_height::analytic::{log_mahler_1d, Precision, RealBall};
use gm2_height::bounds::{param_schedule, prop_iv1, theorem2, BoundArgs, ScheduleKind};
use gm2_height::curves::{ecc_primes, is_torsion_curve, normalized_height_curve, power_image_poly, Curve};
use gm2_height::extrapolation::{frobenius_apply, vanishing_order};
use gm2_height::heights::{height_algebraic, is_torsion_point, point_height, power_point, Point2};
use gm2_height::obstruction::{obstruction_bound, obstruction_index, relative_degree, vanishes_at, AuxPoly, BaseField};

fn pr() -> Precision {
    Precision::default()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn nonzero() -> impl Strategy<Value = i64> {
    (-30i64..=30).prop_filter("nonzero", |v| *v != 0)
}

fn rational_point() -> impl Strategy<Value = Point2> {
    (nonzero(), 1i64..=20, nonzero(), 1i64..=20).prop_map(|(a, b, c, d)| Point2::rational(rat(a, b), rat(c, d)).unwrap())
}

/// Points `(a + b√s, c + e√s)` in a real quadratic field.
fn quadratic_point() -> impl Strategy<Value = Point2> {
    (prop::sample::select(vec![2i64, 3, 5, 7]), -5i64..=5, 1i64..=4, -5i64..=5, -4i64..=4).prop_map(|(s, a, b, c, e)| {
        let k = NumberField::new(IntPoly1::from_i64s(&[-s, 0, 1])).unwrap();
        let x = FieldElement::from_coeffs(&k, vec![rat(a, 1), rat(b, 1)]);
        let y = FieldElement::from_coeffs(&k, vec![rat(if c == 0 && e == 0 { 1 } else { c }, 1), rat(e, 1)]);
        Point2::new(x, y).unwrap()
    })
}

fn small_poly1() -> impl Strategy<Value = IntPoly1> {
    prop::collection::vec(-6i64..=6, 2..6)
        .prop_filter("nonconstant with nonzero ends", |c| c[0] != 0 && *c.last().unwrap() != 0)
        .prop_map(|c| IntPoly1::from_i64s(&c))
}

/// `A(x) + B(x) y` with `B` not identically zero.
fn linear_in_y() -> impl Strategy<Value = IntPoly2> {
    (prop::collection::vec(-4i64..=4, 1..3), prop::collection::vec(-4i64..=4, 1..3))
        .prop_filter("B nonzero, A nonzero", |(a, b)| b.iter().any(|v| *v != 0) && a.iter().any(|v| *v != 0))
        .prop_map(|(a, b)| {
            let mut terms = Vec::new();
            for (i, v) in a.iter().enumerate() {
                terms.push(((i as u32, 0), *v));
            }
            for (i, v) in b.iter().enumerate() {
                terms.push(((i as u32, 1), *v));
            }
            IntPoly2::from_i64_terms(&terms)
        })
}

fn q_elem(q: &BigRational) -> FieldElement {
    FieldElement::from_rational(&NumberField::rationals(), q.clone())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn sandwich_and_swap(p in prop_oneof![rational_point(), quadratic_point()]) {
        let h = point_height(&p, pr()).unwrap();
        let h1 = height_algebraic(p.minpoly_x(), pr()).unwrap();
        let h2 = height_algebraic(p.minpoly_y(), pr()).unwrap();
        prop_assert!(!h.certainly_lt(&h1.max(&h2)));
        prop_assert!(!h1.add(&h2).certainly_lt(&h));
        prop_assert!(h.overlaps(&point_height(&p.swap(), pr()).unwrap()));
        if is_torsion_point(&p) {
            prop_assert!(h.contains_zero());
        } else {
            prop_assert!(h.is_positive());
        }
    }

    #[test]
    fn power_scales_height(p in quadratic_point(), l in prop::sample::select(vec![1u64, 2, 3, 5])) {
        let h = point_height(&p, pr()).unwrap();
        let hl = point_height(&power_point(&p, l).unwrap(), pr()).unwrap();
        prop_assert!(hl.overlaps(&h.mul_i64(l as i64)), "{} vs {} * {}", hl, l, h);
    }

    #[test]
    fn mahler_multiplicative_and_reciprocal(f in small_poly1(), g in small_poly1()) {
        let mf = log_mahler_1d(&f, pr()).unwrap();
        let mg = log_mahler_1d(&g, pr()).unwrap();
        let mfg = log_mahler_1d(&(&f * &g), pr()).unwrap();
        prop_assert!(mfg.overlaps(&mf.add(&mg)));
        prop_assert!(log_mahler_1d(&f.reverse(), pr()).unwrap().overlaps(&mf));
    }

    #[test]
    fn vanishing_order_is_additive(a in -3i64..=3, b in -3i64..=3, i in 0u32..3, j in 0u32..3, k in 0u32..3) {
        let p = Point2::from_ints(2, 3).unwrap();
        let q = BaseField::Rationals;
        let lx = IntPoly2::from_i64_terms(&[((1, 0), 1), ((0, 0), -2)]);
        let ly = IntPoly2::from_i64_terms(&[((0, 1), 1), ((0, 0), -3)]);
        let diag = IntPoly2::from_i64_terms(&[((1, 0), 3), ((0, 1), -2)]);
        let unit = IntPoly2::from_i64_terms(&[((1, 0), 1), ((0, 1), a), ((0, 0), b * 7 + 1)]);
        let f = lx.pow(i).mul(&diag.pow(j));
        let g = ly.pow(k).mul(&unit);
        let ord = |h: &IntPoly2| vanishing_order(&AuxPoly::Int(h.clone()), &p, &q, 12).unwrap();
        prop_assert_eq!(ord(&f.mul(&g)), ord(&f) + ord(&g));
    }

    #[test]
    fn frobenius_round_trip(
        m in prop::sample::select(vec![3u64, 4, 5, 12]),
        coeffs in prop::collection::vec((-3i64..=3, 0u32..3, 0u32..3, 0usize..6), 1..5),
        pidx in 0usize..8,
    ) {
        let k = NumberField::cyclotomic(m).unwrap();
        let text: Vec<String> = coeffs.iter().map(|(c, i, j, e)| format!("({c})*t^{e}*x^{i}*y^{j}")).collect();
        let poly = gm2_height::parse::parse_field_poly2(&text.join(" + "), &k).unwrap();
        prop_assume!(!poly.is_zero());
        let f = AuxPoly::Cyclotomic { m, poly };
        let primes: Vec<u64> = (2..200).filter(|&p| is_prime_u64(p) && m % p != 0).collect();
        let p = primes[pidx % primes.len()];
        let pp = (2..100_000u64).find(|&r| is_prime_u64(r) && m % r != 0 && (p * r) % m == 1).unwrap();
        prop_assert_eq!(frobenius_apply(&frobenius_apply(&f, p).unwrap(), pp).unwrap(), f);
    }

    #[test]
    fn obstruction_within_bound(p in quadratic_point()) {
        let q = BaseField::Rationals;
        let ob = obstruction_index(&p, &q).unwrap();
        let d = relative_degree(&p, &q).unwrap();
        prop_assert!(ob.omega >= 1 && ob.omega <= obstruction_bound(d));
        let four_d = 4 * d as u32;
        prop_assert!((ob.omega - 1) * (ob.omega - 1) <= four_d);
        prop_assert!(vanishes_at(&ob.witness, &p, &q).unwrap());
    }

    #[test]
    fn power_image_contains_powered_points(s in linear_in_y(), x0 in nonzero(), l in 2u32..5) {
        let c = Curve::new(&s);
        prop_assume!(c.is_ok());
        let c = c.unwrap();
        // y0 = -A(x0)/B(x0) on the curve; its power lies on the image.
        let a = s.specialize_y(&BigInt::from(0));
        let b_plus_a = s.specialize_y(&BigInt::from(1));
        let x = BigInt::from(x0);
        let av = a.eval(&x);
        let bv = b_plus_a.eval(&x) - &av;
        prop_assume!(bv != BigInt::from(0) && av != BigInt::from(0));
        let y0 = BigRational::new(-av, bv);
        let img = power_image_poly(c.poly(), l);
        let xl = q_elem(&BigRational::from(x.pow(l)));
        let yl = q_elem(&num_traits::Pow::pow(&y0, l));
        prop_assert!(img.eval(&xl, &yl).is_zero(), "{} at ({}, {}) under l = {}", img, x0, y0, l);
    }

    #[test]
    fn ecc_cardinality(s in linear_in_y()) {
        let c = Curve::new(&s);
        prop_assume!(c.is_ok());
        let r = ecc_primes(&c.unwrap(), 13).unwrap();
        prop_assert!(r.bound_holds);
    }

    #[test]
    fn bounds_decrease(w in 1u64..10_000) {
        let a = theorem2(w, 128).unwrap();
        let b = theorem2(w + 1, 128).unwrap();
        prop_assert!(b.certainly_lt(&a));
        if w >= 16 {
            prop_assert!(prop_iv1(w + 1, 128).unwrap().certainly_le(&prop_iv1(w, 128).unwrap()));
        }
    }

    #[test]
    fn schedule_v1_respects_min(w in 1u64..100_000, d in 1u64..100_000) {
        let s = param_schedule(ScheduleKind::SectionV1, &BoundArgs { omega: Some(w), degree: Some(d), ..Default::default() }).unwrap();
        let wp = w.max(16) as f64;
        let t = 9.0 * (wp.ln() / wp.ln().ln()).powi(2);
        prop_assert!((s.t as f64) >= t && (s.t as f64) < t + 1.0);
        prop_assert!(s.l as u128 <= 2 * w as u128 * (s.t as u128).pow(2));
        let td = (s.t * d) as f64;
        prop_assert!((s.l as f64) <= (td.sqrt() * (s.t + 1) as f64).ceil() + 1.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 8, ..ProptestConfig::default() })]

    #[test]
    fn curve_height_symmetries(s in linear_in_y()) {
        let c = Curve::new(&s);
        prop_assume!(c.is_ok());
        let c = c.unwrap();
        let h = normalized_height_curve(&c, 1e-5, pr()).unwrap();
        let hs = normalized_height_curve(&c.swap(), 1e-5, pr()).unwrap();
        prop_assert!(h.overlaps(&hs), "{} vs {}", h, hs);
        let r = Curve::new(&c.poly().reflect_x()).unwrap();
        prop_assert!(normalized_height_curve(&r, 1e-5, pr()).unwrap().overlaps(&h));
        prop_assert!(!h.certainly_lt(&RealBall::zero(64)));
        if is_torsion_curve(&c).0 {
            prop_assert!(h.contains_zero());
        }
    }

    #[test]
    fn product_curve_height_splits(f in small_poly1(), g in small_poly1()) {
        // Curves are stored primitive; by Gauss's lemma so is this product.
        let (f, g) = (f.primitive_part(), g.primitive_part());
        let p = IntPoly2::from_x_poly(&f).mul(&IntPoly2::from_y_poly(&g));
        let c = Curve::new(&p).unwrap();
        let h = normalized_height_curve(&c, 1e-6, pr()).unwrap();
        let expected = log_mahler_1d(&f, pr()).unwrap().add(&log_mahler_1d(&g, pr()).unwrap());
        prop_assert!(h.overlaps(&expected) || (h.mid_f64() - expected.mid_f64()).abs() < 1e-6);
    }
}

#[test]
fn corpus_torsion_curves_have_zero_height() {
    for c in common::curves() {
        if is_torsion_curve(&c).0 {
            assert!(normalized_height_curve(&c, 1e-6, pr()).unwrap().contains_zero(), "{c}");
        }
    }
}
