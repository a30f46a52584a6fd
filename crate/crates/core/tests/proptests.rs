//! Randomized algebraic invariants across the workspace: surd arithmetic,
//! exact linear algebra, symbol symmetries, tableau combinatorics, length
//! geometry, trace coordinates, and the series engine.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use regge_core::exact::{integer, rational, ExactComplex, ExactMatrix, SignedSqrtRational};
use regge_core::fuchs::{coordinates, okamoto_coords, MatrixTriple};
use regge_core::pvi::{params_from_theta, residual_series, series_solution, ThetaParams};
use regge_core::racah::{regge, sixj, symmetry_orbit, SixJLabels};
use regge_core::tableaux::{gt_count, lr_coeff, pieri, Partition};
use regge_core::tetra::{
    cayley_menger_det, edge_lengths, is_euclidean_tetra, phi_embed, realize_from_lengths,
    regge_lengths, spherical_lengths, spherical_realizable, EdgeLengths, Su2,
};

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rational(n, d))
}

fn positive_rational() -> impl Strategy<Value = BigRational> {
    (1i64..=40, 1i64..=8).prop_map(|(n, d)| rational(n, d))
}

fn surd() -> impl Strategy<Value = SignedSqrtRational> {
    (any::<bool>(), 0i64..=30, 1i64..=9).prop_map(|(neg, n, d)| {
        let v = SignedSqrtRational::sqrt_of(&rational(n, d));
        if neg {
            v.neg()
        } else {
            v
        }
    })
}

fn exact_complex() -> impl Strategy<Value = ExactComplex> {
    (small_rational(), small_rational()).prop_map(|(re, im)| ExactComplex::new(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn surd_multiplication_squares_multiply(a in surd(), b in surd()) {
        let p = a.mul(&b);
        prop_assert_eq!(p.square(), &(a.square() * b.square()));
        prop_assert_eq!(p.sign(), a.sign() * b.sign());
    }

    #[test]
    fn surd_addition_in_a_radical_class_distributes(
        q in 1i64..=20,
        r1 in -20i64..=20,
        r2 in -20i64..=20,
    ) {
        // r1 sqrt(q) + r2 sqrt(q) = (r1 + r2) sqrt(q)
        let base = SignedSqrtRational::sqrt_of(&integer(q));
        let x = base.mul_rational(&integer(r1));
        let y = base.mul_rational(&integer(r2));
        let sum = x.checked_add(&y).unwrap();
        prop_assert_eq!(sum, base.mul_rational(&integer(r1 + r2)));
    }

    #[test]
    fn exact_complex_is_a_field(
        a in exact_complex(),
        b in exact_complex(),
        c in exact_complex(),
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        let norm = &a * &a.conj();
        prop_assert!(norm.is_real());
        prop_assert_eq!(norm.re.clone(), a.norm_sqr());
        if !b.is_zero() {
            let q = a.div(&b).unwrap();
            prop_assert_eq!(&q * &b, a);
        }
    }

    #[test]
    fn nullspace_vectors_annihilate(
        entries in proptest::collection::vec(-9i64..=9, 12),
    ) {
        let rows: Vec<Vec<BigRational>> = entries
            .chunks(4)
            .map(|row| row.iter().map(|&x| integer(x)).collect())
            .collect();
        let m = ExactMatrix::from_rows(rows);
        let ns = m.nullspace();
        prop_assert_eq!(m.rank() + ns.len(), 4);
        for v in &ns {
            for i in 0..m.rows() {
                let mut acc = BigRational::zero();
                for (j, x) in v.iter().enumerate() {
                    acc += m.at(i, j) * x;
                }
                prop_assert!(acc.is_zero());
            }
        }
    }
}

fn valid_labels() -> impl Strategy<Value = SixJLabels> {
    (0u32..=7, 0u32..=7, 0u32..=7, 0u32..=7, 0u32..=14, 0u32..=14)
        .prop_map(|(a, b, c, d, e, f)| SixJLabels::new(a, b, c, d, e, f))
        .prop_filter("labels must couple", SixJLabels::is_valid)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn regge_fixes_sixj_and_is_an_involution(l in valid_labels()) {
        let img = regge(&l).unwrap();
        prop_assert!(img.is_valid());
        prop_assert_eq!(regge(&img).unwrap(), l);
        prop_assert_eq!(sixj(&img), sixj(&l));
    }

    #[test]
    fn symmetry_orbit_is_constant_and_closed(l in valid_labels()) {
        let orbit = symmetry_orbit(&l);
        prop_assert!(orbit.len() <= 144);
        let v = sixj(&l);
        for m in &orbit {
            prop_assert_eq!(sixj(m), v.clone());
        }
    }
}

fn partition() -> impl Strategy<Value = Partition> {
    (0u32..=6, 0u32..=6, 0u32..=6).prop_map(|(a, b, c)| {
        let mut parts = [a, b, c];
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Partition::new(parts)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pieri_agrees_with_littlewood_richardson(lambda in partition(), a in 0u32..=5) {
        let products = pieri(&lambda, a);
        let row = Partition::new([a, 0, 0]);
        // every Pieri summand appears with coefficient one, nothing else does
        for nu in &products {
            prop_assert_eq!(lr_coeff(&lambda, &row, nu), 1);
        }
        let total = lambda.size() + a;
        for n1 in 0..=total {
            for n2 in 0..=n1 {
                for n3 in 0..=n2 {
                    if n1 + n2 + n3 != total {
                        continue;
                    }
                    let nu = Partition::new([n1, n2, n3]);
                    let expected = u64::from(products.contains(&nu));
                    prop_assert_eq!(lr_coeff(&lambda, &row, &nu), expected);
                }
            }
        }
    }

    #[test]
    fn gt_count_is_symmetric_in_the_weight(lambda in partition(), w in (0u32..=6, 0u32..=6, 0u32..=6)) {
        let (x, y, z) = w;
        let base = gt_count(&lambda, [x, y, z]);
        for wp in [[x, z, y], [y, x, z], [y, z, x], [z, x, y], [z, y, x]] {
            prop_assert_eq!(gt_count(&lambda, wp), base);
        }
    }
}

fn rational_lengths() -> impl Strategy<Value = EdgeLengths<BigRational>> {
    (
        positive_rational(),
        positive_rational(),
        positive_rational(),
        positive_rational(),
        positive_rational(),
        positive_rational(),
    )
        .prop_map(|(a, b, c, d, e, f)| EdgeLengths::new(a, b, c, d, e, f))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn length_regge_preserves_determinant_and_realizability(l in rational_lengths()) {
        let Ok(img) = regge_lengths(&l) else {
            // a negative image entry makes the tuple inadmissible
            return Ok(());
        };
        prop_assert_eq!(cayley_menger_det(&l), cayley_menger_det(&img));
        prop_assert_eq!(is_euclidean_tetra(&l), is_euclidean_tetra(&img));
        let back = regge_lengths(&img).unwrap();
        prop_assert_eq!(back, l);
    }
}

fn vector3() -> impl Strategy<Value = [f64; 3]> {
    [-2.0f64..=2.0, -2.0f64..=2.0, -2.0f64..=2.0]
}

fn norm3(v: &[f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn realized_tetrahedron_reproduces_its_lengths(
        v1 in vector3(), v2 in vector3(), v3 in vector3(),
    ) {
        let det = v1[0] * (v2[1] * v3[2] - v2[2] * v3[1])
            - v1[1] * (v2[0] * v3[2] - v2[2] * v3[0])
            + v1[2] * (v2[0] * v3[1] - v2[1] * v3[0]);
        prop_assume!(det.abs() > 0.05);
        let l = edge_lengths(&phi_embed(v1), &phi_embed(v2), &phi_embed(v3));
        let edges = realize_from_lengths(&l).unwrap();
        let rebuilt = edge_lengths(
            &phi_embed(edges[0]),
            &phi_embed(edges[1]),
            &phi_embed(edges[2]),
        );
        for (x, y) in l.as_array().into_iter().zip(rebuilt.as_array()) {
            prop_assert!((x - y).abs() < 1e-8 * (1.0 + x.abs()));
        }
    }

    #[test]
    fn coordinate_shift_is_an_involution(
        v1 in vector3(), v2 in vector3(), v3 in vector3(),
    ) {
        prop_assume!(norm3(&v1) > 0.3 && norm3(&v2) > 0.3 && norm3(&v3) > 0.3);
        let sum = [v1[0] + v2[0] + v3[0], v1[1] + v2[1] + v3[1], v1[2] + v2[2] + v3[2]];
        prop_assume!(norm3(&sum) > 0.3);
        let t = MatrixTriple::from_vectors(v1, v2, v3);
        let theta = [
            Complex64::new(norm3(&v1), 0.0),
            Complex64::new(norm3(&v2), 0.0),
            Complex64::new(norm3(&v3), 0.0),
            Complex64::new(norm3(&sum), 0.0),
        ];
        let c = coordinates(&t, &theta, 1e-8).unwrap();
        let back = okamoto_coords(&okamoto_coords(&c));
        for (x, y) in c.theta.iter().zip(&back.theta) {
            prop_assert!((x - y).norm() < 1e-12);
        }
        prop_assert!((c.lambda12 - back.lambda12).norm() < 1e-12);
        prop_assert!((c.lambda23 - back.lambda23).norm() < 1e-12);
        prop_assert!((c.lambda13 - back.lambda13).norm() < 1e-12);
    }

    #[test]
    fn spherical_triples_have_realizable_lengths(
        q1 in [-1.0f64..=1.0, -1.0..=1.0, -1.0..=1.0, -1.0..=1.0],
        q2 in [-1.0f64..=1.0, -1.0..=1.0, -1.0..=1.0, -1.0..=1.0],
        q3 in [-1.0f64..=1.0, -1.0..=1.0, -1.0..=1.0, -1.0..=1.0],
    ) {
        let n = |q: &[f64; 4]| (q.iter().map(|x| x * x).sum::<f64>()).sqrt();
        prop_assume!(n(&q1) > 0.2 && n(&q2) > 0.2 && n(&q3) > 0.2);
        let m1 = Su2::from_quaternion(q1[0], q1[1], q1[2], q1[3]);
        let m2 = Su2::from_quaternion(q2[0], q2[1], q2[2], q2[3]);
        let m3 = Su2::from_quaternion(q3[0], q3[1], q3[2], q3[3]);
        let l = spherical_lengths(&m1, &m2, &m3);
        prop_assert!(spherical_realizable(&l, 1e-9));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn series_jets_satisfy_the_equation_to_their_order(
        t0 in 2.5f64..=4.0,
        y0 in 1.5f64..=3.0,
        y1 in -1.0f64..=1.0,
        th in [-2.0f64..=2.0, -2.0..=2.0, -2.0..=2.0, -2.0..=2.0],
    ) {
        prop_assume!((y0 - t0).abs() > 0.4);
        let theta = ThetaParams::real(th[0], th[1], th[2], th[3]);
        let p = params_from_theta(&theta);
        let y = series_solution(
            Complex64::new(t0, 0.0),
            Complex64::new(y0, 0.0),
            Complex64::new(y1, 0.0),
            &p,
            8,
            96,
        )
        .unwrap();
        let res = residual_series(&y, &p).unwrap();
        for k in 0..=6 {
            prop_assert!(res.coeffs[k].abs_f64() < 1e-20);
        }
        // parameter map is even in the first three thetas
        let flipped = ThetaParams::real(-th[0], -th[1], -th[2], th[3]);
        let pf = params_from_theta(&flipped);
        prop_assert!((p.alpha - pf.alpha).norm() < 1e-14);
        prop_assert!((p.beta - pf.beta).norm() < 1e-14);
        prop_assert!((p.gamma - pf.gamma).norm() < 1e-14);
        prop_assert!((p.delta - pf.delta).norm() < 1e-14);
    }
}
