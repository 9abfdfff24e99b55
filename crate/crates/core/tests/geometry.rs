//! Pairings, group actions on roots and coweights, and the facet
//! structure of the two polytopes.

use coxring::coxeter::{gram_matrix, GenSet, GroupTable};
use coxring::fans::{
    cones_of_p, facets_of_p, facets_of_wp, p_face_nonempty, wp_face_nonempty, FacetKind, WpFan,
};
use coxring::linalg::{mat_mul, rank, Matrix};
use coxring::rootdata::{
    beta_vectors, cartan_catalog, coroot_coords, coxeter_catalog, pair, AnyDatum, CartanMatrix,
    DatumVisitor, Mode, PairingDatum,
};
use coxring::scalar::{Field, Rational, Rationals};
use proptest::prelude::*;

fn q(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_int(x)).collect()
}

fn crystal(label: &str) -> (PairingDatum<Rationals>, GroupTable<Rationals>) {
    let d = PairingDatum::crystallographic(&cartan_catalog(label).unwrap());
    let t = d.enumerate_group_default().unwrap();
    (d, t)
}

/// Runs a check on every datum of a list, in both modes where available.
fn for_each_datum(labels: &[&str], check: impl Fn(&AnyDatum)) {
    for &label in labels {
        check(&AnyDatum::from_label(label, Mode::Coxeter).unwrap());
        if let Ok(d) = AnyDatum::from_label(label, Mode::Crystallographic) {
            check(&d);
        }
    }
}

#[test]
fn simple_roots_and_coweights_are_dual() {
    struct Dual;
    impl DatumVisitor for Dual {
        type Output = ();
        fn visit<F: Field>(self, d: &PairingDatum<F>) {
            let f = d.field();
            for i in 0..d.rank() {
                for j in 0..d.rank() {
                    let v = pair(f, &d.simple_root(i), &d.fundamental_coweight(j)).unwrap();
                    let expected = if i == j { f.one() } else { f.zero() };
                    assert_eq!(v, expected, "{} {i} {j}", d.label());
                }
            }
        }
    }
    for_each_datum(&["A1", "A3", "B3", "G2", "H3", "I2(7)", "A1xA2"], |d| {
        d.visit(Dual)
    });
}

#[test]
fn coroots_are_cartan_columns() {
    for label in ["A2", "B3", "C3", "G2", "F4", "D4"] {
        let c = cartan_catalog(label).unwrap();
        let r = c.rank();
        for j in 0..r {
            let coroot = coroot_coords(&c, j);
            for i in 0..r {
                let alpha: Vec<Rational> = (0..r)
                    .map(|k| Rational::from_int((k == i) as i64))
                    .collect();
                assert_eq!(
                    pair(&Rationals, &alpha, &coroot).unwrap(),
                    Rational::from_int(c.get(i, j))
                );
            }
        }
    }
    // (alpha_1 + alpha_2, beta_1) in A2
    let c = cartan_catalog("A2").unwrap();
    let beta1 = &beta_vectors(&c)[0].0;
    assert_eq!(
        pair(&Rationals, &q(&[1, 1]), beta1).unwrap(),
        Rational::from_int(1)
    );
}

#[test]
fn beta_special_cases() {
    let a1 = beta_vectors(&cartan_catalog("A1").unwrap());
    assert_eq!(a1, vec![(q(&[1]), Rational::from_int(2))]);
    for r in 2..=4 {
        let c = cartan_catalog(&format!("B{r}")).unwrap();
        let betas = beta_vectors(&c);
        let mut last = vec![0; r];
        last[r - 2] = -1;
        last[r - 1] = 1;
        assert_eq!(betas[r - 1], (q(&last), Rational::from_int(2)), "B{r}");
        for (i, (b, k)) in betas.iter().enumerate().take(r - 1) {
            assert_eq!(b, &coroot_coords(&c, i));
            assert_eq!(k, &Rational::one());
        }
    }
    for label in ["A2", "A3", "C3", "D4", "G2", "F4"] {
        let c = cartan_catalog(label).unwrap();
        for (i, (b, k)) in beta_vectors(&c).into_iter().enumerate() {
            assert_eq!(b, coroot_coords(&c, i), "{label}");
            assert!(k.is_one(), "{label}");
        }
    }
}

#[test]
fn coxeter_mode_preserves_the_gram_form() {
    struct Gram;
    impl DatumVisitor for Gram {
        type Output = ();
        fn visit<F: Field>(self, d: &PairingDatum<F>) {
            let f = d.field();
            let b = gram_matrix(d.coxeter_matrix(), f).unwrap();
            let t = d.enumerate_group_default().unwrap();
            for el in t.elements() {
                let m = &el.matrix;
                assert_eq!(
                    mat_mul(f, &mat_mul(f, &m.transpose(), &b), m),
                    b,
                    "{}",
                    d.label()
                );
            }
        }
    }
    for label in ["A3", "B3", "H3", "I2(8)", "G2", "A1xI2(5)"] {
        AnyDatum::from_label(label, Mode::Coxeter)
            .unwrap()
            .visit(Gram);
    }
}

#[test]
fn worked_action_examples() {
    let (a1, t1) = crystal("A1");
    assert_eq!(a1.coweight_action(&t1, 1, &q(&[1])), q(&[-1]));
    let (a2, t2) = crystal("A2");
    let s1 = t2.from_word(&[0]);
    assert_eq!(a2.coweight_action(&t2, s1, &q(&[1, 0])), q(&[-1, 1]));
    assert_eq!(a2.coweight_action(&t2, 0, &q(&[3, 5])), q(&[3, 5]));
}

#[test]
fn stabilizer_of_a_fundamental_coweight_is_the_maximal_parabolic() {
    struct Stab;
    impl DatumVisitor for Stab {
        type Output = ();
        fn visit<F: Field>(self, d: &PairingDatum<F>) {
            let t = d.enumerate_group_default().unwrap();
            let r = d.rank();
            for i in 0..r {
                let varpi = d.fundamental_coweight(i);
                let stab: Vec<usize> = (0..t.order())
                    .filter(|&w| d.coweight_action(&t, w, &varpi) == varpi)
                    .collect();
                assert_eq!(
                    stab,
                    t.parabolic_subgroup(GenSet::all_but(r, i)),
                    "{} {i}",
                    d.label()
                );
                // distinct cosets give distinct facet normals
                let reps = t.parabolic_quotient(GenSet::all_but(r, i));
                let mut normals: Vec<Vec<String>> = reps
                    .iter()
                    .map(|&w| {
                        d.facet_normal(&t, i, w)
                            .iter()
                            .map(|x| d.field().render(x))
                            .collect()
                    })
                    .collect();
                normals.sort();
                normals.dedup();
                assert_eq!(normals.len(), reps.len());
            }
        }
    }
    for_each_datum(&["A3", "B3", "H3", "G2", "I2(5)", "A1xA2"], |d| {
        d.visit(Stab)
    });
}

#[test]
fn facet_counts_and_vertices() {
    struct Count;
    impl DatumVisitor for Count {
        type Output = ();
        fn visit<F: Field>(self, d: &PairingDatum<F>) {
            let f = d.field();
            let t = d.enumerate_group_default().unwrap();
            let r = d.rank();
            let facets = facets_of_wp(d, &t);
            let expected: usize = (0..r)
                .map(|i| t.order() / t.parabolic_subgroup(GenSet::all_but(r, i)).len())
                .sum();
            assert_eq!(facets.len(), expected);
            let fan = WpFan::new(d, &t);
            for v in 0..t.order() {
                let ids = fan.vertex_facets(v);
                assert_eq!(ids.len(), r);
                assert!(fan.is_face_by_cosets(&ids, &t));
                // the facets through the vertex v are v . varpi_i, a basis
                let rows: Vec<Vec<F::Elem>> = ids
                    .iter()
                    .map(|&k| facets[k as usize].normal.clone())
                    .collect();
                assert_eq!(rank(f, &Matrix::from_rows(rows)), r);
                for &k in &ids {
                    let fc = &facets[k as usize];
                    assert_eq!(
                        fc.normal,
                        d.coweight_action(&t, v, &d.fundamental_coweight(fc.i))
                    );
                }
            }
        }
    }
    for_each_datum(&["A1", "A2", "B2", "A3", "H3", "A1xA1"], |d| d.visit(Count));
    let (a1, t1) = crystal("A1");
    let normals: Vec<_> = facets_of_wp(&a1, &t1)
        .into_iter()
        .map(|f| f.normal)
        .collect();
    assert_eq!(normals, vec![q(&[1]), q(&[-1])]);
}

#[test]
fn worked_face_examples() {
    let (_, t) = crystal("A2");
    let s1 = t.from_word(&[0]);
    assert!(!wp_face_nonempty(&[(0, 0), (0, s1)], &t));
    assert!(wp_face_nonempty(&[(0, 0), (1, 0)], &t));
    assert!(wp_face_nonempty(&[], &t));
    assert!(p_face_nonempty(&[(FacetKind::Q, 0), (FacetKind::C, 1)]));
    assert!(!p_face_nonempty(&[(FacetKind::Q, 0), (FacetKind::C, 0)]));
    assert!(p_face_nonempty(&[(FacetKind::Q, 0), (FacetKind::Q, 1)]));
}

#[test]
fn dominant_polytope_facets_and_cones() {
    let (a2, _) = crystal("A2");
    let normals: Vec<_> = facets_of_p(&a2).into_iter().map(|f| f.normal).collect();
    assert_eq!(
        normals,
        vec![q(&[1, 0]), q(&[0, 1]), q(&[-2, 1]), q(&[1, -2])]
    );
    let (a1, _) = crystal("A1");
    let normals: Vec<_> = facets_of_p(&a1).into_iter().map(|f| f.normal).collect();
    assert_eq!(normals, vec![q(&[1]), q(&[-1])]);

    assert_eq!(cones_of_p(1).len(), 3);
    let two = cones_of_p(2);
    assert_eq!(two.len(), 9);
    assert_eq!(two.iter().filter(|c| c.dimension() == 2).count(), 4);
    let chamber = two
        .iter()
        .find(|c| c.j.is_empty() && c.k == GenSet::full(2))
        .unwrap();
    assert_eq!(chamber.generators(&a2), vec![q(&[1, 0]), q(&[0, 1])]);
}

#[test]
fn rank_zero_is_degenerate_but_valid() {
    let c = CartanMatrix::new("", Vec::new()).unwrap();
    let d = PairingDatum::crystallographic(&c);
    assert!(facets_of_p(&d).is_empty());
    let t = d.enumerate_group_default().unwrap();
    assert_eq!(t.order(), 1);
    assert!(facets_of_wp(&d, &t).is_empty());
    assert_eq!(cones_of_p(0).len(), 1);
    assert!(coxeter_catalog("").is_err());
}

fn arb_vec(r: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-6i64..7, r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn actions_preserve_the_pairing(which in 0usize..4, w in any::<u32>(), a in arb_vec(3), b in arb_vec(3)) {
        let (d, t) = crystal(["A3", "B3", "C3", "A1xA2"][which]);
        let w = w as usize % t.order();
        let (a, b) = (q(&a), q(&b));
        let lhs = pair(&Rationals, &d.root_action(&t, w, &a), &d.coweight_action(&t, w, &b)).unwrap();
        prop_assert_eq!(lhs, pair(&Rationals, &a, &b).unwrap());
    }

    #[test]
    fn coweight_action_is_a_homomorphism(which in 0usize..3, u in any::<u32>(), w in any::<u32>()) {
        let (d, t) = crystal(["A3", "B3", "G2"][which]);
        let (u, w) = (u as usize % t.order(), w as usize % t.order());
        let lhs = mat_mul(&Rationals, &d.coweight_matrix(&t, u), &d.coweight_matrix(&t, w));
        prop_assert_eq!(lhs, d.coweight_matrix(&t, t.multiply(u, w)));
    }
}
