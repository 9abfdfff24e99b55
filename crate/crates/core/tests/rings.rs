//! Quotient rings checked against the h-vector of the underlying complex,
//! an independent dense elimination, and ring axioms.

use coxring::fans::{SimplicialComplex, WpFan};
use coxring::linalg::{rank, Matrix};
use coxring::rings::{
    build_r_p, build_r_wp, linear_poly, p_presentation, poly_mul, sr_basis, wp_presentation,
    Monomial, Polynomial, Presentation, QuotientOptions, QuotientRing,
};
use coxring::rootdata::{cartan_catalog, AnyDatum, CartanMatrix, DatumVisitor, Mode, PairingDatum};
use coxring::scalar::{Field, Rational, Rationals};
use proptest::prelude::*;

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// h-vector of a pure complex of dimension `d - 1` from its face numbers.
fn h_vector(complex: &SimplicialComplex, d: usize) -> Vec<usize> {
    let f: Vec<i64> = (0..=d)
        .map(|k| complex.faces_of_size(k).len() as i64)
        .collect();
    (0..=d as i64)
        .map(|k| {
            let h: i64 = (0..=k)
                .map(|i| {
                    (-1i64).pow((k - i) as u32) * binomial(d as i64 - i, k - i) * f[i as usize]
                })
                .sum();
            h as usize
        })
        .collect()
}

/// Dimensions of the quotient from dense ranks of the relation spaces.
fn dense_dims<F: Field>(pres: &Presentation<F>) -> Vec<usize> {
    let f = pres.field();
    let mut dims = vec![1];
    for d in 1..=pres.lattice_rank() + 1 {
        let cols = sr_basis(pres.complex(), d);
        let prev = sr_basis(pres.complex(), d - 1);
        let mut rows = Vec::new();
        for m in &prev {
            for j in 0..pres.lattice_rank() {
                let mut row = vec![f.zero(); cols.len()];
                for (v, c) in &pres.linear_forms()[j] {
                    if let Ok(at) = cols.binary_search(&m.mul_var(*v as u32)) {
                        row[at] = c.clone();
                    }
                }
                rows.push(row);
            }
        }
        let rk = if rows.is_empty() {
            0
        } else {
            rank(f, &Matrix::from_rows(rows))
        };
        let dim = cols.len() - rk;
        if dim == 0 {
            break;
        }
        dims.push(dim);
    }
    dims
}

struct Dims {
    p: Vec<usize>,
    wp: Vec<usize>,
    wp_h_vector: Vec<usize>,
    wp_dense: Option<Vec<usize>>,
    order: usize,
}

struct DimsVisitor {
    dense: bool,
}

impl DatumVisitor for DimsVisitor {
    type Output = Dims;
    fn visit<F: Field>(self, d: &PairingDatum<F>) -> Dims {
        let t = d.enumerate_group_default().unwrap();
        let fan = WpFan::new(d, &t);
        let pres = wp_presentation(d, &t, &fan).unwrap();
        Dims {
            p: build_r_p(d, QuotientOptions::default())
                .unwrap()
                .graded_dims(),
            wp: build_r_wp(d, &t, &fan, QuotientOptions::default())
                .unwrap()
                .graded_dims(),
            wp_h_vector: h_vector(pres.complex(), d.rank()),
            wp_dense: self.dense.then(|| dense_dims(&pres)),
            order: t.order(),
        }
    }
}

fn dims(label: &str, mode: Mode, dense: bool) -> Dims {
    AnyDatum::from_label(label, mode)
        .unwrap()
        .visit(DimsVisitor { dense })
}

#[test]
fn graded_dims_match_h_vectors() {
    for (label, mode) in [
        ("A1", Mode::Crystallographic),
        ("A2", Mode::Crystallographic),
        ("B2", Mode::Crystallographic),
        ("G2", Mode::Crystallographic),
        ("A3", Mode::Crystallographic),
        ("C3", Mode::Crystallographic),
        ("A1xA2", Mode::Crystallographic),
        ("I2(5)", Mode::Coxeter),
        ("I2(7)", Mode::Coxeter),
        ("H3", Mode::Coxeter),
    ] {
        let r = dims(label, mode, false);
        assert_eq!(r.wp, r.wp_h_vector, "{label}");
        assert_eq!(r.wp.iter().sum::<usize>(), r.order, "{label}");
        let rank = r.p.len() - 1;
        assert_eq!(
            r.p,
            (0..=rank)
                .map(|k| binomial(rank as i64, k as i64) as usize)
                .collect::<Vec<_>>()
        );
    }
}

#[test]
fn sparse_elimination_matches_dense_ranks() {
    for (label, mode) in [
        ("A2", Mode::Crystallographic),
        ("B2", Mode::Coxeter),
        ("I2(5)", Mode::Coxeter),
        ("A1xA1", Mode::Crystallographic),
        ("A3", Mode::Crystallographic),
    ] {
        let r = dims(label, mode, true);
        assert_eq!(Some(r.wp), r.wp_dense, "{label}");
    }
}

#[test]
fn both_modes_give_the_same_dimensions() {
    for label in ["A2", "B2", "G2", "A3", "I2(6)"] {
        let c = dims(label, Mode::Crystallographic, false);
        let x = dims(label, Mode::Coxeter, false);
        assert_eq!(c.p, x.p, "{label}");
        assert_eq!(c.wp, x.wp, "{label}");
    }
}

fn crystal(label: &str) -> PairingDatum<Rationals> {
    PairingDatum::crystallographic(&cartan_catalog(label).unwrap())
}

fn wp_ring(label: &str, opts: QuotientOptions) -> QuotientRing<Rationals> {
    let d = crystal(label);
    let t = d.enumerate_group_default().unwrap();
    let fan = WpFan::new(&d, &t);
    build_r_wp(&d, &t, &fan, opts).unwrap()
}

fn var(v: u32) -> Monomial {
    Monomial::var(v)
}

#[test]
fn worked_ring_examples() {
    let a1 = wp_ring("A1", QuotientOptions::default());
    let complex = a1.presentation().complex();
    assert_eq!(sr_basis(complex, 1), vec![var(0), var(1)]);
    assert_eq!(
        sr_basis(complex, 2),
        vec![
            Monomial::from_vars(vec![0, 0]),
            Monomial::from_vars(vec![1, 1])
        ]
    );
    assert_eq!(a1.graded_dims(), vec![1, 1]);
    assert_eq!(
        a1.nf_monomial(&var(0)).unwrap(),
        a1.nf_monomial(&var(1)).unwrap()
    );
    assert!(a1
        .nf_monomial(&Monomial::from_vars(vec![0, 0]))
        .unwrap()
        .is_empty());
    assert_eq!(a1.presentation().minimal_non_faces(), vec![vec![0, 1]]);

    let p_a1 = build_r_p(&crystal("A1"), QuotientOptions::default()).unwrap();
    assert_eq!(p_a1.sr_basis(1).unwrap(), &[var(0), var(1)]);
    assert_eq!(p_a1.graded_dims(), vec![1, 1]);

    let p_a2 = build_r_p(&crystal("A2"), QuotientOptions::default()).unwrap();
    assert_eq!(p_a2.graded_dims(), vec![1, 2, 1]);
    // x1 y1 is a non-face
    assert!(p_a2
        .nf_monomial(&Monomial::from_vars(vec![0, 2]))
        .unwrap()
        .is_empty());
    assert_eq!(
        p_presentation(&crystal("A2")).unwrap().minimal_non_faces(),
        vec![vec![0, 2], vec![1, 3]]
    );
    assert_eq!(
        p_presentation(&crystal("A1xA1"))
            .unwrap()
            .minimal_non_faces()
            .len(),
        2
    );
    for j in 0..2 {
        let l = p_presentation(&crystal("A2")).unwrap().linear_form_poly(j);
        assert!(p_a2.is_zero_class(&l).unwrap());
    }

    assert_eq!(
        wp_ring("A2", QuotientOptions::default()).graded_dims(),
        vec![1, 4, 1]
    );

    let zero = PairingDatum::crystallographic(&CartanMatrix::new("", Vec::new()).unwrap());
    assert_eq!(
        build_r_p(&zero, QuotientOptions::default())
            .unwrap()
            .graded_dims(),
        vec![1]
    );
    let t0 = zero.enumerate_group_default().unwrap();
    let fan0 = WpFan::new(&zero, &t0);
    assert_eq!(
        build_r_wp(&zero, &t0, &fan0, QuotientOptions::default())
            .unwrap()
            .graded_dims(),
        vec![1]
    );
}

#[test]
fn equivariant_model_keeps_every_face_monomial() {
    let opts = QuotientOptions {
        degree_cap: Some(3),
        equivariant_only: true,
    };
    let ring = wp_ring("A2", opts);
    assert!(ring.is_equivariant_only());
    assert_eq!(ring.graded_dims(), vec![1, 6, 12, 18]);
    assert!(ring
        .nf_monomial(&Monomial::from_vars(vec![0, 0, 0, 0]))
        .is_err());
}

fn random_poly(
    ring: &QuotientRing<Rationals>,
    d: usize,
    picks: &[(usize, i64)],
) -> Polynomial<Rational> {
    let monos = ring.sr_basis(d).unwrap();
    let mut p = Polynomial::new();
    for &(k, c) in picks {
        coxring::rings::poly_add_term(
            &Rationals,
            &mut p,
            monos[k % monos.len()].clone(),
            Rational::from_int(c),
        );
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_multiplicative(
        which in 0usize..3,
        a in proptest::collection::vec((any::<usize>(), -3i64..4), 1..4),
        b in proptest::collection::vec((any::<usize>(), -3i64..4), 1..4),
        da in 1usize..3,
    ) {
        let ring = wp_ring(["A2", "B2", "A3"][which], QuotientOptions::default());
        let db = 1;
        let pa = random_poly(&ring, da, &a);
        let pb = random_poly(&ring, db, &b);
        let ca = ring.class_of(da, &pa).unwrap();
        let cb = ring.class_of(db, &pb).unwrap();
        let direct = ring.class_of(da + db, &poly_mul(&Rationals, &pa, &pb)).unwrap();
        let via_classes = ring.multiply(da, &ca, db, &cb).unwrap();
        prop_assert_eq!(direct, via_classes);
    }

    #[test]
    fn multiples_of_linear_relations_vanish(
        which in 0usize..3,
        a in proptest::collection::vec((any::<usize>(), -3i64..4), 1..4),
        j in 0usize..3,
    ) {
        let label = ["A2", "B2", "A3"][which];
        let d = crystal(label);
        let t = d.enumerate_group_default().unwrap();
        let fan = WpFan::new(&d, &t);
        let pres = wp_presentation(&d, &t, &fan).unwrap();
        let ring = build_r_wp(&d, &t, &fan, QuotientOptions::default()).unwrap();
        let l = pres.linear_form_poly(j % d.rank());
        let p = random_poly(&ring, 1, &a);
        prop_assert!(ring.is_zero_class(&poly_mul(&Rationals, &l, &p)).unwrap());
        prop_assert!(ring.is_zero_class(&l).unwrap());
    }

    #[test]
    fn class_polynomial_round_trips(which in 0usize..2, coords in proptest::collection::vec(-5i64..6, 6)) {
        let ring = wp_ring(["A2", "B2"][which], QuotientOptions::default());
        let d = 1;
        let c: Vec<Rational> = coords.iter().take(ring.dim(d)).map(|&x| Rational::from_int(x)).collect();
        let poly = ring.class_polynomial(d, &c);
        prop_assert_eq!(ring.class_of(d, &poly).unwrap(), c);
    }
}

#[test]
fn linear_poly_skips_zero_coefficients() {
    let p = linear_poly(
        &Rationals,
        &[(0, Rational::from_int(0)), (1, Rational::from_int(2))],
    );
    assert_eq!(p.len(), 1);
}
