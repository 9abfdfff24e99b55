//! The group action on `R(WP)` by permutation of facet variables, induced
//! matrices on graded pieces, and invariant dimensions.

use rayon::prelude::*;

use crate::coxeter::GroupTable;
use crate::error::{Error, Result};
use crate::fans::WpFan;
use crate::linalg::{Matrix, SparseEchelon};
use crate::rings::{linear_poly, poly_pow, Monomial, Polynomial, QuotientRing};
use crate::scalar::Field;

/// `w' X(i,w) = X(i, min rep of w'w W_i)`, tabulated for every group element.
#[derive(Clone, Debug)]
pub struct VariablePermutationAction {
    perms: Vec<Vec<u32>>,
}

/// Image of the facet variable `var` under `w'`, straight from coset arithmetic.
pub fn act_on_variable<E: Clone, F: Field<Elem = E>>(
    fan: &WpFan<E>,
    table: &GroupTable<F>,
    w_prime: usize,
    var: u32,
) -> u32 {
    let facet = &fan.facets()[var as usize];
    let target = fan.min_rep(facet.i, table.multiply(w_prime, facet.w));
    fan.facet_id(facet.i, target)
        .expect("minimal representatives index facets") as u32
}

impl VariablePermutationAction {
    /// Tabulates all permutations using `perm(w s) = perm(w) . perm(s)`
    /// along the breadth-first words.
    pub fn new<E: Clone, F: Field<Elem = E>>(fan: &WpFan<E>, table: &GroupTable<F>) -> Self {
        let n = fan.facets().len() as u32;
        let gens: Vec<Vec<u32>> = (0..table.rank())
            .map(|s| {
                (0..n)
                    .map(|v| act_on_variable(fan, table, table.from_word(&[s]), v))
                    .collect()
            })
            .collect();
        let mut perms: Vec<Vec<u32>> = Vec::with_capacity(table.order());
        perms.push((0..n).collect());
        for w in 1..table.order() {
            let s = *table.element(w).word.last().unwrap();
            let parent = &perms[table.mul_gen(w, s)];
            perms.push(gens[s].iter().map(|&v| parent[v as usize]).collect());
        }
        VariablePermutationAction { perms }
    }

    pub fn perm(&self, w: usize) -> &[u32] {
        &self.perms[w]
    }

    pub fn act_monomial(&self, w: usize, m: &Monomial) -> Monomial {
        m.permute(&self.perms[w])
    }

    pub fn act_polynomial<E: Clone>(&self, w: usize, p: &Polynomial<E>) -> Polynomial<E> {
        p.iter()
            .map(|(m, c)| (self.act_monomial(w, m), c.clone()))
            .collect()
    }
}

/// Matrix of `w` on the quotient basis of degree `d`; column `k` is the
/// class of the image of basis monomial `k`.
pub fn action_matrix<F: Field>(
    ring: &QuotientRing<F>,
    action: &VariablePermutationAction,
    w: usize,
    d: usize,
) -> Result<Matrix<F::Elem>> {
    let f = ring.field();
    let basis = ring.quotient_basis(d);
    let n = basis.len();
    let mut m = Matrix::filled(n, n, f.zero());
    for (k, b) in basis.iter().enumerate() {
        for (row, v) in ring.nf_monomial(&action.act_monomial(w, b))? {
            m.set(row, k, v);
        }
    }
    Ok(m)
}

/// Trace of `w` on degree `d`, reading only diagonal coordinates.
pub fn action_trace<F: Field>(
    ring: &QuotientRing<F>,
    action: &VariablePermutationAction,
    w: usize,
    d: usize,
) -> Result<F::Elem> {
    let f = ring.field();
    let mut acc = f.zero();
    for (k, b) in ring.quotient_basis(d).into_iter().enumerate() {
        let v = ring.nf_coefficient(&action.act_monomial(w, b), k)?;
        acc = f.add(&acc, &v);
    }
    Ok(acc)
}

/// `dim R_d^W` as the average of traces over the group.
pub fn invariant_dimension<F: Field>(
    ring: &QuotientRing<F>,
    action: &VariablePermutationAction,
    table: &GroupTable<F>,
    d: usize,
) -> Result<usize> {
    let f = ring.field();
    let traces: Vec<F::Elem> = (0..table.order())
        .into_par_iter()
        .map(|w| action_trace(ring, action, w, d))
        .collect::<Result<_>>()?;
    let total = traces.iter().fold(f.zero(), |acc, t| f.add(&acc, t));
    let avg = f.div(&total, &f.from_int(table.order() as i64));
    f.as_rational(&avg)
        .filter(|q| q.is_integer())
        .and_then(|q| q.to_i64())
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| {
            Error::Internal(format!(
                "average trace in degree {d} is {}, not a nonnegative integer",
                f.render(&avg)
            ))
        })
}

/// `dim R_d^W` as the common kernel of `A(s_k) - I` over the generators.
pub fn fixed_subspace_dimension<F: Field>(
    ring: &QuotientRing<F>,
    action: &VariablePermutationAction,
    table: &GroupTable<F>,
    d: usize,
) -> Result<usize> {
    let f = ring.field();
    let basis = ring.quotient_basis(d);
    let n = basis.len();
    // rank of the stacked matrix equals the rank of its transpose, whose
    // rows are the columns (image of b_k) - b_k
    let mut ech = SparseEchelon::new(f.clone(), n);
    for s in 0..table.rank() {
        let g = table.from_word(&[s]);
        for (k, b) in basis.iter().enumerate() {
            let mut row = ring.nf_monomial(&action.act_monomial(g, b))?;
            match row.binary_search_by_key(&k, |e| e.0) {
                Ok(at) => row[at].1 = f.sub(&row[at].1, &f.one()),
                Err(at) => row.insert(at, (k, f.neg(&f.one()))),
            }
            ech.insert(&row);
        }
    }
    Ok(n - ech.rank())
}

/// Orbit sums `sum_{w in W^i} X(i,w)`, one per `i`.
pub fn invariant_generators<E: Clone, F: Field<Elem = E>>(
    field: &F,
    fan: &WpFan<E>,
) -> Vec<Polynomial<E>> {
    (0..fan.rank())
        .map(|i| {
            let coeffs: Vec<(u32, E)> = fan
                .facets()
                .iter()
                .filter(|fc| fc.i == i)
                .map(|fc| (fc.id as u32, field.one()))
                .collect();
            linear_poly(field, &coeffs)
        })
        .collect()
}

/// Whether `(sum_w X(i,w))^n` equals `sum_w X(i,w)^n` in `ring` (meant for
/// the Stanley–Reisner model, where the cross terms are non-faces).
pub fn check_power_identity<F: Field>(
    ring: &QuotientRing<F>,
    fan: &WpFan<F::Elem>,
    i: usize,
    n: u32,
) -> Result<bool> {
    let f = ring.field();
    let orbit = &invariant_generators(f, fan)[i];
    let lhs = poly_pow(f, orbit, n);
    let rhs: Polynomial<F::Elem> = orbit
        .keys()
        .map(|m| (Monomial::from_vars(vec![m.vars()[0]; n as usize]), f.one()))
        .collect();
    Ok(ring.class_of(n as usize, &lhs)? == ring.class_of(n as usize, &rhs)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{identity, mat_mul};
    use crate::rings::{build_r_wp, QuotientOptions};
    use crate::rootdata::{cartan_catalog, PairingDatum};
    use crate::scalar::Rationals;

    struct Setup {
        table: GroupTable<Rationals>,
        fan: WpFan<crate::scalar::Rational>,
        action: VariablePermutationAction,
        ring: QuotientRing<Rationals>,
    }

    fn setup(label: &str, opts: QuotientOptions) -> Setup {
        let d = PairingDatum::crystallographic(&cartan_catalog(label).unwrap());
        let table = d.enumerate_group_default().unwrap();
        let fan = WpFan::new(&d, &table);
        let action = VariablePermutationAction::new(&fan, &table);
        let ring = build_r_wp(&d, &table, &fan, opts).unwrap();
        Setup {
            table,
            fan,
            action,
            ring,
        }
    }

    #[test]
    fn permutations_match_direct_formula() {
        let s = setup("B2", QuotientOptions::default());
        for w in 0..s.table.order() {
            for v in 0..s.fan.facets().len() as u32 {
                assert_eq!(
                    s.action.perm(w)[v as usize],
                    act_on_variable(&s.fan, &s.table, w, v)
                );
            }
        }
        let a1 = setup("A1", QuotientOptions::default());
        assert_eq!(a1.action.perm(1), &[1, 0]);
    }

    #[test]
    fn a1_degree_one_is_trivial() {
        let s = setup("A1", QuotientOptions::default());
        let m = action_matrix(&s.ring, &s.action, 1, 1).unwrap();
        assert_eq!(m, identity(&Rationals, 1));
        assert_eq!(
            action_matrix(&s.ring, &s.action, 1, 0).unwrap(),
            identity(&Rationals, 1)
        );
    }

    #[test]
    fn action_is_a_homomorphism() {
        let s = setup("A2", QuotientOptions::default());
        let n = s.table.order();
        for d in 0..=2 {
            for u in 0..n {
                for v in 0..n {
                    let lhs = mat_mul(
                        &Rationals,
                        &action_matrix(&s.ring, &s.action, u, d).unwrap(),
                        &action_matrix(&s.ring, &s.action, v, d).unwrap(),
                    );
                    let uv = s.table.multiply(u, v);
                    assert_eq!(lhs, action_matrix(&s.ring, &s.action, uv, d).unwrap());
                }
            }
        }
    }

    #[test]
    fn invariant_dimensions() {
        let s = setup("A2", QuotientOptions::default());
        assert_eq!(
            invariant_dimension(&s.ring, &s.action, &s.table, 0).unwrap(),
            1
        );
        assert_eq!(
            invariant_dimension(&s.ring, &s.action, &s.table, 1).unwrap(),
            2
        );
        let b2 = setup("B2", QuotientOptions::default());
        assert_eq!(
            invariant_dimension(&b2.ring, &b2.action, &b2.table, 2).unwrap(),
            1
        );
        assert_eq!(
            fixed_subspace_dimension(&b2.ring, &b2.action, &b2.table, 2).unwrap(),
            1
        );
        assert_eq!(
            fixed_subspace_dimension(&b2.ring, &b2.action, &b2.table, 1).unwrap(),
            2
        );
    }

    #[test]
    fn power_identity() {
        let opts = QuotientOptions {
            degree_cap: Some(3),
            equivariant_only: true,
        };
        for label in ["A2", "B2"] {
            let s = setup(label, opts);
            for i in 0..2 {
                for n in 1..=3 {
                    assert!(
                        check_power_identity(&s.ring, &s.fan, i, n).unwrap(),
                        "{label} {i} {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn orbit_sums() {
        let s = setup("A2", QuotientOptions::default());
        let gens = invariant_generators(&Rationals, &s.fan);
        assert_eq!(gens.len(), 2);
        assert!(gens.iter().all(|g| g.len() == 3));
        let a1 = setup("A1", QuotientOptions::default());
        assert_eq!(invariant_generators(&Rationals, &a1.fan)[0].len(), 2);
    }
}
