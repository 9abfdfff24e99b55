//! The top-degree pairing on `R(WP)`, used to certify groups whose graded
//! pieces are too large for dense normal forms.
//!
//! Every maximal cone is simplicial, so a monomial with a repeated variable
//! can be rewritten, modulo one linear relation, as a combination of
//! monomials whose support is one vertex larger. Starting from
//! `D(X_F) = 1/|det F|` on maximal cones this gives a functional `D` on the
//! top degree, which is then checked against every relation of that degree.
//!
//! Pairing the shelling monomials `X_{R(w)}` (the descent facets of the
//! chamber `w`) with the complementary monomials gives triangular matrices
//! and so a lower bound on each graded dimension. The face ring of a sphere
//! is Cohen–Macaulay, so its quotient by a linear system of parameters has
//! total dimension equal to the number of maximal cones. When the lower
//! bounds add up to that number they are the dimensions, the pairing is
//! perfect, ideal membership is decided by pairing against `D`, and the
//! Koszul resolution gives the graded character.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::action::act_on_variable;
use crate::coxeter::GroupTable;
use crate::error::{Error, Result};
use crate::fans::{SimplicialComplex, WpFan};
use crate::linalg::{determinant, dot, inverse, Matrix, SparseEchelon};
use crate::rings::{poly_add_term, sr_basis, wp_presentation, Monomial, Polynomial, Presentation};
use crate::rootdata::PairingDatum;
use crate::scalar::Field;

pub struct DualityModel<F: Field> {
    field: F,
    rank: usize,
    presentation: Presentation<F>,
    /// Vertex set of the maximal cone of each group element.
    chambers: Vec<Vec<u32>>,
    chambers_at: Vec<Vec<usize>>,
    /// Some maximal cone containing each face.
    containing: HashMap<Vec<u32>, usize>,
    /// Inverse of the matrix whose rows are the rays of the cone.
    duals: Vec<Matrix<F::Elem>>,
    cone_values: Vec<F::Elem>,
    top: HashMap<Monomial, F::Elem>,
    restriction: Vec<Vec<u32>>,
    co_restriction: Vec<Vec<u32>>,
    co_index: HashMap<Vec<u32>, usize>,
    /// Chambers with `d` descents, in shelling order (length, then index).
    by_descents: Vec<Vec<usize>>,
    slot: Vec<usize>,
}

impl<F: Field> DualityModel<F> {
    pub fn new(
        datum: &PairingDatum<F>,
        table: &GroupTable<F>,
        fan: &WpFan<F::Elem>,
    ) -> Result<Self> {
        let f = datum.field().clone();
        let r = datum.rank();
        let presentation = wp_presentation(datum, table, fan)?;
        let chambers = fan.maximal_faces(table.order());
        let mut chambers_at = vec![Vec::new(); fan.facets().len()];
        let mut containing = HashMap::new();
        let mut duals = Vec::with_capacity(chambers.len());
        let mut cone_values = Vec::with_capacity(chambers.len());
        for (w, cone) in chambers.iter().enumerate() {
            for &v in cone {
                chambers_at[v as usize].push(w);
            }
            for mask in 0u32..1 << cone.len() {
                let face: Vec<u32> = (0..cone.len())
                    .filter(|&b| mask >> b & 1 == 1)
                    .map(|b| cone[b])
                    .collect();
                containing.entry(face).or_insert(w);
            }
            let n = Matrix::from_rows(
                cone.iter()
                    .map(|&v| presentation.rays()[v as usize].clone())
                    .collect(),
            );
            let det = determinant(&f, &n);
            let value = match f.sign(&det) {
                Ordering::Greater => f.inv(&det),
                Ordering::Less => f.inv(&f.neg(&det)),
                Ordering::Equal => None,
            };
            let (Some(value), Some(dual)) = (value, inverse(&f, &n)) else {
                return Err(Error::Internal(format!(
                    "maximal cone of {} is not simplicial",
                    table.word_string(w)
                )));
            };
            cone_values.push(value);
            duals.push(dual);
        }

        let mut restriction = Vec::with_capacity(chambers.len());
        let mut co_restriction = Vec::with_capacity(chambers.len());
        for w in 0..table.order() {
            let des = table.descents(w);
            let (mut a, mut b) = (Vec::new(), Vec::new());
            for i in 0..r {
                let id = fan.facet_id(i, fan.min_rep(i, w)).expect("facet") as u32;
                if des.contains(i) {
                    a.push(id);
                } else {
                    b.push(id);
                }
            }
            a.sort_unstable();
            b.sort_unstable();
            restriction.push(a);
            co_restriction.push(b);
        }
        let co_index = co_restriction
            .iter()
            .enumerate()
            .map(|(w, b)| (b.clone(), w))
            .collect();
        let mut shelling: Vec<usize> = (0..table.order()).collect();
        shelling.sort_by_key(|&w| (table.length(w), w));
        let mut by_descents = vec![Vec::new(); r + 1];
        let mut slot = vec![0; table.order()];
        for w in shelling {
            let d = restriction[w].len();
            slot[w] = by_descents[d].len();
            by_descents[d].push(w);
        }

        let mut model = DualityModel {
            field: f,
            rank: r,
            presentation,
            chambers,
            chambers_at,
            containing,
            duals,
            cone_values,
            top: HashMap::new(),
            restriction,
            co_restriction,
            co_index,
            by_descents,
            slot,
        };
        let mut memo = HashMap::new();
        for m in sr_basis(model.presentation.complex(), r) {
            model.top_entry(&m, &mut memo);
        }
        model.top = memo;
        Ok(model)
    }

    pub fn presentation(&self) -> &Presentation<F> {
        &self.presentation
    }

    fn complex(&self) -> &SimplicialComplex {
        self.presentation.complex()
    }

    fn top_entry(&self, m: &Monomial, memo: &mut HashMap<Monomial, F::Elem>) -> F::Elem {
        if let Some(v) = memo.get(m) {
            return v.clone();
        }
        let f = &self.field;
        let support = m.support();
        let cone = self.containing[&support];
        let value = if support.len() == self.rank {
            self.cone_values[cone].clone()
        } else {
            // x_v = -sum_u ell(n_u) x_u modulo the linear forms, where ell
            // is dual to the ray of v on this cone
            let vars = m.vars();
            let at = vars
                .windows(2)
                .position(|p| p[0] == p[1])
                .expect("repeated variable");
            let v = vars[at];
            let mut rest = vars.to_vec();
            rest.remove(at);
            let rest = Monomial::from_vars(rest);
            let k = self.chambers[cone]
                .binary_search(&v)
                .expect("vertex of its cone");
            let ell = self.duals[cone].column(k);
            let mut acc = f.zero();
            for u in self.complex().link_vertices(&support) {
                let coef = dot(f, &ell, &self.presentation.rays()[u as usize]);
                if f.is_zero(&coef) {
                    continue;
                }
                let t = self.top_entry(&rest.mul_var(u), memo);
                acc = f.sub(&acc, &f.mul(&coef, &t));
            }
            acc
        };
        memo.insert(m.clone(), value.clone());
        value
    }

    /// `D(m)` for a monomial of top degree.
    pub fn top_value(&self, m: &Monomial) -> F::Elem {
        self.top
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Whether `D` vanishes on `theta_j m` for every face monomial `m` of
    /// degree `r - 1` and every linear form `theta_j`.
    pub fn functional_annihilates_relations(&self) -> bool {
        let f = &self.field;
        let r = self.rank;
        if r == 0 {
            return true;
        }
        sr_basis(self.complex(), r - 1).iter().all(|m| {
            let support = m.support();
            let mut around = self.complex().link_vertices(&support);
            around.extend_from_slice(&support);
            let values: Vec<(u32, F::Elem)> = around
                .iter()
                .map(|&u| (u, self.top_value(&m.mul_var(u))))
                .collect();
            (0..r).all(|j| {
                let mut acc = f.zero();
                for (u, value) in &values {
                    acc = f.add(
                        &acc,
                        &f.mul(&self.presentation.rays()[*u as usize][j], value),
                    );
                }
                f.is_zero(&acc)
            })
        })
    }

    /// Maximal cones containing the face `sorted`.
    fn star(&self, sorted: &[u32]) -> Vec<usize> {
        let Some((&first, rest)) = sorted.split_first() else {
            return (0..self.chambers.len()).collect();
        };
        self.chambers_at[first as usize]
            .iter()
            .copied()
            .filter(|&w| {
                rest.iter()
                    .all(|v| self.chambers[w].binary_search(v).is_ok())
            })
            .collect()
    }

    /// Rank of the pairing between `X_{R(w)}` and `X_{F_v - R(v)}` over
    /// chambers with `d` descents; a lower bound for `dim R(WP)_d`.
    pub fn pairing_rank(&self, d: usize) -> usize {
        let f = &self.field;
        let r = self.rank;
        let rows = &self.by_descents[d];
        let mut matrix: Vec<Vec<(usize, F::Elem)>> = Vec::with_capacity(rows.len());
        let mut triangular = true;
        for (a, &w) in rows.iter().enumerate() {
            let mut partners: Vec<usize> = Vec::new();
            for u in self.star(&self.restriction[w]) {
                let cone = &self.chambers[u];
                for mask in 0u32..1 << r {
                    if mask.count_ones() as usize != r - d {
                        continue;
                    }
                    let t: Vec<u32> = (0..r)
                        .filter(|&b| mask >> b & 1 == 1)
                        .map(|b| cone[b])
                        .collect();
                    if let Some(&v) = self.co_index.get(&t) {
                        partners.push(v);
                    }
                }
            }
            partners.sort_unstable();
            partners.dedup();
            let mut row = Vec::new();
            let mut diagonal = false;
            for v in partners {
                let mut vars = self.restriction[w].clone();
                vars.extend_from_slice(&self.co_restriction[v]);
                let value = self.top_value(&Monomial::from_vars(vars));
                if f.is_zero(&value) {
                    continue;
                }
                let b = self.slot[v];
                triangular &= b >= a;
                diagonal |= b == a;
                row.push((b, value));
            }
            triangular &= diagonal;
            row.sort_by_key(|e| e.0);
            matrix.push(row);
        }
        if triangular {
            return rows.len();
        }
        let mut ech = SparseEchelon::new(f.clone(), rows.len());
        for row in &matrix {
            ech.insert(row);
        }
        ech.rank()
    }

    pub fn pairing_ranks(&self) -> Vec<usize> {
        (0..=self.rank).map(|d| self.pairing_rank(d)).collect()
    }

    /// Monomials of degree `k` with `support + face` a face.
    fn star_monomials(&self, face: &[u32], k: usize) -> Vec<Monomial> {
        let mut vertices = self.complex().link_vertices(face);
        vertices.extend_from_slice(face);
        vertices.sort_unstable();
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.extend_star(face, &vertices, 0, k, &mut current, &mut out);
        out
    }

    fn extend_star(
        &self,
        face: &[u32],
        vertices: &[u32],
        from: usize,
        k: usize,
        current: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if current.len() == k {
            out.push(Monomial::from_vars(current.clone()));
            return;
        }
        for (idx, &v) in vertices.iter().enumerate().skip(from) {
            if current.last() != Some(&v) {
                let mut g: Vec<u32> = face
                    .iter()
                    .chain(current.iter())
                    .copied()
                    .chain([v])
                    .collect();
                g.sort_unstable();
                g.dedup();
                if !self.complex().is_face(&g) {
                    continue;
                }
            }
            current.push(v);
            self.extend_star(face, vertices, idx, k, current, out);
            current.pop();
        }
    }

    /// Whether `p` lies in the relation ideal, by pairing each homogeneous
    /// part against a basis of the complementary degree. Only meaningful
    /// once the pairing ranks have been shown to be the dimensions.
    pub fn is_zero_class(&self, p: &Polynomial<F::Elem>) -> bool {
        let f = &self.field;
        let r = self.rank;
        let mut parts: Vec<Polynomial<F::Elem>> = vec![Polynomial::new(); r + 1];
        for (m, c) in p {
            if m.degree() <= r && self.complex().is_face(&m.support()) {
                parts[m.degree()].insert(m.clone(), c.clone());
            }
        }
        parts.iter().enumerate().all(|(k, part)| {
            part.is_empty()
                || self.by_descents[k].iter().all(|&v| {
                    let dual = &self.co_restriction[v];
                    let mut acc = f.zero();
                    for m in self.star_monomials(dual, k) {
                        if let Some(c) = part.get(&m) {
                            let mut vars = m.vars().to_vec();
                            vars.extend_from_slice(dual);
                            acc =
                                f.add(&acc, &f.mul(c, &self.top_value(&Monomial::from_vars(vars))));
                        }
                    }
                    f.is_zero(&acc)
                })
        })
    }

    /// Product of two linear forms, keeping only face-supported terms.
    pub fn linear_face_product(
        &self,
        a: &Polynomial<F::Elem>,
        b: &Polynomial<F::Elem>,
    ) -> Polynomial<F::Elem> {
        let f = &self.field;
        let coeffs: HashMap<u32, &F::Elem> = b
            .iter()
            .map(|(m, c)| {
                assert_eq!(m.degree(), 1, "linear forms only");
                (m.vars()[0], c)
            })
            .collect();
        let mut out = Polynomial::new();
        for (m, ca) in a {
            assert_eq!(m.degree(), 1, "linear forms only");
            let u = m.vars()[0];
            for &v in std::iter::once(&u).chain(self.complex().neighbors(u)) {
                if let Some(cb) = coeffs.get(&v) {
                    poly_add_term(f, &mut out, Monomial::from_vars(vec![u, v]), f.mul(ca, cb));
                }
            }
        }
        out
    }

    /// `D` of the product of all `r` orbit sums, which is the sum of the
    /// maximal cone monomials (one facet of each type per cone).
    pub fn orbit_product_value(&self) -> F::Elem {
        let f = &self.field;
        self.cone_values
            .iter()
            .fold(f.zero(), |acc, v| f.add(&acc, v))
    }

    /// `dim R(WP)_d^W` from the graded character: the trace of `w` on
    /// `R(WP)_d` is `sum_k (-1)^k tr(w | Lambda^k V) #{fixed face monomials
    /// of degree d - k}`, averaged over conjugacy classes.
    pub fn invariant_dims(
        &self,
        table: &GroupTable<F>,
        fan: &WpFan<F::Elem>,
    ) -> Result<Vec<usize>> {
        let f = &self.field;
        let r = self.rank;
        let n = fan.facets().len() as u32;
        let mut totals = vec![f.zero(); r + 1];
        for class in table.conjugacy_classes() {
            let w = class[0];
            let perm: Vec<u32> = (0..n).map(|v| act_on_variable(fan, table, w, v)).collect();
            let fixed = fixed_monomial_counts(self.complex(), &perm, r);
            let ext = exterior_traces(f, &table.element(w).matrix);
            let size = f.from_int(class.len() as i64);
            for (d, total) in totals.iter_mut().enumerate() {
                let mut trace = f.zero();
                for k in 0..=d {
                    let term = f.mul(&ext[k], &f.from_int(fixed[d - k] as i64));
                    trace = if k % 2 == 0 {
                        f.add(&trace, &term)
                    } else {
                        f.sub(&trace, &term)
                    };
                }
                *total = f.add(total, &f.mul(&size, &trace));
            }
        }
        let order = f.from_int(table.order() as i64);
        totals
            .iter()
            .map(|t| {
                let avg = f.as_rational(&f.div(t, &order));
                avg.filter(|q| q.is_integer())
                    .and_then(|q| q.to_i64())
                    .and_then(|z| usize::try_from(z).ok())
                    .ok_or_else(|| {
                        Error::Internal("character average is not a natural number".into())
                    })
            })
            .collect()
    }
}

/// Number of face-supported monomials of each degree `0..=top` fixed by
/// the vertex permutation `perm`.
fn fixed_monomial_counts(complex: &SimplicialComplex, perm: &[u32], top: usize) -> Vec<u64> {
    let mut out = vec![0u64; top + 1];
    for k in 0..=top.min(complex.max_face_size()) {
        for face in complex.faces_of_size(k) {
            if !face
                .iter()
                .all(|&v| face.binary_search(&perm[v as usize]).is_ok())
            {
                continue;
            }
            // exponents are constant on cycles
            let mut seen = vec![false; face.len()];
            let mut counts = vec![0u64; top + 1];
            counts[0] = 1;
            for start in 0..face.len() {
                if seen[start] {
                    continue;
                }
                let mut len = 0;
                let mut at = start;
                while !seen[at] {
                    seen[at] = true;
                    len += 1;
                    at = face.binary_search(&perm[face[at] as usize]).unwrap();
                }
                let mut next = vec![0u64; top + 1];
                for (m, slot) in next.iter_mut().enumerate() {
                    let mut e = 1;
                    while e * len <= m {
                        *slot += counts[m - e * len];
                        e += 1;
                    }
                }
                counts = next;
            }
            for (o, c) in out.iter_mut().zip(counts) {
                *o += c;
            }
        }
    }
    out
}

/// `tr(Lambda^k M)` for `k = 0..=n`: sums of principal minors.
fn exterior_traces<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<F::Elem> {
    let n = m.rows();
    let mut out = vec![f.zero(); n + 1];
    for mask in 0u32..1 << n {
        let idx: Vec<usize> = (0..n).filter(|&b| mask >> b & 1 == 1).collect();
        let sub = Matrix::from_fn(idx.len(), idx.len(), |a, b| m.get(idx[a], idx[b]).clone());
        let k = idx.len();
        out[k] = f.add(&out[k], &determinant(f, &sub));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{invariant_dimension, VariablePermutationAction};
    use crate::rings::{build_r_wp, QuotientOptions};
    use crate::rootdata::cartan_catalog;
    use crate::scalar::Rationals;

    fn model(
        label: &str,
    ) -> (
        DualityModel<Rationals>,
        GroupTable<Rationals>,
        WpFan<crate::scalar::Rational>,
        PairingDatum<Rationals>,
    ) {
        let d = PairingDatum::crystallographic(&cartan_catalog(label).unwrap());
        let t = d.enumerate_group_default().unwrap();
        let fan = WpFan::new(&d, &t);
        (DualityModel::new(&d, &t, &fan).unwrap(), t, fan, d)
    }

    #[test]
    fn pairing_ranks_are_the_dimensions() {
        for label in ["A1", "A2", "B2", "A3", "B3"] {
            let (m, t, fan, d) = model(label);
            assert!(m.functional_annihilates_relations(), "{label}");
            let ring = build_r_wp(&d, &t, &fan, QuotientOptions::default()).unwrap();
            assert_eq!(m.pairing_ranks(), ring.graded_dims(), "{label}");
        }
    }

    #[test]
    fn membership_agrees_with_normal_forms() {
        let (m, t, fan, d) = model("A3");
        let ring = build_r_wp(&d, &t, &fan, QuotientOptions::default()).unwrap();
        let q = Rationals;
        for deg in 1..=3 {
            for (k, mono) in ring.sr_basis(deg).unwrap().iter().enumerate().take(40) {
                let p: Polynomial<_> = [(mono.clone(), q.one())].into_iter().collect();
                assert_eq!(
                    m.is_zero_class(&p),
                    ring.is_zero_class(&p).unwrap(),
                    "{deg} {k}"
                );
            }
        }
        let theta = m.presentation().linear_form_poly(0);
        assert!(m.is_zero_class(&theta));
        assert!(!m.is_zero_class(&[(Monomial::var(0), q.one())].into_iter().collect()));
    }

    #[test]
    fn character_formula_matches_trace_averaging() {
        for label in ["A2", "B3", "A1xA2"] {
            let (m, t, fan, d) = model(label);
            let ring = build_r_wp(&d, &t, &fan, QuotientOptions::default()).unwrap();
            let action = VariablePermutationAction::new(&fan, &t);
            let direct: Vec<usize> = (0..=d.rank())
                .map(|k| invariant_dimension(&ring, &action, &t, k).unwrap())
                .collect();
            assert_eq!(m.invariant_dims(&t, &fan).unwrap(), direct, "{label}");
        }
    }

    #[test]
    fn a1_top_degree() {
        let (m, _, _, _) = model("A1");
        let q = Rationals;
        // rays 1 and -1: D(X_e) = D(X_s) = 1
        assert_eq!(m.top_value(&Monomial::var(0)), q.one());
        assert_eq!(m.orbit_product_value(), q.from_int(2));
    }
}
