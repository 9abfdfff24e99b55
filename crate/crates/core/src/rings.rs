//! Stanley–Reisner rings of simplicial fans and their quotients by the
//! linear ideal of the ray vectors, computed degree by degree with exact
//! sparse elimination.
//!
//! Grading is algebraic: every variable has degree 1 (cohomological degree 2).

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::GroupTable;
use crate::error::{Error, Result};
use crate::fans::{facets_of_p, p_maximal_faces, p_variable_labels, SimplicialComplex, WpFan};
use crate::linalg::{SparseEchelon, SparseRow};
use crate::rootdata::PairingDatum;
use crate::scalar::{Field, FieldDescriptor};

/// A monomial as the sorted multiset of its variable ids. The derived order
/// is lexicographic, which is a graded order within each degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: u32) -> Self {
        Monomial(vec![v])
    }

    pub fn from_vars(mut vars: Vec<u32>) -> Self {
        vars.sort_unstable();
        Monomial(vars)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn vars(&self) -> &[u32] {
        &self.0
    }

    /// Distinct variables, increasing.
    pub fn support(&self) -> Vec<u32> {
        let mut s = self.0.clone();
        s.dedup();
        s
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x <= y {
                        out.push(x);
                        a.next();
                    } else {
                        out.push(y);
                        b.next();
                    }
                }
                (Some(_), None) => out.extend(a.by_ref()),
                (None, Some(_)) => out.extend(b.by_ref()),
                (None, None) => break,
            }
        }
        Monomial(out)
    }

    pub fn mul_var(&self, v: u32) -> Monomial {
        let mut out = self.0.clone();
        let pos = out.partition_point(|&x| x <= v);
        out.insert(pos, v);
        Monomial(out)
    }

    /// Image under a relabelling of variables.
    pub fn permute(&self, perm: &[u32]) -> Monomial {
        Monomial::from_vars(self.0.iter().map(|&v| perm[v as usize]).collect())
    }

    /// Rendering such as `x1*y2^2`.
    pub fn render(&self, labels: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let v = self.0[i];
            let run = self.0[i..].iter().take_while(|&&x| x == v).count();
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&labels[v as usize]);
            if run > 1 {
                write!(out, "^{run}").unwrap();
            }
            i += run;
        }
        out
    }
}

/// Polynomials as sparse maps from monomials to coefficients.
pub type Polynomial<E> = BTreeMap<Monomial, E>;

pub fn poly_add_term<F: Field>(field: &F, p: &mut Polynomial<F::Elem>, m: Monomial, c: F::Elem) {
    if field.is_zero(&c) {
        return;
    }
    match p.get_mut(&m) {
        Some(slot) => {
            *slot = field.add(slot, &c);
            if field.is_zero(slot) {
                p.remove(&m);
            }
        }
        None => {
            p.insert(m, c);
        }
    }
}

pub fn poly_mul<F: Field>(
    field: &F,
    a: &Polynomial<F::Elem>,
    b: &Polynomial<F::Elem>,
) -> Polynomial<F::Elem> {
    let mut out = Polynomial::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            poly_add_term(field, &mut out, ma.mul(mb), field.mul(ca, cb));
        }
    }
    out
}

pub fn poly_pow<F: Field>(field: &F, a: &Polynomial<F::Elem>, n: u32) -> Polynomial<F::Elem> {
    let mut out = Polynomial::new();
    out.insert(Monomial::one(), field.one());
    for _ in 0..n {
        out = poly_mul(field, &out, a);
    }
    out
}

/// Linear polynomial from variable coefficients.
pub fn linear_poly<F: Field>(field: &F, coeffs: &[(u32, F::Elem)]) -> Polynomial<F::Elem> {
    let mut out = Polynomial::new();
    for (v, c) in coeffs {
        poly_add_term(field, &mut out, Monomial::var(*v), c.clone());
    }
    out
}

/// All degree-`d` monomials supported on faces, in increasing order.
pub fn sr_basis(complex: &SimplicialComplex, d: usize) -> Vec<Monomial> {
    let mut level = vec![Monomial::one()];
    for _ in 0..d {
        level = extend_sr_level(complex, &level);
    }
    level
}

/// Degree `d + 1` face monomials from those of degree `d`: each arises
/// uniquely by appending a variable no smaller than its current last one.
fn extend_sr_level(complex: &SimplicialComplex, prev: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = prev
        .par_iter()
        .flat_map_iter(|m| {
            let last = m.0.last().copied();
            let support = m.support();
            let mut next_vars = complex.link_vertices(&support);
            next_vars.retain(|&v| last.map_or(true, |l| v > l));
            next_vars.extend(last);
            next_vars.into_iter().map(move |v| {
                let mut next = m.0.clone();
                next.push(v);
                Monomial(next)
            })
        })
        .collect();
    out.par_sort_unstable();
    out
}

/// The data of a Danilov-type presentation: one variable per ray, the
/// Stanley–Reisner ideal of the fan, and one linear form per coordinate of
/// a lattice basis, `sum_F <e_j, ray_F> X_F`.
#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    field: F,
    labels: Vec<String>,
    rays: Vec<Vec<F::Elem>>,
    complex: SimplicialComplex,
    lattice_rank: usize,
    linear_forms: Vec<SparseRow<F::Elem>>,
}

pub fn danilov_presentation<F: Field>(
    field: &F,
    labels: Vec<String>,
    rays: Vec<Vec<F::Elem>>,
    complex: SimplicialComplex,
    lattice_rank: usize,
) -> Result<Presentation<F>> {
    let n = complex.num_vertices();
    for got in [labels.len(), rays.len()] {
        if got != n {
            return Err(Error::RankMismatch { expected: n, got });
        }
    }
    if let Some(bad) = rays.iter().find(|r| r.len() != lattice_rank) {
        return Err(Error::RankMismatch {
            expected: lattice_rank,
            got: bad.len(),
        });
    }
    let linear_forms = (0..lattice_rank)
        .map(|j| {
            rays.iter()
                .enumerate()
                .filter(|(_, ray)| !field.is_zero(&ray[j]))
                .map(|(v, ray)| (v, ray[j].clone()))
                .collect()
        })
        .collect();
    Ok(Presentation {
        field: field.clone(),
        labels,
        rays,
        complex,
        lattice_rank,
        linear_forms,
    })
}

impl<F: Field> Presentation<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rays(&self) -> &[Vec<F::Elem>] {
        &self.rays
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    pub fn linear_forms(&self) -> &[SparseRow<F::Elem>] {
        &self.linear_forms
    }

    pub fn linear_form_poly(&self, j: usize) -> Polynomial<F::Elem> {
        let coeffs: Vec<(u32, F::Elem)> = self.linear_forms[j]
            .iter()
            .map(|(v, c)| (*v as u32, c.clone()))
            .collect();
        linear_poly(&self.field, &coeffs)
    }

    pub fn minimal_non_faces(&self) -> Vec<Vec<u32>> {
        self.complex.minimal_non_faces()
    }

    pub fn to_json(&self, equivariant: bool, graded_dims: Option<Vec<usize>>) -> PresentationJson {
        let f = &self.field;
        PresentationJson {
            field: f.descriptor(),
            variables: self.labels.clone(),
            rays: self
                .rays
                .iter()
                .map(|r| r.iter().map(|x| f.render(x)).collect())
                .collect(),
            monomial_relations: self
                .minimal_non_faces()
                .into_iter()
                .map(|s| Monomial(s).render(&self.labels))
                .collect(),
            linear_relations: if equivariant {
                Vec::new()
            } else {
                (0..self.lattice_rank)
                    .map(|j| {
                        let mut row = vec![f.render(&f.zero()); self.num_vars()];
                        for (v, c) in &self.linear_forms[j] {
                            row[*v] = f.render(c);
                        }
                        row
                    })
                    .collect()
            },
            graded_dims,
        }
    }
}

/// Exported presentation. `linear_relations[j][v]` is the coefficient of
/// variable `v` in the `j`-th linear generator, as an exact string.
#[derive(Clone, Debug, Serialize)]
pub struct PresentationJson {
    pub field: FieldDescriptor,
    pub variables: Vec<String>,
    pub rays: Vec<Vec<String>>,
    pub monomial_relations: Vec<String>,
    pub linear_relations: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graded_dims: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct QuotientOptions {
    /// Highest degree expected to be nonzero; defaults to the lattice rank.
    pub degree_cap: Option<usize>,
    /// Quotient by the Stanley–Reisner ideal only.
    pub equivariant_only: bool,
}

#[derive(Clone, Debug)]
struct DegreePiece<E> {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// Positions in `monomials` of the quotient basis.
    basis: Vec<usize>,
    /// Class of each monomial in the quotient basis; `None` means the
    /// identity (no linear relations).
    normal_forms: Option<Vec<SparseRow<E>>>,
}

impl<E> DegreePiece<E> {
    fn new(monomials: Vec<Monomial>) -> Self {
        let index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, m)| (m, k))
            .collect();
        DegreePiece {
            monomials,
            index,
            basis: Vec::new(),
            normal_forms: None,
        }
    }
}

/// Graded quotient of a Stanley–Reisner ring by linear forms (or the
/// Stanley–Reisner ring itself, truncated, when equivariant-only).
#[derive(Clone, Debug)]
pub struct QuotientRing<F: Field> {
    presentation: Presentation<F>,
    equivariant_only: bool,
    pieces: Vec<DegreePiece<F::Elem>>,
}

/// Build the quotient degree by degree until a degree vanishes.
///
/// In degree `d` the relations are `l_j * m` for every linear form `l_j` and
/// every face monomial `m` of degree `d - 1`, with non-face terms dropped.
/// The quotient basis is the set of non-pivot monomials.
pub fn build_quotient<F: Field>(
    presentation: Presentation<F>,
    opts: QuotientOptions,
) -> Result<QuotientRing<F>> {
    let cap = opts.degree_cap.unwrap_or(presentation.lattice_rank);
    let field = presentation.field.clone();
    let mut pieces: Vec<DegreePiece<F::Elem>> = Vec::new();
    let mut zero_piece = DegreePiece::new(vec![Monomial::one()]);
    zero_piece.basis = vec![0];
    pieces.push(zero_piece);

    if opts.equivariant_only {
        for _ in 0..cap {
            let monomials =
                extend_sr_level(&presentation.complex, &pieces.last().unwrap().monomials);
            let mut piece = DegreePiece::new(monomials);
            piece.basis = (0..piece.monomials.len()).collect();
            pieces.push(piece);
        }
        return Ok(QuotientRing {
            presentation,
            equivariant_only: true,
            pieces,
        });
    }

    let mut d = 0;
    loop {
        d += 1;
        let prev = pieces.last().unwrap();
        let mut piece = DegreePiece::new(extend_sr_level(&presentation.complex, &prev.monomials));
        let rows = relation_rows(&presentation, &prev.monomials, &piece.index);
        let ncols = piece.monomials.len();
        let mut ech = SparseEchelon::new(field.clone(), ncols);
        for row in &rows {
            ech.insert(row);
            if ech.rank() == ncols {
                break;
            }
        }
        if ech.rank() == ncols {
            break;
        }
        if d > cap {
            return Err(Error::DegreeCapExceeded(cap));
        }
        let reduced = ech.finish();
        piece.basis = reduced.free_columns;
        piece.normal_forms = Some(reduced.normal_forms);
        pieces.push(piece);
    }
    Ok(QuotientRing {
        presentation,
        equivariant_only: false,
        pieces,
    })
}

fn relation_rows<F: Field>(
    presentation: &Presentation<F>,
    prev: &[Monomial],
    index: &HashMap<Monomial, usize>,
) -> Vec<SparseRow<F::Elem>> {
    let f = &presentation.field;
    let forms = &presentation.linear_forms;
    let complex = &presentation.complex;
    prev.par_iter()
        .flat_map_iter(|m| {
            // only variables in the closed star of the support survive
            let support = m.support();
            let mut vars = complex.link_vertices(&support);
            vars.extend_from_slice(&support);
            let cols: Vec<(u32, usize)> = vars
                .into_iter()
                .filter_map(|v| index.get(&m.mul_var(v)).map(|&c| (v, c)))
                .collect();
            let rows: Vec<SparseRow<F::Elem>> = (0..forms.len())
                .filter_map(|j| {
                    let ray_coord = |v: u32| &presentation.rays[v as usize][j];
                    let mut row: SparseRow<F::Elem> = cols
                        .iter()
                        .filter(|(v, _)| !f.is_zero(ray_coord(*v)))
                        .map(|(v, c)| (*c, ray_coord(*v).clone()))
                        .collect();
                    row.sort_unstable_by_key(|e| e.0);
                    (!row.is_empty()).then_some(row)
                })
                .collect();
            rows
        })
        .collect()
}

impl<F: Field> QuotientRing<F> {
    pub fn field(&self) -> &F {
        &self.presentation.field
    }

    pub fn presentation(&self) -> &Presentation<F> {
        &self.presentation
    }

    pub fn is_equivariant_only(&self) -> bool {
        self.equivariant_only
    }

    /// Highest computed degree (the top nonzero degree of a full quotient).
    pub fn top_degree(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn graded_dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.basis.len()).collect()
    }

    /// Coefficients of the Poincaré polynomial in `q`, `q` of cohomological
    /// degree 2.
    pub fn poincare_polynomial(&self) -> Vec<usize> {
        self.graded_dims()
    }

    pub fn total_dimension(&self) -> usize {
        self.graded_dims().iter().sum()
    }

    pub fn dim(&self, d: usize) -> usize {
        self.pieces.get(d).map_or(0, |p| p.basis.len())
    }

    /// Face monomials of degree `d`, if that degree was computed.
    pub fn sr_basis(&self, d: usize) -> Option<&[Monomial]> {
        self.pieces.get(d).map(|p| p.monomials.as_slice())
    }

    pub fn quotient_basis(&self, d: usize) -> Vec<&Monomial> {
        self.pieces
            .get(d)
            .map(|p| p.basis.iter().map(|&k| &p.monomials[k]).collect())
            .unwrap_or_default()
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if self.equivariant_only && d > self.top_degree() {
            Err(Error::DegreeCapExceeded(self.top_degree()))
        } else {
            Ok(())
        }
    }

    /// Class of a monomial as a sparse vector over the quotient basis of its
    /// degree (empty if it lies in the ideal).
    pub fn nf_monomial(&self, m: &Monomial) -> Result<SparseRow<F::Elem>> {
        self.check_degree(m.degree())?;
        let Some(piece) = self.pieces.get(m.degree()) else {
            return Ok(Vec::new());
        };
        let Some(&k) = piece.index.get(m) else {
            return Ok(Vec::new());
        };
        Ok(match &piece.normal_forms {
            Some(nf) => nf[k].clone(),
            None => vec![(k, self.field().one())],
        })
    }

    /// Coordinate `k` of the class of `m` (zero when `m` is in the ideal).
    pub fn nf_coefficient(&self, m: &Monomial, k: usize) -> Result<F::Elem> {
        self.check_degree(m.degree())?;
        let f = self.field();
        let Some(piece) = self.pieces.get(m.degree()) else {
            return Ok(f.zero());
        };
        let Some(&pos) = piece.index.get(m) else {
            return Ok(f.zero());
        };
        Ok(match &piece.normal_forms {
            Some(nf) => nf[pos]
                .binary_search_by_key(&k, |e| e.0)
                .map_or_else(|_| f.zero(), |at| nf[pos][at].1.clone()),
            None if pos == k => f.one(),
            None => f.zero(),
        })
    }

    /// Coordinates of `p` in the quotient basis, one dense vector per degree
    /// `0..=top_degree`; components above the top degree are zero by
    /// construction and dropped.
    pub fn normal_form(&self, p: &Polynomial<F::Elem>) -> Result<Vec<Vec<F::Elem>>> {
        let f = self.field();
        let mut out: Vec<Vec<F::Elem>> = self
            .pieces
            .iter()
            .map(|pc| vec![f.zero(); pc.basis.len()])
            .collect();
        for (m, c) in p {
            for (k, v) in self.nf_monomial(m)? {
                let slot = &mut out[m.degree()][k];
                *slot = f.add(slot, &f.mul(c, &v));
            }
        }
        Ok(out)
    }

    /// Coordinates of a homogeneous polynomial of degree `d`.
    pub fn class_of(&self, d: usize, p: &Polynomial<F::Elem>) -> Result<Vec<F::Elem>> {
        if let Some(m) = p.keys().find(|m| m.degree() != d) {
            return Err(Error::Internal(format!(
                "term of degree {} in a degree-{d} class",
                m.degree()
            )));
        }
        self.check_degree(d)?;
        if d > self.top_degree() {
            return Ok(Vec::new());
        }
        Ok(self.normal_form(p)?.swap_remove(d))
    }

    pub fn is_zero_class(&self, p: &Polynomial<F::Elem>) -> Result<bool> {
        let f = self.field();
        Ok(self.normal_form(p)?.iter().flatten().all(|x| f.is_zero(x)))
    }

    /// The polynomial `sum_k coords[k] * basis_k` in degree `d`.
    pub fn class_polynomial(&self, d: usize, coords: &[F::Elem]) -> Polynomial<F::Elem> {
        let f = self.field();
        let mut out = Polynomial::new();
        for (m, c) in self.quotient_basis(d).into_iter().zip(coords) {
            poly_add_term(f, &mut out, m.clone(), c.clone());
        }
        out
    }

    /// Product of two classes given by coordinates.
    pub fn multiply(
        &self,
        d1: usize,
        a: &[F::Elem],
        d2: usize,
        b: &[F::Elem],
    ) -> Result<Vec<F::Elem>> {
        let p = poly_mul(
            self.field(),
            &self.class_polynomial(d1, a),
            &self.class_polynomial(d2, b),
        );
        if p.is_empty() {
            self.check_degree(d1 + d2)?;
            return Ok(vec![self.field().zero(); self.dim(d1 + d2)]);
        }
        self.class_of(d1 + d2, &p)
    }
}

/// Presentation of `R(P)`: variables `x_1..x_r, y_1..y_r` for the facets
/// `Q_i`, `C_i` of the cube, rays `varpi_i` and `eta(C_i)`.
pub fn p_presentation<F: Field>(datum: &PairingDatum<F>) -> Result<Presentation<F>> {
    let r = datum.rank();
    let rays = facets_of_p(datum).into_iter().map(|f| f.normal).collect();
    let complex = SimplicialComplex::from_maximal_faces(2 * r, &p_maximal_faces(r));
    danilov_presentation(datum.field(), p_variable_labels(r), rays, complex, r)
}

/// Presentation of `R(WP)`: one variable `X(i,w)` per facet, ray `w varpi_i`.
pub fn wp_presentation<F: Field>(
    datum: &PairingDatum<F>,
    table: &GroupTable<F>,
    fan: &WpFan<F::Elem>,
) -> Result<Presentation<F>> {
    let rays = fan.facets().iter().map(|f| f.normal.clone()).collect();
    let complex = SimplicialComplex::from_maximal_faces(
        fan.facets().len(),
        &fan.maximal_faces(table.order()),
    );
    danilov_presentation(
        datum.field(),
        fan.variable_labels(table),
        rays,
        complex,
        datum.rank(),
    )
}

pub fn build_r_p<F: Field>(
    datum: &PairingDatum<F>,
    opts: QuotientOptions,
) -> Result<QuotientRing<F>> {
    build_quotient(p_presentation(datum)?, opts)
}

pub fn build_r_wp<F: Field>(
    datum: &PairingDatum<F>,
    table: &GroupTable<F>,
    fan: &WpFan<F::Elem>,
    opts: QuotientOptions,
) -> Result<QuotientRing<F>> {
    build_quotient(wp_presentation(datum, table, fan)?, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational, Rationals};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    /// Rank-1 cube with rays `x -> 1`, `y -> -1`: the A1 case of `R(P)`,
    /// and also the A1 permutohedron.
    fn segment() -> Presentation<Rationals> {
        let complex = SimplicialComplex::from_maximal_faces(2, &p_maximal_faces(1));
        danilov_presentation(
            &Rationals,
            vec!["x1".into(), "y1".into()],
            vec![vec![q(1)], vec![q(-1)]],
            complex,
            1,
        )
        .unwrap()
    }

    #[test]
    fn monomial_basics() {
        let a = Monomial::from_vars(vec![3, 1]);
        let b = Monomial::from_vars(vec![2, 1]);
        assert_eq!(a.mul(&b).vars(), &[1, 1, 2, 3]);
        assert_eq!(a.mul_var(2).vars(), &[1, 2, 3]);
        let labels: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        assert_eq!(a.mul(&b).render(&labels), "b^2*c*d");
        assert_eq!(Monomial::one().render(&labels), "1");
        assert!(Monomial::from_vars(vec![0, 3]) < Monomial::from_vars(vec![1, 1]));
    }

    #[test]
    fn sr_basis_of_segment() {
        let p = segment();
        assert_eq!(
            sr_basis(p.complex(), 1),
            vec![Monomial::var(0), Monomial::var(1)]
        );
        assert_eq!(
            sr_basis(p.complex(), 2),
            vec![Monomial(vec![0, 0]), Monomial(vec![1, 1])]
        );
    }

    #[test]
    fn segment_quotient() {
        let ring = build_quotient(segment(), QuotientOptions::default()).unwrap();
        assert_eq!(ring.graded_dims(), vec![1, 1]);
        let x = ring.nf_monomial(&Monomial::var(0)).unwrap();
        let y = ring.nf_monomial(&Monomial::var(1)).unwrap();
        assert_eq!(x, y);
        assert!(ring.nf_monomial(&Monomial(vec![0, 1])).unwrap().is_empty());
        assert!(ring.nf_monomial(&Monomial(vec![0, 0])).unwrap().is_empty());
        let form = ring.presentation().linear_form_poly(0);
        assert!(ring.is_zero_class(&form).unwrap());
    }

    #[test]
    fn equivariant_segment() {
        let opts = QuotientOptions {
            degree_cap: Some(3),
            equivariant_only: true,
        };
        let ring = build_quotient(segment(), opts).unwrap();
        assert_eq!(ring.graded_dims(), vec![1, 2, 2, 2]);
        assert!(ring.nf_monomial(&Monomial(vec![0; 4])).is_err());
    }

    #[test]
    fn degree_cap_is_loud() {
        let opts = QuotientOptions {
            degree_cap: Some(0),
            equivariant_only: false,
        };
        assert!(matches!(
            build_quotient(segment(), opts),
            Err(Error::DegreeCapExceeded(0))
        ));
    }

    #[test]
    fn presentation_json() {
        let json = segment().to_json(false, None);
        assert_eq!(json.monomial_relations, vec!["x1*y1"]);
        assert_eq!(
            json.linear_relations,
            vec![vec!["1".to_string(), "-1".to_string()]]
        );
        assert!(segment().to_json(true, None).linear_relations.is_empty());
    }

    #[test]
    fn mismatched_rays_are_rejected() {
        let complex = SimplicialComplex::from_maximal_faces(2, &p_maximal_faces(1));
        let r = danilov_presentation(
            &Rationals,
            vec!["a".into(), "b".into()],
            vec![vec![q(1)]],
            complex,
            1,
        );
        assert!(matches!(r, Err(Error::RankMismatch { .. })));
    }
}
