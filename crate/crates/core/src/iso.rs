//! The map `phi: R(P) -> R(WP)` and an end-to-end certificate that it is an
//! isomorphism onto the invariant subring.

use std::time::Instant;

use serde::Serialize;

use crate::action::{
    act_on_variable, action_matrix, fixed_subspace_dimension, invariant_dimension,
    VariablePermutationAction,
};
use crate::coxeter::{GroupTable, DEFAULT_ELEMENT_BOUND};
use crate::duality::DualityModel;
use crate::error::{Error, Result};
use crate::fans::{wp_face_nonempty, WpFan};
use crate::linalg::{determinant, mat_vec, solve, Matrix, SparseEchelon};
use crate::rings::{
    build_r_p, build_r_wp, linear_poly, poly_add_term, poly_mul, Monomial, Polynomial,
    QuotientOptions, QuotientRing,
};
use crate::rootdata::{Mode, PairingDatum};
use crate::scalar::{Field, FieldDescriptor};

/// Coefficients `c_i` with `w varpi_j - varpi_j = sum_i c_i eta(C_i)`.
pub fn c_coefficients<F: Field>(
    datum: &PairingDatum<F>,
    table: &GroupTable<F>,
    j: usize,
    w: usize,
) -> Result<Vec<F::Elem>> {
    let f = datum.field();
    let r = datum.rank();
    let mut diff = datum.facet_normal(table, j, w);
    diff[j] = f.sub(&diff[j], &f.one());
    let normals = Matrix::from_fn(r, r, |k, i| datum.chamber_normal(i)[k].clone());
    solve(f, &normals, &diff)
        .ok_or_else(|| Error::Internal("chamber-wall normals are not a basis".into()))
}

/// Images of the generators `x_1..x_r, y_1..y_r` of `R(P)` as linear forms
/// in the facet variables of `R(WP)`.
#[derive(Clone, Debug)]
pub struct RingMap<E> {
    pub x_images: Vec<Polynomial<E>>,
    pub y_images: Vec<Polynomial<E>>,
    /// `c[facet id]` = `(c_{1,j,w}, ..., c_{r,j,w})` for the facet `(j, w)`.
    pub c: Vec<Vec<E>>,
}

impl<E: Clone> RingMap<E> {
    /// Image of the `R(P)` variable with id `v` (`x_i` is `i`, `y_i` is `r + i`).
    pub fn image(&self, v: u32) -> &Polynomial<E> {
        let r = self.x_images.len();
        let v = v as usize;
        if v < r {
            &self.x_images[v]
        } else {
            &self.y_images[v - r]
        }
    }
}

/// `phi(x_i) = sum_{w in W^i} X(i,w)`, `phi(y_i) = sum_{j,w} c_{i,j,w} X(j,w)`.
pub fn build_phi<F: Field>(
    datum: &PairingDatum<F>,
    table: &GroupTable<F>,
    fan: &WpFan<F::Elem>,
) -> Result<RingMap<F::Elem>> {
    let f = datum.field();
    let r = datum.rank();
    let c: Vec<Vec<F::Elem>> = fan
        .facets()
        .iter()
        .map(|fc| c_coefficients(datum, table, fc.i, fc.w))
        .collect::<Result<_>>()?;
    let x_images = (0..r)
        .map(|i| {
            let coeffs: Vec<(u32, F::Elem)> = fan
                .facets()
                .iter()
                .filter(|fc| fc.i == i)
                .map(|fc| (fc.id as u32, f.one()))
                .collect();
            linear_poly(f, &coeffs)
        })
        .collect();
    let y_images = (0..r)
        .map(|i| {
            let coeffs: Vec<(u32, F::Elem)> = fan
                .facets()
                .iter()
                .map(|fc| (fc.id as u32, c[fc.id][i].clone()))
                .collect();
            linear_poly(f, &coeffs)
        })
        .collect();
    Ok(RingMap {
        x_images,
        y_images,
        c,
    })
}

/// Substitute the images of `phi` into a polynomial in the `R(P)` variables.
pub fn apply_phi<F: Field>(
    field: &F,
    phi: &RingMap<F::Elem>,
    p: &Polynomial<F::Elem>,
) -> Polynomial<F::Elem> {
    let mut out = Polynomial::new();
    for (m, c) in p {
        let mut term = Polynomial::new();
        term.insert(Monomial::one(), c.clone());
        for &v in m.vars() {
            term = poly_mul(field, &term, phi.image(v));
        }
        for (mm, cc) in term {
            crate::rings::poly_add_term(field, &mut out, mm, cc);
        }
    }
    out
}

/// `h_W(q) = sum_w q^des(w)`.
pub fn eulerian_polynomial<F: Field>(table: &GroupTable<F>) -> Vec<usize> {
    let mut out = vec![0; table.rank() + 1];
    for w in 0..table.order() {
        out[table.descents(w).len()] += 1;
    }
    out
}

pub fn binomial_row(r: usize) -> Vec<usize> {
    let mut row = vec![1usize];
    for k in 0..r {
        let next = row[k] * (r - k) / (k + 1);
        row.push(next);
    }
    row
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
}

impl CheckResult {
    fn new(name: impl Into<String>, pass: bool) -> Self {
        CheckResult {
            name: name.into(),
            pass,
        }
    }
}

/// `phi(x_i) phi(y_i)` and the images of the linear generators of `R(P)`
/// must vanish in `R(WP)`.
pub fn verify_well_defined<F: Field>(
    p_ring: &QuotientRing<F>,
    wp_ring: &QuotientRing<F>,
    phi: &RingMap<F::Elem>,
) -> Result<Vec<CheckResult>> {
    let f = wp_ring.field();
    let r = phi.x_images.len();
    let mut out = Vec::new();
    for i in 0..r {
        let prod = poly_mul(f, &phi.x_images[i], &phi.y_images[i]);
        out.push(CheckResult::new(
            format!("x{0}*y{0}", i + 1),
            wp_ring.is_zero_class(&prod)?,
        ));
    }
    for j in 0..r {
        let image = apply_phi(f, phi, &p_ring.presentation().linear_form_poly(j));
        out.push(CheckResult::new(
            format!("linear relation at alpha_{}", j + 1),
            wp_ring.is_zero_class(&image)?,
        ));
    }
    Ok(out)
}

/// Every generator image is fixed by every simple reflection in degree 1.
pub fn verify_invariance<F: Field>(
    wp_ring: &QuotientRing<F>,
    action: &VariablePermutationAction,
    table: &GroupTable<F>,
    phi: &RingMap<F::Elem>,
) -> Result<Vec<CheckResult>> {
    let f = wp_ring.field();
    let r = table.rank();
    let mats: Vec<Matrix<F::Elem>> = (0..r)
        .map(|s| action_matrix(wp_ring, action, table.from_word(&[s]), 1))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for v in 0..2 * r as u32 {
        let name = if (v as usize) < r {
            format!("phi(x{})", v + 1)
        } else {
            format!("phi(y{})", v as usize - r + 1)
        };
        let coords = wp_ring.class_of(1, phi.image(v))?;
        for (s, m) in mats.iter().enumerate() {
            let fixed = mat_vec(f, m, &coords) == coords;
            out.push(CheckResult::new(format!("s{} fixes {name}", s + 1), fixed));
        }
    }
    Ok(out)
}

/// Classes in `R(WP)` of the images of the quotient basis of `R(P)`,
/// grouped by degree; products are formed in the quotient.
pub fn basis_images<F: Field>(
    p_ring: &QuotientRing<F>,
    wp_ring: &QuotientRing<F>,
    phi: &RingMap<F::Elem>,
) -> Result<Vec<Vec<Vec<F::Elem>>>> {
    let r = phi.x_images.len();
    let degree_one: Vec<Vec<F::Elem>> = (0..2 * r as u32)
        .map(|v| wp_ring.class_of(1, phi.image(v)))
        .collect::<Result<_>>()?;
    let f = wp_ring.field();
    (0..=p_ring.top_degree())
        .map(|d| {
            p_ring
                .quotient_basis(d)
                .into_iter()
                .map(|b| {
                    let mut coords = vec![f.one()];
                    for (k, &v) in b.vars().iter().enumerate() {
                        coords = wp_ring.multiply(k, &coords, 1, &degree_one[v as usize])?;
                    }
                    Ok(coords)
                })
                .collect()
        })
        .collect()
}

fn rank_of_rows<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut ech = SparseEchelon::new(field.clone(), ncols);
    for row in rows {
        let sparse: Vec<(usize, F::Elem)> = row
            .iter()
            .enumerate()
            .filter(|(_, x)| !field.is_zero(x))
            .map(|(k, x)| (k, x.clone()))
            .collect();
        ech.insert(&sparse);
    }
    ech.rank()
}

/// Whether `c_{i,j,w} = 0` whenever the facets `(i, e)` and `(j, w)` meet.
pub fn check_c_vanishing<F: Field>(
    table: &GroupTable<F>,
    fan: &WpFan<F::Elem>,
    phi: &RingMap<F::Elem>,
) -> bool {
    let f = table.field();
    (0..table.rank()).all(|i| {
        fan.facets().iter().all(|fc| {
            !wp_face_nonempty(&[(i, table.identity()), (fc.i, fc.w)], table)
                || f.is_zero(&phi.c[fc.id][i])
        })
    })
}

/// Groups larger than this are verified through the top-degree pairing
/// unless a method is forced.
pub const DUALITY_THRESHOLD: usize = 2000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Elimination up to [`DUALITY_THRESHOLD`], the pairing above it.
    #[default]
    Auto,
    /// Dense normal forms in every degree.
    Elimination,
    /// The top-degree pairing of [`crate::duality`].
    Duality,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub method: Method,
    pub degree_cap: Option<usize>,
    /// Also compute invariant dimensions by fixed-subspace ranks.
    pub cross_check: bool,
    pub timings: bool,
    pub element_bound: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            method: Method::Auto,
            degree_cap: None,
            cross_check: false,
            timings: false,
            element_bound: DEFAULT_ELEMENT_BOUND,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    pub group_ms: f64,
    pub rings_ms: f64,
    pub action_ms: f64,
    pub phi_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub label: String,
    pub mode: Mode,
    pub field: FieldDescriptor,
    pub rank: usize,
    pub group_order: usize,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cartan_determinant: Option<String>,
    pub dims_r_p: Vec<usize>,
    pub dims_r_wp: Vec<usize>,
    pub dims_invariants: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims_invariants_fixed_subspace: Option<Vec<usize>>,
    pub eulerian: Vec<usize>,
    pub poincare_checks: Vec<CheckResult>,
    pub well_definedness: Vec<CheckResult>,
    pub invariance: Vec<CheckResult>,
    pub injectivity_rank: usize,
    pub expected_rank: usize,
    pub surjectivity: Vec<CheckResult>,
    pub verdict: Verdict,
    /// First stage that failed, when the run stopped early.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed_stage: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    fn finish(&mut self) {
        let all = self
            .poincare_checks
            .iter()
            .chain(&self.well_definedness)
            .chain(&self.invariance)
            .chain(&self.surjectivity)
            .all(|c| c.pass);
        let ok = all && self.failed_stage.is_none() && self.injectivity_rank == self.expected_rank;
        self.verdict = if ok { Verdict::Pass } else { Verdict::Fail };
    }
}

fn stopped(
    mut report: VerificationReport,
    stage: &str,
    timings: Timings,
    opts: &VerifyOptions,
) -> VerificationReport {
    report.failed_stage = Some(stage.to_string());
    if opts.timings {
        report.timings = Some(timings);
    }
    report.finish();
    report
}

/// Group, rings, action and `phi`, in that order; a failing stage ends the
/// run with a partial report.
pub fn verify_isomorphism<F: Field>(
    datum: &PairingDatum<F>,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let table = datum.enumerate_group(opts.element_bound)?;
    let group_ms = start.elapsed().as_secs_f64() * 1e3;
    let mut report = verify_with_table(datum, &table, opts)?;
    if let Some(t) = &mut report.timings {
        t.group_ms = group_ms;
    }
    Ok(report)
}

/// As [`verify_isomorphism`] with a prebuilt group table.
pub fn verify_with_table<F: Field>(
    datum: &PairingDatum<F>,
    table: &GroupTable<F>,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let method = match opts.method {
        Method::Auto if table.order() > DUALITY_THRESHOLD => Method::Duality,
        Method::Auto => Method::Elimination,
        m => m,
    };
    let f = datum.field();
    let r = datum.rank();
    let mut timings = Timings::default();
    let mut report = VerificationReport {
        label: datum.label().to_string(),
        mode: datum.mode(),
        field: f.descriptor(),
        rank: r,
        group_order: table.order(),
        method,
        cartan_determinant: datum
            .cartan()
            .map(|c| determinant(&crate::scalar::Rationals, &c.to_matrix()).to_string()),
        dims_r_p: Vec::new(),
        dims_r_wp: Vec::new(),
        dims_invariants: Vec::new(),
        dims_invariants_fixed_subspace: None,
        eulerian: eulerian_polynomial(table),
        poincare_checks: Vec::new(),
        well_definedness: Vec::new(),
        invariance: Vec::new(),
        injectivity_rank: 0,
        expected_rank: 1 << r,
        surjectivity: Vec::new(),
        verdict: Verdict::Fail,
        failed_stage: None,
        timings: None,
    };
    if method == Method::Duality {
        return verify_by_duality(datum, table, opts, report);
    }

    // rings
    let clock = Instant::now();
    let ring_opts = QuotientOptions {
        degree_cap: opts.degree_cap,
        equivariant_only: false,
    };
    let fan = WpFan::new(datum, table);
    let p_ring = build_r_p(datum, ring_opts)?;
    let wp_ring = build_r_wp(datum, table, &fan, ring_opts)?;
    report.dims_r_p = p_ring.graded_dims();
    report.dims_r_wp = wp_ring.graded_dims();
    let binom = binomial_row(r);
    report.poincare_checks = vec![
        CheckResult::new("R(P) dims are binomial(r, d)", report.dims_r_p == binom),
        CheckResult::new(
            "R(WP) dims equal the descent census",
            report.dims_r_wp == report.eulerian,
        ),
        CheckResult::new(
            "dim R(WP) = |W|",
            wp_ring.total_dimension() == table.order(),
        ),
        CheckResult::new("dim R(P) = 2^r", p_ring.total_dimension() == 1 << r),
        CheckResult::new(
            "descent census is palindromic",
            report.eulerian.iter().eq(report.eulerian.iter().rev()),
        ),
    ];
    timings.rings_ms = clock.elapsed().as_secs_f64() * 1e3;
    if report.poincare_checks.iter().any(|c| !c.pass) {
        return Ok(stopped(report, "rings", timings, opts));
    }

    // action
    let clock = Instant::now();
    let action = VariablePermutationAction::new(&fan, table);
    report.dims_invariants = (0..=wp_ring.top_degree())
        .map(|d| invariant_dimension(&wp_ring, &action, table, d))
        .collect::<Result<_>>()?;
    if opts.cross_check {
        let fixed: Vec<usize> = (0..=wp_ring.top_degree())
            .map(|d| fixed_subspace_dimension(&wp_ring, &action, table, d))
            .collect::<Result<_>>()?;
        report.poincare_checks.push(CheckResult::new(
            "trace averaging agrees with fixed-subspace ranks",
            fixed == report.dims_invariants,
        ));
        report.dims_invariants_fixed_subspace = Some(fixed);
    }
    report.poincare_checks.push(CheckResult::new(
        "invariant dims are binomial(r, d)",
        report.dims_invariants == binom,
    ));
    timings.action_ms = clock.elapsed().as_secs_f64() * 1e3;
    if report.poincare_checks.iter().any(|c| !c.pass) {
        return Ok(stopped(report, "action", timings, opts));
    }

    // phi
    let clock = Instant::now();
    let phi = build_phi(datum, table, &fan)?;
    report.well_definedness = verify_well_defined(&p_ring, &wp_ring, &phi)?;
    report.invariance = verify_invariance(&wp_ring, &action, table, &phi)?;
    let images = basis_images(&p_ring, &wp_ring, &phi)?;
    let ranks: Vec<usize> = images.iter().map(|rows| rank_of_rows(f, rows)).collect();
    report.injectivity_rank = ranks.iter().sum();
    report.surjectivity = ranks
        .iter()
        .zip(&report.dims_invariants)
        .enumerate()
        .map(|(d, (rank, inv))| {
            CheckResult::new(
                format!("image rank equals invariant dim in degree {d}"),
                rank == inv,
            )
        })
        .collect();
    timings.phi_ms = clock.elapsed().as_secs_f64() * 1e3;
    if opts.timings {
        report.timings = Some(timings);
    }
    report.finish();
    Ok(report)
}

/// The pairing-based certificate of [`crate::duality`]: dimensions from
/// pairing ranks, membership by pairing against the top degree, invariant
/// dimensions from the graded character, and injectivity from the pairing
/// on `R(P)` together with `D(phi(x_1 ... x_r)) != 0`.
fn verify_by_duality<F: Field>(
    datum: &PairingDatum<F>,
    table: &GroupTable<F>,
    opts: &VerifyOptions,
    mut report: VerificationReport,
) -> Result<VerificationReport> {
    let f = datum.field();
    let r = datum.rank();
    if let Some(cap) = opts.degree_cap.filter(|&cap| cap < r) {
        return Err(Error::DegreeCapExceeded(cap));
    }
    let mut timings = Timings::default();

    // rings
    let clock = Instant::now();
    let fan = WpFan::new(datum, table);
    let p_ring = build_r_p(
        datum,
        QuotientOptions {
            degree_cap: opts.degree_cap,
            equivariant_only: false,
        },
    )?;
    let model = DualityModel::new(datum, table, &fan)?;
    report.dims_r_p = p_ring.graded_dims();
    report.dims_r_wp = model.pairing_ranks();
    let binom = binomial_row(r);
    report.poincare_checks = vec![
        CheckResult::new("R(P) dims are binomial(r, d)", report.dims_r_p == binom),
        CheckResult::new(
            "top-degree functional vanishes on the relations",
            model.functional_annihilates_relations(),
        ),
        CheckResult::new(
            "R(WP) pairing ranks equal the descent census",
            report.dims_r_wp == report.eulerian,
        ),
        CheckResult::new(
            "R(WP) pairing ranks add up to |W|",
            report.dims_r_wp.iter().sum::<usize>() == table.order(),
        ),
        CheckResult::new("dim R(P) = 2^r", p_ring.total_dimension() == 1 << r),
        CheckResult::new(
            "descent census is palindromic",
            report.eulerian.iter().eq(report.eulerian.iter().rev()),
        ),
    ];
    timings.rings_ms = clock.elapsed().as_secs_f64() * 1e3;
    if report.poincare_checks.iter().any(|c| !c.pass) {
        return Ok(stopped(report, "rings", timings, opts));
    }

    // action
    let clock = Instant::now();
    report.dims_invariants = model.invariant_dims(table, &fan)?;
    report.poincare_checks.push(CheckResult::new(
        "invariant dims are binomial(r, d)",
        report.dims_invariants == binom,
    ));
    timings.action_ms = clock.elapsed().as_secs_f64() * 1e3;
    if report.poincare_checks.iter().any(|c| !c.pass) {
        return Ok(stopped(report, "action", timings, opts));
    }

    // phi
    let clock = Instant::now();
    let phi = build_phi(datum, table, &fan)?;
    for i in 0..r {
        let prod = model.linear_face_product(&phi.x_images[i], &phi.y_images[i]);
        report.well_definedness.push(CheckResult::new(
            format!("x{0}*y{0}", i + 1),
            model.is_zero_class(&prod),
        ));
    }
    for j in 0..r {
        let image = apply_phi(f, &phi, &p_ring.presentation().linear_form_poly(j));
        report.well_definedness.push(CheckResult::new(
            format!("linear relation at alpha_{}", j + 1),
            model.is_zero_class(&image),
        ));
    }
    let n = fan.facets().len() as u32;
    let perms: Vec<Vec<u32>> = (0..r)
        .map(|s| {
            let g = table.from_word(&[s]);
            (0..n).map(|v| act_on_variable(&fan, table, g, v)).collect()
        })
        .collect();
    for v in 0..2 * r as u32 {
        let name = if (v as usize) < r {
            format!("phi(x{})", v + 1)
        } else {
            format!("phi(y{})", v as usize - r + 1)
        };
        let image = phi.image(v);
        for (s, perm) in perms.iter().enumerate() {
            let mut moved = Polynomial::new();
            for (m, c) in image {
                poly_add_term(f, &mut moved, m.permute(perm), c.clone());
                poly_add_term(f, &mut moved, m.clone(), f.neg(c));
            }
            report.invariance.push(CheckResult::new(
                format!("s{} fixes {name}", s + 1),
                model.is_zero_class(&moved),
            ));
        }
    }
    let nonzero_top = !f.is_zero(&model.orbit_product_value());
    let ranks: Vec<usize> = (0..=r)
        .map(|d| {
            if !nonzero_top {
                return Ok(0);
            }
            let unit = |k: usize, len: usize| -> Vec<F::Elem> {
                (0..len)
                    .map(|t| if t == k { f.one() } else { f.zero() })
                    .collect()
            };
            let (da, db) = (p_ring.dim(d), p_ring.dim(r - d));
            let rows: Vec<Vec<F::Elem>> = (0..da)
                .map(|a| {
                    (0..db)
                        .map(|b| {
                            Ok(p_ring.multiply(d, &unit(a, da), r - d, &unit(b, db))?[0].clone())
                        })
                        .collect::<Result<_>>()
                })
                .collect::<Result<_>>()?;
            Ok(rank_of_rows(f, &rows))
        })
        .collect::<Result<_>>()?;
    report.injectivity_rank = ranks.iter().sum();
    report.surjectivity = ranks
        .iter()
        .zip(&report.dims_invariants)
        .enumerate()
        .map(|(d, (rank, inv))| {
            CheckResult::new(
                format!("image rank equals invariant dim in degree {d}"),
                rank == inv,
            )
        })
        .collect();
    timings.phi_ms = clock.elapsed().as_secs_f64() * 1e3;
    if opts.timings {
        report.timings = Some(timings);
    }
    report.finish();
    Ok(report)
}
