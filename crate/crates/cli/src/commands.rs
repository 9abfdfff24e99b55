use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use coxring::action::{fixed_subspace_dimension, invariant_dimension, VariablePermutationAction};
use coxring::coxeter::GroupTable;
use coxring::duality::DualityModel;
use coxring::fans::WpFan;
use coxring::iso::{
    eulerian_polynomial, verify_with_table, CheckResult, Method, VerificationReport, VerifyOptions,
    DUALITY_THRESHOLD,
};
use coxring::rings::{build_quotient, p_presentation, wp_presentation, QuotientOptions};
use coxring::rootdata::{
    catalog_entry, coxeter_catalog, is_crystallographic_label, AnyDatum, CatalogEntry,
    DatumVisitor, Mode, PairingDatum,
};
use coxring::scalar::{field_for_coxeter_matrix, Field, FieldDescriptor, FieldKind};
use serde::Serialize;
use serde_json::Value;

use crate::cache::load_group;

/// Groups larger than this need `--allow-slow` before rings are built.
pub const SLOW_ORDER: usize = 2000;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<coxring::Error> for CliError {
    fn from(e: coxring::Error) -> Self {
        if e.is_usage() {
            CliError::Usage(e.to_string())
        } else {
            CliError::Internal(e.to_string())
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// One unit of output: a JSON value, its text rendering, and whether it
/// counts as a pass for the exit code.
pub struct Item {
    pub json: Value,
    pub text: String,
    pub pass: bool,
}

impl Item {
    fn ok(json: impl Serialize, text: String) -> CliResult<Item> {
        Ok(Item {
            json: serde_json::to_value(json).map_err(|e| CliError::Internal(e.to_string()))?,
            text,
            pass: true,
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct Shared {
    pub cache_dir: Option<PathBuf>,
    pub allow_slow: bool,
    pub degree_cap: Option<usize>,
}

impl Shared {
    fn group<F: Field>(&self, datum: &PairingDatum<F>) -> CliResult<GroupTable<F>> {
        Ok(load_group(datum, self.cache_dir.as_deref())?)
    }

    fn gate(&self, datum_label: &str, order: usize) -> CliResult<()> {
        if order > SLOW_ORDER && !self.allow_slow {
            return Err(CliError::Usage(format!(
                "{datum_label} has |W| = {order}; building its rings is long-running, pass --allow-slow"
            )));
        }
        Ok(())
    }

    fn ring_opts(&self) -> QuotientOptions {
        QuotientOptions {
            degree_cap: self.degree_cap,
            equivariant_only: false,
        }
    }
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn field_name(d: &FieldDescriptor) -> String {
    match d.kind {
        FieldKind::Rational => "Q".to_string(),
        FieldKind::NumberField => format!("Q({})", d.generator),
    }
}

fn heading<F: Field>(datum: &PairingDatum<F>) -> String {
    format!(
        "{} [{}, {}]",
        datum.label(),
        datum.mode(),
        field_name(&datum.field().descriptor())
    )
}

// verify

pub struct Verify<'a> {
    pub shared: &'a Shared,
    pub cross_check: bool,
    pub timings: bool,
}

impl DatumVisitor for Verify<'_> {
    type Output = CliResult<Item>;

    fn visit<F: Field>(self, datum: &PairingDatum<F>) -> CliResult<Item> {
        let clock = Instant::now();
        let table = self.shared.group(datum)?;
        let group_ms = clock.elapsed().as_secs_f64() * 1e3;
        self.shared.gate(datum.label(), table.order())?;
        let opts = VerifyOptions {
            degree_cap: self.shared.degree_cap,
            cross_check: self.cross_check,
            timings: self.timings,
            ..VerifyOptions::default()
        };
        let mut report = verify_with_table(datum, &table, &opts)?;
        if let Some(t) = &mut report.timings {
            t.group_ms = group_ms;
        }
        let text = render_report(&report);
        let pass = report.passed();
        let mut item = Item::ok(&report, text)?;
        item.pass = pass;
        Ok(item)
    }
}

fn summarize(checks: &[CheckResult]) -> String {
    let passed = checks.iter().filter(|c| c.pass).count();
    let mut s = format!("{passed}/{} pass", checks.len());
    for c in checks.iter().filter(|c| !c.pass) {
        let _ = write!(s, "; FAILED: {}", c.name);
    }
    s
}

fn render_report(r: &VerificationReport) -> String {
    let mut s = String::new();
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    let _ = writeln!(
        s,
        "{} [{}, {}]: {verdict}",
        r.label,
        r.mode,
        field_name(&r.field)
    );
    let method = match r.method {
        Method::Duality => "top-degree pairing",
        _ => "normal forms",
    };
    let _ = writeln!(s, "  rank {}, |W| = {}, {method}", r.rank, r.group_order);
    if let Some(det) = &r.cartan_determinant {
        let _ = writeln!(s, "  det(Cartan) = {det}");
    }
    let _ = writeln!(s, "  graded dims by degree d (cohomological degree 2d):");
    let _ = writeln!(s, "    R(P):        {}", join(&r.dims_r_p));
    let _ = writeln!(s, "    R(WP):       {}", join(&r.dims_r_wp));
    let _ = writeln!(s, "    invariants:  {}", join(&r.dims_invariants));
    if let Some(fixed) = &r.dims_invariants_fixed_subspace {
        let _ = writeln!(s, "    fixed space: {}", join(fixed));
    }
    let _ = writeln!(s, "    descents:    {}", join(&r.eulerian));
    let _ = writeln!(s, "  dimension checks: {}", summarize(&r.poincare_checks));
    let _ = writeln!(s, "  well-definedness: {}", summarize(&r.well_definedness));
    let _ = writeln!(s, "  invariance: {}", summarize(&r.invariance));
    let _ = writeln!(
        s,
        "  injectivity rank: {} of {}",
        r.injectivity_rank, r.expected_rank
    );
    let _ = writeln!(s, "  surjectivity: {}", summarize(&r.surjectivity));
    if let Some(stage) = &r.failed_stage {
        let _ = writeln!(s, "  stopped at stage: {stage}");
    }
    if let Some(t) = &r.timings {
        let _ = writeln!(
            s,
            "  timings (ms): group {:.1}, rings {:.1}, action {:.1}, phi {:.1}",
            t.group_ms, t.rings_ms, t.action_ms, t.phi_ms
        );
    }
    s
}

// poincare

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
pub enum PoincareRing {
    #[value(name = "P")]
    #[serde(rename = "P")]
    P,
    #[value(name = "WP")]
    #[serde(rename = "WP")]
    Wp,
    #[value(name = "invariants")]
    #[serde(rename = "invariants")]
    Invariants,
}

pub struct Poincare<'a> {
    pub shared: &'a Shared,
    pub ring: PoincareRing,
    pub cross_check: bool,
}

#[derive(Serialize)]
struct PoincareJson<'a> {
    label: &'a str,
    mode: Mode,
    ring: PoincareRing,
    coefficients: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fixed_subspace_coefficients: Option<Vec<usize>>,
}

impl DatumVisitor for Poincare<'_> {
    type Output = CliResult<Item>;

    fn visit<F: Field>(self, datum: &PairingDatum<F>) -> CliResult<Item> {
        let mut fixed = None;
        let coefficients = match self.ring {
            PoincareRing::P => {
                build_quotient(p_presentation(datum)?, self.shared.ring_opts())?.graded_dims()
            }
            PoincareRing::Wp | PoincareRing::Invariants => {
                let table = self.shared.group(datum)?;
                self.shared.gate(datum.label(), table.order())?;
                let fan = WpFan::new(datum, &table);
                if table.order() > DUALITY_THRESHOLD {
                    if self.cross_check {
                        return Err(CliError::Usage(format!(
                            "{} has |W| = {}; the fixed-subspace cross-check needs normal forms and is limited to |W| <= {DUALITY_THRESHOLD}",
                            datum.label(),
                            table.order()
                        )));
                    }
                    let model = DualityModel::new(datum, &table, &fan)?;
                    let mut dims = if self.ring == PoincareRing::Wp {
                        model.pairing_ranks()
                    } else {
                        model.invariant_dims(&table, &fan)?
                    };
                    if let Some(cap) = self.shared.degree_cap {
                        dims.truncate(cap + 1);
                    }
                    dims
                } else {
                    let ring = build_quotient(
                        wp_presentation(datum, &table, &fan)?,
                        self.shared.ring_opts(),
                    )?;
                    if self.ring == PoincareRing::Wp {
                        ring.graded_dims()
                    } else {
                        let action = VariablePermutationAction::new(&fan, &table);
                        if self.cross_check {
                            fixed = Some(
                                (0..=ring.top_degree())
                                    .map(|d| fixed_subspace_dimension(&ring, &action, &table, d))
                                    .collect::<coxring::Result<Vec<_>>>()?,
                            );
                        }
                        (0..=ring.top_degree())
                            .map(|d| invariant_dimension(&ring, &action, &table, d))
                            .collect::<coxring::Result<_>>()?
                    }
                }
            }
        };
        let ring_name = match self.ring {
            PoincareRing::P => "R(P)",
            PoincareRing::Wp => "R(WP)",
            PoincareRing::Invariants => "R(WP)^W",
        };
        let mut text = format!("{} {ring_name}: {}\n", heading(datum), join(&coefficients));
        if let Some(fx) = &fixed {
            let _ = writeln!(text, "  fixed-subspace ranks: {}", join(fx));
        }
        let pass = fixed.as_ref().map_or(true, |fx| *fx == coefficients);
        let mut item = Item::ok(
            PoincareJson {
                label: datum.label(),
                mode: datum.mode(),
                ring: self.ring,
                coefficients,
                fixed_subspace_coefficients: fixed,
            },
            text,
        )?;
        item.pass = pass;
        Ok(item)
    }
}

// eulerian

pub struct Eulerian<'a> {
    pub shared: &'a Shared,
}

#[derive(Serialize)]
struct EulerianJson<'a> {
    label: &'a str,
    mode: Mode,
    group_order: usize,
    coefficients: Vec<usize>,
}

impl DatumVisitor for Eulerian<'_> {
    type Output = CliResult<Item>;

    fn visit<F: Field>(self, datum: &PairingDatum<F>) -> CliResult<Item> {
        let table = self.shared.group(datum)?;
        let coefficients = eulerian_polynomial(&table);
        let text = format!("{} descents: {}\n", heading(datum), join(&coefficients));
        Item::ok(
            EulerianJson {
                label: datum.label(),
                mode: datum.mode(),
                group_order: table.order(),
                coefficients,
            },
            text,
        )
    }
}

// group-dump

pub struct GroupDump<'a> {
    pub shared: &'a Shared,
}

#[derive(Serialize)]
struct ElementJson {
    index: usize,
    word: String,
    length: usize,
    /// 1-based generator indices.
    descents: Vec<usize>,
}

#[derive(Serialize)]
struct GroupJson<'a> {
    label: &'a str,
    mode: Mode,
    rank: usize,
    order: usize,
    longest: String,
    elements: Vec<ElementJson>,
}

impl DatumVisitor for GroupDump<'_> {
    type Output = CliResult<Item>;

    fn visit<F: Field>(self, datum: &PairingDatum<F>) -> CliResult<Item> {
        let table = self.shared.group(datum)?;
        let elements: Vec<ElementJson> = (0..table.order())
            .map(|w| ElementJson {
                index: w,
                word: table.word_string(w),
                length: table.length(w),
                descents: table.descents(w).iter().map(|i| i + 1).collect(),
            })
            .collect();
        let mut text = format!("{} |W| = {}\n", heading(datum), table.order());
        for e in &elements {
            let _ = writeln!(
                text,
                "{}\t{}\tlength {}\tdescents {:?}",
                e.index, e.word, e.length, e.descents
            );
        }
        Item::ok(
            GroupJson {
                label: datum.label(),
                mode: datum.mode(),
                rank: table.rank(),
                order: table.order(),
                longest: table.word_string(table.longest()),
                elements,
            },
            text,
        )
    }
}

// presentation

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum PresentationRing {
    #[value(name = "P")]
    P,
    #[value(name = "WP")]
    Wp,
}

pub struct PresentationCmd<'a> {
    pub shared: &'a Shared,
    pub ring: PresentationRing,
    pub equivariant: bool,
}

#[derive(Serialize)]
struct PresentationOut<'a> {
    label: &'a str,
    mode: Mode,
    ring: &'static str,
    #[serde(flatten)]
    presentation: coxring::rings::PresentationJson,
}

impl DatumVisitor for PresentationCmd<'_> {
    type Output = CliResult<Item>;

    fn visit<F: Field>(self, datum: &PairingDatum<F>) -> CliResult<Item> {
        let mut pairing_dims = None;
        let (presentation, ring_name) = match self.ring {
            PresentationRing::P => (p_presentation(datum)?, "P"),
            PresentationRing::Wp => {
                let table = self.shared.group(datum)?;
                self.shared.gate(datum.label(), table.order())?;
                let fan = WpFan::new(datum, &table);
                if !self.equivariant && table.order() > DUALITY_THRESHOLD {
                    let mut dims = DualityModel::new(datum, &table, &fan)?.pairing_ranks();
                    if let Some(cap) = self.shared.degree_cap {
                        dims.truncate(cap + 1);
                    }
                    pairing_dims = Some(dims);
                }
                (wp_presentation(datum, &table, &fan)?, "WP")
            }
        };
        let dims = if self.equivariant {
            None
        } else if pairing_dims.is_some() {
            pairing_dims
        } else {
            Some(build_quotient(presentation.clone(), self.shared.ring_opts())?.graded_dims())
        };
        let json = presentation.to_json(self.equivariant, dims);
        let mut text = format!("{} R({ring_name})\n", heading(datum));
        let _ = writeln!(
            text,
            "  variables ({}): {}",
            json.variables.len(),
            json.variables.join(" ")
        );
        let _ = writeln!(
            text,
            "  monomial relations ({}): {}",
            json.monomial_relations.len(),
            json.monomial_relations.join(", ")
        );
        let _ = writeln!(
            text,
            "  linear relations ({}):",
            json.linear_relations.len()
        );
        for row in &json.linear_relations {
            let terms: Vec<String> = row
                .iter()
                .zip(&json.variables)
                .filter(|(c, _)| c.as_str() != "0")
                .map(|(c, v)| {
                    if c == "1" {
                        v.clone()
                    } else {
                        format!("({c})*{v}")
                    }
                })
                .collect();
            let _ = writeln!(text, "    {}", terms.join(" + "));
        }
        if let Some(d) = &json.graded_dims {
            let _ = writeln!(text, "  graded dims: {}", join(d));
        }
        Item::ok(
            PresentationOut {
                label: datum.label(),
                mode: datum.mode(),
                ring: ring_name,
                presentation: json,
            },
            text,
        )
    }
}

// catalog

pub const CATALOG_LABELS: &[&str] = &[
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4", "H3", "H4", "I2(2)",
    "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "I2(9)", "I2(10)", "I2(11)", "I2(12)",
    "A1xA1", "A1xA2", "A1xB2", "A2xA2", "A1xI2(5)",
];

#[derive(Serialize)]
struct CatalogJson {
    #[serde(flatten)]
    entry: CatalogEntry,
    group_order: usize,
    /// Field of the Coxeter-mode geometric representation.
    coxeter_field: FieldDescriptor,
}

struct Order<'a>(&'a Shared);

impl DatumVisitor for Order<'_> {
    type Output = CliResult<usize>;

    fn visit<F: Field>(self, datum: &PairingDatum<F>) -> Self::Output {
        Ok(self.0.group(datum)?.order())
    }
}

pub fn catalog_item(label: &str, shared: &Shared) -> CliResult<Item> {
    let entry = catalog_entry(label)?;
    let crystallographic = is_crystallographic_label(label)?;
    let mode = if crystallographic {
        Mode::Crystallographic
    } else {
        Mode::Coxeter
    };
    let order = AnyDatum::from_label(label, mode)?.visit(Order(shared))?;
    let field = field_for_coxeter_matrix(&coxeter_catalog(label)?)?.descriptor();
    let kind = if crystallographic {
        "crystallographic"
    } else {
        "non-crystallographic"
    };
    let text = format!(
        "{:<10} rank {:<2} |W| = {:<6} {:<20} field {}\n",
        label,
        entry.rank,
        order,
        kind,
        field_name(&field)
    );
    Item::ok(
        CatalogJson {
            entry,
            group_order: order,
            coxeter_field: field,
        },
        text,
    )
}
