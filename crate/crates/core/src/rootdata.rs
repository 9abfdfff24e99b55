//! Cartan matrices, coweight coordinates and the pairing datum shared by the
//! crystallographic and the general Coxeter constructions.
//!
//! Conventions: `C[i][j] = <alpha_i, alpha_j^vee>` with Bourbaki numbering,
//! so column `j` of `C` is the coroot `alpha_j^vee` written in fundamental
//! coweights. Vectors are plain coordinate vectors: root-lattice vectors in
//! the simple-root basis, coweight vectors in the fundamental-coweight basis.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::coxeter::{gram_matrix, CoxeterMatrix, GroupTable, DEFAULT_ELEMENT_BOUND};
use crate::error::{Error, Result};
use crate::linalg::{mat_vec, Matrix};
use crate::scalar::{
    field_for_coxeter_matrix, primitive_part, AnyField, Field, NumberField, Rational, Rationals,
};

/// Coordinates in the fundamental-coweight basis.
pub type CoweightVector<E> = Vec<E>;
/// Coordinates in the simple-root basis.
pub type RootLatticeVector<E> = Vec<E>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Cartan matrix, coweight lattice and primitive coroot directions.
    Crystallographic,
    /// Gram matrix of the geometric representation; no lattice.
    Coxeter,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Crystallographic => "crystallographic",
            Mode::Coxeter => "coxeter",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CartanMatrix {
    label: String,
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(label: impl Into<String>, entries: Vec<Vec<i64>>) -> Result<Self> {
        let cm = CartanMatrix {
            label: label.into(),
            entries,
        };
        cm.validate()?;
        Ok(cm)
    }

    fn validate(&self) -> Result<()> {
        let r = self.entries.len();
        let bad = |msg: String| Err(Error::InvalidCartanMatrix(msg));
        if self.entries.iter().any(|row| row.len() != r) {
            return bad("matrix is not square".into());
        }
        for i in 0..r {
            if self.entries[i][i] != 2 {
                return bad(format!("diagonal entry {} is not 2", i + 1));
            }
            for j in 0..r {
                if i == j {
                    continue;
                }
                let (a, b) = (self.entries[i][j], self.entries[j][i]);
                if a > 0 {
                    return bad(format!("entry ({}, {}) is positive", i + 1, j + 1));
                }
                if (a == 0) != (b == 0) {
                    return bad(format!(
                        "entries ({0}, {1}) and ({1}, {0}) disagree on zero",
                        i + 1,
                        j + 1
                    ));
                }
                if !matches!(a * b, 0..=3) {
                    return bad(format!(
                        "product of entries ({0}, {1}) and ({1}, {0}) exceeds 3",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
        let m = self.coxeter_matrix();
        m.check_finite(&NumberField::real_cyclotomic(12))
            .map_err(|e| Error::InvalidCartanMatrix(e.to_string()))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn to_matrix(&self) -> Matrix<Rational> {
        Matrix::from_fn(self.rank(), self.rank(), |i, j| {
            Rational::from_int(self.get(i, j))
        })
    }

    /// Orders `m_ij` from `C_ij C_ji` in {0, 1, 2, 3}.
    pub fn coxeter_matrix(&self) -> CoxeterMatrix {
        let r = self.rank();
        let m = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        if i == j {
                            1
                        } else {
                            match self.get(i, j) * self.get(j, i) {
                                0 => 2,
                                1 => 3,
                                2 => 4,
                                _ => 6,
                            }
                        }
                    })
                    .collect()
            })
            .collect();
        CoxeterMatrix::new(m).expect("Cartan data yields a valid Coxeter matrix")
    }

    pub fn direct_sum(&self, other: &CartanMatrix) -> CartanMatrix {
        let (a, b) = (self.rank(), other.rank());
        let entries = (0..a + b)
            .map(|i| {
                (0..a + b)
                    .map(|j| match (i < a, j < a) {
                        (true, true) => self.get(i, j),
                        (false, false) => other.get(i - a, j - a),
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        CartanMatrix {
            label: format!("{}x{}", self.label, other.label),
            entries,
        }
    }
}

/// One irreducible factor of a type label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Factor {
    Classical(char, usize),
    Dihedral(u32),
}

fn parse_factor(s: &str) -> Option<Factor> {
    if let Some(rest) = s.strip_prefix("I2(") {
        let m: u32 = rest.strip_suffix(')')?.parse().ok()?;
        return (m >= 2).then_some(Factor::Dihedral(m));
    }
    let mut chars = s.chars();
    let letter = chars.next()?.to_ascii_uppercase();
    let digits = chars.as_str();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    let n: usize = digits.parse().ok()?;
    let ok = match letter {
        'A' => n >= 1,
        'B' | 'C' => n >= 2,
        'D' => n >= 4,
        'E' => (6..=8).contains(&n),
        'F' => n == 4,
        'G' => n == 2,
        'H' => n == 3 || n == 4,
        _ => false,
    };
    ok.then_some(Factor::Classical(letter, n))
}

fn parse_label(label: &str) -> Result<Vec<Factor>> {
    let trimmed = label.trim();
    if trimmed.is_empty() {
        return Err(Error::UnknownLabel(label.to_string()));
    }
    trimmed
        .split(['x', '×', '*'])
        .map(|part| parse_factor(part.trim()).ok_or_else(|| Error::UnknownLabel(label.to_string())))
        .collect()
}

fn factor_cartan(f: Factor) -> Option<Vec<Vec<i64>>> {
    let chain = |n: usize| -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect()
    };
    let c = match f {
        Factor::Classical('A', n) => chain(n),
        Factor::Classical('B', n) => {
            let mut c = chain(n);
            c[n - 2][n - 1] = -2;
            c
        }
        Factor::Classical('C', n) => {
            let mut c = chain(n);
            c[n - 1][n - 2] = -2;
            c
        }
        Factor::Classical('D', n) => {
            let mut c = chain(n);
            c[n - 2][n - 1] = 0;
            c[n - 1][n - 2] = 0;
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
            c
        }
        Factor::Classical('E', n) => {
            // 1-3-4-5-...-n with 2 attached to 4
            let mut c = vec![vec![0; n]; n];
            for (i, row) in c.iter_mut().enumerate() {
                row[i] = 2;
            }
            let mut edges = vec![(0, 2), (1, 3)];
            edges.extend((2..n - 1).map(|k| (k, k + 1)));
            for (a, b) in edges {
                c[a][b] = -1;
                c[b][a] = -1;
            }
            c
        }
        Factor::Classical('F', 4) => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -2, 0],
            vec![0, -1, 2, -1],
            vec![0, 0, -1, 2],
        ],
        Factor::Classical('G', 2) => vec![vec![2, -1], vec![-3, 2]],
        Factor::Dihedral(2) => vec![vec![2, 0], vec![0, 2]],
        Factor::Dihedral(3) => chain(2),
        Factor::Dihedral(4) => vec![vec![2, -2], vec![-1, 2]],
        Factor::Dihedral(6) => vec![vec![2, -1], vec![-3, 2]],
        _ => return None,
    };
    Some(c)
}

fn factor_coxeter(f: Factor) -> CoxeterMatrix {
    let from_edges = |n: usize, edges: &[(usize, usize, u32)]| {
        let mut m = vec![vec![2u32; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(a, b, v) in edges {
            m[a][b] = v;
            m[b][a] = v;
        }
        CoxeterMatrix::new(m).expect("catalog Coxeter matrices are valid")
    };
    match f {
        Factor::Classical('H', 3) => from_edges(3, &[(0, 1, 5), (1, 2, 3)]),
        Factor::Classical('H', 4) => from_edges(4, &[(0, 1, 5), (1, 2, 3), (2, 3, 3)]),
        Factor::Dihedral(m) => from_edges(2, &[(0, 1, m)]),
        _ => {
            let c = factor_cartan(f).expect("crystallographic factor");
            CartanMatrix {
                label: String::new(),
                entries: c,
            }
            .coxeter_matrix()
        }
    }
}

/// Cartan matrix of a crystallographic label such as `A3`, `B2`, `F4`,
/// `I2(6)` or a product `A1xA2`.
pub fn cartan_catalog(label: &str) -> Result<CartanMatrix> {
    let factors = parse_label(label)?;
    let mut out: Option<CartanMatrix> = None;
    for f in factors {
        let entries = factor_cartan(f).ok_or_else(|| {
            Error::NotCrystallographic(format!("{label} has no Cartan matrix (use coxeter mode)"))
        })?;
        let c = CartanMatrix {
            label: String::new(),
            entries,
        };
        out = Some(match out {
            None => c,
            Some(prev) => prev.direct_sum(&c),
        });
    }
    let mut c = out.expect("at least one factor");
    c.label = label.trim().to_string();
    Ok(c)
}

/// Coxeter matrix of any catalog label, including `H3`, `H4` and `I2(m)`.
pub fn coxeter_catalog(label: &str) -> Result<CoxeterMatrix> {
    let factors = parse_label(label)?;
    let mut out: Option<CoxeterMatrix> = None;
    for f in factors {
        let m = factor_coxeter(f);
        out = Some(match out {
            None => m,
            Some(prev) => prev.direct_sum(&m),
        });
    }
    Ok(out.expect("at least one factor"))
}

pub fn is_crystallographic_label(label: &str) -> Result<bool> {
    Ok(parse_label(label)?
        .into_iter()
        .all(|f| factor_cartan(f).is_some()))
}

/// The coroot `alpha_j^vee` in coweight coordinates: column `j` of `C`.
pub fn coroot_coords(c: &CartanMatrix, j: usize) -> CoweightVector<Rational> {
    (0..c.rank())
        .map(|i| Rational::from_int(c.get(i, j)))
        .collect()
}

/// Primitive coweight-lattice vector `beta_i` along each coroot, with the
/// multiplier `alpha_i^vee = mult * beta_i`.
pub fn beta_vectors(c: &CartanMatrix) -> Vec<(CoweightVector<Rational>, Rational)> {
    (0..c.rank())
        .map(|j| {
            let (prim, mult) = primitive_part(&coroot_coords(c, j)).expect("coroots are nonzero");
            (prim.into_iter().map(Rational::from).collect(), mult)
        })
        .collect()
}

/// The natural pairing of dual bases.
pub fn pair<F: Field>(field: &F, q: &[F::Elem], v: &[F::Elem]) -> Result<F::Elem> {
    if q.len() != v.len() {
        return Err(Error::RankMismatch {
            expected: q.len(),
            got: v.len(),
        });
    }
    Ok(q.iter().zip(v).fold(field.zero(), |acc, (a, b)| {
        field.add(&acc, &field.mul(a, b))
    }))
}

/// Everything the fan and ring constructions need from a root system or a
/// Coxeter system: the reflection representation on roots, the dual action
/// on coweights, and the normals `eta(C_i)` of the chamber-wall facets of
/// the dominant polytope.
#[derive(Clone, Debug)]
pub struct PairingDatum<F: Field> {
    label: String,
    mode: Mode,
    field: F,
    coxeter: CoxeterMatrix,
    cartan: Option<CartanMatrix>,
    reflection: Matrix<F::Elem>,
    chamber_normals: Vec<CoweightVector<F::Elem>>,
    multipliers: Vec<Rational>,
}

impl PairingDatum<Rationals> {
    /// Lattice datum: reflections from `C`, `eta(C_i) = -beta_i`.
    pub fn crystallographic(c: &CartanMatrix) -> Self {
        let betas = beta_vectors(c);
        let chamber_normals = betas
            .iter()
            .map(|(b, _)| b.iter().map(|x| -x).collect())
            .collect();
        PairingDatum {
            label: c.label().to_string(),
            mode: Mode::Crystallographic,
            field: Rationals,
            coxeter: c.coxeter_matrix(),
            cartan: Some(c.clone()),
            reflection: c.to_matrix(),
            chamber_normals,
            multipliers: betas.into_iter().map(|(_, m)| m).collect(),
        }
    }
}

impl<F: Field> PairingDatum<F> {
    /// Gram-matrix datum over `field`: reflections `v - 2(v, alpha_i) alpha_i`,
    /// `eta(C_i) = -alpha_i`.
    pub fn coxeter(label: impl Into<String>, m: &CoxeterMatrix, field: F) -> Result<Self> {
        m.check_finite(&field)?;
        let b = gram_matrix(m, &field)?;
        let two = field.from_int(2);
        let reflection = b.map(|x| field.mul(&two, x));
        let r = m.rank();
        let chamber_normals = (0..r)
            .map(|i| (0..r).map(|k| field.neg(b.get(k, i))).collect())
            .collect();
        Ok(PairingDatum {
            label: label.into(),
            mode: Mode::Coxeter,
            field,
            coxeter: m.clone(),
            cartan: None,
            reflection,
            chamber_normals,
            multipliers: Vec::new(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.coxeter.rank()
    }

    pub fn coxeter_matrix(&self) -> &CoxeterMatrix {
        &self.coxeter
    }

    pub fn cartan(&self) -> Option<&CartanMatrix> {
        self.cartan.as_ref()
    }

    /// `A` with `s_i(alpha_t) = alpha_t - A[t][i] alpha_i`.
    pub fn reflection_datum(&self) -> &Matrix<F::Elem> {
        &self.reflection
    }

    /// `eta(C_i)` in coweight coordinates.
    pub fn chamber_normal(&self, i: usize) -> &CoweightVector<F::Elem> {
        &self.chamber_normals[i]
    }

    /// `alpha_i^vee = mult_i * beta_i`; empty in Coxeter mode.
    pub fn beta_multipliers(&self) -> &[Rational] {
        &self.multipliers
    }

    pub fn fundamental_coweight(&self, i: usize) -> CoweightVector<F::Elem> {
        (0..self.rank())
            .map(|k| {
                if k == i {
                    self.field.one()
                } else {
                    self.field.zero()
                }
            })
            .collect()
    }

    pub fn simple_root(&self, j: usize) -> RootLatticeVector<F::Elem> {
        self.fundamental_coweight(j)
    }

    pub fn enumerate_group(&self, bound: usize) -> Result<GroupTable<F>> {
        GroupTable::enumerate(&self.field, &self.reflection, bound)
    }

    pub fn enumerate_group_default(&self) -> Result<GroupTable<F>> {
        self.enumerate_group(DEFAULT_ELEMENT_BOUND)
    }

    /// Matrix of `w` on coweight coordinates, the inverse transpose of its
    /// root action.
    pub fn coweight_matrix(&self, table: &GroupTable<F>, w: usize) -> Matrix<F::Elem> {
        table.element(table.inverse(w)).matrix.transpose()
    }

    pub fn coweight_action(
        &self,
        table: &GroupTable<F>,
        w: usize,
        v: &[F::Elem],
    ) -> CoweightVector<F::Elem> {
        mat_vec(&self.field, &self.coweight_matrix(table, w), v)
    }

    pub fn root_action(
        &self,
        table: &GroupTable<F>,
        w: usize,
        q: &[F::Elem],
    ) -> RootLatticeVector<F::Elem> {
        mat_vec(&self.field, &table.element(w).matrix, q)
    }

    /// `w . varpi_i`, the outward normal of the facet `w Q~_i` of the
    /// permutohedron: row `i` of the root action of `w^-1`.
    pub fn facet_normal(
        &self,
        table: &GroupTable<F>,
        i: usize,
        w: usize,
    ) -> CoweightVector<F::Elem> {
        table.element(table.inverse(w)).matrix.row(i).to_vec()
    }
}

/// A pairing datum over whichever field its type requires.
#[derive(Clone, Debug)]
pub enum AnyDatum {
    Rational(PairingDatum<Rationals>),
    NumberField(PairingDatum<NumberField>),
}

/// Generic computation over an [`AnyDatum`].
pub trait DatumVisitor {
    type Output;
    fn visit<F: Field>(self, datum: &PairingDatum<F>) -> Self::Output;
}

impl AnyDatum {
    /// Datum for a catalog label in the given mode. Crystallographic mode
    /// rejects labels without a Cartan matrix.
    pub fn from_label(label: &str, mode: Mode) -> Result<Self> {
        match mode {
            Mode::Crystallographic => Ok(AnyDatum::Rational(PairingDatum::crystallographic(
                &cartan_catalog(label)?,
            ))),
            Mode::Coxeter => Self::from_coxeter_matrix(label, &coxeter_catalog(label)?),
        }
    }

    /// Coxeter-mode datum over the smallest field containing the needed cosines.
    pub fn from_coxeter_matrix(label: &str, m: &CoxeterMatrix) -> Result<Self> {
        Ok(match field_for_coxeter_matrix(m)? {
            AnyField::Rational => AnyDatum::Rational(PairingDatum::coxeter(label, m, Rationals)?),
            AnyField::NumberField(k) => AnyDatum::NumberField(PairingDatum::coxeter(label, m, k)?),
        })
    }

    pub fn visit<V: DatumVisitor>(&self, visitor: V) -> V::Output {
        match self {
            AnyDatum::Rational(d) => visitor.visit(d),
            AnyDatum::NumberField(d) => visitor.visit(d),
        }
    }

    pub fn label(&self) -> &str {
        match self {
            AnyDatum::Rational(d) => d.label(),
            AnyDatum::NumberField(d) => d.label(),
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            AnyDatum::Rational(d) => d.mode(),
            AnyDatum::NumberField(d) => d.mode(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            AnyDatum::Rational(d) => d.rank(),
            AnyDatum::NumberField(d) => d.rank(),
        }
    }

    pub fn coxeter_matrix(&self) -> &CoxeterMatrix {
        match self {
            AnyDatum::Rational(d) => d.coxeter_matrix(),
            AnyDatum::NumberField(d) => d.coxeter_matrix(),
        }
    }
}

/// Machine-readable catalog entry.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub label: String,
    pub rank: usize,
    pub crystallographic: bool,
    pub coxeter_matrix: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cartan_matrix: Option<Vec<Vec<i64>>>,
    /// `mult_i` with `alpha_i^vee = mult_i * beta_i`, as exact strings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_multipliers: Option<Vec<String>>,
}

pub fn catalog_entry(label: &str) -> Result<CatalogEntry> {
    let m = coxeter_catalog(label)?;
    let cartan = if is_crystallographic_label(label)? {
        Some(cartan_catalog(label)?)
    } else {
        None
    };
    Ok(CatalogEntry {
        label: label.to_string(),
        rank: m.rank(),
        crystallographic: cartan.is_some(),
        coxeter_matrix: m.rows().to_vec(),
        beta_multipliers: cartan.as_ref().map(|c| {
            beta_vectors(c)
                .into_iter()
                .map(|(_, k)| k.to_string())
                .collect()
        }),
        cartan_matrix: cartan.map(|c| c.entries().to_vec()),
    })
}

/// Integer coordinates of `beta_i`, for display.
pub fn beta_integer_coords(c: &CartanMatrix, i: usize) -> Vec<BigInt> {
    primitive_part(&coroot_coords(c, i))
        .expect("coroots are nonzero")
        .0
}
