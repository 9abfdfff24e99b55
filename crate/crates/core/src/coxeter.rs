//! Finite Coxeter groups: validation, the geometric representation, full
//! enumeration, descents, and parabolic cosets.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{identity, leading_principal_minors, mat_mul, Matrix};
use crate::scalar::{Field, Rational};

/// Default cap on the number of enumerated elements (H4 has 14400).
pub const DEFAULT_ELEMENT_BOUND: usize = 200_000;

/// A subset of the generator indices `0..rank`, as a bit set.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(pub u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(rank: usize) -> GenSet {
        if rank >= 32 {
            GenSet(u32::MAX)
        } else {
            GenSet((1u32 << rank) - 1)
        }
    }

    pub fn singleton(i: usize) -> GenSet {
        GenSet(1 << i)
    }

    /// `[rank] \ {i}`: the generators of the maximal parabolic `W_i`.
    pub fn all_but(rank: usize, i: usize) -> GenSet {
        GenSet(GenSet::full(rank).0 & !(1 << i))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersect(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, rank: usize) -> GenSet {
        GenSet(GenSet::full(rank).0 & !self.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = GenSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|i| i + 1)).finish()
    }
}

/// Symmetric matrix of orders `m_st` of products of simple reflections.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoxeterMatrix {
    rank: usize,
    m: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    pub fn new(m: Vec<Vec<u32>>) -> Result<Self> {
        let cm = CoxeterMatrix { rank: m.len(), m };
        cm.validate()?;
        Ok(cm)
    }

    /// Parse `{"rank": r, "m": [[1, m12, ...], ...]}`. Entries must be
    /// positive integers; infinite orders are rejected.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Doc {
            rank: usize,
            m: Vec<Vec<serde_json::Value>>,
        }
        let doc: Doc = serde_json::from_str(text)
            .map_err(|e| Error::InvalidCoxeterMatrix(format!("malformed document: {e}")))?;
        if doc.m.len() != doc.rank {
            return Err(Error::InvalidCoxeterMatrix(format!(
                "rank is {} but m has {} rows",
                doc.rank,
                doc.m.len()
            )));
        }
        let mut rows = Vec::with_capacity(doc.rank);
        for (s, row) in doc.m.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (t, v) in row.iter().enumerate() {
                let n = v
                    .as_u64()
                    .filter(|&n| n >= 1 && n <= u32::MAX as u64)
                    .ok_or_else(|| {
                        Error::InvalidCoxeterMatrix(format!(
                            "entry ({}, {}) = {v} is not a finite positive integer",
                            s + 1,
                            t + 1
                        ))
                    })?;
                out.push(n as u32);
            }
            rows.push(out);
        }
        Self::new(rows)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, s: usize, t: usize) -> u32 {
        self.m[s][t]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.m
    }

    /// Shape, diagonal and symmetry conditions.
    pub fn validate(&self) -> Result<()> {
        let r = self.rank;
        if self.m.len() != r || self.m.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidCoxeterMatrix("matrix is not square".into()));
        }
        for s in 0..r {
            if self.m[s][s] != 1 {
                return Err(Error::InvalidCoxeterMatrix(format!(
                    "diagonal entry ({0}, {0}) must be 1",
                    s + 1
                )));
            }
            for t in 0..r {
                if s != t && self.m[s][t] < 2 {
                    return Err(Error::InvalidCoxeterMatrix(format!(
                        "off-diagonal entry ({}, {}) = {} must be at least 2",
                        s + 1,
                        t + 1,
                        self.m[s][t]
                    )));
                }
                if self.m[s][t] != self.m[t][s] {
                    return Err(Error::InvalidCoxeterMatrix(format!(
                        "entries ({0}, {1}) and ({1}, {0}) differ",
                        s + 1,
                        t + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Block-diagonal sum (the Coxeter matrix of a direct product).
    pub fn direct_sum(&self, other: &CoxeterMatrix) -> CoxeterMatrix {
        let r = self.rank + other.rank;
        let m = (0..r)
            .map(|s| {
                (0..r)
                    .map(|t| match (s < self.rank, t < self.rank) {
                        (true, true) => self.m[s][t],
                        (false, false) => other.m[s - self.rank][t - self.rank],
                        _ => 2,
                    })
                    .collect()
            })
            .collect();
        CoxeterMatrix { rank: r, m }
    }

    /// Exact positive-definiteness test of the Gram matrix over `field`.
    pub fn check_finite<F: Field>(&self, field: &F) -> Result<()> {
        let b = gram_matrix(self, field)?;
        for (k, minor) in leading_principal_minors(field, &b).iter().enumerate() {
            if field.sign(minor) != std::cmp::Ordering::Greater {
                return Err(Error::NotFiniteType(format!(
                    "leading principal minor of size {} is {} (not positive)",
                    k + 1,
                    field.render(minor)
                )));
            }
        }
        Ok(())
    }
}

/// The symmetric bilinear form `(a_s, a_t) = -cos(pi/m_st)`.
pub fn gram_matrix<F: Field>(m: &CoxeterMatrix, field: &F) -> Result<Matrix<F::Elem>> {
    m.validate()?;
    let minus_half = field.from_rational(&Rational::new(-1, 2));
    let r = m.rank();
    let mut b = Matrix::filled(r, r, field.zero());
    for s in 0..r {
        for t in 0..r {
            let order = m.get(s, t);
            let c = field
                .two_cos_pi_over(order)
                .ok_or(Error::FieldTooSmall(order))?;
            b.set(s, t, field.mul(&minus_half, &c));
        }
    }
    Ok(b)
}

/// Matrix of `s_i` acting on the simple-root basis, for a reflection datum
/// `a` with `s_i(alpha_t) = alpha_t - a[t][i] alpha_i`. For a Cartan matrix
/// this is the usual root action; for twice the Gram matrix it is the
/// geometric representation.
pub fn simple_reflection<F: Field>(field: &F, a: &Matrix<F::Elem>, i: usize) -> Matrix<F::Elem> {
    let r = a.rows();
    let mut m = identity(field, r);
    for t in 0..r {
        let v = field.sub(m.get(i, t), a.get(t, i));
        m.set(i, t, v);
    }
    m
}

#[derive(Clone, Debug)]
pub struct GroupElement<E> {
    pub index: usize,
    /// Reduced word, generator indices from 0.
    pub word: Vec<usize>,
    pub matrix: Matrix<E>,
    pub length: usize,
    /// Right descents `{i : l(w s_i) < l(w)}`.
    pub descents: GenSet,
}

/// A fully enumerated finite Coxeter group.
///
/// Element ids follow breadth-first order from the identity, i.e. by length
/// and then by discovery, so id 0 is always the identity.
#[derive(Clone, Debug)]
pub struct GroupTable<F: Field> {
    field: F,
    rank: usize,
    generators: Vec<Matrix<F::Elem>>,
    elements: Vec<GroupElement<F::Elem>>,
    right: Vec<usize>,
    left: Vec<usize>,
    inverse: Vec<usize>,
    longest: usize,
}

impl<F: Field> GroupTable<F> {
    /// Breadth-first closure of the simple reflections of the datum `a` (see
    /// [`simple_reflection`]) under right multiplication.
    pub fn enumerate(field: &F, a: &Matrix<F::Elem>, bound: usize) -> Result<Self> {
        let r = a.rows();
        let generators: Vec<_> = (0..r).map(|i| simple_reflection(field, a, i)).collect();
        let mut index: HashMap<Matrix<F::Elem>, usize> = HashMap::new();
        let id = identity(field, r);
        index.insert(id.clone(), 0);
        let mut elements = vec![GroupElement {
            index: 0,
            word: Vec::new(),
            matrix: id,
            length: 0,
            descents: GenSet::EMPTY,
        }];
        let mut right: Vec<usize> = Vec::new();
        let mut cursor = 0;
        while cursor < elements.len() {
            for (i, g) in generators.iter().enumerate() {
                let prod = mat_mul(field, &elements[cursor].matrix, g);
                let next = match index.get(&prod) {
                    Some(&k) => k,
                    None => {
                        let k = elements.len();
                        if k >= bound {
                            return Err(Error::GroupTooLarge(bound));
                        }
                        let mut word = elements[cursor].word.clone();
                        word.push(i);
                        let length = elements[cursor].length + 1;
                        index.insert(prod.clone(), k);
                        elements.push(GroupElement {
                            index: k,
                            word,
                            matrix: prod,
                            length,
                            descents: GenSet::EMPTY,
                        });
                        k
                    }
                };
                right.push(next);
            }
            cursor += 1;
        }
        let n = elements.len();
        let mut left = vec![0; n * r];
        for (w, el) in elements.iter().enumerate() {
            for (i, g) in generators.iter().enumerate() {
                let prod = mat_mul(field, g, &el.matrix);
                left[w * r + i] = *index
                    .get(&prod)
                    .ok_or_else(|| Error::Internal("left product escaped the group".into()))?;
            }
        }
        let mut table = GroupTable {
            field: field.clone(),
            rank: r,
            generators,
            elements,
            right,
            left,
            inverse: Vec::new(),
            longest: 0,
        };
        table.finish_tables()?;
        Ok(table)
    }

    fn finish_tables(&mut self) -> Result<()> {
        let r = self.rank;
        let n = self.elements.len();
        for w in 0..n {
            let len = self.elements[w].length;
            let d: GenSet = (0..r)
                .filter(|&i| self.elements[self.right[w * r + i]].length < len)
                .collect();
            self.elements[w].descents = d;
        }
        self.inverse = (0..n)
            .map(|w| {
                let word = &self.elements[w].word;
                word.iter().rev().fold(0, |acc, &i| self.right[acc * r + i])
            })
            .collect();
        let full = GenSet::full(r);
        let longest: Vec<usize> = (0..n)
            .filter(|&w| self.elements[w].descents == full)
            .collect();
        if longest.len() != 1 {
            return Err(Error::Internal(format!(
                "expected one element with full descent set, found {}",
                longest.len()
            )));
        }
        self.longest = longest[0];
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn longest(&self) -> usize {
        self.longest
    }

    pub fn elements(&self) -> &[GroupElement<F::Elem>] {
        &self.elements
    }

    pub fn element(&self, w: usize) -> &GroupElement<F::Elem> {
        &self.elements[w]
    }

    pub fn generator_matrix(&self, i: usize) -> &Matrix<F::Elem> {
        &self.generators[i]
    }

    pub fn length(&self, w: usize) -> usize {
        self.elements[w].length
    }

    /// `w s_i`.
    pub fn mul_gen(&self, w: usize, i: usize) -> usize {
        self.right[w * self.rank + i]
    }

    /// `s_i w`.
    pub fn gen_mul(&self, i: usize, w: usize) -> usize {
        self.left[w * self.rank + i]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w]
    }

    /// `u w`.
    pub fn multiply(&self, u: usize, w: usize) -> usize {
        self.elements[w]
            .word
            .iter()
            .fold(u, |acc, &i| self.mul_gen(acc, i))
    }

    /// Element represented by a word (not necessarily reduced).
    pub fn from_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &i| self.mul_gen(acc, i))
    }

    pub fn descents(&self, w: usize) -> GenSet {
        self.elements[w].descents
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes = Vec::new();
        for start in 0..self.order() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                k += 1;
                for s in 0..self.rank {
                    let y = self.gen_mul(s, self.mul_gen(x, s));
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    pub fn word_string(&self, w: usize) -> String {
        word_string(&self.elements[w].word)
    }

    /// The unique minimal-length element of `w W_I`.
    pub fn min_coset_rep(&self, mut w: usize, set: GenSet) -> usize {
        loop {
            match self.descents(w).intersect(set).iter().next() {
                Some(i) => w = self.mul_gen(w, i),
                None => return w,
            }
        }
    }

    /// Minimal representatives `W^I` of `W / W_I`, in id order.
    pub fn parabolic_quotient(&self, set: GenSet) -> Vec<usize> {
        (0..self.order())
            .filter(|&w| self.descents(w).intersect(set).is_empty())
            .collect()
    }

    /// Elements of the parabolic subgroup `W_I`, in id order.
    pub fn parabolic_subgroup(&self, set: GenSet) -> Vec<usize> {
        (0..self.order())
            .filter(|&w| self.elements[w].word.iter().all(|&i| set.contains(i)))
            .collect()
    }

    /// The coset `w W_I` as a sorted list.
    pub fn coset(&self, w: usize, set: GenSet) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .parabolic_subgroup(set)
            .into_iter()
            .map(|u| self.multiply(w, u))
            .collect();
        out.sort_unstable();
        out
    }

    /// Whether `w_1 W_{I_1} ∩ ... ∩ w_k W_{I_k}` is nonempty, by explicit
    /// intersection of element sets.
    pub fn coset_intersection_nonempty(&self, pairs: &[(usize, GenSet)]) -> bool {
        let Some(((w0, s0), rest)) = pairs.split_first() else {
            return true;
        };
        let mut current: HashSet<usize> = self.coset(*w0, *s0).into_iter().collect();
        for (w, s) in rest {
            let next: HashSet<usize> = self.coset(*w, *s).into_iter().collect();
            current.retain(|x| next.contains(x));
            if current.is_empty() {
                return false;
            }
        }
        !current.is_empty()
    }

    /// Same predicate without materializing the cosets: `x ∈ w W_I` iff
    /// `x` and `w` have the same minimal coset representative.
    pub fn coset_intersection_nonempty_fast(&self, pairs: &[(usize, GenSet)]) -> bool {
        let Some(((w0, s0), _)) = pairs.split_first() else {
            return true;
        };
        let targets: Vec<(usize, GenSet)> = pairs
            .iter()
            .map(|&(w, s)| (self.min_coset_rep(w, s), s))
            .collect();
        let base = self.min_coset_rep(*w0, *s0);
        self.parabolic_subgroup(*s0).into_iter().any(|u| {
            let x = self.multiply(base, u);
            targets
                .iter()
                .all(|&(rep, s)| self.min_coset_rep(x, s) == rep)
        })
    }

    /// Compact binary form of the combinatorial tables; matrices are rebuilt
    /// from the generators on load.
    pub fn to_cache_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(CACHE_MAGIC);
        out.extend_from_slice(&CACHE_VERSION.to_le_bytes());
        out.extend_from_slice(&(self.rank as u32).to_le_bytes());
        out.extend_from_slice(&(self.order() as u32).to_le_bytes());
        for el in &self.elements {
            out.extend_from_slice(&(el.word.len() as u32).to_le_bytes());
            for &i in &el.word {
                out.extend_from_slice(&(i as u32).to_le_bytes());
            }
        }
        for &x in self.right.iter().chain(&self.left) {
            out.extend_from_slice(&(x as u32).to_le_bytes());
        }
        out
    }

    /// Inverse of [`to_cache_bytes`](Self::to_cache_bytes); `None` on a format
    /// or version mismatch.
    pub fn from_cache_bytes(field: &F, a: &Matrix<F::Elem>, bytes: &[u8]) -> Option<Self> {
        let mut cur = bytes.strip_prefix(CACHE_MAGIC)?;
        let mut next_u32 = || -> Option<u32> {
            let (head, tail) = cur.split_first_chunk::<4>()?;
            cur = tail;
            Some(u32::from_le_bytes(*head))
        };
        if next_u32()? != CACHE_VERSION {
            return None;
        }
        let r = next_u32()? as usize;
        if r != a.rows() {
            return None;
        }
        let n = next_u32()? as usize;
        let generators: Vec<_> = (0..r).map(|i| simple_reflection(field, a, i)).collect();
        let mut words: Vec<Vec<usize>> = Vec::with_capacity(n);
        for _ in 0..n {
            let len = next_u32()? as usize;
            let word: Vec<usize> = (0..len)
                .map(|_| next_u32().map(|x| x as usize))
                .collect::<Option<_>>()?;
            if word.iter().any(|&i| i >= r) {
                return None;
            }
            words.push(word);
        }
        let mut read_table = || -> Option<Vec<usize>> {
            (0..n * r)
                .map(|_| next_u32().map(|x| x as usize).filter(|&x| x < n))
                .collect()
        };
        let right = read_table()?;
        let left = read_table()?;
        let mut elements: Vec<GroupElement<F::Elem>> = Vec::with_capacity(n);
        for (k, word) in words.into_iter().enumerate() {
            let matrix = match word.split_last() {
                None => identity(field, r),
                Some((&last, prefix)) => {
                    // breadth-first order puts the parent w s_last earlier
                    let parent = right[k * r + last];
                    if parent >= k || elements[parent].word != prefix {
                        return None;
                    }
                    mat_mul(field, &elements[parent].matrix, &generators[last])
                }
            };
            elements.push(GroupElement {
                index: k,
                length: word.len(),
                word,
                matrix,
                descents: GenSet::EMPTY,
            });
        }
        let mut table = GroupTable {
            field: field.clone(),
            rank: r,
            generators,
            elements,
            right,
            left,
            inverse: Vec::new(),
            longest: 0,
        };
        table.finish_tables().ok()?;
        Some(table)
    }
}

const CACHE_MAGIC: &[u8] = b"CXGT";
/// Version stamp of the group table cache format.
pub const CACHE_VERSION: u32 = 1;

pub fn word_string(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| format!("s{}", i + 1)).collect()
    }
}

/// Enumerate the group of a Coxeter matrix through its geometric
/// representation over `field`.
pub fn enumerate_group<F: Field>(
    m: &CoxeterMatrix,
    field: &F,
    bound: usize,
) -> Result<GroupTable<F>> {
    m.check_finite(field)?;
    let b = gram_matrix(m, field)?;
    let two = field.from_int(2);
    let a = b.map(|x| field.mul(&two, x));
    GroupTable::enumerate(field, &a, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{NumberField, Rationals};

    fn dihedral(m: u32) -> CoxeterMatrix {
        CoxeterMatrix::new(vec![vec![1, m], vec![m, 1]]).unwrap()
    }

    fn a2() -> GroupTable<Rationals> {
        enumerate_group(&dihedral(3), &Rationals, DEFAULT_ELEMENT_BOUND).unwrap()
    }

    #[test]
    fn gram_matrices() {
        let b = gram_matrix(&dihedral(3), &Rationals).unwrap();
        let h = Rational::new(-1, 2);
        assert_eq!(
            b.to_rows(),
            vec![vec![Rational::one(), h.clone()], vec![h, Rational::one()]]
        );
        let b = gram_matrix(&dihedral(2), &Rationals).unwrap();
        assert_eq!(b, identity(&Rationals, 2));
        let k = NumberField::real_cyclotomic(5);
        let b = gram_matrix(&dihedral(5), &k).unwrap();
        let want = k.mul(&k.from_rational(&Rational::new(-1, 2)), &k.generator());
        assert_eq!(b.get(0, 1), &want);
        assert!(matches!(
            gram_matrix(&dihedral(5), &Rationals),
            Err(Error::FieldTooSmall(5))
        ));
    }

    #[test]
    fn validation() {
        assert!(CoxeterMatrix::new(vec![vec![1, 1], vec![1, 1]]).is_err());
        assert!(CoxeterMatrix::new(vec![vec![1, 3], vec![4, 1]]).is_err());
        assert!(CoxeterMatrix::new(vec![vec![2]]).is_err());
        assert!(CoxeterMatrix::from_json(r#"{"rank": 2, "m": [[1, "inf"], ["inf", 1]]}"#).is_err());
        assert!(CoxeterMatrix::from_json(r#"{"rank": 2, "m": [[1, 3], [3, 1]]}"#).is_ok());
        // affine A2~ is rejected by the Gram test
        let affine = CoxeterMatrix::new(vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        assert!(matches!(
            affine.check_finite(&Rationals),
            Err(Error::NotFiniteType(_))
        ));
        assert!(matches!(
            enumerate_group(&affine, &Rationals, 1000),
            Err(Error::NotFiniteType(_))
        ));
    }

    #[test]
    fn bound_is_enforced() {
        let a = gram_matrix(&dihedral(3), &Rationals)
            .unwrap()
            .map(|x| x * &Rational::from_int(2));
        assert!(matches!(
            GroupTable::enumerate(&Rationals, &a, 4),
            Err(Error::GroupTooLarge(4))
        ));
    }

    #[test]
    fn small_orders_and_descents() {
        let a1 =
            enumerate_group(&CoxeterMatrix::new(vec![vec![1]]).unwrap(), &Rationals, 100).unwrap();
        assert_eq!(a1.order(), 2);
        let g = a2();
        assert_eq!(g.order(), 6);
        assert_eq!(g.descents(0), GenSet::EMPTY);
        for i in 0..2 {
            let s = g.from_word(&[i]);
            assert_eq!(g.descents(s), GenSet::singleton(i));
        }
        assert_eq!(g.descents(g.longest()), GenSet::full(2));
        assert_eq!(g.length(g.longest()), 3);
        let k = NumberField::real_cyclotomic(5);
        let i25 = enumerate_group(&dihedral(5), &k, 100).unwrap();
        assert_eq!(i25.order(), 10);
        let rank0 = enumerate_group(&CoxeterMatrix::new(vec![]).unwrap(), &Rationals, 10).unwrap();
        assert_eq!(rank0.order(), 1);
        assert_eq!(rank0.longest(), 0);
    }

    #[test]
    fn coset_representatives() {
        let g = a2();
        let s1 = g.from_word(&[0]);
        let s1s2 = g.from_word(&[0, 1]);
        for set in [GenSet::EMPTY, GenSet::singleton(0), GenSet::full(2)] {
            assert_eq!(g.min_coset_rep(0, set), 0);
        }
        assert_eq!(g.min_coset_rep(s1, GenSet::singleton(0)), 0);
        assert_eq!(g.min_coset_rep(s1s2, GenSet::singleton(1)), s1);
        assert_eq!(g.parabolic_quotient(GenSet::singleton(1)).len(), 3);
        assert_eq!(g.parabolic_quotient(GenSet::EMPTY).len(), 6);
    }

    #[test]
    fn coset_intersections() {
        let g = a2();
        assert!(g.coset_intersection_nonempty(&[(3, GenSet::singleton(0))]));
        let pairs = [(0, GenSet::singleton(1)), (0, GenSet::singleton(0))];
        assert!(g.coset_intersection_nonempty(&pairs));
        let a1 =
            enumerate_group(&CoxeterMatrix::new(vec![vec![1]]).unwrap(), &Rationals, 100).unwrap();
        assert!(!a1.coset_intersection_nonempty(&[(0, GenSet::EMPTY), (1, GenSet::EMPTY)]));
        assert!(!a1.coset_intersection_nonempty_fast(&[(0, GenSet::EMPTY), (1, GenSet::EMPTY)]));
    }

    #[test]
    fn conjugacy_classes_of_dihedral_groups() {
        let classes = a2().conjugacy_classes();
        let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        let k = NumberField::real_cyclotomic(5);
        let g = enumerate_group(&dihedral(5), &k, 100).unwrap();
        // identity, 5 reflections, two classes of rotations
        assert_eq!(g.conjugacy_classes().len(), 4);
    }

    #[test]
    fn cache_round_trip() {
        let m = CoxeterMatrix::new(vec![vec![1, 3, 2], vec![3, 1, 4], vec![2, 4, 1]]).unwrap();
        let k = NumberField::real_cyclotomic(4);
        let g = enumerate_group(&m, &k, 1000).unwrap();
        assert_eq!(g.order(), 48);
        let two = k.from_int(2);
        let a = gram_matrix(&m, &k).unwrap().map(|x| k.mul(&two, x));
        let back = GroupTable::from_cache_bytes(&k, &a, &g.to_cache_bytes()).unwrap();
        assert_eq!(back.order(), 48);
        for w in 0..48 {
            assert_eq!(back.element(w).matrix, g.element(w).matrix);
            assert_eq!(back.descents(w), g.descents(w));
        }
        let mut bytes = g.to_cache_bytes();
        bytes[4] = 99;
        assert!(GroupTable::from_cache_bytes(&k, &a, &bytes).is_none());
    }
}
