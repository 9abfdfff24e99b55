//! Facets, normals and face combinatorics of the permutohedron `WP` and of
//! the dominant polytope `P` (combinatorially a cube).
//!
//! Faces are handled purely combinatorially: a set of facets is a face iff
//! the facets have a common point, and for `WP` that is decided by coset
//! arithmetic in the group.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::coxeter::{GenSet, GroupTable};
use crate::error::{Error, Result};
use crate::rootdata::{CoweightVector, PairingDatum};
use crate::scalar::Field;

/// The facet `w Q~_i` of `WP`, `w` a minimal representative of `w W_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetWP<E> {
    pub id: usize,
    pub i: usize,
    pub w: usize,
    pub normal: CoweightVector<E>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FacetKind {
    /// The facet `Q_i` lying in a wall-parallel hyperplane, normal `varpi_i`.
    Q,
    /// The facet `C_i` on the chamber wall, normal `-beta_i` (or `-alpha_i`).
    C,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetP<E> {
    pub id: usize,
    pub kind: FacetKind,
    pub i: usize,
    pub normal: CoweightVector<E>,
}

/// The cone spanned by the chamber-wall normals indexed by `j` and the
/// fundamental coweights indexed by `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConeP {
    pub j: GenSet,
    pub k: GenSet,
}

impl ConeP {
    pub fn dimension(&self) -> usize {
        self.j.len() + self.k.len()
    }

    pub fn generators<F: Field>(&self, datum: &PairingDatum<F>) -> Vec<CoweightVector<F::Elem>> {
        self.j
            .iter()
            .map(|j| datum.chamber_normal(j).clone())
            .chain(self.k.iter().map(|k| datum.fundamental_coweight(k)))
            .collect()
    }
}

/// All facets of `WP`, ordered by the group id of `w` and then by `i`.
pub fn facets_of_wp<F: Field>(
    datum: &PairingDatum<F>,
    table: &GroupTable<F>,
) -> Vec<FacetWP<F::Elem>> {
    let r = table.rank();
    let mut out = Vec::new();
    for w in 0..table.order() {
        let d = table.descents(w);
        for i in 0..r {
            if d.is_subset(GenSet::singleton(i)) {
                out.push(FacetWP {
                    id: out.len(),
                    i,
                    w,
                    normal: datum.facet_normal(table, i, w),
                });
            }
        }
    }
    out
}

/// The `2r` facets of `P`: `Q_1..Q_r` get ids `0..r`, `C_1..C_r` ids `r..2r`.
pub fn facets_of_p<F: Field>(datum: &PairingDatum<F>) -> Vec<FacetP<F::Elem>> {
    let r = datum.rank();
    let qs = (0..r).map(|i| FacetP {
        id: i,
        kind: FacetKind::Q,
        i,
        normal: datum.fundamental_coweight(i),
    });
    let cs = (0..r).map(|i| FacetP {
        id: r + i,
        kind: FacetKind::C,
        i,
        normal: datum.chamber_normal(i).clone(),
    });
    qs.chain(cs).collect()
}

/// The facets `(i, w_i)` meet iff the cosets `w_i W_i` have a common element.
pub fn wp_face_nonempty<F: Field>(facets: &[(usize, usize)], table: &GroupTable<F>) -> bool {
    let r = table.rank();
    let pairs: Vec<(usize, GenSet)> = facets
        .iter()
        .map(|&(i, w)| (w, GenSet::all_but(r, i)))
        .collect();
    table.coset_intersection_nonempty(&pairs)
}

/// Opposite facets `Q_i`, `C_i` are disjoint; every other combination meets.
pub fn p_face_nonempty(facets: &[(FacetKind, usize)]) -> bool {
    let qs: HashSet<usize> = facets
        .iter()
        .filter(|f| f.0 == FacetKind::Q)
        .map(|f| f.1)
        .collect();
    !facets
        .iter()
        .any(|&(k, i)| k == FacetKind::C && qs.contains(&i))
}

/// All `3^r` cones `sigma_{J,K}` with `J`, `K` disjoint.
pub fn cones_of_p(rank: usize) -> Vec<ConeP> {
    let mut out = Vec::new();
    for code in 0..3usize.pow(rank as u32) {
        let (mut j, mut k) = (GenSet::EMPTY, GenSet::EMPTY);
        let mut c = code;
        for i in 0..rank {
            match c % 3 {
                1 => j.insert(i),
                2 => k.insert(i),
                _ => {}
            }
            c /= 3;
        }
        out.push(ConeP { j, k });
    }
    out
}

/// Face structure of the fan of `WP` with precomputed minimal coset
/// representatives, so incidence queries are table lookups.
#[derive(Clone, Debug)]
pub struct WpFan<E> {
    rank: usize,
    facets: Vec<FacetWP<E>>,
    index: HashMap<(usize, usize), usize>,
    /// `min_rep[i][w]` = minimal representative of `w W_i`.
    min_rep: Vec<Vec<usize>>,
}

impl<E: Clone> WpFan<E> {
    pub fn new<F: Field<Elem = E>>(datum: &PairingDatum<F>, table: &GroupTable<F>) -> Self {
        let r = table.rank();
        let facets = facets_of_wp(datum, table);
        let index = facets.iter().map(|f| ((f.i, f.w), f.id)).collect();
        let min_rep = (0..r)
            .map(|i| {
                let set = GenSet::all_but(r, i);
                (0..table.order())
                    .map(|w| table.min_coset_rep(w, set))
                    .collect()
            })
            .collect();
        WpFan {
            rank: r,
            facets,
            index,
            min_rep,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn facets(&self) -> &[FacetWP<E>] {
        &self.facets
    }

    pub fn facet_id(&self, i: usize, w: usize) -> Option<usize> {
        self.index.get(&(i, w)).copied()
    }

    pub fn min_rep(&self, i: usize, w: usize) -> usize {
        self.min_rep[i][w]
    }

    /// The `r` facets through the vertex `w' lambda`.
    pub fn vertex_facets(&self, vertex: usize) -> Vec<u32> {
        let mut out: Vec<u32> = (0..self.rank)
            .map(|i| self.index[&(i, self.min_rep[i][vertex])] as u32)
            .collect();
        out.sort_unstable();
        out
    }

    /// Maximal faces, one per group element.
    pub fn maximal_faces(&self, order: usize) -> Vec<Vec<u32>> {
        (0..order).map(|w| self.vertex_facets(w)).collect()
    }

    pub fn variable_labels<F: Field<Elem = E>>(&self, table: &GroupTable<F>) -> Vec<String> {
        self.facets
            .iter()
            .map(|f| format!("X({},{})", f.i + 1, table.word_string(f.w)))
            .collect()
    }

    /// Face test through explicit coset intersection.
    pub fn is_face_by_cosets<F: Field<Elem = E>>(
        &self,
        ids: &[u32],
        table: &GroupTable<F>,
    ) -> bool {
        let pairs: Vec<(usize, usize)> = ids
            .iter()
            .map(|&v| (self.facets[v as usize].i, self.facets[v as usize].w))
            .collect();
        wp_face_nonempty(&pairs, table)
    }
}

pub fn p_variable_labels(rank: usize) -> Vec<String> {
    (1..=rank)
        .map(|i| format!("x{i}"))
        .chain((1..=rank).map(|i| format!("y{i}")))
        .collect()
}

/// Maximal faces of the cube: one of `x_i` (id `i`), `y_i` (id `r + i`) per `i`.
pub fn p_maximal_faces(rank: usize) -> Vec<Vec<u32>> {
    (0..1u32 << rank)
        .map(|mask| {
            let mut f: Vec<u32> = (0..rank as u32)
                .map(|i| {
                    if mask >> i & 1 == 0 {
                        i
                    } else {
                        rank as u32 + i
                    }
                })
                .collect();
            f.sort_unstable();
            f
        })
        .collect()
}

/// A simplicial complex on vertices `0..n`, stored as its full face set.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    num_vertices: usize,
    faces: HashSet<Vec<u32>>,
    by_size: Vec<Vec<Vec<u32>>>,
    neighbors: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    /// Downward closure of the given faces.
    pub fn from_maximal_faces(num_vertices: usize, maximal: &[Vec<u32>]) -> Self {
        let mut faces: HashSet<Vec<u32>> = HashSet::new();
        faces.insert(Vec::new());
        for f in maximal {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            let k = f.len();
            for mask in 1u64..(1u64 << k) {
                let sub: Vec<u32> = (0..k)
                    .filter(|&b| mask >> b & 1 == 1)
                    .map(|b| f[b])
                    .collect();
                faces.insert(sub);
            }
        }
        Self::from_face_set(num_vertices, faces)
    }

    /// Faces discovered level by level from a predicate on sorted vertex
    /// sets. Errors if the predicate accepts a set with a rejected subset.
    pub fn from_oracle(
        num_vertices: usize,
        mut is_face: impl FnMut(&[u32]) -> bool,
    ) -> Result<Self> {
        let mut faces: HashSet<Vec<u32>> = HashSet::new();
        faces.insert(Vec::new());
        let mut level: Vec<Vec<u32>> = vec![Vec::new()];
        while !level.is_empty() {
            // every set with a face one element smaller is queried, so an
            // accepted set hiding a rejected subset is caught
            let mut candidates: HashSet<Vec<u32>> = HashSet::new();
            for f in &level {
                for v in 0..num_vertices as u32 {
                    if let Err(pos) = f.binary_search(&v) {
                        let mut g = f.clone();
                        g.insert(pos, v);
                        candidates.insert(g);
                    }
                }
            }
            let mut candidates: Vec<Vec<u32>> = candidates.into_iter().collect();
            candidates.sort_unstable();
            let mut next = Vec::new();
            for g in candidates {
                if !is_face(&g) {
                    continue;
                }
                for skip in 0..g.len() {
                    let sub: Vec<u32> = g
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != skip)
                        .map(|(_, &x)| x)
                        .collect();
                    if !faces.contains(&sub) {
                        return Err(Error::InconsistentFaceOracle(format!(
                            "{g:?} is a face but its subset {sub:?} is not"
                        )));
                    }
                }
                next.push(g);
            }
            faces.extend(next.iter().cloned());
            level = next;
        }
        Ok(Self::from_face_set(num_vertices, faces))
    }

    fn from_face_set(num_vertices: usize, faces: HashSet<Vec<u32>>) -> Self {
        let top = faces.iter().map(Vec::len).max().unwrap_or(0);
        let mut by_size = vec![Vec::new(); top + 1];
        for f in &faces {
            by_size[f.len()].push(f.clone());
        }
        for level in &mut by_size {
            level.sort_unstable();
        }
        let mut neighbors = vec![Vec::new(); num_vertices];
        for edge in by_size.get(2).map_or(&[][..], Vec::as_slice) {
            neighbors[edge[0] as usize].push(edge[1]);
            neighbors[edge[1] as usize].push(edge[0]);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        SimplicialComplex {
            num_vertices,
            faces,
            by_size,
            neighbors,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Largest face size.
    pub fn max_face_size(&self) -> usize {
        self.by_size.len() - 1
    }

    /// `sorted` must be strictly increasing.
    pub fn is_face(&self, sorted: &[u32]) -> bool {
        self.faces.contains(sorted)
    }

    /// Vertices joined to `v` by an edge, increasing.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.neighbors[v as usize]
    }

    /// Vertices `u` outside the face `sorted` with `sorted + u` a face.
    pub fn link_vertices(&self, sorted: &[u32]) -> Vec<u32> {
        let Some(&first) = sorted.first() else {
            return (0..self.num_vertices as u32)
                .filter(|&v| self.faces.contains(&vec![v]))
                .collect();
        };
        self.neighbors(first)
            .iter()
            .copied()
            .filter(|u| {
                let Err(pos) = sorted.binary_search(u) else {
                    return false;
                };
                let mut g = sorted.to_vec();
                g.insert(pos, *u);
                self.faces.contains(&g)
            })
            .collect()
    }

    pub fn faces_of_size(&self, k: usize) -> &[Vec<u32>] {
        self.by_size.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Minimal non-faces, sorted: non-faces all of whose maximal proper
    /// subsets are faces.
    pub fn minimal_non_faces(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for level in &self.by_size {
            for f in level {
                let start = f.last().map_or(0, |&v| v + 1);
                for v in start..self.num_vertices as u32 {
                    let mut g = f.clone();
                    g.push(v);
                    if self.faces.contains(&g) {
                        continue;
                    }
                    let minimal = (0..g.len() - 1).all(|skip| {
                        let sub: Vec<u32> = g
                            .iter()
                            .enumerate()
                            .filter(|&(k, _)| k != skip)
                            .map(|(_, &x)| x)
                            .collect();
                        self.faces.contains(&sub)
                    });
                    if minimal {
                        out.push(g);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}
