//! Finite abstract simplicial complexes stored by their facets.
//!
//! Faces are implicit: a set is a face iff it is contained in some facet.
//! The empty complex `{∅}` is the complex with zero vertices and the single
//! facet `∅`; the empty set is a face of every complex.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// Interned vertex labels. Position order is the canonical vertex order used
/// by every deterministic algorithm in this crate.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexTable {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl VertexTable {
    pub fn new() -> Self {
        VertexTable::default()
    }

    pub fn from_labels<S: Into<String>, I: IntoIterator<Item = S>>(labels: I) -> Result<Self> {
        let mut t = VertexTable::new();
        for l in labels {
            let l = l.into();
            if t.index.contains_key(&l) {
                return Err(Error::MalformedInput(format!("duplicate vertex label `{l}`")));
            }
            t.intern(&l);
        }
        Ok(t)
    }

    /// Index of `label`, interning it at the end of the order if new.
    pub fn intern(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        i
    }

    pub fn get(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn label(&self, idx: usize) -> &str {
        &self.labels[idx]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Face counts by dimension, with the leading 1 counting the empty face:
/// `(f_{-1}, f_0, ..., f_{dim})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<u64>,
}

impl FVector {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// The convention without the empty face, `(f_0, ..., f_dim)`.
    pub fn without_empty(&self) -> &[u64] {
        &self.counts[1..]
    }

    /// Unreduced Euler characteristic `f_0 - f_1 + f_2 - ...`.
    pub fn euler_characteristic(&self) -> i64 {
        self.counts[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Arc<VertexTable>,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from facet candidates given as label lists.
    ///
    /// Dominated sets are removed, labels are interned in first-appearance
    /// order, and the resulting facets form an antichain in canonical order.
    /// An empty input, or input reducing to the single facet `∅`, yields the
    /// empty complex `{∅}`.
    pub fn from_facets<S: AsRef<str>>(facet_lists: &[Vec<S>]) -> Result<Self> {
        let mut table = VertexTable::new();
        let mut raw: Vec<Vec<usize>> = Vec::with_capacity(facet_lists.len());
        for list in facet_lists {
            let mut seen = HashSet::new();
            let mut idxs = Vec::with_capacity(list.len());
            for label in list {
                let label = label.as_ref();
                if !seen.insert(label.to_string()) {
                    return Err(Error::MalformedInput(format!(
                        "duplicate label `{label}` within a single facet"
                    )));
                }
                idxs.push(table.intern(label));
            }
            raw.push(idxs);
        }
        let width = table.len();
        let sets: Vec<VertexSet> = raw
            .into_iter()
            .map(|idxs| VertexSet::from_indices(width, idxs))
            .collect();
        Ok(SimplicialComplex::from_parts(Arc::new(table), sets))
    }

    /// Builds a complex from index sets over an existing vertex table,
    /// normalizing to an antichain. Every vertex of the table must end up in
    /// some facet, matching the no-ghost-vertices invariant; callers pass
    /// tables built from the facets themselves.
    pub(crate) fn from_parts(vertices: Arc<VertexTable>, sets: Vec<VertexSet>) -> Self {
        let facets = antichain(sets, vertices.len());
        SimplicialComplex { vertices, facets }
    }

    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: Arc::new(VertexTable::new()),
            facets: vec![VertexSet::empty(0)],
        }
    }

    pub fn vertices(&self) -> &Arc<VertexTable> {
        &self.vertices
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Number of vertices `m(K)`.
    pub fn m(&self) -> usize {
        self.vertices.len()
    }

    /// Maximal facet size `n(K)`.
    pub fn n(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    /// `dim K = n(K) - 1`; the empty complex has dimension -1.
    pub fn dim(&self) -> isize {
        self.n() as isize - 1
    }

    /// `codim K = m(K) - n(K)`.
    pub fn codim(&self) -> usize {
        self.m() - self.n()
    }

    /// Face test for an index set of the right width.
    pub fn contains_set(&self, sigma: &VertexSet) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(f))
    }

    /// Face test by labels. Unknown labels are an error, not `false`.
    pub fn contains<S: AsRef<str>>(&self, sigma: &[S]) -> Result<bool> {
        let mut set = VertexSet::empty(self.m());
        for label in sigma {
            let label = label.as_ref();
            match self.vertices.get(label) {
                Some(i) => set.insert(i),
                None => return Err(Error::UnknownVertex(label.to_string())),
            }
        }
        Ok(self.contains_set(&set))
    }

    /// All faces, the empty face included.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for facet in &self.facets {
            let idxs = facet.indices();
            for k in 0..=idxs.len() {
                for combo in idxs.iter().copied().combinations(k) {
                    seen.insert(VertexSet::from_indices(self.m(), combo));
                }
            }
        }
        let mut faces: Vec<VertexSet> = seen.into_iter().collect();
        faces.sort();
        faces
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; (self.dim() + 2) as usize];
        for face in self.faces() {
            counts[face.len()] += 1;
        }
        FVector { counts }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// The j-skeleton: maximal faces of dimension at most `j`.
    pub fn skeleton(&self, j: isize) -> SimplicialComplex {
        assert!(j >= -1, "skeleton dimension must be >= -1");
        if j >= self.dim() {
            return self.clone();
        }
        let k = (j + 1) as usize; // max face size
        let mut sets = Vec::new();
        for facet in &self.facets {
            if facet.len() <= k {
                sets.push(facet.clone());
            } else {
                for combo in facet.indices().into_iter().combinations(k) {
                    sets.push(VertexSet::from_indices(self.m(), combo));
                }
            }
        }
        SimplicialComplex::from_parts(self.vertices.clone(), sets)
    }

    /// Join of two complexes. Vertex sets are made disjoint: when the label
    /// sets collide, labels are prefixed `1.` and `2.`.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let collide = self
            .vertices
            .labels()
            .iter()
            .any(|l| other.vertices.get(l).is_some());
        let mut table = VertexTable::new();
        for l in self.vertices.labels() {
            if collide {
                table.intern(&format!("1.{l}"));
            } else {
                table.intern(l);
            }
        }
        for l in other.vertices.labels() {
            if collide {
                table.intern(&format!("2.{l}"));
            } else {
                table.intern(l);
            }
        }
        let width = table.len();
        let offset = self.m();
        let mut sets = Vec::new();
        for f1 in &self.facets {
            for f2 in &other.facets {
                sets.push(f1.widened(width).union(&f2.shifted(offset, width)));
            }
        }
        SimplicialComplex::from_parts(Arc::new(table), sets)
    }

    /// The inclusion-minimal non-faces, in canonical order. Each has size at
    /// most `n(K) + 1`. Enumeration goes by increasing cardinality `k`,
    /// testing only k-sets all of whose (k-1)-subsets are faces.
    pub fn missing_faces(&self) -> Vec<VertexSet> {
        let m = self.m();
        let mut missing = Vec::new();
        for k in 1..=self.n() + 1 {
            'cand: for combo in (0..m).combinations(k) {
                let set = VertexSet::from_indices(m, combo.iter().copied());
                if self.contains_set(&set) {
                    continue;
                }
                for &v in &combo {
                    if !self.contains_set(&set.without(v)) {
                        continue 'cand;
                    }
                }
                missing.push(set);
            }
        }
        missing.sort();
        missing
    }

    /// The s-flagification: the largest complex on the same vertex set with
    /// the same s-skeleton. Facets are the maximal vertex sets all of whose
    /// subsets of size <= s+1 are faces. Exponential in m; intended for
    /// m up to ~25.
    pub fn flagification(&self, s: usize) -> SimplicialComplex {
        assert!(s >= 1, "flagification requires s >= 1");
        let m = self.m();
        let forbidden: Vec<VertexSet> = self
            .missing_faces()
            .into_iter()
            .filter(|f| f.len() <= s + 1)
            .collect();
        if forbidden.is_empty() {
            let full = VertexSet::from_indices(m, 0..m);
            return SimplicialComplex::from_parts(self.vertices.clone(), vec![full]);
        }
        let mut out = Vec::new();
        let mut cur = VertexSet::empty(m);
        enumerate_maximal_avoiding(&mut cur, 0, m, &forbidden, &mut out);
        SimplicialComplex::from_parts(self.vertices.clone(), out)
    }

    /// True iff every missing face has size at most `s + 1`.
    pub fn is_s_flag(&self, s: usize) -> bool {
        assert!(s >= 1, "is_s_flag requires s >= 1");
        self.missing_faces().iter().all(|f| f.len() <= s + 1)
    }

    /// All facets have the same size.
    pub fn is_pure(&self) -> bool {
        self.facets.iter().map(|f| f.len()).all_equal()
    }

    /// Pure, and every (n-2)-face lies in exactly two facets.
    pub fn is_pseudomanifold(&self) -> bool {
        if !self.is_pure() {
            return false;
        }
        let n = self.n();
        if n == 0 {
            return false;
        }
        let mut ridge_count: HashMap<VertexSet, usize> = HashMap::new();
        for facet in &self.facets {
            for combo in facet.indices().into_iter().combinations(n - 1) {
                *ridge_count
                    .entry(VertexSet::from_indices(self.m(), combo))
                    .or_insert(0) += 1;
            }
        }
        ridge_count.values().all(|&c| c == 2)
    }

    /// Labels of a facet, in canonical order.
    pub fn facet_labels(&self, facet: &VertexSet) -> Vec<&str> {
        facet.iter().map(|i| self.vertices.label(i)).collect()
    }
}

/// Keeps only the inclusion-maximal sets, deduplicated, in canonical order.
fn antichain(mut sets: Vec<VertexSet>, width: usize) -> Vec<VertexSet> {
    if sets.is_empty() {
        sets.push(VertexSet::empty(width));
    }
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Lexicographic enumeration of all maximal subsets of `0..m` containing no
/// forbidden set. `cur` holds the vertices chosen so far; candidates are
/// tried in increasing index order starting at `start`.
fn enumerate_maximal_avoiding(
    cur: &mut VertexSet,
    start: usize,
    m: usize,
    forbidden: &[VertexSet],
    out: &mut Vec<VertexSet>,
) {
    let compatible = |set: &VertexSet| forbidden.iter().all(|f| !f.is_subset(set));
    let mut extended = false;
    for v in start..m {
        cur.insert(v);
        if compatible(cur) {
            extended = true;
            enumerate_maximal_avoiding(cur, v + 1, m, forbidden, out);
        }
        cur.remove(v);
    }
    if !extended {
        // no extension to the right; maximal iff no earlier vertex fits either
        let maximal = (0..start)
            .filter(|&v| !cur.contains(v))
            .all(|v| !compatible(&cur.with(v)));
        if maximal {
            out.push(cur.clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn complex(facets: &[&[&str]]) -> SimplicialComplex {
        let lists: Vec<Vec<&str>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_facets(&lists).unwrap()
    }

    fn c5() -> SimplicialComplex {
        complex(&[
            &["v1", "v2"],
            &["v2", "v3"],
            &["v3", "v4"],
            &["v4", "v5"],
            &["v5", "v1"],
        ])
    }

    #[test]
    fn from_facets_dedups_and_dominates() {
        let k = complex(&[&["a", "b"], &["b", "c"], &["a", "b"]]);
        assert_eq!(k.facets().len(), 2);
        let k = complex(&[&["a"], &["a", "b"]]);
        assert_eq!(k.facets().len(), 1);
        assert_eq!(k.n(), 2);
    }

    #[test]
    fn duplicate_label_in_facet_is_error() {
        let r = SimplicialComplex::from_facets(&[vec!["a", "a"]]);
        assert!(matches!(r, Err(Error::MalformedInput(_))));
    }

    #[test]
    fn empty_complex() {
        let k = SimplicialComplex::empty();
        assert_eq!(k.m(), 0);
        assert_eq!(k.n(), 0);
        assert_eq!(k.dim(), -1);
        assert!(k.contains_set(&VertexSet::empty(0)));
        assert_eq!(k.f_vector().counts(), &[1]);
    }

    #[test]
    fn contains_examples() {
        let k = c5();
        assert!(k.contains::<&str>(&[]).unwrap());
        assert!(!k.contains(&["v1", "v3"]).unwrap());
        assert!(k.contains(&["v1", "v2"]).unwrap());
        assert!(matches!(k.contains(&["zz"]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn full_simplex_f_vector() {
        let k = complex(&[&["a", "b", "c"]]);
        assert_eq!(k.f_vector().counts(), &[1, 3, 3, 1]);
        assert_eq!(k.codim(), 0);
    }

    #[test]
    fn skeleton_of_simplex_is_complete_graph() {
        let k = complex(&[&["a", "b", "c", "d"]]);
        let sk = k.skeleton(1);
        assert_eq!(sk.f_vector().counts(), &[1, 4, 6]);
        assert_eq!(sk.facets().len(), 6);
        // idempotence
        assert_eq!(sk.skeleton(1), sk);
    }

    #[test]
    fn join_with_point_is_cone() {
        let pt = complex(&[&["p"]]);
        let edge_cycle = complex(&[&["x", "y"], &["y", "z"], &["x", "z"]]);
        let disc = pt.join(&edge_cycle);
        assert_eq!(disc.m(), 4);
        assert_eq!(disc.n(), 3);
        assert_eq!(disc.facets().len(), 3);
    }

    #[test]
    fn join_with_empty_complex_is_identity_up_to_labels() {
        let k = c5();
        let j = k.join(&SimplicialComplex::empty());
        assert_eq!(j.f_vector(), k.f_vector());
    }

    #[test]
    fn missing_faces_of_cycle() {
        let k = c5();
        let missing = k.missing_faces();
        let labels: Vec<Vec<&str>> = missing.iter().map(|s| k.facet_labels(s)).collect();
        assert_eq!(
            labels,
            vec![
                vec!["v1", "v3"],
                vec!["v1", "v4"],
                vec!["v2", "v4"],
                vec!["v2", "v5"],
                vec!["v3", "v5"],
            ]
        );
    }

    #[test]
    fn missing_faces_of_simplex_and_boundary() {
        let full = complex(&[&["a", "b", "c"]]);
        assert!(full.missing_faces().is_empty());
        let boundary = complex(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        let missing = boundary.missing_faces();
        assert_eq!(missing.len(), 1);
        assert_eq!(missing[0].len(), 3);
    }

    #[test]
    fn missing_faces_regenerate_faces() {
        let k = c5();
        let missing = k.missing_faces();
        for subset in (0..k.m()).powerset() {
            let set = VertexSet::from_indices(k.m(), subset);
            let regen = !missing.iter().any(|mf| mf.is_subset(&set));
            assert_eq!(k.contains_set(&set), regen);
        }
    }

    #[test]
    fn c5_is_flag() {
        let k = c5();
        assert!(k.is_s_flag(1));
        assert_eq!(k.flagification(1), k);
    }

    #[test]
    fn skeleton_flagification_examples() {
        // sk_j D[V] is (j+1)-flag but not j-flag; its j-flagification is D[V]
        let full = complex(&[&["a", "b", "c", "d"]]);
        let sk1 = full.skeleton(1);
        assert!(sk1.is_s_flag(2));
        assert!(!sk1.is_s_flag(1));
        assert_eq!(sk1.flagification(1), full);
    }

    #[test]
    fn boundary_of_tetrahedron() {
        let k = complex(&[
            &["a", "b", "c"],
            &["a", "b", "d"],
            &["a", "c", "d"],
            &["b", "c", "d"],
        ]);
        assert_eq!(k.euler_characteristic(), 2);
        assert!(k.is_pure());
        assert!(k.is_pseudomanifold());
        // ∂D[N+] is N-flag but not (N-1)-flag (here N = 3)
        assert!(k.is_s_flag(3));
        assert!(!k.is_s_flag(2));
    }
}
