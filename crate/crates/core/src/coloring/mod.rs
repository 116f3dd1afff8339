//! Combinatorial (P,s)-colorings: validity checks, per-color statistics,
//! exact chromatic search and counting, (L,s)-colorings, and the property-B
//! bridge for uniform hypergraphs.
//!
//! Facet-level checking is sufficient everywhere: the constraint
//! `|sigma ∩ f^{-1}p| <= s` is monotone under inclusion, so it holds for all
//! faces iff it holds for all facets.

mod search;

pub use search::{
    chromatic_number, count_colorings, count_colorings_with, SearchConfig, VertexOrder,
};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::asc::{SimplicialComplex, VertexTable};
use crate::error::{Error, Result};
use crate::vset::VertexSet;
use std::sync::Arc;

/// A total map from vertex indices to 0-based color ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<u32>,
    palette_size: u32,
}

impl Coloring {
    pub fn new(assignment: Vec<u32>, palette_size: u32) -> Result<Self> {
        if let Some(&c) = assignment.iter().find(|&&c| c >= palette_size) {
            return Err(Error::Parameter(format!(
                "color id {c} out of range for palette of size {palette_size}"
            )));
        }
        Ok(Coloring {
            assignment,
            palette_size,
        })
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    pub fn palette_size(&self) -> u32 {
        self.palette_size
    }

    pub fn color(&self, vertex: usize) -> u32 {
        self.assignment[vertex]
    }

    /// Preimage of color `p` as a vertex set of width `len`.
    pub fn fiber(&self, p: u32) -> VertexSet {
        VertexSet::from_indices(
            self.assignment.len(),
            self.assignment
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c == p)
                .map(|(i, _)| i),
        )
    }

    pub fn fibers(&self) -> Vec<VertexSet> {
        (0..self.palette_size).map(|p| self.fiber(p)).collect()
    }

    pub fn max_fiber(&self) -> usize {
        (0..self.palette_size)
            .map(|p| self.assignment.iter().filter(|&&c| c == p).count())
            .max()
            .unwrap_or(0)
    }
}

/// Per-color monochrome maxima `d_f(p) = max |sigma ∩ f^{-1}p|` over facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorStats {
    pub d_f: Vec<u32>,
}

impl ColorStats {
    pub fn sum(&self) -> u32 {
        self.d_f.iter().sum()
    }
}

fn check_assignment(k: &SimplicialComplex, f: &Coloring) -> Result<()> {
    if f.assignment.len() != k.m() {
        return Err(Error::Parameter(format!(
            "coloring assigns {} vertices but the complex has {}",
            f.assignment.len(),
            k.m()
        )));
    }
    Ok(())
}

/// True iff no facet carries more than `s` vertices of one color.
pub fn is_coloring(k: &SimplicialComplex, f: &Coloring, s: usize) -> Result<bool> {
    check_assignment(k, f)?;
    let stats = color_stats(k, f)?;
    Ok(stats.d_f.iter().all(|&d| d as usize <= s))
}

pub fn color_stats(k: &SimplicialComplex, f: &Coloring) -> Result<ColorStats> {
    check_assignment(k, f)?;
    let mut d_f = vec![0u32; f.palette_size as usize];
    let mut counts = vec![0u32; f.palette_size as usize];
    for facet in k.facets() {
        counts.iter_mut().for_each(|c| *c = 0);
        for v in facet.iter() {
            counts[f.assignment[v] as usize] += 1;
        }
        for (d, &c) in d_f.iter_mut().zip(counts.iter()) {
            *d = (*d).max(c);
        }
    }
    Ok(ColorStats { d_f })
}

/// An (L,s)-coloring is a (P,s)-coloring that is simplicial into `L`: the
/// image of every facet must be a face of `L`.
pub fn is_l_coloring(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    f: &Coloring,
    s: usize,
) -> Result<bool> {
    check_assignment(k, f)?;
    if f.palette_size as usize != l.m() {
        return Err(Error::ContextMismatch(format!(
            "palette size {} does not match the vertex count {} of the target complex",
            f.palette_size,
            l.m()
        )));
    }
    if !is_coloring(k, f, s)? {
        return Ok(false);
    }
    for facet in k.facets() {
        let image = VertexSet::from_indices(l.m(), facet.iter().map(|v| f.assignment[v] as usize));
        if !l.contains_set(&image) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An (s+1)-uniform hypergraph; its edges become the facets of a pure
/// complex for the property-B test.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    vertices: Arc<VertexTable>,
    edges: Vec<VertexSet>,
    edge_size: usize,
}

impl Hypergraph {
    pub fn from_edges<S: AsRef<str>>(edge_lists: &[Vec<S>]) -> Result<Self> {
        if edge_lists.is_empty() {
            return Err(Error::MalformedInput("hypergraph with no edges".into()));
        }
        let edge_size = edge_lists[0].len();
        if edge_lists.iter().any(|e| e.len() != edge_size) {
            return Err(Error::MalformedInput(
                "hypergraph edges are not uniform".into(),
            ));
        }
        if edge_size < 2 {
            return Err(Error::MalformedInput(
                "hypergraph edges must have at least 2 vertices".into(),
            ));
        }
        let complex = SimplicialComplex::from_facets(edge_lists)?;
        if complex.facets().iter().any(|f| f.len() != edge_size) {
            return Err(Error::MalformedInput("duplicate hypergraph edges".into()));
        }
        Ok(Hypergraph {
            vertices: complex.vertices().clone(),
            edges: complex.facets().to_vec(),
            edge_size,
        })
    }

    pub fn edge_size(&self) -> usize {
        self.edge_size
    }

    /// The pure complex `K(H)` with the hyperedges as facets.
    pub fn to_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_parts(self.vertices.clone(), self.edges.clone())
    }

    /// Property B: a red-blue coloring with no monochrome hyperedge, which
    /// is exactly (2,s)-colorability of `K(H)` for s = edge size - 1.
    pub fn has_property_b(&self) -> Result<bool> {
        let k = self.to_complex();
        let s = self.edge_size - 1;
        match chromatic_number(&k, s, &SearchConfig::default()) {
            Ok((r, _)) => Ok(r <= 2),
            Err(e) => Err(e),
        }
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut out = BigUint::one();
    for i in 0..k {
        out = out * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    out
}

fn multinomial(total: u64, parts: &[u64]) -> BigUint {
    debug_assert_eq!(parts.iter().sum::<u64>(), total);
    let mut out = BigUint::one();
    let mut rest = total;
    for &p in parts {
        out *= binomial(rest, p);
        rest -= p;
    }
    out
}

/// The number of s-to-1 maps of an m-set onto an r-set: the sum of
/// `multinomial(m; m_1..m_r) * multinomial(r; r_1..r_s)` over weakly
/// decreasing fiber-size vectors with `s >= m_1 >= ... >= m_r >= 1` summing
/// to `m`, where `r_j` counts the fibers of size `j`. Returns 0 when
/// `m > r*s` or `m < r`.
pub fn count_s_to_1_surjections(m: usize, r: usize, s: usize) -> BigUint {
    if m > r * s || m < r {
        return BigUint::zero();
    }
    let mut total = BigUint::zero();
    let mut parts = Vec::with_capacity(r);
    fill_parts(m, r, s, &mut parts, &mut total);
    total
}

fn fill_parts(remaining: usize, slots: usize, max_part: usize, parts: &mut Vec<u64>, total: &mut BigUint) {
    if slots == 0 {
        if remaining == 0 {
            let m: u64 = parts.iter().sum();
            let s_max = parts.iter().copied().max().unwrap_or(0) as usize;
            let mut fiber_counts = vec![0u64; s_max];
            for &p in parts.iter() {
                fiber_counts[p as usize - 1] += 1;
            }
            let r = parts.len() as u64;
            *total += multinomial(m, parts) * multinomial(r, &fiber_counts);
        }
        return;
    }
    // parts are weakly decreasing and at least 1
    let hi = max_part.min(remaining);
    for p in (1..=hi).rev() {
        if remaining - p > (slots - 1) * p {
            break; // later parts are <= p, cannot absorb the rest
        }
        parts.push(p as u64);
        fill_parts(remaining - p, slots - 1, p, parts, total);
        parts.pop();
    }
}

/// Number of surjective (P,s)-colorings from the count of all colorings,
/// by inclusion-exclusion over omitted colors.
pub(crate) fn surjective_from_all(counts_by_palette: &[BigUint], r: usize) -> BigUint {
    // counts_by_palette[t] = number of (t,s)-colorings into a labeled t-palette
    let mut total = BigInt::zero();
    for t in 0..=r {
        let term = BigInt::from_biguint(
            if t % 2 == 0 { Sign::Plus } else { Sign::Minus },
            binomial(r as u64, t as u64) * counts_by_palette[r - t].clone(),
        );
        total += term;
    }
    total.to_biguint().unwrap_or_else(BigUint::zero)
}
