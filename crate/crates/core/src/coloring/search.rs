//! Exact chromatic search and coloring counting.
//!
//! Both are backtracking over a static vertex order with per-facet per-color
//! counters pruned against `s`. The chromatic search breaks color symmetry
//! by first-use numbering (a vertex may use at most one color beyond the
//! current maximum) and returns the lexicographically first witness under
//! the search order.
//!
//! Parallel runs split the tree at a fixed prefix depth and recombine in
//! prefix order, so the reported result is identical for any worker count.
//! The sequential path is always available; the `parallel` feature merely
//! adds the fan-out.

use std::sync::atomic::{AtomicI64, Ordering as AtomicOrdering};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::asc::SimplicialComplex;
use crate::coloring::{surjective_from_all, Coloring};
use crate::error::{Error, Result};

/// Static vertex order used by the search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum VertexOrder {
    /// Descending facet-membership count, ties by canonical index.
    #[default]
    ByFacetDegree,
    /// The canonical (insertion) vertex order as-is.
    Canonical,
}

#[derive(Clone, Debug, Default)]
pub struct SearchConfig {
    pub vertex_order: VertexOrder,
    /// Maximum number of search nodes before giving up with bounds.
    pub node_budget: Option<u64>,
    /// Worker count: `None` uses the global pool (all cores), `Some(1)`
    /// forces the sequential path. Results are identical either way.
    pub workers: Option<usize>,
}

/// Immutable per-search data.
struct Problem<'a> {
    k: &'a SimplicialComplex,
    s: u32,
    r: u32,
    /// Search order: position -> vertex index.
    order: Vec<usize>,
    /// vertex index -> ids of facets containing it.
    facets_of: Vec<Vec<usize>>,
}

impl<'a> Problem<'a> {
    fn new(k: &'a SimplicialComplex, s: usize, r: u32, order_policy: VertexOrder) -> Self {
        let m = k.m();
        let mut facets_of = vec![Vec::new(); m];
        for (fi, facet) in k.facets().iter().enumerate() {
            for v in facet.iter() {
                facets_of[v].push(fi);
            }
        }
        let mut order: Vec<usize> = (0..m).collect();
        if order_policy == VertexOrder::ByFacetDegree {
            order.sort_by_key(|&v| (std::cmp::Reverse(facets_of[v].len()), v));
        }
        Problem {
            k,
            s: s as u32,
            r,
            order,
            facets_of,
        }
    }

    fn m(&self) -> usize {
        self.k.m()
    }

    /// Per-facet color counters, flattened as `facet_id * r + color`.
    fn fresh_counts(&self) -> Vec<u32> {
        vec![0; self.k.facets().len() * self.r as usize]
    }

    fn can_place(&self, counts: &[u32], vertex: usize, color: u32) -> bool {
        self.facets_of[vertex]
            .iter()
            .all(|&fi| counts[fi * self.r as usize + color as usize] < self.s)
    }

    fn place(&self, counts: &mut [u32], vertex: usize, color: u32, delta: i32) {
        for &fi in &self.facets_of[vertex] {
            let cell = &mut counts[fi * self.r as usize + color as usize];
            *cell = cell.wrapping_add(delta as u32);
        }
    }
}

/// A partial assignment over the first `assigned.len()` positions of the
/// search order, together with the highest color used so far.
#[derive(Clone, Debug)]
struct Prefix {
    assigned: Vec<u32>,
    max_used: i64,
}

impl Prefix {
    fn root() -> Self {
        Prefix {
            assigned: Vec::new(),
            max_used: -1,
        }
    }
}

/// Shared node budget; `None` means unbounded.
struct Budget<'a>(Option<&'a AtomicI64>);

impl Budget<'_> {
    fn spend(&self) -> Result<()> {
        if let Some(counter) = self.0 {
            if counter.fetch_sub(1, AtomicOrdering::Relaxed) <= 0 {
                return Err(Error::BudgetExhausted { lower: 0, upper: 0 });
            }
        }
        Ok(())
    }
}

fn fanout_target(workers: Option<usize>) -> usize {
    #[cfg(feature = "parallel")]
    {
        let w = workers.unwrap_or_else(rayon::current_num_threads);
        if w <= 1 {
            1
        } else {
            (w * 8).max(64)
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = workers;
        1
    }
}

/// Expands prefixes in lexicographic order up to roughly `target` branches.
/// `symmetric` enables first-use color numbering.
fn expand_prefixes(p: &Problem, target: usize, symmetric: bool) -> Vec<Prefix> {
    let mut frontier = vec![Prefix::root()];
    let mut counts = p.fresh_counts();
    while frontier.len() < target {
        let depth = frontier[0].assigned.len();
        if depth >= p.m() {
            break;
        }
        let vertex = p.order[depth];
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for prefix in &frontier {
            counts.iter_mut().for_each(|c| *c = 0);
            for (pos, &c) in prefix.assigned.iter().enumerate() {
                p.place(&mut counts, p.order[pos], c, 1);
            }
            let limit = if symmetric {
                ((prefix.max_used + 2) as u32).min(p.r)
            } else {
                p.r
            };
            for color in 0..limit {
                if p.can_place(&counts, vertex, color) {
                    let mut assigned = prefix.assigned.clone();
                    assigned.push(color);
                    next.push(Prefix {
                        assigned,
                        max_used: prefix.max_used.max(color as i64),
                    });
                }
            }
        }
        if next.is_empty() {
            return Vec::new();
        }
        frontier = next;
    }
    frontier
}

/// Runs `f` over the prefixes, returning the first `Some`/`Err` in prefix
/// order. With the `parallel` feature and more than one worker this fans
/// out; later branches can only be discarded, never replace earlier ones.
fn first_hit<T, F>(prefixes: &[Prefix], workers: Option<usize>, f: F) -> Result<Option<T>>
where
    T: Send,
    F: Fn(&Prefix) -> Result<Option<T>> + Sync,
{
    let pick = |r: Result<Option<T>>| -> Option<Result<T>> {
        match r {
            Ok(None) => None,
            Ok(Some(t)) => Some(Ok(t)),
            Err(e) => Some(Err(e)),
        }
    };
    #[cfg(feature = "parallel")]
    {
        if workers != Some(1) {
            use rayon::prelude::*;
            let run = || -> Option<Result<T>> {
                prefixes.par_iter().find_map_first(|pre| pick(f(pre)))
            };
            let found = match workers {
                None => run(),
                Some(w) => rayon::ThreadPoolBuilder::new()
                    .num_threads(w)
                    .build()
                    .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
                    .install(run),
            };
            return found.transpose();
        }
    }
    let _ = workers;
    for pre in prefixes {
        if let Some(r) = pick(f(pre)) {
            return r.map(Some);
        }
    }
    Ok(None)
}

/// Sums `f` over the prefixes. Addition is commutative, so any schedule
/// yields the same total.
fn sum_over<F>(prefixes: &[Prefix], workers: Option<usize>, f: F) -> Result<BigUint>
where
    F: Fn(&Prefix) -> Result<BigUint> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if workers != Some(1) {
            use rayon::prelude::*;
            let run = || -> Result<BigUint> {
                prefixes
                    .par_iter()
                    .map(&f)
                    .try_reduce(BigUint::zero, |a, b| Ok(a + b))
            };
            return match workers {
                None => run(),
                Some(w) => rayon::ThreadPoolBuilder::new()
                    .num_threads(w)
                    .build()
                    .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
                    .install(run),
            };
        }
    }
    let _ = workers;
    let mut total = BigUint::zero();
    for pre in prefixes {
        total += f(pre)?;
    }
    Ok(total)
}

/// Depth-first search for the lexicographically first completion of a
/// prefix under first-use numbering. Returns the full assignment by search
/// position.
fn complete_canonical(
    p: &Problem,
    prefix: &Prefix,
    budget: &Budget,
) -> Result<Option<Vec<u32>>> {
    let mut counts = p.fresh_counts();
    for (pos, &c) in prefix.assigned.iter().enumerate() {
        p.place(&mut counts, p.order[pos], c, 1);
    }
    let mut assigned = prefix.assigned.clone();
    if dfs_canonical(p, &mut counts, &mut assigned, prefix.max_used, budget)? {
        Ok(Some(assigned))
    } else {
        Ok(None)
    }
}

fn dfs_canonical(
    p: &Problem,
    counts: &mut [u32],
    assigned: &mut Vec<u32>,
    max_used: i64,
    budget: &Budget,
) -> Result<bool> {
    let pos = assigned.len();
    if pos == p.m() {
        return Ok(true);
    }
    budget.spend()?;
    let vertex = p.order[pos];
    let limit = ((max_used + 2) as u32).min(p.r);
    for color in 0..limit {
        if p.can_place(counts, vertex, color) {
            p.place(counts, vertex, color, 1);
            assigned.push(color);
            if dfs_canonical(p, counts, assigned, max_used.max(color as i64), budget)? {
                return Ok(true);
            }
            assigned.pop();
            p.place(counts, vertex, color, -1);
        }
    }
    Ok(false)
}

/// Counts the completions of a prefix over the full labeled palette.
fn count_completions(p: &Problem, prefix: &Prefix, budget: &Budget) -> Result<BigUint> {
    let mut counts = p.fresh_counts();
    for (pos, &c) in prefix.assigned.iter().enumerate() {
        p.place(&mut counts, p.order[pos], c, 1);
    }
    let mut total = BigUint::zero();
    dfs_count(p, &mut counts, prefix.assigned.len(), budget, &mut total)?;
    Ok(total)
}

fn dfs_count(
    p: &Problem,
    counts: &mut [u32],
    pos: usize,
    budget: &Budget,
    total: &mut BigUint,
) -> Result<()> {
    if pos == p.m() {
        *total += BigUint::one();
        return Ok(());
    }
    budget.spend()?;
    let vertex = p.order[pos];
    for color in 0..p.r {
        if p.can_place(counts, vertex, color) {
            p.place(counts, vertex, color, 1);
            dfs_count(p, counts, pos + 1, budget, total)?;
            p.place(counts, vertex, color, -1);
        }
    }
    Ok(())
}

/// The least `r` such that an (r,s)-coloring of `K` exists, with the
/// canonical witness: the lexicographically first optimal assignment under
/// the static vertex order with first-use color numbering.
///
/// Iterative deepening on `r` from `ceil(n/s)` to `ceil(m/s)`; the upper
/// bound always admits a coloring, so the search terminates within the
/// bracket unless the node budget runs out.
pub fn chromatic_number(
    k: &SimplicialComplex,
    s: usize,
    cfg: &SearchConfig,
) -> Result<(u32, Coloring)> {
    if s == 0 {
        return Err(Error::Parameter("s must be at least 1".into()));
    }
    let m = k.m();
    if m == 0 {
        return Ok((0, Coloring::new(Vec::new(), 0)?));
    }
    let lower = k.n().div_ceil(s) as u32;
    let upper = m.div_ceil(s) as u32;
    let counter = cfg.node_budget.map(|b| AtomicI64::new(b as i64));

    for r in lower..=upper {
        let p = Problem::new(k, s, r, cfg.vertex_order);
        let prefixes = expand_prefixes(&p, fanout_target(cfg.workers), true);
        let budget = Budget(counter.as_ref());
        let hit = first_hit(&prefixes, cfg.workers, |pre| {
            complete_canonical(&p, pre, &budget)
        });
        match hit {
            Ok(Some(by_pos)) => {
                let mut assignment = vec![0u32; m];
                for (pos, &c) in by_pos.iter().enumerate() {
                    assignment[p.order[pos]] = c;
                }
                let witness = Coloring::new(assignment, r)?;
                return Ok((r, witness));
            }
            Ok(None) => continue,
            Err(Error::BudgetExhausted { .. }) => {
                return Err(Error::BudgetExhausted { lower: r, upper });
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::Internal(
        "spread coloring at the upper bound was not found".into(),
    ))
}

/// Default node budget for counting: roughly `r^m <= 1e9` worth of work.
const COUNT_NODE_BUDGET: u64 = 1_000_000_000;

/// Exact number of (P,s)-colorings of `K` into a labeled palette of `r`
/// colors; with `surjective`, only maps using every color.
pub fn count_colorings(
    k: &SimplicialComplex,
    r: usize,
    s: usize,
    surjective: bool,
) -> Result<BigUint> {
    count_colorings_with(k, r, s, surjective, &SearchConfig::default())
}

pub fn count_colorings_with(
    k: &SimplicialComplex,
    r: usize,
    s: usize,
    surjective: bool,
    cfg: &SearchConfig,
) -> Result<BigUint> {
    if r == 0 || s == 0 {
        return Err(Error::Parameter("r and s must be at least 1".into()));
    }
    if surjective {
        // inclusion-exclusion over omitted colors
        let mut by_palette = Vec::with_capacity(r + 1);
        by_palette.push(if k.m() == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        });
        for t in 1..=r {
            by_palette.push(count_all(k, t, s, cfg)?);
        }
        return Ok(surjective_from_all(&by_palette, r));
    }
    count_all(k, r, s, cfg)
}

fn count_all(k: &SimplicialComplex, r: usize, s: usize, cfg: &SearchConfig) -> Result<BigUint> {
    if k.m() == 0 {
        return Ok(BigUint::one());
    }
    let p = Problem::new(k, s, r as u32, cfg.vertex_order);
    let prefixes = expand_prefixes(&p, fanout_target(cfg.workers), false);
    let counter = AtomicI64::new(cfg.node_budget.unwrap_or(COUNT_NODE_BUDGET) as i64);
    let budget = Budget(Some(&counter));
    match sum_over(&prefixes, cfg.workers, |pre| count_completions(&p, pre, &budget)) {
        Err(Error::BudgetExhausted { .. }) => Err(Error::ResourceLimit(format!(
            "counting budget exhausted for r={r}, s={s} on {} vertices",
            k.m()
        ))),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_coloring;

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
    fn c5_chromatic_number() {
        let (r, witness) = chromatic_number(&c5(), 1, &SearchConfig::default()).unwrap();
        assert_eq!(r, 3);
        assert!(is_coloring(&c5(), &witness, 1).unwrap());
    }

    #[test]
    fn full_simplex_chromatic_numbers() {
        for m in 1..=8usize {
            let labels: Vec<String> = (0..m).map(|i| format!("v{i}")).collect();
            let k = SimplicialComplex::from_facets(&[labels]).unwrap();
            for s in 1..=3usize {
                let (r, w) = chromatic_number(&k, s, &SearchConfig::default()).unwrap();
                assert_eq!(r as usize, m.div_ceil(s), "m={m} s={s}");
                assert!(is_coloring(&k, &w, s).unwrap());
            }
        }
    }

    #[test]
    fn c5_count_three_colorings() {
        assert_eq!(
            count_colorings(&c5(), 3, 1, false).unwrap(),
            BigUint::from(30u32)
        );
    }

    #[test]
    fn count_surjective_vs_all() {
        // a single edge: all 2-colorings proper = 2 (both surjective)
        let k = complex(&[&["a", "b"]]);
        assert_eq!(count_colorings(&k, 2, 1, false).unwrap(), BigUint::from(2u32));
        assert_eq!(count_colorings(&k, 2, 1, true).unwrap(), BigUint::from(2u32));
        // with 3 colors: 3*2 = 6 proper maps, none surjective
        assert_eq!(count_colorings(&k, 3, 1, false).unwrap(), BigUint::from(6u32));
        assert_eq!(count_colorings(&k, 3, 1, true).unwrap(), BigUint::zero());
    }

    #[test]
    fn witness_is_deterministic_across_worker_counts() {
        let k = c5();
        for workers in [Some(1), Some(2), Some(4), None] {
            let cfg = SearchConfig {
                workers,
                ..SearchConfig::default()
            };
            let (r, w) = chromatic_number(&k, 1, &cfg).unwrap();
            let (r1, w1) = chromatic_number(&k, 1, &SearchConfig::default()).unwrap();
            assert_eq!((r, w.assignment().to_vec()), (r1, w1.assignment().to_vec()));
        }
    }

    #[test]
    fn budget_exhaustion_reports_bounds() {
        let k = c5();
        let cfg = SearchConfig {
            node_budget: Some(1),
            ..SearchConfig::default()
        };
        match chromatic_number(&k, 1, &cfg) {
            Err(Error::BudgetExhausted { lower, upper }) => {
                assert!(lower >= 1 && upper == 5);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn counts_match_brute_force_on_small_complexes() {
        let k = complex(&[&["a", "b", "c"], &["b", "c", "d"]]);
        for r in 1..=3usize {
            for s in 1..=3usize {
                let total = (r as u64).pow(4);
                let mut brute = 0u64;
                for code in 0..total {
                    let mut c = code;
                    let assign: Vec<u32> = (0..4)
                        .map(|_| {
                            let v = (c % r as u64) as u32;
                            c /= r as u64;
                            v
                        })
                        .collect();
                    let f = Coloring::new(assign, r as u32).unwrap();
                    if is_coloring(&k, &f, s).unwrap() {
                        brute += 1;
                    }
                }
                assert_eq!(
                    count_colorings(&k, r, s, false).unwrap(),
                    BigUint::from(brute),
                    "r={r} s={s}"
                );
            }
        }
    }
}
