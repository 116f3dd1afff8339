//! Exact sparse multivariate polynomials over the integers, with the vertex
//! set of a complex as variables.
//!
//! Coefficients are fixed-width `i64` with checked arithmetic; any overflow
//! is reported as an error rather than wrapping. Degrees here are
//! combinatorial (one per variable); the grading that puts vertices in
//! degree 2 is recovered by doubling.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use itertools::Itertools;

use crate::asc::VertexTable;
use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// Guard against runaway expansions; `mul` and the symmetric-polynomial
/// constructors fail with a resource-limit error past this many terms.
pub const DEFAULT_TERM_LIMIT: usize = 1 << 24;

/// A monomial as a sparse exponent map, sorted by variable index with no
/// zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: usize) -> Self {
        Monomial {
            exps: vec![(v as u32, 1)],
        }
    }

    pub fn from_vars<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        let mut exps: Vec<(u32, u32)> = vars.into_iter().map(|v| (v as u32, 1)).collect();
        exps.sort_unstable();
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Total combinatorial degree: sum of exponents.
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn support(&self, width: usize) -> VertexSet {
        VertexSet::from_indices(width, self.exps.iter().map(|&(v, _)| v as usize))
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let mut a = self.exps.iter().peekable();
        let mut b = other.exps.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => exps.push(*a.next().unwrap()),
                (None, Some(_)) => exps.push(*b.next().unwrap()),
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        exps.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        exps.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        let e = ea.checked_add(eb).ok_or(Error::Overflow)?;
                        exps.push((va, e));
                        a.next();
                        b.next();
                    }
                },
            }
        }
        Ok(Monomial { exps })
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: by total degree, then by the sparse exponent
    /// vector. Used for canonical printing and term storage.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over the integer coefficients, tied to the vertex table
/// naming its variables.
#[derive(Clone, Debug)]
pub struct Polynomial {
    vars: Arc<VertexTable>,
    terms: BTreeMap<Monomial, i64>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_vars(&self.vars, &other.vars)
    }
}
impl Eq for Polynomial {}

fn same_vars(a: &Arc<VertexTable>, b: &Arc<VertexTable>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Polynomial {
    pub fn zero(vars: Arc<VertexTable>) -> Self {
        Polynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<VertexTable>, c: i64) -> Self {
        let mut p = Polynomial::zero(vars);
        if c != 0 {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one(vars: Arc<VertexTable>) -> Self {
        Polynomial::constant(vars, 1)
    }

    pub fn variable(vars: Arc<VertexTable>, idx: usize) -> Self {
        assert!(idx < vars.len());
        let mut p = Polynomial::zero(vars);
        p.terms.insert(Monomial::var(idx), 1);
        p
    }

    pub fn monomial(vars: Arc<VertexTable>, m: Monomial, c: i64) -> Self {
        let mut p = Polynomial::zero(vars);
        if c != 0 {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VertexTable> {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Largest combinatorial degree of a term; zero polynomial gives 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    fn check_context(&self, other: &Polynomial) -> Result<()> {
        if same_vars(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(Error::ContextMismatch(
                "polynomials over different vertex tables".into(),
            ))
        }
    }

    fn insert_term(&mut self, m: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().checked_add(c).ok_or(Error::Overflow)?;
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.insert_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -*c;
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.mul_limited(other, DEFAULT_TERM_LIMIT)
    }

    pub fn mul_limited(&self, other: &Polynomial, term_limit: usize) -> Result<Polynomial> {
        self.check_context(other)?;
        let mut out = Polynomial::zero(self.vars.clone());
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let m = ma.mul(mb)?;
                let c = ca.checked_mul(cb).ok_or(Error::Overflow)?;
                out.insert_term(m, c)?;
                if out.terms.len() > term_limit {
                    return Err(Error::ResourceLimit(format!(
                        "polynomial product exceeds {term_limit} terms"
                    )));
                }
            }
        }
        Ok(out)
    }

    /// Canonical text rendering: terms in the canonical monomial order,
    /// e.g. `1 + v1 + v2 + v1*v2`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else if c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if m.is_one() {
                let _ = write!(out, "{mag}");
            } else {
                if mag != 1 {
                    let _ = write!(out, "{mag}*");
                }
                for (j, &(v, e)) in m.exponents().iter().enumerate() {
                    if j > 0 {
                        out.push('*');
                    }
                    out.push_str(self.vars.label(v as usize));
                    if e > 1 {
                        let _ = write!(out, "^{e}");
                    }
                }
            }
        }
        out
    }
}

/// The i-th elementary symmetric polynomial of the variables in `set`;
/// zero when `i > |set|`.
pub fn elementary_symmetric(
    vars: &Arc<VertexTable>,
    set: &VertexSet,
    i: usize,
) -> Result<Polynomial> {
    let idxs = set.indices();
    let mut p = Polynomial::zero(vars.clone());
    if i > idxs.len() {
        return Ok(p);
    }
    for combo in idxs.into_iter().combinations(i) {
        p.insert_term(Monomial::from_vars(combo), 1)?;
        if p.terms.len() > DEFAULT_TERM_LIMIT {
            return Err(Error::ResourceLimit(
                "elementary symmetric polynomial exceeds term limit".into(),
            ));
        }
    }
    Ok(p)
}

/// Truncated total Chern class `c_{<=s}(U) = e_0 + e_1 + ... + e_s` of the
/// variables in `set`. At `s = |U|` this is the full product of `(1 + u)`.
pub fn c_leq(vars: &Arc<VertexTable>, set: &VertexSet, s: usize) -> Result<Polynomial> {
    let mut p = Polynomial::zero(vars.clone());
    for i in 0..=s.min(set.len()) {
        p = p.add(&elementary_symmetric(vars, set, i)?)?;
    }
    Ok(p)
}

/// Total Chern class `c(U) = prod_{u in U}(1 + u)`, expanded: one squarefree
/// term per subset of `U`, all coefficients 1.
pub fn total_chern_of(vars: &Arc<VertexTable>, set: &VertexSet) -> Result<Polynomial> {
    if set.len() >= usize::BITS as usize - 1 || (1usize << set.len()) > DEFAULT_TERM_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "total Chern class over {} variables exceeds term limit",
            set.len()
        )));
    }
    let mut p = Polynomial::zero(vars.clone());
    for combo in set.indices().into_iter().powerset() {
        p.insert_term(Monomial::from_vars(combo), 1)?;
    }
    Ok(p)
}

/// Total Chern class of the full vertex set.
pub fn total_chern(vars: &Arc<VertexTable>) -> Result<Polynomial> {
    let all = VertexSet::from_indices(vars.len(), 0..vars.len());
    total_chern_of(vars, &all)
}

/// Whether `c(V) = prod_p c_{<=s}(fiber_p)` holds in the free polynomial
/// ring. `fibers` must partition the variable set; the identity holds
/// exactly when every fiber has at most `s` elements.
pub fn s_to_1_identity_holds(
    vars: &Arc<VertexTable>,
    fibers: &[VertexSet],
    s: usize,
) -> Result<bool> {
    let lhs = total_chern(vars)?;
    let mut rhs = Polynomial::one(vars.clone());
    for fiber in fibers {
        rhs = rhs.mul(&c_leq(vars, fiber, s)?)?;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: usize) -> Arc<VertexTable> {
        Arc::new(VertexTable::from_labels((1..=n).map(|i| format!("v{i}"))).unwrap())
    }

    #[test]
    fn ring_basics() {
        let t = table(2);
        let one = Polynomial::one(t.clone());
        let v = Polynomial::variable(t.clone(), 0);
        // (1+v)(1-v) = 1 - v^2
        let p = one.add(&v).unwrap();
        let q = one.sub(&v).unwrap();
        let prod = p.mul(&q).unwrap();
        let v2 = Polynomial::monomial(t.clone(), Monomial::var(0).mul(&Monomial::var(0)).unwrap(), -1);
        assert_eq!(prod, one.add(&v2).unwrap());
        // p + (-p) = 0
        assert!(p.add(&p.neg()).unwrap().is_zero());
        // (1+v1)(1+v2) = 1 + v1 + v2 + v1*v2
        let w = Polynomial::variable(t.clone(), 1);
        let r = one.add(&v).unwrap().mul(&one.add(&w).unwrap()).unwrap();
        assert_eq!(r.num_terms(), 4);
        assert_eq!(r.render(), "1 + v1 + v2 + v1*v2");
    }

    #[test]
    fn context_mismatch_detected() {
        let a = Polynomial::one(table(2));
        let b = Polynomial::one(Arc::new(
            VertexTable::from_labels(["x", "y"]).unwrap(),
        ));
        assert!(matches!(a.add(&b), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn c_leq_examples() {
        let t = table(3);
        let empty = VertexSet::empty(3);
        assert_eq!(c_leq(&t, &empty, 0).unwrap(), Polynomial::one(t.clone()));

        let ab = VertexSet::from_indices(3, [0, 1]);
        assert_eq!(c_leq(&t, &ab, 1).unwrap().render(), "1 + v1 + v2");

        // top truncation equals the full product
        let abc = VertexSet::from_indices(3, [0, 1, 2]);
        assert_eq!(c_leq(&t, &abc, 3).unwrap(), total_chern(&t).unwrap());
    }

    #[test]
    fn total_chern_term_count() {
        let t = table(6);
        let c = total_chern(&t).unwrap();
        assert_eq!(c.num_terms(), 64);
        let top = Monomial::from_vars(0..6);
        assert_eq!(c.coefficient(&top), 1);
    }

    #[test]
    fn s_to_1_identity_examples() {
        // injective map, s = 1
        let t = table(3);
        let fibers: Vec<VertexSet> = (0..3).map(|i| VertexSet::from_indices(3, [i])).collect();
        assert!(s_to_1_identity_holds(&t, &fibers, 1).unwrap());

        // constant map on 3 vertices, s = 2
        let all = vec![VertexSet::from_indices(3, 0..3)];
        assert!(!s_to_1_identity_holds(&t, &all, 2).unwrap());

        // fibers (2,2,2) on 6 vertices, s = 2
        let t6 = table(6);
        let fibers: Vec<VertexSet> = (0..3)
            .map(|i| VertexSet::from_indices(6, [2 * i, 2 * i + 1]))
            .collect();
        assert!(s_to_1_identity_holds(&t6, &fibers, 2).unwrap());
    }

    #[test]
    fn overflow_is_reported() {
        let t = table(1);
        let big = Polynomial::constant(t.clone(), i64::MAX);
        assert!(matches!(big.mul(&big), Err(Error::Overflow)));
        assert!(matches!(big.add(&big), Err(Error::Overflow)));
    }
}
