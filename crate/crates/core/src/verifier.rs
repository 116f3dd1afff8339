//! The algebraic side of coloring verification: a map is a (P,s)-coloring
//! iff `c(V) = prod_p c_{<=s}(f^{-1}p)` holds in the Stanley-Reisner ring.
//!
//! The algebraic verdict is computed from polynomial normal forms only and
//! shares no code path with the combinatorial facet check, so the two can
//! serve as oracles for each other.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::asc::SimplicialComplex;
use crate::coloring::{is_coloring, Coloring};
use crate::error::{Error, Result};
use crate::poly::{c_leq, total_chern, Polynomial};
use crate::sr::SRContext;

/// Serializable witness: a coloring plus the two normal forms proving or
/// refuting the ring identity, and the per-color factors.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Certificate {
    pub complex: String,
    pub s: u32,
    pub coloring: Vec<u32>,
    pub verdict: bool,
    pub lhs: String,
    pub rhs: String,
    pub factors: Vec<Factor>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Factor {
    pub color: u32,
    pub poly: String,
}

/// Verifies `f` against the ring identity of the coloring criterion:
/// compares the normal forms of `c(V)` and `prod_p c_{<=s}(f^{-1}p)` in
/// `SR(K;Z)`. The verdict agrees with the combinatorial check.
pub fn verify_coloring_algebraically(
    k: &SimplicialComplex,
    name: &str,
    f: &Coloring,
    s: usize,
) -> Result<Certificate> {
    if s == 0 {
        return Err(Error::Parameter("s must be at least 1".into()));
    }
    if f.assignment().len() != k.m() {
        return Err(Error::Parameter(format!(
            "coloring assigns {} vertices but the complex has {}",
            f.assignment().len(),
            k.m()
        )));
    }
    let ctx = SRContext::new(k);
    certificate_with_context(&ctx, name, f, s)
}

/// The normal form of the total Chern class `c(V)` in `SR(K;Z)`; callers
/// verifying many maps against one complex compute this once.
pub fn chern_normal_form(ctx: &SRContext) -> Result<Polynomial> {
    ctx.normal_form(&total_chern(ctx.complex().vertices())?)
}

/// The normal form of `prod_p c_{<=s}(f^{-1}p)`, reduced after every
/// factor to keep intermediate terms sparse (sound for a monomial ideal).
fn product_normal_form(ctx: &SRContext, f: &Coloring, s: usize) -> Result<Polynomial> {
    let vars = ctx.complex().vertices().clone();
    let mut product = Polynomial::one(vars.clone());
    for fiber in f.fibers() {
        product = ctx.normal_form(&product.mul(&c_leq(&vars, &fiber, s)?)?)?;
    }
    Ok(product)
}

/// The bare algebraic verdict against a precomputed `c(V)` normal form;
/// the fast path for bulk equivalence checks.
pub fn algebraic_verdict(
    ctx: &SRContext,
    chern_nf: &Polynomial,
    f: &Coloring,
    s: usize,
) -> Result<bool> {
    Ok(product_normal_form(ctx, f, s)? == *chern_nf)
}

/// Same as [`verify_coloring_algebraically`] but reusing a prebuilt context,
/// for callers verifying many maps against one complex.
pub fn certificate_with_context(
    ctx: &SRContext,
    name: &str,
    f: &Coloring,
    s: usize,
) -> Result<Certificate> {
    let vars = ctx.complex().vertices().clone();
    let lhs = chern_normal_form(ctx)?;

    let mut factors = Vec::with_capacity(f.palette_size() as usize);
    for (p, fiber) in f.fibers().iter().enumerate() {
        let factor = c_leq(&vars, fiber, s)?;
        factors.push(Factor {
            color: p as u32,
            poly: ctx.normal_form(&factor)?.render(),
        });
    }
    let rhs = product_normal_form(ctx, f, s)?;

    let verdict = lhs == rhs;
    Ok(Certificate {
        complex: name.to_string(),
        s: s as u32,
        coloring: f.assignment().to_vec(),
        verdict,
        lhs: lhs.render(),
        rhs: rhs.render(),
        factors,
    })
}

/// The s = 1 specialization: the classical coloring criterion.
pub fn verify_coloring_s1(
    k: &SimplicialComplex,
    name: &str,
    f: &Coloring,
) -> Result<Certificate> {
    verify_coloring_algebraically(k, name, f, 1)
}

/// Emits the factorization certificate of a known coloring: the per-color
/// factors `c_{<=s}(f^{-1}p)` have combinatorial degree at most `s` and
/// multiply to `c(V)` in `SR(K;Z)`. Fails on maps that are not colorings.
pub fn factorization_certificate(
    k: &SimplicialComplex,
    name: &str,
    f: &Coloring,
    s: usize,
) -> Result<Certificate> {
    if !is_coloring(k, f, s)? {
        return Err(Error::InvalidWitness(format!(
            "map is not a ({},{s})-coloring of `{name}`",
            f.palette_size()
        )));
    }
    let cert = verify_coloring_algebraically(k, name, f, s)?;
    if !cert.verdict {
        return Err(Error::Internal(
            "combinatorial coloring failed the ring identity".into(),
        ));
    }
    Ok(cert)
}

/// Outcome of a randomized equivalence run between the algebraic and the
/// combinatorial verdicts.
#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckReport {
    pub trials: u64,
    pub colorings_found: u64,
    pub disagreements: u64,
}

/// Samples `trials` seeded random vertex maps and checks that the algebraic
/// verdict equals the combinatorial one on every sample. Any disagreement is
/// a hard failure carrying reproduction data.
pub fn cross_check(
    k: &SimplicialComplex,
    s: usize,
    trials: u64,
    seed: u64,
) -> Result<CrossCheckReport> {
    let m = k.m();
    let ctx = SRContext::new(k);
    let chern_nf = chern_normal_form(&ctx)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colorings_found = 0u64;
    for trial in 0..trials {
        let palette = rng.gen_range(1..=m.max(1)) as u32;
        let assignment: Vec<u32> = (0..m).map(|_| rng.gen_range(0..palette)).collect();
        let f = Coloring::new(assignment.clone(), palette)?;
        let combinatorial = is_coloring(k, &f, s)?;
        let algebraic = algebraic_verdict(&ctx, &chern_nf, &f, s)?;
        if combinatorial != algebraic {
            return Err(Error::Internal(format!(
                "verifier disagreement at trial {trial}: seed={seed} s={s} \
                 palette={palette} assignment={assignment:?} \
                 combinatorial={combinatorial} algebraic={algebraic}"
            )));
        }
        if combinatorial {
            colorings_found += 1;
        }
    }
    Ok(CrossCheckReport {
        trials,
        colorings_found,
        disagreements: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn c5_displayed_identity_verifies() {
        let k = c5();
        let f = Coloring::new(vec![0, 1, 0, 1, 2], 3).unwrap();
        let cert = verify_coloring_algebraically(&k, "C5", &f, 1).unwrap();
        assert!(cert.verdict);
        assert_eq!(cert.lhs, cert.rhs);
        assert_eq!(cert.factors.len(), 3);
        assert_eq!(cert.factors[0].poly, "1 + v1 + v3");
        assert_eq!(cert.factors[1].poly, "1 + v2 + v4");
        assert_eq!(cert.factors[2].poly, "1 + v5");
    }

    #[test]
    fn monochrome_edge_fails() {
        let k = c5();
        let f = Coloring::new(vec![0, 0, 1, 2, 1], 3).unwrap();
        let cert = verify_coloring_s1(&k, "C5", &f).unwrap();
        assert!(!cert.verdict);
        assert!(!is_coloring(&k, &f, 1).unwrap());
    }

    #[test]
    fn single_vertex_always_colors() {
        let k = complex(&[&["a"]]);
        let f = Coloring::new(vec![0], 1).unwrap();
        assert!(verify_coloring_s1(&k, "point", &f).unwrap().verdict);
    }

    #[test]
    fn constant_map_on_edge_fails() {
        let k = complex(&[&["a", "b"]]);
        let f = Coloring::new(vec![0, 0], 1).unwrap();
        let cert = verify_coloring_algebraically(&k, "edge", &f, 1).unwrap();
        assert!(!cert.verdict);
    }

    #[test]
    fn factorization_requires_a_coloring() {
        let k = c5();
        let bad = Coloring::new(vec![0, 0, 1, 2, 1], 3).unwrap();
        assert!(matches!(
            factorization_certificate(&k, "C5", &bad, 1),
            Err(Error::InvalidWitness(_))
        ));
        let good = Coloring::new(vec![0, 1, 0, 1, 2], 3).unwrap();
        let cert = factorization_certificate(&k, "C5", &good, 1).unwrap();
        assert!(cert.verdict);
    }

    #[test]
    fn identity_coloring_of_simplex() {
        let k = complex(&[&["a", "b", "c"]]);
        let f = Coloring::new(vec![0, 1, 2], 3).unwrap();
        let cert = factorization_certificate(&k, "D3", &f, 1).unwrap();
        assert_eq!(cert.factors[0].poly, "1 + a");
        assert_eq!(cert.factors[1].poly, "1 + b");
        assert_eq!(cert.factors[2].poly, "1 + c");
    }

    #[test]
    fn certificate_round_trips_through_json() {
        let k = c5();
        let f = Coloring::new(vec![0, 1, 0, 1, 2], 3).unwrap();
        let cert = verify_coloring_algebraically(&k, "C5", &f, 1).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(cert, back);
        // re-verify from the deserialized data
        let f2 = Coloring::new(back.coloring.clone(), 3).unwrap();
        let again = verify_coloring_algebraically(&k, &back.complex, &f2, back.s as usize).unwrap();
        assert_eq!(again.verdict, back.verdict);
    }

    #[test]
    fn cross_check_is_quiet() {
        let report = cross_check(&c5(), 1, 500, 7).unwrap();
        assert_eq!(report.disagreements, 0);
        assert!(report.colorings_found > 0);
    }
}
