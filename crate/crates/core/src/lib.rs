//! Exact computations with relaxed vertex colorings of finite abstract
//! simplicial complexes.
//!
//! A map from the vertices of a complex to a palette is an (r,s)-coloring
//! when no facet picks up more than `s` vertices of any one color. The
//! crate provides:
//!
//! - facet-based simplicial complexes with skeleta, joins, missing faces,
//!   and s-flagifications ([`asc`]);
//! - exact integer polynomial arithmetic and normal forms in the
//!   Stanley-Reisner quotient ([`poly`], [`sr`]);
//! - an algebraic coloring verifier based on the factorization of the
//!   total Chern class, independent of the combinatorial check
//!   ([`verifier`]);
//! - exact s-chromatic numbers with canonical witnesses, and exact
//!   coloring counts ([`coloring`]);
//! - generators for simplices, cyclic polytope boundaries, the bundled
//!   example complexes, and seeded random complexes ([`generators`]);
//! - a plain-text facet-file format ([`io`]).
//!
//! The search and counting cores are data-parallel via rayon (feature
//! `parallel`, on by default) with a sequential fallback; results are
//! identical for any worker count.

pub mod asc;
pub mod coloring;
pub mod error;
pub mod generators;
pub mod io;
pub mod poly;
pub mod sr;
pub mod verifier;
pub mod vset;

pub use asc::{FVector, SimplicialComplex, VertexTable};
pub use coloring::{
    chromatic_number, color_stats, count_colorings, count_colorings_with,
    count_s_to_1_surjections, is_coloring, is_l_coloring, ColorStats, Coloring, Hypergraph,
    SearchConfig, VertexOrder,
};
pub use error::{Error, Result};
pub use generators::{
    boundary_simplex, corpus, corpus_entry, cyclic_polytope, full_simplex, random_complex,
    CorpusEntry,
};
pub use io::{parse_facets, render_facets};
pub use poly::{
    c_leq, elementary_symmetric, s_to_1_identity_holds, total_chern, total_chern_of, Monomial,
    Polynomial,
};
pub use sr::SRContext;
pub use verifier::{
    algebraic_verdict, certificate_with_context, chern_normal_form, cross_check,
    factorization_certificate,
    verify_coloring_algebraically, verify_coloring_s1, Certificate, CrossCheckReport, Factor,
};
pub use vset::VertexSet;
