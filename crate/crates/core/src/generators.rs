//! Constructions: full simplices and their boundaries, cyclic polytope
//! boundaries via Gale evenness, the bundled example complexes, and seeded
//! random complexes for property tests.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::asc::SimplicialComplex;
use crate::error::{Error, Result};

fn labels(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("v{i}")).collect()
}

/// The full simplex `D[V]` on `m` vertices.
pub fn full_simplex(m: usize) -> SimplicialComplex {
    assert!(m >= 1);
    SimplicialComplex::from_facets(&[labels(m)]).expect("fresh labels")
}

/// The boundary `∂D[V]` on `m` vertices: all proper subsets, with the `m`
/// subsets of size `m-1` as facets. For `m = 1` this is the empty complex.
pub fn boundary_simplex(m: usize) -> SimplicialComplex {
    assert!(m >= 1);
    if m == 1 {
        return SimplicialComplex::empty();
    }
    let all = labels(m);
    let facets: Vec<Vec<String>> = (0..m)
        .map(|skip| {
            all.iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, l)| l.clone())
                .collect()
        })
        .collect();
    SimplicialComplex::from_facets(&facets).expect("fresh labels")
}

/// Literal Gale evenness test: an n-subset of the ordered vertex set is a
/// facet iff between every pair of consecutive non-members there is an even
/// number of members.
fn gale_evenness_segments(sigma: &[usize], m: usize) -> bool {
    let complement: Vec<usize> = (0..m).filter(|v| !sigma.contains(v)).collect();
    complement.windows(2).all(|w| {
        let between = sigma.iter().filter(|&&v| w[0] < v && v < w[1]).count();
        between % 2 == 0
    })
}

/// Run-based form of the same criterion, used as an internal cross-check:
/// every maximal run of consecutive members touching neither endpoint of
/// the vertex order has even length.
#[allow(dead_code)]
pub(crate) fn gale_evenness_runs(sigma: &[usize], m: usize) -> bool {
    let mut i = 0;
    while i < sigma.len() {
        let mut j = i;
        while j + 1 < sigma.len() && sigma[j + 1] == sigma[j] + 1 {
            j += 1;
        }
        let touches_end = sigma[i] == 0 || sigma[j] == m - 1;
        if !touches_end && (j - i + 1) % 2 != 0 {
            return false;
        }
        i = j + 1;
    }
    true
}

/// The boundary of the cyclic n-polytope on `m` ordered vertices, with
/// facets given by Gale's Evenness Theorem. Pure of dimension `n-1` and a
/// pseudomanifold.
pub fn cyclic_polytope(m: usize, n: usize) -> Result<SimplicialComplex> {
    if n < 2 || m <= n {
        return Err(Error::Parameter(format!(
            "cyclic polytope requires m > n >= 2, got m={m}, n={n}"
        )));
    }
    let names = labels(m);
    let mut facets = Vec::new();
    for combo in (0..m).combinations(n) {
        if gale_evenness_segments(&combo, m) {
            facets.push(combo.iter().map(|&v| names[v].clone()).collect::<Vec<_>>());
        }
    }
    SimplicialComplex::from_facets(&facets)
}

/// A bundled example complex with its documented facts. The facts carried
/// here are re-verified: structural guards at construction, chromatic
/// values by the test suites.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub complex: SimplicialComplex,
    pub f_vector: Vec<u64>,
    /// Known values `(s, chi_s)`.
    pub chromatic: Vec<(usize, u32)>,
}

pub const CORPUS_NAMES: [&str; 5] = ["C5", "MB5", "P2", "T2", "DISC4"];

/// The five bundled complexes: the 5-cycle, the 5-vertex Moebius band, the
/// 6-vertex projective plane, the 7-vertex torus, and the 4-chromatic disc.
///
/// Every entry is validated against its documented structure before being
/// returned; a mismatch panics, making corpus corruption a hard error.
pub fn corpus() -> Vec<CorpusEntry> {
    let entries = vec![
        CorpusEntry {
            name: "C5",
            complex: c5(),
            f_vector: vec![1, 5, 5],
            chromatic: vec![(1, 3)],
        },
        CorpusEntry {
            name: "MB5",
            complex: mb5(),
            f_vector: vec![1, 5, 10, 5],
            chromatic: vec![(1, 5), (2, 2)],
        },
        CorpusEntry {
            name: "P2",
            complex: p2(),
            f_vector: vec![1, 6, 15, 10],
            chromatic: vec![(1, 6), (2, 3)],
        },
        CorpusEntry {
            name: "T2",
            complex: t2(),
            f_vector: vec![1, 7, 21, 14],
            chromatic: vec![(1, 7), (2, 3)],
        },
        CorpusEntry {
            name: "DISC4",
            complex: full_simplex(1).join(&boundary_simplex(3)),
            f_vector: vec![1, 4, 6, 3],
            chromatic: vec![(1, 4)],
        },
    ];
    for e in &entries {
        validate(e);
    }
    entries
}

pub fn corpus_entry(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

fn validate(e: &CorpusEntry) {
    let fv = e.complex.f_vector();
    assert_eq!(
        fv.counts(),
        &e.f_vector[..],
        "corpus entry {} has f-vector {:?}, expected {:?}",
        e.name,
        fv.counts(),
        e.f_vector
    );
    match e.name {
        "MB5" => {
            // Read off the figure, so guard it: five facets and a complete
            // 1-skeleton on five vertices (which forces chi_1 = 5).
            assert_eq!(e.complex.facets().len(), 5, "MB5 facet count");
            let sk = e.complex.skeleton(1);
            assert_eq!(sk.facets().len(), 10, "MB5 1-skeleton must be K5");
        }
        "T2" => {
            // Standard 7-vertex torus; guarded by surface checks and a
            // complete 1-skeleton on seven vertices.
            assert_eq!(e.complex.euler_characteristic(), 0, "T2 Euler characteristic");
            assert!(e.complex.is_pseudomanifold(), "T2 pseudomanifold");
            assert_eq!(e.complex.skeleton(1).facets().len(), 21, "T2 1-skeleton must be K7");
        }
        "P2" => {
            let missing = e.complex.missing_faces();
            let triples: Vec<Vec<&str>> = missing
                .iter()
                .map(|s| e.complex.facet_labels(s))
                .collect();
            assert_eq!(
                triples,
                vec![
                    vec!["v1", "v2", "v3"],
                    vec!["v1", "v2", "v5"],
                    vec!["v1", "v3", "v6"],
                    vec!["v1", "v4", "v5"],
                    vec!["v1", "v4", "v6"],
                    vec!["v2", "v3", "v4"],
                    vec!["v2", "v4", "v6"],
                    vec!["v2", "v5", "v6"],
                    vec!["v3", "v4", "v5"],
                    vec!["v3", "v5", "v6"],
                ],
                "P2 missing faces"
            );
        }
        _ => {}
    }
}

fn c5() -> SimplicialComplex {
    SimplicialComplex::from_facets(&[
        vec!["v1", "v2"],
        vec!["v2", "v3"],
        vec!["v3", "v4"],
        vec!["v4", "v5"],
        vec!["v5", "v1"],
    ])
    .expect("fresh labels")
}

/// Five-vertex Moebius band, facets read from the strip figure. Singleton
/// lists first so the vertex table is ordered v1..v5.
fn mb5() -> SimplicialComplex {
    SimplicialComplex::from_facets(&[
        vec!["v1"],
        vec!["v2"],
        vec!["v3"],
        vec!["v4"],
        vec!["v5"],
        vec!["v1", "v2", "v4"],
        vec!["v2", "v4", "v5"],
        vec!["v2", "v3", "v5"],
        vec!["v1", "v3", "v5"],
        vec!["v1", "v3", "v4"],
    ])
    .expect("fresh labels")
}

/// Six-vertex projective plane, defined by its ten missing triples: the
/// facets are the other ten triples of the 6-set.
fn p2() -> SimplicialComplex {
    let missing: [[usize; 3]; 10] = [
        [1, 2, 3],
        [1, 2, 5],
        [1, 3, 6],
        [1, 4, 5],
        [1, 4, 6],
        [2, 3, 4],
        [2, 4, 6],
        [2, 5, 6],
        [3, 4, 5],
        [3, 5, 6],
    ];
    // singleton lists first so the vertex table is ordered v1..v6
    let mut lists: Vec<Vec<String>> = (1..=6).map(|i| vec![format!("v{i}")]).collect();
    lists.extend(
        (1..=6usize)
            .combinations(3)
            .filter(|c| !missing.contains(&[c[0], c[1], c[2]]))
            .map(|c| c.iter().map(|i| format!("v{i}")).collect::<Vec<_>>()),
    );
    SimplicialComplex::from_facets(&lists).expect("fresh labels")
}

/// Seven-vertex torus with facets `{i, i+1, i+3}` and `{i, i+2, i+3}`
/// modulo 7.
fn t2() -> SimplicialComplex {
    let mut facets = Vec::new();
    for i in 0..7usize {
        facets.push(vec![
            format!("v{}", i + 1),
            format!("v{}", (i + 1) % 7 + 1),
            format!("v{}", (i + 3) % 7 + 1),
        ]);
    }
    for i in 0..7usize {
        facets.push(vec![
            format!("v{}", i + 1),
            format!("v{}", (i + 2) % 7 + 1),
            format!("v{}", (i + 3) % 7 + 1),
        ]);
    }
    // put the vertices in canonical order first
    let mut all: Vec<Vec<String>> = (1..=7).map(|i| vec![format!("v{i}")]).collect();
    all.extend(facets);
    SimplicialComplex::from_facets(&all).expect("fresh labels")
}

/// Deterministic random complex on at most `m` labeled vertices: candidate
/// facets are sampled and normalized, and uncovered vertices are kept as
/// isolated points.
pub fn random_complex(m: usize, density: f64, seed: u64) -> SimplicialComplex {
    assert!(m >= 1);
    assert!(density > 0.0 && density <= 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names = labels(m);
    let candidates = ((density * 2.0 * m as f64).ceil() as usize).max(1);
    let max_size = m.min(5);
    let mut facets: Vec<Vec<String>> = (1..=m).map(|i| vec![format!("v{i}")]).collect();
    for _ in 0..candidates {
        let size = rng.gen_range(1..=max_size);
        let mut picked = Vec::new();
        while picked.len() < size {
            let v = rng.gen_range(0..m);
            if !picked.contains(&v) {
                picked.push(v);
            }
        }
        picked.sort_unstable();
        facets.push(picked.iter().map(|&v| names[v].clone()).collect());
    }
    SimplicialComplex::from_facets(&facets).expect("fresh labels")
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    #[test]
    fn boundary_simplex_basics() {
        let k = boundary_simplex(3);
        assert_eq!(k.f_vector().counts(), &[1, 3, 3]);
        let k4 = boundary_simplex(4);
        assert_eq!(k4.euler_characteristic(), 2);
        assert!(k4.is_pseudomanifold());
    }

    #[test]
    fn cyclic_polytope_on_n_plus_1_is_simplex_boundary() {
        for n in 2..=5usize {
            let cp = cyclic_polytope(n + 1, n).unwrap();
            let bd = boundary_simplex(n + 1);
            assert_eq!(cp.facets(), bd.facets(), "n={n}");
        }
    }

    #[test]
    fn cp63_is_octahedral_sphere() {
        // simplicial 2-sphere oracle: chi = 2 and 3*f_2 = 2*f_1
        let cp = cyclic_polytope(6, 3).unwrap();
        let fv = cp.f_vector();
        assert_eq!(fv.counts(), &[1, 6, 12, 8]);
        assert_eq!(cp.euler_characteristic(), 2);
        assert_eq!(3 * fv.counts()[3], 2 * fv.counts()[2]);
    }

    #[test]
    fn gale_run_form_agrees_with_literal_form() {
        for m in 3..=10usize {
            for n in 2..m.min(7) {
                for combo in (0..m).combinations(n) {
                    assert_eq!(
                        gale_evenness_segments(&combo, m),
                        gale_evenness_runs(&combo, m),
                        "m={m} n={n} sigma={combo:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn cyclic_polytopes_are_spheres() {
        for m in 4..=10usize {
            for n in 2..m.min(7) {
                let cp = cyclic_polytope(m, n).unwrap();
                assert!(cp.is_pure(), "m={m} n={n}");
                assert!(cp.is_pseudomanifold(), "m={m} n={n}");
                let expected_chi = if (n - 1) % 2 == 0 { 2 } else { 0 };
                assert_eq!(cp.euler_characteristic(), expected_chi, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn neighborliness_of_even_cyclic_polytopes() {
        // CP(m,2n) has the same s-skeleton as the full simplex for s < n
        for (m, n) in [(7usize, 2usize), (8, 2), (9, 3)] {
            let cp = cyclic_polytope(m, 2 * n).unwrap();
            let full = full_simplex(m);
            for s in 1..n {
                assert_eq!(
                    cp.skeleton(s as isize).f_vector(),
                    full.skeleton(s as isize).f_vector(),
                    "m={m} n={n} s={s}"
                );
            }
        }
    }

    #[test]
    fn invalid_cyclic_polytope_parameters() {
        assert!(cyclic_polytope(3, 3).is_err());
        assert!(cyclic_polytope(5, 1).is_err());
    }

    #[test]
    fn corpus_loads_and_validates() {
        let entries = corpus();
        assert_eq!(entries.len(), 5);
        let p2 = corpus_entry("P2").unwrap();
        assert_eq!(p2.complex.n(), 3);
        assert_eq!(p2.complex.m(), 6);
        assert_eq!(p2.complex.codim(), 3);
        assert_eq!(p2.complex.euler_characteristic(), 1);
        let t2 = corpus_entry("T2").unwrap();
        assert_eq!(t2.complex.euler_characteristic(), 0);
    }

    #[test]
    fn p2_is_2_flag_not_1_flag() {
        let p2 = corpus_entry("P2").unwrap().complex;
        assert!(p2.is_s_flag(2));
        assert!(!p2.is_s_flag(1));
        assert_eq!(p2.flagification(2), p2);
    }

    #[test]
    fn disc4_is_cone_over_triangle_boundary() {
        let d = corpus_entry("DISC4").unwrap().complex;
        assert_eq!(d.m(), 4);
        assert_eq!(d.n(), 3);
        assert_eq!(d.euler_characteristic(), 1);
    }

    #[test]
    fn random_complex_is_deterministic() {
        let a = random_complex(8, 0.3, 42);
        let b = random_complex(8, 0.3, 42);
        assert_eq!(a, b);
        let c = random_complex(8, 0.3, 43);
        assert!(a != c || a.facets() == c.facets());
    }
}
