//! Facet-file interchange: one facet per line, whitespace-separated labels,
//! `#` comments, blank lines ignored.

use crate::asc::SimplicialComplex;
use crate::error::{Error, Result};

/// Optional header comment fixing the vertex order; emitted by
/// [`render_facets`] so that a round trip reproduces the complex exactly,
/// ignored as an ordinary comment by other consumers.
const VERTEX_HEADER: &str = "# vertices:";

/// Parses a facet file. Labels are arbitrary non-whitespace tokens; the
/// resulting complex is normalized (dominated facets dropped, antichain
/// order). Vertices are numbered by a `# vertices:` header when present,
/// otherwise in order of first appearance. Duplicate labels within one
/// line are reported with the line number; a file with no facet lines is
/// an error.
pub fn parse_facets(text: &str) -> Result<SimplicialComplex> {
    let mut facets: Vec<Vec<&str>> = Vec::new();
    let mut header: Option<Vec<&str>> = None;
    for (idx, raw) in text.lines().enumerate() {
        if raw.starts_with(VERTEX_HEADER) && header.is_none() {
            let tokens: Vec<&str> = raw[VERTEX_HEADER.len()..].split_whitespace().collect();
            for (i, t) in tokens.iter().enumerate() {
                if tokens[..i].contains(t) {
                    return Err(Error::MalformedInput(format!(
                        "line {}: duplicate label `{t}` in vertex header",
                        idx + 1
                    )));
                }
            }
            header = Some(tokens);
            continue;
        }
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        for (i, t) in tokens.iter().enumerate() {
            if tokens[..i].contains(t) {
                return Err(Error::MalformedInput(format!(
                    "line {}: duplicate label `{t}` in facet",
                    idx + 1
                )));
            }
        }
        facets.push(tokens);
    }
    if facets.is_empty() {
        return Err(Error::EmptyInput);
    }
    // the header vertices intern first, as dominated singleton facets
    let mut lists: Vec<Vec<&str>> = header
        .unwrap_or_default()
        .into_iter()
        .map(|v| vec![v])
        .collect();
    lists.append(&mut facets);
    SimplicialComplex::from_facets(&lists)
}

/// Renders a complex back to the facet-file format: a vertex-order header
/// comment, then one facet per line in the canonical facet order.
pub fn render_facets(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    out.push_str(VERTEX_HEADER);
    for label in k.vertices().labels() {
        out.push(' ');
        out.push_str(label);
    }
    out.push('\n');
    for f in k.facets() {
        let labels = k.facet_labels(f);
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}
