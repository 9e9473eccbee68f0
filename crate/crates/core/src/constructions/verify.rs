use crate::graph::{Graph, VertexSet};
use crate::steiner::Variant;
use serde::Serialize;
use std::collections::BTreeSet;

/// Result of checking a path family. `reason` names the first violation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub valid: bool,
    pub reason: String,
}

impl Verdict {
    fn fail(reason: String) -> Self {
        Self {
            valid: false,
            reason,
        }
    }
}

/// Checks that every path is a simple minimal S-path of `g` and that the
/// family is pairwise disjoint: edge-disjoint for `Omega`, and additionally
/// meeting only in `S` for `Pi`.
///
/// Written without reference to the solver's own certificate checks, so the
/// two can cross-examine each other.
pub fn verify_family(g: &Graph, s: &VertexSet, family: &[Vec<usize>], variant: Variant) -> Verdict {
    if variant.uses_trees() {
        return Verdict::fail(format!("{variant} packs trees, not paths"));
    }
    let terminals: BTreeSet<usize> = s.members().iter().copied().collect();
    let mut vsets: Vec<BTreeSet<usize>> = Vec::with_capacity(family.len());
    let mut esets: Vec<BTreeSet<(usize, usize)>> = Vec::with_capacity(family.len());
    for (i, path) in family.iter().enumerate() {
        if let Some(&v) = path.iter().find(|&&v| v >= g.n()) {
            return Verdict::fail(format!("path {i}: vertex {v} out of range"));
        }
        let vs: BTreeSet<usize> = path.iter().copied().collect();
        if vs.len() != path.len() {
            return Verdict::fail(format!("path {i}: repeated vertex"));
        }
        let mut es = BTreeSet::new();
        for pair in path.windows(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if !g.has_edge(a, b) {
                return Verdict::fail(format!("path {i}: {a}-{b} is not an edge"));
            }
            es.insert((a, b));
        }
        if let Some(t) = terminals.iter().find(|t| !vs.contains(t)) {
            return Verdict::fail(format!("path {i}: terminal {t} missing"));
        }
        let ends = (path.first(), path.last());
        if terminals.len() >= 2 {
            if let (Some(a), Some(b)) = ends {
                if !terminals.contains(a) || !terminals.contains(b) {
                    return Verdict::fail(format!("path {i}: endpoint outside S"));
                }
            }
        }
        vsets.push(vs);
        esets.push(es);
    }
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            if let Some(&(a, b)) = esets[i].intersection(&esets[j]).next() {
                return Verdict::fail(format!("paths {i} and {j} share edge {a}-{b}"));
            }
            if variant == Variant::Pi {
                if let Some(v) = vsets[i]
                    .intersection(&vsets[j])
                    .find(|v| !terminals.contains(v))
                {
                    return Verdict::fail(format!("paths {i} and {j} share internal vertex {v}"));
                }
            }
        }
    }
    Verdict {
        valid: true,
        reason: "ok".into(),
    }
}
