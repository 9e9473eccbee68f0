//! Disjoint Steiner path and tree packings.
//!
//! For a terminal set `S` the four local parameters are the maximum sizes of
//! families of witnesses connecting `S`:
//!
//! | variant  | witness | disjointness                                   |
//! |----------|---------|-----------------------------------------------|
//! | `Pi`     | path    | no shared edges, shared vertices exactly `S`   |
//! | `Omega`  | path    | no shared edges                                |
//! | `Kappa`  | tree    | no shared edges, shared vertices exactly `S`   |
//! | `Lambda` | tree    | no shared edges                                |
//!
//! The global parameters take the minimum over all `k`-subsets. Only minimal
//! witnesses (path ends in `S`, tree leaves in `S`) are searched: trimming a
//! witness keeps it connected to `S` and only frees resources.

mod bounds;
mod enumerate;
mod packing;
mod solve;

pub use bounds::{obs13_formula, upper_bound, BoundTarget};
pub use enumerate::{
    enumerate_minimal_spaths, enumerate_minimal_trees, enumerate_paths_limited,
    enumerate_trees_limited, Enumeration, MAX_VERTICES,
};
pub use solve::{global_connectivity, local_connectivity, pack_at_least, Decision, GlobalResult};

use crate::error::{input_err, Result};
use crate::graph::{Graph, VertexSet};
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;
use std::time::Duration;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Pi,
    Omega,
    Kappa,
    Lambda,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Pi, Variant::Omega, Variant::Kappa, Variant::Lambda];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Pi => "pi",
            Variant::Omega => "omega",
            Variant::Kappa => "kappa",
            Variant::Lambda => "lambda",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "pi" => Ok(Variant::Pi),
            "omega" => Ok(Variant::Omega),
            "kappa" => Ok(Variant::Kappa),
            "lambda" => Ok(Variant::Lambda),
            _ => input_err(format!("unknown parameter {s:?}")),
        }
    }

    /// Witnesses must meet exactly in `S` (as opposed to merely sharing no edge).
    pub fn internally_disjoint(self) -> bool {
        matches!(self, Variant::Pi | Variant::Kappa)
    }

    pub fn uses_trees(self) -> bool {
        matches!(self, Variant::Kappa | Variant::Lambda)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A single member of a packing: a vertex sequence or a tree's edge list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Path(Vec<usize>),
    Tree(Vec<(usize, usize)>),
}

impl Witness {
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = match self {
            Witness::Path(p) => p.clone(),
            Witness::Tree(t) => t.iter().flat_map(|&(a, b)| [a, b]).collect(),
        };
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Edges as `(min, max)` pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match self {
            Witness::Path(p) => p
                .windows(2)
                .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
                .collect(),
            Witness::Tree(t) => t.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// The family is maximum: exhaustive search finished or a proven upper
    /// bound was met.
    Exact,
    /// The search was cut short; the true value is at least `value`.
    LowerBound,
    /// No witness connects the terminals at all.
    Zero,
    /// The value is fixed by convention (terminal count above the order).
    Convention,
}

/// A disjoint family of witnesses for one terminal set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingCertificate {
    pub variant: Variant,
    pub terminals: VertexSet,
    pub family: Vec<Witness>,
    pub value: usize,
    pub status: Status,
}

/// Machine-readable certificate record.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateRecord {
    pub param: String,
    pub k: usize,
    pub value: usize,
    pub status: Status,
    pub witness_set: Vec<usize>,
    pub family: Vec<Witness>,
}

impl PackingCertificate {
    pub fn record(&self, k: usize) -> CertificateRecord {
        CertificateRecord {
            param: self.variant.name().to_string(),
            k,
            value: self.value,
            status: self.status,
            witness_set: self.terminals.members().to_vec(),
            family: self.family.clone(),
        }
    }

    /// Re-checks every witness and every pair against `g`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.status != Status::Convention && self.value != self.family.len() {
            return Err(format!(
                "value {} disagrees with family size {}",
                self.value,
                self.family.len()
            ));
        }
        let s: HashSet<usize> = self.terminals.members().iter().copied().collect();
        let mut vertex_sets = Vec::new();
        let mut edge_sets = Vec::new();
        for (i, w) in self.family.iter().enumerate() {
            match (w, self.variant.uses_trees()) {
                (Witness::Path(p), false) => check_path(g, &s, p),
                (Witness::Tree(t), true) => check_tree(g, &s, t),
                _ => Err("witness kind does not match the parameter".to_string()),
            }
            .map_err(|e| format!("witness {i}: {e}"))?;
            vertex_sets.push(w.vertices().into_iter().collect::<HashSet<_>>());
            edge_sets.push(w.edges().into_iter().collect::<HashSet<_>>());
        }
        for i in 0..self.family.len() {
            for j in i + 1..self.family.len() {
                if let Some(e) = edge_sets[i].intersection(&edge_sets[j]).next() {
                    return Err(format!("witnesses {i} and {j} share edge {}-{}", e.0, e.1));
                }
                if self.variant.internally_disjoint() {
                    if let Some(v) = vertex_sets[i]
                        .intersection(&vertex_sets[j])
                        .find(|v| !s.contains(v))
                    {
                        return Err(format!("witnesses {i} and {j} share vertex {v}"));
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_path(g: &Graph, s: &HashSet<usize>, p: &[usize]) -> std::result::Result<(), String> {
    if p.is_empty() {
        return Err("empty path".into());
    }
    let distinct: HashSet<_> = p.iter().collect();
    if distinct.len() != p.len() {
        return Err("path repeats a vertex".into());
    }
    if let Some(w) = p.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
        return Err(format!("{}-{} is not an edge", w[0], w[1]));
    }
    if let Some(t) = s.iter().find(|t| !distinct.contains(t)) {
        return Err(format!("terminal {t} missing"));
    }
    if s.len() >= 2 && !(s.contains(&p[0]) && s.contains(p.last().unwrap())) {
        return Err("an end of the path is not a terminal".into());
    }
    if s.len() == 1 && (p.len() != 2 || !s.contains(&p[0])) {
        return Err("single-terminal witnesses are edges leaving the terminal".into());
    }
    Ok(())
}

fn check_tree(
    g: &Graph,
    s: &HashSet<usize>,
    t: &[(usize, usize)],
) -> std::result::Result<(), String> {
    let edges: HashSet<(usize, usize)> = t.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    if edges.len() != t.len() {
        return Err("tree repeats an edge".into());
    }
    if let Some(&(a, b)) = t.iter().find(|&&(a, b)| !g.has_edge(a, b)) {
        return Err(format!("{a}-{b} is not an edge"));
    }
    let mut verts: Vec<usize> = t.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    if t.is_empty() && s.len() == 1 {
        return Ok(());
    }
    if verts.len() != t.len() + 1 {
        return Err("edge count is not one less than vertex count".into());
    }
    let sub = Graph::new(g.n(), t.iter().copied()).map_err(|e| e.to_string())?;
    let mut seen = HashSet::from([verts[0]]);
    let mut stack = vec![verts[0]];
    while let Some(x) = stack.pop() {
        for &y in sub.neighbors(x) {
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    if seen.len() != verts.len() {
        return Err("tree is disconnected".into());
    }
    if let Some(v) = s.iter().find(|v| !seen.contains(v)) {
        return Err(format!("terminal {v} missing"));
    }
    if s.len() >= 2 {
        if let Some(v) = verts
            .iter()
            .find(|&&v| sub.degree(v) == 1 && !s.contains(&v))
        {
            return Err(format!("leaf {v} is not a terminal"));
        }
    }
    Ok(())
}

/// Deliberate solver corruption, used to check that the verification suites
/// notice a wrong answer.
#[doc(hidden)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Report one more than the true global `pi` for `k >= 3`.
    InflatePi,
}

/// Knobs shared by every solver entry point.
#[derive(Clone, Debug)]
pub struct SolverOptions {
    /// Wall-clock limit for one top-level call; `None` means unlimited.
    pub budget: Option<Duration>,
    /// Limit on branch-and-bound nodes per packing search. Unlike `budget`
    /// this cut is reproducible across runs and machines.
    pub node_limit: Option<u64>,
    /// Maximum number of candidate witnesses enumerated per terminal set.
    pub enumeration_cap: usize,
    /// Use the complete-graph path formula as an upper bound for `pi`.
    /// Disable it to make every exact `pi` value rest on exhaustion alone.
    pub use_formula_bound: bool,
    #[doc(hidden)]
    pub fault: Option<Fault>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            budget: None,
            node_limit: None,
            enumeration_cap: 2_000_000,
            use_formula_bound: true,
            fault: None,
        }
    }
}

impl SolverOptions {
    pub fn with_budget(mut self, budget: Duration) -> Self {
        self.budget = Some(budget);
        self
    }

    pub fn with_node_limit(mut self, nodes: u64) -> Self {
        self.node_limit = Some(nodes);
        self
    }

    pub fn without_formula_bound(mut self) -> Self {
        self.use_formula_bound = false;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn cert(g: &Graph, s: &[usize], variant: Variant, family: Vec<Witness>) -> PackingCertificate {
        PackingCertificate {
            variant,
            terminals: VertexSet::new(g, s.iter().copied()).unwrap(),
            value: family.len(),
            family,
            status: Status::LowerBound,
        }
    }

    #[test]
    fn validate_catches_shared_edges_and_vertices() {
        let k4 = generate(Family::Complete(4)).unwrap();
        let p = Witness::Path(vec![0, 1, 2]);
        assert!(cert(&k4, &[0, 1, 2], Variant::Pi, vec![p.clone()])
            .validate(&k4)
            .is_ok());
        assert!(
            cert(&k4, &[0, 1, 2], Variant::Pi, vec![p.clone(), p.clone()])
                .validate(&k4)
                .is_err()
        );
        let a = Witness::Path(vec![0, 3, 1, 2]);
        let b = Witness::Path(vec![1, 0, 2]);
        assert!(
            cert(&k4, &[0, 1, 2], Variant::Pi, vec![a.clone(), b.clone()])
                .validate(&k4)
                .is_ok()
        );
        // sharing the non-terminal 3 is fine for omega only
        let k5 = generate(Family::Complete(5)).unwrap();
        let c = Witness::Path(vec![0, 2, 3, 4, 1]);
        assert!(
            cert(&k5, &[0, 1, 2], Variant::Pi, vec![a.clone(), c.clone()])
                .validate(&k5)
                .is_err()
        );
        assert!(cert(&k5, &[0, 1, 2], Variant::Omega, vec![a, c])
            .validate(&k5)
            .is_ok());
    }

    #[test]
    fn validate_checks_minimal_form() {
        let p4 = generate(Family::Path(4)).unwrap();
        let long = Witness::Path(vec![0, 1, 2, 3]);
        assert!(cert(&p4, &[0, 2], Variant::Pi, vec![long])
            .validate(&p4)
            .is_err());
        let tree = Witness::Tree(vec![(0, 1), (1, 2), (2, 3)]);
        assert!(cert(&p4, &[0, 2], Variant::Kappa, vec![tree])
            .validate(&p4)
            .is_err());
        let tree = Witness::Tree(vec![(0, 1), (1, 2)]);
        assert!(cert(&p4, &[0, 2], Variant::Kappa, vec![tree])
            .validate(&p4)
            .is_ok());
        let path_for_tree = Witness::Path(vec![0, 1, 2]);
        assert!(cert(&p4, &[0, 2], Variant::Kappa, vec![path_for_tree])
            .validate(&p4)
            .is_err());
    }

    #[test]
    fn record_serializes_family_as_nested_lists() {
        let k3 = generate(Family::Complete(3)).unwrap();
        let c = cert(
            &k3,
            &[0, 1, 2],
            Variant::Pi,
            vec![Witness::Path(vec![0, 1, 2])],
        );
        let json = serde_json::to_string(&c.record(3)).unwrap();
        assert_eq!(
            json,
            r#"{"param":"pi","k":3,"value":1,"status":"lower-bound","witness_set":[0,1,2],"family":[[0,1,2]]}"#
        );
    }

    #[test]
    fn variant_names_round_trip() {
        for v in Variant::ALL {
            assert_eq!(Variant::parse(v.name()).unwrap(), v);
        }
        assert!(Variant::parse("kappa-cut").is_err());
    }
}
