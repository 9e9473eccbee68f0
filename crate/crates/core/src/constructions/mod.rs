//! Explicit witness families and an independent path-family verifier.

mod lemma34;
mod verify;

pub use lemma34::{lemma34_graph, lemma34_witness, Case, Lemma34Witness, ProductCoordinates};
pub use verify::{verify_family, Verdict};

use crate::error::{input_err, Error, Result};
use crate::graph::{generate, Family, Graph, VertexSet};
use crate::steiner::{
    global_connectivity, pack_at_least, Decision, GlobalResult, SolverOptions, Variant,
};
use crate::transforms::{line_graph, natural_iso_check, LabeledGraph, Provenance};

/// Internally disjoint `{a, b, c}`-paths inside the clique on `vertices`:
/// `a b c`, then `b w_1 a c`, then `a w_{2i} b w_{2i+1} c` over the remaining
/// vertices in pairs. At `a`, `b` and `c` only the triangle edges and edges
/// to the clique's other vertices are used.
pub(crate) fn clique_witness(vertices: &[usize], a: usize, b: usize, c: usize) -> Vec<Vec<usize>> {
    let w: Vec<usize> = vertices
        .iter()
        .copied()
        .filter(|&v| v != a && v != b && v != c)
        .collect();
    let mut out = vec![vec![a, b, c]];
    if let Some(&w1) = w.first() {
        out.push(vec![b, w1, a, c]);
    }
    for pair in w.get(1..).unwrap_or(&[]).chunks_exact(2) {
        out.push(vec![a, pair[0], b, pair[1], c]);
    }
    out
}

/// `floor(n / 2)` internally disjoint paths for the three terminals `s` of
/// `K_n`, the largest possible number.
pub fn complete_graph_witness(n: usize, s: [usize; 3]) -> Result<Vec<Vec<usize>>> {
    if n < 3 {
        return input_err("complete-graph witness needs n >= 3");
    }
    let [a, b, c] = s;
    if a == b || b == c || a == c || a >= n || b >= n || c >= n {
        return input_err("need three distinct vertices of the complete graph");
    }
    let all: Vec<usize> = (0..n).collect();
    Ok(clique_witness(&all, a, b, c))
}

/// The graph `K_{2p, 2q-2p+2}` with `pi_3 = p` whose line graph has
/// `pi_3 >= q`.
#[derive(Clone, Debug)]
pub struct Theorem35 {
    pub graph: Graph,
    pub line: LabeledGraph,
    /// `L(K_{a,b})` agrees with `K_a □ K_b` under the natural labelling.
    pub iso: bool,
    /// Solver result for `pi_3` of the bipartite graph.
    pub base: GlobalResult,
    /// Solver result for `pi_3` of the line graph; `LowerBound` when cut short.
    pub line_result: GlobalResult,
    /// Terminal set of `line_result`, with `q` constructed paths for it.
    pub line_terminals: VertexSet,
    pub line_family: Vec<Vec<usize>>,
    pub line_verdict: Verdict,
    /// Attempt to find `q + 1` paths for `line_terminals`.
    pub refutation: Decision,
}

/// Builds and certifies the pair of `pi_3` values `p` and `q`.
///
/// `base_opts` drives the exact solve on the bipartite graph; `line_opts`
/// bounds the solver work on the line graph, where only the constructed
/// lower bound is certified.
pub fn theorem35_instance(
    p: usize,
    q: usize,
    base_opts: &SolverOptions,
    line_opts: &SolverOptions,
) -> Result<Theorem35> {
    let coords = ProductCoordinates::new(p, q)?;
    let (a, b) = (coords.rows, coords.cols);
    let graph = generate(Family::Bipartite(a, b))?;
    let line = line_graph(&graph)?;
    let iso = natural_iso_check(a, b)?;
    let base = global_connectivity(&graph, 3, Variant::Pi, base_opts)?;
    let line_result = global_connectivity(&line.graph, 3, Variant::Pi, line_opts)?;
    let line_terminals = line_result.terminals.clone();

    // line-graph vertex a_i b_j is product vertex (u_i, v_j)
    let to_product = |v: usize| match line.labels[v] {
        Provenance::Edge(i, j) => coords.vertex(i, j - a),
        Provenance::Pair(..) => unreachable!("line graph labels are edges"),
    };
    let product_to_line: Vec<usize> = {
        let mut inv = vec![usize::MAX; coords.order()];
        for v in 0..line.graph.n() {
            inv[to_product(v)] = v;
        }
        inv
    };
    let s_prod: Vec<usize> = line_terminals
        .members()
        .iter()
        .map(|&v| to_product(v))
        .collect();
    let w = lemma34_witness(p, q, &s_prod)?;
    let line_family: Vec<Vec<usize>> = w
        .family
        .iter()
        .map(|path| path.iter().map(|&v| product_to_line[v]).collect())
        .collect();
    let line_verdict = verify_family(&line.graph, &line_terminals, &line_family, Variant::Pi);
    if !line_verdict.valid && iso {
        return Err(Error::Construction(format!(
            "transferred family invalid: {}",
            line_verdict.reason
        )));
    }
    let refutation = pack_at_least(&line.graph, &line_terminals, q + 1, Variant::Pi, line_opts)?;
    Ok(Theorem35 {
        graph,
        line,
        iso,
        base,
        line_result,
        line_terminals,
        line_family,
        line_verdict,
        refutation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::k_subsets;
    use crate::steiner::obs13_formula;

    #[test]
    fn complete_graph_sizes() {
        assert_eq!(complete_graph_witness(6, [0, 3, 5]).unwrap().len(), 3);
        assert_eq!(complete_graph_witness(5, [4, 1, 2]).unwrap().len(), 2);
        assert_eq!(complete_graph_witness(3, [0, 1, 2]).unwrap().len(), 1);
        assert!(complete_graph_witness(2, [0, 1, 1]).is_err());
        assert!(complete_graph_witness(4, [0, 1, 1]).is_err());
    }

    #[test]
    fn complete_graph_witness_is_valid_and_optimal_size() {
        for n in 3..=12 {
            let g = generate(Family::Complete(n)).unwrap();
            for t in k_subsets(n, 3).into_iter().step_by(7) {
                let fam = complete_graph_witness(n, [t[2], t[0], t[1]]).unwrap();
                assert_eq!(fam.len(), obs13_formula(n, 3), "n={n}");
                let s = VertexSet::new(&g, t.iter().copied()).unwrap();
                let v = verify_family(&g, &s, &fam, Variant::Pi);
                assert!(v.valid, "n={n}: {}", v.reason);
            }
        }
    }

    #[test]
    fn smallest_theorem_instance() {
        let o = SolverOptions::default().with_node_limit(50_000);
        let t = theorem35_instance(2, 3, &SolverOptions::default(), &o).unwrap();
        assert!(t.iso);
        assert_eq!(t.graph.n(), 8);
        assert_eq!(t.base.value, 2);
        assert_eq!(t.base.certificate.status, crate::steiner::Status::Exact);
        assert!(t.line_verdict.valid);
        assert_eq!(t.line_family.len(), 3);
        assert!(t.line_result.value >= 3);
        if let Decision::Yes(c) = &t.refutation {
            c.validate(&t.line.graph).unwrap();
        }
    }
}
