use super::Variant;
use crate::error::{input_err, Result};
use crate::graph::{components, connectivity, is_connected, min_degree, Graph, VertexSet};

/// What the bound is taken over: one terminal set, or every set of a given size.
#[derive(Clone, Copy, Debug)]
pub enum BoundTarget<'a> {
    Terminals(&'a VertexSet),
    Order(usize),
}

/// `floor((2n + k^2 - 3k) / (2(k - 1)))`, the number of internally disjoint
/// S-paths in `K_n` for `|S| = k >= 3`.
pub fn obs13_formula(n: usize, k: usize) -> usize {
    assert!(k >= 2, "formula needs k >= 2");
    (2 * n + k * k - 3 * k) / (2 * (k - 1))
}

/// Upper bound on the local (for a terminal set) or global (for an order `k`)
/// parameter.
///
/// Applied bounds: the minimum degree; one less when two adjacent vertices
/// of that degree can both be terminals and `k >= 3`; the complete-graph
/// formula for `pi`; the vertex connectivity for the internally disjoint
/// variants at the global level, where a separating set can avoid the
/// terminals. Disconnected hosts give `0`.
pub fn upper_bound(g: &Graph, target: BoundTarget<'_>, variant: Variant) -> Result<usize> {
    match target {
        BoundTarget::Terminals(s) => Ok(local_upper_bound(g, s, variant, true)),
        BoundTarget::Order(k) => global_upper_bound(g, k, variant),
    }
}

fn global_upper_bound(g: &Graph, k: usize, variant: Variant) -> Result<usize> {
    let n = g.n();
    if k == 0 || n == 0 {
        return input_err("k and n must be positive");
    }
    if !is_connected(g) {
        return Ok(0);
    }
    if k == 1 {
        return Ok(min_degree(g));
    }
    if k > n {
        return Ok(1);
    }
    let delta = min_degree(g);
    let mut ub = delta;
    if k >= 3 {
        let adjacent_pair = g
            .edges()
            .iter()
            .any(|&(a, b)| g.degree(a) == delta && g.degree(b) == delta);
        if adjacent_pair {
            ub = ub.min(delta.saturating_sub(1));
        }
    }
    if variant == Variant::Pi && k >= 3 {
        ub = ub.min(obs13_formula(n, k));
    }
    if variant.internally_disjoint() {
        let kappa = connectivity(g);
        if g.is_complete() || k <= n - kappa {
            ub = ub.min(kappa);
        }
    }
    Ok(ub)
}

/// Local bound used to stop the packing search early. Besides the degree
/// bounds it applies, for paths, the terminal degree budget: every minimal
/// S-path uses `2k - 2` edge-ends at terminals.
pub(crate) fn local_upper_bound(
    g: &Graph,
    s: &VertexSet,
    variant: Variant,
    use_formula: bool,
) -> usize {
    let ts = s.members();
    let k = ts.len();
    if !same_component(g, ts) {
        return 0;
    }
    let d = ts.iter().map(|&t| g.degree(t)).min().unwrap_or(0);
    let mut ub = d;
    if k >= 3 {
        let pair = ts.iter().enumerate().any(|(i, &a)| {
            ts[i + 1..]
                .iter()
                .any(|&b| g.has_edge(a, b) && g.degree(a) == d && g.degree(b) == d)
        });
        if pair {
            ub = ub.min(d.saturating_sub(1));
        }
    }
    if !variant.uses_trees() && k >= 2 {
        let budget: usize = ts.iter().map(|&t| g.degree(t)).sum();
        ub = ub.min(budget / (2 * k - 2));
        if variant == Variant::Pi && use_formula && k >= 3 {
            ub = ub.min(obs13_formula(g.n(), k));
        }
    }
    ub
}

pub(crate) fn same_component(g: &Graph, ts: &[usize]) -> bool {
    let Some(&first) = ts.first() else {
        return true;
    };
    components(g)
        .into_iter()
        .find(|c| c.binary_search(&first).is_ok())
        .is_some_and(|c| ts.iter().all(|t| c.binary_search(t).is_ok()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn global_examples() {
        let c5 = generate(Family::Cycle(5)).unwrap();
        assert_eq!(
            upper_bound(&c5, BoundTarget::Order(3), Variant::Pi).unwrap(),
            1
        );
        let k6 = generate(Family::Complete(6)).unwrap();
        assert_eq!(
            upper_bound(&k6, BoundTarget::Order(3), Variant::Pi).unwrap(),
            3
        );
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        for k in 1..=4 {
            assert_eq!(
                upper_bound(&split, BoundTarget::Order(k), Variant::Pi).unwrap(),
                0
            );
        }
    }

    #[test]
    fn degree_drop_needs_three_terminals() {
        // K_n has pi_2 = n - 1 = delta, so the adjacent-pair rule must not fire at k = 2
        let k5 = generate(Family::Complete(5)).unwrap();
        assert_eq!(
            upper_bound(&k5, BoundTarget::Order(2), Variant::Pi).unwrap(),
            4
        );
        assert_eq!(
            upper_bound(&k5, BoundTarget::Order(3), Variant::Omega).unwrap(),
            3
        );
    }

    #[test]
    fn formula_values() {
        assert_eq!(obs13_formula(6, 3), 3);
        assert_eq!(obs13_formula(7, 3), 3);
        assert_eq!(obs13_formula(5, 4), 2);
        assert_eq!(obs13_formula(7, 4), 3);
        assert_eq!(obs13_formula(3, 3), 1);
    }

    #[test]
    fn local_bound_uses_terminal_degrees() {
        let star = generate(Family::Star(4)).unwrap();
        let s = VertexSet::new(&star, [1, 2, 3]).unwrap();
        assert_eq!(local_upper_bound(&star, &s, Variant::Pi, true), 0);
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let s = VertexSet::new(&split, [0, 2]).unwrap();
        assert_eq!(local_upper_bound(&split, &s, Variant::Lambda, true), 0);
    }
}
