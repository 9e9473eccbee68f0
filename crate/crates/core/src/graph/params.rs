use super::flow::Network;
use super::Graph;
use crate::error::{input_err, Result};

/// Minimum degree; `0` for the empty vertex set.
pub fn min_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).min().unwrap_or(0)
}

/// Connected components, each sorted, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    components_avoiding(g, &vec![false; g.n()])
}

fn components_avoiding(g: &Graph, removed: &[bool]) -> Vec<Vec<usize>> {
    let mut label = vec![usize::MAX; g.n()];
    let mut out = Vec::new();
    for start in 0..g.n() {
        if removed[start] || label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut comp = vec![start];
        label[start] = id;
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            for &y in g.neighbors(x) {
                if !removed[y] && label[y] == usize::MAX {
                    label[y] = id;
                    comp.push(y);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

/// Maximum number of internally disjoint `a`–`b` paths (the edge `ab`, if
/// present, counts as one path).
pub fn local_vertex_connectivity(g: &Graph, a: usize, b: usize) -> usize {
    local_vertex_connectivity_capped(g, a, b, usize::MAX)
}

fn local_vertex_connectivity_capped(g: &Graph, a: usize, b: usize, limit: usize) -> usize {
    assert_ne!(a, b);
    let big = g.n() as u32 + 1;
    // vertex v splits into in-node 2v and out-node 2v+1
    let mut net = Network::new(2 * g.n());
    for v in 0..g.n() {
        let cap = if v == a || v == b { big } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, cap);
    }
    let direct = g.has_edge(a, b);
    for &(x, y) in g.edges() {
        if direct && (x, y) == (a.min(b), a.max(b)) {
            continue;
        }
        net.add_arc(2 * x + 1, 2 * y, 1);
        net.add_arc(2 * y + 1, 2 * x, 1);
    }
    let extra = usize::from(direct);
    extra + net.max_flow(2 * a + 1, 2 * b, limit.saturating_sub(extra))
}

/// Maximum number of edge-disjoint `a`–`b` paths.
pub fn local_edge_connectivity(g: &Graph, a: usize, b: usize) -> usize {
    local_edge_connectivity_capped(g, a, b, usize::MAX)
}

fn local_edge_connectivity_capped(g: &Graph, a: usize, b: usize, limit: usize) -> usize {
    assert_ne!(a, b);
    let mut net = Network::new(g.n());
    for &(x, y) in g.edges() {
        net.add_arc(x, y, 1);
        net.add_arc(y, x, 1);
    }
    net.max_flow(a, b, limit)
}

/// Vertex connectivity by Menger's theorem: the minimum, over non-adjacent
/// pairs, of the number of internally disjoint paths. Complete graphs get
/// `n - 1`; disconnected graphs get `0`.
pub fn connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    if !is_connected(g) {
        return 0;
    }
    let mut best = n - 1;
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                best = best.min(local_vertex_connectivity_capped(g, a, b, best));
            }
        }
    }
    best
}

/// Vertex connectivity by exhaustive search for the smallest separating set.
/// Exponential in `n`; used to cross-check [`connectivity`].
pub fn connectivity_by_cuts(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 24, "exhaustive cut search is limited to 24 vertices");
    if n <= 1 {
        return 0;
    }
    for size in 0..n {
        let breaks = super::k_subsets(n, size).into_iter().any(|cut| {
            let mut removed = vec![false; n];
            cut.iter().for_each(|&v| removed[v] = true);
            n - size <= 1 || components_avoiding(g, &removed).len() >= 2
        });
        if breaks {
            return size;
        }
    }
    n - 1
}

/// Edge connectivity; `0` for disconnected graphs and single vertices.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 || !is_connected(g) {
        return 0;
    }
    let mut best = min_degree(g);
    for b in 1..n {
        best = best.min(local_edge_connectivity_capped(g, 0, b, best));
    }
    best
}

/// Fewest vertices whose removal leaves at least `k` components or fewer
/// than `k` vertices. Exhaustive over vertex subsets.
pub fn k_connectivity_cut(g: &Graph, k: usize) -> Result<usize> {
    let n = g.n();
    if k < 2 {
        return input_err("k must be at least 2");
    }
    if k > n {
        return input_err(format!("k = {k} exceeds the vertex count {n}"));
    }
    if n > 24 {
        return input_err("cut search is limited to 24 vertices");
    }
    for size in 0..=n {
        if n - size < k {
            return Ok(size);
        }
        let hit = super::k_subsets(n, size).into_iter().any(|cut| {
            let mut removed = vec![false; n];
            cut.iter().for_each(|&v| removed[v] = true);
            components_avoiding(g, &removed).len() >= k
        });
        if hit {
            return Ok(size);
        }
    }
    Ok(n)
}

/// Connected, at least three vertices, no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && connectivity(g) >= 2
}

pub fn is_two_edge_connected(g: &Graph) -> bool {
    g.n() >= 2 && edge_connectivity(g) >= 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn fam(f: Family) -> Graph {
        generate(f).unwrap()
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(min_degree(&fam(Family::Complete(6))), 5);
        assert_eq!(min_degree(&fam(Family::H1)), 1);
        assert_eq!(min_degree(&fam(Family::Bipartite(3, 5))), 3);
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(connectivity(&fam(Family::Complete(5))), 4);
        assert_eq!(connectivity(&fam(Family::Cycle(5))), 2);
        assert_eq!(connectivity(&fam(Family::H1)), 1);
        assert_eq!(connectivity(&Graph::empty(3)), 0);
        assert_eq!(connectivity(&Graph::empty(1)), 0);
    }

    #[test]
    fn edge_connectivity_examples() {
        assert_eq!(edge_connectivity(&fam(Family::Complete(4))), 3);
        assert_eq!(edge_connectivity(&fam(Family::Cycle(6))), 2);
        assert_eq!(edge_connectivity(&fam(Family::Star(5))), 1);
        assert_eq!(edge_connectivity(&Graph::empty(2)), 0);
    }

    #[test]
    fn cut_k_connectivity_examples() {
        assert_eq!(k_connectivity_cut(&fam(Family::H1), 3).unwrap(), 2);
        assert_eq!(k_connectivity_cut(&fam(Family::Complete(4)), 2).unwrap(), 3);
        assert_eq!(k_connectivity_cut(&fam(Family::Star(5)), 3).unwrap(), 1);
        assert!(k_connectivity_cut(&fam(Family::Complete(3)), 4).is_err());
    }

    #[test]
    fn star_cut_by_subset_brute_force() {
        // removing any single vertex of K_{1,5}: only the centre leaves >= 3 pieces
        let star = fam(Family::Star(5));
        let hits: Vec<usize> = (0..6)
            .filter(|&v| {
                let mut removed = vec![false; 6];
                removed[v] = true;
                components_avoiding(&star, &removed).len() >= 3
            })
            .collect();
        assert_eq!(hits, vec![0]);
    }

    #[test]
    fn disconnected_graph_conventions() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(connectivity(&g), 0);
        assert_eq!(edge_connectivity(&g), 0);
        assert_eq!(k_connectivity_cut(&g, 2).unwrap(), 0);
        assert!(!is_two_connected(&g));
    }

    #[test]
    fn local_connectivity_counts_direct_edge() {
        let k4 = fam(Family::Complete(4));
        assert_eq!(local_vertex_connectivity(&k4, 0, 1), 3);
        assert_eq!(local_edge_connectivity(&k4, 0, 1), 3);
    }
}
