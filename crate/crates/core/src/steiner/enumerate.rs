//! Enumeration of minimal Steiner witnesses: paths whose two ends are
//! terminals, and trees whose leaves are all terminals.
//!
//! Both enumerators work on `u64` vertex masks, so hosts are limited to
//! 64 vertices.

use crate::error::{input_err, Result};
use crate::graph::{Graph, VertexSet};

pub const MAX_VERTICES: usize = 64;

/// Enumerated witnesses plus flags describing how complete the list is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration<T> {
    pub items: Vec<T>,
    /// The count cap was hit; `items` is a prefix of the DFS order.
    pub truncated: bool,
    /// Some witness was skipped because it needed more than the allowed
    /// number of non-terminal vertices.
    pub limited: bool,
}

impl<T> Enumeration<T> {
    pub fn is_complete(&self) -> bool {
        !self.truncated && !self.limited
    }
}

pub(crate) fn check_host(g: &Graph, s: &VertexSet) -> Result<()> {
    if g.n() > MAX_VERTICES {
        return input_err(format!(
            "witness enumeration supports at most {MAX_VERTICES} vertices"
        ));
    }
    if let Some(&bad) = s.members().iter().find(|&&v| v >= g.n()) {
        return input_err(format!("terminal {bad} out of range"));
    }
    Ok(())
}

fn neighbor_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

struct PathSearch<'a> {
    nb: &'a [u64],
    terminals: u64,
    max_internal: usize,
    cap: usize,
    start: usize,
    out: Vec<Vec<usize>>,
    truncated: bool,
    limited: bool,
}

impl PathSearch<'_> {
    fn reachable(&self, from: usize, allowed: u64) -> u64 {
        let mut reach = self.nb[from] & allowed;
        let mut frontier = reach;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |acc, v| acc | self.nb[v]) & allowed & !reach;
            reach |= next;
            frontier = next;
        }
        reach
    }

    fn extend(&mut self, path: &mut Vec<usize>, visited: u64, left: u64, internal: usize) {
        if self.truncated {
            return;
        }
        let end = *path.last().unwrap();
        if left != 0 && self.reachable(end, !visited) & left != left {
            return;
        }
        for nxt in bits(self.nb[end] & !visited) {
            let bit = 1u64 << nxt;
            if self.terminals & bit == 0 {
                if internal == self.max_internal {
                    self.limited = true;
                    continue;
                }
                path.push(nxt);
                self.extend(path, visited | bit, left, internal + 1);
                path.pop();
            } else if left == bit {
                // last terminal closes the path; keep the orientation whose
                // first vertex is the smaller end
                if nxt > self.start {
                    if self.out.len() == self.cap {
                        self.truncated = true;
                        return;
                    }
                    path.push(nxt);
                    self.out.push(path.clone());
                    path.pop();
                }
            } else {
                path.push(nxt);
                self.extend(path, visited | bit, left & !bit, internal);
                path.pop();
            }
            if self.truncated {
                return;
            }
        }
    }
}

/// Minimal S-paths with at most `max_internal` non-terminal vertices, in
/// canonical orientation (smaller end first), sorted by length then
/// lexicographically.
pub fn enumerate_paths_limited(
    g: &Graph,
    s: &VertexSet,
    max_internal: usize,
    cap: usize,
) -> Result<Enumeration<Vec<usize>>> {
    check_host(g, s)?;
    if s.len() < 2 {
        return input_err("minimal S-paths need at least two terminals");
    }
    let nb = neighbor_masks(g);
    let terminals = s.members().iter().fold(0u64, |m, &v| m | 1 << v);
    let mut search = PathSearch {
        nb: &nb,
        terminals,
        max_internal,
        cap,
        start: 0,
        out: Vec::new(),
        truncated: false,
        limited: false,
    };
    for &start in s.members() {
        search.start = start;
        let bit = 1u64 << start;
        search.extend(&mut vec![start], bit, terminals & !bit, 0);
        if search.truncated {
            break;
        }
    }
    let mut items = search.out;
    items.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(Enumeration {
        items,
        truncated: search.truncated,
        limited: search.limited,
    })
}

/// All minimal S-paths (both ends in `S`, every terminal on the path), up to
/// reversal. At most `cap` are returned; the `truncated` flag reports a cut.
pub fn enumerate_minimal_spaths(
    g: &Graph,
    s: &VertexSet,
    cap: usize,
) -> Result<Enumeration<Vec<usize>>> {
    enumerate_paths_limited(g, s, g.n(), cap)
}

/// Minimal Steiner trees (all leaves terminals) using at most `max_internal`
/// non-terminal vertices. Each tree is a sorted edge list. Output is sorted by
/// edge count, then lexicographically.
pub fn enumerate_trees_limited(
    g: &Graph,
    s: &VertexSet,
    max_internal: usize,
    cap: usize,
) -> Result<Enumeration<Vec<(usize, usize)>>> {
    check_host(g, s)?;
    if s.len() < 2 {
        return input_err("Steiner trees need at least two terminals");
    }
    let nb = neighbor_masks(g);
    let terminals = s.members().iter().fold(0u64, |m, &v| m | 1 << v);
    let others: Vec<usize> = (0..g.n()).filter(|v| terminals & 1 << v == 0).collect();
    let mut out = Vec::new();
    let mut truncated = false;
    let limited = others.len() > max_internal;
    'sizes: for size in 0..=others.len().min(max_internal) {
        for chosen in crate::graph::k_subsets(others.len(), size) {
            let steiner = chosen.iter().fold(0u64, |m, &i| m | 1 << others[i]);
            let span = terminals | steiner;
            // every steiner vertex needs two neighbours inside the span
            if bits(steiner).any(|v| (nb[v] & span).count_ones() < 2) {
                continue;
            }
            let edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .copied()
                .filter(|&(a, b)| span & 1 << a != 0 && span & 1 << b != 0)
                .collect();
            let mut trees = SpanningTrees {
                edges: &edges,
                steiner,
                need: span.count_ones() as usize - 1,
                parent: (0..g.n()).collect(),
                picked: Vec::new(),
                out: &mut out,
                cap,
                truncated: false,
            };
            trees.search(0);
            if trees.truncated {
                truncated = true;
                break 'sizes;
            }
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(Enumeration {
        items: out,
        truncated,
        limited,
    })
}

pub fn enumerate_minimal_trees(
    g: &Graph,
    s: &VertexSet,
    cap: usize,
) -> Result<Enumeration<Vec<(usize, usize)>>> {
    enumerate_trees_limited(g, s, g.n(), cap)
}

struct SpanningTrees<'a> {
    edges: &'a [(usize, usize)],
    steiner: u64,
    need: usize,
    parent: Vec<usize>,
    picked: Vec<(usize, usize)>,
    out: &'a mut Vec<Vec<(usize, usize)>>,
    cap: usize,
    truncated: bool,
}

impl SpanningTrees<'_> {
    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn search(&mut self, from: usize) {
        if self.truncated {
            return;
        }
        if self.picked.len() == self.need {
            let ok = bits(self.steiner).all(|v| {
                self.picked
                    .iter()
                    .filter(|&&(a, b)| a == v || b == v)
                    .count()
                    >= 2
            });
            if ok {
                if self.out.len() == self.cap {
                    self.truncated = true;
                    return;
                }
                self.out.push(self.picked.clone());
            }
            return;
        }
        if self.edges.len() - from < self.need - self.picked.len() {
            return;
        }
        let (a, b) = self.edges[from];
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.picked.push((a, b));
            self.search(from + 1);
            self.picked.pop();
            self.parent[ra] = ra;
        }
        self.search(from + 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn set(g: &Graph, v: &[usize]) -> VertexSet {
        VertexSet::new(g, v.iter().copied()).unwrap()
    }

    #[test]
    fn triangle_has_three_orders() {
        let k3 = generate(Family::Complete(3)).unwrap();
        let e = enumerate_minimal_spaths(&k3, &set(&k3, &[0, 1, 2]), 100).unwrap();
        assert_eq!(e.items, vec![vec![0, 1, 2], vec![0, 2, 1], vec![1, 0, 2]]);
        assert!(e.is_complete());
    }

    #[test]
    fn path_endpoints_give_one_path() {
        let p4 = generate(Family::Path(4)).unwrap();
        let e = enumerate_minimal_spaths(&p4, &set(&p4, &[0, 3]), 100).unwrap();
        assert_eq!(e.items, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn k4_three_terminals() {
        let k4 = generate(Family::Complete(4)).unwrap();
        let e = enumerate_minimal_spaths(&k4, &set(&k4, &[0, 1, 2]), 100).unwrap();
        assert_eq!(e.items.len(), 9);
    }

    #[test]
    fn cap_truncates() {
        let k4 = generate(Family::Complete(4)).unwrap();
        let e = enumerate_minimal_spaths(&k4, &set(&k4, &[0, 1, 2]), 4).unwrap();
        assert_eq!(e.items.len(), 4);
        assert!(e.truncated && !e.is_complete());
    }

    #[test]
    fn limited_paths_flag_skips() {
        let k4 = generate(Family::Complete(4)).unwrap();
        let e = enumerate_paths_limited(&k4, &set(&k4, &[0, 1, 2]), 0, 100).unwrap();
        assert_eq!(e.items.len(), 3);
        assert!(e.limited);
    }

    #[test]
    fn trees_of_triangle_and_claw() {
        let k3 = generate(Family::Complete(3)).unwrap();
        let t = enumerate_minimal_trees(&k3, &set(&k3, &[0, 1, 2]), 100).unwrap();
        assert_eq!(t.items.len(), 3);
        let star = generate(Family::Star(3)).unwrap();
        let t = enumerate_minimal_trees(&star, &set(&star, &[1, 2, 3]), 100).unwrap();
        assert_eq!(t.items, vec![vec![(0, 1), (0, 2), (0, 3)]]);
        // the centre alone is not a minimal tree for {0,1}: only the edge is
        let t = enumerate_minimal_trees(&star, &set(&star, &[0, 1]), 100).unwrap();
        assert_eq!(t.items, vec![vec![(0, 1)]]);
    }

    #[test]
    fn disconnected_terminals_have_no_witness() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let s = set(&g, &[0, 2]);
        assert!(enumerate_minimal_spaths(&g, &s, 10)
            .unwrap()
            .items
            .is_empty());
        assert!(enumerate_minimal_trees(&g, &s, 10)
            .unwrap()
            .items
            .is_empty());
    }
}
