//! Line graphs and Cartesian products, with each vertex carrying the object
//! of the source graph(s) it came from.

use crate::error::{input_err, Error, Result};
use crate::graph::{generate, parse_graph, serialize_graph, Family, Graph};
use std::collections::BTreeSet;
use std::fmt;

/// Where a vertex of a derived graph came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    /// Vertex of a line graph: the source edge `{a, b}`, `a < b`.
    Edge(usize, usize),
    /// Vertex of a product: the coordinate pair `(u, v)`.
    Pair(usize, usize),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Edge(a, b) => write!(f, "edge:{a}-{b}"),
            Provenance::Pair(u, v) => write!(f, "pair:{u},{v}"),
        }
    }
}

impl std::str::FromStr for Provenance {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let two = |body: &str, sep: char| -> Option<(usize, usize)> {
            let (a, b) = body.split_once(sep)?;
            Some((a.parse().ok()?, b.parse().ok()?))
        };
        if let Some(body) = s.strip_prefix("edge:") {
            two(body, '-').map(|(a, b)| Provenance::Edge(a, b))
        } else if let Some(body) = s.strip_prefix("pair:") {
            two(body, ',').map(|(u, v)| Provenance::Pair(u, v))
        } else {
            None
        }
        .ok_or_else(|| format!("bad provenance {s:?}"))
    }
}

/// A graph whose vertex `i` is labelled by `labels[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<Provenance>,
}

impl LabeledGraph {
    /// Vertex carrying `label`, if any.
    pub fn vertex_of(&self, label: Provenance) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Edge-list text with one `# label <vertex> <provenance>` comment per vertex.
    pub fn to_text(&self) -> String {
        let mut out: Vec<String> = self
            .labels
            .iter()
            .enumerate()
            .map(|(v, l)| format!("# label {v} {l}"))
            .collect();
        out.push(serialize_graph(&self.graph));
        out.join("\n")
    }

    /// Inverse of [`LabeledGraph::to_text`]; every vertex must be labelled exactly once.
    pub fn from_text(text: &str) -> Result<Self> {
        let graph = parse_graph(text)?;
        let mut labels = vec![None; graph.n()];
        for (idx, raw) in text.lines().enumerate() {
            let Some(rest) = raw.trim().strip_prefix("# label ") else {
                continue;
            };
            let bad = |message: String| Error::Parse {
                line: idx + 1,
                message,
            };
            let (v, prov) = rest
                .split_once(' ')
                .ok_or_else(|| bad("label needs a vertex and a provenance".into()))?;
            let v: usize = v.parse().map_err(|_| bad(format!("bad vertex {v:?}")))?;
            let prov: Provenance = prov.trim().parse().map_err(bad)?;
            match labels.get_mut(v) {
                Some(slot @ None) => *slot = Some(prov),
                Some(Some(_)) => return Err(bad(format!("vertex {v} labelled twice"))),
                None => return Err(bad(format!("label for missing vertex {v}"))),
            }
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(v, l)| l.ok_or_else(|| Error::Input(format!("vertex {v} has no label"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { graph, labels })
    }
}

/// `L(G)`: one vertex per edge of `G` (in canonical edge order), adjacent
/// when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<LabeledGraph> {
    if g.m() == 0 {
        return input_err("line graph of an edgeless graph");
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        incident[a].push(i);
        incident[b].push(i);
    }
    let mut edges = Vec::new();
    for list in &incident {
        for (x, &e) in list.iter().enumerate() {
            edges.extend(list[x + 1..].iter().map(|&f| (e, f)));
        }
    }
    let graph = Graph::new(g.m(), edges)?;
    let labels = g
        .edges()
        .iter()
        .map(|&(a, b)| Provenance::Edge(a, b))
        .collect();
    Ok(LabeledGraph { graph, labels })
}

/// `L(L(...L(G)))`, `times` deep. Labels refer to the edges of the
/// second-to-last graph only.
pub fn iterated_line_graph(g: &Graph, times: usize) -> Result<LabeledGraph> {
    if times == 0 {
        return input_err("iteration count must be at least 1");
    }
    let mut cur = line_graph(g)?;
    for _ in 1..times {
        cur = line_graph(&cur.graph)?;
    }
    Ok(cur)
}

/// Flat identifier of product vertex `(u, v)` in `G □ H`.
pub fn product_vertex(h_order: usize, u: usize, v: usize) -> usize {
    u * h_order + v
}

/// `G □ H` on `V(G) × V(H)`; vertex `(u, v)` is `u * |V(H)| + v`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<LabeledGraph> {
    if g.n() == 0 || h.n() == 0 {
        return input_err("product factors must be nonempty");
    }
    let nh = h.n();
    let mut edges = Vec::with_capacity(g.n() * h.m() + nh * g.m());
    for u in 0..g.n() {
        edges.extend(
            h.edges()
                .iter()
                .map(|&(v, w)| (product_vertex(nh, u, v), product_vertex(nh, u, w))),
        );
    }
    for v in 0..nh {
        edges.extend(
            g.edges()
                .iter()
                .map(|&(u, w)| (product_vertex(nh, u, v), product_vertex(nh, w, v))),
        );
    }
    let graph = Graph::new(g.n() * nh, edges)?;
    let labels = (0..g.n())
        .flat_map(|u| (0..nh).map(move |v| Provenance::Pair(u, v)))
        .collect();
    Ok(LabeledGraph { graph, labels })
}

fn edge_set(edges: impl IntoIterator<Item = (usize, usize)>) -> BTreeSet<(usize, usize)> {
    edges
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect()
}

/// Checks that `L(K_{r,s})` and `K_r □ K_s` coincide under
/// `a_i b_j ↦ (u_i, v_j)`.
pub fn natural_iso_check(r: usize, s: usize) -> Result<bool> {
    if r == 0 || s == 0 {
        return input_err("r and s must be at least 1");
    }
    let krs = generate(Family::Bipartite(r, s))?;
    let lg = line_graph(&krs)?;
    let prod = cartesian_product(
        &generate(Family::Complete(r))?,
        &generate(Family::Complete(s))?,
    )?;
    let to_product: Vec<usize> = lg
        .labels
        .iter()
        .map(|&l| match l {
            Provenance::Edge(a, b) => product_vertex(s, a, b - r),
            Provenance::Pair(..) => unreachable!("line graph labels are edges"),
        })
        .collect();
    let mapped = edge_set(
        lg.graph
            .edges()
            .iter()
            .map(|&(x, y)| (to_product[x], to_product[y])),
    );
    Ok(lg.graph.n() == prod.graph.n() && mapped == edge_set(prod.graph.edges().iter().copied()))
}

/// Checks that `(u, v) ↦ (v, u)` carries `G □ H` onto `H □ G` edge for edge.
pub fn commutativity_check(g: &Graph, h: &Graph) -> Result<bool> {
    let gh = cartesian_product(g, h)?;
    let hg = cartesian_product(h, g)?;
    let swap = |x: usize| {
        let (u, v) = (x / h.n(), x % h.n());
        product_vertex(g.n(), v, u)
    };
    let mapped = edge_set(gh.graph.edges().iter().map(|&(a, b)| (swap(a), swap(b))));
    Ok(mapped == edge_set(hg.graph.edges().iter().copied()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::min_degree;
    use proptest::prelude::*;

    fn fam(f: Family) -> Graph {
        generate(f).unwrap()
    }

    fn random_graph() -> impl Strategy<Value = Graph> {
        (2usize..9).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 1..20).prop_filter_map(
                "needs an edge",
                move |raw| {
                    let g =
                        Graph::from_pairs_dedup(n, raw.into_iter().filter(|(a, b)| a != b)).ok()?;
                    (g.m() > 0).then_some(g)
                },
            )
        })
    }

    #[test]
    fn line_graph_examples() {
        let claw = line_graph(&fam(Family::Star(3))).unwrap();
        assert_eq!(claw.graph, fam(Family::Complete(3)));
        let p4 = line_graph(&fam(Family::Path(4))).unwrap();
        assert_eq!(p4.graph, fam(Family::Path(3)));
        let k4 = line_graph(&fam(Family::Complete(4))).unwrap();
        assert_eq!((k4.graph.n(), k4.graph.m()), (6, 12));
        assert!(line_graph(&Graph::empty(3)).is_err());
    }

    #[test]
    fn product_examples() {
        let k2 = fam(Family::Complete(2));
        let c4 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(
            (c4.graph.n(), c4.graph.m(), min_degree(&c4.graph)),
            (4, 4, 2)
        );
        let k4 = fam(Family::Complete(4));
        let k44 = cartesian_product(&k4, &k4).unwrap();
        assert_eq!((k44.graph.n(), k44.graph.m()), (16, 48));
        assert!((0..16).all(|v| k44.graph.degree(v) == 6));
        let prism = cartesian_product(&k2, &fam(Family::Complete(3))).unwrap();
        assert_eq!((prism.graph.n(), prism.graph.m()), (6, 9));
    }

    #[test]
    fn natural_isomorphism_small_range() {
        for r in 1..=6 {
            for s in 1..=6 {
                assert!(natural_iso_check(r, s).unwrap(), "({r},{s})");
            }
        }
    }

    #[test]
    fn commutativity_examples() {
        let k2 = fam(Family::Complete(2));
        assert!(commutativity_check(&k2, &fam(Family::Complete(3))).unwrap());
        assert!(commutativity_check(&fam(Family::Cycle(4)), &k2).unwrap());
        let g = fam(Family::H1);
        assert!(commutativity_check(&fam(Family::Complete(1)), &g).unwrap());
        let id = cartesian_product(&fam(Family::Complete(1)), &g).unwrap();
        assert_eq!(id.graph, g);
        assert!(id
            .labels
            .iter()
            .enumerate()
            .all(|(i, &l)| l == Provenance::Pair(0, i)));
    }

    #[test]
    fn line_graph_of_cycle_is_rotated_cycle() {
        for n in 3..=10 {
            let c = fam(Family::Cycle(n));
            let lg = line_graph(&c).unwrap();
            // labelling edge {i, i+1} by i gives the identity onto C_n
            let rot: Vec<usize> = lg
                .labels
                .iter()
                .map(|&l| match l {
                    Provenance::Edge(0, b) if b == n - 1 => n - 1,
                    Provenance::Edge(a, _) => a,
                    _ => unreachable!(),
                })
                .collect();
            let mapped = edge_set(lg.graph.edges().iter().map(|&(a, b)| (rot[a], rot[b])));
            assert_eq!(mapped, edge_set(c.edges().iter().copied()), "C_{n}");
        }
    }

    #[test]
    fn labels_survive_text_round_trip() {
        let lg = line_graph(&fam(Family::H1)).unwrap();
        assert_eq!(LabeledGraph::from_text(&lg.to_text()).unwrap(), lg);
        let pr = cartesian_product(&fam(Family::Path(2)), &fam(Family::Cycle(3))).unwrap();
        assert_eq!(LabeledGraph::from_text(&pr.to_text()).unwrap(), pr);
        assert!(LabeledGraph::from_text("n 1").is_err());
    }

    #[test]
    fn iterated_line_graph_of_k4() {
        let ll = iterated_line_graph(&fam(Family::Complete(4)), 2).unwrap();
        assert_eq!((ll.graph.n(), ll.graph.m()), (12, 36));
    }

    proptest! {
        #[test]
        fn line_graph_counts(g in random_graph()) {
            let lg = line_graph(&g).unwrap();
            prop_assert_eq!(lg.graph.n(), g.m());
            let expect: usize = (0..g.n()).map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2).sum();
            prop_assert_eq!(lg.graph.m(), expect);
            for (i, &(a, b)) in g.edges().iter().enumerate() {
                prop_assert_eq!(lg.graph.degree(i), g.degree(a) + g.degree(b) - 2);
            }
        }

        #[test]
        fn product_degrees(g in random_graph(), h in random_graph()) {
            let p = cartesian_product(&g, &h).unwrap();
            prop_assert_eq!(p.graph.n(), g.n() * h.n());
            for u in 0..g.n() {
                for v in 0..h.n() {
                    prop_assert_eq!(p.graph.degree(product_vertex(h.n(), u, v)), g.degree(u) + h.degree(v));
                }
            }
            prop_assert!(commutativity_check(&g, &h).unwrap());
        }
    }
}
