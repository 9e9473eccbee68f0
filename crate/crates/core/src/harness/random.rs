use crate::error::{input_err, Result};
use crate::graph::{is_connected, is_two_connected, is_two_edge_connected, Graph};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Requirement {
    None,
    Connected,
    TwoConnected,
    TwoEdgeConnected,
}

impl Requirement {
    pub fn holds(self, g: &Graph) -> bool {
        match self {
            Requirement::None => true,
            Requirement::Connected => is_connected(g),
            Requirement::TwoConnected => is_two_connected(g),
            Requirement::TwoEdgeConnected => is_two_edge_connected(g),
        }
    }
}

/// Seeded random graph model.
///
/// Each attempt draws `n` uniformly from the vertex range, then `m`
/// uniformly from the edge range clipped to `[0, n(n-1)/2]`, then a uniform
/// `m`-subset of the vertex pairs. Attempts failing the requirement are
/// discarded. The stream is ChaCha8 seeded with `seed`, so the output is a
/// pure function of the spec.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RandomGraphSpec {
    pub seed: u64,
    pub vertices: (usize, usize),
    pub edges: (usize, usize),
    pub requirement: Requirement,
}

const MAX_ATTEMPTS: usize = 200_000;

impl RandomGraphSpec {
    pub fn sample(&self, count: usize) -> Result<Vec<Graph>> {
        let (nlo, nhi) = self.vertices;
        if nlo == 0 || nlo > nhi || self.edges.0 > self.edges.1 {
            return input_err("empty vertex or edge range");
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut out = Vec::with_capacity(count);
        let mut attempts = 0;
        while out.len() < count {
            attempts += 1;
            if attempts > MAX_ATTEMPTS {
                return input_err("requirement is too rarely met in the given ranges");
            }
            let n = rng.gen_range(nlo..=nhi);
            let pairs = n * (n - 1) / 2;
            let (mlo, mhi) = (self.edges.0.min(pairs), self.edges.1.min(pairs));
            let m = rng.gen_range(mlo..=mhi);
            let edges = sample(&mut rng, pairs, m)
                .into_iter()
                .map(|i| pair_at(n, i));
            let g = Graph::new(n, edges).expect("distinct pairs form a simple graph");
            if self.requirement.holds(&g) {
                out.push(g);
            }
        }
        Ok(out)
    }
}

/// The `i`-th pair `(a, b)`, `a < b`, in lexicographic order.
fn pair_at(n: usize, mut i: usize) -> (usize, usize) {
    for a in 0..n {
        let row = n - 1 - a;
        if i < row {
            return (a, a + 1 + i);
        }
        i -= row;
    }
    unreachable!("pair index out of range")
}
