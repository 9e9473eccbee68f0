//! Exact maximum set packing over small resource universes.
//!
//! Every candidate witness is reduced to the set of resources it consumes
//! (non-terminal vertices and terminal-terminal edges for the internally
//! disjoint variants, edges for the edge-disjoint ones). Two witnesses are
//! compatible iff their resource sets are disjoint.
//!
//! The search branches on the resource used by the fewest remaining
//! candidates: one branch per candidate containing it, plus one branch in
//! which no chosen witness uses it. Nodes are pruned with weighted capacity
//! bounds: for any non-negative weighting `w` of the resources, a packing of
//! `t` candidates satisfies `t * min_c w(c) <= sum_r w(r)` over the resources
//! still in play.

use std::time::Instant;

/// Flat bitset arena: candidate `i` owns `sets[i * words..(i + 1) * words]`.
#[derive(Clone, Debug)]
pub(crate) struct Arena {
    pub words: usize,
    pub resources: usize,
    pub sets: Vec<u64>,
}

impl Arena {
    pub fn new(resources: usize) -> Self {
        Self {
            words: resources.div_ceil(64).max(1),
            resources,
            sets: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.sets.len() / self.words
    }

    pub fn push(&mut self, members: impl IntoIterator<Item = usize>) {
        let base = self.sets.len();
        self.sets.resize(base + self.words, 0);
        for r in members {
            debug_assert!(r < self.resources);
            self.sets[base + r / 64] |= 1 << (r % 64);
        }
    }

    pub fn set(&self, i: usize) -> &[u64] {
        &self.sets[i * self.words..(i + 1) * self.words]
    }

    fn disjoint(&self, i: usize, j: usize) -> bool {
        self.set(i).iter().zip(self.set(j)).all(|(a, b)| a & b == 0)
    }

    fn contains(&self, i: usize, r: usize) -> bool {
        self.set(i)[r / 64] & (1 << (r % 64)) != 0
    }

    fn members(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.set(i).iter().enumerate().flat_map(|(w, &word)| {
            let mut m = word;
            std::iter::from_fn(move || {
                (m != 0).then(|| {
                    let b = m.trailing_zeros() as usize;
                    m &= m - 1;
                    w * 64 + b
                })
            })
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum SearchEnd {
    /// The search space was exhausted; `best` is optimal.
    Complete,
    /// A packing of the requested size was found.
    Reached,
    TimedOut,
    NodeLimit,
}

#[derive(Clone, Debug)]
pub(crate) struct Packing {
    pub chosen: Vec<usize>,
    pub end: SearchEnd,
}

/// Controls for one packing search.
pub(crate) struct Goal {
    /// Stop as soon as a packing of this size is found.
    pub stop_at: usize,
    /// Only packings of at least this size are of interest; subtrees that
    /// cannot reach it are pruned even when they could improve `best`.
    pub need: usize,
    pub deadline: Option<Instant>,
    pub node_limit: Option<u64>,
    /// Extra resource weightings supplied by the caller.
    pub weightings: Vec<Vec<f64>>,
}

struct Search<'a> {
    arena: &'a Arena,
    weights: Vec<Vec<f64>>,
    cand_weight: Vec<Vec<f64>>,
    goal: &'a Goal,
    best: Vec<usize>,
    chosen: Vec<usize>,
    nodes: u64,
    timed_out: bool,
    out_of_nodes: bool,
    reached: bool,
    counts: Vec<u32>,
}

const EPS: f64 = 1e-9;

/// Nodes every search may expand before the wall-clock deadline is honoured,
/// so a late start still makes some progress.
const GRACE_NODES: u64 = 2048;

impl Search<'_> {
    fn bound(&self, remaining: &[usize]) -> usize {
        let words = self.arena.words;
        let mut union = vec![0u64; words];
        for &c in remaining {
            for (u, s) in union.iter_mut().zip(self.arena.set(c)) {
                *u |= s;
            }
        }
        let mut ub = remaining.len();
        for (w, cw) in self.weights.iter().zip(&self.cand_weight) {
            let min_c = remaining
                .iter()
                .map(|&c| cw[c])
                .fold(f64::INFINITY, f64::min);
            if min_c <= EPS {
                continue;
            }
            let total: f64 = union
                .iter()
                .enumerate()
                .flat_map(|(i, &word)| {
                    let mut m = word;
                    std::iter::from_fn(move || {
                        (m != 0).then(|| {
                            let b = m.trailing_zeros() as usize;
                            m &= m - 1;
                            i * 64 + b
                        })
                    })
                })
                .map(|r| w[r])
                .sum();
            ub = ub.min((total / min_c + EPS).floor() as usize);
        }
        ub
    }

    fn halted(&self) -> bool {
        self.reached || self.timed_out || self.out_of_nodes
    }

    fn floor(&self) -> usize {
        self.best.len().max(self.goal.need.saturating_sub(1))
    }

    fn run(&mut self, remaining: Vec<usize>) {
        if self.halted() {
            return;
        }
        self.nodes += 1;
        if self.goal.node_limit.is_some_and(|l| self.nodes > l) {
            self.out_of_nodes = true;
            return;
        }
        if self.nodes >= GRACE_NODES && self.nodes.is_multiple_of(256) {
            if let Some(d) = self.goal.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                    return;
                }
            }
        }
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
            if self.best.len() >= self.goal.stop_at {
                self.reached = true;
                return;
            }
        }
        if remaining.is_empty() {
            return;
        }
        if self.chosen.len() + self.bound(&remaining) <= self.floor() {
            return;
        }
        let pivot = self.pivot(&remaining);
        let with: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&c| self.arena.contains(c, pivot))
            .collect();
        for &c in &with {
            let next: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&d| d != c && self.arena.disjoint(c, d))
                .collect();
            self.chosen.push(c);
            self.run(next);
            self.chosen.pop();
            if self.halted() {
                return;
            }
        }
        let without: Vec<usize> = remaining
            .into_iter()
            .filter(|&c| !self.arena.contains(c, pivot))
            .collect();
        self.run(without);
    }

    /// Resource appearing in the fewest remaining candidates.
    fn pivot(&mut self, remaining: &[usize]) -> usize {
        self.counts.iter_mut().for_each(|c| *c = 0);
        for &c in remaining {
            for r in self.arena.members(c) {
                self.counts[r] += 1;
            }
        }
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .min_by_key(|(r, &n)| (n, *r))
            .map(|(r, _)| r)
            .expect("remaining candidates use at least one resource")
    }
}

fn candidate_weights(arena: &Arena, w: &[f64]) -> Vec<f64> {
    (0..arena.len())
        .map(|c| arena.members(c).map(|r| w[r]).sum())
        .collect()
}

/// Approximate optimal dual weighting by multiplicative updates: repeatedly
/// raise the weight of every resource used by the currently lightest
/// candidate. Every intermediate weighting is a valid bound; the best one
/// seen is returned.
pub(crate) fn dual_weighting(arena: &Arena, work_limit: usize) -> Vec<f64> {
    let n = arena.len();
    let mut w = vec![1.0f64; arena.resources];
    if n == 0 {
        return w;
    }
    let used: Vec<usize> = {
        let mut union = vec![0u64; arena.words];
        for c in 0..n {
            for (u, s) in union.iter_mut().zip(arena.set(c)) {
                *u |= s;
            }
        }
        (0..arena.resources)
            .filter(|r| union[r / 64] & (1 << (r % 64)) != 0)
            .collect()
    };
    let total_bits: usize = (0..n).map(|c| arena.members(c).count()).sum();
    let iters = (work_limit / total_bits.max(1)).clamp(4, 3000);
    let mut best = w.clone();
    let mut best_ratio = f64::INFINITY;
    let mut cw = candidate_weights(arena, &w);
    for _ in 0..iters {
        let (light, &min_c) = cw
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .unwrap();
        let total: f64 = used.iter().map(|&r| w[r]).sum();
        let ratio = total / min_c;
        if ratio < best_ratio {
            best_ratio = ratio;
            best.clone_from(&w);
        }
        let bumped: Vec<usize> = arena.members(light).collect();
        for &r in &bumped {
            w[r] *= 1.1;
        }
        let scale = used.iter().map(|&r| w[r]).fold(0.0, f64::max);
        if scale > 1e100 {
            w.iter_mut().for_each(|x| *x /= scale);
        }
        cw = candidate_weights(arena, &w);
    }
    best
}

/// Runs the branch and bound over all candidates of `arena`.
pub(crate) fn pack(arena: &Arena, goal: &Goal) -> Packing {
    let mut weights = goal.weightings.clone();
    weights.push(vec![1.0; arena.resources]);
    let cand_weight = weights
        .iter()
        .map(|w| candidate_weights(arena, w))
        .collect();
    let mut search = Search {
        arena,
        weights,
        cand_weight,
        goal,
        best: Vec::new(),
        chosen: Vec::new(),
        nodes: 0,
        timed_out: false,
        out_of_nodes: false,
        reached: goal.stop_at == 0,
        counts: vec![0; arena.resources],
    };
    search.run((0..arena.len()).collect());
    let end = if search.reached {
        SearchEnd::Reached
    } else if search.timed_out {
        SearchEnd::TimedOut
    } else if search.out_of_nodes {
        SearchEnd::NodeLimit
    } else {
        SearchEnd::Complete
    };
    let mut chosen = search.best;
    chosen.sort_unstable();
    Packing { chosen, end }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arena(sets: &[&[usize]], resources: usize) -> Arena {
        let mut a = Arena::new(resources);
        for s in sets {
            a.push(s.iter().copied());
        }
        a
    }

    fn goal(stop_at: usize) -> Goal {
        Goal {
            stop_at,
            need: 0,
            deadline: None,
            node_limit: None,
            weightings: Vec::new(),
        }
    }

    #[test]
    fn finds_maximum_packing() {
        let a = arena(&[&[0, 1], &[1, 2], &[2, 3], &[3, 0], &[4]], 5);
        let p = pack(&a, &goal(usize::MAX));
        assert_eq!(p.end, SearchEnd::Complete);
        assert_eq!(p.chosen.len(), 3);
    }

    #[test]
    fn stops_at_target() {
        let a = arena(&[&[0], &[1], &[2], &[3]], 4);
        let p = pack(&a, &goal(2));
        assert_eq!(p.end, SearchEnd::Reached);
        assert_eq!(p.chosen.len(), 2);
    }

    #[test]
    fn need_prunes_without_losing_feasible_answers() {
        let a = arena(&[&[0, 1], &[1, 2], &[0, 2]], 3);
        let mut g = goal(2);
        g.need = 2;
        let p = pack(&a, &g);
        assert_eq!(p.end, SearchEnd::Complete);
        assert!(p.chosen.len() < 2);
    }

    #[test]
    fn dual_weighting_bounds_bipartite_style_instances() {
        // every candidate uses two of the four "scarce" resources 0..4
        let a = arena(
            &[&[0, 1, 4], &[2, 3, 5], &[0, 2, 6], &[1, 3, 7], &[0, 3, 8]],
            9,
        );
        let w = dual_weighting(&a, 100_000);
        let cw = candidate_weights(&a, &w);
        let min_c = cw.iter().copied().fold(f64::INFINITY, f64::min);
        let total: f64 = w.iter().sum();
        assert!(total / min_c >= 2.0 - 1e-9);
    }

    #[test]
    fn node_limit_cuts_search() {
        let sets: Vec<Vec<usize>> = (0..12).map(|i| vec![i % 6, 6 + i / 2]).collect();
        let refs: Vec<&[usize]> = sets.iter().map(|s| s.as_slice()).collect();
        let a = arena(&refs, 12);
        let mut g = goal(usize::MAX);
        g.node_limit = Some(3);
        assert_eq!(pack(&a, &g).end, SearchEnd::NodeLimit);
    }

    #[test]
    fn members_iterate_across_words() {
        let a = arena(&[&[3, 64, 130]], 131);
        assert_eq!(a.words, 3);
        assert_eq!(a.members(0).collect::<Vec<_>>(), vec![3, 64, 130]);
    }
}
