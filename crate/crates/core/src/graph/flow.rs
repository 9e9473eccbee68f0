//! Unit-capacity augmenting-path max flow, sized for the small networks built
//! by the connectivity routines.

use std::collections::VecDeque;

struct Arc {
    to: usize,
    cap: u32,
    rev: usize,
}

pub(super) struct Network {
    arcs: Vec<Vec<Arc>>,
}

impl Network {
    pub(super) fn new(nodes: usize) -> Self {
        Self {
            arcs: (0..nodes).map(|_| Vec::new()).collect(),
        }
    }

    pub(super) fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let rev_from = self.arcs[to].len();
        let rev_to = self.arcs[from].len();
        self.arcs[from].push(Arc {
            to,
            cap,
            rev: rev_from,
        });
        self.arcs[to].push(Arc {
            to: from,
            cap: 0,
            rev: rev_to,
        });
    }

    /// Pushes unit augmentations from `s` to `t`, stopping once `limit` is reached.
    pub(super) fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        let nodes = self.arcs.len();
        let mut pred: Vec<Option<(usize, usize)>> = vec![None; nodes];
        while flow < limit {
            pred.iter_mut().for_each(|p| *p = None);
            let mut seen = vec![false; nodes];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(x) = queue.pop_front() {
                for (i, arc) in self.arcs[x].iter().enumerate() {
                    if arc.cap > 0 && !seen[arc.to] {
                        seen[arc.to] = true;
                        pred[arc.to] = Some((x, i));
                        if arc.to == t {
                            break 'bfs;
                        }
                        queue.push_back(arc.to);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut y = t;
            while let Some((x, i)) = pred[y] {
                let rev = self.arcs[x][i].rev;
                self.arcs[x][i].cap -= 1;
                self.arcs[y][rev].cap += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }
}
