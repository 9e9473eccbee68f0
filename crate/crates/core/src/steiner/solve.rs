use super::bounds::{local_upper_bound, same_component};
use super::enumerate::{check_host, enumerate_paths_limited, enumerate_trees_limited};
use super::packing::{dual_weighting, pack, Arena, Goal, Packing, SearchEnd};
use super::{Fault, PackingCertificate, SolverOptions, Status, Variant, Witness};
use crate::error::{input_err, Result};
use crate::graph::{components, is_connected, k_subsets, min_degree, Graph, VertexSet};
use rayon::prelude::*;
use std::time::Instant;

/// Nodes the first search pass may use before the dual weighting is built.
const FIRST_PASS_NODES: u64 = 20_000;
/// Work allowance for the multiplicative-weights bound.
const DUAL_WORK: usize = 20_000_000;
/// Deepening on the number of non-terminal vertices starts above this slack.
const DEEPENING_SLACK: usize = 2;

/// Answer of the decision form of the packing problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes(PackingCertificate),
    /// Exhaustive search proved that no family of the requested size exists.
    No,
    /// The budget ran out; `best` is the largest family size found.
    Unknown {
        best: usize,
    },
}

/// Minimum of the local parameter over every terminal set of one size.
#[derive(Clone, Debug)]
pub struct GlobalResult {
    pub value: usize,
    /// A terminal set attaining `value`.
    pub terminals: VertexSet,
    pub certificate: PackingCertificate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum End {
    /// A family of the requested size was found.
    Reached,
    /// No family of size `max(need, found + 1)` exists.
    Exhausted,
    /// Cut by the budget, the node limit or the enumeration cap.
    Cut,
}

struct Outcome {
    family: Vec<Witness>,
    ub: usize,
    end: End,
}

impl Outcome {
    fn exact(&self, need: usize) -> bool {
        self.family.len() >= self.ub
            || (self.end == End::Exhausted && need <= self.family.len() + 1)
    }
}

struct Request {
    stop_at: usize,
    need: usize,
    deadline: Option<Instant>,
}

fn solve(
    g: &Graph,
    s: &VertexSet,
    variant: Variant,
    opts: &SolverOptions,
    req: &Request,
) -> Result<Outcome> {
    check_host(g, s)?;
    let ts = s.members();
    if ts.len() == 1 {
        let t = ts[0];
        let family: Vec<Witness> = g
            .neighbors(t)
            .iter()
            .map(|&w| {
                if variant.uses_trees() {
                    Witness::Tree(vec![(t.min(w), t.max(w))])
                } else {
                    Witness::Path(vec![t, w])
                }
            })
            .collect();
        let ub = family.len();
        return Ok(Outcome {
            family,
            ub,
            end: End::Exhausted,
        });
    }
    let ub = local_upper_bound(g, s, variant, opts.use_formula_bound);
    let stop = req.stop_at.min(ub);
    if stop == 0 || !same_component(g, ts) {
        return Ok(Outcome {
            family: Vec::new(),
            ub,
            end: if ub == 0 {
                End::Exhausted
            } else {
                End::Reached
            },
        });
    }
    let n = g.n();
    let slack = n - ts.len();
    let mut levels: Vec<usize> = Vec::new();
    if slack > DEEPENING_SLACK {
        levels.extend((2..slack).step_by(2));
    }
    levels.push(slack);

    let mut best: Vec<Witness> = Vec::new();
    for level in levels {
        let (witnesses, complete_list) = candidates(g, s, variant, level, opts.enumeration_cap)?;
        let arena = resource_arena(g, s, variant, &witnesses);
        let need = req.need.max(best.len() + 1);
        let packing = two_phase(
            g,
            s,
            variant,
            &arena,
            stop,
            need,
            req.deadline,
            opts.node_limit,
        );
        if packing.chosen.len() > best.len() {
            best = packing
                .chosen
                .iter()
                .map(|&i| witnesses[i].clone())
                .collect();
        }
        if best.len() >= stop {
            best.sort();
            return Ok(Outcome {
                family: best,
                ub,
                end: End::Reached,
            });
        }
        match packing.end {
            SearchEnd::Complete if complete_list => {
                best.sort();
                return Ok(Outcome {
                    family: best,
                    ub,
                    end: End::Exhausted,
                });
            }
            SearchEnd::Complete => {}
            _ => break,
        }
        if !complete_list && level == slack {
            break;
        }
    }
    best.sort();
    Ok(Outcome {
        family: best,
        ub,
        end: End::Cut,
    })
}

/// Candidate witnesses with at most `level` non-terminal vertices. The flag
/// reports whether the list holds every minimal witness.
fn candidates(
    g: &Graph,
    s: &VertexSet,
    variant: Variant,
    level: usize,
    cap: usize,
) -> Result<(Vec<Witness>, bool)> {
    if variant.uses_trees() {
        let e = enumerate_trees_limited(g, s, level, cap)?;
        let complete = e.is_complete();
        Ok((e.items.into_iter().map(Witness::Tree).collect(), complete))
    } else {
        let e = enumerate_paths_limited(g, s, level, cap)?;
        let complete = e.is_complete();
        Ok((e.items.into_iter().map(Witness::Path).collect(), complete))
    }
}

/// Resource universe: for the internally disjoint variants, non-terminal
/// vertices `0..n` plus terminal-terminal edges `n + index`; for the edge
/// variants, edge indices.
fn resource_arena(g: &Graph, s: &VertexSet, variant: Variant, witnesses: &[Witness]) -> Arena {
    let n = g.n();
    let internal = variant.internally_disjoint();
    let mut arena = Arena::new(if internal { n + g.m() } else { g.m() });
    for w in witnesses {
        let mut res = Vec::new();
        if internal {
            res.extend(w.vertices().into_iter().filter(|v| !s.contains(*v)));
        }
        for (a, b) in w.edges() {
            if !internal || (s.contains(a) && s.contains(b)) {
                let idx = g.edge_index(a, b).expect("witness edges lie in the host");
                res.push(if internal { n + idx } else { idx });
            }
        }
        arena.push(res);
    }
    arena
}

/// One weighting per terminal counting the resources that take an edge at
/// it, plus their sum. Every minimal witness pays at least one unit at each
/// terminal.
fn terminal_weightings(
    g: &Graph,
    s: &VertexSet,
    variant: Variant,
    resources: usize,
) -> Vec<Vec<f64>> {
    let n = g.n();
    let internal = variant.internally_disjoint();
    let mut per: Vec<Vec<f64>> = Vec::new();
    for &t in s.members() {
        let mut w = vec![0.0; resources];
        for &x in g.neighbors(t) {
            let idx = g.edge_index(t, x).unwrap();
            if !internal {
                w[idx] = 1.0;
            } else if s.contains(x) {
                w[n + idx] = 1.0;
            } else {
                w[x] = 1.0;
            }
        }
        per.push(w);
    }
    let sum = (0..resources)
        .map(|r| per.iter().map(|w| w[r]).sum())
        .collect();
    per.push(sum);
    per
}

#[allow(clippy::too_many_arguments)]
fn two_phase(
    g: &Graph,
    s: &VertexSet,
    variant: Variant,
    arena: &Arena,
    stop_at: usize,
    need: usize,
    deadline: Option<Instant>,
    node_limit: Option<u64>,
) -> Packing {
    let mut goal = Goal {
        stop_at,
        need,
        deadline,
        node_limit: Some(node_limit.map_or(FIRST_PASS_NODES, |l| l.min(FIRST_PASS_NODES))),
        weightings: terminal_weightings(g, s, variant, arena.resources),
    };
    let first = pack(arena, &goal);
    if first.end != SearchEnd::NodeLimit || node_limit.is_some_and(|l| l <= FIRST_PASS_NODES) {
        return first;
    }
    goal.node_limit = node_limit;
    goal.weightings.push(dual_weighting(arena, DUAL_WORK));
    let second = pack(arena, &goal);
    if second.chosen.len() < first.chosen.len() {
        Packing {
            chosen: first.chosen,
            end: second.end,
        }
    } else {
        second
    }
}

fn certificate(
    s: &VertexSet,
    variant: Variant,
    family: Vec<Witness>,
    exact: bool,
) -> PackingCertificate {
    let value = family.len();
    let status = match (exact, value) {
        (true, 0) => Status::Zero,
        (true, _) => Status::Exact,
        (false, _) => Status::LowerBound,
    };
    PackingCertificate {
        variant,
        terminals: s.clone(),
        family,
        value,
        status,
    }
}

fn deadline(opts: &SolverOptions, start: Instant) -> Option<Instant> {
    opts.budget.map(|b| start + b)
}

/// Maximum family of disjoint minimal witnesses for `s`.
///
/// The status is `Exact` when the search finished or met an upper bound,
/// `Zero` when no witness exists, and `LowerBound` when the budget, node
/// limit or enumeration cap cut it short.
pub fn local_connectivity(
    g: &Graph,
    s: &VertexSet,
    variant: Variant,
    opts: &SolverOptions,
) -> Result<PackingCertificate> {
    let req = Request {
        stop_at: usize::MAX,
        need: 0,
        deadline: deadline(opts, Instant::now()),
    };
    let out = solve(g, s, variant, opts, &req)?;
    let exact = out.exact(0);
    Ok(certificate(s, variant, out.family, exact))
}

/// Decides whether `t` disjoint witnesses for `s` exist.
pub fn pack_at_least(
    g: &Graph,
    s: &VertexSet,
    t: usize,
    variant: Variant,
    opts: &SolverOptions,
) -> Result<Decision> {
    if t == 0 {
        return input_err("target must be at least 1");
    }
    let req = Request {
        stop_at: t,
        need: t,
        deadline: deadline(opts, Instant::now()),
    };
    let out = solve(g, s, variant, opts, &req)?;
    if out.family.len() >= t {
        let exact = out.family.len() >= out.ub;
        return Ok(Decision::Yes(certificate(s, variant, out.family, exact)));
    }
    if out.ub < t || out.end == End::Exhausted {
        return Ok(Decision::No);
    }
    Ok(Decision::Unknown {
        best: out.family.len(),
    })
}

enum Local {
    /// At least the cap; `family` has exactly cap members.
    Settled(Vec<Witness>),
    Exact(Vec<Witness>),
    Lower(Vec<Witness>),
}

impl Local {
    fn family(&self) -> &[Witness] {
        match self {
            Local::Settled(f) | Local::Exact(f) | Local::Lower(f) => f,
        }
    }
}

/// Global parameter: the minimum of the local one over all `k`-subsets.
///
/// Conventions: `k = 1` gives the minimum degree; a disconnected host gives
/// `0`; `k > n` on a connected host gives `1` with an empty family. Subsets
/// are visited in order of their local upper bound; the first is solved
/// exactly and its value caps the searches on the rest, which run in
/// parallel. The reported terminal set is the first in that order attaining
/// the minimum, so the result does not depend on scheduling.
pub fn global_connectivity(
    g: &Graph,
    k: usize,
    variant: Variant,
    opts: &SolverOptions,
) -> Result<GlobalResult> {
    let mut r = global_inner(g, k, variant, opts)?;
    if opts.fault == Some(Fault::InflatePi) && variant == Variant::Pi && k >= 3 {
        r.value += 1;
        r.certificate.value += 1;
    }
    Ok(r)
}

fn global_inner(
    g: &Graph,
    k: usize,
    variant: Variant,
    opts: &SolverOptions,
) -> Result<GlobalResult> {
    let n = g.n();
    if n == 0 || k == 0 {
        return input_err("k and n must be positive");
    }
    if n > super::MAX_VERTICES {
        return input_err(format!(
            "the solver supports at most {} vertices",
            super::MAX_VERTICES
        ));
    }
    if !is_connected(g) {
        let terminals = spanning_two_components(g, k);
        return Ok(GlobalResult {
            value: 0,
            certificate: PackingCertificate {
                variant,
                terminals: terminals.clone(),
                family: Vec::new(),
                value: 0,
                status: Status::Zero,
            },
            terminals,
        });
    }
    if k > n {
        let terminals = VertexSet::from_sorted_unchecked((0..n).collect());
        return Ok(GlobalResult {
            value: 1,
            certificate: PackingCertificate {
                variant,
                terminals: terminals.clone(),
                family: Vec::new(),
                value: 1,
                status: Status::Convention,
            },
            terminals,
        });
    }
    if k == 1 {
        let delta = min_degree(g);
        let v = (0..n).find(|&v| g.degree(v) == delta).unwrap();
        let s = VertexSet::from_sorted_unchecked(vec![v]);
        let cert = local_connectivity(g, &s, variant, opts)?;
        return Ok(GlobalResult {
            value: cert.value,
            terminals: s,
            certificate: cert,
        });
    }

    let start = Instant::now();
    let full_deadline = deadline(opts, start);
    let first_deadline = opts.budget.map(|b| start + b / 2);
    let mut sets: Vec<(usize, VertexSet)> = k_subsets(n, k)
        .into_iter()
        .map(|m| {
            let s = VertexSet::from_sorted_unchecked(m);
            (local_upper_bound(g, &s, variant, opts.use_formula_bound), s)
        })
        .collect();
    sets.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.members().cmp(b.1.members())));

    let s0 = &sets[0].1;
    let req0 = Request {
        stop_at: usize::MAX,
        need: 0,
        deadline: first_deadline,
    };
    let out0 = solve(g, s0, variant, opts, &req0)?;
    let b0 = out0.family.len();
    let exact0 = out0.exact(0);
    if b0 == 0 && exact0 {
        let cert = certificate(s0, variant, out0.family, true);
        return Ok(GlobalResult {
            value: 0,
            terminals: s0.clone(),
            certificate: cert,
        });
    }

    let rest: Vec<Local> = sets[1..]
        .par_iter()
        .map(|(_, s)| -> Result<Local> {
            let req = Request {
                stop_at: b0,
                need: b0,
                deadline: full_deadline,
            };
            let out = solve(g, s, variant, opts, &req)?;
            if out.family.len() >= b0 {
                return Ok(Local::Settled(out.family));
            }
            if out.end != End::Exhausted && out.ub >= b0 {
                return Ok(Local::Lower(out.family));
            }
            let req = Request {
                stop_at: usize::MAX,
                need: 0,
                deadline: full_deadline,
            };
            let out = solve(g, s, variant, opts, &req)?;
            Ok(if out.exact(0) {
                Local::Exact(out.family)
            } else {
                Local::Lower(out.family)
            })
        })
        .collect::<Result<_>>()?;

    let mut entries: Vec<(&VertexSet, Local)> = Vec::with_capacity(sets.len());
    entries.push((
        s0,
        if exact0 {
            Local::Exact(out0.family)
        } else {
            Local::Lower(out0.family)
        },
    ));
    entries.extend(sets[1..].iter().map(|(_, s)| s).zip(rest));

    let value = entries.iter().map(|(_, l)| l.family().len()).min().unwrap();
    let pick = entries
        .iter()
        .position(|(_, l)| matches!(l, Local::Exact(f) if f.len() == value))
        .map(|i| (i, true))
        .unwrap_or_else(|| {
            let i = entries
                .iter()
                .position(|(_, l)| l.family().len() == value)
                .unwrap();
            (i, false)
        });
    let (s, local) = &entries[pick.0];
    let cert = certificate(s, variant, local.family().to_vec(), pick.1);
    Ok(GlobalResult {
        value,
        terminals: (*s).clone(),
        certificate: cert,
    })
}

/// A `k`-set meeting two components, or the whole vertex set when `k > n`.
fn spanning_two_components(g: &Graph, k: usize) -> VertexSet {
    let n = g.n();
    if k >= n {
        return VertexSet::from_sorted_unchecked((0..n).collect());
    }
    let comps = components(g);
    let mut chosen: Vec<usize> = comps.iter().take(k.min(2)).map(|c| c[0]).collect();
    for v in 0..n {
        if chosen.len() == k {
            break;
        }
        if !chosen.contains(&v) {
            chosen.push(v);
        }
    }
    chosen.sort_unstable();
    VertexSet::from_sorted_unchecked(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{connectivity, edge_connectivity, generate, Family};
    use proptest::prelude::*;

    fn opts() -> SolverOptions {
        SolverOptions::default()
    }

    fn set(g: &Graph, v: &[usize]) -> VertexSet {
        VertexSet::new(g, v.iter().copied()).unwrap()
    }

    fn global(g: &Graph, k: usize, v: Variant) -> GlobalResult {
        let r = global_connectivity(g, k, v, &opts()).unwrap();
        r.certificate.validate(g).unwrap();
        r
    }

    #[test]
    fn local_examples() {
        let k6 = generate(Family::Complete(6)).unwrap();
        let c = local_connectivity(&k6, &set(&k6, &[0, 2, 5]), Variant::Pi, &opts()).unwrap();
        assert_eq!((c.value, c.status), (3, Status::Exact));
        c.validate(&k6).unwrap();
        let c3 = generate(Family::Cycle(3)).unwrap();
        let c = local_connectivity(&c3, &set(&c3, &[0, 1, 2]), Variant::Omega, &opts()).unwrap();
        assert_eq!(c.value, 1);
        let h1 = generate(Family::H1).unwrap();
        let c = local_connectivity(&h1, &set(&h1, &[3, 4, 5]), Variant::Kappa, &opts()).unwrap();
        assert_eq!((c.value, c.status), (1, Status::Exact));
        c.validate(&h1).unwrap();
    }

    #[test]
    fn exact_without_formula_bound() {
        let k6 = generate(Family::Complete(6)).unwrap();
        let o = opts().without_formula_bound();
        let c = local_connectivity(&k6, &set(&k6, &[0, 1, 2]), Variant::Pi, &o).unwrap();
        assert_eq!((c.value, c.status), (3, Status::Exact));
    }

    #[test]
    fn global_examples() {
        let k44 = generate(Family::Bipartite(4, 4)).unwrap();
        assert_eq!(global(&k44, 3, Variant::Pi).value, 2);
        let star = generate(Family::Star(5)).unwrap();
        let r = global(&star, 3, Variant::Pi);
        assert_eq!((r.value, r.certificate.status), (0, Status::Zero));
        let c5 = generate(Family::Cycle(5)).unwrap();
        assert_eq!(global(&c5, 2, Variant::Pi).value, 2);
        let k6e = generate(Family::Complete(6)).unwrap().without_edge(0, 1);
        let r = global(&k6e, 3, Variant::Pi);
        assert_eq!((r.value, r.certificate.status), (2, Status::Exact));
    }

    #[test]
    fn conventions() {
        let k3 = generate(Family::Complete(3)).unwrap();
        let r = global(&k3, 5, Variant::Kappa);
        assert_eq!((r.value, r.certificate.status), (1, Status::Convention));
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        for k in 1..=5 {
            let r = global(&split, k, Variant::Lambda);
            assert_eq!((r.value, r.certificate.status), (0, Status::Zero));
        }
        let r = global(&split, 2, Variant::Pi);
        assert_eq!(r.terminals.members(), &[0, 2]);
        let h1 = generate(Family::H1).unwrap();
        let r = global(&h1, 1, Variant::Pi);
        assert_eq!((r.value, r.terminals.members()), (1, &[3][..]));
    }

    #[test]
    fn decisions() {
        let k44 = generate(Family::Complete(4)).unwrap();
        let prod = crate::transforms::cartesian_product(&k44, &k44)
            .unwrap()
            .graph;
        let s = set(&prod, &[0, 5, 10]);
        match pack_at_least(&prod, &s, 3, Variant::Pi, &opts()).unwrap() {
            Decision::Yes(c) => {
                assert!(c.value >= 3);
                c.validate(&prod).unwrap();
            }
            d => panic!("expected Yes, got {d:?}"),
        }
        let c3 = generate(Family::Cycle(3)).unwrap();
        assert_eq!(
            pack_at_least(&c3, &set(&c3, &[0, 1, 2]), 2, Variant::Pi, &opts()).unwrap(),
            Decision::No
        );
        let k6 = generate(Family::Complete(6)).unwrap();
        let o = opts().without_formula_bound();
        assert_eq!(
            pack_at_least(&k6, &set(&k6, &[0, 1, 2]), 4, Variant::Pi, &o).unwrap(),
            Decision::No
        );
    }

    #[test]
    fn tiny_node_limit_gives_lower_bound() {
        let k8 = generate(Family::Complete(8)).unwrap();
        let o = opts().without_formula_bound().with_node_limit(1);
        let c = local_connectivity(&k8, &set(&k8, &[0, 1, 2, 3]), Variant::Omega, &o).unwrap();
        assert_eq!(c.status, Status::LowerBound);
        c.validate(&k8).unwrap();
    }

    #[test]
    fn fault_inflates_pi_only() {
        let k5 = generate(Family::Complete(5)).unwrap();
        let mut o = opts();
        o.fault = Some(Fault::InflatePi);
        assert_eq!(
            global_connectivity(&k5, 3, Variant::Pi, &o).unwrap().value,
            3
        );
        assert_eq!(
            global_connectivity(&k5, 3, Variant::Omega, &o)
                .unwrap()
                .value,
            3
        );
        assert_eq!(
            global_connectivity(&k5, 2, Variant::Pi, &o).unwrap().value,
            4
        );
    }

    /// Independent reference: every simple path or subtree by brute force,
    /// then exhaustive maximum packing by plain recursion.
    mod oracle {
        use crate::graph::Graph;
        use std::collections::BTreeSet;

        fn paths(g: &Graph, s: &[usize]) -> Vec<BTreeSet<(usize, usize)>> {
            let mut out = Vec::new();
            fn walk(g: &Graph, s: &[usize], p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                let last = *p.last().unwrap();
                if p.len() >= 2
                    && s.contains(&last)
                    && s.iter().all(|t| p.contains(t))
                    && p[0] < last
                {
                    out.push(p.clone());
                }
                for &w in g.neighbors(last) {
                    if !p.contains(&w) {
                        p.push(w);
                        walk(g, s, p, out);
                        p.pop();
                    }
                }
            }
            let mut raw = Vec::new();
            for &a in s {
                walk(g, s, &mut vec![a], &mut raw);
            }
            for p in raw {
                out.push(
                    p.windows(2)
                        .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
                        .collect(),
                );
            }
            out
        }

        fn vertices(e: &BTreeSet<(usize, usize)>) -> BTreeSet<usize> {
            e.iter().flat_map(|&(a, b)| [a, b]).collect()
        }

        fn compatible(
            a: &BTreeSet<(usize, usize)>,
            b: &BTreeSet<(usize, usize)>,
            s: &[usize],
            internal: bool,
        ) -> bool {
            a.is_disjoint(b)
                && (!internal
                    || vertices(a)
                        .intersection(&vertices(b))
                        .all(|v| s.contains(v)))
        }

        fn best(
            c: &[BTreeSet<(usize, usize)>],
            from: usize,
            chosen: &mut Vec<usize>,
            s: &[usize],
            internal: bool,
        ) -> usize {
            let mut top = chosen.len();
            for i in from..c.len() {
                if chosen
                    .iter()
                    .all(|&j| compatible(&c[i], &c[j], s, internal))
                {
                    chosen.push(i);
                    top = top.max(best(c, i + 1, chosen, s, internal));
                    chosen.pop();
                }
            }
            top
        }

        pub fn pi_omega(g: &Graph, s: &[usize], internal: bool) -> usize {
            let c = paths(g, s);
            best(&c, 0, &mut Vec::new(), s, internal)
        }
    }

    fn small_graph() -> impl Strategy<Value = Graph> {
        (3usize..=6).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .collect();
            proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
                .prop_map(move |e| Graph::new(n, e).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn matches_brute_force(g in small_graph(), pick in proptest::collection::vec(any::<prop::sample::Index>(), 2..=4)) {
            let mut s: Vec<usize> = pick.iter().map(|i| i.index(g.n())).collect();
            s.sort_unstable();
            s.dedup();
            prop_assume!(s.len() >= 2);
            let vs = set(&g, &s);
            for (variant, internal) in [(Variant::Pi, true), (Variant::Omega, false)] {
                let c = local_connectivity(&g, &vs, variant, &opts().without_formula_bound()).unwrap();
                prop_assert!(matches!(c.status, Status::Exact | Status::Zero));
                c.validate(&g).unwrap();
                prop_assert_eq!(c.value, oracle::pi_omega(&g, &s, internal));
            }
        }

        #[test]
        fn chain_of_inequalities(g in small_graph(), pick in proptest::collection::vec(any::<prop::sample::Index>(), 3)) {
            prop_assume!(is_connected(&g));
            let mut s: Vec<usize> = pick.iter().map(|i| i.index(g.n())).collect();
            s.sort_unstable();
            s.dedup();
            prop_assume!(s.len() >= 2);
            let vs = set(&g, &s);
            let val = |v| local_connectivity(&g, &vs, v, &opts()).unwrap().value;
            let (pi, om, ka, la) = (val(Variant::Pi), val(Variant::Omega), val(Variant::Kappa), val(Variant::Lambda));
            let dmin = s.iter().map(|&t| g.degree(t)).min().unwrap();
            prop_assert!(pi <= om && om <= dmin);
            prop_assert!(pi <= ka && om <= la && ka <= la);
        }

        #[test]
        fn identities_at_small_k(g in small_graph()) {
            prop_assert_eq!(global(&g, 1, Variant::Pi).value, if is_connected(&g) { min_degree(&g) } else { 0 });
            prop_assert_eq!(global(&g, 2, Variant::Pi).value, connectivity(&g));
            prop_assert_eq!(global(&g, 2, Variant::Omega).value, edge_connectivity(&g));
        }

        #[test]
        fn adding_an_edge_never_hurts(g in small_graph(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
            let (a, b) = (a.index(g.n()), b.index(g.n()));
            prop_assume!(a != b && !g.has_edge(a, b));
            let h = g.with_edge(a, b).unwrap();
            for v in Variant::ALL {
                prop_assert!(global(&h, 3, v).value >= global(&g, 3, v).value);
            }
        }
    }
}
