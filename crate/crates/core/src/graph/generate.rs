use super::Graph;
use crate::error::{input_err, Result};

/// The named graph families.
///
/// Labelling is fixed: `Bipartite(a, b)` puts part A on `0..a` and part B on
/// `a..a+b`; `Star(n)` is `K_{1,n}` with centre `0`; `H1` is the triangle
/// `0,1,2` with pendant vertex `i + 3` attached to `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Bipartite(usize, usize),
    Star(usize),
    Path(usize),
    Cycle(usize),
    H1,
}

impl Family {
    /// Parses a family name and its numeric parameters, e.g. `("bipartite", [4, 4])`.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Self> {
        let arity = |want: usize| -> Result<()> {
            if params.len() == want {
                Ok(())
            } else {
                input_err(format!(
                    "family {name} takes {want} parameter(s), got {}",
                    params.len()
                ))
            }
        };
        match name {
            "complete" => arity(1).map(|_| Family::Complete(params[0])),
            "bipartite" => arity(2).map(|_| Family::Bipartite(params[0], params[1])),
            "star" => arity(1).map(|_| Family::Star(params[0])),
            "path" => arity(1).map(|_| Family::Path(params[0])),
            "cycle" => arity(1).map(|_| Family::Cycle(params[0])),
            "h1" => arity(0).map(|_| Family::H1),
            _ => input_err(format!("unknown family {name:?}")),
        }
    }
}

pub fn generate(family: Family) -> Result<Graph> {
    let positive = |x: usize, what: &str| {
        if x == 0 {
            input_err(format!("{what} must be at least 1"))
        } else {
            Ok(())
        }
    };
    match family {
        Family::Complete(n) => {
            positive(n, "complete graph order")?;
            Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
        }
        Family::Bipartite(a, b) => {
            positive(a, "bipartite part size")?;
            positive(b, "bipartite part size")?;
            Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
        Family::Star(n) => {
            positive(n, "star leaf count")?;
            Graph::new(n + 1, (1..=n).map(|j| (0, j)))
        }
        Family::Path(n) => {
            positive(n, "path order")?;
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return input_err("cycle order must be at least 3");
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::H1 => Graph::new(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &Graph) -> Vec<usize> {
        let mut d: Vec<_> = (0..g.n()).map(|v| g.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[test]
    fn family_sizes() {
        let k4 = generate(Family::Complete(4)).unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        let h1 = generate(Family::H1).unwrap();
        assert_eq!((h1.n(), h1.m()), (6, 6));
        assert_eq!(degrees(&h1), vec![3, 3, 3, 1, 1, 1]);
        let k44 = generate(Family::Bipartite(4, 4)).unwrap();
        assert_eq!((k44.n(), k44.m()), (8, 16));
        let star = generate(Family::Star(5)).unwrap();
        assert_eq!((star.n(), star.m(), star.degree(0)), (6, 5, 5));
        assert_eq!(generate(Family::Path(1)).unwrap().m(), 0);
        assert_eq!(generate(Family::Cycle(3)).unwrap().m(), 3);
    }

    #[test]
    fn invalid_sizes() {
        assert!(generate(Family::Complete(0)).is_err());
        assert!(generate(Family::Cycle(2)).is_err());
        assert!(generate(Family::Bipartite(0, 3)).is_err());
        assert!(Family::from_name("bipartite", &[3]).is_err());
        assert!(Family::from_name("wheel", &[3]).is_err());
    }

    #[test]
    fn handshake_on_every_family() {
        let fams = [
            Family::Complete(7),
            Family::Bipartite(3, 5),
            Family::Star(6),
            Family::Path(5),
            Family::Cycle(9),
            Family::H1,
        ];
        for f in fams {
            let g = generate(f).unwrap();
            assert_eq!(g.degree_sum(), 2 * g.m(), "{f:?}");
        }
    }
}
