//! Text names for generated graphs, e.g. `hypercube:4`, `cartesian:K4,K4`,
//! `ring:Q3*4:identity`, `randreg:10,3,seed=7`.
//!
//! Operands of `cartesian`, `matching` and `ring` are atoms: `K<n>`, `C<n>`,
//! `Q<n>`, `K<a>_<b>` or `Petersen`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{
    cartesian_product, circulant, complete, complete_bipartite, cycle, hypercube, matching_join,
    petersen, random_regular, remark25_graph, remark27_graph, ring_join, star_composite,
    toroidal_mesh, FamilyError, Matching,
};
use crate::graph::Graph;
use crate::io::graph6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("bad family spec `{spec}`: {reason}")]
pub struct SpecParseError {
    pub spec: String,
    pub reason: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchingRule {
    Identity,
    Seed(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Bipartite(usize, usize),
    Cycle(usize),
    Petersen,
    Hypercube(usize),
    Star { n: usize, h: usize },
    Remark25,
    Remark27(usize),
    Cartesian(Vec<FamilySpec>),
    Matching {
        parts: Box<(FamilySpec, FamilySpec)>,
        rule: MatchingRule,
    },
    Ring {
        parts: Vec<FamilySpec>,
        rule: MatchingRule,
    },
    Circulant { n: usize, d: usize },
    Torus(Vec<usize>),
    RandomRegular { n: usize, k: usize, seed: u64 },
    Graph6(String),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        use FamilySpec::*;
        match self {
            Complete(n) => complete(*n),
            Bipartite(a, b) => complete_bipartite(*a, *b),
            Cycle(n) => cycle(*n),
            Petersen => Ok(petersen()),
            Hypercube(n) => hypercube(*n),
            Star { n, h } => star_composite(*n, *h),
            Remark25 => Ok(remark25_graph()),
            Remark27(t) => remark27_graph(*t),
            Cartesian(ops) => {
                let mut g = ops[0].build()?;
                for op in &ops[1..] {
                    g = cartesian_product(&g, &op.build()?)?;
                }
                Ok(g)
            }
            Matching { parts, rule } => {
                let g0 = parts.0.build()?;
                let g1 = parts.1.build()?;
                matching_join(&g0, &g1, &rule.matching(g0.order(), 0))
            }
            Ring { parts, rule } => {
                let graphs = parts.iter().map(|p| p.build()).collect::<Result<Vec<_>, _>>()?;
                let n = graphs[0].order();
                let ms: Vec<_> = (0..graphs.len()).map(|i| rule.matching(n, i as u64)).collect();
                ring_join(&graphs, &ms)
            }
            Circulant { n, d } => circulant(*n, *d),
            Torus(dims) => toroidal_mesh(dims),
            RandomRegular { n, k, seed } => random_regular(*n, *k, *seed),
            Graph6(s) => graph6::decode(s).map_err(|e| FamilyError::BadParam(e.to_string())),
        }
    }

    /// Whether the family is vertex-transitive by construction.
    pub fn vertex_transitive(&self) -> bool {
        use FamilySpec::*;
        match self {
            Complete(_) | Cycle(_) | Petersen | Hypercube(_) | Circulant { .. } | Torus(_) => true,
            Bipartite(a, b) => a == b,
            Cartesian(ops) => ops.iter().all(FamilySpec::vertex_transitive),
            // G × K2 and G × C_m when all parts coincide and the matchings are identities.
            Matching { parts, rule } => {
                *rule == MatchingRule::Identity && parts.0 == parts.1 && parts.0.vertex_transitive()
            }
            Ring { parts, rule } => {
                *rule == MatchingRule::Identity
                    && parts.iter().all(|p| p == &parts[0])
                    && parts[0].vertex_transitive()
            }
            Star { .. } | Remark25 | Remark27(_) | RandomRegular { .. } | Graph6(_) => false,
        }
    }

    /// The two halves when the graph is a two-part matching composition.
    /// `Q_n` counts as `Q_{n−1}` joined to itself by the identity.
    pub fn matching_parts(&self) -> Option<(FamilySpec, FamilySpec)> {
        match self {
            FamilySpec::Matching { parts, .. } => Some((parts.0.clone(), parts.1.clone())),
            FamilySpec::Hypercube(n) if *n >= 2 => {
                Some((FamilySpec::Hypercube(n - 1), FamilySpec::Hypercube(n - 1)))
            }
            _ => None,
        }
    }

    /// The parts when the graph is a ring composition of at least three parts.
    /// `C(d1, …, dn)` counts as a ring of `d1` copies of `C(d2, …, dn)`.
    pub fn ring_parts(&self) -> Option<Vec<FamilySpec>> {
        match self {
            FamilySpec::Ring { parts, .. } => Some(parts.clone()),
            FamilySpec::Torus(dims) if dims.len() >= 2 => {
                let rest = match &dims[1..] {
                    [d] => FamilySpec::Cycle(*d),
                    more => FamilySpec::Torus(more.to_vec()),
                };
                Some(vec![rest; dims[0]])
            }
            _ => None,
        }
    }

    fn is_atom(&self) -> bool {
        matches!(
            self,
            FamilySpec::Complete(_)
                | FamilySpec::Cycle(_)
                | FamilySpec::Hypercube(_)
                | FamilySpec::Bipartite(..)
                | FamilySpec::Petersen
        )
    }

    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "K{n}"),
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Hypercube(n) => write!(f, "Q{n}"),
            FamilySpec::Bipartite(a, b) => write!(f, "K{a}_{b}"),
            FamilySpec::Petersen => write!(f, "Petersen"),
            _ => unreachable!("not an atom"),
        }
    }
}

impl MatchingRule {
    /// Matching for the `index`-th join of a composition.
    pub fn matching(&self, n: usize, index: u64) -> Matching {
        match self {
            MatchingRule::Identity => Matching::identity(n),
            MatchingRule::Seed(s) => Matching::seeded(n, s.wrapping_add(index)),
        }
    }
}

impl fmt::Display for MatchingRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingRule::Identity => write!(f, "identity"),
            MatchingRule::Seed(s) => write!(f, "seed={s}"),
        }
    }
}

fn join_nums(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Complete(n) => write!(f, "complete:{n}"),
            Bipartite(a, b) => write!(f, "bipartite:{a},{b}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Petersen => write!(f, "petersen"),
            Hypercube(n) => write!(f, "hypercube:{n}"),
            Star { n, h } => write!(f, "star:{n},{h}"),
            Remark25 => write!(f, "remark25"),
            Remark27(t) => write!(f, "remark27:{t}"),
            Cartesian(ops) => {
                write!(f, "cartesian:")?;
                for (i, op) in ops.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    op.fmt_atom(f)?;
                }
                Ok(())
            }
            Matching { parts, rule } => {
                write!(f, "matching:")?;
                parts.0.fmt_atom(f)?;
                write!(f, ",")?;
                parts.1.fmt_atom(f)?;
                write!(f, ":{rule}")
            }
            Ring { parts, rule } => {
                write!(f, "ring:")?;
                if parts.iter().all(|p| p == &parts[0]) {
                    parts[0].fmt_atom(f)?;
                    write!(f, "*{}", parts.len())?;
                } else {
                    for (i, p) in parts.iter().enumerate() {
                        if i > 0 {
                            write!(f, ",")?;
                        }
                        p.fmt_atom(f)?;
                    }
                }
                write!(f, ":{rule}")
            }
            Circulant { n, d } => write!(f, "circulant:{n},{d}"),
            Torus(dims) => write!(f, "torus:{}", join_nums(dims)),
            RandomRegular { n, k, seed } => write!(f, "randreg:{n},{k},seed={seed}"),
            Graph6(s) => write!(f, "g6:{s}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, SpecParseError> {
        let fail = |reason: &str| SpecParseError {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let s_trim = s.trim();
        let (tag, rest) = match s_trim.split_once(':') {
            Some((t, r)) => (t, Some(r)),
            None => (s_trim, None),
        };
        let nums = |r: Option<&str>, count: usize| -> Result<Vec<usize>, SpecParseError> {
            let r = r.ok_or_else(|| fail("missing parameters"))?;
            let v: Vec<usize> = r
                .split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| fail("parameters must be non-negative integers"))?;
            if count > 0 && v.len() != count {
                return Err(fail(&format!("expected {count} parameter(s)")));
            }
            Ok(v)
        };
        let none = |r: Option<&str>| match r {
            None => Ok(()),
            Some(_) => Err(fail("takes no parameters")),
        };
        use FamilySpec::*;
        let spec = match tag.to_ascii_lowercase().as_str() {
            "complete" => Complete(nums(rest, 1)?[0]),
            "bipartite" => {
                let v = nums(rest, 2)?;
                Bipartite(v[0], v[1])
            }
            "cycle" => Cycle(nums(rest, 1)?[0]),
            "petersen" => {
                none(rest)?;
                Petersen
            }
            "hypercube" => Hypercube(nums(rest, 1)?[0]),
            "star" => {
                let v = nums(rest, 2)?;
                Star { n: v[0], h: v[1] }
            }
            "remark25" => {
                none(rest)?;
                Remark25
            }
            "remark27" => Remark27(nums(rest, 1)?[0]),
            "circulant" => {
                let v = nums(rest, 2)?;
                Circulant { n: v[0], d: v[1] }
            }
            "torus" => Torus(nums(rest, 0)?),
            "cartesian" => {
                let r = rest.ok_or_else(|| fail("missing operands"))?;
                let ops = r.split(',').map(parse_atom).collect::<Option<Vec<_>>>();
                let ops = ops.ok_or_else(|| fail("unknown operand"))?;
                if ops.len() < 2 {
                    return Err(fail("cartesian needs at least two operands"));
                }
                Cartesian(ops)
            }
            "matching" => {
                let r = rest.ok_or_else(|| fail("missing operands"))?;
                let (body, rule) = split_rule(r).ok_or_else(|| fail("bad matching rule"))?;
                let ops = body.split(',').map(parse_atom).collect::<Option<Vec<_>>>();
                match ops.as_deref() {
                    Some([a, b]) => Matching {
                        parts: Box::new((a.clone(), b.clone())),
                        rule,
                    },
                    _ => return Err(fail("matching needs two atom operands")),
                }
            }
            "ring" => {
                let r = rest.ok_or_else(|| fail("missing operands"))?;
                let (body, rule) = split_rule(r).ok_or_else(|| fail("bad matching rule"))?;
                let parts = if let Some((atom, m)) = body.split_once('*') {
                    let atom = parse_atom(atom).ok_or_else(|| fail("unknown operand"))?;
                    let m: usize = m.trim().parse().map_err(|_| fail("bad part count"))?;
                    vec![atom; m]
                } else {
                    body.split(',')
                        .map(parse_atom)
                        .collect::<Option<Vec<_>>>()
                        .ok_or_else(|| fail("unknown operand"))?
                };
                if parts.is_empty() {
                    return Err(fail("ring needs parts"));
                }
                Ring { parts, rule }
            }
            "randreg" => {
                let r = rest.ok_or_else(|| fail("missing parameters"))?;
                let fields: Vec<&str> = r.split(',').map(str::trim).collect();
                let [n, k, seed] = fields.as_slice() else {
                    return Err(fail("expected n,k,seed=S"));
                };
                let seed = seed
                    .strip_prefix("seed=")
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| fail("expected seed=S"))?;
                RandomRegular {
                    n: n.parse().map_err(|_| fail("bad n"))?,
                    k: k.parse().map_err(|_| fail("bad k"))?,
                    seed,
                }
            }
            "g6" => Graph6(rest.ok_or_else(|| fail("missing graph6 string"))?.to_string()),
            _ => return Err(fail("unknown family")),
        };
        Ok(spec)
    }
}

/// Splits an optional trailing `:identity` / `:seed=S`.
fn split_rule(r: &str) -> Option<(&str, MatchingRule)> {
    match r.rsplit_once(':') {
        None => Some((r, MatchingRule::Identity)),
        Some((body, "identity")) => Some((body, MatchingRule::Identity)),
        Some((body, rule)) => {
            let s = rule.strip_prefix("seed=")?.parse().ok()?;
            Some((body, MatchingRule::Seed(s)))
        }
    }
}

fn parse_atom(a: &str) -> Option<FamilySpec> {
    let a = a.trim();
    if a.eq_ignore_ascii_case("petersen") {
        return Some(FamilySpec::Petersen);
    }
    let (head, tail) = a.split_at(a.char_indices().nth(1)?.0);
    match head {
        "K" => match tail.split_once('_') {
            Some((x, y)) => Some(FamilySpec::Bipartite(x.parse().ok()?, y.parse().ok()?)),
            None => Some(FamilySpec::Complete(tail.parse().ok()?)),
        },
        "C" => Some(FamilySpec::Cycle(tail.parse().ok()?)),
        "Q" => Some(FamilySpec::Hypercube(tail.parse().ok()?)),
        _ => None,
    }
    .filter(FamilySpec::is_atom)
}
