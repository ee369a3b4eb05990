//! The finite small subgroups of GL(2, C): parameters, Jung-Hirzebruch
//! continued fractions, dual graphs of the minimal resolutions, and the
//! expected reconstruction-algebra quivers.
//!
//! The tetrahedral, octahedral and icosahedral families `T_m`, `O_m`, `I_m`
//! are written `m = k(b - 2) + c` with `k = 6, 12, 30` and `c` from a fixed
//! residue list. For each residue the dual graph is a star whose central
//! curve has self-intersection `-b`; `b = 2` is the base case and `b >= 3`
//! the generic family member.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, DualGraph};
use crate::quiver::ReconQuiver;

/// The five families of small subgroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    T,
    O,
    I,
}

impl Family {
    /// The modulus `k` and allowed residues `c` of a star-shaped family.
    pub fn modulus_and_residues(self) -> Option<(u64, &'static [u64])> {
        match self {
            Family::T => Some((6, &[1, 3, 5])),
            Family::O => Some((12, &[1, 5, 7, 11])),
            Family::I => Some((30, &[1, 7, 11, 13, 17, 19, 23, 29])),
            Family::A | Family::D => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::D => "D",
            Family::T => "T",
            Family::O => "O",
            Family::I => "I",
        };
        f.write_str(s)
    }
}

/// A group, identified by its family and parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupId {
    /// Cyclic group `1/r(1, a)`.
    A {
        r: u64,
        a: u64,
    },
    /// Binary dihedral type `D_{n,q}`.
    D {
        n: u64,
        q: u64,
    },
    T(u64),
    O(u64),
    I(u64),
}

impl GroupId {
    pub fn family(&self) -> Family {
        match self {
            GroupId::A { .. } => Family::A,
            GroupId::D { .. } => Family::D,
            GroupId::T(_) => Family::T,
            GroupId::O(_) => Family::O,
            GroupId::I(_) => Family::I,
        }
    }

    /// The member of a star-shaped family with residue `c` and parameter `b`.
    pub fn star(family: Family, c: u64, b: u64) -> Result<GroupId> {
        let (k, _) = family
            .modulus_and_residues()
            .ok_or_else(|| Error::InvalidParams(format!("{family} is not a star-shaped family")))?;
        if b < 2 {
            return Err(Error::InvalidParams(format!("b = {b} must be at least 2")));
        }
        let m = k * (b - 2) + c;
        let id = match family {
            Family::T => GroupId::T(m),
            Family::O => GroupId::O(m),
            _ => GroupId::I(m),
        };
        validate_params(&id)?;
        Ok(id)
    }

    fn star_params(&self) -> Option<(Family, u64)> {
        match *self {
            GroupId::T(m) => Some((Family::T, m)),
            GroupId::O(m) => Some((Family::O, m)),
            GroupId::I(m) => Some((Family::I, m)),
            _ => None,
        }
    }

    /// Residue `c` and parameter `b` of a star-shaped family member.
    pub fn residue_and_b(&self) -> Option<(u64, u64)> {
        let (family, m) = self.star_params()?;
        let (k, _) = family.modulus_and_residues()?;
        let c = m % k;
        Some((c, (m - c) / k + 2))
    }

    /// The parameter `b` of a star-shaped family member.
    pub fn b(&self) -> Option<u64> {
        self.residue_and_b().map(|(_, b)| b)
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::A { r, a } => write!(f, "A:{r},{a}"),
            GroupId::D { n, q } => write!(f, "D:{n},{q}"),
            GroupId::T(m) => write!(f, "T:{m}"),
            GroupId::O(m) => write!(f, "O:{m}"),
            GroupId::I(m) => write!(f, "I:{m}"),
        }
    }
}

impl FromStr for GroupId {
    type Err = Error;

    /// Parses `A:r,a`, `D:n,q`, `T:m`, `O:m` or `I:m`. Parameters are not
    /// validated; see [`validate_params`].
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadGroupSpec(s.to_string());
        let (family, params) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<u64> = params
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (family.trim(), nums.as_slice()) {
            ("A", &[r, a]) => Ok(GroupId::A { r, a }),
            ("D", &[n, q]) => Ok(GroupId::D { n, q }),
            ("T", &[m]) => Ok(GroupId::T(m)),
            ("O", &[m]) => Ok(GroupId::O(m)),
            ("I", &[m]) => Ok(GroupId::I(m)),
            _ => Err(bad()),
        }
    }
}

/// Checks the parameter conditions, naming every violated one.
pub fn validate_params(id: &GroupId) -> Result<()> {
    let mut problems = Vec::new();
    match *id {
        GroupId::A { r: big, a: small } | GroupId::D { n: big, q: small } => {
            let (p, s) = match id {
                GroupId::A { .. } => ("r", "a"),
                _ => ("n", "q"),
            };
            if small <= 1 {
                problems.push(format!("{s} = {small} must exceed 1"));
            }
            if small >= big {
                problems.push(format!("{s} = {small} must be less than {p} = {big}"));
            }
            if big.gcd(&small) != 1 {
                problems.push(format!("gcd({p}, {s}) = {} is not 1", big.gcd(&small)));
            }
        }
        GroupId::T(m) | GroupId::O(m) | GroupId::I(m) => {
            let (k, residues) = id.family().modulus_and_residues().expect("star families have residues");
            if m == 0 {
                problems.push("m must be positive".to_string());
            } else if !residues.contains(&(m % k)) {
                problems.push(format!("m = {m} is {} mod {k}, not one of {residues:?}", m % k));
            }
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("{id}: {}", problems.join("; "))))
    }
}

/// Jung-Hirzebruch expansion `r/a = alpha_1 - 1/(alpha_2 - 1/(...))` with
/// every `alpha_i >= 2`.
pub fn jh_expand(r: u64, a: u64) -> Result<Vec<u64>> {
    if a == 0 || a >= r || r.gcd(&a) != 1 {
        return Err(Error::InvalidParams(format!(
            "continued fraction needs 0 < a < r with gcd 1, got r = {r}, a = {a}"
        )));
    }
    let mut out = Vec::new();
    let (mut num, mut den) = (r, a);
    while den > 0 {
        let alpha = num.div_ceil(den);
        out.push(alpha);
        (num, den) = (den, alpha * den - num);
    }
    debug_assert_eq!(jh_evaluate(&out), Some((r, a)));
    Ok(out)
}

/// Evaluates a Jung-Hirzebruch continued fraction as a reduced fraction
/// `(numerator, denominator)`; `None` for an empty list.
pub fn jh_evaluate(alphas: &[u64]) -> Option<(u64, u64)> {
    let (&last, rest) = alphas.split_last()?;
    let (mut num, mut den) = (last, 1u64);
    for &alpha in rest.iter().rev() {
        (num, den) = (alpha * num - den, num);
    }
    let g = num.gcd(&den);
    Some((num / g, den / g))
}

/// Label of a chain vertex in a star template.
#[derive(Clone, Copy, Debug)]
enum Label {
    Fixed(i64),
    Center,
}

/// A vertex of a star template: a chain position or the extra vertex on top.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Site {
    Chain(usize),
    Top,
}

/// The drawn quiver of a template: vertices joined to `star` by an arrow
/// pair, and extra arrows into `star`.
#[derive(Debug)]
struct Figure {
    star: &'static [Site],
    extras: &'static [(Site, u64)],
}

/// Dual graph of one residue: a chain drawn left to right, with a `-2`
/// curve on top of the chain vertex `top_on`. For `b >= 3` the centre
/// receives `b - 3` extra arrows in addition to `generic.extras`.
#[derive(Debug)]
struct StarTemplate {
    family: Family,
    residue: u64,
    chain: &'static [Label],
    top_on: usize,
    base: Figure,
    generic: Figure,
}

use Label::{Center as C, Fixed as F};
use Site::{Chain as Ch, Top};

const TEMPLATES: &[StarTemplate] = &[
    StarTemplate {
        family: Family::T,
        residue: 1,
        chain: &[F(-2), F(-2), C, F(-2), F(-2)],
        top_on: 2,
        base: Figure {
            star: &[Top],
            extras: &[],
        },
        generic: Figure {
            star: &[Ch(0), Ch(4), Top],
            extras: &[],
        },
    },
    StarTemplate {
        family: Family::T,
        residue: 3,
        chain: &[F(-3), C, F(-2), F(-2)],
        top_on: 1,
        base: Figure {
            star: &[Ch(2)],
            extras: &[(Ch(0), 1)],
        },
        generic: Figure {
            star: &[Ch(0), Ch(3), Top],
            extras: &[(Ch(0), 1)],
        },
    },
    StarTemplate {
        family: Family::T,
        residue: 5,
        chain: &[F(-3), C, F(-3)],
        top_on: 1,
        base: Figure {
            star: &[Ch(1)],
            extras: &[(Ch(0), 1), (Ch(2), 1)],
        },
        generic: Figure {
            star: &[Ch(0), Ch(2), Top],
            extras: &[(Ch(0), 1), (Ch(2), 1)],
        },
    },
    StarTemplate {
        family: Family::O,
        residue: 1,
        chain: &[F(-2), F(-2), C, F(-2), F(-2), F(-2)],
        top_on: 2,
        base: Figure {
            star: &[Ch(0)],
            extras: &[],
        },
        generic: Figure {
            star: &[Ch(0), Ch(5), Top],
            extras: &[],
        },
    },
    StarTemplate {
        family: Family::O,
        residue: 5,
        chain: &[F(-3), C, F(-2), F(-2), F(-2)],
        top_on: 1,
        base: Figure {
            star: &[Ch(3)],
            extras: &[(Ch(0), 1)],
        },
        generic: Figure {
            star: &[Ch(0), Ch(4), Top],
            extras: &[(Ch(0), 1)],
        },
    },
    StarTemplate {
        family: Family::O,
        residue: 7,
        chain: &[F(-4), C, F(-2), F(-2)],
        top_on: 1,
        base: Figure {
            star: &[Ch(2)],
            extras: &[(Ch(0), 2)],
        },
        generic: Figure {
            star: &[Ch(0), Ch(3), Top],
            extras: &[(Ch(0), 2)],
        },
    },
    StarTemplate {
        family: Family::O,
        residue: 11,
        chain: &[F(-3), C, F(-4)],
        top_on: 1,
        base: Figure {
            star: &[Ch(1)],
            extras: &[(Ch(0), 1), (Ch(2), 2)],
        },
        generic: Figure {
            star: &[Ch(0), Ch(2), Top],
            extras: &[(Ch(0), 1), (Ch(2), 2)],
        },
    },
    StarTemplate {
        family: Family::I,
        residue: 1,
        chain: &[F(-2), F(-2), C, F(-2), F(-2), F(-2), F(-2)],
        top_on: 2,
        base: Figure {
            star: &[Ch(6)],
            extras: &[],
        },
        generic: Figure {
            star: &[Ch(0), Ch(6), Top],
            extras: &[],
        },
    },
    StarTemplate {
        family: Family::I,
        residue: 7,
        chain: &[F(-2), F(-2), C, F(-2), F(-3)],
        top_on: 2,
        base: Figure {
            star: &[Top],
            extras: &[(Ch(4), 1)],
        },
        generic: Figure {
            star: &[Ch(0), Ch(4), Top],
            extras: &[(Ch(4), 1)],
        },
    },
    StarTemplate {
        family: Family::I,
        residue: 11,
        chain: &[F(-3), C, F(-2), F(-2), F(-2), F(-2)],
        top_on: 1,
        base: Figure {
            star: &[Ch(4)],
            extras: &[(Ch(0), 1)],
        },
        generic: Figure {
            star: &[Ch(0), Ch(5), Top],
            extras: &[(Ch(0), 1)],
        },
    },
    StarTemplate {
        family: Family::I,
        residue: 13,
        chain: &[F(-2), F(-2), C, F(-3), F(-2)],
        top_on: 2,
        base: Figure {
            star: &[Ch(1), Ch(4)],
            extras: &[],
        },
        generic: Figure {
            star: &[Ch(0), Ch(4), Top],
            extras: &[(Ch(3), 1)],
        },
    },
    StarTemplate {
        family: Family::I,
        residue: 17,
        chain: &[F(-3), C, F(-2), F(-3)],
        top_on: 1,
        base: Figure {
            star: &[Ch(2)],
            extras: &[(Ch(0), 1), (Ch(3), 1)],
        },
        generic: Figure {
            star: &[Ch(0), Ch(3), Top],
            extras: &[(Ch(0), 1), (Ch(3), 1)],
        },
    },
    StarTemplate {
        family: Family::I,
        residue: 19,
        chain: &[F(-5), C, F(-2), F(-2)],
        top_on: 1,
        base: Figure {
            star: &[Ch(2)],
            extras: &[(Ch(0), 3)],
        },
        generic: Figure {
            star: &[Ch(0), Ch(3), Top],
            extras: &[(Ch(0), 3)],
        },
    },
    StarTemplate {
        family: Family::I,
        residue: 23,
        chain: &[F(-3), C, F(-3), F(-2)],
        top_on: 1,
        base: Figure {
            star: &[Ch(1), Ch(3)],
            extras: &[(Ch(0), 1)],
        },
        generic: Figure {
            star: &[Ch(0), Ch(3), Top],
            extras: &[(Ch(0), 1), (Ch(2), 1)],
        },
    },
    StarTemplate {
        family: Family::I,
        residue: 29,
        chain: &[F(-3), C, F(-5)],
        top_on: 1,
        base: Figure {
            star: &[Ch(1)],
            extras: &[(Ch(0), 1), (Ch(2), 3)],
        },
        generic: Figure {
            star: &[Ch(0), Ch(2), Top],
            extras: &[(Ch(0), 1), (Ch(2), 3)],
        },
    },
];

fn template(family: Family, residue: u64) -> &'static StarTemplate {
    TEMPLATES
        .iter()
        .find(|t| t.family == family && t.residue == residue)
        .expect("every allowed residue has a template")
}

/// Id of the top curve in a star-shaped dual graph.
pub const TOP_ID: &str = "T";
/// Id of the `-2` curve preceding the chain in a type-D dual graph.
pub const TAIL_ID: &str = "P";

fn chain_id(i: usize) -> String {
    format!("E{}", i + 1)
}

fn chain_graph(labels: &[i64], top_on: Option<usize>, tail: bool) -> DualGraph {
    let mut vertices: Vec<(String, i64)> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    if tail {
        vertices.push((TAIL_ID.to_string(), -2));
        edges.push((TAIL_ID.to_string(), chain_id(0)));
    }
    for (i, &s) in labels.iter().enumerate() {
        vertices.push((chain_id(i), s));
        if i > 0 {
            edges.push((chain_id(i - 1), chain_id(i)));
        }
    }
    if let Some(t) = top_on {
        vertices.push((TOP_ID.to_string(), -2));
        edges.push((chain_id(t), TOP_ID.to_string()));
    }
    DualGraph::new(vertices, edges).expect("catalog graphs are well formed")
}

/// Dual graph of the minimal resolution.
///
/// * `A:r,a`: a chain `E1, ..., EN` labelled `-alpha_i` from `r/a`.
/// * `D:n,q`: the chain from `n/q`, a `-2` curve `T` on `E1`, and a `-2`
///   curve `P` before `E1`.
/// * `T`, `O`, `I`: the star of the residue, chain `E1, ...` drawn left to
///   right with the top curve `T`, centre labelled `-b`.
pub fn dual_graph(id: &GroupId) -> Result<DualGraph> {
    validate_params(id)?;
    let labels = |alphas: Vec<u64>| alphas.iter().map(|&a| -(a as i64)).collect::<Vec<_>>();
    Ok(match *id {
        GroupId::A { r, a } => chain_graph(&labels(jh_expand(r, a)?), None, false),
        GroupId::D { n, q } => chain_graph(&labels(jh_expand(n, q)?), Some(0), true),
        _ => {
            let (c, b) = id.residue_and_b().expect("star family");
            let t = template(id.family(), c);
            let chain: Vec<i64> = t
                .chain
                .iter()
                .map(|l| match l {
                    Label::Fixed(s) => *s,
                    Label::Center => -(b as i64),
                })
                .collect();
            chain_graph(&chain, Some(t.top_on), false)
        }
    })
}

/// Index of the centre (the curve labelled `-b`) in a star template chain.
fn center(t: &StarTemplate) -> usize {
    t.chain
        .iter()
        .position(|l| matches!(l, Label::Center))
        .expect("every template has a centre")
}

struct Drawing {
    q: ReconQuiver,
    g: DualGraph,
}

impl Drawing {
    fn new(g: DualGraph) -> Result<Self> {
        let zf = graph::fundamental_cycle(&g)?.ordered(&g)?;
        let mut q = ReconQuiver::empty(&g, zf);
        for &(a, b) in g.edges() {
            q.add_arrows(a + 1, b + 1, 1);
            q.add_arrows(b + 1, a + 1, 1);
        }
        Ok(Self { q, g })
    }

    fn node(&self, id: &str) -> usize {
        self.g.index_of(id).expect("figure vertices exist") + 1
    }

    fn join_star(&mut self, id: &str) {
        let v = self.node(id);
        self.q.add_arrows(0, v, 1);
        self.q.add_arrows(v, 0, 1);
    }

    fn extra(&mut self, id: &str, k: u64) {
        let v = self.node(id);
        self.q.add_arrows(v, 0, k);
    }

    fn alpha(&self, id: &str) -> u64 {
        (-self.g.self_intersection(self.node(id) - 1)) as u64
    }
}

fn site_id(site: Site) -> String {
    match site {
        Site::Chain(i) => chain_id(i),
        Site::Top => TOP_ID.to_string(),
    }
}

/// The quiver as drawn for each group (arrow counts only; relation counts
/// are zero).
///
/// * `A`: `star` joined to both chain ends, plus `alpha_i - 2` extra arrows
///   `E_i -> star`.
/// * `D` with `alpha_1 >= 3`: `star` joined to `P`, `T` and `EN`, with
///   `alpha_1 - 3` extras at `E1` and `alpha_i - 2` elsewhere.
/// * `D` whose first `nu < N - 1` entries are 2: `star` joined to `E_nu` and
///   `EN`, with `alpha_{nu+1} - 3` extras at `E_{nu+1}` and `alpha_i - 2`
///   elsewhere.
/// * `D` with `alpha_1 = ... = alpha_{N-1} = 2`: `star` joined to
///   `E_{N-1}`, with `alpha_N - 2` extras at `EN`.
/// * `T`, `O`, `I`: the figure of the residue, with `b - 3` extra arrows
///   from the centre for `b >= 3`.
pub fn expected_quiver(id: &GroupId) -> Result<ReconQuiver> {
    let g = dual_graph(id)?;
    let mut d = Drawing::new(g)?;
    match *id {
        GroupId::A { r, a } => {
            let n = jh_expand(r, a)?.len();
            d.join_star(&chain_id(0));
            d.join_star(&chain_id(n - 1));
            for i in 0..n {
                let e = chain_id(i);
                let k = d.alpha(&e) - 2;
                d.extra(&e, k);
            }
        }
        GroupId::D { n, q } => {
            let alphas = jh_expand(n, q)?;
            let big_n = alphas.len();
            let extras_except = |d: &mut Drawing, special: Option<usize>| {
                for (i, &alpha) in alphas.iter().enumerate() {
                    let k = if Some(i) == special { alpha - 3 } else { alpha - 2 };
                    d.extra(&chain_id(i), k);
                }
            };
            if alphas[0] >= 3 {
                d.join_star(TAIL_ID);
                d.join_star(TOP_ID);
                d.join_star(&chain_id(big_n - 1));
                extras_except(&mut d, Some(0));
            } else {
                let nu = alphas.iter().position(|&a| a >= 3).unwrap_or(big_n).min(big_n - 1);
                if nu == big_n - 1 {
                    d.join_star(&chain_id(nu - 1));
                    extras_except(&mut d, None);
                } else {
                    d.join_star(&chain_id(nu - 1));
                    d.join_star(&chain_id(big_n - 1));
                    extras_except(&mut d, Some(nu));
                }
            }
        }
        _ => {
            let (c, b) = id.residue_and_b().expect("star family");
            let t = template(id.family(), c);
            let figure = if b == 2 { &t.base } else { &t.generic };
            for &site in figure.star {
                d.join_star(&site_id(site));
            }
            for &(site, k) in figure.extras {
                d.extra(&site_id(site), k);
            }
            if b >= 3 {
                d.extra(&chain_id(center(t)), b - 3);
            }
        }
    }
    Ok(d.q)
}

/// Id of the centre curve (labelled `-b`) of a star-shaped family member.
pub fn center_id(id: &GroupId) -> Option<String> {
    let (c, _) = id.residue_and_b()?;
    Some(chain_id(center(template(id.family(), c))))
}

/// Every residue of a star-shaped family.
pub fn residues(family: Family) -> &'static [u64] {
    family.modulus_and_residues().map_or(&[], |(_, r)| r)
}

/// All valid `A:r,a` with `r <= max_r`.
pub fn cyclic_groups(max_r: u64) -> Vec<GroupId> {
    (3..=max_r)
        .flat_map(|r| {
            (2..r)
                .filter(move |&a| r.gcd(&a) == 1)
                .map(move |a| GroupId::A { r, a })
        })
        .collect()
}

/// All valid `D:n,q` with `n <= max_n`.
pub fn dihedral_groups(max_n: u64) -> Vec<GroupId> {
    (3..=max_n)
        .flat_map(|n| {
            (2..n)
                .filter(move |&q| n.gcd(&q) == 1)
                .map(move |q| GroupId::D { n, q })
        })
        .collect()
}

/// Every residue of `T`, `O` and `I` at each `b` in `bs`.
pub fn star_groups(bs: impl IntoIterator<Item = u64> + Clone) -> Vec<GroupId> {
    let mut out = Vec::new();
    for family in [Family::T, Family::O, Family::I] {
        for &c in residues(family) {
            for b in bs.clone() {
                out.push(GroupId::star(family, c, b).expect("template parameters are valid"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_group_specs() {
        assert_eq!("A:5,3".parse::<GroupId>().unwrap(), GroupId::A { r: 5, a: 3 });
        assert_eq!("I:7".parse::<GroupId>().unwrap(), GroupId::I(7));
        assert!("X:1".parse::<GroupId>().is_err());
        assert!("A:5".parse::<GroupId>().is_err());
        assert!("T:-1".parse::<GroupId>().is_err());
        assert_eq!(GroupId::D { n: 7, q: 4 }.to_string(), "D:7,4");
    }

    #[test]
    fn star_parameters() {
        assert_eq!(GroupId::I(37).residue_and_b(), Some((7, 3)));
        assert_eq!(GroupId::I(7).b(), Some(2));
        assert_eq!(GroupId::star(Family::O, 11, 4).unwrap(), GroupId::O(35));
        assert!(GroupId::star(Family::T, 2, 3).is_err());
    }

    #[test]
    fn every_residue_has_one_template() {
        for family in [Family::T, Family::O, Family::I] {
            for &c in residues(family) {
                let count = TEMPLATES
                    .iter()
                    .filter(|t| t.family == family && t.residue == c)
                    .count();
                assert_eq!(count, 1, "{family} residue {c}");
            }
        }
        assert_eq!(TEMPLATES.len(), 15);
    }

    #[test]
    fn validation_names_each_violation() {
        let msg = validate_params(&GroupId::A { r: 4, a: 4 }).unwrap_err().to_string();
        assert!(msg.contains("less than"));
        assert!(msg.contains("gcd"));
        assert!(validate_params(&GroupId::T(0)).is_err());
    }
}
