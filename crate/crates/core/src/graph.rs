//! Labelled dual graphs, intersection pairings, and the fundamental and
//! canonical cycles.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, lift, ExactInt};

/// Name of the extra quiver vertex; not allowed as a curve id.
pub const STAR: &str = "star";

/// A resolution dual graph: one vertex per exceptional curve, labelled by
/// its self-intersection, and one edge per pair of meeting curves.
///
/// The declared vertex order fixes the row order of the intersection matrix.
/// Construction only checks that ids are well formed; the mathematical
/// conditions are reported by [`DualGraph::validate`].
#[derive(Clone, Debug)]
pub struct DualGraph {
    ids: Vec<String>,
    self_int: Vec<i64>,
    edges: Vec<(usize, usize)>,
    index: HashMap<String, usize>,
    adjacency: Vec<Vec<usize>>,
    /// The graph is immutable, so its validation report is computed once.
    report: OnceLock<ValidationReport>,
}

impl PartialEq for DualGraph {
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids && self.self_int == other.self_int && self.edges == other.edges
    }
}

impl Eq for DualGraph {}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: String,
    #[serde(rename = "self")]
    self_intersection: i64,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<VertexJson>,
    edges: Vec<[String; 2]>,
}

impl DualGraph {
    /// Builds a graph from `(id, self-intersection)` pairs and id pairs.
    pub fn new<V, E, S, T>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = (S, i64)>,
        E: IntoIterator<Item = (T, T)>,
        S: Into<String>,
        T: AsRef<str>,
    {
        let mut ids = Vec::new();
        let mut self_int = Vec::new();
        let mut index = HashMap::new();
        for (id, s) in vertices {
            let id: String = id.into();
            if id.is_empty() {
                return Err(Error::EmptyId);
            }
            if id == STAR {
                return Err(Error::ReservedId);
            }
            if index.insert(id.clone(), ids.len()).is_some() {
                return Err(Error::DuplicateVertex(id));
            }
            ids.push(id);
            self_int.push(s);
        }
        let mut edge_list = Vec::new();
        let mut adjacency = vec![Vec::new(); ids.len()];
        for (a, b) in edges {
            let lookup = |s: &str| index.get(s).copied().ok_or_else(|| Error::UnknownVertex(s.to_string()));
            let (i, j) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            edge_list.push((i, j));
            adjacency[i].push(j);
            if i != j {
                adjacency[j].push(i);
            }
        }
        Ok(Self {
            ids,
            self_int,
            edges: edge_list,
            index,
            adjacency,
            report: OnceLock::new(),
        })
    }

    /// Parses the JSON graph format
    /// `{"vertices":[{"id":"E1","self":-2},...],"edges":[["E1","E2"],...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(text)?;
        Self::new(
            raw.vertices.into_iter().map(|v| (v.id, v.self_intersection)),
            raw.edges.into_iter().map(|[a, b]| (a, b)),
        )
    }

    /// Serialises into the JSON graph format.
    pub fn to_json(&self) -> String {
        let raw = GraphJson {
            vertices: self
                .ids
                .iter()
                .zip(&self.self_int)
                .map(|(id, &s)| VertexJson {
                    id: id.clone(),
                    self_intersection: s,
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(i, j)| [self.ids[i].clone(), self.ids[j].clone()])
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("graph serialisation cannot fail")
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Self-intersection `E_i^2`.
    pub fn self_intersection(&self, i: usize) -> i64 {
        self.self_int[i]
    }

    pub fn self_intersections(&self) -> &[i64] {
        &self.self_int
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    /// The intersection number `E_i . E_j`.
    pub fn intersection(&self, i: usize, j: usize) -> i64 {
        if i == j {
            self.self_int[i]
        } else {
            self.adjacency[i].iter().filter(|&&k| k == j).count() as i64
        }
    }

    /// The intersection matrix in declared vertex order.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        (0..n)
            .map(|i| (0..n).map(|j| self.intersection(i, j)).collect())
            .collect()
    }

    /// The same graph with every self-intersection replaced by `f(i, E_i^2)`.
    pub fn relabelled(&self, f: impl Fn(usize, i64) -> i64) -> Self {
        let mut g = self.clone();
        for (i, s) in g.self_int.iter_mut().enumerate() {
            *s = f(i, *s);
        }
        g.report = OnceLock::new();
        g
    }

    /// True when no curve has self-intersection -1.
    pub fn is_minimal(&self) -> bool {
        self.self_int.iter().all(|&s| s != -1)
    }

    /// Checks every graph invariant and lists the failures.
    pub fn validate(&self) -> ValidationReport {
        self.report.get_or_init(|| self.check()).clone()
    }

    fn check(&self) -> ValidationReport {
        let mut issues = Vec::new();
        if self.is_empty() {
            issues.push(Issue::Empty);
            return ValidationReport::from_issues(issues);
        }
        for (i, &s) in self.self_int.iter().enumerate() {
            if s > -1 {
                issues.push(Issue::SelfIntersectionNotNegative {
                    vertex: self.ids[i].clone(),
                    value: s,
                });
            }
        }
        let mut seen = BTreeMap::new();
        for &(i, j) in &self.edges {
            if i == j {
                issues.push(Issue::SelfLoop {
                    vertex: self.ids[i].clone(),
                });
                continue;
            }
            let key = (i.min(j), i.max(j));
            let count = seen.entry(key).or_insert(0usize);
            *count += 1;
            if *count == 2 {
                issues.push(Issue::DuplicateEdge {
                    a: self.ids[key.0].clone(),
                    b: self.ids[key.1].clone(),
                });
            }
        }
        let components = self.component_count();
        if components > 1 {
            issues.push(Issue::Disconnected { components });
        } else if seen.len() != self.len() - 1 {
            issues.push(Issue::NotATree);
        }
        let minors = exact::leading_principal_minors::<BigInt>(&self.matrix());
        let failure = minors.iter().enumerate().find(|(k, d)| {
            let want_negative = k % 2 == 0;
            d.is_zero() || (want_negative != (**d < BigInt::zero()))
        });
        if let Some((k, d)) = failure {
            issues.push(Issue::NotNegativeDefinite {
                order: k + 1,
                minor: d.to_string(),
            });
        }
        ValidationReport::from_issues(issues)
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        let report = self.report.get_or_init(|| self.check());
        if report.valid {
            Ok(())
        } else {
            Err(Error::InvalidGraph(report.summary()))
        }
    }

    fn component_count(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut count = 0;
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    /// Graph distances from `source` to every vertex (`usize::MAX` if unreachable).
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// One failed graph invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Issue {
    Empty,
    SelfIntersectionNotNegative { vertex: String, value: i64 },
    SelfLoop { vertex: String },
    DuplicateEdge { a: String, b: String },
    Disconnected { components: usize },
    NotATree,
    NotNegativeDefinite { order: usize, minor: String },
}

impl std::fmt::Display for Issue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Issue::Empty => write!(f, "graph has no vertices"),
            Issue::SelfIntersectionNotNegative { vertex, value } => {
                write!(f, "self-intersection {value} of {vertex} is not <= -1")
            }
            Issue::SelfLoop { vertex } => write!(f, "edge from {vertex} to itself"),
            Issue::DuplicateEdge { a, b } => write!(f, "edge {a}-{b} appears more than once"),
            Issue::Disconnected { components } => {
                write!(f, "graph has {components} connected components")
            }
            Issue::NotATree => write!(f, "graph contains a cycle"),
            Issue::NotNegativeDefinite { order, minor } => write!(
                f,
                "intersection matrix is not negative definite (leading minor of order {order} is {minor})"
            ),
        }
    }
}

/// Outcome of [`DualGraph::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    fn from_issues(issues: Vec<Issue>) -> Self {
        Self {
            valid: issues.is_empty(),
            issues,
        }
    }

    /// All issues joined into one line.
    pub fn summary(&self) -> String {
        if self.valid {
            "valid".to_string()
        } else {
            self.issues
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; ")
        }
    }
}

/// Checks every graph invariant; see [`DualGraph::validate`].
pub fn validate_graph(g: &DualGraph) -> ValidationReport {
    g.validate()
}

/// An integer cycle `sum r_i E_i`, keyed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle {
    coeffs: BTreeMap<String, i64>,
}

impl Cycle {
    pub fn from_map(coeffs: BTreeMap<String, i64>) -> Self {
        Self { coeffs }
    }

    /// Builds a cycle from coefficients listed in the graph's vertex order.
    pub fn from_ordered(g: &DualGraph, values: &[i64]) -> Self {
        assert_eq!(values.len(), g.len(), "one coefficient per vertex");
        Self {
            coeffs: g.ids().iter().cloned().zip(values.iter().copied()).collect(),
        }
    }

    pub fn get(&self, id: &str) -> Option<i64> {
        self.coeffs.get(id).copied()
    }

    pub fn as_map(&self) -> &BTreeMap<String, i64> {
        &self.coeffs
    }

    /// Coefficients in the graph's vertex order, checking the key set.
    pub fn ordered(&self, g: &DualGraph) -> Result<Vec<i64>> {
        ordered_values(g, &self.coeffs)
    }

    pub fn to_rational<T: ExactInt>(&self) -> RationalCycle<T> {
        RationalCycle {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, &v)| (k.clone(), Ratio::from_integer(lift::<T>(v))))
                .collect(),
        }
    }
}

/// A rational cycle, keyed by vertex id. Serialises rationals as `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCycle<T: ExactInt = BigInt> {
    coeffs: BTreeMap<String, Ratio<T>>,
}

impl<T: ExactInt> RationalCycle<T> {
    pub fn from_map(coeffs: BTreeMap<String, Ratio<T>>) -> Self {
        Self { coeffs }
    }

    pub fn get(&self, id: &str) -> Option<&Ratio<T>> {
        self.coeffs.get(id)
    }

    pub fn as_map(&self) -> &BTreeMap<String, Ratio<T>> {
        &self.coeffs
    }

    /// Coefficients in the graph's vertex order, checking the key set.
    pub fn ordered(&self, g: &DualGraph) -> Result<Vec<Ratio<T>>> {
        ordered_values(g, &self.coeffs)
    }
}

impl<T: ExactInt> Serialize for RationalCycle<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: BTreeMap<&String, String> = self.coeffs.iter().map(|(k, v)| (k, v.to_string())).collect();
        strings.serialize(s)
    }
}

impl<'de, T: ExactInt> Deserialize<'de> for RationalCycle<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strings = BTreeMap::<String, String>::deserialize(d)?;
        let coeffs = strings
            .into_iter()
            .map(|(k, v)| {
                parse_ratio::<T>(&v)
                    .map(|r| (k, r))
                    .ok_or_else(|| serde::de::Error::custom(format!("bad rational `{v}`")))
            })
            .collect::<std::result::Result<_, _>>()?;
        Ok(Self { coeffs })
    }
}

fn parse_ratio<T: ExactInt>(s: &str) -> Option<Ratio<T>> {
    let parse = |t: &str| T::from_str_radix(t.trim(), 10).ok();
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (parse(p)?, parse(q)?);
            (!q.is_zero()).then(|| Ratio::new(p, q))
        }
        None => parse(s).map(Ratio::from_integer),
    }
}

fn ordered_values<V: Clone>(g: &DualGraph, map: &BTreeMap<String, V>) -> Result<Vec<V>> {
    if map.len() != g.len() {
        return Err(Error::KeyMismatch);
    }
    g.ids()
        .iter()
        .map(|id| map.get(id).cloned().ok_or(Error::KeyMismatch))
        .collect()
}

/// `Z . E_i` for an integer coefficient vector in graph order.
pub(crate) fn dot_curve(g: &DualGraph, z: &[i64], i: usize) -> i64 {
    let mut total = g.self_intersection(i) * z[i];
    for &j in g.neighbors(i) {
        if j != i {
            total += z[j];
        }
    }
    total
}

/// `c1^T M c2` for integer vectors in graph order.
pub(crate) fn dot_int(g: &DualGraph, a: &[i64], b: &[i64]) -> i64 {
    (0..g.len()).map(|i| a[i] * dot_curve(g, b, i)).sum()
}

/// The intersection pairing `c1 . c2 = c1^T M c2`, computed exactly.
pub fn pairing<T: ExactInt>(g: &DualGraph, c1: &RationalCycle<T>, c2: &RationalCycle<T>) -> Result<Ratio<T>> {
    let a = c1.ordered(g)?;
    let b = c2.ordered(g)?;
    let mut total = Ratio::<T>::zero();
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            let m = g.intersection(i, j);
            if m != 0 {
                total = total + ai.clone() * bj.clone() * Ratio::from_integer(lift::<T>(m));
            }
        }
    }
    Ok(total)
}

/// The integer pairing of two integer cycles.
pub fn pairing_int(g: &DualGraph, c1: &Cycle, c2: &Cycle) -> Result<i64> {
    Ok(dot_int(g, &c1.ordered(g)?, &c2.ordered(g)?))
}

/// `Z . E_i` for the curve with the given id.
pub fn pairing_with_curve(g: &DualGraph, c: &Cycle, id: &str) -> Result<i64> {
    let i = g.index_of(id).ok_or_else(|| Error::UnknownVertex(id.to_string()))?;
    Ok(dot_curve(g, &c.ordered(g)?, i))
}

/// Runs the Laufer iteration: start from all ones and, while some vertex
/// pairs positively with the current cycle, raise the first such vertex in
/// `order`. The graph must be negative definite.
pub(crate) fn laufer(g: &DualGraph, order: &[usize]) -> Vec<i64> {
    let mut z = vec![1i64; g.len()];
    while let Some(&i) = order.iter().find(|&&i| dot_curve(g, &z, i) > 0) {
        z[i] += 1;
    }
    z
}

/// The fundamental cycle `Z_f`: the smallest cycle with every coefficient
/// at least 1 that pairs non-positively with every curve.
///
/// Vertices are scanned in declared order; the result does not depend on it.
pub fn fundamental_cycle(g: &DualGraph) -> Result<Cycle> {
    g.ensure_valid()?;
    let order: Vec<usize> = (0..g.len()).collect();
    Ok(Cycle::from_ordered(g, &laufer(g, &order)))
}

/// [`fundamental_cycle`] with an explicit scan order (a permutation of the
/// vertex indices).
pub fn fundamental_cycle_with_order(g: &DualGraph, order: &[usize]) -> Result<Cycle> {
    g.ensure_valid()?;
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..g.len()).collect::<Vec<_>>() {
        return Err(Error::InvalidGraph(
            "scan order is not a permutation of the vertices".to_string(),
        ));
    }
    Ok(Cycle::from_ordered(g, &laufer(g, order)))
}

/// The canonical cycle `Z_K`, the rational cycle with `Z_K . E_i = E_i^2 + 2`.
pub fn canonical_cycle(g: &DualGraph) -> Result<RationalCycle> {
    canonical_cycle_in::<BigInt>(g)
}

/// [`canonical_cycle`] over a chosen integer type.
pub fn canonical_cycle_in<T: ExactInt>(g: &DualGraph) -> Result<RationalCycle<T>> {
    g.ensure_valid()?;
    let rhs: Vec<i64> = g.self_intersections().iter().map(|s| s + 2).collect();
    let z = exact::solve::<T>(&g.matrix(), &rhs).ok_or(Error::Singular)?;
    Ok(RationalCycle::from_map(g.ids().iter().cloned().zip(z).collect()))
}

/// Embedding dimension `e = 1 - Z_f . Z_f`.
pub fn embedding_dimension(g: &DualGraph) -> Result<i64> {
    let zf = fundamental_cycle(g)?.ordered(g)?;
    Ok(1 - dot_int(g, &zf, &zf))
}

/// True iff `Z_K . Z_f = Z_f . Z_f + 2` holds exactly.
pub fn rationality_identity_check(g: &DualGraph) -> Result<bool> {
    let zf = fundamental_cycle(g)?;
    let zk = canonical_cycle(g)?;
    let lhs = pairing(g, &zk, &zf.to_rational())?;
    let rhs = pairing_int(g, &zf, &zf)? + 2;
    Ok(lhs == Ratio::from_integer(BigInt::from(rhs)))
}

/// True when no curve has self-intersection -1.
pub fn is_minimal(g: &DualGraph) -> bool {
    g.is_minimal()
}

/// True when the rational number is an integer.
pub(crate) fn integral<T: ExactInt>(r: &Ratio<T>) -> bool {
    r.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(s: i64) -> DualGraph {
        DualGraph::new([("E1", s)], Vec::<(&str, &str)>::new()).unwrap()
    }

    #[test]
    fn rejects_reserved_and_duplicate_ids() {
        assert!(matches!(
            DualGraph::new([("star", -2)], Vec::<(&str, &str)>::new()),
            Err(Error::ReservedId)
        ));
        assert!(matches!(
            DualGraph::new([("a", -2), ("a", -2)], Vec::<(&str, &str)>::new()),
            Err(Error::DuplicateVertex(_))
        ));
        assert!(matches!(
            DualGraph::new([("a", -2)], [("a", "b")]),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn single_minus_two_vertex() {
        let g = single(-2);
        assert!(g.validate().valid);
        assert_eq!(fundamental_cycle(&g).unwrap().get("E1"), Some(1));
        assert_eq!(
            canonical_cycle(&g).unwrap().get("E1"),
            Some(&Ratio::from_integer(BigInt::from(0)))
        );
        assert_eq!(embedding_dimension(&g).unwrap(), 3);
        assert!(rationality_identity_check(&g).unwrap());
    }

    #[test]
    fn report_lists_each_failure() {
        let g = DualGraph::new([("a", 0), ("b", -2), ("c", -2)], [("a", "b"), ("b", "a"), ("c", "c")]).unwrap();
        let kinds: Vec<_> = g.validate().issues;
        assert!(kinds.contains(&Issue::SelfIntersectionNotNegative {
            vertex: "a".into(),
            value: 0
        }));
        assert!(kinds.contains(&Issue::DuplicateEdge {
            a: "a".into(),
            b: "b".into()
        }));
        assert!(kinds.contains(&Issue::SelfLoop { vertex: "c".into() }));
        assert!(kinds.contains(&Issue::Disconnected { components: 2 }));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"vertices":[{"id":"E1","self":-2},{"id":"E2","self":-3}],"edges":[["E1","E2"]]}"#;
        let g = DualGraph::from_json(text).unwrap();
        assert_eq!(DualGraph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn rational_cycle_json() {
        let g = DualGraph::new([("E1", -2), ("E2", -3)], [("E1", "E2")]).unwrap();
        let zk = canonical_cycle(&g).unwrap();
        let text = serde_json::to_string(&zk).unwrap();
        assert_eq!(text, r#"{"E1":"1/5","E2":"2/5"}"#);
        let back: RationalCycle = serde_json::from_str(&text).unwrap();
        assert_eq!(back, zk);
        assert!(serde_json::from_str::<RationalCycle>(r#"{"E1":"1/0"}"#).is_err());
    }
}
