//! Ext dimensions between the simple modules and the resulting quiver of the
//! reconstruction algebra, together with global and projective dimensions.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{minus, plus};
use crate::graph::{self, DualGraph, STAR};

/// Positive part `a_+ = max(a, 0)` of an integer.
pub fn pos(a: i64) -> i64 {
    plus(&a)
}

/// Negative part `a_- = max(-a, 0)` of an integer.
pub fn neg(a: i64) -> i64 {
    minus(&a)
}

fn node_labels(g: &DualGraph) -> Vec<String> {
    std::iter::once(STAR.to_string())
        .chain(g.ids().iter().cloned())
        .collect()
}

fn count(v: i64) -> u64 {
    u64::try_from(v).expect("ext dimensions are non-negative")
}

/// Dimensions `ext^t(S_a, S_b)` for `t = 1, 2, 3` over the curves and the
/// extra vertex `star`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    labels: Vec<String>,
    dims: Vec<[u64; 3]>,
}

#[derive(Serialize)]
struct ExtEntry<'a> {
    source: &'a str,
    target: &'a str,
    ext: [u64; 3],
}

impl ExtTable {
    /// Vertex labels, `star` first and then the curves in graph order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    fn position(&self, id: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == id)
    }

    /// `ext^t(S_source, S_target)` for `t` in `1..=3`.
    pub fn get(&self, source: &str, target: &str, t: usize) -> Option<u64> {
        if !(1..=3).contains(&t) {
            return None;
        }
        let (a, b) = (self.position(source)?, self.position(target)?);
        Some(self.at(a, b)[t - 1])
    }

    /// All three dimensions for a pair of label indices.
    pub fn at(&self, a: usize, b: usize) -> [u64; 3] {
        self.dims[a * self.labels.len() + b]
    }

    /// Nonzero entries as JSON, in label order.
    pub fn to_json(&self) -> String {
        let n = self.labels.len();
        let entries: Vec<ExtEntry> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.at(a, b) != [0, 0, 0])
            .map(|(a, b)| ExtEntry {
                source: &self.labels[a],
                target: &self.labels[b],
                ext: self.at(a, b),
            })
            .collect();
        serde_json::to_string_pretty(&entries).expect("ext table serialisation cannot fail")
    }
}

/// Computes the ext table of the simple modules from the dual graph.
pub fn ext_table(g: &DualGraph) -> Result<ExtTable> {
    let zf = graph::fundamental_cycle(g)?.ordered(g)?;
    let zk = graph::canonical_cycle(g)?.ordered(g)?;
    let n = g.len();
    let size = n + 1;
    let mut dims = vec![[0u64; 3]; size * size];
    let mut set = |a: usize, b: usize, v: [u64; 3]| dims[a * size + b] = v;

    for i in 0..n {
        for j in 0..n {
            let e = g.intersection(i, j);
            set(i + 1, j + 1, [count(pos(e)), count(pos(-1 - e)), 0]);
        }
    }
    let zf_sq = graph::dot_int(g, &zf, &zf);
    set(0, 0, [0, count(-1 - zf_sq), 0]);
    for i in 0..n {
        let zf_ei = graph::dot_curve(g, &zf, i);
        set(0, i + 1, [count(-zf_ei), 0, 0]);
        let s = g.self_intersection(i);
        if s == -1 {
            set(i + 1, 0, [count(1 - zf_ei), 1, 0]);
        } else {
            let zk_ei: Ratio<BigInt> = (0..n).map(|j| zk[j].clone() * BigInt::from(g.intersection(j, i))).sum();
            let diff = zk_ei - Ratio::from_integer(BigInt::from(zf_ei));
            if !graph::integral(&diff) {
                return Err(Error::NonIntegral {
                    vertex: g.id(i).to_string(),
                    value: diff.to_string(),
                });
            }
            let d = diff.to_integer().to_i64().ok_or_else(|| Error::NonIntegral {
                vertex: g.id(i).to_string(),
                value: diff.to_string(),
            })?;
            set(i + 1, 0, [count(pos(d)), count(neg(d)), count(-s - 2)]);
        }
    }
    Ok(ExtTable {
        labels: node_labels(g),
        dims,
    })
}

/// Arrow and relation counts of the reconstruction algebra's quiver.
///
/// Vertex 0 is always `star`; the curves follow in graph order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconQuiver {
    vertices: Vec<String>,
    zf: Vec<i64>,
    arrows: Vec<u64>,
    relations: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    vertices: Vec<String>,
    zf: BTreeMap<String, i64>,
    arrows: BTreeMap<String, u64>,
    relations: BTreeMap<String, u64>,
}

impl ReconQuiver {
    /// A quiver on `star` plus the curves of `g`, with no arrows or relations.
    pub fn empty(g: &DualGraph, zf: Vec<i64>) -> Self {
        let size = g.len() + 1;
        assert_eq!(zf.len(), g.len(), "one Z_f label per curve");
        Self {
            vertices: node_labels(g),
            zf,
            arrows: vec![0; size * size],
            relations: vec![0; size * size],
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    /// `Z_f` coefficient of a curve vertex.
    pub fn zf_label(&self, id: &str) -> Option<i64> {
        let i = self.index_of(id)?;
        (i > 0).then(|| self.zf[i - 1])
    }

    /// Number of arrows `from -> to`.
    pub fn arrows(&self, from: &str, to: &str) -> Option<u64> {
        Some(self.arrow_at(self.index_of(from)?, self.index_of(to)?))
    }

    /// Number of relations `from -> to`.
    pub fn relations(&self, from: &str, to: &str) -> Option<u64> {
        Some(self.relation_at(self.index_of(from)?, self.index_of(to)?))
    }

    pub fn arrow_at(&self, a: usize, b: usize) -> u64 {
        self.arrows[a * self.size() + b]
    }

    pub fn relation_at(&self, a: usize, b: usize) -> u64 {
        self.relations[a * self.size() + b]
    }

    pub fn add_arrows(&mut self, a: usize, b: usize, k: u64) {
        let n = self.size();
        self.arrows[a * n + b] += k;
    }

    pub fn set_relations(&mut self, a: usize, b: usize, k: u64) {
        let n = self.size();
        self.relations[a * n + b] = k;
    }

    /// Copies every relation count from `other`, which must share the vertex list.
    pub fn copy_relations_from(&mut self, other: &ReconQuiver) {
        assert_eq!(self.vertices, other.vertices, "vertex lists must agree");
        self.relations.clone_from(&other.relations);
    }

    /// Total number of arrows.
    pub fn arrow_total(&self) -> u64 {
        self.arrows.iter().sum()
    }

    /// True when both quivers have the same vertices and arrow counts.
    pub fn same_arrows(&self, other: &ReconQuiver) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }

    /// Pairs whose arrow counts differ, as `(from, to, self, other)`.
    pub fn arrow_differences(&self, other: &ReconQuiver) -> Vec<(String, String, u64, u64)> {
        let mut out = Vec::new();
        for (a, from) in self.vertices.iter().enumerate() {
            for (b, to) in self.vertices.iter().enumerate() {
                let mine = self.arrow_at(a, b);
                let theirs = other.arrows(from, to).unwrap_or(0);
                if mine != theirs {
                    out.push((from.clone(), to.clone(), mine, theirs));
                }
            }
        }
        out
    }

    fn pair_map(&self, counts: &[u64]) -> BTreeMap<String, u64> {
        let n = self.size();
        let mut map = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                let k = counts[a * n + b];
                if k > 0 {
                    map.insert(format!("{}->{}", self.vertices[a], self.vertices[b]), k);
                }
            }
        }
        map
    }

    /// Serialises as
    /// `{"vertices":[...],"zf":{...},"arrows":{"a->b":k,...},"relations":{...}}`.
    pub fn to_json(&self) -> String {
        let raw = QuiverJson {
            vertices: self.vertices.clone(),
            zf: self.vertices[1..]
                .iter()
                .cloned()
                .zip(self.zf.iter().copied())
                .collect(),
            arrows: self.pair_map(&self.arrows),
            relations: self.pair_map(&self.relations),
        };
        serde_json::to_string_pretty(&raw).expect("quiver serialisation cannot fail")
    }

    /// Parses the JSON produced by [`ReconQuiver::to_json`].
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: QuiverJson = serde_json::from_str(text)?;
        if raw.vertices.first().map(String::as_str) != Some(STAR) {
            return Err(Error::UnknownVertex("first quiver vertex must be star".into()));
        }
        let n = raw.vertices.len();
        let find = |id: &str| {
            raw.vertices
                .iter()
                .position(|v| v == id)
                .ok_or_else(|| Error::UnknownVertex(id.to_string()))
        };
        let zf = raw.vertices[1..]
            .iter()
            .map(|v| raw.zf.get(v).copied().ok_or_else(|| Error::UnknownVertex(v.clone())))
            .collect::<Result<Vec<_>>>()?;
        let fill = |map: &BTreeMap<String, u64>| -> Result<Vec<u64>> {
            let mut out = vec![0; n * n];
            for (key, &k) in map {
                let (a, b) = key.split_once("->").ok_or_else(|| Error::UnknownVertex(key.clone()))?;
                out[find(a)? * n + find(b)?] = k;
            }
            Ok(out)
        };
        let arrows = fill(&raw.arrows)?;
        let relations = fill(&raw.relations)?;
        Ok(Self {
            vertices: raw.vertices,
            zf,
            arrows,
            relations,
        })
    }

    /// Plain-text arrow and relation matrices (rows are sources).
    pub fn to_text(&self) -> String {
        let width = self.vertices.iter().map(String::len).max().unwrap_or(1).max(3) + 1;
        let mut out = String::new();
        for (title, counts) in [("arrows", &self.arrows), ("relations", &self.relations)] {
            let _ = writeln!(out, "{title} (row -> column)");
            let _ = write!(out, "{:>width$}", "");
            for v in &self.vertices {
                let _ = write!(out, "{v:>width$}");
            }
            out.push('\n');
            for (a, v) in self.vertices.iter().enumerate() {
                let _ = write!(out, "{v:>width$}");
                for b in 0..self.size() {
                    let _ = write!(out, "{:>width$}", counts[a * self.size() + b]);
                }
                out.push('\n');
            }
        }
        out
    }
}

/// Builds the quiver: `arrows(a -> b) = ext^1(S_b, S_a)` and
/// `relations(a -> b) = ext^2(S_b, S_a)`.
pub fn build_quiver(g: &DualGraph) -> Result<ReconQuiver> {
    let table = ext_table(g)?;
    let zf = graph::fundamental_cycle(g)?.ordered(g)?;
    let mut q = ReconQuiver::empty(g, zf);
    let n = q.size();
    for a in 0..n {
        for b in 0..n {
            let [e1, e2, _] = table.at(b, a);
            q.add_arrows(a, b, e1);
            q.set_relations(a, b, e2);
        }
    }
    Ok(q)
}

/// Global dimension of the reconstruction algebra: 3 if some `E_i^2 < -2`, else 2.
pub fn global_dimension(g: &DualGraph) -> Result<u8> {
    g.ensure_valid()?;
    Ok(if g.self_intersections().iter().any(|&s| s < -2) {
        3
    } else {
        2
    })
}

/// Projective dimensions of the simple left and right modules, keyed by vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveDimensions {
    pub left: BTreeMap<String, u8>,
    pub right: BTreeMap<String, u8>,
}

/// Projective dimensions read off the ext table: on the left,
/// `pd S = max{t : ext^t(S, X) != 0}`; on the right, `max{t : ext^t(X, S) != 0}`.
pub fn projective_dimensions(g: &DualGraph) -> Result<ProjectiveDimensions> {
    let table = ext_table(g)?;
    let n = table.labels().len();
    let top = |dims: &mut dyn Iterator<Item = [u64; 3]>| -> u8 {
        dims.flat_map(|d| (0..3).filter(move |&t| d[t] != 0).map(|t| t as u8 + 1))
            .max()
            .unwrap_or(0)
    };
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for (a, label) in table.labels().iter().enumerate() {
        left.insert(label.clone(), top(&mut (0..n).map(|b| table.at(a, b))));
        right.insert(label.clone(), top(&mut (0..n).map(|b| table.at(b, a))));
    }
    Ok(ProjectiveDimensions { left, right })
}

/// Projective dimensions from the case description on minimal graphs: all 2
/// when every curve is a (-2)-curve; otherwise every right simple has
/// dimension 2 except `star` (3), and every left simple has dimension 2
/// except the curves with `E_i^2 < -2` (3).
pub fn projective_dimensions_by_cases(g: &DualGraph) -> Result<ProjectiveDimensions> {
    g.ensure_valid()?;
    if !g.is_minimal() {
        let i = g.self_intersections().iter().position(|&s| s == -1).unwrap_or(0);
        return Err(Error::NotMinimal(g.id(i).to_string()));
    }
    let gorenstein = g.self_intersections().iter().all(|&s| s == -2);
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    left.insert(STAR.to_string(), 2);
    right.insert(STAR.to_string(), if gorenstein { 2 } else { 3 });
    for (i, id) in g.ids().iter().enumerate() {
        let s = g.self_intersection(i);
        left.insert(id.clone(), if s < -2 { 3 } else { 2 });
        right.insert(id.clone(), 2);
    }
    Ok(ProjectiveDimensions { left, right })
}

fn dot_id(id: &str) -> String {
    format!("\"{}\"", id.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Renders the quiver in DOT syntax: one solid edge per arrow and one dashed,
/// labelled edge per nonzero relation count.
pub fn emit_dot(q: &ReconQuiver) -> String {
    let mut out = String::from("digraph reconquiver {\n");
    for v in q.vertices() {
        let _ = writeln!(out, "  {};", dot_id(v));
    }
    let n = q.size();
    for a in 0..n {
        for b in 0..n {
            for _ in 0..q.arrow_at(a, b) {
                let _ = writeln!(out, "  {} -> {};", dot_id(&q.vertices()[a]), dot_id(&q.vertices()[b]));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let k = q.relation_at(a, b);
            if k > 0 {
                let _ = writeln!(
                    out,
                    "  {} -> {} [style=dashed, label=\"{}\"];",
                    dot_id(&q.vertices()[a]),
                    dot_id(&q.vertices()[b]),
                    k
                );
            }
        }
    }
    out.push_str("}\n");
    out
}
