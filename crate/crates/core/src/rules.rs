//! Builds the quiver directly from a labelled Dynkin diagram by three
//! combinatorial rules, chosen by the shape of the fundamental cycle.
//!
//! Write `alpha_i = -E_i^2`. The fundamental cycle is *maximal* when it
//! equals the fundamental cycle of the same diagram with every label
//! replaced by -2, *reduced* when all its coefficients are 1, and *mixed*
//! otherwise. Maximal takes precedence when both hold.
//!
//! * Rule 1 (maximal): join `star` to complete the extended Dynkin diagram,
//!   double every edge, then add `alpha_i - 2` arrows `i -> star`.
//! * Rule 2 (reduced): join `star` to the end of every arm, double, then add
//!   `alpha_i - 2` arrows `i -> star`, except `alpha_t - 3` at the middle vertex.
//! * Rule 3 (mixed): find the largest type-D subdiagram on which `Z_f`
//!   restricts to the maximal cycle; join `star` to complete its extended
//!   diagram and to every arm end outside it, double, then add `alpha_i - 2`
//!   arrows `i -> star`, except `alpha_C - 3` at the vertex `C`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, DualGraph};
use crate::quiver::{self, ReconQuiver};

/// The underlying diagram of a labelled Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    /// Type A: the vertices in path order.
    Chain(Vec<usize>),
    /// Types D and E: the trivalent vertex and its three arms, each listed
    /// from the vertex next to the middle outwards.
    Star { middle: usize, arms: [Vec<usize>; 3] },
}

impl Shape {
    /// Determines the diagram shape, rejecting anything that is not a
    /// simply-laced Dynkin diagram.
    pub fn of(g: &DualGraph) -> Result<Shape> {
        g.ensure_valid()?;
        let branch: Vec<usize> = (0..g.len()).filter(|&i| g.degree(i) >= 3).collect();
        match branch.as_slice() {
            [] => {
                let start = (0..g.len())
                    .find(|&i| g.degree(i) <= 1)
                    .expect("a finite tree has a leaf");
                let mut path = vec![start];
                let mut prev = usize::MAX;
                let mut cur = start;
                while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
                    path.push(next);
                    prev = cur;
                    cur = next;
                }
                Ok(Shape::Chain(path))
            }
            [middle] if g.degree(*middle) == 3 => {
                let middle = *middle;
                let walk = |first: usize| {
                    let mut arm = vec![first];
                    let (mut prev, mut cur) = (middle, first);
                    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
                        arm.push(next);
                        prev = cur;
                        cur = next;
                    }
                    arm
                };
                let n = g.neighbors(middle);
                let arms = [walk(n[0]), walk(n[1]), walk(n[2])];
                let mut lens: Vec<usize> = arms.iter().map(|a| a.len() + 1).collect();
                lens.sort_unstable();
                let (p, q, r) = (lens[0], lens[1], lens[2]);
                if q * r + p * r + p * q > p * q * r {
                    Ok(Shape::Star { middle, arms })
                } else {
                    Err(Error::UnsupportedShape(format!(
                        "arms of lengths {}, {}, {} do not form a Dynkin diagram",
                        p - 1,
                        q - 1,
                        r - 1
                    )))
                }
            }
            _ => Err(Error::UnsupportedShape(
                "more than one branch vertex or a vertex of degree above 3".to_string(),
            )),
        }
    }

    /// The end vertex of every arm (both ends for a chain).
    pub fn arm_ends(&self) -> Vec<usize> {
        match self {
            Shape::Chain(path) => {
                let mut ends = vec![path[0]];
                if path.len() > 1 {
                    ends.push(path[path.len() - 1]);
                }
                ends
            }
            Shape::Star { arms, .. } => arms.iter().map(|a| a[a.len() - 1]).collect(),
        }
    }

    /// Sorted arm lengths of a star-shaped diagram.
    pub fn arm_lengths(&self) -> Option<[usize; 3]> {
        match self {
            Shape::Chain(_) => None,
            Shape::Star { arms, .. } => {
                let mut l = [arms[0].len(), arms[1].len(), arms[2].len()];
                l.sort_unstable();
                Some(l)
            }
        }
    }
}

/// Kind of fundamental cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZfKind {
    Maximal,
    ReducedNotMaximal,
    Mixed,
}

/// Classification of the fundamental cycle of a labelled Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZfClass {
    pub kind: ZfKind,
    /// The trivalent vertex, when there is one.
    pub middle_vertex: Option<String>,
    /// For mixed cycles, the vertex whose extra-arrow count is `alpha_C - 3`.
    pub c_vertex: Option<String>,
    /// For mixed cycles, the largest type-D subdiagram on which `Z_f` is maximal.
    pub d_subdiagram: Option<Vec<String>>,
}

struct Analysis {
    shape: Shape,
    zf: Vec<i64>,
    kind: ZfKind,
    d_sub: Option<Vec<usize>>,
    c_vertex: Option<usize>,
}

fn induced_all_minus_two(g: &DualGraph, subset: &[usize]) -> DualGraph {
    let edges: Vec<(&str, &str)> = g
        .edges()
        .iter()
        .filter(|(a, b)| subset.contains(a) && subset.contains(b))
        .map(|&(a, b)| (g.id(a), g.id(b)))
        .collect();
    DualGraph::new(subset.iter().map(|&i| (g.id(i).to_string(), -2)), edges)
        .expect("an induced subgraph of a valid graph is well formed")
}

/// Fundamental cycle of the all-(-2) relabelling of the induced subgraph,
/// listed in `subset` order.
fn maximal_cycle(g: &DualGraph, subset: &[usize]) -> Vec<i64> {
    let sub = induced_all_minus_two(g, subset);
    let order: Vec<usize> = (0..sub.len()).collect();
    graph::laufer(&sub, &order)
}

fn analyse(g: &DualGraph) -> Result<Analysis> {
    let shape = Shape::of(g)?;
    if let Some(i) = (0..g.len()).find(|&i| g.self_intersection(i) == -1) {
        return Err(Error::NotMinimal(g.id(i).to_string()));
    }
    let order: Vec<usize> = (0..g.len()).collect();
    let zf = graph::laufer(g, &order);
    let all: Vec<usize> = (0..g.len()).collect();
    let kind = if zf == maximal_cycle(g, &all) {
        ZfKind::Maximal
    } else if zf.iter().all(|&r| r == 1) {
        ZfKind::ReducedNotMaximal
    } else {
        ZfKind::Mixed
    };
    let (mut d_sub, mut c_vertex) = (None, None);
    if let (ZfKind::Mixed, Shape::Star { middle, arms }) = (kind, &shape) {
        d_sub = largest_d_subdiagram(g, &zf, *middle, arms);
        c_vertex = choose_c(g, *middle, d_sub.as_deref());
    }
    Ok(Analysis {
        shape,
        zf,
        kind,
        d_sub,
        c_vertex,
    })
}

/// Type-D subdiagrams through the middle vertex: two arms cut to length one
/// and the third cut to any length.
fn largest_d_subdiagram(g: &DualGraph, zf: &[i64], middle: usize, arms: &[Vec<usize>; 3]) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for long in 0..3 {
        for t in 1..=arms[long].len() {
            let mut subset = vec![middle];
            for (k, arm) in arms.iter().enumerate() {
                if k == long {
                    subset.extend(&arm[..t]);
                } else {
                    subset.push(arm[0]);
                }
            }
            let restricted: Vec<i64> = subset.iter().map(|&i| zf[i]).collect();
            let larger = best.as_ref().is_none_or(|b| subset.len() > b.len());
            if larger && restricted == maximal_cycle(g, &subset) {
                best = Some(subset);
            }
        }
    }
    best
}

/// The vertex with `alpha >= 3` closest to the middle vertex. Ties go to a
/// vertex of the type-D subdiagram that has a neighbour outside it, then to
/// declared order.
fn choose_c(g: &DualGraph, middle: usize, d_sub: Option<&[usize]>) -> Option<usize> {
    let dist = g.distances_from(middle);
    let candidates: Vec<usize> = (0..g.len()).filter(|&i| g.self_intersection(i) <= -3).collect();
    let nearest = candidates.iter().map(|&i| dist[i]).min()?;
    let tied: Vec<usize> = candidates.into_iter().filter(|&i| dist[i] == nearest).collect();
    let on_boundary = |i: usize| d_sub.is_some_and(|d| d.contains(&i) && g.neighbors(i).iter().any(|w| !d.contains(w)));
    tied.iter()
        .copied()
        .find(|&i| on_boundary(i))
        .or_else(|| tied.first().copied())
}

/// Classifies the fundamental cycle of a minimal labelled Dynkin diagram.
pub fn classify_zf(g: &DualGraph) -> Result<ZfClass> {
    let a = analyse(g)?;
    let middle_vertex = match &a.shape {
        Shape::Star { middle, .. } => Some(g.id(*middle).to_string()),
        Shape::Chain(_) => None,
    };
    Ok(ZfClass {
        kind: a.kind,
        middle_vertex,
        c_vertex: a.c_vertex.map(|i| g.id(i).to_string()),
        d_subdiagram: a.d_sub.map(|d| d.iter().map(|&i| g.id(i).to_string()).collect()),
    })
}

/// One group of arrows added by a rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub from: String,
    pub to: String,
    pub count: u64,
    pub clause: String,
}

/// The rule applied and every arrow it added.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleTrace {
    pub rule: u8,
    pub class: ZfClass,
    pub steps: Vec<TraceStep>,
}

struct Builder<'a> {
    g: &'a DualGraph,
    q: ReconQuiver,
    steps: Vec<TraceStep>,
}

impl Builder<'_> {
    fn label(&self, node: usize) -> String {
        self.q.vertices()[node].clone()
    }

    /// Adds `k` arrows between quiver nodes (0 is `star`, curve `i` is `i + 1`).
    fn add(&mut self, from: usize, to: usize, k: i64, clause: &str) -> Result<()> {
        if k < 0 {
            return Err(Error::NegativeCount(format!(
                "{clause} asks for {k} arrows {} -> {}",
                self.label(from),
                self.label(to)
            )));
        }
        if k > 0 {
            self.q.add_arrows(from, to, k as u64);
            self.steps.push(TraceStep {
                from: self.label(from),
                to: self.label(to),
                count: k as u64,
                clause: clause.to_string(),
            });
        }
        Ok(())
    }

    fn double_diagram(&mut self) -> Result<()> {
        for &(a, b) in self.g.edges() {
            self.add(a + 1, b + 1, 1, "double every edge of the diagram")?;
            self.add(b + 1, a + 1, 1, "double every edge of the diagram")?;
        }
        Ok(())
    }

    fn join_star(&mut self, i: usize, k: i64, clause: &str) -> Result<()> {
        self.add(0, i + 1, k, clause)?;
        self.add(i + 1, 0, k, clause)
    }

    fn extras(&mut self, exception: Option<usize>, exception_clause: &str) -> Result<()> {
        for i in 0..self.g.len() {
            let alpha = -self.g.self_intersection(i);
            if Some(i) == exception {
                self.add(i + 1, 0, alpha - 3, exception_clause)?;
            } else {
                self.add(i + 1, 0, alpha - 2, "alpha_i - 2 extra arrows to star")?;
            }
        }
        Ok(())
    }
}

/// Edges from `star` that complete the extended Dynkin diagram of the
/// all-(-2) subdiagram on `subset`: `-theta . E_i` edges to vertex `i`.
fn affine_attachments(g: &DualGraph, subset: &[usize]) -> Vec<(usize, i64)> {
    let sub = induced_all_minus_two(g, subset);
    let theta = maximal_cycle(g, subset);
    (0..sub.len())
        .map(|k| (subset[k], -graph::dot_curve(&sub, &theta, k)))
        .filter(|&(_, m)| m > 0)
        .collect()
}

/// Applies the appropriate rule and records every added arrow.
///
/// Relation counts are not produced by the rules; the returned quiver
/// carries the relation counts of [`quiver::build_quiver`].
pub fn apply_rules_traced(g: &DualGraph) -> Result<(ReconQuiver, RuleTrace)> {
    let a = analyse(g)?;
    let mut b = Builder {
        g,
        q: ReconQuiver::empty(g, a.zf.clone()),
        steps: Vec::new(),
    };
    let rule = match a.kind {
        ZfKind::Maximal => {
            b.double_diagram()?;
            let all: Vec<usize> = (0..g.len()).collect();
            for (i, k) in affine_attachments(g, &all) {
                b.join_star(i, k, "join star to complete the extended Dynkin diagram")?;
            }
            b.extras(None, "")?;
            1
        }
        ZfKind::ReducedNotMaximal => {
            b.double_diagram()?;
            for i in a.shape.arm_ends() {
                b.join_star(i, 1, "join star to the end of each arm")?;
            }
            let middle = match a.shape {
                Shape::Star { middle, .. } => Some(middle),
                Shape::Chain(_) => None,
            };
            b.extras(middle, "alpha_t - 3 extra arrows at the middle vertex")?;
            2
        }
        ZfKind::Mixed => {
            let lengths = a.shape.arm_lengths();
            let whitelisted = matches!(lengths, Some([1, 1, _]) | Some([1, 2, 2]));
            if !whitelisted {
                return Err(Error::RuleThreePrecondition(
                    "only type D and E6 diagrams are supported".to_string(),
                ));
            }
            let d = a
                .d_sub
                .as_ref()
                .ok_or_else(|| Error::RuleThreePrecondition("no type-D subdiagram carries a maximal cycle".into()))?;
            let c = a
                .c_vertex
                .ok_or_else(|| Error::RuleThreePrecondition("no vertex with alpha >= 3".into()))?;
            b.double_diagram()?;
            for (i, k) in affine_attachments(g, d) {
                b.join_star(
                    i,
                    k,
                    "join star to complete the extended diagram of the type-D subdiagram",
                )?;
            }
            for i in a.shape.arm_ends() {
                if !d.contains(&i) {
                    b.join_star(i, 1, "join star to the end of each arm outside the subdiagram")?;
                }
            }
            b.extras(Some(c), "alpha_C - 3 extra arrows at C")?;
            3
        }
    };
    let geometric = quiver::build_quiver(g)?;
    b.q.copy_relations_from(&geometric);
    let class = classify_zf(g)?;
    Ok((
        b.q,
        RuleTrace {
            rule,
            class,
            steps: b.steps,
        },
    ))
}

/// Applies the appropriate rule; see [`apply_rules_traced`].
pub fn apply_rules(g: &DualGraph) -> Result<ReconQuiver> {
    apply_rules_traced(g).map(|(q, _)| q)
}

/// True iff the rules and the ext-table construction give identical arrows.
pub fn verify_against_geometric(g: &DualGraph) -> Result<bool> {
    Ok(apply_rules(g)?.same_arrows(&quiver::build_quiver(g)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::STAR;

    fn chain(labels: &[i64]) -> DualGraph {
        let ids: Vec<String> = (1..=labels.len()).map(|i| format!("E{i}")).collect();
        DualGraph::new(
            ids.iter().cloned().zip(labels.iter().copied()),
            ids.windows(2).map(|w| (w[0].clone(), w[1].clone())),
        )
        .unwrap()
    }

    #[test]
    fn chain_of_minus_twos_is_maximal() {
        let c = classify_zf(&chain(&[-2, -2, -2])).unwrap();
        assert_eq!(c.kind, ZfKind::Maximal);
        assert_eq!(c.middle_vertex, None);
    }

    #[test]
    fn single_vertex_gets_two_arrows_each_way() {
        let q = apply_rules(&chain(&[-2])).unwrap();
        assert_eq!(q.arrows(STAR, "E1"), Some(2));
        assert_eq!(q.arrows("E1", STAR), Some(2));
    }

    #[test]
    fn rejects_non_dynkin_and_non_minimal() {
        // Star with arms 2, 2, 2 is affine E6, not Dynkin.
        let g = DualGraph::new(
            [
                ("c", -3),
                ("a1", -2),
                ("a2", -2),
                ("b1", -2),
                ("b2", -2),
                ("d1", -2),
                ("d2", -2),
            ],
            [
                ("c", "a1"),
                ("a1", "a2"),
                ("c", "b1"),
                ("b1", "b2"),
                ("c", "d1"),
                ("d1", "d2"),
            ],
        )
        .unwrap();
        assert!(matches!(classify_zf(&g), Err(Error::UnsupportedShape(_))));
        let g = DualGraph::new([("E1", -1)], Vec::<(&str, &str)>::new()).unwrap();
        assert!(matches!(classify_zf(&g), Err(Error::NotMinimal(_))));
    }

    #[test]
    fn trace_lists_every_arrow() {
        let g = chain(&[-4, -3, -4]);
        let (q, trace) = apply_rules_traced(&g).unwrap();
        assert_eq!(trace.rule, 1);
        let total: u64 = trace.steps.iter().map(|s| s.count).sum();
        assert_eq!(total, q.arrow_total());
        assert!(serde_json::to_string(&trace).unwrap().contains("alpha_i - 2"));
    }
}
