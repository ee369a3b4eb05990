//! Knitting on translation quivers: the lambda/mu recursion that counts maps
//! between special Cohen-Macaulay modules which do not factor through other
//! specials, and the Auslander-Reiten quivers of the icosahedral groups.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::catalog::{self, GroupId};
use crate::error::{Error, Result};
use crate::graph::STAR;
use crate::quiver::build_quiver;

/// A stable translation quiver: vertices, arrows (with multiplicity) and a
/// bijective translation `tau`, optionally placed on a (row, column) grid in
/// which every arrow advances the column by one modulo `period`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationQuiver {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    arrows: Vec<(usize, usize)>,
    incoming: Vec<Vec<usize>>,
    outgoing: Vec<Vec<usize>>,
    tau: Vec<usize>,
    display: Option<Vec<(i64, i64)>>,
    period: Option<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawTranslationQuiver {
    vertices: Vec<String>,
    arrows: Vec<(String, String)>,
    tau: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    display: Option<BTreeMap<String, (i64, i64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    period: Option<i64>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidTranslationQuiver(msg.into())
}

impl TranslationQuiver {
    /// Builds and validates a translation quiver.
    ///
    /// `display` maps each vertex to `(row, column)`; when present, every
    /// arrow must advance the column by one modulo `period` (which defaults
    /// to one more than the largest column).
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<(String, String)>,
        tau: BTreeMap<String, String>,
        display: Option<BTreeMap<String, (i64, i64)>>,
        period: Option<i64>,
    ) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::EmptyId);
            }
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let lookup = |v: &str| index.get(v).copied().ok_or_else(|| Error::UnknownVertex(v.to_string()));
        let n = vertices.len();
        let mut arrow_idx = Vec::with_capacity(arrows.len());
        let mut incoming = vec![Vec::new(); n];
        let mut outgoing = vec![Vec::new(); n];
        for (a, b) in &arrows {
            let (a, b) = (lookup(a)?, lookup(b)?);
            arrow_idx.push((a, b));
            outgoing[a].push(b);
            incoming[b].push(a);
        }
        let mut tau_idx = vec![usize::MAX; n];
        for (v, w) in &tau {
            tau_idx[lookup(v)?] = lookup(w)?;
        }
        if let Some(i) = tau_idx.iter().position(|&t| t == usize::MAX) {
            return Err(invalid(format!("tau is not defined at {}", vertices[i])));
        }
        let image: BTreeSet<usize> = tau_idx.iter().copied().collect();
        if image.len() != n {
            return Err(invalid("tau is not a bijection"));
        }
        let display = match display {
            None => None,
            Some(map) => {
                let mut pos = vec![None; n];
                for (v, p) in map {
                    pos[lookup(&v)?] = Some(p);
                }
                let pos: Option<Vec<(i64, i64)>> = pos.into_iter().collect();
                Some(pos.ok_or_else(|| invalid("display coordinates missing for some vertex"))?)
            }
        };
        let period = match (&display, period) {
            (Some(pos), None) => Some(pos.iter().map(|p| p.1).max().unwrap_or(0) + 1),
            (_, p) => p,
        };
        let tq = Self {
            ids: vertices,
            index,
            arrows: arrow_idx,
            incoming,
            outgoing,
            tau: tau_idx,
            display,
            period,
        };
        tq.check_columns()?;
        tq.check_mesh()?;
        Ok(tq)
    }

    fn check_columns(&self) -> Result<()> {
        let (Some(pos), Some(period)) = (&self.display, self.period) else {
            return Ok(());
        };
        if period <= 0 {
            return Err(invalid(format!("period {period} must be positive")));
        }
        for &(a, b) in &self.arrows {
            if (pos[b].1 - pos[a].1 - 1).rem_euclid(period) != 0 {
                return Err(invalid(format!(
                    "arrow {} -> {} does not advance the column by one",
                    self.ids[a], self.ids[b]
                )));
            }
        }
        Ok(())
    }

    /// Arrows `L -> V` must match arrows `tau(V) -> L` one for one.
    fn check_mesh(&self) -> Result<()> {
        for v in 0..self.len() {
            let mut into: BTreeMap<usize, i64> = BTreeMap::new();
            for &l in &self.incoming[v] {
                *into.entry(l).or_default() += 1;
            }
            for &l in &self.outgoing[self.tau[v]] {
                *into.entry(l).or_default() -= 1;
            }
            if let Some((&l, _)) = into.iter().find(|(_, &c)| c != 0) {
                return Err(invalid(format!(
                    "mesh at {} is unbalanced: arrows {} -> {} and {} -> {} differ in number",
                    self.ids[v], self.ids[l], self.ids[v], self.ids[self.tau[v]], self.ids[l]
                )));
            }
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: RawTranslationQuiver = serde_json::from_str(s)?;
        Self::new(raw.vertices, raw.arrows, raw.tau, raw.display, raw.period)
    }

    pub fn to_json(&self) -> String {
        let id = |i: usize| self.ids[i].clone();
        let raw = RawTranslationQuiver {
            vertices: self.ids.clone(),
            arrows: self.arrows.iter().map(|&(a, b)| (id(a), id(b))).collect(),
            tau: (0..self.len()).map(|v| (id(v), id(self.tau[v]))).collect(),
            display: self
                .display
                .as_ref()
                .map(|pos| (0..self.len()).map(|v| (id(v), pos[v])).collect()),
            period: self.period,
        };
        serde_json::to_string_pretty(&raw).expect("translation quivers serialize")
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

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    /// `tau` of the vertex at index `v`.
    pub fn tau(&self, v: usize) -> usize {
        self.tau[v]
    }

    /// Display `(row, column)` of the vertex at index `v`, if the quiver has
    /// a layout.
    pub fn position(&self, v: usize) -> Option<(i64, i64)> {
        self.display.as_ref().map(|pos| pos[v])
    }

    pub fn period(&self) -> Option<i64> {
        self.period
    }

    /// The default step cap used when none is given: 64 steps per vertex.
    pub fn default_max_steps(&self) -> usize {
        64 * self.len().max(1)
    }

    fn resolve(&self, id: &str) -> Result<usize> {
        self.index_of(id).ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }
}

/// The full history of one knitting run.
///
/// `lambda[n]` and `mu[n]` are indexed by vertex. The run stops at the
/// first all-zero lambda layer, `stop`, and records two further layers,
/// which are zero as well.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnitState {
    pub start: usize,
    pub specials: BTreeSet<usize>,
    pub lambda: Vec<Vec<u64>>,
    pub mu: Vec<Vec<u64>>,
    pub stop: usize,
    ids: Vec<String>,
}

impl KnitState {
    /// `sum_{n >= 1} lambda^(n)(V)` for every vertex, by id.
    pub fn totals(&self) -> BTreeMap<String, u64> {
        (0..self.ids.len())
            .map(|v| (self.ids[v].clone(), self.total_at(v)))
            .collect()
    }

    pub fn total_at(&self, v: usize) -> u64 {
        self.lambda[1..].iter().map(|layer| layer[v]).sum()
    }

    /// `lambda^(n)(V)` for `n = 1, ..., stop`.
    pub fn per_step(&self, v: usize) -> Vec<u64> {
        self.lambda[1..=self.stop].iter().map(|layer| layer[v]).collect()
    }

    /// Totals restricted to the special vertices.
    pub fn special_totals(&self) -> BTreeMap<String, u64> {
        self.specials
            .iter()
            .map(|&v| (self.ids[v].clone(), self.total_at(v)))
            .collect()
    }
}

/// Runs the recursion from `start`:
/// `lambda^(0) = mu^(0) = 1_start`, and for `n >= 1`
/// `lambda^(n)(V) = max(0, sum_{L -> V} mu^(n-1)(L) - mu^(n-2)(tau V))`,
/// the subtracted term being absent for `n = 1`, and `mu^(n)` equal to
/// `lambda^(n)` with the specials set to zero.
///
/// Fails with [`Error::NonTermination`] when no all-zero layer appears
/// within `max_steps` steps.
pub fn knit_counts(
    tq: &TranslationQuiver,
    specials: &BTreeSet<String>,
    start: &str,
    max_steps: usize,
) -> Result<KnitState> {
    let special_idx = specials
        .iter()
        .map(|s| tq.resolve(s))
        .collect::<Result<BTreeSet<usize>>>()?;
    let start_idx = tq.resolve(start)?;
    if !special_idx.contains(&start_idx) {
        return Err(Error::StartNotSpecial(start.to_string()));
    }
    let n = tq.len();
    let mut first = vec![0u64; n];
    first[start_idx] = 1;
    let mut lambda = vec![first.clone()];
    let mut mu = vec![first];
    let mut stop = None;
    let mut step = 0;
    loop {
        step += 1;
        if stop.is_some_and(|s| step > s + 2) {
            break;
        }
        if stop.is_none() && step > max_steps {
            return Err(Error::NonTermination {
                steps: max_steps,
                trace: lambda,
            });
        }
        let layer: Vec<u64> = (0..n)
            .map(|v| {
                let inflow = tq.incoming[v]
                    .iter()
                    .fold(0u64, |acc, &l| acc.saturating_add(mu[step - 1][l]));
                let back = if step >= 2 { mu[step - 2][tq.tau[v]] } else { 0 };
                inflow.saturating_sub(back)
            })
            .collect();
        let masked = layer
            .iter()
            .enumerate()
            .map(|(v, &x)| if special_idx.contains(&v) { 0 } else { x })
            .collect();
        if stop.is_none() && layer.iter().all(|&x| x == 0) {
            stop = Some(step);
        }
        lambda.push(layer);
        mu.push(masked);
    }
    Ok(KnitState {
        start: start_idx,
        specials: special_idx,
        lambda,
        mu,
        stop: stop.expect("loop exits only after a zero layer"),
        ids: tq.ids.clone(),
    })
}

/// One printed entry of a knitting grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridCell {
    pub row: i64,
    /// Unwrapped column: the start column plus the step.
    pub column: i64,
    pub step: usize,
    pub vertex: String,
    pub value: u64,
    /// 2 for the start at step 0, 1 for other specials, 0 otherwise.
    pub circles: u8,
}

/// The lambda history laid out on the display grid.
///
/// The cells shown at step `n` are the heads of arrows out of the cells of
/// step `n - 1`, starting from the start vertex alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridTrace {
    pub start_column: i64,
    pub stop: usize,
    pub cells: Vec<GridCell>,
    #[serde(skip)]
    lookup: BTreeMap<(i64, i64), usize>,
}

impl GridTrace {
    pub fn get(&self, row: i64, column: i64) -> Option<&GridCell> {
        self.lookup.get(&(row, column)).map(|&i| &self.cells[i])
    }

    pub fn columns(&self) -> std::ops::RangeInclusive<i64> {
        let lo = self.cells.iter().map(|c| c.column).min().unwrap_or(0);
        let hi = self.cells.iter().map(|c| c.column).max().unwrap_or(0);
        lo..=hi
    }

    pub fn rows(&self) -> std::ops::RangeInclusive<i64> {
        let lo = self.cells.iter().map(|c| c.row).min().unwrap_or(0);
        let hi = self.cells.iter().map(|c| c.row).max().unwrap_or(0);
        lo..=hi
    }

    /// Plain-text grid: one line per row, specials in parentheses and the
    /// start doubly so.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let mut line = String::new();
            for col in self.columns() {
                let cell = match self.get(row, col) {
                    None => String::new(),
                    Some(c) => {
                        let open = "(".repeat(c.circles as usize);
                        let close = ")".repeat(c.circles as usize);
                        format!("{open}{}{close}", c.value)
                    }
                };
                let _ = write!(line, "{cell:>6}");
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Runs [`knit_counts`] and lays the layers out on the display grid.
/// Quivers without a layout use the vertex index as the row.
pub fn grid_trace(
    tq: &TranslationQuiver,
    specials: &BTreeSet<String>,
    start: &str,
    max_steps: usize,
) -> Result<GridTrace> {
    let state = knit_counts(tq, specials, start, max_steps)?;
    let place = |v: usize| tq.position(v).unwrap_or((v as i64, 0));
    let start_column = place(state.start).1;
    let mut cells = Vec::new();
    let mut front: BTreeSet<usize> = BTreeSet::from([state.start]);
    for (step, layer) in state.lambda.iter().enumerate() {
        if step > 0 {
            front = front.iter().flat_map(|&v| tq.outgoing[v].iter().copied()).collect();
        }
        for &v in &front {
            let circles = if step == 0 {
                2
            } else {
                u8::from(state.specials.contains(&v))
            };
            cells.push(GridCell {
                row: place(v).0,
                column: start_column + step as i64,
                step,
                vertex: tq.ids[v].clone(),
                value: layer[v],
                circles,
            });
        }
    }
    let lookup = cells.iter().enumerate().map(|(i, c)| ((c.row, c.column), i)).collect();
    Ok(GridTrace {
        start_column,
        stop: state.stop,
        cells,
        lookup,
    })
}

/// Row letters of the icosahedral Auslander-Reiten quiver, bottom row `H`.
pub const I_ROWS: [char; 8] = ['A', 'B', 'C', 'D', 'E', 'F', 'G', 'H'];

/// Column parity of each row; `None` for the middle row, which occupies
/// every column.
const ROW_PARITY: [Option<i64>; 8] = [Some(1), Some(0), None, Some(0), Some(1), Some(0), Some(1), Some(0)];

/// Row pairs joined by arrows in both directions between adjacent columns:
/// the first row sits on even columns, the second on odd columns.
const ROW_LINKS: [(usize, usize); 8] = [(1, 0), (1, 2), (2, 2), (3, 2), (3, 4), (5, 4), (5, 6), (7, 6)];

/// A special module of a built-in quiver, with the dual-graph vertex it
/// corresponds to (`star` for the start `R`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedSpecial {
    pub name: String,
    pub vertex: String,
    pub quiver_vertex: String,
}

/// Vertex id of the icosahedral quiver at `row` and `column`.
pub fn i_vertex(row: usize, column: i64) -> String {
    format!("{}{column}", I_ROWS[row])
}

/// The Auslander-Reiten quiver of `I_m`: `m` copies of the affine `E8`
/// pattern over `2m` columns, with the ends identified and `tau` shifting
/// two columns to the left.
///
/// Named specials are attached for `m = 7` and for `m = 30(b - 2) + 1` with
/// `b >= 3`; other parameters return `None`.
pub fn build_i_ar_quiver(m: u64) -> Result<(TranslationQuiver, Option<Vec<NamedSpecial>>)> {
    catalog::validate_params(&GroupId::I(m))?;
    let period = 2 * m as i64;
    let lives = |r: usize, c: i64| ROW_PARITY[r].is_none_or(|p| c.rem_euclid(2) == p);
    let mut vertices = Vec::new();
    let mut display = BTreeMap::new();
    let mut tau = BTreeMap::new();
    let mut arrows = Vec::new();
    for c in 0..period {
        for r in 0..8 {
            if !lives(r, c) {
                continue;
            }
            let id = i_vertex(r, c);
            vertices.push(id.clone());
            display.insert(id.clone(), (r as i64, c));
            tau.insert(id.clone(), i_vertex(r, (c - 2).rem_euclid(period)));
            let next = (c + 1).rem_euclid(period);
            for &(even, odd) in &ROW_LINKS {
                let target = match c % 2 {
                    0 if r == even => odd,
                    1 if r == odd => even,
                    _ => continue,
                };
                if lives(target, next) {
                    arrows.push((id.clone(), i_vertex(target, next)));
                }
            }
        }
    }
    let tq = TranslationQuiver::new(vertices, arrows, tau, Some(display), Some(period))?;
    Ok((tq, i_specials(m)))
}

fn i_specials(m: u64) -> Option<Vec<NamedSpecial>> {
    let named = |list: &[(&str, usize, i64, &str)]| {
        list.iter()
            .map(|&(name, row, col, q)| NamedSpecial {
                name: name.to_string(),
                vertex: i_vertex(row, col),
                quiver_vertex: q.to_string(),
            })
            .collect()
    };
    const H: usize = 7;
    if m == 7 {
        return Some(named(&[
            ("R", H, 0, STAR),
            ("X", 6, 1, catalog::TOP_ID),
            ("N", 2, 6, "E3"),
            ("Y1", H, 6, "E1"),
            ("Y2", 0, 13, "E2"),
            ("Z1", H, 12, "E5"),
            ("Z2", 6, 11, "E4"),
        ]));
    }
    if m > 1 && m % 30 == 1 {
        return Some(named(&[
            ("R", H, 0, STAR),
            ("A1", H, 12, "E7"),
            ("A2", H, 24, "E6"),
            ("A3", H, 36, "E5"),
            ("A4", H, 48, "E4"),
            ("B1", H, 20, "E1"),
            ("B2", H, 40, "E2"),
            ("C", H, 30, catalog::TOP_ID),
            ("M", H, 60, "E3"),
        ]));
    }
    None
}

/// One comparison between a knitted total and a geometric arrow count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheckEntry {
    pub from: String,
    pub to: String,
    pub knitted: u64,
    pub geometric: u64,
}

/// Knitted totals from every named special against the arrows of the
/// geometric quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub group: String,
    pub entries: Vec<CrossCheckEntry>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.knitted == e.geometric)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &CrossCheckEntry> {
        self.entries.iter().filter(|e| e.knitted != e.geometric)
    }
}

/// Knits from every named special of `id` and compares the totals at the
/// specials with the arrow counts of `build_quiver(dual_graph(id))`.
pub fn cross_check_report(id: &GroupId) -> Result<CrossCheck> {
    let GroupId::I(m) = *id else {
        return Err(Error::UnsupportedSpecials(id.to_string()));
    };
    let (tq, specials) = build_i_ar_quiver(m)?;
    let specials = specials.ok_or_else(|| Error::UnsupportedSpecials(id.to_string()))?;
    let quiver = build_quiver(&catalog::dual_graph(id)?)?;
    let special_ids: BTreeSet<String> = specials.iter().map(|s| s.vertex.clone()).collect();
    let mut entries = Vec::new();
    for s in &specials {
        let state = knit_counts(&tq, &special_ids, &s.vertex, tq.default_max_steps())?;
        let totals = state.totals();
        for t in &specials {
            let geometric = quiver
                .arrows(&s.quiver_vertex, &t.quiver_vertex)
                .ok_or_else(|| Error::UnknownVertex(t.quiver_vertex.clone()))?;
            entries.push(CrossCheckEntry {
                from: s.name.clone(),
                to: t.name.clone(),
                knitted: totals[&t.vertex],
                geometric,
            });
        }
    }
    Ok(CrossCheck {
        group: id.to_string(),
        entries,
    })
}

/// Whether knitting and the geometric quiver agree for `id`.
pub fn cross_check(id: &GroupId) -> Result<bool> {
    cross_check_report(id).map(|r| r.passed())
}
