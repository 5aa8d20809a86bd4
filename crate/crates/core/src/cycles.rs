//! Cycles of a domino tableau, moving through them, extended cycles of a
//! same-shape pair and the minimal moving-through map.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::insertion::TableauPair;
use crate::model::Square;
use crate::tableau::{Domino, DominoTableau, Label};

/// A cycle, identified by its label set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle(BTreeSet<u32>);

impl Cycle {
    pub fn from_labels(labels: impl IntoIterator<Item = u32>) -> Self {
        Cycle(labels.into_iter().collect())
    }

    pub fn labels(&self) -> &BTreeSet<u32> {
        &self.0
    }

    pub fn contains(&self, label: u32) -> bool {
        self.0.contains(&label)
    }

    pub fn min_label(&self) -> u32 {
        *self.0.first().expect("cycles are nonempty")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CycleKind {
    /// Open cycle meeting the anti-diagonal just outside the core.
    Core,
    Up,
    Down,
    Closed,
}

impl CycleKind {
    pub fn is_open(self) -> bool {
        self != CycleKind::Closed
    }

    /// Open and not meeting the core diagonal.
    pub fn is_noncore_open(self) -> bool {
        matches!(self, CycleKind::Up | CycleKind::Down)
    }
}

/// A cycle with its classification. `s_b` is the square vacated by moving
/// through it (a diagonal square for core cycles) and `s_f` the square gained.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CycleInfo {
    pub cycle: Cycle,
    pub kind: CycleKind,
    pub s_b: Option<Square>,
    pub s_f: Option<Square>,
}

impl CycleInfo {
    /// Both endpoints of an open cycle.
    pub fn endpoints(&self) -> Option<(Square, Square)> {
        Some((self.s_b?, self.s_f?))
    }
}

/// The domino `D'(k)` obtained by keeping the fixed square of `D(k)` and
/// pairing it with a neighbour chosen by comparing `k` against a diagonal
/// neighbour's extended label.
pub fn moved_domino(t: &DominoTableau, k: u32) -> Result<Domino> {
    let d = t.domino(k)?;
    let f = d.fixed_square(t.rank());
    let key = Label::Finite(k);
    // Top of a vertical domino or right end of a horizontal one.
    let pivot_up = if d.is_vertical() { d.first() == f } else { d.second() == f };
    if pivot_up {
        if key < t.label_of(f.up().right()) {
            Domino::new(f, f.up())
        } else {
            Domino::new(f, f.right())
        }
    } else if key < t.label_of(f.down().left()) {
        Domino::new(f, f.left())
    } else {
        Domino::new(f, f.down())
    }
}

fn all_moved(t: &DominoTableau) -> BTreeMap<u32, Domino> {
    t.labels().map(|l| (l, moved_domino(t, l).expect("label present"))).collect()
}

fn owner_map(t: &DominoTableau) -> BTreeMap<Square, u32> {
    t.dominos().iter().flat_map(|(&l, d)| d.squares().map(|s| (s, l))).collect()
}

/// The cycle through `k`, by breadth-first closure of the overlap relation
/// between old and moved dominos.
pub fn cycle_through(t: &DominoTableau, k: u32) -> Result<Cycle> {
    t.domino(k)?;
    let owners = owner_map(t);
    let moved = all_moved(t);
    // Reverse direction: labels whose moved domino covers a square of `l`.
    let mut covering: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for (&m, d) in &moved {
        for s in d.squares() {
            if let Some(&l) = owners.get(&s) {
                covering.entry(l).or_default().push(m);
            }
        }
    }
    let mut seen = BTreeSet::from([k]);
    let mut queue = VecDeque::from([k]);
    while let Some(l) = queue.pop_front() {
        let forward = moved[&l].squares().into_iter().filter_map(|s| owners.get(&s).copied());
        let backward = covering.get(&l).into_iter().flatten().copied();
        for m in forward.chain(backward).collect::<Vec<_>>() {
            if seen.insert(m) {
                queue.push_back(m);
            }
        }
    }
    Ok(Cycle(seen))
}

fn diagonal_index(t: &DominoTableau, s: Square) -> bool {
    s.diagonal() == t.rank() as i32 + 2
}

fn classify_cycle(t: &DominoTableau, cycle: Cycle, moved: &BTreeMap<u32, Domino>) -> Result<CycleInfo> {
    let old: BTreeSet<Square> = cycle.0.iter().flat_map(|l| t.dominos()[l].squares()).collect();
    let new: BTreeSet<Square> = cycle.0.iter().flat_map(|l| moved[l].squares()).collect();
    let vacated: Vec<Square> = old.difference(&new).copied().collect();
    let gained: Vec<Square> = new.difference(&old).copied().collect();
    match (vacated.as_slice(), gained.as_slice()) {
        ([], []) => Ok(CycleInfo { cycle, kind: CycleKind::Closed, s_b: None, s_f: None }),
        (&[b], &[f]) => {
            let kind = if diagonal_index(t, b) {
                CycleKind::Core
            } else if b.row < f.row {
                CycleKind::Down
            } else {
                CycleKind::Up
            };
            Ok(CycleInfo { cycle, kind, s_b: Some(b), s_f: Some(f) })
        }
        _ => Err(Error::internal(format!(
            "cycle {cycle} vacates {} squares and gains {}",
            vacated.len(),
            gained.len()
        ))),
    }
}

/// All cycles of `t`, ordered by smallest label, each classified.
pub fn all_cycles(t: &DominoTableau) -> Vec<CycleInfo> {
    let labels: Vec<u32> = t.labels().collect();
    let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let owners = owner_map(t);
    let moved = all_moved(t);
    let mut uf = UnionFind::<usize>::new(labels.len());
    for (&m, d) in &moved {
        for s in d.squares() {
            if let Some(l) = owners.get(&s) {
                uf.union(index[l], index[&m]);
            }
        }
    }
    let mut groups: BTreeMap<usize, BTreeSet<u32>> = BTreeMap::new();
    for (i, &l) in labels.iter().enumerate() {
        groups.entry(uf.find(i)).or_default().insert(l);
    }
    let mut cycles: Vec<Cycle> = groups.into_values().map(Cycle).collect();
    cycles.sort();
    cycles
        .into_iter()
        .map(|c| classify_cycle(t, c, &moved).expect("cycle endpoints are well defined"))
        .collect()
}

/// Open cycles that do not meet the core diagonal.
pub fn noncore_open_cycles(t: &DominoTableau) -> Vec<CycleInfo> {
    all_cycles(t).into_iter().filter(|c| c.kind.is_noncore_open()).collect()
}

pub fn core_cycles(t: &DominoTableau) -> Vec<CycleInfo> {
    all_cycles(t).into_iter().filter(|c| c.kind == CycleKind::Core).collect()
}

/// Replaces `D(l)` by `D'(l)` for every label in `labels` at once.
fn move_labels(t: &DominoTableau, labels: &BTreeSet<u32>, rank: usize) -> Result<DominoTableau> {
    let mut dominos = t.dominos().clone();
    for &l in labels {
        dominos.insert(l, moved_domino(t, l)?);
    }
    DominoTableau::from_dominos(rank, dominos)
        .map_err(|e| Error::InvalidCycleSet(format!("moving through the cycles breaks the tableau: {e}")))
}

/// Checks that `cycles` are distinct cycles of `t` and decides the rank of
/// the result: moving through the core cycles raises the rank by one, and
/// they must then all be moved together.
fn check_cycle_set(t: &DominoTableau, cycles: &[Cycle]) -> Result<(BTreeSet<u32>, usize)> {
    let infos = all_cycles(t);
    let mut labels = BTreeSet::new();
    let mut cores_moved = 0;
    for c in cycles {
        let info = infos
            .iter()
            .find(|i| &i.cycle == c)
            .ok_or_else(|| Error::StaleCycle(format!("{c} is not a cycle of this tableau")))?;
        if !labels.is_disjoint(c.labels()) {
            return Err(Error::InvalidCycleSet(format!("{c} listed twice")));
        }
        labels.extend(c.labels());
        if info.kind == CycleKind::Core {
            cores_moved += 1;
        }
    }
    let cores = infos.iter().filter(|i| i.kind == CycleKind::Core).count();
    let rank = match cores_moved {
        0 => t.rank(),
        m if m == cores => t.rank() + 1,
        m => {
            return Err(Error::InvalidCycleSet(format!(
                "core cycles must be moved together; {m} of {cores} given"
            )))
        }
    };
    Ok((labels, rank))
}

/// Moves through a set of cycles simultaneously. The result does not depend
/// on the order of `cycles`.
pub fn move_through(t: &DominoTableau, cycles: &[Cycle]) -> Result<DominoTableau> {
    let (labels, rank) = check_cycle_set(t, cycles)?;
    move_labels(t, &labels, rank)
}

/// Corresponding extended cycles of the two sides of a same-shape pair.
///
/// The chain order holds: `in_right[i]` and `in_left[i]` share `s_b`, and
/// `in_left[i]` shares `s_f` with `in_right[i + 1]` cyclically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExtendedCyclePair {
    pub in_left: Vec<CycleInfo>,
    pub in_right: Vec<CycleInfo>,
}

impl ExtendedCyclePair {
    pub fn has_core(&self) -> bool {
        self.in_left.iter().chain(&self.in_right).any(|c| c.kind == CycleKind::Core)
    }
}

/// Orders one connected component into the chain described on
/// [`ExtendedCyclePair`], failing if the component is not such a chain.
fn chain(left: Vec<CycleInfo>, right: Vec<CycleInfo>) -> Result<ExtendedCyclePair> {
    let lost = |msg: &str| Error::SkeletonMismatch(format!("extended cycle is not a closed chain: {msg}"));
    if left.len() != right.len() {
        return Err(lost("sides have different sizes"));
    }
    let mut left_pool = left;
    let mut right_pool = right;
    right_pool.sort();
    let start = right_pool.remove(0);
    let first_f = start.s_f;
    let mut in_right = vec![start];
    let mut in_left = Vec::new();
    loop {
        let c = in_right.last().unwrap();
        let pos = left_pool.iter().position(|d| d.s_b == c.s_b).ok_or_else(|| lost("unmatched vacated square"))?;
        let d = left_pool.remove(pos);
        let next_f = d.s_f;
        in_left.push(d);
        if right_pool.is_empty() {
            if next_f != first_f {
                return Err(lost("chain does not close"));
            }
            break;
        }
        let pos = right_pool.iter().position(|c| c.s_f == next_f).ok_or_else(|| lost("unmatched gained square"))?;
        in_right.push(right_pool.remove(pos));
    }
    Ok(ExtendedCyclePair { in_left, in_right })
}

/// Partitions the open cycles of both sides into corresponding extended
/// cycles: connected components of the graph joining a left and a right
/// cycle that share a vacated or a gained square.
pub fn extended_cycle_pairs(pair: &TableauPair) -> Result<Vec<ExtendedCyclePair>> {
    let pair = TableauPair::new(pair.left.clone(), pair.right.clone())?;
    let left: Vec<CycleInfo> = all_cycles(&pair.left).into_iter().filter(|c| c.kind.is_open()).collect();
    let right: Vec<CycleInfo> = all_cycles(&pair.right).into_iter().filter(|c| c.kind.is_open()).collect();
    let nl = left.len();
    let mut uf = UnionFind::<usize>::new(nl + right.len());
    for (i, a) in left.iter().enumerate() {
        for (j, b) in right.iter().enumerate() {
            if a.s_b == b.s_b || a.s_f == b.s_f {
                uf.union(i, nl + j);
            }
        }
    }
    let mut comps: BTreeMap<usize, (Vec<CycleInfo>, Vec<CycleInfo>)> = BTreeMap::new();
    for (i, a) in left.into_iter().enumerate() {
        comps.entry(uf.find(i)).or_default().0.push(a);
    }
    for (j, b) in right.into_iter().enumerate() {
        comps.entry(uf.find(nl + j)).or_default().1.push(b);
    }
    let mut out = comps.into_values().map(|(l, r)| chain(l, r)).collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

fn labels_of(cycles: &[CycleInfo]) -> Vec<Cycle> {
    cycles.iter().map(|c| c.cycle.clone()).collect()
}

/// Moves through one extended cycle pair, which must not involve core cycles.
pub fn move_through_pair(pair: &TableauPair, b: &ExtendedCyclePair) -> Result<TableauPair> {
    if !extended_cycle_pairs(pair)?.contains(b) {
        return Err(Error::StaleCycle("extended cycle pair was not computed from this pair".into()));
    }
    if b.has_core() {
        return Err(Error::InvalidCycleSet(
            "an extended cycle through the core diagonal can only be moved by mmt".into(),
        ));
    }
    let left = move_through(&pair.left, &labels_of(&b.in_left))?;
    let right = move_through(&pair.right, &labels_of(&b.in_right))?;
    TableauPair::new(left, right)
}

/// The minimal moving-through map: moves every extended cycle pair meeting
/// the core diagonal on either side, producing a same-shape pair of rank one
/// higher.
pub fn mmt(pair: &TableauPair) -> Result<TableauPair> {
    let rank = pair.rank() + 1;
    let mut left_labels = BTreeSet::new();
    let mut right_labels = BTreeSet::new();
    for b in extended_cycle_pairs(pair)?.into_iter().filter(ExtendedCyclePair::has_core) {
        left_labels.extend(b.in_left.iter().flat_map(|c| c.cycle.labels().iter().copied()));
        right_labels.extend(b.in_right.iter().flat_map(|c| c.cycle.labels().iter().copied()));
    }
    let left = move_labels(&pair.left, &left_labels, rank)?;
    let right = move_labels(&pair.right, &right_labels, rank)?;
    TableauPair::new(left, right).map_err(|e| Error::internal(format!("mmt broke the pair: {e}")))
}
