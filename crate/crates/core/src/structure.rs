//! Cycle structure: the poset and forest of non-core open cycles, cycle
//! structure sets, and construction of tableaux with hook-shaped cycles.

use std::collections::{BTreeMap, BTreeSet};

use serde::ser::SerializeTuple;
use serde::{Deserialize, Serialize};

use crate::cycles::{all_cycles, move_through, Cycle, CycleInfo, CycleKind};
use crate::error::{Error, Result};
use crate::model::{between, Shape, Square};
use crate::tableau::{classify, Domino, DominoTableau, SquareKind};

/// The relation `a >= b` on non-core open cycles: the final square of `b`
/// lies between the endpoints of `a`.
pub fn dominates(a: &CycleInfo, b: &CycleInfo) -> bool {
    match (a.endpoints(), b.s_f) {
        (Some((sb, sf)), Some(f)) => between(f, sb, sf),
        _ => false,
    }
}

/// The poset on non-core open cycles.
#[derive(Debug, Clone)]
pub struct CyclePoset {
    pub cycles: Vec<CycleInfo>,
    /// `leq[i][j]` iff `cycles[i] <= cycles[j]`.
    leq: Vec<Vec<bool>>,
}

impl CyclePoset {
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Indices of the maximal elements.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| (0..self.len()).all(|j| j == i || !self.strictly_below(i, j))).collect()
    }

    fn strictly_below(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j] && !self.leq[j][i]
    }

    /// The unique minimal strict upper bound of `i`, if any.
    fn parent(&self, i: usize) -> Result<Option<usize>> {
        let uppers: Vec<usize> = (0..self.len()).filter(|&j| self.strictly_below(i, j)).collect();
        let minimal: Vec<usize> = uppers
            .iter()
            .copied()
            .filter(|&j| !uppers.iter().any(|&k| k != j && self.strictly_below(k, j)))
            .collect();
        match minimal.as_slice() {
            [] => Ok(None),
            [p] => Ok(Some(*p)),
            _ => Err(Error::internal(format!(
                "cycle {} has several covering cycles",
                self.cycles[i].cycle
            ))),
        }
    }
}

pub fn noncore_poset(t: &DominoTableau) -> CyclePoset {
    let cycles: Vec<CycleInfo> = all_cycles(t).into_iter().filter(|c| c.kind.is_noncore_open()).collect();
    let leq = cycles.iter().map(|b| cycles.iter().map(|a| dominates(a, b)).collect()).collect();
    CyclePoset { cycles, leq }
}

/// An abstract rooted plane tree with a 0/1 label per vertex. Serializes as
/// `[label, [children...]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledTree {
    pub label: u8,
    pub children: Vec<LabeledTree>,
}

impl LabeledTree {
    pub fn leaf(label: u8) -> Self {
        LabeledTree { label, children: Vec::new() }
    }

    pub fn node(label: u8, children: Vec<LabeledTree>) -> Self {
        LabeledTree { label, children }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(LabeledTree::size).sum::<usize>()
    }

    pub fn same_skeleton(&self, other: &LabeledTree) -> bool {
        self.children.len() == other.children.len()
            && self.children.iter().zip(&other.children).all(|(a, b)| a.same_skeleton(b))
    }

    /// Vertex at a path of child indices.
    pub fn get(&self, path: &[usize]) -> Option<&LabeledTree> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.children.get(i)?.get(rest),
        }
    }

    pub fn get_mut(&mut self, path: &[usize]) -> Option<&mut LabeledTree> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.children.get_mut(i)?.get_mut(rest),
        }
    }

    /// Vertex paths grouped by depth, each depth listed left to right.
    pub fn levels(&self) -> Vec<Vec<Vec<usize>>> {
        let mut levels = vec![vec![Vec::new()]];
        loop {
            let next: Vec<Vec<usize>> = levels
                .last()
                .unwrap()
                .iter()
                .flat_map(|p| {
                    let n = self.get(p).map_or(0, |v| v.children.len());
                    (0..n).map(move |i| {
                        let mut q = p.clone();
                        q.push(i);
                        q
                    })
                })
                .collect();
            if next.is_empty() {
                return levels;
            }
            levels.push(next);
        }
    }

    /// Paths of all vertices in preorder.
    pub fn paths(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        fn walk(t: &LabeledTree, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(p.clone());
            for (i, c) in t.children.iter().enumerate() {
                p.push(i);
                walk(c, p, out);
                p.pop();
            }
        }
        walk(self, &mut Vec::new(), &mut out);
        out
    }
}

impl Serialize for LabeledTree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.label)?;
        t.serialize_element(&self.children)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for LabeledTree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (label, children) = <(u8, Vec<LabeledTree>)>::deserialize(d)?;
        if label > 1 {
            return Err(serde::de::Error::custom("tree labels are 0 or 1"));
        }
        Ok(LabeledTree { label, children })
    }
}

/// A vertex of the cycle forest together with its cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleTree {
    pub cycle: CycleInfo,
    pub children: Vec<CycleTree>,
}

impl CycleTree {
    /// 0 for an up cycle, 1 for a down cycle.
    pub fn label(&self) -> u8 {
        u8::from(self.cycle.kind == CycleKind::Down)
    }

    pub fn labeled(&self) -> LabeledTree {
        LabeledTree { label: self.label(), children: self.children.iter().map(CycleTree::labeled).collect() }
    }

    pub fn get(&self, path: &[usize]) -> Option<&CycleTree> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.children.get(i)?.get(rest),
        }
    }

    fn collect<'a>(&'a self, out: &mut Vec<&'a CycleInfo>) {
        out.push(&self.cycle);
        for c in &self.children {
            c.collect(out);
        }
    }
}

/// Ordered trees of the Hasse diagram of the non-core open cycle poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleForest {
    pub trees: Vec<CycleTree>,
}

impl CycleForest {
    pub fn labeled(&self) -> Vec<LabeledTree> {
        self.trees.iter().map(CycleTree::labeled).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.labeled()).expect("forest serializes")
    }

    pub fn cycles(&self) -> Vec<&CycleInfo> {
        let mut out = Vec::new();
        for t in &self.trees {
            t.collect(&mut out);
        }
        out
    }
}

fn sb_key(c: &CycleInfo) -> (i32, i32) {
    c.s_b.map_or((i32::MAX, i32::MAX), |s| (s.row, s.col))
}

pub fn forest(t: &DominoTableau) -> Result<CycleForest> {
    let poset = noncore_poset(t);
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); poset.len()];
    let mut roots = Vec::new();
    for i in 0..poset.len() {
        match poset.parent(i)? {
            Some(p) => children[p].push(i),
            None => roots.push(i),
        }
    }
    fn build(i: usize, poset: &CyclePoset, children: &[Vec<usize>]) -> CycleTree {
        let mut kids: Vec<usize> = children[i].clone();
        kids.sort_by_key(|&k| sb_key(&poset.cycles[k]));
        CycleTree {
            cycle: poset.cycles[i].clone(),
            children: kids.into_iter().map(|k| build(k, poset, children)).collect(),
        }
    }
    roots.sort_by_key(|&k| sb_key(&poset.cycles[k]));
    Ok(CycleForest { trees: roots.into_iter().map(|r| build(r, &poset, &children)).collect() })
}

/// The set of endpoint pairs of all open cycles.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleStructureSet {
    pub pairs: BTreeSet<(Square, Square)>,
}

impl FromIterator<(Square, Square)> for CycleStructureSet {
    fn from_iter<I: IntoIterator<Item = (Square, Square)>>(iter: I) -> Self {
        CycleStructureSet { pairs: iter.into_iter().collect() }
    }
}

pub fn cycle_structure_set(t: &DominoTableau) -> CycleStructureSet {
    all_cycles(t).iter().filter_map(CycleInfo::endpoints).collect()
}

/// Moves through the non-core open cycles whose label differs from `target`,
/// which must have the skeleton of the forest of `t`.
pub fn tableau_from_labels(t: &DominoTableau, target: &[LabeledTree]) -> Result<DominoTableau> {
    let f = forest(t)?;
    let current = f.labeled();
    if current.len() != target.len() || !current.iter().zip(target).all(|(a, b)| a.same_skeleton(b)) {
        return Err(Error::SkeletonMismatch(format!(
            "target {} does not match forest {}",
            serde_json::to_string(target).unwrap_or_default(),
            f.to_json()
        )));
    }
    let mut flips = Vec::new();
    for (tree, (want, have)) in f.trees.iter().zip(target.iter().zip(&current)) {
        for p in have.paths() {
            if want.get(&p).map(|v| v.label) != have.get(&p).map(|v| v.label) {
                flips.push(tree.get(&p).expect("same skeleton").cycle.cycle.clone());
            }
        }
    }
    move_through(t, &flips)
}

/// The core cycle with no other core cycle's final square between its final
/// square and that of `c`; ties go to the smallest final-square row.
pub fn adjacent_core_cycle(c: &CycleInfo, t: &DominoTableau) -> Result<CycleInfo> {
    let target = c.s_f.ok_or_else(|| Error::InvalidCycleSet(format!("{} is closed", c.cycle)))?;
    let cores: Vec<CycleInfo> = all_cycles(t).into_iter().filter(|d| d.kind == CycleKind::Core).collect();
    if cores.is_empty() {
        return Err(Error::NoCoreCycle);
    }
    let admissible = cores.iter().filter(|d| {
        let f = d.s_f.expect("core cycles are open");
        !cores.iter().any(|e| e.cycle != d.cycle && between(e.s_f.expect("open"), f, target))
    });
    admissible
        .min_by_key(|d| {
            let f = d.s_f.expect("open");
            (f.row, f.col)
        })
        .cloned()
        .ok_or_else(|| Error::internal("no adjacent core cycle"))
}

/// A domino tiling of a skew diagram whose inner shape is a core. `links`
/// marks dominos `f` that gain the extra child containing the square
/// diagonally below-left of the given square.
#[derive(Debug, Clone, Default)]
pub struct Tiling {
    pub rank: usize,
    pub dominos: Vec<Domino>,
    pub links: BTreeMap<Domino, Square>,
}

/// Numbers a tiling by repeatedly building the tree of the domino holding
/// the rightmost square of the top row and labeling it in postfix order.
pub fn insertion_tree_numbering(tiling: &Tiling) -> Result<DominoTableau> {
    let mut owner: BTreeMap<Square, usize> = BTreeMap::new();
    for (i, d) in tiling.dominos.iter().enumerate() {
        for s in d.squares() {
            if owner.insert(s, i).is_some() {
                return Err(Error::Untileable(format!("square {s} is covered twice")));
            }
        }
    }
    let mut remaining: BTreeSet<usize> = (0..tiling.dominos.len()).collect();
    let mut labels: BTreeMap<u32, Domino> = BTreeMap::new();
    let mut next = 1u32;
    while !remaining.is_empty() {
        let start = remaining
            .iter()
            .flat_map(|&i| tiling.dominos[i].squares())
            .min_by_key(|s| (s.row, -s.col))
            .expect("nonempty");
        let mut visited = BTreeSet::new();
        let mut order = Vec::new();
        visit(owner[&start], tiling, &owner, &remaining, &mut visited, &mut order);
        for i in order {
            labels.insert(next, tiling.dominos[i]);
            next += 1;
            remaining.remove(&i);
        }
    }
    DominoTableau::from_dominos(tiling.rank, labels).map_err(|e| Error::Untileable(e.to_string()))
}

fn visit(
    f: usize,
    tiling: &Tiling,
    owner: &BTreeMap<Square, usize>,
    remaining: &BTreeSet<usize>,
    visited: &mut BTreeSet<usize>,
    order: &mut Vec<usize>,
) {
    visited.insert(f);
    let d = tiling.dominos[f];
    let mut kids: Vec<usize> = d.squares().iter().filter_map(|s| owner.get(&s.left()).copied()).collect();
    if let Some(s) = tiling.links.get(&d) {
        kids.extend(owner.get(&s.down().left()).copied());
    }
    kids.retain(|&k| k != f && remaining.contains(&k));
    kids.sort_by_key(|&k| tiling.dominos[k]);
    kids.dedup();
    for k in kids {
        if !visited.contains(&k) {
            visit(k, tiling, owner, remaining, visited, order);
        }
    }
    order.push(f);
}

#[derive(Debug, Clone)]
struct Hook {
    squares: Vec<Square>,
    corner: Square,
}

fn straight(from: Square, to: Square) -> Vec<Square> {
    let dr = (to.row - from.row).signum();
    let dc = (to.col - from.col).signum();
    let steps = (to.row - from.row).abs().max((to.col - from.col).abs());
    (0..=steps).map(|k| Square::new(from.row + k * dr, from.col + k * dc)).collect()
}

/// The L-shaped path from `b` through `corner` to `f`, without `f`.
fn hook_path(b: Square, corner: Square, f: Square) -> Hook {
    let mut squares = straight(b, corner);
    squares.extend(straight(corner, f).into_iter().skip(1));
    squares.pop();
    Hook { squares, corner }
}

fn hook_candidates(b: Square, f: Square, shape: &Shape, rank: usize) -> Vec<Hook> {
    let vertical_first = hook_path(b, Square::new(f.row, b.col), f);
    let horizontal_first = hook_path(b, Square::new(b.row, f.col), f);
    let core_pair = b.diagonal() == rank as i32 + 2;
    let order = if core_pair || f.row < b.row {
        [vertical_first, horizontal_first]
    } else {
        [horizontal_first, vertical_first]
    };
    let mut out: Vec<Hook> = Vec::new();
    for h in order {
        let fits = !h.squares.is_empty()
            && h.squares.len() % 2 == 0
            && h.squares.iter().all(|&s| shape.contains(s) && s.diagonal() >= rank as i32 + 2);
        if fits && !out.iter().any(|o| o.squares == h.squares) {
            out.push(h);
        }
    }
    out
}

/// Tiles the chosen hooks, fills the rest with 2x2 blocks of vertical
/// dominos, and records the tree links.
fn build_tiling(
    shape: &Shape,
    rank: usize,
    pairs: &[(Square, Square)],
    hooks: &[&Hook],
) -> Option<Tiling> {
    let mut tiling = Tiling { rank, ..Tiling::default() };
    let mut covered: BTreeSet<Square> = BTreeSet::new();
    for (&(b, _), hook) in pairs.iter().zip(hooks) {
        let noncore = b.diagonal() != rank as i32 + 2;
        for pair in hook.squares.chunks(2) {
            let d = Domino::new(pair[0], pair[1]).ok()?;
            if d.is_horizontal() && noncore && d.contains(hook.corner) {
                tiling.links.insert(d, hook.corner);
            }
            if d.is_vertical() && classify(rank, d.second()) == SquareKind::Fixed {
                tiling.links.insert(d, d.second());
            }
            tiling.dominos.push(d);
        }
        covered.extend(&hook.squares);
    }
    for s in shape.squares() {
        if s.diagonal() < rank as i32 + 2 || covered.contains(&s) {
            continue;
        }
        let block = [s, s.right(), s.down(), s.down().right()];
        if !block.iter().all(|&q| shape.contains(q) && !covered.contains(&q)) {
            return None;
        }
        covered.extend(block);
        tiling.dominos.push(Domino::vertical(s));
        tiling.dominos.push(Domino::vertical(s.right()));
    }
    Some(tiling)
}

fn hook_shaped(t: &DominoTableau, c: &Cycle) -> bool {
    let squares: Vec<Square> = c.labels().iter().flat_map(|&l| t.dominos()[&l].squares()).collect();
    squares.iter().any(|a| squares.iter().any(|b| squares.iter().all(|s| s.row == a.row || s.col == b.col)))
}

fn gamma_postconditions(t: &DominoTableau, cs: &CycleStructureSet) -> bool {
    t.to_raw().validate().is_valid()
        && &cycle_structure_set(t) == cs
        && all_cycles(t).iter().filter(|c| c.kind.is_open()).all(|c| hook_shaped(t, &c.cycle))
}

/// A standard tableau of the given shape and rank whose cycle structure set
/// is `cs` and whose open cycles are all hook shaped.
pub fn gamma(shape: &Shape, rank: usize, cs: &CycleStructureSet) -> Result<DominoTableau> {
    let core = crate::model::core_shape(rank);
    if !core.squares().all(|s| shape.contains(s)) {
        return Err(Error::Inconsistent(format!("shape {shape} does not contain the rank {rank} core")));
    }
    let pairs: Vec<(Square, Square)> = cs.pairs.iter().copied().collect();
    let candidates: Vec<Vec<Hook>> = pairs.iter().map(|&(b, f)| hook_candidates(b, f, shape, rank)).collect();
    if let Some(i) = candidates.iter().position(Vec::is_empty) {
        return Err(Error::Inconsistent(format!("no hook fits the pair {} -> {}", pairs[i].0, pairs[i].1)));
    }
    let mut chosen: Vec<&Hook> = Vec::new();
    let mut used: BTreeSet<Square> = BTreeSet::new();
    search(shape, rank, cs, &pairs, &candidates, &mut chosen, &mut used)
        .ok_or_else(|| Error::Inconsistent("no simultaneous hook tiling satisfies the cycle structure".into()))
}

fn search<'a>(
    shape: &Shape,
    rank: usize,
    cs: &CycleStructureSet,
    pairs: &[(Square, Square)],
    candidates: &'a [Vec<Hook>],
    chosen: &mut Vec<&'a Hook>,
    used: &mut BTreeSet<Square>,
) -> Option<DominoTableau> {
    let depth = chosen.len();
    if depth == pairs.len() {
        let tiling = build_tiling(shape, rank, pairs, chosen)?;
        let t = insertion_tree_numbering(&tiling).ok()?;
        return gamma_postconditions(&t, cs).then_some(t);
    }
    for h in &candidates[depth] {
        if h.squares.iter().any(|s| used.contains(s)) {
            continue;
        }
        used.extend(&h.squares);
        chosen.push(h);
        let found = search(shape, rank, cs, pairs, candidates, chosen, used);
        chosen.pop();
        for s in &h.squares {
            used.remove(s);
        }
        if found.is_some() {
            return found;
        }
    }
    None
}

/// `gamma` applied to the shape and cycle structure set of `t`.
pub fn gamma_of(t: &DominoTableau) -> Result<DominoTableau> {
    gamma(&t.shape(), t.rank(), &cycle_structure_set(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::insertion::rs;
    use crate::model::enumerate_group;
    use crate::tableau::fixtures::cycle_example;

    fn sq(r: i32, c: i32) -> Square {
        Square::new(r, c)
    }

    #[test]
    fn example_forest() {
        let t = cycle_example();
        let poset = noncore_poset(&t);
        let max = poset.maximal();
        assert_eq!(max.len(), 1);
        assert_eq!(poset.cycles[max[0]].cycle, Cycle::from_labels([9, 10, 11, 12, 14]));
        let f = forest(&t).unwrap();
        assert_eq!(f.labeled(), vec![LabeledTree::node(0, vec![LabeledTree::leaf(1), LabeledTree::leaf(0)])]);
        assert_eq!(f.to_json(), "[[0,[[1,[]],[0,[]]]]]");
    }

    #[test]
    fn labeled_tree_json_round_trip() {
        let t = LabeledTree::node(1, vec![LabeledTree::leaf(0), LabeledTree::node(1, vec![LabeledTree::leaf(1)])]);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<LabeledTree>(&s).unwrap(), t);
        assert!(serde_json::from_str::<LabeledTree>("[2,[]]").is_err());
    }

    #[test]
    fn poset_is_a_partial_order() {
        for g in enumerate_group(4) {
            for r in 0..2 {
                let p = noncore_poset(&rs(&g, r).right);
                for i in 0..p.len() {
                    assert!(p.leq(i, i));
                    for j in 0..p.len() {
                        if i != j {
                            assert!(!(p.leq(i, j) && p.leq(j, i)));
                        }
                        for k in 0..p.len() {
                            assert!(!(p.leq(i, j) && p.leq(j, k)) || p.leq(i, k));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn example_cs_cardinality() {
        let t = cycle_example();
        let opens = all_cycles(&t).iter().filter(|c| c.kind.is_open()).count();
        assert_eq!(cycle_structure_set(&t).pairs.len(), opens);
        assert!(cycle_structure_set(&t).pairs.contains(&(sq(4, 6), sq(5, 5))));
    }

    #[test]
    fn tableau_from_current_labels_is_identity() {
        let t = cycle_example();
        let f = forest(&t).unwrap().labeled();
        assert_eq!(tableau_from_labels(&t, &f).unwrap(), t);
        assert!(matches!(
            tableau_from_labels(&t, &[LabeledTree::leaf(0)]),
            Err(Error::SkeletonMismatch(_))
        ));
    }

    #[test]
    fn skew_numbering_example() {
        let tiling = Tiling {
            rank: 2,
            dominos: vec![
                Domino::horizontal(sq(1, 3)),
                Domino::vertical(sq(1, 5)),
                Domino::horizontal(sq(2, 2)),
                Domino::vertical(sq(2, 4)),
                Domino::horizontal(sq(3, 1)),
                Domino::vertical(sq(3, 3)),
                Domino::horizontal(sq(4, 1)),
            ],
            links: BTreeMap::new(),
        };
        let t = insertion_tree_numbering(&tiling).unwrap();
        let expect = "0 0 1 1 7\n0 2 2 6 7\n3 3 5 6\n4 4 5\n";
        assert_eq!(t, DominoTableau::parse(expect).unwrap());
    }

    #[test]
    fn single_domino_numbering() {
        let tiling = Tiling { rank: 0, dominos: vec![Domino::horizontal(sq(1, 1))], links: BTreeMap::new() };
        assert_eq!(insertion_tree_numbering(&tiling).unwrap().domino(1).unwrap(), Domino::horizontal(sq(1, 1)));
        let bad = Tiling {
            rank: 0,
            dominos: vec![Domino::horizontal(sq(1, 1)), Domino::vertical(sq(1, 1))],
            links: BTreeMap::new(),
        };
        assert!(matches!(insertion_tree_numbering(&bad), Err(Error::Untileable(_))));
    }

    #[test]
    fn gamma_without_open_pairs_uses_blocks() {
        let shape = Shape::new(vec![4, 4]).unwrap();
        let t = gamma(&shape, 0, &CycleStructureSet::default());
        // A rank-0 tableau always has an open core cycle, so an empty set is
        // inconsistent with any nonempty shape.
        assert!(matches!(t, Err(Error::Inconsistent(_))));
        let t = gamma(&Shape::empty(), 0, &CycleStructureSet::default()).unwrap();
        assert_eq!(t.n(), 0);
    }

    #[test]
    fn gamma_preserves_cs_small_exhaustive() {
        for g in enumerate_group(4) {
            for r in 0..3 {
                let t = rs(&g, r).right;
                let s = gamma_of(&t).unwrap_or_else(|e| panic!("{g} rank {r}: {e}\n{t}"));
                assert!(s.same_shape(&t));
                assert_eq!(cycle_structure_set(&s), cycle_structure_set(&t));
                assert_eq!(gamma_of(&s).unwrap(), s);
                let closed_sizes_ok = all_cycles(&s).iter().filter(|c| c.kind == CycleKind::Closed).all(|c| c.cycle.len() == 2);
                assert!(closed_sizes_ok, "{s}");
            }
        }
    }

    #[test]
    fn adjacent_core_cycle_requires_core() {
        let t = DominoTableau::empty(1);
        let fake = CycleInfo { cycle: Cycle::from_labels([1]), kind: CycleKind::Up, s_b: Some(sq(3, 1)), s_f: Some(sq(2, 2)) };
        assert_eq!(adjacent_core_cycle(&fake, &t), Err(Error::NoCoreCycle));
    }
}
