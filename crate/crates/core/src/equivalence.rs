//! The two equivalence relations on tableaux and on signed permutations,
//! witness chains connecting equivalent tableaux, and an exhaustive checker
//! that the relations coincide.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::Serialize;

use crate::cycles::{all_cycles, mmt, move_through, Cycle, CycleInfo, CycleKind};
use crate::error::{Error, Result};
use crate::insertion::{rs, TableauPair};
use crate::model::{enumerate_group, group_order, Shape, SignedPermutation, Square};
use crate::structure::{adjacent_core_cycle, cycle_structure_set, forest, gamma, tableau_from_labels, CycleStructureSet, LabeledTree};
use crate::tableau::DominoTableau;

/// Largest subset enumeration performed when expanding a class.
const MAX_SUBSET_CYCLES: usize = 16;

/// Default largest `n` accepted by [`verify_theorem`].
pub const DEFAULT_BOUND: usize = 6;

/// If `t = MT(t_prime, U)` for a set `U` of non-core open cycles of
/// `t_prime`, returns `U`.
pub fn sim_tableaux(t: &DominoTableau, t_prime: &DominoTableau) -> Option<Vec<Cycle>> {
    if t.rank() != t_prime.rank() || t.n() != t_prime.n() || t.labels().ne(t_prime.labels()) {
        return None;
    }
    let infos = all_cycles(t_prime);
    let mut u = Vec::new();
    for c in &infos {
        let differs = c.cycle.labels().iter().any(|&l| t.dominos().get(&l) != t_prime.dominos().get(&l));
        if differs {
            if !c.kind.is_noncore_open() {
                return None;
            }
            u.push(c.cycle.clone());
        }
    }
    (move_through(t_prime, &u).ok()? == *t).then_some(u)
}

pub fn sim_elements(w: &SignedPermutation, y: &SignedPermutation, rank: usize) -> bool {
    w.len() == y.len() && sim_tableaux(&rs(w, rank).right, &rs(y, rank).right).is_some()
}

fn noncore_subsets(t: &DominoTableau) -> Result<Vec<DominoTableau>> {
    let open: Vec<Cycle> = all_cycles(t).into_iter().filter(|c| c.kind.is_noncore_open()).map(|c| c.cycle).collect();
    if open.len() > MAX_SUBSET_CYCLES {
        return Err(Error::ResourceBound { n: open.len(), bound: MAX_SUBSET_CYCLES });
    }
    (0u32..1 << open.len())
        .map(|mask| {
            let u: Vec<Cycle> =
                open.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, c)| c.clone()).collect();
            move_through(t, &u)
        })
        .collect()
}

/// Right tableaux at ranks `r` and `r + 1` for every element of `H_n`, in
/// enumeration order.
fn right_tableaux(n: usize, rank: usize) -> (Vec<SignedPermutation>, Vec<DominoTableau>, Vec<DominoTableau>) {
    let elems: Vec<SignedPermutation> = enumerate_group(n).collect();
    let (lo, hi): (Vec<_>, Vec<_>) =
        elems.par_iter().map(|w| (rs(w, rank).right, rs(w, rank + 1).right)).unzip();
    (elems, lo, hi)
}

/// Groups indices by key, in order of first occurrence.
fn key_groups<K: std::hash::Hash + Eq + Clone>(keys: &[K]) -> (Vec<K>, Vec<usize>) {
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut distinct = Vec::new();
    let ids = keys
        .iter()
        .map(|k| {
            *index.entry(k.clone()).or_insert_with(|| {
                distinct.push(k.clone());
                distinct.len() - 1
            })
        })
        .collect();
    (distinct, ids)
}

/// A partition of `H_n`, classes ordered by first member in enumeration
/// order and members kept in enumeration order.
pub type Partition = Vec<Vec<SignedPermutation>>;

fn classes_from(uf: &mut UnionFind<usize>, elems: &[SignedPermutation], group_of: impl Fn(usize) -> usize) -> Partition {
    let mut by_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut out: Partition = Vec::new();
    for (i, w) in elems.iter().enumerate() {
        let root = uf.find(group_of(i));
        let slot = *by_root.entry(root).or_insert_with(|| {
            out.push(Vec::new());
            out.len() - 1
        });
        out[slot].push(w.clone());
    }
    out
}

fn sim_partition_from(elems: &[SignedPermutation], lo: &[DominoTableau]) -> Result<(Partition, Vec<DominoTableau>, Vec<usize>)> {
    let (distinct, ids) = key_groups(lo);
    let index: HashMap<&DominoTableau, usize> = distinct.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let neighbours: Vec<Vec<DominoTableau>> = distinct.par_iter().map(noncore_subsets).collect::<Result<_>>()?;
    let mut uf = UnionFind::<usize>::new(distinct.len());
    for (i, ns) in neighbours.iter().enumerate() {
        for t in ns {
            let j = *index
                .get(t)
                .ok_or_else(|| Error::internal("moved tableau is not a right tableau of the group"))?;
            uf.union(i, j);
        }
    }
    let classes = classes_from(&mut uf, elems, |i| ids[i]);
    Ok((classes, distinct, ids))
}

/// The partition of `H_n` under the relation generated by moving through
/// non-core open cycles of right tableaux at rank `r`.
pub fn sim_partition(n: usize, rank: usize) -> Result<Partition> {
    let elems: Vec<SignedPermutation> = enumerate_group(n).collect();
    let lo: Vec<DominoTableau> = elems.par_iter().map(|w| rs(w, rank).right).collect();
    sim_partition_from(&elems, &lo).map(|(p, _, _)| p)
}

fn squig_partition_from(elems: &[SignedPermutation], lo: &[DominoTableau], hi: &[DominoTableau]) -> Partition {
    let mut uf = UnionFind::<usize>::new(elems.len());
    for keys in [lo, hi] {
        let (_, ids) = key_groups(keys);
        let mut first: HashMap<usize, usize> = HashMap::new();
        for (i, g) in ids.into_iter().enumerate() {
            let f = *first.entry(g).or_insert(i);
            uf.union(f, i);
        }
    }
    classes_from(&mut uf, elems, |i| i)
}

/// The transitive closure of "same right tableau at rank `r` or at rank
/// `r + 1`" on `H_n`.
pub fn squig_partition(n: usize, rank: usize) -> Partition {
    let (elems, lo, hi) = right_tableaux(n, rank);
    squig_partition_from(&elems, &lo, &hi)
}

fn flip_paths(a: &LabeledTree, b: &LabeledTree) -> Vec<Vec<usize>> {
    a.paths().into_iter().filter(|p| a.get(p).map(|v| v.label) != b.get(p).map(|v| v.label)).collect()
}

/// Single-vertex flips taking `from` to the alternating labeling, top down
/// and right to left within a depth.
fn towards_alternating(from: &LabeledTree, epsilon: u8) -> Vec<LabeledTree> {
    let mut cur = from.clone();
    let mut out = vec![cur.clone()];
    for (depth, level) in from.levels().into_iter().enumerate() {
        let want = if depth % 2 == 0 { epsilon } else { 1 - epsilon };
        for p in level.into_iter().rev() {
            let v = cur.get_mut(&p).expect("path from same tree");
            if v.label != want {
                v.label = want;
                out.push(cur.clone());
            }
        }
    }
    out
}

/// A sequence of labeled trees from `from` to `to` in which consecutive
/// trees differ at one vertex whose ancestors carry alternating labels
/// starting with `epsilon` at the root.
pub fn tree_step_sequence(from: &LabeledTree, to: &LabeledTree, epsilon: u8) -> Result<Vec<LabeledTree>> {
    if !from.same_skeleton(to) {
        return Err(Error::SkeletonMismatch("trees have different shapes".into()));
    }
    if from == to {
        return Ok(vec![from.clone()]);
    }
    let mut seq = towards_alternating(from, epsilon);
    let mut back = towards_alternating(to, epsilon);
    back.pop();
    seq.extend(back.into_iter().rev());
    seq.dedup();
    Ok(seq)
}

/// Whether `to` is reachable from `from` by flipping one vertex whose
/// ancestors alternate from `epsilon`.
pub fn is_tree_step(from: &LabeledTree, to: &LabeledTree, epsilon: u8) -> bool {
    let flips = flip_paths(from, to);
    match flips.as_slice() {
        [p] => (0..p.len()).all(|d| {
            let want = if d % 2 == 0 { epsilon } else { 1 - epsilon };
            from.get(&p[..d]).map(|v| v.label) == Some(want)
        }),
        _ => false,
    }
}

/// One link of a witness chain: `left` and `left_next` are left tableaux for
/// the two right tableaux such that both pairs share the right tableau
/// `merged` after the minimal moving-through map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessStep {
    pub left: DominoTableau,
    pub left_next: DominoTableau,
    pub merged: DominoTableau,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessChain {
    pub tableaux: Vec<DominoTableau>,
    pub steps: Vec<WitnessStep>,
}

impl WitnessChain {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("chain serializes")
    }
}

fn endpoints_of(info: &CycleInfo) -> Result<(Square, Square)> {
    info.endpoints().ok_or_else(|| Error::VerificationFailure(format!("cycle {} is not open", info.cycle)))
}

fn find_cycle(t: &DominoTableau, c: &Cycle) -> Result<CycleInfo> {
    all_cycles(t)
        .into_iter()
        .find(|i| &i.cycle == c)
        .ok_or_else(|| Error::VerificationFailure(format!("cycle {c} is not a cycle of the tableau")))
}

/// The chain `d = c_0, c_1, ..., c_l` of cycles of `x` along `path` of tree
/// `tree`, as endpoint pairs.
fn chain_endpoints(x: &DominoTableau, d: &Cycle, tree: usize, path: &[usize]) -> Result<Vec<(Square, Square)>> {
    let f = forest(x)?;
    let root = f.trees.get(tree).ok_or_else(|| Error::VerificationFailure("tree index out of range".into()))?;
    let mut out = vec![endpoints_of(&find_cycle(x, d)?)?];
    for depth in 0..=path.len() {
        let v = root.get(&path[..depth]).ok_or_else(|| Error::VerificationFailure("path leaves the tree".into()))?;
        out.push(endpoints_of(&v.cycle)?);
    }
    Ok(out)
}

/// The modified cycle structure set in which the chain `c_0, ..., c_k`
/// is re-paired so that its cycles merge into one extended cycle.
fn re_paired(x: &DominoTableau, chain: &[(Square, Square)], k: usize) -> CycleStructureSet {
    let mut set = cycle_structure_set(x);
    if k == 0 {
        return set;
    }
    for p in &chain[..=k] {
        set.pairs.remove(p);
    }
    let b = |j: usize| chain[j].0;
    let f = |j: usize| chain[j].1;
    set.pairs.insert((b(0), f(1)));
    for j in (1..).take_while(|j| 2 * j <= k) {
        set.pairs.insert((b(2 * j), f(2 * j - 2)));
    }
    for j in (1..).take_while(|j| 2 * j < k) {
        set.pairs.insert((b(2 * j - 1), f(2 * j + 1)));
    }
    if k % 2 == 1 {
        set.pairs.insert((b(k), f(k - 1)));
    } else {
        set.pairs.insert((b(k - 1), f(k)));
    }
    set
}

fn gamma_in(x: &DominoTableau, cs: &CycleStructureSet) -> Result<DominoTableau> {
    let shape: Shape = x.shape();
    gamma(&shape, x.rank(), cs).map_err(|e| Error::VerificationFailure(format!("witness construction failed: {e}")))
}

fn replace_tree(f: &[LabeledTree], k: usize, t: &LabeledTree) -> Vec<LabeledTree> {
    let mut out = f.to_vec();
    out[k] = t.clone();
    out
}

fn verify_step(
    ti: &DominoTableau,
    tn: &DominoTableau,
    d: &Cycle,
    tree: usize,
    path: &[usize],
    epsilon: u8,
) -> Result<WitnessStep> {
    let l = path.len() + 1;
    let label_here = forest(ti)?.labeled()[tree].get(path).map(|v| v.label);
    let alternating = if (l - 1) % 2 == 0 { epsilon } else { 1 - epsilon };
    let (k_here, k_next) = if label_here == Some(alternating) { (l, l - 1) } else { (l - 1, l) };
    let s = gamma_in(ti, &re_paired(ti, &chain_endpoints(ti, d, tree, path)?, k_here))?;
    let s_next = gamma_in(tn, &re_paired(tn, &chain_endpoints(tn, d, tree, path)?, k_next))?;
    let a = mmt(&TableauPair::new(s.clone(), ti.clone())?)?.right;
    let b = mmt(&TableauPair::new(s_next.clone(), tn.clone())?)?.right;
    if a != b {
        return Err(Error::VerificationFailure(format!(
            "merged right tableaux differ:\n{a}\nversus\n{b}"
        )));
    }
    Ok(WitnessStep { left: s, left_next: s_next, merged: a })
}

/// The sign used for the tree moves of `tree` in `t`: 1 when the adjacent
/// core cycle ends above the root cycle.
pub fn tree_epsilon(t: &DominoTableau, tree: usize) -> Result<(Cycle, u8)> {
    let f = forest(t)?;
    let c = &f.trees.get(tree).ok_or_else(|| Error::internal("tree index out of range"))?.cycle;
    let d = adjacent_core_cycle(c, t)?;
    let above = d.s_f.expect("open").row < c.s_f.expect("open").row;
    Ok((d.cycle, u8::from(above)))
}

/// A sequence of tableaux from `from` to `to`, each consecutive pair
/// certified by left tableaux whose minimal moving-through images share a
/// right tableau.
pub fn witness_chain(from: &DominoTableau, to: &DominoTableau) -> Result<WitnessChain> {
    if sim_tableaux(to, from).is_none() {
        return Err(Error::InvalidCycleSet("tableaux are not related by moving through non-core open cycles".into()));
    }
    let target = forest(to)?.labeled();
    let mut current = from.clone();
    let mut chain = WitnessChain { tableaux: vec![current.clone()], steps: Vec::new() };
    for k in 0..target.len() {
        let labels = forest(&current)?.labeled();
        if labels[k] == target[k] {
            continue;
        }
        let (d, epsilon) = tree_epsilon(&current, k)?;
        let seq = tree_step_sequence(&labels[k], &target[k], epsilon)?;
        for pair in seq.windows(2) {
            let now = forest(&current)?.labeled();
            let next = tableau_from_labels(&current, &replace_tree(&now, k, &pair[1]))?;
            let path = match flip_paths(&pair[0], &pair[1]).as_slice() {
                [p] => p.clone(),
                _ => return Err(Error::internal("tree step flips more than one vertex")),
            };
            let step = verify_step(&current, &next, &d, k, &path, epsilon)?;
            chain.steps.push(step);
            chain.tableaux.push(next.clone());
            current = next;
        }
    }
    if &current != to {
        return Err(Error::VerificationFailure("chain does not end at the target".into()));
    }
    Ok(chain)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassStats {
    pub size: usize,
    pub right_tableaux: usize,
    pub involutions: usize,
    pub shapes: Vec<Shape>,
    pub noncore_open_cycles: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub n: usize,
    pub r: usize,
    pub classes_sim: Partition,
    pub classes_squig: Partition,
    pub equal: bool,
    pub stats: Vec<ClassStats>,
    /// Number of verified witness chains, when requested.
    pub witness_chains: Option<usize>,
}

impl EquivalenceReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub bound: usize,
    pub witnesses: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { bound: DEFAULT_BOUND, witnesses: false }
    }
}

fn canonical(p: &Partition) -> BTreeSet<Vec<SignedPermutation>> {
    p.iter().cloned().collect()
}

/// Computes both partitions of `H_n` at rank `r` and compares them.
pub fn verify_theorem(n: usize, rank: usize, opts: VerifyOptions) -> Result<EquivalenceReport> {
    if n > opts.bound {
        return Err(Error::ResourceBound { n, bound: opts.bound });
    }
    debug_assert!(group_order(n) > 0);
    let (elems, lo, hi) = right_tableaux(n, rank);
    let (classes_sim, distinct, ids) = sim_partition_from(&elems, &lo)?;
    let classes_squig = squig_partition_from(&elems, &lo, &hi);
    let equal = canonical(&classes_sim) == canonical(&classes_squig);
    let position: HashMap<&SignedPermutation, usize> = elems.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut stats = Vec::new();
    let mut class_tableaux = Vec::new();
    for class in &classes_sim {
        let members: BTreeSet<usize> = class.iter().map(|w| ids[position[w]]).collect();
        let shapes: BTreeSet<Shape> = members.iter().map(|&i| distinct[i].shape()).collect();
        let first = &distinct[*members.first().expect("nonempty class")];
        stats.push(ClassStats {
            size: class.len(),
            right_tableaux: members.len(),
            involutions: class.iter().filter(|w| w.is_involution()).count(),
            shapes: shapes.into_iter().collect(),
            noncore_open_cycles: all_cycles(first).iter().filter(|c| c.kind.is_noncore_open()).count(),
        });
        class_tableaux.push(members.into_iter().map(|i| distinct[i].clone()).collect::<Vec<_>>());
    }
    let witness_chains = if opts.witnesses {
        let counts: Vec<usize> = class_tableaux
            .par_iter()
            .map(|ts| {
                ts[1..].iter().try_fold(0usize, |acc, t| witness_chain(&ts[0], t).map(|_| acc + 1))
            })
            .collect::<Result<_>>()?;
        Some(counts.into_iter().sum())
    } else {
        None
    };
    Ok(EquivalenceReport { n, r: rank, classes_sim, classes_squig, equal, stats, witness_chains })
}

/// Cycle kinds present in a tableau, for reporting.
pub fn kind_counts(t: &DominoTableau) -> BTreeMap<CycleKind, usize> {
    let mut m = BTreeMap::new();
    for c in all_cycles(t) {
        *m.entry(c.kind).or_insert(0) += 1;
    }
    m
}
