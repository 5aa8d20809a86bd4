//! Rank-r standard domino tableaux and standard bitableaux.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{core_shape, Shape, Square};

/// A domino: two adjacent squares, stored in row-major order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[Square; 2]", try_from = "[Square; 2]")]
pub struct Domino([Square; 2]);

impl Domino {
    pub fn new(a: Square, b: Square) -> Result<Self> {
        if !a.is_adjacent(b) {
            return Err(Error::InvalidTableau(format!("squares {a} and {b} are not adjacent")));
        }
        Ok(if a <= b { Domino([a, b]) } else { Domino([b, a]) })
    }

    pub fn horizontal(s: Square) -> Self {
        Domino([s, s.right()])
    }

    pub fn vertical(s: Square) -> Self {
        Domino([s, s.down()])
    }

    /// Top square for vertical dominos, left square for horizontal ones.
    pub fn first(self) -> Square {
        self.0[0]
    }

    pub fn second(self) -> Square {
        self.0[1]
    }

    pub fn squares(self) -> [Square; 2] {
        self.0
    }

    pub fn is_horizontal(self) -> bool {
        self.0[0].row == self.0[1].row
    }

    pub fn is_vertical(self) -> bool {
        !self.is_horizontal()
    }

    pub fn contains(self, s: Square) -> bool {
        self.0[0] == s || self.0[1] == s
    }

    pub fn intersects(self, other: Domino) -> bool {
        self.contains(other.0[0]) || self.contains(other.0[1])
    }

    /// The square of the domino whose parity class is fixed at rank `rank`.
    pub fn fixed_square(self, rank: usize) -> Square {
        if classify(rank, self.0[0]) == SquareKind::Fixed {
            self.0[0]
        } else {
            self.0[1]
        }
    }
}

impl From<Domino> for [Square; 2] {
    fn from(d: Domino) -> Self {
        d.0
    }
}

impl TryFrom<[Square; 2]> for Domino {
    type Error = Error;

    fn try_from([a, b]: [Square; 2]) -> Result<Self> {
        Domino::new(a, b)
    }
}

/// Square classification relative to a rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SquareKind {
    Fixed,
    /// Variable square in an odd row.
    VariableX,
    /// Variable square in an even row.
    VariableW,
}

impl SquareKind {
    pub fn is_variable(self) -> bool {
        self != SquareKind::Fixed
    }
}

/// A square is fixed when `i + j` has the opposite parity to the rank.
pub fn classify(rank: usize, s: Square) -> SquareKind {
    if (s.diagonal() - rank as i32).rem_euclid(2) == 1 {
        SquareKind::Fixed
    } else if s.row.rem_euclid(2) == 1 {
        SquareKind::VariableX
    } else {
        SquareKind::VariableW
    }
}

/// Extended label of a square: virtual squares with a non-positive coordinate
/// read as 0 and absent positive squares read as infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Finite(u32),
    Infinity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySets {
    /// Squares of the diagram missing their right or lower neighbor.
    pub inner: BTreeSet<Square>,
    /// Missing right/lower neighbors of `inner` squares.
    pub outer: BTreeSet<Square>,
    /// Squares of the diagram on the anti-diagonal `i + j = r + 2`.
    pub diagonal: BTreeSet<Square>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HolesAndCorners {
    pub holes: BTreeSet<Square>,
    pub corners: BTreeSet<Square>,
}

/// Unvalidated tableau data; the canonical JSON form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawTableau {
    pub rank: usize,
    pub shape: Vec<usize>,
    pub dominos: BTreeMap<u32, [Square; 2]>,
}

/// Outcome of [`RawTableau::validate`]. `diagnostics` is empty iff valid; its
/// first entry names the first violated invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validation {
    pub diagnostics: Vec<String>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.diagnostics.is_empty()
    }
}

impl RawTableau {
    /// Checks every tableau invariant, continuing past the first failure so
    /// that all problems are reported.
    pub fn validate(&self) -> Validation {
        let mut diag = Vec::new();
        match check_structure(self.rank, &self.dominos, false) {
            Ok(grid) => {
                let shape = Shape::new(grid.iter().map(Vec::len).collect()).unwrap_or_default();
                if shape.rows() != self.shape.as_slice() {
                    diag.push(format!(
                        "declared shape {:?} does not match occupied squares {}",
                        self.shape, shape
                    ));
                }
                diag.extend(monotonicity_violations(&grid));
            }
            Err(e) => diag.push(e.to_string()),
        }
        let n = self.dominos.len() as u32;
        if let Some((&bad, _)) = self.dominos.iter().find(|(&l, _)| l == 0 || l > n) {
            diag.push(format!("labels must be exactly 1..{n}; found {bad}"));
        }
        Validation { diagnostics: diag }
    }
}

/// Builds the dense grid, checking core, adjacency, overlap and Young-diagram
/// shape. With `partial` set, labels need not be `1..n`.
fn check_structure(
    rank: usize,
    dominos: &BTreeMap<u32, [Square; 2]>,
    partial: bool,
) -> Result<Vec<Vec<u32>>> {
    let core = core_shape(rank);
    let mut cells: BTreeMap<Square, u32> = core.squares().map(|s| (s, 0)).collect();
    for (&label, &[a, b]) in dominos {
        if label == 0 {
            return Err(Error::InvalidTableau("label 0 is reserved for the core".into()));
        }
        if !a.is_adjacent(b) {
            return Err(Error::InvalidTableau(format!("domino {label} squares {a},{b} are not adjacent")));
        }
        for s in [a, b] {
            if !s.is_positive() {
                return Err(Error::InvalidTableau(format!("domino {label} uses square {s} outside the quadrant")));
            }
            if let Some(prev) = cells.insert(s, label) {
                return Err(Error::InvalidTableau(if prev == 0 {
                    format!("domino {label} overlaps core square {s}")
                } else {
                    format!("dominos {prev} and {label} overlap at {s}")
                }));
            }
        }
        if classify(rank, a).is_variable() == classify(rank, b).is_variable() {
            return Err(Error::InvalidTableau(format!("domino {label} lacks a fixed/variable square pair")));
        }
    }
    if !partial {
        let n = dominos.len() as u32;
        if let Some(&bad) = dominos.keys().find(|&&l| l > n) {
            return Err(Error::InvalidTableau(format!("labels must be exactly 1..{n}; found {bad}")));
        }
    }
    let shape = Shape::from_squares(cells.keys())
        .map_err(|_| Error::InvalidTableau("occupied squares do not form a Young diagram".into()))?;
    let mut grid: Vec<Vec<u32>> = shape.rows().iter().map(|&len| vec![0; len]).collect();
    for (s, l) in cells {
        grid[s.row as usize - 1][s.col as usize - 1] = l;
    }
    Ok(grid)
}

fn monotonicity_violations(grid: &[Vec<u32>]) -> Vec<String> {
    let mut out = Vec::new();
    for (i, row) in grid.iter().enumerate() {
        for (j, &l) in row.iter().enumerate() {
            if let Some(&r) = row.get(j + 1) {
                if r < l {
                    out.push(format!(
                        "row monotonicity violated at ({},{}): {l} then {r}",
                        i + 1,
                        j + 1
                    ));
                }
            }
            if let Some(&d) = grid.get(i + 1).and_then(|next| next.get(j)) {
                if d < l {
                    out.push(format!(
                        "column monotonicity violated at ({},{}): {l} above {d}",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
    }
    out
}

/// A rank-r domino tableau: the rank-r core labeled 0 plus labeled dominos,
/// with labels weakly increasing along rows and columns.
///
/// Intermediate tableaux produced during insertion may carry an arbitrary set
/// of distinct positive labels; a tableau is *standard* when its labels are
/// exactly `1..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominoTableau {
    rank: usize,
    dominos: BTreeMap<u32, Domino>,
    grid: Vec<Vec<u32>>,
}

impl DominoTableau {
    pub fn empty(rank: usize) -> Self {
        let grid = core_shape(rank).rows().iter().map(|&len| vec![0; len]).collect();
        DominoTableau { rank, dominos: BTreeMap::new(), grid }
    }

    /// Builds a tableau from dominos, requiring all invariants except that the
    /// labels be `1..n`.
    pub fn from_dominos(rank: usize, dominos: BTreeMap<u32, Domino>) -> Result<Self> {
        let raw: BTreeMap<u32, [Square; 2]> = dominos.iter().map(|(&l, &d)| (l, d.squares())).collect();
        let grid = check_structure(rank, &raw, true)?;
        if let Some(v) = monotonicity_violations(&grid).into_iter().next() {
            return Err(Error::InvalidTableau(v));
        }
        Ok(DominoTableau { rank, dominos, grid })
    }

    /// Builds a standard tableau.
    pub fn standard(rank: usize, dominos: BTreeMap<u32, Domino>) -> Result<Self> {
        let t = DominoTableau::from_dominos(rank, dominos)?;
        if !t.is_standard() {
            return Err(Error::InvalidTableau(format!("labels must be exactly 1..{}", t.n())));
        }
        Ok(t)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of dominos.
    pub fn n(&self) -> usize {
        self.dominos.len()
    }

    pub fn is_standard(&self) -> bool {
        self.dominos.keys().copied().eq(1..=self.n() as u32)
    }

    pub fn shape(&self) -> Shape {
        Shape::new(self.grid.iter().map(Vec::len).collect()).expect("grid rows are a partition")
    }

    pub fn same_shape(&self, other: &DominoTableau) -> bool {
        self.rank == other.rank
            && self.grid.len() == other.grid.len()
            && self.grid.iter().zip(&other.grid).all(|(a, b)| a.len() == b.len())
    }

    pub fn dominos(&self) -> &BTreeMap<u32, Domino> {
        &self.dominos
    }

    pub fn labels(&self) -> impl Iterator<Item = u32> + '_ {
        self.dominos.keys().copied()
    }

    pub fn domino(&self, label: u32) -> Result<Domino> {
        self.dominos.get(&label).copied().ok_or(Error::LabelNotFound(label))
    }

    pub fn contains(&self, s: Square) -> bool {
        self.label_at(s).is_some()
    }

    /// Label of a square inside the diagram (0 for the core).
    pub fn label_at(&self, s: Square) -> Option<u32> {
        if !s.is_positive() {
            return None;
        }
        self.grid.get(s.row as usize - 1)?.get(s.col as usize - 1).copied()
    }

    /// Extended label: 0 when a coordinate is non-positive, infinity for an
    /// absent positive square, otherwise the label (0 on the core).
    pub fn label_of(&self, s: Square) -> Label {
        if !s.is_positive() {
            return Label::Finite(0);
        }
        match self.label_at(s) {
            Some(l) => Label::Finite(l),
            None => Label::Infinity,
        }
    }

    pub fn classify_square(&self, s: Square) -> SquareKind {
        classify(self.rank, s)
    }

    pub fn is_core(&self, s: Square) -> bool {
        s.is_positive() && s.diagonal() < self.rank as i32 + 2
    }

    pub fn boundary_sets(&self) -> BoundarySets {
        let mut inner = BTreeSet::new();
        let mut outer = BTreeSet::new();
        for (i, row) in self.grid.iter().enumerate() {
            for j in 0..row.len() {
                let s = Square::new(i as i32 + 1, j as i32 + 1);
                let missing: Vec<Square> =
                    [s.right(), s.down()].into_iter().filter(|&x| !self.contains(x)).collect();
                if !missing.is_empty() {
                    inner.insert(s);
                    outer.extend(missing);
                }
            }
        }
        if self.grid.is_empty() {
            outer.insert(Square::new(1, 1));
        }
        let d = self.rank as i32 + 2;
        let diagonal = (1..d).map(|i| Square::new(i, d - i)).filter(|&s| self.contains(s)).collect();
        BoundarySets { inner, outer, diagonal }
    }

    /// Variable squares of `∂ ∪ ρ` with neither right nor lower neighbor in
    /// the diagram: holes are of type W, corners of type X.
    pub fn holes_and_corners(&self) -> HolesAndCorners {
        let b = self.boundary_sets();
        let mut holes = BTreeSet::new();
        let mut corners = BTreeSet::new();
        for s in b.inner.iter().chain(&b.outer).copied() {
            if self.contains(s.right()) || self.contains(s.down()) {
                continue;
            }
            match self.classify_square(s) {
                SquareKind::VariableW => {
                    holes.insert(s);
                }
                SquareKind::VariableX => {
                    corners.insert(s);
                }
                SquareKind::Fixed => {}
            }
        }
        HolesAndCorners { holes, corners }
    }

    pub fn to_raw(&self) -> RawTableau {
        RawTableau {
            rank: self.rank,
            shape: self.shape().rows().to_vec(),
            dominos: self.dominos.iter().map(|(&l, &d)| (l, d.squares())).collect(),
        }
    }

    /// Canonical JSON: rank, shape, dominos keyed by label in increasing order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_raw()).expect("tableau serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawTableau = serde_json::from_str(text).map_err(|e| Error::Parse {
            position: e.column(),
            message: e.to_string(),
        })?;
        DominoTableau::try_from(raw)
    }

    /// Grid rendering: one line per row, core squares shown as `0`, each
    /// domino label repeated over its two squares.
    pub fn render(&self) -> String {
        let width = self.dominos.keys().last().map_or(1, |l| l.to_string().len());
        let mut out = String::new();
        for row in &self.grid {
            let line: Vec<String> = row.iter().map(|l| format!("{l:>width$}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Inverse of [`DominoTableau::render`]. The rank is recovered from the
    /// number of core squares.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cells: BTreeMap<u32, Vec<Square>> = BTreeMap::new();
        let mut zeros = 0usize;
        let mut rows = Vec::new();
        let mut token = 0usize;
        for (i, line) in text.lines().enumerate() {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            rows.push(toks.len());
            for (j, tok) in toks.iter().enumerate() {
                token += 1;
                let l: u32 = tok.parse().map_err(|_| Error::Parse {
                    position: token,
                    message: format!("`{tok}` is not a label"),
                })?;
                let s = Square::new(i as i32 + 1, j as i32 + 1);
                if l == 0 {
                    zeros += 1;
                } else {
                    cells.entry(l).or_default().push(s);
                }
            }
        }
        let rank = (0..).find(|r| r * (r + 1) / 2 >= zeros).unwrap_or(0);
        if rank * (rank + 1) / 2 != zeros {
            return Err(Error::InvalidTableau(format!("{zeros} core squares is not a staircase")));
        }
        let mut dominos = BTreeMap::new();
        for (l, sq) in cells {
            if sq.len() != 2 {
                return Err(Error::InvalidTableau(format!("label {l} occupies {} squares", sq.len())));
            }
            dominos.insert(l, [sq[0], sq[1]]);
        }
        let raw = RawTableau { rank, shape: rows, dominos };
        DominoTableau::try_from(raw)
    }
}

impl TryFrom<RawTableau> for DominoTableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Self> {
        let v = raw.validate();
        if let Some(first) = v.diagnostics.into_iter().next() {
            return Err(Error::InvalidTableau(first));
        }
        let dominos = raw
            .dominos
            .iter()
            .map(|(&l, &[a, b])| Domino::new(a, b).map(|d| (l, d)))
            .collect::<Result<_>>()?;
        DominoTableau::from_dominos(raw.rank, dominos)
    }
}

impl fmt::Debug for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DominoTableau(rank {})", self.rank)?;
        f.write_str(&self.render())
    }
}

impl fmt::Display for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for DominoTableau {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_raw().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DominoTableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawTableau::deserialize(deserializer)?;
        DominoTableau::try_from(raw).map_err(serde::de::Error::custom)
    }
}

/// A Young tableau stored by rows.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct YoungTableau {
    pub rows: Vec<Vec<u32>>,
}

impl YoungTableau {
    pub fn shape(&self) -> Shape {
        Shape::new(self.rows.iter().map(Vec::len).collect()).unwrap_or_default()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Strictly increasing along rows and down columns, with a partition shape.
    pub fn is_strict(&self) -> bool {
        let rows_ok = self.rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let inc = self.rows.iter().enumerate().all(|(i, row)| {
            row.windows(2).all(|p| p[0] < p[1])
                && row.iter().enumerate().all(|(j, &x)| {
                    self.rows.get(i + 1).and_then(|r| r.get(j)).is_none_or(|&y| x < y)
                })
        });
        rows_ok && inc && self.rows.iter().all(|r| !r.is_empty())
    }
}

/// A pair of standard Young tableaux whose label sets partition `1..n`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bitableau {
    pub first: YoungTableau,
    pub second: YoungTableau,
}

impl Bitableau {
    pub fn shapes(&self) -> (Shape, Shape) {
        (self.first.shape(), self.second.shape())
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn is_standard(&self) -> bool {
        let mut all: Vec<u32> = self.first.entries().chain(self.second.entries()).collect();
        all.sort_unstable();
        self.first.is_strict() && self.second.is_strict() && all.into_iter().eq(1..=self.size() as u32)
    }
}

fn core_row_len(rank: usize, i: i32) -> i32 {
    (rank as i32 + 1 - i).max(0)
}

fn place(t: &mut YoungTableau, row: usize, col: usize, label: u32) -> Result<()> {
    if t.rows.len() <= row {
        t.rows.resize(row + 1, Vec::new());
    }
    let r = &mut t.rows[row];
    if r.len() <= col {
        r.resize(col + 1, 0);
    }
    r[col] = label;
    Ok(())
}

/// Splits a large-rank tableau into a bitableau.
///
/// When `rank >= n - 1` every horizontal domino lies in a row to the right of
/// the core and every vertical domino in a column below it. The `m`-th
/// horizontal domino of row `i` becomes cell `(i, m)` of the first tableau;
/// the `m`-th vertical domino of column `j` becomes cell `(j, m)` of the
/// second.
pub fn to_bitableau(t: &DominoTableau) -> Result<Bitableau> {
    let n = t.n();
    if n > 0 && t.rank() + 1 < n {
        return Err(Error::RankTooSmall { rank: t.rank(), n });
    }
    let mut out = Bitableau::default();
    for (&label, &d) in t.dominos() {
        if d.is_horizontal() {
            let s = d.second();
            let offset = s.col - core_row_len(t.rank(), s.row);
            if offset <= 0 || offset % 2 != 0 {
                return Err(Error::internal_at(s, "horizontal domino misaligned with core"));
            }
            place(&mut out.first, s.row as usize - 1, offset as usize / 2 - 1, label)?;
        } else {
            let s = d.second();
            let offset = s.row - core_row_len(t.rank(), s.col);
            if offset <= 0 || offset % 2 != 0 {
                return Err(Error::internal_at(s, "vertical domino misaligned with core"));
            }
            place(&mut out.second, s.col as usize - 1, offset as usize / 2 - 1, label)?;
        }
    }
    if !(out.first.is_strict() || out.first.rows.is_empty()) || !(out.second.is_strict() || out.second.rows.is_empty()) {
        return Err(Error::internal("bitableau components are not Young tableaux"));
    }
    Ok(out)
}

/// Inverse of [`to_bitableau`] at the given rank.
pub fn from_bitableau(b: &Bitableau, rank: usize) -> Result<DominoTableau> {
    let n = b.size();
    if n > 0 && rank + 1 < n {
        return Err(Error::RankTooSmall { rank, n });
    }
    let mut dominos = BTreeMap::new();
    for (i, row) in b.first.rows.iter().enumerate() {
        let r = i as i32 + 1;
        for (m, &label) in row.iter().enumerate() {
            let right = core_row_len(rank, r) + 2 * (m as i32 + 1);
            dominos.insert(label, Domino::horizontal(Square::new(r, right - 1)));
        }
    }
    for (j, col) in b.second.rows.iter().enumerate() {
        let c = j as i32 + 1;
        for (m, &label) in col.iter().enumerate() {
            let bottom = core_row_len(rank, c) + 2 * (m as i32 + 1);
            if dominos.insert(label, Domino::vertical(Square::new(bottom - 1, c))).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
        }
    }
    DominoTableau::from_dominos(rank, dominos)
}

/// All standard domino tableaux of the given rank with `n` dominos, built by
/// adding the domino labeled `k` to every tableau with `k - 1` dominos.
pub fn standard_tableaux(rank: usize, n: usize) -> Vec<DominoTableau> {
    let mut level = vec![DominoTableau::empty(rank)];
    for k in 1..=n as u32 {
        let mut next = BTreeSet::new();
        for t in &level {
            let shape = t.shape();
            for i in 1..=shape.num_rows() as i32 + 1 {
                let s = Square::new(i, shape.row_len(i) as i32 + 1);
                for d in [Domino::horizontal(s), Domino::vertical(s)] {
                    let mut dominos = t.dominos().clone();
                    dominos.insert(k, d);
                    if let Ok(grown) = DominoTableau::from_dominos(rank, dominos) {
                        next.insert(grown);
                    }
                }
            }
        }
        level = next.into_iter().collect();
    }
    level
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn sq(r: i32, c: i32) -> Square {
        Square::new(r, c)
    }

    #[test]
    fn empty_tableau_is_valid() {
        let t = DominoTableau::empty(0);
        assert!(t.to_raw().validate().is_valid());
        assert_eq!(t.render(), "");
        assert_eq!(DominoTableau::parse("").unwrap(), t);
    }

    #[test]
    fn cycle_example_validates() {
        let t = cycle_example();
        assert_eq!(t.rank(), 2);
        assert_eq!(t.n(), 18);
        assert_eq!(t.shape().rows(), &[8, 7, 6, 6, 4, 3, 3, 2]);
        assert!(t.to_raw().validate().is_valid());
        assert_eq!(t.label_of(sq(1, 3)), Label::Finite(1));
        assert_eq!(t.label_of(sq(0, 5)), Label::Finite(0));
        assert_eq!(t.label_of(sq(20, 20)), Label::Infinity);
        assert_eq!(t.label_of(sq(1, 1)), Label::Finite(0));
    }

    #[test]
    fn swapped_labels_break_row_monotonicity() {
        let mut raw = cycle_example().to_raw();
        let a = raw.dominos[&11];
        let b = raw.dominos[&12];
        raw.dominos.insert(11, b);
        raw.dominos.insert(12, a);
        let v = raw.validate();
        assert!(!v.is_valid());
        assert!(v.diagnostics[0].contains("row monotonicity"), "{:?}", v.diagnostics);
    }

    #[test]
    fn validation_reports_structural_problems() {
        let mut raw = DominoTableau::empty(1).to_raw();
        raw.dominos.insert(1, [sq(1, 1), sq(1, 2)]);
        raw.shape = vec![2];
        assert!(raw.validate().diagnostics[0].contains("core"));
        let mut raw = DominoTableau::empty(0).to_raw();
        raw.dominos.insert(2, [sq(1, 1), sq(1, 2)]);
        raw.shape = vec![2];
        assert!(raw.validate().diagnostics[0].contains("1..1"));
        let mut raw = DominoTableau::empty(0).to_raw();
        raw.dominos.insert(1, [sq(1, 2), sq(1, 3)]);
        raw.shape = vec![3];
        assert!(!raw.validate().is_valid());
    }

    #[test]
    fn classification() {
        assert_eq!(classify(0, sq(1, 1)), SquareKind::VariableX);
        assert_eq!(classify(0, sq(1, 2)), SquareKind::Fixed);
        assert_eq!(classify(1, sq(2, 1)), SquareKind::VariableW);
    }

    #[test]
    fn every_domino_has_one_fixed_square() {
        let t = cycle_example();
        for d in t.dominos().values() {
            let fixed = d.squares().iter().filter(|&&s| t.classify_square(s) == SquareKind::Fixed).count();
            assert_eq!(fixed, 1);
        }
    }

    #[test]
    fn boundary_sets_examples() {
        let b = DominoTableau::empty(0).boundary_sets();
        assert!(b.inner.is_empty() && b.diagonal.is_empty());
        assert_eq!(b.outer, BTreeSet::from([sq(1, 1)]));

        let t = cycle_example();
        let b = t.boundary_sets();
        assert_eq!(b.diagonal, BTreeSet::from([sq(1, 3), sq(2, 2), sq(3, 1)]));
        for s in &b.diagonal {
            assert!(t.contains(*s) && t.classify_square(*s).is_variable());
        }
    }

    fn brute_force_holes_corners(t: &DominoTableau) -> HolesAndCorners {
        let mut holes = BTreeSet::new();
        let mut corners = BTreeSet::new();
        let rows = t.shape().num_rows() as i32 + 2;
        let cols = t.shape().row_len(1) as i32 + 2;
        for i in 1..=rows {
            for j in 1..=cols {
                let s = sq(i, j);
                let occupied = |x: Square| t.contains(x);
                let in_inner = occupied(s) && (!occupied(s.right()) || !occupied(s.down()));
                let empty_origin = t.rank() == 0 && t.n() == 0 && s == sq(1, 1);
                let in_outer = !occupied(s) && (occupied(s.left()) || occupied(s.up()) || empty_origin);
                if !(in_inner || in_outer) || occupied(s.right()) || occupied(s.down()) {
                    continue;
                }
                match t.classify_square(s) {
                    SquareKind::VariableW => {
                        holes.insert(s);
                    }
                    SquareKind::VariableX => {
                        corners.insert(s);
                    }
                    SquareKind::Fixed => {}
                }
            }
        }
        HolesAndCorners { holes, corners }
    }

    #[test]
    fn holes_corners_match_brute_force() {
        let single = DominoTableau::from_dominos(0, BTreeMap::from([(1, Domino::horizontal(sq(1, 1)))])).unwrap();
        for t in [single, cycle_example(), DominoTableau::empty(0), DominoTableau::empty(3)] {
            assert_eq!(t.holes_and_corners(), brute_force_holes_corners(&t), "{t:?}");
        }
        let hc = DominoTableau::empty(0).holes_and_corners();
        assert!(hc.holes.is_empty());
        assert_eq!(hc.corners, BTreeSet::from([sq(1, 1)]));
    }

    #[test]
    fn render_parse_and_json_round_trip() {
        let t = cycle_example();
        assert_eq!(DominoTableau::parse(&t.render()).unwrap(), t);
        let json = t.to_json();
        assert_eq!(json, cycle_example().to_json());
        assert_eq!(DominoTableau::from_json(&json).unwrap(), t);
        assert!(json.starts_with("{\"rank\":2,\"shape\":[8,7,6,6,4,3,3,2],\"dominos\":{\"1\":[[1,3],[1,4]],\"2\""));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(DominoTableau::parse("0 1 1\n0"), Err(Error::InvalidTableau(_))));
        assert!(matches!(DominoTableau::parse("1 1 x"), Err(Error::Parse { position: 3, .. })));
        assert!(DominoTableau::parse("1 2\n1 2").is_ok());
        assert!(DominoTableau::parse("1 2\n2 1").is_err());
        assert!(DominoTableau::from_json("{\"rank\":0,\"shape\":[2],\"dominos\":{\"1\":[[1,1],[2,2]]}}").is_err());
    }

    #[test]
    fn bitableau_identification_single_domino() {
        let h = DominoTableau::from_dominos(1, BTreeMap::from([(1, Domino::horizontal(sq(1, 2)))])).unwrap();
        let b = to_bitableau(&h).unwrap();
        assert_eq!(b.first.rows, vec![vec![1]]);
        assert!(b.second.rows.is_empty());
        let v = DominoTableau::from_dominos(1, BTreeMap::from([(1, Domino::vertical(sq(2, 1)))])).unwrap();
        let b = to_bitableau(&v).unwrap();
        assert!(b.first.rows.is_empty());
        assert_eq!(b.second.rows, vec![vec![1]]);
        assert_eq!(from_bitableau(&b, 1).unwrap(), v);
    }

    #[test]
    fn standard_tableau_counts() {
        // Rank 0 tableaux with one domino: horizontal or vertical.
        assert_eq!(standard_tableaux(0, 1).len(), 2);
        assert_eq!(standard_tableaux(3, 0), vec![DominoTableau::empty(3)]);
        // For large rank the count is the number of standard bitableaux.
        assert_eq!(standard_tableaux(2, 2).len(), 6);
        assert!(standard_tableaux(1, 3).iter().all(|t| t.to_raw().validate().is_valid()));
    }

    #[test]
    fn bitableau_rejects_small_rank() {
        let t = cycle_example();
        assert_eq!(to_bitableau(&t), Err(Error::RankTooSmall { rank: 2, n: 18 }));
    }
}
