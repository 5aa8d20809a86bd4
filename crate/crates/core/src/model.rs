//! Foundational value types: squares, shapes, cores and signed permutations.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A square `s_ij` of the plane, 1-indexed.
///
/// Squares belonging to a diagram always have positive coordinates. Neighbor
/// arithmetic may produce squares with a zero coordinate; those are the
/// virtual squares that [`crate::tableau::DominoTableau::label_of`] maps to
/// label 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(i32, i32)", into = "(i32, i32)")]
pub struct Square {
    pub row: i32,
    pub col: i32,
}

impl Square {
    pub const fn new(row: i32, col: i32) -> Self {
        Square { row, col }
    }

    pub fn is_positive(self) -> bool {
        self.row >= 1 && self.col >= 1
    }

    pub fn up(self) -> Self {
        Square::new(self.row - 1, self.col)
    }

    pub fn down(self) -> Self {
        Square::new(self.row + 1, self.col)
    }

    pub fn left(self) -> Self {
        Square::new(self.row, self.col - 1)
    }

    pub fn right(self) -> Self {
        Square::new(self.row, self.col + 1)
    }

    /// Coordinate sum `i + j`.
    pub fn diagonal(self) -> i32 {
        self.row + self.col
    }

    pub fn is_adjacent(self, other: Square) -> bool {
        (self.row - other.row).abs() + (self.col - other.col).abs() == 1
    }

    /// `s_mn` is above `s_kl` iff `m < k`.
    pub fn is_above(self, other: Square) -> bool {
        self.row < other.row
    }
}

impl From<(i32, i32)> for Square {
    fn from((row, col): (i32, i32)) -> Self {
        Square { row, col }
    }
}

impl From<Square> for (i32, i32) {
    fn from(s: Square) -> Self {
        (s.row, s.col)
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

fn between_1d(m: i32, a: i32, b: i32) -> bool {
    (a <= m && m <= b) || (a >= m && m >= b)
}

/// `m` is between `a` and `b` iff both of its coordinates lie (inclusively)
/// between the corresponding coordinates of `a` and `b`.
pub fn between(m: Square, a: Square, b: Square) -> bool {
    between_1d(m.row, a.row, b.row) && between_1d(m.col, a.col, b.col)
}

/// A Young diagram given by its row lengths.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Shape {
    rows: Vec<usize>,
}

impl Shape {
    /// Builds a shape from row lengths; trailing zeros are trimmed.
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(format!(
                "row lengths {rows:?} are not weakly decreasing"
            )));
        }
        Ok(Shape { rows })
    }

    pub fn empty() -> Self {
        Shape::default()
    }

    /// The shape whose squares are exactly `squares`, if that set is a Young
    /// diagram.
    pub fn from_squares<'a>(squares: impl IntoIterator<Item = &'a Square>) -> Result<Self> {
        let set: BTreeSet<Square> = squares.into_iter().copied().collect();
        let mut rows: Vec<usize> = Vec::new();
        for s in &set {
            if !s.is_positive() {
                return Err(Error::InvalidTableau(format!("square {s} has non-positive coordinate")));
            }
            let r = s.row as usize;
            if rows.len() < r {
                rows.resize(r, 0);
            }
            rows[r - 1] = rows[r - 1].max(s.col as usize);
        }
        let shape = Shape::new(rows)?;
        if shape.size() != set.len() {
            return Err(Error::InvalidTableau("squares are not left-justified".into()));
        }
        Ok(shape)
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Length of row `i` (1-indexed); zero outside the diagram.
    pub fn row_len(&self, i: i32) -> usize {
        if i < 1 {
            return 0;
        }
        self.rows.get(i as usize - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-indexed).
    pub fn col_len(&self, j: i32) -> usize {
        if j < 1 {
            return 0;
        }
        self.rows.iter().take_while(|&&len| len >= j as usize).count()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn contains(&self, s: Square) -> bool {
        s.is_positive() && (s.col as usize) <= self.row_len(s.row)
    }

    pub fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, &len)| {
            (1..=len as i32).map(move |j| Square::new(i as i32 + 1, j))
        })
    }

    /// True iff `s` can be added to the diagram keeping it a Young diagram.
    pub fn is_addable(&self, s: Square) -> bool {
        s.is_positive()
            && self.row_len(s.row) + 1 == s.col as usize
            && (s.row == 1 || self.row_len(s.row - 1) >= s.col as usize)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// The rank-`r` core: squares `s_ij` with `i + j < r + 2`.
pub fn core_shape(rank: usize) -> Shape {
    Shape { rows: (1..=rank).rev().collect() }
}

/// An element of the hyperoctahedral group in one-line signed-word form: the
/// entry at position `k` is `ε_k · w_k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPermutation {
    word: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(word: Vec<i32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for (pos, &v) in word.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            if v == 0 {
                return Err(Error::Parse { position: pos + 1, message: "zero entry".into() });
            }
            if a > n {
                return Err(Error::Parse {
                    position: pos + 1,
                    message: format!("magnitude {a} exceeds length {n}"),
                });
            }
            if seen[a] {
                return Err(Error::Parse { position: pos + 1, message: format!("repeated magnitude {a}") });
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { word })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { word: (1..=n as i32).collect() }
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The triples `(w_k, k, ε_k)` with `ε_k ∈ {+1, -1}`.
    pub fn triples(&self) -> impl Iterator<Item = (u32, u32, i8)> + '_ {
        self.word.iter().enumerate().map(|(k, &v)| {
            (v.unsigned_abs(), k as u32 + 1, if v > 0 { 1 } else { -1 })
        })
    }

    /// If `w` sends `k` to `ε w_k`, the inverse sends `w_k` to `ε k`.
    pub fn invert(&self) -> Self {
        let mut word = vec![0; self.word.len()];
        for (k, &v) in self.word.iter().enumerate() {
            word[v.unsigned_abs() as usize - 1] = v.signum() * (k as i32 + 1);
        }
        SignedPermutation { word }
    }

    pub fn is_involution(&self) -> bool {
        self.invert() == *self
    }
}

impl TryFrom<Vec<i32>> for SignedPermutation {
    type Error = Error;

    fn try_from(word: Vec<i32>) -> Result<Self> {
        SignedPermutation::new(word)
    }
}

impl From<SignedPermutation> for Vec<i32> {
    fn from(w: SignedPermutation) -> Self {
        w.word
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses whitespace-separated signed integers such as `"3 -1 2"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut word = Vec::new();
        for (pos, tok) in s.split_whitespace().enumerate() {
            let v: i32 = tok.trim_start_matches('+').parse().map_err(|_| Error::Parse {
                position: pos + 1,
                message: format!("`{tok}` is not an integer"),
            })?;
            word.push(v);
        }
        SignedPermutation::new(word)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// `2^n · n!`
pub fn group_order(n: usize) -> usize {
    (1..=n).map(|k| 2 * k).product()
}

/// Iterator over the hyperoctahedral group in lexicographic order of the
/// signed word.
#[derive(Debug, Clone)]
pub struct GroupIter {
    n: usize,
    next: usize,
    end: usize,
}

impl GroupIter {
    /// Restricts the iteration to the elements with lexicographic rank in
    /// `range`; used to shard verification runs.
    pub fn range(n: usize, range: std::ops::Range<usize>) -> Self {
        let order = group_order(n);
        GroupIter { n, next: range.start.min(order), end: range.end.min(order) }
    }
}

impl Iterator for GroupIter {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        if self.next >= self.end {
            return None;
        }
        let w = unrank(self.n, self.next);
        self.next += 1;
        Some(w)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.end - self.next;
        (left, Some(left))
    }
}

impl ExactSizeIterator for GroupIter {}

/// The element of lexicographic rank `index` in `H_n`.
pub fn unrank(n: usize, mut index: usize) -> SignedPermutation {
    let mut remaining: Vec<i32> = (1..=n as i32).collect();
    let mut word = Vec::with_capacity(n);
    for m in (1..=n).rev() {
        let block = group_order(m - 1);
        let digit = index / block;
        index %= block;
        // sorted candidates: -max, ..., -min, min, ..., max
        let value = if digit < m {
            -remaining[m - 1 - digit]
        } else {
            remaining[digit - m]
        };
        remaining.retain(|&v| v != value.abs());
        word.push(value);
    }
    SignedPermutation { word }
}

/// All `2^n · n!` elements of `H_n`, lexicographic on the signed word.
pub fn enumerate_group(n: usize) -> GroupIter {
    GroupIter::range(n, 0..group_order(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn small_groups() {
        let g0: Vec<_> = enumerate_group(0).collect();
        assert_eq!(g0, vec![SignedPermutation::identity(0)]);
        let g1: Vec<_> = enumerate_group(1).collect();
        assert_eq!(g1, vec![w("-1"), w("1")]);
    }

    #[test]
    fn h3_has_48_distinct_sorted_elements() {
        let g: Vec<_> = enumerate_group(3).collect();
        assert_eq!(g.len(), 48);
        assert!(g.windows(2).all(|p| p[0].word() < p[1].word()));
    }

    #[test]
    fn group_cardinalities_up_to_six() {
        for n in 0..=6 {
            let set: BTreeSet<_> = enumerate_group(n).collect();
            assert_eq!(set.len(), group_order(n));
            assert!(set.iter().all(|x| x.invert().invert() == *x));
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(w("1 2 3").invert(), w("1 2 3"));
        assert_eq!(w("-1").invert(), w("-1"));
        assert_eq!(w("2 3 1").invert(), w("3 1 2"));
        assert_eq!(w("3 -1 2").invert(), w("-2 3 1"));
    }

    #[test]
    fn parse_rejects_bad_words() {
        assert!(matches!("1 0".parse::<SignedPermutation>(), Err(Error::Parse { position: 2, .. })));
        assert!(matches!("1 -1".parse::<SignedPermutation>(), Err(Error::Parse { position: 2, .. })));
        assert!(matches!("3 1".parse::<SignedPermutation>(), Err(Error::Parse { position: 1, .. })));
        assert!(matches!("1 x".parse::<SignedPermutation>(), Err(Error::Parse { position: 2, .. })));
        assert_eq!(w("+2 -1").word(), &[2, -1]);
    }

    #[test]
    fn cores() {
        assert_eq!(core_shape(0).size(), 0);
        assert_eq!(core_shape(1).squares().collect::<Vec<_>>(), vec![Square::new(1, 1)]);
        let c2: Vec<_> = core_shape(2).squares().collect();
        assert_eq!(c2, vec![Square::new(1, 1), Square::new(1, 2), Square::new(2, 1)]);
        for r in 0..8 {
            let c = core_shape(r);
            assert_eq!(c.size(), r * (r + 1) / 2);
            assert!(c.squares().all(|s| s.diagonal() < r as i32 + 2));
            assert_eq!(Shape::from_squares(&c.squares().collect::<Vec<_>>()).unwrap(), c);
        }
    }

    #[test]
    fn betweenness() {
        let s = Square::new;
        assert!(between(s(2, 2), s(1, 1), s(3, 3)));
        assert!(between(s(1, 1), s(1, 1), s(5, 5)));
        assert!(!between(s(2, 5), s(1, 1), s(3, 3)));
        assert!(between(s(2, 2), s(3, 1), s(1, 3)));
    }

    #[test]
    fn shape_validation() {
        assert!(Shape::new(vec![1, 2]).is_err());
        assert_eq!(Shape::new(vec![2, 1, 0, 0]).unwrap().rows(), &[2, 1]);
        let sh = Shape::new(vec![3, 1]).unwrap();
        assert_eq!(sh.col_len(1), 2);
        assert_eq!(sh.col_len(2), 1);
        assert!(sh.is_addable(Square::new(2, 2)));
        assert!(!sh.is_addable(Square::new(3, 2)));
    }

    proptest::proptest! {
        #[test]
        fn between_symmetric(m in (0i32..6, 0i32..6), a in (0i32..6, 0i32..6), b in (0i32..6, 0i32..6)) {
            let (m, a, b) = (Square::from(m), Square::from(a), Square::from(b));
            proptest::prop_assert_eq!(between(m, a, b), between(m, b, a));
            proptest::prop_assert!(between(a, a, b));
        }
    }
}
