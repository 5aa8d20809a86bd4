//! Domino insertion and the rank-r Robinson-Schensted maps.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{core_shape, SignedPermutation, Square};
use crate::tableau::{Bitableau, Domino, DominoTableau, YoungTableau};

/// The insertion tableau (`left`) and recording tableau (`right`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TableauPair {
    pub left: DominoTableau,
    pub right: DominoTableau,
}

impl TableauPair {
    pub fn new(left: DominoTableau, right: DominoTableau) -> Result<Self> {
        if left.rank() != right.rank() {
            return Err(Error::MalformedPair(format!(
                "ranks differ: {} and {}",
                left.rank(),
                right.rank()
            )));
        }
        if !left.same_shape(&right) {
            return Err(Error::MalformedPair(format!(
                "shapes differ: {} and {}",
                left.shape(),
                right.shape()
            )));
        }
        Ok(TableauPair { left, right })
    }

    pub fn rank(&self) -> usize {
        self.left.rank()
    }

    pub fn swap(&self) -> Self {
        TableauPair { left: self.right.clone(), right: self.left.clone() }
    }
}

/// A growing Young diagram kept as row lengths.
#[derive(Clone)]
struct Diagram {
    rows: Vec<i32>,
}

impl Diagram {
    fn of(t: &DominoTableau, below: u32) -> Self {
        Diagram::below(t.rank(), t.dominos(), below)
    }

    fn below(rank: usize, dominos: &BTreeMap<u32, Domino>, below: u32) -> Self {
        let mut rows: Vec<i32> = core_shape(rank).rows().iter().map(|&l| l as i32).collect();
        for (_, d) in dominos.range(..below) {
            for s in d.squares() {
                let i = s.row as usize - 1;
                if rows.len() <= i {
                    rows.resize(i + 1, 0);
                }
                rows[i] = rows[i].max(s.col);
            }
        }
        Diagram { rows }
    }

    fn row_len(&self, i: i32) -> i32 {
        if i < 1 {
            return 0;
        }
        self.rows.get(i as usize - 1).copied().unwrap_or(0)
    }

    fn col_len(&self, j: i32) -> i32 {
        self.rows.iter().take_while(|&&l| l >= j).count() as i32
    }

    fn contains(&self, s: Square) -> bool {
        s.is_positive() && s.col <= self.row_len(s.row)
    }

    fn add(&mut self, d: Domino) {
        for s in d.squares() {
            let i = s.row as usize - 1;
            if self.rows.len() <= i {
                self.rows.resize(i + 1, 0);
            }
            self.rows[i] = self.rows[i].max(s.col);
        }
    }

    fn horizontal_end(&self, row: i32) -> Domino {
        Domino::horizontal(Square::new(row, self.row_len(row) + 1))
    }

    fn vertical_end(&self, col: i32) -> Domino {
        Domino::vertical(Square::new(self.col_len(col) + 1, col))
    }
}

fn seed(sigma: &Diagram, value: i32) -> Domino {
    if value > 0 {
        sigma.horizontal_end(1)
    } else {
        sigma.vertical_end(1)
    }
}

/// Inserts the signed value into `s`, returning the new tableau and the two
/// squares by which its shape grew.
pub fn insert_tracked(s: &DominoTableau, value: i32) -> Result<(DominoTableau, Domino)> {
    if value == 0 {
        return Err(Error::internal("cannot insert 0"));
    }
    let x = value.unsigned_abs();
    if s.dominos().contains_key(&x) {
        return Err(Error::DuplicateLabel(x));
    }
    let mut nu = Diagram::of(s, x);
    let mut out: BTreeMap<u32, Domino> = s.dominos().range(..x).map(|(&l, &d)| (l, d)).collect();
    let first = seed(&nu, value);
    out.insert(x, first);
    nu.add(first);
    // `e` is the difference between the new and old diagrams of labels
    // processed so far; it is always a single domino.
    let mut e = first;
    for (&y, &d) in s.dominos().range(x + 1..) {
        let placed = if !d.intersects(e) {
            d
        } else if d == e {
            if d.is_horizontal() {
                nu.horizontal_end(d.first().row + 1)
            } else {
                nu.vertical_end(d.first().col + 1)
            }
        } else {
            let head = d.first();
            if !nu.contains(head) || nu.contains(d.second()) {
                return Err(Error::internal_at(head, "bumping met an unexpected overlap"));
            }
            if d.is_horizontal() {
                Domino::vertical(d.second())
            } else {
                Domino::horizontal(d.second())
            }
        };
        let new_sq: Vec<Square> = placed.squares().into_iter().filter(|&q| !nu.contains(q)).collect();
        // Squares freed from the old diagram are exactly those of `d` left
        // outside the new one once `placed` is added.
        nu.add(placed);
        let gained: BTreeSet<Square> = e.squares().into_iter().chain(new_sq).filter(|q| !d.contains(*q)).collect();
        let gained: Vec<Square> = gained.into_iter().collect();
        if gained.len() != 2 {
            return Err(Error::internal("insertion difference is not a domino"));
        }
        e = Domino::new(gained[0], gained[1])?;
        out.insert(y, placed);
    }
    let t = DominoTableau::from_dominos(s.rank(), out)?;
    Ok((t, e))
}

/// Inserts a signed value: positive seeds a horizontal domino in the first
/// row, negative a vertical domino in the first column.
pub fn insert_domino(s: &DominoTableau, value: i32) -> Result<DominoTableau> {
    insert_tracked(s, value).map(|(t, _)| t)
}

/// The rank-r Robinson-Schensted map.
pub fn rs(w: &SignedPermutation, rank: usize) -> TableauPair {
    let mut left = DominoTableau::empty(rank);
    let mut recorded = BTreeMap::new();
    for (k, &v) in w.word().iter().enumerate() {
        let (next, added) = insert_tracked(&left, v).expect("insertion of a signed permutation cannot fail");
        recorded.insert(k as u32 + 1, added);
        left = next;
    }
    let right = DominoTableau::from_dominos(rank, recorded).expect("recording tableau is valid");
    TableauPair { left, right }
}

/// Undoes one insertion: removes the domino `added` from the shape of `t`,
/// returning the smaller tableau and the inserted signed value.
pub fn uninsert(t: &DominoTableau, added: Domino) -> Result<(DominoTableau, i32)> {
    let mut out = t.dominos().clone();
    let mut e = added;
    for (&y, &d) in t.dominos().iter().rev() {
        let hits = d.squares().iter().filter(|&&q| e.contains(q)).count();
        match hits {
            0 => {}
            2 => {
                out.remove(&y);
                let nu = Diagram::below(t.rank(), &out, y);
                if d.is_horizontal() && d.first().row == 1 {
                    return finish(t.rank(), out, y as i32);
                }
                if d.is_vertical() && d.first().col == 1 {
                    return finish(t.rank(), out, -(y as i32));
                }
                let back = if d.is_horizontal() {
                    let k = d.first().row - 1;
                    Domino::horizontal(Square::new(k, nu.row_len(k) - 1))
                } else {
                    let c = d.first().col - 1;
                    Domino::vertical(Square::new(nu.col_len(c) - 1, c))
                };
                out.insert(y, back);
                e = back;
            }
            _ => {
                let (back, freed) = if d.is_vertical() && e.contains(d.second()) {
                    let top = d.first();
                    let k = top.row;
                    let c = top.col - 1;
                    (Domino::horizontal(Square::new(k, c)), Domino::vertical(Square::new(k, c)))
                } else if d.is_horizontal() && e.contains(d.second()) {
                    let left = d.first();
                    (Domino::vertical(left.up()), Domino::horizontal(left.up()))
                } else {
                    return Err(Error::internal_at(d.first(), "reverse bumping met an unexpected overlap"));
                };
                out.insert(y, back);
                e = freed;
            }
        }
    }
    Err(Error::internal("reverse bumping never reached a seed"))
}

fn finish(rank: usize, dominos: BTreeMap<u32, Domino>, value: i32) -> Result<(DominoTableau, i32)> {
    Ok((DominoTableau::from_dominos(rank, dominos)?, value))
}

/// Inverse of [`rs`].
pub fn rs_inverse(pair: &TableauPair, rank: usize) -> Result<SignedPermutation> {
    let pair = TableauPair::new(pair.left.clone(), pair.right.clone())?;
    if pair.rank() != rank {
        return Err(Error::MalformedPair(format!("pair has rank {}, expected {rank}", pair.rank())));
    }
    if !pair.left.is_standard() || !pair.right.is_standard() {
        return Err(Error::MalformedPair("tableaux must be standard".into()));
    }
    let mut left = pair.left;
    let mut right = pair.right.dominos().clone();
    let mut word = vec![0; right.len()];
    while let Some((k, added)) = right.pop_last() {
        let (smaller, v) = uninsert(&left, added)?;
        word[k as usize - 1] = v;
        left = smaller;
    }
    SignedPermutation::new(word)
}

/// Row insertion of `x` into a Young tableau, returning the row index where
/// the shape grew.
fn row_insert(t: &mut YoungTableau, mut x: u32) -> usize {
    for (i, row) in t.rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(p) => x = std::mem::replace(&mut row[p], x),
            None => {
                row.push(x);
                return i;
            }
        }
    }
    t.rows.push(vec![x]);
    t.rows.len() - 1
}

/// The bitableau Robinson-Schensted algorithm: positive values are row
/// inserted into the first component, negative ones (by absolute value) into
/// the second, and the recording tableaux track where each component grew.
pub fn rs_bitableau(w: &SignedPermutation) -> (Bitableau, Bitableau) {
    let mut p = Bitableau::default();
    let mut q = Bitableau::default();
    for (k, &v) in w.word().iter().enumerate() {
        let (pt, qt) = if v > 0 { (&mut p.first, &mut q.first) } else { (&mut p.second, &mut q.second) };
        let row = row_insert(pt, v.unsigned_abs());
        if qt.rows.len() <= row {
            qt.rows.push(Vec::new());
        }
        qt.rows[row].push(k as u32 + 1);
    }
    (p, q)
}
