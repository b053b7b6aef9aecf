//! Integer partitions and Young-diagram combinatorics.
//!
//! Cells are 1-based `(row, col)` pairs. A rim hook (border strip) is an
//! edge-connected skew shape with no 2x2 block; the strips of size `h` that
//! can be removed from a diagram are in bijection with its cells of hook
//! length `h`, and strips are added through beta-numbers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts are not
    /// weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!(
                "parts {parts:?} are not weakly decreasing positive integers"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(first, tail...)`; callers guarantee `first >= tail[0]`.
    pub fn with_first_row(first: usize, tail: &Partition) -> Self {
        let mut parts = Vec::with_capacity(tail.len() + 1);
        if first > 0 {
            parts.push(first);
        }
        parts.extend_from_slice(&tail.0);
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part, 1-based; zero past the end.
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    pub fn first_part(&self) -> usize {
        self.part(1)
    }

    /// Rows below the first.
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_part();
        Partition(
            (1..=width)
                .map(|col| self.0.iter().take_while(|&&p| p >= col).count())
                .collect(),
        )
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// True if the diagram of `other` sits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |col| Cell { row: i + 1, col }))
    }

    pub fn hook_length(&self, cell: Cell) -> Option<usize> {
        if !self.contains_cell(cell) {
            return None;
        }
        let arm = self.part(cell.row) - cell.col;
        let leg = self.0[cell.row..].iter().take_while(|&&p| p >= cell.col).count();
        Some(arm + leg + 1)
    }

    /// Multiplicity of each part value.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for &p in &self.0 {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    fn partial_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (1..=len)
            .map(|i| {
                acc += self.part(i);
                acc
            })
            .collect()
    }

    /// Beta-numbers on `count` beads: `parts[i] + count - 1 - i`, decreasing.
    fn beta_set(&self, count: usize) -> Vec<usize> {
        debug_assert!(count >= self.len());
        (0..count).map(|i| self.part(i + 1) + count - 1 - i).collect()
    }

    fn from_beta_set(mut beta: Vec<usize>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let count = beta.len();
        let parts = beta
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (count - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        Partition(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"[5,2]"`; brackets are optional and `"[]"` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner.strip_prefix('[').unwrap_or(inner);
        let inner = inner.strip_suffix(']').unwrap_or(inner).trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {tok:?} in {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in {s:?}")));
        }
        Partition::new(parts)
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A box of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dominance {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// Compares two partitions of the same size in dominance order.
pub fn dominance_compare(a: &Partition, b: &Partition) -> Result<Dominance> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            left: a.size(),
            right: b.size(),
        });
    }
    if a == b {
        return Ok(Dominance::Equal);
    }
    let len = a.len().max(b.len());
    let (sa, sb) = (a.partial_sums(len), b.partial_sums(len));
    let ge = sa.iter().zip(&sb).all(|(x, y)| x >= y);
    let le = sa.iter().zip(&sb).all(|(x, y)| x <= y);
    Ok(match (ge, le) {
        (true, _) => Dominance::Greater,
        (_, true) => Dominance::Less,
        _ => Dominance::Incomparable,
    })
}

/// Hook length of every cell.
pub fn hook_lengths(lambda: &Partition) -> BTreeMap<Cell, usize> {
    let conj = lambda.conjugate();
    lambda
        .cells()
        .map(|c| {
            let arm = lambda.part(c.row) - c.col;
            let leg = conj.part(c.col) - c.row;
            (c, arm + leg + 1)
        })
        .collect()
}

/// An edge-connected skew shape `outer / inner` with no 2x2 block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorderStrip {
    pub cells: Vec<Cell>,
    pub anchor: Cell,
}

impl BorderStrip {
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Checks that the cells are exactly `outer / inner`, edge-connected,
    /// 2x2-free, and that the anchor's hook in `outer` has the strip's size.
    pub fn is_valid_for(&self, outer: &Partition, inner: &Partition) -> bool {
        let skew: BTreeSet<Cell> = skew_cells(outer, inner);
        let mine: BTreeSet<Cell> = self.cells.iter().copied().collect();
        skew == mine
            && mine.len() == self.cells.len()
            && is_border_strip(&mine)
            && outer.hook_length(self.anchor) == Some(self.size())
    }
}

/// Cells of `outer` not in `inner`; empty if `inner` is not contained in `outer`.
pub fn skew_cells(outer: &Partition, inner: &Partition) -> BTreeSet<Cell> {
    if !outer.contains(inner) {
        return BTreeSet::new();
    }
    outer.cells().filter(|c| !inner.contains_cell(*c)).collect()
}

/// Nonempty, edge-connected and free of 2x2 squares.
pub fn is_border_strip(cells: &BTreeSet<Cell>) -> bool {
    let Some(&start) = cells.iter().next() else {
        return false;
    };
    let has_square = cells.iter().any(|c| {
        cells.contains(&Cell::new(c.row + 1, c.col))
            && cells.contains(&Cell::new(c.row, c.col + 1))
            && cells.contains(&Cell::new(c.row + 1, c.col + 1))
    });
    if has_square {
        return false;
    }
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(c) = stack.pop() {
        let mut nbrs = vec![Cell::new(c.row + 1, c.col), Cell::new(c.row, c.col + 1)];
        if c.row > 1 {
            nbrs.push(Cell::new(c.row - 1, c.col));
        }
        if c.col > 1 {
            nbrs.push(Cell::new(c.row, c.col - 1));
        }
        for n in nbrs {
            if cells.contains(&n) && seen.insert(n) {
                stack.push(n);
            }
        }
    }
    seen.len() == cells.len()
}

/// One way to remove a rim hook: the anchor cell whose hook is removed and the
/// partition left behind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RimHookRemoval {
    pub anchor: Cell,
    pub remainder: Partition,
}

/// Partition left after removing the rim hook attached to `anchor`: rows
/// `i..i+leg` each slide up by one, shortened by one, and the bottom row of
/// the hook is cut back to `col - 1`.
fn remove_hook_at(lambda: &Partition, anchor: Cell, leg: usize) -> Partition {
    let mut parts = lambda.0.clone();
    let top = anchor.row - 1;
    for (part, below) in parts[top..top + leg].iter_mut().zip(&lambda.0[top + 1..]) {
        *part = below - 1;
    }
    parts[top + leg] = anchor.col - 1;
    Partition::new(parts).expect("rim hook removal yields a partition")
}

/// All rim hooks of size `h`, ordered by anchor cell.
pub fn removable_rim_hooks(lambda: &Partition, h: usize) -> Vec<RimHookRemoval> {
    if h == 0 || h > lambda.size() {
        return Vec::new();
    }
    let conj = lambda.conjugate();
    lambda
        .cells()
        .filter_map(|c| {
            let arm = lambda.part(c.row) - c.col;
            let leg = conj.part(c.col) - c.row;
            (arm + leg + 1 == h).then(|| RimHookRemoval {
                anchor: c,
                remainder: remove_hook_at(lambda, c, leg),
            })
        })
        .collect()
}

/// The border strip removed from `lambda` at `anchor`.
pub fn rim_hook_at(lambda: &Partition, anchor: Cell) -> Option<BorderStrip> {
    let hook = lambda.hook_length(anchor)?;
    let conj = lambda.conjugate();
    let leg = conj.part(anchor.col) - anchor.row;
    let remainder = remove_hook_at(lambda, anchor, leg);
    let strip = BorderStrip {
        cells: skew_cells(lambda, &remainder).into_iter().collect(),
        anchor,
    };
    debug_assert_eq!(strip.size(), hook);
    Some(strip)
}

/// All partitions obtained from `mu` by adding a rim hook of size `h`, in
/// decreasing lexicographic order.
pub fn addable_rim_hooks(mu: &Partition, h: usize) -> Vec<Partition> {
    if h == 0 {
        return Vec::new();
    }
    let beta = mu.beta_set(mu.len() + h);
    let occupied: BTreeSet<usize> = beta.iter().copied().collect();
    let mut out: Vec<Partition> = beta
        .iter()
        .enumerate()
        .filter(|(_, &b)| !occupied.contains(&(b + h)))
        .map(|(i, &b)| {
            let mut moved = beta.clone();
            moved[i] = b + h;
            Partition::from_beta_set(moved)
        })
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// True iff no part value occurs `p` or more times. `p` must be prime.
pub fn is_p_regular(lambda: &Partition, p: u64) -> Result<bool> {
    crate::check_prime(p)?;
    Ok(lambda.multiplicities().values().all(|&m| (m as u64) < p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("[5,2]".parse::<Partition>().unwrap(), p(&[5, 2]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" 3, 1 ".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!(p(&[5, 2]).to_string(), "[5,2]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[2,0,1]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
    }

    #[test]
    fn trailing_zeros_dropped() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), p(&[3, 1]));
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(dominance_compare(&p(&[3, 1]), &p(&[2, 2])), Ok(Dominance::Greater));
        assert_eq!(dominance_compare(&p(&[2, 2]), &p(&[3, 1])), Ok(Dominance::Less));
        assert_eq!(dominance_compare(&p(&[2, 2]), &p(&[2, 2])), Ok(Dominance::Equal));
        assert_eq!(
            dominance_compare(&p(&[3, 1, 1]), &p(&[2, 2, 2])),
            Err(Error::SizeMismatch { left: 5, right: 6 })
        );
        assert_eq!(
            dominance_compare(&p(&[4, 1, 1]), &p(&[3, 3])),
            Ok(Dominance::Incomparable)
        );
    }

    #[test]
    fn hook_length_examples() {
        let hooks = hook_lengths(&p(&[2, 1]));
        assert_eq!(
            hooks,
            BTreeMap::from([(Cell::new(1, 1), 3), (Cell::new(1, 2), 1), (Cell::new(2, 1), 1)])
        );
        let hooks = hook_lengths(&p(&[5, 2]));
        let expected = [
            ((1, 1), 6),
            ((1, 2), 5),
            ((1, 3), 3),
            ((1, 4), 2),
            ((1, 5), 1),
            ((2, 1), 2),
            ((2, 2), 1),
        ];
        assert_eq!(
            hooks,
            expected
                .iter()
                .map(|&((r, c), h)| (Cell::new(r, c), h))
                .collect::<BTreeMap<_, _>>()
        );
        assert_eq!(hook_lengths(&p(&[1])), BTreeMap::from([(Cell::new(1, 1), 1)]));
    }

    #[test]
    fn removable_examples() {
        let l = p(&[5, 2]);
        assert_eq!(
            removable_rim_hooks(&l, 5),
            vec![RimHookRemoval { anchor: Cell::new(1, 2), remainder: p(&[1, 1]) }]
        );
        assert_eq!(
            removable_rim_hooks(&l, 6),
            vec![RimHookRemoval { anchor: Cell::new(1, 1), remainder: p(&[1]) }]
        );
        assert!(removable_rim_hooks(&l, 4).is_empty());
        assert!(removable_rim_hooks(&l, 0).is_empty());
        assert!(removable_rim_hooks(&l, 8).is_empty());
    }

    #[test]
    fn addable_examples() {
        assert_eq!(addable_rim_hooks(&Partition::empty(), 2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(addable_rim_hooks(&p(&[1]), 2), vec![p(&[3]), p(&[1, 1, 1])]);
        assert_eq!(
            addable_rim_hooks(&p(&[1, 1]), 5),
            vec![
                p(&[6, 1]),
                p(&[5, 2]),
                p(&[3, 2, 2]),
                p(&[2, 2, 2, 1]),
                p(&[1, 1, 1, 1, 1, 1, 1])
            ]
        );
        assert!(addable_rim_hooks(&p(&[1]), 0).is_empty());
    }

    #[test]
    fn p_regularity() {
        assert_eq!(is_p_regular(&p(&[2, 2, 2]), 3), Ok(false));
        assert_eq!(is_p_regular(&p(&[3, 1]), 2), Ok(true));
        assert_eq!(is_p_regular(&p(&[1, 1]), 2), Ok(false));
        assert_eq!(is_p_regular(&p(&[1, 1]), 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn rim_hook_strip_is_valid() {
        let l = p(&[4, 3, 3, 1]);
        for c in l.cells() {
            let strip = rim_hook_at(&l, c).unwrap();
            let h = strip.size();
            let rem = removable_rim_hooks(&l, h)
                .into_iter()
                .find(|r| r.anchor == c)
                .unwrap()
                .remainder;
            assert!(strip.is_valid_for(&l, &rem), "{l} at {c}");
        }
    }

    #[test]
    fn conjugate_involution() {
        for n in 0..=8 {
            for l in partitions_of(n) {
                assert_eq!(l.conjugate().conjugate(), l);
            }
        }
        assert_eq!(p(&[5, 2]).conjugate(), p(&[2, 2, 1, 1, 1]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn serde_rejects_unsorted() {
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert_eq!(serde_json::from_str::<Partition>("[2,1]").unwrap(), p(&[2, 1]));
    }
}
