//! Integer partitions and the partition-level predicates used by the
//! plethysm closed forms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A weakly decreasing sequence of positive integers.
///
/// Stored without trailing zeros, so two equal partitions always have equal
/// representations and can be used directly as map keys.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

/// A cell `(row, column)` of a Young diagram, both 1-based.
pub type Cell = (usize, usize);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// The caller guarantees `parts` is weakly decreasing; zeros are trimmed.
    pub(crate) fn from_parts_unchecked(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single row `(n)`; empty when `n == 0`.
    pub fn row(n: u32) -> Self {
        Self::from_parts_unchecked(vec![n])
    }

    /// The single column `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// The hook `(a, 1^b)`; requires `a >= 1`.
    pub fn hook(arm: u32, leg: u32) -> Self {
        assert!(arm >= 1, "hook needs a first part");
        let mut parts = vec![arm];
        parts.extend(std::iter::repeat_n(1, leg as usize));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `parts[i]` with zero padding (0-based).
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first_part(&self) -> u32 {
        self.part(0)
    }

    pub fn is_row(&self) -> bool {
        self.0.len() == 1
    }

    pub fn is_column(&self) -> bool {
        !self.0.is_empty() && self.0[0] == 1
    }

    pub fn is_hook(&self) -> bool {
        !self.0.is_empty() && self.0[1..].iter().all(|&p| p == 1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_part() as usize;
        let mut conj = vec![0u32; width];
        for &p in &self.0 {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(conj)
    }

    /// Whether the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, (r, c): Cell) -> bool {
        r >= 1 && c >= 1 && self.part(r - 1) as usize >= c
    }

    /// Largest `i` with `(i, i)` a cell.
    pub fn durfee(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count()
    }

    /// All columns have even length.
    pub fn is_even(&self) -> bool {
        self.conjugate().0.iter().all(|c| c % 2 == 0)
    }

    /// `λ'_i = λ_i + 1` for every `i` up to the Durfee size.
    pub fn is_threshold(&self) -> bool {
        let conj = self.conjugate();
        (0..self.durfee()).all(|i| conj.part(i) == self.part(i) + 1)
    }

    /// Corners in increasing row order.
    pub fn corners(&self) -> Vec<Cell> {
        (0..self.len())
            .filter(|&i| self.part(i + 1) < self.part(i))
            .map(|i| (i + 1, self.part(i) as usize))
            .collect()
    }

    /// Number of corners, which is also the number of distinct part values.
    pub fn corner_count(&self) -> usize {
        (0..self.len()).filter(|&i| self.part(i + 1) < self.part(i)).count()
    }

    /// Columns all even except exactly two, of distinct odd lengths.
    pub fn in_p2h(&self) -> Result<bool, Error> {
        self.require_even_size()?;
        let conj = self.conjugate();
        let odd: Vec<u32> = conj.0.iter().copied().filter(|c| c % 2 == 1).collect();
        Ok(odd.len() == 2 && odd[0] != odd[1])
    }

    /// Membership in the exceptional set of the `(2,1^{h-2})` hook formula.
    ///
    /// Every diagonal index `i <= d(λ)` must satisfy `λ'_i = λ_i + 1` except
    /// either two indices of the first kind (`λ'_i = λ_i + 2` with the bottom
    /// cell of column `i` a corner, or `λ'_i = λ_i`), or exactly one index with
    /// `λ'_i = λ_i + 3`.
    pub fn in_t2h(&self) -> Result<bool, Error> {
        self.require_even_size()?;
        let conj = self.conjugate();
        let mut first_kind = 0;
        let mut second_kind = 0;
        for i in 0..self.durfee() {
            let (row, col) = (self.part(i), conj.part(i));
            if col == row + 1 {
                continue;
            }
            let bottom_is_corner = conj.part(i + 1) < col;
            if (col == row + 2 && bottom_is_corner) || col == row {
                first_kind += 1;
            } else if col == row + 3 {
                second_kind += 1;
            } else {
                return Ok(false);
            }
        }
        Ok((first_kind == 2 && second_kind == 0) || (first_kind == 0 && second_kind == 1))
    }

    /// `ν ↦ (ν_1+ν_2, ν_3+ν_4, ...)'`, padding with one zero when the length
    /// is odd.
    pub fn w_involution(&self) -> Partition {
        let sums: Vec<u32> = self.0.chunks(2).map(|c| c.iter().sum()).collect();
        Partition::from_parts_unchecked(sums).conjugate()
    }

    /// Componentwise sum, padding the shorter partition with zeros.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition((0..n).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Prepends a row of length `r`; `None` if `r` is shorter than the first part.
    pub fn add_row(&self, r: u32) -> Option<Partition> {
        if r < self.first_part() {
            return None;
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(r);
        parts.extend_from_slice(&self.0);
        Some(Partition::from_parts_unchecked(parts))
    }

    /// Prepends a column of length `r`; `None` if `r` is shorter than the length.
    pub fn add_column(&self, r: u32) -> Option<Partition> {
        if (r as usize) < self.len() {
            return None;
        }
        Some(Partition((0..r as usize).map(|i| self.part(i) + 1).collect()))
    }

    /// Removes the first column.
    pub fn remove_first_column(&self) -> Partition {
        Partition::from_parts_unchecked(self.0.iter().map(|p| p - 1).collect())
    }

    /// `z_λ = Π_i i^{m_i} m_i!`.
    pub fn z(&self) -> num_bigint::BigInt {
        let mut z = num_bigint::BigInt::from(1u32);
        let mut i = 0;
        while i < self.0.len() {
            let v = self.0[i];
            let mut m = 0u32;
            while i < self.0.len() && self.0[i] == v {
                m += 1;
                i += 1;
                z *= v;
                z *= m;
            }
        }
        z
    }

    /// Multiplies every part by `k`.
    pub fn scale(&self, k: u32) -> Partition {
        Partition::from_parts_unchecked(self.0.iter().map(|p| p * k).collect())
    }

    /// Union of parts (multiset), re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    fn require_even_size(&self) -> Result<(), Error> {
        if self.size() % 2 == 1 {
            Err(Error::OddSize(self.clone()))
        } else {
            Ok(())
        }
    }

    /// Order used for printing: larger size first, then descending
    /// lexicographic on the parts.
    pub fn display_cmp(&self, other: &Partition) -> std::cmp::Ordering {
        other.size().cmp(&self.size()).then_with(|| other.0.cmp(&self.0))
    }
}

/// The opposite cell: `(t+1, s)` if `s <= t`, else `(t, s-1)`.
pub fn opposite_cell((s, t): Cell) -> Cell {
    if s <= t {
        (t + 1, s)
    } else {
        (t, s - 1)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self, Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::parse(0, "expected `[parts]`"))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Error::parse(0, e.to_string()))?;
        Partition::new(parts)
    }
}

#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("literal is not a partition")
    };
}

/// Partitions of `n` in descending lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, n)
}

/// Partitions of `n` with every part at most `max_part` and at most
/// `max_len` parts, in descending lexicographic order.
pub fn partitions_bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 || (cap as usize) * slots < rest as usize {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, max_part.min(n) as u32, max_len, &mut Vec::new(), &mut out);
    out
}
