//! Semistandard tableaux and the type classification of tableaux of weight
//! `(k, k, k)`, whose classes sum to `s_λ[s_k]` for `|λ| = 3`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{partitions_bounded, Partition};
use crate::symfunc::{rational, Basis, SymFunc};

/// A semistandard Young tableau in English notation, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ssyt {
    rows: Vec<Vec<u32>>,
}

impl Ssyt {
    /// Checks that rows weakly increase, columns strictly increase and the
    /// row lengths form a partition.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Ssyt> {
        let invalid = |msg: &str| Err(Error::OutOfRange(format!("not a semistandard tableau: {msg}")));
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        for (i, row) in rows.iter().enumerate() {
            if row.contains(&0) {
                return invalid("letters start at 1");
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return invalid("row decreases");
            }
            if i > 0 {
                let above = &rows[i - 1];
                if row.len() > above.len() {
                    return invalid("row lengths increase");
                }
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    return invalid("column does not strictly increase");
                }
            }
        }
        Ok(Ssyt { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_parts_unchecked(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    /// `weight[i]` counts the letter `i + 1`.
    pub fn weight(&self) -> Vec<u32> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut w = vec![0; max as usize];
        for &x in self.rows.iter().flatten() {
            w[x as usize - 1] += 1;
        }
        w
    }

    /// Number of cells labelled `letter` in row `row` (1-based).
    pub fn count_in_row(&self, row: usize, letter: u32) -> usize {
        self.rows
            .get(row - 1)
            .map_or(0, |r| r.iter().filter(|&&x| x == letter).count())
    }

    pub fn remove_first_column(&self) -> Ssyt {
        Ssyt {
            rows: self
                .rows
                .iter()
                .map(|r| r[1..].to_vec())
                .filter(|r| !r.is_empty())
                .collect(),
        }
    }
}

impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for x in row {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// The standard tableaux of size 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLabel {
    /// `[123]`
    Row,
    /// `[12/3]`
    Hook12,
    /// `[13/2]`
    Hook13,
    /// `[1/2/3]`
    Column,
}

impl TypeLabel {
    pub const ALL: [TypeLabel; 4] = [TypeLabel::Row, TypeLabel::Hook12, TypeLabel::Hook13, TypeLabel::Column];

    /// The conjugate standard tableau.
    pub fn transpose(self) -> TypeLabel {
        match self {
            TypeLabel::Row => TypeLabel::Column,
            TypeLabel::Column => TypeLabel::Row,
            TypeLabel::Hook12 => TypeLabel::Hook13,
            TypeLabel::Hook13 => TypeLabel::Hook12,
        }
    }

    pub fn shape(self) -> Partition {
        match self {
            TypeLabel::Row => Partition::row(3),
            TypeLabel::Hook12 | TypeLabel::Hook13 => Partition::hook(2, 1),
            TypeLabel::Column => Partition::column(3),
        }
    }

    pub fn tableau(self) -> Ssyt {
        let rows = match self {
            TypeLabel::Row => vec![vec![1, 2, 3]],
            TypeLabel::Hook12 => vec![vec![1, 2], vec![3]],
            TypeLabel::Hook13 => vec![vec![1, 3], vec![2]],
            TypeLabel::Column => vec![vec![1], vec![2], vec![3]],
        };
        Ssyt { rows }
    }

    fn of_standard(s: &Ssyt) -> Option<TypeLabel> {
        TypeLabel::ALL.into_iter().find(|t| &t.tableau() == s)
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.tableau())
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<TypeLabel> {
        let key = s.trim().trim_start_matches('[').trim_end_matches(']');
        TypeLabel::ALL
            .into_iter()
            .find(|t| t.tableau().to_string() == key)
            .ok_or_else(|| Error::Unknown {
                what: "tableau type",
                name: s.to_string(),
            })
    }
}

/// Partitions `ν ⊇ μ` inside `bound` with `ν/μ` a horizontal strip of size
/// `size`.
fn horizontal_strips(mu: &Partition, bound: &Partition, size: usize) -> Vec<Partition> {
    fn go(i: usize, left: usize, mu: &Partition, bound: &Partition, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == bound.len() {
            if left == 0 {
                out.push(Partition::from_parts_unchecked(cur.clone()));
            }
            return;
        }
        let lo = mu.part(i);
        let hi = if i == 0 { bound.part(0) } else { bound.part(i).min(mu.part(i - 1)) };
        for v in lo..=hi {
            let added = (v - lo) as usize;
            if added > left {
                break;
            }
            cur.push(v);
            go(i + 1, left - added, mu, bound, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, size, mu, bound, &mut Vec::with_capacity(bound.len()), &mut out);
    out
}

/// Builds tableaux as chains of horizontal strips, one per letter.
fn fill(shape: &Partition, sizes: &[Option<usize>]) -> Vec<Ssyt> {
    fn go(
        letter: usize,
        cur: &Partition,
        rows: &mut Vec<Vec<u32>>,
        shape: &Partition,
        sizes: &[Option<usize>],
        out: &mut Vec<Ssyt>,
    ) {
        if letter == sizes.len() {
            if cur == shape {
                out.push(Ssyt { rows: rows.clone() });
            }
            return;
        }
        let remaining = shape.size() - cur.size();
        let choices: Vec<usize> = match sizes[letter] {
            Some(n) => vec![n],
            None => (0..=remaining).collect(),
        };
        for n in choices {
            for next in horizontal_strips(cur, shape, n) {
                let saved = rows.clone();
                for (i, &v) in next.parts().iter().enumerate() {
                    if i == rows.len() {
                        rows.push(Vec::new());
                    }
                    for _ in cur.part(i)..v {
                        rows[i].push(letter as u32 + 1);
                    }
                }
                go(letter + 1, &next, rows, shape, sizes, out);
                *rows = saved;
            }
        }
    }
    let mut out = Vec::new();
    go(0, &Partition::empty(), &mut Vec::new(), shape, sizes, &mut out);
    out
}

/// All semistandard tableaux of `shape` with letters in `1..=max_letter`.
pub fn enumerate_ssyt(shape: &Partition, max_letter: u32) -> Vec<Ssyt> {
    fill(shape, &vec![None; max_letter as usize])
}

/// All semistandard tableaux of `shape` and the given weight.
pub fn enumerate_ssyt_with_weight(shape: &Partition, weight: &[u32]) -> Vec<Ssyt> {
    if shape.size() != weight.iter().sum::<u32>() as usize {
        return Vec::new();
    }
    let sizes: Vec<Option<usize>> = weight.iter().map(|&w| Some(w as usize)).collect();
    fill(shape, &sizes)
}

/// All semistandard tableaux with `k` ones, `k` twos and `k` threes.
pub fn enumerate_weight_kkk(k: u32) -> Vec<Ssyt> {
    let n = 3 * k as usize;
    partitions_bounded(n, n, 3)
        .iter()
        .flat_map(|shape| enumerate_ssyt_with_weight(shape, &[k, k, k]))
        .collect()
}

/// The type of a tableau of weight `(k, k, k)`.
///
/// A standard tableau (`k = 1`) is its own type. With one or two rows the
/// type is read off the parity of `N_2` and the comparison of `N_3` with
/// `2 N_2`, where `N_r` counts the letters `r` in the second row. A tableau
/// with three rows has the transposed type of the tableau left after
/// removing its first column.
pub fn type_of(s: &Ssyt) -> Result<TypeLabel> {
    let w = s.weight();
    if w.len() != 3 || w[0] != w[1] || w[1] != w[2] {
        return Err(Error::WrongWeight);
    }
    if w[0] == 1 {
        return Ok(TypeLabel::of_standard(s).expect("weight (1,1,1) tableaux are standard"));
    }
    if s.rows.len() == 3 {
        return type_of(&s.remove_first_column()).map(TypeLabel::transpose);
    }
    let n2 = s.count_in_row(2, 2);
    let n3 = s.count_in_row(2, 3);
    let long = n3 >= 2 * n2 && n3 != 2 * n2 + 1;
    Ok(match (n2 % 2 == 0, long) {
        (true, true) => TypeLabel::Row,
        (false, true) => TypeLabel::Column,
        (true, false) => TypeLabel::Hook12,
        (false, false) => TypeLabel::Hook13,
    })
}

/// `Σ s_{shape(S)}` over tableaux `S` of weight `(k, k, k)` and type `t`.
pub fn tab_sum(t: TypeLabel, k: u32) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    for s in enumerate_weight_kkk(k) {
        if type_of(&s).expect("weight is (k,k,k)") == t {
            out.add_term(s.shape(), rational(1));
        }
    }
    out
}

/// For every shape, the number of tableaux of weight `(k, k, k)` of each
/// type, in the order of [`TypeLabel::ALL`].
pub fn type_counts(k: u32) -> BTreeMap<Partition, [usize; 4]> {
    let mut out: BTreeMap<Partition, [usize; 4]> = BTreeMap::new();
    for s in enumerate_weight_kkk(k) {
        let t = type_of(&s).expect("weight is (k,k,k)");
        let slot = TypeLabel::ALL.iter().position(|&x| x == t).unwrap();
        out.entry(s.shape()).or_default()[slot] += 1;
    }
    out
}
