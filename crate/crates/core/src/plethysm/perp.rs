//! Skewing sequences `A[r] = s_r^⊥ f` (or `s_{1^r}^⊥ f`) and the inverse
//! map that rebuilds the Schur expansion of `f` from them.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::{Basis, SymFunc};
use crate::Context;

/// Which family of skewing operators a sequence records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `s_r^⊥`, inverted by adding rows.
    Row,
    /// `s_{1^r}^⊥`, inverted by adding columns.
    Column,
}

impl Mode {
    /// The partition `(r)` or `(1^r)`.
    pub fn operator(self, r: usize) -> Partition {
        match self {
            Mode::Row => Partition::row(r as u32),
            Mode::Column => Partition::column(r as u32),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Row => "row",
            Mode::Column => "column",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "row" => Ok(Mode::Row),
            "column" | "col" => Ok(Mode::Column),
            _ => Err(Error::Unknown {
                what: "mode",
                name: s.to_string(),
            }),
        }
    }
}

/// `entries[r - 1]` holds `s_r^⊥ f` (row mode) or `s_{1^r}^⊥ f` (column
/// mode) for `r = 1..=degree(f)`. The last entry is a multiple of `s_[]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PerpSequence {
    pub mode: Mode,
    pub entries: Vec<SymFunc>,
}

impl PerpSequence {
    pub fn new(mode: Mode, entries: Vec<SymFunc>) -> Self {
        PerpSequence { mode, entries }
    }

    /// Degree of the function the sequence describes.
    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    /// `A[r]`, 1-based.
    pub fn get(&self, r: usize) -> &SymFunc {
        &self.entries[r - 1]
    }
}

impl Context {
    pub fn perp_sequence(&self, f: &SymFunc, mode: Mode) -> Result<PerpSequence> {
        let f = self.to_basis(f, Basis::Schur);
        let d = f.require_degree()?;
        let entries = (1..=d)
            .map(|r| self.schur_perp(&mode.operator(r), &f))
            .collect::<Result<Vec<_>>>()?;
        Ok(PerpSequence::new(mode, entries))
    }

    /// Rebuilds `f` from its skewing sequence.
    ///
    /// For `r` from the degree down to 1 the loop adds
    /// `addrow(A[r] - s_r^⊥(out), r)`; at step `r`, `out` already holds every
    /// term of `f` whose first part exceeds `r`, so the difference is exactly
    /// `s_r^⊥` of the terms with first part `r`. Column mode swaps rows for
    /// columns. A difference that has the wrong degree or a term too wide for
    /// the row being added means the sequence did not come from any `f`.
    pub fn expand_schur(&self, seq: &PerpSequence) -> Result<SymFunc> {
        self.expand_schur_checked(seq, false)
    }

    /// As [`Context::expand_schur`], additionally rejecting any negative
    /// coefficient in the differences. Use when `f` is known to be
    /// Schur-positive, as plethysms of Schur functions are.
    pub fn expand_schur_nonnegative(&self, seq: &PerpSequence) -> Result<SymFunc> {
        self.expand_schur_checked(seq, true)
    }

    fn expand_schur_checked(&self, seq: &PerpSequence, nonnegative: bool) -> Result<SymFunc> {
        let d = seq.degree();
        let mut out = SymFunc::zero(Basis::Schur);
        for r in (1..=d).rev() {
            let entry = self.to_basis(seq.get(r), Basis::Schur);
            let op = seq.mode.operator(r);
            let diff = &entry - &self.schur_perp(&op, &out)?;
            let inconsistent = |reason: String| Error::InconsistentPerpSequence { r, reason };
            for (p, c) in diff.iter() {
                if p.size() != d - r {
                    return Err(inconsistent(format!("term {p} should have size {}", d - r)));
                }
                if nonnegative && c.is_negative() {
                    return Err(inconsistent(format!("negative coefficient {c} at {p}")));
                }
            }
            let added = match seq.mode {
                Mode::Row => add_row(&diff, r as u32),
                Mode::Column => add_column(&diff, r as u32),
            };
            match added {
                Some(a) => out += &a,
                None => {
                    return Err(inconsistent(format!(
                        "a term does not fit under a {} of length {r}",
                        seq.mode
                    )))
                }
            }
        }
        Ok(out)
    }
}

/// Appends a row of length `r` to every index, or `None` if some index has
/// first part larger than `r`.
pub(crate) fn add_row(f: &SymFunc, r: u32) -> Option<SymFunc> {
    let mut out = SymFunc::zero(Basis::Schur);
    for (p, c) in f.iter() {
        out.add_term(p.add_row(r)?, c.clone());
    }
    Some(out)
}

/// Adds a column of length `r` to every index, or `None` if some index is
/// longer than `r`.
pub(crate) fn add_column(f: &SymFunc, r: u32) -> Option<SymFunc> {
    let mut out = SymFunc::zero(Basis::Schur);
    for (p, c) in f.iter() {
        out.add_term(p.add_column(r)?, c.clone());
    }
    Some(out)
}
