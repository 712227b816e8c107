//! Littlewood–Richardson coefficients, Pieri rules and skewing operators.
//!
//! Both the product `s_λ s_μ` and the skew expansion `s_{λ/μ}` are computed
//! by enumerating Littlewood–Richardson tableaux: semistandard fillings whose
//! reverse row reading word (rows top to bottom, each row right to left) is a
//! lattice word.

use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::partition::Partition;
use crate::symfunc::{Basis, Rational, SymFunc};
use crate::Context;

pub type Expansion = Arc<[(Partition, u64)]>;

/// Memoized Littlewood–Richardson computations. All caches are internally
/// synchronized; the context can be shared between threads.
#[derive(Default)]
pub struct LrContext {
    products: RwLock<FxHashMap<(Partition, Partition), Expansion>>,
    skews: RwLock<FxHashMap<(Partition, Partition), Expansion>>,
    coefficients: RwLock<FxHashMap<(Partition, Partition, Partition), u64>>,
}

impl LrContext {
    pub fn new() -> Self {
        Self::default()
    }

    /// `c^λ_{μν} = <s_λ, s_μ s_ν>`.
    pub fn coefficient(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
            return 0;
        }
        // c^λ_{μν} = c^λ_{νμ}: enumerate the skew shape with the larger inner part.
        let (inner, content) = if mu.size() >= nu.size() { (mu, nu) } else { (nu, mu) };
        let key = (lambda.clone(), inner.clone(), content.clone());
        if let Some(&c) = self.coefficients.read().unwrap().get(&key) {
            return c;
        }
        let c = self
            .skew(lambda, inner)
            .iter()
            .find(|(p, _)| p == content)
            .map_or(0, |(_, c)| *c);
        self.coefficients.write().unwrap().insert(key, c);
        c
    }

    /// Schur expansion of `s_{outer/inner}`: `Σ_ν c^{outer}_{inner,ν} s_ν`.
    pub fn skew(&self, outer: &Partition, inner: &Partition) -> Expansion {
        if !outer.contains(inner) {
            return Arc::from(Vec::new());
        }
        let key = (outer.clone(), inner.clone());
        if let Some(e) = self.skews.read().unwrap().get(&key) {
            return e.clone();
        }
        // Fewer rows means fewer letters to place.
        let transpose = outer.first_part() as usize + 1 < outer.len();
        let raw = if transpose {
            conjugate_all(skew_raw(&outer.conjugate(), &inner.conjugate()))
        } else {
            skew_raw(outer, inner)
        };
        let e: Expansion = sorted(raw).into();
        self.skews.write().unwrap().insert(key, e.clone());
        e
    }

    /// Schur expansion of `s_λ s_μ`.
    pub fn product(&self, lambda: &Partition, mu: &Partition) -> Expansion {
        let (a, b) = if lambda <= mu { (lambda, mu) } else { (mu, lambda) };
        let key = (a.clone(), b.clone());
        if let Some(e) = self.products.read().unwrap().get(&key) {
            return e.clone();
        }
        let rows = a.len() + b.len();
        let cols = (a.first_part() + b.first_part()) as usize;
        let raw = if cols < rows {
            conjugate_all(product_raw(&a.conjugate(), &b.conjugate()))
        } else {
            product_raw(a, b)
        };
        let e: Expansion = sorted(raw).into();
        self.products.write().unwrap().insert(key, e.clone());
        e
    }

    pub fn cache_sizes(&self) -> (usize, usize, usize) {
        (
            self.products.read().unwrap().len(),
            self.skews.read().unwrap().len(),
            self.coefficients.read().unwrap().len(),
        )
    }
}

fn sorted(map: FxHashMap<Vec<u32>, u64>) -> Vec<(Partition, u64)> {
    let mut v: Vec<_> = map
        .into_iter()
        .map(|(p, c)| (Partition::from_parts_unchecked(p), c))
        .collect();
    v.sort();
    v
}

fn conjugate_all(map: FxHashMap<Vec<u32>, u64>) -> FxHashMap<Vec<u32>, u64> {
    map.into_iter()
        .map(|(p, c)| (Partition::from_parts_unchecked(p).conjugate().into_parts(), c))
        .collect()
}

fn trimmed(shape: &[u32]) -> Vec<u32> {
    let end = shape.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
    shape[..end].to_vec()
}

/// Enumerates LR tableaux of shape `ν/base` with content `content`, one
/// letter at a time. Letter `j` occupies a horizontal strip, and the lattice
/// condition reads: for every row `r`, the number of `j`s in rows `..=r` is at
/// most the number of `j-1`s in rows `..r`.
fn product_raw(base: &Partition, content: &Partition) -> FxHashMap<Vec<u32>, u64> {
    let rows = base.len() + content.len();
    let mut shape: Vec<u32> = (0..rows).map(|i| base.part(i)).collect();
    let mut out = FxHashMap::default();
    let prev = vec![0u32; rows];
    place_letter(0, content.parts(), &mut shape, &prev, &mut out);
    out
}

fn place_letter(
    j: usize,
    content: &[u32],
    shape: &mut Vec<u32>,
    prev: &[u32],
    out: &mut FxHashMap<Vec<u32>, u64>,
) {
    if j == content.len() {
        *out.entry(trimmed(shape)).or_insert(0) += 1;
        return;
    }
    let old = shape.clone();
    let mut counts = vec![0u32; shape.len()];
    place_rows(j, content, 0, content[j], 0, 0, &old, shape, &mut counts, prev, out);
}

#[allow(clippy::too_many_arguments)]
fn place_rows(
    j: usize,
    content: &[u32],
    r: usize,
    remaining: u32,
    placed: u32,
    prev_above: u32,
    old: &[u32],
    shape: &mut Vec<u32>,
    counts: &mut Vec<u32>,
    prev: &[u32],
    out: &mut FxHashMap<Vec<u32>, u64>,
) {
    if remaining == 0 {
        let next_prev = counts.clone();
        place_letter(j + 1, content, shape, &next_prev, out);
        return;
    }
    if r == old.len() {
        return;
    }
    let strip_cap = if r == 0 { remaining } else { old[r - 1] - old[r] };
    let lattice_cap = if j == 0 { remaining } else { prev_above - placed };
    let max = remaining.min(strip_cap).min(lattice_cap);
    for a in (0..=max).rev() {
        shape[r] = old[r] + a;
        counts[r] = a;
        place_rows(
            j,
            content,
            r + 1,
            remaining - a,
            placed + a,
            prev_above + prev[r],
            old,
            shape,
            counts,
            prev,
            out,
        );
    }
    shape[r] = old[r];
    counts[r] = 0;
}

/// Enumerates LR fillings of `outer/inner`, cell by cell in reverse row
/// reading order, and tallies their contents.
fn skew_raw(outer: &Partition, inner: &Partition) -> FxHashMap<Vec<u32>, u64> {
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|r| {
            (inner.part(r) as usize..outer.part(r) as usize)
                .rev()
                .map(move |c| (r, c))
        })
        .collect();
    let mut grid: Vec<Vec<u32>> = (0..outer.len())
        .map(|r| vec![0; outer.part(r) as usize])
        .collect();
    let mut content = vec![0u32; outer.len() + 1];
    let mut out = FxHashMap::default();
    fill_skew(0, &cells, inner, &mut grid, &mut content, &mut out);
    out
}

fn fill_skew(
    idx: usize,
    cells: &[(usize, usize)],
    inner: &Partition,
    grid: &mut [Vec<u32>],
    content: &mut [u32],
    out: &mut FxHashMap<Vec<u32>, u64>,
) {
    if idx == cells.len() {
        *out.entry(trimmed(&content[1..])).or_insert(0) += 1;
        return;
    }
    let (r, c) = cells[idx];
    // Row weakly increases: bounded above by the right neighbour.
    let upper = grid[r].get(c + 1).copied().filter(|&x| x > 0);
    // Column strictly increases: bounded below by the cell above.
    let lower = if r > 0 && c >= inner.part(r - 1) as usize {
        grid[r - 1][c] + 1
    } else {
        1
    };
    let distinct = content[1..].iter().take_while(|&&n| n > 0).count() as u32;
    let hi = upper.unwrap_or(u32::MAX).min(distinct + 1).min(r as u32 + 1);
    for x in lower..=hi {
        let xi = x as usize;
        if xi > 1 && content[xi] + 1 > content[xi - 1] {
            continue;
        }
        grid[r][c] = x;
        content[xi] += 1;
        fill_skew(idx + 1, cells, inner, grid, content, out);
        content[xi] -= 1;
    }
    grid[r][c] = 0;
}

/// Partitions `ν ⊇ λ` with `ν/λ` a horizontal strip of size `r`.
pub fn pieri_row(lambda: &Partition, r: u32) -> Vec<Partition> {
    let rows = lambda.len() + 1;
    let mut out = Vec::new();
    let mut shape: Vec<u32> = (0..rows).map(|i| lambda.part(i)).collect();
    fn go(i: usize, rest: u32, lambda: &Partition, shape: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_parts_unchecked(shape.clone()));
            return;
        }
        if i == shape.len() {
            return;
        }
        let base = lambda.part(i);
        let cap = if i == 0 { rest } else { lambda.part(i - 1) - base };
        for a in (0..=cap.min(rest)).rev() {
            shape[i] = base + a;
            go(i + 1, rest - a, lambda, shape, out);
        }
        shape[i] = base;
    }
    go(0, r, lambda, &mut shape, &mut out);
    out
}

/// Partitions `ν ⊇ λ` with `ν/λ` a vertical strip of size `r`.
pub fn pieri_col(lambda: &Partition, r: u32) -> Vec<Partition> {
    pieri_row(&lambda.conjugate(), r)
        .into_iter()
        .map(|p| p.conjugate())
        .collect()
}

/// Partitions `κ ⊆ ν` with `ν/κ` a horizontal strip of size `r`.
pub fn remove_horizontal_strip(nu: &Partition, r: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut shape = nu.parts().to_vec();
    fn go(i: usize, rest: u32, nu: &Partition, shape: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_parts_unchecked(shape.clone()));
            return;
        }
        if i == shape.len() {
            return;
        }
        let top = nu.part(i);
        let cap = top - nu.part(i + 1);
        for a in 0..=cap.min(rest) {
            shape[i] = top - a;
            go(i + 1, rest - a, nu, shape, out);
        }
        shape[i] = top;
    }
    go(0, r, nu, &mut shape, &mut out);
    out
}

/// Partitions `κ ⊆ ν` with `ν/κ` a vertical strip of size `r`.
pub fn remove_vertical_strip(nu: &Partition, r: u32) -> Vec<Partition> {
    remove_horizontal_strip(&nu.conjugate(), r)
        .into_iter()
        .map(|p| p.conjugate())
        .collect()
}

/// Converts a rational coefficient to `i128` when it is a small integer.
fn small_integer(c: &Rational) -> Option<i128> {
    if c.is_integer() {
        c.numer().to_i128().filter(|v| v.unsigned_abs() < (1u128 << 60))
    } else {
        None
    }
}

impl Context {
    pub fn lr_coefficient(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        self.lr.coefficient(lambda, mu, nu)
    }

    /// `s_λ · s_r` as a Schur expansion.
    pub fn pieri_row(&self, lambda: &Partition, r: u32) -> SymFunc {
        SymFunc::from_counts(Basis::Schur, pieri_row(lambda, r).into_iter().map(|p| (p, 1u32)))
    }

    /// `s_λ · s_{1^r}` as a Schur expansion.
    pub fn pieri_col(&self, lambda: &Partition, r: u32) -> SymFunc {
        SymFunc::from_counts(Basis::Schur, pieri_col(lambda, r).into_iter().map(|p| (p, 1u32)))
    }

    /// Product of two Schur expansions via cached LR products.
    pub(crate) fn multiply_schur(&self, f: &SymFunc, g: &SymFunc) -> SymFunc {
        debug_assert!(f.basis() == Basis::Schur && g.basis() == Basis::Schur);
        let small_f: Option<Vec<_>> = f.iter().map(|(p, c)| small_integer(c).map(|c| (p, c))).collect();
        let small_g: Option<Vec<_>> = g.iter().map(|(p, c)| small_integer(c).map(|c| (p, c))).collect();
        if let (Some(sf), Some(sg)) = (small_f, small_g) {
            let mut acc: FxHashMap<Partition, i128> = FxHashMap::default();
            let mut overflow = false;
            'outer: for (p, a) in &sf {
                for (q, b) in &sg {
                    let ab = a * b;
                    for (nu, c) in self.lr.product(p, q).iter() {
                        let Some(term) = ab.checked_mul(*c as i128) else {
                            overflow = true;
                            break 'outer;
                        };
                        let slot = acc.entry(nu.clone()).or_insert(0);
                        match slot.checked_add(term) {
                            Some(v) => *slot = v,
                            None => {
                                overflow = true;
                                break 'outer;
                            }
                        }
                    }
                }
            }
            if !overflow {
                return SymFunc::from_counts(Basis::Schur, acc);
            }
        }
        let mut acc: FxHashMap<Partition, Rational> = FxHashMap::default();
        for (p, a) in f.iter() {
            for (q, b) in g.iter() {
                let ab = a * b;
                for (nu, c) in self.lr.product(p, q).iter() {
                    let term = &ab * Rational::from_integer(BigInt::from(*c));
                    let slot = acc.entry(nu.clone()).or_insert_with(Rational::zero);
                    *slot += term;
                }
            }
        }
        SymFunc::from_terms(Basis::Schur, acc)
    }

    /// `s_λ^⊥ f`, applied termwise to a Schur expansion.
    pub fn schur_perp(&self, lambda: &Partition, f: &SymFunc) -> Result<SymFunc> {
        f.require_basis(Basis::Schur)?;
        let r = lambda.size() as u32;
        let mut acc: FxHashMap<Partition, Rational> = FxHashMap::default();
        let mut push = |p: Partition, c: Rational| {
            *acc.entry(p).or_insert_with(Rational::zero) += c;
        };
        for (mu, c) in f.iter() {
            if lambda.is_row() {
                for k in remove_horizontal_strip(mu, r) {
                    push(k, c.clone());
                }
            } else if lambda.is_column() {
                for k in remove_vertical_strip(mu, r) {
                    push(k, c.clone());
                }
            } else if lambda.is_empty() {
                push(mu.clone(), c.clone());
            } else {
                for (nu, n) in self.lr.skew(mu, lambda).iter() {
                    push(nu.clone(), c * Rational::from_integer(BigInt::from(*n)));
                }
            }
        }
        Ok(SymFunc::from_terms(Basis::Schur, acc))
    }

    /// `f^⊥ g = Σ_μ <g, f s_μ> s_μ`, returned in the basis of `g`.
    pub fn f_perp(&self, f: &SymFunc, g: &SymFunc) -> SymFunc {
        let fs = self.to_basis(f, Basis::Schur);
        let gs = self.to_basis(g, Basis::Schur);
        let mut out = SymFunc::zero(Basis::Schur);
        for (lambda, a) in fs.iter() {
            let term = self
                .schur_perp(lambda, &gs)
                .expect("converted to the Schur basis");
            out += &term.scale(a);
        }
        self.to_basis(&out, g.basis())
    }
}
