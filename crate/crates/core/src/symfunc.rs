//! Transition-matrix combinatorics: Kostka numbers, inverse Kostka matrices,
//! counts of 0-1 and nonnegative-integer matrices with prescribed margins,
//! typed fill counts, and the plethysm coefficients the trace bounds need.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::OnceLock;

use dashmap::DashMap;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Int;
use crate::partition::{lex_cmp_raw, partitions_in_rectangle, Partition};

// ---------------------------------------------------------------------------
// Kostka numbers
// ---------------------------------------------------------------------------

type KostkaKey = (Vec<u32>, Vec<u32>);

fn kostka_cache() -> &'static DashMap<KostkaKey, Int> {
    static CACHE: OnceLock<DashMap<KostkaKey, Int>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

/// Kostka number `K_{λμ}`: semistandard tableaux of shape `λ` and content `μ`.
///
/// Errors when `|λ| ≠ |μ|`. Zero whenever `λ` is lexicographically smaller
/// than `μ` (triangularity).
pub fn kostka(shape: &Partition, content: &Partition) -> Result<Int> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch {
            left: shape.to_string(),
            left_size: shape.size(),
            right: content.to_string(),
            right_size: content.size(),
        });
    }
    Ok(kostka_counts(shape.parts(), content.parts()))
}

/// Strip-by-content recursion: peel the boxes holding the last content symbol
/// as a horizontal strip and recurse. Memoized globally.
fn kostka_counts(shape: &[u32], content: &[u32]) -> Int {
    if content.is_empty() {
        return if shape.is_empty() { Int::one() } else { Int::zero() };
    }
    if shape.len() > content.len() {
        // Columns are strict: at most one box of each symbol per column.
        return Int::zero();
    }
    let key = (shape.to_vec(), content.to_vec());
    if let Some(v) = kostka_cache().get(&key) {
        return v.clone();
    }
    let last = *content.last().unwrap() as u64;
    let rest = &content[..content.len() - 1];
    let mut total = Int::zero();
    let mut inner = Vec::with_capacity(shape.len());
    strip_removals(shape, last, 0, &mut inner, &mut total, rest);
    kostka_cache().insert(key, total.clone());
    total
}

/// Enumerate `ν ⊆ λ` with `λ/ν` a horizontal strip of the given size
/// (interleaving condition `λ_{i+1} ≤ ν_i ≤ λ_i`) and accumulate recursions.
fn strip_removals(
    shape: &[u32],
    strip: u64,
    row: usize,
    inner: &mut Vec<u32>,
    total: &mut Int,
    rest_content: &[u32],
) {
    let removed: u64 = shape
        .iter()
        .take(row)
        .zip(inner.iter())
        .map(|(&s, &v)| (s - v) as u64)
        .sum();
    if removed > strip {
        return;
    }
    if row == shape.len() {
        if removed == strip {
            let trimmed: Vec<u32> = inner.iter().copied().filter(|&p| p > 0).collect();
            *total += kostka_counts(&trimmed, rest_content);
        }
        return;
    }
    let lo = if row + 1 < shape.len() { shape[row + 1] } else { 0 };
    let hi = shape[row].min(if row == 0 { u32::MAX } else { inner[row - 1] });
    for v in lo..=hi {
        inner.push(v);
        strip_removals(shape, strip, row + 1, inner, total, rest_content);
        inner.pop();
    }
}

// ---------------------------------------------------------------------------
// Kostka matrices
// ---------------------------------------------------------------------------

/// A square Kostka matrix over an explicit lex-descending shape list.
///
/// `entries[i][j] = K_{shapes[i], shapes[j]}`, so entries vanish whenever
/// `shapes[i]` is lexicographically smaller than `shapes[j]` and the diagonal
/// is all ones.
#[derive(Debug, Clone)]
pub struct KostkaMatrix {
    pub shapes: Vec<Partition>,
    pub entries: Vec<Vec<Int>>,
}

impl KostkaMatrix {
    /// Kostka matrix over all partitions of `n`, optionally restricted to the
    /// diagrams fitting in `rows × cols`.
    pub fn build(n: u64, restrict: Option<(usize, u32)>) -> Self {
        let shapes = match restrict {
            Some((rows, cols)) => partitions_in_rectangle(n, rows, cols),
            None => crate::partition::partitions_of(n),
        };
        Self::over_shapes(shapes)
    }

    /// Kostka matrix over a caller-supplied shape set (kept in given order).
    pub fn over_shapes(shapes: Vec<Partition>) -> Self {
        let entries = shapes
            .iter()
            .map(|a| {
                shapes
                    .iter()
                    .map(|b| kostka_counts(a.parts(), b.parts()))
                    .collect()
            })
            .collect();
        KostkaMatrix { shapes, entries }
    }

    pub fn dim(&self) -> usize {
        self.shapes.len()
    }

    /// Exact inverse of the unitriangular matrix; `K · K⁻¹ = I`.
    pub fn inverse(&self) -> Vec<Vec<Int>> {
        let n = self.dim();
        let mut inv = vec![vec![Int::zero(); n]; n];
        // Shapes are lex-descending, so entries[i][j] = 0 for i > j:
        // solve columns top-down by back-substitution.
        for col in 0..n {
            inv[col][col] = Int::one();
            for row in (0..col).rev() {
                let mut acc = Int::zero();
                for mid in row + 1..=col {
                    acc += &self.entries[row][mid] * &inv[mid][col];
                }
                inv[row][col] = -acc;
            }
        }
        inv
    }
}

// ---------------------------------------------------------------------------
// Margin counts: 0-1 matrices (IB) and nonnegative-integer matrices (IM)
// ---------------------------------------------------------------------------

fn ib_cache() -> &'static DashMap<KostkaKey, Int> {
    static CACHE: OnceLock<DashMap<KostkaKey, Int>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

/// Number of 0-1 matrices with row sums `μ` and column sums `ν`, via the
/// Kostka sum `Σ_λ K_{λ̃ μ} K_{λ ν}`.
pub fn ib_count(mu: &Partition, nu: &Partition) -> Result<Int> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch {
            left: mu.to_string(),
            left_size: mu.size(),
            right: nu.to_string(),
            right_size: nu.size(),
        });
    }
    let key = (mu.parts().to_vec(), nu.parts().to_vec());
    if let Some(v) = ib_cache().get(&key) {
        return Ok(v.clone());
    }
    // K_{λν} needs ℓ(λ) ≤ ℓ(ν); K_{λ̃μ} needs λ₁ = ℓ(λ̃) ≤ ℓ(μ).
    let mut total = Int::zero();
    for lam in partitions_in_rectangle(mu.size(), nu.depth(), mu.depth() as u32) {
        let a = kostka_counts(lam.conjugate().parts(), mu.parts());
        if a.is_zero() {
            continue;
        }
        let b = kostka_counts(lam.parts(), nu.parts());
        total += a * b;
    }
    ib_cache().insert(key, total.clone());
    Ok(total)
}

/// Number of nonnegative-integer matrices with row sums `μ` and column sums
/// `ν`, via `Σ_λ K_{λμ} K_{λν}`.
pub fn im_count(mu: &Partition, nu: &Partition) -> Result<Int> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch {
            left: mu.to_string(),
            left_size: mu.size(),
            right: nu.to_string(),
            right_size: nu.size(),
        });
    }
    let depth = mu.depth().min(nu.depth());
    let mut total = Int::zero();
    for lam in partitions_in_rectangle(mu.size(), depth, mu.size().min(u32::MAX as u64) as u32) {
        let a = kostka_counts(lam.parts(), mu.parts());
        if a.is_zero() {
            continue;
        }
        let b = kostka_counts(lam.parts(), nu.parts());
        total += a * b;
    }
    Ok(total)
}

// ---------------------------------------------------------------------------
// Typed fills: matrices over symbols 0..=l with prescribed row/column types
// ---------------------------------------------------------------------------

/// A tuple of per-line symbol-count vectors, canonicalized to non-increasing
/// lexicographic order. `capacity` bounds each line's total symbol count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowColType {
    vectors: Vec<Vec<u32>>,
    capacity: u32,
}

impl RowColType {
    pub fn new(mut vectors: Vec<Vec<u32>>, capacity: u32) -> Result<Self> {
        for v in &vectors {
            let s: u64 = v.iter().map(|&x| x as u64).sum();
            if s > capacity as u64 {
                return Err(Error::Invalid(format!(
                    "type vector {v:?} exceeds line capacity {capacity}"
                )));
            }
        }
        vectors.sort_by(|a, b| b.cmp(a));
        Ok(RowColType { vectors, capacity })
    }

    pub fn vectors(&self) -> &[Vec<u32>] {
        &self.vectors
    }

    pub fn capacity(&self) -> u32 {
        self.capacity
    }

    /// Total count of each symbol across all lines.
    pub fn symbol_totals(&self, symbols: usize) -> Vec<u64> {
        let mut totals = vec![0u64; symbols];
        for v in &self.vectors {
            for (n, &c) in v.iter().enumerate() {
                if n < symbols {
                    totals[n] += c as u64;
                }
            }
        }
        totals
    }

    /// `∏ (multiplicity of each distinct vector)!` — the stabilizer order of
    /// the tuple under line permutations.
    pub fn stabilizer_order(&self) -> Int {
        let mut acc = Int::one();
        let mut run = 1u64;
        for i in 1..self.vectors.len() {
            if self.vectors[i] == self.vectors[i - 1] {
                run += 1;
                acc *= run;
            } else {
                run = 1;
            }
        }
        acc
    }
}

/// Number of matrices over symbols `{0, 1, …, l}` whose i-th row has exactly
/// `u.vectors[i][n-1]` cells with symbol `n` (and similarly for columns).
/// Symbol 0 fills the remaining cells. Inconsistent symbol totals give 0.
pub fn ib_count_typed(u: &RowColType, w: &RowColType, symbols: usize, max_area: u32) -> Result<Int> {
    let k = u.vectors.len();
    let t = w.vectors.len();
    if (k * t) as u32 > max_area {
        return Err(Error::Resource {
            what: "typed 0..l matrix fill area",
            limit: max_area as u64,
            requested: (k * t) as u64,
        });
    }
    if u.capacity() as usize != t || w.capacity() as usize != k {
        return Err(Error::Invalid(format!(
            "type capacities ({}, {}) do not match the {}x{} grid",
            u.capacity(),
            w.capacity(),
            k,
            t
        )));
    }
    if u.symbol_totals(symbols) != w.symbol_totals(symbols) {
        return Ok(Int::zero());
    }
    // Per-column remaining counts per symbol.
    let mut col_remaining: Vec<Vec<i64>> = w
        .vectors
        .iter()
        .map(|v| (0..symbols).map(|n| v.get(n).copied().unwrap_or(0) as i64).collect())
        .collect();
    let mut count = Int::zero();
    fill_rows(u, symbols, 0, &mut col_remaining, &mut count);
    Ok(count)
}

fn fill_rows(
    u: &RowColType,
    symbols: usize,
    row: usize,
    col_remaining: &mut Vec<Vec<i64>>,
    count: &mut Int,
) {
    if row == u.vectors.len() {
        *count += 1;
        return;
    }
    let mut row_counts: Vec<i64> = (0..symbols)
        .map(|n| u.vectors[row].get(n).copied().unwrap_or(0) as i64)
        .collect();
    fill_cells(u, symbols, row, 0, &mut row_counts, col_remaining, count);
}

fn fill_cells(
    u: &RowColType,
    symbols: usize,
    row: usize,
    col: usize,
    row_counts: &mut Vec<i64>,
    col_remaining: &mut Vec<Vec<i64>>,
    count: &mut Int,
) {
    let t = col_remaining.len();
    if col == t {
        if row_counts.iter().all(|&c| c == 0) {
            fill_rows(u, symbols, row + 1, col_remaining, count);
        }
        return;
    }
    let remaining_cells = (t - col) as i64;
    let needed: i64 = row_counts.iter().sum();
    if needed > remaining_cells {
        return;
    }
    // Symbol 0 (blank) for this cell.
    fill_cells(u, symbols, row, col + 1, row_counts, col_remaining, count);
    for n in 0..symbols {
        if row_counts[n] > 0 && col_remaining[col][n] > 0 {
            row_counts[n] -= 1;
            col_remaining[col][n] -= 1;
            fill_cells(u, symbols, row, col + 1, row_counts, col_remaining, count);
            row_counts[n] += 1;
            col_remaining[col][n] += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Plethysm coefficients
// ---------------------------------------------------------------------------

/// Count of diagrams of `a` boxes fitting in `rows × cols`.
pub fn rectangle_count(a: u64, rows: usize, cols: u32) -> u64 {
    partitions_in_rectangle(a, rows, cols).len() as u64
}

/// Two-row plethysm coefficient: the multiplicity of `(kt−a, a)` in
/// `Sym_k(Sym_t)`, equal to `q(t,k,a) − q(t,k,a−1)` where `q` counts diagrams
/// of `a` boxes in a `k × t` rectangle.
pub fn plethysm_two_row(k: u32, t: u32, a: u64) -> Result<Int> {
    let kt = k as u64 * t as u64;
    if 2 * a > kt {
        return Err(Error::Hypothesis(format!(
            "two-row shape requires 0 <= a <= kt/2 (a = {a}, kt = {kt})"
        )));
    }
    if a == 0 {
        return Ok(Int::one());
    }
    let q_a = rectangle_count(a, k as usize, t);
    let q_prev = rectangle_count(a - 1, k as usize, t);
    Ok(Int::from(q_a) - Int::from(q_prev))
}

/// Tabulated plethysm values for a small family of shapes with three rows,
/// plus the `t = 2` parity rule for two-row shapes. Shapes outside the family
/// are an explicit error, never a silent zero.
pub fn plethysm_special(lambda: &Partition, k: u32, t: u32) -> Result<Int> {
    let n = k as u64 * t as u64;
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            left: lambda.to_string(),
            left_size: lambda.size(),
            right: format!("kt for k={k}, t={t}"),
            right_size: n,
        });
    }
    let m = k.min(t);
    if m == 2 && lambda.depth() <= 2 {
        // Sym of a square: only even second rows survive.
        let a = lambda.part(1);
        return Ok(if a % 2 == 0 { Int::one() } else { Int::zero() });
    }
    let tail: Vec<u32> = lambda.parts().iter().skip(1).copied().collect();
    let head_ok = |drop: u32| lambda.first_part() as u64 == n - drop as u64;
    let value = match tail.as_slice() {
        [1, 1] if head_ok(2) && m >= 2 => 0,
        [2, 1] if head_ok(3) && m >= 3 => 0,
        [3, 1] if head_ok(4) && m >= 4 => 0,
        [2, 2] if head_ok(4) && m >= 3 => 1,
        [3, 2] if head_ok(5) && m >= 3 => 1,
        _ => {
            return Err(Error::Unsupported {
                what: format!("plethysm of shape {lambda} for k={k}, t={t}"),
                available: "(kt-2,1,1), (kt-3,2,1), (kt-4,3,1), (kt-4,2,2), (kt-5,3,2) \
                            in their validity ranges, or t=2 two-row shapes"
                    .to_string(),
            })
        }
    };
    Ok(Int::from(value))
}

/// Exact plethysm coefficients for shapes with at most three rows on small
/// grids, by expanding the character of `Sym_k(Sym_t)` in three variables and
/// solving the triangular Schur system. Guarded to `kt ≤ 18`.
pub fn plethysm_small(lambda: &Partition, k: u32, t: u32) -> Result<Int> {
    let n = k as u64 * t as u64;
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            left: lambda.to_string(),
            left_size: lambda.size(),
            right: format!("kt for k={k}, t={t}"),
            right_size: n,
        });
    }
    if lambda.depth() > 3 {
        return Err(Error::Unsupported {
            what: format!("plethysm of {lambda} with more than 3 rows"),
            available: "shapes with at most 3 rows".to_string(),
        });
    }
    if n > 18 {
        return Err(Error::Resource {
            what: "plethysm character expansion (kt)",
            limit: 18,
            requested: n,
        });
    }
    let table = plethysm_table_3vars(k, t);
    Ok(table.get(lambda).cloned().unwrap_or_else(Int::zero))
}

type PlethKey = (u32, u32);

fn pleth_cache() -> &'static DashMap<PlethKey, BTreeMap<Partition, Int>> {
    static CACHE: OnceLock<DashMap<PlethKey, BTreeMap<Partition, Int>>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

/// Full plethysm table over 3-row shapes of `kt` boxes: expand the character
/// `h_k(u_1, …, u_m)` of `Sym_k(Sym_t)` in three variables, then peel Schur
/// coefficients by the triangular Kostka system.
fn plethysm_table_3vars(k: u32, t: u32) -> BTreeMap<Partition, Int> {
    if let Some(v) = pleth_cache().get(&(k, t)) {
        return v.clone();
    }
    // Monomials of Sym_t in 3 variables: exponent vectors summing to t.
    let mut items: Vec<[u32; 3]> = Vec::new();
    for a in 0..=t {
        for b in 0..=(t - a) {
            items.push([a, b, t - a - b]);
        }
    }
    // h_k over the items: unbounded-multiset DP, f[j] += x^item * f[j-1]
    // with j ascending so the current item may repeat.
    let mut f: Vec<BTreeMap<[u32; 3], Int>> = vec![BTreeMap::new(); k as usize + 1];
    f[0].insert([0, 0, 0], Int::one());
    for item in &items {
        for j in 1..=k as usize {
            let (lo, hi) = f.split_at_mut(j);
            let prev = &lo[j - 1];
            let this = &mut hi[0];
            for (exp, c) in prev.iter() {
                let e = [exp[0] + item[0], exp[1] + item[1], exp[2] + item[2]];
                *this.entry(e).or_insert_with(Int::zero) += c;
            }
        }
    }
    let character = &f[k as usize];

    // Triangular solve: [x^λ] h = Σ_{μ ≥ λ} Pl_μ K_{μλ}, shapes lex descending.
    let n = (k as u64) * (t as u64);
    let shapes = partitions_in_rectangle(n, 3, n.min(u32::MAX as u64) as u32);
    let mut table: BTreeMap<Partition, Int> = BTreeMap::new();
    let mut solved: Vec<(Partition, Int)> = Vec::new();
    for lam in &shapes {
        let exp = [lam.part(0), lam.part(1), lam.part(2)];
        let mut coeff = character.get(&exp).cloned().unwrap_or_else(Int::zero);
        for (mu, pl) in &solved {
            if pl.is_zero() {
                continue;
            }
            coeff -= pl * kostka_counts(mu.parts(), lam.parts());
        }
        solved.push((lam.clone(), coeff.clone()));
        table.insert(lam.clone(), coeff);
    }
    pleth_cache().insert((k, t), table.clone());
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::partition::partitions_of;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), int(2));
        assert_eq!(kostka(&p(&[2, 2]), &p(&[3, 1])).unwrap(), int(0));
        for lam in partitions_of(6) {
            assert_eq!(kostka(&lam, &lam).unwrap(), int(1));
        }
        assert!(kostka(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn kostka_matrix_small() {
        let m = KostkaMatrix::build(2, None);
        assert_eq!(m.shapes, vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(m.entries[0], vec![int(1), int(1)]);
        assert_eq!(m.entries[1], vec![int(0), int(1)]);
        let m0 = KostkaMatrix::build(0, None);
        assert_eq!(m0.dim(), 1);
        assert_eq!(m0.entries[0][0], int(1));
        let r = KostkaMatrix::build(4, Some((2, 2)));
        assert_eq!(r.shapes, vec![p(&[2, 2])]);
        assert_eq!(r.entries[0][0], int(1));
    }

    #[test]
    fn inverse_kostka_identities() {
        for n in 0..=6u64 {
            let m = KostkaMatrix::build(n, None);
            let inv = m.inverse();
            let dim = m.dim();
            for i in 0..dim {
                for j in 0..dim {
                    let mut acc = Int::zero();
                    for l in 0..dim {
                        acc += &m.entries[i][l] * &inv[l][j];
                    }
                    assert_eq!(acc, if i == j { int(1) } else { int(0) });
                }
            }
        }
        let m2 = KostkaMatrix::build(2, None);
        let inv2 = m2.inverse();
        assert_eq!(inv2[0], vec![int(1), int(-1)]);
        assert_eq!(inv2[1], vec![int(0), int(1)]);
    }

    #[test]
    fn ib_im_examples() {
        assert_eq!(ib_count(&p(&[1, 1]), &p(&[1, 1])).unwrap(), int(2));
        assert_eq!(ib_count(&p(&[2]), &p(&[1, 1])).unwrap(), int(1));
        assert_eq!(ib_count(&p(&[2]), &p(&[2])).unwrap(), int(0));
        assert_eq!(im_count(&p(&[2]), &p(&[2])).unwrap(), int(1));
        assert_eq!(im_count(&p(&[1, 1]), &p(&[1, 1])).unwrap(), int(2));
        assert_eq!(im_count(&p(&[2, 1]), &p(&[2, 1])).unwrap(), int(2));
    }

    #[test]
    fn typed_counts() {
        // 2x2 grid over symbols {1,2}: each row and column holds one of each.
        let u = RowColType::new(vec![vec![1, 1], vec![1, 1]], 2).unwrap();
        let w = RowColType::new(vec![vec![1, 1], vec![1, 1]], 2).unwrap();
        assert_eq!(ib_count_typed(&u, &w, 2, 36).unwrap(), int(2));

        // Single-symbol case reduces to the 0-1 margin count.
        let u1 = RowColType::new(vec![vec![1], vec![1]], 2).unwrap();
        let w1 = RowColType::new(vec![vec![1], vec![1]], 2).unwrap();
        assert_eq!(
            ib_count_typed(&u1, &w1, 1, 36).unwrap(),
            ib_count(&p(&[1, 1]), &p(&[1, 1])).unwrap()
        );

        // Mismatched totals vanish.
        let w_bad = RowColType::new(vec![vec![2, 0], vec![0, 2]], 2).unwrap();
        assert_eq!(ib_count_typed(&u, &w_bad, 2, 36).unwrap(), int(0));
    }

    #[test]
    fn plethysm_two_row_table() {
        for (k, t) in [(3u32, 3u32), (4, 3), (4, 4), (5, 4), (6, 5)] {
            assert_eq!(plethysm_two_row(k, t, 0).unwrap(), int(1));
            assert_eq!(plethysm_two_row(k, t, 1).unwrap(), int(0));
            assert_eq!(plethysm_two_row(k, t, 2).unwrap(), int(1));
        }
        assert_eq!(plethysm_two_row(4, 3, 3).unwrap(), int(1));
        assert_eq!(plethysm_two_row(4, 2, 3).unwrap(), int(0));
        assert_eq!(plethysm_two_row(4, 4, 4).unwrap(), int(2));
        assert_eq!(plethysm_two_row(5, 4, 4).unwrap(), int(2));
        assert_eq!(plethysm_two_row(4, 3, 4).unwrap(), int(1));
    }

    #[test]
    fn plethysm_special_table() {
        let n = 12u32; // k=4, t=3
        assert_eq!(
            plethysm_special(&p(&[n - 2, 1, 1]), 4, 3).unwrap(),
            int(0)
        );
        assert_eq!(plethysm_special(&p(&[n - 3, 2, 1]), 4, 3).unwrap(), int(0));
        assert_eq!(plethysm_special(&p(&[n - 4, 2, 2]), 4, 3).unwrap(), int(1));
        assert_eq!(plethysm_special(&p(&[n - 5, 3, 2]), 4, 3).unwrap(), int(1));
        // t = 2 parity rule.
        assert_eq!(plethysm_special(&p(&[6, 2]), 4, 2).unwrap(), int(1));
        assert_eq!(plethysm_special(&p(&[5, 3]), 4, 2).unwrap(), int(0));
        // Outside the family: explicit error.
        assert!(plethysm_special(&p(&[6, 4, 2]), 4, 3).is_err());
    }

    #[test]
    fn plethysm_oracle_matches_closed_forms() {
        for (k, t) in [(2u32, 2u32), (3, 2), (2, 3), (3, 3), (4, 3), (3, 4), (4, 4)] {
            let n = k as u64 * t as u64;
            for a in 0..=(n / 2) {
                let lam = Partition::new(vec![(n - a) as u32, a as u32])
                    .or_else(|_| Partition::new(vec![(n - a) as u32]))
                    .unwrap();
                let expect = plethysm_two_row(k, t, a).unwrap();
                assert_eq!(
                    plethysm_small(&lam, k, t).unwrap(),
                    expect,
                    "two-row plethysm mismatch at k={k}, t={t}, a={a}"
                );
                // Symmetry of the two-row family under k <-> t.
                assert_eq!(plethysm_two_row(t, k, a).unwrap(), expect);
            }
        }
        // Three-row specials against the oracle.
        for (k, t) in [(3u32, 3u32), (4, 3), (3, 4)] {
            let n = (k * t) as u32;
            for (tail, cond) in [
                (vec![1u32, 1], true),
                (vec![2, 1], true),
                (vec![2, 2], true),
                (vec![3, 2], true),
            ] {
                if !cond {
                    continue;
                }
                let drop: u32 = tail.iter().sum();
                let lam = p(&[&[n - drop][..], &tail[..]].concat());
                let special = plethysm_special(&lam, k, t).unwrap();
                let oracle = plethysm_small(&lam, k, t).unwrap();
                assert_eq!(special, oracle, "special vs oracle at {lam}, k={k}, t={t}");
            }
        }
    }
}
