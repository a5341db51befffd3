//! Young-diagram arithmetic: construction, ordering, conjugation, dimension
//! formulas, and rectangle-constrained enumeration.
//!
//! Partitions are the universal index type of the crate: they label irreps of
//! the symmetric group, irreps of `U(d)`, Kostka matrix rows and columns, and
//! the two-row trace families.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{factorial, Int};

/// An integer partition `λ₁ ≥ λ₂ ≥ … ≥ λ_ℓ > 0`, possibly empty.
///
/// The empty partition is the unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validating constructor: parts must be positive and non-increasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Invalid(format!(
                    "parts not non-increasing: {parts:?}"
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Invalid(format!("zero part in {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the input descending and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `|λ|`, the number of boxes.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// `ℓ(λ)`, the number of parts.
    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first_part(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part at `i` (0-based), zero-padded beyond the depth.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The transpose diagram: `μ_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part() as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols {
            parts.push(self.0.iter().filter(|&&p| p >= j as u32).count() as u32);
        }
        Partition(parts)
    }

    /// True when the diagram fits in `rows × cols`.
    pub fn fits_in(&self, rows: usize, cols: u32) -> bool {
        self.depth() <= rows && self.first_part() <= cols
    }

    /// Dominance order: every prefix sum of `self` is ≥ that of `other`.
    /// Both must partition the same integer.
    pub fn dominates(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.size(), other.size());
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 0..self.depth().max(other.depth()) {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiplicity of the part value `v ≥ 1`.
    pub fn multiplicity(&self, v: u32) -> usize {
        self.0.iter().filter(|&&p| p == v).count()
    }

    /// Hook length of the box at 0-based `(i, j)`.
    fn hook_len(&self, conj: &Partition, i: usize, j: usize) -> u64 {
        (self.0[i] as u64 - j as u64) + (conj.0[j] as u64 - i as u64) - 1
    }

    /// `f^λ`, the number of standard Young tableaux, via the hook product.
    pub fn hook_dim(&self) -> Int {
        let conj = self.conjugate();
        let mut hooks = Int::one();
        for i in 0..self.depth() {
            for j in 0..self.0[i] as usize {
                hooks *= self.hook_len(&conj, i, j);
            }
        }
        factorial(self.size()) / hooks
    }

    /// `WD_λ(d)`: the number of semistandard tableaux with entries in `1..=d`,
    /// computed from the content/hook product. Returns 0 when `ℓ(λ) > d`
    /// (a content factor vanishes).
    pub fn weyl_dim(&self, d: u64) -> Int {
        let conj = self.conjugate();
        let mut num = Int::one();
        let mut hooks = Int::one();
        for i in 0..self.depth() {
            for j in 0..self.0[i] as usize {
                let content = d as i64 + j as i64 - i as i64;
                if content <= 0 {
                    return Int::zero();
                }
                num *= content;
                hooks *= self.hook_len(&conj, i, j);
            }
        }
        num / hooks
    }
}

/// Total lexicographic comparison of two partitions of the same integer.
pub fn lex_compare(a: &Partition, b: &Partition) -> Result<Ordering> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            left: a.to_string(),
            left_size: a.size(),
            right: b.to_string(),
            right_size: b.size(),
        });
    }
    Ok(lex_cmp_raw(a, b))
}

/// Lexicographic comparison with zero padding (callers guarantee equal size).
pub(crate) fn lex_cmp_raw(a: &Partition, b: &Partition) -> Ordering {
    for i in 0..a.depth().max(b.depth()) {
        match a.part(i).cmp(&b.part(i)) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// All partitions of `n` in lexicographically descending order.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    partitions_bounded(n, usize::MAX, n.min(u32::MAX as u64) as u32)
}

/// All partitions of `a` with depth ≤ `rows` and largest part ≤ `cols`,
/// lexicographically descending. The count is the `q(rows, cols, a)` of the
/// two-row plethysm formula.
pub fn partitions_in_rectangle(a: u64, rows: usize, cols: u32) -> Vec<Partition> {
    partitions_bounded(a, rows, cols)
}

/// Descending-lex generation with bounded depth and part size.
pub fn partitions_bounded(n: u64, max_depth: usize, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen_rec(n, max_part.min(u32::MAX), max_depth, &mut prefix, &mut out);
    out
}

fn gen_rec(n: u64, max_part: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(prefix.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = (max_part as u64).min(n) as u32;
    let mut p = hi;
    while p >= 1 {
        // Remaining boxes must fit in (slots-1) parts of size <= p.
        if (slots - 1) as u64 * p as u64 >= n - p as u64 {
            prefix.push(p);
            gen_rec(n - p as u64, p, slots - 1, prefix, out);
            prefix.pop();
        }
        p -= 1;
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}


impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for p in &self.0 {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Partition;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of non-increasing positive integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Partition, A::Error> {
                let mut parts = Vec::new();
                while let Some(p) = seq.next_element::<u32>()? {
                    parts.push(p);
                }
                Partition::new(parts).map_err(serde::de::Error::custom)
            }
        }
        deserializer.deserialize_seq(V)
    }
}
