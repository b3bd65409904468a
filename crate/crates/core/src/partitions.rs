//! Integer partitions: generation in canonical order, conjugation, hooks,
//! cores and the special families that index the closed splitting formulas.
//!
//! Canonical order is descending reverse-lexicographic, e.g. for n = 4
//! `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`. Every dense class-function vector
//! in the crate is indexed by this order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default guard on the size of partitions handed to enumerating operations.
pub const DEFAULT_MAX_N: usize = 30;

/// Absolute ceiling for the guard: class sizes are kept in `u128`.
pub const HARD_MAX_N: usize = 34;

static MAX_N: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_N);

/// Current resource guard.
pub fn max_n() -> usize {
    MAX_N.load(AtomicOrdering::Relaxed)
}

/// Overrides the resource guard (at most [`HARD_MAX_N`]).
pub fn set_max_n(n: usize) -> Result<()> {
    if n > HARD_MAX_N {
        return Err(Error::ResourceGuard { n, max: HARD_MAX_N });
    }
    MAX_N.store(n, AtomicOrdering::Relaxed);
    Ok(())
}

pub(crate) fn guard(n: usize) -> Result<()> {
    let max = max_n();
    if n > max {
        Err(Error::ResourceGuard { n, max })
    } else {
        Ok(())
    }
}

/// A partition: weakly decreasing positive parts, no trailing zeros.
///
/// Doubles as a conjugacy-class label (cycle type) of `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates and builds a partition. Trailing zeros are dropped.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse {
                input: format!("{parts:?}"),
                reason: "parts must be positive and weakly decreasing".into(),
            });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from a literal.
    ///
    /// Panics if `parts` is not weakly decreasing; intended for constants.
    pub fn of(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("invalid partition literal")
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook `(n-k, 1^k)`; `None` unless `k < n`.
    pub fn hook(n: usize, k: usize) -> Option<Self> {
        if k >= n {
            return None;
        }
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat_n(1, k));
        Some(Partition { parts })
    }

    /// The staircase `rho_k = (k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Self {
        Partition {
            parts: (1..=k).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`, the number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.conjugate()
    }

    /// `(n)` or `(1^n)`.
    pub fn is_linear(&self) -> bool {
        self.len() <= 1 || self.first() == 1
    }

    pub fn is_hook(&self) -> bool {
        !self.is_empty() && self.part(1) <= 1
    }

    /// Durfee length 2: `(μ1, μ2, 2^d2, 1^d1)` with `μ2 ≥ 2`.
    pub fn is_double_hook(&self) -> bool {
        self.durfee() == 2
    }

    /// Every part equal.
    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Depth `n - λ1`.
    pub fn depth(&self) -> usize {
        self.size() - self.first()
    }

    /// Durfee (diagonal) length `dl(λ)`.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// Hook length of the cell in row `i`, column `j` (0-based).
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let arm = self.parts[i] - j - 1;
        let leg = self
            .parts
            .iter()
            .skip(i + 1)
            .take_while(|&&p| p > j)
            .count();
        arm + leg + 1
    }

    /// `H(λ)`: principal hook lengths.
    pub fn principal_hooks(&self) -> Partition {
        Partition {
            parts: (0..self.durfee()).map(|i| self.hook_length(i, i)).collect(),
        }
    }

    /// Number of removable boxes `r1`.
    pub fn removable_count(&self) -> usize {
        self.removals().len()
    }

    /// All partitions obtained by removing one corner box, in canonical order.
    pub fn removals(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.part(i) > self.part(i + 1) {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                out.push(Partition::new(parts).expect("corner removal keeps order"));
            }
        }
        out.sort();
        out
    }

    /// `|λ ∩ λ^t|`, cells on which the diagram and its transpose agree.
    pub fn self_intersection(&self) -> usize {
        let t = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p.min(t.part(i)))
            .sum()
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition {
            parts: (0..len).map(|i| self.part(i) + other.part(i)).collect(),
        }
    }

    /// `λ ∪ μ`: concatenation, defined when the last part of `λ` is at least `μ1`.
    pub fn concat(&self, other: &Partition) -> Option<Partition> {
        if let Some(&last) = self.parts.last() {
            if last < other.first() {
                return None;
            }
        }
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Some(Partition { parts })
    }

    /// Multiplicity of each part size: index `i` holds `m_i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Number of distinct values among the four coordinates `(λ1,..,λ4)`,
    /// zero included. `None` when `ℓ(λ) > 4`.
    pub fn distinct_parts_with_zero(&self) -> Option<usize> {
        let padded = self.padded4()?;
        Some(padded.iter().collect::<BTreeSet<_>>().len())
    }

    fn padded4(&self) -> Option<[usize; 4]> {
        if self.len() > 4 {
            return None;
        }
        Some([self.part(0), self.part(1), self.part(2), self.part(3)])
    }

    /// Beta-set (first-column hook lengths) with `len` beads.
    fn beta_set(&self, len: usize) -> Vec<usize> {
        (0..len).map(|i| self.part(i) + len - 1 - i).collect()
    }

    fn from_beta_set(mut beta: Vec<usize>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let len = beta.len();
        Partition::from_unsorted(
            beta.iter()
                .enumerate()
                .map(|(i, b)| b - (len - 1 - i))
                .collect(),
        )
    }

    /// Every way of removing a rim hook (border strip) of length `r`,
    /// paired with its leg length (number of rows minus one).
    pub fn rim_hook_removals(&self, r: usize) -> Vec<(Partition, usize)> {
        if r == 0 {
            return vec![(self.clone(), 0)];
        }
        let beta = self.beta_set(self.len());
        let mut out = Vec::new();
        for (pos, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let target = b - r;
            let leg = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut next = beta.clone();
            next[pos] = target;
            out.push((Partition::from_beta_set(next), leg));
        }
        out
    }

    /// Removes `p`-hooks until none remain; returns the core and the weight.
    pub fn p_core_and_weight(&self, p: usize) -> (Partition, usize) {
        assert!(p >= 2, "p-cores need p >= 2");
        let mut beta = self.beta_set(self.len());
        let mut weight = 0;
        loop {
            let slot = beta
                .iter()
                .position(|&b| b >= p && !beta.contains(&(b - p)));
            match slot {
                Some(pos) => {
                    beta[pos] -= p;
                    weight += 1;
                }
                None => break,
            }
        }
        (Partition::from_beta_set(beta), weight)
    }

    pub fn hook_stats(&self) -> HookStats {
        let mut hook_lengths = Vec::with_capacity(self.len());
        let (mut r1, mut r2, mut r3, mut r21) = (0, 0, 0, 0);
        for i in 0..self.len() {
            let mut row = Vec::with_capacity(self.parts[i]);
            for j in 0..self.parts[i] {
                let h = self.hook_length(i, j);
                match h {
                    1 => r1 += 1,
                    2 => r2 += 1,
                    3 => {
                        r3 += 1;
                        let arm = self.parts[i] - j - 1;
                        if arm == 1 {
                            r21 += 1;
                        }
                    }
                    _ => {}
                }
                row.push(h);
            }
            hook_lengths.push(row);
        }
        HookStats {
            hook_lengths,
            principal_hooks: self.principal_hooks(),
            durfee: self.durfee(),
            depth: self.depth(),
            r1,
            r2,
            r3,
            r21,
        }
    }
}

/// Hook data of a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookStats {
    pub hook_lengths: Vec<Vec<usize>>,
    pub principal_hooks: Partition,
    pub durfee: usize,
    pub depth: usize,
    /// Removable boxes (1-hooks).
    pub r1: usize,
    pub r2: usize,
    pub r3: usize,
    /// 3-hooks that are neither a row nor a column.
    pub r21: usize,
}

impl Ord for Partition {
    /// Size first, then descending lexicographic: ascending iteration is canonical order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
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
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,2,2`, exponent shorthand `3,2^2` and the bracketed forms
    /// `[3,2,2]` / `(3,2,2)`. The empty partition is `""`, `[]` or `()`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')'])
            .trim();
        let mut parts = Vec::new();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        for token in body.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let base: usize = base
                .parse()
                .map_err(|_| err("parts must be non-negative integers"))?;
            let exp: usize = exp
                .parse()
                .map_err(|_| err("exponents must be non-negative integers"))?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(err("parts must be weakly decreasing"));
        }
        Ok(Partition::from_unsorted(parts))
    }
}

/// All partitions of `n` with at most `bound` parts, in canonical order.
pub fn enumerate(n: usize, bound: Option<usize>) -> Result<Vec<Partition>> {
    guard(n)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, bound.unwrap_or(usize::MAX), &mut current, &mut out);
    Ok(out)
}

fn fill(
    remaining: usize,
    cap: usize,
    slots: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    if slots == 0 {
        return;
    }
    for part in (1..=cap.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, slots - 1, current, out);
        current.pop();
    }
}

/// Named partition families used by the closed formulas.
///
/// Parity families look at the four coordinates `(λ1,λ2,λ3,λ4)` with zeros
/// counted as even parts; all of them require `ℓ(λ) ≤ 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// All four coordinates even.
    E4,
    /// All four coordinates odd.
    O4,
    /// Two even and two odd coordinates.
    E2O2,
    /// Two even and two odd, the two odd ones different.
    E2O2Prime,
    /// Two even and two odd, the two even ones different.
    E2PrimeO2,
    E3O1,
    E1O3,
    /// `P_ℓ(n)`: at most `ℓ` parts.
    AtMostParts(usize),
    Hooks,
    DoubleHooks,
}

impl FamilyKind {
    pub fn contains(self, lambda: &Partition) -> bool {
        let parity = |p: &Partition| -> Option<([usize; 4], usize)> {
            let padded = p.padded4()?;
            let evens = padded.iter().filter(|&&x| x % 2 == 0).count();
            Some((padded, evens))
        };
        let pair = |padded: [usize; 4], even: bool| -> Vec<usize> {
            padded
                .iter()
                .copied()
                .filter(|x| (x % 2 == 0) == even)
                .collect()
        };
        match self {
            FamilyKind::E4 => matches!(parity(lambda), Some((_, 4))),
            FamilyKind::O4 => matches!(parity(lambda), Some((_, 0))),
            FamilyKind::E2O2 => matches!(parity(lambda), Some((_, 2))),
            FamilyKind::E2O2Prime => match parity(lambda) {
                Some((padded, 2)) => {
                    let odd = pair(padded, false);
                    odd[0] != odd[1]
                }
                _ => false,
            },
            FamilyKind::E2PrimeO2 => match parity(lambda) {
                Some((padded, 2)) => {
                    let even = pair(padded, true);
                    even[0] != even[1]
                }
                _ => false,
            },
            FamilyKind::E3O1 => matches!(parity(lambda), Some((_, 3))),
            FamilyKind::E1O3 => matches!(parity(lambda), Some((_, 1))),
            FamilyKind::AtMostParts(ell) => lambda.len() <= ell,
            FamilyKind::Hooks => lambda.is_hook(),
            FamilyKind::DoubleHooks => lambda.is_double_hook(),
        }
    }
}

/// All members of a family of partitions of `n`, in canonical order.
pub fn family(kind: FamilyKind, n: usize) -> Result<Vec<Partition>> {
    let bound = match kind {
        FamilyKind::Hooks | FamilyKind::DoubleHooks => None,
        FamilyKind::AtMostParts(ell) => Some(ell),
        _ => Some(4),
    };
    Ok(enumerate(n, bound)?
        .into_iter()
        .filter(|p| kind.contains(p))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    /// Euler's pentagonal recurrence, independent of the generator.
    fn partition_count(n: usize) -> usize {
        let mut counts = vec![0i64; n + 1];
        counts[0] = 1;
        for i in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                counts[i] += sign * counts[i - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    counts[i] += sign * counts[i - g2];
                }
                k += 1;
            }
        }
        counts[n] as usize
    }

    #[test]
    fn enumerate_small_cases() {
        assert_eq!(
            enumerate(4, None).unwrap(),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        assert_eq!(enumerate(0, None).unwrap(), vec![Partition::empty()]);
        assert_eq!(enumerate(10, None).unwrap().len(), 42);
        for n in 0..=20 {
            assert_eq!(
                enumerate(n, None).unwrap().len(),
                partition_count(n),
                "n={n}"
            );
        }
    }

    #[test]
    fn enumerate_respects_guard_and_bound() {
        assert!(matches!(
            enumerate(max_n() + 1, None),
            Err(Error::ResourceGuard { .. })
        ));
        let two_row = enumerate(6, Some(2)).unwrap();
        assert_eq!(two_row, vec![p(&[6]), p(&[5, 1]), p(&[4, 2]), p(&[3, 3])]);
    }

    #[test]
    fn canonical_order_matches_sorting() {
        let all = enumerate(9, None).unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    /// Cell-by-cell transpose of the Young diagram.
    fn transpose_oracle(lambda: &Partition) -> Partition {
        let cells: Vec<(usize, usize)> = lambda
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (j, i)))
            .collect();
        let rows = cells.iter().map(|c| c.0 + 1).max().unwrap_or(0);
        let mut parts = vec![0; rows];
        for (r, _) in cells {
            parts[r] += 1;
        }
        Partition::new(parts).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[4, 3, 3]).conjugate(), p(&[3, 3, 3, 1]));
        assert_eq!(transpose_oracle(&p(&[4, 3, 3])), p(&[3, 3, 3, 1]));
        for lambda in enumerate(9, None).unwrap() {
            assert_eq!(lambda.conjugate(), transpose_oracle(&lambda));
        }
    }

    #[test]
    fn hook_stat_examples() {
        assert_eq!(p(&[4, 3, 3]).hook_stats().principal_hooks, p(&[6, 3, 1]));
        let row = p(&[7]).hook_stats();
        assert_eq!((row.r1, row.depth), (1, 0));
        assert_eq!(p(&[3, 2, 2]).hook_stats().r1, 2);
        // (3,2,1): both 3-hooks are bent.
        let stair = p(&[3, 2, 1]).hook_stats();
        assert_eq!((stair.r3, stair.r21), (2, 2));
        // (2,2): the (0,0) cell has arm 1 and leg 1.
        assert_eq!(p(&[2, 2]).hook_stats().r21, 1);
    }

    #[test]
    fn hook_lengths_sum_matches_cells() {
        for lambda in enumerate(8, None).unwrap() {
            let stats = lambda.hook_stats();
            let cells: usize = stats.hook_lengths.iter().map(Vec::len).sum();
            assert_eq!(cells, lambda.size());
            assert_eq!(
                stats.r1,
                stats
                    .hook_lengths
                    .iter()
                    .flatten()
                    .filter(|&&h| h == 1)
                    .count()
            );
            let t = lambda.conjugate();
            assert_eq!(lambda.durfee(), t.durfee());
            assert_eq!(lambda.principal_hooks(), t.principal_hooks());
        }
    }

    #[test]
    fn cores_and_weights() {
        assert_eq!(p(&[3, 2, 2]).p_core_and_weight(2), (p(&[1]), 3));
        for k in 0..7 {
            assert_eq!(
                Partition::staircase(k).p_core_and_weight(2),
                (Partition::staircase(k), 0)
            );
        }
        assert_eq!(p(&[4, 4]).p_core_and_weight(2), (Partition::empty(), 4));
    }

    #[test]
    fn rim_hooks_of_hook_partition() {
        // (3,1,1): a horizontal domino off the arm, a vertical one off the leg.
        let mut removals = p(&[3, 1, 1]).rim_hook_removals(2);
        removals.sort();
        assert_eq!(removals, vec![(p(&[3]), 1), (p(&[1, 1, 1]), 0)]);
        assert!(p(&[3, 1, 1]).rim_hook_removals(3).is_empty());
        assert_eq!(
            p(&[3, 1, 1]).rim_hook_removals(5),
            vec![(Partition::empty(), 2)]
        );
    }

    #[test]
    fn families() {
        assert_eq!(
            family(FamilyKind::E4, 4).unwrap(),
            vec![p(&[4]), p(&[2, 2])]
        );
        assert_eq!(family(FamilyKind::O4, 6).unwrap(), vec![p(&[3, 1, 1, 1])]);
        assert_eq!(
            family(FamilyKind::E3O1, 5).unwrap(),
            vec![p(&[5]), p(&[4, 1]), p(&[3, 2]), p(&[2, 2, 1])]
        );
        assert_eq!(
            family(FamilyKind::E1O3, 5).unwrap(),
            vec![p(&[3, 1, 1]), p(&[2, 1, 1, 1])]
        );
        assert_eq!(family(FamilyKind::E2O2Prime, 4).unwrap(), vec![p(&[3, 1])]);
        assert_eq!(
            family(FamilyKind::E2PrimeO2, 4).unwrap(),
            vec![p(&[2, 1, 1])]
        );
        assert!(family(FamilyKind::O4, 5).unwrap().is_empty());
    }

    #[test]
    fn family_partition_of_p4() {
        for n in (2..=16).step_by(2) {
            let p4 = family(FamilyKind::AtMostParts(4), n).unwrap();
            let e4 = family(FamilyKind::E4, n).unwrap();
            let o4 = family(FamilyKind::O4, n).unwrap();
            let e2o2 = family(FamilyKind::E2O2, n).unwrap();
            assert!(e4.iter().all(|x| !o4.contains(x)));
            assert_eq!(e4.len() + o4.len() + e2o2.len(), p4.len(), "n={n}");
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!("3,2,2".parse::<Partition>().unwrap(), p(&[3, 2, 2]));
        assert_eq!("3,2^2".parse::<Partition>().unwrap(), p(&[3, 2, 2]));
        assert_eq!("2^3".parse::<Partition>().unwrap(), p(&[2, 2, 2]));
        assert_eq!("[4,1]".parse::<Partition>().unwrap(), p(&[4, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,3".parse::<Partition>().is_err());
        assert!("a,1".parse::<Partition>().is_err());
    }

    #[test]
    fn json_form() {
        assert_eq!(serde_json::to_string(&p(&[3, 2, 2])).unwrap(), "[3,2,2]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert_eq!(
            serde_json::from_str::<Partition>("[2,1]").unwrap(),
            p(&[2, 1])
        );
    }

    #[test]
    fn sums_and_concatenation() {
        assert_eq!(p(&[2, 1]).add(&p(&[3])), p(&[5, 1]));
        assert_eq!(p(&[4, 1]).concat(&p(&[1, 1])), Some(p(&[4, 1, 1, 1])));
        assert_eq!(p(&[4, 1]).concat(&p(&[2])), None);
        assert_eq!(p(&[3, 1]).self_intersection(), 3);
    }
}
