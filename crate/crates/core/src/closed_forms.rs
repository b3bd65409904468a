//! Closed-form predictions for pieces of `S²[λ]` and `A²[λ]`, and a harness
//! comparing each one with the character-theoretic split.
//!
//! Predictors never consult the oracle. Terms whose shape is not a partition
//! at a given `n` are dropped, so `[n−4,4]` simply vanishes for `n < 8`.
//!
//! Hook squares: the double-hook clause is read as
//! `sg = 1` when (`|2k+1−n| ≤ μ1−μ2` and `d1` odd) or (`|2k+1−n| = μ1−μ2+1` and
//! `d1 ≡ 0 mod 4`), and likewise for `ag` with `d1 ≡ 2 mod 4`. The sweep over all
//! hooks of size at most 12 agrees with this reading.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{decompose, degree, synthesize, Decomposition};
use crate::error::{contract, Error, Result};
use crate::kronecker::{square_split, sym_alt_parts, SquareSplit};
use crate::partitions::{enumerate, family, FamilyKind, Partition};
use crate::report::{DiffBuilder, VerificationReport};
use crate::tableaux::{kostka, lr_coefficient};

/// Every closed formula the harness knows how to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FormulaId {
    MwHooks,
    SmallDepthCoeffs,
    SmallDepthSplit,
    MmDepth2,
    Depth3N33,
    RectangleDepth3,
    KkSplit,
    K1kSplit,
    K1km1Split,
    TwoPartMf,
    TwoPartHooks,
    TwoPartA2Zero,
    SignGip,
    Neighbour,
    YoungSquare,
    Catalan,
}

impl FormulaId {
    pub const ALL: [FormulaId; 16] = [
        FormulaId::MwHooks,
        FormulaId::SmallDepthCoeffs,
        FormulaId::SmallDepthSplit,
        FormulaId::MmDepth2,
        FormulaId::Depth3N33,
        FormulaId::RectangleDepth3,
        FormulaId::KkSplit,
        FormulaId::K1kSplit,
        FormulaId::K1km1Split,
        FormulaId::TwoPartMf,
        FormulaId::TwoPartHooks,
        FormulaId::TwoPartA2Zero,
        FormulaId::SignGip,
        FormulaId::Neighbour,
        FormulaId::YoungSquare,
        FormulaId::Catalan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::MwHooks => "MW_HOOKS",
            FormulaId::SmallDepthCoeffs => "SMALL_DEPTH_COEFFS",
            FormulaId::SmallDepthSplit => "SMALL_DEPTH_SPLIT",
            FormulaId::MmDepth2 => "MM_DEPTH2",
            FormulaId::Depth3N33 => "DEPTH3_N33",
            FormulaId::RectangleDepth3 => "RECTANGLE_DEPTH3",
            FormulaId::KkSplit => "KK_SPLIT",
            FormulaId::K1kSplit => "K1K_SPLIT",
            FormulaId::K1km1Split => "K1KM1_SPLIT",
            FormulaId::TwoPartMf => "TWO_PART_MF",
            FormulaId::TwoPartHooks => "TWO_PART_HOOKS",
            FormulaId::TwoPartA2Zero => "TWO_PART_A2_ZERO",
            FormulaId::SignGip => "SIGN_GIP",
            FormulaId::Neighbour => "NEIGHBOUR",
            FormulaId::YoungSquare => "YOUNG_SQUARE",
            FormulaId::Catalan => "CATALAN",
        }
    }

    /// Whether the sweep is indexed by `k` rather than `n`.
    pub fn indexed_by_k(self) -> bool {
        matches!(
            self,
            FormulaId::RectangleDepth3
                | FormulaId::KkSplit
                | FormulaId::K1kSplit
                | FormulaId::K1km1Split
                | FormulaId::TwoPartMf
                | FormulaId::Catalan
        )
    }

    /// Default upper end of the sweep (`n` or `k`).
    pub fn default_max(self) -> usize {
        match self {
            FormulaId::MwHooks
            | FormulaId::MmDepth2
            | FormulaId::TwoPartHooks
            | FormulaId::TwoPartA2Zero => 12,
            FormulaId::Neighbour => 12,
            FormulaId::SmallDepthCoeffs | FormulaId::SmallDepthSplit | FormulaId::YoungSquare => 10,
            FormulaId::Depth3N33 => 13,
            FormulaId::SignGip => 14,
            FormulaId::RectangleDepth3 => 4,
            FormulaId::KkSplit => 6,
            FormulaId::K1kSplit | FormulaId::K1km1Split | FormulaId::TwoPartMf => 5,
            FormulaId::Catalan => 8,
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        FormulaId::ALL
            .into_iter()
            .find(|id| id.name() == wanted)
            .ok_or_else(|| contract(format!("unknown formula id {s:?}")))
    }
}

fn delta(n: usize, m: usize) -> i64 {
    i64::from(n >= m)
}

fn shape(parts: &[i64]) -> Option<Partition> {
    if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Partition::new(parts.iter().map(|&p| p as usize).collect::<Vec<_>>()).ok()
}

fn build(n: usize, terms: &[(Vec<i64>, i64)]) -> Decomposition {
    let mut d = Decomposition::new(n);
    for (parts, coef) in terms {
        if *coef == 0 {
            continue;
        }
        if let Some(p) = shape(parts) {
            if p.size() == n {
                d.add_term(p, *coef).expect("size checked");
            }
        }
    }
    d
}

fn prediction(lambda: Partition, sym: Decomposition, alt: Decomposition) -> SquareSplit {
    SquareSplit { lambda, sym, alt }
}

fn ones(n: usize, parts: impl IntoIterator<Item = Partition>) -> Decomposition {
    Decomposition::from_terms(n, parts.into_iter().map(|p| (p, 1)))
        .expect("family members have size n")
}

/// Full split of `[n−k,1^k]²`.
pub fn mw_hook_split(n: usize, k: usize) -> Result<SquareSplit> {
    let lambda =
        Partition::hook(n, k).ok_or_else(|| contract(format!("no hook ({n}-{k},1^{k})")))?;
    let mut sym = Decomposition::new(n);
    let mut alt = Decomposition::new(n);
    let reach = 2 * k.min(n - k - 1);
    let imbalance = (2 * k + 1).abs_diff(n);
    for mu in enumerate(n, None)? {
        if mu.is_hook() {
            let m = mu.len() - 1;
            if m <= reach {
                if m % 4 <= 1 {
                    sym.add_term(mu, 1)?;
                } else {
                    alt.add_term(mu, 1)?;
                }
            }
        } else if mu.is_double_hook() {
            let gap = mu.part(0) - mu.part(1);
            let d1 = mu.parts().iter().filter(|&&x| x == 1).count();
            let inside = imbalance <= gap;
            let edge = imbalance == gap + 1;
            let s = match d1 % 4 {
                0 if inside => 2,
                0 if edge => 1,
                1 | 3 if inside => 1,
                _ => 0,
            };
            let a = match d1 % 4 {
                2 if inside => 2,
                2 if edge => 1,
                1 | 3 if inside => 1,
                _ => 0,
            };
            if s > 0 {
                sym.add_term(mu.clone(), s)?;
            }
            if a > 0 {
                alt.add_term(mu, a)?;
            }
        }
    }
    Ok(prediction(lambda, sym, alt))
}

/// Multiplicities in `[λ]²` of `[n−1,1]`, `[n−2,2]`, `[n−2,1²]`, `[n−3,3]`,
/// `[n−3,1³]`, `[n−3,2,1]`. `None` below the size where a formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallDepthCoeffs {
    pub a1: Option<i64>,
    pub a2: Option<i64>,
    pub b2: Option<i64>,
    pub a3: Option<i64>,
    pub b3: Option<i64>,
    pub c3: Option<i64>,
}

impl SmallDepthCoeffs {
    /// `(name, constituent, value)` for each applicable coefficient.
    pub fn labelled(&self, n: usize) -> Vec<(&'static str, Partition, i64)> {
        let n = n as i64;
        let rows: [(&str, Vec<i64>, Option<i64>); 6] = [
            ("a1", vec![n - 1, 1], self.a1),
            ("a2", vec![n - 2, 2], self.a2),
            ("b2", vec![n - 2, 1, 1], self.b2),
            ("a3", vec![n - 3, 3], self.a3),
            ("b3", vec![n - 3, 1, 1, 1], self.b3),
            ("c3", vec![n - 3, 2, 1], self.c3),
        ];
        rows.into_iter()
            .filter_map(|(name, parts, v)| Some((name, shape(&parts)?, v?)))
            .collect()
    }
}

fn nonlinear(lambda: &Partition) -> Result<()> {
    if lambda.is_linear() {
        return Err(contract(format!("{lambda} is linear")));
    }
    Ok(())
}

pub fn small_depth_coeffs(lambda: &Partition) -> Result<SmallDepthCoeffs> {
    nonlinear(lambda)?;
    let n = lambda.size();
    let h = lambda.hook_stats();
    let (r1, r2, r3, r21) = (h.r1 as i64, h.r2 as i64, h.r3 as i64, h.r21 as i64);
    let cubic = r1 * (r1 - 1) * (r1 - 3);
    Ok(SmallDepthCoeffs {
        a1: Some(r1 - 1),
        a2: (n >= 4).then_some(r2 + r1 * (r1 - 2)),
        b2: (n >= 3).then_some((r1 - 1) * (r1 - 1)),
        a3: (n >= 6).then_some(cubic + r2 * (2 * r1 - 3) + r3),
        b3: (n >= 4).then_some(cubic + (r1 - 1) * (r2 + 1) + r21),
        c3: (n >= 5).then_some(2 * cubic + r2 * (3 * r1 - 4) + r1 + r21),
    })
}

/// How the depth ≤ 2 coefficients split between `S²` and `A²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallDepthSplit {
    pub a1s: i64,
    pub a1a: i64,
    pub a2s: i64,
    pub a2a: i64,
    pub b2s: i64,
    pub b2a: i64,
}

pub fn small_depth_split(lambda: &Partition) -> Result<SmallDepthSplit> {
    nonlinear(lambda)?;
    if lambda.size() < 4 {
        return Err(contract(format!("{lambda}: needs n >= 4")));
    }
    let c = small_depth_coeffs(lambda)?;
    let r1 = lambda.hook_stats().r1 as i64;
    Ok(SmallDepthSplit {
        a1s: c.a1.unwrap_or(0),
        a1a: 0,
        a2s: c.a2.unwrap_or(0),
        a2a: 0,
        b2s: (r1 - 1) * (r1 - 2) / 2,
        b2a: r1 * (r1 - 1) / 2,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MmShape {
    /// `(n−1,1)`, `n ≥ 3`
    OneBox,
    /// `(n−2,2)`, `n ≥ 4`
    TwoRow,
    /// `(n−2,1²)`, `n ≥ 5`
    TwoLeg,
}

impl MmShape {
    pub const ALL: [MmShape; 3] = [MmShape::OneBox, MmShape::TwoRow, MmShape::TwoLeg];

    pub fn min_n(self) -> usize {
        match self {
            MmShape::OneBox => 3,
            MmShape::TwoRow => 4,
            MmShape::TwoLeg => 5,
        }
    }

    pub fn partition(self, n: usize) -> Option<Partition> {
        if n < self.min_n() {
            return None;
        }
        Some(match self {
            MmShape::OneBox => Partition::of(&[n - 1, 1]),
            MmShape::TwoRow => Partition::of(&[n - 2, 2]),
            MmShape::TwoLeg => Partition::of(&[n - 2, 1, 1]),
        })
    }
}

/// Full splits of the squares of the three depth-2 shapes.
pub fn mm_depth2_squares(n: usize, which: MmShape) -> Result<SquareSplit> {
    let lambda = which
        .partition(n)
        .ok_or_else(|| contract(format!("{which:?} needs n >= {}", which.min_n())))?;
    let m = n as i64;
    let d = |t| delta(n, t);
    let (sym, alt) = match which {
        MmShape::OneBox => (
            vec![(vec![m], 1), (vec![m - 1, 1], 1), (vec![m - 2, 2], d(4))],
            vec![(vec![m - 2, 1, 1], 1)],
        ),
        MmShape::TwoRow => (
            vec![
                (vec![m], 1),
                (vec![m - 1, 1], d(5)),
                (vec![m - 2, 2], 1 + d(6)),
                (vec![m - 3, 3], d(7)),
                (vec![m - 3, 2, 1], d(5)),
                (vec![m - 4, 4], d(8)),
                (vec![m - 4, 2, 2], d(6)),
            ],
            vec![
                (vec![m - 2, 1, 1], d(5)),
                (vec![m - 3, 2, 1], d(6)),
                (vec![m - 3, 1, 1, 1], 1),
                (vec![m - 4, 3, 1], d(7)),
            ],
        ),
        MmShape::TwoLeg => (
            vec![
                (vec![m], 1),
                (vec![m - 1, 1], 1),
                (vec![m - 2, 2], 2),
                (vec![m - 3, 3], d(6)),
                (vec![m - 3, 2, 1], 1),
                (vec![m - 4, 2, 2], d(6)),
                (vec![m - 4, 1, 1, 1, 1], 1),
            ],
            vec![
                (vec![m - 2, 1, 1], 1),
                (vec![m - 3, 2, 1], 1),
                (vec![m - 3, 1, 1, 1], 1),
                (vec![m - 4, 2, 1, 1], d(6)),
            ],
        ),
    };
    Ok(prediction(lambda, build(n, &sym), build(n, &alt)))
}

/// Full split of `[n−3,3]²`, `n ≥ 6`.
pub fn depth3_square(n: usize) -> Result<SquareSplit> {
    if n < 6 {
        return Err(contract(format!("(n-3,3) needs n >= 6, got {n}")));
    }
    let m = n as i64;
    let d = |t| delta(n, t);
    let sym = vec![
        (vec![m], 1),
        (vec![m - 1, 1], d(7)),
        (vec![m - 2, 2], 1 + d(8)),
        (vec![m - 3, 3], d(7) + d(9)),
        (vec![m - 3, 2, 1], d(7)),
        (vec![m - 4, 4], d(8) + d(10)),
        (vec![m - 4, 3, 1], d(8)),
        (vec![m - 4, 2, 2], 1 + d(8)),
        (vec![m - 5, 5], d(11)),
        (vec![m - 5, 4, 1], d(9)),
        (vec![m - 5, 3, 2], d(9)),
        (vec![m - 5, 2, 2, 1], d(7)),
        (vec![m - 6, 6], d(12)),
        (vec![m - 6, 4, 2], d(10)),
    ];
    let alt = vec![
        (vec![m - 2, 1, 1], d(7)),
        (vec![m - 3, 2, 1], d(8)),
        (vec![m - 3, 1, 1, 1], 1),
        (vec![m - 4, 3, 1], d(7) + d(9)),
        (vec![m - 4, 2, 1, 1], d(7)),
        (vec![m - 5, 4, 1], d(10)),
        (vec![m - 5, 3, 2], d(8)),
        (vec![m - 5, 3, 1, 1], d(8)),
        (vec![m - 6, 5, 1], d(11)),
        (vec![m - 6, 3, 3], d(9)),
    ];
    Ok(prediction(
        Partition::of(&[n - 3, 3]),
        build(n, &sym),
        build(n, &alt),
    ))
}

/// Constituents of depth at most 3 in the split of `[a^b]²`, `a, b ≥ 3`.
pub fn rectangle_depth3(a: usize, b: usize) -> Result<SquareSplit> {
    if a < 3 || b < 3 {
        return Err(contract(format!("rectangle ({a}^{b}) needs a, b >= 3")));
    }
    let n = a * b;
    let m = n as i64;
    let sym = build(n, &[(vec![m], 1), (vec![m - 2, 2], 1), (vec![m - 3, 3], 1)]);
    let alt = build(n, &[(vec![m - 3, 1, 1, 1], 1)]);
    Ok(prediction(Partition::of(&vec![a; b]), sym, alt))
}

/// Split of `[k,k]²`: all-even and all-odd four-part families.
pub fn kk_split(k: usize) -> Result<SquareSplit> {
    if k == 0 {
        return Err(contract("(k,k) needs k >= 1"));
    }
    let n = 2 * k;
    Ok(prediction(
        Partition::of(&[k, k]),
        ones(n, family(FamilyKind::E4, n)?),
        ones(n, family(FamilyKind::O4, n)?),
    ))
}

/// Split of `[k+1,k]²`.
pub fn k1k_split(k: usize) -> Result<SquareSplit> {
    let n = 2 * k + 1;
    Ok(prediction(
        Partition::new(vec![k + 1, k])?,
        ones(n, family(FamilyKind::E3O1, n)?),
        ones(n, family(FamilyKind::E1O3, n)?),
    ))
}

/// Split of `[k+1,k−1]²`, weighted by the number of distinct coordinates
/// of the 4-padded constituent (zero counted).
pub fn k1km1_split(k: usize) -> Result<SquareSplit> {
    if k == 0 {
        return Err(contract("(k+1,k-1) needs k >= 1"));
    }
    let n = 2 * k;
    let weighted = |kind| -> Result<Vec<(Partition, i64)>> {
        Ok(family(kind, n)?
            .into_iter()
            .map(|p| {
                let d = p.distinct_parts_with_zero().expect("at most four parts") as i64;
                (p, d - 1)
            })
            .filter(|(_, m)| *m != 0)
            .collect())
    };
    let mut sym = weighted(FamilyKind::E4)?;
    sym.extend(
        family(FamilyKind::E2O2Prime, n)?
            .into_iter()
            .map(|p| (p, 1)),
    );
    let mut alt = weighted(FamilyKind::O4)?;
    alt.extend(
        family(FamilyKind::E2PrimeO2, n)?
            .into_iter()
            .map(|p| (p, 1)),
    );
    Ok(prediction(
        Partition::new(vec![k + 1, k - 1])?,
        Decomposition::from_terms(n, sym)?,
        Decomposition::from_terms(n, alt)?,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TwoPartProduct {
    /// `[k+1,k]²`
    OddSquare,
    /// `[k,k]²`
    EvenSquare,
    /// `[k,k][k+1,k−1]`
    Mixed,
}

impl TwoPartProduct {
    pub const ALL: [TwoPartProduct; 3] = [
        TwoPartProduct::OddSquare,
        TwoPartProduct::EvenSquare,
        TwoPartProduct::Mixed,
    ];

    /// The two factors, if `k` is in range.
    pub fn factors(self, k: usize) -> Option<(Partition, Partition)> {
        match self {
            TwoPartProduct::OddSquare => {
                let p = Partition::new(vec![k + 1, k]).ok()?;
                Some((p.clone(), p))
            }
            TwoPartProduct::EvenSquare if k >= 1 => {
                Some((Partition::of(&[k, k]), Partition::of(&[k, k])))
            }
            TwoPartProduct::Mixed if k >= 1 => Some((
                Partition::of(&[k, k]),
                Partition::new(vec![k + 1, k - 1]).ok()?,
            )),
            _ => None,
        }
    }
}

/// The multiplicity-free two-part products.
pub fn two_part_mf_products(k: usize, which: TwoPartProduct) -> Result<Decomposition> {
    let (a, _) = which
        .factors(k)
        .ok_or_else(|| contract(format!("{which:?} undefined at k={k}")))?;
    let n = a.size();
    let members = match which {
        TwoPartProduct::OddSquare => family(FamilyKind::AtMostParts(4), n)?,
        TwoPartProduct::EvenSquare => {
            let mut v = family(FamilyKind::E4, n)?;
            v.extend(family(FamilyKind::O4, n)?);
            v
        }
        TwoPartProduct::Mixed => family(FamilyKind::E2O2, n)?,
    };
    Ok(ones(n, members))
}

/// Hook constituents of `S²[λ]` and `A²[λ]` for `ℓ(λ) = 2`.
pub fn two_part_hooks(lambda: &Partition) -> Result<SquareSplit> {
    if lambda.len() != 2 {
        return Err(contract(format!(
            "{lambda} does not have exactly two parts"
        )));
    }
    let n = lambda.size();
    let m = n as i64;
    let (sym, alt) = if lambda.part(0) == lambda.part(1) {
        (vec![(vec![m], 1)], vec![(vec![m - 3, 1, 1, 1], 1)])
    } else if lambda.part(1) == 1 {
        (
            vec![(vec![m], 1), (vec![m - 1, 1], 1)],
            vec![(vec![m - 2, 1, 1], 1)],
        )
    } else {
        (
            vec![(vec![m], 1), (vec![m - 1, 1], 1)],
            vec![(vec![m - 2, 1, 1], 1), (vec![m - 3, 1, 1, 1], 1)],
        )
    };
    Ok(prediction(lambda.clone(), build(n, &sym), build(n, &alt)))
}

/// `ag(λ,μ)` for `ℓ(λ), ℓ(μ) ≤ 2`, which is always zero.
pub fn two_part_alt_vanishing(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.len() > 2 || mu.len() > 2 || lambda.size() != mu.size() {
        return Err(contract(format!(
            "{lambda}, {mu}: need two equal-size partitions with at most two parts"
        )));
    }
    Ok(0)
}

/// The pairs of width at most 2 with `ag(λ,μ) > 0`.
pub fn width_two_exceptions() -> Vec<(Partition, Partition)> {
    [
        (&[2, 1][..], &[1, 1, 1][..]),
        (&[2, 1, 1], &[2, 1, 1]),
        (&[2, 2], &[1, 1, 1, 1]),
        (&[2, 2, 1], &[2, 1, 1, 1]),
    ]
    .into_iter()
    .map(|(a, b)| (Partition::of(a), Partition::of(b)))
    .collect()
}

/// `sg(λ,(1^n)) − ag(λ,(1^n))` for symmetric `λ`.
pub fn sign_constituent(lambda: &Partition) -> Result<i64> {
    if !lambda.is_symmetric() {
        return Err(contract(format!("{lambda} is not symmetric")));
    }
    let exp = (lambda.size() - lambda.durfee()) / 2;
    Ok(if exp.is_multiple_of(2) { 1 } else { -1 })
}

/// `(sg, ag)` at the constituent `(2,1^{n−2})`.
pub fn neighbour_constituent(lambda: &Partition) -> Result<(i64, i64)> {
    let n = lambda.size();
    if n < 3 {
        return Err(contract(format!("{lambda}: needs n >= 3")));
    }
    let overlap = lambda.self_intersection();
    let d = lambda.durfee();
    if overlap + 1 < n {
        return Ok((0, 0));
    }
    if overlap + 1 == n {
        return Ok(if ((n - 1 - d) / 2).is_multiple_of(2) {
            (1, 0)
        } else {
            (0, 1)
        });
    }
    let r1 = lambda.hook_stats().r1 as i64;
    if r1 % 2 == 1 {
        return Ok(((r1 - 1) / 2, (r1 - 1) / 2));
    }
    let eps = if ((n - d) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    };
    Ok(((r1 - eps).div_euclid(2), (r1 + eps).div_euclid(2)))
}

fn two_rows(lambda: &Partition) -> Result<()> {
    if lambda.len() > 2 {
        return Err(contract(format!("{lambda} has more than two parts")));
    }
    Ok(())
}

/// `Σ_ν K_{ν,shape} [ν]`: the permutation character on row tabloids.
pub fn young_character(shape: &Partition) -> Result<Decomposition> {
    let n = shape.size();
    let mut d = Decomposition::new(n);
    for nu in enumerate(n, None)? {
        let k = kostka(&nu, shape)? as i64;
        if k != 0 {
            d.add_term(nu, k)?;
        }
    }
    Ok(d)
}

fn doubled_two_part(k: usize) -> Vec<Partition> {
    (0..=k / 2)
        .map(|j| Partition::of(&[2 * (k - j), 2 * j]))
        .collect()
}

fn induce(n: usize, left: &Decomposition, right: &Partition) -> Result<Decomposition> {
    let mut out = Decomposition::new(n);
    for pi in enumerate(n, None)? {
        let m: i64 = left
            .iter()
            .map(|(nu, c)| c * lr_coefficient(&pi, nu, right) as i64)
            .sum();
        if m != 0 {
            out.add_term(pi, m)?;
        }
    }
    Ok(out)
}

/// `S²` of the permutation module on tabloids of a shape with at most two rows,
/// expanded as induced products of Young characters with `[2α]`.
pub fn young_square_decomposition(lambda: &Partition) -> Result<Decomposition> {
    two_rows(lambda)?;
    let n = lambda.size();
    let mut total = Decomposition::new(n);
    for k in 0..=lambda.part(1) {
        let base = Partition::new(vec![lambda.part(0) - k, lambda.part(1) - k])?;
        let young = young_character(&base)?;
        for alpha2 in doubled_two_part(k) {
            total = total.plus(&induce(n, &young, &alpha2)?)?;
        }
    }
    Ok(total)
}

/// `S²` of the same permutation character computed from class-function values.
pub fn young_square_from_characters(lambda: &Partition) -> Result<Decomposition> {
    two_rows(lambda)?;
    let pi = synthesize(&young_character(lambda)?)?;
    let (sym, _) = sym_alt_parts(&pi)?;
    decompose(&sym)
}

/// The quotient `S²(M^{(d,d)}) / S²(M^{(d+1,d−1)})` as a sum of induced products.
pub fn young_square_quotient(d: usize) -> Result<Decomposition> {
    if d == 0 {
        return Err(contract("quotient needs d >= 1"));
    }
    let n = 2 * d;
    let mut total = Decomposition::new(n);
    for k in 0..=d {
        let specht = Partition::new(vec![d - k, d - k])?;
        let single = Decomposition::from_terms(specht.size(), [(specht, 1)])?;
        for alpha2 in doubled_two_part(k) {
            total = total.plus(&induce(n, &single, &alpha2)?)?;
        }
    }
    Ok(total)
}

/// `C_k = binom(2k,k)/(k+1)`.
pub fn catalan_number(k: usize) -> BigUint {
    let mut c = BigUint::one();
    for i in 0..k {
        c = c * BigUint::from(2 * (2 * i + 1)) / BigUint::from(i + 2);
    }
    c
}

/// Signed degrees: `+f(α)` over the all-even family, then `−f(α)` over the all-odd one.
pub fn catalan_terms(k: usize) -> Result<Vec<BigInt>> {
    let n = 2 * k;
    let mut terms: Vec<BigInt> = family(FamilyKind::E4, n)?
        .iter()
        .map(|a| BigInt::from(degree(a)))
        .collect();
    terms.extend(
        family(FamilyKind::O4, n)?
            .iter()
            .map(|a| -BigInt::from(degree(a))),
    );
    Ok(terms)
}

pub fn catalan_check(k: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(contract("catalan check needs k >= 1"));
    }
    Ok(catalan_terms(k)?.into_iter().sum())
}

/// Sweep range for [`verify`]. `None` means the formula's default.
#[derive(Debug, Clone, Copy, Default)]
pub struct Range {
    pub max: Option<usize>,
    pub only: Option<usize>,
}

impl Range {
    fn values(&self, lo: usize, default_max: usize) -> Vec<usize> {
        match self.only {
            Some(v) => vec![v],
            None => (lo..=self.max.unwrap_or(default_max)).collect(),
        }
    }
}

fn compare_full(
    id: FormulaId,
    instance: String,
    predicted: &SquareSplit,
) -> Result<VerificationReport> {
    compare_on(id, instance, predicted, |_| true)
}

fn compare_on(
    id: FormulaId,
    instance: String,
    predicted: &SquareSplit,
    support: impl Fn(&Partition) -> bool + Copy,
) -> Result<VerificationReport> {
    let oracle = square_split(&predicted.lambda)?;
    let mut b = DiffBuilder::new();
    b.compare("sym", &predicted.sym, &oracle.sym, support);
    b.compare("alt", &predicted.alt, &oracle.alt, support);
    Ok(b.finish(id.name(), instance))
}

fn lambda_instance(lambda: &Partition) -> String {
    format!("lambda={lambda}")
}

fn par_reports<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Result<Vec<VerificationReport>> + Sync + Send,
) -> Result<Vec<VerificationReport>> {
    let nested = items.par_iter().map(f).collect::<Result<Vec<_>>>()?;
    Ok(nested.into_iter().flatten().collect())
}

fn partitions_upto(
    lo: usize,
    ns: &[usize],
    keep: impl Fn(&Partition) -> bool,
) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for &n in ns.iter().filter(|&&n| n >= lo) {
        out.extend(enumerate(n, None)?.into_iter().filter(|p| keep(p)));
    }
    Ok(out)
}

/// Runs the predictor-versus-oracle sweep for `id`.
pub fn verify(id: FormulaId, range: Range) -> Result<Vec<VerificationReport>> {
    let max = id.default_max();
    match id {
        FormulaId::MwHooks => {
            let hooks = partitions_upto(1, &range.values(1, max), Partition::is_hook)?;
            par_reports(&hooks, |lambda| {
                let n = lambda.size();
                Ok(vec![compare_full(
                    id,
                    lambda_instance(lambda),
                    &mw_hook_split(n, lambda.len() - 1)?,
                )?])
            })
        }
        FormulaId::SmallDepthCoeffs => {
            let lambdas = partitions_upto(2, &range.values(2, max), |p| !p.is_linear())?;
            par_reports(&lambdas, |lambda| {
                let square = square_split(lambda)?.square();
                let mut b = DiffBuilder::new();
                for (name, nu, v) in small_depth_coeffs(lambda)?.labelled(lambda.size()) {
                    b.check(format!("{name}:{nu}"), v, square.get(&nu));
                }
                Ok(vec![b.finish(id.name(), lambda_instance(lambda))])
            })
        }
        FormulaId::SmallDepthSplit => {
            let lambdas = partitions_upto(4, &range.values(4, max), |p| !p.is_linear())?;
            par_reports(&lambdas, |lambda| {
                let n = lambda.size();
                let s = small_depth_split(lambda)?;
                let oracle = square_split(lambda)?;
                let one = Partition::of(&[n - 1, 1]);
                let two = Partition::of(&[n - 2, 2]);
                let leg = Partition::of(&[n - 2, 1, 1]);
                let mut b = DiffBuilder::new();
                b.check(format!("sym:{one}"), s.a1s, oracle.sym.get(&one));
                b.check(format!("alt:{one}"), s.a1a, oracle.alt.get(&one));
                b.check(format!("sym:{two}"), s.a2s, oracle.sym.get(&two));
                b.check(format!("alt:{two}"), s.a2a, oracle.alt.get(&two));
                b.check(format!("sym:{leg}"), s.b2s, oracle.sym.get(&leg));
                b.check(format!("alt:{leg}"), s.b2a, oracle.alt.get(&leg));
                Ok(vec![b.finish(id.name(), lambda_instance(lambda))])
            })
        }
        FormulaId::MmDepth2 => {
            let cases: Vec<(usize, MmShape)> = range
                .values(3, max)
                .into_iter()
                .flat_map(|n| {
                    MmShape::ALL
                        .into_iter()
                        .filter(move |s| n >= s.min_n())
                        .map(move |s| (n, s))
                })
                .collect();
            par_reports(&cases, |&(n, s)| {
                let p = mm_depth2_squares(n, s)?;
                Ok(vec![compare_full(id, lambda_instance(&p.lambda), &p)?])
            })
        }
        FormulaId::Depth3N33 => par_reports(&range.values(6, max), |&n| {
            let p = depth3_square(n)?;
            Ok(vec![compare_full(id, lambda_instance(&p.lambda), &p)?])
        }),
        FormulaId::RectangleDepth3 => {
            let sides = range.values(3, max);
            let pairs: Vec<(usize, usize)> = sides
                .iter()
                .flat_map(|&a| sides.iter().map(move |&b| (a, b)))
                .collect();
            par_reports(&pairs, |&(a, b)| {
                let p = rectangle_depth3(a, b)?;
                let n = p.lambda.size();
                Ok(vec![compare_on(
                    id,
                    lambda_instance(&p.lambda),
                    &p,
                    |nu| n - nu.first() <= 3,
                )?])
            })
        }
        FormulaId::KkSplit => par_reports(&range.values(1, max), |&k| {
            Ok(vec![compare_full(id, format!("k={k}"), &kk_split(k)?)?])
        }),
        FormulaId::K1kSplit => par_reports(&range.values(0, max), |&k| {
            Ok(vec![compare_full(id, format!("k={k}"), &k1k_split(k)?)?])
        }),
        FormulaId::K1km1Split => par_reports(&range.values(1, max), |&k| {
            Ok(vec![compare_full(id, format!("k={k}"), &k1km1_split(k)?)?])
        }),
        FormulaId::TwoPartMf => {
            let cases: Vec<(usize, TwoPartProduct)> = range
                .values(0, max)
                .into_iter()
                .flat_map(|k| {
                    TwoPartProduct::ALL
                        .into_iter()
                        .filter(move |w| w.factors(k).is_some())
                        .map(move |w| (k, w))
                })
                .collect();
            par_reports(&cases, |&(k, which)| {
                let (a, b) = which.factors(k).expect("filtered");
                let oracle = crate::kronecker::kronecker_product(&a, &b)?;
                let mut d = DiffBuilder::new();
                d.compare("product", &two_part_mf_products(k, which)?, &oracle, |_| {
                    true
                });
                Ok(vec![d.finish(id.name(), format!("{which:?} k={k}"))])
            })
        }
        FormulaId::TwoPartHooks => {
            let lambdas = partitions_upto(2, &range.values(2, max), |p| p.len() == 2)?;
            par_reports(&lambdas, |lambda| {
                Ok(vec![compare_on(
                    id,
                    lambda_instance(lambda),
                    &two_part_hooks(lambda)?,
                    Partition::is_hook,
                )?])
            })
        }
        FormulaId::TwoPartA2Zero => {
            let ns = range.values(1, max);
            par_reports(&ns, |&n| {
                let mut reports = Vec::new();
                let two_row = enumerate(n, Some(2))?;
                for lambda in &two_row {
                    let oracle = square_split(lambda)?;
                    let mut b = DiffBuilder::new();
                    for mu in &two_row {
                        b.check(
                            format!("alt:{mu}"),
                            two_part_alt_vanishing(lambda, mu)?,
                            oracle.alt.get(mu),
                        );
                    }
                    reports.push(b.finish(id.name(), lambda_instance(lambda)));
                }
                let narrow: Vec<Partition> = enumerate(n, None)?
                    .into_iter()
                    .filter(|p| p.first() <= 2)
                    .collect();
                let exceptions = width_two_exceptions();
                for lambda in &narrow {
                    let oracle = square_split(lambda)?;
                    let mut b = DiffBuilder::new();
                    for mu in &narrow {
                        let predicted =
                            i64::from(exceptions.contains(&(lambda.clone(), mu.clone())));
                        b.check(
                            format!("alt>0:{mu}"),
                            predicted,
                            i64::from(oracle.alt.get(mu) > 0),
                        );
                    }
                    reports
                        .push(b.finish(id.name(), format!("width2 {}", lambda_instance(lambda))));
                }
                Ok(reports)
            })
        }
        FormulaId::SignGip => {
            let lambdas = partitions_upto(1, &range.values(1, max), Partition::is_symmetric)?;
            par_reports(&lambdas, |lambda| {
                let oracle = square_split(lambda)?;
                let sign = Partition::column(lambda.size());
                let mut b = DiffBuilder::new();
                b.check(
                    format!("sym-alt:{sign}"),
                    sign_constituent(lambda)?,
                    oracle.sym.get(&sign) - oracle.alt.get(&sign),
                );
                Ok(vec![b.finish(id.name(), lambda_instance(lambda))])
            })
        }
        FormulaId::Neighbour => {
            let lambdas = partitions_upto(3, &range.values(3, max), |_| true)?;
            par_reports(&lambdas, |lambda| {
                let n = lambda.size();
                let nb = Partition::hook(n, n - 2).expect("n >= 3");
                let (s, a) = neighbour_constituent(lambda)?;
                let oracle = square_split(lambda)?;
                let mut b = DiffBuilder::new();
                b.check(format!("sym:{nb}"), s, oracle.sym.get(&nb));
                b.check(format!("alt:{nb}"), a, oracle.alt.get(&nb));
                Ok(vec![b.finish(id.name(), lambda_instance(lambda))])
            })
        }
        FormulaId::YoungSquare => {
            let ns = range.values(1, max);
            let lambdas = partitions_upto(1, &ns, |p| p.len() <= 2)?;
            let mut reports = par_reports(&lambdas, |lambda| {
                let mut b = DiffBuilder::new();
                b.compare(
                    "S2M",
                    &young_square_decomposition(lambda)?,
                    &young_square_from_characters(lambda)?,
                    |_| true,
                );
                Ok(vec![b.finish(id.name(), lambda_instance(lambda))])
            })?;
            let ds: Vec<usize> = (1..=ns.iter().max().copied().unwrap_or(0) / 2)
                .filter(|d| ns.contains(&(2 * d)))
                .collect();
            reports.extend(par_reports(&ds, |&d| {
                let mut b = DiffBuilder::new();
                let expected = young_square_from_characters(&Partition::of(&[d, d]))?.minus(
                    &young_square_from_characters(&Partition::new(vec![d + 1, d - 1])?)?,
                )?;
                b.compare("quotient", &young_square_quotient(d)?, &expected, |_| true);
                let split = square_split(&Partition::of(&[d, d]))?;
                for mu in family(FamilyKind::O4, 2 * d)? {
                    b.check(format!("sym:{mu}"), 0, split.sym.get(&mu));
                }
                Ok(vec![b.finish(id.name(), format!("d={d}"))])
            })?);
            Ok(reports)
        }
        FormulaId::Catalan => par_reports(&range.values(1, max), |&k| {
            let mut b = DiffBuilder::new();
            let value = catalan_check(k)?;
            let expected = BigInt::from(catalan_number(k));
            let degree_kk = BigInt::from(degree(&Partition::of(&[k, k])));
            let as_i64 = |x: &BigInt| i64::try_from(x).unwrap_or(i64::MAX);
            b.check("C_k", as_i64(&value), as_i64(&expected));
            b.check("f(k,k)", as_i64(&degree_kk), as_i64(&expected));
            Ok(vec![b.finish(id.name(), format!("k={k} C_k={expected}"))])
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    fn dec(n: usize, terms: &[(&[usize], i64)]) -> Decomposition {
        Decomposition::from_terms(n, terms.iter().map(|(q, m)| (p(q), *m))).unwrap()
    }

    #[test]
    fn formula_ids_round_trip() {
        for id in FormulaId::ALL {
            assert_eq!(id.name().parse::<FormulaId>().unwrap(), id);
            assert_eq!(
                serde_json::to_string(&id).unwrap(),
                format!("\"{}\"", id.name())
            );
        }
        assert!("NOPE".parse::<FormulaId>().is_err());
    }

    #[test]
    fn mw_examples() {
        let s = mw_hook_split(5, 1).unwrap();
        assert_eq!(s.alt.get(&p(&[3, 1, 1])), 1);
        assert_eq!(mw_hook_split(4, 1).unwrap().sym.get(&p(&[4])), 1);
    }

    #[test]
    fn small_depth_examples() {
        let c = small_depth_coeffs(&p(&[3, 2, 2])).unwrap();
        assert_eq!((c.a1, c.a2), (Some(1), Some(2)));
        assert_eq!(small_depth_coeffs(&p(&[5, 1])).unwrap().a1, Some(1));
        assert_eq!(small_depth_coeffs(&p(&[3, 3, 3])).unwrap().a1, Some(0));
        assert!(small_depth_coeffs(&p(&[4])).is_err());
        let s = small_depth_split(&p(&[3, 2, 2])).unwrap();
        assert_eq!((s.b2a, s.b2s), (1, 0));
        let r = small_depth_split(&p(&[4, 4])).unwrap();
        assert_eq!((r.b2s, r.b2a), (0, 0));
    }

    #[test]
    fn mm_examples() {
        assert_eq!(
            mm_depth2_squares(3, MmShape::OneBox).unwrap().alt,
            dec(3, &[(&[1, 1, 1], 1)])
        );
        assert_eq!(
            mm_depth2_squares(5, MmShape::TwoLeg)
                .unwrap()
                .sym
                .get(&p(&[3, 2])),
            2
        );
        assert!(mm_depth2_squares(4, MmShape::TwoLeg).is_err());
    }

    #[test]
    fn depth3_examples() {
        assert_eq!(
            depth3_square(6).unwrap().sym,
            dec(6, &[(&[6], 1), (&[4, 2], 1), (&[2, 2, 2], 1)])
        );
        assert_eq!(depth3_square(8).unwrap().sym.get(&p(&[5, 3])), 1);
    }

    #[test]
    fn rectangle_examples() {
        let r = rectangle_depth3(3, 3).unwrap();
        assert_eq!(r.sym, dec(9, &[(&[9], 1), (&[7, 2], 1), (&[6, 3], 1)]));
        assert_eq!(r.alt, dec(9, &[(&[6, 1, 1, 1], 1)]));
    }

    #[test]
    fn two_part_family_examples() {
        let kk = kk_split(2).unwrap();
        assert_eq!(kk.sym, dec(4, &[(&[4], 1), (&[2, 2], 1)]));
        assert_eq!(kk.alt, dec(4, &[(&[1, 1, 1, 1], 1)]));
        assert_eq!(kk_split(3).unwrap().alt, dec(6, &[(&[3, 1, 1, 1], 1)]));

        let k1k = k1k_split(1).unwrap();
        assert_eq!(k1k.sym, dec(3, &[(&[3], 1), (&[2, 1], 1)]));
        assert_eq!(k1k.alt, dec(3, &[(&[1, 1, 1], 1)]));
        assert_eq!(
            k1k_split(2).unwrap().alt,
            dec(5, &[(&[3, 1, 1], 1), (&[2, 1, 1, 1], 1)])
        );

        let m = k1km1_split(2).unwrap();
        assert_eq!(m.sym, dec(4, &[(&[4], 1), (&[3, 1], 1), (&[2, 2], 1)]));
        assert_eq!(m.alt, dec(4, &[(&[2, 1, 1], 1)]));

        assert_eq!(
            two_part_mf_products(1, TwoPartProduct::OddSquare).unwrap(),
            dec(3, &[(&[3], 1), (&[2, 1], 1), (&[1, 1, 1], 1)])
        );
        assert_eq!(
            two_part_mf_products(2, TwoPartProduct::EvenSquare).unwrap(),
            dec(4, &[(&[4], 1), (&[2, 2], 1), (&[1, 1, 1, 1], 1)])
        );
    }

    #[test]
    fn two_part_hook_examples() {
        assert_eq!(
            two_part_hooks(&p(&[3, 3]))
                .unwrap()
                .alt
                .get(&p(&[3, 1, 1, 1])),
            1
        );
        assert_eq!(
            two_part_hooks(&p(&[4, 1])).unwrap().alt.get(&p(&[3, 1, 1])),
            1
        );
        let h = two_part_hooks(&p(&[4, 2])).unwrap();
        assert_eq!(h.sym, dec(6, &[(&[6], 1), (&[5, 1], 1)]));
        assert_eq!(h.alt, dec(6, &[(&[4, 1, 1], 1), (&[3, 1, 1, 1], 1)]));
        assert_eq!(two_part_alt_vanishing(&p(&[3, 3]), &p(&[4, 2])).unwrap(), 0);
        assert!(two_part_alt_vanishing(&p(&[2, 1, 1]), &p(&[4])).is_err());
    }

    #[test]
    fn sign_examples() {
        assert_eq!(sign_constituent(&p(&[2, 2])).unwrap(), -1);
        assert_eq!(sign_constituent(&Partition::staircase(3)).unwrap(), 1);
        assert_eq!(sign_constituent(&Partition::staircase(6)).unwrap(), -1);
        assert!(sign_constituent(&p(&[3, 1])).is_err());
    }

    #[test]
    fn neighbour_examples() {
        assert_eq!(neighbour_constituent(&p(&[3, 2, 1])).unwrap(), (1, 1));
        assert_eq!(neighbour_constituent(&p(&[2, 2])).unwrap(), (0, 0));
        assert_eq!(neighbour_constituent(&p(&[4, 1])).unwrap(), (0, 0));
    }

    #[test]
    fn young_square_small() {
        let two = dec(2, &[(&[2], 2), (&[1, 1], 1)]);
        assert_eq!(young_square_decomposition(&p(&[1, 1])).unwrap(), two);
        assert_eq!(young_square_from_characters(&p(&[1, 1])).unwrap(), two);
    }

    #[test]
    fn catalan_examples() {
        let small = |k| {
            catalan_terms(k)
                .unwrap()
                .iter()
                .map(|t| i64::try_from(t).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(small(2), vec![1, 2, -1]);
        assert_eq!(small(3), vec![1, 9, 5, -10]);
        assert_eq!(small(4), vec![1, 20, 14, 56, 14, -35, -56]);
        assert_eq!(catalan_check(8).unwrap(), BigInt::from(1430));
        assert_eq!(catalan_number(8), BigUint::from(1430u32));
    }
}
