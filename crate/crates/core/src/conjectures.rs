//! Scans over all `λ ⊢ n` for homogeneous and multiplicity-free halves of
//! `[λ]²`, and consistency checks for the refined Saxl and HSTZ conjectures.
//!
//! A counterexample is reported, never raised: the scans return
//! [`ClaimReport`]s with status `COUNTEREXAMPLE` and the offending shapes.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::Decomposition;
use crate::error::{contract, Error, Result};
use crate::kronecker::{square_split, SquareSplit};
use crate::partitions::{enumerate, Partition};
use crate::report::ClaimReport;

/// The earlier of `λ` and `λ^t` in canonical order.
pub fn representative(lambda: &Partition) -> Partition {
    let t = lambda.conjugate();
    if t < *lambda {
        t
    } else {
        lambda.clone()
    }
}

fn shape(parts: &[i64]) -> Option<Partition> {
    if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Partition::new(parts.iter().map(|&p| p as usize).collect::<Vec<_>>()).ok()
}

/// Sorted, deduplicated representatives of the valid shapes among `candidates`.
fn reps(candidates: &[Vec<i64>]) -> Vec<Partition> {
    let mut out: Vec<Partition> = candidates
        .iter()
        .filter_map(|c| shape(c))
        .map(|p| representative(&p))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn all_splits(n: usize) -> Result<Vec<(Partition, std::sync::Arc<SquareSplit>)>> {
    enumerate(n, None)?
        .into_par_iter()
        .map(|lambda| {
            let s = square_split(&lambda)?;
            Ok((lambda, s))
        })
        .collect()
}

fn set_diff_witnesses(label: &str, found: &[Partition], expected: &[Partition]) -> Vec<String> {
    let mut w: Vec<String> = found
        .iter()
        .filter(|p| !expected.contains(p))
        .map(|p| format!("{label}:unexpected:{p}"))
        .collect();
    w.extend(
        expected
            .iter()
            .filter(|p| !found.contains(p))
            .map(|p| format!("{label}:missing:{p}")),
    );
    w
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Half {
    S,
    A,
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Half::S => "S",
            Half::A => "A",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneousEntry {
    pub lambda: Partition,
    pub conjugate_distinct: bool,
    pub part: Half,
    pub decomposition: Decomposition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneousScan {
    pub n: usize,
    pub entries: Vec<HomogeneousEntry>,
    pub report: ClaimReport,
}

/// Every `λ` (up to conjugation) whose `S²` or `A²` is zero or has a single constituent type.
pub fn homogeneous_scan(n: usize) -> Result<HomogeneousScan> {
    let mut entries = Vec::new();
    for (lambda, split) in all_splits(n)? {
        if representative(&lambda) != lambda {
            continue;
        }
        let distinct = lambda.conjugate() != lambda;
        for (part, d) in [(Half::S, &split.sym), (Half::A, &split.alt)] {
            if d.is_homogeneous() {
                entries.push(HomogeneousEntry {
                    lambda: lambda.clone(),
                    conjugate_distinct: distinct,
                    part,
                    decomposition: d.clone(),
                });
            }
        }
    }
    let m = n as i64;
    let mut expected: Vec<(Partition, Half)> = Vec::new();
    expected.extend(reps(&[vec![m]]).into_iter().map(|p| (p, Half::S)));
    expected.extend(
        reps(&[vec![m], vec![m - 1, 1], vec![2, 2], vec![3, 3]])
            .into_iter()
            .filter(|p| p.size() == n)
            .map(|p| (p, Half::A)),
    );
    expected.sort();
    let mut found: Vec<(Partition, Half)> =
        entries.iter().map(|e| (e.lambda.clone(), e.part)).collect();
    found.sort();
    let mut witnesses: Vec<String> = found
        .iter()
        .filter(|x| !expected.contains(x))
        .map(|(p, h)| format!("unexpected:{h}:{p}"))
        .collect();
    witnesses.extend(
        expected
            .iter()
            .filter(|x| !found.contains(x))
            .map(|(p, h)| format!("missing:{h}:{p}")),
    );
    Ok(HomogeneousScan {
        n,
        entries,
        report: ClaimReport::new(n, "HOMOGENEOUS", witnesses),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MfScan {
    pub n: usize,
    pub both_mf: Vec<Partition>,
    pub sym_mf: Vec<Partition>,
    pub alt_mf: Vec<Partition>,
    pub square_mf: Vec<Partition>,
    pub reports: Vec<ClaimReport>,
}

/// Representatives of the shapes with multiplicity-free `S²`, `A²` (zero allowed), both, and `[λ]²`.
pub fn multiplicity_free_scan(n: usize) -> Result<MfScan> {
    let (mut both, mut sym, mut alt, mut square) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for (lambda, split) in all_splits(n)? {
        if representative(&lambda) != lambda {
            continue;
        }
        let s = split.sym.is_multiplicity_free();
        let a = split.alt.is_multiplicity_free();
        if s {
            sym.push(lambda.clone());
        }
        if a {
            alt.push(lambda.clone());
        }
        if s && a {
            both.push(lambda.clone());
        }
        if split.square().is_multiplicity_free() {
            square.push(lambda);
        }
    }
    let m = n as i64;
    let (hi, lo) = (m - m / 2, m / 2);
    let base = vec![vec![m], vec![m - 1, 1], vec![hi, lo]];
    let base_reps = reps(&base);
    let mut alt_list = base.clone();
    alt_list.extend([vec![m - 2, 2], vec![m - 2, 1, 1]]);
    if n == 8 {
        alt_list.push(vec![5, 3]);
    }
    if n == 9 {
        alt_list.push(vec![3, 3, 3]);
    }
    let alt_reps = reps(&alt_list);
    let reports = vec![
        ClaimReport::new(n, "MF_BOTH", set_diff_witnesses("both", &both, &base_reps)),
        ClaimReport::new(
            n,
            "MF_SQUARE",
            set_diff_witnesses("square", &square, &base_reps),
        ),
        ClaimReport::new(
            n,
            "MF_SYM_LIST",
            set_diff_witnesses("sym", &sym, &base_reps),
        ),
        ClaimReport::new(n, "MF_ALT_LIST", set_diff_witnesses("alt", &alt, &alt_reps)),
    ];
    Ok(MfScan {
        n,
        both_mf: both,
        sym_mf: sym,
        alt_mf: alt,
        square_mf: square,
        reports,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaxlCheck {
    pub k: usize,
    pub n: usize,
    pub sym_missing: Vec<Partition>,
    pub alt_missing: Vec<Partition>,
    pub classic_missing: Vec<Partition>,
    pub reports: Vec<ClaimReport>,
}

fn missing(n: usize, d: &Decomposition) -> Result<Vec<Partition>> {
    Ok(enumerate(n, None)?
        .into_iter()
        .filter(|p| d.get(p) == 0)
        .collect())
}

/// Constituents absent from `S²[ρ_k]`, `A²[ρ_k]` and `[ρ_k]²`, compared with the refined prediction.
pub fn saxl_refined_check(k: usize) -> Result<SaxlCheck> {
    if k == 0 {
        return Err(contract("staircase needs k >= 1"));
    }
    let rho = Partition::staircase(k);
    let n = rho.size();
    let split = square_split(&rho)?;
    let sym_missing = missing(n, &split.sym)?;
    let alt_missing = missing(n, &split.alt)?;
    let classic_missing = missing(n, &split.square())?;

    let m = n as i64;
    let sign = Partition::column(n);
    let mut sym_expected = Vec::new();
    if k % 4 == 2 {
        sym_expected.push(sign.clone());
    }
    let mut alt_expected: Vec<Partition> = [vec![m], vec![m - 1, 1], vec![m - 2, 2]]
        .iter()
        .filter_map(|c| shape(c))
        .collect();
    if k % 4 != 2 {
        alt_expected.push(sign);
    }
    if k == 3 {
        alt_expected.push(Partition::of(&[2, 2, 2]));
    }
    sym_expected.sort();
    sym_expected.dedup();
    alt_expected.sort();
    alt_expected.dedup();

    let mut witnesses = set_diff_witnesses("sym", &sym_missing, &sym_expected);
    witnesses.extend(set_diff_witnesses("alt", &alt_missing, &alt_expected));
    let classic: Vec<String> = classic_missing
        .iter()
        .map(|p| format!("square:missing:{p}"))
        .collect();
    Ok(SaxlCheck {
        k,
        n,
        sym_missing,
        alt_missing,
        classic_missing,
        reports: vec![
            ClaimReport::new(k, "SAXL_REFINED", witnesses),
            ClaimReport::new(k, "SAXL", classic),
        ],
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HstzScan {
    pub n: usize,
    pub sym_optimal: Vec<Partition>,
    /// `A²` misses exactly `[n]`, `[n−1,1]`, `[n−2,2]`.
    pub alt_optimal_strict: Vec<Partition>,
    /// As strict, or additionally missing `[1^n]`.
    pub alt_optimal: Vec<Partition>,
    pub doubly_optimal_symmetric: Vec<Partition>,
    pub reports: Vec<ClaimReport>,
}

pub fn hstz_refined_scan(n: usize) -> Result<HstzScan> {
    let m = n as i64;
    let sign = Partition::column(n);
    let mut core_missing: Vec<Partition> = [vec![m], vec![m - 1, 1], vec![m - 2, 2]]
        .iter()
        .filter_map(|c| shape(c))
        .collect();
    core_missing.sort();
    let mut with_sign = core_missing.clone();
    with_sign.push(sign.clone());
    with_sign.sort();
    with_sign.dedup();

    let (mut sym_opt, mut strict, mut lenient, mut doubly) =
        (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    let mut incomplete_alt_optimal = Vec::new();
    for (lambda, split) in all_splits(n)? {
        let sym_miss = missing(n, &split.sym)?;
        let alt_miss = missing(n, &split.alt)?;
        let s_ok = sym_miss.is_empty() || sym_miss == [sign.clone()];
        let strict_ok = alt_miss == core_missing;
        let lenient_ok = strict_ok || alt_miss == with_sign;
        if s_ok {
            sym_opt.push(lambda.clone());
        }
        if strict_ok {
            strict.push(lambda.clone());
        }
        if lenient_ok {
            lenient.push(lambda.clone());
            if lambda.is_symmetric() && !missing(n, &split.square())?.is_empty() {
                incomplete_alt_optimal.push(format!("square:incomplete:{lambda}"));
            }
        }
        if lambda.is_symmetric() && s_ok && lenient_ok {
            doubly.push(lambda);
        }
    }
    let mut reports = Vec::new();
    if n >= 10 {
        let need = |label: &str, v: &Vec<Partition>| {
            if v.is_empty() {
                vec![format!("{label}:none")]
            } else {
                vec![]
            }
        };
        reports.push(ClaimReport::new(
            n,
            "HSTZ_SYM",
            need("sym_optimal", &sym_opt),
        ));
        reports.push(ClaimReport::new(
            n,
            "HSTZ_ALT",
            need("alt_optimal", &lenient),
        ));
        reports.push(ClaimReport::new(
            n,
            "HSTZ_DOUBLY",
            need("doubly_optimal_symmetric", &doubly),
        ));
        reports.push(ClaimReport::new(
            n,
            "HSTZ_ALT_IMPLIES_SQUARE",
            incomplete_alt_optimal,
        ));
    }
    Ok(HstzScan {
        n,
        sym_optimal: sym_opt,
        alt_optimal_strict: strict,
        alt_optimal: lenient,
        doubly_optimal_symmetric: doubly,
        reports,
    })
}

/// Scans the harness can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ScanId {
    Homogeneous,
    MfScan,
    SaxlRefined,
    HstzRefined,
}

impl ScanId {
    pub const ALL: [ScanId; 4] = [
        ScanId::Homogeneous,
        ScanId::MfScan,
        ScanId::SaxlRefined,
        ScanId::HstzRefined,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScanId::Homogeneous => "HOMOGENEOUS",
            ScanId::MfScan => "MF_SCAN",
            ScanId::SaxlRefined => "SAXL_REFINED",
            ScanId::HstzRefined => "HSTZ_REFINED",
        }
    }

    pub fn indexed_by_k(self) -> bool {
        self == ScanId::SaxlRefined
    }

    /// Default range `lo..=hi` of `n` (or `k`).
    pub fn default_range(self) -> (usize, usize) {
        match self {
            ScanId::Homogeneous | ScanId::MfScan => (1, 10),
            ScanId::SaxlRefined => (1, 4),
            ScanId::HstzRefined => (12, 12),
        }
    }
}

impl fmt::Display for ScanId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScanId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        ScanId::ALL
            .into_iter()
            .find(|c| c.name() == wanted)
            .ok_or_else(|| contract(format!("unknown scan {s:?}")))
    }
}

/// Runs a scan at one `n` (or `k`) and returns its claim reports.
pub fn run_scan(id: ScanId, at: usize) -> Result<Vec<ClaimReport>> {
    Ok(match id {
        ScanId::Homogeneous => vec![homogeneous_scan(at)?.report],
        ScanId::MfScan => multiplicity_free_scan(at)?.reports,
        ScanId::SaxlRefined => saxl_refined_check(at)?.reports,
        ScanId::HstzRefined => hstz_refined_scan(at)?.reports,
    })
}
