//! 2-blocks of `S_n` and the linear relations between `S²` and `A²` that
//! follow from pairing `[λ]^{(2)} = χ_S − χ_A` with class functions vanishing
//! on 2-singular classes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{
    character, chi_power, degree, global, inner_product, theta_class, ClassFunction,
};
use crate::error::{contract, Error, Result};
use crate::kronecker::{ag, sg, square_split};
use crate::partitions::{enumerate, Partition};
use crate::report::{DiffBuilder, VerificationReport};

/// A 2-block, identified by its 2-core (a staircase) and weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockId {
    pub core: Partition,
    pub weight: usize,
}

impl BlockId {
    pub fn n(&self) -> usize {
        self.core.size() + 2 * self.weight
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "core={} w={}", self.core, self.weight)
    }
}

pub fn block_of(lambda: &Partition) -> BlockId {
    let (core, weight) = lambda.p_core_and_weight(2);
    BlockId { core, weight }
}

/// All 2-blocks of `S_n`, by increasing core.
pub fn blocks(n: usize) -> Vec<BlockId> {
    (0..)
        .map(|m| (m, m * (m + 1) / 2))
        .take_while(|&(_, size)| size <= n)
        .filter(|&(_, size)| (n - size).is_multiple_of(2))
        .map(|(m, size)| BlockId {
            core: Partition::staircase(m),
            weight: (n - size) / 2,
        })
        .collect()
}

pub fn block_members(block: &BlockId) -> Result<Vec<Partition>> {
    Ok(enumerate(block.n(), None)?
        .into_iter()
        .filter(|p| p.p_core_and_weight(2).0 == block.core)
        .collect())
}

/// `Σ_{μ in B} (sg(λ,μ) − ag(λ,μ)) f(μ)`.
pub fn weighted_block_sum(lambda: &Partition, block: &BlockId) -> Result<BigInt> {
    if block.n() != lambda.size() {
        return Err(contract(format!(
            "block {block} is not a block of S_{}",
            lambda.size()
        )));
    }
    let split = square_split(lambda)?;
    let mut total = BigInt::zero();
    for mu in block_members(block)? {
        let diff = split.sym.get(&mu) - split.alt.get(&mu);
        if diff != 0 {
            total += BigInt::from(diff) * BigInt::from(degree(&mu));
        }
    }
    Ok(total)
}

/// `f(λ)` if `λ` lies in `block`, else 0.
pub fn weighted_block_sum_expected(lambda: &Partition, block: &BlockId) -> BigInt {
    if &block_of(lambda) == block {
        BigInt::from(degree(lambda))
    } else {
        BigInt::zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseConstraint {
    pub sg: i64,
    pub ag: i64,
    pub difference: i64,
}

/// `sg(λ,ρ_k)`, `ag(λ,ρ_k)` and their difference.
pub fn staircase_constraint(lambda: &Partition, k: usize) -> Result<StaircaseConstraint> {
    let rho = Partition::staircase(k);
    let (s, a) = (sg(lambda, &rho)?, ag(lambda, &rho)?);
    Ok(StaircaseConstraint {
        sg: s,
        ag: a,
        difference: s - a,
    })
}

/// Cycle type with odd order: every part odd.
pub fn is_two_regular(alpha: &Partition) -> bool {
    let by_parts = alpha.parts().iter().all(|p| p % 2 == 1);
    debug_assert_eq!(
        by_parts,
        alpha.parts().iter().fold(1usize, |l, &p| l.lcm(&p)) % 2 == 1
    );
    by_parts
}

/// `Σ_k [n−k,1^k]`.
pub fn chi_hook(n: usize) -> Result<ClassFunction> {
    let mut total = ClassFunction::zero(n)?;
    for k in 0..n {
        total = total.add(&character(&Partition::hook(n, k).expect("k < n"))?)?;
    }
    Ok(total)
}

/// Closed value of `χ_hook` on the class `α`.
pub fn chi_hook_value(alpha: &Partition) -> i128 {
    if alpha.size() == 0 {
        return 0;
    }
    if is_two_regular(alpha) {
        1i128 << (alpha.len() - 1)
    } else {
        0
    }
}

/// `ϑ_n`: `n` on `n`-cycles, zero elsewhere.
pub fn theta_n(n: usize) -> Result<ClassFunction> {
    theta_class(&Partition::row(n))
}

/// `Φ_n = (χ_hook + ϑ_n)/2`, the sum of the even-leg hooks.
pub fn phi_n(n: usize) -> Result<ClassFunction> {
    chi_hook(n)?.add(&theta_n(n)?)?.div_exact(2)
}

fn hook_sums(lambda: &Partition, keep_leg: impl Fn(usize) -> bool) -> Result<(i64, i64)> {
    let n = lambda.size();
    let split = square_split(lambda)?;
    let (mut s, mut a) = (0, 0);
    for leg in (0..n).filter(|&l| keep_leg(l)) {
        let hook = Partition::hook(n, leg).expect("leg < n");
        s += split.sym.get(&hook);
        a += split.alt.get(&hook);
    }
    Ok((s, a))
}

/// `Σ_m sg(λ,(n−m,1^m)) − Σ_m ag(λ,(n−m,1^m))`.
pub fn hook_sum_constraint(lambda: &Partition) -> Result<i64> {
    let (s, a) = hook_sums(lambda, |_| true)?;
    Ok(s - a)
}

/// 1 for hooks, 0 otherwise.
pub fn hook_sum_prediction(lambda: &Partition) -> i64 {
    i64::from(lambda.is_hook())
}

/// Multiplicity totals of even-leg hooks in `(S², A²)`.
pub fn even_hook_sums(lambda: &Partition) -> Result<(i64, i64)> {
    hook_sums(lambda, |leg| leg % 2 == 0)
}

/// Multiplicity totals of odd-leg hooks in `(S², A²)`.
pub fn odd_hook_sums(lambda: &Partition) -> Result<(i64, i64)> {
    hook_sums(lambda, |leg| leg % 2 == 1)
}

fn half_split_value(lambda: &Partition) -> Result<Option<i64>> {
    let n = lambda.size();
    if n == 0 || n % 2 == 1 {
        return Ok(None);
    }
    Ok(Some(
        global().value(lambda, &Partition::of(&[n / 2, n / 2]))?,
    ))
}

/// Predicted `⟨χ_S − χ_A, Φ_n⟩`.
pub fn even_hook_constraint(lambda: &Partition) -> Result<i64> {
    let n = lambda.size();
    let parity = |e: usize| if e.is_multiple_of(2) { 1 } else { 0 };
    if lambda.is_hook() {
        let k = lambda.len() - 1;
        if n % 2 == 1 || n - k > k {
            return Ok(parity(k));
        }
        return Ok(parity(k + 1));
    }
    match half_split_value(lambda)? {
        None => Ok(0),
        Some(v) if v % 2 == 0 => Ok(v / 2),
        Some(v) => Err(Error::Inconsistent(format!(
            "{lambda} has odd value {v} on the half-split class"
        ))),
    }
}

/// Whether even-leg and odd-leg hook totals agree between `S²` and `A²`.
/// `None` when `λ` is a hook or (for even `n`) `[λ]((n/2,n/2)) ≠ 0`.
pub fn same_hook_sums(lambda: &Partition) -> Result<Option<bool>> {
    if lambda.is_hook() || half_split_value(lambda)?.is_some_and(|v| v != 0) {
        return Ok(None);
    }
    let (es, ea) = even_hook_sums(lambda)?;
    let (os, oa) = odd_hook_sums(lambda)?;
    Ok(Some(es == ea && os == oa))
}

/// The block members whose sum is paired with `χ_S − χ_A` for blocks of weight 1 or 2
/// with core `ρ_k`: `τ_k, τ_k^t` or `ζ_k, ξ_k, ζ_k^t`. `None` unless these shapes,
/// together with `ρ_k+(2²)` and its conjugate for weight 2, are exactly the block.
pub fn small_weight_targets(k: usize, weight: usize) -> Result<Option<Vec<Partition>>> {
    let rho = Partition::staircase(k);
    let tau = rho.add(&Partition::of(&[2]));
    let (targets, mut whole_block) = match weight {
        1 => (
            vec![tau.clone(), tau.conjugate()],
            vec![tau.clone(), tau.conjugate()],
        ),
        2 => {
            let zeta = rho.add(&Partition::of(&[4]));
            let Some(xi) = tau.concat(&Partition::of(&[1, 1])) else {
                return Ok(None);
            };
            let square = rho.add(&Partition::of(&[2, 2]));
            let targets = vec![zeta.clone(), xi.clone(), zeta.conjugate()];
            (
                targets,
                vec![
                    zeta.clone(),
                    xi,
                    zeta.conjugate(),
                    square.clone(),
                    square.conjugate(),
                ],
            )
        }
        _ => return Err(contract(format!("weight must be 1 or 2, got {weight}"))),
    };
    // The shapes must be distinct and exhaust the block.
    whole_block.sort();
    let mut members = block_members(&BlockId { core: rho, weight })?;
    members.sort();
    if whole_block != members {
        return Ok(None);
    }
    Ok(Some(targets))
}

/// `⟨S²[λ] − A²[λ], Σ targets⟩` for the small-weight targets of core `ρ_k`.
pub fn small_weight_block_constraint(
    lambda: &Partition,
    k: usize,
    weight: usize,
) -> Result<Option<i64>> {
    let Some(targets) = small_weight_targets(k, weight)? else {
        return Ok(None);
    };
    if targets[0].size() != lambda.size() {
        return Err(contract(format!(
            "{lambda} is not in S_{}",
            targets[0].size()
        )));
    }
    let split = square_split(lambda)?;
    Ok(Some(
        targets
            .iter()
            .map(|t| split.sym.get(t) - split.alt.get(t))
            .sum(),
    ))
}

/// Predicted value: 1 exactly on the targets.
pub fn small_weight_prediction(lambda: &Partition, k: usize, weight: usize) -> Result<Option<i64>> {
    Ok(small_weight_targets(k, weight)?.map(|t| i64::from(t.contains(lambda))))
}

/// `Σ_{ψ in B} ψ(x)ψ(y) = 0` for every block, 2-regular `x` and 2-singular `y`.
pub fn block_orthogonality(n: usize) -> Result<bool> {
    let classes = enumerate(n, None)?;
    let (regular, singular): (Vec<_>, Vec<_>) = classes.iter().partition(|c| is_two_regular(c));
    for block in blocks(n) {
        let rows = block_members(&block)?
            .iter()
            .map(character)
            .collect::<Result<Vec<_>>>()?;
        for x in &regular {
            for y in &singular {
                let mut sum = 0i128;
                for row in &rows {
                    sum += row.at(x)? * row.at(y)?;
                }
                if sum != 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `⟨χ^{(2)}, ϑ⟩ = ⟨χ, ϑ⟩` for `ϑ` vanishing on 2-singular classes.
pub fn basicobs_check(chi: &ClassFunction, theta: &ClassFunction) -> Result<bool> {
    let classes = enumerate(theta.n(), None)?;
    for (c, &v) in classes.iter().zip(theta.values()) {
        if !is_two_regular(c) && v != 0 {
            return Err(contract(format!(
                "test function is nonzero on the 2-singular class {c}"
            )));
        }
    }
    Ok(inner_product(&chi_power(chi, 2)?, theta)? == inner_product(chi, theta)?)
}

/// The block-theoretic checks the harness can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ModularCheck {
    HookValues,
    ThetaN,
    HookSums,
    EvenHooks,
    SameHookSums,
    Staircase,
    BlockSum,
    SmallWeight,
    BlockOrthogonality,
    BasicObs,
}

impl ModularCheck {
    pub const ALL: [ModularCheck; 10] = [
        ModularCheck::HookValues,
        ModularCheck::ThetaN,
        ModularCheck::HookSums,
        ModularCheck::EvenHooks,
        ModularCheck::SameHookSums,
        ModularCheck::Staircase,
        ModularCheck::BlockSum,
        ModularCheck::SmallWeight,
        ModularCheck::BlockOrthogonality,
        ModularCheck::BasicObs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModularCheck::HookValues => "HOOK_VALUES",
            ModularCheck::ThetaN => "THETA_N",
            ModularCheck::HookSums => "HOOK_SUMS",
            ModularCheck::EvenHooks => "EVEN_HOOKS",
            ModularCheck::SameHookSums => "SAME_HOOK_SUMS",
            ModularCheck::Staircase => "STAIRCASE",
            ModularCheck::BlockSum => "BLOCK_SUM",
            ModularCheck::SmallWeight => "SMALL_WEIGHT",
            ModularCheck::BlockOrthogonality => "BLOCK_ORTHOGONALITY",
            ModularCheck::BasicObs => "BASIC_OBS",
        }
    }

    /// Whether the sweep is indexed by the staircase size `k`.
    pub fn indexed_by_k(self) -> bool {
        matches!(self, ModularCheck::Staircase | ModularCheck::SmallWeight)
    }

    pub fn default_max(self) -> usize {
        match self {
            ModularCheck::HookValues
            | ModularCheck::ThetaN
            | ModularCheck::HookSums
            | ModularCheck::EvenHooks
            | ModularCheck::SameHookSums => 12,
            ModularCheck::Staircase => 4,
            ModularCheck::BlockSum => 8,
            ModularCheck::SmallWeight => 3,
            ModularCheck::BlockOrthogonality | ModularCheck::BasicObs => 10,
        }
    }
}

impl fmt::Display for ModularCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModularCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        ModularCheck::ALL
            .into_iter()
            .find(|c| c.name() == wanted)
            .ok_or_else(|| contract(format!("unknown modular check {s:?}")))
    }
}

fn to_i64(x: &BigInt) -> i64 {
    i64::try_from(x).unwrap_or(i64::MAX)
}

fn per_lambda(
    check: ModularCheck,
    ns: &[usize],
    f: impl Fn(&Partition, &mut DiffBuilder) -> Result<Option<String>> + Sync + Send,
) -> Result<Vec<VerificationReport>> {
    let mut lambdas = Vec::new();
    for &n in ns {
        lambdas.extend(enumerate(n, None)?);
    }
    lambdas
        .par_iter()
        .map(|lambda| {
            let mut b = DiffBuilder::new();
            let instance = format!("lambda={lambda}");
            Ok(match f(lambda, &mut b)? {
                Some(reason) => VerificationReport::skipped(check.name(), instance, reason),
                None => b.finish(check.name(), instance),
            })
        })
        .collect()
}

/// Runs one block-theoretic sweep up to `max` (`n`, or `k` for staircase checks).
pub fn verify(check: ModularCheck, max: Option<usize>) -> Result<Vec<VerificationReport>> {
    let top = max.unwrap_or(check.default_max());
    let ns: Vec<usize> = (1..=top).collect();
    match check {
        ModularCheck::HookValues => ns
            .par_iter()
            .map(|&n| {
                let f = chi_hook(n)?;
                let mut b = DiffBuilder::new();
                for (alpha, &v) in enumerate(n, None)?.iter().zip(f.values()) {
                    b.check(
                        format!("class:{alpha}"),
                        chi_hook_value(alpha) as i64,
                        v as i64,
                    );
                }
                Ok(b.finish(check.name(), format!("n={n}")))
            })
            .collect(),
        ModularCheck::ThetaN => ns
            .par_iter()
            .map(|&n| {
                // ϑ_n = Σ_ψ ψ((n)) ψ, assembled from the character table.
                let table = global().table(n)?;
                let cycle = table
                    .parts
                    .iter()
                    .position(|p| *p == Partition::row(n))
                    .expect("n-cycle class");
                let mut b = DiffBuilder::new();
                for (j, alpha) in table.parts.iter().enumerate() {
                    let v: i64 = table.rows.iter().map(|row| row[cycle] * row[j]).sum();
                    let expected = if *alpha == Partition::row(n) {
                        n as i64
                    } else {
                        0
                    };
                    b.check(format!("class:{alpha}"), expected, v);
                }
                let direct = theta_n(n)?;
                for (alpha, &v) in table.parts.iter().zip(direct.values()) {
                    let expected = if *alpha == Partition::row(n) {
                        n as i64
                    } else {
                        0
                    };
                    b.check(format!("theta:{alpha}"), expected, v as i64);
                }
                Ok(b.finish(check.name(), format!("n={n}")))
            })
            .collect(),
        ModularCheck::HookSums => per_lambda(check, &ns, |lambda, b| {
            b.check(
                "hooks:sym-alt",
                hook_sum_prediction(lambda),
                hook_sum_constraint(lambda)?,
            );
            let paired = inner_product(
                &chi_power(&character(lambda)?, 2)?,
                &chi_hook(lambda.size())?,
            )?;
            b.check(
                "hooks:<chi2,chi_hook>",
                hook_sum_prediction(lambda),
                paired as i64,
            );
            Ok(None)
        }),
        ModularCheck::EvenHooks => {
            let mut reports = per_lambda(check, &ns, |lambda, b| {
                let predicted = even_hook_constraint(lambda)?;
                let (s, a) = even_hook_sums(lambda)?;
                b.check("even_hooks:sym-alt", predicted, s - a);
                let paired =
                    inner_product(&chi_power(&character(lambda)?, 2)?, &phi_n(lambda.size())?)?;
                b.check("even_hooks:<chi2,phi>", predicted, paired as i64);
                b.check(
                    "even_hooks:range",
                    1,
                    i64::from((-1..=1).contains(&predicted)),
                );
                Ok(None)
            })?;
            if top >= 10 {
                let rho = Partition::staircase(4);
                let (s, a) = even_hook_sums(&rho)?;
                let mut b = DiffBuilder::new();
                b.check("sym_total", 27, s);
                b.check("alt_total", 28, a);
                b.check("half_split_value", -2, half_split_value(&rho)?.unwrap_or(0));
                reports.push(b.finish(check.name(), format!("lambda={rho} totals")));
            }
            Ok(reports)
        }
        ModularCheck::SameHookSums => per_lambda(check, &ns, |lambda, b| {
            Ok(match same_hook_sums(lambda)? {
                None => Some("hook, or nonzero on the half-split class".to_string()),
                Some(ok) => {
                    b.check("equal_sums", 1, i64::from(ok));
                    None
                }
            })
        }),
        ModularCheck::Staircase => {
            let ks: Vec<usize> = (1..=top).collect();
            let mut reports = Vec::new();
            for k in ks {
                let n = k * (k + 1) / 2;
                let rho = Partition::staircase(k);
                reports.extend(per_lambda(check, &[n], |lambda, b| {
                    let c = staircase_constraint(lambda, k)?;
                    b.check(
                        format!("sym-alt:{rho}"),
                        i64::from(*lambda == rho),
                        c.difference,
                    );
                    if *lambda != rho {
                        let g = c.sg + c.ag;
                        b.check(format!("g-2sg:{rho}"), 0, g - 2 * c.sg);
                    }
                    Ok(None)
                })?);
            }
            Ok(reports)
        }
        ModularCheck::BlockSum => per_lambda(check, &ns, |lambda, b| {
            for block in blocks(lambda.size()) {
                b.check(
                    format!("block:{block}"),
                    to_i64(&weighted_block_sum_expected(lambda, &block)),
                    to_i64(&weighted_block_sum(lambda, &block)?),
                );
            }
            Ok(None)
        }),
        ModularCheck::SmallWeight => {
            let mut reports = Vec::new();
            for k in 0..=top {
                for weight in [1, 2] {
                    let n = k * (k + 1) / 2 + 2 * weight;
                    if small_weight_targets(k, weight)?.is_none() {
                        reports.push(VerificationReport::skipped(
                            check.name(),
                            format!("k={k} w={weight}"),
                            "listed shapes do not form the block",
                        ));
                        continue;
                    }
                    let mut sub = per_lambda(check, &[n], |lambda, b| {
                        let predicted =
                            small_weight_prediction(lambda, k, weight)?.expect("targets exist");
                        let oracle = small_weight_block_constraint(lambda, k, weight)?
                            .expect("targets exist");
                        b.check(format!("k={k} w={weight}"), predicted, oracle);
                        Ok(None)
                    })?;
                    for r in &mut sub {
                        r.instance = format!("k={k} w={weight} {}", r.instance);
                    }
                    reports.extend(sub);
                }
            }
            Ok(reports)
        }
        ModularCheck::BlockOrthogonality => ns
            .par_iter()
            .map(|&n| {
                let mut b = DiffBuilder::new();
                b.check("orthogonal", 1, i64::from(block_orthogonality(n)?));
                Ok(b.finish(check.name(), format!("n={n}")))
            })
            .collect(),
        ModularCheck::BasicObs => per_lambda(check, &ns, |lambda, b| {
            let n = lambda.size();
            let chi = character(lambda)?;
            b.check(
                "chi_hook",
                1,
                i64::from(basicobs_check(&chi, &chi_hook(n)?)?),
            );
            for k in (1..).take_while(|k| k * (k + 1) / 2 <= n) {
                if k * (k + 1) / 2 == n {
                    let rho = character(&Partition::staircase(k))?;
                    b.check("staircase", 1, i64::from(basicobs_check(&chi, &rho)?));
                }
            }
            Ok(None)
        }),
    }
}
