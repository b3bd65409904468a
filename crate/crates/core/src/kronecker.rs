//! Kronecker coefficients and the splitting `[λ]² = S²[λ] + A²[λ]`.
//!
//! Both halves come straight from character values,
//! `χ_S(g) = (χ(g)² + χ(g²))/2` and `χ_A(g) = (χ(g)² − χ(g²))/2`,
//! and each split is cross-checked against the plain square before it is returned.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::characters::{character, chi_power, decompose, ClassFunction, Decomposition};
use crate::error::{contract, Error, Result};
use crate::partitions::Partition;

/// The symmetric and alternating parts of `[λ]²`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareSplit {
    pub lambda: Partition,
    pub sym: Decomposition,
    pub alt: Decomposition,
}

impl SquareSplit {
    pub fn n(&self) -> usize {
        self.lambda.size()
    }

    /// `sym + alt`, the decomposition of `[λ]²`.
    pub fn square(&self) -> Decomposition {
        self.sym.plus(&self.alt).expect("halves share a level")
    }
}

/// `χ_S` and `χ_A` for a character `χ`.
pub fn sym_alt_parts(chi: &ClassFunction) -> Result<(ClassFunction, ClassFunction)> {
    let square = chi.mul(chi)?;
    let twisted = chi_power(chi, 2)?;
    let parity =
        |e: Error| Error::Inconsistent(format!("odd value in symmetric/alternating split: {e}"));
    let sym = square.add(&twisted)?.div_exact(2).map_err(parity)?;
    let alt = square.sub(&twisted)?.div_exact(2).map_err(parity)?;
    Ok((sym, alt))
}

static SPLITS: OnceLock<RwLock<HashMap<Partition, Arc<SquareSplit>>>> = OnceLock::new();

fn split_memo() -> &'static RwLock<HashMap<Partition, Arc<SquareSplit>>> {
    SPLITS.get_or_init(Default::default)
}

/// Drops memoised splits.
pub fn clear_split_memo() {
    split_memo().write().expect("split memo").clear();
}

/// The split of `[λ]²`, memoised per `λ`.
pub fn square_split(lambda: &Partition) -> Result<Arc<SquareSplit>> {
    if let Some(s) = split_memo().read().expect("split memo").get(lambda) {
        return Ok(s.clone());
    }
    let split = Arc::new(compute_split(lambda)?);
    let mut memo = split_memo().write().expect("split memo");
    Ok(memo.entry(lambda.clone()).or_insert(split).clone())
}

fn compute_split(lambda: &Partition) -> Result<SquareSplit> {
    let n = lambda.size();
    let chi = character(lambda)?;
    let (sym_f, alt_f) = sym_alt_parts(&chi)?;
    let sym = decompose(&sym_f)?;
    let alt = decompose(&alt_f)?;
    if let Some((p, m)) = sym.iter().chain(alt.iter()).find(|(_, m)| *m < 0) {
        return Err(Error::Inconsistent(format!(
            "negative multiplicity {m} at {p} in the split of {lambda}"
        )));
    }
    let square = decompose(&chi.mul(&chi)?)?;
    if sym.plus(&alt)? != square {
        return Err(Error::Inconsistent(format!(
            "split of {lambda} does not add up: {sym} + {alt} != {square}"
        )));
    }
    let trivial = Partition::row(n);
    if sym.get(&trivial) != 1 || alt.get(&trivial) != 0 {
        return Err(Error::Inconsistent(format!(
            "trivial constituent misplaced in the split of {lambda}"
        )));
    }
    Ok(SquareSplit {
        lambda: lambda.clone(),
        sym,
        alt,
    })
}

/// `g(λ,μ,ν) = ⟨[λ][μ],[ν]⟩`.
pub fn kronecker_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i64> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(contract(format!("sizes differ: {lambda}, {mu}, {nu}")));
    }
    if lambda == mu {
        return Ok(square_split(lambda)?.square().get(nu));
    }
    let product = character(lambda)?.mul(&character(mu)?)?;
    Ok(decompose(&product)?.get(nu))
}

/// All of `[λ][μ]` in the irreducible basis.
pub fn kronecker_product(lambda: &Partition, mu: &Partition) -> Result<Decomposition> {
    if lambda.size() != mu.size() {
        return Err(contract(format!("sizes differ: {lambda}, {mu}")));
    }
    decompose(&character(lambda)?.mul(&character(mu)?)?)
}

fn same_level(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.size() != mu.size() {
        return Err(contract(format!("|{lambda}| != |{mu}|")));
    }
    Ok(())
}

/// Multiplicity of `[μ]` in `S²[λ]`.
pub fn sg(lambda: &Partition, mu: &Partition) -> Result<i64> {
    same_level(lambda, mu)?;
    Ok(square_split(lambda)?.sym.get(mu))
}

/// Multiplicity of `[μ]` in `A²[λ]`.
pub fn ag(lambda: &Partition, mu: &Partition) -> Result<i64> {
    same_level(lambda, mu)?;
    Ok(square_split(lambda)?.alt.get(mu))
}

/// Restriction of a class function on `S_n` to `S_{n−1}`.
pub fn restrict(f: &ClassFunction) -> Result<ClassFunction> {
    let n = f.n();
    if n == 0 {
        return Err(contract("cannot restrict from S_0"));
    }
    ClassFunction::from_fn(n - 1, |mu| {
        let mut parts = mu.parts().to_vec();
        parts.push(1);
        f.at(&Partition::from_unsorted(parts))
    })
}

/// Compares `X²([λ])↓` with `Σ_B X²([λ_B]) + Σ_{B<C} [λ_B][λ_C]` on `S_{n−1}`
/// for both `X = S` and `X = A`, where `λ_B` runs over `λ` minus a removable box.
pub fn restriction_split_check(lambda: &Partition) -> Result<bool> {
    let n = lambda.size();
    if n < 2 {
        return Err(contract(format!(
            "{lambda}: restriction check needs n >= 2"
        )));
    }
    let (sym, alt) = sym_alt_parts(&character(lambda)?)?;
    let (sym_down, alt_down) = (restrict(&sym)?, restrict(&alt)?);

    let pieces = lambda
        .removals()
        .iter()
        .map(character)
        .collect::<Result<Vec<_>>>()?;
    let mut sym_rhs = ClassFunction::zero(n - 1)?;
    let mut alt_rhs = ClassFunction::zero(n - 1)?;
    for (i, chi) in pieces.iter().enumerate() {
        let (s, a) = sym_alt_parts(chi)?;
        sym_rhs = sym_rhs.add(&s)?;
        alt_rhs = alt_rhs.add(&a)?;
        for other in &pieces[i + 1..] {
            let cross = chi.mul(other)?;
            sym_rhs = sym_rhs.add(&cross)?;
            alt_rhs = alt_rhs.add(&cross)?;
        }
    }
    Ok(sym_down == sym_rhs && alt_down == alt_rhs)
}

/// If `sg(α,β) > 0` and `sg(λ,μ) > 0`, checks `sg(α+λ, β+μ) > 0`.
/// An unmet hypothesis passes vacuously.
pub fn semigroup_spotcheck(
    alpha: &Partition,
    beta: &Partition,
    lambda: &Partition,
    mu: &Partition,
) -> Result<bool> {
    same_level(alpha, beta)?;
    same_level(lambda, mu)?;
    if sg(alpha, beta)? == 0 || sg(lambda, mu)? == 0 {
        return Ok(true);
    }
    Ok(sg(&alpha.add(lambda), &beta.add(mu))? > 0)
}
