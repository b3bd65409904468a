//! Exact irreducible characters of `S_n` via the Murnaghan–Nakayama rule,
//! class-function arithmetic, inner products and change of basis to the
//! irreducible characters.
//!
//! Character values `[λ](μ)` are memoised per level `n` in dense rows of
//! atomics: readers never block, and a racing insertion writes the same value.
//! The recursion always strips a rim hook whose length is the largest
//! remaining part of `μ`, so the memo key is `(λ, μ without its first part)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicI64, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{contract, Error, Result};
use crate::partitions::{enumerate, Partition};

const UNSET: i64 = i64::MIN;

/// All partitions of one `n` with their class data and memoised character rows.
struct Level {
    n: usize,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    class_sizes: Vec<u128>,
    factorial: u128,
    rows: Vec<OnceLock<Box<[AtomicI64]>>>,
    table: OnceLock<Arc<CharacterTable>>,
}

impl Level {
    fn new(n: usize) -> Result<Self> {
        let parts = enumerate(n, None)?;
        let index = parts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let factorial: u128 = (1..=n as u128).product();
        let class_sizes = parts
            .iter()
            .map(|mu| factorial / centralizer_u128(mu))
            .collect();
        let rows = (0..parts.len()).map(|_| OnceLock::new()).collect();
        Ok(Level {
            n,
            parts,
            index,
            class_sizes,
            factorial,
            rows,
            table: OnceLock::new(),
        })
    }

    fn row_cells(&self, lambda: usize) -> &[AtomicI64] {
        self.rows[lambda].get_or_init(|| {
            (0..self.parts.len())
                .map(|_| AtomicI64::new(UNSET))
                .collect()
        })
    }

    fn position(&self, p: &Partition) -> Result<usize> {
        self.index
            .get(p)
            .copied()
            .ok_or_else(|| contract(format!("{p} is not a partition of {}", self.n)))
    }
}

/// A full character table: `rows[i][j] = [parts[i]](parts[j])`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub n: usize,
    pub parts: Vec<Partition>,
    pub rows: Vec<Vec<i64>>,
}

/// Shared memo of character values across levels.
#[derive(Default)]
pub struct Characters {
    levels: RwLock<HashMap<usize, Arc<Level>>>,
}

static GLOBAL: OnceLock<Characters> = OnceLock::new();

/// The process-wide character memo.
pub fn global() -> &'static Characters {
    GLOBAL.get_or_init(Characters::default)
}

impl Characters {
    fn level(&self, n: usize) -> Result<Arc<Level>> {
        if let Some(level) = self.levels.read().expect("memo lock").get(&n) {
            return Ok(level.clone());
        }
        let fresh = Arc::new(Level::new(n)?);
        let mut levels = self.levels.write().expect("memo lock");
        Ok(levels.entry(n).or_insert(fresh).clone())
    }

    /// Drops every memoised value.
    pub fn clear(&self) {
        self.levels.write().expect("memo lock").clear();
    }

    /// Levels currently memoised, with the number of fully known rows.
    pub fn memo_status(&self) -> Vec<(usize, usize)> {
        let levels = self.levels.read().expect("memo lock");
        let mut out: Vec<(usize, usize)> = levels
            .values()
            .map(|l| {
                let complete = l
                    .rows
                    .iter()
                    .filter(|r| {
                        r.get().is_some_and(|cells| {
                            cells.iter().all(|c| c.load(Ordering::Relaxed) != UNSET)
                        })
                    })
                    .count();
                (l.n, complete)
            })
            .collect();
        out.sort_unstable();
        out
    }

    fn value_at(&self, level: &Level, lambda: usize, mu: usize) -> Result<i64> {
        let cell = &level.row_cells(lambda)[mu];
        let cached = cell.load(Ordering::Acquire);
        if cached != UNSET {
            return Ok(cached);
        }
        let value = if level.n == 0 {
            1
        } else {
            let cycle = &level.parts[mu];
            let strip = cycle.first();
            let rest = Partition::new(cycle.parts()[1..].to_vec())?;
            let lower = self.level(level.n - strip)?;
            let rest_idx = lower.position(&rest)?;
            let mut total = 0i64;
            for (shape, leg) in level.parts[lambda].rim_hook_removals(strip) {
                let v = self.value_at(&lower, lower.position(&shape)?, rest_idx)?;
                total += if leg % 2 == 0 { v } else { -v };
            }
            total
        };
        cell.store(value, Ordering::Release);
        Ok(value)
    }

    /// `[λ](μ)`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        if lambda.size() != mu.size() {
            return Err(contract(format!("|{lambda}| != |{mu}|")));
        }
        let level = self.level(lambda.size())?;
        self.value_at(&level, level.position(lambda)?, level.position(mu)?)
    }

    /// The character row of `[λ]` as a class function.
    pub fn row(&self, lambda: &Partition) -> Result<ClassFunction> {
        let table = self.table(lambda.size())?;
        let level = self.level(lambda.size())?;
        let i = level.position(lambda)?;
        Ok(ClassFunction {
            n: table.n,
            values: table.rows[i].iter().map(|&v| v as i128).collect(),
        })
    }

    /// Full table for `S_n`, rows computed in parallel on first request.
    pub fn table(&self, n: usize) -> Result<Arc<CharacterTable>> {
        let level = self.level(n)?;
        if let Some(t) = level.table.get() {
            return Ok(t.clone());
        }
        let count = level.parts.len();
        let rows = (0..count)
            .into_par_iter()
            .map(|i| {
                (0..count)
                    .map(|j| self.value_at(&level, i, j))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let table = Arc::new(CharacterTable {
            n,
            parts: level.parts.clone(),
            rows,
        });
        Ok(level.table.get_or_init(|| table).clone())
    }

    /// Seeds the memo with a full table (e.g. loaded from disk).
    pub fn install_table(&self, table: CharacterTable) -> Result<()> {
        let level = self.level(table.n)?;
        if table.parts != level.parts || table.rows.iter().any(|r| r.len() != level.parts.len()) {
            return Err(Error::Inconsistent(format!(
                "table for n={} has the wrong shape",
                table.n
            )));
        }
        for (i, row) in table.rows.iter().enumerate() {
            for (cell, &v) in level.row_cells(i).iter().zip(row) {
                cell.store(v, Ordering::Release);
            }
        }
        let _ = level.table.set(Arc::new(table));
        Ok(())
    }

    fn class_data(&self, n: usize) -> Result<(Arc<Level>, u128)> {
        let level = self.level(n)?;
        let fact = level.factorial;
        Ok((level, fact))
    }
}

fn centralizer_u128(mu: &Partition) -> u128 {
    let mut z: u128 = 1;
    for (part, &m) in mu.multiplicities().iter().enumerate().skip(1) {
        for k in 1..=m as u128 {
            z *= part as u128 * k;
        }
    }
    z
}

/// `z_μ = Π i^{m_i} m_i!`, the order of the centraliser of an element of cycle type `μ`.
pub fn centralizer_order(mu: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (part, &m) in mu.multiplicities().iter().enumerate().skip(1) {
        for k in 1..=m {
            z *= BigUint::from(part * k);
        }
    }
    z
}

/// `n!/z_μ`.
pub fn class_size(mu: &Partition) -> BigUint {
    let fact: BigUint = (1..=mu.size()).map(BigUint::from).product();
    fact / centralizer_order(mu)
}

/// `[λ](μ)` by the Murnaghan–Nakayama rule.
pub fn mn_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    global().value(lambda, mu)
}

/// `f(λ)` by the hook-length formula.
pub fn degree(lambda: &Partition) -> BigUint {
    let fact: BigUint = (1..=lambda.size()).map(BigUint::from).product();
    let hooks: BigUint = lambda
        .hook_stats()
        .hook_lengths
        .iter()
        .flatten()
        .map(|&h| BigUint::from(h))
        .product();
    fact / hooks
}

/// Row of the irreducible character `[λ]`.
pub fn character(lambda: &Partition) -> Result<ClassFunction> {
    global().row(lambda)
}

/// Cycle type of `g^m` for `g` of cycle type `μ`.
pub fn power_map(mu: &Partition, m: usize) -> Partition {
    assert!(m > 0, "power_map needs a positive exponent");
    let mut parts = Vec::with_capacity(mu.len());
    for &l in mu.parts() {
        let g = l.gcd(&m);
        parts.extend(std::iter::repeat_n(l / g, g));
    }
    Partition::from_unsorted(parts)
}

/// A class function on `S_n` with exact integer values, dense over canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<i128>,
}

impl ClassFunction {
    pub fn from_values(n: usize, values: Vec<i128>) -> Result<Self> {
        let classes = enumerate(n, None)?.len();
        if values.len() != classes {
            return Err(contract(format!(
                "{} values for {classes} classes of S_{n}",
                values.len()
            )));
        }
        Ok(ClassFunction { n, values })
    }

    /// Builds a class function by evaluating `f` on each cycle type.
    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> Result<i128>) -> Result<Self> {
        let values = enumerate(n, None)?
            .iter()
            .map(&mut f)
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction { n, values })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| Ok(0))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i128] {
        &self.values
    }

    /// Value at the class of cycle type `mu`.
    pub fn at(&self, mu: &Partition) -> Result<i128> {
        let level = global().level(self.n)?;
        Ok(self.values[level.position(mu)?])
    }

    fn zip_with(
        &self,
        other: &ClassFunction,
        op: impl Fn(i128, i128) -> Option<i128>,
    ) -> Result<ClassFunction> {
        if self.n != other.n {
            return Err(contract(format!(
                "levels differ: {} vs {}",
                self.n, other.n
            )));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| {
                op(a, b).ok_or_else(|| Error::Inconsistent("class function overflow".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction { n: self.n, values })
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, i128::checked_add)
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, i128::checked_sub)
    }

    /// Pointwise (Kronecker) product.
    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, i128::checked_mul)
    }

    pub fn scale(&self, k: i128) -> Result<ClassFunction> {
        let values = self
            .values
            .iter()
            .map(|&v| {
                v.checked_mul(k)
                    .ok_or_else(|| Error::Inconsistent("class function overflow".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction { n: self.n, values })
    }

    /// Exact division by `k`; fails if some value is not divisible.
    pub fn div_exact(&self, k: i128) -> Result<ClassFunction> {
        let values = self
            .values
            .iter()
            .map(|&v| {
                if v % k == 0 {
                    Ok(v / k)
                } else {
                    Err(Error::Inconsistent(format!(
                        "value {v} not divisible by {k}"
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction { n: self.n, values })
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassFunction(n={}, {:?})", self.n, self.values)
    }
}

/// `Σ_μ a(μ) b(μ) / z_μ`, exact. Fails if the result is not an integer.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<i128> {
    if a.n != b.n {
        return Err(contract(format!("levels differ: {} vs {}", a.n, b.n)));
    }
    let (level, fact) = global().class_data(a.n)?;
    let mut total = BigInt::zero();
    for ((&x, &y), &size) in a.values.iter().zip(&b.values).zip(&level.class_sizes) {
        if x != 0 && y != 0 {
            total += BigInt::from(x) * BigInt::from(y) * BigInt::from(size);
        }
    }
    let (q, r) = total.div_rem(&BigInt::from(fact));
    if !r.is_zero() {
        return Err(Error::Inconsistent(format!(
            "inner product at n={} is not integral",
            a.n
        )));
    }
    q.to_i128()
        .ok_or_else(|| Error::Inconsistent("inner product exceeds i128".into()))
}

/// `χ^{(m)}(g) = χ(g^m)`.
pub fn chi_power(chi: &ClassFunction, m: usize) -> Result<ClassFunction> {
    let level = global().level(chi.n)?;
    let values = level
        .parts
        .iter()
        .map(|mu| Ok(chi.values[level.position(&power_map(mu, m))?]))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassFunction { n: chi.n, values })
}

/// `ϑ_C`: `z_C` on the class `C`, zero elsewhere.
pub fn theta_class(class: &Partition) -> Result<ClassFunction> {
    let z = centralizer_u128(class) as i128;
    ClassFunction::from_fn(class.size(), |mu| Ok(if mu == class { z } else { 0 }))
}

/// The trivial character `[n]`.
pub fn trivial(n: usize) -> Result<ClassFunction> {
    ClassFunction::from_fn(n, |_| Ok(1))
}

/// Multiplicities of the irreducible characters in a virtual character.
pub fn decompose(f: &ClassFunction) -> Result<Decomposition> {
    let table = global().table(f.n)?;
    let (level, fact) = global().class_data(f.n)?;
    let fast: Option<Vec<i128>> = f
        .values
        .iter()
        .zip(&level.class_sizes)
        .map(|(&v, &s)| i128::try_from(s).ok().and_then(|s| v.checked_mul(s)))
        .collect();
    let slow = || -> Vec<BigInt> {
        f.values
            .iter()
            .zip(&level.class_sizes)
            .map(|(&v, &s)| BigInt::from(v) * BigInt::from(s))
            .collect()
    };
    let fact_i = fact as i128;
    let mut entries = BTreeMap::new();
    for (lambda, row) in table.parts.iter().zip(&table.rows) {
        let exact = fast.as_ref().and_then(|w| {
            w.iter().zip(row).try_fold(0i128, |acc, (&wi, &chi)| {
                acc.checked_add(wi.checked_mul(chi as i128)?)
            })
        });
        let mult = match exact {
            Some(sum) => {
                if sum % fact_i != 0 {
                    return Err(Error::NotVirtualCharacter(lambda.to_string()));
                }
                sum / fact_i
            }
            None => {
                let sum: BigInt = slow()
                    .iter()
                    .zip(row)
                    .map(|(w, &chi)| w * BigInt::from(chi))
                    .sum();
                let (q, r) = sum.div_rem(&BigInt::from(fact));
                if !r.is_zero() {
                    return Err(Error::NotVirtualCharacter(lambda.to_string()));
                }
                q.to_i128()
                    .ok_or_else(|| Error::Inconsistent("multiplicity exceeds i128".into()))?
            }
        };
        if mult != 0 {
            let mult = i64::try_from(mult)
                .map_err(|_| Error::Inconsistent("multiplicity exceeds i64".into()))?;
            entries.insert(lambda.clone(), mult);
        }
    }
    Ok(Decomposition { n: f.n, entries })
}

/// The class function `Σ m_λ [λ]`.
pub fn synthesize(d: &Decomposition) -> Result<ClassFunction> {
    let table = global().table(d.n)?;
    let level = global().level(d.n)?;
    let mut values = vec![0i128; table.parts.len()];
    for (lambda, &m) in &d.entries {
        let row = &table.rows[level.position(lambda)?];
        for (v, &chi) in values.iter_mut().zip(row) {
            *v += m as i128 * chi as i128;
        }
    }
    Ok(ClassFunction { n: d.n, values })
}

/// A virtual character in the irreducible basis. Zero multiplicities are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    n: usize,
    entries: BTreeMap<Partition, i64>,
}

impl Decomposition {
    pub fn new(n: usize) -> Self {
        Decomposition {
            n,
            entries: BTreeMap::new(),
        }
    }

    /// Builds from `(λ, multiplicity)` pairs; repeated λ accumulate.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Partition, i64)>) -> Result<Self> {
        let mut d = Decomposition::new(n);
        for (lambda, m) in terms {
            d.add_term(lambda, m)?;
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, lambda: Partition, m: i64) -> Result<()> {
        if lambda.size() != self.n {
            return Err(contract(format!(
                "{lambda} is not a partition of {}",
                self.n
            )));
        }
        let entry = self.entries.entry(lambda).or_insert(0);
        *entry += m;
        if *entry == 0 {
            self.entries.retain(|_, v| *v != 0);
        }
        Ok(())
    }

    pub fn get(&self, lambda: &Partition) -> i64 {
        self.entries.get(lambda).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.entries.iter().map(|(p, &m)| (p, m))
    }

    pub fn entries(&self) -> &BTreeMap<Partition, i64> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct constituents.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.entries.values().all(|&m| m == 1)
    }

    /// Zero or a single constituent type.
    pub fn is_homogeneous(&self) -> bool {
        self.entries.len() <= 1
    }

    pub fn plus(&self, other: &Decomposition) -> Result<Decomposition> {
        let mut out = self.clone();
        for (p, m) in other.iter() {
            out.add_term(p.clone(), m)?;
        }
        Ok(out)
    }

    pub fn minus(&self, other: &Decomposition) -> Result<Decomposition> {
        let mut out = self.clone();
        for (p, m) in other.iter() {
            out.add_term(p.clone(), -m)?;
        }
        Ok(out)
    }

    /// Keeps only constituents satisfying `keep`.
    pub fn restrict(&self, keep: impl Fn(&Partition) -> bool) -> Decomposition {
        Decomposition {
            n: self.n,
            entries: self
                .entries
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(p, &m)| (p.clone(), m))
                .collect(),
        }
    }

    /// Weighted degree `Σ m_λ f(λ)`.
    pub fn degree(&self) -> BigInt {
        self.entries
            .iter()
            .map(|(p, &m)| BigInt::from(m) * BigInt::from(degree(p)))
            .sum()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *m != 1 {
                write!(f, "{m}")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Decomposition(n={}: {self})", self.n)
    }
}

/// Serialized as a JSON object `{"[3,2]": 1, ...}` in canonical order.
impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for (p, m) in &self.entries {
            map.serialize_entry(&p.to_string(), m)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Decomposition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct DecompVisitor;

        impl<'de> Visitor<'de> for DecompVisitor {
            type Value = Decomposition;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a map from partitions to multiplicities")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<Decomposition, A::Error> {
                let mut terms = Vec::new();
                while let Some((key, m)) = access.next_entry::<String, i64>()? {
                    let p: Partition = key.parse().map_err(de::Error::custom)?;
                    terms.push((p, m));
                }
                let n = terms.first().map(|(p, _)| p.size()).unwrap_or(0);
                Decomposition::from_terms(n, terms).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_map(DecompVisitor)
    }
}
