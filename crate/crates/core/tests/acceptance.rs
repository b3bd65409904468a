//! Acceptance suite. Runs without the libtest harness so that each criterion
//! prints exactly one line. Set `SYMSPLIT_LONG_RUN=1` to include the k = 5 staircase.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};

use symsplit::cache::TableCache;
use symsplit::characters::{
    character, chi_power, degree, global, inner_product, mn_value, trivial, Decomposition,
};
use symsplit::closed_forms::{
    self, catalan_check, catalan_number, catalan_terms, FormulaId, Range,
};
use symsplit::conjectures::{
    homogeneous_scan, hstz_refined_scan, multiplicity_free_scan, saxl_refined_check,
};
use symsplit::kronecker::{clear_split_memo, sg, square_split, sym_alt_parts};
use symsplit::modular::{self, weighted_block_sum, BlockId, ModularCheck};
use symsplit::partitions::{enumerate, Partition};
use symsplit::report::Status;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn p(parts: &[usize]) -> Partition {
    Partition::of(parts)
}

fn dec(n: usize, terms: &[(&[usize], i64)]) -> Decomposition {
    Decomposition::from_terms(n, terms.iter().map(|(q, m)| (p(q), *m))).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let lambda = p(&[3, 2, 2]);
    let s = square_split(&lambda).map_err(|e| e.to_string())?;
    let sym = dec(
        7,
        &[
            (&[7], 1),
            (&[6, 1], 1),
            (&[5, 2], 2),
            (&[4, 3], 1),
            (&[4, 2, 1], 2),
            (&[3, 2, 2], 2),
            (&[3, 2, 1, 1], 1),
            (&[3, 1, 1, 1, 1], 1),
            (&[2, 2, 2, 1], 1),
            (&[2, 1, 1, 1, 1, 1], 1),
        ],
    );
    let alt = dec(
        7,
        &[
            (&[5, 1, 1], 1),
            (&[4, 2, 1], 1),
            (&[4, 1, 1, 1], 2),
            (&[3, 3, 1], 1),
            (&[3, 2, 1, 1], 2),
            (&[3, 1, 1, 1, 1], 1),
            (&[2, 2, 1, 1, 1], 1),
        ],
    );
    ensure(s.sym == sym, || format!("S² = {}", s.sym))?;
    ensure(s.alt == alt, || format!("A² = {}", s.alt))?;
    let block = BlockId {
        core: p(&[1]),
        weight: 3,
    };
    let sum = weighted_block_sum(&lambda, &block).map_err(|e| e.to_string())?;
    ensure(sum == BigInt::from(21), || format!("block sum {sum}"))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!(
        "S² has {} types, A² has {}, block sum 21",
        s.sym.len(),
        s.alt.len()
    ))
}

fn catalan() -> Outcome {
    let start = Instant::now();
    let printed: [&[i64]; 4] = [
        &[1],
        &[1, 2, -1],
        &[1, 9, 5, -10],
        &[1, 20, 14, 56, 14, -35, -56],
    ];
    let mut shown = Vec::new();
    for k in 1..=8 {
        let value = catalan_check(k).map_err(|e| e.to_string())?;
        ensure(value == BigInt::from(catalan_number(k)), || {
            format!("k={k}: {value}")
        })?;
        if k <= 4 {
            let terms = catalan_terms(k).map_err(|e| e.to_string())?;
            let expected: Vec<BigInt> = printed[k - 1].iter().map(|&t| BigInt::from(t)).collect();
            ensure(terms == expected, || format!("k={k} terms {terms:?}"))?;
            let body: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
            shown.push(format!(
                "C_{k}={value}={}",
                body.join("+").replace("+-", "-")
            ));
        }
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("{}; C_8={}", shown.join(", "), catalan_number(8)))
}

fn formula_sweeps() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for id in FormulaId::ALL {
        let reports =
            closed_forms::verify(id, Range::default()).map_err(|e| format!("{id}: {e}"))?;
        if let Some(bad) = reports.iter().find(|r| r.status != Status::Pass) {
            return Err(bad.to_string());
        }
        total += reports.len();
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "{} formulas, {total} instances",
        FormulaId::ALL.len()
    ))
}

fn modular_identities() -> Outcome {
    let start = Instant::now();
    let (mut passed, mut skipped) = (0, 0);
    for check in ModularCheck::ALL {
        let reports = modular::verify(check, None).map_err(|e| format!("{check}: {e}"))?;
        if let Some(bad) = reports.iter().find(|r| r.status == Status::Fail) {
            return Err(bad.to_string());
        }
        passed += reports.iter().filter(|r| r.status == Status::Pass).count();
        skipped += reports.iter().filter(|r| r.status == Status::Skip).count();
        if check == ModularCheck::EvenHooks {
            ensure(
                reports
                    .iter()
                    .any(|r| r.instance.ends_with("totals") && r.status == Status::Pass),
                || "staircase totals missing".into(),
            )?;
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "{} checks, {passed} pass, {skipped} outside hypotheses",
        ModularCheck::ALL.len()
    ))
}

fn classification() -> Outcome {
    for n in 1..=10 {
        let h = homogeneous_scan(n).map_err(|e| e.to_string())?;
        ensure(h.report.consistent(), || h.report.to_string())?;
        let m = multiplicity_free_scan(n).map_err(|e| e.to_string())?;
        if let Some(bad) = m.reports.iter().find(|r| !r.consistent()) {
            return Err(bad.to_string());
        }
    }
    let nine = p(&[3, 3, 3]);
    let mult = sg(&nine, &p(&[5, 2, 2])).map_err(|e| e.to_string())?;
    ensure(mult == 2, || format!("<S²[3³],[5,2,2]> = {mult}"))?;
    let eight = multiplicity_free_scan(8).map_err(|e| e.to_string())?;
    let nine_scan = multiplicity_free_scan(9).map_err(|e| e.to_string())?;
    ensure(
        eight.alt_mf.contains(&p(&[5, 3])) && !eight.sym_mf.contains(&p(&[5, 3])),
        || "(5,3)".into(),
    )?;
    ensure(
        nine_scan.alt_mf.contains(&nine) && !nine_scan.sym_mf.contains(&nine),
        || "(3³)".into(),
    )?;
    Ok("n <= 10 lists exact, <S²[3³],[5,2,2]> = 2, (5,3) and (3³) alt-only".into())
}

fn conjectures() -> Outcome {
    let start = Instant::now();
    let mut ks = vec![2, 3, 4];
    let long = std::env::var("SYMSPLIT_LONG_RUN").is_ok_and(|v| v == "1");
    if long {
        ks.push(5);
    }
    for &k in &ks {
        let c = saxl_refined_check(k).map_err(|e| e.to_string())?;
        if let Some(bad) = c.reports.iter().find(|r| !r.consistent()) {
            return Err(bad.to_string());
        }
    }
    within(start, Duration::from_secs(if long { 1800 } else { 60 }))?;
    let h = hstz_refined_scan(12).map_err(|e| e.to_string())?;
    let d = &h.doubly_optimal_symmetric;
    ensure(
        d.contains(&p(&[5, 3, 2, 1, 1])) && d.contains(&p(&[6, 2, 1, 1, 1, 1])),
        || format!("doubly {d:?}"),
    )?;
    ensure(!d.contains(&p(&[4, 4, 2, 2])), || {
        "(4,4,2,2) doubly optimal".into()
    })?;
    let note = if long {
        ""
    } else {
        " (k=5 needs SYMSPLIT_LONG_RUN=1)"
    };
    Ok(format!("saxl k={ks:?} consistent, hstz n=12 {d:?}{note}"))
}

fn structural() -> Outcome {
    let err = |e: symsplit::Error| e.to_string();
    for n in 1..=8 {
        let chars = enumerate(n, None)
            .map_err(err)?
            .iter()
            .map(character)
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                ensure(
                    inner_product(a, b).map_err(err)? == i128::from(i == j),
                    || format!("orthogonality n={n}"),
                )?;
            }
        }
    }
    for n in 1..=10 {
        let one = trivial(n).map_err(err)?;
        for lambda in enumerate(n, None).map_err(err)? {
            let chi = character(&lambda).map_err(err)?;
            let (s, a) = sym_alt_parts(&chi).map_err(err)?;
            let twisted = chi_power(&chi, 2).map_err(err)?;
            ensure(twisted == s.sub(&a).map_err(err)?, || {
                format!("χ^(2) at {lambda}")
            })?;
            ensure(inner_product(&twisted, &one).map_err(err)? == 1, || {
                format!("ν_2 at {lambda}")
            })?;
            let f = BigInt::from(degree(&lambda));
            let split = square_split(&lambda).map_err(err)?;
            ensure(split.sym.degree() == &f * (&f + 1) / 2, || {
                format!("sym degree at {lambda}")
            })?;
            ensure(split.alt.degree() == &f * (&f - 1) / 2, || {
                format!("alt degree at {lambda}")
            })?;
        }
    }
    for n in 1..=12 {
        for lambda in enumerate(n, None).map_err(err)? {
            let mn = mn_value(&lambda, &Partition::column(n)).map_err(err)?;
            ensure(BigUint::from(mn as u64) == degree(&lambda), || {
                format!("degree at {lambda}")
            })?;
        }
    }
    cache_round_trip()?;
    Ok("orthogonality, χ^(2), ν_2, dimension sums, degrees, cache round trip".into())
}

fn cache_round_trip() -> Result<(), String> {
    let err = |e: symsplit::Error| e.to_string();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cache = TableCache::new(dir.path());
    let mut cold = Vec::new();
    for n in 1..=10 {
        cache.warm(n).map_err(err)?;
        for lambda in enumerate(n, None).map_err(err)? {
            cold.push((*square_split(&lambda).map_err(err)?).clone());
        }
    }
    global().clear();
    clear_split_memo();
    for n in 1..=10 {
        ensure(cache.load_into(global(), n).map_err(err)?, || {
            format!("no table for n={n}")
        })?;
    }
    for s in &cold {
        ensure(*square_split(&s.lambda).map_err(err)? == *s, || {
            format!("cache changed the split of {}", s.lambda)
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("worked example (3,2,2)", worked_example),
        ("catalan identity", catalan),
        ("closed-form sweeps", formula_sweeps),
        ("modular identities", modular_identities),
        ("classification scans", classification),
        ("conjecture consistency", conjectures),
        ("structural suites", structural),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: pass ({t:.2?}) {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({t:.2?}) {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
