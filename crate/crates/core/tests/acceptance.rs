//! Acceptance run: ten criteria, one `PASS`/`FAIL` line each. Runs without the
//! libtest harness so the lines are printed on every `cargo test`.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use divgraph::graph::{build_d, components, size_set};
use divgraph::verify::{run_claim, Budgets, Claim};
use divgraph::{Group, VerdictReport};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Sizes of `S_n` classes from plain arithmetic, as the expected picture for the smallest degrees.
fn naive_sym_components(n: u32) -> BTreeSet<BTreeSet<u64>> {
    fn parts(n: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(acc.clone());
        }
        for p in (1..=n.min(max)).rev() {
            acc.push(p);
            parts(n - p, p, acc, out);
            acc.pop();
        }
    }
    let fact = |k: u32| (1..=k as u64).product::<u64>();
    let mut all = Vec::new();
    parts(n, n, &mut Vec::new(), &mut all);
    let mut xs = BTreeSet::new();
    for p in all {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for m in p {
            *counts.entry(m).or_default() += 1;
        }
        let c: u64 = counts.iter().map(|(&m, &k)| (m as u64).pow(k) * fact(k)).product();
        if fact(n) / c != 1 {
            xs.insert(fact(n) / c);
        }
    }
    // union-find over the divisibility relation
    let xs: Vec<u64> = xs.into_iter().collect();
    let mut root: Vec<usize> = (0..xs.len()).collect();
    fn find(r: &mut [usize], i: usize) -> usize {
        if r[i] != i {
            r[i] = find(r, r[i]);
        }
        r[i]
    }
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[j].is_multiple_of(xs[i]) {
                let (a, b) = (find(&mut root, i), find(&mut root, j));
                root[a] = b;
            }
        }
    }
    let mut comps: BTreeMap<usize, BTreeSet<u64>> = BTreeMap::new();
    for (i, &x) in xs.iter().enumerate() {
        let r = find(&mut root, i);
        comps.entry(r).or_default().insert(x);
    }
    comps.into_values().collect()
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    if took > limit {
        return Err(format!("took {took:?}, limit {limit:?}"));
    }
    Ok(())
}

fn all_pass(reports: &[VerdictReport]) -> Result<usize, String> {
    match reports.iter().find(|r| r.is_fail()) {
        Some(r) => Err(format!("{} failed: {}", r.claim, serde_json::to_string(&r.witness).unwrap())),
        None => Ok(reports.len()),
    }
}

fn claim(c: Claim, from: u32, to: u32) -> Result<Vec<VerdictReport>, String> {
    run_claim(c, Some(from..=to), None, &Budgets::default()).map_err(|e| e.to_string())
}

fn figure_one() -> Outcome {
    let start = Instant::now();
    for n in 3..=5 {
        let g = build_d(&size_set(n, Group::Symmetric).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let report = components(&g);
        let got: BTreeSet<BTreeSet<u64>> =
            report.components.iter().map(|c| c.iter().map(|v| v.to_string().parse().unwrap()).collect()).collect();
        if got != naive_sym_components(n) {
            return Err(format!("D(S_{n}) components {got:?}"));
        }
        if report.component_count() != 2 || !report.components.iter().any(|c| c.len() == 1) {
            return Err(format!("D(S_{n}) sizes {:?}", report.component_sizes()));
        }
    }
    within(start, Duration::from_secs(1))?;
    Ok("D(S_3), D(S_4), D(S_5): two components with a K_1".into())
}

fn figure_two() -> Outcome {
    let start = Instant::now();
    let reports = run_claim(Claim::Figures, None, None, &Budgets::default()).map_err(|e| e.to_string())?;
    all_pass(&reports)?;
    within(start, Duration::from_secs(120))?;
    Ok("D(A_4)..D(A_8): <= 3 components, others K_1, formula graph == oracle graph".into())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let n = all_pass(&claim(Claim::Oracle, 1, 8)?)?;
    within(start, Duration::from_secs(300))?;
    Ok(format!("{n} degrees, zero mismatches"))
}

fn isolation(c: Claim, from: u32) -> Outcome {
    let start = Instant::now();
    let n = all_pass(&claim(c, from, 40)?)?;
    within(start, Duration::from_secs(1800))?;
    Ok(format!("n = {from}..40 ({n} degrees)"))
}

fn lemma_two() -> Outcome {
    let start = Instant::now();
    let reports = claim(Claim::Lemma2, 1, 25)?;
    all_pass(&reports)?;
    let checked: u64 = reports.iter().map(|r| r.data["types_checked"].as_u64().unwrap_or(0)).sum();
    if checked == 0 {
        return Err("no cycle types checked".into());
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("x <= 25, {checked} fixed-point-free types"))
}

fn prime_criteria() -> Outcome {
    all_pass(&claim(Claim::Lemma8, 7, 40)?)?;
    all_pass(&claim(Claim::Lemma11, 9, 40)?)?;
    Ok("S_n for n = 7..40, A_n for n = 9..40".into())
}

fn partition_identities() -> Outcome {
    let n = all_pass(&claim(Claim::PartitionIdentities, 1, 40)?)?;
    Ok(format!("sums equal n! and n!/2 for {n} degrees"))
}

fn diameters() -> Outcome {
    all_pass(&claim(Claim::DiameterBounds, 1, 25)?)?;
    let conjecture = claim(Claim::Conjecture, 1, 25)?;
    let note: Vec<String> = conjecture
        .iter()
        .map(|r| {
            format!("{}: all <= 4 = {}", r.group.map(|g| g.to_string()).unwrap_or_default(), r.data["all_at_most_4"])
        })
        .collect();
    Ok(format!("S_n <= 8, A_n <= 10 for n <= 25 (report only: {})", note.join(", ")))
}

fn remark_zero() -> Outcome {
    let n = all_pass(&claim(Claim::Remark0, 1, 20)?)?;
    Ok(format!("powers equal or adjacent, {n} (group, n) cases"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 figure-1", figure_one),
        ("2 figure-2", figure_two),
        ("3 oracle-equivalence", oracle_equivalence),
        ("4 theorem-9", || isolation(Claim::Theorem9, 7)),
        ("5 theorem-13", || isolation(Claim::Theorem13, 9)),
        ("6 lemma-2", lemma_two),
        ("7 prime-criteria", prime_criteria),
        ("8 partition-identities", partition_identities),
        ("9 diameter-bounds", diameters),
        ("10 remark-0", remark_zero),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("acceptance {name:<24} PASS  {detail} [{ms} ms]"),
            Err(why) => {
                failed += 1;
                println!("acceptance {name:<24} FAIL  {why} [{ms} ms]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
