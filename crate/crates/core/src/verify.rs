//! Executable checks for the structural results on `D(S_n)` and `D(A_n)`:
//! which vertices are isolated, how many components there are, the proved
//! diameter bounds, the open diameter-4 conjecture (report only), and the
//! reproduction of the small-degree pictures against the brute-force oracle.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cycle_type::{enumerate_cycle_types, CycleType};
use crate::error::{capacity, invalid, Error, Result};
use crate::factored::{primes_up_to, FactoredNat};
use crate::graph::{build_d, class_size_in, components, d_connectivity, size_set, ComponentReport, SizeSet, UGraph};
use crate::group::Group;
use crate::oracle::{self, brute_centralizer_order, brute_class_sizes, brute_class_sizes_capped, OracleMode, Perm};
use crate::orders::{
    centralizer_order_alt, centralizer_order_sym, class_size_sym, class_sizes_alt, verify_lemma11, verify_lemma2,
    verify_lemma8, verify_partition_identities,
};
use crate::report::{Verdict, VerdictReport, Witness};

/// Default degree ceilings. Raising them is allowed but costs quadratic time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    pub max_build_n: u32,
    pub max_diameter_n: u32,
    pub max_oracle_n: u32,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { max_build_n: 40, max_diameter_n: 25, max_oracle_n: oracle::TALLY_CAP }
    }
}

fn component_json(report: &ComponentReport) -> Value {
    Value::Array(
        report
            .components
            .iter()
            .map(|c| Value::Array(c.iter().map(|v| Value::String(v.to_string())).collect()))
            .collect(),
    )
}

/// Strips the `+`/`-` suffix of a split half and parses the cycle type.
fn origin_type(label: &str) -> Option<CycleType> {
    label.trim_end_matches(['+', '-']).parse().ok()
}

/// Shared check behind both isolation theorems: the isolated vertices of
/// `D(G)` are exactly the class sizes of p-cycles with `p` prime and
/// `p >= n - slack`, and everything else is one component.
fn check_isolation(claim: &str, n: u32, group: Group, slack: u32) -> Result<VerdictReport> {
    let start = Instant::now();
    let mut report = VerdictReport::new(claim, Some(group), vec![n]);
    let set = size_set(n, group)?;
    let conn = d_connectivity(&set);

    let mut expected = BTreeSet::new();
    for p in primes_up_to(n as u64).into_iter().filter(|&p| p + slack as u64 >= n as u64) {
        let ct = CycleType::single_cycle(n, p as u32)?;
        if group == Group::Alternating && !ct.is_even() {
            continue;
        }
        let size = class_size_in(&ct, group)?;
        let v = set.position_of(&size).ok_or_else(|| Error::Internal(format!("no vertex for the {p}-cycle class")))?;
        expected.insert(v);
    }
    let isolated: BTreeSet<usize> = conn.isolated().into_iter().collect();
    if isolated != expected {
        let diff: Vec<String> =
            isolated.symmetric_difference(&expected).map(|&v| set.get(v).value.to_string()).collect();
        report.fail_once(Witness::new(n, "isolated vertices differ from the long prime cycles").with_sizes(diff));
    }

    // the same vertices, found through prime divisibility of centralizer orders
    let primes: Vec<u64> = primes_up_to(n as u64).into_iter().filter(|&p| p + slack as u64 >= n as u64).collect();
    for (v, entry) in set.entries().iter().enumerate() {
        let mut flagged = false;
        for ct in entry.origins.iter().filter_map(|l| origin_type(l)) {
            let centralizer = match group {
                Group::Symmetric => centralizer_order_sym(&ct),
                Group::Alternating => centralizer_order_alt(&ct)?,
            };
            flagged |= primes.iter().any(|&p| centralizer.exponent(p) > 0);
        }
        if flagged != isolated.contains(&v) {
            report.fail_once(
                Witness::new(n, format!("prime criterion says {flagged}, graph says {}", !flagged))
                    .with_sizes([&entry.value]),
            );
        }
    }

    let rest: BTreeSet<u32> = (0..set.len()).filter(|v| !isolated.contains(v)).map(|v| conn.component_of[v]).collect();
    if rest.len() > 1 {
        report.fail_once(Witness::new(n, format!("non-isolated vertices fall into {} components", rest.len())));
    }
    report.record("vertices", set.len());
    report.record("edges", conn.edge_count);
    report.record("components", conn.component_count());
    report.record("isolated", isolated.iter().map(|&v| set.get(v).value.to_string()).collect::<Vec<_>>());
    Ok(report.timed_since(start))
}

/// For `n > 6`: the p-cycle classes with `p >= n - 1` prime are the isolated
/// vertices of `D(S_n)`, and all other vertices form a single component.
pub fn verify_theorem9(n: u32) -> Result<VerdictReport> {
    if n <= 6 {
        return Err(invalid(format!("theorem9 requires n > 6, got {n}")));
    }
    check_isolation("theorem9", n, Group::Symmetric, 1)
}

/// For `n >= 9`: the p-cycle classes with `p >= n - 2` prime are the
/// isolated vertices of `D(A_n)`, and all other vertices form a single component.
pub fn verify_theorem13(n: u32) -> Result<VerdictReport> {
    if n < 9 {
        return Err(invalid(format!("theorem13 requires n >= 9, got {n}")));
    }
    check_isolation("theorem13", n, Group::Alternating, 2)
}

fn check_component_bound(claim: &str, n: u32, group: Group, max_components: usize) -> Result<VerdictReport> {
    let start = Instant::now();
    let mut report = VerdictReport::new(claim, Some(group), vec![n]);
    let set = size_set(n, group)?;
    let summary = d_connectivity(&set).report(&set);
    let count = summary.component_count();
    if count > max_components {
        report.fail_once(Witness::new(n, format!("{count} components, at most {max_components} allowed")));
    } else if count > 1 && !summary.others_are_k1() {
        report.fail_once(
            Witness::new(n, "a component other than the largest has more than one vertex")
                .with_sizes(summary.component_sizes()),
        );
    }
    report.record("components", count);
    report.record("component_sizes", summary.component_sizes());
    Ok(report.timed_since(start))
}

/// `D(S_n)` has at most two components, and when disconnected one of them is K_1.
pub fn verify_corollary2(n: u32) -> Result<VerdictReport> {
    check_component_bound("corollary2", n, Group::Symmetric, 2)
}

/// `D(A_n)` has at most three components, and when disconnected every
/// component but the largest is K_1.
pub fn verify_corollary14(n: u32) -> Result<VerdictReport> {
    check_component_bound("corollary14", n, Group::Alternating, 3)
}

/// `D(G)` with sizes read from the brute-force oracle instead of the formulas.
fn oracle_size_set(n: u32, group: Group) -> Result<SizeSet> {
    let classes = match group {
        Group::Symmetric => brute_class_sizes(n, false, OracleMode::Tally)?,
        // orbit mode up to the enumeration cap, so A_8 is included
        Group::Alternating => brute_class_sizes_capped(n, true, OracleMode::Orbits, oracle::TALLY_CAP)?,
    };
    let mut items = Vec::with_capacity(classes.len());
    for (ct, size) in classes {
        items.push((FactoredNat::from_u64(size)?, ct.to_string()));
    }
    Ok(SizeSet::from_labelled(items))
}

fn same_graph(a: &UGraph, b: &UGraph) -> bool {
    a.vertices() == b.vertices() && a.edges().eq(b.edges())
}

/// Rebuilds the pictured graphs `D(S_3..5)` and `D(A_4..8)`, checks their
/// component structure, and checks each against the oracle-built graph.
pub fn reproduce_figures() -> Result<VerdictReport> {
    let start = Instant::now();
    let mut report = VerdictReport::new("figures", None, (3..=8).collect());
    let cases: Vec<(Group, u32)> =
        (3..=5).map(|n| (Group::Symmetric, n)).chain((4..=8).map(|n| (Group::Alternating, n))).collect();
    let built: Vec<Result<(Group, u32, UGraph, UGraph)>> = cases
        .par_iter()
        .map(|&(group, n)| {
            let formula = build_d(&size_set(n, group)?)?;
            let brute = build_d(&oracle_size_set(n, group)?)?;
            Ok((group, n, formula, brute))
        })
        .collect();
    let mut pictures = serde_json::Map::new();
    for item in built {
        let (group, n, formula, brute) = item?;
        let summary = components(&formula);
        let count = summary.component_count();
        if !same_graph(&formula, &brute) {
            report.fail_once(Witness::new(n, format!("D({group}_{n}) differs between formulas and oracle")));
        }
        let ok = match group {
            Group::Symmetric => count == 2 && summary.components.iter().any(|c| c.len() == 1),
            Group::Alternating => count <= 3 && summary.others_are_k1(),
        };
        if !ok {
            report.fail_once(
                Witness::new(n, format!("D({group}_{n}) has unexpected component structure"))
                    .with_sizes(summary.component_sizes()),
            );
        }
        pictures.insert(
            format!("D({group}_{n})"),
            json!({
                "components": component_json(&summary),
                "edges": formula.edge_count(),
                "diameter": summary.overall_diameter(),
            }),
        );
    }
    report.record("graphs", Value::Object(pictures));
    Ok(report.timed_since(start))
}

fn diameter_of(n: u32, group: Group, max_n: u32) -> Result<ComponentReport> {
    if n > max_n {
        return Err(capacity(format!("diameter computation is capped at n = {max_n}, got n = {n}")));
    }
    Ok(components(&build_d(&size_set(n, group)?)?))
}

/// Checks `diam(D(S_n)) <= 8` or `diam(D(A_n)) <= 10`.
pub fn diameter_bounds(n: u32, group: Group, max_n: u32) -> Result<VerdictReport> {
    let start = Instant::now();
    let mut report = VerdictReport::new("diameter-bounds", Some(group), vec![n]);
    let summary = diameter_of(n, group, max_n)?;
    let diameter = summary.overall_diameter().unwrap_or(0);
    let bound = group.proved_diameter_bound();
    if diameter > bound {
        report.fail_once(Witness::new(n, format!("diameter {diameter} exceeds {bound}")));
    }
    report.record("diameter", diameter);
    report.record("bound", bound);
    report.record("component_diameters", summary.diameters.clone().unwrap_or_default());
    Ok(report.timed_since(start))
}

/// Diameters over a range, flagging any above 4. Never fails.
pub fn conjecture_sweep(ns: &[u32], group: Group, max_n: u32) -> Result<VerdictReport> {
    let start = Instant::now();
    let mut report = VerdictReport::new("conjecture", Some(group), ns.to_vec());
    report.verdict = Verdict::ReportOnly;
    let diameters: Vec<Result<u32>> =
        ns.par_iter().map(|&n| Ok(diameter_of(n, group, max_n)?.overall_diameter().unwrap_or(0))).collect();
    let mut table = serde_json::Map::new();
    let mut candidates = Vec::new();
    for (&n, d) in ns.iter().zip(diameters) {
        let d = d?;
        table.insert(n.to_string(), d.into());
        if d > 4 {
            candidates.push(n);
        }
    }
    report.record("all_at_most_4", candidates.is_empty());
    report.record("diameters", Value::Object(table));
    report.record("candidates", candidates);
    Ok(report.timed_since(start))
}

fn bfs_distances(g: &UGraph, source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].expect("queued vertices have a distance");
        for &w in g.neighbors(v) {
            if dist[w as usize].is_none() {
                dist[w as usize] = Some(d + 1);
                queue.push_back(w as usize);
            }
        }
    }
    dist
}

/// In `D(A_n)`, `n >= 9`, with τ a 3-cycle: a type with exactly one 3-cycle
/// sits on or next to τ's vertex, and a type with at least three fixed
/// points and no 3-cycle is within distance two of it.
pub fn verify_lemma14_15(n: u32) -> Result<VerdictReport> {
    if n < 9 {
        return Err(invalid(format!("lemma14-15 requires n >= 9, got {n}")));
    }
    let start = Instant::now();
    let mut report = VerdictReport::new("lemma14-15", Some(Group::Alternating), vec![n]);
    let set = size_set(n, Group::Alternating)?;
    let g = build_d(&set)?;
    let tau = CycleType::single_cycle(n, 3)?;
    let tau_v = set
        .position_of(&class_size_in(&tau, Group::Alternating)?)
        .ok_or_else(|| Error::Internal("no vertex for the 3-cycles".into()))?;
    let dist = bfs_distances(&g, tau_v);
    let (mut adjacent, mut two_step) = (0u64, 0u64);
    for ct in enumerate_cycle_types(n)?.into_iter().filter(|c| c.is_even() && !c.is_identity()) {
        let limit = if ct.multiplicity_of(3) == 1 {
            adjacent += 1;
            1
        } else if ct.fixed_points() >= 3 && ct.multiplicity_of(3) == 0 {
            two_step += 1;
            2
        } else {
            continue;
        };
        let v = set
            .position_of(&class_size_in(&ct, Group::Alternating)?)
            .ok_or_else(|| Error::Internal(format!("no vertex for {ct}")))?;
        if dist[v].is_none_or(|d| d > limit) {
            report.fail_once(
                Witness::new(n, format!("distance to the 3-cycle vertex is {:?}, limit {limit}", dist[v]))
                    .with_types([ct.clone()]),
            );
        }
    }
    report.record("single_3cycle_types", adjacent);
    report.record("fixed_point_types", two_step);
    Ok(report.timed_since(start))
}

/// The class of `g^m` is the class of `g` or adjacent to it, for every type and `m <= n`.
pub fn verify_remark0(n: u32, group: Group) -> Result<VerdictReport> {
    let start = Instant::now();
    let mut report = VerdictReport::new("remark0", Some(group), vec![n]);
    let set = size_set(n, group)?;
    let g = build_d(&set)?;
    let vertex = |ct: &CycleType| -> Result<Option<usize>> {
        if ct.is_identity() {
            return Ok(None);
        }
        Ok(set.position_of(&class_size_in(ct, group)?))
    };
    let mut checked = 0u64;
    for ct in enumerate_cycle_types(n)? {
        if group == Group::Alternating && !ct.is_even() {
            continue;
        }
        let Some(a) = vertex(&ct)? else { continue };
        for m in 1..=n {
            let powered = ct.power(m)?;
            let Some(b) = vertex(&powered)? else { continue };
            checked += 1;
            if a != b && !g.has_edge(a, b) {
                report.fail_once(
                    Witness::new(n, format!("power m = {m} lands on a non-adjacent vertex"))
                        .with_types([ct.clone(), powered]),
                );
            }
        }
    }
    report.record("pairs_checked", checked);
    Ok(report.timed_since(start))
}

/// Differential test of every closed formula against explicit permutations:
/// class sizes by tally (n <= 8); centralizer orders, A_n centralizers and
/// class splitting by conjugation orbits (n <= 7).
pub fn verify_oracle(n: u32) -> Result<VerdictReport> {
    let start = Instant::now();
    let mut report = VerdictReport::new("oracle", None, vec![n]);
    let types = enumerate_cycle_types(n)?;

    let sym_tally: BTreeMap<CycleType, u64> = brute_class_sizes(n, false, OracleMode::Tally)?.into_iter().collect();
    let alt_tally: BTreeMap<CycleType, u64> = brute_class_sizes(n, true, OracleMode::Tally)?.into_iter().collect();
    for ct in &types {
        let formula = class_size_sym(ct)?.to_biguint();
        if sym_tally.get(ct).map(|&c| formula == c.into()) != Some(true) {
            report
                .fail_once(Witness::new(n, "S_n tally differs").with_types([ct.clone()]).with_sizes([formula.clone()]));
        }
        let brute_even = Perm::with_cycle_type(ct).is_even();
        if brute_even != ct.is_even() {
            report.fail_once(Witness::new(n, "parity differs from inversion count").with_types([ct.clone()]));
        }
        let in_alt = alt_tally.get(ct).copied().unwrap_or(0);
        let expected_alt = if ct.is_even() { formula.clone() } else { 0u32.into() };
        if expected_alt != in_alt.into() {
            report.fail_once(Witness::new(n, "A_n tally differs").with_types([ct.clone()]));
        }
    }
    if sym_tally.len() != types.len() {
        report.fail_once(Witness::new(n, "tally found a different number of types"));
    }
    let mut tests = vec!["tally", "parity"];

    if n <= oracle::ORBIT_CAP {
        tests.extend(["centralizer", "orbits"]);
        let mut alt_orbits: BTreeMap<CycleType, Vec<u64>> = BTreeMap::new();
        for (ct, size) in brute_class_sizes(n, true, OracleMode::Orbits)? {
            alt_orbits.entry(ct).or_default().push(size);
        }
        let sym_orbits = brute_class_sizes(n, false, OracleMode::Orbits)?;
        if sym_orbits.iter().map(|(ct, s)| (ct.clone(), *s)).collect::<BTreeMap<_, _>>() != sym_tally
            || sym_orbits.len() != types.len()
        {
            report.fail_once(Witness::new(n, "S_n conjugation orbits are not the cycle types"));
        }
        for ct in &types {
            let g = Perm::with_cycle_type(ct);
            let brute_sym = brute_centralizer_order(&g, false)?;
            let formula = centralizer_order_sym(ct).to_biguint();
            if formula != brute_sym.into() {
                report.fail_once(
                    Witness::new(n, format!("S_n centralizer: brute {brute_sym}"))
                        .with_types([ct.clone()])
                        .with_sizes([formula]),
                );
            }
            if !ct.is_even() {
                continue;
            }
            let brute_alt = brute_centralizer_order(&g, true)?;
            let formula_alt = centralizer_order_alt(ct)?.to_biguint();
            if formula_alt != brute_alt.into() {
                report.fail_once(
                    Witness::new(n, format!("A_n centralizer: brute {brute_alt}"))
                        .with_types([ct.clone()])
                        .with_sizes([formula_alt]),
                );
            }
            if ct.fixed_points() >= 2 && brute_sym != 2 * brute_alt {
                report.fail_once(Witness::new(n, "fixes two points but C_S != 2 C_A").with_types([ct.clone()]));
            }
            let orbits = alt_orbits.get(ct).cloned().unwrap_or_default();
            let brute_split = orbits.len() == 2 && orbits[0] == orbits[1];
            let alt = class_sizes_alt(ct)?;
            let formula_sizes: Vec<u64> =
                alt.sizes().iter().map(|s| s.to_string().parse().expect("small size")).collect();
            if brute_split != ct.splits_in_alternating()? || formula_sizes != orbits {
                report.fail_once(
                    Witness::new(n, format!("A_n orbits {orbits:?} vs formula {formula_sizes:?}"))
                        .with_types([ct.clone()]),
                );
            }
        }
    }
    report.record("types", types.len());
    report.record("checks", tests);
    Ok(report.timed_since(start))
}

/// Named claims the suite can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    Lemma2,
    Lemma8,
    Lemma11,
    Lemma14_15,
    Remark0,
    PartitionIdentities,
    Theorem9,
    Theorem13,
    Corollary2,
    Corollary14,
    Figures,
    DiameterBounds,
    Conjecture,
    Oracle,
}

impl Claim {
    pub const ALL: [Claim; 14] = [
        Claim::Lemma2,
        Claim::Lemma8,
        Claim::Lemma11,
        Claim::Lemma14_15,
        Claim::Remark0,
        Claim::PartitionIdentities,
        Claim::Theorem9,
        Claim::Theorem13,
        Claim::Corollary2,
        Claim::Corollary14,
        Claim::Figures,
        Claim::DiameterBounds,
        Claim::Conjecture,
        Claim::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Lemma2 => "lemma2",
            Claim::Lemma8 => "lemma8",
            Claim::Lemma11 => "lemma11",
            Claim::Lemma14_15 => "lemma14-15",
            Claim::Remark0 => "remark0",
            Claim::PartitionIdentities => "partition-identities",
            Claim::Theorem9 => "theorem9",
            Claim::Theorem13 => "theorem13",
            Claim::Corollary2 => "corollary2",
            Claim::Corollary14 => "corollary14",
            Claim::Figures => "figures",
            Claim::DiameterBounds => "diameter-bounds",
            Claim::Conjecture => "conjecture",
            Claim::Oracle => "oracle",
        }
    }

    /// Degrees checked when no range is given.
    pub fn default_range(self, budgets: &Budgets) -> RangeInclusive<u32> {
        match self {
            Claim::Lemma2 => 1..=25,
            Claim::Lemma8 | Claim::Theorem9 => 7..=budgets.max_build_n,
            Claim::Lemma11 | Claim::Theorem13 => 9..=budgets.max_build_n,
            Claim::Lemma14_15 => 9..=20,
            Claim::Remark0 => 1..=20,
            Claim::PartitionIdentities => 1..=budgets.max_build_n,
            Claim::Corollary2 => 3..=budgets.max_build_n,
            Claim::Corollary14 => 4..=budgets.max_build_n,
            Claim::Figures => 3..=8,
            Claim::DiameterBounds | Claim::Conjecture => 1..=budgets.max_diameter_n,
            Claim::Oracle => 1..=budgets.max_oracle_n,
        }
    }

    /// Groups the claim is about; claims that fix their own group return one entry.
    fn groups(self, requested: Option<Group>) -> Vec<Option<Group>> {
        match self {
            Claim::Remark0 | Claim::DiameterBounds | Claim::Conjecture => match requested {
                Some(g) => vec![Some(g)],
                None => vec![Some(Group::Symmetric), Some(Group::Alternating)],
            },
            _ => vec![None],
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| invalid(format!("unknown claim {s:?}")))
    }
}

fn check_ceiling(range: &RangeInclusive<u32>, ceiling: u32, what: &str) -> Result<()> {
    if !range.is_empty() && *range.end() > ceiling {
        return Err(capacity(format!("{what} is capped at n = {ceiling}, requested up to {}", range.end())));
    }
    Ok(())
}

/// Runs one claim over a range of degrees (or its default range), one report
/// per degree and group, sorted by `(group, n)`. Degrees run in parallel.
pub fn run_claim(
    claim: Claim,
    range: Option<RangeInclusive<u32>>,
    group: Option<Group>,
    budgets: &Budgets,
) -> Result<Vec<VerdictReport>> {
    let range = range.unwrap_or_else(|| claim.default_range(budgets));
    match claim {
        Claim::Figures => return Ok(vec![reproduce_figures()?]),
        Claim::Conjecture => {
            let ns: Vec<u32> = range.collect();
            return claim
                .groups(group)
                .into_iter()
                .map(|g| conjecture_sweep(&ns, g.expect("conjecture has a group"), budgets.max_diameter_n))
                .collect();
        }
        Claim::DiameterBounds => check_ceiling(&range, budgets.max_diameter_n, "diameter computation")?,
        Claim::Oracle => check_ceiling(&range, budgets.max_oracle_n.min(oracle::TALLY_CAP), "the oracle")?,
        Claim::Lemma2 => {}
        _ => check_ceiling(&range, budgets.max_build_n, "graph construction")?,
    }
    let jobs: Vec<(Option<Group>, u32)> =
        claim.groups(group).into_iter().flat_map(|g| range.clone().map(move |n| (g, n))).collect();
    jobs.par_iter()
        .map(|&(g, n)| match claim {
            Claim::Lemma2 => verify_lemma2(n),
            Claim::Lemma8 => verify_lemma8(n),
            Claim::Lemma11 => verify_lemma11(n),
            Claim::Lemma14_15 => verify_lemma14_15(n),
            Claim::Remark0 => verify_remark0(n, g.expect("grouped claim")),
            Claim::PartitionIdentities => verify_partition_identities(n),
            Claim::Theorem9 => verify_theorem9(n),
            Claim::Theorem13 => verify_theorem13(n),
            Claim::Corollary2 => verify_corollary2(n),
            Claim::Corollary14 => verify_corollary14(n),
            Claim::DiameterBounds => diameter_bounds(n, g.expect("grouped claim"), budgets.max_diameter_n),
            Claim::Oracle => verify_oracle(n),
            Claim::Figures | Claim::Conjecture => unreachable!("handled above"),
        })
        .collect()
}
