//! Graphs on sets of positive integers: the divisibility graph `D(X)`, the
//! common divisor graph `Γ(X)`, the prime vertex graph `Δ(X)` and the
//! bipartite divisor graph `B(X)`, plus component and diameter queries.
//!
//! Size vertices are kept in ascending numeric order, so an edge `{a, b}` of
//! `D(X)` with `a < b` always means `a | b`. For the large sweeps the
//! divisibility pass can run without materializing edges (see
//! [`d_connectivity`]).

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::cycle_type::{enumerate_cycle_types, CycleType};
use crate::error::{capacity, invalid, Error, Result};
use crate::factored::FactoredNat;
use crate::group::Group;
use crate::orders::{class_size_sym, class_sizes_alt, AltClasses};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GraphKind {
    D,
    Gamma,
    Delta,
    B,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::D => "D",
            GraphKind::Gamma => "Gamma",
            GraphKind::Delta => "Delta",
            GraphKind::B => "B",
        })
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "d" => Ok(GraphKind::D),
            "gamma" => Ok(GraphKind::Gamma),
            "delta" => Ok(GraphKind::Delta),
            "b" => Ok(GraphKind::B),
            _ => Err(invalid(format!("unknown graph kind {s:?}; expected D, Gamma, Delta or B"))),
        }
    }
}

/// A graph vertex: a prime (Δ and the prime side of B) or an element of `X*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Prime(u64),
    Size(BigUint),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Prime(p) => write!(f, "{p}"),
            Vertex::Size(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeEntry {
    pub value: BigUint,
    pub factored: FactoredNat,
    /// Labels of the classes (or input lines) attaining this value.
    pub origins: Vec<String>,
}

/// `X* = X \ {1}` in ascending order, with the labels that produced each value.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SizeSet {
    entries: Vec<SizeEntry>,
}

impl SizeSet {
    /// Collapses equal values into one entry and drops 1.
    pub fn from_labelled(items: impl IntoIterator<Item = (FactoredNat, String)>) -> SizeSet {
        let mut by_value: BTreeMap<BigUint, SizeEntry> = BTreeMap::new();
        for (factored, label) in items {
            if factored.is_one() {
                continue;
            }
            let value = factored.to_biguint();
            let entry =
                by_value.entry(value.clone()).or_insert_with(|| SizeEntry { value, factored, origins: Vec::new() });
            if !entry.origins.contains(&label) {
                entry.origins.push(label);
            }
        }
        SizeSet { entries: by_value.into_values().collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[SizeEntry] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &SizeEntry {
        &self.entries[i]
    }

    pub fn position(&self, value: &BigUint) -> Option<usize> {
        self.entries.binary_search_by(|e| e.value.cmp(value)).ok()
    }

    pub fn position_of(&self, x: &FactoredNat) -> Option<usize> {
        self.position(&x.to_biguint())
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.entries.iter().map(|e| Vertex::Size(e.value.clone())).collect()
    }

    /// `ρ(X)`: every prime dividing some element, ascending.
    pub fn primes(&self) -> Vec<u64> {
        let set: BTreeSet<u64> = self.entries.iter().flat_map(|e| e.factored.primes()).collect();
        set.into_iter().collect()
    }
}

/// Class sizes of S_n other than 1, labelled by cycle type.
pub fn size_set_sym(n: u32) -> Result<SizeSet> {
    let mut items = Vec::new();
    for ct in enumerate_cycle_types(n)? {
        items.push((class_size_sym(&ct)?, ct.to_string()));
    }
    Ok(SizeSet::from_labelled(items))
}

/// Class sizes of A_n other than 1. The two halves of a split class carry
/// the labels `<type>+` and `<type>-` and share one vertex.
pub fn size_set_alt(n: u32) -> Result<SizeSet> {
    let mut items = Vec::new();
    for ct in enumerate_cycle_types(n)?.into_iter().filter(CycleType::is_even) {
        match class_sizes_alt(&ct)? {
            AltClasses::Single(s) => items.push((s, ct.to_string())),
            AltClasses::Split(s) => {
                items.push((s.clone(), format!("{ct}+")));
                items.push((s, format!("{ct}-")));
            }
        }
    }
    Ok(SizeSet::from_labelled(items))
}

pub fn size_set(n: u32, group: Group) -> Result<SizeSet> {
    match group {
        Group::Symmetric => size_set_sym(n),
        Group::Alternating => size_set_alt(n),
    }
}

/// Class size of `ct` in the given group (one half for a split A_n class).
pub fn class_size_in(ct: &CycleType, group: Group) -> Result<FactoredNat> {
    match group {
        Group::Symmetric => class_size_sym(ct),
        Group::Alternating => Ok(class_sizes_alt(ct)?.size().clone()),
    }
}

/// Undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGraph {
    kind: GraphKind,
    vertices: Vec<Vertex>,
    adjacency: Vec<Vec<u32>>,
}

impl UGraph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(
        kind: GraphKind,
        vertices: Vec<Vertex>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<UGraph> {
        let n = vertices.len();
        let mut adjacency = vec![Vec::new(); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(invalid(format!("edge ({a}, {b}) out of range for {n} vertices")));
            }
            if a == b {
                return Err(invalid(format!("loop at vertex {a}")));
            }
            adjacency[a].push(b as u32);
            adjacency[b].push(a as u32);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(UGraph { kind, vertices, adjacency })
    }

    /// Builds from upper-triangular neighbour lists (`upper[i]` holds `j > i`, ascending).
    fn from_upper(kind: GraphKind, vertices: Vec<Vertex>, upper: Vec<Vec<u32>>) -> UGraph {
        let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); vertices.len()];
        for (i, row) in upper.iter().enumerate() {
            for &j in row {
                adjacency[j as usize].push(i as u32);
            }
        }
        // lower neighbours were pushed in ascending i, upper ones are already sorted
        for (list, row) in adjacency.iter_mut().zip(upper) {
            list.extend(row);
        }
        UGraph { kind, vertices, adjacency }
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&(b as u32)).is_ok()
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.vertices.iter().position(|w| w == v)
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, list)| list.iter().filter(move |&&j| j as usize > i).map(move |&j| (i, j as usize)))
    }

    pub fn is_null(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphLimits {
    /// Materialized edge budget; building a larger graph is refused.
    pub max_edges: u64,
}

impl Default for GraphLimits {
    fn default() -> Self {
        GraphLimits { max_edges: 25_000_000 }
    }
}

/// Exponent vectors packed into 8-bit lanes so that `a | b` is one
/// subtract-and-mask per 64-bit word. Each lane holds an exponent ≤ 127; the
/// lane's top bit is a guard.
struct PackedExponents {
    stride: usize,
    words: Vec<u64>,
}

const GUARD: u64 = 0x8080_8080_8080_8080;

impl PackedExponents {
    fn new(set: &SizeSet) -> Option<Self> {
        let primes = set.primes();
        let lane: BTreeMap<u64, usize> = primes.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let stride = primes.len().div_ceil(8).max(1);
        let mut words = vec![0u64; stride * set.len()];
        for (i, entry) in set.entries().iter().enumerate() {
            for &(p, e) in entry.factored.factors() {
                if e > 127 {
                    return None;
                }
                let l = lane[&p];
                words[i * stride + l / 8] |= (e as u64) << (8 * (l % 8));
            }
        }
        Some(PackedExponents { stride, words })
    }

    #[inline]
    fn divides(&self, a: usize, b: usize) -> bool {
        let wa = &self.words[a * self.stride..(a + 1) * self.stride];
        let wb = &self.words[b * self.stride..(b + 1) * self.stride];
        wa.iter().zip(wb).all(|(&x, &y)| ((y | GUARD) - x) & GUARD == GUARD)
    }
}

enum DivisibilityTest<'a> {
    Packed(PackedExponents),
    Plain(&'a SizeSet),
}

impl<'a> DivisibilityTest<'a> {
    fn new(set: &'a SizeSet) -> Self {
        match PackedExponents::new(set) {
            Some(p) => DivisibilityTest::Packed(p),
            None => DivisibilityTest::Plain(set),
        }
    }

    /// `x_a | x_b`.
    #[inline]
    fn divides(&self, a: usize, b: usize) -> bool {
        match self {
            DivisibilityTest::Packed(p) => p.divides(a, b),
            DivisibilityTest::Plain(s) => s.get(a).factored.divides(&s.get(b).factored),
        }
    }
}

/// Runs `related(i, j)` over all pairs `i < j` in parallel and collects the
/// upper-triangular neighbour lists, refusing once the edge budget is passed.
fn pairwise_upper<F>(len: usize, limits: &GraphLimits, related: F) -> Result<Vec<Vec<u32>>>
where
    F: Fn(usize, usize) -> bool + Sync,
{
    let count = AtomicU64::new(0);
    let over = AtomicBool::new(false);
    let rows: Vec<Vec<u32>> = (0..len)
        .into_par_iter()
        .map(|i| {
            if over.load(Ordering::Relaxed) {
                return Vec::new();
            }
            let row: Vec<u32> = (i + 1..len).filter(|&j| related(i, j)).map(|j| j as u32).collect();
            if count.fetch_add(row.len() as u64, Ordering::Relaxed) + row.len() as u64 > limits.max_edges {
                over.store(true, Ordering::Relaxed);
            }
            row
        })
        .collect();
    if over.load(Ordering::Relaxed) {
        return Err(capacity(format!("graph on {len} vertices exceeds the edge budget of {}", limits.max_edges)));
    }
    Ok(rows)
}

/// `D(X)`: `a ~ b` iff one divides the other.
pub fn build_d(set: &SizeSet) -> Result<UGraph> {
    build_d_with(set, &GraphLimits::default())
}

pub fn build_d_with(set: &SizeSet, limits: &GraphLimits) -> Result<UGraph> {
    let test = DivisibilityTest::new(set);
    let upper = pairwise_upper(set.len(), limits, |i, j| test.divides(i, j))?;
    Ok(UGraph::from_upper(GraphKind::D, set.vertices(), upper))
}

/// `Γ(X)`: `a ~ b` iff `gcd(a, b) > 1`.
pub fn build_gamma(set: &SizeSet) -> Result<UGraph> {
    build_gamma_with(set, &GraphLimits::default())
}

pub fn build_gamma_with(set: &SizeSet, limits: &GraphLimits) -> Result<UGraph> {
    let primes = set.primes();
    let words = primes.len().div_ceil(64).max(1);
    let index: BTreeMap<u64, usize> = primes.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut masks = vec![0u64; words * set.len()];
    for (i, e) in set.entries().iter().enumerate() {
        for p in e.factored.primes() {
            let k = index[&p];
            masks[i * words + k / 64] |= 1 << (k % 64);
        }
    }
    let upper =
        pairwise_upper(set.len(), limits, |i, j| (0..words).any(|w| masks[i * words + w] & masks[j * words + w] != 0))?;
    Ok(UGraph::from_upper(GraphKind::Gamma, set.vertices(), upper))
}

/// `Δ(X)`: vertices `ρ(X)`, `p ~ q` iff `pq` divides a single element.
pub fn build_delta(set: &SizeSet) -> Result<UGraph> {
    let primes = set.primes();
    let index: BTreeMap<u64, usize> = primes.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut edges = BTreeSet::new();
    for e in set.entries() {
        let ps: Vec<usize> = e.factored.primes().map(|p| index[&p]).collect();
        for (a, &i) in ps.iter().enumerate() {
            for &j in &ps[a + 1..] {
                edges.insert((i, j));
            }
        }
    }
    UGraph::from_edges(GraphKind::Delta, primes.into_iter().map(Vertex::Prime).collect(), edges)
}

/// `B(X)`: primes `ρ(X)` first, then the elements of `X*`; `p ~ x` iff `p | x`.
pub fn build_b(set: &SizeSet) -> Result<UGraph> {
    let primes = set.primes();
    let index: BTreeMap<u64, usize> = primes.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let offset = primes.len();
    let mut edges = Vec::new();
    for (x, e) in set.entries().iter().enumerate() {
        edges.extend(e.factored.primes().map(|p| (index[&p], offset + x)));
    }
    let mut vertices: Vec<Vertex> = primes.into_iter().map(Vertex::Prime).collect();
    vertices.extend(set.vertices());
    UGraph::from_edges(GraphKind::B, vertices, edges)
}

pub fn build(kind: GraphKind, set: &SizeSet, limits: &GraphLimits) -> Result<UGraph> {
    match kind {
        GraphKind::D => build_d_with(set, limits),
        GraphKind::Gamma => build_gamma_with(set, limits),
        GraphKind::Delta => build_delta(set),
        GraphKind::B => build_b(set),
    }
}

/// Components of a graph, in canonical order: vertices sorted within each
/// component, components sorted by their least vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub components: Vec<Vec<Vertex>>,
    /// Per-component diameters, aligned with `components`; `None` when not computed.
    pub diameters: Option<Vec<u32>>,
    pub isolated: Vec<Vertex>,
    /// The graph has no vertices at all.
    pub null_graph: bool,
}

impl ComponentReport {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Largest component diameter; 0 for the null graph. `None` if diameters were not computed.
    pub fn overall_diameter(&self) -> Option<u32> {
        self.diameters.as_ref().map(|d| d.iter().copied().max().unwrap_or(0))
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    /// Index of the largest component (first one on ties).
    pub fn largest(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, c) in self.components.iter().enumerate() {
            if best.is_none_or(|b| c.len() > self.components[b].len()) {
                best = Some(i);
            }
        }
        best
    }

    /// Whether every component other than the largest is a single vertex.
    pub fn others_are_k1(&self) -> bool {
        match self.largest() {
            None => true,
            Some(l) => self.components.iter().enumerate().all(|(i, c)| i == l || c.len() == 1),
        }
    }
}

/// Canonical component index lists: each sorted by vertex key, ordered by least key.
pub fn component_indices(g: &UGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in g.neighbors(v) {
                let w = w as usize;
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_by(|&a, &b| g.vertices[a].cmp(&g.vertices[b]));
        out.push(comp);
    }
    out.sort_by(|a, b| g.vertices[a[0]].cmp(&g.vertices[b[0]]));
    out
}

/// Greatest BFS distance from `source` (within its component).
pub fn eccentricity(g: &UGraph, source: usize) -> u32 {
    let mut dist = vec![u32::MAX; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    let mut far = 0;
    while let Some(v) = queue.pop_front() {
        let d = dist[v];
        far = far.max(d);
        for &w in g.neighbors(v) {
            let w = w as usize;
            if dist[w] == u32::MAX {
                dist[w] = d + 1;
                queue.push_back(w);
            }
        }
    }
    far
}

/// Components with per-component diameters (BFS from every vertex).
/// An isolated vertex has diameter 0.
pub fn components(g: &UGraph) -> ComponentReport {
    let comps = component_indices(g);
    let ecc: Vec<u32> = (0..g.vertex_count()).into_par_iter().map(|v| eccentricity(g, v)).collect();
    let diameters = comps.iter().map(|c| c.iter().map(|&v| ecc[v]).max().unwrap_or(0)).collect();
    report_from_indices(g, comps, Some(diameters))
}

/// Components without the all-pairs diameter pass.
pub fn components_without_diameters(g: &UGraph) -> ComponentReport {
    let comps = component_indices(g);
    report_from_indices(g, comps, None)
}

fn report_from_indices(g: &UGraph, comps: Vec<Vec<usize>>, diameters: Option<Vec<u32>>) -> ComponentReport {
    let mut isolated: Vec<Vertex> =
        (0..g.vertex_count()).filter(|&v| g.degree(v) == 0).map(|v| g.vertices[v].clone()).collect();
    isolated.sort();
    ComponentReport {
        components: comps.iter().map(|c| c.iter().map(|&v| g.vertices[v].clone()).collect()).collect(),
        diameters,
        isolated,
        null_graph: g.is_null(),
    }
}

struct DisjointSets {
    parent: Vec<u32>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n as u32).collect() }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    /// Keeps the smaller index as the root.
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }
}

/// Connectivity of `D(X)` computed without storing edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connectivity {
    pub edge_count: u64,
    pub degree: Vec<u32>,
    /// Component id per vertex; ids are numbered by least member, from 0.
    pub component_of: Vec<u32>,
}

impl Connectivity {
    pub fn component_count(&self) -> usize {
        self.component_of.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
    }

    pub fn isolated(&self) -> Vec<usize> {
        (0..self.degree.len()).filter(|&v| self.degree[v] == 0).collect()
    }

    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.component_count()];
        for (v, &c) in self.component_of.iter().enumerate() {
            out[c as usize].push(v);
        }
        out
    }

    /// Same shape as [`components_without_diameters`] on the materialized graph.
    pub fn report(&self, set: &SizeSet) -> ComponentReport {
        let vertices = set.vertices();
        ComponentReport {
            components: self.members().iter().map(|c| c.iter().map(|&v| vertices[v].clone()).collect()).collect(),
            diameters: None,
            isolated: self.isolated().into_iter().map(|v| vertices[v].clone()).collect(),
            null_graph: set.is_empty(),
        }
    }
}

/// Degrees, edge count and components of `D(X)` via a parallel pairwise pass
/// feeding per-worker union-find forests. Identical output for any thread count.
pub fn d_connectivity(set: &SizeSet) -> Connectivity {
    let len = set.len();
    let test = DivisibilityTest::new(set);
    let shards = (rayon::current_num_threads() * 4).clamp(1, len.max(1));
    let partials: Vec<(DisjointSets, Vec<u32>, u64)> = (0..shards)
        .into_par_iter()
        .map(|shard| {
            let mut dsu = DisjointSets::new(len);
            let mut degree = vec![0u32; len];
            let mut edges = 0u64;
            for i in (shard..len).step_by(shards) {
                for j in i + 1..len {
                    if test.divides(i, j) {
                        degree[i] += 1;
                        degree[j] += 1;
                        edges += 1;
                        dsu.union(i as u32, j as u32);
                    }
                }
            }
            (dsu, degree, edges)
        })
        .collect();

    let mut dsu = DisjointSets::new(len);
    let mut degree = vec![0u32; len];
    let mut edge_count = 0;
    for (mut local, deg, edges) in partials {
        edge_count += edges;
        for v in 0..len {
            degree[v] += deg[v];
            let root = local.find(v as u32);
            dsu.union(v as u32, root);
        }
    }
    let mut ids = BTreeMap::new();
    let component_of = (0..len as u32)
        .map(|v| {
            let root = dsu.find(v);
            let next = ids.len() as u32;
            *ids.entry(root).or_insert(next)
        })
        .collect();
    Connectivity { edge_count, degree, component_of }
}
