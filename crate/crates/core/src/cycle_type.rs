//! Cycle types of permutations of `{1, …, n}`.
//!
//! A cycle type is stored as the number of fixed points together with the
//! distinct nontrivial cycle lengths and their multiplicities, sorted by
//! length. Written out it is `[1^t,m_1^k_1,…,m_r^k_r]`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// A part of a cycle type: `multiplicity` cycles of length `length` (≥ 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Part {
    pub length: u32,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    n: u32,
    fixed: u32,
    parts: Vec<Part>,
}

impl CycleType {
    pub fn identity(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(invalid("degree must be at least 1"));
        }
        Ok(CycleType { n, fixed: n, parts: Vec::new() })
    }

    /// Builds a cycle type from `(length, multiplicity)` pairs with lengths ≥ 2.
    /// Pairs may come in any order; repeated lengths are merged.
    pub fn new(n: u32, fixed: u32, parts: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        if n == 0 {
            return Err(invalid("degree must be at least 1"));
        }
        let mut merged = BTreeMap::new();
        for (length, multiplicity) in parts {
            if length < 2 {
                return Err(invalid(format!("cycle length {length} must be at least 2")));
            }
            if multiplicity == 0 {
                return Err(invalid(format!("multiplicity of length {length} is zero")));
            }
            *merged.entry(length).or_insert(0u32) += multiplicity;
        }
        let moved: u64 = merged.iter().map(|(&m, &k)| m as u64 * k as u64).sum();
        if moved + fixed as u64 != n as u64 {
            return Err(invalid(format!("fixed points {fixed} plus moved points {moved} do not sum to {n}")));
        }
        let parts = merged.into_iter().map(|(length, multiplicity)| Part { length, multiplicity }).collect();
        Ok(CycleType { n, fixed, parts })
    }

    /// Cycle type with the given cycle lengths; 1s are fixed points and `n` is their sum.
    pub fn from_lengths(lengths: &[u32]) -> Result<Self> {
        if lengths.contains(&0) {
            return Err(invalid("cycle lengths must be positive"));
        }
        let n: u64 = lengths.iter().map(|&l| l as u64).sum();
        let n = u32::try_from(n).map_err(|_| invalid("degree overflows u32"))?;
        let fixed = lengths.iter().filter(|&&l| l == 1).count() as u32;
        CycleType::new(n, fixed, lengths.iter().filter(|&&l| l > 1).map(|&l| (l, 1)))
    }

    /// The type of a single `length`-cycle in degree `n`, i.e. `[1^(n-length), length^1]`.
    pub fn single_cycle(n: u32, length: u32) -> Result<Self> {
        if length > n {
            return Err(invalid(format!("a {length}-cycle does not fit in degree {n}")));
        }
        if length < 2 {
            return CycleType::identity(n);
        }
        CycleType::new(n, n - length, [(length, 1)])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn fixed_points(&self) -> u32 {
        self.fixed
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn is_identity(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of the only nontrivial cycle, if the type is a single cycle.
    pub fn single_cycle_length(&self) -> Option<u32> {
        match self.parts.as_slice() {
            [Part { length, multiplicity: 1 }] => Some(*length),
            _ => None,
        }
    }

    /// All cycle lengths in ascending order, fixed points included as 1s.
    pub fn lengths(&self) -> impl Iterator<Item = u32> + '_ {
        std::iter::repeat_n(1, self.fixed as usize)
            .chain(self.parts.iter().flat_map(|p| std::iter::repeat_n(p.length, p.multiplicity as usize)))
    }

    pub fn multiplicity_of(&self, length: u32) -> u32 {
        if length == 1 {
            return self.fixed;
        }
        self.parts.iter().find(|p| p.length == length).map_or(0, |p| p.multiplicity)
    }

    pub fn parity(&self) -> Parity {
        let transpositions: u64 = self.parts.iter().map(|p| p.multiplicity as u64 * (p.length as u64 - 1)).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// Whether the S_n-class of this (even) type breaks into two A_n-classes:
    /// all cycle lengths odd and distinct, and at most one fixed point.
    /// S_1 has no odd elements, so its identity never splits.
    pub fn splits_in_alternating(&self) -> Result<bool> {
        if !self.is_even() {
            return Err(invalid(format!("{self} is an odd type and does not lie in A_{}", self.n)));
        }
        Ok(self.n > 1 && self.fixed <= 1 && self.parts.iter().all(|p| p.multiplicity == 1 && p.length % 2 == 1))
    }

    /// Cycle type of the `m`-th power. A cycle of length `L` breaks into
    /// `gcd(L, m)` cycles of length `L / gcd(L, m)`.
    pub fn power(&self, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(invalid("power exponent must be at least 1"));
        }
        let mut fixed = self.fixed;
        let mut parts = Vec::with_capacity(self.parts.len());
        for p in &self.parts {
            let g = gcd(p.length, m);
            let length = p.length / g;
            let count = p.multiplicity * g;
            if length == 1 {
                fixed += count;
            } else {
                parts.push((length, count));
            }
        }
        CycleType::new(self.n, fixed, parts)
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl PartialOrd for CycleType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then lexicographic on the ascending list of all cycle lengths.
impl Ord for CycleType {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n.cmp(&other.n).then_with(|| self.lengths().cmp(other.lengths()))
    }
}

/// Every cycle type of degree `n`, one per integer partition, identity first,
/// in lexicographic order of the ascending part lists.
pub fn enumerate_cycle_types(n: u32) -> Result<Vec<CycleType>> {
    if n == 0 {
        return Err(invalid("degree must be at least 1"));
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    partitions_rec(n, 1, &mut stack, &mut out);
    Ok(out
        .into_iter()
        .map(|lengths| CycleType::from_lengths(&lengths).expect("generated partition is valid"))
        .collect())
}

fn partitions_rec(remaining: u32, min_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if remaining == 0 {
        out.push(stack.clone());
        return;
    }
    for part in min_part..=remaining {
        // what is left must be 0 or hold at least one more part >= `part`
        if part != remaining && remaining - part < part {
            continue;
        }
        stack.push(part);
        partitions_rec(remaining - part, part, stack, out);
        stack.pop();
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        let mut first = true;
        if self.fixed > 0 {
            write!(f, "1^{}", self.fixed)?;
            first = false;
        }
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{}^{}", p.length, p.multiplicity)?;
            first = false;
        }
        f.write_str("]")
    }
}

/// Parses the bracket notation, e.g. `[1^2,2^1,3^1]`. A missing `^k` means `k = 1`.
impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| invalid(format!("cycle type {s:?} is not bracketed")))?;
        let mut fixed = 0u32;
        let mut parts = Vec::new();
        for item in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (len, mult) = match item.split_once('^') {
                Some((l, k)) => (l.trim(), k.trim()),
                None => (item, "1"),
            };
            let len: u32 = len.parse().map_err(|_| invalid(format!("bad cycle length in {item:?}")))?;
            let mult: u32 = mult.parse().map_err(|_| invalid(format!("bad multiplicity in {item:?}")))?;
            match len {
                0 => return Err(invalid("cycle length 0")),
                1 => fixed += mult,
                _ => parts.push((len, mult)),
            }
        }
        let n: u64 = fixed as u64 + parts.iter().map(|&(l, k)| l as u64 * k as u64).sum::<u64>();
        let n = u32::try_from(n).map_err(|_| invalid("degree overflows u32"))?;
        CycleType::new(n, fixed, parts)
    }
}

impl Serialize for CycleType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CycleType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
