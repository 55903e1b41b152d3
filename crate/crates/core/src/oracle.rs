//! Brute-force ground truth from explicit permutations.
//!
//! Nothing here calls into [`crate::orders`]: class sizes, centralizer
//! orders and class splitting are all obtained by enumerating group
//! elements, so the results can be compared against the closed formulas.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::cycle_type::CycleType;
use crate::error::{capacity, invalid, Result};

/// Largest degree for enumeration and per-type tallies.
pub const TALLY_CAP: u32 = 8;
/// Largest degree for conjugation orbits and centralizer counts.
pub const ORBIT_CAP: u32 = 7;

/// A permutation of `{1, …, n}` in one-line notation, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { images: (0..n as u8).collect() }
    }

    /// From 1-based images, e.g. `[2, 1, 3]` for the transposition (1 2).
    pub fn from_images(images: &[u32]) -> Result<Perm> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(invalid("permutation degree too large"));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x as usize > n || seen[x as usize - 1] {
                return Err(invalid(format!("{images:?} is not a permutation of 1..={n}")));
            }
            seen[x as usize - 1] = true;
        }
        Ok(Perm { images: images.iter().map(|&x| (x - 1) as u8).collect() })
    }

    /// A permutation with the given cycle type: cycles laid out on consecutive points.
    pub fn with_cycle_type(ct: &CycleType) -> Perm {
        let n = ct.n() as usize;
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut start = 0usize;
        for len in ct.lengths() {
            let len = len as usize;
            for k in 0..len {
                images[start + k] = (start + (k + 1) % len) as u8;
            }
            start += len;
        }
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of the 1-based point `x`.
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize - 1] as u32 + 1
    }

    /// `self` followed by `other`: `x ↦ other(self(x))`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Perm { images }
    }

    /// `x⁻¹ g x` with `g = self`.
    pub fn conjugate_by(&self, x: &Perm) -> Perm {
        x.inverse().then(self).then(x)
    }

    /// Cycle lengths (including 1s), read off by walking the permutation.
    pub fn cycle_lengths(&self) -> Vec<u32> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_lengths(&self.cycle_lengths()).expect("a permutation has a valid cycle type")
    }

    /// Sign from the inversion count, independent of the cycle structure.
    pub fn is_even(&self) -> bool {
        let mut inversions = 0usize;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        inversions.is_multiple_of(2)
    }

    /// Lehmer-code rank in `0..n!`.
    fn rank(&self) -> usize {
        let n = self.images.len();
        let mut rank = 0usize;
        for i in 0..n {
            let smaller = self.images[i + 1..].iter().filter(|&&y| y < self.images[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<String> = self.images.iter().map(|&x| (x + 1).to_string()).collect();
        write!(f, "[{}]", images.join(" "))
    }
}

/// Lexicographic walk over all permutations of a given degree.
pub struct GroupElements {
    next: Option<Vec<u8>>,
    alternating: bool,
}

impl Iterator for GroupElements {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        loop {
            let current = self.next.take()?;
            let mut succ = current.clone();
            if next_permutation(&mut succ) {
                self.next = Some(succ);
            }
            let perm = Perm { images: current };
            if !self.alternating || perm.is_even() {
                return Some(perm);
            }
        }
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("a larger element exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

fn check_cap(n: u32, cap: u32, what: &str) -> Result<()> {
    if n == 0 {
        return Err(invalid("degree must be at least 1"));
    }
    if n > cap {
        return Err(capacity(format!("{what} is capped at n = {cap}, got n = {n}")));
    }
    Ok(())
}

/// Every element of S_n (or A_n) exactly once. `n <= 8`.
pub fn enumerate_group(n: u32, alternating: bool) -> Result<GroupElements> {
    check_cap(n, TALLY_CAP, "group enumeration")?;
    Ok(GroupElements { next: Some((0..n as u8).collect()), alternating })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    /// Count elements per cycle type.
    Tally,
    /// Compute the actual conjugacy orbits inside the group.
    Orbits,
}

/// Class sizes by brute force, as `(cycle type, size)` pairs sorted by type
/// then size. In orbit mode a class that splits appears twice.
pub fn brute_class_sizes(n: u32, alternating: bool, mode: OracleMode) -> Result<Vec<(CycleType, u64)>> {
    let cap = match mode {
        OracleMode::Tally => TALLY_CAP,
        OracleMode::Orbits => ORBIT_CAP,
    };
    brute_class_sizes_capped(n, alternating, mode, cap)
}

/// As [`brute_class_sizes`] with an explicit degree cap (at most 8, the enumeration limit).
pub fn brute_class_sizes_capped(
    n: u32,
    alternating: bool,
    mode: OracleMode,
    cap: u32,
) -> Result<Vec<(CycleType, u64)>> {
    check_cap(n, cap.min(TALLY_CAP), "brute class sizes")?;
    let mut out = match mode {
        OracleMode::Tally => {
            let mut tally: BTreeMap<CycleType, u64> = BTreeMap::new();
            for g in enumerate_group(n, alternating)? {
                *tally.entry(g.cycle_type()).or_insert(0) += 1;
            }
            tally.into_iter().collect()
        }
        OracleMode::Orbits => conjugation_orbits(n, alternating)?,
    };
    out.sort();
    Ok(out)
}

/// Adjacent transpositions generate S_n; the 3-cycles (1 2 k) generate A_n.
fn generators(n: usize, alternating: bool) -> Vec<Perm> {
    let mut gens = Vec::new();
    if alternating {
        for k in 2..n {
            let mut images: Vec<u8> = (0..n as u8).collect();
            images[0] = 1;
            images[1] = k as u8;
            images[k] = 0;
            gens.push(Perm { images });
        }
    } else {
        for i in 0..n.saturating_sub(1) {
            let mut images: Vec<u8> = (0..n as u8).collect();
            images.swap(i, i + 1);
            gens.push(Perm { images });
        }
    }
    gens
}

fn conjugation_orbits(n: u32, alternating: bool) -> Result<Vec<(CycleType, u64)>> {
    let gens = generators(n as usize, alternating);
    let total: usize = (1..=n as usize).product();
    let mut seen = vec![false; total];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for g in enumerate_group(n, alternating)? {
        if seen[g.rank()] {
            continue;
        }
        seen[g.rank()] = true;
        let label = g.cycle_type();
        queue.push_back(g);
        let mut size = 0u64;
        while let Some(h) = queue.pop_front() {
            size += 1;
            for s in &gens {
                let c = h.conjugate_by(s);
                let r = c.rank();
                if !seen[r] {
                    seen[r] = true;
                    queue.push_back(c);
                }
            }
        }
        out.push((label, size));
    }
    Ok(out)
}

/// Number of group elements commuting with `g`. `n <= 7`.
pub fn brute_centralizer_order(g: &Perm, alternating: bool) -> Result<u64> {
    let n = g.degree() as u32;
    check_cap(n, ORBIT_CAP, "brute centralizer order")?;
    let mut count = 0;
    for x in enumerate_group(n, alternating)? {
        if x.then(g) == g.then(&x) {
            count += 1;
        }
    }
    Ok(count)
}
