//! Positive integers held as prime-exponent vectors.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A positive integer as sorted `(prime, exponent)` pairs with no zero exponents.
/// The empty vector is 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FactoredNat {
    factors: Vec<(u64, u32)>,
}

impl FactoredNat {
    pub fn one() -> Self {
        FactoredNat::default()
    }

    pub fn prime_power(p: u64, e: u32) -> Self {
        debug_assert!(is_prime(p));
        if e == 0 {
            return FactoredNat::one();
        }
        FactoredNat { factors: vec![(p, e)] }
    }

    /// Builds from arbitrary `(prime, exponent)` pairs; rejects non-prime keys.
    pub fn from_factors(pairs: impl IntoIterator<Item = (u64, u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (p, e) in pairs {
            if !is_prime(p) {
                return Err(Error::InvalidArgument(format!("{p} is not prime")));
            }
            *map.entry(p).or_insert(0u32) += e;
        }
        Ok(FactoredNat { factors: map.into_iter().filter(|&(_, e)| e > 0).collect() })
    }

    /// Trial-division factorization of a machine integer.
    pub fn from_u64(mut x: u64) -> Result<Self> {
        if x == 0 {
            return Err(Error::InvalidArgument("zero has no factorization".into()));
        }
        let mut factors = Vec::new();
        let mut d = 2u64;
        while d.saturating_mul(d) <= x {
            let mut e = 0;
            while x.is_multiple_of(d) {
                x /= d;
                e += 1;
            }
            if e > 0 {
                factors.push((d, e));
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if x > 1 {
            factors.push((x, 1));
        }
        Ok(FactoredNat { factors })
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.binary_search_by_key(&p, |&(q, _)| q).map_or(0, |i| self.factors[i].1)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return FactoredNat::one();
        }
        FactoredNat { factors: self.factors.iter().map(|&(p, e)| (p, e * k)).collect() }
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &FactoredNat) -> Option<FactoredNat> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut rhs = other.factors.iter().peekable();
        for &(p, e) in &self.factors {
            let mut sub = 0;
            if let Some(&&(q, f)) = rhs.peek() {
                if q < p {
                    return None;
                }
                if q == p {
                    sub = f;
                    rhs.next();
                }
            }
            if sub > e {
                return None;
            }
            if e > sub {
                out.push((p, e - sub));
            }
        }
        if rhs.next().is_some() {
            return None;
        }
        Some(FactoredNat { factors: out })
    }

    /// Divides by 2, failing loudly if the value is odd.
    pub fn halve(&self) -> Result<FactoredNat> {
        self.checked_div(&FactoredNat::prime_power(2, 1))
            .ok_or_else(|| Error::Internal(format!("cannot halve odd value {self}")))
    }

    /// Exponent-wise `<=` comparison.
    pub fn divides(&self, other: &FactoredNat) -> bool {
        let mut rhs = other.factors.iter();
        'outer: for &(p, e) in &self.factors {
            for &(q, f) in rhs.by_ref() {
                if q == p {
                    if e > f {
                        return false;
                    }
                    continue 'outer;
                }
                if q > p {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn gcd(&self, other: &FactoredNat) -> FactoredNat {
        let factors = self
            .factors
            .iter()
            .filter_map(|&(p, e)| {
                let f = other.exponent(p);
                (f > 0).then(|| (p, e.min(f)))
            })
            .collect();
        FactoredNat { factors }
    }

    /// Whether the two values have a common prime factor.
    pub fn shares_prime(&self, other: &FactoredNat) -> bool {
        let (mut a, mut b) = (self.factors.iter().peekable(), other.factors.iter().peekable());
        while let (Some(&&(p, _)), Some(&&(q, _))) = (a.peek(), b.peek()) {
            match p.cmp(&q) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    pub fn to_biguint(&self) -> BigUint {
        let mut acc = BigUint::one();
        for &(p, e) in &self.factors {
            acc *= BigUint::from(p).pow(e);
        }
        acc
    }
}

/// `divides(a, b)`: `a | b`.
pub fn divides(a: &FactoredNat, b: &FactoredNat) -> bool {
    a.divides(b)
}

impl Mul for &FactoredNat {
    type Output = FactoredNat;

    fn mul(self, rhs: &FactoredNat) -> FactoredNat {
        let mut out = Vec::with_capacity(self.factors.len() + rhs.factors.len());
        let (mut a, mut b) = (self.factors.iter().peekable(), rhs.factors.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(p, e)), Some(&&(q, f))) => {
                    if p < q {
                        out.push((p, e));
                        a.next();
                    } else if q < p {
                        out.push((q, f));
                        b.next();
                    } else {
                        out.push((p, e + f));
                        a.next();
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    out.push(x);
                    a.next();
                }
                (None, Some(&&x)) => {
                    out.push(x);
                    b.next();
                }
                (None, None) => break,
            }
        }
        FactoredNat { factors: out }
    }
}

impl Mul for FactoredNat {
    type Output = FactoredNat;

    fn mul(self, rhs: FactoredNat) -> FactoredNat {
        &self * &rhs
    }
}

impl fmt::Display for FactoredNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_biguint())
    }
}

/// Serialized as `{"value": "<decimal>", "factors": {"2": e2, ...}}`.
impl Serialize for FactoredNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let factors: serde_json::Map<String, serde_json::Value> =
            self.factors.iter().map(|&(p, e)| (p.to_string(), e.into())).collect();
        let mut s = serializer.serialize_struct("FactoredNat", 2)?;
        s.serialize_field("value", &self.to_string())?;
        s.serialize_field("factors", &factors)?;
        s.end()
    }
}

/// Legendre's formula: `v_p(n!) = sum_j floor(n / p^j)`.
pub fn legendre_exponent(n: u64, p: u64) -> u32 {
    let mut e = 0u64;
    let mut q = n;
    while q >= p {
        q /= p;
        e += q;
    }
    e as u32
}

/// Prime factorization of `n!`.
pub fn factorial_factored(n: u64) -> FactoredNat {
    let factors = primes_up_to(n).into_iter().map(|p| (p, legendre_exponent(n, p))).collect();
    FactoredNat { factors }
}

/// Outcome of dividing out every prime up to a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrialDivision {
    Complete(FactoredNat),
    /// The cofactor left over has a prime factor above the bound.
    Residue(BigUint),
}

/// Factors `x` by trial division with the given ascending primes.
pub fn factor_by_trial_division(x: &BigUint, primes: &[u64]) -> TrialDivision {
    debug_assert!(!x.is_zero());
    let mut rest = x.clone();
    let mut factors = Vec::new();
    for &p in primes {
        if rest.is_one() {
            break;
        }
        let bp = BigUint::from(p);
        let mut e = 0;
        loop {
            let (q, r) = (&rest / &bp, &rest % &bp);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    }
    if rest.is_one() {
        TrialDivision::Complete(FactoredNat { factors })
    } else {
        TrialDivision::Residue(rest)
    }
}
