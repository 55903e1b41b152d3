//! Centralizer orders and class sizes in S_n and A_n, in factored form.
//!
//! `|C_{S_n}(δ)| = t! · ∏ k_i! · m_i^{k_i}` for `δ = [1^t, m_1^{k_1}, …]`,
//! and `|δ^{S_n}| = n! / |C_{S_n}(δ)|`. In A_n a class either keeps its
//! S_n size or splits into two halves; it splits exactly when every cycle
//! length is odd and distinct and at most one point is fixed.

use std::time::Instant;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::cycle_type::{enumerate_cycle_types, CycleType};
use crate::error::{invalid, Error, Result};
use crate::factored::{factorial_factored, primes_up_to, FactoredNat};
use crate::group::Group;
use crate::report::{VerdictReport, Witness};

/// `∏ k_i! · m_i^{k_i}` over the nontrivial parts (fixed points excluded).
pub fn cycle_product(ct: &CycleType) -> FactoredNat {
    ct.parts().iter().fold(FactoredNat::one(), |acc, p| {
        let len = FactoredNat::from_u64(p.length as u64).expect("cycle length is positive");
        &(&acc * &factorial_factored(p.multiplicity as u64)) * &len.pow(p.multiplicity)
    })
}

pub fn centralizer_order_sym(ct: &CycleType) -> FactoredNat {
    &cycle_product(ct) * &factorial_factored(ct.fixed_points() as u64)
}

/// `|C_{A_n}(δ)|`: equal to the S_n centralizer for splitting types, half of it otherwise.
/// In degree 1 there is no odd permutation to lose, so nothing is halved.
pub fn centralizer_order_alt(ct: &CycleType) -> Result<FactoredNat> {
    let sym = centralizer_order_sym(ct);
    if ct.splits_in_alternating()? || ct.n() == 1 {
        Ok(sym)
    } else {
        sym.halve()
    }
}

pub fn class_size_sym(ct: &CycleType) -> Result<FactoredNat> {
    let centralizer = centralizer_order_sym(ct);
    factorial_factored(ct.n() as u64)
        .checked_div(&centralizer)
        .ok_or_else(|| Error::Internal(format!("centralizer {centralizer} of {ct} does not divide {}!", ct.n())))
}

/// Class size(s) an even S_n-class takes in A_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AltClasses {
    /// The class stays whole.
    Single(FactoredNat),
    /// Two classes, each of this size.
    Split(FactoredNat),
}

impl AltClasses {
    pub fn size(&self) -> &FactoredNat {
        match self {
            AltClasses::Single(s) | AltClasses::Split(s) => s,
        }
    }

    pub fn is_split(&self) -> bool {
        matches!(self, AltClasses::Split(_))
    }

    /// The one or two class sizes, with repetition.
    pub fn sizes(&self) -> Vec<FactoredNat> {
        match self {
            AltClasses::Single(s) => vec![s.clone()],
            AltClasses::Split(s) => vec![s.clone(), s.clone()],
        }
    }
}

pub fn class_sizes_alt(ct: &CycleType) -> Result<AltClasses> {
    let sym = class_size_sym(ct)?;
    if ct.splits_in_alternating()? {
        Ok(AltClasses::Split(sym.halve()?))
    } else {
        Ok(AltClasses::Single(sym))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub ct: CycleType,
    pub size_sym: FactoredNat,
    /// Present iff the type is even.
    pub size_alt: Option<FactoredNat>,
    pub split: bool,
}

pub fn class_record(ct: &CycleType) -> Result<ClassRecord> {
    let size_sym = class_size_sym(ct)?;
    let (size_alt, split) = if ct.is_even() {
        let alt = class_sizes_alt(ct)?;
        (Some(alt.size().clone()), alt.is_split())
    } else {
        (None, false)
    };
    Ok(ClassRecord { ct: ct.clone(), size_sym, size_alt, split })
}

pub fn class_records(n: u32) -> Result<Vec<ClassRecord>> {
    enumerate_cycle_types(n)?.iter().map(class_record).collect()
}

/// For every fixed-point-free type of `x`, checks `∏ k_i! m_i^{k_i} | x!`, and
/// `2 ∏ k_i! m_i^{k_i} | x!` when some cycle has length ≥ 3.
pub fn verify_lemma2(x: u32) -> Result<VerdictReport> {
    if x == 0 {
        return Err(invalid("lemma2 needs x >= 1"));
    }
    let start = Instant::now();
    let mut report = VerdictReport::new("lemma2", None, vec![x]);
    let fact = factorial_factored(x as u64);
    let two = FactoredNat::prime_power(2, 1);
    let mut checked = 0u64;
    for ct in enumerate_cycle_types(x)?.into_iter().filter(|c| c.fixed_points() == 0) {
        checked += 1;
        let product = cycle_product(&ct);
        let long_cycle = ct.parts().iter().any(|p| p.length >= 3);
        let ok = product.divides(&fact) && (!long_cycle || (&two * &product).divides(&fact));
        if !ok {
            report.fail_once(
                Witness::new(x, format!("product (doubled: {long_cycle}) does not divide {x}!"))
                    .with_types([ct.clone()])
                    .with_sizes([product]),
            );
        }
    }
    report.record("types_checked", checked);
    Ok(report.timed_since(start))
}

/// For every prime `p >= n - slack` and every nonidentity type of the group,
/// checks that `p` divides the centralizer order iff the type is a `p`-cycle.
/// Primes above `n` divide no centralizer and have no cycles, so only
/// `n - slack ..= n` is scanned.
fn verify_prime_centralizer(claim: &str, n: u32, group: Group, slack: u32) -> Result<VerdictReport> {
    let start = Instant::now();
    let mut report = VerdictReport::new(claim, Some(group), vec![n]);
    let primes: Vec<u64> = primes_up_to(n as u64).into_iter().filter(|&p| p + slack as u64 >= n as u64).collect();
    let mut checked = 0u64;
    for ct in enumerate_cycle_types(n)? {
        if ct.is_identity() || (group == Group::Alternating && !ct.is_even()) {
            continue;
        }
        let centralizer = match group {
            Group::Symmetric => centralizer_order_sym(&ct),
            Group::Alternating => centralizer_order_alt(&ct)?,
        };
        for &p in &primes {
            checked += 1;
            let divides = centralizer.exponent(p) > 0;
            let is_p_cycle = ct.single_cycle_length() == Some(p as u32);
            if divides != is_p_cycle {
                report.fail_once(
                    Witness::new(n, format!("p = {p}: divides centralizer = {divides}, is p-cycle = {is_p_cycle}"))
                        .with_types([ct.clone()])
                        .with_sizes([centralizer.clone()]),
                );
            }
        }
    }
    report.record("primes", primes.clone());
    report.record("checks", checked);
    Ok(report.timed_since(start))
}

/// In S_n with n > 2, a prime `p >= n - 1` divides `|C(δ)|` iff δ is a p-cycle.
pub fn verify_lemma8(n: u32) -> Result<VerdictReport> {
    if n <= 2 {
        return Err(invalid(format!("lemma8 requires n > 2, got {n}")));
    }
    verify_prime_centralizer("lemma8", n, Group::Symmetric, 1)
}

/// In A_n with n >= 9, a prime `p >= n - 2` divides `|C_{A_n}(δ)|` iff δ is a p-cycle.
pub fn verify_lemma11(n: u32) -> Result<VerdictReport> {
    if n < 9 {
        return Err(invalid(format!("lemma11 requires n >= 9, got {n}")));
    }
    verify_prime_centralizer("lemma11", n, Group::Alternating, 2)
}

/// Exact sums: all S_n class sizes add to n!, all A_n class sizes to n!/2.
pub fn verify_partition_identities(n: u32) -> Result<VerdictReport> {
    let start = Instant::now();
    let mut report = VerdictReport::new("partition-identities", None, vec![n]);
    let mut sym_total = BigUint::zero();
    let mut alt_total = BigUint::zero();
    let fact = factorial_factored(n as u64);
    for rec in class_records(n)? {
        let centralizer = centralizer_order_sym(&rec.ct);
        if &rec.size_sym * &centralizer != fact {
            report.fail_once(Witness::new(n, "size times centralizer is not n!").with_types([rec.ct.clone()]));
        }
        sym_total += rec.size_sym.to_biguint();
        if let Some(alt) = &rec.size_alt {
            let copies = if rec.split { 2u32 } else { 1 };
            alt_total += alt.to_biguint() * copies;
        }
    }
    let n_fact = fact.to_biguint();
    if sym_total != n_fact {
        report.fail_once(Witness::new(n, "S_n class sizes do not sum to n!").with_sizes([&sym_total, &n_fact]));
    }
    let half = if n >= 2 { &n_fact / 2u32 } else { n_fact.clone() };
    if alt_total != half {
        report.fail_once(Witness::new(n, "A_n class sizes do not sum to |A_n|").with_sizes([&alt_total, &half]));
    }
    report.record("order", n_fact.to_string());
    Ok(report.timed_since(start))
}
