//! Reading a raw integer set `X` from text, one positive integer per line.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::factored::{factor_by_trial_division, primes_up_to, FactoredNat, TrialDivision};
use crate::graph::SizeSet;

/// Inputs may only have prime factors up to this bound.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Parses the lines of `text` into a [`SizeSet`]. Blank lines are skipped;
/// 1s and repeated values are dropped, and each value remembers the lines
/// (`line N`) it came from.
pub fn parse_integer_set(text: &str) -> Result<SizeSet> {
    let primes = primes_up_to(TRIAL_DIVISION_BOUND);
    let mut items = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let token = raw.trim();
        if token.is_empty() {
            continue;
        }
        let value: BigUint =
            token.parse().map_err(|_| Error::Parse { line, message: format!("{token:?} is not a decimal integer") })?;
        if value.is_zero() {
            return Err(Error::Parse { line, message: "0 is not a positive integer".into() });
        }
        items.push((factor_value(&value, &primes, line)?, format!("line {line}")));
    }
    Ok(SizeSet::from_labelled(items))
}

fn factor_value(value: &BigUint, primes: &[u64], line: usize) -> Result<FactoredNat> {
    let unsupported =
        || Error::Unsupported { line, message: format!("{value} has a prime factor above {TRIAL_DIVISION_BOUND}") };
    if let Some(x) = value.to_u64() {
        let f = FactoredNat::from_u64(x)?;
        return match f.factors().last() {
            Some(&(p, _)) if p > TRIAL_DIVISION_BOUND => Err(unsupported()),
            _ => Ok(f),
        };
    }
    match factor_by_trial_division(value, primes) {
        TrialDivision::Complete(f) => Ok(f),
        TrialDivision::Residue(_) => Err(unsupported()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(s: &SizeSet) -> Vec<String> {
        s.entries().iter().map(|e| e.value.to_string()).collect()
    }

    #[test]
    fn drops_ones_and_duplicates() {
        let s = parse_integer_set("6\n1\n4\n\n6\n9\n").unwrap();
        assert_eq!(values(&s), ["4", "6", "9"]);
        assert_eq!(s.get(1).origins, ["line 1", "line 5"]);
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(
            parse_integer_set("2\nthree\n"),
            Err(Error::Parse { line: 2, message: "\"three\" is not a decimal integer".into() })
        );
        assert!(matches!(parse_integer_set("0"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_integer_set("-4"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_integer_set("4\n1000003"), Err(Error::Unsupported { line: 2, .. })));
    }

    #[test]
    fn large_values() {
        // 2^80 * 999983
        let big = (BigUint::from(1u32) << 80u32) * 999_983u32;
        let s = parse_integer_set(&big.to_string()).unwrap();
        assert_eq!(s.get(0).factored.factors(), &[(2, 80), (999_983, 1)]);
        let too_big = BigUint::from(1u32 << 20) * 1_000_003u32 * 1_000_003u32;
        assert!(matches!(parse_integer_set(&too_big.to_string()), Err(Error::Unsupported { .. })));
    }
}
