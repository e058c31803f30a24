//! Base-p expansions, digit sums, and digit-pattern constructors.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// All values handled by this crate stay below `2^63`.
pub const MAX_VALUE: u64 = (1 << 63) - 1;

/// Largest base accepted by [`check_prime`]. Realistic use is tiny primes;
/// the cap keeps trial division trivially cheap.
pub const MAX_PRIME: u64 = 1 << 20;

/// Validates that `p` is a prime in `2..=2^20` by trial division.
pub(crate) fn check_prime(p: u64) -> Result<()> {
    if p < 2 || p > MAX_PRIME {
        return Err(Error::NotPrime(p));
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return Err(Error::NotPrime(p));
        }
        d += 1;
    }
    Ok(())
}

pub(crate) fn check_value(n: u64) -> Result<()> {
    if n > MAX_VALUE {
        Err(Error::ValueOutOfRange(n))
    } else {
        Ok(())
    }
}

/// The canonical base-p expansion of a nonnegative integer.
///
/// Digits are stored most-significant-first. Zero is represented by an
/// empty digit sequence, so a nonzero expansion never has a leading zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitExpansion {
    base: u64,
    digits: Vec<u64>,
    value: u64,
}

impl DigitExpansion {
    pub fn base(&self) -> u64 {
        self.base
    }

    /// Digits, most-significant-first; empty for zero.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// Index of the least significant digit position, i.e. digit count
    /// minus one. Undefined (`None`) for zero.
    pub fn top_index(&self) -> Option<u32> {
        if self.digits.is_empty() {
            None
        } else {
            Some(self.digits.len() as u32 - 1)
        }
    }

    /// Sum of the digits.
    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().sum()
    }
}

/// Expands `n` in base `p`, most-significant-first.
pub fn expand(n: u64, p: u64) -> Result<DigitExpansion> {
    check_prime(p)?;
    check_value(n)?;
    let mut digits = Vec::new();
    let mut rest = n;
    while rest > 0 {
        digits.push(rest % p);
        rest /= p;
    }
    digits.reverse();
    Ok(DigitExpansion {
        base: p,
        digits,
        value: n,
    })
}

/// Recomposes a most-significant-first digit sequence in base `p`.
///
/// Leading zeros are permitted on input; the empty sequence is zero.
pub fn compose(digits: &[u64], p: u64) -> Result<u64> {
    check_prime(p)?;
    let mut value: u64 = 0;
    for &d in digits {
        if d >= p {
            return Err(Error::DigitOutOfRange { digit: d, base: p });
        }
        value = value
            .checked_mul(p)
            .and_then(|v| v.checked_add(d))
            .filter(|&v| v <= MAX_VALUE)
            .ok_or(Error::Overflow)?;
    }
    Ok(value)
}

/// Digit sum of `n` in base `p`.
pub fn digit_sum(n: u64, p: u64) -> Result<u64> {
    check_prime(p)?;
    check_value(n)?;
    let mut s = 0;
    let mut rest = n;
    while rest > 0 {
        s += rest % p;
        rest /= p;
    }
    Ok(s)
}

/// Builds the number whose base-p digits are `t` copies of `p-1`, then a
/// single `p-2`, then `m-t` copies of `p-1` (m+1 digits in total, the
/// exceptional digit sitting at index `t`).
pub fn build_inner_exception(p: u64, t: u32, m: u32) -> Result<u64> {
    if p < 2 {
        return Err(Error::NotPrime(p));
    }
    if t > m {
        return Err(Error::InvalidIndices { t, m });
    }
    let mut value: u64 = 0;
    for i in 0..=m {
        let d = if i == t { p - 2 } else { p - 1 };
        value = value
            .checked_mul(p)
            .and_then(|v| v.checked_add(d))
            .filter(|&v| v <= MAX_VALUE)
            .ok_or(Error::Overflow)?;
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn expand_examples() {
        assert_eq!(expand(11, 2).unwrap().digits(), &[1, 0, 1, 1]);
        assert_eq!(expand(0, 5).unwrap().digits(), &[] as &[u64]);
        assert_eq!(expand(23, 3).unwrap().digits(), &[2, 1, 2]);
        assert_eq!(expand(24, 3).unwrap().digits(), &[2, 2, 0]);
    }

    #[test]
    fn expand_rejects_bad_inputs() {
        assert_eq!(expand(5, 4), Err(Error::NotPrime(4)));
        assert_eq!(expand(5, 1), Err(Error::NotPrime(1)));
        assert_eq!(expand(5, 0), Err(Error::NotPrime(0)));
        // 2^20 + 1 is within the cap but composite; 2^20 + 7 is prime but capped out.
        assert_eq!(expand(5, (1 << 20) + 7), Err(Error::NotPrime((1 << 20) + 7)));
        assert_eq!(expand(1 << 63, 2), Err(Error::ValueOutOfRange(1 << 63)));
    }

    #[test]
    fn prime_cap_boundary() {
        // 2^20 - 3 = 1048573 is prime, 2^20 itself is not.
        assert!(check_prime((1 << 20) - 3).is_ok());
        assert_eq!(check_prime(1 << 20), Err(Error::NotPrime(1 << 20)));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(compose(&[1, 1, 0, 0], 2).unwrap(), 12);
        assert_eq!(compose(&[], 7).unwrap(), 0);
        assert_eq!(compose(&[2, 1, 2], 3).unwrap(), 23);
        // leading zeros are fine on input
        assert_eq!(compose(&[0, 0, 1, 0, 1, 1], 2).unwrap(), 11);
    }

    #[test]
    fn compose_rejects_bad_digits_and_overflow() {
        assert_eq!(
            compose(&[3, 1], 3),
            Err(Error::DigitOutOfRange { digit: 3, base: 3 })
        );
        let max_run = vec![1u64; 64];
        assert_eq!(compose(&max_run, 2), Err(Error::Overflow));
    }

    #[test]
    fn compose_expand_round_trip_spot() {
        for &(n, p) in &[(0u64, 2u64), (1, 2), (11, 2), (23, 3), (24, 3), (1000000, 7)] {
            assert_eq!(compose(expand(n, p).unwrap().digits(), p).unwrap(), n);
        }
    }

    #[test]
    fn digit_sum_examples() {
        assert_eq!(digit_sum(11, 2).unwrap(), 3);
        assert_eq!(digit_sum(0, 13).unwrap(), 0);
        assert_eq!(digit_sum(23, 3).unwrap(), 5);
    }

    #[test]
    fn top_index_is_none_for_zero() {
        assert_eq!(expand(0, 3).unwrap().top_index(), None);
        assert_eq!(expand(9, 3).unwrap().top_index(), Some(2));
    }

    #[test]
    fn inner_exception_examples() {
        assert_eq!(build_inner_exception(2, 1, 3).unwrap(), 11);
        assert_eq!(build_inner_exception(3, 1, 2).unwrap(), 23);
        // degenerate single-digit case: the sole digit is p-2 = 0
        assert_eq!(build_inner_exception(2, 0, 0).unwrap(), 0);
    }

    #[test]
    fn inner_exception_pattern() {
        let n = build_inner_exception(5, 2, 4).unwrap();
        let e = expand(n, 5).unwrap();
        assert_eq!(e.digits(), &[4, 4, 3, 4, 4]);
    }

    #[test]
    fn inner_exception_rejects_bad_indices_and_overflow() {
        assert_eq!(
            build_inner_exception(2, 4, 3),
            Err(Error::InvalidIndices { t: 4, m: 3 })
        );
        assert_eq!(build_inner_exception(2, 1, 70), Err(Error::Overflow));
    }
}
