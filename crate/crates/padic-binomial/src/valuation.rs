//! Exact p-adic valuations of factorials and binomial coefficients.
//!
//! Everything here works on base-p digits: the factorial valuation via the
//! digit-sum form `(n - s_p(n)) / (p - 1)`, the binomial valuation via
//! `(s_p(x) + s_p(n-x) - s_p(n)) / (p - 1)`, and the equivalent carry/borrow
//! counts. No binomial coefficient is ever materialized.

use crate::digits::{check_prime, check_value, digit_sum, MAX_VALUE};
use crate::error::{Error, Result};

/// A binomial valuation query together with its result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValuationResult {
    pub n: u64,
    pub x: u64,
    pub p: u64,
    pub valuation: u32,
}

impl ValuationResult {
    /// Computes the exact p-adic valuation of `C(n, x)`.
    pub fn compute(n: u64, x: u64, p: u64) -> Result<Self> {
        let valuation = binomial_valuation(n, x, p)?;
        Ok(ValuationResult { n, x, p, valuation })
    }
}

/// Both sides of the digit-sum triangle inequality
/// `s_p(x+y) <= s_p(x) + s_p(y)`, plus the two equivalent equality flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleWitness {
    /// `s_p(x + y)`
    pub lhs: u64,
    /// `s_p(x) + s_p(y)`
    pub rhs: u64,
    pub equality: bool,
    /// whether `p` does not divide `C(x+y, x)`
    pub binom_coprime_to_p: bool,
}

/// Exact exponent of `p` in `n!` via the digit-sum form.
///
/// Cross-checked against the floor sum `Σ_{i>=1} ⌊n/p^i⌋` in debug builds.
pub fn legendre_valuation(n: u64, p: u64) -> Result<u64> {
    let s = digit_sum(n, p)?;
    debug_assert_eq!((n - s) % (p - 1), 0);
    let v = (n - s) / (p - 1);
    debug_assert_eq!(v, legendre_floor_sum(n, p));
    Ok(v)
}

#[allow(dead_code)] // referenced from debug assertions only in release builds
fn legendre_floor_sum(n: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut q = n / p;
    while q > 0 {
        total += q;
        q /= p;
    }
    total
}

/// Exact exponent of `p` in `C(n, x)` via digit sums.
pub fn binomial_valuation(n: u64, x: u64, p: u64) -> Result<u32> {
    check_prime(p)?;
    check_value(n)?;
    if x > n {
        return Err(Error::XExceedsN { x, n });
    }
    let diff = digit_sum(x, p)? + digit_sum(n - x, p)? - digit_sum(n, p)?;
    debug_assert_eq!(diff % (p - 1), 0);
    let v = diff / (p - 1);
    debug_assert!(v <= 64);
    Ok(v as u32)
}

/// Number of carries when adding `a` and `b` digit-by-digit in base `p`.
/// Equals the exact exponent of `p` in `C(a+b, a)`.
pub fn kummer_carries(a: u64, b: u64, p: u64) -> Result<u32> {
    check_prime(p)?;
    a.checked_add(b)
        .filter(|&s| s <= MAX_VALUE)
        .ok_or(Error::Overflow)?;
    let (mut a, mut b) = (a, b);
    let mut carry = 0;
    let mut count = 0;
    while a > 0 || b > 0 || carry > 0 {
        carry = if a % p + b % p + carry >= p { 1 } else { 0 };
        count += carry as u32;
        a /= p;
        b /= p;
    }
    Ok(count)
}

/// Number of borrows when subtracting `x` from `n` digit-by-digit in base
/// `p`. Equals `kummer_carries(x, n - x, p)`.
pub fn kummer_borrows(n: u64, x: u64, p: u64) -> Result<u32> {
    check_prime(p)?;
    check_value(n)?;
    if x > n {
        return Err(Error::XExceedsN { x, n });
    }
    let (mut n, mut x) = (n, x);
    let mut borrow = 0;
    let mut count = 0;
    while x > 0 || borrow > 0 {
        borrow = if n % p < x % p + borrow { 1 } else { 0 };
        count += borrow as u32;
        n /= p;
        x /= p;
    }
    Ok(count)
}

/// `C(n, t) mod p`, computed digitwise: the product of the per-digit
/// binomials `C(n_i, t_i) mod p`, which is zero as soon as some `t_i > n_i`.
pub fn lucas_residue(n: u64, t: u64, p: u64) -> Result<u64> {
    check_prime(p)?;
    check_value(n)?;
    if t > n {
        return Err(Error::TExceedsN { t, n });
    }
    let (mut n, mut t) = (n, t);
    let mut acc = 1;
    while t > 0 {
        let (nd, td) = (n % p, t % p);
        if td > nd {
            return Ok(0);
        }
        acc = acc * small_binom_mod(nd, td, p) % p;
        n /= p;
        t /= p;
    }
    Ok(acc)
}

/// `C(a, b) mod p` for `0 <= b <= a < p`. None of the factors of the
/// multiplicative form is divisible by `p`, so a single modular inverse
/// of the accumulated denominator suffices.
fn small_binom_mod(a: u64, b: u64, p: u64) -> u64 {
    let b = b.min(a - b);
    let mut num = 1;
    let mut den = 1;
    for j in 1..=b {
        num = num * ((a - b + j) % p) % p;
        den = den * (j % p) % p;
    }
    num * mod_inverse(den, p) % p
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    // p < 2^20, so products stay far below u64::MAX
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// 2-adic valuation of a central binomial coefficient in closed form:
/// `a_2(C(2n, n)) = s_2(n)` and, with `shifted`, `a_2(C(2n+1, n)) = s_2(n+1) - 1`.
pub fn central_binomial_valuation(n: u64, shifted: bool) -> Result<u32> {
    let top = n
        .checked_mul(2)
        .and_then(|v| v.checked_add(shifted as u64))
        .filter(|&v| v <= MAX_VALUE)
        .ok_or(Error::Overflow)?;
    let v = if shifted {
        (n + 1).count_ones() - 1
    } else {
        n.count_ones()
    };
    debug_assert_eq!(Ok(v), binomial_valuation(top, n, 2));
    Ok(v)
}

/// Evaluates the digit-sum triangle inequality at `(x, y)` and reports
/// whether equality coincides with `C(x+y, x)` being coprime to `p`.
pub fn triangle_inequality_witness(x: u64, y: u64, p: u64) -> Result<TriangleWitness> {
    check_prime(p)?;
    let sum = x
        .checked_add(y)
        .filter(|&s| s <= MAX_VALUE)
        .ok_or(Error::Overflow)?;
    let lhs = digit_sum(sum, p)?;
    let rhs = digit_sum(x, p)? + digit_sum(y, p)?;
    let witness = TriangleWitness {
        lhs,
        rhs,
        equality: lhs == rhs,
        binom_coprime_to_p: binomial_valuation(sum, x, p)? == 0,
    };
    debug_assert_eq!(witness.equality, witness.binom_coprime_to_p);
    Ok(witness)
}
