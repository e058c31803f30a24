//! Valuation spectra of binomial coefficient rows.
//!
//! The spectrum of row `n` at prime `p` is the sequence `c_0, c_1, ...`
//! where `c_k` counts the `x` in `[0..n]` whose `C(n, x)` has exact p-adic
//! valuation `k`. Three independent routes compute it:
//!
//! * [`spectrum_bruteforce`] — one borrow count per `x`, `O(n log n)`;
//! * [`spectrum_digit_dp`] — a digit dynamic program, polynomial in the
//!   digit count;
//! * [`zumkeller_spectrum_closed_form`] — closed forms available exactly
//!   for the Zumkeller digit patterns.

use alloc::vec;
use alloc::vec::Vec;

use crate::digits::{build_inner_exception, check_prime, check_value, expand, MAX_VALUE};
use crate::error::{Error, Result};
use crate::predictor::ZumkellerClass;
use crate::valuation::kummer_borrows;

/// Default cap on brute-force enumeration sizes.
pub const DEFAULT_BRUTE_GUARD: u64 = 1 << 24;

/// How to compute a spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumMethod {
    /// Enumerate every `x` in `[0..n]`; refuses `n` beyond the guard.
    Brute,
    /// Digit dynamic program; any `n`.
    DigitDp,
    /// Brute force up to the guard, digit DP above it.
    Auto,
}

/// The valuation spectrum of row `n` at prime `p`.
///
/// Counts are canonical: trailing zero counts are stripped, so two spectra
/// are equal iff they agree on every attained valuation. The counts always
/// partition the row: they sum to `n + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationSpectrum {
    p: u64,
    n: u64,
    counts: Vec<u64>,
}

impl ValuationSpectrum {
    pub(crate) fn from_counts(p: u64, n: u64, mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        debug_assert!(!counts.is_empty() && counts[0] >= 1);
        debug_assert_eq!(counts.iter().sum::<u64>(), n + 1);
        ValuationSpectrum { p, n, counts }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Counts `c_0, c_1, ...` up to the largest attained valuation.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `c_k`, zero beyond the largest attained valuation.
    pub fn count(&self, k: usize) -> u64 {
        self.counts.get(k).copied().unwrap_or(0)
    }
}

/// Counts valuations by enumerating every `x` in `[0..n]` and counting
/// base-p borrows of `n - x`. Refuses `n` beyond [`DEFAULT_BRUTE_GUARD`].
pub fn spectrum_bruteforce(n: u64, p: u64) -> Result<ValuationSpectrum> {
    spectrum_bruteforce_guarded(n, p, DEFAULT_BRUTE_GUARD)
}

/// [`spectrum_bruteforce`] with an explicit guard.
pub fn spectrum_bruteforce_guarded(n: u64, p: u64, guard: u64) -> Result<ValuationSpectrum> {
    check_prime(p)?;
    check_value(n)?;
    if n > guard {
        return Err(Error::GuardExceeded { n, guard });
    }
    let mut counts = vec![0u64; 65];
    for x in 0..=n {
        counts[borrows_unchecked(n, x, p) as usize] += 1;
    }
    Ok(ValuationSpectrum::from_counts(p, n, counts))
}

fn borrows_unchecked(mut n: u64, mut x: u64, p: u64) -> u32 {
    let mut borrow = 0;
    let mut count = 0;
    while x > 0 || borrow > 0 {
        borrow = if n % p < x % p + borrow { 1 } else { 0 };
        count += borrow as u32;
        n /= p;
        x /= p;
    }
    count
}

/// Computes the spectrum by dynamic programming over digit positions.
///
/// Runs over all digit strings `x` of the same length as `n`, least
/// significant position first, carrying `(pending borrow, borrows so far)`.
/// At each position the `p` digit choices split into those that borrow and
/// those that do not, so whole classes of strings advance together. A
/// string is accepted exactly when its final borrow-out is zero, which
/// holds iff `x <= n`; accepted strings are aggregated by total borrows,
/// which by Kummer's theorem is the valuation of `C(n, x)`.
pub fn spectrum_digit_dp(n: u64, p: u64) -> Result<ValuationSpectrum> {
    check_prime(p)?;
    check_value(n)?;
    let width = expand(n, p)?.digits().len();
    // Intermediate totals cover all p^width strings, which can exceed
    // n + 1 by a factor of p; accumulate in u128 and narrow at the end.
    let mut cur = [vec![0u128; width + 1], vec![0u128; width + 1]];
    cur[0][0] = 1;
    let mut rest = n;
    for _ in 0..width {
        let d = rest % p;
        rest /= p;
        let mut next = [vec![0u128; width + 1], vec![0u128; width + 1]];
        for b in 0..2u64 {
            for k in 0..=width {
                let reach = cur[b as usize][k];
                if reach == 0 {
                    continue;
                }
                if d >= b {
                    // digit choices 0..=d-b leave no borrow
                    next[0][k] += reach * (d - b + 1) as u128;
                }
                let borrowing = (p - 1 - d) + b;
                if borrowing > 0 {
                    next[1][k + 1] += reach * borrowing as u128;
                }
            }
        }
        cur = next;
    }
    let counts = cur[0]
        .iter()
        .map(|&c| u64::try_from(c).expect("accepted counts are bounded by n + 1"))
        .collect();
    Ok(ValuationSpectrum::from_counts(p, n, counts))
}

/// Dispatches on [`SpectrumMethod`] with an explicit brute-force guard.
pub fn compute_spectrum(
    n: u64,
    p: u64,
    method: SpectrumMethod,
    guard: u64,
) -> Result<ValuationSpectrum> {
    match method {
        SpectrumMethod::Brute => spectrum_bruteforce_guarded(n, p, guard),
        SpectrumMethod::DigitDp => spectrum_digit_dp(n, p),
        SpectrumMethod::Auto => {
            if n <= guard {
                spectrum_bruteforce_guarded(n, p, guard)
            } else {
                spectrum_digit_dp(n, p)
            }
        }
    }
}

/// `c_0` in closed form: the product of `digit + 1` over the base-p digits
/// of `n`, i.e. the number of nonzero digitwise binomial products.
pub fn lambda0_lucas(n: u64, p: u64) -> Result<u64> {
    let e = expand(n, p)?;
    let mut product: u64 = 1;
    for &d in e.digits() {
        product = product
            .checked_mul(d + 1)
            .filter(|&v| v <= MAX_VALUE)
            .ok_or(Error::Overflow)?;
    }
    Ok(product)
}

/// `c_0` at `p = 2` in closed form: `2^(s_2(n))`.
pub fn lambda0_glaisher(n: u64) -> Result<u64> {
    check_value(n)?;
    let s = n.count_ones();
    if s > 62 {
        return Err(Error::Overflow);
    }
    Ok(1 << s)
}

pub(crate) fn checked_pow(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e)
        .filter(|&v| v <= MAX_VALUE)
        .ok_or(Error::Overflow)
}

/// Closed-form spectrum for a Zumkeller digit pattern.
///
/// * all digits `p-1`: the single count `p^(m+1)` — no `x` ever borrows;
/// * leading digit `d <= p-2`, rest `p-1`: the single count `(d+1) p^m`;
/// * one inner digit `p-2` at index `t`: `c_0 = (p-1) p^m` and
///   `c_k = (p-1) p^(m-k)` for `k = 1..=t`, one term per borrow-chain
///   length ending at the exceptional position.
pub fn zumkeller_spectrum_closed_form(
    class: ZumkellerClass,
    p: u64,
) -> Result<ValuationSpectrum> {
    check_prime(p)?;
    match class {
        ZumkellerClass::NotZumkeller => Err(Error::NotZumkellerInput),
        ZumkellerClass::Zero => Ok(ValuationSpectrum::from_counts(p, 0, vec![1])),
        ZumkellerClass::AllMax { m } => {
            let total = checked_pow(p, m + 1)?;
            Ok(ValuationSpectrum::from_counts(p, total - 1, vec![total]))
        }
        ZumkellerClass::LeadingException { digit, m } => {
            if digit == 0 || digit > p - 2 {
                return Err(Error::DigitOutOfRange { digit, base: p });
            }
            let total = checked_pow(p, m)?
                .checked_mul(digit + 1)
                .filter(|&v| v <= MAX_VALUE)
                .ok_or(Error::Overflow)?;
            Ok(ValuationSpectrum::from_counts(p, total - 1, vec![total]))
        }
        ZumkellerClass::InnerException { t, m } => {
            let n = build_inner_exception(p, t, m)?;
            let mut counts = Vec::with_capacity(t as usize + 1);
            counts.push((p - 1) * checked_pow(p, m)?);
            for k in 1..=t {
                counts.push((p - 1) * checked_pow(p, m - k)?);
            }
            Ok(ValuationSpectrum::from_counts(p, n, counts))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bruteforce_examples() {
        assert_eq!(spectrum_bruteforce(11, 2).unwrap().counts(), &[8, 4]);
        assert_eq!(spectrum_bruteforce(23, 3).unwrap().counts(), &[18, 6]);
        // row 1,4,6,4,1 has valuations 0,2,1,2,0
        assert_eq!(spectrum_bruteforce(4, 2).unwrap().counts(), &[2, 1, 2]);
    }

    #[test]
    fn bruteforce_guard() {
        assert_eq!(
            spectrum_bruteforce_guarded(100, 2, 99),
            Err(Error::GuardExceeded { n: 100, guard: 99 })
        );
        assert!(spectrum_bruteforce_guarded(100, 2, 100).is_ok());
    }

    #[test]
    fn digit_dp_examples() {
        assert_eq!(spectrum_digit_dp(11, 2).unwrap().counts(), &[8, 4]);
        assert_eq!(spectrum_digit_dp(0, 7).unwrap().counts(), &[1]);
        assert_eq!(spectrum_digit_dp(4, 2).unwrap().counts(), &[2, 1, 2]);
        assert_eq!(spectrum_digit_dp(23, 3).unwrap().counts(), &[18, 6]);
    }

    #[test]
    fn digit_dp_matches_bruteforce_small() {
        for p in [2u64, 3, 5] {
            for n in 0..200 {
                assert_eq!(
                    spectrum_digit_dp(n, p).unwrap(),
                    spectrum_bruteforce(n, p).unwrap(),
                    "n = {n}, p = {p}"
                );
            }
        }
    }

    #[test]
    fn spectrum_is_canonical() {
        let s = spectrum_digit_dp(11, 2).unwrap();
        assert_ne!(s.counts().last(), Some(&0));
        assert_eq!(s.count(0), 8);
        assert_eq!(s.count(5), 0);
        assert_eq!((s.n(), s.p()), (11, 2));
    }

    #[test]
    fn lambda0_examples() {
        // digits 1,0,1,1 -> 2*1*2*2
        assert_eq!(lambda0_lucas(11, 2).unwrap(), 8);
        assert_eq!(lambda0_lucas(0, 11).unwrap(), 1);
        // digits 2,1,2 -> 3*2*3
        assert_eq!(lambda0_lucas(23, 3).unwrap(), 18);

        assert_eq!(lambda0_glaisher(11).unwrap(), 8);
        assert_eq!(lambda0_glaisher(0).unwrap(), 1);
        // the row of C(7,x) is all odd
        assert_eq!(lambda0_glaisher(7).unwrap(), 8);
        assert_eq!(lambda0_glaisher(u64::MAX >> 1), Err(Error::Overflow));
    }

    #[test]
    fn closed_form_examples() {
        let s = zumkeller_spectrum_closed_form(ZumkellerClass::InnerException { t: 1, m: 3 }, 2)
            .unwrap();
        assert_eq!((s.n(), s.counts()), (11, &[8u64, 4][..]));

        let s = zumkeller_spectrum_closed_form(ZumkellerClass::Zero, 5).unwrap();
        assert_eq!((s.n(), s.counts()), (0, &[1u64][..]));

        let s = zumkeller_spectrum_closed_form(ZumkellerClass::InnerException { t: 1, m: 2 }, 3)
            .unwrap();
        assert_eq!((s.n(), s.counts()), (23, &[18u64, 6][..]));

        let s = zumkeller_spectrum_closed_form(ZumkellerClass::AllMax { m: 2 }, 3).unwrap();
        assert_eq!((s.n(), s.counts()), (26, &[27u64][..]));

        let s = zumkeller_spectrum_closed_form(ZumkellerClass::LeadingException { digit: 1, m: 2 }, 3)
            .unwrap();
        assert_eq!((s.n(), s.counts()), (17, &[18u64][..]));

        assert_eq!(
            zumkeller_spectrum_closed_form(ZumkellerClass::NotZumkeller, 2),
            Err(Error::NotZumkellerInput)
        );
        assert_eq!(
            zumkeller_spectrum_closed_form(ZumkellerClass::LeadingException { digit: 1, m: 0 }, 2),
            Err(Error::DigitOutOfRange { digit: 1, base: 2 })
        );
    }

    #[test]
    fn power_minus_one_rows_have_single_entry() {
        for p in [2u64, 3, 5, 7] {
            for j in 1..6u32 {
                let n = p.pow(j) - 1;
                let s = spectrum_digit_dp(n, p).unwrap();
                assert_eq!(s.counts(), &[n + 1], "p = {p}, j = {j}");
            }
        }
    }

    #[test]
    fn method_dispatch_honors_guard() {
        assert_eq!(
            compute_spectrum(300, 2, SpectrumMethod::Brute, 200),
            Err(Error::GuardExceeded { n: 300, guard: 200 })
        );
        let via_auto = compute_spectrum(300, 2, SpectrumMethod::Auto, 200).unwrap();
        assert_eq!(via_auto, spectrum_digit_dp(300, 2).unwrap());
        let via_dp = compute_spectrum(64, 2, SpectrumMethod::DigitDp, 200).unwrap();
        let via_brute = compute_spectrum(64, 2, SpectrumMethod::Brute, 200).unwrap();
        assert_eq!(via_dp, via_brute);
    }
}
