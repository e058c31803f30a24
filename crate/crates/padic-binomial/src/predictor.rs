//! Zumkeller digit patterns and the predictor property.
//!
//! A nonnegative `n` is Zumkeller in base `p` when it is 0 or its base-p
//! digits are all `p-1` except at most one: a leading exception may be any
//! digit in `1..=p-2` (possible only for `p >= 3`), any other exception
//! must be exactly `p-2`. `n` is a predictor in base `p` when its row
//! spectrum can be read off the digits of `n+1`: with
//! `n+1 = α_0 p^ν + ... + α_ν`, the spectrum is `c_k = α_k p^(ν-k)`.
//! The two notions coincide; [`verify_theorem`] checks that over a range.

use alloc::vec::Vec;
use core::time::Duration;

use crate::digits::{
    build_inner_exception, check_prime, check_value, checked_pow, digit_sum_raw, expand,
    DigitExpansion, MAX_VALUE,
};
use crate::error::{Error, Result};
use crate::spectrum::{
    compute_spectrum, SpectrumMethod, ValuationSpectrum, DEFAULT_BRUTE_GUARD,
};

/// Classification of a number against the Zumkeller digit patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZumkellerClass {
    NotZumkeller,
    Zero,
    /// All `m+1` digits equal `p-1`.
    AllMax { m: u32 },
    /// Leading digit in `1..=p-2`, the remaining `m` digits equal `p-1`.
    LeadingException { digit: u64, m: u32 },
    /// Digit `p-2` at index `t` (`1 <= t <= m`), all others `p-1`.
    InnerException { t: u32, m: u32 },
}

impl ZumkellerClass {
    pub fn is_zumkeller(&self) -> bool {
        !matches!(self, ZumkellerClass::NotZumkeller)
    }

    /// Recomposes the number this class describes in base `p`.
    pub fn to_value(&self, p: u64) -> Result<u64> {
        check_prime(p)?;
        match *self {
            ZumkellerClass::NotZumkeller => Err(Error::NotZumkellerInput),
            ZumkellerClass::Zero => Ok(0),
            ZumkellerClass::AllMax { m } => Ok(checked_pow(p, m + 1)? - 1),
            ZumkellerClass::LeadingException { digit, m } => {
                if digit == 0 || digit > p - 2 {
                    return Err(Error::DigitOutOfRange { digit, base: p });
                }
                checked_pow(p, m)?
                    .checked_mul(digit + 1)
                    .filter(|&v| v <= MAX_VALUE)
                    .map(|v| v - 1)
                    .ok_or(Error::Overflow)
            }
            ZumkellerClass::InnerException { t, m } => build_inner_exception(p, t, m),
        }
    }
}

/// A predictor check: the spectrum read off the digits of `n+1` against
/// the actually computed one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictorReport {
    pub n: u64,
    pub p: u64,
    /// Expansion of `n + 1`, whose digits are the `α_k`.
    pub successor_digits: DigitExpansion,
    pub expected: ValuationSpectrum,
    pub actual: ValuationSpectrum,
    pub verdict: bool,
}

/// Which way a theorem counterexample fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    PredictorNotZumkeller,
    ZumkellerNotPredictor,
}

impl Direction {
    pub fn as_str(&self) -> &'static str {
        match self {
            Direction::PredictorNotZumkeller => "predictor-not-zumkeller",
            Direction::ZumkellerNotPredictor => "zumkeller-not-predictor",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counterexample {
    pub n: u64,
    pub direction: Direction,
}

/// Result of sweeping a range for predictor/Zumkeller disagreements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRecord {
    pub p: u64,
    pub lo: u64,
    pub hi: u64,
    pub checked_count: u64,
    /// Disagreements, ascending by `n`. Empty if the equivalence holds.
    pub counterexamples: Vec<Counterexample>,
    /// Wall time of the sweep. This crate has no clock; it is zero unless
    /// a caller that measured the sweep fills it in.
    pub elapsed: Duration,
}

impl VerificationRecord {
    pub fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.elapsed = elapsed;
        self
    }
}

/// Both sides of the equivalence for a single `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremCheck {
    pub n: u64,
    pub is_zumkeller: bool,
    pub is_predictor: bool,
}

impl TheoremCheck {
    pub fn agree(&self) -> bool {
        self.is_zumkeller == self.is_predictor
    }
}

/// Classifies `n` against the Zumkeller digit patterns in base `p`.
///
/// A leading digit `p-2` with all others `p-1` matches both the leading
/// and the inner pattern; it is classified as a leading exception (the two
/// closed-form spectra coincide, so the choice is observationally
/// irrelevant).
pub fn classify_zumkeller(n: u64, p: u64) -> Result<ZumkellerClass> {
    let e = expand(n, p)?;
    if n == 0 {
        return Ok(ZumkellerClass::Zero);
    }
    let digits = e.digits();
    let m = digits.len() as u32 - 1;
    let mut exception: Option<(usize, u64)> = None;
    for (i, &d) in digits.iter().enumerate() {
        if d != p - 1 {
            if exception.is_some() {
                return Ok(ZumkellerClass::NotZumkeller);
            }
            exception = Some((i, d));
        }
    }
    Ok(match exception {
        None => ZumkellerClass::AllMax { m },
        Some((0, d)) if d >= 1 && d <= p - 2 => ZumkellerClass::LeadingException { digit: d, m },
        Some((i, d)) if i >= 1 && d == p - 2 => ZumkellerClass::InnerException { t: i as u32, m },
        Some(_) => ZumkellerClass::NotZumkeller,
    })
}

/// All Zumkeller numbers up to `limit`, ascending.
///
/// Generated constructively from the digit patterns, one width at a time,
/// never by filtering the whole range.
pub fn enumerate_zumkeller(p: u64, limit: u64) -> Result<Vec<u64>> {
    check_prime(p)?;
    check_value(limit)?;
    let p128 = p as u128;
    let limit = limit as u128;
    let mut out = alloc::vec![0u64];
    let mut pow_m: u128 = 1;
    loop {
        // smallest number with this many digits is p^m
        if pow_m > limit {
            break;
        }
        let pow_w = pow_m * p128;
        // leading exceptions, ascending in the leading digit
        let mut d = 1;
        while d + 1 <= p128 - 1 {
            let v = (d + 1) * pow_m - 1;
            if v > limit {
                break;
            }
            out.push(v as u64);
            d += 1;
        }
        // inner exceptions, ascending in the exception index
        if pow_m > 1 {
            let mut q = pow_m / p128;
            loop {
                let v = pow_w - 1 - q;
                if v <= limit {
                    out.push(v as u64);
                }
                if q == 1 {
                    break;
                }
                q /= p128;
            }
        }
        let all_max = pow_w - 1;
        if all_max <= limit {
            out.push(all_max as u64);
        }
        pow_m = pow_w;
    }
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    Ok(out)
}

/// The spectrum `n` *predicts*: counts `α_k p^(ν-k)` read off the base-p
/// digits `α_0..α_ν` of `n+1`.
pub fn expected_spectrum(n: u64, p: u64) -> Result<ValuationSpectrum> {
    let successor = n
        .checked_add(1)
        .filter(|&v| v <= MAX_VALUE)
        .ok_or(Error::Overflow)?;
    let e = expand(successor, p)?;
    let nu = e.digits().len() as u32 - 1;
    let counts = e
        .digits()
        .iter()
        .enumerate()
        .map(|(k, &alpha)| Ok(alpha * checked_pow(p, nu - k as u32)?))
        .collect::<Result<Vec<u64>>>()?;
    Ok(ValuationSpectrum::from_counts(p, n, counts))
}

/// Compares the predicted spectrum of `n` with the computed one.
pub fn check_predictor(n: u64, p: u64, method: SpectrumMethod) -> Result<PredictorReport> {
    check_predictor_guarded(n, p, method, DEFAULT_BRUTE_GUARD)
}

/// [`check_predictor`] with an explicit brute-force guard.
pub fn check_predictor_guarded(
    n: u64,
    p: u64,
    method: SpectrumMethod,
    guard: u64,
) -> Result<PredictorReport> {
    let expected = expected_spectrum(n, p)?;
    let successor_digits = expand(n + 1, p)?;
    let actual = compute_spectrum(n, p, method, guard)?;
    let verdict = expected == actual;
    Ok(PredictorReport {
        n,
        p,
        successor_digits,
        expected,
        actual,
        verdict,
    })
}

/// Evaluates both sides of the equivalence for one `n`, using the digit DP.
pub fn check_theorem_case(n: u64, p: u64) -> Result<TheoremCheck> {
    let is_zumkeller = classify_zumkeller(n, p)?.is_zumkeller();
    let is_predictor =
        check_predictor_guarded(n, p, SpectrumMethod::DigitDp, DEFAULT_BRUTE_GUARD)?.verdict;
    Ok(TheoremCheck {
        n,
        is_zumkeller,
        is_predictor,
    })
}

/// Sweeps `lo..=hi` comparing the predictor verdict (via the digit DP)
/// with the Zumkeller classification, recording every disagreement.
pub fn verify_theorem(p: u64, lo: u64, hi: u64) -> Result<VerificationRecord> {
    check_prime(p)?;
    if lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    if hi >= MAX_VALUE {
        return Err(Error::ValueOutOfRange(hi));
    }
    let mut counterexamples = Vec::new();
    for n in lo..=hi {
        let case = check_theorem_case(n, p)?;
        if !case.agree() {
            counterexamples.push(Counterexample {
                n,
                direction: if case.is_predictor {
                    Direction::PredictorNotZumkeller
                } else {
                    Direction::ZumkellerNotPredictor
                },
            });
        }
    }
    Ok(VerificationRecord {
        p,
        lo,
        hi,
        checked_count: hi - lo + 1,
        counterexamples,
        elapsed: Duration::ZERO,
    })
}

/// All `n <= limit` with equal digit sums in bases `p` and `q`, ascending.
pub fn digit_sum_search(p: u64, q: u64, limit: u64) -> Result<Vec<u64>> {
    digit_sum_search_guarded(p, q, limit, DEFAULT_BRUTE_GUARD)
}

/// [`digit_sum_search`] with an explicit guard.
pub fn digit_sum_search_guarded(p: u64, q: u64, limit: u64, guard: u64) -> Result<Vec<u64>> {
    check_prime(p)?;
    check_prime(q)?;
    if p == q {
        return Err(Error::SamePrime(p));
    }
    check_value(limit)?;
    if limit > guard {
        return Err(Error::GuardExceeded { n: limit, guard });
    }
    Ok((0..=limit)
        .filter(|&n| digit_sum_raw(n, p) == digit_sum_raw(n, q))
        .collect())
}
