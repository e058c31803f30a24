use core::fmt;

/// Errors shared by every operation in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// `p` is not usable as a base: composite, smaller than 2, or beyond
    /// the `2^20` cap on validated primes.
    NotPrime(u64),
    /// A value exceeds the `2^63 - 1` cap this crate operates under.
    ValueOutOfRange(u64),
    /// A digit does not fit the base.
    DigitOutOfRange { digit: u64, base: u64 },
    /// An intermediate or final value would exceed `2^63 - 1`.
    Overflow,
    /// Digit-pattern indices are inconsistent (`t > m`).
    InvalidIndices { t: u32, m: u32 },
    /// `x > n` where `x <= n` is required.
    XExceedsN { x: u64, n: u64 },
    /// `t > n` where `t <= n` is required.
    TExceedsN { t: u64, n: u64 },
    /// A brute-force enumeration was requested beyond its guard.
    GuardExceeded { n: u64, guard: u64 },
    /// A closed-form spectrum was requested for a non-Zumkeller class.
    NotZumkellerInput,
    /// An empty or inverted range was supplied.
    InvalidRange { lo: u64, hi: u64 },
    /// Two distinct primes are required.
    SamePrime(u64),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::NotPrime(p) => write!(f, "{p} is not a prime in the supported range (2..=2^20)"),
            Error::ValueOutOfRange(n) => write!(f, "value {n} exceeds the 2^63 - 1 cap"),
            Error::DigitOutOfRange { digit, base } => {
                write!(f, "digit {digit} is out of range for base {base}")
            }
            Error::Overflow => write!(f, "arithmetic overflow past the 2^63 - 1 cap"),
            Error::InvalidIndices { t, m } => {
                write!(f, "exception index t = {t} exceeds top index m = {m}")
            }
            Error::XExceedsN { x, n } => write!(f, "x = {x} exceeds n = {n}"),
            Error::TExceedsN { t, n } => write!(f, "t = {t} exceeds n = {n}"),
            Error::GuardExceeded { n, guard } => {
                write!(f, "n = {n} exceeds the brute-force guard {guard}")
            }
            Error::NotZumkellerInput => {
                write!(f, "closed-form spectrum requires a Zumkeller classification")
            }
            Error::InvalidRange { lo, hi } => write!(f, "invalid range: {lo}..={hi}"),
            Error::SamePrime(p) => write!(f, "the two primes must differ (both are {p})"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
