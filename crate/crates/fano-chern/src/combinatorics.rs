//! Binomial coefficients, Bernoulli numbers and the signed combinatorial
//! sums the coefficient recursion is built from.
//!
//! Bernoulli numbers follow the `B_1 = -1/2` convention unless a
//! [`BernoulliConvention`] says otherwise, and are memoized process-wide, so
//! repeated queries are cheap and concurrent callers see a consistent table.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut result = BigInt::one();
    // Each partial product is divisible by t!: the division stays exact.
    for t in 1..=k {
        result = result * BigInt::from(n - k + t) / BigInt::from(t);
    }
    result
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=u64::from(n)).map(BigInt::from).product()
}

/// Which value the first Bernoulli number takes; all others agree up to the
/// sign flip `(-1)^m`, which only matters at `m = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BernoulliConvention {
    /// `B_1 = -1/2`, the convention used everywhere else in this crate.
    MinusHalf,
    /// `B_1 = +1/2`.
    PlusHalf,
}

static BERNOULLI_CACHE: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Bernoulli number `B_m` in the `B_1 = -1/2` convention.
///
/// Computed by the defining recurrence
/// `B_m = -(1/(m+1)) * sum_{k=0}^{m-1} C(m+1, k) B_k`
/// and cached for the lifetime of the process.
pub fn bernoulli(m: u32) -> Rational {
    let m = m as usize;
    let mut cache = BERNOULLI_CACHE.lock().expect("bernoulli cache poisoned");
    while cache.len() <= m {
        let n = cache.len();
        if n == 0 {
            cache.push(Rational::one());
            continue;
        }
        let sum: Rational = (0..n)
            .map(|k| Rational::from(binomial(n as u64 + 1, k as i64)) * &cache[k])
            .sum();
        cache.push(-sum / Rational::from(n as u64 + 1));
    }
    cache[m].clone()
}

/// Bernoulli number `B_m` in the requested convention.
pub fn bernoulli_in_convention(m: u32, convention: BernoulliConvention) -> Rational {
    let b = bernoulli(m);
    match convention {
        BernoulliConvention::MinusHalf => b,
        // (-1)^m B_m: only the m = 1 value actually changes sign.
        BernoulliConvention::PlusHalf => {
            if m % 2 == 1 {
                -b
            } else {
                b
            }
        }
    }
}

/// Weights `(-1)^m B_m / m!` for `m = 0..=max_m`, the coefficient pattern
/// both the coefficient recursion and the Chern step contract against.
/// Zero at every odd `m >= 3`.
pub(crate) fn signed_bernoulli_weights(max_m: u32) -> Vec<Rational> {
    let mut inv_factorial = Rational::one();
    (0..=max_m)
        .map(|m| {
            if m > 0 {
                inv_factorial /= Rational::from(m);
            }
            let b = bernoulli(m);
            let w = b * &inv_factorial;
            if m % 2 == 1 {
                -w
            } else {
                w
            }
        })
        .collect()
}

/// Signed sum `c(m, p) = sum_{q=1}^{p} (-1)^q C(p, q) q^m`.
///
/// Vanishes whenever `m < p`, and satisfies
/// `B_m = sum_{p=1}^{m} c(m, p) / (p + 1)` for `m >= 1`.
pub fn c_coeff(m: u32, p: u32) -> BigInt {
    let mut sum = BigInt::zero();
    for q in 1..=p {
        let term = binomial(u64::from(p), i64::from(q)) * BigInt::from(q).pow(m);
        if q % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
    }
    sum
}

/// Whether a power sum includes its upper limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerSumRange {
    /// `sum_{r=0}^{q-1} r^j`, with `0^0 = 1`.
    Exclusive,
    /// `sum_{r=1}^{q} r^j`.
    Inclusive,
}

/// Power sum `sum r^j` up to `q`, evaluated through its closed-form
/// polynomial rather than by iteration.
///
/// The exclusive variant expands with `B_1 = -1/2` coefficients, the
/// inclusive one with `B_1 = +1/2`; no other term differs.
pub fn power_sum(q: u64, j: u32, range: PowerSumRange) -> Rational {
    let convention = match range {
        PowerSumRange::Exclusive => BernoulliConvention::MinusHalf,
        PowerSumRange::Inclusive => BernoulliConvention::PlusHalf,
    };
    let q = BigInt::from(q);
    let mut sum = Rational::zero();
    for m in 0..=j {
        let b = bernoulli_in_convention(m, convention);
        if b.is_zero() {
            continue;
        }
        let power = q.pow(j + 1 - m);
        sum += b * Rational::from(binomial(u64::from(j) + 1, i64::from(m))) * Rational::from(power);
    }
    sum / Rational::from(j + 1)
}

/// Truncated alternating binomial sum `sum_{q=r+1}^{p} (-1)^q C(p, q)`,
/// summed term by term.
///
/// Needs `p >= 1` and `0 <= r <= p - 1`; equals `(-1)^(r+1) C(p-1, r)` on
/// that domain, which the tests check independently.
pub fn alternating_binomial_tail(p: u64, r: u64) -> Result<BigInt> {
    if p == 0 || r >= p {
        return Err(Error::TailIndexOutOfRange { p, r });
    }
    let mut sum = BigInt::zero();
    for q in r + 1..=p {
        let term = binomial(p, q as i64);
        if q % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
    }
    Ok(sum)
}
