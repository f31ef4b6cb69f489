//! The recursively defined coefficient family `b(i, j, k)` and its
//! positivity verification.
//!
//! For `i >= 1`, `j >= 1` and `0 <= k <= i + j` the coefficients are fixed
//! by the depth-one row
//!
//! ```text
//! b(1, j, 0) = -1/j!        b(1, j, k) = (-1)^(j+1-k) B_(j+1-k) / (j+1-k)!   (k >= 1)
//! ```
//!
//! and, for `i >= 2`, with weights `w_m = (-1)^m B_m / m!`,
//!
//! ```text
//! b(i, j, k) = sum_{m=0}^{min(j, i+j-k)} w_m * b(i-1, j+1-m, k)  -  [k = 0] / j!
//! ```
//!
//! The step never changes `k`, so a fixed-`k` column depends only on the
//! column at the same `k` ([`b_column`], [`b_columns`]), while full-row
//! sweeps ([`verify_positivity`]) advance whole levels at once over a
//! shared integer denominator. Point queries go through a process wide
//! memoized [`CoeffTable`].

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    bernoulli_in_convention, c_coeff, factorial, signed_bernoulli_weights, BernoulliConvention,
};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A validated coefficient position: `i >= 1`, `j >= 1`, `0 <= k <= i + j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CoeffIndex {
    i: u32,
    j: u32,
    k: u32,
}

impl CoeffIndex {
    pub fn new(i: u32, j: u32, k: u32) -> Result<Self> {
        if i < 1 || j < 1 || k > i + j {
            return Err(Error::InvalidCoeffIndex {
                i,
                j,
                k: i64::from(k),
            });
        }
        Ok(CoeffIndex { i, j, k })
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn k(&self) -> u32 {
        self.k
    }
}

/// Memoized store of full coefficient rows.
///
/// A row `(i, j)` holds `b(i, j, k)` for `k = 0..=i+j`. Filling row
/// `(i, j)` touches rows `(i', j')` with `i' < i`, `j' <= j + i - i'`; the
/// fill is iterative over depth, so no query recurses.
#[derive(Debug, Default)]
pub struct CoeffTable {
    rows: HashMap<(u32, u32), Vec<Rational>>,
    weights: Vec<Rational>,
}

impl CoeffTable {
    pub fn new() -> Self {
        CoeffTable::default()
    }

    /// Number of rows currently memoized.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The full row `b(i, j, 0..=i+j)`.
    pub fn row(&mut self, i: u32, j: u32) -> Result<&[Rational]> {
        if i < 1 || j < 1 {
            return Err(Error::InvalidCoeffRow { i, j });
        }
        if !self.rows.contains_key(&(i, j)) {
            self.ensure_weights(i + j - 1);
            for level in 1..=i {
                let j_hi = j + (i - level);
                for jj in 1..=j_hi {
                    if self.rows.contains_key(&(level, jj)) {
                        continue;
                    }
                    let row = if level == 1 {
                        base_row(jj, &self.weights)
                    } else {
                        self.step_row(level, jj)
                    };
                    self.rows.insert((level, jj), row);
                }
            }
        }
        Ok(&self.rows[&(i, j)])
    }

    /// A single coefficient `b(index)`.
    pub fn coeff(&mut self, index: CoeffIndex) -> Result<Rational> {
        let row = self.row(index.i, index.j)?;
        Ok(row[index.k as usize].clone())
    }

    fn ensure_weights(&mut self, max_m: u32) {
        if self.weights.len() <= max_m as usize {
            self.weights = signed_bernoulli_weights(max_m);
        }
    }

    fn step_row(&self, i: u32, j: u32) -> Vec<Rational> {
        let len = (i + j + 1) as usize;
        let minus_inv_jfact = -Rational::from(factorial(j)).recip();
        let mut row = Vec::with_capacity(len);
        for k in 0..=i + j {
            let m_hi = j.min(i + j - k);
            let mut value = Rational::zero();
            for m in 0..=m_hi {
                let w = &self.weights[m as usize];
                if w.is_zero() {
                    continue;
                }
                let prev = &self.rows[&(i - 1, j + 1 - m)];
                // Window bound keeps k inside the previous row: k <= (i-1) + (j+1-m).
                debug_assert!((k as usize) < prev.len());
                value += w * &prev[k as usize];
            }
            if k == 0 {
                value += &minus_inv_jfact;
            }
            row.push(value);
        }
        row
    }
}

/// Depth-one row: `-1/j!` at `k = 0`, then `w_(j+1-k)` for `k = 1..=j+1`.
fn base_row(j: u32, weights: &[Rational]) -> Vec<Rational> {
    let mut row = Vec::with_capacity((j + 2) as usize);
    row.push(-Rational::from(factorial(j)).recip());
    for k in 1..=j + 1 {
        row.push(weights[(j + 1 - k) as usize].clone());
    }
    row
}

fn global_table() -> &'static Mutex<CoeffTable> {
    static TABLE: OnceLock<Mutex<CoeffTable>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(CoeffTable::new()))
}

/// The coefficient `b(i, j, k)`, memoized process-wide.
pub fn b_coeff(i: u32, j: u32, k: u32) -> Result<Rational> {
    let index = CoeffIndex::new(i, j, k)?;
    global_table()
        .lock()
        .expect("coefficient table poisoned")
        .coeff(index)
}

/// The full row `b(i, j, 0..=i+j)`, memoized process-wide.
pub fn b_row(i: u32, j: u32) -> Result<Vec<Rational>> {
    Ok(global_table()
        .lock()
        .expect("coefficient table poisoned")
        .row(i, j)?
        .to_vec())
}

/// Closed form for the `k = 0` slice: `b(i, j, 0) = -i / j!`.
pub fn b_closed_form_k0(i: u32, j: u32) -> Result<Rational> {
    if i < 1 || j < 1 {
        return Err(Error::InvalidCoeffRow { i, j });
    }
    Ok(-Rational::from(i) / Rational::from(factorial(j)))
}

/// Closed form for the `k = 1` slice:
/// `b(i, j, 1) = ((-1)^j / j!) * sum_{p=1}^{j} c(j, p) / (i + p)`.
pub fn b_closed_form_k1(i: u32, j: u32) -> Result<Rational> {
    if i < 1 || j < 1 {
        return Err(Error::InvalidCoeffRow { i, j });
    }
    let sum: Rational = (1..=j)
        .map(|p| Rational::from(c_coeff(j, p)) / Rational::from(i + p))
        .sum();
    let sign_over_jfact = if j % 2 == 0 {
        Rational::from(factorial(j)).recip()
    } else {
        -Rational::from(factorial(j)).recip()
    };
    Ok(sign_over_jfact * sum)
}

/// Precomputed weights for [`column_scan`], shared across every `k`.
///
/// The sweep runs on factorial-scaled values `s(i, j) = b(i, j, k) * j!`:
/// with `t_m = (-1)^m B_m` the step turns into
///
/// ```text
/// s(i, j) = (1/(j+1)) * sum_m C(j+1, m) * t_m * s(i-1, j+1-m)  -  [k = 0]
/// ```
///
/// which keeps every denominator small (the `1/m!` and `1/j!` factors that
/// would otherwise dominate wide slots cancel), so the big-integer work is
/// multiplication instead of gcd reduction. `j!` is positive, so sign
/// checks need no rescaling.
struct ScanWeights {
    /// `t_m = (-1)^m B_m` for `m <= width_max`.
    tilde: Vec<Rational>,
    /// Row `j` (1-based): the nonzero `(m, C(j+1, m) * t_m)` in ascending
    /// `m`; odd `m >= 3` are absent.
    rows: Vec<Vec<(u32, Rational)>>,
}

fn scan_weights(width_max: u32) -> ScanWeights {
    let tilde: Vec<Rational> = (0..=width_max)
        .map(|m| bernoulli_in_convention(m, BernoulliConvention::PlusHalf))
        .collect();
    let mut rows = Vec::with_capacity(width_max as usize);
    // Pascal row j+1, advanced in lockstep with j.
    let mut pascal: Vec<BigInt> = vec![BigInt::one(), BigInt::one()];
    for j in 1..=width_max {
        let mut next = Vec::with_capacity(pascal.len() + 1);
        next.push(BigInt::one());
        for t in 1..pascal.len() {
            next.push(&pascal[t - 1] + &pascal[t]);
        }
        next.push(BigInt::one());
        pascal = next;
        let row = (0..=j)
            .filter(|&m| !tilde[m as usize].is_zero())
            .map(|m| {
                let weight = &tilde[m as usize] * Rational::from(pascal[m as usize].clone());
                (m, weight)
            })
            .collect();
        rows.push(row);
    }
    ScanWeights { tilde, rows }
}

/// Depth-one value `s(1, j) = b(1, j, k) * j!`.
fn scaled_base(j: u32, k: u32, tilde: &[Rational]) -> Rational {
    if k == 0 {
        return -Rational::one();
    }
    let tilde_value = &tilde[(j + 1 - k) as usize];
    if tilde_value.is_zero() {
        return Rational::zero();
    }
    // j! / (j + 1 - k)! as an integer factor; empty for k = 1.
    let mut falling = BigInt::one();
    for t in (j + 2 - k)..=j {
        falling *= BigInt::from(t);
    }
    tilde_value * Rational::from(falling)
}

/// Fixed-`k` sweep over depths `1..=i_max`, keeping two rows of state.
///
/// `on_level` receives each depth `i` and a slice of scaled values
/// `b(i, j, k) * j!` indexed by `j`; slot `j` is `None` exactly when
/// `k > i + j`, and slot 0 is never populated. The slice covers
/// `j = 1..=j_top + i_max - i`.
fn column_scan<F>(k: u32, j_top: u32, i_max: u32, weights: &ScanWeights, mut on_level: F)
where
    F: FnMut(u32, &[Option<Rational>]),
{
    let width = |i: u32| (j_top + i_max - i) as usize;
    let mut prev: Vec<Option<Rational>> = vec![None; width(1) + 1];
    for (j, slot) in prev.iter_mut().enumerate().skip(1) {
        let j = j as u32;
        if k <= 1 + j {
            *slot = Some(scaled_base(j, k, &weights.tilde));
        }
    }
    on_level(1, &prev);
    for i in 2..=i_max {
        let mut cur: Vec<Option<Rational>> = vec![None; width(i) + 1];
        for (j, slot) in cur.iter_mut().enumerate().skip(1) {
            let j = j as u32;
            if k > i + j {
                continue;
            }
            let m_hi = j.min(i + j - k);
            let mut value = Rational::zero();
            for (m, weight) in &weights.rows[(j - 1) as usize] {
                if *m > m_hi {
                    break;
                }
                let prev_value = prev[(j + 1 - m) as usize]
                    .as_ref()
                    .expect("window bound keeps the previous level defined");
                value += weight * prev_value;
            }
            value = value / Rational::from(j + 1);
            if k == 0 {
                value -= Rational::one();
            }
            *slot = Some(value);
        }
        prev = cur;
        on_level(i, &prev);
    }
}

/// Values `b(i, j, k)` for fixed `j` and `k`, over every admissible depth
/// `i <= i_max`, in increasing `i` order.
///
/// The first entry sits at `i = max(1, k - j)`; for `k <= j + 1` that is
/// `i = 1` and the result has `i_max` entries.
pub fn b_column(j: u32, k: u32, i_max: u32) -> Result<Vec<Rational>> {
    let mut columns = b_columns(&[j], k, i_max)?;
    Ok(columns.remove(&j).expect("requested column present"))
}

/// Columns for several `j` at once from a single sweep; the map holds one
/// entry per distinct requested `j`, each as in [`b_column`].
pub fn b_columns(j_list: &[u32], k: u32, i_max: u32) -> Result<BTreeMap<u32, Vec<Rational>>> {
    if j_list.is_empty() || j_list.contains(&0) || i_max < 1 {
        return Err(Error::InvalidRange {
            reason: format!(
                "b_columns needs a nonempty j list with every j >= 1 and i_max >= 1, \
                 got {j_list:?}, i_max={i_max}"
            ),
        });
    }
    let mut js: Vec<u32> = j_list.to_vec();
    js.sort_unstable();
    js.dedup();
    let j_top = *js.last().expect("nonempty after validation");
    if k > i_max + j_top {
        return Err(Error::InvalidCoeffIndex {
            i: i_max,
            j: j_top,
            k: i64::from(k),
        });
    }
    let weights = scan_weights(j_top + i_max - 1);
    let mut columns: BTreeMap<u32, Vec<Rational>> =
        js.iter().map(|&j| (j, Vec::new())).collect();
    let inv_factorials: BTreeMap<u32, Rational> = js
        .iter()
        .map(|&j| (j, Rational::from(factorial(j)).recip()))
        .collect();
    column_scan(k, j_top, i_max, &weights, |i, values| {
        for &j in &js {
            if k <= i + j {
                let value = values[j as usize]
                    .as_ref()
                    .expect("k <= i + j slot populated");
                columns
                    .get_mut(&j)
                    .expect("column preallocated")
                    .push(value * &inv_factorials[&j]);
            }
        }
    });
    Ok(columns)
}

/// One recursion row in shared-denominator form: entry `k` of row
/// `(i, j)` is `nums[k] / den` with `den > 0`, so entry signs are the
/// signs of the numerators.
struct ScaledRow {
    nums: Vec<BigInt>,
    den: BigInt,
}

/// Step weights `t_m / m!` split into integer parts: `terms` holds the
/// nonzero `(m, numer(t_m), denom(t_m) * m!)` in ascending `m`.
struct StepWeights {
    terms: Vec<(u32, BigInt, BigInt)>,
    factorials: Vec<BigInt>,
}

fn step_weights(width_max: u32) -> StepWeights {
    let terms = (0..=width_max)
        .filter_map(|m| {
            let t = bernoulli_in_convention(m, BernoulliConvention::PlusHalf);
            if t.is_zero() {
                None
            } else {
                Some((m, t.numer().clone(), t.denom() * factorial(m)))
            }
        })
        .collect();
    let factorials = (0..=width_max).map(factorial).collect();
    StepWeights { terms, factorials }
}

fn scaled_base_row(jj: u32, weights: &StepWeights) -> ScaledRow {
    let jj_fact = &weights.factorials[jj as usize];
    let mut den = jj_fact.clone();
    for (m, _, weight_den) in &weights.terms {
        if *m > jj {
            break;
        }
        den = den.lcm(weight_den);
    }
    let mut nums = vec![BigInt::zero(); jj as usize + 2];
    nums[0] = -(&den / jj_fact);
    for (m, weight_num, weight_den) in &weights.terms {
        if *m > jj {
            break;
        }
        nums[(jj + 1 - m) as usize] = weight_num * (&den / weight_den);
    }
    ScaledRow { nums, den }
}

/// Builds row `(level, jj)` from the previous level, whose row `j` sits
/// at `prev[j - 1]`. All divisions below are exact by choice of `den`.
fn scaled_step_row(level: u32, jj: u32, prev: &[ScaledRow], weights: &StepWeights) -> ScaledRow {
    let jj_fact = &weights.factorials[jj as usize];
    let mut den = jj_fact.clone();
    for (m, _, weight_den) in &weights.terms {
        if *m > jj {
            break;
        }
        den = den.lcm(&(weight_den * &prev[(jj - m) as usize].den));
    }
    let mut nums = vec![BigInt::zero(); (level + jj) as usize + 1];
    for (m, weight_num, weight_den) in &weights.terms {
        if *m > jj {
            break;
        }
        let source = &prev[(jj - m) as usize];
        let factor = weight_num * (&den / (weight_den * &source.den));
        // The source row is shorter than `nums` exactly where the target
        // entries vanish, so the zip bound is the right truncation.
        for (slot, value) in nums.iter_mut().zip(&source.nums) {
            *slot += &factor * value;
        }
    }
    nums[0] -= &den / jj_fact;
    let mut content = den.clone();
    for value in &nums {
        if content.is_one() {
            break;
        }
        content = content.gcd(value);
    }
    if !content.is_one() {
        for value in nums.iter_mut() {
            *value /= &content;
        }
        den /= &content;
    }
    ScaledRow { nums, den }
}

fn collect_violations(
    level: u32,
    rows: &[ScaledRow],
    js: &[u32],
    strict: bool,
    i_lo: u32,
    violations: &mut Vec<Violation>,
) {
    if level < i_lo {
        return;
    }
    for &j in js {
        let row = &rows[(j - 1) as usize];
        for (k, num) in row.nums.iter().enumerate().skip(1) {
            let bad = if strict {
                !num.is_positive()
            } else {
                num.is_negative()
            };
            if bad {
                violations.push(Violation {
                    index: CoeffIndex::new(level, j, k as u32).expect("swept index in range"),
                    value: Rational::from_big(num.clone(), row.den.clone()),
                });
            }
        }
    }
}

/// One coefficient at or below zero found during verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub index: CoeffIndex,
    pub value: Rational,
}

/// Outcome of a positivity sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivityReport {
    pub i_lo: u32,
    pub i_hi: u32,
    /// Sorted, deduplicated list of verified `j` values.
    pub j_list: Vec<u32>,
    pub strict: bool,
    /// Number of `(i, j, k)` triples examined.
    pub checked: u64,
    /// Violations sorted by `(i, j, k)`.
    pub violations: Vec<Violation>,
    pub elapsed: Duration,
}

impl PositivityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `b(i, j, k) > 0` (or `>= 0` when `strict` is false) for every
/// `i` in `i_lo..=i_hi`, `j` in `j_list` and `1 <= k <= i + j`.
///
/// The `k = 0` slice is excluded: it is `-i/j!`, negative by closed form.
/// The sweep advances one level of rows at a time in integer arithmetic,
/// splitting each level across threads; sign checks cost nothing because
/// every row shares a single positive denominator.
pub fn verify_positivity(
    i_lo: u32,
    i_hi: u32,
    j_list: &[u32],
    strict: bool,
) -> Result<PositivityReport> {
    let start = Instant::now();
    if i_lo < 1 || i_lo > i_hi {
        return Err(Error::InvalidRange {
            reason: format!("need 1 <= i_lo <= i_hi, got i_lo={i_lo}, i_hi={i_hi}"),
        });
    }
    if j_list.is_empty() || j_list.contains(&0) {
        return Err(Error::InvalidRange {
            reason: "j_list must be nonempty with every j >= 1".to_owned(),
        });
    }
    let mut js: Vec<u32> = j_list.to_vec();
    js.sort_unstable();
    js.dedup();
    let j_top = *js.last().expect("nonempty after validation");

    let weights = step_weights(j_top + i_hi - 1);
    let mut violations: Vec<Violation> = Vec::new();

    let mut prev: Vec<ScaledRow> = (1..=j_top + i_hi - 1)
        .map(|jj| scaled_base_row(jj, &weights))
        .collect();
    collect_violations(1, &prev, &js, strict, i_lo, &mut violations);
    for level in 2..=i_hi {
        let width = j_top + i_hi - level;
        // Rows of one level only read the previous level: safe to split.
        let cur: Vec<ScaledRow> = (1..=width)
            .into_par_iter()
            .map(|jj| scaled_step_row(level, jj, &prev, &weights))
            .collect();
        collect_violations(level, &cur, &js, strict, i_lo, &mut violations);
        prev = cur;
    }
    violations.sort_by_key(|v| v.index);

    let checked = js
        .iter()
        .map(|&j| {
            (i_lo..=i_hi)
                .map(|i| u64::from(i) + u64::from(j))
                .sum::<u64>()
        })
        .sum();

    Ok(PositivityReport {
        i_lo,
        i_hi,
        j_list: js,
        strict,
        checked,
        violations,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn index_validation() {
        assert!(CoeffIndex::new(1, 1, 2).is_ok());
        assert!(CoeffIndex::new(0, 1, 0).is_err());
        assert!(CoeffIndex::new(1, 0, 0).is_err());
        assert!(CoeffIndex::new(2, 3, 6).is_err());
        assert!(CoeffIndex::new(2, 3, 5).is_ok());
    }

    #[test]
    fn depth_one_row() {
        assert_eq!(b_row(1, 1).unwrap(), vec![r(-1, 1), r(1, 2), r(1, 1)]);
        assert_eq!(
            b_row(1, 2).unwrap(),
            vec![r(-1, 2), r(1, 12), r(1, 2), r(1, 1)]
        );
        // Odd Bernoulli numbers above 1 vanish, so k = j - 2 slots go zero.
        assert_eq!(
            b_row(1, 3).unwrap(),
            vec![r(-1, 6), r(0, 1), r(1, 12), r(1, 2), r(1, 1)]
        );
    }

    #[test]
    fn step_row_hand_checked() {
        assert_eq!(
            b_row(2, 1).unwrap(),
            vec![r(-2, 1), r(1, 3), r(1, 1), r(1, 1)]
        );
    }

    #[test]
    fn top_coefficient_is_one() {
        for i in 1..=12 {
            for j in 1..=6 {
                assert_eq!(b_coeff(i, j, i + j).unwrap(), Rational::one(), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn closed_forms_match_hand_values() {
        assert_eq!(b_closed_form_k0(3, 2).unwrap(), r(-3, 2));
        assert_eq!(b_closed_form_k0(6, 4).unwrap(), r(-1, 4));
        assert_eq!(b_closed_form_k1(3, 1).unwrap(), r(1, 4));
        assert_eq!(b_closed_form_k1(5, 4).unwrap(), r(0, 1));
        assert_eq!(b_closed_form_k1(6, 4).unwrap(), r(1, 3360));
    }

    #[test]
    fn column_agrees_with_rows() {
        for j in 1..=3u32 {
            for k in 0..=j + 5 {
                let column = b_column(j, k, 5).unwrap();
                let i_start = 1.max(k.saturating_sub(j));
                assert_eq!(column.len() as u32, 5 - i_start + 1, "j={j} k={k}");
                for (offset, value) in column.iter().enumerate() {
                    let i = i_start + offset as u32;
                    assert_eq!(*value, b_coeff(i, j, k).unwrap(), "i={i} j={j} k={k}");
                }
            }
        }
    }

    #[test]
    fn column_rejects_unreachable_k() {
        assert!(b_column(1, 7, 5).is_err());
        assert!(b_column(0, 0, 5).is_err());
    }

    #[test]
    fn sweep_rows_match_point_queries() {
        let (i_hi, j_top) = (8u32, 4u32);
        let weights = step_weights(j_top + i_hi - 1);
        let mut prev: Vec<ScaledRow> = (1..=j_top + i_hi - 1)
            .map(|jj| scaled_base_row(jj, &weights))
            .collect();
        for level in 1..=i_hi {
            for (idx, row) in prev.iter().enumerate() {
                let jj = idx as u32 + 1;
                if jj > j_top {
                    continue;
                }
                assert_eq!(row.nums.len() as u32, level + jj + 1);
                for (k, num) in row.nums.iter().enumerate() {
                    let value = Rational::from_big(num.clone(), row.den.clone());
                    assert_eq!(
                        value,
                        b_coeff(level, jj, k as u32).unwrap(),
                        "level={level} jj={jj} k={k}"
                    );
                }
            }
            if level < i_hi {
                let width = j_top + i_hi - level - 1;
                prev = (1..=width)
                    .map(|jj| scaled_step_row(level + 1, jj, &prev, &weights))
                    .collect();
            }
        }
    }

    #[test]
    fn verify_small_block_is_positive() {
        let report = verify_positivity(1, 6, &[1, 2], true).unwrap();
        assert!(report.holds());
        // j = 1: k runs 1..=i+1; j = 2: k runs 1..=i+2.
        assert_eq!(report.checked, (2..=7).sum::<u64>() + (3..=8).sum::<u64>());
    }

    #[test]
    fn verify_catches_zero_only_in_strict_mode() {
        // b(1, 3, 1) = 0.
        let strict = verify_positivity(1, 2, &[3], true).unwrap();
        assert_eq!(strict.violations.len(), 1);
        assert_eq!(strict.violations[0].index, CoeffIndex::new(1, 3, 1).unwrap());
        assert!(strict.violations[0].value.is_zero());
        let lax = verify_positivity(1, 2, &[3], false).unwrap();
        assert!(lax.holds());
    }

    #[test]
    fn verify_catches_negative_values() {
        // b(i, 4, 1) < 0 for small i.
        let report = verify_positivity(1, 4, &[4], false).unwrap();
        let positions: Vec<(u32, u32, u32)> = report
            .violations
            .iter()
            .map(|v| (v.index.i(), v.index.j(), v.index.k()))
            .collect();
        assert_eq!(positions, vec![(1, 4, 1), (2, 4, 1), (3, 4, 1), (4, 4, 1)]);
        assert_eq!(report.violations[0].value, r(-1, 720));
        assert_eq!(report.violations[3].value, r(-1, 2520));
    }

    #[test]
    fn verify_rejects_bad_ranges() {
        assert!(verify_positivity(0, 5, &[1], true).is_err());
        assert!(verify_positivity(3, 2, &[1], true).is_err());
        assert!(verify_positivity(1, 5, &[], true).is_err());
        assert!(verify_positivity(1, 5, &[1, 0], true).is_err());
    }
}
