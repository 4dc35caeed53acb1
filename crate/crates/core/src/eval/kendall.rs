//! Kendall rank correlation.
//!
//! A pair of indices is concordant when both lists order it the same strict
//! way, discordant when they order it oppositely, and counts as neither when
//! either list ties it. Tau-a divides `concordant - discordant` by the number
//! of pairs, so ties pull it toward zero; tau-b rescales by the untied pairs.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TauVariant {
    #[default]
    TauA,
    TauB,
}

impl std::str::FromStr for TauVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tau_a" | "tau-a" | "a" => Ok(Self::TauA),
            "tau_b" | "tau-b" | "b" => Ok(Self::TauB),
            other => Err(invalid(format!("unknown tau variant `{other}`"))),
        }
    }
}

/// Pair classification over all `n (n - 1) / 2` index pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PairCounts {
    pub total: u64,
    pub concordant: u64,
    pub discordant: u64,
    /// Pairs tied in the first list (including those tied in both).
    pub tied_first: u64,
    /// Pairs tied in the second list (including those tied in both).
    pub tied_second: u64,
    pub tied_both: u64,
}

impl PairCounts {
    pub fn tau(&self, variant: TauVariant) -> f64 {
        let numerator = self.concordant as f64 - self.discordant as f64;
        match variant {
            TauVariant::TauA => numerator / self.total as f64,
            TauVariant::TauB => {
                let denom = ((self.total - self.tied_first) as f64 * (self.total - self.tied_second) as f64).sqrt();
                // a constant list carries no ordering information
                if denom == 0.0 {
                    0.0
                } else {
                    numerator / denom
                }
            }
        }
    }
}

fn compare<T: PartialOrd>(x: &T, y: &T) -> Result<Ordering> {
    x.partial_cmp(y)
        .ok_or_else(|| invalid("kendall tau inputs must be totally ordered (no NaN)"))
}

fn check_lengths(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::LengthMismatch { expected: a, actual: b });
    }
    if a < 2 {
        return Err(invalid("kendall tau needs at least 2 observations"));
    }
    Ok(())
}

fn pairs_in_runs(run_lengths: impl Iterator<Item = u64>) -> u64 {
    run_lengths.map(|t| t * (t - 1) / 2).sum()
}

/// Lengths of maximal runs of equal consecutive items.
fn run_lengths<T, F>(items: &[T], mut same: F) -> Vec<u64>
where
    F: FnMut(&T, &T) -> bool,
{
    let mut runs = Vec::new();
    let mut len = 0u64;
    for i in 0..items.len() {
        if i > 0 && same(&items[i - 1], &items[i]) {
            len += 1;
        } else {
            if len > 0 {
                runs.push(len);
            }
            len = 1;
        }
    }
    if len > 0 {
        runs.push(len);
    }
    runs
}

/// Pair counts in O(n log n): sort by the first list, then count the
/// inversions of the second list with a merge sort.
pub fn pair_counts<A: PartialOrd, B: PartialOrd>(a: &[A], b: &[B]) -> Result<PairCounts> {
    check_lengths(a.len(), b.len())?;
    let n = a.len() as u64;
    // values incomparable with themselves (NaN) break the ordering
    if a.iter().any(|x| x.partial_cmp(x).is_none()) || b.iter().any(|x| x.partial_cmp(x).is_none()) {
        return Err(invalid("kendall tau inputs must be totally ordered (no NaN)"));
    }
    let cmp_a = |x: usize, y: usize| a[x].partial_cmp(&a[y]).unwrap_or(Ordering::Equal);
    let cmp_b = |x: usize, y: usize| b[x].partial_cmp(&b[y]).unwrap_or(Ordering::Equal);

    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by(|&x, &y| cmp_a(x, y).then_with(|| cmp_b(x, y)));

    let tied_first = pairs_in_runs(run_lengths(&order, |&x, &y| cmp_a(x, y) == Ordering::Equal).into_iter());
    let tied_both = pairs_in_runs(
        run_lengths(&order, |&x, &y| cmp_a(x, y) == Ordering::Equal && cmp_b(x, y) == Ordering::Equal).into_iter(),
    );

    let discordant = merge_count_inversions(&mut order, &cmp_b);
    let tied_second = pairs_in_runs(run_lengths(&order, |&x, &y| cmp_b(x, y) == Ordering::Equal).into_iter());

    let total = n * (n - 1) / 2;
    let concordant = total + tied_both - tied_first - tied_second - discordant;
    Ok(PairCounts {
        total,
        concordant,
        discordant,
        tied_first,
        tied_second,
        tied_both,
    })
}

/// Sorts `items` ascending under `cmp` (stable) and returns the number of
/// pairs that were strictly out of order.
fn merge_count_inversions<F>(items: &mut [usize], cmp: &F) -> u64
where
    F: Fn(usize, usize) -> Ordering,
{
    let n = items.len();
    let mut buffer = vec![0usize; n];
    let mut inversions = 0u64;
    let mut width = 1;
    while width < n {
        let mut start = 0;
        while start < n {
            let mid = (start + width).min(n);
            let end = (start + 2 * width).min(n);
            let (mut i, mut j, mut k) = (start, mid, start);
            while i < mid && j < end {
                if cmp(items[j], items[i]) == Ordering::Less {
                    // items[j] jumps ahead of everything left in the left run
                    inversions += (mid - i) as u64;
                    buffer[k] = items[j];
                    j += 1;
                } else {
                    buffer[k] = items[i];
                    i += 1;
                }
                k += 1;
            }
            buffer[k..k + (mid - i)].copy_from_slice(&items[i..mid]);
            k += mid - i;
            buffer[k..k + (end - j)].copy_from_slice(&items[j..end]);
            start = end;
        }
        items.copy_from_slice(&buffer);
        width *= 2;
    }
    inversions
}

/// Pair counts by enumerating every pair. O(n^2); reference implementation.
pub fn pair_counts_naive<A: PartialOrd, B: PartialOrd>(a: &[A], b: &[B]) -> Result<PairCounts> {
    check_lengths(a.len(), b.len())?;
    let mut counts = PairCounts::default();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let oa = compare(&a[i], &a[j])?;
            let ob = compare(&b[i], &b[j])?;
            counts.total += 1;
            match (oa, ob) {
                (Ordering::Equal, Ordering::Equal) => {
                    counts.tied_first += 1;
                    counts.tied_second += 1;
                    counts.tied_both += 1;
                }
                (Ordering::Equal, _) => counts.tied_first += 1,
                (_, Ordering::Equal) => counts.tied_second += 1,
                (x, y) if x == y => counts.concordant += 1,
                _ => counts.discordant += 1,
            }
        }
    }
    Ok(counts)
}

/// Tau-a: `(concordant - discordant) / (n (n - 1) / 2)`.
pub fn kendall_tau<A: PartialOrd, B: PartialOrd>(a: &[A], b: &[B]) -> Result<f64> {
    Ok(pair_counts(a, b)?.tau(TauVariant::TauA))
}

pub fn kendall_tau_naive<A: PartialOrd, B: PartialOrd>(a: &[A], b: &[B]) -> Result<f64> {
    Ok(pair_counts_naive(a, b)?.tau(TauVariant::TauA))
}

pub fn kendall_tau_variant<A: PartialOrd, B: PartialOrd>(a: &[A], b: &[B], variant: TauVariant) -> Result<f64> {
    Ok(pair_counts(a, b)?.tau(variant))
}
