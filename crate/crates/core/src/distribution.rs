//! Aggregates per-class optima into the sorted distribution of distinct
//! conditional expectations and computes exact summary statistics.

use crate::canonical::NUM_CLASSES;
use crate::deck::TOTAL_HANDS;
use crate::expect::{HoldResult, ScaledCe, SCALE};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

/// Exact rational in lowest terms.
pub type Exact = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DistributionError {
    #[error("distribution rank {rank}: expected {expected} classes, found {found}")]
    ClassCountMismatch {
        rank: usize,
        expected: u32,
        found: u32,
    },
    #[error("distribution rank {rank}: expected hand weight {expected}, found {found}")]
    WeightMismatch {
        rank: usize,
        expected: u64,
        found: u64,
    },
    #[error("distribution has {found} entries, expected at least {required}")]
    TooFewEntries { found: usize, required: usize },
}

/// One distinct scaled-CE value with its class counts by orbit size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistEntry {
    pub scaled: ScaledCe,
    pub classes_total: u32,
    /// Classes of orbit size 4, 12, and 24.
    pub classes_by_size: (u32, u32, u32),
    /// 4*count4 + 12*count12 + 24*count24: the probability times C(52,5).
    pub hand_weight: u64,
}

/// Distinct scaled CE values sorted descending, with conservation of both
/// class count and hand weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CeDistribution {
    entries: Vec<DistEntry>,
}

impl CeDistribution {
    pub fn entries(&self) -> &[DistEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 1-based rank of a scaled value in the descending order, if present.
    pub fn rank_of(&self, scaled: ScaledCe) -> Option<usize> {
        self.entries
            .binary_search_by(|e| scaled.cmp(&e.scaled))
            .ok()
            .map(|i| i + 1)
    }
}

/// Groups solved classes by optimal scaled CE, descending.
pub fn build_distribution(results: &[HoldResult]) -> CeDistribution {
    let mut groups: BTreeMap<ScaledCe, DistEntry> = BTreeMap::new();
    for r in results {
        let entry = groups.entry(r.best_ce()).or_insert(DistEntry {
            scaled: r.best_ce(),
            classes_total: 0,
            classes_by_size: (0, 0, 0),
            hand_weight: 0,
        });
        entry.classes_total += 1;
        match r.class.orbit_size {
            4 => entry.classes_by_size.0 += 1,
            12 => entry.classes_by_size.1 += 1,
            24 => entry.classes_by_size.2 += 1,
            n => unreachable!("orbit size {n}"),
        }
        entry.hand_weight += r.class.orbit_size as u64;
    }
    let entries: Vec<DistEntry> = groups.into_values().rev().collect();
    debug_assert!(entries.windows(2).all(|w| w[0].scaled > w[1].scaled));
    CeDistribution { entries }
}

fn ratio(num: u128, den: u128) -> Exact {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Sum over entries of hand_weight * scaled value: the expected-return
/// numerator before reduction, at scale C(52,5) * SCALE.
pub fn weighted_sum(d: &CeDistribution) -> u128 {
    d.entries()
        .iter()
        .map(|e| e.hand_weight as u128 * e.scaled as u128)
        .sum()
}

/// Overall expected return under optimal play, as an exact reduced fraction.
pub fn expected_return(d: &CeDistribution) -> Exact {
    ratio(weighted_sum(d), TOTAL_HANDS as u128 * SCALE as u128)
}

/// Median conditional expected return: the scaled value at which the
/// descending cumulative hand weight first reaches half of C(52,5),
/// returned as a reduced fraction of SCALE.
pub fn median_ce(d: &CeDistribution) -> Exact {
    let half = TOTAL_HANDS.div_ceil(2);
    let mut cumulative = 0u64;
    for e in d.entries() {
        cumulative += e.hand_weight;
        if cumulative >= half {
            return ratio(e.scaled as u128, SCALE as u128);
        }
    }
    Exact::zero()
}

/// Probability that the optimal play is to draw five new cards.
pub fn garbage_probability(results: &[HoldResult]) -> Exact {
    let garbage: u64 = results
        .iter()
        .filter(|r| r.best_mask.bits() == 0)
        .map(|r| r.class.orbit_size as u64)
        .sum();
    ratio(garbage as u128, TOTAL_HANDS as u128)
}

/// Number of hands (not classes) whose optimal play is to draw five.
pub fn garbage_hand_count(results: &[HoldResult]) -> u64 {
    results
        .iter()
        .filter(|r| r.best_mask.bits() == 0)
        .map(|r| r.class.orbit_size as u64)
        .sum()
}

/// Distinct optimal scaled-CE counts: (total, attained with a nonempty
/// hold, attained only by drawing five).
pub fn distinct_value_counts(results: &[HoldResult]) -> (usize, usize, usize) {
    let mut with_hold = std::collections::BTreeSet::new();
    let mut garbage = std::collections::BTreeSet::new();
    for r in results {
        if r.best_mask.bits() == 0 {
            garbage.insert(r.best_ce());
        } else {
            with_hold.insert(r.best_ce());
        }
    }
    let total: std::collections::BTreeSet<_> = with_hold.union(&garbage).collect();
    (total.len(), with_hold.len(), garbage.len())
}

/// Combinatorial cross-checks of the full-pay Jacks or Better distribution:
/// the CE values ranked 32, 80, and 83 have known class counts derivable by
/// hand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountCheckReport {
    pub rank32_classes: u32,
    pub rank32_weight: u64,
    pub rank80_classes: u32,
    pub rank83_classes: u32,
}

pub fn class_count_checks(d: &CeDistribution) -> Result<CountCheckReport, DistributionError> {
    if d.len() < 83 {
        return Err(DistributionError::TooFewEntries {
            found: d.len(),
            required: 83,
        });
    }
    let expect_classes = |rank: usize, expected: u32| -> Result<u32, DistributionError> {
        let found = d.entries()[rank - 1].classes_total;
        if found == expected {
            Ok(found)
        } else {
            Err(DistributionError::ClassCountMismatch {
                rank,
                expected,
                found,
            })
        }
    };
    let rank32_classes = expect_classes(32, 17_562)?;
    let rank32_weight = d.entries()[31].hand_weight;
    if rank32_weight != 337_464 {
        return Err(DistributionError::WeightMismatch {
            rank: 32,
            expected: 337_464,
            found: rank32_weight,
        });
    }
    let rank80_classes = expect_classes(80, 1_909)?;
    let rank83_classes = expect_classes(83, 271)?;
    Ok(CountCheckReport {
        rank32_classes,
        rank32_weight,
        rank80_classes,
        rank83_classes,
    })
}

/// Renders a scaled CE the way the distribution tables print it: bare
/// integer when exact, otherwise six decimals rounded half-up.
pub fn format_ce_decimal(scaled: ScaledCe) -> String {
    if scaled.is_multiple_of(SCALE) {
        return (scaled / SCALE).to_string();
    }
    let whole = scaled / SCALE;
    let frac = scaled % SCALE;
    // round(frac * 10^6 / SCALE) half-up, in integers.
    let mut millionths = (frac as u128 * 2_000_000 + SCALE as u128) / (2 * SCALE as u128);
    let mut whole = whole;
    if millionths == 1_000_000 {
        whole += 1;
        millionths = 0;
    }
    format!("{whole}.{millionths:06}")
}

/// Renders an exact nonnegative rational with the given number of decimal
/// places, rounded half-up.
pub fn format_exact(value: &Exact, places: u32) -> String {
    assert!(!value.is_negative());
    let pow = BigInt::from(10u8).pow(places);
    let scaled: BigInt = (value.numer() * &pow * 2 + value.denom()) / (value.denom() * 2);
    let whole: BigInt = &scaled / &pow;
    let frac: BigInt = &scaled % &pow;
    if places == 0 {
        return whole.to_string();
    }
    format!("{}.{:0width$}", whole, frac, width = places as usize)
}

/// Conservation checks plus per-entry lines, as aligned text.
pub fn render_report(d: &CeDistribution) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:>5} {:>8} {:>22} {:>8} {:>12} {:>10}",
        "no.", "classes", "by size (4,12,24)", "weight", "scaled", "decimal"
    )
    .unwrap();
    for (i, e) in d.entries().iter().enumerate() {
        let (c4, c12, c24) = e.classes_by_size;
        writeln!(
            out,
            "{:>5} {:>8} {:>22} {:>8} {:>12} {:>10}",
            i + 1,
            e.classes_total,
            format!("({c4},{c12},{c24})"),
            e.hand_weight,
            e.scaled,
            format_ce_decimal(e.scaled)
        )
        .unwrap();
    }
    out
}

/// Same report as comma-separated values.
pub fn render_report_csv(d: &CeDistribution) -> String {
    let mut out = String::from("rank,classes,classes4,classes12,classes24,hand_weight,scaled_ce,decimal\n");
    for (i, e) in d.entries().iter().enumerate() {
        let (c4, c12, c24) = e.classes_by_size;
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            i + 1,
            e.classes_total,
            c4,
            c12,
            c24,
            e.hand_weight,
            e.scaled,
            format_ce_decimal(e.scaled)
        )
        .unwrap();
    }
    out
}

/// Asserts the two conservation invariants that hold for every pay table.
pub fn check_conservation(d: &CeDistribution) -> bool {
    let classes: u32 = d.entries().iter().map(|e| e.classes_total).sum();
    let weight: u64 = d.entries().iter().map(|e| e.hand_weight).sum();
    classes as usize == NUM_CLASSES && weight == TOTAL_HANDS
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::ToPrimitive;

    #[test]
    fn decimal_formatting() {
        assert_eq!(format_ce_decimal(6_135_756_000), "800");
        assert_eq!(format_ce_decimal(30_678_780), "4");
        assert_eq!(format_ce_decimal(11_784_795), "1.536540");
        assert_eq!(format_ce_decimal(6_317_388), "0.823682");
        assert_eq!(format_ce_decimal(2_741_080), "0.357391");
        assert_eq!(format_ce_decimal(9_791_100), "1.276596");
    }

    #[test]
    fn exact_formatting() {
        let er = ratio(1_653_526_326_983, 1_661_102_543_100);
        assert_eq!(format_exact(&er, 12), "0.995439043695");
        assert_eq!(format_exact(&er, 6), "0.995439");
        let median = ratio(4_452, 5_405);
        assert_eq!(format_exact(&median, 6), "0.823682");
        assert!(er.to_f64().unwrap() > 0.9954);
    }

    #[test]
    fn median_degenerate_single_entry() {
        let d = CeDistribution {
            entries: vec![DistEntry {
                scaled: 3 * SCALE,
                classes_total: NUM_CLASSES as u32,
                classes_by_size: (0, 0, NUM_CLASSES as u32),
                hand_weight: TOTAL_HANDS,
            }],
        };
        assert_eq!(median_ce(&d), ratio(3, 1));
    }
}
