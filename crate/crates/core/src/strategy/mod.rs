//! Executable hand-rank charts: pattern predicates over held subsets,
//! first-match classification, exhaustive verification against the solver,
//! and derivation of the preliminary category order.

pub mod pattern;
pub mod table;

pub use pattern::{HandPattern, PatternError};
pub use table::{HoldKind, RankRow, RankTable, TableError, BUILTIN_CHART_NAMES};

use crate::deck::{Card, Hand, ACE, HAND_SIZE, JACK, KING, QUEEN, TEN};
use crate::expect::{HoldMask, HoldResult, ScaledCe};
use rayon::prelude::*;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StrategyError {
    #[error("flush penalty queried on a hold with mixed suits")]
    MixedSuitHold,
    #[error("penalty flags queried on an empty hold")]
    EmptyHold,
    #[error("held cards {held:?} of {hand} match no chart category")]
    CategoryGap { hand: String, held: Vec<String> },
}

/// Number of 5-long straight windows (ace low or high) containing every
/// given denomination.
pub fn straights_count(denoms: &[u8]) -> u32 {
    let mut count = 0;
    // Window 0 is A-2-3-4-5; window i (1..=9) is (i+1)..=(i+5).
    for w in 0..10u8 {
        let inside = |d: u8| {
            if w == 0 {
                d == ACE || d <= 5
            } else {
                (w + 1..=w + 5).contains(&d)
            }
        };
        if denoms.iter().all(|&d| inside(d)) {
            count += 1;
        }
    }
    count
}

/// Number of distinct high denominations (J-A) among the given cards.
pub fn high_count(denoms: &[u8]) -> u32 {
    let mut seen = [false; 15];
    let mut n = 0;
    for &d in denoms {
        if d >= JACK && !seen[d as usize] {
            seen[d as usize] = true;
            n += 1;
        }
    }
    n
}

/// Penalty flags for a hold: a flush penalty discards a card of the held
/// suit, a straight penalty discards a denomination lying inside a straight
/// window still reachable from the held cards, and a 9 straight penalty
/// discards a 9.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PenaltyFlags {
    pub flush: bool,
    pub straight: bool,
    pub nine: bool,
}

pub fn penalty_flags(hand: &Hand, held: HoldMask) -> Result<PenaltyFlags, StrategyError> {
    if held.held_count() == 0 {
        return Err(StrategyError::EmptyHold);
    }
    let cards = hand.cards();
    let mut held_cards: Vec<Card> = Vec::with_capacity(HAND_SIZE);
    let mut discarded: Vec<Card> = Vec::with_capacity(HAND_SIZE);
    for (i, &c) in cards.iter().enumerate() {
        if held.contains(i) {
            held_cards.push(c);
        } else {
            discarded.push(c);
        }
    }
    let suit = held_cards[0].suit();
    if held_cards.iter().any(|c| c.suit() != suit) {
        return Err(StrategyError::MixedSuitHold);
    }
    let held_denoms: Vec<u8> = held_cards.iter().map(|c| c.denom()).collect();
    let flush = discarded.iter().any(|c| c.suit() == suit);
    let nine = discarded.iter().any(|c| c.denom() == 9);
    let straight = discarded.iter().any(|c| {
        let d = c.denom();
        if held_denoms.contains(&d) {
            return false;
        }
        // Inside some window that contains every held denomination.
        for w in 0..10u8 {
            let inside = |x: u8| {
                if w == 0 {
                    x == ACE || x <= 5
                } else {
                    (w + 1..=w + 5).contains(&x)
                }
            };
            if inside(d) && held_denoms.iter().all(|&x| inside(x)) {
                return true;
            }
        }
        false
    });
    Ok(PenaltyFlags {
        flush,
        straight,
        nine,
    })
}

fn held_of(hand: &Hand, mask: HoldMask) -> Vec<Card> {
    hand.cards()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask.contains(*i))
        .map(|(_, &c)| c)
        .collect()
}

fn uniform_suit(cards: &[Card]) -> bool {
    cards.iter().all(|c| c.suit() == cards[0].suit())
}

fn distinct_denoms(cards: &[Card]) -> bool {
    // Cards arrive in hand order, so equal denominations are adjacent.
    cards.windows(2).all(|w| w[0].denom() != w[1].denom())
}

fn all_royal(cards: &[Card]) -> bool {
    cards.iter().all(|c| c.denom() >= TEN)
}

fn denoms_of(cards: &[Card]) -> Vec<u8> {
    cards.iter().map(|c| c.denom()).collect()
}

/// Does the held subset satisfy the row's base kind predicate?
fn kind_matches(kind: HoldKind, hand: &Hand, held: &[Card]) -> bool {
    use crate::deck::{categorize_cards, GameKind, RankCategory};
    use HoldKind::*;
    match kind {
        Rf5 | Sf5 | Quads5 | Fh5 | F5 | S5 => {
            let cat = categorize_cards(hand.cards(), GameKind::JacksOrBetter);
            matches!(
                (kind, cat),
                (Rf5, RankCategory::RoyalFlush)
                    | (Sf5, RankCategory::StraightFlush)
                    | (Quads5, RankCategory::FourOfAKind)
                    | (Fh5, RankCategory::FullHouse)
                    | (F5, RankCategory::Flush)
                    | (S5, RankCategory::Straight)
            )
        }
        Rf4 => uniform_suit(held) && distinct_denoms(held) && all_royal(held),
        Rf3 => uniform_suit(held) && distinct_denoms(held) && all_royal(held),
        Rf2 => uniform_suit(held) && distinct_denoms(held) && all_royal(held),
        Rf1 => held[0].denom() >= TEN,
        Sf4 | Sf3 => {
            uniform_suit(held)
                && distinct_denoms(held)
                && !all_royal(held)
                && straights_count(&denoms_of(held)) >= 1
        }
        F4 => uniform_suit(held) && straights_count(&denoms_of(held)) == 0,
        S4 | S3 => {
            distinct_denoms(held)
                && !uniform_suit(held)
                && straights_count(&denoms_of(held)) >= 1
        }
        S2 => {
            held[0].denom() != held[1].denom()
                && held[0].suit() != held[1].suit()
                && held.iter().all(|c| c.denom() >= JACK)
        }
        Trips3 => held[0].denom() == held[1].denom() && held[1].denom() == held[2].denom(),
        TwoPair4 => {
            held[0].denom() == held[1].denom()
                && held[2].denom() == held[3].denom()
                && held[1].denom() != held[2].denom()
        }
        HighPair2 => held[0].denom() == held[1].denom() && held[0].denom() >= JACK,
        LowPair2 => held[0].denom() == held[1].denom() && held[0].denom() <= TEN,
        None0 => true,
    }
}

fn row_matches(row: &RankRow, hand: &Hand, mask: HoldMask) -> bool {
    let held = held_of(hand, mask);
    if !kind_matches(row.kind, hand, &held) {
        return false;
    }
    let denoms = denoms_of(&held);
    if let Some(s) = row.s {
        if straights_count(&denoms) != s {
            return false;
        }
    }
    if let Some(h) = &row.h {
        if !h.contains(&high_count(&denoms)) {
            return false;
        }
    }
    if let Some((n, at_least)) = row.sh {
        let sh = straights_count(&denoms) + high_count(&denoms);
        if (at_least && sh < n) || (!at_least && sh != n) {
            return false;
        }
    }
    if let Some(sets) = &row.denoms {
        // `denoms` is sorted because held cards come in hand order.
        if !sets.contains(&denoms) {
            return false;
        }
    }
    if let Some(gates) = &row.hand_gate {
        if !gates.iter().any(|g| g.matches(hand)) {
            return false;
        }
    }
    if let Some((a, b)) = row.fp_pair {
        // The hand must contain the suited pair (a, b) plus a third card of
        // that suit, so that holding the pair would incur a flush penalty.
        let cards = hand.cards();
        let has_penalized_pair = (0..4).any(|suit| {
            let of_suit = cards.iter().filter(|c| c.suit() == suit).count();
            of_suit >= 3
                && cards.iter().any(|c| c.suit() == suit && c.denom() == a)
                && cards.iter().any(|c| c.suit() == suit && c.denom() == b)
        });
        if !has_penalized_pair {
            return false;
        }
    }
    if row.nine_penalty && !hand.cards().iter().any(|c| c.denom() == 9) {
        return false;
    }
    if row.no_sp {
        match penalty_flags(hand, mask) {
            Ok(flags) if !flags.straight => {}
            _ => return false,
        }
    }
    true
}

/// Masks of each held count, ascending, so ties inside a row resolve to the
/// lowest mask.
fn masks_of_size(n: usize) -> &'static [u8] {
    static TABLES: std::sync::LazyLock<[Vec<u8>; 6]> = std::sync::LazyLock::new(|| {
        let mut tables: [Vec<u8>; 6] = Default::default();
        for m in 0u8..32 {
            tables[m.count_ones() as usize].push(m);
        }
        tables
    });
    &TABLES[n]
}

/// Applies the chart: scans rows in rank order and returns the hold of the
/// first row matched by some held subset, with the row that fired.
pub fn classify_with_row<'t>(hand: &Hand, chart: &'t RankTable) -> (HoldMask, &'t RankRow) {
    for row in &chart.rows {
        for &bits in masks_of_size(row.kind.held_count()) {
            let mask = HoldMask::new(bits);
            if row_matches(row, hand, mask) {
                return (mask, row);
            }
        }
    }
    unreachable!("charts end with a `none` row, which always matches");
}

pub fn classify(hand: &Hand, chart: &RankTable) -> HoldMask {
    classify_with_row(hand, chart).0
}

/// One class on which a chart's play fails to attain the optimal CE.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub class_index: u32,
    pub chart_rank: u32,
    pub chart_mask: HoldMask,
    pub chart_ce: ScaledCe,
    pub best_mask: HoldMask,
    pub best_ce: ScaledCe,
}

/// Checks the chart against solver output for every class: the chart's hold
/// must attain the optimal conditional expectation (co-optimal holds pass).
pub fn verify_table(chart: &RankTable, results: &[HoldResult]) -> Vec<Violation> {
    let mut violations: Vec<Violation> = results
        .par_iter()
        .filter_map(|r| {
            let hand = r.class.canonical.hand();
            let (mask, row) = classify_with_row(hand, chart);
            let chart_ce = r.ce[mask.bits() as usize];
            if chart_ce == r.best_ce() {
                None
            } else {
                Some(Violation {
                    class_index: r.class.class_index,
                    chart_rank: row.rank,
                    chart_mask: mask,
                    chart_ce,
                    best_mask: r.best_mask,
                    best_ce: r.best_ce(),
                })
            }
        })
        .collect();
    violations.sort_by_key(|v| v.class_index);
    violations
}

/// The 36 hold categories of the preliminary chart, in its row order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category36 {
    Rf5,
    Sf5,
    Quads5,
    Rf4,
    Fh5,
    F5,
    Trips3,
    S5,
    Sf4S2,
    TwoPair4,
    Sf4S1,
    HighPair2,
    Rf3,
    F4,
    S4s2h3,
    LowPair2,
    S4s2h12,
    Sf3Sh4,
    S4s2h0,
    Sf3Sh3,
    Rf2Jq,
    Rf2JkQk,
    S4s1h4,
    Rf2JaQaKa,
    Sf3Sh2,
    S4s1h3,
    Rf2Tj,
    S3Jqk,
    S2Jq,
    Rf2Tq,
    S2JkQk,
    Rf1,
    Rf2Tk,
    S2JaQaKa,
    Sf3Sh1,
    None36,
}

impl Category36 {
    pub fn label(self) -> &'static str {
        use Category36::*;
        match self {
            Rf5 => "5-RF",
            Sf5 => "5-SF",
            Quads5 => "5-4K",
            Rf4 => "4-RF",
            Fh5 => "5-FH",
            F5 => "5-F",
            Trips3 => "3-3K",
            S5 => "5-S",
            Sf4S2 => "4-SF: s=2",
            TwoPair4 => "4-2P",
            Sf4S1 => "4-SF: s=1",
            HighPair2 => "2-HP",
            Rf3 => "3-RF",
            F4 => "4-F",
            S4s2h3 => "4-S: s=2, h=3",
            LowPair2 => "2-LP",
            S4s2h12 => "4-S: s=2, h=1 or 2",
            Sf3Sh4 => "3-SF: s+h=4",
            S4s2h0 => "4-S: s=2, h=0",
            Sf3Sh3 => "3-SF: s+h=3",
            Rf2Jq => "2-RF: JQ",
            Rf2JkQk => "2-RF: JK or QK",
            S4s1h4 => "4-S: s=1, h=4",
            Rf2JaQaKa => "2-RF: JA, QA, or KA",
            Sf3Sh2 => "3-SF: s+h=2",
            S4s1h3 => "4-S: s=1, h=3",
            Rf2Tj => "2-RF: TJ",
            S3Jqk => "3-S: JQK",
            S2Jq => "2-S: JQ",
            Rf2Tq => "2-RF: TQ",
            S2JkQk => "2-S: JK or QK",
            Rf1 => "1-RF: J, Q, K, or A",
            Rf2Tk => "2-RF: TK",
            S2JaQaKa => "2-S: JA, QA, or KA",
            Sf3Sh1 => "3-SF: s+h=1",
            None36 => "none",
        }
    }

    /// The categories in preliminary-chart row order.
    pub const ALL: [Category36; 36] = {
        use Category36::*;
        [
            Rf5, Sf5, Quads5, Rf4, Fh5, F5, Trips3, S5, Sf4S2, TwoPair4, Sf4S1, HighPair2, Rf3,
            F4, S4s2h3, LowPair2, S4s2h12, Sf3Sh4, S4s2h0, Sf3Sh3, Rf2Jq, Rf2JkQk, S4s1h4,
            Rf2JaQaKa, Sf3Sh2, S4s1h3, Rf2Tj, S3Jqk, S2Jq, Rf2Tq, S2JkQk, Rf1, Rf2Tk, S2JaQaKa,
            Sf3Sh1, None36,
        ]
    };
}

/// Assigns the unique hold category of an optimal hold.
pub fn categorize_hold(hand: &Hand, mask: HoldMask) -> Result<Category36, StrategyError> {
    use crate::deck::{categorize_cards, GameKind, RankCategory};
    use Category36::*;
    let held = held_of(hand, mask);
    let gap = || StrategyError::CategoryGap {
        hand: hand.to_string(),
        held: held.iter().map(Card::to_string).collect(),
    };
    let denoms = denoms_of(&held);
    match held.len() {
        0 => Ok(None36),
        5 => match categorize_cards(hand.cards(), GameKind::JacksOrBetter) {
            RankCategory::RoyalFlush => Ok(Rf5),
            RankCategory::StraightFlush => Ok(Sf5),
            RankCategory::FourOfAKind => Ok(Quads5),
            RankCategory::FullHouse => Ok(Fh5),
            RankCategory::Flush => Ok(F5),
            RankCategory::Straight => Ok(S5),
            _ => Err(gap()),
        },
        4 => {
            if held[0].denom() == held[1].denom()
                && held[2].denom() == held[3].denom()
                && held[1].denom() != held[2].denom()
            {
                return Ok(TwoPair4);
            }
            if !distinct_denoms(&held) {
                return Err(gap());
            }
            let s = straights_count(&denoms);
            let h = high_count(&denoms);
            if uniform_suit(&held) {
                if all_royal(&held) {
                    Ok(Rf4)
                } else {
                    match s {
                        2 => Ok(Sf4S2),
                        1 => Ok(Sf4S1),
                        0 => Ok(F4),
                        _ => Err(gap()),
                    }
                }
            } else {
                match (s, h) {
                    (2, 3) => Ok(S4s2h3),
                    (2, 1) | (2, 2) => Ok(S4s2h12),
                    (2, 0) => Ok(S4s2h0),
                    (1, 4) => Ok(S4s1h4),
                    (1, 3) => Ok(S4s1h3),
                    _ => Err(gap()),
                }
            }
        }
        3 => {
            if held[0].denom() == held[2].denom() {
                return Ok(Trips3);
            }
            if !distinct_denoms(&held) {
                return Err(gap());
            }
            if uniform_suit(&held) {
                if all_royal(&held) {
                    return Ok(Rf3);
                }
                let s = straights_count(&denoms);
                if s == 0 {
                    return Err(gap());
                }
                match s + high_count(&denoms) {
                    4 => Ok(Sf3Sh4),
                    3 => Ok(Sf3Sh3),
                    2 => Ok(Sf3Sh2),
                    1 => Ok(Sf3Sh1),
                    _ => Err(gap()),
                }
            } else if denoms == [JACK, QUEEN, KING] {
                Ok(S3Jqk)
            } else {
                Err(gap())
            }
        }
        2 => {
            if held[0].denom() == held[1].denom() {
                return Ok(if held[0].denom() >= JACK {
                    HighPair2
                } else {
                    LowPair2
                });
            }
            let pair = (denoms[0], denoms[1]);
            if uniform_suit(&held) && all_royal(&held) {
                match pair {
                    (JACK, QUEEN) => Ok(Rf2Jq),
                    (JACK, KING) | (QUEEN, KING) => Ok(Rf2JkQk),
                    (JACK, ACE) | (QUEEN, ACE) | (KING, ACE) => Ok(Rf2JaQaKa),
                    (TEN, JACK) => Ok(Rf2Tj),
                    (TEN, QUEEN) => Ok(Rf2Tq),
                    (TEN, KING) => Ok(Rf2Tk),
                    _ => Err(gap()),
                }
            } else if held[0].suit() != held[1].suit() {
                match pair {
                    (JACK, QUEEN) => Ok(S2Jq),
                    (JACK, KING) | (QUEEN, KING) => Ok(S2JkQk),
                    (JACK, ACE) | (QUEEN, ACE) | (KING, ACE) => Ok(S2JaQaKa),
                    _ => Err(gap()),
                }
            } else {
                Err(gap())
            }
        }
        1 => {
            if held[0].denom() >= JACK {
                Ok(Rf1)
            } else {
                Err(gap())
            }
        }
        _ => Err(gap()),
    }
}

/// Derives the preliminary category order: each optimal-hold category sorted
/// by the smallest CE rank (1-based, descending CE value) attaining it.
pub fn derive_preliminary(results: &[HoldResult]) -> Result<Vec<Category36>, StrategyError> {
    // Rank of each distinct optimal scaled CE, descending.
    let mut values: Vec<ScaledCe> = results.iter().map(HoldResult::best_ce).collect();
    values.sort_unstable_by(|a, b| b.cmp(a));
    values.dedup();
    let rank_of: BTreeMap<ScaledCe, usize> = values
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i + 1))
        .collect();

    let mut min_rank: BTreeMap<Category36, usize> = BTreeMap::new();
    for r in results {
        let cat = categorize_hold(r.class.canonical.hand(), r.best_mask)?;
        let rank = rank_of[&r.best_ce()];
        min_rank
            .entry(cat)
            .and_modify(|m| *m = (*m).min(rank))
            .or_insert(rank);
    }
    let mut order: Vec<(usize, Category36)> = min_rank.into_iter().map(|(c, r)| (r, c)).collect();
    order.sort();
    Ok(order.into_iter().map(|(_, c)| c).collect())
}

/// Smallest CE rank per category, for reporting.
pub fn category_min_ranks(
    results: &[HoldResult],
) -> Result<Vec<(Category36, usize)>, StrategyError> {
    let mut values: Vec<ScaledCe> = results.iter().map(HoldResult::best_ce).collect();
    values.sort_unstable_by(|a, b| b.cmp(a));
    values.dedup();
    let rank_of: BTreeMap<ScaledCe, usize> = values
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i + 1))
        .collect();
    let mut min_rank: BTreeMap<Category36, usize> = BTreeMap::new();
    for r in results {
        let cat = categorize_hold(r.class.canonical.hand(), r.best_mask)?;
        let rank = rank_of[&r.best_ce()];
        min_rank
            .entry(cat)
            .and_modify(|m| *m = (*m).min(rank))
            .or_insert(rank);
    }
    let mut order: Vec<(usize, Category36)> = min_rank.into_iter().map(|(c, r)| (r, c)).collect();
    order.sort();
    Ok(order.into_iter().map(|(r, c)| (c, r)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hand(s: &str) -> Hand {
        Hand::parse(s).unwrap()
    }

    fn mask_of(bits: u8) -> HoldMask {
        HoldMask::new(bits)
    }

    #[test]
    fn straight_window_counts() {
        assert_eq!(straights_count(&[14, 2, 3, 4]), 1);
        assert_eq!(straights_count(&[5]), 5);
        assert_eq!(straights_count(&[9, 11, 12, 13]), 1);
        assert_eq!(straights_count(&[11, 12]), 3);
        assert_eq!(straights_count(&[10, 13]), 2);
        assert_eq!(straights_count(&[11, 14]), 1);
        assert_eq!(straights_count(&[2, 9]), 0);
        assert_eq!(straights_count(&[]), 10);
    }

    #[test]
    fn high_card_counts() {
        assert_eq!(high_count(&[10, 11, 12, 13]), 3);
        assert_eq!(high_count(&[2, 3, 4, 5]), 0);
        assert_eq!(high_count(&[11, 12, 13, 14]), 4);
    }

    #[test]
    fn penalty_flag_examples() {
        // Hold suited 8-9-Q; the discarded J is needed for straights.
        let h = hand("8c 9c Qc Jd Kh");
        let held = HoldMask::from_flags([true, true, false, true, false]);
        let f = penalty_flags(&h, held).unwrap();
        assert!(f.straight);
        assert!(!f.flush);

        // Hold suited 7-9-J: Q and K lie outside every reachable window.
        let h = hand("7c 9c Jc Qd Kh");
        let held = HoldMask::from_flags([true, true, true, false, false]);
        let f = penalty_flags(&h, held).unwrap();
        assert!(!f.straight);

        // Holding TJ with a third card of the same suit is a flush penalty.
        let h = hand("4c Tc Jc Qd 2h");
        let held = HoldMask::from_flags([false, false, true, true, false]);
        let f = penalty_flags(&h, held).unwrap();
        assert!(f.flush);

        // A discarded 9 is the 9 straight penalty.
        let h = hand("9d Tc Kc 2h 5s");
        let held = HoldMask::from_flags([false, false, false, true, true]);
        let f = penalty_flags(&h, held).unwrap();
        assert!(f.nine);
        assert!(f.straight);

        let mixed = penalty_flags(&h, HoldMask::from_flags([true, true, false, false, false]));
        assert_eq!(mixed, Err(StrategyError::MixedSuitHold));
        assert_eq!(
            penalty_flags(&h, HoldMask::NONE),
            Err(StrategyError::EmptyHold)
        );
    }

    #[test]
    fn classify_discards_the_eight_from_a_flush() {
        let chart = RankTable::builtin("chart-optimal").unwrap();
        let h = hand("8c Tc Jc Qc Kc");
        let (mask, row) = classify_with_row(&h, &chart);
        assert_eq!(row.kind, HoldKind::Rf4);
        assert_eq!(mask.flags(), [false, true, true, true, true]);
    }

    #[test]
    fn classify_pat_royal() {
        let chart = RankTable::builtin("chart-optimal").unwrap();
        let (mask, row) = classify_with_row(&hand("Tc Jc Qc Kc Ac"), &chart);
        assert_eq!(row.rank, 1);
        assert_eq!(mask, HoldMask::ALL);
    }

    #[test]
    fn classify_flush_penalty_prefers_jk() {
        let chart = RankTable::builtin("chart-optimal").unwrap();
        // T-J suited with a third club: holding TJ has a flush penalty, so
        // the chart holds J-K instead.
        let h = hand("4c Tc Jc Kd 2h");
        let (mask, row) = classify_with_row(&h, &chart);
        assert_eq!(row.rank, 28);
        let held = held_of(&h, mask);
        assert_eq!(denoms_of(&held), vec![JACK, KING]);
        // Without the third club the same shape holds TJ.
        let h = hand("4d Tc Jc Kd 2h");
        let (mask, row) = classify_with_row(&h, &chart);
        assert_eq!(row.rank, 29);
        let held = held_of(&h, mask);
        assert_eq!(denoms_of(&held), vec![TEN, JACK]);
    }

    #[test]
    fn categorize_hold_examples() {
        let h = hand("Tc Jc Qc Kc Ac");
        assert_eq!(categorize_hold(&h, mask_of(31)), Ok(Category36::Rf5));
        // Suited 9-J-Q has s=2 and h=2; suited 8-J-Q has s=1 and h=2.
        let h = hand("9c Jc Qc 2d 5h");
        let mask = HoldMask::from_flags([false, false, true, true, true]);
        assert_eq!(categorize_hold(&h, mask), Ok(Category36::Sf3Sh4));
        let h = hand("8c Jc Qc 2d 5h");
        let mask = HoldMask::from_flags([false, false, true, true, true]);
        assert_eq!(categorize_hold(&h, mask), Ok(Category36::Sf3Sh3));
        // Suited J-Q.
        let h = hand("Jc Qc 2d 5h 8s");
        let mask = HoldMask::from_flags([false, false, false, true, true]);
        assert_eq!(categorize_hold(&h, mask), Ok(Category36::Rf2Jq));
        // Hold nothing.
        assert_eq!(categorize_hold(&h, HoldMask::NONE), Ok(Category36::None36));
        // A bare ten matches no category.
        let h = hand("Tc 2d 5h 8s 9c");
        let mask = HoldMask::from_flags([false, false, false, false, true]);
        assert!(matches!(
            categorize_hold(&h, mask),
            Err(StrategyError::CategoryGap { .. })
        ));
    }
}
