//! Exact integer-scaled conditional expected returns for all 32 holds of a
//! class, with a naive enumeration backend and a memoized
//! inclusion-exclusion backend that must agree bit for bit.
//!
//! All values are integers at scale 7,669,695 = 5 * C(47,5), a common
//! denominator of every draw count, so no rationals or floats appear
//! anywhere on the solve path.

use crate::canonical::{canonical_key, enumerate_classes, EquivClass};
use crate::deck::{Card, GameKind, Hand, PayTable, DECK_SIZE, HAND_SIZE};
use rayon::prelude::*;
use std::collections::HashMap;
use thiserror::Error;

/// Conditional expected return scale factor: 5 * C(47,5).
pub const SCALE: u64 = 7_669_695;

/// An integer-scaled conditional expected return (value = CE * SCALE).
pub type ScaledCe = u64;

/// SCALE / C(47, 5-k) for k held cards; each is an exact integer.
pub const DRAW_FACTOR: [u64; 6] = [5, 43, 473, 7_095, 163_185, SCALE];

pub const NUM_MASKS: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExpectError {
    #[error("completion memo was built for pay table {memo:?}, not {requested:?}")]
    MemoMismatch { memo: String, requested: String },
}

/// A subset of the five dealt cards to hold: bit i set means card i (in the
/// hand's sorted order) is held.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HoldMask(u8);

impl HoldMask {
    pub const ALL: HoldMask = HoldMask(31);
    pub const NONE: HoldMask = HoldMask(0);

    pub fn new(bits: u8) -> HoldMask {
        assert!(bits < 32);
        HoldMask(bits)
    }

    /// Builds a mask from per-card hold flags.
    pub fn from_flags(flags: [bool; HAND_SIZE]) -> HoldMask {
        let mut bits = 0u8;
        for (i, &f) in flags.iter().enumerate() {
            if f {
                bits |= 1 << i;
            }
        }
        HoldMask(bits)
    }

    #[inline]
    pub fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn contains(self, card_index: usize) -> bool {
        self.0 & (1 << card_index) != 0
    }

    #[inline]
    pub fn held_count(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn flags(self) -> [bool; HAND_SIZE] {
        std::array::from_fn(|i| self.contains(i))
    }

    pub fn iter_all() -> impl Iterator<Item = HoldMask> {
        (0u8..32).map(HoldMask)
    }

    /// Tie-break ordering: prefer holding more cards, then earlier cards.
    /// Numerically this is the mask value with card 0 as the most
    /// significant bit.
    #[inline]
    pub fn tiebreak_rank(self) -> u8 {
        let m = self.0;
        ((m & 1) << 4) | ((m & 2) << 2) | (m & 4) | ((m & 8) >> 2) | ((m & 16) >> 4)
    }
}

/// Per-class solve output: the full 32-entry CE vector, the optimal hold,
/// and whether the optimum is unique.
#[derive(Debug, Clone)]
pub struct HoldResult {
    pub class: EquivClass,
    pub ce: [ScaledCe; NUM_MASKS],
    pub best_mask: HoldMask,
    pub unique: bool,
}

impl HoldResult {
    pub fn best_ce(&self) -> ScaledCe {
        self.ce[self.best_mask.bits() as usize]
    }
}

fn split_hand(hand: &Hand, mask: HoldMask) -> (Vec<Card>, Vec<Card>) {
    let mut held = Vec::with_capacity(HAND_SIZE);
    let mut discarded = Vec::with_capacity(HAND_SIZE);
    for (i, &c) in hand.cards().iter().enumerate() {
        if mask.contains(i) {
            held.push(c);
        } else {
            discarded.push(c);
        }
    }
    (held, discarded)
}

/// Sums payouts over all completions of `base` to five cards drawn from
/// `pool` (choose `draw` of them).
fn sum_completions(base: &[Card], pool: &[Card], draw: usize, table: &PayTable) -> u64 {
    let mut buf = [Card::raw(2, 0); HAND_SIZE];
    buf[..base.len()].copy_from_slice(base);
    if draw == 0 {
        return table.payout_cards(&buf);
    }
    let n = pool.len();
    debug_assert!(draw <= n);
    let mut idx = [0usize; HAND_SIZE];
    for (j, slot) in idx.iter_mut().enumerate().take(draw) {
        *slot = j;
    }
    let k = base.len();
    let mut total = 0u64;
    loop {
        for j in 0..draw {
            buf[k + j] = pool[idx[j]];
        }
        total += table.payout_cards(&buf);
        // Advance the combination indices.
        let mut j = draw;
        loop {
            if j == 0 {
                return total;
            }
            j -= 1;
            if idx[j] != j + n - draw {
                idx[j] += 1;
                for t in j + 1..draw {
                    idx[t] = idx[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Naive oracle: enumerates all C(47, 5-k) completions from the 47 unseen
/// cards and returns the exact scaled conditional expectation.
pub fn ce_naive(hand: &Hand, mask: HoldMask, table: &PayTable) -> ScaledCe {
    let (held, _) = split_hand(hand, mask);
    let unseen = hand.unseen();
    let k = held.len();
    let total = sum_completions(&held, &unseen, HAND_SIZE - k, table);
    total * DRAW_FACTOR[k]
}

/// Payout totals over completions of canonicalized partial hands, shared by
/// every class solved under one pay table. `T(X)` is the payout sum over
/// all completions of `X` to five cards from the `52 - |X|` cards outside
/// `X`; it depends only on the suit-equivalence class of `X`.
#[derive(Debug)]
pub struct CompletionMemo {
    table: PayTable,
    map: HashMap<u64, u64>,
}

impl CompletionMemo {
    /// Builds the memo for a pay table: one entry per canonical partial hand
    /// of 0..=5 cards.
    pub fn build(table: &PayTable) -> CompletionMemo {
        let deck: Vec<Card> = (0..DECK_SIZE).map(Card::from_index).collect();
        let mut keys: Vec<u64> = Vec::new();

        // Sizes 0..=4 by canonicalizing every subset.
        keys.push(canonical_key(&[]));
        let mut subset = Vec::with_capacity(4);
        fn collect(
            deck: &[Card],
            start: usize,
            left: usize,
            subset: &mut Vec<Card>,
            keys: &mut Vec<u64>,
        ) {
            keys.push(canonical_key(subset));
            if left == 0 {
                return;
            }
            for i in start..deck.len() {
                subset.push(deck[i]);
                collect(deck, i + 1, left - 1, subset, keys);
                subset.pop();
            }
        }
        collect(&deck, 0, 4, &mut subset, &mut keys);
        keys.sort_unstable();
        keys.dedup();

        let entries: Vec<(u64, u64)> = keys
            .par_iter()
            .map(|&key| {
                let cards = cards_of_key(key);
                let pool: Vec<Card> = deck
                    .iter()
                    .copied()
                    .filter(|c| !cards.contains(c))
                    .collect();
                let t = sum_completions(&cards, &pool, HAND_SIZE - cards.len(), table);
                (key, t)
            })
            .collect();

        let mut map: HashMap<u64, u64> = entries.into_iter().collect();

        // Size 5: one entry per equivalence class, worth its pat payout.
        for class in enumerate_classes() {
            let hand = class.canonical.hand();
            map.insert(canonical_key(hand.cards()), table.payout(hand));
        }

        CompletionMemo {
            table: table.clone(),
            map,
        }
    }

    pub fn matches(&self, table: &PayTable) -> bool {
        self.table == *table
    }

    pub fn game(&self) -> GameKind {
        self.table.game()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Payout total over all completions of the given cards.
    pub fn completion_total(&self, cards: &[Card]) -> u64 {
        *self
            .map
            .get(&canonical_key(cards))
            .expect("memo covers every partial hand")
    }

    fn check(&self, table: &PayTable) -> Result<(), ExpectError> {
        if self.matches(table) {
            Ok(())
        } else {
            Err(ExpectError::MemoMismatch {
                memo: self.table.name().to_string(),
                requested: table.name().to_string(),
            })
        }
    }
}

fn cards_of_key(mut key: u64) -> Vec<Card> {
    let mut rev = Vec::new();
    while key != 0 {
        let b = (key & 0xff) as u8 - 1;
        rev.push(Card::raw(b >> 2, b & 3));
        key >>= 8;
    }
    rev.reverse();
    rev
}

/// Fast backend: identical integer to [`ce_naive`] for every input, computed
/// by inclusion-exclusion over subsets of the discards,
/// sum over S of discards of (-1)^|S| T(held + S).
pub fn ce_fast(
    hand: &Hand,
    mask: HoldMask,
    table: &PayTable,
    memo: &CompletionMemo,
) -> Result<ScaledCe, ExpectError> {
    memo.check(table)?;
    let (held, discarded) = split_hand(hand, mask);
    let k = held.len();
    let d = discarded.len();
    let mut acc: i64 = 0;
    let mut cards = Vec::with_capacity(HAND_SIZE);
    for s_bits in 0u8..(1 << d) {
        cards.clear();
        cards.extend_from_slice(&held);
        for (j, &c) in discarded.iter().enumerate() {
            if s_bits & (1 << j) != 0 {
                cards.push(c);
            }
        }
        let t = memo.completion_total(&cards) as i64;
        if s_bits.count_ones() % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    debug_assert!(acc >= 0);
    Ok(acc as u64 * DRAW_FACTOR[k])
}

#[derive(Debug, Clone, Copy)]
pub enum Backend<'a> {
    Naive,
    Fast(&'a CompletionMemo),
}

/// Fills the 32-entry CE vector for a class and selects the optimal hold.
/// Ties are broken toward holding more cards, then earlier cards; the
/// `unique` flag records whether a tie occurred.
pub fn solve_class(
    class: &EquivClass,
    table: &PayTable,
    backend: Backend<'_>,
) -> Result<HoldResult, ExpectError> {
    let hand = class.canonical.hand();
    let mut ce = [0u64; NUM_MASKS];
    match backend {
        Backend::Naive => {
            for mask in HoldMask::iter_all() {
                ce[mask.bits() as usize] = ce_naive(hand, mask, table);
            }
        }
        Backend::Fast(memo) => {
            memo.check(table)?;
            // Completion totals for all 32 subsets of the hand, then one
            // inclusion-exclusion pass per mask.
            let cards = hand.cards();
            let mut t = [0i64; NUM_MASKS];
            let mut subset = Vec::with_capacity(HAND_SIZE);
            for (bits, slot) in t.iter_mut().enumerate() {
                subset.clear();
                for (i, &c) in cards.iter().enumerate() {
                    if bits & (1 << i) != 0 {
                        subset.push(c);
                    }
                }
                *slot = memo.completion_total(&subset) as i64;
            }
            for mask in 0u8..32 {
                let discards = !mask & 31;
                let mut acc = 0i64;
                let mut s = discards;
                loop {
                    let term = t[(mask | s) as usize];
                    if s.count_ones() % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                    if s == 0 {
                        break;
                    }
                    s = (s - 1) & discards;
                }
                debug_assert!(acc >= 0);
                ce[mask as usize] = acc as u64 * DRAW_FACTOR[mask.count_ones() as usize];
            }
        }
    }

    let mut best = HoldMask::new(0);
    let mut best_ce = ce[0];
    let mut ties = 1u32;
    for mask in HoldMask::iter_all().skip(1) {
        let v = ce[mask.bits() as usize];
        if v > best_ce {
            best = mask;
            best_ce = v;
            ties = 1;
        } else if v == best_ce {
            ties += 1;
            if mask.tiebreak_rank() > best.tiebreak_rank() {
                best = mask;
            }
        }
    }
    Ok(HoldResult {
        class: *class,
        ce,
        best_mask: best,
        unique: ties == 1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendKind {
    Naive,
    Fast,
}

/// Solves every equivalence class, in class-index order regardless of
/// parallelism. The fast backend builds its completion memo first.
pub fn solve_all(table: &PayTable, kind: BackendKind) -> Vec<HoldResult> {
    let classes = enumerate_classes();
    match kind {
        BackendKind::Fast => {
            let memo = CompletionMemo::build(table);
            classes
                .par_iter()
                .map(|c| solve_class(c, table, Backend::Fast(&memo)).expect("memo matches"))
                .collect()
        }
        BackendKind::Naive => classes
            .par_iter()
            .map(|c| solve_class(c, table, Backend::Naive).expect("naive cannot fail"))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonicalize;
    use crate::deck::builtin_paytable;

    fn hand(s: &str) -> Hand {
        Hand::parse(s).unwrap()
    }

    fn class_of(h: &Hand) -> EquivClass {
        let canonical = canonicalize(h);
        EquivClass {
            canonical,
            orbit_size: crate::canonical::orbit_size(&canonical),
            class_index: 0,
        }
    }

    #[test]
    fn scale_factors_are_exact() {
        // C(47, 5-k) * DRAW_FACTOR[k] == SCALE for every k.
        let choose = [1_533_939u64, 178_365, 16_215, 1_081, 47, 1];
        for k in 0..6 {
            assert_eq!(choose[k] * DRAW_FACTOR[k], SCALE);
        }
    }

    #[test]
    fn pat_royal_holds_all() {
        let table = builtin_paytable("job-9-6").unwrap();
        let h = hand("Tc Jc Qc Kc Ac");
        assert_eq!(ce_naive(&h, HoldMask::ALL, &table), 6_135_756_000);
    }

    #[test]
    fn pat_straight_value() {
        let table = builtin_paytable("job-9-6").unwrap();
        let h = hand("5c 6d 7h 8s 9c");
        assert_eq!(ce_naive(&h, HoldMask::ALL, &table), 4 * SCALE);
        assert_eq!(4 * SCALE, 30_678_780);
    }

    #[test]
    fn four_to_royal_draw_value() {
        let table = builtin_paytable("job-9-6").unwrap();
        // Hold the suited TJQK out of a hand with a low offsuit card.
        let h = hand("2d Tc Jc Qc Kc");
        let mask = HoldMask::from_flags([false, true, true, true, true]);
        assert_eq!(ce_naive(&h, mask, &table), 150_946_125);
    }

    #[test]
    fn garbage_hold_none_value() {
        let table = builtin_paytable("job-9-6").unwrap();
        // Class {5,6,8,9,T} with suit pattern (1,2,3,4,1).
        let h = hand("5c 6d 8h 9s Tc");
        assert_eq!(ce_naive(&h, HoldMask::NONE, &table), 2_741_080);
    }

    #[test]
    fn memo_base_case_is_total_payout() {
        let table = builtin_paytable("job-9-6").unwrap();
        let memo = CompletionMemo::build(&table);
        // Payout sum over all C(52,5) hands, from the known frequencies.
        let expected = 4 * 800
            + 36 * 50
            + 624 * 25
            + 3_744 * 9
            + 5_108 * 6
            + 10_200 * 4
            + 54_912 * 3
            + 123_552 * 2
            + 337_920;
        assert_eq!(memo.completion_total(&[]), expected);
    }

    #[test]
    fn fast_equals_naive_spot_classes() {
        let table = builtin_paytable("job-9-6").unwrap();
        let memo = CompletionMemo::build(&table);
        for s in [
            "Tc Jc Qc Kc Ac",
            "5c 6d 8h 9s Tc",
            "2d Tc Jc Qc Kc",
            "7c 7d 7h 2s 9c",
            "Jc Jd 4h 6s 9c",
        ] {
            let h = hand(s);
            for mask in HoldMask::iter_all() {
                assert_eq!(
                    ce_fast(&h, mask, &table, &memo).unwrap(),
                    ce_naive(&h, mask, &table),
                    "hand {s} mask {:#07b}",
                    mask.bits()
                );
            }
        }
    }

    #[test]
    fn memo_mismatch_is_an_error() {
        let job = builtin_paytable("job-9-6").unwrap();
        let db = builtin_paytable("double-bonus").unwrap();
        let memo = CompletionMemo::build(&job);
        let h = hand("Tc Jc Qc Kc Ac");
        assert!(matches!(
            ce_fast(&h, HoldMask::ALL, &db, &memo),
            Err(ExpectError::MemoMismatch { .. })
        ));
    }

    #[test]
    fn quads_are_never_unique() {
        let table = builtin_paytable("job-9-6").unwrap();
        let memo = CompletionMemo::build(&table);
        let class = class_of(&hand("9c 9d 9h 9s 4c"));
        let result = solve_class(&class, &table, Backend::Fast(&memo)).unwrap();
        assert!(!result.unique);
        // Tie-break prefers holding all five.
        assert_eq!(result.best_mask, HoldMask::ALL);
        assert_eq!(result.best_ce(), 25 * SCALE);
    }

    #[test]
    fn ttjqk_two_suits_not_unique() {
        let table = builtin_paytable("job-9-6").unwrap();
        let memo = CompletionMemo::build(&table);
        let class = class_of(&hand("Tc Td Jc Qd Kh"));
        let result = solve_class(&class, &table, Backend::Fast(&memo)).unwrap();
        assert!(!result.unique);
        // Either ten may be discarded; the tie-break keeps the first.
        let flags = result.best_mask.flags();
        assert_eq!(flags, [true, false, true, true, true]);
    }

    #[test]
    fn pat_royal_uniquely_optimal() {
        let table = builtin_paytable("job-9-6").unwrap();
        let memo = CompletionMemo::build(&table);
        let class = class_of(&hand("Tc Jc Qc Kc Ac"));
        let result = solve_class(&class, &table, Backend::Fast(&memo)).unwrap();
        assert!(result.unique);
        assert_eq!(result.best_mask, HoldMask::ALL);
        for mask in HoldMask::iter_all() {
            if mask != HoldMask::ALL {
                assert!(result.ce[mask.bits() as usize] < result.best_ce());
            }
        }
    }
}
