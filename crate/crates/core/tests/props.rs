//! Property tests for the suit-symmetry and round-trip invariants.

use proptest::prelude::*;
use std::sync::OnceLock;
use vpoker::canonical::canonicalize;
use vpoker::cli::SolveRow;
use vpoker::deck::{builtin_paytable, categorize, Card, GameKind, Hand};
use vpoker::expect::{ce_fast, CompletionMemo, HoldMask};

fn arb_hand() -> impl Strategy<Value = Hand> {
    proptest::sample::subsequence((0..52usize).collect::<Vec<_>>(), 5).prop_map(|indices| {
        let cards: Vec<Card> = indices.into_iter().map(Card::from_index).collect();
        Hand::new(cards.try_into().unwrap()).unwrap()
    })
}

/// All 24 suit permutations, indexed 0..24.
fn perm(index: usize) -> [u8; 4] {
    let mut pool = vec![0u8, 1, 2, 3];
    let mut order = index;
    let mut out = [0u8; 4];
    for (i, slot) in out.iter_mut().enumerate() {
        let k = order % (4 - i);
        order /= 4 - i;
        *slot = pool.remove(k);
    }
    out
}

fn apply(hand: &Hand, p: [u8; 4]) -> Hand {
    let cards: Vec<Card> = hand
        .cards()
        .iter()
        .map(|c| Card::new(c.denom(), p[c.suit() as usize]).unwrap())
        .collect();
    Hand::new(cards.try_into().unwrap()).unwrap()
}

fn job96_memo() -> &'static CompletionMemo {
    static MEMO: OnceLock<CompletionMemo> = OnceLock::new();
    MEMO.get_or_init(|| CompletionMemo::build(&builtin_paytable("job-9-6").unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    /// canonicalize(canonicalize(h).hand()) == canonicalize(h).
    #[test]
    fn canonicalize_is_idempotent(hand in arb_hand()) {
        let c = canonicalize(&hand);
        prop_assert_eq!(canonicalize(c.hand()), c);
    }
}

proptest! {
    /// Two hands related by a suit permutation canonicalize identically and
    /// categorize identically.
    #[test]
    fn suit_permutation_invariance(hand in arb_hand(), which in 0usize..24) {
        let permuted = apply(&hand, perm(which));
        prop_assert_eq!(canonicalize(&hand), canonicalize(&permuted));
        for game in [GameKind::JacksOrBetter, GameKind::DoubleBonus] {
            prop_assert_eq!(categorize(&hand, game), categorize(&permuted, game));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The multiset of 32 hold values is identical for every representative
    /// of an orbit (masks permute, values do not).
    #[test]
    fn hold_values_suit_invariant(hand in arb_hand(), which in 0usize..24) {
        let table = builtin_paytable("job-9-6").unwrap();
        let memo = job96_memo();
        let permuted = apply(&hand, perm(which));
        let values = |h: &Hand| {
            let mut v: Vec<u64> = HoldMask::iter_all()
                .map(|m| ce_fast(h, m, &table, memo).unwrap())
                .collect();
            v.sort_unstable();
            v
        };
        prop_assert_eq!(values(&hand), values(&permuted));
    }
}

proptest! {
    /// Solve rows survive the CSV round trip.
    #[test]
    fn solve_row_round_trip(
        class_index in 1u32..=134_459,
        orbit_choice in 0usize..3,
        denoms in proptest::array::uniform5(2u8..=14),
        suits in proptest::array::uniform5(1u8..=4),
        flags in proptest::array::uniform5(any::<bool>()),
        scaled in 0u64..=6_135_756_000,
        unique in any::<bool>(),
    ) {
        let row = SolveRow {
            class_index,
            orbit_size: [4, 12, 24][orbit_choice],
            denoms,
            suit_labels: suits,
            hold_flags: flags,
            scaled_ce: scaled,
            unique,
        };
        let line = row.to_csv();
        prop_assert_eq!(SolveRow::parse_csv(&line).unwrap(), row);
    }
}
