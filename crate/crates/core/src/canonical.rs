//! Suit-equivalence canonicalization and exhaustive enumeration of the
//! 134,459 equivalence classes of initial hands.
//!
//! Two hands are equivalent when they have the same five denominations and
//! the suits match after a permutation of the four suits. The canonical
//! representative of a class is the lexicographically smallest hand (cards
//! sorted by denomination then suit) over all 24 suit permutations.

use crate::deck::{Card, Hand, DENOM_MAX, DENOM_MIN, HAND_SIZE, NUM_SUITS};
use std::sync::LazyLock;

/// All 24 permutations of the four suits.
static SUIT_PERMS: LazyLock<[[u8; 4]; 24]> = LazyLock::new(|| {
    let mut perms = [[0u8; 4]; 24];
    let mut n = 0;
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    if a != b && a != c && a != d && b != c && b != d && c != d {
                        perms[n] = [a, b, c, d];
                        n += 1;
                    }
                }
            }
        }
    }
    debug_assert_eq!(n, 24);
    perms
});

#[inline]
fn unpack(byte: u8) -> Card {
    Card::raw(byte >> 2, byte & 3)
}

/// Packs up to five cards into a `u64` key after applying a suit permutation
/// and sorting. Bytes are offset by one so that key length is unambiguous.
#[inline]
fn perm_key(cards: &[Card], perm: &[u8; 4]) -> u64 {
    let mut bytes = [0u8; HAND_SIZE];
    let n = cards.len();
    for (i, c) in cards.iter().enumerate() {
        let b = (c.denom() << 2) | perm[c.suit() as usize];
        // Insertion sort keeps the packed sequence ordered.
        let mut j = i;
        while j > 0 && bytes[j - 1] > b {
            bytes[j] = bytes[j - 1];
            j -= 1;
        }
        bytes[j] = b;
    }
    let mut key = 0u64;
    for &b in &bytes[..n] {
        key = (key << 8) | (b as u64 + 1);
    }
    key
}

/// Canonical key of any 0..=5 card set: the minimum packed key over all 24
/// suit permutations. Equal keys identify suit-equivalent card sets.
pub fn canonical_key(cards: &[Card]) -> u64 {
    debug_assert!(cards.len() <= HAND_SIZE);
    SUIT_PERMS
        .iter()
        .map(|p| perm_key(cards, p))
        .min()
        .unwrap()
}

fn cards_from_key(mut key: u64, n: usize) -> Vec<Card> {
    let mut out = vec![Card::raw(2, 0); n];
    for i in (0..n).rev() {
        out[i] = unpack((key & 0xff) as u8 - 1);
        key >>= 8;
    }
    out
}

/// A canonical representative hand together with its first-use suit pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonicalHand {
    hand: Hand,
}

impl CanonicalHand {
    pub fn hand(&self) -> &Hand {
        &self.hand
    }

    /// First-use suit labels (1..=4) over the denomination-sorted cards:
    /// the first card's suit is labeled 1, each later suit gets the smallest
    /// unused label when first seen.
    pub fn pattern(&self) -> [u8; HAND_SIZE] {
        let mut labels = [0u8; HAND_SIZE];
        let mut map = [0u8; NUM_SUITS as usize];
        let mut next = 1u8;
        for (i, c) in self.hand.cards().iter().enumerate() {
            let s = c.suit() as usize;
            if map[s] == 0 {
                map[s] = next;
                next += 1;
            }
            labels[i] = map[s];
        }
        labels
    }
}

/// Maps a hand to the canonical representative of its equivalence class.
/// Idempotent: two hands canonicalize identically iff they are equivalent.
pub fn canonicalize(hand: &Hand) -> CanonicalHand {
    let key = canonical_key(hand.cards());
    let cards = cards_from_key(key, HAND_SIZE);
    let hand = Hand::new(cards.try_into().unwrap()).expect("canonical cards are distinct");
    CanonicalHand { hand }
}

/// Number of distinct hands obtained by applying all 24 suit permutations.
/// Always 4, 12, or 24 for a 5-card hand.
pub fn orbit_size(c: &CanonicalHand) -> u32 {
    let mut keys = [0u64; 24];
    for (i, p) in SUIT_PERMS.iter().enumerate() {
        keys[i] = perm_key(c.hand.cards(), p);
    }
    keys.sort_unstable();
    let mut n = 1u32;
    for i in 1..keys.len() {
        if keys[i] != keys[i - 1] {
            n += 1;
        }
    }
    n
}

/// One suit-equivalence class of initial hands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivClass {
    pub canonical: CanonicalHand,
    pub orbit_size: u32,
    /// Ordinal in enumeration order, 1-based.
    pub class_index: u32,
}

/// Denomination shapes in enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    FiveDistinct,
    OnePair,
    TwoPairs,
    Trips,
    FullHouse,
    Quads,
}

pub const NUM_CLASSES: usize = 134_459;

/// Distinct suit patterns per denomination tuple, by shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ShapeCensus {
    pub five_distinct: usize,
    pub one_pair: usize,
    pub two_pairs: usize,
    pub trips: usize,
    pub full_house: usize,
    pub quads: usize,
}

impl ShapeCensus {
    /// Pattern counts grouped the way the class-count identity groups them:
    /// full house and quads share the 13*12 denomination count, so their
    /// pattern counts combine.
    pub fn five_term(&self) -> [usize; 5] {
        [
            self.five_distinct,
            self.one_pair,
            self.two_pairs,
            self.trips,
            self.full_house + self.quads,
        ]
    }
}

/// Sorted denomination multiset for one tuple of a shape.
fn tuple_denoms(shape: Shape, tuple: &[u8]) -> [u8; HAND_SIZE] {
    let mut out = [0u8; HAND_SIZE];
    let expanded: Vec<u8> = match shape {
        Shape::FiveDistinct => tuple.to_vec(),
        Shape::OnePair => vec![tuple[0], tuple[0], tuple[1], tuple[2], tuple[3]],
        Shape::TwoPairs => vec![tuple[0], tuple[0], tuple[1], tuple[1], tuple[2]],
        Shape::Trips => vec![tuple[0], tuple[0], tuple[0], tuple[1], tuple[2]],
        Shape::FullHouse => vec![tuple[0], tuple[0], tuple[0], tuple[1], tuple[1]],
        Shape::Quads => vec![tuple[0], tuple[0], tuple[0], tuple[0], tuple[1]],
    };
    out.copy_from_slice(&expanded);
    out.sort_unstable();
    out
}

/// Generates every candidate first-use suit labeling of a sorted
/// denomination multiset: label[0] = 0, label[i] <= max(previous) + 1, and
/// cards of equal denomination get strictly increasing labels. Every
/// equivalence class of the multiset contains at least one such labeling.
fn candidate_suitings(denoms: &[u8; HAND_SIZE]) -> Vec<[u8; HAND_SIZE]> {
    let mut out = Vec::new();
    let mut suits = [0u8; HAND_SIZE];
    fn rec(
        denoms: &[u8; HAND_SIZE],
        suits: &mut [u8; HAND_SIZE],
        pos: usize,
        max_used: u8,
        out: &mut Vec<[u8; HAND_SIZE]>,
    ) {
        if pos == HAND_SIZE {
            out.push(*suits);
            return;
        }
        let bound = (max_used + 1).min(NUM_SUITS - 1);
        for s in 0..=bound {
            // Equal denominations must take strictly increasing suits so the
            // card list stays sorted.
            if pos > 0 && denoms[pos - 1] == denoms[pos] && suits[pos - 1] >= s {
                continue;
            }
            suits[pos] = s;
            rec(denoms, suits, pos + 1, max_used.max(s + 1), out);
        }
    }
    rec(denoms, &mut suits, 0, 0, &mut out);
    out
}

/// Canonical class keys for one denomination tuple, sorted ascending.
fn classes_for_tuple(denoms: &[u8; HAND_SIZE]) -> Vec<u64> {
    let mut keys: Vec<u64> = candidate_suitings(denoms)
        .iter()
        .map(|suits| {
            let cards: Vec<Card> = denoms
                .iter()
                .zip(suits.iter())
                .map(|(&d, &s)| Card::raw(d, s))
                .collect();
            canonical_key(&cards)
        })
        .collect();
    keys.sort_unstable();
    keys.dedup();
    keys
}

fn for_each_tuple(mut f: impl FnMut(Shape, &[u8])) {
    let denoms: Vec<u8> = (DENOM_MIN..=DENOM_MAX).collect();
    // Five distinct denominations.
    for a in 0..denoms.len() {
        for b in a + 1..denoms.len() {
            for c in b + 1..denoms.len() {
                for d in c + 1..denoms.len() {
                    for e in d + 1..denoms.len() {
                        f(
                            Shape::FiveDistinct,
                            &[denoms[a], denoms[b], denoms[c], denoms[d], denoms[e]],
                        );
                    }
                }
            }
        }
    }
    // One pair x plus three distinct others.
    for &x in &denoms {
        let rest: Vec<u8> = denoms.iter().copied().filter(|&d| d != x).collect();
        for a in 0..rest.len() {
            for b in a + 1..rest.len() {
                for c in b + 1..rest.len() {
                    f(Shape::OnePair, &[x, rest[a], rest[b], rest[c]]);
                }
            }
        }
    }
    // Two pairs x < y plus one other.
    for a in 0..denoms.len() {
        for b in a + 1..denoms.len() {
            for &z in denoms.iter().filter(|&&d| d != denoms[a] && d != denoms[b]) {
                f(Shape::TwoPairs, &[denoms[a], denoms[b], z]);
            }
        }
    }
    // Trips x plus two distinct others.
    for &x in &denoms {
        let rest: Vec<u8> = denoms.iter().copied().filter(|&d| d != x).collect();
        for a in 0..rest.len() {
            for b in a + 1..rest.len() {
                f(Shape::Trips, &[x, rest[a], rest[b]]);
            }
        }
    }
    // Full house: trips x, pair y.
    for &x in &denoms {
        for &y in denoms.iter().filter(|&&d| d != x) {
            f(Shape::FullHouse, &[x, y]);
        }
    }
    // Quads x plus kicker y.
    for &x in &denoms {
        for &y in denoms.iter().filter(|&&d| d != x) {
            f(Shape::Quads, &[x, y]);
        }
    }
}

/// Enumerates every equivalence class exactly once, in deterministic order:
/// shapes in the order five-distinct, one pair, two pairs, trips, full
/// house, quads; within a shape, ascending denomination tuple; within a
/// tuple, ascending canonical key.
pub fn enumerate_classes() -> Vec<EquivClass> {
    let mut out = Vec::with_capacity(NUM_CLASSES);
    let mut index = 0u32;
    for_each_tuple(|shape, tuple| {
        let denoms = tuple_denoms(shape, tuple);
        for key in classes_for_tuple(&denoms) {
            let cards = cards_from_key(key, HAND_SIZE);
            let hand = Hand::new(cards.try_into().unwrap()).unwrap();
            let canonical = CanonicalHand { hand };
            index += 1;
            out.push(EquivClass {
                canonical,
                orbit_size: orbit_size(&canonical),
                class_index: index,
            });
        }
    });
    out
}

/// Verifies that every tuple of a shape yields the same number of classes
/// and reports that per-tuple count.
pub fn shape_census() -> ShapeCensus {
    let mut census = ShapeCensus::default();
    let set = |census: &mut ShapeCensus, shape: Shape, n: usize| {
        let slot = match shape {
            Shape::FiveDistinct => &mut census.five_distinct,
            Shape::OnePair => &mut census.one_pair,
            Shape::TwoPairs => &mut census.two_pairs,
            Shape::Trips => &mut census.trips,
            Shape::FullHouse => &mut census.full_house,
            Shape::Quads => &mut census.quads,
        };
        if *slot == 0 {
            *slot = n;
        } else {
            assert_eq!(*slot, n, "pattern count varies within shape {shape:?}");
        }
    };
    for_each_tuple(|shape, tuple| {
        let denoms = tuple_denoms(shape, tuple);
        set(&mut census, shape, classes_for_tuple(&denoms).len());
    });
    census
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deck::categorize;
    use crate::deck::{GameKind, TOTAL_HANDS};

    fn hand(s: &str) -> Hand {
        Hand::parse(s).unwrap()
    }

    #[test]
    fn canonicalize_merges_equivalent_hands() {
        let a = canonicalize(&hand("Ac Ad Ah Kc Qd"));
        let b = canonicalize(&hand("As Ah Ad Ks Qh"));
        assert_eq!(a, b);
        assert_eq!(orbit_size(&a), 24);
    }

    #[test]
    fn royal_pattern_is_all_ones() {
        let clubs = canonicalize(&hand("Tc Jc Qc Kc Ac"));
        let spades = canonicalize(&hand("Ts Js Qs Ks As"));
        assert_eq!(clubs, spades);
        assert_eq!(clubs.pattern(), [1, 1, 1, 1, 1]);
        assert_eq!(orbit_size(&clubs), 4);
    }

    #[test]
    fn orbit_sizes_from_patterns() {
        // Four of a kind with kicker suited to the first ace.
        let quads = canonicalize(&hand("Ac Ad Ah As Kc"));
        assert_eq!(orbit_size(&quads), 4);
        let full_house = canonicalize(&hand("2c 2d 2h 3c 3d"));
        assert_eq!(orbit_size(&full_house), 12);
        let distinct = canonicalize(&hand("2c 3d 4h 5s 6s"));
        assert_eq!(orbit_size(&distinct), 24);
    }

    #[test]
    fn canonicalize_idempotent_spot() {
        for s in ["2c 7d 9h Js Ks", "4h 4s 9c 9d 2h", "Th Jh Qh 2c 2d"] {
            let c = canonicalize(&hand(s));
            assert_eq!(canonicalize(c.hand()), c);
        }
    }

    #[test]
    fn fifty_one_patterns_for_distinct_denoms() {
        let denoms = [2u8, 5, 7, 9, 13];
        assert_eq!(classes_for_tuple(&denoms).len(), 51);
    }

    #[test]
    fn census_counts() {
        let census = shape_census();
        assert_eq!(census.five_distinct, 51);
        assert_eq!(census.one_pair, 20);
        assert_eq!(census.two_pairs, 8);
        assert_eq!(census.trips, 5);
        assert_eq!(census.full_house, 2);
        assert_eq!(census.quads, 1);
        assert_eq!(census.five_term(), [51, 20, 8, 5, 3]);
    }

    #[test]
    fn class_count_and_weighted_total() {
        let classes = enumerate_classes();
        assert_eq!(classes.len(), NUM_CLASSES);
        let weighted: u64 = classes.iter().map(|c| c.orbit_size as u64).sum();
        assert_eq!(weighted, TOTAL_HANDS);
        // Representatives are canonical and patterns are first-use.
        for class in classes.iter().step_by(997) {
            let c = class.canonical;
            assert_eq!(canonicalize(c.hand()), c);
            let pattern = c.pattern();
            assert_eq!(pattern[0], 1);
            let mut max = 1;
            for &l in &pattern[1..] {
                assert!(l <= max + 1);
                max = max.max(l);
            }
            // The canonical representative's suits equal its pattern labels.
            for (card, &label) in c.hand().cards().iter().zip(pattern.iter()) {
                assert_eq!(card.suit() + 1, label);
            }
        }
    }

    #[test]
    fn categorize_constant_on_orbit() {
        let h = hand("8c 9c Tc Jd Qh");
        let base = categorize(&h, GameKind::JacksOrBetter);
        for perm in SUIT_PERMS.iter() {
            let cards: Vec<Card> = h
                .cards()
                .iter()
                .map(|c| Card::raw(c.denom(), perm[c.suit() as usize]))
                .collect();
            let permuted = Hand::new(cards.try_into().unwrap()).unwrap();
            assert_eq!(categorize(&permuted, GameKind::JacksOrBetter), base);
        }
    }
}
