//! Card and hand primitives, hand-rank categorization, and pay tables.

use std::fmt;
use thiserror::Error;

/// Denomination of a ten; J, Q, K, A are 11..14.
pub const TEN: u8 = 10;
pub const JACK: u8 = 11;
pub const QUEEN: u8 = 12;
pub const KING: u8 = 13;
pub const ACE: u8 = 14;

pub const DENOM_MIN: u8 = 2;
pub const DENOM_MAX: u8 = 14;
pub const NUM_SUITS: u8 = 4;
pub const DECK_SIZE: usize = 52;
pub const HAND_SIZE: usize = 5;

/// Total number of 5-card hands, C(52,5).
pub const TOTAL_HANDS: u64 = 2_598_960;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DeckError {
    #[error("denomination {0} out of range 2..=14")]
    BadDenomination(u8),
    #[error("suit {0} out of range 0..=3")]
    BadSuit(u8),
    #[error("hand contains duplicate card {0}")]
    DuplicateCard(Card),
    #[error("cannot parse card token {0:?}")]
    BadCardToken(String),
}

/// A playing card: denomination 2..=14 (11..14 = J,Q,K,A) and suit 0..=3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Card {
    denom: u8,
    suit: u8,
}

impl Card {
    pub fn new(denom: u8, suit: u8) -> Result<Card, DeckError> {
        if !(DENOM_MIN..=DENOM_MAX).contains(&denom) {
            return Err(DeckError::BadDenomination(denom));
        }
        if suit >= NUM_SUITS {
            return Err(DeckError::BadSuit(suit));
        }
        Ok(Card { denom, suit })
    }

    /// Unchecked constructor for internal enumeration loops.
    #[inline]
    pub(crate) fn raw(denom: u8, suit: u8) -> Card {
        debug_assert!((DENOM_MIN..=DENOM_MAX).contains(&denom) && suit < NUM_SUITS);
        Card { denom, suit }
    }

    #[inline]
    pub fn denom(self) -> u8 {
        self.denom
    }

    #[inline]
    pub fn suit(self) -> u8 {
        self.suit
    }

    /// Position in the 52-card deck, ordered by denomination then suit.
    #[inline]
    pub fn index(self) -> usize {
        (self.denom - DENOM_MIN) as usize * 4 + self.suit as usize
    }

    pub fn from_index(i: usize) -> Card {
        assert!(i < DECK_SIZE);
        Card {
            denom: DENOM_MIN + (i / 4) as u8,
            suit: (i % 4) as u8,
        }
    }

    pub fn is_high(self) -> bool {
        self.denom >= JACK
    }

    /// Parses tokens like "Tc", "9h", "As" (denomination then suit letter).
    pub fn parse(token: &str) -> Result<Card, DeckError> {
        let bad = || DeckError::BadCardToken(token.to_string());
        let mut chars = token.chars();
        let (d, s) = match (chars.next(), chars.next(), chars.next()) {
            (Some(d), Some(s), None) => (d, s),
            _ => return Err(bad()),
        };
        let denom = match d.to_ascii_uppercase() {
            'T' => TEN,
            'J' => JACK,
            'Q' => QUEEN,
            'K' => KING,
            'A' => ACE,
            c => c.to_digit(10).filter(|&v| v >= 2).ok_or_else(bad)? as u8,
        };
        let suit = match s.to_ascii_lowercase() {
            'c' => 0,
            'd' => 1,
            'h' => 2,
            's' => 3,
            _ => return Err(bad()),
        };
        Card::new(denom, suit)
    }
}

pub fn denom_char(denom: u8) -> char {
    match denom {
        TEN => 'T',
        JACK => 'J',
        QUEEN => 'Q',
        KING => 'K',
        ACE => 'A',
        d => (b'0' + d) as char,
    }
}

impl fmt::Display for Card {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suit = ['c', 'd', 'h', 's'][self.suit as usize];
        write!(f, "{}{}", denom_char(self.denom), suit)
    }
}

/// An unordered 5-card hand. Cards are stored sorted by denomination then
/// suit, so iteration order is deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Hand {
    cards: [Card; HAND_SIZE],
}

impl Hand {
    pub fn new(mut cards: [Card; HAND_SIZE]) -> Result<Hand, DeckError> {
        cards.sort_unstable();
        for w in cards.windows(2) {
            if w[0] == w[1] {
                return Err(DeckError::DuplicateCard(w[0]));
            }
        }
        Ok(Hand { cards })
    }

    /// Cards in sorted order.
    #[inline]
    pub fn cards(&self) -> &[Card; HAND_SIZE] {
        &self.cards
    }

    /// The 47 cards not in this hand, in deck order.
    pub fn unseen(&self) -> Vec<Card> {
        (0..DECK_SIZE)
            .map(Card::from_index)
            .filter(|c| !self.cards.contains(c))
            .collect()
    }

    pub fn parse(tokens: &str) -> Result<Hand, DeckError> {
        let cards: Vec<Card> = tokens
            .split_whitespace()
            .map(Card::parse)
            .collect::<Result<_, _>>()?;
        let array: [Card; HAND_SIZE] = cards
            .try_into()
            .map_err(|_| DeckError::BadCardToken(tokens.to_string()))?;
        Hand::new(array)
    }
}

impl fmt::Display for Hand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.cards {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// Which game's category scheme applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GameKind {
    JacksOrBetter,
    DoubleBonus,
}

impl GameKind {
    pub fn config_name(self) -> &'static str {
        match self {
            GameKind::JacksOrBetter => "jacks-or-better",
            GameKind::DoubleBonus => "double-bonus",
        }
    }

    /// The game's categories from best to worst. Exhaustive and mutually
    /// exclusive over all hands.
    pub fn categories(self) -> &'static [RankCategory] {
        use RankCategory::*;
        match self {
            GameKind::JacksOrBetter => &[
                RoyalFlush,
                StraightFlush,
                FourOfAKind,
                FullHouse,
                Flush,
                Straight,
                ThreeOfAKind,
                TwoPairs,
                JacksOrBetterPair,
                Other,
            ],
            GameKind::DoubleBonus => &[
                RoyalFlush,
                StraightFlush,
                FourAces,
                FourTwosToFours,
                FourFivesToKings,
                FullHouse,
                Flush,
                Straight,
                ThreeOfAKind,
                TwoPairs,
                JacksOrBetterPair,
                Other,
            ],
        }
    }
}

/// Hand rank categories across all supported games. A given game uses the
/// subset returned by [`GameKind::categories`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RankCategory {
    RoyalFlush,
    StraightFlush,
    FourAces,
    FourTwosToFours,
    FourFivesToKings,
    FourOfAKind,
    FullHouse,
    Flush,
    Straight,
    ThreeOfAKind,
    TwoPairs,
    JacksOrBetterPair,
    Other,
}

pub const NUM_CATEGORIES: usize = 13;

impl RankCategory {
    #[inline]
    pub fn as_index(self) -> usize {
        self as usize
    }

    pub fn config_key(self) -> &'static str {
        use RankCategory::*;
        match self {
            RoyalFlush => "royal_flush",
            StraightFlush => "straight_flush",
            FourAces => "four_aces",
            FourTwosToFours => "four_twos_to_fours",
            FourFivesToKings => "four_fives_to_kings",
            FourOfAKind => "four_of_a_kind",
            FullHouse => "full_house",
            Flush => "flush",
            Straight => "straight",
            ThreeOfAKind => "three_of_a_kind",
            TwoPairs => "two_pairs",
            JacksOrBetterPair => "jacks_or_better",
            Other => "other",
        }
    }

    pub fn display_name(self) -> &'static str {
        use RankCategory::*;
        match self {
            RoyalFlush => "royal flush",
            StraightFlush => "straight flush",
            FourAces => "four aces",
            FourTwosToFours => "four 2-4",
            FourFivesToKings => "four 5-K",
            FourOfAKind => "four of a kind",
            FullHouse => "full house",
            Flush => "flush",
            Straight => "straight",
            ThreeOfAKind => "three of a kind",
            TwoPairs => "two pairs",
            JacksOrBetterPair => "jacks or better",
            Other => "other",
        }
    }

    fn from_config_key(key: &str) -> Option<RankCategory> {
        use RankCategory::*;
        Some(match key {
            "royal_flush" => RoyalFlush,
            "straight_flush" => StraightFlush,
            "four_aces" => FourAces,
            "four_twos_to_fours" => FourTwosToFours,
            "four_fives_to_kings" => FourFivesToKings,
            "four_of_a_kind" => FourOfAKind,
            "full_house" => FullHouse,
            "flush" => Flush,
            "straight" => Straight,
            "three_of_a_kind" => ThreeOfAKind,
            "two_pairs" => TwoPairs,
            "jacks_or_better" => JacksOrBetterPair,
            "other" => Other,
            _ => return None,
        })
    }
}

/// Categorizes five cards without requiring a sorted [`Hand`]. Aces play
/// both high (TJQKA) and low (A2345); a royal flush is not a straight flush;
/// "jacks or better" means exactly one pair of denomination J or higher.
pub fn categorize_cards(cards: &[Card; HAND_SIZE], game: GameKind) -> RankCategory {
    let mut counts = [0u8; 15];
    let first_suit = cards[0].suit;
    let mut suited = true;
    for c in cards {
        counts[c.denom as usize] += 1;
        suited &= c.suit == first_suit;
    }

    // Multiplicity profile: how many denominations appear 2/3/4 times.
    let mut pairs = 0u8;
    let mut trips = 0u8;
    let mut quads = 0u8;
    let mut pair_denom = 0u8;
    let mut quad_denom = 0u8;
    let mut distinct = 0u8;
    let mut lo = 0u8;
    let mut hi = 0u8;
    for d in DENOM_MIN..=DENOM_MAX {
        let n = counts[d as usize];
        if n > 0 {
            distinct += 1;
            if lo == 0 {
                lo = d;
            }
            hi = d;
        }
        match n {
            2 => {
                pairs += 1;
                pair_denom = d;
            }
            3 => trips += 1,
            4 => {
                quads += 1;
                quad_denom = d;
            }
            _ => {}
        }
    }

    if quads == 1 {
        return match game {
            GameKind::JacksOrBetter => RankCategory::FourOfAKind,
            GameKind::DoubleBonus => {
                if quad_denom == ACE {
                    RankCategory::FourAces
                } else if quad_denom <= 4 {
                    RankCategory::FourTwosToFours
                } else {
                    RankCategory::FourFivesToKings
                }
            }
        };
    }
    if trips == 1 && pairs == 1 {
        return RankCategory::FullHouse;
    }

    // Straight: five distinct denominations spanning 4, or the wheel A2345.
    let straight = distinct == 5
        && (hi - lo == 4
            || (hi == ACE && counts[2] == 1 && counts[3] == 1 && counts[4] == 1 && counts[5] == 1));

    if suited {
        if straight {
            return if lo == TEN {
                RankCategory::RoyalFlush
            } else {
                RankCategory::StraightFlush
            };
        }
        return RankCategory::Flush;
    }
    if straight {
        return RankCategory::Straight;
    }
    if trips == 1 {
        return RankCategory::ThreeOfAKind;
    }
    match pairs {
        2 => RankCategory::TwoPairs,
        1 if pair_denom >= JACK => RankCategory::JacksOrBetterPair,
        _ => RankCategory::Other,
    }
}

/// Categorizes a hand under a game's scheme.
pub fn categorize(hand: &Hand, game: GameKind) -> RankCategory {
    categorize_cards(hand.cards(), game)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PayTableError {
    #[error("line {0}: expected `key = value`")]
    BadLine(usize),
    #[error("line {0}: unknown key {1:?}")]
    UnknownKey(usize, String),
    #[error("line {0}: duplicate key {1:?}")]
    DuplicateKey(usize, String),
    #[error("line {0}: bad value {1:?}")]
    BadValue(usize, String),
    #[error("missing key {0:?}")]
    MissingKey(&'static str),
    #[error("category {0:?} does not belong to game {1:?}")]
    ForeignCategory(String, String),
    #[error("the `other` category must pay 0")]
    OtherMustPayZero,
}

/// A game's payout schedule, per unit bet at maximum-bet odds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PayTable {
    name: String,
    game: GameKind,
    payouts: Vec<(RankCategory, u32)>,
    by_category: [u64; NUM_CATEGORIES],
}

impl PayTable {
    pub fn new(
        name: &str,
        game: GameKind,
        payouts: &[(RankCategory, u32)],
    ) -> Result<PayTable, PayTableError> {
        let expected = game.categories();
        let mut by_category = [0u64; NUM_CATEGORIES];
        let mut seen = [false; NUM_CATEGORIES];
        for &(cat, pay) in payouts {
            if !expected.contains(&cat) {
                return Err(PayTableError::ForeignCategory(
                    cat.config_key().to_string(),
                    game.config_name().to_string(),
                ));
            }
            if seen[cat.as_index()] {
                return Err(PayTableError::DuplicateKey(0, cat.config_key().to_string()));
            }
            seen[cat.as_index()] = true;
            by_category[cat.as_index()] = pay as u64;
        }
        for &cat in expected {
            if !seen[cat.as_index()] {
                return Err(PayTableError::MissingKey(cat.config_key()));
            }
        }
        if by_category[RankCategory::Other.as_index()] != 0 {
            return Err(PayTableError::OtherMustPayZero);
        }
        Ok(PayTable {
            name: name.to_string(),
            game,
            payouts: payouts.to_vec(),
            by_category,
        })
    }

    /// Parses the line-based `key = value` config format. Unknown keys are
    /// rejected; every category of the game must appear exactly once.
    pub fn parse(text: &str) -> Result<PayTable, PayTableError> {
        let mut name: Option<String> = None;
        let mut game: Option<GameKind> = None;
        let mut entries: Vec<(RankCategory, u32)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or(PayTableError::BadLine(lineno))?;
            let key = key.trim();
            let value = value.trim();
            match key {
                "name" => {
                    if name.is_some() {
                        return Err(PayTableError::DuplicateKey(lineno, key.to_string()));
                    }
                    name = Some(value.to_string());
                }
                "game" => {
                    if game.is_some() {
                        return Err(PayTableError::DuplicateKey(lineno, key.to_string()));
                    }
                    game = Some(match value {
                        "jacks-or-better" => GameKind::JacksOrBetter,
                        "double-bonus" => GameKind::DoubleBonus,
                        _ => return Err(PayTableError::BadValue(lineno, value.to_string())),
                    });
                }
                _ => {
                    let cat = RankCategory::from_config_key(key)
                        .ok_or_else(|| PayTableError::UnknownKey(lineno, key.to_string()))?;
                    if entries.iter().any(|(c, _)| *c == cat) {
                        return Err(PayTableError::DuplicateKey(lineno, key.to_string()));
                    }
                    let pay: u32 = value
                        .parse()
                        .map_err(|_| PayTableError::BadValue(lineno, value.to_string()))?;
                    entries.push((cat, pay));
                }
            }
        }
        let name = name.ok_or(PayTableError::MissingKey("name"))?;
        let game = game.ok_or(PayTableError::MissingKey("game"))?;
        PayTable::new(&name, game, &entries)
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("name = {}\n", self.name));
        out.push_str(&format!("game = {}\n", self.game.config_name()));
        for &(cat, pay) in &self.payouts {
            out.push_str(&format!("{} = {}\n", cat.config_key(), pay));
        }
        out
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn game(&self) -> GameKind {
        self.game
    }

    pub fn payouts(&self) -> &[(RankCategory, u32)] {
        &self.payouts
    }

    #[inline]
    pub fn payout_of(&self, cat: RankCategory) -> u64 {
        self.by_category[cat.as_index()]
    }

    #[inline]
    pub fn payout_cards(&self, cards: &[Card; HAND_SIZE]) -> u64 {
        self.payout_of(categorize_cards(cards, self.game))
    }

    /// Integer payout of a final hand per unit bet.
    pub fn payout(&self, hand: &Hand) -> u64 {
        self.payout_cards(hand.cards())
    }
}

pub const JOB_9_6: &str = include_str!("../data/job-9-6.txt");
pub const JOB_8_5: &str = include_str!("../data/job-8-5.txt");
pub const DOUBLE_BONUS: &str = include_str!("../data/double-bonus.txt");

/// Returns a built-in pay table by name, if one exists.
pub fn builtin_paytable(name: &str) -> Option<PayTable> {
    let text = match name {
        "job-9-6" => JOB_9_6,
        "job-8-5" => JOB_8_5,
        "double-bonus" => DOUBLE_BONUS,
        _ => return None,
    };
    Some(PayTable::parse(text).expect("built-in pay table must parse"))
}

pub const BUILTIN_PAYTABLE_NAMES: [&str; 3] = ["job-9-6", "job-8-5", "double-bonus"];
