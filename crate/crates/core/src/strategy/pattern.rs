//! Hand-shape patterns in the brace notation used by hand-rank charts:
//! cards inside one brace group share a suit, distinct brace groups take
//! different suits, and unbraced cards are unconstrained. Denominations
//! are single characters or parenthesized lists of characters and ranges,
//! e.g. `{(2-9)T(J-K)A}(T-K)`.

use crate::deck::{denom_char, Hand, ACE, DENOM_MAX, DENOM_MIN, HAND_SIZE, JACK, KING, QUEEN, TEN};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("bad denomination character {0:?}")]
    BadDenomChar(char),
    #[error("unterminated group or list in pattern {0:?}")]
    Unterminated(String),
    #[error("pattern {0:?} does not describe exactly five cards")]
    WrongCardCount(String),
    #[error("empty pattern element in {0:?}")]
    EmptyElement(String),
}

/// A set of denominations as a bitmask over 2..=14.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DenomSet(u16);

impl DenomSet {
    pub fn empty() -> DenomSet {
        DenomSet(0)
    }

    pub fn insert(&mut self, denom: u8) {
        debug_assert!((DENOM_MIN..=DENOM_MAX).contains(&denom));
        self.0 |= 1 << denom;
    }

    pub fn insert_range(&mut self, lo: u8, hi: u8) {
        for d in lo..=hi {
            self.insert(d);
        }
    }

    #[inline]
    pub fn contains(self, denom: u8) -> bool {
        self.0 & (1 << denom) != 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = u8> {
        (DENOM_MIN..=DENOM_MAX).filter(move |&d| self.contains(d))
    }
}

fn parse_denom_char(c: char) -> Result<u8, PatternError> {
    Ok(match c {
        'T' => TEN,
        'J' => JACK,
        'Q' => QUEEN,
        'K' => KING,
        'A' => ACE,
        '2'..='9' => c as u8 - b'0',
        _ => return Err(PatternError::BadDenomChar(c)),
    })
}

/// One card slot: the denominations it accepts and which brace group (if
/// any) it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Atom {
    denoms: DenomSet,
    group: Option<u8>,
}

/// A five-card hand-shape pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HandPattern {
    atoms: Vec<Atom>,
    groups: u8,
}

impl HandPattern {
    pub fn parse(text: &str) -> Result<HandPattern, PatternError> {
        let mut atoms = Vec::new();
        let mut groups = 0u8;
        let mut chars = text.chars().peekable();
        let unterminated = || PatternError::Unterminated(text.to_string());
        while let Some(&c) = chars.peek() {
            let group = if c == '{' {
                chars.next();
                let g = groups;
                groups += 1;
                let mut any = false;
                loop {
                    match chars.peek() {
                        Some('}') => {
                            chars.next();
                            break;
                        }
                        Some(_) => {
                            atoms.push(Atom {
                                denoms: parse_denom_spec(&mut chars, text)?,
                                group: Some(g),
                            });
                            any = true;
                        }
                        None => return Err(unterminated()),
                    }
                }
                if !any {
                    return Err(PatternError::EmptyElement(text.to_string()));
                }
                continue;
            } else {
                None
            };
            atoms.push(Atom {
                denoms: parse_denom_spec(&mut chars, text)?,
                group,
            });
        }
        if atoms.len() != HAND_SIZE {
            return Err(PatternError::WrongCardCount(text.to_string()));
        }
        Ok(HandPattern { atoms, groups })
    }

    /// True when the hand's five cards can be assigned to the pattern's five
    /// slots respecting denominations and suit grouping.
    pub fn matches(&self, hand: &Hand) -> bool {
        let cards = hand.cards();
        let mut used = [false; HAND_SIZE];
        let mut group_suit = [None::<u8>; HAND_SIZE];
        self.assign(0, cards, &mut used, &mut group_suit)
    }

    fn assign(
        &self,
        slot: usize,
        cards: &[crate::deck::Card; HAND_SIZE],
        used: &mut [bool; HAND_SIZE],
        group_suit: &mut [Option<u8>; HAND_SIZE],
    ) -> bool {
        if slot == self.atoms.len() {
            return true;
        }
        let atom = self.atoms[slot];
        for (i, card) in cards.iter().enumerate() {
            if used[i] || !atom.denoms.contains(card.denom()) {
                continue;
            }
            let mut set_group = None;
            if let Some(g) = atom.group {
                match group_suit[g as usize] {
                    Some(s) if s != card.suit() => continue,
                    Some(_) => {}
                    None => {
                        // Distinct groups must use distinct suits.
                        if group_suit[..self.groups as usize]
                            .iter()
                            .any(|gs| *gs == Some(card.suit()))
                        {
                            continue;
                        }
                        group_suit[g as usize] = Some(card.suit());
                        set_group = Some(g as usize);
                    }
                }
            }
            used[i] = true;
            if self.assign(slot + 1, cards, used, group_suit) {
                return true;
            }
            used[i] = false;
            if let Some(g) = set_group {
                group_suit[g] = None;
            }
        }
        false
    }
}

fn parse_denom_spec(
    chars: &mut std::iter::Peekable<std::str::Chars<'_>>,
    text: &str,
) -> Result<DenomSet, PatternError> {
    let mut set = DenomSet::empty();
    match chars.next() {
        Some('(') => loop {
            let lo = match chars.next() {
                Some(')') => break,
                Some(',') => continue,
                Some(c) => parse_denom_char(c)?,
                None => return Err(PatternError::Unterminated(text.to_string())),
            };
            if chars.peek() == Some(&'-') {
                chars.next();
                let hi = parse_denom_char(
                    chars
                        .next()
                        .ok_or_else(|| PatternError::Unterminated(text.to_string()))?,
                )?;
                set.insert_range(lo, hi);
            } else {
                set.insert(lo);
            }
        },
        Some(c) => set.insert(parse_denom_char(c)?),
        None => return Err(PatternError::Unterminated(text.to_string())),
    }
    if set.is_empty() {
        return Err(PatternError::EmptyElement(text.to_string()));
    }
    Ok(set)
}

fn render_denom_set(set: DenomSet, out: &mut String) {
    if set.len() == 1 {
        out.push(denom_char(set.iter().next().unwrap()));
        return;
    }
    out.push('(');
    let denoms: Vec<u8> = set.iter().collect();
    let mut i = 0;
    let mut first = true;
    while i < denoms.len() {
        let mut j = i;
        while j + 1 < denoms.len() && denoms[j + 1] == denoms[j] + 1 {
            j += 1;
        }
        if !first {
            out.push(',');
        }
        first = false;
        if j > i {
            out.push(denom_char(denoms[i]));
            out.push('-');
            out.push(denom_char(denoms[j]));
        } else {
            out.push(denom_char(denoms[i]));
        }
        i = j + 1;
    }
    out.push(')');
}

impl fmt::Display for HandPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let mut open: Option<u8> = None;
        for atom in &self.atoms {
            if open != atom.group {
                if open.is_some() {
                    out.push('}');
                }
                if atom.group.is_some() {
                    out.push('{');
                }
                open = atom.group;
            }
            render_denom_set(atom.denoms, &mut out);
        }
        if open.is_some() {
            out.push('}');
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hand(s: &str) -> Hand {
        Hand::parse(s).unwrap()
    }

    #[test]
    fn parse_and_round_trip() {
        for text in [
            "{(2-9)T(J-K)A}(T-K)",
            "{(2-7)JQ}KA",
            "9{JQ}KA",
            "{TJQKA}",
            "(2-9)(2-9)JQK",
        ] {
            let p = HandPattern::parse(text).unwrap();
            assert_eq!(p.to_string(), text);
            assert_eq!(HandPattern::parse(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn parse_rejects_wrong_count() {
        assert!(matches!(
            HandPattern::parse("{TJQK}"),
            Err(PatternError::WrongCardCount(_))
        ));
        assert!(matches!(
            HandPattern::parse("{TJQKA}A"),
            Err(PatternError::WrongCardCount(_))
        ));
    }

    #[test]
    fn four_flush_gate() {
        let p = HandPattern::parse("{(2-9)T(J-K)A}(T-K)").unwrap();
        // Suited x-T-Q-A with an offsuit jack.
        assert!(p.matches(&hand("5c Tc Qc Ac Jh")));
        // Two tens: suited x-T-J-A plus an offsuit ten.
        assert!(p.matches(&hand("3d Td Jd Ad Ts")));
        // Odd card is an ace: not in (T-K).
        assert!(!p.matches(&hand("5c Tc Qc Ac Ah")));
        // No ten in the flush.
        assert!(!p.matches(&hand("5c 8c Qc Ac Jh")));
        // Flush cards not all one suit.
        assert!(!p.matches(&hand("5c Tc Qd Ac Jh")));
    }

    #[test]
    fn jqka_gates() {
        let low = HandPattern::parse("{(2-7)JQ}KA").unwrap();
        assert!(low.matches(&hand("4c Jc Qc Kd Ah")));
        // Suited K-A still matches: only braced cards are constrained.
        assert!(low.matches(&hand("4c Jc Qc Kd Ad")));
        // x = 8 is outside the range.
        assert!(!low.matches(&hand("8c Jc Qc Kd Ah")));
        // x offsuit from J-Q does not match.
        assert!(!low.matches(&hand("4d Jc Qc Kd Ah")));

        let nine = HandPattern::parse("9{JQ}KA").unwrap();
        assert!(nine.matches(&hand("9d Jc Qc Kd Ah")));
        assert!(nine.matches(&hand("9d Jc Qc Kd Ad")));
        assert!(!nine.matches(&hand("8d Jc Qc Kd Ah")));
    }

    #[test]
    fn distinct_groups_take_distinct_suits() {
        let p = HandPattern::parse("{89Q}{J}{K}").unwrap();
        assert!(p.matches(&hand("8c 9c Qc Jd Kh")));
        // J sharing the group suit violates the grouping.
        assert!(!p.matches(&hand("8c 9c Qc Jc Kh")));
    }
}
