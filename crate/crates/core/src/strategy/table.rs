//! Hand-rank chart rows, the `rank | kind | params | qualifiers` text
//! format, and the built-in charts.

use super::pattern::{HandPattern, PatternError};
use crate::deck::{denom_char, ACE, JACK, KING, QUEEN, TEN};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("line {0}: expected `rank | kind | params | qualifiers`")]
    BadLine(usize),
    #[error("line {0}: unknown hold kind {1:?}")]
    UnknownKind(usize, String),
    #[error("line {0}: bad parameter {1:?}")]
    BadParam(usize, String),
    #[error("line {0}: {1}")]
    Pattern(usize, PatternError),
    #[error("line {0}: rank {1} out of order")]
    RankOrder(usize, u32),
    #[error("chart must end with a `none` row")]
    MissingNoneRow,
    #[error("no such built-in chart {0:?}")]
    UnknownBuiltin(String),
}

/// The kind of held subset a chart row describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoldKind {
    /// Pat hands, held in full.
    Rf5,
    Sf5,
    Quads5,
    Fh5,
    F5,
    S5,
    /// Partial holds named by what they can become (RF/SF/F/S) or by what
    /// they already are (trips, two pairs, pairs, single high card).
    Rf4,
    Rf3,
    Rf2,
    Rf1,
    Sf4,
    Sf3,
    F4,
    S4,
    S3,
    S2,
    Trips3,
    TwoPair4,
    HighPair2,
    LowPair2,
    /// Draw five new cards.
    None0,
}

impl HoldKind {
    pub fn token(self) -> &'static str {
        use HoldKind::*;
        match self {
            Rf5 => "5-RF",
            Sf5 => "5-SF",
            Quads5 => "5-4K",
            Fh5 => "5-FH",
            F5 => "5-F",
            S5 => "5-S",
            Rf4 => "4-RF",
            Rf3 => "3-RF",
            Rf2 => "2-RF",
            Rf1 => "1-RF",
            Sf4 => "4-SF",
            Sf3 => "3-SF",
            F4 => "4-F",
            S4 => "4-S",
            S3 => "3-S",
            S2 => "2-S",
            Trips3 => "3-3K",
            TwoPair4 => "4-2P",
            HighPair2 => "2-HP",
            LowPair2 => "2-LP",
            None0 => "none",
        }
    }

    pub fn from_token(token: &str) -> Option<HoldKind> {
        use HoldKind::*;
        Some(match token {
            "5-RF" => Rf5,
            "5-SF" => Sf5,
            "5-4K" => Quads5,
            "5-FH" => Fh5,
            "5-F" => F5,
            "5-S" => S5,
            "4-RF" => Rf4,
            "3-RF" => Rf3,
            "2-RF" => Rf2,
            "1-RF" => Rf1,
            "4-SF" => Sf4,
            "3-SF" => Sf3,
            "4-F" => F4,
            "4-S" => S4,
            "3-S" => S3,
            "2-S" => S2,
            "3-3K" => Trips3,
            "4-2P" => TwoPair4,
            "2-HP" => HighPair2,
            "2-LP" => LowPair2,
            "none" => None0,
            _ => return None,
        })
    }

    /// Number of cards held by a row of this kind.
    pub fn held_count(self) -> usize {
        use HoldKind::*;
        match self {
            Rf5 | Sf5 | Quads5 | Fh5 | F5 | S5 => 5,
            Rf4 | Sf4 | F4 | S4 | TwoPair4 => 4,
            Rf3 | Sf3 | S3 | Trips3 => 3,
            Rf2 | S2 | HighPair2 | LowPair2 => 2,
            Rf1 => 1,
            None0 => 0,
        }
    }
}

/// One row of a hand-rank chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankRow {
    pub rank: u32,
    pub kind: HoldKind,
    /// Exact straight count of the held cards.
    pub s: Option<u32>,
    /// Allowed high-card counts of the held cards.
    pub h: Option<Vec<u32>>,
    /// Constraint on s + h: (value, at_least).
    pub sh: Option<(u32, bool)>,
    /// Allowed held denomination sets (each a sorted list).
    pub denoms: Option<Vec<Vec<u8>>>,
    /// Whole-hand shape gates; the row applies only if one matches.
    pub hand_gate: Option<Vec<HandPattern>>,
    /// Row applies only if the hand has this suited pair plus a third card
    /// of the same suit (a flush penalty against holding the pair).
    pub fp_pair: Option<(u8, u8)>,
    /// Row additionally requires a 9 somewhere in the hand.
    pub nine_penalty: bool,
    /// Row applies only when the hold incurs no straight penalty.
    pub no_sp: bool,
}

impl RankRow {
    fn plain(rank: u32, kind: HoldKind) -> RankRow {
        RankRow {
            rank,
            kind,
            s: None,
            h: None,
            sh: None,
            denoms: None,
            hand_gate: None,
            fp_pair: None,
            nine_penalty: false,
            no_sp: false,
        }
    }
}

/// An ordered hand-rank chart; the first row whose description applies
/// dictates the play, and the last row is always `none`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    pub name: String,
    pub rows: Vec<RankRow>,
}

fn parse_denom_token(token: &str, lineno: usize) -> Result<Vec<u8>, TableError> {
    let mut out = Vec::new();
    for c in token.chars() {
        let d = match c {
            'T' => TEN,
            'J' => JACK,
            'Q' => QUEEN,
            'K' => KING,
            'A' => ACE,
            '2'..='9' => c as u8 - b'0',
            _ => return Err(TableError::BadParam(lineno, token.to_string())),
        };
        out.push(d);
    }
    out.sort_unstable();
    Ok(out)
}

impl RankTable {
    pub fn parse(text: &str) -> Result<RankTable, TableError> {
        let mut name = String::new();
        let mut rows: Vec<RankRow> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if name.is_empty() {
                    name = comment.trim().to_string();
                }
                continue;
            }
            // The qualifiers field may itself contain `|` (pattern
            // alternatives), so only the first three separators split.
            let fields: Vec<&str> = line.splitn(4, '|').map(str::trim).collect();
            if fields.len() != 4 {
                return Err(TableError::BadLine(lineno));
            }
            let rank: u32 = fields[0]
                .parse()
                .map_err(|_| TableError::BadLine(lineno))?;
            if let Some(last) = rows.last() {
                if rank != last.rank + 1 {
                    return Err(TableError::RankOrder(lineno, rank));
                }
            }
            let kind = HoldKind::from_token(fields[1])
                .ok_or_else(|| TableError::UnknownKind(lineno, fields[1].to_string()))?;
            let mut row = RankRow::plain(rank, kind);
            for token in fields[2].split_whitespace().chain(fields[3].split_whitespace()) {
                if let Some(v) = token.strip_prefix("s+h>=") {
                    let n = v.parse().map_err(|_| TableError::BadParam(lineno, token.into()))?;
                    row.sh = Some((n, true));
                } else if let Some(v) = token.strip_prefix("s+h=") {
                    let n = v.parse().map_err(|_| TableError::BadParam(lineno, token.into()))?;
                    row.sh = Some((n, false));
                } else if let Some(v) = token.strip_prefix("s=") {
                    row.s = Some(v.parse().map_err(|_| TableError::BadParam(lineno, token.into()))?);
                } else if let Some(v) = token.strip_prefix("h=") {
                    let hs: Result<Vec<u32>, _> = v.split(',').map(str::parse).collect();
                    row.h = Some(hs.map_err(|_| TableError::BadParam(lineno, token.into()))?);
                } else if let Some(v) = token.strip_prefix("denoms=") {
                    let sets: Result<Vec<Vec<u8>>, _> =
                        v.split(',').map(|t| parse_denom_token(t, lineno)).collect();
                    row.denoms = Some(sets?);
                } else if let Some(v) = token.strip_prefix("hand=") {
                    let gates: Result<Vec<HandPattern>, _> = v
                        .split('|')
                        .map(|t| HandPattern::parse(t).map_err(|e| TableError::Pattern(lineno, e)))
                        .collect();
                    row.hand_gate = Some(gates?);
                } else if let Some(v) = token.strip_prefix("fp=") {
                    let pair = parse_denom_token(v, lineno)?;
                    if pair.len() != 2 {
                        return Err(TableError::BadParam(lineno, token.to_string()));
                    }
                    row.fp_pair = Some((pair[0], pair[1]));
                } else if token == "9sp" {
                    row.nine_penalty = true;
                } else if token == "nosp" {
                    row.no_sp = true;
                } else {
                    return Err(TableError::BadParam(lineno, token.to_string()));
                }
            }
            rows.push(row);
        }
        if rows.last().map(|r| r.kind) != Some(HoldKind::None0) {
            return Err(TableError::MissingNoneRow);
        }
        Ok(RankTable { name, rows })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# {}", self.name).unwrap();
        for row in &self.rows {
            let mut params = Vec::new();
            if let Some(s) = row.s {
                params.push(format!("s={s}"));
            }
            if let Some(h) = &row.h {
                let list: Vec<String> = h.iter().map(u32::to_string).collect();
                params.push(format!("h={}", list.join(",")));
            }
            if let Some((n, at_least)) = row.sh {
                params.push(format!("s+h{}{n}", if at_least { ">=" } else { "=" }));
            }
            if let Some(sets) = &row.denoms {
                let list: Vec<String> = sets
                    .iter()
                    .map(|set| set.iter().map(|&d| denom_char(d)).collect())
                    .collect();
                params.push(format!("denoms={}", list.join(",")));
            }
            let mut quals = Vec::new();
            if let Some(gates) = &row.hand_gate {
                let list: Vec<String> = gates.iter().map(HandPattern::to_string).collect();
                quals.push(format!("hand={}", list.join("|")));
            }
            if let Some((a, b)) = row.fp_pair {
                quals.push(format!("fp={}{}", denom_char(a), denom_char(b)));
            }
            if row.nine_penalty {
                quals.push("9sp".to_string());
            }
            if row.no_sp {
                quals.push("nosp".to_string());
            }
            writeln!(
                out,
                "{} | {} | {} | {}",
                row.rank,
                row.kind.token(),
                params.join(" "),
                quals.join(" ")
            )
            .unwrap();
        }
        out
    }

    /// Built-in charts: `chart-optimal` (the 38-row chart that reproduces
    /// optimal full-pay Jacks or Better play) and `chart-preliminary` (the
    /// 36-row smallest-CE-number ordering, which does not).
    pub fn builtin(name: &str) -> Result<RankTable, TableError> {
        let text = match name {
            "chart-optimal" | "table6" => OPTIMAL_CHART,
            "chart-preliminary" | "table5" => PRELIMINARY_CHART,
            _ => return Err(TableError::UnknownBuiltin(name.to_string())),
        };
        RankTable::parse(text)
    }
}

pub const BUILTIN_CHART_NAMES: [&str; 2] = ["chart-optimal", "chart-preliminary"];

pub const OPTIMAL_CHART: &str = include_str!("../../data/chart-optimal.txt");
pub const PRELIMINARY_CHART: &str = include_str!("../../data/chart-preliminary.txt");

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_parse_and_round_trip() {
        for name in BUILTIN_CHART_NAMES {
            let t = RankTable::builtin(name).unwrap();
            let reparsed = RankTable::parse(&t.serialize()).unwrap();
            assert_eq!(reparsed, t);
        }
        assert_eq!(
            RankTable::builtin("chart-optimal").unwrap().rows.len(),
            38
        );
        assert_eq!(
            RankTable::builtin("chart-preliminary").unwrap().rows.len(),
            36
        );
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(
            RankTable::parse("1 | 5-RF | |\n"),
            Err(TableError::MissingNoneRow)
        );
        assert!(matches!(
            RankTable::parse("1 | 9-XX | |\n2 | none | |\n"),
            Err(TableError::UnknownKind(1, _))
        ));
        assert!(matches!(
            RankTable::parse("1 | 5-RF | q=3 |\n2 | none | |\n"),
            Err(TableError::BadParam(1, _))
        ));
        assert!(matches!(
            RankTable::parse("1 | 5-RF | |\n3 | none | |\n"),
            Err(TableError::RankOrder(2, 3))
        ));
    }
}
