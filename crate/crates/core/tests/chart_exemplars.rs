//! The optimal chart lists six scaled CE values twice: each is reachable
//! from two distinct rows. One constructed hand per (value, row) pair
//! checks that the expected row fires and attains the optimal CE.

use vpoker::deck::{builtin_paytable, Hand};
use vpoker::expect::{ce_fast, CompletionMemo, HoldMask};
use vpoker::strategy::{classify_with_row, RankTable};

#[test]
fn double_listed_values_reachable_from_both_rows() {
    let table = builtin_paytable("job-9-6").unwrap();
    let memo = CompletionMemo::build(&table);
    let chart = RankTable::builtin("chart-optimal").unwrap();

    // (hand, expected chart row, expected optimal scaled CE)
    let cases = [
        // Four-flush with T and A beats the three-card royal it contains.
        ("5c Tc Qc Ac Jh", 12, 9_791_100u64),
        ("2c 5c Jc Qc Kh", 14, 9_791_100),
        // JQKA beats suited JQ when the JQ hold is penalized.
        ("4c Jc Qc Kd Ah", 19, 4_569_180),
        ("4c Jd Qh Ks Ac", 21, 4_569_180),
        // Offsuit JK beats suited TJ under a flush penalty.
        ("2c Tc Jc 8d Kh", 28, 3_728_659),
        ("2c 8d Th Js Kc", 30, 3_728_659),
        ("2c 9d Tc Jc Kh", 28, 3_705_955),
        ("2c 9d Th Js Kc", 30, 3_705_955),
        // Offsuit QA beats suited TQ under a flush penalty.
        ("3c Tc Qc 7d Ah", 31, 3_637_843),
        ("4c 7d Th Qs Ac", 33, 3_637_843),
        // A bare king beats suited TK under flush and 9 straight penalties.
        ("2c Tc Kc 9d 5h", 34, 3_526_258),
        ("2d 3c Tc Ac 7h", 36, 3_526_258),
    ];

    for (hand_str, expected_row, expected_scaled) in cases {
        let hand = Hand::parse(hand_str).unwrap();
        let (mask, row) = classify_with_row(&hand, &chart);
        assert_eq!(
            row.rank, expected_row,
            "{hand_str}: fired row {} not {expected_row}",
            row.rank
        );
        let chart_ce = ce_fast(&hand, mask, &table, &memo).unwrap();
        let best = HoldMask::iter_all()
            .map(|m| ce_fast(&hand, m, &table, &memo).unwrap())
            .max()
            .unwrap();
        assert_eq!(chart_ce, best, "{hand_str}: chart hold is not optimal");
        assert_eq!(
            best, expected_scaled,
            "{hand_str}: optimal CE is not the expected value"
        );
    }
}
