//! Golden-value reproduction of the published reference tables: Bernoulli
//! numbers, the signed sums c(m, p), and the coefficient rows b(i, j, k)
//! for j <= 4, i <= 6.

use fano_chern::coefficients::b_row;
use fano_chern::combinatorics::{bernoulli, c_coeff};
use fano_chern::Rational;
use num_bigint::BigInt;

fn parse_row(row: &[&str]) -> Vec<Rational> {
    row.iter().map(|s| s.parse().unwrap()).collect()
}

fn assert_rows(j: u32, golden: &[&[&str]]) {
    for (offset, row) in golden.iter().enumerate() {
        let i = offset as u32 + 1;
        assert_eq!(b_row(i, j).unwrap(), parse_row(row), "row i={i}, j={j}");
    }
}

#[test]
fn bernoulli_reference_values() {
    let golden = [
        "1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66",
    ];
    for (m, value) in golden.iter().enumerate() {
        assert_eq!(
            bernoulli(m as u32),
            value.parse::<Rational>().unwrap(),
            "B_{m}"
        );
    }
}

#[test]
fn c_coeff_reference_values() {
    let golden: [[i64; 6]; 6] = [
        [-1, 0, 0, 0, 0, 0],
        [-1, 2, 0, 0, 0, 0],
        [-1, 6, -6, 0, 0, 0],
        [-1, 14, -36, 24, 0, 0],
        [-1, 30, -150, 240, -120, 0],
        [-1, 62, -540, 1560, -1800, 720],
    ];
    for (row, values) in golden.iter().enumerate() {
        let m = row as u32 + 1;
        for (col, value) in values.iter().enumerate() {
            let p = col as u32 + 1;
            assert_eq!(c_coeff(m, p), BigInt::from(*value), "c({m}, {p})");
        }
    }
}

#[test]
fn coefficient_rows_degree_one() {
    assert_rows(
        1,
        &[
            &["-1", "1/2", "1"],
            &["-2", "1/3", "1", "1"],
            &["-3", "1/4", "11/12", "3/2", "1"],
            &["-4", "1/5", "5/6", "7/4", "2", "1"],
            &["-5", "1/6", "137/180", "15/8", "17/6", "5/2", "1"],
            &["-6", "1/7", "7/10", "29/15", "7/2", "25/6", "3", "1"],
        ],
    );
}

#[test]
fn coefficient_rows_degree_two() {
    assert_rows(
        2,
        &[
            &["-1/2", "1/12", "1/2", "1"],
            &["-1", "1/12", "5/12", "1", "1"],
            &["-3/2", "3/40", "3/8", "1", "3/2", "1"],
            &["-2", "1/15", "31/90", "1", "11/6", "2", "1"],
            &["-5/2", "5/84", "23/72", "239/240", "25/12", "35/12", "5/2", "1"],
            &["-3", "3/56", "167/560", "79/80", "547/240", "15/4", "17/4", "3", "1"],
        ],
    );
}

#[test]
fn coefficient_rows_degree_three() {
    assert_rows(
        3,
        &[
            &["-1/6", "0", "1/12", "1/2", "1"],
            &["-1/3", "1/180", "1/12", "5/12", "1", "1"],
            &["-1/2", "1/120", "29/360", "3/8", "1", "3/2", "1"],
            &["-2/3", "1/105", "7/90", "7/20", "1", "11/6", "2", "1"],
            &["-5/6", "5/504", "227/3024", "1/3", "721/720", "25/12", "35/12", "5/2", "1"],
            &[
                "-1", "5/504", "73/1008", "607/1890", "241/240", "329/144", "15/4", "17/4", "3",
                "1",
            ],
        ],
    );
}

#[test]
fn coefficient_rows_degree_four() {
    assert_rows(
        4,
        &[
            &["-1/24", "-1/720", "0", "1/12", "1/2", "1"],
            &["-1/12", "-1/720", "1/240", "1/12", "5/12", "1", "1"],
            &["-1/8", "-1/1120", "1/160", "19/240", "3/8", "1", "3/2", "1"],
            &["-1/6", "-1/2520", "113/15120", "3/40", "251/720", "1", "11/6", "2", "1"],
            &[
                "-5/24", "0", "25/3024", "865/12096", "95/288", "1", "25/12", "35/12", "5/2", "1",
            ],
            &[
                "-1/4",
                "1/3360",
                "887/100800",
                "277/4032",
                "19097/60480",
                "1",
                "137/60",
                "15/4",
                "17/4",
                "3",
                "1",
            ],
        ],
    );
}

#[test]
fn spot_anchors() {
    use fano_chern::coefficients::b_coeff;
    let anchor = |i, j, k, s: &str| {
        assert_eq!(
            b_coeff(i, j, k).unwrap(),
            s.parse::<Rational>().unwrap(),
            "b({i},{j},{k})"
        );
    };
    anchor(3, 1, 2, "11/12");
    anchor(5, 2, 3, "239/240");
    anchor(6, 3, 3, "607/1890");
    anchor(6, 4, 4, "19097/60480");
    anchor(5, 1, 4, "17/6");
    anchor(2, 3, 1, "1/180");
    anchor(1, 4, 1, "-1/720");
}
