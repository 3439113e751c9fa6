use num_bigint::BigInt;
use pavstat::export::{Table, TableKind};
use pavstat::Config;
use pavstat_core::bijections::count_symmetric_dyck;
use pavstat_core::statpoly::StatTables;

fn config() -> Config {
    Config::resolve(None, None, false).unwrap()
}

#[test]
fn s_nk_table_matches_dyck_paths() {
    let t = Table::build(TableKind::SNk, 12, &config()).unwrap();
    assert_eq!(t.rows.len(), 12 * 13 / 2);
    for row in &t.rows {
        let (n, k) = (
            row[0].to_string().parse().unwrap(),
            row[1].to_string().parse().unwrap(),
        );
        assert_eq!(row[2], count_symmetric_dyck(n, k), "n={n} k={k}");
    }
}

#[test]
fn ank_rows_sum_to_catalan() {
    let t = Table::build(TableKind::Ank, 8, &config()).unwrap();
    let catalan = Table::build(TableKind::Catalan, 8, &config()).unwrap();
    for n in 1..=8u32 {
        let sum: BigInt = t
            .rows
            .iter()
            .filter(|r| r[0] == BigInt::from(n))
            .map(|r| r[2].clone())
            .sum();
        assert_eq!(sum, catalan.rows[n as usize][1]);
    }
}

#[test]
fn ank_values_are_descent_counts() {
    let t = Table::build(TableKind::Ank, 6, &config()).unwrap();
    let tables = StatTables::compute(6);
    let row6: Vec<BigInt> = t
        .rows
        .iter()
        .filter(|r| r[0] == BigInt::from(6))
        .map(|r| r[2].clone())
        .collect();
    let direct: Vec<BigInt> = (0..6).map(|k| tables.a_poly(k).coeff_sum()).collect();
    assert_eq!(row6, direct);
    // two adjacent descents would form a 321, so des ≤ 3 at length 6
    assert!(row6[3] > BigInt::from(0));
    assert_eq!(row6[4], BigInt::from(0));
    assert_eq!(row6[5], BigInt::from(0));
}
