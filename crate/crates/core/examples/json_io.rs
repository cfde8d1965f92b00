//! Round trips through the JSON polynomial format.

use std::fmt::Write;

use goncarov::expr::parse_poly;
use goncarov::json::{poly_from_json, poly_to_json, series_from_json, series_to_json};
use goncarov::lattice::zeta_enumerator;
use goncarov::operator::PolySequence;
use goncarov::TruncatedSeries;

pub fn run_example() -> String {
    let mut out = String::new();
    let a2 = zeta_enumerator(2).unwrap();
    let text = poly_to_json(&a2);
    writeln!(out, "{text}").unwrap();
    writeln!(out, "round trip: {}", poly_from_json(&text).unwrap() == a2).unwrap();

    let p = parse_poly("3/2*(x - z0)^2 + y3").unwrap();
    writeln!(out, "{}", poly_to_json(&p)).unwrap();

    let s = TruncatedSeries::exp_minus_one(3);
    let text = series_to_json(&s);
    writeln!(out, "round trip series: {}", series_from_json(&text).unwrap() == s).unwrap();

    let seq = PolySequence::try_from_fn(2, zeta_enumerator).unwrap();
    let text = serde_json::to_string(&seq).unwrap();
    writeln!(out, "sequence of {} entries: {}", seq.len(), serde_json::from_str::<PolySequence>(&text).unwrap() == seq)
        .unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
