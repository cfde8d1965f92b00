//! Delta operators, their basic sequences and the duality between them.

use std::fmt::Write;

use goncarov::operator::{basic_property_check, conjugate_sequence, indicator_from_sequence, PolySequence};
use goncarov::{FactorialKind, TruncatedSeries};

pub fn run_example() -> String {
    let mut out = String::new();
    let order = 6;

    // Forward difference: f(t) = e^t - 1, basic sequence the falling factorials.
    let f = TruncatedSeries::exp_minus_one(order);
    let g = f.reversion().unwrap();
    let p = conjugate_sequence(&g, 4).unwrap();
    for n in 0..=4 {
        writeln!(out, "p_{n} = {}", p[n].pretty()).unwrap();
    }
    let falling = PolySequence::factorials(FactorialKind::Falling, 4);
    writeln!(out, "matches falling factorials: {}", p == falling).unwrap();
    writeln!(out, "basic sequence of f(D): {}", basic_property_check(&f, &p, 4).unwrap().holds()).unwrap();

    let back = indicator_from_sequence(&p);
    writeln!(out, "log(1 + t) recovered: {}", back.truncate(4) == g.truncate(4)).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
