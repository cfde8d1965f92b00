//! Closed forms: Abel, the cycles family on arithmetic grids, Fuss–Catalan
//! numbers and lattice paths.

use std::fmt::Write;

use goncarov::family::{closed_form_check, cycles_constant_over_factorial, lattice_path_count, ClosedForm};

pub fn run_example() -> String {
    let mut out = String::new();
    for check in ClosedForm::ALL {
        let ok = (1..=5).all(|n| closed_form_check(check, n, 2).unwrap());
        writeln!(out, "{:<13} n <= 5: {}", check.name(), ok).unwrap();
    }
    for k in 1..=3u64 {
        let counts: Vec<String> = (1..=5).map(|n| cycles_constant_over_factorial(n, k).unwrap().to_string()).collect();
        writeln!(out, "k = {k}: {}", counts.join(", ")).unwrap();
    }
    writeln!(out, "paths under (1, 3, 5, 7): {}", lattice_path_count(&[1, 3, 5, 7])).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
