//! Zeta and Möbius weight enumerators over the partition lattice.

use std::fmt::Write;

use goncarov::lattice::{mobius_enumerator, partitions_of, zeta_enumerator, zeta_type};
use goncarov::operator::{binomial_type_check, PolySequence};
use goncarov::SetPartition;

pub fn run_example() -> String {
    let mut out = String::new();
    for n in 0..=4 {
        let a = zeta_enumerator(n).unwrap();
        let b = mobius_enumerator(n).unwrap();
        writeln!(out, "a_{n} = {}", a.pretty()).unwrap();
        writeln!(out, "b_{n} = {}", b.pretty()).unwrap();
    }

    let bottom = SetPartition::finest(3);
    let top = SetPartition::coarsest(3);
    writeln!(out, "zeta(finest, coarsest) on [3] = {}", zeta_type(&bottom, &top).unwrap().pretty()).unwrap();
    writeln!(out, "|Pi_5| = {}", partitions_of(5).unwrap().len()).unwrap();

    let a = PolySequence::try_from_fn(5, zeta_enumerator).unwrap();
    writeln!(out, "a_n of binomial type: {}", binomial_type_check(&a, 5).unwrap().holds()).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
