//! Vector parking functions and the weighted parking enumerator.

use std::fmt::Write;

use goncarov::goncarov::goncarov_constant_recurrence;
use goncarov::lattice::zeta_enumerator;
use goncarov::operator::PolySequence;
use goncarov::parking::{count_parking, is_u_parking, verify_decomposition, weighted_pf_enumerator, ParkingVector};

pub fn run_example() -> String {
    let mut out = String::new();
    let u = ParkingVector::new(vec![1, 2, 3]).unwrap();
    writeln!(out, "(2,1,1) parks under (1,2,3): {}", is_u_parking(&[2, 1, 1], &u).unwrap()).unwrap();
    writeln!(out, "(2,2,2) parks under (1,2,3): {}", is_u_parking(&[2, 2, 2], &u).unwrap()).unwrap();
    for n in 1..=4 {
        let u = ParkingVector::new((1..=n as u64).collect()).unwrap();
        writeln!(out, "classical parking functions of length {n}: {}", count_parking(n, &u).unwrap()).unwrap();
    }

    // Weighted count over the partition lattice against the Gončarov constant term.
    let z = ParkingVector::new(vec![1, 3, 4]).unwrap();
    let pf = weighted_pf_enumerator(3, &z).unwrap();
    let a = PolySequence::try_from_fn(3, zeta_enumerator).unwrap();
    let t = goncarov_constant_recurrence(&a, &z.to_grid(), 3).unwrap();
    writeln!(out, "weighted PF_3 on (1,3,4) = {}", pf.pretty()).unwrap();
    writeln!(out, "equals t_3(0; w, -Z): {}", pf == t).unwrap();
    writeln!(out, "decomposition at x = 6: {}", verify_decomposition(3, &z, 6).unwrap().holds()).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
