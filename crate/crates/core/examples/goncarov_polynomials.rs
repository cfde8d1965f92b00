//! Gončarov polynomials on symbolic and numeric grids.

use std::fmt::Write;

use goncarov::goncarov::{
    goncarov_constant_ordered_partitions, goncarov_sequence, verify_biorthogonality, verify_reconstruction,
    verify_shift_invariance,
};
use goncarov::lattice::zeta_enumerator;
use goncarov::operator::{zeta_indicator, PolySequence};
use goncarov::{Grid, MultiPoly, VarId};

pub fn run_example() -> String {
    let mut out = String::new();
    let n = 3;
    let a = PolySequence::try_from_fn(n + 1, zeta_enumerator).unwrap();

    let grid = Grid::symbolic(n + 1);
    let t = goncarov_sequence(&a, &grid, n).unwrap();
    for (k, tk) in t.entries().iter().enumerate() {
        writeln!(out, "t_{k}(x; Z) = {}", tk.pretty()).unwrap();
    }

    // Constant terms on -Z by summing over ordered set partitions.
    let c = goncarov_constant_ordered_partitions(&a, &grid, 2).unwrap();
    let r = goncarov_sequence(&a, &grid.negate(), 2).unwrap()[2].subs(VarId::X, &MultiPoly::zero());
    writeln!(out, "t_2(0; -Z) = {}", c.pretty()).unwrap();
    writeln!(out, "ordered partitions agree with recurrence: {}", c == r).unwrap();

    let f = zeta_indicator(n + 1).reversion().unwrap();
    writeln!(out, "biorthogonal: {}", verify_biorthogonality(&f, &grid, &t, n).unwrap().holds()).unwrap();
    writeln!(out, "reconstruction: {}", verify_reconstruction(&a, &grid, &t, n).unwrap().holds()).unwrap();
    writeln!(out, "shift invariant: {}", verify_shift_invariance(&a, n).unwrap().holds()).unwrap();

    let numeric = goncarov_sequence(&a, &Grid::from_ints(&[1, 2, 4]), 2).unwrap();
    writeln!(out, "t_2(x; 1, 2, 4) = {}", numeric[2].pretty()).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
