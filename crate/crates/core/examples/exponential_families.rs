//! Hand enumerators of exponential families and their parking analogue.

use std::collections::BTreeMap;
use std::fmt::Write;

use goncarov::family::{
    builtin_family, family_goncarov, hand_enumerator, hand_parking_enumerator, type_enumerator, unit_y,
    verify_family_decomposition, DeckSpec,
};
use goncarov::parking::{LabelRule, ParkingVector};
use goncarov::{Grid, MultiPoly, VarId};

pub fn run_example() -> String {
    let mut out = String::new();
    let cycles = builtin_family("cycles").unwrap();
    for n in 1..=4 {
        writeln!(out, "cycles h_{n} = {}", type_enumerator(&cycles, n).unwrap().pretty()).unwrap();
    }
    writeln!(out, "cycles at y = 1, h_4 = {}", hand_enumerator(&cycles, 4).unwrap().pretty()).unwrap();

    // Set-partition family on z_i = 1 + i: the constant terms 1, 1, 4, 29, 311.
    let sets = builtin_family("set_partitions").unwrap();
    let grid = Grid::from_ints(&[1, 2, 3, 4]).negate();
    let t = family_goncarov(&sets, &grid, 4).unwrap();
    let values: Vec<String> =
        t.entries().iter().map(|p| p.substitute(&unit_y(4)).subs(VarId::X, &MultiPoly::zero()).pretty()).collect();
    writeln!(out, "set partition constants: {}", values.join(", ")).unwrap();

    let z = ParkingVector::new(vec![1, 2, 3]).unwrap();
    let pf = hand_parking_enumerator(&sets, &z).unwrap().substitute(&unit_y(3));
    writeln!(out, "hand parking count for n = 3: {}", pf.pretty()).unwrap();

    // A custom deck: one structure on each even number of points.
    let table: BTreeMap<usize, _> = [(2, 1.into()), (4, 1.into()), (6, 1.into())].into_iter().collect();
    let evens = DeckSpec::from_table("evens", table).unwrap();
    writeln!(out, "evens h_4 = {}", type_enumerator(&evens, 4).unwrap().pretty()).unwrap();
    let holds =
        verify_family_decomposition(&evens, 4, &ParkingVector::new(vec![1, 2, 4, 5]).unwrap(), 7, LabelRule::Any)
            .unwrap()
            .holds();
    writeln!(out, "evens decomposition at x = 7: {holds}").unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
