#[path = "../examples/closed_forms.rs"]
mod closed_forms;
#[path = "../examples/exponential_families.rs"]
mod exponential_families;
#[path = "../examples/goncarov_polynomials.rs"]
mod goncarov_polynomials;
#[path = "../examples/json_io.rs"]
mod json_io;
#[path = "../examples/lattice_enumerators.rs"]
mod lattice_enumerators;
#[path = "../examples/operator_calculus.rs"]
mod operator_calculus;
#[path = "../examples/parking_functions.rs"]
mod parking_functions;

#[test]
fn lattice_enumerators_runs() {
    let out = lattice_enumerators::run_example();
    assert!(out.contains("a_2 = x^2 + w_2*x"));
    assert!(out.contains("|Pi_5| = 52"));
    assert!(out.contains("binomial type: true"));
}

#[test]
fn operator_calculus_runs() {
    let out = operator_calculus::run_example();
    assert!(out.contains("p_3 = x^3 - 3*x^2 + 2*x"));
    assert!(!out.contains("false"), "{out}");
}

#[test]
fn goncarov_polynomials_runs() {
    let out = goncarov_polynomials::run_example();
    assert!(out.contains("t_1(x; Z) = x - z_0"));
    assert!(!out.contains("false"), "{out}");
}

#[test]
fn parking_functions_runs() {
    let out = parking_functions::run_example();
    assert!(out.contains("length 4: 125"));
    assert!(out.contains("(2,2,2) parks under (1,2,3): false"));
    assert!(out.contains("equals t_3(0; w, -Z): true"));
}

#[test]
fn exponential_families_runs() {
    let out = exponential_families::run_example();
    assert!(out.contains("set partition constants: 1, 1, 4, 29, 311"));
    assert!(out.contains("hand parking count for n = 3: 29"));
    assert!(out.contains("decomposition at x = 7: true"));
}

#[test]
fn closed_forms_runs() {
    let out = closed_forms::run_example();
    assert!(!out.contains("false"), "{out}");
    assert!(out.contains("k = 1: 1, 2, 5, 14, 42"));
    assert!(out.contains("k = 2: 1, 3, 12, 55, 273"));
}

#[test]
fn json_io_runs() {
    let out = json_io::run_example();
    assert!(!out.contains("false"), "{out}");
}
