//! Verification suites: every identity the library relies on, checked by
//! exact computation against an independent oracle.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::error::Error;
use crate::family::{
    builtin_family, closed_form_check, family_goncarov, hand_enumerator, hand_parking_enumerator,
    hand_parking_enumerator_with, injective_type_enumerator, injective_type_sequence, type_enumerator, type_sequence,
    unit_y, verify_family_decomposition, ClosedForm, DeckSpec, BUILTIN_FAMILIES,
};
use crate::goncarov::{
    goncarov_constant_ordered_partitions, goncarov_constant_recurrence, goncarov_sequence, ordered_partitions,
    verify_biorthogonality, verify_reconstruction, verify_shift_invariance, Grid,
};
use crate::lattice::{
    induced_class, mobius_enumerator, mobius_type, partitions_of, refines, zeta_enumerator, zeta_type, MobiusTable,
    SetPartition,
};
use crate::operator::{
    apply_operator, basic_property_check, binomial_type_check, conjugate_sequence, indicator_from_sequence,
    zeta_indicator, PolySequence, Verdict,
};
use crate::parking::{
    count_parking, is_u_parking, pf_partition, verify_decomposition, weighted_pf_enumerator, LabelRule, ParkingVector,
};
use crate::poly::{factorial_poly, rat, ratio, FactorialKind, MultiPoly, VarId};
use crate::series::TruncatedSeries;
use crate::tables;

/// Library operations the suites are expected to exercise.
pub const OPERATIONS: [&str; 37] = [
    "poly_arith",
    "poly_substitute",
    "poly_derivative",
    "factorial_poly",
    "series_mul",
    "series_exp",
    "series_compose",
    "series_reversion",
    "partitions_of",
    "refines",
    "induced_class",
    "zeta_type",
    "mobius_type",
    "zeta_enumerator",
    "mobius_enumerator",
    "conjugate_sequence",
    "indicator_from_sequence",
    "apply_operator",
    "binomial_type_check",
    "basic_property_check",
    "goncarov_sequence",
    "goncarov_constant_ordered_partitions",
    "ordered_partitions",
    "verify_shift_invariance",
    "verify_biorthogonality",
    "is_u_parking",
    "count_parking",
    "pf_partition",
    "weighted_pf_enumerator",
    "verify_decomposition",
    "builtin_family",
    "hand_enumerator",
    "type_enumerator",
    "injective_type_enumerator",
    "family_goncarov",
    "hand_parking_enumerator",
    "closed_form_checks",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Algebra,
    Lattice,
    Operator,
    Goncarov,
    Parking,
    Family,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] =
        [Suite::Algebra, Suite::Lattice, Suite::Operator, Suite::Goncarov, Suite::Parking, Suite::Family];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Lattice => "lattice",
            Suite::Operator => "operator",
            Suite::Goncarov => "goncarov",
            Suite::Parking => "parking",
            Suite::Family => "family",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite {s:?}")))
    }
}

/// Knobs shared by the suites; `None` picks each check's default.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub n_max: Option<usize>,
    pub grid: Option<Vec<u64>>,
    pub x: Option<u64>,
    pub quick: bool,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub covers: &'static [&'static str],
    /// `None` on success, else the first counterexample.
    pub failure: Option<String>,
    pub elapsed: Duration,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn covered(&self) -> BTreeSet<&'static str> {
        self.checks.iter().flat_map(|c| c.covers.iter().copied()).collect()
    }

    pub fn elapsed(&self) -> Duration {
        self.checks.iter().map(|c| c.elapsed).sum()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            write!(f, "{status}  {:<9} {} ({} ms)", c.suite, c.name, c.elapsed.as_millis())?;
            if let Some(why) = &c.failure {
                write!(f, "\n      {why}")?;
            }
            writeln!(f)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        write!(f, "{} checks, {} failed, {} ms", self.checks.len(), failed, self.elapsed().as_millis())
    }
}

/// A failed check's explanation.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(Failure(msg()))
    }
}

fn holds(v: Verdict, what: &str) -> Outcome {
    match v {
        Verdict::Holds => Ok(()),
        Verdict::Fails { n, residual } => Err(Failure(format!("{what} fails at n = {n}, residual {residual}"))),
    }
}

fn same(left: &MultiPoly, right: &MultiPoly, what: &str) -> Outcome {
    ensure(left == right, || format!("{what}: {left} != {right}"))
}

struct Runner {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Runner {
    fn check(&mut self, name: impl Into<String>, covers: &'static [&'static str], f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let failure = f().err().map(|Failure(m)| m);
        self.checks.push(Check { suite: self.suite, name: name.into(), covers, failure, elapsed: start.elapsed() });
    }
}

/// Runs one suite, or all of them in order.
pub fn run_suite(suite: Suite, params: &Params) -> Report {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut report = Report::default();
    for s in suites {
        let mut runner = Runner { suite: s.name(), checks: Vec::new() };
        match s {
            Suite::Algebra => algebra(&mut runner, params),
            Suite::Lattice => lattice(&mut runner, params),
            Suite::Operator => operator(&mut runner, params),
            Suite::Goncarov => goncarov(&mut runner, params),
            Suite::Parking => parking(&mut runner, params),
            Suite::Family => family(&mut runner, params),
            Suite::All => unreachable!(),
        }
        report.checks.extend(runner.checks);
    }
    report
}

fn x() -> MultiPoly {
    MultiPoly::x()
}
fn w(i: u32) -> MultiPoly {
    MultiPoly::var(VarId::w(i))
}
fn y(i: u32) -> MultiPoly {
    MultiPoly::var(VarId::y(i))
}
fn z(i: u32) -> MultiPoly {
    MultiPoly::var(VarId::z(i))
}

/// Bell numbers by the Bell triangle.
pub(crate) fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for v in &row {
            next.push(next.last().unwrap() + v);
        }
        row = next;
    }
    row[0]
}

/// Ordered Bell numbers by `F(n) = Σ_{k≥1} C(n, k) F(n - k)`.
pub(crate) fn fubini(n: usize) -> u64 {
    let mut f = vec![1u64];
    for m in 1..=n {
        let mut c = 1u64;
        let mut acc = 0;
        for k in 1..=m {
            c = c * (m - k + 1) as u64 / k as u64;
            acc += c * f[m - k];
        }
        f.push(acc);
    }
    f[n]
}

fn stirling2(n: usize, k: usize) -> u64 {
    let mut s = vec![vec![0u64; n + 1]; n + 1];
    s[0][0] = 1;
    for i in 1..=n {
        for j in 1..=i {
            s[i][j] = j as u64 * s[i - 1][j] + s[i - 1][j - 1];
        }
    }
    s[n][k]
}

fn all_w_one(n: usize) -> HashMap<VarId, MultiPoly> {
    (2..=n.max(2)).map(|i| (VarId::w(i as u32), MultiPoly::one())).collect()
}

fn sample_polys() -> Vec<MultiPoly> {
    vec![
        MultiPoly::zero(),
        MultiPoly::int(-3),
        x() + w(2),
        (x() - z(0)).pow(2) + MultiPoly::constant(ratio(1, 3)),
        w(2) * y(3) - x().pow(3).scale(&rat(2)),
        zeta_enumerator(3).unwrap(),
    ]
}

fn algebra(r: &mut Runner, p: &Params) {
    r.check("ring laws on a sample corpus", &["poly_arith"], || {
        let s = sample_polys();
        for a in &s {
            for b in &s {
                same(&(a + b), &(b + a), "a + b = b + a")?;
                same(&(a * b), &(b * a), "a b = b a")?;
                for c in &s {
                    same(&(&(a + b) + c), &(a + &(b + c)), "associativity of +")?;
                    same(&(&(a * b) * c), &(a * &(b * c)), "associativity of *")?;
                    same(&(a * &(b + c)), &(&(a * b) + &(a * c)), "distributivity")?;
                }
            }
            let copy = a.clone();
            same(&(a - &copy), &MultiPoly::zero(), "a - a = 0")?;
        }
        // the same polynomial built in two orders
        let one_way = &(&x().pow(2) + &w(2)) + &z(1);
        let other = &(&z(1) + &w(2)) + &x().pow(2);
        ensure(format!("{one_way:?}") == format!("{other:?}"), || "construction order leaks".into())
    });

    r.check("substitution is a ring homomorphism", &["poly_substitute"], || {
        let s = sample_polys();
        let mut assign = HashMap::new();
        assign.insert(VarId::X, &z(0) + &MultiPoly::int(2));
        assign.insert(VarId::w(2), x());
        for a in &s {
            for b in &s {
                same(
                    &(a * b).substitute(&assign),
                    &(a.substitute(&assign) * b.substitute(&assign)),
                    "substitution of a product",
                )?;
            }
        }
        Ok(())
    });

    r.check("derivative is linear and satisfies Leibniz", &["poly_derivative"], || {
        let s = sample_polys();
        for v in [VarId::X, VarId::w(2), VarId::z(0)] {
            for a in &s {
                for b in &s {
                    same(&(a + b).derivative(v), &(a.derivative(v) + b.derivative(v)), "linearity")?;
                    same(
                        &(a * b).derivative(v),
                        &(a.derivative(v) * b.clone() + a.clone() * b.derivative(v)),
                        "Leibniz rule",
                    )?;
                }
            }
        }
        Ok(())
    });

    let n = p.n_max.unwrap_or(6);
    r.check(format!("factorial polynomials, n <= {n}"), &["factorial_poly", "binomial_type_check"], || {
        for kind in [FactorialKind::Falling, FactorialKind::Rising] {
            holds(binomial_type_check(&PolySequence::factorials(kind, n), n)?, "binomial type")?;
        }
        let neg = -x();
        for k in 0..=n as u32 {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            same(
                &factorial_poly(FactorialKind::Rising, &x(), k),
                &factorial_poly(FactorialKind::Falling, &neg, k).scale(&rat(sign)),
                "rising(x) = (-1)^k falling(-x)",
            )?;
        }
        Ok(())
    });

    let order = if p.quick { 6 } else { 8 };
    r.check(format!("exp(a) exp(b) = exp(a + b) to order {order}"), &["series_exp", "series_mul"], || {
        let a = TruncatedSeries::from_egf(order, |k| if k == 0 { MultiPoly::zero() } else { w(k as u32 + 1) });
        let b = TruncatedSeries::from_egf(order, |k| match k {
            0 => MultiPoly::zero(),
            1 => x(),
            _ => MultiPoly::int(k as i64),
        });
        let lhs = a.exp()?.mul(&b.exp()?);
        let rhs = a.add(&b).exp()?;
        ensure(lhs == rhs, || format!("{lhs} != {rhs}"))
    });

    r.check("series reversion round trips to order 10", &["series_reversion", "series_compose"], || {
        let order = 10;
        let corpus = [
            TruncatedSeries::exp_minus_one(order),
            TruncatedSeries::log_one_plus(order),
            TruncatedSeries::new(
                vec![MultiPoly::zero(), MultiPoly::int(2), MultiPoly::int(-1), MultiPoly::int(5)],
                order,
            ),
            TruncatedSeries::from_egf(order, |k| if k == 0 { MultiPoly::zero() } else { MultiPoly::int(k as i64) }),
            zeta_indicator(if p.quick { 6 } else { 8 }),
        ];
        for f in &corpus {
            let g = f.reversion()?;
            let t = TruncatedSeries::t(f.order());
            ensure(f.compose(&g)? == t, || format!("f(g(t)) != t for f = {f}"))?;
            ensure(g.compose(f)? == t, || format!("g(f(t)) != t for f = {f}"))?;
        }
        Ok(())
    });
}

fn lattice(r: &mut Runner, p: &Params) {
    let n_max = p.n_max.unwrap_or(5);
    let bell_max = if p.quick { 7 } else { 8 };
    r.check(format!("|Π_n| = Bell(n), n <= {bell_max}"), &["partitions_of"], || {
        for n in 1..=bell_max {
            let count = partitions_of(n)?.len() as u64;
            ensure(count == bell(n), || format!("|Π_{n}| = {count}, Bell = {}", bell(n)))?;
        }
        Ok(())
    });

    r.check(
        format!("zeta-type weight counts blocks inside blocks, n <= {}", n_max.min(5)),
        &["refines", "induced_class", "zeta_type"],
        || {
            for n in 1..=n_max.min(5) {
                let all = partitions_of(n)?;
                for a in &all {
                    for b in &all {
                        let inside = a
                            .blocks()
                            .iter()
                            .all(|blk| b.blocks().iter().any(|outer| blk.iter().all(|e| outer.contains(e))));
                        ensure(refines(a, b)? == inside, || format!("refines({a}; {b})"))?;
                        if !inside {
                            ensure(zeta_type(a, b).is_err(), || "zeta_type off the order".into())?;
                            continue;
                        }
                        let mut expected = MultiPoly::one();
                        for outer in b.blocks() {
                            let k = a.blocks().iter().filter(|blk| outer.contains(&blk[0])).count();
                            if k >= 2 {
                                expected = expected * w(k as u32);
                            }
                        }
                        same(&zeta_type(a, b)?, &expected, "zeta_type")?;
                        same(&induced_class(a, b)?.zeta_weight(), &expected, "class weight")?;
                    }
                }
            }
            Ok(())
        },
    );

    r.check(format!("Möbius-type is the convolution inverse, n <= {n_max}"), &["mobius_type"], || {
        for n in 1..=n_max {
            let all = partitions_of(n)?;
            let mut table = MobiusTable::new();
            for a in &all {
                for b in all.iter().filter(|b| refines(a, b).unwrap_or(false)) {
                    let mut acc = MultiPoly::zero();
                    for t in all.iter().filter(|t| refines(a, t).unwrap_or(false) && refines(t, b).unwrap_or(false)) {
                        acc += &(&table.mobius(a, t)? * &zeta_type(t, b)?);
                    }
                    let expected = if a == b { MultiPoly::one() } else { MultiPoly::zero() };
                    same(&acc, &expected, &format!("Σ μ ζ on ({a}) .. ({b})"))?;
                }
            }
            let top = mobius_type(&SetPartition::finest(n), &SetPartition::coarsest(n))?;
            same(&top, &table.mobius(&SetPartition::finest(n), &SetPartition::coarsest(n))?, "table")?;
        }
        Ok(())
    });

    r.check(
        format!("a_n and b_n are of binomial type, n <= {n_max}"),
        &["zeta_enumerator", "mobius_enumerator"],
        || {
            holds(binomial_type_check(&PolySequence::try_from_fn(n_max, zeta_enumerator)?, n_max)?, "a_n")?;
            holds(binomial_type_check(&PolySequence::try_from_fn(n_max, mobius_enumerator)?, n_max)?, "b_n")
        },
    );

    r.check(
        format!("linear coefficient of b_n is μ(0̂, 1̂), n <= {n_max}"),
        &["mobius_enumerator", "mobius_type"],
        || {
            for n in 1..=n_max {
                let top = mobius_type(&SetPartition::finest(n), &SetPartition::coarsest(n))?;
                same(&mobius_enumerator(n)?.coeff_of(VarId::X, 1), &top, "linear coefficient")?;
            }
            Ok(())
        },
    );

    r.check(
        format!("w = 1 gives Touchard polynomials and (-1)^(n-1) (n-1)!, n <= {n_max}"),
        &["zeta_enumerator"],
        || {
            for n in 1..=n_max {
                let ones = all_w_one(n);
                let touchard: MultiPoly = (1..=n).map(|k| x().pow(k as u32).scale(&rat(stirling2(n, k) as i64))).sum();
                same(&zeta_enumerator(n)?.substitute(&ones), &touchard, "Touchard")?;
                let mu = mobius_type(&SetPartition::finest(n), &SetPartition::coarsest(n))?.substitute(&ones);
                let fact: i64 = (1..n as i64).product();
                let sign = if n % 2 == 1 { 1 } else { -1 };
                same(&mu, &MultiPoly::int(sign * fact), "classical Möbius")?;
            }
            Ok(())
        },
    );

    r.check(
        "printed a_n, b_n and μ(0̂, 1̂) on Π_3",
        &["zeta_enumerator", "mobius_enumerator", "mobius_type"],
        || {
            for row in tables::enumerator_goldens()? {
                same(&row.computed, &row.printed, &row.label)?;
            }
            let mu = mobius_type(&SetPartition::finest(3), &SetPartition::coarsest(3))?;
            same(&mu, &(w(2).pow(2).scale(&rat(3)) - w(3)), "μ on Π_3")
        },
    );
}

fn operator(r: &mut Runner, p: &Params) {
    let n = p.n_max.unwrap_or(5);
    r.check(
        format!("Ray duality with symbolic w, n <= {n}"),
        &["conjugate_sequence", "basic_property_check", "series_reversion"],
        || {
            let g = zeta_indicator(n);
            let f = g.reversion()?;
            let a = PolySequence::try_from_fn(n, zeta_enumerator)?;
            let b = PolySequence::try_from_fn(n, mobius_enumerator)?;
            ensure(conjugate_sequence(&g, n)? == a, || "conjugate of g is not a_n".into())?;
            ensure(conjugate_sequence(&f, n)? == b, || "conjugate of g^{-1} is not b_n".into())?;
            holds(basic_property_check(&f, &a, n)?, "a_n basic for g^{-1}")?;
            holds(basic_property_check(&g, &b, n)?, "b_n basic for g")
        },
    );

    r.check(format!("classical operator pairs, n <= {n}"), &["basic_property_check", "conjugate_sequence"], || {
        let mono = PolySequence::monomials(n);
        let falling = PolySequence::factorials(FactorialKind::Falling, n);
        holds(basic_property_check(&TruncatedSeries::t(n), &mono, n)?, "D and x^n")?;
        holds(basic_property_check(&TruncatedSeries::exp_minus_one(n), &falling, n)?, "forward difference")?;
        ensure(conjugate_sequence(&TruncatedSeries::log_one_plus(n), n)? == falling, || "(1 + t)^x".into())?;
        ensure(conjugate_sequence(&TruncatedSeries::t(n), n)? == mono, || "e^{xt}".into())
    });

    r.check(
        format!("indicator round trip, n <= {}", n + 1),
        &["indicator_from_sequence", "conjugate_sequence"],
        || {
            let m = n + 1;
            let corpus = [
                PolySequence::monomials(m),
                PolySequence::factorials(FactorialKind::Falling, m),
                PolySequence::factorials(FactorialKind::Rising, m),
                PolySequence::try_from_fn(m, zeta_enumerator)?,
                PolySequence::try_from_fn(m, mobius_enumerator)?,
            ];
            for seq in &corpus {
                ensure(conjugate_sequence(&indicator_from_sequence(seq), m)? == *seq, || {
                    format!("round trip of {}", seq[2])
                })?;
            }
            Ok(())
        },
    );

    r.check("operators commute with shifts", &["apply_operator"], || {
        let c = &MultiPoly::var(VarId::Eta) + &MultiPoly::int(3);
        let shift = |q: &MultiPoly| q.subs(VarId::X, &(&x() + &c));
        for f in [TruncatedSeries::exp_minus_one(6), zeta_indicator(6).reversion()?, TruncatedSeries::t(6).pow(2)] {
            for q in sample_polys().iter().chain([zeta_enumerator(4)?].iter()) {
                same(&apply_operator(&f, &shift(q))?, &shift(&apply_operator(&f, q)?), "f(D) E^c = E^c f(D)")?;
            }
        }
        Ok(())
    });

    r.check(format!("binomial-type detection, n <= {n}"), &["binomial_type_check"], || {
        holds(binomial_type_check(&PolySequence::monomials(n), n)?, "x^n")?;
        let bad = PolySequence::new(vec![MultiPoly::one(), x(), &x().pow(2) + &MultiPoly::one()])?;
        ensure(!binomial_type_check(&bad, 2)?.holds(), || "x^2 + 1 accepted".into())
    });
}

fn goncarov(r: &mut Runner, p: &Params) {
    let n_max = p.n_max.unwrap_or(5);
    r.check("ordered partitions count Fubini(n), n <= 7", &["ordered_partitions"], || {
        for n in 1..=7 {
            let count = ordered_partitions(n)?.len() as u64;
            ensure(count == fubini(n), || format!("|R_{n}| = {count}, Fubini = {}", fubini(n)))?;
        }
        Ok(())
    });

    r.check("printed t_1 and t_2 on a symbolic grid", &["goncarov_sequence"], || {
        let t = goncarov_sequence(&PolySequence::try_from_fn(2, zeta_enumerator)?, &Grid::symbolic(2), 2)?;
        same(&t[1], &(x() - z(0)), "t_1")?;
        let t2 =
            x().pow(2) + (w(2) - z(1).scale(&rat(2))) * x() + (z(0) * z(1)).scale(&rat(2)) - z(0).pow(2) - w(2) * z(0);
        same(&t[2], &t2, "t_2")
    });

    r.check(
        format!("ordered-partition sum equals the recurrence, n <= {n_max}"),
        &["goncarov_constant_ordered_partitions", "goncarov_sequence"],
        || {
            let grid = Grid::symbolic(n_max);
            let corpus = [
                ("x^n", PolySequence::monomials(n_max)),
                ("a_n", PolySequence::try_from_fn(n_max, zeta_enumerator)?),
                ("cycles", type_sequence(&builtin_family("cycles")?, n_max)?),
            ];
            for (name, seq) in &corpus {
                for n in 1..=n_max {
                    same(
                        &goncarov_constant_ordered_partitions(seq, &grid, n)?,
                        &goncarov_constant_recurrence(seq, &grid, n)?,
                        &format!("{name}, n = {n}"),
                    )?;
                }
            }
            Ok(())
        },
    );

    r.check("shift invariance: a_n to n = 4, two_regular to n = 6", &["verify_shift_invariance"], || {
        holds(verify_shift_invariance(&PolySequence::try_from_fn(4, zeta_enumerator)?, 4)?, "a_n")?;
        holds(verify_shift_invariance(&type_sequence(&builtin_family("two_regular")?, 6)?, 6)?, "two_regular")
    });

    r.check("interpolation conditions: classical to n = 4, weighted to n = 3", &["verify_biorthogonality"], || {
        for grid in [Grid::symbolic(5), Grid::from_ints(&[3, -1, 4, 1, 5])] {
            let t = goncarov_sequence(&PolySequence::monomials(4), &grid, 4)?;
            holds(verify_biorthogonality(&TruncatedSeries::t(4), &grid, &t, 4)?, "classical")?;
        }
        let weights: HashMap<VarId, MultiPoly> = [(2, ratio(1, 2)), (3, rat(-3)), (4, ratio(5, 7))]
            .into_iter()
            .map(|(i, v)| (VarId::w(i), MultiPoly::constant(v)))
            .collect();
        let g = zeta_indicator(4);
        let f = TruncatedSeries::new(g.reversion()?.coeffs().iter().map(|c| c.substitute(&weights)).collect(), 4);
        let a = PolySequence::try_from_fn(3, zeta_enumerator)?.substitute(&weights);
        let grid = Grid::symbolic(4);
        holds(verify_biorthogonality(&f, &grid, &goncarov_sequence(&a, &grid, 3)?, 3)?, "weighted")
    });

    r.check(format!("reconstruction, n <= {n_max}"), &["goncarov_sequence"], || {
        let a = PolySequence::try_from_fn(n_max, zeta_enumerator)?;
        let grid = Grid::symbolic(n_max + 1);
        holds(verify_reconstruction(&a, &grid, &goncarov_sequence(&a, &grid, n_max)?, n_max)?, "reconstruction")
    });

    r.check("t_n(0; -Z) = t_n(x; x - Z), n <= 4", &["goncarov_sequence", "poly_substitute"], || {
        let a = PolySequence::try_from_fn(4, zeta_enumerator)?;
        let grid = Grid::symbolic(4);
        let left = goncarov_sequence(&a, &grid.negate(), 4)?;
        let right = goncarov_sequence(&a, &grid.reflect(&x()), 4)?;
        for n in 0..=4 {
            same(&left[n].subs(VarId::X, &MultiPoly::zero()), &right[n], &format!("n = {n}"))?;
        }
        Ok(())
    });
}

fn parking(r: &mut Runner, p: &Params) {
    let n_max = p.n_max.unwrap_or(4);
    let bounds: Vec<u64> = p.grid.clone().unwrap_or_else(|| (1..=n_max as u64).collect());
    let n_max = n_max.min(bounds.len());
    let x_val = p.x.unwrap_or_else(|| bounds.iter().take(n_max).max().copied().unwrap_or(0) + 2);

    r.check("parking examples and permutation closure", &["is_u_parking"], || {
        let u = ParkingVector::new(vec![1, 2, 3, 4])?;
        ensure(is_u_parking(&[2, 1, 4, 1], &u)?, || "(2,1,4,1) rejected".into())?;
        ensure(!is_u_parking(&[2, 2, 3, 4], &u)?, || "(2,2,3,4) accepted".into())?;
        let u = ParkingVector::new(vec![1, 3, 3])?;
        for a in 1..=3 {
            for b in 1..=3 {
                for c in 1..=3 {
                    let base = is_u_parking(&[a, b, c], &u)?;
                    for perm in [[a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]] {
                        ensure(is_u_parking(&perm, &u)? == base, || format!("{perm:?}"))?;
                    }
                }
            }
        }
        Ok(())
    });

    r.check("classical parking counts (n+1)^(n-1), n <= 6", &["count_parking"], || {
        for n in 1..=6u64 {
            let u = ParkingVector::new((1..=n).collect())?;
            let count = count_parking(n as usize, &u)?;
            ensure(count == (n + 1).pow(n as u32 - 1), || format!("n = {n}: {count}"))?;
        }
        Ok(())
    });

    r.check("enlarging a bound never decreases the count", &["count_parking"], || {
        let base = vec![1, 2, 2, 4];
        let before = count_parking(4, &ParkingVector::new(base.clone())?)?;
        for i in 0..base.len() {
            let mut bigger = base.clone();
            bigger[i] += 1;
            for j in i + 1..bigger.len() {
                bigger[j] = bigger[j].max(bigger[i]);
            }
            let after = count_parking(4, &ParkingVector::new(bigger.clone())?)?;
            ensure(after >= before, || format!("{bigger:?}: {after} < {before}"))?;
        }
        Ok(())
    });

    r.check(
        format!("PF of singletons counts parking functions, grid {bounds:?}"),
        &["pf_partition", "count_parking"],
        || {
            for n in 1..=n_max {
                let u = ParkingVector::new(bounds[..n].to_vec())?;
                let pf = pf_partition(&SetPartition::finest(n), &u)?;
                ensure(pf == count_parking(n, &u)?, || format!("n = {n}"))?;
            }
            Ok(())
        },
    );

    r.check(format!("labels beyond z_(n-1) never park, x = {x_val}"), &["pf_partition", "is_u_parking"], || {
        for n in 1..=n_max.min(3) {
            let u = ParkingVector::new(bounds[..n].to_vec())?;
            for pi in partitions_of(n)? {
                let k = pi.num_blocks();
                let mut labels = vec![1u64; k];
                let mut count = 0;
                loop {
                    let seq: Vec<u64> = (1..=n).map(|e| labels[pi.block_of(e)]).collect();
                    if is_u_parking(&seq, &u)? {
                        count += 1;
                    }
                    let Some(i) = labels.iter().rposition(|&l| l < x_val) else { break };
                    labels[i] += 1;
                    labels[i + 1..].iter_mut().for_each(|l| *l = 1);
                }
                ensure(count == pf_partition(&pi, &u)?, || format!("π = {pi}: {count}"))?;
            }
        }
        Ok(())
    });

    r.check(
        format!("t_n(0; w, -Z) is the weighted PF sum, grid {bounds:?}"),
        &["weighted_pf_enumerator", "goncarov_sequence"],
        || {
            let zvec = ParkingVector::new(bounds.clone())?;
            let a = PolySequence::try_from_fn(n_max, zeta_enumerator)?;
            for n in 1..=n_max {
                same(
                    &goncarov_constant_recurrence(&a, &zvec.to_grid(), n)?,
                    &weighted_pf_enumerator(n, &zvec)?,
                    &format!("n = {n}"),
                )?;
            }
            Ok(())
        },
    );

    r.check(format!("decomposition identity, n <= {n_max}, x = {x_val}"), &["verify_decomposition"], || {
        let zvec = ParkingVector::new(bounds.clone())?;
        for n in 0..=n_max {
            holds(verify_decomposition(n, &zvec, x_val)?, "decomposition")?;
        }
        Ok(())
    });
}

fn family(r: &mut Runner, p: &Params) {
    let cross_max = if p.quick { 6 } else { 7 };
    r.check("builtin decks", &["builtin_family"], || {
        let d = |name: &str, n| builtin_family(name).map(|f| f.d(n));
        ensure(d("set_partitions", 4)? == BigInt::from(1), || "set_partitions".into())?;
        ensure(d("cycles", 3)? == BigInt::from(2), || "cycles".into())?;
        ensure(d("two_regular", 2)? == BigInt::from(0) && d("two_regular", 5)? == BigInt::from(12), || {
            "two_regular".into()
        })?;
        ensure(builtin_family("trees").is_err(), || "unknown family accepted".into())?;
        let custom = DeckSpec::from_json(r#"{"d": {"1": 1, "2": 1, "3": 1}}"#)?;
        ensure(custom.d(2) == BigInt::from(1) && custom.d(4) == BigInt::from(0), || "custom deck".into())
    });

    r.check(
        format!("exponential formula matches the partition sum, n <= {cross_max}"),
        &["type_enumerator", "hand_enumerator"],
        || {
            for name in BUILTIN_FAMILIES {
                let f = builtin_family(name)?;
                for n in 0..=cross_max {
                    type_enumerator(&f, n)?;
                }
            }
            let cycles = builtin_family("cycles")?;
            for n in 0..=cross_max {
                same(
                    &hand_enumerator(&cycles, n)?,
                    &factorial_poly(FactorialKind::Rising, &x(), n as u32),
                    "cycles h_n",
                )?;
            }
            Ok(())
        },
    );

    r.check("two_regular type enumerators", &["type_enumerator"], || {
        let f = builtin_family("two_regular")?;
        same(&type_enumerator(&f, 3)?, &(y(3) * x()), "h_3")?;
        same(
            &type_enumerator(&f, 6)?,
            &((y(6) * x()).scale(&rat(60)) + (y(3).pow(2) * x().pow(2)).scale(&rat(10))),
            "h_6",
        )
    });

    r.check(
        "type sequences are of binomial type, n <= 5",
        &["type_enumerator", "injective_type_enumerator", "binomial_type_check"],
        || {
            for name in BUILTIN_FAMILIES {
                let f = builtin_family(name)?;
                holds(binomial_type_check(&type_sequence(&f, 5)?, 5)?, name)?;
                holds(binomial_type_check(&injective_type_sequence(&f, 5)?, 5)?, name)?;
            }
            Ok(())
        },
    );

    r.check("set partitions y = 1 table and its constants", &["family_goncarov"], || {
        for row in tables::set_partition_goldens()? {
            same(&row.computed, &row.printed, &row.label)?;
        }
        Ok(())
    });

    let grids: [Vec<u64>; 2] = [vec![1, 2, 3, 4, 5, 6], vec![2, 3, 5, 7, 11, 13]];
    r.check(
        "family Gončarov constants are hand-parking sums",
        &["family_goncarov", "hand_parking_enumerator"],
        || {
            for name in BUILTIN_FAMILIES {
                let f = builtin_family(name)?;
                let n_max = if name == "two_regular" { 6 } else { 5 };
                for g in &grids {
                    let zvec = ParkingVector::new(g[..n_max].to_vec())?;
                    let t = family_goncarov(&f, &zvec.to_grid().negate(), n_max)?;
                    for n in 1..=n_max {
                        let pf = hand_parking_enumerator(&f, &zvec.prefix(n)?)?;
                        same(&t[n].subs(VarId::X, &MultiPoly::zero()), &pf, &format!("{name}, z = {g:?}, n = {n}"))?;
                    }
                }
            }
            Ok(())
        },
    );

    r.check("two_regular t_6(0; y, -Z) symbolically", &["family_goncarov"], || {
        let t = family_goncarov(&builtin_family("two_regular")?, &Grid::symbolic(6).negate(), 6)?;
        let expected = (y(6) * z(0)).scale(&rat(60)) + (y(3).pow(2) * z(0) * z(3)).scale(&rat(20))
            - (y(3).pow(2) * z(0).pow(2)).scale(&rat(10));
        same(&t[6].subs(VarId::X, &MultiPoly::zero()), &expected, "t_6(0)")
    });

    r.check("hand decomposition identity, n <= 4", &["hand_parking_enumerator"], || {
        let zvec = ParkingVector::new(vec![1, 2, 4, 5])?;
        for name in BUILTIN_FAMILIES {
            for n in 0..=4 {
                holds(verify_family_decomposition(&builtin_family(name)?, n, &zvec, 7, LabelRule::Any)?, name)?;
            }
        }
        Ok(())
    });

    r.check(
        "injective analog for set partitions, n <= 4",
        &["injective_type_enumerator", "hand_parking_enumerator"],
        || {
            let f = builtin_family("set_partitions")?;
            let seq = injective_type_sequence(&f, 4)?;
            for g in &grids {
                let zvec = ParkingVector::new(g[..4].to_vec())?;
                let t = goncarov_sequence(&seq, &zvec.to_grid().negate(), 4)?;
                for n in 1..=4 {
                    let pf = hand_parking_enumerator_with(&f, &zvec, n, LabelRule::Injective)?;
                    same(&t[n].subs(VarId::X, &MultiPoly::zero()), &pf, &format!("z = {g:?}, n = {n}"))?;
                }
            }
            same(&injective_type_enumerator(&f, 2)?.substitute(&unit_y(2)), &x().pow(2), "n = 2")
        },
    );

    r.check("closed forms: Abel, arithmetic grids, Fuss-Catalan, lattice paths", &["closed_form_checks"], || {
        for n in 0..=4 {
            for c in [ClosedForm::Abel, ClosedForm::Family2] {
                ensure(closed_form_check(c, n, 0)?, || format!("{} at n = {n}", c.name()))?;
            }
        }
        for k in 1..=3 {
            for n in 1..=4 {
                for c in [ClosedForm::FussCatalan, ClosedForm::LatticePath] {
                    ensure(closed_form_check(c, n, k)?, || format!("{} at n = {n}, k = {k}", c.name()))?;
                }
            }
        }
        Ok(())
    });

    r.check("two_regular weight 4 entries are consistent", &["type_enumerator", "family_goncarov"], || {
        for row in tables::two_regular_goldens()? {
            if row.flag.is_none() {
                same(&row.computed, &row.printed, &row.label)?;
            }
        }
        let f = builtin_family("two_regular")?;
        same(&type_enumerator(&f, 4)?, &(y(4) * x()).scale(&rat(3)), "h_4")?;
        let t = family_goncarov(&f, &Grid::symbolic(4), 4)?;
        same(&t[4], &(y(4) * (x() - z(0))).scale(&rat(3)), "t_4")?;
        holds(verify_shift_invariance(&type_sequence(&f, 4)?, 4)?, "shift invariance")?;
        let zvec = ParkingVector::new(vec![1, 2, 3, 4])?;
        let t = family_goncarov(&f, &zvec.to_grid().negate(), 4)?;
        same(&t[4].subs(VarId::X, &MultiPoly::zero()), &hand_parking_enumerator(&f, &zvec)?, "parking side")
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting_oracles() {
        assert_eq!((0..=6).map(bell).collect::<Vec<_>>(), [1, 1, 2, 5, 15, 52, 203]);
        assert_eq!((0..=5).map(fubini).collect::<Vec<_>>(), [1, 1, 3, 13, 75, 541]);
        assert_eq!(stirling2(4, 2), 7);
    }

    #[test]
    fn suite_names() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn quick_run_passes_and_covers_every_operation() {
        let report = run_suite(Suite::All, &Params { quick: true, ..Params::default() });
        assert!(report.passed(), "{report}");
        let covered = report.covered();
        let missing: Vec<_> = OPERATIONS.iter().filter(|op| !covered.contains(*op)).collect();
        assert!(missing.is_empty(), "uncovered: {missing:?}");
    }

    #[test]
    fn failures_are_reported() {
        let report =
            run_suite(Suite::Parking, &Params { grid: Some(vec![1, 1, 2]), n_max: Some(3), ..Params::default() });
        let failure = report.first_failure().expect("non-strict grid must fail the decomposition check");
        assert!(failure.name.starts_with("decomposition"));
        assert!(report.to_string().contains("FAIL"));
    }
}
