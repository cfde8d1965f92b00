//! Exponential families: decks, hands and their type enumerators.
//!
//! A hand of weight `n` corresponds to a set partition of `[n]` together with
//! a card picture on every block, so every enumerator below is a sum over
//! `Π_n` with the multiplicative weight `Π_B d_{|B|} y_{|B|}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::goncarov::{goncarov_sequence, Grid};
use crate::lattice::{partitions_of, zeta_enumerator, SetPartition};
use crate::operator::{PolySequence, Verdict};
use crate::parking::{weighted_pf_with, LabelRule, ParkingVector};
use crate::poly::{
    as_i64, big_rat, binomial, factorial, factorial_poly, rat, FactorialKind, Monomial, MultiPoly, Rational, VarId,
};
use crate::series::TruncatedSeries;

type DeckFn = Arc<dyn Fn(usize) -> BigInt + Send + Sync>;

/// Names accepted by [`builtin_family`].
pub const BUILTIN_FAMILIES: [&str; 3] = ["set_partitions", "cycles", "two_regular"];

/// Deck sizes `d_n` of an exponential family.
#[derive(Clone)]
pub struct DeckSpec {
    name: String,
    deck: DeckFn,
    min_weight: usize,
}

impl DeckSpec {
    /// `min_weight` is the smallest `n` with `d_n > 0`.
    pub fn new(
        name: impl Into<String>,
        min_weight: usize,
        deck: impl Fn(usize) -> BigInt + Send + Sync + 'static,
    ) -> Self {
        DeckSpec { name: name.into(), deck: Arc::new(deck), min_weight }
    }

    /// Deck with finite support given by a table.
    pub fn from_table(name: impl Into<String>, table: BTreeMap<usize, BigInt>) -> Result<Self> {
        if table.keys().any(|&k| k == 0) {
            return Err(Error::Invalid("deck weights start at 1".into()));
        }
        if table.values().any(Signed::is_negative) {
            return Err(Error::Invalid("deck sizes must be nonnegative".into()));
        }
        let min_weight = table
            .iter()
            .find(|(_, d)| !d.is_zero())
            .map(|(&k, _)| k)
            .ok_or_else(|| Error::Invalid("deck has no cards".into()))?;
        Ok(Self::new(name, min_weight, move |n| table.get(&n).cloned().unwrap_or_default()))
    }

    /// Parses `{"d": {"1": 1, "2": 1}, "closed_form": "cycles"}`.
    ///
    /// With a `closed_form` tag the builtin deck is used and any listed
    /// entries must agree with it.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let obj = value.as_object().ok_or_else(|| Error::Parse("family must be an object".into()))?;
        let mut table = BTreeMap::new();
        if let Some(d) = obj.get("d") {
            let d = d.as_object().ok_or_else(|| Error::Parse("\"d\" must be an object".into()))?;
            for (k, v) in d {
                let weight: usize = k.parse().map_err(|_| Error::Parse(format!("bad card weight {k:?}")))?;
                let size: BigInt = match v {
                    serde_json::Value::Number(n) => n.to_string().parse(),
                    serde_json::Value::String(s) => s.parse(),
                    _ => return Err(Error::Parse(format!("bad deck size for weight {k}"))),
                }
                .map_err(|_| Error::Parse(format!("bad deck size for weight {k}")))?;
                table.insert(weight, size);
            }
        }
        let name = obj.get("name").and_then(|n| n.as_str()).unwrap_or("custom").to_string();
        match obj.get("closed_form") {
            Some(tag) => {
                let tag = tag.as_str().ok_or_else(|| Error::Parse("\"closed_form\" must be a string".into()))?;
                let builtin = builtin_family(tag)?;
                for (&k, v) in &table {
                    if builtin.d(k) != *v {
                        return Err(Error::Invalid(format!(
                            "d_{k} = {v} contradicts closed form {tag} (d_{k} = {})",
                            builtin.d(k)
                        )));
                    }
                }
                Ok(DeckSpec { name, ..builtin })
            }
            None => Self::from_table(name, table),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn min_weight(&self) -> usize {
        self.min_weight
    }

    /// `d_n`; zero for `n = 0`.
    pub fn d(&self, n: usize) -> BigInt {
        if n == 0 {
            BigInt::zero()
        } else {
            (self.deck)(n)
        }
    }

    /// `Π_B d_{|B|} y_{|B|}`.
    pub fn hand_weight(&self, pi: &SetPartition) -> MultiPoly {
        let mut out = MultiPoly::one();
        for size in pi.block_sizes() {
            let d = self.d(size);
            if d.is_zero() {
                return MultiPoly::zero();
            }
            out = &out * &MultiPoly::term(big_rat(d), Monomial::from_pairs(vec![(VarId::y(size as u32), 1)]));
        }
        out
    }
}

impl fmt::Debug for DeckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<String> = (1..=6).map(|n| self.d(n).to_string()).collect();
        f.debug_struct("DeckSpec")
            .field("name", &self.name)
            .field("min_weight", &self.min_weight)
            .field("d", &format_args!("[{}, ...]", head.join(", ")))
            .finish()
    }
}

pub fn builtin_family(name: &str) -> Result<DeckSpec> {
    match name {
        "set_partitions" => Ok(DeckSpec::new(name, 1, |_| BigInt::from(1))),
        "cycles" => Ok(DeckSpec::new(name, 1, |n| factorial(n - 1))),
        "two_regular" => Ok(DeckSpec::new(name, 3, |n| if n < 3 { BigInt::zero() } else { factorial(n - 1) / 2 })),
        _ => Err(Error::UnknownFamily(name.to_string())),
    }
}

/// `y_1..y_n ↦ 1`.
pub fn unit_y(n: usize) -> HashMap<VarId, MultiPoly> {
    (1..=n).map(|i| (VarId::y(i as u32), MultiPoly::one())).collect()
}

fn egf_type_enumerator(family: &DeckSpec, n: usize) -> Result<MultiPoly> {
    let deck = TruncatedSeries::from_egf(n, |k| {
        if k == 0 {
            MultiPoly::zero()
        } else {
            MultiPoly::term(big_rat(family.d(k)), Monomial::from_pairs(vec![(VarId::y(k as u32), 1)]))
        }
    });
    let hands = deck.scale(&MultiPoly::x()).exp()?;
    Ok(hands.coeff(n).scale(&big_rat(factorial(n))))
}

fn partition_sum(family: &DeckSpec, n: usize, kind: Option<FactorialKind>) -> Result<MultiPoly> {
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let x = MultiPoly::x();
    let mut out = MultiPoly::zero();
    for pi in partitions_of(n)? {
        let weight = family.hand_weight(&pi);
        if weight.is_zero() {
            continue;
        }
        let k = pi.num_blocks();
        let cards = match kind {
            None => x.pow(k as u32),
            Some(kind) => factorial_poly(kind, &x, k as u32),
        };
        out += &(weight * cards);
    }
    Ok(out)
}

/// `h_n(x; y)`, by the exponential formula and by the sum over `Π_n`.
pub fn type_enumerator(family: &DeckSpec, n: usize) -> Result<MultiPoly> {
    let direct = partition_sum(family, n, None)?;
    let egf = egf_type_enumerator(family, n)?;
    if direct != egf {
        return Err(Error::InternalCrossCheckFailure(format!(
            "{} h_{n}: partition sum {direct} but exponential formula {egf}",
            family.name
        )));
    }
    Ok(direct)
}

/// `h_n(x)`: the type enumerator at `y = 1`.
pub fn hand_enumerator(family: &DeckSpec, n: usize) -> Result<MultiPoly> {
    Ok(type_enumerator(family, n)?.substitute(&unit_y(n)))
}

/// `h_n(x; y)` with `x^k` replaced by `x_(k)`: hands whose cards carry
/// distinct labels.
pub fn injective_type_enumerator(family: &DeckSpec, n: usize) -> Result<MultiPoly> {
    let direct = partition_sum(family, n, Some(FactorialKind::Falling))?;
    let x = MultiPoly::x();
    let mut relabeled = MultiPoly::zero();
    for k in 0..=n {
        let c = type_enumerator(family, n)?.coeff_of(VarId::X, k as u32);
        if !c.is_zero() {
            relabeled += &(c * factorial_poly(FactorialKind::Falling, &x, k as u32));
        }
    }
    if direct != relabeled {
        return Err(Error::InternalCrossCheckFailure(format!(
            "{} injective h_{n}: partition sum {direct} but relabeled {relabeled}",
            family.name
        )));
    }
    Ok(direct)
}

/// `{h_0, ..., h_{n_max}}`.
pub fn type_sequence(family: &DeckSpec, n_max: usize) -> Result<PolySequence> {
    PolySequence::try_from_fn(n_max, |n| type_enumerator(family, n))
}

pub fn injective_type_sequence(family: &DeckSpec, n_max: usize) -> Result<PolySequence> {
    PolySequence::try_from_fn(n_max, |n| injective_type_enumerator(family, n))
}

/// `t_n(x; y, F, Z)` for `n ≤ n_max`.
pub fn family_goncarov(family: &DeckSpec, grid: &Grid, n_max: usize) -> Result<PolySequence> {
    goncarov_sequence(&type_sequence(family, n_max)?, grid, n_max)
}

/// `Σ_{π ∈ Π_n} (Π_B d_{|B|} y_{|B|}) PF_π(Z)` with `n = |zvec|`.
pub fn hand_parking_enumerator(family: &DeckSpec, zvec: &ParkingVector) -> Result<MultiPoly> {
    hand_parking_enumerator_with(family, zvec, zvec.len(), LabelRule::Any)
}

/// As [`hand_parking_enumerator`] over the first `n` bounds and with the
/// given labeling rule.
pub fn hand_parking_enumerator_with(
    family: &DeckSpec,
    zvec: &ParkingVector,
    n: usize,
    rule: LabelRule,
) -> Result<MultiPoly> {
    weighted_pf_with(n, zvec, rule, |pi| family.hand_weight(pi))
}

/// Checks `h_n(x; y) = Σ_i C(n, i) h_{n-i}(x - z_i; y) Σ_H type(H) PF_H(Z)` at
/// integer `x`, under `z_0 < ... < z_{n-1} < x`.
pub fn verify_family_decomposition(
    family: &DeckSpec,
    n: usize,
    zvec: &ParkingVector,
    x: u64,
    rule: LabelRule,
) -> Result<Verdict> {
    let u = zvec.prefix(n)?;
    let bounds = u.bounds();
    if !u.is_strictly_increasing() || bounds.last().is_some_and(|&z| z >= x) {
        return Err(Error::HypothesisViolated(format!("need z_0 < ... < z_{{n-1}} < x, got z = {bounds:?}, x = {x}")));
    }
    let h = |m: usize| match rule {
        LabelRule::Any => type_enumerator(family, m),
        LabelRule::Injective => injective_type_enumerator(family, m),
    };
    let at = |v: u64| MultiPoly::constant(big_rat(v.into()));
    let mut residual = h(n)?.subs(VarId::X, &at(x));
    for i in 0..=n {
        let shifted = x - bounds.get(i).filter(|_| i < n).copied().unwrap_or(0);
        let pf = hand_parking_enumerator_with(family, &u, i, rule)?;
        let term = (h(n - i)?.subs(VarId::X, &at(shifted)) * pf).scale(&big_rat(binomial(n, i)));
        residual -= &term;
    }
    Ok(Verdict::check(n, residual).unwrap_or(Verdict::Holds))
}

/// Number of nondecreasing `0 ≤ x_0 ≤ ... ≤ x_{n-1}` with `x_i < z_i`: lattice
/// paths of unit north and east steps whose `i`-th north step stays strictly
/// left of `(z_i, i)`.
pub fn lattice_path_count(z: &[u64]) -> u64 {
    fn walk(z: &[u64], col: u64, row: usize) -> u64 {
        if row == z.len() {
            return 1;
        }
        let mut count = 0;
        if col < z[row] {
            count += walk(z, col, row + 1);
            count += walk(z, col + 1, row);
        }
        count
    }
    walk(z, 0, 0)
}

/// Named closed-form identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// `a_n` at `w_i = i^{i-1}` is `x(x + n)^{n-1}`.
    Abel,
    /// Cycles family at `y = 1` on `-Z`, `z_i = a + bi` with symbolic `a, b`:
    /// `t_n = (x + a)(x + a + nb + 1)^{(n-1)}`.
    Family2,
    /// Cycles family, `z_i = 1 + ki`: `t_n(0)/n! = C((k+1)n, n)/(kn + 1)`.
    FussCatalan,
    /// Cycles family, `z_i = 1 + ki`: `t_n(0)/n!` equals the path count.
    LatticePath,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 4] =
        [ClosedForm::Abel, ClosedForm::Family2, ClosedForm::FussCatalan, ClosedForm::LatticePath];

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::Abel => "abel",
            ClosedForm::Family2 => "family2",
            ClosedForm::FussCatalan => "fuss_catalan",
            ClosedForm::LatticePath => "lattice_path",
        }
    }
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClosedForm::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// `t_n(0; 1, F, -Z) / n!` for the cycles family and `z_i = 1 + ki`.
pub fn cycles_constant_over_factorial(n: usize, k: u64) -> Result<Rational> {
    let cycles = builtin_family("cycles")?;
    let grid = Grid::arithmetic(&MultiPoly::int(1), &MultiPoly::int(k as i64), n).negate();
    let t = family_goncarov(&cycles, &grid, n)?;
    let c = t[n].substitute(&unit_y(n)).subs(VarId::X, &MultiPoly::zero());
    let c = c.as_constant().ok_or_else(|| Error::Invalid("constant term is not numeric".into()))?;
    Ok(c / big_rat(factorial(n)))
}

/// Whether the named identity holds at `n` (and `k` where it applies).
pub fn closed_form_check(check: ClosedForm, n: usize, k: u64) -> Result<bool> {
    let x = MultiPoly::x();
    match check {
        ClosedForm::Abel => {
            let abel: HashMap<VarId, MultiPoly> =
                (2..=n.max(2)).map(|i| (VarId::w(i as u32), MultiPoly::int((i as i64).pow(i as u32 - 1)))).collect();
            let a = zeta_enumerator(n)?.substitute(&abel);
            let expected =
                if n == 0 { MultiPoly::one() } else { &x * &(&x + &MultiPoly::int(n as i64)).pow(n as u32 - 1) };
            Ok(a == expected)
        }
        ClosedForm::Family2 => {
            let a = MultiPoly::var(VarId::sym('a'));
            let b = MultiPoly::var(VarId::sym('b'));
            let grid = Grid::arithmetic(&a, &b, n).negate();
            let t = family_goncarov(&builtin_family("cycles")?, &grid, n)?;
            let tn = t[n].substitute(&unit_y(n));
            let expected = if n == 0 {
                MultiPoly::one()
            } else {
                let base = &(&x + &a) + &(&b.scale(&rat(n as i64)) + &MultiPoly::one());
                &(&x + &a) * &factorial_poly(FactorialKind::Rising, &base, n as u32 - 1)
            };
            Ok(tn == expected)
        }
        ClosedForm::FussCatalan => {
            let value = cycles_constant_over_factorial(n, k)?;
            let m = (k as usize + 1) * n;
            let expected = big_rat(binomial(m, n)) / rat(k as i64 * n as i64 + 1);
            Ok(value == expected)
        }
        ClosedForm::LatticePath => {
            let value = cycles_constant_over_factorial(n, k)?;
            let z: Vec<u64> = (0..n as u64).map(|i| 1 + k * i).collect();
            Ok(as_i64(&value) == Some(lattice_path_count(&z) as i64))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goncarov::verify_shift_invariance;
    use crate::operator::binomial_type_check;

    fn x() -> MultiPoly {
        MultiPoly::x()
    }
    fn y(i: u32) -> MultiPoly {
        MultiPoly::var(VarId::y(i))
    }
    fn z(i: u32) -> MultiPoly {
        MultiPoly::var(VarId::z(i))
    }
    fn family(name: &str) -> DeckSpec {
        builtin_family(name).unwrap()
    }
    fn poly(coeffs_high_first: &[i64]) -> MultiPoly {
        let d = coeffs_high_first.len() - 1;
        coeffs_high_first
            .iter()
            .enumerate()
            .map(|(i, &c)| MultiPoly::term(rat(c), Monomial::from_pairs(vec![(VarId::X, (d - i) as u32)])))
            .sum()
    }

    #[test]
    fn builtin_decks() {
        let sp = family("set_partitions");
        assert!((1..6).all(|n| sp.d(n) == BigInt::from(1)));
        assert_eq!(family("cycles").d(3), BigInt::from(2));
        let tr = family("two_regular");
        assert_eq!((tr.d(1), tr.d(2), tr.d(5)), (BigInt::zero(), BigInt::zero(), BigInt::from(12)));
        assert_eq!(tr.min_weight(), 3);
        assert_eq!(builtin_family("trees").unwrap_err(), Error::UnknownFamily("trees".into()));
    }

    #[test]
    fn custom_decks() {
        let f = DeckSpec::from_json(r#"{"d": {"1": 1, "2": 1, "3": 1, "4": 1}}"#).unwrap();
        assert_eq!(f.min_weight(), 1);
        assert_eq!(f.d(5), BigInt::zero());
        assert_eq!(hand_enumerator(&f, 3).unwrap(), poly(&[1, 3, 1, 0]));

        let tagged = DeckSpec::from_json(r#"{"d": {"3": 2}, "closed_form": "cycles"}"#).unwrap();
        assert_eq!(tagged.d(6), BigInt::from(120));
        assert!(DeckSpec::from_json(r#"{"d": {"3": 5}, "closed_form": "cycles"}"#).is_err());
        assert!(DeckSpec::from_json(r#"{"d": {"0": 1}}"#).is_err());
        assert!(DeckSpec::from_json(r#"{"d": {"2": -1}}"#).is_err());
        assert!(DeckSpec::from_json(r#"{"d": {}}"#).is_err());
        assert!(matches!(DeckSpec::from_json("[1]"), Err(Error::Parse(_))));
    }

    #[test]
    fn hand_enumerator_examples() {
        assert_eq!(hand_enumerator(&family("set_partitions"), 3).unwrap(), poly(&[1, 3, 1, 0]));
        assert_eq!(hand_enumerator(&family("cycles"), 3).unwrap(), poly(&[1, 3, 2, 0]));
        assert!(hand_enumerator(&family("two_regular"), 2).unwrap().is_zero());
        for n in 0..=6 {
            assert_eq!(
                hand_enumerator(&family("cycles"), n).unwrap(),
                factorial_poly(FactorialKind::Rising, &x(), n as u32)
            );
        }
    }

    #[test]
    fn two_regular_types() {
        let tr = family("two_regular");
        assert_eq!(type_enumerator(&tr, 3).unwrap(), y(3) * x());
        assert_eq!(type_enumerator(&tr, 4).unwrap(), (y(4) * x()).scale(&rat(3)));
        assert_eq!(type_enumerator(&tr, 5).unwrap(), (y(5) * x()).scale(&rat(12)));
        assert_eq!(
            type_enumerator(&tr, 6).unwrap(),
            (y(6) * x()).scale(&rat(60)) + (y(3).pow(2) * x().pow(2)).scale(&rat(10))
        );
    }

    #[test]
    fn set_partitions_type_is_zeta_enumerator() {
        let mut assign: HashMap<VarId, MultiPoly> = HashMap::new();
        assign.insert(VarId::y(1), MultiPoly::one());
        for i in 2..=4 {
            assign.insert(VarId::y(i), MultiPoly::var(VarId::w(i)));
        }
        for n in 0..=4 {
            assert_eq!(
                type_enumerator(&family("set_partitions"), n).unwrap().substitute(&assign),
                zeta_enumerator(n).unwrap()
            );
        }
    }

    #[test]
    fn injective_examples() {
        let sp = family("set_partitions");
        assert_eq!(injective_type_enumerator(&sp, 2).unwrap().substitute(&unit_y(2)), x().pow(2));
        assert_eq!(injective_type_enumerator(&sp, 1).unwrap(), y(1) * x());
        assert_eq!(injective_type_enumerator(&family("two_regular"), 3).unwrap(), y(3) * x());
        for name in BUILTIN_FAMILIES {
            let p = injective_type_sequence(&family(name), 5).unwrap();
            assert!(binomial_type_check(&p, 5).unwrap().holds(), "{name}");
        }
    }

    #[test]
    fn set_partition_table() {
        let grid = Grid::arithmetic(&MultiPoly::int(1), &MultiPoly::int(1), 4).negate();
        let t = family_goncarov(&family("set_partitions"), &grid, 4).unwrap();
        let t: Vec<MultiPoly> = (0..=4).map(|n| t[n].substitute(&unit_y(4))).collect();
        assert_eq!(t[0], MultiPoly::one());
        assert_eq!(t[1], poly(&[1, 1]));
        assert_eq!(t[2], poly(&[1, 5, 4]));
        assert_eq!(t[3], poly(&[1, 12, 40, 29]));
        assert_eq!(t[4], poly(&[1, 22, 163, 453, 311]));
    }

    #[test]
    fn two_regular_goncarov() {
        let tr = family("two_regular");
        let t = family_goncarov(&tr, &Grid::symbolic(6), 6).unwrap();
        assert!(t[1].is_zero() && t[2].is_zero());
        assert_eq!(t[3], y(3) * (x() - z(0)));
        assert_eq!(t[4], (y(4) * (x() - z(0))).scale(&rat(3)));
        assert_eq!(t[5], (y(5) * (x() - z(0))).scale(&rat(12)));
        let expected = (y(3).pow(2) * x().pow(2)).scale(&rat(10)) + (y(6) * x()).scale(&rat(60))
            - (y(3).pow(2) * z(3) * x()).scale(&rat(20))
            - (y(6) * z(0)).scale(&rat(60))
            - (y(3).pow(2) * z(0).pow(2)).scale(&rat(10))
            + (y(3).pow(2) * z(0) * z(3)).scale(&rat(20));
        assert_eq!(t[6], expected);
        assert!(verify_shift_invariance(&type_sequence(&tr, 6).unwrap(), 6).unwrap().holds());
    }

    #[test]
    fn hand_parking_examples() {
        let tr = family("two_regular");
        let zvec = ParkingVector::new((1..=6).collect()).unwrap();
        assert_eq!(hand_parking_enumerator(&tr, &zvec).unwrap(), y(6).scale(&rat(60)) + y(3).pow(2).scale(&rat(70)));
        let t = family_goncarov(&tr, &zvec.to_grid().negate(), 6).unwrap();
        assert_eq!(t[6].subs(VarId::X, &MultiPoly::zero()), hand_parking_enumerator(&tr, &zvec).unwrap());
        let sp = family("set_partitions");
        let zvec = ParkingVector::new(vec![1, 2, 3]).unwrap();
        assert_eq!(hand_parking_enumerator(&sp, &zvec).unwrap().substitute(&unit_y(3)), MultiPoly::int(29));
        let zvec = ParkingVector::new(vec![4]).unwrap();
        assert_eq!(hand_parking_enumerator(&sp, &zvec).unwrap(), y(1).scale(&rat(4)));
    }

    #[test]
    fn family_decompositions() {
        let zvec = ParkingVector::new(vec![1, 3, 4]).unwrap();
        for name in BUILTIN_FAMILIES {
            for rule in [LabelRule::Any, LabelRule::Injective] {
                assert!(verify_family_decomposition(&family(name), 3, &zvec, 6, rule).unwrap().holds());
            }
        }
        assert!(matches!(
            verify_family_decomposition(&family("cycles"), 3, &zvec, 4, LabelRule::Any),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn lattice_paths() {
        assert_eq!(lattice_path_count(&[]), 1);
        assert_eq!(lattice_path_count(&[1, 2, 3]), 5);
        assert_eq!(lattice_path_count(&[2, 3]), 5);
        assert_eq!(lattice_path_count(&[1, 3, 5]), 12);
        let cycles = family("cycles");
        for z in [vec![2, 3, 5, 7], vec![1, 1, 4, 4], vec![3, 4, 9, 10]] {
            let zvec = ParkingVector::new(z.clone()).unwrap();
            let t = family_goncarov(&cycles, &zvec.to_grid().negate(), 4).unwrap();
            for n in 1..=4 {
                let c = t[n].substitute(&unit_y(n)).subs(VarId::X, &MultiPoly::zero());
                let paths = lattice_path_count(&z[..n]) as i64 * (1..=n as i64).product::<i64>();
                assert_eq!(c, MultiPoly::int(paths), "z = {z:?}, n = {n}");
            }
        }
    }

    #[test]
    fn closed_forms() {
        for n in 0..=4 {
            assert!(closed_form_check(ClosedForm::Abel, n, 0).unwrap(), "abel {n}");
            assert!(closed_form_check(ClosedForm::Family2, n, 0).unwrap(), "family2 {n}");
        }
        assert_eq!(cycles_constant_over_factorial(3, 1).unwrap(), rat(5));
        for k in 1..=3 {
            for n in 1..=4 {
                assert!(closed_form_check(ClosedForm::FussCatalan, n, k).unwrap());
                assert!(closed_form_check(ClosedForm::LatticePath, n, k).unwrap());
            }
        }
        assert_eq!("catalan".parse::<ClosedForm>(), Err(Error::UnknownCheck("catalan".into())));
        assert_eq!("family2".parse::<ClosedForm>(), Ok(ClosedForm::Family2));
    }

    #[test]
    fn family2_first_term() {
        let a = MultiPoly::var(VarId::sym('a'));
        let b = MultiPoly::var(VarId::sym('b'));
        let grid = Grid::arithmetic(&a, &b, 1).negate();
        let t = family_goncarov(&family("cycles"), &grid, 1).unwrap();
        assert_eq!(t[1].substitute(&unit_y(1)), x() + a);
    }
}
