//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`MultiPoly`] is a map from [`Monomial`] to [`Rational`] with no zero
//! coefficients. Monomials are ordered graded-lexicographically (total degree
//! first, then lexicographic over [`VarId`]), so iteration order and every
//! serialized form are deterministic.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn big_rat(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// A variable of the polynomial alphabet.
///
/// `X` is the polynomial variable, `U`/`V` the auxiliary variables of the
/// binomial identity, `Eta` the grid shift, `W(i)` (i ≥ 2 in practice) the
/// zeta-type weights, `Y(i)` the card-type markers and `Z(i)` the grid nodes.
/// `Sym(c)` holds free single-letter parameters (`a`, `b`, ...) used by
/// symbolic grids such as arithmetic progressions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    X,
    U,
    V,
    Eta,
    W(u32),
    Y(u32),
    Z(u32),
    Sym(char),
}

impl VarId {
    pub fn w(i: u32) -> Self {
        assert!(i >= 1, "w indices start at 1");
        VarId::W(i)
    }

    pub fn y(i: u32) -> Self {
        assert!(i >= 1, "y indices start at 1");
        VarId::Y(i)
    }

    pub fn z(i: u32) -> Self {
        VarId::Z(i)
    }

    pub fn sym(c: char) -> Self {
        assert!(('a'..='t').contains(&c), "symbol parameters are single letters a..t");
        VarId::Sym(c)
    }

    /// Name used by the JSON format: `x`, `u`, `v`, `eta`, `w<i>`, `y<i>`, `z<i>`.
    pub fn name(&self) -> String {
        match self {
            VarId::X => "x".into(),
            VarId::U => "u".into(),
            VarId::V => "v".into(),
            VarId::Eta => "eta".into(),
            VarId::W(i) => format!("w{i}"),
            VarId::Y(i) => format!("y{i}"),
            VarId::Z(i) => format!("z{i}"),
            VarId::Sym(c) => c.to_string(),
        }
    }

    fn pretty(&self) -> String {
        match self {
            VarId::W(i) => format!("w_{i}"),
            VarId::Y(i) => format!("y_{i}"),
            VarId::Z(i) => format!("z_{i}"),
            other => other.name(),
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for VarId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "x" => return Ok(VarId::X),
            "u" => return Ok(VarId::U),
            "v" => return Ok(VarId::V),
            "eta" => return Ok(VarId::Eta),
            _ => {}
        }
        let indexed = |prefix: char| -> Option<u32> {
            let rest = s.strip_prefix(prefix)?;
            let rest = rest.strip_prefix('_').unwrap_or(rest);
            if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            rest.parse().ok()
        };
        if let Some(i) = indexed('w') {
            return if i >= 1 { Ok(VarId::W(i)) } else { Err(Error::Parse("w indices start at 1".into())) };
        }
        if let Some(i) = indexed('y') {
            return if i >= 1 { Ok(VarId::Y(i)) } else { Err(Error::Parse("y indices start at 1".into())) };
        }
        if let Some(i) = indexed('z') {
            return Ok(VarId::Z(i));
        }
        let mut chars = s.chars();
        if let (Some(c), None) = (chars.next(), chars.next()) {
            if ('a'..='t').contains(&c) {
                return Ok(VarId::Sym(c));
            }
        }
        Err(Error::Parse(format!("unknown variable `{s}`")))
    }
}

/// A power product; sorted by variable, zero exponents never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(VarId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut map: BTreeMap<VarId, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.0.binary_search_by(|(w, _)| w.cmp(&v)).map(|i| self.0[i].1).unwrap_or(0)
    }

    pub fn factors(&self) -> &[(VarId, u32)] {
        &self.0
    }

    fn without(&self, v: VarId) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect())
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, ea) = self.0[i];
            let (b, eb) = other.0[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| {
            // lex: the monomial carrying the earlier variable (or more of it) is larger
            for (&(a, ea), &(b, eb)) in self.0.iter().zip(&other.0) {
                match a.cmp(&b) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(&eb) {
                        Ordering::Equal => {}
                        o => return o,
                    },
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over the rationals in the [`VarId`] alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

/// Rising or falling factorial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorialKind {
    Falling,
    Rising,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn x() -> Self {
        Self::var(VarId::X)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The value of a constant polynomial; `None` if any variable occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Highest power of `v` occurring; 0 for the zero polynomial.
    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: VarId, k: u32) -> MultiPoly {
        MultiPoly::from_terms(
            self.terms.iter().filter(|(m, _)| m.exponent(v) == k).map(|(m, c)| (m.without(v), c.clone())),
        )
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    pub fn vars(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Simultaneous substitution; unassigned variables pass through.
    pub fn substitute(&self, assignment: &HashMap<VarId, MultiPoly>) -> MultiPoly {
        let mut powers: HashMap<(VarId, u32), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = MultiPoly::constant(c.clone());
            for &(v, e) in &m.0 {
                match assignment.get(&v) {
                    Some(value) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| value.pow(e));
                        factor = &factor * &*pw;
                    }
                    None => kept.push((v, e)),
                }
                if factor.is_zero() {
                    break;
                }
            }
            if factor.is_zero() {
                continue;
            }
            let rest = Monomial(kept);
            for (fm, fc) in factor.terms {
                out.add_term(fm.mul(&rest), fc);
            }
        }
        out
    }

    /// Substitute a single variable.
    pub fn subs(&self, v: VarId, value: &MultiPoly) -> MultiPoly {
        let mut a = HashMap::new();
        a.insert(v, value.clone());
        self.substitute(&a)
    }

    /// Formal partial derivative with respect to `v`.
    pub fn derivative(&self, v: VarId) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let reduced = Monomial::from_pairs(m.0.iter().map(|&(w, ew)| if w == v { (w, ew - 1) } else { (w, ew) }));
            out.add_term(reduced, c * rat(e as i64));
        }
        out
    }

    /// Human-readable form, highest terms first: `x^2 + w_2*x - 3/2*z_0`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            // parameters first, then the polynomial variables: `w_2*x`
            let (vars, params): (Vec<_>, Vec<_>) =
                m.0.iter().partition(|(v, _)| matches!(v, VarId::X | VarId::U | VarId::V));
            let mono: Vec<String> = params
                .into_iter()
                .chain(vars)
                .map(|&(v, e)| if e == 1 { v.pretty() } else { format!("{}^{}", v.pretty(), e) })
                .collect();
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono.join("*"));
            } else {
                s.push_str(&format!("{}*{}", abs, mono.join("*")));
            }
        }
        s
    }
}

/// `x_(n)` or `x^(n)` with `x` replaced by `base`; the empty product is 1.
pub fn factorial_poly(kind: FactorialKind, base: &MultiPoly, n: u32) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for j in 0..n as i64 {
        let shift = match kind {
            FactorialKind::Falling => -j,
            FactorialKind::Rising => j,
        };
        acc = &acc * &(base + &MultiPoly::int(shift));
    }
    acc
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Converts an exact rational to `i64` if it is an integer in range.
pub fn as_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::int(n)
    }
}

impl From<VarId> for MultiPoly {
    fn from(v: VarId) -> Self {
        MultiPoly::var(v)
    }
}

impl From<Rational> for MultiPoly {
    fn from(r: Rational) -> Self {
        MultiPoly::constant(r)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}
