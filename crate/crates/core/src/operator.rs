//! Operator calculus on `K[x]`: sequences of binomial type, their
//! D-indicators, and the action `f(D)` of an indicator series on polynomials.
//!
//! Operators have no first-class representation; a shift-invariant operator
//! is identified with its D-indicator series.

use std::collections::HashMap;
use std::ops::Index;

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{big_rat, binomial, factorial, rat, FactorialKind, MultiPoly, Rational, VarId};
use crate::series::TruncatedSeries;

/// A polynomial sequence `p_0, p_1, ..., p_N` in the variable `x`.
///
/// Entries may carry parameters (`w_i`, `y_i`, `z_i`, ...) in their
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySequence {
    entries: Vec<MultiPoly>,
}

impl PolySequence {
    /// Wraps `p_0..p_N`; fails unless `p_0 = 1`.
    pub fn new(entries: Vec<MultiPoly>) -> Result<Self> {
        match entries.first() {
            Some(p0) if *p0 == MultiPoly::one() => Ok(PolySequence { entries }),
            _ => Err(Error::Invalid("sequence must start with p_0 = 1".into())),
        }
    }

    /// Builds `p_0..p_{n_max}` from a generator; `p_0` is whatever `f(0)` says.
    pub fn try_from_fn(n_max: usize, f: impl FnMut(usize) -> Result<MultiPoly>) -> Result<Self> {
        Self::new((0..=n_max).map(f).collect::<Result<Vec<_>>>()?)
    }

    /// `x^n`.
    pub fn monomials(n_max: usize) -> Self {
        PolySequence { entries: (0..=n_max).map(|n| MultiPoly::x().pow(n as u32)).collect() }
    }

    /// Falling or rising factorials in `x`.
    pub fn factorials(kind: FactorialKind, n_max: usize) -> Self {
        PolySequence {
            entries: (0..=n_max).map(|n| crate::poly::factorial_poly(kind, &MultiPoly::x(), n as u32)).collect(),
        }
    }

    /// Largest index present.
    pub fn n_max(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[MultiPoly] {
        &self.entries
    }

    pub fn get(&self, n: usize) -> Option<&MultiPoly> {
        self.entries.get(n)
    }

    /// `p_n(value)`: substitute `x ↦ value`.
    pub fn eval(&self, n: usize, value: &MultiPoly) -> MultiPoly {
        self.entries[n].subs(VarId::X, value)
    }

    /// Applies the same substitution (over all variables) to every entry.
    pub fn substitute(&self, assignment: &HashMap<VarId, MultiPoly>) -> Self {
        PolySequence { entries: self.entries.iter().map(|p| p.substitute(assignment)).collect() }
    }

    pub fn truncate(&self, n_max: usize) -> Self {
        PolySequence { entries: self.entries[..=n_max.min(self.n_max())].to_vec() }
    }

    pub(crate) fn require(&self, n_max: usize) -> Result<()> {
        if self.n_max() < n_max {
            return Err(Error::SequenceTooShort { have: self.len(), need: n_max + 1 });
        }
        Ok(())
    }
}

impl Index<usize> for PolySequence {
    type Output = MultiPoly;

    fn index(&self, n: usize) -> &MultiPoly {
        &self.entries[n]
    }
}

/// Outcome of an identity check; a failure carries the first index and the
/// nonzero residual found there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails { n: usize, residual: MultiPoly },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub(crate) fn check(n: usize, residual: MultiPoly) -> Option<Verdict> {
        if residual.is_zero() {
            None
        } else {
            Some(Verdict::Fails { n, residual })
        }
    }
}

/// `p_n = n! [t^n] exp(x g(t))` for `n ≤ n_max`.
pub fn conjugate_sequence(g: &TruncatedSeries, n_max: usize) -> Result<PolySequence> {
    if g.order() < n_max {
        return Err(Error::InsufficientOrder { have: g.order(), need: n_max });
    }
    let e = g.truncate(n_max).scale(&MultiPoly::x()).exp()?;
    Ok(PolySequence { entries: (0..=n_max).map(|n| e.coeff(n).scale(&big_rat(factorial(n)))).collect() })
}

/// The indicator `Σ_{k≥1} p_{k,1} t^k / k!` read off the linear coefficients.
pub fn indicator_from_sequence(p: &PolySequence) -> TruncatedSeries {
    TruncatedSeries::from_egf(p.n_max(), |k| if k == 0 { MultiPoly::zero() } else { p[k].coeff_of(VarId::X, 1) })
}

/// `f(D) p = Σ_k c_k D^k p`.
pub fn apply_operator(f: &TruncatedSeries, p: &MultiPoly) -> Result<MultiPoly> {
    let deg = p.degree_in(VarId::X) as usize;
    if f.order() < deg {
        return Err(Error::InsufficientOrder { have: f.order(), need: deg });
    }
    let mut out = MultiPoly::zero();
    let mut dk = p.clone();
    for k in 0..=deg {
        let c = f.coeff(k);
        if !c.is_zero() {
            out += &(&c * &dk);
        }
        dk = dk.derivative(VarId::X);
    }
    Ok(out)
}

/// Checks `p_n(u + v) = Σ_i C(n, i) p_i(u) p_{n-i}(v)` for `n ≤ n_max`.
pub fn binomial_type_check(p: &PolySequence, n_max: usize) -> Result<Verdict> {
    p.require(n_max)?;
    let u = MultiPoly::var(VarId::U);
    let v = MultiPoly::var(VarId::V);
    let uv = &u + &v;
    let at_u: Vec<MultiPoly> = (0..=n_max).map(|i| p.eval(i, &u)).collect();
    let at_v: Vec<MultiPoly> = (0..=n_max).map(|i| p.eval(i, &v)).collect();
    for n in 0..=n_max {
        let mut residual = p.eval(n, &uv);
        for i in 0..=n {
            let term = (&at_u[i] * &at_v[n - i]).scale(&big_rat(binomial(n, i)));
            residual -= &term;
        }
        if let Some(v) = Verdict::check(n, residual) {
            return Ok(v);
        }
    }
    Ok(Verdict::Holds)
}

/// Checks that `p` is the basic sequence of the delta operator `f(D)`:
/// `p_0 = 1`, and `p_n(0) = 0`, `f(D) p_n = n p_{n-1}` for `1 ≤ n ≤ n_max`.
pub fn basic_property_check(f: &TruncatedSeries, p: &PolySequence, n_max: usize) -> Result<Verdict> {
    f.check_delta_indicator().map_err(|_| Error::NotADeltaIndicator)?;
    p.require(n_max)?;
    if let Some(v) = Verdict::check(0, &p[0] - &MultiPoly::one()) {
        return Ok(v);
    }
    for n in 1..=n_max {
        if let Some(v) = Verdict::check(n, p.eval(n, &MultiPoly::zero())) {
            return Ok(v);
        }
        let residual = apply_operator(f, &p[n])? - p[n - 1].scale(&rat(n as i64));
        if let Some(v) = Verdict::check(n, residual) {
            return Ok(v);
        }
    }
    Ok(Verdict::Holds)
}

/// `t + Σ_{i=2}^{order} w_i t^i / i!`, the indicator whose conjugate
/// sequence is the zeta-type enumerator.
pub fn zeta_indicator(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_egf(order, |k| match k {
        0 => MultiPoly::zero(),
        1 => MultiPoly::one(),
        _ => MultiPoly::var(VarId::w(k as u32)),
    })
}

/// Rescales a sequence `p_n ↦ p_n / k^n`.
pub fn rescale(p: &PolySequence, k: &Rational) -> PolySequence {
    let inv = Rational::one() / k;
    let mut factor = Rational::one();
    let mut entries = Vec::with_capacity(p.len());
    for e in p.entries() {
        entries.push(e.scale(&factor));
        factor *= &inv;
    }
    PolySequence { entries }
}
