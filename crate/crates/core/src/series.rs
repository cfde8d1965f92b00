//! Formal power series in `t`, truncated at a fixed order, with polynomial
//! coefficients.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{big_rat, factorial, rat, MultiPoly, Rational};

/// `c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})`.
///
/// Binary operations return a series of the smaller order of the operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<MultiPoly>,
}

impl TruncatedSeries {
    /// Builds a series of the given order; missing coefficients are zero and
    /// coefficients beyond the order are dropped.
    pub fn new(mut coeffs: Vec<MultiPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, MultiPoly::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![MultiPoly::one()], order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::new(vec![MultiPoly::zero(), MultiPoly::one()], order)
    }

    /// Series from exponential-generating-function coefficients:
    /// `Σ_{k≥0} a(k) t^k / k!`.
    pub fn from_egf(order: usize, mut a: impl FnMut(usize) -> MultiPoly) -> Self {
        let coeffs = (0..=order).map(|k| a(k).scale(&(Rational::one() / big_rat(factorial(k))))).collect();
        TruncatedSeries { order, coeffs }
    }

    /// `e^t - 1`.
    pub fn exp_minus_one(order: usize) -> Self {
        Self::from_egf(order, |k| if k == 0 { MultiPoly::zero() } else { MultiPoly::one() })
    }

    /// `log(1 + t)`.
    pub fn log_one_plus(order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|k| {
                if k == 0 {
                    MultiPoly::zero()
                } else {
                    let sign = if k % 2 == 1 { 1 } else { -1 };
                    MultiPoly::constant(Rational::new(sign.into(), (k as i64).into()))
                }
            })
            .collect();
        TruncatedSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero beyond the order.
    pub fn coeff(&self, k: usize) -> MultiPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order)].to_vec(), order.min(self.order))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self::new((0..=order).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(), order)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self::new((0..=order).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect(), order)
    }

    pub fn scale(&self, c: &MultiPoly) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.order)
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = vec![MultiPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Self::new(out, order)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `Σ_k a^k / k!`, solved through `E' = a' E`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut e = vec![MultiPoly::zero(); self.order + 1];
        e[0] = MultiPoly::one();
        for k in 1..=self.order {
            let mut acc = MultiPoly::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() && !e[k - j].is_zero() {
                    acc += &(a * &e[k - j]).scale(&rat(j as i64));
                }
            }
            e[k] = acc.scale(&Rational::new(1.into(), (k as i64).into()));
        }
        Ok(Self::new(e, self.order))
    }

    /// `self ∘ inner`, truncated at the smaller order.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order.min(inner.order);
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse, solved one coefficient at a time.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order == 0 || self.coeffs[1].is_zero() {
            return Err(Error::NotADeltaIndicator);
        }
        let lead = self.coeffs[1].as_constant().ok_or(Error::NonScalarLeadingCoefficient)?;
        let inv_lead = Rational::one() / lead;
        let mut g = Self::zero(self.order);
        g.coeffs[1] = MultiPoly::constant(inv_lead.clone());
        for k in 2..=self.order {
            // with g_k still zero, [t^k] f(g) = -c_1 g_k
            let partial = self.truncate(k).compose(&g.truncate(k))?;
            g.coeffs[k] = -partial.coeffs[k].scale(&inv_lead);
        }
        Ok(g)
    }

    /// `f(0) = 0` with a nonzero scalar linear coefficient.
    pub fn check_delta_indicator(&self) -> Result<()> {
        if !self.coeffs[0].is_zero() || self.order == 0 || self.coeffs[1].is_zero() {
            return Err(Error::NotADeltaIndicator);
        }
        match self.coeffs[1].as_constant() {
            Some(c) if !c.is_zero() => Ok(()),
            _ => Err(Error::NonScalarLeadingCoefficient),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let tk = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if k == 0 {
                parts.push(format!("({c})"));
            } else {
                parts.push(format!("({c})*{tk}"));
            }
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O(t^{})", parts.join(" + "), self.order + 1)
    }
}

impl Default for TruncatedSeries {
    fn default() -> Self {
        Self::zero(12)
    }
}
