//! Generalized Gončarov polynomials.
//!
//! The sequence `t_n(x; Z)` attached to a sequence of binomial type `{p_n}`
//! and a grid `Z` is built from the triangular recurrence
//!
//! ```text
//! t_n(x) = p_n(x) - Σ_{i<n} C(n, i) p_{n-i}(z_i) t_i(x),
//! ```
//!
//! which never divides by a leading coefficient and so also covers degenerate
//! sequences with `deg p_n < n`. The interpolation conditions
//! `ε_{z_i} Δ^i t_n = n! δ_{in}` are exposed only as a check.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::operator::{apply_operator, binomial_type_check, PolySequence, Verdict};
use crate::poly::{big_rat, binomial, factorial, MultiPoly, VarId};
use crate::series::TruncatedSeries;

/// Largest `n` for which ordered partitions are enumerated.
pub const ORDERED_PARTITION_LIMIT: usize = 8;

/// Interpolation grid `z_0, z_1, ...`; nodes are arbitrary polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    nodes: Vec<MultiPoly>,
}

impl Grid {
    pub fn new(nodes: Vec<MultiPoly>) -> Self {
        Grid { nodes }
    }

    /// `z_0, ..., z_{len-1}` as free variables.
    pub fn symbolic(len: usize) -> Self {
        Grid::new((0..len).map(|i| MultiPoly::var(VarId::z(i as u32))).collect())
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Grid::new(values.iter().map(|&v| MultiPoly::int(v)).collect())
    }

    /// `z_i = a + b i`.
    pub fn arithmetic(a: &MultiPoly, b: &MultiPoly, len: usize) -> Self {
        Grid::new((0..len).map(|i| a + &b.scale(&crate::poly::rat(i as i64))).collect())
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[MultiPoly] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &MultiPoly {
        &self.nodes[i]
    }

    /// `-Z`.
    pub fn negate(&self) -> Self {
        Grid::new(self.nodes.iter().map(|z| -z).collect())
    }

    /// `Z + η`.
    pub fn shift(&self, eta: &MultiPoly) -> Self {
        Grid::new(self.nodes.iter().map(|z| z + eta).collect())
    }

    /// `x - Z`, for any expression `x`.
    pub fn reflect(&self, x: &MultiPoly) -> Self {
        Grid::new(self.nodes.iter().map(|z| x - z).collect())
    }

    pub fn truncate(&self, len: usize) -> Self {
        Grid::new(self.nodes[..len.min(self.len())].to_vec())
    }

    pub(crate) fn require(&self, need: usize) -> Result<()> {
        if self.len() < need {
            return Err(Error::GridTooShort { have: self.len(), need });
        }
        Ok(())
    }
}

/// Gončarov polynomials `t_0..t_{n_max}` of `p` on the grid `Z`.
pub fn goncarov_sequence(p: &PolySequence, grid: &Grid, n_max: usize) -> Result<PolySequence> {
    grid.require(n_max)?;
    p.require(n_max)?;
    // values[i][k] = p_k(z_i)
    let values: Vec<Vec<MultiPoly>> =
        (0..n_max).map(|i| (0..=n_max - i).map(|k| p.eval(k, grid.node(i))).collect()).collect();
    let mut t: Vec<MultiPoly> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut tn = p[n].clone();
        for (i, ti) in t.iter().enumerate() {
            let c = &values[i][n - i];
            if c.is_zero() || ti.is_zero() {
                continue;
            }
            tn -= &(c * ti).scale(&big_rat(binomial(n, i)));
        }
        t.push(tn);
    }
    PolySequence::new(t)
}

/// `t_n(0; -Z)` computed by the recurrence.
pub fn goncarov_constant_recurrence(p: &PolySequence, grid: &Grid, n: usize) -> Result<MultiPoly> {
    let t = goncarov_sequence(p, &grid.negate(), n)?;
    Ok(t[n].subs(VarId::X, &MultiPoly::zero()))
}

/// An ordered set partition `(B_1, ..., B_k)` of `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block sizes `b_1, ..., b_k`.
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Partial sums `s_0 = 0, s_1, ..., s_k`.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut s = vec![0];
        for b in &self.blocks {
            s.push(s.last().unwrap() + b.len());
        }
        s
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All ordered partitions of `{1..n}`: set partitions in restricted growth
/// order, each followed through its block permutations in lexicographic order.
pub fn ordered_partitions(n: usize) -> Result<Vec<OrderedPartition>> {
    if n == 0 {
        return Err(Error::Invalid("ground set must be nonempty".into()));
    }
    if n > ORDERED_PARTITION_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "ordered partitions",
            size: n as u128,
            limit: ORDERED_PARTITION_LIMIT as u128,
        });
    }
    let mut out = Vec::new();
    for pi in crate::lattice::partitions_of(n)? {
        let mut order: Vec<usize> = (0..pi.num_blocks()).collect();
        loop {
            out.push(OrderedPartition { blocks: order.iter().map(|&b| pi.blocks()[b].clone()).collect() });
            if !next_permutation(&mut order) {
                break;
            }
        }
    }
    Ok(out)
}

/// `t_n(0; -Z) = Σ_{ρ ∈ R_n} (-1)^{|ρ|} Π_{i<k} p_{b_{i+1}}(-z_{s_i})`.
pub fn goncarov_constant_ordered_partitions(p: &PolySequence, grid: &Grid, n: usize) -> Result<MultiPoly> {
    grid.require(n)?;
    p.require(n)?;
    // the summand depends only on the composition (b_1, ..., b_k)
    let mut tally: HashMap<Vec<usize>, u64> = HashMap::new();
    for rho in ordered_partitions(n)? {
        *tally.entry(rho.sizes()).or_default() += 1;
    }
    let mut compositions: Vec<_> = tally.into_iter().collect();
    compositions.sort();

    let neg = grid.negate();
    let mut out = MultiPoly::zero();
    for (sizes, count) in compositions {
        let mut term = MultiPoly::one();
        let mut s = 0;
        for &b in &sizes {
            term = &term * &p.eval(b, neg.node(s));
            s += b;
        }
        let sign: i64 = if sizes.len() % 2 == 0 { 1 } else { -1 };
        out += &term.scale(&big_rat(BigInt::from(count) * sign));
    }
    Ok(out)
}

/// Checks `t_n(x + η; Z + η) = t_n(x; Z)` for `n ≤ n_max` on the fully
/// symbolic grid.
pub fn verify_shift_invariance(p: &PolySequence, n_max: usize) -> Result<Verdict> {
    if let Verdict::Fails { n, .. } = binomial_type_check(p, n_max)? {
        return Err(Error::NotBinomialType { n });
    }
    let eta = MultiPoly::var(VarId::Eta);
    let grid = Grid::symbolic(n_max);
    let t = goncarov_sequence(p, &grid, n_max)?;
    let shifted = goncarov_sequence(p, &grid.shift(&eta), n_max)?;
    let x_eta = &MultiPoly::x() + &eta;
    for n in 0..=n_max {
        let residual = shifted[n].subs(VarId::X, &x_eta) - &t[n];
        if let Some(v) = Verdict::check(n, residual) {
            return Ok(v);
        }
    }
    Ok(Verdict::Holds)
}

/// Checks the interpolation conditions `ε_{z_i} f(D)^i t_n = n! δ_{in}` for
/// `0 ≤ i ≤ n ≤ n_max`.
pub fn verify_biorthogonality(f: &TruncatedSeries, grid: &Grid, t: &PolySequence, n_max: usize) -> Result<Verdict> {
    f.check_delta_indicator().map_err(|_| Error::NotADeltaIndicator)?;
    grid.require(n_max + 1)?;
    t.require(n_max)?;
    let powers: Vec<TruncatedSeries> = (0..=n_max).map(|i| f.pow(i)).collect();
    for n in 0..=n_max {
        for (i, fi) in powers.iter().enumerate().take(n + 1) {
            let value = apply_operator(fi, &t[n])?.subs(VarId::X, grid.node(i));
            let expected = if i == n { MultiPoly::constant(big_rat(factorial(n))) } else { MultiPoly::zero() };
            if let Some(v) = Verdict::check(n, value - expected) {
                return Ok(v);
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Checks `p_n(x) = Σ_{i≤n} C(n, i) p_{n-i}(z_i) t_i(x)` for `n ≤ n_max`.
pub fn verify_reconstruction(p: &PolySequence, grid: &Grid, t: &PolySequence, n_max: usize) -> Result<Verdict> {
    grid.require(n_max + 1)?;
    p.require(n_max)?;
    t.require(n_max)?;
    for n in 0..=n_max {
        let mut residual = p[n].clone();
        for i in 0..=n {
            let c = p.eval(n - i, grid.node(i)).scale(&big_rat(binomial(n, i)));
            residual -= &(&c * &t[i]);
        }
        if let Some(v) = Verdict::check(n, residual) {
            return Ok(v);
        }
    }
    Ok(Verdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::zeta_enumerator;
    use crate::operator::zeta_indicator;
    use crate::poly::{rat, ratio};

    fn x() -> MultiPoly {
        MultiPoly::x()
    }
    fn z(i: u32) -> MultiPoly {
        MultiPoly::var(VarId::z(i))
    }
    fn w(i: u32) -> MultiPoly {
        MultiPoly::var(VarId::w(i))
    }
    fn zeta_seq(n: usize) -> PolySequence {
        PolySequence::try_from_fn(n, zeta_enumerator).unwrap()
    }

    /// Fubini numbers by `F(n) = Σ_{k≥1} C(n, k) F(n - k)`.
    fn fubini(n: usize) -> u64 {
        let mut f = vec![1u64];
        for m in 1..=n {
            let v = (1..=m).map(|k| binomial(m, k).to_string().parse::<u64>().unwrap() * f[m - k]).sum();
            f.push(v);
        }
        f[n]
    }

    #[test]
    fn recurrence_examples() {
        let t = goncarov_sequence(&zeta_seq(2), &Grid::symbolic(2), 2).unwrap();
        assert_eq!(t[0], MultiPoly::one());
        assert_eq!(t[1], x() - z(0));
        let expected =
            x().pow(2) + (w(2) - z(1).scale(&rat(2))) * x() + (z(0) * z(1)).scale(&rat(2)) - z(0).pow(2) - w(2) * z(0);
        assert_eq!(t[2], expected);

        let mono = goncarov_sequence(&PolySequence::monomials(5), &Grid::from_ints(&[0; 5]), 5).unwrap();
        assert_eq!(mono, PolySequence::monomials(5));
    }

    #[test]
    fn recurrence_errors() {
        assert_eq!(
            goncarov_sequence(&zeta_seq(3), &Grid::symbolic(2), 3),
            Err(Error::GridTooShort { have: 2, need: 3 })
        );
        assert!(matches!(goncarov_sequence(&zeta_seq(2), &Grid::symbolic(3), 3), Err(Error::SequenceTooShort { .. })));
    }

    #[test]
    fn ordered_partition_counts() {
        assert_eq!(ordered_partitions(1).unwrap().len(), 1);
        assert_eq!(ordered_partitions(2).unwrap().len(), 3);
        assert_eq!(ordered_partitions(4).unwrap().len(), 75);
        for n in 1..=7 {
            assert_eq!(ordered_partitions(n).unwrap().len() as u64, fubini(n));
        }
        assert!(matches!(ordered_partitions(9), Err(Error::SizeLimitExceeded { .. })));
        let rho = &ordered_partitions(3).unwrap()[1];
        assert_eq!(rho.partial_sums().last(), Some(&3));
    }

    #[test]
    fn ordered_partition_closed_forms() {
        let p = zeta_seq(3);
        let grid = Grid::symbolic(3);
        let pe = |k: usize, i: u32| p.eval(k, &-z(i));
        assert_eq!(goncarov_constant_ordered_partitions(&p, &grid, 1).unwrap(), -pe(1, 0));
        assert_eq!(
            goncarov_constant_ordered_partitions(&p, &grid, 2).unwrap(),
            (pe(1, 0) * pe(1, 1)).scale(&rat(2)) - pe(2, 0)
        );
        assert_eq!(
            goncarov_constant_ordered_partitions(&p, &grid, 3).unwrap(),
            -pe(3, 0) + (pe(2, 0) * pe(1, 2)).scale(&rat(3)) + (pe(1, 0) * pe(2, 1)).scale(&rat(3))
                - (pe(1, 0) * pe(1, 1) * pe(1, 2)).scale(&rat(6))
        );
    }

    #[test]
    fn closed_form_matches_recurrence() {
        let p = zeta_seq(5);
        let grid = Grid::symbolic(5);
        for n in 1..=5 {
            assert_eq!(
                goncarov_constant_ordered_partitions(&p, &grid, n).unwrap(),
                goncarov_constant_recurrence(&p, &grid, n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn shift_invariance() {
        assert!(verify_shift_invariance(&zeta_seq(4), 4).unwrap().holds());
        let bad = PolySequence::new(vec![MultiPoly::one(), x(), &x().pow(2) + &MultiPoly::one()]).unwrap();
        assert_eq!(verify_shift_invariance(&bad, 2), Err(Error::NotBinomialType { n: 2 }));
    }

    #[test]
    fn classical_biorthogonality() {
        let n = 4;
        for grid in [Grid::symbolic(n + 1), Grid::from_ints(&[3, -1, 4, 1, 5])] {
            let t = goncarov_sequence(&PolySequence::monomials(n), &grid, n).unwrap();
            assert!(verify_biorthogonality(&TruncatedSeries::t(n), &grid, &t, n).unwrap().holds());
            assert!(verify_reconstruction(&PolySequence::monomials(n), &grid, &t, n).unwrap().holds());
        }
        let grid = Grid::symbolic(1);
        let t = goncarov_sequence(&PolySequence::monomials(0), &grid, 0).unwrap();
        assert!(verify_biorthogonality(&TruncatedSeries::t(2), &grid, &t, 0).unwrap().holds());
    }

    #[test]
    fn weighted_biorthogonality() {
        let n = 3;
        let values = [ratio(1, 2), rat(-3), ratio(5, 7)];
        let assign: HashMap<VarId, MultiPoly> =
            values.iter().enumerate().map(|(i, v)| (VarId::w(i as u32 + 2), MultiPoly::constant(v.clone()))).collect();
        let g = zeta_indicator(n + 1);
        let f = TruncatedSeries::new(
            g.reversion().unwrap().coeffs().iter().map(|c| c.substitute(&assign)).collect(),
            n + 1,
        );
        let p = zeta_seq(n).substitute(&assign);
        let grid = Grid::symbolic(n + 1);
        let t = goncarov_sequence(&p, &grid, n).unwrap();
        assert!(verify_biorthogonality(&f, &grid, &t, n).unwrap().holds());
        // and the wrong operator is detected
        assert!(!verify_biorthogonality(&TruncatedSeries::t(n), &grid, &t, n).unwrap().holds());
    }

    #[test]
    fn reflected_grid_matches_negated_grid_at_zero() {
        let n = 4;
        let p = zeta_seq(n);
        let grid = Grid::symbolic(n);
        let at_zero = goncarov_sequence(&p, &grid.negate(), n).unwrap();
        let reflected = goncarov_sequence(&p, &grid.reflect(&x()), n).unwrap();
        for k in 0..=n {
            assert_eq!(at_zero[k].subs(VarId::X, &MultiPoly::zero()), reflected[k]);
        }
    }
}
