//! The partition lattice Π_n: enumeration, refinement order, interval
//! classes, the zeta-type weight `w(π, σ)` and its convolution inverse, and
//! the two weight enumerators built from them.
//!
//! The weight `w_1` is fixed to 1 throughout, so no `W(1)` variable ever
//! appears in the output.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{big_rat, Monomial, MultiPoly, VarId};

/// Largest ground set `partitions_of` and the zeta enumerator accept.
pub const PARTITION_LIMIT: usize = 12;
/// Largest ground set for Möbius computations over the whole lattice.
pub const MOBIUS_LIMIT: usize = 8;

/// A set partition of `{1..n}` in canonical form: blocks sorted internally
/// and ordered by their least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    /// Restricted growth string, 0-based: `labels[i]` is the block of `i + 1`.
    labels: Vec<u8>,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and canonicalizes an arbitrary block list over `{1..n}`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut owner = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Invalid("empty block".into()));
            }
            for &e in block {
                if e == 0 || e > n {
                    return Err(Error::Invalid(format!("element {e} outside [1, {n}]")));
                }
                if owner[e - 1] != usize::MAX {
                    return Err(Error::Invalid(format!("element {e} appears twice")));
                }
                owner[e - 1] = b;
            }
        }
        if owner.contains(&usize::MAX) {
            return Err(Error::Invalid("blocks do not cover the ground set".into()));
        }
        Ok(Self::from_owner(&owner))
    }

    fn from_owner(owner: &[usize]) -> Self {
        let mut relabel: HashMap<usize, u8> = HashMap::new();
        let labels: Vec<u8> = owner
            .iter()
            .map(|o| {
                let next = relabel.len() as u8;
                *relabel.entry(*o).or_insert(next)
            })
            .collect();
        Self::from_labels(labels)
    }

    fn from_labels(labels: Vec<u8>) -> Self {
        let k = labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); k];
        for (i, &l) in labels.iter().enumerate() {
            blocks[l as usize].push(i + 1);
        }
        SetPartition { labels, blocks }
    }

    /// From a 1-based restricted growth string such as `[1, 2, 1, 1, 1, 3, 3, 3]`.
    pub fn from_rgs(rgs: &[usize]) -> Result<Self> {
        let mut max = 0;
        for &r in rgs {
            if r == 0 || r > max + 1 {
                return Err(Error::Parse(format!("not a restricted growth string: {rgs:?}")));
            }
            max = max.max(r);
        }
        Ok(Self::from_labels(rgs.iter().map(|&r| (r - 1) as u8).collect()))
    }

    /// 1-based restricted growth string.
    pub fn rgs(&self) -> Vec<usize> {
        self.labels.iter().map(|&l| l as usize + 1).collect()
    }

    /// The bottom element: all singletons.
    pub fn finest(n: usize) -> Self {
        Self::from_labels((0..n as u8).collect())
    }

    /// The top element: a single block.
    pub fn coarsest(n: usize) -> Self {
        Self::from_labels(vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing `element` (1-based element).
    pub fn block_of(&self, element: usize) -> usize {
        self.labels[element - 1] as usize
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// `w(0̂, π) = Π_B w_{|B|}` with `w_1 = 1`.
    pub fn bottom_weight(&self) -> MultiPoly {
        weight_monomial(self.block_sizes().into_iter())
    }

    fn le(&self, other: &SetPartition) -> bool {
        self.blocks.iter().all(|b| {
            let target = other.labels[b[0] - 1];
            b.iter().all(|&e| other.labels[e - 1] == target)
        })
    }

    /// Number of `self`-blocks inside each block of `coarser`.
    fn induced_counts(&self, coarser: &SetPartition) -> Vec<usize> {
        let mut counts = vec![0; coarser.num_blocks()];
        for b in &self.blocks {
            counts[coarser.labels[b[0] - 1] as usize] += 1;
        }
        counts
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rgs().iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rgs = s
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rgs(&rgs)
    }
}

/// The class `λ` of an interval `(π, σ)`: `lambda[i-1]` counts the blocks of
/// `σ/π` of size `i`, for `1 ≤ i ≤ |π|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionClass {
    pub lambda: Vec<usize>,
}

impl PartitionClass {
    /// `w_1^{λ_1} w_2^{λ_2} ⋯` with `w_1 = 1`.
    pub fn zeta_weight(&self) -> MultiPoly {
        let pairs = self
            .lambda
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &l)| l > 0)
            .map(|(i, &l)| (VarId::w(i as u32 + 1), l as u32));
        MultiPoly::term(big_rat(BigInt::from(1)), Monomial::from_pairs(pairs))
    }
}

fn weight_monomial(sizes: impl Iterator<Item = usize>) -> MultiPoly {
    let pairs = sizes.filter(|&s| s >= 2).map(|s| (VarId::w(s as u32), 1));
    MultiPoly::term(big_rat(BigInt::from(1)), Monomial::from_pairs(pairs))
}

fn check_limit(n: usize, limit: usize, what: &'static str) -> Result<()> {
    if n > limit {
        return Err(Error::SizeLimitExceeded { what, size: n as u128, limit: limit as u128 });
    }
    Ok(())
}

/// Visits every partition of `{1..n}` in restricted-growth-string
/// lexicographic order, passing the 0-based label array.
pub fn for_each_rgs(n: usize, mut visit: impl FnMut(&[u8])) {
    if n == 0 {
        visit(&[]);
        return;
    }
    let mut labels = vec![0u8; n];
    // prefix maxima: max[i] = max(labels[..i])
    let mut max = vec![0u8; n];
    loop {
        visit(&labels);
        // find rightmost position that can be incremented
        let mut i = n - 1;
        loop {
            if i == 0 {
                return;
            }
            if labels[i] <= max[i] {
                labels[i] += 1;
                break;
            }
            i -= 1;
        }
        for j in i + 1..n {
            labels[j] = 0;
            max[j] = max[j - 1].max(labels[j - 1]);
        }
    }
}

/// All partitions of `{1..n}`, in restricted-growth-string lexicographic order.
pub fn partitions_of(n: usize) -> Result<Vec<SetPartition>> {
    if n == 0 {
        return Err(Error::Invalid("ground set must be nonempty".into()));
    }
    check_limit(n, PARTITION_LIMIT, "partition lattice")?;
    let mut out = Vec::new();
    for_each_rgs(n, |l| out.push(SetPartition::from_labels(l.to_vec())));
    Ok(out)
}

/// `π ≤ σ` in the refinement order.
pub fn refines(pi: &SetPartition, sigma: &SetPartition) -> Result<bool> {
    if pi.n() != sigma.n() {
        return Err(Error::GroundSetMismatch { left: pi.n(), right: sigma.n() });
    }
    Ok(pi.le(sigma))
}

fn ensure_refines(pi: &SetPartition, sigma: &SetPartition) -> Result<()> {
    if refines(pi, sigma)? {
        Ok(())
    } else {
        Err(Error::NotRefinement)
    }
}

/// Class of the interval `(π, σ)`.
pub fn induced_class(pi: &SetPartition, sigma: &SetPartition) -> Result<PartitionClass> {
    ensure_refines(pi, sigma)?;
    let mut lambda = vec![0; pi.num_blocks()];
    for c in pi.induced_counts(sigma) {
        lambda[c - 1] += 1;
    }
    Ok(PartitionClass { lambda })
}

/// The zeta-type function `w(π, σ)`.
pub fn zeta_type(pi: &SetPartition, sigma: &SetPartition) -> Result<MultiPoly> {
    ensure_refines(pi, sigma)?;
    Ok(weight_monomial(pi.induced_counts(sigma).into_iter()))
}

/// All `τ` with `π ≤ τ ≤ σ`, assuming `π ≤ σ`.
fn interval(pi: &SetPartition, sigma: &SetPartition) -> Vec<SetPartition> {
    // π-blocks grouped by the σ-block containing them
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); sigma.num_blocks()];
    for (idx, b) in pi.blocks.iter().enumerate() {
        groups[sigma.labels[b[0] - 1] as usize].push(idx);
    }
    let group_parts: Vec<Vec<Vec<u8>>> = groups
        .iter()
        .map(|g| {
            let mut v = Vec::new();
            for_each_rgs(g.len(), |l| v.push(l.to_vec()));
            v
        })
        .collect();

    let mut out = Vec::new();
    let mut choice = vec![0usize; groups.len()];
    loop {
        // owner of each π-block: (group, sub-block) flattened
        let mut owner = vec![0usize; pi.n()];
        for (g, members) in groups.iter().enumerate() {
            let labels = &group_parts[g][choice[g]];
            for (pos, &blk) in members.iter().enumerate() {
                let id = g * pi.n() + labels[pos] as usize;
                for &e in &pi.blocks[blk] {
                    owner[e - 1] = id;
                }
            }
        }
        out.push(SetPartition::from_owner(&owner));

        let mut g = 0;
        loop {
            if g == groups.len() {
                return out;
            }
            choice[g] += 1;
            if choice[g] < group_parts[g].len() {
                break;
            }
            choice[g] = 0;
            g += 1;
        }
    }
}

/// Memo table for the Möbius-type function, keyed by canonical pairs.
///
/// Values are filled by the defining recursion
/// `μ(π, σ) = -Σ_{π ≤ τ < σ} μ(π, τ) w(τ, σ)` over the interval itself.
#[derive(Debug, Default, Clone)]
pub struct MobiusTable {
    memo: HashMap<(SetPartition, SetPartition), MultiPoly>,
}

impl MobiusTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn mobius(&mut self, pi: &SetPartition, sigma: &SetPartition) -> Result<MultiPoly> {
        ensure_refines(pi, sigma)?;
        let key = (pi.clone(), sigma.clone());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        check_limit(pi.num_blocks(), MOBIUS_LIMIT, "Möbius interval")?;
        let mut elems = interval(pi, sigma);
        // finer elements first, so every ρ < τ is done before τ
        elems.sort_by(|a, b| b.num_blocks().cmp(&a.num_blocks()).then_with(|| a.cmp(b)));
        for (idx, tau) in elems.iter().enumerate() {
            let k = (pi.clone(), tau.clone());
            if self.memo.contains_key(&k) {
                continue;
            }
            let value = if tau == pi {
                MultiPoly::one()
            } else {
                let mut acc = MultiPoly::zero();
                for rho in &elems[..idx] {
                    if rho.num_blocks() > tau.num_blocks() && rho.le(tau) {
                        let mu = &self.memo[&(pi.clone(), rho.clone())];
                        acc += &(mu * &weight_monomial(rho.induced_counts(tau).into_iter()));
                    }
                }
                -acc
            };
            self.memo.insert(k, value);
        }
        Ok(self.memo[&key].clone())
    }
}

/// The Möbius-type function `μ^w(π, σ)`, from a fresh memo table.
pub fn mobius_type(pi: &SetPartition, sigma: &SetPartition) -> Result<MultiPoly> {
    MobiusTable::new().mobius(pi, sigma)
}

/// `a_n(x; w) = Σ_{π ∈ Π_n} w(0̂, π) x^{|π|}`, with `a_0 = 1`.
pub fn zeta_enumerator(n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    check_limit(n, PARTITION_LIMIT, "partition lattice")?;
    // tally partitions by sorted block-size profile
    let mut tally: HashMap<Vec<usize>, u64> = HashMap::new();
    for_each_rgs(n, |labels| {
        let k = labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        let mut sizes = vec![0usize; k];
        for &l in labels {
            sizes[l as usize] += 1;
        }
        sizes.sort_unstable();
        *tally.entry(sizes).or_default() += 1;
    });
    let x = MultiPoly::x();
    let mut out = MultiPoly::zero();
    for (sizes, count) in tally {
        let k = sizes.len() as u32;
        let term = &weight_monomial(sizes.into_iter()) * &x.pow(k);
        out += &term.scale(&big_rat(BigInt::from(count)));
    }
    Ok(out)
}

/// `b_n(x; w) = Σ_{π ∈ Π_n} μ^w(0̂, π) x^{|π|}`, with `b_0 = 1`.
pub fn mobius_enumerator(n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    check_limit(n, MOBIUS_LIMIT, "Möbius enumerator")?;
    let bottom = SetPartition::finest(n);
    let mut table = MobiusTable::new();
    table.mobius(&bottom, &SetPartition::coarsest(n))?;
    let x = MultiPoly::x();
    let mut out = MultiPoly::zero();
    for pi in partitions_of(n)? {
        let mu = table.mobius(&bottom, &pi)?;
        out += &(&mu * &x.pow(pi.num_blocks() as u32));
    }
    Ok(out)
}
