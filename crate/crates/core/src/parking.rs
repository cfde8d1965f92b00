//! Vector parking functions and block-labeled parking counts, all by
//! exhaustive enumeration.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::goncarov::Grid;
use crate::lattice::{partitions_of, zeta_enumerator, SetPartition};
use crate::operator::Verdict;
use crate::poly::{big_rat, binomial, MultiPoly, VarId};

/// Largest number of sequences or labelings any single count will visit.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

/// Nondecreasing positive bounds `u_1 ≤ ... ≤ u_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParkingVector {
    u: Vec<u64>,
}

impl ParkingVector {
    pub fn new(u: Vec<u64>) -> Result<Self> {
        if u.first() == Some(&0) {
            return Err(Error::Invalid("parking bounds must be positive".into()));
        }
        if u.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invalid("parking bounds must be nondecreasing".into()));
        }
        Ok(ParkingVector { u })
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    pub fn bounds(&self) -> &[u64] {
        &self.u
    }

    /// The first `len` bounds.
    pub fn prefix(&self, len: usize) -> Result<Self> {
        if len > self.len() {
            return Err(Error::LengthMismatch { left: len, right: self.len() });
        }
        Ok(ParkingVector { u: self.u[..len].to_vec() })
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.u.windows(2).all(|w| w[0] < w[1])
    }

    /// The grid `z_i = u_{i+1}`.
    pub fn to_grid(&self) -> Grid {
        Grid::new(self.u.iter().map(|&v| MultiPoly::constant(big_rat(v.into()))).collect())
    }

    fn largest(&self) -> u64 {
        self.u.last().copied().unwrap_or(0)
    }
}

/// How blocks may share labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LabelRule {
    Any,
    /// Distinct blocks receive distinct labels.
    Injective,
}

/// Sorted sequence satisfies `x_(i) ≤ u_i`.
pub fn is_u_parking(seq: &[u64], u: &ParkingVector) -> Result<bool> {
    if seq.len() != u.len() {
        return Err(Error::LengthMismatch { left: seq.len(), right: u.len() });
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    Ok(sorted.iter().zip(&u.u).all(|(x, b)| *x >= 1 && x <= b))
}

fn check_budget(what: &'static str, base: u64, exponent: usize) -> Result<()> {
    let size = (base as u128).checked_pow(exponent as u32).unwrap_or(u128::MAX);
    if size > ENUMERATION_LIMIT {
        return Err(Error::SizeLimitExceeded { what, size, limit: ENUMERATION_LIMIT });
    }
    Ok(())
}

/// Number of `u`-parking functions of length `n`, over all of `{1..u_n}^n`.
pub fn count_parking(n: usize, u: &ParkingVector) -> Result<u64> {
    if n != u.len() {
        return Err(Error::LengthMismatch { left: n, right: u.len() });
    }
    let m = u.largest();
    check_budget("parking sequences", m, n)?;
    let mut seq = vec![1u64; n];
    let mut count = 0;
    loop {
        if is_u_parking(&seq, u)? {
            count += 1;
        }
        if !odometer(&mut seq, m) {
            return Ok(count);
        }
    }
}

/// Advances `digits` through `{1..m}^k`; false once exhausted.
fn odometer(digits: &mut [u64], m: u64) -> bool {
    for d in digits.iter_mut().rev() {
        if *d < m {
            *d += 1;
            return true;
        }
        *d = 1;
    }
    false
}

/// Labelings of blocks of the given sizes by `{1..u_n}` whose induced list is
/// `u`-parking.
fn count_block_labelings(sizes: &[usize], u: &ParkingVector, rule: LabelRule) -> Result<u64> {
    let m = u.largest();
    let k = sizes.len();
    if k == 0 {
        return Ok(1);
    }
    check_budget("block labelings", m, k)?;
    let mut labels = vec![1u64; k];
    let mut hits = vec![0usize; m as usize + 1];
    let mut count = 0;
    loop {
        let admissible = match rule {
            LabelRule::Any => true,
            LabelRule::Injective => {
                let mut seen = labels.clone();
                seen.sort_unstable();
                seen.windows(2).all(|w| w[0] != w[1])
            }
        };
        if admissible {
            hits.iter_mut().for_each(|h| *h = 0);
            for (&l, &s) in labels.iter().zip(sizes) {
                hits[l as usize] += s;
            }
            // at least i entries must be ≤ u_i
            let mut cumulative = vec![0usize; m as usize + 1];
            for j in 1..=m as usize {
                cumulative[j] = cumulative[j - 1] + hits[j];
            }
            if u.u.iter().enumerate().all(|(i, &b)| cumulative[b as usize] > i) {
                count += 1;
            }
        }
        if !odometer(&mut labels, m) {
            return Ok(count);
        }
    }
}

/// `PF_π(Z)`: labelings `f: Block(π) → {1..z_{n-1}}` with `f_π` parking.
pub fn pf_partition(pi: &SetPartition, zvec: &ParkingVector) -> Result<u64> {
    pf_partition_with(pi, zvec, LabelRule::Any)
}

pub fn pf_partition_with(pi: &SetPartition, zvec: &ParkingVector, rule: LabelRule) -> Result<u64> {
    if pi.n() != zvec.len() {
        return Err(Error::LengthMismatch { left: pi.n(), right: zvec.len() });
    }
    count_block_labelings(&pi.block_sizes(), zvec, rule)
}

/// `Σ_{π ∈ Π_n} weight(π) PF_π(Z)` over the first `n` bounds of `zvec`.
///
/// `PF_π` depends only on the multiset of block sizes, so each size profile
/// is counted once.
pub fn weighted_pf_with(
    n: usize,
    zvec: &ParkingVector,
    rule: LabelRule,
    mut weight: impl FnMut(&SetPartition) -> MultiPoly,
) -> Result<MultiPoly> {
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let u = zvec.prefix(n)?;
    let partitions = partitions_of(n)?;
    let mut profiles: HashMap<Vec<usize>, u64> = HashMap::new();
    let mut total: u128 = 0;
    for pi in &partitions {
        let mut sizes = pi.block_sizes();
        sizes.sort_unstable();
        if let Entry::Vacant(slot) = profiles.entry(sizes) {
            total += (u.largest() as u128).saturating_pow(slot.key().len() as u32);
            if total > ENUMERATION_LIMIT {
                return Err(Error::SizeLimitExceeded {
                    what: "block labelings",
                    size: total,
                    limit: ENUMERATION_LIMIT,
                });
            }
            let count = count_block_labelings(slot.key(), &u, rule)?;
            slot.insert(count);
        }
    }
    let mut out = MultiPoly::zero();
    for pi in &partitions {
        let mut sizes = pi.block_sizes();
        sizes.sort_unstable();
        let count = profiles[&sizes];
        if count != 0 {
            out += &weight(pi).scale(&big_rat(count.into()));
        }
    }
    Ok(out)
}

/// `Σ_{π ∈ Π_n} w(0̂, π) PF_π(Z)`.
pub fn weighted_pf_enumerator(n: usize, zvec: &ParkingVector) -> Result<MultiPoly> {
    weighted_pf_with(n, zvec, LabelRule::Any, SetPartition::bottom_weight)
}

/// Checks `a_n(x; w) = Σ_i C(n, i) a_{n-i}(x - z_i; w) Σ_{π ∈ Π_i} w(0̂, π) PF_π(Z)`
/// at integer `x`.
///
/// Besides the polynomial identity, every weighted pair `(π, f)` with
/// `f: Block(π) → {1..x}` is split by the length `i` of its longest parking
/// prefix, and each group is compared with its summand.
pub fn verify_decomposition(n: usize, zvec: &ParkingVector, x: u64) -> Result<Verdict> {
    let u = zvec.prefix(n)?;
    if !u.is_strictly_increasing() || (n > 0 && u.largest() >= x) {
        return Err(Error::HypothesisViolated(format!(
            "need z_0 < ... < z_{{n-1}} < x, got z = {:?}, x = {x}",
            u.bounds()
        )));
    }
    let at = |v: i128| MultiPoly::constant(big_rat(v.into()));
    let summands: Vec<MultiPoly> = (0..=n)
        .map(|i| {
            let shifted = x as i128 - if i < n { u.u[i] as i128 } else { 0 };
            let a = zeta_enumerator(n - i)?.subs(VarId::X, &at(shifted));
            let pf = weighted_pf_enumerator(i, &u)?;
            Ok((a * pf).scale(&big_rat(binomial(n, i))))
        })
        .collect::<Result<_>>()?;
    let lhs = zeta_enumerator(n)?.subs(VarId::X, &at(x as i128));
    let total: MultiPoly = summands.iter().cloned().sum();
    if let Some(v) = Verdict::check(n, lhs.clone() - total) {
        return Ok(v);
    }
    if n == 0 {
        return Ok(Verdict::Holds);
    }

    check_budget("labeled partitions", x, n)?;
    let mut groups = vec![MultiPoly::zero(); n + 1];
    for pi in partitions_of(n)? {
        let w = pi.bottom_weight();
        let sizes = pi.block_sizes();
        let mut labels = vec![1u64; sizes.len()];
        loop {
            let mut seq: Vec<u64> = (1..=n).map(|e| labels[pi.block_of(e)]).collect();
            seq.sort_unstable();
            let i = seq.iter().zip(&u.u).take_while(|(v, b)| v <= b).count();
            groups[i] += &w;
            if !odometer(&mut labels, x) {
                break;
            }
        }
    }
    for (i, (group, summand)) in groups.iter().zip(&summands).enumerate() {
        if group != summand {
            return Err(Error::InternalCrossCheckFailure(format!(
                "decomposition class i = {i}: enumerated {group}, expected {summand}"
            )));
        }
    }
    Ok(Verdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goncarov::goncarov_constant_recurrence;
    use crate::operator::PolySequence;
    use crate::poly::rat;

    fn pv(u: &[u64]) -> ParkingVector {
        ParkingVector::new(u.to_vec()).unwrap()
    }

    fn w(i: u32) -> MultiPoly {
        MultiPoly::var(VarId::w(i))
    }

    #[test]
    fn parking_examples() {
        let u = pv(&[1, 2, 3, 4]);
        assert!(is_u_parking(&[2, 1, 4, 1], &u).unwrap());
        assert!(!is_u_parking(&[2, 2, 3, 4], &u).unwrap());
        assert!(is_u_parking(&[1], &pv(&[1])).unwrap());
        assert_eq!(is_u_parking(&[1, 1], &pv(&[1])), Err(Error::LengthMismatch { left: 2, right: 1 }));
    }

    #[test]
    fn parking_vector_validation() {
        assert!(ParkingVector::new(vec![0, 1]).is_err());
        assert!(ParkingVector::new(vec![2, 1]).is_err());
        assert!(ParkingVector::new(vec![1, 1, 2]).is_ok());
    }

    #[test]
    fn classical_counts() {
        assert_eq!(count_parking(2, &pv(&[1, 2])).unwrap(), 3);
        assert_eq!(count_parking(3, &pv(&[1, 2, 3])).unwrap(), 16);
        assert_eq!(count_parking(2, &pv(&[2, 2])).unwrap(), 4);
        for n in 1..=6u64 {
            let u: Vec<u64> = (1..=n).collect();
            assert_eq!(count_parking(n as usize, &pv(&u)).unwrap(), (n + 1).pow(n as u32 - 1));
        }
        assert!(matches!(count_parking(8, &pv(&[10; 8])), Err(Error::SizeLimitExceeded { .. })));
    }

    #[test]
    fn block_counts() {
        let one_block = SetPartition::coarsest(2);
        let singletons = SetPartition::finest(2);
        for (z0, z1) in [(1, 2), (2, 5), (3, 3), (4, 9)] {
            let u = pv(&[z0, z1]);
            assert_eq!(pf_partition(&one_block, &u).unwrap(), z0);
            assert_eq!(pf_partition(&singletons, &u).unwrap(), 2 * z0 * z1 - z0 * z0);
        }
        assert_eq!(pf_partition(&SetPartition::finest(3), &pv(&[1, 2, 3])).unwrap(), 16);
        assert!(matches!(pf_partition(&one_block, &pv(&[1])), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn injective_block_counts() {
        // distinct labels in {1..z_1} with min ≤ z_0
        let u = pv(&[2, 5]);
        assert_eq!(pf_partition_with(&SetPartition::finest(2), &u, LabelRule::Injective).unwrap(), 14);
        assert_eq!(pf_partition_with(&SetPartition::coarsest(2), &u, LabelRule::Injective).unwrap(), 2);
    }

    #[test]
    fn weighted_examples() {
        assert_eq!(weighted_pf_enumerator(2, &pv(&[1, 2])).unwrap(), &MultiPoly::int(3) + &w(2));
        assert_eq!(weighted_pf_enumerator(1, &pv(&[7])).unwrap(), MultiPoly::int(7));
        assert_eq!(weighted_pf_enumerator(0, &pv(&[7])).unwrap(), MultiPoly::one());
        let e = weighted_pf_enumerator(3, &pv(&[1, 2, 3])).unwrap();
        let zero: HashMap<VarId, MultiPoly> = (2..=3).map(|i| (VarId::w(i), MultiPoly::zero())).collect();
        assert_eq!(e.substitute(&zero), MultiPoly::int(16));
    }

    #[test]
    fn weighted_matches_goncarov_constant() {
        let p = PolySequence::try_from_fn(4, zeta_enumerator).unwrap();
        for u in [[1, 2, 3, 4], [1, 1, 2, 4], [2, 3, 5, 7]] {
            let zvec = pv(&u);
            for n in 1..=4 {
                assert_eq!(
                    goncarov_constant_recurrence(&p, &zvec.to_grid(), n).unwrap(),
                    weighted_pf_enumerator(n, &zvec).unwrap(),
                    "u = {u:?}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        assert!(verify_decomposition(0, &pv(&[]), 1).unwrap().holds());
        assert!(verify_decomposition(2, &pv(&[1, 2]), 3).unwrap().holds());
        assert!(verify_decomposition(4, &pv(&[1, 2, 3, 4]), 6).unwrap().holds());
        assert!(verify_decomposition(3, &pv(&[2, 3, 5]), 7).unwrap().holds());
        assert!(matches!(verify_decomposition(2, &pv(&[1, 1]), 3), Err(Error::HypothesisViolated(_))));
        assert!(matches!(verify_decomposition(2, &pv(&[1, 2]), 2), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn left_side_value() {
        // a_2(3) = 9 + 3 w_2
        let a = zeta_enumerator(2).unwrap().subs(VarId::X, &MultiPoly::int(3));
        assert_eq!(a, &MultiPoly::int(9) + &w(2).scale(&rat(3)));
    }
}
