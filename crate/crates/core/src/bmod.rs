//! B-stable weight multisets: nilradicals, intersections and quotients, and
//! symmetric/wedge powers of their weight content.
//!
//! A `WeightMultiset` is the T-weight content of a B-module; no Lie-algebra
//! structure constants are tracked.  All multiplicities are exact big
//! integers and iteration order is lexicographic on fundamental coordinates.

use std::collections::BTreeMap;

use num::{BigInt, BigUint, One, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{ParabolicMarker, RootSystem, Weight};

/// Default cap on generated multiset sizes (total entries counted with
/// multiplicity).
pub const DEFAULT_SIZE_CAP: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightMultiset {
    entries: BTreeMap<Weight, BigUint>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        WeightMultiset {
            entries: BTreeMap::new(),
        }
    }

    pub fn singleton(w: Weight) -> Self {
        let mut m = WeightMultiset::new();
        m.insert(w, BigUint::one());
        m
    }

    pub fn from_weights<I: IntoIterator<Item = Weight>>(weights: I) -> Self {
        let mut m = WeightMultiset::new();
        for w in weights {
            m.insert(w, BigUint::one());
        }
        m
    }

    pub fn insert(&mut self, w: Weight, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.entries.entry(w).or_insert_with(BigUint::zero) += mult;
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigUint)> {
        self.entries.iter()
    }

    pub fn distinct_len(&self) -> usize {
        self.entries.len()
    }

    /// Total size counted with multiplicity.
    pub fn len(&self) -> BigUint {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, w: &Weight) -> BigUint {
        self.entries.get(w).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.entries.contains_key(w)
    }

    /// Multiset union (multiplicities add).
    pub fn union(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = self.clone();
        for (w, m) in other.iter() {
            out.insert(w.clone(), m.clone());
        }
        out
    }

    /// Multiset difference; panics if `other` is not contained in `self`.
    pub fn difference(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (w, m) in self.iter() {
            let sub = other.multiplicity(w);
            assert!(&sub <= m, "difference of non-contained multiset");
            let rem = m - sub;
            if !rem.is_zero() {
                out.entries.insert(w.clone(), rem);
            }
        }
        out
    }

    /// Shift every weight by `t`.
    pub fn translate(&self, t: &Weight) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (w, m) in self.iter() {
            out.insert(w.add(t), m.clone());
        }
        out
    }

    /// Pairwise sums with every weight of `other` (weight content of a
    /// tensor product of the two modules).
    pub fn tensor(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (w, m) in self.iter() {
            for (v, k) in other.iter() {
                out.insert(w.add(v), m * k);
            }
        }
        out
    }

    /// Flat list of (weight, multiplicity as i64 if small) for tests.
    pub fn weights(&self) -> Vec<Weight> {
        self.entries.keys().cloned().collect()
    }
}

impl FromIterator<Weight> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = Weight>>(iter: I) -> Self {
        WeightMultiset::from_weights(iter)
    }
}

/// Weights of the dual nilradical `u_P*`: positive roots with a positive
/// coefficient on some removed simple root, all with multiplicity one.
pub fn nilradical_weights(rs: &RootSystem, marker: &ParabolicMarker) -> Result<WeightMultiset> {
    marker.validate(rs.rank)?;
    let mut out = WeightMultiset::new();
    for root in &rs.positive_roots {
        if marker.removed.iter().any(|&i| root[i - 1] > 0) {
            out.insert(rs.root_to_fund(root)?, BigUint::one());
        }
    }
    Ok(out)
}

/// `V = u_P ∩ u_{P'}` and its complement `U = u_P \ V`, both as weight sets
/// of the dual modules.
pub fn split_intersection(
    rs: &RootSystem,
    p: &ParabolicMarker,
    p_prime: &ParabolicMarker,
) -> Result<(WeightMultiset, WeightMultiset)> {
    let up = nilradical_weights(rs, p)?;
    let up_prime = nilradical_weights(rs, p_prime)?;
    let mut v = WeightMultiset::new();
    let mut u = WeightMultiset::new();
    for (w, m) in up.iter() {
        if up_prime.contains(w) {
            v.insert(w.clone(), m.clone());
        } else {
            u.insert(w.clone(), m.clone());
        }
    }
    Ok((v, u))
}

/// Sub-multiset of weights `w` with `w ≥ θ` in the root order.  Only defined
/// for multisets whose weights lie in the root lattice.
pub fn threshold_submodule(
    rs: &RootSystem,
    context: &WeightMultiset,
    theta: &[i64],
) -> Result<WeightMultiset> {
    if !rs.is_positive_root(theta) {
        return Err(Error::NotARoot(format!("{:?}", theta)));
    }
    let mut out = WeightMultiset::new();
    for (w, m) in context.iter() {
        let coords = rs
            .fund_to_root_integral(w)
            .ok_or_else(|| Error::NotARoot(w.to_string()))?;
        if rs.root_geq(&coords, theta) {
            out.insert(w.clone(), m.clone());
        }
    }
    Ok(out)
}

/// Weights of `S^n M`, by a degree-recursive convolution: one generator at a
/// time, each multiplicity-counted occurrence contributing a geometric tower
/// up to degree `n`.
pub fn sym_power_weights(m: &WeightMultiset, n: usize, cap: usize) -> Result<WeightMultiset> {
    power_weights(m, n, cap, true)
}

/// Weights of `Λ^j M` (each occurrence used at most once).
pub fn wedge_power_weights(m: &WeightMultiset, j: usize, cap: usize) -> Result<WeightMultiset> {
    let dim = m.len();
    if BigUint::from(j) > dim {
        return Err(Error::WedgeDegreeOutOfRange {
            j,
            max: usize::try_from(dim).unwrap_or(usize::MAX),
        });
    }
    power_weights(m, j, cap, false)
}

fn power_weights(
    m: &WeightMultiset,
    degree: usize,
    cap: usize,
    symmetric: bool,
) -> Result<WeightMultiset> {
    let rank = m
        .iter()
        .next()
        .map(|(w, _)| w.rank())
        .unwrap_or(0);
    // table[d] = weights of degree-d part built from generators seen so far
    let mut table: Vec<BTreeMap<Weight, BigUint>> = vec![BTreeMap::new(); degree + 1];
    table[0].insert(Weight::zero(rank), BigUint::one());
    for (w, mult) in m.iter() {
        let copies = usize::try_from(mult).map_err(|_| Error::CapExceeded {
            size: usize::MAX,
            cap,
        })?;
        for _ in 0..copies {
            if symmetric {
                // ascending update keeps unbounded repetition of this generator
                for d in 1..=degree {
                    let lower: Vec<(Weight, BigUint)> = table[d - 1]
                        .iter()
                        .map(|(k, v)| (k.add(w), v.clone()))
                        .collect();
                    for (k, v) in lower {
                        *table[d].entry(k).or_insert_with(BigUint::zero) += v;
                    }
                }
            } else {
                // descending update uses this generator at most once
                for d in (1..=degree).rev() {
                    let lower: Vec<(Weight, BigUint)> = table[d - 1]
                        .iter()
                        .map(|(k, v)| (k.add(w), v.clone()))
                        .collect();
                    for (k, v) in lower {
                        *table[d].entry(k).or_insert_with(BigUint::zero) += v;
                    }
                }
            }
            let size: BigUint = table[degree].values().sum();
            if size > BigUint::from(cap) {
                return Err(Error::CapExceeded {
                    size: usize::try_from(&size).unwrap_or(usize::MAX),
                    cap,
                });
            }
        }
    }
    let mut out = WeightMultiset::new();
    for (w, v) in std::mem::take(&mut table[degree]) {
        out.insert(w, v);
    }
    Ok(out)
}

/// Binomial coefficient, exact.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn d(rank: usize) -> RootSystem {
        RootSystem::build(Family::D, rank).unwrap()
    }

    fn a(rank: usize) -> RootSystem {
        RootSystem::build(Family::A, rank).unwrap()
    }

    #[test]
    fn nilradical_sizes() {
        let rs = a(2);
        let u = nilradical_weights(&rs, &ParabolicMarker::new([1])).unwrap();
        assert_eq!(u.len(), BigUint::from(2u32));
        let alpha1 = rs.simple_root(1).unwrap();
        let theta = rs.root_to_fund(&[1, 1]).unwrap();
        assert!(u.contains(&alpha1));
        assert!(u.contains(&theta));

        let rs = d(5);
        let u = nilradical_weights(&rs, &ParabolicMarker::new([4])).unwrap();
        assert_eq!(u.len(), BigUint::from(10u32));

        let rs = d(6);
        let u = nilradical_weights(&rs, &ParabolicMarker::new([2, 6])).unwrap();
        assert_eq!(u.len(), BigUint::from(23u32));
    }

    #[test]
    fn nilradical_plus_levi_accounts_for_all_positive_roots() {
        let rs = d(6);
        for removed in [vec![2, 6], vec![3, 6], vec![1], vec![4, 5]] {
            let marker = ParabolicMarker::new(removed);
            let u = nilradical_weights(&rs, &marker).unwrap();
            let levi = rs.levi_positive_roots(&marker);
            assert_eq!(
                u.len() + BigUint::from(levi.len()),
                BigUint::from(rs.positive_roots.len())
            );
        }
    }

    #[test]
    fn split_intersection_d5() {
        let rs = d(5);
        let p = ParabolicMarker::new([4]);
        let p_prime = ParabolicMarker::new([5]);
        let (v, u) = split_intersection(&rs, &p, &p_prime).unwrap();
        assert_eq!(v.len(), BigUint::from(6u32));
        assert_eq!(u.len(), BigUint::from(4u32));
        // the k=1 and k=2l weights of U, in root coordinates
        assert!(u.contains(&rs.root_to_fund(&[1, 1, 1, 1, 0]).unwrap()));
        assert!(u.contains(&rs.root_to_fund(&[0, 0, 0, 1, 0]).unwrap()));
        // parts reunite to u_P*
        let up = nilradical_weights(&rs, &p).unwrap();
        assert_eq!(v.union(&u), up);
    }

    #[test]
    fn split_with_equal_markers_has_empty_complement() {
        let rs = d(6);
        let p = ParabolicMarker::new([3, 6]);
        let (_, u) = split_intersection(&rs, &p, &p).unwrap();
        assert!(u.is_empty());
    }

    #[test]
    fn threshold_examples_d5() {
        let rs = d(5);
        let all: WeightMultiset = rs
            .positive_roots
            .iter()
            .map(|r| rs.root_to_fund(r).unwrap())
            .collect();
        let v1 = threshold_submodule(&rs, &all, &[0, 1, 2, 1, 1]).unwrap();
        assert_eq!(v1.len(), BigUint::from(3u32));
        for coords in [[0, 1, 2, 1, 1], [1, 1, 2, 1, 1], [1, 2, 2, 1, 1]] {
            assert!(v1.contains(&rs.root_to_fund(&coords).unwrap()));
        }
        let v2 = threshold_submodule(&rs, &all, &[1, 2, 2, 1, 1]).unwrap();
        assert_eq!(v2.len(), BigUint::from(1u32));
        // highest root thresholds to a singleton in any system
        let top = rs.highest_root();
        let sing = threshold_submodule(&rs, &all, &top).unwrap();
        assert_eq!(sing.len(), BigUint::from(1u32));
    }

    #[test]
    fn threshold_rejects_non_root() {
        let rs = d(5);
        let all: WeightMultiset = rs
            .positive_roots
            .iter()
            .map(|r| rs.root_to_fund(r).unwrap())
            .collect();
        assert!(threshold_submodule(&rs, &all, &[2, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn sym_power_small() {
        let m = WeightMultiset::from_weights([
            Weight::new(vec![1, 0]),
            Weight::new(vec![0, 1]),
        ]);
        let s2 = sym_power_weights(&m, 2, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(s2.len(), BigUint::from(3u32));
        assert!(s2.contains(&Weight::new(vec![2, 0])));
        assert!(s2.contains(&Weight::new(vec![1, 1])));
        assert!(s2.contains(&Weight::new(vec![0, 2])));

        // S^0 is the zero weight
        let s0 = sym_power_weights(&m, 0, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(s0, WeightMultiset::singleton(Weight::zero(2)));
    }

    #[test]
    fn sym_and_wedge_sizes_match_binomials() {
        for dim in 1..=8usize {
            let m: WeightMultiset = (0..dim)
                .map(|i| {
                    let mut f = vec![0i64; 8];
                    f[i] = 1;
                    Weight::new(f)
                })
                .collect();
            for n in 0..=6usize {
                let s = sym_power_weights(&m, n, DEFAULT_SIZE_CAP).unwrap();
                assert_eq!(s.len(), binomial(dim + n - 1, n));
                if n <= dim {
                    let w = wedge_power_weights(&m, n, DEFAULT_SIZE_CAP).unwrap();
                    assert_eq!(w.len(), binomial(dim, n));
                }
            }
        }
    }

    #[test]
    fn sym_size_c63() {
        // |M|=4, n=3 -> C(6,3) = 20
        let m: WeightMultiset = (0..4)
            .map(|i| Weight::new(vec![i as i64, 1]))
            .collect();
        let s = sym_power_weights(&m, 3, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(s.len(), BigUint::from(20u32));
    }

    #[test]
    fn wedge_of_u_d5() {
        let rs = d(5);
        let (_, u) =
            split_intersection(&rs, &ParabolicMarker::new([4]), &ParabolicMarker::new([5]))
                .unwrap();
        let w2 = wedge_power_weights(&u, 2, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(w2.len(), BigUint::from(6u32));
        assert!(w2.contains(&rs.root_to_fund(&[1, 2, 2, 2, 0]).unwrap()));
        let w4 = wedge_power_weights(&u, 4, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(w4.len(), BigUint::from(1u32));
        assert!(w4.contains(&rs.root_to_fund(&[1, 2, 3, 4, 0]).unwrap()));
        let w0 = wedge_power_weights(&u, 0, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(w0, WeightMultiset::singleton(Weight::zero(5)));
        assert!(wedge_power_weights(&u, 5, DEFAULT_SIZE_CAP).is_err());
    }

    #[test]
    fn u_weights_match_arithmetic_progression_form() {
        // D_{2l+1}, P = {2l}, P' = {2l+1}: U has the 2l weights
        // α_k + α_{k+1} + ... + α_{2l}
        for l in 2..=3usize {
            let rank = 2 * l + 1;
            let rs = d(rank);
            let (_, u) = split_intersection(
                &rs,
                &ParabolicMarker::new([2 * l]),
                &ParabolicMarker::new([2 * l + 1]),
            )
            .unwrap();
            assert_eq!(u.len(), BigUint::from(2 * l));
            for k in 1..=2 * l {
                let coords: Vec<i64> = (1..=rank)
                    .map(|i| i64::from(i >= k && i <= 2 * l))
                    .collect();
                assert!(u.contains(&rs.root_to_fund(&coords).unwrap()));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let m: WeightMultiset = (0..10)
            .map(|i| Weight::new(vec![i as i64, 1, 0]))
            .collect();
        let err = sym_power_weights(&m, 6, 100).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }
}
