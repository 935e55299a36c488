//! Exact combinatorics of root systems of types `A_n` and `D_n`.
//!
//! Weights are stored in fundamental-weight coordinates (the vector of
//! pairings with the simple coroots); simple-root coordinates are a derived
//! rational view.  Node labeling: type A is the chain `α_1 — α_2 — ⋯ — α_n`
//! with `α_1` extremal; type `D_n` is the chain `α_1 — ⋯ — α_{n−2}` with
//! `α_{n−1}` and `α_n` both attached to the branch node `α_{n−2}`.

use std::collections::BTreeSet;
use std::fmt;

use num::rational::Ratio;
use num::{BigInt, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::D => write!(f, "D"),
        }
    }
}

/// Integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub fund: Vec<i64>,
}

impl Weight {
    pub fn new(fund: Vec<i64>) -> Self {
        Weight { fund }
    }

    pub fn zero(rank: usize) -> Self {
        Weight { fund: vec![0; rank] }
    }

    /// The fundamental weight `ω_i` (1-based index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut fund = vec![0; rank];
        fund[i - 1] = 1;
        Weight { fund }
    }

    pub fn rank(&self) -> usize {
        self.fund.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.fund.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            fund: self
                .fund
                .iter()
                .zip(&other.fund)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: i64) -> Weight {
        Weight {
            fund: self.fund.iter().map(|c| c * s).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.fund.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// A parabolic subgroup `P ⊇ B`, encoded by the simple roots that are *not*
/// simple roots of its Levi factor.  Empty set is `G`; the full set is `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicMarker {
    pub removed: BTreeSet<usize>,
}

impl ParabolicMarker {
    pub fn new<I: IntoIterator<Item = usize>>(removed: I) -> Self {
        ParabolicMarker {
            removed: removed.into_iter().collect(),
        }
    }

    pub fn borel(rank: usize) -> Self {
        ParabolicMarker {
            removed: (1..=rank).collect(),
        }
    }

    pub fn validate(&self, rank: usize) -> Result<()> {
        for &i in &self.removed {
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
        }
        Ok(())
    }
}

/// Result of chasing a weight to the dominant chamber under the dot action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum DotConjugate {
    /// `λ + ρ` lies on a wall.
    Singular,
    /// `w·λ` is dominant for a Weyl element of the given length.
    Regular { length: usize, dominant: Weight },
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// `cartan[i][j] = ⟨α_j, α_i∨⟩` (symmetric here: both families are
    /// simply laced in this labeling).
    pub cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Ratio<i64>>>,
    /// Positive roots in simple-root coordinates, generation order.
    pub positive_roots: Vec<Vec<i64>>,
    positive_root_set: BTreeSet<Vec<i64>>,
}

impl RootSystem {
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        match family {
            Family::A if rank >= 1 => {}
            Family::D if rank >= 3 => {}
            _ => {
                return Err(Error::UnsupportedRootSystem {
                    family: family.to_string(),
                    rank,
                })
            }
        }
        let cartan = cartan_matrix(family, rank);
        let cartan_inv = invert_rational(&cartan);
        let positive_roots = generate_positive_roots(&cartan, rank);
        let positive_root_set = positive_roots.iter().cloned().collect();
        Ok(RootSystem {
            family,
            rank,
            cartan,
            cartan_inv,
            positive_roots,
            positive_root_set,
        })
    }

    pub fn rho(&self) -> Weight {
        Weight {
            fund: vec![1; self.rank],
        }
    }

    /// `⟨λ, α_i∨⟩` for a 1-based simple root index.
    pub fn pairing(&self, lambda: &Weight, i: usize) -> Result<i64> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            });
        }
        Ok(lambda.fund[i - 1])
    }

    /// Simple root `α_i` as a weight (the i-th Cartan column).
    pub fn simple_root(&self, i: usize) -> Result<Weight> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            });
        }
        Ok(Weight {
            fund: (0..self.rank).map(|j| self.cartan[j][i - 1]).collect(),
        })
    }

    /// Simple-root coordinates → fundamental coordinates (Cartan contraction).
    pub fn root_to_fund(&self, root_coords: &[i64]) -> Result<Weight> {
        if root_coords.len() != self.rank {
            return Err(Error::LengthMismatch {
                got: root_coords.len(),
                rank: self.rank,
            });
        }
        let fund = (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| self.cartan[i][j] * root_coords[j])
                    .sum()
            })
            .collect();
        Ok(Weight { fund })
    }

    /// Fundamental coordinates → simple-root coordinates (rational in general).
    pub fn fund_to_root(&self, w: &Weight) -> Result<Vec<Ratio<i64>>> {
        if w.fund.len() != self.rank {
            return Err(Error::LengthMismatch {
                got: w.fund.len(),
                rank: self.rank,
            });
        }
        Ok((0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| self.cartan_inv[i][j] * Ratio::from_integer(w.fund[j]))
                    .sum()
            })
            .collect())
    }

    /// Integral simple-root coordinates, when the weight lies in the root
    /// lattice.
    pub fn fund_to_root_integral(&self, w: &Weight) -> Option<Vec<i64>> {
        let coords = self.fund_to_root(w).ok()?;
        coords
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn is_positive_root(&self, root_coords: &[i64]) -> bool {
        self.positive_root_set.contains(root_coords)
    }

    /// Partial order on roots: `α ≥ β` iff `α − β` has all simple-root
    /// coordinates ≥ 0.
    pub fn root_geq(&self, alpha: &[i64], beta: &[i64]) -> bool {
        alpha.len() == beta.len() && alpha.iter().zip(beta).all(|(a, b)| a >= b)
    }

    /// Reflection `s_i(λ) = λ − ⟨λ, α_i∨⟩ α_i` in fundamental coordinates.
    pub fn simple_reflection(&self, lambda: &Weight, i: usize) -> Result<Weight> {
        let m = self.pairing(lambda, i)?;
        Ok(lambda.add(&self.simple_root(i)?.scale(-m)))
    }

    /// Chase `λ + ρ` into the dominant chamber by simple reflections and
    /// subtract `ρ` back off.  Deterministic canonical run: at each step the
    /// lowest-index negative pairing is reflected.
    pub fn dominant_conjugate_dot(&self, lambda: &Weight) -> DotConjugate {
        self.dominant_conjugate_dot_by(lambda, |negatives| negatives[0])
    }

    /// Same computation with a caller-chosen tie-break among the currently
    /// negative pairings; the outcome must not depend on the choice.
    pub fn dominant_conjugate_dot_by<F>(&self, lambda: &Weight, mut choose: F) -> DotConjugate
    where
        F: FnMut(&[usize]) -> usize,
    {
        let mut v = lambda.add(&self.rho());
        let mut length = 0usize;
        loop {
            if v.fund.iter().any(|&c| c == 0) {
                return DotConjugate::Singular;
            }
            let negatives: Vec<usize> = (1..=self.rank)
                .filter(|&i| v.fund[i - 1] < 0)
                .collect();
            if negatives.is_empty() {
                let dominant = v.add(&self.rho().scale(-1));
                return DotConjugate::Regular { length, dominant };
            }
            let i = choose(&negatives);
            v = self.simple_reflection(&v, i).expect("index from range");
            length += 1;
        }
    }

    /// `⟨λ, α∨⟩` for a root given in simple-root coordinates.  Valid because
    /// both families are simply laced, so `α∨ = Σ c_i α_i∨`.
    pub fn pairing_with_coroot(&self, lambda: &Weight, root_coords: &[i64]) -> i64 {
        lambda
            .fund
            .iter()
            .zip(root_coords)
            .map(|(f, c)| f * c)
            .sum()
    }

    pub fn highest_root(&self) -> Vec<i64> {
        self.positive_roots
            .iter()
            .max_by_key(|r| r.iter().sum::<i64>())
            .expect("nonempty")
            .clone()
    }

    /// Positive roots of the Levi factor of a marker: those supported away
    /// from every removed index.
    pub fn levi_positive_roots(&self, marker: &ParabolicMarker) -> Vec<Vec<i64>> {
        self.positive_roots
            .iter()
            .filter(|r| marker.removed.iter().all(|&i| r[i - 1] == 0))
            .cloned()
            .collect()
    }

    /// Sizes of the connected components of the Levi's Dynkin sub-diagram,
    /// sorted.  All components are type A when the marker cuts every branch;
    /// the bool is true iff every component is a path.
    pub fn levi_type_a_signature(&self, marker: &ParabolicMarker) -> (Vec<usize>, bool) {
        let keep: Vec<usize> = (1..=self.rank)
            .filter(|i| !marker.removed.contains(i))
            .collect();
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut sizes = Vec::new();
        let mut all_paths = true;
        for &start in &keep {
            if seen.contains(&start) {
                continue;
            }
            let mut component = vec![start];
            seen.insert(start);
            let mut frontier = vec![start];
            while let Some(node) = frontier.pop() {
                for &other in &keep {
                    if !seen.contains(&other) && self.cartan[node - 1][other - 1] < 0 {
                        seen.insert(other);
                        component.push(other);
                        frontier.push(other);
                    }
                }
            }
            // a path has every node of degree <= 2 and no cycle; Dynkin
            // sub-diagrams are forests, so max degree 2 suffices
            let path = component.iter().all(|&n| {
                component
                    .iter()
                    .filter(|&&m| m != n && self.cartan[n - 1][m - 1] < 0)
                    .count()
                    <= 2
            });
            all_paths &= path;
            sizes.push(component.len());
        }
        sizes.sort_unstable();
        (sizes, all_paths)
    }

    /// Half the sum of positive roots, as a check value: equals `ρ`.
    pub fn half_sum_positive_roots(&self) -> Vec<Ratio<i64>> {
        let mut acc = vec![Ratio::from_integer(0); self.rank];
        for r in &self.positive_roots {
            for (a, c) in acc.iter_mut().zip(r) {
                *a += Ratio::from_integer(*c);
            }
        }
        acc.iter().map(|a| a / 2).collect()
    }

    /// `⟨λ+ρ, α∨⟩` products for the Weyl dimension formula, exact.
    pub fn weyl_dimension(&self, mu: &Weight) -> Result<BigInt> {
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.to_string()));
        }
        let rho = self.rho();
        let shifted = mu.add(&rho);
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for alpha in &self.positive_roots {
            num *= BigInt::from(self.pairing_with_coroot(&shifted, alpha));
            den *= BigInt::from(self.pairing_with_coroot(&rho, alpha));
        }
        debug_assert!((&num % &den).is_zero());
        Ok(num / den)
    }
}

fn cartan_matrix(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; rank]; rank];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let edges: Vec<(usize, usize)> = match family {
        Family::A => (0..rank.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
        Family::D => {
            let mut e: Vec<(usize, usize)> = (0..rank - 3).map(|i| (i, i + 1)).collect();
            e.push((rank - 3, rank - 2));
            e.push((rank - 3, rank - 1));
            e
        }
    };
    for (i, j) in edges {
        c[i][j] = -1;
        c[j][i] = -1;
    }
    c
}

fn invert_rational(m: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Ratio::from_integer(i64::from(i == j)))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| a[r][col] != Ratio::from_integer(0))
            .expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && a[r][col] != Ratio::from_integer(0) {
                let f = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    inv
}

/// Closure under simple-root addition: in a simply-laced system `α + α_i` is
/// a root exactly when `⟨α, α_i∨⟩ = −1` (for `α ≠ α_i` positive).
fn generate_positive_roots(cartan: &[Vec<i64>], rank: usize) -> Vec<Vec<i64>> {
    let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut simple = vec![0i64; rank];
        simple[i] = 1;
        roots.insert(simple.clone());
        frontier.push(simple);
    }
    while let Some(alpha) = frontier.pop() {
        for i in 0..rank {
            let pairing: i64 = (0..rank).map(|j| cartan[i][j] * alpha[j]).sum();
            if pairing == -1 {
                let mut next = alpha.clone();
                next[i] += 1;
                if roots.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
    }
    roots.into_iter().collect()
}
