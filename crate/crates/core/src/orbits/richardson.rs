//! Richardson orbits by sampling: generic elements of a nilradical in the
//! antidiagonal matrix realization of `so(2n)`, exact Jordan types via
//! rational rank computations, and the label of a very even Jordan type
//! from a canonical maximal isotropic subspace.

use num::rational::Ratio;
use num::{BigInt, BigRational, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::partitions::{
    is_very_even, validate_partition, Label, LabeledPartition, Partition,
};
use crate::rootsys::{Family, ParabolicMarker, RootSystem};

type Mat = Vec<Vec<BigRational>>;

fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![BigRational::zero(); c]; r]
}

fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigRational::one();
    }
    m
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let (r, k, c) = (a.len(), b.len(), b[0].len());
    let mut out = zeros(r, c);
    for i in 0..r {
        for (t, brow) in b.iter().enumerate().take(k) {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..c {
                if !brow[j].is_zero() {
                    let prod = &a[i][t] * &brow[j];
                    out[i][j] += prod;
                }
            }
        }
    }
    out
}

/// Row-echelon rank, exact.
fn rank(m: &Mat) -> usize {
    let mut m = m.clone();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].clone();
        for x in m[rank].iter_mut() {
            *x = &*x / &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..cols {
                    let sub = &f * &m[rank][c];
                    m[r][c] -= sub;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Basis of the null space of `m`, as columns.
fn kernel_basis(m: &Mat) -> Vec<Vec<BigRational>> {
    let rows = m.len();
    let cols = m[0].len();
    let mut a = m.clone();
    let mut pivot_of_col = vec![None; cols];
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].clone();
        for x in a[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for c in 0..cols {
                    let sub = &f * &a[r][c];
                    a[i][c] -= sub;
                }
            }
        }
        pivot_of_col[col] = Some(r);
        r += 1;
        if r == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for col in 0..cols {
            if let Some(pr) = pivot_of_col[col] {
                v[col] = -a[pr][free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Rank of the column space spanned by the concatenation of the given
/// column vectors.
fn span_rank(cols: &[Vec<BigRational>]) -> usize {
    if cols.is_empty() {
        return 0;
    }
    let dim = cols[0].len();
    let mut rows = zeros(cols.len(), dim);
    for (i, v) in cols.iter().enumerate() {
        rows[i].clone_from_slice(v);
    }
    rank(&rows)
}

/// `so(2n)` with respect to the antidiagonal form `B(e_i, e_j) = δ_{i,2n+1−j}`:
/// matrices with `X_{ij} = −X_{2n+1−j, 2n+1−i}` (indices 1-based).
/// Root vector for a positive root given in root coordinates.
fn root_vector(rs: &RootSystem, root: &[i64]) -> Vec<Vec<i64>> {
    let n = rs.rank;
    let dim = 2 * n;
    // ε-coordinates: α_i = e_i − e_{i+1} for i < n, α_n = e_{n−1} + e_n
    let mut eps = vec![0i64; n];
    for (i, &c) in root.iter().enumerate() {
        if i + 1 < n {
            eps[i] += c;
            eps[i + 1] -= c;
        } else {
            eps[n - 2] += c;
            eps[n - 1] += c;
        }
    }
    let mut m = vec![vec![0i64; dim]; dim];
    let pos: Vec<usize> = (0..n).filter(|&i| eps[i] != 0).collect();
    debug_assert_eq!(pos.len(), 2);
    let (i, j) = (pos[0], pos[1]);
    debug_assert_eq!(eps[i], 1);
    if eps[j] == -1 {
        // ε_i − ε_j ↦ E_{i,j} − E_{2n+1−j, 2n+1−i}
        m[i][j] = 1;
        m[dim - 1 - j][dim - 1 - i] = -1;
    } else {
        // ε_i + ε_j ↦ E_{i, 2n+1−j} − E_{j, 2n+1−i}
        m[i][dim - 1 - j] = 1;
        m[j][dim - 1 - i] = -1;
    }
    m
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
fn jordan_type(x: &Mat) -> Partition {
    let dim = x.len();
    let mut ranks = vec![dim];
    let mut power = identity(dim);
    loop {
        power = mat_mul(&power, x);
        let r = rank(&power);
        ranks.push(r);
        if r == 0 {
            break;
        }
    }
    // conjugate partition: d_k = rank(X^{k−1}) − rank(X^k)
    let diffs: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Partition::new(diffs).transpose()
}

/// Outcome of a sampling run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RichardsonReport {
    pub orbit: LabeledPartition,
    pub trials: usize,
    pub seed: u64,
}

/// Dense Richardson orbit of the nilradical named by `marker` in `so(2n)`,
/// by maximizing the Jordan type over seeded random samples.  Very even
/// types are labeled via the parity of `dim(W ∩ W_0)` where `W` is the
/// canonical maximal isotropic subspace `Σ_m X^m(Ker X^{2m})` (over the
/// distinct parts `2m`) and `W_0 = span(e_1, …, e_n)`.
pub fn richardson_orbit(
    n: usize,
    marker: &ParabolicMarker,
    seed: u64,
    trials: usize,
) -> Result<RichardsonReport> {
    if trials == 0 {
        return Err(Error::ParamOutOfRange("trials must be positive".into()));
    }
    let rs = RootSystem::build(Family::D, n)?;
    marker.validate(n)?;
    let vectors: Vec<Vec<Vec<i64>>> = rs
        .positive_roots
        .iter()
        .filter(|root| marker.removed.iter().any(|&i| root[i - 1] > 0))
        .map(|root| root_vector(&rs, root))
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(Partition, Mat)> = None;
    let mut all_types = Vec::new();
    for _ in 0..trials {
        let dim = 2 * n;
        let mut xi = vec![vec![0i64; dim]; dim];
        for v in &vectors {
            let mut c = 0i64;
            while c == 0 {
                c = rng.gen_range(-9..=9);
            }
            for (row, vrow) in xi.iter_mut().zip(v) {
                for (x, &e) in row.iter_mut().zip(vrow) {
                    *x += c * e;
                }
            }
        }
        let x: Mat = xi
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&e| Ratio::from_integer(BigInt::from(e)))
                    .collect()
            })
            .collect();
        let jt = jordan_type(&x);
        match &best {
            None => best = Some((jt.clone(), x)),
            Some((b, _)) if jt.dominates(b) && jt != *b => best = Some((jt.clone(), x)),
            _ => {}
        }
        all_types.push(jt);
    }
    let (partition, x) = best.expect("at least one trial");
    for jt in &all_types {
        if !partition.dominates(jt) {
            return Err(Error::NotStabilized(format!(
                "incomparable Jordan types {partition} and {jt}; more trials needed"
            )));
        }
    }
    validate_partition(&partition, n)?;

    let label = if is_very_even(&partition) {
        Some(very_even_label(&partition, &x, n))
    } else {
        None
    };
    Ok(RichardsonReport {
        orbit: LabeledPartition::new(partition, label)?,
        trials,
        seed,
    })
}

fn very_even_label(partition: &Partition, x: &Mat, n: usize) -> Label {
    let dim = 2 * n;
    let mut w_cols: Vec<Vec<BigRational>> = Vec::new();
    let mut parts = partition.parts.clone();
    parts.dedup();
    for part in parts {
        let m = part / 2;
        let mut x2m = identity(dim);
        for _ in 0..2 * m {
            x2m = mat_mul(&x2m, x);
        }
        let mut xm = identity(dim);
        for _ in 0..m {
            xm = mat_mul(&xm, x);
        }
        for kvec in kernel_basis(&x2m) {
            let mut img = vec![BigRational::zero(); dim];
            for (i, row) in xm.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    if !e.is_zero() {
                        let prod = e * &kvec[j];
                        img[i] += prod;
                    }
                }
            }
            w_cols.push(img);
        }
    }
    let dim_w = span_rank(&w_cols);
    debug_assert_eq!(dim_w, n, "canonical subspace must be maximal isotropic");
    // dim(W ∩ W_0) = dim W + n − dim(W + W_0)
    let mut joint = w_cols;
    for i in 0..n {
        let mut e = vec![BigRational::zero(); dim];
        e[i] = BigRational::one();
        joint.push(e);
    }
    let meet = dim_w + n - span_rank(&joint);
    if meet % 2 == n % 2 {
        Label::I
    } else {
        Label::II
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so_membership_of_root_vectors() {
        let rs = RootSystem::build(Family::D, 4).unwrap();
        for root in &rs.positive_roots {
            let m = root_vector(&rs, root);
            let dim = 8;
            for i in 0..dim {
                for j in 0..dim {
                    assert_eq!(m[i][j], -m[dim - 1 - j][dim - 1 - i]);
                }
            }
        }
    }

    #[test]
    fn borel_gives_regular_orbit() {
        // regular nilpotent orbit of so(12): (11, 1)
        let rep = richardson_orbit(6, &ParabolicMarker::borel(6), 7, 3).unwrap();
        assert_eq!(rep.orbit.partition, Partition::new(vec![11, 1]));
        assert_eq!(rep.orbit.label, None);
    }

    #[test]
    fn subregular_markers_d6() {
        let rep = richardson_orbit(6, &ParabolicMarker::new([3, 6]), 1, 5).unwrap();
        assert_eq!(rep.orbit.partition, Partition::new(vec![4, 4, 3, 1]));
        let rep = richardson_orbit(6, &ParabolicMarker::new([2, 6]), 1, 5).unwrap();
        assert_eq!(rep.orbit.partition, Partition::new(vec![4, 4, 2, 2]));
        assert!(rep.orbit.label.is_some());
    }

    #[test]
    fn mirror_markers_get_opposite_labels() {
        // {2, 6} and {2, 5} are swapped by the diagram automorphism, so
        // their very even Richardson orbits carry opposite labels
        let a = richardson_orbit(6, &ParabolicMarker::new([2, 6]), 11, 5).unwrap();
        let b = richardson_orbit(6, &ParabolicMarker::new([2, 5]), 11, 5).unwrap();
        assert_eq!(a.orbit.partition, b.orbit.partition);
        assert_ne!(a.orbit.label, b.orbit.label);
    }

    #[test]
    fn label_is_seed_independent() {
        let mut seen = std::collections::BTreeSet::new();
        for seed in [1u64, 2, 3, 4, 5] {
            let rep = richardson_orbit(6, &ParabolicMarker::new([2, 6]), seed, 5).unwrap();
            seen.insert(rep.orbit.clone());
        }
        assert_eq!(seen.len(), 1);
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let a = richardson_orbit(5, &ParabolicMarker::new([4]), 42, 4).unwrap();
        let b = richardson_orbit(5, &ParabolicMarker::new([4]), 42, 4).unwrap();
        assert_eq!(a, b);
    }
}
