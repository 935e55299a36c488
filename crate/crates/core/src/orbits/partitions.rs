//! Partition calculus for nilpotent orbits of `so(2n)`: validity, collapse,
//! the labeled closure order, minimal degenerations, row/column reduction of
//! a degeneration, and orbit dimensions.

use std::collections::BTreeSet;

use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Nonincreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition {
    pub parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        let mut t = Vec::new();
        let mut col = 1;
        loop {
            let h = self.parts.iter().filter(|&&p| p >= col).count();
            if h == 0 {
                break;
            }
            t.push(h);
            col += 1;
        }
        Partition { parts: t }
    }

    /// `λ ≥ μ` in the dominance order (equal sums assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.sum(), other.sum());
        let mut s = 0i64;
        let mut o = 0i64;
        let len = self.parts.len().max(other.parts.len());
        for i in 0..len {
            s += *self.parts.get(i).unwrap_or(&0) as i64;
            o += *other.parts.get(i).unwrap_or(&0) as i64;
            if s < o {
                return false;
            }
        }
        true
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Numeral attached to a very even partition to distinguish the two orbits
/// sharing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Label {
    I,
    II,
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Label::I => write!(f, "I"),
            Label::II => write!(f, "II"),
        }
    }
}

/// An orbit of `so(2n)`: a valid partition, labeled when very even.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LabeledPartition {
    pub partition: Partition,
    pub label: Option<Label>,
}

impl LabeledPartition {
    pub fn new(partition: Partition, label: Option<Label>) -> Result<Self> {
        if partition.parts.iter().all(|p| p % 2 == 0) && !partition.parts.is_empty() {
            if label.is_none() {
                return Err(Error::InvalidPartition(format!(
                    "{partition} is very even and needs a label"
                )));
            }
        } else if label.is_some() {
            return Err(Error::InvalidPartition(format!(
                "{partition} is not very even and cannot carry a label"
            )));
        }
        Ok(LabeledPartition { partition, label })
    }

    /// Orbits are comparable iff their partitions are distinct and
    /// dominance-comparable, or identical with the same label.
    pub fn closure_geq(&self, other: &LabeledPartition) -> bool {
        if self.partition == other.partition {
            return self.label == other.label;
        }
        self.partition.dominates(&other.partition)
    }
}

impl std::fmt::Display for LabeledPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.label {
            Some(l) => write!(f, "{}[{}]", self.partition, l),
            None => write!(f, "{}", self.partition),
        }
    }
}

/// A partition parametrizes a nilpotent orbit of `so(2n)` iff it sums to
/// `2n` and every even part occurs with even multiplicity.
pub fn validate_partition(p: &Partition, n: usize) -> Result<()> {
    if p.sum() != 2 * n {
        return Err(Error::InvalidPartition(format!(
            "{p} sums to {}, expected {}",
            p.sum(),
            2 * n
        )));
    }
    for &q in &p.parts {
        if q % 2 == 0 {
            let mult = p.parts.iter().filter(|&&x| x == q).count();
            if mult % 2 != 0 {
                return Err(Error::InvalidPartition(format!(
                    "even part {q} of {p} has odd multiplicity {mult}"
                )));
            }
        }
    }
    Ok(())
}

pub fn is_valid_partition(p: &Partition, n: usize) -> bool {
    validate_partition(p, n).is_ok()
}

/// All parts even (hence a valid partition that carries two labels).
pub fn is_very_even(p: &Partition) -> bool {
    !p.parts.is_empty() && p.parts.iter().all(|q| q % 2 == 0)
}

/// Largest valid partition dominated by `p`: repeatedly fix the largest even
/// part with odd multiplicity by moving one box from its last row down to
/// the next row that can take it.
pub fn d_collapse(p: &Partition) -> Partition {
    let mut parts = p.parts.clone();
    loop {
        let bad = parts
            .iter()
            .filter(|&&q| q % 2 == 0)
            .filter(|&&q| parts.iter().filter(|&&x| x == q).count() % 2 == 1)
            .max()
            .copied();
        let Some(q) = bad else {
            return Partition::new(parts);
        };
        let row = parts.iter().rposition(|&x| x == q).expect("present");
        parts[row] -= 1;
        // first later row that stays nonincreasing after gaining a box
        let target = (row + 1..parts.len()).find(|&i| parts[i] + 1 <= parts[i - 1]);
        match target {
            Some(i) => parts[i] += 1,
            None => parts.push(1),
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
    }
}

/// Every orbit of `so(2n)`, with very even partitions contributing both
/// labels; sorted descending in the closure order where comparable.
pub fn all_orbits(n: usize) -> Vec<LabeledPartition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    enumerate_partitions(2 * n, usize::MAX, &mut current, &mut |parts| {
        let p = Partition::new(parts.to_vec());
        if is_valid_partition(&p, n) {
            if is_very_even(&p) {
                out.push(LabeledPartition::new(p.clone(), Some(Label::I)).expect("very even"));
                out.push(LabeledPartition::new(p, Some(Label::II)).expect("very even"));
            } else {
                out.push(LabeledPartition::new(p, None).expect("not very even"));
            }
        }
    });
    out.sort_by(|a, b| b.partition.cmp(&a.partition).then(a.label.cmp(&b.label)));
    out
}

fn enumerate_partitions(
    remaining: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        f(current);
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        enumerate_partitions(remaining - part, part, current, f);
        current.pop();
    }
}

/// Orbits covered by `o`: maximal elements of the set strictly below it.
pub fn minimal_degenerations(o: &LabeledPartition, n: usize) -> Result<Vec<LabeledPartition>> {
    validate_partition(&o.partition, n)?;
    let below: Vec<LabeledPartition> = all_orbits(n)
        .into_iter()
        .filter(|c| *c != *o && o.closure_geq(c))
        .collect();
    Ok(below
        .iter()
        .filter(|c| !below.iter().any(|d| *d != **c && d.closure_geq(c)))
        .cloned()
        .collect())
}

/// The degeneration `μ < λ` after dropping shared leading rows and shared
/// full columns, with the known singularity tag when the reduced pair is on
/// the short list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KpReduction {
    pub lambda: Partition,
    pub mu: Partition,
    pub tag: String,
}

pub fn kp_reduction(lambda: &Partition, mu: &Partition) -> Result<KpReduction> {
    if !lambda.dominates(mu) || lambda == mu {
        return Err(Error::NotDominating(format!("{lambda} does not cover {mu}")));
    }
    let mut l = lambda.parts.clone();
    let mut m = mu.parts.clone();
    // shared leading rows
    while !l.is_empty() && !m.is_empty() && l[0] == m[0] {
        l.remove(0);
        m.remove(0);
    }
    // shared full columns (both partitions have the same number of rows)
    while !l.is_empty() && l.len() == m.len() {
        for x in l.iter_mut().chain(m.iter_mut()) {
            *x -= 1;
        }
        l.retain(|&x| x > 0);
        m.retain(|&x| x > 0);
    }
    let lambda = Partition::new(l);
    let mu = Partition::new(m);
    let tag = if lambda.parts == [2] && mu.parts == [1, 1] {
        "A1".to_string()
    } else {
        "unclassified".to_string()
    };
    Ok(KpReduction { lambda, mu, tag })
}

/// `dim O_λ = dim so(2n) − ½(Σ (λᵀ_i)² − #{odd parts of λ})`.
pub fn orbit_dimension(p: &Partition, n: usize) -> Result<BigInt> {
    validate_partition(p, n)?;
    let sq: i64 = p
        .transpose()
        .parts
        .iter()
        .map(|&c| (c * c) as i64)
        .sum();
    let odd = p.parts.iter().filter(|&&q| q % 2 == 1).count() as i64;
    let dim_g = (2 * n * n - n) as i64;
    Ok(BigInt::from(dim_g - (sq - odd) / 2))
}

/// Hasse diagram of the closure order on orbits of `so(2n)` in DOT syntax.
pub fn hasse_dot(n: usize) -> Result<String> {
    let orbits = all_orbits(n);
    let mut out = String::from("digraph closure {\n  rankdir=BT;\n");
    for o in &orbits {
        out.push_str(&format!("  \"{o}\";\n"));
    }
    let mut edges = BTreeSet::new();
    for o in &orbits {
        for c in minimal_degenerations(o, n)? {
            edges.insert(format!("  \"{c}\" -> \"{o}\";\n"));
        }
    }
    for e in edges {
        out.push_str(&e);
    }
    out.push_str("}\n");
    Ok(out)
}
