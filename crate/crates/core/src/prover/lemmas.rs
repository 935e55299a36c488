//! Rank-one vanishing lemmas along a type-A segment, replayed as checkable
//! hypothesis tests.
//!
//! A `Chain` is an ordered list of simple-root indices forming a path in the
//! Dynkin diagram; positions inside a chain are 1-based.  The lemmas consume
//! a character `λ` and certify `H^*(V ⊗ λ) = 0` for any module `V` that is
//! stable under the minimal parabolics of the chain — stability of the
//! carrier is a hypothesis of the caller, not something checked here.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// A path of simple roots (1-based indices into the ambient system).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub nodes: Vec<usize>,
}

impl Chain {
    pub fn new(rs: &RootSystem, nodes: Vec<usize>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::MalformedChain("empty".into()));
        }
        for &i in &nodes {
            if i == 0 || i > rs.rank {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    rank: rs.rank,
                });
            }
        }
        for w in nodes.windows(2) {
            if rs.cartan[w[0] - 1][w[1] - 1] != -1 {
                return Err(Error::MalformedChain(format!(
                    "α_{} and α_{} are not adjacent",
                    w[0], w[1]
                )));
            }
        }
        // consecutive adjacency plus no chords makes the segment type A
        for (i, &m) in nodes.iter().enumerate() {
            for (j, &n) in nodes.iter().enumerate() {
                if j > i + 1 && rs.cartan[m - 1][n - 1] != 0 {
                    return Err(Error::MalformedChain(format!(
                        "chord between α_{} and α_{}",
                        m, n
                    )));
                }
            }
        }
        Ok(Chain { nodes })
    }

    /// Natural chain `α_1, …, α_len` of a type-A system.
    pub fn natural(rs: &RootSystem, len: usize) -> Result<Self> {
        Chain::new(rs, (1..=len).collect())
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn reversed(&self) -> Chain {
        Chain {
            nodes: self.nodes.iter().rev().cloned().collect(),
        }
    }

    /// Pairing of `λ` with the coroot at a 1-based chain position.
    pub fn pairing(&self, rs: &RootSystem, lambda: &Weight, pos: usize) -> i64 {
        rs.pairing(lambda, self.nodes[pos - 1]).expect("validated")
    }

    pub fn pairings(&self, rs: &RootSystem, lambda: &Weight) -> Vec<i64> {
        (1..=self.len())
            .map(|p| self.pairing(rs, lambda, p))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Demi1Outcome {
    /// `H^*(V ⊗ λ) = 0`, with `r = ⟨λ, α_a∨⟩`.
    Certified { r: i64 },
    NotApplicable { reason: String },
}

/// Hypotheses: zero pairings at chain positions `a < j ≤ b` and
/// `a − b − 1 ≤ r ≤ −1` for `r` the pairing at position `a`.
pub fn check_demi1(
    rs: &RootSystem,
    lambda: &Weight,
    a: usize,
    b: usize,
    chain: &Chain,
) -> Result<Demi1Outcome> {
    if a == 0 || b < a || b > chain.len() {
        return Err(Error::MalformedChain(format!(
            "positions a={a}, b={b} out of range for chain of length {}",
            chain.len()
        )));
    }
    for j in (a + 1)..=b {
        let p = chain.pairing(rs, lambda, j);
        if p != 0 {
            return Ok(Demi1Outcome::NotApplicable {
                reason: format!("pairing at position {j} is {p}, not 0"),
            });
        }
    }
    let r = chain.pairing(rs, lambda, a);
    let lo = a as i64 - b as i64 - 1;
    if r < lo || r > -1 {
        return Ok(Demi1Outcome::NotApplicable {
            reason: format!("r = {r} outside [{lo}, -1]"),
        });
    }
    Ok(Demi1Outcome::Certified { r })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Demi2Outcome {
    /// `H^*(V ⊗ λ) = 0`, with `k` the pairing at position `b`.  When the
    /// proof's second branch applies (`k + b − a ≤ −2`) the shifted weight
    /// `μ` is returned as evidence.
    Certified { k: i64, shifted: Option<Weight> },
    NotApplicable { reason: String },
}

/// Hypotheses: pairing 1 at position `a`, zero at every other position
/// `< b`, and `−b−1 ≤ k ≤ −1` with `k + b − a ≠ −1`.
pub fn check_demi2(
    rs: &RootSystem,
    lambda: &Weight,
    a: usize,
    b: usize,
    chain: &Chain,
) -> Result<Demi2Outcome> {
    if a == 0 || a >= b || b > chain.len() {
        return Err(Error::MalformedChain(format!(
            "need 1 ≤ a < b ≤ {}, got a={a}, b={b}",
            chain.len()
        )));
    }
    let pa = chain.pairing(rs, lambda, a);
    if pa != 1 {
        return Ok(Demi2Outcome::NotApplicable {
            reason: format!("pairing at position a={a} is {pa}, not 1"),
        });
    }
    for j in 1..b {
        if j == a {
            continue;
        }
        let p = chain.pairing(rs, lambda, j);
        if p != 0 {
            return Ok(Demi2Outcome::NotApplicable {
                reason: format!("pairing at position {j} is {p}, not 0"),
            });
        }
    }
    let k = chain.pairing(rs, lambda, b);
    let lo = -(b as i64) - 1;
    if k < lo || k > -1 {
        return Ok(Demi2Outcome::NotApplicable {
            reason: format!("k = {k} outside [{lo}, -1]"),
        });
    }
    let kba = k + b as i64 - a as i64;
    if kba == -1 {
        return Ok(Demi2Outcome::NotApplicable {
            reason: "k + b - a = -1".into(),
        });
    }
    let shifted = if kba <= -2 {
        // μ = λ + (−k−1)α_b + (−k−2)α_{b−1} + ⋯ + (−k−b+a)α_{a+1}
        let mut mu = lambda.clone();
        for i in 1..=(b - a) {
            let coeff = -k - i as i64;
            let alpha = rs.simple_root(chain.nodes[b - i]).expect("validated");
            mu = mu.add(&alpha.scale(coeff));
        }
        let check = chain.pairing(rs, &mu, a);
        debug_assert_eq!(check, kba + 1, "shifted pairing must equal k+b-a+1");
        Some(mu)
    } else {
        None
    };
    Ok(Demi2Outcome::Certified { k, shifted })
}
