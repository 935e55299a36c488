//! Borel–Weil–Bott bookkeeping on `G/B` and virtual-character arithmetic.
//!
//! Convention: `B` corresponds to the negative roots, so dual nilradicals
//! carry positive-root weights and `H^0(G/B, L_λ) = V_λ` for dominant `λ`.
//! For a line bundle Bott's theorem is exact; for a weight-filtered module
//! only the Euler characteristic is computed, weight line by weight line.

use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use num::{BigInt, Zero};
use serde::{Deserialize, Serialize};

use crate::bmod::WeightMultiset;
use crate::rootsys::{DotConjugate, RootSystem, Weight};

/// Cohomology of a line bundle `L_λ` on `G/B`: either everything vanishes or
/// a single Weyl module sits in one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum BottResult {
    Vanishes,
    Module { degree: usize, highest_weight: Weight },
}

pub fn bott_line_bundle(rs: &RootSystem, lambda: &Weight) -> BottResult {
    match rs.dominant_conjugate_dot(lambda) {
        DotConjugate::Singular => BottResult::Vanishes,
        DotConjugate::Regular { length, dominant } => BottResult::Module {
            degree: length,
            highest_weight: dominant,
        },
    }
}

/// Finite formal integer combination of dominant weights, read as an Euler
/// characteristic in the Weyl-module basis.  Zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VirtualCharacter {
    terms: BTreeMap<Weight, BigInt>,
}

impl VirtualCharacter {
    pub fn zero() -> Self {
        VirtualCharacter::default()
    }

    pub fn single(w: Weight) -> Self {
        let mut c = VirtualCharacter::default();
        c.add_term(w, BigInt::from(1));
        c
    }

    pub fn add_term(&mut self, w: Weight, coeff: BigInt) {
        debug_assert!(w.is_dominant());
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Weight) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c >= &BigInt::zero())
    }

    /// Total dimension `Σ coeff · dim V_μ`, exact.
    pub fn dimension(&self, rs: &RootSystem) -> BigInt {
        self.terms
            .iter()
            .map(|(w, c)| c * rs.weyl_dimension(w).expect("keys are dominant"))
            .sum()
    }

    /// Stable serialization shape: sorted `[[fund coords...], coeff]` pairs.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| match i64::try_from(c.clone()) {
                    Ok(small) => serde_json::json!([w.fund, small]),
                    Err(_) => serde_json::json!([w.fund, c.to_string()]),
                })
                .collect(),
        )
    }
}

impl Add for VirtualCharacter {
    type Output = VirtualCharacter;
    fn add(mut self, rhs: VirtualCharacter) -> VirtualCharacter {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl Sub for VirtualCharacter {
    type Output = VirtualCharacter;
    fn sub(mut self, rhs: VirtualCharacter) -> VirtualCharacter {
        for (w, c) in rhs.terms {
            self.add_term(w, -c);
        }
        self
    }
}

impl std::fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·[V_{}]", c, w)?;
        }
        Ok(())
    }
}

/// `χ(G/B, M ⊗ L_twist)` for a weight-filtered B-module with weight content
/// `M`: each weight line contributes its Bott module with sign `(−1)^degree`.
pub fn euler_characteristic(
    rs: &RootSystem,
    m: &WeightMultiset,
    twist: &Weight,
) -> VirtualCharacter {
    let mut chi = VirtualCharacter::zero();
    for (w, mult) in m.iter() {
        match bott_line_bundle(rs, &w.add(twist)) {
            BottResult::Vanishes => {}
            BottResult::Module {
                degree,
                highest_weight,
            } => {
                let sign = if degree % 2 == 0 { 1 } else { -1 };
                chi.add_term(highest_weight, BigInt::from(sign) * BigInt::from(mult.clone()));
            }
        }
    }
    chi
}
