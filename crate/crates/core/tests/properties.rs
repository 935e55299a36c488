//! Randomized invariants: reflection-order independence of the dominant
//! dot-conjugate, and the Koszul alternating-sum identity for Euler
//! characteristics on arbitrary small weight multisets.

use num::BigUint;
use proptest::prelude::*;

use nilnorm_core::bmod::{sym_power_weights, wedge_power_weights, WeightMultiset, DEFAULT_SIZE_CAP};
use nilnorm_core::charlib::{euler_characteristic, VirtualCharacter};
use nilnorm_core::rootsys::{Family, RootSystem, Weight};

fn family_rank() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        (2..=6usize).prop_map(|r| (Family::A, r)),
        (4..=6usize).prop_map(|r| (Family::D, r)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The dominant dot-conjugate and its length parity are independent of
    /// the order in which negative coordinates are corrected.
    #[test]
    fn dot_action_is_order_independent(
        (family, rank) in family_rank(),
        seeds in prop::collection::vec(any::<usize>(), 8),
    ) {
        let rs = RootSystem::build(family, rank).unwrap();
        let coords = seeds.iter().map(|&s| (s % 13) as i64 - 6).collect::<Vec<_>>();
        let lam = Weight::new(coords[..rank].to_vec());
        let reference = rs.dominant_conjugate_dot(&lam);
        for &seed in &seeds {
            let mut state = seed;
            let alt = rs.dominant_conjugate_dot_by(&lam, |negs| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                negs[state % negs.len()]
            });
            prop_assert_eq!(&alt, &reference);
        }
    }

    /// Koszul identity: for any multisets `U`, `W` with union `Q` and any
    /// twist `t`, `χ(S^n W ⊗ t) = Σ_j (−1)^j χ(S^{n−j} Q ⊗ Λ^j U ⊗ t)`.
    #[test]
    fn koszul_alternating_sum(
        (family, rank) in family_rank(),
        u_coords in prop::collection::vec(prop::collection::vec(-2..=2i64, 6), 1..=3),
        w_coords in prop::collection::vec(prop::collection::vec(-2..=2i64, 6), 1..=3),
        t_coords in prop::collection::vec(-2..=2i64, 6),
        n in 0..=4usize,
    ) {
        let rs = RootSystem::build(family, rank).unwrap();
        let u: WeightMultiset = u_coords
            .iter()
            .map(|c| Weight::new(c[..rank].to_vec()))
            .collect();
        let w: WeightMultiset = w_coords
            .iter()
            .map(|c| Weight::new(c[..rank].to_vec()))
            .collect();
        let q = u.union(&w);
        let t = Weight::new(t_coords[..rank].to_vec());

        let lhs = euler_characteristic(
            &rs,
            &sym_power_weights(&w, n, DEFAULT_SIZE_CAP).unwrap(),
            &t,
        );

        let mut rhs = VirtualCharacter::zero();
        let dim_u: BigUint = u.len();
        for j in 0..=n {
            if BigUint::from(j) > dim_u {
                break;
            }
            let sym = sym_power_weights(&q, n - j, DEFAULT_SIZE_CAP).unwrap();
            let wedge = wedge_power_weights(&u, j, DEFAULT_SIZE_CAP).unwrap();
            let term = euler_characteristic(&rs, &sym.tensor(&wedge), &t);
            if j % 2 == 0 {
                rhs = rhs + term;
            } else {
                rhs = rhs - term;
            }
        }
        prop_assert_eq!(lhs, rhs);
    }
}
