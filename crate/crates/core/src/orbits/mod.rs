//! Nilpotent orbit combinatorics for `so(2n)` and the sampling oracle for
//! Richardson orbits.

pub mod partitions;
pub mod richardson;

pub use partitions::{
    all_orbits, d_collapse, hasse_dot, is_valid_partition, is_very_even, kp_reduction,
    minimal_degenerations, orbit_dimension, validate_partition, KpReduction, Label,
    LabeledPartition, Partition,
};
pub use richardson::{richardson_orbit, RichardsonReport};
