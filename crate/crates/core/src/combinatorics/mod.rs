//! Partitions, skew shapes, tableaux and the weight/partition/orbit dictionary.

mod partition;
mod skew;
mod tableau;
mod weight;

pub use partition::Partition;
pub use skew::SkewShape;
pub use tableau::{count_cylindric_tableaux, for_each_tableau, skew_kostka, Content, Tableau};
pub use weight::{
    orbit_to_partition, orbit_to_weight, partition_to_orbit, partition_to_weight,
    weight_to_orbit, weight_to_partition, LatticeWeight, Weight,
};
