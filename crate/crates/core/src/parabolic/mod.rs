//! Quasi-parabolic data, partitions and their integer invariants.

mod data;
mod numeric;
mod partition;
mod stability;

pub use data::{enumerate_subdata, Instance, ParabolicPoint, QuasiParabolicData, SubData};
pub use numeric::{chi_dr, d_lambda, delta, spread};
pub use partition::{compositions, enumerate_partitions, Partition};
pub use stability::{semistability_witness, ss_equals_stable, Witness};
