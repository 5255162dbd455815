//! `S_k`-orbits of `Z_N^k` and their products.

mod fixed;
mod infinite;
mod product;
mod rep;

pub use fixed::fixed_product;
pub use infinite::{embedding_bound, tensor_orbit_product, tensor_orbit_product_at};
pub use product::{
    is_special_form, m_coefficient_bruteforce, orbit_elements, raw_orbit_product,
    shifted_row_parameters, shifted_row_product, simple_current_shift, special_orbit_product,
    standard_form, OrbitExpansion, MAX_BRUTEFORCE_K,
};
pub use rep::{InfiniteOrbitRep, OrbitRep, Tuple, MAX_ENUMERATION_K};
