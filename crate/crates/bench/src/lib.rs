//! Shared inputs for the benchmarks.

use alghyper::Algebra;

/// Groups of increasing size used across benchmark groups.
pub const GROUP_SPECS: [&str; 4] = ["sym:4", "dihedral:12", "product:(cyclic:4),(cyclic:4)", "sym:5"];

pub fn algebra(spec: &str) -> Algebra {
    Algebra::from_spec(spec).unwrap_or_else(|e| panic!("{spec}: {e}"))
}
