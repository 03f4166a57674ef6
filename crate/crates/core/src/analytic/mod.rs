//! Certified numerics: ball arithmetic, complex root isolation, one-variable
//! Mahler measures and the exact cyclotomic test.

pub mod ball;
pub mod kronecker;
pub mod mahler;
pub mod roots;

pub use ball::{ComplexBall, RealBall};
pub use kronecker::{cyclotomic_index, kronecker_test, root_of_unity_order};
pub use mahler::{log_mahler_1d, log_mahler_balls};
pub use roots::{isolate_roots, Precision, RootDisk};
