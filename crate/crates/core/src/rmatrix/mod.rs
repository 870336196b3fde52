//! Explicit `U_q[gl(2|1)]` braid-generator data, its reconstruction from
//! projectors at exact sample points, and the verification suites.

pub mod basis;
pub mod explicit;
pub mod projector;
pub mod sampled;
pub mod trig;
pub mod verify;

pub use basis::{basis_unnormalized, norm_squared, KetVector16};
pub use explicit::{
    explicit_caps_cups, explicit_sigma, explicit_sigma_bar, explicit_sigma_inverse, graded_permutation, parity, ungrade,
    Ext, Poly, GRADING,
};
pub use projector::{admissible, projector, random_points, sigma_constructed, trig_r};
pub use sampled::{qbracket, qpow, SampledExt, SqrtContext};
pub use verify::{run_suite, verify_cap_loop, verify_skein, verify_yang_baxter, VerifyReport, SUITES};
