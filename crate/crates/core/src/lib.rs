//! Evaluation of f_{ν,μ}(t), the inverse Laplace transform of s^{-μ} e^{-s^ν}
//! (0 < ν < 1), through several independent representations, together with
//! the special functions it is built from and a catalog of Efros-type
//! integral identities that is checked numerically.
//!
//! ```
//! use efros::kernel::{eval_auto, KernelParams};
//! use efros::quad::QuadratureSpec;
//!
//! let p = KernelParams::new(0.5, 0.0).unwrap();
//! let r = eval_auto(p, 1.0, &QuadratureSpec::default()).unwrap();
//! assert!((r.value - 0.2196956447).abs() < 1e-9);
//! ```

// Guards are written as !(x > 0.0) so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod identities;
pub mod kernel;
pub mod quad;
pub mod specfun;

pub use error::{Error, Result};
