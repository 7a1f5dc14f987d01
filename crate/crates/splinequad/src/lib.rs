//! Gaussian and one-parameter optimal quadrature rules for spline spaces.
//!
//! Rules are built for the C0 spaces S_{2N,0} and S_{2N-1,0} and the C1
//! spaces S_{2N+1,1} and S_{2N,1} on arbitrary partitions of an interval.
//! Each subinterval carries the roots of a semi-classical Jacobi-type
//! polynomial whose parameters are carried from one subinterval to the next
//! by a rational recursion map, sweeping inward from both ends.
//!
//! ```
//! use splinequad::engine::{generate, Family, FreeParameter, Partition, RuleRequest};
//!
//! let part = Partition::new(0.0, 9.0, vec![1.0, 2.0, 3.0, 1.0, 1.0, 1.0]).unwrap();
//! let req = RuleRequest {
//!     continuity: 1,
//!     nodes_per_subinterval: 1,
//!     family: Family::Full,
//!     middle_index: 3,
//!     free_parameter: FreeParameter::DefaultZero,
//! };
//! let rule = generate(&req, &part).unwrap();
//! assert_eq!(rule.flat.len(), 7);
//! assert!((rule.flat[0].0 - 0.25).abs() < 1e-14);
//! ```

pub mod engine;
pub mod error;
pub mod family_c0;
pub mod family_c1;
pub mod orthopoly;
pub mod realline;
pub mod splinecheck;

pub use error::{Error, Result};
pub use family_c0::ReferenceRule;
