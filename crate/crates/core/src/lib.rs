//! Exact Drazin and group inverses over the Gaussian rationals ℚ(i), and
//! closed-form group inverses of the anti-triangular block matrices
//! `[[E, I], [F, 0]]`, `[[E, F], [I, 0]]` and `[[E, F], [F, 0]]`.
//!
//! Everything is exact: there are no tolerances anywhere.
//!
//! ```
//! use blockinv::{block::ef_f0_right, Matrix};
//!
//! let e = Matrix::from_int_rows([[1, 2], [0, -1]]);
//! let f = Matrix::from_str_rows([["i", "i"], ["0", "0"]]).unwrap();
//! let inv = ef_f0_right(&e, &f).unwrap();
//! assert_eq!(inv.gamma, Matrix::from_int_rows([[0, 1], [0, -1]]));
//! ```

pub mod block;
pub mod cli;
pub mod drazin;
pub mod error;
pub mod instance;
pub mod matrix;
pub mod scalar;

pub use block::{assemble_m, block_group_inverse, check_conditions, BlockGroupInverse, BlockShape, ConditionReport, Theorem};
pub use drazin::{block_triangular_drazin, cline, drazin, drazin_index, group_inverse, DrazinResult};
pub use error::{Error, Result};
pub use matrix::{Matrix, PierceSplit, Rref};
pub use scalar::{parse_scalar, GaussianRational};
