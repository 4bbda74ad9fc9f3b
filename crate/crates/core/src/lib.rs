pub mod action;
pub mod check;
pub mod equivariance;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod pvs;
pub mod rat;
pub mod sample;
pub mod search;
pub mod tensor;
pub mod verify;
pub mod wpoint;

pub use error::{Error, Result};
pub use linalg::{Matrix, Span};
pub use rat::Rat;
pub use tensor::{Alt2Tensor, Alt4Dual, SymForm, Variance};
pub use pvs::{DualMatrix3, PlueckerPoint, QuadForm3, VElement};
pub use action::{GroupElement, LiePair};
