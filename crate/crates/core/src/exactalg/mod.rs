//! Exact arithmetic and linear algebra over `Q` and cyclotomic extensions.

pub mod cyclotomic;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod serial;
pub mod subspace;
pub mod tensor;
pub mod vector;

pub use cyclotomic::{Cyclotomic, CyclotomicField};
pub use matrix::Matrix;
pub use rational::Rational;
pub use scalar::Scalar;
pub use subspace::{CombineMode, EchelonBuilder, Subspace};
pub use tensor::TensorIndex;
pub use vector::SparseVec;
