//! Exact computations around the Johnson filtration of `Aut(F_n)`.

pub mod autf;
pub mod bnscert;
pub mod commgraph;
pub mod exactlin;
pub mod lie;
pub mod magnus;
pub mod rational;
pub mod tensor;

pub use rational::Q;
