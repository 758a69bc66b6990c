//! Spectral lower bounds for the traveling salesman problem.
//!
//! The central quantity is `φ(D) = Σ c_k μ_k`: the eigenvalues `μ` of the
//! centered distance matrix `−PDP` restricted to the complement of the
//! all-ones vector, paired in sorted order with the cycle coefficients
//! `c_k = 1 − cos(2πk/N)`. It never exceeds the optimal tour length.
//!
//! The crate also ships the machinery needed to check that claim: exact
//! solvers, instance families with known optima, a TSPLIB reader, and the
//! Hamiltonicity screens that follow from applying the bound to graphs.

pub mod assignment;
pub mod bounds;
pub mod graph;
pub mod instances;
pub mod matrix;
pub mod rng;
pub mod solvers;
pub mod tsplib;

pub use matrix::{ComplexSpectrum, DenseMatrix, MatrixError, Spectrum};
