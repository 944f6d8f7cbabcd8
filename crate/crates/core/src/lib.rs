//! Computational toolkit for the small quantum cohomology of complex
//! projective space and the radial tt*-Toda equations.
//!
//! The crate has two halves that meet in the middle:
//!
//! * **Algebra.** [`qring`] implements the truncated cohomology ring of
//!   `CP^n`, the quantum differential equation `(ħ∂)^{n+1} y = q y`, the
//!   J-function and its residual check, and the gamma class.
//!   [`stokesdata`] holds the algebraic data attached to global tt*-Toda
//!   solutions: asymptotic exponents `γ`/`m`, Higgs exponents `k_i`,
//!   Stokes parameters `s_i`, and the Steinberg cross-section matrix.
//!   [`coxeter`] provides the `A_n` root system, the Coxeter element and
//!   plane projection, soliton spectra of polytopic models, and exterior
//!   powers of matrices. [`minimal`] computes fixed-point (Higgs) data
//!   and minimal-model effective central charges, in exact rational
//!   arithmetic.
//!
//! * **Analysis.** [`toda`] solves the radial tt*-Toda system
//!   `2(w_i)_{tt̄} = -e^{2(w_{i+1}-w_i)} + e^{2(w_i-w_{i-1})}` as a
//!   two-point boundary-value problem on `[ε, R]` and extracts the Stokes
//!   parameters from the large-`t` asymptotics.
//!
//! The flagship verification is the round trip between the two halves:
//! boundary data `γ` fed to the numerical solver must reproduce, through
//! the asymptotic fit, the Stokes parameters computed algebraically by
//! [`stokesdata::stokes_from_gamma`].



pub mod coxeter;
pub mod minimal;
pub mod qring;
pub mod stokesdata;



pub use coxeter::{coxeter_element, coxeter_plane, soliton_spectrum, wedge_matrix};
pub use qring::{
    chiral_matrix, cubic_hypersurface_operator, gamma_class, quantum_reduce, JFunction,
    QDEOperator, QuantumRing, TruncatedClass,
};
pub use stokesdata::{
    stokes_from_gamma, AsymptoticData, HiggsExponents, SteinbergMatrix, StokesParameters,
};

