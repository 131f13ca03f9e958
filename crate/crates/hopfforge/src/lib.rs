//! Exact computations with finite-dimensional Hopf algebras over Q(ζ₈).

pub mod boson;
pub mod cli;
pub mod cyclo;
pub mod drinfeld;
pub mod hopf;
pub mod linalg;
pub mod modrep;
pub mod nichols;
pub mod par;
pub mod yd;

