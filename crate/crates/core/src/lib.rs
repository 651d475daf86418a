//! Connection Laplacians of finite abstract simplicial complexes, their
//! exact spectral identities (unimodularity, energy theorem, palindromic
//! characteristic polynomials, Cauchy-Binet minor sums, the deformation
//! identity), and spectral zeta functions: finite ones over the complex
//! plane and the explicit Barycentric limit for circles.

pub mod complex;
pub mod connection;
pub mod deform;
pub mod eigen;
pub mod error;
pub mod gamma;
pub mod hiprec;
pub mod intmatrix;
pub mod limits;
pub mod poly;
pub mod quad;
pub mod spectral;

pub use complex::{Simplex, SimplicialComplex, Vertex};
pub use error::{Error, Result};
pub use intmatrix::IntMatrix;
pub use poly::{CharPoly, IntPoly};
pub use spectral::{Rect, Spectrum};
