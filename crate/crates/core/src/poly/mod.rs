//! Exact Laurent polynomials over arbitrary-precision integers.

mod chebyshev;
mod gaussian;
mod half;
mod integer;
mod laurent;

pub use chebyshev::{chebyshev_s, sigma};
pub use gaussian::GaussianInt;
pub use half::HalfLaurent;
pub use integer::Integer;
pub use laurent::{IntLaurent, Laurent, TLaurent};
