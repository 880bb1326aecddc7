//! Random knots and links in the petal model.
//!
//! A knot with `2n+1` petals is a single permutation of strand heights at the
//! centre of a petal diagram; a two-component link with `4n` petals likewise.
//! Drawing the permutation uniformly at random gives a random knot (or link),
//! and every finite-type invariant becomes a random variable.
//!
//! The crate is organised bottom-up:
//!
//! * [`diagrams`] builds petal knots and links, their star and grid
//!   diagrams, and extracts the Gauss diagram of a knot diagram.
//! * [`gauss`] evaluates Gauss diagram formulas; it provides the Casson
//!   invariant `c2` and the order-3 invariant `v3`.
//! * [`linking`] handles the linking number of two-component links through
//!   the signed area of a lattice walk, with an exact dynamic program and the
//!   limiting law.
//! * [`moments`] enumerates exact distributions, interpolates moment
//!   polynomials, and computes the limiting moments of `c2`.
//! * [`sampling`] draws reproducible Monte Carlo samples from the petal, star
//!   and grid models.
//!
//! ```
//! use petaluma::diagrams::{PetalKnot, Permutation};
//! use petaluma::gauss;
//!
//! let trefoil = PetalKnot::new(Permutation::new(vec![0, 3, 1, 4, 2]).unwrap()).unwrap();
//! let d = trefoil.star_gauss_diagram();
//! assert_eq!(gauss::c2(&d), 1);
//! assert_eq!(gauss::v3(&d), 1);
//! ```

pub mod budget;
pub mod diagrams;
pub mod error;
pub mod gauss;
pub mod linking;
pub mod moments;
pub mod rational;
pub mod sampling;

pub use error::{Error, Result};

// The guide under `book/` is compiled as doctests so its snippets stay honest.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/petal-diagrams.md")]
    mod petal_diagrams {}
    #[doc = include_str!("../../../book/src/gauss-formulas.md")]
    mod gauss_formulas {}
    #[doc = include_str!("../../../book/src/linking-number.md")]
    mod linking_number {}
    #[doc = include_str!("../../../book/src/moments.md")]
    mod moments {}
    #[doc = include_str!("../../../book/src/sampling.md")]
    mod sampling {}
}
