//! Exact order polynomials of posets from skew, cylindric and shifted
//! shapes, with determinant engines, reduced-word formulas, Ehrhart data
//! and an exhaustive scan harness.

pub mod cli;
pub mod detformulas;
pub mod exactpoly;
pub mod geometry;
pub mod harness;
pub mod posets;
pub mod schubert;
pub mod shapes;

use thiserror::Error;

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] exactpoly::PolyError),
    #[error(transparent)]
    Shape(#[from] shapes::ShapeError),
    #[error(transparent)]
    Poset(#[from] posets::PosetError),
    #[error(transparent)]
    Det(#[from] detformulas::DetError),
    #[error(transparent)]
    Schubert(#[from] schubert::SchubertError),
    #[error(transparent)]
    Geometry(#[from] geometry::GeometryError),
    #[error(transparent)]
    Harness(#[from] harness::HarnessError),
    /// A forced engine that cannot handle the input.
    #[error("{0}")]
    EngineMismatch(String),
}

impl Error {
    /// Unwraps nested wrappers down to the error that actually occurred.
    pub fn root(self) -> Error {
        use detformulas::DetError as D;
        use geometry::GeometryError as G;
        use harness::HarnessError as H;
        use posets::PosetError as P;
        use schubert::SchubertError as S;
        match self {
            Error::Poset(P::Shape(e)) | Error::Det(D::Shape(e)) => Error::Shape(e),
            Error::Poset(P::Poly(e)) | Error::Det(D::Poly(e)) | Error::Geometry(G::Poly(e)) => Error::Poly(e),
            Error::Schubert(S::Det(e)) | Error::Geometry(G::Det(e)) => Error::Det(e).root(),
            Error::Geometry(G::Poset(e)) => Error::Poset(e).root(),
            Error::Harness(h) => match h {
                H::Poset(e) => Error::Poset(e).root(),
                H::Det(e) => Error::Det(e).root(),
                H::Geometry(e) => Error::Geometry(e).root(),
                H::Schubert(e) => Error::Schubert(e).root(),
                H::Shape(e) => Error::Shape(e),
                H::Poly(e) => Error::Poly(e),
                other => Error::Harness(other),
            },
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
