//! Exact-arithmetic engine for the real-group orbit structure on compact
//! duals of Mumford-Tate domains: Cartan classes, bigradings, codimensions,
//! incidence, polarizability, cuspidality, and naive-limit data.

pub mod cyclo;
pub mod error;
pub mod hodge;
pub mod linalg;
pub mod chevalley;
pub mod orbits;
pub mod realform;
pub mod report;
pub mod roots;

pub use cyclo::{rat, rat_int, Cyclo8, Rat};
pub use error::{Error, Result};
pub use linalg::{hermitian_signature, Mat, Subspace};
pub use chevalley::{LieAlgebra};
pub use orbits::{Edge, EdgeKind, EnumerationOptions, OrbitRecord, OrbitSet, RealWeylFixtures, Session};
pub use realform::{cartan_hasse, initial_frame, CartanFrame, CartanGraph, Conjugation, GradingDatum, RootClass};
pub use roots::{RootSystem, RootVec, WeylElement, WeylGroup};
