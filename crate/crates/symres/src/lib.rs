//! Rewriting, Brown's collapsing scheme and an explicit low-dimensional free
//! resolution for the symmetric groups, with exact homology computations.

pub mod bar;
pub mod chain;
pub mod chain_maps;
pub mod d8;
pub mod cocycles;
pub mod error;
pub mod exactness;
pub mod expand;
pub mod finite_bar;
pub mod group_ring;
pub mod h3;
pub mod homology;
pub mod module;
pub mod pcomplex;
pub mod product;
pub mod perm;
pub mod prism;
pub mod qformulas;
pub mod resolution;
pub mod rewrite;
pub mod twisted;

pub use chain::Chain;
pub use error::{Error, Result};
pub use group_ring::{GroupRingElem, RingSpec};
pub use pcomplex::{boundary_chain, boundary_p, enumerate_p_cells, PCell, PChain};
pub use perm::Perm;
pub use rewrite::{NormalForm, Ramp, Rule, Word};
