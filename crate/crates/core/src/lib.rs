//! Finite set-theoretic Yang-Baxter solutions and the Płonka magmas and
//! bi-magmas that classify their BLS subclass.

pub mod builders;
pub mod canon;
pub mod census;
pub mod cli;
pub mod error;
pub mod families;
pub mod finite;
pub mod ideals;
pub mod io;
pub mod laws;
pub mod morphisms;
pub mod plonka;
pub mod verdict;

pub use error::{Error, Result};
pub use finite::{
    canonical_correspondence, BiMagma, CayleyTable, FiniteFunction, Guards, Permutation, RMap,
    SetPartition, Solution,
};
pub use laws::{check_bimagma_law, check_magma_law, check_rmap_law, BiMagmaLaw, MagmaLaw, RMapLaw};
pub use morphisms::{are_isomorphic, automorphisms, find_homomorphisms, Morphism};
pub use verdict::{Verdict, Witness};
