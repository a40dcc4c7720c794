//! Submodule embeddings `(A ⊆ B)` of finite length modules over `Z/p^N`,
//! their LR-tableaux, and the Hom quotients attached to pickets.

pub mod embedding;
pub mod hom;
pub mod io;
pub mod module;
pub mod partition;
pub mod random;
pub mod ring;
pub mod tableau;

pub use embedding::{Embedding, EmbeddingError, Picket};
pub use partition::Partition;
pub use ring::{Matrix, RingCtx};
pub use tableau::LRTableau;
