//! Projection operators: Brown's operator, the gcd-of-orders operator `Hp`
//! and the secondary/principal split operator `Np`.
//!
//! Variable sets are bitmasks over zero-based indices (`1 << i` is `x_{i+1}`).

mod brown;
mod cache;
mod liftspec;
mod np;

pub use brown::{bp_chain, bp_set, bp_single};
pub use cache::{hp, hp_designated, hp_uncached, mask_of, HpCache};
pub use liftspec::{hp_liftspec, LiftLevel, LiftSpec};
pub use np::{np, np_designated, np_parts, np_parts_set, NpParts};
