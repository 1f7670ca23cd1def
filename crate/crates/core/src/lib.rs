//! Open sample points via the gcd-of-orders projection and a
//! semi-definiteness test built on them.

pub mod corpus;
pub mod lifting;
pub mod parse;
pub mod poly;
pub mod projection;
pub mod psd;
pub mod realroots;
