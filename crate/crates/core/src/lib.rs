//! Exact verification engine for character-degree and prime-graph arguments
//! about finite simple groups.

pub mod arith;
pub mod zsigmondy;
pub mod groups;
pub mod degrees;
pub mod alternating;
pub mod claims;
