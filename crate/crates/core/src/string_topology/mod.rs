//! Loop homology generators, the coproduct, the Goresky-Hingston product
//! and the sweeps that check them against each other.

mod classes;
mod coproduct;
mod presentation;
mod product;
mod verify;

pub use classes::*;
pub use coproduct::*;
pub use presentation::*;
pub use product::*;
pub use verify::*;
