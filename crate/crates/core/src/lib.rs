//! Exact polynomial engine for the algebraic constant-mean-curvature
//! condition and a replay of the degree-three nonexistence argument.

pub mod calculus;
pub mod cli;
pub mod cmc;
pub mod cubic;
pub mod divide;
pub mod parse;
pub mod replay;
pub mod ring;
