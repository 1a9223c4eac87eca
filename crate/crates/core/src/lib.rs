//! McKay quivers of finite groups, computed exactly.
//!
//! * [`cyclotomic`]: exact arithmetic in `Z[ζ_n]`.
//! * [`abelian`]: finite abelian groups, characters, diagonal representations.
//! * [`chartab`]: groups given by character tables; tensor multiplicities by inner products.
//! * [`mckay`]: quivers, McKay quivers of abelian groups, returning arrows.
//! * [`covering`]: regular-covering verification for `N = G ∩ SL(V) ⊂ G`.
//! * [`diagrams`]: wuxing / yinyang / sixiang / bagua / hexagram presets and labels.
//! * [`emit`]: deterministic DOT and JSON output.
//! * [`cli`]: the `mckay` command line.

pub mod abelian;
pub mod chartab;
pub mod cli;
pub mod covering;
pub mod cyclotomic;
pub mod diagrams;
pub mod emit;
pub mod mckay;
