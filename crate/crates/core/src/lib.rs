//! Computations with pure symmetric automorphism groups of right-angled
//! Artin groups.
//!
//! The crate covers:
//!
//! - graph combinatorics: links, stars, component classification, SIL-pairs,
//!   condition (*) and clique polynomials ([`graph`]);
//! - finite presentations of `PAut(A_Γ)`, `POut(A_Γ)` and the PAut-like groups
//!   built from Ω-partitions ([`presentation`]);
//! - the quadratic Lie presentations of their lower central series Lie
//!   algebras and exact graded dimensions ([`lie`]);
//! - enveloping algebras, quadratic duals, Hilbert series and the numerical
//!   Koszul cross-check ([`quad`]);
//! - the Day-Wade decomposition into free abelian and Fouxe-Rabinovitch
//!   factors ([`day_wade`]);
//! - report assembly and the command line front end ([`cli`]).
//!
//! The Koszulness verdict reported everywhere is the combinatorial one:
//! `gr(PAut(A_Γ))` is Koszul exactly when `Γ` satisfies condition (*). The
//! Hilbert series identity `H_A(t)·H_{A!}(-t) = 1` is only a necessary
//! condition and is always labelled as a cross-check.
//!
//! ```
//! use raag_paut::Graph;
//!
//! let g = Graph::discrete(4);
//! let star = g.check_star_condition();
//! assert!(!star.holds);
//! assert_eq!(star.witness, Some([0, 1, 2, 3]));
//! ```

pub mod cli;
pub mod day_wade;
pub mod error;
pub mod graph;
pub mod lie;
pub mod linalg;
pub mod presentation;
pub mod quad;
pub mod series;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
