//! Exact clique counting for unitary Cayley graphs and direct products of
//! balanced complete multipartite graphs.
//!
//! The unitary Cayley graph of Z/nZ has vertices `0..n` with an edge between
//! two residues whenever their difference is coprime to `n`. It factors,
//! through the Chinese remainder theorem, into a direct product of balanced
//! complete multipartite graphs `K[a, b]`, and the number of order-`m`
//! cliques in any such product has a closed form built out of Schemmel
//! totient values. This crate implements that closed form with exact
//! big-integer arithmetic, together with the machinery needed to distrust it:
//! an independent brute-force enumerator, the literal gcd-scan totient
//! oracle, and the Ramanujan-sum spectrum with its trace identities.
//!
//! # Quick start
//!
//! ```
//! use num_bigint::BigUint;
//! use uclique::{cayley_clique_count, clique_number, ProductGraphSpec};
//!
//! // Triangles in the unitary Cayley graph on Z/15Z.
//! assert_eq!(cayley_clique_count(15, 3).unwrap(), BigUint::from(60u32));
//!
//! // The largest clique order equals the smallest prime factor of n.
//! let spec = ProductGraphSpec::unitary_cayley(15).unwrap();
//! assert_eq!(clique_number(&spec), 3);
//! ```
//!
//! The `examples/` directory has one runnable program per capability:
//! counting, enumeration, totients, product-graph structure, spectra,
//! DOT export, the chromatic certificate, and closed-form speed at scales
//! where enumeration is hopeless. The thin `uclique` binary exposes the same
//! surface as subcommands for scripts.

pub mod cli;
pub mod clique;
pub mod error;
pub mod graph;
pub mod number_theory;
pub mod report;
pub mod spectrum;
pub mod verify;

pub use clique::{
    cayley_clique_count, clique_count_bruteforce, clique_count_formula,
    clique_count_including_empty, clique_number, common_neighbor_count, enumerate_cliques,
    proper_coloring_witness, Clique, ColoringWitness, ENUMERATION_VERTEX_CAP,
};
pub use error::{Error, Result};
pub use graph::{
    cayley_adjacent, cayley_dot, crt_decode, crt_encode, product_dot, MultipartiteFactor,
    ProductGraphSpec, Vertex, DOT_VERTEX_CAP,
};
pub use number_theory::{
    euler_phi, factorize, mobius, ramanujan_sum, schemmel, schemmel_naive, schemmel_pair,
    Factorization,
};
pub use spectrum::{moment, spectrum, SpectrumTable};
