//! A two-sided chromatic-number certificate for unitary Cayley graphs:
//! the clique number gives the lower bound, a verified residue coloring
//! gives the matching upper bound.
//!
//! ```bash
//! cargo run --example chromatic_certificate
//! ```

use uclique::{clique_number, proper_coloring_witness, ProductGraphSpec, ENUMERATION_VERTEX_CAP};

fn main() {
    for n in [9u64, 30, 49, 210] {
        let spec = ProductGraphSpec::unitary_cayley(n).unwrap();
        let omega = clique_number(&spec);
        let witness = proper_coloring_witness(n, ENUMERATION_VERTEX_CAP).unwrap();
        // Lower bound: a clique of order omega needs omega colors.
        // Upper bound: x -> x mod p is a checked proper coloring.
        assert_eq!(omega, witness.palette());
        println!(
            "n = {n:>3}: clique number {omega}, proper {}-coloring by residue -> chromatic number {omega}",
            witness.palette()
        );
        let preview: Vec<u64> = witness.colors().iter().take(12).copied().collect();
        println!("         colors: {preview:?}...");
    }
}
