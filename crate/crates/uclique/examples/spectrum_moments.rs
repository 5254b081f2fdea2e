//! Eigenvalues from Ramanujan sums, and the trace identities tying the
//! spectrum to the counting formulas.
//!
//! ```bash
//! cargo run --example spectrum_moments
//! ```

use num_bigint::BigInt;

use uclique::{cayley_clique_count, spectrum};

fn main() {
    // The graph is circulant, so eigenvalue j is the Ramanujan sum c_n(j):
    // exact integers, no numerical eigensolver anywhere.
    for n in [6u64, 4, 10, 12] {
        let table = spectrum(n).unwrap();
        let rendered: Vec<String> = table.eigenvalues().iter().map(|e| e.to_string()).collect();
        println!("spectrum of n = {n:>2}: {}", rendered.join(" "));
    }

    // Power sums of the eigenvalues are traces of adjacency powers, i.e.
    // closed-walk counts, so they must reproduce the clique counts.
    let n = 105;
    let table = spectrum(n).unwrap();
    println!("\ntrace identities at n = {n}:");
    println!("  sum of eigenvalues          = {} (loopless: 0)", table.moment(1));
    let edges = cayley_clique_count(n, 2).unwrap();
    println!(
        "  sum of squares              = {} = 2 * {edges} edges",
        table.moment(2)
    );
    let triangles = cayley_clique_count(n, 3).unwrap();
    println!(
        "  sum of cubes                = {} = 6 * {triangles} triangles",
        table.moment(3)
    );
    assert_eq!(table.moment(2), BigInt::from(edges) * 2);
    assert_eq!(table.moment(3), BigInt::from(triangles) * 6);
}
