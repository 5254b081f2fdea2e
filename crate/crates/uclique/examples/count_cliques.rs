//! Closed-form clique counts, for unitary Cayley graphs and for arbitrary
//! products of balanced complete multipartite graphs.
//!
//! ```bash
//! cargo run --example count_cliques
//! ```

use uclique::{cayley_clique_count, clique_count_formula, clique_number, ProductGraphSpec};

fn main() {
    // The unitary Cayley graph on Z/15Z: 15 vertices, phi(15) = 8 regular.
    // Counts per clique order, straight from the totient product.
    println!("order-m clique counts in the unitary Cayley graph of n = 15");
    for m in 1..=5 {
        println!("  m = {m}: {}", cayley_clique_count(15, m).unwrap());
    }

    // The counts vanish exactly beyond the smallest prime factor.
    let spec = ProductGraphSpec::unitary_cayley(15).unwrap();
    println!("clique number: {}", clique_number(&spec));

    // K_7 as the n = 7 unitary Cayley graph: one clique per subset size.
    println!("\nK_7 contains binomial(7, m) cliques of order m");
    for m in 1..=7 {
        println!("  m = {m}: {}", cayley_clique_count(7, m).unwrap());
    }

    // The same formula covers any direct product of K[a,b] factors, with no
    // modulus in sight. K[2,3] x K[1,2] has 12 vertices and 24 edges.
    let spec: ProductGraphSpec = "2x3,1x2".parse().unwrap();
    println!("\ncounts in K[2,3] x K[1,2]");
    for m in 1..=3 {
        println!("  m = {m}: {}", clique_count_formula(&spec, m).unwrap());
    }
}
