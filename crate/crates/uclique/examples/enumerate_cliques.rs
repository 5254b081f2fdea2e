//! Streaming enumeration of cliques, and the agreement between the
//! enumerator and the closed form.
//!
//! ```bash
//! cargo run --example enumerate_cliques
//! ```

use std::ops::ControlFlow;

use uclique::{
    clique_count_bruteforce, clique_count_formula, crt_decode, enumerate_cliques,
    ProductGraphSpec, ENUMERATION_VERTEX_CAP,
};

fn main() {
    let n = 21;
    let spec = ProductGraphSpec::unitary_cayley(n).unwrap();

    // Stream the first few triangles, translated back to residues mod n.
    println!("first triangles of the unitary Cayley graph of n = {n}:");
    let mut shown = 0;
    enumerate_cliques(&spec, 3, ENUMERATION_VERTEX_CAP, |clique| {
        let mut residues: Vec<u64> = clique
            .vertices()
            .iter()
            .map(|v| crt_decode(n, v).unwrap())
            .collect();
        residues.sort_unstable();
        println!("  {residues:?}");
        shown += 1;
        if shown == 5 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .unwrap();

    // Exhaustive enumeration agrees with the formula, order by order.
    println!("\nformula vs enumeration for n = {n}:");
    for m in 1..=4 {
        let formula = clique_count_formula(&spec, m).unwrap();
        let counted = clique_count_bruteforce(&spec, m, ENUMERATION_VERTEX_CAP).unwrap();
        println!("  m = {m}: formula {formula}, enumerated {counted}");
        assert_eq!(formula, counted);
    }
}
