//! The structure behind the counts: how a unitary Cayley graph factors into
//! balanced complete multipartite pieces, and the CRT map between residues
//! and product vertices.
//!
//! ```bash
//! cargo run --example product_graphs
//! ```

use uclique::{cayley_adjacent, crt_decode, crt_encode, euler_phi, ProductGraphSpec};

fn main() {
    // 360 = 2^3 * 3^2 * 5 becomes K[4,2] x K[3,3] x K[1,5].
    let n = 360;
    let spec = ProductGraphSpec::unitary_cayley(n).unwrap();
    println!("unitary Cayley graph of n = {n} is the direct product {spec}");
    println!("  vertices: {}", spec.vertex_count());
    println!("  regular of degree {} = phi({n}) = {}", spec.degree(), euler_phi(n).unwrap());

    // Residues travel through the CRT bijection; adjacency survives it.
    let (x, y) = (77, 101);
    let vx = crt_encode(n, x).unwrap();
    let vy = crt_encode(n, y).unwrap();
    println!("\nresidue {x} encodes as {vx}, residue {y} as {vy}");
    println!("  decode round-trips: {} and {}", crt_decode(n, &vx).unwrap(), crt_decode(n, &vy).unwrap());
    println!(
        "  adjacency agrees: direct {} vs product {}",
        cayley_adjacent(n, x, y).unwrap(),
        spec.adjacent(&vx, &vy).unwrap()
    );

    // Adjacency in the product is componentwise: every coordinate must land
    // in a different partite class.
    let u = crt_encode(n, 0).unwrap();
    let candidates = [1u64, 2, 5, 7, 30, 49];
    println!("\nneighbors of residue 0 among {candidates:?}:");
    for c in candidates {
        let v = crt_encode(n, c).unwrap();
        println!(
            "  0 ~ {c}: {} (difference gcd test: {})",
            spec.adjacent(&u, &v).unwrap(),
            cayley_adjacent(n, 0, c).unwrap()
        );
    }
}
