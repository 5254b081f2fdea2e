//! The payoff of the closed form: exact counts on graphs far too large to
//! materialize, in microseconds.
//!
//! ```bash
//! cargo run --release --example closed_form_speed
//! ```

use std::time::Instant;

use uclique::{
    cayley_clique_count, clique_count_bruteforce, clique_count_formula, ProductGraphSpec,
    ENUMERATION_VERTEX_CAP,
};

fn main() {
    // A 12-digit highly composite modulus. The graph has ~10^12 vertices;
    // nobody enumerates that, but the totient product does not care. Orders
    // above the smallest prime factor (here 2) come back as exact zeros.
    let n: u64 = 963_761_198_400;
    for m in [1u64, 2, 3, 8] {
        let started = Instant::now();
        let count = cayley_clique_count(n, m).unwrap();
        let micros = started.elapsed().as_micros();
        println!("n = {n}, m = {m}: {count}  ({micros} us)");
    }

    // A modulus built from primes >= 11 keeps high orders alive; the counts
    // get astronomically large and stay exact.
    let n: u64 = 35_336_848_261; // 11 * 13 * 17 * 19 * 23 * 29 * 31 * 37
    println!();
    for m in [3u64, 7, 11] {
        let started = Instant::now();
        let count = cayley_clique_count(n, m).unwrap();
        let micros = started.elapsed().as_micros();
        println!("n = {n}, m = {m}: {count}  ({micros} us)");
    }

    // Side-by-side on a graph small enough to enumerate: same number, very
    // different effort.
    let spec = ProductGraphSpec::unitary_cayley(1155).unwrap(); // 3 * 5 * 7 * 11
    let started = Instant::now();
    let formula = clique_count_formula(&spec, 3).unwrap();
    let formula_us = started.elapsed().as_micros();
    let started = Instant::now();
    let enumerated = clique_count_bruteforce(&spec, 3, ENUMERATION_VERTEX_CAP).unwrap();
    let enumerate_ms = started.elapsed().as_millis();
    assert_eq!(formula, enumerated);
    println!(
        "\nn = 1155, m = 3: {formula} triangles; formula {formula_us} us vs enumeration {enumerate_ms} ms"
    );
}
