//! The Schemmel totient family: closed form, the literal counting
//! definition, and the classical functions they generalize.
//!
//! ```bash
//! cargo run --example schemmel_totients
//! ```

use uclique::{euler_phi, mobius, ramanujan_sum, schemmel, schemmel_naive};

fn main() {
    // S_r(n) counts the k <= n starting a run of r consecutive integers all
    // coprime to n. S_0(n) = n and S_1 = phi.
    println!("S_r(n) for small n (closed form; the naive count agrees):");
    print!("{:>6}", "n\\r");
    for r in 0..=4 {
        print!("{r:>6}");
    }
    println!();
    for n in [1u64, 2, 3, 5, 6, 9, 10, 15, 30, 105] {
        print!("{n:>6}");
        for r in 0..=4 {
            let closed = schemmel(r, n).unwrap();
            assert_eq!(closed, schemmel_naive(r, n).unwrap());
            print!("{closed:>6}");
        }
        println!();
    }

    println!("\nS_1 is Euler's phi:");
    for n in [10u64, 12, 100] {
        println!(
            "  phi({n}) = {} = S_1({n}) = {}",
            euler_phi(n).unwrap(),
            schemmel(1, n).unwrap()
        );
    }

    // Ramanujan sums come from the same toolbox: mu(n/g) phi(n) / phi(n/g).
    println!("\nRamanujan sums c_6(j) and the Mobius values feeding them:");
    for j in 0..6 {
        println!("  c_6({j}) = {:>2}", ramanujan_sum(6, j).unwrap());
    }
    println!("  mu(1..6) = {:?}", (1..=6).map(|k| mobius(k).unwrap()).collect::<Vec<_>>());
}
