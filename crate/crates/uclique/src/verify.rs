//! Self-contained verification sweeps pairing every closed form in the crate
//! with an independent route: brute-force enumeration, literal gcd scans,
//! and spectral trace identities. The CLI `verify` subcommand and CI drive
//! these; each sweep stops at its first mismatch and reports it as a minimal
//! counterexample.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clique::{clique_count_bruteforce, clique_count_formula, ENUMERATION_VERTEX_CAP};
use crate::graph::{cayley_adjacent, crt_decode, crt_encode, MultipartiteFactor, ProductGraphSpec};
use crate::number_theory::{euler_phi, schemmel, schemmel_naive};
use crate::report::{Counterexample, SuiteVerdict};
use crate::spectrum::spectrum;

/// Seed used by every randomized sweep unless overridden, so reports are
/// reproducible byte for byte.
pub const DEFAULT_SEED: u64 = 42;

/// Parameters for the clique-count sweep: a full scan over unitary Cayley
/// graphs plus randomized product specs.
#[derive(Debug, Clone)]
pub struct TheoremSweep {
    pub n_max: u64,
    pub m_max: u64,
    pub random_specs: u64,
    pub random_m_max: u64,
    pub max_vertices: u64,
    pub seed: u64,
    pub cap: u64,
}

impl Default for TheoremSweep {
    fn default() -> Self {
        Self {
            n_max: 60,
            m_max: 5,
            random_specs: 200,
            random_m_max: 6,
            max_vertices: 200,
            seed: DEFAULT_SEED,
            cap: ENUMERATION_VERTEX_CAP,
        }
    }
}

/// Draws a product spec with up to `max_factors` factors, part sizes up to
/// `max_part_size`, part counts up to `max_parts`, rejecting until the
/// vertex count is at most `max_vertices` (so enumeration stays cheap).
pub fn random_spec(
    rng: &mut impl Rng,
    max_factors: usize,
    max_part_size: u64,
    max_parts: u64,
    max_vertices: u64,
) -> ProductGraphSpec {
    loop {
        let count = rng.gen_range(1..=max_factors);
        let factors = (0..count)
            .map(|_| {
                MultipartiteFactor::new(
                    rng.gen_range(1..=max_part_size),
                    rng.gen_range(1..=max_parts),
                )
                .expect("positive dimensions")
            })
            .collect();
        let spec = ProductGraphSpec::new(factors).expect("at least one factor");
        if spec.vertex_count_u64().is_some_and(|c| c <= max_vertices) {
            return spec;
        }
    }
}

/// Closed-form clique counts vs. brute-force enumeration, across unitary
/// Cayley graphs up to `n_max` and randomized product specs.
pub fn verify_theorem(sweep: &TheoremSweep) -> SuiteVerdict {
    let mut instances = 0u64;
    for n in 2..=sweep.n_max {
        let spec = ProductGraphSpec::unitary_cayley(n).expect("n >= 2");
        for m in 1..=sweep.m_max {
            instances += 1;
            let formula = clique_count_formula(&spec, m).expect("m >= 1");
            let oracle = clique_count_bruteforce(&spec, m, sweep.cap).expect("under cap");
            if formula != oracle {
                return SuiteVerdict::fail(
                    "theorem",
                    instances,
                    Counterexample {
                        instance: format!("n={n}"),
                        m: Some(m),
                        expected: formula.to_string(),
                        actual: oracle.to_string(),
                    },
                );
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(sweep.seed);
    for _ in 0..sweep.random_specs {
        let spec = random_spec(&mut rng, 3, 3, 5, sweep.max_vertices);
        for m in 1..=sweep.random_m_max {
            instances += 1;
            let formula = clique_count_formula(&spec, m).expect("m >= 1");
            let oracle = clique_count_bruteforce(&spec, m, sweep.cap).expect("under cap");
            if formula != oracle {
                return SuiteVerdict::fail(
                    "theorem",
                    instances,
                    Counterexample {
                        instance: format!("spec={spec}"),
                        m: Some(m),
                        expected: formula.to_string(),
                        actual: oracle.to_string(),
                    },
                );
            }
        }
    }
    SuiteVerdict::pass("theorem", instances)
}

/// Edge counts: `n*phi(n)/2` against a literal coprime-difference pair scan
/// up to `scan_n_max`, and against `n * degree(0) / 2` beyond that (the
/// graph is regular, and the degree is itself counted by scan).
pub fn verify_edges(scan_n_max: u64, n_max: u64) -> SuiteVerdict {
    let mut instances = 0u64;
    for n in 2..=n_max {
        instances += 1;
        let formula = crate::clique::cayley_clique_count(n, 2).expect("n >= 2");
        let scanned: BigUint = if n <= scan_n_max {
            let mut edges = 0u64;
            for x in 0..n {
                for y in (x + 1)..n {
                    if cayley_adjacent(n, x, y).expect("in range") {
                        edges += 1;
                    }
                }
            }
            BigUint::from(edges)
        } else {
            let degree_of_zero =
                (1..n).filter(|&y| cayley_adjacent(n, 0, y).expect("in range")).count() as u64;
            BigUint::from(n) * BigUint::from(degree_of_zero) / BigUint::from(2u32)
        };
        if formula != scanned {
            return SuiteVerdict::fail(
                "edges",
                instances,
                Counterexample {
                    instance: format!("n={n}"),
                    m: Some(2),
                    expected: formula.to_string(),
                    actual: scanned.to_string(),
                },
            );
        }
    }
    SuiteVerdict::pass("edges", instances)
}

/// Packed adjacency rows over raw residues, built from gcds only.
fn cayley_adjacency_words(n: u64) -> Vec<Vec<u64>> {
    let size = n as usize;
    let words = size.div_ceil(64);
    let mut rows = vec![vec![0u64; words]; size];
    for x in 0..size {
        for y in (x + 1)..size {
            if cayley_adjacent(n, x as u64, y as u64).expect("in range") {
                rows[x][y / 64] |= 1 << (y % 64);
                rows[y][x / 64] |= 1 << (x % 64);
            }
        }
    }
    rows
}

/// Triangle counts: `n*phi(n)*S_2(n)/6` against a bitset triangle count on
/// the raw residue adjacency (independent of the product-graph machinery).
pub fn verify_triangles(n_max: u64) -> SuiteVerdict {
    let mut instances = 0u64;
    for n in 2..=n_max {
        instances += 1;
        let formula = crate::clique::cayley_clique_count(n, 3).expect("n >= 2");
        let rows = cayley_adjacency_words(n);
        let mut triangles: u64 = 0;
        for x in 0..n as usize {
            for y in (x + 1)..n as usize {
                if rows[x][y / 64] >> (y % 64) & 1 == 1 {
                    // Common neighbors of x and y above y close a triangle.
                    for (w, (rx, ry)) in rows[x].iter().zip(&rows[y]).enumerate() {
                        let mut both = rx & ry;
                        if w == y / 64 {
                            let shift = (y % 64) + 1;
                            both &= if shift < 64 { !0u64 << shift } else { 0 };
                        } else if w < y / 64 {
                            both = 0;
                        }
                        triangles += both.count_ones() as u64;
                    }
                }
            }
        }
        if formula != BigUint::from(triangles) {
            return SuiteVerdict::fail(
                "triangles",
                instances,
                Counterexample {
                    instance: format!("n={n}"),
                    m: Some(3),
                    expected: formula.to_string(),
                    actual: triangles.to_string(),
                },
            );
        }
    }
    SuiteVerdict::pass("triangles", instances)
}

/// Closed-form Schemmel totients against the literal coprime-run count.
pub fn verify_schemmel(n_max: u64, r_max: u64) -> SuiteVerdict {
    let mut instances = 0u64;
    for n in 1..=n_max {
        for r in 0..=r_max {
            instances += 1;
            let closed = schemmel(r, n).expect("n >= 1");
            let naive = schemmel_naive(r, n).expect("n >= 1");
            if closed != naive {
                return SuiteVerdict::fail(
                    "schemmel",
                    instances,
                    Counterexample {
                        instance: format!("n={n}, r={r}"),
                        m: None,
                        expected: closed.to_string(),
                        actual: naive.to_string(),
                    },
                );
            }
        }
    }
    SuiteVerdict::pass("schemmel", instances)
}

/// Trace identities of the Ramanujan-sum spectrum: first moment 0, second
/// `n*phi(n)`, third `n*phi(n)*S_2(n)`, and every nonzero eigenvalue
/// dividing `phi(n)`.
pub fn verify_spectrum(n_max: u64) -> SuiteVerdict {
    let mut instances = 0u64;
    for n in 2..=n_max {
        instances += 1;
        let table = spectrum(n).expect("n >= 2");
        let phi = BigInt::from(euler_phi(n).expect("n >= 1"));
        let expected2 = BigInt::from(n) * &phi;
        let expected3 = &expected2 * BigInt::from(schemmel(2, n).expect("n >= 1"));
        let checks: [(&str, BigInt, BigInt); 3] = [
            ("moment1", table.moment(1), BigInt::zero()),
            ("moment2", table.moment(2), expected2),
            ("moment3", table.moment(3), expected3),
        ];
        for (what, got, want) in checks {
            if got != want {
                return SuiteVerdict::fail(
                    "spectrum",
                    instances,
                    Counterexample {
                        instance: format!("n={n}, {what}"),
                        m: None,
                        expected: want.to_string(),
                        actual: got.to_string(),
                    },
                );
            }
        }
        for (j, e) in table.eigenvalues().iter().enumerate() {
            if !e.is_zero() && !(&phi % e).is_zero() {
                return SuiteVerdict::fail(
                    "spectrum",
                    instances,
                    Counterexample {
                        instance: format!("n={n}, j={j}"),
                        m: None,
                        expected: format!("a divisor of {phi}"),
                        actual: e.to_string(),
                    },
                );
            }
        }
    }
    SuiteVerdict::pass("spectrum", instances)
}

/// CRT residue encoding as a graph isomorphism: exhaustive over all vertex
/// pairs up to `exhaustive_n_max`, then on random pairs with moduli up to
/// `random_n_max`.
pub fn verify_crt(
    exhaustive_n_max: u64,
    random_n_max: u64,
    random_pairs: u64,
    seed: u64,
) -> SuiteVerdict {
    let mut instances = 0u64;
    let check = |spec: &ProductGraphSpec,
                 n: u64,
                 x: u64,
                 y: u64,
                 instances: &mut u64|
     -> Option<Counterexample> {
        *instances += 1;
        let vx = crt_encode(n, x).expect("in range");
        let vy = crt_encode(n, y).expect("in range");
        if crt_decode(n, &vx).expect("valid vertex") != x {
            return Some(Counterexample {
                instance: format!("n={n}, x={x}"),
                m: None,
                expected: x.to_string(),
                actual: "a different residue after decode".to_string(),
            });
        }
        let direct = cayley_adjacent(n, x, y).expect("in range");
        let mapped = spec.adjacent(&vx, &vy).expect("valid vertices");
        if direct != mapped {
            return Some(Counterexample {
                instance: format!("n={n}, x={x}, y={y}"),
                m: None,
                expected: format!("adjacency {direct}"),
                actual: format!("adjacency {mapped}"),
            });
        }
        None
    };
    for n in 2..=exhaustive_n_max {
        let spec = ProductGraphSpec::unitary_cayley(n).expect("n >= 2");
        for x in 0..n {
            for y in 0..n {
                if let Some(cex) = check(&spec, n, x, y, &mut instances) {
                    return SuiteVerdict::fail("crt", instances, cex);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if random_n_max > exhaustive_n_max {
        for _ in 0..random_pairs {
            let n = rng.gen_range((exhaustive_n_max + 1)..=random_n_max);
            let spec = ProductGraphSpec::unitary_cayley(n).expect("n >= 2");
            let x = rng.gen_range(0..n);
            let y = rng.gen_range(0..n);
            if let Some(cex) = check(&spec, n, x, y, &mut instances) {
                return SuiteVerdict::fail("crt", instances, cex);
            }
        }
    }
    SuiteVerdict::pass("crt", instances)
}
