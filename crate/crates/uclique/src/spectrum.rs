//! Adjacency spectrum of unitary Cayley graphs, generated exactly from
//! Ramanujan sums, plus the power-sum moments used to cross-check the
//! counting formulas through trace identities.
//!
//! The graph is circulant, so the characters of Z/nZ are exact eigenvectors
//! and no numerical eigendecomposition is ever needed: the eigenvalue at
//! index `j` is the Ramanujan sum `c_n(j)`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::number_theory::{euler_phi, ramanujan_sum};

/// The full eigenvalue list of the unitary Cayley graph of `n`, indexed by
/// `j = 0..n`. Entry 0 is `phi(n)`, the common degree; every nonzero entry
/// divides `phi(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumTable {
    n: u64,
    eigenvalues: Vec<BigInt>,
}

impl SpectrumTable {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn eigenvalues(&self) -> &[BigInt] {
        &self.eigenvalues
    }

    /// Power-sum moment `sum_j eigenvalue_j^k`, i.e. the trace of the k-th
    /// power of the adjacency matrix: walk counts returning to the start.
    pub fn moment(&self, k: u32) -> BigInt {
        self.eigenvalues.iter().map(|e| e.pow(k)).sum()
    }
}

/// Computes the spectrum of the unitary Cayley graph of `n`.
pub fn spectrum(n: u64) -> Result<SpectrumTable> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    let eigenvalues = (0..n)
        .map(|j| ramanujan_sum(n, j))
        .collect::<Result<Vec<_>>>()?;
    debug_assert_eq!(eigenvalues[0], BigInt::from(euler_phi(n)?));
    Ok(SpectrumTable { n, eigenvalues })
}

/// One-shot `k`-th moment of the spectrum of `n`.
pub fn moment(n: u64, k: u32) -> Result<BigInt> {
    Ok(spectrum(n)?.moment(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number_theory::schemmel;
    use num_bigint::BigUint;
    use num_traits::Zero;

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn spectrum_of_six_is_the_hexagon_spectrum() {
        let table = spectrum(6).unwrap();
        assert_eq!(table.eigenvalues(), &ints(&[2, 1, -1, -2, -1, 1])[..]);
    }

    #[test]
    fn spectrum_of_four_is_the_square_spectrum() {
        let table = spectrum(4).unwrap();
        assert_eq!(table.eigenvalues(), &ints(&[2, 0, -2, 0])[..]);
    }

    #[test]
    fn prime_spectrum_is_the_complete_graph_spectrum() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let table = spectrum(p).unwrap();
            let mut expected = vec![BigInt::from(p - 1)];
            expected.extend(std::iter::repeat_n(BigInt::from(-1), p as usize - 1));
            assert_eq!(table.eigenvalues(), &expected[..]);
        }
    }

    #[test]
    fn spectrum_rejects_tiny_moduli() {
        assert_eq!(spectrum(0), Err(Error::ModulusTooSmall(0)));
        assert_eq!(spectrum(1), Err(Error::ModulusTooSmall(1)));
    }

    #[test]
    fn moment_examples() {
        assert_eq!(moment(10, 2).unwrap(), BigInt::from(40));
        assert_eq!(moment(5, 3).unwrap(), BigInt::from(60));
        for n in 2..=50u64 {
            assert!(moment(n, 1).unwrap().is_zero(), "trace at n={n}");
        }
    }

    #[test]
    fn moments_match_the_counting_formulas() {
        for n in 2..=120u64 {
            let table = spectrum(n).unwrap();
            let phi = BigInt::from(euler_phi(n).unwrap());
            let s2 = BigInt::from(schemmel(2, n).unwrap());
            let n_int = BigInt::from(n);
            assert!(table.moment(1).is_zero());
            assert_eq!(table.moment(2), &n_int * &phi);
            assert_eq!(table.moment(3), n_int * phi * s2);
        }
    }

    #[test]
    fn nonzero_eigenvalues_divide_phi() {
        for n in 2..=120u64 {
            let table = spectrum(n).unwrap();
            let phi = BigInt::from(euler_phi(n).unwrap());
            for (j, e) in table.eigenvalues().iter().enumerate() {
                if !e.is_zero() {
                    assert!((&phi % e).is_zero(), "eigenvalue {e} at (n={n}, j={j})");
                }
            }
        }
    }

    #[test]
    fn second_moment_counts_edges_twice() {
        use crate::clique::{clique_count_bruteforce, ENUMERATION_VERTEX_CAP};
        use crate::graph::ProductGraphSpec;
        for n in 2..=40u64 {
            let spec = ProductGraphSpec::unitary_cayley(n).unwrap();
            let edges = clique_count_bruteforce(&spec, 2, ENUMERATION_VERTEX_CAP).unwrap();
            assert_eq!(
                moment(n, 2).unwrap(),
                BigInt::from(edges * BigUint::from(2u32)),
                "n={n}"
            );
        }
    }
}
