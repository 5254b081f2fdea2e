//! Exact integer arithmetic: factorization, Möbius and Euler functions,
//! Schemmel totients, and Ramanujan sums.
//!
//! Everything here is a pure function of its inputs, so all of it is safe to
//! call from any number of threads. Counts come back as [`BigUint`] because
//! the clique-counting products built on top of them overflow 64 bits already
//! for moderate inputs.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Prime factorization of a positive integer, as `(prime, exponent)` pairs
/// with strictly increasing primes. The empty list represents 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// The `(prime, exponent)` pairs in ascending prime order.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Reconstructs the factored integer.
    pub fn value(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, &(p, a)| acc * p.pow(a))
    }

    /// Smallest prime factor, or `None` for 1.
    pub fn smallest_prime(&self) -> Option<u64> {
        self.factors.first().map(|&(p, _)| p)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Factors `n` by trial division: 2 first, then odd candidates up to sqrt.
///
/// Deterministic and exact; comfortable up to about 10^12 (one million trial
/// divisions in the worst case). This is a correctness tool, not a factoring
/// contest.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut rest = n;
    let mut factors = Vec::new();
    if rest.is_multiple_of(2) {
        let mut exp = 0u32;
        while rest.is_multiple_of(2) {
            rest /= 2;
            exp += 1;
        }
        factors.push((2, exp));
    }
    let mut p = 3u64;
    while p <= rest / p {
        if rest.is_multiple_of(p) {
            let mut exp = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                exp += 1;
            }
            factors.push((p, exp));
        }
        p += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

/// Möbius function: 0 if `n` has a squared prime factor, otherwise
/// (-1)^(number of prime factors).
pub fn mobius(n: u64) -> Result<i32> {
    let f = factorize(n)?;
    if f.factors().iter().any(|&(_, a)| a > 1) {
        return Ok(0);
    }
    Ok(if f.factors().len() % 2 == 0 { 1 } else { -1 })
}

/// Euler's totient, the count of `1 <= k <= n` coprime to `n`.
pub fn euler_phi(n: u64) -> Result<BigUint> {
    schemmel(1, n)
}

/// The r-th Schemmel totient, the multiplicative function with
/// `S_r(p^a) = p^(a-1) * (p - r)` when `p >= r` and 0 when `p < r`.
///
/// `S_0(n) = n` and `S_1 = phi`. Whenever `r` is at least the smallest prime
/// factor of `n`, some prime-power value vanishes and the result is 0.
pub fn schemmel(r: u64, n: u64) -> Result<BigUint> {
    let f = factorize(n)?;
    let mut acc = BigUint::one();
    for &(p, alpha) in f.factors() {
        if p < r {
            return Ok(BigUint::zero());
        }
        acc *= BigUint::from(p).pow(alpha - 1) * BigUint::from(p - r);
    }
    Ok(acc)
}

/// Counts `S_r(n)` literally: the positive integers `k <= n` such that
/// `gcd(k + i, n) = 1` for every `i` in `0..r`.
///
/// O(n * r) gcd evaluations; this is the desk-scale oracle for [`schemmel`],
/// not a production path. For `r = 0` the condition is vacuous and every
/// `k <= n` counts.
pub fn schemmel_naive(r: u64, n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut count = 0u64;
    for k in 1..=n {
        let coprime_run = (0..r).all(|i| {
            let shifted = ((k as u128 + i as u128) % n as u128) as u64;
            shifted.gcd(&n) == 1
        });
        if coprime_run {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// The two-argument Schemmel value `max(x * (y - m), 0)`.
///
/// For a balanced complete multipartite factor with `y` partite classes of
/// `x` vertices, this counts the vertices lying outside `m` chosen classes.
/// It bridges to the classical totient via
/// `schemmel_pair(m, p^(a-1), p) = schemmel(m, p^a)`.
pub fn schemmel_pair(m: u64, x: u64, y: u64) -> BigUint {
    if y > m {
        BigUint::from(x) * BigUint::from(y - m)
    } else {
        BigUint::zero()
    }
}

/// Ramanujan sum `c_n(j)` via the von Sterneck/Hölder closed form
/// `mu(n/g) * phi(n) / phi(n/g)` with `g = gcd(j, n)`.
///
/// Exact integer arithmetic throughout; no floating-point roots of unity.
/// `j` is taken modulo `n`, and `c_n(0) = phi(n)`.
pub fn ramanujan_sum(n: u64, j: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let g = (j % n).gcd(&n);
    let reduced = n / g;
    let mu = mobius(reduced)?;
    if mu == 0 {
        return Ok(BigInt::zero());
    }
    let phi_n = euler_phi(n)?;
    let phi_reduced = euler_phi(reduced)?;
    let (quot, rem) = phi_n.div_rem(&phi_reduced);
    debug_assert!(rem.is_zero(), "phi(n/g) must divide phi(n)");
    Ok(BigInt::from(quot) * BigInt::from(mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::gcd;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn factorize_one_is_empty() {
        let f = factorize(1).unwrap();
        assert!(f.is_one());
        assert_eq!(f.value(), 1);
        assert_eq!(f.smallest_prime(), None);
    }

    #[test]
    fn factorize_twelve() {
        let f = factorize(12).unwrap();
        assert_eq!(f.factors(), &[(2, 2), (3, 1)]);
        assert_eq!(f.value(), 12);
        assert_eq!(f.smallest_prime(), Some(2));
    }

    #[test]
    fn factorize_large_prime() {
        // 1000003 has no divisor up to its square root, checked independently.
        let n = 1_000_003u64;
        assert!((2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d)));
        let f = factorize(n).unwrap();
        assert_eq!(f.factors(), &[(n, 1)]);
    }

    #[test]
    fn factorize_rejects_zero() {
        assert_eq!(factorize(0), Err(Error::ZeroArgument));
        assert_eq!(mobius(0), Err(Error::ZeroArgument));
        assert_eq!(euler_phi(0), Err(Error::ZeroArgument));
        assert_eq!(schemmel(3, 0), Err(Error::ZeroArgument));
        assert_eq!(schemmel_naive(3, 0), Err(Error::ZeroArgument));
        assert_eq!(ramanujan_sum(0, 5), Err(Error::ZeroArgument));
    }

    #[test]
    fn factorization_invariants_hold_on_a_range() {
        for n in 1..=5000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.value(), n);
            for window in f.factors().windows(2) {
                assert!(window[0].0 < window[1].0, "primes must increase");
            }
            for &(p, a) in f.factors() {
                assert!(a >= 1);
                assert!(p >= 2);
                assert!((2..p).all(|d| p % d != 0), "{p} must be prime");
            }
        }
    }

    #[test]
    fn mobius_small_table() {
        let expected = [
            1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1, 0, -1, 0, -1, 0,
        ];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(mobius(i as u64 + 1).unwrap(), want, "mu({})", i + 1);
        }
    }

    #[test]
    fn euler_phi_matches_gcd_scan() {
        for n in 1..=300u64 {
            let scan = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n).unwrap(), big(scan), "phi({n})");
        }
    }

    #[test]
    fn euler_phi_examples() {
        assert_eq!(euler_phi(1).unwrap(), big(1));
        assert_eq!(euler_phi(10).unwrap(), big(4));
        for p in [2u64, 3, 5, 7, 11, 97] {
            assert_eq!(euler_phi(p).unwrap(), big(p - 1));
        }
    }

    #[test]
    fn schemmel_prime_power_branch() {
        // S_2(2) hits the p >= r branch with p = r = 2 and vanishes.
        assert_eq!(schemmel(2, 2).unwrap(), big(0));
        // S_2(p^a) = p^(a-1) * (p - 2) for odd primes.
        assert_eq!(schemmel(2, 27).unwrap(), big(9));
        assert_eq!(schemmel(2, 25).unwrap(), big(15));
    }

    #[test]
    fn schemmel_order_zero_is_identity() {
        for n in [1u64, 2, 15, 360, 1_000_003] {
            assert_eq!(schemmel(0, n).unwrap(), big(n));
        }
    }

    #[test]
    fn schemmel_fifteen() {
        // S_2(15) = S_2(3) * S_2(5) = 1 * 3, and the naive count agrees.
        assert_eq!(schemmel(2, 15).unwrap(), big(3));
        assert_eq!(schemmel_naive(2, 15).unwrap(), big(3));
    }

    #[test]
    fn schemmel_naive_examples() {
        assert_eq!(schemmel_naive(0, 7).unwrap(), big(7));
        assert_eq!(schemmel_naive(1, 10).unwrap(), big(4));
        // k in {1, 2, 3} are the runs of two consecutive units mod 5.
        assert_eq!(schemmel_naive(2, 5).unwrap(), big(3));
    }

    #[test]
    fn schemmel_closed_form_matches_naive_small_sweep() {
        for n in 1..=200u64 {
            for r in 0..=6u64 {
                assert_eq!(
                    schemmel(r, n).unwrap(),
                    schemmel_naive(r, n).unwrap(),
                    "S_{r}({n})"
                );
            }
        }
    }

    #[test]
    fn schemmel_pair_examples() {
        assert_eq!(schemmel_pair(0, 4, 5), big(20));
        assert_eq!(schemmel_pair(3, 2, 3), big(0));
        assert_eq!(schemmel_pair(2, 1, 5), schemmel(2, 5).unwrap());
        assert_eq!(schemmel_pair(2, 4, 5), big(12));
    }

    #[test]
    fn schemmel_pair_bridges_prime_powers() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
            for alpha in 1..=4u32 {
                for m in 0..=6u64 {
                    assert_eq!(
                        schemmel_pair(m, p.pow(alpha - 1), p),
                        schemmel(m, p.pow(alpha)).unwrap(),
                        "p={p} alpha={alpha} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn ramanujan_examples() {
        assert_eq!(ramanujan_sum(6, 0).unwrap(), BigInt::from(2));
        assert_eq!(ramanujan_sum(6, 2).unwrap(), BigInt::from(-1));
        assert_eq!(ramanujan_sum(6, 3).unwrap(), BigInt::from(-2));
        // j is taken modulo n.
        assert_eq!(
            ramanujan_sum(6, 8).unwrap(),
            ramanujan_sum(6, 2).unwrap()
        );
    }

    #[test]
    fn ramanujan_at_zero_is_phi() {
        for n in 1..=200u64 {
            assert_eq!(
                ramanujan_sum(n, 0).unwrap(),
                BigInt::from(euler_phi(n).unwrap())
            );
        }
    }

    /// Sums the j-th powers of the primitive n-th roots of unity directly.
    /// Independent of the closed form; only usable at desk scale.
    fn ramanujan_by_roots_of_unity(n: u64, j: u64) -> i64 {
        let tau = std::f64::consts::TAU;
        let mut real = 0.0f64;
        for k in 1..=n {
            if gcd(k, n) == 1 {
                real += (tau * (k as f64) * (j as f64) / n as f64).cos();
            }
        }
        real.round() as i64
    }

    #[test]
    fn ramanujan_matches_roots_of_unity() {
        for n in 1..=60u64 {
            for j in 0..n {
                assert_eq!(
                    ramanujan_sum(n, j).unwrap(),
                    BigInt::from(ramanujan_by_roots_of_unity(n, j)),
                    "c_{n}({j})"
                );
            }
        }
    }

    #[test]
    fn ramanujan_divides_phi_and_sums_to_zero() {
        for n in 2..=200u64 {
            let phi = BigInt::from(euler_phi(n).unwrap());
            let mut total = BigInt::zero();
            for j in 0..n {
                let c = ramanujan_sum(n, j).unwrap();
                if !c.is_zero() {
                    assert!((&phi % &c).is_zero(), "c_{n}({j}) = {c} must divide {phi}");
                }
                total += c;
            }
            assert!(total.is_zero(), "spectrum of loopless graph sums to 0 at n={n}");
        }
    }

    proptest! {
        #[test]
        fn schemmel_is_multiplicative(a in 1u64..=500, b in 1u64..=500, r in 0u64..=6) {
            prop_assume!(gcd(a, b) == 1);
            prop_assert_eq!(
                schemmel(r, a * b).unwrap(),
                schemmel(r, a).unwrap() * schemmel(r, b).unwrap()
            );
        }

        #[test]
        fn schemmel_matches_naive(n in 1u64..=2000, r in 0u64..=6) {
            prop_assert_eq!(schemmel(r, n).unwrap(), schemmel_naive(r, n).unwrap());
        }

        #[test]
        fn schemmel_identity_chain(n in 1u64..=2000) {
            prop_assert_eq!(schemmel(0, n).unwrap(), BigUint::from(n));
            prop_assert_eq!(schemmel(1, n).unwrap(), euler_phi(n).unwrap());
        }

        #[test]
        fn factorize_round_trips(n in 1u64..=1_000_000) {
            prop_assert_eq!(factorize(n).unwrap().value(), n);
        }
    }
}
