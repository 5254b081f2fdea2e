//! Product-graph machinery: balanced complete multipartite factors, their
//! direct product, unitary Cayley adjacency over Z/nZ, the CRT bijection
//! between the two views, and DOT export.
//!
//! Graphs are kept implicit: a [`ProductGraphSpec`] plus an adjacency
//! predicate, never a materialized matrix. Counting has to work far beyond
//! any size that could be stored; the clique enumerator builds its own dense
//! adjacency on demand, under a cap.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::number_theory::factorize;

/// Default vertex cap for DOT export.
pub const DOT_VERTEX_CAP: u64 = 512;

/// One factor `K[a, b]`: the complete b-partite graph with `b` partite
/// classes of `a` vertices each.
///
/// Factor-local vertices are the indices `0 .. a*b - 1`, and the partite
/// class of local vertex `v` is `v mod b`. That numbering makes the CRT map
/// `x -> x mod p^alpha` carry residue classes mod p onto partite classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultipartiteFactor {
    part_size: u64,
    parts: u64,
}

impl MultipartiteFactor {
    pub fn new(part_size: u64, parts: u64) -> Result<Self> {
        if part_size == 0 || parts == 0 {
            return Err(Error::EmptyFactor { part_size, parts });
        }
        Ok(Self { part_size, parts })
    }

    /// Vertices per partite class (`a`).
    pub fn part_size(&self) -> u64 {
        self.part_size
    }

    /// Number of partite classes (`b`).
    pub fn parts(&self) -> u64 {
        self.parts
    }

    pub fn vertex_count(&self) -> BigUint {
        BigUint::from(self.part_size) * BigUint::from(self.parts)
    }

    /// Partite class of a factor-local vertex.
    pub fn class_of(&self, local: u64) -> u64 {
        local % self.parts
    }

    /// Local vertices are adjacent exactly when their classes differ.
    pub fn adjacent(&self, u: u64, v: u64) -> bool {
        self.class_of(u) != self.class_of(v)
    }

    fn contains_local(&self, local: u64) -> bool {
        (local as u128) < (self.part_size as u128) * (self.parts as u128)
    }
}

impl fmt::Display for MultipartiteFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.part_size, self.parts)
    }
}

/// A vertex of a direct product: one factor-local index per factor.
///
/// Ordering is lexicographic on the coordinate tuple, which is the canonical
/// order used everywhere (clique representations, enumeration output).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    coords: Vec<u64>,
}

impl Vertex {
    pub fn new(coords: Vec<u64>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An ordered list of multipartite factors describing the direct product
/// `X = K[a_1,b_1] x ... x K[a_r,b_r]`.
///
/// Two product vertices are adjacent iff they are adjacent in every
/// coordinate; in particular no vertex is adjacent to itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraphSpec {
    factors: Vec<MultipartiteFactor>,
}

impl ProductGraphSpec {
    pub fn new(factors: Vec<MultipartiteFactor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptySpec);
        }
        Ok(Self { factors })
    }

    /// The product isomorphic to the unitary Cayley graph of Z/nZ: one
    /// factor `K[p^(alpha-1), p]` per prime power of `n`, in ascending prime
    /// order (so specs are canonical and comparable).
    pub fn unitary_cayley(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::ModulusTooSmall(n));
        }
        let factors = factorize(n)?
            .factors()
            .iter()
            .map(|&(p, alpha)| MultipartiteFactor {
                part_size: p.pow(alpha - 1),
                parts: p,
            })
            .collect();
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[MultipartiteFactor] {
        &self.factors
    }

    /// Exact vertex count, `prod a_i * b_i`.
    pub fn vertex_count(&self) -> BigUint {
        self.factors.iter().map(|f| f.vertex_count()).product()
    }

    /// Vertex count if it fits in a `u64` (the enumerator needs that).
    pub fn vertex_count_u64(&self) -> Option<u64> {
        self.factors
            .iter()
            .try_fold(1u64, |acc, f| {
                acc.checked_mul(f.part_size)?.checked_mul(f.parts)
            })
    }

    /// Common degree of every vertex, `prod a_i * (b_i - 1)`; equals
    /// `phi(n)` for the unitary Cayley spec of `n`.
    pub fn degree(&self) -> BigUint {
        self.factors
            .iter()
            .map(|f| BigUint::from(f.part_size) * BigUint::from(f.parts - 1))
            .product()
    }

    /// Checks that `v` has one in-range coordinate per factor.
    pub fn check_vertex(&self, v: &Vertex) -> Result<()> {
        if v.coords().len() != self.factors.len() {
            return Err(Error::ArityMismatch {
                expected: self.factors.len(),
                got: v.coords().len(),
            });
        }
        for (axis, (&c, f)) in v.coords().iter().zip(&self.factors).enumerate() {
            if !f.contains_local(c) {
                return Err(Error::CoordinateOutOfRange {
                    axis,
                    value: c,
                    size: f.part_size.saturating_mul(f.parts),
                });
            }
        }
        Ok(())
    }

    /// Componentwise adjacency: true iff the partite classes differ in every
    /// coordinate. Never true for `u == v`.
    pub fn adjacent(&self, u: &Vertex, v: &Vertex) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.adjacent_unchecked(u, v))
    }

    pub(crate) fn adjacent_unchecked(&self, u: &Vertex, v: &Vertex) -> bool {
        self.factors
            .iter()
            .zip(u.coords().iter().zip(v.coords()))
            .all(|(f, (&a, &b))| f.adjacent(a, b))
    }

    /// Vertex at a given lexicographic rank (mixed-radix decode, first
    /// coordinate most significant). Callers keep `index` below the vertex
    /// count.
    pub fn vertex_at(&self, index: u64) -> Vertex {
        let mut coords = vec![0u64; self.factors.len()];
        let mut rest = index;
        for (slot, f) in coords.iter_mut().zip(&self.factors).rev() {
            let size = f.part_size * f.parts;
            *slot = rest % size;
            rest /= size;
        }
        Vertex { coords }
    }

    /// Lexicographic rank of a vertex; inverse of [`Self::vertex_at`].
    pub fn index_of(&self, v: &Vertex) -> Result<u64> {
        self.check_vertex(v)?;
        let mut index = 0u64;
        for (&c, f) in v.coords().iter().zip(&self.factors) {
            index = index * (f.part_size * f.parts) + c;
        }
        Ok(index)
    }
}

impl fmt::Display for ProductGraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl FromStr for ProductGraphSpec {
    type Err = Error;

    /// Parses the comma-separated `AxB` grammar, e.g. `2x3,1x2` for
    /// `K[2,3] x K[1,2]`. Whitespace-insensitive.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: &str| Error::SpecParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut factors = Vec::new();
        for piece in s.split(',') {
            let piece: String = piece.chars().filter(|c| !c.is_whitespace()).collect();
            if piece.is_empty() {
                return Err(parse_err("empty factor"));
            }
            let (a, b) = piece
                .split_once(['x', 'X'])
                .ok_or_else(|| parse_err("factor must look like AxB"))?;
            let part_size: u64 = a
                .parse()
                .map_err(|_| parse_err("part size is not a number"))?;
            let parts: u64 = b
                .parse()
                .map_err(|_| parse_err("part count is not a number"))?;
            factors.push(MultipartiteFactor::new(part_size, parts)?);
        }
        ProductGraphSpec::new(factors)
    }
}

/// Unitary Cayley adjacency on Z/nZ: residues are adjacent iff their
/// difference is coprime to `n`. Symmetric, and false on the diagonal for
/// every `n >= 2`.
pub fn cayley_adjacent(n: u64, x: u64, y: u64) -> Result<bool> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    for residue in [x, y] {
        if residue >= n {
            return Err(Error::ResidueOutOfRange {
                residue,
                modulus: n,
            });
        }
    }
    Ok(x.abs_diff(y).gcd(&n) == 1)
}

/// CRT encoding of a residue: coordinate `i` is `x mod p_i^alpha_i`, one per
/// prime power of `n`. The partite class of that coordinate is then
/// `x mod p_i`, exactly the residue classes that partition the factor.
pub fn crt_encode(n: u64, x: u64) -> Result<Vertex> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    if x >= n {
        return Err(Error::ResidueOutOfRange {
            residue: x,
            modulus: n,
        });
    }
    let coords = factorize(n)?
        .factors()
        .iter()
        .map(|&(p, alpha)| x % p.pow(alpha))
        .collect();
    Ok(Vertex::new(coords))
}

/// Inverse of [`crt_encode`]: reconstructs the unique residue mod `n` from
/// its prime-power coordinates.
pub fn crt_decode(n: u64, v: &Vertex) -> Result<u64> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    let spec = ProductGraphSpec::unitary_cayley(n)?;
    spec.check_vertex(v)?;
    let mut x: u128 = 0;
    let mut modulus: u128 = 1;
    for (&c, f) in v.coords().iter().zip(spec.factors()) {
        let m = (f.part_size * f.parts) as u128; // p^alpha
        // Solve x' = x (mod modulus), x' = c (mod m).
        let inv = mod_inverse(modulus % m, m);
        let diff = (c as u128 + m - x % m) % m;
        x += modulus * ((diff * inv) % m);
        modulus *= m;
    }
    Ok(x as u64)
}

/// Modular inverse by extended Euclid; `a` and `m` must be coprime.
fn mod_inverse(a: u128, m: u128) -> u128 {
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r) = (m as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "moduli must be coprime");
    ((t % m as i128 + m as i128) % m as i128) as u128
}

/// DOT text for the unitary Cayley graph of `n`, nodes labeled by residue.
///
/// Emits `graph G { ... }` with every node pre-declared and each edge listed
/// once, in a fixed order, so output is bit-identical across runs.
pub fn cayley_dot(n: u64, cap: u64) -> Result<String> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    if n > cap {
        return Err(Error::GraphTooLarge {
            vertices: BigUint::from(n),
            cap,
        });
    }
    let mut out = String::from("graph G {\n");
    for x in 0..n {
        out.push_str(&format!("  {x} [label=\"{x}\"];\n"));
    }
    for x in 0..n {
        for y in (x + 1)..n {
            if cayley_adjacent(n, x, y)? {
                out.push_str(&format!("  {x} -- {y};\n"));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// DOT text for a product spec, nodes labeled by coordinate tuple.
pub fn product_dot(spec: &ProductGraphSpec, cap: u64) -> Result<String> {
    let count = spec
        .vertex_count_u64()
        .filter(|&c| c <= cap)
        .ok_or_else(|| Error::GraphTooLarge {
            vertices: spec.vertex_count(),
            cap,
        })?;
    let vertices: Vec<Vertex> = (0..count).map(|i| spec.vertex_at(i)).collect();
    let mut out = String::from("graph G {\n");
    for (i, v) in vertices.iter().enumerate() {
        out.push_str(&format!("  {i} [label=\"{v}\"];\n"));
    }
    for (i, u) in vertices.iter().enumerate() {
        for (j, v) in vertices.iter().enumerate().skip(i + 1) {
            if spec.adjacent_unchecked(u, v) {
                out.push_str(&format!("  {i} -- {j};\n"));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec_of(pairs: &[(u64, u64)]) -> ProductGraphSpec {
        ProductGraphSpec::new(
            pairs
                .iter()
                .map(|&(a, b)| MultipartiteFactor::new(a, b).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn unitary_cayley_factors() {
        let spec = ProductGraphSpec::unitary_cayley(12).unwrap();
        assert_eq!(
            spec.factors(),
            &[
                MultipartiteFactor::new(2, 2).unwrap(),
                MultipartiteFactor::new(1, 3).unwrap(),
            ]
        );
        let prime = ProductGraphSpec::unitary_cayley(7).unwrap();
        assert_eq!(prime.factors(), &[MultipartiteFactor::new(1, 7).unwrap()]);
        assert_eq!(
            ProductGraphSpec::unitary_cayley(1),
            Err(Error::ModulusTooSmall(1))
        );
        assert_eq!(
            ProductGraphSpec::unitary_cayley(0),
            Err(Error::ModulusTooSmall(0))
        );
    }

    #[test]
    fn six_gives_the_hexagon() {
        // K_2 x K_3 must be a single 6-cycle: 2-regular, 6 edges, connected.
        let spec = ProductGraphSpec::unitary_cayley(6).unwrap();
        assert_eq!(spec.factors().len(), 2);
        let vertices: Vec<Vertex> = (0..6).map(|i| spec.vertex_at(i)).collect();
        let mut edges = Vec::new();
        for i in 0..6 {
            let degree = (0..6)
                .filter(|&j| j != i && spec.adjacent_unchecked(&vertices[i], &vertices[j]))
                .count();
            assert_eq!(degree, 2);
            for j in (i + 1)..6 {
                if spec.adjacent_unchecked(&vertices[i], &vertices[j]) {
                    edges.push((i, j));
                }
            }
        }
        assert_eq!(edges.len(), 6);
        // Walk the cycle; it must visit all six vertices before closing.
        let neighbors = |v: usize| -> Vec<usize> {
            (0..6)
                .filter(|&u| u != v && spec.adjacent_unchecked(&vertices[v], &vertices[u]))
                .collect()
        };
        let (mut prev, mut here) = (0usize, neighbors(0)[0]);
        let mut steps = 1;
        while here != 0 {
            let next = *neighbors(here).iter().find(|&&u| u != prev).unwrap();
            prev = here;
            here = next;
            steps += 1;
        }
        assert_eq!(steps, 6, "one cycle through all six vertices");
    }

    #[test]
    fn product_adjacency_examples() {
        let spec = spec_of(&[(1, 2), (1, 3)]);
        let v = |c: &[u64]| Vertex::new(c.to_vec());
        assert!(spec.adjacent(&v(&[0, 0]), &v(&[1, 1])).unwrap());
        assert!(!spec.adjacent(&v(&[0, 0]), &v(&[1, 0])).unwrap());
        let k23 = spec_of(&[(2, 3)]);
        // 0 and 3 share partite class 0 mod 3.
        assert!(!k23.adjacent(&v(&[0]), &v(&[3])).unwrap());
        assert!(!k23.adjacent(&v(&[4]), &v(&[4])).unwrap());
    }

    #[test]
    fn adjacency_rejects_malformed_vertices() {
        let spec = spec_of(&[(1, 2), (1, 3)]);
        let err = spec
            .adjacent(&Vertex::new(vec![0]), &Vertex::new(vec![0, 0]))
            .unwrap_err();
        assert_eq!(err, Error::ArityMismatch { expected: 2, got: 1 });
        let err = spec
            .adjacent(&Vertex::new(vec![0, 5]), &Vertex::new(vec![0, 0]))
            .unwrap_err();
        assert_eq!(
            err,
            Error::CoordinateOutOfRange {
                axis: 1,
                value: 5,
                size: 3
            }
        );
    }

    #[test]
    fn cayley_adjacency_examples() {
        assert!(cayley_adjacent(10, 0, 3).unwrap());
        assert!(!cayley_adjacent(10, 0, 5).unwrap());
        assert!(cayley_adjacent(2, 0, 1).unwrap());
        assert_eq!(
            cayley_adjacent(10, 0, 10),
            Err(Error::ResidueOutOfRange {
                residue: 10,
                modulus: 10
            })
        );
        assert_eq!(cayley_adjacent(1, 0, 0), Err(Error::ModulusTooSmall(1)));
    }

    #[test]
    fn cayley_adjacency_is_symmetric_and_loopless() {
        for n in 2..=50u64 {
            for x in 0..n {
                assert!(!cayley_adjacent(n, x, x).unwrap());
                for y in 0..n {
                    assert_eq!(
                        cayley_adjacent(n, x, y).unwrap(),
                        cayley_adjacent(n, y, x).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn crt_examples() {
        assert_eq!(crt_encode(12, 7).unwrap(), Vertex::new(vec![3, 1]));
        assert_eq!(crt_decode(12, &Vertex::new(vec![3, 1])).unwrap(), 7);
        assert_eq!(crt_encode(6, 0).unwrap(), Vertex::new(vec![0, 0]));
        assert_eq!(
            crt_encode(12, 12),
            Err(Error::ResidueOutOfRange {
                residue: 12,
                modulus: 12
            })
        );
    }

    #[test]
    fn crt_round_trips_exhaustively() {
        for n in 2..=100u64 {
            for x in 0..n {
                let v = crt_encode(n, x).unwrap();
                assert_eq!(crt_decode(n, &v).unwrap(), x, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn crt_carries_adjacency_exhaustively() {
        for n in 2..=100u64 {
            let spec = ProductGraphSpec::unitary_cayley(n).unwrap();
            for x in 0..n {
                let vx = crt_encode(n, x).unwrap();
                for y in 0..n {
                    let vy = crt_encode(n, y).unwrap();
                    assert_eq!(
                        cayley_adjacent(n, x, y).unwrap(),
                        spec.adjacent(&vx, &vy).unwrap(),
                        "n={n} x={x} y={y}"
                    );
                }
            }
        }
    }

    #[test]
    fn every_vertex_has_degree_phi() {
        for n in 2..=300u64 {
            let spec = ProductGraphSpec::unitary_cayley(n).unwrap();
            let count = spec.vertex_count_u64().unwrap();
            let vertices: Vec<Vertex> = (0..count).map(|i| spec.vertex_at(i)).collect();
            assert_eq!(spec.degree(), crate::number_theory::euler_phi(n).unwrap());
            for v in &vertices {
                let neighbors = vertices
                    .iter()
                    .filter(|u| spec.adjacent_unchecked(v, u))
                    .count();
                assert_eq!(BigUint::from(neighbors), spec.degree(), "n={n}, v={v}");
            }
        }
    }

    #[test]
    fn product_adjacency_is_loopless_and_symmetric() {
        for spec in [
            spec_of(&[(2, 3), (1, 2)]),
            spec_of(&[(3, 4)]),
            ProductGraphSpec::unitary_cayley(45).unwrap(),
        ] {
            let count = spec.vertex_count_u64().unwrap();
            let vertices: Vec<Vertex> = (0..count).map(|i| spec.vertex_at(i)).collect();
            for u in &vertices {
                assert!(!spec.adjacent_unchecked(u, u));
                for v in &vertices {
                    assert_eq!(
                        spec.adjacent_unchecked(u, v),
                        spec.adjacent_unchecked(v, u)
                    );
                }
            }
        }
    }

    #[test]
    fn multipartite_edge_count_by_enumeration() {
        for a in 1..=6u64 {
            for b in 1..=6u64 {
                let spec = spec_of(&[(a, b)]);
                let count = a * b;
                let edges = (0..count)
                    .flat_map(|u| ((u + 1)..count).map(move |v| (u, v)))
                    .filter(|&(u, v)| {
                        spec.adjacent_unchecked(&spec.vertex_at(u), &spec.vertex_at(v))
                    })
                    .count() as u64;
                assert_eq!(edges, a * a * b * (b - 1) / 2, "K[{a},{b}]");
            }
        }
    }

    #[test]
    fn vertex_index_round_trip() {
        let spec = spec_of(&[(2, 3), (1, 2), (3, 1)]);
        let count = spec.vertex_count_u64().unwrap();
        for i in 0..count {
            let v = spec.vertex_at(i);
            assert_eq!(spec.index_of(&v).unwrap(), i);
        }
        // Ranks are lexicographic in the coordinate tuple.
        for i in 1..count {
            assert!(spec.vertex_at(i - 1) < spec.vertex_at(i));
        }
    }

    #[test]
    fn spec_string_round_trip() {
        let spec: ProductGraphSpec = "2x3,1x2".parse().unwrap();
        assert_eq!(spec, spec_of(&[(2, 3), (1, 2)]));
        assert_eq!(spec.to_string(), "2x3,1x2");
        let spaced: ProductGraphSpec = " 2 x 3 , 1 x 2 ".parse().unwrap();
        assert_eq!(spaced, spec);
        assert!("2x3,".parse::<ProductGraphSpec>().is_err());
        assert!("2y3".parse::<ProductGraphSpec>().is_err());
        assert!("0x3".parse::<ProductGraphSpec>().is_err());
        assert!("".parse::<ProductGraphSpec>().is_err());
    }

    #[test]
    fn dot_for_the_four_cycle() {
        let expected = "graph G {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  2 [label=\"2\"];\n  3 [label=\"3\"];\n  0 -- 1;\n  0 -- 3;\n  1 -- 2;\n  2 -- 3;\n}\n";
        assert_eq!(cayley_dot(4, DOT_VERTEX_CAP).unwrap(), expected);
    }

    #[test]
    fn dot_edge_counts() {
        let single_edge = cayley_dot(2, DOT_VERTEX_CAP).unwrap();
        assert_eq!(single_edge.matches(" -- ").count(), 1);
        assert!(single_edge.contains("0 -- 1;"));
        assert_eq!(cayley_dot(5, DOT_VERTEX_CAP).unwrap().matches(" -- ").count(), 10);
        assert_eq!(cayley_dot(4, DOT_VERTEX_CAP).unwrap().matches(" -- ").count(), 4);
    }

    #[test]
    fn dot_respects_the_cap() {
        let err = cayley_dot(600, DOT_VERTEX_CAP).unwrap_err();
        assert_eq!(
            err,
            Error::GraphTooLarge {
                vertices: BigUint::from(600u32),
                cap: DOT_VERTEX_CAP
            }
        );
        assert!(cayley_dot(600, 1024).is_ok());
    }

    #[test]
    fn product_dot_matches_cayley_structure() {
        // Same graph through both exports: n = 6 vs K[1,2] x K[1,3].
        let via_product = product_dot(
            &ProductGraphSpec::unitary_cayley(6).unwrap(),
            DOT_VERTEX_CAP,
        )
        .unwrap();
        assert_eq!(via_product.matches(" -- ").count(), 6);
        assert!(via_product.contains("label=\"(0,1)\""));
    }

    proptest! {
        #[test]
        fn crt_is_an_isomorphism_on_random_pairs(
            n in 101u64..=2000,
            seed_x in any::<u64>(),
            seed_y in any::<u64>(),
        ) {
            let spec = ProductGraphSpec::unitary_cayley(n).unwrap();
            let x = seed_x % n;
            let y = seed_y % n;
            let vx = crt_encode(n, x).unwrap();
            let vy = crt_encode(n, y).unwrap();
            prop_assert_eq!(crt_decode(n, &vx).unwrap(), x);
            prop_assert_eq!(
                cayley_adjacent(n, x, y).unwrap(),
                spec.adjacent(&vx, &vy).unwrap()
            );
        }
    }
}
