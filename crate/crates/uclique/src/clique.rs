//! Clique counting in direct products of balanced complete multipartite
//! graphs: the closed form, its specializations to unitary Cayley graphs,
//! and an independent brute-force enumerator used as the oracle.
//!
//! The closed form for the number of order-`m` cliques in
//! `X = K[a_1,b_1] x ... x K[a_r,b_r]` is
//!
//! ```text
//! (1/m!) * prod_{k=1..m} prod_{i=1..r} S_{k-1}(a_i, b_i)
//! ```
//!
//! with `S_m(x, y) = max(x*(y-m), 0)`. The product is accumulated as one big
//! integer and divided by `m!` once at the end; that division is asserted to
//! be exact, which doubles as a built-in self-test (the count is an integer,
//! so a nonzero remainder can only mean an implementation bug).
//!
//! Everything here is pure; the enumerator builds a read-only dense adjacency
//! once and only for graphs under a configurable vertex cap.

use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{cayley_adjacent, ProductGraphSpec, Vertex};
use crate::number_theory::schemmel_pair;

/// Default vertex cap for enumeration-backed operations.
pub const ENUMERATION_VERTEX_CAP: u64 = 4096;

/// A set of pairwise-adjacent vertices, stored in increasing coordinate
/// order so every clique has exactly one representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clique {
    vertices: Vec<Vertex>,
}

impl Clique {
    /// Validates that the given vertices form a clique of `spec`: all in
    /// range, pairwise adjacent (which rules out repeats, since no vertex is
    /// adjacent to itself). Sorts them canonically.
    pub fn new(spec: &ProductGraphSpec, mut vertices: Vec<Vertex>) -> Result<Self> {
        vertices.sort();
        for v in &vertices {
            spec.check_vertex(v)?;
        }
        for i in 0..vertices.len() {
            for j in (i + 1)..vertices.len() {
                if !spec.adjacent_unchecked(&vertices[i], &vertices[j]) {
                    return Err(Error::NotAClique {
                        u: vertices[i].to_string(),
                        v: vertices[j].to_string(),
                    });
                }
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// The clique order `m`.
    pub fn order(&self) -> u64 {
        self.vertices.len() as u64
    }
}

fn factorial(m: u64) -> BigUint {
    (1..=m).map(BigUint::from).product()
}

fn formula_unchecked(spec: &ProductGraphSpec, m: u64) -> BigUint {
    let mut numerator = BigUint::one();
    for k in 1..=m {
        for f in spec.factors() {
            let s = schemmel_pair(k - 1, f.part_size(), f.parts());
            if s.is_zero() {
                return BigUint::zero();
            }
            numerator *= s;
        }
    }
    let (count, rem) = num_integer::Integer::div_rem(&numerator, &factorial(m));
    assert!(
        rem.is_zero(),
        "m! must divide the clique-count numerator exactly (m = {m}, spec = {spec})"
    );
    count
}

/// Exact number of order-`m` cliques in the product graph, by the closed
/// form. Zero exactly when `m` exceeds the smallest part count.
///
/// `m = 0` is rejected here; [`clique_count_including_empty`] opts into the
/// empty-clique convention.
pub fn clique_count_formula(spec: &ProductGraphSpec, m: u64) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::ZeroCliqueOrder);
    }
    Ok(formula_unchecked(spec, m))
}

/// Like [`clique_count_formula`] but defines the order-0 count as 1 (the
/// empty clique), the convention generating-function consumers want.
pub fn clique_count_including_empty(spec: &ProductGraphSpec, m: u64) -> BigUint {
    if m == 0 {
        BigUint::one()
    } else {
        formula_unchecked(spec, m)
    }
}

/// Number of order-`m` cliques in the unitary Cayley graph of Z/nZ,
/// `prod_{k=1..m} S_{k-1}(n) / k`. Specializations: `m = 1` gives `n`,
/// `m = 2` the edge count `n*phi(n)/2`, `m = 3` the triangle count
/// `n*phi(n)*S_2(n)/6`.
pub fn cayley_clique_count(n: u64, m: u64) -> Result<BigUint> {
    let spec = ProductGraphSpec::unitary_cayley(n)?;
    clique_count_formula(&spec, m)
}

/// Largest order of any clique in the product: `min_i b_i`, the last `m`
/// for which the closed form stays positive. For the unitary Cayley spec of
/// `n` this is the smallest prime factor of `n`.
pub fn clique_number(spec: &ProductGraphSpec) -> u64 {
    spec.factors()
        .iter()
        .map(|f| f.parts())
        .min()
        .expect("spec has at least one factor")
}

/// Fixed-size bitset over vertex indices.
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn zeros(bits: usize) -> Self {
        Self {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    fn copy_from(&mut self, other: &BitSet) {
        self.words.copy_from_slice(&other.words);
    }

    fn intersect_with(&mut self, other: &BitSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    /// Clears every bit at or below `i`.
    fn keep_above(&mut self, i: usize) {
        let word = i / 64;
        for w in &mut self.words[..word] {
            *w = 0;
        }
        let keep_from = (i % 64) + 1;
        if keep_from < 64 {
            self.words[word] &= !0u64 << keep_from;
        } else {
            self.words[word] = 0;
        }
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + bit)
            })
        })
    }
}

/// Dense adjacency over all vertices of a small product graph, built once
/// and then read-only.
struct DenseAdjacency {
    n: usize,
    rows: Vec<BitSet>,
}

impl DenseAdjacency {
    fn build(spec: &ProductGraphSpec, cap: u64) -> Result<Self> {
        let n = spec
            .vertex_count_u64()
            .filter(|&c| c <= cap)
            .ok_or_else(|| Error::GraphTooLarge {
                vertices: spec.vertex_count(),
                cap,
            })? as usize;
        // Partite class per coordinate, precomputed once per vertex.
        let classes: Vec<Vec<u64>> = (0..n as u64)
            .map(|i| {
                spec.vertex_at(i)
                    .coords()
                    .iter()
                    .zip(spec.factors())
                    .map(|(&c, f)| f.class_of(c))
                    .collect()
            })
            .collect();
        let mut rows: Vec<BitSet> = (0..n).map(|_| BitSet::zeros(n)).collect();
        for u in 0..n {
            for v in (u + 1)..n {
                let adjacent = classes[u].iter().zip(&classes[v]).all(|(cu, cv)| cu != cv);
                if adjacent {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
            }
        }
        Ok(Self { n, rows })
    }
}

/// Ordered extension: each order-`m` clique is reached exactly once through
/// its increasing index sequence. `scratch[level]` holds the candidates
/// compatible with the current stack (neighbors of everything chosen, above
/// the newest index); branches without room to finish are pruned.
fn extend_cliques<F>(
    adj: &DenseAdjacency,
    scratch: &mut [BitSet],
    stack: &mut Vec<usize>,
    level: usize,
    need: u64,
    on_clique: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if scratch[level].count() < need {
        return ControlFlow::Continue(());
    }
    let candidates: Vec<usize> = scratch[level].ones().collect();
    for v in candidates {
        stack.push(v);
        if need == 1 {
            on_clique(stack)?;
        } else {
            let (filled, next) = scratch.split_at_mut(level + 1);
            next[0].copy_from(&filled[level]);
            next[0].intersect_with(&adj.rows[v]);
            next[0].keep_above(v);
            extend_cliques(adj, scratch, stack, level + 1, need - 1, on_clique)?;
        }
        stack.pop();
    }
    ControlFlow::Continue(())
}

/// Visits every order-`m` clique of the adjacency in lexicographic index
/// order. `m >= 1`.
fn for_each_clique<F>(adj: &DenseAdjacency, m: u64, mut on_clique: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut stack = Vec::with_capacity(m as usize);
    let mut scratch: Vec<BitSet> = (0..m).map(|_| BitSet::zeros(adj.n)).collect();
    for v in 0..adj.n {
        stack.push(v);
        let flow = if m == 1 {
            on_clique(&stack)
        } else {
            scratch[0].copy_from(&adj.rows[v]);
            scratch[0].keep_above(v);
            extend_cliques(adj, &mut scratch, &mut stack, 0, m - 1, &mut on_clique)
        };
        stack.pop();
        if flow.is_break() {
            return;
        }
    }
}

/// Counting-only variant of [`extend_cliques`]: when one vertex is still
/// missing, the whole candidate set completes the clique, so its size is
/// tallied instead of walking each member.
fn count_extensions(
    adj: &DenseAdjacency,
    scratch: &mut [BitSet],
    level: usize,
    need: u64,
) -> u128 {
    let available = scratch[level].count();
    if available < need {
        return 0;
    }
    if need == 1 {
        return available as u128;
    }
    let mut total = 0u128;
    let candidates: Vec<usize> = scratch[level].ones().collect();
    for v in candidates {
        let (filled, next) = scratch.split_at_mut(level + 1);
        next[0].copy_from(&filled[level]);
        next[0].intersect_with(&adj.rows[v]);
        next[0].keep_above(v);
        total += count_extensions(adj, scratch, level + 1, need - 1);
    }
    total
}

/// Counts order-`m` cliques by exhaustive ordered extension over a
/// materialized adjacency, never consulting the closed form. The graph must
/// have at most `cap` vertices.
pub fn clique_count_bruteforce(spec: &ProductGraphSpec, m: u64, cap: u64) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::ZeroCliqueOrder);
    }
    let adj = DenseAdjacency::build(spec, cap)?;
    if m > adj.n as u64 {
        return Ok(BigUint::zero());
    }
    if m == 1 {
        return Ok(BigUint::from(adj.n as u64));
    }
    let mut scratch: Vec<BitSet> = (0..m).map(|_| BitSet::zeros(adj.n)).collect();
    let mut total = 0u128;
    for v in 0..adj.n {
        scratch[0].copy_from(&adj.rows[v]);
        scratch[0].keep_above(v);
        total += count_extensions(&adj, &mut scratch, 0, m - 1);
    }
    Ok(BigUint::from(total))
}

/// Streams every order-`m` clique exactly once, in lexicographic order of
/// vertex tuples, to `visitor`. Returns how many cliques were handed out
/// (equal to [`clique_count_bruteforce`] unless the visitor broke early).
pub fn enumerate_cliques<F>(spec: &ProductGraphSpec, m: u64, cap: u64, mut visitor: F) -> Result<u64>
where
    F: FnMut(&Clique) -> ControlFlow<()>,
{
    if m == 0 {
        return Err(Error::ZeroCliqueOrder);
    }
    let adj = DenseAdjacency::build(spec, cap)?;
    let mut emitted = 0u64;
    if m > adj.n as u64 {
        return Ok(0);
    }
    for_each_clique(&adj, m, |stack| {
        let vertices = stack.iter().map(|&i| spec.vertex_at(i as u64)).collect();
        emitted += 1;
        visitor(&Clique { vertices })
    });
    Ok(emitted)
}

/// Counts the vertices adjacent to every member of the clique `d`, both by
/// direct scan and by the per-factor prediction `prod_i S_m(a_i, b_i)` with
/// `m` the clique order. The two counts are asserted equal; this is the
/// executable form of the induction step behind the closed form.
pub fn common_neighbor_count(spec: &ProductGraphSpec, d: &Clique, cap: u64) -> Result<BigUint> {
    // Revalidate against this spec; the clique may have been built elsewhere.
    let validated = Clique::new(spec, d.vertices().to_vec())?;
    let m = validated.order();
    let predicted: BigUint = spec
        .factors()
        .iter()
        .map(|f| schemmel_pair(m, f.part_size(), f.parts()))
        .product();
    let count = spec
        .vertex_count_u64()
        .filter(|&c| c <= cap)
        .ok_or_else(|| Error::GraphTooLarge {
            vertices: spec.vertex_count(),
            cap,
        })?;
    let mut scanned = 0u64;
    for i in 0..count {
        let w = spec.vertex_at(i);
        if validated
            .vertices()
            .iter()
            .all(|x| spec.adjacent_unchecked(&w, x))
        {
            scanned += 1;
        }
    }
    assert_eq!(
        BigUint::from(scanned),
        predicted,
        "common-neighbor scan disagrees with the per-factor product (order {m}, spec {spec})"
    );
    Ok(predicted)
}

/// A verified proper coloring of the unitary Cayley graph of `n` with
/// `p` = smallest prime factor of `n` colors: vertex `x` gets `x mod p`.
///
/// Together with `clique_number` (a lower bound of the same `p`) this
/// certifies the chromatic number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringWitness {
    n: u64,
    palette: u64,
    colors: Vec<u64>,
}

impl ColoringWitness {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Number of colors used (the smallest prime factor of `n`).
    pub fn palette(&self) -> u64 {
        self.palette
    }

    /// Color per residue, indexed by vertex.
    pub fn colors(&self) -> &[u64] {
        &self.colors
    }
}

/// Builds the residue coloring `x -> x mod p` and verifies, edge by edge,
/// that no edge is monochromatic. The scan is quadratic, so `n` must stay
/// under `cap`.
pub fn proper_coloring_witness(n: u64, cap: u64) -> Result<ColoringWitness> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    if n > cap {
        return Err(Error::GraphTooLarge {
            vertices: BigUint::from(n),
            cap,
        });
    }
    let p = crate::number_theory::factorize(n)?
        .smallest_prime()
        .expect("n >= 2 has a prime factor");
    let colors: Vec<u64> = (0..n).map(|x| x % p).collect();
    for x in 0..n {
        for y in (x + 1)..n {
            if colors[x as usize] == colors[y as usize] {
                // Same residue class mod p means the difference shares p with n.
                assert!(
                    !cayley_adjacent(n, x, y)?,
                    "edge ({x}, {y}) of n = {n} is monochromatic under mod-{p} coloring"
                );
            }
        }
    }
    Ok(ColoringWitness { n, palette: p, colors })
}
