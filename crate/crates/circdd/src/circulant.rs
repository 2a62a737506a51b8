//! Circulant graphs on `Z_n` and their exact metric invariants.
//!
//! A graph is stored as its canonical generating set: the elements of the
//! connection set strictly between 0 and n/2, ascending, plus a flag for the
//! involution n/2 (present exactly when the degree is odd). Distances are
//! computed by breadth-first search from vertex 0; vertex transitivity makes
//! the eccentricity of 0 the diameter of the graph.

use crate::arith::{gcd, mod_inverse};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CirculantError {
    #[error("generator {gen} collides with {other} (same canonical value {canonical} mod {n})")]
    DuplicateGenerator {
        gen: u64,
        other: u64,
        canonical: u64,
        n: u64,
    },
    #[error("generator {gen} out of range for order {n} (must not be 0 or n/2 mod n)")]
    GeneratorOutOfRange { gen: u64, n: u64 },
    #[error("odd degree {degree} needs even order, got {n}")]
    ParityMismatch { n: u64, degree: u32 },
    #[error("graph is disconnected: gcd of generators and order is {gcd}")]
    Disconnected { gcd: u64 },
    #[error("order must be at least 3, got {n}")]
    OrderTooSmall { n: u64 },
    #[error("degree {degree} does not match {found} canonical generators")]
    DegreeMismatch { degree: u32, found: usize },
    #[error("{u} is not a unit mod {n}")]
    NotAUnit { u: u64, n: u64 },
    #[error("operation requires a primitive generating set (containing 1)")]
    NotPrimitive,
}

/// Canonical generating set of a circulant graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratingSet {
    n: u64,
    gens: Vec<u64>,
    has_involution: bool,
}

impl GeneratingSet {
    /// Builds a canonical set from arbitrary representatives.
    pub fn new(n: u64, gens: &[u64], has_involution: bool) -> Result<Self, CirculantError> {
        if n < 3 {
            return Err(CirculantError::OrderTooSmall { n });
        }
        if has_involution && n % 2 != 0 {
            return Err(CirculantError::ParityMismatch {
                n,
                degree: 2 * gens.len() as u32 + 1,
            });
        }
        let canon = canonicalize(n, gens)?;
        let set = GeneratingSet {
            n,
            gens: canon,
            has_involution,
        };
        let g = set.connectivity_gcd();
        if g != 1 {
            return Err(CirculantError::Disconnected { gcd: g });
        }
        Ok(set)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn gens(&self) -> &[u64] {
        &self.gens
    }

    pub fn has_involution(&self) -> bool {
        self.has_involution
    }

    /// Number of generators (the dimension f of the graph).
    pub fn dimension(&self) -> usize {
        self.gens.len()
    }

    pub fn degree(&self) -> u32 {
        2 * self.gens.len() as u32 + u32::from(self.has_involution)
    }

    pub fn is_primitive(&self) -> bool {
        self.gens.first() == Some(&1)
    }

    /// All connection-set elements as forward step sizes in 0..n.
    pub fn deltas(&self) -> Vec<u64> {
        let mut d = Vec::with_capacity(self.degree() as usize);
        for &g in &self.gens {
            d.push(g);
            d.push(self.n - g);
        }
        if self.has_involution {
            d.push(self.n / 2);
        }
        d
    }

    fn connectivity_gcd(&self) -> u64 {
        let mut g = self.n;
        for &x in &self.gens {
            g = gcd(g, x);
        }
        if self.has_involution {
            g = gcd(g, self.n / 2);
        }
        g
    }
}

/// Maps each generator to `min(g mod n, n - g mod n)` and sorts ascending.
///
/// Complement collisions (two inputs with the same canonical value) are
/// rejected rather than merged: they signal malformed input.
pub fn canonicalize(n: u64, gens: &[u64]) -> Result<Vec<u64>, CirculantError> {
    let mut out: Vec<(u64, u64)> = Vec::with_capacity(gens.len());
    for &g in gens {
        let r = g % n;
        if r == 0 || (n % 2 == 0 && r == n / 2) {
            return Err(CirculantError::GeneratorOutOfRange { gen: g, n });
        }
        let c = r.min(n - r);
        out.push((c, g));
    }
    out.sort_unstable();
    for w in out.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(CirculantError::DuplicateGenerator {
                gen: w[1].1,
                other: w[0].1,
                canonical: w[0].0,
                n,
            });
        }
    }
    Ok(out.into_iter().map(|(c, _)| c).collect())
}

/// A circulant graph of the given degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantGraph {
    genset: GeneratingSet,
    degree: u32,
}

/// Validates and canonicalizes a circulant graph.
///
/// For odd `degree` the involution n/2 is implied by the order and must not
/// appear among `gens`.
pub fn make_graph(n: u64, gens: &[u64], degree: u32) -> Result<CirculantGraph, CirculantError> {
    let has_involution = degree % 2 == 1;
    if has_involution && n % 2 != 0 {
        return Err(CirculantError::ParityMismatch { n, degree });
    }
    let genset = GeneratingSet::new(n, gens, has_involution)?;
    if genset.degree() != degree {
        return Err(CirculantError::DegreeMismatch {
            degree,
            found: genset.dimension(),
        });
    }
    Ok(CirculantGraph { genset, degree })
}

impl CirculantGraph {
    pub fn from_genset(genset: GeneratingSet) -> Self {
        let degree = genset.degree();
        CirculantGraph { genset, degree }
    }

    pub fn n(&self) -> u64 {
        self.genset.n
    }

    pub fn genset(&self) -> &GeneratingSet {
        &self.genset
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Full distance profile from vertex 0 (exact BFS).
    pub fn distances(&self) -> DistanceProfile {
        distances(self)
    }

    /// Diameter only, via the word-parallel frontier representation.
    /// Much faster than [`distances`] on large orders; exact either way.
    pub fn diameter(&self) -> u32 {
        bitset_levels(&self.genset, None).0
    }

    /// Cumulative ball sizes |{v : d(0,v) <= t}| for t = 0..=diameter.
    pub fn ball_sizes(&self) -> Vec<u64> {
        bitset_levels(&self.genset, None).1
    }

    /// Length of the shortest odd closed walk through vertex 0, or `None`
    /// when the graph is bipartite. By vertex transitivity this is the odd
    /// girth of the graph. Computed by BFS on the bipartite double cover.
    pub fn odd_girth(&self) -> Option<u64> {
        let n = self.n() as usize;
        let deltas = self.genset.deltas();
        // state (v, parity) -> index v + parity*n
        let mut dist = vec![u32::MAX; 2 * n];
        dist[0] = 0;
        let mut frontier = vec![0usize];
        let mut level = 0u32;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &s in &frontier {
                let (v, parity) = (s % n, s / n);
                for &d in &deltas {
                    let w = (v + d as usize) % n;
                    let t = w + (1 - parity) * n;
                    if dist[t] == u32::MAX {
                        dist[t] = level + 1;
                        if t == n {
                            // reached (0, odd): shortest odd closed walk
                            return Some((level + 1) as u64);
                        }
                        next.push(t);
                    }
                }
            }
            frontier = next;
            level += 1;
        }
        None
    }
}

/// Exact single-source distances from vertex 0.
///
/// One unsigned byte per vertex; the frontier is an explicit queue of vertex
/// indices. If the eccentricity overflows a byte (only possible at very low
/// degree) the search transparently retries with 32-bit storage.
pub fn distances(graph: &CirculantGraph) -> DistanceProfile {
    let genset = &graph.genset;
    match bfs_queue::<u8>(genset) {
        Some((dist, diameter)) => DistanceProfile {
            dist: DistStore::Narrow(dist),
            diameter,
        },
        None => {
            let (dist, diameter) =
                bfs_queue::<u32>(genset).expect("u32 BFS cannot saturate at feasible orders");
            DistanceProfile {
                dist: DistStore::Wide(dist),
                diameter,
            }
        }
    }
}

trait DistCell: Copy + Eq {
    const UNSET: Self;
    const LIMIT: u32;
    fn from_level(level: u32) -> Self;
}

impl DistCell for u8 {
    const UNSET: Self = u8::MAX;
    const LIMIT: u32 = u8::MAX as u32 - 1;
    fn from_level(level: u32) -> Self {
        level as u8
    }
}

impl DistCell for u32 {
    const UNSET: Self = u32::MAX;
    const LIMIT: u32 = u32::MAX - 1;
    fn from_level(level: u32) -> Self {
        level
    }
}

fn bfs_queue<T: DistCell>(genset: &GeneratingSet) -> Option<(Vec<T>, u32)> {
    let n = genset.n();
    let deltas = genset.deltas();
    let mut dist = vec![T::UNSET; n as usize];
    dist[0] = T::from_level(0);
    let mut frontier: Vec<u64> = vec![0];
    let mut next: Vec<u64> = Vec::new();
    let mut level = 0u32;
    while !frontier.is_empty() {
        if level >= T::LIMIT {
            return None; // saturated; caller retries with wider cells
        }
        next.clear();
        for &v in &frontier {
            for &d in &deltas {
                let mut w = v + d;
                if w >= n {
                    w -= n;
                }
                if dist[w as usize] == T::UNSET {
                    dist[w as usize] = T::from_level(level + 1);
                    next.push(w);
                }
            }
        }
        std::mem::swap(&mut frontier, &mut next);
        if !frontier.is_empty() {
            level += 1;
        }
    }
    Some((dist, level))
}

/// Distances from vertex 0 to every vertex, plus the diameter.
#[derive(Debug, Clone)]
pub struct DistanceProfile {
    dist: DistStore,
    diameter: u32,
}

#[derive(Debug, Clone)]
enum DistStore {
    Narrow(Vec<u8>),
    Wide(Vec<u32>),
}

impl DistanceProfile {
    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn len(&self) -> u64 {
        match &self.dist {
            DistStore::Narrow(v) => v.len() as u64,
            DistStore::Wide(v) => v.len() as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, v: u64) -> u32 {
        match &self.dist {
            DistStore::Narrow(d) => d[v as usize] as u32,
            DistStore::Wide(d) => d[v as usize],
        }
    }

    /// Cumulative counts |{v : d(v) <= t}| for t = 0..=diameter.
    pub fn ball_sizes(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.diameter as usize + 1];
        for v in 0..self.len() {
            counts[self.get(v) as usize] += 1;
        }
        let mut acc = 0;
        counts
            .iter()
            .map(|c| {
                acc += c;
                acc
            })
            .collect()
    }
}

/// Word-parallel level BFS: the frontier and visited sets are bit vectors and
/// each generator step is a cyclic bit-rotation. Returns (diameter,
/// cumulative ball sizes). With `extra_seed = Some((v, 1))` the vertex v is
/// injected into level 1 (used by the odd-degree covering check).
pub(crate) fn bitset_levels(genset: &GeneratingSet, extra_seed: Option<u64>) -> (u32, Vec<u64>) {
    let n = genset.n();
    let deltas = genset.deltas();
    bitset_levels_raw(n, &deltas, extra_seed)
}

pub(crate) fn bitset_levels_raw(n: u64, deltas: &[u64], extra_seed: Option<u64>) -> (u32, Vec<u64>) {
    let words = (n as usize + 63) / 64;
    let mut visited = vec![0u64; words];
    let mut cur = vec![0u64; words];
    let mut next = vec![0u64; words];
    set_bit(&mut visited, 0);
    set_bit(&mut cur, 0);
    let mut level = 0u32;
    let mut reached: u64 = 1;
    let mut balls = vec![1u64];
    loop {
        for w in next.iter_mut() {
            *w = 0;
        }
        for &d in deltas {
            or_rotated(&mut next, &cur, n, d);
        }
        if level == 0 {
            if let Some(v) = extra_seed {
                set_bit(&mut next, v);
            }
        }
        let mut new_count = 0u64;
        for i in 0..words {
            let fresh = next[i] & !visited[i];
            next[i] = fresh;
            visited[i] |= fresh;
            new_count += fresh.count_ones() as u64;
        }
        if new_count == 0 {
            break;
        }
        level += 1;
        reached += new_count;
        balls.push(reached);
        std::mem::swap(&mut cur, &mut next);
    }
    debug_assert_eq!(reached, n, "BFS must reach every vertex of a connected graph");
    (level, balls)
}

fn set_bit(bits: &mut [u64], i: u64) {
    bits[(i / 64) as usize] |= 1u64 << (i % 64);
}

/// `dst |= rotate_left(src, shift)` over an n-bit cyclic vector.
fn or_rotated(dst: &mut [u64], src: &[u64], n: u64, shift: u64) {
    // bits [0, n-shift) of src land at [shift, n); bits [n-shift, n) land at [0, shift)
    or_bit_range(dst, shift, src, 0, n - shift);
    or_bit_range(dst, 0, src, n - shift, shift);
}

/// `dst[dst_start .. dst_start+len] |= src[src_start .. src_start+len]` (bit indices).
fn or_bit_range(dst: &mut [u64], dst_start: u64, src: &[u64], src_start: u64, len: u64) {
    if len == 0 {
        return;
    }
    let mut remaining = len;
    let mut s = src_start;
    let mut d = dst_start;
    while remaining > 0 {
        let s_word = (s / 64) as usize;
        let s_bit = s % 64;
        let d_word = (d / 64) as usize;
        let d_bit = d % 64;
        // how many bits we can move in one word-op
        let chunk = remaining.min(64 - s_bit).min(64 - d_bit);
        let mask = if chunk == 64 {
            u64::MAX
        } else {
            ((1u64 << chunk) - 1) << s_bit
        };
        let bits = (src[s_word] & mask) >> s_bit;
        dst[d_word] |= bits << d_bit;
        s += chunk;
        d += chunk;
        remaining -= chunk;
    }
}

/// Image of a generating set under multiplication by a unit of `Z_n`.
/// The result generates a graph isomorphic to the input.
pub fn multiply(genset: &GeneratingSet, u: u64) -> Result<GeneratingSet, CirculantError> {
    let n = genset.n();
    if gcd(u % n, n) != 1 {
        return Err(CirculantError::NotAUnit { u, n });
    }
    let image: Vec<u64> = genset
        .gens()
        .iter()
        .map(|&g| ((g as u128 * u as u128) % n as u128) as u64)
        .collect();
    GeneratingSet::new(n, &image, genset.has_involution())
}

/// All primitive generating sets of the isomorphism class of a graph whose
/// own set is primitive: one per invertible generator, deduplicated.
pub fn enumerate_primitive_gensets(
    graph: &CirculantGraph,
) -> Result<Vec<GeneratingSet>, CirculantError> {
    let genset = graph.genset();
    if !genset.is_primitive() {
        return Err(CirculantError::NotPrimitive);
    }
    let n = genset.n();
    let mut out = Vec::new();
    for &g in genset.gens() {
        if let Some(inv) = mod_inverse(g, n) {
            out.push(multiply(genset, inv)?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Smallest unit `u` with `canonicalize(u * A) = B`, or `None`.
///
/// When `A` contains a unit the candidates are the O(f^2) values `±b * a^-1`;
/// otherwise the units of `Z_n` are scanned directly (small orders only).
pub fn find_multiplier(n: u64, a: &GeneratingSet, b: &GeneratingSet) -> Option<u64> {
    assert_eq!(a.n(), n);
    assert_eq!(b.n(), n);
    if a.dimension() != b.dimension() || a.has_involution() != b.has_involution() {
        return None;
    }
    // unit multiplication preserves gcd with n elementwise
    let mut prof_a: Vec<u64> = a.gens().iter().map(|&g| gcd(g, n)).collect();
    let mut prof_b: Vec<u64> = b.gens().iter().map(|&g| gcd(g, n)).collect();
    prof_a.sort_unstable();
    prof_b.sort_unstable();
    if prof_a != prof_b {
        return None;
    }
    let check = |u: u64| -> bool {
        match multiply(a, u) {
            Ok(img) => img.gens() == b.gens(),
            Err(_) => false,
        }
    };
    if let Some(&a_unit) = a.gens().iter().find(|&&g| gcd(g, n) == 1) {
        let inv = mod_inverse(a_unit, n).unwrap();
        let mut candidates: Vec<u64> = Vec::new();
        for &bg in b.gens() {
            for x in [bg, n - bg] {
                candidates.push(((x as u128 * inv as u128) % n as u128) as u64);
            }
        }
        candidates.sort_unstable();
        candidates.dedup();
        candidates.into_iter().find(|&u| check(u))
    } else {
        (1..n).filter(|&u| gcd(u, n) == 1).find(|&u| check(u))
    }
}
