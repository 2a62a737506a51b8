//! Integer-lattice machinery for the diameter/covering equivalence: kernel
//! lattices of circulant graphs, exact determinants, Smith forms, and the
//! Lee-sphere covering checks for even and odd degree.
//!
//! All arithmetic is exact in `i128` with overflow detection; no modular
//! tricks. The covering check runs in the quotient group: cosets are labelled
//! through the Smith decomposition and searched breadth-first, so memory is
//! one byte per coset (one bit in the word-parallel path).

pub mod theorems;
mod theorems_data;

use crate::arith::{egcd, gcd};
use crate::circulant::bitset_levels_raw;
use thiserror::Error;

pub use theorems::{
    theorem, theorem_basis, theorems, verify_combo_identities, verify_orthant_suite,
    TheoremConstruction,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("generators and order share the factor {0}; quotient is not Z_n")]
    DegenerateInput(u64),
    #[error("basis rows are linearly dependent")]
    Singular,
    #[error("arithmetic overflow in exact lattice computation")]
    Overflow,
    #[error("need {expected} rows of length {expected}, got {got}")]
    BadShape { expected: usize, got: usize },
    #[error("2*v is not a lattice vector; not a half-lattice involution")]
    InvolutionNotHalfLattice,
    #[error("coset space of size {0} exceeds the memory budget")]
    BudgetExceeded(u128),
    #[error("k={k} is not congruent to {residue} mod {modulus}")]
    WrongResidue { k: u64, residue: u64, modulus: u64 },
    #[error("orthant suite needs k >= {threshold}, got {k}")]
    BelowProofThreshold { k: u64, threshold: u64 },
    #[error("combination identity {index} fails: got {got:?}")]
    IdentityFailure { index: usize, got: Vec<i128> },
    #[error("orthant suite clause failed: {0}")]
    SuiteFailure(String),
}

/// Full-rank sublattice of Z^f given by f basis row vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    rows: Vec<Vec<i128>>,
}

impl LatticeBasis {
    pub fn new(rows: Vec<Vec<i128>>) -> Result<Self, LatticeError> {
        let f = rows.len();
        if f == 0 || rows.iter().any(|r| r.len() != f) {
            return Err(LatticeError::BadShape {
                expected: f,
                got: rows.iter().map(|r| r.len()).max().unwrap_or(0),
            });
        }
        let b = LatticeBasis { rows };
        if determinant(&b)? == 0 {
            return Err(LatticeError::Singular);
        }
        Ok(b)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i128>] {
        &self.rows
    }

    /// Is `v` a lattice vector? Solved exactly over the basis by Cramer.
    pub fn contains(&self, v: &[i128]) -> Result<bool, LatticeError> {
        let det = determinant(self)?;
        for col in 0..self.dim() {
            // solve y * M = v by Cramer on the transpose
            let mut m = transpose(&self.rows);
            for (r, val) in v.iter().enumerate() {
                m[r][col] = *val;
            }
            let d = det_bareiss(&m)?;
            if d % det != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn transpose(rows: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let f = rows.len();
    let mut out = vec![vec![0i128; f]; f];
    for i in 0..f {
        for j in 0..f {
            out[j][i] = rows[i][j];
        }
    }
    out
}

/// Basis of the relation lattice {x : sum x_i g_i = 0 (mod n)}.
///
/// Built by integer row reduction of the generators augmented with the
/// identity; the index of the lattice equals n exactly when the generators
/// and n are globally coprime.
pub fn kernel_lattice(n: u64, gens: &[u64]) -> Result<LatticeBasis, LatticeError> {
    let f = gens.len();
    let mut g = n;
    for &x in gens {
        g = gcd(g, x);
    }
    if g != 1 {
        return Err(LatticeError::DegenerateInput(g));
    }
    // rows of (value | coefficient vector); reduce first column by Euclid
    let mut rows: Vec<(i128, Vec<i128>)> = Vec::with_capacity(f + 1);
    rows.push((n as i128, vec![0; f]));
    for (i, &gi) in gens.iter().enumerate() {
        let mut coeff = vec![0i128; f];
        coeff[i] = 1;
        rows.push((gi as i128, coeff));
    }
    // euclidean elimination on the value column
    loop {
        rows.sort_by_key(|(v, _)| if *v == 0 { i128::MAX } else { v.abs() });
        let pivot = rows[0].0;
        debug_assert!(pivot != 0);
        let mut changed = false;
        for i in 1..rows.len() {
            if rows[i].0 != 0 {
                let q = rows[i].0.div_euclid(pivot);
                if q != 0 {
                    rows[i].0 -= q * pivot;
                    for j in 0..f {
                        let s = rows[0].1[j]
                            .checked_mul(q)
                            .ok_or(LatticeError::Overflow)?;
                        rows[i].1[j] = rows[i].1[j].checked_sub(s).ok_or(LatticeError::Overflow)?;
                    }
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    // exactly one row keeps a nonzero value (the gcd, = 1 up to sign);
    // the rest are relations
    let basis: Vec<Vec<i128>> = rows
        .into_iter()
        .filter(|(v, _)| *v == 0)
        .map(|(_, c)| c)
        .collect();
    if basis.len() != f {
        return Err(LatticeError::Singular);
    }
    LatticeBasis::new(basis)
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(basis: &LatticeBasis) -> Result<i128, LatticeError> {
    det_bareiss(&basis.rows)
}

fn det_bareiss(rows: &[Vec<i128>]) -> Result<i128, LatticeError> {
    let n = rows.len();
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return Ok(0);
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[k][k].checked_mul(m[i][j]).ok_or(LatticeError::Overflow)?;
                let b = m[i][k].checked_mul(m[k][j]).ok_or(LatticeError::Overflow)?;
                m[i][j] = a.checked_sub(b).ok_or(LatticeError::Overflow)? / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

/// Invariant factors d_1 | d_2 | ... | d_f of Z^f / L.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diag: Vec<i128>,
}

impl SmithForm {
    /// The quotient is cyclic exactly when every factor but the last is 1.
    pub fn is_cyclic(&self) -> bool {
        self.diag[..self.diag.len() - 1].iter().all(|&d| d == 1)
    }

    pub fn index(&self) -> i128 {
        self.diag.iter().product()
    }
}

/// Smith normal form of the basis matrix.
pub fn smith_diag(basis: &LatticeBasis) -> Result<SmithForm, LatticeError> {
    let (diag, _) = diagonalize_with_transform(basis)?;
    // any diagonal form yields the invariant factors by the pairwise
    // gcd/lcm dance on the scalar entries alone
    let mut d: Vec<i128> = diag;
    let f = d.len();
    loop {
        let mut changed = false;
        for i in 0..f {
            for j in i + 1..f {
                if d[j] % d[i] != 0 {
                    let g = egcd(d[i], d[j]).0;
                    let l = d[i] / g * d[j];
                    d[i] = g;
                    d[j] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    d.sort_unstable();
    Ok(SmithForm { diag: d })
}

/// Diagonal form plus the right transform V: with U A V = D for unimodular
/// U, V, a point x of Z^f has coset label (x V) mod D componentwise.
/// D is diagonal with positive entries but not necessarily in divisibility
/// order; that is enough for coset labelling.
fn diagonalize_with_transform(
    basis: &LatticeBasis,
) -> Result<(Vec<i128>, Vec<Vec<i128>>), LatticeError> {
    let f = basis.dim();
    let mut a: Vec<Vec<i128>> = basis.rows.clone();
    let mut v = vec![vec![0i128; f]; f];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1;
    }
    let mul = |x: i128, y: i128| x.checked_mul(y).ok_or(LatticeError::Overflow);

    for t in 0..f {
        loop {
            // pivot: smallest nonzero |entry| in the remaining block
            let mut best: Option<(usize, usize)> = None;
            for i in t..f {
                for j in t..f {
                    if a[i][j] != 0
                        && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return Err(LatticeError::Singular);
            };
            a.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                v.iter_mut().for_each(|row| row.swap(t, pj));
            }
            let p = a[t][t];
            let mut clean = true;
            // clear column t with row ops (U side, untracked)
            for i in t + 1..f {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(p);
                    if q != 0 {
                        for j in t..f {
                            a[i][j] = a[i][j].checked_sub(mul(q, a[t][j])?).ok_or(LatticeError::Overflow)?;
                        }
                    }
                    if a[i][t] != 0 {
                        clean = false;
                    }
                }
            }
            // clear row t with column ops (V side, tracked)
            for j in t + 1..f {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(p);
                    if q != 0 {
                        for i in 0..f {
                            a[i][j] = a[i][j].checked_sub(mul(q, a[i][t])?).ok_or(LatticeError::Overflow)?;
                            v[i][j] = v[i][j].checked_sub(mul(q, v[i][t])?).ok_or(LatticeError::Overflow)?;
                        }
                    }
                    if a[t][j] != 0 {
                        clean = false;
                    }
                }
            }
            if clean && (t + 1..f).all(|i| a[i][t] == 0) && (t + 1..f).all(|j| a[t][j] == 0) {
                break;
            }
        }
    }
    // normalize signs (tracked as column negations)
    for t in 0..f {
        if a[t][t] < 0 {
            for i in 0..f {
                a[i][t] = -a[i][t];
                v[i][t] = -v[i][t];
            }
        }
    }
    let diag: Vec<i128> = (0..f).map(|i| a[i][i]).collect();
    Ok((diag, v))
}

/// A half-lattice shift vector: 2 v lies in the lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionVector {
    v: Vec<i128>,
}

impl InvolutionVector {
    pub fn new(basis: &LatticeBasis, v: Vec<i128>) -> Result<Self, LatticeError> {
        let doubled: Vec<i128> = v.iter().map(|&x| 2 * x).collect();
        if !basis.contains(&doubled)? {
            return Err(LatticeError::InvolutionNotHalfLattice);
        }
        Ok(InvolutionVector { v })
    }

    pub fn coords(&self) -> &[i128] {
        &self.v
    }

    /// Half the sum of the basis rows, when integral (the construction used
    /// in the odd-degree existence proofs).
    pub fn half_row_sum(basis: &LatticeBasis) -> Option<Self> {
        let f = basis.dim();
        let mut v = vec![0i128; f];
        for row in basis.rows() {
            for (j, &x) in row.iter().enumerate() {
                v[j] += x;
            }
        }
        if v.iter().any(|&x| x % 2 != 0) {
            return None;
        }
        Some(InvolutionVector {
            v: v.into_iter().map(|x| x / 2).collect(),
        })
    }

    /// A shift hitting n/2 for the kernel lattice of (n, gens): solves
    /// sum x_i g_i = n/2 (mod n) by Bezout coefficients.
    pub fn for_kernel(n: u64, gens: &[u64], basis: &LatticeBasis) -> Result<Self, LatticeError> {
        assert_eq!(n % 2, 0, "odd-degree graphs have even order");
        // running gcd with coefficients over the generators and n;
        // coefficients only matter mod n, so reduce as we go
        let f = gens.len();
        let m = n as i128;
        let mut coeff = vec![0i128; f];
        let mut g: i128 = m;
        for i in 0..f {
            let (ng, s, t) = egcd(g, gens[i] as i128);
            let s = s.rem_euclid(m);
            for c in coeff.iter_mut().take(i) {
                *c = (*c * s).rem_euclid(m);
            }
            coeff[i] = t.rem_euclid(m);
            g = ng;
        }
        debug_assert_eq!(g, 1);
        let half = (n / 2) as i128;
        let v: Vec<i128> = coeff
            .iter()
            .map(|&c| (c * half).rem_euclid(m))
            .collect();
        InvolutionVector::new(basis, v)
    }
}

/// Coset structure of Z^f / L used by the covering checks.
struct Quotient {
    /// non-unit invariant factors, ascending
    dims: Vec<u64>,
    /// mixed-radix strides matching `dims`
    strides: Vec<u64>,
    /// labels of the canonical generators e_i
    gen_labels: Vec<Vec<u64>>,
    size: u128,
}

fn quotient(basis: &LatticeBasis) -> Result<Quotient, LatticeError> {
    let f = basis.dim();
    let (diag, v) = diagonalize_with_transform(basis)?;
    let mut dims = Vec::new();
    let mut strides = Vec::new();
    let mut stride: u128 = 1;
    for &d in &diag {
        if d > 1 {
            dims.push(d as u64);
            strides.push(stride as u64);
            stride = stride.checked_mul(d as u128).ok_or(LatticeError::Overflow)?;
        }
    }
    // label of e_i: row i of V reduced mod diag, restricted to non-unit dims
    let mut gen_labels = Vec::with_capacity(f);
    for i in 0..f {
        let mut label = Vec::new();
        for (j, &d) in diag.iter().enumerate() {
            if d > 1 {
                label.push(v[i][j].rem_euclid(d) as u64);
            }
        }
        gen_labels.push(label);
    }
    Ok(Quotient {
        dims,
        strides,
        gen_labels,
        size: stride,
    })
}

impl Quotient {
    fn encode(&self, coords: &[u64]) -> u64 {
        coords
            .iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c * s)
            .sum()
    }
}

/// Default memory budget for coset searches: one byte per coset up to 2^31.
pub const DEFAULT_COVERING_BUDGET: u128 = 1 << 31;

/// Does every coset of L contain a vector of l1 norm at most k?
/// (Equivalently: the corresponding Cayley graph has diameter at most k.)
pub fn covering_check(basis: &LatticeBasis, k: u64) -> Result<bool, LatticeError> {
    covering_check_budget(basis, k, DEFAULT_COVERING_BUDGET)
}

pub fn covering_check_budget(
    basis: &LatticeBasis,
    k: u64,
    budget: u128,
) -> Result<bool, LatticeError> {
    let det = determinant(basis)?.unsigned_abs();
    let sphere = crate::bounds::lee_sphere_size(basis.dim() as u32, k)
        .map_err(|_| LatticeError::Overflow)?;
    if det > sphere as u128 {
        return Ok(false); // more cosets than sphere points
    }
    Ok(covering_radius_budget(basis, budget)? <= k)
}

/// Exact covering radius: the largest l1 word-length needed to reach any
/// coset (equals the diameter of the associated Cayley graph).
pub fn covering_radius(basis: &LatticeBasis) -> Result<u64, LatticeError> {
    covering_radius_budget(basis, DEFAULT_COVERING_BUDGET)
}

pub fn covering_radius_budget(basis: &LatticeBasis, budget: u128) -> Result<u64, LatticeError> {
    quotient_bfs(basis, None, budget)
}

/// Odd-degree covering: every coset reached within radius k from the origin
/// or within k-1 from the involution shift.
pub fn odd_covering_check(
    basis: &LatticeBasis,
    v_m: &InvolutionVector,
    k: u64,
) -> Result<bool, LatticeError> {
    odd_covering_check_budget(basis, v_m, k, DEFAULT_COVERING_BUDGET)
}

pub fn odd_covering_check_budget(
    basis: &LatticeBasis,
    v_m: &InvolutionVector,
    k: u64,
    budget: u128,
) -> Result<bool, LatticeError> {
    // validate the involution invariant on entry
    let doubled: Vec<i128> = v_m.coords().iter().map(|&x| 2 * x).collect();
    if !basis.contains(&doubled)? {
        return Err(LatticeError::InvolutionNotHalfLattice);
    }
    Ok(quotient_bfs(basis, Some(v_m.coords()), budget)? <= k)
}

/// Exact eccentricity of the origin coset; `extra` seeds a second source at
/// level 1 (the involution shift of the odd-degree criterion).
fn quotient_bfs(
    basis: &LatticeBasis,
    extra: Option<&[i128]>,
    budget: u128,
) -> Result<u64, LatticeError> {
    let q = quotient(basis)?;
    if q.size > budget {
        return Err(LatticeError::BudgetExceeded(q.size));
    }
    if q.size <= 1 {
        return Ok(0);
    }
    // coset coordinates of an arbitrary point, by linearity over the
    // generator labels
    let coords_of = |point: &[i128]| -> Vec<u64> {
        let mut sum = vec![0u64; q.dims.len()];
        for (i, &c) in point.iter().enumerate() {
            for (j, &l) in q.gen_labels[i].iter().enumerate() {
                let d = q.dims[j] as u128;
                let add = c.rem_euclid(q.dims[j] as i128) as u128 * l as u128 % d;
                sum[j] = ((sum[j] as u128 + add) % d) as u64;
            }
        }
        sum
    };

    if q.dims.len() == 1 {
        // cyclic quotient: a circulant BFS over Z_n with the generator
        // labels as steps; reuse the word-parallel frontier
        let n = q.dims[0];
        let mut deltas = Vec::new();
        for l in &q.gen_labels {
            let h = l[0] % n;
            if h != 0 {
                deltas.push(h);
                deltas.push(n - h);
            }
        }
        let seed = extra.map(|v| q.encode(&coords_of(v)));
        if deltas.is_empty() {
            return Err(LatticeError::Singular);
        }
        let (diam, _) = bitset_levels_raw(n, &deltas, seed);
        return Ok(diam as u64);
    }

    // general quotient: explicit level BFS over mixed-radix labels
    let size = q.size as usize;
    let mut dist = vec![u32::MAX; size];
    dist[0] = 0;
    let mut frontier = vec![vec![0u64; q.dims.len()]];
    let mut level: u64 = 0;
    let mut seen = 1usize;
    // second source injected at level 1 (the odd-degree involution shift)
    let extra_coords: Option<Vec<u64>> = extra.map(|v| coords_of(v));
    while !frontier.is_empty() {
        let mut next: Vec<Vec<u64>> = Vec::new();
        for coords in &frontier {
            for l in &q.gen_labels {
                for sign in [1i64, -1] {
                    let mut c2 = coords.clone();
                    for (j, &lj) in l.iter().enumerate() {
                        let d = q.dims[j];
                        let step = if sign > 0 { lj } else { (d - lj % d) % d };
                        c2[j] = (c2[j] + step) % d;
                    }
                    let idx = q.encode(&c2) as usize;
                    if dist[idx] == u32::MAX {
                        dist[idx] = level as u32 + 1;
                        seen += 1;
                        next.push(c2);
                    }
                }
            }
        }
        if level == 0 {
            if let Some(c) = &extra_coords {
                let idx = q.encode(c) as usize;
                if dist[idx] == u32::MAX {
                    dist[idx] = 1;
                    seen += 1;
                    next.push(c.clone());
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
        level += 1;
    }
    // the e_i generate Z^f, so their images span any quotient of it
    debug_assert_eq!(seen, size);
    Ok(level)
}
