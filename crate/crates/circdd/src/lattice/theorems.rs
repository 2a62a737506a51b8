//! The seven degree-10 existence constructions: one lattice per diameter
//! class (three for the class that splits mod 15), each carrying its basis
//! rows, the combination identities that prove the quotient cyclic, the 16
//! orthant vectors, and the determinant quintic.
//!
//! Proof thresholds gate only the orthant suite; bases, determinants and
//! combination identities are evaluated for every residue-valid diameter.

use super::{theorems_data, LatticeBasis, LatticeError};

/// Linear polynomial `a*x + c` in the substituted parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinPoly {
    pub a: i64,
    pub c: i64,
}

impl LinPoly {
    pub fn eval(&self, x: i64) -> i128 {
        self.a as i128 * x as i128 + self.c as i128
    }
}

/// Auxiliary orthant vector: index, defining combination of earlier vectors,
/// and the expected row.
#[derive(Debug, Clone)]
pub struct AuxVector {
    pub index: u8,
    pub terms: [(i8, u8); 3],
    pub row: [LinPoly; 5],
}

/// One unit-vector combination identity: sum(coeffs[i] * v_i) must equal
/// (target, 0, .., -1, .., 0) with -1 in the combination's column.
#[derive(Debug, Clone)]
pub struct Combo {
    pub coeffs: [[i64; 6]; 5],
    pub target: [i64; 6],
}

/// A small diameter at which the construction is verified directly.
#[derive(Debug, Clone)]
pub struct Anchor {
    pub k: u64,
    pub order: u64,
    pub gens: &'static [u64],
}

/// Symbolic data of one existence construction.
#[derive(Debug, Clone)]
pub struct TheoremConstruction {
    pub id: u8,
    pub class_label: &'static str,
    pub set_index: u32,
    pub residue: u64,
    pub modulus: u64,
    /// a = (a_num * k + a_off) / a_den
    pub a_num: i64,
    pub a_off: i64,
    pub a_den: i64,
    pub proof_threshold: u64,
    /// l1 norm of every orthant vector (equals 2k+1)
    pub norm: LinPoly,
    /// coordinate magnitude cap
    pub cap: LinPoly,
    /// vectors attaining the cap; `None` means every vector may reach it
    pub cap_attained: Option<&'static [u8]>,
    pub rows: [[LinPoly; 5]; 5],
    pub aux: [AuxVector; 11],
    pub combos: [Combo; 4],
    pub det_poly: [i64; 6],
    pub anchors: &'static [Anchor],
}

/// All constructions, in theorem order.
pub fn theorems() -> &'static [TheoremConstruction] {
    theorems_data::CONSTRUCTIONS
}

/// Look up a construction by theorem number (3..=9).
pub fn theorem(id: u8) -> Option<&'static TheoremConstruction> {
    theorems().iter().find(|t| t.id == id)
}

fn eval_poly6(coeffs: &[i64; 6], a: i64) -> i128 {
    let mut v: i128 = 0;
    for &c in coeffs {
        v = v * a as i128 + c as i128;
    }
    v
}

impl TheoremConstruction {
    /// Substituted parameter for a residue-valid diameter.
    pub fn a_of(&self, k: u64) -> Result<i64, LatticeError> {
        if k % self.modulus != self.residue % self.modulus || k == 0 {
            return Err(LatticeError::WrongResidue {
                k,
                residue: self.residue,
                modulus: self.modulus,
            });
        }
        let v = self.a_num * k as i64 + self.a_off;
        debug_assert_eq!(v % self.a_den, 0);
        Ok(v / self.a_den)
    }

    /// All 16 orthant vectors (v_1..v_5 basis rows, then v_6..v_16).
    pub fn orthant_vectors(&self, k: u64) -> Result<Vec<Vec<i128>>, LatticeError> {
        let a = self.a_of(k)?;
        let mut vs: Vec<Vec<i128>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|p| p.eval(a)).collect())
            .collect();
        for aux in &self.aux {
            let row: Vec<i128> = aux.row.iter().map(|p| p.eval(a)).collect();
            vs.push(row);
        }
        Ok(vs)
    }

    /// Expected determinant at diameter k (signed magnitude).
    pub fn expected_det(&self, k: u64) -> Result<i128, LatticeError> {
        Ok(eval_poly6(&self.det_poly, self.a_of(k)?))
    }

    /// Generator images of e_1..e_5 in the cyclic quotient: 1 followed by the
    /// combination targets.
    pub fn generator_images(&self, k: u64) -> Result<[i128; 5], LatticeError> {
        let a = self.a_of(k)?;
        let mut out = [1i128; 5];
        for (i, combo) in self.combos.iter().enumerate() {
            out[i + 1] = eval_poly6(&combo.target, a);
        }
        Ok(out)
    }
}

/// Numeric lattice basis of a construction at diameter k.
pub fn theorem_basis(t: &TheoremConstruction, k: u64) -> Result<LatticeBasis, LatticeError> {
    let a = t.a_of(k)?;
    let rows: Vec<Vec<i128>> = t
        .rows
        .iter()
        .map(|r| r.iter().map(|p| p.eval(a)).collect())
        .collect();
    LatticeBasis::new(rows)
}

/// Checks every printed combination identity at diameter k: the combination
/// of basis rows must equal (P(a), 0, .., -1, .., 0) with -1 in the column
/// the identity eliminates.
pub fn verify_combo_identities(t: &TheoremConstruction, k: u64) -> Result<(), LatticeError> {
    let a = t.a_of(k)?;
    let rows: Vec<Vec<i128>> = t
        .rows
        .iter()
        .map(|r| r.iter().map(|p| p.eval(a)).collect())
        .collect();
    for (ci, combo) in t.combos.iter().enumerate() {
        let mut acc = vec![0i128; 5];
        for (vi, cpoly) in combo.coeffs.iter().enumerate() {
            let c = eval_poly6(cpoly, a);
            for j in 0..5 {
                acc[j] += c * rows[vi][j];
            }
        }
        let mut want = vec![0i128; 5];
        want[0] = eval_poly6(&combo.target, a);
        want[ci + 1] = -1;
        if acc != want {
            return Err(LatticeError::IdentityFailure {
                index: ci + 1,
                got: acc,
            });
        }
    }
    Ok(())
}

/// The orthant suite of a construction at diameter k (k at or above the
/// proof threshold):
///  (a) each auxiliary vector equals its defining combination,
///  (b) the 32 signed vectors realize all sign patterns with no zero entry,
///  (c) coordinate magnitudes respect the stated cap,
///  (d) every l1 norm equals the stated constant (2k+1).
pub fn verify_orthant_suite(t: &TheoremConstruction, k: u64) -> Result<(), LatticeError> {
    let a = t.a_of(k)?;
    if k < t.proof_threshold {
        return Err(LatticeError::BelowProofThreshold {
            k,
            threshold: t.proof_threshold,
        });
    }
    let vs = t.orthant_vectors(k)?;
    // (a) defining combinations
    for aux in &t.aux {
        let mut acc = vec![0i128; 5];
        for &(sign, src) in &aux.terms {
            let src_vec = &vs[src as usize - 1];
            for j in 0..5 {
                acc[j] += sign as i128 * src_vec[j];
            }
        }
        if acc != vs[aux.index as usize - 1] {
            return Err(LatticeError::SuiteFailure(format!(
                "v{} differs from its defining combination",
                aux.index
            )));
        }
    }
    // (b) sign patterns
    let mut patterns = std::collections::HashSet::new();
    for v in &vs {
        if v.iter().any(|&x| x == 0) {
            return Err(LatticeError::SuiteFailure(format!(
                "orthant vector {v:?} has a zero coordinate"
            )));
        }
        let pat: Vec<bool> = v.iter().map(|&x| x > 0).collect();
        let neg: Vec<bool> = pat.iter().map(|&b| !b).collect();
        patterns.insert(pat);
        patterns.insert(neg);
    }
    if patterns.len() != 32 {
        return Err(LatticeError::SuiteFailure(format!(
            "only {} of 32 sign patterns realized",
            patterns.len()
        )));
    }
    // (c) coordinate caps
    let cap = t.cap.eval(a);
    for (i, v) in vs.iter().enumerate() {
        let idx = i as u8 + 1;
        let mx = v.iter().map(|x| x.abs()).max().unwrap();
        match t.cap_attained {
            None => {
                if mx > cap {
                    return Err(LatticeError::SuiteFailure(format!(
                        "v{idx} exceeds cap {cap}: {mx}"
                    )));
                }
            }
            Some(attained) => {
                if attained.contains(&idx) {
                    if mx != cap {
                        return Err(LatticeError::SuiteFailure(format!(
                            "v{idx} should attain cap {cap}, max is {mx}"
                        )));
                    }
                } else if mx > cap - 1 {
                    return Err(LatticeError::SuiteFailure(format!(
                        "v{idx} exceeds cap-1 {}: {mx}",
                        cap - 1
                    )));
                }
            }
        }
    }
    // (d) l1 norms equal the stated constant, which is 2k+1
    let norm = t.norm.eval(a);
    if norm != 2 * k as i128 + 1 {
        return Err(LatticeError::SuiteFailure(format!(
            "stated norm {norm} is not 2k+1"
        )));
    }
    for (i, v) in vs.iter().enumerate() {
        let l1: i128 = v.iter().map(|x| x.abs()).sum();
        if l1 != norm {
            return Err(LatticeError::SuiteFailure(format!(
                "v{} has l1 norm {l1}, expected {norm}",
                i + 1
            )));
        }
    }
    Ok(())
}
