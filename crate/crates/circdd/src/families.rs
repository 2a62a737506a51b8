//! Machine-readable degree-10 and degree-11 family tables: order and
//! generating-set quintics per diameter class, their residue-class validity,
//! and the published instance rows used as pins.
//!
//! Tables ship as JSON data files embedded in the crate and can be overridden
//! from disk (`CIRCDD_TABLES` or an explicit path), so transcription fixes
//! never require a rebuild. Both the k-form and the a-format order
//! polynomials are stored; every evaluation cross-checks the two encodings.

use crate::arith::gcd;
use crate::circulant::{canonicalize, CirculantError, GeneratingSet};
use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

const DEGREE10_JSON: &str = include_str!("../data/degree10.json");
const DEGREE11_JSON: &str = include_str!("../data/degree11.json");

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("no family for degree {degree} class {class}")]
    UnknownClass { degree: u32, class: String },
    #[error("no generating set {set} in degree {degree} class {class}")]
    UnknownSet { degree: u32, class: String, set: u32 },
    #[error("k={k} is not congruent to {residue} mod {modulus}")]
    WrongResidue { k: u64, residue: u64, modulus: u64 },
    #[error("k={k} is below the family threshold k_min={k_min}")]
    BelowThreshold { k: u64, k_min: u64 },
    #[error("no subset of set {set} covers k={k} (mod {modulus})")]
    NoSubsetForResidue { set: u32, k: u64, modulus: u64 },
    #[error("divisibility failure evaluating {what} at a={a}: {val} not divisible by {div}")]
    DivisibilityFailure { what: String, a: i64, val: i128, div: i64 },
    #[error("class {class} has no generating-set polynomials (odd-order family)")]
    NoPolynomialSets { class: String },
    #[error("order/encoding mismatch at k={k}: a-format {a_format} vs k-form {k_form}")]
    EncodingMismatch { k: u64, a_format: i128, k_form: i128 },
    #[error("value overflows the supported integer range")]
    Overflow,
    #[error(transparent)]
    Circulant(#[from] CirculantError),
}

/// Six-coefficient integer polynomial with a positive divisor:
/// value = (c5 a^5 + ... + c0) / div, evaluation must be exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuinticPoly {
    pub coeffs: [i64; 6],
    pub div: i64,
}

impl QuinticPoly {
    pub fn eval(&self, a: i64) -> Result<i128, FamilyError> {
        let mut v: i128 = 0;
        for &c in &self.coeffs {
            v = v
                .checked_mul(a as i128)
                .and_then(|x| x.checked_add(c as i128))
                .ok_or(FamilyError::Overflow)?;
        }
        if v % self.div as i128 != 0 {
            return Err(FamilyError::DivisibilityFailure {
                what: format!("({:?})/{}", self.coeffs, self.div),
                a,
                val: v,
                div: self.div,
            });
        }
        Ok(v / self.div as i128)
    }

    pub fn is_constant_one(&self) -> bool {
        self.coeffs == [0, 0, 0, 0, 0, 1] && self.div == 1
    }
}

/// Substitution a = (mul*k + off)/den turning the diameter into the table
/// parameter; integral exactly on the owning residue class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ASubstitution {
    pub mul: i64,
    pub off: i64,
    pub den: i64,
}

impl ASubstitution {
    pub fn apply(&self, k: u64) -> Option<i64> {
        let v = self.mul.checked_mul(k as i64)?.checked_add(self.off)?;
        (v % self.den == 0).then(|| v / self.den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subset {
    pub residue: u64,
    pub modulus: u64,
    pub generators: Vec<QuinticPoly>,
}

impl Subset {
    pub fn covers(&self, k: u64) -> bool {
        k % self.modulus == self.residue % self.modulus
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSetFamily {
    pub index: u32,
    pub subsets: Vec<Subset>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub k: u64,
    pub order: u64,
    pub gens: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    #[serde(rename = "largest-known")]
    LargestKnown,
    #[serde(rename = "largest-known-odd-order")]
    LargestKnownOddOrder,
}

/// One isomorphism family: order polynomials (both encodings), substitution,
/// generating-set polynomial tables and published instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyTable {
    #[serde(skip, default)]
    pub degree: u32,
    #[serde(rename = "class")]
    pub class_label: String,
    pub parity: Parity,
    pub residue: u64,
    pub k_min: u64,
    pub a_sub: ASubstitution,
    pub order_poly: QuinticPoly,
    pub order_poly_k: QuinticPoly,
    pub sets: Vec<GenSetFamily>,
    pub instances: Vec<Instance>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallExtremal {
    pub k: u64,
    pub order: u64,
    pub gensets: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct DegreeFile {
    version: u32,
    degree: u32,
    families: Vec<FamilyTable>,
    #[serde(default)]
    small_extremal: Vec<SmallExtremal>,
}

/// The complete table set for degrees 10 and 11.
#[derive(Debug, Clone)]
pub struct Tables {
    pub families: Vec<FamilyTable>,
    pub small_extremal_10: Vec<SmallExtremal>,
    pub small_extremal_11: Vec<SmallExtremal>,
}

/// Where to load the tables from.
pub enum TableSource<'a> {
    /// The JSON files embedded in the crate.
    BuiltIn,
    /// A directory containing degree10.json and degree11.json.
    Dir(&'a Path),
}

/// Loads and validates the family tables.
///
/// The environment variable `CIRCDD_TABLES` (a directory path) overrides the
/// built-in data when `source` is `BuiltIn`.
pub fn load_tables(source: TableSource) -> Result<Tables, FamilyError> {
    let (d10, d11) = match source {
        TableSource::BuiltIn => match std::env::var_os("CIRCDD_TABLES") {
            Some(dir) => read_dir_files(Path::new(&dir))?,
            None => (DEGREE10_JSON.to_string(), DEGREE11_JSON.to_string()),
        },
        TableSource::Dir(dir) => read_dir_files(dir)?,
    };
    let f10: DegreeFile =
        serde_json::from_str(&d10).map_err(|e| FamilyError::Parse(format!("degree10: {e}")))?;
    let f11: DegreeFile =
        serde_json::from_str(&d11).map_err(|e| FamilyError::Parse(format!("degree11: {e}")))?;
    if f10.degree != 10 || f11.degree != 11 {
        return Err(FamilyError::Parse("degree fields must be 10 and 11".into()));
    }
    let mut families = Vec::new();
    for (file, degree) in [(&f10, 10u32), (&f11, 11u32)] {
        for fam in &file.families {
            let mut fam = fam.clone();
            fam.degree = degree;
            families.push(fam);
        }
    }
    let tables = Tables {
        families,
        small_extremal_10: f10.small_extremal,
        small_extremal_11: f11.small_extremal,
    };
    tables.validate()?;
    Ok(tables)
}

fn read_dir_files(dir: &Path) -> Result<(String, String), FamilyError> {
    let read = |name: &str| {
        std::fs::read_to_string(dir.join(name))
            .map_err(|e| FamilyError::Parse(format!("{}: {e}", dir.join(name).display())))
    };
    Ok((read("degree10.json")?, read("degree11.json")?))
}

impl Tables {
    pub fn family(&self, degree: u32, class: &str) -> Result<&FamilyTable, FamilyError> {
        self.families
            .iter()
            .find(|f| f.degree == degree && f.class_label == class)
            .ok_or_else(|| FamilyError::UnknownClass {
                degree,
                class: class.to_string(),
            })
    }

    pub fn families_of_degree(&self, degree: u32) -> impl Iterator<Item = &FamilyTable> {
        self.families.iter().filter(move |f| f.degree == degree)
    }

    pub fn small_extremal(&self, degree: u32) -> &[SmallExtremal] {
        match degree {
            10 => &self.small_extremal_10,
            11 => &self.small_extremal_11,
            _ => &[],
        }
    }

    /// Structural invariants checked at load time; violations indicate a
    /// corrupted or mistranscribed data file.
    fn validate(&self) -> Result<(), FamilyError> {
        let bad = |msg: String| Err(FamilyError::InvariantViolation(msg));
        for fam in &self.families {
            let tag = format!("degree {} class {}", fam.degree, fam.class_label);
            if fam.a_sub.apply(fam.residue + 5 * fam.k_min).is_none() {
                return bad(format!("{tag}: substitution not integral on the class residue"));
            }
            for set in &fam.sets {
                for sub in &set.subsets {
                    if sub.modulus % 5 != 0 || sub.residue % 5 != fam.residue {
                        return bad(format!(
                            "{tag} set {}: subset {}/{} off the class residue",
                            set.index, sub.residue, sub.modulus
                        ));
                    }
                    if sub.generators.len() != 5 {
                        return bad(format!("{tag} set {}: need 5 generators", set.index));
                    }
                    if !sub.generators[0].is_constant_one() {
                        return bad(format!("{tag} set {}: first generator must be 1", set.index));
                    }
                    // divisibility at the subset's smallest valid diameter
                    let k = smallest_valid_k(fam, sub);
                    let a = a_param_unchecked(fam, k)?;
                    for (i, g) in sub.generators.iter().enumerate() {
                        g.eval(a).map_err(|e| {
                            FamilyError::InvariantViolation(format!(
                                "{tag} set {} g{} at k={k}: {e}",
                                set.index,
                                i + 1
                            ))
                        })?;
                    }
                }
            }
            for inst in &fam.instances {
                let n = eval_order(fam, inst.k)?;
                if n != inst.order {
                    return bad(format!(
                        "{tag}: instance k={} order {} but polynomial gives {n}",
                        inst.k, inst.order
                    ));
                }
                let mut g = inst.order;
                for &x in &inst.gens {
                    g = gcd(g, x);
                }
                if fam.degree % 2 == 1 {
                    g = gcd(g, inst.order / 2);
                }
                if g != 1 {
                    return bad(format!("{tag}: instance k={} disconnected", inst.k));
                }
            }
        }
        Ok(())
    }
}

impl FamilyTable {
    /// Set characterization in the c/m form: subset count over modulus.
    pub fn characterization(&self) -> Vec<(usize, u64)> {
        self.sets
            .iter()
            .map(|s| {
                let m = s.subsets.first().map_or(5, |x| x.modulus);
                (s.subsets.len(), m)
            })
            .collect()
    }

    /// Smallest diameter at which the given subset applies.
    pub fn smallest_k(&self, sub: &Subset) -> u64 {
        smallest_valid_k(self, sub)
    }
}

fn smallest_valid_k(fam: &FamilyTable, sub: &Subset) -> u64 {
    let mut k = sub.residue % sub.modulus;
    while k < fam.k_min || k == 0 {
        k += sub.modulus;
    }
    k
}

fn a_param_unchecked(fam: &FamilyTable, k: u64) -> Result<i64, FamilyError> {
    fam.a_sub.apply(k).ok_or(FamilyError::WrongResidue {
        k,
        residue: fam.residue,
        modulus: 5,
    })
}

/// The integer table parameter a = (4k + c)/5 for a diameter in the family's
/// residue class, at or above the family threshold.
pub fn a_param(fam: &FamilyTable, k: u64) -> Result<i64, FamilyError> {
    if k % 5 != fam.residue {
        return Err(FamilyError::WrongResidue {
            k,
            residue: fam.residue,
            modulus: 5,
        });
    }
    if k < fam.k_min {
        return Err(FamilyError::BelowThreshold { k, k_min: fam.k_min });
    }
    a_param_unchecked(fam, k)
}

/// Exact order of the family member of diameter k. Both stored encodings are
/// evaluated and must agree.
pub fn eval_order(fam: &FamilyTable, k: u64) -> Result<u64, FamilyError> {
    let a = a_param(fam, k)?;
    let from_a = fam.order_poly.eval(a)?;
    let from_k = fam.order_poly_k.eval(k as i64)?;
    if from_a != from_k {
        return Err(FamilyError::EncodingMismatch {
            k,
            a_format: from_a,
            k_form: from_k,
        });
    }
    u64::try_from(from_a).map_err(|_| FamilyError::Overflow)
}

/// The generating set of the given set index at diameter k, canonicalized
/// against the evaluated order. For degree 11 the involution n/2 is implied.
pub fn eval_genset(fam: &FamilyTable, set_index: u32, k: u64) -> Result<GeneratingSet, FamilyError> {
    if fam.sets.is_empty() {
        return Err(FamilyError::NoPolynomialSets {
            class: fam.class_label.clone(),
        });
    }
    let set = fam
        .sets
        .iter()
        .find(|s| s.index == set_index)
        .ok_or_else(|| FamilyError::UnknownSet {
            degree: fam.degree,
            class: fam.class_label.clone(),
            set: set_index,
        })?;
    let a = a_param(fam, k)?;
    let n = eval_order(fam, k)?;
    let sub = set.subsets.iter().find(|s| s.covers(k)).ok_or_else(|| {
        FamilyError::NoSubsetForResidue {
            set: set_index,
            k,
            modulus: set.subsets.first().map_or(5, |s| s.modulus),
        }
    })?;
    let mut gens = Vec::with_capacity(5);
    for g in &sub.generators {
        let v = g.eval(a)?;
        let v = u64::try_from(v.rem_euclid(n as i128)).map_err(|_| FamilyError::Overflow)?;
        gens.push(v);
    }
    let gens = canonicalize(n, &gens)?;
    Ok(GeneratingSet::new(n, &gens, fam.degree % 2 == 1)?)
}

/// All transcribed table subsets applicable at diameter k for the degree.
pub fn applicable_sets<'a>(
    tables: &'a Tables,
    degree: u32,
    k: u64,
) -> Vec<(&'a FamilyTable, u32, &'a Subset)> {
    let mut out = Vec::new();
    for fam in tables.families_of_degree(degree) {
        if k % 5 != fam.residue || k < fam.k_min {
            continue;
        }
        for set in &fam.sets {
            for sub in &set.subsets {
                if sub.covers(k) {
                    out.push((fam, set.index, sub));
                }
            }
        }
    }
    out.sort_by(|a, b| {
        (a.0.class_label.as_str(), a.1, a.2.modulus).cmp(&(b.0.class_label.as_str(), b.1, b.2.modulus))
    });
    out
}

/// Which engine verified an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineKind {
    Bfs,
    Lattice,
    Multiplier,
}

impl std::fmt::Display for EngineKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EngineKind::Bfs => write!(f, "bfs"),
            EngineKind::Lattice => write!(f, "lattice"),
            EngineKind::Multiplier => write!(f, "multiplier"),
        }
    }
}

/// Result record for a single verified instance.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub degree: u32,
    pub class: String,
    pub set: u32,
    pub subset_residue: u64,
    pub subset_modulus: u64,
    pub k: u64,
    pub n_claimed: u64,
    pub n_computed: u64,
    pub diameter_claimed: u64,
    pub diameter_computed: u64,
    pub engine: EngineKind,
    pub pass: bool,
    #[serde(skip_serializing)]
    pub elapsed: std::time::Duration,
}

pub use crate::engine::verify_instance;

/// How a published instance row relates to the polynomial tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceReproduction {
    Exact { set: u32 },
    UnitMultiple,
    NotFound,
    OrderMismatch { computed: u64 },
}

/// Does the instance genset appear among this family's evaluated subsets at
/// the same diameter (exactly), or failing that as a unit multiple of one?
pub fn instance_reproduction(
    fam: &FamilyTable,
    inst: &Instance,
) -> Result<InstanceReproduction, FamilyError> {
    let n = eval_order(fam, inst.k)?;
    if n != inst.order {
        return Ok(InstanceReproduction::OrderMismatch { computed: n });
    }
    let target = GeneratingSet::new(inst.order, &inst.gens, fam.degree % 2 == 1)?;
    let mut equivalent = false;
    for set in &fam.sets {
        if let Ok(ev) = eval_genset(fam, set.index, inst.k) {
            if ev == target {
                return Ok(InstanceReproduction::Exact { set: set.index });
            }
            if crate::circulant::find_multiplier(n, &ev, &target).is_some() {
                equivalent = true;
            }
        }
    }
    Ok(if equivalent {
        InstanceReproduction::UnitMultiple
    } else {
        InstanceReproduction::NotFound
    })
}
