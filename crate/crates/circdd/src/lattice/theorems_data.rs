//! Static tables for the degree-10 existence constructions: lattice basis
//! rows linear in the substituted parameter, auxiliary orthant vectors with
//! their defining combinations, the unit-vector combination identities, and
//! the determinant quintics.

use super::theorems::{Anchor, AuxVector, Combo, LinPoly, TheoremConstruction};

const fn lp(a: i64, c: i64) -> LinPoly {
    LinPoly { a, c }
}

pub(super) const CONSTRUCTIONS: &[TheoremConstruction] = &[
    TheoremConstruction {
        id: 3,
        class_label: "0",
        set_index: 1,
        residue: 0,
        modulus: 5,
        a_num: 2,
        a_off: 0,
        a_den: 5,
        proof_threshold: 10,
        norm: lp(5, 1),
        cap: lp(1, 2),
        cap_attained: Some(&[7, 8, 11, 13, 16]),
        rows: [
            [lp(1, 1), lp(-1, 0), lp(-1, 0), lp(1, 0), lp(1, 0)],
            [lp(1, 0), lp(-1, -1), lp(-1, 0), lp(1, 0), lp(-1, 0)],
            [lp(-1, 0), lp(1, 0), lp(-1, 0), lp(-1, -1), lp(-1, 0)],
            [lp(1, 1), lp(-1, 0), lp(-1, 1), lp(-1, -1), lp(-1, 0)],
            [lp(1, -1), lp(1, 1), lp(1, 1), lp(-1, 1), lp(-1, -1)],
        ],
        aux: [
            AuxVector { index: 6, terms: [(1, 1), (-1, 2), (1, 3)], row: [lp(-1, 1), lp(1, 1), lp(-1, 0), lp(-1, -1), lp(1, 0)] },
            AuxVector { index: 7, terms: [(1, 1), (-1, 2), (1, 4)], row: [lp(1, 2), lp(-1, 1), lp(-1, 1), lp(-1, -1), lp(1, 0)] },
            AuxVector { index: 8, terms: [(1, 1), (-1, 2), (1, 5)], row: [lp(1, 0), lp(1, 2), lp(1, 1), lp(-1, 1), lp(1, -1)] },
            AuxVector { index: 9, terms: [(1, 1), (1, 3), (-1, 4)], row: [lp(-1, 0), lp(1, 0), lp(-1, -1), lp(1, 0), lp(1, 0)] },
            AuxVector { index: 10, terms: [(1, 1), (1, 3), (1, 5)], row: [lp(1, 0), lp(1, 1), lp(-1, 1), lp(-1, 0), lp(-1, -1)] },
            AuxVector { index: 11, terms: [(1, 1), (-1, 4), (1, 5)], row: [lp(1, -1), lp(1, 1), lp(1, 0), lp(1, 2), lp(1, -1)] },
            AuxVector { index: 12, terms: [(1, 2), (1, 3), (-1, 4)], row: [lp(-1, -1), lp(1, -1), lp(-1, -1), lp(1, 0), lp(-1, 0)] },
            AuxVector { index: 13, terms: [(1, 2), (-1, 4), (1, 5)], row: [lp(1, -2), lp(1, 0), lp(1, 0), lp(1, 2), lp(-1, -1)] },
            AuxVector { index: 14, terms: [(1, 2), (1, 5), (1, 9)], row: [lp(1, -1), lp(1, 0), lp(-1, 0), lp(1, 1), lp(-1, -1)] },
            AuxVector { index: 15, terms: [(1, 1), (1, 5), (1, 9)], row: [lp(1, 0), lp(1, 1), lp(-1, 0), lp(1, 1), lp(1, -1)] },
            AuxVector { index: 16, terms: [(1, 1), (1, 5), (1, 6)], row: [lp(1, 1), lp(1, 2), lp(-1, 1), lp(-1, 0), lp(1, -1)] },
        ],
        combos: [
            Combo { coeffs: [[0, 0, 0, 2, 2, 1], [0, 0, 0, 0, -2, 1], [0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 2, 0], [0, 0, 0, 2, 0, 0]], target: [0, 0, 4, 2, 6, 1] },
            Combo { coeffs: [[0, 0, 4, 4, 2, 0], [0, 0, 0, -4, 2, 0], [0, 0, 0, 0, 0, 1], [0, 0, 0, 4, 0, -1], [0, 0, 4, 0, 0, 0]], target: [0, 8, 4, 12, 0, -1] },
            Combo { coeffs: [[0, 0, 4, 6, 5, 2], [0, 0, 0, -4, 0, 0], [0, 0, 0, 0, 0, 1], [0, 0, 0, 4, 2, 0], [0, 0, 4, 2, 1, 0]], target: [0, 8, 8, 16, 7, 2] },
            Combo { coeffs: [[0, 0, 8, 12, 9, 4], [0, 0, 0, -8, 0, 1], [0, 0, 0, 0, 0, 2], [0, 0, 0, 8, 4, -1], [0, 0, 8, 4, 1, 1]], target: [0, 16, 16, 30, 15, 2] },
        ],
        det_poly: [16, 16, 32, 16, 5, 1],
        anchors: &[
            Anchor { k: 5, order: 1099, gens: &[1, 53, 207, 272, 536] },
        ],
    },
    TheoremConstruction {
        id: 4,
        class_label: "1",
        set_index: 1,
        residue: 1,
        modulus: 5,
        a_num: 2,
        a_off: 3,
        a_den: 5,
        proof_threshold: 11,
        norm: lp(5, -2),
        cap: lp(1, 1),
        cap_attained: None,
        rows: [
            [lp(1, -1), lp(1, 0), lp(-1, 0), lp(1, 0), lp(1, -1)],
            [lp(1, -2), lp(-1, -1), lp(-1, -1), lp(-1, 2), lp(1, 0)],
            [lp(1, -1), lp(-1, 0), lp(-1, 1), lp(1, 0), lp(-1, 0)],
            [lp(1, -1), lp(1, -1), lp(-1, -1), lp(-1, 1), lp(1, 0)],
            [lp(1, 0), lp(-1, -1), lp(1, -1), lp(-1, 0), lp(-1, 2)],
        ],
        aux: [
            AuxVector { index: 6, terms: [(1, 1), (1, 2), (-1, 4)], row: [lp(1, -2), lp(-1, 0), lp(-1, 0), lp(1, 1), lp(1, -1)] },
            AuxVector { index: 7, terms: [(1, 1), (-1, 2), (1, 5)], row: [lp(1, 1), lp(1, 0), lp(1, 0), lp(1, -2), lp(-1, 1)] },
            AuxVector { index: 8, terms: [(-1, 1), (1, 3), (1, 4)], row: [lp(1, -1), lp(-1, -1), lp(-1, 0), lp(-1, 1), lp(-1, 1)] },
            AuxVector { index: 9, terms: [(1, 1), (-1, 3), (1, 5)], row: [lp(1, 0), lp(1, -1), lp(1, -2), lp(-1, 0), lp(1, 1)] },
            AuxVector { index: 10, terms: [(1, 1), (-1, 4), (1, 5)], row: [lp(1, 0), lp(-1, 0), lp(1, 0), lp(1, -1), lp(-1, 1)] },
            AuxVector { index: 11, terms: [(-1, 2), (1, 3), (1, 4)], row: [lp(1, 0), lp(1, 0), lp(-1, 1), lp(1, -1), lp(-1, 0)] },
            AuxVector { index: 12, terms: [(-1, 2), (1, 4), (1, 5)], row: [lp(1, 1), lp(1, -1), lp(1, -1), lp(-1, -1), lp(-1, 2)] },
            AuxVector { index: 13, terms: [(-1, 3), (1, 5), (1, 6)], row: [lp(1, -1), lp(-1, -1), lp(1, -2), lp(-1, 1), lp(1, 1)] },
            AuxVector { index: 14, terms: [(1, 1), (1, 5), (-1, 8)], row: [lp(1, 0), lp(1, 0), lp(1, -1), lp(1, -1), lp(1, 0)] },
            AuxVector { index: 15, terms: [(-1, 2), (1, 4), (1, 8)], row: [lp(1, 0), lp(1, -1), lp(-1, 0), lp(-1, 0), lp(-1, 1)] },
            AuxVector { index: 16, terms: [(1, 1), (-1, 4), (1, 13)], row: [lp(1, -1), lp(-1, 0), lp(1, -1), lp(1, 0), lp(1, 0)] },
        ],
        combos: [
            Combo { coeffs: [[0, 0, 4, -2, 4, 2], [0, 0, 0, -4, 0, 0], [0, 0, 0, 0, 2, 1], [0, 0, 0, 2, -2, 0], [0, 0, 4, 0, 2, 1]], target: [0, 8, -8, 14, 0, -3] },
            Combo { coeffs: [[0, 0, 8, -10, 13, -4], [0, 0, 0, -8, 6, -2], [0, 0, 0, 0, 4, -1], [0, 0, 0, 4, -7, 4], [0, 0, 8, -6, 6, -2]], target: [0, 16, -28, 44, -27, 5] },
            Combo { coeffs: [[0, 0, 8, -8, 12, -2], [0, 0, 0, -8, 4, -2], [0, 0, 0, 0, 4, 0], [0, 0, 0, 4, -6, 3], [0, 0, 8, -4, 6, -1]], target: [0, 16, -24, 40, -20, 3] },
            Combo { coeffs: [[0, 0, 12, -12, 17, -3], [0, 0, 0, -12, 6, -2], [0, 0, 0, 0, 6, 0], [0, 0, 0, 6, -9, 4], [0, 0, 12, -6, 8, -2]], target: [0, 24, -36, 58, -29, 3] },
        ],
        det_poly: [16, -32, 52, -40, 14, -2],
        anchors: &[
            Anchor { k: 6, order: 2380, gens: &[1, 555, 860, 951, 970] },
        ],
    },
    TheoremConstruction {
        id: 5,
        class_label: "2",
        set_index: 1,
        residue: 2,
        modulus: 15,
        a_num: 2,
        a_off: -4,
        a_den: 15,
        proof_threshold: 32,
        norm: lp(15, 5),
        cap: lp(3, 3),
        cap_attained: Some(&[3]),
        rows: [
            [lp(3, 1), lp(-3, -1), lp(-3, -1), lp(-3, 0), lp(-3, -2)],
            [lp(3, 1), lp(3, 1), lp(-3, -1), lp(-3, -1), lp(-3, -1)],
            [lp(3, 0), lp(3, 0), lp(3, 1), lp(-3, -3), lp(3, 1)],
            [lp(3, 2), lp(-3, 0), lp(-3, 0), lp(3, 2), lp(-3, -1)],
            [lp(3, 1), lp(3, 0), lp(-3, -1), lp(-3, -2), lp(3, 1)],
        ],
        aux: [
            AuxVector { index: 6, terms: [(1, 1), (-1, 2), (1, 3)], row: [lp(3, 0), lp(-3, -2), lp(3, 1), lp(-3, -2), lp(3, 0)] },
            AuxVector { index: 7, terms: [(-1, 1), (1, 2), (1, 4)], row: [lp(3, 2), lp(3, 2), lp(-3, 0), lp(3, 1), lp(-3, 0)] },
            AuxVector { index: 8, terms: [(1, 1), (-1, 2), (1, 5)], row: [lp(3, 1), lp(-3, -2), lp(-3, -1), lp(-3, -1), lp(3, 0)] },
            AuxVector { index: 9, terms: [(-1, 2), (1, 3), (1, 4)], row: [lp(3, 1), lp(-3, -1), lp(3, 2), lp(3, 0), lp(3, 1)] },
            AuxVector { index: 10, terms: [(-1, 2), (1, 4), (1, 5)], row: [lp(3, 2), lp(-3, -1), lp(-3, 0), lp(3, 1), lp(3, 1)] },
            AuxVector { index: 11, terms: [(1, 3), (1, 4), (-1, 5)], row: [lp(3, 1), lp(-3, 0), lp(3, 2), lp(3, 1), lp(-3, -1)] },
            AuxVector { index: 12, terms: [(1, 2), (-1, 5), (1, 6)], row: [lp(3, 0), lp(-3, -1), lp(3, 1), lp(-3, -1), lp(-3, -2)] },
            AuxVector { index: 13, terms: [(-1, 2), (1, 3), (1, 7)], row: [lp(3, 1), lp(3, 1), lp(3, 2), lp(3, -1), lp(3, 2)] },
            AuxVector { index: 14, terms: [(-1, 2), (1, 5), (1, 7)], row: [lp(3, 2), lp(3, 1), lp(-3, 0), lp(3, 0), lp(3, 2)] },
            AuxVector { index: 15, terms: [(1, 3), (-1, 5), (1, 7)], row: [lp(3, 1), lp(3, 2), lp(3, 2), lp(3, 0), lp(-3, 0)] },
            AuxVector { index: 16, terms: [(1, 1), (1, 3), (-1, 8)], row: [lp(3, 0), lp(3, 1), lp(3, 1), lp(-3, -2), lp(-3, -1)] },
        ],
        combos: [
            Combo { coeffs: [[0, 0, 0, -18, -6, 0], [0, 0, 0, 0, 0, -1], [0, 0, 108, 90, 30, 3], [0, 0, 108, 126, 54, 8], [0, 0, 0, 18, 12, 4]], target: [0, 648, 864, 522, 156, 19] },
            Combo { coeffs: [[0, 0, -36, -18, -2, 0], [0, 0, 0, 0, -2, 0], [0, 216, 216, 90, 14, 0], [0, 216, 288, 150, 32, 1], [0, 0, 36, 30, 12, 1]], target: [1296, 1944, 1332, 474, 78, 3] },
            Combo { coeffs: [[0, 0, -36, -18, -2, 0], [0, 0, 0, 0, -2, 0], [0, 216, 216, 90, 14, 1], [0, 216, 288, 150, 32, 2], [0, 0, 36, 30, 12, 1]], target: [1296, 1944, 1332, 474, 84, 5] },
            Combo { coeffs: [[0, 0, -36, -18, -5, 0], [0, 0, 0, 0, -2, 0], [0, 216, 216, 108, 23, 2], [0, 216, 288, 168, 47, 5], [0, 0, 36, 30, 15, 2]], target: [1296, 1944, 1440, 582, 129, 12] },
        ],
        det_poly: [3888, 6480, 4968, 2088, 471, 45],
        anchors: &[
            Anchor { k: 2, order: 45, gens: &[1, 3, 5, 12, 19] },
            Anchor { k: 17, order: 277179, gens: &[1, 19699, 85287, 85301, 86694] },
        ],
    },
    TheoremConstruction {
        id: 6,
        class_label: "2",
        set_index: 1,
        residue: 7,
        modulus: 15,
        a_num: 2,
        a_off: 1,
        a_den: 15,
        proof_threshold: 37,
        norm: lp(15, 0),
        cap: lp(3, 2),
        cap_attained: Some(&[4]),
        rows: [
            [lp(3, 1), lp(3, 1), lp(3, 0), lp(-3, 2), lp(3, 0)],
            [lp(3, 0), lp(3, -1), lp(-3, -1), lp(3, 1), lp(3, -1)],
            [lp(3, 0), lp(-3, 0), lp(-3, 1), lp(-3, -1), lp(-3, 0)],
            [lp(3, 0), lp(3, 0), lp(3, -1), lp(3, 2), lp(3, -1)],
            [lp(3, -1), lp(3, 0), lp(3, -1), lp(3, 1), lp(-3, -1)],
        ],
        aux: [
            AuxVector { index: 6, terms: [(1, 1), (1, 2), (-1, 4)], row: [lp(3, 1), lp(3, 0), lp(-3, 0), lp(-3, 1), lp(3, 0)] },
            AuxVector { index: 7, terms: [(1, 1), (-1, 4), (1, 5)], row: [lp(3, 0), lp(3, 1), lp(3, 0), lp(-3, 1), lp(-3, 0)] },
            AuxVector { index: 8, terms: [(1, 2), (-1, 4), (1, 5)], row: [lp(3, -1), lp(3, -1), lp(-3, -1), lp(3, 0), lp(-3, -1)] },
            AuxVector { index: 9, terms: [(1, 3), (1, 4), (-1, 5)], row: [lp(3, 1), lp(-3, 0), lp(-3, 1), lp(-3, 0), lp(3, 0)] },
            AuxVector { index: 10, terms: [(1, 1), (1, 3), (-1, 6)], row: [lp(3, 0), lp(-3, 1), lp(3, 1), lp(-3, 0), lp(-3, 0)] },
            AuxVector { index: 11, terms: [(1, 2), (1, 3), (-1, 6)], row: [lp(3, -1), lp(-3, -1), lp(-3, 0), lp(3, -1), lp(-3, -1)] },
            AuxVector { index: 12, terms: [(1, 3), (1, 4), (-1, 6)], row: [lp(3, -1), lp(-3, 0), lp(3, 0), lp(3, 0), lp(-3, -1)] },
            AuxVector { index: 13, terms: [(-1, 4), (1, 5), (1, 6)], row: [lp(3, 0), lp(3, 0), lp(-3, 0), lp(-3, 0), lp(-3, 0)] },
            AuxVector { index: 14, terms: [(1, 3), (1, 4), (-1, 7)], row: [lp(3, 0), lp(-3, -1), lp(-3, 0), lp(3, 0), lp(3, -1)] },
            AuxVector { index: 15, terms: [(1, 3), (1, 4), (-1, 8)], row: [lp(3, 1), lp(-3, 1), lp(3, 1), lp(-3, 1), lp(3, 0)] },
            AuxVector { index: 16, terms: [(1, 4), (-1, 6), (1, 9)], row: [lp(3, 0), lp(-3, 0), lp(3, 0), lp(3, 1), lp(3, -1)] },
        ],
        combos: [
            Combo { coeffs: [[0, 0, 0, 18, 0, 0], [0, 0, 0, 0, 0, 1], [0, 0, 108, 0, 12, 0], [0, 0, 108, 0, 6, 0], [0, 0, 0, -18, 0, -1]], target: [0, 648, 0, 90, 0, 1] },
            Combo { coeffs: [[0, 0, 36, -6, -1, 0], [0, 0, 0, 0, 2, 0], [0, 216, -36, 18, -6, -1], [0, 216, -36, 6, -4, -1], [0, 0, -36, 6, -1, 1]], target: [1296, -216, 144, -42, -3, -1] },
            Combo { coeffs: [[0, 0, 36, -6, 2, 0], [0, 0, 0, 0, 2, 0], [0, 216, -36, 36, -6, 0], [0, 216, -36, 24, -4, -1], [0, 0, -36, 6, -4, 1]], target: [1296, -216, 252, -42, 6, -1] },
            Combo { coeffs: [[0, 0, 36, -6, 2, 0], [0, 0, 0, 0, 2, 0], [0, 216, -36, 36, -6, 1], [0, 216, -36, 24, -4, 0], [0, 0, -36, 6, -4, 1]], target: [1296, -216, 252, -42, 12, -1] },
        ],
        det_poly: [3888, 0, 648, 0, 15, 0],
        anchors: &[
            Anchor { k: 7, order: 4551, gens: &[1, 739, 1178, 1295, 1301] },
            Anchor { k: 22, order: 962325, gens: &[1, 53299, 300932, 303875, 303893] },
        ],
    },
    TheoremConstruction {
        id: 7,
        class_label: "2",
        set_index: 2,
        residue: 12,
        modulus: 15,
        a_num: 2,
        a_off: 6,
        a_den: 15,
        proof_threshold: 27,
        norm: lp(15, -5),
        cap: lp(3, 1),
        cap_attained: Some(&[13]),
        rows: [
            [lp(3, -1), lp(-3, 1), lp(3, -1), lp(3, 0), lp(3, -2)],
            [lp(3, -1), lp(3, -1), lp(3, -1), lp(3, -1), lp(3, -1)],
            [lp(3, 0), lp(3, 0), lp(-3, 1), lp(3, -3), lp(-3, 1)],
            [lp(3, -2), lp(-3, 0), lp(3, 0), lp(-3, 2), lp(3, -1)],
            [lp(3, 0), lp(3, -1), lp(-3, 1), lp(3, -2), lp(3, -1)],
        ],
        aux: [
            AuxVector { index: 6, terms: [(1, 1), (-1, 2), (1, 3)], row: [lp(3, 0), lp(-3, 2), lp(-3, 1), lp(3, -2), lp(-3, 0)] },
            AuxVector { index: 7, terms: [(-1, 1), (1, 2), (1, 4)], row: [lp(3, -2), lp(3, -2), lp(3, 0), lp(-3, 1), lp(3, 0)] },
            AuxVector { index: 8, terms: [(1, 1), (-1, 2), (1, 5)], row: [lp(3, 0), lp(-3, 1), lp(-3, 1), lp(3, -1), lp(3, -2)] },
            AuxVector { index: 9, terms: [(-1, 2), (1, 3), (1, 4)], row: [lp(3, -1), lp(-3, 1), lp(-3, 2), lp(-3, 0), lp(-3, 1)] },
            AuxVector { index: 10, terms: [(-1, 2), (1, 4), (1, 5)], row: [lp(3, -1), lp(-3, 0), lp(-3, 2), lp(-3, 1), lp(3, -1)] },
            AuxVector { index: 11, terms: [(1, 3), (1, 4), (-1, 5)], row: [lp(3, -2), lp(-3, 1), lp(3, 0), lp(-3, 1), lp(-3, 1)] },
            AuxVector { index: 12, terms: [(1, 2), (-1, 5), (1, 6)], row: [lp(3, -1), lp(-3, 2), lp(3, -1), lp(3, -1), lp(-3, 0)] },
            AuxVector { index: 13, terms: [(-1, 2), (1, 3), (1, 7)], row: [lp(3, -1), lp(3, -1), lp(-3, 2), lp(-3, -1), lp(-3, 2)] },
            AuxVector { index: 14, terms: [(-1, 2), (1, 5), (1, 7)], row: [lp(3, -1), lp(3, -2), lp(-3, 2), lp(-3, 0), lp(3, 0)] },
            AuxVector { index: 15, terms: [(1, 3), (-1, 5), (1, 7)], row: [lp(3, -2), lp(3, -1), lp(3, 0), lp(-3, 0), lp(-3, 2)] },
            AuxVector { index: 16, terms: [(1, 1), (1, 3), (-1, 8)], row: [lp(3, -1), lp(3, 0), lp(3, -1), lp(3, -2), lp(-3, 1)] },
        ],
        combos: [
            Combo { coeffs: [[0, 0, 0, 18, -6, 0], [0, 0, 0, -18, 12, -3], [0, 0, 108, -108, 42, -7], [0, 0, 108, -126, 54, -8], [0, 0, 0, 18, -12, 4]], target: [0, 648, -864, 522, -156, 19] },
            Combo { coeffs: [[0, 0, 36, -18, 2, 0], [0, 0, -36, 30, -10, 1], [0, 216, -252, 120, -26, 1], [0, 216, -288, 150, -32, 1], [0, 0, 36, -30, 12, -1]], target: [1296, -1944, 1332, -474, 78, -3] },
            Combo { coeffs: [[0, 0, 36, -18, 2, 0], [0, 0, -36, 30, -10, 1], [0, 216, -252, 120, -26, 2], [0, 216, -288, 150, -32, 2], [0, 0, 36, -30, 12, -1]], target: [1296, -1944, 1332, -474, 84, -5] },
            Combo { coeffs: [[0, 0, 36, -18, 5, 0], [0, 0, -36, 30, -13, 2], [0, 216, -252, 138, -38, 4], [0, 216, -288, 168, -47, 5], [0, 0, 36, -30, 15, -2]], target: [1296, -1944, 1440, -582, 129, -12] },
        ],
        det_poly: [3888, -6480, 4968, -2088, 471, -45],
        anchors: &[
            Anchor { k: 12, order: 53025, gens: &[1, 5251, 19281, 19291, 19806] },
        ],
    },
    TheoremConstruction {
        id: 8,
        class_label: "3",
        set_index: 1,
        residue: 3,
        modulus: 5,
        a_num: 2,
        a_off: -1,
        a_den: 5,
        proof_threshold: 13,
        norm: lp(5, 2),
        cap: lp(1, 2),
        cap_attained: Some(&[1, 2, 5, 7, 8, 13, 15]),
        rows: [
            [lp(1, 2), lp(-1, 0), lp(1, -1), lp(-1, 0), lp(1, 1)],
            [lp(1, -1), lp(1, 0), lp(1, 2), lp(1, 0), lp(-1, -1)],
            [lp(1, 1), lp(1, 1), lp(-1, -1), lp(-1, 1), lp(1, 0)],
            [lp(1, 0), lp(1, 0), lp(1, 1), lp(-1, -1), lp(-1, 0)],
            [lp(1, 1), lp(-1, 1), lp(-1, -1), lp(1, 2), lp(1, -1)],
        ],
        aux: [
            AuxVector { index: 6, terms: [(1, 1), (1, 2), (-1, 4)], row: [lp(1, 1), lp(-1, 0), lp(1, 0), lp(1, 1), lp(1, 0)] },
            AuxVector { index: 7, terms: [(1, 2), (1, 3), (-1, 4)], row: [lp(1, 0), lp(1, 1), lp(-1, 0), lp(1, 2), lp(1, -1)] },
            AuxVector { index: 8, terms: [(-1, 2), (1, 4), (1, 5)], row: [lp(1, 2), lp(-1, 1), lp(-1, -2), lp(-1, 1), lp(1, 0)] },
            AuxVector { index: 9, terms: [(-1, 3), (1, 4), (1, 5)], row: [lp(1, 0), lp(-1, 0), lp(1, 1), lp(1, 0), lp(-1, -1)] },
            AuxVector { index: 10, terms: [(1, 3), (-1, 5), (1, 6)], row: [lp(1, 1), lp(1, 0), lp(1, 0), lp(-1, 0), lp(1, 1)] },
            AuxVector { index: 11, terms: [(1, 4), (1, 5), (-1, 6)], row: [lp(1, 0), lp(1, 1), lp(-1, 0), lp(-1, 0), lp(-1, -1)] },
            AuxVector { index: 12, terms: [(1, 4), (1, 5), (-1, 7)], row: [lp(1, 1), lp(-1, 0), lp(1, 0), lp(-1, -1), lp(-1, 0)] },
            AuxVector { index: 13, terms: [(-1, 1), (1, 2), (1, 8)], row: [lp(1, -1), lp(1, 1), lp(-1, 1), lp(1, 1), lp(-1, -2)] },
            AuxVector { index: 14, terms: [(1, 1), (1, 7), (-1, 8)], row: [lp(1, 0), lp(1, 0), lp(1, 1), lp(1, 1), lp(1, 0)] },
            AuxVector { index: 15, terms: [(-1, 1), (1, 8), (1, 9)], row: [lp(1, 0), lp(-1, 1), lp(-1, 0), lp(1, 1), lp(-1, -2)] },
            AuxVector { index: 16, terms: [(-1, 6), (1, 8), (1, 9)], row: [lp(1, 1), lp(-1, 1), lp(-1, -1), lp(-1, 0), lp(-1, -1)] },
        ],
        combos: [
            Combo { coeffs: [[0, 0, 0, 2, 2, -1], [0, 0, 0, -2, 0, 0], [0, 0, 0, 0, -2, 0], [0, 0, 4, 2, 4, -2], [0, 0, 4, 2, 2, -1]], target: [0, 8, 8, 14, 0, -3] },
            Combo { coeffs: [[0, 0, 0, 4, 6, 1], [0, 0, 0, -4, -2, -1], [0, 0, 0, 0, -4, -2], [0, 0, 8, 8, 12, 2], [0, 0, 8, 8, 8, 2]], target: [0, 16, 24, 40, 20, 3] },
            Combo { coeffs: [[0, 0, 0, 4, 7, 2], [0, 0, 0, -4, -3, -1], [0, 0, 0, 0, -4, -3], [0, 0, 8, 10, 13, 4], [0, 0, 8, 10, 9, 3]], target: [0, 16, 28, 44, 27, 5] },
            Combo { coeffs: [[0, 0, 0, 6, 9, 1], [0, 0, 0, -6, -3, -1], [0, 0, 0, 0, -6, -3], [0, 0, 12, 12, 17, 3], [0, 0, 12, 12, 11, 3]], target: [0, 24, 36, 58, 29, 3] },
        ],
        det_poly: [16, 32, 52, 40, 14, 2],
        anchors: &[
            Anchor { k: 8, order: 8288, gens: &[1, 987, 2367, 2534, 3528] },
        ],
    },
    TheoremConstruction {
        id: 9,
        class_label: "4",
        set_index: 1,
        residue: 4,
        modulus: 5,
        a_num: 2,
        a_off: 2,
        a_den: 5,
        proof_threshold: 9,
        norm: lp(5, -1),
        cap: lp(1, 2),
        cap_attained: Some(&[13]),
        rows: [
            [lp(1, -1), lp(1, 0), lp(-1, 0), lp(1, 0), lp(1, 0)],
            [lp(1, 0), lp(1, -1), lp(-1, 0), lp(1, 0), lp(-1, 0)],
            [lp(1, 0), lp(1, 0), lp(1, 0), lp(1, -1), lp(1, 0)],
            [lp(-1, 1), lp(-1, 0), lp(1, 1), lp(1, -1), lp(1, 0)],
            [lp(-1, -1), lp(1, -1), lp(-1, 1), lp(1, 1), lp(1, -1)],
        ],
        aux: [
            AuxVector { index: 6, terms: [(-1, 1), (1, 2), (1, 3)], row: [lp(1, 1), lp(1, -1), lp(1, 0), lp(1, -1), lp(-1, 0)] },
            AuxVector { index: 7, terms: [(1, 1), (-1, 2), (-1, 4)], row: [lp(1, -2), lp(1, 1), lp(-1, -1), lp(-1, 1), lp(1, 0)] },
            AuxVector { index: 8, terms: [(1, 1), (-1, 2), (-1, 5)], row: [lp(1, 0), lp(-1, 2), lp(1, -1), lp(-1, -1), lp(1, 1)] },
            AuxVector { index: 9, terms: [(1, 1), (-1, 3), (1, 4)], row: [lp(-1, 0), lp(-1, 0), lp(-1, 1), lp(1, 0), lp(1, 0)] },
            AuxVector { index: 10, terms: [(1, 1), (-1, 3), (-1, 5)], row: [lp(1, 0), lp(-1, 1), lp(-1, -1), lp(-1, 0), lp(-1, 1)] },
            AuxVector { index: 11, terms: [(1, 1), (1, 4), (-1, 5)], row: [lp(1, 1), lp(-1, 1), lp(1, 0), lp(1, -2), lp(1, 1)] },
            AuxVector { index: 12, terms: [(-1, 2), (1, 3), (-1, 4)], row: [lp(1, -1), lp(1, 1), lp(1, -1), lp(-1, 0), lp(1, 0)] },
            AuxVector { index: 13, terms: [(1, 2), (1, 4), (-1, 5)], row: [lp(1, 2), lp(-1, 0), lp(1, 0), lp(1, -2), lp(-1, 1)] },
            AuxVector { index: 14, terms: [(1, 2), (-1, 5), (1, 9)], row: [lp(1, 1), lp(-1, 0), lp(-1, 0), lp(1, -1), lp(-1, 1)] },
            AuxVector { index: 15, terms: [(1, 1), (-1, 5), (1, 9)], row: [lp(1, 0), lp(-1, 1), lp(-1, 0), lp(1, -1), lp(1, 1)] },
            AuxVector { index: 16, terms: [(1, 1), (-1, 3), (1, 8)], row: [lp(1, -1), lp(-1, 2), lp(-1, -1), lp(-1, 0), lp(1, 1)] },
        ],
        combos: [
            Combo { coeffs: [[0, 0, 0, 2, -2, 1], [0, 0, 0, 0, 2, 1], [0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 2, 0], [0, 0, 0, -2, 0, 0]], target: [0, 0, 4, -2, 6, -1] },
            Combo { coeffs: [[0, 0, 4, -4, 2, 0], [0, 0, 0, 4, 2, 0], [0, 0, 0, 0, 0, 1], [0, 0, 0, 4, 0, -1], [0, 0, -4, 0, 0, 0]], target: [0, 8, -4, 12, 0, -1] },
            Combo { coeffs: [[0, 0, 4, -6, 5, -2], [0, 0, 0, 4, 0, 0], [0, 0, 0, 0, 0, 1], [0, 0, 0, 4, -2, 0], [0, 0, -4, 2, -1, 0]], target: [0, 8, -8, 16, -7, 2] },
            Combo { coeffs: [[0, 0, 8, -12, 9, -4], [0, 0, 0, 8, 0, -1], [0, 0, 0, 0, 0, 2], [0, 0, 0, 8, -4, -1], [0, 0, -8, 4, -1, 1]], target: [0, 16, -16, 30, -15, 2] },
        ],
        det_poly: [16, -16, 32, -16, 5, -1],
        anchors: &[
            Anchor { k: 4, order: 457, gens: &[1, 20, 130, 147, 191] },
        ],
    },
];
