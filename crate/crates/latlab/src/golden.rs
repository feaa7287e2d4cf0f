//! Reference data transcribed from the printed tables, values only.

/// One printed row: determinant, perfection default and number of minimal pairs.
#[derive(Clone, Copy, Debug)]
pub struct PerfectionRow {
    pub label: &'static str,
    pub spec: &'static str,
    pub det: u64,
    pub pd: usize,
    pub mp: usize,
}

const fn row(label: &'static str, spec: &'static str, det: u64, pd: usize, mp: usize) -> PerfectionRow {
    PerfectionRow { label, spec, det, pd, mp }
}

/// `L_7(i)`, one excluded weight.
pub const L7_SINGLE: &[PerfectionRow] = &[
    row("L7(2)", "Ld:7:excl=2", 4 * 5 * 31, 1, 31),      // 2^2*5*31
    row("L7(3)", "Ld:7:excl=3", 8 * 5 * 17, 1, 29),      // 2^3*5*17
    row("L7(4)", "Ld:7:excl=4", 16 * 9 * 5, 0, 28),      // 2^4*3^2*5
    row("L7(5)", "Ld:7:excl=5", 4 * 5 * 37, 4, 28),      // 2^2*5*37
];

/// `L_8(i)`, one excluded weight.
pub const L8_SINGLE: &[PerfectionRow] = &[
    row("L8(2)", "Ld:8:excl=2", 4 * 3 * 7 * 11, 0, 46),  // 2^2*3*7*11
    row("L8(3)", "Ld:8:excl=3", 7 * 11 * 13, 0, 44),     // 7*11*13
    row("L8(4)", "Ld:8:excl=4", 32 * 3 * 11, 0, 42),     // 2^5*3*11
    row("L8(5)", "Ld:8:excl=5", 9 * 121, 0, 42),         // 3^2*11^2
    row("L8(6)", "Ld:8:excl=6", 4 * 25 * 11, 3, 42),     // 2^2*5^2*11
];

/// The perfect `L_8(a_1, a_2)`.
pub const L8_DOUBLE: &[PerfectionRow] = &[
    row("L8(2,3)", "Ld:8:excl=2,3", 3 * 347, 0, 43),     // 3*347
    row("L8(2,5)", "Ld:8:excl=2,5", 7 * 167, 0, 40),     // 7*167
    row("L8(2,6)", "Ld:8:excl=2,6", 16 * 3 * 25, 0, 39), // 2^4*3*5^2
    row("L8(2,9)", "Ld:8:excl=2,9", 27 * 43, 0, 40),     // 3^3*43
    row("L8(2,10)", "Ld:8:excl=2,10", 16 * 3 * 23, 0, 41), // 2^4*3*23
    row("L8(3,5)", "Ld:8:excl=3,5", 4 * 9 * 5 * 7, 0, 37), // 2^2*3^2*5*7
];

/// `O_8(i)` for odd `i`.
pub const O8: &[PerfectionRow] = &[
    row("O8(1)", "Od:8:excl=1", 3 * 443, 4, 38),         // 3*443
    row("O8(3)", "Od:8:excl=3", 1321, 3, 37),            // 1321
    row("O8(5)", "Od:8:excl=5", 9 * 5 * 29, 1, 37),      // 3^2*5*29
    row("O8(7)", "Od:8:excl=7", 3 * 7 * 61, 0, 38),      // 3*7*61
    row("O8(9)", "Od:8:excl=9", 1249, 2, 38),            // 1249
    row("O8(11)", "Od:8:excl=11", 3 * 13 * 31, 1, 39),   // 3*13*31
    row("O8(13)", "Od:8:excl=13", 27 * 43, 0, 40),       // 3^3*43
    row("O8(15)", "Od:8:excl=15", 5 * 13 * 17, 1, 41),   // 5*13*17
    row("O8(17)", "Od:8:excl=17", 3 * 347, 0, 43),       // 3*347
];

/// `O_9(i)` for odd `i`.
pub const O9: &[PerfectionRow] = &[
    row("O9(1)", "Od:9:excl=1", 2 * 3 * 5 * 59, 2, 59),  // 2*3*5*59
    row("O9(3)", "Od:9:excl=3", 2 * 881, 0, 56),         // 2*881
    row("O9(5)", "Od:9:excl=5", 2 * 9 * 97, 0, 56),      // 2*3^2*97
    row("O9(7)", "Od:9:excl=7", 2 * 3 * 7 * 41, 0, 56),  // 2*3*7*41
    row("O9(9)", "Od:9:excl=9", 2 * 5 * 169, 0, 57),     // 2*5*13^2
    row("O9(11)", "Od:9:excl=11", 2 * 3 * 25 * 11, 0, 58), // 2*3*5^2*11
    row("O9(13)", "Od:9:excl=13", 2 * 9 * 89, 0, 59),    // 2*3^2*89
    row("O9(15)", "Od:9:excl=15", 2 * 773, 0, 60),       // 2*773
    row("O9(17)", "Od:9:excl=17", 2 * 3 * 13 * 19, 0, 62), // 2*3*13*19
    row("O9(19)", "Od:9:excl=19", 2 * 3 * 5 * 47, 0, 64), // 2*3*5*47
];

/// `O_10(1)`, quoted in the text after the tables.
pub const O10_1: PerfectionRow = row("O10(1)", "Od:10:excl=1", 121 * 19, 0, 81); // 11^2*19

/// `M_8(i)`.
pub const M8: &[PerfectionRow] = &[
    row("M8(0)", "Md:8:excl=0", 4 * 3 * 5 * 19, 1, 41),  // 2^2*3*5*19
    row("M8(1)", "Md:8:excl=1", 16 * 71, 1, 42),         // 2^4*71
    row("M8(2)", "Md:8:excl=2", 4 * 281, 1, 42),         // 2^2*281
    row("M8(3)", "Md:8:excl=3", 16 * 3 * 23, 0, 42),     // 2^4*3*23
    row("M8(4)", "Md:8:excl=4", 4 * 269, 3, 44),         // 2^2*269
    row("M8(5)", "Md:8:excl=5", 16 * 5 * 13, 2, 44),     // 2^4*5*13
    row("M8(6)", "Md:8:excl=6", 4 * 3 * 83, 0, 45),      // 2^2*3*83
    row("M8(7)", "Md:8:excl=7", 16 * 59, 0, 47),         // 2^4*59
    row("M8(8)", "Md:8:excl=8", 4 * 13 * 17, 1, 49),     // 2^2*13*17
];

/// `M_9(i)`.
pub const M9: &[PerfectionRow] = &[
    row("M9(0)", "Md:9:excl=0", 4 * 5 * 7 * 11, 0, 61),  // 2^2*5*7*11
    row("M9(1)", "Md:9:excl=1", 512 * 3, 0, 61),         // 2^9*3
    row("M9(2)", "Md:9:excl=2", 4 * 3 * 127, 0, 62),     // 2^2*3*127
    row("M9(3)", "Md:9:excl=3", 32 * 47, 0, 61),         // 2^5*47
    row("M9(4)", "Md:9:excl=4", 4 * 9 * 41, 0, 64),      // 2^2*3^2*41
    row("M9(5)", "Md:9:excl=5", 32 * 9 * 5, 1, 64),      // 2^5*3^2*5
    row("M9(6)", "Md:9:excl=6", 4 * 349, 0, 65),         // 2^2*349
    row("M9(7)", "Md:9:excl=7", 64 * 3 * 7, 0, 66),      // 2^6*3*7
    row("M9(8)", "Md:9:excl=8", 4 * 3 * 107, 0, 69),     // 2^2*3*107
    row("M9(9)", "Md:9:excl=9", 64 * 19, 0, 70),         // 2^6*19
];

/// `D(a_1)` for `a_1 = 1..9`; the last entry stands for every `a_1 >= 10`.
pub const D_SCAN_K1: [usize; 10] = [7, 8, 8, 7, 8, 9, 7, 8, 8, 7];

/// `d_1 = max D(a_1)`.
pub const D1: usize = 9;

/// `c_q` of the `k = 3` count for primes with `(-2/q) = -1`, by `q mod 24`.
pub const CRAIG_K3_CONSTANTS: [(u64, i64); 4] = [(5, 455), (7, 511), (13, 583), (23, 383)];

/// Primes used for the Craig comparisons.
pub const CRAIG_PRIMES: [u64; 6] = [7, 11, 13, 17, 19, 23];

/// A printed basis and the Gram matrix printed next to it.
#[derive(Clone, Copy, Debug)]
pub struct GramGolden {
    pub name: &'static str,
    /// Lattice the basis rows belong to.
    pub spec: &'static str,
    /// The rows live on all coordinates but the first (the group identity).
    pub skip_identity: bool,
    pub basis: &'static [&'static [i64]],
    pub scale: i64,
    pub gram: &'static [&'static [i64]],
}

pub const GRAM_GOLDENS: &[GramGolden] = &[
    GramGolden {
        name: "P_7^7",
        spec: "Ld:7",
        skip_identity: false,
        basis: &[
            &[1, -1, 0, 0, 0, -1, 1, 0, 0],
            &[0, 0, 0, 1, -1, -1, 1, 0, 0],
            &[1, 0, -1, 0, -1, 0, 1, 0, 0],
            &[0, 1, -1, 0, 0, -1, 1, 0, 0],
            &[0, -1, 1, 0, 0, 0, 1, -1, 0],
            &[1, -1, -1, 1, 0, 0, 0, 0, 0],
            &[1, -1, 0, 0, 0, 0, 0, -1, 1],
        ],
        scale: 1,
        gram: &[
            &[4, 2, 2, 1, 2, 2, 2],
            &[2, 4, 2, 2, 1, 1, 0],
            &[2, 2, 4, 2, 0, 2, 1],
            &[1, 2, 2, 4, -1, 0, -1],
            &[2, 1, 0, -1, 4, 0, 2],
            &[2, 1, 2, 0, 0, 4, 2],
            &[2, 0, 1, -1, 2, 2, 4],
        ],
    },
    GramGolden {
        name: "P_7^31",
        spec: "Ld:7:excl=4",
        skip_identity: false,
        basis: &[
            &[0, 1, -1, 0, 0, 0, 0, -1, 1],
            &[0, 0, -1, 1, 0, 1, 0, -1, 0],
            &[0, 0, 0, 1, -1, 0, 0, -1, 1],
            &[0, 0, 0, 0, 0, 1, -1, -1, 1],
            &[1, -1, 0, 0, -1, 1, 0, 0, 0],
            &[1, 0, -1, 0, 0, 0, -1, 0, 1],
            &[1, -1, 0, 0, 0, 0, 0, -1, 1],
        ],
        scale: 1,
        gram: &[
            &[4, 2, 2, 2, -1, 2, 1],
            &[2, 4, 2, 2, 1, 1, 1],
            &[2, 2, 4, 2, 1, 1, 2],
            &[2, 2, 2, 4, 1, 2, 2],
            &[-1, 1, 1, 1, 4, 1, 2],
            &[2, 1, 1, 2, 1, 4, 2],
            &[1, 1, 2, 2, 2, 2, 4],
        ],
    },
    GramGolden {
        name: "P_6^5",
        spec: "LA:Z/7",
        skip_identity: false,
        basis: &[
            &[0, 1, -1, 0, 0, -1, 1],
            &[0, 1, 0, -1, -1, 0, 1],
            &[1, 1, 0, -1, 0, -1, 0],
            &[0, 1, -1, 0, -1, 1, 0],
            &[0, 1, -1, -1, 1, 0, 0],
            &[1, 0, -1, 0, -1, 0, 1],
        ],
        scale: 1,
        gram: &[
            &[4, 2, 2, 1, 2, 2],
            &[2, 4, 2, 2, 1, 2],
            &[2, 2, 4, 0, 2, 1],
            &[1, 2, 0, 4, 1, 2],
            &[2, 1, 2, 1, 4, 0],
            &[2, 2, 1, 2, 0, 4],
        ],
    },
    GramGolden {
        name: "P_7^5",
        spec: "LA:Z/8",
        skip_identity: false,
        basis: &[
            &[0, 0, 1, -1, 0, -1, 1, 0],
            &[0, -1, 1, 0, 0, 0, 1, -1],
            &[1, 0, 1, -1, 0, 0, 0, -1],
            &[0, -1, 1, 0, 1, -1, 0, 0],
            &[0, 0, -1, -1, 0, 0, 1, 1],
            &[-1, 0, 0, 1, 1, 0, 0, -1],
            &[1, 1, 0, 0, -1, -1, 0, 0],
        ],
        scale: 1,
        gram: &[
            &[4, 2, 2, 2, 1, -1, 1],
            &[2, 4, 2, 2, -1, 1, -1],
            &[2, 2, 4, 1, -1, -1, 1],
            &[2, 2, 1, 4, -1, 1, -1],
            &[1, -1, -1, -1, 4, -2, 0],
            &[-1, 1, -1, 1, -2, 4, -2],
            &[1, -1, 1, -1, 0, -2, 4],
        ],
    },
    GramGolden {
        name: "2 P_7^4 (D_7)",
        spec: "LA:Z/2+Z/2+Z/2",
        skip_identity: false,
        basis: &[
            &[0, 0, 1, -1, 1, -1, 0, 0],
            &[-1, 1, 0, 0, 1, -1, 0, 0],
            &[0, 1, 1, 0, 0, -1, -1, 0],
            &[0, 0, 1, -1, 0, 0, -1, 1],
            &[-1, 0, 1, 0, 1, 0, -1, 0],
            &[0, 1, 0, -1, 1, 0, -1, 0],
            &[0, 0, 0, 0, 1, -1, -1, 1],
        ],
        scale: 2,
        gram: &[
            &[2, 1, 1, 1, 1, 1, 1],
            &[1, 2, 1, 0, 1, 1, 1],
            &[1, 1, 2, 1, 1, 1, 1],
            &[1, 0, 1, 2, 1, 1, 1],
            &[1, 1, 1, 1, 2, 1, 1],
            &[1, 1, 1, 1, 1, 2, 1],
            &[1, 1, 1, 1, 1, 1, 2],
        ],
    },
    GramGolden {
        name: "2 P_6^7 (A_6)",
        spec: "LAsub:Z/2+Z/2+Z/2:drop=000",
        skip_identity: false,
        basis: &[
            &[0, 0, 0, 1, 1, -1, -1],
            &[0, 1, 1, 0, 0, -1, -1],
            &[-1, 0, 1, 1, 0, -1, 0],
            &[-1, 1, 0, 0, 1, -1, 0],
            &[-1, 1, 0, 1, 0, 0, -1],
            &[-1, 0, 1, 0, 1, 0, -1],
        ],
        scale: 2,
        gram: &[
            &[2, 1, 1, 1, 1, 1],
            &[1, 2, 1, 1, 1, 1],
            &[1, 1, 2, 1, 1, 1],
            &[1, 1, 1, 2, 1, 1],
            &[1, 1, 1, 1, 2, 1],
            &[1, 1, 1, 1, 1, 2],
        ],
    },
    GramGolden {
        name: "P_7^28",
        spec: "LAsub:Z/9:drop=0",
        skip_identity: false,
        basis: &[
            &[1, 0, 1, 0, -1, 0, 0, -1],
            &[0, -1, 1, 1, -1, 0, 0, 0],
            &[0, -1, 1, 0, 0, 0, 1, -1],
            &[1, 0, 0, 1, 0, -1, 0, -1],
            &[1, -1, 0, 0, 0, -1, 1, 0],
            &[0, 1, 1, 0, 0, -1, 0, -1],
            &[0, 0, 0, 1, -1, -1, 1, 0],
        ],
        scale: 1,
        gram: &[
            &[4, 2, 2, 2, 1, 2, 1],
            &[2, 4, 2, 1, 1, 0, 2],
            &[2, 2, 4, 1, 2, 1, 1],
            &[2, 1, 1, 4, 2, 2, 2],
            &[1, 1, 2, 2, 4, 0, 2],
            &[2, 0, 1, 2, 0, 4, 1],
            &[1, 2, 1, 2, 2, 1, 4],
        ],
    },
    GramGolden {
        name: "P_7^27",
        spec: "LAsub:Z/3+Z/3:drop=00",
        skip_identity: false,
        basis: &[
            &[1, -1, 1, 0, -1, 0, 0, 0],
            &[1, 0, 1, 0, 0, -1, -1, 0],
            &[0, 0, 1, -1, 0, 0, -1, 1],
            &[1, 0, 0, -1, -1, 0, 0, 1],
            &[1, -1, 0, 0, 0, 0, -1, 1],
            &[0, 0, 1, 0, -1, -1, 0, 1],
            &[0, 0, 0, -1, 1, -1, 0, 1],
        ],
        scale: 1,
        gram: &[
            &[4, 2, 1, 2, 2, 2, -1],
            &[2, 4, 2, 1, 2, 2, 1],
            &[1, 2, 4, 2, 2, 2, 2],
            &[2, 1, 2, 4, 2, 2, 1],
            &[2, 2, 2, 2, 4, 1, 1],
            &[2, 2, 2, 2, 1, 4, 1],
            &[-1, 1, 2, 1, 1, 1, 4],
        ],
    },
    GramGolden {
        name: "2 P_7^1 (E_7)",
        spec: "Mneg:Z/2+Z/2+Z/2",
        skip_identity: true,
        basis: &[
            &[0, 0, 0, 1, 1, 1, -1],
            &[0, 0, 0, 2, 0, 0, 0],
            &[1, 0, 1, 1, 0, 1, 0],
            &[0, 0, 0, 1, 1, -1, -1],
            &[0, 0, 0, 1, 1, 1, 1],
            &[0, 1, 1, 1, 1, 0, 0],
            &[0, -1, 1, 1, 1, 0, 0],
        ],
        scale: 2,
        gram: &[
            &[2, 1, 1, 1, 1, 1, 1],
            &[1, 2, 1, 1, 1, 1, 1],
            &[1, 1, 2, 0, 1, 1, 1],
            &[1, 1, 0, 2, 0, 1, 1],
            &[1, 1, 1, 0, 2, 1, 1],
            &[1, 1, 1, 1, 1, 2, 1],
            &[1, 1, 1, 1, 1, 1, 2],
        ],
    },
    GramGolden {
        name: "2 E_8",
        spec: "Mneg:Z/2+Z/2+Z/2",
        skip_identity: false,
        basis: &[
            &[2, 0, 0, 0, 0, 0, 0, 0],
            &[-1, -1, -1, -1, 0, 0, 0, 0],
            &[0, 2, 0, 0, 0, 0, 0, 0],
            &[0, -1, 1, 0, -1, 0, 0, -1],
            &[0, 0, 0, 0, 1, -1, 1, 1],
            &[0, 0, 0, 0, 0, 2, 0, 0],
            &[0, 0, 0, 0, -1, -1, -1, 1],
            &[0, 0, -1, 1, 0, 0, -1, -1],
        ],
        scale: 2,
        gram: &[
            &[2, -1, 0, 0, 0, 0, 0, 0],
            &[-1, 2, -1, 0, 0, 0, 0, 0],
            &[0, -1, 2, -1, 0, 0, 0, 0],
            &[0, 0, -1, 2, -1, 0, 0, 0],
            &[0, 0, 0, -1, 2, -1, 0, -1],
            &[0, 0, 0, 0, -1, 2, -1, 0],
            &[0, 0, 0, 0, 0, -1, 2, 0],
            &[0, 0, 0, 0, -1, 0, 0, 2],
        ],
    },
    GramGolden {
        name: "P_7^2 (E_7*)",
        spec: "T:3",
        skip_identity: false,
        basis: &[
            &[0, 0, 1, 0, 1, -1, 0],
            &[0, 1, 0, 0, 1, 0, -1],
            &[1, 0, 0, 0, 0, -1, 1],
            &[1, 0, 0, -1, 1, 0, 0],
            &[0, 0, 1, -1, 0, 0, 1],
            &[0, 0, 1, 1, 0, 0, -1],
            &[-1, 0, 0, 1, 1, 0, 0],
        ],
        scale: 1,
        gram: &[
            &[3, 1, 1, 1, 1, 1, 1],
            &[1, 3, -1, 1, -1, 1, 1],
            &[1, -1, 3, 1, 1, -1, -1],
            &[1, 1, 1, 3, 1, -1, -1],
            &[1, -1, 1, 1, 3, -1, -1],
            &[1, 1, -1, -1, -1, 3, 1],
            &[1, 1, -1, -1, -1, 1, 3],
        ],
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_sizes() {
        let sizes = [L7_SINGLE.len(), L8_SINGLE.len(), L8_DOUBLE.len(), O8.len(), O9.len(), M8.len(), M9.len()];
        assert_eq!(sizes, [4, 5, 6, 9, 10, 9, 10]);
    }

    #[test]
    fn grams_are_symmetric_and_square() {
        for g in GRAM_GOLDENS {
            let n = g.basis.len();
            assert_eq!(g.gram.len(), n, "{}", g.name);
            for i in 0..n {
                assert_eq!(g.gram[i].len(), n, "{}", g.name);
                for j in 0..n {
                    assert_eq!(g.gram[i][j], g.gram[j][i], "{}", g.name);
                }
            }
            assert!(g.basis.iter().all(|r| r.len() == g.basis[0].len()), "{}", g.name);
        }
    }
}
