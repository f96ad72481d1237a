//! Reference values for the five toric code families and the
//! optimal elliptic curves over small fields.

use crate::delpezzo::FamilyId;

/// An optimal elliptic curve over GF(q) with its reference invariants.
#[derive(Clone, Copy, Debug)]
pub struct CurveRow {
    pub q: u64,
    pub nq1: u64,
    pub equation: &'static str,
    /// Long Weierstrass coefficients (a1, a2, a3, a4, a6), reduced into the prime field.
    pub coeffs: [i64; 5],
    /// As an integer; compare via its residue mod p.
    pub j: i64,
    pub supersingular: bool,
}

pub const OPTIMAL_CURVES: [CurveRow; 7] = [
    CurveRow { q: 2, nq1: 5, equation: "y^2+y=x^3+x", coeffs: [0, 0, 1, 1, 0], j: 0, supersingular: true },
    CurveRow { q: 3, nq1: 7, equation: "y^2=x^3+2x+1", coeffs: [0, 0, 0, 2, 1], j: 0, supersingular: true },
    CurveRow { q: 4, nq1: 9, equation: "y^2+y=x^3", coeffs: [0, 0, 1, 0, 0], j: 0, supersingular: true },
    CurveRow { q: 5, nq1: 10, equation: "y^2=x^3+3x", coeffs: [0, 0, 0, 3, 0], j: 1728, supersingular: false },
    CurveRow { q: 7, nq1: 13, equation: "y^2=x^3+3", coeffs: [0, 0, 0, 0, 3], j: 0, supersingular: false },
    CurveRow { q: 8, nq1: 14, equation: "y^2+xy+y=x^3+1", coeffs: [1, 0, 1, 0, 1], j: 1, supersingular: false },
    CurveRow { q: 9, nq1: 16, equation: "y^2=x^3+x", coeffs: [0, 0, 0, 1, 0], j: 0, supersingular: true },
];

/// Symbolic description of one family.
#[derive(Clone, Copy, Debug)]
pub struct FamilyRow {
    pub family: FamilyId,
    pub n: &'static str,
    pub k: usize,
    pub d: &'static str,
    pub restriction: &'static str,
    pub delta: &'static str,
    pub h: &'static str,
    pub d_star: &'static str,
    pub b: &'static str,
    pub d_minus_d_star: &'static str,
    pub lcd: bool,
}

pub const FAMILIES: [FamilyRow; 5] = [
    FamilyRow {
        family: FamilyId::C3,
        n: "q^2 + q + 1",
        k: 4,
        d: ">= n - 3*floor(N/3)",
        restriction: "3 <= q",
        delta: "<= 3*floor(N/3) - q - 2",
        h: "(x-1)*m_a",
        d_star: "q^2 - q",
        b: "q + 1",
        d_minus_d_star: ">= 2q + 1 - 3*floor(N/3)",
        lcd: false,
    },
    FamilyRow {
        family: FamilyId::C4,
        n: "q^2 + 1",
        k: 5,
        d: ">= n - 2*floor(N/2)",
        restriction: "3 <= q",
        delta: "<= 2*floor(N/2) - q - 2",
        h: "(x-1)*m_a",
        d_star: "q^2 - 2q + 1",
        b: "q + 1",
        d_minus_d_star: ">= 2q - 2*floor(N/2)",
        lcd: true,
    },
    FamilyRow {
        family: FamilyId::C6,
        n: "q^2 - q + 1",
        k: 7,
        d: "n - N",
        restriction: "5 <= q",
        delta: "N - q - 3",
        h: "(x-1)*m_a",
        d_star: "q^2 - 3q + 1",
        b: "q + 1",
        d_minus_d_star: "2q - N",
        lcd: true,
    },
    FamilyRow {
        family: FamilyId::C8,
        n: "q^2 + 1",
        k: 9,
        d: "n - 2(q + 1)",
        restriction: "3 <= q",
        delta: "q - 3",
        h: "(x-1)*m_a*m_a^(q+1)",
        d_star: "q^2 - 2q - 1",
        b: "q + 2",
        d_minus_d_star: "0",
        lcd: true,
    },
    FamilyRow {
        family: FamilyId::C9,
        n: "q^2 + q + 1",
        k: 10,
        d: "n - (3q + 1)",
        restriction: "5 <= q",
        delta: "2q - 5",
        h: "(x-1)*m_a*m_a^(q+1)*m_a^(q+2)",
        d_star: "q^2 - 2q - 2",
        b: "q + 3",
        d_minus_d_star: "2",
        lcd: false,
    },
];

/// One row of the small-q tables for C3 and C4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SmallQRow {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// Best known lower bound on d for these n, k, q.
    pub lb: usize,
}

const fn row(q: u64, n: usize, k: usize, d: usize, lb: usize) -> SmallQRow {
    SmallQRow { q, n, k, d, lb }
}

pub const C3_SMALL_Q: [SmallQRow; 6] = [
    row(3, 13, 4, 7, 7),
    row(4, 21, 4, 12, 14),
    row(5, 31, 4, 22, 23),
    row(7, 57, 4, 45, 47),
    row(8, 73, 4, 61, 62),
    row(9, 91, 4, 76, 79),
];

pub const C4_SMALL_Q: [SmallQRow; 6] = [
    row(3, 10, 5, 4, 5),
    row(4, 17, 5, 9, 10),
    row(5, 26, 5, 16, 17),
    row(7, 50, 5, 38, 38),
    row(8, 65, 5, 51, 52),
    row(9, 82, 5, 66, 67),
];

/// All embedded reference data.
#[derive(Clone, Copy, Debug)]
pub struct ReferenceTables {
    pub curves: &'static [CurveRow],
    pub families: &'static [FamilyRow],
    pub c3: &'static [SmallQRow],
    pub c4: &'static [SmallQRow],
}

pub fn reference_tables() -> ReferenceTables {
    ReferenceTables { curves: &OPTIMAL_CURVES, families: &FAMILIES, c3: &C3_SMALL_Q, c4: &C4_SMALL_Q }
}

impl ReferenceTables {
    pub fn curve(&self, q: u64) -> Option<&'static CurveRow> {
        self.curves.iter().find(|r| r.q == q)
    }

    pub fn nq1(&self, q: u64) -> Option<u64> {
        self.curve(q).map(|r| r.nq1)
    }

    pub fn family(&self, family: FamilyId) -> &'static FamilyRow {
        self.families.iter().find(|r| r.family == family).expect("every family has a row")
    }

    pub fn small_q(&self, family: FamilyId, q: u64) -> Option<&'static SmallQRow> {
        let rows = match family {
            FamilyId::C3 => self.c3,
            FamilyId::C4 => self.c4,
            _ => return None,
        };
        rows.iter().find(|r| r.q == q)
    }
}
