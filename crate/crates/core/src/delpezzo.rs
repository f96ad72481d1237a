//! The five anticanonical non-split toric codes C3, C4, C6, C8, C9.
//!
//! Each is the cyclic code over GF(q) of length equal to the number of rational
//! points of its torus, with parity-check polynomial (x - 1)·m_α times
//! m_{α^{q+1}} (C8, C9) and m_{α^{q+2}} (C9).

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cyclic::{bch_build, BchParams, CodeError, CyclicCode, RootsOfUnity};
use crate::distance::{min_distance_exhaustive, DistanceError, SearchOptions};
use crate::elliptic::nq1;
use crate::finite_field::{field_of_order, prime_power};
use crate::polynomial::Polynomial;
use crate::tables::reference_tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FamilyId {
    C3,
    C4,
    C6,
    C8,
    C9,
}

impl FamilyId {
    pub const ALL: [FamilyId; 5] = [FamilyId::C3, FamilyId::C4, FamilyId::C6, FamilyId::C8, FamilyId::C9];

    /// Smallest q for which the reference parameters hold.
    pub fn min_q(self) -> u64 {
        match self {
            FamilyId::C3 | FamilyId::C4 | FamilyId::C8 => 3,
            FamilyId::C6 | FamilyId::C9 => 5,
        }
    }

    pub fn dimension(self) -> usize {
        match self {
            FamilyId::C3 => 4,
            FamilyId::C4 => 5,
            FamilyId::C6 => 7,
            FamilyId::C8 => 9,
            FamilyId::C9 => 10,
        }
    }

    /// Exponents i whose minimal polynomials m_{α^i} multiply into h(x).
    fn nonzero_representatives(self, q: u64) -> Vec<i64> {
        let q = q as i64;
        match self {
            FamilyId::C3 | FamilyId::C4 | FamilyId::C6 => vec![0, 1],
            FamilyId::C8 => vec![0, 1, q + 1],
            FamilyId::C9 => vec![0, 1, q + 1, q + 2],
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown code family {0:?}; expected one of C3, C4, C6, C8, C9")]
    UnknownFamily(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{family} is only verified for q >= {min_q}, got q = {q} (use --force to build it anyway)")]
    Inadmissible { family: FamilyId, q: u64, min_q: u64 },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Distance(#[from] DistanceError),
}

fn check_prime_power(q: u64) -> Result<(), FamilyError> {
    prime_power(q).map(|_| ()).ok_or(FamilyError::NotPrimePower(q))
}

pub fn is_admissible(family: FamilyId, q: u64) -> bool {
    prime_power(q).is_some() && q >= family.min_q()
}

/// Number of rational points of the family's torus; this is the code length.
pub fn torus_order(family: FamilyId, q: u64) -> u64 {
    match family {
        FamilyId::C3 | FamilyId::C9 => (q.pow(3) - 1) / (q - 1),
        FamilyId::C4 | FamilyId::C8 => q * q + 1,
        FamilyId::C6 => q * q - q + 1,
    }
}

/// Builds the family's code, refusing q below the verified range.
pub fn build_family(family: FamilyId, q: u64) -> Result<CyclicCode, FamilyError> {
    check_prime_power(q)?;
    if q < family.min_q() {
        return Err(FamilyError::Inadmissible { family, q, min_q: family.min_q() });
    }
    build_family_forced(family, q)
}

/// Builds the family's code for any prime power q; results below the verified
/// range carry no guarantees.
pub fn build_family_forced(family: FamilyId, q: u64) -> Result<CyclicCode, FamilyError> {
    check_prime_power(q)?;
    let base = field_of_order(q).map_err(CodeError::from)?;
    let n = torus_order(family, q) as usize;
    let roots = RootsOfUnity::new(&base, n)?;
    // Distinct cosets only: for small q two representatives can share a coset.
    let mut seen = Vec::new();
    let mut h = Polynomial::one(&base);
    for i in family.nonzero_representatives(q) {
        let coset = roots.coset(i);
        if seen.contains(&coset) {
            continue;
        }
        h = h.mul(&roots.minimal_polynomial(i)?);
        seen.push(coset);
    }
    Ok(CyclicCode::from_parity_check(&h, n)?)
}

/// The (d*, b) formulas for the family. Below the verified range the d*
/// formula can go negative; it is clamped to 1 (no designed distance).
pub fn expected_params(family: FamilyId, q: u64) -> BchParams {
    let q = q as i64;
    let (d_star, b) = match family {
        FamilyId::C3 => (q * q - q, q + 1),
        FamilyId::C4 => (q * q - 2 * q + 1, q + 1),
        FamilyId::C6 => (q * q - 3 * q + 1, q + 1),
        FamilyId::C8 => (q * q - 2 * q - 1, q + 2),
        FamilyId::C9 => (q * q - 2 * q - 2, q + 3),
    };
    BchParams { d_star: d_star.max(1) as usize, b: b as usize }
}

fn bch_generator_matches(code: &CyclicCode, params: BchParams) -> Result<Option<CyclicCode>, FamilyError> {
    if params.d_star < 2 {
        return Ok(None);
    }
    let bch = bch_build(code.q() as u64, code.n(), params.d_star, params.b as i64)?;
    Ok((code.generator() == bch.generator()).then_some(bch))
}

pub fn expected_lcd(family: FamilyId) -> bool {
    reference_tables().family(family).lcd
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BchIdentity {
    pub holds: bool,
    pub params: BchParams,
    pub family_zero_set: Vec<usize>,
    pub bch_zero_set: Vec<usize>,
}

/// Compares the family's generator polynomial with that of BCH_q(n, d*, b).
pub fn verify_bch_identity(family: FamilyId, q: u64) -> Result<BchIdentity, FamilyError> {
    let code = build_family_forced(family, q)?;
    let params = expected_params(family, q);
    let bch_zero_set = if params.d_star >= 2 {
        bch_build(q, code.n(), params.d_star, params.b as i64)?.zero_set().to_vec()
    } else {
        Vec::new()
    };
    Ok(BchIdentity {
        holds: bch_generator_matches(&code, params)?.is_some(),
        params,
        family_zero_set: code.zero_set().to_vec(),
        bch_zero_set,
    })
}

/// Lower bound on d from the elliptic-curve point counts; exact for C6, C8, C9.
pub fn distance_lower_bound(family: FamilyId, q: u64) -> Result<usize, FamilyError> {
    let n = torus_order(family, q) as i64;
    let big_n = nq1(q).map_err(|_| FamilyError::NotPrimePower(q))? as i64;
    let q = q as i64;
    let d = match family {
        FamilyId::C3 => n - 3 * (big_n / 3),
        FamilyId::C4 => n - 2 * (big_n / 2),
        FamilyId::C6 => n - big_n,
        FamilyId::C8 => n - 2 * (q + 1),
        FamilyId::C9 => n - (3 * q + 1),
    };
    Ok(d.max(0) as usize)
}

/// δ = n - Σ_{i<k} ⌈d / q^i⌉.
pub fn griesmer_defect(n: usize, k: usize, d: usize, q: u64) -> i64 {
    let mut sum: u64 = 0;
    let mut power: u64 = 1;
    for _ in 0..k {
        sum += (d as u64).div_ceil(power);
        power = power.saturating_mul(q);
    }
    n as i64 - sum as i64
}

/// The reference δ: an upper bound for C3, C4 and exact for the others.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Expected {
    Exact(i64),
    AtMost(i64),
    AtLeast(i64),
}

impl Expected {
    pub fn admits(self, value: i64) -> bool {
        match self {
            Expected::Exact(v) => value == v,
            Expected::AtMost(v) => value <= v,
            Expected::AtLeast(v) => value >= v,
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Exact(v) => write!(f, "{v}"),
            Expected::AtMost(v) => write!(f, "<={v}"),
            Expected::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

pub fn delta_formula(family: FamilyId, q: u64) -> Result<Expected, FamilyError> {
    let big_n = nq1(q).map_err(|_| FamilyError::NotPrimePower(q))? as i64;
    let q = q as i64;
    Ok(match family {
        FamilyId::C3 => Expected::AtMost(3 * (big_n / 3) - q - 2),
        FamilyId::C4 => Expected::AtMost(2 * (big_n / 2) - q - 2),
        FamilyId::C6 => Expected::Exact(big_n - q - 3),
        FamilyId::C8 => Expected::Exact(q - 3),
        FamilyId::C9 => Expected::Exact(2 * q - 5),
    })
}

/// The reference d - d* values.
pub fn d_minus_dstar_formula(family: FamilyId, q: u64) -> Result<Expected, FamilyError> {
    let big_n = nq1(q).map_err(|_| FamilyError::NotPrimePower(q))? as i64;
    let q = q as i64;
    Ok(match family {
        FamilyId::C3 => Expected::AtLeast(2 * q + 1 - 3 * (big_n / 3)),
        FamilyId::C4 => Expected::AtLeast(2 * q - 2 * (big_n / 2)),
        FamilyId::C6 => Expected::Exact(2 * q - big_n),
        FamilyId::C8 => Expected::Exact(0),
        FamilyId::C9 => Expected::Exact(2),
    })
}

/// One row of the family parameter tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub family: FamilyId,
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub d_star: usize,
    pub b: usize,
    pub d_lower: usize,
    pub d_exact: Option<usize>,
    pub delta: Option<i64>,
    pub lcd: bool,
    pub bch_identity: bool,
    pub conjecture_consistent: Option<bool>,
    pub d_minus_dstar_bound: i64,
    /// False for codes built outside the verified range of q.
    pub verified: bool,
}

#[derive(Clone, Debug, Default)]
pub struct ReportOptions {
    /// Build outside the verified range instead of failing.
    pub force: bool,
    /// Run the exhaustive distance search with these options.
    pub distance: Option<SearchOptions>,
}

pub fn code_report(family: FamilyId, q: u64, options: &ReportOptions) -> Result<CodeReport, FamilyError> {
    let verified = is_admissible(family, q);
    let code = if options.force { build_family_forced(family, q)? } else { build_family(family, q)? };
    let params = code.designed_params();
    let d_lower = distance_lower_bound(family, q)?;
    let d_exact = match &options.distance {
        Some(opts) => {
            let r = min_distance_exhaustive(&code, opts)?;
            r.exact.then_some(r.d)
        }
        None => None,
    };
    let expected = expected_params(family, q);
    Ok(CodeReport {
        family,
        q,
        n: code.n(),
        k: code.k(),
        d_star: params.d_star,
        b: params.b,
        d_lower,
        d_exact,
        delta: d_exact.map(|d| griesmer_defect(code.n(), code.k(), d, q)),
        lcd: code.is_lcd()?,
        bch_identity: bch_generator_matches(&code, expected)?.is_some(),
        conjecture_consistent: d_exact.map(|d| d == d_lower),
        d_minus_dstar_bound: d_lower as i64 - expected.d_star as i64,
        verified,
    })
}

/// Reports for many (family, q) pairs, computed in parallel, returned sorted by (family, q).
pub fn code_reports(pairs: &[(FamilyId, u64)], options: &ReportOptions) -> Result<Vec<CodeReport>, FamilyError> {
    let mut sorted = pairs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.par_iter().map(|&(f, q)| code_report(f, q, options)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_lengths_and_dimensions() {
        let c3 = build_family(FamilyId::C3, 3).unwrap();
        assert_eq!((c3.n(), c3.k()), (13, 4));
        let c4 = build_family(FamilyId::C4, 5).unwrap();
        assert_eq!((c4.n(), c4.k()), (26, 5));
        let c8 = build_family(FamilyId::C8, 3).unwrap();
        assert_eq!((c8.n(), c8.k()), (10, 9));
    }

    #[test]
    fn torus_orders() {
        assert_eq!(torus_order(FamilyId::C3, 3), 13);
        assert_eq!(torus_order(FamilyId::C4, 3), 10);
        assert_eq!(torus_order(FamilyId::C6, 5), 21);
        assert_eq!(5u64.pow(6) % 21, 1);
    }

    #[test]
    fn inadmissible_q_needs_force() {
        assert!(matches!(build_family(FamilyId::C6, 4), Err(FamilyError::Inadmissible { .. })));
        assert!(matches!(build_family(FamilyId::C3, 6), Err(FamilyError::NotPrimePower(6))));
        let forced = code_report(FamilyId::C6, 4, &ReportOptions { force: true, distance: None }).unwrap();
        assert!(!forced.verified);
        assert_eq!(forced.n, 13);
    }

    #[test]
    fn parameter_formulas() {
        assert_eq!(expected_params(FamilyId::C3, 3), BchParams { d_star: 6, b: 4 });
        assert_eq!(expected_params(FamilyId::C8, 5), BchParams { d_star: 14, b: 7 });
        assert_eq!(expected_params(FamilyId::C9, 5), BchParams { d_star: 13, b: 8 });
    }

    #[test]
    fn bch_identities() {
        for (f, q) in [(FamilyId::C3, 3), (FamilyId::C8, 3), (FamilyId::C9, 5)] {
            let id = verify_bch_identity(f, q).unwrap();
            assert!(id.holds, "{f} at q = {q}: {id:?}");
        }
        let c9 = build_family(FamilyId::C9, 5).unwrap();
        assert_eq!(c9.maximal_runs(), vec![(8, 12)]);
    }

    #[test]
    fn distance_bounds() {
        assert_eq!(distance_lower_bound(FamilyId::C3, 5).unwrap(), 22);
        assert_eq!(distance_lower_bound(FamilyId::C4, 4).unwrap(), 9);
        assert_eq!(distance_lower_bound(FamilyId::C8, 3).unwrap(), 2);
    }

    #[test]
    fn griesmer_examples() {
        assert_eq!(griesmer_defect(9, 1, 9, 4), 0);
        assert_eq!(griesmer_defect(13, 4, 7, 3), 1);
        assert_eq!(griesmer_defect(26, 9, 14, 5), 2);
        assert_eq!(delta_formula(FamilyId::C8, 5).unwrap(), Expected::Exact(2));
    }

    #[test]
    fn family_names_parse() {
        assert_eq!("c4".parse::<FamilyId>().unwrap(), FamilyId::C4);
        assert!("C7".parse::<FamilyId>().is_err());
    }
}
