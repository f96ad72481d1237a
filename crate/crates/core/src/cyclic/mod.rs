//! Cyclic and BCH codes over GF(q).
//!
//! Codeword coordinate `i` carries the coefficient of `x^i`, so a cyclic shift
//! is multiplication by `x` modulo `x^n - 1`. Zero sets are expressed as
//! exponents `i` of the canonical primitive n-th root of unity `α` living in
//! GF(q^e), `e = ord_n(q)`.

mod linear;

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::finite_field::{field_of_order, make_field, multiplicative_order, Embedding, Field, FieldError};
use crate::linalg;
use crate::polynomial::{cyclotomic_coset, minimal_polynomial_in, PolyError, Polynomial};

pub use linear::{nth_root_coordinates, p1_toric_code, LinearCode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("length {n} is not coprime to q = {q}")]
    NotCoprime { q: u64, n: usize },
    #[error("code length must be positive")]
    ZeroLength,
    #[error("polynomial does not divide x^{0} - 1")]
    NotDivisor(usize),
    #[error("designed distance must be at least 2, got {0}")]
    DesignedDistance(usize),
    #[error("message has length {got}, expected {expected}")]
    MessageLength { expected: usize, got: usize },
    #[error("puncturing needs a nonempty set of valid coordinates")]
    BadPuncture,
    #[error("evaluation code needs r + s < {limit}, got r = {r}, s = {s}")]
    Degenerate { r: usize, s: usize, limit: usize },
    #[error("GF({base}) is not a subfield of GF({ext})")]
    BaseMismatch { base: u32, ext: u32 },
    #[error("LCD criteria disagree: reciprocal test {reciprocal}, rank test {rank}")]
    LcdMismatch { reciprocal: bool, rank: bool },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// The n-th roots of unity of GF(q), as seen from the splitting field GF(q^e).
#[derive(Clone, Debug)]
pub struct RootsOfUnity {
    n: usize,
    e: u32,
    emb: Embedding,
    alpha: u32,
}

impl RootsOfUnity {
    pub fn new(base: &Field, n: usize) -> Result<Self, CodeError> {
        let q = base.size() as u64;
        if n == 0 {
            return Err(CodeError::ZeroLength);
        }
        let e = multiplicative_order(q, n as u64).ok_or(CodeError::NotCoprime { q, n })? as u32;
        let ext = make_field(base.characteristic(), base.degree() * e)?;
        let emb = Embedding::new(base, &ext)?;
        let alpha = ext.nth_root_of_unity(n as u64)?;
        Ok(RootsOfUnity { n, e, emb, alpha })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Degree of GF(q)(α) over GF(q).
    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn base(&self) -> &Field {
        self.emb.sub()
    }

    pub fn extension(&self) -> &Field {
        self.emb.sup()
    }

    pub fn embedding(&self) -> &Embedding {
        &self.emb
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn alpha_pow(&self, i: i64) -> u32 {
        self.extension().pow(self.alpha, i.rem_euclid(self.n as i64) as u64)
    }

    /// The GF(q)-minimal polynomial of α^i.
    pub fn minimal_polynomial(&self, i: i64) -> Result<Polynomial, CodeError> {
        Ok(minimal_polynomial_in(&self.emb, self.alpha_pow(i))?)
    }

    pub fn coset(&self, i: i64) -> Vec<usize> {
        let q = self.base().size() as u64;
        cyclotomic_coset(i.rem_euclid(self.n as i64) as u64, self.n as u64, q)
            .expect("gcd(q, n) = 1 checked on construction")
            .into_iter()
            .map(|j| j as usize)
            .collect()
    }

    /// Exponents i in [0, n) with f(α^i) = 0.
    pub fn root_exponents(&self, f: &Polynomial) -> Vec<usize> {
        (0..self.n).filter(|&i| f.eval_in(&self.emb, self.alpha_pow(i as i64)) == 0).collect()
    }
}

/// Designed distance and starting exponent of a BCH description.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BchParams {
    pub d_star: usize,
    pub b: usize,
}

#[derive(Clone, Debug)]
pub struct CyclicCode {
    roots: RootsOfUnity,
    g: Polynomial,
    h: Polynomial,
    zero_set: Vec<usize>,
}

impl PartialEq for CyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.g == other.g && self.n() == other.n()
    }
}

/// Serialized form of a cyclic code, elements as integer encodings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeJson {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub generator: Vec<u32>,
    pub parity_check: Vec<u32>,
    pub zero_set: Vec<usize>,
}

impl CyclicCode {
    fn assemble(roots: RootsOfUnity, g: Polynomial, h: Polynomial) -> Self {
        let zero_set = roots.root_exponents(&g);
        CyclicCode { roots, g, h, zero_set }
    }

    /// The cyclic code with parity-check polynomial `h`, i.e. generator (x^n - 1)/h.
    pub fn from_parity_check(h: &Polynomial, n: usize) -> Result<Self, CodeError> {
        let roots = RootsOfUnity::new(h.field(), n)?;
        let xn1 = Polynomial::x_pow_minus_one(h.field(), n);
        let (g, r) = xn1.divmod(h)?;
        if !r.is_zero() {
            return Err(CodeError::NotDivisor(n));
        }
        let lead = h.leading();
        Ok(Self::assemble(roots, g.scale(lead), h.monic()))
    }

    pub fn from_generator(g: &Polynomial, n: usize) -> Result<Self, CodeError> {
        let roots = RootsOfUnity::new(g.field(), n)?;
        let xn1 = Polynomial::x_pow_minus_one(g.field(), n);
        let (h, r) = xn1.divmod(g)?;
        if !r.is_zero() {
            return Err(CodeError::NotDivisor(n));
        }
        let lead = g.leading();
        Ok(Self::assemble(roots, g.monic(), h.scale(lead)))
    }

    /// The cyclic code whose zeros are exactly the union of the cyclotomic
    /// cosets of the given exponents.
    pub fn from_zeros(base: &Field, n: usize, exponents: &[i64]) -> Result<Self, CodeError> {
        let roots = RootsOfUnity::new(base, n)?;
        let mut g = Polynomial::one(base);
        for &i in exponents {
            g = g.lcm(&roots.minimal_polynomial(i)?)?;
        }
        let (h, _) = Polynomial::x_pow_minus_one(base, n).divmod(&g)?;
        Ok(Self::assemble(roots, g, h))
    }

    pub fn field(&self) -> &Field {
        self.roots.base()
    }

    pub fn q(&self) -> u32 {
        self.field().size()
    }

    pub fn n(&self) -> usize {
        self.roots.n()
    }

    pub fn k(&self) -> usize {
        self.h.degree().unwrap_or(0)
    }

    pub fn e(&self) -> u32 {
        self.roots.e()
    }

    pub fn generator(&self) -> &Polynomial {
        &self.g
    }

    pub fn parity_check(&self) -> &Polynomial {
        &self.h
    }

    pub fn zero_set(&self) -> &[usize] {
        &self.zero_set
    }

    pub fn roots(&self) -> &RootsOfUnity {
        &self.roots
    }

    pub fn to_json(&self) -> CodeJson {
        CodeJson {
            q: self.q(),
            n: self.n(),
            k: self.k(),
            generator: self.g.coeffs().to_vec(),
            parity_check: self.h.coeffs().to_vec(),
            zero_set: self.zero_set.clone(),
        }
    }

    /// Longest run of cyclically consecutive zeros; d* = run + 1 and b = run start.
    /// Among equally long runs the smallest start wins.
    pub fn designed_params(&self) -> BchParams {
        self.maximal_runs()
            .first()
            .map(|&(b, len)| BchParams { d_star: len + 1, b })
            .unwrap_or(BchParams { d_star: 1, b: 0 })
    }

    /// All longest runs of consecutive zeros as (start, length), by start.
    pub fn maximal_runs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let zeros: BTreeSet<usize> = self.zero_set.iter().copied().collect();
        if zeros.is_empty() {
            return Vec::new();
        }
        if zeros.len() == n {
            return vec![(0, n)];
        }
        let mut runs: Vec<(usize, usize)> = zeros
            .iter()
            .filter(|&&i| !zeros.contains(&((i + n - 1) % n)))
            .map(|&start| {
                let len = (0..n).take_while(|&t| zeros.contains(&((start + t) % n))).count();
                (start, len)
            })
            .collect();
        let best = runs.iter().map(|r| r.1).max().unwrap_or(0);
        runs.retain(|r| r.1 == best);
        runs
    }

    /// The Euclidean dual: generated by the monic reciprocal of h.
    pub fn dual(&self) -> Result<Self, CodeError> {
        let g = self.h.reciprocal()?.monic();
        Self::from_generator(&g, self.n())
    }

    /// {-i mod n : i not a zero of this code}, the zero set the dual must have.
    pub fn dual_zero_set(&self) -> Vec<usize> {
        let n = self.n();
        let zeros: BTreeSet<usize> = self.zero_set.iter().copied().collect();
        let set: BTreeSet<usize> = (0..n).filter(|i| !zeros.contains(i)).map(|i| (n - i) % n).collect();
        set.into_iter().collect()
    }

    /// Rows x^i g(x) for i < k.
    pub fn generator_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        (0..self.k())
            .map(|i| {
                let mut row = vec![0; n];
                for (j, &c) in self.g.coeffs().iter().enumerate() {
                    row[(i + j) % n] = c;
                }
                row
            })
            .collect()
    }

    pub fn lcd_by_reciprocal(&self) -> bool {
        self.g.reciprocal().map(|r| r.monic() == self.g).unwrap_or(false)
    }

    /// The hull is trivial iff the stacked generator matrices of C and its dual have full rank.
    pub fn lcd_by_rank(&self) -> Result<bool, CodeError> {
        let mut stacked = self.generator_matrix();
        stacked.extend(self.dual()?.generator_matrix());
        Ok(linalg::rank(self.field(), &stacked) == self.n())
    }

    /// LCD test; both criteria are evaluated and must agree.
    pub fn is_lcd(&self) -> Result<bool, CodeError> {
        let reciprocal = self.lcd_by_reciprocal();
        let rank = self.lcd_by_rank()?;
        if reciprocal != rank {
            return Err(CodeError::LcdMismatch { reciprocal, rank });
        }
        Ok(reciprocal)
    }

    /// Non-systematic encoding: message polynomial times g.
    pub fn encode(&self, message: &[u32]) -> Result<Vec<u32>, CodeError> {
        if message.len() != self.k() {
            return Err(CodeError::MessageLength { expected: self.k(), got: message.len() });
        }
        let m = Polynomial::new(self.field(), message.to_vec());
        Ok(m.mul(&self.g).to_cyclic_vector(self.n()))
    }

    pub fn contains(&self, word: &[u32]) -> bool {
        word.len() == self.n()
            && Polynomial::new(self.field(), word.to_vec()).rem(&self.g).map(|r| r.is_zero()).unwrap_or(false)
    }
}

/// BCH_q(n, d*, b): generator lcm(m_{α^b}, ..., m_{α^{b+d*-2}}).
pub fn bch_build(q: u64, n: usize, d_star: usize, b: i64) -> Result<CyclicCode, CodeError> {
    if d_star < 2 {
        return Err(CodeError::DesignedDistance(d_star));
    }
    let base = field_of_order(q)?;
    let exponents: Vec<i64> = (0..d_star as i64 - 1).map(|t| b + t).collect();
    CyclicCode::from_zeros(&base, n, &exponents)
}
