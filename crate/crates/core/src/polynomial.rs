//! Dense univariate polynomials over a canonical finite field.

use std::fmt;

use thiserror::Error;

use crate::finite_field::{gcd_u64, Embedding, Field, FieldElement, FieldError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("the zero polynomial has no reciprocal")]
    ZeroPolynomial,
    #[error("reciprocal needs a nonzero constant term")]
    ZeroConstantTerm,
    #[error("cyclotomic cosets need gcd(q, n) = 1, got q = {q}, n = {n}")]
    NotCoprime { q: u64, n: u64 },
    #[error("minimal polynomial coefficient {0} does not lie in the base field")]
    OutsideBase(u32),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Coefficients are stored constant term first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<u32>,
}

impl Polynomial {
    pub fn new(field: &Field, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|&c| field.contains(c)));
        Polynomial { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: &Field, c: u32) -> Self {
        Self::new(field, vec![c])
    }

    /// c·x^d
    pub fn monomial(field: &Field, c: u32, d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        Self::new(field, coeffs)
    }

    /// x^n - 1
    pub fn x_pow_minus_one(field: &Field, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = field.neg(1);
        coeffs[n] = field.add(coeffs[n], 1);
        Self::new(field, coeffs)
    }

    /// The monic linear polynomial x - root.
    pub fn linear(field: &Field, root: u32) -> Self {
        Self::new(field, vec![field.neg(root), 1])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Evaluates at a point of an extension field, embedding the coefficients.
    pub fn eval_in(&self, emb: &Embedding, x: u32) -> u32 {
        let f = emb.sup();
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), emb.embed(c)))
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(self.field, other.field, "polynomials over different fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_field(other);
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Self::new(f, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_field(other);
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Self::new(f, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_field(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.field.inv(self.leading()) {
            Ok(inv) => self.scale(inv),
            Err(_) => self.clone(),
        }
    }

    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        self.check_field(divisor);
        let f = &self.field;
        let d_deg = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![0; rem.len() - d_deg];
        for top in (d_deg..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c == 0 {
                continue;
            }
            quot[top - d_deg] = c;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let idx = top - d_deg + j;
                rem[idx] = f.sub(rem[idx], f.mul(c, dc));
            }
        }
        rem.truncate(d_deg);
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, PolyError> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn divides(&self, other: &Self) -> bool {
        matches!(other.rem(self), Ok(r) if r.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Self) -> Result<Self, PolyError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let g = self.gcd(other)?;
        Ok(self.mul(&other.divmod(&g)?.0).monic())
    }

    /// x^{deg f} f(1/x): the coefficient sequence reversed.
    pub fn reciprocal(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if self.coeffs[0] == 0 {
            return Err(PolyError::ZeroConstantTerm);
        }
        Ok(Self::new(&self.field, self.coeffs.iter().rev().copied().collect()))
    }

    /// Reduces modulo x^n - 1 into a dense vector of length n.
    pub fn to_cyclic_vector(&self, n: usize) -> Vec<u32> {
        let f = &self.field;
        let mut out = vec![0; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % n] = f.add(out[i % n], c);
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {:?}", self, self.field)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// The orbit {i, iq, iq^2, ...} of `i` modulo `n`, sorted.
pub fn cyclotomic_coset(i: u64, n: u64, q: u64) -> Result<Vec<u64>, PolyError> {
    if n == 0 || gcd_u64(q, n) != 1 {
        return Err(PolyError::NotCoprime { q, n });
    }
    let start = i % n;
    let mut coset = vec![start];
    let mut cur = start * (q % n) % n;
    while cur != start {
        coset.push(cur);
        cur = cur * (q % n) % n;
    }
    coset.sort_unstable();
    Ok(coset)
}

/// All cyclotomic cosets modulo `n`, ordered by their least element.
pub fn cyclotomic_cosets(n: u64, q: u64) -> Result<Vec<Vec<u64>>, PolyError> {
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i as usize] {
            continue;
        }
        let coset = cyclotomic_coset(i, n, q)?;
        for &j in &coset {
            seen[j as usize] = true;
        }
        out.push(coset);
    }
    Ok(out)
}

/// Minimal polynomial over `emb.sub()` of an element of `emb.sup()`, built as
/// the product of `x - β^{q^j}` over the Frobenius orbit of β.
pub fn minimal_polynomial_in(emb: &Embedding, beta: u32) -> Result<Polynomial, PolyError> {
    let sup = emb.sup();
    let q = emb.sub().size() as u64;
    let mut product = Polynomial::one(sup);
    let mut conj = beta;
    loop {
        product = product.mul(&Polynomial::linear(sup, conj));
        conj = sup.pow(conj, q);
        if conj == beta {
            break;
        }
    }
    let coeffs = product
        .coeffs()
        .iter()
        .map(|&c| emb.restrict(c).ok_or(PolyError::OutsideBase(c)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::new(emb.sub(), coeffs))
}

pub fn minimal_polynomial(beta: &FieldElement, base: &Field) -> Result<Polynomial, PolyError> {
    let emb = Embedding::new(base, beta.field())?;
    minimal_polynomial_in(&emb, beta.encoding())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::make_field;

    fn poly(f: &Field, c: &[u32]) -> Polynomial {
        Polynomial::new(f, c.to_vec())
    }

    #[test]
    fn divmod_examples() {
        let gf3 = make_field(3, 1).unwrap();
        let f = poly(&gf3, &[1, 0, 1]);
        let (q, r) = f.divmod(&poly(&gf3, &[1, 1])).unwrap();
        assert_eq!(q, poly(&gf3, &[2, 1]));
        assert_eq!(r, poly(&gf3, &[2]));
        let (q, r) = f.divmod(&Polynomial::one(&gf3)).unwrap();
        assert_eq!((q, r.is_zero()), (f.clone(), true));
        assert_eq!(f.divmod(&Polynomial::zero(&gf3)), Err(PolyError::DivisionByZero));

        let gf2 = make_field(2, 1).unwrap();
        let (q, r) = poly(&gf2, &[1, 0, 0, 1]).divmod(&poly(&gf2, &[1, 1])).unwrap();
        assert_eq!(q, poly(&gf2, &[1, 1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_examples() {
        let gf2 = make_field(2, 1).unwrap();
        let a = poly(&gf2, &[1, 0, 0, 1]);
        let b = poly(&gf2, &[1, 0, 1]);
        assert_eq!(a.gcd(&b).unwrap(), poly(&gf2, &[1, 1]));
        assert_eq!(a.gcd(&a).unwrap(), a);
        let gf3 = make_field(3, 1).unwrap();
        let c = poly(&gf3, &[1, 2]);
        assert_eq!(c.gcd(&Polynomial::zero(&gf3)).unwrap(), c.monic());
        let z = Polynomial::zero(&gf3);
        assert_eq!(z.gcd(&z), Err(PolyError::BothZero));
        assert_eq!(a.lcm(&b).unwrap(), poly(&gf2, &[1, 1, 0, 1, 1]));
    }

    #[test]
    fn reciprocal_examples() {
        let gf3 = make_field(3, 1).unwrap();
        let p = poly(&gf3, &[1, 0, 1]);
        assert_eq!(p.reciprocal().unwrap(), p);
        assert_eq!(poly(&gf3, &[2, 1]).reciprocal().unwrap(), poly(&gf3, &[1, 2]));
        assert_eq!(poly(&gf3, &[0, 1]).reciprocal(), Err(PolyError::ZeroConstantTerm));
        assert_eq!(Polynomial::zero(&gf3).reciprocal(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn coset_examples() {
        assert_eq!(cyclotomic_coset(0, 7, 2).unwrap(), vec![0]);
        assert_eq!(cyclotomic_coset(1, 13, 3).unwrap(), vec![1, 3, 9]);
        assert_eq!(cyclotomic_coset(5, 10, 3).unwrap(), vec![5]);
        assert!(cyclotomic_coset(1, 9, 3).is_err());
    }

    #[test]
    fn minimal_polynomial_examples() {
        let gf3 = make_field(3, 1).unwrap();
        let gf27 = make_field(3, 3).unwrap();
        let emb = Embedding::new(&gf3, &gf27).unwrap();
        assert_eq!(minimal_polynomial_in(&emb, 0).unwrap(), poly(&gf3, &[0, 1]));
        assert_eq!(minimal_polynomial_in(&emb, 1).unwrap(), poly(&gf3, &[2, 1]));

        let alpha = gf27.nth_root_of_unity(13).unwrap();
        let m = minimal_polynomial_in(&emb, alpha).unwrap();
        assert_eq!(m.degree(), Some(3));
        assert!(m.is_monic());
        assert_eq!(m.eval_in(&emb, alpha), 0);

        let gf81 = make_field(3, 4).unwrap();
        let alpha = gf81.nth_root_of_unity(10).unwrap();
        let beta = gf81.element(gf81.pow(alpha, 5)).unwrap();
        assert_eq!(minimal_polynomial(&beta, &gf3).unwrap(), poly(&gf3, &[1, 1]));

        let gf4 = make_field(2, 2).unwrap();
        assert!(minimal_polynomial(&beta, &gf4).is_err());
    }

    #[test]
    fn display_renders_terms() {
        let gf3 = make_field(3, 1).unwrap();
        assert_eq!(poly(&gf3, &[2, 0, 1]).to_string(), "x^2 + 2");
        assert_eq!(poly(&gf3, &[0, 2]).to_string(), "2x");
        assert_eq!(Polynomial::zero(&gf3).to_string(), "0");
    }
}
