//! Arithmetic in GF(p^m) for small prime powers.
//!
//! Every field is built from a canonical modulus: the smallest monic primitive
//! polynomial of degree `m` over GF(p), with candidates ordered by the base-p
//! integer whose most significant digit is the coefficient of `x^{m-1}`. The
//! class of `x` is therefore a primitive element, and everything derived from it
//! (roots of unity, generator polynomials, codewords) is reproducible.
//!
//! Elements are passed around as their integer encoding `Σ c_i p^i`, where `c_i`
//! is the coefficient of `x^i` in the polynomial-basis representation. Fields
//! are cached: `make_field(p, m)` returns the same shared instance on every call.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

/// Largest supported field size. GF(9^6) = GF(3^12) must fit.
pub const FIELD_SIZE_LIMIT: u64 = 1 << 20;

const NONE: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of size {p}^{m} exceeds the supported limit of {FIELD_SIZE_LIMIT} elements")]
    TooLarge { p: u64, m: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("elements belong to different fields: GF({0}) and GF({1})")]
    Mismatch(u32, u32),
    #[error("zero has no inverse or multiplicative order")]
    ZeroElement,
    #[error("{sub} does not divide the extension degree {m}")]
    NotSubfield { sub: u32, m: u32 },
    #[error("{n} does not divide the multiplicative group order {order}")]
    NoRootOfUnity { n: u64, order: u32 },
    #[error("encoding {0} is out of range for GF({1})")]
    BadEncoding(u32, u32),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^m` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p as u32, m))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Multiplicative order of `q` modulo `n`. Requires `gcd(q, n) = 1`.
pub fn multiplicative_order(q: u64, n: u64) -> Option<u64> {
    if n == 0 || gcd_u64(q, n) != 1 {
        return None;
    }
    if n == 1 {
        return Some(1);
    }
    let mut acc = q % n;
    let mut e = 1;
    while acc != 1 {
        acc = acc * q % n;
        e += 1;
    }
    Some(e)
}

/// Polynomials over GF(p) used only while searching for the modulus.
/// Little-endian coefficient vectors of fixed length `m` (reduced residues).
struct ResidueRing<'a> {
    p: u32,
    modulus: &'a [u32],
}

impl ResidueRing<'_> {
    fn m(&self) -> usize {
        self.modulus.len() - 1
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let m = self.m();
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for d in (m..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            // x^m = -(a_0 + ... + a_{m-1} x^{m-1})
            for (i, &a_i) in self.modulus[..m].iter().enumerate() {
                let t = c * a_i as u64 % p;
                prod[d - m + i] = (prod[d - m + i] + p - t) % p;
            }
        }
        prod.truncate(m);
        prod.into_iter().map(|c| c as u32).collect()
    }

    fn pow_x(&self, mut e: u64) -> Vec<u32> {
        let m = self.m();
        let mut result = vec![0; m];
        result[0] = 1;
        let mut base = vec![0; m];
        if m == 1 {
            base[0] = (self.p - self.modulus[0]) % self.p;
        } else {
            base[1] = 1;
        }
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    fn is_one(v: &[u32]) -> bool {
        v[0] == 1 && v[1..].iter().all(|&c| c == 0)
    }

    /// x has order exactly p^m - 1 modulo the modulus. This forces the modulus
    /// to be irreducible: a reducible one has fewer than p^m - 1 units.
    fn x_is_primitive(&self) -> bool {
        let order = (self.p as u64).pow(self.m() as u32) - 1;
        if !Self::is_one(&self.pow_x(order)) {
            return false;
        }
        prime_factors(order).into_iter().all(|r| !Self::is_one(&self.pow_x(order / r)))
    }
}

fn least_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let order = (p - 1) as u64;
    let factors = prime_factors(order);
    (2..p)
        .find(|&g| {
            factors.iter().all(|&r| {
                let mut acc = 1u64;
                for _ in 0..order / r {
                    acc = acc * g as u64 % p as u64;
                }
                acc != 1
            })
        })
        .expect("every prime has a primitive root")
}

fn canonical_modulus(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        let g = least_primitive_root(p);
        return vec![(p - g) % p, 1];
    }
    let count = (p as u64).pow(m);
    for index in 1..count {
        let mut modulus = Vec::with_capacity(m as usize + 1);
        let mut rest = index;
        for _ in 0..m {
            modulus.push((rest % p as u64) as u32);
            rest /= p as u64;
        }
        modulus.push(1);
        if modulus[0] == 0 {
            continue;
        }
        let ring = ResidueRing { p, modulus: &modulus };
        if ring.x_is_primitive() {
            return modulus;
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

pub struct FieldData {
    p: u32,
    m: u32,
    size: u32,
    modulus: Vec<u32>,
    gamma: u32,
    /// exp[i] = gamma^i, stored twice over so sums of two logs need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// zech[k] = log(1 + gamma^k), or NONE when 1 + gamma^k = 0.
    zech: Vec<u32>,
}

/// A shared handle to a canonical finite field.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.m == other.0.m)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.m)
    }
}

/// Returns the canonical field GF(p^m), building it on first use.
pub fn make_field(p: u32, m: u32) -> Result<Field, FieldError> {
    if !is_prime(p as u64) {
        return Err(FieldError::NotPrime(p as u64));
    }
    if m == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let size = (p as u64).checked_pow(m).filter(|&s| s <= FIELD_SIZE_LIMIT);
    if size.is_none() {
        return Err(FieldError::TooLarge { p: p as u64, m });
    }
    static REGISTRY: OnceLock<Mutex<HashMap<(u32, u32), Field>>> = OnceLock::new();
    let registry = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = registry.lock().unwrap_or_else(|e| e.into_inner());
    let field = guard.entry((p, m)).or_insert_with(|| Field(Arc::new(FieldData::build(p, m))));
    Ok(field.clone())
}

/// The canonical field with `q` elements.
pub fn field_of_order(q: u64) -> Result<Field, FieldError> {
    let (p, m) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
    make_field(p, m)
}

impl FieldData {
    fn build(p: u32, m: u32) -> Self {
        let modulus = canonical_modulus(p, m);
        let size = p.pow(m);
        let order = (size - 1) as usize;
        let ring = ResidueRing { p, modulus: &modulus };

        let mut exp = Vec::with_capacity(2 * order);
        let mut log = vec![NONE; size as usize];
        let gamma_coeffs = if m == 1 {
            vec![(p - modulus[0]) % p]
        } else {
            let mut v = vec![0; m as usize];
            v[1] = 1;
            v
        };
        let mut current = vec![0; m as usize];
        current[0] = 1;
        for i in 0..order {
            let enc = encode_digits(p, &current);
            exp.push(enc);
            log[enc as usize] = i as u32;
            current = if m == 1 {
                vec![(current[0] as u64 * gamma_coeffs[0] as u64 % p as u64) as u32]
            } else {
                ring.mul(&current, &gamma_coeffs)
            };
        }
        exp.extend_from_within(..);

        let mut zech = vec![NONE; order];
        for (k, slot) in zech.iter_mut().enumerate() {
            let s = add_digits(p, exp[k], 1);
            if s != 0 {
                *slot = log[s as usize];
            }
        }
        let gamma = encode_digits(p, &gamma_coeffs);
        FieldData { p, m, size, modulus, gamma, exp, log, zech }
    }
}

fn encode_digits(p: u32, digits: &[u32]) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn add_digits(p: u32, mut a: u32, mut b: u32) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let mut out = 0;
    let mut weight = 1;
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * weight;
        a /= p;
        b /= p;
        weight *= p;
    }
    out
}

impl Field {
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn size(&self) -> u32 {
        self.0.size
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// The canonical primitive element.
    pub fn gamma(&self) -> u32 {
        self.0.gamma
    }

    pub fn group_order(&self) -> u32 {
        self.0.size - 1
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.0.size
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.0.size
    }

    pub fn element(&self, enc: u32) -> Result<FieldElement, FieldError> {
        if !self.contains(enc) {
            return Err(FieldError::BadEncoding(enc, self.0.size));
        }
        Ok(FieldElement { field: self.clone(), enc })
    }

    /// Coefficient vector (length m) of an encoded element.
    pub fn coeffs(&self, mut a: u32) -> Vec<u32> {
        (0..self.0.m)
            .map(|_| {
                let d = a % self.0.p;
                a /= self.0.p;
                d
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> u32 {
        encode_digits(self.0.p, coeffs)
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.0.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let d = &*self.0;
        if d.p == 2 {
            return a ^ b;
        }
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let order = d.size - 1;
        let la = d.log[a as usize];
        let lb = d.log[b as usize];
        let k = if lb >= la { lb - la } else { lb + order - la };
        match d.zech[k as usize] {
            NONE => 0,
            z => d.exp[(la + z) as usize],
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let d = &*self.0;
        if d.p == 2 || a == 0 {
            return a;
        }
        d.exp[(d.log[a as usize] + (d.size - 1) / 2) as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let d = &*self.0;
        d.exp[(d.log[a as usize] + d.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32, FieldError> {
        if a == 0 {
            return Err(FieldError::ZeroElement);
        }
        let d = &*self.0;
        let order = d.size - 1;
        Ok(d.exp[((order - d.log[a as usize]) % order) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let d = &*self.0;
        let order = (d.size - 1) as u64;
        d.exp[(d.log[a as usize] as u64 * (e % order) % order) as usize]
    }

    /// gamma^e for any integer exponent.
    pub fn gamma_pow(&self, e: i64) -> u32 {
        let order = (self.0.size - 1) as i64;
        self.0.exp[e.rem_euclid(order) as usize]
    }

    /// Discrete logarithm to base gamma.
    pub fn log(&self, a: u32) -> Option<u32> {
        match self.0.log.get(a as usize) {
            Some(&NONE) | None => None,
            Some(&l) => Some(l),
        }
    }

    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.0.p as u64)
    }

    /// Tr from this field down to GF(p^sub_degree): the sum of the conjugates
    /// a^{(p^sub_degree)^i}. The result is returned as an element of this field.
    pub fn trace_to_subfield(&self, a: u32, sub_degree: u32) -> Result<u32, FieldError> {
        if sub_degree == 0 || !self.0.m.is_multiple_of(sub_degree) {
            return Err(FieldError::NotSubfield { sub: sub_degree, m: self.0.m });
        }
        let step = (self.0.p as u64).pow(sub_degree);
        let mut conj = a;
        let mut acc = 0;
        for _ in 0..self.0.m / sub_degree {
            acc = self.add(acc, conj);
            conj = self.pow(conj, step);
        }
        Ok(acc)
    }

    pub fn element_order(&self, a: u32) -> Result<u64, FieldError> {
        let l = self.log(a).ok_or(FieldError::ZeroElement)? as u64;
        let order = (self.0.size - 1) as u64;
        Ok(order / gcd_u64(order, l))
    }

    /// The canonical primitive n-th root of unity gamma^{(|F|-1)/n}.
    pub fn nth_root_of_unity(&self, n: u64) -> Result<u32, FieldError> {
        let order = self.group_order();
        if n == 0 || !(order as u64).is_multiple_of(n) {
            return Err(FieldError::NoRootOfUnity { n, order });
        }
        Ok(self.0.exp[(order as u64 / n) as usize])
    }

    /// Elements of the subfield GF(p^sub_degree), i.e. those fixed by x -> x^{p^sub_degree}.
    pub fn is_in_subfield(&self, a: u32, sub_degree: u32) -> bool {
        self.pow(a, (self.0.p as u64).pow(sub_degree)) == a
    }
}

/// A field element bundled with its field, for checked arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    enc: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{:?}", self.enc, self.field)
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn encoding(&self) -> u32 {
        self.enc
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.enc)
    }

    pub fn is_zero(&self) -> bool {
        self.enc == 0
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if self.field != other.field {
            return Err(FieldError::Mismatch(self.field.size(), other.field.size()));
        }
        Ok(())
    }

    fn with(&self, enc: u32) -> Self {
        FieldElement { field: self.field.clone(), enc }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.enc, other.enc)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.enc, other.enc)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.enc, other.enc)))
    }

    pub fn invert(&self) -> Result<Self, FieldError> {
        Ok(self.with(self.field.inv(self.enc)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with(self.field.pow(self.enc, e))
    }

    pub fn trace_to_subfield(&self, sub_degree: u32) -> Result<Self, FieldError> {
        Ok(self.with(self.field.trace_to_subfield(self.enc, sub_degree)?))
    }

    pub fn order(&self) -> Result<u64, FieldError> {
        self.field.element_order(self.enc)
    }
}

/// An embedding of a canonical field into a canonical extension of it.
///
/// The smaller field's modulus is irreducible, so it has a root in the
/// larger field; sending the smaller field's gamma to the root of least
/// encoding gives the (canonical) embedding.
#[derive(Clone)]
pub struct Embedding {
    sub: Field,
    sup: Field,
    image: Vec<u32>,
    preimage: HashMap<u32, u32>,
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Embedding({:?} -> {:?})", self.sub, self.sup)
    }
}

impl Embedding {
    pub fn new(sub: &Field, sup: &Field) -> Result<Self, FieldError> {
        if sub.characteristic() != sup.characteristic() || !sup.degree().is_multiple_of(sub.degree()) {
            return Err(FieldError::NotSubfield { sub: sub.degree(), m: sup.degree() });
        }
        let modulus = sub.modulus();
        let eval = |x: u32| modulus.iter().rev().fold(0, |acc, &c| sup.add(sup.mul(acc, x), c));
        let root = sup
            .elements()
            .filter(|&x| sup.is_in_subfield(x, sub.degree()))
            .find(|&x| eval(x) == 0)
            .expect("an irreducible polynomial splits in every extension of its degree");
        let mut image = vec![0; sub.size() as usize];
        for e in 0..sub.group_order() {
            image[sub.gamma_pow(e as i64) as usize] = sup.pow(root, e as u64);
        }
        let preimage = image.iter().enumerate().map(|(a, &b)| (b, a as u32)).collect();
        Ok(Embedding { sub: sub.clone(), sup: sup.clone(), image, preimage })
    }

    pub fn sub(&self) -> &Field {
        &self.sub
    }

    pub fn sup(&self) -> &Field {
        &self.sup
    }

    pub fn embed(&self, a: u32) -> u32 {
        self.image[a as usize]
    }

    /// Pulls an element of the larger field back, if it lies in the image.
    pub fn restrict(&self, b: u32) -> Option<u32> {
        self.preimage.get(&b).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_canonical_fields() {
        let gf2 = make_field(2, 1).unwrap();
        assert_eq!(gf2.gamma(), 1);
        assert_eq!(gf2.size(), 2);

        let gf4 = make_field(2, 2).unwrap();
        assert_eq!(gf4.modulus(), &[1, 1, 1]);
        assert_eq!(gf4.size(), 4);

        let gf27 = make_field(3, 3).unwrap();
        let g = gf27.gamma();
        assert_eq!(gf27.pow(g, 26), 1);
        assert_ne!(gf27.pow(g, 13), 1);
        assert_ne!(gf27.pow(g, 2), 1);
        assert_eq!(gf27.element_order(g).unwrap(), 26);
    }

    #[test]
    fn prime_field_uses_least_primitive_root() {
        assert_eq!(make_field(7, 1).unwrap().gamma(), 3);
        assert_eq!(make_field(5, 1).unwrap().gamma(), 2);
        assert_eq!(make_field(3, 1).unwrap().gamma(), 2);
    }

    #[test]
    fn repeated_construction_is_identical() {
        let a = make_field(3, 4).unwrap();
        let b = make_field(3, 4).unwrap();
        assert!(Arc::ptr_eq(&a.0, &b.0));
        assert_eq!(a.modulus(), b.modulus());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(make_field(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(make_field(3, 0).unwrap_err(), FieldError::ZeroDegree);
        assert!(matches!(make_field(2, 40), Err(FieldError::TooLarge { .. })));
    }

    #[test]
    fn gf4_products_and_inverses() {
        let f = make_field(2, 2).unwrap();
        let g = f.gamma();
        let g1 = f.add(g, 1);
        assert_eq!(f.mul(g, g), g1);
        assert_eq!(f.mul(g, g1), 1);
        assert_eq!(f.inv(g).unwrap(), g1);
        assert_eq!(f.inv(1).unwrap(), 1);
        assert_eq!(f.mul(0, g), 0);
        assert_eq!(f.inv(0), Err(FieldError::ZeroElement));
        assert_eq!(f.element_order(g).unwrap(), 3);
        assert_eq!(f.element_order(1).unwrap(), 1);
    }

    #[test]
    fn gf3_inverse_of_two() {
        let f = make_field(3, 1).unwrap();
        assert_eq!(f.inv(2).unwrap(), 2);
    }

    #[test]
    fn trace_gf4_to_gf2() {
        let f = make_field(2, 2).unwrap();
        assert_eq!(f.trace_to_subfield(0, 1).unwrap(), 0);
        assert_eq!(f.trace_to_subfield(f.gamma(), 1).unwrap(), 1);
        assert_eq!(f.trace_to_subfield(1, 1).unwrap(), 0);
        assert!(f.trace_to_subfield(1, 3).is_err());
    }

    #[test]
    fn roots_of_unity() {
        let gf27 = make_field(3, 3).unwrap();
        assert_eq!(gf27.nth_root_of_unity(1).unwrap(), 1);
        let g = gf27.gamma();
        assert_eq!(gf27.nth_root_of_unity(13).unwrap(), gf27.mul(g, g));
        assert_eq!(gf27.element_order(gf27.mul(g, g)).unwrap(), 13);
        assert!(gf27.nth_root_of_unity(5).is_err());
        let gf16 = make_field(2, 4).unwrap();
        assert_eq!(gf16.nth_root_of_unity(15).unwrap(), gf16.gamma());
    }

    #[test]
    fn mismatched_elements_are_rejected() {
        let a = make_field(2, 2).unwrap().element(1).unwrap();
        let b = make_field(3, 1).unwrap().element(1).unwrap();
        assert!(matches!(a.mul(&b), Err(FieldError::Mismatch(4, 3))));
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        for (p, m, big) in [(2, 2, 4), (3, 1, 3), (3, 2, 6), (2, 3, 6)] {
            let sub = make_field(p, m).unwrap();
            let sup = make_field(p, big).unwrap();
            let emb = Embedding::new(&sub, &sup).unwrap();
            for a in sub.elements() {
                for b in sub.elements() {
                    assert_eq!(emb.embed(sub.add(a, b)), sup.add(emb.embed(a), emb.embed(b)));
                    assert_eq!(emb.embed(sub.mul(a, b)), sup.mul(emb.embed(a), emb.embed(b)));
                }
                assert_eq!(emb.restrict(emb.embed(a)), Some(a));
            }
        }
        let gf4 = make_field(2, 2).unwrap();
        let gf8 = make_field(2, 3).unwrap();
        assert!(Embedding::new(&gf4, &gf8).is_err());
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(multiplicative_order(3, 13), Some(3));
        assert_eq!(multiplicative_order(9, 73), Some(6));
    }

    #[test]
    fn largest_required_field_builds() {
        let f = make_field(3, 12).unwrap();
        assert_eq!(f.size(), 531_441);
        assert_eq!(f.element_order(f.gamma()).unwrap(), 531_440);
    }
}
