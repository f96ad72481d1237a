//! General linear codes, used for the evaluation-code side of the BCH
//! construction: the split toric code on P¹, puncturing, and restriction to a
//! subfield.

use std::fmt;

use crate::finite_field::{field_of_order, Embedding, Field};
use crate::linalg;
use crate::polynomial::Polynomial;

use super::{CodeError, CyclicCode};

/// A linear code stored by a reduced row echelon generator matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    n: usize,
    basis: Vec<Vec<u32>>,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] code over {:?}", self.n, self.dimension(), self.field)
    }
}

impl LinearCode {
    pub fn new(field: &Field, n: usize, mut rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == n));
        linalg::rref(field, &mut rows);
        LinearCode { field: field.clone(), n, basis: rows }
    }

    pub fn from_cyclic(code: &CyclicCode) -> Self {
        Self::new(code.field(), code.n(), code.generator_matrix())
    }

    pub fn full(field: &Field, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        Self::new(field, n, rows)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn contains(&self, word: &[u32]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(word.to_vec());
        word.len() == self.n && linalg::rank(&self.field, &rows) == self.dimension()
    }

    /// Parity-check matrix: a basis of the dual code.
    pub fn parity_check_matrix(&self) -> Vec<Vec<u32>> {
        linalg::nullspace(&self.field, &self.basis, self.n)
    }

    pub fn dual(&self) -> Self {
        Self::new(&self.field, self.n, self.parity_check_matrix())
    }

    /// Keeps the listed coordinates, in the listed order.
    pub fn puncture(&self, coords: &[usize]) -> Result<Self, CodeError> {
        if coords.is_empty() || coords.iter().any(|&c| c >= self.n) {
            return Err(CodeError::BadPuncture);
        }
        let rows = self.basis.iter().map(|row| coords.iter().map(|&c| row[c]).collect()).collect();
        Ok(Self::new(&self.field, coords.len(), rows))
    }

    /// All codewords whose coordinates lie in `base`, as a code over `base`.
    ///
    /// A word c over the subfield is in the code iff H c = 0 for the parent's
    /// parity-check matrix H. Taking traces against the basis 1, γ, ..., γ^{e-1}
    /// turns each parity equation into e equations over the subfield.
    pub fn subfield_subcode(&self, base: &Field) -> Result<Self, CodeError> {
        let ext = &self.field;
        let emb =
            Embedding::new(base, ext).map_err(|_| CodeError::BaseMismatch { base: base.size(), ext: ext.size() })?;
        let rel_degree = ext.degree() / base.degree();
        let mut constraints = Vec::new();
        for h in self.parity_check_matrix() {
            for t in 0..rel_degree {
                let w = ext.gamma_pow(t as i64);
                let row = h
                    .iter()
                    .map(|&hj| {
                        let tr = ext.trace_to_subfield(ext.mul(w, hj), base.degree())?;
                        Ok(emb.restrict(tr).expect("trace lands in the subfield"))
                    })
                    .collect::<Result<Vec<u32>, CodeError>>()?;
                constraints.push(row);
            }
        }
        Ok(Self::new(base, self.n, linalg::nullspace(base, &constraints, self.n)))
    }

    /// If this code is cyclic (coordinate i ↔ x^i), its monic generator polynomial.
    pub fn generator_polynomial(&self) -> Option<Polynomial> {
        let xn1 = Polynomial::x_pow_minus_one(&self.field, self.n);
        let mut g = xn1.clone();
        for row in &self.basis {
            g = g.gcd(&Polynomial::new(&self.field, row.clone())).ok()?;
        }
        let expected_dim = self.n - g.degree()?;
        let is_cyclic = expected_dim == self.dimension()
            && self.basis.iter().all(|row| g.divides(&Polynomial::new(&self.field, row.clone())));
        is_cyclic.then_some(g)
    }
}

/// Evaluation code of span{x^{-r}, ..., x^s} at γ^0, ..., γ^{Q-2} over GF(Q).
pub fn p1_toric_code(q_ext: u64, r: usize, s: usize) -> Result<LinearCode, CodeError> {
    let field = field_of_order(q_ext)?;
    let len = field.group_order() as usize;
    if r + s >= len {
        return Err(CodeError::Degenerate { r, s, limit: len });
    }
    let rows = (-(r as i64)..=s as i64).map(|j| (0..len).map(|i| field.gamma_pow(i as i64 * j)).collect()).collect();
    Ok(LinearCode::new(&field, len, rows))
}

/// Coordinates i of the evaluation code with (γ^i)^n = 1, listed so that the
/// t-th entry is the point α^t, α = γ^{(Q-1)/n}.
pub fn nth_root_coordinates(q_ext: u64, n: usize) -> Result<Vec<usize>, CodeError> {
    let field = field_of_order(q_ext)?;
    let order = field.group_order() as usize;
    if n == 0 || !order.is_multiple_of(n) {
        return Err(CodeError::BadPuncture);
    }
    Ok((0..n).map(|t| t * (order / n)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::bch_build;

    #[test]
    fn constants_give_repetition_code() {
        let code = p1_toric_code(8, 0, 0).unwrap();
        assert_eq!(code.dimension(), 1);
        assert_eq!(code.basis()[0], vec![1; 7]);
        let shorter = code.puncture(&[0, 2, 4]).unwrap();
        assert_eq!(shorter.basis(), &[vec![1, 1, 1]]);
        assert_eq!(code.puncture(&(0..7).collect::<Vec<_>>()).unwrap(), code);
        assert!(code.puncture(&[]).is_err());
        assert!(p1_toric_code(8, 3, 4).is_err());
    }

    #[test]
    fn reed_solomon_restricts_to_binary_bch() {
        let rs = p1_toric_code(16, 0, 10).unwrap();
        assert_eq!((rs.length(), rs.dimension()), (15, 11));
        let gf2 = field_of_order(2).unwrap();
        let sub = rs.subfield_subcode(&gf2).unwrap();
        let bch = bch_build(2, 15, 5, 1).unwrap();
        assert_eq!(sub.generator_polynomial().as_ref(), Some(bch.generator()));
    }

    #[test]
    fn trivial_restrictions() {
        let gf9 = field_of_order(9).unwrap();
        let gf3 = field_of_order(3).unwrap();
        let full = LinearCode::full(&gf9, 4).subfield_subcode(&gf3).unwrap();
        assert_eq!(full, LinearCode::full(&gf3, 4));
        let zero = LinearCode::new(&gf9, 4, Vec::new()).subfield_subcode(&gf3).unwrap();
        assert_eq!(zero.dimension(), 0);
        let gf4 = field_of_order(4).unwrap();
        assert!(matches!(LinearCode::full(&gf9, 2).subfield_subcode(&gf4), Err(CodeError::BaseMismatch { .. })));
    }

    #[test]
    fn non_cyclic_code_has_no_generator_polynomial() {
        let gf2 = field_of_order(2).unwrap();
        let code = LinearCode::new(&gf2, 3, vec![vec![1, 0, 0]]);
        assert!(code.generator_polynomial().is_none());
    }
}
