//! Linear codes of length `2n` built as left ideals, their duals and hulls.

mod builder;
pub mod format;

pub use builder::{
    assemble_code, build_c0, build_ct, build_kt, build_lcd_code, k_star_size, lcd_blocks, plain_code,
    self_dual_code, self_orthogonal_code, twist, BetaVector, Family, KField, KStar, Part,
};

use serde::{Deserialize, Serialize};

use crate::algebra::Twist;
use crate::error::Result;
use crate::field::{FieldElem, FieldSpec};
use crate::linalg::{self, EchelonBasis};

/// Where a code came from.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeOrigin {
    pub family: String,
    pub n: usize,
    pub twist: Option<Twist>,
    /// Block indices contributing to the code (0 is `A_0`).
    pub blocks: Vec<usize>,
    /// Unit index of `beta_t` for each nontrivial block, if twisted.
    pub beta: Option<Vec<u128>>,
    pub seed: Option<u64>,
}

/// A linear code stored by its reduced row echelon generator matrix.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: FieldSpec,
    n_len: usize,
    gen: Vec<Vec<FieldElem>>,
    pivots: Vec<usize>,
    pub origin: Option<CodeOrigin>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.n_len == other.n_len && self.gen == other.gen
    }
}

impl Eq for LinearCode {}

impl LinearCode {
    /// The row space of `rows`.
    pub fn from_rows(field: &FieldSpec, n_len: usize, rows: Vec<Vec<FieldElem>>) -> Result<Self> {
        for r in &rows {
            if r.len() != n_len {
                return Err(crate::Error::DimensionMismatch { expected: n_len, got: r.len() });
            }
        }
        let mut gen = rows;
        let pivots = linalg::rref(field, &mut gen);
        Ok(LinearCode { field: field.clone(), n_len, gen, pivots, origin: None })
    }

    pub fn zero(field: &FieldSpec, n_len: usize) -> Self {
        LinearCode { field: field.clone(), n_len, gen: vec![], pivots: vec![], origin: None }
    }

    pub fn full(field: &FieldSpec, n_len: usize) -> Self {
        let rows = (0..n_len)
            .map(|i| (0..n_len).map(|j| if i == j { FieldElem::ONE } else { FieldElem::ZERO }).collect())
            .collect();
        Self::from_rows(field, n_len, rows).unwrap()
    }

    pub fn with_origin(mut self, origin: CodeOrigin) -> Self {
        self.origin = Some(origin);
        self
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n_len(&self) -> usize {
        self.n_len
    }

    pub fn k_dim(&self) -> usize {
        self.gen.len()
    }

    pub fn gen(&self) -> &[Vec<FieldElem>] {
        &self.gen
    }

    /// Pivot columns of the generator matrix; they form an information set.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, word: &[FieldElem]) -> bool {
        let mut b = EchelonBasis::new(self.n_len);
        for r in &self.gen {
            b.insert(&self.field, r);
        }
        b.contains(&self.field, word)
    }

    /// Codeword `sum m_i g_i`.
    pub fn encode(&self, message: &[FieldElem]) -> Vec<FieldElem> {
        let f = &self.field;
        let mut out = vec![FieldElem::ZERO; self.n_len];
        for (m, row) in message.iter().zip(&self.gen) {
            if *m == FieldElem::ZERO {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(row) {
                *o = f.fadd(*o, f.fmul(*m, g));
            }
        }
        out
    }

    /// Euclidean dual code.
    pub fn dual(&self) -> LinearCode {
        let kernel = linalg::kernel(&self.field, &self.gen, self.n_len);
        Self::from_rows(&self.field, self.n_len, kernel).unwrap()
    }

    /// `G G^T`.
    pub fn gram(&self) -> Vec<Vec<FieldElem>> {
        linalg::mul_transpose(&self.field, &self.gen, &self.gen)
    }

    /// `C` intersected with its dual, computed from the left kernel of the
    /// stacked matrix `[G; -H]`.
    pub fn hull(&self) -> LinearCode {
        let f = &self.field;
        let h = self.dual();
        let k = self.k_dim();
        let mut stacked = self.gen.clone();
        stacked.extend(h.gen.iter().map(|r| r.iter().map(|&x| f.fneg(x)).collect::<Vec<_>>()));
        if stacked.is_empty() {
            return Self::zero(f, self.n_len);
        }
        let words: Vec<Vec<FieldElem>> =
            linalg::left_kernel(f, &stacked).into_iter().map(|y| self.encode(&y[..k])).collect();
        Self::from_rows(f, self.n_len, words).unwrap()
    }

    /// `dim(C cap C^perp)` by both the explicit intersection and
    /// `k - rank(G G^T)`; the two must agree.
    pub fn hull_dimensions(&self) -> (usize, usize) {
        let direct = self.hull().k_dim();
        let via_gram = self.k_dim() - linalg::rank(&self.field, &self.gram());
        (direct, via_gram)
    }

    pub fn hull_dimension(&self) -> usize {
        let (a, b) = self.hull_dimensions();
        assert_eq!(a, b, "hull computations disagree");
        a
    }

    pub fn is_lcd(&self) -> bool {
        self.hull_dimension() == 0
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.hull_dimension() == self.k_dim()
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.k_dim() == self.n_len && self.is_self_orthogonal()
    }

    /// Span of this code and `other`.
    pub fn sum(&self, other: &LinearCode) -> LinearCode {
        let mut rows = self.gen.clone();
        rows.extend(other.gen.iter().cloned());
        Self::from_rows(&self.field, self.n_len, rows).unwrap()
    }

    /// Whether the code is invariant under the coordinate map `word -> map(word)`.
    pub fn is_invariant_under(&self, map: impl Fn(&[FieldElem]) -> Vec<FieldElem>) -> bool {
        let mut b = EchelonBasis::new(self.n_len);
        for r in &self.gen {
            b.insert(&self.field, r);
        }
        self.gen.iter().all(|r| b.contains(&self.field, &map(r)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(f: &FieldSpec, rows: &[&[u32]]) -> LinearCode {
        let n = rows[0].len();
        LinearCode::from_rows(f, n, rows.iter().map(|r| r.iter().map(|&x| FieldElem(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn dual_basics() {
        let f = FieldSpec::prime(3).unwrap();
        let c = code(&f, &[&[1, 0, 2, 1], &[0, 1, 1, 1]]);
        assert_eq!(c.dual().k_dim(), 2);
        assert_eq!(c.dual().dual(), c);
        assert_eq!(LinearCode::full(&f, 4).dual().k_dim(), 0);
        assert_eq!(LinearCode::zero(&f, 4).dual(), LinearCode::full(&f, 4));
    }

    #[test]
    fn hull_methods_agree() {
        let f = FieldSpec::prime(3).unwrap();
        // the ternary tetracode is self-dual
        let c = code(&f, &[&[1, 0, 1, 1], &[0, 1, 1, 2]]);
        assert_eq!(c.hull_dimensions(), (2, 2));
        assert!(c.is_self_dual());
        let lcd = code(&f, &[&[1, 0, 0, 0]]);
        assert_eq!(lcd.hull_dimensions(), (0, 0));
        assert!(lcd.is_lcd());
        assert_eq!(LinearCode::zero(&f, 4).hull_dimension(), 0);
        let mixed = code(&f, &[&[1, 1, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(mixed.hull_dimensions(), (1, 1));
    }

    #[test]
    fn contains_and_encode() {
        let f = FieldSpec::prime(5).unwrap();
        let c = code(&f, &[&[1, 2, 3, 4, 0], &[0, 1, 1, 1, 1]]);
        let w = c.encode(&[FieldElem(2), FieldElem(3)]);
        assert!(c.contains(&w));
        assert!(!c.contains(&[FieldElem(1), FieldElem(0), FieldElem(0), FieldElem(0), FieldElem(0)]));
    }
}
