//! The twisted dihedral group algebras `FH + FH w` with `w u = u^{-1} w` and
//! `w^2 = -1` (consta-dihedral) or `w^2 = +1` (dihedral), their bar map,
//! trace form and block decomposition into 2x2 matrix algebras.

mod decompose;
mod mat2;
mod subfield;

pub use decompose::{
    decompose, decompose_twisted, solve_norm_equation, Component, ComponentKind, ComponentReport,
    Decomposition, DecompositionReport,
};
pub use mat2::{Mat2, Mat2Ext};
pub use subfield::SubField;

use serde::{Deserialize, Serialize};

use crate::cyclic::{CyclicElem, CyclicRing};
use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};

/// Sign of `w^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Twist {
    /// `w^2 = -1`
    Consta,
    /// `w^2 = +1`
    Dihedral,
}

/// `a + b w` with `a, b` in FH.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgElem {
    pub a: CyclicElem,
    pub b: CyclicElem,
}

/// Element of the consta-dihedral algebra (`w^2 = -1`).
pub type CdaElem = AlgElem;
/// Element of the dihedral algebra (`w^2 = +1`).
pub type DihedralElem = AlgElem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    ring: CyclicRing,
    twist: Twist,
    eps: FieldElem,
}

impl Algebra {
    pub fn new(n: usize, field: &FieldSpec, twist: Twist) -> Result<Self> {
        let ring = CyclicRing::new(n, field)?;
        let eps = match twist {
            Twist::Consta => field.fneg(FieldElem::ONE),
            Twist::Dihedral => FieldElem::ONE,
        };
        Ok(Algebra { ring, twist, eps })
    }

    pub fn consta(n: usize, field: &FieldSpec) -> Result<Self> {
        Self::new(n, field, Twist::Consta)
    }

    pub fn dihedral(n: usize, field: &FieldSpec) -> Result<Self> {
        Self::new(n, field, Twist::Dihedral)
    }

    pub fn ring(&self) -> &CyclicRing {
        &self.ring
    }

    pub fn field(&self) -> &FieldSpec {
        self.ring.field()
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    /// `w^2` as a field element.
    pub fn eps(&self) -> FieldElem {
        self.eps
    }

    pub fn zero(&self) -> AlgElem {
        AlgElem { a: self.ring.zero(), b: self.ring.zero() }
    }

    pub fn one(&self) -> AlgElem {
        self.embed(self.ring.one())
    }

    pub fn u(&self) -> AlgElem {
        self.embed(self.ring.u_pow(1))
    }

    pub fn w(&self) -> AlgElem {
        AlgElem { a: self.ring.zero(), b: self.ring.one() }
    }

    /// `a + 0 w`.
    pub fn embed(&self, a: CyclicElem) -> AlgElem {
        AlgElem { a, b: self.ring.zero() }
    }

    /// `b w`.
    pub fn embed_w(&self, b: CyclicElem) -> AlgElem {
        AlgElem { a: self.ring.zero(), b }
    }

    pub fn add(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        AlgElem { a: self.ring.add(&x.a, &y.a), b: self.ring.add(&x.b, &y.b) }
    }

    pub fn sub(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        AlgElem { a: self.ring.sub(&x.a, &y.a), b: self.ring.sub(&x.b, &y.b) }
    }

    pub fn neg(&self, x: &AlgElem) -> AlgElem {
        AlgElem { a: self.ring.neg(&x.a), b: self.ring.neg(&x.b) }
    }

    pub fn scale(&self, x: &AlgElem, c: FieldElem) -> AlgElem {
        AlgElem { a: self.ring.scale(&x.a, c), b: self.ring.scale(&x.b, c) }
    }

    pub fn is_zero(&self, x: &AlgElem) -> bool {
        x.a.is_zero() && x.b.is_zero()
    }

    /// `(a + bw)(c + dw) = (ac + eps b bar(d)) + (ad + b bar(c)) w`.
    pub fn mul(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        let r = &self.ring;
        let ac = r.mul(&x.a, &y.a);
        let bbd = r.mul(&x.b, &r.bar(&y.b));
        let ad = r.mul(&x.a, &y.b);
        let bbc = r.mul(&x.b, &r.bar(&y.a));
        AlgElem { a: r.add(&ac, &r.scale(&bbd, self.eps)), b: r.add(&ad, &bbc) }
    }

    pub fn try_mul(&self, x: &AlgElem, y: &AlgElem) -> Result<AlgElem> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    /// `u^i x`.
    pub fn mul_u_pow(&self, x: &AlgElem, i: i64) -> AlgElem {
        AlgElem { a: self.ring.shift(&x.a, i), b: self.ring.shift(&x.b, i) }
    }

    /// `w x = eps bar(b) + bar(a) w`.
    pub fn mul_w(&self, x: &AlgElem) -> AlgElem {
        let r = &self.ring;
        AlgElem { a: r.scale(&r.bar(&x.b), self.eps), b: r.bar(&x.a) }
    }

    /// The anti-automorphism sending each group element to its inverse:
    /// `bar(a + bw) = bar(a) + eps b w`.
    pub fn bar(&self, x: &AlgElem) -> AlgElem {
        AlgElem { a: self.ring.bar(&x.a), b: self.ring.scale(&x.b, self.eps) }
    }

    /// Coefficient of the identity element.
    pub fn sigma(&self, x: &AlgElem) -> FieldElem {
        x.a.0[0]
    }

    /// Euclidean inner product over all `2n` coordinates.
    pub fn inner(&self, x: &AlgElem, y: &AlgElem) -> FieldElem {
        let f = self.field();
        x.a.0
            .iter()
            .chain(&x.b.0)
            .zip(y.a.0.iter().chain(&y.b.0))
            .fold(FieldElem::ZERO, |acc, (&s, &t)| f.fadd(acc, f.fmul(s, t)))
    }

    pub fn try_inner(&self, x: &AlgElem, y: &AlgElem) -> Result<FieldElem> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.inner(x, y))
    }

    fn check(&self, x: &AlgElem) -> Result<()> {
        let n = self.n();
        for part in [&x.a, &x.b] {
            if part.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: part.len() });
            }
        }
        Ok(())
    }

    /// Coordinates `(a_0, ..., a_{n-1}, b_0, ..., b_{n-1})`.
    pub fn to_word(&self, x: &AlgElem) -> Vec<FieldElem> {
        let mut v = x.a.0.clone();
        v.extend_from_slice(&x.b.0);
        v
    }

    pub fn from_word(&self, word: &[FieldElem]) -> Result<AlgElem> {
        let n = self.n();
        if word.len() != 2 * n {
            return Err(Error::DimensionMismatch { expected: 2 * n, got: word.len() });
        }
        Ok(AlgElem { a: CyclicElem(word[..n].to_vec()), b: CyclicElem(word[n..].to_vec()) })
    }

    /// Group elements in canonical order: `u^0, ..., u^{n-1}, u^0 w, ..., u^{n-1} w`.
    pub fn group_element(&self, index: usize) -> AlgElem {
        let n = self.n();
        if index < n {
            self.embed(self.ring.u_pow(index as i64))
        } else {
            self.embed_w(self.ring.u_pow((index - n) as i64))
        }
    }

    /// `g x` for the group element `g` with the given index.
    pub fn mul_group_element(&self, index: usize, x: &AlgElem) -> AlgElem {
        let n = self.n();
        if index < n {
            self.mul_u_pow(x, index as i64)
        } else {
            self.mul_u_pow(&self.mul_w(x), (index - n) as i64)
        }
    }

    /// Row-reduced basis (as words) of the left ideal generated by `gens`.
    pub fn left_ideal_rows(&self, gens: &[AlgElem]) -> Vec<Vec<FieldElem>> {
        let f = self.field();
        let mut basis = crate::linalg::EchelonBasis::new(2 * self.n());
        for g in gens {
            for i in 0..2 * self.n() {
                basis.insert(f, &self.to_word(&self.mul_group_element(i, g)));
            }
        }
        basis.into_rref(f)
    }

    /// Random element with independent uniform coefficients.
    pub fn random<R: rand::Rng>(&self, rng: &mut R) -> AlgElem {
        let q = self.field().q();
        let n = self.n();
        let mut draw = || CyclicElem((0..n).map(|_| FieldElem(rng.gen_range(0..q))).collect());
        let a = draw();
        let b = draw();
        AlgElem { a, b }
    }
}
