//! The group algebra FH = F[x]/(x^n - 1) of a cyclic group of odd order n:
//! convolution, the bar map, primitive idempotents and their conjugation
//! pairing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{factor_xn_minus_1_with_cosets, mult_order, FieldElem, FieldSpec, Poly};
use crate::util::{distinct_prime_factors, gcd};

/// Element of FH: coefficient of `u^i` at index `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CyclicElem(pub Vec<FieldElem>);

impl CyclicElem {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == FieldElem::ZERO)
    }

    pub fn encodings(&self) -> Vec<u32> {
        self.0.iter().map(|c| c.0).collect()
    }
}

/// The ring FH for a fixed odd `n` and field. Arithmetic does not need
/// `gcd(n, q) = 1`; the idempotent decomposition does.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicRing {
    field: FieldSpec,
    n: usize,
}

impl CyclicRing {
    pub fn new(n: usize, field: &FieldSpec) -> Result<Self> {
        if n == 0 || n.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!("n = {n} must be odd and positive")));
        }
        Ok(CyclicRing { field: field.clone(), n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn zero(&self) -> CyclicElem {
        CyclicElem(vec![FieldElem::ZERO; self.n])
    }

    pub fn one(&self) -> CyclicElem {
        self.u_pow(0)
    }

    /// `u^i` (exponent taken mod n, negative allowed).
    pub fn u_pow(&self, i: i64) -> CyclicElem {
        let mut v = self.zero();
        v.0[i.rem_euclid(self.n as i64) as usize] = FieldElem::ONE;
        v
    }

    pub fn constant(&self, c: FieldElem) -> CyclicElem {
        let mut v = self.zero();
        v.0[0] = c;
        v
    }

    pub fn from_coeffs(&self, coeffs: Vec<FieldElem>) -> Result<CyclicElem> {
        if coeffs.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: coeffs.len() });
        }
        Ok(CyclicElem(coeffs))
    }

    /// Reduces a polynomial mod x^n - 1.
    pub fn from_poly(&self, p: &Poly<FieldElem>) -> CyclicElem {
        let mut v = self.zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            let k = i % self.n;
            v.0[k] = self.field.fadd(v.0[k], *c);
        }
        v
    }

    pub fn to_poly(&self, a: &CyclicElem) -> Poly<FieldElem> {
        Poly::new(&self.field, a.0.clone())
    }

    fn check(&self, a: &CyclicElem) -> Result<()> {
        if a.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: a.len() });
        }
        Ok(())
    }

    pub fn add(&self, a: &CyclicElem, b: &CyclicElem) -> CyclicElem {
        CyclicElem(a.0.iter().zip(&b.0).map(|(&x, &y)| self.field.fadd(x, y)).collect())
    }

    pub fn sub(&self, a: &CyclicElem, b: &CyclicElem) -> CyclicElem {
        CyclicElem(a.0.iter().zip(&b.0).map(|(&x, &y)| self.field.fsub(x, y)).collect())
    }

    pub fn neg(&self, a: &CyclicElem) -> CyclicElem {
        CyclicElem(a.0.iter().map(|&x| self.field.fneg(x)).collect())
    }

    pub fn scale(&self, a: &CyclicElem, c: FieldElem) -> CyclicElem {
        CyclicElem(a.0.iter().map(|&x| self.field.fmul(x, c)).collect())
    }

    /// Convolution `(ab)_k = sum_{i+j = k mod n} a_i b_j`.
    pub fn mul(&self, a: &CyclicElem, b: &CyclicElem) -> CyclicElem {
        let n = self.n;
        let f = &self.field;
        let mut out = vec![FieldElem::ZERO; n];
        for (i, &x) in a.0.iter().enumerate() {
            if x == FieldElem::ZERO {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                if y == FieldElem::ZERO {
                    continue;
                }
                let k = if i + j >= n { i + j - n } else { i + j };
                out[k] = f.fadd(out[k], f.fmul(x, y));
            }
        }
        CyclicElem(out)
    }

    /// Checked multiplication.
    pub fn try_mul(&self, a: &CyclicElem, b: &CyclicElem) -> Result<CyclicElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// `u^i` times `a`: a cyclic shift.
    pub fn shift(&self, a: &CyclicElem, i: i64) -> CyclicElem {
        let n = self.n;
        let s = i.rem_euclid(n as i64) as usize;
        let mut out = vec![FieldElem::ZERO; n];
        for (j, &c) in a.0.iter().enumerate() {
            out[(j + s) % n] = c;
        }
        CyclicElem(out)
    }

    /// Coefficient of `u^i` moves to `u^{n-i}`.
    pub fn bar(&self, a: &CyclicElem) -> CyclicElem {
        let n = self.n;
        CyclicElem((0..n).map(|i| a.0[(n - i) % n]).collect())
    }

    /// Inverse of `a` inside the component `FH e`, where `e` is the
    /// idempotent attached to the irreducible factor `f`.
    pub fn inv_in_component(&self, a: &CyclicElem, factor: &Poly<FieldElem>, e: &CyclicElem) -> Option<CyclicElem> {
        let pa = self.to_poly(a).rem(&self.field, factor);
        if pa.is_zero() {
            return None;
        }
        let (g, s, _) = pa.ext_gcd(&self.field, factor);
        if g.degree() != Some(0) {
            return None;
        }
        Some(self.mul(&self.from_poly(&s), e))
    }
}

/// How a primitive idempotent behaves under the bar map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Conjugacy {
    SelfConjugate,
    PairedWith(usize),
}

/// The primitive idempotents `e_0, ..., e_l` of FH in canonical factor order.
#[derive(Clone, Debug)]
pub struct IdempotentSet {
    ring: CyclicRing,
    pub idems: Vec<CyclicElem>,
    pub dims: Vec<usize>,
    pub factors: Vec<Poly<FieldElem>>,
    pub cosets: Vec<Vec<usize>>,
}

impl IdempotentSet {
    pub fn ring(&self) -> &CyclicRing {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.idems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idems.is_empty()
    }

    pub fn to_report(&self) -> IdempotentReport {
        let pairing = conj_pairing(self);
        IdempotentReport {
            n: self.ring.n,
            q: self.ring.field.q(),
            idempotents: self.idems.iter().map(|e| e.encodings()).collect(),
            dims: self.dims.clone(),
            factors: self.factors.iter().map(|p| p.coeffs().iter().map(|c| c.0).collect()).collect(),
            cosets: self.cosets.clone(),
            pairing,
        }
    }
}

/// Serializable view of an [`IdempotentSet`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentReport {
    pub n: usize,
    pub q: u32,
    pub idempotents: Vec<Vec<u32>>,
    pub dims: Vec<usize>,
    pub factors: Vec<Vec<u32>>,
    pub cosets: Vec<Vec<usize>>,
    pub pairing: Vec<Conjugacy>,
}

/// One idempotent per irreducible factor `f_i` of x^n - 1, built by CRT:
/// `e_i = 1 mod f_i` and `e_i = 0 mod (x^n - 1)/f_i`.
pub fn primitive_idempotents(n: usize, field: &FieldSpec) -> Result<IdempotentSet> {
    if gcd(n as u64, field.q() as u64) != 1 {
        return Err(Error::GcdViolation { n, q: field.q() as u64 });
    }
    let ring = CyclicRing::new(n, field)?;
    let factored = factor_xn_minus_1_with_cosets(n, field)?;
    let mut xn1 = vec![FieldElem::ZERO; n + 1];
    xn1[0] = field.fneg(FieldElem::ONE);
    xn1[n] = FieldElem::ONE;
    let xn1 = Poly::new(field, xn1);
    let mut idems = Vec::with_capacity(factored.len());
    for (f, _) in &factored {
        let (cofactor, r) = xn1.divrem(field, f);
        debug_assert!(r.is_zero());
        let (g, s, _) = cofactor.ext_gcd(field, f);
        debug_assert_eq!(g.degree(), Some(0));
        idems.push(ring.from_poly(&s.mul(field, &cofactor).rem(field, &xn1)));
    }
    Ok(IdempotentSet {
        ring,
        idems,
        dims: factored.iter().map(|(f, _)| f.degree().unwrap()).collect(),
        factors: factored.iter().map(|(f, _)| f.clone()).collect(),
        cosets: factored.into_iter().map(|(_, c)| c).collect(),
    })
}

/// Bar-classification of every idempotent; index 0 is always self-conjugate.
pub fn conj_pairing(set: &IdempotentSet) -> Vec<Conjugacy> {
    let ring = &set.ring;
    set.idems
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let b = ring.bar(e);
            let j = set.idems.iter().position(|x| *x == b).expect("bar permutes primitive idempotents");
            if i == j {
                Conjugacy::SelfConjugate
            } else {
                Conjugacy::PairedWith(j)
            }
        })
        .collect()
}

/// The smallest multiplicative order of `q` modulo a prime divisor of `n`;
/// equals the smallest dimension of a nontrivial component of FH.
pub fn lambda_n(n: u64, q: u64) -> Result<u64> {
    if n <= 1 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("n = {n} must be odd and > 1")));
    }
    if gcd(n, q) != 1 {
        return Err(Error::GcdViolation { n: n as usize, q });
    }
    distinct_prime_factors(n)
        .into_iter()
        .map(|p| mult_order(q, p))
        .try_fold(u64::MAX, |acc, t| t.map(|t| acc.min(t)))
}
