use super::{FieldElem, FieldOps, FieldSpec, Poly};
use crate::error::{Error, Result};

/// The extension GF(q^d) = GF(q)[z]/(h(z)) of a base field, with `h` the
/// smallest monic irreducible of degree `d` in encoding order. Elements are
/// coefficient vectors of length `d` over the base field.
///
/// Used internally as a splitting field for x^n - 1.
#[derive(Clone, Debug)]
pub struct ExtField {
    base: FieldSpec,
    degree: usize,
    modulus: Poly<FieldElem>,
    order: u128,
}

impl ExtField {
    pub fn new(base: &FieldSpec, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter("extension degree must be at least 1".into()));
        }
        let order = (base.q() as u128)
            .checked_pow(degree as u32)
            .ok_or_else(|| Error::Overflow(format!("{}^{}", base.q(), degree)))?;
        let modulus = if degree == 1 {
            Poly::monomial(base, FieldElem::ONE, 1)
        } else {
            smallest_irreducible(base, degree)
        };
        Ok(ExtField { base: base.clone(), degree, modulus, order })
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &Poly<FieldElem> {
        &self.modulus
    }

    pub fn order_u128(&self) -> u128 {
        self.order
    }

    /// Embeds a base-field element.
    pub fn embed(&self, c: FieldElem) -> Vec<FieldElem> {
        let mut v = vec![FieldElem::ZERO; self.degree];
        v[0] = c;
        v
    }

    /// The base-field value of `a` if it lies in the base field.
    pub fn project(&self, a: &[FieldElem]) -> Option<FieldElem> {
        a[1..].iter().all(|c| *c == FieldElem::ZERO).then_some(a[0])
    }

    pub fn pow_u128(&self, a: &Vec<FieldElem>, mut e: u128) -> Vec<FieldElem> {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// The first element in canonical order with multiplicative order
    /// exactly `n`; requires `n | q^d - 1`.
    pub fn primitive_root_of_unity(&self, n: u64) -> Option<Vec<FieldElem>> {
        if !(self.order - 1).is_multiple_of(n as u128) {
            return None;
        }
        let one = self.one();
        if n == 1 {
            return Some(one);
        }
        let cofactor = (self.order - 1) / n as u128;
        let primes = crate::util::distinct_prime_factors(n);
        let limit = self.order.min(u64::MAX as u128) as u64;
        (1..limit).map(|i| self.element(i)).find_map(|x| {
            let y = self.pow_u128(&x, cofactor);
            primes.iter().all(|&r| self.pow(&y, n / r) != one).then_some(y)
        })
    }
}

impl FieldOps for ExtField {
    type Elem = Vec<FieldElem>;

    fn zero(&self) -> Self::Elem {
        vec![FieldElem::ZERO; self.degree]
    }

    fn one(&self) -> Self::Elem {
        self.embed(FieldElem::ONE)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(&x, &y)| self.base.fadd(x, y)).collect()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(&x, &y)| self.base.fsub(x, y)).collect()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|&x| self.base.fneg(x)).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let d = self.degree;
        let f = &self.base;
        let mut prod = vec![FieldElem::ZERO; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == FieldElem::ZERO {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = f.fadd(prod[i + j], f.fmul(x, y));
            }
        }
        let h = self.modulus.coeffs();
        for k in (d..prod.len()).rev() {
            let c = prod[k];
            if c == FieldElem::ZERO {
                continue;
            }
            for (i, &hc) in h[..d].iter().enumerate() {
                let idx = k - d + i;
                prod[idx] = f.fsub(prod[idx], f.fmul(c, hc));
            }
        }
        prod.truncate(d);
        prod
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(a) {
            return None;
        }
        let pa = Poly::new(&self.base, a.clone());
        let (g, s, _) = pa.ext_gcd(&self.base, &self.modulus);
        debug_assert_eq!(g.degree(), Some(0));
        let mut v = s.into_coeffs();
        v.resize(self.degree, FieldElem::ZERO);
        Some(v)
    }

    fn characteristic(&self) -> u32 {
        self.base.p()
    }

    /// Saturates at `u64::MAX`; see [`ExtField::order_u128`].
    fn order(&self) -> u64 {
        self.order.min(u64::MAX as u128) as u64
    }

    fn element(&self, mut index: u64) -> Self::Elem {
        let q = self.base.q() as u64;
        (0..self.degree)
            .map(|_| {
                let c = FieldElem((index % q) as u32);
                index /= q;
                c
            })
            .collect()
    }

    fn index_of(&self, a: &Self::Elem) -> u64 {
        let q = self.base.q() as u64;
        a.iter().rev().fold(0u64, |acc, c| acc.wrapping_mul(q).wrapping_add(c.0 as u64))
    }

    fn from_int(&self, k: i64) -> Self::Elem {
        self.embed(self.base.int(k))
    }
}

/// Smallest monic irreducible polynomial of degree `d` over `base`, ordered
/// by the integer encoding of its lower coefficients.
pub(crate) fn smallest_irreducible(base: &FieldSpec, d: usize) -> Poly<FieldElem> {
    let q = base.q() as u128;
    let mut code: u128 = 0;
    loop {
        let mut c = Vec::with_capacity(d + 1);
        let mut x = code;
        for _ in 0..d {
            c.push(FieldElem((x % q) as u32));
            x /= q;
        }
        c.push(FieldElem::ONE);
        let poly = Poly::new(base, c);
        if poly.is_irreducible(base) {
            return poly;
        }
        code += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extension_is_a_field() {
        let base = FieldSpec::prime(3).unwrap();
        let ext = ExtField::new(&base, 2).unwrap();
        assert_eq!(ext.order(), 9);
        for i in 1..9 {
            let a = ext.element(i);
            assert_eq!(ext.mul(&a, &ext.inv(&a).unwrap()), ext.one());
            assert_eq!(ext.index_of(&a), i);
        }
    }

    #[test]
    fn root_of_unity_has_exact_order() {
        let base = FieldSpec::prime(2).unwrap();
        let ext = ExtField::new(&base, 3).unwrap();
        let z = ext.primitive_root_of_unity(7).unwrap();
        let one = ext.one();
        assert_eq!(ext.pow(&z, 7), one);
        assert_ne!(z, one);
    }

    #[test]
    fn large_order_uses_wide_integers() {
        let base = FieldSpec::prime(13).unwrap();
        let ext = ExtField::new(&base, 30).unwrap();
        assert_eq!(ext.order_u128(), 13u128.pow(30));
        let z = ext.primitive_root_of_unity(31).unwrap();
        assert_eq!(ext.pow(&z, 31), ext.one());
    }
}
