use std::fmt;

use super::FieldOps;

/// A polynomial over a field, coefficients lowest degree first, trailing
/// zeros trimmed. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: fmt::Debug> fmt::Debug for Poly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<E: Clone + PartialEq + fmt::Debug> Poly<E> {
    pub fn new<F: FieldOps<Elem = E>>(field: &F, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant<F: FieldOps<Elem = E>>(field: &F, c: E) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one<F: FieldOps<Elem = E>>(field: &F) -> Self {
        Self::constant(field, field.one())
    }

    /// `c * x^k`.
    pub fn monomial<F: FieldOps<Elem = E>>(field: &F, c: E, k: usize) -> Self {
        let mut v = vec![field.zero(); k + 1];
        v[k] = c;
        Self::new(field, v)
    }

    /// `x - c`.
    pub fn linear<F: FieldOps<Elem = E>>(field: &F, c: &E) -> Self {
        Self::new(field, vec![field.neg(c), field.one()])
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff<F: FieldOps<Elem = E>>(&self, field: &F, i: usize) -> E {
        self.coeffs.get(i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn add<F: FieldOps<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let v = (0..len).map(|i| field.add(&self.coeff(field, i), &other.coeff(field, i))).collect();
        Self::new(field, v)
    }

    pub fn sub<F: FieldOps<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let v = (0..len).map(|i| field.sub(&self.coeff(field, i), &other.coeff(field, i))).collect();
        Self::new(field, v)
    }

    pub fn scale<F: FieldOps<Elem = E>>(&self, field: &F, c: &E) -> Self {
        Self::new(field, self.coeffs.iter().map(|x| field.mul(x, c)).collect())
    }

    pub fn mul<F: FieldOps<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = field.add(&v[i + j], &field.mul(a, b));
            }
        }
        Self::new(field, v)
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn divrem<F: FieldOps<Elem = E>>(&self, field: &F, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = field.inv(divisor.leading().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![field.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = field.mul(&rem[k], &lead_inv);
            if field.is_zero(&c) {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + i;
                rem[idx] = field.sub(&rem[idx], &field.mul(&c, d));
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        (Self::new(field, quot), Self::new(field, rem))
    }

    pub fn rem<F: FieldOps<Elem = E>>(&self, field: &F, divisor: &Self) -> Self {
        self.divrem(field, divisor).1
    }

    pub fn monic<F: FieldOps<Elem = E>>(&self, field: &F) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(field, &field.inv(l).unwrap()),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd<F: FieldOps<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(field, &b);
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd<F: FieldOps<Elem = E>>(&self, field: &F, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(field), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one(field));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(field, &r1);
            let s2 = s0.sub(field, &q.mul(field, &s1));
            let t2 = t0.sub(field, &q.mul(field, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = field.inv(l).unwrap();
                (r0.scale(field, &li), s0.scale(field, &li), t0.scale(field, &li))
            }
        }
    }

    pub fn mulmod<F: FieldOps<Elem = E>>(&self, field: &F, other: &Self, modulus: &Self) -> Self {
        self.mul(field, other).rem(field, modulus)
    }

    pub fn powmod<F: FieldOps<Elem = E>>(&self, field: &F, mut e: u64, modulus: &Self) -> Self {
        let mut acc = Self::one(field).rem(field, modulus);
        let mut base = self.rem(field, modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(field, &base, modulus);
            }
            base = base.mulmod(field, &base, modulus);
            e >>= 1;
        }
        acc
    }

    pub fn eval<F: FieldOps<Elem = E>>(&self, field: &F, x: &E) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
    }

    /// Rabin's irreducibility test over a field of order `field.order()`.
    pub fn is_irreducible<F: FieldOps<Elem = E>>(&self, field: &F) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        let h = self.monic(field);
        let q = field.order();
        let x = Self::monomial(field, field.one(), 1);
        // x^{q^i} mod h for i = 1..=d
        let mut powers = Vec::with_capacity(d);
        let mut cur = x.clone();
        for _ in 0..d {
            cur = cur.powmod(field, q, &h);
            powers.push(cur.clone());
        }
        if powers[d - 1] != x.rem(field, &h) {
            return false;
        }
        for r in crate::util::distinct_prime_factors(d as u64) {
            let i = d / r as usize;
            let diff = powers[i - 1].sub(field, &x);
            if h.gcd(field, &diff).degree() != Some(0) {
                return false;
            }
        }
        true
    }
}
