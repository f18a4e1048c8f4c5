//! Exact arithmetic in GF(p^m), polynomials over it, and the cyclotomic
//! machinery (multiplicative orders, q-cyclotomic cosets, factorization of
//! x^n - 1).
//!
//! Elements of GF(p^m) are stored by their integer encoding
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`, where `c_i` are the coefficients of
//! the element in the polynomial basis of the modulus. The same encoding is
//! the canonical enumeration order and the on-disk format.

mod cyclotomic;
mod ext;
mod poly;

pub use cyclotomic::{cyclotomic_cosets, factor_xn_minus_1, factor_xn_minus_1_with_cosets, mult_order};
pub use ext::ExtField;
pub use poly::Poly;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::util;

/// Largest field order backed by lookup tables.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Orders up to this size also get a full addition table.
const ADD_TABLE_LIMIT: u32 = 1024;

/// Operations shared by every field the crate computes in: the base field
/// GF(q), its splitting extensions, and the subfields F_t living inside the
/// cyclic group algebra.
pub trait FieldOps {
    type Elem: Clone + PartialEq + Eq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn characteristic(&self) -> u32;
    /// Number of elements.
    fn order(&self) -> u64;
    /// The element with canonical index `index` (`0` is zero, `1` is one).
    fn element(&self, index: u64) -> Self::Elem;
    fn index_of(&self, a: &Self::Elem) -> u64;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn from_int(&self, k: i64) -> Self::Elem {
        let p = self.characteristic() as i64;
        let r = k.rem_euclid(p) as u64;
        // r * 1 computed by doubling to stay generic
        let mut acc = self.zero();
        let mut base = self.one();
        let mut e = r;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
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

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    /// All elements in canonical order.
    fn elements(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_> {
        Box::new((0..self.order()).map(move |i| self.element(i)))
    }
}

/// An element of GF(p^m), stored by its integer encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElem(pub u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn encoding(self) -> u32 {
        self.0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    /// Coefficients of the monic modulus over GF(p), lowest degree first.
    modulus: Vec<u32>,
    /// exp[i] = g^i for a primitive element g, doubled to skip a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Vec<u32>,
}

/// A validated description of GF(p^m) together with its arithmetic tables.
///
/// Cloning is cheap; all clones share one set of tables.
#[derive(Clone)]
pub struct FieldSpec(Arc<Tables>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.0.p, self.0.m, self.0.modulus)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.m)
        }
    }
}

impl FieldSpec {
    /// Builds GF(p^m). When `modulus` is `None` the lexicographically smallest
    /// monic irreducible polynomial of degree `m` is used; the modulus is given
    /// as coefficients over GF(p), lowest degree first, including the leading 1.
    pub fn new(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !util::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidParameter("extension degree must be at least 1".into()));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| Error::Overflow(format!("{p}^{m}")))?;
        let p32 = p as u32;
        let modulus = match modulus {
            Some(c) => {
                if c.len() != m as usize + 1 || c[m as usize] != 1 || c.iter().any(|&x| x >= p32) {
                    return Err(Error::BadModulus { expected: m as usize });
                }
                if m > 1 && !modulus_is_irreducible(p32, c) {
                    return Err(Error::ReducibleModulus { p: p32 });
                }
                c.to_vec()
            }
            None if m == 1 => vec![0, 1],
            None => smallest_irreducible(p32, m as usize),
        };
        Ok(FieldSpec(Arc::new(build_tables(p32, m, q as u32, modulus))))
    }

    /// GF(p).
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// GF(q) for a prime power `q`, with the canonical modulus.
    pub fn from_order(q: u64) -> Result<Self> {
        let (p, m) = util::prime_power(q)
            .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        Self::new(p, m, None)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// Coefficients of `a` in the polynomial basis (length `m`).
    pub fn coeffs(&self, a: FieldElem) -> Vec<u32> {
        let p = self.0.p;
        let mut x = a.0;
        (0..self.0.m)
            .map(|_| {
                let c = x % p;
                x /= p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElem {
        let p = self.0.p;
        FieldElem(coeffs.iter().rev().fold(0, |acc, &c| acc * p + c % p))
    }

    /// Embeds an integer through the prime subfield.
    pub fn int(&self, k: i64) -> FieldElem {
        FieldElem(k.rem_euclid(self.0.p as i64) as u32)
    }

    #[inline]
    pub fn fadd(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let t = &*self.0;
        if t.m == 1 {
            let s = a.0 + b.0;
            FieldElem(if s >= t.p { s - t.p } else { s })
        } else if !t.add.is_empty() {
            FieldElem(t.add[(a.0 * t.q + b.0) as usize])
        } else {
            self.add_digits(a, b)
        }
    }

    #[inline]
    pub fn fneg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn fsub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.fadd(a, self.fneg(b))
    }

    #[inline]
    pub fn fmul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        let t = &*self.0;
        FieldElem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
    }

    #[inline]
    pub fn finv(&self, a: FieldElem) -> Option<FieldElem> {
        if a.0 == 0 {
            return None;
        }
        let t = &*self.0;
        let l = t.log[a.0 as usize];
        Some(FieldElem(t.exp[((t.q - 1 - l) % (t.q - 1)) as usize]))
    }

    pub fn fpow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem::ONE;
        }
        if a.0 == 0 {
            return FieldElem::ZERO;
        }
        let t = &*self.0;
        let ord = (t.q - 1) as u64;
        let l = (t.log[a.0 as usize] as u64 * (e % ord)) % ord;
        FieldElem(t.exp[l as usize])
    }

    fn add_digits(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.0.p;
        let (mut x, mut y, mut out, mut scale) = (a.0, b.0, 0u32, 1u32);
        for _ in 0..self.0.m {
            out += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale = scale.wrapping_mul(p);
        }
        FieldElem(out)
    }

    /// Iterator over all elements in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.0.q).map(FieldElem)
    }

    /// Iterator over the nonzero elements.
    pub fn units(&self) -> impl Iterator<Item = FieldElem> {
        (1..self.0.q).map(FieldElem)
    }
}

impl FieldOps for FieldSpec {
    type Elem = FieldElem;

    fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }
    fn one(&self) -> FieldElem {
        FieldElem::ONE
    }
    fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.fadd(*a, *b)
    }
    fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.fsub(*a, *b)
    }
    fn neg(&self, a: &FieldElem) -> FieldElem {
        self.fneg(*a)
    }
    fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.fmul(*a, *b)
    }
    fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        self.finv(*a)
    }
    fn characteristic(&self) -> u32 {
        self.0.p
    }
    fn order(&self) -> u64 {
        self.0.q as u64
    }
    fn element(&self, index: u64) -> FieldElem {
        debug_assert!(index < self.0.q as u64);
        FieldElem(index as u32)
    }
    fn index_of(&self, a: &FieldElem) -> u64 {
        a.0 as u64
    }
    fn is_zero(&self, a: &FieldElem) -> bool {
        a.0 == 0
    }
    fn from_int(&self, k: i64) -> FieldElem {
        self.int(k)
    }
    fn pow(&self, a: &FieldElem, e: u64) -> FieldElem {
        self.fpow(*a, e)
    }
}

/// The first `r` in canonical order with `r^2 = -1`, if one exists.
///
/// One exists exactly when `q` is even or `4 | q - 1`.
pub fn sqrt_minus_one(field: &FieldSpec) -> Option<FieldElem> {
    let minus_one = field.fneg(FieldElem::ONE);
    field.iter().find(|&r| field.fmul(r, r) == minus_one)
}

/// A square root of `a` in a field of odd characteristic (Tonelli-Shanks),
/// or `None` if `a` is a non-square. In characteristic 2 every element is a
/// square and the root is `a^{q/2}`.
pub fn sqrt<F: FieldOps>(field: &F, a: &F::Elem) -> Option<F::Elem> {
    if field.is_zero(a) {
        return Some(field.zero());
    }
    let q = field.order();
    if field.characteristic() == 2 {
        return Some(field.pow(a, q / 2));
    }
    let one = field.one();
    let minus_one = field.neg(&one);
    let half = (q - 1) / 2;
    if field.pow(a, half) != one {
        return None;
    }
    let (mut s, mut odd) = (0u32, q - 1);
    while odd % 2 == 0 {
        odd /= 2;
        s += 1;
    }
    let z = (2..q)
        .map(|i| field.element(i))
        .find(|z| field.pow(z, half) == minus_one)
        .expect("odd-order fields have non-squares");
    let mut m = s;
    let mut c = field.pow(&z, odd);
    let mut t = field.pow(a, odd);
    let mut r = field.pow(a, odd.div_ceil(2));
    while t != one {
        let mut i = 0;
        let mut t2 = t.clone();
        while t2 != one {
            t2 = field.square(&t2);
            i += 1;
        }
        let mut b = c.clone();
        for _ in 0..(m - i - 1) {
            b = field.square(&b);
        }
        m = i;
        c = field.square(&b);
        t = field.mul(&t, &c);
        r = field.mul(&r, &b);
    }
    Some(r)
}

// Multiplication of encoded elements by schoolbook polynomial arithmetic,
// used only while building the tables.
fn slow_mul(p: u32, modulus: &[u32], a: u32, b: u32) -> u32 {
    let m = modulus.len() - 1;
    let digits = |mut x: u32| {
        let mut d = vec![0u64; m];
        for di in d.iter_mut() {
            *di = (x % p) as u64;
            x /= p;
        }
        d
    };
    let (da, db) = (digits(a), digits(b));
    let p64 = p as u64;
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p64;
        }
    }
    for k in (m..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for (i, &mc) in modulus[..m].iter().enumerate() {
            let idx = k - m + i;
            prod[idx] = (prod[idx] + p64 - (c * mc as u64) % p64) % p64;
        }
    }
    prod[..m].iter().rev().fold(0u32, |acc, &c| acc * p + c as u32)
}

fn build_tables(p: u32, m: u32, q: u32, modulus: Vec<u32>) -> Tables {
    let mul = |a: u32, b: u32| -> u32 {
        if m == 1 {
            ((a as u64 * b as u64) % p as u64) as u32
        } else {
            slow_mul(p, &modulus, a, b)
        }
    };
    let order = (q - 1) as u64;
    let factors = util::distinct_prime_factors(order);
    let pow = |a: u32, mut e: u64| {
        let (mut acc, mut base) = (1u32, a);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    };
    let generator = (1..q)
        .find(|&g| factors.iter().all(|&r| pow(g, order / r) != 1))
        .expect("multiplicative group of a finite field is cyclic");

    let mut exp = vec![0u32; 2 * (q as usize - 1)];
    let mut log = vec![0u32; q as usize];
    let mut x = 1u32;
    for i in 0..(q - 1) as usize {
        exp[i] = x;
        log[x as usize] = i as u32;
        x = mul(x, generator);
    }
    for i in (q - 1) as usize..exp.len() {
        exp[i] = exp[i - (q - 1) as usize];
    }

    let digit_neg = |mut a: u32| {
        let (mut out, mut scale) = (0u32, 1u32);
        for _ in 0..m {
            out += ((p - a % p) % p) * scale;
            a /= p;
            scale = scale.wrapping_mul(p);
        }
        out
    };
    let neg: Vec<u32> = (0..q).map(digit_neg).collect();

    let mut add = Vec::new();
    if m > 1 && q <= ADD_TABLE_LIMIT {
        add = vec![0u32; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                let (mut x, mut y, mut out, mut scale) = (a, b, 0, 1);
                for _ in 0..m {
                    out += ((x % p + y % p) % p) * scale;
                    x /= p;
                    y /= p;
                    scale *= p;
                }
                add[(a * q + b) as usize] = out;
            }
        }
    }
    Tables { p, m, q, modulus, exp, log, neg, add }
}

fn modulus_is_irreducible(p: u32, coeffs: &[u32]) -> bool {
    let gf_p = FieldSpec(Arc::new(build_tables(p, 1, p, vec![0, 1])));
    let poly = Poly::new(&gf_p, coeffs.iter().map(|&c| FieldElem(c)).collect());
    poly.is_irreducible(&gf_p)
}

/// Smallest monic irreducible of degree `m` over GF(p) in the order of the
/// integer encoding `sum c_i p^i` (leading coefficient excluded).
fn smallest_irreducible(p: u32, m: usize) -> Vec<u32> {
    let gf_p = FieldSpec(Arc::new(build_tables(p, 1, p, vec![0, 1])));
    let total = (p as u64).pow(m as u32);
    for code in 0..total {
        let mut c = Vec::with_capacity(m + 1);
        let mut x = code;
        for _ in 0..m {
            c.push((x % p as u64) as u32);
            x /= p as u64;
        }
        c.push(1);
        let poly = Poly::new(&gf_p, c.iter().map(|&v| FieldElem(v)).collect());
        if poly.is_irreducible(&gf_p) {
            return c;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
