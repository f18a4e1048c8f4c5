use crate::cyclic::{CyclicElem, CyclicRing};
use crate::field::{FieldElem, FieldOps, Poly};
use crate::linalg;

/// A subfield of FH living inside a component `FH e`, presented by a power
/// basis `e, t, t^2, ..., t^{k-1}` of a generator `t`. Elements are stored as
/// elements of FH, so products are plain convolutions.
#[derive(Clone, Debug)]
pub struct SubField {
    ring: CyclicRing,
    e: CyclicElem,
    factor: Poly<FieldElem>,
    basis: Vec<CyclicElem>,
    pivots: Vec<usize>,
    coord_inv: Vec<Vec<FieldElem>>,
    order: u64,
}

impl SubField {
    /// `e` is the primitive idempotent of the component, `factor` the
    /// irreducible factor of x^n - 1 it belongs to, `generator` an element of
    /// `FH e` of degree `k` over F.
    pub fn new(ring: &CyclicRing, e: &CyclicElem, factor: &Poly<FieldElem>, generator: &CyclicElem, k: usize) -> Self {
        let f = ring.field();
        let mut basis = Vec::with_capacity(k);
        let mut cur = e.clone();
        for _ in 0..k {
            basis.push(cur.clone());
            cur = ring.mul(&cur, generator);
        }
        let mut rows: Vec<Vec<FieldElem>> = basis.iter().map(|b| b.0.clone()).collect();
        let pivots = linalg::rref(f, &mut rows);
        assert_eq!(pivots.len(), k, "power basis is not independent");
        let square: Vec<Vec<FieldElem>> =
            basis.iter().map(|b| pivots.iter().map(|&p| b.0[p]).collect()).collect();
        let coord_inv = linalg::invert(f, &square).expect("pivot minor is invertible");
        let order = (f.q() as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
        SubField { ring: ring.clone(), e: e.clone(), factor: factor.clone(), basis, pivots, coord_inv, order }
    }

    pub fn ring(&self) -> &CyclicRing {
        &self.ring
    }

    /// Degree over the base field.
    pub fn k(&self) -> usize {
        self.basis.len()
    }

    pub fn idempotent(&self) -> &CyclicElem {
        &self.e
    }

    pub fn factor(&self) -> &Poly<FieldElem> {
        &self.factor
    }

    pub fn basis(&self) -> &[CyclicElem] {
        &self.basis
    }

    /// Coordinates in the power basis, assuming membership.
    pub fn coords(&self, a: &CyclicElem) -> Vec<FieldElem> {
        let f = self.ring.field();
        let restricted: Vec<FieldElem> = self.pivots.iter().map(|&p| a.0[p]).collect();
        (0..self.k())
            .map(|j| {
                restricted
                    .iter()
                    .zip(&self.coord_inv)
                    .fold(FieldElem::ZERO, |acc, (&x, row)| f.fadd(acc, f.fmul(x, row[j])))
            })
            .collect()
    }

    pub fn from_coords(&self, c: &[FieldElem]) -> CyclicElem {
        let r = &self.ring;
        c.iter().zip(&self.basis).fold(r.zero(), |acc, (&x, b)| r.add(&acc, &r.scale(b, x)))
    }

    pub fn contains(&self, a: &CyclicElem) -> bool {
        a.len() == self.ring.n() && self.from_coords(&self.coords(a)) == *a
    }

    /// Embeds a base-field scalar.
    pub fn scalar(&self, c: FieldElem) -> CyclicElem {
        self.ring.scale(&self.e, c)
    }

    /// Integer encoding `sum c_j q^j` of the power-basis coordinates; used
    /// for reports.
    pub fn encode(&self, a: &CyclicElem) -> u64 {
        self.index_of(a)
    }
}

impl FieldOps for SubField {
    type Elem = CyclicElem;

    fn zero(&self) -> CyclicElem {
        self.ring.zero()
    }
    fn one(&self) -> CyclicElem {
        self.e.clone()
    }
    fn add(&self, a: &CyclicElem, b: &CyclicElem) -> CyclicElem {
        self.ring.add(a, b)
    }
    fn sub(&self, a: &CyclicElem, b: &CyclicElem) -> CyclicElem {
        self.ring.sub(a, b)
    }
    fn neg(&self, a: &CyclicElem) -> CyclicElem {
        self.ring.neg(a)
    }
    fn mul(&self, a: &CyclicElem, b: &CyclicElem) -> CyclicElem {
        self.ring.mul(a, b)
    }
    fn inv(&self, a: &CyclicElem) -> Option<CyclicElem> {
        self.ring.inv_in_component(a, &self.factor, &self.e)
    }
    fn is_zero(&self, a: &CyclicElem) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u32 {
        self.ring.field().p()
    }
    fn order(&self) -> u64 {
        self.order
    }
    fn element(&self, mut index: u64) -> CyclicElem {
        let q = self.ring.field().q() as u64;
        let coords: Vec<FieldElem> = (0..self.k())
            .map(|_| {
                let c = FieldElem((index % q) as u32);
                index /= q;
                c
            })
            .collect();
        self.from_coords(&coords)
    }
    fn index_of(&self, a: &CyclicElem) -> u64 {
        let q = self.ring.field().q() as u64;
        self.coords(a).iter().rev().fold(0u64, |acc, c| acc.wrapping_mul(q).wrapping_add(c.0 as u64))
    }
    fn from_int(&self, k: i64) -> CyclicElem {
        self.scalar(self.ring.field().int(k))
    }
}
