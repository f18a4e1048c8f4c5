use crate::cyclic::CyclicElem;
use crate::field::FieldOps;

/// A 2x2 matrix `(m[0] m[1]; m[2] m[3])` over a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2<E> {
    pub m: [E; 4],
}

/// Matrices over a block field F_t whose entries live inside FH.
pub type Mat2Ext = Mat2<CyclicElem>;

impl<E: Clone + PartialEq + std::fmt::Debug> Mat2<E> {
    pub fn new(a11: E, a12: E, a21: E, a22: E) -> Self {
        Mat2 { m: [a11, a12, a21, a22] }
    }

    pub fn zero<F: FieldOps<Elem = E>>(f: &F) -> Self {
        Self::new(f.zero(), f.zero(), f.zero(), f.zero())
    }

    pub fn identity<F: FieldOps<Elem = E>>(f: &F) -> Self {
        Self::scalar(f, f.one())
    }

    pub fn scalar<F: FieldOps<Elem = E>>(f: &F, c: E) -> Self {
        Self::new(c.clone(), f.zero(), f.zero(), c)
    }

    pub fn add<F: FieldOps<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        Mat2 { m: std::array::from_fn(|i| f.add(&self.m[i], &o.m[i])) }
    }

    pub fn sub<F: FieldOps<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        Mat2 { m: std::array::from_fn(|i| f.sub(&self.m[i], &o.m[i])) }
    }

    pub fn scale<F: FieldOps<Elem = E>>(&self, f: &F, c: &E) -> Self {
        Mat2 { m: std::array::from_fn(|i| f.mul(&self.m[i], c)) }
    }

    pub fn mul<F: FieldOps<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        let [a, b, c, d] = &self.m;
        let [x, y, z, w] = &o.m;
        let dot = |p: &E, q: &E, r: &E, s: &E| f.add(&f.mul(p, q), &f.mul(r, s));
        Self::new(dot(a, x, b, z), dot(a, y, b, w), dot(c, x, d, z), dot(c, y, d, w))
    }

    pub fn det<F: FieldOps<Elem = E>>(&self, f: &F) -> E {
        f.sub(&f.mul(&self.m[0], &self.m[3]), &f.mul(&self.m[1], &self.m[2]))
    }

    pub fn is_zero<F: FieldOps<Elem = E>>(&self, f: &F) -> bool {
        self.m.iter().all(|x| f.is_zero(x))
    }

    /// Matrix with entries drawn by canonical index.
    pub fn from_indices<F: FieldOps<Elem = E>>(f: &F, idx: [u64; 4]) -> Self {
        Mat2 { m: idx.map(|i| f.element(i)) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldElem, FieldSpec};

    #[test]
    fn ring_axioms_gf3() {
        let f = FieldSpec::prime(3).unwrap();
        let all: Vec<Mat2<FieldElem>> = (0..81u64)
            .map(|k| Mat2::from_indices(&f, [k % 3, k / 3 % 3, k / 9 % 3, k / 27]))
            .collect();
        let id = Mat2::identity(&f);
        for a in all.iter().step_by(7) {
            assert_eq!(a.mul(&f, &id), *a);
            for b in all.iter().step_by(5) {
                assert_eq!(f.mul(&a.det(&f), &b.det(&f)), a.mul(&f, b).det(&f));
                for c in all.iter().step_by(11) {
                    assert_eq!(a.mul(&f, b).mul(&f, c), a.mul(&f, &b.mul(&f, c)));
                    assert_eq!(a.mul(&f, &b.add(&f, c)), a.mul(&f, b).add(&f, &a.mul(&f, c)));
                }
            }
        }
    }
}
