//! Dihedral codes: the orthogonality counterexample, simple left ideals of a
//! paired block, the `ab = 0` classification and the count of the codes
//! `A_0 ê_0 + A_1 f_{a_1 b_1} + ... + A_m f_{a_m b_m}`.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{decompose_twisted, AlgElem, Algebra, ComponentKind, Decomposition, Mat2, Twist};
use crate::code::LinearCode;
use crate::cyclic::primitive_idempotents;
use crate::error::{Error, Result};
use crate::field::{mult_order, FieldElem, FieldOps, FieldSpec};
use crate::linalg::{self, EchelonBasis};

/// Outcome of the orthogonality counterexample over GF(7) with n = 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    /// The computed idempotents equal `5(1+u+u^2)`, `5(1+2u+4u^2)`, `5(1+4u+2u^2)`.
    pub idempotents_match: bool,
    pub e0: Vec<u32>,
    pub e: Vec<u32>,
    pub e_bar: Vec<u32>,
    /// `dim_F C` for `C = D = A_1 e`.
    pub dim_c: usize,
    /// Every product `x bar(y)` with `x in C`, `y in D` vanishes.
    pub c_bar_d_zero: bool,
    /// Every Euclidean inner product between C and D vanishes.
    pub inner_zero: bool,
    /// `dim_F bar(D) C`.
    pub bar_d_c_dim: usize,
    /// `ē (ē v) e`, which equals `ē v`.
    pub witness_a: Vec<u32>,
    pub witness_b: Vec<u32>,
    pub witness_is_e_bar_v: bool,
    pub bar_d_c_nonzero: bool,
}

impl CounterexampleReport {
    /// Whether the orthogonality `<C, D> = 0` holds while `bar(D) C != 0`.
    pub fn holds(&self) -> bool {
        self.idempotents_match
            && self.c_bar_d_zero
            && self.inner_zero
            && self.witness_is_e_bar_v
            && self.bar_d_c_nonzero
    }
}

/// Spanning set of the left ideal generated by `gens`, as algebra elements.
fn ideal_basis(alg: &Algebra, gens: &[AlgElem]) -> Vec<AlgElem> {
    alg.left_ideal_rows(gens).iter().map(|r| alg.from_word(r).expect("row has length 2n")).collect()
}

fn products_span(alg: &Algebra, xs: &[AlgElem], ys: &[AlgElem]) -> usize {
    let mut basis = EchelonBasis::new(2 * alg.n());
    for x in xs {
        for y in ys {
            basis.insert(alg.field(), &alg.to_word(&alg.mul(x, y)));
        }
    }
    basis.dim()
}

/// Checks that `C = D = A_1 e` satisfies `C bar(D) = 0` and `<C, D> = 0`
/// while `bar(D) C` contains `ē v != 0`.
pub fn counterexample_check() -> Result<CounterexampleReport> {
    let f = FieldSpec::prime(7)?;
    let alg = Algebra::dihedral(3, &f)?;
    let ring = alg.ring();
    let set = primitive_idempotents(3, &f)?;
    let [e0, e, e_bar] = [0, 1, 2].map(|i| set.idems[i].clone());
    let fixture = |c: [u32; 3]| ring.scale(&ring.from_coeffs(c.map(FieldElem).to_vec()).unwrap(), FieldElem(5));
    let idempotents_match = e0 == fixture([1, 1, 1]) && e == fixture([1, 2, 4]) && e_bar == fixture([1, 4, 2]);

    let ge = alg.embed(e.clone());
    let c = ideal_basis(&alg, std::slice::from_ref(&ge));
    let bar_d: Vec<AlgElem> = c.iter().map(|y| alg.bar(y)).collect();
    let c_bar_d_zero = products_span(&alg, &c, &bar_d) == 0;
    let inner_zero = c.iter().all(|x| c.iter().all(|y| alg.inner(x, y) == FieldElem::ZERO));
    let bar_d_c_dim = products_span(&alg, &bar_d, &c);

    let e_bar_v = alg.embed_w(e_bar.clone());
    let witness = alg.mul(&alg.mul(&alg.embed(e_bar), &e_bar_v), &ge);
    Ok(CounterexampleReport {
        idempotents_match,
        e0: e0.encodings(),
        e: e.encodings(),
        e_bar: set.idems[2].encodings(),
        dim_c: c.len(),
        c_bar_d_zero,
        inner_zero,
        bar_d_c_dim,
        witness_is_e_bar_v: witness == e_bar_v,
        bar_d_c_nonzero: !alg.is_zero(&witness) && bar_d_c_dim > 0,
        witness_a: witness.a.encodings(),
        witness_b: witness.b.encodings(),
    })
}

/// `ê_0 = e_0 + e_0 v`.
pub fn hat_e0(dec: &Decomposition) -> AlgElem {
    let e0 = &dec.components[0].idempotent;
    AlgElem { a: e0.clone(), b: e0.clone() }
}

fn paired_field(dec: &Decomposition, t: usize) -> Result<&crate::algebra::SubField> {
    let comp = dec.component(t)?;
    match comp.kind {
        ComponentKind::Paired { .. } => Ok(comp.subfield.as_ref().unwrap()),
        _ => Err(Error::NotPaired(t)),
    }
}

/// The element of a paired block corresponding to `(a b; 0 0)`, with `a`, `b`
/// given by their indices in `F_t`.
pub fn f_ab(dec: &Decomposition, t: usize, a: u64, b: u64) -> Result<AlgElem> {
    let sub = paired_field(dec, t)?;
    if a == 0 && b == 0 {
        return Err(Error::ZeroGenerator);
    }
    let m = Mat2::new(sub.element(a), sub.element(b), sub.zero(), sub.zero());
    dec.iso_from_mat2(t, &m)
}

/// Projective representatives `(a, 1)` for `a in F_t` in index order, then `(1, 0)`.
pub fn projective_points(order: u64) -> impl Iterator<Item = (u64, u64)> {
    (0..order).map(|a| (a, 1)).chain(std::iter::once((1, 0)))
}

/// The `|F_t| + 1` simple left ideals `A_t f_{a1}` and `A_t f_{10}` of a
/// paired block.
pub fn enumerate_simple_left_ideals(dec: &Decomposition, t: usize) -> Result<Vec<LinearCode>> {
    let order = paired_field(dec, t)?.order();
    projective_points(order)
        .map(|(a, b)| {
            let g = f_ab(dec, t, a, b)?;
            LinearCode::from_rows(dec.field(), 2 * dec.n(), dec.algebra.left_ideal_rows(&[g]))
        })
        .collect()
}

/// Orthogonality type of `A_t f_{ab}` inside its block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockClass {
    SelfOrthogonalInBlock,
    LcdInBlock,
}

/// Classifies `A_t f_{ab}` by the rule: always self-orthogonal in
/// characteristic 2, otherwise self-orthogonal iff `ab = 0` and LCD otherwise.
pub fn classify_cab(dec: &Decomposition, t: usize, a: u64, b: u64) -> Result<BlockClass> {
    paired_field(dec, t)?;
    if a == 0 && b == 0 {
        return Err(Error::ZeroGenerator);
    }
    Ok(if dec.field().p() == 2 || a == 0 || b == 0 {
        BlockClass::SelfOrthogonalInBlock
    } else {
        BlockClass::LcdInBlock
    })
}

/// Classifies `A_t f_{ab}` from its hull; `None` if it is neither.
pub fn classify_cab_by_hull(dec: &Decomposition, t: usize, a: u64, b: u64) -> Result<Option<BlockClass>> {
    let g = f_ab(dec, t, a, b)?;
    let code = LinearCode::from_rows(dec.field(), 2 * dec.n(), dec.algebra.left_ideal_rows(&[g]))?;
    let h = code.hull_dimension();
    Ok(if h == code.k_dim() {
        Some(BlockClass::SelfOrthogonalInBlock)
    } else if h == 0 {
        Some(BlockClass::LcdInBlock)
    } else {
        None
    })
}

/// The code `A_0 ê_0 + sum_t A_t f_{a_t b_t}`, one `(a_t, b_t)` per block.
pub fn cab_code(dec: &Decomposition, ab: &[(u64, u64)]) -> Result<LinearCode> {
    let blocks = dec.blocks();
    if ab.len() != blocks.len() {
        return Err(Error::DimensionMismatch { expected: blocks.len(), got: ab.len() });
    }
    let mut gens = vec![hat_e0(dec)];
    for (c, &(a, b)) in blocks.iter().zip(ab) {
        gens.push(f_ab(dec, c.index, a, b)?);
    }
    LinearCode::from_rows(dec.field(), 2 * dec.n(), dec.algebra.left_ideal_rows(&gens))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockInfo {
    pub index: usize,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum CountVerification {
    /// Every code built; `distinct` and `lcd` counted from hulls.
    Exhaustive { built: u128, distinct: u128, lcd: u128, all_dim_n: bool },
    /// Random nonzero `(a_t, b_t)` per block, predicted class against hull.
    Sampled { samples: usize, seed: u64, agree: usize, all_dim_n: bool },
}

impl CountVerification {
    pub fn passed(&self, total: u128, lcd_total: u128) -> bool {
        match *self {
            CountVerification::Exhaustive { built, distinct, lcd, all_dim_n } => {
                built == total && distinct == total && lcd == lcd_total && all_dim_n
            }
            CountVerification::Sampled { samples, agree, all_dim_n, .. } => agree == samples && all_dim_n,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub n: usize,
    pub q: u32,
    pub blocks: Vec<BlockInfo>,
    /// `prod (q^{k_t} + 1)`.
    pub total: u128,
    /// `prod (q^{k_t} - 1)`.
    pub lcd: u128,
    pub verifications: Vec<CountVerification>,
}

impl CountReport {
    pub fn passed(&self) -> bool {
        !self.verifications.is_empty() && self.verifications.iter().all(|v| v.passed(self.total, self.lcd))
    }
}

/// Largest `prod (q^{k_t} + 1)` that is checked exhaustively.
pub const EXHAUSTIVE_COUNT_LIMIT: u128 = 10_000;

/// Counts the codes `C_ab` by formula and verifies the count exhaustively
/// when it is at most [`EXHAUSTIVE_COUNT_LIMIT`], plus `samples` random
/// `(a, b)` choices checked against the hull.
pub fn count_cab_codes(n: usize, field: &FieldSpec, samples: usize, seed: u64) -> Result<CountReport> {
    let q = field.q();
    if q.is_multiple_of(2) {
        return Err(Error::HypothesisUnmet(format!("q = {q} is even")));
    }
    let ord = mult_order(q as u64, n as u64)?;
    if ord % 2 == 0 {
        return Err(Error::HypothesisUnmet(format!("ord_{n}({q}) = {ord} is even")));
    }
    let dec = decompose_twisted(n, field, Twist::Dihedral)?;
    let blocks: Vec<BlockInfo> = dec.blocks().iter().map(|c| BlockInfo { index: c.index, k: c.k }).collect();
    let sizes: Vec<u128> = blocks.iter().map(|b| (q as u128).saturating_pow(b.k as u32)).collect();
    let total = sizes.iter().fold(1u128, |acc, s| acc.saturating_mul(s + 1));
    let lcd = sizes.iter().fold(1u128, |acc, s| acc.saturating_mul(s - 1));

    let mut verifications = Vec::new();
    if total <= EXHAUSTIVE_COUNT_LIMIT {
        verifications.push(exhaustive_count(&dec, &sizes, total)?);
    }
    if samples > 0 {
        verifications.push(sampled_count(&dec, &sizes, samples, seed)?);
    }
    Ok(CountReport { n, q, blocks, total, lcd, verifications })
}

fn exhaustive_count(dec: &Decomposition, sizes: &[u128], total: u128) -> Result<CountVerification> {
    let points: Vec<Vec<(u64, u64)>> = sizes.iter().map(|&s| projective_points(s as u64).collect()).collect();
    let results = (0..total)
        .into_par_iter()
        .map(|mut idx| {
            let ab: Vec<(u64, u64)> = points
                .iter()
                .rev()
                .map(|p| {
                    let len = p.len() as u128;
                    let v = p[(idx % len) as usize];
                    idx /= len;
                    v
                })
                .collect::<Vec<_>>()
                .into_iter()
                .rev()
                .collect();
            let code = cab_code(dec, &ab)?;
            Ok((code.gen().to_vec(), code.k_dim() == dec.n(), code.is_lcd()))
        })
        .collect::<Result<Vec<_>>>()?;
    let all_dim_n = results.iter().all(|r| r.1);
    let lcd = results.iter().filter(|r| r.2).count() as u128;
    let distinct = results.iter().map(|r| &r.0).collect::<HashSet<_>>().len() as u128;
    Ok(CountVerification::Exhaustive { built: results.len() as u128, distinct, lcd, all_dim_n })
}

fn sampled_count(dec: &Decomposition, sizes: &[u128], samples: usize, seed: u64) -> Result<CountVerification> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<Vec<(u64, u64)>> = (0..samples)
        .map(|_| {
            sizes
                .iter()
                .map(|&s| loop {
                    let (a, b) = (rng.gen_range(0..s as u64), rng.gen_range(0..s as u64));
                    if (a, b) != (0, 0) {
                        break (a, b);
                    }
                })
                .collect()
        })
        .collect();
    let blocks: Vec<usize> = dec.blocks().iter().map(|c| c.index).collect();
    let results = draws
        .par_iter()
        .map(|ab| {
            let predicted_lcd = blocks
                .iter()
                .zip(ab)
                .map(|(&t, &(a, b))| classify_cab(dec, t, a, b))
                .collect::<Result<Vec<_>>>()?
                .iter()
                .all(|c| *c == BlockClass::LcdInBlock);
            let code = cab_code(dec, ab)?;
            Ok((code.is_lcd() == predicted_lcd, code.k_dim() == dec.n()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CountVerification::Sampled {
        samples,
        seed,
        agree: results.iter().filter(|r| r.0).count(),
        all_dim_n: results.iter().all(|r| r.1),
    })
}

/// The simple left ideals of `M_2(F)`, each as a row-reduced basis of the
/// 2-dimensional row space of `M_2(F) x` for a rank-1 `x`, found by scanning
/// every matrix.
pub fn simple_left_ideals_m2(field: &FieldSpec) -> Vec<Vec<Vec<FieldElem>>> {
    let q = field.q() as u64;
    let mut seen = HashSet::new();
    for idx in 0..q.pow(4) {
        let x = Mat2::from_indices(field, [idx % q, idx / q % q, idx / (q * q) % q, idx / (q * q * q)]);
        if x.is_zero(field) || x.det(field) != FieldElem::ZERO {
            continue;
        }
        // M_2(F) x flattened: rows E_ij x span the ideal
        let mut rows = Vec::new();
        for j in 0..4u64 {
            let unit = Mat2::from_indices(field, std::array::from_fn(|i| u64::from(i as u64 == j)));
            rows.push(unit.mul(field, &x).m.to_vec());
        }
        linalg::rref(field, &mut rows);
        seen.insert(rows);
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}
