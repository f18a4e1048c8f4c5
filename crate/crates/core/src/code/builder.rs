use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{CodeOrigin, LinearCode};
use crate::algebra::{AlgElem, ComponentKind, Decomposition, Mat2, Mat2Ext, SubField, Twist};
use crate::cyclic::CyclicElem;
use crate::error::{Error, Result};
use crate::field::{sqrt, FieldOps};

/// Code families the builder knows how to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `C_0 + C_1 b_1 + ... + C_m b_m`, self-dual.
    SelfDual,
    /// Sum over the self-conjugate blocks of odd degree, LCD.
    Lcd,
    /// `C_1 b_1 + ... + C_m b_m` when every block is self-orthogonal.
    SelfOrthogonal,
    /// `C_1 b_1 + ... + C_m b_m` with no duality requirement.
    Plain,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::SelfDual => "self-dual",
            Family::Lcd => "lcd",
            Family::SelfOrthogonal => "self-orthogonal",
            Family::Plain => "plain",
        }
    }
}

/// The field `K_t = F_t[gamma]` of order `q^{2k_t}` inside a block, given
/// through the matrix presentation as `{a I + b Gamma : a, b in F_t}`.
/// Element `a + b gamma` has index `idx(a) + idx(b) |F_t|`.
#[derive(Clone, Debug)]
pub struct KField {
    pub block: usize,
    pub gamma: Mat2Ext,
    /// For paired blocks: the `g'` with `X^2 + g'X + 1` irreducible over F_t.
    pub g_prime: Option<CyclicElem>,
    /// For self-conjugate blocks: `ue`, the image of `gamma`.
    ue: Option<CyclicElem>,
    sub: SubField,
    sub_order: u64,
}

impl KField {
    /// `|K_t|`.
    pub fn order(&self) -> u128 {
        self.sub_order as u128 * self.sub_order as u128
    }

    pub fn unit_count(&self) -> u128 {
        self.order() - 1
    }

    pub fn subfield(&self) -> &SubField {
        &self.sub
    }

    pub fn matrix(&self, index: u128) -> Mat2Ext {
        let q = self.sub_order as u128;
        let a = self.sub.element((index % q) as u64);
        let b = self.sub.element((index / q) as u64);
        Mat2::scalar(&self.sub, a).add(&self.sub, &self.gamma.scale(&self.sub, &b))
    }

    /// The element of `A_t` with the given index.
    pub fn element(&self, dec: &Decomposition, index: u128) -> Result<AlgElem> {
        if index >= self.order() {
            return Err(Error::InvalidBeta(format!("index {index} outside K_{}", self.block)));
        }
        if let Some(ue) = &self.ue {
            let q = self.sub_order as u128;
            let ring = dec.algebra.ring();
            let a = self.sub.element((index % q) as u64);
            let b = self.sub.element((index / q) as u64);
            return Ok(dec.algebra.embed(ring.add(&a, &ring.mul(&b, ue))));
        }
        dec.iso_from_mat2(self.block, &self.matrix(index))
    }
}

/// Builds `K_t` for a nontrivial block with a matrix presentation.
pub fn build_kt(dec: &Decomposition, t: usize) -> Result<KField> {
    let comp = dec.component(t)?;
    let sub = comp
        .subfield
        .clone()
        .filter(|_| !comp.kind.is_trivial() && !matches!(comp.kind, ComponentKind::SelfConjDihedral { .. }))
        .ok_or_else(|| Error::InvalidParameter(format!("block {t} has no matrix presentation")))?;
    let sub_order = sub.order();
    match &comp.kind {
        ComponentKind::SelfConj { .. } => {
            let sc = comp.self_conj.as_ref().unwrap();
            let (gamma, ue) = (sc.eta.clone(), Some(sc.ue.clone()));
            Ok(KField { block: t, gamma, g_prime: None, ue, sub, sub_order })
        }
        ComponentKind::Paired { .. } => {
            let g_prime = (0..sub_order)
                .map(|i| sub.element(i))
                .find(|g| quadratic_is_irreducible(&sub, g))
                .expect("an irreducible X^2 + gX + 1 exists over every finite field");
            let gamma = Mat2::new(sub.zero(), sub.neg(&sub.one()), sub.one(), sub.neg(&g_prime));
            Ok(KField { block: t, gamma, g_prime: Some(g_prime), ue: None, sub, sub_order })
        }
        _ => unreachable!(),
    }
}

/// Whether `X^2 + gX + 1` has no root in the field.
fn quadratic_is_irreducible<F: FieldOps>(f: &F, g: &F::Elem) -> bool {
    if f.characteristic() == 2 {
        if f.is_zero(g) {
            return false;
        }
        let one = f.one();
        return !(0..f.order()).any(|i| {
            let x = f.element(i);
            f.is_zero(&f.add(&f.add(&f.square(&x), &f.mul(g, &x)), &one))
        });
    }
    let disc = f.sub(&f.square(g), &f.from_int(4));
    sqrt(f, &disc).is_none()
}

/// `K^* = {e_0} x K_1^x x ... x K_m^x`.
#[derive(Clone, Debug)]
pub struct KStar {
    pub fields: Vec<KField>,
}

/// A choice of unit `beta_t in K_t^x` per nontrivial block, by index
/// (`1..|K_t|`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BetaVector {
    pub units: Vec<u128>,
}

impl KStar {
    pub fn new(dec: &Decomposition) -> Result<Self> {
        let fields = dec.blocks().iter().map(|c| build_kt(dec, c.index)).collect::<Result<_>>()?;
        Ok(KStar { fields })
    }

    /// `|K^*|`, saturating.
    pub fn size(&self) -> u128 {
        self.fields.iter().fold(1u128, |acc, k| acc.saturating_mul(k.unit_count()))
    }

    pub fn identity(&self) -> BetaVector {
        BetaVector { units: vec![1; self.fields.len()] }
    }

    /// The `index`-th element of `K^*` in product order (block 1 most
    /// significant, each factor by unit index).
    pub fn beta(&self, mut index: u128) -> BetaVector {
        let mut units = vec![0; self.fields.len()];
        for (slot, k) in units.iter_mut().zip(&self.fields).rev() {
            let c = k.unit_count();
            *slot = index % c + 1;
            index /= c;
        }
        BetaVector { units }
    }

    pub fn random_beta<R: Rng>(&self, rng: &mut R) -> BetaVector {
        BetaVector { units: self.fields.iter().map(|k| rng.gen_range(1..k.order())).collect() }
    }

    pub fn validate(&self, beta: &BetaVector) -> Result<()> {
        if beta.units.len() != self.fields.len() {
            return Err(Error::InvalidBeta(format!(
                "expected {} components, got {}",
                self.fields.len(),
                beta.units.len()
            )));
        }
        for (u, k) in beta.units.iter().zip(&self.fields) {
            if *u == 0 || *u >= k.order() {
                return Err(Error::InvalidBeta(format!("component for block {} is not a unit", k.block)));
            }
        }
        Ok(())
    }

    /// `beta_t` as an element of `A_t`.
    pub fn element(&self, dec: &Decomposition, beta: &BetaVector, block: usize) -> Result<AlgElem> {
        self.validate(beta)?;
        self.fields[block - 1].element(dec, beta.units[block - 1])
    }
}

/// `|K^*|` for a decomposition.
pub fn k_star_size(dec: &Decomposition) -> Result<u128> {
    Ok(KStar::new(dec)?.size())
}

/// A generator of one summand of an assembled code.
#[derive(Clone, Debug)]
pub struct Part {
    pub block: usize,
    pub generator: AlgElem,
}

/// The generator `r e_0 + e_0 w` of the one-dimensional self-orthogonal ideal
/// `C_0` of `A_0`, when `r^2 = -1` has a solution.
pub fn build_c0(dec: &Decomposition) -> Option<AlgElem> {
    match dec.components[0].kind {
        ComponentKind::TrivialSplit { r } => {
            let ring = dec.algebra.ring();
            let e0 = &dec.components[0].idempotent;
            Some(AlgElem { a: ring.scale(e0, r), b: e0.clone() })
        }
        _ => None,
    }
}

/// Generator of the simple left ideal `C_t`: `e` for paired blocks and
/// `f = s e - s' ue + w e` for self-conjugate ones.
pub fn build_ct(dec: &Decomposition, t: usize) -> Result<AlgElem> {
    let comp = dec.component(t)?;
    let ring = dec.algebra.ring();
    match &comp.kind {
        ComponentKind::Paired { .. } => Ok(dec.algebra.embed(comp.idempotent.clone())),
        ComponentKind::SelfConj { .. } => {
            let sc = comp.self_conj.as_ref().unwrap();
            let a = ring.sub(&sc.s, &ring.mul(&sc.s_prime, &sc.ue));
            Ok(AlgElem { a, b: comp.idempotent.clone() })
        }
        _ => Err(Error::InvalidParameter(format!("block {t} has no simple-ideal generator"))),
    }
}

/// The left ideal generated by the parts, each nontrivial generator first
/// right-multiplied by its `beta_t`.
pub fn assemble_code(
    dec: &Decomposition,
    parts: &[Part],
    beta: Option<(&KStar, &BetaVector)>,
) -> Result<LinearCode> {
    if parts.is_empty() {
        return Err(Error::EmptyParts);
    }
    let mut seen = vec![false; dec.components.len()];
    for p in parts {
        dec.component(p.block)?;
        if std::mem::replace(&mut seen[p.block], true) {
            return Err(Error::BlockCollision(p.block));
        }
    }
    if let Some((ks, b)) = beta {
        ks.validate(b)?;
    }
    let gens = parts
        .iter()
        .map(|p| match beta {
            Some((ks, b)) if p.block > 0 => Ok(dec.algebra.mul(&p.generator, &ks.element(dec, b, p.block)?)),
            _ => Ok(p.generator.clone()),
        })
        .collect::<Result<Vec<_>>>()?;
    let rows = dec.algebra.left_ideal_rows(&gens);
    let code = LinearCode::from_rows(dec.field(), 2 * dec.n(), rows)?;
    Ok(code.with_origin(CodeOrigin {
        family: "custom".into(),
        n: dec.n(),
        twist: Some(dec.twist()),
        blocks: parts.iter().map(|p| p.block).collect(),
        beta: beta.map(|(_, b)| b.units.clone()),
        seed: None,
    }))
}

/// Right-multiplies each block generator by `beta_t` and assembles.
pub fn twist(dec: &Decomposition, parts: &[Part], kstar: &KStar, beta: &BetaVector) -> Result<LinearCode> {
    assemble_code(dec, parts, Some((kstar, beta)))
}

fn all_block_parts(dec: &Decomposition) -> Result<Vec<Part>> {
    dec.blocks().iter().map(|c| Ok(Part { block: c.index, generator: build_ct(dec, c.index)? })).collect()
}

fn labelled(mut code: LinearCode, family: Family) -> LinearCode {
    if let Some(o) = code.origin.as_mut() {
        o.family = family.name().into();
    }
    code
}

/// `C = C_1 b_1 + ... + C_m b_m`, of dimension `n - 1`.
pub fn plain_code(dec: &Decomposition, beta: Option<(&KStar, &BetaVector)>) -> Result<LinearCode> {
    Ok(labelled(assemble_code(dec, &all_block_parts(dec)?, beta)?, Family::Plain))
}

/// `C`, checked to be self-orthogonal.
pub fn self_orthogonal_code(dec: &Decomposition, beta: Option<(&KStar, &BetaVector)>) -> Result<LinearCode> {
    require_consta(dec)?;
    let code = assemble_code(dec, &all_block_parts(dec)?, beta)?;
    if !code.is_self_orthogonal() {
        return Err(Error::HypothesisUnmet(format!("hull has dimension {} < {}", code.hull_dimension(), code.k_dim())));
    }
    Ok(labelled(code, Family::SelfOrthogonal))
}

/// `C_0 + C_1 b_1 + ... + C_m b_m`; needs q even or `4 | q - 1`.
pub fn self_dual_code(dec: &Decomposition, beta: Option<(&KStar, &BetaVector)>) -> Result<LinearCode> {
    require_consta(dec)?;
    let c0 = build_c0(dec).ok_or_else(|| {
        Error::HypothesisUnmet(format!("q = {} needs q even or 4 | q - 1", dec.field().q()))
    })?;
    let mut parts = vec![Part { block: 0, generator: c0 }];
    parts.extend(all_block_parts(dec)?);
    Ok(labelled(assemble_code(dec, &parts, beta)?, Family::SelfDual))
}

/// Blocks usable for the LCD construction: self-conjugate with odd `k_t`,
/// over a field with q odd and `4 ∤ q - 1`.
pub fn lcd_blocks(dec: &Decomposition) -> Result<Vec<usize>> {
    require_consta(dec)?;
    let q = dec.field().q();
    if q.is_multiple_of(2) {
        return Err(Error::HypothesisUnmet(format!("q = {q} is even")));
    }
    if q % 4 == 1 {
        return Err(Error::HypothesisUnmet(format!("4 divides q - 1 = {}", q - 1)));
    }
    let blocks: Vec<usize> = dec
        .blocks()
        .iter()
        .filter(|c| c.kind.is_self_conj() && c.k % 2 == 1)
        .map(|c| c.index)
        .collect();
    if blocks.is_empty() {
        return Err(Error::HypothesisUnmet(
            "no block has a self-conjugate idempotent with odd k".into(),
        ));
    }
    Ok(blocks)
}

/// The LCD code over the qualifying blocks, optionally with all of `A_0`.
pub fn build_lcd_code(
    dec: &Decomposition,
    beta: Option<(&KStar, &BetaVector)>,
    with_a0: bool,
) -> Result<LinearCode> {
    let blocks = lcd_blocks(dec)?;
    let mut parts = Vec::new();
    if with_a0 {
        parts.push(Part { block: 0, generator: dec.components[0].identity.clone() });
    }
    for t in blocks {
        parts.push(Part { block: t, generator: build_ct(dec, t)? });
    }
    Ok(labelled(assemble_code(dec, &parts, beta)?, Family::Lcd))
}

fn require_consta(dec: &Decomposition) -> Result<()> {
    if dec.twist() != Twist::Consta {
        return Err(Error::InvalidParameter("construction needs the consta-dihedral algebra".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::decompose;
    use crate::field::{FieldElem, FieldSpec};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn dec(n: usize, q: u64) -> Decomposition {
        decompose(n, &FieldSpec::from_order(q).unwrap()).unwrap()
    }

    #[test]
    fn kt_sizes() {
        let d = dec(5, 3);
        let k = build_kt(&d, 1).unwrap();
        assert_eq!(k.unit_count(), 80);
        assert_eq!(k.element(&d, 1).unwrap(), d.components[1].identity);
        let d = dec(3, 7);
        let k = build_kt(&d, 1).unwrap();
        assert_eq!(k.unit_count(), 48);
        assert_eq!(k.element(&d, 1).unwrap(), d.components[1].identity);
    }

    #[test]
    fn kt_is_a_field() {
        for (n, q) in [(3usize, 7u64), (5, 3), (7, 2), (3, 4)] {
            let d = dec(n, q);
            for c in d.blocks() {
                let k = build_kt(&d, c.index).unwrap();
                let elems: Vec<AlgElem> = (0..k.order()).map(|i| k.element(&d, i).unwrap()).collect();
                for (i, x) in elems.iter().enumerate() {
                    assert_eq!(*x, d.iso_from_mat2(c.index, &k.matrix(i as u128)).unwrap());
                }
                let id = &c.identity;
                for (i, x) in elems.iter().enumerate().skip(1) {
                    // some element of K_t inverts x
                    assert!(elems.iter().any(|y| d.algebra.mul(x, y) == *id), "n={n} q={q} i={i}");
                    for y in elems.iter().step_by(3) {
                        let p = d.algebra.mul(x, y);
                        assert!(elems.contains(&p));
                        assert_eq!(p, d.algebra.mul(y, x));
                    }
                }
            }
        }
    }

    #[test]
    fn c0_examples() {
        let d = dec(3, 5);
        let c0 = build_c0(&d).unwrap();
        let e0 = &d.components[0].idempotent;
        assert_eq!(c0.a, d.algebra.ring().scale(e0, FieldElem(2)));
        assert_eq!(d.algebra.inner(&c0, &c0), FieldElem::ZERO);
        assert!(build_c0(&dec(3, 7)).is_none());
        let d2 = dec(5, 2);
        let c0 = build_c0(&d2).unwrap();
        assert_eq!(c0.a, c0.b);
    }

    #[test]
    fn ct_dimensions_and_orthogonality() {
        let d = dec(3, 7);
        let code = assemble_code(&d, &[Part { block: 1, generator: build_ct(&d, 1).unwrap() }], None).unwrap();
        assert_eq!(code.k_dim(), 2);
        assert!(code.is_self_orthogonal());
        let d = dec(5, 3);
        let code = assemble_code(&d, &[Part { block: 1, generator: build_ct(&d, 1).unwrap() }], None).unwrap();
        assert_eq!(code.k_dim(), 4);
        // q^k = 9 = 1 mod 4
        assert!(code.is_self_orthogonal());
        let d = dec(7, 3);
        let code = assemble_code(&d, &[Part { block: 1, generator: build_ct(&d, 1).unwrap() }], None).unwrap();
        // q^k = 27 = 3 mod 4, still isotropic
        assert_eq!(code.hull_dimensions(), (6, 6));
    }

    #[test]
    fn f_bar_f_vanishes() {
        for (n, q) in [(5usize, 3u64), (3, 5), (7, 3), (13, 3), (5, 7), (3, 2), (9, 2)] {
            let d = dec(n, q);
            for c in d.blocks().iter().filter(|c| c.kind.is_self_conj()) {
                let f = build_ct(&d, c.index).unwrap();
                assert!(d.algebra.is_zero(&d.algebra.mul(&f, &d.algebra.bar(&f))), "n={n} q={q}");
            }
        }
    }

    #[test]
    fn bar_is_the_adjugate_on_self_conjugate_blocks() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for (n, q) in [(7usize, 3u64), (5, 3), (3, 5), (11, 2)] {
            let d = dec(n, q);
            for c in d.blocks().iter().filter(|c| c.kind.is_self_conj()) {
                let sub = c.subfield.as_ref().unwrap();
                for _ in 0..10 {
                    let x = d.project(c.index, &d.algebra.random(&mut rng));
                    let m = d.iso_to_mat2(c.index, &x).unwrap();
                    let [a, b, cc, e] = m.m.clone();
                    let adj = Mat2::new(e, sub.neg(&b), sub.neg(&cc), a);
                    assert_eq!(d.iso_to_mat2(c.index, &d.algebra.bar(&x)).unwrap(), adj, "n={n} q={q}");
                }
            }
        }
    }

    #[test]
    fn assembled_dimensions() {
        let d = dec(3, 7);
        assert_eq!(plain_code(&d, None).unwrap().k_dim(), 2);
        let d = dec(3, 5);
        let c = self_dual_code(&d, None).unwrap();
        assert_eq!(c.k_dim(), 3);
        assert!(c.is_self_dual());
        assert_eq!(c.dual(), c);
        assert_eq!(assemble_code(&d, &[], None).unwrap_err(), Error::EmptyParts);
        let g = build_ct(&d, 1).unwrap();
        let parts = [Part { block: 1, generator: g.clone() }, Part { block: 1, generator: g }];
        assert_eq!(assemble_code(&d, &parts, None).unwrap_err(), Error::BlockCollision(1));
        assert!(matches!(self_dual_code(&dec(3, 7), None), Err(Error::HypothesisUnmet(_))));
    }

    #[test]
    fn lcd_examples() {
        let d = dec(7, 3);
        // the qualifying block is isotropic, so the hull is the whole block
        let c = build_lcd_code(&d, None, false).unwrap();
        assert_eq!(c.k_dim(), 6);
        assert_eq!(c.hull_dimensions(), (6, 6));
        let c = build_lcd_code(&d, None, true).unwrap();
        assert_eq!(c.k_dim(), 8);
        assert_eq!(c.hull_dimensions(), (6, 6));
        assert!(matches!(build_lcd_code(&dec(5, 3), None, false), Err(Error::HypothesisUnmet(_))));
        assert!(matches!(build_lcd_code(&dec(7, 4), None, false), Err(Error::HypothesisUnmet(_))));
    }

    #[test]
    fn twist_preserves_dimension_and_identity_is_neutral() {
        let d = dec(5, 3);
        let ks = KStar::new(&d).unwrap();
        let base = plain_code(&d, None).unwrap();
        assert_eq!(plain_code(&d, Some((&ks, &ks.identity()))).unwrap(), base);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let b = ks.random_beta(&mut rng);
            assert_eq!(plain_code(&d, Some((&ks, &b))).unwrap().k_dim(), base.k_dim());
        }
        let bad = BetaVector { units: vec![0] };
        assert!(matches!(plain_code(&d, Some((&ks, &bad))), Err(Error::InvalidBeta(_))));
    }

    #[test]
    fn orbit_covers_each_simple_ideal_q_minus_one_times() {
        let d = dec(3, 7);
        let ks = KStar::new(&d).unwrap();
        let parts = [Part { block: 1, generator: build_ct(&d, 1).unwrap() }];
        let mut counts: std::collections::HashMap<Vec<Vec<FieldElem>>, usize> = Default::default();
        for i in 0..ks.size() {
            let c = twist(&d, &parts, &ks, &ks.beta(i)).unwrap();
            *counts.entry(c.gen().to_vec()).or_default() += 1;
        }
        assert_eq!(counts.len(), 8);
        assert!(counts.values().all(|&c| c == 6));
    }

    #[test]
    fn beta_product_order() {
        let d = dec(15, 2);
        let ks = KStar::new(&d).unwrap();
        assert!(ks.fields.len() > 1);
        assert_eq!(ks.beta(0), ks.identity());
        let last = ks.beta(ks.size() - 1);
        assert_eq!(last.units, ks.fields.iter().map(|k| k.unit_count()).collect::<Vec<_>>());
    }
}
