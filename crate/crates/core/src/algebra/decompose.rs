use serde::{Deserialize, Serialize};

use super::{AlgElem, Algebra, Mat2, Mat2Ext, SubField, Twist};
use crate::cyclic::{conj_pairing, lambda_n, primitive_idempotents, Conjugacy, CyclicElem, IdempotentSet};
use crate::error::{Error, Result};
use crate::field::{sqrt, sqrt_minus_one, FieldElem, FieldOps, FieldSpec};

/// What kind of block a component is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ComponentKind {
    /// `A_0` of the consta algebra when -1 is a non-square: a field of order q^2.
    TrivialField,
    /// `A_0` of the consta algebra when `r^2 = -1`: splits as F + F.
    TrivialSplit { r: FieldElem },
    /// `A_0` of the dihedral algebra.
    TrivialDihedral,
    /// `FH(e + e_bar) + FH(e + e_bar) w` for a conjugate pair `e != bar(e)`.
    Paired { e: usize, e_bar: usize },
    /// `FHe + FHe w` for `e = bar(e) != e_0` in the consta algebra.
    SelfConj { e: usize },
    /// The same block in the dihedral algebra (no matrix presentation kept).
    SelfConjDihedral { e: usize },
}

impl ComponentKind {
    pub fn is_trivial(&self) -> bool {
        matches!(self, Self::TrivialField | Self::TrivialSplit { .. } | Self::TrivialDihedral)
    }

    pub fn is_paired(&self) -> bool {
        matches!(self, Self::Paired { .. })
    }

    pub fn is_self_conj(&self) -> bool {
        matches!(self, Self::SelfConj { .. } | Self::SelfConjDihedral { .. })
    }
}

/// Matrix presentation data for a self-conjugate block.
#[derive(Clone, Debug)]
pub struct SelfConjData {
    /// `g = -(ue + u^{-1}e)`, so `ue` is a root of `X^2 + gX + 1`.
    pub g: CyclicElem,
    pub s: CyclicElem,
    pub s_prime: CyclicElem,
    pub ue: CyclicElem,
    /// `(ue - u^{-1}e)^{-1}` in FHe.
    d_inv: CyclicElem,
    pub eta: Mat2Ext,
    pub nu: Mat2Ext,
    pub eta_nu: Mat2Ext,
}

/// One block `A_t` of the decomposition.
#[derive(Clone, Debug)]
pub struct Component {
    pub index: usize,
    pub kind: ComponentKind,
    /// `dim_F F_t`; 1 for `A_0`.
    pub k: usize,
    /// `1_{A_t}`.
    pub identity: AlgElem,
    /// The primitive idempotent `e` of FH the block is built on.
    pub idempotent: CyclicElem,
    /// `F_t` (absent for `A_0`).
    pub subfield: Option<SubField>,
    pub self_conj: Option<SelfConjData>,
}

impl Component {
    pub fn field(&self) -> Option<&SubField> {
        self.subfield.as_ref()
    }

    /// `dim_F A_t`.
    pub fn dim(&self) -> usize {
        if self.kind.is_trivial() {
            2
        } else {
            4 * self.k
        }
    }
}

/// The orthogonal block decomposition `A_0 + A_1 + ... + A_m`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub algebra: Algebra,
    pub idempotents: IdempotentSet,
    pub pairing: Vec<Conjugacy>,
    pub components: Vec<Component>,
}

/// Decomposes the consta-dihedral algebra over `field`.
pub fn decompose(n: usize, field: &FieldSpec) -> Result<Decomposition> {
    decompose_twisted(n, field, Twist::Consta)
}

pub fn decompose_twisted(n: usize, field: &FieldSpec, twist: Twist) -> Result<Decomposition> {
    let algebra = Algebra::new(n, field, twist)?;
    if n < 3 {
        return Err(Error::InvalidParameter("n > 1 required".into()));
    }
    let idempotents = primitive_idempotents(n, field)?;
    let pairing = conj_pairing(&idempotents);
    let ring = algebra.ring().clone();
    let e0 = idempotents.idems[0].clone();

    let kind0 = match twist {
        Twist::Dihedral => ComponentKind::TrivialDihedral,
        Twist::Consta => match sqrt_minus_one(field) {
            Some(r) => ComponentKind::TrivialSplit { r },
            None => ComponentKind::TrivialField,
        },
    };
    let mut components = vec![Component {
        index: 0,
        kind: kind0,
        k: 1,
        identity: algebra.embed(e0.clone()),
        idempotent: e0,
        subfield: None,
        self_conj: None,
    }];

    for i in 1..idempotents.len() {
        let e = &idempotents.idems[i];
        let factor = &idempotents.factors[i];
        let ue = ring.shift(e, 1);
        let index = components.len();
        match pairing[i] {
            Conjugacy::PairedWith(j) if j > i => {
                let k = idempotents.dims[i];
                let sub = SubField::new(&ring, e, factor, &ue, k);
                components.push(Component {
                    index,
                    kind: ComponentKind::Paired { e: i, e_bar: j },
                    k,
                    identity: algebra.embed(ring.add(e, &idempotents.idems[j])),
                    idempotent: e.clone(),
                    subfield: Some(sub),
                    self_conj: None,
                });
            }
            Conjugacy::PairedWith(_) => {}
            Conjugacy::SelfConjugate => {
                let k = idempotents.dims[i] / 2;
                let u_inv_e = ring.shift(e, -1);
                let theta = ring.add(&ue, &u_inv_e);
                let sub = SubField::new(&ring, e, factor, &theta, k);
                let (kind, self_conj) = match twist {
                    Twist::Dihedral => (ComponentKind::SelfConjDihedral { e: i }, None),
                    Twist::Consta => {
                        let g = sub.neg(&theta);
                        let (s, s_prime) = solve_norm_equation(&sub, &g)?;
                        let d = ring.sub(&ue, &u_inv_e);
                        let d_inv = ring.inv_in_component(&d, factor, e).expect("ue - u^{-1}e is a unit in FHe");
                        let one = sub.one();
                        let zero = sub.zero();
                        let eta = Mat2::new(theta.clone(), one.clone(), sub.neg(&one), zero);
                        let nu = Mat2::new(
                            s.clone(),
                            s_prime.clone(),
                            sub.add(&sub.mul(&s, &g), &s_prime),
                            sub.neg(&s),
                        );
                        let eta_nu = eta.mul(&sub, &nu);
                        let data = SelfConjData { g, s, s_prime, ue: ue.clone(), d_inv, eta, nu, eta_nu };
                        (ComponentKind::SelfConj { e: i }, Some(data))
                    }
                };
                components.push(Component {
                    index,
                    kind,
                    k,
                    identity: algebra.embed(e.clone()),
                    idempotent: e.clone(),
                    subfield: Some(sub),
                    self_conj,
                });
            }
        }
    }
    Ok(Decomposition { algebra, idempotents, pairing, components })
}

/// Finds `(s, s')` with `s^2 + g s s' + s'^2 = -1`, scanning `s'` and then `s`
/// in canonical order and returning the first hit. Each row `s'` is resolved
/// by solving the quadratic in `s` rather than by testing every `s`, which
/// gives the same answer.
pub fn solve_norm_equation<F: FieldOps>(field: &F, g: &F::Elem) -> Result<(F::Elem, F::Elem)> {
    let two = field.from_int(2);
    if *g == two || *g == field.neg(&two) {
        return Err(Error::DegenerateG);
    }
    if field.characteristic() == 2 {
        // s' = 0, s = 1: 1 = -1
        return Ok((field.one(), field.zero()));
    }
    let four = field.from_int(4);
    let inv2 = field.inv(&two).unwrap();
    for j in 0..field.order() {
        let sp = field.element(j);
        let b = field.mul(g, &sp);
        let c = field.add(&field.square(&sp), &field.one());
        let disc = field.sub(&field.square(&b), &field.mul(&four, &c));
        if let Some(r) = sqrt(field, &disc) {
            let minus_b = field.neg(&b);
            let s1 = field.mul(&field.add(&minus_b, &r), &inv2);
            let s2 = field.mul(&field.sub(&minus_b, &r), &inv2);
            let s = if field.index_of(&s1) <= field.index_of(&s2) { s1 } else { s2 };
            return Ok((s, sp));
        }
    }
    unreachable!("the norm form represents -1 whenever g != +-2")
}

impl Decomposition {
    pub fn n(&self) -> usize {
        self.algebra.n()
    }

    pub fn field(&self) -> &FieldSpec {
        self.algebra.field()
    }

    pub fn twist(&self) -> Twist {
        self.algebra.twist()
    }

    pub fn component(&self, t: usize) -> Result<&Component> {
        self.components
            .get(t)
            .ok_or_else(|| Error::InvalidParameter(format!("no component {t}")))
    }

    /// Nontrivial components `A_1, ..., A_m`.
    pub fn blocks(&self) -> &[Component] {
        &self.components[1..]
    }

    /// `1_{A_t} x = x`.
    pub fn contains(&self, t: usize, x: &AlgElem) -> bool {
        self.components.get(t).is_some_and(|c| self.algebra.mul(&c.identity, x) == *x)
    }

    /// `1_{A_t} x`.
    pub fn project(&self, t: usize, x: &AlgElem) -> AlgElem {
        self.algebra.mul(&self.components[t].identity, x)
    }

    fn paired_idems(&self, t: usize) -> Result<(&CyclicElem, &CyclicElem)> {
        match self.component(t)?.kind {
            ComponentKind::Paired { e, e_bar } => Ok((&self.idempotents.idems[e], &self.idempotents.idems[e_bar])),
            _ => Err(Error::NotPaired(t)),
        }
    }

    /// The algebra isomorphism `A_t -> M_2(F_t)`.
    pub fn iso_to_mat2(&self, t: usize, x: &AlgElem) -> Result<Mat2Ext> {
        let comp = self.component(t)?;
        if !self.contains(t, x) {
            return Err(Error::NotInComponent(t));
        }
        let ring = self.algebra.ring();
        let eps = self.algebra.eps();
        match &comp.kind {
            ComponentKind::Paired { .. } => {
                let (e, e_bar) = self.paired_idems(t)?;
                let a11 = ring.mul(&x.a, e);
                let a22 = ring.bar(&ring.mul(&x.a, e_bar));
                let a12 = ring.scale(&ring.mul(&x.b, e), eps);
                let a21 = ring.bar(&ring.mul(&x.b, e_bar));
                Ok(Mat2::new(a11, a12, a21, a22))
            }
            ComponentKind::SelfConj { .. } => {
                let sub = comp.subfield.as_ref().unwrap();
                let sc = comp.self_conj.as_ref().unwrap();
                let split = |a: &CyclicElem| {
                    // a = c0 + c1 ue with c0, c1 bar-fixed
                    let c1 = ring.mul(&ring.sub(a, &ring.bar(a)), &sc.d_inv);
                    let c0 = ring.sub(a, &ring.mul(&c1, &sc.ue));
                    (c0, c1)
                };
                let (a0, a1) = split(&x.a);
                let (b0, b1) = split(&x.b);
                let m = Mat2::scalar(sub, a0)
                    .add(sub, &sc.eta.scale(sub, &a1))
                    .add(sub, &sc.nu.scale(sub, &b0))
                    .add(sub, &sc.eta_nu.scale(sub, &b1));
                Ok(m)
            }
            _ => Err(Error::InvalidParameter(format!("component {t} has no 2x2 matrix presentation"))),
        }
    }

    /// Inverse of [`Self::iso_to_mat2`].
    pub fn iso_from_mat2(&self, t: usize, m: &Mat2Ext) -> Result<AlgElem> {
        let comp = self.component(t)?;
        let ring = self.algebra.ring();
        let eps = self.algebra.eps();
        let Some(sub) = comp.subfield.as_ref() else {
            return Err(Error::InvalidParameter(format!("component {t} has no 2x2 matrix presentation")));
        };
        if m.m.iter().any(|x| !sub.contains(x)) {
            return Err(Error::NotInComponent(t));
        }
        match &comp.kind {
            ComponentKind::Paired { .. } => {
                let [a11, a12, a21, a22] = &m.m;
                let a = ring.add(a11, &ring.bar(a22));
                let b = ring.add(&ring.scale(a12, eps), &ring.bar(a21));
                Ok(AlgElem { a, b })
            }
            ComponentKind::SelfConj { .. } => {
                let sc = comp.self_conj.as_ref().unwrap();
                let basis = [Mat2::identity(sub), sc.eta.clone(), sc.nu.clone(), sc.eta_nu.clone()];
                let rows: Vec<Vec<CyclicElem>> = basis.iter().map(|b| b.m.to_vec()).collect();
                let c = crate::linalg::solve_left(sub, &rows, &m.m).expect("I, eta, nu, eta nu form a basis");
                let a = ring.add(&c[0], &ring.mul(&c[1], &sc.ue));
                let b = ring.add(&c[2], &ring.mul(&c[3], &sc.ue));
                Ok(AlgElem { a, b })
            }
            _ => Err(Error::InvalidParameter(format!("component {t} has no 2x2 matrix presentation"))),
        }
    }

    /// The bar map on a paired block, read through the isomorphism:
    /// `(a11, a12; a21, a22) -> (a22, eps a12; eps a21, a11)`.
    pub fn bar_via_matrix(&self, t: usize, m: &Mat2Ext) -> Result<Mat2Ext> {
        self.paired_idems(t)?;
        let ring = self.algebra.ring();
        let eps = self.algebra.eps();
        let [a11, a12, a21, a22] = &m.m;
        Ok(Mat2::new(a22.clone(), ring.scale(a12, eps), ring.scale(a21, eps), a11.clone()))
    }

    /// `sum_{t >= 1} 4 k_t` (should be `2n - 2`) and whether every
    /// `2 k_t >= lambda(n)`.
    pub fn dimension_accounting(&self) -> (usize, bool) {
        let lambda = lambda_n(self.n() as u64, self.field().q() as u64).unwrap() as usize;
        let sum = self.blocks().iter().map(|c| 4 * c.k).sum();
        (sum, self.blocks().iter().all(|c| 2 * c.k >= lambda))
    }

    pub fn report(&self) -> DecompositionReport {
        let n = self.n();
        let q = self.field().q() as u64;
        let (sum_4k, lambda_ok) = self.dimension_accounting();
        let components = self
            .components
            .iter()
            .map(|c| {
                let enc = |x: &CyclicElem| c.subfield.as_ref().map(|s| s.encode(x)).unwrap();
                let (e, e_bar) = match c.kind {
                    ComponentKind::Paired { e, e_bar } => (Some(e), Some(e_bar)),
                    ComponentKind::SelfConj { e } | ComponentKind::SelfConjDihedral { e } => (Some(e), None),
                    _ => (Some(0), None),
                };
                ComponentReport {
                    index: c.index,
                    kind: c.kind.clone(),
                    k: c.k,
                    dim: c.dim(),
                    idempotent: e,
                    conjugate: e_bar,
                    identity_a: c.identity.a.encodings(),
                    identity_b: c.identity.b.encodings(),
                    g: c.self_conj.as_ref().map(|s| enc(&s.g)),
                    s: c.self_conj.as_ref().map(|s| enc(&s.s)),
                    s_prime: c.self_conj.as_ref().map(|s| enc(&s.s_prime)),
                }
            })
            .collect();
        DecompositionReport {
            n,
            q,
            twist: self.twist(),
            lambda: lambda_n(n as u64, q).unwrap(),
            sum_4k,
            expected_sum_4k: 2 * n - 2,
            lambda_bound_holds: lambda_ok,
            components,
        }
    }
}

/// Serializable summary of one block. Subfield values are given as the
/// integer encoding of their power-basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub index: usize,
    #[serde(flatten)]
    pub kind: ComponentKind,
    pub k: usize,
    pub dim: usize,
    pub idempotent: Option<usize>,
    pub conjugate: Option<usize>,
    pub identity_a: Vec<u32>,
    pub identity_b: Vec<u32>,
    pub g: Option<u64>,
    pub s: Option<u64>,
    pub s_prime: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub n: usize,
    pub q: u64,
    pub twist: Twist,
    pub lambda: u64,
    pub sum_4k: usize,
    pub expected_sum_4k: usize,
    pub lambda_bound_holds: bool,
    pub components: Vec<ComponentReport>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_in(dec: &Decomposition, t: usize, rng: &mut ChaCha8Rng) -> AlgElem {
        let x = dec.algebra.random(rng);
        dec.project(t, &x)
    }

    fn random_mat(sub: &SubField, rng: &mut ChaCha8Rng) -> Mat2Ext {
        let ord = sub.order();
        Mat2::from_indices(sub, std::array::from_fn(|_| rng.gen_range(0..ord)))
    }

    fn brute_norm<F: FieldOps>(f: &F, g: &F::Elem) -> (F::Elem, F::Elem) {
        let target = f.neg(&f.one());
        for j in 0..f.order() {
            let sp = f.element(j);
            for i in 0..f.order() {
                let s = f.element(i);
                let v = f.add(&f.add(&f.square(&s), &f.mul(&f.mul(g, &s), &sp)), &f.square(&sp));
                if v == target {
                    return (s, sp);
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn norm_equation_examples() {
        let f4 = FieldSpec::from_order(4).unwrap();
        for g in f4.units() {
            assert_eq!(solve_norm_equation(&f4, &g).unwrap(), (FieldElem(1), FieldElem(0)));
        }
        assert_eq!(solve_norm_equation(&f4, &FieldElem(0)).unwrap_err(), Error::DegenerateG);
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(solve_norm_equation(&f5, &FieldElem(1)).unwrap(), (FieldElem(2), FieldElem(0)));
        assert_eq!(solve_norm_equation(&f5, &FieldElem(3)).unwrap_err(), Error::DegenerateG);
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(solve_norm_equation(&f3, &FieldElem(0)).unwrap(), (FieldElem(1), FieldElem(1)));
    }

    #[test]
    fn norm_equation_matches_brute_scan() {
        for q in [3u64, 5, 7, 8, 9, 11, 13, 16, 25, 27] {
            let f = FieldSpec::from_order(q).unwrap();
            for g in f.iter() {
                match solve_norm_equation(&f, &g) {
                    Ok(sol) => assert_eq!(sol, brute_norm(&f, &g), "q={q} g={g}"),
                    Err(e) => {
                        assert_eq!(e, Error::DegenerateG);
                        assert!(g == f.int(2) || g == f.int(-2));
                    }
                }
            }
        }
    }

    #[test]
    fn structure_examples() {
        let f7 = FieldSpec::prime(7).unwrap();
        let d = decompose(3, &f7).unwrap();
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.components[0].kind, ComponentKind::TrivialField);
        assert_eq!(d.components[1].kind, ComponentKind::Paired { e: 1, e_bar: 2 });
        assert_eq!(d.components[1].k, 1);

        let f3 = FieldSpec::prime(3).unwrap();
        let d = decompose(5, &f3).unwrap();
        assert_eq!(d.components[0].kind, ComponentKind::TrivialField);
        assert_eq!(d.components[1].kind, ComponentKind::SelfConj { e: 1 });
        assert_eq!(d.components[1].k, 2);

        let f5 = FieldSpec::prime(5).unwrap();
        let d = decompose(3, &f5).unwrap();
        assert_eq!(d.components[0].kind, ComponentKind::TrivialSplit { r: FieldElem(2) });

        assert!(decompose(1, &f5).is_err());
    }

    #[test]
    fn self_conj_eta_satisfies_its_quadratic() {
        let f3 = FieldSpec::prime(3).unwrap();
        let d = decompose(5, &f3).unwrap();
        let c = &d.components[1];
        let sub = c.subfield.as_ref().unwrap();
        let sc = c.self_conj.as_ref().unwrap();
        let eta = &sc.eta;
        let lhs = eta.mul(sub, eta).add(sub, &eta.scale(sub, &sc.g)).add(sub, &Mat2::identity(sub));
        assert!(lhs.is_zero(sub));
        let minus_one = Mat2::scalar(sub, sub.neg(&sub.one()));
        assert_eq!(sc.nu.mul(sub, &sc.nu), minus_one);
        // norm equation in F_t
        let v = sub.add(
            &sub.add(&sub.square(&sc.s), &sub.mul(&sub.mul(&sc.g, &sc.s), &sc.s_prime)),
            &sub.square(&sc.s_prime),
        );
        assert_eq!(v, sub.neg(&sub.one()));
    }

    #[test]
    fn isomorphisms_round_trip_and_multiply() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (n, q, twist) in [
            (3usize, 7u64, Twist::Consta),
            (5, 3, Twist::Consta),
            (7, 2, Twist::Consta),
            (7, 3, Twist::Consta),
            (5, 4, Twist::Consta),
            (3, 7, Twist::Dihedral),
            (7, 2, Twist::Dihedral),
            (13, 3, Twist::Dihedral),
        ] {
            let f = FieldSpec::from_order(q).unwrap();
            let d = decompose_twisted(n, &f, twist).unwrap();
            for c in d.blocks() {
                if c.kind == (ComponentKind::SelfConjDihedral { e: 0 }) || matches!(c.kind, ComponentKind::SelfConjDihedral { .. }) {
                    continue;
                }
                let t = c.index;
                let sub = c.subfield.as_ref().unwrap();
                assert_eq!(d.iso_to_mat2(t, &c.identity).unwrap(), Mat2::identity(sub));
                for _ in 0..30 {
                    let x = random_in(&d, t, &mut rng);
                    let y = random_in(&d, t, &mut rng);
                    let mx = d.iso_to_mat2(t, &x).unwrap();
                    let my = d.iso_to_mat2(t, &y).unwrap();
                    assert_eq!(d.iso_from_mat2(t, &mx).unwrap(), x, "n={n} q={q} {twist:?}");
                    assert_eq!(d.iso_to_mat2(t, &d.algebra.mul(&x, &y)).unwrap(), mx.mul(sub, &my));
                    let m = random_mat(sub, &mut rng);
                    assert_eq!(d.iso_to_mat2(t, &d.iso_from_mat2(t, &m).unwrap()).unwrap(), m);
                    if c.kind.is_paired() {
                        let via = d.bar_via_matrix(t, &mx).unwrap();
                        assert_eq!(via, d.iso_to_mat2(t, &d.algebra.bar(&x)).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn paired_sign_convention() {
        let f7 = FieldSpec::prime(7).unwrap();
        let d = decompose(3, &f7).unwrap();
        let sub = d.components[1].subfield.as_ref().unwrap();
        let e = sub.one();
        let z = sub.zero();
        let m = Mat2::new(z.clone(), e.clone(), z.clone(), z.clone());
        let x = d.iso_from_mat2(1, &m).unwrap();
        // (0, 1; 0, 0) -> -e w in the consta algebra
        assert_eq!(x, d.algebra.embed_w(d.algebra.ring().neg(&e)));
        let barred = d.bar_via_matrix(1, &m).unwrap();
        assert_eq!(barred, Mat2::new(z.clone(), sub.neg(&e), z.clone(), z.clone()));
        assert_eq!(d.bar_via_matrix(1, &Mat2::identity(sub)).unwrap(), Mat2::identity(sub));

        let dd = decompose_twisted(3, &f7, Twist::Dihedral).unwrap();
        let xd = dd.iso_from_mat2(1, &m).unwrap();
        assert_eq!(xd, dd.algebra.embed_w(e.clone()));
        assert_eq!(dd.bar_via_matrix(1, &m).unwrap(), m);
    }

    #[test]
    fn not_in_component_and_not_paired() {
        let f3 = FieldSpec::prime(3).unwrap();
        let d = decompose(5, &f3).unwrap();
        assert_eq!(d.iso_to_mat2(1, &d.algebra.one()).unwrap_err(), Error::NotInComponent(1));
        let sub = d.components[1].subfield.as_ref().unwrap();
        assert_eq!(d.bar_via_matrix(1, &Mat2::identity(sub)).unwrap_err(), Error::NotPaired(1));
    }

    #[test]
    fn identities_are_orthogonal_and_sum_to_one() {
        for (n, q) in [(3usize, 7u64), (5, 3), (7, 2), (9, 2), (15, 2), (21, 5), (13, 3)] {
            let f = FieldSpec::from_order(q).unwrap();
            let d = decompose(n, &f).unwrap();
            let alg = &d.algebra;
            let mut sum = alg.zero();
            for (i, ci) in d.components.iter().enumerate() {
                sum = alg.add(&sum, &ci.identity);
                for (j, cj) in d.components.iter().enumerate() {
                    let p = alg.mul(&ci.identity, &cj.identity);
                    if i == j {
                        assert_eq!(p, ci.identity);
                    } else {
                        assert!(alg.is_zero(&p));
                    }
                }
            }
            assert_eq!(sum, alg.one());
            let (sum4k, ok) = d.dimension_accounting();
            assert_eq!(sum4k, 2 * n - 2);
            assert!(ok);
        }
    }

    #[test]
    fn report_round_trips() {
        let f3 = FieldSpec::prime(3).unwrap();
        let d = decompose(5, &f3).unwrap();
        let r = d.report();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<DecompositionReport>(&s).unwrap(), r);
        assert!(s.contains("\"kind\":\"self-conj\""));
    }
}
