//! A fixed suite of checks on the algebra and the code constructions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{decompose, AlgElem, ComponentKind, Decomposition, Mat2};
use crate::code::{build_ct, build_kt};
use crate::cyclic::{conj_pairing, primitive_idempotents, Conjugacy};
use crate::dihedral::{count_cab_codes, counterexample_check};
use crate::error::Result;
use crate::field::{mult_order, FieldOps, FieldSpec};
use crate::util::gcd;

pub const DEFAULT_Q_GRID: [u64; 7] = [2, 3, 4, 5, 7, 9, 13];

/// Largest `q^{k_t}` of a self-conjugate block in the isotropy and
/// `f bar(f)` checks.
pub const SELF_CONJ_LIMIT: u128 = 81;

/// Largest odd `n` in the conjugation-pattern check.
pub const PAIRING_N_LIMIT: u64 = 35;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub q_grid: Vec<u64>,
    pub seed: u64,
    /// Flip the sign of the `a12` term in the paired-block map under test
    /// (negative control).
    pub tamper_paired_sign: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { q_grid: DEFAULT_Q_GRID.to_vec(), seed: 0, tamper_paired_sign: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult { name: name.into(), passed: true, cases: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.passed = false;
            if self.failures.len() < 20 {
                self.failures.push(what());
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s += &format!("{} {} ({} cases)\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.cases);
            for f in &c.failures {
                s += &format!("    {f}\n");
            }
        }
        s += if self.passed() { "all checks passed\n" } else { "some checks failed\n" };
        s
    }
}

pub fn verify_suite(opts: &VerifyOptions) -> Result<VerifyReport> {
    Ok(VerifyReport {
        checks: vec![
            check_counterexample()?,
            check_counting()?,
            check_paired_iso(opts)?,
            check_self_conj_isotropy(&opts.q_grid)?,
            check_f_bar_f(&opts.q_grid)?,
            check_pairing_pattern(&opts.q_grid)?,
        ],
    })
}

/// The dihedral orthogonality counterexample over GF(7), n = 3.
pub fn check_counterexample() -> Result<CheckResult> {
    let mut c = CheckResult::new("dihedral counterexample: C bar(D) = 0, <C, D> = 0, bar(D) C contains ē v");
    let r = counterexample_check()?;
    c.record(r.holds(), || format!("{r:?}"));
    Ok(c)
}

/// 8 codes `A_0 ê_0 + A_1 f_ab` at (3, GF(7)), 6 of them LCD.
pub fn check_counting() -> Result<CheckResult> {
    let mut c = CheckResult::new("dihedral code count at (3, GF(7)): 8 codes, 6 LCD");
    let r = count_cab_codes(3, &FieldSpec::prime(7)?, 0, 0)?;
    c.record(r.passed() && r.total == 8 && r.lcd == 6, || format!("total {} lcd {}", r.total, r.lcd));
    Ok(c)
}

/// Paired block map `(a11, a12; a21, a22) -> a11 e - a12 e v + bar(a21) ē v + bar(a22) ē`
/// (with `+a12` when tampered): agrees with the library and is multiplicative.
pub fn check_paired_iso(opts: &VerifyOptions) -> Result<CheckResult> {
    let mut c = CheckResult::new("paired block isomorphism (sign of the a12 term)");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for &(n, q) in &[(3usize, 7u64), (7, 2), (7, 4), (5, 4), (3, 13)] {
        let d = decompose(n, &FieldSpec::from_order(q)?)?;
        for comp in d.blocks().iter().filter(|b| b.kind.is_paired()) {
            let sub = comp.subfield.as_ref().unwrap();
            let order = sub.order();
            let mut random = || {
                let mut x = || sub.element(rng.gen_range(0..order));
                Mat2::new(x(), x(), x(), x())
            };
            for _ in 0..20 {
                let (x, y) = (random(), random());
                let phi = |m| paired_map(&d, m, opts.tamper_paired_sign);
                let (px, py, pxy) = (phi(&x), phi(&y), phi(&x.mul(sub, &y)));
                let lib = d.iso_from_mat2(comp.index, &x)?;
                c.record(px == lib && d.algebra.mul(&px, &py) == pxy, || {
                    format!("n={n} q={q} block {}: map disagrees or is not multiplicative", comp.index)
                });
            }
        }
    }
    Ok(c)
}

fn paired_map(d: &Decomposition, m: &crate::algebra::Mat2Ext, tamper: bool) -> AlgElem {
    let ring = d.algebra.ring();
    let f = d.field();
    let [a11, a12, a21, a22] = &m.m;
    let sign = if tamper { f.one() } else { f.fneg(f.one()) };
    AlgElem { a: ring.add(a11, &ring.bar(a22)), b: ring.add(&ring.scale(a12, sign), &ring.bar(a21)) }
}

/// Largest `n` searched for self-conjugate blocks.
pub const SELF_CONJ_N_LIMIT: u64 = 41;

/// Odd `n <= 41` coprime to `q` with `q^{ord_n(q)} <= 81^2`, so that each
/// self-conjugate block (with `|F_t|^2 = q^{ord}`) may satisfy `|F_t| <= 81`.
pub fn small_block_lengths(q: u64) -> Vec<usize> {
    (3..=SELF_CONJ_N_LIMIT)
        .step_by(2)
        .filter(|&n| gcd(n, q) == 1)
        .filter(|&n| {
            let ord = mult_order(q, n).unwrap();
            (q as u128).checked_pow(ord as u32).is_some_and(|s| s <= SELF_CONJ_LIMIT * SELF_CONJ_LIMIT)
        })
        .map(|n| n as usize)
        .collect()
}

fn small_self_conj_blocks(d: &Decomposition) -> impl Iterator<Item = &crate::algebra::Component> {
    let q = d.field().q() as u128;
    d.blocks().iter().filter(move |b| {
        matches!(b.kind, ComponentKind::SelfConj { .. })
            && q.checked_pow(b.k as u32).is_some_and(|s| s <= SELF_CONJ_LIMIT)
    })
}

/// For every self-conjugate block with `q^{k_t} <= 81` and every unit
/// `beta_t`: `<C_t beta_t, C_t beta_t> = 0` exactly when `q` is even or
/// `4 | q^{k_t} - 1`.
pub fn check_self_conj_isotropy(q_grid: &[u64]) -> Result<CheckResult> {
    let mut c = CheckResult::new(ISOTROPY_CHECK);
    for &q in q_grid {
        let field = FieldSpec::from_order(q)?;
        for n in small_block_lengths(q) {
            record_isotropy(&mut c, &decompose(n, &field)?)?;
        }
    }
    Ok(c)
}

const ISOTROPY_CHECK: &str = "self-conjugate blocks: <C_t b, C_t b> = 0 iff q even or 4 | q^k - 1";

/// The isotropy check on the small self-conjugate blocks of one decomposition.
pub fn check_self_conj_isotropy_at(d: &Decomposition) -> Result<CheckResult> {
    let mut c = CheckResult::new(ISOTROPY_CHECK);
    record_isotropy(&mut c, d)?;
    Ok(c)
}

fn record_isotropy(c: &mut CheckResult, d: &Decomposition) -> Result<()> {
    let (n, q) = (d.n(), d.field().q() as u128);
    for comp in small_self_conj_blocks(d) {
        let kt = build_kt(d, comp.index)?;
        let size = q.pow(comp.k as u32);
        let predicted = q % 2 == 0 || (size - 1) % 4 == 0;
        let f = build_ct(d, comp.index)?;
        let isotropic = (1..kt.order())
            .into_par_iter()
            .map(|idx| {
                let x = d.algebra.mul(&f, &kt.element(d, idx)?);
                Ok(ideal_is_isotropic(d, &x) as u128)
            })
            .sum::<Result<u128>>()?;
        let units = kt.order() - 1;
        let ok = if predicted { isotropic == units } else { isotropic == 0 };
        c.record(ok, || {
            format!(
                "n={n} q={q} block {} (q^k = {size}): predicted {}, isotropic for {isotropic} of {units} units",
                comp.index,
                if predicted { "isotropic" } else { "non-isotropic" }
            )
        });
    }
    Ok(())
}

/// `<A x, A x> = 0`. The inner product is invariant under the signed
/// coordinate permutations of the group, so testing `<g x, x>` for all `g`
/// suffices.
pub fn ideal_is_isotropic(d: &Decomposition, x: &AlgElem) -> bool {
    (0..2 * d.n()).all(|g| d.algebra.inner(&d.algebra.mul_group_element(g, x), x) == crate::field::FieldElem::ZERO)
}

/// For `f = s e - s' ue + v e` in each self-conjugate block:
/// `f bar(f) = s'(ue - u^{-1}e) v e`.
pub fn check_f_bar_f(q_grid: &[u64]) -> Result<CheckResult> {
    let mut c = CheckResult::new("self-conjugate blocks: f bar(f) = s'(ue - u^-1 e) v e");
    for &q in q_grid {
        let field = FieldSpec::from_order(q)?;
        for n in small_block_lengths(q) {
            let d = decompose(n, &field)?;
            let ring = d.algebra.ring();
            for comp in small_self_conj_blocks(&d) {
                let sc = comp.self_conj.as_ref().unwrap();
                let f = build_ct(&d, comp.index)?;
                let lhs = d.algebra.mul(&f, &d.algebra.bar(&f));
                let diff = ring.sub(&sc.ue, &ring.bar(&sc.ue));
                let rhs = AlgElem { a: ring.zero(), b: ring.mul(&sc.s_prime, &diff) };
                c.record(lhs == rhs, || {
                    format!(
                        "n={n} q={q} block {}: f bar(f) is {}, s' is {}",
                        comp.index,
                        if d.algebra.is_zero(&lhs) { "zero" } else { "nonzero" },
                        if sc.s_prime.is_zero() { "zero" } else { "nonzero" }
                    )
                });
            }
        }
    }
    Ok(c)
}

/// For odd `n <= 35` coprime to `q`: all nontrivial idempotents are
/// self-conjugate iff `-1 in <q>` mod n, and none is iff `ord_n(q)` is odd.
pub fn check_pairing_pattern(q_grid: &[u64]) -> Result<CheckResult> {
    let mut c = CheckResult::new("conjugation pattern of idempotents vs -1 in <q> and ord parity");
    for &q in q_grid {
        let field = FieldSpec::from_order(q)?;
        for n in (3..=PAIRING_N_LIMIT).step_by(2).filter(|&n| gcd(n, q) == 1) {
            let set = primitive_idempotents(n as usize, &field)?;
            let pairing = conj_pairing(&set);
            let self_conj = pairing[1..].iter().filter(|p| matches!(p, Conjugacy::SelfConjugate)).count();
            let all = self_conj == pairing.len() - 1;
            let none = self_conj == 0;
            let ord = mult_order(q, n)?;
            let mut x = 1u64;
            let mut minus_one = false;
            for _ in 0..ord {
                minus_one |= x == n - 1;
                x = x * q % n;
            }
            c.record(all == minus_one && none == (ord % 2 == 1), || {
                format!("n={n} q={q}: {self_conj} self-conjugate, -1 in <q>: {minus_one}, ord {ord}")
            });
        }
    }
    Ok(c)
}
