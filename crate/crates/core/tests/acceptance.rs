//! End-to-end acceptance checks, one test per criterion. Each prints a line
//! `[acceptance] criterion N: PASS|FAIL <detail>` before asserting.

use std::time::{Duration, Instant};

use consta_dihedral::algebra::{decompose, decompose_twisted, AlgElem, Algebra, ComponentKind, Decomposition, Mat2, Twist};
use consta_dihedral::analysis::{
    balanced_check, census, census_parts, good_n_predicates, CensusBudget, Profile, K_STAR_BUDGET,
};
use consta_dihedral::code::{build_ct, build_lcd_code, plain_code, self_dual_code, self_orthogonal_code, KStar, LinearCode};
use consta_dihedral::dihedral::{cab_code, count_cab_codes, counterexample_check, simple_left_ideals_m2, CountVerification};
use consta_dihedral::field::{FieldOps, FieldSpec};
use consta_dihedral::util::gcd;
use consta_dihedral::verify::check_self_conj_isotropy;
use consta_dihedral::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(n: u32, pass: bool, detail: &str) {
    println!("[acceptance] criterion {n}: {} {detail}", if pass { "PASS" } else { "FAIL" });
}

fn field(q: u64) -> FieldSpec {
    FieldSpec::from_order(q).unwrap()
}

/// The betas to test: all of `K*` when it has at most `K_STAR_BUDGET`
/// elements, else `samples` seeded draws.
fn betas(ks: &KStar, samples: usize, seed: u64) -> (Vec<consta_dihedral::code::BetaVector>, bool) {
    if ks.size() <= K_STAR_BUDGET {
        ((0..ks.size()).map(|i| ks.beta(i)).collect(), true)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        ((0..samples).map(|_| ks.random_beta(&mut rng)).collect(), false)
    }
}

#[test]
fn criterion_1_counterexample() {
    let start = Instant::now();
    let r = counterexample_check().unwrap();
    let elapsed = start.elapsed();
    let pass = r.holds() && r.dim_c > 0 && elapsed < Duration::from_secs(1);
    report(
        1,
        pass,
        &format!(
            "idempotents match {}, C bar(D) = 0 {}, <C,D> = 0 {}, bar(D)C contains e_bar v != 0 {} ({:.3} s)",
            r.idempotents_match,
            r.c_bar_d_zero,
            r.inner_zero,
            r.witness_is_e_bar_v && r.bar_d_c_nonzero,
            elapsed.as_secs_f64()
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_2_self_dual() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for (n, q) in [(3usize, 5u64), (5, 5), (3, 13), (3, 4), (7, 4), (3, 9)] {
        let d = match decompose(n, &field(q)) {
            Ok(d) => d,
            Err(e) => {
                failures.push(format!("(n={n}, q={q}): {e}"));
                continue;
            }
        };
        let ks = KStar::new(&d).unwrap();
        let (list, _) = betas(&ks, 1000, 7);
        for b in &list {
            checked += 1;
            match self_dual_code(&d, Some((&ks, b))) {
                Ok(c) if c.k_dim() == n && c.hull_dimension() == n => {}
                Ok(c) => failures.push(format!("(n={n}, q={q}) beta {:?}: dim {} hull {}", b.units, c.k_dim(), c.hull_dimension())),
                Err(e) => failures.push(format!("(n={n}, q={q}) beta {:?}: {e}", b.units)),
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(60);
    report(2, pass, &format!("{checked} codes checked, {} failures {:?} ({:.1} s)", failures.len(), failures, elapsed.as_secs_f64()));
    assert!(pass);
}

#[test]
fn criterion_3_lcd() {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    let mut hulls = std::collections::BTreeMap::new();
    for (n, q) in [(7usize, 3u64), (11, 7)] {
        let flags = good_n_predicates(q, n as u64).unwrap();
        if !flags.qualifies(Profile::Lcd) {
            failures.push(format!("(n={n}, q={q}): predicates not met"));
            continue;
        }
        let d = decompose(n, &field(q)).unwrap();
        let ks = KStar::new(&d).unwrap();
        let (list, _) = betas(&ks, 1000, 11);
        for b in &list {
            for with_a0 in [false, true] {
                checked += 1;
                let c = build_lcd_code(&d, Some((&ks, b)), with_a0).unwrap();
                let h = c.hull_dimension();
                *hulls.entry((n, q, with_a0, c.k_dim(), h)).or_insert(0usize) += 1;
                if h != 0 {
                    failures.push(format!("(n={n}, q={q}, A0={with_a0}) beta {:?}: hull {h}", b.units));
                }
            }
        }
    }
    let pass = failures.is_empty();
    let summary: Vec<String> = hulls
        .iter()
        .map(|((n, q, a0, k, h), c)| format!("(n={n},q={q},A0={a0}) dim {k} hull {h} x{c}"))
        .collect();
    report(3, pass, &format!("{checked} codes, {} with nonzero hull (first: {:?}); {}", failures.len(), failures.first(), summary.join("; ")));
    assert!(pass);
}

#[test]
fn criterion_4_isotropy_dichotomy() {
    let r = check_self_conj_isotropy(&[2, 3, 4, 5, 7, 9, 13]).unwrap();
    report(4, r.passed, &format!("{} blocks, failures {:?}", r.cases, r.failures));
    assert!(r.passed);
}

#[test]
fn criterion_5_counting() {
    let small = count_cab_codes(3, &field(7), 0, 0).unwrap();
    let exhaustive_ok = small.total == 8
        && small.lcd == 6
        && small.passed()
        && matches!(small.verifications[..], [CountVerification::Exhaustive { built: 8, distinct: 8, lcd: 6, all_dim_n: true }]);
    let big = count_cab_codes(11, &field(3), 200, 2024).unwrap();
    let sampled_ok = big.total == 244
        && big.lcd == 242
        && big.passed()
        && big.verifications.iter().any(|v| matches!(v, CountVerification::Sampled { samples: 200, agree: 200, .. }));
    let pass = exhaustive_ok && sampled_ok;
    report(
        5,
        pass,
        &format!(
            "(3, GF(7)): {}/{} {:?}; (11, GF(3)): {}/{} {:?}",
            small.total, small.lcd, small.verifications, big.total, big.lcd, big.verifications
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_6_simple_ideals() {
    let counts: Vec<(u64, usize)> = [2u64, 3, 4, 5, 7].iter().map(|&q| (q, simple_left_ideals_m2(&field(q)).len())).collect();
    let pass = counts.iter().all(|&(q, c)| c as u64 == q + 1);
    report(6, pass, &format!("(q, ideals): {counts:?}"));
    assert!(pass);
}

/// Every code the library constructs at length parameter `n` over GF(q).
fn constructed_codes(n: usize, q: u64, rng: &mut ChaCha8Rng) -> Vec<(String, LinearCode, Twist)> {
    let f = field(q);
    let d = decompose(n, &f).unwrap();
    let ks = KStar::new(&d).unwrap();
    let beta = ks.random_beta(rng);
    let mut out = Vec::new();
    out.push(("plain".to_string(), plain_code(&d, None).unwrap(), Twist::Consta));
    out.push(("plain-beta".to_string(), plain_code(&d, Some((&ks, &beta))).unwrap(), Twist::Consta));
    if let Ok(c) = self_dual_code(&d, Some((&ks, &beta))) {
        out.push(("self-dual".to_string(), c, Twist::Consta));
    }
    if let Ok(c) = self_orthogonal_code(&d, Some((&ks, &beta))) {
        out.push(("self-orthogonal".to_string(), c, Twist::Consta));
    }
    for with_a0 in [false, true] {
        if let Ok(c) = build_lcd_code(&d, Some((&ks, &beta)), with_a0) {
            out.push((format!("lcd(A0={with_a0})"), c, Twist::Consta));
        }
    }
    if let Ok(dd) = decompose_twisted(n, &f, Twist::Dihedral) {
        if dd.blocks().iter().all(|c| c.kind.is_paired()) && q % 2 == 1 {
            let ab: Vec<(u64, u64)> = dd
                .blocks()
                .iter()
                .map(|c| {
                    let s = q.pow(c.k as u32);
                    (rng.gen_range(0..s), rng.gen_range(1..s))
                })
                .collect();
            out.push(("dihedral-cab".to_string(), cab_code(&dd, &ab).unwrap(), Twist::Dihedral));
        }
    }
    out
}

#[test]
fn criterion_7_balanced() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut codes = 0usize;
    let mut entropy_checked = 0usize;
    let mut failures = Vec::new();
    for q in [2u64, 3, 4, 5, 7, 9, 13] {
        for n in (3..=11usize).step_by(2).filter(|&n| gcd(n as u64, q) == 1) {
            for (name, code, twist) in constructed_codes(n, q, &mut rng) {
                codes += 1;
                let r = balanced_check(&code, twist, 1_000_000).unwrap();
                let words = (q as f64).powi(code.k_dim() as i32);
                if words <= 1e6 {
                    entropy_checked += 1;
                    if r.entropy_checks.len() != 3 {
                        failures.push(format!("(n={n},q={q}) {name}: entropy census missing"));
                    }
                }
                if !r.passed() {
                    failures.push(format!("(n={n},q={q}) {name}: coverage {:?} entropy {:?}", r.coverage, r.entropy_checks));
                }
            }
        }
    }
    let pass = failures.is_empty();
    report(7, pass, &format!("{codes} codes balanced-checked, {entropy_checked} with entropy census, failures {failures:?}"));
    assert!(pass);
}

#[test]
fn criterion_8_census_bounds() {
    const WORK_LIMIT: f64 = 3e7;
    let mut instances = 0usize;
    let mut hypothesis_instances = 0usize;
    let mut union_checked = 0usize;
    let mut per_d_checked = 0usize;
    let mut failures = Vec::new();
    for q in [2u64, 3, 4, 5, 7, 9, 13] {
        let f = field(q);
        for n in (3..=11usize).step_by(2).filter(|&n| gcd(n as u64, q) == 1) {
            let d = decompose(n, &f).unwrap();
            let ks = KStar::new(&d).unwrap();
            for hatted in [false, true] {
                let Ok(parts) = census_parts(&d, hatted) else { continue };
                let k = if hatted { n } else { n - 1 };
                let work = ks.size() as f64 * (q as f64).powi(k as i32);
                if ks.size() > K_STAR_BUDGET || work > WORK_LIMIT {
                    continue;
                }
                let deltas: Vec<f64> =
                    [0.05, 0.1, 0.15, 0.2, 0.25, 0.3].into_iter().filter(|&x| x < 1.0 - 1.0 / q as f64).collect();
                let r = census(&d, &ks, &parts, &deltas, CensusBudget::default()).unwrap();
                for s in &r.deltas {
                    instances += 1;
                    hypothesis_instances += s.hypothesis as usize;
                    union_checked += s.union_bound.is_some() as usize;
                    per_d_checked += s.per_d_holds.is_some() as usize;
                    if !s.passed(r.k_star) {
                        failures.push(format!("(n={n},q={q},hatted={hatted},delta={}): {s:?}", s.delta));
                    }
                }
            }
        }
    }
    let pass = failures.is_empty() && instances > 0;
    report(
        8,
        pass,
        &format!(
            "{instances} (n,q,delta) instances, {hypothesis_instances} satisfy the exponent hypothesis, \
             union bound checked at {union_checked}, per-d bound at {per_d_checked}, failures {failures:?}"
        ),
    );
    assert!(pass);
}

#[derive(Default)]
struct Suite {
    cases: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Suite {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 10 {
                self.failures.push(what());
            }
        }
    }
}

fn random_in_block(d: &Decomposition, t: usize, rng: &mut ChaCha8Rng) -> AlgElem {
    let x = d.algebra.random(rng);
    d.project(t, &x)
}

#[test]
fn criterion_9_property_suite() {
    const CASES: usize = 100;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut algebra = Suite::default();
    let mut iso = Suite::default();
    let mut f_bar_f = Suite::default();
    let mut dims = Suite::default();

    let algebra_grid = [(3usize, 7u64), (5, 3), (7, 2), (3, 5), (9, 4), (5, 5), (7, 3), (11, 3)];
    for (n, q) in algebra_grid {
        for twist in [Twist::Consta, Twist::Dihedral] {
            let alg = Algebra::new(n, &field(q), twist).unwrap();
            for _ in 0..CASES {
                let (x, y) = (alg.random(&mut rng), alg.random(&mut rng));
                let lhs = alg.bar(&alg.mul(&x, &y));
                let rhs = alg.mul(&alg.bar(&y), &alg.bar(&x));
                algebra.check(lhs == rhs && alg.bar(&alg.bar(&x)) == x, || format!("bar at (n={n},q={q},{twist:?})"));
                let ip = alg.inner(&x, &y) == alg.sigma(&alg.mul(&x, &alg.bar(&y)));
                algebra.check(ip, || format!("inner product at (n={n},q={q},{twist:?})"));
            }
        }
    }

    let decomposition_grid =
        [(3usize, 7u64), (5, 3), (7, 2), (3, 5), (9, 4), (7, 3), (11, 3), (5, 4), (13, 3), (9, 2), (11, 7), (5, 7), (3, 2)];
    for (n, q) in decomposition_grid {
        for twist in [Twist::Consta, Twist::Dihedral] {
            let d = decompose_twisted(n, &field(q), twist).unwrap();
            let (sum, lambda_ok) = d.dimension_accounting();
            dims.check(sum == 2 * n - 2 && lambda_ok, || format!("(n={n},q={q},{twist:?}): sum 4k = {sum}, lambda ok {lambda_ok}"));
            for comp in d.blocks() {
                let has_matrices = matches!(comp.kind, ComponentKind::Paired { .. } | ComponentKind::SelfConj { .. });
                if !has_matrices {
                    continue;
                }
                let t = comp.index;
                let sub = comp.subfield.as_ref().unwrap();
                for _ in 0..CASES {
                    let (x, y) = (random_in_block(&d, t, &mut rng), random_in_block(&d, t, &mut rng));
                    let (mx, my) = (d.iso_to_mat2(t, &x).unwrap(), d.iso_to_mat2(t, &y).unwrap());
                    let round = d.iso_from_mat2(t, &mx).unwrap() == x;
                    let mult = d.iso_to_mat2(t, &d.algebra.mul(&x, &y)).unwrap() == mx.mul(sub, &my);
                    let idx = [0; 4].map(|_| rng.gen_range(0..sub.order()));
                    let m = Mat2::new(sub.element(idx[0]), sub.element(idx[1]), sub.element(idx[2]), sub.element(idx[3]));
                    let back = d.iso_to_mat2(t, &d.iso_from_mat2(t, &m).unwrap()).unwrap() == m;
                    iso.check(round && mult && back, || {
                        format!("(n={n},q={q},{twist:?}) block {t}: round trip {round}, multiplicative {mult}, inverse {back}")
                    });
                }
            }
            if twist == Twist::Consta {
                let ring = d.algebra.ring();
                for comp in d.blocks().iter().filter(|c| matches!(c.kind, ComponentKind::SelfConj { .. })) {
                    let sc = comp.self_conj.as_ref().unwrap();
                    let f = build_ct(&d, comp.index).unwrap();
                    let lhs = d.algebra.mul(&f, &d.algebra.bar(&f));
                    let rhs = AlgElem { a: ring.zero(), b: ring.mul(&sc.s_prime, &ring.sub(&sc.ue, &ring.bar(&sc.ue))) };
                    f_bar_f.check(lhs == rhs, || {
                        format!(
                            "(n={n},q={q}) block {}: f bar(f) {} but s'(ue - u^-1 e) v {}",
                            comp.index,
                            if d.algebra.is_zero(&lhs) { "= 0" } else { "!= 0" },
                            if rhs.b.is_zero() { "= 0" } else { "!= 0" }
                        )
                    });
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let suites = [("algebra identities", &algebra), ("block isomorphisms", &iso), ("f bar(f) identity", &f_bar_f), ("dimension accounting", &dims)];
    let pass = suites.iter().all(|(_, s)| s.failed == 0) && elapsed < Duration::from_secs(30);
    let detail: Vec<String> = suites
        .iter()
        .map(|(name, s)| format!("{name}: {} cases, {} failures {:?}", s.cases, s.failed, s.failures))
        .collect();
    report(9, pass, &format!("{} ({:.1} s)", detail.join("; "), elapsed.as_secs_f64()));
    assert!(pass);
}

#[test]
fn gcd_precondition_is_reported() {
    assert!(matches!(decompose(5, &field(5)), Err(Error::GcdViolation { .. })));
}
