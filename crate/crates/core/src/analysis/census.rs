use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::entropy::{entropy_q, BOUND_SLACK};
use super::weight::{hamming_weight, min_weight_exact, WeightReport};
use crate::algebra::Decomposition;
use crate::code::{twist, BetaVector, KStar, LinearCode, Part};
use crate::cyclic::lambda_n;
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::linalg::EchelonBasis;

/// Largest `|K^*|` enumerated by [`census`].
pub const K_STAR_BUDGET: u128 = 100_000;

/// Minimum weight of one twisted code `C beta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub index: u128,
    pub beta: Vec<u128>,
    pub min_weight: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeltaSummary {
    pub delta: f64,
    pub h_q: f64,
    /// `1/4 - h_q(delta) - log_q n / lambda(n)`.
    pub exponent_term: f64,
    /// Whether `exponent_term > 0`, the hypothesis of the bound.
    pub hypothesis: bool,
    /// `|{beta : Delta(C beta) <= delta}|`.
    pub count: u128,
    /// `|K^*| q^{-2 lambda(n) exponent_term}`, times `q^{h_q(delta)}` when
    /// the code contains `C_0`.
    pub bound: f64,
    /// `count <= bound`; meaningful only under the hypothesis.
    pub bound_holds: bool,
    /// `sum over low-weight d of |K^*| / q^{l_d}`, when computed.
    pub union_bound: Option<f64>,
    pub union_bound_holds: Option<bool>,
    /// Low-weight elements `d` whose `l_d` was checked to lie in
    /// `[k_1, (n-1)/2]`.
    pub ell_checked: Option<u128>,
    pub ell_in_range: Option<bool>,
    /// Elements `d` for which `|{beta : d in C beta}| <= |K^*| / q^{l_d}`
    /// was checked directly, and whether all passed.
    pub per_d_checked: Option<u128>,
    pub per_d_holds: Option<bool>,
}

impl DeltaSummary {
    /// Every check that was performed passed (the stated bound only counts
    /// when its hypothesis holds).
    pub fn passed(&self, k_star: u128) -> bool {
        self.count <= k_star
            && (!self.hypothesis || self.bound_holds)
            && self.union_bound_holds != Some(false)
            && self.ell_in_range != Some(false)
            && self.per_d_holds != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    pub q: u32,
    pub lambda: u64,
    pub k_star: u128,
    pub hatted: bool,
    pub rows: Vec<CensusRow>,
    pub deltas: Vec<DeltaSummary>,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.deltas.iter().all(|d| d.passed(self.k_star))
    }

    /// One line per beta: `index,beta,min_weight,relative_distance`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["index", "beta", "min_weight", "relative_distance"]).unwrap();
        for r in &self.rows {
            let beta: Vec<String> = r.beta.iter().map(u128::to_string).collect();
            w.write_record([
                r.index.to_string(),
                beta.join(" "),
                r.min_weight.to_string(),
                format!("{}", r.min_weight as f64 / (2 * self.n) as f64),
            ])
            .unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}

/// Budgets for a census.
#[derive(Clone, Copy, Debug)]
pub struct CensusBudget {
    /// Max `|K^*|`.
    pub k_star: u128,
    /// Max codewords per twisted code.
    pub words: u128,
    /// Max elements of `A` (or `C_0 + A`) enumerated for the union bound.
    pub ambient: u128,
    /// Max `(d, beta)` membership tests for the per-`d` check.
    pub per_d: u128,
}

impl Default for CensusBudget {
    fn default() -> Self {
        CensusBudget { k_star: K_STAR_BUDGET, words: 1 << 22, ambient: 1 << 22, per_d: 1 << 22 }
    }
}

/// `|K(C)^{<= delta}|` for each delta by enumerating every `beta in K^*`,
/// compared against the stated bound, the exact union bound and the per-`d`
/// bound. `parts` containing block 0 selects the hatted bound.
pub fn census(
    dec: &Decomposition,
    kstar: &KStar,
    parts: &[Part],
    deltas: &[f64],
    budget: CensusBudget,
) -> Result<CensusReport> {
    let n = dec.n();
    let q = dec.field().q();
    let size = kstar.size();
    if size > budget.k_star {
        return Err(Error::BudgetExceeded { needed: size, budget: budget.k_star });
    }
    let hatted = parts.iter().any(|p| p.block == 0);
    let lambda = lambda_n(n as u64, q as u64)?;
    for &d in deltas {
        entropy_q(q as u64, d.min(1.0 - 1.0 / q as f64))?;
        if !(0.0..=1.0).contains(&d) {
            return Err(Error::DomainError(format!("delta = {d} outside [0, 1]")));
        }
    }
    let rows = (0..size)
        .into_par_iter()
        .map(|i| {
            let beta = kstar.beta(i);
            let code = twist(dec, parts, kstar, &beta)?;
            let w = min_weight_exact(&code, budget.words)?;
            Ok(CensusRow { index: i, beta: beta.units, min_weight: w.min_weight })
        })
        .collect::<Result<Vec<_>>>()?;

    let low = LowWeightElements::collect(dec, parts, kstar, deltas, budget)?;
    let log_q_n = (n as f64).ln() / (q as f64).ln();
    let n_len = 2 * n;
    let summaries = deltas
        .iter()
        .enumerate()
        .map(|(di, &delta)| {
            let h = entropy_q(q as u64, delta.min(1.0 - 1.0 / q as f64))?;
            let term = 0.25 - h - log_q_n / lambda as f64;
            let mut exponent = -2.0 * lambda as f64 * term;
            if hatted {
                exponent += h;
            }
            let bound = size as f64 * (q as f64).powf(exponent);
            let count = rows.iter().filter(|r| r.min_weight as f64 <= delta * n_len as f64 + 1e-9).count() as u128;
            let mut s = DeltaSummary {
                delta,
                h_q: h,
                exponent_term: term,
                hypothesis: term > 0.0,
                count,
                bound,
                bound_holds: count as f64 <= bound + BOUND_SLACK,
                union_bound: None,
                union_bound_holds: None,
                ell_checked: None,
                ell_in_range: None,
                per_d_checked: None,
                per_d_holds: None,
            };
            if let Some(low) = &low {
                let ub = low.union_bound(di, size, q);
                s.union_bound = Some(ub);
                s.union_bound_holds = Some(count as f64 <= ub + BOUND_SLACK);
                s.ell_checked = Some(low.count(di));
                s.ell_in_range = Some(low.ell_in_range(di, n));
                if let Some(per_d) = &low.per_d {
                    s.per_d_checked = Some(low.count(di));
                    s.per_d_holds = Some(per_d[di]);
                }
            }
            Ok(s)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CensusReport { n, q, lambda, k_star: size, hatted, rows, deltas: summaries })
}

/// Nonzero elements `d_0 + d` (with `d_0` in the block-0 part, `d in A`) of
/// weight at most `delta n_len`, grouped by `l_d`.
struct LowWeightElements {
    /// For each delta: `(l_d, count)` pairs, plus the number with `d = 0`.
    by_delta: Vec<Vec<(usize, u128)>>,
    k1: usize,
    per_d: Option<Vec<bool>>,
}

impl LowWeightElements {
    fn collect(
        dec: &Decomposition,
        parts: &[Part],
        kstar: &KStar,
        deltas: &[f64],
        budget: CensusBudget,
    ) -> Result<Option<Self>> {
        let alg = &dec.algebra;
        let f = dec.field();
        let q = f.q() as u128;
        let n_len = 2 * dec.n();
        let blocks = dec.blocks();
        let k1 = blocks.iter().map(|c| c.k).min().unwrap_or(0);
        // basis: the block-0 generator (if any), then each A_t
        let mut basis: Vec<(usize, Vec<FieldElem>)> = Vec::new();
        if let Some(p0) = parts.iter().find(|p| p.block == 0) {
            for r in alg.left_ideal_rows(std::slice::from_ref(&p0.generator)) {
                basis.push((0, r));
            }
        }
        for c in blocks {
            for r in alg.left_ideal_rows(std::slice::from_ref(&c.identity)) {
                basis.push((c.index, r));
            }
        }
        let dim = basis.len();
        let total = (0..dim).try_fold(1u128, |acc, _| acc.checked_mul(q)).unwrap_or(u128::MAX);
        if total > budget.ambient {
            return Ok(None);
        }
        let max_delta = deltas.iter().cloned().fold(0.0, f64::max);
        let max_w = (max_delta * n_len as f64 + 1e-9).floor() as usize;
        let blocks_k: Vec<usize> = std::iter::once(0).chain(blocks.iter().map(|c| c.k)).collect();
        // enumerate all coefficient vectors; keep low-weight ones with their support blocks
        let qu = q as u64;
        let low: Vec<(usize, usize, Vec<FieldElem>)> = (0..total as u64)
            .into_par_iter()
            .filter_map(|mut idx| {
                let mut word = vec![FieldElem::ZERO; n_len];
                let mut touched = vec![false; blocks_k.len()];
                for (b, row) in &basis {
                    let c = FieldElem((idx % qu) as u32);
                    idx /= qu;
                    if c != FieldElem::ZERO {
                        touched[*b] = true;
                        for (w, &g) in word.iter_mut().zip(row) {
                            *w = f.fadd(*w, f.fmul(c, g));
                        }
                    }
                }
                let w = hamming_weight(&word);
                if w == 0 || w > max_w {
                    return None;
                }
                let ell: usize = (1..blocks_k.len()).filter(|&t| touched[t]).map(|t| blocks_k[t]).sum();
                Some((w, ell, word))
            })
            .collect();
        let by_delta = deltas
            .iter()
            .map(|&delta| {
                let lim = (delta * n_len as f64 + 1e-9).floor() as usize;
                let mut acc: std::collections::BTreeMap<usize, u128> = Default::default();
                for (w, ell, _) in &low {
                    if *w <= lim {
                        *acc.entry(*ell).or_default() += 1;
                    }
                }
                acc.into_iter().collect()
            })
            .collect();
        let tests = (low.len() as u128).saturating_mul(kstar.size());
        let per_d = if tests <= budget.per_d {
            Some(per_d_check(dec, parts, kstar, deltas, &low, n_len)?)
        } else {
            None
        };
        Ok(Some(LowWeightElements { by_delta, k1, per_d }))
    }

    fn union_bound(&self, di: usize, k_star: u128, q: u32) -> f64 {
        self.by_delta[di]
            .iter()
            .map(|&(ell, count)| count as f64 * k_star as f64 / (q as f64).powi(ell as i32))
            .fold(0.0, |a, b| a + b)
    }

    fn count(&self, di: usize) -> u128 {
        self.by_delta[di].iter().map(|e| e.1).sum()
    }

    /// `k_1 <= l_d <= (n-1)/2`; elements with `d = 0` (only a block-0 part)
    /// have `l_d = 0` and are excluded from the range check.
    fn ell_in_range(&self, di: usize, n: usize) -> bool {
        self.by_delta[di].iter().all(|&(ell, _)| ell == 0 || (self.k1 <= ell && ell <= (n - 1) / 2))
    }
}

/// For each delta: whether every low-weight `d` lies in at most
/// `|K^*| / q^{l_d}` of the codes `C beta`.
fn per_d_check(
    dec: &Decomposition,
    parts: &[Part],
    kstar: &KStar,
    deltas: &[f64],
    low: &[(usize, usize, Vec<FieldElem>)],
    n_len: usize,
) -> Result<Vec<bool>> {
    let f = dec.field();
    let q = f.q() as f64;
    let size = kstar.size();
    let codes: Vec<LinearCode> =
        (0..size).into_par_iter().map(|i| twist(dec, parts, kstar, &kstar.beta(i))).collect::<Result<_>>()?;
    let bases: Vec<EchelonBasis<FieldElem>> = codes
        .iter()
        .map(|c| {
            let mut b = EchelonBasis::new(n_len);
            for r in c.gen() {
                b.insert(f, r);
            }
            b
        })
        .collect();
    let ok: Vec<(usize, bool)> = low
        .par_iter()
        .map(|(w, ell, word)| {
            let hits = bases.iter().filter(|b| b.contains(f, word)).count() as f64;
            (*w, hits <= size as f64 / q.powi(*ell as i32) + BOUND_SLACK)
        })
        .collect();
    Ok(deltas
        .iter()
        .map(|&delta| {
            let lim = (delta * n_len as f64 + 1e-9).floor() as usize;
            ok.iter().filter(|(w, _)| *w <= lim).all(|(_, b)| *b)
        })
        .collect())
}

/// How to search for a beta with `Delta(C beta) > delta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "strategy")]
pub enum SearchStrategy {
    Exhaustive,
    Sampled { seed: u64, tries: usize },
}

/// A beta with `Delta(C beta) > delta`, for `delta in (0, 1 - 1/q)` with
/// `h_q(delta) < 1/4`.
pub fn find_good_beta(
    dec: &Decomposition,
    kstar: &KStar,
    parts: &[Part],
    delta: f64,
    strategy: SearchStrategy,
    word_budget: u128,
) -> Result<(BetaVector, WeightReport)> {
    let q = dec.field().q() as u64;
    let max = 1.0 - 1.0 / q as f64;
    if !(delta > 0.0 && delta < max) {
        return Err(Error::DomainError(format!("delta = {delta} outside (0, {max})")));
    }
    let h = entropy_q(q, delta)?;
    if h >= 0.25 {
        return Err(Error::DomainError(format!("h_q({delta}) = {h} >= 1/4")));
    }
    let check = |beta: BetaVector| -> Result<Option<(BetaVector, WeightReport)>> {
        let code = twist(dec, parts, kstar, &beta)?;
        let w = min_weight_exact(&code, word_budget)?;
        Ok((w.relative_distance_f64() > delta).then_some((beta, w)))
    };
    match strategy {
        SearchStrategy::Exhaustive => {
            let size = kstar.size();
            if size > K_STAR_BUDGET {
                return Err(Error::BudgetExceeded { needed: size, budget: K_STAR_BUDGET });
            }
            for i in 0..size {
                if let Some(hit) = check(kstar.beta(i))? {
                    return Ok(hit);
                }
            }
        }
        SearchStrategy::Sampled { seed, tries } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..tries {
                if let Some(hit) = check(kstar.random_beta(&mut rng))? {
                    return Ok(hit);
                }
            }
        }
    }
    Err(Error::NoneFound(delta))
}

/// The parts `C_1 ... C_m` (and `C_0` when `hatted`) used by the census.
pub fn census_parts(dec: &Decomposition, hatted: bool) -> Result<Vec<Part>> {
    let mut parts = Vec::new();
    if hatted {
        let c0 = crate::code::build_c0(dec)
            .ok_or_else(|| Error::HypothesisUnmet("C_0 needs q even or 4 | q - 1".into()))?;
        parts.push(Part { block: 0, generator: c0 });
    }
    for c in dec.blocks() {
        parts.push(Part { block: c.index, generator: crate::code::build_ct(dec, c.index)? });
    }
    Ok(parts)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::decompose;
    use crate::field::FieldSpec;

    fn setup(n: usize, q: u64, hatted: bool) -> (Decomposition, KStar, Vec<Part>) {
        let d = decompose(n, &FieldSpec::from_order(q).unwrap()).unwrap();
        let ks = KStar::new(&d).unwrap();
        let parts = census_parts(&d, hatted).unwrap();
        (d, ks, parts)
    }

    #[test]
    fn trivial_deltas() {
        let (d, ks, parts) = setup(3, 7, false);
        let r = census(&d, &ks, &parts, &[0.0, 1.0], CensusBudget::default()).unwrap();
        assert_eq!(r.k_star, 48);
        assert_eq!(r.deltas[0].count, 0);
        assert_eq!(r.deltas[1].count, 48);
        assert!(r.passed());
    }

    #[test]
    fn small_delta_census() {
        let (d, ks, parts) = setup(3, 7, false);
        let r = census(&d, &ks, &parts, &[0.05, 0.2, 0.4], CensusBudget::default()).unwrap();
        for s in &r.deltas {
            assert!(s.union_bound.is_some() && s.per_d_holds.is_some());
            assert!(s.passed(r.k_star), "{s:?}");
        }
        let csv = r.to_csv();
        assert_eq!(csv.lines().count(), 49);
        assert!(csv.starts_with("index,beta,min_weight,relative_distance\n"));
    }

    #[test]
    fn hatted_census() {
        let (d, ks, parts) = setup(3, 5, true);
        let r = census(&d, &ks, &parts, &[0.2, 0.4], CensusBudget::default()).unwrap();
        assert!(r.hatted);
        assert!(r.passed());
    }

    #[test]
    fn good_beta_search() {
        let (d, ks, parts) = setup(3, 5, false);
        let (_, w) = find_good_beta(&d, &ks, &parts, 0.05, SearchStrategy::Exhaustive, 1 << 20).unwrap();
        assert!(w.relative_distance_f64() > 0.05);
        let (d, ks, parts) = setup(7, 3, false);
        let r = find_good_beta(&d, &ks, &parts, 0.05, SearchStrategy::Sampled { seed: 1, tries: 20 }, 1 << 20);
        assert!(r.is_ok());
        assert!(matches!(
            find_good_beta(&d, &ks, &parts, 0.5, SearchStrategy::Exhaustive, 1 << 20),
            Err(Error::DomainError(_))
        ));
        // an empty sample finds nothing
        let (d, ks, parts) = setup(3, 5, false);
        assert!(matches!(
            find_good_beta(&d, &ks, &parts, 0.04, SearchStrategy::Sampled { seed: 0, tries: 0 }, 1 << 20),
            Err(Error::NoneFound(_))
        ));
    }
}
