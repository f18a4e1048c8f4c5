use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};
use crate::linalg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightMethod {
    Exhaustive,
    Pruned,
}

/// Minimum weight of a code. For [`WeightMethod::Pruned`], `min_weight` is
/// an upper bound and `lower_bound` a proven lower bound; they coincide when
/// the bracket closed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub min_weight: usize,
    pub lower_bound: usize,
    /// `min_weight / n_len`.
    pub relative_distance: Ratio<u64>,
    /// `k / n_len`.
    pub rate: Ratio<u64>,
    pub method: WeightMethod,
    pub words_examined: u128,
}

impl WeightReport {
    pub fn is_exact(&self) -> bool {
        self.lower_bound == self.min_weight
    }

    pub fn relative_distance_f64(&self) -> f64 {
        *self.relative_distance.numer() as f64 / *self.relative_distance.denom() as f64
    }

    fn new(code: &LinearCode, min_weight: usize, lower_bound: usize, method: WeightMethod, words: u128) -> Self {
        let n = code.n_len() as u64;
        WeightReport {
            min_weight,
            lower_bound,
            relative_distance: Ratio::new(min_weight as u64, n),
            rate: Ratio::new(code.k_dim() as u64, n),
            method,
            words_examined: words,
        }
    }
}

pub fn hamming_weight(word: &[FieldElem]) -> usize {
    word.iter().filter(|x| **x != FieldElem::ZERO).count()
}

/// `q^k`, or `BudgetExceeded` when it is above `budget`.
pub fn code_size(code: &LinearCode, budget: u128) -> Result<u128> {
    let q = code.field().q() as u128;
    let size = (0..code.k_dim()).try_fold(1u128, |acc, _| acc.checked_mul(q)).unwrap_or(u128::MAX);
    if size > budget {
        return Err(Error::BudgetExceeded { needed: size, budget });
    }
    Ok(size)
}

/// Number of codewords of each weight `0..=n_len`, by enumerating all
/// `q^k` messages.
pub fn weight_distribution(code: &LinearCode, budget: u128) -> Result<Vec<u128>> {
    code_size(code, budget)?;
    let f = code.field();
    let q = f.q() as u64;
    let k = code.k_dim();
    let n = code.n_len();
    let gen = code.gen();
    let mut top = 0;
    while top < k && q.pow(top as u32) < 256 {
        top += 1;
    }
    let low = k - top;
    let hist = (0..q.pow(top as u32))
        .into_par_iter()
        .map(|mut hi| {
            let mut word = vec![FieldElem::ZERO; n];
            for row in &gen[low..] {
                let c = FieldElem((hi % q) as u32);
                hi /= q;
                axpy(f, &mut word, c, row);
            }
            let mut hist = vec![0u128; n + 1];
            let mut digits = vec![0u32; low];
            loop {
                hist[hamming_weight(&word)] += 1;
                let mut j = 0;
                loop {
                    if j == low {
                        return hist;
                    }
                    let old = digits[j];
                    if (old as u64) + 1 < q {
                        digits[j] = old + 1;
                        let delta = f.fsub(FieldElem(old + 1), FieldElem(old));
                        axpy(f, &mut word, delta, &gen[j]);
                        break;
                    }
                    digits[j] = 0;
                    axpy(f, &mut word, f.fneg(FieldElem(old)), &gen[j]);
                    j += 1;
                }
            }
        })
        .reduce(|| vec![0u128; n + 1], |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect());
    Ok(hist)
}

fn axpy(f: &FieldSpec, word: &mut [FieldElem], c: FieldElem, row: &[FieldElem]) {
    if c == FieldElem::ZERO {
        return;
    }
    for (w, &g) in word.iter_mut().zip(row) {
        if g != FieldElem::ZERO {
            *w = f.fadd(*w, f.fmul(c, g));
        }
    }
}

/// Exact minimum weight by exhaustive enumeration.
pub fn min_weight_exact(code: &LinearCode, budget: u128) -> Result<WeightReport> {
    if code.k_dim() == 0 {
        return Err(Error::NoNonzeroWords);
    }
    let dist = weight_distribution(code, budget)?;
    let d = (1..dist.len()).find(|&w| dist[w] > 0).expect("a nonzero code has a nonzero word");
    Ok(WeightReport::new(code, d, d, WeightMethod::Exhaustive, dist.iter().sum()))
}

/// Exhaustive when `q^k <= budget`, otherwise bracketed by information sets
/// with about `budget` codewords examined.
pub fn min_weight(code: &LinearCode, budget: u128) -> Result<WeightReport> {
    match min_weight_exact(code, budget) {
        Err(Error::BudgetExceeded { .. }) => min_weight_pruned(code, budget),
        other => other,
    }
}

/// Systematic generator matrices for pairwise disjoint information sets,
/// found greedily from the left.
fn disjoint_information_sets(code: &LinearCode) -> Vec<Vec<Vec<FieldElem>>> {
    let f = code.field();
    let k = code.k_dim();
    let mut remaining: Vec<usize> = (0..code.n_len()).collect();
    let mut out = Vec::new();
    loop {
        let mut sub: Vec<Vec<FieldElem>> =
            code.gen().iter().map(|r| remaining.iter().map(|&c| r[c]).collect()).collect();
        let piv = linalg::rref(f, &mut sub);
        if piv.len() < k {
            return out;
        }
        let cols: Vec<usize> = piv.iter().map(|&p| remaining[p]).collect();
        let square: Vec<Vec<FieldElem>> = code.gen().iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect();
        let inv = linalg::invert(f, &square).expect("information set minor is invertible");
        // row i of inv * G has a 1 at cols[i] and 0 at the other information columns
        let systematic: Vec<Vec<FieldElem>> = (0..k)
            .map(|i| {
                let mut w = vec![FieldElem::ZERO; code.n_len()];
                for (j, row) in code.gen().iter().enumerate() {
                    axpy(f, &mut w, inv[i][j], row);
                }
                w
            })
            .collect();
        out.push(systematic);
        remaining.retain(|c| !cols.contains(c));
    }
}

fn binomial(n: usize, r: usize) -> u128 {
    (0..r).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// Brackets the minimum weight: every message of weight `<= w` on each of
/// `r` disjoint information sets is tried, so any word not seen has weight
/// at least `r (w + 1)`.
pub fn min_weight_pruned(code: &LinearCode, budget: u128) -> Result<WeightReport> {
    let k = code.k_dim();
    if k == 0 {
        return Err(Error::NoNonzeroWords);
    }
    let f = code.field();
    let q = f.q();
    let sets = disjoint_information_sets(code);
    let r = sets.len();
    let mut upper = code.n_len();
    let mut lower = 1;
    let mut examined = 0u128;
    for w in 1..=k {
        let cost = binomial(k, w).saturating_mul((q as u128 - 1).saturating_pow(w as u32)).saturating_mul(r as u128);
        if w > 1 && examined.saturating_add(cost) > budget {
            break;
        }
        let best = sets
            .par_iter()
            .map(|g| {
                let mut best = usize::MAX;
                for_each_weight_w(k, w, q, |support, values| {
                    let mut word = vec![FieldElem::ZERO; code.n_len()];
                    for (&i, &v) in support.iter().zip(values) {
                        axpy(f, &mut word, FieldElem(v), &g[i]);
                    }
                    best = best.min(hamming_weight(&word));
                });
                best
            })
            .min()
            .unwrap_or(usize::MAX);
        upper = upper.min(best);
        examined += cost;
        lower = lower.max(r * (w + 1)).min(upper);
        if lower >= upper {
            break;
        }
    }
    Ok(WeightReport::new(code, upper, lower, WeightMethod::Pruned, examined))
}

/// Calls `visit(support, values)` for every vector of length `k` with
/// exactly `w` nonzero entries (values are field encodings `1..q`).
fn for_each_weight_w(k: usize, w: usize, q: u32, mut visit: impl FnMut(&[usize], &[u32])) {
    let mut support: Vec<usize> = (0..w).collect();
    loop {
        let mut values = vec![1u32; w];
        loop {
            visit(&support, &values);
            let mut j = 0;
            while j < w && values[j] + 1 == q {
                values[j] = 1;
                j += 1;
            }
            if j == w {
                break;
            }
            values[j] += 1;
        }
        // next combination
        let mut i = w;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if support[i] < k - w + i {
                support[i] += 1;
                for j in i + 1..w {
                    support[j] = support[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return;
            }
        }
    }
}
