use serde::{Deserialize, Serialize};

use super::entropy::{entropy_q, BOUND_SLACK};
use super::weight::weight_distribution;
use crate::algebra::Twist;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};
use crate::linalg;

/// The left actions of `u` and of `v` (or `v̇`) on words, as signed
/// permutations of the coordinates `u^0, ..., u^{n-1}, u^0 v, ..., u^{n-1} v`.
/// Coordinate `i` moves to `perm[i]` with factor `sign[i]`, so `x a = a Theta_x`
/// where row `i` of `Theta_x` has `sign[i]` in column `perm[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationPair {
    pub n: usize,
    pub theta_u: Vec<usize>,
    pub theta_v: Vec<usize>,
    /// Signs of the `v` action; `-1` on the second half in the consta case.
    pub sign_v: Vec<FieldElem>,
}

impl PermutationPair {
    pub fn new(n: usize, field: &FieldSpec, twist: Twist) -> Self {
        let theta_u = (0..2 * n).map(|i| if i < n { (i + 1) % n } else { n + (i - n + 1) % n }).collect();
        let theta_v = (0..2 * n).map(|i| if i < n { n + (n - i) % n } else { (2 * n - i) % n }).collect();
        let second = match twist {
            Twist::Consta => field.fneg(FieldElem::ONE),
            Twist::Dihedral => FieldElem::ONE,
        };
        let sign_v = (0..2 * n).map(|i| if i < n { FieldElem::ONE } else { second }).collect();
        PermutationPair { n, theta_u, theta_v, sign_v }
    }

    /// `a Theta_u`, i.e. the word of `u a`.
    pub fn apply_u(&self, a: &[FieldElem]) -> Vec<FieldElem> {
        let mut out = vec![FieldElem::ZERO; a.len()];
        for (i, &x) in a.iter().enumerate() {
            out[self.theta_u[i]] = x;
        }
        out
    }

    /// `a Theta_v`, i.e. the word of `v a`.
    pub fn apply_v(&self, field: &FieldSpec, a: &[FieldElem]) -> Vec<FieldElem> {
        let mut out = vec![FieldElem::ZERO; a.len()];
        for (i, &x) in a.iter().enumerate() {
            out[self.theta_v[i]] = field.fmul(self.sign_v[i], x);
        }
        out
    }

    pub fn matrix_u(&self) -> Vec<Vec<FieldElem>> {
        signed_matrix(&self.theta_u, &vec![FieldElem::ONE; 2 * self.n])
    }

    pub fn matrix_v(&self) -> Vec<Vec<FieldElem>> {
        signed_matrix(&self.theta_v, &self.sign_v)
    }

    /// The coordinate permutation of `g = u^i` (`index = i < n`) or
    /// `g = u^i v` (`index = n + i`).
    pub fn theta_g(&self, index: usize) -> Vec<usize> {
        let i = index % self.n;
        (0..2 * self.n)
            .map(|c| {
                let mut c = if index >= self.n { self.theta_v[c] } else { c };
                for _ in 0..i {
                    c = self.theta_u[c];
                }
                c
            })
            .collect()
    }
}

fn signed_matrix(perm: &[usize], sign: &[FieldElem]) -> Vec<Vec<FieldElem>> {
    let n = perm.len();
    (0..n)
        .map(|i| {
            let mut row = vec![FieldElem::ZERO; n];
            row[perm[i]] = sign[i];
            row
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntropyCheck {
    pub delta: f64,
    /// `|B^{<= delta}|`, codewords (zero included) of weight at most `delta n_len`.
    pub count: u128,
    /// `q^{k h_q(delta)}`.
    pub bound: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BalancedReport {
    pub n_len: usize,
    pub k: usize,
    pub information_set: Vec<usize>,
    /// Whether every image `theta_g(I)` is an information set.
    pub all_information_sets: bool,
    /// How many images contain each coordinate.
    pub coverage: Vec<usize>,
    /// The common coverage, when uniform.
    pub t: Option<usize>,
    pub entropy_checks: Vec<EntropyCheck>,
}

impl BalancedReport {
    pub fn balanced(&self) -> bool {
        self.all_information_sets && self.t.is_some()
    }

    pub fn passed(&self) -> bool {
        self.balanced() && self.entropy_checks.iter().all(|c| c.holds)
    }
}

/// The deltas used for the entropy spot check.
pub fn default_deltas(q: u64) -> Vec<f64> {
    vec![0.1, 0.2, 1.0 - 1.0 / q as f64]
}

/// Checks that the images of the pivot information set under all `2n`
/// group permutations are information sets covering each coordinate equally
/// often, and when `q^k <= census_budget` that `|B^{<= delta}| <= q^{k h_q(delta)}`.
pub fn balanced_check(code: &LinearCode, twist: Twist, census_budget: u128) -> Result<BalancedReport> {
    let f = code.field();
    let n_len = code.n_len();
    if !n_len.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("length {n_len} is odd")));
    }
    let pair = PermutationPair::new(n_len / 2, f, twist);
    if !code.is_invariant_under(|w| pair.apply_u(w)) || !code.is_invariant_under(|w| pair.apply_v(f, w)) {
        return Err(Error::NotLeftIdeal);
    }
    let k = code.k_dim();
    let info = code.pivots().to_vec();
    let mut coverage = vec![0usize; n_len];
    let mut all_information_sets = true;
    for g in 0..n_len {
        let perm = pair.theta_g(g);
        let image: Vec<usize> = info.iter().map(|&i| perm[i]).collect();
        for &c in &image {
            coverage[c] += 1;
        }
        let cols: Vec<Vec<FieldElem>> = code.gen().iter().map(|r| image.iter().map(|&c| r[c]).collect()).collect();
        if linalg::rank(f, &cols) != k {
            all_information_sets = false;
        }
    }
    let t = coverage.iter().all(|&c| c == coverage[0]).then_some(coverage[0]);
    let q = f.q() as u64;
    let entropy_checks = match weight_distribution(code, census_budget) {
        Ok(dist) => default_deltas(q)
            .into_iter()
            .map(|delta| {
                let limit = (delta * n_len as f64 + 1e-9).floor() as usize;
                let count: u128 = dist[..=limit.min(n_len)].iter().sum();
                let bound = (q as f64).powf(k as f64 * entropy_q(q, delta)?);
                Ok(EntropyCheck { delta, count, bound, holds: count as f64 <= bound + BOUND_SLACK })
            })
            .collect::<Result<Vec<_>>>()?,
        Err(Error::BudgetExceeded { .. }) => Vec::new(),
        Err(e) => return Err(e),
    };
    Ok(BalancedReport { n_len, k, information_set: info, all_information_sets, coverage, t, entropy_checks })
}
