use serde::{Deserialize, Serialize};

use crate::cyclic::lambda_n;
use crate::error::{Error, Result};
use crate::field::mult_order;
use crate::util::{gcd, is_prime};

/// Number-theoretic conditions on a length parameter `n` over GF(q).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoodNFlags {
    pub q: u64,
    pub n: u64,
    /// `n` odd, `n > 1`, `gcd(n, q) = 1`.
    pub coprime_odd: bool,
    /// Multiplicative order of `q` modulo `n`.
    pub ord: u64,
    pub ord_odd: bool,
    /// `-1` is a power of `q` modulo `n`.
    pub minus1_in_q: bool,
    /// `2 | ord` and `4 !| ord`.
    pub two_exactly_divides_ord: bool,
    /// `n` is a prime with `q < n` and `ord >= (log_q n)^2`.
    pub in_g_t: bool,
    /// Smallest dimension of a nontrivial component (0 when `n` is even).
    pub lambda: u64,
    /// `log_q n / lambda`.
    pub log_ratio: f64,
}

/// Families for which a length sequence can be listed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Profile {
    /// `ord` odd: every nontrivial idempotent of FH is non-self-conjugate.
    SelfOrthogonal,
    /// `q = 3 mod 4`, `-1 in <q>` and `2 || ord`.
    Lcd,
    /// `q` even or `q = 1 mod 4`.
    SelfDual,
}

impl GoodNFlags {
    pub fn qualifies(&self, profile: Profile) -> bool {
        if !self.coprime_odd {
            return false;
        }
        match profile {
            Profile::SelfOrthogonal => self.ord_odd,
            Profile::Lcd => self.q % 4 == 3 && self.minus1_in_q && self.two_exactly_divides_ord,
            Profile::SelfDual => self.q.is_multiple_of(2) || self.q % 4 == 1,
        }
    }
}

pub fn good_n_predicates(q: u64, n: u64) -> Result<GoodNFlags> {
    if n == 0 || gcd(n, q) != 1 {
        return Err(Error::GcdViolation { n: n as usize, q });
    }
    let ord = mult_order(q, n)?;
    let coprime_odd = n > 1 && n % 2 == 1;
    let mut minus1_in_q = false;
    let mut x = 1u128;
    for _ in 0..ord {
        if (x + 1).is_multiple_of(n as u128) {
            minus1_in_q = true;
        }
        x = x * q as u128 % n as u128;
    }
    let log_q_n = (n as f64).ln() / (q as f64).ln();
    let in_g_t = is_prime(n) && q < n && ord as f64 >= log_q_n * log_q_n;
    let lambda = if coprime_odd { lambda_n(n, q)? } else { 0 };
    let log_ratio = if lambda > 0 { log_q_n / lambda as f64 } else { f64::INFINITY };
    Ok(GoodNFlags {
        q,
        n,
        coprime_odd,
        ord,
        ord_odd: ord % 2 == 1,
        minus1_in_q,
        two_exactly_divides_ord: ord % 4 == 2,
        in_g_t,
        lambda,
        log_ratio,
    })
}

/// Odd `n` in `3..=limit` coprime to `q` qualifying for `profile`.
pub fn good_n_sequence(q: u64, limit: u64, profile: Profile) -> Result<Vec<GoodNFlags>> {
    let mut out = Vec::new();
    for n in (3..=limit).step_by(2) {
        if gcd(n, q) != 1 {
            continue;
        }
        let f = good_n_predicates(q, n)?;
        if f.qualifies(profile) {
            out.push(f);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f = good_n_predicates(3, 7).unwrap();
        assert_eq!(f.ord, 6);
        assert!(f.two_exactly_divides_ord && f.minus1_in_q);
        assert!(f.qualifies(Profile::Lcd));
        let f = good_n_predicates(2, 7).unwrap();
        assert_eq!(f.ord, 3);
        assert!(f.ord_odd && f.qualifies(Profile::SelfOrthogonal));
        let f = good_n_predicates(3, 5).unwrap();
        assert_eq!(f.ord, 4);
        assert!(!f.two_exactly_divides_ord && !f.qualifies(Profile::Lcd));
        assert!(matches!(good_n_predicates(3, 9), Err(Error::GcdViolation { .. })));
        let f = good_n_predicates(7, 11).unwrap();
        assert_eq!(f.ord, 10);
        assert!(f.qualifies(Profile::Lcd));
    }

    #[test]
    fn minus_one_matches_brute_force() {
        for q in [2u64, 3, 4, 5, 7, 9, 11] {
            for n in (3..200u64).step_by(2).filter(|&n| gcd(n, q) == 1) {
                let f = good_n_predicates(q, n).unwrap();
                let brute = (1..=n).any(|j| {
                    let mut x = 1u64;
                    for _ in 0..j {
                        x = x * q % n;
                    }
                    x == n - 1
                });
                assert_eq!(f.minus1_in_q, brute, "q={q} n={n}");
            }
        }
    }

    #[test]
    fn sequences() {
        let s: Vec<u64> = good_n_sequence(2, 40, Profile::SelfOrthogonal).unwrap().iter().map(|f| f.n).collect();
        assert_eq!(s, vec![7, 23, 31]);
        let s: Vec<u64> = good_n_sequence(3, 20, Profile::Lcd).unwrap().iter().map(|f| f.n).collect();
        assert_eq!(s, vec![7, 19]);
        assert!(good_n_sequence(7, 30, Profile::SelfDual).unwrap().is_empty());
        assert_eq!(good_n_sequence(5, 11, Profile::SelfDual).unwrap().len(), 4);
    }
}
