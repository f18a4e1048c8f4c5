use super::{ExtField, FieldElem, FieldOps, FieldSpec, Poly};
use crate::error::{Error, Result};
use crate::util::gcd;

fn check_coprime(n: u64, q: u64) -> Result<()> {
    if n == 0 || gcd(n, q) != 1 {
        return Err(Error::GcdViolation { n: n as usize, q });
    }
    Ok(())
}

/// Smallest `t >= 1` with `q^t = 1 (mod n)`.
pub fn mult_order(q: u64, n: u64) -> Result<u64> {
    check_coprime(n, q)?;
    if n == 1 {
        return Ok(1);
    }
    let q = q % n;
    let mut x = q;
    let mut t = 1;
    while x != 1 {
        x = ((x as u128 * q as u128) % n as u128) as u64;
        t += 1;
    }
    Ok(t)
}

/// The q-cyclotomic cosets of Z_n. Each coset is listed in orbit order
/// `s, sq, sq^2, ...` starting from its smallest element; cosets are sorted by
/// that element, so `{0}` comes first.
pub fn cyclotomic_cosets(n: usize, q: u64) -> Result<Vec<Vec<usize>>> {
    check_coprime(n as u64, q)?;
    let qm = (q % n as u64) as usize;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut coset = vec![];
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            coset.push(x);
            x = (x * qm) % n;
        }
        out.push(coset);
    }
    Ok(out)
}

/// The monic irreducible factors of x^n - 1 over `field`, each paired with the
/// cyclotomic coset whose roots it carries.
///
/// Order: x - 1 first, then by degree, then by the integer encoding
/// `sum c_i q^i` of the coefficient vector.
pub fn factor_xn_minus_1_with_cosets(
    n: usize,
    field: &FieldSpec,
) -> Result<Vec<(Poly<FieldElem>, Vec<usize>)>> {
    let q = field.q() as u64;
    check_coprime(n as u64, q)?;
    if n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("n = {n} must be odd")));
    }
    let cosets = cyclotomic_cosets(n, q)?;
    if n == 1 {
        return Ok(vec![(Poly::linear(field, &FieldElem::ONE), vec![0])]);
    }
    let d = mult_order(q, n as u64)? as usize;
    let ext = ExtField::new(field, d)?;
    let zeta = ext.primitive_root_of_unity(n as u64).expect("n divides q^d - 1");
    let mut powers = Vec::with_capacity(n);
    let mut cur = ext.one();
    for _ in 0..n {
        powers.push(cur.clone());
        cur = ext.mul(&cur, &zeta);
    }
    let mut factors: Vec<(Poly<FieldElem>, Vec<usize>)> = cosets
        .into_iter()
        .map(|coset| {
            let minpoly = coset.iter().fold(Poly::one(&ext), |acc, &j| {
                acc.mul(&ext, &Poly::linear(&ext, &powers[j]))
            });
            let coeffs = minpoly
                .coeffs()
                .iter()
                .map(|c| ext.project(c).expect("minimal polynomial has base-field coefficients"))
                .collect();
            (Poly::new(field, coeffs), coset)
        })
        .collect();
    factors.sort_by(|(a, ca), (b, cb)| {
        (ca[0] != 0)
            .cmp(&(cb[0] != 0))
            .then(a.degree().cmp(&b.degree()))
            .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
    });
    Ok(factors)
}

/// The monic irreducible factors of x^n - 1 over `field` in canonical order.
pub fn factor_xn_minus_1(n: usize, field: &FieldSpec) -> Result<Vec<Poly<FieldElem>>> {
    Ok(factor_xn_minus_1_with_cosets(n, field)?.into_iter().map(|(p, _)| p).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::prime_power;

    fn poly(f: &FieldSpec, c: &[u32]) -> Poly<FieldElem> {
        Poly::new(f, c.iter().map(|&x| FieldElem(x)).collect())
    }

    fn xn_minus_1(f: &FieldSpec, n: usize) -> Poly<FieldElem> {
        let mut c = vec![FieldElem::ZERO; n + 1];
        c[0] = f.fneg(FieldElem::ONE);
        c[n] = FieldElem::ONE;
        Poly::new(f, c)
    }

    fn euler_phi(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    #[test]
    fn mult_order_examples() {
        assert_eq!(mult_order(3, 7).unwrap(), 6);
        assert_eq!(mult_order(2, 7).unwrap(), 3);
        assert_eq!(mult_order(8, 7).unwrap(), 1);
        assert_eq!(mult_order(7, 3).unwrap(), 1);
        assert!(matches!(mult_order(3, 9), Err(Error::GcdViolation { .. })));
    }

    #[test]
    fn mult_order_divides_phi() {
        for q in [2u64, 3, 4, 5, 7, 9, 13] {
            for n in 2..=200u64 {
                if gcd(n, q) != 1 {
                    continue;
                }
                let t = mult_order(q, n).unwrap();
                assert_eq!(euler_phi(n) % t, 0, "q={q} n={n}");
                // oracle: direct power scan
                let mut x = 1u64;
                for _ in 0..t {
                    x = x * q % n;
                }
                assert_eq!(x, 1);
            }
        }
    }

    #[test]
    fn coset_examples() {
        assert_eq!(cyclotomic_cosets(7, 2).unwrap(), vec![vec![0], vec![1, 2, 4], vec![3, 6, 5]]);
        assert_eq!(cyclotomic_cosets(3, 7).unwrap(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(cyclotomic_cosets(1, 5).unwrap(), vec![vec![0]]);
    }

    #[test]
    fn factor_x3_minus_1_over_gf7() {
        let f = FieldSpec::prime(7).unwrap();
        let factors = factor_xn_minus_1(3, &f).unwrap();
        // x - 1, x - 4 (= x + 3), x - 2 (= x + 5): roots 1, 2, 4
        let roots: Vec<u32> = factors.iter().map(|p| f.fneg(p.coeffs()[0]).0).collect();
        assert_eq!(roots, vec![1, 4, 2]);
        let mut sorted = roots.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 4]);
    }

    #[test]
    fn factor_trivial_n() {
        let f = FieldSpec::prime(2).unwrap();
        assert_eq!(factor_xn_minus_1(1, &f).unwrap(), vec![poly(&f, &[1, 1])]);
    }

    #[test]
    fn factor_x7_minus_1_over_gf2() {
        let f = FieldSpec::prime(2).unwrap();
        // Oracle: trial-divide x^7 + 1 by every monic polynomial of degree 1..=3.
        let target = xn_minus_1(&f, 7);
        let mut found = vec![];
        for d in 1..=3u32 {
            for code in 0..(1u32 << d) {
                let mut c: Vec<u32> = (0..d).map(|i| (code >> i) & 1).collect();
                c.push(1);
                let cand = poly(&f, &c);
                if cand.is_irreducible(&f) && target.rem(&f, &cand).is_zero() {
                    found.push(cand);
                }
            }
        }
        assert_eq!(found.len(), 3);
        assert_eq!(
            factor_xn_minus_1(7, &f).unwrap(),
            vec![poly(&f, &[1, 1]), poly(&f, &[1, 1, 0, 1]), poly(&f, &[1, 0, 1, 1])]
        );
    }

    #[test]
    fn gcd_violation() {
        let f = FieldSpec::prime(3).unwrap();
        assert!(matches!(factor_xn_minus_1(9, &f), Err(Error::GcdViolation { .. })));
    }

    #[test]
    fn product_and_degrees_match_cosets() {
        for q in [2u64, 3, 4, 5, 7, 9, 13] {
            let (_, _) = prime_power(q).unwrap();
            let f = FieldSpec::from_order(q).unwrap();
            for n in (1..=35usize).step_by(2) {
                if gcd(n as u64, q) != 1 {
                    continue;
                }
                let fac = factor_xn_minus_1_with_cosets(n, &f).unwrap();
                let prod = fac.iter().fold(Poly::one(&f), |acc, (p, _)| acc.mul(&f, p));
                assert_eq!(prod, xn_minus_1(&f, n), "q={q} n={n}");
                let mut deg: Vec<usize> = fac.iter().map(|(p, _)| p.degree().unwrap()).collect();
                let mut sizes: Vec<usize> =
                    cyclotomic_cosets(n, q).unwrap().iter().map(|c| c.len()).collect();
                deg.sort();
                sizes.sort();
                assert_eq!(deg, sizes);
                for (p, c) in &fac {
                    assert!(p.is_irreducible(&f));
                    assert_eq!(p.degree().unwrap(), c.len());
                }
                assert_eq!(fac[0].0, Poly::linear(&f, &FieldElem::ONE));
            }
        }
    }
}
