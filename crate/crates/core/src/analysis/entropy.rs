use crate::error::{Error, Result};

/// Absolute slack used in every comparison against a real-valued bound.
pub const BOUND_SLACK: f64 = 1e-9;

/// `x log_q x` with `0 log 0 = 0`.
fn xlogx(x: f64, ln_q: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.ln() / ln_q
    }
}

/// The q-ary entropy `h_q(d) = d log_q(q-1) - d log_q d - (1-d) log_q(1-d)`
/// on `[0, 1 - 1/q]`.
pub fn entropy_q(q: u64, delta: f64) -> Result<f64> {
    if q < 2 {
        return Err(Error::DomainError(format!("q = {q} < 2")));
    }
    let max = 1.0 - 1.0 / q as f64;
    if !(0.0..=max + 1e-12).contains(&delta) {
        return Err(Error::DomainError(format!("delta = {delta} outside [0, {max}]")));
    }
    let delta = delta.min(max);
    let ln_q = (q as f64).ln();
    Ok(delta * ((q - 1) as f64).ln() / ln_q - xlogx(delta, ln_q) - xlogx(1.0 - delta, ln_q))
}

/// Parses `a/b` or a decimal.
pub fn parse_delta(s: &str) -> Result<f64> {
    let s = s.trim();
    let v = match s.split_once('/') {
        Some((a, b)) => {
            let num: u64 = a.trim().parse().map_err(|_| Error::Parse(format!("bad numerator in '{s}'")))?;
            let den: u64 = b.trim().parse().map_err(|_| Error::Parse(format!("bad denominator in '{s}'")))?;
            if den == 0 {
                return Err(Error::Parse(format!("zero denominator in '{s}'")));
            }
            num as f64 / den as f64
        }
        None => s.parse().map_err(|_| Error::Parse(format!("'{s}' is not a number")))?,
    };
    Ok(v)
}
