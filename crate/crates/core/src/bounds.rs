//! Combinatorial quantities: Hamming ball volumes, the q-ary entropy
//! function, the Gilbert-Varshamov distance and the work exponents of
//! information-set decoding.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

/// Binomial coefficient `C(n, r)`.
pub fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `V_q(n, t) = Σ_{i=0}^{t} C(n, i) (q-1)^i`, exact.
pub fn ball_volume(n: usize, t: usize, q: u32) -> Result<BigUint> {
    if t > n {
        return Err(Error::Domain(format!("ball radius {t} exceeds length {n}")));
    }
    Ok(ball_volume_clamped(n, t, q))
}

/// Like [`ball_volume`] but with radii beyond `n` treated as `n`.
pub(crate) fn ball_volume_clamped(n: usize, t: usize, q: u32) -> BigUint {
    let base = BigUint::from(q - 1);
    let mut power = BigUint::one();
    let mut total = BigUint::zero();
    for i in 0..=t.min(n) {
        total += binomial(n, i) * &power;
        power *= &base;
    }
    total
}

/// Number of vectors of weight exactly `w` in GF(q)^n.
pub(crate) fn sphere_size(n: usize, w: usize, q: u32) -> BigUint {
    binomial(n, w) * BigUint::from(q - 1).pow(w as u32)
}

pub fn pow_big(q: u32, e: usize) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

/// q-ary entropy `H_q(x)`, with `H_q(0) = 0` and `H_q(1) = log_q(q-1)`.
pub fn entropy_q(x: f64, q: u32) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) || x.is_nan() {
        return Err(Error::Domain(format!("entropy argument {x} outside [0, 1]")));
    }
    if q < 2 {
        return Err(Error::Domain(format!("entropy base {q} below 2")));
    }
    let lq = (q as f64).ln();
    let xlogx = |p: f64| if p == 0.0 { 0.0 } else { p * p.ln() / lq };
    let cross = if q == 2 {
        0.0
    } else {
        x * ((q - 1) as f64).ln() / lq
    };
    Ok(cross - xlogx(x) - xlogx(1.0 - x))
}

/// Largest `d` with `V_q(n, d-1) ≤ q^(n-k)`.
pub fn gv_distance(n: usize, k: usize, q: u32) -> usize {
    let target = pow_big(q, n.saturating_sub(k));
    let mut d = 1;
    while d < n && ball_volume_clamped(n, d, q) <= target {
        d += 1;
    }
    d
}

/// `log_q(x)` for an exact count.
pub fn log_q(x: &BigUint, q: u32) -> f64 {
    let bits = x.bits();
    let v = if bits < 1000 {
        x.to_f64().unwrap_or(f64::INFINITY).ln()
    } else {
        // scale down to keep the mantissa in range
        let shift = bits - 900;
        (x >> shift).to_f64().unwrap_or(f64::INFINITY).ln() + shift as f64 * std::f64::consts::LN_2
    };
    v / (q as f64).ln()
}

/// `k · H_q(min(w/k, 1 - 1/q))`, the log_q of the pattern-count bound for
/// enumerating weight-≤`w` patterns over `k` positions.
///
/// Beyond `w/k = 1 - 1/q` the entropy bound exceeds the trivial `q^k`, so
/// the argument is capped there and the exponent saturates at `k`.
pub fn info_set_exponent(k: usize, w: f64, q: u32) -> f64 {
    if k == 0 {
        return 0.0;
    }
    let cap = 1.0 - 1.0 / q as f64;
    let x = (w / k as f64).clamp(0.0, cap);
    k as f64 * entropy_q(x, q).expect("argument is clamped into [0, 1]")
}

/// Counts and exponents attached to a code with a given distance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub d: usize,
    pub rate: f64,
    pub relative_distance: f64,
    /// `⌊(d-1)/2⌋`
    pub t: usize,
    /// `V_q(k, t)`, the patterns scanned by unique decoding in the worst case.
    #[serde(serialize_with = "ser_big")]
    pub ball_info_set: BigUint,
    /// `V_q(n, t)`, the full-length error-pattern baseline.
    #[serde(serialize_with = "ser_big")]
    pub ball_full: BigUint,
    /// `q^k`, the codeword-sweep baseline.
    #[serde(serialize_with = "ser_big")]
    pub codeword_count: BigUint,
    /// `n R H_q(δ/(2R))`
    pub exponent_unique: f64,
    /// `n R H_q(δ/R)`
    pub exponent_md: f64,
    pub gv_distance: usize,
}

fn ser_big<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

pub fn bounds_report(code: &LinearCode, d: usize) -> Result<BoundsReport> {
    if d == 0 {
        return Err(Error::Domain("distance must be at least 1".into()));
    }
    let (n, k, q) = (code.n(), code.k(), code.q());
    let t = (d - 1) / 2;
    // n·R·H(δ/(2R)) = k·H(d/(2k)) and n·R·H(δ/R) = k·H(d/k)
    Ok(BoundsReport {
        n,
        k,
        q,
        d,
        rate: code.rate(),
        relative_distance: d as f64 / n as f64,
        t,
        ball_info_set: ball_volume_clamped(k, t, q),
        ball_full: ball_volume_clamped(n, t, q),
        codeword_count: pow_big(q, k),
        exponent_unique: info_set_exponent(k, d as f64 / 2.0, q),
        exponent_md: info_set_exponent(k, d as f64, q),
        gv_distance: gv_distance(n, k, q),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_volume_examples() {
        for (n, q) in [(1, 2), (7, 3), (23, 2)] {
            assert_eq!(ball_volume(n, 0, q).unwrap(), BigUint::one());
        }
        assert_eq!(ball_volume(12, 3, 2).unwrap(), BigUint::from(299u32));
        assert_eq!(ball_volume(23, 3, 2).unwrap(), BigUint::from(2048u32));
        assert_eq!(ball_volume(7, 1, 2).unwrap(), BigUint::from(8u32));
        assert_eq!(ball_volume(4, 2, 3).unwrap(), BigUint::from(33u32));
        assert!(ball_volume(3, 4, 2).is_err());
    }

    #[test]
    fn ball_volume_is_monotone_and_fills_space() {
        for q in [2, 3, 5] {
            for n in 0..12 {
                let mut prev = BigUint::zero();
                for t in 0..=n {
                    let v = ball_volume(n, t, q).unwrap();
                    assert!(v >= prev);
                    prev = v;
                }
                assert_eq!(prev, pow_big(q, n));
            }
        }
    }

    #[test]
    fn ball_volume_beyond_u64() {
        // C(200,100) alone is about 9e58
        let v = ball_volume(200, 100, 2).unwrap();
        assert!(v.bits() > 190);
        assert!(v < pow_big(2, 200));
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(entropy_q(0.0, 2).unwrap(), 0.0);
        assert_eq!(entropy_q(0.0, 7).unwrap(), 0.0);
        assert!((entropy_q(0.5, 2).unwrap() - 1.0).abs() < 1e-15);
        assert!((entropy_q(1.0, 3).unwrap() - 2f64.ln() / 3f64.ln()).abs() < 1e-15);
        // H_3(1/3) from the defining formula evaluated directly
        let x: f64 = 1.0 / 3.0;
        let l3 = 3f64.ln();
        let direct = x * 2f64.ln() / l3 - x * x.ln() / l3 - (1.0 - x) * (1.0 - x).ln() / l3;
        assert!((entropy_q(x, 3).unwrap() - direct).abs() < 1e-12);
        // 1 - 1/q is where H_q reaches 1
        assert!((entropy_q(2.0 / 3.0, 3).unwrap() - 1.0).abs() < 1e-12);
        assert!(entropy_q(-0.1, 2).is_err());
        assert!(entropy_q(1.5, 2).is_err());
    }

    #[test]
    fn gv_distance_examples() {
        assert_eq!(gv_distance(23, 12, 2), 4);
        assert_eq!(gv_distance(3, 2, 2), 1);
        assert_eq!(gv_distance(7, 4, 2), 2);
    }

    #[test]
    fn gv_distance_brackets_the_inequality() {
        for q in [2, 3, 5] {
            for n in 2..20 {
                for k in 1..n {
                    let d = gv_distance(n, k, q);
                    let target = pow_big(q, n - k);
                    assert!(ball_volume(n, d - 1, q).unwrap() <= target);
                    assert!(ball_volume(n, d, q).unwrap() > target);
                }
            }
        }
    }

    #[test]
    fn log_q_handles_huge_counts() {
        let v = pow_big(3, 2000);
        assert!((log_q(&v, 3) - 2000.0).abs() < 1e-6);
        assert!((log_q(&BigUint::from(1024u32), 2) - 10.0).abs() < 1e-12);
    }

    #[test]
    fn exponent_saturates_at_k() {
        assert!((info_set_exponent(5, 5.0, 2) - 5.0).abs() < 1e-12);
        assert!((info_set_exponent(5, 2.5, 2) - 5.0).abs() < 1e-12);
        assert!(info_set_exponent(5, 1.0, 2) < 5.0);
        assert_eq!(info_set_exponent(5, 0.0, 3), 0.0);
    }
}
