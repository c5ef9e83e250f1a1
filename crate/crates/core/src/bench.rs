//! Work counts of information-set decoding against the classical baselines.

use crate::bounds::{ball_volume_clamped, pow_big};
use crate::channel::{transmit, ChannelSpec, DecoderSelection};
use crate::code::LinearCode;
use crate::error::Result;
use num_bigint::BigUint;
use serde::Serialize;
use std::time::Instant;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub weight: usize,
    pub trials: u64,
    pub mean_patterns: f64,
    pub max_patterns: u64,
    /// `V_q(k, weight)`
    pub bound_info_set: String,
    /// `V_q(n, weight)`
    pub baseline_full_patterns: String,
    /// `q^k`
    pub baseline_codewords: String,
    pub mean_decode_ns: f64,
}

pub const CSV_HEADER: &str = "weight,trials,mean_patterns,max_patterns,bound_info_set,baseline_full_patterns,baseline_codewords,mean_decode_ns";

impl BenchRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{:.3},{},{},{},{},{:.1}",
            self.weight,
            self.trials,
            self.mean_patterns,
            self.max_patterns,
            self.bound_info_set,
            self.baseline_full_patterns,
            self.baseline_codewords,
            self.mean_decode_ns
        )
    }
}

/// Decodes `trials` words carrying exactly `w` errors for each requested
/// weight and records the patterns inspected per decode.
pub fn bench(
    code: &LinearCode,
    decoder: DecoderSelection,
    weights: &[usize],
    trials: u64,
    seed: u64,
) -> Result<Vec<BenchRow>> {
    let (n, k, q) = (code.n(), code.k(), code.q());
    let codewords: BigUint = pow_big(q, k);
    weights
        .iter()
        .map(|&w| {
            let spec = ChannelSpec::fixed_weight(q, w, seed)?;
            let mut total = 0u128;
            let mut max = 0u64;
            let mut elapsed = 0u128;
            for i in 0..trials {
                let tx = transmit(code, &spec, i)?;
                let start = Instant::now();
                let out = decoder.decode(code, &tx.received)?;
                elapsed += start.elapsed().as_nanos();
                total += out.stats.patterns_inspected as u128;
                max = max.max(out.stats.patterns_inspected);
            }
            let div = trials.max(1) as f64;
            Ok(BenchRow {
                weight: w,
                trials,
                mean_patterns: total as f64 / div,
                max_patterns: max,
                bound_info_set: ball_volume_clamped(k, w, q).to_string(),
                baseline_full_patterns: ball_volume_clamped(n, w, q).to_string(),
                baseline_codewords: codewords.to_string(),
                mean_decode_ns: elapsed as f64 / div,
            })
        })
        .collect()
}
