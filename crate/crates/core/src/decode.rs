//! Information-set decoders and the brute-force oracles that certify them.
//!
//! Both decoders enumerate error patterns `⟨v|0⟩` over the `k` information
//! positions only. For each pattern the syndrome remainder
//! `u = s_y - H⟨v|0⟩^T` is itself the check-set part of the candidate error,
//! because `H⟨0|u⟩^T = u` for a systematic parity-check matrix. The full
//! candidate error is therefore `⟨v|u⟩` with weight `wt(v) + wt(u)`.

use crate::bounds::ball_volume_clamped;
use crate::code::{LinearCode, DEFAULT_ENUMERATION_LIMIT};
use crate::error::{Error, Result};
use crate::linalg::FqVector;
use crate::patterns::PatternEnumerator;
use num_traits::ToPrimitive;
use serde::Serialize;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DecodeStats {
    pub patterns_inspected: u64,
    /// Parity-check products computed, including the one for `s_y`.
    pub syndrome_products: u64,
    /// Successive improving candidate weights; only recorded by `md_decode`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub best_weight_trace: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeStatus {
    Decoded {
        codeword: FqVector,
        /// `y - codeword`
        error: FqVector,
        error_weight: usize,
    },
    /// No codeword within the decoding radius.
    Incomplete,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub status: DecodeStatus,
    pub stats: DecodeStats,
}

impl DecodeOutcome {
    fn decoded(y: &FqVector, error: FqVector, stats: DecodeStats) -> Self {
        let codeword = y.sub(&error).expect("error has the length of y");
        let error_weight = error.weight();
        Self {
            status: DecodeStatus::Decoded {
                codeword,
                error,
                error_weight,
            },
            stats,
        }
    }

    fn incomplete(stats: DecodeStats) -> Self {
        Self {
            status: DecodeStatus::Incomplete,
            stats,
        }
    }

    pub fn is_decoded(&self) -> bool {
        matches!(self.status, DecodeStatus::Decoded { .. })
    }

    pub fn codeword(&self) -> Option<&FqVector> {
        match &self.status {
            DecodeStatus::Decoded { codeword, .. } => Some(codeword),
            DecodeStatus::Incomplete => None,
        }
    }

    pub fn error(&self) -> Option<&FqVector> {
        match &self.status {
            DecodeStatus::Decoded { error, .. } => Some(error),
            DecodeStatus::Incomplete => None,
        }
    }

    pub fn error_weight(&self) -> Option<usize> {
        match &self.status {
            DecodeStatus::Decoded { error_weight, .. } => Some(*error_weight),
            DecodeStatus::Incomplete => None,
        }
    }

    /// Re-expresses codeword and error in the code's original column order.
    pub fn to_original_order(&self, code: &LinearCode) -> Result<Self> {
        let status = match &self.status {
            DecodeStatus::Decoded {
                codeword,
                error,
                error_weight,
            } => DecodeStatus::Decoded {
                codeword: code.to_original_order(codeword)?,
                error: code.to_original_order(error)?,
                error_weight: *error_weight,
            },
            DecodeStatus::Incomplete => DecodeStatus::Incomplete,
        };
        Ok(Self {
            status,
            stats: self.stats.clone(),
        })
    }
}

/// Reusable scratch for scoring information-set patterns against `s_y`.
struct PatternScorer<'a> {
    code: &'a LinearCode,
    sy: Vec<u32>,
    remainder: Vec<u32>,
}

impl<'a> PatternScorer<'a> {
    fn new(code: &'a LinearCode, y: &FqVector) -> Result<Self> {
        let sy = code.syndrome(y)?.into_entries();
        let remainder = sy.clone();
        Ok(Self { code, sy, remainder })
    }

    /// Fills `remainder` with `s_y - H⟨v|0⟩^T` and returns its weight.
    fn score(&mut self, support: &[usize], values: &[u32]) -> usize {
        let f = self.code.field();
        self.remainder.copy_from_slice(&self.sy);
        for (&p, &a) in support.iter().zip(values) {
            for (r, &h) in self.remainder.iter_mut().zip(self.code.h_column(p)) {
                *r = f.sub(*r, f.mul(a, h));
            }
        }
        self.remainder.iter().filter(|&&x| x != 0).count()
    }

    /// `⟨v | remainder⟩`.
    fn error_vector(&self, support: &[usize], values: &[u32]) -> FqVector {
        let k = self.code.k();
        let mut e = vec![0u32; self.code.n()];
        for (&p, &a) in support.iter().zip(values) {
            e[p] = a;
        }
        e[k..].copy_from_slice(&self.remainder);
        FqVector::from_raw(self.code.field(), e)
    }
}

/// Bounded-distance decoding within `t = ⌊(d-1)/2⌋`.
///
/// Scans information-set patterns of weight `≤ t` and accepts the first one
/// whose full reconstructed error `⟨v | s_y - s_v⟩` has weight `≤ t`. Radius
/// `t` balls are disjoint, so at most one pattern can be accepted.
pub fn unique_decode(code: &LinearCode, y: &FqVector) -> Result<DecodeOutcome> {
    let t = code.unique_radius().ok_or(Error::UnknownDistance)?;
    unique_decode_with_radius(code, y, t)
}

/// [`unique_decode`] with an explicit radius in place of `⌊(d-1)/2⌋`.
pub fn unique_decode_with_radius(code: &LinearCode, y: &FqVector, t: usize) -> Result<DecodeOutcome> {
    let mut scorer = PatternScorer::new(code, y)?;
    let mut stats = DecodeStats {
        syndrome_products: 1,
        ..DecodeStats::default()
    };
    let mut patterns = PatternEnumerator::new(code.field(), code.k(), t);
    while patterns.advance() {
        stats.patterns_inspected += 1;
        stats.syndrome_products += 1;
        let (support, values) = (patterns.support(), patterns.values());
        let u = scorer.score(support, values);
        if support.len() + u <= t {
            let error = scorer.error_vector(support, values);
            return Ok(DecodeOutcome::decoded(y, error, stats));
        }
    }
    Ok(DecodeOutcome::incomplete(stats))
}

/// Minimum-distance decoding over information-set patterns of weight
/// `≤ radius`.
///
/// Keeps the first candidate with strictly smaller total weight, so ties
/// resolve toward the earliest pattern in enumeration order. The result is a
/// nearest codeword whenever `radius` is at least the covering radius.
pub fn md_decode(code: &LinearCode, y: &FqVector, radius: usize) -> Result<DecodeOutcome> {
    let mut scorer = PatternScorer::new(code, y)?;
    let mut stats = DecodeStats {
        syndrome_products: 1,
        best_weight_trace: Some(Vec::new()),
        ..DecodeStats::default()
    };
    let mut best: Option<(usize, FqVector)> = None;
    let mut patterns = PatternEnumerator::new(code.field(), code.k(), radius);
    while patterns.advance() {
        stats.patterns_inspected += 1;
        stats.syndrome_products += 1;
        let (support, values) = (patterns.support(), patterns.values());
        let score = support.len() + scorer.score(support, values);
        if best.as_ref().is_none_or(|(w, _)| score < *w) {
            best = Some((score, scorer.error_vector(support, values)));
            if let Some(trace) = stats.best_weight_trace.as_mut() {
                trace.push(score);
            }
        }
    }
    let (_, error) = best.expect("the zero pattern is always scored");
    Ok(DecodeOutcome::decoded(y, error, stats))
}

/// Radius used by `md_decode` callers that do not pass one: the known
/// distance, otherwise the Gilbert-Varshamov distance.
pub fn default_md_radius(code: &LinearCode) -> usize {
    code.distance()
        .unwrap_or_else(|| crate::bounds::gv_distance(code.n(), code.k(), code.q()))
}

/// Exhaustive search over all `q^k` codewords. Ties go to the
/// lexicographically smallest message.
pub fn oracle_nearest_codeword(code: &LinearCode, y: &FqVector) -> Result<DecodeOutcome> {
    code.check_word(y)?;
    let mut stats = DecodeStats::default();
    let mut best: Option<(usize, FqVector)> = None;
    for (_, c) in code.codewords()? {
        stats.patterns_inspected += 1;
        let d = c.distance(y);
        if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
            best = Some((d, c));
        }
    }
    let (_, c) = best.expect("the zero codeword exists");
    let error = y.sub(&c)?;
    Ok(DecodeOutcome::decoded(y, error, stats))
}

/// Scans every length-`n` pattern `e` of weight `≤ t` and reports the one
/// for which `y - e` is a codeword.
pub fn oracle_ball_decode(code: &LinearCode, y: &FqVector) -> Result<DecodeOutcome> {
    oracle_ball_decode_with_limit(code, y, DEFAULT_ENUMERATION_LIMIT)
}

pub fn oracle_ball_decode_with_limit(
    code: &LinearCode,
    y: &FqVector,
    limit: u64,
) -> Result<DecodeOutcome> {
    code.check_word(y)?;
    let t = code.unique_radius().ok_or(Error::UnknownDistance)?;
    let volume = ball_volume_clamped(code.n(), t, code.q());
    if volume.to_u64().is_none_or(|v| v > limit) {
        return Err(Error::GuardExceeded {
            what: "ball decoding",
            size: format!("V_{}({}, {}) = {volume}", code.q(), code.n(), t),
            limit,
        });
    }
    let mut stats = DecodeStats::default();
    let mut e = vec![0u32; code.n()];
    let mut hit = None;
    ball_search(code, y, t, 0, &mut e, &mut stats, &mut hit)?;
    Ok(match hit {
        Some(error) => DecodeOutcome::decoded(y, error, stats),
        None => DecodeOutcome::incomplete(stats),
    })
}

/// Depth-first walk over all patterns with at most `budget` further nonzero
/// entries at positions `>= from`.
fn ball_search(
    code: &LinearCode,
    y: &FqVector,
    budget: usize,
    from: usize,
    e: &mut Vec<u32>,
    stats: &mut DecodeStats,
    hit: &mut Option<FqVector>,
) -> Result<()> {
    if hit.is_some() {
        return Ok(());
    }
    let candidate = FqVector::new(code.field(), e.clone())?;
    stats.patterns_inspected += 1;
    stats.syndrome_products += 1;
    if code.is_codeword(&y.sub(&candidate)?)? {
        *hit = Some(candidate);
        return Ok(());
    }
    if budget == 0 {
        return Ok(());
    }
    for pos in from..code.n() {
        for a in 1..code.q() {
            e[pos] = a;
            ball_search(code, y, budget - 1, pos + 1, e, stats, hit)?;
            e[pos] = 0;
            if hit.is_some() {
                return Ok(());
            }
        }
    }
    Ok(())
}

/// Syndrome decoding through a precomputed table of minimum-weight coset
/// leaders over all `n` positions.
#[derive(Debug, Clone)]
pub struct CosetTableDecoder {
    leaders: crate::code::CosetLeaders,
}

impl CosetTableDecoder {
    pub fn new(code: &LinearCode) -> Result<Self> {
        Ok(Self {
            leaders: code.coset_leaders()?,
        })
    }

    pub fn covering_radius(&self) -> usize {
        self.leaders.covering_radius()
    }

    pub fn decode(&self, code: &LinearCode, y: &FqVector) -> Result<DecodeOutcome> {
        let s = code.syndrome(y)?;
        let leader = self.leaders.leader(code.syndrome_index(s.entries()));
        let stats = DecodeStats {
            patterns_inspected: 1,
            syndrome_products: 1,
            best_weight_trace: None,
        };
        Ok(DecodeOutcome::decoded(y, leader, stats))
    }
}

/// One-shot form of [`CosetTableDecoder`]; rebuilds the table on each call.
pub fn oracle_coset_table_decode(code: &LinearCode, y: &FqVector) -> Result<DecodeOutcome> {
    CosetTableDecoder::new(code)?.decode(code, y)
}
