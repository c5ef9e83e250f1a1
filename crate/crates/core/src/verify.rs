//! Trial runs with a per-trial oracle cross-check.

use crate::channel::{transmit, ChannelSpec, DecoderSelection, TrialReport, TrialTally};
use crate::code::LinearCode;
use crate::decode::{oracle_ball_decode, oracle_nearest_codeword, DecodeOutcome};
use crate::error::Result;
use crate::linalg::FqVector;
use serde::Serialize;

/// Compares a decoder outcome against an independent reference.
pub trait CrossCheck {
    fn name(&self) -> &str;

    /// `Ok(None)` when the outcome is consistent, otherwise a description of
    /// the disagreement.
    fn check(&self, code: &LinearCode, y: &FqVector, outcome: &DecodeOutcome) -> Result<Option<String>>;
}

/// Unique decoding must agree with full-ball search on status and codeword.
#[derive(Debug, Clone, Copy, Default)]
pub struct BallOracleCheck;

impl CrossCheck for BallOracleCheck {
    fn name(&self) -> &str {
        "ball"
    }

    fn check(&self, code: &LinearCode, y: &FqVector, outcome: &DecodeOutcome) -> Result<Option<String>> {
        let reference = oracle_ball_decode(code, y)?;
        if reference.codeword() == outcome.codeword() {
            return Ok(None);
        }
        Ok(Some(format!(
            "decoder {} vs oracle {}",
            describe(outcome),
            describe(&reference)
        )))
    }
}

/// Minimum-distance decoding must reach the exhaustive nearest distance, with
/// a codeword at exactly that distance.
#[derive(Debug, Clone, Copy, Default)]
pub struct NearestOracleCheck;

impl CrossCheck for NearestOracleCheck {
    fn name(&self) -> &str {
        "nearest"
    }

    fn check(&self, code: &LinearCode, y: &FqVector, outcome: &DecodeOutcome) -> Result<Option<String>> {
        let reference = oracle_nearest_codeword(code, y)?;
        let best = reference.error_weight().expect("nearest oracle always decodes");
        let Some(c) = outcome.codeword() else {
            return Ok(Some(format!("decoder incomplete, nearest distance {best}")));
        };
        if !code.is_codeword(c)? {
            return Ok(Some("decoder output is not a codeword".into()));
        }
        let dist = c.distance(y);
        if outcome.error_weight() != Some(best) || dist != best {
            return Ok(Some(format!(
                "decoder weight {:?} at distance {dist}, nearest distance {best}",
                outcome.error_weight()
            )));
        }
        Ok(None)
    }
}

pub fn default_check(decoder: DecoderSelection) -> Box<dyn CrossCheck> {
    match decoder {
        DecoderSelection::Unique => Box::new(BallOracleCheck),
        DecoderSelection::Md { .. } => Box::new(NearestOracleCheck),
    }
}

fn describe(outcome: &DecodeOutcome) -> String {
    match outcome.codeword() {
        Some(c) => format!("decoded [{c}]"),
        None => "incomplete".into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub seed: u64,
    pub trial: u64,
    /// Received word in the code's original column order.
    pub received: Vec<u32>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub oracle: String,
    pub report: TrialReport,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn verify_trials(
    code: &LinearCode,
    decoder: DecoderSelection,
    spec: &ChannelSpec,
    trials: u64,
    check: &dyn CrossCheck,
) -> Result<VerifyReport> {
    let mut tally = TrialTally::new(spec.seed);
    let mut mismatches = Vec::new();
    for i in 0..trials {
        let tx = transmit(code, spec, i)?;
        let outcome = decoder.decode(code, &tx.received)?;
        tally.record(&outcome, &tx.codeword);
        if let Some(detail) = check.check(code, &tx.received, &outcome)? {
            mismatches.push(Mismatch {
                seed: spec.seed,
                trial: i,
                received: code.to_original_order(&tx.received)?.into_entries(),
                detail,
            });
        }
    }
    Ok(VerifyReport {
        oracle: check.name().to_string(),
        report: tally.finish(),
        mismatches,
    })
}
