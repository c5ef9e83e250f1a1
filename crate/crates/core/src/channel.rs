//! Seeded q-ary channels and a trial runner.
//!
//! Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`). Trial `i` of a
//! run with seed `s` uses the generator `ChaCha8Rng::seed_from_u64(s)` with
//! its stream set to `i`, so every trial is reproducible on its own and
//! trials can be evaluated in any order.

use crate::code::LinearCode;
use crate::decode::{md_decode, unique_decode, DecodeOutcome};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::FqVector;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChannelMode {
    /// Exactly `w` corrupted positions.
    FixedWeight(usize),
    /// Each position independently corrupted with probability `p`.
    Symmetric(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChannelSpec {
    pub q: u32,
    pub mode: ChannelMode,
    pub seed: u64,
}

impl ChannelSpec {
    pub fn new(q: u32, mode: ChannelMode, seed: u64) -> Result<Self> {
        FieldSpec::new(q)?;
        if let ChannelMode::Symmetric(p) = mode {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Domain(format!("error probability {p} outside [0, 1]")));
            }
        }
        Ok(Self { q, mode, seed })
    }

    pub fn fixed_weight(q: u32, w: usize, seed: u64) -> Result<Self> {
        Self::new(q, ChannelMode::FixedWeight(w), seed)
    }

    pub fn symmetric(q: u32, p: f64, seed: u64) -> Result<Self> {
        Self::new(q, ChannelMode::Symmetric(p), seed)
    }

    /// The generator for trial `index`.
    pub fn trial_rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }

    fn field(&self) -> FieldSpec {
        FieldSpec::new(self.q).expect("validated at construction")
    }
}

/// Draws one error pattern of length `n`.
pub fn sample_error<R: Rng + ?Sized>(spec: &ChannelSpec, n: usize, rng: &mut R) -> Result<FqVector> {
    let field = spec.field();
    let mut e = vec![0u32; n];
    match spec.mode {
        ChannelMode::FixedWeight(w) => {
            if w > n {
                return Err(Error::Domain(format!("error weight {w} exceeds length {n}")));
            }
            for pos in sample(rng, n, w).into_iter() {
                e[pos] = rng.gen_range(1..spec.q);
            }
        }
        ChannelMode::Symmetric(p) => {
            for x in e.iter_mut() {
                if rng.gen_bool(p) {
                    *x = rng.gen_range(1..spec.q);
                }
            }
        }
    }
    Ok(FqVector::from_raw(field, e))
}

pub fn random_message<R: Rng + ?Sized>(field: FieldSpec, k: usize, rng: &mut R) -> FqVector {
    let entries = (0..k).map(|_| rng.gen_range(0..field.q())).collect();
    FqVector::from_raw(field, entries)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "decoder", rename_all = "snake_case")]
pub enum DecoderSelection {
    Unique,
    Md { radius: usize },
}

impl DecoderSelection {
    pub fn decode(&self, code: &LinearCode, y: &FqVector) -> Result<DecodeOutcome> {
        match *self {
            DecoderSelection::Unique => unique_decode(code, y),
            DecoderSelection::Md { radius } => md_decode(code, y, radius),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            DecoderSelection::Unique => "unique",
            DecoderSelection::Md { .. } => "md",
        }
    }
}

/// One channel use: the transmitted codeword, the injected error and the
/// received word, all in systematic coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transmission {
    pub index: u64,
    pub codeword: FqVector,
    pub error: FqVector,
    pub received: FqVector,
}

pub fn transmit(code: &LinearCode, spec: &ChannelSpec, index: u64) -> Result<Transmission> {
    if spec.q != code.q() {
        return Err(Error::FieldMismatch {
            left: code.q(),
            right: spec.q,
        });
    }
    let mut rng = spec.trial_rng(index);
    let x = random_message(code.field(), code.k(), &mut rng);
    let codeword = code.encode(&x)?;
    let error = sample_error(spec, code.n(), &mut rng)?;
    let received = codeword.add(&error)?;
    Ok(Transmission {
        index,
        codeword,
        error,
        received,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TrialClass {
    Correct,
    Wrong,
    Incomplete,
}

pub fn classify(outcome: &DecodeOutcome, sent: &FqVector) -> TrialClass {
    match outcome.codeword() {
        Some(c) if c == sent => TrialClass::Correct,
        Some(_) => TrialClass::Wrong,
        None => TrialClass::Incomplete,
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct TrialReport {
    pub trials: u64,
    pub decoded_correct: u64,
    pub decoded_wrong: u64,
    pub incomplete: u64,
    pub mean_patterns_inspected: f64,
    pub max_patterns_inspected: u64,
    /// Largest decoded error weight observed.
    pub max_error_weight: usize,
    pub seed: u64,
}

/// Accumulates per-trial results into a [`TrialReport`].
#[derive(Debug, Clone, Default)]
pub struct TrialTally {
    report: TrialReport,
    total_patterns: u128,
}

impl TrialTally {
    pub fn new(seed: u64) -> Self {
        Self {
            report: TrialReport {
                seed,
                ..TrialReport::default()
            },
            total_patterns: 0,
        }
    }

    pub fn record(&mut self, outcome: &DecodeOutcome, sent: &FqVector) -> TrialClass {
        let class = classify(outcome, sent);
        let r = &mut self.report;
        r.trials += 1;
        match class {
            TrialClass::Correct => r.decoded_correct += 1,
            TrialClass::Wrong => r.decoded_wrong += 1,
            TrialClass::Incomplete => r.incomplete += 1,
        }
        let p = outcome.stats.patterns_inspected;
        r.max_patterns_inspected = r.max_patterns_inspected.max(p);
        r.max_error_weight = r.max_error_weight.max(outcome.error_weight().unwrap_or(0));
        self.total_patterns += p as u128;
        class
    }

    pub fn finish(mut self) -> TrialReport {
        if self.report.trials > 0 {
            self.report.mean_patterns_inspected =
                self.total_patterns as f64 / self.report.trials as f64;
        }
        self.report
    }
}

/// Encodes a uniform random message per trial, corrupts it, decodes and
/// classifies the result against the transmitted codeword.
pub fn run_trials(
    code: &LinearCode,
    decoder: DecoderSelection,
    spec: &ChannelSpec,
    trials: u64,
) -> Result<TrialReport> {
    let mut tally = TrialTally::new(spec.seed);
    for i in 0..trials {
        let tx = transmit(code, spec, i)?;
        let outcome = decoder.decode(code, &tx.received)?;
        tally.record(&outcome, &tx.codeword);
    }
    Ok(tally.finish())
}
