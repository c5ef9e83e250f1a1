//! Unique and minimum-distance decoding of linear block codes over prime
//! fields by enumerating error patterns on the information set only.
//!
//! A code is held in systematic form `G = [I_k | A]`, `H = [-A^T | I_{n-k}]`.
//! For an information-set pattern `⟨v|0⟩` the remainder `s_y - H⟨v|0⟩^T`
//! is the check-set part of the matching error, so a decoder only has to
//! walk the `V_q(k, t)` patterns of weight `≤ t` on `k` positions instead of
//! the `V_q(n, t)` full-length patterns or all `q^k` codewords.
//!
//! ```
//! use isdecode::{fixtures, unique_decode, FqVector};
//!
//! let code = fixtures::hamming_7_4();
//! let y = FqVector::new(code.field(), vec![1, 0, 1, 0, 1, 1, 0]).unwrap();
//! let out = unique_decode(&code, &y).unwrap();
//! assert_eq!(out.codeword().unwrap().entries(), &[1, 0, 0, 0, 1, 1, 0]);
//! ```

pub mod bench;
pub mod bounds;
pub mod channel;
pub mod cli;
pub mod code;
pub mod codefile;
pub mod decode;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod linalg;
pub mod patterns;
pub mod verify;

pub use bounds::{ball_volume, bounds_report, entropy_q, gv_distance, BoundsReport};
pub use channel::{run_trials, sample_error, ChannelMode, ChannelSpec, DecoderSelection, TrialReport};
pub use code::LinearCode;
pub use codefile::CodeFile;
pub use decode::{
    md_decode, oracle_ball_decode, oracle_coset_table_decode, oracle_nearest_codeword, unique_decode,
    DecodeOutcome, DecodeStats, DecodeStatus,
};
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use linalg::{mat_vec_mul, rank, to_systematic, ColumnPermutation, FqMatrix, FqVector};
pub use patterns::PatternEnumerator;
