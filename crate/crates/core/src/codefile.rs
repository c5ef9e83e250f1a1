//! Plain-text code description.
//!
//! ```text
//! # optional comments
//! q 2
//! n 7
//! k 4
//! d 3
//! G
//! 1 0 0 0 1 1 0
//! 0 1 0 0 0 1 1
//! 0 0 1 0 1 1 1
//! 0 0 0 1 1 0 1
//! ```
//!
//! `#` starts a comment anywhere on a line. The `d` line is optional. The
//! canonical writer emits full-line comments first, then `q`, `n`, `k`, `d`
//! and the generator rows, so writing a parsed canonical file reproduces it
//! byte for byte.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::FqMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeFile {
    pub comments: Vec<String>,
    pub distance: Option<usize>,
    pub generator: FqMatrix,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

impl CodeFile {
    pub fn new(generator: FqMatrix, distance: Option<usize>) -> Self {
        Self {
            comments: Vec::new(),
            distance,
            generator,
        }
    }

    pub fn from_code(code: &LinearCode) -> Self {
        Self::new(code.original_generator(), code.distance())
    }

    pub fn q(&self) -> u32 {
        self.generator.field().q()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn to_code(&self) -> Result<LinearCode> {
        LinearCode::from_generator(&self.generator, self.distance)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut comments = Vec::new();
        let mut q: Option<u32> = None;
        let mut n: Option<usize> = None;
        let mut k: Option<usize> = None;
        let mut d: Option<usize> = None;
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut in_matrix = false;
        let mut field = None;
        let mut last_line = 0;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let (content, comment) = match raw.find('#') {
                Some(p) => (&raw[..p], Some(&raw[p + 1..])),
                None => (raw, None),
            };
            let content = content.trim();
            if content.is_empty() {
                if let Some(c) = comment {
                    if !in_matrix && q.is_none() && n.is_none() && k.is_none() {
                        comments.push(c.strip_prefix(' ').unwrap_or(c).trim_end().to_string());
                    }
                }
                continue;
            }

            if in_matrix {
                let (n, k) = (n.unwrap(), k.unwrap());
                if rows.len() == k {
                    return Err(parse_err(line_no, format!("unexpected content after {k} generator rows")));
                }
                let f: FieldSpec = field.unwrap();
                let row = content
                    .split_whitespace()
                    .map(|tok| {
                        let v: u32 = tok
                            .parse()
                            .map_err(|_| parse_err(line_no, format!("invalid residue {tok:?}")))?;
                        f.check(v).map_err(|e| parse_err(line_no, e.to_string()))
                    })
                    .collect::<Result<Vec<u32>>>()?;
                if row.len() != n {
                    return Err(parse_err(
                        line_no,
                        format!("generator row has {} entries, expected n = {n}", row.len()),
                    ));
                }
                rows.push(row);
                continue;
            }

            let mut toks = content.split_whitespace();
            let key = toks.next().unwrap();
            if key == "G" {
                if toks.next().is_some() {
                    return Err(parse_err(line_no, "`G` takes no arguments"));
                }
                let qv = q.ok_or_else(|| parse_err(line_no, "missing `q` before `G`"))?;
                let nv = n.ok_or_else(|| parse_err(line_no, "missing `n` before `G`"))?;
                let kv = k.ok_or_else(|| parse_err(line_no, "missing `k` before `G`"))?;
                if kv == 0 || kv >= nv {
                    return Err(parse_err(line_no, format!("need 1 <= k < n, got k={kv}, n={nv}")));
                }
                field = Some(FieldSpec::new(qv).map_err(|e| parse_err(line_no, e.to_string()))?);
                in_matrix = true;
                continue;
            }
            let value = toks
                .next()
                .ok_or_else(|| parse_err(line_no, format!("`{key}` needs a value")))?;
            if toks.next().is_some() {
                return Err(parse_err(line_no, format!("`{key}` takes a single value")));
            }
            let number = |what: &str| -> Result<u64> {
                value
                    .parse::<u64>()
                    .map_err(|_| parse_err(line_no, format!("invalid {what} value {value:?}")))
            };
            let slot_taken = |taken: bool| {
                if taken {
                    Err(parse_err(line_no, format!("duplicate `{key}` line")))
                } else {
                    Ok(())
                }
            };
            match key {
                "q" => {
                    slot_taken(q.is_some())?;
                    let v = u32::try_from(number("q")?)
                        .map_err(|_| parse_err(line_no, "q does not fit in 32 bits"))?;
                    q = Some(v);
                }
                "n" => {
                    slot_taken(n.is_some())?;
                    n = Some(number("n")? as usize);
                }
                "k" => {
                    slot_taken(k.is_some())?;
                    k = Some(number("k")? as usize);
                }
                "d" => {
                    slot_taken(d.is_some())?;
                    d = Some(number("d")? as usize);
                }
                other => return Err(parse_err(line_no, format!("unknown key `{other}`"))),
            }
        }

        if !in_matrix {
            return Err(parse_err(last_line.max(1), "missing `G` section"));
        }
        let k = k.unwrap();
        if rows.len() != k {
            return Err(parse_err(
                last_line,
                format!("expected {k} generator rows, found {}", rows.len()),
            ));
        }
        let generator = FqMatrix::from_rows(field.unwrap(), &rows)?;
        let rank = generator.rank();
        if rank < k {
            return Err(parse_err(
                last_line,
                format!("generator matrix has rank {rank}, expected {k}"),
            ));
        }
        if let Some(dv) = d {
            if dv == 0 || dv > generator.cols() - k + 1 {
                return Err(parse_err(last_line, format!("distance {dv} is out of range")));
            }
        }
        Ok(Self {
            comments,
            distance: d,
            generator,
        })
    }

    /// Canonical text form.
    pub fn write(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            if c.is_empty() {
                out.push_str("#\n");
            } else {
                let _ = writeln!(out, "# {c}");
            }
        }
        let _ = writeln!(out, "q {}", self.q());
        let _ = writeln!(out, "n {}", self.n());
        let _ = writeln!(out, "k {}", self.k());
        if let Some(d) = self.distance {
            let _ = writeln!(out, "d {d}");
        }
        out.push_str("G\n");
        out.push_str(&self.generator.to_string());
        out
    }

    /// `G = [I_k | A]` with `A` uniform over GF(q), drawn from ChaCha8
    /// seeded with `seed`.
    pub fn random_systematic(q: u32, n: usize, k: usize, seed: u64) -> Result<Self> {
        let field = FieldSpec::new(q)?;
        if k == 0 || k >= n {
            return Err(Error::InvalidParameters(format!(
                "need 1 <= k < n, got k={k}, n={n}"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rows: Vec<Vec<u32>> = (0..k)
            .map(|r| {
                let mut row = vec![0; k];
                row[r] = 1;
                row.extend((k..n).map(|_| rng.gen_range(0..q)));
                row
            })
            .collect();
        let generator = FqMatrix::from_rows(field, &rows)?;
        Ok(Self {
            comments: vec![format!("random systematic code q={q} n={n} k={k} seed={seed}")],
            distance: None,
            generator,
        })
    }
}
