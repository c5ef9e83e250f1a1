//! Systematic linear codes: encoding, syndromes and brute-force structural
//! parameters.

use crate::bounds::pow_big;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{mat_vec_mul, to_systematic, ColumnPermutation, FqMatrix, FqVector};
use num_traits::ToPrimitive;

/// Default cap on the number of items any brute-force routine may enumerate.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 1 << 24;

/// An `[n, k]` linear code held in systematic coordinates.
///
/// `generator` is `[I_k | A]` and `parity_check` is `[-A^T | I_{n-k}]`.
/// Vectors handed to [`LinearCode::encode`], [`LinearCode::syndrome`] and the
/// decoders are in systematic coordinates; use
/// [`LinearCode::to_systematic_order`] and [`LinearCode::to_original_order`]
/// to translate from and to the column order of the generator the code was
/// built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: FieldSpec,
    n: usize,
    k: usize,
    generator: FqMatrix,
    parity_check: FqMatrix,
    perm: ColumnPermutation,
    distance: Option<usize>,
    /// Columns of the parity-check matrix, each of length `n - k`.
    h_columns: Vec<Vec<u32>>,
}

impl LinearCode {
    /// Builds a code from any full-rank `k × n` generator matrix.
    pub fn from_generator(g: &FqMatrix, distance: Option<usize>) -> Result<Self> {
        let sys = to_systematic(g)?;
        let (k, n) = (g.rows(), g.cols());
        let h_columns = (0..n).map(|c| sys.parity_check.column(c)).collect();
        let code = Self {
            field: g.field(),
            n,
            k,
            generator: sys.generator,
            parity_check: sys.parity_check,
            perm: sys.perm,
            distance: None,
            h_columns,
        };
        match distance {
            Some(d) => code.with_distance(d),
            None => Ok(code),
        }
    }

    /// Attaches a known minimum distance. The value is trusted, not verified.
    pub fn with_distance(mut self, d: usize) -> Result<Self> {
        if d == 0 || d > self.n - self.k + 1 {
            return Err(Error::InvalidParameters(format!(
                "distance {d} violates 1 <= d <= n-k+1 = {}",
                self.n - self.k + 1
            )));
        }
        self.distance = Some(d);
        Ok(self)
    }

    /// Computes the minimum distance by brute force and attaches it.
    pub fn with_computed_distance(self) -> Result<Self> {
        let d = self.min_distance()?;
        self.with_distance(d)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn distance(&self) -> Option<usize> {
        self.distance
    }

    /// `⌊(d-1)/2⌋` when the distance is known.
    pub fn unique_radius(&self) -> Option<usize> {
        self.distance.map(|d| (d - 1) / 2)
    }

    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n as f64
    }

    pub fn relative_distance(&self) -> Option<f64> {
        self.distance.map(|d| d as f64 / self.n as f64)
    }

    pub fn generator(&self) -> &FqMatrix {
        &self.generator
    }

    pub fn parity_check(&self) -> &FqMatrix {
        &self.parity_check
    }

    pub fn perm(&self) -> &ColumnPermutation {
        &self.perm
    }

    pub(crate) fn h_column(&self, j: usize) -> &[u32] {
        &self.h_columns[j]
    }

    fn check_vector(&self, v: &FqVector, len: usize) -> Result<()> {
        if v.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field.q(),
                right: v.field().q(),
            });
        }
        if v.len() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                found: v.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_word(&self, y: &FqVector) -> Result<()> {
        self.check_vector(y, self.n)
    }

    /// `⟨x | x·A⟩`.
    pub fn encode(&self, x: &FqVector) -> Result<FqVector> {
        self.check_vector(x, self.k)?;
        let f = self.field;
        let mut out = x.entries().to_vec();
        out.extend((self.k..self.n).map(|c| {
            (0..self.k).fold(0, |acc, r| f.add(acc, f.mul(x[r], self.generator.get(r, c))))
        }));
        Ok(FqVector::from_raw(f, out))
    }

    /// `H y^T`.
    pub fn syndrome(&self, y: &FqVector) -> Result<FqVector> {
        self.check_word(y)?;
        mat_vec_mul(&self.parity_check, y)
    }

    pub fn is_codeword(&self, y: &FqVector) -> Result<bool> {
        Ok(self.syndrome(y)?.is_zero())
    }

    pub fn to_systematic_order(&self, y: &FqVector) -> Result<FqVector> {
        self.check_word(y)?;
        self.perm.apply(y)
    }

    pub fn to_original_order(&self, y: &FqVector) -> Result<FqVector> {
        self.check_word(y)?;
        self.perm.unapply(y)
    }

    /// The generator matrix in the original column order.
    pub fn original_generator(&self) -> FqMatrix {
        self.generator
            .permute_columns(&self.perm.inverse())
            .expect("permutation length matches n")
    }

    /// Iterates over all `q^k` codewords, messages in lexicographic order.
    pub fn codewords(&self) -> Result<impl Iterator<Item = (FqVector, FqVector)> + '_> {
        guard("codeword enumeration", self.q(), self.k, DEFAULT_ENUMERATION_LIMIT)?;
        Ok(Messages::new(self.field, self.k).map(move |x| {
            let c = self.encode(&x).expect("message has length k");
            (x, c)
        }))
    }

    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_with_limit(DEFAULT_ENUMERATION_LIMIT)
    }

    /// Minimum weight over all nonzero codewords.
    pub fn min_distance_with_limit(&self, limit: u64) -> Result<usize> {
        guard("minimum distance", self.q(), self.k, limit)?;
        let best = Messages::new(self.field, self.k)
            .skip(1)
            .map(|x| self.encode(&x).expect("message has length k").weight())
            .min()
            .expect("k >= 1 so a nonzero message exists");
        Ok(best)
    }

    pub fn covering_radius(&self) -> Result<usize> {
        self.covering_radius_with_limit(DEFAULT_ENUMERATION_LIMIT)
    }

    /// Largest coset-leader weight over all `q^(n-k)` syndromes.
    pub fn covering_radius_with_limit(&self, limit: u64) -> Result<usize> {
        Ok(SyndromeLayers::build(self, limit)?.depth())
    }

    /// Full syndrome to minimum-weight coset leader table.
    pub fn coset_leaders(&self) -> Result<CosetLeaders> {
        self.coset_leaders_with_limit(DEFAULT_ENUMERATION_LIMIT)
    }

    pub fn coset_leaders_with_limit(&self, limit: u64) -> Result<CosetLeaders> {
        let layers = SyndromeLayers::build(self, limit)?;
        Ok(CosetLeaders {
            field: self.field,
            n: self.n,
            layers,
        })
    }

    pub(crate) fn syndrome_index(&self, s: &[u32]) -> usize {
        s.iter().fold(0usize, |acc, &v| acc * self.q() as usize + v as usize)
    }
}

fn guard(what: &'static str, q: u32, exp: usize, limit: u64) -> Result<()> {
    let size = pow_big(q, exp);
    match size.to_u64() {
        Some(s) if s <= limit => Ok(()),
        _ => Err(Error::GuardExceeded {
            what,
            size: format!("{q}^{exp} = {size}"),
            limit,
        }),
    }
}

/// All vectors of GF(q)^len in lexicographic order (first coordinate most
/// significant).
#[derive(Debug, Clone)]
pub struct Messages {
    field: FieldSpec,
    current: Option<Vec<u32>>,
}

impl Messages {
    pub fn new(field: FieldSpec, len: usize) -> Self {
        Self {
            field,
            current: Some(vec![0; len]),
        }
    }
}

impl Iterator for Messages {
    type Item = FqVector;

    fn next(&mut self) -> Option<FqVector> {
        let cur = self.current.take()?;
        let out = FqVector::from_raw(self.field, cur.clone());
        let mut next = cur;
        let q = self.field.q();
        let mut i = next.len();
        loop {
            if i == 0 {
                return Some(out);
            }
            i -= 1;
            next[i] += 1;
            if next[i] < q {
                break;
            }
            next[i] = 0;
        }
        self.current = Some(next);
        Some(out)
    }
}

const UNREACHED: u32 = u32::MAX;

/// Breadth-first expansion of the syndrome space: the syndromes reachable
/// with weight `w` are those of weight `w-1` plus one scaled column of `H`.
/// Each syndrome keeps the step that first reached it.
#[derive(Debug, Clone)]
struct SyndromeLayers {
    /// Per syndrome index: parent syndrome index, or `UNREACHED`.
    parent: Vec<u32>,
    /// Per syndrome index: position and value of the step from the parent.
    step: Vec<(u32, u32)>,
    weight: Vec<u32>,
    depth: usize,
}

impl SyndromeLayers {
    fn build(code: &LinearCode, limit: u64) -> Result<Self> {
        let r = code.redundancy();
        guard("coset enumeration", code.q(), r, limit)?;
        let f = code.field;
        let size = code.q().pow(r as u32) as usize;
        let mut parent = vec![UNREACHED; size];
        let mut step = vec![(0, 0); size];
        let mut weight = vec![0; size];
        parent[0] = 0;
        let mut frontier = vec![0usize];
        let mut reached = 1usize;
        let mut depth = 0;
        let mut digits = vec![0u32; r];
        while reached < size && !frontier.is_empty() {
            let mut next = Vec::new();
            for &s in &frontier {
                decode_index(s, code.q(), &mut digits);
                for j in 0..code.n {
                    let col = code.h_column(j);
                    for a in f.nonzero() {
                        let idx = digits
                            .iter()
                            .zip(col)
                            .fold(0usize, |acc, (&d, &h)| {
                                acc * code.q() as usize + f.add(d, f.mul(a, h)) as usize
                            });
                        if parent[idx] == UNREACHED {
                            parent[idx] = s as u32;
                            step[idx] = (j as u32, a);
                            weight[idx] = depth as u32 + 1;
                            next.push(idx);
                            reached += 1;
                        }
                    }
                }
            }
            depth += 1;
            frontier = next;
        }
        debug_assert_eq!(reached, size, "H has full row rank");
        Ok(Self {
            parent,
            step,
            weight,
            depth,
        })
    }

    fn depth(&self) -> usize {
        self.depth
    }
}

fn decode_index(mut idx: usize, q: u32, out: &mut [u32]) {
    for d in out.iter_mut().rev() {
        *d = (idx % q as usize) as u32;
        idx /= q as usize;
    }
}

/// Minimum-weight coset leaders indexed by syndrome.
#[derive(Debug, Clone)]
pub struct CosetLeaders {
    field: FieldSpec,
    n: usize,
    layers: SyndromeLayers,
}

impl CosetLeaders {
    pub fn covering_radius(&self) -> usize {
        self.layers.depth
    }

    pub fn len(&self) -> usize {
        self.layers.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.parent.is_empty()
    }

    /// Leader weight of every syndrome, indexed in base-q order.
    pub fn weights(&self) -> impl Iterator<Item = usize> + '_ {
        self.layers.weight.iter().map(|&w| w as usize)
    }

    /// The leader for a syndrome index.
    pub fn leader(&self, index: usize) -> FqVector {
        let f = self.field;
        let mut e = vec![0u32; self.n];
        let mut s = index;
        while s != 0 {
            let (pos, val) = self.layers.step[s];
            e[pos as usize] = f.add(e[pos as usize], val);
            s = self.layers.parent[s] as usize;
        }
        FqVector::from_raw(f, e)
    }

    pub fn leader_weight(&self, index: usize) -> usize {
        self.layers.weight[index] as usize
    }
}
