//! Streaming enumeration of information-set error patterns.
//!
//! Patterns are emitted in a fixed total order:
//! weight ascending, then support (as a sorted position list) in
//! lexicographic order, then the nonzero values on the support in
//! lexicographic order over `1..q`. The enumerator keeps only the current
//! support and values, so its state is `O(k)` no matter how far it has run.

use crate::bounds::{ball_volume_clamped, binomial, sphere_size};
use crate::field::FieldSpec;
use crate::linalg::FqVector;
use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Debug, Clone)]
pub struct PatternEnumerator {
    field: FieldSpec,
    k: usize,
    max_weight: usize,
    support: Vec<usize>,
    values: Vec<u32>,
    /// The current pattern has not been handed out yet.
    pending: bool,
    exhausted: bool,
}

impl PatternEnumerator {
    /// Enumerates all vectors of length `k` with weight at most `max_weight`.
    /// A bound above `k` is treated as `k`.
    pub fn new(field: FieldSpec, k: usize, max_weight: usize) -> Self {
        Self {
            field,
            k,
            max_weight: max_weight.min(k),
            support: Vec::with_capacity(max_weight.min(k)),
            values: Vec::with_capacity(max_weight.min(k)),
            pending: true,
            exhausted: false,
        }
    }

    pub fn len_k(&self) -> usize {
        self.k
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    /// Moves to the next pattern. Returns `false` once exhausted.
    ///
    /// After a `true` return, [`support`](Self::support) and
    /// [`values`](Self::values) describe the pattern just produced.
    pub fn advance(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        if self.pending {
            self.pending = false;
            return true;
        }
        if self.step_values() || self.step_support() || self.step_weight() {
            return true;
        }
        self.exhausted = true;
        false
    }

    fn step_values(&mut self) -> bool {
        let q = self.field.q();
        for i in (0..self.values.len()).rev() {
            if self.values[i] + 1 < q {
                self.values[i] += 1;
                self.values[i + 1..].fill(1);
                return true;
            }
        }
        false
    }

    fn step_support(&mut self) -> bool {
        let w = self.support.len();
        for i in (0..w).rev() {
            if self.support[i] < self.k - w + i {
                self.support[i] += 1;
                for j in i + 1..w {
                    self.support[j] = self.support[j - 1] + 1;
                }
                self.values.fill(1);
                return true;
            }
        }
        false
    }

    fn step_weight(&mut self) -> bool {
        let w = self.support.len() + 1;
        if w > self.max_weight {
            return false;
        }
        self.support.clear();
        self.support.extend(0..w);
        self.values.clear();
        self.values.resize(w, 1);
        true
    }

    /// Sorted positions of the current pattern's nonzero entries.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// Nonzero values aligned with [`support`](Self::support).
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn weight(&self) -> usize {
        self.support.len()
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn current_vector(&self) -> FqVector {
        let mut e = vec![0; self.k];
        for (&p, &v) in self.support.iter().zip(&self.values) {
            e[p] = v;
        }
        FqVector::from_raw(self.field, e)
    }

    /// Total number of patterns this enumerator produces, `V_q(k, w)`.
    pub fn total(&self) -> BigUint {
        ball_volume_clamped(self.k, self.max_weight, self.field.q())
    }

    /// Zero-based position of the current pattern in the emission order.
    fn rank(&self) -> BigUint {
        let q = self.field.q();
        let w = self.support.len();
        let below = if w == 0 {
            BigUint::zero()
        } else {
            ball_volume_clamped(self.k, w - 1, q)
        };
        let mut comb = BigUint::zero();
        let mut next_free = 0;
        for (i, &c) in self.support.iter().enumerate() {
            for j in next_free..c {
                comb += binomial(self.k - 1 - j, w - 1 - i);
            }
            next_free = c + 1;
        }
        let base = q as u64 - 1;
        let mut vals = BigUint::zero();
        for &v in &self.values {
            vals = vals * base + (v as u64 - 1);
        }
        below + comb * BigUint::from(base).pow(w as u32) + vals
    }

    /// Number of patterns not yet emitted, from the current position alone.
    pub fn count_remaining(&self) -> BigUint {
        if self.exhausted {
            return BigUint::zero();
        }
        let emitted = if self.pending {
            self.rank()
        } else {
            self.rank() + BigUint::one()
        };
        self.total() - emitted
    }

    /// Patterns of weight exactly `w` over `k` positions.
    pub fn layer_size(&self, w: usize) -> BigUint {
        sphere_size(self.k, w, self.field.q())
    }
}

impl Iterator for PatternEnumerator {
    type Item = FqVector;

    fn next(&mut self) -> Option<FqVector> {
        self.advance().then(|| self.current_vector())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use std::collections::HashSet;

    fn gf(q: u32) -> FieldSpec {
        FieldSpec::new(q).unwrap()
    }

    fn collect(q: u32, k: usize, w: usize) -> Vec<Vec<u32>> {
        PatternEnumerator::new(gf(q), k, w)
            .map(FqVector::into_entries)
            .collect()
    }

    #[test]
    fn order_examples() {
        assert_eq!(collect(2, 2, 1), vec![vec![0, 0], vec![1, 0], vec![0, 1]]);
        assert_eq!(
            collect(3, 2, 1),
            vec![vec![0, 0], vec![1, 0], vec![2, 0], vec![0, 1], vec![0, 2]]
        );
        let full = collect(2, 4, 4);
        assert_eq!(full.len(), 16);
        assert_eq!(full.iter().collect::<HashSet<_>>().len(), 16);
    }

    #[test]
    fn supports_follow_lexicographic_order() {
        let mut en = PatternEnumerator::new(gf(2), 4, 2);
        let mut supports = Vec::new();
        while en.advance() {
            if en.weight() == 2 {
                supports.push(en.support().to_vec());
            }
        }
        assert_eq!(
            supports,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn count_remaining_examples() {
        let fresh = PatternEnumerator::new(gf(2), 12, 3);
        assert_eq!(fresh.count_remaining().to_u64(), Some(299));
        let ternary = PatternEnumerator::new(gf(3), 4, 2);
        assert_eq!(ternary.count_remaining().to_u64(), Some(33));
        let mut en = PatternEnumerator::new(gf(3), 4, 2);
        while en.advance() {}
        assert_eq!(en.count_remaining(), BigUint::zero());
    }

    #[test]
    fn count_remaining_tracks_every_step() {
        for (q, k, w) in [(2, 6, 3), (3, 5, 5), (5, 4, 2), (2, 1, 1), (7, 3, 0)] {
            let mut en = PatternEnumerator::new(gf(q), k, w);
            let total = en.count_remaining().to_u64().unwrap();
            let mut emitted = 0u64;
            while en.advance() {
                emitted += 1;
                assert_eq!(en.count_remaining().to_u64().unwrap(), total - emitted);
            }
            assert_eq!(emitted, total);
        }
    }

    #[test]
    fn weight_bound_above_k_is_clamped() {
        assert_eq!(collect(2, 3, 10).len(), 8);
    }

    #[test]
    fn zero_length() {
        assert_eq!(collect(2, 0, 3), vec![Vec::<u32>::new()]);
    }
}
