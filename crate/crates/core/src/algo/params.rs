use serde::{Deserialize, Serialize};

use super::AlgoError;

/// How closely a procedure follows the written construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Written thresholds and exact sub-searches.
    #[value(name = "faithful")]
    #[serde(rename = "faithful")]
    PaperFaithful,
    /// Small-n friendly: no singleton remainder, threshold-free partitions,
    /// greedy heavy-clique search.
    Practical,
}

/// Parameters shared by the constructive covers.
///
/// The exponent `d = 1/(s+t)` is never stored as a float; thresholds derived
/// from it are computed with integer arithmetic where an exact comparison
/// matters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverParams {
    pub s: usize,
    pub t: usize,
    pub mode: Mode,
    /// Greedy extraction in the peeling cover stops once at most
    /// `remainder_factor · √n'` neighbours remain.
    pub remainder_factor: f64,
    /// Scale `f` of the clique-size threshold in [`super::clique_partition`].
    pub partition_factor: f64,
}

impl CoverParams {
    pub fn new(s: usize, t: usize, mode: Mode) -> Self {
        match mode {
            Mode::PaperFaithful => Self {
                s,
                t,
                mode,
                remainder_factor: 4.0,
                partition_factor: 1.0,
            },
            Mode::Practical => Self {
                s,
                t,
                mode,
                remainder_factor: 0.0,
                partition_factor: 0.0,
            },
        }
    }

    pub fn faithful(s: usize, t: usize) -> Self {
        Self::new(s, t, Mode::PaperFaithful)
    }

    pub fn practical(s: usize, t: usize) -> Self {
        Self::new(s, t, Mode::Practical)
    }

    pub fn validate(&self) -> Result<(), AlgoError> {
        if self.s < 2 {
            return Err(AlgoError::InvalidParameter(format!(
                "s must be at least 2, got {}",
                self.s
            )));
        }
        if !(self.remainder_factor >= 0.0 && self.partition_factor >= 0.0) {
            return Err(AlgoError::InvalidParameter(
                "remainder_factor and partition_factor must be non-negative".into(),
            ));
        }
        Ok(())
    }

    /// `s + t`, the reciprocal of the exponent `d`.
    pub fn d_denominator(&self) -> u32 {
        (self.s + self.t) as u32
    }

    pub fn d(&self) -> f64 {
        1.0 / f64::from(self.d_denominator())
    }

    /// `⌈n^d⌉`: the least `k` with `k^(s+t) >= n`.
    pub fn phase1_threshold(&self, n: usize) -> usize {
        let e = self.d_denominator();
        let mut k = (n as f64).powf(self.d()).floor().max(1.0) as usize;
        while k > 1 && pow_ge(k - 1, e, n) {
            k -= 1;
        }
        while !pow_ge(k, e, n) {
            k += 1;
        }
        k
    }

    /// `n^{1-d}` as a real number, for reporting.
    pub fn phase2_threshold(&self, n: usize) -> f64 {
        (n as f64).powf(1.0 - self.d())
    }

    /// `degree <= n^{1-d}`, decided exactly as `degree^(s+t) <= n^(s+t-1)`.
    pub fn is_light(&self, n: usize, degree: usize) -> bool {
        let e = self.d_denominator();
        match (
            (degree as u128).checked_pow(e),
            (n as u128).checked_pow(e - 1),
        ) {
            (Some(lhs), Some(rhs)) => lhs <= rhs,
            _ => (degree as f64) <= self.phase2_threshold(n),
        }
    }
}

/// `base^exp >= target` without overflow.
fn pow_ge(base: usize, exp: u32, target: usize) -> bool {
    match (base as u128).checked_pow(exp) {
        Some(v) => v >= target as u128,
        None => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phase1_threshold_is_exact_ceiling() {
        let p = CoverParams::faithful(3, 2);
        assert_eq!(p.phase1_threshold(1), 1);
        assert_eq!(p.phase1_threshold(5), 2);
        assert_eq!(p.phase1_threshold(32), 2);
        assert_eq!(p.phase1_threshold(33), 3);
        assert_eq!(p.phase1_threshold(243), 3);
        assert_eq!(p.phase1_threshold(244), 4);
        assert_eq!(p.phase1_threshold(40), 3);
    }

    #[test]
    fn light_vertex_test_is_exact() {
        let p = CoverParams::faithful(3, 2);
        // 32^{4/5} = 16
        assert!(p.is_light(32, 16));
        assert!(!p.is_light(32, 17));
        // 5^{4/5} ≈ 3.62
        assert!(p.is_light(5, 3));
        assert!(!p.is_light(5, 4));
    }

    #[test]
    fn d_times_denominator_is_one() {
        for (s, t) in [(3, 2), (4, 4), (2, 0), (7, 3)] {
            let p = CoverParams::faithful(s, t);
            assert_eq!(p.d_denominator() as usize, s + t);
        }
    }

    #[test]
    fn rejects_small_s() {
        assert!(CoverParams::faithful(1, 2).validate().is_err());
        assert!(CoverParams::faithful(2, 0).validate().is_ok());
    }
}
