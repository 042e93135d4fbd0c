//! Closed-form cover-size bounds. Logarithms are base 2.

use serde::{Deserialize, Serialize};

use super::AlgoError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// `⌊n²/4⌋`, any graph.
    Quadratic,
    /// `(3/2) n^{2 - 1/(s+t)}`, `K_{s,t}`-free with `max(s,t) >= 3`, `min(s,t) >= 2`.
    MainSt,
    /// `c n^{2 - 1/(s-1)} / (log n)^{(s-2)/(s-1)}`, `K_{s,1}`-free, `s >= 3`.
    Ks1,
    /// `c n^{3/2}`, `K_{2,2}`-free.
    K22,
    /// `c n^{3/2} (log n)^{1/2}`, `K_{2,3}`-free.
    K23,
    /// `c n^{2 - 4/(s+1)} / (log n)²`: some graph with no stable `s`-set needs this many.
    LowerStable,
}

impl BoundKind {
    /// True when the printed bound carries an unspecified constant.
    pub fn shape_only(self) -> bool {
        !matches!(self, BoundKind::Quadratic | BoundKind::MainSt)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundValue {
    pub kind: BoundKind,
    pub value: f64,
    /// The constant is caller supplied; only growth should be compared.
    pub shape_only: bool,
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<(), AlgoError> {
    if cond {
        Ok(())
    } else {
        Err(AlgoError::InvalidParameter(msg()))
    }
}

/// Evaluates a bound at `n`. `constant` is used only by shape-only kinds.
pub fn bound_value(
    kind: BoundKind,
    n: usize,
    s: usize,
    t: usize,
    constant: f64,
) -> Result<BoundValue, AlgoError> {
    let nf = n as f64;
    let log_n = || -> Result<f64, AlgoError> {
        need(n >= 2, || format!("{kind:?} needs n >= 2, got {n}"))?;
        Ok(nf.log2())
    };
    let value = match kind {
        BoundKind::Quadratic => ((n * n) / 4) as f64,
        BoundKind::MainSt => {
            need(s.max(t) >= 3 && s.min(t) >= 2, || {
                format!("main_st needs max(s,t) >= 3 and min(s,t) >= 2, got s={s}, t={t}")
            })?;
            1.5 * nf.powf(2.0 - 1.0 / (s + t) as f64)
        }
        BoundKind::Ks1 => {
            need(s >= 3, || format!("ks1 needs s >= 3, got {s}"))?;
            let k = (s - 1) as f64;
            constant * nf.powf(2.0 - 1.0 / k) / log_n()?.powf((s - 2) as f64 / k)
        }
        BoundKind::K22 => constant * nf.powf(1.5),
        BoundKind::K23 => constant * nf.powf(1.5) * log_n()?.sqrt(),
        BoundKind::LowerStable => {
            need(s >= 3, || format!("lower_stable needs s >= 3, got {s}"))?;
            constant * nf.powf(2.0 - 4.0 / (s + 1) as f64) / log_n()?.powi(2)
        }
    };
    Ok(BoundValue {
        kind,
        value,
        shape_only: kind.shape_only(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_examples() {
        let q = bound_value(BoundKind::Quadratic, 6, 0, 0, 0.0).unwrap();
        assert_eq!(q.value, 9.0);
        assert!(!q.shape_only);
        let m = bound_value(BoundKind::MainSt, 1024, 3, 2, 0.0).unwrap();
        assert!((m.value - 393216.0).abs() < 1e-6);
        let l = bound_value(BoundKind::LowerStable, 2, 3, 0, 1.0).unwrap();
        assert!((l.value - 2.0).abs() < 1e-12);
        assert!(l.shape_only);
    }

    #[test]
    fn quadratic_floors() {
        assert_eq!(
            bound_value(BoundKind::Quadratic, 7, 0, 0, 0.0)
                .unwrap()
                .value,
            12.0
        );
    }

    #[test]
    fn ks1_and_k23_values() {
        // n = 16, s = 3: 16^{3/2} / 4^{1/2} = 64 / 2
        let v = bound_value(BoundKind::Ks1, 16, 3, 1, 1.0).unwrap().value;
        assert!((v - 32.0).abs() < 1e-9);
        // n = 16: 64 · 2
        let v = bound_value(BoundKind::K23, 16, 2, 3, 1.0).unwrap().value;
        assert!((v - 128.0).abs() < 1e-9);
        let v = bound_value(BoundKind::K22, 16, 2, 2, 0.5).unwrap().value;
        assert!((v - 32.0).abs() < 1e-9);
    }

    #[test]
    fn invalid_combinations() {
        assert!(bound_value(BoundKind::MainSt, 10, 2, 2, 1.0).is_err());
        assert!(bound_value(BoundKind::MainSt, 10, 2, 3, 1.0).is_ok());
        assert!(bound_value(BoundKind::Ks1, 10, 2, 1, 1.0).is_err());
        assert!(bound_value(BoundKind::K23, 1, 2, 3, 1.0).is_err());
        assert!(bound_value(BoundKind::LowerStable, 10, 2, 0, 1.0).is_err());
    }
}
