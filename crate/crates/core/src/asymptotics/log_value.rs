//! Sign + log-magnitude representation for values that overflow `f64`.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
    Zero,
}

/// A real number stored as a sign and the natural log of its magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogValue {
    sign: Sign,
    ln_abs: f64,
}

impl LogValue {
    pub fn zero() -> Self {
        LogValue {
            sign: Sign::Zero,
            ln_abs: f64::NEG_INFINITY,
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::zero()
        } else if x > 0.0 {
            LogValue {
                sign: Sign::Positive,
                ln_abs: x.ln(),
            }
        } else {
            LogValue {
                sign: Sign::Negative,
                ln_abs: (-x).ln(),
            }
        }
    }

    /// Positive value with the given natural log.
    pub fn from_ln(ln_abs: f64) -> Self {
        LogValue {
            sign: Sign::Positive,
            ln_abs,
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Natural log of the magnitude (`-inf` for zero).
    pub fn ln_abs(&self) -> f64 {
        self.ln_abs
    }

    pub fn log10_abs(&self) -> f64 {
        self.ln_abs / std::f64::consts::LN_10
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.sign, Sign::Zero)
    }

    /// Back to `f64`; overflows to infinity beyond ~1e308.
    pub fn to_f64(&self) -> f64 {
        match self.sign {
            Sign::Zero => 0.0,
            Sign::Positive => self.ln_abs.exp(),
            Sign::Negative => -self.ln_abs.exp(),
        }
    }

    pub fn mul(&self, other: &LogValue) -> LogValue {
        match (self.sign, other.sign) {
            (Sign::Zero, _) | (_, Sign::Zero) => Self::zero(),
            (a, b) => LogValue {
                sign: if a == b {
                    Sign::Positive
                } else {
                    Sign::Negative
                },
                ln_abs: self.ln_abs + other.ln_abs,
            },
        }
    }

    pub fn div(&self, other: &LogValue) -> LogValue {
        assert!(!other.is_zero(), "division by zero LogValue");
        match self.sign {
            Sign::Zero => Self::zero(),
            a => LogValue {
                sign: if a == other.sign {
                    Sign::Positive
                } else {
                    Sign::Negative
                },
                ln_abs: self.ln_abs - other.ln_abs,
            },
        }
    }

    /// Sum via log-sum-exp; exact sign handling for mixed signs.
    pub fn add(&self, other: &LogValue) -> LogValue {
        match (self.sign, other.sign) {
            (Sign::Zero, _) => *other,
            (_, Sign::Zero) => *self,
            (a, b) => {
                let (hi, lo) = if self.ln_abs >= other.ln_abs {
                    (self, other)
                } else {
                    (other, self)
                };
                let d = (lo.ln_abs - hi.ln_abs).exp();
                if a == b {
                    LogValue {
                        sign: a,
                        ln_abs: hi.ln_abs + d.ln_1p(),
                    }
                } else if d == 1.0 {
                    Self::zero()
                } else {
                    LogValue {
                        sign: hi.sign,
                        ln_abs: hi.ln_abs + (-d).ln_1p(),
                    }
                }
            }
        }
    }

    pub fn powi(&self, k: i32) -> LogValue {
        match self.sign {
            Sign::Zero => {
                if k == 0 {
                    LogValue::from_f64(1.0)
                } else {
                    Self::zero()
                }
            }
            s => LogValue {
                sign: if s == Sign::Negative && k % 2 != 0 {
                    Sign::Negative
                } else {
                    Sign::Positive
                },
                ln_abs: self.ln_abs * k as f64,
            },
        }
    }

    /// Decimal rendering when the magnitude fits in ~1e300, else `None`.
    pub fn to_decimal_string(&self) -> Option<String> {
        if self.is_zero() {
            return Some("0".into());
        }
        if self.log10_abs().abs() >= 300.0 {
            return None;
        }
        Some(format!("{:.6e}", self.to_f64()))
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Zero => write!(f, "0"),
            Sign::Positive => write!(f, "exp({:.12})", self.ln_abs),
            Sign::Negative => write!(f, "-exp({:.12})", self.ln_abs),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn mul_round_trips(a in -1e150f64..1e150, b in -1e150f64..1e150) {
            prop_assume!(a.abs() > 1e-130 && b.abs() > 1e-130);
            let product = LogValue::from_f64(a).mul(&LogValue::from_f64(b));
            let want = a * b;
            prop_assert!((product.to_f64() - want).abs() <= 1e-12 * want.abs());
        }

        #[test]
        fn add_round_trips(a in -1e100f64..1e100, b in -1e100f64..1e100) {
            prop_assume!(a.abs() > 1e-90 && b.abs() > 1e-90);
            let sum = LogValue::from_f64(a).add(&LogValue::from_f64(b));
            let want = a + b;
            // cancellation loses relative accuracy; compare against inputs
            prop_assert!((sum.to_f64() - want).abs() <= 1e-11 * (a.abs() + b.abs()));
        }
    }

    #[test]
    fn huge_values_stay_finite_in_log_space() {
        let v = LogValue::from_ln(2500.0); // ~ e^2500, far beyond f64
        let squared = v.mul(&v);
        assert_eq!(squared.ln_abs(), 5000.0);
        assert!(squared.to_decimal_string().is_none());
        assert_eq!(v.to_f64(), f64::INFINITY);
    }

    #[test]
    fn signs_and_powers() {
        let neg = LogValue::from_f64(-3.0);
        assert!((neg.powi(2).to_f64() - 9.0).abs() < 1e-13);
        assert!((neg.powi(3).to_f64() + 27.0).abs() < 1e-12);
        let zero = LogValue::zero();
        assert_eq!(zero.mul(&neg).to_f64(), 0.0);
        assert_eq!(neg.add(&LogValue::from_f64(3.0)).to_f64(), 0.0);
    }
}
