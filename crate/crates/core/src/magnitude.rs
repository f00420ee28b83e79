//! Magnitude arithmetic for bound evaluation. Values are either exact
//! big integers or iterated powers of two (`Pow2`), which keeps tower-sized
//! quantities representable. Every represented value is a definite number, so
//! comparisons are decided exactly on representations; arithmetic rounds
//! outward (toward the tracked polarity) and the flags record when a result
//! stopped being exact.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::cmp::Ordering;

/// Bit-size cap for exact products; beyond it results fall into `Pow2` form.
const EXACT_BIT_CAP: u64 = 1 << 21;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Magnitude {
    Exact(BigUint),
    /// `Pow2(e)` represents 2^e exactly.
    Pow2(Box<Magnitude>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polarity {
    Exact,
    Upper,
    Lower,
}

impl Polarity {
    fn join(self, other: Polarity) -> Polarity {
        match (self, other) {
            (Polarity::Exact, p) | (p, Polarity::Exact) => p,
            (a, b) => {
                debug_assert_eq!(a, b, "mixing upper and lower bounds");
                a
            }
        }
    }

    fn weaken_upper(self) -> Polarity {
        match self {
            Polarity::Lower => Polarity::Lower,
            _ => Polarity::Upper,
        }
    }

    fn weaken_lower(self) -> Polarity {
        match self {
            Polarity::Upper => Polarity::Upper,
            _ => Polarity::Lower,
        }
    }
}

/// A magnitude plus the direction in which it bounds the true quantity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigBound {
    pub mag: Magnitude,
    pub polarity: Polarity,
}

impl Magnitude {
    pub fn from_u64(v: u64) -> Magnitude {
        Magnitude::Exact(BigUint::from(v))
    }

    pub fn zero() -> Magnitude {
        Magnitude::Exact(BigUint::zero())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Magnitude::Exact(v) if v.is_zero())
    }

    pub fn as_exact(&self) -> Option<&BigUint> {
        match self {
            Magnitude::Exact(v) => Some(v),
            Magnitude::Pow2(_) => None,
        }
    }

    pub fn as_u64(&self) -> Option<u64> {
        self.as_exact().and_then(|v| u64::try_from(v).ok())
    }

    /// Total order on represented values.
    pub fn cmp_mag(&self, other: &Magnitude) -> Ordering {
        use Magnitude::*;
        match (self, other) {
            (Exact(a), Exact(b)) => a.cmp(b),
            (Pow2(e), Exact(v)) => {
                if v.is_zero() {
                    return Ordering::Greater;
                }
                let floor_log = Magnitude::from_u64(v.bits() - 1);
                match e.cmp_mag(&floor_log) {
                    Ordering::Greater => Ordering::Greater,
                    Ordering::Less => Ordering::Less,
                    Ordering::Equal => {
                        // v >= 2^floor_log; equality iff v is that power
                        if v.count_ones() == 1 {
                            Ordering::Equal
                        } else {
                            Ordering::Less
                        }
                    }
                }
            }
            (Exact(_), Pow2(_)) => other.cmp_mag(self).reverse(),
            (Pow2(a), Pow2(b)) => a.cmp_mag(b),
        }
    }

    /// Exact log2 when the value is a power of two; otherwise the ceiling,
    /// reported as inexact.
    fn log2_ceil(&self) -> (Magnitude, bool) {
        match self {
            Magnitude::Pow2(e) => ((**e).clone(), true),
            Magnitude::Exact(v) => {
                if v.is_zero() || v.is_one() {
                    return (Magnitude::zero(), v.is_one());
                }
                let exact = v.count_ones() == 1;
                let ceil = if exact { v.bits() - 1 } else { v.bits() };
                (Magnitude::from_u64(ceil), exact)
            }
        }
    }
}

impl BigBound {
    pub fn exact_u64(v: u64) -> BigBound {
        BigBound { mag: Magnitude::from_u64(v), polarity: Polarity::Exact }
    }

    pub fn exact_big(v: BigUint) -> BigBound {
        BigBound { mag: Magnitude::Exact(v), polarity: Polarity::Exact }
    }

    pub fn upper(mag: Magnitude) -> BigBound {
        BigBound { mag, polarity: Polarity::Upper }
    }

    pub fn is_exact(&self) -> bool {
        self.polarity == Polarity::Exact
    }

    pub fn as_u64(&self) -> Option<u64> {
        self.mag.as_u64()
    }

    pub fn cmp_value(&self, other: &BigBound) -> Ordering {
        self.mag.cmp_mag(&other.mag)
    }

    pub fn add(&self, other: &BigBound) -> BigBound {
        let polarity = self.polarity.join(other.polarity);
        match (self.mag.as_exact(), other.mag.as_exact()) {
            (Some(a), Some(b)) => BigBound { mag: Magnitude::Exact(a + b), polarity },
            _ => {
                if self.mag.is_zero() {
                    return BigBound { mag: other.mag.clone(), polarity };
                }
                if other.mag.is_zero() {
                    return BigBound { mag: self.mag.clone(), polarity };
                }
                // a + b <= 2 * max(a,b) = 2^(ceil log2 max + 1)
                let max = if self.mag.cmp_mag(&other.mag) == Ordering::Less {
                    &other.mag
                } else {
                    &self.mag
                };
                let (l, _) = max.log2_ceil();
                let e = BigBound { mag: l, polarity: Polarity::Exact }
                    .add(&BigBound::exact_u64(1));
                BigBound {
                    mag: Magnitude::Pow2(Box::new(e.mag)),
                    polarity: polarity.weaken_upper(),
                }
            }
        }
    }

    pub fn add_u64(&self, v: u64) -> BigBound {
        self.add(&BigBound::exact_u64(v))
    }

    pub fn mul(&self, other: &BigBound) -> BigBound {
        let polarity = self.polarity.join(other.polarity);
        if self.mag.is_zero() || other.mag.is_zero() {
            // An upper bound of 0 pins a nonnegative value to exactly 0, so
            // the product is exactly 0; only a lower-bound 0 stays inexact.
            let pinned = (self.mag.is_zero() && self.polarity != Polarity::Lower)
                || (other.mag.is_zero() && other.polarity != Polarity::Lower);
            return BigBound {
                mag: Magnitude::zero(),
                polarity: if pinned { Polarity::Exact } else { polarity },
            };
        }
        if let (Some(a), Some(b)) = (self.mag.as_exact(), other.mag.as_exact()) {
            if a.bits() + b.bits() <= EXACT_BIT_CAP {
                return BigBound { mag: Magnitude::Exact(a * b), polarity };
            }
        }
        let (la, ea) = self.mag.log2_ceil();
        let (lb, eb) = other.mag.log2_ceil();
        let e = BigBound { mag: la, polarity: Polarity::Exact }
            .add(&BigBound { mag: lb, polarity: Polarity::Exact });
        let exact_log = ea && eb && e.is_exact();
        BigBound {
            mag: Magnitude::Pow2(Box::new(e.mag)),
            polarity: if exact_log { polarity } else { polarity.weaken_upper() },
        }
    }

    /// 2^self (exact as a representation: `Pow2` is not a rounding). Small
    /// results are materialized as plain integers.
    pub fn pow2(&self) -> BigBound {
        if let Some(e) = self.as_u64() {
            if e <= 4096 {
                return BigBound {
                    mag: Magnitude::Exact(BigUint::one() << e),
                    polarity: self.polarity,
                };
            }
        }
        BigBound {
            mag: Magnitude::Pow2(Box::new(self.mag.clone())),
            polarity: self.polarity,
        }
    }

    /// self^exp via logs; falls back to exact big-integer power when cheap.
    pub fn pow(&self, exp: &BigBound) -> BigBound {
        let polarity = self.polarity.join(exp.polarity);
        if let (Some(base), Some(e)) = (self.mag.as_exact(), exp.as_u64()) {
            if base.bits().saturating_mul(e) <= EXACT_BIT_CAP {
                return BigBound {
                    mag: Magnitude::Exact(base.pow(e as u32)),
                    polarity,
                };
            }
        }
        let (l, exact_log) = self.mag.log2_ceil();
        let e = exp.mul(&BigBound { mag: l, polarity: Polarity::Exact });
        let exact = exact_log && e.is_exact();
        BigBound {
            mag: Magnitude::Pow2(Box::new(e.mag)),
            polarity: if exact { polarity } else { polarity.weaken_upper() },
        }
    }

    /// Ceiling of log2, exact when the value is a represented power of two.
    pub fn log2_ceil(&self) -> BigBound {
        let (mag, exact) = self.mag.log2_ceil();
        BigBound {
            mag,
            polarity: if exact {
                self.polarity
            } else {
                self.polarity.weaken_upper()
            },
        }
    }

    /// A certified lower bound of self - 1 (used when descending a tower).
    fn dec_lower(&self) -> BigBound {
        match &self.mag {
            Magnitude::Exact(v) => BigBound {
                mag: Magnitude::Exact(if v.is_zero() { v.clone() } else { v - 1u32 }),
                polarity: self.polarity,
            },
            // 2^e - 1 >= 2^(e-1) for e >= 1
            Magnitude::Pow2(e) => {
                let inner = BigBound { mag: (**e).clone(), polarity: self.polarity }.dec_lower();
                BigBound {
                    mag: Magnitude::Pow2(Box::new(inner.mag)),
                    polarity: inner.polarity.weaken_lower(),
                }
            }
        }
    }

    /// A certified lower bound of self / 2.
    pub fn half_lower(&self) -> BigBound {
        match &self.mag {
            Magnitude::Exact(v) => {
                let exact = (v % 2u32).is_zero();
                BigBound {
                    mag: Magnitude::Exact(v >> 1),
                    polarity: if exact {
                        self.polarity
                    } else {
                        self.polarity.weaken_lower()
                    },
                }
            }
            Magnitude::Pow2(e) => {
                let inner = BigBound { mag: (**e).clone(), polarity: self.polarity }.dec_lower();
                BigBound {
                    mag: Magnitude::Pow2(Box::new(inner.mag)),
                    polarity: inner.polarity,
                }
            }
        }
    }

    pub fn render(&self) -> String {
        render_mag(&self.mag)
    }
}

fn render_mag(mag: &Magnitude) -> String {
    match mag {
        Magnitude::Exact(v) if v.bits() <= 256 => v.to_string(),
        Magnitude::Exact(v) => format!("~2^{}", v.bits() - 1),
        Magnitude::Pow2(e) => format!("2^({})", render_mag(e)),
    }
}

impl Serialize for BigBound {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BigBound", 3)?;
        s.serialize_field("exact", &self.is_exact())?;
        match &self.mag {
            Magnitude::Exact(v) if v.bits() <= 256 => {
                s.serialize_field("value", &v.to_string())?;
            }
            _ => {
                let (l, _) = self.mag.log2_ceil();
                s.serialize_field("log2", &render_mag(&l))?;
            }
        }
        let polarity = match self.polarity {
            Polarity::Exact => "exact",
            Polarity::Upper => "upper bound",
            Polarity::Lower => "lower bound",
        };
        s.serialize_field("polarity", &polarity)?;
        s.end()
    }
}
