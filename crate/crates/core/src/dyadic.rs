use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Exact rational `num / 2^log2_den`, always kept in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dyadic {
    num: i64,
    log2_den: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, log2_den: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, log2_den: 0 };

    pub fn new(num: i64, log2_den: u32) -> Self {
        let mut d = Dyadic { num, log2_den };
        d.normalize();
        d
    }

    pub fn from_int(v: i64) -> Self {
        Dyadic { num: v, log2_den: 0 }
    }

    fn normalize(&mut self) {
        if self.num == 0 {
            self.log2_den = 0;
            return;
        }
        let tz = self.num.trailing_zeros().min(self.log2_den);
        self.num >>= tz;
        self.log2_den -= tz;
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn log2_denominator(&self) -> u32 {
        self.log2_den
    }

    pub fn denominator(&self) -> i64 {
        1i64 << self.log2_den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / (self.log2_den as f64).exp2()
    }

    /// Numerator over `2^log2_den`, e.g. `6/16`; `None` if the value needs a finer denominator.
    pub fn over(&self, log2_den: u32) -> Option<String> {
        if log2_den < self.log2_den {
            return None;
        }
        let num = self.num.checked_shl(log2_den - self.log2_den)?;
        Some(format!("{}/{}", num, 1i64 << log2_den))
    }

    fn aligned(self, other: Dyadic) -> (i128, i128, u32) {
        let l = self.log2_den.max(other.log2_den);
        (
            (self.num as i128) << (l - self.log2_den),
            (other.num as i128) << (l - other.log2_den),
            l,
        )
    }

    fn from_wide(num: i128, log2_den: u32) -> Dyadic {
        let mut num = num;
        let mut l = log2_den;
        while l > 0 && num % 2 == 0 && num != 0 {
            num /= 2;
            l -= 1;
        }
        Dyadic::new(i64::try_from(num).expect("dyadic numerator overflow"), if num == 0 { 0 } else { l })
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(*other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        let (a, b, l) = self.aligned(rhs);
        Dyadic::from_wide(a + b, l)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic {
            num: -self.num,
            log2_den: self.log2_den,
        }
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: Dyadic) -> Dyadic {
        Dyadic::from_wide(self.num as i128 * rhs.num as i128, self.log2_den + rhs.log2_den)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log2_den == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.denominator())
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p`, `p/q` with `q` a power of two (not necessarily reduced).
impl FromStr for Dyadic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::FractionParse(s.to_string());
        let (num, den) = match s.trim().split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let num: i64 = num.parse().map_err(|_| bad())?;
        let den: u64 = den.parse().map_err(|_| bad())?;
        if den == 0 || !den.is_power_of_two() {
            return Err(bad());
        }
        Ok(Dyadic::new(num, den.trailing_zeros()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lowest_terms() {
        let d = Dyadic::new(6, 4);
        assert_eq!((d.numerator(), d.log2_denominator()), (3, 3));
        assert_eq!(d, "6/16".parse().unwrap());
        assert_eq!(d.to_string(), "3/8");
        assert_eq!(d.over(4).as_deref(), Some("6/16"));
        assert_eq!(d.over(2), None);
        assert_eq!(Dyadic::new(0, 9), Dyadic::ZERO);
        assert_eq!(Dyadic::new(64, 6), Dyadic::ONE);
    }

    #[test]
    fn ordering_and_arithmetic() {
        let a: Dyadic = "15/16".parse().unwrap();
        let b: Dyadic = "29/32".parse().unwrap();
        assert!(b < a && a < Dyadic::ONE);
        assert_eq!(a - b, Dyadic::new(1, 5));
        assert_eq!(Dyadic::new(3, 2) * Dyadic::new(3, 2), Dyadic::new(9, 4));
        assert_eq!(Dyadic::ONE - Dyadic::new(1, 6), "63/64".parse().unwrap());
        assert!("1/3".parse::<Dyadic>().is_err());
        assert!("x".parse::<Dyadic>().is_err());
    }

    proptest! {
        #[test]
        fn order_matches_f64(a in -1000i64..1000, la in 0u32..12, b in -1000i64..1000, lb in 0u32..12) {
            let x = Dyadic::new(a, la);
            let y = Dyadic::new(b, lb);
            prop_assert_eq!(x.cmp(&y), x.to_f64().partial_cmp(&y.to_f64()).unwrap());
            prop_assert_eq!((x + y).to_f64(), x.to_f64() + y.to_f64());
            prop_assert_eq!(x.to_string().parse::<Dyadic>().unwrap(), x);
        }
    }
}
