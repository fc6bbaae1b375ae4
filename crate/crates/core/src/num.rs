//! Small exact-arithmetic helpers shared by the other modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_int(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

pub fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rational(x: &BigRational) -> String {
    x.to_string()
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn is_integer(x: &BigRational) -> bool {
    x.denom().is_one()
}

/// Converts a BigInt to i64 if it fits.
pub fn to_i64(x: &BigInt) -> Option<i64> {
    i64::try_from(x).ok()
}

pub fn abs_i64(x: i64) -> u64 {
    x.unsigned_abs()
}

pub(crate) fn is_nonneg(x: &BigRational) -> bool {
    !x.is_negative()
}

/// Serde adapters that write rationals as `p/q` strings.
pub mod serde_rational {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let raw = RationalRepr::deserialize(d)?;
        raw.into_rational().map_err(serde::de::Error::custom)
    }

    /// Accepts `"p/q"` strings and plain JSON integers.
    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum RationalRepr {
        Int(i64),
        Str(String),
    }

    impl RationalRepr {
        pub(crate) fn into_rational(self) -> Result<BigRational> {
            match self {
                RationalRepr::Int(n) => Ok(rat(n)),
                RationalRepr::Str(s) => parse_rational(&s),
            }
        }
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(xs: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(xs.len()))?;
            for x in xs {
                seq.serialize_element(&format_rational(x))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigRational>, D::Error> {
            let raw = Vec::<RationalRepr>::deserialize(d)?;
            raw.into_iter().map(|r| r.into_rational().map_err(serde::de::Error::custom)).collect()
        }
    }
}

/// Serde adapter for big integers: JSON integer when it fits in i64, decimal string otherwise.
pub mod serde_bigint {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        match to_i64(x) {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&x.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(n) => Ok(BigInt::from(n)),
            Repr::Str(s) => s.trim().parse().map_err(|_| serde::de::Error::custom(format!("not an integer: `{s}`"))),
        }
    }
}
