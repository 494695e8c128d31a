use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact rational edge weight.
///
/// The wrapped ratio is always kept in canonical form (positive denominator,
/// coprime numerator and denominator), so equality and ordering are exact
/// rational comparisons.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(BigRational);

impl Weight {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::parse("weight", "zero denominator"));
        }
        Ok(Weight(BigRational::new(numer.into(), denom)))
    }

    pub fn int(value: i64) -> Self {
        Weight(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn zero() -> Self {
        Weight(BigRational::zero())
    }

    pub fn from_ratio(r: BigRational) -> Self {
        // BigRational arithmetic keeps results reduced; `new` re-normalizes
        // anything built with `new_raw`.
        Weight(BigRational::new(r.numer().clone(), r.denom().clone()))
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Integer value when the weight is an integer that fits in an `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn abs(&self) -> Weight {
        Weight(self.0.abs())
    }

    /// Lossy conversion for display purposes only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Parses `"p"` or `"p/q"` with optional surrounding whitespace and sign.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::parse("weight", format!("not a rational number: {text:?}"));
        match text.split_once('/') {
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(Error::parse("weight", format!("zero denominator in {text:?}")));
                }
                Weight::new(p, q)
            }
            None => {
                let p = BigInt::from_str(text).map_err(|_| bad())?;
                Ok(Weight(BigRational::from_integer(p)))
            }
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight({self})")
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Weight::parse(s)
    }
}

impl From<i64> for Weight {
    fn from(v: i64) -> Self {
        Weight::int(v)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Weight> for &Weight {
            type Output = Weight;
            fn $method(self, rhs: &Weight) -> Weight {
                Weight($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Weight> for Weight {
            type Output = Weight;
            fn $method(self, rhs: Weight) -> Weight {
                Weight($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<i64> for &Weight {
            type Output = Weight;
            fn $method(self, rhs: i64) -> Weight {
                Weight($trait::$method(&self.0, BigRational::from_integer(BigInt::from(rhs))))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(-self.0)
    }
}

/// Dense ranks of a weight list: equal weights share a rank, and
/// `rank[i] < rank[j]` iff `weights[i] < weights[j]`.
pub fn dense_ranks(weights: &[Weight]) -> Vec<u32> {
    let mut idx: Vec<usize> = (0..weights.len()).collect();
    idx.sort_by(|&a, &b| weights[a].cmp(&weights[b]));
    let mut ranks = vec![0u32; weights.len()];
    let mut rank = 0u32;
    for (i, &e) in idx.iter().enumerate() {
        if i > 0 && weights[idx[i - 1]] != weights[e] {
            rank += 1;
        }
        ranks[e] = rank;
    }
    ranks
}
