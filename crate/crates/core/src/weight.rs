use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::network::PathVector;

/// Tie-breaking weights on the steps, meaningful up to positive scaling and
/// adding multiples of `(1, …, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<BigRational>);

impl WeightVector {
    pub fn new(w: Vec<BigRational>) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::InvalidWeight("empty weight vector".into()));
        }
        Ok(WeightVector(w))
    }

    /// False for multiples of `(1, …, 1)`, which tie every pair of routings
    /// of equal length.
    pub fn separates(&self) -> bool {
        self.0.iter().any(|x| *x != self.0[0])
    }

    pub fn from_integers(w: &[i64]) -> Result<Self> {
        Self::new(w.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn components(&self) -> &[BigRational] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// Integer weights inducing the same order: `self` times the lcm of the
    /// denominators.
    pub fn scaled_integers(&self) -> Vec<BigInt> {
        let l = self.0.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        self.0.iter().map(|x| x.numer() * (&l / x.denom())).collect()
    }

    pub fn dot(&self, a: &[i64]) -> BigRational {
        self.0
            .iter()
            .zip(a)
            .map(|(w, &x)| w * BigRational::from_integer(x.into()))
            .fold(BigRational::zero(), |s, t| s + t)
    }

    /// `λ w + μ (1, …, 1)`.
    pub fn affine(&self, lambda: &BigRational, mu: &BigRational) -> Result<Self> {
        if !lambda.is_positive() {
            return Err(Error::InvalidWeight("scale must be positive".into()));
        }
        Self::new(self.0.iter().map(|x| lambda * x + mu).collect())
    }
}

pub(crate) fn int_dot(w: &[BigInt], a: &PathVector) -> BigInt {
    w.iter()
        .zip(a.coords())
        .filter(|(_, &x)| x != 0)
        .map(|(w, &x)| w * x)
        .fold(BigInt::zero(), |s, t| s + t)
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Parses `w1,w2,…` where each entry is an integer or `p/q`.
impl FromStr for WeightVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_one = |t: &str| -> Result<BigRational> {
            let t = t.trim();
            let bad = || Error::Parse(format!("bad rational {t:?}"));
            match t.split_once('/') {
                Some((p, q)) => {
                    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                    if q.is_zero() {
                        return Err(bad());
                    }
                    Ok(BigRational::new(p, q))
                }
                None => Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?)),
            }
        };
        WeightVector::new(s.split(',').map(parse_one).collect::<Result<_>>()?)
    }
}
