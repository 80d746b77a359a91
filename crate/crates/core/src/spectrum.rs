//! Forcing and anti-forcing spectra: the set of values taken over all perfect
//! matchings, read off a counting polynomial.

use std::collections::BTreeMap;

use num_bigint::{BigUint, Sign};
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    /// Value → number of perfect matchings attaining it.
    pub histogram: BTreeMap<usize, BigUint>,
    pub min: usize,
    pub max: usize,
}

impl SpectrumReport {
    /// Builds the spectrum from a polynomial whose `x^k` coefficient counts
    /// the matchings with value `k`. Negative coefficients are rejected.
    pub fn from_poly(p: &IntPoly) -> Result<Self> {
        let mut histogram = BTreeMap::new();
        for (k, c) in p.coeffs().iter().enumerate() {
            match c.sign() {
                Sign::NoSign => {}
                Sign::Plus => {
                    histogram.insert(k, c.magnitude().clone());
                }
                Sign::Minus => {
                    return Err(Error::InternalConsistency(format!(
                        "negative coefficient at x^{k}"
                    )));
                }
            }
        }
        let (Some(&min), Some(&max)) = (histogram.keys().next(), histogram.keys().next_back())
        else {
            return Err(Error::EmptyPolynomial);
        };
        Ok(SpectrumReport {
            histogram,
            min,
            max,
        })
    }

    /// The spectrum as an ascending list of values.
    pub fn values(&self) -> Vec<usize> {
        self.histogram.keys().copied().collect()
    }

    /// True iff every integer in `[min, max]` is attained.
    pub fn is_contiguous(&self) -> bool {
        self.histogram.len() == self.max - self.min + 1
    }

    /// Number of perfect matchings covered.
    pub fn total(&self) -> BigUint {
        self.histogram
            .values()
            .fold(BigUint::zero(), |acc, c| acc + c)
    }
}

impl Serialize for SpectrumReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let hist: BTreeMap<String, String> = self
            .histogram
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        let mut s = serializer.serialize_struct("SpectrumReport", 5)?;
        s.serialize_field("min", &self.min)?;
        s.serialize_field("max", &self.max)?;
        s.serialize_field("contiguous", &self.is_contiguous())?;
        s.serialize_field("values", &self.values())?;
        s.serialize_field("histogram", &hist)?;
        s.end()
    }
}
