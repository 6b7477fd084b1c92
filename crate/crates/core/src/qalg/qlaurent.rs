//! Laurent polynomials in `q`: a dense coefficient block plus the exponent
//! of its lowest term. Used as the intermediate form of the `t = 1/q`
//! substitution before the binomial-exponent prefactor is applied.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{QPoly, QalgError};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct QLaurent {
    /// Exponent of `coeffs[0]`; 0 for the zero polynomial.
    offset: i64,
    /// First and last entries nonzero unless the whole polynomial is zero.
    coeffs: Vec<BigInt>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent { offset: 0, coeffs: Vec::new() }
    }

    pub fn from_parts(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let mut l = QLaurent { offset, coeffs };
        l.canonicalize();
        l
    }

    /// `c * q^k` with `k` of either sign.
    pub fn monomial(c: BigInt, k: i64) -> Self {
        QLaurent::from_parts(k, vec![c])
    }

    fn canonicalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.offset += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiplies by `q^k` (`k` may be negative).
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return QLaurent::zero();
        }
        QLaurent { offset: self.offset + k, coeffs: self.coeffs.clone() }
    }

    pub fn add(&self, other: &QLaurent) -> QLaurent {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(other.offset);
        let hi = (self.offset + self.coeffs.len() as i64)
            .max(other.offset + other.coeffs.len() as i64);
        let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.offset - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.offset - lo) as usize + i] += c;
        }
        QLaurent::from_parts(lo, coeffs)
    }

    pub fn mul(&self, other: &QLaurent) -> QLaurent {
        if self.is_zero() || other.is_zero() {
            return QLaurent::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QLaurent::from_parts(self.offset + other.offset, coeffs)
    }

    /// Reinterprets as an ordinary polynomial. Fails with `NegativeExponent`
    /// when terms with negative exponents are present, which in the bridge
    /// computation means the prefactor was omitted or wrong.
    pub fn into_poly(&self) -> Result<QPoly, QalgError> {
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        if self.offset < 0 {
            return Err(QalgError::NegativeExponent { offset: self.offset });
        }
        let mut coeffs = vec![BigInt::zero(); self.offset as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        Ok(QPoly::from_coeffs(coeffs))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "var": "q",
            "offset": self.offset,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl From<&QPoly> for QLaurent {
    fn from(p: &QPoly) -> Self {
        QLaurent::from_parts(0, p.coeffs().to_vec())
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let e = self.offset + i as i64;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurent({self})")
    }
}
