//! Sparse bivariate polynomials in `q` and `t` with nonnegative exponents.
//! The exponent grid is mostly empty for the families computed here, so
//! terms live in an ordered map keyed by `(q-degree, t-degree)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{QLaurent, QalgError};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct QTPoly {
    /// Nonzero coefficients only; sorted by `(i, j)` for deterministic output.
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        QTPoly::monomial(BigInt::from(1), 0, 0)
    }

    /// `c * q^i * t^j`.
    pub fn monomial(c: BigInt, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        QTPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn add_term(&mut self, c: &BigInt, i: u32, j: u32) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, other: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(c, i, j);
        }
        out
    }

    pub fn mul(&self, other: &QTPoly) -> QTPoly {
        let mut out = QTPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.add_term(&(c1 * c2), i1 + i2, j1 + j2);
            }
        }
        out
    }

    /// Multiplies by `q^i * t^j`.
    pub fn shift(&self, i: u32, j: u32) -> QTPoly {
        QTPoly {
            terms: self.terms.iter().map(|(&(a, b), c)| ((a + i, b + j), c.clone())).collect(),
        }
    }

    /// Substitutes `t = q^(-1)`: the term `c*q^i*t^j` becomes `c*q^(i-j)`.
    pub fn subst_t_inv_q(&self) -> QLaurent {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let e = i as i64 - j as i64;
            let entry = acc.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        acc.retain(|_, c| !c.is_zero());
        match acc.first_key_value() {
            None => QLaurent::zero(),
            Some((&lo, _)) => {
                let hi = *acc.last_key_value().expect("nonempty").0;
                let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
                for (e, c) in acc {
                    coeffs[(e - lo) as usize] = c;
                }
                QLaurent::from_parts(lo, coeffs)
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vars": ["q", "t"],
            "terms": self
                .terms
                .iter()
                .map(|(&(i, j), c)| serde_json::json!([i, j, c.to_string()]))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, QalgError> {
        let terms = v
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| QalgError::Json("missing terms array".into()))?;
        let mut out = QTPoly::zero();
        for t in terms {
            let triple = t.as_array().filter(|a| a.len() == 3);
            let triple = triple.ok_or_else(|| QalgError::Json("term is not a triple".into()))?;
            let i = triple[0].as_u64().ok_or_else(|| QalgError::Json("bad q-exponent".into()))?;
            let j = triple[1].as_u64().ok_or_else(|| QalgError::Json("bad t-exponent".into()))?;
            let c = super::json_bigint(&triple[2])?;
            out.add_term(&c, i as u32, j as u32);
        }
        Ok(out)
    }
}

impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if i > 0 {
                write!(f, "*q^{i}")?;
            }
            if j > 0 {
                write!(f, "*t^{j}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTPoly({self})")
    }
}
