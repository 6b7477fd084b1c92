//! Exact polynomial arithmetic in `q`, Laurent-in-`q`, and `(q,t)`:
//! q-analogs, Gaussian binomials, exact division, and the `t = 1/q`
//! substitution bridge. All coefficients are arbitrary-precision integers;
//! the counts handled here grow super-exponentially and silent overflow
//! would defeat the point of a verification tool.

mod qlaurent;
mod qpoly;
mod qtpoly;

pub use qlaurent::QLaurent;
pub use qpoly::QPoly;
pub use qtpoly::QTPoly;

use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QalgError {
    /// Exact division left a nonzero remainder. The ratios assembled by the
    /// closed forms are provably polynomial, so this signals a misapplied
    /// formula or an implementation bug.
    #[error("exact division left a nonzero remainder")]
    NonDivisible,
    /// A Laurent polynomial with negative exponents was asked to become an
    /// ordinary polynomial.
    #[error("negative exponent {offset} cannot be represented in a polynomial")]
    NegativeExponent { offset: i64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

pub(crate) fn json_bigint(v: &serde_json::Value) -> Result<BigInt, QalgError> {
    match v {
        serde_json::Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|e| QalgError::Json(format!("bad integer {s:?}: {e}"))),
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| QalgError::Json(format!("non-integer coefficient {n}"))),
        other => Err(QalgError::Json(format!("coefficient must be a string or integer, got {other}"))),
    }
}

/// The q-analog `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q` is zero.
pub fn qint(n: usize) -> QPoly {
    QPoly::from_coeffs(vec![BigInt::one(); n])
}

fn qbinom_cache() -> &'static DashMap<(usize, usize), QPoly> {
    static CACHE: OnceLock<DashMap<(usize, usize), QPoly>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

/// Gaussian binomial `[n choose k]_q`, zero when `k > n`.
///
/// Computed by the Pascal recurrence
/// `[n k] = [n-1 k-1] + q^k [n-1 k]` with a process-wide memo table, keeping
/// the whole artifact division-free on this path.
pub fn qbinom(n: usize, k: usize) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    if k == 0 || k == n {
        return QPoly::one();
    }
    if let Some(hit) = qbinom_cache().get(&(n, k)) {
        return hit.clone();
    }
    let value = &qbinom(n - 1, k - 1) + &qbinom(n - 1, k).shift(k);
    qbinom_cache().insert((n, k), value.clone());
    value
}

/// The split form of `[n+k choose n]_q`: summing over the height `j` at
/// which the `m`-th east step of a lattice path crosses,
///
/// `sum_{j=0}^{k} q^(m(k-j)) [m+j-1 choose m-1]_q [n-m+k-j choose n-m]_q`.
///
/// Contract: equals `qbinom(n+k, n)` for every `1 <= m <= n`.
pub fn qbinom_split_sum(n: usize, k: usize, m: usize) -> Result<QPoly, QalgError> {
    if n < 1 || m < 1 || m > n {
        return Err(QalgError::Domain(format!(
            "qbinom_split_sum requires 1 <= m <= n, got n={n}, m={m}"
        )));
    }
    let mut sum = QPoly::zero();
    for j in 0..=k {
        let term = &qbinom(m + j - 1, m - 1) * &qbinom(n - m + k - j, n - m);
        sum.add_assign(&term.shift(m * (k - j)));
    }
    Ok(sum)
}

/// `binomial(n, 2)` as a machine integer; the ubiquitous staircase exponent.
pub fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent oracle for the Gaussian binomial: enumerate all words
    /// with `a` ones and `b` twos and sum `q^inv(w)` where `inv` counts
    /// (2 before 1) pairs.
    fn inversion_gf(a: usize, b: usize) -> QPoly {
        fn rec(ones: usize, twos: usize, word: &mut Vec<u8>, out: &mut QPoly) {
            if ones == 0 && twos == 0 {
                let mut inv = 0usize;
                for i in 0..word.len() {
                    for j in i + 1..word.len() {
                        if word[i] > word[j] {
                            inv += 1;
                        }
                    }
                }
                out.add_term(&BigInt::one(), inv);
                return;
            }
            if ones > 0 {
                word.push(1);
                rec(ones - 1, twos, word, out);
                word.pop();
            }
            if twos > 0 {
                word.push(2);
                rec(ones, twos - 1, word, out);
                word.pop();
            }
        }
        let mut out = QPoly::zero();
        rec(a, b, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn qint_values() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(1), QPoly::one());
        assert_eq!(qint(3), QPoly::from_i64_coeffs(&[1, 1, 1]));
    }

    #[test]
    fn qbinom_small_values() {
        assert_eq!(qbinom(2, 1), QPoly::from_i64_coeffs(&[1, 1]));
        assert_eq!(qbinom(3, 0), QPoly::one());
        // Frozen from the word-enumeration oracle over the 6 words in W(1^2 2^2).
        assert_eq!(qbinom(4, 2), QPoly::from_i64_coeffs(&[1, 1, 2, 1, 1]));
        assert_eq!(qbinom(4, 2), inversion_gf(2, 2));
        assert!(qbinom(2, 3).is_zero());
    }

    #[test]
    fn qbinom_matches_word_oracle() {
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(qbinom(n, k), inversion_gf(n - k, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn qbinom_pascal_and_symmetry() {
        for n in 1..=12usize {
            for k in 0..=n {
                let pascal = if k == 0 {
                    QPoly::one()
                } else {
                    &qbinom(n - 1, k - 1) + &qbinom(n - 1, k).shift(k)
                };
                assert_eq!(qbinom(n, k), pascal, "pascal n={n} k={k}");
                assert_eq!(qbinom(n, k), qbinom(n, n - k), "symmetry n={n} k={k}");
                assert_eq!(
                    qbinom(n, k).eval_one(),
                    num_integer::binomial(BigInt::from(n), BigInt::from(k)),
                    "q=1 n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn shift_and_ring_ops() {
        let p = QPoly::from_i64_coeffs(&[1, 1]);
        assert_eq!(p.shift(2), QPoly::from_i64_coeffs(&[0, 0, 1, 1]));
        assert_eq!(&p * &p, QPoly::from_i64_coeffs(&[1, 2, 1]));
        assert_eq!(&QPoly::zero() + &p, p);
    }

    #[test]
    fn exact_div_cases() {
        let p = qint(3);
        assert_eq!(p.exact_div(&QPoly::one()).unwrap(), p);
        let prod = &qbinom(4, 2) * &qint(2);
        assert_eq!(prod.exact_div(&qint(2)).unwrap(), qbinom(4, 2));
        assert_eq!(qint(2).exact_div(&qint(3)), Err(QalgError::NonDivisible));
    }

    #[test]
    fn split_sum_examples() {
        assert_eq!(qbinom_split_sum(1, 0, 1).unwrap(), QPoly::one());
        // j=0 term q^1*[0 0][2 1] = q(1+q), j=1 term [1 0][1 1] = 1.
        assert_eq!(qbinom_split_sum(2, 1, 1).unwrap(), QPoly::from_i64_coeffs(&[1, 1, 1]));
        assert_eq!(qbinom_split_sum(2, 1, 1).unwrap(), qbinom(3, 2));
        assert_eq!(qbinom_split_sum(3, 2, 2).unwrap(), qbinom(5, 3));
        assert!(qbinom_split_sum(3, 2, 4).is_err());
        assert!(qbinom_split_sum(3, 2, 0).is_err());
    }

    #[test]
    fn split_sum_grid() {
        for n in 1..=10usize {
            for m in 1..=n {
                for k in 0..=10usize {
                    assert_eq!(
                        qbinom_split_sum(n, k, m).unwrap(),
                        qbinom(n + k, n),
                        "n={n} k={k} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn laurent_roundtrip_and_errors() {
        let l = QLaurent::from_parts(0, vec![BigInt::one(), BigInt::one()]);
        assert_eq!(l.into_poly().unwrap(), QPoly::from_i64_coeffs(&[1, 1]));
        let l = QLaurent::from_parts(2, vec![BigInt::from(3)]);
        assert_eq!(l.into_poly().unwrap(), QPoly::from_i64_coeffs(&[0, 0, 3]));
        let l = QLaurent::from_parts(-1, vec![BigInt::one()]);
        assert_eq!(l.into_poly(), Err(QalgError::NegativeExponent { offset: -1 }));
        assert_eq!(QLaurent::zero().into_poly().unwrap(), QPoly::zero());
    }

    #[test]
    fn subst_examples() {
        // q*t -> 1
        let p = QTPoly::monomial(BigInt::one(), 1, 1);
        assert_eq!(p.subst_t_inv_q(), QLaurent::monomial(BigInt::one(), 0));
        // t^2 -> q^-2
        let p = QTPoly::monomial(BigInt::one(), 0, 2);
        assert_eq!(p.subst_t_inv_q(), QLaurent::monomial(BigInt::one(), -2));
        assert!(QTPoly::zero().subst_t_inv_q().is_zero());
    }

    #[test]
    fn json_formats() {
        let p = QPoly::from_i64_coeffs(&[0, 0, 1, 1]);
        assert_eq!(
            serde_json::to_string(&p.to_json()).unwrap(),
            r#"{"coeffs":["0","0","1","1"],"var":"q"}"#
        );
        assert_eq!(QPoly::from_json(&p.to_json()).unwrap(), p);

        let l = QLaurent::from_parts(-1, vec![BigInt::one()]);
        assert_eq!(l.to_json()["offset"], serde_json::json!(-1));

        let mut qt = QTPoly::zero();
        qt.add_term(&BigInt::from(2), 1, 0);
        qt.add_term(&BigInt::one(), 0, 3);
        assert_eq!(
            serde_json::to_string(&qt.to_json()).unwrap(),
            r#"{"terms":[[0,3,"1"],[1,0,"2"]],"vars":["q","t"]}"#
        );
        assert_eq!(QTPoly::from_json(&qt.to_json()).unwrap(), qt);
    }

    fn arb_qpoly() -> impl Strategy<Value = QPoly> {
        proptest::collection::vec(-6i64..=6, 0..6).prop_map(|v| QPoly::from_i64_coeffs(&v))
    }

    fn arb_qtpoly() -> impl Strategy<Value = QTPoly> {
        proptest::collection::vec(((0u32..5, 0u32..5), -4i64..=4), 0..6).prop_map(|terms| {
            let mut p = QTPoly::zero();
            for ((i, j), c) in terms {
                p.add_term(&BigInt::from(c), i, j);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn exact_div_roundtrip(p in arb_qpoly(), d in arb_qpoly()) {
            prop_assume!(!d.is_zero());
            let prod = &p * &d;
            prop_assert_eq!(prod.exact_div(&d).unwrap(), p);
        }

        #[test]
        fn mul_commutes_and_distributes(a in arb_qpoly(), b in arb_qpoly(), c in arb_qpoly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        }

        #[test]
        fn subst_is_ring_hom(a in arb_qtpoly(), b in arb_qtpoly()) {
            prop_assert_eq!(a.add(&b).subst_t_inv_q(), a.subst_t_inv_q().add(&b.subst_t_inv_q()));
            prop_assert_eq!(a.mul(&b).subst_t_inv_q(), a.subst_t_inv_q().mul(&b.subst_t_inv_q()));
        }

        #[test]
        fn poly_json_roundtrip(p in arb_qpoly()) {
            prop_assert_eq!(QPoly::from_json(&p.to_json()).unwrap(), p);
        }
    }
}
