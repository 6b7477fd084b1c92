//! Memoized evaluators for the four family recursions: the `(r,s)` and
//! `s`-only recursions in both the `q`-only and `(q,t)` forms.
//!
//! The recursions by themselves do not pin down the parameter corners, so
//! the evaluators adopt the two bases the recursion bodies cannot reach:
//! an `a = 0` family holds exactly one object (all big cars on the main
//! diagonal) with area 0 and dinv 0, and an `s = b` family with `a >= 1`
//! forces every car onto the diagonal, where the whole statistic is primary
//! dinv. Out-of-range `(r, s)` yield the zero polynomial, matching the
//! vanishing q-binomials inside the sums.

use std::sync::OnceLock;

use dashmap::DashMap;

use crate::qalg::{QPoly, QTPoly, choose2, qbinom};

/// Memo-table key: which family, which statistic flavor, which parameters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RecursionKey {
    pub a: u32,
    pub b: u32,
    pub family: Family,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    /// Both diagonal counts fixed.
    Rs { r: u32, s: u32 },
    /// Only the big-car diagonal count fixed.
    S { s: u32 },
}

fn key_rs(a: usize, b: usize, r: usize, s: usize) -> RecursionKey {
    RecursionKey {
        a: a as u32,
        b: b as u32,
        family: Family::Rs { r: r as u32, s: s as u32 },
    }
}

fn key_s(a: usize, b: usize, s: usize) -> RecursionKey {
    RecursionKey { a: a as u32, b: b as u32, family: Family::S { s: s as u32 } }
}

// Two process-wide tables, one per value type. Reads are concurrent;
// a racing recomputation is pure and lands on the same value.
fn memo_q() -> &'static DashMap<RecursionKey, QPoly> {
    static MEMO: OnceLock<DashMap<RecursionKey, QPoly>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

fn memo_qt() -> &'static DashMap<RecursionKey, QTPoly> {
    static MEMO: OnceLock<DashMap<RecursionKey, QTPoly>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

fn nonneg_exponent(e: i64) -> usize {
    debug_assert!(e >= 0, "recursion prefactor exponent went negative: {e}");
    e as usize
}

/// `(r,s)`-family polynomial in `q^(coarea+dinv)` form, evaluated by the
/// recursion
///
/// `q^((s+r)(a+b) - binom(s+r+1,2) - 1) [s+r, s] sum_h [r+h-1, h] P(a-r, b-s-1; h-1)`
///
/// where `P` is the `s`-only family expanded as a sum over its small-car
/// diagonal counts.
pub fn recur_parkq_rs(a: usize, b: usize, r: usize, s: usize) -> QPoly {
    if r > a || s > b {
        return QPoly::zero();
    }
    if s == b {
        return if a == r { qbinom(a + b, a).shift(choose2(a + b)) } else { QPoly::zero() };
    }
    if r == 0 {
        // Every summand carries [h-1 choose h] = 0.
        return QPoly::zero();
    }
    let key = key_rs(a, b, r, s);
    if let Some(hit) = memo_q().get(&key) {
        return hit.clone();
    }
    let mut sum = QPoly::zero();
    for h in 1..=b - s {
        let mut inner = QPoly::zero();
        for k in 0..=a - r {
            inner.add_assign(&recur_parkq_rs(a - r, b - s - 1, k, h - 1));
        }
        sum.add_assign(&(&qbinom(r + h - 1, h) * &inner));
    }
    let exponent = nonneg_exponent(
        ((s + r) * (a + b)) as i64 - choose2(s + r + 1) as i64 - 1,
    );
    let value = (&qbinom(s + r, s) * &sum).shift(exponent);
    memo_q().insert(key, value.clone());
    value
}

/// `s`-only family polynomial in `q^(coarea+dinv)` form:
///
/// `q^(binom(a+b,2) - (b-s) - binom(a+b-s-1,2)) sum_r [s+r, r] Q(b-s, a-1; r-1)`
///
/// for `a >= 1`, with base `q^(binom(b,2)) chi(b=s)` at `a = 0`.
pub fn recur_parkq_s(a: usize, b: usize, s: usize) -> QPoly {
    if s > b {
        return QPoly::zero();
    }
    if a == 0 {
        return if b == s {
            QPoly::monomial(1.into(), choose2(b))
        } else {
            QPoly::zero()
        };
    }
    let key = key_s(a, b, s);
    if let Some(hit) = memo_q().get(&key) {
        return hit.clone();
    }
    let mut sum = QPoly::zero();
    for r in 1..=a {
        sum.add_assign(&(&qbinom(s + r, r) * &recur_parkq_s(b - s, a - 1, r - 1)));
    }
    let exponent = nonneg_exponent(
        choose2(a + b) as i64 - (b - s) as i64 - choose2(a + b - s - 1) as i64,
    );
    let value = sum.shift(exponent);
    memo_q().insert(key, value.clone());
    value
}

fn qpoly_as_qt(p: &QPoly) -> QTPoly {
    let mut out = QTPoly::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        out.add_term(c, i as u32, 0);
    }
    out
}

/// `(r,s)`-family polynomial in `t^area q^dinv` form:
///
/// `t^(a+b-r-s) [s+r, s] sum_h [r+h-1, h] sum_k P(a-r, b-s-1; k, h-1)`.
///
/// At `s = b` the family is the all-diagonal one and the value is
/// `chi(a=r) [a+b choose a]_q`, with no `t` at all.
pub fn recur_parkqt_rs(a: usize, b: usize, r: usize, s: usize) -> QTPoly {
    if r > a || s > b {
        return QTPoly::zero();
    }
    if s == b {
        return if a == r { qpoly_as_qt(&qbinom(a + b, a)) } else { QTPoly::zero() };
    }
    if r == 0 {
        return QTPoly::zero();
    }
    let key = key_rs(a, b, r, s);
    if let Some(hit) = memo_qt().get(&key) {
        return hit.clone();
    }
    let mut sum = QTPoly::zero();
    for h in 1..=b - s {
        let mut inner = QTPoly::zero();
        for k in 0..=a - r {
            inner = inner.add(&recur_parkqt_rs(a - r, b - s - 1, k, h - 1));
        }
        sum = sum.add(&qpoly_as_qt(&qbinom(r + h - 1, h)).mul(&inner));
    }
    let value = qpoly_as_qt(&qbinom(s + r, s))
        .mul(&sum)
        .shift(0, (a + b - r - s) as u32);
    memo_qt().insert(key, value.clone());
    value
}

/// `s`-only family polynomial in `t^area q^dinv` form:
///
/// `t^(b-s) sum_r [s+r, r] P(b-s, a-1; r-1)` for `a >= 1`, with base
/// `chi(b=s)` at `a = 0`.
pub fn recur_parkqt_s(a: usize, b: usize, s: usize) -> QTPoly {
    if s > b {
        return QTPoly::zero();
    }
    if a == 0 {
        return if b == s { QTPoly::one() } else { QTPoly::zero() };
    }
    let key = key_s(a, b, s);
    if let Some(hit) = memo_qt().get(&key) {
        return hit.clone();
    }
    let mut sum = QTPoly::zero();
    for r in 1..=a {
        sum = sum.add(&qpoly_as_qt(&qbinom(s + r, r)).mul(&recur_parkqt_s(b - s, a - 1, r - 1)));
    }
    let value = sum.shift(0, (b - s) as u32);
    memo_qt().insert(key, value.clone());
    value
}
