//! Exhaustive generators for parking functions and 1-2 tableaux, with the
//! polynomial aggregations built on them, plus the rectangular lattice-path
//! oracle.
//!
//! Two-car families are enumerated at tableau level: the (1,2)-only column
//! rule characterizes them exactly, which shrinks the search space from
//! `(n+1)^(n-1)` labeled objects to Catalan scale. Generators yield in
//! lexicographic order; the polynomial reductions are associative and
//! commutative over exact integers, so sharding the offset vectors across
//! threads cannot change the result.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::parkfun::{CarSize, ParkingFunction, ShuffleSpec, TwoCarTableau, is_shuffle};
use crate::qalg::{QLaurent, QPoly, QTPoly, QalgError, choose2};

/// All diagonal-offset vectors of length `n` (`u[0] = 0`, steps rise by at
/// most one), in lexicographic order. There are Catalan(n) of them.
pub fn dyck_offsets(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let hi = cur.last().map_or(0, |&u| u + 1);
        for next in 0..=hi {
            cur.push(next);
            rec(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// Valid label vectors for a fixed offset vector, in lexicographic order.
fn labelings(u: &[usize]) -> Vec<Vec<usize>> {
    fn rec(u: &[usize], used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = cur.len();
        if i == u.len() {
            out.push(cur.clone());
            return;
        }
        let floor = if i > 0 && u[i] == u[i - 1] + 1 { cur[i - 1] } else { 0 };
        for label in floor + 1..=u.len() {
            if used[label] {
                continue;
            }
            used[label] = true;
            cur.push(label);
            rec(u, used, cur, out);
            cur.pop();
            used[label] = false;
        }
    }
    let mut out = Vec::new();
    rec(u, &mut vec![false; u.len() + 1], &mut Vec::new(), &mut out);
    out
}

/// Valid size words for a fixed offset vector with `a` small and `b` big
/// cars, in lexicographic order (1 before 2).
fn size_words(u: &[usize], a: usize, b: usize) -> Vec<Vec<CarSize>> {
    fn rec(
        u: &[usize],
        small_left: usize,
        big_left: usize,
        cur: &mut Vec<CarSize>,
        out: &mut Vec<Vec<CarSize>>,
    ) {
        let i = cur.len();
        if i == u.len() {
            out.push(cur.clone());
            return;
        }
        let column_rise = i > 0 && u[i] == u[i - 1] + 1;
        if column_rise && cur[i - 1] != CarSize::Small {
            return;
        }
        if small_left > 0 && !column_rise {
            cur.push(CarSize::Small);
            rec(u, small_left - 1, big_left, cur, out);
            cur.pop();
        }
        if big_left > 0 {
            cur.push(CarSize::Big);
            rec(u, small_left, big_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(u, a, b, &mut Vec::new(), &mut out);
    out
}

/// Every parking function of size `n` exactly once, in lexicographic order
/// of `(u, v)`. The count is `(n+1)^(n-1)` for `n >= 1`.
pub fn parking_functions(n: usize) -> impl Iterator<Item = ParkingFunction> {
    dyck_offsets(n).into_iter().flat_map(|u| {
        parking_functions_for_offsets(&u).collect::<Vec<_>>()
    })
}

/// The parking functions supported on one fixed offset vector, in
/// lexicographic label order. This is the sharding unit for parallel
/// aggregation.
pub fn parking_functions_for_offsets(u: &[usize]) -> impl Iterator<Item = ParkingFunction> + '_ {
    labelings(u).into_iter().map(move |v| {
        ParkingFunction::new(u.to_vec(), v)
            .expect("generator emits only valid parking functions")
    })
}

fn diag_matches(t: &TwoCarTableau, r: Option<usize>, s: Option<usize>) -> bool {
    let (tr, ts) = t.diag_counts();
    r.is_none_or(|r| r == tr) && s.is_none_or(|s| s == ts)
}

/// Every valid tableau with `a` small and `b` big cars, optionally filtered
/// by the diagonal counts, in lexicographic order of `(u, sizes)`.
pub fn tableaux(
    a: usize,
    b: usize,
    r: Option<usize>,
    s: Option<usize>,
) -> impl Iterator<Item = TwoCarTableau> {
    dyck_offsets(a + b).into_iter().flat_map(move |u| {
        size_words(&u, a, b)
            .into_iter()
            .map(|sizes| {
                TwoCarTableau::from_rows_unchecked(
                    u.iter().copied().zip(sizes).collect(),
                )
            })
            .filter(|t| diag_matches(t, r, s))
            .collect::<Vec<_>>()
    })
}

/// Generic deterministic reduction: map each offset vector to a partial
/// polynomial and sum. Addition of exact polynomials is associative and
/// commutative, so the rayon split points cannot affect the output.
fn sum_over_offsets<P, F>(n: usize, zero: P, add: fn(&P, &P) -> P, per_u: F) -> P
where
    P: Send + Sync + Clone,
    F: Fn(&[usize]) -> P + Send + Sync,
{
    dyck_offsets(n)
        .par_iter()
        .map(|u| per_u(u))
        .reduce(|| zero.clone(), |x, y| add(&x, &y))
}

/// `sum q^(coarea + dinv)` over the two-car family, optionally restricted
/// to `r` small and `s` big diagonal cars.
pub fn parkq_poly(a: usize, b: usize, r: Option<usize>, s: Option<usize>) -> QPoly {
    let n = a + b;
    sum_over_offsets(n, QPoly::zero(), |x, y| x + y, move |u| {
        let mut acc = QPoly::zero();
        for sizes in size_words(u, a, b) {
            let t = TwoCarTableau::from_rows_unchecked(u.iter().copied().zip(sizes).collect());
            if diag_matches(&t, r, s) {
                acc.add_term(&BigInt::one(), t.coarea() + t.dinv().total());
            }
        }
        acc
    })
}

/// `sum t^area q^dinv` over the same family.
pub fn parkqt_poly(a: usize, b: usize, r: Option<usize>, s: Option<usize>) -> QTPoly {
    let n = a + b;
    sum_over_offsets(n, QTPoly::zero(), |x, y| x.add(y), move |u| {
        let mut acc = QTPoly::zero();
        for sizes in size_words(u, a, b) {
            let t = TwoCarTableau::from_rows_unchecked(u.iter().copied().zip(sizes).collect());
            if diag_matches(&t, r, s) {
                acc.add_term(&BigInt::one(), t.dinv().total() as u32, t.area() as u32);
            }
        }
        acc
    })
}

/// `sum q^(coarea + dinv)` over all parking functions of size `spec.n()`
/// whose diagonal word shuffles the spec's segments.
pub fn shuffle_poly(spec: &ShuffleSpec) -> QPoly {
    let n = spec.n();
    sum_over_offsets(n, QPoly::zero(), |x, y| x + y, move |u| {
        let mut acc = QPoly::zero();
        for v in labelings(u) {
            let pf = ParkingFunction::new(u.to_vec(), v)
                .expect("generator emits only valid parking functions");
            if is_shuffle(&pf.diagonal_word(), spec).expect("word length matches spec") {
                acc.add_term(&BigInt::one(), pf.coarea() + pf.dinv().total());
            }
        }
        acc
    })
}

/// Area generating polynomial over north-east paths in the `n x k`
/// rectangle, weighting each path by the cells above it. Equals
/// `qbinom(n+k, k)`.
///
/// With `m` given, the same total is assembled by splitting every path at
/// its `m`-th east step: a path whose `m`-th east step sits at height `j`
/// contributes `m(k-j)` plus the areas of its two sub-paths. Both routes
/// stay on the enumeration side, independent of the Pascal recurrence.
pub fn rect_path_poly(n: usize, k: usize, m: Option<usize>) -> Result<QPoly, QalgError> {
    match m {
        None => Ok(rect_direct(n, k)),
        Some(m) => {
            if m < 1 || m > n {
                return Err(QalgError::Domain(format!(
                    "split position must satisfy 1 <= m <= n, got m={m}, n={n}"
                )));
            }
            let mut sum = QPoly::zero();
            for j in 0..=k {
                let parts = &rect_direct(m - 1, j) * &rect_direct(n - m, k - j);
                sum.add_assign(&parts.shift(m * (k - j)));
            }
            Ok(sum)
        }
    }
}

fn rect_direct(n: usize, k: usize) -> QPoly {
    fn rec(n: usize, k: usize, east_used: usize, height: usize, area: usize, out: &mut QPoly) {
        if east_used == n {
            out.add_term(&BigInt::one(), area);
            return;
        }
        // East step at the current height leaves k - height cells above it.
        rec(n, k, east_used + 1, height, area + (k - height), out);
        if height < k {
            rec(n, k, east_used, height + 1, area, out);
        }
    }
    let mut out = QPoly::zero();
    rec(n, k, 0, 0, 0, &mut out);
    out
}

/// The `t = 1/q` bridge: `q^(binom(n,2)) * p(q, 1/q)` reinterpreted as an
/// ordinary polynomial. Fails with `NegativeExponent` when `p` is not the
/// `(q,t)` polynomial of an `n`-car family.
pub fn parkq_from_parkqt(p: &QTPoly, n: usize) -> Result<QPoly, QalgError> {
    let l: QLaurent = p.subst_t_inv_q();
    l.shift(choose2(n) as i64).into_poly()
}
