//! Closed-form evaluations of the family generating polynomials: products
//! of Gaussian binomials and powers of `q` divided by a single q-analog.
//!
//! Every ratio here is provably a polynomial, so each formula assembles its
//! full numerator first and performs one exact division at the end; the
//! division is never distributed across factors, which individually need
//! not be divisible. `NonDivisible` escaping from this module indicates a
//! bug, not a degenerate input.

use num_bigint::BigInt;
use num_integer::binomial;

use crate::parkfun::ShuffleSpec;
use crate::qalg::{QPoly, QalgError, choose2, qbinom, qint};

fn check_range(name: &str, value: usize, bound: usize) -> Result<(), QalgError> {
    if value > bound {
        return Err(QalgError::Domain(format!(
            "{name}={value} exceeds its bound {bound}"
        )));
    }
    Ok(())
}

/// Generating polynomial of the two-car family with `r` small and `s` big
/// diagonal cars, by the closed form
///
/// `q^(binom(a+b,2) - (a-r+1)(b-s)) [a+b-s-1, a] [a-r+b-s, a-r] [r+s, s] [r]/[a-r+b-s]`
///
/// for `s < b`, and `chi(a=r) q^(binom(a+b,2)) [a+b, a]` when `s = b`. The
/// `s = b` evaluation is a genuinely separate case, not a specialization.
pub fn parkq_rs(a: usize, b: usize, r: usize, s: usize) -> Result<QPoly, QalgError> {
    check_range("r", r, a)?;
    check_range("s", s, b)?;
    if s == b {
        return Ok(if a == r {
            qbinom(a + b, a).shift(choose2(a + b))
        } else {
            QPoly::zero()
        });
    }
    if r == 0 {
        // The [r]_q factor kills the whole product.
        return Ok(QPoly::zero());
    }
    let exponent = choose2(a + b) - (a - r + 1) * (b - s);
    let numerator = &(&(&qbinom(a + b - s - 1, a) * &qbinom(a - r + b - s, a - r))
        * &qbinom(r + s, s))
        * &qint(r);
    Ok(numerator.exact_div(&qint(a - r + b - s))?.shift(exponent))
}

/// Generating polynomial of the family with `s` big diagonal cars, summed
/// over the small-diagonal count:
///
/// `q^(binom(a+b,2) - (b-s)a) [a+b, a] [a+b-s-1, a-1] [s+1]/[b+1]`
///
/// for `a > 0`, and `q^(binom(b,2)) chi(b=s)` when `a = 0` (the lone
/// all-big family member has every car on the diagonal).
pub fn parkq_s(a: usize, b: usize, s: usize) -> Result<QPoly, QalgError> {
    check_range("s", s, b)?;
    if a == 0 {
        return Ok(if b == s { QPoly::monomial(BigInt::from(1), choose2(b)) } else { QPoly::zero() });
    }
    let exponent = choose2(a + b) - (b - s) * a;
    let numerator =
        &(&qbinom(a + b, a) * &qbinom(a + b - s - 1, a - 1)) * &qint(s + 1);
    Ok(numerator.exact_div(&qint(b + 1))?.shift(exponent))
}

/// Generating polynomial of the whole two-car family:
///
/// `q^(binom(a,2) + binom(b,2)) [a+b+1, a] [a+b+1, b] / [a+b+1]`.
pub fn parkq_all(a: usize, b: usize) -> Result<QPoly, QalgError> {
    let numerator = &qbinom(a + b + 1, a) * &qbinom(a + b + 1, b);
    Ok(numerator
        .exact_div(&qint(a + b + 1))?
        .shift(choose2(a) + choose2(b)))
}

/// The conjectured closed form for an arbitrary composition:
///
/// `prod_i q^(binom(mu_i,2)) [n+1, mu_i] / [n+1]`.
pub fn shuffle_closed_form(spec: &ShuffleSpec) -> Result<QPoly, QalgError> {
    let n = spec.n();
    let mut numerator = QPoly::one();
    for &part in spec.parts() {
        numerator = &numerator * &qbinom(n + 1, part).shift(choose2(part));
    }
    numerator.exact_div(&qint(n + 1))
}

/// The elementary symmetric polynomial `e_a` evaluated at
/// `1, q, q^2, ..., q^n`, by direct expansion: the sum of `q^(sum S)` over
/// all `a`-element subsets `S` of `{0..n}`. Contract: equals
/// `q^(binom(a,2)) [n+1 choose a]_q`.
pub fn principal_elementary(a: usize, n: usize) -> Result<QPoly, QalgError> {
    check_range("a", a, n + 1)?;
    // elem[k] accumulates e_k of the exponents seen so far.
    let mut elem = vec![QPoly::zero(); a + 1];
    elem[0] = QPoly::one();
    for exponent in 0..=n {
        for k in (1..=a).rev() {
            let with_exponent = elem[k - 1].shift(exponent);
            elem[k].add_assign(&with_exponent);
        }
    }
    Ok(elem.pop().expect("a+1 entries"))
}

/// `N(n, k) = binomial(n,k) * binomial(n,k-1) / n`, exactly.
pub fn narayana(n: usize, k: usize) -> Result<BigInt, QalgError> {
    if k < 1 || k > n {
        return Err(QalgError::Domain(format!(
            "narayana requires 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    let product = binomial(BigInt::from(n), BigInt::from(k))
        * binomial(BigInt::from(n), BigInt::from(k - 1));
    let (quotient, remainder) = num_integer::Integer::div_rem(&product, &BigInt::from(n));
    debug_assert!(num_traits::Zero::is_zero(&remainder));
    Ok(quotient)
}

/// Whether the whole-family closed form at `q = 1` (coefficient sum, never
/// a separate counting formula) matches the Narayana number
/// `N(a+b+1, a+1)`.
pub fn narayana_check(a: usize, b: usize) -> Result<bool, QalgError> {
    Ok(parkq_all(a, b)?.eval_one() == narayana(a + b + 1, a + 1)?)
}
