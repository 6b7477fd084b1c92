//! The four computation routes for a family polynomial, behind one
//! dispatch. The CLI and the C ABI both select through here, and the
//! cross-check mode compares every route applicable to a parameter shape.

use crate::closedforms;
use crate::enumerator::{self, parkq_from_parkqt};
use crate::qalg::{QPoly, QTPoly, QalgError};
use crate::recursions;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    /// Exhaustive tableau enumeration.
    Enumerate,
    /// Closed-form q-binomial product.
    Formula,
    /// Memoized recursion in the q-only form.
    Recursion,
    /// Memoized `(q,t)` recursion pushed through the `t = 1/q` bridge.
    QtBridge,
}

impl Route {
    pub const ALL: [Route; 4] = [Route::Enumerate, Route::Formula, Route::Recursion, Route::QtBridge];

    pub fn name(self) -> &'static str {
        match self {
            Route::Enumerate => "enumerate",
            Route::Formula => "formula",
            Route::Recursion => "recursion",
            Route::QtBridge => "qt-bridge",
        }
    }

    /// The formula route cannot serve the r-only families: the sum over
    /// `s` is provably not a ratio of q-analogs.
    pub fn supports(self, r: Option<usize>, s: Option<usize>) -> bool {
        self != Route::Formula || !(r.is_some() && s.is_none())
    }
}

/// Computes the `q^(coarea+dinv)` polynomial of the family selected by the
/// optional diagonal counts, by the requested route.
pub fn parkq_by_route(
    a: usize,
    b: usize,
    r: Option<usize>,
    s: Option<usize>,
    route: Route,
) -> Result<QPoly, QalgError> {
    if let Some(r) = r {
        if r > a {
            return Err(QalgError::Domain(format!("r={r} exceeds a={a}")));
        }
    }
    if let Some(s) = s {
        if s > b {
            return Err(QalgError::Domain(format!("s={s} exceeds b={b}")));
        }
    }
    match route {
        Route::Enumerate => Ok(enumerator::parkq_poly(a, b, r, s)),
        Route::Formula => match (r, s) {
            (Some(r), Some(s)) => closedforms::parkq_rs(a, b, r, s),
            (None, Some(s)) => closedforms::parkq_s(a, b, s),
            (None, None) => closedforms::parkq_all(a, b),
            (Some(_), None) => Err(QalgError::Domain(
                "the sum over s has no closed form; use enumerate, recursion, or qt-bridge".into(),
            )),
        },
        Route::Recursion => {
            let mut sum = QPoly::zero();
            for si in s.map_or(0..=b, |s| s..=s) {
                match r {
                    Some(r) => sum.add_assign(&recursions::recur_parkq_rs(a, b, r, si)),
                    None => sum.add_assign(&recursions::recur_parkq_s(a, b, si)),
                }
            }
            Ok(sum)
        }
        Route::QtBridge => {
            let mut qt = QTPoly::zero();
            for si in s.map_or(0..=b, |s| s..=s) {
                match r {
                    Some(r) => qt = qt.add(&recursions::recur_parkqt_rs(a, b, r, si)),
                    None => qt = qt.add(&recursions::recur_parkqt_s(a, b, si)),
                }
            }
            parkq_from_parkqt(&qt, a + b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn routes_agree_on_every_parameter_shape() {
        for a in 0..=3usize {
            for b in 0..=3usize {
                let shapes: Vec<(Option<usize>, Option<usize>)> = {
                    let mut v = vec![(None, None)];
                    v.extend((0..=a).map(|r| (Some(r), None)));
                    v.extend((0..=b).map(|s| (None, Some(s))));
                    v.extend((0..=a).flat_map(|r| (0..=b).map(move |s| (Some(r), Some(s)))));
                    v
                };
                for (r, s) in shapes {
                    let baseline = parkq_by_route(a, b, r, s, Route::Enumerate).unwrap();
                    for route in Route::ALL {
                        if !route.supports(r, s) {
                            assert!(parkq_by_route(a, b, r, s, route).is_err());
                            continue;
                        }
                        assert_eq!(
                            parkq_by_route(a, b, r, s, route).unwrap(),
                            baseline,
                            "a={a} b={b} r={r:?} s={s:?} route={}",
                            route.name()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn out_of_range_parameters_error() {
        assert!(parkq_by_route(1, 1, Some(2), None, Route::Enumerate).is_err());
        assert!(parkq_by_route(1, 1, None, Some(2), Route::Recursion).is_err());
    }
}
