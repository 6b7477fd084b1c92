//! The cross-verification suites: every identity the artifact claims,
//! runnable at a caller-chosen size bound. Suites report the number of
//! checks performed and stop at the first counterexample, which carries
//! machine-readable detail plus a command line that reproduces it.
//!
//! Suites walk their parameter grids in a fixed order and reduce exact
//! polynomials, so reports are deterministic regardless of how many worker
//! threads the enumeration layer uses.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde_json::{Value, json};

use crate::bijections;
use crate::closedforms;
use crate::enumerator::{self, parkq_from_parkqt, rect_path_poly, tableaux};
use crate::parkfun::{BinaryWord, CarSize, ShuffleSpec, TwoCarTableau};
use crate::qalg::{QPoly, QTPoly, choose2, qbinom, qbinom_split_sum};
use crate::recursions;

/// The named verification suites exposed by `qpark verify --suite`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    /// Closed form for the `(r,s)` families against exhaustive enumeration,
    /// including the `r = 0` vanishing law.
    Qara,
    /// Closed form for the `s`-only families: enumeration plus the symbolic
    /// row sum of the `(r,s)` closed form.
    Isthm,
    /// Whole-family closed form: enumeration, the symbolic sum over `s`,
    /// and the two-part composition formula.
    Wolf,
    /// Composition formula against the labeled enumeration over every
    /// composition of every `n` up to the bound.
    Conj2,
    /// All four recursions against closed forms and enumeration, plus the
    /// `t = 1/q` bridge.
    Recursions,
    /// Statistic-respecting bijectivity of the two constructive maps.
    Bijections,
    /// The split-sum q-binomial identity and the lattice-path oracle.
    Qbin,
    /// Principal specialization of the elementary symmetric polynomials.
    Principal,
    /// Whole-family closed form at `q = 1` against Narayana numbers.
    Narayana,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Qara,
        Suite::Isthm,
        Suite::Wolf,
        Suite::Conj2,
        Suite::Recursions,
        Suite::Bijections,
        Suite::Qbin,
        Suite::Principal,
        Suite::Narayana,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Qara => "qara",
            Suite::Isthm => "isthm",
            Suite::Wolf => "wolf",
            Suite::Conj2 => "conj2",
            Suite::Recursions => "recursions",
            Suite::Bijections => "bijections",
            Suite::Qbin => "qbin",
            Suite::Principal => "principal",
            Suite::Narayana => "narayana",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// First counterexample found by a suite.
#[derive(Clone, Debug)]
pub struct Failure {
    pub suite: Suite,
    pub detail: Value,
    pub repro: String,
}

impl Failure {
    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "detail": self.detail,
            "repro": self.repro,
        })
    }
}

/// Outcome of one suite run.
#[derive(Clone, Debug)]
pub struct Report {
    pub suite: Suite,
    pub max_n: usize,
    pub checks: usize,
    pub failure: Option<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

type Checked = Result<usize, Box<Failure>>;

struct Audit {
    suite: Suite,
    checks: usize,
}

impl Audit {
    fn new(suite: Suite) -> Self {
        Audit { suite, checks: 0 }
    }

    fn eq_q(&mut self, lhs: &QPoly, rhs: &QPoly, what: Value, repro: String) -> Result<(), Box<Failure>> {
        self.checks += 1;
        if lhs == rhs {
            return Ok(());
        }
        let mut detail = what;
        detail["lhs"] = lhs.to_json();
        detail["rhs"] = rhs.to_json();
        Err(Box::new(Failure { suite: self.suite, detail, repro }))
    }

    fn eq_qt(&mut self, lhs: &QTPoly, rhs: &QTPoly, what: Value, repro: String) -> Result<(), Box<Failure>> {
        self.checks += 1;
        if lhs == rhs {
            return Ok(());
        }
        let mut detail = what;
        detail["lhs"] = lhs.to_json();
        detail["rhs"] = rhs.to_json();
        Err(Box::new(Failure { suite: self.suite, detail, repro }))
    }

    fn ensure(&mut self, ok: bool, what: Value, repro: String) -> Result<(), Box<Failure>> {
        self.checks += 1;
        if ok {
            return Ok(());
        }
        Err(Box::new(Failure { suite: self.suite, detail: what, repro }))
    }
}

/// Runs one suite with all of its grids bounded by `max_n`.
pub fn run_suite(suite: Suite, max_n: usize) -> Report {
    let outcome = match suite {
        Suite::Qara => suite_qara(max_n),
        Suite::Isthm => suite_isthm(max_n),
        Suite::Wolf => suite_wolf(max_n),
        Suite::Conj2 => suite_conj2(max_n),
        Suite::Recursions => suite_recursions(max_n),
        Suite::Bijections => suite_bijections(max_n),
        Suite::Qbin => suite_qbin(max_n),
        Suite::Principal => suite_principal(max_n),
        Suite::Narayana => suite_narayana(max_n),
    };
    match outcome {
        Ok(checks) => Report { suite, max_n, checks, failure: None },
        Err(failure) => Report { suite, max_n, checks: 0, failure: Some(*failure) },
    }
}

fn poly_repro(a: usize, b: usize, r: Option<usize>, s: Option<usize>) -> String {
    let mut cmd = format!("qpark poly --a {a} --b {b}");
    if let Some(r) = r {
        cmd.push_str(&format!(" --r {r}"));
    }
    if let Some(s) = s {
        cmd.push_str(&format!(" --s {s}"));
    }
    cmd.push_str(" --check-all");
    cmd
}

/// One enumeration pass over the `(a,b)` family, keyed by diagonal counts.
fn parkq_by_diag(a: usize, b: usize) -> Vec<Vec<QPoly>> {
    let mut cells = vec![vec![QPoly::zero(); b + 1]; a + 1];
    for t in tableaux(a, b, None, None) {
        let (r, s) = t.diag_counts();
        cells[r][s].add_term(&BigInt::one(), t.coarea() + t.dinv().total());
    }
    cells
}

fn parkqt_by_diag(a: usize, b: usize) -> Vec<Vec<QTPoly>> {
    let mut cells = vec![vec![QTPoly::zero(); b + 1]; a + 1];
    for t in tableaux(a, b, None, None) {
        let (r, s) = t.diag_counts();
        cells[r][s].add_term(&BigInt::one(), t.dinv().total() as u32, t.area() as u32);
    }
    cells
}

fn suite_qara(max_n: usize) -> Checked {
    let mut audit = Audit::new(Suite::Qara);
    for n in 0..=max_n {
        for a in 0..=n {
            let b = n - a;
            let cells = parkq_by_diag(a, b);
            for (r, row) in cells.iter().enumerate() {
                for (s, cell) in row.iter().enumerate() {
                    let formula = closedforms::parkq_rs(a, b, r, s)
                        .expect("parameters are in range");
                    audit.eq_q(
                        &formula,
                        cell,
                        json!({"a": a, "b": b, "r": r, "s": s}),
                        poly_repro(a, b, Some(r), Some(s)),
                    )?;
                    if r == 0 && s < b && a >= 1 {
                        audit.ensure(
                            cell.is_zero() && formula.is_zero(),
                            json!({"a": a, "b": b, "r": r, "s": s, "law": "vanishing"}),
                            poly_repro(a, b, Some(r), Some(s)),
                        )?;
                    }
                }
            }
        }
    }
    Ok(audit.checks)
}

fn suite_isthm(max_n: usize) -> Checked {
    let mut audit = Audit::new(Suite::Isthm);
    // Enumeration side on the a+b grid.
    for n in 0..=max_n {
        for a in 0..=n {
            let b = n - a;
            let cells = parkq_by_diag(a, b);
            for s in 0..=b {
                let mut family = QPoly::zero();
                for row in &cells {
                    family.add_assign(&row[s]);
                }
                audit.eq_q(
                    &closedforms::parkq_s(a, b, s).expect("parameters are in range"),
                    &family,
                    json!({"a": a, "b": b, "s": s, "against": "enumeration"}),
                    poly_repro(a, b, None, Some(s)),
                )?;
            }
        }
    }
    // Symbolic row sum on the full square grid.
    for a in 0..=max_n {
        for b in 0..=max_n {
            for s in 0..=b {
                let mut sum = QPoly::zero();
                for r in 0..=a {
                    sum.add_assign(&closedforms::parkq_rs(a, b, r, s).expect("in range"));
                }
                audit.eq_q(
                    &sum,
                    &closedforms::parkq_s(a, b, s).expect("in range"),
                    json!({"a": a, "b": b, "s": s, "against": "sum over r"}),
                    poly_repro(a, b, None, Some(s)),
                )?;
            }
        }
    }
    Ok(audit.checks)
}

fn suite_wolf(max_n: usize) -> Checked {
    let mut audit = Audit::new(Suite::Wolf);
    for n in 0..=max_n {
        for a in 0..=n {
            let b = n - a;
            audit.eq_q(
                &closedforms::parkq_all(a, b).expect("never out of range"),
                &enumerator::parkq_poly(a, b, None, None),
                json!({"a": a, "b": b, "against": "enumeration"}),
                poly_repro(a, b, None, None),
            )?;
        }
    }
    for a in 0..=max_n {
        for b in 0..=max_n {
            let whole = closedforms::parkq_all(a, b).expect("never out of range");
            let mut sum = QPoly::zero();
            for s in 0..=b {
                sum.add_assign(&closedforms::parkq_s(a, b, s).expect("in range"));
            }
            audit.eq_q(
                &sum,
                &whole,
                json!({"a": a, "b": b, "against": "sum over s"}),
                poly_repro(a, b, None, None),
            )?;
            let parts: Vec<usize> = [a, b].into_iter().filter(|&p| p > 0).collect();
            let spec = ShuffleSpec::new(parts).expect("positive parts");
            audit.eq_q(
                &closedforms::shuffle_closed_form(&spec).expect("never fails"),
                &whole,
                json!({"a": a, "b": b, "against": "composition formula"}),
                poly_repro(a, b, None, None),
            )?;
        }
    }
    Ok(audit.checks)
}

/// For a diagonal word, the set of descents among consecutive labels:
/// bit `x-1` is set when `x+1` is read before `x`. A composition's shuffle
/// condition holds exactly when its breakpoints cover this set.
fn required_breaks(word: &[usize]) -> u64 {
    let n = word.len();
    let mut position = vec![0usize; n + 2];
    for (i, &x) in word.iter().enumerate() {
        position[x] = i;
    }
    let mut mask = 0u64;
    for x in 1..n {
        if position[x + 1] < position[x] {
            mask |= 1 << (x - 1);
        }
    }
    mask
}

fn breaks_of(spec: &ShuffleSpec) -> u64 {
    let mut mask = 0u64;
    let mut acc = 0usize;
    for &part in &spec.parts()[..spec.parts().len().saturating_sub(1)] {
        acc += part;
        mask |= 1 << (acc - 1);
    }
    mask
}

fn suite_conj2(max_n: usize) -> Checked {
    let mut audit = Audit::new(Suite::Conj2);
    for n in 0..=max_n {
        // One pass over all parking functions of size n: bucket the weights
        // by the minimal breakpoint set their diagonal word demands.
        let buckets: Vec<QPoly> = enumerator::dyck_offsets(n)
            .par_iter()
            .map(|u| {
                let mut local = vec![QPoly::zero(); 1 << n.saturating_sub(1)];
                for pf in enumerator::parking_functions_for_offsets(u) {
                    let word = pf.diagonal_word();
                    let weight = pf.coarea() + pf.dinv().total();
                    local[required_breaks(&word) as usize].add_term(&BigInt::one(), weight);
                }
                local
            })
            .reduce(
                || vec![QPoly::zero(); 1 << n.saturating_sub(1)],
                |mut acc, local| {
                    for (dst, src) in acc.iter_mut().zip(&local) {
                        dst.add_assign(src);
                    }
                    acc
                },
            );
        for spec in ShuffleSpec::all(n) {
            let cover = breaks_of(&spec);
            let mut enumerated = QPoly::zero();
            for (mask, poly) in buckets.iter().enumerate() {
                if mask as u64 & !cover == 0 {
                    enumerated.add_assign(poly);
                }
            }
            audit.eq_q(
                &closedforms::shuffle_closed_form(&spec).expect("never fails"),
                &enumerated,
                json!({"n": n, "mu": spec.parts(), "against": "labeled enumeration"}),
                format!("qpark verify --suite conj2 --max-n {n}"),
            )?;
            // Triangulate the single-composition enumerator against the
            // bucketed pass while that stays cheap.
            if n <= 5 {
                audit.eq_q(
                    &enumerator::shuffle_poly(&spec),
                    &enumerated,
                    json!({"n": n, "mu": spec.parts(), "against": "per-composition enumeration"}),
                    format!("qpark verify --suite conj2 --max-n {n}"),
                )?;
            }
        }
    }
    Ok(audit.checks)
}

fn suite_recursions(max_n: usize) -> Checked {
    let mut audit = Audit::new(Suite::Recursions);
    let repro = |a: usize, b: usize| format!("qpark verify --suite recursions --max-n {}", a.max(b));
    // Symbolic equivalence with the closed forms on the square grid.
    for a in 0..=max_n {
        for b in 0..=max_n {
            for s in 0..=b {
                audit.eq_q(
                    &recursions::recur_parkq_s(a, b, s),
                    &closedforms::parkq_s(a, b, s).expect("in range"),
                    json!({"a": a, "b": b, "s": s, "recursion": "s"}),
                    repro(a, b),
                )?;
                for r in 0..=a {
                    audit.eq_q(
                        &recursions::recur_parkq_rs(a, b, r, s),
                        &closedforms::parkq_rs(a, b, r, s).expect("in range"),
                        json!({"a": a, "b": b, "r": r, "s": s, "recursion": "rs"}),
                        repro(a, b),
                    )?;
                }
            }
        }
    }
    // (q,t) recursions against exhaustive enumeration on the a+b grid,
    // the decomposition over r, and the t = 1/q bridge.
    for n in 0..=max_n {
        for a in 0..=n {
            let b = n - a;
            let cells = parkqt_by_diag(a, b);
            for s in 0..=b {
                let mut family = QTPoly::zero();
                let mut sum_rs = QTPoly::zero();
                for (r, row) in cells.iter().enumerate() {
                    family = family.add(&row[s]);
                    let qt = recursions::recur_parkqt_rs(a, b, r, s);
                    audit.eq_qt(
                        &qt,
                        &row[s],
                        json!({"a": a, "b": b, "r": r, "s": s, "recursion": "qt-rs"}),
                        repro(a, b),
                    )?;
                    audit.eq_q(
                        &parkq_from_parkqt(&qt, n).expect("bridge stays polynomial"),
                        &recursions::recur_parkq_rs(a, b, r, s),
                        json!({"a": a, "b": b, "r": r, "s": s, "identity": "bridge"}),
                        repro(a, b),
                    )?;
                    sum_rs = sum_rs.add(&qt);
                }
                let qt_s = recursions::recur_parkqt_s(a, b, s);
                audit.eq_qt(
                    &qt_s,
                    &family,
                    json!({"a": a, "b": b, "s": s, "recursion": "qt-s"}),
                    repro(a, b),
                )?;
                audit.eq_qt(
                    &qt_s,
                    &sum_rs,
                    json!({"a": a, "b": b, "s": s, "identity": "sum over r"}),
                    repro(a, b),
                )?;
            }
        }
    }
    Ok(audit.checks)
}

fn tableau_key(t: &TwoCarTableau) -> String {
    t.to_string()
}

fn suite_bijections(max_n: usize) -> Checked {
    let mut audit = Audit::new(Suite::Bijections);
    for n in 0..=max_n {
        for a in 0..=n {
            let b = n - a;
            audit_rs_map(&mut audit, a, b)?;
            audit_s_map(&mut audit, a, b)?;
        }
    }
    Ok(audit.checks)
}

fn audit_rs_map(audit: &mut Audit, a: usize, b: usize) -> Result<(), Box<Failure>> {
    let repro = format!("qpark verify --suite bijections --max-n {}", a + b);
    for r in 1..=a {
        for s in 0..b {
            let mut images: BTreeSet<String> = BTreeSet::new();
            let mut transported: Vec<QPoly> = vec![QPoly::zero(); b - s + 1];
            let mut triples = 0usize;
            for t in tableaux(a - r, b - s - 1, None, None) {
                let h = t.diag_counts().1 + 1;
                for w in BinaryWord::all(r, h) {
                    if w.0.first() != Some(&CarSize::Small) {
                        continue;
                    }
                    for v in BinaryWord::all(r, s) {
                        triples += 1;
                        let image = bijections::compose_rs(&t, &w, &v)
                            .expect("triple satisfies the map preconditions");
                        let ok = image.small_count() == a
                            && image.big_count() == b
                            && image.diag_counts() == (r, s)
                            && image.area() == t.area() + (a + b - r - s)
                            && image.dinv().total() == t.dinv().total() + w.inv() + v.coinv();
                        audit.ensure(
                            ok,
                            json!({
                                "map": "rs", "a": a, "b": b, "r": r, "s": s,
                                "source": t.to_string(), "w": w.to_string(), "v": v.to_string(),
                                "image": image.to_string(),
                            }),
                            repro.clone(),
                        )?;
                        let roundtrip = bijections::decompose_rs(&image)
                            .expect("images decompose");
                        audit.ensure(
                            roundtrip == (t.clone(), w.clone(), v.clone()),
                            json!({
                                "map": "rs-roundtrip", "a": a, "b": b, "r": r, "s": s,
                                "image": image.to_string(),
                            }),
                            repro.clone(),
                        )?;
                        transported[h]
                            .add_term(&BigInt::one(), image.coarea() + image.dinv().total());
                        images.insert(tableau_key(&image));
                    }
                }
            }
            let family: BTreeSet<String> =
                tableaux(a, b, Some(r), Some(s)).map(|t| tableau_key(&t)).collect();
            audit.ensure(
                triples == family.len() && images == family,
                json!({
                    "map": "rs-bijectivity", "a": a, "b": b, "r": r, "s": s,
                    "triples": triples, "family": family.len(), "distinct_images": images.len(),
                }),
                repro.clone(),
            )?;
            // Weight transport, term by term in h.
            let exponent = (s + r) * (a + b) - choose2(s + r + 1) - 1;
            for (h, got) in transported.iter().enumerate().skip(1) {
                let inner = enumerator::parkq_poly(a - r, b - s - 1, None, Some(h - 1));
                let expected = (&(&qbinom(s + r, s) * &qbinom(r + h - 1, h)) * &inner)
                    .shift(exponent);
                audit.eq_q(
                    got,
                    &expected,
                    json!({"map": "rs-transport", "a": a, "b": b, "r": r, "s": s, "h": h}),
                    repro.clone(),
                )?;
            }
        }
    }
    // Decompose-then-compose over the whole family.
    for r in 1..=a {
        for s in 0..b {
            for t in tableaux(a, b, Some(r), Some(s)) {
                let (src, w, v) = bijections::decompose_rs(&t).expect("member decomposes");
                let back = bijections::compose_rs(&src, &w, &v).expect("roundtrip composes");
                audit.ensure(
                    back == t,
                    json!({"map": "rs-inverse", "a": a, "b": b, "member": t.to_string()}),
                    repro.clone(),
                )?;
            }
        }
    }
    Ok(())
}

fn audit_s_map(audit: &mut Audit, a: usize, b: usize) -> Result<(), Box<Failure>> {
    if a == 0 {
        return Ok(());
    }
    let repro = format!("qpark verify --suite bijections --max-n {}", a + b);
    for s in 0..=b {
        let mut images: BTreeSet<String> = BTreeSet::new();
        let mut pairs = 0usize;
        let mut transported = QPoly::zero();
        for r in 1..=a {
            for t in tableaux(b - s, a - 1, None, Some(r - 1)) {
                for w in BinaryWord::all(r, s) {
                    pairs += 1;
                    let image =
                        bijections::compose_s(&t, &w).expect("pair satisfies the preconditions");
                    let ok = image.small_count() == a
                        && image.big_count() == b
                        && image.diag_counts() == (r, s)
                        && image.area() == t.area() + (b - s)
                        && image.dinv().total() == t.dinv().total() + w.coinv();
                    audit.ensure(
                        ok,
                        json!({
                            "map": "s", "a": a, "b": b, "r": r, "s": s,
                            "source": t.to_string(), "w": w.to_string(),
                            "image": image.to_string(),
                        }),
                        repro.clone(),
                    )?;
                    let roundtrip = bijections::decompose_s(&image).expect("images decompose");
                    audit.ensure(
                        roundtrip == (t.clone(), w.clone()),
                        json!({
                            "map": "s-roundtrip", "a": a, "b": b, "r": r, "s": s,
                            "image": image.to_string(),
                        }),
                        repro.clone(),
                    )?;
                    transported.add_term(&BigInt::one(), image.coarea() + image.dinv().total());
                    images.insert(tableau_key(&image));
                }
            }
        }
        let family: BTreeSet<String> =
            tableaux(a, b, None, Some(s)).map(|t| tableau_key(&t)).collect();
        audit.ensure(
            pairs == family.len() && images == family,
            json!({
                "map": "s-bijectivity", "a": a, "b": b, "s": s,
                "pairs": pairs, "family": family.len(), "distinct_images": images.len(),
            }),
            repro.clone(),
        )?;
        audit.eq_q(
            &transported,
            &enumerator::parkq_poly(a, b, None, Some(s)),
            json!({"map": "s-transport", "a": a, "b": b, "s": s}),
            repro.clone(),
        )?;
        for t in tableaux(a, b, None, Some(s)) {
            let (src, w) = bijections::decompose_s(&t).expect("member decomposes");
            let back = bijections::compose_s(&src, &w).expect("roundtrip composes");
            audit.ensure(
                back == t,
                json!({"map": "s-inverse", "a": a, "b": b, "member": t.to_string()}),
                repro.clone(),
            )?;
        }
    }
    Ok(())
}

fn suite_qbin(max_n: usize) -> Checked {
    let mut audit = Audit::new(Suite::Qbin);
    for n in 1..=max_n {
        for m in 1..=n {
            for k in 0..=max_n {
                audit.eq_q(
                    &qbinom_split_sum(n, k, m).expect("parameters are in range"),
                    &qbinom(n + k, n),
                    json!({"n": n, "k": k, "m": m, "identity": "split sum"}),
                    format!("qpark verify --suite qbin --max-n {max_n}"),
                )?;
            }
        }
    }
    for n in 0..=max_n.min(8) {
        for k in 0..=max_n.min(8) {
            let direct = rect_path_poly(n, k, None).expect("no split point");
            audit.eq_q(
                &direct,
                &qbinom(n + k, k),
                json!({"n": n, "k": k, "identity": "lattice paths"}),
                format!("qpark verify --suite qbin --max-n {max_n}"),
            )?;
            for m in 1..=n {
                audit.eq_q(
                    &rect_path_poly(n, k, Some(m)).expect("m in range"),
                    &direct,
                    json!({"n": n, "k": k, "m": m, "identity": "lattice path split"}),
                    format!("qpark verify --suite qbin --max-n {max_n}"),
                )?;
            }
        }
    }
    Ok(audit.checks)
}

fn suite_principal(max_n: usize) -> Checked {
    let mut audit = Audit::new(Suite::Principal);
    for n in 0..=max_n {
        for a in 0..=n + 1 {
            audit.eq_q(
                &closedforms::principal_elementary(a, n).expect("a <= n+1"),
                &qbinom(n + 1, a).shift(choose2(a)),
                json!({"a": a, "n": n}),
                format!("qpark verify --suite principal --max-n {max_n}"),
            )?;
        }
    }
    Ok(audit.checks)
}

fn suite_narayana(max_n: usize) -> Checked {
    let mut audit = Audit::new(Suite::Narayana);
    for n in 0..=max_n {
        for a in 0..=n {
            let b = n - a;
            let at_one = closedforms::parkq_all(a, b).expect("never fails").eval_one();
            let expected = closedforms::narayana(a + b + 1, a + 1).expect("in range");
            audit.ensure(
                at_one == expected,
                json!({
                    "a": a, "b": b,
                    "value_at_1": at_one.to_string(),
                    "narayana": expected.to_string(),
                }),
                format!("qpark verify --suite narayana --max-n {max_n}"),
            )?;
        }
    }
    // The q = 1 row sums over a + b = n are the Catalan numbers.
    let mut catalan = BigInt::one();
    for n in 0..=max_n {
        if n > 0 {
            catalan = catalan * BigInt::from(2 * (2 * n - 1)) / BigInt::from(n + 1);
        }
        let row: BigInt = (0..=n)
            .map(|a| closedforms::parkq_all(a, n - a).expect("never fails").eval_one())
            .sum();
        // Catalan(n+1) counts the union of the two-car families of size n.
        let next = &catalan * BigInt::from(2 * (2 * n + 1)) / BigInt::from(n + 2);
        audit.ensure(
            row == next,
            json!({"n": n, "row_sum": row.to_string(), "catalan": next.to_string()}),
            format!("qpark verify --suite narayana --max-n {max_n}"),
        )?;
    }
    Ok(audit.checks)
}
