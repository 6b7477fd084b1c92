//! Parking functions as two-line arrays, their statistics (area, dinv,
//! coarea, diagonal word), shuffle membership, and the reduction to 1-2
//! tableaux with its inverse relabeling.
//!
//! Rows are indexed from 1 bottom-up. `u[i]` counts the full cells east of
//! the path and strictly west of the main diagonal in row `i+1`, so a car
//! sits on the main diagonal exactly when its offset is 0. "Right to left
//! within a diagonal" is decreasing row index.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PfError {
    /// The offset vector is not a valid Dyck support: `u[0] != 0` or some
    /// step rises by more than one.
    #[error("BadSupport: {0}")]
    BadSupport(String),
    /// A column-increase step violates its order condition: labels must
    /// increase, and tableau sizes must read (1,2).
    #[error("BadColumn: {0}")]
    BadColumn(String),
    #[error("BadLabels: {0}")]
    BadLabels(String),
    #[error("LengthMismatch: {0}")]
    LengthMismatch(String),
    /// The diagonal word fails the small/big shuffle condition.
    #[error("NotInFamily: {0}")]
    NotInFamily(String),
    #[error("Parse: {0}")]
    Parse(String),
}

/// The two dinv components; a pair of cars counts once in exactly one of
/// them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dinv {
    /// Same-diagonal pairs with the smaller car on the left.
    pub primary: usize,
    /// Pairs with the left car one diagonal higher and larger.
    pub secondary: usize,
}

impl Dinv {
    pub fn total(&self) -> usize {
        self.primary + self.secondary
    }
}

fn check_support(u: &[usize]) -> Result<(), PfError> {
    if let Some(&first) = u.first() {
        if first != 0 {
            return Err(PfError::BadSupport(format!("u[1] must be 0, got {first}")));
        }
    }
    for i in 1..u.len() {
        if u[i] > u[i - 1] + 1 {
            return Err(PfError::BadSupport(format!(
                "u[{}]={} jumps by more than 1 from u[{}]={}",
                i + 1,
                u[i],
                i,
                u[i - 1]
            )));
        }
    }
    Ok(())
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>, PfError> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|e| PfError::Parse(format!("bad integer {:?}: {e}", s.trim())))
        })
        .collect()
}

/// A parking function in two-line-array form: diagonal offsets `u` and a
/// permutation `v` of `{1..n}` assigning a car to each row. The empty
/// parking function (`n = 0`) is valid and serves as a recursion base.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParkingFunction {
    u: Vec<usize>,
    v: Vec<usize>,
}

impl ParkingFunction {
    pub fn new(u: Vec<usize>, v: Vec<usize>) -> Result<Self, PfError> {
        if u.len() != v.len() {
            return Err(PfError::LengthMismatch(format!(
                "offsets have length {} but labels have length {}",
                u.len(),
                v.len()
            )));
        }
        check_support(&u)?;
        let n = v.len();
        let mut seen = vec![false; n + 1];
        for &label in &v {
            if label < 1 || label > n || seen[label] {
                return Err(PfError::BadLabels(format!(
                    "labels must be a permutation of 1..{n}"
                )));
            }
            seen[label] = true;
        }
        for i in 1..n {
            if u[i] == u[i - 1] + 1 && v[i] <= v[i - 1] {
                return Err(PfError::BadColumn(format!(
                    "rows {} and {} share a column but labels {} >= {} do not increase",
                    i,
                    i + 1,
                    v[i - 1],
                    v[i]
                )));
            }
        }
        Ok(ParkingFunction { u, v })
    }

    pub fn empty() -> Self {
        ParkingFunction { u: Vec::new(), v: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    pub fn offsets(&self) -> &[usize] {
        &self.u
    }

    pub fn labels(&self) -> &[usize] {
        &self.v
    }

    pub fn area(&self) -> usize {
        self.u.iter().sum()
    }

    pub fn coarea(&self) -> usize {
        crate::qalg::choose2(self.len()) - self.area()
    }

    pub fn dinv(&self) -> Dinv {
        let (u, v) = (&self.u, &self.v);
        let mut primary = 0;
        let mut secondary = 0;
        for i in 0..u.len() {
            for j in i + 1..u.len() {
                if u[i] == u[j] && v[i] < v[j] {
                    primary += 1;
                } else if u[i] == u[j] + 1 && v[i] > v[j] {
                    secondary += 1;
                }
            }
        }
        Dinv { primary, secondary }
    }

    /// Reads the car labels by decreasing diagonal, right to left within
    /// each diagonal.
    pub fn diagonal_word(&self) -> Vec<usize> {
        diagonal_read(&self.u).map(|i| self.v[i]).collect()
    }

    /// Reduces to a 1-2 tableau, writing each car `<= a` as small. Requires
    /// the diagonal word to be a shuffle of `1..a` and `a+1..n`.
    pub fn to_tableau(&self, a: usize) -> Result<TwoCarTableau, PfError> {
        let n = self.len();
        if a > n {
            return Err(PfError::NotInFamily(format!("a={a} exceeds n={n}")));
        }
        let word = self.diagonal_word();
        if !segment_increasing(&word, |x| x <= a) || !segment_increasing(&word, |x| x > a) {
            return Err(PfError::NotInFamily(format!(
                "diagonal word is not a shuffle of 1..{a} and {}..{n}",
                a + 1
            )));
        }
        let sizes = self
            .v
            .iter()
            .map(|&label| if label <= a { CarSize::Small } else { CarSize::Big })
            .collect();
        Ok(TwoCarTableau { u: self.u.clone(), sizes })
    }

    /// Parses the `"u1,...,un;v1,...,vn"` text form.
    pub fn parse(text: &str) -> Result<Self, PfError> {
        let (u_text, v_text) = text
            .split_once(';')
            .ok_or_else(|| PfError::Parse("expected \"u1,...,un;v1,...,vn\"".into()))?;
        ParkingFunction::new(parse_usize_list(u_text)?, parse_usize_list(v_text)?)
    }
}

fn fmt_two_line<A: fmt::Display, B: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    first: &[A],
    second: &[B],
) -> fmt::Result {
    for (i, x) in first.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ";")?;
    for (i, x) in second.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_two_line(f, &self.u, &self.v)
    }
}

impl fmt::Debug for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParkingFunction({self})")
    }
}

/// Row indices in diagonal reading order: diagonals from the highest down
/// to the main one, decreasing row index within each diagonal.
fn diagonal_read(u: &[usize]) -> impl Iterator<Item = usize> + '_ {
    let top = u.iter().copied().max().unwrap_or(0);
    (0..=top).rev().flat_map(move |d| {
        (0..u.len()).rev().filter(move |&i| u[i] == d)
    })
}

/// True when the elements selected by `pick` appear in increasing order.
fn segment_increasing(word: &[usize], pick: impl Fn(usize) -> bool) -> bool {
    let mut last = 0;
    for &x in word.iter().filter(|&&x| pick(x)) {
        if x <= last {
            return false;
        }
        last = x;
    }
    true
}

/// Car size in the 1-2 tableau reduction. Small cars print as `1`, big
/// cars as `2`; the derived `Ord` makes `Small < Big`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CarSize {
    Small,
    Big,
}

impl CarSize {
    pub fn digit(self) -> u8 {
        match self {
            CarSize::Small => 1,
            CarSize::Big => 2,
        }
    }
}

impl fmt::Display for CarSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.digit())
    }
}

/// A word over `{1,2}`; carries the interleaving data of the constructive
/// maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryWord(pub Vec<CarSize>);

impl BinaryWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&c| c == CarSize::Small).count()
    }

    pub fn twos(&self) -> usize {
        self.0.iter().filter(|&&c| c == CarSize::Big).count()
    }

    /// Number of (2 before 1) pairs.
    pub fn inv(&self) -> usize {
        let mut twos_seen = 0;
        let mut inv = 0;
        for &c in &self.0 {
            match c {
                CarSize::Big => twos_seen += 1,
                CarSize::Small => inv += twos_seen,
            }
        }
        inv
    }

    /// Number of (1 before 2) pairs.
    pub fn coinv(&self) -> usize {
        let mut ones_seen = 0;
        let mut coinv = 0;
        for &c in &self.0 {
            match c {
                CarSize::Small => ones_seen += 1,
                CarSize::Big => coinv += ones_seen,
            }
        }
        coinv
    }

    /// Parses a digit string such as `"122"`.
    pub fn parse(text: &str) -> Result<Self, PfError> {
        text.chars()
            .map(|c| match c {
                '1' => Ok(CarSize::Small),
                '2' => Ok(CarSize::Big),
                other => Err(PfError::Parse(format!("word letter must be 1 or 2, got {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BinaryWord)
    }

    /// Every word with `ones` ones and `twos` twos, in lexicographic order
    /// (1 before 2).
    pub fn all(ones: usize, twos: usize) -> Vec<BinaryWord> {
        fn rec(ones: usize, twos: usize, cur: &mut Vec<CarSize>, out: &mut Vec<BinaryWord>) {
            if ones == 0 && twos == 0 {
                out.push(BinaryWord(cur.clone()));
                return;
            }
            if ones > 0 {
                cur.push(CarSize::Small);
                rec(ones - 1, twos, cur, out);
                cur.pop();
            }
            if twos > 0 {
                cur.push(CarSize::Big);
                rec(ones, twos - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(ones, twos, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

/// The 1-2 tableau of a shuffle-family parking function: the offset vector
/// plus a size word. Validity demands the Dyck support conditions and
/// that every column-increase step reads (1,2): the column condition forces
/// the upper label to be larger while the reading order forces equal-size
/// labels to decrease along rows, so same-size or (2,1) stacks cannot occur
/// in the shuffle family.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwoCarTableau {
    u: Vec<usize>,
    sizes: Vec<CarSize>,
}

impl TwoCarTableau {
    pub fn new(u: Vec<usize>, sizes: Vec<CarSize>) -> Result<Self, PfError> {
        if u.len() != sizes.len() {
            return Err(PfError::LengthMismatch(format!(
                "offsets have length {} but sizes have length {}",
                u.len(),
                sizes.len()
            )));
        }
        check_support(&u)?;
        for i in 1..u.len() {
            if u[i] == u[i - 1] + 1
                && (sizes[i - 1], sizes[i]) != (CarSize::Small, CarSize::Big)
            {
                return Err(PfError::BadColumn(format!(
                    "rows {} and {} share a column but sizes read ({},{}) instead of (1,2)",
                    i,
                    i + 1,
                    sizes[i - 1],
                    sizes[i]
                )));
            }
        }
        Ok(TwoCarTableau { u, sizes })
    }

    pub fn empty() -> Self {
        TwoCarTableau { u: Vec::new(), sizes: Vec::new() }
    }

    /// For callers that construct rows already known to satisfy the
    /// invariants (generators, audited maps). Checked in debug builds.
    pub(crate) fn from_rows_unchecked(rows: Vec<(usize, CarSize)>) -> Self {
        let (u, sizes) = rows.into_iter().unzip();
        let t = TwoCarTableau { u, sizes };
        debug_assert!(
            TwoCarTableau::new(t.u.clone(), t.sizes.clone()).is_ok(),
            "invalid tableau constructed internally: {t}"
        );
        t
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    pub fn offsets(&self) -> &[usize] {
        &self.u
    }

    pub fn sizes(&self) -> &[CarSize] {
        &self.sizes
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, CarSize)> + '_ {
        self.u.iter().copied().zip(self.sizes.iter().copied())
    }

    pub fn small_count(&self) -> usize {
        self.sizes.iter().filter(|&&c| c == CarSize::Small).count()
    }

    pub fn big_count(&self) -> usize {
        self.sizes.iter().filter(|&&c| c == CarSize::Big).count()
    }

    pub fn area(&self) -> usize {
        self.u.iter().sum()
    }

    pub fn coarea(&self) -> usize {
        crate::qalg::choose2(self.len()) - self.area()
    }

    /// Mixed-pair dinv. Same-size pairs never contribute on the shuffle
    /// family, so the size word carries the full statistic.
    pub fn dinv(&self) -> Dinv {
        let (u, s) = (&self.u, &self.sizes);
        let mut primary = 0;
        let mut secondary = 0;
        for i in 0..u.len() {
            for j in i + 1..u.len() {
                if u[i] == u[j] && s[i] < s[j] {
                    primary += 1;
                } else if u[i] == u[j] + 1 && s[i] > s[j] {
                    secondary += 1;
                }
            }
        }
        Dinv { primary, secondary }
    }

    /// `(r, s)`: how many small and big cars sit on the main diagonal.
    pub fn diag_counts(&self) -> (usize, usize) {
        let mut r = 0;
        let mut s = 0;
        for (u, size) in self.rows() {
            if u == 0 {
                match size {
                    CarSize::Small => r += 1,
                    CarSize::Big => s += 1,
                }
            }
        }
        (r, s)
    }

    /// The main diagonal read left to right as a 1-2 word.
    pub fn diagonal_sizes(&self) -> BinaryWord {
        BinaryWord(
            self.rows().filter(|&(u, _)| u == 0).map(|(_, size)| size).collect(),
        )
    }

    /// Restores car labels: smalls take `1..a` and bigs take `a+1..n`, each
    /// in diagonal reading order. The tableau invariants guarantee the
    /// result is a valid shuffle-family parking function.
    pub fn relabel(&self) -> ParkingFunction {
        let a = self.small_count();
        let mut v = vec![0usize; self.len()];
        let mut next_small = 1;
        let mut next_big = a + 1;
        for i in diagonal_read(&self.u) {
            match self.sizes[i] {
                CarSize::Small => {
                    v[i] = next_small;
                    next_small += 1;
                }
                CarSize::Big => {
                    v[i] = next_big;
                    next_big += 1;
                }
            }
        }
        ParkingFunction::new(self.u.clone(), v)
            .expect("a valid tableau always relabels to a valid parking function")
    }

    /// Parses the `"u1,...,un;s1,...,sn"` text form with sizes in `{1,2}`.
    pub fn parse(text: &str) -> Result<Self, PfError> {
        let (u_text, s_text) = text
            .split_once(';')
            .ok_or_else(|| PfError::Parse("expected \"u1,...,un;s1,...,sn\"".into()))?;
        let u = parse_usize_list(u_text)?;
        let sizes = parse_usize_list(s_text)?
            .into_iter()
            .map(|d| match d {
                1 => Ok(CarSize::Small),
                2 => Ok(CarSize::Big),
                other => Err(PfError::Parse(format!("size must be 1 or 2, got {other}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        TwoCarTableau::new(u, sizes)
    }
}

impl fmt::Display for TwoCarTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_two_line(f, &self.u, &self.sizes)
    }
}

impl fmt::Debug for TwoCarTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoCarTableau({self})")
    }
}

/// A composition of `n` naming the segment lengths of `1 2 ... n` whose
/// shuffles the family admits as diagonal words.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ShuffleSpec {
    parts: Vec<usize>,
}

impl ShuffleSpec {
    pub fn new(parts: Vec<usize>) -> Result<Self, PfError> {
        if parts.contains(&0) {
            return Err(PfError::Parse("composition parts must be positive".into()));
        }
        Ok(ShuffleSpec { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Consecutive label segments `lo..=hi` determined by the parts.
    pub fn segments(&self) -> impl Iterator<Item = std::ops::RangeInclusive<usize>> + '_ {
        let mut lo = 1;
        self.parts.iter().map(move |&p| {
            let seg = lo..=lo + p - 1;
            lo += p;
            seg
        })
    }

    /// Every composition of `n`, ordered lexicographically.
    pub fn all(n: usize) -> Vec<ShuffleSpec> {
        fn rec(remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<ShuffleSpec>) {
            if remaining == 0 {
                out.push(ShuffleSpec { parts: cur.clone() });
                return;
            }
            for p in 1..=remaining {
                cur.push(p);
                rec(remaining - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }

    pub fn parse(text: &str) -> Result<Self, PfError> {
        ShuffleSpec::new(parse_usize_list(text)?)
    }
}

impl fmt::Display for ShuffleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Whether `word` lies in the shuffle of the spec's segments: restricted to
/// each segment's labels, the word must read in increasing order.
pub fn is_shuffle(word: &[usize], spec: &ShuffleSpec) -> Result<bool, PfError> {
    if word.len() != spec.n() {
        return Err(PfError::LengthMismatch(format!(
            "word has length {} but the composition sums to {}",
            word.len(),
            spec.n()
        )));
    }
    Ok(spec
        .segments()
        .all(|seg| segment_increasing(word, |x| seg.contains(&x))))
}
