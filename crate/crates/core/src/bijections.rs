//! The constructive maps behind the two family recursions, split into
//! reusable steps with exact statistic deltas, plus their inverses.
//!
//! Everything here works at tableau level. Two structural facts make the
//! inverses canonical: a diagonal big car is always the last row of its
//! diagonal group (a row at offset 1 directly above it would need sizes
//! (2,x) on a column increase, which is invalid), and inside a raised
//! block the only rows at offset 1 besides the leader are small (they are
//! the raised diagonal smalls of the source). The exhaustive audits in the
//! verification suite are the arbiter for both facts.

use thiserror::Error;

use crate::parkfun::{BinaryWord, CarSize, TwoCarTableau};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BijectionError {
    /// The interleaving word does not match the tableau it should steer.
    #[error("BadWord: {0}")]
    BadWord(String),
    /// A transformed tableau failed validation, which means the input was
    /// outside the map's domain.
    #[error("InvalidResult: {0}")]
    InvalidResult(String),
    /// The input is not a member of the family the inverse expects.
    #[error("NotInImage: {0}")]
    NotInImage(String),
    /// A structural precondition on the input tableau is violated.
    #[error("Precondition: {0}")]
    Precondition(String),
}

type Row = (usize, CarSize);

fn rows_of(t: &TwoCarTableau) -> Vec<Row> {
    t.rows().collect()
}

/// Adds a big car on the main diagonal as the new first row. Area and dinv
/// are untouched; the big-diagonal count grows by one.
pub fn prepend_diagonal_big(t: &TwoCarTableau) -> TwoCarTableau {
    let mut rows = vec![(0, CarSize::Big)];
    rows.extend(t.rows());
    TwoCarTableau::from_rows_unchecked(rows)
}

/// Splits `t` into blocks at its diagonal big cars, raises every existing
/// row one diagonal, and interleaves the blocks with fresh diagonal small
/// cars as directed by `w`: each 1 emits a new small diagonal row, each 2
/// attaches the next block on the first diagonal.
///
/// `w` must start with a 1 (the first output row must sit on the main
/// diagonal) and carry exactly one 2 per diagonal big of `t`. Area grows by
/// the number of rows of `t`; dinv grows by `inv(w)`, each (2,1) pair in
/// `w` becoming one new secondary pair between a raised block leader and a
/// later new diagonal small.
pub fn raise_and_attach(t: &TwoCarTableau, w: &BinaryWord) -> Result<TwoCarTableau, BijectionError> {
    if t.rows().next() != Some((0, CarSize::Big)) {
        return Err(BijectionError::Precondition(
            "first row must be a diagonal big car".into(),
        ));
    }
    let rows = rows_of(t);
    let mut blocks: Vec<&[Row]> = Vec::new();
    let mut starts: Vec<usize> = (0..rows.len())
        .filter(|&i| rows[i] == (0, CarSize::Big))
        .collect();
    starts.push(rows.len());
    for pair in starts.windows(2) {
        blocks.push(&rows[pair[0]..pair[1]]);
    }
    if w.twos() != blocks.len() {
        return Err(BijectionError::BadWord(format!(
            "word needs exactly {} twos, got {}",
            blocks.len(),
            w.twos()
        )));
    }
    if w.0.first() != Some(&CarSize::Small) {
        return Err(BijectionError::BadWord("word must start with a 1".into()));
    }
    let mut out: Vec<Row> = Vec::with_capacity(rows.len() + w.ones());
    let mut next_block = blocks.iter();
    for &letter in &w.0 {
        match letter {
            CarSize::Small => out.push((0, CarSize::Small)),
            CarSize::Big => {
                let block = next_block.next().expect("two-count matches block count");
                out.extend(block.iter().map(|&(u, size)| (u + 1, size)));
            }
        }
    }
    Ok(TwoCarTableau::from_rows_unchecked(out))
}

/// Inserts big cars on the main diagonal of a tableau that has none, so
/// that the diagonal reads `v` left to right. Each inserted row goes at
/// the end of its preceding diagonal group, the only position validity
/// allows. Area is unchanged; dinv grows by `coinv(v)`, one new primary
/// pair per (1,2) pair of `v`.
pub fn insert_diagonal_bigs(
    t: &TwoCarTableau,
    v: &BinaryWord,
) -> Result<TwoCarTableau, BijectionError> {
    let (r, s) = t.diag_counts();
    if s != 0 {
        return Err(BijectionError::Precondition(
            "tableau already has big cars on the diagonal".into(),
        ));
    }
    if v.ones() != r {
        return Err(BijectionError::BadWord(format!(
            "word needs exactly {r} ones, got {}",
            v.ones()
        )));
    }
    let rows = rows_of(t);
    // Diagonal groups: each starts at a diagonal small and owns the raised
    // rows that follow it.
    let mut groups: Vec<&[Row]> = Vec::new();
    let mut starts: Vec<usize> =
        (0..rows.len()).filter(|&i| rows[i].0 == 0).collect();
    starts.push(rows.len());
    for pair in starts.windows(2) {
        groups.push(&rows[pair[0]..pair[1]]);
    }
    let mut out: Vec<Row> = Vec::with_capacity(rows.len() + v.twos());
    let mut next_group = groups.iter();
    for &letter in &v.0 {
        match letter {
            CarSize::Small => {
                let group = next_group.next().expect("one-count matches group count");
                out.extend_from_slice(group);
            }
            CarSize::Big => out.push((0, CarSize::Big)),
        }
    }
    Ok(TwoCarTableau::from_rows_unchecked(out))
}

/// Shifts every small car one cell west (raising its offset), then swaps
/// the two car sizes everywhere. Area grows by the number of small cars of
/// the input; dinv is preserved with the primary and secondary mixed-pair
/// sets exchanged.
pub fn west_shift_swap(t: &TwoCarTableau) -> Result<TwoCarTableau, BijectionError> {
    let rows: Vec<Row> = t
        .rows()
        .map(|(u, size)| match size {
            CarSize::Small => (u + 1, CarSize::Big),
            CarSize::Big => (u, CarSize::Small),
        })
        .collect();
    let (u, sizes) = rows.into_iter().unzip();
    TwoCarTableau::new(u, sizes).map_err(|e| {
        BijectionError::InvalidResult(format!(
            "shift-swap output is not a valid tableau ({e}); input was outside the domain"
        ))
    })
}

/// Builds a member of the `(r, s)` family with `r = w.ones()` small and
/// `s = v.twos()` big diagonal cars out of a member of the
/// `(a-r, b-s-1)`-car family: prepend a diagonal big, raise-and-attach by
/// `w`, then place the diagonal bigs by `v`.
///
/// Area delta: `a + b - r - s`. Dinv delta: `inv(w) + coinv(v)`.
pub fn compose_rs(
    t: &TwoCarTableau,
    w: &BinaryWord,
    v: &BinaryWord,
) -> Result<TwoCarTableau, BijectionError> {
    if w.ones() != v.ones() {
        return Err(BijectionError::BadWord(format!(
            "interleaving words disagree on the small-diagonal count: {} vs {}",
            w.ones(),
            v.ones()
        )));
    }
    insert_diagonal_bigs(&raise_and_attach(&prepend_diagonal_big(t), w)?, v)
}

/// Inverse of [`compose_rs`]. Recovers `v` from the diagonal, `w` from the
/// interleaving of diagonal smalls with block leaders at offset 1, and the
/// source tableau by lowering the blocks and removing the prepended big.
pub fn decompose_rs(
    t: &TwoCarTableau,
) -> Result<(TwoCarTableau, BinaryWord, BinaryWord), BijectionError> {
    let (r, s) = t.diag_counts();
    if r == 0 {
        return Err(BijectionError::NotInImage(
            "family members with no diagonal small car exist only when every car is big".into(),
        ));
    }
    if s == t.big_count() {
        return Err(BijectionError::NotInImage(
            "all big cars sit on the diagonal; this is the recursion base, not a map image".into(),
        ));
    }
    let v = t.diagonal_sizes();
    let remaining: Vec<Row> =
        t.rows().filter(|&row| row != (0, CarSize::Big)).collect();

    let mut w_letters = Vec::new();
    let mut blocks: Vec<Vec<Row>> = Vec::new();
    for &(u, size) in &remaining {
        if u == 0 {
            w_letters.push(CarSize::Small);
        } else if u == 1 && size == CarSize::Big {
            w_letters.push(CarSize::Big);
            blocks.push(vec![(0, size)]);
        } else {
            let block = blocks
                .last_mut()
                .ok_or_else(|| BijectionError::NotInImage("raised row precedes every block leader".into()))?;
            block.push((u - 1, size));
        }
    }
    let mut source_rows: Vec<Row> = blocks.into_iter().flatten().collect();
    if source_rows.first() != Some(&(0, CarSize::Big)) {
        return Err(BijectionError::NotInImage("no leading block to unprepend".into()));
    }
    source_rows.remove(0);
    let (u, sizes) = source_rows.into_iter().unzip();
    let source = TwoCarTableau::new(u, sizes)
        .map_err(|e| BijectionError::NotInImage(format!("lowered blocks are invalid: {e}")))?;
    Ok((source, BinaryWord(w_letters), v))
}

/// Builds a member of the `s`-big-diagonal family with `a` small and `b`
/// big cars out of a member of the `(b-s, a-1)`-car family: prepend a
/// diagonal big, shift-and-swap, then place `s` diagonal bigs by `w`.
///
/// Area delta: `b - s`. Dinv delta: `coinv(w)`.
pub fn compose_s(t: &TwoCarTableau, w: &BinaryWord) -> Result<TwoCarTableau, BijectionError> {
    insert_diagonal_bigs(&west_shift_swap(&prepend_diagonal_big(t))?, w)
}

/// Inverse of [`compose_s`].
pub fn decompose_s(t: &TwoCarTableau) -> Result<(TwoCarTableau, BinaryWord), BijectionError> {
    if t.small_count() == 0 {
        return Err(BijectionError::NotInImage(
            "the map only reaches families with at least one small car".into(),
        ));
    }
    let (r, _) = t.diag_counts();
    if r == 0 {
        return Err(BijectionError::NotInImage("no diagonal small car".into()));
    }
    let w = t.diagonal_sizes();
    let remaining: Vec<Row> =
        t.rows().filter(|&row| row != (0, CarSize::Big)).collect();
    let unswapped: Vec<Row> = remaining
        .iter()
        .map(|&(u, size)| match size {
            CarSize::Small => (u, CarSize::Big),
            CarSize::Big => {
                debug_assert!(u >= 1, "diagonal bigs were removed");
                (u - 1, CarSize::Small)
            }
        })
        .collect();
    if unswapped.first() != Some(&(0, CarSize::Big)) {
        return Err(BijectionError::NotInImage("no prepended big to remove".into()));
    }
    let (u, sizes) = unswapped[1..].iter().copied().unzip();
    let source = TwoCarTableau::new(u, sizes)
        .map_err(|e| BijectionError::NotInImage(format!("unshifted rows are invalid: {e}")))?;
    Ok((source, w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(text: &str) -> TwoCarTableau {
        TwoCarTableau::parse(text).unwrap()
    }

    fn word(text: &str) -> BinaryWord {
        BinaryWord::parse(text).unwrap()
    }

    #[test]
    fn prepend_examples() {
        let t = prepend_diagonal_big(&TwoCarTableau::empty());
        assert_eq!(t.to_string(), "0;2");
        let t = prepend_diagonal_big(&tab("0;1"));
        assert_eq!(t.to_string(), "0,0;2,1");
        assert_eq!(t.dinv().total(), 0);
        let t = prepend_diagonal_big(&tab("0,1;1,2"));
        assert_eq!(t.to_string(), "0,0,1;2,1,2");
        assert_eq!(t.dinv().total(), tab("0,1;1,2").dinv().total());
        assert_eq!(t.diag_counts(), (1, 1));
    }

    #[test]
    fn raise_and_attach_examples() {
        let out = raise_and_attach(&tab("0;2"), &word("12")).unwrap();
        assert_eq!(out.to_string(), "0,1;1,2");
        assert_eq!((out.area(), out.dinv().total()), (1, 0));

        let out = raise_and_attach(&tab("0,0;2,2"), &word("122")).unwrap();
        assert_eq!(out.to_string(), "0,1,1;1,2,2");
        assert_eq!(out.dinv().total(), 0);

        let out = raise_and_attach(&tab("0,0;2,2"), &word("212"));
        assert!(matches!(out, Err(BijectionError::BadWord(_))));
        let out = raise_and_attach(&tab("0;2"), &word("122"));
        assert!(matches!(out, Err(BijectionError::BadWord(_))));
        let out = raise_and_attach(&tab("0;1"), &word("12"));
        assert!(matches!(out, Err(BijectionError::Precondition(_))));
    }

    #[test]
    fn raise_adds_inversions_as_secondary_dinv() {
        // 2 before 1 in w puts a raised block leader before a new small.
        let out = raise_and_attach(&tab("0;2"), &word("121")).unwrap();
        assert_eq!(out.to_string(), "0,1,0;1,2,1");
        assert_eq!(out.dinv().total(), word("121").inv());

        let out = raise_and_attach(&tab("0,0;2,2"), &word("1221")).unwrap();
        assert_eq!(out.to_string(), "0,1,1,0;1,2,2,1");
        assert_eq!(out.dinv().total(), word("1221").inv());
    }

    #[test]
    fn insert_diagonal_bigs_examples() {
        let out = insert_diagonal_bigs(&tab("0,1;1,2"), &word("12")).unwrap();
        assert_eq!(out.to_string(), "0,1,0;1,2,2");
        assert_eq!(out.dinv().total(), 1);

        let out = insert_diagonal_bigs(&tab("0,1;1,2"), &word("21")).unwrap();
        assert_eq!(out.to_string(), "0,0,1;2,1,2");
        assert_eq!(out.dinv().total(), 0);

        let out = insert_diagonal_bigs(&tab("0,1;1,2"), &word("1")).unwrap();
        assert_eq!(out, tab("0,1;1,2"));

        assert!(matches!(
            insert_diagonal_bigs(&tab("0,1;1,2"), &word("112")),
            Err(BijectionError::BadWord(_))
        ));
        assert!(matches!(
            insert_diagonal_bigs(&tab("0,0;2,1"), &word("12")),
            Err(BijectionError::Precondition(_))
        ));
    }

    #[test]
    fn west_shift_swap_examples() {
        assert_eq!(west_shift_swap(&tab("0;2")).unwrap().to_string(), "0;1");
        let out = west_shift_swap(&tab("0,0;2,1")).unwrap();
        assert_eq!(out.to_string(), "0,1;1,2");
        assert_eq!((out.area(), out.dinv().total()), (1, 0));
        // Swap exchanges the two dinv kinds while preserving the total.
        let t = tab("0,0,1;2,1,2");
        let out = west_shift_swap(&t).unwrap();
        assert_eq!(out.to_string(), "0,1,1;1,2,1");
        assert_eq!(out.dinv().total(), t.dinv().total());
        assert_eq!(out.dinv().primary, t.dinv().secondary);
        assert_eq!(out.dinv().secondary, t.dinv().primary);
        // A lone small car would land at offset 1: invalid.
        assert!(matches!(west_shift_swap(&tab("0;1")), Err(BijectionError::InvalidResult(_))));
    }

    #[test]
    fn compose_rs_examples() {
        let out = compose_rs(&TwoCarTableau::empty(), &word("12"), &word("12")).unwrap();
        assert_eq!(out.to_string(), "0,1,0;1,2,2");
        assert_eq!(out.coarea() + out.dinv().total(), 3);

        let out = compose_rs(&TwoCarTableau::empty(), &word("12"), &word("21")).unwrap();
        assert_eq!(out.to_string(), "0,0,1;2,1,2");
        assert_eq!(out.coarea() + out.dinv().total(), 2);

        // A target family with no big cars is outside the map's range.
        assert!(compose_rs(&TwoCarTableau::empty(), &word("1"), &word("1")).is_err());
    }

    #[test]
    fn compose_s_examples() {
        let out = compose_s(&TwoCarTableau::empty(), &word("1")).unwrap();
        assert_eq!(out.to_string(), "0;1");

        let out = compose_s(&tab("0;1"), &word("1")).unwrap();
        assert_eq!(out.to_string(), "0,1;1,2");
        assert_eq!(out.area(), 1);

        let out = compose_s(&tab("0;1"), &word("12")).unwrap();
        assert_eq!(out.to_string(), "0,1,0;1,2,2");
        assert_eq!(out.area(), 1);
        assert_eq!(out.dinv().total(), word("12").coinv());
    }

    #[test]
    fn decompose_examples() {
        let (t, w, v) = decompose_rs(&tab("0,1,0;1,2,2")).unwrap();
        assert!(t.is_empty());
        assert_eq!((w.to_string(), v.to_string()), ("12".into(), "12".into()));

        let (t, w) = decompose_s(&tab("0,1,0;1,2,2")).unwrap();
        assert_eq!(t.to_string(), "0;1");
        assert_eq!(w.to_string(), "12");

        assert!(matches!(decompose_rs(&tab("0,0;2,1")), Err(BijectionError::NotInImage(_))));
        assert!(matches!(decompose_s(&tab("0;2")), Err(BijectionError::NotInImage(_))));
    }

    #[test]
    fn roundtrip_small_families() {
        for a in 0..=4usize {
            for b in 0..=4usize {
                for t in crate::enumerator::tableaux(a, b, None, None) {
                    let (r, s) = t.diag_counts();
                    if r >= 1 && s < b {
                        let (src, w, v) = decompose_rs(&t).unwrap();
                        assert_eq!(compose_rs(&src, &w, &v).unwrap(), t, "rs {t}");
                    }
                    if a >= 1 {
                        let (src, w) = decompose_s(&t).unwrap();
                        assert_eq!(compose_s(&src, &w).unwrap(), t, "s {t}");
                    }
                }
            }
        }
    }
}
