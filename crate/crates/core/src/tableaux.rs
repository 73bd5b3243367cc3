//! Semistandard, standard and quasi-Yamanouchi tableaux.
//!
//! Rows are stored bottom row first (French notation): entries weakly
//! increase along a row and strictly increase up a column.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

/// A subset of `{1, …, n-1}`, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentSet {
    n: usize,
    members: Vec<usize>,
}

impl DescentSet {
    pub fn new(n: usize, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&d| d == 0 || d >= n) {
            return Err(Error::OutOfRange(alloc::format!(
                "descent set {members:?} not inside 1..{n}"
            )));
        }
        Ok(DescentSet { n, members })
    }

    pub fn empty(n: usize) -> Self {
        DescentSet { n, members: Vec::new() }
    }

    /// `{1, …, n-1}`
    pub fn full(n: usize) -> Self {
        DescentSet { n, members: (1..n).collect() }
    }

    /// Positional descents `i` with `word[i-1] > word[i]` (1-based `i`).
    pub fn of_word(word: &[usize]) -> Self {
        DescentSet {
            n: word.len(),
            members: word
                .windows(2)
                .enumerate()
                .filter(|(_, w)| w[0] > w[1])
                .map(|(i, _)| i + 1)
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, d) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("}")
    }
}

impl Tableau {
    /// Validates the semistandard conditions.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidTableau("row lengths do not form a partition".into()))?;
        let t = Tableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        for (r, row) in self.rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(Error::InvalidTableau("entries must be positive".into()));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(alloc::format!("row {r} decreases")));
            }
            if r > 0 {
                let below = &self.rows[r - 1];
                if row.iter().zip(below).any(|(a, b)| a <= b) {
                    return Err(Error::InvalidTableau(alloc::format!(
                        "column not strictly increasing at row {r}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        let shape = Partition::from_unsorted(rows.iter().map(Vec::len).collect());
        Tableau { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn entry(&self, (col, row): Cell) -> Option<usize> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    pub fn max_value(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// `weight[i]` counts the entries equal to `i + 1`.
    pub fn weight(&self) -> Vec<usize> {
        let mut w = vec![0; self.max_value()];
        for &v in self.rows.iter().flatten() {
            w[v - 1] += 1;
        }
        w
    }

    pub fn is_standard(&self) -> bool {
        self.weight().iter().all(|&c| c == 1)
    }

    /// All cells holding value `v`, left to right.
    fn cells_of(&self, v: usize) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .filter(move |(_, &x)| x == v)
                    .map(move |(c, _)| (c, r))
            })
            .collect();
        cells.sort_unstable();
        cells
    }

    /// Positions of `1..=n` in a standard tableau, indexed by value − 1.
    fn positions(&self) -> Result<Vec<Cell>> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        let mut pos = vec![(0, 0); self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                pos[v - 1] = (c, r);
            }
        }
        Ok(pos)
    }

    /// Entries read left to right, top row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn transpose(&self) -> Tableau {
        let conj = self.shape.conjugate();
        let rows = conj
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len).map(|c| self.rows[c][r]).collect())
            .collect();
        Tableau { shape: conj, rows }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str("/")?;
            }
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Rows bottom-up, comma separated, rows separated by `/`: `"1,1/2,2/3"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Tableau::new(Vec::new());
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(alloc::format!("bad entry {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

/// `a` is weakly left of `b`: strictly higher row, column not to the right.
fn weakly_left(a: Cell, b: Cell) -> bool {
    a.1 > b.1 && a.0 <= b.0
}

/// `a` is strictly right of `b`: strictly to the right, row not higher.
fn strictly_right(a: Cell, b: Cell) -> bool {
    a.0 > b.0 && a.1 <= b.1
}

/// Every SSYT of `shape` with entries at most `max_value`, filled column by
/// column (bottom to top within a column) by backtracking.
pub fn generate_ssyt(shape: &Partition, max_value: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    if max_value == 0 {
        if shape.is_empty() {
            out.push(Tableau::from_rows_unchecked(Vec::new()));
        }
        return out;
    }
    let heights = shape.conjugate();
    let order: Vec<Cell> = heights
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(c, &h)| (0..h).map(move |r| (c, r)))
        .collect();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    fill_ssyt(&order, 0, &heights, max_value, &mut rows, &mut out);
    out
}

fn fill_ssyt(
    order: &[Cell],
    idx: usize,
    heights: &Partition,
    max: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    let Some(&(c, r)) = order.get(idx) else {
        out.push(Tableau::from_rows_unchecked(rows.clone()));
        return;
    };
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(rows[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(rows[r - 1][c] + 1);
    }
    // leave room for the strictly increasing cells above in this column
    let hi = max.saturating_sub(heights.part(c) - 1 - r);
    for v in lo..=hi {
        rows[r][c] = v;
        fill_ssyt(order, idx + 1, heights, max, rows, out);
    }
    rows[r][c] = 0;
}

/// Every standard Young tableau of `shape`.
pub fn generate_syt(shape: &Partition) -> Vec<Tableau> {
    let n = shape.size();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    let mut filled = vec![0usize; shape.len()];
    place_syt(1, n, shape, &mut filled, &mut rows, &mut out);
    out
}

fn place_syt(
    v: usize,
    n: usize,
    shape: &Partition,
    filled: &mut [usize],
    rows: &mut [Vec<usize>],
    out: &mut Vec<Tableau>,
) {
    if v > n {
        out.push(Tableau::from_rows_unchecked(rows.to_vec()));
        return;
    }
    for r in 0..filled.len() {
        let c = filled[r];
        let fits_row = c < shape.part(r);
        let supported = r == 0 || filled[r - 1] > c;
        if fits_row && supported {
            rows[r][c] = v;
            filled[r] += 1;
            place_syt(v + 1, n, shape, filled, rows, out);
            filled[r] -= 1;
        }
    }
}

/// The Kostka number `K_{νλ}`: SSYT of shape `ν` and weight `λ`, counted by
/// peeling off the horizontal strip holding the largest value.
pub fn kostka(nu: &Partition, lambda: &Partition) -> Result<u64> {
    if nu.size() != lambda.size() {
        return Err(Error::SizeMismatch { left: nu.size(), right: lambda.size() });
    }
    let mut memo = BTreeMap::new();
    Ok(kostka_rec(nu.parts().to_vec(), lambda.parts(), &mut memo))
}

fn kostka_rec(shape: Vec<usize>, weight: &[usize], memo: &mut BTreeMap<(Vec<usize>, usize), u64>) -> u64 {
    let Some((&last, rest)) = weight.split_last() else {
        return u64::from(shape.iter().all(|&p| p == 0));
    };
    let key = (shape.clone(), weight.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    let mut inner = shape.clone();
    strips(&shape, 0, last, &mut inner, &mut |inner| {
        total += kostka_rec(inner.to_vec(), rest, memo);
    });
    memo.insert(key, total);
    total
}

/// Enumerate the partitions `inner ⊆ outer` with `outer / inner` a
/// horizontal strip of `k` cells.
fn strips(outer: &[usize], row: usize, k: usize, inner: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if row == outer.len() {
        if k == 0 {
            f(inner);
        }
        return;
    }
    // a horizontal strip can only remove cells from row r that stick out
    // past row r + 1 of the outer shape
    let below_next = outer.get(row + 1).copied().unwrap_or(0);
    let max_remove = (outer[row] - below_next).min(k);
    for take in 0..=max_remove {
        inner[row] = outer[row] - take;
        strips(outer, row + 1, k - take, inner, f);
    }
    inner[row] = outer[row];
}

/// Descent set of a standard tableau: `i` with `i + 1` weakly left of `i`.
pub fn descent_set(t: &Tableau) -> Result<DescentSet> {
    let pos = t.positions()?;
    let n = pos.len();
    let members = (1..n)
        .filter(|&i| {
            let (a, b) = (pos[i], pos[i - 1]);
            a.1 > b.1 || (a.1 == b.1 && a.0 < b.0)
        })
        .collect();
    Ok(DescentSet { n, members })
}

/// Number of runs, `des(T) + 1`.
pub fn runs(t: &Tableau) -> Result<usize> {
    Ok(descent_set(t)?.len() + 1)
}

/// Every value `i > 1` has its leftmost instance weakly left of some `i - 1`.
pub fn is_quasi_yamanouchi(t: &Tableau) -> bool {
    let max = t.max_value();
    for i in 1..=max {
        let cells = t.cells_of(i);
        if cells.is_empty() {
            return false;
        }
        if i > 1 {
            let leftmost = cells[0];
            if !t.cells_of(i - 1).iter().any(|&c| weakly_left(leftmost, c)) {
                return false;
            }
        }
    }
    true
}

/// Repeatedly decrement every `i` whose leftmost instance lies strictly right
/// of the rightmost `i - 1` (or that has no `i - 1` at all).
pub fn destandardize(t: &Tableau) -> Tableau {
    let mut rows = t.rows.clone();
    loop {
        let cur = Tableau::from_rows_unchecked(rows.clone());
        let max = cur.max_value();
        let target = (2..=max).find(|&i| {
            let ci = cur.cells_of(i);
            if ci.is_empty() {
                return false;
            }
            let prev = cur.cells_of(i - 1);
            match prev.last() {
                None => true,
                Some(&rightmost) => strictly_right(ci[0], rightmost),
            }
        });
        match target {
            None => return cur,
            Some(i) => {
                for v in rows.iter_mut().flatten() {
                    if *v == i {
                        *v = i - 1;
                    }
                }
            }
        }
    }
}

/// Inverse of [`destandardize`] on quasi-Yamanouchi tableaux: number the cells
/// holding each value left to right, smallest value first.
pub fn standardize(q: &Tableau) -> Result<Tableau> {
    if !is_quasi_yamanouchi(q) {
        return Err(Error::NotQuasiYamanouchi);
    }
    let mut rows: Vec<Vec<usize>> = q.rows.iter().map(|r| vec![0; r.len()]).collect();
    let mut next = 1;
    for v in 1..=q.max_value() {
        for (c, r) in q.cells_of(v) {
            rows[r][c] = next;
            next += 1;
        }
    }
    Ok(Tableau::from_rows_unchecked(rows))
}

/// All quasi-Yamanouchi tableaux of `shape`, as destandardizations of the
/// standard ones.
pub fn generate_qyt(shape: &Partition) -> Vec<Tableau> {
    generate_syt(shape).iter().map(destandardize).collect()
}

/// `|QYT_{=m}(shape)|`, counted as standard tableaux with `m - 1` descents.
pub fn qyt_count(shape: &Partition, m: usize) -> u64 {
    if m == 0 {
        return 0;
    }
    generate_syt(shape)
        .iter()
        .filter(|t| descent_set(t).expect("standard").len() + 1 == m)
        .count() as u64
}

/// `qyt_count` for every `m` in `1..=n`, index `m - 1`.
pub fn qyt_counts(shape: &Partition) -> Vec<u64> {
    let n = shape.size();
    let mut counts = vec![0u64; n.max(1)];
    for t in generate_syt(shape) {
        counts[descent_set(&t).expect("standard").len()] += 1;
    }
    counts
}

/// `|QYT_{=m}(shape)|` by filtering all SSYT with entries at most `m`.
pub fn qyt_count_direct(shape: &Partition, m: usize) -> u64 {
    generate_ssyt(shape, m)
        .iter()
        .filter(|t| t.max_value() == m && is_quasi_yamanouchi(t))
        .count() as u64
}

/// A human-readable multi-line drawing, top row first.
pub fn render(t: &Tableau) -> String {
    let mut s = String::new();
    for row in t.rows.iter().rev() {
        for (i, v) in row.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&alloc::format!("{v:>2}"));
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::all_partitions;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!(Tableau::new(vec![vec![1, 2], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert_eq!(t("1,1/2,2/3").to_string(), "1,1/2,2/3");
    }

    #[test]
    fn ssyt_examples() {
        assert!(generate_ssyt(&p(&[1, 1]), 1).is_empty());
        assert_eq!(generate_ssyt(&p(&[2]), 2).len(), 3);
        let with_weight = generate_ssyt(&p(&[2, 2, 1]), 3)
            .into_iter()
            .filter(|t| t.weight() == vec![2, 2, 1])
            .count();
        assert_eq!(with_weight, 1);
        for tab in generate_ssyt(&p(&[3, 2, 1]), 4) {
            assert!(Tableau::new(tab.rows().to_vec()).is_ok());
        }
    }

    // Oracle: count SSYT of shape ν with weight λ by brute-force filtering.
    fn kostka_brute(nu: &Partition, lambda: &Partition) -> u64 {
        generate_ssyt(nu, lambda.len())
            .iter()
            .filter(|t| {
                let mut w = t.weight();
                w.resize(lambda.len(), 0);
                w == lambda.parts()
            })
            .count() as u64
    }

    #[test]
    fn kostka_against_enumeration() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert!(kostka(&p(&[2]), &p(&[1])).is_err());
        for n in 1..=6 {
            let ps = all_partitions(n);
            for nu in &ps {
                for lam in &ps {
                    let k = kostka(nu, lam).unwrap();
                    assert_eq!(k, kostka_brute(nu, lam), "K_{nu},{lam}");
                    if k > 0 {
                        assert!(nu.dominates(lam).unwrap());
                    }
                }
            }
        }
        for n in 1..=8 {
            for nu in all_partitions(n) {
                assert_eq!(kostka(&nu, &nu).unwrap(), 1);
                assert_eq!(kostka(&Partition::row(n), &nu).unwrap(), 1);
            }
        }
    }

    #[test]
    fn syt_counts_match_hook_formula() {
        for n in 0..=8 {
            for lam in all_partitions(n) {
                let syt = generate_syt(&lam);
                assert_eq!(num_bigint::BigInt::from(syt.len()), lam.syt_count());
                assert!(syt.iter().all(Tableau::is_standard));
            }
        }
    }

    #[test]
    fn descent_examples() {
        let big = t("1,2,3,6,8/4,5,7,11/9,10,12");
        assert_eq!(descent_set(&big).unwrap().members(), &[3, 6, 8, 11]);
        assert_eq!(runs(&big).unwrap(), 5);
        assert!(descent_set(&t("1,2,3,4")).unwrap().is_empty());
        assert_eq!(descent_set(&t("1/2/3/4")).unwrap().members(), &[1, 2, 3]);
        assert_eq!(descent_set(&t("1,1/2")), Err(Error::NotStandard));
    }

    #[test]
    fn destandardization_examples() {
        let syt = t("1,2/3,4/5");
        assert_eq!(destandardize(&syt), t("1,1/2,2/3"));
        assert_eq!(standardize(&t("1,1/2,2/3")).unwrap(), syt);
        assert_eq!(standardize(&t("1,2/3,3")), Err(Error::NotQuasiYamanouchi));
        let shape = p(&[2, 2, 1]);
        let syts = generate_syt(&shape);
        assert_eq!(syts.len(), 5);
        for s in &syts {
            let q = destandardize(s);
            assert!(is_quasi_yamanouchi(&q));
            assert_eq!(destandardize(&q), q);
            assert_eq!(&standardize(&q).unwrap(), s);
        }
    }

    #[test]
    fn qyt_examples() {
        let shape = p(&[2, 2, 1]);
        assert_eq!(qyt_count(&shape, 3), 3);
        assert_eq!(qyt_count(&shape, 4), 2);
        assert_eq!(qyt_count_direct(&shape, 3), 3);
        assert_eq!(qyt_count_direct(&shape, 4), 2);
        for n in 1..=6 {
            assert_eq!(qyt_count(&Partition::row(n), 1), 1);
            for m in 2..=n + 1 {
                assert_eq!(qyt_count(&Partition::row(n), m), 0);
            }
        }
    }

    #[test]
    fn qyt_two_counts_agree_and_refine_syt() {
        for n in 1..=6 {
            for lam in all_partitions(n) {
                let counts = qyt_counts(&lam);
                for m in 1..=n {
                    assert_eq!(counts[m - 1], qyt_count_direct(&lam, m), "{lam} m={m}");
                }
                assert_eq!(num_bigint::BigInt::from(counts.iter().sum::<u64>()), lam.syt_count());
            }
        }
    }

    #[test]
    fn qyt_conjugate_symmetry() {
        for n in 1..=7 {
            for lam in all_partitions(n) {
                let conj = lam.conjugate();
                for k in 1..=n {
                    assert_eq!(qyt_count(&lam, k), qyt_count(&conj, n + 1 - k));
                }
            }
        }
    }

    #[test]
    fn standardization_image_has_m_runs() {
        for n in 1..=6 {
            for lam in all_partitions(n) {
                for q in generate_ssyt(&lam, n).iter().filter(|q| is_quasi_yamanouchi(q)) {
                    let s = standardize(q).unwrap();
                    assert!(s.is_standard());
                    assert_eq!(runs(&s).unwrap(), q.max_value());
                    assert_eq!(&destandardize(&s), q);
                }
            }
        }
    }

    #[test]
    fn destandardize_any_ssyt_lands_in_qyt() {
        for tab in generate_ssyt(&p(&[3, 2, 1]), 6).iter().step_by(7) {
            let d = destandardize(tab);
            assert!(is_quasi_yamanouchi(&d), "{tab} -> {d}");
            assert!(Tableau::new(d.rows().to_vec()).is_ok());
        }
    }
}
