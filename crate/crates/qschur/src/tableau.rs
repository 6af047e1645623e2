//! Partitions, (m,n)-hook shapes and standard Young tableaux.
//!
//! A partition of k whose diagram avoids the cell (m+1, n+1) — equivalently
//! `lambda_{m+1} <= n` — is an (m,n)-hook shape.  Hook shapes split into an
//! upper part `lambda^1` (the first m rows) and a lower part `lambda^2`
//! (the conjugate of what remains), and index exactly the irreducible
//! summands of the k-th tensor power of the natural gl(m,n) super space.
//! Standard tableaux of shape lambda enumerate both a basis of the
//! symmetric group irreducible and the copies of the summand; the module
//! also provides the combinatorial (m,n)-semistandard dimension count used
//! as an independent oracle for exact rank computations.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Build from parts; trailing zeros are stripped and the rest must be
    /// weakly decreasing and positive.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition {
                    reason: format!("parts {parts:?} are not weakly decreasing"),
                });
            }
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                reason: format!("parts {parts:?} contain an interior zero"),
            });
        }
        Ok(Self { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (nonzero) parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The i-th part, 1-based; zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// The parts as a slice.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The conjugate partition: `conj_j = #{i : lambda_i >= j}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// True when the diagram avoids the cell (m+1, n+1).
    pub fn is_hook(&self, m: usize, n: usize) -> bool {
        self.part(m + 1) <= n
    }

    /// Split an (m,n)-hook shape into its upper partition (first m rows)
    /// and lower partition (conjugate of the remaining rows).
    pub fn hook_split(&self, m: usize, n: usize) -> Result<HookSplit> {
        if !self.is_hook(m, n) {
            return Err(Error::NotHook { lambda: self.to_string(), m, n });
        }
        let lambda1 = Partition::new(self.parts.iter().copied().take(m).collect())
            .expect("prefix of a partition is a partition");
        let below = Partition::new(self.parts.iter().copied().skip(m).collect())
            .expect("suffix of a partition is a partition");
        let lambda2 = below.conjugate();
        // Compatibility constraints of the hook-split index set: they are
        // automatic for hook shapes, so a violation is an internal bug.
        assert!(lambda1.num_parts() <= m, "upper split too long");
        assert!(lambda2.num_parts() <= n, "lower split too long");
        assert!(lambda1.part(m) >= lambda2.num_parts(), "incompatible hook split");
        Ok(HookSplit { lambda1, lambda2 })
    }

    /// All partitions of k in reverse-lexicographic order, largest first:
    /// `(k), (k-1,1), ..., (1,...,1)`.
    pub fn all(k: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                prefix.push(p);
                rec(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(k, k, &mut Vec::new(), &mut out);
        out
    }

    /// All (m,n)-hook shapes of k, in the order of [`Partition::all`].
    pub fn hooks(m: usize, n: usize, k: usize) -> Vec<Partition> {
        Self::all(k).into_iter().filter(|p| p.is_hook(m, n)).collect()
    }

    /// All partitions obtained by adding a single box.
    pub fn with_added_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            if i == 0 || self.parts[i - 1] > self.parts[i] {
                let mut parts = self.parts.clone();
                parts[i] += 1;
                out.push(Partition { parts });
            }
        }
        let mut parts = self.parts.clone();
        parts.push(1);
        out.push(Partition { parts });
        out
    }

    /// Parse the text form `4,2,2,1,1`.
    pub fn parse(input: &str) -> Result<Self> {
        let mut cur = crate::scalar::parse::Cursor::new(input);
        let mut parts = Vec::new();
        loop {
            cur.skip_ws();
            let start = cur.pos;
            let v = cur.parse_int()?;
            if v < 1 {
                return Err(Error::parse(start, "parts must be positive"));
            }
            parts.push(v as usize);
            cur.skip_ws();
            if !cur.eat(',') {
                break;
            }
        }
        if !cur.at_end() {
            return Err(Error::parse(cur.pos, "unexpected trailing input"));
        }
        Self::new(parts)
    }
}

impl fmt::Display for Partition {
    /// Comma-joined parts, `4,2,2,1,1`; the empty partition prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", self.parts.iter().join(","))
        }
    }
}

/// The two halves of an (m,n)-hook shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookSplit {
    /// First m rows of the shape.
    pub lambda1: Partition,
    /// Conjugate of the rows below the m-th.
    pub lambda2: Partition,
}

/// A gl(m,n) weight in the coordinates `(eps_1..eps_m, delta_1..delta_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight(pub Vec<i64>);

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// The highest weight attached to an (m,n)-hook shape:
/// `(lambda_1, ..., lambda_m, lambda^2_1, ..., lambda^2_n)`.
pub fn weight_of_partition(shape: &Partition, m: usize, n: usize) -> Result<Weight> {
    let split = shape.hook_split(m, n)?;
    let mut coords = Vec::with_capacity(m + n);
    for i in 1..=m {
        coords.push(split.lambda1.part(i) as i64);
    }
    for j in 1..=n {
        coords.push(split.lambda2.part(j) as i64);
    }
    Ok(Weight(coords))
}

/// Number of (m,n)-semistandard fillings of a hook shape: entries from the
/// ordered alphabet `1 < ... < m < 1~ < ... < n~`, rows and columns weakly
/// increasing, unbarred letters strict down columns, barred letters strict
/// along rows.  This is the dimension of the irreducible summand and serves
/// as the independent oracle for exact rank computations.
pub fn hook_schur_dimension(shape: &Partition, m: usize, n: usize) -> Result<u64> {
    if !shape.is_hook(m, n) {
        return Err(Error::NotHook { lambda: shape.to_string(), m, n });
    }
    // Cells in row-major order; letters are 0..m+n with barred = m..m+n.
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    fn count(
        cells: &[(usize, usize)],
        fill: &mut Vec<Vec<usize>>,
        next: usize,
        m: usize,
        alphabet: usize,
    ) -> u64 {
        if next == cells.len() {
            return 1;
        }
        let (r, c) = cells[next];
        let mut total = 0;
        for v in 0..alphabet {
            if c > 0 {
                let left = fill[r][c - 1];
                if v < left || (v == left && v >= m) {
                    continue;
                }
            }
            if r > 0 && fill[r - 1].len() > c {
                let top = fill[r - 1][c];
                if v < top || (v == top && v < m) {
                    continue;
                }
            }
            fill[r].push(v);
            total += count(cells, fill, next + 1, m, alphabet);
            fill[r].pop();
        }
        total
    }
    let mut fill: Vec<Vec<usize>> = vec![Vec::new(); shape.num_parts()];
    Ok(count(&cells, &mut fill, 0, m, m + n))
}

/// A standard Young tableau: entries 1..k, strictly increasing along rows
/// and down columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Build from rows, validating shape and standardness.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect()).map_err(|_| {
            Error::InvalidTableau { reason: "row lengths are not weakly decreasing".into() }
        })?;
        if shape.num_parts() != rows.len() {
            return Err(Error::InvalidTableau { reason: "empty row".into() });
        }
        let k = shape.size();
        let mut seen = vec![false; k];
        for row in &rows {
            for &e in row {
                if e == 0 || e > k || seen[e - 1] {
                    return Err(Error::InvalidTableau {
                        reason: format!("entries are not a permutation of 1..={k}"),
                    });
                }
                seen[e - 1] = true;
            }
        }
        for row in &rows {
            for w in row.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::InvalidTableau {
                        reason: format!("row {row:?} is not strictly increasing"),
                    });
                }
            }
        }
        for r in 1..rows.len() {
            for c in 0..rows[r].len() {
                if rows[r - 1][c] >= rows[r][c] {
                    return Err(Error::InvalidTableau {
                        reason: format!("column {} is not strictly increasing", c + 1),
                    });
                }
            }
        }
        Ok(Self { shape, rows })
    }

    /// The underlying shape.
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Rows of entries.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at 0-based `(row, col)`.
    pub fn entry(&self, r: usize, c: usize) -> usize {
        self.rows[r][c]
    }

    /// 0-based cell of an entry.
    pub fn cell_of(&self, entry: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&e| e == entry) {
                return (r, c);
            }
        }
        panic!("entry {entry} not in tableau");
    }

    /// Row-filled tableau: `1..lambda_1` in the first row, and so on.
    pub fn s_plus(shape: &Partition) -> Self {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        Self { shape: shape.clone(), rows }
    }

    /// Column-filled tableau: `1..conj_1` down the first column, and so on.
    pub fn s_minus(shape: &Partition) -> Self {
        let conj = shape.conjugate();
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
        let mut next = 1;
        for c in 0..shape.part(1) {
            for r in 0..conj.part(c + 1) {
                rows[r][c] = next;
                next += 1;
            }
        }
        Self { shape: shape.clone(), rows }
    }

    /// The permutation carrying `from` to `to` cellwise:
    /// `sigma(from(cell)) = to(cell)`.  Panics on a shape mismatch.
    pub fn sigma_between(from: &StandardTableau, to: &StandardTableau) -> Permutation {
        assert_eq!(from.shape, to.shape, "shape mismatch between tableaux");
        let k = from.size();
        let mut images = vec![0; k];
        for (r, row) in from.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                images[e - 1] = to.rows[r][c];
            }
        }
        Permutation::from_images(images).expect("both tableaux are bijective fillings")
    }

    /// All permutations preserving each row setwise, sorted; fails when the
    /// group order exceeds `bound`.
    pub fn row_group(&self, bound: u128) -> Result<Vec<Permutation>> {
        subgroup_from_blocks(self.size(), &self.rows, bound)
    }

    /// All permutations preserving each column setwise, sorted; fails when
    /// the group order exceeds `bound`.
    pub fn column_group(&self, bound: u128) -> Result<Vec<Permutation>> {
        let cols: Vec<Vec<usize>> = (0..self.shape.part(1))
            .map(|c| self.rows.iter().filter_map(|row| row.get(c).copied()).collect())
            .collect();
        subgroup_from_blocks(self.size(), &cols, bound)
    }

    /// All standard tableaux of a shape, sorted ascending in the row-major
    /// lexicographic order of [`StandardTableau::compare`].
    pub fn enumerate(shape: &Partition) -> Vec<StandardTableau> {
        let k = shape.size();
        let mut fill: Vec<Vec<usize>> = vec![Vec::new(); shape.num_parts()];
        let mut out = Vec::new();
        fn rec(
            shape: &Partition,
            fill: &mut Vec<Vec<usize>>,
            entry: usize,
            k: usize,
            out: &mut Vec<StandardTableau>,
        ) {
            if entry > k {
                out.push(StandardTableau { shape: shape.clone(), rows: fill.clone() });
                return;
            }
            for r in 0..shape.num_parts() {
                let filled = fill[r].len();
                if filled < shape.part(r + 1) && (r == 0 || filled < fill[r - 1].len()) {
                    fill[r].push(entry);
                    rec(shape, fill, entry + 1, k, out);
                    fill[r].pop();
                }
            }
        }
        rec(shape, &mut fill, 1, k, &mut out);
        out.sort_by(|a, b| a.compare(b));
        out
    }

    /// Number of standard tableaux of a shape.
    pub fn count(shape: &Partition) -> u64 {
        Self::enumerate(shape).len() as u64
    }

    /// Row-major lexicographic comparison of two same-shape tableaux: the
    /// first differing entry decides.  Panics on a shape mismatch.
    pub fn compare(&self, other: &StandardTableau) -> Ordering {
        assert_eq!(self.shape, other.shape, "shape mismatch in tableau comparison");
        for (ra, rb) in self.rows.iter().zip(&other.rows) {
            for (a, b) in ra.iter().zip(rb) {
                if a != b {
                    return a.cmp(b);
                }
            }
        }
        Ordering::Equal
    }

    /// The letter word of the tableau: position `l` holds letter `i` when
    /// entry `l` lies in row `i <= m`, and the barred letter for column `j`
    /// (encoded as `m + j`) when it lies below row m.  Fails for non-hook
    /// shapes.
    pub fn word(&self, m: usize, n: usize) -> Result<Vec<usize>> {
        if !self.shape.is_hook(m, n) {
            return Err(Error::NotHook { lambda: self.shape.to_string(), m, n });
        }
        let mut word = vec![0; self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &entry) in row.iter().enumerate() {
                word[entry - 1] = if r < m { r + 1 } else { m + c + 1 };
            }
        }
        Ok(word)
    }

    /// Parse the text form `1,2,4/3,5` (rows joined by `/`).
    pub fn parse(input: &str) -> Result<Self> {
        let mut cur = crate::scalar::parse::Cursor::new(input);
        let mut rows = vec![Vec::new()];
        loop {
            cur.skip_ws();
            let start = cur.pos;
            let v = cur.parse_int()?;
            if v < 1 {
                return Err(Error::parse(start, "entries must be positive"));
            }
            rows.last_mut().unwrap().push(v as usize);
            cur.skip_ws();
            if cur.eat(',') {
                continue;
            }
            if cur.eat('/') {
                rows.push(Vec::new());
                continue;
            }
            break;
        }
        if !cur.at_end() {
            return Err(Error::parse(cur.pos, "unexpected trailing input"));
        }
        Self::new(rows)
    }
}

impl fmt::Display for StandardTableau {
    /// Rows joined by `/`, entries by `,`: `1,2,4/3,5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows.iter().map(|row| row.iter().join(",")).join("/");
        write!(f, "{rows}")
    }
}

/// Direct product of the symmetric groups on disjoint entry blocks, as
/// permutations of `{1..k}`, sorted; guarded by `bound` on the group order.
fn subgroup_from_blocks(
    k: usize,
    blocks: &[Vec<usize>],
    bound: u128,
) -> Result<Vec<Permutation>> {
    let mut order: u128 = 1;
    for b in blocks {
        order = order.saturating_mul(factorial(b.len()));
    }
    if order > bound {
        return Err(Error::GroupGuardExceeded { order, bound });
    }
    let arrangements: Vec<Vec<Vec<usize>>> = blocks
        .iter()
        .map(|b| b.iter().copied().permutations(b.len()).collect())
        .collect();
    let mut result = Vec::with_capacity(order as usize);
    let mut idx = vec![0usize; blocks.len()];
    loop {
        let mut images: Vec<usize> = (1..=k).collect();
        for (bi, block) in blocks.iter().enumerate() {
            for (j, &target) in arrangements[bi][idx[bi]].iter().enumerate() {
                images[block[j] - 1] = target;
            }
        }
        result.push(Permutation::from_images(images).expect("blocks are disjoint"));
        // Advance the mixed-radix index.
        let mut carry = true;
        for bi in (0..blocks.len()).rev() {
            if !carry {
                break;
            }
            idx[bi] += 1;
            if idx[bi] < arrangements[bi].len() {
                carry = false;
            } else {
                idx[bi] = 0;
            }
        }
        if carry {
            break;
        }
    }
    result.sort();
    Ok(result)
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn tab(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 2, 2, 1, 1]).conjugate(), p(&[5, 3, 1, 1]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugation_is_an_involution() {
        for k in 0..=8 {
            for lam in Partition::all(k) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn hook_membership_and_split() {
        assert!(p(&[4, 2, 2, 1, 1]).is_hook(2, 3));
        assert!(!p(&[2, 2]).is_hook(1, 1));
        let split = p(&[4, 2, 2, 1, 1]).hook_split(2, 3).unwrap();
        assert_eq!(split.lambda1, p(&[4, 2]));
        assert_eq!(split.lambda2, p(&[3, 1]));
        let split = p(&[1, 1]).hook_split(1, 1).unwrap();
        assert_eq!(split.lambda1, p(&[1]));
        assert_eq!(split.lambda2, p(&[1]));
        assert!(matches!(p(&[2, 2]).hook_split(1, 1), Err(Error::NotHook { .. })));
    }

    #[test]
    fn hooks_enumerate_in_reverse_lex_order() {
        assert_eq!(
            Partition::hooks(1, 1, 3),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
        assert_eq!(
            Partition::hooks(1, 1, 4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::hooks(2, 1, 4).len(), 5);
    }

    #[test]
    fn row_and_column_fillings() {
        assert_eq!(StandardTableau::s_plus(&p(&[2, 1])), tab(&[&[1, 2], &[3]]));
        assert_eq!(StandardTableau::s_minus(&p(&[2, 1])), tab(&[&[1, 3], &[2]]));
        assert_eq!(
            StandardTableau::s_plus(&p(&[3, 2])),
            tab(&[&[1, 2, 3], &[4, 5]])
        );
        assert_eq!(
            StandardTableau::s_minus(&p(&[3, 2])),
            tab(&[&[1, 3, 5], &[2, 4]])
        );
    }

    #[test]
    fn sigma_between_matches_cells() {
        let s = StandardTableau::s_plus(&p(&[2, 1]));
        let t = StandardTableau::s_minus(&p(&[2, 1]));
        let sigma = StandardTableau::sigma_between(&s, &t);
        assert_eq!(sigma.images(), &[1, 3, 2]);
        // sigma(S(cell)) = T(cell) for every cell.
        for (r, row) in s.rows().iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                assert_eq!(sigma.apply(e), t.entry(r, c));
            }
        }
        assert!(StandardTableau::sigma_between(&s, &s).is_identity());
    }

    #[test]
    fn row_and_column_groups() {
        let t = tab(&[&[1, 2, 4], &[3, 5]]);
        let rows = t.row_group(crate::DEFAULT_GROUP_GUARD).unwrap();
        let cols = t.column_group(crate::DEFAULT_GROUP_GUARD).unwrap();
        assert_eq!(rows.len(), 12); // 3! * 2!
        assert_eq!(cols.len(), 4); // 2! * 2! * 1!
        for g in &rows {
            // Each row is preserved setwise.
            for row in t.rows() {
                let mut mapped: Vec<usize> = row.iter().map(|&e| g.apply(e)).collect();
                mapped.sort_unstable();
                assert_eq!(&mapped, row);
            }
        }
        // The guard rejects oversized groups.
        let wide = StandardTableau::s_plus(&p(&[5]));
        assert!(matches!(
            wide.row_group(10),
            Err(Error::GroupGuardExceeded { order: 120, bound: 10 })
        ));
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(StandardTableau::enumerate(&p(&[2, 1])).len(), 2);
        assert_eq!(StandardTableau::enumerate(&p(&[2, 2])).len(), 2);
        assert_eq!(StandardTableau::enumerate(&p(&[3, 1])).len(), 3);
        assert_eq!(StandardTableau::enumerate(&p(&[1, 1, 1])).len(), 1);
        let tabs = StandardTableau::enumerate(&p(&[2, 1]));
        // Row filling is minimal: (1,2),(3) < (1,3),(2).
        assert_eq!(tabs[0], StandardTableau::s_plus(&p(&[2, 1])));
        assert_eq!(tabs[1], StandardTableau::s_minus(&p(&[2, 1])));
        assert_eq!(tabs[0].compare(&tabs[1]), Ordering::Less);
    }

    /// Independent oracle: the enumeration agrees with the hook length
    /// formula `k! / prod(hooks)`.
    #[test]
    fn enumeration_matches_hook_length_formula() {
        for k in 1..=6 {
            for lam in Partition::all(k) {
                let conj = lam.conjugate();
                let mut product: u64 = 1;
                for (r, &len) in lam.parts().iter().enumerate() {
                    for c in 0..len {
                        let hook = (len - c) + (conj.part(c + 1) - r) - 1;
                        product *= hook as u64;
                    }
                }
                let formula = factorial(k) as u64 / product;
                assert_eq!(StandardTableau::count(&lam), formula, "shape {lam}");
            }
        }
    }

    #[test]
    fn tableau_words() {
        // Row filling of (2,1) over (1,1): letters t1 t1~ ... : word 1,2,2?
        // s_plus rows (1,2),(3): entries 1,2 in row 1 -> letter 1; entry 3
        // in row 2 (below m=1), column 1 -> barred letter 2.
        let t = StandardTableau::s_plus(&p(&[2, 1]));
        assert_eq!(t.word(1, 1).unwrap(), vec![1, 1, 2]);
        // Column filling of (2,1): entries 1 (row 1), 2 (row 2 -> barred),
        // 3 (row 1).
        let t = StandardTableau::s_minus(&p(&[2, 1]));
        assert_eq!(t.word(1, 1).unwrap(), vec![1, 2, 1]);
        // The (2,3) example of shape (4,2,2,1,1): the tableau with rows
        // {1,3,5,9},{2,6},{4,8},{7},{10} has word
        // t1 t2 t1 u1 t1 t2 u1 u2 t1 u1.
        let t = tab(&[&[1, 3, 5, 9], &[2, 6], &[4, 8], &[7], &[10]]);
        assert_eq!(
            t.word(2, 3).unwrap(),
            vec![1, 2, 1, 3, 1, 2, 3, 4, 1, 3]
        );
        assert!(tab(&[&[1, 3], &[2, 4]]).word(1, 1).is_err());
    }

    #[test]
    fn weights_of_partitions() {
        assert_eq!(weight_of_partition(&p(&[2]), 1, 1).unwrap(), Weight(vec![2, 0]));
        assert_eq!(weight_of_partition(&p(&[1, 1]), 1, 1).unwrap(), Weight(vec![1, 1]));
        assert_eq!(
            weight_of_partition(&p(&[4, 2, 2, 1, 1]), 2, 3).unwrap(),
            Weight(vec![4, 2, 3, 1, 0])
        );
    }

    #[test]
    fn hook_schur_dimensions() {
        // (m,n) = (1,1): every hook of k has dimension 2.
        for k in 1..=5 {
            for lam in Partition::hooks(1, 1, k) {
                assert_eq!(hook_schur_dimension(&lam, 1, 1).unwrap(), 2, "shape {lam}");
            }
        }
        assert_eq!(hook_schur_dimension(&p(&[1]), 2, 1).unwrap(), 3);
        assert_eq!(hook_schur_dimension(&p(&[2]), 1, 1).unwrap(), 2);
        assert_eq!(hook_schur_dimension(&p(&[1, 1]), 1, 1).unwrap(), 2);
        assert!(hook_schur_dimension(&p(&[2, 2]), 1, 1).is_err());
    }

    /// The dimension identity sum_lambda d_lambda * dim = (m+n)^k holds with
    /// the combinatorial dimension count.
    #[test]
    fn dimension_identity_with_oracle() {
        for &(m, n) in &[(1usize, 1usize), (2, 1), (1, 2)] {
            for k in 1..=4usize {
                let total: u64 = Partition::hooks(m, n, k)
                    .iter()
                    .map(|lam| {
                        StandardTableau::count(lam) * hook_schur_dimension(lam, m, n).unwrap()
                    })
                    .sum();
                assert_eq!(total, ((m + n) as u64).pow(k as u32));
            }
        }
    }

    #[test]
    fn branching_by_added_boxes() {
        assert_eq!(p(&[1]).with_added_box(), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(
            p(&[2, 1]).with_added_box(),
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(Partition::parse("4,2,2,1,1").unwrap(), p(&[4, 2, 2, 1, 1]));
        assert_eq!(p(&[4, 2, 2, 1, 1]).to_string(), "4,2,2,1,1");
        assert!(Partition::parse("2,3").is_err());
        assert!(Partition::parse("2,,1").is_err());
        let t = StandardTableau::parse("1,2,4/3,5").unwrap();
        assert_eq!(t, tab(&[&[1, 2, 4], &[3, 5]]));
        assert_eq!(t.to_string(), "1,2,4/3,5");
        assert!(StandardTableau::parse("1,3/2,2").is_err());
        assert!(StandardTableau::parse("2,1/3").is_err());
        assert!(StandardTableau::parse("1,2/x").is_err());
        // Position of the bad byte is reported.
        match StandardTableau::parse("1,2/x").unwrap_err() {
            Error::Parse { position, .. } => assert_eq!(position, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn validation_rejects_non_standard_fillings() {
        assert!(StandardTableau::new(vec![vec![1, 2], vec![3, 4], vec![5, 6, 7]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 1], vec![2]]).is_err());
        assert!(StandardTableau::new(vec![vec![2, 3], vec![1]]).is_err());
    }
}
