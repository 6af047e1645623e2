//! The symmetric group S_k in one-line notation.
//!
//! A permutation stores the images `[s(1), ..., s(k)]` with 1-based values.
//! Composition follows diagram stacking: `(a.compose(b))(i) = a(b(i))`, the
//! left factor sitting below the right one, so lengths add exactly when the
//! crossing counts do.  Reduced words use the adjacent transpositions
//! `s_i = (i, i+1)`, and the length of a permutation is its inversion
//! count, which equals the number of crossings of any reduced diagram.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., k}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity of S_k.
    pub fn identity(k: usize) -> Self {
        Self { images: (1..=k).collect() }
    }

    /// The adjacent transposition `s_i = (i, i+1)` in S_k, `1 <= i <= k-1`.
    pub fn adjacent_transposition(k: usize, i: usize) -> Self {
        assert!(i >= 1 && i < k, "s_{i} is not a generator of S_{k}");
        let mut images: Vec<usize> = (1..=k).collect();
        images.swap(i - 1, i);
        Self { images }
    }

    /// Build from one-line images; fails unless they are a bijection of
    /// `{1, ..., k}`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &v in &images {
            if v == 0 || v > k || seen[v - 1] {
                return Err(Error::InvalidPermutation {
                    reason: format!("{images:?} is not a permutation of 1..={k}"),
                });
            }
            seen[v - 1] = true;
        }
        Ok(Self { images })
    }

    /// The degree k.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a point, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// One-line images `[s(1), ..., s(k)]`.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// True for the identity.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Functional composition `(self . other)(i) = self(other(i))`; the
    /// stacked diagram has `other` on top and `self` below.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in composition");
        Permutation { images: other.images.iter().map(|&i| self.images[i - 1]).collect() }
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Coxeter length = inversion count = crossings of a reduced diagram.
    pub fn length(&self) -> usize {
        let k = self.degree();
        let mut count = 0;
        for i in 0..k {
            for j in i + 1..k {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Sign `(-1)^length`.
    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Largest descent position, i.e. the largest `i` with `s(i) > s(i+1)`.
    fn largest_descent(&self) -> Option<usize> {
        (1..self.degree()).rev().find(|&i| self.images[i - 1] > self.images[i])
    }

    /// A reduced word `[i_1, ..., i_l]` with
    /// `s_{i_1} . s_{i_2} . ... . s_{i_l} = self` (rightmost letter applied
    /// first) and `l = self.length()`, obtained by repeatedly peeling the
    /// largest descent off the right.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut cur = self.clone();
        let mut letters = Vec::with_capacity(cur.length());
        while let Some(i) = cur.largest_descent() {
            cur.images.swap(i - 1, i); // right-multiply by s_i
            letters.push(i);
        }
        letters.reverse();
        letters
    }

    /// Place-permutation action on a word: position `i` of the output holds
    /// `word[self^-1(i)]`.
    pub fn act_on_word<T: Clone>(&self, word: &[T]) -> Vec<T> {
        assert_eq!(word.len(), self.degree(), "word length mismatch");
        let inv = self.inverse();
        (1..=word.len()).map(|i| word[inv.apply(i) - 1].clone()).collect()
    }

    /// All of S_k in lexicographic one-line order.
    pub fn all(k: usize) -> Vec<Permutation> {
        (1..=k)
            .permutations(k)
            .map(|images| Permutation { images })
            .collect()
    }

    /// Parse `[3,5,6,1,4,2]` (one-line) or `(1 3 6 2 5 4)(7 8)` (cycles) as
    /// an element of S_k.
    pub fn parse(input: &str, k: usize) -> Result<Self> {
        let trimmed = input.trim_start();
        let base = input.len() - trimmed.len();
        if trimmed.starts_with('(') {
            return Self::parse_cycles(input, k);
        }
        let p = Self::parse_one_line(input)?;
        if p.degree() != k {
            return Err(Error::parse(
                base,
                format!("permutation has degree {} but degree {k} is required", p.degree()),
            ));
        }
        Ok(p)
    }

    /// Parse one-line notation `[3,5,6,1,4,2]`.
    pub fn parse_one_line(input: &str) -> Result<Self> {
        let mut cur = crate::scalar::parse::Cursor::new(input);
        cur.skip_ws();
        cur.expect('[')?;
        let mut images = Vec::new();
        loop {
            cur.skip_ws();
            let start = cur.pos;
            let v = cur.parse_int()?;
            if v < 1 {
                return Err(Error::parse(start, "entries must be positive"));
            }
            images.push(v as usize);
            cur.skip_ws();
            if cur.eat(']') {
                break;
            }
            cur.expect(',')?;
        }
        if !cur.at_end() {
            return Err(Error::parse(cur.pos, "unexpected trailing input"));
        }
        Self::from_images(images)
    }

    fn parse_cycles(input: &str, k: usize) -> Result<Self> {
        let mut cur = crate::scalar::parse::Cursor::new(input);
        let mut images: Vec<usize> = (1..=k).collect();
        let mut used = vec![false; k];
        cur.skip_ws();
        while cur.eat('(') {
            let mut cycle = Vec::new();
            loop {
                cur.skip_ws();
                if cur.eat(')') {
                    break;
                }
                let start = cur.pos;
                let v = cur.parse_int()?;
                if v < 1 || v as usize > k {
                    return Err(Error::parse(start, format!("entry {v} outside 1..={k}")));
                }
                let v = v as usize;
                if used[v - 1] {
                    return Err(Error::parse(start, format!("entry {v} repeated in cycles")));
                }
                used[v - 1] = true;
                cycle.push(v);
                cur.skip_ws();
                cur.eat(',');
            }
            for w in cycle.windows(2) {
                images[w[0] - 1] = w[1];
            }
            if cycle.len() > 1 {
                images[cycle[cycle.len() - 1] - 1] = cycle[0];
            }
            cur.skip_ws();
        }
        if !cur.at_end() {
            return Err(Error::parse(cur.pos, "unexpected trailing input"));
        }
        Self::from_images(images)
    }
}

impl fmt::Display for Permutation {
    /// One-line notation `[3,5,6,1,4,2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}
