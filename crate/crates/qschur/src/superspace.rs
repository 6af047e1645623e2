//! The graded tensor space V^{⊗k} over Q(q) and the two commuting actions.
//!
//! V is the natural (m+n)-dimensional super vector space with even basis
//! letters `1..m` (written `t_i`) and odd letters `m+1..m+n` (written
//! `u_j`, displayed `j~`).  This module houses:
//!
//! * the Ř-matrix on V⊗V and its slot-wise copies `r_j`, which extend to
//!   the Hecke algebra action `hecke_act` (the generator `T_{s_j}` acts as
//!   `r_j`);
//! * the quantum superalgebra generator actions `act_e`, `act_f`,
//!   `act_qh`, obtained from the fundamental matrices through the iterated
//!   coproduct with all Koszul signs made explicit;
//! * weights, contents, and the classical (q = 1) graded place permutation
//!   that the Hecke action degenerates to.
//!
//! Sign conventions follow the two graded rules
//! `(X⊗Y)(v⊗w) = (-1)^{p(Y)p(v)} Xv⊗Yw` and
//! `(X₁⊗X₂)(Y₁⊗Y₂) = (-1)^{p(X₂)p(Y₁)} X₁Y₁⊗X₂Y₂`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use itertools::Itertools;
use num_traits::{One, Signed};
use serde_json::json;

use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::perm::Permutation;
use crate::scalar::{LaurentPolynomial, Rational, RationalFunction};
use crate::tableau::Weight;

/// An integral coweight `h = Σ c_i E_{i,i}`, stored as its coordinates.
/// `q^h` acts diagonally on basis letters with exponent `c_letter`.
pub type CartanElement = Vec<i64>;

/// Root data of gl(m,n): dimensions, parities, symmetrizers `d_i`, the
/// distinguished coweights `H_i`, and the Cartan pairings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootData {
    m: usize,
    n: usize,
}

impl RootData {
    pub fn new(m: usize, n: usize) -> Self {
        assert!(m >= 1 && n >= 1, "both block sizes must be positive");
        Self { m, n }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of V.
    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    /// Number of simple generators `E_i`/`F_i`.
    pub fn rank(&self) -> usize {
        self.m + self.n - 1
    }

    /// The symmetrizing sign `d_i`: +1 through the even block boundary,
    /// -1 past it.
    pub fn d(&self, i: usize) -> i64 {
        assert!(i >= 1 && i <= self.rank(), "generator index out of range");
        if i <= self.m {
            1
        } else {
            -1
        }
    }

    /// Parity of a basis letter: 0 for `1..m`, 1 for the odd letters.
    pub fn letter_parity(&self, a: usize) -> usize {
        assert!(a >= 1 && a <= self.dim(), "letter out of range");
        usize::from(a > self.m)
    }

    /// Parity of the generators `E_i`, `F_i`: odd exactly at the boundary
    /// index m.
    pub fn generator_parity(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.rank(), "generator index out of range");
        usize::from(i == self.m)
    }

    /// The coweight `H_i`: `E_{i,i} - E_{i+1,i+1}` away from the boundary
    /// and `E_{m,m} + E_{m+1,m+1}` at it.
    pub fn h_i(&self, i: usize) -> CartanElement {
        assert!(i >= 1 && i <= self.rank(), "generator index out of range");
        let mut coords = vec![0; self.dim()];
        coords[i - 1] = 1;
        coords[i] = if i == self.m { 1 } else { -1 };
        coords
    }

    /// The coweight of `k_i = q^{d_i H_i}`.
    pub fn k_i(&self, i: usize) -> CartanElement {
        let d = self.d(i);
        self.h_i(i).into_iter().map(|c| d * c).collect()
    }

    /// The pairing `⟨h, α_j⟩` of a coweight against the simple root
    /// `α_j = ε_j − ε_{j+1}`.
    pub fn alpha_pairing(&self, h: &[i64], j: usize) -> i64 {
        assert!(j >= 1 && j <= self.rank(), "root index out of range");
        h[j - 1] - h[j]
    }

    /// Cartan matrix entry `a_ij = ⟨H_i, α_j⟩`.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.alpha_pairing(&self.h_i(i), j)
    }

    /// All basis index tuples of V^{⊗k} in lexicographic order.
    pub fn basis_tuples(&self, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        (0..k)
            .map(|_| 1..=self.dim())
            .multi_cartesian_product()
            .collect()
    }

    /// The basis vector of one index tuple.
    pub fn basis_vector(&self, tuple: &[usize]) -> TensorVector {
        let mut v = TensorVector::zero(self.m, self.n, tuple.len());
        for &a in tuple {
            assert!(a >= 1 && a <= self.dim(), "letter out of range");
        }
        v.add_term(tuple.to_vec(), RationalFunction::one());
        v
    }

    /// Ř applied to one basis pair `b_a ⊗ b_b`, as (image pair, coefficient)
    /// terms: `q^2` on a repeated even letter, `-1` on a repeated odd
    /// letter, and for distinct letters the graded exchange
    /// `(-1)^{p(a)p(b)} q · b_b⊗b_a`, plus `(q^2-1) · b_a⊗b_b` when a < b.
    pub fn rcheck_apply(&self, a: usize, b: usize) -> Vec<((usize, usize), RationalFunction)> {
        let q2 = RationalFunction::q_pow(2);
        if a == b {
            let scale = if a <= self.m { q2 } else { -RationalFunction::one() };
            return vec![((a, b), scale)];
        }
        let mut q = RationalFunction::q();
        if self.letter_parity(a) == 1 && self.letter_parity(b) == 1 {
            q = -q;
        }
        let mut terms = vec![((b, a), q)];
        if a < b {
            terms.push(((a, b), &q2 - &RationalFunction::one()));
        }
        terms
    }

    /// The (m+n)² × (m+n)² matrix of Ř; the pair `(a,b)` is the basis
    /// index `(a-1)(m+n) + (b-1)`, and columns hold images.
    pub fn rcheck_matrix(&self) -> Vec<Vec<RationalFunction>> {
        let d = self.dim();
        let idx = |a: usize, b: usize| (a - 1) * d + (b - 1);
        let mut mat = vec![vec![RationalFunction::zero(); d * d]; d * d];
        for a in 1..=d {
            for b in 1..=d {
                for ((x, y), c) in self.rcheck_apply(a, b) {
                    mat[idx(x, y)][idx(a, b)] = c;
                }
            }
        }
        mat
    }

    /// `r_j`: Ř acting on slots j and j+1.  Ř is an even operator, so no
    /// Koszul sign arises from the passed-over slots.
    pub fn r_apply(&self, v: &TensorVector, j: usize) -> TensorVector {
        assert!(j >= 1 && j + 1 <= v.k, "slot out of range");
        let mut out = TensorVector::zero(self.m, self.n, v.k);
        for (tuple, c) in &v.terms {
            for ((x, y), coeff) in self.rcheck_apply(tuple[j - 1], tuple[j]) {
                let mut t = tuple.clone();
                t[j - 1] = x;
                t[j] = y;
                out.add_term(t, c * &coeff);
            }
        }
        out
    }

    /// The Hecke algebra action: the generator `T_{s_j}` acts as `r_j`, a
    /// basis element through any reduced word, and the action extends
    /// linearly.
    pub fn hecke_act(&self, a: &HeckeElement, v: &TensorVector) -> TensorVector {
        assert_eq!(a.rank(), v.k, "rank mismatch between element and tensor");
        let mut out = TensorVector::zero(self.m, self.n, v.k);
        for (w, c) in a.terms() {
            let mut acc = v.clone();
            for &j in w.reduced_word().iter().rev() {
                acc = self.r_apply(&acc, j);
            }
            out = &out + &acc.scaled(c);
        }
        out
    }

    /// Shared body of the four coproduct actions: replace `from` by `to`
    /// in each slot in turn, scaling by `q^(exponent of the group-like
    /// companions)` and by the Koszul sign of moving an odd operator past
    /// the earlier slots.
    fn slotwise_action(
        &self,
        v: &TensorVector,
        from: usize,
        to: usize,
        op_parity: usize,
        before_exp: &dyn Fn(usize) -> i64,
        after_exp: &dyn Fn(usize) -> i64,
    ) -> TensorVector {
        let mut out = TensorVector::zero(self.m, self.n, v.k);
        for (tuple, c) in &v.terms {
            for j in 0..v.k {
                if tuple[j] != from {
                    continue;
                }
                let mut exp = 0;
                let mut parity_before = 0;
                for (l, &a) in tuple.iter().enumerate() {
                    if l < j {
                        exp += before_exp(a);
                        parity_before += self.letter_parity(a);
                    } else if l > j {
                        exp += after_exp(a);
                    }
                }
                let mut coeff = c * &RationalFunction::q_pow(exp);
                if op_parity == 1 && parity_before % 2 == 1 {
                    coeff = -coeff;
                }
                let mut t = tuple.clone();
                t[j] = to;
                out.add_term(t, coeff);
            }
        }
        out
    }

    /// The raising generator `E_i` on V^{⊗k}: the fundamental matrix
    /// `E_{i,i+1}` in one slot with `k_i^{-1}` on all later slots
    /// (coproduct `Δ(E_i) = E_i ⊗ k_i^{-1} + 1 ⊗ E_i`, iterated).
    pub fn act_e(&self, i: usize, v: &TensorVector) -> TensorVector {
        let ki = self.k_i(i);
        self.slotwise_action(
            v,
            i + 1,
            i,
            self.generator_parity(i),
            &|_| 0,
            &|a| -ki[a - 1],
        )
    }

    /// The lowering generator `F_i`: the fundamental matrix `E_{i+1,i}` in
    /// one slot with `k_i` on all earlier slots (coproduct
    /// `Δ(F_i) = F_i ⊗ 1 + k_i ⊗ F_i`, iterated).
    pub fn act_f(&self, i: usize, v: &TensorVector) -> TensorVector {
        let ki = self.k_i(i);
        self.slotwise_action(
            v,
            i,
            i + 1,
            self.generator_parity(i),
            &|a| ki[a - 1],
            &|_| 0,
        )
    }

    /// Classical (q = 1) raising action: `E_{i,i+1}` through the graded
    /// coproduct with no group-like factors.
    pub fn classical_act_e(&self, i: usize, v: &TensorVector) -> TensorVector {
        self.slotwise_action(v, i + 1, i, self.generator_parity(i), &|_| 0, &|_| 0)
    }

    /// Classical (q = 1) lowering action: `E_{i+1,i}` likewise.
    pub fn classical_act_f(&self, i: usize, v: &TensorVector) -> TensorVector {
        self.slotwise_action(v, i, i + 1, self.generator_parity(i), &|_| 0, &|_| 0)
    }

    /// `q^h` for a coweight h: group-like, so a basis tuple is scaled by
    /// q to the sum of its letters' coordinates in h.
    pub fn act_qh(&self, h: &[i64], v: &TensorVector) -> TensorVector {
        assert_eq!(h.len(), self.dim(), "coweight has wrong length");
        let mut out = TensorVector::zero(self.m, self.n, v.k);
        for (tuple, c) in &v.terms {
            let exp: i64 = tuple.iter().map(|&a| h[a - 1]).sum();
            out.add_term(tuple.clone(), c * &RationalFunction::q_pow(exp));
        }
        out
    }

    /// The content weight of a vector: occurrence counts of each letter.
    /// All tuples in the support must agree; the zero vector has no
    /// weight and is rejected by assertion.
    pub fn weight_of(&self, v: &TensorVector) -> Result<Weight> {
        let content = |tuple: &[usize]| {
            let mut counts = vec![0i64; self.dim()];
            for &a in tuple {
                counts[a - 1] += 1;
            }
            counts
        };
        let mut tuples = v.terms.keys();
        let first = tuples.next().expect("weight of the zero vector is undefined");
        let first = content(first);
        for tuple in tuples {
            let other = content(tuple);
            if other != first {
                return Err(Error::InhomogeneousWeight { first, second: other });
            }
        }
        Ok(Weight(first))
    }

    /// The graded place permutation Ψ(σ): slot `l` of the image holds the
    /// letter from slot `σ^{-1}(l)`, with one sign flip for every
    /// inversion of σ across a pair of odd letters.  This is the q = 1
    /// limit of the Hecke action.
    pub fn graded_place_permutation(&self, sigma: &Permutation, v: &TensorVector) -> TensorVector {
        assert_eq!(sigma.degree(), v.k, "degree mismatch");
        let mut out = TensorVector::zero(self.m, self.n, v.k);
        for (tuple, c) in &v.terms {
            let permuted = sigma.act_on_word(tuple);
            let mut sign = 1;
            for i in 0..v.k {
                for j in i + 1..v.k {
                    if sigma.apply(i + 1) > sigma.apply(j + 1)
                        && self.letter_parity(tuple[i]) == 1
                        && self.letter_parity(tuple[j]) == 1
                    {
                        sign = -sign;
                    }
                }
            }
            let coeff = if sign < 0 { -c } else { c.clone() };
            out.add_term(permuted, coeff);
        }
        out
    }
}

/// A vector in V^{⊗k}: a sparse map from basis index tuples to Q(q)
/// coefficients.  Zero coefficients are never stored, so structural
/// equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector {
    m: usize,
    n: usize,
    k: usize,
    terms: BTreeMap<Vec<usize>, RationalFunction>,
}

impl TensorVector {
    pub fn zero(m: usize, n: usize, k: usize) -> Self {
        Self { m, n, k, terms: BTreeMap::new() }
    }

    /// Tensor rank k.
    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Support with coefficients, in lexicographic tuple order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &RationalFunction)> {
        self.terms.iter()
    }

    /// Coefficient of one basis tuple (zero when absent).
    pub fn coeff(&self, tuple: &[usize]) -> RationalFunction {
        self.terms.get(tuple).cloned().unwrap_or_else(RationalFunction::zero)
    }

    /// Leading (lexicographically smallest) support tuple, if any.
    pub fn leading_tuple(&self) -> Option<&Vec<usize>> {
        self.terms.keys().next()
    }

    pub fn add_term(&mut self, tuple: Vec<usize>, c: RationalFunction) {
        assert_eq!(tuple.len(), self.k, "tuple length mismatch");
        debug_assert!(tuple.iter().all(|&a| a >= 1 && a <= self.m + self.n));
        if c.is_zero() {
            return;
        }
        match self.terms.entry(tuple) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Scalar multiple.
    pub fn scaled(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero(self.m, self.n, self.k);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.clone(), a * c)).collect();
        Self { m: self.m, n: self.n, k: self.k, terms }
    }

    /// Specialize every coefficient at a rational point.
    pub fn evaluate(&self, point: &Rational) -> Result<Self> {
        let mut out = Self::zero(self.m, self.n, self.k);
        for (t, c) in &self.terms {
            out.add_term(t.clone(), RationalFunction::constant(c.evaluate(point)?));
        }
        Ok(out)
    }

    /// JSON form: `[{"tuple": [..], "num": [..], "den": [..]}, ..]` in
    /// tuple order.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(t, c)| {
                let mut obj = c.to_json();
                obj["tuple"] = json!(t);
                obj
            })
            .collect();
        json!(items)
    }
}

impl Add<&TensorVector> for &TensorVector {
    type Output = TensorVector;
    fn add(self, rhs: &TensorVector) -> TensorVector {
        assert_eq!((self.m, self.n, self.k), (rhs.m, rhs.n, rhs.k), "shape mismatch");
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }
}

impl Sub<&TensorVector> for &TensorVector {
    type Output = TensorVector;
    fn sub(self, rhs: &TensorVector) -> TensorVector {
        assert_eq!((self.m, self.n, self.k), (rhs.m, rhs.n, rhs.k), "shape mismatch");
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), -c);
        }
        out
    }
}

impl Neg for &TensorVector {
    type Output = TensorVector;
    fn neg(self) -> TensorVector {
        let terms = self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect();
        TensorVector { m: self.m, n: self.n, k: self.k, terms }
    }
}

crate::forward_binop!(TensorVector, Add, add);
crate::forward_binop!(TensorVector, Sub, sub);
crate::forward_unop!(TensorVector, Neg, neg);

/// Sign and magnitude prefix for one displayed coefficient: a monomial
/// numerator donates its sign to the join; `±1` and pure powers of q
/// render bare, everything else is parenthesized.
fn coeff_prefix(c: &RationalFunction) -> (bool, String) {
    let num = c.numerator();
    let single = num.terms().count() == 1;
    let (negative, num_abs) = if single {
        let (e, coeff) = num.terms().next().map(|(e, c)| (e, c.clone())).unwrap();
        if coeff.is_negative() {
            (true, LaurentPolynomial::monomial(-coeff, e))
        } else {
            (false, num.clone())
        }
    } else {
        (false, num.clone())
    };
    let den = c.denominator();
    let prefix = if !den.is_one() {
        format!("({num_abs})/({den})*")
    } else if num_abs.is_one() {
        String::new()
    } else if single && num_abs.leading_coeff().is_one() {
        let e = num_abs.max_exponent().unwrap();
        if e == 1 {
            "q*".to_string()
        } else {
            format!("q^{e}*")
        }
    } else {
        format!("({num_abs})*")
    };
    (negative, prefix)
}

impl fmt::Display for TensorVector {
    /// Terms in tuple order joined by signs: letters `1..m` even,
    /// `1~..n~` odd, slots joined by `*`; e.g. `1*1~ - q*1~*1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (tuple, c)) in self.terms.iter().enumerate() {
            let (negative, prefix) = coeff_prefix(c);
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let letters = tuple
                .iter()
                .map(|&a| {
                    if a <= self.m {
                        a.to_string()
                    } else {
                        format!("{}~", a - self.m)
                    }
                })
                .join("*");
            write!(f, "{prefix}{letters}")?;
        }
        Ok(())
    }
}
