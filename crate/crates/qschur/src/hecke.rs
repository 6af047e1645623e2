//! The Iwahori-Hecke algebra H_k(q^2) over Q(q).
//!
//! Elements are stored in the permutation basis `{T_w : w in S_k}`, which
//! makes equality canonical and scalar extraction exact.  The generator
//! `T_{s_i}` satisfies the quadratic relation
//! `(T_{s_i} + 1)(T_{s_i} - q^2) = 0` together with the braid relations,
//! so `T_w` is well defined as the product of generators along any reduced
//! word of w.  On top of the basis arithmetic the module builds, for each
//! partition shape, the row quasi-symmetrizer `e_plus` and column
//! quasi-anti-symmetrizer `e_minus`, and for each standard tableau T the
//! conjugated product `x_T` and its normalization, the q-Young idempotent
//! `y_T = x_T / xi` with `x_T^2 = xi * x_T`.
//!
//! The `classical` submodule holds the q = 1 shadow: the rational group
//! algebra of S_k and the classical Young symmetrizer product that `x_T`
//! specializes to.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use serde_json::json;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::scalar::{Rational, RationalFunction};
use crate::tableau::{Partition, StandardTableau};

/// An element of H_k(q^2) in the permutation basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    k: usize,
    terms: BTreeMap<Permutation, RationalFunction>,
}

impl HeckeElement {
    /// The zero element of H_k.
    pub fn zero(k: usize) -> Self {
        Self { k, terms: BTreeMap::new() }
    }

    /// The unit `T_id`.
    pub fn one(k: usize) -> Self {
        Self::basis(&Permutation::identity(k))
    }

    /// The basis element `T_w`.
    pub fn basis(w: &Permutation) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w.clone(), RationalFunction::one());
        Self { k: w.degree(), terms }
    }

    /// The generator `T_{s_i}`, `1 <= i <= k-1`.
    pub fn generator(i: usize, k: usize) -> Self {
        Self::basis(&Permutation::adjacent_transposition(k, i))
    }

    /// `T_w` — by definition of the basis; equal to the product of
    /// generators along any reduced word of w.
    pub fn h_of(w: &Permutation) -> Self {
        Self::basis(w)
    }

    /// The rank k of the algebra this element lives in.
    pub fn rank(&self) -> usize {
        self.k
    }

    /// Basis support with coefficients, in permutation order.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &RationalFunction)> {
        self.terms.iter()
    }

    /// Coefficient of `T_w` (zero when absent).
    pub fn coeff(&self, w: &Permutation) -> RationalFunction {
        self.terms.get(w).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Permutation, c: RationalFunction) {
        assert_eq!(w.degree(), self.k, "rank mismatch in Hecke term");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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
            return Self::zero(self.k);
        }
        let terms = self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect();
        Self { k: self.k, terms }
    }

    /// The two-sided inverse of the basis element `T_w`: the product of
    /// generator inverses `T_{s_i}^{-1} = q^{-2} T_{s_i} + (q^{-2} - 1)`
    /// along the reversed reduced word of w.
    pub fn invert_basis(w: &Permutation) -> Self {
        let k = w.degree();
        let mut acc = Self::one(k);
        for &i in w.reduced_word().iter().rev() {
            let mut gen_inv = Self::generator(i, k).scaled(&RationalFunction::q_pow(-2));
            gen_inv.add_term(
                Permutation::identity(k),
                &RationalFunction::q_pow(-2) - &RationalFunction::one(),
            );
            acc = &acc * &gen_inv;
        }
        acc
    }

    /// Row quasi-symmetrizer of a shape: the sum of `T_sigma` over the row
    /// group of the row-filled tableau.  Satisfies
    /// `e_plus * T_sigma = T_sigma * e_plus = q^{2 len(sigma)} * e_plus`
    /// for every sigma in that row group.
    pub fn e_plus(shape: &Partition, bound: u128) -> Result<Self> {
        let k = shape.size();
        let mut out = Self::zero(k);
        for sigma in StandardTableau::s_plus(shape).row_group(bound)? {
            out.add_term(sigma, RationalFunction::one());
        }
        Ok(out)
    }

    /// Column quasi-anti-symmetrizer of a shape: the sum of
    /// `(-q^2)^{-len(sigma)} T_sigma` over the column group of the
    /// column-filled tableau.  Satisfies
    /// `e_minus * T_sigma = T_sigma * e_minus = (-1)^{len(sigma)} * e_minus`
    /// for every sigma in that column group.
    pub fn e_minus(shape: &Partition, bound: u128) -> Result<Self> {
        let k = shape.size();
        let mut out = Self::zero(k);
        for sigma in StandardTableau::s_minus(shape).column_group(bound)? {
            let len = sigma.length() as i64;
            let mut c = RationalFunction::q_pow(-2 * len);
            if len % 2 != 0 {
                c = -c;
            }
            out.add_term(sigma, c);
        }
        Ok(out)
    }

    /// The quasi-idempotent attached to a standard tableau T:
    /// `h(s-) e_minus h(s-)^{-1} h(s+) e_plus h(s+)^{-1}`, where `s±` carry
    /// the row/column-filled tableaux of the shape to T.  Its square is a
    /// scalar multiple of itself.
    pub fn x_t(t: &StandardTableau, bound: u128) -> Result<Self> {
        let shape = t.shape();
        let s_plus = StandardTableau::s_plus(shape);
        let s_minus = StandardTableau::s_minus(shape);
        let sp = StandardTableau::sigma_between(&s_plus, t);
        let sm = StandardTableau::sigma_between(&s_minus, t);
        let conj_minus = &(&Self::h_of(&sm) * &Self::e_minus(shape, bound)?)
            * &Self::invert_basis(&sm);
        let conj_plus = &(&Self::h_of(&sp) * &Self::e_plus(shape, bound)?)
            * &Self::invert_basis(&sp);
        Ok(&conj_minus * &conj_plus)
    }

    /// The scalar `xi` with `x_T^2 = xi * x_T`, extracted as a coefficient
    /// ratio and verified across the whole support.
    pub fn xi_of(t: &StandardTableau, bound: u128) -> Result<RationalFunction> {
        let x = Self::x_t(t, bound)?;
        Self::xi_from(&x, t)
    }

    fn xi_from(x: &Self, t: &StandardTableau) -> Result<RationalFunction> {
        let (w, c) = match x.terms.iter().next() {
            Some(pair) => pair,
            None => {
                return Err(Error::XiExtraction {
                    tableau: t.to_string(),
                    reason: "the quasi-idempotent vanishes".into(),
                })
            }
        };
        let square = x * x;
        let xi = square.coeff(w).div(c).expect("support coefficients are nonzero");
        if square != x.scaled(&xi) {
            return Err(Error::XiExtraction {
                tableau: t.to_string(),
                reason: "the square is not a scalar multiple across the support".into(),
            });
        }
        if xi.is_zero() {
            return Err(Error::XiExtraction {
                tableau: t.to_string(),
                reason: "the square vanishes, so no normalization exists".into(),
            });
        }
        Ok(xi)
    }

    /// The q-Young idempotent `y_T = x_T / xi`: satisfies `y_T^2 = y_T`,
    /// kills the idempotents of different shapes, and kills same-shape
    /// idempotents of larger tableaux.
    pub fn y_t(t: &StandardTableau, bound: u128) -> Result<Self> {
        let x = Self::x_t(t, bound)?;
        let xi = Self::xi_from(&x, t)?;
        Ok(x.scaled(&xi.inv().expect("xi is nonzero")))
    }

    /// Specialize every coefficient at a rational point (usually q = 1),
    /// landing in the group algebra of S_k.
    pub fn evaluate(&self, point: &Rational) -> Result<classical::GroupAlgebra> {
        let mut out = BTreeMap::new();
        for (w, c) in &self.terms {
            let v = c.evaluate(point)?;
            if !num_traits::Zero::is_zero(&v) {
                out.insert(w.clone(), v);
            }
        }
        Ok(out)
    }

    /// JSON form: a list of `{"perm": [..], "num": [..], "den": [..]}`
    /// objects in permutation order.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let mut obj = c.to_json();
                obj["perm"] = json!(w.images());
                obj
            })
            .collect();
        json!(items)
    }

    /// Parse the text grammar `(coeff)*T[one-line] + ...` produced by
    /// `Display`; a bare `T[..]` term has coefficient 1, and `-` joins
    /// terms with negated coefficients.
    pub fn parse(input: &str, k: usize) -> Result<Self> {
        let mut cur = crate::scalar::parse::Cursor::new(input);
        cur.skip_ws();
        if cur.eat('0') {
            if !cur.at_end() {
                return Err(Error::parse(cur.pos, "unexpected trailing input"));
            }
            return Ok(Self::zero(k));
        }
        let mut out = Self::zero(k);
        let mut first = true;
        loop {
            cur.skip_ws();
            let negative = if cur.eat('-') {
                true
            } else {
                if !first {
                    cur.expect('+')?;
                }
                false
            };
            cur.skip_ws();
            let mut coeff = if cur.peek() == Some('(') {
                cur.expect('(')?;
                let num = crate::scalar::parse::polynomial(&mut cur)?;
                cur.expect(')')?;
                let c = if cur.eat('/') {
                    cur.expect('(')?;
                    let den_pos = cur.pos;
                    let den = crate::scalar::parse::polynomial(&mut cur)?;
                    cur.expect(')')?;
                    RationalFunction::new(num, den)
                        .map_err(|_| Error::parse(den_pos, "zero denominator"))?
                } else {
                    RationalFunction::from(num)
                };
                cur.skip_ws();
                cur.expect('*')?;
                cur.skip_ws();
                c
            } else {
                RationalFunction::one()
            };
            if !cur.eat('T') {
                return Err(Error::parse(cur.pos, "expected a term 'T[..]'"));
            }
            cur.expect('[')?;
            let mut images = Vec::new();
            loop {
                cur.skip_ws();
                let pos = cur.pos;
                let v = cur.parse_int()?;
                if v < 1 {
                    return Err(Error::parse(pos, "permutation images must be positive"));
                }
                images.push(v as usize);
                cur.skip_ws();
                if !cur.eat(',') {
                    break;
                }
            }
            cur.expect(']')?;
            if images.len() != k {
                return Err(Error::parse(
                    cur.pos,
                    format!("permutation of degree {} in H_{k}", images.len()),
                ));
            }
            let w = Permutation::from_images(images)?;
            if negative {
                coeff = -coeff;
            }
            out.add_term(w, coeff);
            first = false;
            cur.skip_ws();
            if cur.at_end() {
                break;
            }
            if !matches!(cur.peek(), Some('+') | Some('-')) {
                return Err(Error::parse(cur.pos, "expected '+', '-', or end of input"));
            }
        }
        Ok(out)
    }
}

/// `T_{s_i} * elt` by the left basis rule: `T_{s_i} T_v = T_{s_i v}` when
/// the length goes up, and `(q^2 - 1) T_v + q^2 T_{s_i v}` otherwise.
fn left_mul_generator(i: usize, elt: &HeckeElement) -> HeckeElement {
    let k = elt.k;
    let s = Permutation::adjacent_transposition(k, i);
    let q2 = RationalFunction::q_pow(2);
    let q2m1 = &q2 - &RationalFunction::one();
    let mut out = HeckeElement::zero(k);
    for (v, c) in &elt.terms {
        let sv = s.compose(v);
        // len(s_i v) > len(v) iff the value i precedes i+1 in v's one-line
        // images (left multiplication swaps the values i and i+1).
        let pos_i = v.images().iter().position(|&x| x == i).unwrap();
        let pos_i1 = v.images().iter().position(|&x| x == i + 1).unwrap();
        if pos_i < pos_i1 {
            out.add_term(sv, c.clone());
        } else {
            out.add_term(v.clone(), c * &q2m1);
            out.add_term(sv, c * &q2);
        }
    }
    out
}

impl Mul<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;

    /// Bilinear product; each left-factor basis element acts through its
    /// reduced word by the generator rule.
    fn mul(self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.k, rhs.k, "rank mismatch in Hecke multiplication");
        let mut out = HeckeElement::zero(self.k);
        for (w, c) in &self.terms {
            let mut acc = rhs.clone();
            for &i in w.reduced_word().iter().rev() {
                acc = left_mul_generator(i, &acc);
            }
            for (v, cv) in acc.terms {
                out.add_term(v, &cv * c);
            }
        }
        out
    }
}

impl Add<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.k, rhs.k, "rank mismatch in Hecke addition");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.k, rhs.k, "rank mismatch in Hecke subtraction");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect();
        HeckeElement { k: self.k, terms }
    }
}

crate::forward_binop!(HeckeElement, Mul, mul);
crate::forward_binop!(HeckeElement, Add, add);
crate::forward_binop!(HeckeElement, Sub, sub);
crate::forward_unop!(HeckeElement, Neg, neg);

impl fmt::Display for HeckeElement {
    /// `(coeff)*T[one-line]` terms joined by ` + ` in permutation order;
    /// a non-polynomial coefficient renders as `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered = self
            .terms
            .iter()
            .map(|(w, c)| {
                let coeff = if c.denominator().is_one() {
                    format!("({})", c.numerator())
                } else {
                    c.to_string()
                };
                format!("{coeff}*T{w}")
            })
            .join(" + ");
        write!(f, "{rendered}")
    }
}

pub mod classical {
    //! The q = 1 shadow: the rational group algebra of S_k and the
    //! classical Young symmetrizer product.

    use std::collections::BTreeMap;

    use crate::error::Result;
    use crate::perm::Permutation;
    use crate::scalar::{rat, Rational};
    use crate::tableau::StandardTableau;

    /// An element of the group algebra QS_k: permutation -> coefficient.
    pub type GroupAlgebra = BTreeMap<Permutation, Rational>;

    /// The basis element of a single permutation.
    pub fn basis(w: &Permutation) -> GroupAlgebra {
        BTreeMap::from([(w.clone(), rat(1))])
    }

    /// Convolution product of two group algebra elements.
    pub fn multiply(a: &GroupAlgebra, b: &GroupAlgebra) -> GroupAlgebra {
        let mut out = GroupAlgebra::new();
        for (s, cs) in a {
            for (t, ct) in b {
                let prod = s.compose(t);
                *out.entry(prod).or_insert_with(|| rat(0)) += cs * ct;
            }
        }
        out.retain(|_, c| !num_traits::Zero::is_zero(c));
        out
    }

    /// The classical Young symmetrizer product at a tableau T: the signed
    /// column sum times the row sum,
    /// `(sum_{tau in C(T)} sgn(tau) tau) * (sum_{rho in R(T)} rho)`.
    /// This is the q = 1 specialization of the quasi-idempotent `x_T`.
    pub fn young_product(t: &StandardTableau, bound: u128) -> Result<GroupAlgebra> {
        let mut out = GroupAlgebra::new();
        for tau in t.column_group(bound)? {
            for rho in t.row_group(bound)? {
                let prod = tau.compose(&rho);
                let entry = out.entry(prod).or_insert_with(|| rat(0));
                *entry += rat(tau.sign() as i64);
            }
        }
        out.retain(|_, c| !num_traits::Zero::is_zero(c));
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::DEFAULT_GROUP_GUARD as GUARD;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rf(text: &str) -> RationalFunction {
        RationalFunction::parse(text).unwrap()
    }

    #[test]
    fn generator_quadratic_relation() {
        // T_{s_1}^2 = (q^2 - 1) T_{s_1} + q^2.
        let g = HeckeElement::generator(1, 2);
        let expected = &g.scaled(&rf("q^2 - 1")) + &HeckeElement::one(2).scaled(&rf("q^2"));
        assert_eq!(&g * &g, expected);
    }

    #[test]
    fn braid_and_commutation_relations_up_to_rank_five() {
        for k in 2..=5 {
            let gens: Vec<HeckeElement> =
                (1..k).map(|i| HeckeElement::generator(i, k)).collect();
            for i in 0..gens.len() {
                // Quadratic relation for every generator.
                let sq = &gens[i] * &gens[i];
                let expected = &gens[i].scaled(&rf("q^2 - 1"))
                    + &HeckeElement::one(k).scaled(&rf("q^2"));
                assert_eq!(sq, expected);
                for j in 0..gens.len() {
                    if i + 1 == j {
                        // Adjacent braid relation.
                        let lhs = &(&gens[i] * &gens[j]) * &gens[i];
                        let rhs = &(&gens[j] * &gens[i]) * &gens[j];
                        assert_eq!(lhs, rhs, "braid failure at i={i} j={j} k={k}");
                    } else if j > i + 1 {
                        // Distant generators commute.
                        assert_eq!(
                            &gens[i] * &gens[j],
                            &gens[j] * &gens[i],
                            "commutation failure at i={i} j={j} k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn basis_products_when_lengths_add() {
        // h(s) h(t) = h(st) exactly when len(st) = len(s) + len(t);
        // brute force over all pairs in S_3.
        for s in Permutation::all(3) {
            for t in Permutation::all(3) {
                let st = s.compose(&t);
                let product = &HeckeElement::h_of(&s) * &HeckeElement::h_of(&t);
                if st.length() == s.length() + t.length() {
                    assert_eq!(product, HeckeElement::h_of(&st));
                } else {
                    assert_ne!(product, HeckeElement::h_of(&st));
                }
            }
        }
    }

    #[test]
    fn basis_inverses_are_two_sided() {
        for k in 1..=4usize {
            for w in Permutation::all(k) {
                let inv = HeckeElement::invert_basis(&w);
                let h = HeckeElement::h_of(&w);
                assert_eq!(&inv * &h, HeckeElement::one(k), "left inverse of {w}");
                assert_eq!(&h * &inv, HeckeElement::one(k), "right inverse of {w}");
            }
        }
    }

    #[test]
    fn quasi_symmetrizers_at_rank_two() {
        let e_plus_row = HeckeElement::e_plus(&p(&[2]), GUARD).unwrap();
        assert_eq!(
            e_plus_row,
            &HeckeElement::one(2) + &HeckeElement::generator(1, 2)
        );
        assert_eq!(HeckeElement::e_plus(&p(&[1, 1]), GUARD).unwrap(), HeckeElement::one(2));
        let e_minus_col = HeckeElement::e_minus(&p(&[1, 1]), GUARD).unwrap();
        assert_eq!(
            e_minus_col,
            &HeckeElement::one(2) - &HeckeElement::generator(1, 2).scaled(&rf("q^-2"))
        );
        assert_eq!(HeckeElement::e_minus(&p(&[2]), GUARD).unwrap(), HeckeElement::one(2));
        // Eigenvalue identities: h_1 e_plus = q^2 e_plus, h_1 e_minus = -e_minus.
        let h1 = HeckeElement::generator(1, 2);
        assert_eq!(&h1 * &e_plus_row, e_plus_row.scaled(&rf("q^2")));
        assert_eq!(&h1 * &e_minus_col, -&e_minus_col);
    }

    /// Two-sided eigenvalue law for the quasi-symmetrizers over their
    /// whole row/column groups, all shapes of up to 4 boxes.
    #[test]
    fn symmetrizer_eigenvalue_laws() {
        for k in 1..=4usize {
            for shape in Partition::all(k) {
                let e_plus = HeckeElement::e_plus(&shape, GUARD).unwrap();
                for sigma in StandardTableau::s_plus(&shape).row_group(GUARD).unwrap() {
                    let scale = RationalFunction::q_pow(2 * sigma.length() as i64);
                    let h = HeckeElement::h_of(&sigma);
                    assert_eq!(&e_plus * &h, e_plus.scaled(&scale));
                    assert_eq!(&h * &e_plus, e_plus.scaled(&scale));
                }
                let e_minus = HeckeElement::e_minus(&shape, GUARD).unwrap();
                for sigma in StandardTableau::s_minus(&shape).column_group(GUARD).unwrap() {
                    let mut scaled = e_minus.clone();
                    if sigma.length() % 2 != 0 {
                        scaled = -scaled;
                    }
                    let h = HeckeElement::h_of(&sigma);
                    assert_eq!(&e_minus * &h, scaled);
                    assert_eq!(&h * &e_minus, scaled);
                }
            }
        }
    }

    #[test]
    fn quasi_idempotents_at_rank_two() {
        // Shape (2): x = e_plus = 1 + T_{s_1} and xi = 1 + q^2.
        let row = StandardTableau::s_plus(&p(&[2]));
        let x = HeckeElement::x_t(&row, GUARD).unwrap();
        assert_eq!(x, HeckeElement::e_plus(&p(&[2]), GUARD).unwrap());
        assert_eq!(HeckeElement::xi_of(&row, GUARD).unwrap(), rf("q^2 + 1"));
        // Shape (1,1): x = e_minus and xi = 1 + q^-2.
        let col = StandardTableau::s_minus(&p(&[1, 1]));
        let x = HeckeElement::x_t(&col, GUARD).unwrap();
        assert_eq!(x, HeckeElement::e_minus(&p(&[1, 1]), GUARD).unwrap());
        let xi = HeckeElement::xi_of(&col, GUARD).unwrap();
        assert_eq!(xi, rf("q^-2 + 1"));
        // Both scalars specialize to the classical value 2 at q = 1.
        assert_eq!(xi.evaluate(&rat(1)).unwrap(), rat(2));
        // y = x / xi is idempotent.
        let y = HeckeElement::y_t(&row, GUARD).unwrap();
        assert_eq!(&y * &y, y);
    }

    #[test]
    fn idempotency_and_orthogonality_up_to_rank_three() {
        for k in 1..=3usize {
            let mut all: Vec<(Partition, Vec<StandardTableau>)> = Vec::new();
            for shape in Partition::all(k) {
                all.push((shape.clone(), StandardTableau::enumerate(&shape)));
            }
            for (shape_a, tabs_a) in &all {
                for (ia, ta) in tabs_a.iter().enumerate() {
                    let ya = HeckeElement::y_t(ta, GUARD).unwrap();
                    assert_eq!(&ya * &ya, ya, "idempotency at {ta}");
                    for (shape_b, tabs_b) in &all {
                        for (ib, tb) in tabs_b.iter().enumerate() {
                            let yb = HeckeElement::y_t(tb, GUARD).unwrap();
                            let product = &ya * &yb;
                            if shape_a != shape_b {
                                assert!(product.is_zero(), "shape orthogonality {ta} {tb}");
                            } else if ia < ib {
                                assert!(product.is_zero(), "order orthogonality {ta} {tb}");
                            }
                        }
                    }
                }
            }
        }
    }

    /// The conjugated middle factor of `x_T` is a scalar multiple of the
    /// straightened product `e_minus h(s) e_plus` with s carrying the
    /// row-filled to the column-filled tableau.
    #[test]
    fn middle_factor_is_proportional_to_straightened_form() {
        for k in 1..=4usize {
            for shape in Partition::all(k) {
                let e_plus = HeckeElement::e_plus(&shape, GUARD).unwrap();
                let e_minus = HeckeElement::e_minus(&shape, GUARD).unwrap();
                let s_plus = StandardTableau::s_plus(&shape);
                let s_minus = StandardTableau::s_minus(&shape);
                let straight = &(&e_minus
                    * &HeckeElement::h_of(&StandardTableau::sigma_between(&s_plus, &s_minus)))
                    * &e_plus;
                for t in StandardTableau::enumerate(&shape) {
                    let sp = StandardTableau::sigma_between(&s_plus, &t);
                    let sm = StandardTableau::sigma_between(&s_minus, &t);
                    let lhs = &(&(&e_minus * &HeckeElement::invert_basis(&sm))
                        * &HeckeElement::h_of(&sp))
                        * &e_plus;
                    // Exhibit the ratio from any support point, then demand
                    // exact proportionality.
                    if lhs.is_zero() {
                        continue;
                    }
                    let (w, c) = lhs.terms().next().unwrap();
                    let gamma = c.div(&straight.coeff(w)).expect("nonzero anchor");
                    assert_eq!(lhs, straight.scaled(&gamma), "tableau {t}");
                }
            }
        }
    }

    /// At q = 1 the multiplication table is the symmetric group's.
    #[test]
    fn specialization_collapses_to_group_multiplication() {
        for s in Permutation::all(3) {
            for t in Permutation::all(3) {
                let product = &HeckeElement::h_of(&s) * &HeckeElement::h_of(&t);
                let specialized = product.evaluate(&rat(1)).unwrap();
                let expected = classical::multiply(&classical::basis(&s), &classical::basis(&t));
                assert_eq!(specialized, expected, "pair {s}, {t}");
            }
        }
    }

    /// At q = 1 the quasi-idempotent is the classical signed-column times
    /// row symmetrizer product at the same tableau.
    #[test]
    fn quasi_idempotent_specializes_to_young_product() {
        for k in 1..=4usize {
            for shape in Partition::all(k) {
                for t in StandardTableau::enumerate(&shape) {
                    let x = HeckeElement::x_t(&t, GUARD).unwrap();
                    let specialized = x.evaluate(&rat(1)).unwrap();
                    let expected = classical::young_product(&t, GUARD).unwrap();
                    assert_eq!(specialized, expected, "tableau {t}");
                }
            }
        }
    }

    #[test]
    fn display_and_parse_round_trip() {
        let one_plus_gen = &HeckeElement::one(2) + &HeckeElement::generator(1, 2);
        assert_eq!(one_plus_gen.to_string(), "(1)*T[1,2] + (1)*T[2,1]");
        let y = HeckeElement::y_t(&StandardTableau::s_plus(&p(&[2])), GUARD).unwrap();
        assert_eq!(
            y.to_string(),
            "(1)/(q^2 + 1)*T[1,2] + (1)/(q^2 + 1)*T[2,1]"
        );
        for elt in [
            HeckeElement::zero(2),
            one_plus_gen.clone(),
            y.clone(),
            &HeckeElement::generator(1, 3).scaled(&rf("q^-2 - 1")) - &HeckeElement::one(3),
        ] {
            let round = HeckeElement::parse(&elt.to_string(), elt.rank()).unwrap();
            assert_eq!(round, elt, "round trip of {elt}");
        }
        // A bare term has coefficient one; '-' negates.
        assert_eq!(
            HeckeElement::parse("T[2,1] - T[1,2]", 2).unwrap(),
            &HeckeElement::generator(1, 2) - &HeckeElement::one(2)
        );
        assert!(HeckeElement::parse("T[2,2]", 2).is_err());
        assert!(HeckeElement::parse("T[2,1,3]", 2).is_err());
        assert!(HeckeElement::parse("(q)*S[1,2]", 2).is_err());
    }

    #[test]
    fn json_is_ordered_and_exact() {
        let elt = &HeckeElement::one(2) + &HeckeElement::generator(1, 2).scaled(&rf("q^2"));
        let json = elt.to_json();
        assert_eq!(
            json,
            serde_json::json!([
                {"perm": [1, 2], "num": [[0, "1"]], "den": [[0, "1"]]},
                {"perm": [2, 1], "num": [[2, "1"]], "den": [[0, "1"]]},
            ])
        );
    }

    #[test]
    #[should_panic(expected = "rank mismatch")]
    fn rank_mismatch_panics() {
        let _ = &HeckeElement::one(2) * &HeckeElement::one(3);
    }
}
