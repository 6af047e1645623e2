//! Exact arithmetic in the field Q(q).
//!
//! [`LaurentPolynomial`] is a finite sum `sum c_e * q^e` with integer
//! exponents of either sign and arbitrary-precision rational coefficients;
//! no zero coefficient is ever stored.  [`RationalFunction`] is a quotient
//! of two Laurent polynomials kept in a canonical form (coprime numerator
//! and denominator, denominator an integer polynomial with nonzero constant
//! term, positive leading coefficient and content 1), so structural equality
//! coincides with mathematical equality.  There is no floating point
//! anywhere: every identity in this crate is decided exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used for all coefficients.
pub type Rational = BigRational;

/// Rational from an integer literal.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `p/q` from integer literals; panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn rat_pow(base: &Rational, exp: i64) -> Result<Rational> {
    if exp == 0 {
        return Ok(Rational::one());
    }
    if base.is_zero() {
        if exp < 0 {
            return Err(Error::DivisionByZero);
        }
        return Ok(Rational::zero());
    }
    let mut acc = Rational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc = acc.recip();
    }
    Ok(acc)
}

// ---- Dense ordinary-polynomial helpers (ascending coefficients) ----

fn dense_trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Long division over Q: returns `(quotient, remainder)`.
fn dense_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = a.to_vec();
    dense_trim(&mut rem);
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quo = vec![Rational::zero(); rem.len() - db];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = &rem[dr] / lead;
        quo[dr - db] = c.clone();
        for i in 0..=db {
            let t = &b[i] * &c;
            rem[dr - db + i] -= t;
        }
        dense_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    (quo, rem)
}

/// Monic greatest common divisor over Q (gcd with 0 is the other argument).
fn dense_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    dense_trim(&mut x);
    dense_trim(&mut y);
    while !y.is_empty() {
        let (_, r) = dense_divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        for c in &mut x {
            *c /= &lead;
        }
    }
    x
}

/// A Laurent polynomial in q with exact rational coefficients.
///
/// Invariant: `terms` never stores a zero coefficient, so the map is a
/// canonical representation and `==` decides mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPolynomial {
    /// The zero polynomial (empty term map).
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    /// The variable q.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `q^e` for any integer exponent.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// Constant polynomial with the given rational value.
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// Constant polynomial from an integer literal.
    pub fn integer(c: i64) -> Self {
        Self::constant(rat(c))
    }

    /// The single term `c * q^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// Sum of `(exponent, coefficient)` pairs; repeated exponents are added.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    /// Coefficient of `q^e` (zero when the term is absent).
    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the largest exponent (zero polynomial gives zero).
    pub fn leading_coeff(&self) -> Rational {
        self.max_exponent().map_or_else(Rational::zero, |e| self.coeff(e))
    }

    /// The product with `q^e`.
    pub fn shifted(&self, e: i64) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect() }
    }

    /// Exact value at a rational point; `q = 0` is a pole when negative
    /// exponents are present.
    pub fn evaluate(&self, point: &Rational) -> Result<Rational> {
        if point.is_zero() && self.min_exponent().is_some_and(|e| e < 0) {
            return Err(Error::Pole { point: point.to_string() });
        }
        let mut acc = Rational::zero();
        for (e, c) in self.terms() {
            acc += c * rat_pow(point, e)?;
        }
        Ok(acc)
    }

    /// `(shift, coefficients)` with `self = q^shift * (c_0 + c_1 q + ...)`
    /// and `c_0 != 0`; the zero polynomial gives `(0, [])`.
    fn to_dense(&self) -> (i64, Vec<Rational>) {
        let Some(min) = self.min_exponent() else {
            return (0, Vec::new());
        };
        let max = self.max_exponent().unwrap();
        let mut coeffs = vec![Rational::zero(); (max - min) as usize + 1];
        for (e, c) in self.terms() {
            coeffs[(e - min) as usize] = c.clone();
        }
        (min, coeffs)
    }

    fn from_dense(shift: i64, coeffs: Vec<Rational>) -> Self {
        Self::from_terms(
            coeffs.into_iter().enumerate().map(|(i, c)| (shift + i as i64, c)),
        )
    }

    /// Exact quotient by a divisor of `self`; panics when the division is
    /// not exact (internal use only).
    fn exact_div(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let (sa, a) = self.to_dense();
        let (sb, b) = divisor.to_dense();
        let (quo, rem) = dense_divrem(&a, &b);
        assert!(rem.is_empty(), "inexact polynomial division");
        Self::from_dense(sa - sb, quo)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

crate::forward_binop!(LaurentPolynomial, Add, add);
crate::forward_binop!(LaurentPolynomial, Sub, sub);
crate::forward_binop!(LaurentPolynomial, Mul, mul);
crate::forward_unop!(LaurentPolynomial, Neg, neg);

impl fmt::Display for LaurentPolynomial {
    /// Signed `c*q^e` terms in descending exponent order, e.g. `q^2 - 1`
    /// or `1/2*q^-1`; unit coefficients and `^1`/`^0` are elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", term_body(&c.abs(), *e))?;
        }
        Ok(())
    }
}

fn term_body(c: &Rational, e: i64) -> String {
    if e == 0 {
        return c.to_string();
    }
    let q = if e == 1 { "q".to_string() } else { format!("q^{e}") };
    if c.is_one() {
        q
    } else {
        format!("{c}*{q}")
    }
}

/// An element of Q(q) as a canonical quotient of Laurent polynomials.
///
/// Canonical form: zero is `0/1`; otherwise numerator and denominator share
/// no polynomial factor, the denominator has minimal exponent 0, integer
/// coefficients of content 1 and a positive leading coefficient.  Two equal
/// values therefore have identical representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    /// `num / den`, canonicalized; fails when `den` is zero.
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentPolynomial, den: LaurentPolynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self { num: LaurentPolynomial::zero(), den: LaurentPolynomial::one() };
        }
        let (sn, n) = num.to_dense();
        let (sd, d) = den.to_dense();
        let g = dense_gcd(&n, &d);
        let gp = LaurentPolynomial::from_dense(0, g);
        let mut n = LaurentPolynomial::from_dense(0, n).exact_div(&gp);
        let mut d = LaurentPolynomial::from_dense(0, d).exact_div(&gp);
        // Scale so the denominator becomes an integer polynomial with
        // content 1 and positive leading coefficient.
        let mut denom_lcm = BigInt::one();
        for (_, c) in d.terms() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut numer_gcd = BigInt::zero();
        for (_, c) in d.terms() {
            numer_gcd = numer_gcd.gcd(&(c.numer() * (&denom_lcm / c.denom())));
        }
        let mut scale = Rational::new(numer_gcd, denom_lcm);
        if d.leading_coeff().is_negative() {
            scale = -scale;
        }
        let inv = LaurentPolynomial::constant(scale.recip());
        n = &n * &inv;
        d = &d * &inv;
        Self { num: n.shifted(sn - sd), den: d }
    }

    /// The zero element `0/1`.
    pub fn zero() -> Self {
        Self { num: LaurentPolynomial::zero(), den: LaurentPolynomial::one() }
    }

    /// The unit element `1/1`.
    pub fn one() -> Self {
        Self { num: LaurentPolynomial::one(), den: LaurentPolynomial::one() }
    }

    /// The variable q as a rational function.
    pub fn q() -> Self {
        Self::from(LaurentPolynomial::q())
    }

    /// `q^e` for any integer exponent.
    pub fn q_pow(e: i64) -> Self {
        Self::from(LaurentPolynomial::q_pow(e))
    }

    /// Constant from an integer literal.
    pub fn integer(c: i64) -> Self {
        Self::from(LaurentPolynomial::integer(c))
    }

    /// Constant from a rational scalar.
    pub fn constant(c: Rational) -> Self {
        Self::from(LaurentPolynomial::constant(c))
    }

    /// Numerator of the canonical form.
    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    /// Denominator of the canonical form.
    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True for the unit element.
    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Exact division; fails on a zero divisor.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<Self> {
        Self::one().div(self)
    }

    /// Integer power; negative powers of zero fail.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// Exact value at a rational point; fails at poles.
    pub fn evaluate(&self, point: &Rational) -> Result<Rational> {
        let den = self.den.evaluate(point)?;
        if den.is_zero() {
            return Err(Error::Pole { point: point.to_string() });
        }
        Ok(self.num.evaluate(point)? / den)
    }

    /// JSON form `{"num": [[e, "c"], ...], "den": [[e, "c"], ...]}` with
    /// exponents ascending and coefficients as integer-fraction strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "num": laurent_json(&self.num),
            "den": laurent_json(&self.den),
        })
    }

    /// Parse the text grammar produced by `Display`; also accepts a bare
    /// polynomial and a bare rational constant such as `1/2`.
    pub fn parse(input: &str) -> Result<Self> {
        parse::rational_function(input)
    }
}

fn laurent_json(p: &LaurentPolynomial) -> serde_json::Value {
    serde_json::Value::Array(
        p.terms()
            .map(|(e, c)| serde_json::json!([e, c.to_string()]))
            .collect(),
    )
}

impl From<LaurentPolynomial> for RationalFunction {
    fn from(num: LaurentPolynomial) -> Self {
        Self { num, den: LaurentPolynomial::one() }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &-rhs
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

crate::forward_binop!(RationalFunction, Add, add);
crate::forward_binop!(RationalFunction, Sub, sub);
crate::forward_binop!(RationalFunction, Mul, mul);
crate::forward_unop!(RationalFunction, Neg, neg);

impl fmt::Display for RationalFunction {
    /// `(num)/(den)`, with the denominator omitted when it is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

// ---- Text grammar parsing ----

pub(crate) mod parse {
    //! Recursive-descent parsers for the polynomial text grammar.  Errors
    //! carry byte offsets into the original input string.

    use super::*;

    pub(crate) struct Cursor<'a> {
        input: &'a str,
        pub pos: usize,
    }

    impl<'a> Cursor<'a> {
        pub fn new(input: &'a str) -> Self {
            Self { input, pos: 0 }
        }

        pub fn skip_ws(&mut self) {
            while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
                self.pos += 1;
            }
        }

        pub fn peek(&self) -> Option<char> {
            self.input[self.pos..].chars().next()
        }

        pub fn bump(&mut self) -> Option<char> {
            let c = self.peek()?;
            self.pos += c.len_utf8();
            Some(c)
        }

        pub fn eat(&mut self, c: char) -> bool {
            if self.peek() == Some(c) {
                self.bump();
                true
            } else {
                false
            }
        }

        pub fn expect(&mut self, c: char) -> Result<()> {
            if self.eat(c) {
                Ok(())
            } else {
                Err(Error::parse(self.pos, format!("expected '{c}'")))
            }
        }

        pub fn at_end(&mut self) -> bool {
            self.skip_ws();
            self.pos >= self.input.len()
        }

        pub fn parse_uint(&mut self) -> Result<BigInt> {
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if self.pos == start {
                return Err(Error::parse(start, "expected a digit"));
            }
            self.input[start..self.pos]
                .parse()
                .map_err(|_| Error::parse(start, "integer out of range"))
        }

        pub fn parse_int(&mut self) -> Result<i64> {
            let start = self.pos;
            let neg = self.eat('-');
            let mag: BigInt = self.parse_uint()?;
            let mag = if neg { -mag } else { mag };
            i64::try_from(&mag).map_err(|_| Error::parse(start, "integer out of range"))
        }
    }

    /// One signless term: `int`, `int/int`, `q`, `q^e`, `int*q^e`, ...
    fn term(cur: &mut Cursor) -> Result<LaurentPolynomial> {
        cur.skip_ws();
        let mut coeff = Rational::one();
        let mut saw_coeff = false;
        if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            let p = cur.parse_uint()?;
            let mut den = BigInt::one();
            if cur.eat('/') {
                let pos = cur.pos;
                den = cur.parse_uint()?;
                if den.is_zero() {
                    return Err(Error::parse(pos, "zero denominator in coefficient"));
                }
            }
            coeff = Rational::new(p, den);
            saw_coeff = true;
            let mut probe = cur.pos;
            while cur.input[probe..].starts_with(|c: char| c.is_ascii_whitespace()) {
                probe += 1;
            }
            if !cur.input[probe..].starts_with('*') {
                return Ok(LaurentPolynomial::constant(coeff));
            }
            cur.skip_ws();
            cur.expect('*')?;
            cur.skip_ws();
        }
        if cur.eat('q') {
            let e = if cur.eat('^') { cur.parse_int()? } else { 1 };
            Ok(LaurentPolynomial::monomial(coeff, e))
        } else if saw_coeff {
            Err(Error::parse(cur.pos, "expected 'q' after '*'"))
        } else {
            Err(Error::parse(cur.pos, "expected a coefficient or 'q'"))
        }
    }

    /// Signed sum of terms, consuming input until an unknown character.
    pub(crate) fn polynomial(cur: &mut Cursor) -> Result<LaurentPolynomial> {
        cur.skip_ws();
        let mut out = LaurentPolynomial::zero();
        let mut first = true;
        loop {
            cur.skip_ws();
            let sign = if cur.eat('-') {
                -1
            } else if cur.eat('+') {
                if first {
                    return Err(Error::parse(cur.pos - 1, "unexpected '+'"));
                }
                1
            } else if first {
                1
            } else {
                break;
            };
            let t = term(cur)?;
            out = if sign < 0 { &out - &t } else { &out + &t };
            first = false;
            cur.skip_ws();
            if !matches!(cur.peek(), Some('+') | Some('-')) {
                break;
            }
        }
        Ok(out)
    }

    /// Whole-string Laurent polynomial.
    pub(crate) fn laurent(input: &str) -> Result<LaurentPolynomial> {
        let mut cur = Cursor::new(input);
        let p = polynomial(&mut cur)?;
        if !cur.at_end() {
            return Err(Error::parse(cur.pos, "unexpected trailing input"));
        }
        Ok(p)
    }

    /// Position of the ')' matching the '(' at `open` (byte offsets).
    fn matching_paren(input: &str, open: usize) -> Result<usize> {
        let mut depth = 0usize;
        for (i, c) in input[open..].char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        return Ok(open + i);
                    }
                }
                _ => {}
            }
        }
        Err(Error::parse(open, "unbalanced '('"))
    }

    /// Whole-string rational function: `(num)/(den)`, `(num)`, or a bare
    /// polynomial.
    pub(crate) fn rational_function(input: &str) -> Result<RationalFunction> {
        let mut head = 0;
        while input[head..].starts_with(|c: char| c.is_ascii_whitespace()) {
            head += 1;
        }
        if !input[head..].starts_with('(') {
            return Ok(RationalFunction::from(laurent(input)?));
        }
        let close = matching_paren(input, head)?;
        let num = laurent(&input[head + 1..close])
            .map_err(|e| offset_parse_error(e, head + 1))?;
        let mut rest = close + 1;
        while input[rest..].starts_with(|c: char| c.is_ascii_whitespace()) {
            rest += 1;
        }
        if rest >= input.len() {
            return Ok(RationalFunction::from(num));
        }
        if !input[rest..].starts_with('/') {
            return Err(Error::parse(rest, "expected '/' between (num) and (den)"));
        }
        rest += 1;
        while input[rest..].starts_with(|c: char| c.is_ascii_whitespace()) {
            rest += 1;
        }
        if !input[rest..].starts_with('(') {
            return Err(Error::parse(rest, "expected '(' after '/'"));
        }
        let dclose = matching_paren(input, rest)?;
        let den = laurent(&input[rest + 1..dclose])
            .map_err(|e| offset_parse_error(e, rest + 1))?;
        let mut tail = dclose + 1;
        while input[tail..].starts_with(|c: char| c.is_ascii_whitespace()) {
            tail += 1;
        }
        if tail < input.len() {
            return Err(Error::parse(tail, "unexpected trailing input"));
        }
        if den.is_zero() {
            return Err(Error::parse(rest + 1, "zero denominator"));
        }
        RationalFunction::new(num, den)
    }

    fn offset_parse_error(e: Error, base: usize) -> Error {
        match e {
            Error::Parse { position, message } => {
                Error::Parse { position: position + base, message }
            }
            other => other,
        }
    }
}

impl LaurentPolynomial {
    /// Parse the text grammar produced by `Display`.
    pub fn parse(input: &str) -> Result<Self> {
        parse::laurent(input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> RationalFunction {
        RationalFunction::q()
    }

    fn int(n: i64) -> RationalFunction {
        RationalFunction::integer(n)
    }

    /// `(q^2 - 1)/(q - 1)` reduces to `q + 1`.
    #[test]
    fn canonical_cancellation() {
        let num = &LaurentPolynomial::q_pow(2) - &LaurentPolynomial::one();
        let den = &LaurentPolynomial::q() - &LaurentPolynomial::one();
        let f = RationalFunction::new(num, den).unwrap();
        assert_eq!(f, &q() + &int(1));
        assert!(f.denominator().is_one());
    }

    #[test]
    fn mul_of_quotients() {
        // (q - q^-1) * (q + q^-1) = q^2 - q^-2
        let a = &q() - &RationalFunction::q_pow(-1);
        let b = &q() + &RationalFunction::q_pow(-1);
        assert_eq!(&a * &b, &RationalFunction::q_pow(2) - &RationalFunction::q_pow(-2));
    }

    #[test]
    fn denominator_normalization() {
        // 1/(q^-2 + 1) has canonical denominator q^2 + 1 and numerator q^2.
        let den = &LaurentPolynomial::q_pow(-2) + &LaurentPolynomial::one();
        let f = RationalFunction::new(LaurentPolynomial::one(), den).unwrap();
        assert_eq!(f.numerator(), &LaurentPolynomial::q_pow(2));
        assert_eq!(
            f.denominator(),
            &(&LaurentPolynomial::q_pow(2) + &LaurentPolynomial::one())
        );
        // Content 1 and positive leading coefficient: 2/(2q + 2) = 1/(q + 1).
        let g = RationalFunction::new(
            LaurentPolynomial::integer(2),
            LaurentPolynomial::from_terms([(1, rat(2)), (0, rat(2))]),
        )
        .unwrap();
        assert_eq!(g.denominator(), &LaurentPolynomial::from_terms([(1, rat(1)), (0, rat(1))]));
        assert_eq!(g.numerator(), &LaurentPolynomial::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(int(1).div(&RationalFunction::zero()), Err(Error::DivisionByZero)));
        assert!(matches!(
            RationalFunction::new(LaurentPolynomial::one(), LaurentPolynomial::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn evaluate_points_and_poles() {
        // (q^2 - 1)/(q - 1) evaluates at 1 to 2 (the canonical form is q + 1).
        let f = RationalFunction::new(
            &LaurentPolynomial::q_pow(2) - &LaurentPolynomial::one(),
            &LaurentPolynomial::q() - &LaurentPolynomial::one(),
        )
        .unwrap();
        assert_eq!(f.evaluate(&rat(1)).unwrap(), rat(2));
        // 1/(q - 1) has a pole at 1.
        let g = RationalFunction::new(
            LaurentPolynomial::one(),
            &LaurentPolynomial::q() - &LaurentPolynomial::one(),
        )
        .unwrap();
        assert!(matches!(g.evaluate(&rat(1)), Err(Error::Pole { .. })));
        // q^-2 at 0 is a pole; q^2 at 0 is 0.
        assert!(matches!(
            RationalFunction::q_pow(-2).evaluate(&rat(0)),
            Err(Error::Pole { .. })
        ));
        assert_eq!(RationalFunction::q_pow(2).evaluate(&rat(0)).unwrap(), rat(0));
        assert_eq!(RationalFunction::q_pow(-2).evaluate(&rat(2)).unwrap(), ratio(1, 4));
    }

    #[test]
    fn display_matches_grammar() {
        let p = &LaurentPolynomial::q_pow(2) - &LaurentPolynomial::one();
        assert_eq!(p.to_string(), "q^2 - 1");
        let h = LaurentPolynomial::monomial(ratio(1, 2), -1);
        assert_eq!(h.to_string(), "1/2*q^-1");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!((-&LaurentPolynomial::q()).to_string(), "-q");
        let f = RationalFunction::new(
            LaurentPolynomial::q(),
            &LaurentPolynomial::q_pow(2) + &LaurentPolynomial::one(),
        )
        .unwrap();
        assert_eq!(f.to_string(), "(q)/(q^2 + 1)");
    }

    #[test]
    fn parse_round_trip_examples() {
        for s in ["q^2 - 1", "1/2*q^-1", "0", "-q", "3*q^2 + 2", "-1/3 + q^-3"] {
            let p = LaurentPolynomial::parse(s).unwrap();
            assert_eq!(p.to_string(), s);
        }
        for s in ["(q)/(q^2 + 1)", "q + 1", "(q^2 - 1)/(q^2 + q + 1)"] {
            let f = RationalFunction::parse(s).unwrap();
            assert_eq!(f.to_string(), s);
        }
        // A bare rational constant parses as itself.
        assert_eq!(RationalFunction::parse("1/2").unwrap(), RationalFunction::constant(ratio(1, 2)));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = LaurentPolynomial::parse("q^2 + * 3").unwrap_err();
        match err {
            Error::Parse { position, .. } => assert_eq!(position, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(RationalFunction::parse("(q)/(0)").is_err());
        assert!(LaurentPolynomial::parse("1/0").is_err());
    }

    // ---- Property tests ----

    fn arb_laurent() -> impl Strategy<Value = LaurentPolynomial> {
        proptest::collection::vec((-3i64..=3, -4i64..=4, 1i64..=3), 0..5).prop_map(|ts| {
            LaurentPolynomial::from_terms(
                ts.into_iter().map(|(e, p, q)| (e, ratio(p, q))),
            )
        })
    }

    fn arb_ratfunc() -> impl Strategy<Value = RationalFunction> {
        (arb_laurent(), arb_laurent())
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn inverses_and_canonical_form(a in arb_ratfunc(), g in arb_ratfunc()) {
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), RationalFunction::one());
                // Common factors never change the canonical representation.
                if !g.is_zero() {
                    let scaled = RationalFunction::new(
                        a.numerator() * g.numerator(),
                        a.denominator() * g.numerator(),
                    ).unwrap();
                    prop_assert_eq!(&scaled, &a);
                }
                let d = a.denominator();
                prop_assert_eq!(d.min_exponent(), Some(0));
                prop_assert!(d.leading_coeff().is_positive());
                for (_, c) in d.terms() {
                    prop_assert!(c.is_integer());
                }
            }
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_ratfunc(), b in arb_ratfunc(), p in -3i64..=3) {
            let point = rat(p);
            if let (Ok(va), Ok(vb)) = (a.evaluate(&point), b.evaluate(&point)) {
                if let Ok(vab) = (&a * &b).evaluate(&point) {
                    prop_assert_eq!(vab, &va * &vb);
                }
                if let Ok(vab) = (&a + &b).evaluate(&point) {
                    prop_assert_eq!(vab, &va + &vb);
                }
            }
        }

        #[test]
        fn display_parse_round_trip(a in arb_ratfunc()) {
            let parsed = RationalFunction::parse(&a.to_string()).unwrap();
            prop_assert_eq!(parsed, a);
        }
    }
}
