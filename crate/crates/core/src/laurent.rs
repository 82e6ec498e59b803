//! Exact Laurent polynomials in one formal variable with integer coefficients.
//!
//! The variable is abstract: the same type carries Alexander polynomials in
//! `t`, Jones polynomials in `q = t^{1/2}` and Kauffman brackets in `A`.
//! Callers fix the meaning by context and pick the printed symbol with
//! [`LaurentPoly::display_with`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sparse map from exponent to nonzero coefficient.
///
/// Equality is structural: zero coefficients are never stored, so two
/// values compare equal exactly when they denote the same polynomial.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

fn add_exp(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("Laurent exponent overflow")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * x^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (add_exp(*e, k), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces every exponent `e` by `-e` (the substitution `x -> x^{-1}`).
    pub fn substitute_inverse(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.checked_neg().expect("Laurent exponent overflow"), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `x -> x^factor`. Used to move between `t` and `q = t^{1/2}`.
    pub fn reindex(&self, factor: i64) -> Self {
        assert!(factor != 0, "reindex factor must be nonzero");
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.checked_mul(factor).expect("Laurent exponent overflow"),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Inverse of [`reindex`](Self::reindex): `None` unless every exponent is
    /// divisible by `divisor`.
    pub fn try_unreindex(&self, divisor: i64) -> Option<Self> {
        assert!(divisor != 0, "divisor must be nonzero");
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e % divisor != 0 {
                return None;
            }
            terms.insert(e / divisor, c.clone());
        }
        Some(Self { terms })
    }

    /// Exact rational value at a nonzero integer point.
    pub fn evaluate(&self, x: i64) -> Result<BigRational> {
        if x == 0 {
            return Err(Error::EvaluateAtZero);
        }
        let x = BigRational::from_integer(BigInt::from(x));
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let pow = if *e >= 0 {
                num_traits::pow(x.clone(), *e as usize)
            } else {
                num_traits::pow(x.recip(), e.unsigned_abs() as usize)
            };
            acc += pow * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// The representative of `{±x^k · p}` with minimum exponent 0 and a
    /// positive lowest-degree coefficient.
    pub fn normalize_units(&self) -> Result<Self> {
        let (&lo, lead) = self.terms.iter().next().ok_or(Error::ZeroPolynomial)?;
        let p = self.shift(-lo);
        Ok(if lead.is_negative() { -p } else { p })
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder (in the ring of integer Laurent polynomials).
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let d_lo = divisor.min_exp()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n_lo = self.min_exp().unwrap();
        let num = dense(self, n_lo);
        let den = dense(divisor, d_lo);
        if den.len() > num.len() {
            return None;
        }
        let lead = den.last().unwrap();
        let mut rem = num;
        let qlen = rem.len() - den.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + den.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in den.iter().enumerate() {
                rem[i + j] -= &q * dj;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let base = n_lo - d_lo;
        Some(Self::from_terms(
            quot.into_iter().enumerate().map(|(i, c)| (base + i as i64, c)),
        ))
    }

    /// Formats with the given variable symbol, ascending exponents.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            if *e == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(var);
            if *e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        out
    }

    /// Parses the [`display_with`](Self::display_with) grammar for `var`.
    /// Whitespace is ignored except inside a number.
    pub fn parse_with(s: &str, var: char) -> Result<Self> {
        let mut prev: Option<char> = None;
        let mut gap = false;
        for c in s.chars() {
            if c.is_whitespace() {
                gap = true;
                continue;
            }
            if gap && c.is_ascii_digit() && prev.is_some_and(|p| p.is_ascii_digit()) {
                return Err(Error::Parse(format!("whitespace inside a number in {s:?}")));
            }
            prev = Some(c);
            gap = false;
        }
        Parser::new(s, var).parse()
    }
}

fn dense(p: &LaurentPoly, lo: i64) -> Vec<BigInt> {
    let hi = p.max_exp().unwrap();
    let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (e, c) in &p.terms {
        v[(e - lo) as usize] = c.clone();
    }
    v
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_with(s, 't')
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    var: char,
}

impl Parser {
    fn new(s: &str, var: char) -> Self {
        Self {
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            var,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("polynomial: {msg} at position {}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }

    fn parse(mut self) -> Result<LaurentPoly> {
        if self.chars.is_empty() {
            return Err(self.err("empty input"));
        }
        let mut p = LaurentPoly::zero();
        let mut first = true;
        while self.pos < self.chars.len() {
            let mut sign = BigInt::one();
            match self.peek() {
                Some('+') if !first => self.pos += 1,
                Some('-') => {
                    sign = -sign;
                    self.pos += 1;
                }
                _ if !first => return Err(self.err("expected '+' or '-'")),
                _ => {}
            }
            first = false;
            let coeff = self.digits();
            if self.peek() == Some('*') && coeff.is_some() {
                self.pos += 1;
            }
            let exp = if self.peek() == Some(self.var) {
                self.pos += 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    let neg = if self.peek() == Some('-') {
                        self.pos += 1;
                        true
                    } else {
                        false
                    };
                    let e = self.digits().ok_or_else(|| self.err("expected exponent"))?;
                    let e: i64 = i64::try_from(e).map_err(|_| self.err("exponent out of range"))?;
                    if neg {
                        -e
                    } else {
                        e
                    }
                } else {
                    1
                }
            } else if coeff.is_some() {
                0
            } else {
                return Err(self.err("expected a term"));
            };
            p.add_term(exp, sign * coeff.unwrap_or_else(BigInt::one));
        }
        Ok(p)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        Self {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(add_exp(*ea, *eb), ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| acc * p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        let a = p("2 - 5t + 2t^2");
        assert_eq!(&a + &LaurentPoly::zero(), a);
        assert!((p("t^2") + p("-t^2")).is_zero());
        assert_eq!(p("1 - t^2") + p("t^2"), LaurentPoly::one());
    }

    #[test]
    fn mul_examples() {
        let a = p("t^-3 + 4t");
        assert_eq!(&a * &LaurentPoly::one(), a);
        assert_eq!(p("t^3") * p("t^-3"), LaurentPoly::one());
    }

    #[test]
    fn substitute_inverse_examples() {
        assert_eq!(LaurentPoly::one().substitute_inverse(), LaurentPoly::one());
        assert_eq!(p("t^2 + 3").substitute_inverse(), p("t^-2 + 3"));
        let a = p("-t^-4 + t^-3 + t^-1");
        assert_eq!(a.substitute_inverse().substitute_inverse(), a);
    }

    #[test]
    fn evaluate_examples() {
        let one = BigRational::one();
        assert_eq!(LaurentPoly::one().evaluate(-1).unwrap(), one);
        let nine = BigRational::from_integer(9.into());
        assert_eq!(p("2 - 5t + 2t^2").evaluate(-1).unwrap(), nine);
        assert_eq!(
            p("t^-1").evaluate(2).unwrap(),
            BigRational::new(1.into(), 2.into())
        );
        assert!(matches!(p("t").evaluate(0), Err(Error::EvaluateAtZero)));
    }

    #[test]
    fn normalize_units_examples() {
        let target = p("2 - 5t + 2t^2");
        assert_eq!(p("-2t^2 + 5t - 2").normalize_units().unwrap(), target);
        assert_eq!(p("t^7").normalize_units().unwrap(), LaurentPoly::one());
        assert_eq!(p("2t^-1 - 5 + 2t").normalize_units().unwrap(), target);
        assert!(LaurentPoly::zero().normalize_units().is_err());
    }

    #[test]
    fn display_format() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("2t^2 - 5t + 2").to_string(), "2 - 5t + 2t^2");
        assert_eq!(
            p("-1 * t^-1 + t^-2 + 2").to_string().replace(' ', ""),
            "t^-2-t^-1+2"
        );
        assert_eq!(p("-t^-4+t^-3+t^-1").to_string(), "-t^-4 + t^-3 + t^-1");
        assert_eq!(LaurentPoly::monomial(-3, 1).display_with("A"), "-3A");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("2 3".parse::<LaurentPoly>().is_err());
        assert!("t^".parse::<LaurentPoly>().is_err());
        assert!("x^2".parse::<LaurentPoly>().is_err());
        assert!(LaurentPoly::parse_with("  A^ -3  ", 'A').is_ok());
    }

    #[test]
    fn div_exact_works() {
        let d = p("-t^-2 - t^2");
        let q = p("3t^5 - t + 7t^-4");
        assert_eq!((&d * &q).div_exact(&d), Some(q));
        assert_eq!(p("t + 1").div_exact(&p("2")), None);
        assert_eq!(p("t^2 + 1").div_exact(&p("t + 1")), None);
        assert_eq!(LaurentPoly::zero().div_exact(&d), Some(LaurentPoly::zero()));
        assert_eq!(p("1").div_exact(&LaurentPoly::zero()), None);
    }

    #[test]
    fn reindex_round_trip() {
        let a = p("t^-3 - 2t + 5");
        assert_eq!(a.reindex(2).try_unreindex(2), Some(a.clone()));
        assert_eq!(a.try_unreindex(2), None);
    }
}
