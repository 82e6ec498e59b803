use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::bracket::{kauffman_bracket_with, BracketOptions};
use super::PlanarDiagram;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Jones polynomial, stored in `q = t^{1/2}` so that link values with
/// half-integer powers of `t` stay representable.
///
/// Knots only produce even powers of `q`; those print in `t`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct JonesPolynomial {
    q: LaurentPoly,
}

impl JonesPolynomial {
    pub fn one() -> Self {
        Self {
            q: LaurentPoly::one(),
        }
    }

    pub fn from_q(q: LaurentPoly) -> Self {
        Self { q }
    }

    pub fn from_t(t: &LaurentPoly) -> Self {
        Self { q: t.reindex(2) }
    }

    pub fn q(&self) -> &LaurentPoly {
        &self.q
    }

    /// The polynomial in `t`, if every `q`-exponent is even.
    pub fn to_t(&self) -> Option<LaurentPoly> {
        self.q.try_unreindex(2)
    }

    pub fn has_even_exponents(&self) -> bool {
        self.q.terms().all(|(e, _)| e % 2 == 0)
    }

    /// Value for the mirror image: `t ↦ t^{-1}`.
    pub fn mirror(&self) -> Self {
        Self {
            q: self.q.substitute_inverse(),
        }
    }

    /// `V(-1)` for knot values.
    pub fn at_minus_one(&self) -> Option<BigInt> {
        let v = self.to_t()?.evaluate(-1).ok()?;
        v.is_integer().then(|| v.to_integer())
    }
}

impl fmt::Display for JonesPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_t() {
            Some(t) => f.write_str(&t.display_with("t")),
            None => f.write_str(&self.q.display_with("q")),
        }
    }
}

impl fmt::Debug for JonesPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a polynomial in `t`.
impl FromStr for JonesPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::from_t(&LaurentPoly::parse_with(s, 't')?))
    }
}

impl Mul for &JonesPolynomial {
    type Output = JonesPolynomial;

    fn mul(self, rhs: Self) -> JonesPolynomial {
        JonesPolynomial { q: &self.q * &rhs.q }
    }
}

impl Mul for JonesPolynomial {
    type Output = JonesPolynomial;

    fn mul(self, rhs: Self) -> JonesPolynomial {
        &self * &rhs
    }
}

/// Jones polynomial with the default crossing cap.
pub fn jones(d: &PlanarDiagram) -> Result<JonesPolynomial> {
    jones_with(d, &BracketOptions::default())
}

/// `(-A^3)^{-w} <D>` with `t^{1/2} = A^{-2}`.
pub fn jones_with(d: &PlanarDiagram, opts: &BracketOptions) -> Result<JonesPolynomial> {
    let bracket = kauffman_bracket_with(d, opts)?;
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let a = bracket.shift(-3 * w).scale(&BigInt::from(sign));
    let q = LaurentPoly::from_terms(a.terms().map(|(e, c)| {
        debug_assert!(e % 2 == 0, "bracket exponents share parity");
        (-e / 2, c.clone())
    }));
    Ok(JonesPolynomial { q })
}

/// Value after inserting `2ℓ` half twists into an untwisted band whose
/// removal leaves a two-component unlink: `t^{2ℓ} V + 1 - t^{2ℓ}`.
pub fn jones_twist(v: &JonesPolynomial, ell: i64) -> JonesPolynomial {
    let s = LaurentPoly::monomial(1, 4 * ell);
    JonesPolynomial {
        q: &(&s * &v.q) + &(&LaurentPoly::one() - &s),
    }
}
