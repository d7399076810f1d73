//! The discrete Heisenberg group in coordinates.
//!
//! Elements are written `A^m B^n C^p` where `A` and `B` are the two
//! off-center generators, `C = [B, A] = B A B^-1 A^-1` is central, and the
//! only other relations make `C` commute with everything. Moving an `A`
//! power left past a `B` power deposits a `C` power, which gives the closed
//! multiplication law in [`HeisElement::multiply`].
//!
//! All arithmetic is checked `i64`; overflow is an error, never a wrap.

use std::fmt;

use thiserror::Error;

/// Errors from Heisenberg arithmetic and word evaluation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeisError {
    #[error("integer overflow in Heisenberg arithmetic")]
    Overflow,
    #[error("bad token `{token}`: {reason}")]
    Parse { token: String, reason: String },
}

fn add(x: i64, y: i64) -> Result<i64, HeisError> {
    x.checked_add(y).ok_or(HeisError::Overflow)
}

fn mul(x: i64, y: i64) -> Result<i64, HeisError> {
    x.checked_mul(y).ok_or(HeisError::Overflow)
}

/// The element `A^m B^n C^p`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeisElement {
    pub m: i64,
    pub n: i64,
    pub p: i64,
}

impl HeisElement {
    pub const IDENTITY: HeisElement = HeisElement { m: 0, n: 0, p: 0 };
    pub const A: HeisElement = HeisElement { m: 1, n: 0, p: 0 };
    pub const B: HeisElement = HeisElement { m: 0, n: 1, p: 0 };
    pub const C: HeisElement = HeisElement { m: 0, n: 0, p: 1 };

    pub fn new(m: i64, n: i64, p: i64) -> HeisElement {
        HeisElement { m, n, p }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// The product `self · other`.
    ///
    /// Normalizing `A^m1 B^n1 C^p1 · A^m2 B^n2 C^p2` moves `A^m2` left past
    /// `B^n1`, and each such pass emits `C^(n1·m2)`:
    /// `(m1+m2, n1+n2, p1+p2+n1·m2)`.
    pub fn multiply(&self, other: &HeisElement) -> Result<HeisElement, HeisError> {
        Ok(HeisElement {
            m: add(self.m, other.m)?,
            n: add(self.n, other.n)?,
            p: add(add(self.p, other.p)?, mul(self.n, other.m)?)?,
        })
    }

    pub fn inverse(&self) -> Result<HeisElement, HeisError> {
        // Solve self · z = identity: the twist term n·(-m) must be undone.
        Ok(HeisElement {
            m: -self.m,
            n: -self.n,
            p: add(mul(self.n, self.m)?, -self.p)?,
        })
    }

    pub fn pow(&self, k: i64) -> Result<HeisElement, HeisError> {
        let base = if k < 0 { self.inverse()? } else { *self };
        let mut acc = Self::IDENTITY;
        for _ in 0..k.unsigned_abs() {
            acc = acc.multiply(&base)?;
        }
        Ok(acc)
    }

    /// The commutator `x y x^-1 y^-1`, always central:
    /// `(0, 0, x.n·y.m − y.n·x.m)`.
    pub fn commutator(x: &HeisElement, y: &HeisElement) -> Result<HeisElement, HeisError> {
        Ok(HeisElement {
            m: 0,
            n: 0,
            p: add(mul(x.n, y.m)?, -mul(y.n, x.m)?)?,
        })
    }

    /// Image in the abelianization: `C` dies, leaving `(m, n)`.
    pub fn abelianization(&self) -> (i64, i64) {
        (self.m, self.n)
    }

    /// Evaluates a word in `A`, `B`, `C` (tokens like `A`, `B^-1`, `C^3`,
    /// whitespace-separated; the empty string is the identity).
    pub fn evaluate(text: &str) -> Result<HeisElement, HeisError> {
        let mut acc = Self::IDENTITY;
        for token in text.split_whitespace() {
            let (name, exponent) = match token.split_once('^') {
                None => (token, 1),
                Some((name, exp)) => {
                    let exponent = exp.parse::<i64>().map_err(|_| HeisError::Parse {
                        token: token.to_owned(),
                        reason: format!("`{exp}` is not an integer exponent"),
                    })?;
                    (name, exponent)
                }
            };
            let base = match name {
                "A" => Self::A,
                "B" => Self::B,
                "C" => Self::C,
                other => {
                    return Err(HeisError::Parse {
                        token: token.to_owned(),
                        reason: format!("`{other}` is not one of the generators A, B, C"),
                    })
                }
            };
            acc = acc.multiply(&base.pow(exponent)?)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for HeisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.m, self.n, self.p)
    }
}
