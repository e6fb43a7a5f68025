//! Parameters of the group family.

use core::fmt;

/// The pair `(m, n)` defining `G = <x, y | x^m = y^n>`.
///
/// The convention `m >= n >= 2` is enforced at construction. `(2, 2)` is the
/// Klein bottle group; it is accepted but flagged, since most order-theoretic
/// statements exclude it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupParams {
    m: u32,
    n: u32,
}

/// Rejection reasons for invalid `(m, n)` pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamError {
    /// Both exponents must be at least 2.
    ExponentTooSmall { m: u32, n: u32 },
    /// `m < n` is rejected rather than silently swapped.
    Swapped { m: u32, n: u32 },
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamError::ExponentTooSmall { m, n } => {
                write!(f, "invalid parameters ({m}, {n}): need m >= n >= 2")
            }
            ParamError::Swapped { m, n } => {
                write!(f, "invalid parameters ({m}, {n}): the convention is m >= n")
            }
        }
    }
}

impl GroupParams {
    pub fn new(m: u32, n: u32) -> Result<Self, ParamError> {
        if n < 2 || m < 2 {
            return Err(ParamError::ExponentTooSmall { m, n });
        }
        if m < n {
            return Err(ParamError::Swapped { m, n });
        }
        Ok(GroupParams { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn gcd(&self) -> u32 {
        let (mut a, mut b) = (self.m, self.n);
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }

    /// True exactly for the Klein bottle group `(2, 2)`.
    pub fn is_klein(&self) -> bool {
        self.m == 2 && self.n == 2
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}
