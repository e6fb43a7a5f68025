//! Decision procedures for the left orderings.
//!
//! `<_D` (Dehornoy-like, defined by the sigma-positive cone of `{s1, s2}`)
//! is decided dynamically: `g` is positive exactly when the pair
//! `(g(E), g(F))` of images of the base ends exceeds `(E, F)`
//! lexicographically. Both ends are fixed only by powers of `s2`, and those
//! powers fix them simultaneously only in the Klein case, where the sign of
//! the exponent decides.
//!
//! `<_A` (isolated, with positive cone generated by `{a, b}` as a monoid)
//! agrees with `<_D` off the subgroup generated by `s2` and reverses it
//! there: the cone contains every 1-positive element together with the
//! negative powers of `s2`, and a cone containing a cone equals it.
//!
//! A shifted ordering compares `g, h` by comparing `g t, h t` in the base
//! ordering.

use alloc::boxed::Box;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use crate::enumerate::{ball, BallError, DEFAULT_BALL_CAP};
use crate::group::{invert, multiply, normal_form, s2_power_of, NormalForm};
use crate::params::GroupParams;
use crate::tree::{apply_normal_form, compare_ends, End};
use crate::words::{parse_word_any, Alphabet, ParseError};

/// Position of an element relative to the identity. `Zero` only for the
/// identity itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn negated(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        }
    }

    fn of(q: i64) -> Sign {
        match q.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Which left ordering to use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderSpec {
    /// `<_D`, defined by the sigma-positive cone of `{s1, s2}`.
    DehornoyLike,
    /// `<_A`, the isolated ordering with cone generated by `{a, b}`.
    Isolated,
    /// `base` shifted by `t`: `g < h` iff `g t <_base h t`.
    Shifted {
        base: Box<OrderSpec>,
        shift: NormalForm,
    },
}

/// Default bound on shift nesting accepted by [`OrderSpec::parse`].
pub const DEFAULT_SHIFT_DEPTH: usize = 4;

impl OrderSpec {
    pub fn shifted(self, shift: NormalForm) -> OrderSpec {
        OrderSpec::Shifted {
            base: Box::new(self),
            shift,
        }
    }

    /// Number of nested shifts.
    pub fn depth(&self) -> usize {
        match self {
            OrderSpec::Shifted { base, .. } => base.depth() + 1,
            _ => 0,
        }
    }

    /// The generating set a ball should be drawn from when exploring this
    /// ordering: `S` for the Dehornoy-like ordering, `A` otherwise.
    pub fn natural_alphabet(&self) -> Alphabet {
        match self {
            OrderSpec::DehornoyLike => Alphabet::S,
            _ => Alphabet::A,
        }
    }

    /// Parses `"D"`, `"A"`, or either followed by `.shift(WORD)` suffixes,
    /// as in `D.shift(b a).shift(s2)`. Shift words may use any alphabet;
    /// letters decide which one.
    pub fn parse(
        text: &str,
        params: &GroupParams,
        max_depth: usize,
    ) -> Result<OrderSpec, OrderSpecError> {
        let text = text.trim();
        let (mut spec, mut rest) = match text.as_bytes().first() {
            Some(b'D') => (OrderSpec::DehornoyLike, &text[1..]),
            Some(b'A') => (OrderSpec::Isolated, &text[1..]),
            _ => return Err(OrderSpecError::ExpectedBase),
        };
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix(".shift(")
                .ok_or(OrderSpecError::ExpectedShift)?;
            let close = matching_paren(inner).ok_or(OrderSpecError::UnbalancedParen)?;
            let word = parse_word_any(inner[..close].trim()).map_err(OrderSpecError::Word)?;
            spec = spec.shifted(normal_form(&word, params));
            if spec.depth() > max_depth {
                return Err(OrderSpecError::TooDeep { max: max_depth });
            }
            rest = &inner[close + 1..];
        }
        Ok(spec)
    }

    /// Canonical label, with shifts shown as canonical normal-form text.
    pub fn label(&self) -> String {
        match self {
            OrderSpec::DehornoyLike => String::from("D"),
            OrderSpec::Isolated => String::from("A"),
            OrderSpec::Shifted { base, shift } => {
                let mut s = base.label();
                s.push_str(".shift(");
                s.push_str(&shift.canonical_text());
                s.push(')');
                s
            }
        }
    }
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                if depth == 0 {
                    return Some(i);
                }
                depth -= 1;
            }
            _ => {}
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderSpecError {
    ExpectedBase,
    ExpectedShift,
    UnbalancedParen,
    TooDeep { max: usize },
    Word(ParseError),
}

impl fmt::Display for OrderSpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderSpecError::ExpectedBase => f.write_str("order spec must start with `D` or `A`"),
            OrderSpecError::ExpectedShift => {
                f.write_str("expected `.shift(WORD)` after the base order")
            }
            OrderSpecError::UnbalancedParen => f.write_str("unbalanced parenthesis in shift word"),
            OrderSpecError::TooDeep { max } => {
                write!(f, "shift nesting deeper than the configured bound {max}")
            }
            OrderSpecError::Word(e) => write!(f, "bad shift word: {e}"),
        }
    }
}

/// Sign of `g` under `<_D`, decided by the action on the base ends. Equality
/// is decided by normal forms, never by end comparison alone.
pub fn sign_d(g: &NormalForm, params: &GroupParams) -> Sign {
    if g.is_identity() {
        return Sign::Zero;
    }
    let e = End::standard_e();
    let f = End::standard_f();
    let ge = apply_normal_form(g, &e, params);
    let gf = apply_normal_form(g, &f, params);
    match compare_ends(&ge, &e).then_with(|| compare_ends(&gf, &f)) {
        Ordering::Greater => Sign::Positive,
        Ordering::Less => Sign::Negative,
        Ordering::Equal => {
            // Both ends fixed: g lies in <s2>, which happens for g != 1 only
            // in the Klein case; the exponent sign decides there.
            match s2_power_of(g, params) {
                Some(q) => Sign::of(q),
                None => unreachable!("non-s2-power fixing both base ends"),
            }
        }
    }
}

/// Sign of `g` under `<_A`: powers of `s2` reverse their `<_D` sign, all
/// other elements keep it.
pub fn sign_a(g: &NormalForm, params: &GroupParams) -> Sign {
    match s2_power_of(g, params) {
        Some(q) => Sign::of(-q),
        None => sign_d(g, params),
    }
}

/// Sign of `g` under an arbitrary [`OrderSpec`].
pub fn sign(spec: &OrderSpec, g: &NormalForm, params: &GroupParams) -> Sign {
    match spec {
        OrderSpec::DehornoyLike => sign_d(g, params),
        OrderSpec::Isolated => sign_a(g, params),
        OrderSpec::Shifted { base, shift } => {
            let gt = multiply(g, shift, params);
            match compare(base, shift, &gt, params) {
                Ordering::Less => Sign::Positive,
                Ordering::Equal => Sign::Zero,
                Ordering::Greater => Sign::Negative,
            }
        }
    }
}

/// Total left-invariant comparison: `g < h` iff `g^-1 h` is positive.
pub fn compare(
    spec: &OrderSpec,
    g: &NormalForm,
    h: &NormalForm,
    params: &GroupParams,
) -> Ordering {
    match spec {
        OrderSpec::Shifted { base, shift } => {
            let gt = multiply(g, shift, params);
            let ht = multiply(h, shift, params);
            compare(base, &gt, &ht, params)
        }
        _ => {
            let quotient = multiply(&invert(g, params), h, params);
            match sign(spec, &quotient, params) {
                Sign::Positive => Ordering::Less,
                Sign::Zero => Ordering::Equal,
                Sign::Negative => Ordering::Greater,
            }
        }
    }
}

/// Probe failure: the searched ball contains no positive element (only
/// possible for radius 0) or could not be enumerated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeError {
    EmptyPositiveSet,
    Ball(BallError),
}

impl fmt::Display for ProbeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProbeError::EmptyPositiveSet => {
                f.write_str("no positive element in the searched ball")
            }
            ProbeError::Ball(e) => write!(f, "{e}"),
        }
    }
}

/// The least positive element of the word-length ball of the given radius.
pub fn minimal_positive_probe(
    spec: &OrderSpec,
    alphabet: Alphabet,
    radius: u32,
    params: &GroupParams,
) -> Result<NormalForm, ProbeError> {
    let ball = ball(alphabet, radius, params, DEFAULT_BALL_CAP).map_err(ProbeError::Ball)?;
    let mut least: Option<NormalForm> = None;
    for entry in ball.iter() {
        if sign(spec, &entry.nf, params) != Sign::Positive {
            continue;
        }
        least = match least {
            None => Some(entry.nf.clone()),
            Some(current) => {
                if compare(spec, &entry.nf, &current, params) == Ordering::Less {
                    Some(entry.nf.clone())
                } else {
                    Some(current)
                }
            }
        };
    }
    least.ok_or(ProbeError::EmptyPositiveSet)
}
