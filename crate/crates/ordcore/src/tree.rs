//! The lifted end space of the Bass-Serre tree and the generator action.
//!
//! An end is written `(N; ±l1 l2 ...)`: an integer level `N`, a side sign,
//! and an infinite, eventually periodic sequence of edge labels. Labels
//! alternate between the `X` range `1..m-1` and the `Y` range `1..n-1`; the
//! first label is in the `X` range on the plus side and in the `Y` range on
//! the minus side.
//!
//! The generators act by the rules
//!
//! ```text
//! x: (N; +i ...) -> (N; +(i+1) ...)        i != m-1
//!    (N; +(m-1) ...) -> (N+1; - ...)
//!    (N; -...) -> (N; +1 ...)
//! y: (N; +...) -> (N+1; -1 ...)
//!    (N; -i ...) -> (N; -(i+1) ...)        i != n-1
//!    (N; -(n-1) ...) -> (N; + ...)
//! ```
//!
//! with `x^-1`, `y^-1` the piecewise inverses. Words act on the left, the
//! innermost (last) letter first. The central element `z = x^m` acts as the
//! deck transformation `N -> N+1`.
//!
//! Comparison is lexicographic on `(N, side, labels)` with minus before plus
//! and labels compared by integer value; this realizes the real-line order
//! of the lifted ends and is validated by the orientation-preservation
//! suite.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::group::{Axis, NormalForm};
use crate::params::GroupParams;
use crate::words::{translate, Alphabet, Word};

/// Side of the basepoint. `Minus < Plus` in the end order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    Minus,
    Plus,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::Minus => Side::Plus,
            Side::Plus => Side::Minus,
        }
    }

    fn sign_char(self) -> char {
        match self {
            Side::Minus => '-',
            Side::Plus => '+',
        }
    }
}

/// A point of the lifted end space, stored as a minimal
/// (preperiod, period) representation of its label sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct End {
    level: i64,
    side: Side,
    preperiod: Vec<u32>,
    period: Vec<u32>,
}

/// Rejection reasons for raw end encodings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EndError {
    EmptyPeriod,
    /// A label violates the range forced by its position's alternation
    /// (X positions take `1..m-1`, Y positions `1..n-1`).
    LabelOutOfRange {
        position: usize,
        label: u32,
        max: u32,
    },
}

impl fmt::Display for EndError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndError::EmptyPeriod => f.write_str("period must be nonempty"),
            EndError::LabelOutOfRange {
                position,
                label,
                max,
            } => write!(
                f,
                "label {label} at position {position} out of range 1..={max}"
            ),
        }
    }
}

impl End {
    /// Canonicalizes a raw encoding: the period is reduced to its primitive
    /// root and the preperiod absorbed into it as far as possible, so two
    /// raws describing the same infinite sequence become structurally equal.
    pub fn new(
        level: i64,
        side: Side,
        preperiod: Vec<u32>,
        period: Vec<u32>,
        params: &GroupParams,
    ) -> Result<End, EndError> {
        if period.is_empty() {
            return Err(EndError::EmptyPeriod);
        }
        let e = End::canonicalized(level, side, preperiod, period);
        e.validate(params)?;
        Ok(e)
    }

    fn canonicalized(level: i64, side: Side, mut preperiod: Vec<u32>, period: Vec<u32>) -> End {
        let mut period = primitive_root(period);
        while let (Some(&p), Some(&q)) = (preperiod.last(), period.last()) {
            if p != q {
                break;
            }
            preperiod.pop();
            period.rotate_right(1);
        }
        End {
            level,
            side,
            preperiod,
            period,
        }
    }

    fn validate(&self, params: &GroupParams) -> Result<(), EndError> {
        // Two unrollings of the period cover both parities it can occupy.
        let span = self.preperiod.len() + 2 * self.period.len();
        for position in 0..span {
            let label = self.label_at(position);
            let max = self.range_max(position, params);
            if label < 1 || label > max {
                return Err(EndError::LabelOutOfRange {
                    position,
                    label,
                    max,
                });
            }
        }
        Ok(())
    }

    fn range_max(&self, position: usize, params: &GroupParams) -> u32 {
        let x_position = (position % 2 == 0) == (self.side == Side::Plus);
        if x_position {
            params.m() - 1
        } else {
            params.n() - 1
        }
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn preperiod(&self) -> &[u32] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u32] {
        &self.period
    }

    /// The label at position `j` of the infinite sequence.
    pub fn label_at(&self, j: usize) -> u32 {
        if j < self.preperiod.len() {
            self.preperiod[j]
        } else {
            self.period[(j - self.preperiod.len()) % self.period.len()]
        }
    }

    /// The base end `E = (0; -1 1 1 ...)`.
    pub fn standard_e() -> End {
        End {
            level: 0,
            side: Side::Minus,
            preperiod: Vec::new(),
            period: vec![1],
        }
    }

    /// The base end `F = (0; +1 1 1 ...)`.
    pub fn standard_f() -> End {
        End {
            level: 0,
            side: Side::Plus,
            preperiod: Vec::new(),
            period: vec![1],
        }
    }

    // -- internal sequence surgery (results re-canonicalized) --------------

    fn drop_front(&self) -> (Vec<u32>, Vec<u32>) {
        if self.preperiod.is_empty() {
            let mut per = self.period.clone();
            per.rotate_left(1);
            (Vec::new(), per)
        } else {
            (self.preperiod[1..].to_vec(), self.period.clone())
        }
    }

    fn with(&self, level: i64, side: Side, pre: Vec<u32>, per: Vec<u32>) -> End {
        End::canonicalized(level, side, pre, per)
    }

    fn prepended(&self, label: u32, side: Side, dlevel: i64) -> End {
        let mut pre = Vec::with_capacity(self.preperiod.len() + 1);
        pre.push(label);
        pre.extend_from_slice(&self.preperiod);
        self.with(self.level + dlevel, side, pre, self.period.clone())
    }

    fn front_replaced(&self, label: u32) -> End {
        let (mut pre, per) = self.drop_front();
        pre.insert(0, label);
        self.with(self.level, self.side, pre, per)
    }

    fn front_dropped(&self, side: Side, dlevel: i64) -> End {
        let (pre, per) = self.drop_front();
        self.with(self.level + dlevel, side, pre, per)
    }
}

fn primitive_root(period: Vec<u32>) -> Vec<u32> {
    let len = period.len();
    for d in 1..=len {
        if len % d == 0 && period.chunks(d).all(|c| c == &period[..d]) {
            return period[..d].to_vec();
        }
    }
    period
}

/// Lexicographic comparison on `(level, side, labels)`; equality is decided
/// after unfolding `|pre1| + |pre2| + lcm(|per1|, |per2|)` labels.
pub fn compare_ends(e1: &End, e2: &End) -> Ordering {
    let by_level = e1.level.cmp(&e2.level);
    if by_level != Ordering::Equal {
        return by_level;
    }
    let by_side = e1.side.cmp(&e2.side);
    if by_side != Ordering::Equal {
        return by_side;
    }
    let span = e1.preperiod.len() + e2.preperiod.len() + lcm(e1.period.len(), e2.period.len());
    for j in 0..span {
        let by_label = e1.label_at(j).cmp(&e2.label_at(j));
        if by_label != Ordering::Equal {
            return by_label;
        }
    }
    Ordering::Equal
}

fn lcm(a: usize, b: usize) -> usize {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        let t = x % y;
        x = y;
        y = t;
    }
    a / x * b
}

/// A single generator or inverse-generator action.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XyLetter {
    X,
    XInv,
    Y,
    YInv,
}

/// Applies one letter to an end, per the action table in the module docs.
pub fn apply_letter(letter: XyLetter, e: &End, params: &GroupParams) -> End {
    let m1 = params.m() - 1;
    let n1 = params.n() - 1;
    let l0 = e.label_at(0);
    match (letter, e.side) {
        (XyLetter::X, Side::Plus) => {
            if l0 != m1 {
                e.front_replaced(l0 + 1)
            } else {
                e.front_dropped(Side::Minus, 1)
            }
        }
        (XyLetter::X, Side::Minus) => e.prepended(1, Side::Plus, 0),
        (XyLetter::XInv, Side::Plus) => {
            if l0 == 1 {
                e.front_dropped(Side::Minus, 0)
            } else {
                e.front_replaced(l0 - 1)
            }
        }
        (XyLetter::XInv, Side::Minus) => e.prepended(m1, Side::Plus, -1),
        (XyLetter::Y, Side::Plus) => e.prepended(1, Side::Minus, 1),
        (XyLetter::Y, Side::Minus) => {
            if l0 != n1 {
                e.front_replaced(l0 + 1)
            } else {
                e.front_dropped(Side::Plus, 0)
            }
        }
        (XyLetter::YInv, Side::Minus) => {
            if l0 == 1 {
                e.front_dropped(Side::Plus, -1)
            } else {
                e.front_replaced(l0 - 1)
            }
        }
        (XyLetter::YInv, Side::Plus) => e.prepended(n1, Side::Minus, 0),
    }
}

/// Left action of a word (over any alphabet): the last letter acts first.
pub fn apply_word(w: &Word, e: &End, params: &GroupParams) -> End {
    let xy = translate(w, Alphabet::Xy, params);
    let mut current = e.clone();
    for l in xy.letters().iter().rev() {
        let letter = match (l.index, l.exponent > 0) {
            (0, true) => XyLetter::X,
            (0, false) => XyLetter::XInv,
            (1, true) => XyLetter::Y,
            _ => XyLetter::YInv,
        };
        for _ in 0..l.exponent.unsigned_abs() {
            current = apply_letter(letter, &current, params);
        }
    }
    current
}

/// Left action of a canonical form: syllables act right to left and the
/// central charge shifts the level.
pub fn apply_normal_form(g: &NormalForm, e: &End, params: &GroupParams) -> End {
    let mut current = e.clone();
    for s in g.syllables().iter().rev() {
        let letter = match s.axis {
            Axis::X => XyLetter::X,
            Axis::Y => XyLetter::Y,
        };
        for _ in 0..s.exponent {
            current = apply_letter(letter, &current, params);
        }
    }
    current.level += g.central();
    current
}

// ---------------------------------------------------------------------------
// Text form: "(N; ±l1 l2 [ p1 p2 ])", the bracketed block repeating forever.
// ---------------------------------------------------------------------------

impl fmt::Display for End {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}", self.level, self.side.sign_char())?;
        for l in &self.preperiod {
            write!(f, "{l} ")?;
        }
        f.write_str("[")?;
        for l in &self.period {
            write!(f, " {l}")?;
        }
        f.write_str(" ])")
    }
}

/// Errors from [`End::parse`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EndParseError {
    Syntax(&'static str),
    Invalid(EndError),
}

impl fmt::Display for EndParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndParseError::Syntax(msg) => write!(f, "end syntax error: {msg}"),
            EndParseError::Invalid(e) => write!(f, "invalid end: {e}"),
        }
    }
}

impl End {
    /// Parses the text form `(N; ±l1 l2 [ p1 p2 ])`. Whitespace between
    /// tokens is free; the bracketed period is mandatory.
    pub fn parse(text: &str, params: &GroupParams) -> Result<End, EndParseError> {
        let s = text.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or(EndParseError::Syntax("expected ( ... )"))?;
        let (level_str, rest) = s
            .split_once(';')
            .ok_or(EndParseError::Syntax("expected `;` after the level"))?;
        let level: i64 = level_str
            .trim()
            .parse()
            .map_err(|_| EndParseError::Syntax("level must be an integer"))?;
        let rest = rest.trim_start();
        let (side, rest) = match rest.as_bytes().first() {
            Some(b'+') => (Side::Plus, &rest[1..]),
            Some(b'-') => (Side::Minus, &rest[1..]),
            _ => return Err(EndParseError::Syntax("expected `+` or `-` sign")),
        };
        let (pre_str, per_str) = match rest.split_once('[') {
            Some((a, b)) => {
                let b = b
                    .strip_suffix(']')
                    .map(str::trim_end)
                    .or_else(|| b.trim_end().strip_suffix(']'))
                    .ok_or(EndParseError::Syntax("expected closing `]`"))?;
                (a, b)
            }
            None => return Err(EndParseError::Syntax("expected `[ period ]` block")),
        };
        let parse_labels = |s: &str| -> Result<Vec<u32>, EndParseError> {
            s.split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| EndParseError::Syntax("labels must be positive integers"))
                })
                .collect()
        };
        let preperiod = parse_labels(pre_str)?;
        let period = parse_labels(per_str)?;
        End::new(level, side, preperiod, period, params).map_err(EndParseError::Invalid)
    }
}
