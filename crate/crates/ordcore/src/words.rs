//! Abstract words over the three generating sets and their transforms.
//!
//! A [`Word`] is a freely reduced sequence of `(letter, exponent)` pairs over
//! one of three two-letter alphabets:
//!
//! - `XY`: the defining generators `x`, `y`;
//! - `S`: `s1 = x y x^(1-m)`, `s2 = x^(m-1) y^(-1)`;
//! - `A`: `a = x`, `b = y x^(1-m)`.
//!
//! Words are kept canonical (adjacent equal letters merged, zero exponents
//! dropped), so structural equality is equality of freely reduced words.
//! Equality in the group is decided by `group::normal_form`, never here.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::params::GroupParams;

/// One of the three ordered two-letter generating sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Alphabet {
    Xy,
    S,
    A,
}

impl Alphabet {
    pub fn letter_names(&self) -> [&'static str; 2] {
        match self {
            Alphabet::Xy => ["x", "y"],
            Alphabet::S => ["s1", "s2"],
            Alphabet::A => ["a", "b"],
        }
    }

    /// Resolves a token to a letter index. The `S` alphabet also accepts the
    /// braid aliases `σ1`/`σ2` (and `sigma1`/`sigma2`).
    pub fn letter_index(&self, token: &str) -> Option<u8> {
        let [l0, l1] = self.letter_names();
        if token == l0 {
            return Some(0);
        }
        if token == l1 {
            return Some(1);
        }
        if *self == Alphabet::S {
            match token {
                "σ1" | "sigma1" => return Some(0),
                "σ2" | "sigma2" => return Some(1),
                _ => {}
            }
        }
        None
    }

    pub fn name(&self) -> &'static str {
        match self {
            Alphabet::Xy => "xy",
            Alphabet::S => "s",
            Alphabet::A => "a",
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A letter with a nonzero exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Letter {
    pub index: u8,
    pub exponent: i32,
}

/// A freely reduced word over a fixed alphabet. The empty word is the
/// identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(alphabet: Alphabet) -> Word {
        Word {
            alphabet,
            letters: Vec::new(),
        }
    }

    /// Builds a word from raw `(index, exponent)` pairs, merging adjacent
    /// equal letters and cancelling to the freely reduced form.
    pub fn from_letters<I>(alphabet: Alphabet, letters: I) -> Word
    where
        I: IntoIterator<Item = (u8, i32)>,
    {
        let mut out: Vec<Letter> = Vec::new();
        for (index, exponent) in letters {
            debug_assert!(index < 2);
            push_reduced(&mut out, index, i64::from(exponent));
        }
        Word {
            alphabet,
            letters: out,
        }
    }

    pub fn single(alphabet: Alphabet, index: u8, exponent: i32) -> Word {
        Word::from_letters(alphabet, [(index, exponent)])
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Word length: the total number of single-letter factors.
    pub fn length(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.exponent.unsigned_abs() as usize)
            .sum()
    }

    pub fn inverse(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for l in self.letters.iter().rev() {
            out.push(Letter {
                index: l.index,
                exponent: -l.exponent,
            });
        }
        Word {
            alphabet: self.alphabet,
            letters: out,
        }
    }

    /// Concatenation followed by free reduction. Panics if the alphabets
    /// differ; translation between alphabets is always explicit.
    pub fn concat(&self, other: &Word) -> Word {
        assert_eq!(
            self.alphabet, other.alphabet,
            "cannot concatenate words over different alphabets"
        );
        let mut out = self.letters.clone();
        for l in &other.letters {
            push_reduced(&mut out, l.index, i64::from(l.exponent));
        }
        Word {
            alphabet: self.alphabet,
            letters: out,
        }
    }

    pub fn pow(&self, k: i32) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity(self.alphabet);
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let names = self.alphabet.letter_names();
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(names[l.index as usize])?;
            if l.exponent != 1 {
                write!(f, "^{}", l.exponent)?;
            }
        }
        Ok(())
    }
}

fn push_reduced(out: &mut Vec<Letter>, index: u8, exponent: i64) {
    if exponent == 0 {
        return;
    }
    if let Some(last) = out.last_mut() {
        if last.index == index {
            let merged = i64::from(last.exponent) + exponent;
            if merged == 0 {
                out.pop();
            } else {
                last.exponent = clamp_exp(merged);
            }
            return;
        }
    }
    out.push(Letter {
        index,
        exponent: clamp_exp(exponent),
    });
}

fn clamp_exp(e: i64) -> i32 {
    // Exponents come from parsed input or bounded transforms; overflow here
    // would mean astronomically long words.
    i32::try_from(e).expect("word exponent overflow")
}

/// Free reduction. Words are canonical by construction, so this is the
/// identity on any `Word`; it exists as the named operation and is used by
/// tests as the idempotence anchor.
pub fn free_reduce(w: &Word) -> Word {
    Word::from_letters(
        w.alphabet,
        w.letters.iter().map(|l| (l.index, l.exponent)),
    )
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Parse error with a byte position into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownLetter(String),
    ZeroExponent,
    ExpectedExponent,
    UnbalancedParen,
    UnexpectedChar(char),
    EmptyWord,
    TooLong,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::UnknownLetter(t) => {
                write!(f, "unknown letter `{}` at byte {}", t, self.position)
            }
            ParseErrorKind::ZeroExponent => {
                write!(f, "zero exponent at byte {}", self.position)
            }
            ParseErrorKind::ExpectedExponent => {
                write!(f, "expected an integer exponent at byte {}", self.position)
            }
            ParseErrorKind::UnbalancedParen => {
                write!(f, "unbalanced parenthesis at byte {}", self.position)
            }
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected character `{}` at byte {}", c, self.position)
            }
            ParseErrorKind::EmptyWord => {
                write!(f, "empty word at byte {}", self.position)
            }
            ParseErrorKind::TooLong => {
                write!(f, "expanded word too long at byte {}", self.position)
            }
        }
    }
}

const MAX_EXPANDED_LETTERS: usize = 1 << 20;

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    alphabet: Alphabet,
}

impl<'a> Parser<'a> {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
        }
    }

    fn skip_separators(&mut self) {
        while let Some(&c) = self.input.get(self.pos) {
            if c.is_ascii_whitespace() || c == b'*' {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    /// word := factor+
    fn word(&mut self) -> Result<Word, ParseError> {
        let mut out = Word::identity(self.alphabet);
        let mut any = false;
        loop {
            self.skip_separators();
            match self.peek() {
                None | Some(b')') => break,
                _ => {}
            }
            let factor = self.factor()?;
            if out.length() + factor.length() > MAX_EXPANDED_LETTERS {
                return Err(self.err(ParseErrorKind::TooLong));
            }
            out = out.concat(&factor);
            any = true;
        }
        if !any {
            return Err(self.err(ParseErrorKind::EmptyWord));
        }
        Ok(out)
    }

    /// factor := atom ("^" int)?
    fn factor(&mut self) -> Result<Word, ParseError> {
        let atom = self.atom()?;
        self.skip_separators();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_separators();
            let e = self.exponent()?;
            if atom.length().saturating_mul(e.unsigned_abs() as usize) > MAX_EXPANDED_LETTERS {
                return Err(self.err(ParseErrorKind::TooLong));
            }
            Ok(atom.pow(e))
        } else {
            Ok(atom)
        }
    }

    /// atom := letter | "(" word ")" | "1"
    ///
    /// The token `1` for the identity word is a convenience extension of the
    /// grammar, so the identity can be written on a command line.
    fn atom(&mut self) -> Result<Word, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.word()?;
                if self.peek() != Some(b')') {
                    return Err(self.err(ParseErrorKind::UnbalancedParen));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Word::identity(self.alphabet))
            }
            Some(b')') => Err(self.err(ParseErrorKind::UnbalancedParen)),
            Some(_) => self.letter(),
            None => Err(self.err(ParseErrorKind::EmptyWord)),
        }
    }

    fn letter(&mut self) -> Result<Word, ParseError> {
        let start = self.pos;
        while let Some(&c) = self.input.get(self.pos) {
            let stop = c.is_ascii_whitespace()
                || matches!(c, b'*' | b'^' | b'(' | b')');
            if stop {
                break;
            }
            self.pos += 1;
        }
        if self.pos == start {
            let c = self.input[self.pos] as char;
            return Err(ParseError {
                position: start,
                kind: ParseErrorKind::UnexpectedChar(c),
            });
        }
        let token = core::str::from_utf8(&self.input[start..self.pos])
            .map_err(|_| ParseError {
                position: start,
                kind: ParseErrorKind::UnknownLetter("<invalid utf-8>".to_owned()),
            })?;
        // Letter names never contain digits except the trailing 1/2 of the S
        // alphabet, so a token like `s1s2` is reported as unknown rather than
        // split; separators are mandatory between letters.
        match self.alphabet.letter_index(token) {
            Some(index) => Ok(Word::single(self.alphabet, index, 1)),
            None => Err(ParseError {
                position: start,
                kind: ParseErrorKind::UnknownLetter(token.to_owned()),
            }),
        }
    }

    /// int := "-"? [1-9][0-9]*
    fn exponent(&mut self) -> Result<i32, ParseError> {
        let mut neg = false;
        if self.peek() == Some(b'-') {
            neg = true;
            self.pos += 1;
        }
        let start = self.pos;
        let mut value: i64 = 0;
        while let Some(&c) = self.input.get(self.pos) {
            if c.is_ascii_digit() {
                value = value * 10 + i64::from(c - b'0');
                if value > i64::from(i32::MAX) {
                    return Err(self.err(ParseErrorKind::TooLong));
                }
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return Err(self.err(ParseErrorKind::ExpectedExponent));
        }
        if value == 0 {
            return Err(ParseError {
                position: start,
                kind: ParseErrorKind::ZeroExponent,
            });
        }
        Ok(if neg { -(value as i32) } else { value as i32 })
    }
}

/// Parses `text` against the grammar
///
/// ```text
/// word   := factor+          factor := atom ("^" int)?
/// atom   := letter | "(" word ")"
/// int    := "-"? [1-9][0-9]*
/// ```
///
/// Whitespace and `*` both separate tokens. The result is freely reduced.
pub fn parse_word(text: &str, alphabet: Alphabet) -> Result<Word, ParseError> {
    let mut p = Parser {
        input: text.as_bytes(),
        pos: 0,
        alphabet,
    };
    let w = p.word()?;
    p.skip_separators();
    if let Some(c) = p.peek() {
        if c == b')' {
            return Err(p.err(ParseErrorKind::UnbalancedParen));
        }
        return Err(p.err(ParseErrorKind::UnexpectedChar(c as char)));
    }
    Ok(w)
}

/// Parses a word, inferring the alphabet from the letters present. The three
/// alphabets have disjoint letter names, so at most one of them accepts.
pub fn parse_word_any(text: &str) -> Result<Word, ParseError> {
    let mut first_err: Option<ParseError> = None;
    for alphabet in [Alphabet::A, Alphabet::S, Alphabet::Xy] {
        match parse_word(text, alphabet) {
            Ok(w) => return Ok(w),
            Err(e) => {
                let keep = match (&first_err, &e.kind) {
                    (None, _) => true,
                    // prefer a non-letter diagnostic: it is alphabet-independent
                    (Some(prev), _) if matches!(prev.kind, ParseErrorKind::UnknownLetter(_)) => {
                        !matches!(e.kind, ParseErrorKind::UnknownLetter(_))
                            || e.position > prev.position
                    }
                    _ => false,
                };
                if keep {
                    first_err = Some(e);
                }
            }
        }
    }
    Err(first_err.expect("at least one parse attempt"))
}

// ---------------------------------------------------------------------------
// Translation between alphabets
// ---------------------------------------------------------------------------

fn substitution_to_xy(alphabet: Alphabet, params: &GroupParams) -> [Word; 2] {
    let m = params.m() as i32;
    match alphabet {
        Alphabet::Xy => [
            Word::single(Alphabet::Xy, 0, 1),
            Word::single(Alphabet::Xy, 1, 1),
        ],
        // s1 = x y x^(1-m),  s2 = x^(m-1) y^(-1)
        Alphabet::S => [
            Word::from_letters(Alphabet::Xy, [(0, 1), (1, 1), (0, 1 - m)]),
            Word::from_letters(Alphabet::Xy, [(0, m - 1), (1, -1)]),
        ],
        // a = x,  b = y x^(1-m)
        Alphabet::A => [
            Word::single(Alphabet::Xy, 0, 1),
            Word::from_letters(Alphabet::Xy, [(1, 1), (0, 1 - m)]),
        ],
    }
}

fn substitution_from_xy(target: Alphabet, params: &GroupParams) -> [Word; 2] {
    let m = params.m() as i32;
    match target {
        Alphabet::Xy => [
            Word::single(Alphabet::Xy, 0, 1),
            Word::single(Alphabet::Xy, 1, 1),
        ],
        // x = s1 s2,  y = s2^(-1) (s1 s2)^(m-1)
        Alphabet::S => {
            let s1s2 = Word::from_letters(Alphabet::S, [(0, 1), (1, 1)]);
            let y = Word::single(Alphabet::S, 1, -1).concat(&s1s2.pow(m - 1));
            [s1s2, y]
        }
        // x = a,  y = b a^(m-1)
        Alphabet::A => [
            Word::single(Alphabet::A, 0, 1),
            Word::from_letters(Alphabet::A, [(1, 1), (0, m - 1)]),
        ],
    }
}

fn substitute(w: &Word, table: &[Word; 2]) -> Word {
    let mut out = Word::identity(table[0].alphabet());
    for l in w.letters() {
        out = out.concat(&table[l.index as usize].pow(l.exponent));
    }
    out
}

/// Rewrites `w` over the target alphabet, representing the same element of
/// the group. Composite translations route through `XY`. The output is
/// freely reduced.
pub fn translate(w: &Word, target: Alphabet, params: &GroupParams) -> Word {
    if w.alphabet() == target {
        return w.clone();
    }
    let xy = substitute(w, &substitution_to_xy(w.alphabet(), params));
    if target == Alphabet::Xy {
        return xy;
    }
    substitute(&xy, &substitution_from_xy(target, params))
}

// ---------------------------------------------------------------------------
// Twist / detwist
// ---------------------------------------------------------------------------

/// The twisted generating set: with `N` the cardinality,
/// `a_i = (g_i g_(i+1) ... g_N)^((-1)^(N-i+1))`, freely reduced.
///
/// For `N = 2` this sends `(s1, s2)` to `(s1 s2, s2^-1)`, the generating set
/// whose positive monoid is the isolated cone.
pub fn twist_set(gens: &[Word]) -> Vec<Word> {
    assert!(!gens.is_empty(), "twist_set needs a nonempty sequence");
    let n = gens.len();
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let mut tail = gens[i - 1].clone();
        for g in &gens[i..] {
            tail = tail.concat(g);
        }
        // (-1)^(N-i+1): negative exactly when N-i is even
        let exp = if (n - i) % 2 == 0 { -1 } else { 1 };
        out.push(tail.pow(exp));
    }
    out
}

/// The detwisted generating set, the inverse transform of [`twist_set`]:
/// `d_N = g_N^-1`; `d_i = g_i^-1 g_(i+1)^-1` when `N-i` is even and
/// `d_i = g_i g_(i+1)` when `N-i` is odd.
pub fn detwist_set(gens: &[Word]) -> Vec<Word> {
    assert!(!gens.is_empty(), "detwist_set needs a nonempty sequence");
    let n = gens.len();
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        if i == n {
            out.push(gens[i - 1].inverse());
        } else if (n - i) % 2 == 0 {
            out.push(gens[i - 1].inverse().concat(&gens[i].inverse()));
        } else {
            out.push(gens[i - 1].concat(&gens[i]));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Sigma classification
// ---------------------------------------------------------------------------

/// Syntactic sigma class of a word, decided on the word as written.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaClass {
    /// Contains `s_i` but no `s_j^(+-1)` for `j < i` and no `s_i^(-1)`
    /// (indices are 1-based).
    IPositive(u8),
    INegative(u8),
    IdentityWord,
    /// Both signs of the minimal occurring letter are present.
    Indeterminate,
}

/// Classifies a word by its minimal occurring letter index and the signs of
/// that letter's occurrences. Purely syntactic: no rewriting is attempted,
/// so this is a sound but incomplete positivity test for group elements.
pub fn sigma_classify(w: &Word) -> SigmaClass {
    let min_index = match w.letters().iter().map(|l| l.index).min() {
        None => return SigmaClass::IdentityWord,
        Some(i) => i,
    };
    let mut pos = false;
    let mut neg = false;
    for l in w.letters() {
        if l.index == min_index {
            if l.exponent > 0 {
                pos = true;
            } else {
                neg = true;
            }
        }
    }
    match (pos, neg) {
        (true, false) => SigmaClass::IPositive(min_index + 1),
        (false, true) => SigmaClass::INegative(min_index + 1),
        _ => SigmaClass::Indeterminate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn s(text: &str) -> Word {
        parse_word(text, Alphabet::S).unwrap()
    }

    #[test]
    fn parse_examples() {
        let w = parse_word("x y^-2", Alphabet::Xy).unwrap();
        assert_eq!(
            w.letters(),
            &[
                Letter { index: 0, exponent: 1 },
                Letter { index: 1, exponent: -2 }
            ]
        );

        let w = parse_word("(s1 s2)^2", Alphabet::S).unwrap();
        assert_eq!(
            w.letters()
                .iter()
                .map(|l| (l.index, l.exponent))
                .collect::<Vec<_>>(),
            vec![(0, 1), (1, 1), (0, 1), (1, 1)]
        );

        let err = parse_word("b^0", Alphabet::A).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::ZeroExponent);
        assert_eq!(err.position, 2);
    }

    #[test]
    fn parse_rejects_unknown_letters_and_garbage() {
        let err = parse_word("x q", Alphabet::Xy).unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::UnknownLetter(_)));
        assert!(parse_word("", Alphabet::Xy).is_err());
        assert!(parse_word("(x", Alphabet::Xy).is_err());
        assert!(parse_word("x)", Alphabet::Xy).is_err());
        assert!(parse_word("x^", Alphabet::Xy).is_err());
        // mixed alphabets are unknown letters, not silently translated
        assert!(parse_word("x a", Alphabet::Xy).is_err());
    }

    #[test]
    fn parse_separators_and_aliases() {
        assert_eq!(parse_word("x*y", Alphabet::Xy).unwrap(), parse_word("x y", Alphabet::Xy).unwrap());
        assert_eq!(parse_word("σ1 σ2^-1", Alphabet::S).unwrap(), s("s1 s2^-1"));
        assert_eq!(parse_word_any("b a^2").unwrap().alphabet(), Alphabet::A);
        assert_eq!(parse_word_any("s2 s1").unwrap().alphabet(), Alphabet::S);
        assert_eq!(parse_word_any("x^3").unwrap().alphabet(), Alphabet::Xy);
    }

    #[test]
    fn format_parse_round_trip() {
        for text in ["x y^-2", "s1 s2 s1", "a b^-3 a^2", "1"] {
            let w = parse_word_any(text).unwrap();
            let again = parse_word(&format!("{w}"), w.alphabet()).unwrap();
            assert_eq!(w, again);
        }
    }

    #[test]
    fn free_reduce_examples() {
        let w = Word::from_letters(Alphabet::S, [(0, 1), (0, -1)]);
        assert!(w.is_identity());
        let w = Word::from_letters(Alphabet::Xy, [(0, 2), (0, -1)]);
        assert_eq!(w.letters(), &[Letter { index: 0, exponent: 1 }]);
        assert!(free_reduce(&Word::identity(Alphabet::A)).is_identity());
        // cascading cancellation
        let w = Word::from_letters(Alphabet::S, [(0, 1), (1, 1), (1, -1), (0, -1)]);
        assert!(w.is_identity());
        // idempotence
        let w = parse_word("s1 s2^-1 s1", Alphabet::S).unwrap();
        assert_eq!(free_reduce(&w), w);
    }

    #[test]
    fn twist_two_generators() {
        let out = twist_set(&[s("s1"), s("s2")]);
        assert_eq!(out, vec![s("s1 s2"), s("s2^-1")]);
    }

    #[test]
    fn twist_single_generator_has_negative_exponent() {
        let out = twist_set(&[s("s1")]);
        assert_eq!(out, vec![s("s1^-1")]);
    }

    #[test]
    fn twist_three_generators_sign_pattern() {
        // exponents (-1)^(N-i+1) for N = 3: -, +, -
        let (g1, g2, g3) = (s("s1"), s("s2"), s("s1 s2"));
        let out = twist_set(&[g1.clone(), g2.clone(), g3.clone()]);
        let t1 = g1.concat(&g2).concat(&g3).inverse();
        let t2 = g2.concat(&g3);
        let t3 = g3.inverse();
        assert_eq!(out, vec![t1, t2, t3]);
    }

    #[test]
    fn detwist_examples() {
        let out = detwist_set(&[s("s1"), s("s2")]);
        assert_eq!(out, vec![s("s1 s2"), s("s2^-1")]);
        assert_eq!(detwist_set(&[s("s2")]), vec![s("s2^-1")]);
    }

    #[test]
    fn twist_detwist_round_trip() {
        let pools: Vec<Vec<Word>> = vec![
            vec![s("s1")],
            vec![s("s1"), s("s2")],
            vec![s("s1"), s("s2"), s("s1 s2")],
            vec![s("s1"), s("s2"), s("s1 s2"), s("s2 s1^-1")],
        ];
        for gens in pools {
            assert_eq!(twist_set(&detwist_set(&gens)), gens);
            assert_eq!(detwist_set(&twist_set(&gens)), gens);
        }
    }

    #[test]
    fn sigma_classify_examples() {
        assert_eq!(sigma_classify(&s("s1 s2^-1 s1")), SigmaClass::IPositive(1));
        assert_eq!(sigma_classify(&s("s2^-3")), SigmaClass::INegative(2));
        assert_eq!(
            sigma_classify(&Word::from_letters(Alphabet::S, [(0, 1), (1, 1), (0, -1)])),
            SigmaClass::Indeterminate
        );
        assert_eq!(sigma_classify(&Word::identity(Alphabet::S)), SigmaClass::IdentityWord);
        // classification of the inverse flips the class
        let w = s("s1 s2^-1 s1");
        assert_eq!(sigma_classify(&w.inverse()), SigmaClass::INegative(1));
    }

    #[test]
    fn translate_examples() {
        let p = GroupParams::new(3, 2).unwrap();
        let a = parse_word("a", Alphabet::A).unwrap();
        assert_eq!(translate(&a, Alphabet::Xy, &p), parse_word("x", Alphabet::Xy).unwrap());

        let y = parse_word("y", Alphabet::Xy).unwrap();
        assert_eq!(translate(&y, Alphabet::A, &p), parse_word("b a^2", Alphabet::A).unwrap());

        let s2 = parse_word("s2", Alphabet::S).unwrap();
        assert_eq!(translate(&s2, Alphabet::A, &p), parse_word("b^-1", Alphabet::A).unwrap());
    }
}
