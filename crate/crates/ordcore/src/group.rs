//! Exact arithmetic and canonical normal forms.
//!
//! The center of `G = <x, y | x^m = y^n>` is the infinite cyclic group
//! generated by `z = x^m = y^n`, and `G/<z>` is the free product
//! `Z_m * Z_n`. Choosing the section `x^e (0 < e < m)`, `y^e (0 < e < n)` of
//! the quotient gives every element a unique expression
//!
//! ```text
//! z^c . t_1 t_2 ... t_k
//! ```
//!
//! where the `t_j` are syllables `X^e` (`1 <= e <= m-1`) or `Y^e`
//! (`1 <= e <= n-1`) with strictly alternating axes. Multiplication pushes
//! full powers `x^(+-m)`, `y^(+-n)` into the central charge and cascades
//! cancellations, so equal group elements always reach the same form.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::params::GroupParams;
use crate::words::{translate, Alphabet, Word};

/// Which factor of the free product a syllable lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    fn modulus(self, params: &GroupParams) -> i64 {
        match self {
            Axis::X => i64::from(params.m()),
            Axis::Y => i64::from(params.n()),
        }
    }
}

/// A reduced syllable of the quotient word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Syllable {
    pub axis: Axis,
    pub exponent: u32,
}

/// Canonical form `z^c . t_1 ... t_k`. Structural equality decides equality
/// in the group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NormalForm {
    central: i64,
    syllables: Vec<Syllable>,
}

impl NormalForm {
    pub fn identity() -> NormalForm {
        NormalForm {
            central: 0,
            syllables: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.central == 0 && self.syllables.is_empty()
    }

    /// Exponent of the central element `z = x^m = y^n`.
    pub fn central(&self) -> i64 {
        self.central
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Canonical text form, e.g. `z^-2 · Y X^2` or `1` for the identity.
    /// Unit syllable exponents are omitted; the central exponent never is.
    pub fn canonical_text(&self) -> String {
        use core::fmt::Write;
        if self.is_identity() {
            return String::from("1");
        }
        let mut out = String::new();
        if self.central != 0 {
            let _ = write!(out, "z^{}", self.central);
            if !self.syllables.is_empty() {
                out.push_str(" · ");
            }
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push(match s.axis {
                Axis::X => 'X',
                Axis::Y => 'Y',
            });
            if s.exponent != 1 {
                let _ = write!(out, "^{}", s.exponent);
            }
        }
        out
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

/// Right-multiplies `nf` by `axis^e` for arbitrary `e`, carrying full powers
/// to the central charge.
fn push_axis(nf: &mut NormalForm, axis: Axis, e: i64, params: &GroupParams) {
    if e == 0 {
        return;
    }
    let modulus = axis.modulus(params);
    let total = match nf.syllables.last() {
        Some(last) if last.axis == axis => {
            let t = i64::from(last.exponent) + e;
            nf.syllables.pop();
            t
        }
        _ => e,
    };
    nf.central += total.div_euclid(modulus);
    let r = total.rem_euclid(modulus);
    if r != 0 {
        nf.syllables.push(Syllable {
            axis,
            exponent: r as u32,
        });
    }
}

/// Computes the canonical form of a word over any alphabet.
pub fn normal_form(w: &Word, params: &GroupParams) -> NormalForm {
    let xy = translate(w, Alphabet::Xy, params);
    let mut nf = NormalForm::identity();
    for l in xy.letters() {
        let axis = if l.index == 0 { Axis::X } else { Axis::Y };
        push_axis(&mut nf, axis, i64::from(l.exponent), params);
    }
    nf
}

/// The canonical form of a single generator of the given alphabet
/// (index 0 or 1).
pub fn generator(alphabet: Alphabet, index: u8, params: &GroupParams) -> NormalForm {
    normal_form(&Word::single(alphabet, index, 1), params)
}

pub fn multiply(u: &NormalForm, v: &NormalForm, params: &GroupParams) -> NormalForm {
    let mut out = NormalForm {
        central: u.central + v.central,
        syllables: u.syllables.clone(),
    };
    for s in &v.syllables {
        push_axis(&mut out, s.axis, i64::from(s.exponent), params);
    }
    out
}

pub fn invert(u: &NormalForm, params: &GroupParams) -> NormalForm {
    // (t_1 ... t_k)^-1 z^-c with each syllable inverse X^-e = z^-1 X^(m-e)
    let mut syllables = Vec::with_capacity(u.syllables.len());
    for s in u.syllables.iter().rev() {
        let modulus = s.axis.modulus(params) as u32;
        syllables.push(Syllable {
            axis: s.axis,
            exponent: modulus - s.exponent,
        });
    }
    NormalForm {
        central: -u.central - u.syllables.len() as i64,
        syllables,
    }
}

pub fn power(u: &NormalForm, k: i64, params: &GroupParams) -> NormalForm {
    if k < 0 {
        return invert(&power(u, -k, params), params);
    }
    let mut result = NormalForm::identity();
    let mut base = u.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            result = multiply(&result, &base, params);
        }
        k >>= 1;
        if k > 0 {
            base = multiply(&base, &base, params);
        }
    }
    result
}

/// The homomorphism `G -> Z` sending `x` to `n/gcd` and `y` to `m/gcd`
/// (well defined because both sides of the relation map to `mn/gcd`).
/// Additive under [`multiply`].
pub fn weight(u: &NormalForm, params: &GroupParams) -> i64 {
    let g = i64::from(params.gcd());
    let wx = i64::from(params.n()) / g;
    let wy = i64::from(params.m()) / g;
    let mut total = u.central * (i64::from(params.m()) * i64::from(params.n()) / g);
    for s in &u.syllables {
        total += i64::from(s.exponent)
            * match s.axis {
                Axis::X => wx,
                Axis::Y => wy,
            };
    }
    total
}

fn s2(params: &GroupParams) -> NormalForm {
    generator(Alphabet::S, 1, params)
}

/// Returns `q` with `u = s2^q` if there is one. Outside the Klein case the
/// candidate exponent is forced by [`weight`] (s2 has nonzero weight) and
/// confirmed by an exact comparison; for `(2, 2)` the weight of `s2`
/// vanishes, so a bounded search over `|q| <= syllables + |c| * m` decides.
pub fn s2_power_of(u: &NormalForm, params: &GroupParams) -> Option<i64> {
    let s2 = s2(params);
    if !params.is_klein() {
        let ws = weight(&s2, params);
        debug_assert!(ws > 0);
        let wu = weight(u, params);
        if wu % ws != 0 {
            return None;
        }
        let q = wu / ws;
        if power(&s2, q, params) == *u {
            return Some(q);
        }
        return None;
    }
    let bound = u.syllables.len() as i64 + u.central.abs() * i64::from(params.m()) + 1;
    for q in -bound..=bound {
        if power(&s2, q, params) == *u {
            return Some(q);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn p(m: u32, n: u32) -> GroupParams {
        GroupParams::new(m, n).unwrap()
    }

    fn nf(text: &str, params: &GroupParams) -> NormalForm {
        normal_form(&crate::words::parse_word_any(text).unwrap(), params)
    }

    #[test]
    fn normal_form_examples() {
        let g = p(3, 2);
        let u = nf("x^3", &g);
        assert_eq!(u.central(), 1);
        assert!(u.syllables().is_empty());
        assert_eq!(u.canonical_text(), "z^1");

        let u = nf("x^-1", &g);
        assert_eq!(u.central(), -1);
        assert_eq!(u.canonical_text(), "z^-1 · X^2");

        let u = nf("x y x^2 y", &g);
        assert_eq!(u.central(), 0);
        assert_eq!(u.canonical_text(), "X Y X^2 Y");
    }

    #[test]
    fn multiply_carries() {
        let g = p(3, 2);
        let x2 = nf("x^2", &g);
        let prod = multiply(&x2, &x2, &g);
        assert_eq!(prod, nf("x^4", &g));
        assert_eq!(prod.central(), 1);
        assert_eq!(prod.canonical_text(), "z^1 · X");

        // centrality of z
        let z = nf("x^3", &g);
        let y = nf("y", &g);
        assert_eq!(multiply(&z, &y, &g), multiply(&y, &z, &g));
    }

    #[test]
    fn invert_example() {
        let g = p(3, 2);
        let u = nf("x y", &g);
        let inv = invert(&u, &g);
        assert_eq!(inv.canonical_text(), "z^-2 · Y X^2");
        assert!(multiply(&u, &inv, &g).is_identity());
        assert!(multiply(&inv, &u, &g).is_identity());

        let c = NormalForm {
            central: 5,
            syllables: alloc::vec::Vec::new(),
        };
        assert_eq!(invert(&c, &g).central(), -5);
    }

    #[test]
    fn power_hits_the_center() {
        for (m, n) in [(3, 2), (4, 2), (3, 3), (4, 3), (2, 2)] {
            let g = p(m, n);
            let x = nf("x", &g);
            let y = nf("y", &g);
            let zx = power(&x, i64::from(m), &g);
            let zy = power(&y, i64::from(n), &g);
            assert_eq!(zx.central(), 1);
            assert!(zx.syllables().is_empty());
            assert_eq!(zx, zy);
            assert_eq!(power(&x, 1, &g), x);
            assert!(power(&x, 0, &g).is_identity());
            assert_eq!(power(&x, -2, &g), invert(&power(&x, 2, &g), &g));
        }
    }

    #[test]
    fn defining_relation_holds() {
        // (b a^(m-1))^(n-1) b = a
        for (m, n) in [(3, 2), (4, 2), (3, 3), (4, 3), (2, 2), (5, 4)] {
            let g = p(m, n);
            let a = nf("a", &g);
            let b = nf("b", &g);
            let ba = multiply(&b, &power(&a, i64::from(m - 1), &g), &g);
            let lhs = multiply(&power(&ba, i64::from(n - 1), &g), &b, &g);
            assert_eq!(lhs, a, "relation fails at ({m}, {n})");
        }
    }

    #[test]
    fn weight_examples() {
        let g = p(3, 2);
        assert_eq!(weight(&nf("x", &g), &g), 2);
        assert_eq!(weight(&nf("s2", &g), &g), 1);
        assert_eq!(weight(&NormalForm::identity(), &g), 0);
        // z has weight mn/gcd
        assert_eq!(weight(&nf("x^3", &g), &g), 6);
    }

    #[test]
    fn s2_power_examples() {
        let g = p(3, 2);
        let s2 = nf("x^2 y^-1", &g);
        assert_eq!(s2, generator(Alphabet::S, 1, &g));
        assert_eq!(s2_power_of(&s2, &g), Some(1));
        assert_eq!(s2_power_of(&NormalForm::identity(), &g), Some(0));
        assert_eq!(s2_power_of(&nf("x", &g), &g), None);
        assert_eq!(s2_power_of(&power(&s2, -4, &g), &g), Some(-4));
    }

    #[test]
    fn s2_power_klein_bounded_search() {
        let g = p(2, 2);
        let s2 = generator(Alphabet::S, 1, &g);
        assert_eq!(weight(&s2, &g), 0);
        for q in -5..=5 {
            assert_eq!(s2_power_of(&power(&s2, q, &g), &g), Some(q));
        }
        assert_eq!(s2_power_of(&nf("x", &g), &g), None);
        assert_eq!(s2_power_of(&nf("y x", &g), &g), None);
    }

    #[test]
    fn translations_agree_under_normal_form() {
        // s1 s2 = x and b = s2^-1 as elements
        for (m, n) in [(3, 2), (4, 3), (2, 2)] {
            let g = p(m, n);
            assert_eq!(nf("s1 s2", &g), nf("x", &g));
            assert_eq!(nf("b", &g), invert(&nf("s2", &g), &g));
            let y = parse_word("y", Alphabet::Xy).unwrap();
            for target in [Alphabet::S, Alphabet::A] {
                let t = crate::words::translate(&y, target, &g);
                assert_eq!(normal_form(&t, &g), nf("y", &g), "y via {target:?} at ({m},{n})");
            }
        }
    }
}
