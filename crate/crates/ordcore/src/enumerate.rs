//! Exhaustive generators: word-length balls, sigma-word streams, ordering
//! fingerprints, and positive-cone factorization search.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::group::{multiply, normal_form, NormalForm};
use crate::orders::{sign, OrderSpec, Sign};
use crate::params::GroupParams;
use crate::words::{Alphabet, Word};

/// Default cap on ball cardinality; exceeding it is an error, never a silent
/// truncation.
pub const DEFAULT_BALL_CAP: usize = 2_000_000;

/// A ball element: its canonical form and a shortest witnessing word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallEntry {
    pub nf: NormalForm,
    pub word: Word,
}

/// The set of group elements of word length at most `radius` over an
/// alphabet, deduplicated by canonical form and keyed by canonical text.
#[derive(Debug, Clone)]
pub struct Ball {
    alphabet: Alphabet,
    radius: u32,
    elements: BTreeMap<String, BallEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallError {
    CapExceeded { cap: usize },
}

impl fmt::Display for BallError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BallError::CapExceeded { cap } => {
                write!(f, "ball exceeds the configured element cap {cap}")
            }
        }
    }
}

impl Ball {
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, nf: &NormalForm) -> bool {
        self.elements.contains_key(&nf.canonical_text())
    }

    pub fn get(&self, nf: &NormalForm) -> Option<&BallEntry> {
        self.elements.get(&nf.canonical_text())
    }

    /// Entries in canonical-text order (deterministic).
    pub fn iter(&self) -> impl Iterator<Item = &BallEntry> {
        self.elements.values()
    }

    /// Entries sorted by witnessing word length, then word text; short
    /// witnesses first.
    pub fn iter_by_length(&self) -> Vec<&BallEntry> {
        let mut v: Vec<&BallEntry> = self.elements.values().collect();
        v.sort_by_key(|e| (e.word.length(), alloc::format!("{}", e.word)));
        v
    }
}

/// Breadth-first closure of the identity under right multiplication by the
/// generators and their inverses.
pub fn ball(
    alphabet: Alphabet,
    radius: u32,
    params: &GroupParams,
    cap: usize,
) -> Result<Ball, BallError> {
    let steps: Vec<(Word, NormalForm)> = [(0u8, 1i32), (0, -1), (1, 1), (1, -1)]
        .into_iter()
        .map(|(index, exponent)| {
            let w = Word::single(alphabet, index, exponent);
            let nf = normal_form(&w, params);
            (w, nf)
        })
        .collect();

    let mut elements = BTreeMap::new();
    let identity = BallEntry {
        nf: NormalForm::identity(),
        word: Word::identity(alphabet),
    };
    elements.insert(identity.nf.canonical_text(), identity.clone());
    let mut frontier = alloc::vec![identity];

    for _ in 0..radius {
        let mut next = Vec::new();
        for entry in &frontier {
            for (letter, step_nf) in &steps {
                let nf = multiply(&entry.nf, step_nf, params);
                let key = nf.canonical_text();
                if elements.contains_key(&key) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(BallError::CapExceeded { cap });
                }
                let word = entry.word.concat(letter);
                let new_entry = BallEntry { nf, word };
                elements.insert(key, new_entry.clone());
                next.push(new_entry);
            }
        }
        frontier = next;
    }

    Ok(Ball {
        alphabet,
        radius,
        elements,
    })
}

/// All syntactically i-positive words over `S` of length at most `max_len`,
/// each once (duplicates arising from free cancellation are removed).
pub fn sigma_positive_words(i: u8, max_len: usize) -> Vec<Word> {
    sigma_words(i, max_len, true)
}

/// The i-negative counterpart of [`sigma_positive_words`].
pub fn sigma_negative_words(i: u8, max_len: usize) -> Vec<Word> {
    sigma_words(i, max_len, false)
}

fn sigma_words(i: u8, max_len: usize, positive: bool) -> Vec<Word> {
    assert!(i == 1 || i == 2, "generator index must be 1 or 2");
    let sign = if positive { 1 } else { -1 };
    // letters allowed: s_i^(sign) plus both signs of every higher letter
    let mut letters: Vec<(u8, i32)> = alloc::vec![(i - 1, sign)];
    if i == 1 {
        letters.push((1, 1));
        letters.push((1, -1));
    }
    let required = (i - 1, sign);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    // iterative product over sequences of each length
    for len in 1..=max_len {
        let mut idx = alloc::vec![0usize; len];
        loop {
            if idx.iter().any(|&j| letters[j] == required) {
                let w = Word::from_letters(Alphabet::S, idx.iter().map(|&j| letters[j]));
                if seen.insert(w.clone()) {
                    out.push(w);
                }
            }
            // odometer increment
            let mut pos = len;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < letters.len() {
                    break;
                }
                idx[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX {
                break;
            }
        }
    }
    out
}

/// Signs of every ball element under an ordering: a cylinder-level
/// approximation of the ordering as a point of the space of left orderings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub spec: String,
    pub radius: u32,
    pub signs: BTreeMap<String, Sign>,
}

impl Fingerprint {
    /// True when both fingerprints assign the same signs (the `spec` labels
    /// may differ).
    pub fn same_signs(&self, other: &Fingerprint) -> bool {
        self.signs == other.signs
    }

    /// Canonical texts on which the two fingerprints disagree.
    pub fn disagreements(&self, other: &Fingerprint) -> Vec<String> {
        self.signs
            .iter()
            .filter(|(k, v)| other.signs.get(*k) != Some(v))
            .map(|(k, _)| k.clone())
            .collect()
    }
}

pub fn fingerprint(
    spec: &OrderSpec,
    alphabet: Alphabet,
    radius: u32,
    params: &GroupParams,
    cap: usize,
) -> Result<Fingerprint, BallError> {
    let ball = ball(alphabet, radius, params, cap)?;
    let mut signs = BTreeMap::new();
    for entry in ball.iter() {
        signs.insert(entry.nf.canonical_text(), sign(spec, &entry.nf, params));
    }
    Ok(Fingerprint {
        spec: spec.label(),
        radius,
        signs,
    })
}

/// Breadth-first search for a product of the cone generators `a`, `b` (no
/// inverses) equal to `g`, shortest first. `None` means no factorization of
/// length at most `max_len` exists; that is inconclusive, not a disproof.
pub fn factorize_in_cone(
    g: &NormalForm,
    max_len: usize,
    params: &GroupParams,
) -> Option<Word> {
    let gens: Vec<(Word, NormalForm)> = (0u8..2)
        .map(|index| {
            let w = Word::single(Alphabet::A, index, 1);
            let nf = normal_form(&w, params);
            (w, nf)
        })
        .collect();
    let mut visited = BTreeSet::new();
    let mut frontier = alloc::vec![BallEntry {
        nf: NormalForm::identity(),
        word: Word::identity(Alphabet::A),
    }];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for entry in &frontier {
            for (letter, gen_nf) in &gens {
                let nf = multiply(&entry.nf, gen_nf, params);
                let word = entry.word.concat(letter);
                if nf == *g {
                    return Some(word);
                }
                if visited.insert(nf.clone()) {
                    next.push(BallEntry { nf, word });
                }
            }
        }
        frontier = next;
    }
    None
}
