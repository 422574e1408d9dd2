//! Subexceedant functions and the two permutation codes built from them.
//!
//! A subexceedant function over [n] is a word f(1)..f(n) with
//! 1 <= f(i) <= i; there are n! of them. Two bijections onto the symmetric
//! group are provided, both products of the transpositions (i f(i)):
//!
//! * `phi` applies (1 f(1)) first, then (2 f(2)), ..., up to (n f(n));
//! * `phi_tilde` applies (n f(n)) first, down to (1 f(1)).
//!
//! "Applies first" means nearest the argument: with f = 121132342,
//! phi(f) = 568179342 and phi_tilde(f) = 497812536. These two golden values
//! freeze the composition convention; an implementation that fails them has
//! the convention backwards.
//!
//! `phi_tilde_inverse` recovers f by peeling transpositions off the inverse
//! word; it coincides with the inom table of the permutation, which the test
//! suite checks exhaustively as the two routes are computed independently.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::perm::Permutation;
use crate::text;

/// A word f(1)..f(n) with 1 <= f(i) <= i.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubexceedantFunction {
    word: Vec<usize>,
}

impl SubexceedantFunction {
    /// Validates the subexceedant bound at every position; the empty word is
    /// rejected.
    pub fn from_word(word: Vec<usize>) -> Result<Self, Error> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        for (idx, &v) in word.iter().enumerate() {
            if v < 1 || v > idx + 1 {
                return Err(Error::SubexceedantBound {
                    position: idx + 1,
                    value: v,
                });
            }
        }
        Ok(SubexceedantFunction { word })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Value at a 1-based position.
    pub fn get(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Ascending list of distinct values, Im(f).
    pub fn image(&self) -> Vec<usize> {
        let mut present = vec![false; self.n() + 1];
        for &v in &self.word {
            present[v] = true;
        }
        (1..=self.n()).filter(|&v| present[v]).collect()
    }

    /// Number of distinct values, IMA(f).
    pub fn ima(&self) -> usize {
        self.image().len()
    }
}

impl fmt::Display for SubexceedantFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::join_values(&self.word))
    }
}

impl FromStr for SubexceedantFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        text::parse_word_with(s, SubexceedantFunction::from_word)
    }
}

/// The permutation (1 f(1)) (2 f(2)) ... (n f(n)), leftmost factor applied
/// first.
pub fn phi(f: &SubexceedantFunction) -> Permutation {
    let n = f.n();
    let mut builder = TranspositionProduct::identity(n);
    for i in 1..=n {
        builder.apply_after(i, f.get(i));
    }
    builder.finish()
}

/// The permutation (n f(n)) (n-1 f(n-1)) ... (1 f(1)), leftmost factor
/// applied first.
pub fn phi_tilde(f: &SubexceedantFunction) -> Permutation {
    let n = f.n();
    let mut builder = TranspositionProduct::identity(n);
    for i in (1..=n).rev() {
        builder.apply_after(i, f.get(i));
    }
    builder.finish()
}

/// Inverse of `phi`: peels factors off from i = n down to 1. At each step the
/// remaining product fixes everything above i, so f(i) is read off at
/// position i and the factor (i f(i)) is cancelled.
pub fn phi_inverse(sigma: &Permutation) -> SubexceedantFunction {
    peel_word(sigma.word().to_vec())
}

/// Inverse of `phi_tilde`, the code sending a permutation to the word of its
/// orbital minorants. Computed by peeling transpositions off the inverse
/// word, independently of `Permutation::inom_table`.
pub fn phi_tilde_inverse(sigma: &Permutation) -> SubexceedantFunction {
    peel_word(sigma.inverse().word().to_vec())
}

fn peel_word(mut word: Vec<usize>) -> SubexceedantFunction {
    let n = word.len();
    let mut inv = vec![0; n + 1];
    for (idx, &v) in word.iter().enumerate() {
        inv[v] = idx + 1;
    }
    let mut code = vec![0; n];
    for i in (1..=n).rev() {
        let v = word[i - 1];
        code[i - 1] = v;
        if v != i {
            // cancel the factor (i v): exchange the values i and v
            let pi = inv[i];
            word[pi - 1] = v;
            word[i - 1] = i;
            inv[v] = pi;
            inv[i] = i;
        }
    }
    SubexceedantFunction::from_word(code)
        .expect("peeling yields values within the subexceedant bound")
}

/// Replaces every value with its rank (1-based) among the distinct values of
/// the word; the image of the result is the interval [IMA(f)].
pub fn normalize(f: &SubexceedantFunction) -> SubexceedantFunction {
    let image = f.image();
    let mut rank = vec![0; f.n() + 1];
    for (idx, &v) in image.iter().enumerate() {
        rank[v] = idx + 1;
    }
    let word = f.word().iter().map(|&v| rank[v]).collect();
    SubexceedantFunction::from_word(word).expect("ranks never exceed the original values")
}

/// Replaces every value with the leftmost position at which that value
/// occurs in the word.
pub fn leftmost_positions(f: &SubexceedantFunction) -> SubexceedantFunction {
    let mut first = vec![0; f.n() + 1];
    for (idx, &v) in f.word().iter().enumerate() {
        if first[v] == 0 {
            first[v] = idx + 1;
        }
    }
    let word = f.word().iter().map(|&v| first[v]).collect();
    SubexceedantFunction::from_word(word)
        .expect("a value's leftmost position never exceeds the current position")
}

/// Incremental product of transpositions acting on [n]; keeps word and
/// inverse to splice each factor in O(1).
struct TranspositionProduct {
    word: Vec<usize>,
    inv: Vec<usize>,
}

impl TranspositionProduct {
    fn identity(n: usize) -> Self {
        TranspositionProduct {
            word: (1..=n).collect(),
            inv: (0..=n).collect(),
        }
    }

    /// Extends the product with the transposition (a b) applied after
    /// everything so far, i.e. the values a and b exchange places.
    fn apply_after(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let pa = self.inv[a];
        let pb = self.inv[b];
        self.word[pa - 1] = b;
        self.word[pb - 1] = a;
        self.inv[a] = pb;
        self.inv[b] = pa;
    }

    fn finish(self) -> Permutation {
        Permutation::from_word(self.word).expect("transposition products stay bijective")
    }
}
