//! Bell permutations of the second kind: the permutations whose
//! `phi_tilde_inverse` code is a restricted growth word. There are B(n) of
//! them over [n], and exactly S(n, k) with k weak exceedances.
//!
//! Three recognizers are provided and kept deliberately independent:
//!
//! * `is_bp2_by_code` tests restricted growth of the peeled code;
//! * `certify` tests the weak-exceedance interval condition together with
//!   the letterwise bound seq(i) <= letter(i), built from inom walks;
//! * `is_bp2_by_reduction` recurses by swapping n with its image and
//!   truncating, checking the interval condition at every level.
//!
//! The test suite verifies exhaustively that the three agree on all of S_n
//! at desk scale.

use num_bigint::BigUint;

use crate::codes::{phi_tilde_inverse, SubexceedantFunction};
use crate::error::Error;
use crate::partitions::is_rgf;
use crate::perm::Permutation;

/// Code-based recognizer: restricted growth of the peeled code.
pub fn is_bp2_by_code(sigma: &Permutation) -> bool {
    is_rgf(&phi_tilde_inverse(sigma))
}

/// Outcome of the characterization recognizer, carrying the sequences it
/// compared and a witness on rejection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bp2Certificate {
    /// Number of weak exceedances.
    pub k: usize,
    /// Weak exceedance letters, in position order.
    pub letters: Vec<usize>,
    /// First-occurrence positions of the inom values, ascending.
    pub seq: Vec<usize>,
    pub verdict: bool,
    pub witness: Option<Bp2Witness>,
}

/// Why a permutation failed the characterization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bp2Witness {
    /// The weak exceedances are not the interval [k]; `position` is the
    /// first prefix length at which the code image stops being an interval.
    NonIntervalPrefix { position: usize },
    /// First index (1-based) at which the first-occurrence sequence exceeds
    /// the weak exceedance letter.
    SeqAboveLetter {
        index: usize,
        seq: usize,
        letter: usize,
    },
}

impl std::fmt::Display for Bp2Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bp2Witness::NonIntervalPrefix { position } => {
                write!(f, "code prefix of length {position} has a non-interval image")
            }
            Bp2Witness::SeqAboveLetter { index, seq, letter } => {
                write!(f, "seq[{index}]={seq} > letter[{index}]={letter}")
            }
        }
    }
}

/// Characterization recognizer: accepts iff the weak exceedances are exactly
/// [k], seq(i) <= letter(i) for every i in [k], and the i-th new inom value
/// is the value i itself.
///
/// The last condition closes a gap in the pairwise inequality: seq is sorted
/// by position, so it cannot see new values arriving out of value order
/// (sigma = 2 4 5 1 3 has seq (1, 3, 4) <= letters (2, 4, 5) entrywise, yet
/// its code 1 1 3 2 3 grows 3 before 2). Requiring inom(seq(i)) = i pins the
/// arrival order, and then seq(i) <= letter(i) holds automatically; the
/// inequality is still checked first so that a violating index is reported
/// as the witness.
pub fn certify(sigma: &Permutation) -> Bp2Certificate {
    let profile = sigma.weak_exc_profile();
    let k = profile.k();
    let table = sigma.inom_table();
    let interval = profile.positions.iter().copied().eq(1..=k);
    if !interval {
        let position = first_non_interval_prefix(&table)
            .expect("a non-interval weak exceedance set forces a non-interval code prefix");
        return Bp2Certificate {
            k,
            letters: profile.letters,
            seq: profile.seq,
            verdict: false,
            witness: Some(Bp2Witness::NonIntervalPrefix { position }),
        };
    }
    debug_assert_eq!(profile.seq.len(), k);
    for (idx, (&g, &a)) in profile.seq.iter().zip(profile.letters.iter()).enumerate() {
        if g > a {
            return Bp2Certificate {
                k,
                letters: profile.letters.clone(),
                seq: profile.seq.clone(),
                verdict: false,
                witness: Some(Bp2Witness::SeqAboveLetter {
                    index: idx + 1,
                    seq: g,
                    letter: a,
                }),
            };
        }
    }
    for (idx, &g) in profile.seq.iter().enumerate() {
        if table.get(g) != idx + 1 {
            // a later value arrived first; position g is exactly where the
            // code's prefix image stops being an interval
            return Bp2Certificate {
                k,
                letters: profile.letters.clone(),
                seq: profile.seq.clone(),
                verdict: false,
                witness: Some(Bp2Witness::NonIntervalPrefix { position: g }),
            };
        }
    }
    Bp2Certificate {
        k,
        letters: profile.letters,
        seq: profile.seq,
        verdict: true,
        witness: None,
    }
}

fn first_non_interval_prefix(f: &SubexceedantFunction) -> Option<usize> {
    let mut max = 0;
    for (idx, &v) in f.word().iter().enumerate() {
        if v > max + 1 {
            return Some(idx + 1);
        }
        max = max.max(v);
    }
    None
}

/// Recursive recognizer: the weak exceedances must form an interval at every
/// level, and the reduction (drop the last letter after swapping n with
/// sigma(n)) must itself be accepted.
pub fn is_bp2_by_reduction(sigma: &Permutation) -> bool {
    let mut word = sigma.word().to_vec();
    loop {
        let n = word.len();
        let mut count = 0;
        let mut interval = true;
        for (idx, &v) in word.iter().enumerate() {
            if v >= idx + 1 {
                count += 1;
                if count != idx + 1 {
                    // a weak exceedance found past a gap
                    interval = false;
                    break;
                }
            }
        }
        if !interval {
            return false;
        }
        if n == 1 {
            return true;
        }
        let last = word[n - 1];
        word.truncate(n - 1);
        if last != n {
            for v in word.iter_mut() {
                if *v == n {
                    *v = last;
                    break;
                }
            }
        }
    }
}

/// Grows a second-kind Bell permutation of [n-1] with k weak exceedances
/// into one of [n]: the letter at position i becomes n and the displaced
/// letter is appended (for i = k+1 = n this appends n itself). Choosing
/// i <= k keeps k weak exceedances; i = k+1 creates one more. The code of
/// the result is the code of `sigma` with the letter i appended.
pub fn extend(sigma: &Permutation, i: usize) -> Result<Permutation, Error> {
    if !is_bp2_by_code(sigma) {
        return Err(Error::NotBp2);
    }
    let k = sigma.weak_exceedances().len();
    if i < 1 || i > k + 1 {
        return Err(Error::IndexOutOfRange { index: i, max: k + 1 });
    }
    Ok(extend_unchecked(sigma, i))
}

fn extend_unchecked(sigma: &Permutation, i: usize) -> Permutation {
    let n = sigma.n() + 1;
    let mut word = sigma.word().to_vec();
    if i == n {
        word.push(n);
    } else {
        let displaced = word[i - 1];
        word[i - 1] = n;
        word.push(displaced);
    }
    Permutation::from_word(word).expect("extension keeps the word a bijection")
}

/// Inverse of `extend`: recovers the parent permutation and the insertion
/// index, which equals the last letter of the code (= inom(n)).
pub fn reduce(sigma: &Permutation) -> Result<(Permutation, usize), Error> {
    if !is_bp2_by_code(sigma) {
        return Err(Error::NotBp2);
    }
    let n = sigma.n();
    if n < 2 {
        return Err(Error::InvalidBound(
            "cannot reduce a permutation of size 1".into(),
        ));
    }
    let i = sigma.inom(n);
    let last = sigma.apply(n);
    let mut word = sigma.word().to_vec();
    word.truncate(n - 1);
    if last != n {
        for v in word.iter_mut() {
            if *v == n {
                *v = last;
                break;
            }
        }
    }
    let parent = Permutation::from_word(word).expect("reduction keeps the word a bijection");
    Ok((parent, i))
}

/// Streams all second-kind Bell permutations of [n] (exactly B(n) of them),
/// or those with exactly k weak exceedances (exactly S(n, k)). Generated by
/// recursive extension; the emission order is depth-first with ascending
/// insertion index, which is the lexicographic order of the codes.
pub fn enumerate(n: usize, k: Option<usize>) -> Result<Bp2Iter, Error> {
    if n == 0 {
        return Err(Error::InvalidBound("n must be >= 1".into()));
    }
    if let Some(k) = k {
        if k < 1 || k > n {
            return Err(Error::InvalidBound(format!("k = {k} outside 1..={n}")));
        }
    }
    Ok(Bp2Iter {
        stack: vec![(Permutation::identity(1), 1)],
        n,
        k,
    })
}

/// Depth-first generator over the extension tree.
pub struct Bp2Iter {
    /// Pending subtree roots, most recently discovered last; the second field
    /// is the weak exceedance count, maintained incrementally.
    stack: Vec<(Permutation, usize)>,
    n: usize,
    k: Option<usize>,
}

impl Iterator for Bp2Iter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        while let Some((sigma, exc)) = self.stack.pop() {
            let m = sigma.n();
            if m == self.n {
                return Some(sigma);
            }
            let remaining = self.n - m - 1;
            // children i = 1..=exc+1, pushed in reverse so smaller i pops first
            for i in (1..=exc + 1).rev() {
                let child_exc = if i <= exc { exc } else { exc + 1 };
                if let Some(k) = self.k {
                    // prune subtrees from which k is unreachable
                    if child_exc > k || child_exc + remaining < k {
                        continue;
                    }
                }
                self.stack.push((extend_unchecked(&sigma, i), child_exc));
            }
        }
        None
    }
}

/// Number of second-kind Bell permutations of [n] with k weak exceedances,
/// by the recurrence b(n, k) = k b(n-1, k) + b(n-1, k-1). Numerically equal
/// to the Stirling numbers of the second kind; computed independently of
/// `partitions::stirling` and asserted equal in tests. Returns 0 when k > n.
pub fn count(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let mut row = vec![BigUint::from(1u32)];
    for m in 1..=n {
        let mut next = vec![BigUint::ZERO; m + 1];
        for j in 1..=m {
            let scaled = if j < row.len() {
                &row[j] * BigUint::from(j)
            } else {
                BigUint::ZERO
            };
            next[j] = scaled + &row[j - 1];
        }
        row = next;
    }
    row[k].clone()
}

/// Counts the sigma in BP2(n, k) with sigma(k) = n and sigma(n) < k, the
/// class corresponding to partitions in which n forms a singleton block;
/// equals S(n-1, k-1). Requires n >= 2 and 1 < k < n; computed by filtering
/// the generator.
pub fn count_singleton_class(n: usize, k: usize) -> Result<BigUint, Error> {
    if n < 2 {
        return Err(Error::InvalidBound("n must be >= 2".into()));
    }
    if k <= 1 || k >= n {
        return Err(Error::InvalidBound(format!(
            "k = {k} outside the open range 1 < k < {n}"
        )));
    }
    let count = enumerate(n, Some(k))?
        .filter(|sigma| sigma.apply(k) == n && sigma.apply(n) < k)
        .count();
    Ok(BigUint::from(count))
}
