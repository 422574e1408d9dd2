//! Set partitions of [n] in standard representation, their canonical forms
//! as restricted growth words, exhaustive generation in lexicographic order,
//! and exact Bell / Stirling counting.
//!
//! A restricted growth function (RGF) is a subexceedant word with f(1) = 1
//! and f(i) <= 1 + max(f(1)..f(i-1)); equivalently, every prefix image is an
//! interval starting at 1. RGFs are exactly the canonical forms of set
//! partitions: f(j) is the index of the block containing j.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::codes::SubexceedantFunction;
use crate::error::Error;
use crate::text;

/// A set partition of [n] in standard representation: blocks hold ascending
/// elements and are ordered by increasing minima.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
    n: usize,
}

impl SetPartition {
    /// Builds a partition from arbitrary disjoint blocks covering [n],
    /// normalizing into standard representation.
    pub fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Result<Self, Error> {
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_by_key(|b| b.first().copied().unwrap_or(0));
        Self::from_standard_blocks(blocks)
    }

    /// Builds a partition from blocks that must already be in standard
    /// representation; out-of-order input is an error rather than normalized.
    pub fn from_standard_blocks(blocks: Vec<Vec<usize>>) -> Result<Self, Error> {
        if blocks.is_empty() {
            return Err(Error::InvalidPartition("no blocks".into()));
        }
        let mut n = 0;
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if !block.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidPartition(format!(
                    "block `{}` is not strictly ascending",
                    text::join_values(block)
                )));
            }
            n = n.max(*block.last().unwrap());
        }
        if !blocks.windows(2).all(|w| w[0][0] < w[1][0]) {
            return Err(Error::InvalidPartition(
                "blocks are not ordered by increasing minima".into(),
            ));
        }
        let mut seen = vec![false; n + 1];
        for &v in blocks.iter().flatten() {
            if v == 0 {
                return Err(Error::InvalidPartition("elements must be >= 1".into()));
            }
            if seen[v] {
                return Err(Error::InvalidPartition(format!("element {v} repeated")));
            }
            seen[v] = true;
        }
        if let Some(missing) = (1..=n).find(|&v| !seen[v]) {
            return Err(Error::InvalidPartition(format!(
                "element {missing} missing; blocks must cover [{n}]"
            )));
        }
        Ok(SetPartition { blocks, n })
    }

    /// The partition encoded by a canonical form: block v collects the
    /// positions holding value v. Fails with `NotAnRgf` when some prefix
    /// image of the word is not an interval (such words code no partition).
    pub fn from_canonical(f: &SubexceedantFunction) -> Result<Self, Error> {
        let rgf = Rgf::from_sef(f.clone())?;
        Ok(rgf.to_partition())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// 1-based index of the block containing `j`.
    pub fn block_of(&self, j: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&j))
            .expect("blocks cover [n]")
            + 1
    }

    /// The canonical form: the word whose j-th letter is the index of the
    /// block containing j. Always an RGF.
    pub fn canonical_form(&self) -> Rgf {
        let mut word = vec![0; self.n];
        for (idx, block) in self.blocks.iter().enumerate() {
            for &j in block {
                word[j - 1] = idx + 1;
            }
        }
        let sef = SubexceedantFunction::from_word(word)
            .expect("standard representation keeps every element within its first i blocks");
        Rgf::from_sef(sef).expect("canonical forms satisfy restricted growth")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, block) in self.blocks.iter().enumerate() {
            if idx > 0 {
                f.write_str("/")?;
            }
            f.write_str(&text::join_values(block))?;
        }
        Ok(())
    }
}

/// Accepts blocks joined by "/", e.g. "1 4 7/2 9/3 5 10/6 8"; compact digit
/// blocks ("147/29/3510/68") work for n <= 9. Blocks may arrive unordered and
/// are normalized.
impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let groups: Vec<&str> = s.split('/').collect();
        text::parse_groups_with(&groups, SetPartition::from_blocks)
    }
}

/// A restricted growth word: subexceedant with interval prefix images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rgf {
    inner: SubexceedantFunction,
}

impl Rgf {
    /// Validates restricted growth; the error carries the first prefix
    /// length at which the image stops being an interval.
    pub fn from_sef(f: SubexceedantFunction) -> Result<Self, Error> {
        match first_growth_violation(&f) {
            None => Ok(Rgf { inner: f }),
            Some(position) => Err(Error::NotAnRgf { position }),
        }
    }

    pub fn from_word(word: Vec<usize>) -> Result<Self, Error> {
        Rgf::from_sef(SubexceedantFunction::from_word(word)?)
    }

    /// The word 1 1 ... 1, lexicographically least RGF of size n.
    pub fn first(n: usize) -> Result<Self, Error> {
        Ok(Rgf {
            inner: SubexceedantFunction::from_word(vec![1; n.max(0)])?,
        })
    }

    pub fn n(&self) -> usize {
        self.inner.n()
    }

    pub fn word(&self) -> &[usize] {
        self.inner.word()
    }

    pub fn as_sef(&self) -> &SubexceedantFunction {
        &self.inner
    }

    pub fn into_sef(self) -> SubexceedantFunction {
        self.inner
    }

    /// Largest value in the word = number of blocks of the coded partition.
    pub fn block_count(&self) -> usize {
        self.word().iter().copied().max().unwrap_or(0)
    }

    /// The coded partition: block v is the set of positions holding v.
    pub fn to_partition(&self) -> SetPartition {
        let k = self.block_count();
        let mut blocks = vec![Vec::new(); k];
        for (idx, &v) in self.word().iter().enumerate() {
            blocks[v - 1].push(idx + 1);
        }
        SetPartition::from_standard_blocks(blocks)
            .expect("restricted growth puts block minima in ascending order")
    }

    /// The next RGF of the same size in lexicographic order, or `None` at
    /// the maximum 1 2 3 ... n.
    pub fn successor(&self) -> Option<Rgf> {
        let mut word = self.word().to_vec();
        let mut maxes = prefix_maxes(&word);
        if successor_in_place(&mut word, &mut maxes) {
            Some(Rgf {
                inner: SubexceedantFunction::from_word(word)
                    .expect("successor preserves the subexceedant bound"),
            })
        } else {
            None
        }
    }
}

impl fmt::Display for Rgf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

impl FromStr for Rgf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Rgf::from_sef(s.parse()?)
    }
}

/// Running-max test: f(1) = 1 and f(i) <= 1 + max of the preceding prefix.
pub fn is_rgf(f: &SubexceedantFunction) -> bool {
    first_growth_violation(f).is_none()
}

/// Literal prefix-image test: every prefix image equals {1, ..., p} for some
/// p. Equivalent to `is_rgf`; both are kept and compared in tests.
pub fn is_rgf_by_prefix_intervals(f: &SubexceedantFunction) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    for &v in f.word() {
        seen.insert(v);
        let p = seen.len();
        if !seen.iter().copied().eq(1..=p) {
            return false;
        }
    }
    true
}

fn first_growth_violation(f: &SubexceedantFunction) -> Option<usize> {
    let mut max = 0;
    for (idx, &v) in f.word().iter().enumerate() {
        if v > max + 1 {
            return Some(idx + 1);
        }
        max = max.max(v);
    }
    None
}

fn prefix_maxes(word: &[usize]) -> Vec<usize> {
    let mut maxes = Vec::with_capacity(word.len());
    let mut max = 0;
    for &v in word {
        max = max.max(v);
        maxes.push(max);
    }
    maxes
}

/// Advances `word` to the next RGF in lexicographic order, keeping the
/// prefix-max array in sync. Returns false at the maximum. The rightmost
/// incrementable letter is bumped and the tail resets to 1s, so the cost is
/// amortized O(1) per call.
fn successor_in_place(word: &mut [usize], maxes: &mut [usize]) -> bool {
    let n = word.len();
    for i in (1..n).rev() {
        if word[i] <= maxes[i - 1] {
            word[i] += 1;
            maxes[i] = maxes[i - 1].max(word[i]);
            for j in i + 1..n {
                word[j] = 1;
                maxes[j] = maxes[i];
            }
            return true;
        }
    }
    false
}

/// All RGFs of size n in lexicographic order; exactly B(n) of them.
pub fn enumerate_rgf(n: usize) -> Result<RgfIter, Error> {
    if n == 0 {
        return Err(Error::InvalidBound("n must be >= 1".into()));
    }
    Ok(RgfIter {
        word: vec![1; n],
        maxes: vec![1; n],
        state: RgfIterState::Fresh,
    })
}

/// Streaming RGF generator; holds one word and its prefix maxima, advancing
/// in place.
pub struct RgfIter {
    word: Vec<usize>,
    maxes: Vec<usize>,
    state: RgfIterState,
}

enum RgfIterState {
    Fresh,
    Running,
    Done,
}

impl RgfIter {
    /// Advances and exposes the current word without allocating; `None` once
    /// exhausted.
    pub fn advance(&mut self) -> Option<&[usize]> {
        match self.state {
            RgfIterState::Fresh => {
                self.state = RgfIterState::Running;
                Some(&self.word)
            }
            RgfIterState::Running => {
                if successor_in_place(&mut self.word, &mut self.maxes) {
                    Some(&self.word)
                } else {
                    self.state = RgfIterState::Done;
                    None
                }
            }
            RgfIterState::Done => None,
        }
    }

    /// Largest value of the current word.
    pub fn current_max(&self) -> usize {
        *self.maxes.last().unwrap()
    }
}

impl Iterator for RgfIter {
    type Item = Rgf;

    fn next(&mut self) -> Option<Rgf> {
        let word = self.advance()?.to_vec();
        Some(Rgf {
            inner: SubexceedantFunction::from_word(word)
                .expect("generated words satisfy the subexceedant bound"),
        })
    }
}

/// All set partitions of [n] in the lexicographic order of their canonical
/// forms; restricted to exactly k blocks when `k` is given.
pub fn enumerate_partitions(
    n: usize,
    k: Option<usize>,
) -> Result<impl Iterator<Item = SetPartition>, Error> {
    if let Some(k) = k {
        if k < 1 || k > n {
            return Err(Error::InvalidBound(format!("k = {k} outside 1..={n}")));
        }
    }
    let iter = enumerate_rgf(n)?;
    Ok(iter
        .filter(move |rgf| k.is_none_or(|k| rgf.block_count() == k))
        .map(|rgf| rgf.to_partition()))
}

/// Number of set partitions of [n] with exactly k blocks (Stirling number of
/// the second kind), by the triangle recurrence
/// S(n, k) = k S(n-1, k) + S(n-1, k-1) with S(0, 0) = 1 and S(n, 0) = 0 for
/// n > 0. Returns 0 when k > n.
pub fn stirling(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    stirling_row(n)[k].clone()
}

fn stirling_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::from(1u32)];
    for m in 1..=n {
        let mut next = vec![BigUint::ZERO; m + 1];
        for k in 1..=m {
            let scaled = if k < row.len() {
                &row[k] * BigUint::from(k)
            } else {
                BigUint::ZERO
            };
            next[k] = scaled + &row[k - 1];
        }
        row = next;
    }
    row
}

/// Number of set partitions of [n] (Bell number): the Stirling row sum, with
/// B(0) = 1.
pub fn bell(n: usize) -> BigUint {
    stirling_row(n).into_iter().sum()
}
