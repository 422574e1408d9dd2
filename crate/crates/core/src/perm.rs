//! Permutations of [n] in one-line notation, their cycle structure, and the
//! statistics the rest of the crate is built on: weak exceedances, the
//! inverse nearest orbital minorant (inom), and the first-occurrence
//! sequence derived from it.
//!
//! Positions and values are 1-based on every public surface; the paper-style
//! formulas then transcribe without index shifts. Values are immutable after
//! construction and all operations are pure, so everything here is safe to
//! share across threads.

use std::fmt;
use std::str::FromStr;

use crate::codes::SubexceedantFunction;
use crate::error::Error;
use crate::text;

/// A permutation of [n], stored as its one-line word: `word[i-1]` is the
/// image of position `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line word. The word must contain
    /// every value `1..=n` exactly once; the empty word is rejected.
    pub fn from_word(word: Vec<usize>) -> Result<Self, Error> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for (idx, &v) in word.iter().enumerate() {
            if v < 1 || v > n {
                return Err(Error::ValueOutOfRange {
                    position: idx + 1,
                    value: v,
                    max: n,
                });
            }
            if seen[v] {
                return Err(Error::DuplicateValue { value: v });
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    /// The identity permutation of [n]. Panics if `n == 0`; the empty
    /// permutation is rejected everywhere.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations are defined over [n] with n >= 1");
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// One-line word, `word()[i-1]` = image of `i`.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Image of a position, 1-based.
    pub fn apply(&self, x: usize) -> usize {
        self.word[x - 1]
    }

    /// One-line word of the inverse permutation.
    pub(crate) fn inverse_word(&self) -> Vec<usize> {
        let mut inv = vec![0; self.word.len()];
        for (idx, &v) in self.word.iter().enumerate() {
            inv[v - 1] = idx + 1;
        }
        inv
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        Permutation {
            word: self.inverse_word(),
        }
    }

    /// Disjoint-cycle decomposition in canonical form: each cycle starts at
    /// its minimum, cycles are ordered by increasing minima, fixed points
    /// appear as 1-cycles.
    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            cycles.push(cycle);
        }
        CycleDecomposition { cycles, n }
    }

    /// Ascending list of weak exceedance positions, `{i : sigma(i) >= i}`.
    pub fn weak_exceedances(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.apply(i) >= i).collect()
    }

    /// The subword of weak exceedance letters, in position order.
    pub fn weak_exceedance_letters(&self) -> Vec<usize> {
        (1..=self.n())
            .filter(|&i| self.apply(i) >= i)
            .map(|i| self.apply(i))
            .collect()
    }

    /// Letters at anti-exceedance positions (`sigma(i) <= i`), in position
    /// order. Fixed points count as both weak exceedances and
    /// anti-exceedances.
    pub fn anti_exceedance_letters(&self) -> Vec<usize> {
        (1..=self.n())
            .filter(|&i| self.apply(i) <= i)
            .map(|i| self.apply(i))
            .collect()
    }

    /// Inverse nearest orbital minorant of `x`: the first element `<= x` on
    /// the inverse orbit `sigma^-1(x), sigma^-2(x), ...`. Always defined; the
    /// orbit returns to `x` itself in the worst case.
    pub fn inom(&self, x: usize) -> usize {
        assert!(x >= 1 && x <= self.n(), "inom argument outside [n]");
        let inv = self.inverse_word();
        inom_with(&inv, x)
    }

    /// The word `inom(1) inom(2) ... inom(n)`, always a valid subexceedant
    /// function.
    pub fn inom_table(&self) -> SubexceedantFunction {
        let inv = self.inverse_word();
        let word = (1..=self.n()).map(|x| inom_with(&inv, x)).collect();
        SubexceedantFunction::from_word(word)
            .expect("an inom table always satisfies the subexceedant bound")
    }

    /// Ascending positions at which a new inom value first appears, scanning
    /// `x = 1..n`.
    pub fn seq(&self) -> Vec<usize> {
        let n = self.n();
        let table = self.inom_table();
        let mut seen = vec![false; n + 1];
        let mut seq = Vec::new();
        for x in 1..=n {
            let v = table.get(x);
            if !seen[v] {
                seen[v] = true;
                seq.push(x);
            }
        }
        seq
    }

    /// Weak exceedance positions, their letters, and the first-occurrence
    /// sequence, bundled. The two sequences always have equal length.
    pub fn weak_exc_profile(&self) -> WeakExcProfile {
        WeakExcProfile {
            positions: self.weak_exceedances(),
            letters: self.weak_exceedance_letters(),
            seq: self.seq(),
        }
    }
}

fn inom_with(inverse_word: &[usize], x: usize) -> usize {
    let mut y = inverse_word[x - 1];
    while y > x {
        y = inverse_word[y - 1];
    }
    y
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::join_values(&self.word))
    }
}

/// Accepts one-line notation ("4 5 2 1 3", compact "45213" for n <= 9) and
/// cycle notation ("(1 4)(2 5 3)", compact "(14)(253)"). Cycle notation must
/// cover [n] including fixed points as 1-cycles.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let trimmed = s.trim();
        if trimmed.starts_with('(') {
            return Ok(CycleDecomposition::from_str(trimmed)?.to_permutation());
        }
        text::parse_word_with(trimmed, Permutation::from_word)
    }
}

/// Weak exceedance positions of a permutation together with the letters at
/// those positions and the inom first-occurrence sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakExcProfile {
    /// Ascending set `{i : sigma(i) >= i}`.
    pub positions: Vec<usize>,
    /// `sigma(i)` over the positions above, in order.
    pub letters: Vec<usize>,
    /// Ascending positions of first occurrences of the inom values.
    pub seq: Vec<usize>,
}

impl WeakExcProfile {
    /// Number of weak exceedances.
    pub fn k(&self) -> usize {
        self.positions.len()
    }
}

/// Disjoint cycles covering [n], held in canonical form: every cycle starts
/// at its minimum and cycles are ordered by increasing minima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<usize>>,
    n: usize,
}

impl CycleDecomposition {
    /// Builds a decomposition from arbitrary cycles. Each cycle is rotated to
    /// start at its minimum and the collection is sorted by minima; the
    /// cycles must be disjoint and cover [n] where n is the largest element.
    pub fn from_cycles(cycles: Vec<Vec<usize>>) -> Result<Self, Error> {
        if cycles.is_empty() || cycles.iter().any(|c| c.is_empty()) {
            return Err(Error::InvalidCycles("empty cycle".into()));
        }
        let n = cycles
            .iter()
            .flat_map(|c| c.iter().copied())
            .max()
            .unwrap_or(0);
        let mut seen = vec![false; n + 1];
        for &v in cycles.iter().flatten() {
            if v == 0 {
                return Err(Error::InvalidCycles("elements must be >= 1".into()));
            }
            if seen[v] {
                return Err(Error::InvalidCycles(format!("element {v} repeated")));
            }
            seen[v] = true;
        }
        if let Some(missing) = (1..=n).find(|&v| !seen[v]) {
            return Err(Error::InvalidCycles(format!(
                "element {missing} missing; cycles must cover [{n}] (write fixed points as 1-cycles)"
            )));
        }
        let mut canonical: Vec<Vec<usize>> = cycles.into_iter().map(rotate_to_min).collect();
        canonical.sort_by_key(|c| c[0]);
        Ok(CycleDecomposition {
            cycles: canonical,
            n,
        })
    }

    /// The canonical cycles, minima first, ordered by minima.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of cycles, counting fixed points.
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Rebuilds the permutation: within each cycle every element maps to the
    /// next one, and the last maps back to the first.
    pub fn to_permutation(&self) -> Permutation {
        let mut word = vec![0; self.n];
        for cycle in &self.cycles {
            for (idx, &v) in cycle.iter().enumerate() {
                word[v - 1] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Permutation { word }
    }

    /// Rendering with each cycle rotated to start at its maximum, the display
    /// used for first-kind Bell permutations, e.g. "(9 7 2 1)(6 5 3)(8 4)".
    pub fn to_max_first_string(&self) -> String {
        let mut out = String::new();
        for cycle in &self.cycles {
            let rotated = rotate_to_max(cycle.clone());
            out.push('(');
            out.push_str(&text::join_values(&rotated));
            out.push(')');
        }
        out
    }
}

fn rotate_to_min(cycle: Vec<usize>) -> Vec<usize> {
    rotate_to(cycle, |c| {
        c.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i)
    })
}

fn rotate_to_max(cycle: Vec<usize>) -> Vec<usize> {
    rotate_to(cycle, |c| {
        c.iter().enumerate().max_by_key(|(_, &v)| v).map(|(i, _)| i)
    })
}

fn rotate_to(mut cycle: Vec<usize>, pick: impl Fn(&[usize]) -> Option<usize>) -> Vec<usize> {
    let at = pick(&cycle).unwrap_or(0);
    cycle.rotate_left(at);
    cycle
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            write!(f, "({})", text::join_values(cycle))?;
        }
        Ok(())
    }
}

impl FromStr for CycleDecomposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if !s.starts_with('(') || !s.ends_with(')') {
            return Err(Error::Parse("cycle form must look like (..)(..)".into()));
        }
        let mut bodies = Vec::new();
        for group in s.split(')') {
            let group = group.trim();
            if group.is_empty() {
                continue;
            }
            let body = group
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse("unbalanced parentheses in cycle form".into()))?;
            bodies.push(body);
        }
        text::parse_groups_with(&bodies, CycleDecomposition::from_cycles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn constructor_rejects_invalid_words() {
        assert_eq!(Permutation::from_word(vec![]), Err(Error::EmptyWord));
        assert_eq!(
            Permutation::from_word(vec![1, 3]),
            Err(Error::ValueOutOfRange {
                position: 2,
                value: 3,
                max: 2
            })
        );
        assert_eq!(
            Permutation::from_word(vec![2, 2, 1]),
            Err(Error::DuplicateValue { value: 2 })
        );
        assert_eq!(
            Permutation::from_word(vec![1, 0, 2]),
            Err(Error::ValueOutOfRange {
                position: 2,
                value: 0,
                max: 3
            })
        );
    }

    #[test]
    fn cycle_decomposition_golden() {
        let sigma = perm("10 6 8 5 1 4 9 3 2 7");
        let dec = sigma.cycle_decomposition();
        assert_eq!(dec.to_string(), "(1 10 7 9 2 6 4 5)(3 8)");
        assert_eq!(dec.to_permutation(), sigma);

        let id = Permutation::identity(3);
        assert_eq!(id.cycle_decomposition().to_string(), "(1)(2)(3)");

        let dec = perm("4 5 2 1 3").cycle_decomposition();
        assert_eq!(dec.to_string(), "(1 4)(2 5 3)");
    }

    #[test]
    fn cycle_parse_round_trip() {
        let sigma = perm("(1 10 7 9 2 6 4 5)(3 8)");
        assert_eq!(sigma, perm("10 6 8 5 1 4 9 3 2 7"));
        // compact digit cycles
        assert_eq!(perm("(14)(253)"), perm("4 5 2 1 3"));
        // non-canonical input rotations normalize
        let dec: CycleDecomposition = "(5 3 2)(4 1)".parse().unwrap();
        assert_eq!(dec.to_string(), "(1 4)(2 5 3)");
        assert_eq!(dec.to_max_first_string(), "(4 1)(5 3 2)");
    }

    #[test]
    fn cycle_parse_requires_cover() {
        let err = "(1 3)".parse::<CycleDecomposition>().unwrap_err();
        assert!(matches!(err, Error::InvalidCycles(_)));
        let err = "(1 2)(2 3)".parse::<CycleDecomposition>().unwrap_err();
        assert!(matches!(err, Error::InvalidCycles(_)));
    }

    #[test]
    fn weak_exceedances_golden() {
        let sigma = perm("4 3 5 1 2 9 6 7 8");
        assert_eq!(sigma.weak_exceedances(), vec![1, 2, 3, 6]);
        assert_eq!(sigma.weak_exceedance_letters(), vec![4, 3, 5, 9]);

        let id = Permutation::identity(5);
        assert_eq!(id.weak_exceedances(), vec![1, 2, 3, 4, 5]);
        assert_eq!(id.weak_exceedance_letters(), vec![1, 2, 3, 4, 5]);

        let shifted = perm("6 1 2 3 4 5");
        assert_eq!(shifted.weak_exceedances(), vec![1]);

        assert_eq!(
            perm("7 6 3 5 9 2 1 4 8").weak_exceedance_letters(),
            vec![7, 6, 3, 5, 9]
        );
    }

    #[test]
    fn inom_golden_table() {
        let sigma = perm("10 6 8 5 1 4 9 3 2 7");
        assert_eq!(sigma.inom(6), 2);
        assert_eq!(sigma.inom(9), 7);
        assert_eq!(
            sigma.inom_table().word(),
            &[1, 1, 3, 2, 4, 2, 1, 3, 7, 1]
        );

        let id = Permutation::identity(6);
        for x in 1..=6 {
            assert_eq!(id.inom(x), x);
        }
        assert_eq!(id.inom_table().word(), &[1, 2, 3, 4, 5, 6]);

        assert_eq!(
            perm("4 9 7 8 1 2 5 3 6").inom_table().word(),
            &[1, 2, 1, 1, 3, 2, 3, 4, 2]
        );
    }

    #[test]
    fn seq_golden() {
        assert_eq!(perm("4 3 5 1 2 9 6 7 8").seq(), vec![1, 2, 5, 6]);
        assert_eq!(Permutation::identity(4).seq(), vec![1, 2, 3, 4]);
        assert_eq!(perm("7 6 3 5 9 2 1 4 8").seq(), vec![1, 2, 3, 4, 8]);
    }

    #[test]
    fn profile_cardinalities_match() {
        for s in ["4 3 5 1 2 9 6 7 8", "2 4 5 9 8 7 3 1 6", "1"] {
            let p = perm(s).weak_exc_profile();
            assert_eq!(p.positions.len(), p.seq.len());
            assert_eq!(p.positions.len(), p.k());
        }
    }

    #[test]
    fn display_parse_round_trip() {
        for s in ["4 5 2 1 3", "1", "10 6 8 5 1 4 9 3 2 7"] {
            let sigma = perm(s);
            assert_eq!(sigma.to_string(), s);
            assert_eq!(perm(&sigma.to_string()), sigma);
        }
    }
}
