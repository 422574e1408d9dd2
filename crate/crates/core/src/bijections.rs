//! Bijections between set partitions and the two Bell-counted permutation
//! classes.
//!
//! * `bp2_to_partition` / `partition_to_bp2` pair second-kind Bell
//!   permutations with set partitions directly, without passing through the
//!   code; the code route is kept alongside and the two are asserted equal.
//! * `partition_to_bp1` turns each block, sorted decreasingly, into a cycle;
//!   its image is the class of first-kind Bell permutations, recognized by
//!   `is_bp1`.
//! * `bp1_to_bp2` and `bp2_to_bp1` convert between the two classes by
//!   splicing cycles into one another and splitting them back out.
//! * `verify_diagram` checks that the conversions commute with the code-side
//!   transforms `normalize` and `leftmost_positions`.

use crate::bp2::{self, Bp2Witness};
use crate::codes::{self, phi_tilde_inverse, SubexceedantFunction};
use crate::error::Error;
use crate::partitions::SetPartition;
use crate::perm::Permutation;

/// Direct construction of the partition paired with a second-kind Bell
/// permutation: each weak exceedance letter sigma(i) seeds block i, then the
/// remaining letters, taken in decreasing order, are pushed onto the front
/// of block inom(letter). The decreasing order keeps every block ascending
/// without a final sort, which `from_standard_blocks` verifies.
pub fn bp2_to_partition(sigma: &Permutation) -> Result<SetPartition, Error> {
    if !bp2::is_bp2_by_code(sigma) {
        return Err(Error::NotBp2);
    }
    let letters = sigma.weak_exceedance_letters();
    let k = letters.len();
    let mut blocks: Vec<Vec<usize>> = letters.into_iter().map(|m| vec![m]).collect();
    let mut is_letter = vec![false; sigma.n() + 1];
    for block in &blocks {
        is_letter[block[0]] = true;
    }
    let table = sigma.inom_table();
    for j in (1..=sigma.n()).rev() {
        if !is_letter[j] {
            let block = table.get(j);
            debug_assert!(block <= k);
            blocks[block - 1].insert(0, j);
        }
    }
    let direct = SetPartition::from_standard_blocks(blocks)
        .expect("front insertion in decreasing order yields the standard representation");
    debug_assert_eq!(direct, bp2_to_partition_by_code(sigma).unwrap());
    Ok(direct)
}

/// Code route for the same pairing: decode the permutation and read the
/// word as a canonical form. Agrees with `bp2_to_partition` on all of
/// BP2(n); both are exercised by the oracle suite.
pub fn bp2_to_partition_by_code(sigma: &Permutation) -> Result<SetPartition, Error> {
    SetPartition::from_canonical(&phi_tilde_inverse(sigma)).map_err(|e| match e {
        Error::NotAnRgf { .. } => Error::NotBp2,
        other => other,
    })
}

/// Inverse pairing: builds the second-kind Bell permutation of a partition.
/// Block maxima become the images of the first k positions; every other
/// element j, taken in decreasing order, becomes the image of the first
/// position on the orbit walk from j's block index that has no image yet.
pub fn partition_to_bp2(pi: &SetPartition) -> Permutation {
    let n = pi.n();
    let k = pi.block_count();
    let mut word = vec![0; n + 1]; // 1-based; 0 = unassigned
    let mut is_max = vec![false; n + 1];
    for (idx, block) in pi.blocks().iter().enumerate() {
        let m = *block.last().unwrap();
        word[idx + 1] = m;
        is_max[m] = true;
    }
    debug_assert!(k <= n);
    for j in (1..=n).rev() {
        if is_max[j] {
            continue;
        }
        let mut p = pi.block_of(j);
        while word[p] != 0 {
            p = word[p];
        }
        word[p] = j;
    }
    Permutation::from_word(word[1..].to_vec())
        .expect("every position receives exactly one image")
}

/// First-kind Bell permutation of a partition: each block, reordered
/// decreasingly, becomes a cycle.
pub fn partition_to_bp1(pi: &SetPartition) -> Permutation {
    let n = pi.n();
    let mut word = vec![0; n];
    for block in pi.blocks() {
        // descending traversal: each element maps to the next smaller one,
        // the minimum closes the cycle back to the maximum
        for pair in block.windows(2) {
            word[pair[1] - 1] = pair[0];
        }
        word[block[0] - 1] = *block.last().unwrap();
    }
    Permutation::from_word(word).expect("blocks partition [n]")
}

/// Recognizes first-kind Bell permutations: every cycle, traversed from its
/// maximum element, is strictly decreasing.
pub fn is_bp1(sigma: &Permutation) -> bool {
    for cycle in sigma.cycle_decomposition().cycles() {
        let max_at = cycle
            .iter()
            .enumerate()
            .max_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap();
        let descending = cycle
            .iter()
            .cycle()
            .skip(max_at)
            .take(cycle.len())
            .collect::<Vec<_>>();
        if !descending.windows(2).all(|w| w[0] > w[1]) {
            return false;
        }
    }
    true
}

/// Converts a first-kind Bell permutation into a second-kind one. With the
/// cycles ordered by increasing minima, for i = k down to 2: when i is not
/// the minimum of the i-th cycle, that cycle is spliced into the cycle
/// currently containing i, right after i, entered at the i-th cycle's
/// original maximum. The splice is two image updates on the word.
pub fn bp1_to_bp2(sigma: &Permutation) -> Result<Permutation, Error> {
    if !is_bp1(sigma) {
        return Err(Error::NotBp1);
    }
    let decomposition = sigma.cycle_decomposition();
    let cycles = decomposition.cycles();
    let k = cycles.len();
    let mut word = sigma.word().to_vec();
    let mut inv = sigma.inverse_word();
    for i in (2..=k).rev() {
        let cycle = &cycles[i - 1];
        if cycle[0] == i {
            continue; // i is the minimum of its own cycle
        }
        let head = *cycle.iter().max().unwrap();
        let tail = inv[head - 1];
        let old = word[i - 1];
        word[i - 1] = head;
        word[tail - 1] = old;
        inv[head - 1] = i;
        inv[old - 1] = tail;
    }
    Ok(Permutation::from_word(word).expect("splicing keeps the word a bijection"))
}

/// Inverse conversion. With k the weak exceedance count, for i = k down
/// to 2: when i is not a cycle minimum of the input, the maximal run of
/// orbit elements greater than i that immediately follows i is split off as
/// a cycle of its own. Descending order matters: splitting the innermost
/// spliced segments first keeps every later run bounded by an element <= i,
/// which is what lets the run test find each segment's true end.
pub fn bp2_to_bp1(sigma: &Permutation) -> Result<Permutation, Error> {
    let cert = bp2::certify(sigma);
    if !cert.verdict {
        return Err(Error::NotBp2);
    }
    let n = sigma.n();
    let k = cert.k;
    let mut was_minimum = vec![false; n + 1];
    for cycle in sigma.cycle_decomposition().cycles() {
        was_minimum[cycle[0]] = true;
    }
    let mut word = sigma.word().to_vec();
    for i in (2..=k).rev() {
        if was_minimum[i] {
            continue;
        }
        let mut run_last = 0;
        let mut next = word[i - 1];
        while next > i {
            run_last = next;
            next = word[run_last - 1];
        }
        if run_last != 0 {
            // close the extracted run into its own cycle
            word[run_last - 1] = word[i - 1];
            word[i - 1] = next;
        }
    }
    let result = Permutation::from_word(word).expect("splitting keeps the word a bijection");
    debug_assert!(is_bp1(&result));
    Ok(result)
}

/// Outcome of the commutative-diagram checks for one first-kind Bell
/// permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramReport {
    /// Decoding the converted permutation equals normalizing the original
    /// code.
    pub conversion_normalizes_code: bool,
    /// Mapping the converted code back through its leftmost positions
    /// restores the original code.
    pub leftmost_restores_code: bool,
    /// The partition read from the normalized code equals the partition of
    /// the original cycle supports.
    pub partition_matches_cycles: bool,
    /// Cycle count of the input equals the weak exceedance count of its
    /// conversion.
    pub cycle_count_matches: bool,
}

impl DiagramReport {
    pub fn all_pass(&self) -> bool {
        self.conversion_normalizes_code
            && self.leftmost_restores_code
            && self.partition_matches_cycles
            && self.cycle_count_matches
    }

    /// Labelled results, for report rendering.
    pub fn checks(&self) -> [(&'static str, bool); 4] {
        [
            ("conversion normalizes code", self.conversion_normalizes_code),
            ("leftmost map restores code", self.leftmost_restores_code),
            ("partition matches cycle supports", self.partition_matches_cycles),
            ("cycle count matches exceedance count", self.cycle_count_matches),
        ]
    }
}

/// Runs the four commutativity checks for a first-kind Bell permutation.
pub fn verify_diagram(sigma: &Permutation) -> Result<DiagramReport, Error> {
    if !is_bp1(sigma) {
        return Err(Error::NotBp1);
    }
    let converted = bp1_to_bp2(sigma)?;
    let code_before: SubexceedantFunction = phi_tilde_inverse(sigma);
    let code_after = phi_tilde_inverse(&converted);
    let normalized = codes::normalize(&code_before);

    let conversion_normalizes_code = code_after == normalized;
    let leftmost_restores_code = codes::leftmost_positions(&code_after) == code_before;

    let supports = SetPartition::from_blocks(
        sigma
            .cycle_decomposition()
            .cycles()
            .iter()
            .cloned()
            .collect(),
    )
    .expect("cycle supports partition [n]");
    let partition_matches_cycles = SetPartition::from_canonical(&normalized)
        .map(|p| p == supports)
        .unwrap_or(false);

    let cycle_count_matches =
        sigma.cycle_decomposition().cycle_count() == converted.weak_exceedances().len();

    Ok(DiagramReport {
        conversion_normalizes_code,
        leftmost_restores_code,
        partition_matches_cycles,
        cycle_count_matches,
    })
}

/// Convenience view of a rejection witness for error reporting at the
/// boundaries (CLI, reports).
pub fn bp2_witness(sigma: &Permutation) -> Option<Bp2Witness> {
    bp2::certify(sigma).witness
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn part(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn bp2_to_partition_golden() {
        assert_eq!(bp2_to_partition(&perm("4 5 2 1 3")).unwrap(), part("1 4/2 3 5"));
        assert_eq!(
            bp2_to_partition(&perm("3 6 8 2 1 4 5 7")).unwrap(),
            part("1 3/2 4 6/5 7 8")
        );
        assert_eq!(
            bp2_to_partition(&Permutation::identity(4)).unwrap(),
            part("1/2/3/4")
        );
        assert_eq!(bp2_to_partition(&perm("2 1 3")), Err(Error::NotBp2));
    }

    #[test]
    fn both_partition_routes_agree_small() {
        for sigma in bp2::enumerate(6, None).unwrap() {
            assert_eq!(
                bp2_to_partition(&sigma).unwrap(),
                bp2_to_partition_by_code(&sigma).unwrap()
            );
        }
    }

    #[test]
    fn partition_to_bp2_golden() {
        assert_eq!(
            partition_to_bp2(&part("1 4 7/2 9/3 5 10/6 8")),
            perm("7 9 10 8 3 1 4 6 2 5")
        );
        assert_eq!(partition_to_bp2(&part("1/2/3/4")), Permutation::identity(4));
        assert_eq!(partition_to_bp2(&part("1 2 3 4 5")), perm("5 1 2 3 4"));
    }

    #[test]
    fn pairing_round_trips_small() {
        for pi in enumerate_partitions(7, None).unwrap() {
            let sigma = partition_to_bp2(&pi);
            assert_eq!(bp2_to_partition(&sigma).unwrap(), pi);
        }
        for sigma in bp2::enumerate(6, None).unwrap() {
            let pi = bp2_to_partition(&sigma).unwrap();
            assert_eq!(partition_to_bp2(&pi), sigma);
        }
    }

    #[test]
    fn block_maxima_are_exceedance_letters() {
        for sigma in bp2::enumerate(6, None).unwrap() {
            let pi = bp2_to_partition(&sigma).unwrap();
            for (idx, block) in pi.blocks().iter().enumerate() {
                assert_eq!(*block.last().unwrap(), sigma.apply(idx + 1));
            }
        }
    }

    #[test]
    fn partition_to_bp1_golden() {
        let sigma = partition_to_bp1(&part("1 2 7 9/3 5 6/4 8"));
        assert_eq!(
            sigma.cycle_decomposition().to_max_first_string(),
            "(9 7 2 1)(6 5 3)(8 4)"
        );
        assert_eq!(partition_to_bp1(&part("1/2/3")), Permutation::identity(3));
        assert_eq!(partition_to_bp1(&part("1 4/2 3 5")), perm("4 5 2 1 3"));
    }

    #[test]
    fn is_bp1_golden() {
        assert!(is_bp1(&perm("(9 7 2 1)(6 5 3)(8 4)")));
        assert!(is_bp1(&Permutation::identity(5)));
        assert!(!is_bp1(&perm("2 3 1")));
    }

    #[test]
    fn bp1_to_bp2_golden() {
        let sigma = perm("(9 7 2 1)(6 5 3)(8 4)");
        let converted = bp1_to_bp2(&sigma).unwrap();
        assert_eq!(
            converted.cycle_decomposition().to_max_first_string(),
            "(9 7 2 6 5 3 8 4 1)"
        );
        assert_eq!(
            bp1_to_bp2(&Permutation::identity(6)).unwrap(),
            Permutation::identity(6)
        );
        // every loop index is its own cycle minimum here, so nothing moves
        assert_eq!(bp1_to_bp2(&perm("(4 1)(5 3 2)")).unwrap(), perm("4 5 2 1 3"));
        assert_eq!(bp1_to_bp2(&perm("2 3 1")), Err(Error::NotBp1));
    }

    #[test]
    fn bp2_to_bp1_golden() {
        let sigma = perm("(1 4 9 7 3 5 8)(2 6)");
        let split = bp2_to_bp1(&sigma).unwrap();
        assert_eq!(
            split.cycle_decomposition().to_string(),
            "(1 4 3)(2 6)(5)(7 9)(8)"
        );
        assert_eq!(
            bp2_to_bp1(&Permutation::identity(5)).unwrap(),
            Permutation::identity(5)
        );
        let big = perm("(9 7 2 6 5 3 8 4 1)");
        assert_eq!(
            bp2_to_bp1(&big).unwrap().cycle_decomposition().to_max_first_string(),
            "(9 7 2 1)(6 5 3)(8 4)"
        );
        assert_eq!(bp2_to_bp1(&perm("2 1 3")), Err(Error::NotBp2));
    }

    #[test]
    fn conversion_round_trips_small() {
        for pi in enumerate_partitions(7, None).unwrap() {
            let bp1 = partition_to_bp1(&pi);
            let bp2 = bp1_to_bp2(&bp1).unwrap();
            assert!(crate::bp2::is_bp2_by_code(&bp2));
            assert_eq!(bp2_to_bp1(&bp2).unwrap(), bp1);
        }
        for sigma in bp2::enumerate(6, None).unwrap() {
            let bp1 = bp2_to_bp1(&sigma).unwrap();
            assert_eq!(bp1_to_bp2(&bp1).unwrap(), sigma);
        }
    }

    #[test]
    fn diagram_golden() {
        let report = verify_diagram(&perm("(9 7 2 1)(6 5 3)(8 4)")).unwrap();
        assert!(report.all_pass());
        let report = verify_diagram(&Permutation::identity(4)).unwrap();
        assert!(report.all_pass());
        assert_eq!(verify_diagram(&perm("2 3 1")), Err(Error::NotBp1));
    }

    #[test]
    fn diagram_passes_everywhere_small() {
        for pi in enumerate_partitions(6, None).unwrap() {
            let bp1 = partition_to_bp1(&pi);
            assert!(verify_diagram(&bp1).unwrap().all_pass(), "failed at {bp1}");
        }
    }

    #[test]
    fn block_count_is_conserved() {
        for pi in enumerate_partitions(6, None).unwrap() {
            let k = pi.block_count();
            let bp1 = partition_to_bp1(&pi);
            assert_eq!(bp1.cycle_decomposition().cycle_count(), k);
            let bp2 = bp1_to_bp2(&bp1).unwrap();
            assert_eq!(bp2.weak_exceedances().len(), k);
            assert_eq!(bp2_to_partition(&bp2).unwrap().block_count(), k);
        }
    }
}
