//! Deterministic input builders shared by the benchmarks.

use bellperm::partitions::Rgf;
use bellperm::SubexceedantFunction;

/// A subexceedant word of size n from a fixed mixing recurrence; no RNG so
/// runs are reproducible.
pub fn scrambled_sef(n: usize) -> SubexceedantFunction {
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    let word = (1..=n)
        .map(|i| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % i + 1
        })
        .collect();
    SubexceedantFunction::from_word(word).expect("values stay within the bound")
}

/// A restricted growth word of size n from the same recurrence, clamped to
/// the growth condition.
pub fn scrambled_rgf(n: usize) -> Rgf {
    let mut state = 0xd1b5_4a32_d192_ed03u64;
    let mut max = 0usize;
    let word = (0..n)
        .map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let v = (state >> 33) as usize % (max + 1) + 1;
            max = max.max(v);
            v
        })
        .collect();
    Rgf::from_word(word).expect("clamped values satisfy restricted growth")
}
