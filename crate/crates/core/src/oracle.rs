//! Brute-force baselines and an exhaustive check registry.
//!
//! The enumerators here are deliberately independent of the main
//! implementation paths: permutations come from a plain lexicographic
//! next-permutation loop, subexceedant words from a mixed-radix odometer,
//! and set partitions from recursive block insertion rather than restricted
//! growth words. Each registered check compares an implementation against
//! one of these baselines, or two implementation routes against each other,
//! over the whole space at a given size.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::bijections;
use crate::bp2;
use crate::codes::{self, SubexceedantFunction};
use crate::error::Error;
use crate::partitions::{self, SetPartition};
use crate::perm::Permutation;

/// Soft limit for scans over all n! permutations or subexceedant words.
pub const PERM_SCAN_LIMIT: usize = 8;
/// Soft limit for scans over all B(n) partitions.
pub const PARTITION_SCAN_LIMIT: usize = 10;
/// Default cap on recorded counterexamples per report.
pub const DEFAULT_COUNTEREXAMPLE_CAP: usize = 10;

/// Scan bounds and reporting cap for a check run.
#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub max_perm_n: usize,
    pub max_partition_n: usize,
    pub counterexample_cap: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            max_perm_n: PERM_SCAN_LIMIT,
            max_partition_n: PARTITION_SCAN_LIMIT,
            counterexample_cap: DEFAULT_COUNTEREXAMPLE_CAP,
        }
    }
}

impl CheckConfig {
    /// A configuration with the guards lifted, for explicitly requested
    /// large runs.
    pub fn unguarded() -> Self {
        CheckConfig {
            max_perm_n: usize::MAX,
            max_partition_n: usize::MAX,
            counterexample_cap: DEFAULT_COUNTEREXAMPLE_CAP,
        }
    }
}

/// One discrepancy found by a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Result of one check at one size: how much was scanned and what, if
/// anything, disagreed. The counterexample list is capped; `discrepancies`
/// counts all of them.
#[derive(Debug, Clone, Serialize)]
pub struct DiscrepancyReport {
    pub check: String,
    pub n: usize,
    pub k: Option<usize>,
    pub tested: u64,
    pub discrepancies: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl DiscrepancyReport {
    fn new(check: &str, n: usize, k: Option<usize>) -> Self {
        DiscrepancyReport {
            check: check.to_string(),
            n,
            k,
            tested: 0,
            discrepancies: 0,
            counterexamples: Vec::new(),
        }
    }

    fn fail(&mut self, cap: usize, input: String, expected: String, actual: String) {
        self.discrepancies += 1;
        if self.counterexamples.len() < cap {
            self.counterexamples.push(Counterexample {
                input,
                expected,
                actual,
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.discrepancies == 0
    }

    /// One self-contained JSON line, for CI consumption.
    pub fn to_record(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

impl fmt::Display for DiscrepancyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "check {} n={}{}: {} ({} tested",
            self.check,
            self.n,
            self.k.map(|k| format!(" k={k}")).unwrap_or_default(),
            if self.passed() { "pass" } else { "FAIL" },
            self.tested,
        )?;
        if self.passed() {
            write!(f, ")")
        } else {
            write!(f, ", {} discrepancies)", self.discrepancies)?;
            for ce in &self.counterexamples {
                write!(
                    f,
                    "\n  counterexample: input {} expected {} actual {}",
                    ce.input, ce.expected, ce.actual
                )?;
            }
            Ok(())
        }
    }
}

/// All permutations of [n] in lexicographic order.
pub fn all_permutations(n: usize) -> Result<AllPermutations, Error> {
    all_permutations_with_limit(n, PERM_SCAN_LIMIT)
}

/// Lexicographic permutation stream with an explicit guard override.
pub fn all_permutations_with_limit(n: usize, limit: usize) -> Result<AllPermutations, Error> {
    guard(n, limit)?;
    Ok(AllPermutations {
        word: (1..=n).collect(),
        fresh: true,
    })
}

pub struct AllPermutations {
    word: Vec<usize>,
    fresh: bool,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.fresh {
            self.fresh = false;
        } else if !next_permutation(&mut self.word) {
            return None;
        }
        Some(Permutation::from_word(self.word.clone()).expect("words stay bijections"))
    }
}

/// Classic in-place lexicographic step; false once the word is descending.
fn next_permutation(word: &mut [usize]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// All subexceedant words over [n], as a mixed-radix odometer in
/// lexicographic order.
pub fn all_subexceedant(n: usize) -> Result<AllSubexceedant, Error> {
    all_subexceedant_with_limit(n, PERM_SCAN_LIMIT)
}

pub fn all_subexceedant_with_limit(n: usize, limit: usize) -> Result<AllSubexceedant, Error> {
    guard(n, limit)?;
    Ok(AllSubexceedant {
        word: vec![1; n],
        fresh: true,
    })
}

pub struct AllSubexceedant {
    word: Vec<usize>,
    fresh: bool,
}

impl Iterator for AllSubexceedant {
    type Item = SubexceedantFunction;

    fn next(&mut self) -> Option<SubexceedantFunction> {
        if self.fresh {
            self.fresh = false;
        } else {
            let mut i = self.word.len();
            loop {
                if i == 0 {
                    return None;
                }
                if self.word[i - 1] < i {
                    self.word[i - 1] += 1;
                    for v in &mut self.word[i..] {
                        *v = 1;
                    }
                    break;
                }
                i -= 1;
            }
        }
        Some(
            SubexceedantFunction::from_word(self.word.clone())
                .expect("odometer respects the bound"),
        )
    }
}

/// All set partitions of [n], generated by inserting each element in turn
/// into every existing block or a fresh one. Independent of the restricted
/// growth route.
pub fn all_partitions(n: usize) -> Result<std::vec::IntoIter<SetPartition>, Error> {
    all_partitions_with_limit(n, PARTITION_SCAN_LIMIT)
}

pub fn all_partitions_with_limit(
    n: usize,
    limit: usize,
) -> Result<std::vec::IntoIter<SetPartition>, Error> {
    guard(n, limit)?;
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    insert_recursively(1, n, &mut blocks, &mut out);
    Ok(out.into_iter())
}

fn insert_recursively(
    element: usize,
    n: usize,
    blocks: &mut Vec<Vec<usize>>,
    out: &mut Vec<SetPartition>,
) {
    if element > n {
        out.push(
            SetPartition::from_standard_blocks(blocks.clone())
                .expect("insertion in element order keeps blocks standard"),
        );
        return;
    }
    for b in 0..blocks.len() {
        blocks[b].push(element);
        insert_recursively(element + 1, n, blocks, out);
        blocks[b].pop();
    }
    blocks.push(vec![element]);
    insert_recursively(element + 1, n, blocks, out);
    blocks.pop();
}

fn guard(n: usize, limit: usize) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::InvalidBound("n must be >= 1".into()));
    }
    if n > limit {
        return Err(Error::ScanTooLarge { n, limit });
    }
    Ok(())
}

/// Names accepted by `run_check`, in suite order.
pub const CHECK_NAMES: &[&str] = &[
    "phi-roundtrip",
    "phi-tilde-roundtrip",
    "inom-theorem",
    "recognizer-agreement",
    "bell-count",
    "bp2-count",
    "lambda-chi-roundtrip",
    "mu-injective",
    "beta-theta-roundtrip",
    "diagram",
    "singleton-class",
    "pair-block-count",
    "partition-routes",
    "rgf-count",
];

/// Runs one named check at size n with default guards.
pub fn run_check(name: &str, n: usize, k: Option<usize>) -> Result<DiscrepancyReport, Error> {
    run_check_with(name, n, k, &CheckConfig::default())
}

/// Runs one named check at size n under an explicit configuration.
pub fn run_check_with(
    name: &str,
    n: usize,
    k: Option<usize>,
    config: &CheckConfig,
) -> Result<DiscrepancyReport, Error> {
    match name {
        "phi-roundtrip" => code_roundtrip(name, n, config, codes::phi, codes::phi_inverse),
        "phi-tilde-roundtrip" => {
            code_roundtrip(name, n, config, codes::phi_tilde, codes::phi_tilde_inverse)
        }
        "inom-theorem" => inom_theorem(n, config),
        "recognizer-agreement" => recognizer_agreement_with(n, config, &standard_recognizers()),
        "bell-count" => bell_count_with(n, config, &standard_recognizers()),
        "bp2-count" => bp2_count(n, k, config),
        "lambda-chi-roundtrip" => lambda_chi_roundtrip(n, config),
        "mu-injective" => mu_injective(n, config),
        "beta-theta-roundtrip" => beta_theta_roundtrip(n, config),
        "diagram" => diagram(n, config),
        "singleton-class" => singleton_class(n, k, config),
        "pair-block-count" => pair_block_count(n, config),
        "partition-routes" => partition_routes(n, config),
        "rgf-count" => rgf_count(n, config),
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

/// A named membership predicate, the pluggable unit for the recognizer
/// checks. Swapping in a broken recognizer is how the verification pipeline
/// itself is tested.
pub type Recognizer<'a> = (&'a str, &'a dyn Fn(&Permutation) -> bool);

fn by_characterization(sigma: &Permutation) -> bool {
    bp2::certify(sigma).verdict
}

fn standard_recognizers() -> [(&'static str, &'static dyn Fn(&Permutation) -> bool); 3] {
    [
        ("code", &bp2::is_bp2_by_code),
        ("characterization", &by_characterization),
        ("reduction", &bp2::is_bp2_by_reduction),
    ]
}

/// All supplied recognizers must agree on every permutation of [n].
pub fn recognizer_agreement_with(
    n: usize,
    config: &CheckConfig,
    recognizers: &[Recognizer<'_>],
) -> Result<DiscrepancyReport, Error> {
    let mut report = DiscrepancyReport::new("recognizer-agreement", n, None);
    for sigma in all_permutations_with_limit(n, config.max_perm_n)? {
        report.tested += 1;
        let verdicts: Vec<bool> = recognizers.iter().map(|(_, f)| f(&sigma)).collect();
        if verdicts.windows(2).any(|w| w[0] != w[1]) {
            let rendered: Vec<String> = recognizers
                .iter()
                .zip(&verdicts)
                .map(|((name, _), v)| format!("{name}={v}"))
                .collect();
            report.fail(
                config.counterexample_cap,
                sigma.to_string(),
                "all recognizers agree".into(),
                rendered.join(" "),
            );
        }
    }
    Ok(report)
}

/// Each recognizer must accept exactly B(n) permutations of [n].
pub fn bell_count_with(
    n: usize,
    config: &CheckConfig,
    recognizers: &[Recognizer<'_>],
) -> Result<DiscrepancyReport, Error> {
    let mut report = DiscrepancyReport::new("bell-count", n, None);
    let expected = partitions::bell(n);
    let mut counts = vec![0u64; recognizers.len()];
    for sigma in all_permutations_with_limit(n, config.max_perm_n)? {
        report.tested += 1;
        for (idx, (_, f)) in recognizers.iter().enumerate() {
            if f(&sigma) {
                counts[idx] += 1;
            }
        }
    }
    for ((name, _), count) in recognizers.iter().zip(&counts) {
        if num_bigint::BigUint::from(*count) != expected {
            report.fail(
                config.counterexample_cap,
                format!("accepted count by `{name}` recognizer over S_{n}"),
                expected.to_string(),
                count.to_string(),
            );
        }
    }
    Ok(report)
}

fn code_roundtrip(
    name: &str,
    n: usize,
    config: &CheckConfig,
    encode: fn(&SubexceedantFunction) -> Permutation,
    decode: fn(&Permutation) -> SubexceedantFunction,
) -> Result<DiscrepancyReport, Error> {
    let mut report = DiscrepancyReport::new(name, n, None);
    let mut images = HashSet::new();
    for f in all_subexceedant_with_limit(n, config.max_perm_n)? {
        report.tested += 1;
        let sigma = encode(&f);
        let back = decode(&sigma);
        if back != f {
            report.fail(
                config.counterexample_cap,
                f.to_string(),
                f.to_string(),
                format!("{back} (via {sigma})"),
            );
        }
        images.insert(sigma);
    }
    if images.len() as u64 != report.tested {
        report.fail(
            config.counterexample_cap,
            format!("distinct images over all words of size {n}"),
            report.tested.to_string(),
            images.len().to_string(),
        );
    }
    Ok(report)
}

fn inom_theorem(n: usize, config: &CheckConfig) -> Result<DiscrepancyReport, Error> {
    let mut report = DiscrepancyReport::new("inom-theorem", n, None);
    for sigma in all_permutations_with_limit(n, config.max_perm_n)? {
        report.tested += 1;
        let peeled = codes::phi_tilde_inverse(&sigma);
        let walked = sigma.inom_table();
        if peeled != walked {
            report.fail(
                config.counterexample_cap,
                sigma.to_string(),
                walked.to_string(),
                peeled.to_string(),
            );
        }
    }
    Ok(report)
}

fn bp2_count(n: usize, k: Option<usize>, config: &CheckConfig) -> Result<DiscrepancyReport, Error> {
    let mut report = DiscrepancyReport::new("bp2-count", n, k);
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (1..=n).collect(),
    };
    // tally the exhaustive filter once
    let mut filtered = vec![0u64; n + 1];
    for sigma in all_permutations_with_limit(n, config.max_perm_n)? {
        report.tested += 1;
        if bp2::is_bp2_by_code(&sigma) {
            filtered[sigma.weak_exceedances().len()] += 1;
        }
    }
    for &k in &ks {
        let expected = partitions::stirling(n, k);
        if num_bigint::BigUint::from(filtered[k]) != expected {
            report.fail(
                config.counterexample_cap,
                format!("exhaustive filter count at n={n} k={k}"),
                expected.to_string(),
                filtered[k].to_string(),
            );
        }
        let mut seen = HashSet::new();
        let mut generated = 0u64;
        for sigma in bp2::enumerate(n, Some(k))? {
            generated += 1;
            if !seen.insert(sigma.clone()) {
                report.fail(
                    config.counterexample_cap,
                    sigma.to_string(),
                    "emitted once".into(),
                    "duplicate".into(),
                );
            }
        }
        if num_bigint::BigUint::from(generated) != expected {
            report.fail(
                config.counterexample_cap,
                format!("generator count at n={n} k={k}"),
                expected.to_string(),
                generated.to_string(),
            );
        }
    }
    Ok(report)
}

fn lambda_chi_roundtrip(n: usize, config: &CheckConfig) -> Result<DiscrepancyReport, Error> {
    let mut report = DiscrepancyReport::new("lambda-chi-roundtrip", n, None);
    for pi in all_partitions_with_limit(n, config.max_partition_n)? {
        report.tested += 1;
        let sigma = bijections::partition_to_bp2(&pi);
        match bijections::bp2_to_partition(&sigma) {
            Ok(back) if back == pi => {}
            Ok(back) => report.fail(
                config.counterexample_cap,
                pi.to_string(),
                pi.to_string(),
                format!("{back} (via {sigma})"),
            ),
            Err(e) => report.fail(
                config.counterexample_cap,
                pi.to_string(),
                pi.to_string(),
                format!("error: {e}"),
            ),
        }
        // the two partition routes must agree as well
        let direct = bijections::bp2_to_partition(&sigma);
        let by_code = bijections::bp2_to_partition_by_code(&sigma);
        if direct != by_code {
            report.fail(
                config.counterexample_cap,
                sigma.to_string(),
                format!("{by_code:?}"),
                format!("{direct:?}"),
            );
        }
    }
    for sigma in bp2::enumerate(n, None)? {
        report.tested += 1;
        let pi = bijections::bp2_to_partition(&sigma).expect("generator emits members");
        let back = bijections::partition_to_bp2(&pi);
        if back != sigma {
            report.fail(
                config.counterexample_cap,
                sigma.to_string(),
                sigma.to_string(),
                format!("{back} (via {pi})"),
            );
        }
    }
    Ok(report)
}

fn mu_injective(n: usize, config: &CheckConfig) -> Result<DiscrepancyReport, Error> {
    let mut report = DiscrepancyReport::new("mu-injective", n, None);
    let mut images = HashSet::new();
    for pi in all_partitions_with_limit(n, config.max_partition_n)? {
        report.tested += 1;
        let sigma = bijections::partition_to_bp1(&pi);
        if !bijections::is_bp1(&sigma) {
            report.fail(
                config.counterexample_cap,
                pi.to_string(),
                "image is a first-kind Bell permutation".into(),
                sigma.to_string(),
            );
        }
        if !images.insert(sigma.clone()) {
            report.fail(
                config.counterexample_cap,
                pi.to_string(),
                "distinct image".into(),
                format!("{sigma} repeated"),
            );
        }
    }
    let expected = partitions::bell(n);
    if num_bigint::BigUint::from(images.len() as u64) != expected {
        report.fail(
            config.counterexample_cap,
            format!("image size at n={n}"),
            expected.to_string(),
            images.len().to_string(),
        );
    }
    // when the permutation scan is affordable, the image must be the whole class
    if n <= config.max_perm_n {
        let scanned = all_permutations_with_limit(n, config.max_perm_n)?
            .filter(bijections::is_bp1)
            .count();
        if scanned != images.len() {
            report.fail(
                config.counterexample_cap,
                format!("recognized class size at n={n}"),
                images.len().to_string(),
                scanned.to_string(),
            );
        }
    }
    Ok(report)
}

fn beta_theta_roundtrip(n: usize, config: &CheckConfig) -> Result<DiscrepancyReport, Error> {
    let mut report = DiscrepancyReport::new("beta-theta-roundtrip", n, None);
    for pi in all_partitions_with_limit(n, config.max_partition_n)? {
        report.tested += 1;
        let bp1 = bijections::partition_to_bp1(&pi);
        match bijections::bp1_to_bp2(&bp1) {
            Ok(bp2_image) => {
                if !bp2::is_bp2_by_code(&bp2_image) {
                    report.fail(
                        config.counterexample_cap,
                        bp1.to_string(),
                        "conversion lands in the second-kind class".into(),
                        bp2_image.to_string(),
                    );
                }
                match bijections::bp2_to_bp1(&bp2_image) {
                    Ok(back) if back == bp1 => {}
                    Ok(back) => report.fail(
                        config.counterexample_cap,
                        bp1.to_string(),
                        bp1.to_string(),
                        format!("{back} (via {bp2_image})"),
                    ),
                    Err(e) => report.fail(
                        config.counterexample_cap,
                        bp1.to_string(),
                        bp1.to_string(),
                        format!("error: {e}"),
                    ),
                }
            }
            Err(e) => report.fail(
                config.counterexample_cap,
                bp1.to_string(),
                "conversion succeeds".into(),
                format!("error: {e}"),
            ),
        }
    }
    for sigma in bp2::enumerate(n, None)? {
        report.tested += 1;
        let bp1 = bijections::bp2_to_bp1(&sigma).expect("generator emits members");
        match bijections::bp1_to_bp2(&bp1) {
            Ok(back) if back == sigma => {}
            Ok(back) => report.fail(
                config.counterexample_cap,
                sigma.to_string(),
                sigma.to_string(),
                format!("{back} (via {bp1})"),
            ),
            Err(e) => report.fail(
                config.counterexample_cap,
                sigma.to_string(),
                sigma.to_string(),
                format!("error: {e}"),
            ),
        }
    }
    Ok(report)
}

fn diagram(n: usize, config: &CheckConfig) -> Result<DiscrepancyReport, Error> {
    let mut report = DiscrepancyReport::new("diagram", n, None);
    for pi in all_partitions_with_limit(n, config.max_partition_n)? {
        report.tested += 1;
        let bp1 = bijections::partition_to_bp1(&pi);
        match bijections::verify_diagram(&bp1) {
            Ok(dr) if dr.all_pass() => {}
            Ok(dr) => {
                let failed: Vec<&str> = dr
                    .checks()
                    .iter()
                    .filter(|(_, ok)| !ok)
                    .map(|(label, _)| *label)
                    .collect();
                report.fail(
                    config.counterexample_cap,
                    bp1.to_string(),
                    "all four diagram checks pass".into(),
                    failed.join(", "),
                );
            }
            Err(e) => report.fail(
                config.counterexample_cap,
                bp1.to_string(),
                "diagram verifiable".into(),
                format!("error: {e}"),
            ),
        }
    }
    Ok(report)
}

fn singleton_class(
    n: usize,
    k: Option<usize>,
    config: &CheckConfig,
) -> Result<DiscrepancyReport, Error> {
    let mut report = DiscrepancyReport::new("singleton-class", n, k);
    if n < 3 {
        return Ok(report); // no k with 1 < k < n
    }
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (2..n).collect(),
    };
    for &k in &ks {
        report.tested += 1;
        let counted = bp2::count_singleton_class(n, k)?;
        let expected = partitions::stirling(n - 1, k - 1);
        if counted != expected {
            report.fail(
                config.counterexample_cap,
                format!("singleton-class count at n={n} k={k}"),
                expected.to_string(),
                counted.to_string(),
            );
        }
    }
    Ok(report)
}

fn pair_block_count(n: usize, config: &CheckConfig) -> Result<DiscrepancyReport, Error> {
    let mut report = DiscrepancyReport::new("pair-block-count", n, None);
    if n < 2 {
        return Ok(report);
    }
    report.tested = 1;
    let generated = bp2::enumerate(n, Some(n - 1))?.count();
    let expected = n * (n - 1) / 2;
    if generated != expected {
        report.fail(
            config.counterexample_cap,
            format!("members with {} weak exceedances at n={n}", n - 1),
            expected.to_string(),
            generated.to_string(),
        );
    }
    if bp2::count(n, n - 1) != num_bigint::BigUint::from(expected) {
        report.fail(
            config.counterexample_cap,
            format!("recurrence count at n={n} k={}", n - 1),
            expected.to_string(),
            bp2::count(n, n - 1).to_string(),
        );
    }
    Ok(report)
}

fn partition_routes(n: usize, config: &CheckConfig) -> Result<DiscrepancyReport, Error> {
    let mut report = DiscrepancyReport::new("partition-routes", n, None);
    let by_insertion: HashSet<SetPartition> =
        all_partitions_with_limit(n, config.max_partition_n)?.collect();
    let mut by_growth = HashSet::new();
    for pi in partitions::enumerate_partitions(n, None)? {
        report.tested += 1;
        if !by_insertion.contains(&pi) {
            report.fail(
                config.counterexample_cap,
                pi.to_string(),
                "present in the insertion enumeration".into(),
                "missing".into(),
            );
        }
        if !by_growth.insert(pi.clone()) {
            report.fail(
                config.counterexample_cap,
                pi.to_string(),
                "emitted once".into(),
                "duplicate".into(),
            );
        }
    }
    if by_growth.len() != by_insertion.len() {
        report.fail(
            config.counterexample_cap,
            format!("partition counts at n={n}"),
            by_insertion.len().to_string(),
            by_growth.len().to_string(),
        );
    }
    let expected = partitions::bell(n);
    if num_bigint::BigUint::from(by_insertion.len() as u64) != expected {
        report.fail(
            config.counterexample_cap,
            format!("insertion enumeration count at n={n}"),
            expected.to_string(),
            by_insertion.len().to_string(),
        );
    }
    Ok(report)
}

fn rgf_count(n: usize, config: &CheckConfig) -> Result<DiscrepancyReport, Error> {
    let mut report = DiscrepancyReport::new("rgf-count", n, None);
    let mut previous: Option<Vec<usize>> = None;
    for rgf in partitions::enumerate_rgf(n)? {
        report.tested += 1;
        if !partitions::is_rgf(rgf.as_sef()) || !partitions::is_rgf_by_prefix_intervals(rgf.as_sef())
        {
            report.fail(
                config.counterexample_cap,
                rgf.to_string(),
                "restricted growth by both tests".into(),
                "rejected".into(),
            );
        }
        if let Some(prev) = &previous {
            if prev.as_slice() >= rgf.word() {
                report.fail(
                    config.counterexample_cap,
                    rgf.to_string(),
                    format!("lexicographically after {prev:?}"),
                    "not increasing".into(),
                );
            }
        }
        previous = Some(rgf.word().to_vec());
    }
    let expected = partitions::bell(n);
    if num_bigint::BigUint::from(report.tested) != expected {
        report.fail(
            config.counterexample_cap,
            format!("generated word count at n={n}"),
            expected.to_string(),
            report.tested.to_string(),
        );
    }
    Ok(report)
}
