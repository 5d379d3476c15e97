//! The level-to-level recursion: restrict a known level down one box, then
//! recover the next level as the unique nonnegative integer solution of the
//! branching system that contains one copy of the trivial representation.
//! The m = 2 closed form and the pattern-multiplicity verifications live
//! here too.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::objects::{permutation_character_wreath, Family, FamilyKind, DEFAULT_ENUM_CAP};
use crate::partition::{
    partitions_of, MultEntry, MultiplicityVector, Partition, PartitionPattern,
};
use crate::young::{iterated_vector, pieri_vector, remove_one_box};

pub const DEFAULT_SOLUTION_CAP: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Recursion,
    Oracle,
    ClosedForm,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Recursion => "recursion",
            Method::Oracle => "oracle",
            Method::ClosedForm => "closed_form",
        }
    }

    pub fn from_name(s: &str) -> Option<Method> {
        match s {
            "recursion" => Some(Method::Recursion),
            "oracle" => Some(Method::Oracle),
            "closed_form" | "closed-form" => Some(Method::ClosedForm),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Uniqueness {
    Unique,
    /// Every solution the solver found; the reported multiplicities are the
    /// oracle-adjudicated one.
    Ambiguous(Vec<MultiplicityVector>),
    NotApplicable,
}

/// A fully decomposed level V_n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LevelResult {
    pub family: Family,
    pub multiplicities: MultiplicityVector,
    pub method: Method,
    pub uniqueness: Uniqueness,
}

impl LevelResult {
    pub fn n(&self) -> u32 {
        self.family.n
    }

    pub fn is_ambiguous(&self) -> bool {
        matches!(self.uniqueness, Uniqueness::Ambiguous(_))
    }
}

impl Serialize for LevelResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("family", &self.family.kind.letter().to_string())?;
        map.serialize_entry("m", &self.family.m)?;
        map.serialize_entry("n", &self.family.n)?;
        map.serialize_entry("method", self.method.name())?;
        match &self.uniqueness {
            Uniqueness::Unique => map.serialize_entry("uniqueness", "unique")?,
            Uniqueness::NotApplicable => map.serialize_entry("uniqueness", "not_applicable")?,
            Uniqueness::Ambiguous(sols) => {
                map.serialize_entry("uniqueness", "ambiguous")?;
                map.serialize_entry("solutions", sols)?;
            }
        }
        map.serialize_entry("multiplicities", &self.multiplicities)?;
        map.end()
    }
}

#[derive(Deserialize)]
struct LevelResultRepr {
    family: String,
    m: u32,
    n: u32,
    method: String,
    uniqueness: String,
    #[serde(default)]
    solutions: Option<Vec<Vec<MultEntry>>>,
    multiplicities: Vec<MultEntry>,
}

impl LevelResult {
    pub fn from_json(s: &str) -> std::result::Result<Self, String> {
        let repr: LevelResultRepr = serde_json::from_str(s).map_err(|e| e.to_string())?;
        let kind = match repr.family.as_str() {
            "C" => FamilyKind::C,
            "D" => FamilyKind::D,
            other => return Err(format!("unknown family {other:?}")),
        };
        let family = Family::new(kind, repr.m, repr.n);
        let method = Method::from_name(&repr.method).ok_or("unknown method")?;
        let level = family.level_size();
        let uniqueness = match repr.uniqueness.as_str() {
            "unique" => Uniqueness::Unique,
            "not_applicable" => Uniqueness::NotApplicable,
            "ambiguous" => Uniqueness::Ambiguous(
                repr.solutions
                    .unwrap_or_default()
                    .into_iter()
                    .map(|s| MultiplicityVector::from_mult_entries(level, s))
                    .collect(),
            ),
            other => return Err(format!("unknown uniqueness {other:?}")),
        };
        Ok(LevelResult {
            family,
            multiplicities: MultiplicityVector::from_mult_entries(level, repr.multiplicities),
            method,
            uniqueness,
        })
    }
}

/// The restriction of a level to S_{mn-1}, as predicted from the level below.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RestrictedLevel {
    pub multiplicities: MultiplicityVector,
}

/// All even partitions of 2n with multiplicity 1.
pub fn closed_form_m2(f: &Family) -> Result<LevelResult> {
    if f.m != 2 {
        return Err(Error::InvalidConfig(format!(
            "the closed form applies only to m = 2, got m = {}",
            f.m
        )));
    }
    let size = f.level_size();
    let mult = MultiplicityVector::from_entries(
        size,
        partitions_of(size)
            .into_iter()
            .filter(|p| p.is_even())
            .map(|p| (p, 1)),
    );
    Ok(LevelResult {
        family: *f,
        multiplicities: mult,
        method: Method::ClosedForm,
        uniqueness: Uniqueness::NotApplicable,
    })
}

/// The predicted restriction of level n given level n-1: a horizontal strip
/// of m-1 boxes for the C family, m-1 iterated single boxes for the D family.
pub fn restricted_target(f: &Family, prev: &MultiplicityVector) -> RestrictedLevel {
    debug_assert_eq!(prev.level_size(), f.m * (f.n - 1));
    let mult = match f.kind {
        FamilyKind::C => pieri_vector(prev, f.m - 1),
        FamilyKind::D => iterated_vector(prev, f.m - 1),
    };
    RestrictedLevel {
        multiplicities: mult,
    }
}

/// All nonnegative integer vectors over partitions of N that contain the
/// trivial partition (N) exactly once and restrict to `target`. Exhaustive
/// depth-first search in descending lexicographic order, all solutions up to
/// `cap`.
pub fn solve_level(
    target: &RestrictedLevel,
    n: u32,
    cap: usize,
) -> Result<Vec<MultiplicityVector>> {
    let order = partitions_of(n);
    solve_level_with_order(target, n, cap, &order)
}

/// Same search over an explicit partition order; the solution set does not
/// depend on it.
pub fn solve_level_with_order(
    target: &RestrictedLevel,
    n: u32,
    cap: usize,
    order: &[Partition],
) -> Result<Vec<MultiplicityVector>> {
    assert_eq!(target.multiplicities.level_size() + 1, n);
    let below = partitions_of(n - 1);
    let below_index: BTreeMap<&Partition, usize> =
        below.iter().enumerate().map(|(i, p)| (p, i)).collect();

    let trivial = Partition::new(vec![n]);
    let columns: Vec<&Partition> = order.iter().filter(|p| **p != trivial).collect();
    assert_eq!(columns.len() + 1, order.len(), "order must cover all partitions of {n}");

    let mut residual: Vec<i64> = vec![0; below.len()];
    for (mu, k) in target.multiplicities.iter() {
        residual[below_index[mu]] = k as i64;
    }
    // Pin the trivial representation.
    for mu in remove_one_box(&trivial)? {
        let r = &mut residual[below_index[&mu]];
        *r -= 1;
        if *r < 0 {
            return Err(Error::NoSolution { size: n });
        }
    }

    let corners: Vec<Vec<usize>> = columns
        .iter()
        .map(|lam| {
            remove_one_box(lam)
                .expect("nonempty")
                .into_iter()
                .map(|mu| below_index[&mu])
                .collect()
        })
        .collect();
    // Once the last column touching a row has been decided, that row's
    // residual is final and must be zero.
    let mut last_column: Vec<usize> = vec![usize::MAX; below.len()];
    for (col, rows) in corners.iter().enumerate() {
        for &r in rows {
            last_column[r] = col;
        }
    }
    let mut closing_rows: Vec<Vec<usize>> = vec![Vec::new(); columns.len() + 1];
    for (row, &col) in last_column.iter().enumerate() {
        if col == usize::MAX {
            // No parent among the columns: must already be zero.
            if residual[row] != 0 {
                return Err(Error::NoSolution { size: n });
            }
        } else {
            closing_rows[col + 1].push(row);
        }
    }

    let mut coeffs = vec![0u64; columns.len()];
    let mut solutions = Vec::new();
    dfs(
        0,
        &corners,
        &closing_rows,
        &mut residual,
        &mut coeffs,
        &mut solutions,
        cap,
    )
    .map_err(|e| match e {
        Error::SolutionCapExceeded { cap, .. } => Error::SolutionCapExceeded { cap, size: n },
        other => other,
    })?;
    if solutions.is_empty() {
        return Err(Error::NoSolution { size: n });
    }
    let out = solutions
        .into_iter()
        .map(|coeffs: Vec<u64>| {
            let mut v = MultiplicityVector::from_entries(n, [(trivial.clone(), 1)]);
            for (lam, &k) in columns.iter().zip(&coeffs) {
                v.add((*lam).clone(), k);
            }
            v
        })
        .collect();
    Ok(out)
}

fn dfs(
    col: usize,
    corners: &[Vec<usize>],
    closing_rows: &[Vec<usize>],
    residual: &mut [i64],
    coeffs: &mut [u64],
    solutions: &mut Vec<Vec<u64>>,
    cap: usize,
) -> Result<()> {
    if closing_rows[col].iter().any(|&r| residual[r] != 0) {
        return Ok(());
    }
    if col == corners.len() {
        if residual.iter().all(|&r| r == 0) {
            if solutions.len() == cap {
                // Size is filled in by the caller, which knows N.
                return Err(Error::SolutionCapExceeded { cap, size: 0 });
            }
            solutions.push(coeffs.to_vec());
        }
        return Ok(());
    }
    let bound = corners[col]
        .iter()
        .map(|&r| residual[r])
        .min()
        .unwrap_or(0)
        .max(0) as u64;
    for k in 0..=bound {
        coeffs[col] = k;
        if k > 0 {
            for &r in &corners[col] {
                residual[r] -= 1;
            }
        }
        dfs(col + 1, corners, closing_rows, residual, coeffs, solutions, cap).map_err(|e| {
            // Restore on the way out so callers can reuse the buffers.
            for &r in &corners[col] {
                residual[r] += k as i64;
            }
            e
        })?;
    }
    for &r in &corners[col] {
        residual[r] += bound as i64;
    }
    coeffs[col] = 0;
    Ok(())
}

/// Configured decomposition driver with optional on-disk level cache.
#[derive(Clone, Debug)]
pub struct Decomposer {
    pub enum_cap: u64,
    pub solution_cap: usize,
    pub cache_dir: Option<PathBuf>,
}

impl Default for Decomposer {
    fn default() -> Self {
        Decomposer {
            enum_cap: DEFAULT_ENUM_CAP,
            solution_cap: DEFAULT_SOLUTION_CAP,
            cache_dir: None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PatternLevel {
    Full,
    Minus,
}

impl Decomposer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cache_dir(mut self, dir: Option<PathBuf>) -> Self {
        self.cache_dir = dir;
        self
    }

    fn cache_path(&self, f: &Family, method: Method) -> Option<PathBuf> {
        let dir = self.cache_dir.as_ref()?;
        let key = format!(
            "family={};m={};n={};method={}",
            f.kind.letter(),
            f.m,
            f.n,
            method.name()
        );
        let digest = Sha256::digest(key.as_bytes());
        let hex: String = digest.iter().take(16).map(|b| format!("{b:02x}")).collect();
        Some(dir.join(format!("{hex}.json")))
    }

    fn cache_read(&self, f: &Family, method: Method) -> Option<LevelResult> {
        let path = self.cache_path(f, method)?;
        let text = fs::read_to_string(path).ok()?;
        let result = LevelResult::from_json(&text).ok()?;
        (result.family == *f && result.method == method).then_some(result)
    }

    fn cache_write(&self, result: &LevelResult) {
        let Some(path) = self.cache_path(&result.family, result.method) else {
            return;
        };
        if let Some(dir) = path.parent() {
            let _ = fs::create_dir_all(dir);
        }
        if let Ok(text) = serde_json::to_string(result) {
            let _ = fs::write(path, text);
        }
    }

    /// Decomposes Ind(1) from the stabilizer into irreducibles by the
    /// requested method.
    pub fn decompose(&self, f: &Family, method: Method) -> Result<LevelResult> {
        if let Some(hit) = self.cache_read(f, method) {
            return Ok(hit);
        }
        let result = match method {
            Method::ClosedForm => closed_form_m2(f)?,
            Method::Oracle => {
                let count = f.object_count();
                if count > num_bigint::BigUint::from(self.enum_cap) {
                    return Err(Error::TooLarge {
                        count,
                        cap: self.enum_cap,
                    });
                }
                LevelResult {
                    family: *f,
                    multiplicities: permutation_character_wreath(f)?,
                    method,
                    uniqueness: Uniqueness::NotApplicable,
                }
            }
            Method::Recursion => self.decompose_recursive(f)?,
        };
        self.cache_write(&result);
        Ok(result)
    }

    fn decompose_recursive(&self, f: &Family) -> Result<LevelResult> {
        if f.n == 1 {
            // Base cases: one m-block has only the trivial and, for the D
            // family, whatever else averaging over the cyclic group keeps.
            let mult = match f.kind {
                FamilyKind::C => MultiplicityVector::from_entries(
                    f.m,
                    [(Partition::new(vec![f.m]), 1)],
                ),
                FamilyKind::D => permutation_character_wreath(f)?,
            };
            return Ok(LevelResult {
                family: *f,
                multiplicities: mult,
                method: Method::Recursion,
                uniqueness: Uniqueness::NotApplicable,
            });
        }
        let prev = self.decompose(&f.at_level(f.n - 1), Method::Recursion)?;
        let target = restricted_target(f, &prev.multiplicities);
        let solutions = match solve_level(&target, f.level_size(), self.solution_cap) {
            Ok(s) => s,
            Err(Error::SolutionCapExceeded { cap, .. }) => {
                return Err(Error::SolutionCapExceeded {
                    cap,
                    size: f.level_size(),
                })
            }
            Err(e) => return Err(e),
        };
        if solutions.len() == 1 {
            return Ok(LevelResult {
                family: *f,
                multiplicities: solutions.into_iter().next().unwrap(),
                method: Method::Recursion,
                uniqueness: Uniqueness::Unique,
            });
        }
        // Ambiguity: let the character oracle adjudicate among the solutions.
        let oracle = permutation_character_wreath(f)?;
        let chosen = solutions
            .iter()
            .find(|s| **s == oracle)
            .cloned()
            .ok_or(Error::NoSolution {
                size: f.level_size(),
            })?;
        Ok(LevelResult {
            family: *f,
            multiplicities: chosen,
            method: Method::Recursion,
            uniqueness: Uniqueness::Ambiguous(solutions),
        })
    }

    /// Multiplicity of the instantiated pattern at level n (or its
    /// restriction, level n⁻). Patterns with no instance count as 0.
    pub fn mult_of_pattern(
        &self,
        f: &Family,
        pattern: &PartitionPattern,
        n: u32,
        level: PatternLevel,
    ) -> Result<u64> {
        match level {
            PatternLevel::Full => {
                let result = self.decompose(&f.at_level(n), Method::Recursion)?;
                match pattern.instantiate(f.m * n) {
                    Ok(lam) => Ok(result.multiplicities.get(&lam)),
                    Err(Error::PatternTooLarge { .. }) => Ok(0),
                    Err(e) => Err(e),
                }
            }
            PatternLevel::Minus => {
                let prev = self.decompose(&f.at_level(n - 1), Method::Recursion)?;
                let restricted = restricted_target(&f.at_level(n), &prev.multiplicities);
                match pattern.instantiate(f.m * n - 1) {
                    Ok(lam) => Ok(restricted.multiplicities.get(&lam)),
                    Err(Error::PatternTooLarge { .. }) => Ok(0),
                    Err(e) => Err(e),
                }
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Patterns with multiplicity exactly 1 in every level n ≥ 5.
pub const MULT_ONE_PATTERNS: [&str; 8] = ["0", "2", "3", "4", "22", "5", "41", "32"];
/// Patterns absent from every level.
pub const MULT_ZERO_PATTERNS: [&str; 6] = ["1", "21", "31", "221", "311", "411"];
/// The partial multiplicity table at level n⁻ (n ≥ 6), pattern → value.
pub const MINUS_LEVEL_TABLE: [(&str, u64); 17] = [
    ("0", 1),
    ("1", 1),
    ("11", 0),
    ("2", 2),
    ("21", 1),
    ("3", 2),
    ("111", 0),
    ("4", 3),
    ("31", 2),
    ("22", 2),
    ("211", 0),
    ("1111", 0),
    ("5", 3),
    ("41", 3),
    ("32", 3),
    ("311", 0),
    ("221", 1),
];

/// Checks the fixed-pattern multiplicity structure of the m = 3 C-family
/// levels for 5 ≤ n ≤ n_max: the always-1 and always-0 patterns, the
/// 17-entry restricted-level table, the mult(51)+mult(42) identities, and
/// the presence of a repeated irreducible at every level.
pub fn verify_section4(dec: &Decomposer, n_max: u32) -> Result<VerifyReport> {
    assert!(n_max >= 5);
    let f = Family::new(FamilyKind::C, 3, 1);
    let mut report = VerifyReport::default();
    for n in 5..=n_max {
        for pat_str in MULT_ONE_PATTERNS {
            let pat: PartitionPattern = pat_str.parse().expect("valid pattern");
            let m = dec.mult_of_pattern(&f, &pat, n, PatternLevel::Full)?;
            report.push(
                format!("mult({pat_str},{n}) = 1"),
                m == 1,
                format!("got {m}"),
            );
        }
        for pat_str in MULT_ZERO_PATTERNS {
            let pat: PartitionPattern = pat_str.parse().expect("valid pattern");
            let m = dec.mult_of_pattern(&f, &pat, n, PatternLevel::Full)?;
            report.push(
                format!("mult({pat_str},{n}) = 0"),
                m == 0,
                format!("got {m}"),
            );
        }
        if n >= 6 {
            for (pat_str, expected) in MINUS_LEVEL_TABLE {
                let pat: PartitionPattern = pat_str.parse().expect("valid pattern");
                let m = dec.mult_of_pattern(&f, &pat, n, PatternLevel::Minus)?;
                report.push(
                    format!("mult({pat_str},{n}-) = {expected}"),
                    m == expected,
                    format!("got {m}"),
                );
            }
        }
        let p51: PartitionPattern = "51".parse().unwrap();
        let p42: PartitionPattern = "42".parse().unwrap();
        let sum_full = dec.mult_of_pattern(&f, &p51, n, PatternLevel::Full)?
            + dec.mult_of_pattern(&f, &p42, n, PatternLevel::Full)?;
        report.push(
            format!("mult(51,{n}) + mult(42,{n}) = 2"),
            sum_full == 2,
            format!("got {sum_full}"),
        );
        if n >= 6 {
            let sum_minus = dec.mult_of_pattern(&f, &p51, n, PatternLevel::Minus)?
                + dec.mult_of_pattern(&f, &p42, n, PatternLevel::Minus)?;
            report.push(
                format!("mult(51,{n}-) + mult(42,{n}-) = 9"),
                sum_minus == 9,
                format!("got {sum_minus}"),
            );
        }
        let level = dec.decompose(&f.at_level(n), Method::Recursion)?;
        let max = level.multiplicities.max_multiplicity();
        report.push(
            format!("level {n} has a repeated irreducible"),
            max >= 2,
            format!("max multiplicity {max}"),
        );
    }
    Ok(report)
}
