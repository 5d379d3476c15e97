//! Integer partitions, Specht dimensions, and the pattern shorthand whose
//! first part is left implicit.
//!
//! Partitions double as irreducible labels and as cycle types. The canonical
//! report order everywhere is descending lexicographic, so `Ord` is defined
//! to make ascending `BTreeMap` iteration produce exactly that order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing tuple of positive integers. The empty tuple is the
/// unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Panics unless `parts` is weakly decreasing and strictly positive.
    pub fn new(parts: Vec<u32>) -> Self {
        Self::try_new(parts).expect("invalid partition")
    }

    pub fn try_new(parts: Vec<u32>) -> std::result::Result<Self, String> {
        if parts.iter().any(|&p| p == 0) {
            return Err("partition parts must be positive".into());
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err("partition parts must be weakly decreasing".into());
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part at `i`, with 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True iff every part is even.
    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let rows = self.part(0) as usize;
        let parts = (0..rows)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Number of standard Young tableaux of this shape, by hook lengths.
    pub fn dim_specht(&self) -> BigUint {
        let conj = self.conjugate();
        let mut num = BigUint::one();
        for k in 1..=self.size() {
            num *= BigUint::from(k);
        }
        let mut den = BigUint::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let hook = row - j as u32 + conj.part(j) - i as u32 - 1;
                den *= BigUint::from(hook);
            }
        }
        num / den
    }

    /// Sign of any permutation with this cycle type: (-1)^(N - #parts).
    pub fn sign(&self) -> i32 {
        if (self.size() as usize - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Descending lexicographic: `(6) < (5,1) < (4,2) < ... < (1,1,1,1,1,1)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{s}")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.parts.iter())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::try_new(parts).map_err(D::Error::custom)
    }
}

/// All partitions of `n`, in descending lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_partitions(n, n, &mut stack, &mut out);
    out
}

fn gen_partitions(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    let top = remaining.min(max_part);
    for p in (1..=top).rev() {
        stack.push(p);
        gen_partitions(remaining - p, p, stack, out);
        stack.pop();
    }
}

/// A finite map from partitions of a fixed size to positive multiplicities.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiplicityVector {
    level_size: u32,
    entries: BTreeMap<Partition, u64>,
}

impl MultiplicityVector {
    pub fn new(level_size: u32) -> Self {
        MultiplicityVector {
            level_size,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries<I>(level_size: u32, entries: I) -> Self
    where
        I: IntoIterator<Item = (Partition, u64)>,
    {
        let mut v = Self::new(level_size);
        for (p, k) in entries {
            v.add(p, k);
        }
        v
    }

    pub fn level_size(&self) -> u32 {
        self.level_size
    }

    pub fn get(&self, p: &Partition) -> u64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    /// Accumulates `k` copies of `p`. Zero increments are dropped.
    pub fn add(&mut self, p: Partition, k: u64) {
        assert_eq!(
            p.size(),
            self.level_size,
            "partition {p:?} does not partition level size {}",
            self.level_size
        );
        if k > 0 {
            *self.entries.entry(p).or_insert(0) += k;
        }
    }

    /// Descending lexicographic iteration.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.entries.iter().map(|(p, &k)| (p, k))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of irreducible constituents counted with multiplicity.
    pub fn total_multiplicity(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Exact Σ mult·dim over all entries.
    pub fn total_dimension(&self) -> BigUint {
        let mut total = BigUint::zero();
        for (p, &k) in &self.entries {
            total += p.dim_specht() * BigUint::from(k);
        }
        total
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.entries.values().copied().max().unwrap_or(0)
    }
}

impl fmt::Debug for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct MultEntry {
    pub partition: Partition,
    pub mult: u64,
}

impl Serialize for MultiplicityVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|(p, k)| MultEntry {
            partition: p.clone(),
            mult: k,
        }))
    }
}

impl MultiplicityVector {
    pub(crate) fn from_mult_entries(level_size: u32, entries: Vec<MultEntry>) -> Self {
        Self::from_entries(level_size, entries.into_iter().map(|e| (e.partition, e.mult)))
    }
}

/// Tail of a partition whose first part is determined by the total size:
/// pattern `42` at size 15 is the partition (9,4,2), and the empty pattern
/// `0` is the one-row partition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartitionPattern {
    tail: Partition,
}

impl PartitionPattern {
    pub fn new(tail: Partition) -> Self {
        PartitionPattern { tail }
    }

    pub fn tail(&self) -> &Partition {
        &self.tail
    }

    /// The partition (N - |tail|, tail...), or `PatternTooLarge` when the
    /// implied first part would break weak decrease.
    pub fn instantiate(&self, n: u32) -> Result<Partition> {
        let tail_size = self.tail.size();
        let head = n.checked_sub(tail_size).filter(|&h| h >= self.tail.part(0) && h >= 1);
        match head {
            Some(h) => {
                let mut parts = vec![h];
                parts.extend_from_slice(self.tail.parts());
                Ok(Partition::new(parts))
            }
            None => Err(Error::PatternTooLarge {
                pattern: self.to_string(),
                size: n,
            }),
        }
    }
}

impl fmt::Display for PartitionPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tail.is_empty() {
            return write!(f, "0");
        }
        for p in self.tail.parts() {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PartitionPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pattern {}", self)
    }
}

/// Single-digit concatenated form: "42" is the tail (4,2), "0" the empty tail.
impl FromStr for PartitionPattern {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s == "0" {
            return Ok(PartitionPattern::new(Partition::empty()));
        }
        let mut parts = Vec::new();
        for c in s.chars() {
            let d = c.to_digit(10).ok_or_else(|| format!("bad pattern digit {c:?}"))?;
            parts.push(d);
        }
        let tail = Partition::try_new(parts)?;
        Ok(PartitionPattern::new(tail))
    }
}
