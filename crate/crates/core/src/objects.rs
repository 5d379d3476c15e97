//! Combinatorial models of the coset spaces: perfect m-block matchings for
//! the C family (B_n at m = 2) and decompositions into n disjoint directed
//! m-cycles for the D family, together with the two independent routes to
//! the permutation character.
//!
//! Wreath-notation convention: the stabilizer of a block structure has the
//! base group (S_m for C, C_m for D) once per block, permuted by a top S_n,
//! giving subgroup orders (m!)^n·n! and m^n·n!. This is the reading under
//! which the m = 2 case of both families is the hyperoctahedral group of
//! order 2^n·n!.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::character::{class_size, mn_char, ClassFunction};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, MultiplicityVector, Partition};

pub const DEFAULT_ENUM_CAP: u64 = 5_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FamilyKind {
    /// Stabilizer of a partition into n unordered m-blocks; order (m!)^n·n!.
    C,
    /// Stabilizer of a decomposition into n directed m-cycles; order m^n·n!.
    D,
}

impl FamilyKind {
    pub fn letter(self) -> char {
        match self {
            FamilyKind::C => 'C',
            FamilyKind::D => 'D',
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Family {
    pub kind: FamilyKind,
    pub m: u32,
    pub n: u32,
}

impl Family {
    pub fn new(kind: FamilyKind, m: u32, n: u32) -> Self {
        assert!(m >= 2, "block size must be at least 2");
        assert!(n >= 1, "need at least one block");
        Family { kind, m, n }
    }

    pub fn level_size(&self) -> u32 {
        self.m * self.n
    }

    pub fn at_level(&self, n: u32) -> Family {
        Family::new(self.kind, self.m, n)
    }

    /// (m!)^n·n! for C, m^n·n! for D.
    pub fn subgroup_order(&self) -> BigUint {
        let base = match self.kind {
            FamilyKind::C => factorial(self.m),
            FamilyKind::D => BigUint::from(self.m),
        };
        let mut order = BigUint::one();
        for _ in 0..self.n {
            order *= &base;
        }
        order * factorial(self.n)
    }

    /// (mn)!/|subgroup|, the exact number of objects.
    pub fn object_count(&self) -> BigUint {
        factorial(self.level_size()) / self.subgroup_order()
    }
}

fn factorial(n: u32) -> BigUint {
    let mut f = BigUint::one();
    for k in 1..=n {
        f *= BigUint::from(k);
    }
    f
}

/// A perfect m-block matching of {1,...,mn}: disjoint m-sets covering the
/// point set, each block sorted, blocks ordered by minimum element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HyperMatching {
    blocks: Vec<Vec<u32>>,
}

impl HyperMatching {
    /// Canonicalizes: sorts within blocks and orders blocks by minimum.
    pub fn new(mut blocks: Vec<Vec<u32>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable();
        HyperMatching { blocks }
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn ground_size(&self) -> u32 {
        self.blocks.iter().map(|b| b.len() as u32).sum()
    }
}

impl Serialize for HyperMatching {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(s)
    }
}

/// A decomposition of {1,...,mn} into n disjoint directed m-cycles, each
/// rotated so its minimum element comes first, cycles ordered by minimum.
/// For m ≥ 3 a cycle and its reversal are distinct.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<u32>>,
}

impl CycleDecomposition {
    /// Canonicalizes rotations and cycle order; orientation is preserved.
    pub fn new(mut cycles: Vec<Vec<u32>>) -> Self {
        for c in &mut cycles {
            let min_pos = c
                .iter()
                .enumerate()
                .min_by_key(|&(_, v)| v)
                .map(|(i, _)| i)
                .unwrap_or(0);
            c.rotate_left(min_pos);
        }
        cycles.sort_unstable();
        CycleDecomposition { cycles }
    }

    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    pub fn ground_size(&self) -> u32 {
        self.cycles.iter().map(|c| c.len() as u32).sum()
    }
}

impl Serialize for CycleDecomposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.cycles.serialize(s)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GroupedObject {
    Matching(HyperMatching),
    Cycles(CycleDecomposition),
}

impl GroupedObject {
    pub fn ground_size(&self) -> u32 {
        match self {
            GroupedObject::Matching(m) => m.ground_size(),
            GroupedObject::Cycles(c) => c.ground_size(),
        }
    }
}

impl Serialize for GroupedObject {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            GroupedObject::Matching(m) => m.serialize(s),
            GroupedObject::Cycles(c) => c.serialize(s),
        }
    }
}

/// A permutation of {1,...,n}, stored as the image array.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<u32>, // images[i] is the 1-based image of point i+1
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Self {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &img in &images {
            assert!(img >= 1 && img <= n, "image out of range");
            assert!(!seen[(img - 1) as usize], "not a bijection");
            seen[(img - 1) as usize] = true;
        }
        Permutation { images }
    }

    pub fn identity(n: u32) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[(point - 1) as usize]
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[(img - 1) as usize] = (i + 1) as u32;
        }
        Permutation { images }
    }

    /// self ∘ other (other first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&p| self.apply(p)).collect(),
        }
    }

    /// Builds a permutation from disjoint 1-based cycles; fixed points may
    /// be omitted.
    pub fn from_cycles(n: u32, cycles: &[Vec<u32>]) -> Self {
        let mut images: Vec<u32> = (1..=n).collect();
        for c in cycles {
            for w in c.windows(2) {
                images[(w[0] - 1) as usize] = w[1];
            }
            if c.len() > 1 {
                images[(c[c.len() - 1] - 1) as usize] = c[0];
            }
        }
        Permutation::new(images)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = (self.images[cur] - 1) as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens)
    }

    /// The canonical class representative: cycles on consecutive integers,
    /// longest part first.
    pub fn class_representative(rho: &Partition) -> Permutation {
        let n = rho.size();
        let mut cycles = Vec::new();
        let mut next = 1u32;
        for &len in rho.parts() {
            cycles.push((next..next + len).collect::<Vec<u32>>());
            next += len;
        }
        Permutation::from_cycles(n, &cycles)
    }

    pub fn act_matching(&self, x: &HyperMatching) -> Result<HyperMatching> {
        if self.degree() != x.ground_size() {
            return Err(Error::SizeMismatch {
                left: self.degree(),
                right: x.ground_size(),
            });
        }
        Ok(HyperMatching::new(
            x.blocks
                .iter()
                .map(|b| b.iter().map(|&p| self.apply(p)).collect())
                .collect(),
        ))
    }

    pub fn act_cycles(&self, x: &CycleDecomposition) -> Result<CycleDecomposition> {
        if self.degree() != x.ground_size() {
            return Err(Error::SizeMismatch {
                left: self.degree(),
                right: x.ground_size(),
            });
        }
        Ok(CycleDecomposition::new(
            x.cycles
                .iter()
                .map(|c| c.iter().map(|&p| self.apply(p)).collect())
                .collect(),
        ))
    }

    pub fn act(&self, x: &GroupedObject) -> Result<GroupedObject> {
        Ok(match x {
            GroupedObject::Matching(m) => GroupedObject::Matching(self.act_matching(m)?),
            GroupedObject::Cycles(c) => GroupedObject::Cycles(self.act_cycles(c)?),
        })
    }
}

/// All objects of the family, canonical, exactly (mn)!/|subgroup| of them.
pub fn enumerate_objects(f: &Family, cap: u64) -> Result<Vec<GroupedObject>> {
    let count = f.object_count();
    if count > BigUint::from(cap) {
        return Err(Error::TooLarge { count, cap });
    }
    let mn = f.level_size();
    let mut out = Vec::new();
    let mut used = vec![false; mn as usize + 1];
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    enumerate_rec(f, &mut used, &mut blocks, &mut out);
    debug_assert_eq!(BigUint::from(out.len() as u64), count);
    Ok(out)
}

fn enumerate_rec(
    f: &Family,
    used: &mut Vec<bool>,
    blocks: &mut Vec<Vec<u32>>,
    out: &mut Vec<GroupedObject>,
) {
    let mn = f.level_size();
    let anchor = (1..=mn).find(|&p| !used[p as usize]);
    let anchor = match anchor {
        Some(a) => a,
        None => {
            match f.kind {
                FamilyKind::C => {
                    out.push(GroupedObject::Matching(HyperMatching::new(blocks.clone())));
                }
                FamilyKind::D => {
                    // Each block, anchored at its minimum, carries every
                    // ordering of the remaining m-1 points as a directed
                    // cycle; expand the cartesian product.
                    let mut cycles_choices: Vec<Vec<Vec<u32>>> = Vec::new();
                    for b in blocks.iter() {
                        let head = b[0];
                        let rest = &b[1..];
                        let mut choices = Vec::new();
                        permutations_of(rest, &mut |ordering| {
                            let mut cyc = vec![head];
                            cyc.extend_from_slice(ordering);
                            choices.push(cyc);
                        });
                        cycles_choices.push(choices);
                    }
                    let mut current: Vec<Vec<u32>> = Vec::new();
                    expand_product(&cycles_choices, 0, &mut current, &mut |cycles| {
                        out.push(GroupedObject::Cycles(CycleDecomposition::new(
                            cycles.to_vec(),
                        )));
                    });
                }
            }
            return;
        }
    };
    // Choose the m-1 partners of the anchor among larger unused points.
    used[anchor as usize] = true;
    let free: Vec<u32> = (anchor + 1..=mn).filter(|&p| !used[p as usize]).collect();
    choose_rec(&free, f.m as usize - 1, 0, &mut vec![anchor], &mut |block| {
        for &p in &block[1..] {
            used[p as usize] = true;
        }
        blocks.push(block.to_vec());
        enumerate_rec(f, used, blocks, out);
        blocks.pop();
        for &p in &block[1..] {
            used[p as usize] = false;
        }
    });
    used[anchor as usize] = false;
}

fn choose_rec(
    free: &[u32],
    need: usize,
    start: usize,
    chosen: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32]),
) {
    if need == 0 {
        f(chosen);
        return;
    }
    for i in start..=free.len().saturating_sub(need) {
        chosen.push(free[i]);
        choose_rec(free, need - 1, i + 1, chosen, f);
        chosen.pop();
    }
}

fn permutations_of(items: &[u32], f: &mut impl FnMut(&[u32])) {
    let mut v = items.to_vec();
    heap_permute(&mut v, items.len(), f);
}

fn heap_permute(v: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&[u32])) {
    if k <= 1 {
        f(v);
        return;
    }
    for i in 0..k {
        heap_permute(v, k - 1, f);
        if k % 2 == 0 {
            v.swap(i, k - 1);
        } else {
            v.swap(0, k - 1);
        }
    }
}

fn expand_product<T: Clone>(
    choices: &[Vec<T>],
    idx: usize,
    current: &mut Vec<T>,
    f: &mut impl FnMut(&[T]),
) {
    if idx == choices.len() {
        f(current);
        return;
    }
    for c in &choices[idx] {
        current.push(c.clone());
        expand_product(choices, idx + 1, current, f);
        current.pop();
    }
}

/// Oracle #1: the permutation character by Burnside fixed-point counts, one
/// canonical class representative per cycle type.
pub fn permutation_character_enum(f: &Family, cap: u64) -> Result<ClassFunction> {
    let objects = enumerate_objects(f, cap)?;
    let mn = f.level_size();
    let classes = partitions_of(mn);
    let values: BTreeMap<Partition, BigInt> = classes
        .into_par_iter()
        .map(|rho| {
            let g = Permutation::class_representative(&rho);
            let fixed = objects
                .par_iter()
                .filter(|x| g.act(x).expect("sizes match") == **x)
                .count();
            (rho, BigInt::from(fixed))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(ClassFunction::new(mn, values))
}

/// Cycle types (in S_m) of the base-group elements, with counts.
fn base_type_counts(f: &Family) -> Vec<(Partition, BigUint)> {
    match f.kind {
        FamilyKind::C => partitions_of(f.m)
            .into_iter()
            .map(|rho| {
                let c = class_size(&rho);
                (rho, c)
            })
            .collect(),
        FamilyKind::D => {
            // Powers of an m-cycle: r^k has gcd(m,k) cycles of length m/gcd(m,k).
            let mut counts: BTreeMap<Partition, BigUint> = BTreeMap::new();
            for k in 0..f.m {
                let g = f.m.gcd(&k);
                let len = f.m / g;
                let rho = Partition::new(vec![len; g as usize]);
                *counts.entry(rho).or_insert_with(BigUint::zero) += BigUint::one();
            }
            counts.into_iter().collect()
        }
    }
}

/// Distribution of the stabilizer's elements over cycle types of S_{mn},
/// computed combinatorially: a top cycle of length ℓ whose base product has
/// cycle type t contributes parts {ℓ·c : c ∈ t}, with |base|^{ℓ-1} base
/// choices per product value.
pub fn wreath_class_distribution(f: &Family) -> BTreeMap<Partition, BigUint> {
    let base_types = base_type_counts(f);
    let base_order: BigUint = base_types.iter().map(|(_, c)| c).sum();
    let mut dist: BTreeMap<Partition, BigUint> = BTreeMap::new();
    for mu in partitions_of(f.n) {
        let top_count = class_size(&mu);
        // Cartesian product of base-type choices over the top cycles.
        let mut acc: Vec<(Vec<u32>, BigUint)> = vec![(Vec::new(), top_count)];
        for &ell in mu.parts() {
            let mut pow = BigUint::one();
            for _ in 1..ell {
                pow *= &base_order;
            }
            let mut next = Vec::new();
            for (parts, weight) in &acc {
                for (t, cnt) in &base_types {
                    let mut new_parts = parts.clone();
                    for &c in t.parts() {
                        new_parts.push(ell * c);
                    }
                    next.push((new_parts, weight * &pow * cnt));
                }
            }
            acc = next;
        }
        for (mut parts, weight) in acc {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            *dist.entry(Partition::new(parts)).or_insert_with(BigUint::zero) += weight;
        }
    }
    dist
}

/// Element-by-element cross-check of `wreath_class_distribution`, feasible
/// for small subgroup orders: every stabilizer element is a top permutation
/// of the blocks composed with base maps block-by-block.
pub fn wreath_class_distribution_brute(f: &Family) -> BTreeMap<Partition, BigUint> {
    let m = f.m as usize;
    let n = f.n as usize;
    let mn = f.level_size();
    // Point p of block i is (i*m + p + 1), blocks 0-indexed here.
    let mut dist: BTreeMap<Partition, BigUint> = BTreeMap::new();

    // Base maps within one block, as 0-based images on 0..m.
    let base_maps: Vec<Vec<usize>> = match f.kind {
        FamilyKind::C => {
            let mut all = Vec::new();
            permutations_of(&(0..m as u32).collect::<Vec<_>>(), &mut |perm| {
                all.push(perm.iter().map(|&x| x as usize).collect());
            });
            all
        }
        FamilyKind::D => (0..m)
            .map(|k| (0..m).map(|i| (i + k) % m).collect())
            .collect(),
    };

    let mut top: Vec<u32> = (0..n as u32).collect();
    let mut tops = Vec::new();
    heap_permute(&mut top, n, &mut |t| tops.push(t.to_vec()));

    for top in &tops {
        let mut choice = vec![0usize; n];
        loop {
            let mut images = vec![0u32; mn as usize];
            for (block, &target) in top.iter().enumerate().map(|(i, t)| (i, t)) {
                let map = &base_maps[choice[block]];
                for p in 0..m {
                    images[block * m + p] = (target as usize * m + map[p]) as u32 + 1;
                }
            }
            let g = Permutation::new(images);
            *dist.entry(g.cycle_type()).or_insert_with(BigUint::zero) += BigUint::one();
            // Odometer over base choices.
            let mut i = 0;
            loop {
                if i == n {
                    break;
                }
                choice[i] += 1;
                if choice[i] < base_maps.len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    dist
}

/// Oracle #2: irreducible multiplicities by Frobenius reciprocity, averaging
/// χ^λ over the stabilizer via the class distribution.
pub fn permutation_character_wreath(f: &Family) -> Result<MultiplicityVector> {
    let dist = wreath_class_distribution(f);
    let order = BigInt::from(f.subgroup_order());
    let mn = f.level_size();
    let lambdas = partitions_of(mn);
    let sums: Vec<(Partition, BigInt)> = lambdas
        .into_par_iter()
        .map(|lambda| {
            let mut sum = BigInt::zero();
            for (rho, count) in &dist {
                sum += BigInt::from(count.clone()) * mn_char(&lambda, rho).expect("sizes match");
            }
            (lambda, sum)
        })
        .collect();
    let mut out = MultiplicityVector::new(mn);
    for (lambda, sum) in sums {
        let (q, r) = sum.div_rem(&order);
        if !r.is_zero() || q.is_negative() {
            return Err(Error::NotACharacter {
                reason: format!("average of chi^{lambda:?} over the stabilizer is {sum}/{order}"),
            });
        }
        if !q.is_zero() {
            out.add(lambda, q.to_u64().expect("multiplicity fits u64"));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::decompose_class_function;

    fn fam(kind: FamilyKind, m: u32, n: u32) -> Family {
        Family::new(kind, m, n)
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn subgroup_orders() {
        assert_eq!(fam(FamilyKind::C, 2, 3).subgroup_order(), BigUint::from(48u32));
        assert_eq!(fam(FamilyKind::D, 3, 2).subgroup_order(), BigUint::from(18u32));
        assert_eq!(fam(FamilyKind::C, 3, 2).subgroup_order(), BigUint::from(72u32));
        // m = 2: both families coincide with the hyperoctahedral order.
        for n in 1..=6u32 {
            let b = BigUint::from(2u32).pow(n) * factorial(n);
            assert_eq!(fam(FamilyKind::C, 2, n).subgroup_order(), b);
            assert_eq!(fam(FamilyKind::D, 2, n).subgroup_order(), b);
        }
    }

    #[test]
    fn enumeration_counts() {
        let b2 = enumerate_objects(&fam(FamilyKind::C, 2, 2), 100).unwrap();
        assert_eq!(b2.len(), 3);
        let expected: Vec<GroupedObject> = vec![
            GroupedObject::Matching(HyperMatching::new(vec![vec![1, 2], vec![3, 4]])),
            GroupedObject::Matching(HyperMatching::new(vec![vec![1, 3], vec![2, 4]])),
            GroupedObject::Matching(HyperMatching::new(vec![vec![1, 4], vec![2, 3]])),
        ];
        for e in &expected {
            assert!(b2.contains(e));
        }
        assert_eq!(enumerate_objects(&fam(FamilyKind::C, 3, 2), 100).unwrap().len(), 10);
        assert_eq!(enumerate_objects(&fam(FamilyKind::D, 3, 2), 100).unwrap().len(), 40);
    }

    #[test]
    fn enumeration_cap() {
        let err = enumerate_objects(&fam(FamilyKind::C, 3, 2), 5).unwrap_err();
        match err {
            Error::TooLarge { count, cap } => {
                assert_eq!(count, BigUint::from(10u32));
                assert_eq!(cap, 5);
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn orbit_stabilizer() {
        for f in [
            fam(FamilyKind::C, 2, 3),
            fam(FamilyKind::C, 3, 2),
            fam(FamilyKind::D, 3, 2),
            fam(FamilyKind::D, 4, 2),
        ] {
            let objs = enumerate_objects(&f, DEFAULT_ENUM_CAP).unwrap();
            assert_eq!(
                BigUint::from(objs.len() as u64) * f.subgroup_order(),
                factorial(f.level_size())
            );
        }
    }

    #[test]
    fn action_examples() {
        let x = GroupedObject::Matching(HyperMatching::new(vec![vec![1, 2], vec![3, 4]]));
        let id = Permutation::identity(4);
        assert_eq!(id.act(&x).unwrap(), x);

        let swap = Permutation::from_cycles(4, &[vec![1, 2]]);
        assert_eq!(swap.act(&x).unwrap(), x);

        let four = Permutation::from_cycles(4, &[vec![1, 2, 3, 4]]);
        let y = GroupedObject::Matching(HyperMatching::new(vec![vec![1, 3], vec![2, 4]]));
        assert_eq!(four.act(&y).unwrap(), y);
    }

    #[test]
    fn cycle_orientation_matters() {
        let a = CycleDecomposition::new(vec![vec![1, 2, 3], vec![4, 5, 6]]);
        let b = CycleDecomposition::new(vec![vec![1, 3, 2], vec![4, 5, 6]]);
        assert_ne!(a, b);
        // Rotations of the same directed cycle are identified.
        let c = CycleDecomposition::new(vec![vec![2, 3, 1], vec![5, 6, 4]]);
        assert_eq!(a, c);
    }

    #[test]
    fn fixed_point_examples() {
        let chi = permutation_character_enum(&fam(FamilyKind::C, 2, 2), 100).unwrap();
        assert_eq!(*chi.value(&p(&[2, 1, 1])), BigInt::one());
        assert_eq!(*chi.value(&p(&[1, 1, 1, 1])), BigInt::from(3));
        assert_eq!(*chi.value(&p(&[4])), BigInt::one());
    }

    #[test]
    fn wreath_distribution_examples() {
        let d32 = wreath_class_distribution(&fam(FamilyKind::D, 3, 2));
        let expected: BTreeMap<Partition, BigUint> = [
            (p(&[1, 1, 1, 1, 1, 1]), 1u32),
            (p(&[3, 1, 1, 1]), 4),
            (p(&[3, 3]), 4),
            (p(&[2, 2, 2]), 3),
            (p(&[6]), 6),
        ]
        .into_iter()
        .map(|(k, v)| (k, BigUint::from(v)))
        .collect();
        assert_eq!(d32, expected);

        for f in [fam(FamilyKind::C, 2, 1), fam(FamilyKind::D, 2, 1)] {
            let d = wreath_class_distribution(&f);
            let expected: BTreeMap<Partition, BigUint> =
                [(p(&[1, 1]), BigUint::one()), (p(&[2]), BigUint::one())]
                    .into_iter()
                    .collect();
            assert_eq!(d, expected);
        }
    }

    #[test]
    fn wreath_distribution_matches_element_enumeration() {
        for f in [
            fam(FamilyKind::C, 2, 2),
            fam(FamilyKind::C, 2, 3),
            fam(FamilyKind::C, 3, 2),
            fam(FamilyKind::C, 3, 3),
            fam(FamilyKind::D, 3, 2),
            fam(FamilyKind::D, 3, 3),
            fam(FamilyKind::D, 4, 2),
            fam(FamilyKind::C, 4, 2),
        ] {
            assert_eq!(
                wreath_class_distribution(&f),
                wreath_class_distribution_brute(&f),
                "{f:?}"
            );
        }
    }

    #[test]
    fn wreath_distribution_totals() {
        for f in [
            fam(FamilyKind::C, 3, 4),
            fam(FamilyKind::D, 3, 4),
            fam(FamilyKind::C, 2, 6),
            fam(FamilyKind::D, 5, 2),
        ] {
            let total: BigUint = wreath_class_distribution(&f).values().sum();
            assert_eq!(total, f.subgroup_order(), "{f:?}");
        }
    }

    #[test]
    fn wreath_character_examples() {
        let c32 = permutation_character_wreath(&fam(FamilyKind::C, 3, 2)).unwrap();
        assert_eq!(
            c32,
            MultiplicityVector::from_entries(6, [(p(&[6]), 1), (p(&[4, 2]), 1)])
        );

        let d32 = permutation_character_wreath(&fam(FamilyKind::D, 3, 2)).unwrap();
        assert_eq!(
            d32,
            MultiplicityVector::from_entries(
                6,
                [
                    (p(&[6]), 1),
                    (p(&[4, 2]), 1),
                    (p(&[4, 1, 1]), 1),
                    (p(&[3, 1, 1, 1]), 1),
                    (p(&[2, 2, 2]), 1),
                    (p(&[2, 1, 1, 1, 1]), 1)
                ]
            )
        );
        assert_eq!(d32.total_dimension(), BigUint::from(40u32));

        let d31 = permutation_character_wreath(&fam(FamilyKind::D, 3, 1)).unwrap();
        assert_eq!(
            d31,
            MultiplicityVector::from_entries(3, [(p(&[3]), 1), (p(&[1, 1, 1]), 1)])
        );
    }

    #[test]
    fn oracles_agree_on_small_families() {
        for f in [
            fam(FamilyKind::C, 2, 2),
            fam(FamilyKind::C, 2, 3),
            fam(FamilyKind::C, 3, 2),
            fam(FamilyKind::D, 3, 2),
        ] {
            let from_enum =
                decompose_class_function(&permutation_character_enum(&f, DEFAULT_ENUM_CAP).unwrap())
                    .unwrap();
            let from_wreath = permutation_character_wreath(&f).unwrap();
            assert_eq!(from_enum, from_wreath, "{f:?}");
        }
    }

    #[test]
    fn burnside_transitivity() {
        for f in [fam(FamilyKind::C, 3, 2), fam(FamilyKind::D, 3, 2)] {
            let chi = permutation_character_enum(&f, DEFAULT_ENUM_CAP).unwrap();
            let mut sum = BigInt::zero();
            for (rho, v) in chi.iter() {
                sum += BigInt::from(class_size(rho)) * v;
            }
            assert_eq!(sum, BigInt::from(factorial(f.level_size())), "{f:?}");
        }
    }
}
