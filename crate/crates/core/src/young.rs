//! Box removal and addition, horizontal strips, and their linear extensions
//! to whole multiplicity vectors. These are the branching, induction, and
//! Pieri rules the level recursion is built from.

use crate::error::{Error, Result};
use crate::partition::{MultiplicityVector, Partition};

/// All partitions obtained by deleting one removable corner.
pub fn remove_one_box(lambda: &Partition) -> Result<Vec<Partition>> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let parts = lambda.parts();
    let mut out = Vec::new();
    for i in 0..parts.len() {
        // Corner: strictly longer than the row below.
        if i + 1 < parts.len() && parts[i] == parts[i + 1] {
            continue;
        }
        let mut new = parts.to_vec();
        if new[i] == 1 {
            new.remove(i);
        } else {
            new[i] -= 1;
        }
        out.push(Partition::new(new));
    }
    Ok(out)
}

/// All partitions obtained by adding one addable corner.
pub fn add_one_box(mu: &Partition) -> Vec<Partition> {
    let parts = mu.parts();
    let mut out = Vec::new();
    for i in 0..=parts.len() {
        let here = mu.part(i);
        let above = if i == 0 { u32::MAX } else { parts[i - 1] };
        if here < above {
            let mut new = parts.to_vec();
            if i == parts.len() {
                new.push(1);
            } else {
                new[i] += 1;
            }
            out.push(Partition::new(new));
        }
    }
    out
}

/// All λ ⊇ μ with |λ| = |μ| + k such that λ/μ is a horizontal strip
/// (no two added boxes in the same column). Multiplicity-free.
pub fn add_horizontal_strip(mu: &Partition, k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut rows = Vec::new();
    strip_rec(mu, 0, k, &mut rows, &mut out);
    out
}

fn strip_rec(mu: &Partition, row: usize, remaining: u32, rows: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if row == mu.len() {
        // Optional new bottom row, bounded by the strip condition
        // (nothing below row `len`, so the bound is mu's last part).
        let bound = if mu.is_empty() { remaining } else { mu.part(row - 1).min(remaining) };
        if remaining == 0 {
            out.push(Partition::new(rows.clone()));
        } else if remaining <= bound && remaining >= 1 {
            rows.push(remaining);
            out.push(Partition::new(rows.clone()));
            rows.pop();
        }
        return;
    }
    let base = mu.part(row);
    // Strip condition: the new row may not reach past the old row above.
    let cap = if row == 0 { base + remaining } else { mu.part(row - 1).min(base + remaining) };
    for new_len in base..=cap {
        rows.push(new_len);
        strip_rec(mu, row + 1, remaining - (new_len - base), rows, out);
        rows.pop();
    }
}

/// k-fold single-box induction with multiplicity bookkeeping: the
/// coefficient of λ is the number of box-addition paths μ → λ, i.e. the
/// number of standard fillings of λ/μ.
pub fn iterated_add(mu: &Partition, k: u32) -> MultiplicityVector {
    let mut v = MultiplicityVector::from_entries(mu.size(), [(mu.clone(), 1)]);
    for _ in 0..k {
        v = induce_vector(&v);
    }
    v
}

fn induce_vector(v: &MultiplicityVector) -> MultiplicityVector {
    let mut out = MultiplicityVector::new(v.level_size() + 1);
    for (mu, k) in v.iter() {
        for lam in add_one_box(mu) {
            out.add(lam, k);
        }
    }
    out
}

/// Σ_λ v(λ)·remove_one_box(λ), level size decremented.
pub fn restrict_vector(v: &MultiplicityVector) -> Result<MultiplicityVector> {
    if v.level_size() == 0 {
        return Err(Error::EmptyPartition);
    }
    let mut out = MultiplicityVector::new(v.level_size() - 1);
    for (lam, k) in v.iter() {
        for mu in remove_one_box(lam)? {
            out.add(mu, k);
        }
    }
    Ok(out)
}

/// Linear extension of `add_horizontal_strip` over a multiplicity vector.
pub fn pieri_vector(v: &MultiplicityVector, k: u32) -> MultiplicityVector {
    let mut out = MultiplicityVector::new(v.level_size() + k);
    for (mu, mult) in v.iter() {
        for lam in add_horizontal_strip(mu, k) {
            out.add(lam, mult);
        }
    }
    out
}

/// Linear extension of `iterated_add` over a multiplicity vector.
pub fn iterated_vector(v: &MultiplicityVector, k: u32) -> MultiplicityVector {
    let mut out = MultiplicityVector::new(v.level_size() + k);
    for (mu, mult) in v.iter() {
        for (lam, paths) in iterated_add(mu, k).iter() {
            out.add(lam.clone(), mult * paths);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use num_bigint::BigUint;
    use num_traits::One;
    use std::collections::BTreeSet;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn set(v: Vec<Partition>) -> BTreeSet<Partition> {
        v.into_iter().collect()
    }

    #[test]
    fn remove_one_box_examples() {
        assert_eq!(set(remove_one_box(&p(&[4, 2])).unwrap()), set(vec![p(&[3, 2]), p(&[4, 1])]));
        assert_eq!(set(remove_one_box(&p(&[6])).unwrap()), set(vec![p(&[5])]));
        assert_eq!(set(remove_one_box(&p(&[2, 2])).unwrap()), set(vec![p(&[2, 1])]));
        assert!(matches!(remove_one_box(&Partition::empty()), Err(Error::EmptyPartition)));
    }

    #[test]
    fn add_one_box_examples() {
        assert_eq!(set(add_one_box(&p(&[3]))), set(vec![p(&[4]), p(&[3, 1])]));
        assert_eq!(set(add_one_box(&Partition::empty())), set(vec![p(&[1])]));
        assert_eq!(
            set(add_one_box(&p(&[2, 1]))),
            set(vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])])
        );
    }

    /// Independent strip oracle: all λ of the right size containing μ with
    /// no two added boxes in the same column.
    fn strips_brute(mu: &Partition, k: u32) -> BTreeSet<Partition> {
        partitions_of(mu.size() + k)
            .into_iter()
            .filter(|lam| {
                if lam.len() < mu.len() {
                    return false;
                }
                (0..lam.len()).all(|i| {
                    let contains = lam.part(i) >= mu.part(i);
                    // horizontal strip: row i of λ may not reach past row i-1 of μ
                    let strip = i == 0 || lam.part(i) <= mu.part(i - 1);
                    contains && strip
                })
            })
            .collect()
    }

    #[test]
    fn horizontal_strip_examples() {
        assert_eq!(
            set(add_horizontal_strip(&p(&[3]), 2)),
            set(vec![p(&[5]), p(&[4, 1]), p(&[3, 2])])
        );
        assert_eq!(set(add_horizontal_strip(&p(&[3]), 2)), strips_brute(&p(&[3]), 2));
        assert_eq!(
            set(add_horizontal_strip(&p(&[4, 2]), 2)),
            set(vec![p(&[6, 2]), p(&[5, 3]), p(&[4, 4]), p(&[5, 2, 1]), p(&[4, 3, 1]), p(&[4, 2, 2])])
        );
        assert_eq!(set(add_horizontal_strip(&p(&[4, 2]), 2)), strips_brute(&p(&[4, 2]), 2));
        assert_eq!(set(add_horizontal_strip(&p(&[2, 1]), 0)), set(vec![p(&[2, 1])]));
    }

    #[test]
    fn horizontal_strip_matches_brute_force() {
        for n in 0..=6u32 {
            for mu in partitions_of(n) {
                for k in 0..=4u32 {
                    assert_eq!(
                        set(add_horizontal_strip(&mu, k)),
                        strips_brute(&mu, k),
                        "mu={mu:?} k={k}"
                    );
                }
            }
        }
    }

    /// Path-enumeration oracle for iterated induction.
    fn paths_brute(mu: &Partition, k: u32) -> MultiplicityVector {
        if k == 0 {
            return MultiplicityVector::from_entries(mu.size(), [(mu.clone(), 1)]);
        }
        let prev = paths_brute(mu, k - 1);
        let mut out = MultiplicityVector::new(mu.size() + k);
        for (nu, c) in prev.iter() {
            for lam in add_one_box(nu) {
                out.add(lam, c);
            }
        }
        out
    }

    #[test]
    fn iterated_add_examples() {
        let v = iterated_add(&p(&[3]), 2);
        assert_eq!(
            v,
            MultiplicityVector::from_entries(
                5,
                [(p(&[5]), 1), (p(&[4, 1]), 2), (p(&[3, 2]), 1), (p(&[3, 1, 1]), 1)]
            )
        );
        assert_eq!(v, paths_brute(&p(&[3]), 2));

        let v0 = iterated_add(&p(&[2, 1]), 0);
        assert_eq!(v0, MultiplicityVector::from_entries(3, [(p(&[2, 1]), 1)]));

        // From the empty partition, path counts are tableau counts.
        let v3 = iterated_add(&Partition::empty(), 3);
        assert_eq!(
            v3,
            MultiplicityVector::from_entries(
                3,
                [(p(&[3]), 1), (p(&[2, 1]), 2), (p(&[1, 1, 1]), 1)]
            )
        );
        for (lam, c) in v3.iter() {
            assert_eq!(BigUint::from(c), lam.dim_specht());
        }
    }

    #[test]
    fn restrict_vector_examples() {
        let v = MultiplicityVector::from_entries(6, [(p(&[6]), 1), (p(&[4, 2]), 1)]);
        assert_eq!(
            restrict_vector(&v).unwrap(),
            MultiplicityVector::from_entries(5, [(p(&[5]), 1), (p(&[3, 2]), 1), (p(&[4, 1]), 1)])
        );
        let v1 = MultiplicityVector::from_entries(1, [(p(&[1]), 1)]);
        assert_eq!(
            restrict_vector(&v1).unwrap(),
            MultiplicityVector::from_entries(0, [(Partition::empty(), 1)])
        );
        let v2 = MultiplicityVector::from_entries(4, [(p(&[2, 2]), 3)]);
        assert_eq!(
            restrict_vector(&v2).unwrap(),
            MultiplicityVector::from_entries(3, [(p(&[2, 1]), 3)])
        );
    }

    #[test]
    fn vector_lifts() {
        let v = MultiplicityVector::from_entries(3, [(p(&[3]), 1)]);
        assert_eq!(
            pieri_vector(&v, 2),
            MultiplicityVector::from_entries(5, [(p(&[5]), 1), (p(&[4, 1]), 1), (p(&[3, 2]), 1)])
        );
        assert_eq!(pieri_vector(&v, 0), v);

        let w = MultiplicityVector::from_entries(3, [(p(&[3]), 1), (p(&[1, 1, 1]), 1)]);
        assert_eq!(
            iterated_vector(&w, 2),
            MultiplicityVector::from_entries(
                5,
                [
                    (p(&[5]), 1),
                    (p(&[4, 1]), 2),
                    (p(&[3, 2]), 1),
                    (p(&[3, 1, 1]), 2),
                    (p(&[2, 2, 1]), 1),
                    (p(&[2, 1, 1, 1]), 2),
                    (p(&[1, 1, 1, 1, 1]), 1)
                ]
            )
        );
    }

    #[test]
    fn restriction_conserves_dimension() {
        for n in 1..=12u32 {
            for lam in partitions_of(n) {
                let mut sum = BigUint::from(0u32);
                for mu in remove_one_box(&lam).unwrap() {
                    sum += mu.dim_specht();
                }
                assert_eq!(sum, lam.dim_specht(), "{lam:?}");
            }
        }
    }

    #[test]
    fn induction_dimension_identities() {
        // Pieri: Σ dim = dim(μ)·C(|μ|+k, k); iterated: Σ coeff·dim = dim(μ)·(|μ|+k)!/|μ|!.
        for n in 0..=6u32 {
            for mu in partitions_of(n) {
                for k in 0..=4u32 {
                    let dmu = mu.dim_specht();
                    let binom = binomial(n + k, k);
                    let pieri: BigUint = add_horizontal_strip(&mu, k)
                        .iter()
                        .map(|l| l.dim_specht())
                        .sum();
                    assert_eq!(pieri, &dmu * binom, "pieri mu={mu:?} k={k}");

                    let mut rising = BigUint::one();
                    for j in n + 1..=n + k {
                        rising *= BigUint::from(j);
                    }
                    assert_eq!(iterated_add(&mu, k).total_dimension(), &dmu * rising, "iter mu={mu:?} k={k}");
                }
            }
        }
    }

    fn binomial(n: u32, k: u32) -> BigUint {
        let mut r = BigUint::one();
        for j in 0..k {
            r = r * BigUint::from(n - j) / BigUint::from(j + 1);
        }
        r
    }

    #[test]
    fn pieri_supports_sit_inside_iterated() {
        for n in 0..=5u32 {
            for mu in partitions_of(n) {
                for k in 0..=3u32 {
                    let iter = iterated_add(&mu, k);
                    for lam in add_horizontal_strip(&mu, k) {
                        assert!(iter.get(&lam) >= 1, "mu={mu:?} k={k} lam={lam:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn branching_duality() {
        for n in 0..=8u32 {
            for mu in partitions_of(n) {
                for lam in add_one_box(&mu) {
                    assert!(remove_one_box(&lam).unwrap().contains(&mu));
                }
            }
        }
    }
}
