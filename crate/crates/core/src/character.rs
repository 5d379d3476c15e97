//! Irreducible symmetric-group characters and exact inner products.
//!
//! Character values come from the Murnaghan–Nakayama border-strip recursion
//! over beta numbers, memoized per thread. Inner products are exact
//! rationals; a multiplicity that comes out negative or fractional is a hard
//! error, never rounded.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, MultiplicityVector, Partition};

/// A function on conjugacy classes of S_N, keyed by cycle type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction {
    level_size: u32,
    values: BTreeMap<Partition, BigInt>,
}

impl ClassFunction {
    /// `values` must cover every cycle type of `level_size`.
    pub fn new(level_size: u32, values: BTreeMap<Partition, BigInt>) -> Self {
        for rho in partitions_of(level_size) {
            assert!(values.contains_key(&rho), "missing class {rho:?}");
        }
        assert_eq!(values.len(), partitions_of(level_size).len());
        ClassFunction { level_size, values }
    }

    pub fn level_size(&self) -> u32 {
        self.level_size
    }

    pub fn value(&self, rho: &Partition) -> &BigInt {
        &self.values[rho]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.values.iter()
    }

    /// Value on the identity class.
    pub fn degree(&self) -> &BigInt {
        let id = Partition::new(vec![1; self.level_size as usize]);
        &self.values[&id]
    }
}

impl Serialize for ClassFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            #[serde(rename = "type")]
            cycle_type: &'a Partition,
            value: String,
        }
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("N", &self.level_size)?;
        let entries: Vec<Entry> = self
            .values
            .iter()
            .map(|(t, v)| Entry {
                cycle_type: t,
                value: v.to_string(),
            })
            .collect();
        map.serialize_entry("values", &entries)?;
        map.end()
    }
}

thread_local! {
    static MN_CACHE: RefCell<HashMap<(Vec<u32>, Vec<u32>), BigInt>> = RefCell::new(HashMap::new());
}

/// χ^λ(ρ) by border-strip removal. Exact; memoized per thread.
pub fn mn_char(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: rho.size(),
        });
    }
    Ok(mn_rec(lambda.parts(), rho.parts()))
}

fn mn_rec(lambda: &[u32], rho: &[u32]) -> BigInt {
    if rho.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(v) = MN_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    // Beta numbers: β_i = λ_i + (k-1-i) for the k-row diagram.
    let k = lambda.len();
    let strip = rho[0] as i64;
    let betas: Vec<i64> = (0..k).map(|i| lambda[i] as i64 + (k - 1 - i) as i64).collect();
    let mut total = BigInt::zero();
    for (i, &b) in betas.iter().enumerate() {
        let target = b - strip;
        if target < 0 || betas.contains(&target) {
            continue;
        }
        let height = betas.iter().filter(|&&x| target < x && x < b).count();
        let mut new_betas = betas.clone();
        new_betas[i] = target;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let new_lambda: Vec<u32> = new_betas
            .iter()
            .enumerate()
            .map(|(j, &beta)| (beta - (k - 1 - j) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        let sub = mn_rec(&new_lambda, &rho[1..]);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    MN_CACHE.with(|c| c.borrow_mut().insert(key, total.clone()));
    total
}

/// χ^λ as a full class function on S_N.
pub fn irreducible_character(lambda: &Partition) -> ClassFunction {
    let n = lambda.size();
    let values = partitions_of(n)
        .into_iter()
        .map(|rho| {
            let v = mn_char(lambda, &rho).expect("sizes match");
            (rho, v)
        })
        .collect();
    ClassFunction::new(n, values)
}

/// Size of the conjugacy class with cycle type ρ: N! / Π i^{m_i}·m_i!.
pub fn class_size(rho: &Partition) -> BigUint {
    let n = rho.size();
    let mut num = BigUint::one();
    for k in 1..=n {
        num *= BigUint::from(k);
    }
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in rho.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    let mut den = BigUint::one();
    for (part, m) in mult {
        for _ in 0..m {
            den *= BigUint::from(part);
        }
        for j in 1..=m {
            den *= BigUint::from(j);
        }
    }
    num / den
}

fn factorial(n: u32) -> BigUint {
    let mut f = BigUint::one();
    for k in 1..=n {
        f *= BigUint::from(k);
    }
    f
}

/// (1/N!)·Σ_ρ |class ρ|·f(ρ)·g(ρ), exact.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<BigRational> {
    if f.level_size() != g.level_size() {
        return Err(Error::SizeMismatch {
            left: f.level_size(),
            right: g.level_size(),
        });
    }
    let mut sum = BigInt::zero();
    for (rho, fv) in f.iter() {
        sum += BigInt::from(class_size(rho)) * fv * g.value(rho);
    }
    let order = BigInt::from(factorial(f.level_size()));
    Ok(BigRational::new(sum, order))
}

/// Expands a character into irreducible multiplicities by inner products.
pub fn decompose_class_function(f: &ClassFunction) -> Result<MultiplicityVector> {
    let n = f.level_size();
    let mut out = MultiplicityVector::new(n);
    for lambda in partitions_of(n) {
        let chi = irreducible_character(&lambda);
        let ip = inner_product(f, &chi)?;
        if !ip.is_integer() {
            return Err(Error::NotACharacter {
                reason: format!("multiplicity of {lambda:?} is the non-integer {ip}"),
            });
        }
        let m = ip.to_integer();
        if m.is_negative() {
            return Err(Error::NotACharacter {
                reason: format!("multiplicity of {lambda:?} is negative: {m}"),
            });
        }
        if !m.is_zero() {
            let (_, digits) = m.to_u64_digits();
            assert!(digits.len() <= 1, "multiplicity overflow");
            out.add(lambda, digits[0]);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap as StdHashMap;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// Independent character oracle via the Frobenius formula:
    /// χ^λ(ρ) = [x^{λ+δ}] a_δ(x)·p_ρ(x) in k = len(λ) variables,
    /// where a_δ is the Vandermonde alternant and p_ρ the power sums.
    fn frobenius_char(lambda: &Partition, rho: &Partition) -> i64 {
        let k = lambda.len().max(1);
        // Dense polynomials as maps exponent-vector -> coeff.
        type Poly = StdHashMap<Vec<u32>, i64>;
        fn mul(a: &Poly, b: &Poly) -> Poly {
            let mut out = Poly::new();
            for (ea, ca) in a {
                for (eb, cb) in b {
                    let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                    *out.entry(e).or_insert(0) += ca * cb;
                }
            }
            out
        }
        // Vandermonde alternant: sum over permutations sigma of sign * x^{delta_sigma}.
        let mut alt = Poly::new();
        let delta: Vec<u32> = (0..k).map(|i| (k - 1 - i) as u32).collect();
        let mut perm: Vec<usize> = (0..k).collect();
        permute_all(&mut perm, 0, &mut |perm, sign| {
            let e: Vec<u32> = perm.iter().map(|&i| delta[i]).collect();
            *alt.entry(e).or_insert(0) += sign;
        });
        let mut poly = alt;
        for &r in rho.parts() {
            let mut pr = Poly::new();
            for i in 0..k {
                let mut e = vec![0u32; k];
                e[i] = r;
                pr.insert(e, 1);
            }
            poly = mul(&poly, &pr);
        }
        let target: Vec<u32> = (0..k).map(|i| lambda.part(i) + delta[i]).collect();
        poly.get(&target).copied().unwrap_or(0)
    }

    fn permute_all(perm: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize], i64)) {
        if i == perm.len() {
            // Sign by inversion count.
            let inv = (0..perm.len())
                .flat_map(|a| (a + 1..perm.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| perm[a] > perm[b])
                .count();
            f(perm, if inv % 2 == 0 { 1 } else { -1 });
            return;
        }
        for j in i..perm.len() {
            perm.swap(i, j);
            permute_all(perm, i + 1, f);
            perm.swap(i, j);
        }
    }

    #[test]
    fn mn_examples() {
        assert_eq!(mn_char(&p(&[5]), &p(&[3, 2])).unwrap(), BigInt::one());
        assert_eq!(mn_char(&p(&[1, 1, 1]), &p(&[3])).unwrap(), BigInt::one());
        assert_eq!(mn_char(&p(&[2, 2]), &p(&[2, 2])).unwrap(), BigInt::from(2));
        assert_eq!(frobenius_char(&p(&[2, 2]), &p(&[2, 2])), 2);
        assert_eq!(mn_char(&p(&[4, 2]), &p(&[2, 2, 2])).unwrap(), BigInt::from(3));
        assert_eq!(frobenius_char(&p(&[4, 2]), &p(&[2, 2, 2])), 3);
        assert!(matches!(
            mn_char(&p(&[3]), &p(&[2, 2])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn mn_matches_frobenius_formula() {
        for n in 1..=6u32 {
            for lam in partitions_of(n) {
                for rho in partitions_of(n) {
                    assert_eq!(
                        mn_char(&lam, &rho).unwrap(),
                        BigInt::from(frobenius_char(&lam, &rho)),
                        "lam={lam:?} rho={rho:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn mn_identity_is_dimension() {
        for n in 1..=12u32 {
            let id = p(&vec![1u32; n as usize]);
            for lam in partitions_of(n) {
                assert_eq!(
                    mn_char(&lam, &id).unwrap(),
                    BigInt::from(lam.dim_specht()),
                    "{lam:?}"
                );
            }
        }
    }

    #[test]
    fn mn_conjugation_twists_by_sign() {
        for n in 1..=9u32 {
            for lam in partitions_of(n) {
                for rho in partitions_of(n) {
                    let lhs = mn_char(&lam.conjugate(), &rho).unwrap();
                    let rhs = mn_char(&lam, &rho).unwrap() * BigInt::from(rho.sign());
                    assert_eq!(lhs, rhs, "lam={lam:?} rho={rho:?}");
                }
            }
        }
    }

    #[test]
    fn class_size_examples() {
        assert_eq!(class_size(&p(&[2, 1, 1])), BigUint::from(6u32));
        assert_eq!(class_size(&p(&[3, 3])), BigUint::from(40u32));
        assert_eq!(class_size(&p(&vec![1u32; 9])), BigUint::one());
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=12u32 {
            let total: BigUint = partitions_of(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n), "N = {n}");
        }
    }

    #[test]
    fn character_orthogonality() {
        for n in 1..=10u32 {
            let classes = partitions_of(n);
            let chars: Vec<ClassFunction> =
                classes.iter().map(irreducible_character).collect();
            let order = BigInt::from(factorial(n));
            for (a, ca) in chars.iter().enumerate() {
                for (b, cb) in chars.iter().enumerate() {
                    let mut sum = BigInt::zero();
                    for rho in &classes {
                        sum += BigInt::from(class_size(rho)) * ca.value(rho) * cb.value(rho);
                    }
                    let expect = if a == b { order.clone() } else { BigInt::zero() };
                    assert_eq!(sum, expect, "N={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        let chi42 = irreducible_character(&p(&[4, 2]));
        let chi6 = irreducible_character(&p(&[6]));
        assert_eq!(inner_product(&chi42, &chi42).unwrap(), BigRational::one());
        assert_eq!(inner_product(&chi6, &chi42).unwrap(), BigRational::zero());
    }

    #[test]
    fn decompose_irreducible_is_delta() {
        for lam in partitions_of(5) {
            let chi = irreducible_character(&lam);
            let v = decompose_class_function(&chi).unwrap();
            assert_eq!(v, MultiplicityVector::from_entries(5, [(lam.clone(), 1)]));
        }
    }

    #[test]
    fn non_character_is_rejected() {
        // The sign character halved is not a character.
        let n = 3u32;
        let values: BTreeMap<Partition, BigInt> = partitions_of(n)
            .into_iter()
            .map(|rho| {
                let v = BigInt::from(rho.sign()) * BigInt::from(3);
                (rho, v)
            })
            .collect();
        // 3·sign decomposes fine; shift one value to break integrality.
        let mut bad = values.clone();
        *bad.get_mut(&p(&[3])).unwrap() += 1;
        let f = ClassFunction::new(n, bad);
        assert!(matches!(
            decompose_class_function(&f),
            Err(Error::NotACharacter { .. })
        ));
    }
}
