//! The explicit m = 2 map from tabloids to formal sums of perfect matchings:
//! a single row maps to the sum of all matchings on it, a tabloid to the
//! product over rows, and the seed polytabloid to a signed column-group sum.
//! Verification checks nonvanishing, the positive base-matching coefficient,
//! and isotypic purity by group averaging.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::character::mn_char;
use crate::decomposer::VerifyReport;
use crate::error::{Error, Result};
use crate::objects::{HyperMatching, Permutation};
use crate::partition::{partitions_of, Partition};

/// A row-equivalence class of fillings: ordered rows, each an unordered set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tabloid {
    rows: Vec<Vec<u32>>, // each sorted ascending
}

impl Tabloid {
    pub fn new(rows: Vec<Vec<u32>>) -> Self {
        let mut rows = rows;
        for r in &mut rows {
            r.sort_unstable();
        }
        Tabloid { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn ground_size(&self) -> u32 {
        self.rows.iter().map(|r| r.len() as u32).sum()
    }

    pub fn permuted(&self, g: &Permutation) -> Result<Tabloid> {
        if g.degree() != self.ground_size() {
            return Err(Error::SizeMismatch {
                left: g.degree(),
                right: self.ground_size(),
            });
        }
        Ok(Tabloid::new(
            self.rows
                .iter()
                .map(|r| r.iter().map(|&p| g.apply(p)).collect())
                .collect(),
        ))
    }
}

/// An integer linear combination of perfect matchings.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FormalMatchingSum {
    terms: BTreeMap<HyperMatching, BigInt>,
}

impl FormalMatchingSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &HyperMatching) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HyperMatching, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: HyperMatching, c: BigInt) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &FormalMatchingSum) {
        for (m, c) in other.terms() {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scaled(&self, c: &BigInt) -> FormalMatchingSum {
        let mut out = FormalMatchingSum::zero();
        for (m, v) in self.terms() {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Relabels every matching by `g`.
    pub fn permuted(&self, g: &Permutation) -> Result<FormalMatchingSum> {
        let mut out = FormalMatchingSum::zero();
        for (m, c) in self.terms() {
            out.add_term(g.act_matching(m)?, c.clone());
        }
        Ok(out)
    }
}

impl Serialize for FormalMatchingSum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            matching: &'a HyperMatching,
            coeff: String,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&Term {
                matching: m,
                coeff: c.to_string(),
            })?;
        }
        seq.end()
    }
}

/// Sum, coefficient 1 each, of all (|R|-1)!! perfect matchings on `points`.
pub fn f_row(points: &[u32]) -> Result<FormalMatchingSum> {
    if points.len() % 2 != 0 {
        return Err(Error::OddRow(points.len()));
    }
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    let mut out = FormalMatchingSum::zero();
    let mut edges = Vec::new();
    enumerate_matchings(&sorted, &mut edges, &mut |edges| {
        out.add_term(HyperMatching::new(edges.to_vec()), BigInt::one());
    });
    Ok(out)
}

fn enumerate_matchings(points: &[u32], edges: &mut Vec<Vec<u32>>, f: &mut impl FnMut(&[Vec<u32>])) {
    if points.is_empty() {
        f(edges);
        return;
    }
    let a = points[0];
    for i in 1..points.len() {
        let b = points[i];
        let rest: Vec<u32> = points[1..]
            .iter()
            .copied()
            .filter(|&p| p != b)
            .collect();
        edges.push(vec![a, b]);
        enumerate_matchings(&rest, edges, f);
        edges.pop();
    }
}

/// Product over rows, each term a perfect matching of the whole ground set.
pub fn f_tabloid(t: &Tabloid) -> Result<FormalMatchingSum> {
    let row_sums: Vec<FormalMatchingSum> = t
        .rows()
        .iter()
        .map(|r| f_row(r))
        .collect::<Result<_>>()?;
    let mut acc = FormalMatchingSum::zero();
    acc.add_term(HyperMatching::new(Vec::new()), BigInt::one());
    for rs in row_sums {
        let mut next = FormalMatchingSum::zero();
        for (partial, c1) in acc.terms() {
            for (m, c2) in rs.terms() {
                let mut blocks = partial.blocks().to_vec();
                blocks.extend(m.blocks().iter().cloned());
                next.add_term(HyperMatching::new(blocks), c1 * c2);
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// The standard tableau of `shape` filled 1,2,... along rows.
pub fn seed_tableau(shape: &Partition) -> Vec<Vec<u32>> {
    let mut rows = Vec::new();
    let mut next = 1u32;
    for &len in shape.parts() {
        rows.push((next..next + len).collect());
        next += len;
    }
    rows
}

/// The base matching 12|34|...|2n-1,2n.
pub fn base_matching(two_n: u32) -> HyperMatching {
    HyperMatching::new((0..two_n / 2).map(|i| vec![2 * i + 1, 2 * i + 2]).collect())
}

fn column_group_order(shape: &Partition) -> num_bigint::BigUint {
    use num_bigint::BigUint;
    let conj = shape.conjugate();
    let mut order = BigUint::one();
    for &h in conj.parts() {
        for k in 1..=h {
            order *= BigUint::from(k);
        }
    }
    order
}

/// Image of the seed polytabloid: Σ over the seed tableau's column group of
/// sign(π)·f(π{t}).
pub fn polytabloid_image(shape: &Partition, cap: u64) -> Result<FormalMatchingSum> {
    let order = column_group_order(shape);
    if order > num_bigint::BigUint::from(cap) {
        return Err(Error::TooLarge { count: order, cap });
    }
    let tableau = seed_tableau(shape);
    let two_n = shape.size();
    // Columns of the seed tableau, as value lists top to bottom.
    let ncols = shape.part(0) as usize;
    let columns: Vec<Vec<u32>> = (0..ncols)
        .map(|j| {
            tableau
                .iter()
                .filter(|row| row.len() > j)
                .map(|row| row[j])
                .collect()
        })
        .collect();
    let mut out = FormalMatchingSum::zero();
    let mut images: Vec<u32> = (1..=two_n).collect();
    column_group_rec(&columns, 0, 1, &mut images, &mut |images, sign| {
        let g = Permutation::new(images.to_vec());
        let t = Tabloid::new(tableau.clone())
            .permuted(&g)
            .expect("sizes match");
        let ft = f_tabloid(&t).expect("even rows");
        out.add(&ft.scaled(&BigInt::from(sign)));
    });
    Ok(out)
}

/// Enumerates the direct product of symmetric groups on the columns,
/// tracking the product sign.
fn column_group_rec(
    columns: &[Vec<u32>],
    idx: usize,
    sign: i32,
    images: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32], i32),
) {
    if idx == columns.len() {
        f(images, sign);
        return;
    }
    let col = &columns[idx];
    let k = col.len();
    let mut assignment: Vec<u32> = col.clone();
    permute_signed(&mut assignment, 0, sign, &mut |assigned, s| {
        for (slot, &val) in col.iter().zip(assigned) {
            images[(*slot - 1) as usize] = val;
        }
        column_group_rec(columns, idx + 1, s, images, f);
    });
    // Restore identity on this column.
    for &v in col.iter().take(k) {
        images[(v - 1) as usize] = v;
    }
}

fn permute_signed(v: &mut Vec<u32>, i: usize, sign: i32, f: &mut impl FnMut(&[u32], i32)) {
    if i == v.len() {
        f(v, sign);
        return;
    }
    for j in i..v.len() {
        let s = if i == j { sign } else { -sign };
        v.swap(i, j);
        permute_signed(v, i + 1, s, f);
        v.swap(i, j);
    }
}

/// f(g·T) = g·f(T).
pub fn equivariance_check(g: &Permutation, t: &Tabloid) -> Result<bool> {
    let lhs = f_tabloid(&t.permuted(g)?)?;
    let rhs = f_tabloid(t)?.permuted(g)?;
    Ok(lhs == rhs)
}

/// Sum over the full symmetric group of χ^mu(g)·g·v, per conjugacy class.
/// Zero exactly outside the mu-isotypic component.
fn isotypic_projections(
    v: &FormalMatchingSum,
    two_n: u32,
) -> Result<BTreeMap<Partition, FormalMatchingSum>> {
    // Class sums of g·v first; characters are constant on classes.
    let mut class_sums: BTreeMap<Partition, FormalMatchingSum> = BTreeMap::new();
    let mut perm: Vec<u32> = (1..=two_n).collect();
    let mut acc: std::result::Result<(), Error> = Ok(());
    permute_plain(&mut perm, 0, &mut |images| {
        if acc.is_err() {
            return;
        }
        let g = Permutation::new(images.to_vec());
        match v.permuted(&g) {
            Ok(gv) => {
                class_sums
                    .entry(g.cycle_type())
                    .or_insert_with(FormalMatchingSum::zero)
                    .add(&gv);
            }
            Err(e) => acc = Err(e),
        }
    });
    acc?;
    debug_assert_eq!(class_sums.len(), partitions_of(two_n).len());
    let mut out = BTreeMap::new();
    for mu in partitions_of(two_n) {
        let mut proj = FormalMatchingSum::zero();
        for (rho, sum) in &class_sums {
            let chi = mn_char(&mu, rho)?;
            proj.add(&sum.scaled(&chi));
        }
        out.insert(mu, proj);
    }
    Ok(out)
}

fn permute_plain(v: &mut Vec<u32>, i: usize, f: &mut impl FnMut(&[u32])) {
    if i == v.len() {
        f(v);
        return;
    }
    for j in i..v.len() {
        v.swap(i, j);
        permute_plain(v, i + 1, f);
        v.swap(i, j);
    }
}

/// Checks, for every even λ ⊢ 2n: the polytabloid image is nonzero, the base
/// matching appears with strictly positive coefficient, the image is
/// concentrated in its own isotypic component, and the even dimensions sum
/// to (2n-1)!!.
pub fn verify_iso(n: u32, column_cap: u64) -> Result<VerifyReport> {
    let two_n = 2 * n;
    let mut report = VerifyReport::default();
    let evens: Vec<Partition> = partitions_of(two_n)
        .into_iter()
        .filter(|p| p.is_even())
        .collect();

    let mut dim_sum = num_bigint::BigUint::zero();
    for lam in &evens {
        dim_sum += lam.dim_specht();
    }
    let mut double_fact = num_bigint::BigUint::one();
    let mut k = 1u32;
    while k <= two_n - 1 {
        double_fact *= num_bigint::BigUint::from(k);
        k += 2;
    }
    report.push(
        format!("sum of even dims at 2n={two_n} is (2n-1)!!"),
        dim_sum == double_fact,
        format!("{dim_sum} vs {double_fact}"),
    );

    let base = base_matching(two_n);
    for lam in &evens {
        let image = polytabloid_image(lam, column_cap)?;
        report.push(
            format!("polytabloid image of {lam:?} is nonzero"),
            !image.is_zero(),
            format!("{} terms", image.num_terms()),
        );
        let base_coeff = image.coeff(&base);
        report.push(
            format!("base matching coefficient for {lam:?} is positive"),
            base_coeff.is_positive(),
            format!("coefficient {base_coeff}"),
        );
        let projections = isotypic_projections(&image, two_n)?;
        for (mu, proj) in &projections {
            let expect_zero = mu != lam;
            let ok = proj.is_zero() == expect_zero;
            report.push(
                format!("projection of image({lam:?}) onto {mu:?} is {}", if expect_zero { "zero" } else { "nonzero" }),
                ok,
                format!("{} terms", proj.num_terms()),
            );
        }
    }
    Ok(report)
}
