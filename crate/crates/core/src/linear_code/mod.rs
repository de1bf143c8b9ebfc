//! Generic linear codes given by generator matrices, with the oracles used to
//! check every construction: dual, intersection, hull, minimum distance, MDS.

mod matrix;

pub use matrix::{Matrix, Rref};

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Default enumeration budget for [`LinearCode::minimum_distance`].
pub const DEFAULT_DISTANCE_BUDGET: u64 = 10_000_000;

/// A linear [n, k] code with a full-row-rank generator matrix.
///
/// k = 0 is allowed so that the dual of the full space is representable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    gen: Matrix,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MdsRoute {
    /// Exhaustive codeword enumeration.
    Enumeration,
    /// Every k-subset of generator columns is nonsingular.
    ColumnSubsets,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdsVerdict {
    pub is_mds: bool,
    pub route: MdsRoute,
    /// Present when the enumeration route ran.
    pub min_distance: Option<usize>,
}

/// Everything `verify` reports about a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeVerdict {
    pub n: usize,
    pub k: usize,
    pub hull_dimension: usize,
    pub is_lcd: bool,
    pub min_distance: Option<usize>,
    pub mds_route: MdsRoute,
    pub is_mds: bool,
}

impl LinearCode {
    pub fn new(gen: Matrix) -> Result<Self> {
        let rank = gen.rank();
        if rank != gen.rows() {
            return Err(Error::RankDeficient { rank, rows: gen.rows() });
        }
        Ok(LinearCode { gen })
    }

    pub fn from_indices(field: &Field, rows: &[Vec<u32>]) -> Result<Self> {
        Self::new(Matrix::from_indices(field, rows)?)
    }

    pub fn field(&self) -> &Field {
        self.gen.field()
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// The codeword m·G.
    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        self.gen.transpose().mul_vec(message)
    }

    /// True when both codes have the same row space.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.field() == other.field() && self.gen.row_space_basis() == other.gen.row_space_basis()
    }

    /// The dual code under the standard inner product.
    pub fn dual(&self) -> LinearCode {
        LinearCode { gen: self.gen.null_space() }
    }

    /// Whether a vector is orthogonal to every generator row.
    pub fn is_in_dual(&self, v: &[Elem]) -> Result<bool> {
        Ok(self.gen.mul_vec(v)?.iter().all(|x| x.is_zero()))
    }

    /// dim(C1 ∩ C2) = k1 + k2 - rank of the stacked generators.
    pub fn intersection_dim(&self, other: &LinearCode) -> Result<usize> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.n() != other.n() {
            return Err(Error::LengthMismatch { left: self.n(), right: other.n() });
        }
        let stacked = self.gen.vstack(&other.gen)?;
        Ok(self.k() + other.k() - stacked.rank())
    }

    /// dim(C ∩ C⊥) = k - rank(G·Gᵀ).
    pub fn hull_dimension(&self) -> usize {
        let gram = self.gen.mul(&self.gen.transpose()).expect("shapes agree");
        self.k() - gram.rank()
    }

    pub fn is_lcd(&self) -> bool {
        self.hull_dimension() == 0
    }

    /// Minimum Hamming weight over nonzero codewords, by enumeration.
    ///
    /// Fails with [`Error::BudgetExceeded`] when q^k exceeds `budget`. Only
    /// messages whose first nonzero entry is 1 are visited, since scaling
    /// preserves weight. The zero code reports n + 1.
    pub fn minimum_distance(&self, budget: u64) -> Result<usize> {
        let q = self.field().order();
        let (n, k) = (self.n(), self.k());
        let needed = checked_pow(q as u128, k);
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        if k == 0 {
            return Ok(n + 1);
        }
        let f = self.field();
        // multiples[i][a] = a·(row i)
        let multiples: Vec<Vec<Vec<Elem>>> = (0..k)
            .map(|i| {
                f.elements()
                    .map(|a| self.gen.row(i).iter().map(|&x| f.mul(a, x)).collect())
                    .collect()
            })
            .collect();

        let items: Vec<(usize, Option<Elem>)> = (0..k)
            .flat_map(|lead| {
                if lead + 1 < k {
                    f.elements().map(|a| (lead, Some(a))).collect::<Vec<_>>()
                } else {
                    vec![(lead, None)]
                }
            })
            .collect();

        let best = items
            .par_iter()
            .map(|&(lead, second)| {
                let mut start = self.gen.row(lead).to_vec();
                let mut level = lead + 1;
                if let Some(a) = second {
                    add_assign(f, &mut start, &multiples[level][a.index() as usize]);
                    level += 1;
                }
                let mut scratch = vec![vec![Elem::ZERO; n]; k];
                let mut best = n + 1;
                min_weight_below(f, &start, level, &multiples, &mut scratch, &mut best);
                best
            })
            .min()
            .unwrap_or(n + 1);
        Ok(best)
    }

    /// Whether every k-subset of generator columns is nonsingular.
    /// Fails when C(n, k) exceeds `budget`.
    pub fn all_column_subsets_nonsingular(&self, budget: u64) -> Result<bool> {
        let (n, k) = (self.n(), self.k());
        let needed = binomial(n, k);
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let subsets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
        Ok(subsets.par_iter().all(|cols| self.gen.select_columns(cols).rank() == k))
    }

    /// MDS verdict by enumeration when q^k fits the budget, otherwise by
    /// column subsets.
    pub fn is_mds(&self, budget: u64) -> Result<MdsVerdict> {
        let singleton = self.n() - self.k() + 1;
        match self.minimum_distance(budget) {
            Ok(d) => Ok(MdsVerdict {
                is_mds: d == singleton,
                route: MdsRoute::Enumeration,
                min_distance: Some(d),
            }),
            Err(Error::BudgetExceeded { needed: enum_needed, .. }) => {
                match self.all_column_subsets_nonsingular(budget) {
                    Ok(is_mds) => Ok(MdsVerdict {
                        is_mds,
                        route: MdsRoute::ColumnSubsets,
                        min_distance: None,
                    }),
                    Err(Error::BudgetExceeded { needed, budget }) => {
                        Err(Error::BudgetExceeded { needed: needed.min(enum_needed), budget })
                    }
                    Err(e) => Err(e),
                }
            }
            Err(e) => Err(e),
        }
    }

    /// Runs both MDS routes and fails if they disagree. Returns the minimum
    /// distance and the common verdict.
    pub fn mds_cross_check(&self, budget: u64) -> Result<(usize, bool)> {
        let d = self.minimum_distance(budget)?;
        let by_distance = d == self.n() - self.k() + 1;
        let by_columns = self.all_column_subsets_nonsingular(budget)?;
        if by_distance != by_columns {
            return Err(Error::OracleDisagreement(format!(
                "minimum distance {d} gives MDS = {by_distance}, column subsets give {by_columns}"
            )));
        }
        Ok((d, by_distance))
    }

    pub fn verdict(&self, budget: u64) -> Result<CodeVerdict> {
        let hull_dimension = self.hull_dimension();
        let mds = self.is_mds(budget)?;
        Ok(CodeVerdict {
            n: self.n(),
            k: self.k(),
            hull_dimension,
            is_lcd: hull_dimension == 0,
            min_distance: mds.min_distance,
            mds_route: mds.route,
            is_mds: mds.is_mds,
        })
    }
}

fn add_assign(f: &Field, acc: &mut [Elem], v: &[Elem]) {
    for (a, &b) in acc.iter_mut().zip(v) {
        *a = f.add(*a, b);
    }
}

fn min_weight_below(
    f: &Field,
    partial: &[Elem],
    level: usize,
    multiples: &[Vec<Vec<Elem>>],
    scratch: &mut [Vec<Elem>],
    best: &mut usize,
) {
    let k = multiples.len();
    if level == k {
        *best = (*best).min(partial.iter().filter(|x| !x.is_zero()).count());
        return;
    }
    if level + 1 == k {
        for row in &multiples[level] {
            let w = partial.iter().zip(row).filter(|(&a, &b)| !f.add(a, b).is_zero()).count();
            *best = (*best).min(w);
        }
        return;
    }
    let (head, tail) = scratch.split_first_mut().expect("scratch has one buffer per level");
    for row in &multiples[level] {
        for ((h, &a), &b) in head.iter_mut().zip(partial).zip(row) {
            *h = f.add(a, b);
        }
        min_weight_below(f, head, level + 1, multiples, tail, best);
    }
}

fn checked_pow(base: u128, exp: usize) -> u128 {
    (0..exp).try_fold(1u128, |acc, _| acc.checked_mul(base)).unwrap_or(u128::MAX)
}

/// C(n, k) as an exact integer, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k)
        .try_fold(1u128, |acc, i| Some(acc.checked_mul((n - i) as u128)? / (i as u128 + 1)))
        .unwrap_or(u128::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(f: &Field, rows: &[Vec<u32>]) -> LinearCode {
        LinearCode::from_indices(f, rows).unwrap()
    }

    fn gf5() -> Field {
        Field::new(5, 1).unwrap()
    }

    #[test]
    fn dual_examples() {
        let f = gf5();
        let full = code(&f, &[vec![1, 0], vec![0, 1]]);
        assert_eq!(full.dual().k(), 0);
        assert_eq!(full.dual().n(), 2);
        let line = code(&f, &[vec![1, 1]]);
        assert!(line.dual().same_code(&code(&f, &[vec![1, 4]])));
    }

    #[test]
    fn zero_code_dual_is_full_space() {
        let f = gf5();
        let zero = code(&f, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).dual();
        assert_eq!(zero.k(), 0);
        assert_eq!(zero.dual().k(), 3);
        assert_eq!(zero.hull_dimension(), 0);
        assert_eq!(zero.minimum_distance(10).unwrap(), 4);
    }

    #[test]
    fn rank_deficient_generator_rejected() {
        let f = gf5();
        assert_eq!(
            LinearCode::from_indices(&f, &[vec![2, 4], vec![1, 2]]).unwrap_err(),
            Error::RankDeficient { rank: 1, rows: 2 }
        );
    }

    #[test]
    fn intersections() {
        let f = gf5();
        let c = code(&f, &[vec![1, 2, 3], vec![0, 1, 4]]);
        assert_eq!(c.intersection_dim(&c).unwrap(), 2);
        let x = code(&f, &[vec![1, 0]]);
        let y = code(&f, &[vec![0, 1]]);
        assert_eq!(x.intersection_dim(&y).unwrap(), 0);
        assert_eq!(
            x.intersection_dim(&c).unwrap_err(),
            Error::LengthMismatch { left: 2, right: 3 }
        );
    }

    #[test]
    fn hull_and_lcd() {
        let f = gf5();
        let self_orth = code(&f, &[vec![1, 2]]);
        assert_eq!(self_orth.hull_dimension(), 1);
        assert!(!self_orth.is_lcd());
        let lcd = code(&f, &[vec![1, 1]]);
        assert_eq!(lcd.hull_dimension(), 0);
        assert!(lcd.is_lcd());
        assert_eq!(self_orth.hull_dimension(), self_orth.dual().hull_dimension());
    }

    #[test]
    fn distances() {
        let f = gf5();
        assert_eq!(code(&f, &[vec![1, 1, 1]]).minimum_distance(100).unwrap(), 3);
        assert_eq!(code(&f, &[vec![1, 0], vec![0, 1]]).minimum_distance(100).unwrap(), 1);
        let rs = code(&f, &[vec![1, 1, 1, 1], vec![0, 1, 2, 3]]);
        assert_eq!(rs.minimum_distance(DEFAULT_DISTANCE_BUDGET).unwrap(), 3);
        assert_eq!(
            rs.minimum_distance(24).unwrap_err(),
            Error::BudgetExceeded { needed: 25, budget: 24 }
        );
    }

    #[test]
    fn mds_routes() {
        let f = gf5();
        let rs = code(&f, &[vec![1, 1, 1, 1], vec![0, 1, 2, 3]]);
        assert_eq!(rs.mds_cross_check(1000).unwrap(), (3, true));
        let v = rs.is_mds(1000).unwrap();
        assert_eq!(
            v,
            MdsVerdict { is_mds: true, route: MdsRoute::Enumeration, min_distance: Some(3) }
        );
        let v = rs.is_mds(10).unwrap();
        assert_eq!(
            v,
            MdsVerdict { is_mds: true, route: MdsRoute::ColumnSubsets, min_distance: None }
        );
        assert!(matches!(rs.is_mds(5), Err(Error::BudgetExceeded { needed: 6, .. })));

        let not_mds = code(&f, &[vec![1, 1, 0], vec![0, 0, 1]]);
        assert_eq!(not_mds.mds_cross_check(1000).unwrap(), (1, false));
        assert!(!not_mds.is_mds(1000).unwrap().is_mds);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(14, 7), 3432);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 4), 0);
    }
}
