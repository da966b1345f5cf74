//! Specialization preorders and the labeled enumeration of finite topologies.
//!
//! Convention: `x ≤ y` iff every open set containing `x` contains `y`, so the
//! open sets are exactly the up-sets and the row of `x` is its minimal open
//! neighbourhood.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::space::{default_point_names, FiniteSpace};
use crate::subset::{subsets_of, PointSubset};

/// Largest point count for labeled enumeration.
pub const MAX_LABELED: usize = 6;
/// Largest point count for enumeration up to homeomorphism.
pub const MAX_UP_TO_ISO: usize = 7;

/// A reflexive, transitive relation stored as one up-set row per point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    up: Vec<PointSubset>,
}

impl Preorder {
    /// Checks reflexivity and transitivity of `up[x] = {y : x ≤ y}`.
    pub fn new(up: Vec<PointSubset>) -> Result<Self> {
        let n = up.len();
        if n == 0 || n > crate::subset::MAX_POINTS {
            return Err(Error::PointCount(n));
        }
        for (x, row) in up.iter().enumerate() {
            if !row.fits(n) || !row.contains(x) {
                return Err(Error::Precondition(format!("row {x} is not reflexive")));
            }
            if row.points().any(|y| !up[y].is_subset(*row)) {
                return Err(Error::Precondition(format!("row {x} is not transitive")));
            }
        }
        Ok(Preorder { up })
    }

    /// The specialization preorder of a space.
    pub fn of_space(space: &FiniteSpace) -> Self {
        Preorder {
            up: (0..space.n()).map(|x| space.min_open_nbhd(x)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.up.len()
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn rows(&self) -> &[PointSubset] {
        &self.up
    }

    /// Space on points `a, b, ...` whose opens are the up-sets.
    pub fn to_space(&self) -> FiniteSpace {
        FiniteSpace::from_neighbourhoods(default_point_names(self.n()), self.up.clone())
    }
}

fn is_up_closed(rows: &[PointSubset], s: PointSubset) -> bool {
    s.points().all(|y| rows[y].is_subset(s))
}

fn is_down_closed(rows: &[PointSubset], s: PointSubset) -> bool {
    rows.iter()
        .enumerate()
        .all(|(z, row)| s.contains(z) || row.is_disjoint(s))
}

/// Every preorder on `k + 1` points restricting to `rows` on the first `k`.
///
/// The new point picks an up-closed set `U` above it and a down-closed set
/// `D` below it with `d ≤ u` for all `d ∈ D`, `u ∈ U`. Order: `D` ascending by
/// bit pattern, then `U` ascending.
fn extensions(rows: &[PointSubset]) -> impl Iterator<Item = Vec<PointSubset>> + '_ {
    let k = rows.len();
    let all = PointSubset::full(k);
    let ups: Vec<PointSubset> = sorted_by_bits(subsets_of(all))
        .filter(|&u| is_up_closed(rows, u))
        .collect();
    let downs: Vec<PointSubset> = sorted_by_bits(subsets_of(all))
        .filter(|&d| is_down_closed(rows, d))
        .collect();
    downs.into_iter().flat_map(move |d| {
        let ups = ups.clone();
        ups.into_iter()
            .filter(move |u| d.points().all(|x| u.is_subset(rows[x])))
            .map(move |u| {
                let mut child: Vec<PointSubset> = rows
                    .iter()
                    .enumerate()
                    .map(|(x, &row)| if d.contains(x) { row.insert(k) } else { row })
                    .collect();
                child.push(u.insert(k));
                child
            })
    })
}

fn sorted_by_bits(it: impl Iterator<Item = PointSubset>) -> impl Iterator<Item = PointSubset> {
    let mut v: Vec<PointSubset> = it.collect();
    v.sort_by_key(|s| s.bits());
    v.into_iter()
}

fn check_bound(n: usize, limit: usize) -> Result<()> {
    if n == 0 || n > limit {
        Err(Error::BoundExceeded { n, limit })
    } else {
        Ok(())
    }
}

fn preorders_unchecked(n: usize) -> Vec<Vec<PointSubset>> {
    if n == 1 {
        return vec![vec![PointSubset::singleton(0)]];
    }
    let parents = preorders_unchecked(n - 1);
    parents
        .par_iter()
        .flat_map_iter(|p| extensions(p).collect::<Vec<_>>())
        .collect()
}

/// All preorders on `n` points in the fixed deterministic enumeration order.
pub fn labeled_preorders(n: usize) -> Result<Vec<Preorder>> {
    check_bound(n, MAX_LABELED)?;
    Ok(preorders_unchecked(n).into_iter().map(|up| Preorder { up }).collect())
}

/// One preorder per homeomorphism class, namely those whose space is its own
/// canonical form, in labeled enumeration order.
pub fn iso_class_preorders(n: usize) -> Result<Vec<Preorder>> {
    check_bound(n, MAX_UP_TO_ISO)?;
    let keep = |up: &Vec<PointSubset>| super::canon::is_canonical_rows(up);
    if n == 1 {
        return Ok(vec![Preorder {
            up: vec![PointSubset::singleton(0)],
        }]);
    }
    let parents = preorders_unchecked(n - 1);
    Ok(parents
        .par_iter()
        .flat_map_iter(|p| extensions(p).filter(keep).collect::<Vec<_>>())
        .map(|up| Preorder { up })
        .collect())
}

/// Finite topologies on `n` points: every labeled one (`n ≤ 6`), or one per
/// homeomorphism class (`n ≤ 7`).
pub fn enumerate_topologies(n: usize, up_to_iso: bool) -> Result<impl Iterator<Item = FiniteSpace>> {
    let preorders = if up_to_iso {
        iso_class_preorders(n)?
    } else {
        labeled_preorders(n)?
    };
    Ok(preorders.into_iter().map(|p| p.to_space()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| labeled_preorders(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 4, 29, 355, 6942]);
    }

    #[test]
    fn iso_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| iso_class_preorders(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 3, 9, 33, 139]);
    }

    #[test]
    fn bounds() {
        assert_eq!(
            labeled_preorders(7).unwrap_err(),
            Error::BoundExceeded { n: 7, limit: 6 }
        );
        assert_eq!(
            iso_class_preorders(8).unwrap_err(),
            Error::BoundExceeded { n: 8, limit: 7 }
        );
        assert!(labeled_preorders(0).is_err());
    }

    #[test]
    fn enumerated_rows_are_preorders() {
        for p in labeled_preorders(4).unwrap() {
            Preorder::new(p.rows().to_vec()).unwrap();
        }
    }

    #[test]
    fn two_point_order() {
        let spaces: Vec<FiniteSpace> = enumerate_topologies(2, false).unwrap().collect();
        let sizes: Vec<usize> = spaces.iter().map(|s| s.opens().len()).collect();
        assert_eq!(sizes, vec![4, 3, 3, 2]);
        assert_eq!(spaces[1], FiniteSpace::sierpinski());
    }

    #[test]
    fn preorder_round_trips_through_space() {
        for p in labeled_preorders(3).unwrap() {
            assert_eq!(Preorder::of_space(&p.to_space()), p);
        }
    }

    #[test]
    fn rejects_non_preorders() {
        let s = PointSubset::from_bits;
        assert!(Preorder::new(vec![s(0b10), s(0b10)]).is_err());
        assert!(Preorder::new(vec![s(0b011), s(0b110), s(0b100)]).is_err());
        assert!(Preorder::new(vec![s(0b111), s(0b110), s(0b100)]).is_ok());
    }
}
