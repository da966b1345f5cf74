//! Finite topological spaces and the four primitive operators.
//!
//! A finite topology is determined by the minimal open neighbourhood `U_x` of
//! each point, so interior and closure are answered pointwise:
//! `int(A) = {x : U_x ⊆ A}` and `cl(A) = {x : U_x ∩ A ≠ ∅}`. The δ-operators
//! use the same trick with the minimal regular-open neighbourhoods, which is
//! valid because regular open sets are closed under finite intersection.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::subset::{all_subsets, PointSubset, MAX_POINTS};

#[derive(Debug, Clone, Default)]
pub(crate) struct SpaceCache {
    pub(crate) regular_open: OnceLock<SetFamily>,
    pub(crate) delta_nbhd: OnceLock<Vec<PointSubset>>,
    pub(crate) variant_open: [OnceLock<SetFamily>; 9],
    pub(crate) variant_closed: [OnceLock<SetFamily>; 9],
    pub(crate) lc: [OnceLock<SetFamily>; 6],
}

/// A topology on at most 16 named points.
///
/// Immutable once built. Derived families are memoized lazily; concurrent
/// first queries may compute a family twice but always agree.
#[derive(Debug, Clone)]
pub struct FiniteSpace {
    names: Vec<String>,
    opens: SetFamily,
    min_nbhd: Vec<PointSubset>,
    pub(crate) cache: SpaceCache,
}

impl PartialEq for FiniteSpace {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.opens == other.opens
    }
}

impl Eq for FiniteSpace {}

/// Default labels `a`, `b`, `c`, ... for `n` points.
pub fn default_point_names(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

fn check_names(names: &[String]) -> Result<()> {
    if names.is_empty() || names.len() > MAX_POINTS {
        return Err(Error::PointCount(names.len()));
    }
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(Error::InvalidPointName(name.clone()));
        }
        if names[..i].contains(name) {
            return Err(Error::DuplicatePoint(name.clone()));
        }
    }
    Ok(())
}

fn minimal_neighbourhoods(n: usize, opens: &SetFamily) -> Vec<PointSubset> {
    let full = PointSubset::full(n);
    (0..n)
        .map(|x| {
            opens
                .iter()
                .filter(|u| u.contains(x))
                .fold(full, |acc, &u| acc.intersection(u))
        })
        .collect()
}

fn is_up_set(nbhd: &[PointSubset], s: PointSubset) -> bool {
    s.points().all(|x| nbhd[x].is_subset(s))
}

impl FiniteSpace {
    /// Validates `opens` (bit patterns over `names`) as a topology.
    ///
    /// The empty set and the whole set are added when absent. Listing the same
    /// set twice is an error, as is any pair whose union or intersection is
    /// missing.
    pub fn new(names: Vec<String>, opens: &[PointSubset]) -> Result<Self> {
        check_names(&names)?;
        let n = names.len();
        for &u in opens {
            if !u.fits(n) {
                return Err(Error::SubsetOutOfRange(u32::from(u.bits())));
            }
        }
        for (i, u) in opens.iter().enumerate() {
            if opens[..i].contains(u) {
                return Err(Error::DuplicateOpen(format_set_with(&names, *u)));
            }
        }
        let family = SetFamily::new(
            n,
            opens.iter().copied().chain([PointSubset::EMPTY, PointSubset::full(n)]),
        );
        let nbhd = minimal_neighbourhoods(n, &family);
        // Every member is an up-set of the induced specialization preorder, so
        // the family is a topology exactly when it holds all of them.
        let up_sets = all_subsets(n).filter(|&s| is_up_set(&nbhd, s)).count();
        if up_sets != family.len() {
            return Err(closure_violation(&names, &family));
        }
        Ok(FiniteSpace {
            names,
            opens: family,
            min_nbhd: nbhd,
            cache: SpaceCache::default(),
        })
    }

    /// Validates a topology given as lists of point names.
    pub fn from_named<S: AsRef<str>>(names: &[S], opens: &[Vec<S>]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        check_names(&names)?;
        let mut masks = Vec::with_capacity(opens.len());
        for set in opens {
            let mut mask = PointSubset::EMPTY;
            for tok in set {
                let tok = tok.as_ref();
                let p = names
                    .iter()
                    .position(|n| n == tok)
                    .ok_or_else(|| Error::UnknownPoint(tok.to_string()))?;
                mask = mask.insert(p);
            }
            masks.push(mask);
        }
        Self::new(names, &masks)
    }

    /// Builds a space from a family already known to be a topology.
    pub(crate) fn from_topology(names: Vec<String>, opens: SetFamily) -> Self {
        let nbhd = minimal_neighbourhoods(names.len(), &opens);
        debug_assert!(opens.contains(PointSubset::EMPTY));
        debug_assert!(opens.contains(PointSubset::full(names.len())));
        FiniteSpace {
            names,
            opens,
            min_nbhd: nbhd,
            cache: SpaceCache::default(),
        }
    }

    /// The space whose opens are the up-sets of the given minimal
    /// neighbourhoods (which must form a preorder: `x ∈ U_x`, transitive).
    pub(crate) fn from_neighbourhoods(names: Vec<String>, nbhd: Vec<PointSubset>) -> Self {
        let n = names.len();
        let opens = SetFamily::filter_power_set(n, |s| is_up_set(&nbhd, s));
        FiniteSpace {
            names,
            opens,
            min_nbhd: nbhd,
            cache: SpaceCache::default(),
        }
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_neighbourhoods(default_point_names(n), (0..n).map(PointSubset::singleton).collect())
    }

    pub fn indiscrete(n: usize) -> Self {
        Self::from_neighbourhoods(default_point_names(n), vec![PointSubset::full(n); n])
    }

    /// Two points `a`, `b` with `{a}` open.
    pub fn sierpinski() -> Self {
        Self::from_neighbourhoods(
            default_point_names(2),
            vec![PointSubset::singleton(0), PointSubset::full(2)],
        )
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn point_names(&self) -> &[String] {
        &self.names
    }

    pub fn opens(&self) -> &SetFamily {
        &self.opens
    }

    #[inline]
    pub fn full(&self) -> PointSubset {
        PointSubset::full(self.n())
    }

    #[inline]
    pub fn complement(&self, a: PointSubset) -> PointSubset {
        a.complement(self.n())
    }

    #[inline]
    pub fn is_open(&self, a: PointSubset) -> bool {
        self.opens.contains(a)
    }

    #[inline]
    pub fn is_closed(&self, a: PointSubset) -> bool {
        self.opens.contains(self.complement(a))
    }

    /// Smallest open set containing `point`.
    pub fn min_open_nbhd(&self, point: usize) -> PointSubset {
        self.min_nbhd[point]
    }

    pub fn closed_family(&self) -> SetFamily {
        self.opens.complements()
    }

    /// Union of all open subsets of `a`.
    pub fn interior(&self, a: PointSubset) -> PointSubset {
        PointSubset::from_points((0..self.n()).filter(|&x| self.min_nbhd[x].is_subset(a)))
    }

    /// Smallest closed superset of `a`.
    pub fn closure(&self, a: PointSubset) -> PointSubset {
        PointSubset::from_points((0..self.n()).filter(|&x| !self.min_nbhd[x].is_disjoint(a)))
    }

    /// Sets with `int(cl(A)) = A`.
    pub fn regular_open_family(&self) -> &SetFamily {
        self.cache.regular_open.get_or_init(|| {
            self.opens
                .iter()
                .copied()
                .filter(|&u| self.interior(self.closure(u)) == u)
                .collect_family(self.n())
        })
    }

    fn delta_nbhd(&self) -> &[PointSubset] {
        self.cache.delta_nbhd.get_or_init(|| {
            let regular = self.regular_open_family();
            (0..self.n())
                .map(|x| {
                    regular
                        .iter()
                        .filter(|r| r.contains(x))
                        .fold(self.full(), |acc, &r| acc.intersection(r))
                })
                .collect()
        })
    }

    /// Union of all regular open subsets of `a`.
    pub fn delta_interior(&self, a: PointSubset) -> PointSubset {
        let nb = self.delta_nbhd();
        PointSubset::from_points((0..self.n()).filter(|&x| nb[x].is_subset(a)))
    }

    /// `X \ δ-int(X \ a)`.
    pub fn delta_closure(&self, a: PointSubset) -> PointSubset {
        self.complement(self.delta_interior(self.complement(a)))
    }

    /// Classical regularity: each closed set and each point outside it have
    /// disjoint open neighbourhoods. The smallest candidates are `U_x` and the
    /// union of `U_c` over the closed set, so only those need checking.
    pub fn is_regular(&self) -> bool {
        self.opens.iter().all(|&u| {
            let closed = self.complement(u);
            let around = closed
                .points()
                .fold(PointSubset::EMPTY, |acc, c| acc.union(self.min_nbhd[c]));
            u.points().all(|x| self.min_nbhd[x].is_disjoint(around))
        })
    }

    /// Same points, opens relabeled by `perm[old] = new`.
    pub fn permuted(&self, perm: &[usize]) -> FiniteSpace {
        let n = self.n();
        let mut nbhd = vec![PointSubset::EMPTY; n];
        for x in 0..n {
            nbhd[perm[x]] = self.min_nbhd[x].permute(perm);
        }
        FiniteSpace {
            names: self.names.clone(),
            opens: SetFamily::new(n, self.opens.iter().map(|u| u.permute(perm))),
            min_nbhd: nbhd,
            cache: SpaceCache::default(),
        }
    }

    /// The same topology with new point labels.
    pub fn with_names(&self, names: Vec<String>) -> Result<FiniteSpace> {
        check_names(&names)?;
        if names.len() != self.n() {
            return Err(Error::PointCount(names.len()));
        }
        Ok(FiniteSpace::from_topology(names, self.opens.clone()))
    }

    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `{t1,t2,...}` with tokens in declaration order.
    pub fn format_set(&self, a: PointSubset) -> String {
        format_set_with(&self.names, a)
    }

    /// One canonical set per line.
    pub fn format_family(&self, family: &SetFamily) -> String {
        let mut out = String::new();
        for &s in family {
            out.push_str(&self.format_set(s));
            out.push('\n');
        }
        out
    }
}

/// Cartesian product of two subsets, row-major over `right_n` columns.
pub fn product_subset(a: PointSubset, b: PointSubset, right_n: usize) -> PointSubset {
    let mut out = PointSubset::EMPTY;
    for i in a.points() {
        for j in b.points() {
            out = out.insert(i * right_n + j);
        }
    }
    out
}

/// Product topology. Points are `p×q` in row-major order; opens are all
/// unions of boxes `U×V`.
pub fn product_space(left: &FiniteSpace, right: &FiniteSpace) -> Result<FiniteSpace> {
    let (ln, rn) = (left.n(), right.n());
    if ln * rn > MAX_POINTS {
        return Err(Error::ProductTooLarge { left: ln, right: rn });
    }
    let n = ln * rn;
    let mut names = Vec::with_capacity(n);
    for p in left.point_names() {
        for q in right.point_names() {
            names.push(format!("{p}×{q}"));
        }
    }
    let mut seen = vec![false; 1 << n];
    let mut opens = vec![PointSubset::EMPTY];
    seen[0] = true;
    for &u in left.opens() {
        for &v in right.opens() {
            let b = product_subset(u, v, rn);
            for i in 0..opens.len() {
                let t = opens[i].union(b);
                if !seen[t.bits() as usize] {
                    seen[t.bits() as usize] = true;
                    opens.push(t);
                }
            }
        }
    }
    Ok(FiniteSpace::from_topology(names, SetFamily::new(n, opens)))
}

pub(crate) fn format_set_with(names: &[String], a: PointSubset) -> String {
    let mut out = String::from("{");
    for (i, p) in a.points().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(names.get(p).map(String::as_str).unwrap_or("?"));
    }
    out.push('}');
    out
}

fn closure_violation(names: &[String], family: &SetFamily) -> Error {
    let members = family.members();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !family.contains(a.union(b)) {
                return Error::NotUnionClosed(format_set_with(names, a), format_set_with(names, b));
            }
            if !family.contains(a.intersection(b)) {
                return Error::NotIntersectionClosed(format_set_with(names, a), format_set_with(names, b));
            }
        }
    }
    unreachable!("family failed the up-set count but every pair is closed")
}

/// Collects subsets into a canonical family.
pub(crate) trait CollectFamily: Iterator<Item = PointSubset> + Sized {
    fn collect_family(self, n: usize) -> SetFamily {
        SetFamily::new(n, self)
    }
}

impl<I: Iterator<Item = PointSubset>> CollectFamily for I {}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn space(names: &str, opens: &[&str]) -> FiniteSpace {
        let names: Vec<&str> = names.split_whitespace().collect();
        let opens: Vec<Vec<&str>> = opens.iter().map(|o| o.split_whitespace().collect()).collect();
        FiniteSpace::from_named(&names, &opens).unwrap()
    }

    pub fn ex37() -> FiniteSpace {
        space("a b c d", &["a", "b", "a b", "a c d"])
    }

    pub fn ex38() -> FiniteSpace {
        space("a b c d", &["a", "b", "a b", "a c", "a b c", "a b d"])
    }

    pub fn ex39() -> FiniteSpace {
        space("a b c d", &["a", "b", "a b"])
    }

    pub fn a_space() -> FiniteSpace {
        space("a b c d", &["a", "b c d"])
    }

    pub fn set(space: &FiniteSpace, lit: &str) -> PointSubset {
        PointSubset::from_points(lit.split_whitespace().map(|t| space.point_index(t).unwrap()))
    }

    pub fn fam(space: &FiniteSpace, sets: &[&str]) -> SetFamily {
        SetFamily::new(space.n(), sets.iter().map(|s| set(space, s)))
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn validate_example_space() {
        let sp = ex37();
        assert_eq!(sp.opens().len(), 6);
        assert_eq!(sp.opens(), &fam(&sp, &["", "a b c d", "a", "b", "a b", "a c d"]));
    }

    #[test]
    fn validate_one_point() {
        let sp = space("a", &[]);
        assert_eq!(sp.opens().members(), &[PointSubset::EMPTY, PointSubset::full(1)]);
    }

    #[test]
    fn validate_auto_adds_whole_set() {
        let sp = space("a b", &["a", "b"]);
        assert_eq!(sp.opens().len(), 4);
    }

    #[test]
    fn validate_errors() {
        let e = FiniteSpace::from_named(&["a", "a"], &[]).unwrap_err();
        assert_eq!(e, Error::DuplicatePoint("a".into()));
        let e = FiniteSpace::from_named(&["a", "b"], &[vec!["a"], vec!["a"]]).unwrap_err();
        assert_eq!(e, Error::DuplicateOpen("{a}".into()));
        let e = FiniteSpace::from_named(&["a", "b", "c"], &[vec!["a"], vec!["b"]]).unwrap_err();
        assert_eq!(e, Error::NotUnionClosed("{a}".into(), "{b}".into()));
        let e = FiniteSpace::from_named(&["a", "b", "c"], &[vec!["a", "b"], vec!["b", "c"]]).unwrap_err();
        assert_eq!(e, Error::NotIntersectionClosed("{a,b}".into(), "{b,c}".into()));
        let e = FiniteSpace::from_named(&["a"], &[vec!["z"]]).unwrap_err();
        assert_eq!(e, Error::UnknownPoint("z".into()));
        let none: [&str; 0] = [];
        assert_eq!(FiniteSpace::from_named(&none, &[]).unwrap_err(), Error::PointCount(0));
        let many = default_point_names(17);
        assert_eq!(FiniteSpace::new(many, &[]).unwrap_err(), Error::PointCount(17));
    }

    #[test]
    fn interior_examples() {
        let sp = ex37();
        assert_eq!(sp.interior(set(&sp, "a c")), set(&sp, "a"));
        assert_eq!(sp.interior(sp.full()), sp.full());
        let sp = ex39();
        assert_eq!(sp.interior(set(&sp, "c d")), PointSubset::EMPTY);
    }

    #[test]
    fn closure_examples() {
        let sp = ex37();
        assert_eq!(sp.closure(set(&sp, "a")), set(&sp, "a c d"));
        assert_eq!(sp.closure(PointSubset::EMPTY), PointSubset::EMPTY);
        let sp = ex39();
        assert_eq!(sp.closure(set(&sp, "a b")), sp.full());
    }

    #[test]
    fn regular_open_examples() {
        let sp = ex39();
        assert_eq!(sp.regular_open_family(), &fam(&sp, &["", "a", "b", "a b c d"]));
        let sp = FiniteSpace::discrete(2);
        assert!(sp.regular_open_family().is_power_set());
        let sp = ex37();
        assert_eq!(sp.regular_open_family(), &fam(&sp, &["", "b", "a c d", "a b c d"]));
    }

    #[test]
    fn delta_interior_examples() {
        let sp = ex39();
        assert_eq!(sp.delta_interior(set(&sp, "a b c")), set(&sp, "a b"));
        assert_eq!(sp.delta_interior(sp.full()), sp.full());
        let sp = ex37();
        assert_eq!(sp.delta_interior(set(&sp, "a")), PointSubset::EMPTY);
    }

    #[test]
    fn delta_closure_examples() {
        let sp = ex39();
        assert_eq!(sp.delta_closure(set(&sp, "c")), set(&sp, "c d"));
        assert_eq!(sp.delta_closure(sp.full()), sp.full());
        let sp = ex37();
        assert_eq!(sp.delta_closure(set(&sp, "b")), set(&sp, "b"));
    }

    #[test]
    fn regularity_examples() {
        assert!(FiniteSpace::discrete(3).is_regular());
        assert!(a_space().is_regular());
        assert!(!FiniteSpace::sierpinski().is_regular());
        assert!(FiniteSpace::indiscrete(3).is_regular());
    }

    #[test]
    fn product_examples() {
        let d = FiniteSpace::discrete(2);
        let p = product_space(&d, &d).unwrap();
        assert_eq!(p.n(), 4);
        assert!(p.opens().is_power_set());

        let one = FiniteSpace::discrete(1);
        for y in [ex37(), ex38(), FiniteSpace::sierpinski()] {
            let p = product_space(&one, &y).unwrap();
            assert_eq!(p.opens(), y.opens());
        }

        let s = FiniteSpace::sierpinski();
        let p = product_space(&s, &s).unwrap();
        // every union of basis boxes, enumerated over subsets of the box list
        let opens = [0b00u32, 0b01, 0b11];
        let boxes: Vec<u32> = opens
            .iter()
            .flat_map(|&u| {
                opens.iter().map(move |&v| {
                    (0..4)
                        .filter(|i| u >> (i / 2) & 1 == 1 && v >> (i % 2) & 1 == 1)
                        .map(|i| 1 << i)
                        .sum()
                })
            })
            .collect();
        let mut unions: Vec<u32> = (0u32..1 << boxes.len())
            .map(|pick| {
                (0..boxes.len())
                    .filter(|k| pick >> k & 1 == 1)
                    .map(|k| boxes[k])
                    .fold(0, |a, b| a | b)
            })
            .collect();
        unions.sort();
        unions.dedup();
        assert_eq!(unions.len(), 6);
        assert_eq!(p.opens().len(), unions.len());
        for u in unions {
            assert!(p.is_open(PointSubset::from_bits(u as u16)));
        }
        assert_eq!(p.point_names()[1], "a×b");

        let big = FiniteSpace::discrete(5);
        assert_eq!(
            product_space(&big, &big).unwrap_err(),
            Error::ProductTooLarge { left: 5, right: 5 }
        );
    }

    #[test]
    fn permuted_preserves_structure() {
        let sp = ex37();
        let q = sp.permuted(&[3, 2, 1, 0]);
        assert_eq!(q.opens().len(), sp.opens().len());
        assert!(q.is_open(PointSubset::from_points([3])));
        assert_eq!(q.min_open_nbhd(3), PointSubset::from_points([3]));
    }
}
