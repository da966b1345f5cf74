use std::cmp::Ordering;
use std::fmt;

/// Largest ground set supported; one subset fits in a `u16`.
pub const MAX_POINTS: usize = 16;

/// A subset of a ground set of at most [`MAX_POINTS`] points, bit `i` set iff
/// point `i` is a member.
///
/// The ordering is the canonical set order used everywhere a family is listed:
/// smaller cardinality first, then the set containing the earliest point at
/// which the two differ.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PointSubset(u16);

impl PointSubset {
    pub const EMPTY: PointSubset = PointSubset(0);

    #[inline]
    pub const fn from_bits(bits: u16) -> Self {
        PointSubset(bits)
    }

    #[inline]
    pub const fn bits(self) -> u16 {
        self.0
    }

    /// The whole ground set on `n` points.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_POINTS);
        PointSubset(((1u32 << n) - 1) as u16)
    }

    #[inline]
    pub fn singleton(point: usize) -> Self {
        PointSubset(1 << point)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        points.into_iter().fold(Self::EMPTY, |acc, p| acc.insert(p))
    }

    #[inline]
    pub fn insert(self, point: usize) -> Self {
        PointSubset(self.0 | (1 << point))
    }

    #[inline]
    pub fn contains(self, point: usize) -> bool {
        self.0 >> point & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        PointSubset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        PointSubset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        PointSubset(self.0 & !other.0)
    }

    /// Complement relative to the ground set on `n` points.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        PointSubset(!self.0 & Self::full(n).0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// True when no bit at or above position `n` is set.
    #[inline]
    pub fn fits(self, n: usize) -> bool {
        self.is_subset(Self::full(n))
    }

    /// Member point indices in ascending order.
    pub fn points(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let p = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(p)
            }
        })
    }

    /// Sort key realizing the canonical order as a plain integer comparison.
    #[inline]
    pub fn canonical_key(self) -> u32 {
        ((self.0.count_ones()) << 16) | u32::from(!self.0.reverse_bits())
    }

    /// Image of this subset under a point map `perm[old] = new`.
    pub fn permute(self, perm: &[usize]) -> Self {
        self.points().fold(Self::EMPTY, |acc, p| acc.insert(perm[p]))
    }
}

impl Ord for PointSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl PartialOrd for PointSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Iterates all `2^n` subsets of an `n`-point ground set in bit-pattern order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = PointSubset> + Clone {
    (0..1u32 << n).map(|b| PointSubset(b as u16))
}

/// Iterates every subset of `set` (including the empty set and `set` itself).
pub fn subsets_of(set: PointSubset) -> impl Iterator<Item = PointSubset> {
    let full = set.0;
    let mut next = Some(0u16);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == full {
            None
        } else {
            Some(cur.wrapping_sub(full) & full)
        };
        Some(PointSubset(cur))
    })
}
