use crate::subset::{all_subsets, PointSubset};

/// A deduplicated family of subsets of an `n`-point ground set, kept in
/// canonical set order, with constant-time membership.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    members: Vec<PointSubset>,
    index: Vec<u64>,
}

impl SetFamily {
    /// Builds a family from arbitrary members; duplicates collapse.
    pub fn new<I: IntoIterator<Item = PointSubset>>(n: usize, members: I) -> Self {
        let mut index = vec![0u64; bitmap_words(n)];
        let mut list = Vec::new();
        for s in members {
            debug_assert!(s.fits(n));
            let b = s.bits() as usize;
            if index[b >> 6] >> (b & 63) & 1 == 0 {
                index[b >> 6] |= 1 << (b & 63);
                list.push(s);
            }
        }
        list.sort_unstable();
        SetFamily {
            n,
            members: list,
            index,
        }
    }

    /// Every subset of the ground set (the power set).
    pub fn power_set(n: usize) -> Self {
        Self::new(n, all_subsets(n))
    }

    /// Keeps the subsets of the ground set satisfying `pred`.
    pub fn filter_power_set(n: usize, mut pred: impl FnMut(PointSubset) -> bool) -> Self {
        Self::new(n, all_subsets(n).filter(|&s| pred(s)))
    }

    #[inline]
    pub fn contains(&self, s: PointSubset) -> bool {
        let b = s.bits() as usize;
        s.fits(self.n) && self.index[b >> 6] >> (b & 63) & 1 == 1
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[PointSubset] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PointSubset> {
        self.members.iter()
    }

    /// Family of complements, in canonical order.
    pub fn complements(&self) -> Self {
        Self::new(self.n, self.members.iter().map(|s| s.complement(self.n)))
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.members.iter().all(|&s| other.contains(s))
    }

    /// First member (in this family's order) not in `other`.
    pub fn first_outside(&self, other: &SetFamily) -> Option<PointSubset> {
        self.members.iter().copied().find(|&s| !other.contains(s))
    }

    pub fn is_power_set(&self) -> bool {
        self.members.len() == 1 << self.n
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a PointSubset;
    type IntoIter = std::slice::Iter<'a, PointSubset>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl std::fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

fn bitmap_words(n: usize) -> usize {
    (1usize << n).div_ceil(64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedup_and_membership() {
        let s = PointSubset::from_bits;
        let fam = SetFamily::new(3, [s(0b011), s(0b001), s(0b011), s(0)]);
        assert_eq!(fam.len(), 3);
        assert!(fam.contains(s(0b011)));
        assert!(!fam.contains(s(0b010)));
        assert!(!fam.contains(s(0b1000)));
        assert_eq!(fam.members(), &[s(0), s(0b001), s(0b011)]);
    }

    #[test]
    fn equal_families_compare_equal_regardless_of_input_order() {
        let s = PointSubset::from_bits;
        let a = SetFamily::new(4, [s(1), s(6), s(15), s(0)]);
        let b = SetFamily::new(4, [s(15), s(0), s(6), s(1), s(6)]);
        assert_eq!(a, b);
    }

    #[test]
    fn power_set_sizes() {
        for n in 0..=5 {
            assert_eq!(SetFamily::power_set(n).len(), 1 << n);
            assert!(SetFamily::power_set(n).is_power_set());
        }
    }
}
