//! Slow reference implementations written directly from the definitions,
//! over raw `u32` bitmasks. Nothing here calls into the library's operators.

#![allow(dead_code)]

use finitop::{FiniteSpace, LCVariant, PointSubset, Variant};

pub type Family = Vec<u32>;

pub struct Naive {
    pub n: usize,
    pub full: u32,
    pub opens: Family,
}

fn subset(a: u32, b: u32) -> bool {
    a & !b == 0
}

/// Every topology on `n` points, found by testing each family of subsets
/// that contains ∅ and X for closure under pairwise ∪ and ∩.
pub fn all_topologies(n: usize) -> Vec<Family> {
    assert!(n <= 4);
    let full = (1u32 << n) - 1;
    let middle: Vec<u32> = (1..full).collect();
    let mut out = Vec::new();
    for pick in 0u64..1 << middle.len() {
        let mut fam = vec![0, full];
        fam.extend((0..middle.len()).filter(|i| pick >> i & 1 == 1).map(|i| middle[i]));
        let closed = fam
            .iter()
            .all(|&u| fam.iter().all(|&v| fam.contains(&(u | v)) && fam.contains(&(u & v))));
        if closed {
            fam.sort();
            out.push(fam);
        }
    }
    out
}

pub fn to_space(n: usize, opens: &[u32]) -> FiniteSpace {
    let names = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let sets: Vec<PointSubset> = opens.iter().map(|&u| PointSubset::from_bits(u as u16)).collect();
    FiniteSpace::new(names, &sets).unwrap()
}

pub fn of_space(space: &FiniteSpace) -> Naive {
    Naive::new(space.n(), space.opens().iter().map(|s| s.bits() as u32).collect())
}

pub fn bits(family: &finitop::SetFamily) -> Family {
    let mut v: Family = family.iter().map(|s| s.bits() as u32).collect();
    v.sort();
    v
}

impl Naive {
    pub fn new(n: usize, mut opens: Family) -> Self {
        opens.sort();
        Naive {
            n,
            full: (1 << n) - 1,
            opens,
        }
    }

    pub fn all(&self) -> impl Iterator<Item = u32> + Clone {
        0..=self.full
    }

    fn co(&self, a: u32) -> u32 {
        self.full & !a
    }

    /// Union of the members of `fam` inside `a`.
    fn inner(&self, fam: &[u32], a: u32) -> u32 {
        fam.iter().filter(|&&u| subset(u, a)).fold(0, |x, &u| x | u)
    }

    /// Intersection of the complements of `fam` members that contain `a`.
    fn outer(&self, fam: &[u32], a: u32) -> u32 {
        fam.iter()
            .map(|&u| self.co(u))
            .filter(|&c| subset(a, c))
            .fold(self.full, |x, c| x & c)
    }

    pub fn int(&self, a: u32) -> u32 {
        self.inner(&self.opens, a)
    }

    pub fn cl(&self, a: u32) -> u32 {
        self.outer(&self.opens, a)
    }

    pub fn regular_opens(&self) -> Family {
        self.opens
            .iter()
            .copied()
            .filter(|&u| self.int(self.cl(u)) == u)
            .collect()
    }

    pub fn dint(&self, a: u32) -> u32 {
        self.inner(&self.regular_opens(), a)
    }

    pub fn dcl(&self, a: u32) -> u32 {
        self.co(self.dint(self.co(a)))
    }

    fn filter(&self, pred: impl Fn(u32) -> bool) -> Family {
        self.all().filter(|&a| pred(a)).collect()
    }

    pub fn semi_opens(&self) -> Family {
        self.filter(|a| subset(a, self.cl(self.int(a))))
    }

    /// Least semi-closed superset, as the intersection of all semi-closed supersets.
    pub fn scl(&self, a: u32) -> u32 {
        self.outer(&self.semi_opens(), a)
    }

    pub fn family(&self, v: Variant) -> Family {
        match v {
            Variant::Open => self.opens.clone(),
            Variant::RegularOpen => self.regular_opens(),
            Variant::Delta => self.filter(|a| self.dint(a) == a),
            Variant::Semi => self.semi_opens(),
            Variant::Alpha => self.filter(|a| subset(a, self.int(self.cl(self.int(a))))),
            Variant::AOpen => self.filter(|a| subset(a, self.int(self.cl(self.dint(a))))),
            Variant::BOpen => self.filter(|a| subset(a, self.cl(self.int(a)) | self.int(self.cl(a)))),
            Variant::EOpen => self.filter(|a| subset(a, self.cl(self.dint(a)) | self.int(self.dcl(a)))),
            Variant::Feebly => self.filter(|a| self.opens.iter().any(|&u| subset(u, a) && subset(a, self.scl(u)))),
        }
    }

    pub fn closed_family(&self, v: Variant) -> Family {
        let mut c: Family = self.family(v).iter().map(|&u| self.co(u)).collect();
        c.sort();
        c
    }

    /// Least `v`-closed superset by scanning every closed superset for one
    /// contained in all the others.
    pub fn least_closed_superset(&self, v: Variant, a: u32) -> Option<u32> {
        let sup: Vec<u32> = self.closed_family(v).into_iter().filter(|&c| subset(a, c)).collect();
        sup.iter().copied().find(|&c| sup.iter().all(|&d| subset(c, d)))
    }

    pub fn lc(&self, l: LCVariant) -> Family {
        let v = l.variant();
        let (opens, closed) = (self.family(v), self.closed_family(v));
        self.filter(|a| opens.iter().any(|&u| closed.iter().any(|&f| u & f == a)))
    }
}
