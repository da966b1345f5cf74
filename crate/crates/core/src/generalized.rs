//! Generalized open sets: the membership predicates, their families and
//! closed duals, and the closure/interior operators they induce.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::space::FiniteSpace;
use crate::subset::{all_subsets, PointSubset};

/// Openness notions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Open,
    Delta,
    RegularOpen,
    Semi,
    Alpha,
    AOpen,
    BOpen,
    EOpen,
    Feebly,
}

impl Variant {
    pub const ALL: [Variant; 9] = [
        Variant::Open,
        Variant::Delta,
        Variant::RegularOpen,
        Variant::Semi,
        Variant::Alpha,
        Variant::AOpen,
        Variant::BOpen,
        Variant::EOpen,
        Variant::Feebly,
    ];

    /// Family symbol, e.g. `aO` for the a-open family.
    pub fn symbol(self) -> &'static str {
        match self {
            Variant::Open => "O",
            Variant::Delta => "deltaO",
            Variant::RegularOpen => "RO",
            Variant::Semi => "SO",
            Variant::Alpha => "alphaO",
            Variant::AOpen => "aO",
            Variant::BOpen => "BO",
            Variant::EOpen => "eO",
            Variant::Feebly => "FO",
        }
    }

    /// Symbol of the closed-dual family, e.g. `aC`.
    pub fn closed_symbol(self) -> &'static str {
        match self {
            Variant::Open => "C",
            Variant::Delta => "deltaC",
            Variant::RegularOpen => "RC",
            Variant::Semi => "SC",
            Variant::Alpha => "alphaC",
            Variant::AOpen => "aC",
            Variant::BOpen => "BC",
            Variant::EOpen => "eC",
            Variant::Feebly => "FC",
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.symbol().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown variant `{s}`")))
    }
}

/// Evaluates the defining containment of `v` for `a`.
pub fn is_variant_open(space: &FiniteSpace, v: Variant, a: PointSubset) -> bool {
    if let Some(family) = space.cache.variant_open[v.index()].get() {
        return family.contains(a);
    }
    evaluate(space, v, a)
}

fn evaluate(space: &FiniteSpace, v: Variant, a: PointSubset) -> bool {
    let int = |s| space.interior(s);
    let cl = |s| space.closure(s);
    match v {
        Variant::Open => space.is_open(a),
        Variant::Delta => space.delta_interior(a) == a,
        Variant::RegularOpen => int(cl(a)) == a,
        Variant::Semi => a.is_subset(cl(int(a))),
        Variant::Alpha => a.is_subset(int(cl(int(a)))),
        Variant::AOpen => a.is_subset(int(cl(space.delta_interior(a)))),
        Variant::BOpen => a.is_subset(cl(int(a)).union(int(cl(a)))),
        Variant::EOpen => a.is_subset(cl(space.delta_interior(a)).union(int(space.delta_closure(a)))),
        Variant::Feebly => space.opens().iter().any(|&u| {
            u.is_subset(a)
                && a.is_subset(
                    variant_closure(space, Variant::Semi, u).expect("semi-closed sets are intersection-stable"),
                )
        }),
    }
}

/// All subsets satisfying `v`, memoized per space.
pub fn variant_open_family(space: &FiniteSpace, v: Variant) -> &SetFamily {
    space.cache.variant_open[v.index()].get_or_init(|| match v {
        Variant::Open => space.opens().clone(),
        Variant::RegularOpen => space.regular_open_family().clone(),
        _ => SetFamily::filter_power_set(space.n(), |a| evaluate(space, v, a)),
    })
}

/// Complements of the `v`-open family.
pub fn variant_closed_family(space: &FiniteSpace, v: Variant) -> &SetFamily {
    space.cache.variant_closed[v.index()].get_or_init(|| variant_open_family(space, v).complements())
}

pub fn is_variant_closed(space: &FiniteSpace, v: Variant, a: PointSubset) -> bool {
    variant_closed_family(space, v).contains(a)
}

/// Intersection of every `v`-closed superset of `a`.
///
/// Fails with [`Error::ClosureUnstable`] if that intersection is not itself
/// `v`-closed, i.e. when "smallest closed superset" does not exist for `v`.
pub fn variant_closure(space: &FiniteSpace, v: Variant, a: PointSubset) -> Result<PointSubset> {
    let closed = variant_closed_family(space, v);
    let cl = closed
        .iter()
        .filter(|c| a.is_subset(**c))
        .fold(space.full(), |acc, &c| acc.intersection(c));
    if closed.contains(cl) {
        Ok(cl)
    } else {
        Err(Error::ClosureUnstable {
            variant: v.symbol().to_string(),
            set: space.format_set(a),
        })
    }
}

/// Union of every `v`-open subset of `a`.
pub fn variant_interior(space: &FiniteSpace, v: Variant, a: PointSubset) -> Result<PointSubset> {
    let open = variant_open_family(space, v);
    let int = open
        .iter()
        .filter(|u| u.is_subset(a))
        .fold(PointSubset::EMPTY, |acc, &u| acc.union(u));
    if open.contains(int) {
        Ok(int)
    } else {
        Err(Error::ClosureUnstable {
            variant: v.symbol().to_string(),
            set: space.format_set(a),
        })
    }
}

/// Semi-closure.
pub fn semi_closure(space: &FiniteSpace, a: PointSubset) -> PointSubset {
    variant_closure(space, Variant::Semi, a).expect("semi-closed sets are intersection-stable")
}

/// a-closure.
pub fn a_closure(space: &FiniteSpace, a: PointSubset) -> PointSubset {
    variant_closure(space, Variant::AOpen, a).expect("a-closed sets are intersection-stable")
}

/// a-interior.
pub fn a_interior(space: &FiniteSpace, a: PointSubset) -> PointSubset {
    variant_interior(space, Variant::AOpen, a).expect("a-open sets are union-stable")
}

/// e-closure.
pub fn e_closure(space: &FiniteSpace, a: PointSubset) -> PointSubset {
    variant_closure(space, Variant::EOpen, a).expect("e-closed sets are intersection-stable")
}

/// The a-closure of every subset, indexed by bit pattern.
pub fn a_closure_table(space: &FiniteSpace) -> Vec<PointSubset> {
    all_subsets(space.n()).map(|a| a_closure(space, a)).collect()
}
