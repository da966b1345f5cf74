//! Counterexample search for membership implications over every labeled
//! space up to a bound.
//!
//! Search order is fixed: point count ascending, then labeled enumeration
//! order, then subsets in canonical set order. Parallel runs use an
//! order-preserving "first match" so their records equal sequential ones.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::generalized::{variant_open_family, Variant};
use crate::lab::preorder::{labeled_preorders, MAX_LABELED};
use crate::local::{lc_family, LCVariant};
use crate::space::FiniteSpace;
use crate::subset::PointSubset;
use crate::text::format_space;

/// A membership predicate on (space, subset).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    Open(Variant),
    Local(LCVariant),
}

impl Predicate {
    pub fn family(self, space: &FiniteSpace) -> &SetFamily {
        match self {
            Predicate::Open(v) => variant_open_family(space, v),
            Predicate::Local(l) => lc_family(space, l),
        }
    }

    pub fn holds(self, space: &FiniteSpace, a: PointSubset) -> bool {
        self.family(space).contains(a)
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Open(v) => v.fmt(f),
            Predicate::Local(l) => l.fmt(f),
        }
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<LCVariant>()
            .map(Predicate::Local)
            .or_else(|_| s.parse::<Variant>().map(Predicate::Open))
            .map_err(|_| Error::Precondition(format!("unknown family `{s}`")))
    }
}

/// "Every subset satisfying `antecedent` satisfies `consequent`."
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClaimSpec {
    pub antecedent: Predicate,
    pub consequent: Predicate,
}

impl ClaimSpec {
    pub fn new(antecedent: Predicate, consequent: Predicate) -> Self {
        ClaimSpec { antecedent, consequent }
    }

    pub fn lc(antecedent: LCVariant, consequent: LCVariant) -> Self {
        Self::new(Predicate::Local(antecedent), Predicate::Local(consequent))
    }

    /// First subset of `space` (canonical order) refuting the claim.
    pub fn first_violation(&self, space: &FiniteSpace) -> Option<PointSubset> {
        let ante = self.antecedent.family(space);
        let cons = self.consequent.family(space);
        ante.first_outside(cons)
    }

    pub fn is_violated_by(&self, space: &FiniteSpace, a: PointSubset) -> bool {
        self.antecedent.holds(space, a) && !self.consequent.holds(space, a)
    }
}

impl fmt::Display for ClaimSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}=>{}", self.antecedent, self.consequent)
    }
}

impl FromStr for ClaimSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, c) = s
            .split_once("=>")
            .ok_or_else(|| Error::Precondition(format!("claim `{s}` must look like SRC=>DST")))?;
        Ok(ClaimSpec::new(a.trim().parse()?, c.trim().parse()?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus {
    Found {
        space: Box<FiniteSpace>,
        subset: PointSubset,
    },
    ExhaustedUpTo(usize),
}

/// Outcome of one search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleRecord {
    pub claim: ClaimSpec,
    pub status: SearchStatus,
    /// Spaces examined, including the one holding the counterexample.
    pub checked_spaces: usize,
    pub max_n: usize,
    pub elapsed_ms: u64,
}

/// JSON shape of a record; field order is the serialized key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordReport {
    pub claim: String,
    pub status: &'static str,
    pub space: Option<String>,
    pub subset: Option<String>,
    pub checked_spaces: usize,
    pub max_n: usize,
    pub elapsed_ms: u64,
}

impl CounterexampleRecord {
    pub fn is_found(&self) -> bool {
        matches!(self.status, SearchStatus::Found { .. })
    }

    /// Re-evaluates the claim on the recorded space and subset.
    pub fn recheck(&self) -> bool {
        match &self.status {
            SearchStatus::Found { space, subset } => self.claim.is_violated_by(space, *subset),
            SearchStatus::ExhaustedUpTo(_) => true,
        }
    }

    pub fn report(&self) -> RecordReport {
        let (status, space, subset) = match &self.status {
            SearchStatus::Found { space, subset } => {
                ("found", Some(format_space(space)), Some(space.format_set(*subset)))
            }
            SearchStatus::ExhaustedUpTo(_) => ("exhausted", None, None),
        };
        RecordReport {
            claim: self.claim.to_string(),
            status,
            space,
            subset,
            checked_spaces: self.checked_spaces,
            max_n: self.max_n,
            elapsed_ms: self.elapsed_ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.report()).expect("record serializes")
    }

    /// The record with `elapsed_ms` zeroed, for byte-exact comparisons.
    pub fn without_timing(&self) -> Self {
        CounterexampleRecord {
            elapsed_ms: 0,
            ..self.clone()
        }
    }
}

/// Whether searches fan out over the rayon pool.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

/// First counterexample to `claim` over labeled spaces with `n ≤ max_n`.
pub fn find_counterexample(claim: ClaimSpec, max_n: usize) -> Result<CounterexampleRecord> {
    find_counterexample_with(claim, max_n, Execution::Parallel)
}

pub fn find_counterexample_with(claim: ClaimSpec, max_n: usize, exec: Execution) -> Result<CounterexampleRecord> {
    if max_n == 0 || max_n > MAX_LABELED {
        return Err(Error::BoundExceeded {
            n: max_n,
            limit: MAX_LABELED,
        });
    }
    let start = Instant::now();
    let mut checked = 0;
    for n in 1..=max_n {
        let preorders = labeled_preorders(n)?;
        let probe = |(i, p): (usize, &crate::lab::preorder::Preorder)| {
            let space = p.to_space();
            claim.first_violation(&space).map(|subset| (i, space, subset))
        };
        let hit = match exec {
            Execution::Sequential => preorders.iter().enumerate().find_map(probe),
            Execution::Parallel => preorders.par_iter().enumerate().find_map_first(probe),
        };
        if let Some((i, space, subset)) = hit {
            return Ok(CounterexampleRecord {
                claim,
                status: SearchStatus::Found {
                    space: Box::new(space),
                    subset,
                },
                checked_spaces: checked + i + 1,
                max_n,
                elapsed_ms: start.elapsed().as_millis() as u64,
            });
        }
        checked += preorders.len();
    }
    Ok(CounterexampleRecord {
        claim,
        status: SearchStatus::ExhaustedUpTo(max_n),
        checked_spaces: checked,
        max_n,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Searches both directions between b-locally closed and e-locally closed;
/// the notions are independent up to `max_n` iff both records are found.
pub fn independence_search(max_n: usize) -> Result<(CounterexampleRecord, CounterexampleRecord)> {
    independence_search_with(max_n, Execution::Parallel)
}

pub fn independence_search_with(max_n: usize, exec: Execution) -> Result<(CounterexampleRecord, CounterexampleRecord)> {
    Ok((
        find_counterexample_with(ClaimSpec::lc(LCVariant::BLC, LCVariant::ELC), max_n, exec)?,
        find_counterexample_with(ClaimSpec::lc(LCVariant::ELC, LCVariant::BLC), max_n, exec)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_parsing() {
        let c: ClaimSpec = "LC=>aLC".parse().unwrap();
        assert_eq!(c, ClaimSpec::lc(LCVariant::LC, LCVariant::ALC));
        assert_eq!(c.to_string(), "LC=>aLC");
        let c: ClaimSpec = "aO => eO".parse().unwrap();
        assert_eq!(c.antecedent, Predicate::Open(Variant::AOpen));
        assert!("LC".parse::<ClaimSpec>().is_err());
        assert!("LC=>xyz".parse::<ClaimSpec>().is_err());
    }

    #[test]
    fn lc_implies_alc_fails_on_sierpinski() {
        let r = find_counterexample(ClaimSpec::lc(LCVariant::LC, LCVariant::ALC), 2).unwrap();
        match &r.status {
            SearchStatus::Found { space, subset } => {
                assert_eq!(**space, FiniteSpace::sierpinski());
                assert_eq!(space.format_set(*subset), "{a}");
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(r.checked_spaces, 3);
        assert!(r.recheck());
    }

    #[test]
    fn tautology_exhausts() {
        let r = find_counterexample(ClaimSpec::lc(LCVariant::ALC, LCVariant::ALC), 4).unwrap();
        assert_eq!(r.status, SearchStatus::ExhaustedUpTo(4));
        assert_eq!(r.checked_spaces, 1 + 4 + 29 + 355);
    }

    #[test]
    fn alc_implies_lc_fails_by_four() {
        let r = find_counterexample(ClaimSpec::lc(LCVariant::ALC, LCVariant::LC), 4).unwrap();
        assert!(r.is_found() && r.recheck());
    }

    #[test]
    fn independence_trivial_on_one_point() {
        let (a, b) = independence_search(1).unwrap();
        assert_eq!(a.status, SearchStatus::ExhaustedUpTo(1));
        assert_eq!(b.status, SearchStatus::ExhaustedUpTo(1));
    }

    #[test]
    fn bound_checked() {
        let c = ClaimSpec::lc(LCVariant::LC, LCVariant::ALC);
        assert_eq!(
            find_counterexample(c, 7).unwrap_err(),
            Error::BoundExceeded { n: 7, limit: 6 }
        );
        assert!(find_counterexample(c, 0).is_err());
    }

    #[test]
    fn json_key_order_is_stable() {
        let r = find_counterexample(ClaimSpec::lc(LCVariant::LC, LCVariant::ALC), 2)
            .unwrap()
            .without_timing();
        let text = serde_json::to_string(&r.report()).unwrap();
        assert_eq!(
            text,
            "{\"claim\":\"LC=>aLC\",\"status\":\"found\",\"space\":\"points: a b\\nopen:\\nopen: a\\nopen: a b\\n\",\
             \"subset\":\"{a}\",\"checked_spaces\":3,\"max_n\":2,\"elapsed_ms\":0}"
        );
    }
}
