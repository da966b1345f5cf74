//! Model checking of the theorem statements on a single space, and censuses
//! that run the suite over every labeled space of a given size.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::generalized::{
    semi_closure, variant_closed_family, variant_closure, variant_interior, variant_open_family, Variant,
};
use crate::lab::preorder::labeled_preorders;
use crate::lab::search::Execution;
use crate::local::{
    are_a_separated, characterize_alc, characterize_alo, disjoint_aclosed_witness, interpolation_witness,
    is_variant_space, is_variant_submaximal, lc_family, lc_witness, product_lc_witness_in, sandwich_witness,
    separated_union_witness, LCVariant,
};
use crate::space::{product_space, FiniteSpace};
use crate::subset::{all_subsets, subsets_of, PointSubset};
use crate::text::format_space;

/// Largest space the suite accepts.
pub const SUITE_MAX_POINTS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// First failing subset or pair, rendered in set syntax.
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SuiteReport {
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.failure {
                None => writeln!(f, "PASS {}", c.name)?,
                Some(d) => writeln!(f, "FAIL {}: {}", c.name, d)?,
            }
        }
        Ok(())
    }
}

struct Ctx<'a> {
    sp: &'a FiniteSpace,
    subsets: Vec<PointSubset>,
    out: Vec<CheckOutcome>,
}

impl<'a> Ctx<'a> {
    fn check(&mut self, name: &'static str, failure: Option<String>) {
        self.out.push(CheckOutcome { name, failure });
    }

    fn set(&self, a: PointSubset) -> String {
        self.sp.format_set(a)
    }

    fn pair(&self, a: PointSubset, b: PointSubset) -> String {
        format!("A={}, B={}", self.set(a), self.set(b))
    }

    fn open(&self, v: Variant) -> &'a SetFamily {
        variant_open_family(self.sp, v)
    }

    fn closed(&self, v: Variant) -> &'a SetFamily {
        variant_closed_family(self.sp, v)
    }

    fn lc(&self, l: LCVariant) -> &'a SetFamily {
        lc_family(self.sp, l)
    }

    fn inclusion(&mut self, name: &'static str, small: &SetFamily, big: &SetFamily) {
        let f = small.first_outside(big).map(|a| self.set(a));
        self.check(name, f);
    }

    fn equality(&mut self, name: &'static str, x: &SetFamily, y: &SetFamily) {
        let f = x.first_outside(y).or_else(|| y.first_outside(x)).map(|a| self.set(a));
        self.check(name, f);
    }

    fn pairs<F>(&self, xs: &SetFamily, ys: &SetFamily, mut bad: F) -> Option<String>
    where
        F: FnMut(PointSubset, PointSubset) -> Option<String>,
    {
        xs.iter().find_map(|&a| {
            ys.iter()
                .find_map(|&b| bad(a, b).map(|why| format!("{}: {why}", self.pair(a, b))))
        })
    }
}

/// Runs every theorem check on `space` (`n ≤ 5`).
pub fn verify_theorem_suite(space: &FiniteSpace) -> Result<SuiteReport> {
    if space.n() > SUITE_MAX_POINTS {
        return Err(Error::BoundExceeded {
            n: space.n(),
            limit: SUITE_MAX_POINTS,
        });
    }
    let mut cx = Ctx {
        sp: space,
        subsets: all_subsets(space.n()).collect(),
        out: Vec::new(),
    };
    let sp = space;
    let full = sp.full();
    let subsets = cx.subsets.clone();

    // primitive operators
    let f = subsets.iter().find_map(|&a| {
        let (i, c) = (sp.interior(a), sp.closure(a));
        let ok = i.is_subset(a)
            && a.is_subset(c)
            && sp.interior(i) == i
            && sp.closure(c) == c
            && sp.is_open(i)
            && sp.is_closed(c)
            && c == sp.complement(sp.interior(sp.complement(a)));
        (!ok).then(|| cx.set(a))
    });
    cx.check("int(A) ⊆ A ⊆ cl(A), idempotent, complement-dual", f);
    let f = subsets.iter().find_map(|&a| {
        let d = sp.delta_closure(a);
        let ok =
            sp.delta_interior(a).is_subset(sp.interior(a)) && sp.closure(a).is_subset(d) && sp.delta_closure(d) == d;
        (!ok).then(|| cx.set(a))
    });
    cx.check("δ-int(A) ⊆ int(A), cl(A) ⊆ δ-cl(A), δ-cl idempotent", f);
    let fixed = SetFamily::filter_power_set(sp.n(), |a| sp.interior(sp.closure(a)) == a);
    cx.equality(
        "regular open sets = fixed points of int∘cl",
        sp.regular_open_family(),
        &fixed,
    );

    // openness families
    use Variant::*;
    cx.inclusion("RO ⊆ δO", cx.open(RegularOpen), cx.open(Delta));
    cx.inclusion("δO ⊆ O", cx.open(Delta), cx.open(Open));
    cx.inclusion("O ⊆ αO", cx.open(Open), cx.open(Alpha));
    cx.inclusion("αO ⊆ SO", cx.open(Alpha), cx.open(Semi));
    cx.inclusion("SO ⊆ BO", cx.open(Semi), cx.open(BOpen));
    cx.inclusion("δO ⊆ aO", cx.open(Delta), cx.open(AOpen));
    cx.inclusion("aO ⊆ αO", cx.open(AOpen), cx.open(Alpha));
    cx.inclusion("aO ⊆ eO", cx.open(AOpen), cx.open(EOpen));
    cx.inclusion("aO ⊆ FO", cx.open(AOpen), cx.open(Feebly));
    cx.inclusion("aC ⊆ FC", cx.closed(AOpen), cx.closed(Feebly));
    cx.equality("FO = αO", cx.open(Feebly), cx.open(Alpha));

    let (ao, ac) = (cx.open(AOpen), cx.closed(AOpen));
    let f = cx.pairs(ao, ao, |a, b| {
        (!ao.contains(a.intersection(b)) || !ao.contains(a.union(b))).then(|| "∩ or ∪ not a-open".into())
    });
    let f = f.or_else(|| (!ao.contains(PointSubset::EMPTY) || !ao.contains(full)).then(|| "∅ or X".into()));
    cx.check("aO contains ∅, X and is closed under ∩ and ∪", f);
    let f = cx.pairs(ac, ac, |a, b| {
        (!ac.contains(a.intersection(b)) || !ac.contains(a.union(b))).then(|| "∩ or ∪ not a-closed".into())
    });
    let f = f.or_else(|| (!ac.contains(PointSubset::EMPTY) || !ac.contains(full)).then(|| "∅ or X".into()));
    cx.check("aC contains ∅, X and is closed under ∪ and ∩", f);

    let f = sp
        .opens()
        .iter()
        .find_map(|&u| (semi_closure(sp, u) != u.union(sp.interior(sp.closure(u)))).then(|| cx.set(u)));
    cx.check("scl(U) = U ∪ int(cl(U)) for open U", f);

    for (v, name) in [
        (
            Semi,
            "semi-closure is the least semi-closed superset; dual to semi-interior",
        ),
        (AOpen, "a-closure is the least a-closed superset; dual to a-interior"),
        (EOpen, "e-closure is the least e-closed superset; dual to e-interior"),
    ] {
        let closed = cx.closed(v);
        let f = subsets.iter().find_map(|&a| {
            let cl = match variant_closure(sp, v, a) {
                Ok(c) => c,
                Err(e) => return Some(e.to_string()),
            };
            let supersets: Vec<PointSubset> = closed.iter().copied().filter(|c| a.is_subset(*c)).collect();
            let least = supersets
                .iter()
                .copied()
                .filter(|c| supersets.iter().all(|d| c.is_subset(*d)))
                .collect::<Vec<_>>();
            let int = variant_interior(sp, v, sp.complement(a)).ok();
            let ok = least == [cl] && int == Some(sp.complement(cl)) && variant_closure(sp, v, cl).ok() == Some(cl);
            (!ok).then(|| cx.set(a))
        });
        cx.check(name, f);
    }

    let (eo, ec) = (cx.open(EOpen), cx.closed(EOpen));
    let f = cx.pairs(ao, eo, |a, b| {
        (!eo.contains(a.intersection(b))).then(|| "A ∩ B not e-open".into())
    });
    cx.check("a-open ∩ e-open is e-open", f);
    let f = cx.pairs(ac, ec, |a, b| {
        (!ec.contains(a.union(b))).then(|| "A ∪ B not e-closed".into())
    });
    cx.check("a-closed ∪ e-closed is e-closed", f);

    // locally closed families
    use LCVariant as L;
    cx.inclusion("aO ⊆ aLC", ao, cx.lc(L::ALC));
    cx.inclusion("aC ⊆ aLC", ac, cx.lc(L::ALC));
    for (name, from, to) in [
        ("LC ⇒ FLC", L::LC, L::FLC),
        ("LC ⇒ αLC", L::LC, L::AlphaLC),
        ("FLC ⇒ bLC", L::FLC, L::BLC),
        ("FLC ⇒ eLC", L::FLC, L::ELC),
        ("aLC ⇒ FLC", L::ALC, L::FLC),
        ("aLC ⇒ eLC", L::ALC, L::ELC),
        ("aLC ⇒ αLC", L::ALC, L::AlphaLC),
        ("αLC ⇒ eLC", L::AlphaLC, L::ELC),
        ("αLC ⇒ bLC", L::AlphaLC, L::BLC),
    ] {
        cx.inclusion(name, cx.lc(from), cx.lc(to));
    }
    cx.equality("FLC = αLC", cx.lc(L::FLC), cx.lc(L::AlphaLC));

    let (alc, elc) = (cx.lc(L::ALC), cx.lc(L::ELC));
    let f = cx.pairs(alc, alc, |a, b| {
        (!alc.contains(a.intersection(b))).then(|| "A ∩ B ∉ aLC".into())
    });
    cx.check("aLC closed under ∩", f);
    let f = cx.pairs(alc, elc, |a, b| {
        (!elc.contains(a.intersection(b))).then(|| "A ∩ B ∉ eLC".into())
    });
    cx.check("aLC ∩ eLC ⊆ eLC", f);

    let f = alc.iter().find_map(|&a| {
        let w = lc_witness(sp, L::ALC, a)?;
        disjoint_aclosed_witness(sp, &w)
            .err()
            .map(|e| format!("{}: {e}", cx.set(a)))
    });
    let f = f.or_else(|| {
        alc.iter()
            .find(|&&a| lc_witness(sp, L::ALC, a).is_none())
            .map(|&a| cx.set(a))
    });
    cx.check("aLC set is disjoint from the a-closed set V \\ U", f);

    let f = cx.pairs(ao, ac, |p, q| {
        interpolation_witness(sp, p, q).err().map(|e| e.to_string())
    });
    cx.check("interpolation: a-open E ⊆ P ∪ Q, a-closed F ⊇ P ∩ Q", f);

    let f = subsets.iter().find_map(|&a| {
        let r = characterize_alc(sp, a);
        let witness_ok = r
            .witness
            .is_none_or(|p| ao.contains(p) && p.intersection(crate::generalized::a_closure(sp, a)) == a);
        (!r.all_agree() || !witness_ok).then(|| format!("{}: {:?}", cx.set(a), r))
    });
    cx.check("aLC characterizations (a)-(e) agree", f);
    let f = subsets.iter().find_map(|&a| {
        let r = characterize_alo(sp, a);
        (!r.all_agree()).then(|| format!("{}: {:?}", cx.set(a), r))
    });
    cx.check("aLO characterizations (a)-(e) agree", f);

    let f = alc.iter().find_map(|&h| {
        subsets_of(h).find_map(|w| {
            sandwich_witness(sp, w, h)
                .err()
                .map(|e| format!("W={}, H={}: {e}", cx.set(w), cx.set(h)))
        })
    });
    cx.check("sandwich: W ⊆ K ⊆ H with K ∈ aLC", f);

    let f = match is_variant_submaximal(sp, AOpen) {
        Ok(sub) => (sub != alc.is_power_set()).then(|| format!("a-submaximal = {sub}, aLC = 2^X is {}", !sub)),
        Err(e) => Some(e.to_string()),
    };
    cx.check("a-submaximal iff aLC = 2^X", f);

    let f = if sp.is_regular() && is_variant_space(sp, EOpen) {
        let flags: Result<Vec<bool>> = [Open, AOpen, EOpen]
            .iter()
            .map(|&v| is_variant_submaximal(sp, v))
            .collect();
        match flags {
            Ok(fl) => (fl.iter().any(|&x| x != fl[0])).then(|| format!("submaximal/a-/e-: {fl:?}")),
            Err(e) => Some(e.to_string()),
        }
    } else {
        None
    };
    cx.check("regular e-space: submaximal iff a-submaximal iff e-submaximal", f);

    let f = cx.pairs(alc, alc, |a, b| {
        if !are_a_separated(sp, a, b) {
            return None;
        }
        match separated_union_witness(sp, a, b) {
            Ok(w) if alc.contains(w.set()) => None,
            Ok(_) => Some("A ∪ B ∉ aLC".into()),
            Err(e) => Some(e.to_string()),
        }
    });
    cx.check("a-separated aLC sets have an aLC union", f);

    Ok(SuiteReport { checks: cx.out })
}

/// A space that failed one or more suite checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusFailure {
    pub index: usize,
    pub space: String,
    pub report: SuiteReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub spaces: usize,
    pub failures: Vec<CensusFailure>,
}

/// Runs the suite on every labeled space with `n` points.
pub fn verify_all_labeled(n: usize, exec: Execution) -> Result<Census> {
    if n > SUITE_MAX_POINTS {
        return Err(Error::BoundExceeded {
            n,
            limit: SUITE_MAX_POINTS,
        });
    }
    let preorders = labeled_preorders(n)?;
    let run = |(index, p): (usize, &crate::lab::preorder::Preorder)| -> Result<Option<CensusFailure>> {
        let space = p.to_space();
        let report = verify_theorem_suite(&space)?;
        Ok((!report.all_passed()).then(|| CensusFailure {
            index,
            space: format_space(&space),
            report,
        }))
    };
    let results: Vec<Result<Option<CensusFailure>>> = match exec {
        Execution::Sequential => preorders.iter().enumerate().map(run).collect(),
        Execution::Parallel => preorders.par_iter().enumerate().map(run).collect(),
    };
    let mut failures = Vec::new();
    for r in results {
        failures.extend(r?);
    }
    Ok(Census {
        n,
        spaces: preorders.len(),
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCensus {
    pub n: usize,
    pub space_pairs: usize,
    pub set_pairs: usize,
    pub failures: Vec<String>,
}

/// For every ordered pair of labeled `n`-point spaces and every `A ∈ aLC(X)`,
/// `B ∈ aLC(Y)`: builds the box witness for `A × B` and confirms membership in
/// `aLC(X × Y)`.
pub fn verify_product_theorem(n: usize) -> Result<ProductCensus> {
    let spaces: Vec<FiniteSpace> = labeled_preorders(n)?.iter().map(|p| p.to_space()).collect();
    let rows: Vec<(usize, Vec<String>)> = spaces
        .par_iter()
        .enumerate()
        .map(|(i, x)| -> Result<Vec<(usize, Vec<String>)>> {
            let mut out = Vec::new();
            for (j, y) in spaces.iter().enumerate() {
                let product = product_space(x, y)?;
                let prod_alc = lc_family(&product, LCVariant::ALC);
                let mut count = 0;
                let mut fails = Vec::new();
                for &a in lc_family(x, LCVariant::ALC) {
                    for &b in lc_family(y, LCVariant::ALC) {
                        count += 1;
                        match product_lc_witness_in(&product, x, y, a, b) {
                            Ok(w) if prod_alc.contains(w.set()) => {}
                            Ok(_) => fails.push(format!(
                                "X#{i} Y#{j} A={} B={}: A×B ∉ aLC",
                                x.format_set(a),
                                y.format_set(b)
                            )),
                            Err(e) => {
                                fails.push(format!("X#{i} Y#{j} A={} B={}: {e}", x.format_set(a), y.format_set(b)))
                            }
                        }
                    }
                }
                out.push((count, fails));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let set_pairs = rows.iter().map(|(c, _)| c).sum();
    let failures = rows.into_iter().flat_map(|(_, f)| f).collect();
    Ok(ProductCensus {
        n,
        space_pairs: spaces.len() * spaces.len(),
        set_pairs,
        failures,
    })
}
