//! Locally closed sets for each openness notion, the a-locally closed
//! characterizations and witness constructions, and the space-level
//! predicates built on a-closure (density, submaximality, a-/e-spaces,
//! a-separation).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::generalized::{
    a_closure, a_interior, is_variant_closed, is_variant_open, variant_closed_family, variant_closure,
    variant_open_family, Variant,
};
use crate::space::{product_space, product_subset, FiniteSpace};
use crate::subset::{all_subsets, PointSubset};

/// Locally closed notions, each the intersections of one openness notion's
/// open and closed sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LCVariant {
    LC,
    AlphaLC,
    ALC,
    BLC,
    ELC,
    FLC,
}

impl LCVariant {
    pub const ALL: [LCVariant; 6] = [
        LCVariant::LC,
        LCVariant::AlphaLC,
        LCVariant::ALC,
        LCVariant::BLC,
        LCVariant::ELC,
        LCVariant::FLC,
    ];

    /// The openness notion supplying both the open and the closed factor.
    pub fn variant(self) -> Variant {
        match self {
            LCVariant::LC => Variant::Open,
            LCVariant::AlphaLC => Variant::Alpha,
            LCVariant::ALC => Variant::AOpen,
            LCVariant::BLC => Variant::BOpen,
            LCVariant::ELC => Variant::EOpen,
            LCVariant::FLC => Variant::Feebly,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            LCVariant::LC => "LC",
            LCVariant::AlphaLC => "alphaLC",
            LCVariant::ALC => "aLC",
            LCVariant::BLC => "bLC",
            LCVariant::ELC => "eLC",
            LCVariant::FLC => "FLC",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for LCVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for LCVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LCVariant::ALL
            .into_iter()
            .find(|v| v.symbol().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown locally-closed variant `{s}`")))
    }
}

/// A pair `(open, closed)` whose intersection is the witnessed set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LCWitness {
    pub open: PointSubset,
    pub closed: PointSubset,
    pub variant: LCVariant,
}

impl LCWitness {
    pub fn set(&self) -> PointSubset {
        self.open.intersection(self.closed)
    }

    pub fn is_valid(&self, space: &FiniteSpace) -> bool {
        let v = self.variant.variant();
        is_variant_open(space, v, self.open) && is_variant_closed(space, v, self.closed)
    }
}

/// `{U ∩ V : U v-open, V v-closed}`, memoized per space.
pub fn lc_family(space: &FiniteSpace, lcv: LCVariant) -> &SetFamily {
    space.cache.lc[lcv.index()].get_or_init(|| {
        let v = lcv.variant();
        let opens = variant_open_family(space, v);
        let closed = variant_closed_family(space, v);
        let n = space.n();
        let mut seen = vec![false; 1 << n];
        for &u in opens {
            for &c in closed {
                seen[u.intersection(c).bits() as usize] = true;
            }
        }
        SetFamily::filter_power_set(n, |s| seen[s.bits() as usize])
    })
}

pub fn is_lc(space: &FiniteSpace, lcv: LCVariant, a: PointSubset) -> bool {
    lc_family(space, lcv).contains(a)
}

/// Canonically least open factor, then least closed factor, or `None` when
/// `a` is not locally closed for `lcv`.
pub fn lc_witness(space: &FiniteSpace, lcv: LCVariant, a: PointSubset) -> Option<LCWitness> {
    let v = lcv.variant();
    let closed = variant_closed_family(space, v);
    variant_open_family(space, v)
        .iter()
        .filter(|u| a.is_subset(**u))
        .find_map(|&u| {
            closed.iter().find(|&&c| u.intersection(c) == a).map(|&c| LCWitness {
                open: u,
                closed: c,
                variant: lcv,
            })
        })
}

/// Five independently evaluated forms of one equivalence. `witness` is the
/// least set realizing form (b) when it holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CharacterizationRecord {
    pub a: bool,
    pub b: bool,
    #[serde(skip)]
    pub witness: Option<PointSubset>,
    pub c: bool,
    pub d: bool,
    pub e: bool,
}

impl CharacterizationRecord {
    pub fn all_agree(&self) -> bool {
        let f = [self.a, self.b, self.c, self.d, self.e];
        f.iter().all(|&x| x == f[0])
    }

    /// Five labeled booleans, the witness in set syntax after form (b).
    pub fn render(&self, space: &FiniteSpace) -> String {
        let witness = self
            .witness
            .map(|w| format!(" {}", space.format_set(w)))
            .unwrap_or_default();
        format!(
            "a: {}\nb: {}{}\nc: {}\nd: {}\ne: {}\n",
            self.a, self.b, witness, self.c, self.d, self.e
        )
    }
}

/// Characterizations of a-locally closed sets:
/// (a) membership in aLC; (b) `A = P ∩ a-cl(A)` for some a-open `P`;
/// (c) `a-cl(A) \ A` a-closed; (d) `A ∪ (X \ a-cl(A))` a-open;
/// (e) `A ⊆ a-int(A ∪ (X \ a-cl(A)))`.
pub fn characterize_alc(space: &FiniteSpace, a: PointSubset) -> CharacterizationRecord {
    let acl = a_closure(space, a);
    let witness = variant_open_family(space, Variant::AOpen)
        .iter()
        .copied()
        .find(|p| p.intersection(acl) == a);
    let outside = a.union(space.complement(acl));
    CharacterizationRecord {
        a: is_lc(space, LCVariant::ALC, a),
        b: witness.is_some(),
        witness,
        c: is_variant_closed(space, Variant::AOpen, acl.difference(a)),
        d: is_variant_open(space, Variant::AOpen, outside),
        e: a.is_subset(a_interior(space, outside)),
    }
}

/// Characterizations of a-locally open sets (complements of aLC members):
/// (a) `X \ A ∈ aLC`; (b) `A = Q ∪ a-int(A)` for some a-closed `Q`;
/// (c) `(X \ A) ∪ a-int(A)` a-open; (d) `A ∩ (X \ a-int(A))` a-closed;
/// (e) `a-cl(A ∩ (X \ a-int(A))) ⊆ A`.
pub fn characterize_alo(space: &FiniteSpace, a: PointSubset) -> CharacterizationRecord {
    let aint = a_interior(space, a);
    let witness = variant_closed_family(space, Variant::AOpen)
        .iter()
        .copied()
        .find(|q| q.union(aint) == a);
    let rim = a.difference(aint);
    CharacterizationRecord {
        a: is_lc(space, LCVariant::ALC, space.complement(a)),
        b: witness.is_some(),
        witness,
        c: is_variant_open(space, Variant::AOpen, space.complement(a).union(aint)),
        d: is_variant_closed(space, Variant::AOpen, rim),
        e: a_closure(space, rim).is_subset(a),
    }
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(what()))
    }
}

/// `F = V \ U` for an aLC witness `(U, V)`: a-closed and disjoint from `U ∩ V`.
pub fn disjoint_aclosed_witness(space: &FiniteSpace, witness: &LCWitness) -> Result<PointSubset> {
    require(witness.variant == LCVariant::ALC && witness.is_valid(space), || {
        format!(
            "({}, {}) is not an aLC witness",
            space.format_set(witness.open),
            space.format_set(witness.closed)
        )
    })?;
    let f = witness.closed.difference(witness.open);
    if !is_variant_closed(space, Variant::AOpen, f) || !f.is_disjoint(witness.set()) {
        return Err(Error::ConstructionFailed(format!(
            "V \\ U = {} is not a disjoint a-closed set",
            space.format_set(f)
        )));
    }
    Ok(f)
}

/// True when some nonempty a-closed set misses `a` although `a ∉ aLC`.
pub fn converse_fails_check(space: &FiniteSpace, a: PointSubset) -> bool {
    !is_lc(space, LCVariant::ALC, a)
        && variant_closed_family(space, Variant::AOpen)
            .iter()
            .any(|f| !f.is_empty() && f.is_disjoint(a))
}

/// For `P` a-open and `Q` a-closed: `E = P ∪ a-int(Q)` (a-open, `E ⊆ P ∪ Q`)
/// and `F = Q ∩ a-cl(P)` (a-closed, `P ∩ Q ⊆ F`).
pub fn interpolation_witness(
    space: &FiniteSpace,
    p: PointSubset,
    q: PointSubset,
) -> Result<(PointSubset, PointSubset)> {
    require(is_variant_open(space, Variant::AOpen, p), || {
        format!("{} is not a-open", space.format_set(p))
    })?;
    require(is_variant_closed(space, Variant::AOpen, q), || {
        format!("{} is not a-closed", space.format_set(q))
    })?;
    let e = p.union(a_interior(space, q));
    let f = q.intersection(a_closure(space, p));
    let ok = is_variant_open(space, Variant::AOpen, e)
        && is_variant_closed(space, Variant::AOpen, f)
        && p.intersection(q).is_subset(f)
        && e.is_subset(p.union(q));
    if !ok {
        return Err(Error::ConstructionFailed(format!(
            "E = {}, F = {}",
            space.format_set(e),
            space.format_set(f)
        )));
    }
    Ok((e, f))
}

/// For `W ⊆ H` with `H ∈ aLC`: `K = P ∩ a-cl(W)`, `P` the least a-open set
/// with `H = P ∩ a-cl(H)`. Then `K ∈ aLC` and `W ⊆ K ⊆ H`.
pub fn sandwich_witness(space: &FiniteSpace, w: PointSubset, h: PointSubset) -> Result<PointSubset> {
    require(w.is_subset(h), || {
        format!("{} is not inside {}", space.format_set(w), space.format_set(h))
    })?;
    let record = characterize_alc(space, h);
    let p = match (record.a, record.witness) {
        (true, Some(p)) => p,
        _ => {
            return Err(Error::Precondition(format!(
                "{} is not a-locally closed",
                space.format_set(h)
            )))
        }
    };
    let k = p.intersection(a_closure(space, w));
    if !(is_lc(space, LCVariant::ALC, k) && w.is_subset(k) && k.is_subset(h)) {
        return Err(Error::ConstructionFailed(format!("K = {}", space.format_set(k))));
    }
    Ok(k)
}

fn dense_closure(space: &FiniteSpace, v: Variant, a: PointSubset) -> Result<PointSubset> {
    match v {
        Variant::Open => Ok(space.closure(a)),
        _ => variant_closure(space, v, a),
    }
}

/// `v`-closure of `a` is the whole space. Intended for `Open`, `AOpen`, `EOpen`.
pub fn is_variant_dense(space: &FiniteSpace, v: Variant, a: PointSubset) -> Result<bool> {
    Ok(dense_closure(space, v, a)? == space.full())
}

/// Every `v`-dense subset is `v`-open.
pub fn is_variant_submaximal(space: &FiniteSpace, v: Variant) -> Result<bool> {
    for a in all_subsets(space.n()) {
        if is_variant_dense(space, v, a)? && !is_variant_open(space, v, a) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The `v`-open family coincides with the topology (a-space / e-space).
pub fn is_variant_space(space: &FiniteSpace, v: Variant) -> bool {
    variant_open_family(space, v) == space.opens()
}

/// `A ∩ a-cl(B) = ∅` and `B ∩ a-cl(A) = ∅`.
pub fn are_a_separated(space: &FiniteSpace, a: PointSubset, b: PointSubset) -> bool {
    a.is_disjoint(a_closure(space, b)) && b.is_disjoint(a_closure(space, a))
}

/// Witness `(U ∪ V, a-cl(A ∪ B))` for the union of two a-separated aLC sets,
/// where `U = P ∩ (X \ a-cl(B))`, `V = Q ∩ (X \ a-cl(A))` and `P`, `Q` are
/// the form-(b) witnesses of `A`, `B`.
pub fn separated_union_witness(space: &FiniteSpace, a: PointSubset, b: PointSubset) -> Result<LCWitness> {
    let ra = characterize_alc(space, a);
    let rb = characterize_alc(space, b);
    require(ra.a && rb.a, || {
        format!(
            "{} and {} must both be a-locally closed",
            space.format_set(a),
            space.format_set(b)
        )
    })?;
    require(are_a_separated(space, a, b), || {
        format!(
            "{} and {} are not a-separated",
            space.format_set(a),
            space.format_set(b)
        )
    })?;
    let (p, q) = match (ra.witness, rb.witness) {
        (Some(p), Some(q)) => (p, q),
        _ => return Err(Error::ConstructionFailed("form (b) witness missing".into())),
    };
    let acl_a = a_closure(space, a);
    let acl_b = a_closure(space, b);
    let u = p.intersection(space.complement(acl_b));
    let v = q.intersection(space.complement(acl_a));
    let witness = LCWitness {
        open: u.union(v),
        closed: a_closure(space, a.union(b)),
        variant: LCVariant::ALC,
    };
    if !witness.is_valid(space) || witness.set() != a.union(b) {
        return Err(Error::ConstructionFailed(format!(
            "({}) ∩ ({}) ≠ {}",
            space.format_set(witness.open),
            space.format_set(witness.closed),
            space.format_set(a.union(b))
        )));
    }
    Ok(witness)
}

/// Box witness `(U1×U2, V1×V2)` for `A × B` inside a prebuilt product of
/// `left` and `right`, from the least aLC witnesses of `A` and `B`.
pub fn product_lc_witness_in(
    product: &FiniteSpace,
    left: &FiniteSpace,
    right: &FiniteSpace,
    a: PointSubset,
    b: PointSubset,
) -> Result<LCWitness> {
    require(product.n() == left.n() * right.n(), || {
        "product size mismatch".to_string()
    })?;
    let wa = lc_witness(left, LCVariant::ALC, a)
        .ok_or_else(|| Error::Precondition(format!("{} ∉ aLC of the left factor", left.format_set(a))))?;
    let wb = lc_witness(right, LCVariant::ALC, b)
        .ok_or_else(|| Error::Precondition(format!("{} ∉ aLC of the right factor", right.format_set(b))))?;
    let rn = right.n();
    let witness = LCWitness {
        open: product_subset(wa.open, wb.open, rn),
        closed: product_subset(wa.closed, wb.closed, rn),
        variant: LCVariant::ALC,
    };
    if !is_variant_open(product, Variant::AOpen, witness.open) {
        return Err(Error::ConstructionFailed(format!(
            "{} is not a-open",
            product.format_set(witness.open)
        )));
    }
    if !is_variant_closed(product, Variant::AOpen, witness.closed) {
        return Err(Error::ConstructionFailed(format!(
            "{} is not a-closed",
            product.format_set(witness.closed)
        )));
    }
    if witness.set() != product_subset(a, b, rn) {
        return Err(Error::ConstructionFailed("box intersection differs from A × B".into()));
    }
    Ok(witness)
}

/// Builds `left × right` and returns it with the box witness for `A × B`.
pub fn product_lc_witness(
    left: &FiniteSpace,
    right: &FiniteSpace,
    a: PointSubset,
    b: PointSubset,
) -> Result<(FiniteSpace, LCWitness)> {
    let product = product_space(left, right)?;
    let w = product_lc_witness_in(&product, left, right, a, b)?;
    Ok((product, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::fixtures::*;

    #[test]
    fn lc_family_examples() {
        let sp = ex37();
        assert_eq!(
            lc_family(&sp, LCVariant::ALC),
            &fam(&sp, &["", "b", "a c d", "a b c d"])
        );
        let sp = ex38();
        assert_eq!(
            lc_family(&sp, LCVariant::ALC),
            &fam(&sp, &["", "b", "d", "a c", "b d", "a b c", "a c d", "a b c d"])
        );
        let sp = ex39();
        assert_eq!(
            lc_family(&sp, LCVariant::LC),
            &fam(&sp, &["", "a", "b", "a b", "c d", "a c d", "b c d", "a b c d"])
        );
    }

    #[test]
    fn lc_witness_examples() {
        let sp = ex39();
        let w = lc_witness(&sp, LCVariant::ALC, set(&sp, "a c")).unwrap();
        assert_eq!((w.open, w.closed), (set(&sp, "a b c"), set(&sp, "a c d")));
        for sp in [ex37(), ex38(), ex39()] {
            for lcv in LCVariant::ALL {
                let w = lc_witness(&sp, lcv, sp.full()).unwrap();
                assert_eq!((w.open, w.closed), (sp.full(), sp.full()));
            }
        }
        let sp = ex37();
        assert_eq!(lc_witness(&sp, LCVariant::ALC, set(&sp, "a")), None);
    }

    #[test]
    fn characterize_alc_examples() {
        let sp = ex39();
        let r = characterize_alc(&sp, set(&sp, "c"));
        assert!(r.a && r.b && r.c && r.d && r.e);
        let sp = ex37();
        let r = characterize_alc(&sp, set(&sp, "a"));
        assert!(!r.a && !r.b && !r.c && !r.d && !r.e);
        assert_eq!(r.witness, None);
        let r = characterize_alc(&sp, PointSubset::EMPTY);
        assert!(r.all_agree() && r.a);
    }

    #[test]
    fn characterize_alo_examples() {
        let sp = ex37();
        let r = characterize_alo(&sp, set(&sp, "a c d"));
        assert!(r.a && r.b && r.c && r.d && r.e);
        let r = characterize_alo(&sp, sp.full());
        assert!(r.a && r.b && r.c && r.d && r.e);
        let r = characterize_alo(&sp, set(&sp, "b c d"));
        assert!(!r.a && !r.b && !r.c && !r.d && !r.e);
    }

    #[test]
    fn record_rendering() {
        let sp = ex39();
        let r = characterize_alc(&sp, set(&sp, "a c"));
        assert_eq!(r.render(&sp), "a: true\nb: true {a,b,c}\nc: true\nd: true\ne: true\n");
    }

    #[test]
    fn disjoint_witness_examples() {
        let sp = ex37();
        let w = LCWitness {
            open: set(&sp, "b"),
            closed: sp.full(),
            variant: LCVariant::ALC,
        };
        assert_eq!(disjoint_aclosed_witness(&sp, &w).unwrap(), set(&sp, "a c d"));
        let w = LCWitness {
            open: sp.full(),
            closed: sp.full(),
            variant: LCVariant::ALC,
        };
        assert_eq!(disjoint_aclosed_witness(&sp, &w).unwrap(), PointSubset::EMPTY);
        let sp = ex39();
        let w = LCWitness {
            open: set(&sp, "a b c"),
            closed: set(&sp, "a c d"),
            variant: LCVariant::ALC,
        };
        assert_eq!(disjoint_aclosed_witness(&sp, &w).unwrap(), set(&sp, "d"));
        let bad = LCWitness {
            open: set(&sp, "c"),
            closed: sp.full(),
            variant: LCVariant::ALC,
        };
        assert!(matches!(
            disjoint_aclosed_witness(&sp, &bad),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn converse_fails_examples() {
        let sp = ex37();
        assert!(converse_fails_check(&sp, set(&sp, "a")));
        assert!(!converse_fails_check(&sp, PointSubset::EMPTY));
        let sp = ex39();
        assert!(!converse_fails_check(&sp, set(&sp, "a c")));
    }

    #[test]
    fn interpolation_examples() {
        let sp = ex37();
        assert_eq!(
            interpolation_witness(&sp, set(&sp, "b"), set(&sp, "a c d")).unwrap(),
            (sp.full(), PointSubset::EMPTY)
        );
        assert_eq!(
            interpolation_witness(&sp, PointSubset::EMPTY, PointSubset::EMPTY).unwrap(),
            (PointSubset::EMPTY, PointSubset::EMPTY)
        );
        let sp = ex39();
        assert_eq!(
            interpolation_witness(&sp, set(&sp, "a b"), set(&sp, "a c d")).unwrap(),
            (set(&sp, "a b"), set(&sp, "a c d"))
        );
        assert!(matches!(
            interpolation_witness(&sp, set(&sp, "c"), set(&sp, "c")),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            interpolation_witness(&sp, set(&sp, "a"), set(&sp, "a")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn sandwich_examples() {
        let sp = ex39();
        assert_eq!(
            sandwich_witness(&sp, set(&sp, "c"), set(&sp, "a c")).unwrap(),
            set(&sp, "c")
        );
        let h = set(&sp, "a c");
        assert_eq!(sandwich_witness(&sp, h, h).unwrap(), h);
        let sp = ex37();
        assert_eq!(
            sandwich_witness(&sp, PointSubset::EMPTY, set(&sp, "b")).unwrap(),
            PointSubset::EMPTY
        );
        assert!(matches!(
            sandwich_witness(&sp, set(&sp, "a"), set(&sp, "a")),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            sandwich_witness(&sp, set(&sp, "a"), set(&sp, "b")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn density_examples() {
        let sp = ex39();
        assert!(is_variant_dense(&sp, Variant::AOpen, set(&sp, "a b")).unwrap());
        for v in [Variant::Open, Variant::AOpen, Variant::EOpen] {
            assert!(is_variant_dense(&sp, v, sp.full()).unwrap());
        }
        let sp = ex37();
        assert!(!is_variant_dense(&sp, Variant::AOpen, set(&sp, "b")).unwrap());
    }

    #[test]
    fn submaximal_examples() {
        assert!(is_variant_submaximal(&ex39(), Variant::AOpen).unwrap());
        let d = FiniteSpace::discrete(3);
        for v in [Variant::Open, Variant::AOpen, Variant::EOpen] {
            assert!(is_variant_submaximal(&d, v).unwrap());
        }
        assert!(!is_variant_submaximal(&FiniteSpace::indiscrete(2), Variant::AOpen).unwrap());
    }

    #[test]
    fn variant_space_examples() {
        assert!(is_variant_space(&a_space(), Variant::AOpen));
        let d = FiniteSpace::discrete(3);
        assert!(is_variant_space(&d, Variant::AOpen) && is_variant_space(&d, Variant::EOpen));
        assert!(!is_variant_space(&ex39(), Variant::AOpen));
    }

    #[test]
    fn separation_examples() {
        let sp = ex39();
        assert!(are_a_separated(&sp, set(&sp, "a"), set(&sp, "b")));
        assert!(are_a_separated(&sp, PointSubset::EMPTY, set(&sp, "a c")));
        assert!(!are_a_separated(&sp, set(&sp, "a"), set(&sp, "c")));
    }

    #[test]
    fn separated_union_examples() {
        let sp = ex39();
        let w = separated_union_witness(&sp, set(&sp, "a"), set(&sp, "b")).unwrap();
        assert_eq!(w.set(), set(&sp, "a b"));
        assert!(w.is_valid(&sp));
        let w = separated_union_witness(&sp, PointSubset::EMPTY, PointSubset::EMPTY).unwrap();
        assert_eq!(w.set(), PointSubset::EMPTY);
        let w = separated_union_witness(&sp, set(&sp, "c"), set(&sp, "d")).unwrap();
        assert_eq!(w.set(), set(&sp, "c d"));
        assert!(matches!(
            separated_union_witness(&sp, set(&sp, "a"), set(&sp, "c")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn product_witness_examples() {
        let d = FiniteSpace::discrete(2);
        let (p, w) = product_lc_witness(&d, &d, PointSubset::singleton(0), PointSubset::singleton(1)).unwrap();
        assert_eq!(w.set(), PointSubset::singleton(1));
        assert_eq!(p.format_set(w.set()), "{a×b}");

        let x = ex37();
        let (p, w) = product_lc_witness(&x, &x, x.full(), x.full()).unwrap();
        assert_eq!(p.n(), 16);
        assert_eq!(w.set(), p.full());

        let s = FiniteSpace::sierpinski();
        let (p, w) = product_lc_witness(&x, &s, set(&x, "b"), s.full()).unwrap();
        assert_eq!(p.n(), 8);
        assert_eq!(w.set(), product_subset(set(&x, "b"), s.full(), 2));
        assert!(is_lc(&p, LCVariant::ALC, w.set()));

        assert!(matches!(
            product_lc_witness(&x, &s, set(&x, "a"), s.full()),
            Err(Error::Precondition(_))
        ));
    }
}
