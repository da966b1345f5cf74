//! Recomputes the reference examples as one text document so it can be
//! compared byte for byte with the stored listing.

use std::fmt::Write;

use finitop::{
    converse_fails_check, is_lc, is_variant_closed, is_variant_space, lc_family, parse_set, parse_space,
    variant_closed_family, variant_open_family, FiniteSpace, LCVariant, Result, Variant,
};

pub const GOLDEN: &str = include_str!("reference_golden.txt");

struct Doc {
    out: String,
}

impl Doc {
    fn section(&mut self, title: &str, space: &FiniteSpace) {
        let opens: Vec<String> = space.opens().iter().map(|&u| space.format_set(u)).collect();
        let _ = writeln!(self.out, "## {title}\ntopology: {}", opens.join(" "));
    }

    fn family(&mut self, space: &FiniteSpace, label: &str, family: &finitop::SetFamily) {
        let _ = write!(self.out, "{label}:\n{}", space.format_family(family));
    }

    fn lc(&mut self, space: &FiniteSpace, l: LCVariant) {
        self.family(space, l.symbol(), lc_family(space, l));
    }

    fn memberships(&mut self, space: &FiniteSpace, set: &str, lcs: &[LCVariant]) -> Result<()> {
        let a = parse_set(space, set)?;
        let parts: Vec<String> = lcs.iter().map(|&l| format!("{l} {}", is_lc(space, l, a))).collect();
        let _ = writeln!(self.out, "{set}: {}", parts.join(", "));
        Ok(())
    }
}

fn load(text: &str) -> Result<FiniteSpace> {
    parse_space(text)
}

/// The document the stored listing is compared against.
pub fn compute() -> Result<String> {
    use LCVariant::*;
    let mut doc = Doc { out: String::new() };

    let first = load("points: a b c d\nopen: a\nopen: b\nopen: a b\nopen: a c d\n")?;
    doc.section("four-point space", &first);
    for l in [ALC, ELC, AlphaLC, FLC] {
        doc.lc(&first, l);
    }
    doc.memberships(&first, "{a}", &[FLC, ELC, AlphaLC, ALC])?;

    let second = load("points: a b c d\nopen: a\nopen: b\nopen: a b\nopen: a c\nopen: a b c\nopen: a b d\n")?;
    doc.section("locally closed everywhere", &second);
    doc.lc(&second, LC);
    doc.lc(&second, ALC);
    doc.memberships(&second, "{a}", &[LC, ALC])?;

    let third = load("points: a b c d\nopen: a\nopen: b\nopen: a b\n")?;
    doc.section("a-locally closed everywhere", &third);
    doc.lc(&third, LC);
    doc.lc(&third, ALC);
    doc.memberships(&third, "{c}", &[ALC, LC])?;

    let fourth = load("points: a b c d\nopen: a\nopen: b c d\n")?;
    doc.section("a-space", &fourth);
    doc.family(&fourth, "aO", variant_open_family(&fourth, Variant::AOpen));
    let _ = writeln!(doc.out, "a-space: {}", is_variant_space(&fourth, Variant::AOpen));

    doc.section("converse failure", &first);
    doc.family(&first, "aO", variant_open_family(&first, Variant::AOpen));
    doc.family(&first, "aC", variant_closed_family(&first, Variant::AOpen));
    doc.lc(&first, ALC);
    let (a, f) = (parse_set(&first, "{a}")?, parse_set(&first, "{b}")?);
    let _ = writeln!(
        doc.out,
        "A = {}, F = {}: F aC {}, A ∩ F = {}, A aLC {}, fails {}",
        first.format_set(a),
        first.format_set(f),
        is_variant_closed(&first, Variant::AOpen, f),
        first.format_set(a.intersection(f)),
        is_lc(&first, ALC, a),
        converse_fails_check(&first, a),
    );
    Ok(doc.out)
}
