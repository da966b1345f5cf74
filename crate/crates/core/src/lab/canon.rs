//! Canonical relabeling of finite spaces.
//!
//! Points are first sorted by the homeomorphism invariant
//! `(|U_x| ascending, |cl{x}| descending)`; the canonical form is the relabeling,
//! among those respecting that order, whose open family is least when listed in
//! canonical set order and compared member by member. Swapping two points with
//! identical relations to all others ("twins") is an automorphism, so only
//! distinct arrangements of twin classes are tried.

use std::cmp::Reverse;

use crate::space::FiniteSpace;
use crate::subset::PointSubset;

type Signature = (usize, Reverse<usize>);

fn signatures(rows: &[PointSubset]) -> Vec<Signature> {
    (0..rows.len())
        .map(|x| {
            let below = rows.iter().filter(|r| r.contains(x)).count();
            (rows[x].len(), Reverse(below))
        })
        .collect()
}

fn are_twins(rows: &[PointSubset], x: usize, y: usize) -> bool {
    let pair = PointSubset::singleton(x).insert(y);
    rows[x].difference(pair) == rows[y].difference(pair)
        && rows[x].contains(y) == rows[y].contains(x)
        && rows
            .iter()
            .enumerate()
            .all(|(z, r)| pair.contains(z) || r.contains(x) == r.contains(y))
}

/// Lexicographic successor permutation; `false` once the last one is reached.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

struct Block {
    /// Members of each twin class, ascending.
    classes: Vec<Vec<usize>>,
    /// Twin-class label per slot; permuted in place to walk arrangements.
    labels: Vec<usize>,
}

impl Block {
    fn assign(&self, order: &mut Vec<usize>) {
        let mut used = vec![0usize; self.classes.len()];
        for &label in &self.labels {
            order.push(self.classes[label][used[label]]);
            used[label] += 1;
        }
    }
}

fn blocks(rows: &[PointSubset]) -> Vec<Block> {
    let sigs = signatures(rows);
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&x| sigs[x]);
    let mut blocks: Vec<Block> = Vec::new();
    for run in order.chunk_by(|&x, &y| sigs[x] == sigs[y]) {
        let mut points = run.to_vec();
        points.sort_unstable();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for p in points {
            match classes.iter_mut().find(|c| are_twins(rows, c[0], p)) {
                Some(c) => c.push(p),
                None => classes.push(vec![p]),
            }
        }
        let labels = classes
            .iter()
            .enumerate()
            .flat_map(|(label, c)| std::iter::repeat_n(label, c.len()))
            .collect();
        blocks.push(Block { classes, labels });
    }
    blocks
}

fn family_key(opens: &[PointSubset], perm: &[usize], buf: &mut Vec<u32>) {
    buf.clear();
    buf.extend(opens.iter().map(|u| u.permute(perm).canonical_key()));
    buf.sort_unstable();
}

/// Best permutation (`perm[old] = new`) over all admissible relabelings.
fn canonical_perm(rows: &[PointSubset], opens: &[PointSubset]) -> Vec<usize> {
    let n = rows.len();
    let mut blocks = blocks(rows);
    let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
    let mut buf = Vec::with_capacity(opens.len());
    let mut perm = vec![0usize; n];
    loop {
        let mut order = Vec::with_capacity(n);
        for b in &blocks {
            b.assign(&mut order);
        }
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        family_key(opens, &perm, &mut buf);
        if best.as_ref().is_none_or(|(k, _)| buf < *k) {
            best = Some((buf.clone(), perm.clone()));
        }
        // odometer over blocks, last block fastest
        let mut advanced = false;
        for b in blocks.iter_mut().rev() {
            if next_permutation(&mut b.labels) {
                advanced = true;
                break;
            }
            b.labels.sort_unstable();
        }
        if !advanced {
            break;
        }
    }
    best.map(|(_, p)| p).unwrap_or_default()
}

/// The canonical relabeling of `space`; point names keep their positions.
///
/// Idempotent, invariant under relabeling, and equal for two spaces exactly
/// when they are homeomorphic.
pub fn canonical_form(space: &FiniteSpace) -> FiniteSpace {
    let rows: Vec<PointSubset> = (0..space.n()).map(|x| space.min_open_nbhd(x)).collect();
    let perm = canonical_perm(&rows, space.opens().members());
    space.permuted(&perm)
}

pub fn are_homeomorphic(a: &FiniteSpace, b: &FiniteSpace) -> bool {
    a.n() == b.n() && canonical_form(a).opens() == canonical_form(b).opens()
}

/// Whether the up-set topology of `rows` is already in canonical form.
pub(crate) fn is_canonical_rows(rows: &[PointSubset]) -> bool {
    let sigs = signatures(rows);
    if sigs.windows(2).any(|w| w[0] > w[1]) {
        return false;
    }
    let n = rows.len();
    let opens: Vec<PointSubset> = crate::subset::all_subsets(n)
        .filter(|s| s.points().all(|y| rows[y].is_subset(*s)))
        .collect();
    let perm = canonical_perm(rows, &opens);
    let mut mine = Vec::new();
    let identity: Vec<usize> = (0..n).collect();
    family_key(&opens, &identity, &mut mine);
    let mut best = Vec::new();
    family_key(&opens, &perm, &mut best);
    mine == best
}
