use finitop::{are_homeomorphic, canonical_form, enumerate_topologies, Error};

#[test]
fn six_point_labeled_count() {
    assert_eq!(enumerate_topologies(6, false).unwrap().count(), 209_527);
}

#[test]
fn homeomorphism_class_counts() {
    let counts: Vec<usize> = (1..=7).map(|n| enumerate_topologies(n, true).unwrap().count()).collect();
    assert_eq!(counts, [1, 3, 9, 33, 139, 718, 4535]);
}

#[test]
fn representatives_are_canonical_and_distinct() {
    let reps: Vec<_> = enumerate_topologies(5, true).unwrap().collect();
    for (i, x) in reps.iter().enumerate() {
        assert_eq!(&canonical_form(x), x);
        assert!(reps[i + 1..].iter().all(|y| !are_homeomorphic(x, y)));
    }
}

#[test]
fn every_labeled_space_has_a_representative() {
    let reps: Vec<_> = enumerate_topologies(4, true).unwrap().collect();
    for space in enumerate_topologies(4, false).unwrap() {
        let c = canonical_form(&space);
        assert_eq!(reps.iter().filter(|r| **r == c).count(), 1);
    }
}

#[test]
fn enumeration_bounds() {
    assert!(matches!(enumerate_topologies(7, false), Err(Error::BoundExceeded { n: 7, .. })));
    assert!(matches!(enumerate_topologies(8, true), Err(Error::BoundExceeded { n: 8, .. })));
    assert!(matches!(enumerate_topologies(0, false), Err(Error::BoundExceeded { n: 0, .. })));
}
