mod common;

use std::collections::{HashMap, HashSet};

use sigmapi::decide::Decider;
use sigmapi::oracle::Oracle;
use sigmapi::syntax::{parse_term, parse_type};
use sigmapi::types::{types_of_size, types_up_to, Ty};
use sigmapi::GeneratorGraph;

fn ty(s: &str) -> Ty {
    parse_type(s).unwrap()
}

#[test]
fn type_counts_by_size() {
    assert_eq!(types_of_size(1).len(), 2);
    assert_eq!(types_of_size(3).len(), 8);
    assert_eq!(types_of_size(5).len(), 64);
    assert_eq!(types_up_to(6).len(), 74);
    assert!(types_of_size(4).is_empty());
}

#[test]
fn enumeration_matches_the_reference() {
    let mut o = Oracle::new(GeneratorGraph::empty());
    for (x, a) in common::type_pairs(5) {
        let reference: HashSet<_> = common::terms(&x, &a).into_iter().collect();
        let library = o.enumerate(&x, &a).unwrap();
        assert_eq!(library.len(), reference.len(), "{x} -> {a}");
        assert!(library.iter().all(|t| reference.contains(t)), "{x} -> {a}");
        assert_eq!(o.count(&x, &a).unwrap(), reference.len() as u128);
    }
}

#[test]
fn total_term_count_up_to_size_six() {
    let mut o = Oracle::new(GeneratorGraph::empty());
    let (mut reference, mut counted) = (0usize, 0u128);
    for (x, a) in common::type_pairs(6) {
        reference += common::terms(&x, &a).len();
        counted += o.count(&x, &a).unwrap();
    }
    assert_eq!(reference, 675_988);
    assert_eq!(counted, 675_988);
}

#[test]
fn partitions_match_the_reference() {
    let mut o = Oracle::new(GeneratorGraph::empty());
    for (x, a) in common::type_pairs(5) {
        let reference = common::classes(&x, &a);
        let p = o.partition(&x, &a).unwrap();
        assert_eq!(p.classes, reference.count, "{x} -> {a}");
        let mut pairing: HashMap<u32, usize> = HashMap::new();
        for (k, t) in p.terms.iter().enumerate() {
            let r = reference.of(t);
            assert_eq!(*pairing.entry(p.class[k]).or_insert(r), r, "{t} : {x} -> {a}");
        }
    }
}

/// Every term against one representative of every class.
#[test]
fn decide_matches_the_reference_up_to_size_five() {
    for (x, a) in common::type_pairs(5) {
        let reference = common::classes(&x, &a);
        let mut d = Decider::new();
        let ids: Vec<_> = reference.terms.iter().map(|t| d.arena.import(t, &x, &a)).collect();
        let mut reps = vec![None; reference.count];
        for (k, &c) in reference.class.iter().enumerate() {
            reps[c].get_or_insert(k);
        }
        for (i, &id) in ids.iter().enumerate() {
            for (c, rep) in reps.iter().enumerate() {
                let r = rep.expect("classes are inhabited");
                assert_eq!(
                    d.equal(id, ids[r]),
                    Some(reference.class[i] == c),
                    "{} vs {} : {x} -> {a}",
                    reference.terms[i],
                    reference.terms[r]
                );
            }
        }
    }
}

#[test]
fn small_homsets() {
    let c = common::classes(&ty("1*1"), &ty("1+1"));
    assert_eq!((c.terms.len(), c.count), (10, 2));
    let c = common::classes(&ty("0"), &ty("1+1"));
    assert_eq!(c.count, 1);
    assert_eq!(c.terms.len(), 5);
    let o = Oracle::new(GeneratorGraph::empty());
    let class = o.class_of(&parse_term("?").unwrap(), &ty("0"), &ty("1+1")).unwrap();
    assert_eq!(class.len(), 5);
    let c = common::classes(&ty("0*0"), &ty("0"));
    assert_eq!((c.terms.len(), c.count), (2, 2));
    let c = common::classes(&ty("0*0"), &ty("0+1"));
    assert_eq!(c.count, 1);
}

#[test]
fn class_search_matches_the_reference() {
    let o = Oracle::new(GeneratorGraph::empty());
    for (x, a) in common::type_pairs(3) {
        let reference = common::classes(&x, &a);
        for t in &reference.terms {
            let class = o.class_of(t, &x, &a).unwrap();
            let expected = reference.terms.iter().filter(|u| reference.same(t, u)).count();
            assert_eq!(class.len(), expected, "{t} : {x} -> {a}");
        }
    }
}
