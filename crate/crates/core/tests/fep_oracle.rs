//! The downset construction against a direct set-based recomputation.

use std::collections::BTreeSet;

use fepkit::algebra::FiniteResiduatedLattice;
use fepkit::classify::Class;
use fepkit::enumeration::enumerate_chains;
use fepkit::fep::{build_d, Mode, PartialSubalgebra};

type Set = BTreeSet<usize>;

struct Oracle {
    carrier: Vec<Set>,
    product: Vec<usize>,
}

fn oracle(a: &FiniteResiduatedLattice, b: &[usize], two_sided: bool) -> Oracle {
    let mut m: Set = b.iter().copied().chain([a.e()]).collect();
    loop {
        let next: Set = m.iter().flat_map(|&x| m.iter().map(move |&y| a.mul(x, y))).chain(m.iter().copied()).collect();
        if next == m {
            break;
        }
        m = next;
    }
    let mut contexts: BTreeSet<Set> = BTreeSet::new();
    for &x in &m {
        for &p in b {
            if two_sided {
                for &y in &m {
                    contexts.insert(m.iter().copied().filter(|&c| a.mul(a.mul(x, c), y) <= p).collect());
                }
            } else {
                contexts.insert(m.iter().copied().filter(|&c| a.mul(x, c) <= p).collect());
            }
        }
    }
    let mut d: BTreeSet<Set> = contexts.clone();
    d.insert(m.clone());
    loop {
        let mut next = d.clone();
        for x in &d {
            for y in &d {
                next.insert(x.intersection(y).copied().collect());
            }
        }
        if next == d {
            break;
        }
        d = next;
    }
    let closure = |x: &Set| -> Set {
        contexts.iter().filter(|s| x.is_subset(s)).fold(m.clone(), |acc, s| acc.intersection(s).copied().collect())
    };
    let mut carrier: Vec<Set> = d.into_iter().collect();
    carrier.sort_by_key(|s| s.len());
    let k = carrier.len();
    let mut product = vec![0; k * k];
    for i in 0..k {
        for j in 0..k {
            let xy: Set = carrier[i].iter().flat_map(|&x| carrier[j].iter().map(move |&y| a.mul(x, y))).collect();
            let c = closure(&xy);
            product[i * k + j] = carrier.iter().position(|s| *s == c).unwrap();
        }
    }
    Oracle { carrier, product }
}

fn subsets_with_constants(a: &FiniteResiduatedLattice) -> Vec<Vec<usize>> {
    let consts = [a.e(), a.f(), a.bot(), a.top()];
    let others: Vec<usize> = a.elements().filter(|x| !consts.contains(x)).collect();
    (0..1usize << others.len())
        .map(|mask| {
            let mut b: Vec<usize> = consts.to_vec();
            b.extend(others.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x));
            b.sort_unstable();
            b.dedup();
            b
        })
        .collect()
}

fn compare(class: Class, mode: Mode, bound: usize) -> usize {
    let mut instances = 0;
    for a in &enumerate_chains(bound, class) {
        for b in subsets_with_constants(a) {
            let pb = PartialSubalgebra::new(a, &b).unwrap();
            let d = build_d(&pb, mode).unwrap();
            let used = d.subset().elements().to_vec();
            let o = oracle(a, &used, mode == Mode::TwoSided);
            let lifted: Vec<Set> = d
                .carrier()
                .iter()
                .map(|s| s.iter().map(|i| d.monoid().element(i)).collect())
                .collect();
            assert_eq!(lifted, o.carrier, "{a:?} with B = {b:?}");
            assert_eq!(d.algebra().product_table(), o.product, "{a:?} with B = {b:?}");
            instances += 1;
        }
    }
    instances
}

#[test]
fn lukasiewicz_full_subset_gives_three_downsets() {
    let family = enumerate_chains(3, Class::IUL);
    let l3 = family.iter().find(|a| a.size() == 3 && a.e() == 2 && a.f() == 0 && a.mul(1, 1) == 0).unwrap();
    let o = oracle(l3, &[0, 1, 2], false);
    let expected: Vec<Set> = vec![[0].into(), [0, 1].into(), [0, 1, 2].into()];
    assert_eq!(o.carrier, expected);
    assert_eq!(o.product, l3.product_table());
    let d = build_d(&PartialSubalgebra::full(l3), Mode::Commutative).unwrap();
    assert_eq!(d.algebra(), l3);
}

#[test]
fn commutative_mode_matches_oracle() {
    assert!(compare(Class::UL, Mode::Commutative, 4) > 0);
}

#[test]
fn involutive_mode_matches_oracle() {
    assert!(compare(Class::IUL, Mode::Involutive, 5) > 0);
}

#[test]
fn two_sided_mode_matches_oracle() {
    assert!(compare(Class::HpsULStar, Mode::TwoSided, 4) > 0);
}
