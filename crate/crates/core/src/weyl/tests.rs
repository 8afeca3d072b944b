use std::collections::{HashMap, HashSet, VecDeque};

use proptest::prelude::*;

use super::*;
use crate::partition::Partition;

fn specs_up_to(rank: usize) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for n in 1..=rank {
        out.push(GroupSpec::a(n).unwrap());
        out.push(GroupSpec::bc(n).unwrap());
        if n >= 2 {
            out.push(GroupSpec::d(n).unwrap());
        }
    }
    out
}

fn el(spec: GroupSpec, window: &[i32]) -> WeylElement {
    WeylElement::new(spec, window.to_vec()).unwrap()
}

/// Word-length oracle: breadth-first distances in the Cayley graph.
fn cayley_distances(spec: GroupSpec) -> HashMap<WeylElement, usize> {
    let gens = generators(spec);
    let mut dist = HashMap::new();
    let mut queue = VecDeque::new();
    let e = WeylElement::identity(spec);
    dist.insert(e.clone(), 0);
    queue.push_back(e);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        for s in &gens {
            let y = x.multiply(s).unwrap();
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

#[test]
fn spec_validation() {
    assert!(GroupSpec::a(0).is_err());
    assert!(GroupSpec::d(1).is_err());
    assert_eq!(GroupSpec::a(2).unwrap().order(), 6);
    assert_eq!(GroupSpec::bc(3).unwrap().order(), 48);
    assert_eq!(GroupSpec::d(4).unwrap().order(), 192);
}

#[test]
fn element_validation() {
    let a2 = GroupSpec::a(2).unwrap();
    let bc2 = GroupSpec::bc(2).unwrap();
    let d2 = GroupSpec::d(2).unwrap();
    assert!(WeylElement::new(a2, vec![1, 2]).is_err());
    assert!(WeylElement::new(a2, vec![1, -2, 3]).is_err());
    assert!(WeylElement::new(bc2, vec![1, 1]).is_err());
    assert!(WeylElement::new(d2, vec![-1, 2]).is_err());
    assert!(WeylElement::new(d2, vec![-1, -2]).is_ok());
}

#[test]
fn generator_examples() {
    let a2 = GroupSpec::a(2).unwrap();
    let gens = generators(a2);
    assert_eq!(gens[0].window(), &[2, 1, 3]);
    assert_eq!(gens[1].window(), &[1, 3, 2]);

    let bc2 = GroupSpec::bc(2).unwrap();
    let gens = generators(bc2);
    assert_eq!(gens[0].window(), &[2, 1]);
    assert_eq!(gens[1].window(), &[1, -2]);

    let d2 = GroupSpec::d(2).unwrap();
    assert_eq!(generators(d2)[1].window(), &[-2, -1]);

    for spec in specs_up_to(4) {
        assert!(generators(spec).iter().all(|s| s.length() == 1), "{spec}");
    }
}

#[test]
fn generated_group_orders() {
    // Closure under multiplication from the generators.
    for (spec, expected) in [
        (GroupSpec::bc(2).unwrap(), 8),
        (GroupSpec::d(2).unwrap(), 4),
        (GroupSpec::a(2).unwrap(), 6),
        (GroupSpec::d(3).unwrap(), 24),
    ] {
        assert_eq!(cayley_distances(spec).len(), expected, "{spec}");
    }
}

#[test]
fn braid_relation_in_s3() {
    let a2 = GroupSpec::a(2).unwrap();
    let s1 = WeylElement::generator(a2, 1).unwrap();
    let s2 = WeylElement::generator(a2, 2).unwrap();
    let lhs = s1.multiply(&s2).unwrap().multiply(&s1).unwrap();
    let rhs = s2.multiply(&s1).unwrap().multiply(&s2).unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(lhs.window(), &[3, 2, 1]);
    // (s1 s2)(1) = s1(s2(1)) = 2
    assert_eq!(s1.multiply(&s2).unwrap().window(), &[2, 3, 1]);
}

#[test]
fn identity_and_inverse() {
    for spec in specs_up_to(3) {
        let e = WeylElement::identity(spec);
        for w in all_elements(spec) {
            assert!(w.multiply(&w.inverse()).unwrap().is_identity());
            assert_eq!(e.multiply(&w).unwrap(), w);
        }
    }
}

#[test]
fn spec_mismatch_is_an_error() {
    let a = WeylElement::identity(GroupSpec::bc(2).unwrap());
    let b = WeylElement::identity(GroupSpec::d(2).unwrap());
    assert!(matches!(a.multiply(&b), Err(Error::SpecMismatch { .. })));
}

#[test]
fn length_examples() {
    let a2 = GroupSpec::a(2).unwrap();
    let c2 = GroupSpec::bc(2).unwrap();
    assert_eq!(WeylElement::identity(a2).length(), 0);
    assert_eq!(longest_element(a2).length(), 3);
    assert_eq!(longest_element(a2).window(), &[3, 2, 1]);
    assert_eq!(longest_element(c2).length(), 4);
    assert_eq!(longest_element(c2).window(), &[-1, -2]);
}

#[test]
fn length_matches_word_length_oracle() {
    for spec in specs_up_to(4) {
        let dist = cayley_distances(spec);
        assert_eq!(dist.len() as u128, spec.order());
        for (w, d) in dist {
            assert_eq!(w.length(), d, "{spec} {w}");
        }
    }
}

#[test]
fn longest_element_is_maximal_and_unique() {
    for spec in specs_up_to(4) {
        let els = all_elements(spec);
        let max = els.iter().map(WeylElement::length).max().unwrap();
        let tops: Vec<_> = els.iter().filter(|w| w.length() == max).collect();
        assert_eq!(tops.len(), 1, "{spec}");
        assert_eq!(*tops[0], longest_element(spec), "{spec}");
        let n_pos: usize = degrees(spec).iter().map(|d| d - 1).sum();
        assert_eq!(max, n_pos, "{spec}");
        assert_eq!(max, spec.num_positive_roots());
    }
}

#[test]
fn longest_element_of_c2_is_central() {
    let c2 = GroupSpec::bc(2).unwrap();
    let w0 = longest_element(c2);
    for w in all_elements(c2) {
        assert_eq!(w0.multiply(&w).unwrap(), w.multiply(&w0).unwrap());
    }
}

#[test]
fn exhaustive_length_invariants() {
    for spec in specs_up_to(4) {
        let gens = generators(spec);
        for w in all_elements(spec) {
            let l = w.length();
            for s in &gens {
                let sl = s.multiply(&w).unwrap().length();
                assert!(sl + 1 == l || sl == l + 1, "{spec} {w}");
            }
            assert_eq!(w.inverse().length(), l);
            let word = w.reduced_word();
            assert_eq!(word.len(), l);
            assert_eq!(WeylElement::from_word(spec, &word).unwrap(), w);
        }
    }
}

#[test]
fn reduced_word_examples() {
    let a2 = GroupSpec::a(2).unwrap();
    assert!(WeylElement::identity(a2).reduced_word().is_empty());
    assert_eq!(WeylElement::generator(a2, 2).unwrap().reduced_word(), vec![2]);
    let w0 = longest_element(a2);
    let word = w0.reduced_word();
    assert_eq!(word, vec![1, 2, 1]);
    assert_eq!(WeylElement::from_word(a2, &word).unwrap().window(), &[3, 2, 1]);
}

#[test]
fn reflection_rep_examples() {
    let c2 = GroupSpec::bc(2).unwrap();
    assert_eq!(WeylElement::identity(c2).reflection_rep(), vec![vec![1, 0], vec![0, 1]]);
    let s2 = WeylElement::generator(c2, 2).unwrap();
    assert_eq!(s2.reflection_rep(), vec![vec![1, 0], vec![0, -1]]);

    let a2 = GroupSpec::a(2).unwrap();
    assert_eq!(WeylElement::identity(a2).reflection_rep(), vec![vec![1, 0], vec![0, 1]]);
    // 3-cycle: rho - I is [[-2,-1],[1,-1]] in the simple-root basis, det 3.
    let c = el(a2, &[2, 3, 1]);
    let mut m = c.reflection_rep();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= 1;
    }
    let det2 = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    assert_eq!(det2, 3);
    assert_eq!(int_det(&m), 3);
}

#[test]
fn reflection_rep_is_homomorphism_exhaustive() {
    for spec in specs_up_to(3) {
        let els = all_elements(spec);
        for a in &els {
            for b in &els {
                let ab = a.multiply(b).unwrap();
                assert_eq!(ab.reflection_rep(), mat_mul(&a.reflection_rep(), &b.reflection_rep()));
            }
        }
    }
}

#[test]
fn elliptic_examples() {
    let a2 = GroupSpec::a(2).unwrap();
    assert!(!WeylElement::identity(a2).is_elliptic());
    assert!(el(a2, &[2, 3, 1]).is_elliptic());
    assert!(!el(a2, &[2, 1, 3]).is_elliptic());
    assert!(longest_element(GroupSpec::bc(2).unwrap()).is_elliptic());
}

fn ct(parts: &[usize]) -> ClassLabel {
    ClassLabel::CycleType(Partition::new(parts.to_vec()))
}

fn sct(pos: &[usize], neg: &[usize]) -> ClassLabel {
    ClassLabel::SignedCycleType {
        positive: Partition::new(pos.to_vec()),
        negative: Partition::new(neg.to_vec()),
    }
}

#[test]
fn classes_of_s3() {
    let classes = conjugacy_classes(GroupSpec::a(2).unwrap()).unwrap();
    let labels: Vec<_> = classes.iter().map(|c| c.label().unwrap().clone()).collect();
    assert_eq!(labels, vec![ct(&[1, 1, 1]), ct(&[2, 1]), ct(&[3])]);
    let sizes: Vec<_> = classes.iter().map(ConjugacyClass::size).collect();
    assert_eq!(sizes, vec![1, 3, 2]);
    let dc: Vec<_> = classes.iter().map(ConjugacyClass::min_length).collect();
    assert_eq!(dc, vec![0, 1, 2]);
}

#[test]
fn classes_of_c2() {
    let classes = conjugacy_classes(GroupSpec::bc(2).unwrap()).unwrap();
    let labels: HashSet<_> = classes.iter().map(|c| c.label().unwrap().clone()).collect();
    let expected: HashSet<_> = [
        sct(&[1, 1], &[]),
        sct(&[2], &[]),
        sct(&[1], &[1]),
        sct(&[], &[2]),
        sct(&[], &[1, 1]),
    ]
    .into_iter()
    .collect();
    assert_eq!(labels, expected);
    for c in &classes {
        let ClassLabel::SignedCycleType { positive, .. } = c.label().unwrap() else {
            unreachable!()
        };
        assert_eq!(c.is_elliptic(), positive.is_empty(), "{}", c.label().unwrap());
        assert_eq!(
            c.is_elliptic(),
            c.elements().iter().all(WeylElement::is_elliptic)
        );
    }
    // Coxeter class: d_C = 2 with two minimal elements s1 s2 and s2 s1.
    let cox = classes.iter().find(|c| c.label() == Some(&sct(&[], &[2]))).unwrap();
    assert_eq!(cox.min_length(), 2);
    assert_eq!(cox.minimal_elements().len(), 2);
}

#[test]
fn class_structure_invariants() {
    for spec in specs_up_to(4) {
        let classes = conjugacy_classes(spec).unwrap();
        let total: usize = classes.iter().map(ConjugacyClass::size).sum();
        assert_eq!(total as u128, spec.order());
        let els = all_elements(spec);
        for c in &classes {
            for x in c.elements() {
                assert_eq!(x.is_elliptic(), c.is_elliptic(), "{spec}: elliptic is a class function");
                assert!(c.minimal_elements().iter().all(|w| w.length() == c.min_length()));
                assert!(x.length() >= c.min_length());
            }
            // conjugation by every group element stays inside the class
            let x = c.representative();
            for g in els.iter().step_by(7) {
                let y = g.multiply(x).unwrap().multiply(&g.inverse()).unwrap();
                assert!(c.contains(&y));
            }
        }
    }
}

#[test]
fn elliptic_classes_by_label() {
    for n in 1..=5 {
        for c in conjugacy_classes(GroupSpec::a(n).unwrap()).unwrap() {
            let ClassLabel::CycleType(p) = c.label().unwrap() else { unreachable!() };
            assert_eq!(c.is_elliptic(), p.len() == 1, "A{n} {p}");
        }
        for c in conjugacy_classes(GroupSpec::bc(n).unwrap()).unwrap() {
            let ClassLabel::SignedCycleType { positive, .. } = c.label().unwrap() else {
                unreachable!()
            };
            assert_eq!(c.is_elliptic(), positive.is_empty());
        }
    }
}

#[test]
fn d_classes_are_unlabeled() {
    let classes = conjugacy_classes(GroupSpec::d(3).unwrap()).unwrap();
    assert!(classes.iter().all(|c| c.label().is_none()));
    // W(D3) = S4 has five classes.
    assert_eq!(classes.len(), 5);
}

#[test]
fn rank_cap_enforced() {
    let spec = GroupSpec::a(8).unwrap();
    assert_eq!(
        conjugacy_classes(spec).unwrap_err(),
        Error::RankOverCap { rank: 8, cap: 7 }
    );
    assert!(conjugacy_classes_capped(GroupSpec::a(3).unwrap(), 2).is_err());
}

#[test]
fn degree_examples() {
    assert_eq!(degrees(GroupSpec::a(2).unwrap()), vec![2, 3]);
    assert_eq!(degrees(GroupSpec::bc(2).unwrap()), vec![2, 4]);
    assert_eq!(degrees(GroupSpec::d(4).unwrap()), vec![2, 4, 6, 4]);
    for spec in specs_up_to(6) {
        let prod: u128 = degrees(spec).iter().map(|&d| d as u128).product();
        assert_eq!(prod, spec.order(), "{spec}");
    }
}

#[test]
fn poincare_examples() {
    let p = poincare_polynomial(GroupSpec::a(2).unwrap()).unwrap();
    assert_eq!(p.coeffs(), &[1, 2, 2, 1]);
    let p = poincare_polynomial(GroupSpec::bc(2).unwrap()).unwrap();
    assert_eq!(p.coeffs(), &[1, 2, 2, 2, 1]);
    assert_eq!(p.eval_i128(1), 8);
}

#[test]
fn poincare_identity_small_ranks() {
    for spec in specs_up_to(4) {
        assert_eq!(poincare_polynomial(spec).unwrap(), poincare_product(spec), "{spec}");
    }
}

fn brute_force_gl_order(n: usize, p: u64) -> u64 {
    let total = p.pow((n * n) as u32);
    (0..total)
        .filter(|&code| {
            let mut m: Vec<Vec<i64>> = vec![vec![0; n]; n];
            let mut c = code;
            for row in m.iter_mut() {
                for x in row.iter_mut() {
                    *x = (c % p) as i64;
                    c /= p;
                }
            }
            int_det(&m).rem_euclid(p as i128) != 0
        })
        .count() as u64
}

#[test]
fn order_formulas() {
    assert_eq!(brute_force_gl_order(2, 2), 6);
    assert_eq!(brute_force_gl_order(3, 2), 168);
    assert_eq!(gl_order(2, 2).unwrap(), 6u32.into());
    assert_eq!(gl_order(3, 2).unwrap(), 168u32.into());
    assert_eq!(gl_order(2, 3).unwrap(), brute_force_gl_order(2, 3).into());
    assert_eq!(chevalley_order(GroupSpec::bc(2).unwrap(), 3).unwrap(), 51840u32.into());
    // |SL_2(F_3)| = 24
    assert_eq!(chevalley_order(GroupSpec::a(1).unwrap(), 3).unwrap(), 24u32.into());
    assert_eq!(chevalley_order(GroupSpec::a(1).unwrap(), 6), Err(Error::NotPrimePower(6)));
    assert!(gl_order(2, 1).is_err());
    assert!(is_prime_power(8) && is_prime_power(9) && !is_prime_power(12));
}

#[test]
fn symmetric_embedding_roundtrip() {
    let c2 = GroupSpec::bc(2).unwrap();
    assert_eq!(WeylElement::generator(c2, 2).unwrap().symmetric_embedding().unwrap(), vec![1, 3, 2, 4]);
    assert_eq!(longest_element(c2).symmetric_embedding().unwrap(), vec![4, 3, 2, 1]);
    for w in all_elements(GroupSpec::bc(3).unwrap()) {
        let perm = w.symmetric_embedding().unwrap();
        assert_eq!(WeylElement::from_symmetric_embedding(3, &perm).unwrap(), w);
    }
    assert!(WeylElement::from_symmetric_embedding(2, &[2, 1, 3, 4]).is_err());
}

proptest! {
    #[test]
    fn homomorphism_random_pairs(seed_a in 0usize..3840, seed_b in 0usize..3840) {
        let spec = GroupSpec::bc(5).unwrap();
        let els = all_elements(spec);
        let (a, b) = (&els[seed_a], &els[seed_b]);
        let ab = a.multiply(b).unwrap();
        prop_assert_eq!(ab.reflection_rep(), mat_mul(&a.reflection_rep(), &b.reflection_rep()));
        prop_assert_eq!(ab.inverse(), b.inverse().multiply(&a.inverse()).unwrap());
    }

    #[test]
    fn type_a_homomorphism_random(code_a in 0usize..720, code_b in 0usize..720) {
        let spec = GroupSpec::a(5).unwrap();
        let els = all_elements(spec);
        let (a, b) = (&els[code_a], &els[code_b]);
        let ab = a.multiply(b).unwrap();
        prop_assert_eq!(ab.reflection_rep(), mat_mul(&a.reflection_rep(), &b.reflection_rep()));
    }
}
