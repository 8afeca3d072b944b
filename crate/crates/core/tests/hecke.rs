use std::collections::BTreeMap;

use bruhatkit::hecke::{hecke_mul, hecke_mul_with, t_basis, HeckeElement};
use bruhatkit::linalg::RationalField;
use bruhatkit::poly::Poly;
use bruhatkit::weyl::{all_elements, GroupSpec, WeylElement};
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

fn small_specs() -> Vec<GroupSpec> {
    vec![GroupSpec::a(1).unwrap(), GroupSpec::a(2).unwrap(), GroupSpec::bc(2).unwrap()]
}

#[test]
fn quadratic_relation_for_every_generator() {
    let mut specs = small_specs();
    specs.extend([GroupSpec::a(3).unwrap(), GroupSpec::bc(3).unwrap(), GroupSpec::d(4).unwrap()]);
    for spec in specs {
        let e = HeckeElement::one(spec);
        for i in 1..=spec.num_generators() {
            let ts = t_basis(&WeylElement::generator(spec, i).unwrap());
            let left = ts.checked_sub(&e.scale(&Poly::q())).unwrap();
            let right = &ts + &e;
            assert!(hecke_mul(&left, &right).unwrap().is_zero(), "{spec} s{i}");
        }
    }
}

#[test]
fn length_additive_products_are_basis_elements() {
    for spec in small_specs().into_iter().chain([GroupSpec::a(3).unwrap()]) {
        let elems = all_elements(spec);
        for v in &elems {
            for w in &elems {
                let vw = v.multiply(w).unwrap();
                if vw.length() == v.length() + w.length() {
                    assert_eq!(hecke_mul(&t_basis(v), &t_basis(w)).unwrap(), t_basis(&vw));
                }
            }
        }
    }
}

#[test]
fn associativity_exhaustive() {
    for spec in [GroupSpec::a(2).unwrap(), GroupSpec::bc(2).unwrap()] {
        let basis: Vec<HeckeElement> = all_elements(spec).iter().map(t_basis).collect();
        for a in &basis {
            for b in &basis {
                let ab = hecke_mul(a, b).unwrap();
                for c in &basis {
                    let left = hecke_mul(&ab, c).unwrap();
                    let right = hecke_mul(a, &hecke_mul(b, c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }
}

/// Group-algebra product of basis elements is just the group product.
#[test]
fn specialization_at_one_is_group_algebra() {
    let one = BigRational::one();
    for spec in small_specs() {
        let elems = all_elements(spec);
        for v in &elems {
            for w in &elems {
                let prod = hecke_mul(&t_basis(v), &t_basis(w)).unwrap();
                let mut expected = BTreeMap::new();
                expected.insert(v.multiply(w).unwrap(), one.clone());
                assert_eq!(prod.specialize(&RationalField, &one), expected, "{v} * {w}");
            }
        }
    }
}

/// Every reduced word of `w`, by extending words one letter at a time.
fn all_reduced_words(w: &WeylElement) -> Vec<Vec<usize>> {
    let spec = w.spec();
    let mut words = vec![(Vec::new(), WeylElement::identity(spec))];
    for _ in 0..w.length() {
        let mut next = Vec::new();
        for (word, x) in words {
            for s in 1..=spec.num_generators() {
                let y = x.multiply(&WeylElement::generator(spec, s).unwrap()).unwrap();
                if y.length() == x.length() + 1 {
                    let mut wd = word.clone();
                    wd.push(s);
                    next.push((wd, y));
                }
            }
        }
        words = next;
    }
    words.into_iter().filter(|(_, x)| x == w).map(|(wd, _)| wd).collect()
}

#[test]
fn product_independent_of_reduced_word() {
    for spec in [GroupSpec::a(2).unwrap(), GroupSpec::bc(2).unwrap(), GroupSpec::a(3).unwrap()] {
        let elems = all_elements(spec);
        for v in &elems {
            let words = all_reduced_words(v);
            assert!(words.contains(&v.reduced_word()));
            for w in &elems {
                let reference = hecke_mul(&t_basis(v), &t_basis(w)).unwrap();
                for word in &words {
                    let other = hecke_mul_with(&t_basis(v), &t_basis(w), |_| word.clone()).unwrap();
                    assert_eq!(other, reference);
                }
            }
        }
    }
}

#[test]
fn s3_examples() {
    let spec = GroupSpec::a(2).unwrap();
    let s1 = t_basis(&WeylElement::generator(spec, 1).unwrap());
    let s2 = t_basis(&WeylElement::generator(spec, 2).unwrap());
    assert_eq!((&s1 * &s1).to_string(), "(q - 1)·T_{s1} + q·T_e");
    let left = &(&s1 * &s2) * &s1;
    let right = &s1 * &(&s2 * &s1);
    assert_eq!(left, right);
    assert_eq!(left.to_string(), "T_{s1 s2 s1}");
}

fn arb_element(spec: GroupSpec) -> impl Strategy<Value = HeckeElement> {
    let elems = all_elements(spec);
    let n = elems.len();
    prop::collection::vec((0..n, prop::collection::vec(-3i128..=3, 0..3)), 0..4).prop_map(move |terms| {
        HeckeElement::from_terms(spec, terms.into_iter().map(|(i, c)| (elems[i].clone(), Poly::from_coeffs(c)))).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn associativity_random_bc3(a in arb_element(GroupSpec::bc(3).unwrap()),
                                b in arb_element(GroupSpec::bc(3).unwrap()),
                                c in arb_element(GroupSpec::bc(3).unwrap())) {
        let left = hecke_mul(&hecke_mul(&a, &b).unwrap(), &c).unwrap();
        let right = hecke_mul(&a, &hecke_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn distributivity_random_a3(a in arb_element(GroupSpec::a(3).unwrap()),
                                b in arb_element(GroupSpec::a(3).unwrap()),
                                c in arb_element(GroupSpec::a(3).unwrap())) {
        let left = hecke_mul(&a, &(&b + &c)).unwrap();
        let right = &hecke_mul(&a, &b).unwrap() + &hecke_mul(&a, &c).unwrap();
        prop_assert_eq!(left, right);
    }
}
