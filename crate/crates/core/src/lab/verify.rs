use std::collections::{BTreeMap, HashMap};

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    cell_census, centralizer_orders, check_prime, enumerate_group, jordan_type, jordan_type_flat, order_u128,
    GroupKind, LabConfig,
};
use crate::error::{Error, Result};
use crate::linalg::{mat_inv, mat_mul, Matrix, PrimeField};
use crate::partition::{dominance_minimum, Partition};
use crate::phi::phi;
use crate::weyl::{all_elements, conjugacy_classes, ClassLabel, ConjugacyClass, WeylElement};

/// Largest allowed distance between the centralizer growth exponent and `d_C`.
pub const EXPONENT_TOLERANCE: f64 = 0.25;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeCount {
    pub jordan_type: Partition,
    pub count: u64,
}

/// Unipotent classes meeting one cell `G_w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellMeeting {
    pub w: WeylElement,
    pub word: Vec<usize>,
    pub jordan_types: Vec<TypeCount>,
    pub minimum: Option<Partition>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremARecord {
    pub q: u64,
    pub class_label: Option<ClassLabel>,
    #[serde(rename = "d_C")]
    pub d_c: usize,
    pub elliptic: bool,
    pub cells: Vec<CellMeeting>,
    /// Common dominance minimum over all of `C_min`, if there is one.
    pub minimum: Option<Partition>,
    pub phi: Partition,
    pub same_for_all_w: bool,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitData {
    pub representative: Vec<Vec<u32>>,
    pub orbit_size: u64,
    /// `|B| / orbit_size`.
    pub centralizer_b: u64,
    /// `|Z_B(g)|` counted directly in the commutant.
    pub centralizer_b_direct: u64,
    pub centralizer_g: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyDSample {
    pub q: u64,
    pub intersection_size: u64,
    pub b_orbits: usize,
    pub orbits: Vec<OrbitData>,
    /// `|Z(G)(F_q)|`; the stability and growth checks divide it out.
    pub center_order: u64,
    /// Orbit counts are compared after dividing by this.
    pub center_components: u64,
    /// Geometric mean over the B-orbits of `|Z_G(g)| / |Z(G)|`.
    pub mean_centralizer_g: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyDRecord {
    pub class_label: Option<ClassLabel>,
    #[serde(rename = "d_C")]
    pub d_c: usize,
    pub w: WeylElement,
    pub word: Vec<usize>,
    pub phi: Partition,
    pub samples: Vec<PropertyDSample>,
    pub orbit_count_stable: bool,
    pub centralizer_b_stable: bool,
    pub growth_exponent: Option<f64>,
    pub exponent_within_tolerance: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCheck {
    pub q: u64,
    pub formula: String,
    pub counted: String,
    /// `bfs` when the whole group was enumerated, `cells` when only the
    /// parametrized cells were counted.
    pub method: &'static str,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnipotentCountCheck {
    pub q: u64,
    pub expected: String,
    pub counted: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Integrity {
    pub order_check: Vec<OrderCheck>,
    pub unipotent_count_check: Vec<UnipotentCountCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RandomizedChecks {
    pub q: u64,
    pub samples: usize,
    /// Draws where `b g b'` landed in a different cell from `g`.
    pub cell_invariance_failures: usize,
    /// Draws where `h u h^-1` had a different Jordan type from `u`.
    pub jordan_invariance_failures: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub group: String,
    pub q: Vec<u64>,
    pub theorem_a: Vec<TheoremARecord>,
    pub property_d: Vec<PropertyDRecord>,
    pub integrity: Integrity,
    /// Seed of the randomized section, when one was run.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub randomized: Vec<RandomizedChecks>,
    /// False for runs in bad characteristic: results are shown, not checked.
    pub asserted: bool,
    pub passed: bool,
}

impl VerificationReport {
    fn recompute(&mut self) {
        self.passed = !self.asserted
            || (self.theorem_a.iter().all(|r| r.matches)
                && self.property_d.iter().all(|r| r.passed)
                && self.integrity.order_check.iter().all(|c| c.pass)
                && self.integrity.unipotent_count_check.iter().all(|c| c.pass)
                && self.randomized.iter().all(|r| r.pass));
    }

    pub fn attach_randomized(&mut self, seed: u64, checks: Vec<RandomizedChecks>) {
        self.seed = Some(seed);
        self.randomized = checks;
        self.recompute();
    }
}

fn type_counts(census: &BTreeMap<Partition, u64>) -> Vec<TypeCount> {
    census.iter().map(|(t, &c)| TypeCount { jordan_type: t.clone(), count: c }).collect()
}

fn weyl_classes(kind: GroupKind) -> Result<Vec<ConjugacyClass>> {
    conjugacy_classes(kind.weyl_spec())
}

fn theorem_a_records(
    kind: GroupKind,
    q: u64,
    census: &BTreeMap<WeylElement, BTreeMap<Partition, u64>>,
) -> Result<Vec<TheoremARecord>> {
    weyl_classes(kind)?
        .iter()
        .map(|class| {
            let cells: Vec<CellMeeting> = class
                .minimal_elements()
                .iter()
                .map(|w| {
                    let types = &census[w];
                    CellMeeting {
                        w: w.clone(),
                        word: w.reduced_word(),
                        jordan_types: type_counts(types),
                        minimum: dominance_minimum(types.keys()),
                    }
                })
                .collect();
            let first = cells[0].minimum.clone();
            let same = cells.iter().all(|c| c.minimum == first);
            let phi = phi(class)?.jordan_type().clone();
            let minimum = if same { first } else { None };
            Ok(TheoremARecord {
                q,
                class_label: class.label().cloned(),
                d_c: class.min_length(),
                elliptic: class.is_elliptic(),
                matches: same && minimum.as_ref() == Some(&phi),
                minimum,
                phi,
                same_for_all_w: same,
                cells,
            })
        })
        .collect()
}

/// For every class `C` of `W` and every `w` in `C_min`: the Jordan types met
/// by `G_w(F_q)`, their dominance minimum, and whether it equals `Phi(C)`.
pub fn verify_theorem_a(kind: GroupKind, q: u64, config: &LabConfig) -> Result<Vec<TheoremARecord>> {
    let minimal: Vec<WeylElement> =
        weyl_classes(kind)?.iter().flat_map(|c| c.minimal_elements().iter().cloned()).collect();
    let census = cell_census(kind, q, &minimal, config)?;
    theorem_a_records(kind, q, &census)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// B-orbits on `gamma ∩ G_w(F_q)` with centralizer orders of one element per orbit.
fn property_d_sample(
    kind: GroupKind,
    field: &PrimeField,
    w: &WeylElement,
    gamma: &Partition,
    config: &LabConfig,
) -> Result<PropertyDSample> {
    let q = field.modulus() as u64;
    let n = kind.dim();
    let cell = kind.cell(*field, w, config.cell_budget)?;
    let mut members: Vec<Vec<u32>> = Vec::new();
    cell.for_each(|_, g| {
        if jordan_type_flat(field, g, n).as_ref() == Some(gamma) {
            members.push(g.to_vec());
        }
    });
    members.sort_unstable();
    let index: HashMap<&[u32], usize> = members.iter().enumerate().map(|(i, g)| (g.as_slice(), i)).collect();
    let conjugators: Vec<(Vec<u32>, Vec<u32>)> = kind
        .borel_generators(field)
        .into_iter()
        .map(|b| {
            let bi = mat_inv(field, &b).expect("Borel generators are invertible");
            (b.into_data(), bi.into_data())
        })
        .collect();
    let edges: Vec<(usize, usize)> = members
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let mut tmp = vec![0u32; n * n];
            let mut out = vec![0u32; n * n];
            let mut found = Vec::with_capacity(conjugators.len());
            for (b, bi) in &conjugators {
                field.mul_square(b, g, n, &mut tmp);
                field.mul_square(&tmp, bi, n, &mut out);
                let j = *index.get(out.as_slice()).ok_or_else(|| {
                    Error::Integrity(format!("B-conjugation left {gamma} ∩ G_{w}"))
                })?;
                found.push((i, j));
            }
            Ok(found)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut uf = UnionFind((0..members.len()).collect());
    for (a, b) in edges {
        uf.union(a, b);
    }
    let mut sizes: BTreeMap<usize, u64> = BTreeMap::new();
    for i in 0..members.len() {
        *sizes.entry(uf.find(i)).or_insert(0) += 1;
    }
    let borel = kind.borel_order(q) as u64;
    let orbits = sizes
        .into_iter()
        .map(|(root, size)| {
            let g = Matrix::from_vec(n, n, members[root].clone()).expect("square");
            let (zg, zb) = centralizer_orders(kind, field, &g, config.cell_budget)?;
            Ok(OrbitData {
                representative: g.to_rows(),
                orbit_size: size,
                centralizer_b: borel / size,
                centralizer_b_direct: zb,
                centralizer_g: zg,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let center = kind.center_order(q);
    let mean_log = orbits.iter().map(|o| (o.centralizer_g as f64 / center as f64).ln()).sum::<f64>()
        / orbits.len().max(1) as f64;
    Ok(PropertyDSample {
        q,
        intersection_size: members.len() as u64,
        b_orbits: orbits.len(),
        orbits,
        center_order: center,
        center_components: kind.center_components(q),
        mean_centralizer_g: mean_log.exp(),
    })
}

/// Finite-field proxies for the finiteness of B-orbits on `Phi(C) ∩ G_w` and
/// for the centralizer dimensions, over every elliptic class `C`.
pub fn verify_property_d(kind: GroupKind, qs: &[u64], config: &LabConfig) -> Result<Vec<PropertyDRecord>> {
    if qs.len() < 2 {
        return Err(Error::Unsupported("B-orbit and centralizer growth checks need at least two values of q".into()));
    }
    let fields: Vec<PrimeField> = qs.iter().map(|&q| check_prime(kind, q, config)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for class in weyl_classes(kind)?.iter().filter(|c| c.is_elliptic()) {
        let gamma = phi(class)?.jordan_type().clone();
        for w in class.minimal_elements() {
            let samples: Vec<PropertyDSample> = fields
                .iter()
                .map(|f| property_d_sample(kind, f, w, &gamma, config))
                .collect::<Result<_>>()?;
            let orbit_count_stable = samples.windows(2).all(|p| {
                p[0].b_orbits as u64 * p[1].center_components == p[1].b_orbits as u64 * p[0].center_components
            });
            let zb = |s: &PropertyDSample| {
                s.orbits.iter().map(|o| o.centralizer_b / s.center_order).collect::<std::collections::BTreeSet<u64>>()
            };
            let centralizer_b_stable = samples.windows(2).all(|p| zb(&p[0]) == zb(&p[1]))
                && samples.iter().flat_map(|s| &s.orbits).all(|o| o.centralizer_b == o.centralizer_b_direct);
            let (first, last) = (&samples[0], &samples[samples.len() - 1]);
            let growth_exponent = (first.b_orbits > 0 && last.b_orbits > 0).then(|| {
                (last.mean_centralizer_g / first.mean_centralizer_g).ln() / (last.q as f64 / first.q as f64).ln()
            });
            let exponent_within_tolerance =
                growth_exponent.is_some_and(|e| (e - class.min_length() as f64).abs() <= EXPONENT_TOLERANCE);
            out.push(PropertyDRecord {
                class_label: class.label().cloned(),
                d_c: class.min_length(),
                w: w.clone(),
                word: w.reduced_word(),
                phi: gamma.clone(),
                passed: orbit_count_stable && centralizer_b_stable && exponent_within_tolerance,
                samples,
                orbit_count_stable,
                centralizer_b_stable,
                growth_exponent,
                exponent_within_tolerance,
            });
        }
    }
    Ok(out)
}

fn integrity_for(
    kind: GroupKind,
    q: u64,
    census: &BTreeMap<WeylElement, BTreeMap<Partition, u64>>,
    config: &LabConfig,
    integrity: &mut Integrity,
) -> Result<()> {
    let field = check_prime(kind, q, config)?;
    let formula = order_u128(kind, q)?;
    let unipotents: u64 = census.values().flat_map(|m| m.values()).sum();
    let expected_unipotents = kind.unipotent_count(q);
    integrity.unipotent_count_check.push(UnipotentCountCheck {
        q,
        expected: expected_unipotents.to_string(),
        counted: unipotents.to_string(),
        pass: unipotents as u128 == expected_unipotents,
    });
    let check = if formula <= config.scan_limit {
        match enumerate_group(kind, q, config) {
            Ok(table) => {
                let cells_agree = table.cell_sizes().into_iter().all(|(w, size)| {
                    kind.cell(field, &w, config.cell_budget).map(|c| c.len() == size).unwrap_or(false)
                        && table.cell_unipotent_types(&w).into_iter().map(|(t, c)| (t, c as u64)).collect::<BTreeMap<_, _>>()
                            == census[&w]
                });
                OrderCheck {
                    q,
                    formula: formula.to_string(),
                    counted: table.len().to_string(),
                    method: "bfs",
                    pass: table.len() as u128 == formula && cells_agree,
                }
            }
            Err(Error::Integrity(msg)) => OrderCheck {
                q,
                formula: formula.to_string(),
                counted: msg,
                method: "bfs",
                pass: false,
            },
            Err(e) => return Err(e),
        }
    } else {
        let mut total = 0u128;
        for w in all_elements(kind.weyl_spec()) {
            total += kind.cell(field, &w, config.cell_budget)?.len() as u128;
        }
        OrderCheck { q, formula: formula.to_string(), counted: total.to_string(), method: "cells", pass: total == formula }
    };
    integrity.order_check.push(check);
    Ok(())
}

/// Full verification run: the minimal unipotent class of every Weyl class
/// at every `q`, B-orbit and centralizer checks when at least two
/// values of `q` are given, and the integrity checks.
pub fn verify(kind: GroupKind, qs: &[u64], config: &LabConfig) -> Result<VerificationReport> {
    if qs.is_empty() {
        return Err(Error::Unsupported("no value of q given".into()));
    }
    let mut asserted = true;
    for &q in qs {
        check_prime(kind, q, config)?;
        asserted &= !kind.is_bad_prime(q);
        let order = order_u128(kind, q)?;
        if order > config.budget {
            return Err(Error::BudgetExceeded { required: order, budget: config.budget });
        }
    }
    let cells = all_elements(kind.weyl_spec());
    let mut theorem_a = Vec::new();
    let mut integrity = Integrity::default();
    for &q in qs {
        let census = cell_census(kind, q, &cells, config)?;
        theorem_a.extend(theorem_a_records(kind, q, &census)?);
        integrity_for(kind, q, &census, config, &mut integrity)?;
    }
    let property_d = if qs.len() >= 2 { verify_property_d(kind, qs, config)? } else { Vec::new() };
    let mut report = VerificationReport {
        group: kind.to_string(),
        q: qs.to_vec(),
        theorem_a,
        property_d,
        integrity,
        seed: None,
        randomized: Vec::new(),
        asserted,
        passed: false,
    };
    report.recompute();
    Ok(report)
}

/// Seeded spot checks: `B g B` stays in the cell of `g`, and Jordan types are
/// conjugation invariant.
pub fn randomized_checks<R: Rng>(
    kind: GroupKind,
    q: u64,
    samples: usize,
    rng: &mut R,
    config: &LabConfig,
) -> Result<RandomizedChecks> {
    let field = check_prime(kind, q, config)?;
    let cells = all_elements(kind.weyl_spec())
        .iter()
        .map(|w| kind.cell(field, w, config.cell_budget))
        .collect::<Result<Vec<_>>>()?;
    let total: usize = cells.iter().map(|c| c.len()).sum();
    let borel = cells.iter().find(|c| c.weyl_element().is_identity()).expect("identity cell");
    let unipotent_count = (q as usize).pow(kind.weyl_spec().num_positive_roots() as u32);
    let random_element = |rng: &mut R| {
        let mut idx = rng.gen_range(0..total);
        for c in &cells {
            if idx < c.len() {
                return (c.weyl_element().clone(), c.element(idx));
            }
            idx -= c.len();
        }
        unreachable!("index within total")
    };
    let (mut cell_failures, mut jordan_failures) = (0, 0);
    for _ in 0..samples {
        let (w, g) = random_element(rng);
        let b1 = borel.element(rng.gen_range(0..borel.len()));
        let b2 = borel.element(rng.gen_range(0..borel.len()));
        let moved = mat_mul(&field, &mat_mul(&field, &b1, &g)?, &b2)?;
        if kind.cell_of(&field, &moved)? != w {
            cell_failures += 1;
        }
        // trivial torus part: index below |U| is an element of U
        let u = borel.element(rng.gen_range(0..unipotent_count));
        let (_, h) = random_element(rng);
        let conj = mat_mul(&field, &mat_mul(&field, &h, &u)?, &mat_inv(&field, &h)?)?;
        if jordan_type(&field, &conj)? != jordan_type(&field, &u)? {
            jordan_failures += 1;
        }
    }
    Ok(RandomizedChecks {
        q,
        samples,
        cell_invariance_failures: cell_failures,
        jordan_invariance_failures: jordan_failures,
        pass: cell_failures == 0 && jordan_failures == 0,
    })
}
