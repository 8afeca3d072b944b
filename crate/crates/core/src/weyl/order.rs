use num_bigint::BigUint;
use num_traits::{One, Pow};

use super::{all_elements, Family, GroupSpec};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::weyl::DEFAULT_RANK_CAP;

/// Degrees of the basic invariants (exponents plus one).
pub fn degrees(spec: GroupSpec) -> Vec<usize> {
    let n = spec.rank();
    match spec.family() {
        Family::A => (2..=n + 1).collect(),
        Family::BC => (1..=n).map(|i| 2 * i).collect(),
        Family::D => (1..n).map(|i| 2 * i).chain(std::iter::once(n)).collect(),
    }
}

/// `sum_{w in W} q^{l(w)}` by enumerating the group.
pub fn poincare_polynomial(spec: GroupSpec) -> Result<Poly> {
    poincare_polynomial_capped(spec, DEFAULT_RANK_CAP)
}

pub fn poincare_polynomial_capped(spec: GroupSpec, rank_cap: usize) -> Result<Poly> {
    if spec.rank() > rank_cap {
        return Err(Error::RankOverCap { rank: spec.rank(), cap: rank_cap });
    }
    let mut counts = vec![0i128; spec.num_positive_roots() + 1];
    for w in all_elements(spec) {
        counts[w.length()] += 1;
    }
    Ok(Poly::from_coeffs(counts))
}

/// `prod_i (q^{d_i} - 1) / (q - 1)`, computed from the degrees alone.
pub fn poincare_product(spec: GroupSpec) -> Poly {
    degrees(spec).into_iter().fold(Poly::one(), |acc, d| {
        let q_int = Poly::from_coeffs(vec![1; d]);
        &acc * &q_int
    })
}

pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).expect("q >= 2 has a divisor");
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

/// `q^N * prod_i (q^{d_i} - 1)`: the order of the finite Chevalley group of
/// the given type (`|SL_{n+1}(F_q)|` for `A_n`, `|Sp_{2n}(F_q)|` for `BC_n`).
pub fn chevalley_order(spec: GroupSpec, q: u64) -> Result<BigUint> {
    if !is_prime_power(q) {
        return Err(Error::NotPrimePower(q));
    }
    let qb = BigUint::from(q);
    let mut order: BigUint = Pow::pow(&qb, spec.num_positive_roots() as u32);
    for d in degrees(spec) {
        order *= Pow::pow(&qb, d as u32) - BigUint::one();
    }
    Ok(order)
}

/// `|GL_n(F_q)| = q^{n(n-1)/2} * prod_{i=1..n} (q^i - 1)`.
pub fn gl_order(n: usize, q: u64) -> Result<BigUint> {
    if !is_prime_power(q) {
        return Err(Error::NotPrimePower(q));
    }
    let qb = BigUint::from(q);
    let mut order: BigUint = Pow::pow(&qb, (n * n.saturating_sub(1) / 2) as u32);
    for i in 1..=n {
        order *= Pow::pow(&qb, i as u32) - BigUint::one();
    }
    Ok(order)
}
