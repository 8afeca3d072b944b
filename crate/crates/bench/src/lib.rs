//! Shared fixtures for the benchmarks.

use bruhatkit::linalg::{Field, Matrix, PrimeField, RationalField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_invertible_gf(rng: &mut ChaCha8Rng, field: &PrimeField, n: usize) -> Matrix<u32> {
    loop {
        let data = (0..n * n).map(|_| rng.gen_range(0..field.modulus())).collect();
        let m = Matrix::from_vec(n, n, data).expect("n*n entries");
        if field.det(&m).expect("square") != 0 {
            return m;
        }
    }
}

/// Entries `a/b` with `|a| <= 9`, `1 <= b <= 4`.
pub fn random_invertible_rational(
    rng: &mut ChaCha8Rng,
    n: usize,
) -> Matrix<<RationalField as Field>::Elem> {
    let f = RationalField;
    loop {
        let data = (0..n * n)
            .map(|_| {
                let num = f.from_i64(rng.gen_range(-9..=9));
                let den = f.from_i64(rng.gen_range(1..=4));
                f.div(&num, &den).expect("nonzero denominator")
            })
            .collect();
        let m = Matrix::from_vec(n, n, data).expect("n*n entries");
        if !f.is_zero(&f.det(&m).expect("square")) {
            return m;
        }
    }
}
