//! Deterministic point sets.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `pi (3 - sqrt 5)`
const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` quasi-uniform points of the closed disk of radius `r` (a sunflower
/// spiral). The seed only fixes a global rotation.
pub fn sunflower(n: usize, r: f64, seed: u64) -> Vec<Complex64> {
    let phase = if seed == 0 { 0.0 } else { 2.0 * PI * rng(seed).gen::<f64>() };
    (0..n)
        .map(|j| {
            let rho = r * ((j as f64 + 0.5) / n as f64).sqrt();
            Complex64::from_polar(rho, j as f64 * GOLDEN_ANGLE + phase)
        })
        .collect()
}

/// Uniform random point of the open disk of radius `r`.
pub fn uniform_in_disk(rng: &mut impl Rng, r: f64) -> Complex64 {
    let rho = r * rng.gen::<f64>().sqrt();
    Complex64::from_polar(rho, 2.0 * PI * rng.gen::<f64>())
}

/// `n` equally spaced points of the circle `|z| = r`, starting on the positive axis.
pub fn circle(n: usize, r: f64) -> Vec<Complex64> {
    (0..n).map(|j| Complex64::from_polar(r, 2.0 * PI * j as f64 / n as f64)).collect()
}

/// Square `k x k` lattice inscribed in the disk of radius `0.95 R`.
pub fn lattice_in_disk(k: usize, radius: f64) -> Vec<Complex64> {
    let half = 0.95 * radius / 2f64.sqrt();
    let step = if k > 1 { 2.0 * half / (k - 1) as f64 } else { 0.0 };
    let start = if k > 1 { -half } else { 0.0 };
    (0..k).flat_map(|i| (0..k).map(move |j| Complex64::new(start + i as f64 * step, start + j as f64 * step))).collect()
}
