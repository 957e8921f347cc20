use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::XState;

/// Knobs for [`random_x_state`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerParams {
    /// Coherence magnitudes are drawn as `u·√(ρ11ρ44)` and `u·√(ρ22ρ33)` with
    /// `u` uniform on `[0, max_coherence]`. Must lie in `[0, 1]`; zero yields
    /// diagonal states.
    pub max_coherence: f64,
}

impl Default for SamplerParams {
    fn default() -> Self {
        Self { max_coherence: 1.0 }
    }
}

fn draw(rng: &mut ChaCha8Rng, params: &SamplerParams) -> XState {
    // Uniform on the 3-simplex: spacings of three sorted uniforms.
    let mut cuts: [f64; 3] = [rng.random(), rng.random(), rng.random()];
    cuts.sort_by(f64::total_cmp);
    let diag = [cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], 1.0 - cuts[2]];

    let c = params.max_coherence.clamp(0.0, 1.0);
    let u1 = c * rng.random::<f64>();
    let u2 = c * rng.random::<f64>();
    let phi1 = TAU * rng.random::<f64>();
    let phi2 = TAU * rng.random::<f64>();

    let r14 = u1 * (diag[0] * diag[3]).sqrt();
    let r23 = u2 * (diag[1] * diag[2]).sqrt();
    XState::new(diag, Complex64::from_polar(r14, phi1), Complex64::from_polar(r23, phi2))
}

/// A valid random X-state, fully determined by `seed`.
///
/// Every sample satisfies the positivity conditions by construction, so no
/// rejection step is needed.
pub fn random_x_state(seed: u64, params: &SamplerParams) -> XState {
    draw(&mut ChaCha8Rng::seed_from_u64(seed), params)
}

/// The `index`-th member of the ensemble keyed by `seed`. Each index gets its
/// own ChaCha stream, so ensembles can be generated in any order or in
/// parallel with identical results.
pub fn sample_ensemble_state(seed: u64, index: u64, params: &SamplerParams) -> XState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    draw(&mut rng, params)
}
