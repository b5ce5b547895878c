//! Monte Carlo logical error rates under i.i.d. depolarizing noise.
//!
//! Trial `t` draws its error from a ChaCha8 stream selected by `(seed, t)`, so
//! results do not depend on thread count or scheduling.

use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::codemap::{basis_change, build_map, MapConventions};
use crate::colex::Colex;
use crate::decode::{MappedDecoder, MatchingStrategy};
use crate::error::{Error, Result};
use crate::symplectic::{Pauli, PauliOp, SpaceId};

/// Two-sided 95% normal quantile.
const Z95: f64 = 1.959963984540054;

pub const CSV_HEADER: &str = "family,rows,cols,color,p,trials,failures,rate,ci_lo,ci_hi,seed,seconds";

/// Each qubit independently suffers X, Y, or Z with probability `p/3` each.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NoiseModel {
    p: f64,
}

impl NoiseModel {
    pub fn depolarizing(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidArgument(format!("p = {p} is outside [0, 1]")));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn sample<R: Rng + ?Sized>(&self, space: SpaceId, rng: &mut R) -> PauliOp {
        let mut e = PauliOp::identity(space);
        for q in 0..space.qubits {
            if rng.gen::<f64>() < self.p {
                e.set(q, [Pauli::X, Pauli::Y, Pauli::Z][rng.gen_range(0..3)]);
            }
        }
        e
    }
}

/// The RNG for one trial: stream `trial` of the generator seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TrialStats {
    pub p: f64,
    pub trials: u64,
    pub failures: u64,
    pub seed: u64,
    pub seconds: f64,
}

impl TrialStats {
    pub fn rate(&self) -> f64 {
        self.failures as f64 / self.trials as f64
    }

    /// Wilson score interval at 95% confidence.
    pub fn wilson(&self) -> (f64, f64) {
        let n = self.trials as f64;
        let phat = self.rate();
        let z2 = Z95 * Z95;
        let denom = 1.0 + z2 / n;
        let center = (phat + z2 / (2.0 * n)) / denom;
        let half = Z95 / denom * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt();
        let lo = if self.failures == 0 { 0.0 } else { (center - half).max(0.0) };
        let hi = if self.failures == self.trials { 1.0 } else { (center + half).min(1.0) };
        (lo, hi)
    }
}

/// Runs `trials` decoding trials with a prepared decoder.
pub fn run_trials_with(
    decoder: &MappedDecoder,
    noise: NoiseModel,
    trials: u64,
    seed: u64,
) -> Result<TrialStats> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let space = decoder.color_code().space();
    let start = Instant::now();
    let failures = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let e = noise.sample(space, &mut rng);
            if e.is_identity() {
                return Ok(0u64);
            }
            Ok(u64::from(!decoder.decode_error(&e)?.success))
        })
        .try_reduce(|| 0, |a, b| Ok::<u64, Error>(a + b))?;
    Ok(TrialStats { p: noise.p(), trials, failures, seed, seconds: start.elapsed().as_secs_f64() })
}

pub fn prepare_decoder(
    g: &Colex,
    conv: &MapConventions,
    strategy: MatchingStrategy,
) -> Result<MappedDecoder> {
    let cm = build_map(g, conv)?;
    let b = basis_change(&cm)?;
    MappedDecoder::new(cm, b, strategy)
}

/// Builds the map for `conv` and runs `trials` trials at one noise level.
pub fn run_trials(
    g: &Colex,
    conv: &MapConventions,
    noise: NoiseModel,
    trials: u64,
    seed: u64,
) -> Result<TrialStats> {
    let decoder = prepare_decoder(g, conv, MatchingStrategy::Exact)?;
    run_trials_with(&decoder, noise, trials, seed)
}

/// One row per entry of `p_values`, in order; every row uses the same seed.
pub fn sweep(decoder: &MappedDecoder, p_values: &[f64], trials: u64, seed: u64) -> Result<Vec<TrialStats>> {
    p_values.iter().map(|&p| run_trials_with(decoder, NoiseModel::depolarizing(p)?, trials, seed)).collect()
}

/// Writes the header and one line per row. `seconds` is left empty unless
/// `timing` is set, so output is byte-identical across runs.
pub fn write_csv<W: Write>(
    mut out: W,
    g: &Colex,
    decoder: &MappedDecoder,
    rows: &[TrialStats],
    timing: bool,
) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    let (family, r, c) = match g.meta() {
        Some(m) => (m.family.clone(), m.rows.to_string(), m.cols.to_string()),
        None => (String::new(), String::new(), String::new()),
    };
    let color = decoder.code_map().conventions().color;
    for s in rows {
        let (lo, hi) = s.wilson();
        let seconds = if timing { format!("{:.3}", s.seconds) } else { String::new() };
        writeln!(
            out,
            "{family},{r},{c},{color},{},{},{},{},{},{},{},{seconds}",
            s.p,
            s.trials,
            s.failures,
            s.rate(),
            lo,
            hi,
            s.seed
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colex::{build_hexagonal_torus, Color};

    fn decoder() -> (Colex, MappedDecoder) {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let conv = MapConventions::standard(&g, Color::Red).unwrap();
        let d = prepare_decoder(&g, &conv, MatchingStrategy::Exact).unwrap();
        (g, d)
    }

    #[test]
    fn zero_noise_never_fails() {
        let (_, d) = decoder();
        let s = run_trials_with(&d, NoiseModel::depolarizing(0.0).unwrap(), 500, 1).unwrap();
        assert_eq!(s.failures, 0);
        assert_eq!(s.wilson().0, 0.0);
    }

    #[test]
    fn rejects_bad_inputs() {
        let (_, d) = decoder();
        assert!(NoiseModel::depolarizing(1.5).is_err());
        assert!(NoiseModel::depolarizing(-0.1).is_err());
        let noise = NoiseModel::depolarizing(0.1).unwrap();
        assert!(run_trials_with(&d, noise, 0, 1).is_err());
    }

    #[test]
    fn wilson_contains_the_estimate() {
        for (f, n) in [(0, 10), (3, 10), (10, 10), (17, 1000)] {
            let s = TrialStats { p: 0.1, trials: n, failures: f, seed: 0, seconds: 0.0 };
            let (lo, hi) = s.wilson();
            assert!(lo <= s.rate() && s.rate() <= hi);
            assert!((0.0..=1.0).contains(&lo) && (0.0..=1.0).contains(&hi));
        }
    }

    #[test]
    fn empty_sweep_is_header_only() {
        let (g, d) = decoder();
        let rows = sweep(&d, &[], 10, 1).unwrap();
        let mut out = Vec::new();
        write_csv(&mut out, &g, &d, &rows, false).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn duplicate_p_values_repeat_rows() {
        let (g, d) = decoder();
        let rows = sweep(&d, &[0.05, 0.01, 0.05], 200, 4).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0], TrialStats { seconds: rows[0].seconds, ..rows[2] });
        let mut a = Vec::new();
        let mut b = Vec::new();
        write_csv(&mut a, &g, &d, &rows, false).unwrap();
        write_csv(&mut b, &g, &d, &sweep(&d, &[0.05, 0.01, 0.05], 200, 4).unwrap(), false).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn trial_streams_are_independent_of_order() {
        let noise = NoiseModel::depolarizing(0.3).unwrap();
        let space = SpaceId::anonymous(20);
        let forward: Vec<PauliOp> = (0..5).map(|t| noise.sample(space, &mut trial_rng(9, t))).collect();
        let backward: Vec<PauliOp> =
            (0..5).rev().map(|t| noise.sample(space, &mut trial_rng(9, t))).collect();
        assert!(forward.iter().eq(backward.iter().rev()));
    }
}
