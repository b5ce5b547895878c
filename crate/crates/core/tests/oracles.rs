//! Checks against quantities computed from scratch by brute force.

mod support;

use color2surface::simulate::{prepare_decoder, run_trials_with};
use color2surface::{
    build_hexagonal_torus, code_params, color_code, contract, extract_syndrome, mwpm_decode, surface_code,
    Color, MapConventions, MappedDecoder, MatchingStrategy, NoiseModel, Pauli, PauliOp, SpaceId,
    StabilizerCode,
};
use support::{anticommute, in_span, rank, row_of, Row};

const LETTERS: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

/// Every Pauli of exactly `weight` on `space`, in lexicographic order.
fn each_of_weight(space: SpaceId, weight: usize, visit: &mut dyn FnMut(&PauliOp)) {
    fn go(space: SpaceId, from: usize, left: usize, p: &mut PauliOp, visit: &mut dyn FnMut(&PauliOp)) {
        if left == 0 {
            visit(p);
            return;
        }
        for q in from..space.qubits {
            for l in LETTERS {
                p.set(q, l);
                go(space, q + 1, left - 1, p, visit);
            }
            p.set(q, Pauli::I);
        }
    }
    go(space, 0, weight, &mut PauliOp::identity(space), visit);
}

/// Smallest weight of an undetectable operator outside the stabilizer group.
fn brute_force_distance(code: &StabilizerCode, max_weight: usize) -> Option<usize> {
    let gens: Vec<Row> = code.generators().iter().map(row_of).collect();
    for w in 1..=max_weight {
        let mut found = false;
        each_of_weight(code.space(), w, &mut |p| {
            if !found && code.generators().iter().all(|s| !anticommute(s, p)) && !in_span(&gens, &row_of(p)) {
                found = true;
            }
        });
        if found {
            return Some(w);
        }
    }
    None
}

fn logical_qubits(code: &StabilizerCode) -> usize {
    code.num_qubits() - rank(code.generators().iter().map(row_of).collect())
}

#[test]
fn small_color_code_is_18_4_4() {
    let g = build_hexagonal_torus(3, 3).unwrap();
    let code = color_code(&g).unwrap();
    assert_eq!(code.num_qubits(), 18);
    assert_eq!(logical_qubits(&code), 4);
    assert_eq!(brute_force_distance(&code, 4), Some(4));
    let params = code_params(&code);
    assert_eq!((params.n, params.k, params.d), (18, 4, Some(4)));
}

#[test]
fn small_surface_codes_have_distance_two() {
    let g = build_hexagonal_torus(3, 3).unwrap();
    for c in Color::ALL {
        let code = surface_code(&contract(&g, c).unwrap()).unwrap();
        assert_eq!(logical_qubits(&code), 2);
        assert_eq!(brute_force_distance(&code, 2), Some(2));
        assert_eq!(code_params(&code).d, Some(2));
    }
}

#[test]
fn larger_surface_code_corrects_every_single_edge_error() {
    let g = build_hexagonal_torus(6, 6).unwrap();
    for c in Color::ALL {
        let sg = contract(&g, c).unwrap();
        let code = surface_code(&sg).unwrap();
        let gens: Vec<Row> = code.generators().iter().map(row_of).collect();
        for q in 0..sg.num_edges() {
            for l in [Pauli::X, Pauli::Z] {
                let e = PauliOp::single(code.space(), q, l);
                let correction = mwpm_decode(&sg, &extract_syndrome(&code, &e).unwrap()).unwrap();
                let residual = e.mul(&correction).unwrap();
                assert!(in_span(&gens, &row_of(&residual)), "{c}: {}{q}", l.letter());
            }
        }
    }
}

#[test]
fn single_z_flags_the_three_incident_faces() {
    let g = build_hexagonal_torus(6, 6).unwrap();
    let code = color_code(&g).unwrap();
    for q in 0..g.num_vertices() {
        let e = PauliOp::single(code.space(), q, Pauli::Z);
        let flagged: Vec<usize> =
            (0..code.len()).filter(|&j| anticommute(&code.generators()[j], &e)).collect();
        assert_eq!(flagged.len(), 3);
        for j in flagged {
            assert_eq!(code.generators()[j].get(q), Pauli::X);
        }
    }
}

fn decoder(rows: usize, cols: usize) -> (color2surface::Colex, MappedDecoder) {
    let g = build_hexagonal_torus(rows, cols).unwrap();
    let d = prepare_decoder(&g, &MapConventions::standard(&g, Color::Red).unwrap(), MatchingStrategy::Exact)
        .unwrap();
    (g, d)
}

fn corrected(d: &MappedDecoder, gens: &[Row], e: &PauliOp) -> bool {
    let correction = d.decode(&extract_syndrome(d.color_code(), e).unwrap()).unwrap();
    in_span(gens, &row_of(&e.mul(&correction).unwrap()))
}

/// Failure probability from all errors of weight at most two, plus the
/// probability of weight three or more as an upper margin.
#[test]
fn monte_carlo_agrees_with_low_weight_expansion() {
    let (g, d) = decoder(3, 3);
    let n = g.num_vertices();
    let p: f64 = 0.01;
    let gens: Vec<Row> = d.color_code().generators().iter().map(row_of).collect();
    let space = d.color_code().space();
    let mut by_weight = [0u64; 3];
    for (w, failures) in by_weight.iter_mut().enumerate().skip(1) {
        each_of_weight(space, w, &mut |e| {
            if !corrected(&d, &gens, e) {
                *failures += 1;
            }
        });
    }
    let single = p / 3.0;
    let lower: f64 =
        (1..=2).map(|w| by_weight[w] as f64 * single.powi(w as i32) * (1.0 - p).powi((n - w) as i32)).sum();
    let tail = 1.0
        - (0..=2).map(|w| binomial(n, w) * p.powi(w as i32) * (1.0 - p).powi((n - w) as i32)).sum::<f64>();
    let stats = run_trials_with(&d, NoiseModel::depolarizing(p).unwrap(), 100_000, 21).unwrap();
    let sigma = (lower * (1.0 - lower) / stats.trials as f64).sqrt();
    let rate = stats.rate();
    assert!(rate > lower - 4.0 * sigma, "rate {rate}, lower {lower}");
    assert!(rate < lower + tail + 4.0 * sigma, "rate {rate}, upper {}", lower + tail);
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

#[test]
fn failure_rate_grows_with_noise() {
    let (_, d) = decoder(6, 6);
    let rate = |p| run_trials_with(&d, NoiseModel::depolarizing(p).unwrap(), 20_000, 8).unwrap().rate();
    let (low, mid, high) = (rate(0.01), rate(0.05), rate(0.10));
    assert!(low < mid && mid < high, "{low} {mid} {high}");
}

/// Exact failure probability by dynamic programming over (syndrome, logical
/// class) pairs, convolving one qubit at a time.
fn exact_failure_rate(d: &MappedDecoder, p: f64) -> f64 {
    let code = d.color_code();
    let space = code.space();
    let mut independent: Vec<usize> = Vec::new();
    let mut kept: Vec<Row> = Vec::new();
    for (j, s) in code.generators().iter().enumerate() {
        let mut with = kept.clone();
        with.push(row_of(s));
        if rank(with.clone()) > kept.len() {
            kept = with;
            independent.push(j);
        }
    }
    let logicals = code.logical_operators();
    let syn_bits = independent.len();
    let key = |e: &PauliOp| -> usize {
        let mut k = 0;
        for (b, &j) in independent.iter().enumerate() {
            k |= (anticommute(&code.generators()[j], e) as usize) << b;
        }
        for (b, l) in logicals.iter().enumerate() {
            k |= (anticommute(l, e) as usize) << (syn_bits + b);
        }
        k
    };
    let size = 1usize << (syn_bits + logicals.len());
    let mut dist = vec![0.0f64; size];
    dist[0] = 1.0;
    let mut representative: Vec<Option<PauliOp>> = vec![None; 1 << syn_bits];
    representative[0] = Some(PauliOp::identity(space));
    let syn_mask = (1 << syn_bits) - 1;
    for q in 0..space.qubits {
        let moves: Vec<(usize, PauliOp)> = LETTERS
            .iter()
            .map(|&l| {
                let e = PauliOp::single(space, q, l);
                (key(&e), e)
            })
            .collect();
        let mut next: Vec<f64> = dist.iter().map(|x| x * (1.0 - p)).collect();
        for (k, &mass) in dist.iter().enumerate() {
            if mass == 0.0 {
                continue;
            }
            for (m, _) in &moves {
                next[k ^ m] += mass * p / 3.0;
            }
        }
        let known: Vec<usize> = (0..representative.len()).filter(|&s| representative[s].is_some()).collect();
        for s in known {
            for (m, e) in &moves {
                let t = s ^ (m & syn_mask);
                if representative[t].is_none() {
                    representative[t] = Some(representative[s].as_ref().unwrap().mul(e).unwrap());
                }
            }
        }
        dist = next;
    }
    let mut fail = 0.0;
    for (s, rep) in representative.iter().enumerate() {
        let Some(rep) = rep else { continue };
        let correction = d.decode(&extract_syndrome(code, rep).unwrap()).unwrap();
        let class = key(&correction) >> syn_bits;
        for c in 0..1usize << logicals.len() {
            if c != class {
                fail += dist[s | (c << syn_bits)];
            }
        }
    }
    fail
}

#[test]
fn monte_carlo_matches_exact_failure_rate() {
    let (_, d) = decoder(3, 3);
    for (p, seed) in [(0.05, 30), (0.2, 31), (1.0, 32)] {
        let exact = exact_failure_rate(&d, p);
        let stats = run_trials_with(&d, NoiseModel::depolarizing(p).unwrap(), 20_000, seed).unwrap();
        let sigma = (exact * (1.0 - exact) / stats.trials as f64).sqrt();
        assert!(
            (stats.rate() - exact).abs() < 4.0 * sigma + 1e-9,
            "p {p}: rate {}, exact {exact}",
            stats.rate()
        );
    }
}
