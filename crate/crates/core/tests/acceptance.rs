//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero only if a criterion departs from its recorded expectation.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use qmirror_core::fuzzy::{build_irrep, fuzzy_coordinates};
use qmirror_core::logic::search::{bounded_search, DEFAULT_DEPTH};
use qmirror_core::logic::{can_communicate, cloning_paradox_demo, derive_cut_scenario, Observer};
use qmirror_core::qubit::{
    dual_basis_mirror, euler_decompose, gates, liar_measure, mirror_inverse, mirror_measure, phase_shift_form,
    project, projective_after_mirror, projective_measure_with,
};
use qmirror_core::sampling::{random_diagonal, random_state, random_unitary, seeded_rng};
use qmirror_core::{
    AxiomId, Basis, DiagonalUnitary2, LogicError, Mat2, MatN, ObserverProfile, Projector2, QubitState, Sequent,
};

const TRIALS: usize = 1000;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Distance between two angles on the circle.
fn angle_gap(x: f64, y: f64) -> f64 {
    let d = (x - y).rem_euclid(TAU);
    d.min(TAU - d)
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn timed(limit: Option<Duration>, body: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = body();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        out.detail.push_str(&format!("; {:.3}s (limit {}s)", elapsed.as_secs_f64(), limit.as_secs()));
        out.pass &= elapsed < limit;
    }
    out
}

fn mirror_preservation() -> Outcome {
    let mut rng = seeded_rng(101);
    let mut worst = 0f64;
    for _ in 0..TRIALS {
        let psi = random_state(&mut rng);
        let u = random_diagonal(&mut rng);
        let out = mirror_measure(&psi, &u);
        worst = worst
            .max((out.a().norm_sqr() - psi.a().norm_sqr()).abs())
            .max((out.b().norm_sqr() - psi.b().norm_sqr()).abs());
    }
    Outcome {
        pass: worst < 1e-12,
        detail: format!("max probability change {worst:.2e}"),
    }
}

fn mirror_reversibility() -> Outcome {
    let mut rng = seeded_rng(102);
    let mut worst = 0f64;
    for _ in 0..TRIALS {
        let psi = random_state(&mut rng);
        let u = random_diagonal(&mut rng);
        let back = mirror_inverse(&mirror_measure(&psi, &u), &u);
        worst = worst.max((back.a() - psi.a()).norm()).max((back.b() - psi.b()).norm());
    }
    Outcome {
        pass: worst < 1e-12,
        detail: format!("max round-trip error {worst:.2e}"),
    }
}

fn liar_swap() -> Outcome {
    let mut rng = seeded_rng(103);
    let mut worst = 0f64;
    for _ in 0..TRIALS {
        let psi = random_state(&mut rng);
        let u = random_diagonal(&mut rng);
        let out = liar_measure(&psi, &u);
        worst = worst
            .max((out.a().norm_sqr() - psi.b().norm_sqr()).abs())
            .max((out.b().norm_sqr() - psi.a().norm_sqr()).abs());
    }
    let psi = QubitState::from_real(0.6, 0.8).unwrap();
    let mut p_err = 0f64;
    for u in [DiagonalUnitary2::identity(), random_diagonal(&mut rng), random_diagonal(&mut rng)] {
        let (_, p) = project(&liar_measure(&psi, &u), Basis::Zero);
        p_err = p_err.max((p - 0.64).abs());
    }
    Outcome {
        pass: worst < 1e-12 && p_err < 1e-12,
        detail: format!("max swap error {worst:.2e}; liar then P0 on (0.6, 0.8) off 0.64 by {p_err:.2e}"),
    }
}

fn composed_measurement() -> Outcome {
    let psi = QubitState::from_real(0.6, 0.8).unwrap();
    let mut rng = seeded_rng(104);
    let mut p_err = 0f64;
    let mut post_err = 0f64;
    let alphas = [c(0.0, 1.0), c(1.0, 0.0), random_diagonal(&mut rng).alpha()];
    for alpha in alphas {
        let u = DiagonalUnitary2::new(alpha, 0.3).unwrap();
        let r = projective_after_mirror(&psi, &u, Basis::Zero).unwrap();
        p_err = p_err.max((r.probability - 0.36).abs());
        post_err = post_err.max((r.post_state.a() - c(1.0, 0.0)).norm()).max(r.post_state.b().norm());
    }
    Outcome {
        pass: p_err < 1e-12 && post_err == 0.0,
        detail: format!("probability off 0.36 by {p_err:.2e}; post-state off (1, 0) by {post_err:.2e}"),
    }
}

fn projector_algebra() -> Outcome {
    let (p0, p1) = (*Projector2::p0().matrix(), *Projector2::p1().matrix());
    let (zero, one) = (c(0.0, 0.0), c(1.0, 0.0));
    let checks = [
        ("P0 P1 = 0", p0 * p1 == Mat2::zero() && p1 * p0 == Mat2::zero()),
        ("P0 + P1 = I", p0 + p1 == Mat2::identity()),
        ("idempotent", p0 * p0 == p0 && p1 * p1 == p1),
        ("hermitian", p0.adjoint() == p0 && p1.adjoint() == p1),
        ("Q0 |0> = |1>", gates::q0().apply([one, zero]) == [zero, one]),
        ("Q1 |1> = |0>", gates::q1().apply([zero, one]) == [one, zero]),
        ("Q0 |1> = 0, Q1 |0> = 0", gates::q0().apply([zero, one]) == [zero, zero] && gates::q1().apply([one, zero]) == [zero, zero]),
    ];
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    Outcome {
        pass: failed.is_empty(),
        detail: if failed.is_empty() {
            "all identities exact".to_string()
        } else {
            format!("violated: {}", failed.join(", "))
        },
    }
}

fn decomposition_round_trips() -> Outcome {
    let mut rng = seeded_rng(106);
    let mut euler = 0f64;
    for _ in 0..TRIALS {
        let u = random_unitary(&mut rng);
        euler = euler.max(euler_decompose(&u).reconstruct().max_abs_diff(u.matrix()));
    }
    // U_D = e^{iφ} diag(α, α*) with α = e^{-iδ}
    let (mut lambda_err, mut stated_err, mut recon_err) = (0f64, 0f64, 0f64);
    for _ in 0..TRIALS {
        let u = random_diagonal(&mut rng);
        let delta = -u.alpha().arg();
        let form = phase_shift_form(&u);
        lambda_err = lambda_err.max(angle_gap(form.lambda, 2.0 * delta));
        stated_err = stated_err.max(angle_gap(form.phi_prime, u.phase() + delta));
        recon_err = recon_err.max(form.reconstruct().max_abs_diff(&u.matrix()));
    }
    Outcome {
        pass: euler < 1e-10 && lambda_err < 1e-12 && stated_err < 1e-12,
        detail: format!(
            "euler residual {euler:.2e}; lambda = 2 delta off by {lambda_err:.2e}; \
             phi' = phi + delta off by {stated_err:.2e}; phase-shift reconstruction residual {recon_err:.2e}"
        ),
    }
}

fn dual_basis_equivalence() -> Outcome {
    let h = c(FRAC_1_SQRT_2, 0.0);
    let had = Mat2::new(h, h, h, -h).unwrap();
    let half = c(0.5, 0.0);
    let plus = Mat2::new(half, half, half, half).unwrap();
    let minus = Mat2::new(half, -half, -half, half).unwrap();
    let mut rng = seeded_rng(107);
    let (mut worst, mut state_worst) = (0f64, 0f64);
    for _ in 0..TRIALS {
        let u = random_diagonal(&mut rng);
        let lhs = had * u.matrix() * had;
        let rhs = (plus.scale(u.alpha()) + minus.scale(u.alpha().conj())).scale(Complex64::from_polar(1.0, u.phase()));
        worst = worst.max(lhs.max_abs_diff(&rhs));
        let psi = random_state(&mut rng);
        let [a, b] = rhs.apply(psi.amplitudes());
        let out = dual_basis_mirror(&psi, &u);
        state_worst = state_worst.max((out.a() - a).norm()).max((out.b() - b).norm());
    }
    Outcome {
        pass: worst < 1e-12 && state_worst < 1e-12,
        detail: format!("max entry gap {worst:.2e}; state gap {state_worst:.2e}"),
    }
}

fn naive_mul(x: &MatN, y: &MatN) -> Vec<Vec<Complex64>> {
    let n = x.dim();
    (0..n)
        .map(|r| (0..n).map(|col| (0..n).map(|k| x[(r, k)] * y[(k, col)]).sum()).collect())
        .collect()
}

fn fuzzy_sphere() -> Outcome {
    let (mut comm, mut radius) = (0f64, 0f64);
    for n in 2..=16 {
        let irrep = build_irrep(n).unwrap();
        let j = irrep.generators();
        for (a, b, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            let ab = naive_mul(&j[a], &j[b]);
            let ba = naive_mul(&j[b], &j[a]);
            for r in 0..n {
                for col in 0..n {
                    let gap = ab[r][col] - ba[r][col] - c(0.0, 1.0) * j[k][(r, col)];
                    comm = comm.max(gap.norm());
                }
            }
        }
        let x = fuzzy_coordinates(n).unwrap();
        let sq: Vec<_> = x.coords().iter().map(|m| naive_mul(m, m)).collect();
        for (r, ((r0, r1), r2)) in sq[0].iter().zip(&sq[1]).zip(&sq[2]).enumerate() {
            for (col, ((a, b), d)) in r0.iter().zip(r1).zip(r2).enumerate() {
                let id = if r == col { 1.0 } else { 0.0 };
                radius = radius.max((a + b + d - c(id, 0.0)).norm());
            }
        }
    }
    let s3 = 3f64.sqrt();
    let (o, i, z) = (c(1.0 / s3, 0.0), c(0.0, 1.0 / s3), c(0.0, 0.0));
    let sigma_over_root3 = [[[z, o], [o, z]], [[z, -i], [i, z]], [[o, z], [z, -o]]];
    let x2 = fuzzy_coordinates(2).unwrap();
    let mut pauli = 0f64;
    for (m, want) in x2.coords().iter().zip(sigma_over_root3) {
        for r in 0..2 {
            for col in 0..2 {
                pauli = pauli.max((m[(r, col)] - want[r][col]).norm());
            }
        }
    }
    Outcome {
        pass: comm < 1e-12 && radius < 1e-11 && pauli < 1e-15,
        detail: format!("commutator gap {comm:.2e}; radius gap {radius:.2e}; n=2 vs sigma/sqrt3 {pauli:.2e}"),
    }
}

const GOLDEN: &str = "\
|- A    [cut]
  |- A & A^    [axiom superposition: mirror measurement of the superposed state]
  A & A^ |- A    [&L1]
    A |- A    [id]
";

fn cut_derivation() -> Outcome {
    let mut g = ObserverProfile::quantum_external();
    let tree = derive_cut_scenario(&mut g);
    let matches = tree.as_ref().map(|t| t.render() == GOLDEN && t.validate().is_ok()).unwrap_or(false);
    let second = derive_cut_scenario(&mut g);
    let exhausted = second == Err(LogicError::AxiomExhausted { axiom: AxiomId::Superposition });
    Outcome {
        pass: matches && exhausted,
        detail: format!("golden transcript {}; second use {}", if matches { "matches" } else { "differs" }, match second {
            Err(e) => e.to_string(),
            Ok(t) => format!("succeeded with {}", t.conclusion()),
        }),
    }
}

fn cloning_paradox() -> Outcome {
    let bottom: Sequent = "|- _|_".parse().unwrap();
    let cloned = cloning_paradox_demo(true);
    let conj = cloned.conjunction.as_ref().map(|t| t.conclusion().to_string());
    let collapse = cloned.collapse.as_ref().map(|t| t.conclusion().clone());
    let contradiction = conj.as_deref() == Some("|- A & A^") && collapse.as_ref() == Some(&bottom);

    let halted = cloning_paradox_demo(false);
    let stops = halted.cuts.len() == 1 && matches!(halted.halted, Some(LogicError::AxiomExhausted { .. }));
    let search = bounded_search(&ObserverProfile::quantum_external(), &[], DEFAULT_DEPTH);
    let no_bottom = !search.derivable(&bottom) && search.sequents().iter().all(|s| !s.contains_falsum());
    Outcome {
        pass: contradiction && stops && no_bottom,
        detail: format!(
            "cloning: G {} and A {}; no cloning: halts after one cut = {stops}, {} sequents searched, falsum reachable = {}",
            conj.unwrap_or_else(|| "nothing".into()),
            collapse.map_or("nothing".into(), |s| s.to_string()),
            search.len(),
            !no_bottom
        ),
    }
}

fn communication() -> Outcome {
    use Observer::*;
    let mut holds = Vec::new();
    for x in [A, G, P] {
        for y in [A, G, P] {
            if can_communicate(x, y) {
                holds.push(format!("{x}@{y}"));
            }
        }
    }
    let expected = ["A@G", "G@A", "G@P", "P@G"];
    Outcome {
        pass: holds == expected && !can_communicate(A, P),
        detail: format!("holding pairs {}", holds.join(" ")),
    }
}

fn monte_carlo() -> Outcome {
    let psi = QubitState::new(c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)).unwrap();
    let mut rng = seeded_rng(112);
    let draws = 100_000;
    let zeros = (0..draws)
        .filter(|_| projective_measure_with(&psi, &mut rng).outcome == Basis::Zero)
        .count();
    let freq = zeros as f64 / draws as f64;
    Outcome {
        pass: (freq - 0.5).abs() <= 0.005,
        detail: format!("outcome-0 frequency {freq:.5}"),
    }
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    // (number, name, runtime limit, expected to pass)
    type Criterion = (u32, &'static str, Option<Duration>, bool, fn() -> Outcome);
    let criteria: [Criterion; 12] = [
        (1, "mirror preservation", secs(1), true, mirror_preservation),
        (2, "mirror reversibility", None, true, mirror_reversibility),
        (3, "liar swap", None, true, liar_swap),
        (4, "composed measurement", None, true, composed_measurement),
        (5, "projector algebra", None, true, projector_algebra),
        // The stated global-phase relation has the wrong sign: with
        // alpha = e^{-i delta} the factorization needs phi' = phi - delta.
        (6, "decomposition round-trips", None, false, decomposition_round_trips),
        (7, "dual-basis equivalence", None, true, dual_basis_equivalence),
        (8, "fuzzy sphere", secs(1), true, fuzzy_sphere),
        (9, "cut derivation", None, true, cut_derivation),
        (10, "cloning paradox", secs(5), true, cloning_paradox),
        (11, "communication relation", None, true, communication),
        (12, "monte-carlo sanity", secs(2), true, monte_carlo),
    ];
    let mut unexpected = Vec::new();
    for (n, name, limit, expect_pass, run) in criteria {
        let out = timed(limit, run);
        let verdict = if out.pass { "PASS" } else { "FAIL" };
        let note = if out.pass == expect_pass { "" } else { " (unexpected)" };
        println!("criterion {n:>2} {verdict} {name}: {}{note}", out.detail);
        if out.pass != expect_pass {
            unexpected.push(n);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: results match expectations");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected results for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}

