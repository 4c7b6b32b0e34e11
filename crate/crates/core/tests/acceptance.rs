//! Acceptance criteria. Runs as a plain binary and prints one PASS/FAIL
//! line per criterion; the process fails if any criterion fails.

use std::time::Instant;

use pvka_core::algebra::{rat, ratio, wronskian, Poly, Rational};
use pvka_core::deform::{ka_condition, DeletionSpec, IndexSet};
use pvka_core::systems::{Group, ParamVec, SystemId};
use pvka_core::verify::*;
use rand::Rng;

/// Potential equality, relative to 1 + |U^KA|.
const TOL_POTENTIAL: f64 = 1e-8;
/// Richardson-extrapolated Schrödinger residual.
const TOL_RESIDUAL: f64 = 1e-6;
/// Quadrature of norms and overlaps.
const TOL_QUADRATURE: f64 = 1e-6;
/// Riccati-form relations of the deformed ground states.
const TOL_ENLARGED_SI: f64 = 1e-8;

const SEED: u64 = 20_240_611;
const EXACT_TRIALS: u64 = 50;
const NUMERIC_PER_SYSTEM: u64 = 2;
const EXACT_BUDGET_S: f64 = 60.0;
const NUMERIC_BUDGET_S: f64 = 30.0;

struct Outcome {
    ok: bool,
    summary: String,
}

fn outcome(ok: bool, summary: impl Into<String>) -> Outcome {
    Outcome { ok, summary: summary.into() }
}

fn set(v: &[u32]) -> IndexSet {
    IndexSet::new(v.to_vec()).unwrap()
}

fn spec(id: SystemId, p: Vec<Rational>, d: &[u32], n: i64) -> DeletionSpec {
    DeletionSpec::new(id, ParamVec::new(id, p).unwrap(), set(d), n).unwrap()
}

fn describe(s: &DeletionSpec) -> String {
    format!("{} {} D={} N={}", s.system, s.lambda, s.d, s.n)
}

/// Runs trials on all cores; results come back in input order.
fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = items.len().div_ceil(threads).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> = items.chunks(chunk).map(|c| s.spawn(|| c.iter().map(&f).collect::<Vec<_>>())).collect();
        handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
    })
}

fn exact_suite() -> Outcome {
    let start = Instant::now();
    let jobs: Vec<(SystemId, u64)> =
        SystemId::ALL.iter().flat_map(|&id| (0..EXACT_TRIALS).map(move |t| (id, t))).collect();
    let results = par_map(&jobs, |&(id, t)| {
        let s = sample_exact(id, SEED, t, &SamplerConfig::EXACT).unwrap();
        (describe(&s), check_identity(&s))
    });
    let elapsed = start.elapsed().as_secs_f64();
    let skipped = results.iter().filter(|r| r.1.is_skipped()).count();
    let bad: Vec<_> = results
        .iter()
        .filter(|(_, r)| !r.is_skipped() && !(r.is_pass() && r.proportionality_constant.is_some()))
        .collect();
    for (d, r) in &bad {
        eprintln!("  identity failed: {d}: {}", r.details);
    }
    let ok = bad.is_empty() && elapsed < EXACT_BUDGET_S;
    outcome(
        ok,
        format!(
            "{} trials, {} failed, {skipped} skipped, {elapsed:.1}s (budget {EXACT_BUDGET_S}s)",
            results.len(),
            bad.len()
        ),
    )
}

fn anchors() -> Outcome {
    let h = spec(SystemId::H, vec![], &[2], 2);
    let xi = pvka_core::deform::xi_capital(SystemId::H, &[], &h.d).unwrap();
    let xib = pvka_core::deform::xi_bar_capital(SystemId::H, &[], &h.d_bar).unwrap();
    let cases = [
        (h.clone(), "1/2"),
        (spec(SystemId::L, vec![ratio(7, 2)], &[1], 1), "-1"),
        (spec(SystemId::C, vec![ratio(9, 2)], &[1], 1), "-7/5"),
    ];
    let mut ok = xi == Poly::from_ints(&[2, 0, 4]) && xib == Poly::from_ints(&[4, 0, 8]);
    let mut got = Vec::new();
    for (s, want) in &cases {
        let r = check_identity(s);
        let c = r.proportionality_constant.as_ref().map(|c| c.to_string()).unwrap_or_default();
        ok &= r.is_pass() && c == *want;
        got.push(format!("{}={c}", s.system));
    }
    outcome(ok, got.join(", "))
}

fn numeric_configs() -> Vec<DeletionSpec> {
    SystemId::ALL
        .iter()
        .flat_map(|&id| {
            (0..NUMERIC_PER_SYSTEM).map(move |t| sample_nodeless(id, SEED, t, &SamplerConfig::NUMERIC).unwrap())
        })
        .collect()
}

fn grid(id: SystemId) -> GridSpec {
    GridSpec::default_for(id, 101)
}

fn potential_equality(configs: &[DeletionSpec]) -> Outcome {
    let start = Instant::now();
    let h = spec(SystemId::H, vec![], &[2], 2);
    let (rows, _) = deformed_potentials(&h, &GridSpec::new(-1.0, 1.0, 3).unwrap()).unwrap();
    let mut ok = (rows[1][1] + 5.0).abs() < 1e-12 && (rows[1][2] + 5.0).abs() < 1e-12;
    let results = par_map(configs, |s| check_potential_equivalence(s, &grid(s.system), TOL_POTENTIAL).unwrap());
    let mut worst = 0.0f64;
    for (s, r) in configs.iter().zip(&results) {
        if !r.is_pass() {
            eprintln!("  potential failed: {}: {:?}", describe(s), r);
            ok = false;
        }
        worst = worst.max(r.max_abs_error.unwrap_or(f64::INFINITY));
    }
    let elapsed = start.elapsed().as_secs_f64();
    ok &= configs.len() >= 20 && elapsed < NUMERIC_BUDGET_S;
    outcome(ok, format!("H anchor -5 at x=0, {} configs, worst {worst:.2e}, {elapsed:.1}s", configs.len()))
}

fn residuals(configs: &[DeletionSpec]) -> Outcome {
    let results = par_map(configs, |s| {
        let cap = s.system.nmax(s.lambda.values()).unwrap_or(2).min(2) as usize;
        (0..=cap).map(|n| check_schrodinger_residual(s, n, &grid(s.system), TOL_RESIDUAL).unwrap()).collect::<Vec<_>>()
    });
    let mut ok = true;
    let (mut count, mut worst) = (0, 0.0f64);
    for (s, rs) in configs.iter().zip(&results) {
        for r in rs {
            count += 1;
            if !r.is_pass() {
                eprintln!("  residual failed: {}: {:?}", describe(s), r);
                ok = false;
            }
            worst = worst.max(r.max_abs_error.unwrap_or(f64::INFINITY));
        }
    }
    outcome(ok, format!("{count} states, worst {worst:.2e}"))
}

fn orthogonality(configs: &[DeletionSpec]) -> Outcome {
    let h = spec(SystemId::H, vec![], &[2], 2);
    let r = check_orthogonality(&h, &[0, 1, 2], TOL_QUADRATURE).unwrap();
    let first = r.details.split(", ").next().unwrap_or("");
    let norm0: f64 = first.split('=').nth(1).and_then(|v| v.parse().ok()).unwrap_or(f64::NAN);
    let anchor = 6.0 * std::f64::consts::PI.sqrt();
    let mut ok = r.is_pass() && (norm0 / anchor - 1.0).abs() <= TOL_QUADRATURE;
    let chosen: Vec<&DeletionSpec> =
        configs.iter().filter(|s| matches!(s.system, SystemId::L | SystemId::J | SystemId::S | SystemId::M)).collect();
    let results = par_map(&chosen, |s| {
        let cap = s.system.nmax(s.lambda.values()).unwrap_or(2).min(2) as usize;
        let ns: Vec<usize> = (0..=cap).collect();
        check_orthogonality(s, &ns, TOL_QUADRATURE).unwrap()
    });
    for (s, r) in chosen.iter().zip(&results) {
        if !r.is_pass() {
            eprintln!("  orthogonality failed: {}: {:?}", describe(s), r);
            ok = false;
        }
    }
    ok &= chosen.len() >= 5;
    outcome(ok, format!("H norm {norm0:.12} vs 6*sqrt(pi), {} further configs (L, J, s, M)", chosen.len()))
}

fn ka_blocks(e: &[u32]) -> bool {
    let mut i = 0;
    while i < e.len() {
        let mut j = i;
        while j + 1 < e.len() && e[j + 1] == e[j] + 1 {
            j += 1;
        }
        if e[i] != 0 && (j - i + 1) % 2 == 1 {
            return false;
        }
        i = j + 1;
    }
    true
}

fn ka_gate() -> Outcome {
    let mut ok = true;
    let mut checked = 0;
    for id in SystemId::ALL {
        for t in 0..3 {
            let p = sample_params(id, &mut trial_rng(SEED, id, 1000 + t), 0);
            for v in 0..=6 {
                if let Some(r) = nodeless_parity(id, p.values(), v) {
                    checked += 1;
                    if !r.is_pass() {
                        eprintln!("  parity failed: {id} {p} v={v}: {r:?}");
                        ok = false;
                    }
                }
            }
        }
    }
    let mut agree = 0;
    for mask in 0u32..1024 {
        let e: Vec<u32> = (0..10).filter(|k| mask >> k & 1 == 1).collect();
        if ka_condition(&e) == ka_blocks(&e) {
            agree += 1;
        }
    }
    ok &= agree == 1024;
    outcome(ok, format!("{checked} single-index parity checks, {agree}/1024 subsets agree"))
}

fn structural() -> Outcome {
    let mut fails = Vec::new();
    let mut note = |ok: bool, what: String| {
        if !ok {
            fails.push(what);
        }
    };
    for id in SystemId::ALL.into_iter().filter(|id| id.group() == Group::A) {
        let p = sample_params(id, &mut trial_rng(SEED, id, 2000), 0);
        for n in 0..=5 {
            note(check_xi_const(id, p.values(), n).is_pass(), format!("xi_const {id} N={n}"));
        }
    }
    let mut shifts = 0;
    for t in 0..20u64 {
        let id = SystemId::ALL[t as usize % 11];
        let s =
            sample_exact(id, SEED, 3000 + t, &SamplerConfig { max_m: 3, max_entry: 5, extra_n: 0, max_n: 5 }).unwrap();
        let down_set = IndexSet::new(s.d.as_slice().iter().map(|d| d + 1).collect()).unwrap();
        let down = check_shift_down(id, s.lambda.values(), &down_set).unwrap();
        let up = check_shift_up(id, s.lambda.values(), &s.d);
        note(down.is_pass() || down.is_skipped(), format!("shift_down {}", describe(&s)));
        note(up.is_pass() || up.is_skipped(), format!("shift_up {}", describe(&s)));
        shifts += usize::from(down.is_pass()) + usize::from(up.is_pass());
    }
    let mut rng = trial_rng(SEED, SystemId::H, 4000);
    for k in 0..100 {
        let id = SystemId::ALL[k % 11];
        let p = sample_params(id, &mut rng, 0);
        let mut idx: Vec<usize> = (0..6).collect();
        let picks: Vec<usize> = (0..3).map(|_| idx.swap_remove(rng.gen_range(0..idx.len()))).collect();
        let xi = |v: usize| id.pseudo_poly(v, p.values()).unwrap();
        let lhs = wronskian(&[wronskian(&[xi(picks[0]), xi(picks[1])]), wronskian(&[xi(picks[0]), xi(picks[2])])]);
        let rhs = &wronskian(&[xi(picks[0])]) * &wronskian(&[xi(picks[0]), xi(picks[1]), xi(picks[2])]);
        note(lhs == rhs, format!("wronskian identity {id} {picks:?}"));
    }
    for id in SystemId::ALL {
        for n in 0..=5 {
            let p = sample_params(id, &mut trial_rng(SEED, id, 5000 + n as u64), 0);
            let r = check_energy_formulas(id, p.values(), n, 0..=6, 0..=6).unwrap();
            note(r.is_pass(), format!("energy {id} N={n}"));
        }
    }
    for f in &fails {
        eprintln!("  structural failed: {f}");
    }
    outcome(
        fails.is_empty(),
        format!("xi_const, {shifts}/40 shift identities, 100 Wronskian identities, energies; {} failures", fails.len()),
    )
}

fn enlarged_si() -> Outcome {
    let cases: Vec<(SystemId, Vec<Rational>, &[u32])> = vec![
        (SystemId::M, vec![ratio(17, 2), rat(1)], &[2]),
        (SystemId::RM, vec![ratio(19, 2), rat(3)], &[2]),
        (SystemId::Kh, vec![ratio(5, 2), rat(40)], &[2]),
        (SystemId::M, vec![ratio(23, 3), ratio(5, 4)], &[3]),
        (SystemId::RM, vec![ratio(37, 4), ratio(7, 2)], &[4]),
        (SystemId::Kh, vec![ratio(13, 4), rat(45)], &[3]),
        (SystemId::M, vec![ratio(17, 2), rat(1)], &[2, 3]),
        (SystemId::RM, vec![ratio(19, 2), rat(3)], &[2, 4]),
        (SystemId::Kh, vec![ratio(5, 2), rat(40)], &[2, 3]),
    ];
    let mut ok = true;
    let mut worst = 0.0f64;
    for (id, p, d) in &cases {
        let r = check_enlarged_si(*id, p, &set(d), &grid(*id), TOL_ENLARGED_SI).unwrap();
        if !r.is_pass() {
            eprintln!("  enlarged SI failed: {id} D={d:?}: {r:?}");
            ok = false;
        }
        worst = worst.max(r.max_abs_error.unwrap_or(f64::INFINITY));
    }
    outcome(ok, format!("{} cases (M=1 and M=2 on M, RM, Kh), worst {worst:.2e}", cases.len()))
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() {
    let configs = numeric_configs();
    let criteria: Vec<Criterion> = vec![
        ("1 exact identity suite", Box::new(exact_suite)),
        ("2 anchor constants", Box::new(anchors)),
        ("3 potential equality", Box::new(|| potential_equality(&configs))),
        ("4 Schrodinger residuals", Box::new(|| residuals(&configs))),
        ("5 orthogonality and norms", Box::new(|| orthogonality(&configs))),
        ("6 KA gate and nodelessness", Box::new(ka_gate)),
        ("7 structural identities", Box::new(structural)),
        ("8 enlarged shape invariance", Box::new(enlarged_si)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let o = run();
        println!("{} [{name}] {}", if o.ok { "PASS" } else { "FAIL" }, o.summary);
        failed += usize::from(!o.ok);
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
