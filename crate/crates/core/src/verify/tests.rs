use super::*;
use crate::algebra::{rat, ratio, Rational};
use crate::deform::IndexSet;
use crate::systems::ParamVec;

fn set(v: &[u32]) -> IndexSet {
    IndexSet::new(v.to_vec()).unwrap()
}

fn spec(id: SystemId, p: Vec<Rational>, d: &[u32], n: i64) -> DeletionSpec {
    DeletionSpec::new(id, ParamVec::new(id, p).unwrap(), set(d), n).unwrap()
}

fn grid(id: SystemId) -> GridSpec {
    GridSpec::default_for(id, 61)
}

#[test]
fn identity_anchors() {
    let r = check_identity(&spec(SystemId::H, vec![], &[2], 2));
    assert!(r.is_pass());
    assert_eq!(r.proportionality_constant.unwrap().to_string(), "1/2");
    let r = check_identity(&spec(SystemId::L, vec![ratio(7, 2)], &[1], 1));
    assert_eq!(r.proportionality_constant.unwrap().to_string(), "-1");
    let r = check_identity(&spec(SystemId::C, vec![ratio(9, 2)], &[1], 1));
    assert_eq!(r.proportionality_constant.unwrap().to_string(), "-7/5");
}

#[test]
fn numerator_and_deleted_examples() {
    assert!(check_numerator_identity(&spec(SystemId::H, vec![], &[2], 2), 0).is_pass());
    assert!(check_numerator_identity(&spec(SystemId::L, vec![ratio(9, 2)], &[1], 1), 1).is_pass());
    for n in 0..3 {
        assert!(check_numerator_identity(&spec(SystemId::J, vec![ratio(9, 4), ratio(17, 6)], &[], 2), n).is_pass());
    }
    assert!(check_deleted_identity(&spec(SystemId::H, vec![], &[2], 2), 1).unwrap().is_pass());
    let j = spec(SystemId::J, vec![ratio(11, 2), ratio(11, 2)], &[1, 2], 2);
    assert!(check_deleted_identity(&j, 2).unwrap().is_pass());
    let m = spec(SystemId::M, vec![ratio(13, 2), rat(1)], &[1], 1);
    assert!(check_deleted_identity(&m, 1).unwrap().is_pass());
    assert!(check_deleted_identity(&m, 2).is_err());
}

#[test]
fn shift_examples() {
    assert!(check_shift_down(SystemId::H, &[], &set(&[2, 3])).unwrap().is_pass());
    assert!(check_shift_down(SystemId::L, &[ratio(7, 2)], &set(&[2])).unwrap().is_pass());
    assert!(check_shift_down(SystemId::C, &[ratio(11, 2)], &set(&[3])).unwrap().is_pass());
    assert!(check_shift_down(SystemId::C, &[ratio(11, 2)], &set(&[0, 3])).is_err());
    assert!(check_shift_up(SystemId::H, &[], &set(&[2])).is_pass());
    assert!(check_shift_up(SystemId::S, &[ratio(15, 2)], &set(&[1])).is_pass());
    assert!(check_shift_up(SystemId::Kh, &[ratio(5, 2), rat(20)], &set(&[1])).is_pass());
}

#[test]
fn xi_const_and_energy_examples() {
    let r = check_xi_const(SystemId::H, &[], 2);
    assert_eq!(r.proportionality_constant.unwrap().to_string(), "16");
    assert!(check_xi_const(SystemId::J, &[ratio(9, 2), ratio(9, 2)], 1).is_pass());
    assert!(check_xi_const(SystemId::RM, &[ratio(17, 2), rat(2)], 1).is_pass());
    let e = check_energy_formulas(SystemId::J, &[ratio(13, 2), ratio(13, 2)], 2, 0..=4, 0..=2).unwrap();
    assert!(e.is_pass());
    assert!(check_energy_formulas(SystemId::Kh, &[ratio(5, 2), rat(30)], 1, 0..=0, 0..=1).unwrap().is_pass());
    assert!(check_energy_formulas(SystemId::L, &[ratio(13, 5)], 3, 0..=2, 0..=2).unwrap().is_pass());
    assert!(check_energy_formulas(SystemId::L, &[ratio(1, 3)], 3, 0..=2, 0..=2).is_err());
}

#[test]
fn ka_gate_examples() {
    let r = check_ka_gate(&spec(SystemId::H, vec![], &[2], 2));
    assert!(r.is_pass(), "{r:?}");
    let r = check_ka_gate(&spec(SystemId::H, vec![], &[1], 2));
    assert!(r.is_pass() && r.details.contains("ka_condition false"), "{r:?}");
    let r = check_ka_gate(&spec(SystemId::J, vec![ratio(21, 2), ratio(21, 2)], &[2], 2));
    assert!(r.is_pass(), "{r:?}");
}

#[test]
fn potential_anchor_h() {
    let s = spec(SystemId::H, vec![], &[2], 2);
    let (rows, dropped) = deformed_potentials(&s, &GridSpec::new(-1.0, 1.0, 3).unwrap()).unwrap();
    assert_eq!(dropped, 0);
    assert!((rows[1][1] + 5.0).abs() < 1e-12 && (rows[1][2] + 5.0).abs() < 1e-12, "{rows:?}");
    let r = check_potential_equivalence(&s, &grid(SystemId::H), 1e-8).unwrap();
    assert!(r.is_pass(), "{r:?}");
}

#[test]
fn potential_equivalence_examples() {
    let cases = [
        spec(SystemId::J, vec![ratio(15, 2), ratio(15, 2)], &[1, 2], 2),
        spec(SystemId::L, vec![ratio(23, 3)], &[2], 3),
        spec(SystemId::C, vec![ratio(29, 4)], &[1, 2], 2),
        spec(SystemId::K, vec![ratio(29, 4), ratio(7, 3)], &[2], 2),
        spec(SystemId::M, vec![ratio(23, 4), ratio(5, 3)], &[2], 2),
        spec(SystemId::S, vec![ratio(37, 6)], &[1, 2], 3),
        spec(SystemId::RM, vec![ratio(29, 4), ratio(11, 3)], &[2], 2),
        spec(SystemId::Hst, vec![ratio(25, 4), ratio(4, 3)], &[2], 2),
        spec(SystemId::Kh, vec![ratio(23, 4), ratio(110, 3)], &[2], 2),
        spec(SystemId::HDPT, vec![ratio(21, 4), ratio(53, 6)], &[2], 2),
    ];
    for s in &cases {
        let r = check_potential_equivalence(s, &grid(s.system), 1e-8).unwrap();
        assert!(r.is_pass(), "{} {r:?}", s.system);
    }
}

#[test]
fn singular_configuration_is_flagged() {
    let s = spec(SystemId::H, vec![], &[1], 2);
    let r = check_potential_equivalence(&s, &GridSpec::new(-5.0, 5.0, 401).unwrap(), 1e-8).unwrap();
    assert!(r.is_pass(), "{r:?}");
    assert!(r.details.contains("ka_condition false"));
}

#[test]
fn residual_examples() {
    let cases = [
        (spec(SystemId::H, vec![], &[2], 2), 0),
        (spec(SystemId::L, vec![ratio(11, 2)], &[2], 2), 1),
        (spec(SystemId::M, vec![ratio(15, 2), rat(1)], &[2], 2), 0),
    ];
    for (s, n) in &cases {
        let r = check_schrodinger_residual(s, *n, &grid(s.system), 1e-6).unwrap();
        assert!(r.is_pass(), "{} {r:?}", s.system);
    }
}

#[test]
fn norm_anchor_h() {
    let s = spec(SystemId::H, vec![], &[2], 2);
    let r = check_orthogonality(&s, &[0, 1, 2], 1e-6).unwrap();
    assert!(r.is_pass(), "{r:?}");
    let six_root_pi = 6.0 * std::f64::consts::PI.sqrt();
    let first = r.details.split(", ").next().unwrap();
    let got: f64 = first.split('=').nth(1).unwrap().parse().unwrap();
    assert!((got / six_root_pi - 1.0).abs() < 1e-6, "{got}");
}

#[test]
fn f_identity_examples() {
    assert!(check_f_identity(SystemId::H, &[], 2, &grid(SystemId::H), 1e-9).unwrap().is_pass());
    assert!(check_f_identity(SystemId::L, &[ratio(15, 2)], 1, &grid(SystemId::L), 1e-9).unwrap().is_pass());
    let r = check_f_identity(SystemId::HDPT, &[ratio(3, 2), rat(12)], 1, &grid(SystemId::HDPT), 1e-9).unwrap();
    assert!(r.is_pass(), "{r:?}");
}

#[test]
fn enlarged_si_examples() {
    let cases: [(SystemId, Vec<Rational>); 3] = [
        (SystemId::M, vec![ratio(17, 2), rat(1)]),
        (SystemId::RM, vec![ratio(19, 2), rat(3)]),
        (SystemId::Kh, vec![ratio(5, 2), rat(40)]),
    ];
    for (id, p) in &cases {
        let r = check_enlarged_si(*id, p, &set(&[2]), &grid(*id), 1e-8).unwrap();
        assert!(r.is_pass(), "{id} {r:?}");
        assert!(r.details.contains("fbar_D checked"));
    }
}

#[test]
fn x_wronskian_examples() {
    let s = spec(SystemId::J, vec![ratio(15, 2), ratio(15, 2)], &[1, 2], 2);
    let r = check_x_wronskian(&s, &grid(SystemId::J), 1e-9).unwrap();
    assert!(r.is_pass(), "{r:?}");
}

#[test]
fn samplers_are_deterministic_and_valid() {
    for id in SystemId::ALL {
        for t in 0..5 {
            let a = sample_exact(id, 11, t, &SamplerConfig::EXACT).unwrap();
            assert_eq!(a, sample_exact(id, 11, t, &SamplerConfig::EXACT).unwrap());
            assert!(a.m() >= 1 && a.m() <= 4 && a.n <= i64::from(a.d.max().unwrap()) + 3);
            let b = sample_nodeless(id, 11, t, &SamplerConfig::NUMERIC).unwrap();
            assert!(b.lambda_bar_valid());
        }
    }
}

#[test]
fn report_names_are_unique() {
    let s = spec(SystemId::H, vec![], &[2], 2);
    let rep = VerificationReport::new(s, vec![CheckResult::pass("a"), CheckResult::fail("a", "x")], 0.0);
    assert_eq!(rep.results[1].name, "a#2");
    assert_eq!(rep.summary, Summary { pass: 1, fail: 1, skipped: 0 });
    let js = serde_json::to_value(&rep.results[1]).unwrap();
    assert_eq!(js["status"], "fail");
}

#[test]
fn grid_parsing() {
    let g = GridSpec::parse("-5:5:401").unwrap();
    assert_eq!((g.lo, g.hi, g.count), (-5.0, 5.0, 401));
    assert!(GridSpec::parse("5:-5:3").is_err());
    assert!(GridSpec::parse("1:2").is_err());
    let pts = GridSpec::new(-1.0, 2.0, 5).unwrap().points(crate::systems::XDomain::HalfLine).unwrap();
    assert!(pts[0] > 0.0 && pts.len() == 5);
}
