use super::*;
use crate::algebra::{proportional, ratio};
use proptest::prelude::*;

fn set(v: &[u32]) -> IndexSet {
    IndexSet::new(v.to_vec()).unwrap()
}

fn sample(id: SystemId) -> Vec<Rational> {
    use SystemId::*;
    match id {
        H => vec![],
        L | C => vec![ratio(13, 5)],
        J => vec![ratio(9, 4), ratio(17, 6)],
        K => vec![ratio(9, 4), ratio(7, 3)],
        M => vec![ratio(23, 4), ratio(5, 3)],
        S => vec![ratio(37, 6)],
        RM => vec![ratio(29, 4), ratio(11, 3)],
        Hst => vec![ratio(25, 4), ratio(4, 3)],
        Kh => vec![ratio(7, 4), ratio(50, 3)],
        HDPT => vec![ratio(5, 4), ratio(53, 6)],
    }
}

#[test]
fn bar_set_examples() {
    assert_eq!(bar_set(&set(&[3]), 3).unwrap(), set(&[1, 2, 3]));
    assert_eq!(bar_set(&set(&[1, 3]), 4).unwrap(), set(&[0, 2, 4]));
    assert_eq!(bar_set(&set(&[0]), 0).unwrap(), IndexSet::empty());
    assert_eq!(bar_set(&set(&[2]), 1), Err(Error::NTooSmall { n: 1, max: 2 }));
    assert!(IndexSet::new(vec![1, 1]).is_err());
}

#[test]
fn ell_examples() {
    assert_eq!(ell(&IndexSet::empty()), 0);
    assert_eq!(ell(&set(&[2, 3, 5])), 7);
    for m in 0..6 {
        assert_eq!(ell(&IndexSet::upto(m - 1)), 0);
    }
}

#[test]
fn ell_matches_on_bar_set() {
    for n in 0..=8i64 {
        for mask in 0u32..(1 << (n + 1)) {
            let d = IndexSet::new((0..=n as u32).filter(|k| mask >> k & 1 == 1).collect()).unwrap();
            assert_eq!(ell(&d), ell(&bar_set(&d, n).unwrap()), "D={d} N={n}");
        }
    }
}

#[test]
fn shifted_set_examples() {
    assert_eq!(shifted_sets(&set(&[2, 5])).unwrap(), (set(&[1, 4]), set(&[3, 6])));
    assert_eq!(d_plus(&set(&[0])), set(&[1]));
    assert_eq!(d_minus(&set(&[0])), Err(Error::NegativeIndex));
    assert_eq!(shifted_sets(&IndexSet::empty()).unwrap(), (IndexSet::empty(), IndexSet::empty()));
}

/// Block characterization: maximal runs of consecutive levels have even
/// length, except a run starting at 0.
fn ka_blocks(e: &[u32]) -> bool {
    let mut v = e.to_vec();
    v.sort_unstable();
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j + 1 < v.len() && v[j + 1] == v[j] + 1 {
            j += 1;
        }
        if v[i] != 0 && (j - i + 1) % 2 == 1 {
            return false;
        }
        i = j + 1;
    }
    true
}

#[test]
fn ka_condition_examples_and_blocks() {
    assert!(ka_condition(&[1, 2]));
    assert!(!ka_condition(&[1]));
    assert!(ka_condition(&[0, 1, 2, 4, 5]));
    assert!(ka_condition(&[]));
    for mask in 0u32..1024 {
        let e: Vec<u32> = (0..10).filter(|k| mask >> k & 1 == 1).collect();
        assert_eq!(ka_condition(&e), ka_blocks(&e), "{e:?}");
    }
}

#[test]
fn xi_examples() {
    let h: [Rational; 0] = [];
    assert_eq!(xi_capital(SystemId::H, &h, &set(&[2])).unwrap(), Poly::from_ints(&[2, 0, 4]));
    assert_eq!(xi_bar_capital(SystemId::H, &h, &set(&[1, 2])).unwrap(), Poly::from_ints(&[4, 0, 8]));
    for id in SystemId::ALL {
        let p = sample(id);
        assert_eq!(xi_capital(id, &p, &IndexSet::empty()).unwrap(), Poly::one());
        assert_eq!(xi_bar_capital(id, &p, &IndexSet::empty()).unwrap(), Poly::one());
        assert_eq!(xi_bar_capital(id, &p, &set(&[0])).unwrap().degree().finite(), Some(0));
    }
    let g = [ratio(13, 5)];
    assert_eq!(xi_capital(SystemId::L, &g, &set(&[1])).unwrap(), Poly::linear(ratio(3, 2) - &g[0], rat(1)));
    let gm2 = [&g[0] - rat(2)];
    let c1 = xi_bar_capital(SystemId::C, &gm2, &set(&[1])).unwrap();
    assert_eq!(c1, Poly::linear(-(rat(2) / (&g[0] - rat(1))), rat(2) * &gm2[0]));
}

#[test]
fn group_b_single_index_reduces_to_states() {
    for id in SystemId::ALL.into_iter().filter(|id| id.group() == Group::B) {
        let p = sample(id);
        for v in 0..5u32 {
            assert_eq!(xi_capital(id, &p, &set(&[v])).unwrap(), id.pseudo_poly(v as usize, &p).unwrap());
            assert_eq!(xi_bar_capital(id, &p, &set(&[v])).unwrap(), id.eigen_poly(v as usize, &p).unwrap());
        }
    }
}

#[test]
fn xi_const_for_full_block() {
    assert_eq!(xi_bar_capital(SystemId::H, &[], &IndexSet::upto(2)).unwrap(), Poly::from_ints(&[16]));
    for id in SystemId::ALL.into_iter().filter(|id| id.group() == Group::A) {
        let p = sample(id);
        for n in 0..4 {
            let x = xi_bar_capital(id, &p, &IndexSet::upto(n)).unwrap();
            assert_eq!(x.degree().finite(), Some(0), "{id} N={n}");
        }
    }
}

#[test]
fn swapping_flips_sign() {
    for id in SystemId::ALL {
        let p = sample(id);
        let a = xi_capital(id, &p, &set(&[1, 3, 4])).unwrap();
        let b = xi_capital(id, &p, &set(&[3, 1, 4])).unwrap();
        assert_eq!(a, -b, "{id}");
    }
}

#[test]
fn raising_minor_equals_xi() {
    let sets: [&[u32]; 6] = [&[0], &[2], &[1, 2], &[0, 3], &[2, 3, 5], &[1, 4]];
    for id in SystemId::ALL {
        let p = sample(id);
        for d in sets {
            let d = set(d);
            let x = xi_capital(id, &p, &d).unwrap();
            let r = xi_capital_raising(id, &p, &d).unwrap();
            assert_eq!(x, r, "{id} D={d}");
            assert_eq!(x.degree().finite(), Some(ell(&d) as usize), "{id} D={d}");
        }
    }
}

#[test]
fn numerator_examples() {
    for id in SystemId::ALL {
        let p = sample(id);
        for n in 0..4 {
            assert_eq!(numerator_poly(id, &p, &IndexSet::empty(), n).unwrap(), id.eigen_poly(n, &p).unwrap());
        }
        let d = set(&[1, 3]);
        for n in 0..3 {
            let num = numerator_poly(id, &p, &d, n).unwrap();
            assert_eq!(num.degree().finite(), Some((ell(&d) + 2 + n as i64) as usize), "{id} n={n}");
        }
    }
    let h = numerator_poly(SystemId::H, &[], &set(&[2]), 0).unwrap();
    assert!(proportional(&h, &Poly::from_ints(&[0, 12, 0, 8])).is_some());
    let g = [ratio(13, 5)];
    let l = numerator_poly(SystemId::L, &g, &set(&[1]), 0).unwrap();
    let xi2 = SystemId::L.pseudo_poly(2, &[&g[0] + rat(1)]).unwrap();
    assert!(proportional(&l, &xi2).is_some());
}

#[test]
fn zero_f_is_reported() {
    // Kh with μ = g(g+n) makes f_n vanish; g = 2, n = 1 gives μ = 6.
    let p = [rat(2), rat(6)];
    let err = xi_bar_capital(SystemId::Kh, &p, &set(&[1, 2]));
    assert!(matches!(err, Err(Error::NonGenericParameter(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// W[W[F,g], W[F,h]] = W[F]·W[F,g,h] on pseudo polynomials.
    #[test]
    fn wronskian_induction_step(sys in 0usize..11, a in 0u32..6, b in 0u32..6, c in 0u32..6) {
        prop_assume!(a != b && b != c && a != c);
        let id = SystemId::ALL[sys];
        let p = sample(id);
        let xi = |v: u32| id.pseudo_poly(v as usize, &p).unwrap();
        let f = [xi(a)];
        let wfg = wronskian(&[f[0].clone(), xi(b)]);
        let wfh = wronskian(&[f[0].clone(), xi(c)]);
        let lhs = wronskian(&[wfg, wfh]);
        let rhs = &wronskian(&f) * &wronskian(&[xi(a), xi(b), xi(c)]);
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn serialization_shape() {
    let spec = DeletionSpec::new(
        SystemId::J,
        ParamVec::new(SystemId::J, vec![ratio(9, 4), ratio(17, 6)]).unwrap(),
        set(&[1, 2]),
        3,
    )
    .unwrap();
    let js = serde_json::to_string(&spec).unwrap();
    assert_eq!(
        js,
        r#"{"system":"J","lambda":{"g":"9/4","h":"17/6"},"D":[1,2],"N":3,"Dbar":[0,3],"lambda_bar":{"g":"-7/4","h":"-7/6"}}"#
    );
}
