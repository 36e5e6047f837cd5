use ninthvar_core::characters::GroupType;
use ninthvar_core::identities::{
    check_cauchy, check_dual_cauchy, check_flagged, check_jt, check_jt_c_without_half, check_littlewood, check_littlewood_a,
    FlaggedKind,
};
use ninthvar_core::ninth::{h, o_determinant, phi, sp_determinant};
use ninthvar_core::partition::{Partition, Signature};
use ninthvar_core::ring::matrix::det_cofactor;
use ninthvar_core::ring::{rat, Monomial, Poly, VarId};
use ninthvar_core::sequences::{AdmissibleSequence, CSpec};
use ninthvar_core::Error;
use proptest::prelude::*;

fn p(parts: &[i64]) -> Partition {
    Partition::new(parts).unwrap()
}

fn factorial() -> AdmissibleSequence {
    AdmissibleSequence::factorial(CSpec::symbolic())
}

#[test]
fn truncated_checks_hold_at_every_smaller_cap() {
    let f = factorial();
    for cap in 0..=5 {
        assert!(check_cauchy(&f, 1, cap).unwrap().holds, "cauchy cap {cap}");
        assert!(check_littlewood(GroupType::C, &f, 1, cap).unwrap().holds, "littlewood C cap {cap}");
        assert!(check_littlewood(GroupType::B, &f, 1, cap).unwrap().holds, "littlewood B cap {cap}");
    }
    for cap in 0..=3 {
        assert!(check_littlewood_a(&f, 1, 1, cap).unwrap().holds, "littlewood A cap {cap}");
    }
}

#[test]
fn checks_hold_at_zero_c() {
    let f = AdmissibleSequence::factorial(CSpec::zeros());
    assert!(check_cauchy(&f, 2, 4).unwrap().holds);
    for ty in [GroupType::C, GroupType::B, GroupType::D] {
        assert!(check_littlewood(ty, &f, 2, 4).unwrap().holds, "{ty}");
    }
    assert!(check_littlewood_a(&f, 1, 1, 3).unwrap().holds);
    let cut = CSpec::zeros().with_negative_cut(true);
    for ty in GroupType::ALL {
        assert!(check_dual_cauchy(ty, &f, 2, 2).unwrap().holds, "{ty}");
        for lambda in Partition::contained_in(&p(&[2, 1])) {
            let sig = Signature::from_partition(&lambda, 2).unwrap();
            for kind in [FlaggedKind::JacobiTrudi, FlaggedKind::NagelsbachKostka, FlaggedKind::Giambelli] {
                assert!(check_flagged(kind, ty, &f, &sig, 2).unwrap().holds, "{ty} {kind:?} {lambda}");
            }
            if ty != GroupType::A {
                assert!(check_jt(ty, &cut, &lambda, 2).unwrap().holds, "jt {ty} {lambda}");
            }
        }
    }
}

#[test]
fn jt_refuses_without_its_hypotheses() {
    let lambda = p(&[1]);
    let err = check_jt(GroupType::C, &CSpec::symbolic(), &lambda, 1).unwrap_err();
    assert!(matches!(err, Error::HypothesisViolated(_)));
    let cut = CSpec::symbolic().with_negative_cut(true);
    assert!(matches!(check_jt(GroupType::D, &cut, &lambda, 1), Err(Error::HypothesisViolated(_))));
    assert!(check_jt(GroupType::D, &cut.with_c0_zero(), &lambda, 1).unwrap().holds);
}

#[test]
fn verdict_is_the_zero_test() {
    let cut = CSpec::symbolic().with_negative_cut(true);
    let bad = check_jt_c_without_half(&cut, &p(&[1]), 1).unwrap();
    assert!(!bad.holds);
    assert!(bad.witness.term_count > 0 && !bad.witness.terms.is_zero());
    let good = check_jt(GroupType::C, &cut, &p(&[1]), 1).unwrap();
    assert!(good.holds);
    assert_eq!(good.witness.term_count, 0);
}

/// `½det[φ^{2-j} h_{λ_i-i+j} + φ^j h_{λ_i-i-j+2}]`: every shift of the symplectic determinant raised by one.
fn sp_raised(lambda: &Partition, n: usize) -> Poly {
    let l = lambda.padded(n);
    let m: Vec<Vec<Poly>> = (1..=n as i64)
        .map(|i| {
            let li = l[i as usize - 1];
            (1..=n as i64).map(|j| &h(li - i + j, 2 - j) + &h(li - i - j + 2, j)).collect()
        })
        .collect();
    det_cofactor(&m).unwrap().scale(&rat(1, 2))
}

fn o_raised(lambda: &Partition, n: usize) -> Poly {
    let l = lambda.padded(n);
    let m: Vec<Vec<Poly>> = (1..=n as i64)
        .map(|i| {
            let li = l[i as usize - 1];
            (1..=n as i64).map(|j| &h(li - i + j, 2 - j) - &h(li - i - j, 2 + j)).collect()
        })
        .collect();
    det_cofactor(&m).unwrap()
}

#[test]
fn phi_commutes_with_the_characters() {
    for lambda in Partition::contained_in(&p(&[3, 2, 1])) {
        assert_eq!(phi(&sp_determinant(&lambda, 3).unwrap(), 1), sp_raised(&lambda, 3), "sp {lambda}");
        assert_eq!(phi(&o_determinant(&lambda, 3).unwrap(), 1), o_raised(&lambda, 3), "o {lambda}");
    }
}

fn h_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec((1i64..4, -3i64..4, 1i32..3), 0..3), -5i64..6), 0..8).prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|(vars, c)| {
            (Monomial::from_pairs(vars.into_iter().map(|(r, s, e)| (VarId::h(r, s), e))), rat(c, 1))
        }))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phi_is_a_ring_automorphism(a in h_poly(), b in h_poly(), k in -3i64..4) {
        prop_assert_eq!(phi(&(&a * &b), k), &phi(&a, k) * &phi(&b, k));
        prop_assert_eq!(phi(&(&a + &b), k), &phi(&a, k) + &phi(&b, k));
        prop_assert_eq!(phi(&phi(&a, k), -k), a);
    }
}
