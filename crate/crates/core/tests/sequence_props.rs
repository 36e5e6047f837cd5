use ninthvar_core::ring::{rat, Poly, RatFn, Rational, VarId};
use ninthvar_core::sequences::{factorial_power_any, AdmissibleSequence, CSpec, DoubleDualSequence, DualSequence};
use ninthvar_core::Error;
use proptest::prelude::*;
use std::collections::BTreeMap;

fn x() -> Poly {
    Poly::var(VarId::x(1))
}

/// `Σ_k a_{n,k} ĝ_{m,k}` for all `n, m ≤ cap`, which must be the identity.
fn assert_pairing_is_identity(f: &AdmissibleSequence, cap: u32) {
    let dual = DualSequence::new(f, cap).unwrap();
    for n in 0..=cap as usize {
        let a = f.coefficients(n).unwrap();
        for m in 0..=cap as usize {
            let mut acc = Poly::zero();
            for (k, ak) in a.iter().enumerate() {
                acc = &acc + &(ak * dual.coefficient(m, k));
            }
            let expected = if n == m { Poly::one() } else { Poly::zero() };
            assert_eq!(acc, expected, "pairing <f_{n}, f^_{m}>");
        }
    }
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..5, 1i64..4).prop_map(|(p, q)| rat(p, q))
}

/// A random admissible table `f_0..f_d` with rational lower coefficients.
fn admissible_table(d: usize) -> impl Strategy<Value = Vec<Vec<Poly>>> {
    prop::collection::vec(small_rational(), d * (d + 1) / 2).prop_map(move |lower| {
        let mut it = lower.into_iter();
        (0..=d)
            .map(|n| {
                let mut row: Vec<Poly> = (0..n).map(|_| Poly::constant(it.next().unwrap())).collect();
                row.push(Poly::one());
                row
            })
            .collect()
    })
}

#[test]
fn pairing_matrix_is_the_identity() {
    assert_pairing_is_identity(&AdmissibleSequence::factorial(CSpec::symbolic()), 8);
    assert_pairing_is_identity(&AdmissibleSequence::factorial(CSpec::symbolic().with_negative_cut(true).tau(-2)), 6);
    assert_pairing_is_identity(&AdmissibleSequence::monomial(), 8);
}

#[test]
fn factorial_closed_form_dual_matches_inversion() {
    let c = CSpec::symbolic();
    let cap = 8;
    let dual = DualSequence::new(&AdmissibleSequence::factorial(c.clone()), cap).unwrap();
    for k in 0..=cap as usize {
        let closed = DualSequence::factorial_closed_form(&c, k, VarId::u(1), cap).unwrap();
        assert_eq!(dual.entry(k, VarId::u(1)).unwrap(), closed, "k = {k}");
    }
}

#[test]
fn shift_law_for_factorial_powers() {
    let c = CSpec::symbolic();
    for r in -3i64..=3 {
        for s in -3i64..=3 {
            let lhs = factorial_power_any(&x(), &c, r + s);
            let a = factorial_power_any(&x(), &c, r);
            let b = factorial_power_any(&x(), &c.tau(r), s);
            let rhs = RatFn::new(a.numerator() * b.numerator(), a.factors().chain(b.factors()).flat_map(|(p, e)| vec![p.clone(); e as usize]));
            assert_eq!(lhs, rhs, "r = {r}, s = {s}");
            let floor = -8;
            let series_lhs = lhs.expand_x_inverse(floor).unwrap();
            let series_rhs = (&a.expand_x_inverse(floor - 3).unwrap() * &b.expand_x_inverse(floor - 3).unwrap())
                .retain(|m| m.exponent(VarId::x(1)) as i64 >= floor);
            assert_eq!(series_lhs, series_rhs, "series r = {r}, s = {s}");
        }
    }
}

#[test]
fn double_dual_shape() {
    let f = AdmissibleSequence::factorial(CSpec::symbolic());
    let check = DoubleDualSequence::new(&f, 6).unwrap();
    let v = Poly::var(VarId::v(1));
    assert_eq!(check.entry(0, &v).unwrap(), Poly::one());
    for n in 1..=6usize {
        let e = check.entry(n, &v).unwrap();
        let (lo, hi) = e.degree_range(ninthvar_core::ring::Families::of(&[ninthvar_core::ring::Family::V])).unwrap();
        assert_eq!(hi, n as i64, "deg f̌_{n}");
        assert!(lo >= 1, "f̌_{n} has a constant term");
        assert_eq!(&check.entry_over_v(n, &v).unwrap() * &v, e);
    }
}

#[test]
fn c_spec_lookups() {
    let c = CSpec::symbolic();
    for m in -4i64..=4 {
        assert_eq!(c.lookup(m), Poly::var(VarId::c(m)));
        assert_eq!(c.reverse().lookup(m), Poly::var(VarId::c(-m - 1)));
        assert_eq!(c.reverse().reverse().lookup(m), c.lookup(m));
        for r in -3i64..=3 {
            assert_eq!(c.tau(r).lookup(m), c.lookup(m + r));
            assert_eq!(c.tau(r).tau(-r).lookup(m), c.lookup(m));
        }
    }
    let cut = CSpec::symbolic().with_negative_cut(true);
    for r in -3i64..=3 {
        for m in -4i64..=4 {
            let v = cut.tau(r).lookup(m);
            if m + r < 0 {
                assert!(v.is_zero());
            } else {
                assert_eq!(v, Poly::var(VarId::c(m + r)));
            }
        }
    }
    let explicit = CSpec::explicit(BTreeMap::from([(-1, rat(1, 2)), (2, rat(-3, 1))]));
    assert_eq!(explicit.lookup(-1), Poly::constant(rat(1, 2)));
    assert_eq!(explicit.lookup(2), Poly::int(-3));
    assert!(explicit.lookup(0).is_zero());
    assert!(CSpec::zeros().tau(5).lookup(-7).is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_custom_sequences_pair_to_the_identity(table in admissible_table(5)) {
        let f = AdmissibleSequence::custom(table, Vec::new()).unwrap();
        assert_pairing_is_identity(&f, 5);
    }

    #[test]
    fn custom_rejects_exactly_the_inadmissible(
        table in admissible_table(4),
        which in 0usize..5,
        kind in 0usize..4,
        value in small_rational(),
    ) {
        let mut table = table;
        let mut negative: Vec<Vec<Poly>> = (1..=3).map(|n| {
            let mut row = vec![Poly::zero(); n];
            row.push(Poly::one());
            row.push(Poly::int(2));
            row
        }).collect();
        let admissible = match kind {
            // change the leading coefficient of f_which
            0 => {
                let n = which;
                let len = table[n].len();
                table[n][len - 1] = Poly::constant(value.clone());
                value == rat(1, 1)
            }
            // append a higher coefficient
            1 => {
                table[which].push(Poly::constant(value.clone()));
                value == rat(0, 1)
            }
            // put a coefficient below the order of f_-(n)
            2 => {
                let n = which % 3;
                negative[n][0] = Poly::constant(value.clone());
                value == rat(0, 1)
            }
            // change the leading coefficient of f_-(n)
            _ => {
                let n = which % 3;
                negative[n][n + 1] = Poly::constant(value.clone());
                value != rat(0, 1)
            }
        };
        let got = AdmissibleSequence::custom(table, negative);
        prop_assert_eq!(got.is_ok(), admissible, "{:?}", got.err());
    }
}

#[test]
fn custom_rejects_foreign_variables_and_missing_f0() {
    let bad = vec![vec![Poly::one()], vec![Poly::var(VarId::x(1)), Poly::one()]];
    assert!(AdmissibleSequence::custom(bad, Vec::new()).is_err());
    assert_eq!(AdmissibleSequence::custom(Vec::new(), Vec::new()).unwrap_err(), Error::MissingIndex { n: 0 });
    let ok = vec![vec![Poly::one()], vec![Poly::var(VarId::c(3)), Poly::one()]];
    assert!(AdmissibleSequence::custom(ok, Vec::new()).is_ok());
}
