use ninthvar_core::ring::matrix::{det, det_bareiss, det_cofactor, vandermonde};
use ninthvar_core::ring::series::Series;
use ninthvar_core::ring::{rat, Families, Family, Monomial, Poly, VarId};
use proptest::prelude::*;

fn var_pool() -> Vec<VarId> {
    vec![VarId::x(1), VarId::x(2), VarId::u(1), VarId::u(2), VarId::c(-1), VarId::c(0), VarId::h(1, -1)]
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((0..7usize, -2i32..4), 0..3).prop_map(|pairs| {
        let pool = var_pool();
        Monomial::from_pairs(pairs.into_iter().map(|(i, e)| {
            let v = pool[i];
            // only X is Laurent among the pool
            let e = if v.family() == Family::X { e } else { e.abs() };
            (v, e)
        }))
    })
}

fn coeff() -> impl Strategy<Value = (i64, i64)> {
    (-6i64..7, 1i64..5)
}

fn poly(max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((monomial(), coeff()), 0..=max_terms)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(m, (p, q))| (m, rat(p, q)))))
}

fn series_fams() -> Families {
    Families::of(&[Family::U])
}

/// A polynomial with no negative `u`-exponents, so it can be read as a series in `u`.
fn u_poly(max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..4, 0u32..4, -1i32..2), coeff()), 0..=max_terms).prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|((a, b, e), (p, q))| {
            let m = Monomial::from_pairs([(VarId::u(1), a as i32), (VarId::u(2), b as i32), (VarId::x(1), e)]);
            (m, rat(p, q))
        }))
    })
}

fn naive_det(m: &[Vec<Poly>]) -> Poly {
    if m.is_empty() {
        return Poly::one();
    }
    let mut acc = Poly::zero();
    for col in 0..m.len() {
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = &m[0][col] * &naive_det(&minor);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_associative(a in poly(20), b in poly(20), c in poly(20)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_distributes(a in poly(20), b in poly(20), c in poly(20)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn canonical_form_has_no_zero_terms(a in poly(20), b in poly(20)) {
        let d = &(&a * &b) - &(&b * &a);
        prop_assert!(d.is_zero());
        prop_assert!((&a - &a).terms().is_empty());
        for (m, c) in (&a * &b).terms() {
            prop_assert!(*c != rat(0, 1));
            prop_assert!(m.pairs().iter().all(|&(_, e)| e != 0));
        }
    }

    #[test]
    fn exact_division_recovers_the_factor(a in poly(6), b in poly(4)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn determinants_agree_with_laplace(entries in prop::collection::vec(poly(3), 16)) {
        let m: Vec<Vec<Poly>> = entries.chunks(4).map(|r| r.to_vec()).collect();
        let expected = naive_det(&m);
        prop_assert_eq!(det_cofactor(&m).unwrap(), expected.clone());
        prop_assert_eq!(det_bareiss(&m).unwrap(), expected.clone());
        prop_assert_eq!(det(&m).unwrap(), expected);
    }

    #[test]
    fn geometric_inverse_is_an_inverse(body in u_poly(8), c0 in 1i64..5, cap in 0u32..=8) {
        let p = &body.retain(|m| m.degree_in(series_fams()) > 0) + &Poly::int(c0);
        let s = Series::truncate(&p, series_fams(), cap).unwrap();
        let inv = s.geometric_inverse().unwrap();
        prop_assert_eq!(inv.mul(&s).unwrap(), Series::one(series_fams(), cap));
    }

    #[test]
    fn truncation_is_a_ring_map(a in u_poly(10), b in u_poly(10), cap in 0u32..6) {
        let f = series_fams();
        let whole = Series::truncate(&(&a * &b), f, cap).unwrap();
        let parts = Series::truncate(&a, f, cap).unwrap().mul(&Series::truncate(&b, f, cap).unwrap()).unwrap();
        prop_assert_eq!(whole, parts);
        let sum = Series::truncate(&(&a + &b), f, cap).unwrap();
        prop_assert_eq!(sum, Series::truncate(&a, f, cap).unwrap().add(&Series::truncate(&b, f, cap).unwrap()).unwrap());
    }
}

#[test]
fn vandermonde_is_the_power_determinant() {
    for n in 0..=5usize {
        let vars: Vec<Poly> = (1..=n as u32).map(|i| Poly::var(VarId::x(i))).collect();
        let m: Vec<Vec<Poly>> = vars.iter().map(|v| (0..n).map(|j| v.pow((n - 1 - j) as u32)).collect()).collect();
        assert_eq!(vandermonde(&vars), naive_det(&m), "n = {n}");
    }
    let mixed = [Poly::var(VarId::x(1)) + Poly::var(VarId::c(0)), Poly::var(VarId::u(1)), Poly::int(3)];
    let m: Vec<Vec<Poly>> = mixed.iter().map(|v| (0..3).map(|j| v.pow(2 - j)).collect()).collect();
    assert_eq!(vandermonde(&mixed), naive_det(&m));
}

#[test]
fn variable_names_round_trip() {
    for v in var_pool().into_iter().chain([VarId::y(3), VarId::v(2), VarId::t(), VarId::c(-3), VarId::h(2, -1)]) {
        assert_eq!(VarId::parse(&v.name()), Some(v), "{}", v.name());
    }
    assert_eq!(VarId::h(2, -1).name(), "h:2:-1");
    assert_eq!(VarId::c(-3).name(), "c-3");
}
