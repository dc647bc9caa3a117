//! Worked values, checked through the public API.

use num_bigint::BigInt;
use serinv::identities::{
    check_arcsin_sum, check_catalan_sum, check_exp_power_sum, check_geometric_reversion_sum,
    check_power_interpolation,
};
use serinv::inversion::{
    binomial_kernel, build_kernel, involution_k, inverse_pair_transform, orthogonality_sums,
    reversion_power_coefficient, self_inverse_complete, transform_apply, Direction, Sequence,
};
use serinv::partitions::{enumerate_multiplicity_vectors, partition_count};
use serinv::polyt::PolyT;
use serinv::rational::{rat, ratio, Rational};
use serinv::series::{coeff_pow_poly_t, lagrange_coefficient, named_series, NamedSeries, Series};
use serinv::stirling::{
    stirling_partition_formula, stirling_recurrence, stirling_shift, stirling_via_gf,
    surjection_sum, StirlingKind,
};

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

fn series(v: &[i64]) -> Series {
    Series::from_ints(v).unwrap()
}

#[test]
fn series_arithmetic() {
    assert_eq!(series(&[1, 1]).add(&series(&[1, -1])).unwrap(), series(&[2, 0]));
    assert_eq!(series(&[0, 1, 1]).add(&series(&[0, 1, -1])).unwrap(), series(&[0, 2, 0]));
    assert_eq!(series(&[1, 1, 0]).mul(&series(&[1, -1, 0])).unwrap(), series(&[1, 0, -1]));
    let geom = NamedSeries::Geom.series(4, None).unwrap();
    assert_eq!(geom.mul(&series(&[1, -1, 0, 0, 0])).unwrap(), Series::x(4));
}

#[test]
fn square_root_of_one_plus_x() {
    let r = series(&[1, 1, 0, 0]).pow(&ratio(1, 2)).unwrap();
    assert_eq!(r.coeffs(), &[rat(1), ratio(1, 2), ratio(-1, 8), ratio(1, 16)]);
    assert_eq!(r.mul(&r).unwrap(), series(&[1, 1, 0, 0]));
}

#[test]
fn exponential_powers() {
    let e = NamedSeries::Exp.series(6, None).unwrap();
    for t in -3..=3i64 {
        let p = e.pow(&rat(t)).unwrap();
        for m in 0..=6 {
            let want = Rational::from_integer(BigInt::from(t).pow(m as u32))
                / Rational::from_integer((1..=m as i64).product::<i64>().into());
            assert_eq!(p.coeff(m), &want);
        }
    }
    assert_eq!(e.pow(&rat(0)).unwrap(), Series::one(6));
}

#[test]
fn inverse_pairs_compose_to_identity() {
    let geom = NamedSeries::Geom.series(6, None).unwrap();
    let inv: Vec<i64> = (0..=6).map(|i| if i == 0 { 0 } else if i % 2 == 1 { 1 } else { -1 }).collect();
    assert_eq!(geom.compose(&series(&inv)).unwrap(), Series::x(6));
    assert_eq!(geom.reverse().unwrap(), series(&inv));

    let log = NamedSeries::Log1p.series(8, None).unwrap();
    let expm1 = NamedSeries::ExpMinus1.series(8, None).unwrap();
    assert_eq!(log.compose(&expm1).unwrap(), Series::x(8));
    assert_eq!(expm1.reverse().unwrap(), log);
}

#[test]
fn lagrange_examples() {
    let cat = NamedSeries::CatalanBeta.series(4, None).unwrap();
    let got: Vec<Rational> = (1..=4).map(|n| lagrange_coefficient(&cat, n, 1).unwrap()).collect();
    assert_eq!(got, ints(&[1, 2, 5, 14]));
    let sin = NamedSeries::Sin.series(5, None).unwrap();
    assert_eq!(lagrange_coefficient(&sin, 5, 1).unwrap(), ratio(3, 40));
    let x = Series::x(5);
    assert_eq!(lagrange_coefficient(&x, 3, 3).unwrap(), rat(1));
    assert_eq!(lagrange_coefficient(&x, 4, 2).unwrap(), rat(0));
}

#[test]
fn power_coefficient_polynomials() {
    let e = NamedSeries::Exp.series(2, None).unwrap();
    assert_eq!(coeff_pow_poly_t(&e, 2).unwrap().coeffs(), &[rat(0), rat(0), ratio(1, 2)]);
    let binom2 = PolyT::binomial(&PolyT::t(), 2);
    assert_eq!(coeff_pow_poly_t(&series(&[1, 1, 0]), 2).unwrap(), binom2);
    assert_eq!(coeff_pow_poly_t(&series(&[1, 1, 1]), 1).unwrap(), PolyT::t());
}

#[test]
fn named_series_values() {
    let arcsin = named_series("arcsin", 5, None).unwrap();
    assert_eq!(arcsin.coeffs(), &[rat(0), rat(1), rat(0), ratio(1, 6), rat(0), ratio(3, 40)]);
    let expm1 = named_series("exp_minus_1", 3, None).unwrap();
    assert_eq!(expm1.coeffs(), &[rat(0), rat(1), ratio(1, 2), ratio(1, 6)]);
    let cat = named_series("catalan_beta", 4, None).unwrap();
    assert_eq!(cat, series(&[0, 1, -2, 3, -4]));
    assert!(named_series("binomial_t", 3, None).is_err());
    assert!(named_series("cosh", 3, None).is_err());
}

#[test]
fn partition_examples() {
    let four: Vec<Vec<u64>> = enumerate_multiplicity_vectors(4)
        .map(|v| v.as_slice().to_vec())
        .collect();
    assert_eq!(
        four,
        vec![vec![4, 0, 0, 0], vec![2, 1, 0, 0], vec![0, 2, 0, 0], vec![1, 0, 1, 0], vec![0, 0, 0, 1]]
    );
    assert_eq!(enumerate_multiplicity_vectors(1).count(), 1);
    assert_eq!(enumerate_multiplicity_vectors(0).count(), 1);
    assert_eq!(partition_count(0), BigInt::from(1));
    assert_eq!(partition_count(6), BigInt::from(11));
    assert_eq!(partition_count(30), BigInt::from(5604));
}

#[test]
fn stirling_examples() {
    use StirlingKind::*;
    assert_eq!(stirling_recurrence(Second, 4, 2).unwrap(), BigInt::from(7));
    assert_eq!(stirling_recurrence(FirstUnsigned, 4, 2).unwrap(), BigInt::from(11));
    assert_eq!(stirling_via_gf(Second, 5, 2).unwrap(), BigInt::from(15));
    assert_eq!(stirling_via_gf(FirstUnsigned, 3, 1).unwrap(), BigInt::from(2));
    assert_eq!(stirling_partition_formula(Second, 1, 4).unwrap(), BigInt::from(10));
    assert_eq!(stirling_partition_formula(Second, 3, 2).unwrap(), BigInt::from(15));
    assert_eq!(stirling_partition_formula(FirstUnsigned, 2, 2).unwrap(), BigInt::from(11));
    assert_eq!(stirling_shift(Second, 3, 2).unwrap(), BigInt::from(25));
    assert_eq!(stirling_shift(FirstUnsigned, 1, 1).unwrap(), BigInt::from(1));
    assert_eq!(stirling_shift(Second, 2, 3).unwrap(), BigInt::from(15));
    for kind in [FirstUnsigned, Second] {
        for n in 0..6 {
            assert_eq!(stirling_recurrence(kind, n, n).unwrap(), BigInt::from(1));
        }
    }
    assert_eq!(surjection_sum(2, 1), BigInt::from(6));
    assert_eq!(surjection_sum(3, 1), BigInt::from(36));
    assert_eq!(surjection_sum(1, 7), BigInt::from(1));
}

#[test]
fn transform_examples() {
    let k = binomial_kernel(&rat(1), 4, Direction::Forward);
    let a = transform_apply(&k, &Sequence::one_based(ints(&[1, 0, 0, 0]))).unwrap();
    assert_eq!(a.values(), ints(&[1, 2, 0, 0]).as_slice());

    let f = NamedSeries::BinomialT.series(2, Some(&rat(0))).unwrap();
    let k = build_kernel(&f, 3, Direction::Forward).unwrap();
    let a = transform_apply(&k, &Sequence::one_based(ints(&[1, 2, 3]))).unwrap();
    assert_eq!(a.values(), ints(&[1, 4, 9]).as_slice());
}

#[test]
fn involution_examples() {
    let s = Sequence::zero_based(ints(&[0, 0, 1]));
    let t = involution_k(1, &s).unwrap();
    assert_eq!(t.values(), ints(&[1, -2, 1]).as_slice());
    assert_eq!(involution_k(1, &t).unwrap(), s);

    let s = Sequence::zero_based(ints(&[0, 0, 1]));
    let t = involution_k(2, &s).unwrap();
    assert_eq!(t.values(), ints(&[1, 0, -1]).as_slice());
    assert_eq!(involution_k(2, &t).unwrap(), s);

    let z = Sequence::zero_based(ints(&[0, 0, 0, 0]));
    assert_eq!(involution_k(3, &z).unwrap(), z);
    assert!(involution_k(2, &Sequence::zero_based(ints(&[0, 1]))).is_err());
}

#[test]
fn orthogonality_examples() {
    let zero = (rat(0), rat(0));
    assert_eq!(orthogonality_sums(&series(&[1, 1]), 1, 2).unwrap(), zero);
    let e = NamedSeries::Exp.series(1, None).unwrap();
    assert_eq!(orthogonality_sums(&e, 1, 2).unwrap(), zero);
    assert_eq!(orthogonality_sums(&e, 3, 3).unwrap(), (ratio(1, 3), rat(3)));
}

#[test]
fn reversion_coefficient_examples() {
    let geom = NamedSeries::Geom.series(3, None).unwrap();
    assert_eq!(reversion_power_coefficient(&geom, 1, 1).unwrap(), rat(-1));
    let cat = NamedSeries::CatalanBeta.series(3, None).unwrap();
    assert_eq!(reversion_power_coefficient(&cat, 1, 2).unwrap(), rat(5));
    let sin = NamedSeries::Sin.series(5, None).unwrap();
    assert_eq!(reversion_power_coefficient(&sin, 1, 4).unwrap(), ratio(3, 40));
}

#[test]
fn inverse_pair_examples() {
    let alt = ints(&[1, -1, 1, -1, 1, -1]);
    assert_eq!(inverse_pair_transform(&alt, 6).unwrap(), alt);
    assert_eq!(inverse_pair_transform(&ints(&[0, 0, 0]), 3).unwrap(), ints(&[0, 0, 0]));
    // -x + x^2 reverses to -x + x^2 - 2x^3 + 5x^4.
    assert_eq!(inverse_pair_transform(&ints(&[1, 0, 0]), 3).unwrap(), ints(&[1, -2, 5]));
}

#[test]
fn self_inverse_examples() {
    let a = ratio(2, 3);
    let a3 = ratio(-5, 7);
    let s = self_inverse_complete(&[a.clone(), a3.clone()], 4).unwrap();
    assert_eq!(s.coeff(2), &-(&a * &a));
    assert_eq!(s.coeff(4), &(rat(2) * &a * &a * &a * &a - rat(3) * &a * &a3));
    let zero = self_inverse_complete(&ints(&[0, 0, 0]), 6).unwrap();
    assert!(zero.coeffs().iter().all(|c| c == &rat(0)));
    let s = self_inverse_complete(&ints(&[1, 1]), 4).unwrap();
    assert_eq!(s.coeffs(), ints(&[1, -1, 1, -1]).as_slice());
}

#[test]
fn scalar_identity_examples() {
    assert!(check_power_interpolation(&series(&[1, 1, 5, 7]), 3).unwrap().pass);
    let r = check_exp_power_sum(2, &rat(1));
    assert_eq!((r.lhs.as_str(), r.pass), ("1", true));
    assert_eq!(check_exp_power_sum(1, &ratio(-2, 9)).lhs, "-2/9");
    assert!(check_exp_power_sum(3, &ratio(1, 2)).pass);
    assert_eq!(check_geometric_reversion_sum(1, 1).lhs, "-2");
    assert_eq!(check_catalan_sum(2).lhs, "30");
    assert_eq!(check_arcsin_sum(2).lhs, "9");
}
