//! Heights of `G/P` with respect to an ample line bundle, computed three ways:
//! by the `k^l` substitution in the graded dimension polynomials, by the
//! localized fixed-point sum, and by the Bott residue of the harmonic
//! expansion. All arithmetic is exact.
//!
//! With `D = |Psi| = dim G/P`, the exponent of the top power of the first
//! Chern class is `D + 1`; every method below uses `n = D` in that sense.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::charpoly::f_j;
use crate::error::{Error, Result};
use crate::parabolic::ParabolicData;
use crate::poly::{int, BivariatePolynomial};
use crate::rootsys::{Coweight, RootSystem, Weight};
use crate::weyl::{coset_representatives, CosetList, DEFAULT_COSET_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Substitution,
    FixedPoint,
    HarmoBott,
    ClosedForm,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Substitution => "substitution",
            Method::FixedPoint => "fixed-point",
            Method::HarmoBott => "harmo-bott",
            Method::ClosedForm => "closed-form",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightResult {
    pub value: BigRational,
    pub method: Method,
    /// `dim G/P + 1`.
    pub dim_plus_one: usize,
    pub coxeter: u64,
    /// Prime factorization of the denominator of `2 * value`.
    pub denominator_factorization: BTreeMap<u64, u32>,
}

impl HeightResult {
    fn new(value: BigRational, method: Method, dim: usize, coxeter: u64) -> HeightResult {
        let twice = &value * int(2);
        HeightResult {
            denominator_factorization: factorize(twice.denom()),
            value,
            method,
            dim_plus_one: dim + 1,
            coxeter,
        }
    }
}

/// `Ht_k = (-1)^k / (2 (k+1) (k+1)!)`.
pub fn ht_coefficient(k: u32) -> BigRational {
    let kp1 = BigInt::from(k + 1);
    let fact = factorial(k + 1);
    let sign = if k % 2 == 0 { 1 } else { -1 };
    BigRational::new(BigInt::from(sign), BigInt::from(2) * kp1 * fact)
}

/// The first `len` coefficients of the `Ht` series.
pub fn ht_series(len: u32) -> Vec<BigRational> {
    (0..len).map(ht_coefficient).collect()
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `[1, x, ..., x^e]`.
fn powers(x: &BigRational, e: u32) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(e as usize + 1);
    out.push(BigRational::one());
    for k in 0..e as usize {
        let next = &out[k] * x;
        out.push(next);
    }
    out
}

fn pow(x: &BigRational, e: u32) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}

/// Trial division; inputs here are products of small primes.
pub fn factorize(n: &BigInt) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut rest = n.abs();
    let mut p = 2u64;
    while rest > BigInt::one() {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            let last = u64::try_from(&rest).expect("cofactor fits in u64");
            *out.entry(last).or_insert(0) += 1;
            break;
        }
        while rest.is_multiple_of(&bp) {
            rest /= &bp;
            *out.entry(p).or_insert(0) += 1;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    out
}

fn coxeter(rs: &RootSystem) -> u64 {
    rs.coxeter_number()
}

/// Height via `sum_j f_j(m, k)` with `k^l -> (m j)^{l+1} / (2 (l+1)^2)`:
/// the coefficient of `m^{D+1}` times `(D+1)!`.
pub fn height_substitution(pd: &ParabolicData<'_>, lambda: &Weight) -> Result<HeightResult> {
    let grading = pd.psi_grading(lambda)?;
    let dim = pd.dim();
    let top = dim as u32 + 1;
    let mut coefficient = BigRational::zero();
    for j in grading.grades() {
        let f = f_j(pd, lambda, j)?;
        for ((a, l), c) in f.terms() {
            if a + l + 1 == top {
                let jj = pow(&int(j), l + 1);
                let scale = int(2) * int(i64::from(l + 1)).pow(2);
                coefficient += c * jj / scale;
            }
        }
    }
    let value = coefficient * BigRational::from_integer(factorial(top));
    Ok(HeightResult::new(value, Method::Substitution, dim, coxeter(pd.root_system())))
}

/// The localization point: `Y` itself or the dual of `rho`, checked regular.
pub fn localization_point(rs: &RootSystem, y: Option<&Coweight>) -> Result<Coweight> {
    let y = y.cloned().unwrap_or_else(|| Coweight::rho_dual(rs));
    if y.simple_values().len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            found: y.simple_values().len(),
        });
    }
    if let Some(beta) = rs.positive_roots().iter().find(|b| y.root_value(b).is_zero()) {
        return Err(Error::NonRegularPoint(format!("root {beta:?} vanishes at Y")));
    }
    Ok(y)
}

// (phi, [(theta, j)]) at each fixed point w W_K
fn fixed_point_data(
    pd: &ParabolicData<'_>,
    lambda: &Weight,
    y: &Coweight,
    cosets: &CosetList,
) -> Result<Vec<(BigRational, Vec<(BigRational, i64)>)>> {
    let rs = pd.root_system();
    let pairings: Vec<i64> = pd
        .psi()
        .iter()
        .map(|alpha| rs.coroot_pairing(lambda, alpha))
        .collect::<Result<_>>()?;
    Ok(cosets
        .reps()
        .iter()
        .map(|w| {
            let phi = y.weight_value(&w.act(lambda));
            let angles = pd
                .psi()
                .iter()
                .zip(&pairings)
                .map(|(alpha, &j)| (y.root_value(&w.act_root(rs, alpha)), j))
                .collect();
            (phi, angles)
        })
        .collect())
}

fn check_cosets(pd: &ParabolicData<'_>, cosets: &CosetList) -> Result<()> {
    if cosets.theta() != pd.theta() {
        return Err(Error::CrossCheck(format!(
            "coset list is for theta {:?}, parabolic has {:?}",
            cosets.theta(),
            pd.theta()
        )));
    }
    Ok(())
}

/// Fixed-point formula:
/// `sum_w 1/prod theta * sum_{l=1}^{D+1} sum_alpha
///  [phi^{D+1} - phi^{D+1-l} (phi - j theta)^l] / (2 l theta)`
/// with `phi = (w lambda)(Y)`, `theta = (w alpha)(Y)`.
pub fn height_fixed_point(
    pd: &ParabolicData<'_>,
    lambda: &Weight,
    y: Option<&Coweight>,
) -> Result<HeightResult> {
    let cosets = coset_representatives(pd.root_system(), pd.theta(), DEFAULT_COSET_CAP)?;
    height_fixed_point_with(pd, lambda, y, &cosets)
}

pub fn height_fixed_point_with(
    pd: &ParabolicData<'_>,
    lambda: &Weight,
    y: Option<&Coweight>,
    cosets: &CosetList,
) -> Result<HeightResult> {
    pd.require_ample(lambda)?;
    check_cosets(pd, cosets)?;
    let y = localization_point(pd.root_system(), y)?;
    let dim = pd.dim();
    let top = dim as u32 + 1;
    let mut total = BigRational::zero();
    for (phi, angles) in fixed_point_data(pd, lambda, &y, cosets)? {
        let euler: BigRational = angles.iter().map(|(t, _)| t.clone()).product();
        let phi_powers = powers(&phi, top);
        let phi_top = &phi_powers[top as usize];
        let mut local = BigRational::zero();
        for (theta, j) in &angles {
            let shifted = &phi - theta * int(*j);
            let mut shifted_power = BigRational::one();
            let mut inner = BigRational::zero();
            for l in 1..=top {
                shifted_power *= &shifted;
                let term = phi_top - &phi_powers[(top - l) as usize] * &shifted_power;
                inner += term / int(2 * i64::from(l));
            }
            local += inner / theta;
        }
        total += local / euler;
    }
    Ok(HeightResult::new(total, Method::FixedPoint, dim, coxeter(pd.root_system())))
}

/// Bott residue of the harmonic expansion:
/// `sum_w sum_{l=0}^{D} (-1)^l / (2 (l+1)) C(D+1, l+1)
///  sum_alpha j^{l+1} theta^l phi^{D-l} / prod theta`.
pub fn height_harmo_bott(
    pd: &ParabolicData<'_>,
    lambda: &Weight,
    y: Option<&Coweight>,
) -> Result<HeightResult> {
    let cosets = coset_representatives(pd.root_system(), pd.theta(), DEFAULT_COSET_CAP)?;
    height_harmo_bott_with(pd, lambda, y, &cosets)
}

pub fn height_harmo_bott_with(
    pd: &ParabolicData<'_>,
    lambda: &Weight,
    y: Option<&Coweight>,
    cosets: &CosetList,
) -> Result<HeightResult> {
    pd.require_ample(lambda)?;
    check_cosets(pd, cosets)?;
    let y = localization_point(pd.root_system(), y)?;
    let dim = pd.dim();
    let n = dim as u32;
    let weights: Vec<BigRational> = (0..=n)
        .map(|l| {
            let sign = if l % 2 == 0 { 1 } else { -1 };
            BigRational::new(
                BigInt::from(sign) * binomial(n + 1, l + 1),
                BigInt::from(2 * (l + 1)),
            )
        })
        .collect();
    let mut total = BigRational::zero();
    for (phi, angles) in fixed_point_data(pd, lambda, &y, cosets)? {
        let euler: BigRational = angles.iter().map(|(t, _)| t.clone()).product();
        let phi_powers = powers(&phi, n);
        // running j^{l+1} theta^l per root
        let mut running: Vec<BigRational> = angles.iter().map(|(_, j)| int(*j)).collect();
        let mut local = BigRational::zero();
        for (l, weight) in weights.iter().enumerate() {
            let power_sum: BigRational = running.iter().sum();
            local += weight * power_sum * &phi_powers[n as usize - l];
            for (r, (theta, j)) in running.iter_mut().zip(&angles) {
                *r *= theta * int(*j);
            }
        }
        total += local / euler;
    }
    Ok(HeightResult::new(total, Method::HarmoBott, dim, coxeter(pd.root_system())))
}

/// Runs all three methods and fails with `CrossCheck` unless they agree.
pub fn height_all(
    pd: &ParabolicData<'_>,
    lambda: &Weight,
    y: Option<&Coweight>,
    cosets: &CosetList,
) -> Result<HeightResult> {
    let results = [
        height_substitution(pd, lambda)?,
        height_fixed_point_with(pd, lambda, y, cosets)?,
        height_harmo_bott_with(pd, lambda, y, cosets)?,
    ];
    if results.iter().any(|r| r.value != results[0].value) {
        let values: Vec<String> = results
            .iter()
            .map(|r| format!("{}={}", r.method, r.value))
            .collect();
        return Err(Error::CrossCheck(format!(
            "height methods disagree: {}",
            values.join(", ")
        )));
    }
    let [first, ..] = results;
    Ok(first)
}

/// Families with a known closed-form height for `O(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// `P^n`.
    Projective(u32),
    /// `Q_{2m}`.
    QuadricEven(u32),
    /// `Q_{2m-1}`.
    QuadricOdd(u32),
    /// A homogeneous hypersurface of dimension `n` and degree `d` in `P^{n+1}`.
    Hypersurface { n: u32, d: u32 },
    /// `G(m, k)`, evaluated by its fixed-point expression with `Y = sum nu e_nu^*`.
    Grassmannian { m: u32, k: u32 },
}

fn harmonic(n: u32) -> BigRational {
    (1..=n).map(|k| BigRational::new(BigInt::one(), BigInt::from(k))).sum()
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn closed_form(family: ClosedForm) -> Result<BigRational> {
    let invalid = || Error::InvalidCartan(format!("closed form parameters out of range: {family:?}"));
    match family {
        ClosedForm::Projective(n) if n >= 1 => {
            Ok(ratio(i64::from(n) + 1, 2) * harmonic(n) - ratio(i64::from(n), 2))
        }
        ClosedForm::QuadricEven(m) if m >= 1 => {
            let m_i = i64::from(m);
            Ok(int(2 * m_i + 1) * harmonic(2 * m - 1) + harmonic(m - 1) / int(2)
                - int(2 * m_i - 1)
                + ratio(1, m_i))
        }
        ClosedForm::QuadricOdd(m) if m >= 1 => {
            let m_i = i64::from(m);
            Ok(int(2 * m_i + 1) * harmonic(2 * m - 1) - harmonic(m - 1) / int(2)
                - int(2 * m_i - 1))
        }
        ClosedForm::Hypersurface { n, d } if n >= 1 && d >= 1 => {
            let (n, d) = (i64::from(n), i64::from(d));
            Ok((2..=n + 1)
                .map(|l| {
                    let bracket = int(d * (n + 2) - 1) + pow(&int(1 - d), l as u32);
                    bracket / int(2 * l)
                })
                .sum())
        }
        ClosedForm::Grassmannian { m, k } if k >= 1 && k < m && m <= 24 => {
            Ok(grassmannian_fixed_points(m, k))
        }
        _ => Err(invalid()),
    }
}

// sum over k-subsets I of {1..m}; the root e_a - e_b takes the value a - b
fn grassmannian_fixed_points(m: u32, k: u32) -> BigRational {
    let top = k * (m - k) + 1;
    let mut total = BigRational::zero();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() != k {
            continue;
        }
        let inside: Vec<i64> = (1..=m).filter(|v| mask & (1 << (v - 1)) != 0).map(i64::from).collect();
        let outside: Vec<i64> = (1..=m).filter(|v| mask & (1 << (v - 1)) == 0).map(i64::from).collect();
        let s = int(inside.iter().sum());
        let mut euler = BigRational::one();
        let mut inner = BigRational::zero();
        for &a in &inside {
            for &b in &outside {
                let diff = int(a - b);
                euler *= &diff;
                let base = BigRational::one() - &diff / &s;
                for l in 1..=top {
                    inner += (BigRational::one() - pow(&base, l)) / (int(2 * i64::from(l)) * &diff);
                }
            }
        }
        total += pow(&s, top) / euler * inner;
    }
    total
}

/// True iff every prime power dividing the denominator of `2 h` is at most
/// `bound`.
pub fn denominator_check(result: &HeightResult, bound: u64) -> bool {
    result
        .denominator_factorization
        .iter()
        .all(|(&p, &e)| p.checked_pow(e).is_some_and(|q| q <= bound))
}

/// Theorem bound `2c - 2` on prime powers in the denominator of `2h`.
pub fn theorem_bound(result: &HeightResult) -> u64 {
    2 * result.coxeter - 2
}

/// Conjectured sharper bound `c - 1`.
pub fn conjecture_bound(result: &HeightResult) -> u64 {
    result.coxeter - 1
}

/// Total symbolic degree data used by the degree-bound checks.
pub fn graded_polynomials(
    pd: &ParabolicData<'_>,
    lambda: &Weight,
) -> Result<Vec<(i64, BivariatePolynomial)>> {
    let grading = pd.psi_grading(lambda)?;
    grading.grades().map(|j| Ok((j, f_j(pd, lambda, j)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;
    use proptest::prelude::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(&s.parse().unwrap()).unwrap()
    }

    fn all_three(pd: &ParabolicData<'_>, lambda: &Weight) -> BigRational {
        let cosets = coset_representatives(pd.root_system(), pd.theta(), DEFAULT_COSET_CAP).unwrap();
        height_all(pd, lambda, None, &cosets).unwrap().value
    }

    #[test]
    fn ht_series_terms() {
        assert_eq!(ht_coefficient(0), ratio(1, 2));
        assert_eq!(ht_coefficient(1), ratio(-1, 8));
        assert_eq!(ht_coefficient(2), ratio(1, 36));
        assert_eq!(ht_series(3).len(), 3);
    }

    #[test]
    fn projective_line() {
        let r = rs("A1");
        let pd = ParabolicData::borel(&r);
        let lambda = Weight(vec![1]);
        let h = height_substitution(&pd, &lambda).unwrap();
        assert_eq!(h.value, ratio(1, 2));
        assert_eq!(h.dim_plus_one, 2);
        assert_eq!(h.coxeter, 2);
        assert_eq!(all_three(&pd, &lambda), ratio(1, 2));
        assert!(matches!(
            height_substitution(&pd, &Weight(vec![0])),
            Err(Error::NotAmple { .. })
        ));
    }

    #[test]
    fn projective_plane_and_space() {
        let a2 = rs("A2");
        let pd = ParabolicData::new(&a2, &[0]).unwrap();
        assert_eq!(all_three(&pd, &Weight(vec![0, 1])), ratio(5, 4));

        let a3 = rs("A3");
        let pd = ParabolicData::new(&a3, &[1, 2]).unwrap();
        assert_eq!(all_three(&pd, &Weight(vec![1, 0, 0])), ratio(13, 6));
    }

    #[test]
    fn quadrics() {
        let b2 = rs("B2");
        let q3 = ParabolicData::new(&b2, &[1]).unwrap();
        assert_eq!(all_three(&q3, &Weight(vec![1, 0])), ratio(17, 3));

        let d3 = rs("D3");
        let q4 = ParabolicData::new(&d3, &[1, 2]).unwrap();
        assert_eq!(all_three(&q4, &Weight(vec![1, 0, 0])), ratio(43, 6));
    }

    #[test]
    fn g2_full_flag_agrees() {
        let g2 = rs("G2");
        let pd = ParabolicData::borel(&g2);
        // no closed form; the three methods must agree
        all_three(&pd, g2.rho());
    }

    #[test]
    fn homogeneity_on_b2() {
        let b2 = rs("B2");
        let pd = ParabolicData::borel(&b2);
        let h1 = height_fixed_point(&pd, b2.rho(), None).unwrap().value;
        let h2 = height_fixed_point(&pd, &(b2.rho() * 2), None).unwrap().value;
        assert_eq!(h2, h1 * int(1 << 5));
    }

    #[test]
    fn non_regular_y_is_rejected() {
        let a2 = rs("A2");
        let pd = ParabolicData::borel(&a2);
        let y = Coweight::from_integers(&a2, &[1, -1]).unwrap();
        assert!(matches!(
            height_fixed_point(&pd, a2.rho(), Some(&y)),
            Err(Error::NonRegularPoint(_))
        ));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form(ClosedForm::Projective(1)).unwrap(), ratio(1, 2));
        assert_eq!(closed_form(ClosedForm::Projective(2)).unwrap(), ratio(5, 4));
        assert_eq!(closed_form(ClosedForm::QuadricOdd(2)).unwrap(), ratio(17, 3));
        assert_eq!(closed_form(ClosedForm::QuadricOdd(1)).unwrap(), int(2));
        assert_eq!(closed_form(ClosedForm::QuadricEven(2)).unwrap(), ratio(43, 6));
        for n in 1..=6 {
            assert_eq!(
                closed_form(ClosedForm::Hypersurface { n, d: 1 }).unwrap(),
                closed_form(ClosedForm::Projective(n)).unwrap()
            );
        }
        // G(2,1) = P^1
        assert_eq!(closed_form(ClosedForm::Grassmannian { m: 2, k: 1 }).unwrap(), ratio(1, 2));
        assert!(closed_form(ClosedForm::Projective(0)).is_err());
        // the quadric Q_{2m} is a degree-2 hypersurface
        assert_eq!(
            closed_form(ClosedForm::Hypersurface { n: 4, d: 2 }).unwrap(),
            closed_form(ClosedForm::QuadricEven(2)).unwrap()
        );
    }

    #[test]
    fn denominators() {
        let q3 = HeightResult::new(ratio(17, 3), Method::ClosedForm, 3, 4);
        assert_eq!(q3.denominator_factorization, BTreeMap::from([(3, 1)]));
        assert!(denominator_check(&q3, 6));
        assert!(denominator_check(&q3, 3));
        let synthetic = HeightResult::new(ratio(1, 11), Method::ClosedForm, 1, 2);
        assert!(!denominator_check(&synthetic, 10));
        assert_eq!(factorize(&BigInt::from(360)), BTreeMap::from([(2, 3), (3, 2), (5, 1)]));
        assert!(factorize(&BigInt::one()).is_empty());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn y_independence(a in 1i64..6, b in 1i64..6, sa in any::<bool>(), sb in any::<bool>()) {
            let a2 = rs("A2");
            let pd = ParabolicData::borel(&a2);
            let y = Coweight::from_integers(&a2, &[if sa { a } else { -a }, if sb { b } else { -b }]).unwrap();
            prop_assume!(!(y.root_value(&crate::rootsys::Root(vec![1, 1]))).is_zero());
            let h = height_fixed_point(&pd, a2.rho(), Some(&y)).unwrap().value;
            let hb = height_harmo_bott(&pd, a2.rho(), Some(&y)).unwrap().value;
            prop_assert_eq!(&h, &height_substitution(&pd, a2.rho()).unwrap().value);
            prop_assert_eq!(h, hb);
        }
    }
}
