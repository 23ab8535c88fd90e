//! Weyl dimension polynomials, weight multiplicities and characters.
//!
//! Multiplicities come from Freudenthal's recursion, run over dominant
//! weights only and extended by Weyl-group invariance. The recursion also
//! works for a Levi subsystem, which the localized character sum needs.
//! Kostant's alternating partition-function sum is kept as an independent
//! (slow) oracle.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::parabolic::ParabolicData;
use crate::poly::{int, BivariatePolynomial};
use crate::rootsys::{Coweight, Root, RootSystem, Weight};
use crate::weyl::{
    coset_representatives, enumerate_weyl, orbit, to_dominant_dotted, WeylElement,
    DEFAULT_COSET_CAP, DEFAULT_GROUP_CAP,
};

/// `d_{rho + m lambda - k alpha}` as a polynomial in `m` and `k`:
/// the product over positive `beta` of
/// `1 + <beta^vee, m lambda - k alpha> / <beta^vee, rho>`.
pub fn dim_polynomial(
    pd: &ParabolicData<'_>,
    lambda: &Weight,
    alpha: &Root,
) -> Result<BivariatePolynomial> {
    if !pd.psi().contains(alpha) {
        return Err(Error::NotInPsi(alpha.clone()));
    }
    pd.require_ample(lambda)?;
    let rs = pd.root_system();
    let alpha_weight = rs.root_to_weight(alpha);
    let mut product = BivariatePolynomial::one();
    for i in 0..rs.positive_roots().len() {
        let rho_pair = rs.positive_pairing(i, rs.rho());
        let lambda_pair = rs.positive_pairing(i, lambda);
        let alpha_pair = rs.positive_pairing(i, &alpha_weight);
        let denom = int(rho_pair);
        let factor = BivariatePolynomial::linear(
            int(1),
            int(lambda_pair) / &denom,
            -int(alpha_pair) / &denom,
        );
        product = &product * &factor;
    }
    Ok(product)
}

/// `f_j(m, k)`: the sum of dimension polynomials over `Psi_j`.
pub fn f_j(pd: &ParabolicData<'_>, lambda: &Weight, j: i64) -> Result<BivariatePolynomial> {
    let grading = pd.psi_grading(lambda)?;
    grading
        .bucket(j)
        .iter()
        .try_fold(BivariatePolynomial::zero(), |acc, alpha| {
            Ok(&acc + &dim_polynomial(pd, lambda, alpha)?)
        })
}

/// A finite integer combination of weights; signed in general.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalCharacter {
    mult: BTreeMap<Weight, i64>,
}

impl FormalCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_map(mult: BTreeMap<Weight, i64>) -> Self {
        let mut out = Self::zero();
        for (w, m) in mult {
            out.add_weight(w, m);
        }
        out
    }

    pub fn add_weight(&mut self, mu: Weight, m: i64) {
        if m == 0 {
            return;
        }
        let entry = self.mult.entry(mu.clone()).or_insert(0);
        *entry += m;
        if *entry == 0 {
            self.mult.remove(&mu);
        }
    }

    pub fn add_scaled(&mut self, other: &FormalCharacter, c: i64) {
        for (mu, &m) in &other.mult {
            self.add_weight(mu.clone(), c * m);
        }
    }

    pub fn scaled(&self, c: i64) -> FormalCharacter {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn multiplicity(&self, mu: &Weight) -> i64 {
        self.mult.get(mu).copied().unwrap_or(0)
    }

    pub fn weights(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.mult.iter().map(|(w, &m)| (w, m))
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    /// Sum of all multiplicities (the virtual dimension).
    pub fn degree(&self) -> i64 {
        self.mult.values().sum()
    }

    /// `sum_mu mult(mu) exp(2 pi i mu(X))`.
    pub fn evaluate(&self, x: &Coweight) -> Complex64 {
        self.mult
            .iter()
            .map(|(mu, &m)| m as f64 * unit_phase(&x.weight_value(mu)))
            .sum()
    }
}

/// `exp(2 pi i q)`, reducing `q` modulo 1 exactly first.
fn unit_phase(q: &BigRational) -> Complex64 {
    let frac = q - q.floor();
    let t = frac.to_f64().expect("fraction in [0, 1)");
    Complex64::from_polar(1.0, 2.0 * PI * t)
}

// Freudenthal's recursion for the irreducible module of highest weight
// `lambda` over the subsystem spanned by `gens`.
struct Freudenthal<'a> {
    rs: &'a RootSystem,
    gens: Vec<usize>,
    positive: Vec<(Root, Weight)>,
    two_rho: Weight,
}

impl<'a> Freudenthal<'a> {
    fn new(rs: &'a RootSystem, gens: &[usize]) -> Self {
        let positive: Vec<(Root, Weight)> = rs
            .positive_roots()
            .iter()
            .filter(|beta| beta.support().all(|i| gens.contains(&i)))
            .map(|beta| (beta.clone(), rs.root_to_weight(beta)))
            .collect();
        let two_rho = positive
            .iter()
            .fold(Weight::zero(rs.rank()), |acc, (_, w)| &acc + w);
        Freudenthal {
            rs,
            gens: gens.to_vec(),
            positive,
            two_rho,
        }
    }

    fn is_dominant(&self, mu: &Weight) -> bool {
        self.gens.iter().all(|&i| mu[i] >= 0)
    }

    // dominant conjugate, tracking the root-coordinate depth below lambda
    fn dominant_conjugate(&self, mut mu: Weight, mut depth: Root) -> (Weight, Root) {
        while let Some(&i) = self.gens.iter().find(|&&i| mu[i] < 0) {
            depth.0[i] += mu[i];
            mu = self.rs.simple_reflect(i, &mu);
        }
        (mu, depth)
    }

    fn dominant_weights(&self, lambda: &Weight) -> Vec<(Weight, Root)> {
        let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
        let mut out = vec![(lambda.clone(), Root::zero(self.rs.rank()))];
        let mut k = 0;
        while k < out.len() {
            let (mu, depth) = out[k].clone();
            for (beta, beta_weight) in &self.positive {
                let nu = &mu - beta_weight;
                if self.is_dominant(&nu) && seen.insert(nu.clone()) {
                    out.push((nu, &depth + beta));
                }
            }
            k += 1;
        }
        out.sort_by_key(|(_, depth)| depth.height());
        out
    }

    fn dominant_multiplicities(&self, lambda: &Weight) -> Vec<(Weight, i64)> {
        let lambda_plus = lambda + &self.two_rho;
        let mut memo: HashMap<Weight, i64> = HashMap::new();
        let mut out = Vec::new();
        for (mu, depth) in self.dominant_weights(lambda) {
            let m = if depth.is_zero() {
                1
            } else {
                let mut numerator = 0i64;
                for (beta, beta_weight) in &self.positive {
                    let mut shifted = &mu + beta_weight;
                    let mut shifted_depth = &depth - beta;
                    while shifted_depth.0.iter().all(|&c| c >= 0) {
                        let (dom, _) =
                            self.dominant_conjugate(shifted.clone(), shifted_depth.clone());
                        if let Some(&m) = memo.get(&dom) {
                            numerator += m * self.rs.form(beta, &shifted);
                        }
                        shifted = &shifted + beta_weight;
                        shifted_depth = &shifted_depth - beta;
                    }
                }
                let denominator = self.rs.form(&depth, &(&lambda_plus + &mu));
                let (q, r) = (2 * numerator).div_rem(&denominator);
                debug_assert_eq!(r, 0, "Freudenthal quotient must be exact");
                q
            };
            memo.insert(mu.clone(), m);
            out.push((mu, m));
        }
        out
    }

    fn character(&self, lambda: &Weight) -> FormalCharacter {
        let mut mult = BTreeMap::new();
        for (mu, m) in self.dominant_multiplicities(lambda) {
            if m == 0 {
                continue;
            }
            for nu in orbit(self.rs, &mu, &self.gens) {
                mult.insert(nu, m);
            }
        }
        FormalCharacter { mult }
    }
}

/// Weight multiplicities of the irreducible module with highest weight
/// `lambda0` (written `V_{rho + lambda0}`).
pub fn freudenthal(rs: &RootSystem, lambda0: &Weight) -> Result<FormalCharacter> {
    rs.check_weight(lambda0)?;
    if !lambda0.is_dominant() {
        return Err(Error::NotDominant(lambda0.clone()));
    }
    let all: Vec<usize> = (0..rs.rank()).collect();
    Ok(Freudenthal::new(rs, &all).character(lambda0))
}

/// Dominant weights of `V_{rho + lambda0}` with their multiplicities.
pub fn dominant_multiplicities(rs: &RootSystem, lambda0: &Weight) -> Result<Vec<(Weight, i64)>> {
    rs.check_weight(lambda0)?;
    if !lambda0.is_dominant() {
        return Err(Error::NotDominant(lambda0.clone()));
    }
    let all: Vec<usize> = (0..rs.rank()).collect();
    Ok(Freudenthal::new(rs, &all).dominant_multiplicities(lambda0))
}

/// Character of the irreducible module of the Levi factor of type `theta`
/// with highest weight `lambda` (dominant on theta only).
pub fn levi_character(rs: &RootSystem, theta: &[usize], lambda: &Weight) -> Result<FormalCharacter> {
    rs.check_weight(lambda)?;
    if theta.iter().any(|&i| lambda[i] < 0) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    Ok(Freudenthal::new(rs, theta).character(lambda))
}

/// Kostant's multiplicity formula by brute force: the alternating sum over
/// `W` of partition counts of `w(lambda0 + rho) - (mu + rho)`.
pub struct KostantOracle<'a> {
    rs: &'a RootSystem,
    weyl: Vec<WeylElement>,
    memo: HashMap<(usize, Root), u64>,
}

impl<'a> KostantOracle<'a> {
    pub fn new(rs: &'a RootSystem) -> Result<Self> {
        Ok(KostantOracle {
            rs,
            weyl: enumerate_weyl(rs, DEFAULT_GROUP_CAP)?,
            memo: HashMap::new(),
        })
    }

    /// Number of ways to write `gamma` as a non-negative integer combination
    /// of positive roots.
    pub fn partitions(&mut self, gamma: &Root) -> u64 {
        self.count_from(0, gamma.clone())
    }

    fn count_from(&mut self, index: usize, gamma: Root) -> u64 {
        if gamma.0.iter().any(|&c| c < 0) {
            return 0;
        }
        let roots = self.rs.positive_roots();
        if index == roots.len() {
            return u64::from(gamma.is_zero());
        }
        if let Some(&v) = self.memo.get(&(index, gamma.clone())) {
            return v;
        }
        let beta = roots[index].clone();
        let mut total = 0;
        let mut rest = gamma.clone();
        while rest.0.iter().all(|&c| c >= 0) {
            total += self.count_from(index + 1, rest.clone());
            rest = &rest - &beta;
        }
        self.memo.insert((index, gamma), total);
        total
    }

    pub fn multiplicity(&mut self, lambda0: &Weight, mu: &Weight) -> i64 {
        let top = lambda0 + self.rs.rho();
        let shifted_mu = mu + self.rs.rho();
        let mut total = 0i64;
        for k in 0..self.weyl.len() {
            let diff = &self.weyl[k].act(&top) - &shifted_mu;
            let sign = self.weyl[k].sign();
            if let Some(gamma) = self.rs.weight_in_root_lattice(&diff) {
                total += sign * self.partitions(&gamma) as i64;
            }
        }
        total
    }
}

pub fn kostant_multiplicity(rs: &RootSystem, lambda0: &Weight, mu: &Weight) -> Result<i64> {
    rs.check_weight(lambda0)?;
    rs.check_weight(mu)?;
    if !lambda0.is_dominant() {
        return Err(Error::NotDominant(lambda0.clone()));
    }
    Ok(KostantOracle::new(rs)?.multiplicity(lambda0, mu))
}

/// `dim V_{rho + lambda0} = prod <beta^vee, rho + lambda0> / <beta^vee, rho>`.
pub fn weyl_dim(rs: &RootSystem, lambda0: &Weight) -> Result<BigInt> {
    rs.check_weight(lambda0)?;
    if !lambda0.is_dominant() {
        return Err(Error::NotDominant(lambda0.clone()));
    }
    Ok(weyl_product(rs, &(lambda0 + rs.rho())))
}

// prod <beta^vee, nu> / <beta^vee, rho>, exact for nu in the weight lattice
fn weyl_product(rs: &RootSystem, nu: &Weight) -> BigInt {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..rs.positive_roots().len() {
        num *= rs.positive_pairing(i, nu);
        den *= rs.positive_pairing(i, rs.rho());
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// `chi_nu` for arbitrary `nu = rho + lambda`: zero on walls, otherwise
/// `(-1)^{l(w)}` times the irreducible character of the dominant
/// representative `w^{-1} nu = rho + lambda0`.
pub fn formal_character(rs: &RootSystem, nu: &Weight) -> Result<FormalCharacter> {
    rs.check_weight(nu)?;
    let lambda = nu - rs.rho();
    match to_dominant_dotted(rs, &lambda) {
        None => Ok(FormalCharacter::zero()),
        Some((w, lambda0)) => Ok(freudenthal(rs, &lambda0)?.scaled(w.sign())),
    }
}

fn require_regular_point(rs: &RootSystem, x: &Coweight) -> Result<()> {
    for beta in rs.positive_roots() {
        if x.root_value(beta).is_integer() {
            return Err(Error::NonRegularPoint(format!(
                "root {beta:?} takes the integral value {}",
                x.root_value(beta)
            )));
        }
    }
    Ok(())
}

/// Weyl character formula at `exp(X)`:
/// `sum_w (-1)^{l(w)} e^{2 pi i (w nu)(X)} / prod_{beta > 0} 2i sin(pi beta(X))`.
pub fn char_value(rs: &RootSystem, nu: &Weight, x: &Coweight) -> Result<Complex64> {
    rs.check_weight(nu)?;
    require_regular_point(rs, x)?;
    let weyl = enumerate_weyl(rs, DEFAULT_GROUP_CAP)?;
    let numerator: Complex64 = weyl
        .iter()
        .map(|w| w.sign() as f64 * unit_phase(&x.weight_value(&w.act(nu))))
        .sum();
    let denominator: Complex64 = rs
        .positive_roots()
        .iter()
        .map(|beta| {
            let t = x.root_value(beta);
            let frac = (&t - t.floor()).to_f64().expect("fraction");
            Complex64::new(0.0, 2.0 * (PI * frac).sin())
        })
        .product();
    // sin(pi t) changes sign with each integer shift; restore it
    let parity: i64 = rs
        .positive_roots()
        .iter()
        .map(|beta| {
            let t = x.root_value(beta);
            t.floor().to_integer().is_odd() as i64
        })
        .sum();
    let sign = if parity % 2 == 0 { 1.0 } else { -1.0 };
    Ok(numerator / (denominator * sign))
}

/// Localized character sum over the fixed points `W/W_theta`:
/// `sum_w w(chi^K_lambda) / prod_{beta in Psi} (1 - e^{-w beta})` at `exp(X)`,
/// where `chi^K_lambda` is the Levi character of highest weight `lambda`.
pub fn lefschetz_sum(pd: &ParabolicData<'_>, lambda: &Weight, x: &Coweight) -> Result<Complex64> {
    let rs = pd.root_system();
    require_regular_point(rs, x)?;
    let levi = levi_character(rs, pd.theta(), lambda)?;
    let cosets = coset_representatives(rs, pd.theta(), DEFAULT_COSET_CAP)?;
    let mut total = Complex64::zero();
    for w in cosets.reps() {
        let local: Complex64 = levi
            .weights()
            .map(|(mu, m)| m as f64 * unit_phase(&x.weight_value(&w.act(mu))))
            .sum();
        let todd: Complex64 = pd
            .psi()
            .iter()
            .map(|beta| {
                let value = x.root_value(&w.act_root(rs, beta));
                Complex64::new(1.0, 0.0) - unit_phase(&-value)
            })
            .product();
        total += local / todd;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(&s.parse().unwrap()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn a1_dimension_polynomial() {
        let r = rs("A1");
        let pd = ParabolicData::borel(&r);
        let p = dim_polynomial(&pd, &Weight(vec![1]), &Root(vec![1])).unwrap();
        assert_eq!(p, BivariatePolynomial::linear(int(1), int(1), int(-2)));
        assert!(matches!(
            dim_polynomial(&pd, &Weight(vec![1]), &Root(vec![2])),
            Err(Error::NotInPsi(_))
        ));
        assert!(matches!(
            dim_polynomial(&pd, &Weight(vec![0]), &Root(vec![1])),
            Err(Error::NotAmple { .. })
        ));
    }

    #[test]
    fn a2_dimension_polynomial_degrees() {
        let r = rs("A2");
        let pd = ParabolicData::borel(&r);
        for alpha in pd.psi() {
            let p = dim_polynomial(&pd, r.rho(), alpha).unwrap();
            assert_eq!(p.degree_m(), Some(3));
            // at (m, k) = (1, 0): the adjoint representation
            assert_eq!(p.eval(&int(1), &int(0)), int(8));
        }
        assert_eq!(freudenthal(&r, r.rho()).unwrap().degree(), 8);
    }

    #[test]
    fn f_j_examples() {
        let r = rs("A2");
        let pd = ParabolicData::new(&r, &[0]).unwrap();
        let lambda = Weight(vec![0, 1]);
        let f1 = f_j(&pd, &lambda, 1).unwrap();
        assert!(f1.total_degree().unwrap() <= 2);
        assert!(f_j(&pd, &lambda, 2).unwrap().is_zero());
        // dim V(m omega_2) summed twice at k = 0
        assert_eq!(f1.eval(&int(2), &int(0)), int(12));
    }

    #[test]
    fn sl2_strings() {
        let r = rs("A1");
        for m in 0..6 {
            let ch = freudenthal(&r, &Weight(vec![m])).unwrap();
            let expected: Vec<(Weight, i64)> =
                (0..=m).map(|k| (Weight(vec![-m + 2 * k]), 1)).collect();
            let got: Vec<(Weight, i64)> = ch.weights().map(|(w, c)| (w.clone(), c)).collect();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn adjoint_a2() {
        let r = rs("A2");
        let ch = freudenthal(&r, r.rho()).unwrap();
        assert_eq!(ch.multiplicity(&Weight(vec![0, 0])), 2);
        assert_eq!(kostant_multiplicity(&r, r.rho(), &Weight(vec![0, 0])).unwrap(), 2);
        assert_eq!(kostant_multiplicity(&r, &Weight(vec![2]), &Weight(vec![0])).is_err(), true);
        let a1 = rs("A1");
        assert_eq!(kostant_multiplicity(&a1, &Weight(vec![2]), &Weight(vec![0])).unwrap(), 1);
    }

    #[test]
    fn weyl_dimensions() {
        let a1 = rs("A1");
        for m in 0..10 {
            assert_eq!(weyl_dim(&a1, &Weight(vec![m])).unwrap(), BigInt::from(m + 1));
        }
        assert_eq!(weyl_dim(&rs("A2"), &Weight(vec![1, 0])).unwrap(), BigInt::from(3));
        let d4 = rs("D4");
        let omega1 = Weight(vec![1, 0, 0, 0]);
        assert_eq!(weyl_dim(&d4, &omega1).unwrap(), BigInt::from(8));
        assert_eq!(freudenthal(&d4, &omega1).unwrap().degree(), 8);
        assert!(weyl_dim(&d4, &Weight(vec![-1, 0, 0, 0])).is_err());
    }

    #[test]
    fn freudenthal_total_dimension_matches_weyl() {
        for (s, lambdas) in [
            ("B3", vec![vec![1, 0, 0], vec![0, 0, 1], vec![1, 1, 1], vec![0, 2, 0]]),
            ("C3", vec![vec![1, 0, 1], vec![2, 0, 0]]),
            ("F4", vec![vec![0, 0, 0, 1], vec![1, 0, 0, 0]]),
            ("E6", vec![vec![1, 0, 0, 0, 0, 0], vec![0, 1, 0, 0, 0, 0]]),
            ("G2", vec![vec![2, 1], vec![0, 3]]),
            ("A2xA1", vec![vec![1, 1, 2]]),
        ] {
            let r = rs(s);
            for l in lambdas {
                let l = Weight(l);
                let ch = freudenthal(&r, &l).unwrap();
                assert_eq!(BigInt::from(ch.degree()), weyl_dim(&r, &l).unwrap(), "{s} {l}");
            }
        }
        // E6 adjoint: zero weight multiplicity equals the rank
        let e6 = rs("E6");
        let adj = freudenthal(&e6, &Weight(vec![0, 1, 0, 0, 0, 0])).unwrap();
        assert_eq!(adj.multiplicity(&Weight::zero(6)), 6);
    }

    #[test]
    fn signed_characters() {
        let a1 = rs("A1");
        let trivial = formal_character(&a1, a1.rho()).unwrap();
        assert_eq!(trivial.weights().collect::<Vec<_>>(), vec![(&Weight(vec![0]), 1)]);

        let ch = formal_character(&a1, &Weight(vec![-2])).unwrap();
        let expected =
            FormalCharacter::from_map(BTreeMap::from([(Weight(vec![1]), -1), (Weight(vec![-1]), -1)]));
        assert_eq!(ch, expected);

        assert!(formal_character(&a1, &Weight(vec![0])).unwrap().is_zero());
        let b2 = rs("B2");
        assert!(formal_character(&b2, &Weight(vec![1, -2])).unwrap().is_zero());
    }

    #[test]
    fn reflection_flips_character_sign() {
        let r = rs("B2");
        for nu in [Weight(vec![2, 1]), Weight(vec![3, -1]), Weight(vec![-2, 5])] {
            let base = formal_character(&r, &nu).unwrap();
            for beta in r.positive_roots() {
                let reflected = formal_character(&r, &r.reflect(beta, &nu).unwrap()).unwrap();
                assert_eq!(reflected, base.scaled(-1));
            }
        }
    }

    #[test]
    fn sl2_character_value() {
        let r = rs("A1");
        for (n, d) in [(1, 3), (2, 7), (5, 11)] {
            let x = Coweight::new(&r, vec![q(n, d)]).unwrap();
            let value = char_value(&r, &Weight(vec![2]), &x).unwrap();
            let expected = 2.0 * (PI * n as f64 / d as f64).cos();
            assert!((value.re - expected).abs() < 1e-12 && value.im.abs() < 1e-12);
        }
        let singular = Coweight::from_integers(&r, &[1]).unwrap();
        assert!(matches!(
            char_value(&r, &Weight(vec![2]), &singular),
            Err(Error::NonRegularPoint(_))
        ));
    }

    #[test]
    fn levi_character_of_a_line_bundle_is_one_weight() {
        let r = rs("A3");
        let ch = levi_character(&r, &[1, 2], &Weight(vec![1, 0, 0])).unwrap();
        assert_eq!(ch.degree(), 1);
        let ch = levi_character(&r, &[1, 2], &Weight(vec![1, 1, 0])).unwrap();
        assert_eq!(ch.degree(), 3);
    }

    #[test]
    fn lefschetz_sum_recovers_the_character() {
        for (s, theta, lambda) in [
            ("A1", vec![], vec![1]),
            ("A2", vec![0], vec![0, 1]),
            ("A2", vec![], vec![1, 2]),
            ("B2", vec![1], vec![1, 0]),
            ("B2", vec![], vec![1, 1]),
        ] {
            let r = rs(s);
            let pd = ParabolicData::new(&r, &theta).unwrap();
            let lambda = Weight(lambda);
            let values: Vec<BigRational> = (0..r.rank()).map(|i| q(2 * i as i64 + 1, 7 + 2 * i as i64)).collect();
            let x = Coweight::new(&r, values).unwrap();
            let local = lefschetz_sum(&pd, &lambda, &x).unwrap();
            let global = char_value(&r, &(&lambda + r.rho()), &x).unwrap();
            let direct = freudenthal(&r, &lambda).unwrap().evaluate(&x);
            assert!((global - direct).norm() < 1e-9 * direct.norm().max(1.0), "{s}: {global} vs {direct}");
            assert!((local - global).norm() < 1e-9 * global.norm().max(1.0), "{s}: {local} vs {global}");
        }
    }
}
