//! Root systems of all Cartan types, built from Cartan matrices.
//!
//! Weights are stored in the basis of fundamental weights and roots in the
//! basis of simple roots. Every pairing `<alpha^vee, mu>` is an integer in
//! these coordinates and is computed from the Cartan matrix alone, so no real
//! inner product ever appears. Semisimple types are products of simple
//! factors laid out block-diagonally.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Family letter of a simple factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn rank_is_valid(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// A simple factor `X_n` of a Cartan type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<SimpleType> {
        if !family.rank_is_valid(rank) {
            return Err(Error::InvalidCartan(format!(
                "{}{rank} is not a valid simple type",
                family.letter()
            )));
        }
        Ok(SimpleType { family, rank })
    }

    /// Coxeter number `c`; satisfies `rank * c = #roots`.
    pub fn coxeter_number(self) -> u64 {
        let n = self.rank as u64;
        match self.family {
            Family::A => n + 1,
            Family::B | Family::C => 2 * n,
            Family::D => 2 * n - 2,
            Family::E => match n {
                6 => 12,
                7 => 18,
                _ => 30,
            },
            Family::F => 12,
            Family::G => 6,
        }
    }

    /// Number of positive roots.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Order of the Weyl group from the classical product formulas.
    pub fn weyl_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Cartan matrix with `A[i][j] = <alpha_i^vee, alpha_j>`, Bourbaki numbering.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                for i in 0..3 {
                    link(i, i + 1);
                }
            }
            Family::G => link(0, 1),
        }
        match self.family {
            // alpha_n short
            Family::B => a[n - 1][n - 2] = -2,
            // alpha_n long
            Family::C => a[n - 2][n - 1] = -2,
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            Family::F => a[2][1] = -2,
            // alpha_1 short, alpha_2 long
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// An ordered product of simple factors, e.g. `B2xA1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanSpec {
    factors: Vec<SimpleType>,
}

impl CartanSpec {
    pub fn new(factors: Vec<SimpleType>) -> Result<CartanSpec> {
        if factors.is_empty() {
            return Err(Error::InvalidCartan("empty Cartan type".into()));
        }
        Ok(CartanSpec { factors })
    }

    pub fn simple(family: Family, rank: usize) -> Result<CartanSpec> {
        CartanSpec::new(vec![SimpleType::new(family, rank)?])
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1
    }
}

impl FromStr for CartanSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<CartanSpec> {
        let s = s.trim();
        let mut factors = Vec::new();
        for token in s.split(['x', 'X']) {
            let mut chars = token.chars();
            let family = chars
                .next()
                .and_then(Family::from_letter)
                .ok_or_else(|| Error::InvalidCartan(format!("bad factor {token:?} in {s:?}")))?;
            let digits = chars.as_str();
            let rank: usize = digits
                .parse()
                .map_err(|_| Error::InvalidCartan(format!("bad rank in factor {token:?}")))?;
            factors.push(SimpleType::new(family, rank)?);
        }
        CartanSpec::new(factors)
    }
}

impl fmt::Display for CartanSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

macro_rules! lattice_vector {
    ($name:ident) => {
        impl $name {
            pub fn new(coords: Vec<i64>) -> Self {
                $name(coords)
            }

            pub fn zero(rank: usize) -> Self {
                $name(vec![0; rank])
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }
        }

        impl Index<usize> for $name {
            type Output = i64;
            fn index(&self, i: usize) -> &i64 {
                &self.0[i]
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl Mul<i64> for &$name {
            type Output = $name;
            fn mul(self, rhs: i64) -> $name {
                $name(self.0.iter().map(|a| a * rhs).collect())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("(")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    };
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

/// A root (or any root-lattice element) in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

lattice_vector!(Weight);
lattice_vector!(Root);

impl Weight {
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }
}

impl Root {
    /// Sum of the simple-root coordinates.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    /// Indices of simple roots with non-zero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i)
    }
}

#[derive(Debug, Clone)]
struct Factor {
    ty: SimpleType,
    offset: usize,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: CartanSpec,
    factors: Vec<Factor>,
    cartan: Vec<Vec<i64>>,
    cartan_inverse: Vec<Vec<BigRational>>,
    // (alpha_i, alpha_i) / 2, scaled to coprime integers per factor
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    positive_coroots: Vec<Vec<i64>>,
    root_weights: Vec<Weight>,
    root_index: HashMap<Root, usize>,
    rho: Weight,
}

impl RootSystem {
    pub fn new(spec: &CartanSpec) -> Result<RootSystem> {
        let rank = spec.rank();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut factors = Vec::new();
        let mut symmetrizer = vec![0i64; rank];
        let mut offset = 0;
        for &ty in spec.factors() {
            let block = ty.cartan_matrix();
            for (i, row) in block.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    cartan[offset + i][offset + j] = v;
                }
            }
            for (i, d) in block_symmetrizer(&block).into_iter().enumerate() {
                symmetrizer[offset + i] = d;
            }
            factors.push(Factor { ty, offset });
            offset += ty.rank;
        }

        let mut rs = RootSystem {
            spec: spec.clone(),
            factors,
            cartan_inverse: rational_inverse(&cartan),
            cartan,
            symmetrizer,
            positive_roots: Vec::new(),
            positive_coroots: Vec::new(),
            root_weights: Vec::new(),
            root_index: HashMap::new(),
            rho: Weight(vec![1; rank]),
        };

        let roots = rs.close_under_reflections();
        let expected: usize = spec.factors().iter().map(|f| f.positive_root_count()).sum();
        if roots.len() != expected {
            return Err(Error::CrossCheck(format!(
                "{spec}: generated {} positive roots, expected {expected}",
                roots.len()
            )));
        }
        for f in spec.factors() {
            if f.rank as u64 * f.coxeter_number() != 2 * f.positive_root_count() as u64 {
                return Err(Error::CrossCheck(format!("{f}: rank * c != #roots")));
            }
        }

        for root in &roots {
            rs.positive_coroots.push(rs.coroot_coords(root));
            rs.root_weights.push(rs.root_to_weight(root));
        }
        rs.root_index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        rs.positive_roots = roots;
        Ok(rs)
    }

    // Breadth-first closure of the simple roots under simple reflections,
    // keeping positive roots only. Sorted lexicographically.
    fn close_under_reflections(&self) -> Vec<Root> {
        let rank = self.rank();
        let mut seen: BTreeSet<Root> = BTreeSet::new();
        let mut queue: VecDeque<Root> = (0..rank).map(|i| self.simple_root(i)).collect();
        while let Some(beta) = queue.pop_front() {
            if !seen.insert(beta.clone()) {
                continue;
            }
            for i in 0..rank {
                let image = self.simple_reflect_root(i, &beta);
                if image.is_positive() && !seen.contains(&image) {
                    queue.push_back(image);
                }
            }
        }
        seen.into_iter().collect()
    }

    fn coroot_coords(&self, root: &Root) -> Vec<i64> {
        let n = self.rank();
        let mut norm2 = 0i64; // (alpha, alpha) with the scaled form
        for i in 0..n {
            for j in 0..n {
                norm2 += root[i] * root[j] * self.symmetrizer[i] * self.cartan[i][j];
            }
        }
        let half = norm2 / 2;
        (0..n)
            .map(|i| {
                let num = root[i] * self.symmetrizer[i];
                debug_assert_eq!(num % half, 0);
                num / half
            })
            .collect()
    }

    pub fn spec(&self) -> &CartanSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inverse(&self) -> &[Vec<BigRational>] {
        &self.cartan_inverse
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Positive roots paired with their coroot coordinates.
    pub fn positive_roots_with_coroots(&self) -> impl Iterator<Item = (&Root, &[i64])> {
        self.positive_roots
            .iter()
            .zip(self.positive_coroots.iter().map(|c| c.as_slice()))
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive_roots.len()
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        Root(v)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        Weight(v)
    }

    pub fn is_simple(&self) -> bool {
        self.spec.is_simple()
    }

    /// Coxeter number; for products, the maximum over factors.
    pub fn coxeter_number(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| f.ty.coxeter_number())
            .max()
            .unwrap_or(1)
    }

    /// Simple factors with the offset of their first simple root.
    pub fn factor_types(&self) -> impl Iterator<Item = (SimpleType, usize)> + '_ {
        self.factors.iter().map(|f| (f.ty, f.offset))
    }

    pub fn check_weight(&self, mu: &Weight) -> Result<()> {
        if mu.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: mu.len(),
            });
        }
        Ok(())
    }

    /// Fundamental-weight coordinates of a root-lattice element.
    pub fn root_to_weight(&self, root: &Root) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i][j] * root[j]).sum())
                .collect(),
        )
    }

    /// Simple-root coordinates of a weight; rational in general.
    pub fn weight_to_root_coords(&self, mu: &Weight) -> Vec<BigRational> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n).fold(BigRational::zero(), |acc, j| {
                    acc + &self.cartan_inverse[i][j] * BigInt::from(mu[j])
                })
            })
            .collect()
    }

    /// Simple-root coordinates when `mu` lies in the root lattice.
    pub fn weight_in_root_lattice(&self, mu: &Weight) -> Option<Root> {
        self.weight_to_root_coords(mu)
            .into_iter()
            .map(|q| q.is_integer().then(|| i64::try_from(q.to_integer()).ok()).flatten())
            .collect::<Option<Vec<_>>>()
            .map(Root)
    }

    /// Coroot coordinates of a (positive or negative) root.
    pub fn coroot(&self, alpha: &Root) -> Result<Vec<i64>> {
        if let Some(&i) = self.root_index.get(alpha) {
            return Ok(self.positive_coroots[i].clone());
        }
        let neg = -alpha;
        match self.root_index.get(&neg) {
            Some(&i) => Ok(self.positive_coroots[i].iter().map(|c| -c).collect()),
            None => Err(Error::NotARoot(alpha.clone())),
        }
    }

    pub fn is_root(&self, alpha: &Root) -> bool {
        self.root_index.contains_key(alpha) || self.root_index.contains_key(&-alpha)
    }

    /// Index of a positive root in [`positive_roots`](Self::positive_roots).
    pub fn positive_root_index(&self, alpha: &Root) -> Option<usize> {
        self.root_index.get(alpha).copied()
    }

    /// `<alpha^vee, mu>`.
    pub fn coroot_pairing(&self, mu: &Weight, alpha: &Root) -> Result<i64> {
        let coroot = self.coroot(alpha)?;
        Ok(coroot.iter().zip(&mu.0).map(|(c, m)| c * m).sum())
    }

    /// `<alpha^vee, mu>` for the i-th positive root.
    pub fn positive_pairing(&self, index: usize, mu: &Weight) -> i64 {
        self.positive_coroots[index]
            .iter()
            .zip(&mu.0)
            .map(|(c, m)| c * m)
            .sum()
    }

    /// Weight coordinates of the i-th positive root.
    pub fn positive_root_weight(&self, index: usize) -> &Weight {
        &self.root_weights[index]
    }

    /// `S_alpha(mu) = mu - <alpha^vee, mu> alpha`.
    pub fn reflect(&self, alpha: &Root, mu: &Weight) -> Result<Weight> {
        let p = self.coroot_pairing(mu, alpha)?;
        Ok(mu - &(&self.root_to_weight(alpha) * p))
    }

    /// Reflection of a root-lattice element in the hyperplane of `alpha`.
    pub fn reflect_root(&self, alpha: &Root, beta: &Root) -> Result<Root> {
        let p = self.coroot_pairing(&self.root_to_weight(beta), alpha)?;
        Ok(beta - &(alpha * p))
    }

    pub fn simple_reflect(&self, i: usize, mu: &Weight) -> Weight {
        let p = mu[i];
        Weight(
            mu.0.iter()
                .enumerate()
                .map(|(j, &m)| m - p * self.cartan[j][i])
                .collect(),
        )
    }

    pub fn simple_reflect_root(&self, i: usize, beta: &Root) -> Root {
        let p: i64 = (0..self.rank()).map(|j| self.cartan[i][j] * beta[j]).sum();
        let mut out = beta.clone();
        out.0[i] -= p;
        out
    }

    /// True iff no coroot pairing with `nu` vanishes.
    pub fn is_regular(&self, nu: &Weight) -> bool {
        (0..self.positive_roots.len()).all(|i| self.positive_pairing(i, nu) != 0)
    }

    /// The invariant form `(x, mu)` for `x` in the root lattice, scaled so
    /// that `(alpha_i, omega_j) = d_i delta_ij` with integral `d_i`.
    pub fn form(&self, x: &Root, mu: &Weight) -> i64 {
        x.0.iter()
            .zip(&self.symmetrizer)
            .zip(&mu.0)
            .map(|((a, d), m)| a * d * m)
            .sum()
    }

    /// Root lengths are not needed anywhere else; exposed for diagnostics.
    pub fn is_long_simple_root(&self, i: usize) -> bool {
        let factor = self
            .factors
            .iter()
            .rev()
            .find(|f| f.offset <= i)
            .expect("index within rank");
        let block = factor.offset..factor.offset + factor.ty.rank;
        self.symmetrizer[block].iter().all(|&d| d <= self.symmetrizer[i])
    }
}

// Integral d with d_i A_ij = d_j A_ji for a connected block, coprime entries.
fn block_symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    d[0] = Some(BigRational::one());
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && a[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().expect("visited");
                d[j] = Some(di * BigInt::from(a[i][j]) / BigInt::from(a[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<BigRational> = d.into_iter().map(|x| x.expect("connected block")).collect();
    let lcm = d.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let scaled: Vec<BigInt> = d.iter().map(|q| (q * &lcm).to_integer()).collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    scaled
        .iter()
        .map(|x| i64::try_from(x / &g).expect("small symmetrizer"))
        .collect()
}

fn rational_inverse(a: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|&x| q(x)).collect();
            r.extend((0..n).map(|j| q(i64::from(i == j))));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("Cartan matrices are invertible");
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x = &*x - &factor * y;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// A point `X` of the Cartan subalgebra, given by the values `alpha_i(X)` on
/// the simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coweight {
    simple: Vec<BigRational>,
    omega: Vec<BigRational>,
}

impl Coweight {
    pub fn new(rs: &RootSystem, simple_values: Vec<BigRational>) -> Result<Coweight> {
        let n = rs.rank();
        if simple_values.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: simple_values.len(),
            });
        }
        // omega_i = sum_j (A^{-1})_{ji} alpha_j
        let omega = (0..n)
            .map(|i| {
                (0..n).fold(BigRational::zero(), |acc, j| {
                    acc + &rs.cartan_inverse[j][i] * &simple_values[j]
                })
            })
            .collect();
        Ok(Coweight {
            simple: simple_values,
            omega,
        })
    }

    pub fn from_integers(rs: &RootSystem, values: &[i64]) -> Result<Coweight> {
        Coweight::new(
            rs,
            values
                .iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        )
    }

    /// The dual of `rho`: every simple root takes the value 1.
    pub fn rho_dual(rs: &RootSystem) -> Coweight {
        Coweight::from_integers(rs, &vec![1; rs.rank()]).expect("matching rank")
    }

    pub fn simple_values(&self) -> &[BigRational] {
        &self.simple
    }

    pub fn weight_value(&self, mu: &Weight) -> BigRational {
        self.omega
            .iter()
            .zip(&mu.0)
            .fold(BigRational::zero(), |acc, (w, &m)| acc + w * BigInt::from(m))
    }

    pub fn root_value(&self, beta: &Root) -> BigRational {
        self.simple
            .iter()
            .zip(&beta.0)
            .fold(BigRational::zero(), |acc, (x, &b)| acc + x * BigInt::from(b))
    }
}

pub fn build_root_system(spec: &CartanSpec) -> Result<RootSystem> {
    RootSystem::new(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn parse_specs() {
        let spec: CartanSpec = "b2xa1".parse().unwrap();
        assert_eq!(spec.to_string(), "B2xA1");
        assert_eq!(spec.rank(), 3);
        assert!("E9".parse::<CartanSpec>().is_err());
        assert!("B1".parse::<CartanSpec>().is_err());
        assert!("D2".parse::<CartanSpec>().is_err());
        assert!("F3".parse::<CartanSpec>().is_err());
        assert!("Q3".parse::<CartanSpec>().is_err());
        assert!("".parse::<CartanSpec>().is_err());
        assert!("A".parse::<CartanSpec>().is_err());
    }

    #[test]
    fn small_types() {
        let a1 = rs("A1");
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(a1.rho(), &Weight(vec![1]));
        assert_eq!(a1.coxeter_number(), 2);

        let a2 = rs("A2");
        assert_eq!(
            a2.positive_roots(),
            &[Root(vec![0, 1]), Root(vec![1, 0]), Root(vec![1, 1])]
        );
        assert_eq!(a2.coxeter_number(), 3);

        let g2 = rs("G2");
        assert_eq!(g2.positive_roots().len(), 6);
        assert_eq!(g2.coxeter_number(), 6);
        assert_eq!(g2.num_roots(), 12);
        let highest = g2.positive_roots().iter().max_by_key(|r| r.height()).unwrap();
        assert_eq!(highest, &Root(vec![3, 2]));
    }

    #[test]
    fn all_types_build() {
        for s in [
            "A1", "A5", "B2", "B5", "C3", "C4", "D3", "D4", "D6", "E6", "E7", "E8", "F4", "G2",
            "A2xG2",
        ] {
            let r = rs(s);
            let spec: CartanSpec = s.parse().unwrap();
            for f in spec.factors() {
                assert_eq!(f.rank * f.coxeter_number() as usize, 2 * f.positive_root_count());
            }
            assert!(r.positive_roots().iter().all(Root::is_positive));
        }
    }

    #[test]
    fn coroot_pairings() {
        let a2 = rs("A2");
        for i in 0..2 {
            assert_eq!(a2.coroot_pairing(a2.rho(), &a2.simple_root(i)).unwrap(), 1);
        }
        assert_eq!(a2.coroot_pairing(a2.rho(), &Root(vec![1, 1])).unwrap(), 2);

        let b2 = rs("B2");
        let w1 = b2.fundamental_weight(0);
        assert!(b2.is_long_simple_root(0));
        assert_eq!(b2.coroot_pairing(&w1, &Root(vec![1, 0])).unwrap(), 1);
        assert_eq!(b2.coroot_pairing(&w1, &Root(vec![0, 1])).unwrap(), 0);
        assert!(matches!(
            b2.coroot_pairing(&w1, &Root(vec![2, 1])),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn reflections() {
        let a1 = rs("A1");
        let alpha = a1.simple_root(0);
        assert_eq!(a1.reflect(&alpha, a1.rho()).unwrap(), Weight(vec![-1]));

        let a2 = rs("A2");
        let w1 = a2.fundamental_weight(0);
        let alpha1 = a2.simple_root(0);
        let expected = &w1 - &a2.root_to_weight(&alpha1);
        assert_eq!(a2.reflect(&alpha1, &w1).unwrap(), expected);
    }

    #[test]
    fn simple_reflections_permute_other_positive_roots() {
        for s in ["A3", "B3", "C3", "D4", "G2", "F4"] {
            let r = rs(s);
            for i in 0..r.rank() {
                let alpha = r.simple_root(i);
                for beta in r.positive_roots() {
                    let image = r.reflect_root(&alpha, beta).unwrap();
                    if beta == &alpha {
                        assert_eq!(image, -&alpha);
                    } else {
                        assert!(r.positive_root_index(&image).is_some(), "{s}: {beta:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn positive_roots_sum_to_two_rho() {
        for s in ["A4", "B3", "C3", "D5", "E6", "F4", "G2", "B2xA1"] {
            let r = rs(s);
            let sum = r
                .positive_roots()
                .iter()
                .fold(Weight::zero(r.rank()), |acc, b| &acc + &r.root_to_weight(b));
            assert_eq!(sum, r.rho() * 2, "{s}");
        }
    }

    #[test]
    fn cartan_inverse_round_trip() {
        let r = rs("E6");
        for beta in r.positive_roots() {
            let w = r.root_to_weight(beta);
            assert_eq!(r.weight_in_root_lattice(&w).as_ref(), Some(beta));
        }
        let a2 = rs("A2");
        assert_eq!(a2.weight_in_root_lattice(&a2.fundamental_weight(0)), None);
    }

    #[test]
    fn coweight_values_agree_on_roots() {
        let r = rs("F4");
        let x = Coweight::from_integers(&r, &[3, -1, 2, 5]).unwrap();
        for beta in r.positive_roots() {
            assert_eq!(x.weight_value(&r.root_to_weight(beta)), x.root_value(beta));
        }
        assert!(Coweight::from_integers(&r, &[1]).is_err());
    }

    fn weight_strategy(rank: usize) -> impl Strategy<Value = Weight> {
        prop::collection::vec(-20i64..20, rank).prop_map(Weight)
    }

    proptest! {
        #[test]
        fn reflection_is_involutive(mu in weight_strategy(3), idx in 0usize..9) {
            let r = rs("B3");
            let alpha = r.positive_roots()[idx].clone();
            let once = r.reflect(&alpha, &mu).unwrap();
            prop_assert_eq!(r.reflect(&alpha, &once).unwrap(), mu);
        }

        #[test]
        fn pairing_is_linear(mu in weight_strategy(2), nu in weight_strategy(2), a in -5i64..5, idx in 0usize..6) {
            let r = rs("G2");
            let alpha = &r.positive_roots()[idx];
            let lhs = r.coroot_pairing(&(&(&mu * a) + &nu), alpha).unwrap();
            let rhs = a * r.coroot_pairing(&mu, alpha).unwrap() + r.coroot_pairing(&nu, alpha).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
