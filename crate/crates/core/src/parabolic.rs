//! Standard parabolic data: Levi roots, isotropy roots and their grading by
//! an ample weight.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, Weight};
use crate::weyl::normalize_theta;

/// `G/P_theta` for a standard parabolic of type `theta` (0-based simple
/// indices spanning the Levi factor).
#[derive(Debug, Clone)]
pub struct ParabolicData<'a> {
    rs: &'a RootSystem,
    theta: Vec<usize>,
    levi_positive: Vec<Root>,
    psi: Vec<Root>,
}

impl<'a> ParabolicData<'a> {
    pub fn new(rs: &'a RootSystem, theta: &[usize]) -> Result<ParabolicData<'a>> {
        let theta = normalize_theta(rs, theta)?;
        let (levi_positive, psi) = rs
            .positive_roots()
            .iter()
            .cloned()
            .partition(|beta| beta.support().all(|i| theta.contains(&i)));
        Ok(ParabolicData {
            rs,
            theta,
            levi_positive,
            psi,
        })
    }

    /// The full flag variety `G/B`.
    pub fn borel(rs: &'a RootSystem) -> ParabolicData<'a> {
        ParabolicData::new(rs, &[]).expect("empty theta is valid")
    }

    /// `G/P` for the maximal parabolic omitting simple root `i`.
    pub fn maximal(rs: &'a RootSystem, i: usize) -> Result<ParabolicData<'a>> {
        let theta: Vec<usize> = (0..rs.rank()).filter(|&j| j != i).collect();
        if i >= rs.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: rs.rank(),
            });
        }
        ParabolicData::new(rs, &theta)
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn theta(&self) -> &[usize] {
        &self.theta
    }

    pub fn levi_positive(&self) -> &[Root] {
        &self.levi_positive
    }

    /// Positive roots outside the Levi factor: the weights of `g/p`.
    pub fn psi(&self) -> &[Root] {
        &self.psi
    }

    /// Complex dimension of `G/P`.
    pub fn dim(&self) -> usize {
        self.psi.len()
    }

    /// First root witnessing non-ampleness, with its pairing.
    fn ampleness_violation(&self, lambda: &Weight) -> Option<(Root, i64)> {
        for &i in &self.theta {
            if lambda[i] != 0 {
                return Some((self.rs.simple_root(i), lambda[i]));
            }
        }
        self.psi.iter().find_map(|alpha| {
            let p = self.rs.coroot_pairing(lambda, alpha).expect("positive root");
            (p <= 0).then(|| (alpha.clone(), p))
        })
    }

    /// `<alpha^vee, lambda>` vanishes on theta and is positive on psi.
    pub fn check_ample(&self, lambda: &Weight) -> bool {
        lambda.len() == self.rs.rank() && self.ampleness_violation(lambda).is_none()
    }

    pub fn require_ample(&self, lambda: &Weight) -> Result<()> {
        self.rs.check_weight(lambda)?;
        match self.ampleness_violation(lambda) {
            None => Ok(()),
            Some((root, pairing)) => Err(Error::NotAmple {
                weight: lambda.clone(),
                root,
                pairing,
            }),
        }
    }

    pub fn psi_grading(&self, lambda: &Weight) -> Result<PsiGrading> {
        self.require_ample(lambda)?;
        let mut buckets: BTreeMap<i64, Vec<Root>> = BTreeMap::new();
        for alpha in &self.psi {
            let j = self.rs.coroot_pairing(lambda, alpha)?;
            buckets.entry(j).or_default().push(alpha.clone());
        }
        Ok(PsiGrading {
            lambda: lambda.clone(),
            buckets,
        })
    }
}

/// `Psi_j = { alpha in Psi : <alpha^vee, lambda> = j }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiGrading {
    lambda: Weight,
    buckets: BTreeMap<i64, Vec<Root>>,
}

impl PsiGrading {
    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn buckets(&self) -> &BTreeMap<i64, Vec<Root>> {
        &self.buckets
    }

    /// Roots in `Psi_j`; empty when `j` is not populated.
    pub fn bucket(&self, j: i64) -> &[Root] {
        self.buckets.get(&j).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn grades(&self) -> impl Iterator<Item = i64> + '_ {
        self.buckets.keys().copied()
    }
}
