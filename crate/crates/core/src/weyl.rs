//! Weyl group elements, enumeration, the dotted action and minimal coset
//! representatives.
//!
//! An element is identified by its image of `rho`. Since `rho` is regular its
//! orbit is in bijection with the group, and the lexicographically least
//! reduced word can be read off the image by repeatedly reflecting in the
//! smallest simple root with a negative pairing.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::rootsys::{Family, Root, RootSystem, SimpleType, Weight};

pub const DEFAULT_GROUP_CAP: u128 = 1_000_000;
pub const DEFAULT_COSET_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    word: Vec<usize>,
    matrix: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> WeylElement {
        let n = rs.rank();
        WeylElement {
            word: Vec::new(),
            matrix: (0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect(),
        }
    }

    /// The element `s_{w[0]} s_{w[1]} ...`, re-expressed through its
    /// canonical reduced word.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<WeylElement> {
        if let Some(&bad) = word.iter().find(|&&i| i >= rs.rank()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                rank: rs.rank(),
            });
        }
        let image = apply_word(rs, word, rs.rho().clone());
        Ok(WeylElement::from_rho_image(rs, &image))
    }

    /// The element with the given word kept verbatim; the word must be
    /// reduced.
    pub fn from_reduced_word(rs: &RootSystem, word: &[usize]) -> Result<WeylElement> {
        let canonical = WeylElement::from_word(rs, word)?;
        if canonical.length() != word.len() {
            return Err(Error::CrossCheck(format!("word {word:?} is not reduced")));
        }
        Ok(WeylElement::with_word(rs, word.to_vec()))
    }

    /// The unique element `w` with `w(rho) = image`. `image` must lie in the
    /// orbit of `rho`.
    pub fn from_rho_image(rs: &RootSystem, image: &Weight) -> WeylElement {
        let (word, end) = reduce_to_dominant(rs, image.clone());
        debug_assert_eq!(&end, rs.rho());
        WeylElement::with_word(rs, word)
    }

    fn with_word(rs: &RootSystem, word: Vec<usize>) -> WeylElement {
        let n = rs.rank();
        let mut matrix = vec![vec![0i64; n]; n];
        for k in 0..n {
            let column = apply_word(rs, &word, rs.fundamental_weight(k));
            for (j, v) in column.0.into_iter().enumerate() {
                matrix[j][k] = v;
            }
        }
        WeylElement { word, matrix }
    }

    /// Reduced word, lexicographically least among reduced words.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn sign(&self) -> i64 {
        if self.word.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Integral action on fundamental-weight coordinates.
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn act(&self, mu: &Weight) -> Weight {
        Weight(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(&mu.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    pub fn act_root(&self, rs: &RootSystem, beta: &Root) -> Root {
        self.word
            .iter()
            .rev()
            .fold(beta.clone(), |acc, &i| rs.simple_reflect_root(i, &acc))
    }

    /// `w . mu = w(mu + rho) - rho`.
    pub fn dotted_act(&self, rs: &RootSystem, mu: &Weight) -> Weight {
        &self.act(&(mu + rs.rho())) - rs.rho()
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let reversed: Vec<usize> = self.word.iter().rev().copied().collect();
        WeylElement::from_word(rs, &reversed).expect("indices already validated")
    }

    /// The product `self * other`.
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        WeylElement::from_rho_image(rs, &self.act(&other.act(rs.rho())))
    }
}

fn apply_word(rs: &RootSystem, word: &[usize], mu: Weight) -> Weight {
    word.iter()
        .rev()
        .fold(mu, |acc, &i| rs.simple_reflect(i, &acc))
}

/// Reflect `nu` into the dominant chamber, always using the smallest simple
/// root with a negative pairing. Returns the word `[i1, ..., iL]` with
/// `nu = s_{i1} ... s_{iL} (end)` and `end` dominant.
fn reduce_to_dominant(rs: &RootSystem, mut nu: Weight) -> (Vec<usize>, Weight) {
    let mut word = Vec::new();
    while let Some(i) = nu.0.iter().position(|&c| c < 0) {
        nu = rs.simple_reflect(i, &nu);
        word.push(i);
    }
    (word, nu)
}

/// `|W|` from the classical closed forms, multiplied over factors.
pub fn weyl_order(rs: &RootSystem) -> u128 {
    rs.spec().factors().iter().map(|f| f.weyl_order()).product()
}

/// Complete enumeration ordered by length, then by reduced word.
pub fn enumerate_weyl(rs: &RootSystem, cap: u128) -> Result<Vec<WeylElement>> {
    let order = weyl_order(rs);
    if order > cap {
        return Err(Error::GroupTooLarge { order, cap });
    }
    let mut elements: Vec<WeylElement> = orbit(rs, rs.rho(), &all_indices(rs))
        .iter()
        .map(|nu| WeylElement::from_rho_image(rs, nu))
        .collect();
    sort_elements(&mut elements);
    Ok(elements)
}

fn all_indices(rs: &RootSystem) -> Vec<usize> {
    (0..rs.rank()).collect()
}

fn sort_elements(elements: &mut [WeylElement]) {
    elements.sort_by(|a, b| (a.length(), &a.word).cmp(&(b.length(), &b.word)));
}

/// Orbit of `mu` under the subgroup generated by the given simple reflections.
pub fn orbit(rs: &RootSystem, mu: &Weight, generators: &[usize]) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([mu.clone()]);
    seen.insert(mu.clone());
    while let Some(nu) = queue.pop_front() {
        for &i in generators {
            let image = rs.simple_reflect(i, &nu);
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
        out.push(nu);
    }
    out
}

pub fn longest_element(rs: &RootSystem) -> WeylElement {
    WeylElement::from_rho_image(rs, &-rs.rho())
}

/// Borel-Weil-Bott normalization: for regular `rho + lambda`, the unique `w`
/// with `w^{-1}(rho + lambda) = rho + lambda0` strictly dominant, and
/// `lambda0`. `None` when `rho + lambda` is singular.
pub fn to_dominant_dotted(rs: &RootSystem, lambda: &Weight) -> Option<(WeylElement, Weight)> {
    let nu = lambda + rs.rho();
    if !rs.is_regular(&nu) {
        return None;
    }
    let (word, dominant) = reduce_to_dominant(rs, nu);
    let lambda0 = &dominant - rs.rho();
    Some((WeylElement::with_word(rs, word), lambda0))
}

/// Minimal-length representatives of `W / W_theta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetList {
    theta: Vec<usize>,
    reps: Vec<WeylElement>,
}

impl CosetList {
    pub fn new(theta: Vec<usize>, reps: Vec<WeylElement>) -> CosetList {
        CosetList { theta, reps }
    }

    /// Simple-root indices (0-based) generating the parabolic subgroup.
    pub fn theta(&self) -> &[usize] {
        &self.theta
    }

    pub fn reps(&self) -> &[WeylElement] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

/// Sorted, deduplicated theta with range checking.
pub fn normalize_theta(rs: &RootSystem, theta: &[usize]) -> Result<Vec<usize>> {
    let mut t: Vec<usize> = theta.to_vec();
    t.sort_unstable();
    t.dedup();
    if let Some(&bad) = t.iter().find(|&&i| i >= rs.rank()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            rank: rs.rank(),
        });
    }
    Ok(t)
}

/// `|W_theta|`, by identifying the Cartan type of each connected component of
/// the sub-diagram on `theta`.
pub fn parabolic_order(rs: &RootSystem, theta: &[usize]) -> Result<u128> {
    let theta = normalize_theta(rs, theta)?;
    let a = rs.cartan_matrix();
    let mut assigned = vec![false; rs.rank()];
    let mut order = 1u128;
    for &start in &theta {
        if assigned[start] {
            continue;
        }
        let mut component = vec![start];
        assigned[start] = true;
        let mut k = 0;
        while k < component.len() {
            let i = component[k];
            for &j in &theta {
                if !assigned[j] && a[i][j] != 0 {
                    assigned[j] = true;
                    component.push(j);
                }
            }
            k += 1;
        }
        order *= component_type(rs, &component).weyl_order();
    }
    Ok(order)
}

fn component_type(rs: &RootSystem, component: &[usize]) -> SimpleType {
    let a = rs.cartan_matrix();
    let r = component.len();
    let positive = rs
        .positive_roots()
        .iter()
        .filter(|beta| beta.support().all(|i| component.contains(&i)))
        .count();
    let entries = component
        .iter()
        .flat_map(|&i| component.iter().map(move |&j| a[i][j]))
        .filter(|&v| v < 0);
    let min_entry = entries.min().unwrap_or(0);
    let family = match min_entry {
        -3 => Family::G,
        -2 if r == 4 && positive == 24 => Family::F,
        -2 => Family::B,
        _ if positive == r * (r + 1) / 2 => Family::A,
        _ if r >= 4 && positive == r * (r - 1) => Family::D,
        _ => Family::E,
    };
    SimpleType::new(family, r).expect("sub-diagram of a valid type")
}

/// Minimal coset representatives: `w` with `w(alpha) > 0` for every
/// `alpha` in theta, ordered by length then reduced word.
pub fn coset_representatives(rs: &RootSystem, theta: &[usize], cap: u128) -> Result<CosetList> {
    let theta = normalize_theta(rs, theta)?;
    let size = weyl_order(rs) / parabolic_order(rs, &theta)?;
    if size > cap {
        return Err(Error::QuotientTooLarge { size, cap });
    }
    // stabilizer of delta is exactly W_theta
    let delta = Weight(
        (0..rs.rank())
            .map(|i| i64::from(!theta.contains(&i)))
            .collect(),
    );
    let mut reps: Vec<WeylElement> = orbit(rs, &delta, &all_indices(rs))
        .into_iter()
        .map(|nu| {
            let (word, end) = reduce_to_dominant(rs, nu);
            debug_assert_eq!(end, delta);
            WeylElement::with_word(rs, word)
        })
        .collect();
    sort_elements(&mut reps);
    Ok(CosetList::new(theta, reps))
}
