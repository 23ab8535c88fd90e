//! The character side of the Jantzen sum formula, as a formal combination
//! `sum_p (sum_mu c_{p,mu} e^mu) log p`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::charpoly::{formal_character, FormalCharacter};
use crate::error::{Error, Result};
use crate::parabolic::ParabolicData;
use crate::rootsys::{Root, RootSystem, Weight};
use crate::weyl::{longest_element, to_dominant_dotted};

/// Prime-indexed formal characters; no zero character is stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LogCharacterCombo {
    terms: BTreeMap<u64, FormalCharacter>,
}

impl LogCharacterCombo {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &FormalCharacter)> {
        self.terms.iter().map(|(&p, ch)| (p, ch))
    }

    pub fn character(&self, p: u64) -> Option<&FormalCharacter> {
        self.terms.get(&p)
    }

    /// Coefficient of `e^mu log p`.
    pub fn coefficient(&self, p: u64, mu: &Weight) -> i64 {
        self.terms.get(&p).map_or(0, |ch| ch.multiplicity(mu))
    }

    pub fn add_prime(&mut self, p: u64, ch: &FormalCharacter, c: i64) {
        let entry = self.terms.entry(p).or_default();
        entry.add_scaled(ch, c);
        if entry.is_zero() {
            self.terms.remove(&p);
        }
    }

    /// Adds `c * ch * log k`, expanding `log k` over primes.
    pub fn add_log(&mut self, k: u64, ch: &FormalCharacter, c: i64) {
        for (p, e) in prime_factors(k) {
            self.add_prime(p, ch, c * i64::from(e));
        }
    }

    pub fn add(&self, other: &LogCharacterCombo) -> LogCharacterCombo {
        let mut out = self.clone();
        for (p, ch) in other.terms() {
            out.add_prime(p, ch, 1);
        }
        out
    }

    pub fn neg(&self) -> LogCharacterCombo {
        LogCharacterCombo {
            terms: self.terms.iter().map(|(&p, ch)| (p, ch.scaled(-1))).collect(),
        }
    }
}

impl fmt::Display for LogCharacterCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (p, ch) in self.terms() {
            write!(f, "log {p}:")?;
            for (mu, c) in ch.weights() {
                write!(f, " {c:+}*e{mu}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `(p, v_p(k))` for `k >= 1`, by trial division.
pub fn prime_factors(mut k: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= k {
        let mut e = 0;
        while k % p == 0 {
            k /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if k > 1 {
        out.push((k, 1));
    }
    out
}

// formal characters of rho + lambda shifts, cached per evaluation
struct CharacterTable<'a> {
    rs: &'a RootSystem,
    cache: HashMap<Weight, FormalCharacter>,
}

impl<'a> CharacterTable<'a> {
    fn new(rs: &'a RootSystem) -> Self {
        CharacterTable {
            rs,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, nu: &Weight) -> Result<&FormalCharacter> {
        if !self.cache.contains_key(nu) {
            let ch = formal_character(self.rs, nu)?;
            self.cache.insert(nu.clone(), ch);
        }
        Ok(&self.cache[nu])
    }
}

// sum_{k=1}^{count} chi_{base + k step} log k, added with sign c
fn add_string(
    table: &mut CharacterTable<'_>,
    out: &mut LogCharacterCombo,
    base: &Weight,
    step: &Weight,
    count: i64,
    c: i64,
) -> Result<()> {
    for k in 2..=count {
        let nu = base + &(step * k);
        let ch = table.get(&nu)?;
        if !ch.is_zero() {
            let ch = ch.clone();
            out.add_log(k as u64, &ch, c);
        }
    }
    Ok(())
}

/// `-sum_{Psi+} sum_{k=1}^{a-1} chi_{rho+lambda-k alpha} log k
///  + sum_{Psi-} sum_{k=1}^{-a-1} chi_{rho+lambda+k alpha} log k`
/// with `a = <alpha^vee, rho+lambda>` and `Psi+` where `a >= 0`.
pub fn jantzen_rhs(pd: &ParabolicData<'_>, lambda: &Weight) -> Result<LogCharacterCombo> {
    let rs = pd.root_system();
    rs.check_weight(lambda)?;
    let nu = lambda + rs.rho();
    let mut table = CharacterTable::new(rs);
    let mut out = LogCharacterCombo::zero();
    for alpha in pd.psi() {
        let a = rs.coroot_pairing(&nu, alpha)?;
        let alpha_weight = rs.root_to_weight(alpha);
        if a >= 0 {
            add_string(&mut table, &mut out, &nu, &-&alpha_weight, a - 1, -1)?;
        } else {
            add_string(&mut table, &mut out, &nu, &alpha_weight, -a - 1, 1)?;
        }
    }
    Ok(out)
}

/// The same sum rewritten through the longest element `w0`, summing over
/// `-w0 Psi+` and `-w0 Psi-` around `w0(rho+lambda)`:
/// `-(-1)^{l(w0)} sum_{-w0 Psi+} sum_{k=1}^{-<alpha^vee, w0 nu> - 1} chi_{w0 nu + k alpha} log k
///  + (-1)^{l(w0)} sum_{-w0 Psi-} sum_{k=1}^{<alpha^vee, w0 nu> - 1} chi_{w0 nu - k alpha} log k`.
pub fn jantzen_rhs_via_longest(pd: &ParabolicData<'_>, lambda: &Weight) -> Result<LogCharacterCombo> {
    let rs = pd.root_system();
    rs.check_weight(lambda)?;
    let nu = lambda + rs.rho();
    let w0 = longest_element(rs);
    let sign = w0.sign();
    let w0_nu = w0.act(&nu);
    let mut table = CharacterTable::new(rs);
    let mut out = LogCharacterCombo::zero();
    for beta in pd.psi() {
        let alpha: Root = -&w0.act_root(rs, beta);
        let b = rs.coroot_pairing(&nu, beta)?;
        let a = rs.coroot_pairing(&w0_nu, &alpha)?;
        let alpha_weight = rs.root_to_weight(&alpha);
        if b >= 0 {
            add_string(&mut table, &mut out, &w0_nu, &alpha_weight, -a - 1, -sign)?;
        } else {
            add_string(&mut table, &mut out, &w0_nu, &-&alpha_weight, a - 1, sign)?;
        }
    }
    Ok(out)
}

/// Coefficient of `e^{lambda0}` per prime, where `rho + lambda0` is the
/// dominant conjugate of `rho + lambda`.
pub fn lambda0_component(
    combo: &LogCharacterCombo,
    pd: &ParabolicData<'_>,
    lambda: &Weight,
) -> Result<BTreeMap<u64, i64>> {
    let rs = pd.root_system();
    rs.check_weight(lambda)?;
    let (_, lambda0) =
        to_dominant_dotted(rs, lambda).ok_or_else(|| Error::Singular(lambda + rs.rho()))?;
    Ok(combo
        .terms()
        .map(|(p, ch)| (p, ch.multiplicity(&lambda0)))
        .filter(|&(_, c)| c != 0)
        .collect())
}

/// The sum over `P_theta` equals the sum over the Borel subgroup.
pub fn verify_parabolic_independence(
    rs: &RootSystem,
    lambda: &Weight,
    theta: &[usize],
) -> Result<bool> {
    rs.check_weight(lambda)?;
    if let Some(&i) = theta.iter().find(|&&i| i < rs.rank() && lambda[i] != 0) {
        return Err(Error::NotAmple {
            weight: lambda.clone(),
            root: rs.simple_root(i),
            pairing: lambda[i],
        });
    }
    let parabolic = jantzen_rhs(&ParabolicData::new(rs, theta)?, lambda)?;
    let borel = jantzen_rhs(&ParabolicData::borel(rs), lambda)?;
    Ok(parabolic == borel)
}
