//! Monomials and monomial ideals over a fixed number of variables.
//!
//! A [`MonomialIdeal`] is always stored by its minimal generating set: a
//! divisibility antichain sorted by degree and then lexicographically on
//! exponent vectors. Two ideals are equal exactly when their generator lists
//! are equal, which is what the golden files and the equality checks rely on.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported variable count. Supports are tracked as `u64` masks.
pub const MAX_VARS: usize = 64;

/// A monomial `x^a` stored as its exponent vector. Serializes as the bare
/// exponent array.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        debug_assert!(exps.len() <= MAX_VARS);
        Monomial { exps }
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn var(i: usize, n: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    /// Squarefree monomial on the given variables.
    pub fn squarefree(support: &[usize], n: usize) -> Self {
        let mut exps = vec![0; n];
        for &i in support {
            exps[i] = 1;
        }
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Bit `i` is set when `x_i` divides the monomial.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1u64 << i))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        check_ambient(self.n_vars(), other.n_vars())?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn checked_pow(&self, k: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&a| {
                u32::from(a)
                    .checked_mul(k)
                    .and_then(|e| u16::try_from(e).ok())
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Renders the monomial as `x1^2*x3` using the given variable labels.
    pub fn to_literal(&self, labels: &[String]) -> String {
        let factors: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let name = labels
                    .get(i)
                    .cloned()
                    .unwrap_or_else(|| format!("x{}", i + 1));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    /// Parses a literal such as `x1^2*x2*y3` against a variable labeling.
    /// Repeated factors accumulate; `1` is the unit monomial.
    pub fn parse_literal(literal: &str, labels: &[String]) -> Result<Monomial> {
        let bad = |msg: String| Error::MonomialLiteral {
            literal: literal.to_string(),
            msg,
        };
        let text = literal.trim();
        let mut exps = vec![0u16; labels.len()];
        if text == "1" {
            return Ok(Monomial { exps });
        }
        if text.is_empty() {
            return Err(bad("empty literal".into()));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, power) = match factor.split_once('^') {
                Some((name, p)) => {
                    let p: u16 = p
                        .trim()
                        .parse()
                        .map_err(|_| bad(format!("bad exponent in {factor:?}")))?;
                    (name.trim(), p)
                }
                None => (factor, 1),
            };
            let idx = labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| bad(format!("unknown variable {name:?}")))?;
            exps[idx] = exps[idx].checked_add(power).ok_or(Error::Overflow)?;
        }
        Ok(Monomial { exps })
    }
}

/// Graded order, ties broken lexicographically on exponent vectors.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal(&[]))
    }
}

fn check_ambient(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::AmbientMismatch { left, right })
    }
}

/// Calls `f` on every monomial of degree exactly `degree` supported on `vars`.
pub(crate) fn for_each_supported(
    vars: &[usize],
    degree: u32,
    base: &Monomial,
    f: &mut dyn FnMut(Monomial),
) {
    fn rec(vars: &[usize], remaining: u32, current: &mut Monomial, f: &mut dyn FnMut(Monomial)) {
        match vars {
            [] => {
                if remaining == 0 {
                    f(current.clone());
                }
            }
            [last] => {
                current.exps[*last] += remaining as u16;
                f(current.clone());
                current.exps[*last] -= remaining as u16;
            }
            [first, rest @ ..] => {
                for k in (0..=remaining).rev() {
                    current.exps[*first] += k as u16;
                    rec(rest, remaining - k, current, f);
                    current.exps[*first] -= k as u16;
                }
            }
        }
    }
    let mut current = base.clone();
    rec(vars, degree, &mut current, f);
}

/// A monomial ideal, stored as its canonical minimal generating set.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct MonomialIdeal {
    vars: usize,
    gens: Vec<Monomial>,
}

/// Wire form: `{"vars": n, "gens": [[e_0, ..., e_{n-1}], ...]}`.
#[derive(Serialize, Deserialize)]
struct IdealJson {
    vars: usize,
    gens: Vec<Vec<u16>>,
}

impl From<MonomialIdeal> for IdealJson {
    fn from(ideal: MonomialIdeal) -> Self {
        IdealJson {
            vars: ideal.vars,
            gens: ideal.gens.into_iter().map(|g| g.exps).collect(),
        }
    }
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(json: IdealJson) -> Result<Self> {
        if json.vars > MAX_VARS {
            return Err(Error::BoundExceeded {
                what: "variable count",
                size: json.vars,
                bound: MAX_VARS,
            });
        }
        let gens = json.gens.into_iter().map(Monomial::new).collect();
        MonomialIdeal::minimalize(json.vars, gens)
    }
}

impl MonomialIdeal {
    pub fn zero(vars: usize) -> Self {
        MonomialIdeal {
            vars,
            gens: Vec::new(),
        }
    }

    pub fn unit(vars: usize) -> Self {
        MonomialIdeal {
            vars,
            gens: vec![Monomial::one(vars)],
        }
    }

    /// The ideal generated by a single monomial.
    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal {
            vars: m.n_vars(),
            gens: vec![m],
        }
    }

    /// Reduces an arbitrary generating list to the canonical minimal one.
    pub fn minimalize(vars: usize, raw: Vec<Monomial>) -> Result<Self> {
        if let Some(bad) = raw.iter().find(|m| m.n_vars() != vars) {
            return Err(Error::AmbientMismatch {
                left: vars,
                right: bad.n_vars(),
            });
        }
        Ok(MonomialIdeal {
            vars,
            gens: minimal_antichain(raw),
        })
    }

    /// Builds an ideal from generators already known to be a sorted
    /// antichain.
    pub(crate) fn from_sorted_antichain(vars: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.windows(2).all(|w| w[0] < w[1]));
        MonomialIdeal { vars, gens }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Monomial> {
        self.gens
    }

    /// Minimal number of generators.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_ambient(self.vars, other.vars)?;
        let raw = self.gens.iter().chain(&other.gens).cloned().collect();
        MonomialIdeal::minimalize(self.vars, raw)
    }

    /// Sum of a list of ideals over `vars` variables.
    pub fn sum_all<'a, I>(vars: usize, ideals: I) -> Result<MonomialIdeal>
    where
        I: IntoIterator<Item = &'a MonomialIdeal>,
    {
        let mut raw = Vec::new();
        for ideal in ideals {
            check_ambient(vars, ideal.vars)?;
            raw.extend(ideal.gens.iter().cloned());
        }
        MonomialIdeal::minimalize(vars, raw)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_ambient(self.vars, other.vars)?;
        let raw = self
            .gens
            .par_iter()
            .map(|a| {
                other
                    .gens
                    .iter()
                    .map(|b| a.checked_mul(b))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        MonomialIdeal::minimalize(self.vars, raw)
    }

    /// `self^k`; `k = 0` gives the unit ideal.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.vars);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Multiplies every generator by `m`.
    pub fn times_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        check_ambient(self.vars, m.n_vars())?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.checked_mul(m))
            .collect::<Result<Vec<_>>>()?;
        // Multiplying by a fixed monomial preserves order and divisibility.
        Ok(MonomialIdeal {
            vars: self.vars,
            gens,
        })
    }

    /// Intersection via pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_ambient(self.vars, other.vars)?;
        let raw = self
            .gens
            .par_iter()
            .flat_map_iter(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        MonomialIdeal::minimalize(self.vars, raw)
    }

    /// Folds [`MonomialIdeal::intersect`] over a nonempty list, minimalizing after
    /// every step.
    pub fn intersect_all(ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
        let (first, rest) = ideals
            .split_first()
            .ok_or_else(|| Error::InvalidGraph("empty intersection".into()))?;
        rest.iter()
            .try_fold(first.clone(), |acc, next| acc.intersect(next))
    }

    pub fn member(&self, m: &Monomial) -> Result<bool> {
        check_ambient(self.vars, m.n_vars())?;
        let mask = m.support_mask();
        let degree = m.degree();
        Ok(self
            .gens
            .iter()
            .any(|g| g.degree() <= degree && g.support_mask() & !mask == 0 && g.divides(m)))
    }

    /// True when `other ⊆ self`.
    pub fn contains(&self, other: &MonomialIdeal) -> Result<bool> {
        check_ambient(self.vars, other.vars)?;
        for g in &other.gens {
            if !self.member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Generators of `other` that are not in `self`.
    pub fn missing_from(&self, other: &MonomialIdeal) -> Result<Vec<Monomial>> {
        check_ambient(self.vars, other.vars)?;
        let mut out = Vec::new();
        for g in &other.gens {
            if !self.member(g)? {
                out.push(g.clone());
            }
        }
        Ok(out)
    }

    /// Least degree of a minimal generator.
    pub fn alpha(&self) -> Result<u32> {
        self.gens
            .first()
            .map(Monomial::degree)
            .ok_or(Error::ZeroIdeal)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// Generators of `P^m` for the prime `P` generated by `vars`: all
    /// monomials of degree exactly `m` supported on `vars`.
    pub fn prime_power_gens(vars: &[usize], m: u32, ambient: usize) -> Result<MonomialIdeal> {
        if let Some(&bad) = vars.iter().find(|&&v| v >= ambient) {
            return Err(Error::AmbientMismatch {
                left: ambient,
                right: bad + 1,
            });
        }
        let mut sorted = vars.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() {
            return if m == 0 {
                Ok(MonomialIdeal::unit(ambient))
            } else {
                Err(Error::EmptyVariables)
            };
        }
        let mut gens = Vec::new();
        for_each_supported(&sorted, m, &Monomial::one(ambient), &mut |q| gens.push(q));
        gens.sort_unstable();
        Ok(MonomialIdeal {
            vars: ambient,
            gens,
        })
    }

    /// Number of degree-`d` monomials lying in the ideal.
    pub fn graded_count(&self, d: u32) -> u64 {
        if self.gens.is_empty() {
            return 0;
        }
        let all: Vec<usize> = (0..self.vars).collect();
        let mut count = 0u64;
        for_each_supported(&all, d, &Monomial::one(self.vars), &mut |q| {
            if self.gens.iter().any(|g| g.divides(&q)) {
                count += 1;
            }
        });
        count
    }
}

/// Sorts, deduplicates and removes non-minimal elements.
///
/// Monomials of equal degree never strictly divide each other, so the list is
/// processed one degree layer at a time and each layer is only checked against
/// survivors of lower degree.
fn minimal_antichain(mut raw: Vec<Monomial>) -> Vec<Monomial> {
    raw.par_sort_unstable();
    raw.dedup();
    let mut kept: Vec<(u64, Monomial)> = Vec::with_capacity(raw.len());
    let mut start = 0;
    while start < raw.len() {
        let degree = raw[start].degree();
        let end = start + raw[start..].partition_point(|m| m.degree() == degree);
        let lower = &kept;
        let survivors: Vec<(u64, Monomial)> = raw[start..end]
            .par_iter()
            .filter_map(|m| {
                let mask = m.support_mask();
                let divisible = lower
                    .iter()
                    .any(|(gmask, g)| gmask & !mask == 0 && g.divides(m));
                (!divisible).then(|| (mask, m.clone()))
            })
            .collect();
        kept.extend(survivors);
        start = end;
    }
    kept.into_iter().map(|(_, m)| m).collect()
}
