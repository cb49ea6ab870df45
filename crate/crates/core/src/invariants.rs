//! Asymptotic invariants and structure checks.
//!
//! Everything here is exact: degrees are integers and ratios are
//! [`Rational`]s. Values computed from ideals and values taken from closed
//! forms are kept apart and tagged with a [`Provenance`].

use num_integer::binomial;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graphs::FamilyId;
use crate::monomials::{Monomial, MonomialIdeal};
use crate::symbolic::{cycle_product, dmin_clique_sum, Budget, EdgeIdealContext};
use crate::Rational;

/// Where a reported number came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Produced by computing ideals.
    Computed,
    /// A closed-form expression for the family.
    ClosedForm,
    /// Arithmetic on a closed-form least degree, no ideal computation.
    FormulaDerived,
}

pub(crate) fn serialize_rational<S: Serializer>(
    r: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn serialize_opt_rational<S: Serializer>(
    r: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&r.to_string()),
        None => s.serialize_none(),
    }
}

/// Closed-form least degree of `I^(s)`, when known for the family.
///
/// Clique-sum of `C_{2n+1}` and `C_{2m+1}`: `2s - floor(s/(n+1))`.
/// Complete graph `K_n`: `s + ceil(s/(n-1))`.
pub fn alpha_closed_form(family: FamilyId, s: u32) -> Option<u32> {
    match family {
        FamilyId::CliqueSum { n, .. } => Some(2 * s - s / (n as u32 + 1)),
        FamilyId::Complete { n } if n >= 2 => Some(s + s.div_ceil(n as u32 - 1)),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaRow {
    pub s: u32,
    pub computed: u32,
    pub closed_form: Option<u32>,
    pub matches: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaTable {
    pub family: FamilyId,
    pub rows: Vec<AlphaRow>,
    /// First `s` that could not be computed within budget.
    pub truncated_at: Option<u32>,
}

impl AlphaTable {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches != Some(false))
    }
}

/// `α(I^(s))` for `s = 1..=s_max`. Stops at the first symbolic power that
/// exceeds the budget and marks the table truncated.
pub fn alpha_table(ctx: &EdgeIdealContext, s_max: u32, budget: Budget) -> Result<AlphaTable> {
    let family = ctx.family_id();
    let mut rows = Vec::new();
    let mut truncated_at = None;
    for s in 1..=s_max {
        let sym = match ctx.symbolic_power_with_budget(s, budget) {
            Ok(sym) => sym,
            Err(Error::BudgetExceeded(_)) => {
                truncated_at = Some(s);
                break;
            }
            Err(e) => return Err(e),
        };
        let computed = sym.alpha()?;
        let closed_form = alpha_closed_form(family, s);
        rows.push(AlphaRow {
            s,
            computed,
            closed_form,
            matches: closed_form.map(|c| c == computed),
        });
    }
    Ok(AlphaTable {
        family,
        rows,
        truncated_at,
    })
}

/// Closed-form Waldschmidt constant: `(2n+1)/(n+1)` for clique-sums, `n/(n-1)`
/// for `K_n`.
pub fn waldschmidt(family: FamilyId) -> Result<Rational> {
    match family {
        FamilyId::CliqueSum { n, .. } => Ok(Rational::new(2 * n as i64 + 1, n as i64 + 1)),
        FamilyId::Complete { n } if n >= 2 => Ok(Rational::new(n as i64, n as i64 - 1)),
        other => Err(Error::UnsupportedFamily(format!(
            "Waldschmidt closed form ({other})"
        ))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WaldschmidtEstimate {
    pub s: u32,
    #[serde(serialize_with = "serialize_rational")]
    pub ratio: Rational,
}

/// `α(I^(s))/s` for every row of an alpha table.
pub fn waldschmidt_estimate(table: &AlphaTable) -> Vec<WaldschmidtEstimate> {
    table
        .rows
        .iter()
        .map(|r| WaldschmidtEstimate {
            s: r.s,
            ratio: Rational::new(i64::from(r.computed), i64::from(r.s)),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridCell {
    pub s: u32,
    pub t: u32,
    pub contained: bool,
    pub alpha_symbolic: u32,
    /// `α(I^(s)) < α(I^t) = 2t`.
    pub alpha_criterion: bool,
}

/// Supremum of `s/t` over the non-containment pairs predicted by the closed
/// form least degree, using the smallest failing `t` for each `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaSup {
    pub s_limit: u32,
    #[serde(serialize_with = "serialize_rational")]
    pub sup: Rational,
    pub attained_at: (u32, u32),
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResurgenceReport {
    pub family: FamilyId,
    pub s_max: u32,
    pub t_max: u32,
    pub grid: Vec<GridCell>,
    /// Pairs with `s >= t` and `I^(s) ⊄ I^t`.
    pub failures: Vec<(u32, u32)>,
    pub best_pair: Option<(u32, u32)>,
    #[serde(serialize_with = "serialize_opt_rational")]
    pub lower_bound: Option<Rational>,
    #[serde(serialize_with = "serialize_opt_rational")]
    pub closed_form: Option<Rational>,
    pub formula_sup: Option<FormulaSup>,
    /// First `s` whose symbolic power exceeded the budget; rows from there on
    /// are missing.
    pub truncated_at: Option<u32>,
}

impl ResurgenceReport {
    /// Direct containment agrees with the least-degree criterion everywhere on
    /// the grid.
    pub fn alpha_criterion_agrees(&self) -> bool {
        self.grid.iter().all(|c| c.contained != c.alpha_criterion)
    }
}

/// Closed-form resurgence `2(n-1)/n` of `K_n`.
pub fn resurgence_closed_form(family: FamilyId) -> Option<Rational> {
    match family {
        FamilyId::Complete { n } if n >= 2 => Some(Rational::new(2 * (n as i64 - 1), n as i64)),
        _ => None,
    }
}

pub const FORMULA_SUP_LIMIT: u32 = 100_000;

/// Scans `I^(s) ⊆ I^t` over the full grid `1..=s_max × 1..=t_max`.
///
/// Pairs with `s < t` always fail for degree reasons and carry ratio below
/// one, so only pairs with `s >= t` enter the failure list and the lower
/// bound. For complete graphs the formula-derived supremum over
/// `s <= FORMULA_SUP_LIMIT` is attached as well. A budget overrun stops the
/// scan and marks the report truncated.
pub fn resurgence_search(
    ctx: &EdgeIdealContext,
    s_max: u32,
    t_max: u32,
    budget: Budget,
) -> Result<ResurgenceReport> {
    let family = ctx.family_id();
    let mut grid = Vec::new();
    let mut truncated_at = None;
    for s in 1..=s_max {
        let sym = match ctx.symbolic_power_with_budget(s, budget) {
            Ok(sym) => sym,
            Err(Error::BudgetExceeded(_)) => {
                truncated_at = Some(s);
                break;
            }
            Err(e) => return Err(e),
        };
        let alpha_symbolic = sym.alpha()?;
        for t in 1..=t_max {
            let contained = ctx.contained_in_power(&sym, t);
            grid.push(GridCell {
                s,
                t,
                contained,
                alpha_symbolic,
                alpha_criterion: alpha_symbolic < 2 * t,
            });
        }
    }
    let failures: Vec<(u32, u32)> = grid
        .iter()
        .filter(|c| !c.contained && c.s >= c.t)
        .map(|c| (c.s, c.t))
        .collect();
    let best_pair = failures.iter().copied().max_by(|a, b| {
        Rational::new(a.0.into(), a.1.into())
            .cmp(&Rational::new(b.0.into(), b.1.into()))
            .then_with(|| b.cmp(a))
    });
    let closed_form = resurgence_closed_form(family);
    let formula_sup = match family {
        FamilyId::Complete { .. } => Some(formula_resurgence_sup(family, FORMULA_SUP_LIMIT)?),
        _ => None,
    };
    Ok(ResurgenceReport {
        family,
        s_max,
        t_max,
        grid,
        best_pair,
        lower_bound: best_pair.map(|(s, t)| Rational::new(s.into(), t.into())),
        failures,
        closed_form,
        formula_sup,
        truncated_at,
    })
}

/// `sup s/t` over `s <= s_limit` where `α(I^(s)) < 2t`, using the closed form
/// for `α`. The smallest failing `t` for a given `s` is `floor(α/2) + 1`.
pub fn formula_resurgence_sup(family: FamilyId, s_limit: u32) -> Result<FormulaSup> {
    if alpha_closed_form(family, 1).is_none() {
        return Err(Error::UnsupportedFamily(format!(
            "formula resurgence ({family})"
        )));
    }
    let mut best: Option<(Rational, u32, u32)> = None;
    for s in 1..=s_limit {
        let alpha = alpha_closed_form(family, s).expect("checked above");
        let t = alpha / 2 + 1;
        let ratio = Rational::new(s.into(), t.into());
        if best.as_ref().is_none_or(|(r, _, _)| ratio > *r) {
            best = Some((ratio, s, t));
        }
    }
    let (sup, s, t) = best.ok_or(Error::OutOfRange {
        what: "formula resurgence limit",
        detail: "s_limit must be positive".into(),
    })?;
    Ok(FormulaSup {
        s_limit,
        sup,
        attained_at: (s, t),
        provenance: Provenance::FormulaDerived,
    })
}

/// Closed-form symbolic defect, only inside each formula's range.
///
/// * clique-sum, `n < m`: `floor(t/(n+1))` for `1 <= t <= m`, plus one at
///   `t = m+1`;
/// * clique-sum, `n = m`: `Σ_{j=1}^{k} C(t - j(n+1) + 4n+1, 4n+1)(j+1)` with
///   `k = floor(t/(n+1))`;
/// * `K_n`: `C(n, t+1)` for `2 <= t <= n-1`.
pub fn sdefect_closed_form(family: FamilyId, t: u32) -> Result<u64> {
    let range = |detail: String| Error::OutOfRange {
        what: "closed-form symbolic defect",
        detail,
    };
    match family {
        FamilyId::CliqueSum { n, m } if n < m => {
            let (n, m) = (n as u32, m as u32);
            if t >= 1 && t <= m {
                Ok(u64::from(t / (n + 1)))
            } else if t == m + 1 {
                Ok(u64::from(t / (n + 1)) + 1)
            } else {
                Err(range(format!("t = {t} outside 1..={}", m + 1)))
            }
        }
        FamilyId::CliqueSum { n, .. } => {
            if t == 0 {
                return Err(range("t must be positive".into()));
            }
            let n = n as u64;
            let t = u64::from(t);
            let k = t / (n + 1);
            let mut total = 0u64;
            for j in 1..=k {
                let r = t - j * (n + 1);
                total += binomial(r + 4 * n + 1, 4 * n + 1) * (j + 1);
            }
            Ok(total)
        }
        FamilyId::Complete { n } => {
            let n = n as u64;
            let t = u64::from(t);
            if t >= 2 && t < n {
                Ok(binomial(n, t + 1))
            } else {
                Err(range(format!(
                    "t = {t} outside 2..={}",
                    n.saturating_sub(1)
                )))
            }
        }
        other => Err(Error::UnsupportedFamily(format!(
            "closed-form symbolic defect ({other})"
        ))),
    }
}

/// `C(r + 4n + 1, 4n + 1)`, the generator count of `I^r` asserted for the
/// same-length clique-sum.
pub fn same_length_mu_binomial(n: usize, r: u32) -> u64 {
    let k = 4 * n as u64 + 1;
    binomial(u64::from(r) + k, k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuCheck {
    pub r: u32,
    pub direct: usize,
    pub binomial: u64,
    pub matches: bool,
}

/// Compares `μ(I^r)` with the binomial for `r = 0..=r_max` on a same-length
/// clique-sum.
pub fn same_length_mu_check(ctx: &EdgeIdealContext, r_max: u32) -> Result<Vec<MuCheck>> {
    let spec = match ctx.clique_sum() {
        Some(spec) if spec.n == spec.m => spec,
        _ => {
            return Err(Error::UnsupportedFamily(
                "same-length generator count".into(),
            ))
        }
    };
    let mut out = Vec::new();
    let mut power = MonomialIdeal::unit(ctx.n_vars());
    for r in 0..=r_max {
        if r > 0 {
            power = power.product(ctx.edge_ideal())?;
        }
        let binomial = same_length_mu_binomial(spec.n, r);
        out.push(MuCheck {
            r,
            direct: power.mu(),
            binomial,
            matches: power.mu() as u64 == binomial,
        });
    }
    Ok(out)
}

/// Gens in one ideal but not the other, both ways.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealComparison {
    pub equal: bool,
    /// Generators of the left side outside the right side.
    pub only_left: Vec<Monomial>,
    /// Generators of the right side outside the left side.
    pub only_right: Vec<Monomial>,
}

impl IdealComparison {
    pub fn new(left: &MonomialIdeal, right: &MonomialIdeal) -> Result<Self> {
        let only_left = right.missing_from(left)?;
        let only_right = left.missing_from(right)?;
        Ok(IdealComparison {
            equal: left == right,
            only_left,
            only_right,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReesCheck {
    pub family: FamilyId,
    pub s: u32,
    pub lhs_generators: usize,
    pub rhs_generators: usize,
    /// Left side is `I^(s)`, right side the decomposition.
    pub comparison: IdealComparison,
}

/// Builds the known decomposition of `I^(s)` into products of lower-degree
/// pieces and compares it with the computed symbolic power.
///
/// * same-length clique-sum: `Σ_{t<=k} Σ_{p+q=t} I^{s-t(n+1)} c1^p c2^q`;
/// * different lengths: `Σ I^{s-t1(n+1)-t2(m+1)} c1^{t1} (D_min(m+1))^{t2}`;
/// * `K_n`: `Σ I^{r1} (I^(2))^{r2} ... (I^(n-1))^{r_{n-1}}` over
///   `r1 + 2r2 + ... + (n-1)r_{n-1} = s`.
pub fn rees_decomposition(ctx: &EdgeIdealContext, s: u32) -> Result<MonomialIdeal> {
    let vars = ctx.n_vars();
    let mut parts = Vec::new();
    match (ctx.family_id(), ctx.clique_sum()) {
        (FamilyId::CliqueSum { n, m }, Some(spec)) if n == m => {
            let step = n as u32 + 1;
            for t in 0..=s / step {
                for p in 0..=t {
                    parts.push(cycle_product(ctx, spec, s - t * step, p, t - p)?);
                }
            }
        }
        (FamilyId::CliqueSum { n, m }, Some(spec)) => {
            let (a, c) = (n as u32 + 1, m as u32 + 1);
            let dmin = dmin_clique_sum(spec, c)?;
            let mut dmin_power = MonomialIdeal::unit(vars);
            for t2 in 0..=s / c {
                if t2 > 0 {
                    dmin_power = dmin_power.product(&dmin)?;
                }
                for t1 in 0..=(s - t2 * c) / a {
                    let i = s - t1 * a - t2 * c;
                    let left = cycle_product(ctx, spec, i, t1, 0)?;
                    parts.push(left.product(&dmin_power)?);
                }
            }
        }
        (FamilyId::Complete { n }, _) => {
            let top = (n as u32).saturating_sub(1).max(1);
            let pieces = (1..=top.min(s.max(1)))
                .map(|j| ctx.symbolic_power(j))
                .collect::<Result<Vec<_>>>()?;
            let mut counts = vec![0u32; pieces.len()];
            complete_terms(&pieces, s, 0, &mut counts, &mut parts)?;
        }
        (other, _) => {
            return Err(Error::UnsupportedFamily(format!(
                "Rees decomposition ({other})"
            )));
        }
    }
    MonomialIdeal::sum_all(vars, &parts)
}

/// Enumerates `Σ_j (j+1) r_j = s` over the pieces `I^(1), I^(2), ...`.
fn complete_terms(
    pieces: &[MonomialIdeal],
    remaining: u32,
    idx: usize,
    counts: &mut Vec<u32>,
    out: &mut Vec<MonomialIdeal>,
) -> Result<()> {
    if remaining == 0 {
        let vars = pieces[0].vars();
        let mut term = MonomialIdeal::unit(vars);
        for (piece, &k) in pieces.iter().zip(counts.iter()) {
            for _ in 0..k {
                term = term.product(piece)?;
            }
        }
        out.push(term);
        return Ok(());
    }
    if idx == pieces.len() {
        return Ok(());
    }
    let weight = idx as u32 + 1;
    for k in 0..=remaining / weight {
        counts[idx] = k;
        complete_terms(pieces, remaining - k * weight, idx + 1, counts, out)?;
    }
    counts[idx] = 0;
    Ok(())
}

pub fn rees_decomposition_check(ctx: &EdgeIdealContext, s: u32) -> Result<ReesCheck> {
    let rhs = rees_decomposition(ctx, s)?;
    let lhs = ctx.symbolic_power(s)?;
    Ok(ReesCheck {
        family: ctx.family_id(),
        s,
        lhs_generators: lhs.mu(),
        rhs_generators: rhs.mu(),
        comparison: IdealComparison::new(&lhs, &rhs)?,
    })
}

/// `m^{t-1} · I^(t) ⊆ I^t` for a complete graph, `m` the ideal of all
/// variables.
pub fn artinian_check(ctx: &EdgeIdealContext, t: u32) -> Result<bool> {
    if !ctx.graph().is_complete() {
        return Err(Error::UnsupportedFamily(
            "Artinian containment (needs K_n)".into(),
        ));
    }
    if t == 0 {
        return Err(Error::OutOfRange {
            what: "Artinian level",
            detail: "t must be positive".into(),
        });
    }
    let vars: Vec<usize> = (0..ctx.n_vars()).collect();
    let maximal_power = MonomialIdeal::prime_power_gens(&vars, t - 1, ctx.n_vars())?;
    let product = maximal_power.product(&ctx.symbolic_power(t)?)?;
    Ok(ctx.contained_in_power(&product, t))
}

/// The least-degree part of `I(K_n)^(s)` described directly: minimal
/// monomials of degree at most `2s - 1` whose weight on every `(n-1)`-subset
/// of the variables is at least `s`.
pub fn complete_d_description(n: usize, s: u32) -> Result<MonomialIdeal> {
    if n < 2 {
        return Err(Error::InvalidGraph(format!("K_{n} has no edges")));
    }
    let vars: Vec<usize> = (0..n).collect();
    let one = Monomial::one(n);
    let mut found = Vec::new();
    for d in 0..(2 * s) {
        crate::monomials::for_each_supported(&vars, d, &one, &mut |m| {
            let total = m.degree();
            let ok = (0..n).all(|skip| total - u32::from(m.exponent(skip)) >= s);
            if ok {
                found.push(m);
            }
        });
    }
    MonomialIdeal::minimalize(n, found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::FamilyKind;

    fn ctx(kind: FamilyKind) -> EdgeIdealContext {
        EdgeIdealContext::from_kind(&kind).unwrap()
    }

    #[test]
    fn alpha_table_for_triangle() {
        let table = alpha_table(&ctx(FamilyKind::Complete(3)), 4, Budget::default()).unwrap();
        let computed: Vec<u32> = table.rows.iter().map(|r| r.computed).collect();
        assert_eq!(computed, vec![2, 3, 5, 6]);
        assert!(table.all_match());
        assert_eq!(table.truncated_at, None);
    }

    #[test]
    fn alpha_table_truncates_on_budget() {
        let c = ctx(FamilyKind::CliqueSum { n: 2, m: 3 });
        let table = alpha_table(&c, 6, Budget::new(2_000)).unwrap();
        assert!(table.truncated_at.is_some());
        assert!(table.rows.len() < 6);
        assert_eq!(table.rows[0].computed, 2);
    }

    #[test]
    fn clique_sum_alpha_at_three() {
        let c = ctx(FamilyKind::CliqueSum { n: 2, m: 3 });
        let table = alpha_table(&c, 3, Budget::default()).unwrap();
        assert_eq!(table.rows[2].computed, 5);
        assert_eq!(table.rows[2].closed_form, Some(5));
    }

    #[test]
    fn waldschmidt_closed_forms() {
        assert_eq!(
            waldschmidt(FamilyId::CliqueSum { n: 2, m: 3 }).unwrap(),
            Rational::new(5, 3)
        );
        assert_eq!(
            waldschmidt(FamilyId::Complete { n: 3 }).unwrap(),
            Rational::new(3, 2)
        );
        assert!(waldschmidt(FamilyId::Cycle { k: 5 }).is_err());
    }

    #[test]
    fn waldschmidt_estimate_hits_limit_on_multiples() {
        let c = ctx(FamilyKind::Complete(3));
        let table = alpha_table(&c, 4, Budget::default()).unwrap();
        let est = waldschmidt_estimate(&table);
        assert_eq!(est[3].ratio, Rational::new(3, 2));
        assert_eq!(est[1].ratio, Rational::new(3, 2));
        assert_eq!(est[0].ratio, Rational::new(2, 1));
    }

    #[test]
    fn triangle_resurgence_grid() {
        let report =
            resurgence_search(&ctx(FamilyKind::Complete(3)), 8, 8, Budget::default()).unwrap();
        assert_eq!(report.best_pair, Some((6, 5)));
        assert_eq!(report.lower_bound, Some(Rational::new(6, 5)));
        assert_eq!(report.closed_form, Some(Rational::new(4, 3)));
        assert!(report.alpha_criterion_agrees());
        let sup = report.formula_sup.unwrap();
        assert!(sup.sup < Rational::new(4, 3));
    }

    #[test]
    fn bipartite_resurgence_has_no_failures() {
        let report =
            resurgence_search(&ctx(FamilyKind::Cycle(6)), 4, 4, Budget::default()).unwrap();
        assert!(report.failures.is_empty());
        assert_eq!(report.lower_bound, None);
        assert!(report.formula_sup.is_none());
    }

    #[test]
    fn sdefect_formulas() {
        assert_eq!(
            sdefect_closed_form(FamilyId::CliqueSum { n: 2, m: 3 }, 4).unwrap(),
            2
        );
        assert_eq!(
            sdefect_closed_form(FamilyId::CliqueSum { n: 2, m: 3 }, 3).unwrap(),
            1
        );
        assert!(sdefect_closed_form(FamilyId::CliqueSum { n: 2, m: 3 }, 5).is_err());
        assert_eq!(
            sdefect_closed_form(FamilyId::Complete { n: 4 }, 2).unwrap(),
            4
        );
        assert!(sdefect_closed_form(FamilyId::Complete { n: 4 }, 4).is_err());
        assert!(sdefect_closed_form(FamilyId::Complete { n: 4 }, 1).is_err());
        assert_eq!(
            sdefect_closed_form(FamilyId::CliqueSum { n: 2, m: 2 }, 4).unwrap(),
            20
        );
        assert_eq!(
            sdefect_closed_form(FamilyId::CliqueSum { n: 2, m: 2 }, 3).unwrap(),
            2
        );
        assert!(sdefect_closed_form(FamilyId::Cycle { k: 5 }, 2).is_err());
    }

    #[test]
    fn same_length_generator_counts() {
        let c = ctx(FamilyKind::CliqueSum { n: 2, m: 2 });
        let checks = same_length_mu_check(&c, 3).unwrap();
        assert!(checks.iter().all(|c| c.matches));
        assert_eq!(checks[1].direct, 10);
        assert!(same_length_mu_check(&ctx(FamilyKind::CliqueSum { n: 1, m: 2 }), 1).is_err());
    }

    #[test]
    fn rees_checks_at_low_levels() {
        for kind in [
            FamilyKind::CliqueSum { n: 2, m: 2 },
            FamilyKind::CliqueSum { n: 1, m: 2 },
            FamilyKind::Complete(4),
        ] {
            let c = ctx(kind.clone());
            for s in 1..=4 {
                let check = rees_decomposition_check(&c, s).unwrap();
                assert!(
                    check.comparison.equal,
                    "{kind:?} s={s}: {:?}",
                    check.comparison
                );
            }
        }
        assert!(rees_decomposition_check(&ctx(FamilyKind::Cycle(5)), 2).is_err());
    }

    #[test]
    fn artinian_examples() {
        let k3 = ctx(FamilyKind::Complete(3));
        assert!(artinian_check(&k3, 1).unwrap());
        assert!(artinian_check(&k3, 2).unwrap());
        assert!(artinian_check(&ctx(FamilyKind::Complete(4)), 3).unwrap());
        assert!(artinian_check(&ctx(FamilyKind::Cycle(5)), 2).is_err());
    }

    #[test]
    fn k4_d_description_matches_split() {
        let c = ctx(FamilyKind::Complete(4));
        for s in 2..=3 {
            let split = c.split_ld(s).unwrap();
            assert_eq!(complete_d_description(4, s).unwrap(), split.d_ideal(4));
        }
        // s = 2 on K4: the four triangles, C(4,3).
        assert_eq!(complete_d_description(4, 2).unwrap().mu(), 4);
    }
}
