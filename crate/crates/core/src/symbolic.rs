//! Symbolic powers of edge ideals.
//!
//! For an edge ideal `I = I(G)` with minimal vertex covers `V_1, ..., V_r`,
//! `I^(t) = P_1^t ∩ ... ∩ P_r^t`, and a monomial lies in `I^(t)` exactly when
//! its weight on every minimal cover is at least `t`. Ordinary powers are
//! handled through optimal factorizations: `m ∈ I^t` iff at least `t` edges
//! can be split off `m` simultaneously.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{
    build_family, iter_bits, minimal_vertex_covers, BuiltFamily, CliqueSumSpec, CoverSet, FamilyId,
    FamilyKind, SimpleGraph,
};
use crate::monomials::{for_each_supported, Monomial, MonomialIdeal};

/// Cap on the number of candidate generators held at once while building a
/// symbolic power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_candidates: usize,
}

impl Budget {
    pub const DEFAULT_CANDIDATES: usize = 5_000_000;

    pub fn new(max_candidates: usize) -> Self {
        Budget { max_candidates }
    }

    pub fn unlimited() -> Self {
        Budget {
            max_candidates: usize::MAX,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Budget::DEFAULT_CANDIDATES)
    }
}

/// Sum of the exponents of `m` over the vertices in `cover`.
pub fn vertex_weight(cover: &[usize], m: &Monomial) -> u32 {
    cover.iter().map(|&v| u32::from(m.exponent(v))).sum()
}

fn mask_weight(mask: u64, m: &Monomial) -> u32 {
    iter_bits(mask).map(|v| u32::from(m.exponent(v))).sum()
}

/// Graph, covers and edge ideal, computed once.
#[derive(Clone, Debug)]
pub struct EdgeIdealContext {
    family: BuiltFamily,
    covers: CoverSet,
    cover_masks: Vec<u64>,
    edge_ideal: MonomialIdeal,
}

impl EdgeIdealContext {
    /// Requires at least one edge.
    pub fn new(family: BuiltFamily) -> Result<Self> {
        let graph = &family.graph;
        if graph.edges().is_empty() {
            return Err(Error::InvalidGraph(
                "edge ideal of an edgeless graph".into(),
            ));
        }
        let n = graph.n_vertices();
        let covers = minimal_vertex_covers(graph);
        let cover_masks = covers.masks();
        let edge_ideal = MonomialIdeal::minimalize(
            n,
            graph
                .edges()
                .iter()
                .map(|&(u, v)| Monomial::squarefree(&[u, v], n))
                .collect(),
        )?;
        Ok(EdgeIdealContext {
            family,
            covers,
            cover_masks,
            edge_ideal,
        })
    }

    pub fn from_kind(kind: &FamilyKind) -> Result<Self> {
        EdgeIdealContext::new(build_family(kind)?)
    }

    pub fn from_graph(graph: SimpleGraph) -> Result<Self> {
        EdgeIdealContext::new(BuiltFamily::from_graph(graph))
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.family.graph
    }

    pub fn family(&self) -> &BuiltFamily {
        &self.family
    }

    pub fn family_id(&self) -> FamilyId {
        self.family.id
    }

    pub fn clique_sum(&self) -> Option<&CliqueSumSpec> {
        self.family.clique_sum.as_ref()
    }

    pub fn labels(&self) -> &[String] {
        &self.family.labels
    }

    pub fn covers(&self) -> &CoverSet {
        &self.covers
    }

    pub fn edge_ideal(&self) -> &MonomialIdeal {
        &self.edge_ideal
    }

    pub fn n_vars(&self) -> usize {
        self.family.graph.n_vertices()
    }

    pub fn parse_monomial(&self, literal: &str) -> Result<Monomial> {
        Monomial::parse_literal(literal, self.labels())
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        m.to_literal(self.labels())
    }

    /// True iff `m` has weight at least `t` on every minimal vertex cover.
    pub fn symbolic_member(&self, m: &Monomial, t: u32) -> bool {
        self.cover_masks.iter().all(|&c| mask_weight(c, m) >= t)
    }

    /// Minimal generators of `I^(t)`; `t = 0` gives the unit ideal.
    pub fn symbolic_power(&self, t: u32) -> Result<MonomialIdeal> {
        self.symbolic_power_with_budget(t, Budget::default())
    }

    /// Folds `∩ P_j^t` one cover at a time.
    ///
    /// After intersecting with the first `k` covers, a generator `g` of the
    /// running ideal with deficit `d = t - w_V(g) > 0` on the next cover `V`
    /// is replaced by `g·q` for all degree-`d` monomials `q` supported on `V`.
    /// A candidate `h` of the new intersection is a minimal generator iff
    /// every variable of `h` lies in some cover (among the first `k + 1`) on
    /// which `h` has weight exactly `t`; otherwise dividing by that variable
    /// stays inside the intersection.
    pub fn symbolic_power_with_budget(&self, t: u32, budget: Budget) -> Result<MonomialIdeal> {
        let n = self.n_vars();
        if t == 0 {
            return Ok(MonomialIdeal::unit(n));
        }
        let mut current = vec![Monomial::one(n)];
        for (k, &cover) in self.cover_masks.iter().enumerate() {
            let cover_vars: Vec<usize> = iter_bits(cover).collect();
            let mut produced = 0usize;
            for g in &current {
                let deficit = t.saturating_sub(mask_weight(cover, g));
                produced = produced.saturating_add(stars_and_bars(cover_vars.len(), deficit));
            }
            if produced > budget.max_candidates {
                return Err(Error::BudgetExceeded(format!(
                    "symbolic power t={t}: {produced} candidates at cover {} of {}, budget {}",
                    k + 1,
                    self.cover_masks.len(),
                    budget.max_candidates
                )));
            }
            let mut candidates: Vec<Monomial> = current
                .par_iter()
                .flat_map_iter(|g| {
                    let deficit = t.saturating_sub(mask_weight(cover, g));
                    let mut out = Vec::new();
                    if deficit == 0 {
                        out.push(g.clone());
                    } else {
                        for_each_supported(&cover_vars, deficit, g, &mut |h| out.push(h));
                    }
                    out
                })
                .collect();
            candidates.par_sort_unstable();
            candidates.dedup();
            let seen = &self.cover_masks[..=k];
            current = candidates
                .into_par_iter()
                .filter(|h| is_tight_minimal(seen, h, t))
                .collect();
        }
        Ok(MonomialIdeal::from_sorted_antichain(n, current))
    }

    /// Splits the generators of `I^(t)` at degree `2t`.
    pub fn split_ld(&self, t: u32) -> Result<LdSplit> {
        let gens = self.symbolic_power(t)?.into_gens();
        let (d_gens, l_gens): (Vec<_>, Vec<_>) = gens.into_iter().partition(|g| g.degree() < 2 * t);
        Ok(LdSplit { t, l_gens, d_gens })
    }

    /// Maximum number of edges that can be split off `m` at once, with a
    /// witness.
    pub fn b_value(&self, m: &Monomial) -> OptimalFactorization {
        optimal_factorization(self.graph(), m)
    }

    /// `m ∈ I^t`, decided through `b(m) >= t`.
    pub fn power_member(&self, m: &Monomial, t: u32) -> bool {
        if t == 0 {
            return true;
        }
        if m.degree() < 2 * t {
            return false;
        }
        self.b_value(m).b >= t
    }

    /// Number of minimal generators of `I^(t)` outside `I^t`, which is the
    /// minimal number of generators of `I^(t)/I^t` for monomial ideals.
    pub fn sdefect(&self, t: u32) -> Result<usize> {
        Ok(self.sdefect_generators(t)?.len())
    }

    /// The minimal generators of `I^(t)` that are not in `I^t`.
    pub fn sdefect_generators(&self, t: u32) -> Result<Vec<Monomial>> {
        let sym = self.symbolic_power(t)?;
        Ok(sym
            .into_gens()
            .into_par_iter()
            .filter(|g| !self.power_member(g, t))
            .collect())
    }

    /// `I^(s) ⊆ I^t`.
    pub fn containment(&self, s: u32, t: u32) -> Result<bool> {
        let sym = self.symbolic_power(s)?;
        Ok(self.contained_in_power(&sym, t))
    }

    /// Whether every generator of `ideal` lies in `I^t`.
    pub fn contained_in_power(&self, ideal: &MonomialIdeal, t: u32) -> bool {
        ideal.gens().par_iter().all(|g| self.power_member(g, t))
    }

    /// `I^k`, computed once per call.
    pub fn ordinary_power(&self, k: u32) -> Result<MonomialIdeal> {
        self.edge_ideal.power(k)
    }
}

/// `h` is minimal in `∩_{V ∈ covers} P_V^t` (given that it lies in it) iff its
/// support is covered by the covers on which it is tight.
fn is_tight_minimal(covers: &[u64], h: &Monomial, t: u32) -> bool {
    let tight = covers
        .iter()
        .filter(|&&c| mask_weight(c, h) == t)
        .fold(0u64, |acc, &c| acc | c);
    h.support_mask() & !tight == 0
}

/// Number of monomials of degree `d` in `k` variables.
fn stars_and_bars(k: usize, d: u32) -> usize {
    if d == 0 {
        return 1;
    }
    let mut acc: u128 = 1;
    for i in 1..=u128::from(d) {
        acc = acc * (k as u128 - 1 + i) / i;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// Generators of `I^(t)` on either side of the degree `2t` threshold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LdSplit {
    pub t: u32,
    /// Degree at least `2t`.
    pub l_gens: Vec<Monomial>,
    /// Degree below `2t`.
    pub d_gens: Vec<Monomial>,
}

impl LdSplit {
    pub fn d_ideal(&self, vars: usize) -> MonomialIdeal {
        MonomialIdeal::from_sorted_antichain(vars, self.d_gens.clone())
    }
}

/// `m = (ancillary) · Π e^{mult}` with the edge count `b` as large as
/// possible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OptimalFactorization {
    pub b: u32,
    pub edges: Vec<((usize, usize), u32)>,
    pub ancillary: Monomial,
}

impl OptimalFactorization {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> Monomial {
        let mut exps = self.ancillary.exponents().to_vec();
        for &((u, v), k) in &self.edges {
            exps[u] += k as u16;
            exps[v] += k as u16;
        }
        Monomial::new(exps)
    }
}

/// Exact maximum edge packing by branch and bound.
///
/// Edges whose endpoints both occur in `m` are tried in order of decreasing
/// combined exponent (ties by edge order), multiplicities from high to low.
/// A node is cut when the current count plus half the usable remaining
/// degree cannot beat the incumbent.
pub fn optimal_factorization(g: &SimpleGraph, m: &Monomial) -> OptimalFactorization {
    let residual: Vec<u16> = m.exponents().to_vec();
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| residual[u] > 0 && residual[v] > 0)
        .collect();
    edges.sort_by_key(|&(u, v)| std::cmp::Reverse(u32::from(residual[u]) + u32::from(residual[v])));

    let ceiling = m.degree() / 2;
    let mut search = PackingSearch {
        edges: &edges,
        residual,
        chosen: vec![0; edges.len()],
        best: 0,
        best_choice: vec![0; edges.len()],
        ceiling,
        scratch: vec![0; m.n_vars()],
    };
    search.run(0, 0);

    let mut ancillary = m.exponents().to_vec();
    let mut used = Vec::new();
    for (&(u, v), &k) in edges.iter().zip(&search.best_choice) {
        if k > 0 {
            ancillary[u] -= k;
            ancillary[v] -= k;
            used.push(((u, v), u32::from(k)));
        }
    }
    used.sort_unstable();
    OptimalFactorization {
        b: search.best,
        edges: used,
        ancillary: Monomial::new(ancillary),
    }
}

struct PackingSearch<'a> {
    edges: &'a [(usize, usize)],
    residual: Vec<u16>,
    chosen: Vec<u16>,
    best: u32,
    best_choice: Vec<u16>,
    ceiling: u32,
    scratch: Vec<u32>,
}

impl PackingSearch<'_> {
    /// Returns true once the degree ceiling is reached.
    fn run(&mut self, idx: usize, current: u32) -> bool {
        if current > self.best {
            self.best = current;
            self.best_choice.copy_from_slice(&self.chosen);
            if self.best == self.ceiling {
                return true;
            }
        }
        if idx == self.edges.len() || current + self.bound(idx) <= self.best {
            return false;
        }
        let (u, v) = self.edges[idx];
        let most = self.residual[u].min(self.residual[v]);
        for k in (0..=most).rev() {
            self.residual[u] -= k;
            self.residual[v] -= k;
            self.chosen[idx] = k;
            let done = self.run(idx + 1, current + u32::from(k));
            self.residual[u] += k;
            self.residual[v] += k;
            self.chosen[idx] = 0;
            if done {
                return true;
            }
        }
        false
    }

    /// Half the exponent mass still usable by edges `idx..`.
    fn bound(&mut self, idx: usize) -> u32 {
        self.scratch.iter_mut().for_each(|s| *s = 0);
        for &(u, v) in &self.edges[idx..] {
            let cap = u32::from(self.residual[u].min(self.residual[v]));
            self.scratch[u] += cap;
            self.scratch[v] += cap;
        }
        let mass: u32 = self
            .scratch
            .iter()
            .zip(&self.residual)
            .map(|(&s, &r)| s.min(u32::from(r)))
            .sum();
        mass / 2
    }
}

/// `(i, s, b)` with `i + (n+1)s + (m+1)b = t` and `i < t`.
pub fn dmin_exponents(spec: &CliqueSumSpec, t: u32) -> Vec<(u32, u32, u32)> {
    let (a, c) = (spec.n as u32 + 1, spec.m as u32 + 1);
    let mut out = Vec::new();
    for b in 0..=t / c {
        for s in 0..=(t - b * c) / a {
            let i = t - b * c - s * a;
            if i < t {
                out.push((i, s, b));
            }
        }
    }
    out
}

/// Ideal generated by `I^i c1^s c2^b` over the `D_min` index set, for
/// `n+1 <= t <= m+1`.
pub fn dmin_clique_sum(spec: &CliqueSumSpec, t: u32) -> Result<MonomialIdeal> {
    let (lo, hi) = (spec.n as u32 + 1, spec.m as u32 + 1);
    if t < lo || t > hi {
        return Err(Error::OutOfRange {
            what: "D_min level",
            detail: format!("t = {t} outside {lo}..={hi}"),
        });
    }
    let ctx = EdgeIdealContext::from_kind(&FamilyKind::CliqueSum {
        n: spec.n,
        m: spec.m,
    })?;
    let parts = dmin_exponents(spec, t)
        .into_iter()
        .map(|(i, s, b)| cycle_product(&ctx, spec, i, s, b))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::sum_all(ctx.n_vars(), &parts)
}

/// `I^i · c1^s · c2^b`.
pub fn cycle_product(
    ctx: &EdgeIdealContext,
    spec: &CliqueSumSpec,
    i: u32,
    s: u32,
    b: u32,
) -> Result<MonomialIdeal> {
    let factor = spec
        .c1()
        .checked_pow(s)?
        .checked_mul(&spec.c2().checked_pow(b)?)?;
    ctx.ordinary_power(i)?.times_monomial(&factor)
}

/// Ideal generated by `I^i c1^s c2^b` over all `(i, s, b)` with
/// `i + (n+1)s + (m+1)b >= t` and `2i + (2n+1)s + (2m+1)b <= 2t - 1`.
pub fn d_product_form(ctx: &EdgeIdealContext, t: u32) -> Result<MonomialIdeal> {
    let spec = ctx
        .clique_sum()
        .ok_or_else(|| Error::UnsupportedFamily("D(t) product form".into()))?;
    let (n, m) = (spec.n as u32, spec.m as u32);
    let ceiling = (2 * t).saturating_sub(1);
    let mut parts = Vec::new();
    for b in 0..=ceiling / (2 * m + 1) {
        for s in 0..=(ceiling - b * (2 * m + 1)) / (2 * n + 1) {
            let left = ceiling - b * (2 * m + 1) - s * (2 * n + 1);
            for i in 0..=left / 2 {
                if i + (n + 1) * s + (m + 1) * b >= t {
                    parts.push(cycle_product(ctx, spec, i, s, b)?);
                }
            }
        }
    }
    MonomialIdeal::sum_all(ctx.n_vars(), &parts)
}
