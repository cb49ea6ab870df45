use edgesym::invariants::{
    alpha_table, rees_decomposition_check, same_length_mu_check, sdefect_closed_form, waldschmidt,
    waldschmidt_estimate,
};
use edgesym::{Budget, EdgeIdealContext, FamilyKind, MonomialIdeal, Rational};

fn ctx(kind: FamilyKind) -> EdgeIdealContext {
    EdgeIdealContext::from_kind(&kind).unwrap()
}

const FAMILIES: [FamilyKind; 6] = [
    FamilyKind::CliqueSum { n: 1, m: 1 },
    FamilyKind::CliqueSum { n: 1, m: 2 },
    FamilyKind::CliqueSum { n: 1, m: 3 },
    FamilyKind::CliqueSum { n: 2, m: 2 },
    FamilyKind::Complete(3),
    FamilyKind::Complete(4),
];

#[test]
fn alpha_closed_forms_hold_across_families() {
    for kind in FAMILIES {
        let table = alpha_table(&ctx(kind.clone()), 6, Budget::default()).unwrap();
        assert_eq!(table.truncated_at, None, "{kind:?}");
        assert!(table.all_match(), "{kind:?}: {:?}", table.rows);
    }
}

#[test]
fn estimates_bound_waldschmidt_from_above() {
    for kind in FAMILIES {
        let c = ctx(kind.clone());
        let limit = waldschmidt(c.family_id()).unwrap();
        let period = match kind {
            FamilyKind::CliqueSum { n, .. } => n as u32 + 1,
            FamilyKind::Complete(n) => n as u32 - 1,
            _ => unreachable!(),
        };
        let table = alpha_table(&c, 6, Budget::default()).unwrap();
        for e in waldschmidt_estimate(&table) {
            assert!(e.ratio >= limit, "{kind:?} s={}", e.s);
            assert_eq!(e.ratio == limit, e.s % period == 0, "{kind:?} s={}", e.s);
        }
    }
}

#[test]
fn rees_decompositions_hold_across_families() {
    for kind in FAMILIES {
        let c = ctx(kind.clone());
        for s in 1..=5 {
            let check = rees_decomposition_check(&c, s).unwrap();
            assert!(check.comparison.equal, "{kind:?} s={s}");
            assert_eq!(check.lhs_generators, check.rhs_generators);
        }
    }
}

/// `sdefect` through pairwise-lcm intersection and generator products only.
fn independent_defect(c: &EdgeIdealContext, t: u32) -> usize {
    let primes: Vec<MonomialIdeal> = c
        .covers()
        .covers()
        .iter()
        .map(|v| MonomialIdeal::prime_power_gens(v, t, c.n_vars()).unwrap())
        .collect();
    let symbolic = MonomialIdeal::intersect_all(&primes).unwrap();
    c.edge_ideal()
        .power(t)
        .unwrap()
        .missing_from(&symbolic)
        .unwrap()
        .len()
}

#[test]
fn defect_formula_holds_up_to_first_threshold() {
    for (n, m) in [(1, 2), (1, 3), (2, 3), (2, 4)] {
        let c = ctx(FamilyKind::CliqueSum { n, m });
        for t in 1..=n as u32 + 1 {
            let closed = sdefect_closed_form(c.family_id(), t).unwrap();
            assert_eq!(c.sdefect(t).unwrap() as u64, closed, "({n},{m}) t={t}");
        }
    }
}

#[test]
fn defect_formula_undercounts_past_threshold() {
    // At t = n + 2 <= m, D(t) contains I * c1, one generator per edge.
    for (n, m) in [(1, 3), (2, 4)] {
        let c = ctx(FamilyKind::CliqueSum { n, m });
        let t = n as u32 + 2;
        let direct = independent_defect(&c, t);
        assert_eq!(direct, c.sdefect(t).unwrap());
        assert_eq!(direct, c.edge_ideal().mu());
        assert_eq!(sdefect_closed_form(c.family_id(), t).unwrap(), 1);
    }
    // At t = m + 1 with m = n + 1: I * c1 plus c2.
    let c = ctx(FamilyKind::CliqueSum { n: 1, m: 2 });
    assert_eq!(independent_defect(&c, 3), c.edge_ideal().mu() + 1);
    assert_eq!(sdefect_closed_form(c.family_id(), 3).unwrap(), 2);
}

#[test]
fn same_length_formula_and_its_exceptions() {
    let c = ctx(FamilyKind::CliqueSum { n: 1, m: 1 });
    assert_eq!(c.sdefect(2).unwrap(), 2);
    assert_eq!(sdefect_closed_form(c.family_id(), 2).unwrap(), 2);
    // c1 * e = c2 * e' for the edges opposite x1: one relation.
    assert_eq!(independent_defect(&c, 3), 11);
    assert_eq!(sdefect_closed_form(c.family_id(), 3).unwrap(), 12);

    let c = ctx(FamilyKind::CliqueSum { n: 2, m: 2 });
    let mu = same_length_mu_check(&c, 5).unwrap();
    let flags: Vec<bool> = mu.iter().map(|m| m.matches).collect();
    assert_eq!(flags, [true, true, true, true, true, false]);
    assert_eq!((mu[5].direct, mu[5].binomial), (2001, 2002));
}

#[test]
fn complete_defect_formula_only_at_two() {
    for n in [4usize, 5] {
        let c = ctx(FamilyKind::Complete(n));
        let closed = sdefect_closed_form(c.family_id(), 2).unwrap();
        assert_eq!(c.sdefect(2).unwrap() as u64, closed);
        let direct = independent_defect(&c, 3);
        assert_eq!(direct, c.sdefect(3).unwrap());
        assert!(direct as u64 > sdefect_closed_form(c.family_id(), 3).unwrap());
    }
}

#[test]
fn triangle_waldschmidt_estimate_at_four() {
    let table = alpha_table(&ctx(FamilyKind::Complete(3)), 4, Budget::default()).unwrap();
    assert_eq!(waldschmidt_estimate(&table)[3].ratio, Rational::new(3, 2));
}
