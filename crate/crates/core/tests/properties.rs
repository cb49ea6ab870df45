use edgesym::{EdgeIdealContext, FamilyKind, Monomial, MonomialIdeal, SimpleGraph};
use proptest::prelude::*;

fn arb_monomial(n: usize, max_exp: u16) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

fn arb_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(arb_monomial(n, 3), 1..6)
        .prop_map(move |gens| MonomialIdeal::minimalize(n, gens).unwrap())
}

/// Random graph on 3..=7 vertices with at least one edge.
fn arb_graph() -> impl Strategy<Value = SimpleGraph> {
    (3usize..=7).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let k = pairs.len();
        prop::collection::vec(any::<bool>(), k).prop_filter_map("needs an edge", move |keep| {
            let edges: Vec<_> = pairs
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&e, _)| e)
                .collect();
            if edges.is_empty() {
                None
            } else {
                Some(SimpleGraph::new(n, &edges).unwrap())
            }
        })
    })
}

fn graph_and_monomial() -> impl Strategy<Value = (SimpleGraph, Monomial)> {
    arb_graph().prop_flat_map(|g| {
        let n = g.n_vertices();
        (Just(g), arb_monomial(n, 3))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn minimalize_is_idempotent(ideal in arb_ideal(4)) {
        let again = MonomialIdeal::minimalize(4, ideal.gens().to_vec()).unwrap();
        prop_assert_eq!(&again, &ideal);
        for (i, a) in ideal.gens().iter().enumerate() {
            for (j, b) in ideal.gens().iter().enumerate() {
                prop_assert!(i == j || !a.divides(b));
            }
        }
    }

    #[test]
    fn intersection_is_membership_conjunction(
        a in arb_ideal(4),
        b in arb_ideal(4),
        m in arb_monomial(4, 5),
    ) {
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(meet.member(&m).unwrap(), a.member(&m).unwrap() && b.member(&m).unwrap());
    }

    #[test]
    fn sum_is_membership_disjunction(
        a in arb_ideal(4),
        b in arb_ideal(4),
        m in arb_monomial(4, 5),
    ) {
        let join = a.sum(&b).unwrap();
        prop_assert_eq!(join.member(&m).unwrap(), a.member(&m).unwrap() || b.member(&m).unwrap());
    }

    #[test]
    fn product_contains_exactly_products(a in arb_ideal(3), b in arb_ideal(3), m in arb_monomial(3, 6)) {
        let prod = a.product(&b).unwrap();
        let split = a.gens().iter().any(|g| {
            m.quotient(g).is_some_and(|q| b.member(&q).unwrap())
        });
        prop_assert_eq!(prod.member(&m).unwrap(), split);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn ordinary_powers_add(ideal in arb_ideal(3), a in 0u32..3, b in 0u32..3) {
        let lhs = ideal.power(a).unwrap().product(&ideal.power(b).unwrap()).unwrap();
        prop_assert_eq!(lhs, ideal.power(a + b).unwrap());
    }

    #[test]
    fn covers_are_minimal_covers(g in arb_graph()) {
        let ctx = EdgeIdealContext::from_graph(g.clone()).unwrap();
        for mask in ctx.covers().masks() {
            prop_assert!(g.is_cover(mask));
            for v in 0..g.n_vertices() {
                if mask >> v & 1 == 1 {
                    prop_assert!(!g.is_cover(mask & !(1 << v)));
                }
            }
        }
    }

    #[test]
    fn symbolic_powers_nest(g in arb_graph(), t in 1u32..=3) {
        let ctx = EdgeIdealContext::from_graph(g).unwrap();
        let sym = ctx.symbolic_power(t).unwrap();
        let next = ctx.symbolic_power(t + 1).unwrap();
        prop_assert!(sym.contains(&next).unwrap());
        prop_assert!(sym.contains(&ctx.ordinary_power(t).unwrap()).unwrap());
        let first = ctx.symbolic_power(1).unwrap();
        prop_assert!(next.contains(&first.product(&sym).unwrap()).unwrap());
    }

    #[test]
    fn weight_membership_matches_generators((g, m) in graph_and_monomial(), t in 1u32..=3) {
        let ctx = EdgeIdealContext::from_graph(g).unwrap();
        let sym = ctx.symbolic_power(t).unwrap();
        prop_assert_eq!(ctx.symbolic_member(&m, t), sym.member(&m).unwrap());
    }

    #[test]
    fn packing_membership_matches_powers((g, m) in graph_and_monomial(), t in 1u32..=4) {
        let ctx = EdgeIdealContext::from_graph(g).unwrap();
        let power = ctx.ordinary_power(t).unwrap();
        prop_assert_eq!(ctx.power_member(&m, t), power.member(&m).unwrap());
    }

    #[test]
    fn factorization_reassembles((g, m) in graph_and_monomial()) {
        let ctx = EdgeIdealContext::from_graph(g).unwrap();
        let f = ctx.b_value(&m);
        prop_assert_eq!(f.product(), m.clone());
        prop_assert!(2 * f.b <= m.degree());
        let summed: u32 = f.edges.iter().map(|&(_, k)| k).sum();
        prop_assert_eq!(summed, f.b);
    }
}

/// The monomial `x_{p_0} e_0^{b_0} ... e_{L-1}^{b_{L-1}}` along `path`.
fn path_monomial(path: &[usize], mults: &[u32], n: usize) -> Monomial {
    let mut exps = vec![0u16; n];
    exps[path[0]] += 1;
    for (k, &b) in mults.iter().enumerate() {
        exps[path[k]] += b as u16;
        exps[path[k + 1]] += b as u16;
    }
    Monomial::new(exps)
}

/// Extending a path monomial by its far endpoint raises `b` exactly when the
/// path has an even number of vertices and every alternating edge is used.
/// Only paths whose endpoints are not adjacent, so no closing edge helps.
fn check_extension(ctx: &EdgeIdealContext, path: &[usize], mults: &[u32]) -> Result<(), String> {
    let n = ctx.n_vars();
    let len = mults.len();
    let m = path_monomial(path, mults, n);
    let base: u32 = mults.iter().sum();
    if ctx.b_value(&m).b != base {
        return Err(format!("b(m) != {base} for {path:?} {mults:?}"));
    }
    let extended = m.checked_mul(&Monomial::var(path[len], n)).unwrap();
    let gains = ctx.b_value(&extended).b == base + 1;
    let predicted = len % 2 == 1 && (1..len).step_by(2).all(|k| mults[k] >= 1);
    if gains != predicted {
        return Err(format!(
            "path {path:?} mults {mults:?}: gains {gains}, predicted {predicted}"
        ));
    }
    Ok(())
}

fn cycle_paths(cycle: &[usize]) -> Vec<Vec<usize>> {
    let k = cycle.len();
    let mut out = Vec::new();
    for start in 0..k {
        for len in 1..=k - 2 {
            out.push((0..=len).map(|d| cycle[(start + d) % k]).collect());
        }
    }
    out
}

fn for_each_mults(len: usize, total: u32, f: &mut dyn FnMut(&[u32])) {
    fn rec(acc: &mut Vec<u32>, len: usize, left: u32, f: &mut dyn FnMut(&[u32])) {
        if acc.len() == len {
            f(acc);
            return;
        }
        for b in 0..=left {
            acc.push(b);
            rec(acc, len, left - b, f);
            acc.pop();
        }
    }
    rec(&mut Vec::new(), len, total, f);
}

#[test]
fn non_optimal_extension_on_clique_sum_cycles() {
    let ctx = EdgeIdealContext::from_kind(&FamilyKind::CliqueSum { n: 2, m: 3 }).unwrap();
    let spec = ctx.clique_sum().unwrap().clone();
    let mut checked = 0;
    for cycle in [spec.first_cycle(), spec.second_cycle()] {
        for path in cycle_paths(&cycle) {
            for_each_mults(path.len() - 1, 4, &mut |mults| {
                check_extension(&ctx, &path, mults).unwrap();
                checked += 1;
            });
        }
    }
    assert!(checked > 1000, "only {checked} cases");
}

#[test]
fn symbolic_power_ignores_thread_count() {
    let ctx = EdgeIdealContext::from_kind(&FamilyKind::CliqueSum { n: 2, m: 3 }).unwrap();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let serial = pool.install(|| ctx.symbolic_power(4).unwrap());
    let parallel = ctx.symbolic_power(4).unwrap();
    assert_eq!(serial, parallel);
    assert_eq!(
        serde_json::to_string(&serial).unwrap(),
        serde_json::to_string(&parallel).unwrap()
    );
}
