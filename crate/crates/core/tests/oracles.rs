//! Library results against brute-force recomputation over multiplication
//! tables.

mod common;

use common::{corpus, cycles, group, p_groups, small_groups, Set, Table};
use grouplab::group::{Automorphism, FiniteGroup, GroupElement};
use grouplab::identities::{engel_index_of_element, evaluate_lie, is_n_engel_algebra, parse_lie_polynomial};
use grouplab::lie::{
    centralizer_subalgebra, check_cor_2_14, check_prop_2_11, decomposition_witness, induced_action,
    plus_minus_split, subgroup_graded_algebra, GradedLieRing,
};
use grouplab::series::{
    centralizer, commutator_subgroup, derived_series, dimension_series, fitting_height,
    lower_central_series, normal_closure_of, power_subgroup, quotient_group, structure_predicates,
    subgroup_from_indices, Subgroup,
};

fn perm(g: &FiniteGroup, text: &str, degree: usize) -> usize {
    let img = cycles(text, degree).into_iter().map(|x| x as u32).collect();
    g.index_of(&GroupElement::Images(img)).unwrap()
}

fn pc(g: &FiniteGroup, exps: &[u32]) -> usize {
    g.index_of(&GroupElement::Exponents(exps.to_vec())).unwrap()
}

fn as_set(h: &Subgroup) -> Set {
    h.members().to_vec()
}

fn dl(name: &str) -> (&'static FiniteGroup, GradedLieRing) {
    let g = group(name);
    (g, GradedLieRing::build(g, g.p_group_prime().unwrap(), 0).unwrap())
}

#[test]
fn dihedral_pc_model_is_the_permutation_dihedral_group() {
    let g = group("D8");
    let (perm_table, _) = Table::from_perms(&[cycles("(1 2 3 4)", 4), cycles("(2 4)", 4)]);
    assert_eq!(perm_table.n, 8);
    let t = Table::from_group(g);
    assert!(t.isomorphism_to(&perm_table, g.generators()).is_some());
}

#[test]
fn quaternion_pc_model_is_the_permutation_quaternion_group() {
    let g = group("Q8");
    let (perm_table, _) =
        Table::from_perms(&[cycles("(1 3 2 4)(5 8 6 7)", 8), cycles("(1 5 2 6)(3 7 4 8)", 8)]);
    let t = Table::from_group(g);
    assert!(t.isomorphism_to(&perm_table, g.generators()).is_some());
    // a single element of order 2
    assert_eq!((0..8).filter(|&x| t.order_of(x) == 2).count(), 1);
}

#[test]
fn bundled_isomorphisms_respect_products() {
    for (name, src, dst) in [("D8iso", "D8", "D8perm"), ("Q8iso", "Q8", "Q8perm")] {
        let h = corpus().isos[name].as_ref().unwrap();
        let (a, b) = (Table::from_group(group(src)), Table::from_group(group(dst)));
        for x in 0..a.n {
            for y in 0..a.n {
                assert_eq!(h.apply_idx(a.m(x, y)), b.m(h.apply_idx(x), h.apply_idx(y)));
            }
        }
    }
}

#[test]
fn dihedral_element_arithmetic() {
    let g = group("D8");
    let t = Table::from_group(g);
    let (g1, g2, g3) = (pc(g, &[1, 0, 0]), pc(g, &[0, 1, 0]), pc(g, &[0, 0, 1]));
    let x = t.m(g1, g2);
    assert_eq!(g.pow(x, 2), t.m(x, x));
    assert_eq!(t.order_of(t.m(x, x)), 1);
    assert_eq!(g.pow(g2, 2), g3);
    assert_eq!(g.comm(g2, g1), g3);
    assert_eq!(t.comm(g2, g1), g3);
    assert_eq!((g.order_of(g2), g.exponent()), (4, 4));
    assert_eq!(g.engel(g1, g2, 2), g.identity());
    assert_eq!(group("S3").exponent(), Table::from_group(group("S3")).exponent());
    assert_eq!(group("S3").exponent(), 6);
}

#[test]
fn long_commutator_of_transpositions() {
    let g = group("S4");
    let xs = [perm(g, "(1 2)", 4), perm(g, "(2 3)", 4), perm(g, "(3 4)", 4)];
    let t = Table::from_group(g);
    assert_eq!(g.long_comm(&xs).unwrap(), t.comm(t.comm(xs[0], xs[1]), xs[2]));
}

#[test]
fn element_orders_divide_the_group_order() {
    for (_, g) in small_groups() {
        let t = Table::from_group(g);
        for x in 0..g.order() {
            assert_eq!(g.order_of(x), t.order_of(x));
            assert_eq!(g.order() as u64 % g.order_of(x), 0);
        }
        assert_eq!(g.exponent(), t.exponent());
    }
}

#[test]
fn subgroup_constructions() {
    let s3 = group("S3");
    let t = Table::from_group(s3);
    let a3 = subgroup_from_indices(s3, [perm(s3, "(1 2 3)", 3)]);
    assert_eq!((a3.order(), a3.is_normal()), (3, true));
    let whole = Subgroup::whole(s3);
    let d = commutator_subgroup(s3, &whole, &whole).unwrap();
    assert_eq!(as_set(&d), t.commutator(&t.whole(), &t.whole()));
    assert_eq!(as_set(&d), as_set(&a3));

    let s4 = group("S4");
    let t4 = Table::from_group(s4);
    let v = normal_closure_of(s4, &[perm(s4, "(1 2)(3 4)", 4)]);
    assert_eq!(v.order(), 4);
    assert!(v.elements().iter().all(|&x| t4.order_of(x) <= 2));

    let d8 = group("D8");
    let td = Table::from_group(d8);
    let w = Subgroup::whole(d8);
    let dd = commutator_subgroup(d8, &w, &w).unwrap();
    assert_eq!(as_set(&dd), td.closure([pc(d8, &[0, 0, 1])]));
    let sq = power_subgroup(d8, &w, 2).unwrap();
    assert_eq!(as_set(&sq), td.power(&td.whole(), 2));
    assert_eq!(sq.order(), 2);
}

#[test]
fn lower_central_and_derived_series_match_the_oracle() {
    for (name, g) in small_groups() {
        let t = Table::from_group(g);
        let ours: Vec<Set> = lower_central_series(g).terms().iter().map(as_set).collect();
        assert_eq!(ours, t.lower_central(&t.whole()), "{name}");
    }
    assert_eq!(lower_central_series(group("D8")).orders(), vec![8, 2, 1]);
    assert_eq!(derived_series(group("S4")).orders(), vec![24, 12, 4, 1]);
    let d8 = structure_predicates(group("D8"));
    assert_eq!((d8.nilpotency_class, d8.derived_length), (Some(2), Some(2)));
    let s4 = structure_predicates(group("S4"));
    assert_eq!((s4.is_nilpotent, s4.is_solvable, s4.derived_length), (false, true, Some(3)));
}

#[test]
fn dimension_series_match_the_defining_product() {
    for (name, g, p) in p_groups() {
        let t = Table::from_group(g);
        let ours: Vec<Set> = dimension_series(g, p).unwrap().terms().iter().map(as_set).collect();
        assert_eq!(ours, t.dimension_series(p), "{name}");
    }
    assert_eq!(dimension_series(group("D8"), 2).unwrap().orders(), vec![8, 2, 1]);
    assert_eq!(dimension_series(group("C4"), 2).unwrap().orders(), vec![4, 2, 1]);
}

#[test]
fn dimension_quotients_are_elementary_abelian() {
    for (name, g, p) in p_groups() {
        let t = Table::from_group(g);
        let s = t.dimension_series(p);
        for w in s.windows(2) {
            let (di, next) = (Table::members(&w[0]), &w[1]);
            for &x in &di {
                assert!(next[t.pow(x, p)], "{name}");
                assert!(di.iter().all(|&y| next[t.comm(x, y)]), "{name}");
            }
        }
    }
}

#[test]
fn lie_dimensions_are_quotient_logarithms() {
    for (name, g, p) in p_groups() {
        let l = GradedLieRing::build(g, p, 0).unwrap();
        let t = Table::from_group(g);
        let sizes: Vec<usize> = t.dimension_series(p).iter().map(Table::size).collect();
        let dims: Vec<usize> = sizes
            .windows(2)
            .map(|w| {
                let (mut q, mut d) = (w[0] / w[1], 0);
                while q > 1 {
                    q /= p as usize;
                    d += 1;
                }
                d
            })
            .collect();
        assert_eq!(l.component_dims(), dims, "{name}");
    }
}

#[test]
fn quotients() {
    let s4 = group("S4");
    let v = normal_closure_of(s4, &[perm(s4, "(1 2)(3 4)", 4)]);
    let q = quotient_group(s4, &v).unwrap();
    let oracle = Table::from_group(s4).quotient(&as_set(&v));
    assert_eq!((q.group().order(), oracle.n), (6, 6));
    assert!(!q.group().is_abelian());
    assert!((0..6).any(|a| (0..6).any(|b| oracle.m(a, b) != oracle.m(b, a))));
    for x in 0..24 {
        for y in 0..24 {
            assert_eq!(q.project(s4.mul(x, y)), q.group().mul(q.project(x), q.project(y)));
        }
    }
    let d8 = group("D8");
    let z = subgroup_from_indices(d8, [pc(d8, &[0, 0, 1])]);
    let q = quotient_group(d8, &z).unwrap();
    assert_eq!((q.group().order(), q.group().exponent()), (4, 2));
}

#[test]
fn fitting_heights_match_the_quotient_oracle() {
    for (name, g) in small_groups() {
        let preds = structure_predicates(g);
        if !preds.is_solvable {
            continue;
        }
        let h = fitting_height(g).unwrap();
        assert_eq!(h, Table::from_group(g).fitting_height(), "{name}");
        assert_eq!(h == 1, preds.is_nilpotent, "{name}");
    }
    assert_eq!(fitting_height(group("S3")).unwrap(), 2);
    assert_eq!(fitting_height(group("S4")).unwrap(), 3);
    assert_eq!(fitting_height(group("A4")).unwrap(), 2);
}

#[test]
fn powerful_examples() {
    use grouplab::series::is_powerful;
    for (name, g, p) in p_groups() {
        let t = Table::from_group(g);
        let q = if p == 2 { 4 } else { p };
        let oracle = {
            let d = t.commutator(&t.whole(), &t.whole());
            let pw = t.power(&t.whole(), q);
            (0..t.n).all(|x| !d[x] || pw[x])
        };
        assert_eq!(is_powerful(g, p).unwrap(), oracle, "{name}");
    }
    assert!(is_powerful(group("C4"), 2).unwrap());
    assert!(!is_powerful(group("D8"), 2).unwrap());
}

#[test]
fn dihedral_lie_ring() {
    let (g, l) = dl("D8");
    assert_eq!(l.component_dims(), vec![2, 1]);
    let (g1, g2, g3) = (pc(g, &[1, 0, 0]), pc(g, &[0, 1, 0]), pc(g, &[0, 0, 1]));
    let (a, b) = (l.image(g1).unwrap(), l.image(g2).unwrap());
    let c = l.bracket(&a, &b).unwrap();
    assert!(!c.is_zero());
    assert_eq!(c, l.image(g3).unwrap());
    assert_eq!(l.ad_nilpotency_index(&b).unwrap(), Some(2));
    assert_eq!(l.nilpotency_class(), 2);
    assert_eq!(l.lp_subalgebra().dims(), vec![2, 1]);
    let f = parse_lie_polynomial("(br x0 x1)").unwrap();
    assert_eq!(evaluate_lie(&f, &l, &[a.clone(), b.clone()]).unwrap(), c);
    assert!(is_n_engel_algebra(&l, 2, 0).holds);
    assert!(!is_n_engel_algebra(&l, 1, 0).holds);
    let lazard = l.lazard_check(g, g2).unwrap();
    assert!(lazard.passed());
    assert!(lazard.ad_index as u64 <= g.order_of(g2));
}

#[test]
fn quaternion_and_dihedral_rings_agree() {
    let (_, ld) = dl("D8");
    let (_, lq) = dl("Q8");
    assert_eq!(lq.component_dims(), ld.component_dims());
    // both: L_1 two-dimensional with [e0, e1] spanning L_2
    for l in [&ld, &lq] {
        assert_eq!(l.structure_constant(0, 1), &[0, 0, 1]);
        assert!(l.structure_constant(0, 2).iter().all(|&c| c == 0));
        assert!(l.structure_constant(1, 2).iter().all(|&c| c == 0));
    }
}

#[test]
fn heisenberg_ring() {
    let (_, l) = dl("Heis27");
    assert_eq!(l.component_dims(), vec![2, 1]);
    assert_eq!(l.lp_subalgebra().dims(), vec![2, 1]);
    assert_eq!(l.nilpotency_class(), 2);
}

#[test]
fn inner_automorphism_of_dihedral_acts_trivially() {
    let (g, l) = dl("D8");
    let inner = Automorphism::inner(g, pc(g, &[1, 0, 0]));
    let act = induced_action(&inner, g, &l).unwrap();
    assert!(act.is_identity());
    let h = subgroup_from_indices(g, [pc(g, &[0, 1, 0])]);
    assert_eq!(subgroup_graded_algebra(g, &l, &h).unwrap().dims(), vec![1, 1]);
}

#[test]
fn inversion_on_c9() {
    let (g, l) = dl("C9");
    let a = corpus().actions["C9inv"].as_ref().unwrap();
    let phi = &a.generators[0];
    // g1^k -> g1^-k, with g1^3 = g2
    let power_of = |x: usize| (0..9).find(|&k| g.pow(pc(g, &[1, 0]), k) == x).unwrap();
    for x in 0..9 {
        assert_eq!(power_of(phi.apply_idx(x)), (9 - power_of(x) as i64).rem_euclid(9));
    }
    assert_eq!(centralizer(g, std::slice::from_ref(phi)).unwrap().order(), 1);
    let act = induced_action(phi, g, &l).unwrap();
    for d in 1..=l.top_degree() {
        let m = act.matrix(d);
        for i in 0..l.component_dim(d) {
            for j in 0..l.component_dim(d) {
                assert_eq!(m.get(i, j), if i == j { 2 } else { 0 });
            }
        }
    }
    let (fixed, _) = centralizer_subalgebra(&l, std::slice::from_ref(&act)).unwrap();
    assert!(fixed.is_zero());
    let split = plus_minus_split(&l, &act).unwrap();
    assert!(split.plus.is_zero());
    assert_eq!(split.minus.dims(), l.component_dims());
}

#[test]
fn klein_four_on_c3xc3() {
    let g = group("C3xC3");
    let a = corpus().actions["V_C3xC3"].as_ref().unwrap();
    // (x, y) -> (-x, y) and (x, -y) on exponent vectors
    let first = &a.generators[0];
    for x in 0..3 {
        for y in 0..3 {
            let img = first.apply_idx(pc(g, &[x, y]));
            assert_eq!(img, pc(g, &[(3 - x) % 3, y]));
        }
    }
    let orders: Vec<usize> =
        a.nontrivial().iter().map(|phi| centralizer(g, std::slice::from_ref(phi)).unwrap().order()).collect();
    assert_eq!(orders, vec![3, 3, 1]);
    let c = centralizer(g, std::slice::from_ref(first)).unwrap();
    assert_eq!(c.elements(), &[pc(g, &[0, 0]), pc(g, &[0, 1]), pc(g, &[0, 2])]);
}

#[test]
fn inversion_on_first_factor_splits() {
    let (g, l) = dl("C3xC3");
    let a = corpus().actions["C3xC3inv"].as_ref().unwrap();
    let act = induced_action(&a.generators[0], g, &l).unwrap();
    let s = plus_minus_split(&l, &act).unwrap();
    assert_eq!((s.plus.dims(), s.minus.dims()), (vec![1], vec![1]));
    // quotient by the first factor keeps a centralizer of order 3 on both sides
    let n = subgroup_from_indices(g, [pc(g, &[1, 0])]);
    let q = quotient_group(g, &n).unwrap();
    let phi = &a.generators[0];
    let fixed = (0..q.group().order())
        .filter(|&x| q.project(phi.apply_idx(q.representative(x))) == x)
        .count();
    let cga = centralizer(g, std::slice::from_ref(phi)).unwrap();
    let image: std::collections::BTreeSet<usize> = cga.elements().iter().map(|&c| q.project(c)).collect();
    assert_eq!((fixed, image.len()), (3, 3));
}

#[test]
fn decomposition_by_product_sets() {
    for name in ["D8", "Q8", "Heis27", "Ext27", "D16"] {
        let (g, l) = dl(name);
        let t = Table::from_group(g);
        let w = decomposition_witness(g, &l, g.generators()).unwrap();
        let p = g.p_group_prime().unwrap();
        let series = t.dimension_series(p);
        let mut prefix = t.trivial();
        for &(_, rho) in &w.rhos {
            let cyc = Table::members(&t.closure([rho]));
            let mut next = vec![false; t.n];
            for x in Table::members(&prefix) {
                for &c in &cyc {
                    next[t.m(x, c)] = true;
                }
            }
            prefix = next;
        }
        for d in series.iter().skip(1) {
            let mut cover = vec![false; t.n];
            for x in Table::members(&prefix) {
                for y in Table::members(d) {
                    cover[t.m(x, y)] = true;
                }
            }
            assert_eq!(Table::size(&cover), t.n, "{name}");
        }
        assert!(check_prop_2_11(g, &l, &w).unwrap().passed(), "{name}");
        let bound = (w.k_max as u128).pow(w.s() as u32);
        assert!(series.iter().all(|d| (t.n / Table::size(d)) as u128 <= bound), "{name}");
        assert!(check_cor_2_14(g, &l, &w).unwrap().passed(), "{name}");
    }
    let (g, l) = dl("D8");
    let w = decomposition_witness(&g, &l, g.generators()).unwrap();
    let (g1, g2) = (g.generators()[0], g.generators()[1]);
    let rhos: Vec<usize> = w.rhos.iter().map(|r| r.1).collect();
    assert_eq!(rhos, vec![g1, g2, g.comm(g1, g2), g.comm(g2, g1)]);
    assert_eq!((w.class, w.s(), w.k_max, w.bound()), (2, 4, 4, 256));
    assert_eq!(check_cor_2_14(&g, &l, &w).unwrap().indices, vec![1, 4, 8]);
}

fn oracle_engel_index(t: &Table, x: usize) -> Option<usize> {
    let mut best = 0;
    for g in 0..t.n {
        let mut seen = std::collections::BTreeSet::new();
        let mut y = g;
        let mut k = 0;
        while y != t.e {
            if !seen.insert(y) {
                return None;
            }
            y = t.comm(y, x);
            k += 1;
        }
        best = best.max(k);
    }
    Some(best)
}

#[test]
fn engel_indices() {
    let d8 = group("D8");
    assert_eq!(engel_index_of_element(d8, pc(d8, &[0, 1, 0]), 8).unwrap(), Some(2));
    let s3 = group("S3");
    assert_eq!(engel_index_of_element(s3, perm(s3, "(1 2)", 3), 6).unwrap(), None);
    // [g, x, x] = [x^2, x] = 1 for the 3-cycle x, so it is a left 2-Engel element
    assert_eq!(engel_index_of_element(s3, perm(s3, "(1 2 3)", 3), 6).unwrap(), Some(2));
    for (name, g) in small_groups() {
        let t = Table::from_group(g);
        for x in 0..g.order() {
            assert_eq!(engel_index_of_element(g, x, g.order()).unwrap(), oracle_engel_index(&t, x), "{name}");
        }
    }
}

#[test]
fn group_engel_laws_pass_to_the_ring() {
    for (name, g, p) in p_groups().filter(|(_, g, _)| g.order() <= 512) {
        let n = (0..g.order()).map(|x| engel_index_of_element(g, x, g.order()).unwrap().unwrap()).max().unwrap();
        let l = GradedLieRing::build(g, p, 0).unwrap();
        assert!(is_n_engel_algebra(&l, n.max(1), 0).holds, "{name}");
    }
}
