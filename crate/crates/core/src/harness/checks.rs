//! The check catalog. Every check maps one fixture entry to an [`Outcome`].

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::group::{Automorphism, FiniteGroup};
use crate::identities::{
    engel_index_of_element, group_satisfies_with_budget, higman_polynomial, holds_identity,
    parse_group_word, parse_lie_polynomial, IdentityMode,
};
use crate::lie::{
    centralizer_subalgebra, check_cor_2_14, check_prop_2_11, decomposition_witness,
    induced_action, plus_minus_split, subgroup_graded_algebra, GradedLieRing,
};
use crate::series::{
    centralizer, dimension_series, fitting_series, is_nilpotent_subgroup, is_powerful, join,
    lower_central_series, normal_closure_of, power_subgroup, product_set, quotient_group,
    structure_predicates, subgroup_from_indices, verify_np_series, NormalSeries, NpViolation,
    Subgroup,
};
use crate::util::{lcm, prime_divisors, prime_power};

use super::fixture::{ActionFixture, BuiltFixture};
use super::{RunOptions, Status};

pub(crate) struct Outcome {
    pub status: Status,
    pub details: Map<String, Value>,
}

impl Outcome {
    fn new(status: Status, details: Value) -> Self {
        let details = match details {
            Value::Object(m) => m,
            other => {
                let mut m = Map::new();
                m.insert("value".into(), other);
                m
            }
        };
        Self { status, details }
    }

    fn pass(details: Value) -> Self {
        Self::new(Status::Pass, details)
    }

    fn fail(witness: impl Into<Value>, details: Value) -> Self {
        let mut o = Self::new(Status::Fail, details);
        o.details.insert("witness".into(), witness.into());
        o
    }

    fn skipped(reason: impl Into<String>, details: Value) -> Self {
        let mut o = Self::new(Status::Skipped, details);
        o.details.insert("reason".into(), Value::String(reason.into()));
        o
    }

    fn verdict(ok: bool, witness: impl Into<Value>, details: Value) -> Self {
        if ok {
            Self::pass(details)
        } else {
            Self::fail(witness, details)
        }
    }
}

/// Errors that mean "hypothesis not met" rather than "defect found".
pub(crate) fn is_skip(e: &Error) -> bool {
    matches!(
        e,
        Error::HypothesisNotMet(_)
            | Error::NotAPGroup { .. }
            | Error::OutOfBudget(_)
            | Error::NotSolvable
            | Error::EvenCharacteristic
            | Error::NotInvolution
    )
}

pub(crate) struct Params<'a>(pub &'a [(String, String)]);

impl Params<'_> {
    fn raw(&self, key: &str) -> Option<&str> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn num<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>> {
        self.raw(key)
            .map(|v| v.parse().map_err(|_| Error::MalformedSpec(format!("parameter {key}={v} is not a number"))))
            .transpose()
    }

    fn allow(&self, keys: &[&str]) -> Result<()> {
        match self.0.iter().find(|(k, _)| !keys.contains(&k.as_str())) {
            Some((k, _)) => Err(Error::MalformedSpec(format!("unknown parameter `{k}`"))),
            None => Ok(()),
        }
    }
}

pub(crate) struct Ctx<'a> {
    pub built: &'a BuiltFixture,
    pub opts: &'a RunOptions,
    pub algebras: HashMap<String, OnceLock<std::result::Result<GradedLieRing, String>>>,
}

impl<'a> Ctx<'a> {
    pub fn new(built: &'a BuiltFixture, opts: &'a RunOptions) -> Self {
        let algebras = built.groups.keys().map(|k| (k.clone(), OnceLock::new())).collect();
        Self { built, opts, algebras }
    }

    fn group(&self, name: &str) -> Result<&'a FiniteGroup> {
        self.built.group(name)
    }

    fn p_group(&self, name: &str) -> Result<(&'a FiniteGroup, u64)> {
        let g = self.group(name)?;
        match g.p_group_prime() {
            Some(p) => Ok((g, p)),
            None => Err(Error::NotAPGroup { order: g.order(), p: smallest_prime(g) }),
        }
    }

    fn algebra(&self, name: &str) -> Result<(&'a FiniteGroup, &GradedLieRing)> {
        let (g, p) = self.p_group(name)?;
        let cell = self.algebras.get(name).expect("algebra slot per group");
        let l = cell.get_or_init(|| GradedLieRing::build(g, p, self.opts.seed).map_err(|e| e.to_string()));
        l.as_ref().map(|l| (g, l)).map_err(|e| Error::MalformedSpec(e.clone()))
    }

    fn action(&self, name: &str) -> Result<(&'a FiniteGroup, &'a ActionFixture)> {
        match self.built.actions.get(name) {
            Some(Ok(a)) => Ok((self.group(&a.group)?, a)),
            Some(Err(e)) => Err(Error::MalformedSpec(format!("action `{name}` failed to build: {e}"))),
            None => Err(Error::MalformedSpec(format!("no action `{name}`"))),
        }
    }
}

fn smallest_prime(g: &FiniteGroup) -> u64 {
    g.p_group_prime().or_else(|| prime_divisors(g.order() as u64).first().copied()).unwrap_or(2)
}

fn exponent_of(g: &FiniteGroup, h: &Subgroup) -> u64 {
    h.elements().iter().fold(1, |acc, &x| lcm(acc, g.order_of(x)))
}

fn gamma(g: &FiniteGroup, lcs: &NormalSeries, k: usize) -> Subgroup {
    lcs.term(k.max(1)).or_else(|| lcs.terms().last()).cloned().unwrap_or_else(|| Subgroup::trivial(g))
}

fn show(g: &FiniteGroup, xs: &[usize]) -> Value {
    Value::Array(xs.iter().map(|&x| Value::String(g.display(x))).collect())
}

/// `(value, witness tuple)` for every left-normed commutator of weight `k`.
fn commutator_values(g: &FiniteGroup, k: usize) -> Vec<(usize, Vec<usize>)> {
    let mut layer: Vec<Option<Vec<usize>>> = (0..g.order()).map(|x| Some(vec![x])).collect();
    for _ in 1..k {
        let mut next: Vec<Option<Vec<usize>>> = vec![None; g.order()];
        for (c, w) in layer.iter().enumerate() {
            let Some(w) = w else { continue };
            for y in 0..g.order() {
                let v = g.comm(c, y);
                if next[v].is_none() {
                    let mut t = w.clone();
                    t.push(y);
                    next[v] = Some(t);
                }
            }
        }
        layer = next;
    }
    layer.into_iter().enumerate().filter_map(|(v, w)| w.map(|w| (v, w))).collect()
}

pub(crate) fn run(ctx: &Ctx, check: &str, target: &str, params: &Params) -> Result<Outcome> {
    match check {
        "axioms" => axioms(ctx, target, params),
        "np_series" => np_series(ctx, target, params),
        "lazard" => lazard(ctx, target, params),
        "jacobi" => jacobi(ctx, target, params),
        "higman" => higman(ctx, target, params),
        "prop_2_11" | "cor_2_14" => decomposition(ctx, check, target, params),
        "collection" => collection(ctx, target, params),
        "lemma_3_3" => lemma_3_3(ctx, target, params),
        "lemma_3_4" => lemma_3_4(ctx, target, params),
        "c4_1" | "c4_2" => generation(ctx, check, target, params),
        "c4_6" => c4_6(ctx, target, params),
        "c4_12" => c4_12(ctx, target, params),
        "t4_3" => t4_3(ctx, target, params),
        "t4_4" => t4_4(ctx, target, params),
        "pm_split" => pm_split(ctx, target, params),
        "obs_4_8" => obs_4_8(ctx, target, params),
        "fitting" => fitting(ctx, target, params),
        "powerful" => powerful(ctx, target, params),
        "iso" => iso(ctx, target, params),
        "lie_identity" => lie_identity(ctx, target, params),
        "word_law" => word_law(ctx, target, params),
        other => Err(Error::UnknownCheck { name: other.into(), catalog: super::CATALOG.join(", ") }),
    }
}

/// Group axioms and the commutator identities `[x,y]^-1 = [y,x]`,
/// `[xy,z] = [x,z][x,z,y][y,z]`, `[x,yz] = [x,z][x,y][x,y,z]` and Hall-Witt.
fn axioms(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&[])?;
    let g = ctx.group(target)?;
    let n = g.order();
    let e = g.identity();
    for x in 0..n {
        if g.mul(x, e) != x || g.mul(e, x) != x {
            return Ok(Outcome::fail(show(g, &[x]), json!({"law": "identity"})));
        }
        if g.mul(x, g.inv(x)) != e {
            return Ok(Outcome::fail(show(g, &[x]), json!({"law": "inverse"})));
        }
    }
    let law = |x: usize, y: usize, z: usize| -> Option<&'static str> {
        if g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)) {
            return Some("associativity");
        }
        if g.inv(g.comm(x, y)) != g.comm(y, x) {
            return Some("[x,y]^-1 = [y,x]");
        }
        let lc = |a: &[usize]| g.long_comm(a).expect("nonempty");
        let lhs = g.comm(g.mul(x, y), z);
        if lhs != g.mul(g.mul(g.comm(x, z), lc(&[x, z, y])), g.comm(y, z)) {
            return Some("[xy,z] = [x,z][x,z,y][y,z]");
        }
        let lhs = g.comm(x, g.mul(y, z));
        if lhs != g.mul(g.mul(g.comm(x, z), g.comm(x, y)), lc(&[x, y, z])) {
            return Some("[x,yz] = [x,z][x,y][x,y,z]");
        }
        let a = g.conj(lc(&[x, g.inv(y), z]), y);
        let b = g.conj(lc(&[y, g.inv(z), x]), z);
        let c = g.conj(lc(&[z, g.inv(x), y]), x);
        if g.mul(g.mul(a, b), c) != e {
            return Some("Hall-Witt");
        }
        None
    };
    let exhaustive = n <= ctx.opts.build.exhaustive_limit;
    let bad = if exhaustive {
        (0..n).into_par_iter().find_map_first(|x| {
            (0..n).find_map(|y| (0..n).find_map(|z| law(x, y, z).map(|l| (l, [x, y, z]))))
        })
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.opts.seed);
        (0..ctx.opts.build.sampled_triples).find_map(|_| {
            let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            law(x, y, z).map(|l| (l, [x, y, z]))
        })
    };
    let triples = if exhaustive { (n as u64).pow(3) } else { ctx.opts.build.sampled_triples as u64 };
    Ok(match bad {
        Some((l, t)) => Outcome::fail(show(g, &t), json!({"law": l})),
        None if exhaustive => Outcome::pass(json!({"order": n, "triples": triples, "mode": "exhaustive"})),
        None => Outcome::new(Status::SampledPass, json!({"order": n, "triples": triples, "mode": "sampled"})),
    })
}

fn np_series(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&["series"])?;
    let (g, p) = ctx.p_group(target)?;
    let (kind, s) = match params.raw("series").unwrap_or("dimension") {
        "dimension" => ("dimension", dimension_series(g, p)?),
        "lower_central" => ("lower_central", lower_central_series(g)),
        other => return Err(Error::MalformedSpec(format!("unknown series `{other}`"))),
    };
    let v = verify_np_series(g, &s, p)?;
    let details = json!({"series": kind, "p": p, "orders": s.orders()});
    Ok(match v.violation {
        None => Outcome::pass(details),
        Some(NpViolation::Commutator { i, j, witness }) => {
            Outcome::fail(json!({"family": "commutator", "i": i, "j": j, "element": g.display(witness)}), details)
        }
        Some(NpViolation::Power { i, witness }) => {
            Outcome::fail(json!({"family": "power", "i": i, "element": g.display(witness)}), details)
        }
    })
}

fn lazard(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&[])?;
    let (g, l) = ctx.algebra(target)?;
    let mut checked = 0;
    let mut max_index = 0;
    for x in 1..g.order() {
        let v = l.lazard_check(g, x)?;
        checked += 1;
        max_index = max_index.max(v.ad_index);
        if !v.passed() {
            return Ok(Outcome::fail(
                json!({"element": g.display(x), "degree": v.degree, "power_matches": v.power_matches,
                       "ad_index": v.ad_index, "order": v.element_order}),
                json!({"checked": checked}),
            ));
        }
    }
    Ok(Outcome::pass(json!({"elements": checked, "max_ad_index": max_index, "dims": l.component_dims()})))
}

fn jacobi(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&[])?;
    let (g, l) = ctx.algebra(target)?;
    let r = l.check_axioms(g);
    let details = json!({"dims": l.component_dims(), "dim": l.dim(), "class": l.nilpotency_class()});
    let witness = json!({
        "alternating": r.alternating, "jacobi": r.jacobi, "grading": r.grading,
        "bilinearity": r.bilinearity, "dimension_total": r.dimension_total,
    });
    Ok(Outcome::verdict(r.passed(), witness, details))
}

fn higman(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&["n"])?;
    let (g, l) = ctx.algebra(target)?;
    let n = params.num::<usize>("n")?.unwrap_or(g.exponent() as usize);
    if n < 2 {
        return Err(Error::HypothesisNotMet("exponent 1".into()));
    }
    let f = higman_polynomial(n)?;
    let v = holds_identity(&f, l)?;
    let details = json!({"n": n, "monomials": f.terms().len(), "tuples": v.tuples_checked,
                         "mode": if v.mode == IdentityMode::Basis { "basis" } else { "exhaustive" }});
    let witness = v
        .counterexample
        .map(|c| json!(c.iter().map(|u| u.coords().to_vec()).collect::<Vec<_>>()))
        .unwrap_or(Value::Null);
    Ok(Outcome::verdict(v.holds, witness, details))
}

fn decomposition(ctx: &Ctx, check: &str, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&[])?;
    let (g, l) = ctx.algebra(target)?;
    let w = decomposition_witness(g, l, g.generators())?;
    let rhos: Vec<String> = w.rhos.iter().map(|&(_, x)| g.display(x)).collect();
    let mut details = json!({"class": w.class, "s": w.s(), "K": w.k_max, "rho": rhos});
    if check == "prop_2_11" {
        let v = check_prop_2_11(g, l, &w)?;
        details["covered"] = json!(v.covered);
        Ok(Outcome::verdict(v.passed(), json!({"i": v.failure}), details))
    } else {
        let v = check_cor_2_14(g, l, &w)?;
        details["bound"] = json!(v.bound.to_string());
        details["indices"] = json!(v.indices);
        Ok(Outcome::verdict(v.passed(), json!({"i": v.failure}), details))
    }
}

fn default_prime(g: &FiniteGroup, params: &Params) -> Result<u64> {
    let p = params.num::<u64>("p")?.unwrap_or_else(|| smallest_prime(g));
    if !crate::util::is_prime(p) {
        return Err(Error::MalformedSpec(format!("p = {p} is not prime")));
    }
    Ok(p)
}

/// `(xy)^{p^n} = x^{p^n} y^{p^n}` modulo `gamma_2^{p^n} prod gamma_{p^r}^{p^{n-r}}`.
fn collection(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&["p", "n"])?;
    let g = ctx.group(target)?;
    let p = default_prime(g, params)?;
    let n = params.num::<u32>("n")?.unwrap_or(1);
    let q = p.checked_pow(n).filter(|&q| q <= 1 << 20).ok_or_else(|| Error::OutOfBudget(format!("{p}^{n}")))?;
    let lcs = lower_central_series(g);
    let mut modulus = power_subgroup(g, &gamma(g, &lcs, 2), q)?;
    for r in 1..=n {
        let term = gamma(g, &lcs, p.pow(r) as usize);
        modulus = join(g, &modulus, &power_subgroup(g, &term, p.pow(n - r))?);
    }
    let q = q as i64;
    let bad = (0..g.order()).into_par_iter().find_map_first(|x| {
        (0..g.order()).find_map(|y| {
            let lhs = g.pow(g.mul(x, y), q);
            let rhs = g.mul(g.pow(x, q), g.pow(y, q));
            (!modulus.contains(g.mul(lhs, g.inv(rhs)))).then_some([x, y])
        })
    });
    let details = json!({"p": p, "n": n, "modulus_order": modulus.order()});
    Ok(match bad {
        Some(w) => Outcome::fail(show(g, &w), details),
        None => Outcome::pass(details),
    })
}

fn lemma_3_3(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&["k", "p"])?;
    let g = ctx.group(target)?;
    let k = params.num::<usize>("k")?.unwrap_or(2).max(1);
    let p = default_prime(g, params)?;
    let is_p_element = |x: usize| g.order_of(x) == 1 || prime_power(g.order_of(x)).is_some_and(|(q, _)| q == p);
    let values = commutator_values(g, k);
    if let Some((v, w)) = values.iter().find(|(v, _)| !is_p_element(*v)) {
        return Ok(Outcome::skipped(
            format!("hypothesis not met: a {k}-commutator is not a {p}-element"),
            json!({"k": k, "p": p, "witness": show(g, w), "value": g.display(*v), "order": g.order_of(*v)}),
        ));
    }
    let lcs = lower_central_series(g);
    let gk = gamma(g, &lcs, k);
    let ok = gk.order() == 1 || prime_power(gk.order() as u64).is_some_and(|(q, _)| q == p);
    Ok(Outcome::verdict(ok, json!({"gamma_k_order": gk.order()}), json!({"k": k, "p": p, "gamma_k_order": gk.order()})))
}

fn lemma_3_4(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&["k"])?;
    let g = ctx.group(target)?;
    let k = params.num::<usize>("k")?.unwrap_or(2).max(1);
    let values = commutator_values(g, k);
    for (v, w) in &values {
        if engel_index_of_element(g, *v, g.order())?.is_none() {
            return Ok(Outcome::skipped(
                format!("hypothesis not met: a {k}-commutator is not an Engel element"),
                json!({"k": k, "witness": show(g, w), "value": g.display(*v)}),
            ));
        }
    }
    let gk = gamma(g, &lower_central_series(g), k);
    let ok = is_nilpotent_subgroup(g, &gk);
    Ok(Outcome::verdict(ok, json!({"gamma_k_order": gk.order()}), json!({"k": k, "gamma_k_order": gk.order()})))
}

fn require_coprime(a: &ActionFixture) -> Result<()> {
    if a.coprime {
        Ok(())
    } else {
        Err(Error::HypothesisNotMet(format!("|A| = {} is not coprime to |G|", a.order())))
    }
}

fn require_q_squared(a: &ActionFixture) -> Result<u64> {
    a.noncyclic_q_squared().ok_or_else(|| {
        Error::HypothesisNotMet(format!("A of order {} is not noncyclic of order q^2", a.order()))
    })
}

fn generation(ctx: &Ctx, check: &str, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&[])?;
    let (g, a) = ctx.action(target)?;
    require_coprime(a)?;
    let q = require_q_squared(a)?;
    let cents: Vec<Subgroup> = a.nontrivial().iter().map(|x| centralizer(g, std::slice::from_ref(x))).collect::<Result<_>>()?;
    let orders: Vec<usize> = cents.iter().map(Subgroup::order).collect();
    if check == "c4_1" {
        let h = subgroup_from_indices(g, cents.iter().flat_map(|c| c.elements().iter().copied()));
        let details = json!({"q": q, "centralizer_orders": orders, "generated_order": h.order()});
        return Ok(Outcome::verdict(h.order() == g.order(), json!({"generated_order": h.order()}), details));
    }
    if g.p_group_prime().is_none() && g.order() > 1 {
        return Err(Error::NotAPGroup { order: g.order(), p: smallest_prime(g) });
    }
    let mut set = vec![false; g.order()];
    set[g.identity()] = true;
    for c in &cents {
        set = product_set(g, &set, c.elements());
    }
    let size = set.iter().filter(|&&b| b).count();
    let details = json!({"q": q, "centralizer_orders": orders, "product_size": size});
    Ok(Outcome::verdict(size == g.order(), json!({"product_size": size}), details))
}

fn c4_6(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&[])?;
    let (g, a) = ctx.action(target)?;
    require_coprime(a)?;
    let mut seen = BTreeSet::new();
    let mut family = vec![Subgroup::trivial(g), Subgroup::whole(g)];
    family.extend((0..g.order()).map(|x| normal_closure_of(g, &[x])));
    family.retain(|n| seen.insert(n.members().to_vec()));
    let invariant: Vec<&Subgroup> = family
        .iter()
        .filter(|n| a.generators.iter().all(|phi| n.elements().iter().all(|&x| n.contains(phi.apply_idx(x)))))
        .collect();
    let cga = centralizer(g, &a.generators)?;
    for n in &invariant {
        let quo = quotient_group(g, n)?;
        let qg = quo.group();
        let induced = |phi: &Automorphism, x: usize| quo.project(phi.apply_idx(quo.representative(x)));
        let lhs: BTreeSet<usize> =
            (0..qg.order()).filter(|&x| a.generators.iter().all(|phi| induced(phi, x) == x)).collect();
        let rhs: BTreeSet<usize> = cga.elements().iter().map(|&c| quo.project(c)).collect();
        if lhs != rhs {
            return Ok(Outcome::fail(
                json!({"normal_subgroup_order": n.order(), "fixed_in_quotient": lhs.len(), "image_of_centralizer": rhs.len()}),
                json!({"candidates": family.len(), "invariant": invariant.len()}),
            ));
        }
    }
    Ok(Outcome::pass(json!({"candidates": family.len(), "invariant": invariant.len(), "centralizer_order": cga.order()})))
}

fn require_odd_involutions<'a>(g: &FiniteGroup, a: &'a ActionFixture) -> Result<Vec<&'a Automorphism>> {
    if g.order() % 2 == 0 {
        return Err(Error::HypothesisNotMet("|G| is even".into()));
    }
    let inv = a.involutions();
    if inv.is_empty() {
        return Err(Error::HypothesisNotMet("A contains no involution".into()));
    }
    Ok(inv)
}

fn c4_12(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&[])?;
    let (g, a) = ctx.action(target)?;
    let mut per = Vec::new();
    for (k, phi) in require_odd_involutions(g, a)?.into_iter().enumerate() {
        let inverted: Vec<usize> = (0..g.order()).filter(|&x| phi.apply_idx(x) == g.inv(x)).collect();
        let cent = centralizer(g, std::slice::from_ref(phi))?;
        let mut counts = vec![0u32; g.order()];
        for &x in &inverted {
            for &h in cent.elements() {
                counts[g.mul(x, h)] += 1;
            }
        }
        if let Some(x) = counts.iter().position(|&c| c != 1) {
            return Ok(Outcome::fail(
                json!({"involution": k, "element": g.display(x), "decompositions": counts[x]}),
                json!({"inverted": inverted.len(), "centralizer_order": cent.order()}),
            ));
        }
        let commutators: BTreeSet<usize> = (0..g.order()).map(|y| g.mul(g.inv(y), phi.apply_idx(y))).collect();
        let inverted_set: BTreeSet<usize> = inverted.iter().copied().collect();
        if commutators != inverted_set {
            let x = commutators.symmetric_difference(&inverted_set).next().copied().unwrap();
            return Ok(Outcome::fail(
                json!({"involution": k, "element": g.display(x), "clause": "x^a = x^-1 iff x = [y,a]"}),
                json!({"inverted": inverted.len()}),
            ));
        }
        per.push(json!({"inverted": inverted.len(), "centralizer_order": cent.order()}));
    }
    Ok(Outcome::pass(json!({"involutions": per})))
}

fn divides_or_skip(n: u64, observed: u64, what: &str) -> Result<()> {
    if n % observed == 0 {
        Ok(())
    } else {
        Err(Error::HypothesisNotMet(format!("{what} {observed} does not divide n = {n}")))
    }
}

fn t4_3(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&["n"])?;
    let (g, a) = ctx.action(target)?;
    require_coprime(a)?;
    let q = require_q_squared(a)?;
    let exps: Vec<u64> = a
        .nontrivial()
        .iter()
        .map(|phi| centralizer(g, std::slice::from_ref(phi)).map(|c| exponent_of(g, &c)))
        .collect::<Result<_>>()?;
    let n = params.num::<u64>("n")?.unwrap_or_else(|| exps.iter().fold(1, |acc, &e| lcm(acc, e)));
    for &e in &exps {
        divides_or_skip(n, e, "centralizer exponent")?;
    }
    Ok(Outcome::pass(json!({"q": q, "n": n, "centralizer_exponents": exps, "exponent": g.exponent()})))
}

fn t4_4(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&["n"])?;
    let (g, a) = ctx.action(target)?;
    let mut records = Vec::new();
    for phi in require_odd_involutions(g, a)? {
        let cent = centralizer(g, std::slice::from_ref(phi))?;
        let ce = exponent_of(g, &cent);
        let ke = (0..g.order()).fold(1, |acc, x| lcm(acc, g.order_of(g.mul(g.inv(x), phi.apply_idx(x)))));
        let n = params.num::<u64>("n")?.unwrap_or(lcm(ce, ke));
        divides_or_skip(n, ce, "centralizer exponent")?;
        divides_or_skip(n, ke, "order of some [x,a]")?;
        records.push(json!({"n": n, "centralizer_exponent": ce, "commutator_exponent": ke}));
    }
    Ok(Outcome::pass(json!({"exponent": g.exponent(), "involutions": records})))
}

fn pm_split(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&[])?;
    let (g, a) = ctx.action(target)?;
    let (_, l) = ctx.algebra(&a.group)?;
    if l.prime() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    let invs = a.involutions();
    if invs.is_empty() {
        return Err(Error::HypothesisNotMet("A contains no involution".into()));
    }
    let mut per = Vec::new();
    for (k, phi) in invs.into_iter().enumerate() {
        let act = induced_action(phi, g, l)?;
        let s = plus_minus_split(l, &act)?;
        let rec = json!({"plus": s.plus.dims(), "minus": s.minus.dims()});
        if !s.passed() {
            return Ok(Outcome::fail(
                json!({"involution": k, "direct_sum": s.direct_sum, "containments": s.containments}),
                rec,
            ));
        }
        per.push(rec);
    }
    Ok(Outcome::pass(json!({"involutions": per})))
}

/// `L_p(G, C_G(A)) = C_{L_p(G)}(A)`.
fn obs_4_8(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&[])?;
    let (g, a) = ctx.action(target)?;
    require_coprime(a)?;
    let (_, l) = ctx.algebra(&a.group)?;
    let lp = l.lp_subalgebra();
    let cga = centralizer(g, &a.generators)?;
    let left = lp.intersect(&subgroup_graded_algebra(g, l, &cga)?);
    let actions = a.generators.iter().map(|phi| induced_action(phi, g, l)).collect::<Result<Vec<_>>>()?;
    let (fixed, closed) = centralizer_subalgebra(l, &actions)?;
    let right = lp.intersect(&fixed);
    let details = json!({"from_group": left.dims(), "from_action": right.dims(), "fixed_closed": closed});
    Ok(Outcome::verdict(left == right && closed, json!({"from_group": left.dims(), "from_action": right.dims()}), details))
}

fn fitting(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&["expect"])?;
    let g = ctx.group(target)?;
    let s = fitting_series(g)?;
    let height = s.len() - 1;
    let preds = structure_predicates(g);
    let expected_by_nilpotency = if g.order() == 1 { 0 } else if preds.is_nilpotent { 1 } else { height.max(2) };
    let details = json!({"height": height, "exponent": g.exponent(), "order": g.order(), "series_orders": s.orders()});
    if height != expected_by_nilpotency {
        return Ok(Outcome::fail(json!({"height": height, "nilpotent": preds.is_nilpotent}), details));
    }
    if let Some(e) = params.num::<usize>("expect")? {
        if e != height {
            return Ok(Outcome::fail(json!({"expected": e, "height": height}), details));
        }
    }
    Ok(Outcome::pass(details))
}

fn powerful(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&["expect"])?;
    let (g, p) = ctx.p_group(target)?;
    let v = is_powerful(g, p)?;
    let details = json!({"p": p, "powerful": v});
    match params.raw("expect") {
        None => Ok(Outcome::pass(details)),
        Some(e) => {
            let want: bool = e.parse().map_err(|_| Error::MalformedSpec(format!("expect={e}")))?;
            Ok(Outcome::verdict(want == v, json!({"expected": want, "powerful": v}), details))
        }
    }
}

fn iso(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&[])?;
    let decl = ctx.built.file.isos.iter().find(|i| i.name == target).ok_or_else(|| Error::MalformedSpec(format!("no iso `{target}`")))?;
    let src = ctx.group(&decl.source)?;
    let dst = ctx.group(&decl.target)?;
    let h = match &ctx.built.isos[target] {
        Ok(h) => h,
        Err(e) => return Ok(Outcome::fail(e.clone(), json!({"source": decl.source, "target": decl.target}))),
    };
    let details = json!({"source": decl.source, "target": decl.target, "order": src.order(), "products": src.order() * src.order()});
    if src.order() != dst.order() || !h.is_bijective() {
        return Ok(Outcome::fail("not a bijection", details));
    }
    for x in 0..src.order() {
        for y in 0..src.order() {
            if h.apply_idx(src.mul(x, y)) != dst.mul(h.apply_idx(x), h.apply_idx(y)) {
                return Ok(Outcome::fail(show(src, &[x, y]), details));
            }
        }
        if src.order_of(x) != dst.order_of(h.apply_idx(x)) {
            return Ok(Outcome::fail(show(src, &[x]), details));
        }
    }
    Ok(Outcome::pass(details))
}

fn expectation(params: &Params) -> Result<bool> {
    match params.raw("expect").unwrap_or("holds") {
        "holds" => Ok(true),
        "fails" => Ok(false),
        other => Err(Error::MalformedSpec(format!("expect must be `holds` or `fails`, got `{other}`"))),
    }
}

fn lie_identity(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&["poly", "expect"])?;
    let text = params.raw("poly").ok_or_else(|| Error::MalformedSpec("missing poly=".into()))?;
    let f = parse_lie_polynomial(text)?;
    let want = expectation(params)?;
    let (_, l) = ctx.algebra(target)?;
    let v = holds_identity(&f, l)?;
    let details = json!({"poly": f.to_string(), "holds": v.holds, "tuples": v.tuples_checked,
                         "mode": if v.mode == IdentityMode::Basis { "basis" } else { "exhaustive" }});
    let witness = v
        .counterexample
        .map(|c| json!(c.iter().map(|u| u.coords().to_vec()).collect::<Vec<_>>()))
        .unwrap_or(json!({"expected": if want { "holds" } else { "fails" }}));
    Ok(Outcome::verdict(v.holds == want, witness, details))
}

fn word_law(ctx: &Ctx, target: &str, params: &Params) -> Result<Outcome> {
    params.allow(&["word", "expect"])?;
    let text = params.raw("word").ok_or_else(|| Error::MalformedSpec("missing word=".into()))?;
    let w = parse_group_word(text)?;
    let want = expectation(params)?;
    let g = ctx.group(target)?;
    let v = group_satisfies_with_budget(&w, g, ctx.opts.budget)?;
    let details = json!({"word": w.to_string(), "holds": v.holds, "evaluations": v.evaluations});
    let witness = v
        .counterexample
        .map(|c| show(g, &c))
        .unwrap_or(json!({"expected": if want { "holds" } else { "fails" }}));
    Ok(Outcome::verdict(v.holds == want, witness, details))
}
