//! Subgroups, normal series, quotients and structural predicates.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{Automorphism, FiniteGroup, GroupElement, Homomorphism, TABLE_LIMIT};
use crate::util::exact_log;

/// A subgroup of an enumerated parent group, stored as a membership set.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: u64,
    members: Vec<bool>,
    elements: Vec<usize>,
    generators: Vec<usize>,
    normal: bool,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// Wraps a membership vector that is already closed under multiplication.
    fn from_members(g: &FiniteGroup, members: Vec<bool>) -> Self {
        let elements: Vec<usize> = (0..g.order()).filter(|&x| members[x]).collect();
        let mut generators = Vec::new();
        let mut span = vec![false; g.order()];
        span[0] = true;
        for &x in &elements {
            if !span[x] {
                generators.push(x);
                span = g.closure(&generators);
            }
        }
        debug_assert_eq!(span, members);
        let normal = g
            .generators()
            .iter()
            .all(|&t| generators.iter().all(|&h| members[g.conj(h, t)]));
        Self {
            parent: g.id(),
            members,
            elements,
            generators,
            normal,
        }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        let mut members = vec![false; g.order()];
        members[0] = true;
        Self::from_members(g, members)
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self::from_members(g, vec![true; g.order()])
    }

    pub fn parent_id(&self) -> u64 {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }

    pub fn members(&self) -> &[bool] {
        &self.members
    }

    /// Element indices in increasing order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Normality in the parent, verified on generators.
    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && self.elements.iter().all(|&x| other.members[x])
    }

    fn check_parent(&self, g: &FiniteGroup) -> Result<()> {
        if self.parent == g.id() {
            Ok(())
        } else {
            Err(Error::MismatchedParent)
        }
    }
}

/// Subgroup generated by the given element indices.
pub fn subgroup_from_indices(g: &FiniteGroup, candidates: impl IntoIterator<Item = usize>) -> Subgroup {
    let mut gens = Vec::new();
    let mut span = vec![false; g.order()];
    span[0] = true;
    for x in candidates {
        if !span[x] {
            gens.push(x);
            span = extend_closure(g, span, &gens, x);
        }
    }
    Subgroup::from_members(g, span)
}

// Closure of `span` (a subgroup) together with the new generator `x`.
fn extend_closure(g: &FiniteGroup, mut span: Vec<bool>, gens: &[usize], x: usize) -> Vec<bool> {
    let mut queue: Vec<usize> = (0..g.order()).filter(|&y| span[y]).collect();
    while let Some(y) = queue.pop() {
        for &s in gens.iter().chain(std::iter::once(&x)) {
            let z = g.mul(y, s);
            if !span[z] {
                span[z] = true;
                queue.push(z);
            }
        }
    }
    span
}

pub fn generated_subgroup(g: &FiniteGroup, gens: &[GroupElement]) -> Result<Subgroup> {
    let idx = gens
        .iter()
        .map(|x| g.index_of(x))
        .collect::<Result<Vec<_>>>()?;
    Ok(subgroup_from_indices(g, idx))
}

/// Smallest normal subgroup containing the given indices.
pub fn normal_closure_of(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
    let candidates: Vec<usize> = gens
        .iter()
        .flat_map(|&h| (0..g.order()).map(move |t| (h, t)))
        .map(|(h, t)| g.conj(h, t))
        .collect();
    subgroup_from_indices(g, candidates)
}

pub fn normal_closure(g: &FiniteGroup, gens: &[GroupElement]) -> Result<Subgroup> {
    let idx = gens
        .iter()
        .map(|x| g.index_of(x))
        .collect::<Result<Vec<_>>>()?;
    Ok(normal_closure_of(g, &idx))
}

/// `[H, K]`, generated by all `[h, k]`.
pub fn commutator_subgroup(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    h.check_parent(g)?;
    k.check_parent(g)?;
    let pairs = h
        .elements()
        .iter()
        .flat_map(|&x| k.elements().iter().map(move |&y| (x, y)));
    let mut seen = vec![false; g.order()];
    let mut cands = Vec::new();
    for (x, y) in pairs {
        let c = g.comm(x, y);
        if !seen[c] {
            seen[c] = true;
            cands.push(c);
        }
    }
    Ok(subgroup_from_indices(g, cands))
}

/// `H^n = <h^n : h in H>`.
pub fn power_subgroup(g: &FiniteGroup, h: &Subgroup, n: u64) -> Result<Subgroup> {
    h.check_parent(g)?;
    let powers: Vec<usize> = h.elements().iter().map(|&x| g.pow(x, n as i64)).collect();
    Ok(subgroup_from_indices(g, powers))
}

/// Product set `H K` as a membership vector.
pub fn product_set(g: &FiniteGroup, left: &[bool], right: &[usize]) -> Vec<bool> {
    let mut out = vec![false; g.order()];
    for x in (0..g.order()).filter(|&x| left[x]) {
        for &y in right {
            out[g.mul(x, y)] = true;
        }
    }
    out
}

/// Subgroup generated by the union of two subgroups.
pub fn join(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Subgroup {
    subgroup_from_indices(
        g,
        a.generators().iter().chain(b.generators()).copied(),
    )
}

pub fn intersection(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let members = (0..g.order()).map(|x| a.contains(x) && b.contains(x)).collect();
    Subgroup::from_members(g, members)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
    Dimension,
    Fitting,
    Custom,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesKind::LowerCentral => "lower-central",
            SeriesKind::Derived => "derived",
            SeriesKind::Dimension => "dimension",
            SeriesKind::Fitting => "fitting",
            SeriesKind::Custom => "custom",
        })
    }
}

/// A descending chain `G = G_1 >= G_2 >= ...`, including its final
/// (trivial or stabilized) term. Terms are 1-indexed in [`NormalSeries::term`].
#[derive(Debug, Clone)]
pub struct NormalSeries {
    kind: SeriesKind,
    terms: Vec<Subgroup>,
}

impl NormalSeries {
    /// A caller-supplied chain; checked to be descending.
    pub fn custom(g: &FiniteGroup, terms: Vec<Subgroup>) -> Result<Self> {
        for t in &terms {
            t.check_parent(g)?;
        }
        if terms.windows(2).any(|w| !w[1].is_subset_of(&w[0])) {
            return Err(Error::MalformedSpec("series is not descending".into()));
        }
        Ok(Self {
            kind: SeriesKind::Custom,
            terms,
        })
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn terms(&self) -> &[Subgroup] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `G_i` for `i >= 1`; `None` past the end of the chain.
    pub fn term(&self, i: usize) -> Option<&Subgroup> {
        i.checked_sub(1).and_then(|k| self.terms.get(k))
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }

    pub fn reaches_trivial(&self) -> bool {
        self.terms.last().is_some_and(Subgroup::is_trivial)
    }
}

fn iterate_until_stable(
    start: Subgroup,
    kind: SeriesKind,
    mut step: impl FnMut(&Subgroup) -> Subgroup,
) -> NormalSeries {
    let mut terms = vec![start];
    loop {
        let next = step(terms.last().unwrap());
        if &next == terms.last().unwrap() {
            break;
        }
        let done = next.is_trivial();
        terms.push(next);
        if done {
            break;
        }
    }
    NormalSeries { kind, terms }
}

/// Lower central series of the subgroup `h` (computed inside `g`).
pub fn lower_central_series_of(g: &FiniteGroup, h: &Subgroup) -> NormalSeries {
    let h0 = h.clone();
    iterate_until_stable(h.clone(), SeriesKind::LowerCentral, |t| {
        commutator_subgroup(g, t, &h0).expect("same parent")
    })
}

pub fn lower_central_series(g: &FiniteGroup) -> NormalSeries {
    lower_central_series_of(g, &Subgroup::whole(g))
}

pub fn derived_series_of(g: &FiniteGroup, h: &Subgroup) -> NormalSeries {
    iterate_until_stable(h.clone(), SeriesKind::Derived, |t| {
        commutator_subgroup(g, t, t).expect("same parent")
    })
}

pub fn derived_series(g: &FiniteGroup) -> NormalSeries {
    derived_series_of(g, &Subgroup::whole(g))
}

fn require_p_group(g: &FiniteGroup, p: u64) -> Result<()> {
    match exact_log(g.order() as u64, p) {
        Some(_) if crate::util::is_prime(p) => Ok(()),
        _ => Err(Error::NotAPGroup {
            order: g.order(),
            p,
        }),
    }
}

/// The p-dimension central series `D_i = prod_{j p^k >= i} gamma_j^{p^k}`,
/// ending with the trivial subgroup.
pub fn dimension_series(g: &FiniteGroup, p: u64) -> Result<NormalSeries> {
    require_p_group(g, p)?;
    let gamma = lower_central_series(g);
    let gamma_at = |j: usize| -> &Subgroup {
        gamma
            .term(j)
            .unwrap_or_else(|| gamma.terms().last().expect("nonempty series"))
    };
    let exponent = g.exponent();
    let mut terms = Vec::new();
    for i in 1.. {
        // gamma_j^{p^k} shrinks as j grows, so only j = ceil(i / p^k) matters.
        let mut gens: Vec<usize> = Vec::new();
        let mut pk: u64 = 1;
        loop {
            let j = (i as u64).div_ceil(pk) as usize;
            let gj = gamma_at(j);
            gens.extend(gj.elements().iter().map(|&x| g.pow(x, pk as i64)));
            if pk >= exponent {
                break;
            }
            pk *= p;
        }
        let d = subgroup_from_indices(g, gens);
        let done = d.is_trivial();
        terms.push(d);
        if done {
            break;
        }
    }
    Ok(NormalSeries {
        kind: SeriesKind::Dimension,
        terms,
    })
}

/// First violated condition found by [`verify_np_series`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NpViolation {
    /// `[G_i, G_j]` is not contained in `G_{i+j}`; `witness` is a commutator outside it.
    Commutator { i: usize, j: usize, witness: usize },
    /// `G_i^p` is not contained in `G_{pi}`; `witness` is a p-th power outside it.
    Power { i: usize, witness: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NpVerdict {
    pub violation: Option<NpViolation>,
}

impl NpVerdict {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `[G_i, G_j] <= G_{i+j}` (scanning `j <= i`) and then `G_i^p <= G_{pi}`;
/// terms past the end of the chain count as trivial.
pub fn verify_np_series(g: &FiniteGroup, s: &NormalSeries, p: u64) -> Result<NpVerdict> {
    for t in s.terms() {
        t.check_parent(g)?;
    }
    let trivial = Subgroup::trivial(g);
    let at = |i: usize| s.term(i).unwrap_or(&trivial);
    let m = s.len();
    for i in 1..=m {
        for j in 1..=i {
            let target = at(i + j);
            for &x in at(i).elements() {
                for &y in at(j).elements() {
                    let c = g.comm(x, y);
                    if !target.contains(c) {
                        return Ok(NpVerdict {
                            violation: Some(NpViolation::Commutator { i, j, witness: c }),
                        });
                    }
                }
            }
        }
    }
    for i in 1..=m {
        let target = at(p as usize * i);
        for &x in at(i).elements() {
            let y = g.pow(x, p as i64);
            if !target.contains(y) {
                return Ok(NpVerdict {
                    violation: Some(NpViolation::Power { i, witness: y }),
                });
            }
        }
    }
    Ok(NpVerdict { violation: None })
}

/// `G/N` over minimal coset representatives, with its projection.
#[derive(Debug)]
pub struct QuotientGroup {
    parent: u64,
    normal: Subgroup,
    group: FiniteGroup,
    projection: Homomorphism,
    representatives: Vec<usize>,
}

impl QuotientGroup {
    pub fn parent_id(&self) -> u64 {
        self.parent
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn into_group(self) -> FiniteGroup {
        self.group
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.normal
    }

    pub fn projection(&self) -> &Homomorphism {
        &self.projection
    }

    /// Image of a parent element index.
    pub fn project(&self, x: usize) -> usize {
        self.projection.apply_idx(x)
    }

    /// Minimal parent representative of a quotient element.
    pub fn representative(&self, q: usize) -> usize {
        self.representatives[q]
    }
}

pub fn quotient_group(g: &FiniteGroup, n: &Subgroup) -> Result<QuotientGroup> {
    n.check_parent(g)?;
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let size = g.order() / n.order();
    if size > TABLE_LIMIT {
        return Err(Error::BudgetExceeded { budget: TABLE_LIMIT });
    }
    let mut coset = vec![u32::MAX; g.order()];
    let mut reps = Vec::with_capacity(size);
    // ascending scan: the first unseen element is the minimal representative
    for x in 0..g.order() {
        if coset[x] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &y in n.elements() {
            coset[g.mul(x, y)] = id;
        }
    }
    let mut table = vec![0u32; size * size];
    for (a, &ra) in reps.iter().enumerate() {
        for (b, &rb) in reps.iter().enumerate() {
            table[a * size + b] = coset[g.mul(ra, rb)];
        }
    }
    let elements = reps
        .iter()
        .map(|&r| GroupElement::Coset(Box::new(g.element(r).clone())))
        .collect();
    let mut gens: Vec<usize> = g
        .generators()
        .iter()
        .map(|&x| coset[x] as usize)
        .filter(|&q| q != 0)
        .collect();
    gens.dedup();
    let group = FiniteGroup::from_table(&format!("{}/N", g.name()), elements, table, gens)?;
    let projection = Homomorphism::from_map(g.id(), group.id(), coset);
    if g.order() <= 512 {
        for a in 0..g.order() {
            for b in 0..g.order() {
                let lhs = projection.apply_idx(g.mul(a, b));
                let rhs = group.mul(projection.apply_idx(a), projection.apply_idx(b));
                if lhs != rhs {
                    return Err(Error::NotNormal);
                }
            }
        }
    }
    Ok(QuotientGroup {
        parent: g.id(),
        normal: n.clone(),
        group,
        projection,
        representatives: reps,
    })
}

/// `C_G(Φ) = {g : g^φ = g for all φ in Φ}`.
pub fn centralizer(g: &FiniteGroup, phis: &[Automorphism]) -> Result<Subgroup> {
    if phis.iter().any(|phi| phi.group_id() != g.id()) {
        return Err(Error::MismatchedParent);
    }
    let members = (0..g.order())
        .map(|x| phis.iter().all(|phi| phi.apply_idx(x) == x))
        .collect();
    Ok(Subgroup::from_members(g, members))
}

/// Centralizer of a single element.
pub fn element_centralizer(g: &FiniteGroup, x: usize) -> Subgroup {
    let members = (0..g.order()).map(|y| g.mul(x, y) == g.mul(y, x)).collect();
    Subgroup::from_members(g, members)
}

pub fn is_nilpotent_subgroup(g: &FiniteGroup, h: &Subgroup) -> bool {
    lower_central_series_of(g, h).reaches_trivial()
}

/// Join of all normal nilpotent subgroups: generated by the elements whose
/// normal closure is nilpotent.
pub fn fitting_subgroup(g: &FiniteGroup) -> Subgroup {
    let mut seen = vec![false; g.order()];
    let mut cands = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let nc = normal_closure_of(g, &[x]);
        let nilpotent = is_nilpotent_subgroup(g, &nc);
        // the whole conjugacy class shares the verdict
        for t in 0..g.order() {
            let y = g.conj(x, t);
            seen[y] = true;
            if nilpotent {
                cands.push(y);
            }
        }
    }
    let f = subgroup_from_indices(g, cands);
    debug_assert!(f.is_normal() && is_nilpotent_subgroup(g, &f));
    f
}

/// Descending chain `G = F_h >= ... >= F_1 >= F_0 = 1` where `F_{k}/F_{k-1}`
/// is the Fitting subgroup of `G/F_{k-1}`.
pub fn fitting_series(g: &FiniteGroup) -> Result<NormalSeries> {
    if !derived_series(g).reaches_trivial() {
        return Err(Error::NotSolvable);
    }
    let mut ascending = vec![Subgroup::trivial(g)];
    // proj: parent index -> index in the current quotient
    let mut proj: Vec<usize> = (0..g.order()).collect();
    let mut current: Option<FiniteGroup> = None;
    loop {
        let cur = current.as_ref().unwrap_or(g);
        if cur.order() == 1 {
            break;
        }
        let f = fitting_subgroup(cur);
        let pre: Vec<bool> = proj.iter().map(|&q| f.contains(q)).collect();
        ascending.push(Subgroup::from_members(g, pre));
        let q = quotient_group(cur, &f)?;
        proj = proj.iter().map(|&x| q.project(x)).collect();
        current = Some(q.into_group());
    }
    ascending.reverse();
    Ok(NormalSeries {
        kind: SeriesKind::Fitting,
        terms: ascending,
    })
}

pub fn fitting_height(g: &FiniteGroup) -> Result<usize> {
    Ok(fitting_series(g)?.len() - 1)
}

/// `[G,G] <= G^p` for odd `p`, `[G,G] <= G^4` for `p = 2`.
pub fn is_powerful(g: &FiniteGroup, p: u64) -> Result<bool> {
    require_p_group(g, p)?;
    let whole = Subgroup::whole(g);
    let derived = commutator_subgroup(g, &whole, &whole)?;
    let powers = power_subgroup(g, &whole, if p == 2 { 4 } else { p })?;
    Ok(derived.is_subset_of(&powers))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructurePredicates {
    pub is_nilpotent: bool,
    /// Length of the lower central series to the trivial group; 0 for the trivial group.
    pub nilpotency_class: Option<usize>,
    pub is_solvable: bool,
    pub derived_length: Option<usize>,
    /// The prime `p` when `|G|` is a power of `p`.
    pub p_group_prime: Option<u64>,
}

pub fn structure_predicates(g: &FiniteGroup) -> StructurePredicates {
    let lcs = lower_central_series(g);
    let ds = derived_series(g);
    let is_nilpotent = lcs.reaches_trivial();
    let is_solvable = ds.reaches_trivial();
    StructurePredicates {
        is_nilpotent,
        nilpotency_class: is_nilpotent.then(|| lcs.len() - 1),
        is_solvable,
        derived_length: is_solvable.then(|| ds.len() - 1),
        p_group_prime: g.p_group_prime(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{parse_cycles, BuildOptions, PcPresentation, PermutationGenSet};

    fn perm_group(degree: usize, gens: &[&str]) -> FiniteGroup {
        let mut p = PermutationGenSet::new(degree);
        for (k, c) in gens.iter().enumerate() {
            p.add_cycles(&format!("g{k}"), c).unwrap();
        }
        FiniteGroup::from_permutations("perm", &p, &BuildOptions::default()).unwrap()
    }

    fn pc_group(p: u32, n: usize, pows: &[(usize, &[(usize, u32)])], comms: &[(usize, usize, &[(usize, u32)])]) -> FiniteGroup {
        let mut pc = PcPresentation::new(p, n).unwrap();
        for (i, w) in pows {
            pc.set_power(*i, w.to_vec()).unwrap();
        }
        for (j, i, w) in comms {
            pc.set_commutator(*j, *i, w.to_vec()).unwrap();
        }
        FiniteGroup::from_pc("pc", &pc, &BuildOptions::default()).unwrap()
    }

    fn d8() -> FiniteGroup {
        pc_group(2, 3, &[(2, &[(3, 1)])], &[(2, 1, &[(3, 1)])])
    }

    fn elem(g: &FiniteGroup, c: &str, d: usize) -> usize {
        g.index_of(&GroupElement::Images(parse_cycles(c, d).unwrap())).unwrap()
    }

    #[test]
    fn generated_and_normal_closure() {
        let s3 = perm_group(3, &["(1 2)", "(1 2 3)"]);
        assert!(subgroup_from_indices(&s3, []).is_trivial());
        let a3 = subgroup_from_indices(&s3, [elem(&s3, "(1 2 3)", 3)]);
        assert_eq!(a3.order(), 3);
        assert!(a3.is_normal());
        let s4 = perm_group(4, &["(1 2)", "(1 2 3 4)"]);
        let v4 = normal_closure_of(&s4, &[elem(&s4, "(1 2)(3 4)", 4)]);
        assert_eq!(v4.order(), 4);
        assert!(v4.is_normal());
        let t = subgroup_from_indices(&s4, [elem(&s4, "(1 2)", 4)]);
        assert!(!t.is_normal());
    }

    #[test]
    fn commutator_and_power_subgroups() {
        let s3 = perm_group(3, &["(1 2)", "(1 2 3)"]);
        let whole = Subgroup::whole(&s3);
        assert_eq!(commutator_subgroup(&s3, &whole, &whole).unwrap().order(), 3);
        assert!(commutator_subgroup(&s3, &whole, &Subgroup::trivial(&s3)).unwrap().is_trivial());
        let d8 = d8();
        let w = Subgroup::whole(&d8);
        assert_eq!(commutator_subgroup(&d8, &w, &w).unwrap().order(), 2);
        assert_eq!(power_subgroup(&d8, &w, 2).unwrap().order(), 2);
        assert_eq!(power_subgroup(&d8, &w, 1).unwrap(), w);
        let c9 = pc_group(3, 2, &[(1, &[(2, 1)])], &[]);
        let w9 = Subgroup::whole(&c9);
        assert_eq!(power_subgroup(&c9, &w9, 3).unwrap().order(), 3);
        assert!(matches!(
            commutator_subgroup(&c9, &w9, &w),
            Err(Error::MismatchedParent)
        ));
    }

    #[test]
    fn series_orders() {
        let d8 = d8();
        assert_eq!(lower_central_series(&d8).orders(), vec![8, 2, 1]);
        assert_eq!(dimension_series(&d8, 2).unwrap().orders(), vec![8, 2, 1]);
        let s4 = perm_group(4, &["(1 2)", "(1 2 3 4)"]);
        assert_eq!(derived_series(&s4).orders(), vec![24, 12, 4, 1]);
        let c4 = pc_group(2, 2, &[(1, &[(2, 1)])], &[]);
        assert_eq!(dimension_series(&c4, 2).unwrap().orders(), vec![4, 2, 1]);
        let c3 = pc_group(3, 1, &[], &[]);
        assert_eq!(dimension_series(&c3, 3).unwrap().orders(), vec![3, 1]);
        assert!(matches!(
            dimension_series(&s4, 2),
            Err(Error::NotAPGroup { .. })
        ));
    }

    #[test]
    fn np_series_verdicts() {
        let d8 = d8();
        let ds = dimension_series(&d8, 2).unwrap();
        assert!(verify_np_series(&d8, &ds, 2).unwrap().passed());
        let bad = NormalSeries::custom(
            &d8,
            vec![Subgroup::whole(&d8), Subgroup::whole(&d8), Subgroup::trivial(&d8)],
        )
        .unwrap();
        let v = verify_np_series(&d8, &bad, 2).unwrap();
        assert!(matches!(
            v.violation,
            Some(NpViolation::Commutator { i: 2, j: 1, .. })
        ));
        let heis = pc_group(3, 3, &[], &[(2, 1, &[(3, 1)])]);
        let lcs = lower_central_series(&heis);
        assert!(verify_np_series(&heis, &lcs, 3).unwrap().passed());
    }

    #[test]
    fn quotients() {
        let s4 = perm_group(4, &["(1 2)", "(1 2 3 4)"]);
        let v4 = normal_closure_of(&s4, &[elem(&s4, "(1 2)(3 4)", 4)]);
        let q = quotient_group(&s4, &v4).unwrap();
        assert_eq!(q.group().order(), 6);
        assert!(!q.group().is_abelian());
        let d8 = d8();
        let w = Subgroup::whole(&d8);
        let z = commutator_subgroup(&d8, &w, &w).unwrap();
        let q = quotient_group(&d8, &z).unwrap();
        assert_eq!(q.group().order(), 4);
        assert_eq!(q.group().exponent(), 2);
        assert_eq!(quotient_group(&d8, &Subgroup::trivial(&d8)).unwrap().group().order(), 8);
        let t = subgroup_from_indices(&s4, [elem(&s4, "(1 2)", 4)]);
        assert!(matches!(quotient_group(&s4, &t), Err(Error::NotNormal)));
    }

    #[test]
    fn fitting() {
        let s3 = perm_group(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(fitting_subgroup(&s3).order(), 3);
        assert_eq!(fitting_height(&s3).unwrap(), 2);
        let s4 = perm_group(4, &["(1 2)", "(1 2 3 4)"]);
        assert_eq!(fitting_subgroup(&s4).order(), 4);
        assert_eq!(fitting_height(&s4).unwrap(), 3);
        assert_eq!(fitting_series(&s4).unwrap().orders(), vec![24, 12, 4, 1]);
        assert_eq!(fitting_height(&d8()).unwrap(), 1);
        let a5 = perm_group(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        assert!(matches!(fitting_height(&a5), Err(Error::NotSolvable)));
    }

    #[test]
    fn powerful_and_predicates() {
        let c4 = pc_group(2, 2, &[(1, &[(2, 1)])], &[]);
        assert!(is_powerful(&c4, 2).unwrap());
        assert!(!is_powerful(&d8(), 2).unwrap());
        let s4 = perm_group(4, &["(1 2)", "(1 2 3 4)"]);
        let sp = structure_predicates(&s4);
        assert!(!sp.is_nilpotent && sp.is_solvable);
        assert_eq!(sp.derived_length, Some(3));
        let sp = structure_predicates(&d8());
        assert_eq!(sp.nilpotency_class, Some(2));
        assert_eq!(sp.derived_length, Some(2));
        assert_eq!(sp.p_group_prime, Some(2));
        let c9 = pc_group(3, 2, &[(1, &[(2, 1)])], &[]);
        assert_eq!(structure_predicates(&c9).nilpotency_class, Some(1));
    }

    #[test]
    fn centralizers() {
        let c9 = pc_group(3, 2, &[(1, &[(2, 1)])], &[]);
        let x = c9.generators()[0];
        let inv = Automorphism::from_images(&c9, &[x], &[c9.inv(x)]).unwrap();
        assert!(centralizer(&c9, &[inv]).unwrap().is_trivial());
        assert_eq!(centralizer(&c9, &[]).unwrap().order(), 9);
        let s3 = perm_group(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(element_centralizer(&s3, elem(&s3, "(1 2)", 3)).order(), 2);
    }
}
