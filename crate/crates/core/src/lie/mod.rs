//! The graded Lie algebra `DL(G) = ⊕ D_i/D_{i+1}` of a finite p-group over F_p.
//!
//! Each component `L_i` gets a basis of coset representatives chosen greedily
//! in canonical element order: an element of `D_i` joins the basis when it is
//! not in the subgroup generated by `D_{i+1}` and the earlier basis elements.
//! Global coordinates concatenate the components in degree order. Brackets of
//! basis elements are group commutators of their representatives, read off in
//! the component of the summed degree (and zero past the top degree).

mod action;
mod decomposition;

pub use action::{
    centralizer_subalgebra, induced_action, plus_minus_split, subgroup_graded_algebra,
    GradedAutomorphism, PlusMinusSplit,
};
pub use decomposition::{
    check_cor_2_14, check_prop_2_11, decomposition_witness, Cor214Verdict,
    DecompositionWitness, Prop211Verdict,
};

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::{next_id, FiniteGroup};
use crate::linalg::{Matrix, Subspace};
use crate::series::{dimension_series, subgroup_from_indices, NormalSeries, Subgroup};
use crate::util::exact_log;

/// Alternative representative pairs tried per basis pair when not exhaustive.
const WELL_DEFINED_SAMPLES: usize = 16;

#[derive(Debug, Clone)]
struct Component {
    /// Group indices of the basis representatives.
    reps: Vec<usize>,
    /// Local coordinates of every element of `D_i`.
    coords: HashMap<usize, Vec<u32>>,
}

/// `DL(G)` for a finite p-group `G`.
#[derive(Debug, Clone)]
pub struct GradedLieRing {
    id: u64,
    group: u64,
    p: u32,
    series: NormalSeries,
    components: Vec<Component>,
    offsets: Vec<usize>,
    degrees: Vec<usize>,
    dim: usize,
    // structure constants: constants[a * dim + b] = [e_a, e_b] in global coordinates
    constants: Vec<Vec<u32>>,
}

/// An element of a [`GradedLieRing`] in global coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LieElement {
    algebra: u64,
    coords: Vec<u32>,
}

impl LieElement {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn algebra_id(&self) -> u64 {
        self.algebra
    }
}

/// Verdict of [`GradedLieRing::lazard_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LazardVerdict {
    pub degree: usize,
    /// `(ad x*)^p == ad (x^p)*` with `(x^p)*` read in `L_{p i}`.
    pub power_matches: bool,
    /// Degree of `x^p` in the series, `None` when `x^p = 1`.
    pub power_degree: Option<usize>,
    pub ad_index: usize,
    pub element_order: u64,
}

impl LazardVerdict {
    pub fn passed(&self) -> bool {
        self.power_matches && self.ad_index as u64 <= self.element_order
    }
}

/// Outcome of the exhaustive Lie-axiom scan; each field holds the first
/// failing basis tuple, if any.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub alternating: Option<(usize, usize)>,
    pub jacobi: Option<(usize, usize, usize)>,
    pub grading: Option<(usize, usize)>,
    pub bilinearity: Option<(usize, usize, usize)>,
    pub dimension_total: Option<(usize, u32)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        *self == AxiomReport::default()
    }
}

pub fn build_dl(g: &FiniteGroup, p: u64) -> Result<GradedLieRing> {
    GradedLieRing::build(g, p, 1)
}

impl GradedLieRing {
    /// Builds `DL(G)`; `seed` drives the representative-independence sample.
    pub fn build(g: &FiniteGroup, p: u64, seed: u64) -> Result<Self> {
        let series = dimension_series(g, p)?;
        let pp = p as u32;
        let trivial = Subgroup::trivial(g);
        let m = series.len() - 1; // the last term is trivial
        let mut components = Vec::with_capacity(m);
        for i in 1..=m {
            let di = series.term(i).unwrap();
            let next = series.term(i + 1).unwrap_or(&trivial);
            components.push(build_component(g, i, di, next, pp)?);
        }
        let mut offsets = Vec::with_capacity(m + 1);
        let mut degrees = Vec::new();
        let mut dim = 0;
        for (k, c) in components.iter().enumerate() {
            offsets.push(dim);
            dim += c.reps.len();
            degrees.extend(std::iter::repeat(k + 1).take(c.reps.len()));
        }
        offsets.push(dim);
        let mut ring = Self {
            id: next_id(),
            group: g.id(),
            p: pp,
            series,
            components,
            offsets,
            degrees,
            dim,
            constants: Vec::new(),
        };
        let mut constants = Vec::with_capacity(dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                let c = g.comm(ring.rep(a), ring.rep(b));
                let deg = ring.degrees[a] + ring.degrees[b];
                constants.push(ring.global_in_degree(c, deg).ok_or(
                    Error::NonElementaryQuotient { degree: deg.min(m) },
                )?);
            }
        }
        ring.constants = constants;
        ring.check_well_defined(g, seed)?;
        Ok(ring)
    }

    fn check_well_defined(&self, g: &FiniteGroup, seed: u64) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let trivial = Subgroup::trivial(g);
        for a in 0..self.dim {
            let ka = self.series.term(self.degrees[a] + 1).unwrap_or(&trivial);
            for b in 0..self.dim {
                let kb = self.series.term(self.degrees[b] + 1).unwrap_or(&trivial);
                let deg = self.degrees[a] + self.degrees[b];
                let expected = &self.constants[a * self.dim + b];
                let check = |u: usize, v: usize| -> Result<()> {
                    let x = g.mul(self.rep(a), u);
                    let y = g.mul(self.rep(b), v);
                    match self.global_in_degree(g.comm(x, y), deg) {
                        Some(c) if &c == expected => Ok(()),
                        _ => Err(Error::BracketNotWellDefined { left: a, right: b }),
                    }
                };
                if ka.order() * kb.order() <= 64 {
                    for &u in ka.elements() {
                        for &v in kb.elements() {
                            check(u, v)?;
                        }
                    }
                } else {
                    for _ in 0..WELL_DEFINED_SAMPLES {
                        let u = ka.elements()[rng.gen_range(0..ka.order())];
                        let v = kb.elements()[rng.gen_range(0..kb.order())];
                        check(u, v)?;
                    }
                }
            }
        }
        Ok(())
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn group_id(&self) -> u64 {
        self.group
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of components `L_1..L_m` (the top degree).
    pub fn top_degree(&self) -> usize {
        self.components.len()
    }

    pub fn component_dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.reps.len()).collect()
    }

    pub fn component_dim(&self, degree: usize) -> usize {
        self.components.get(degree.wrapping_sub(1)).map_or(0, |c| c.reps.len())
    }

    /// Global coordinate range of `L_degree`.
    pub fn component_range(&self, degree: usize) -> std::ops::Range<usize> {
        self.offsets[degree - 1]..self.offsets[degree]
    }

    pub fn series(&self) -> &NormalSeries {
        &self.series
    }

    /// Degree of the basis vector `e_a`.
    pub fn basis_degree(&self, a: usize) -> usize {
        self.degrees[a]
    }

    /// Group representative of the basis vector `e_a`.
    pub fn rep(&self, a: usize) -> usize {
        let d = self.degrees[a];
        self.components[d - 1].reps[a - self.offsets[d - 1]]
    }

    /// Structure constant `[e_a, e_b]` in global coordinates.
    pub fn structure_constant(&self, a: usize, b: usize) -> &[u32] {
        &self.constants[a * self.dim + b]
    }

    /// The degree `i` with `x` in `D_i \ D_{i+1}`; `None` for the identity.
    pub fn degree_of(&self, x: usize) -> Option<usize> {
        if x == 0 {
            return None;
        }
        (1..=self.top_degree())
            .rev()
            .find(|&i| self.series.term(i).unwrap().contains(x))
    }

    /// Local coordinates of `x D_{i+1}` in `L_i`; `None` unless `x` is in `D_i`.
    pub fn local_coords(&self, x: usize, degree: usize) -> Option<&[u32]> {
        self.components
            .get(degree.checked_sub(1)?)?
            .coords
            .get(&x)
            .map(Vec::as_slice)
    }

    /// Global coordinates of `x D_{d+1}` in `L_d`; zero when `d` exceeds the top
    /// degree (where `D_d` is trivial) and `None` when `x` is not in `D_d`.
    fn global_in_degree(&self, x: usize, degree: usize) -> Option<Vec<u32>> {
        let mut v = vec![0u32; self.dim];
        if degree > self.top_degree() {
            return (x == 0).then_some(v);
        }
        let local = self.local_coords(x, degree)?;
        v[self.component_range(degree)].copy_from_slice(local);
        Some(v)
    }

    pub fn zero(&self) -> LieElement {
        self.element(vec![0; self.dim])
    }

    pub fn element(&self, coords: Vec<u32>) -> LieElement {
        assert_eq!(coords.len(), self.dim, "coordinate vector length");
        LieElement {
            algebra: self.id,
            coords: coords.into_iter().map(|c| c % self.p).collect(),
        }
    }

    pub fn basis_element(&self, a: usize) -> LieElement {
        let mut v = vec![0; self.dim];
        v[a] = 1;
        self.element(v)
    }

    /// `x* = x D_{i+1}` in `L_i` for `x` in `D_i \ D_{i+1}`.
    pub fn image(&self, x: usize) -> Result<LieElement> {
        let d = self.degree_of(x).ok_or(Error::TrivialImage)?;
        Ok(self.element(self.global_in_degree(x, d).expect("x lies in D_d")))
    }

    /// `x D_{d+1}` in `L_d` for `x` in `D_d` (possibly zero).
    pub fn image_in_degree(&self, x: usize, degree: usize) -> Option<LieElement> {
        self.global_in_degree(x, degree).map(|v| self.element(v))
    }

    /// Homogeneity degree of a nonzero element concentrated in one component.
    pub fn degree(&self, u: &LieElement) -> Option<usize> {
        let mut found = None;
        for d in 1..=self.top_degree() {
            if u.coords[self.component_range(d)].iter().any(|&c| c != 0) {
                if found.is_some() {
                    return None;
                }
                found = Some(d);
            }
        }
        found
    }

    fn check(&self, u: &LieElement) -> Result<()> {
        if u.algebra == self.id {
            Ok(())
        } else {
            Err(Error::MismatchedAlgebra)
        }
    }

    pub fn add(&self, u: &LieElement, v: &LieElement) -> Result<LieElement> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.element(add_vec(&u.coords, &v.coords, self.p)))
    }

    pub fn scale(&self, u: &LieElement, c: u32) -> Result<LieElement> {
        self.check(u)?;
        Ok(self.element(scale_vec(&u.coords, c, self.p)))
    }

    pub fn bracket(&self, u: &LieElement, v: &LieElement) -> Result<LieElement> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.element(self.bracket_coords(&u.coords, &v.coords)))
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket_coords(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let mut out = vec![0u64; self.dim];
        for (a, &ua) in u.iter().enumerate() {
            if ua == 0 {
                continue;
            }
            for (b, &vb) in v.iter().enumerate() {
                if vb == 0 {
                    continue;
                }
                let f = ua as u64 * vb as u64 % p;
                for (o, &c) in out.iter_mut().zip(&self.constants[a * self.dim + b]) {
                    if c != 0 {
                        *o = (*o + f * c as u64) % p;
                    }
                }
            }
        }
        out.into_iter().map(|x| x as u32).collect()
    }

    /// Matrix of `x -> [x, a]` on row vectors.
    pub fn ad_matrix(&self, a: &LieElement) -> Result<Matrix> {
        self.check(a)?;
        Ok(self.ad_matrix_coords(&a.coords))
    }

    fn ad_matrix_coords(&self, a: &[u32]) -> Matrix {
        let rows: Vec<Vec<u32>> = (0..self.dim)
            .map(|k| {
                let mut e = vec![0; self.dim];
                e[k] = 1;
                self.bracket_coords(&e, a)
            })
            .collect();
        Matrix::from_rows(&rows, self.p)
    }

    /// Least `n >= 1` with `(ad a)^n = 0`.
    pub fn ad_nilpotency_index(&self, a: &LieElement) -> Result<Option<usize>> {
        let m = self.ad_matrix(a)?;
        Ok(nilpotency_index(&m))
    }

    /// Lazard's relation `(ad x*)^p = ad (x^p)*` and `index(ad x*) <= |x|`.
    pub fn lazard_check(&self, g: &FiniteGroup, x: usize) -> Result<LazardVerdict> {
        if g.id() != self.group {
            return Err(Error::MismatchedParent);
        }
        let degree = self.degree_of(x).ok_or(Error::TrivialImage)?;
        let xs = self.image(x)?;
        let ad = self.ad_matrix(&xs)?;
        let lhs = ad.pow(self.p as u64);
        let y = g.pow(x, self.p as i64);
        let target = self.p as usize * degree;
        let rhs = match self.image_in_degree(y, target) {
            Some(ys) => self.ad_matrix(&ys)?,
            None => return Err(Error::NonElementaryQuotient { degree: target }),
        };
        Ok(LazardVerdict {
            degree,
            power_matches: lhs == rhs,
            power_degree: self.degree_of(y),
            ad_index: nilpotency_index(&ad).expect("graded algebras are nilpotent"),
            element_order: g.order_of(x),
        })
    }

    /// Class of the whole algebra.
    pub fn nilpotency_class(&self) -> usize {
        nilpotency_class_of(self, &Subspace::full(self.p, self.dim))
    }

    /// `L_p(G)`, the subalgebra generated by `L_1`.
    pub fn lp_subalgebra(&self) -> GradedSubspace {
        let m = self.top_degree();
        let mut parts: Vec<Subspace> = Vec::with_capacity(m);
        if m == 0 {
            return GradedSubspace { algebra: self.id, p: self.p, parts };
        }
        let l1: Vec<Vec<u32>> = self.component_range(1).map(|a| unit(self.dim, a)).collect();
        parts.push(Subspace::full(self.p, self.component_dim(1)));
        let mut prev: Vec<Vec<u32>> = l1.clone();
        for d in 2..=m {
            let mut next = Vec::new();
            for u in &prev {
                for v in &l1 {
                    next.push(self.local_part(&self.bracket_coords(u, v), d));
                }
            }
            let part = Subspace::span(self.p, self.component_dim(d), next);
            prev = part.basis().iter().map(|b| self.lift(b, d)).collect();
            parts.push(part);
        }
        GradedSubspace { algebra: self.id, p: self.p, parts }
    }

    /// The whole algebra as a graded subspace.
    pub fn full_subspace(&self) -> GradedSubspace {
        GradedSubspace {
            algebra: self.id,
            p: self.p,
            parts: (1..=self.top_degree())
                .map(|d| Subspace::full(self.p, self.component_dim(d)))
                .collect(),
        }
    }

    fn local_part(&self, v: &[u32], degree: usize) -> Vec<u32> {
        v[self.component_range(degree)].to_vec()
    }

    fn lift(&self, local: &[u32], degree: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[self.component_range(degree)].copy_from_slice(local);
        v
    }

    /// Exhaustive scan of the Lie axioms on basis tuples.
    pub fn check_axioms(&self, g: &FiniteGroup) -> AxiomReport {
        let mut report = AxiomReport::default();
        let n = self.dim;
        let p = self.p;
        let e = |a: usize| unit(n, a);
        for a in 0..n {
            for b in 0..n {
                let ab = self.structure_constant(a, b);
                let ba = self.structure_constant(b, a);
                let alternating = if a == b {
                    ab.iter().all(|&c| c == 0)
                } else {
                    add_vec(ab, ba, p).iter().all(|&c| c == 0)
                };
                if !alternating && report.alternating.is_none() {
                    report.alternating = Some((a, b));
                }
                let deg = self.degrees[a] + self.degrees[b];
                let graded = ab.iter().enumerate().all(|(k, &c)| c == 0 || self.degrees[k] == deg);
                if !graded && report.grading.is_none() {
                    report.grading = Some((a, b));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let t1 = self.bracket_coords(&self.bracket_coords(&e(a), &e(b)), &e(c));
                    let t2 = self.bracket_coords(&self.bracket_coords(&e(b), &e(c)), &e(a));
                    let t3 = self.bracket_coords(&self.bracket_coords(&e(c), &e(a)), &e(b));
                    let sum = add_vec(&add_vec(&t1, &t2, p), &t3, p);
                    if sum.iter().any(|&x| x != 0) && report.jacobi.is_none() {
                        report.jacobi = Some((a, b, c));
                    }
                    // group-level bilinearity: [x_a x_b, x_c] ~ [e_a + e_b, e_c]
                    if self.degrees[a] == self.degrees[b] && report.bilinearity.is_none() {
                        let deg = self.degrees[a] + self.degrees[c];
                        let xy = g.mul(self.rep(a), self.rep(b));
                        let lhs = self.global_in_degree(g.comm(xy, self.rep(c)), deg);
                        let rhs = self.bracket_coords(&add_vec(&e(a), &e(b), p), &e(c));
                        let right = self.global_in_degree(g.comm(self.rep(c), xy), deg);
                        let rhs_right = self.bracket_coords(&e(c), &add_vec(&e(a), &e(b), p));
                        if lhs.as_ref() != Some(&rhs) || right.as_ref() != Some(&rhs_right) {
                            report.bilinearity = Some((a, b, c));
                        }
                    }
                }
            }
        }
        let expected = exact_log(g.order() as u64, p as u64).unwrap_or(u32::MAX);
        if self.dim as u32 != expected {
            report.dimension_total = Some((self.dim, expected));
        }
        report
    }
}

fn build_component(
    g: &FiniteGroup,
    degree: usize,
    di: &Subgroup,
    next: &Subgroup,
    p: u32,
) -> Result<Component> {
    let nonelementary = Error::NonElementaryQuotient { degree };
    // D_i/D_{i+1} must be elementary abelian
    for &x in di.elements() {
        if !next.contains(g.pow(x, p as i64)) {
            return Err(nonelementary);
        }
    }
    for &x in di.generators() {
        for &y in di.generators() {
            if !next.contains(g.comm(x, y)) {
                return Err(nonelementary);
            }
        }
    }
    let mut reps: Vec<usize> = Vec::new();
    let mut span = next.members().to_vec();
    for &x in di.elements() {
        if !span[x] {
            reps.push(x);
            let gens: Vec<usize> = next.generators().iter().chain(&reps).copied().collect();
            span = subgroup_from_indices(g, gens).members().to_vec();
        }
    }
    let d = reps.len();
    if (p as usize).pow(d as u32) * next.order() != di.order() {
        return Err(nonelementary);
    }
    let mut coords: HashMap<usize, Vec<u32>> = HashMap::with_capacity(di.order());
    let total = (p as usize).pow(d as u32);
    for idx in 0..total {
        let mut c = vec![0u32; d];
        let mut r = idx;
        for slot in c.iter_mut().rev() {
            *slot = (r % p as usize) as u32;
            r /= p as usize;
        }
        let y = reps
            .iter()
            .zip(&c)
            .fold(0, |acc, (&b, &e)| g.mul(acc, g.pow(b, e as i64)));
        for &z in next.elements() {
            if coords.insert(g.mul(y, z), c.clone()).is_some() {
                return Err(nonelementary);
            }
        }
    }
    Ok(Component { reps, coords })
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<u32> {
    crate::linalg::unit(n, i)
}

pub(crate) fn add_vec(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| (x + y) % p).collect()
}

pub(crate) fn scale_vec(a: &[u32], c: u32, p: u32) -> Vec<u32> {
    a.iter()
        .map(|&x| (x as u64 * (c % p) as u64 % p as u64) as u32)
        .collect()
}

/// Least `n >= 1` with `m^n = 0`, searched up to `size + 1`.
pub fn nilpotency_index(m: &Matrix) -> Option<usize> {
    let mut power = m.clone();
    for n in 1..=m.size() + 1 {
        if power.is_zero() {
            return Some(n);
        }
        power = power.mul(m);
    }
    None
}

/// Nilpotency class of the subalgebra spanned by `s` (global coordinates):
/// the number of nonzero terms of its lower central series.
pub fn nilpotency_class_of(l: &GradedLieRing, s: &Subspace) -> usize {
    let mut class = 0;
    let mut term = s.clone();
    while term.dim() > 0 {
        class += 1;
        let mut next = Vec::new();
        for u in term.basis() {
            for v in s.basis() {
                next.push(l.bracket_coords(u, v));
            }
        }
        term = Subspace::span(l.p, l.dim, next);
    }
    class
}

/// A graded subspace `⊕ S_i` with `S_i` in local coordinates of `L_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSubspace {
    algebra: u64,
    p: u32,
    parts: Vec<Subspace>,
}

impl GradedSubspace {
    pub(crate) fn new(l: &GradedLieRing, parts: Vec<Subspace>) -> Self {
        debug_assert_eq!(parts.len(), l.top_degree());
        Self {
            algebra: l.id,
            p: l.p,
            parts,
        }
    }

    pub fn parts(&self) -> &[Subspace] {
        &self.parts
    }

    pub fn dims(&self) -> Vec<usize> {
        self.parts.iter().map(Subspace::dim).collect()
    }

    pub fn dim(&self) -> usize {
        self.parts.iter().map(Subspace::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Homogeneous basis in global coordinates.
    pub fn global_basis(&self, l: &GradedLieRing) -> Vec<Vec<u32>> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(k, s)| s.basis().iter().map(move |b| l.lift(b, k + 1)))
            .collect()
    }

    pub fn to_global(&self, l: &GradedLieRing) -> Subspace {
        Subspace::span(l.p, l.dim, self.global_basis(l))
    }

    pub fn contains(&self, l: &GradedLieRing, v: &[u32]) -> bool {
        (1..=l.top_degree()).all(|d| self.parts[d - 1].contains(&v[l.component_range(d)]))
    }

    pub fn intersect(&self, other: &GradedSubspace) -> GradedSubspace {
        GradedSubspace {
            algebra: self.algebra,
            p: self.p,
            parts: self
                .parts
                .iter()
                .zip(&other.parts)
                .map(|(a, b)| a.intersect(b))
                .collect(),
        }
    }

    /// `[S_i, S_j] <= S_{i+j}` on all homogeneous basis pairs.
    pub fn is_bracket_closed(&self, l: &GradedLieRing) -> bool {
        let basis = self.global_basis(l);
        basis
            .iter()
            .all(|u| basis.iter().all(|v| self.contains(l, &l.bracket_coords(u, v))))
    }

    pub fn nilpotency_class(&self, l: &GradedLieRing) -> usize {
        nilpotency_class_of(l, &self.to_global(l))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{BuildOptions, PcPresentation};

    pub(crate) fn pc(p: u32, n: usize, pows: &[(usize, &[(usize, u32)])], comms: &[(usize, usize, &[(usize, u32)])]) -> FiniteGroup {
        let mut pc = PcPresentation::new(p, n).unwrap();
        for (i, w) in pows {
            pc.set_power(*i, w.to_vec()).unwrap();
        }
        for (j, i, w) in comms {
            pc.set_commutator(*j, *i, w.to_vec()).unwrap();
        }
        FiniteGroup::from_pc("pc", &pc, &BuildOptions::default()).unwrap()
    }

    fn gen(g: &FiniteGroup, v: &[u32]) -> usize {
        g.index_of(&crate::group::GroupElement::Exponents(v.to_vec())).unwrap()
    }

    #[test]
    fn dihedral_algebra() {
        let d8 = pc(2, 3, &[(2, &[(3, 1)])], &[(2, 1, &[(3, 1)])]);
        let l = build_dl(&d8, 2).unwrap();
        assert_eq!(l.component_dims(), vec![2, 1]);
        let g1 = l.image(gen(&d8, &[1, 0, 0])).unwrap();
        let g2 = l.image(gen(&d8, &[0, 1, 0])).unwrap();
        let g3 = l.image(gen(&d8, &[0, 0, 1])).unwrap();
        assert_eq!(l.bracket(&g1, &g2).unwrap(), g3);
        assert!(l.bracket(&g1, &g1).unwrap().is_zero());
        assert_eq!(l.ad_nilpotency_index(&g2).unwrap(), Some(2));
        assert_eq!(l.ad_nilpotency_index(&l.zero()).unwrap(), Some(1));
        assert!(l.ad_nilpotency_index(&g3).unwrap().unwrap() <= 2);
        assert!(l.bracket(&g3, &g1).unwrap().is_zero());
        assert_eq!(l.nilpotency_class(), 2);
        assert_eq!(l.lp_subalgebra().dims(), vec![2, 1]);
        assert!(l.check_axioms(&d8).passed());
        assert_eq!(l.degree(&g3), Some(2));
        let v = l.lazard_check(&d8, gen(&d8, &[0, 1, 0])).unwrap();
        assert!(v.passed());
        assert_eq!((v.ad_index, v.element_order), (2, 4));
        assert!(matches!(l.lazard_check(&d8, 0), Err(Error::TrivialImage)));
    }

    #[test]
    fn cyclic_algebras() {
        let c3 = pc(3, 1, &[], &[]);
        let l = build_dl(&c3, 3).unwrap();
        assert_eq!(l.component_dims(), vec![1]);
        assert_eq!(l.nilpotency_class(), 1);
        let c4 = pc(2, 2, &[(1, &[(2, 1)])], &[]);
        let l = build_dl(&c4, 2).unwrap();
        assert_eq!(l.component_dims(), vec![1, 1]);
        let x = gen(&c4, &[1, 0]);
        let v = l.lazard_check(&c4, x).unwrap();
        assert!(v.power_matches && v.passed());
        assert_eq!(l.lp_subalgebra().dims(), vec![1, 0]);
    }

    #[test]
    fn mismatched_algebra() {
        let c3 = pc(3, 1, &[], &[]);
        let a = build_dl(&c3, 3).unwrap();
        let b = build_dl(&c3, 3).unwrap();
        assert!(matches!(
            a.bracket(&a.zero(), &b.zero()),
            Err(Error::MismatchedAlgebra)
        ));
    }
}
