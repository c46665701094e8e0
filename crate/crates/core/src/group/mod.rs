//! Enumerated finite groups with exact arithmetic.
//!
//! Every group is fully enumerated at construction. Elements are addressed by
//! their index in canonical order (index 0 is always the identity); the typed
//! [`GroupElement`] API converts to and from indices and rejects foreign
//! elements. Two backends produce groups: power-commutator presentations
//! (multiplication by collection) and permutation generating sets
//! (composition, `a * b` = apply `a`, then `b`). Quotient groups built by the
//! `series` module use a third, table-backed representation.

mod hom;
mod pc;
mod perm;

pub use hom::{Automorphism, Homomorphism};
pub use pc::{NormalWord, PcPresentation};
pub use perm::{format_cycles, parse_cycles, PermutationGenSet};

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::util::{lcm, prime_power};

use pc::Collector;

/// Groups at most this large carry a full Cayley table.
pub const TABLE_LIMIT: usize = 4096;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

pub(crate) fn next_id() -> u64 {
    NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed)
}

/// Canonical form of a group element. Equal forms denote equal elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    /// Exponent vector `(e_1..e_n)` over a pc presentation, `0 <= e_i < p`.
    Exponents(Vec<u32>),
    /// Image array of a permutation of `{0..d-1}`.
    Images(Vec<u32>),
    /// Coset of a normal subgroup, named by its minimal representative.
    Coset(Box<GroupElement>),
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Exponents(v) => {
                let parts: Vec<String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e != 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("g{}", i + 1)
                        } else {
                            format!("g{}^{}", i + 1, e)
                        }
                    })
                    .collect();
                if parts.is_empty() {
                    write!(f, "1")
                } else {
                    write!(f, "{}", parts.join(" "))
                }
            }
            GroupElement::Images(v) => write!(f, "{}", format_cycles(v)),
            GroupElement::Coset(rep) => write!(f, "{rep}N"),
        }
    }
}

/// Input to [`build_group`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Pc(PcPresentation),
    Perm(PermutationGenSet),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendKind {
    Pc,
    Perm,
    Quotient,
}

impl fmt::Display for BackendKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BackendKind::Pc => "pc",
            BackendKind::Perm => "perm",
            BackendKind::Quotient => "quotient",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    /// Maximum number of enumerated elements.
    pub budget: usize,
    /// Associativity is checked on all triples up to this order.
    pub exhaustive_limit: usize,
    /// Triples sampled above `exhaustive_limit`.
    pub sampled_triples: usize,
    pub seed: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self {
            budget: 1_000_000,
            exhaustive_limit: 512,
            sampled_triples: 100_000,
            seed: 1,
        }
    }
}

#[derive(Debug)]
enum Backend {
    Pc {
        presentation: PcPresentation,
        collector: Collector,
    },
    Perm {
        generators: PermutationGenSet,
        index: HashMap<Vec<u32>, u32>,
    },
    Quotient,
}

/// An enumerated finite group.
#[derive(Debug)]
pub struct FiniteGroup {
    id: u64,
    name: String,
    backend: Backend,
    elements: Vec<GroupElement>,
    table: Option<Vec<u32>>,
    inverses: Vec<u32>,
    generators: Vec<usize>,
    orders: OnceLock<Vec<u64>>,
}

/// Builds and validates a group from either backend specification.
pub fn build_group(name: &str, spec: &GroupSpec, opts: &BuildOptions) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Pc(pc) => FiniteGroup::from_pc(name, pc, opts),
        GroupSpec::Perm(perm) => FiniteGroup::from_permutations(name, perm, opts),
    }
}

impl FiniteGroup {
    pub fn from_pc(name: &str, pc: &PcPresentation, opts: &BuildOptions) -> Result<Self> {
        let p = pc.prime() as u64;
        let n = pc.ngens();
        let order = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if order > opts.budget as u128 {
            return Err(Error::BudgetExceeded { budget: opts.budget });
        }
        let order = order as usize;
        let elements: Vec<GroupElement> = (0..order)
            .map(|idx| GroupElement::Exponents(pc_digits(idx, p as u32, n)))
            .collect();
        let collector = pc.collector();
        let mut group = Self {
            id: next_id(),
            name: name.to_string(),
            backend: Backend::Pc {
                presentation: pc.clone(),
                collector,
            },
            elements,
            table: None,
            inverses: Vec::new(),
            generators: Vec::new(),
            orders: OnceLock::new(),
        };
        if order <= TABLE_LIMIT {
            let table = group.pc_table(n, p as usize)?;
            if order <= opts.exhaustive_limit {
                for a in 0..order {
                    for b in 0..order {
                        if table[a * order + b] as usize != group.mul_backend(a, b)? {
                            return Err(Error::InconsistentPresentation(format!(
                                "{} * {} depends on the collection order",
                                group.display(a),
                                group.display(b)
                            )));
                        }
                    }
                }
            }
            group.table = Some(table);
        }
        group.check_latin_rows(opts)?;
        group.check_associativity(opts)?;
        group.inverses = group.compute_inverses()?;
        // Keep the pc generators that are not already generated by earlier ones.
        let mut gens: Vec<usize> = Vec::new();
        let mut span = group.closure(&gens);
        for i in 0..n {
            let mut e = vec![0u32; n];
            e[i] = 1;
            let g = group.pc_index(&e);
            if !span[g] {
                gens.push(g);
                span = group.closure(&gens);
            }
        }
        group.generators = gens;
        Ok(group)
    }

    pub fn from_permutations(
        name: &str,
        perms: &PermutationGenSet,
        opts: &BuildOptions,
    ) -> Result<Self> {
        let d = perms.degree();
        let identity: Vec<u32> = (0..d as u32).collect();
        let gens: Vec<&Vec<u32>> = perms.generators().iter().map(|(_, g)| g).collect();
        let mut seen: HashMap<Vec<u32>, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut frontier = vec![identity];
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y: Vec<u32> = x.iter().map(|&i| g[i as usize]).collect();
                if !seen.contains_key(&y) {
                    if seen.len() >= opts.budget {
                        return Err(Error::BudgetExceeded { budget: opts.budget });
                    }
                    seen.insert(y.clone(), ());
                    frontier.push(y);
                }
            }
        }
        let mut all: Vec<Vec<u32>> = seen.into_keys().collect();
        all.sort();
        let index: HashMap<Vec<u32>, u32> = all
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i as u32))
            .collect();
        let inverses = all
            .iter()
            .map(|v| {
                let mut inv = vec![0u32; d];
                for (i, &x) in v.iter().enumerate() {
                    inv[x as usize] = i as u32;
                }
                index[&inv]
            })
            .collect();
        let generators = gens.iter().map(|g| index[*g] as usize).collect();
        let order = all.len();
        let mut group = Self {
            id: next_id(),
            name: name.to_string(),
            backend: Backend::Perm {
                generators: perms.clone(),
                index,
            },
            elements: all.into_iter().map(GroupElement::Images).collect(),
            table: None,
            inverses,
            generators,
            orders: OnceLock::new(),
        };
        if order <= TABLE_LIMIT {
            let mut table = vec![0u32; order * order];
            for a in 0..order {
                for b in 0..order {
                    table[a * order + b] = group.mul_backend(a, b)? as u32;
                }
            }
            group.table = Some(table);
        }
        Ok(group)
    }

    /// Table-backed group; used for quotients. `table` is row-major and
    /// must describe a group with identity at index 0.
    pub(crate) fn from_table(
        name: &str,
        elements: Vec<GroupElement>,
        table: Vec<u32>,
        generators: Vec<usize>,
    ) -> Result<Self> {
        let n = elements.len();
        let mut group = Self {
            id: next_id(),
            name: name.to_string(),
            backend: Backend::Quotient,
            elements,
            table: Some(table),
            inverses: Vec::new(),
            generators,
            orders: OnceLock::new(),
        };
        debug_assert!(n > 0);
        group.inverses = group.compute_inverses()?;
        Ok(group)
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn backend(&self) -> BackendKind {
        match self.backend {
            Backend::Pc { .. } => BackendKind::Pc,
            Backend::Perm { .. } => BackendKind::Perm,
            Backend::Quotient => BackendKind::Quotient,
        }
    }

    pub fn presentation(&self) -> Option<&PcPresentation> {
        match &self.backend {
            Backend::Pc { presentation, .. } => Some(presentation),
            _ => None,
        }
    }

    pub fn permutation_generators(&self) -> Option<&PermutationGenSet> {
        match &self.backend {
            Backend::Perm { generators, .. } => Some(generators),
            _ => None,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub const IDENTITY: usize = 0;

    pub fn identity(&self) -> usize {
        0
    }

    /// Generator indices. For pc groups these are the pc generators not
    /// generated by their predecessors.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn element(&self, idx: usize) -> &GroupElement {
        &self.elements[idx]
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn display(&self, idx: usize) -> String {
        self.elements[idx].to_string()
    }

    /// Index of a canonical form, or `ForeignElement`.
    pub fn index_of(&self, x: &GroupElement) -> Result<usize> {
        match (&self.backend, x) {
            (Backend::Pc { presentation, .. }, GroupElement::Exponents(v)) => {
                let p = presentation.prime();
                if v.len() != presentation.ngens() || v.iter().any(|&e| e >= p) {
                    return Err(Error::ForeignElement);
                }
                Ok(self.pc_index(v))
            }
            (Backend::Perm { index, .. }, GroupElement::Images(v)) => index
                .get(v)
                .map(|&i| i as usize)
                .ok_or(Error::ForeignElement),
            (Backend::Quotient, GroupElement::Coset(_)) => self
                .elements
                .binary_search(x)
                .map_err(|_| Error::ForeignElement),
            _ => Err(Error::ForeignElement),
        }
    }

    fn pc_index(&self, v: &[u32]) -> usize {
        let p = match &self.backend {
            Backend::Pc { presentation, .. } => presentation.prime() as usize,
            _ => unreachable!(),
        };
        v.iter().fold(0usize, |acc, &e| acc * p + e as usize)
    }

    /// Cayley table from right multiplication by single generators:
    /// `a * b = (a * b') * g_k` where `b'` is `b` with its last nonzero
    /// exponent lowered by one.
    fn pc_table(&self, n: usize, p: usize) -> Result<Vec<u32>> {
        let order = self.order();
        let gen_index: Vec<usize> = (0..n).map(|k| p.pow((n - 1 - k) as u32)).collect();
        let mut right = vec![0u32; order * n];
        for x in 0..order {
            for k in 0..n {
                right[x * n + k] = self.mul_backend(x, gen_index[k])? as u32;
            }
        }
        let last: Vec<(usize, usize)> = (1..order)
            .map(|b| {
                let k = (0..n).rev().find(|&k| (b / gen_index[k]) % p != 0).expect("b is not the identity");
                (b - gen_index[k], k)
            })
            .collect();
        let mut table = vec![0u32; order * order];
        for (a, row) in table.chunks_mut(order).enumerate() {
            row[0] = a as u32;
            for b in 1..order {
                let (prev, k) = last[b - 1];
                row[b] = right[row[prev] as usize * n + k];
            }
        }
        Ok(table)
    }

    fn mul_backend(&self, a: usize, b: usize) -> Result<usize> {
        match (&self.backend, &self.elements[a], &self.elements[b]) {
            (Backend::Pc { collector, .. }, GroupElement::Exponents(x), GroupElement::Exponents(y)) => {
                let z = collector.multiply(x, y)?;
                Ok(self.pc_index(&z))
            }
            (Backend::Perm { index, .. }, GroupElement::Images(x), GroupElement::Images(y)) => {
                let z: Vec<u32> = x.iter().map(|&i| y[i as usize]).collect();
                Ok(index[&z] as usize)
            }
            _ => unreachable!("table-backed groups always carry a table"),
        }
    }

    // --- index-level arithmetic -------------------------------------------

    /// Product of two element indices.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self
                .mul_backend(a, b)
                .expect("collection on a verified presentation"),
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let mut base = if k < 0 { self.inv(a) } else { a };
        let mut e = k.unsigned_abs();
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x^{-1} y^{-1} x y`.
    #[inline]
    pub fn comm(&self, x: usize, y: usize) -> usize {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        self.mul(self.inv(yx), xy)
    }

    /// `y^{-1} x y`.
    #[inline]
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), x), y)
    }

    /// Left-normed `[x_1, ..., x_k]`.
    pub fn long_comm(&self, xs: &[usize]) -> Result<usize> {
        let (&first, rest) = xs.split_first().ok_or(Error::EmptySequence)?;
        Ok(rest.iter().fold(first, |acc, &x| self.comm(acc, x)))
    }

    /// `[g, n x]`.
    pub fn engel(&self, g: usize, x: usize, n: usize) -> usize {
        (0..n).fold(g, |acc, _| self.comm(acc, x))
    }

    pub fn order_of(&self, a: usize) -> u64 {
        self.orders()[a]
    }

    /// Orders of all elements, by index.
    pub fn orders(&self) -> &[u64] {
        self.orders.get_or_init(|| {
            (0..self.order())
                .map(|a| {
                    let mut t = 1;
                    let mut x = a;
                    while x != 0 {
                        x = self.mul(x, a);
                        t += 1;
                    }
                    t
                })
                .collect()
        })
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.orders().iter().fold(1, |acc, &o| lcm(acc, o))
    }

    /// `Some(p)` when the order is a power of the prime `p` (`None` for the
    /// trivial group).
    pub fn p_group_prime(&self) -> Option<u64> {
        prime_power(self.order() as u64).map(|(p, _)| p)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Membership vector of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    frontier.push(y);
                }
            }
        }
        member
    }

    // --- typed API ----------------------------------------------------------

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        let (a, b) = (self.index_of(a)?, self.index_of(b)?);
        Ok(self.elements[self.mul(a, b)].clone())
    }

    pub fn inverse(&self, a: &GroupElement) -> Result<GroupElement> {
        Ok(self.elements[self.inv(self.index_of(a)?)].clone())
    }

    pub fn power(&self, a: &GroupElement, k: i64) -> Result<GroupElement> {
        Ok(self.elements[self.pow(self.index_of(a)?, k)].clone())
    }

    pub fn commutator(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        let (x, y) = (self.index_of(x)?, self.index_of(y)?);
        Ok(self.elements[self.comm(x, y)].clone())
    }

    pub fn long_commutator(&self, xs: &[GroupElement]) -> Result<GroupElement> {
        let idx = xs
            .iter()
            .map(|x| self.index_of(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.elements[self.long_comm(&idx)?].clone())
    }

    pub fn engel_word(&self, g: &GroupElement, x: &GroupElement, n: usize) -> Result<GroupElement> {
        let (g, x) = (self.index_of(g)?, self.index_of(x)?);
        Ok(self.elements[self.engel(g, x, n)].clone())
    }

    pub fn element_order(&self, a: &GroupElement) -> Result<u64> {
        Ok(self.order_of(self.index_of(a)?))
    }

    // --- validation ---------------------------------------------------------

    fn check_latin_rows(&self, opts: &BuildOptions) -> Result<()> {
        let n = self.order();
        if n > opts.exhaustive_limit.max(TABLE_LIMIT) || self.table.is_none() {
            return Ok(());
        }
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(a, b);
                if seen[c] == a {
                    return Err(Error::InconsistentPresentation(format!(
                        "left multiplication by {} is not injective",
                        self.display(a)
                    )));
                }
                seen[c] = a;
            }
        }
        Ok(())
    }

    fn check_associativity(&self, opts: &BuildOptions) -> Result<()> {
        let n = self.order();
        let fail = |a: usize, b: usize, c: usize| {
            Error::InconsistentPresentation(format!(
                "({} * {}) * {} differs from {} * ({} * {})",
                self.display(a),
                self.display(b),
                self.display(c),
                self.display(a),
                self.display(b),
                self.display(c)
            ))
        };
        if n <= opts.exhaustive_limit {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(fail(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            for _ in 0..opts.sampled_triples {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                let lhs = self.mul_backend(self.mul_backend(a, b)?, c)?;
                let rhs = self.mul_backend(a, self.mul_backend(b, c)?)?;
                if lhs != rhs {
                    return Err(fail(a, b, c));
                }
            }
        }
        Ok(())
    }

    fn compute_inverses(&self) -> Result<Vec<u32>> {
        let n = self.order();
        let mut inv = vec![u32::MAX; n];
        for a in 0..n {
            if inv[a] != u32::MAX {
                continue;
            }
            // walk powers of a until the identity
            let mut prev = 0usize;
            let mut x = a;
            let mut steps = 0usize;
            while x != 0 {
                prev = x;
                x = self.mul(x, a);
                steps += 1;
                if steps > n {
                    return Err(Error::InconsistentPresentation(format!(
                        "{} has no inverse",
                        self.display(a)
                    )));
                }
            }
            // a^{t-1} is the inverse of a
            inv[a] = if a == 0 { 0 } else { prev as u32 };
        }
        Ok(inv)
    }
}

fn pc_digits(mut idx: usize, p: u32, n: usize) -> Vec<u32> {
    let mut v = vec![0u32; n];
    for slot in v.iter_mut().rev() {
        *slot = (idx % p as usize) as u32;
        idx /= p as usize;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> BuildOptions {
        BuildOptions::default()
    }

    fn dihedral8_pc() -> FiniteGroup {
        let mut pc = PcPresentation::new(2, 3).unwrap();
        pc.set_power(2, vec![(3, 1)]).unwrap();
        pc.set_commutator(2, 1, vec![(3, 1)]).unwrap();
        FiniteGroup::from_pc("D8", &pc, &opts()).unwrap()
    }

    fn s3() -> FiniteGroup {
        let mut p = PermutationGenSet::new(3);
        p.add_cycles("a", "(1 2)").unwrap();
        p.add_cycles("b", "(1 2 3)").unwrap();
        FiniteGroup::from_permutations("S3", &p, &opts()).unwrap()
    }

    fn g(v: &[u32]) -> GroupElement {
        GroupElement::Exponents(v.to_vec())
    }

    fn perm(c: &str, d: usize) -> GroupElement {
        GroupElement::Images(parse_cycles(c, d).unwrap())
    }

    #[test]
    fn dihedral_basics() {
        let d8 = dihedral8_pc();
        assert_eq!(d8.order(), 8);
        assert_eq!(d8.power(&g(&[0, 1, 0]), 2).unwrap(), g(&[0, 0, 1]));
        assert_eq!(d8.commutator(&g(&[0, 1, 0]), &g(&[1, 0, 0])).unwrap(), g(&[0, 0, 1]));
        assert_eq!(d8.element_order(&g(&[0, 1, 0])).unwrap(), 4);
        assert_eq!(d8.exponent(), 4);
        assert_eq!(d8.generators().len(), 2);
        let g1g2 = d8.multiply(&g(&[1, 0, 0]), &g(&[0, 1, 0])).unwrap();
        assert_eq!(d8.element_order(&g1g2).unwrap(), 2);
        // [g1, g2, g2] = 1 in a class-2 group
        assert_eq!(d8.engel_word(&g(&[1, 0, 0]), &g(&[0, 1, 0]), 2).unwrap(), g(&[0, 0, 0]));
    }

    #[test]
    fn symmetric_three() {
        let s3 = s3();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.exponent(), 6);
        let t = perm("(1 2)", 3);
        assert_eq!(s3.multiply(&t, &t).unwrap(), perm("()", 3));
        assert_eq!(s3.inverse(&perm("(1 2 3)", 3)).unwrap(), perm("(1 3 2)", 3));
        assert_eq!(s3.power(&t, 0).unwrap(), perm("()", 3));
        // apply (1 2) then (1 2 3): 1 -> 2 -> 3
        assert_eq!(
            s3.multiply(&t, &perm("(1 2 3)", 3)).unwrap(),
            perm("(1 3)", 3)
        );
    }

    #[test]
    fn foreign_and_empty() {
        let s3 = s3();
        assert!(matches!(
            s3.multiply(&g(&[1]), &perm("()", 3)),
            Err(Error::ForeignElement)
        ));
        assert!(matches!(s3.long_commutator(&[]), Err(Error::EmptySequence)));
        let x = perm("(1 2)", 3);
        assert_eq!(s3.long_commutator(&[x.clone()]).unwrap(), x);
    }

    #[test]
    fn inconsistent_presentation_rejected() {
        // C_2 with [g2, g1] = g3 but g3 central of order 2 and g1^2 = g2:
        // g1 commutes with g1^2 = g2, forcing [g2, g1] = 1.
        let mut pc = PcPresentation::new(2, 3).unwrap();
        pc.set_power(1, vec![(2, 1)]).unwrap();
        pc.set_commutator(2, 1, vec![(3, 1)]).unwrap();
        let err = FiniteGroup::from_pc("bad", &pc, &opts()).unwrap_err();
        assert!(matches!(err, Error::InconsistentPresentation(_)), "{err}");
    }

    #[test]
    fn budget_exceeded() {
        let pc = PcPresentation::new(2, 5).unwrap();
        let o = BuildOptions { budget: 16, ..opts() };
        assert!(matches!(
            FiniteGroup::from_pc("E32", &pc, &o),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
