//! Shared fixtures and brute-force oracles for the integration tests.
//!
//! [`Table`] redoes the subgroup computations over a bare multiplication
//! table so results can be compared with the library's own algorithms.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use grouplab::group::FiniteGroup;
use grouplab::harness::{build_fixture, bundled_corpus, BuiltFixture};

pub fn corpus() -> &'static BuiltFixture {
    static CORPUS: OnceLock<BuiltFixture> = OnceLock::new();
    CORPUS.get_or_init(|| build_fixture(&bundled_corpus().unwrap(), &Default::default()))
}

pub fn group(name: &str) -> &'static FiniteGroup {
    corpus().group(name).unwrap()
}

pub fn groups() -> impl Iterator<Item = (&'static str, &'static FiniteGroup)> {
    corpus().groups.iter().map(|(n, g)| (n.as_str(), g.as_ref().unwrap()))
}

pub fn p_groups() -> impl Iterator<Item = (&'static str, &'static FiniteGroup, u64)> {
    groups().filter_map(|(n, g)| g.p_group_prime().map(|p| (n, g, p)))
}

/// Finite group given by its multiplication table, identity at index `e`.
#[derive(Clone, Debug)]
pub struct Table {
    pub n: usize,
    pub mul: Vec<usize>,
    pub e: usize,
    pub inv: Vec<usize>,
}

pub type Set = Vec<bool>;

impl Table {
    pub fn new(n: usize, mul: Vec<usize>) -> Self {
        let e = (0..n).find(|&a| (0..n).all(|x| mul[a * n + x] == x)).expect("identity");
        let inv = (0..n).map(|a| (0..n).find(|&b| mul[a * n + b] == e).expect("inverse")).collect();
        Self { n, mul, e, inv }
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        let n = g.order();
        Self::new(n, (0..n * n).map(|k| g.mul(k / n, k % n)).collect())
    }

    /// Closure of raw permutations (0-based images), composed left to right.
    pub fn from_perms(gens: &[Vec<usize>]) -> (Self, Vec<Vec<usize>>) {
        let d = gens[0].len();
        let mut elems: Vec<Vec<usize>> = vec![(0..d).collect()];
        let mut seen: BTreeSet<Vec<usize>> = elems.iter().cloned().collect();
        let mut k = 0;
        while k < elems.len() {
            for g in gens {
                let y: Vec<usize> = elems[k].iter().map(|&i| g[i]).collect();
                if seen.insert(y.clone()) {
                    elems.push(y);
                }
            }
            k += 1;
        }
        let index: BTreeMap<Vec<usize>, usize> = elems.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let n = elems.len();
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let c: Vec<usize> = elems[a].iter().map(|&i| elems[b][i]).collect();
                mul[a * n + b] = index[&c];
            }
        }
        (Self::new(n, mul), elems)
    }

    pub fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        (0..k).fold(self.e, |x, _| self.m(x, a))
    }

    pub fn comm(&self, a: usize, b: usize) -> usize {
        self.m(self.m(self.inv[a], self.inv[b]), self.m(a, b))
    }

    pub fn order_of(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != self.e {
            x = self.m(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        (0..self.n).map(|a| self.order_of(a)).fold(1, lcm)
    }

    pub fn size(s: &Set) -> usize {
        s.iter().filter(|&&b| b).count()
    }

    pub fn members(s: &Set) -> Vec<usize> {
        (0..s.len()).filter(|&i| s[i]).collect()
    }

    pub fn closure(&self, gens: impl IntoIterator<Item = usize>) -> Set {
        let mut s = vec![false; self.n];
        s[self.e] = true;
        let mut frontier = vec![self.e];
        let gens: Vec<usize> = gens.into_iter().collect();
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.m(x, g);
                if !s[y] {
                    s[y] = true;
                    frontier.push(y);
                }
            }
        }
        s
    }

    pub fn whole(&self) -> Set {
        vec![true; self.n]
    }

    pub fn trivial(&self) -> Set {
        self.closure([])
    }

    pub fn normal_closure(&self, s: &Set) -> Set {
        let conj: Vec<usize> = (0..self.n)
            .flat_map(|g| Self::members(s).into_iter().map(move |x| (g, x)))
            .map(|(g, x)| self.m(self.m(self.inv[g], x), g))
            .collect();
        self.closure(conj)
    }

    pub fn commutator(&self, a: &Set, b: &Set) -> Set {
        let (a, b) = (Self::members(a), Self::members(b));
        self.closure(a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).map(|(x, y)| self.comm(x, y)).collect::<Vec<_>>())
    }

    pub fn power(&self, h: &Set, k: u64) -> Set {
        self.closure(Self::members(h).into_iter().map(|x| self.pow(x, k)).collect::<Vec<_>>())
    }

    pub fn join(&self, a: &Set, b: &Set) -> Set {
        self.closure((0..self.n).filter(|&i| a[i] || b[i]).collect::<Vec<_>>())
    }

    /// `gamma_1 = H, gamma_{i+1} = [gamma_i, H]` until it stabilizes.
    pub fn lower_central(&self, h: &Set) -> Vec<Set> {
        let mut out = vec![h.clone()];
        loop {
            let next = self.commutator(out.last().unwrap(), h);
            if &next == out.last().unwrap() {
                return out;
            }
            out.push(next);
        }
    }

    pub fn gamma(&self, k: usize) -> Set {
        let lcs = self.lower_central(&self.whole());
        lcs.get(k - 1).unwrap_or(lcs.last().unwrap()).clone()
    }

    /// `D_i = prod_{j p^k >= i} gamma_j^{p^k}`, straight from the definition.
    pub fn dimension_term(&self, p: u64, i: usize) -> Set {
        let lcs = self.lower_central(&self.whole());
        let mut d = self.trivial();
        for j in 1..=i.max(1) {
            let gj = lcs.get(j - 1).unwrap_or(lcs.last().unwrap());
            let mut q = 1u64;
            loop {
                if j as u64 * q >= i as u64 {
                    d = self.join(&d, &self.power(gj, q));
                    break;
                }
                q *= p;
            }
        }
        d
    }

    pub fn dimension_series(&self, p: u64) -> Vec<Set> {
        let mut out = vec![self.dimension_term(p, 1)];
        let mut i = 1;
        while Self::size(out.last().unwrap()) > 1 {
            i += 1;
            out.push(self.dimension_term(p, i));
        }
        out
    }

    pub fn is_nilpotent(&self, h: &Set) -> bool {
        Self::size(self.lower_central(h).last().unwrap()) == 1
    }

    /// Join of all nilpotent single-element normal closures.
    pub fn fitting(&self) -> Set {
        let mut f = self.trivial();
        for x in 0..self.n {
            let mut s = vec![false; self.n];
            s[x] = true;
            let nx = self.normal_closure(&s);
            if self.is_nilpotent(&nx) {
                f = self.join(&f, &nx);
            }
        }
        f
    }

    /// `G/N` on cosets; element `k` is the coset with the `k`-th smallest
    /// minimal member.
    pub fn quotient(&self, nsub: &Set) -> Table {
        let mut coset_of = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for x in 0..self.n {
            if coset_of[x] == usize::MAX {
                for k in Self::members(nsub) {
                    coset_of[self.m(x, k)] = reps.len();
                }
                reps.push(x);
            }
        }
        let q = reps.len();
        let mul = (0..q * q).map(|k| coset_of[self.m(reps[k / q], reps[k % q])]).collect();
        Table::new(q, mul)
    }

    pub fn fitting_height(&self) -> usize {
        let mut t = self.clone();
        let mut h = 0;
        while t.n > 1 {
            let f = t.fitting();
            assert!(Self::size(&f) > 1, "not solvable");
            t = t.quotient(&f);
            h += 1;
        }
        h
    }

    /// Searches for an isomorphism to `other` determined by the images of
    /// `gens`. Returns the element map.
    pub fn isomorphism_to(&self, other: &Table, gens: &[usize]) -> Option<Vec<usize>> {
        if self.n != other.n {
            return None;
        }
        let mut images = vec![0usize; gens.len()];
        loop {
            if let Some(map) = self.try_extend(other, gens, &images) {
                return Some(map);
            }
            let mut k = 0;
            loop {
                if k == images.len() {
                    return None;
                }
                images[k] += 1;
                if images[k] < other.n {
                    break;
                }
                images[k] = 0;
                k += 1;
            }
        }
    }

    fn try_extend(&self, other: &Table, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.n];
        map[self.e] = other.e;
        let mut frontier = vec![self.e];
        while let Some(x) = frontier.pop() {
            for (g, &h) in gens.iter().zip(images) {
                let y = self.m(x, *g);
                let fy = other.m(map[x], h);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    frontier.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        if map.contains(&usize::MAX) || map.iter().collect::<BTreeSet<_>>().len() != self.n {
            return None;
        }
        let hom = (0..self.n).all(|a| (0..self.n).all(|b| map[self.m(a, b)] == other.m(map[a], map[b])));
        hom.then_some(map)
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// `(1 2 3)(4 5)` style cycles on `{1..degree}` as 0-based images.
pub fn cycles(text: &str, degree: usize) -> Vec<usize> {
    let mut img: Vec<usize> = (0..degree).collect();
    for cyc in text.split(')').map(|c| c.trim().trim_start_matches('(')).filter(|c| !c.is_empty()) {
        let pts: Vec<usize> = cyc.split_whitespace().map(|t| t.parse::<usize>().unwrap() - 1).collect();
        for k in 0..pts.len() {
            img[pts[k]] = pts[(k + 1) % pts.len()];
        }
    }
    img
}

/// Groups small enough for the quadratic and cubic oracles.
pub fn small_groups() -> impl Iterator<Item = (&'static str, &'static FiniteGroup)> {
    groups().filter(|(_, g)| g.order() <= 512)
}
