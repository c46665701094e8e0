use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::series::{product_set, subgroup_from_indices};

use super::GradedLieRing;

/// Left-normed commutators of weight at most `c` in a generating list,
/// together with the data of the index bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionWitness {
    group: u64,
    pub gens: Vec<usize>,
    /// Nilpotency class of `L_p(G)`.
    pub class: usize,
    /// `(shape, element)` with the shape as 0-based positions in `gens`.
    pub rhos: Vec<(Vec<usize>, usize)>,
    /// Largest order of a `rho_j`.
    pub k_max: u64,
}

impl DecompositionWitness {
    pub fn s(&self) -> usize {
        self.rhos.len()
    }

    /// `K^s`, saturating.
    pub fn bound(&self) -> u128 {
        let mut acc: u128 = 1;
        for _ in 0..self.s() {
            acc = acc.saturating_mul(self.k_max as u128);
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop211Verdict {
    /// Size of `<rho_1>...<rho_s> D_{i+1}` for `i = 0..=m`.
    pub covered: Vec<usize>,
    /// First `i` whose product set misses part of `G`.
    pub failure: Option<usize>,
}

impl Prop211Verdict {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cor214Verdict {
    pub bound: u128,
    /// `|G : D_i|` for `i = 1..=m+1`.
    pub indices: Vec<usize>,
    pub failure: Option<usize>,
}

impl Cor214Verdict {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Shapes `(b_1, ..., b_k)`, `k <= c`, in weight-lexicographic order. Shapes
/// starting `[a, a, ...]` are left out since they are trivial commutators.
fn shapes(m: usize, c: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = (0..m).map(|a| vec![a]).collect();
    for k in 1..=c {
        if k > 1 {
            layer = layer
                .iter()
                .flat_map(|s| {
                    (0..m)
                        .filter(move |&b| k != 2 || b != s[0])
                        .map(move |b| {
                            let mut t = s.clone();
                            t.push(b);
                            t
                        })
                })
                .collect();
        }
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn decomposition_witness(
    g: &FiniteGroup,
    l: &GradedLieRing,
    gens: &[usize],
) -> Result<DecompositionWitness> {
    if l.group_id() != g.id() {
        return Err(Error::MismatchedParent);
    }
    if g.p_group_prime().is_none() && g.order() > 1 {
        return Err(Error::NotAPGroup { order: g.order(), p: l.prime() as u64 });
    }
    if gens.iter().any(|&x| x >= g.order()) {
        return Err(Error::ForeignElement);
    }
    if subgroup_from_indices(g, gens.iter().copied()).order() != g.order() {
        return Err(Error::HypothesisNotMet("generators do not generate the group".into()));
    }
    let class = l.lp_subalgebra().nilpotency_class(l);
    let rhos: Vec<(Vec<usize>, usize)> = shapes(gens.len(), class)
        .into_iter()
        .map(|shape| {
            let letters: Vec<usize> = shape.iter().map(|&b| gens[b]).collect();
            let x = g.long_comm(&letters).expect("shapes are nonempty");
            (shape, x)
        })
        .collect();
    let k_max = rhos.iter().map(|&(_, x)| g.order_of(x)).max().unwrap_or(1);
    Ok(DecompositionWitness { group: g.id(), gens: gens.to_vec(), class, rhos, k_max })
}

/// Checks `G = <rho_1><rho_2>...<rho_s> D_{i+1}` for every `i = 0..=m`.
pub fn check_prop_2_11(
    g: &FiniteGroup,
    l: &GradedLieRing,
    w: &DecompositionWitness,
) -> Result<Prop211Verdict> {
    if w.group != g.id() || l.group_id() != g.id() {
        return Err(Error::MismatchedParent);
    }
    let mut prefix = vec![false; g.order()];
    prefix[g.identity()] = true;
    for &(_, rho) in &w.rhos {
        let cyclic: Vec<usize> =
            (0..g.order_of(rho)).map(|e| g.pow(rho, e as i64)).collect();
        prefix = product_set(g, &prefix, &cyclic);
    }
    let series = l.series();
    let mut covered = Vec::new();
    let mut failure = None;
    for i in 0..=l.top_degree() {
        let next = series.term(i + 1).expect("series ends in the trivial group");
        let size = product_set(g, &prefix, next.elements()).iter().filter(|&&b| b).count();
        if size != g.order() && failure.is_none() {
            failure = Some(i);
        }
        covered.push(size);
    }
    Ok(Prop211Verdict { covered, failure })
}

/// Checks `|G : D_i| <= K^s` for every term of the dimension series.
pub fn check_cor_2_14(
    g: &FiniteGroup,
    l: &GradedLieRing,
    w: &DecompositionWitness,
) -> Result<Cor214Verdict> {
    if w.group != g.id() || l.group_id() != g.id() {
        return Err(Error::MismatchedParent);
    }
    let bound = w.bound();
    let indices: Vec<usize> =
        l.series().terms().iter().map(|d| g.order() / d.order()).collect();
    let failure = indices.iter().position(|&ix| ix as u128 > bound).map(|k| k + 1);
    Ok(Cor214Verdict { bound, indices, failure })
}

#[cfg(test)]
mod tests {
    use super::super::build_dl;
    use super::super::tests::pc;
    use super::*;

    #[test]
    fn shape_counts() {
        assert_eq!(shapes(2, 1).len(), 2);
        assert_eq!(shapes(2, 2), vec![vec![0], vec![1], vec![0, 1], vec![1, 0]]);
        // weight 3: 2 * 1 * 2 new shapes
        assert_eq!(shapes(2, 3).len(), 8);
        assert_eq!(shapes(3, 2).len(), 3 + 6);
    }

    #[test]
    fn dihedral_witness() {
        let d8 = pc(2, 3, &[(2, &[(3, 1)])], &[(2, 1, &[(3, 1)])]);
        let l = build_dl(&d8, 2).unwrap();
        let gens = [d8.generators()[0], d8.generators()[1]];
        let w = decomposition_witness(&d8, &l, &gens).unwrap();
        assert_eq!((w.class, w.s(), w.k_max), (2, 4, 4));
        let (g1, g2) = (gens[0], gens[1]);
        let expected = [g1, g2, d8.comm(g1, g2), d8.comm(g2, g1)];
        assert_eq!(w.rhos.iter().map(|r| r.1).collect::<Vec<_>>(), expected);
        let p = check_prop_2_11(&d8, &l, &w).unwrap();
        assert!(p.passed());
        let c = check_cor_2_14(&d8, &l, &w).unwrap();
        assert_eq!((c.bound, c.indices.clone()), (256, vec![1, 4, 8]));
        assert!(c.passed());
    }

    #[test]
    fn abelian_class_one() {
        let c33 = pc(3, 2, &[], &[]);
        let l = build_dl(&c33, 3).unwrap();
        let w = decomposition_witness(&c33, &l, c33.generators()).unwrap();
        assert_eq!((w.class, w.s()), (1, 2));
        assert!(check_prop_2_11(&c33, &l, &w).unwrap().passed());
    }

    #[test]
    fn non_generating_list_rejected() {
        let c33 = pc(3, 2, &[], &[]);
        let l = build_dl(&c33, 3).unwrap();
        let g1 = c33.generators()[0];
        assert!(matches!(
            decomposition_witness(&c33, &l, &[g1]),
            Err(Error::HypothesisNotMet(_))
        ));
    }
}
