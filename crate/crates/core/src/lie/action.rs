use crate::error::{Error, Result};
use crate::group::{Automorphism, FiniteGroup};
use crate::linalg::{Matrix, Subspace};
use crate::series::Subgroup;

use super::{GradedLieRing, GradedSubspace, LieElement};

/// Automorphism of a graded algebra given by one matrix per component
/// (acting on row vectors of local coordinates).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAutomorphism {
    algebra: u64,
    matrices: Vec<Matrix>,
}

impl GradedAutomorphism {
    pub fn identity(l: &GradedLieRing) -> Self {
        Self {
            algebra: l.id,
            matrices: (1..=l.top_degree())
                .map(|d| Matrix::identity(l.component_dim(d), l.p))
                .collect(),
        }
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// Matrix on `L_degree`.
    pub fn matrix(&self, degree: usize) -> &Matrix {
        &self.matrices[degree - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.matrices.iter().all(Matrix::is_identity)
    }

    pub fn compose(&self, other: &GradedAutomorphism) -> GradedAutomorphism {
        GradedAutomorphism {
            algebra: self.algebra,
            matrices: self
                .matrices
                .iter()
                .zip(&other.matrices)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn apply(&self, l: &GradedLieRing, u: &LieElement) -> Result<LieElement> {
        if u.algebra != self.algebra || l.id != self.algebra {
            return Err(Error::MismatchedAlgebra);
        }
        Ok(l.element(self.apply_coords(l, &u.coords)))
    }

    fn apply_coords(&self, l: &GradedLieRing, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0; l.dim];
        for d in 1..=l.top_degree() {
            let r = l.component_range(d);
            let img = self.matrices[d - 1].apply(&v[r.clone()]);
            out[r].copy_from_slice(&img);
        }
        out
    }
}

/// The action of a group automorphism on `DL(G)`, verified to preserve every
/// `D_i` and to commute with the bracket on basis pairs.
pub fn induced_action(
    phi: &Automorphism,
    g: &FiniteGroup,
    l: &GradedLieRing,
) -> Result<GradedAutomorphism> {
    if phi.group_id() != l.group || g.id() != l.group {
        return Err(Error::MismatchedParent);
    }
    let mut matrices = Vec::with_capacity(l.top_degree());
    for d in 1..=l.top_degree() {
        let term = l.series.term(d).unwrap();
        if term.elements().iter().any(|&x| !term.contains(phi.apply_idx(x))) {
            return Err(Error::ActionNotWellDefined { degree: d });
        }
        let rows: Vec<Vec<u32>> = l
            .component_range(d)
            .map(|a| {
                l.local_coords(phi.apply_idx(l.rep(a)), d)
                    .map(<[u32]>::to_vec)
                    .ok_or(Error::ActionNotWellDefined { degree: d })
            })
            .collect::<Result<_>>()?;
        let m = Matrix::from_rows(&rows, l.p);
        if m.rank() != m.size() {
            return Err(Error::ActionNotWellDefined { degree: d });
        }
        matrices.push(m);
    }
    let action = GradedAutomorphism {
        algebra: l.id,
        matrices,
    };
    for a in 0..l.dim {
        for b in 0..l.dim {
            let ea = super::unit(l.dim, a);
            let eb = super::unit(l.dim, b);
            let lhs = action.apply_coords(l, &l.bracket_coords(&ea, &eb));
            let rhs = l.bracket_coords(&action.apply_coords(l, &ea), &action.apply_coords(l, &eb));
            if lhs != rhs {
                return Err(Error::ActionNotWellDefined {
                    degree: l.basis_degree(a) + l.basis_degree(b),
                });
            }
        }
    }
    Ok(action)
}

/// Per-component common fixed space of `phis`, with its bracket-closure verdict.
pub fn centralizer_subalgebra(
    l: &GradedLieRing,
    phis: &[GradedAutomorphism],
) -> Result<(GradedSubspace, bool)> {
    if phis.iter().any(|phi| phi.algebra != l.id) {
        return Err(Error::MismatchedAlgebra);
    }
    let p = l.p;
    let parts = (1..=l.top_degree())
        .map(|d| {
            phis.iter().fold(Subspace::full(p, l.component_dim(d)), |acc, phi| {
                acc.intersect(&phi.matrix(d).add_scalar(p - 1).left_kernel())
            })
        })
        .collect();
    let s = GradedSubspace::new(l, parts);
    let closed = s.is_bracket_closed(l);
    Ok((s, closed))
}

/// `L(G, H) = ⊕ (D_j ∩ H) D_{j+1} / D_{j+1}`.
pub fn subgroup_graded_algebra(
    g: &FiniteGroup,
    l: &GradedLieRing,
    h: &Subgroup,
) -> Result<GradedSubspace> {
    if h.parent_id() != g.id() || g.id() != l.group {
        return Err(Error::MismatchedParent);
    }
    let parts = (1..=l.top_degree())
        .map(|d| {
            let term = l.series.term(d).unwrap();
            let vectors = h
                .elements()
                .iter()
                .filter(|&&x| term.contains(x))
                .map(|&x| l.local_coords(x, d).expect("x lies in D_d").to_vec());
            Subspace::span(l.p, l.component_dim(d), vectors)
        })
        .collect();
    Ok(GradedSubspace::new(l, parts))
}

/// Eigenspace split of an involution in odd characteristic.
#[derive(Debug, Clone)]
pub struct PlusMinusSplit {
    pub plus: GradedSubspace,
    pub minus: GradedSubspace,
    /// `L = L+ ⊕ L-` in every component.
    pub direct_sum: bool,
    /// `[L+,L+] <= L+`, `[L+,L-] <= L-`, `[L-,L-] <= L+`.
    pub containments: [bool; 3],
}

impl PlusMinusSplit {
    pub fn passed(&self) -> bool {
        self.direct_sum && self.containments.iter().all(|&c| c)
    }
}

pub fn plus_minus_split(l: &GradedLieRing, phi: &GradedAutomorphism) -> Result<PlusMinusSplit> {
    if phi.algebra != l.id {
        return Err(Error::MismatchedAlgebra);
    }
    let p = l.p;
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if !phi.compose(phi).is_identity() {
        return Err(Error::NotInvolution);
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    let mut direct_sum = true;
    for d in 1..=l.top_degree() {
        let m = phi.matrix(d);
        let fixed = m.add_scalar(p - 1).left_kernel();
        let negated = m.add_scalar(1).left_kernel();
        direct_sum &= fixed.dim() + negated.dim() == l.component_dim(d)
            && fixed.intersect(&negated).dim() == 0;
        plus.push(fixed);
        minus.push(negated);
    }
    let plus = GradedSubspace::new(l, plus);
    let minus = GradedSubspace::new(l, minus);
    let lands = |a: &GradedSubspace, b: &GradedSubspace, target: &GradedSubspace| {
        let bb = b.global_basis(l);
        a.global_basis(l)
            .iter()
            .all(|u| bb.iter().all(|v| target.contains(l, &l.bracket_coords(u, v))))
    };
    let containments = [
        lands(&plus, &plus, &plus),
        lands(&plus, &minus, &minus),
        lands(&minus, &minus, &plus),
    ];
    Ok(PlusMinusSplit {
        plus,
        minus,
        direct_sum,
        containments,
    })
}

#[cfg(test)]
mod tests {
    use super::super::build_dl;
    use super::super::tests::pc;
    use super::*;
    use crate::series::centralizer;

    #[test]
    fn inversion_on_c9() {
        let c9 = pc(3, 2, &[(1, &[(2, 1)])], &[]);
        let x = c9.generators()[0];
        let inv = Automorphism::from_images(&c9, &[x], &[c9.inv(x)]).unwrap();
        let l = build_dl(&c9, 3).unwrap();
        let a = induced_action(&inv, &c9, &l).unwrap();
        for m in a.matrices() {
            assert_eq!(*m, Matrix::identity(m.size(), 3).add_scalar(1));
        }
        let (c, closed) = centralizer_subalgebra(&l, &[a.clone()]).unwrap();
        assert!(c.is_zero() && closed);
        let split = plus_minus_split(&l, &a).unwrap();
        assert!(split.passed());
        assert_eq!(split.plus.dim(), 0);
        assert_eq!(split.minus.dim(), l.dim());
    }

    #[test]
    fn identity_actions() {
        let c33 = pc(3, 2, &[], &[]);
        let l = build_dl(&c33, 3).unwrap();
        let id = induced_action(&Automorphism::identity(&c33), &c33, &l).unwrap();
        assert!(id.is_identity());
        let (c, _) = centralizer_subalgebra(&l, &[]).unwrap();
        assert_eq!(c.dim(), 2);
        let split = plus_minus_split(&l, &id).unwrap();
        assert_eq!((split.plus.dim(), split.minus.dim()), (2, 0));
        // inversion on the first factor
        let (g1, g2) = (c33.generators()[0], c33.generators()[1]);
        let a = Automorphism::from_images(&c33, &[g1, g2], &[c33.inv(g1), g2]).unwrap();
        let ia = induced_action(&a, &c33, &l).unwrap();
        let split = plus_minus_split(&l, &ia).unwrap();
        assert_eq!((split.plus.dims(), split.minus.dims()), (vec![1], vec![1]));
        let (c, _) = centralizer_subalgebra(&l, &[ia]).unwrap();
        let h = centralizer(&c33, &[a]).unwrap();
        assert_eq!(subgroup_graded_algebra(&c33, &l, &h).unwrap(), c);
    }

    #[test]
    fn even_characteristic_rejected() {
        let d8 = pc(2, 3, &[(2, &[(3, 1)])], &[(2, 1, &[(3, 1)])]);
        let l = build_dl(&d8, 2).unwrap();
        let id = GradedAutomorphism::identity(&l);
        assert!(matches!(plus_minus_split(&l, &id), Err(Error::EvenCharacteristic)));
    }

    #[test]
    fn inner_automorphism_of_dihedral() {
        let d8 = pc(2, 3, &[(2, &[(3, 1)])], &[(2, 1, &[(3, 1)])]);
        let l = build_dl(&d8, 2).unwrap();
        let g1 = d8.generators()[0];
        let a = induced_action(&Automorphism::inner(&d8, g1), &d8, &l).unwrap();
        // central quotients: inner automorphisms act trivially on DL
        assert!(a.is_identity());
        let g2 = d8.generators()[1];
        let h = crate::series::subgroup_from_indices(&d8, [g2]);
        assert_eq!(subgroup_graded_algebra(&d8, &l, &h).unwrap().dims(), vec![1, 1]);
        let t = Subgroup::trivial(&d8);
        assert!(subgroup_graded_algebra(&d8, &l, &t).unwrap().is_zero());
    }
}
