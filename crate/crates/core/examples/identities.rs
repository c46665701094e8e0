//! Group laws and Lie identities on the Heisenberg group of order 27.

use grouplab::group::{BuildOptions, FiniteGroup, PcPresentation};
use grouplab::identities::{
    engel_index_of_element, group_satisfies, higman_polynomial, holds_identity, is_n_engel_algebra,
    parse_group_word, parse_lie_polynomial,
};
use grouplab::lie::build_dl;

fn main() -> grouplab::Result<()> {
    let mut pc = PcPresentation::new(3, 3)?;
    pc.set_commutator(2, 1, vec![(3, 1)])?;
    let g = FiniteGroup::from_pc("Heis27", &pc, &BuildOptions::default())?;
    let l = build_dl(&g, 3)?;

    for text in ["(pow x0 3)", "(comm x0 x1)", "(comm x0 x1 x2)"] {
        let w = parse_group_word(text)?;
        let v = group_satisfies(&w, &g)?;
        println!("law {text}: holds {} after {} evaluations", v.holds, v.evaluations);
    }

    for text in ["(br x0 x1)", "(br x0 x1 x2)"] {
        let f = parse_lie_polynomial(text)?;
        let v = holds_identity(&f, &l)?;
        println!("identity {text}: holds {} ({:?}, {} tuples)", v.holds, v.mode, v.tuples_checked);
    }

    let h = higman_polynomial(3)?;
    println!("Higman polynomial for n = 3 has {} monomials", h.terms().len());
    println!("holds in the ring: {}", holds_identity(&h, &l)?.holds);
    println!("2-Engel ring: {}", is_n_engel_algebra(&l, 2, 7).holds);

    for x in g.generators() {
        println!("Engel index of {}: {:?}", g.display(*x), engel_index_of_element(&g, *x, 8)?);
    }
    Ok(())
}
