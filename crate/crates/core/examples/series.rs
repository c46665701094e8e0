//! Lower central, derived and dimension series of the dihedral group of
//! order 16, then Fitting heights of a few permutation groups.

use grouplab::group::{BuildOptions, FiniteGroup, PcPresentation, PermutationGenSet};
use grouplab::series::{
    derived_series, dimension_series, fitting_height, lower_central_series, structure_predicates, verify_np_series,
};

fn main() -> grouplab::Result<()> {
    let mut pc = PcPresentation::new(2, 4)?;
    pc.set_power(2, vec![(3, 1)])?;
    pc.set_power(3, vec![(4, 1)])?;
    pc.set_commutator(2, 1, vec![(3, 1), (4, 1)])?;
    pc.set_commutator(3, 1, vec![(4, 1)])?;
    let d16 = FiniteGroup::from_pc("D16", &pc, &BuildOptions::default())?;

    println!("{}: order {}, exponent {}", d16.name(), d16.order(), d16.exponent());
    println!("lower central  {:?}", lower_central_series(&d16).orders());
    println!("derived        {:?}", derived_series(&d16).orders());
    let dims = dimension_series(&d16, 2)?;
    println!("dimension      {:?}", dims.orders());
    println!("N_p-series     {}", verify_np_series(&d16, &dims, 2)?.passed());
    println!("{:?}", structure_predicates(&d16));

    for (name, gens) in [
        ("S3", &["(1 2 3)", "(1 2)"][..]),
        ("A4", &["(1 2 3)", "(1 2)(3 4)"][..]),
        ("S4", &["(1 2 3 4)", "(1 2)"][..]),
    ] {
        let mut perms = PermutationGenSet::new(4);
        for (k, c) in gens.iter().enumerate() {
            perms.add_cycles(&format!("x{k}"), c)?;
        }
        let g = FiniteGroup::from_permutations(name, &perms, &BuildOptions::default())?;
        println!("{name}: order {}, Fitting height {}", g.order(), fitting_height(&g)?);
    }
    Ok(())
}
