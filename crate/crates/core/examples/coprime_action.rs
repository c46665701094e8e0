//! A Klein four group acting on C3 x C3 by independent inversions.

use grouplab::group::{Automorphism, BuildOptions, FiniteGroup, PcPresentation};
use grouplab::lie::{build_dl, centralizer_subalgebra, induced_action, plus_minus_split};
use grouplab::series::centralizer;

fn main() -> grouplab::Result<()> {
    let pc = PcPresentation::new(3, 2)?;
    let g = FiniteGroup::from_pc("C3xC3", &pc, &BuildOptions::default())?;
    let gens = g.generators().to_vec();
    let (x, y) = (gens[0], gens[1]);

    let a = Automorphism::from_images(&g, &gens, &[g.inv(x), y])?;
    let b = Automorphism::from_images(&g, &gens, &[x, g.inv(y)])?;
    let c = a.then(&b);

    for (name, phi) in [("a", &a), ("b", &b), ("ab", &c)] {
        let fixed = centralizer(&g, std::slice::from_ref(phi))?;
        println!("C_G({name}) has order {}", fixed.order());
    }
    println!("C_G(A) has order {}", centralizer(&g, &[a.clone(), b.clone()])?.order());

    let l = build_dl(&g, 3)?;
    let la = induced_action(&a, &g, &l)?;
    let lb = induced_action(&b, &g, &l)?;
    let (fixed, closed) = centralizer_subalgebra(&l, &[la.clone(), lb])?;
    println!("fixed subalgebra dims {:?}, closed {closed}", fixed.dims());

    let split = plus_minus_split(&l, &la)?;
    println!(
        "a splits L into + {:?} and - {:?}; containments hold: {}",
        split.plus.dims(),
        split.minus.dims(),
        split.passed()
    );
    Ok(())
}
