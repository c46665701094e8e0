//! The graded Lie ring of the dihedral group of order 8 over F_2.

use grouplab::group::{BuildOptions, FiniteGroup, PcPresentation};
use grouplab::lie::build_dl;

fn main() -> grouplab::Result<()> {
    let mut pc = PcPresentation::new(2, 3)?;
    pc.set_power(2, vec![(3, 1)])?;
    pc.set_commutator(2, 1, vec![(3, 1)])?;
    let g = FiniteGroup::from_pc("D8", &pc, &BuildOptions::default())?;
    let l = build_dl(&g, 2)?;

    println!("component dims {:?}, total {}", l.component_dims(), l.dim());
    for a in 0..l.dim() {
        println!("e{a}: degree {}, rep {}", l.basis_degree(a), g.display(l.rep(a)));
    }
    for a in 0..l.dim() {
        for b in a + 1..l.dim() {
            println!("[e{a}, e{b}] = {:?}", l.structure_constant(a, b));
        }
    }
    println!("axioms pass: {}", l.check_axioms(&g).passed());
    println!("nilpotency class {}", l.nilpotency_class());

    for x in 1..g.order() {
        let v = l.lazard_check(&g, x)?;
        println!(
            "{:>10}  degree {}  ad index {}  order {}  ok {}",
            g.display(x),
            v.degree,
            v.ad_index,
            v.element_order,
            v.passed()
        );
    }
    Ok(())
}
