// A ternary Hom-Nambu superalgebra induced from a binary one by a linear
// form, and a derivation carried over to it.

use hom_nambu::axioms::{check_identities, Identity};
use hom_nambu::catalog::{self, Params};
use hom_nambu::cochains::{check_induction_conditions, phi_induced_bracket, phi_transfer_derivation};
use hom_nambu::derivations::DerivationCandidate;
use hom_nambu::report::CheckOptions;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let opts = CheckOptions::default();
    let f = catalog::build("L1", &Params::parse("a=1,b=3")?)?;
    let phi = f.cochain("phi").ok_or("no phi")?;

    print!("{}", check_induction_conditions(phi, &f.algebra, &opts)?.render_text());
    let g = phi_induced_bracket(phi, &f.algebra, 3)?;
    let v = g.eval_labels(&["e2", "e3", "e3"])?;
    println!("[e2, e3, e3] = {}", g.space().format_element(&v));
    let ids = [Identity::SuperSkew, Identity::Nambu, Identity::Multiplicative];
    print!("{}", check_identities(&g, &ids, &opts)?.render_text());

    let d = DerivationCandidate::new(f.operator("D").ok_or("no D")?.map.clone(), 0);
    let transfer = phi_transfer_derivation(&d, phi, &f.algebra, &opts)?;
    println!("derivation transfer: {:?}", transfer.verdict());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
