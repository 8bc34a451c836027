// Build a Hom-Lie superalgebra from structure constants and check it.

use hom_nambu::algebra::HomSuperAlgebra;
use hom_nambu::axioms::{check_identities, Identity};
use hom_nambu::bracket::NaryBracket;
use hom_nambu::map::GradedLinearMap;
use hom_nambu::report::CheckOptions;
use hom_nambu::scalar::Scalar;
use hom_nambu::space::{Element, Parity, SuperSpace};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let v = SuperSpace::new([("e0", Parity::Even), ("e1", Parity::Odd)])?;
    // [e1, e1] = e0; the rest of the skew orbit is filled in
    let bracket = NaryBracket::skew_from_generators(&v, 2, [(vec![1, 1], Element::basis(0))])?;
    let a = Scalar::from_int(3);
    let alpha = GradedLinearMap::diagonal(&v, &[&a * &a, a])?;
    let alg = HomSuperAlgebra::with_alpha("g5", v, bracket, alpha)?;

    println!(
        "[e1, e1] = {}",
        alg.space().format_element(&alg.eval_labels(&["e1", "e1"])?)
    );
    let report = check_identities(&alg, &Identity::ALL, &CheckOptions::default())?;
    print!("{}", report.render_text());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
