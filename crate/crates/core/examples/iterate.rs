// n-ary brackets obtained by iterating a binary Hom-Lie bracket.

use hom_nambu::axioms::{check_identities, Identity};
use hom_nambu::catalog::{self, Params};
use hom_nambu::iterated::{check_ad2_expansion_exhaustive, iterated_bracket};
use hom_nambu::report::CheckOptions;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let opts = CheckOptions::default();
    for name in ["g3_1_1", "g4_1_1"] {
        let f = catalog::build(name, &Params::parse("a=2")?)?;
        for n in 3..=5 {
            let g = iterated_bracket(&f.algebra, n)?;
            let mut args = vec!["e0"; n];
            args[0] = "e1";
            let v = g.eval_labels(&args)?;
            let r = check_identities(&g, &[Identity::Nambu, Identity::Multiplicative], &opts)?;
            println!(
                "{name} n={n}: [e1, e0, ..] = {:8} hom-nambu {}",
                g.space().format_element(&v),
                r.passed
            );
        }
        let ad = check_ad2_expansion_exhaustive(&f.algebra, 3, &opts)?;
        println!("{name} adjoint expansion at n=3: {}", ad.passed);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
