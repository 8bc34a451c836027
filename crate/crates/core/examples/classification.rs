// The five 2-dimensional multiplicative Hom-Lie superalgebras, each checked
// at a few parameter values.

use hom_nambu::axioms::check_identities;
use hom_nambu::catalog::{self, Params};
use hom_nambu::report::CheckOptions;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["g1_0_2", "g2_1_1", "g3_1_1", "g4_1_1", "g5_1_1"] {
        for a in ["2", "-3", "1/2"] {
            let f = catalog::build(name, &Params::parse(&format!("a={a}"))?)?;
            let r = check_identities(&f.algebra, &f.profile, &CheckOptions::default())?;
            println!("{name:8} a={a:4} {}", if r.passed { "PASS" } else { "FAIL" });
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
