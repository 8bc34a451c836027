// osp(1,2) deformed by alpha_lambda: Hom-Lie for every lambda, but with the
// identity twist the Jacobi identity fails unless lambda = 1.

use hom_nambu::axioms::check_hom_jacobi;
use hom_nambu::catalog::{self, Params};
use hom_nambu::map::GradedLinearMap;
use hom_nambu::report::CheckOptions;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let opts = CheckOptions::with_cap(3);
    for l in ["1", "2", "-1/3"] {
        let f = catalog::build("osp12", &Params::parse(&format!("lambda={l}"))?)?;
        let twisted = check_hom_jacobi(&f.algebra, &opts)?;
        let plain = f.algebra.with_twists(vec![GradedLinearMap::identity(5)])?;
        let untwisted = check_hom_jacobi(&plain, &opts)?;
        println!(
            "lambda={l:5} twisted {} untwisted {} ({} failing triples)",
            twisted.passed, untwisted.passed, untwisted.failures
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
