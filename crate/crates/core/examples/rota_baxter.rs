// Rota-Baxter operators on binary and induced ternary brackets.

use hom_nambu::catalog::{self, Params};
use hom_nambu::iterated::iterated_bracket;
use hom_nambu::map::GradedLinearMap;
use hom_nambu::report::CheckOptions;
use hom_nambu::rotabaxter::{
    check_inverse_derivation_equiv, check_phi_rb_kernel_condition, check_rb_binary, check_rb_nary, RotaBaxterOperator,
};
use hom_nambu::scalar::Scalar;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let opts = CheckOptions::default();
    let f = catalog::build("g5_1_1", &Params::parse("a=2")?)?;
    let r = f.operator("R").ok_or("no R")?.map.clone();
    let op = RotaBaxterOperator::zero_weight(r.clone())?;
    println!("R = {}", r.format_with(f.algebra.space()));
    println!("weight 0 on g5: {}", check_rb_binary(&op, &f.algebra, &opts)?.passed);
    let eq = check_inverse_derivation_equiv(&r, &f.algebra, &opts)?;
    println!("R^-1 is a derivation: {}", eq.right.passed);
    for n in 3..=4 {
        let g = iterated_bracket(&f.algebra, n)?;
        println!("weight 0 on the {n}-bracket: {}", check_rb_nary(&op, &g, &opts)?.passed);
    }

    let id = RotaBaxterOperator::new(GradedLinearMap::identity(2), Scalar::from_int(-1))?;
    println!("Id has weight -1: {}", check_rb_binary(&id, &f.algebra, &opts)?.passed);

    let l1 = catalog::build("L1", &Params::new())?;
    let phi = l1.cochain("phi").ok_or("no phi")?;
    for name in ["Z", "P1", "Id", "R"] {
        let m = &l1.operator(name).ok_or("missing operator")?.map;
        let eq = check_phi_rb_kernel_condition(m, phi, &l1.algebra, &opts)?;
        println!(
            "L1 {name:3} kernel condition {} direct {}",
            eq.left.passed, eq.right.passed
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
