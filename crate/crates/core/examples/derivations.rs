// Spaces of alpha^k-derivations, inner derivations and their brackets.

use hom_nambu::catalog::{self, Params};
use hom_nambu::derivations::{check_derivation_closure, inner_derivation, solve_derivation_space};
use hom_nambu::report::CheckOptions;
use hom_nambu::space::{Element, Parity};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let f = catalog::build("g5_1_1", &Params::parse("a=2")?)?;
    let space = f.algebra.space();
    for k in 0..=2 {
        for parity in [Parity::Even, Parity::Odd] {
            let basis = solve_derivation_space(&f.algebra, k, parity)?;
            println!("k={k} parity {parity}: dimension {}", basis.len());
            for d in &basis {
                println!("  {}", d.format_with(space));
            }
        }
    }

    let g = catalog::build("osp12", &Params::parse("lambda=1")?)?;
    let ad_f = inner_derivation(&g.algebra, &[Element::basis(3)], 0)?;
    let ad_h = inner_derivation(&g.algebra, &[Element::basis(2)], 0)?;
    println!("ad F: {}", ad_f.map.format_with(g.algebra.space()));
    let closure = check_derivation_closure(&ad_f, &ad_h, &g.algebra, &CheckOptions::default())?;
    print!("{}", closure.render_text());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
