// The 3-Hom-pre-Lie structure {x, y, z} = [Rx, Ry, z] on the simple 3-Lie
// algebra, its sub-adjacent bracket and the image construction.

use hom_nambu::catalog::{self, Params};
use hom_nambu::prelie3::{check_corollary_identities, rb_image_prelie, rb_induced_prelie, sub_adjacent};
use hom_nambu::report::CheckOptions;
use hom_nambu::rotabaxter::RotaBaxterOperator;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let opts = CheckOptions::default();
    let f = catalog::build("a4", &Params::new())?;
    let r = f.operator("R").ok_or("no R")?.map.clone();
    let op = RotaBaxterOperator::zero_weight(r.clone())?;

    let (t, report) = rb_induced_prelie(&f.algebra, &op, &opts)?;
    print!("{}", report.render_text());
    print!("{}", check_corollary_identities(&t, &opts).render_text());
    let (c, sub) = sub_adjacent(&t, &opts)?;
    println!("sub-adjacent {} is 3-Hom-Lie: {}", c.name(), sub.passed);
    let (_, compat) = rb_image_prelie(&f.algebra, &r, &opts)?;
    println!("image construction recovers the bracket: {}", compat.passed);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
