// Reading and writing algebra files.

use hom_nambu::catalog::{self, Params};
use hom_nambu::format::{emit_algebra, emit_fixture, parse_algebra, parse_fixture};

const FILE: &str = r#"# [e0, e1] = e1 with alpha = diag(1, 2)
{
  "name": "small",
  "basis": [{"label": "e0", "parity": 0}, {"label": "e1", "parity": 1}],
  "arity": 2,
  "twists": [[["1", "0"], ["0", "2"]]],
  "bracket": [{"args": ["e0", "e1"], "value": {"e1": "1"}}],
  "skew_complete": true
}"#;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let alg = parse_algebra(FILE)?;
    let v = alg.eval_labels(&["e1", "e0"])?;
    println!("[e1, e0] = {}", alg.space().format_element(&v));
    print!("{}", emit_algebra(&alg));

    let f = catalog::build("L1", &Params::parse("a=2,b=5")?)?;
    let text = emit_fixture(&f);
    let back = parse_fixture(&text)?;
    println!("L1 round trip identical: {}", emit_fixture(&back) == text);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
