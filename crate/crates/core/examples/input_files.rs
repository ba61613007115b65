//! Reading an input document, building the instance it describes and
//! running the command line in-process.
//!
//! Run with `cargo run --example input_files`.

use rees_gorenstein::cli::run;
use rees_gorenstein::input::parse_document;
use rees_gorenstein::kernel::PrimeField;

const DOC: &str = "\
# k[x, y] ⋉ (x^2, y^3)
ring idealization
vars x:1 y:1 u:2 v:3
ideal u^2, u*v, v^2, y^3*u - x^2*v
params x^2, y^3
mode both
";

fn main() -> rees_gorenstein::Result<()> {
    let doc = parse_document(DOC)?;
    print!("canonical form:\n{doc}");
    let inst = doc.instance(PrimeField::default())?;
    println!("dimension {}", inst.dim());

    let path = std::env::temp_dir().join("idealization.ring");
    std::fs::write(&path, doc.to_string()).expect("temporary file");
    let inv = run(["reesgor", "check", path.to_str().unwrap()]);
    println!("exit code {}", inv.code);
    for line in inv.stdout.lines().filter(|l| l.starts_with("cond") || l.starts_with("oracle.gorenstein") || l.starts_with("narrative")) {
        println!("  {line}");
    }

    if let Err(e) = parse_document("ring r\nvars x y\nparams x, y^\n") {
        println!("malformed input: {e}");
    }
    Ok(())
}
