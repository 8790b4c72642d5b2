// Saving a complex as a socx-v1 document, reloading it, and catching a
// corrupted sign with the axiom checker.

use std::error::Error;

use socx::socx::build_yn;
use socx::socx::json::{from_json, to_json, SocxDocument};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let y2 = build_yn(2)?;
    let text = to_json(&y2);
    let back = from_json(&text)?;
    assert_eq!(to_json(&back), text);
    println!("{} round-trips through {} bytes of JSON", back.name(), text.len());

    let mut doc: SocxDocument = serde_json::from_str(&text)?;
    let first = &mut doc.d[0];
    first.terms = -&first.terms;
    println!("negated d-entry {} -> {}", first.from, first.to);
    let broken = doc.into_complex()?;
    let report = broken.validation();
    print!("{report}");
    assert!(!report.ok);
    println!("failed identities: {}", report.failed_axioms().join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
