// The end-to-end certificate, driven through the command-line entry
// point in-process.

use std::error::Error;

use socx::cli::{run, EXIT_OK};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(["socx", "--quiet", "certify", "3"], &mut out, &mut err);
    print!("{}", String::from_utf8(out)?);
    eprint!("{}", String::from_utf8(err)?);
    if code != EXIT_OK {
        return Err(format!("certify exited with {code}").into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
