//! Running command-line jobs from code: plain text, LaTeX and exact JSON.
//!
//! ```bash
//! cargo run -p qozeta --example cli_jobs
//! ```

use qozeta::cli::{emit_json, execute, run, Command, JobSpec};

fn main() -> qozeta::Result<()> {
    let job = JobSpec::new(Command::Ztop, "z^3-x^5", &["x", "z"]);
    let report = execute(&job)?;
    println!("plain: {}\nlatex: {}", report.plain, report.latex);
    println!("{}", emit_json(&report));

    // The same driver the binary uses, with captured streams and an exit code.
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(["qozeta", "validate", "--vars", "x1,x2,z", "z^3+x1*x2"], &mut out, &mut err);
    print!("exit {code}: {}", String::from_utf8_lossy(&out));
    let code = run(["qozeta", "ztop", "(z^2-x^3)^2"], &mut out, &mut err);
    print!("exit {code}: {}", String::from_utf8_lossy(&err));
    Ok(())
}
