//! Runs every reproduction check, one line per row. Exits non-zero when
//! any row fails.

use std::process::ExitCode;
use std::thread::available_parallelism;

use minor_density::verify::{run_all, VerifyOptions};

fn main() -> ExitCode {
    let opts = VerifyOptions {
        deep: true,
        jobs: available_parallelism().map(|n| n.get()).unwrap_or(1),
        ..VerifyOptions::default()
    };
    let results = run_all(&opts, |r| {
        let mark = if r.passed { "pass" } else { "FAIL" };
        println!("[{mark}] {:>3} {:<36} {:>9.2?}  {}", r.id, r.title, r.elapsed, r.detail);
    });
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} rows, {} failed", results.len(), failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
