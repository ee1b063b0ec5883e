//! Seeded run of the identity oracle.
//!
//! cargo run --release --example oracle_suite -- 4 8

use schur_repdim::oracle::{run_suite, SuiteConfig};

fn main() {
    let mut args = std::env::args().skip(1);
    let max_n = args.next().map_or(3, |s| s.parse().unwrap());
    let max_degree = args.next().map_or(8, |s| s.parse().unwrap());
    let seed = args.next().map_or(0x5eed_2008, |s| s.parse().unwrap());

    let reports = run_suite(&SuiteConfig::new(max_n, max_degree, &[2, 3, 5]).with_seed(seed));
    for rep in &reports {
        println!("{:<5} {:<36} {} checked", if rep.passed() { "PASS" } else { "FAIL" }, rep.identity, rep.checked);
        for f in rep.failures.iter().take(3) {
            println!("      {}: expected {}, got {}", f.inputs, f.expected, f.got);
        }
    }
    if reports.iter().any(|r| !r.passed()) {
        std::process::exit(3);
    }
}
