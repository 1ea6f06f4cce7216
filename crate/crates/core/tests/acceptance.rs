//! Acceptance suite: one PASS/FAIL line per criterion; exits nonzero on any failure.
//! Select criteria by id with arguments, e.g. `cargo test --test acceptance -- 4 9`.

use kacjet::verify::{criteria, run_one};
use kacjet::Caps;

fn main() {
    let wanted: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let caps = Caps::default();
    let mut failed = 0;
    for c in criteria() {
        if !wanted.is_empty() && !wanted.contains(&c.id) {
            continue;
        }
        let o = run_one(&c, &caps);
        println!("{}", o.line());
        if !o.passed {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
