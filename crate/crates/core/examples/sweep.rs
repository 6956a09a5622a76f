//! Walk L through the valuations ν = v_p(L − H₋ − H₊) for each weight and
//! print where the case changes.
//!
//! `cargo run --example sweep -- 7`

use modp_reduction::classifier::{classify_full, ClassifierInput};
use modp_reduction::cli::default_grid;

fn main() {
    let p: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    for k in 3..=p + 1 {
        println!("k = {k}");
        let mut last = String::new();
        for l in default_grid(p, k) {
            let c = classify_full(&ClassifierInput::new(p, k, l.clone()).unwrap()).unwrap();
            let label = format!("{} i={}", c.case.kind.name(), c.case.i);
            if label != last {
                println!("  nu={:>5}  {label:<24} {}", c.nu.to_string(), c.result);
                last = label;
            }
        }
    }
}
