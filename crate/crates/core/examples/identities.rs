//! The binomial-harmonic identity catalog, checked exactly over Q (and
//! mod p for the congruences).
//!
//! `cargo run --example identities -- 30`

use modp_reduction::identities::catalog::{evaluate, main17_sum};
use modp_reduction::identities::{verify_identity, IdentityId, IdentityName};

fn main() {
    let max: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(30);
    for name in IdentityName::ALL {
        let params = name.batch_params(max);
        let bad: Vec<u64> =
            params.iter().copied().filter(|&n| !matches!(verify_identity(IdentityId::new(name, n)), Ok(true))).collect();
        println!("{:<10} {:>3} values of {}  failures {:?}", name.name(), params.len(), name.param_label(), bad);
    }

    let (lhs, rhs) = evaluate(IdentityId::new(IdentityName::Main10, 5)).unwrap();
    println!("MAIN10 at r = 5: {lhs} = {rhs}");
    let s: Vec<String> = (1..=6).map(|n| main17_sum(n).to_string()).collect();
    println!("MAIN17 sums S(1..6): {}", s.join(", "));
}
