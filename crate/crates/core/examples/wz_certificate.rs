//! The WZ pair behind the last harmonic sum: the telescoping identity,
//! the boundary terms, and the recurrence it forces on S(n).
//!
//! `cargo run --example wz_certificate -- 40`

use modp_reduction::exactnum::int;
use modp_reduction::identities::catalog::main17_sum;
use modp_reduction::identities::wz::{certificate_holds, printed_certificate_holds, s_recurrence_defect, wz_r};
use modp_reduction::identities::wz_certificate_check;

fn main() {
    let n_max: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(40);
    println!("R(k, n) at n = 4: {:?}", (1..=5).map(|k| wz_r(k, 4).map(|r| r.to_string())).collect::<Vec<_>>());
    println!("telescoping at k=2 n=4 x=3: {}", certificate_holds(2, 4, &int(3)));
    println!("as first written, k=2 n=4 x=3: {:?}", printed_certificate_holds(2, 4, &int(3)));
    for n in 1..=4 {
        println!("S({n}) = {}  recurrence defect {}", main17_sum(n), s_recurrence_defect(n));
    }
    let xs: Vec<i64> = (0..=5).collect();
    println!("certificate for n <= {n_max}, x in 0..5: {:?}", wz_certificate_check(n_max, &xs));
}
