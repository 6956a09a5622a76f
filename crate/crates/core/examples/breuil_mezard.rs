//! Agreement of the boundary constants with the Breuil–Mézard formulas for
//! even k, assuming a_p = +p^{r/2}.
//!
//! `cargo run --example breuil_mezard -- 11`

use modp_reduction::bmcheck::{bm_a, check_a_identity, check_b_identity, check_unit_case, unit_case_samples, SIGN_CONVENTION};
use modp_reduction::exactnum::QuadElt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let p: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(11);
    println!("normalization {SIGN_CONVENTION}");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in (4..p).step_by(2) {
        let bs: Vec<bool> = (1..=(k - 2) / 2).map(|i| matches!(check_b_identity(p, k, i), Ok(true))).collect();
        let a = check_a_identity(p, k).is_ok();
        let samples = unit_case_samples(p, k, 10, &mut rng);
        let unit = check_unit_case(p, k, &samples).is_ok();
        println!("k={k:>2}  b: {bs:?}  a: {a}  unit: {unit}  a(L=0) = {}", bm_a(p, k, &QuadElt::zero(p)));
    }
}
