//! The number systems underneath: Q(√p) with half-integral valuations,
//! residues in F_p and F_{p²}, and Teichmüller lifts.
//!
//! `cargo run --example exact_arithmetic`

use modp_reduction::exactnum::{fp2_solve_monic_quadratic, teichmuller, FpElt, QuadElt};
use num_bigint::BigInt;

fn main() {
    let p = 7;
    for s in ["0", "49/3", "2*sqrt(7)", "1/7 - 5/14*sqrt(7)", "-3/2+1/49*sqrt(7)"] {
        let x = QuadElt::parse(s, p).unwrap();
        let residue = x.residue_mod_pi().map(|r| r.to_string()).unwrap_or_else(|e| e.to_string());
        println!("{s:>20}: v_p = {:>4}  residue {residue}", x.vp().to_string());
    }
    for c in 0..p {
        let (a, b) = fp2_solve_monic_quadratic(FpElt::new(p, c));
        println!("X^2 - {c}X + 1 = (X - ({a}))(X - ({b}))");
    }
    let t = teichmuller(&BigInt::from(3), p, 6);
    println!("[3] mod 7^6 = {}, [3]^6 = {}", t.residue_mod_pk(6), t.pow(6).residue_mod_pk(6));
}
