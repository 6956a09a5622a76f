//! Iwahori-Hecke operators on compactly induced representations.
//!
//! Builds a few vectors by hand, applies T12, T-10, T10, and then runs the
//! randomized relation suite for the primes given on the command line
//! (default 5). `cargo run --example hecke_relations -- 5 7`

use modp_reduction::exactnum::FpElt;
use modp_reduction::hecke::{apply_operator, hecke_check, Character, GroupElt, HeckeAlgebra, HeckeOp, InducedVec};

fn main() {
    let p = 5;
    let chi = Character::new(p, 2, 2);
    let origin = InducedVec::basis(chi, &GroupElt::identity(), FpElt::one(p));

    let t12 = apply_operator(HeckeOp::T12, &origin).unwrap();
    println!("T12 [[id, 1]] on ind {chi}:");
    print!("{}", t12.debug_dump());

    let mut alg = HeckeAlgebra::new(p);
    let lhs = alg.apply_word(&[HeckeOp::T12, HeckeOp::T10, HeckeOp::T12], &origin).unwrap();
    println!("T12 T10 T12 + T12 vanishes: {}", lhs.add(&t12).is_zero());

    let chi = Character::new(p, 1, 3);
    let origin = InducedVec::basis(chi, &GroupElt::identity(), FpElt::one(p));
    let both = alg.apply_word(&[HeckeOp::Tm10, HeckeOp::T12], &origin).unwrap();
    println!("T-10 T12 [[id, 1]] on ind {chi} has {} terms", both.len());

    let primes: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let primes = if primes.is_empty() { vec![5] } else { primes };
    for p in primes {
        let outcomes = hecke_check(p, 100, 0);
        let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed()).collect();
        println!("p = {p}: {} relation checks, {} failed", outcomes.len(), failed.len());
        for o in failed {
            println!("  {o}");
        }
    }
}
