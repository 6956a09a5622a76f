//! The branch log_L with log_L(p) = L, and the coefficient lemma used to
//! build test functions.
//!
//! `cargo run --example padic_log -- 7`

use modp_reduction::exactnum::{int, rat, QuadElt};
use modp_reduction::padiclog::{check_derivative_formula, log_l_eval, log_l_value, solve_coefficients, CoefficientCase};

fn main() {
    let p: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let n = 12;
    let l = QuadElt::parse(&format!("1/2 + 3*sqrt({p})"), p).unwrap();

    let z = rat(3 * p as i64 * p as i64, 2);
    let v = log_l_eval(&z, p, n).unwrap();
    println!("log_L({z}) = {}·L + log(u), log(u) = {} mod {p}^{n}", v.l_multiple, v.unit_log.residue_mod_pk(n));
    println!("with L = {l}: {}", log_l_value(&z, &l, n).unwrap());

    let (a, b) = (rat(5, 3), int(2 * p as i64 + 1));
    let sum = log_l_eval(&a, p, n).unwrap().add(&log_l_eval(&b, p, n).unwrap());
    let prod = log_l_eval(&(&a * &b), p, n).unwrap();
    println!("log(ab) = log a + log b mod {p}^{n}: {}", sum.congruent_mod(&prod, n as i64));

    println!("derivative formula n<=8: {}", (0..=8).all(|n| (0..=n).all(|j| check_derivative_formula(n, j))));

    for case in [CoefficientCase::ShiftedVandermonde, CoefficientCase::FullResidues] {
        let sol = solve_coefficients(case, p, p - 1).unwrap();
        let lambdas: Vec<String> = sol.lambdas.iter().map(|x| x.to_string()).collect();
        println!("{case:?}: lambda = [{}]", lambdas.join(", "));
        println!("  p-integral {}  residues {:?}", sol.p_integral(), sol.residues().iter().map(|r| r.value).collect::<Vec<_>>());
    }
    let sol = solve_coefficients(CoefficientCase::Teichmuller, p, 0).unwrap();
    let moments: Vec<bool> = (0..p as u32 - 1).map(|j| sol.teichmuller_moment(j).is_zero()).collect();
    println!("Teichmuller moments j < p-1 vanish: {moments:?}");
}
