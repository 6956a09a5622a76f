//! Build one of the five matrix systems, solve it exactly with L kept
//! symbolic, and compare with the closed forms.
//!
//! `cargo run --example appendix_systems -- B11 7`

use modp_reduction::identities::{build_system, closed_form, solve_affine, verify_appendix, AppendixId};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let id: AppendixId = args.first().and_then(|a| a.parse().ok()).unwrap_or(AppendixId::B11);
    let r: u64 = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(if id.odd() { 7 } else { 8 });

    let sys = match build_system(id, r) {
        Ok(s) => s,
        Err(e) => return eprintln!("{e}"),
    };
    println!("{id} at r = {r}, unknowns x_{:?}", sys.unknowns);
    for (row, b) in sys.matrix.iter().zip(&sys.rhs) {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>8}")).collect();
        println!("  [{}] | {b}", cells.join(" "));
    }
    let x = solve_affine(&sys).unwrap();
    for (m, v) in sys.unknowns.iter().zip(&x) {
        println!("  x_{m} = {v}");
    }
    for t in closed_form(id, r).unwrap() {
        println!("closed form x_{} = {}", t.subscript, t.value);
    }
    println!("verified: {}", verify_appendix(id, r).unwrap_or(false));

    let all = AppendixId::ALL.iter().flat_map(|&id| id.range(40).map(move |r| (id, r)));
    let failures: Vec<_> = all.filter(|&(id, r)| !matches!(verify_appendix(id, r), Ok(true))).collect();
    println!("all systems for r <= 40: {} failures", failures.len());
}
