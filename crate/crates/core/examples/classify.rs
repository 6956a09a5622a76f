//! Classify the reduction of V_{k,L} for one (p, k, L).
//!
//! `cargo run --example classify -- 7 5 "0"`; without arguments a few
//! representative inputs are shown, one per kind of outcome.

use modp_reduction::classifier::{classify_full, ClassifierInput};
use modp_reduction::exactnum::QuadElt;

fn show(p: u64, k: u64, l: &str) {
    let l = match QuadElt::parse(l, p) {
        Ok(l) => l,
        Err(e) => return eprintln!("bad L: {e}"),
    };
    match ClassifierInput::new(p, k, l.clone()).and_then(|input| classify_full(&input)) {
        Ok(c) => println!(
            "p={p} k={k} L={l}: nu={} {} i={} -> {}",
            c.nu,
            c.case.kind.name(),
            c.case.i,
            c.result
        ),
        Err(e) => eprintln!("p={p} k={k} L={l}: {e}"),
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [p, k, l] = args.as_slice() {
        match (p.parse(), k.parse()) {
            (Ok(p), Ok(k)) => show(p, k, l),
            _ => eprintln!("usage: classify P K L"),
        }
        return;
    }
    show(7, 5, "0");
    show(5, 4, "1/2");
    show(7, 5, "11/6 + 7*sqrt(7)");
    show(11, 8, "1/3*sqrt(11)");
    show(11, 8, "1/121");
}
