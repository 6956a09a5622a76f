//! Randomized verification of the Hecke algebra relations, G-equivariance,
//! well-definedness on cosets, and the tree picture of W_p and U_p.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::coset::{canonicalize, CosetRep};
use super::group::{iz_membership, GroupElt};
use super::operators::{HeckeAlgebra, HeckeOp};
use super::tree::{edge_of, opposite, up_neighbourhood};
use super::vector::{random_coset, random_group_elt, random_iwahori, InducedVec};
use super::weight::{Character, SymPower, Weight};
use crate::exactnum::{FpElt, QuadElt};

/// Pass count for one relation on one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationOutcome {
    pub p: u64,
    pub weight: String,
    pub relation: String,
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl RelationOutcome {
    fn new(p: u64, weight: impl fmt::Display, relation: impl Into<String>) -> Self {
        RelationOutcome {
            p,
            weight: weight.to_string(),
            relation: relation.into(),
            checked: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }
}

impl fmt::Display for RelationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} [{}] {}: {}/{}", self.p, self.weight, self.relation, self.checked - self.failures, self.checked)?;
        if let Some(d) = &self.first_failure {
            write!(f, " first failure: {d}")?;
        }
        Ok(())
    }
}

/// Weight-independent random data for one test vector, so that the
/// canonicalization memo is shared across all weights.
struct Shape {
    support: Vec<CosetRep>,
    g: GroupElt,
    base: GroupElt,
    h: GroupElt,
}

fn shapes(p: u64, count: usize, depth: i64, rng: &mut ChaCha8Rng) -> Vec<Shape> {
    (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=4);
            Shape {
                support: (0..size).map(|_| random_coset(p, depth, rng)).collect(),
                g: random_group_elt(p, rng),
                base: random_coset(p, depth, rng).matrix(p),
                h: random_iwahori(p, 4, rng),
            }
        })
        .collect()
}

fn random_unit(p: u64, rng: &mut ChaCha8Rng) -> FpElt {
    FpElt::new(p, rng.gen_range(1..p))
}

fn char_vector(chi: Character, shape: &Shape, rng: &mut ChaCha8Rng) -> InducedVec<Character> {
    let mut v = InducedVec::zero(chi);
    for rep in &shape.support {
        v.add_term(rep.clone(), random_unit(chi.p, rng));
    }
    v
}

/// Evaluates `lhs == rhs` on every vector, one outcome per relation.
type Word = &'static [HeckeOp];

fn word_name(word: Word) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter().map(|op| op.name()).collect::<Vec<_>>().join("*")
}

/// Relations lhs = sign·rhs, as words.
fn relations_for(chi: &Character) -> Vec<(Word, i8, Word)> {
    use HeckeOp::*;
    if chi.is_symmetric() {
        vec![(&[T10, T10], 1, &[]), (&[T12, T10, T12], -1, &[T12]), (&[Tm10], 1, &[T10, T12, T10])]
    } else {
        vec![(&[Tm10, T12], 0, &[]), (&[T12, Tm10], 0, &[])]
    }
}

/// Checks the Hecke relations, equivariance of every supported operator
/// and well-definedness, for every character a^s d^t of IZ.
pub fn check_characters(p: u64, vectors: usize, seed: u64) -> Vec<RelationOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (p << 32));
    let shapes = shapes(p, vectors, 2, &mut rng);
    // One memo serves every weight; each weight draws from its own seeded stream.
    let mut alg = HeckeAlgebra::new(p);
    let mut out = Vec::new();
    for chi in Character::all(p) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (p << 32) ^ (chi.s << 16) ^ (chi.t << 8) ^ 0xc4a2);
        out.extend(check_character(&mut alg, chi, &shapes, &mut rng));
    }
    out
}

fn check_character(alg: &mut HeckeAlgebra, chi: Character, shapes: &[Shape], rng: &mut ChaCha8Rng) -> Vec<RelationOutcome> {
    let p = chi.p;
    let mut out = Vec::new();
    let ops: Vec<HeckeOp> = HeckeOp::ALL.into_iter().filter(|op| chi.supports(*op)).collect();
    for (lhs, sign, rhs) in relations_for(&chi) {
        let name = match sign {
            0 => format!("{} = 0", word_name(lhs)),
            1 => format!("{} = {}", word_name(lhs), word_name(rhs)),
            _ => format!("{} = -{}", word_name(lhs), word_name(rhs)),
        };
        let mut o = RelationOutcome::new(p, chi, name);
        for shape in shapes {
            let v = char_vector(chi, shape, rng);
            let l = alg.apply_word(lhs, &v).expect("supported");
            let r = match sign {
                0 => InducedVec::zero(chi),
                1 => alg.apply_word(rhs, &v).expect("supported"),
                _ => alg.apply_word(rhs, &v).expect("supported").neg(),
            };
            let diff = l.sub(&r);
            o.record(diff.is_zero(), || format!("nonzero difference on\n{}{}", v.debug_dump(), diff.debug_dump()));
        }
        out.push(o);
    }
    for op in ops {
        let mut eq = RelationOutcome::new(p, chi, format!("{op} equivariant"));
        let mut wd = RelationOutcome::new(p, chi, format!("{op} well defined"));
        for shape in shapes {
            let v = char_vector(chi, shape, rng);
            let moved = alg.translate(&shape.g, &v);
            let lhs = alg.apply(op, &moved).expect("supported");
            let image = alg.apply(op, &v).expect("supported");
            let rhs = alg.translate(&shape.g, &image);
            eq.record(lhs == rhs, || format!("g = {}", shape.g));

            let c = random_unit(p, rng);
            let iz = iz_membership(&shape.h, p).expect("random Iwahori element");
            let lhs = alg.apply_at(op, &chi, &shape.base.mul(&shape.h), &c).expect("supported");
            let rhs = alg.apply_at(op, &chi, &shape.base, &(chi.value(iz.a_bar, iz.d_bar) * c)).expect("supported");
            wd.record(lhs == rhs, || format!("g = {}, h = {}", shape.base, shape.h));
        }
        out.push(eq);
        out.push(wd);
    }
    out
}

/// W̃p² = 1, G-equivariance of W̃p and Ũp, and well-definedness, on
/// |det|^{r/2} ⊗ Sym^r for 0 ≤ r ≤ p − 1.
pub fn check_sym_powers(p: u64, vectors: usize, seed: u64) -> Vec<RelationOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (p << 32) ^ 0x5eed);
    let shapes = shapes(p, vectors, 1, &mut rng);
    let mut alg = HeckeAlgebra::new(p);
    let mut out = Vec::new();
    for r in 0..p as usize {
        let w = SymPower::new(p, r);
        let label = format!("Sym^{r}");
        let random_poly = |rng: &mut ChaCha8Rng| {
            let mut v = w.basis(0);
            for c in v.0.iter_mut() {
                *c = QuadElt::rational(p, crate::exactnum::int(rng.gen_range(-3..=3)));
            }
            v
        };
        let mut sq = RelationOutcome::new(p, &label, "WpSym*WpSym = 1");
        let mut ops: Vec<(RelationOutcome, RelationOutcome)> = [HeckeOp::WpSym, HeckeOp::UpSym]
            .iter()
            .map(|op| {
                (RelationOutcome::new(p, &label, format!("{op} equivariant")), RelationOutcome::new(p, &label, format!("{op} well defined")))
            })
            .collect();
        for shape in &shapes {
            let mut v = InducedVec::zero(w);
            for rep in &shape.support {
                v.add_term(rep.clone(), random_poly(&mut rng));
            }
            let twice = alg.apply_word(&[HeckeOp::WpSym, HeckeOp::WpSym], &v).expect("supported");
            sq.record(twice == v, || v.debug_dump());
            for (i, op) in [HeckeOp::WpSym, HeckeOp::UpSym].into_iter().enumerate() {
                let moved = alg.translate(&shape.g, &v);
                let lhs = alg.apply(op, &moved).expect("supported");
                let image = alg.apply(op, &v).expect("supported");
                let rhs = alg.translate(&shape.g, &image);
                ops[i].0.record(lhs == rhs, || format!("g = {}", shape.g));
                let poly = random_poly(&mut rng);
                let lhs = alg.apply_at(op, &w, &shape.base.mul(&shape.h), &poly).expect("supported");
                let rhs = alg.apply_at(op, &w, &shape.base, &w.act(&shape.h, &poly)).expect("supported");
                ops[i].1.record(lhs == rhs, || format!("g = {}, h = {}", shape.base, shape.h));
            }
        }
        out.push(sq);
        for (eq, wd) in ops {
            out.push(eq);
            out.push(wd);
        }
    }
    out
}

/// canonicalize(g·h) has the rep of canonicalize(g), and the Iwahori
/// factors compose: h_{gh} = h_g·h.
pub fn check_coset_invariance(p: u64, pairs: usize, seed: u64) -> RelationOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (p << 32) ^ 0xc05e7);
    let mut o = RelationOutcome::new(p, "-", "coset invariance");
    for _ in 0..pairs {
        let g = random_group_elt(p, &mut rng);
        let h = random_iwahori(p, 4, &mut rng);
        let cg = canonicalize(&g, p);
        let cgh = canonicalize(&g.mul(&h), p);
        let ok = cg.rep == cgh.rep && cgh.h == cg.h.mul(&h);
        o.record(ok, || format!("g = {g}, h = {h}"));
    }
    o
}

/// W_p reverses edges and U_p[[g, 1]] is the sum over the p edges leaving
/// the target of g's edge other than its reverse, compared against the
/// lattice model of the tree.
pub fn check_tree(p: u64, samples: usize, seed: u64) -> Vec<RelationOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (p << 32) ^ 0x7e1e);
    let trivial = Character::new(p, 0, 0);
    let mut alg = HeckeAlgebra::new(p);
    let mut wp = RelationOutcome::new(p, "trivial", "Wp reverses edges");
    let mut up = RelationOutcome::new(p, "trivial", "Up matches tree neighbourhood");
    for _ in 0..samples {
        let rep = random_coset(p, 2, &mut rng);
        let v = InducedVec::basis(trivial, &rep.matrix(p), FpElt::one(p));
        let e = edge_of(&rep, p);

        let w = alg.apply(HeckeOp::Wp, &v).expect("trivial weight");
        let edges: Vec<_> = w.support.keys().map(|r| edge_of(r, p)).collect();
        wp.record(edges == vec![opposite(&e)] && w.support.values().all(|c| c.value == 1), || format!("{rep}"));

        let u = alg.apply(HeckeOp::Up, &v).expect("trivial weight");
        let edges: BTreeSet<_> = u.support.keys().map(|r| edge_of(r, p)).collect();
        let ok = u.len() == p as usize && u.support.values().all(|c| c.value == 1) && edges == up_neighbourhood(&e, p);
        up.record(ok, || format!("{rep}"));
    }
    vec![wp, up]
}

/// Everything above for one prime.
pub fn hecke_check(p: u64, vectors: usize, seed: u64) -> Vec<RelationOutcome> {
    let mut out = check_characters(p, vectors, seed);
    out.extend(check_sym_powers(p, (vectors / 10).max(1), seed));
    out.push(check_coset_invariance(p, 1000, seed));
    out.extend(check_tree(p, vectors, seed));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_for_p5() {
        for o in check_characters(5, 8, 1) {
            assert!(o.passed(), "{o}");
        }
    }

    #[test]
    fn sym_checks_for_p5() {
        for o in check_sym_powers(5, 3, 2) {
            assert!(o.passed(), "{o}");
        }
    }

    #[test]
    fn coset_invariance_and_tree() {
        assert!(check_coset_invariance(7, 200, 3).passed());
        for o in check_tree(7, 20, 3) {
            assert!(o.passed(), "{o}");
        }
    }

    #[test]
    fn broken_relation_is_detected() {
        // T12 alone is not zero, so a claimed T12 = 0 must fail.
        let p = 5;
        let chi = Character::new(p, 1, 2);
        let v = InducedVec::basis(chi, &GroupElt::identity(), FpElt::one(p));
        let mut alg = HeckeAlgebra::new(p);
        assert!(!alg.apply(HeckeOp::T12, &v).unwrap().is_zero());
    }
}
