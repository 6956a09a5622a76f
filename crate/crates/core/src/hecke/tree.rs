//! Direct model of the Bruhat–Tits tree by lattices, independent of the
//! coset normal form. Used to cross-check W_p and U_p.

use std::collections::BTreeSet;

use num_traits::Zero;

use super::coset::CosetRep;
use super::group::GroupElt;
use crate::exactnum::rational::{p_pow, reduce_mod_pk, vp};
use crate::exactnum::{int, Rational};

/// Homothety class of the lattice spanned by the columns of (p^n, x; 0, 1),
/// with x reduced modulo p^n.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub n: i64,
    pub x: Rational,
}

impl Vertex {
    /// The lattice spanned by the columns of `basis`, up to homothety.
    pub fn of_lattice(basis: &GroupElt, p: u64) -> Vertex {
        let (mut c1, mut c2) = ((basis.a.clone(), basis.c.clone()), (basis.b.clone(), basis.d.clone()));
        let v = |x: &Rational| vp(x, p).unwrap_or(i64::MAX);
        if v(&c1.1) < v(&c2.1) {
            std::mem::swap(&mut c1, &mut c2);
        }
        // Now v(c2.1) ≤ v(c1.1), so c1.1/c2.1 ∈ Z_p clears the lower-left entry.
        let ratio = &c1.1 / &c2.1;
        let top = &c1.0 - &ratio * &c2.0;
        let n = v(&top) - v(&c2.1);
        let x = &c2.0 / &c2.1;
        Vertex { n, x: reduce_mod_pk(&x, p, n) }
    }

    pub fn basis(&self, p: u64) -> GroupElt {
        GroupElt::new(p_pow(p, self.n), self.x.clone(), Rational::zero(), int(1)).expect("nonsingular")
    }

    /// The p + 1 neighbours: index-p sublattices containing p times the lattice.
    pub fn neighbours(&self, p: u64) -> Vec<Vertex> {
        let b = self.basis(p);
        let mut out: Vec<Vertex> =
            (0..p as i64).map(|l| Vertex::of_lattice(&b.mul(&GroupElt::upper(p, l)), p)).collect();
        out.push(Vertex::of_lattice(&b.mul(&GroupElt::alpha(p)), p));
        out
    }
}

/// Oriented edge (origin, target).
pub type Edge = (Vertex, Vertex);

/// The edge g·(Z_p², αZ_p²) of a coset gIZ.
pub fn edge_of(rep: &CosetRep, p: u64) -> Edge {
    let g = rep.matrix(p);
    (Vertex::of_lattice(&g, p), Vertex::of_lattice(&g.mul(&GroupElt::alpha(p)), p))
}

pub fn opposite(e: &Edge) -> Edge {
    (e.1.clone(), e.0.clone())
}

/// Edges leaving t(e), other than the reverse of e.
pub fn up_neighbourhood(e: &Edge, p: u64) -> BTreeSet<Edge> {
    e.1.neighbours(p)
        .into_iter()
        .filter(|w| *w != e.0)
        .map(|w| (e.1.clone(), w))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn homothety_and_basis_change() {
        let p = 5;
        let v = Vertex::of_lattice(&GroupElt::from_ints(25, 3, 0, 1), p);
        assert_eq!(v, Vertex { n: 2, x: int(3) });
        // scaling and column operations by GL2(Z_p) do not move the vertex
        let g = GroupElt::from_ints(25, 3, 0, 1).scale(&rat(1, 5)).mul(&GroupElt::from_ints(2, 1, 5, 3));
        assert_eq!(Vertex::of_lattice(&g, p), v);
    }

    #[test]
    fn neighbours_are_distinct() {
        let p = 7;
        let v = Vertex::of_lattice(&GroupElt::new(rat(1, 7), rat(3, 49), int(0), int(1)).unwrap(), p);
        assert_eq!(v, Vertex { n: -1, x: rat(3, 49) });
        let nb: BTreeSet<Vertex> = v.neighbours(p).into_iter().collect();
        assert_eq!(nb.len(), 8);
        for w in &nb {
            assert!(w.neighbours(p).contains(&v));
        }
    }

    #[test]
    fn origin_edge() {
        let e = edge_of(&CosetRep::origin(), 5);
        assert_eq!(e.0, Vertex { n: 0, x: int(0) });
        assert_eq!(e.1, Vertex::of_lattice(&GroupElt::alpha(5), 5));
    }
}
