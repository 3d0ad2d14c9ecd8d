use super::Unit;
use crate::error::{Error, Result};
use crate::f2::F2Vec;
use crate::group::{double_coset_reps, FiniteGroup, GroupMap};

fn class_in(g: &FiniteGroup, set: &crate::elemset::ElementSet) -> usize {
    g.lattice()
        .class_of(set)
        .expect("image of a subgroup is a subgroup")
}

/// `Res^G_H`, with `H` given as a group and its embedding into `G`.
pub fn restrict(g: &FiniteGroup, u: &Unit, h: &FiniteGroup, emb: &GroupMap) -> Unit {
    let lat = h.lattice();
    Unit::from_bits(F2Vec::from_bools(
        lat.classes()
            .iter()
            .map(|c| u.bits.get(class_in(g, &emb.apply_set(&c.rep)))),
    ))
}

/// `Ten^G_H`: the sign at `L` is the product over `x ∈ [L\G/H]` of the sign
/// of `u` at `x^-1 L x ∩ H`.
pub fn tensor_induce(h: &FiniteGroup, u: &Unit, g: &FiniteGroup, emb: &GroupMap) -> Unit {
    let image = emb.apply_set(&h.all());
    let back = emb.inverse_partial(g.order());
    let lat = g.lattice();
    Unit::from_bits(F2Vec::from_bools(lat.classes().iter().map(|c| {
        let mut parity = false;
        for x in double_coset_reps(g, &c.rep, &image) {
            let meet = g.conjugate_set(g.inv(x), &c.rep).intersection(&image);
            let local = meet.iter().map(|y| back[y]).collect();
            parity ^= u.bits.get(class_in(h, &local));
        }
        parity
    })))
}

/// `Ten^G_H(-1)` for the class `h`: the parity of `|L\G/H|` at each `L`.
pub fn ten_minus_one(g: &FiniteGroup, h: usize) -> Unit {
    let lat = g.lattice();
    let hs = lat.class(h).rep;
    Unit::from_bits(F2Vec::from_bools(
        lat.classes()
            .iter()
            .map(|c| double_coset_reps(g, &c.rep, &hs).len() % 2 == 1),
    ))
}

/// `Inf^G_{G/N}` along the projection `proj: G -> G/N`.
pub fn inflate(q: &FiniteGroup, u: &Unit, g: &FiniteGroup, proj: &GroupMap) -> Unit {
    Unit::from_bits(F2Vec::from_bools(
        g.lattice()
            .classes()
            .iter()
            .map(|c| u.bits.get(class_in(q, &proj.apply_set(&c.rep)))),
    ))
}

/// `Def^G_{G/N}` along the projection `proj: G -> G/N`.
pub fn deflate(g: &FiniteGroup, u: &Unit, q: &FiniteGroup, proj: &GroupMap) -> Unit {
    Unit::from_bits(F2Vec::from_bools(
        q.lattice()
            .classes()
            .iter()
            .map(|c| u.bits.get(class_in(g, &proj.preimage_set(&c.rep)))),
    ))
}

/// `Iso(f)` for an isomorphism `f: G -> G'`.
pub fn iso_transport(g: &FiniteGroup, u: &Unit, target: &FiniteGroup, f: &GroupMap) -> Result<Unit> {
    if !f.is_isomorphism(g, target) {
        return Err(Error::NotIsomorphism);
    }
    let inv = f.inverse();
    Ok(Unit::from_bits(F2Vec::from_bools(
        target
            .lattice()
            .classes()
            .iter()
            .map(|c| u.bits.get(class_in(g, &inv.apply_set(&c.rep)))),
    )))
}
