//! Expansion of free Z[S_n]-module maps to integer matrices over the basis
//! `g * cell`, indexed `cell_index * n! + g.lex_rank()`.

use std::collections::HashMap;

use num_bigint::BigInt;
use symres_snf::IntMatrix;

use crate::chain::Chain;
use crate::perm::Perm;

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Index of cells in a fixed basis list.
pub fn cell_index<C: Ord + Clone + std::hash::Hash>(cells: &[C]) -> HashMap<C, usize> {
    cells.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect()
}

/// Matrix of the equivariant map sending `cell` to `f(cell)`; columns are `g * cell`.
pub fn expand_map<C, D>(
    n: usize,
    domain: &[C],
    codomain: &[D],
    mut f: impl FnMut(&C) -> Chain<D>,
) -> IntMatrix
where
    C: Ord + Clone,
    D: Ord + Clone + std::hash::Hash,
{
    let nf = factorial(n);
    let perms = Perm::all(n);
    let idx = cell_index(codomain);
    let mut trip = Vec::new();
    for (ci, c) in domain.iter().enumerate() {
        let img = f(c);
        let entries: Vec<(usize, Perm, i64)> = img
            .terms()
            .flat_map(|(d, a)| {
                let r = *idx.get(d).expect("codomain cell missing from basis");
                a.terms().map(move |(h, k)| (r, *h, k)).collect::<Vec<_>>()
            })
            .collect();
        for (gi, g) in perms.iter().enumerate() {
            let col = ci * nf + gi;
            for (r, h, k) in &entries {
                trip.push((r * nf + g.compose(h).lex_rank(), col, *k));
            }
        }
    }
    IntMatrix::from_triplets(codomain.len() * nf, domain.len() * nf, trip)
}

/// Coordinate vector of a chain in the expanded basis.
pub fn chain_vector<D: Ord + Clone + std::hash::Hash>(x: &Chain<D>, basis: &[D]) -> Vec<BigInt> {
    let n = x.n();
    let nf = factorial(n);
    let idx = cell_index(basis);
    let mut v = vec![BigInt::from(0); basis.len() * nf];
    for (d, a) in x.terms() {
        let r = idx[d];
        for (h, k) in a.terms() {
            v[r * nf + h.lex_rank()] += k;
        }
    }
    v
}

/// Chain with the given coordinates.
pub fn vector_chain<D: Ord + Clone>(n: usize, v: &[BigInt], basis: &[D]) -> Chain<D> {
    let nf = factorial(n);
    let mut out = Chain::zero(n);
    for (i, x) in v.iter().enumerate() {
        if x.sign() != num_bigint::Sign::NoSign {
            let k: i64 = x.try_into().expect("coefficient overflow");
            out.add_mono(basis[i / nf].clone(), Perm::lex_unrank(n, i % nf), k);
        }
    }
    out
}
