//! Seeded random generators shared by the integration suites.
#![allow(dead_code)] // each suite uses its own subset

use infl_core::formula::Formula;
use infl_core::sequent::Sequent;
use infl_core::structure::Structure;
use rand::rngs::StdRng;
use rand::RngExt;

pub const ATOMS: [&str; 3] = ["p", "q", "r"];

/// A random formula of the full language with at most `depth` connective
/// levels.
pub fn random_formula(rng: &mut StdRng, depth: usize) -> Formula {
    if depth == 0 || rng.random_range(0..4) == 0 {
        return match rng.random_range(0..4) {
            0 => Formula::Bottom,
            _ => Formula::atom(ATOMS[rng.random_range(0..ATOMS.len())]),
        };
    }
    let a = random_formula(rng, depth - 1);
    match rng.random_range(0..7) {
        0 => Formula::fuse(a, random_formula(rng, depth - 1)),
        1 => Formula::under(a, random_formula(rng, depth - 1)),
        2 => Formula::meet(a, random_formula(rng, depth - 1)),
        3 => Formula::join(a, random_formula(rng, depth - 1)),
        4 => Formula::star(a, random_formula(rng, depth - 1)),
        5 => Formula::arrow(a, random_formula(rng, depth - 1)),
        _ => Formula::neg(a),
    }
}

/// A random raw structure tree: possibly nested commas and unsorted
/// operands, so canonicalization has work to do.
pub fn random_raw_structure(rng: &mut StdRng, depth: usize) -> Structure {
    if depth == 0 || rng.random_range(0..3) == 0 {
        return Structure::Leaf(random_formula(rng, 2));
    }
    match rng.random_range(0..3) {
        0 => Structure::Leaf(random_formula(rng, 2)),
        1 => {
            let len = rng.random_range(2..=3);
            Structure::Comma(
                (0..len)
                    .map(|_| random_raw_structure(rng, depth - 1))
                    .collect(),
            )
        }
        _ => Structure::Semi(
            Box::new(random_raw_structure(rng, depth - 1)),
            Box::new(random_raw_structure(rng, depth - 1)),
        ),
    }
}

pub fn random_sequent(rng: &mut StdRng, max_symbols: usize) -> Sequent {
    loop {
        let antecedent = random_raw_structure(rng, 2);
        let succedent = random_formula(rng, 2);
        let seq = Sequent::new(antecedent, succedent);
        if seq.symbol_size() <= max_symbols {
            return seq;
        }
    }
}

/// Shuffle comma children and swap semi operands throughout, returning a
/// raw tree in the same canonical class.
pub fn permute_structure(rng: &mut StdRng, s: &Structure) -> Structure {
    match s {
        Structure::Leaf(f) => Structure::Leaf(f.clone()),
        Structure::Comma(children) => {
            let mut shuffled: Vec<Structure> =
                children.iter().map(|c| permute_structure(rng, c)).collect();
            for i in (1..shuffled.len()).rev() {
                let j = rng.random_range(0..=i);
                shuffled.swap(i, j);
            }
            // occasionally re-nest to exercise associativity collapse
            if shuffled.len() > 2 && rng.random_bool(0.5) {
                let tail = shuffled.split_off(shuffled.len() - 2);
                shuffled.push(Structure::Comma(tail));
            }
            Structure::Comma(shuffled)
        }
        Structure::Semi(a, b) => {
            let a = permute_structure(rng, a);
            let b = permute_structure(rng, b);
            if rng.random_bool(0.5) {
                Structure::Semi(Box::new(b), Box::new(a))
            } else {
                Structure::Semi(Box::new(a), Box::new(b))
            }
        }
    }
}
