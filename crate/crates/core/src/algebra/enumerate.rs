//! Exhaustive enumeration of small algebras and countermodel search.
//!
//! The pipeline enumerates lattices up to isomorphism (minimal order matrix
//! over all carrier permutations), then commutative associative fusion
//! tables whose residuals exist, then negation tables satisfying the laws
//! of the requested class. Residual tables are not enumerated: residuation
//! forces `a \ c` to be the maximum of `{b : a . b <= c}`, so the table is
//! derived and candidates without such maxima are pruned. Algebras sharing
//! a lattice are deduplicated under the lattice's automorphism group. The
//! emitted order is deterministic.

use super::laws::AlgebraClass;
use super::{Assignment, FiniteAlgebra, NegStyle, Validity};
use crate::sequent::Sequent;

type OpTable = Vec<Vec<usize>>;

/// All algebras of `class` with carrier size `1..=max_size`, up to
/// isomorphism, smallest first in a fixed deterministic order. Sizes above
/// 4 are rejected: the fusion-table stage is exponential and 4 is where the
/// cost model ends.
///
/// The bounded bi-residuated class is enumerated as the expansions of the
/// quasi-involutive ones.
pub fn enumerate_algebras(max_size: usize, class: AlgebraClass) -> Vec<FiniteAlgebra> {
    assert!(max_size >= 1, "carrier must be nonempty");
    assert!(
        class != AlgebraClass::Lattice,
        "bare lattices carry no fusion table; enumerate a residuated class"
    );
    assert!(
        max_size <= 4,
        "enumeration is exhaustive; sizes above 4 are out of the cost model"
    );
    if class == AlgebraClass::CbRl {
        return enumerate_algebras(max_size, AlgebraClass::QIncRl)
            .into_iter()
            .map(|m| m.expand().expect("every quasi-involutive algebra expands"))
            .collect();
    }
    let mut out = Vec::new();
    for n in 1..=max_size {
        for leq in canonical_lattices(n) {
            let automorphisms = lattice_automorphisms(&leq);
            for (dot, under) in residuated_dots(&leq) {
                match class {
                    AlgebraClass::Lattice | AlgebraClass::CRl => {
                        if is_canonical_tables(&dot, None, &automorphisms) {
                            out.push(build(n, &leq, &dot, &under, None));
                        }
                    }
                    _ => {
                        for neg in negations(&leq, &dot, class) {
                            if is_canonical_tables(&dot, Some(&neg), &automorphisms) {
                                out.push(build(n, &leq, &dot, &under, Some(neg)));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Search the expansions of enumerated quasi-involutive algebras for one
/// that refutes `seq`, smallest carrier first. A hit certifies
/// non-provability; absence within the bound certifies nothing.
pub fn countermodel(seq: &Sequent, max_size: usize) -> Option<(FiniteAlgebra, Assignment)> {
    for m in enumerate_algebras(max_size, AlgebraClass::QIncRl) {
        let expanded = m.expand().expect("every quasi-involutive algebra expands");
        if let Ok(Validity::Refuted(assignment)) = expanded.valid_with(seq, NegStyle::Tables) {
            return Some((expanded, assignment));
        }
    }
    None
}

fn build(
    n: usize,
    leq: &[Vec<bool>],
    dot: &[Vec<usize>],
    under: &[Vec<usize>],
    neg: Option<Vec<usize>>,
) -> FiniteAlgebra {
    let elems: Vec<String> = (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    let m = FiniteAlgebra::new(elems, leq.to_vec(), dot.to_vec(), under.to_vec());
    match neg {
        Some(neg) => m.with_neg(neg),
        None => m,
    }
}

/// Lattice orders on `n` points whose matrix encoding is minimal among all
/// relabelings.
fn canonical_lattices(n: usize) -> Vec<Vec<Vec<bool>>> {
    let mut out = Vec::new();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    // each unordered pair is incomparable, <, or >
    let mut states = vec![0u8; pairs.len()];
    loop {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (idx, &(i, j)) in pairs.iter().enumerate() {
            match states[idx] {
                1 => leq[i][j] = true,
                2 => leq[j][i] = true,
                _ => {}
            }
        }
        if is_transitive(&leq) && is_lattice(&leq) && is_min_matrix(&leq) {
            out.push(leq);
        }
        let mut k = 0;
        loop {
            if k == states.len() {
                return out;
            }
            states[k] += 1;
            if states[k] < 3 {
                break;
            }
            states[k] = 0;
            k += 1;
        }
    }
}

fn is_transitive(leq: &[Vec<bool>]) -> bool {
    let n = leq.len();
    for a in 0..n {
        for b in 0..n {
            if !leq[a][b] {
                continue;
            }
            if (0..n).any(|c| leq[b][c] && !leq[a][c]) {
                return false;
            }
        }
    }
    true
}

fn is_lattice(leq: &[Vec<bool>]) -> bool {
    let n = leq.len();
    for i in 0..n {
        for j in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&k| leq[k][i] && leq[k][j]).collect();
            if !lower.iter().any(|&m| lower.iter().all(|&k| leq[k][m])) {
                return false;
            }
            let upper: Vec<usize> = (0..n).filter(|&k| leq[i][k] && leq[j][k]).collect();
            if !upper.iter().any(|&m| upper.iter().all(|&k| leq[m][k])) {
                return false;
            }
        }
    }
    true
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &perms {
            for v in 0..n {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        perms = next;
    }
    perms
}

fn leq_key(leq: &[Vec<bool>]) -> Vec<bool> {
    leq.iter().flatten().copied().collect()
}

fn permute_leq(leq: &[Vec<bool>], perm: &[usize]) -> Vec<Vec<bool>> {
    let n = leq.len();
    let mut out = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[perm[i]][perm[j]] = leq[i][j];
        }
    }
    out
}

fn is_min_matrix(leq: &[Vec<bool>]) -> bool {
    let key = leq_key(leq);
    all_permutations(leq.len())
        .iter()
        .all(|perm| key <= leq_key(&permute_leq(leq, perm)))
}

fn lattice_automorphisms(leq: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let key = leq_key(leq);
    all_permutations(leq.len())
        .into_iter()
        .filter(|perm| leq_key(&permute_leq(leq, perm)) == key)
        .collect()
}

fn permute_binary(table: &[Vec<usize>], perm: &[usize]) -> Vec<Vec<usize>> {
    let n = table.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[perm[i]][perm[j]] = perm[table[i][j]];
        }
    }
    out
}

fn permute_unary(table: &[usize], perm: &[usize]) -> Vec<usize> {
    let mut out = vec![0; table.len()];
    for (i, &v) in table.iter().enumerate() {
        out[perm[i]] = perm[v];
    }
    out
}

/// Keep one representative per orbit of the lattice's automorphism group:
/// the candidate whose (fusion, negation) encoding is minimal.
fn is_canonical_tables(
    dot: &[Vec<usize>],
    neg: Option<&[usize]>,
    automorphisms: &[Vec<usize>],
) -> bool {
    let key: (Vec<usize>, Vec<usize>) = (
        dot.iter().flatten().copied().collect(),
        neg.map(<[usize]>::to_vec).unwrap_or_default(),
    );
    automorphisms.iter().all(|perm| {
        let image: (Vec<usize>, Vec<usize>) = (
            permute_binary(dot, perm).into_iter().flatten().collect(),
            neg.map(|t| permute_unary(t, perm)).unwrap_or_default(),
        );
        key <= image
    })
}

/// Commutative associative fusion tables over the lattice whose residual
/// `max {b : a . b <= c}` exists for every pair, together with that derived
/// residual table.
fn residuated_dots(leq: &[Vec<bool>]) -> Vec<(OpTable, OpTable)> {
    let n = leq.len();
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut choice = vec![0usize; slots.len()];
    let mut out = Vec::new();
    loop {
        let mut dot = vec![vec![0; n]; n];
        for (idx, &(i, j)) in slots.iter().enumerate() {
            dot[i][j] = choice[idx];
            dot[j][i] = choice[idx];
        }
        if is_associative(&dot) {
            if let Some(under) = derive_under(leq, &dot) {
                out.push((dot, under));
            }
        }
        let mut k = 0;
        loop {
            if k == slots.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < n {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn is_associative(dot: &[Vec<usize>]) -> bool {
    let n = dot.len();
    for a in 0..n {
        for b in 0..n {
            let ab = dot[a][b];
            for c in 0..n {
                if dot[ab][c] != dot[a][dot[b][c]] {
                    return false;
                }
            }
        }
    }
    true
}

fn derive_under(leq: &[Vec<bool>], dot: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = leq.len();
    let mut under = vec![vec![0; n]; n];
    for a in 0..n {
        for c in 0..n {
            let below: Vec<usize> = (0..n).filter(|&b| leq[dot[a][b]][c]).collect();
            let max = below
                .iter()
                .copied()
                .find(|&m| below.iter().all(|&b| leq[b][m]))?;
            // residuation demands the solution set be exactly a down-set
            if (0..n).any(|b| leq[b][max] != below.contains(&b)) {
                return None;
            }
            under[a][c] = max;
        }
    }
    Some(under)
}

/// Negation tables satisfying the laws of `class` over the given reduct.
/// The involutive class is generated as quasi-involutive plus `~~a = a`,
/// which is equivalent to its textbook definition through the residual.
fn negations(leq: &[Vec<bool>], dot: &[Vec<usize>], class: AlgebraClass) -> Vec<Vec<usize>> {
    let n = leq.len();
    let mut table = vec![0usize; n];
    let mut out = Vec::new();
    loop {
        if negation_fits(leq, dot, &table, class) {
            out.push(table.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            table[k] += 1;
            if table[k] < n {
                break;
            }
            table[k] = 0;
            k += 1;
        }
    }
}

fn negation_fits(
    leq: &[Vec<bool>],
    dot: &[Vec<usize>],
    neg: &[usize],
    class: AlgebraClass,
) -> bool {
    let n = leq.len();
    let mn = || (0..n).all(|a| (0..n).all(|c| !leq[a][neg[c]] || leq[c][neg[a]]));
    let smn = || {
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| !leq[dot[a][b]][neg[c]] || leq[dot[c][b]][neg[a]]))
        })
    };
    let dn_upper = || (0..n).all(|a| leq[neg[neg[a]]][a]);
    let dn_eq = || (0..n).all(|a| neg[neg[a]] == a);
    match class {
        AlgebraClass::MnCRl => mn(),
        AlgebraClass::DnCRl => mn() && dn_upper(),
        AlgebraClass::QIncRl => smn() && mn(),
        AlgebraClass::IncRl => smn() && mn() && dn_eq(),
        _ => true,
    }
}
