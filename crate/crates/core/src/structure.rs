//! Formula structures: antecedents built from `,` and `;`.
//!
//! `,` is the structural counterpart of fusion `.` and `;` of `*`. The
//! exchange and associativity rules for both are admissible in the target
//! calculi and are baked into the representation: `Comma` nodes hold a
//! flattened, canonically sorted multiset of children, and the two sides of
//! a `Semi` node are stored in canonical order. Two structures that are
//! interconvertible by those rules are therefore the same value, which makes
//! memoized proof search sound and keeps the search space finite.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::formula::Formula;

/// A formula structure. Values built through [`Structure::leaf`],
/// [`Structure::comma`] and [`Structure::semi`] are canonical; values
/// assembled directly from the variants can be normalized with
/// [`Structure::canonicalize`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Structure {
    Leaf(Formula),
    /// Flattened multiset with at least two children, none of which is
    /// itself a `Comma`; children sorted by the total order on structures.
    Comma(Vec<Structure>),
    /// Unordered pair, stored with the smaller side first.
    Semi(Box<Structure>, Box<Structure>),
}

impl Structure {
    pub fn leaf(f: Formula) -> Structure {
        Structure::Leaf(f)
    }

    /// Canonical comma of the given parts: nested commas are flattened, a
    /// single part is returned as-is, and children are sorted.
    pub fn comma(parts: Vec<Structure>) -> Structure {
        let mut children = Vec::new();
        for part in parts {
            match part {
                Structure::Comma(inner) => children.extend(inner),
                other => children.push(other),
            }
        }
        match children.len() {
            0 => panic!("empty structure"),
            1 => children.pop().unwrap(),
            _ => {
                children.sort();
                Structure::Comma(children)
            }
        }
    }

    /// Canonical semicolon pair (commutative, non-associative).
    pub fn semi(a: Structure, b: Structure) -> Structure {
        if a <= b {
            Structure::Semi(Box::new(a), Box::new(b))
        } else {
            Structure::Semi(Box::new(b), Box::new(a))
        }
    }

    /// Rebuild bottom-up through the canonical constructors. Idempotent, and
    /// invariant under permutations of comma children and swaps of semi
    /// operands.
    pub fn canonicalize(&self) -> Structure {
        match self {
            Structure::Leaf(f) => Structure::leaf(f.clone()),
            Structure::Comma(children) => {
                Structure::comma(children.iter().map(|c| c.canonicalize()).collect())
            }
            Structure::Semi(a, b) => Structure::semi(a.canonicalize(), b.canonicalize()),
        }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalize()
    }

    /// The formulas occurring in the structure, in traversal order.
    pub fn formulas(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        self.collect_formulas(&mut out);
        out
    }

    fn collect_formulas<'a>(&'a self, out: &mut Vec<&'a Formula>) {
        match self {
            Structure::Leaf(f) => out.push(f),
            Structure::Comma(children) => {
                for c in children {
                    c.collect_formulas(out);
                }
            }
            Structure::Semi(a, b) => {
                a.collect_formulas(out);
                b.collect_formulas(out);
            }
        }
    }

    /// Total symbol count of the formulas in the structure. The structure
    /// connectives themselves do not count.
    pub fn symbol_size(&self) -> usize {
        self.formulas().iter().map(|f| f.symbol_size()).sum()
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for f in self.formulas() {
            f.collect_atoms(&mut out);
        }
        out
    }

    /// Replace `,` by `.` and `;` by `*`. Comma multisets fold left in
    /// canonical child order; every interpreting algebra has an
    /// associative-commutative fusion, so the fold order does not affect
    /// validity.
    pub fn to_formula(&self) -> Formula {
        match self {
            Structure::Leaf(f) => f.clone(),
            Structure::Comma(children) => {
                let mut iter = children.iter().map(|c| c.to_formula());
                let first = iter.next().expect("comma has children");
                iter.fold(first, Formula::fuse)
            }
            Structure::Semi(a, b) => Formula::star(a.to_formula(), b.to_formula()),
        }
    }

    /// All decompositions of `self` as a context plus the substructure that
    /// fills its hole. The hole ranges over every leaf, every semi node,
    /// every comma node, and every sub-multiset of a comma node's children.
    /// Duplicate decompositions arising from repeated comma children are
    /// reported once; the order is deterministic.
    pub fn contexts(&self) -> Vec<(Context, Structure)> {
        let mut out = Vec::new();
        self.collect_contexts(&mut out);
        // Repeated comma children produce identical (context, part) pairs;
        // keep the first occurrence of each.
        let mut seen = std::collections::HashSet::new();
        out.retain(|pair| seen.insert(pair.clone()));
        out
    }

    fn collect_contexts(&self, out: &mut Vec<(Context, Structure)>) {
        out.push((Context::hole(), self.clone()));
        match self {
            Structure::Leaf(_) => {}
            Structure::Semi(a, b) => {
                let base = out.len();
                a.collect_contexts(out);
                for (ctx, _) in &mut out[base..] {
                    ctx.frames.push(Frame::Semi((**b).clone()));
                }
                let base = out.len();
                b.collect_contexts(out);
                for (ctx, _) in &mut out[base..] {
                    ctx.frames.push(Frame::Semi((**a).clone()));
                }
            }
            Structure::Comma(children) => {
                let n = children.len();
                assert_mask_width(n);
                // proper nonempty sub-multisets, by index mask
                for mask in 1u32..((1u32 << n) - 1) {
                    let mut inside = Vec::new();
                    let mut rest = Vec::new();
                    for (i, c) in children.iter().enumerate() {
                        if mask & (1 << i) != 0 {
                            inside.push(c.clone());
                        } else {
                            rest.push(c.clone());
                        }
                    }
                    let part = Structure::comma(inside);
                    out.push((
                        Context {
                            frames: vec![Frame::Comma(rest)],
                        },
                        part,
                    ));
                }
                // holes strictly inside a child
                for (i, child) in children.iter().enumerate() {
                    let rest: Vec<Structure> = children
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != i)
                        .map(|(_, c)| c.clone())
                        .collect();
                    let mut inner = Vec::new();
                    child.collect_contexts(&mut inner);
                    for (mut ctx, part) in inner {
                        if ctx.frames.is_empty() {
                            // the child itself: already covered by the
                            // singleton sub-multiset above
                            continue;
                        }
                        ctx.frames.push(Frame::Comma(rest.clone()));
                        out.push((ctx, part));
                    }
                }
            }
        }
    }

    /// Decompositions whose removed part is a single formula occurrence,
    /// together with that formula. This is the principal-position view used
    /// by the backward left rules.
    pub fn formula_contexts(&self) -> Vec<(Context, Formula)> {
        self.contexts()
            .into_iter()
            .filter_map(|(ctx, part)| match part {
                Structure::Leaf(f) => Some((ctx, f)),
                _ => None,
            })
            .collect()
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_structure(f, self, false)
    }
}

impl Structure {
    pub fn display_sugared(&self) -> StructureDisplay<'_> {
        StructureDisplay {
            structure: self,
            sugar: true,
        }
    }
}

pub struct StructureDisplay<'a> {
    structure: &'a Structure,
    sugar: bool,
}

impl fmt::Display for StructureDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_structure(f, self.structure, self.sugar)
    }
}

// `,` binds tighter than `;`, so a comma under a semi needs no parentheses;
// a semi under anything does.
fn write_structure(f: &mut fmt::Formatter<'_>, s: &Structure, sugar: bool) -> fmt::Result {
    match s {
        Structure::Leaf(formula) => {
            if sugar {
                write!(f, "{}", formula.display_sugared())
            } else {
                write!(f, "{formula}")
            }
        }
        Structure::Comma(children) => {
            for (i, c) in children.iter().enumerate() {
                if i > 0 {
                    write!(f, " , ")?;
                }
                write_structure_atom(f, c, sugar)?;
            }
            Ok(())
        }
        Structure::Semi(a, b) => {
            write_structure_atom(f, a, sugar)?;
            write!(f, " ; ")?;
            write_structure_atom(f, b, sugar)
        }
    }
}

fn write_structure_atom(f: &mut fmt::Formatter<'_>, s: &Structure, sugar: bool) -> fmt::Result {
    match s {
        Structure::Semi(..) => {
            write!(f, "(")?;
            write_structure(f, s, sugar)?;
            write!(f, ")")
        }
        _ => write_structure(f, s, sugar),
    }
}

/// Subset enumeration indexes comma children by `u32` bit masks; wider
/// commas would not finish enumerating anyway.
pub(crate) fn assert_mask_width(n: usize) {
    assert!(
        n < 32,
        "comma structures wider than 31 formulas are not supported"
    );
}

/// One step of the path from a hole to the root of a structure.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Frame {
    /// The hole's contents joined (comma) with these siblings.
    Comma(Vec<Structure>),
    /// The hole's contents paired (semi) with this other side.
    Semi(Structure),
}

/// A structure with one designated hole, represented as the frame path from
/// the hole outward. Filling the hole re-canonicalizes at every level, so
/// plugging a comma into a comma frame flattens as expected.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Context {
    /// Innermost frame first.
    frames: Vec<Frame>,
}

impl Context {
    /// The empty context: a bare hole.
    pub fn hole() -> Context {
        Context { frames: Vec::new() }
    }

    pub fn is_hole(&self) -> bool {
        self.frames.is_empty()
    }

    /// The frame immediately surrounding the hole, if any.
    pub fn innermost(&self) -> Option<&Frame> {
        self.frames.first()
    }

    /// The context obtained by removing the innermost frame.
    pub fn without_innermost(&self) -> Context {
        Context {
            frames: self.frames[1..].to_vec(),
        }
    }

    pub fn wrap_comma(mut self, siblings: Vec<Structure>) -> Context {
        self.frames.insert(0, Frame::Comma(siblings));
        self
    }

    /// Substitute `plug` for the hole and canonicalize.
    pub fn fill(&self, plug: Structure) -> Structure {
        let mut current = plug;
        for frame in &self.frames {
            current = match frame {
                Frame::Comma(siblings) => {
                    let mut parts = Vec::with_capacity(siblings.len() + 1);
                    parts.push(current);
                    parts.extend(siblings.iter().cloned());
                    Structure::comma(parts)
                }
                Frame::Semi(other) => Structure::semi(current, other.clone()),
            };
        }
        current
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Structure {
        Structure::leaf(Formula::atom("p"))
    }

    fn q() -> Structure {
        Structure::leaf(Formula::atom("q"))
    }

    fn r() -> Structure {
        Structure::leaf(Formula::atom("r"))
    }

    #[test]
    fn comma_flattens_nested_commas() {
        let nested = Structure::comma(vec![Structure::comma(vec![p(), q()]), r()]);
        let flat = Structure::comma(vec![p(), q(), r()]);
        assert_eq!(nested, flat);
        match &nested {
            Structure::Comma(children) => assert_eq!(children.len(), 3),
            other => panic!("expected comma, got {other:?}"),
        }
    }

    #[test]
    fn semi_is_commutative() {
        assert_eq!(Structure::semi(q(), p()), Structure::semi(p(), q()));
    }

    #[test]
    fn canonicalize_collapses_reassociations() {
        let left = Structure::Comma(vec![p(), Structure::Comma(vec![q(), r()])]);
        let right = Structure::Comma(vec![Structure::Comma(vec![p(), q()]), r()]);
        assert_eq!(left.canonicalize(), right.canonicalize());
    }

    #[test]
    fn canonicalize_is_idempotent_on_raw_trees() {
        let raw = Structure::Semi(
            Box::new(Structure::Comma(vec![
                r(),
                Structure::Comma(vec![q(), p()]),
            ])),
            Box::new(p()),
        );
        let once = raw.canonicalize();
        assert_eq!(once.canonicalize(), once);
        assert!(once.is_canonical());
    }

    #[test]
    fn contexts_of_leaf() {
        let ctxs = p().contexts();
        assert_eq!(ctxs.len(), 1);
        assert!(ctxs[0].0.is_hole());
        assert_eq!(ctxs[0].1, p());
    }

    #[test]
    fn contexts_of_pair_comma() {
        // hole positions: {p}, {q}, {p,q}
        let s = Structure::comma(vec![p(), q()]);
        let ctxs = s.contexts();
        assert_eq!(ctxs.len(), 3);
        for (ctx, part) in &ctxs {
            assert_eq!(ctx.fill(part.clone()), s);
        }
    }

    #[test]
    fn contexts_of_semi() {
        let s = Structure::semi(p(), q());
        let ctxs = s.contexts();
        assert_eq!(ctxs.len(), 3);
        for (ctx, part) in &ctxs {
            assert_eq!(ctx.fill(part.clone()), s);
        }
    }

    #[test]
    fn contexts_refill_to_original() {
        let s = Structure::semi(
            Structure::comma(vec![p(), q(), r()]),
            Structure::semi(p(), q()),
        );
        for (ctx, part) in s.contexts() {
            assert_eq!(ctx.fill(part), s);
        }
    }

    #[test]
    fn duplicate_children_dedup() {
        let s = Structure::comma(vec![p(), p()]);
        // {p} (twice, deduped) and {p,p}
        assert_eq!(s.contexts().len(), 2);
    }

    #[test]
    fn to_formula_maps_connectives() {
        assert_eq!(
            Structure::comma(vec![p(), q()]).to_formula(),
            Formula::fuse(Formula::atom("p"), Formula::atom("q"))
        );
        assert_eq!(
            Structure::semi(p(), q()).to_formula(),
            Formula::star(Formula::atom("p"), Formula::atom("q"))
        );
        assert_eq!(p().to_formula(), Formula::atom("p"));
    }

    #[test]
    fn symbol_size_ignores_structure_connectives() {
        let s = Structure::comma(vec![p(), q()]);
        assert_eq!(s.symbol_size(), 2);
        assert_eq!(Structure::leaf(s.to_formula()).symbol_size(), 3);
    }
}
