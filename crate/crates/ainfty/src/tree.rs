//! Stably weighted planar trees and their boundary calculus.
//!
//! The cell complexes underlying the weighted associahedra are spanned by
//! planar rooted trees whose internal vertices carry weight vectors.  A
//! vertex is *stable* when it is at least 3-valent (counting the output) or
//! carries nonzero weight, so the corolla `Psi_n^w` with `n` inputs and
//! weight `w` exists whenever `n >= 2` or `|w| > 0`.  Two degenerate trees
//! are added by convention: the *stump* `⊤` (no inputs, no vertices) and the
//! *shoot* `↓` (a bare edge, the identity).
//!
//! The boundary `∂T` replaces one vertex by an edge in all possible ways:
//! a contiguous block of the vertex's inputs moves to a new upper vertex and
//! the vertex weight is distributed over the two new vertices, keeping only
//! stable results.  Everything is mod 2, so chains are [`Combo`]s of trees.
//!
//! Trees compose operadically ([`glue`], [`stack`]); composition with the
//! shoot is the identity and composition with the stump deletes an input of
//! a 3-valent vertex (and is zero otherwise).  The *profile* of a tree at a
//! subset of its inputs forgets the weights and contracts what remains;
//! profiles at 3-element subsets drive the right-moving admissibility test
//! used to pick a canonical diagonal.

use crate::ring::{Combo, Params, WeightVector};
use std::collections::BTreeSet;
use std::fmt;

/// A stably weighted planar tree (possibly one of the two degenerate
/// trees).
///
/// Inputs are represented by [`WTree::Shoot`] children; a vertex with no
/// children is a weighted popsicle.  The standalone `Shoot` is the identity
/// tree `↓` and `Stump` is `⊤`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WTree {
    /// The stump `⊤`: no inputs, dimension 0, and `-1` vertices by
    /// convention.
    Stump,
    /// The shoot `↓`: a bare edge with one input; the identity for gluing.
    Shoot,
    /// An internal vertex with a weight and an ordered list of children.
    Node(WeightVector, Vec<WTree>),
}

impl WTree {
    /// The corolla `Psi_n^w`: a single vertex with `n` input leaves.
    pub fn corolla(n: usize, w: WeightVector) -> WTree {
        WTree::Node(w, vec![WTree::Shoot; n])
    }

    /// Number of input leaves.
    pub fn num_inputs(&self) -> usize {
        match self {
            WTree::Stump => 0,
            WTree::Shoot => 1,
            WTree::Node(_, children) => children.iter().map(WTree::num_inputs).sum(),
        }
    }

    /// Number of internal vertices, with the stump convention `-1`.
    pub fn num_vertices(&self) -> i64 {
        match self {
            WTree::Stump => -1,
            WTree::Shoot => 0,
            WTree::Node(_, children) => {
                1 + children.iter().map(WTree::num_vertices).sum::<i64>()
            }
        }
    }

    /// Total weight vector `wt(T)`: the sum of all vertex weights.
    pub fn weight(&self, params: &Params) -> WeightVector {
        match self {
            WTree::Stump | WTree::Shoot => WeightVector::zero(params),
            WTree::Node(w, children) => children
                .iter()
                .fold(w.clone(), |acc, c| acc.plus(&c.weight(params))),
        }
    }

    /// The dimension `dim T = n + 2 wt(T) - |v| - 1`.
    pub fn dim(&self, params: &Params) -> i64 {
        self.num_inputs() as i64 + 2 * self.weight(params).total() as i64 - self.num_vertices()
            - 1
    }

    /// Is every vertex stable (at least 2 children, or nonzero weight)?
    pub fn is_stable(&self) -> bool {
        match self {
            WTree::Stump | WTree::Shoot => true,
            WTree::Node(w, children) => {
                (children.len() >= 2 || !w.is_zero()) && children.iter().all(WTree::is_stable)
            }
        }
    }
}

/// The mod-2 boundary `∂T`: all single-edge expansions of one vertex.
///
/// At each vertex, a contiguous block of children (possibly empty) moves to
/// a new upper vertex, and the vertex weight is split over the two vertices
/// in all componentwise ways; summands with an unstable vertex are dropped.
/// The dimension drops by exactly one.
pub fn boundary(t: &WTree) -> Combo<WTree> {
    let mut out = Combo::zero();
    let WTree::Node(w, children) = t else {
        return out;
    };
    // Expansions at the root vertex.
    let m = children.len();
    for len in 0..=m {
        for p in 0..=(m - len) {
            for (wu, wd) in w.splits() {
                let upper_stable = len >= 2 || !wu.is_zero();
                let lower_stable = m - len + 1 >= 2 || !wd.is_zero();
                if !upper_stable || !lower_stable {
                    continue;
                }
                let upper = WTree::Node(wu, children[p..p + len].to_vec());
                let mut lower_children = Vec::with_capacity(m - len + 1);
                lower_children.extend_from_slice(&children[..p]);
                lower_children.push(upper);
                lower_children.extend_from_slice(&children[p + len..]);
                out.toggle(WTree::Node(wd, lower_children));
            }
        }
    }
    // Expansions inside each child.
    for (i, c) in children.iter().enumerate() {
        for db in boundary(c).0 {
            let mut cs = children.clone();
            cs[i] = db;
            out.toggle(WTree::Node(w.clone(), cs));
        }
    }
    out
}

/// Extends [`boundary`] linearly to chains.
pub fn boundary_chain(chain: &Combo<WTree>) -> Combo<WTree> {
    let mut out = Combo::zero();
    for t in chain.iter() {
        out.add(boundary(t));
    }
    out
}

/// Operadic composition `t ∘_i s`: attaches the output of `s` to the
/// `i`-th input of `t` (1-based).  Returns `None` for the zero result.
///
/// Composition with the shoot is the identity in either direction.
/// Composition with the stump deletes the input if the adjacent vertex is
/// 3-valent (two children), contracting a resulting bare 2-valent vertex;
/// it is zero at higher-valent vertices.
pub fn glue(t: &WTree, i: usize, s: &WTree) -> Option<WTree> {
    debug_assert!(i >= 1 && i <= t.num_inputs());
    match s {
        WTree::Shoot => Some(t.clone()),
        WTree::Stump => glue_stump(t, i),
        sub => Some(graft(t, i, sub)),
    }
}

/// Grafts a non-degenerate tree into input `i` of `t`.
fn graft(t: &WTree, i: usize, s: &WTree) -> WTree {
    fn go(t: &WTree, i: &mut usize, s: &WTree, done: &mut bool) -> WTree {
        match t {
            WTree::Shoot => {
                if *done {
                    return WTree::Shoot;
                }
                *i -= 1;
                if *i == 0 {
                    *done = true;
                    s.clone()
                } else {
                    WTree::Shoot
                }
            }
            WTree::Stump => WTree::Stump,
            WTree::Node(w, children) => WTree::Node(
                w.clone(),
                children.iter().map(|c| go(c, i, s, done)).collect(),
            ),
        }
    }
    if let WTree::Shoot = t {
        return s.clone();
    }
    let mut idx = i;
    let mut done = false;
    go(t, &mut idx, s, &mut done)
}

/// Gluing with the stump: deletes input `i` at a 3-valent vertex.
fn glue_stump(t: &WTree, i: usize) -> Option<WTree> {
    match t {
        // ⊤ plugged into the bare edge is ⊤.
        WTree::Shoot => Some(WTree::Stump),
        WTree::Stump => None,
        WTree::Node(w, children) => {
            // Locate which child contains input i.
            let mut offset = i;
            for (k, c) in children.iter().enumerate() {
                let ni = c.num_inputs();
                if offset <= ni {
                    return if let WTree::Shoot = c {
                        // Direct input of this vertex: require 3-valence.
                        if children.len() != 2 {
                            return None;
                        }
                        let mut rest = children.clone();
                        rest.remove(k);
                        let only = rest.pop().expect("one sibling remains");
                        if w.is_zero() {
                            // A bare 2-valent vertex contracts away.
                            Some(only)
                        } else {
                            Some(WTree::Node(w.clone(), vec![only]))
                        }
                    } else {
                        let sub = glue_stump(c, offset)?;
                        let mut cs = children.clone();
                        cs[k] = sub;
                        Some(WTree::Node(w.clone(), cs))
                    };
                }
                offset -= ni;
            }
            unreachable!("input index out of range")
        }
    }
}

/// The stacking map: composes `s` into input `i` of `t`, i.e. `t ∘_i s`.
///
/// This is [`glue`] with the roles written in the order used by the
/// diagonal's multiplicative extension; weights add and input counts
/// compose.  Panics if `i` is out of range.
pub fn stack(t: &WTree, i: usize, s: &WTree) -> Option<WTree> {
    glue(t, i, s)
}

/// All trees having `t` as a boundary summand: every single-edge
/// contraction that merges an internal vertex into its parent (adding the
/// weights).  Contractions of stable trees are stable, and the dimension
/// rises by exactly one.
pub fn cofacets(t: &WTree) -> Vec<WTree> {
    let mut out = Vec::new();
    if let WTree::Node(w, children) = t {
        for (i, c) in children.iter().enumerate() {
            // Merge child i into the root.
            if let WTree::Node(cw, cc) = c {
                let mut nc = children.clone();
                nc.splice(i..=i, cc.iter().cloned());
                out.push(WTree::Node(w.plus(cw), nc));
            }
            // Or contract an edge strictly inside child i.
            for cf in cofacets(c) {
                let mut nc = children.clone();
                nc[i] = cf;
                out.push(WTree::Node(w.clone(), nc));
            }
        }
    }
    out
}

/// A summand of the weighted diagonal: a pair of trees with equal input
/// counts.  The lost-weight bookkeeping (`Y_1`, `Y_2` exponents) is
/// recovered from context as `w - wt(left)` and `w - wt(right)` relative to
/// the weight of the diagonal's source, so it is not stored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TreePair {
    /// The left tensor factor (evaluated in the weighted algebra).
    pub left: WTree,
    /// The right tensor factor (evaluated in the dual algebra).
    pub right: WTree,
}

impl TreePair {
    /// The pair's dimension: the sum of the factors' dimensions.
    pub fn dim(&self, params: &Params) -> i64 {
        self.left.dim(params) + self.right.dim(params)
    }
}

/// An `F_2`-chain of tree pairs.
pub type TreePairChain = Combo<TreePair>;

/// Shape of a 3-leaf profile tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Shape3 {
    /// Left-associated: `(xy)z`.
    Left,
    /// The 3-corolla.
    Corolla,
    /// Right-associated: `x(yz)`.
    Right,
}

/// The profile `T(I)`: keeps the inputs in `I` (1-based), drops empty
/// branches, contracts single-child vertices, and forgets weights.
///
/// Returns `None` when no input survives.
pub fn profile(t: &WTree, keep: &BTreeSet<usize>) -> Option<WTree> {
    fn go(t: &WTree, counter: &mut usize, keep: &BTreeSet<usize>, params_len: usize) -> Option<WTree> {
        match t {
            WTree::Stump => None,
            WTree::Shoot => {
                *counter += 1;
                keep.contains(counter).then_some(WTree::Shoot)
            }
            WTree::Node(_, children) => {
                let kept: Vec<WTree> = children
                    .iter()
                    .filter_map(|c| go(c, counter, keep, params_len))
                    .collect();
                match kept.len() {
                    0 => None,
                    1 => Some(kept.into_iter().next().expect("one child")),
                    _ => Some(WTree::Node(WeightVector(vec![0; params_len]), kept)),
                }
            }
        }
    }
    let params_len = match t {
        WTree::Node(w, _) => w.0.len(),
        _ => 0,
    };
    let mut counter = 0;
    go(t, &mut counter, keep, params_len)
}

/// Classifies a 3-input profile tree into its associativity shape.
pub fn shape3(t: &WTree) -> Shape3 {
    match t {
        WTree::Node(_, children) if children.len() == 3 => Shape3::Corolla,
        WTree::Node(_, children) if children.len() == 2 => match (&children[0], &children[1]) {
            (WTree::Node(_, _), WTree::Shoot) => Shape3::Left,
            (WTree::Shoot, WTree::Node(_, _)) => Shape3::Right,
            other => panic!("not a 3-leaf profile: {other:?}"),
        },
        other => panic!("not a 3-leaf profile: {other:?}"),
    }
}

/// Configuration of basic right-moving profile pairs.
///
/// The defining data of the diagonal is which pairs of 3-leaf shapes are
/// admissible.  The default is the standard right-moving convention in
/// the order `Left < Corolla < Right`: the left factor is never more
/// right-associated than the right factor.  This is the unique convention
/// (up to mirror) under which the classical diagonal on the arity-4
/// associahedron is admissible, and it reproduces the usual two-term
/// arity-3 component.
#[derive(Clone, Debug)]
pub struct RightMovingConfig {
    /// The admissible `(left shape, right shape)` pairs.
    pub allowed: BTreeSet<(Shape3, Shape3)>,
}

impl Default for RightMovingConfig {
    fn default() -> Self {
        use Shape3::*;
        RightMovingConfig {
            allowed: BTreeSet::from([
                (Left, Left),
                (Left, Corolla),
                (Left, Right),
                (Corolla, Corolla),
                (Corolla, Right),
                (Right, Right),
            ]),
        }
    }
}

/// Is the pair right-moving: does every 3-subset of inputs profile to an
/// admissible pair of shapes?  Vacuously true below 3 inputs; weights are
/// ignored throughout.
pub fn is_right_moving(pair: &TreePair, config: &RightMovingConfig) -> bool {
    let n = pair.left.num_inputs();
    debug_assert_eq!(n, pair.right.num_inputs());
    if n < 3 {
        return true;
    }
    for a in 1..=n {
        for b in (a + 1)..=n {
            for c in (b + 1)..=n {
                let keep = BTreeSet::from([a, b, c]);
                let sl = shape3(&profile(&pair.left, &keep).expect("3 inputs kept"));
                let sr = shape3(&profile(&pair.right, &keep).expect("3 inputs kept"));
                if !config.allowed.contains(&(sl, sr)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Enumerates all stable trees with `n` inputs and total weight `<= wcap`
/// componentwise, rooted at an internal vertex (the degenerate trees `⊤`
/// and `↓` are not included).
pub fn stable_trees(params: &Params, n: usize, wcap: &WeightVector) -> Vec<WTree> {
    debug_assert_eq!(wcap.0.len(), params.num_regions());
    let mut e = Enumerator::new();
    let mut out = Vec::new();
    for (w, _) in wcap.splits() {
        out.extend(e.rooted_exact(n, &w));
    }
    out.sort();
    out.dedup();
    out
}

/// Memoized enumerator of stable rooted trees by exact total weight.
struct Enumerator {
    memo: std::collections::HashMap<(usize, WeightVector), Vec<WTree>>,
}

impl Enumerator {
    fn new() -> Self {
        Enumerator {
            memo: std::collections::HashMap::new(),
        }
    }

    /// All stable rooted trees with `n` inputs and total weight exactly `w`.
    fn rooted_exact(&mut self, n: usize, w: &WeightVector) -> Vec<WTree> {
        if let Some(cached) = self.memo.get(&(n, w.clone())) {
            return cached.clone();
        }
        let mut out = Vec::new();
        for (wr, rest) in w.splits() {
            // A weightless root needs >= 2 children, so a single rooted
            // child carrying all inputs and all remaining weight is barred;
            // this is also what keeps the recursion well-founded (it would
            // otherwise chase towers of bare 2-valent vertices).
            let bar_full = wr.is_zero();
            for children in self.forests_exact(n, &rest, bar_full) {
                if children.len() >= 2 || !wr.is_zero() {
                    let t = WTree::Node(wr.clone(), children);
                    debug_assert!(t.is_stable());
                    out.push(t);
                }
            }
        }
        out.sort();
        out.dedup();
        self.memo.insert((n, w.clone()), out.clone());
        out
    }

    /// Ordered child sequences with exactly `n` total inputs and total
    /// weight exactly `w`.  With `bar_full`, a sequence consisting of a
    /// single rooted child taking everything is skipped.
    fn forests_exact(&mut self, n: usize, w: &WeightVector, bar_full: bool) -> Vec<Vec<WTree>> {
        let mut out = Vec::new();
        if n == 0 && w.is_zero() {
            out.push(Vec::new());
        }
        // First child is a shoot ...
        if n >= 1 {
            for mut rest in self.forests_exact(n - 1, w, false) {
                rest.insert(0, WTree::Shoot);
                out.push(rest);
            }
        }
        // ... or a rooted subtree consuming `k` inputs and weight `u`.
        for k in 0..=n {
            for (u, remaining) in w.splits() {
                if k == 0 && u.is_zero() {
                    continue;
                }
                if bar_full && k == n && u == *w {
                    continue;
                }
                for t in self.rooted_exact(k, &u) {
                    for mut rest in self.forests_exact(n - k, &remaining, false) {
                        rest.insert(0, t.clone());
                        out.push(rest);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for WTree {
    /// Parenthesized term syntax: `^` for the stump, `|` for the shoot,
    /// `(w; c1 c2 ...)` for a vertex with weight `w` and children `ci`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WTree::Stump => write!(f, "^"),
            WTree::Shoot => write!(f, "|"),
            WTree::Node(w, children) => {
                write!(f, "({w};")?;
                for c in children {
                    write!(f, " {c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Params {
        Params::new(3)
    }

    fn zero_w() -> WeightVector {
        WeightVector::zero(&p3())
    }

    fn corolla(n: usize) -> WTree {
        WTree::corolla(n, zero_w())
    }

    /// The left-associated 3-input binary tree `(xy)z`.
    fn left3() -> WTree {
        WTree::Node(zero_w(), vec![corolla(2), WTree::Shoot])
    }

    /// The right-associated 3-input binary tree `x(yz)`.
    fn right3() -> WTree {
        WTree::Node(zero_w(), vec![WTree::Shoot, corolla(2)])
    }

    #[test]
    fn dims_of_basic_trees() {
        let p = p3();
        assert_eq!(WTree::Stump.dim(&p), 0);
        assert_eq!(WTree::Shoot.dim(&p), 0);
        for n in 2..6 {
            assert_eq!(corolla(n).dim(&p), n as i64 - 2);
        }
        // A weighted popsicle Psi_0^{e_1} has dimension 0 + 2 - 1 - 1 = 0.
        let pops = WTree::corolla(0, WeightVector::unit(&p, 1));
        assert_eq!(pops.dim(&p), 0);
        // The weighted 1-corolla Psi_1^{e_1} has dimension 1.
        let w1 = WTree::corolla(1, WeightVector::unit(&p, 1));
        assert_eq!(w1.dim(&p), 1);
    }

    #[test]
    fn boundary_of_small_corollas() {
        let p = p3();
        assert!(boundary(&corolla(2)).is_zero());
        // ∂Psi_3 is the two binary trees.
        let b = boundary(&corolla(3));
        assert_eq!(b, Combo::from_iter([left3(), right3()]));
        for t in b.iter() {
            assert_eq!(t.dim(&p), corolla(3).dim(&p) - 1);
        }
    }

    #[test]
    fn boundary_of_weighted_one_corolla() {
        // ∂Psi_1^{e_1}: the popsicle splits off to the left or right of the
        // input.
        let p = p3();
        let e1 = WeightVector::unit(&p, 1);
        let b = boundary(&WTree::corolla(1, e1.clone()));
        let pops = WTree::corolla(0, e1);
        let left = WTree::Node(zero_w(), vec![pops.clone(), WTree::Shoot]);
        let right = WTree::Node(zero_w(), vec![WTree::Shoot, pops]);
        assert_eq!(b, Combo::from_iter([left, right]));
    }

    #[test]
    fn boundary_squares_to_zero_small_range() {
        let p = p3();
        let mut wcap = WeightVector::zero(&p);
        wcap.0[1] = 1;
        wcap.0[0] = 1;
        for n in 0..=4 {
            for t in stable_trees(&p, n, &wcap) {
                let bb = boundary_chain(&boundary(&t));
                assert!(bb.is_zero(), "∂∂ != 0 on {t}");
                for s in boundary(&t).iter() {
                    assert_eq!(s.dim(&p), t.dim(&p) - 1, "dim drop failed on {t}");
                }
            }
        }
    }

    #[test]
    fn cofacets_invert_boundary() {
        // Every cofacet contains the tree in its boundary, raises the
        // dimension by one, and stays stable.
        let p = Params::new(3);
        let mut wcap = WeightVector::zero(&p);
        wcap.0[0] = 1;
        wcap.0[1] = 1;
        for n in 0..=4 {
            for t in stable_trees(&p, n, &wcap) {
                for c in cofacets(&t) {
                    assert!(c.is_stable(), "unstable cofacet {c} of {t}");
                    assert_eq!(c.dim(&p), t.dim(&p) + 1);
                    assert!(boundary(&c).iter().any(|s| *s == t), "{t} not in d({c})");
                }
                // Conversely, each boundary facet lists t as a cofacet.
                for s in boundary(&t).iter() {
                    assert!(cofacets(s).contains(&t), "{t} missing from cofacets({s})");
                }
            }
        }
    }

    #[test]
    fn glue_degenerate_rules() {
        // Shoots are identities.
        assert_eq!(glue(&corolla(4), 2, &WTree::Shoot), Some(corolla(4)));
        // The stump deletes an input of a 3-valent vertex...
        assert_eq!(glue(&corolla(2), 1, &WTree::Stump), Some(WTree::Shoot));
        // ... and kills higher-valent vertices.
        assert_eq!(glue(&corolla(4), 2, &WTree::Stump), None);
        // ⊤ into ↓ is ⊤.
        assert_eq!(glue(&WTree::Shoot, 1, &WTree::Stump), Some(WTree::Stump));
        // A weighted 2-valent vertex survives stump gluing.
        let p = p3();
        let wt = WTree::corolla(2, WeightVector::unit(&p, 1));
        assert_eq!(
            glue(&wt, 1, &WTree::Stump),
            Some(WTree::Node(WeightVector::unit(&p, 1), vec![WTree::Shoot]))
        );
    }

    #[test]
    fn stack_builds_binary_trees() {
        assert_eq!(stack(&corolla(2), 1, &corolla(2)), Some(left3()));
        assert_eq!(stack(&corolla(2), 2, &corolla(2)), Some(right3()));
    }

    #[test]
    fn profiles_and_right_moving() {
        let config = RightMovingConfig::default();
        let all = BTreeSet::from([1, 2, 3]);
        assert_eq!(shape3(&profile(&left3(), &all).unwrap()), Shape3::Left);
        assert_eq!(shape3(&profile(&right3(), &all).unwrap()), Shape3::Right);
        assert_eq!(shape3(&profile(&corolla(3), &all).unwrap()), Shape3::Corolla);
        // Dropping a leaf of a binary tree contracts to the 2-corolla.
        let two = BTreeSet::from([1, 3]);
        assert_eq!(profile(&left3(), &two).unwrap(), corolla(2));

        let pair = |l: WTree, r: WTree| TreePair { left: l, right: r };
        assert!(is_right_moving(&pair(corolla(3), corolla(3)), &config));
        assert!(is_right_moving(&pair(left3(), right3()), &config));
        assert!(!is_right_moving(&pair(right3(), corolla(3)), &config));
        assert!(!is_right_moving(&pair(corolla(3), left3()), &config));
    }

    #[test]
    fn enumeration_matches_known_counts() {
        let p = p3();
        // Unweighted stable trees with 3 inputs: corolla and two binaries.
        let ts = stable_trees(&p, 3, &WeightVector::zero(&p));
        assert_eq!(ts.len(), 3);
        // All enumerated trees are stable with the right input count.
        let mut wcap = WeightVector::zero(&p);
        wcap.0[2] = 1;
        for n in 0..4 {
            for t in stable_trees(&p, n, &wcap) {
                assert!(t.is_stable());
                assert_eq!(t.num_inputs(), n);
                assert!(t.weight(&p).le(&wcap));
            }
        }
    }
}
