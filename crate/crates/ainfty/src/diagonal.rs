//! The weighted diagonal on stable trees.
//!
//! To multiply two A-infinity algebras one needs a *diagonal*: for every
//! arity `n` and weight `w`, a chain `Gamma^{n,w}` of [`TreePair`]s whose
//! boundary matches the multiplicative extension of `Gamma` over the
//! boundary of the corolla `Psi_n^w`.  This module constructs such a
//! diagonal by induction on `(|w|, n)`, starting from the seeds
//!
//! ```text
//! Gamma^{2,0}   = Psi_2 (x) Psi_2
//! Gamma^{0,e_0} = stump (x) Psi_0^{e_0}
//! Gamma^{0,e_i} = Psi_0^{e_i} (x) stump     (1 <= i <= N+1)
//! ```
//!
//! Each new component is the canonical solution of a linear system over
//! `F_2`: the unknown chain ranges over pairs of stable trees of the
//! correct total dimension that are *right-moving* (every 3-leaf profile
//! pair is admissible), and free variables are set to zero, so the result
//! is deterministic.
//!
//! [`tensor_mu`] then evaluates the diagonal on pairs of algebra inputs —
//! the left tree factor in the weighted algebra `A`, the right factor in
//! the dual algebra `B` (with reversed written order) — with the weight
//! lost by each factor converted into a `V`-monomial.  This is the
//! structure map of the tensor product used by the duality theorem.

use crate::algebra_a::{a_op, AElement, ATerm, ABody};
use crate::algebra_b::{b_op, BBody, BElement, BTerm};
use crate::gf2::solve_sparse;
use crate::ring::{Combo, Params, VMonomial, WeightVector};
use crate::tree::{
    boundary, cofacets, glue, is_right_moving, RightMovingConfig, TreePair, TreePairChain, WTree,
};
use std::collections::{BTreeMap, BTreeSet};

/// A constructed diagonal: one chain of tree pairs per `(arity, weight)`.
#[derive(Clone, Debug)]
pub struct Diagonal {
    /// Largest arity stored at the full weight cap.
    pub max_inputs: usize,
    /// Cap on the total weight `|w|`.
    pub max_weight: u32,
    /// The components `Gamma^{n,w}`, keyed by `(n, w)`.
    pub components: BTreeMap<(usize, WeightVector), TreePairChain>,
}

impl Diagonal {
    /// The component `Gamma^{n,w}`, or the zero chain if outside the
    /// constructed range (or the skipped cases `(0,0)`, `(1,0)`).
    pub fn component(&self, n: usize, w: &WeightVector) -> TreePairChain {
        self.components
            .get(&(n, w.clone()))
            .cloned()
            .unwrap_or_else(Combo::zero)
    }
}

/// The mod-2 boundary of a chain of pairs: `dS (x) T + S (x) dT`.
pub fn pair_boundary(chain: &TreePairChain) -> TreePairChain {
    let mut out = Combo::zero();
    for p in chain.iter() {
        for ds in boundary(&p.left).0 {
            out.toggle(TreePair {
                left: ds,
                right: p.right.clone(),
            });
        }
        for dt in boundary(&p.right).0 {
            out.toggle(TreePair {
                left: p.left.clone(),
                right: dt,
            });
        }
    }
    out
}

/// The multiplicative extension of a partial diagonal over an arbitrary
/// stable tree: apply the corolla component at the root and glue the
/// children's values factorwise.  A shoot maps to `shoot (x) shoot`.
pub fn extend(diag: &Diagonal, t: &WTree) -> TreePairChain {
    match t {
        WTree::Shoot => Combo::singleton(TreePair {
            left: WTree::Shoot,
            right: WTree::Shoot,
        }),
        WTree::Stump => Combo::zero(),
        WTree::Node(w, children) => {
            let root = diag.component(children.len(), w);
            let mut acc: Vec<TreePair> = root.iter().cloned().collect();
            // Glue children from the last input position to the first so
            // earlier leaf indices stay valid.
            for (j, c) in children.iter().enumerate().rev() {
                let child_pairs = extend(diag, c);
                let mut next = Vec::new();
                for base in &acc {
                    for cp in child_pairs.iter() {
                        let Some(l) = glue(&base.left, j + 1, &cp.left) else {
                            continue;
                        };
                        let Some(r) = glue(&base.right, j + 1, &cp.right) else {
                            continue;
                        };
                        next.push(TreePair { left: l, right: r });
                    }
                }
                acc = next;
            }
            let mut out = Combo::zero();
            for p in acc {
                out.toggle(p);
            }
            out
        }
    }
}

/// All weight vectors with the given total.
pub(crate) fn weights_of_total(params: &Params, total: u32) -> Vec<WeightVector> {
    fn go(regions: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<WeightVector>) {
        if regions == 1 {
            prefix.push(total);
            out.push(WeightVector(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            go(regions - 1, total - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(params.num_regions(), total, &mut Vec::new(), &mut out);
    out
}

/// Builds the diagonal for all arities `n <= max_inputs` and weights
/// `|w| <= max_weight`, solving each component's boundary equation
/// canonically (free variables zero among right-moving candidates).
///
/// Panics if some component has no solution, which would falsify the
/// construction (or the basic right-moving pair table).
pub fn build_diagonal(
    params: &Params,
    max_inputs: usize,
    max_weight: u32,
    config: &RightMovingConfig,
) -> Diagonal {
    let mut diag = Diagonal {
        max_inputs,
        max_weight,
        components: BTreeMap::new(),
    };
    // Ascending total weight, then lexicographic weight, then arity.
    for total in 0..=max_weight {
        for w in weights_of_total(params, total) {
            // Components of lower weight are needed at slightly higher
            // arity (a boundary term can insert a weighted popsicle as an
            // extra child), so pad the arity range by the remaining
            // weight budget.
            let pad = (max_weight - total) as usize;
            for n in 0..=(max_inputs + pad) {
                if w.is_zero() && n <= 1 {
                    continue;
                }
                let chain = if w.is_zero() && n == 2 {
                    let psi2 = WTree::corolla(2, WeightVector::zero(params));
                    Combo::singleton(TreePair {
                        left: psi2.clone(),
                        right: psi2,
                    })
                } else if n == 0 && total == 1 {
                    let popsicle = WTree::corolla(0, w.clone());
                    if w == WeightVector::unit(params, 0) {
                        Combo::singleton(TreePair {
                            left: WTree::Stump,
                            right: popsicle,
                        })
                    } else {
                        Combo::singleton(TreePair {
                            left: popsicle,
                            right: WTree::Stump,
                        })
                    }
                } else {
                    solve_component(params, &diag, n, &w, config)
                };
                diag.components.insert((n, w.clone()), chain);
            }
        }
    }
    diag
}

/// Solves `d C = Gamma(d Psi_n^w)` for the next component.
///
/// Candidate pairs are discovered lazily: starting from the right-hand
/// side, repeatedly adjoin every right-moving cofacet (single-edge
/// contraction on one factor, with both factor weights still `<= w`) of a
/// reachable row, together with its boundary rows, until closed.  Any
/// solution supported on candidates connected to the right-hand side lies
/// in this closure, and a disconnected cancelling cluster could be
/// dropped from a solution anyway, so no generality is lost; the global
/// candidate set (hundreds of thousands of pairs at the larger
/// components) is never materialized.
fn solve_component(
    params: &Params,
    diag: &Diagonal,
    n: usize,
    w: &WeightVector,
    config: &RightMovingConfig,
) -> TreePairChain {
    let corolla = WTree::corolla(n, w.clone());
    let mut rhs = Combo::zero();
    for t in boundary(&corolla).0 {
        rhs.add(extend(diag, &t));
    }
    if rhs.is_zero() {
        return Combo::zero();
    }
    let mut rows: BTreeSet<TreePair> = rhs.iter().cloned().collect();
    let mut images: BTreeMap<TreePair, TreePairChain> = BTreeMap::new();
    let mut frontier: Vec<TreePair> = rows.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut new_rows: Vec<TreePair> = Vec::new();
        for r in &frontier {
            let mut consider = |cand: TreePair| {
                if images.contains_key(&cand)
                    || !cand.left.weight(params).le(w)
                    || !cand.right.weight(params).le(w)
                    || !is_right_moving(&cand, config)
                {
                    return;
                }
                let image = pair_boundary(&Combo::singleton(cand.clone()));
                for t in image.iter() {
                    if rows.insert(t.clone()) {
                        new_rows.push(t.clone());
                    }
                }
                images.insert(cand, image);
            };
            for l2 in cofacets(&r.left) {
                consider(TreePair {
                    left: l2,
                    right: r.right.clone(),
                });
            }
            for r2 in cofacets(&r.right) {
                consider(TreePair {
                    left: r.left.clone(),
                    right: r2,
                });
            }
        }
        frontier = new_rows;
    }
    let cands: Vec<&TreePair> = images.keys().collect();
    let index: BTreeMap<&TreePair, usize> = rows.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let to_sparse = |c: &TreePairChain| -> Vec<usize> {
        // Combo iterates in sorted term order, matching the row order.
        c.iter().map(|p| index[p]).collect()
    };
    let columns: Vec<Vec<usize>> = cands.iter().map(|c| to_sparse(&images[*c])).collect();
    let x = solve_sparse(&columns, &to_sparse(&rhs))
        .unwrap_or_else(|| panic!("no diagonal component at n = {n}, w = {w}"));
    let mut out = Combo::zero();
    for i in x {
        out.toggle(cands[i].clone());
    }
    out
}

/// Structural verification of a diagonal.  Checks, for every stored
/// component: total dimension and input counts (`WD1`), lost weights
/// nonnegative (`WD2`), canonical shape — seeds in place, no degenerate
/// pairs, all pairs right-moving (`WD4`) — and the chain-map equation on
/// the corolla.  The chain map is additionally re-checked on every
/// two-vertex composite within the caps, which exercises the
/// multiplicative extension and the gluing conventions.
///
/// Returns the number of `(component, pair)` entries checked, or a
/// description of the first failure.
pub fn verify_diagonal(
    params: &Params,
    diag: &Diagonal,
    config: &RightMovingConfig,
) -> Result<usize, String> {
    let mut pairs_checked = 0usize;
    for ((n, w), chain) in &diag.components {
        let target = *n as i64 + 2 * w.total() as i64 - 2;
        for p in chain.iter() {
            if p.left.num_inputs() != *n || p.right.num_inputs() != *n {
                return Err(format!("input count mismatch at n = {n}, w = {w}"));
            }
            if p.dim(params) != target {
                return Err(format!("dimension failure at n = {n}, w = {w}: {p:?}"));
            }
            if !p.left.weight(params).le(w) || !p.right.weight(params).le(w) {
                return Err(format!("negative lost weight at n = {n}, w = {w}"));
            }
            if matches!(
                (&p.left, &p.right),
                (WTree::Stump, WTree::Stump) | (WTree::Shoot, WTree::Shoot)
            ) {
                return Err(format!("degenerate pair at n = {n}, w = {w}"));
            }
            if !is_right_moving(p, config) {
                return Err(format!("pair not right-moving at n = {n}, w = {w}"));
            }
            pairs_checked += 1;
        }
        // Seeds.
        if w.is_zero() && *n == 2 {
            let psi2 = WTree::corolla(2, WeightVector::zero(params));
            if *chain
                != Combo::singleton(TreePair {
                    left: psi2.clone(),
                    right: psi2,
                })
            {
                return Err("seed at n = 2, w = 0 is not the corolla pair".into());
            }
        }
        // Chain map on the corolla.
        let corolla = WTree::corolla(*n, w.clone());
        let mut rhs = Combo::zero();
        for t in boundary(&corolla).0 {
            rhs.add(extend(diag, &t));
        }
        if pair_boundary(chain) != rhs {
            return Err(format!("chain map fails on the corolla n = {n}, w = {w}"));
        }
    }
    // Chain map on two-vertex composites: Gamma(d t) = d Gamma(t).
    for ((n, w), _) in &diag.components {
        if *n > diag.max_inputs {
            continue;
        }
        let corolla = WTree::corolla(*n, w.clone());
        for t in boundary(&corolla).0 {
            // Skip composites that reach outside the constructed range.
            if !composite_in_range(diag, &t) {
                continue;
            }
            let mut lhs = Combo::zero();
            for s in boundary(&t).0 {
                lhs.add(extend(diag, &s));
            }
            if pair_boundary(&extend(diag, &t)) != lhs {
                return Err(format!("chain map fails on the composite {t}"));
            }
        }
    }
    Ok(pairs_checked)
}

/// Is every vertex of the composite within the constructed component
/// table?
fn composite_in_range(diag: &Diagonal, t: &WTree) -> bool {
    match t {
        WTree::Stump | WTree::Shoot => true,
        WTree::Node(w, children) => {
            (diag.components.contains_key(&(children.len(), w.clone()))
                || (w.is_zero() && children.len() <= 1))
                && children.iter().all(|c| composite_in_range(diag, c))
        }
    }
}

/// A basis term of the tensor product `A (x) B`.
pub type TensorTerm = (ATerm, BTerm);

/// An `F_2`-combination of tensor terms.
pub type TensorElement = Combo<TensorTerm>;

/// Evaluates a tree in the weighted algebra `A`: each vertex applies the
/// operation of its weight and arity, shoots pass inputs through, and the
/// stump evaluates to the unit.
pub fn eval_tree_a(params: &Params, t: &WTree, inputs: &[AElement]) -> AElement {
    match t {
        WTree::Stump => {
            debug_assert!(inputs.is_empty());
            Combo::singleton(ATerm::bare(params, ABody::One))
        }
        WTree::Shoot => inputs[0].clone(),
        WTree::Node(w, children) => {
            let mut vals = Vec::with_capacity(children.len());
            let mut pos = 0;
            for c in children {
                let k = c.num_inputs();
                vals.push(eval_tree_a(params, c, &inputs[pos..pos + k]));
                pos += k;
            }
            a_op(params, w, &vals)
        }
    }
}

/// Evaluates a tree in the dual algebra `B`.  Inputs arrive in the same
/// leaf order as on the `A` side; since `B` composes right to left, the
/// child values are reversed at every vertex before applying the
/// operation.
pub fn eval_tree_b(params: &Params, t: &WTree, inputs: &[BElement]) -> BElement {
    match t {
        WTree::Stump => {
            debug_assert!(inputs.is_empty());
            Combo::singleton(BTerm {
                coeff: VMonomial::one(params),
                body: BBody::One,
            })
        }
        WTree::Shoot => inputs[0].clone(),
        WTree::Node(w, children) => {
            let mut vals = Vec::with_capacity(children.len());
            let mut pos = 0;
            for c in children {
                let k = c.num_inputs();
                vals.push(eval_tree_b(params, c, &inputs[pos..pos + k]));
                pos += k;
            }
            vals.reverse();
            b_op(params, w, &vals)
        }
    }
}

/// The structure map of the tensor product `A (x) B`: evaluates the
/// diagonal component `Gamma^{n,w}` on `n` pairs of inputs, with each
/// factor's lost weight `w - wt(tree)` contributing the `V`-monomial of
/// that weight.
pub fn tensor_mu(
    params: &Params,
    diag: &Diagonal,
    w: &WeightVector,
    inputs: &[(AElement, BElement)],
) -> TensorElement {
    let n = inputs.len();
    let a_inputs: Vec<AElement> = inputs.iter().map(|(a, _)| a.clone()).collect();
    let b_inputs: Vec<BElement> = inputs.iter().map(|(_, b)| b.clone()).collect();
    let mut out = Combo::zero();
    for pair in diag.component(n, w).iter() {
        let lost_a = w
            .checked_sub(&pair.left.weight(params))
            .expect("verified diagonal has nonnegative lost weight");
        let lost_b = w
            .checked_sub(&pair.right.weight(params))
            .expect("verified diagonal has nonnegative lost weight");
        let va = VMonomial::from_weight(&lost_a);
        let vb = VMonomial::from_weight(&lost_b);
        let a_val = eval_tree_a(params, &pair.left, &a_inputs);
        let b_val = eval_tree_b(params, &pair.right, &b_inputs);
        for ta in a_val.iter() {
            for tb in b_val.iter() {
                out.toggle((
                    ATerm {
                        coeff: ta.coeff.times(&va),
                        body: ta.body.clone(),
                    },
                    BTerm {
                        coeff: tb.coeff.times(&vb),
                        body: tb.body.clone(),
                    },
                ));
            }
        }
    }
    out
}

/// The differential of the tensor product: `id (x) d_B` (the algebra `A`
/// has no differential).
pub fn total_differential(params: &Params, elt: &TensorElement) -> TensorElement {
    let zero = WeightVector::zero(params);
    let mut out = Combo::zero();
    for (a, b) in elt.iter() {
        let db = b_op(params, &zero, &[Combo::singleton(b.clone())]);
        for tb in db.iter() {
            out.toggle((a.clone(), tb.clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Params;

    fn p3() -> Params {
        Params::new(3)
    }

    fn small_diag(params: &Params, max_n: usize, max_weight: u32) -> Diagonal {
        build_diagonal(params, max_n, max_weight, &RightMovingConfig::default())
    }

    #[test]
    fn unweighted_three_input_component_is_classical() {
        let p = p3();
        let diag = small_diag(&p, 4, 0);
        let zero = WeightVector::zero(&p);
        let psi2 = || WTree::corolla(2, zero.clone());
        let psi3 = WTree::corolla(3, zero.clone());
        let left_assoc = WTree::Node(zero.clone(), vec![psi2(), WTree::Shoot]);
        let right_assoc = WTree::Node(zero.clone(), vec![WTree::Shoot, psi2()]);
        let expect: TreePairChain = Combo::from_iter([
            TreePair {
                left: psi3.clone(),
                right: right_assoc,
            },
            TreePair {
                left: left_assoc,
                right: psi3,
            },
        ]);
        assert_eq!(diag.component(3, &zero), expect);
    }

    #[test]
    fn diagonal_verifies_small_weight() {
        let p = p3();
        let diag = small_diag(&p, 4, 1);
        let checked = verify_diagonal(&p, &diag, &RightMovingConfig::default()).unwrap();
        assert!(checked > 0);
    }

    #[test]
    fn weighted_popsicle_components_are_seeds() {
        let p = p3();
        let diag = small_diag(&p, 2, 1);
        let e0 = WeightVector::unit(&p, 0);
        let e2 = WeightVector::unit(&p, 2);
        assert_eq!(
            diag.component(0, &e0),
            Combo::singleton(TreePair {
                left: WTree::Stump,
                right: WTree::corolla(0, e0.clone()),
            })
        );
        assert_eq!(
            diag.component(0, &e2),
            Combo::singleton(TreePair {
                left: WTree::corolla(0, e2.clone()),
                right: WTree::Stump,
            })
        );
    }

    #[test]
    fn tensor_product_is_associative_at_arity_two() {
        // mu_2 on A (x) B through the diagonal is the componentwise
        // product, and the arity-3 component makes it associative up to
        // the (here vanishing) homotopy.
        use crate::algebra_a::ATerm;
        let p = p3();
        let diag = small_diag(&p, 3, 0);
        let zero = WeightVector::zero(&p);
        let x = (
            Combo::singleton(ATerm::u(&p, 1)),
            Combo::singleton(BTerm::sigma(&p, 1)),
        );
        let y = (
            Combo::singleton(ATerm::u(&p, 1)),
            Combo::singleton(BTerm::rho(&p, 2)),
        );
        let out = tensor_mu(&p, &diag, &zero, &[x, y]);
        // A side: U_1 * U_1 = U_1^2; B side: the second emitted letter
        // acts last, so the product is rho_2 * sigma_1 = r2.s1.
        assert_eq!(out.len(), 1);
        let (a, b) = out.iter().next().unwrap();
        assert_eq!(a.coeff, VMonomial::one(&p));
        match (&a.body, &b.body) {
            (crate::algebra_a::ABody::UPower { spoke, pow }, BBody::Word(w)) => {
                assert_eq!((*spoke, *pow), (1, 2));
                assert_eq!((w.start, w.len, w.left_rho, w.right_rho), (1, 1, true, false));
            }
            other => panic!("unexpected product {other:?}"),
        }
        // The mismatched pairing vanishes on the B side.
        let x2 = (
            Combo::singleton(ATerm::u(&p, 1)),
            Combo::singleton(BTerm::sigma(&p, 1)),
        );
        let y2 = (
            Combo::singleton(ATerm::u(&p, 1)),
            Combo::singleton(BTerm::rho(&p, 1)),
        );
        assert!(tensor_mu(&p, &diag, &zero, &[x2, y2]).is_zero());
    }

    #[test]
    fn sigma_corolla_evaluates_to_cut() {
        // The full sigma circuit under the N-corolla on the B side gives
        // V_{N+1} iota_1: the inputs (sigma_1, ..., sigma_N) in leaf order
        // are reversed into written order before multiplying.
        let p = p3();
        let zero = WeightVector::zero(&p);
        let corolla = WTree::corolla(3, zero.clone());
        let inputs: Vec<BElement> = (1..=3)
            .map(|i| Combo::singleton(BTerm::sigma(&p, i)))
            .collect();
        let out = eval_tree_b(&p, &corolla, &inputs);
        assert_eq!(
            out,
            Combo::singleton(BTerm {
                coeff: VMonomial::var(&p, 4),
                body: BBody::Unit(1),
            })
        );
    }
}
