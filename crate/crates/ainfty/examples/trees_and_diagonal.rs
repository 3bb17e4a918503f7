//! Weighted stable trees and the weighted associahedron diagonal.
//!
//! Builds the corolla complex for a 3-spoke star, takes a boundary, and
//! then constructs and verifies the diagonal used to pair the operations
//! of the two algebras.  Run with:
//!
//! ```text
//! cargo run --example trees_and_diagonal
//! ```

use ainfty::diagonal::{build_diagonal, pair_boundary, verify_diagonal};
use ainfty::ring::{Params, WeightVector};
use ainfty::tree::{boundary, RightMovingConfig, WTree};

fn main() {
    let params = Params::new(3);
    let zero = WeightVector::zero(&params);

    // A corolla with four inputs and no weight, and its boundary faces.
    let corolla = WTree::corolla(4, zero.clone());
    println!("corolla: {corolla}  (dim {})", corolla.dim(&params));
    println!("boundary faces:");
    for face in boundary(&corolla).iter() {
        println!("  {face}");
    }

    // A weighted corolla: one wrap of the central region e_0.
    let weighted = WTree::corolla(2, WeightVector::unit(&params, 0));
    println!("\nweighted corolla: {weighted}  (dim {})", weighted.dim(&params));

    // The diagonal: for every arity and weight in range, a chain of tree
    // pairs whose boundary matches the boundaries of the two factors.
    let config = RightMovingConfig::default();
    let diag = build_diagonal(&params, 5, 1, &config);
    println!("\ndiagonal components (arity, weight) -> pair count:");
    for ((n, w), chain) in &diag.components {
        println!("  ({n}, {w}) -> {}", chain.len());
    }

    // The arity-3 unweighted component is the classical Tamari diagonal.
    let chain = diag.component(3, &zero);
    println!("\narity-3 pairs:");
    for pair in chain.iter() {
        println!("  {} (x) {}", pair.left, pair.right);
    }
    println!("boundary of that chain is zero: {}", pair_boundary(&chain).is_zero());

    let pairs = verify_diagonal(&params, &diag, &config).expect("diagonal axioms");
    println!("\nverified {pairs} pairs against the diagonal axioms");
}
