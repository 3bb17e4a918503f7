//! Gradings: the Maslov and Alexander tables for weights, ground-ring
//! variables, and elements of both algebras, and the conservation law
//! satisfied by every operation.
//!
//! ```text
//! cargo run --example gradings
//! ```

use ainfty::algebra_a::{a_alexander, a_maslov, a_op, ATerm};
use ainfty::algebra_b::{b_gradings, b_render, BTerm};
use ainfty::ring::{
    alexander_of_weight, maslov_of_vmonomial, maslov_of_weight, Combo, Params, VMonomial,
    WeightVector,
};

fn main() {
    let params = Params::new(3);

    println!("weights (N = 3):");
    for r in 0..params.num_regions() {
        let w = WeightVector::unit(&params, r);
        println!(
            "  e{r}: maslov {}, alexander {:?}",
            maslov_of_weight(&params, &w),
            alexander_of_weight(&params, &w).0
        );
    }
    println!("variables:");
    for r in 0..params.num_regions() {
        println!(
            "  V{r}: maslov {}",
            maslov_of_vmonomial(&params, &VMonomial::var(&params, r))
        );
    }

    println!("\nalgebra elements:");
    for t in [ATerm::u(&params, 1), ATerm::s(&params, 1), ATerm::chord(&params, 1, 3)] {
        println!(
            "  {t}: maslov {}, alexander {:?}",
            a_maslov(&params, &t),
            a_alexander(&params, &t).0
        );
    }
    for t in [BTerm::rho(&params, 1), BTerm::sigma(&params, 1)] {
        let (m, a) = b_gradings(&params, &t);
        println!("  {}: maslov {m}, alexander {:?}", b_render(&params, &t), a.0);
    }

    // Conservation: a weighted operation with n inputs changes the Maslov
    // grading by m(w) + n - 2 and preserves the Alexander grading.
    let w = WeightVector::unit(&params, 1);
    let input = ATerm::u(&params, 1);
    let out = a_op(&params, &w, &[Combo::singleton(input.clone())]);
    for t in out.iter() {
        let expected = a_maslov(&params, &input) + maslov_of_weight(&params, &w) + 1 - 2;
        println!(
            "\nmu_1^e1(U1) = {t}: maslov {} (law predicts {expected})",
            a_maslov(&params, t)
        );
        let conserved = a_alexander(&params, t)
            == a_alexander(&params, &input).plus(&alexander_of_weight(&params, &w));
        println!("alexander conserved: {conserved}");
    }
}
