//! The dual differential algebra `B`: alternating words, the differential,
//! higher cut products, and bounded homology.
//!
//! ```text
//! cargo run --example algebra_b_words
//! ```

use ainfty::algebra_b::{
    b_diff, b_homology, b_mu, b_mul, b_render, BTerm, BWord,
};
use ainfty::ring::Params;

fn main() {
    let params = Params::new(3);

    // Words alternate sigma and rho letters; products concatenate only
    // when the junction alternates and the idempotents chain.
    let s1 = BWord::sigma(1);
    let r2 = BWord::rho(2);
    let prod = b_mul(&params, &r2, &s1).expect("r2 . s1 multiplies");
    println!("r2 * s1 = {}", b_render(&params, &BTerm::word(&params, prod.clone())));
    println!("s1 * s1 multiplies: {}", b_mul(&params, &s1, &s1).is_some());

    // The differential contracts an interior junction and emits the
    // petal variable it crosses.
    let d = b_diff(&params, &prod);
    let terms: Vec<String> = d.iter().map(|t| b_render(&params, t)).collect();
    println!("d(r2.s1) = {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });
    let bare = BWord::rho(1);
    let d = b_diff(&params, &bare);
    let terms: Vec<String> = d.iter().map(|t| b_render(&params, t)).collect();
    println!("d(r1) = {}", terms.join(" + "));

    // Higher products cut a stack of words along an allowable profile.
    let s3 = BWord::sigma(3);
    let s2 = BWord::sigma(2);
    let cut = b_mu(&params, &[&s3, &s2, &s1]);
    let terms: Vec<String> = cut.iter().map(|t| b_render(&params, t)).collect();
    println!("mu_3(s3, s2, s1) = {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });

    // Bounded homology: in words of length <= 2 the surviving classes are
    // the sigma_i and the composites sigma_{i+1} rho_{i+1} sigma_i.
    println!("\nhomology classes through length 2:");
    for (m, rep) in b_homology(&params, 2) {
        let terms: Vec<String> = rep.iter().map(|t| b_render(&params, t)).collect();
        println!("  maslov {m}: {}", terms.join(" + "));
    }
}
