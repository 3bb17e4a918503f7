//! The weighted A-infinity algebra `A`: products, curvature, recognition,
//! and the structure relations.
//!
//! ```text
//! cargo run --example algebra_a_operations
//! ```

use ainfty::algebra_a::{
    a_mul, a_op, a_recognize, a_relation_sum, u_outer, ABody, AInputSequence, ATerm,
};
use ainfty::ring::{Combo, Params, WeightVector};

fn main() {
    let params = Params::new(3);
    let zero = WeightVector::zero(&params);

    // Ordinary products: chords chain, powers stack, mixed products vanish.
    let s1 = ATerm::s(&params, 1);
    let s2 = ATerm::s(&params, 2);
    println!("s1 * s2 = {:?}", a_mul(&params, &s1, &s2).map(|t| t.to_string()));
    println!("s1 * s3 = {:?}", a_mul(&params, &s1, &ATerm::s(&params, 3)));
    let u1 = ATerm::u(&params, 1);
    println!("U1 * U1 = {:?}", a_mul(&params, &u1, &u1).map(|t| t.to_string()));
    println!("U1 * s1 = {:?}", a_mul(&params, &u1, &s1));

    // Curvature: wrapping petal i once pushes out U_i; wrapping the outer
    // petal pushes out the sum of full chords.
    for i in 1..=3 {
        let mu0 = a_op(&params, &WeightVector::unit(&params, i), &[]);
        let terms: Vec<String> = mu0.iter().map(|t| t.to_string()).collect();
        println!("mu_0 at weight e{i} = {}", terms.join(" + "));
    }
    let outer: Vec<String> = u_outer(&params).iter().map(|t| t.to_string()).collect();
    println!("mu_0 at weight e4 = {}", outer.join(" + "));

    // Recognition: the hexagon relation.  The six cyclic rotations of
    // (U1, s1, U2, s2, U3, s3) are the only centered 6-term operations,
    // each multiplying out to V0 at its root idempotent.
    let rotation: Vec<ATerm> = vec![
        ATerm::u(&params, 1),
        ATerm::s(&params, 1),
        ATerm::u(&params, 2),
        ATerm::s(&params, 2),
        ATerm::u(&params, 3),
        ATerm::s(&params, 3),
    ];
    let seq = AInputSequence {
        w: zero.clone(),
        items: rotation.clone(),
    };
    let out: Vec<String> = a_recognize(&params, &seq).iter().map(|t| t.to_string()).collect();
    println!("\nmu_6(U1, s1, U2, s2, U3, s3) = {}", out.join(" + "));

    // Structure relations: the full weighted relation sum vanishes.  Here
    // on the rotation above at weight 0, and on a weighted sequence.
    let sum = a_relation_sum(&params, &zero, &rotation);
    println!("relation sum on the hexagon: zero = {}", sum.is_zero());
    let weighted = [ATerm {
        coeff: ainfty::ring::VMonomial::one(&params),
        body: ABody::UPower { spoke: 1, pow: 2 },
    }];
    let sum = a_relation_sum(&params, &WeightVector::unit(&params, 1), &weighted);
    println!("relation sum at weight e1 on U1^2: zero = {}", sum.is_zero());

    // Weighted operations with inputs: a weight insertion acts like the
    // curvature term appearing inside a product.
    let op = a_op(
        &params,
        &WeightVector::unit(&params, 1),
        &[Combo::singleton(u1.clone())],
    );
    let terms: Vec<String> = op.iter().map(|t| t.to_string()).collect();
    println!("mu_1 at weight e1 on U1 = {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });
}
