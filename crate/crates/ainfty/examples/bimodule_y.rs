//! The AA bimodule `Y`: recognizing operations through the matching
//! condition and checking the bimodule relations.
//!
//! ```text
//! cargo run --example bimodule_y
//! ```

use ainfty::algebra_a::ATerm;
use ainfty::algebra_b::{BBody, BTerm};
use ainfty::bimodules::{y_matching, y_recognize, y_relation_sum, YGen, YQuery};
use ainfty::ring::{Params, VMonomial, WeightVector};

fn main() {
    let params = Params::new(3);
    let zero = WeightVector::zero(&params);

    // The basic actions: each B-letter cancels against its A-partner.
    // m_{1|1}(rho_1, {1}, U_1) = {1}:
    let q = YQuery {
        w: zero.clone(),
        bs: vec![BTerm::rho(&params, 1)],
        x: YGen { i: 1 },
        aas: vec![ATerm::u(&params, 1)],
    };
    println!("m(rho1, {{1}}, U1) = {:?}", y_recognize(&params, &q));
    println!("  matching: {:?}", y_matching(&params, &q));

    // m_{1|1}(sigma_1, {1}, s_1) = {2}: the sigma action moves the
    // generator to the next spoke.
    let q = YQuery {
        w: zero.clone(),
        bs: vec![BTerm::sigma(&params, 1)],
        x: YGen { i: 1 },
        aas: vec![ATerm::s(&params, 1)],
    };
    println!("m(sigma1, {{1}}, s1) = {:?}", y_recognize(&params, &q));

    // A weighted operation with a ground-ring input:
    // m^{e_0}_{1|0}(V_0, x) = x for every generator.
    let v0 = BTerm {
        coeff: VMonomial::var(&params, 0),
        body: BBody::One,
    };
    let q = YQuery {
        w: WeightVector::unit(&params, 0),
        bs: vec![v0],
        x: YGen { i: 2 },
        aas: vec![],
    };
    println!("m^e0(V0, {{2}}) = {:?}", y_recognize(&params, &q));

    // Order matters: the matching must pair letters without crossings.
    let crossed = YQuery {
        w: zero.clone(),
        bs: vec![BTerm::rho(&params, 2), BTerm::sigma(&params, 1)],
        x: YGen { i: 1 },
        aas: vec![ATerm::u(&params, 2), ATerm::s(&params, 1)],
    };
    println!("crossed query recognized: {}", y_recognize(&params, &crossed).is_some());

    // The A-infinity bimodule relation: the full composition sum cancels.
    // Here the weight-e1 relation on (rho_1, {1}), where the differential
    // of rho_1 cancels against the weighted curvature push.
    let q = YQuery {
        w: WeightVector::unit(&params, 1),
        bs: vec![BTerm::rho(&params, 1)],
        x: YGen { i: 1 },
        aas: vec![],
    };
    println!(
        "relation sum at weight e1 on (rho1, {{1}}): zero = {}",
        y_relation_sum(&params, &q).is_zero()
    );
}
