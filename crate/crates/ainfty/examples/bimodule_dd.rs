//! The DD bimodule `X`: the structure map, its iterates, and the census
//! of terms in the structure relation.
//!
//! ```text
//! cargo run --example bimodule_dd
//! ```

use ainfty::algebra_b::b_render;
use ainfty::bimodules::{dd_delta1, dd_paths, dd_relation_check, XGen};
use ainfty::diagonal::build_diagonal;
use ainfty::ring::Params;
use ainfty::tree::RightMovingConfig;

fn main() {
    let params = Params::new(3);

    // The structure map on each generator: a U-loop staying put and a
    // chord step moving to the next spoke.
    for i in 1..=3 {
        println!("delta^1(xbar_{i}):");
        for (a, b, g) in dd_delta1(&params, &XGen { i }) {
            println!("  {a} (x) {} (x) xbar_{}", b_render(&params, &b), g.i);
        }
    }

    // Iterates branch binarily: delta^2 from xbar_1 has four summands.
    println!("\ndelta^2(xbar_1):");
    for (aas, bs, g) in dd_paths(&params, &XGen { i: 1 }, 2) {
        let a: Vec<String> = aas.iter().map(|t| t.to_string()).collect();
        let b: Vec<String> = bs.iter().map(|t| b_render(&params, t)).collect();
        println!("  [{}] (x) [{}] (x) xbar_{}", a.join(", "), b.join(", "), g.i);
    }

    // The structure relation sums the weighted diagonal operations over
    // all iterates.  The sum cancels, and the nonzero terms before
    // cancellation form an exact census: each U_i (x) V_i twice, the outer
    // chord sum twice, and V_0 against the full loops twice.
    let diag = build_diagonal(&params, 2 * params.n, 1, &RightMovingConfig::default());
    let report = dd_relation_check(&params, &diag);
    println!("\nstructure relation cancels: {}", report.relations_hold);
    println!("census matches the expected table: {}", report.census_matches(&params));
    for (class, count) in &report.census {
        println!("  {class:?}: {count}");
    }
}
