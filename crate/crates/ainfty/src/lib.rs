//! Exact computational algebra for a Koszul-dual pair of weighted
//! A-infinity algebras attached to a star-shaped diagram.
//!
//! Fix a parameter `N >= 2` and consider a star with `N` spokes and `N + 1`
//! petals (one petal between each pair of consecutive spokes, plus an outer
//! petal).  Two algebras over `F_2[V_0, ..., V_{N+1}]` are attached to this
//! picture:
//!
//! * a *weighted* A-infinity algebra `A`, generated by spoke elements `U_i`
//!   and chords `s_{ij}`, whose higher weighted operations count immersed
//!   polygons wrapping the star ([`algebra_a`]);
//! * an ordinary differential algebra `B` on words in letters `rho_i`,
//!   `sigma_i`, with a differential and higher products governed by a cutting
//!   rule ([`algebra_b`]).
//!
//! The two are Koszul dual.  The duality is witnessed by a pair of bimodules
//! — a DD bimodule `X` over `(A, B)` and an AA bimodule `Y` — whose box
//! tensor products are equivalent to identity bimodules ([`bimodules`]).
//! Pairing the higher operations of `A` and `B` against each other requires a
//! weighted-tree diagonal, constructed combinatorially in [`tree`] and
//! [`diagonal`].
//!
//! Everything here is exact arithmetic over `F_2`; there is no floating
//! point anywhere.  The crate's primary interface is the `examples/`
//! directory (one runnable example per capability) together with the thin
//! `ainfty` binary, which runs the verification suites and emits JSON
//! reports ([`report`]).
//!
//! # Conventions
//!
//! * Spokes are numbered `1..=N`, cyclically; petal `i` sits on spoke `i`
//!   for `1 <= i <= N`, petal `N + 1` is the outer petal, and index `0`
//!   refers to the central region.
//! * The star has `2N` angular slots around its boundary: slot `2i - 1` is
//!   the petal slot on spoke `i` and slot `2i` is the arc between spokes
//!   `i` and `i + 1`.  Alexander gradings live in `Z^{2N}` indexed by slots.
//! * All chain-level computations happen over `F_2`: element containers are
//!   sets of basis terms with symmetric-difference addition.

pub mod algebra_a;
pub mod algebra_b;
pub mod bimodules;
pub mod diagonal;
pub mod gf2;
pub mod report;
pub mod ring;
pub mod tree;
