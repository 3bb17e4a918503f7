//! The dual differential algebra `B` on the arc side of the star.
//!
//! `B` is spanned over `R = F_2[V_0, ..., V_{N+1}]` by alternating words in
//! letters `rho_i` (petal crossings) and `sigma_i` (arc crossings).  A word
//! descends left to right,
//!
//! ```text
//! [rho_{t+1}] sigma_t rho_t sigma_{t-1} ... rho_{s+1} sigma_s [rho_s]
//! ```
//!
//! with indices mod `N`; the interior `rho`s are always present and only
//! the two *flanking* `rho`s are optional, so a word is determined by its
//! starting spoke, its `sigma`-count `l`, and the two flank bits
//! ([`BWord`]).  Products compose right to left (the rightmost factor acts
//! first); two words concatenate when their junction alternates, and
//! `rho rho = sigma sigma = 0`.
//!
//! The differential removes a flanking `rho` at the cost of a `V`, and —
//! once a word is long enough to wrap the whole star (`l >= N`) — *cuts*
//! a full circuit of `N` sigmas out of one end, converting the circuit and
//! its interior petal crossings into the monomial
//! `V_{N+1} * prod {V_j : a rho_j was crossed}`.  The same cutting rule,
//! applied to a sequence of words with junction markers in place of
//! interior `rho`s, defines the higher products `mu_k` on *allowable*
//! sequences ([`b_mu`]).  One weighted operation exists: `mu_0^{e_0}`
//! equals the sum `U_0` of the `2N` singly flanked full-loop words.
//!
//! Everything is verified against the A-infinity relations by
//! [`b_relation_sum`]; the small-length homology needed by the duality
//! argument is computed in [`b_homology`].

use crate::ring::{
    maslov_of_vmonomial, AlexanderVector, Combo, MaslovGrade, Params, VMonomial, WeightVector,
};

/// An alternating word in `rho`/`sigma` letters, in normal form.
///
/// Invariants: `1 <= start <= N`; when `len == 0` the word is the bare
/// `rho_start`, canonicalized as `right_rho` (with `left_rho` unset).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BWord {
    /// The starting (initial-idempotent) spoke of the word.
    pub start: usize,
    /// The number of `sigma` letters.
    pub len: u32,
    /// Is the flanking `rho_{top+1}` present at the written left end?
    pub left_rho: bool,
    /// Is the flanking `rho_start` present at the written right end?
    pub right_rho: bool,
}

impl BWord {
    /// The generator `sigma_i`.
    pub fn sigma(i: usize) -> BWord {
        BWord {
            start: i,
            len: 1,
            left_rho: false,
            right_rho: false,
        }
    }

    /// The generator `rho_i` (a bare flank).
    pub fn rho(i: usize) -> BWord {
        BWord {
            start: i,
            len: 0,
            left_rho: false,
            right_rho: true,
        }
    }

    /// The initial idempotent (domain): the word acts out of spoke
    /// `start`.
    pub fn dom(&self) -> usize {
        self.start
    }

    /// The final idempotent (codomain): `start + len` mod `N`.
    pub fn cod(&self, params: &Params) -> usize {
        self.params_check(params);
        params.spoke_add(self.start, self.len as usize)
    }

    fn params_check(&self, params: &Params) {
        debug_assert!(self.start >= 1 && self.start <= params.n);
    }

    /// Does the first-acting (written-right) letter exist and equal `rho`?
    pub fn first_letter_is_rho(&self) -> bool {
        self.len == 0 || self.right_rho
    }

    /// Does the last-acting (written-left) letter equal `rho`?
    pub fn last_letter_is_rho(&self) -> bool {
        self.len == 0 || self.left_rho
    }

    /// Total number of letters.
    pub fn letters(&self) -> u32 {
        if self.len == 0 {
            1
        } else {
            2 * self.len - 1 + self.left_rho as u32 + self.right_rho as u32
        }
    }
}

/// The multiplicative part of a basis term of `B`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BBody {
    /// The central unit `1` (no idempotent attached).
    One,
    /// The idempotent unit `iota_i`.
    Unit(usize),
    /// A word.
    Word(BWord),
}

impl BBody {
    /// Initial idempotent, if any.
    pub fn dom(&self) -> Option<usize> {
        match self {
            BBody::One => None,
            BBody::Unit(i) => Some(*i),
            BBody::Word(w) => Some(w.dom()),
        }
    }

    /// Final idempotent, if any.
    pub fn cod(&self, params: &Params) -> Option<usize> {
        match self {
            BBody::One => None,
            BBody::Unit(i) => Some(*i),
            BBody::Word(w) => Some(w.cod(params)),
        }
    }
}

/// A basis term of `B`: a ground-ring monomial times a body.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BTerm {
    /// The `V`-monomial coefficient.
    pub coeff: VMonomial,
    /// The multiplicative part.
    pub body: BBody,
}

impl BTerm {
    /// A bare word with coefficient 1.
    pub fn word(params: &Params, w: BWord) -> BTerm {
        BTerm {
            coeff: VMonomial::one(params),
            body: BBody::Word(w),
        }
    }

    /// The generator `sigma_i`.
    pub fn sigma(params: &Params, i: usize) -> BTerm {
        BTerm::word(params, BWord::sigma(i))
    }

    /// The generator `rho_i`.
    pub fn rho(params: &Params, i: usize) -> BTerm {
        BTerm::word(params, BWord::rho(i))
    }
}

/// Renders a term in word syntax: letters left to right, `r{i}` and
/// `s{i}` separated by dots, e.g. `s2.r2.s1` with flanks
/// `r3.s2.r2.s1.r1`.  Spoke indices wrap mod `N`.
pub fn b_render(params: &Params, t: &BTerm) -> String {
    let coeff = if t.coeff.is_one() {
        String::new()
    } else {
        format!("{}*", t.coeff)
    };
    let body = match &t.body {
        BBody::One => "1".to_string(),
        BBody::Unit(i) => format!("iota{i}"),
        BBody::Word(w) => {
            let mut parts: Vec<String> = Vec::new();
            if w.len == 0 {
                parts.push(format!("r{}", w.start));
            } else {
                if w.left_rho {
                    parts.push(format!("r{}", w.cod(params)));
                }
                for k in (0..w.len as usize).rev() {
                    let idx = params.spoke_add(w.start, k);
                    parts.push(format!("s{idx}"));
                    if k > 0 {
                        parts.push(format!("r{idx}"));
                    }
                }
                if w.right_rho {
                    parts.push(format!("r{}", w.start));
                }
            }
            parts.join(".")
        }
    };
    format!("{coeff}{body}")
}

/// An `F_2`-linear combination of terms of `B`.
pub type BElement = Combo<BTerm>;

/// Maslov and Alexander gradings of a term.
pub fn b_gradings(params: &Params, t: &BTerm) -> (MaslovGrade, AlexanderVector) {
    let mut m = maslov_of_vmonomial(params, &t.coeff);
    let mut a = crate::ring::alexander_of_vmonomial(params, &t.coeff);
    if let BBody::Word(w) = &t.body {
        m -= w.letters() as i64;
        if w.len == 0 {
            a = a.plus(&AlexanderVector::slot(params, 2 * w.start - 1));
        } else {
            for k in 0..w.len as usize {
                let sp = params.spoke_add(w.start, k);
                a = a.plus(&AlexanderVector::slot(params, 2 * sp)); // sigma_sp
                if k > 0 {
                    a = a.plus(&AlexanderVector::slot(params, 2 * sp - 1)); // interior rho_sp
                }
            }
            if w.right_rho {
                a = a.plus(&AlexanderVector::slot(params, 2 * w.dom() - 1));
            }
            if w.left_rho {
                a = a.plus(&AlexanderVector::slot(params, 2 * w.cod(params) - 1));
            }
        }
    }
    (m, a)
}

/// The product `x * y` of two words (with `y` acting first).  `None` means
/// zero: the junction must alternate and the idempotents must chain.
pub fn b_mul(params: &Params, x: &BWord, y: &BWord) -> Option<BWord> {
    if x.dom() != y.cod(params) {
        return None;
    }
    // Junction letters: the first (written-right) letter of x against the
    // last (written-left) letter of y; exactly one must be a rho.
    if x.first_letter_is_rho() == y.last_letter_is_rho() {
        return None;
    }
    let len = x.len + y.len;
    if len == 0 {
        return None; // cannot happen: two bare rhos never alternate
    }
    Some(BWord {
        start: y.start,
        len,
        left_rho: x.last_letter_is_rho(),
        right_rho: y.first_letter_is_rho(),
    })
}

/// The element `U_0`: the sum of the `2N` singly flanked full loops.
pub fn u_zero(params: &Params) -> BElement {
    let mut out = Combo::zero();
    for i in 1..=params.n {
        out.toggle(BTerm::word(
            params,
            BWord {
                start: i,
                len: params.n as u32,
                left_rho: true,
                right_rho: false,
            },
        ));
        out.toggle(BTerm::word(
            params,
            BWord {
                start: i,
                len: params.n as u32,
                left_rho: false,
                right_rho: true,
            },
        ));
    }
    out
}

/// The weighted insertion `mu_0^w`: equals `U_0` for `w = e_0`, zero for
/// every other weight.
pub fn b_mu0_weighted(params: &Params, w: &WeightVector) -> BElement {
    if *w == WeightVector::unit(params, 0) {
        u_zero(params)
    } else {
        Combo::zero()
    }
}

/// The chronological cut profile of a sequence of words: the sigma
/// circuit walked first-to-last, with a marker at each gap recording
/// whether an interior `rho` sits there (`true`) or a junction comma
/// (`false`).
struct CutProfile {
    /// Initial idempotent of the whole sequence.
    dom: usize,
    /// Total sigma count.
    len: u32,
    /// `markers[g - 1]` describes the gap between chronological sigma `g`
    /// and `g + 1`, for `1 <= g <= len - 1`.
    markers: Vec<bool>,
    /// Flank `rho` at the written left end (on the last-acting word).
    left_flank: bool,
    /// Flank `rho` at the written right end (on the first-acting word).
    right_flank: bool,
    /// Sigma counts of the first-acting and last-acting words.
    first_len: u32,
    last_len: u32,
}

impl CutProfile {
    /// Builds the profile for words in chronological order (first-acting
    /// first).  Requires chained idempotents; flank shape conditions are
    /// checked by the caller.
    fn new(params: &Params, chron: &[&BWord]) -> Option<CutProfile> {
        let first = chron.first()?;
        let last = chron.last()?;
        let mut prev_cod: Option<usize> = None;
        for w in chron {
            if prev_cod.is_some_and(|c| w.dom() != c) {
                return None;
            }
            prev_cod = Some(w.cod(params));
        }
        // Walk the words, pushing one marker per interior gap (rho) and
        // one comma marker per junction between nonempty sigma blocks.
        let mut markers = Vec::new();
        let mut total = 0u32;
        for w in chron {
            if total > 0 && w.len > 0 {
                markers.push(false); // junction comma
            }
            for _ in 1..w.len {
                markers.push(true); // interior rho
            }
            total += w.len;
        }
        Some(CutProfile {
            dom: first.dom(),
            len: total,
            markers,
            left_flank: last.left_rho || last.len == 0,
            right_flank: first.right_rho || first.len == 0,
            first_len: first.len,
            last_len: last.len,
        })
    }

    /// Does the sequence stretch too far counted from the first-acting
    /// word (`S1`)?
    fn s1(&self, params: &Params) -> bool {
        self.len as i64 - self.first_len as i64 >= params.n as i64
    }

    /// Does it stretch too far counted from the last-acting word (`S2`)?
    fn s2(&self, params: &Params) -> bool {
        self.len as i64 - self.last_len as i64 >= params.n as i64
    }

    /// Spoke index of the gap `g` (between chronological sigmas `g` and
    /// `g + 1`).
    fn gap_spoke(&self, params: &Params, g: usize) -> usize {
        params.spoke_add(self.dom, g)
    }

    /// The cut removing the *last-acting* `N` sigmas (the written-left
    /// circuit); the remainder lives in the first-acting word.
    /// Requires `!s1`.
    fn cut_keep_first(&self, params: &Params) -> (VMonomial, BBody) {
        let n = params.n;
        let rem = self.len - n as u32;
        let mut v = VMonomial::var(params, params.outer());
        for g in (rem as usize + 1)..self.len as usize {
            if self.markers[g - 1] {
                v = v.times(&VMonomial::var(params, self.gap_spoke(params, g)));
            }
        }
        let body = if rem == 0 {
            if self.right_flank {
                BBody::Word(BWord::rho(self.dom))
            } else {
                BBody::Unit(self.dom)
            }
        } else {
            debug_assert!(self.markers[rem as usize - 1], "cut inside a word");
            BBody::Word(BWord {
                start: self.dom,
                len: rem,
                left_rho: true,
                right_rho: self.right_flank,
            })
        };
        (v, body)
    }

    /// The cut removing the *first-acting* `N` sigmas; the remainder lives
    /// in the last-acting word.  Requires `!s2`.
    fn cut_keep_last(&self, params: &Params) -> (VMonomial, BBody) {
        let n = params.n;
        let rem = self.len - n as u32;
        let mut v = VMonomial::var(params, params.outer());
        for g in 1..n {
            if self.markers[g - 1] {
                v = v.times(&VMonomial::var(params, self.gap_spoke(params, g)));
            }
        }
        let cod = params.spoke_add(self.dom, self.len as usize);
        let body = if rem == 0 {
            if self.left_flank {
                BBody::Word(BWord::rho(cod))
            } else {
                BBody::Unit(cod)
            }
        } else {
            debug_assert!(self.markers[n - 1], "cut inside a word");
            BBody::Word(BWord {
                start: self.gap_spoke(params, n),
                len: rem,
                left_rho: self.left_flank,
                right_rho: true,
            })
        };
        (v, body)
    }

    /// All cut terms of the profile, dispatched on flanking and the
    /// stretch predicates.  Empty when `len < N`.
    fn cut_terms(&self, params: &Params) -> Vec<(VMonomial, BBody)> {
        if (self.len as usize) < params.n {
            return Vec::new();
        }
        let (s1, s2) = (self.s1(params), self.s2(params));
        match (self.left_flank, self.right_flank) {
            (true, true) => Vec::new(),
            // The cut always runs away from a flank, keeping it.
            (true, false) => {
                if s2 {
                    Vec::new()
                } else {
                    vec![self.cut_keep_last(params)]
                }
            }
            (false, true) => {
                if s1 {
                    Vec::new()
                } else {
                    vec![self.cut_keep_first(params)]
                }
            }
            (false, false) => match (s1, s2) {
                (true, true) => Vec::new(),
                (true, false) => vec![self.cut_keep_last(params)],
                (false, true) => vec![self.cut_keep_first(params)],
                (false, false) => {
                    if self.len as usize == params.n {
                        // The two cuts coincide: a single term.
                        vec![self.cut_keep_first(params)]
                    } else {
                        vec![self.cut_keep_first(params), self.cut_keep_last(params)]
                    }
                }
            },
        }
    }
}

/// The differential of a word: flank removals (each costing its `V`),
/// plus the cut terms once the word wraps the star.
pub fn b_diff(params: &Params, w: &BWord) -> BElement {
    let mut out = Combo::zero();
    if w.len == 0 {
        // d(rho_i) = V_i iota_i.
        out.toggle(BTerm {
            coeff: VMonomial::var(params, w.start),
            body: BBody::Unit(w.start),
        });
        return out;
    }
    if w.left_rho {
        out.toggle(BTerm {
            coeff: VMonomial::var(params, w.cod(params)),
            body: BBody::Word(BWord {
                left_rho: false,
                ..w.clone()
            }),
        });
    }
    if w.right_rho {
        out.toggle(BTerm {
            coeff: VMonomial::var(params, w.dom()),
            body: BBody::Word(BWord {
                right_rho: false,
                ..w.clone()
            }),
        });
    }
    if let Some(profile) = CutProfile::new(params, &[w]) {
        for (v, body) in profile.cut_terms(params) {
            out.toggle(BTerm { coeff: v, body });
        }
    }
    out
}

/// Is the sequence (written order, first-acting last) *allowable* for the
/// higher products?  Checks arity, idempotent chaining, the stretch
/// conditions, impermissible flanking, and the shape condition on flanks.
pub fn is_allowable(params: &Params, written: &[&BWord]) -> bool {
    let k = written.len();
    if k < 2 || k > params.n {
        return false;
    }
    let chron: Vec<&BWord> = written.iter().rev().cloned().collect();
    // Shape: the first-acting word may carry only its outer (right) flank,
    // the last-acting only its outer (left) flank, middles none; every
    // word needs at least one sigma.
    if chron.iter().any(|w| w.len == 0) {
        return false;
    }
    let kk = chron.len();
    for (i, w) in chron.iter().enumerate() {
        if i > 0 && w.right_rho {
            return false;
        }
        if i < kk - 1 && w.left_rho {
            return false;
        }
    }
    let Some(profile) = CutProfile::new(params, &chron) else {
        return false;
    };
    if (profile.len as usize) < params.n {
        return false;
    }
    let (s1, s2) = (profile.s1(params), profile.s2(params));
    if s1 && s2 {
        return false; // stretches too far
    }
    // Impermissible flanking.
    if profile.left_flank && profile.right_flank {
        return false;
    }
    if profile.left_flank && s2 {
        return false;
    }
    if profile.right_flank && s1 {
        return false;
    }
    true
}

/// The higher product `mu_k` on words in written order `(b_k, ..., b_1)`
/// (the last entry acts first).  For `k = 2` this includes the
/// concatenation product; for any `k >= 2` an allowable sequence
/// contributes its cut terms.  Concatenability and allowability are
/// mutually exclusive (an allowable junction never alternates).
pub fn b_mu(params: &Params, written: &[&BWord]) -> BElement {
    let mut out = Combo::zero();
    if written.len() == 2 {
        if let Some(w) = b_mul(params, written[0], written[1]) {
            out.toggle(BTerm::word(params, w));
        }
    }
    if is_allowable(params, written) {
        let chron: Vec<&BWord> = written.iter().rev().cloned().collect();
        let profile = CutProfile::new(params, &chron).expect("allowable implies chained");
        for (v, body) in profile.cut_terms(params) {
            out.toggle(BTerm { coeff: v, body });
        }
    }
    out
}

/// Applies the appropriate operation of `B` to a block of elements in
/// written order: weighted insertion, differential, or (higher) product,
/// extended multilinearly, with units handled strictly.
pub fn b_op(params: &Params, w: &WeightVector, inputs: &[BElement]) -> BElement {
    if !w.is_zero() {
        // Only mu_0^{e_0} carries weight.
        if inputs.is_empty() {
            return b_mu0_weighted(params, w);
        }
        return Combo::zero();
    }
    if inputs.is_empty() {
        return Combo::zero();
    }
    // Multilinear expansion.
    let mut seqs: Vec<Vec<BTerm>> = vec![Vec::new()];
    for elt in inputs {
        let mut next = Vec::new();
        for seq in &seqs {
            for t in elt.iter() {
                let mut s = seq.clone();
                s.push(t.clone());
                next.push(s);
            }
        }
        seqs = next;
    }
    let mut out = Combo::zero();
    for terms in seqs {
        out.add(b_op_terms(params, &terms));
    }
    out
}

/// [`b_op`] on a single sequence of terms (written order, zero weight).
fn b_op_terms(params: &Params, terms: &[BTerm]) -> BElement {
    let coeff = terms
        .iter()
        .fold(VMonomial::one(params), |acc, t| acc.times(&t.coeff));
    let scale = |out: BElement, c: &VMonomial| -> BElement {
        out.map(|t| BTerm {
            coeff: t.coeff.times(c),
            body: t.body,
        })
    };
    match terms.len() {
        0 => Combo::zero(),
        1 => match &terms[0].body {
            BBody::Word(w) => scale(b_diff(params, w), &coeff),
            _ => Combo::zero(), // d(1) = d(iota) = 0
        },
        2 => {
            // mu_2: units multiply, words concatenate or cut.
            let out = match (&terms[0].body, &terms[1].body) {
                (BBody::One, b) | (b, BBody::One) => Combo::singleton(BTerm {
                    coeff: VMonomial::one(params),
                    body: b.clone(),
                }),
                (BBody::Unit(i), BBody::Unit(j)) => {
                    if i == j {
                        Combo::singleton(BTerm {
                            coeff: VMonomial::one(params),
                            body: BBody::Unit(*i),
                        })
                    } else {
                        Combo::zero()
                    }
                }
                (BBody::Unit(i), BBody::Word(y)) => {
                    if y.cod(params) == *i {
                        Combo::singleton(BTerm::word(params, y.clone()))
                    } else {
                        Combo::zero()
                    }
                }
                (BBody::Word(x), BBody::Unit(i)) => {
                    if x.dom() == *i {
                        Combo::singleton(BTerm::word(params, x.clone()))
                    } else {
                        Combo::zero()
                    }
                }
                (BBody::Word(x), BBody::Word(y)) => b_mu(params, &[x, y]),
            };
            scale(out, &coeff)
        }
        _ => {
            // Strict unitality: units kill higher products.
            let words: Option<Vec<&BWord>> = terms
                .iter()
                .map(|t| match &t.body {
                    BBody::Word(w) => Some(w),
                    _ => None,
                })
                .collect();
            match words {
                Some(ws) => scale(b_mu(params, &ws), &coeff),
                None => Combo::zero(),
            }
        }
    }
}

/// The full A-infinity relation sum on `(w, b_k, ..., b_1)` in written
/// order: over every contiguous block and weight split, compose the inner
/// block operation (differential, product, or `U_0` insertion) with the
/// outer operation on the contracted sequence, mod 2.
pub fn b_relation_sum(params: &Params, w: &WeightVector, items: &[BTerm]) -> BElement {
    let n = items.len();
    let mut total = Combo::zero();
    for (w_in, w_out) in w.splits() {
        for start in 0..=n {
            for len in 0..=(n - start) {
                if len == 0 && w_in.is_zero() {
                    continue;
                }
                let inner = b_op(
                    params,
                    &w_in,
                    &items[start..start + len]
                        .iter()
                        .map(|t| Combo::singleton(t.clone()))
                        .collect::<Vec<_>>(),
                );
                if inner.is_zero() {
                    continue;
                }
                let mut outer_inputs: Vec<BElement> = Vec::with_capacity(n - len + 1);
                for t in &items[..start] {
                    outer_inputs.push(Combo::singleton(t.clone()));
                }
                outer_inputs.push(inner);
                for t in &items[start + len..] {
                    outer_inputs.push(Combo::singleton(t.clone()));
                }
                total.add(b_op(params, &w_out, &outer_inputs));
            }
        }
    }
    total
}

/// All words with `1 <= len <= max_len` sigmas or a bare `rho`, all flank
/// combinations.
pub fn all_words(params: &Params, max_len: u32) -> Vec<BWord> {
    let mut out = Vec::new();
    for start in 1..=params.n {
        out.push(BWord::rho(start));
        for len in 1..=max_len {
            for (lr, rr) in [(false, false), (true, false), (false, true), (true, true)] {
                out.push(BWord {
                    start,
                    len,
                    left_rho: lr,
                    right_rho: rr,
                });
            }
        }
    }
    out
}

/// Homology of the word sector of `B` in lengths `<= max_len`.
///
/// The complex is spanned by the bare (coefficient-free) words; the
/// differential of a bare word always carries a nontrivial `V`-monomial,
/// so no bare word is a boundary and the homology is the kernel of the
/// differential.  Returns one `(maslov grading, representative)` pair per
/// class.
pub fn b_homology(params: &Params, max_len: u32) -> Vec<(MaslovGrade, BElement)> {
    use crate::gf2::{kernel, BitVec};
    let words = all_words(params, max_len);
    // Row space: every term appearing in any differential.
    let diffs: Vec<BElement> = words.iter().map(|w| b_diff(params, w)).collect();
    let mut rows: Vec<BTerm> = diffs
        .iter()
        .flat_map(|d| d.iter().cloned())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    rows.sort();
    let row_index: std::collections::BTreeMap<&BTerm, usize> =
        rows.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let columns: Vec<BitVec> = diffs
        .iter()
        .map(|d| {
            let mut col = BitVec::zeros(rows.len().max(1));
            for t in d.iter() {
                col.flip(row_index[t]);
            }
            col
        })
        .collect();
    kernel(&columns)
        .into_iter()
        .map(|sel| {
            let rep: BElement = sel
                .ones()
                .into_iter()
                .map(|i| BTerm::word(params, words[i].clone()))
                .collect();
            let m = rep
                .iter()
                .next()
                .map(|t| b_gradings(params, t).0)
                .unwrap_or(0);
            (m, rep)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Params {
        Params::new(3)
    }

    /// Convenience: the word with the given data.
    fn word(start: usize, len: u32, lr: bool, rr: bool) -> BWord {
        BWord {
            start,
            len,
            left_rho: lr,
            right_rho: rr,
        }
    }

    #[test]
    fn products_alternate() {
        let p = p3();
        // sigma_1 * rho_1: the word s1.r1.
        assert_eq!(
            b_mul(&p, &BWord::sigma(1), &BWord::rho(1)),
            Some(word(1, 1, false, true))
        );
        // rho_2 * sigma_1: the word r2.s1.
        assert_eq!(
            b_mul(&p, &BWord::rho(2), &BWord::sigma(1)),
            Some(word(1, 1, true, false))
        );
        // rho * rho and sigma * sigma vanish.
        assert_eq!(b_mul(&p, &BWord::rho(2), &BWord::rho(2)), None);
        assert_eq!(b_mul(&p, &BWord::sigma(2), &BWord::sigma(1)), None);
        // Mismatched idempotents vanish.
        assert_eq!(b_mul(&p, &BWord::sigma(3), &BWord::rho(1)), None);
    }

    #[test]
    fn gradings_match_tables() {
        let p = p3();
        // sigma_2 rho_2 sigma_1: m = -3, A = slots 2, 3, 4.
        let t = BTerm::word(&p, word(1, 2, false, false));
        let (m, a) = b_gradings(&p, &t);
        assert_eq!(m, -3);
        assert_eq!(a, AlexanderVector(vec![0, 1, 1, 1, 0, 0]));
        // U_0: every summand has m = -2N = -6.
        for t in u_zero(&p).iter() {
            assert_eq!(b_gradings(&p, t).0, -6);
        }
        // V_4 = V_{N+1}: m = -2, A = even slots.
        let v4 = BTerm {
            coeff: VMonomial::var(&p, 4),
            body: BBody::One,
        };
        let (m, a) = b_gradings(&p, &v4);
        assert_eq!(m, -2);
        assert_eq!(a, AlexanderVector(vec![0, 1, 0, 1, 0, 1]));
    }

    #[test]
    fn differential_short_words() {
        let p = p3();
        // d(rho_1) = V_1.
        assert_eq!(
            b_diff(&p, &BWord::rho(1)),
            Combo::singleton(BTerm {
                coeff: VMonomial::var(&p, 1),
                body: BBody::Unit(1),
            })
        );
        // d(sigma_i) = 0.
        assert!(b_diff(&p, &BWord::sigma(1)).is_zero());
        // d(r2.s1.r1) = V_2 * s1.r1 + V_1 * r2.s1.
        let d = b_diff(&p, &word(1, 1, true, true));
        let expect: BElement = Combo::from_iter([
            BTerm {
                coeff: VMonomial::var(&p, 2),
                body: BBody::Word(word(1, 1, false, true)),
            },
            BTerm {
                coeff: VMonomial::var(&p, 1),
                body: BBody::Word(word(1, 1, true, false)),
            },
        ]);
        assert_eq!(d, expect);
    }

    #[test]
    fn differential_long_unflanked_word() {
        // N=3: d(s1.r1.s3.r3.s2.r2.s1) = V1 V3 V4 * r2.s1 + V2 V3 V4 * s1.r1.
        let p = p3();
        let w = word(1, 4, false, false);
        let d = b_diff(&p, &w);
        let v134 = VMonomial(vec![0, 1, 0, 1, 1]);
        let v234 = VMonomial(vec![0, 0, 1, 1, 1]);
        let expect: BElement = Combo::from_iter([
            BTerm {
                coeff: v134,
                body: BBody::Word(word(1, 1, true, false)),
            },
            BTerm {
                coeff: v234,
                body: BBody::Word(word(1, 1, false, true)),
            },
        ]);
        assert_eq!(d, expect);
    }

    #[test]
    fn differential_full_loop() {
        // The unflanked full loop is not a cycle: d = prod_{j != i} V_j * iota_i.
        let p = p3();
        let d = b_diff(&p, &word(1, 3, false, false));
        assert_eq!(
            d,
            Combo::singleton(BTerm {
                coeff: VMonomial(vec![0, 0, 1, 1, 1]),
                body: BBody::Unit(1),
            })
        );
        // U_0 is a cycle.
        let mut total = Combo::zero();
        for t in u_zero(&p).iter() {
            if let BBody::Word(w) = &t.body {
                total.add(b_diff(&p, w));
            }
        }
        assert!(total.is_zero());
    }

    #[test]
    fn differential_squares_to_zero() {
        let p = p3();
        for w in all_words(&p, 2 * p.n as u32 + 2) {
            let mut dd = Combo::zero();
            for t in b_diff(&p, &w).iter() {
                if let BBody::Word(inner) = &t.body {
                    for s in b_diff(&p, inner).iter() {
                        dd.toggle(BTerm {
                            coeff: t.coeff.times(&s.coeff),
                            body: s.body.clone(),
                        });
                    }
                }
            }
            assert!(dd.is_zero(), "d^2 != 0 on {}", b_render(&p, &BTerm::word(&p, w.clone())));
        }
    }

    #[test]
    fn higher_products_cut() {
        let p = p3();
        // mu_3(sigma_3, sigma_2, sigma_1) = V_4.
        let out = b_mu(&p, &[&BWord::sigma(3), &BWord::sigma(2), &BWord::sigma(1)]);
        assert_eq!(
            out,
            Combo::singleton(BTerm {
                coeff: VMonomial::var(&p, 4),
                body: BBody::Unit(1),
            })
        );
        // mu_3(rho_1 sigma_3, sigma_2, sigma_1) = rho_1 V_4.
        let out = b_mu(&p, &[&word(3, 1, true, false), &BWord::sigma(2), &BWord::sigma(1)]);
        assert_eq!(
            out,
            Combo::singleton(BTerm {
                coeff: VMonomial::var(&p, 4),
                body: BBody::Word(BWord::rho(1)),
            })
        );
        // mu_2(sigma_2, s1.r1.s3.r3.s2.r2) = V_1 V_4 * r3.s2.r2 (a cut
        // away from the right flank).
        let out = b_mu(&p, &[&BWord::sigma(2), &word(2, 3, false, true)]);
        assert_eq!(
            out,
            Combo::singleton(BTerm {
                coeff: VMonomial(vec![0, 1, 0, 0, 1]),
                body: BBody::Word(word(2, 1, true, true)),
            })
        );
        // Arity beyond N vanishes.
        let s = BWord::sigma(1);
        let out = b_mu(&p, &[&BWord::sigma(1), &BWord::sigma(3), &BWord::sigma(2), &s]);
        assert!(out.is_zero());
    }

    #[test]
    fn leibniz_needs_long_concatenation() {
        // mu_2(rho_3, s2.r2.s1.r1.s3) must be the concatenation; the
        // relation sum on this pair exercises the long-concatenation rule.
        let p = p3();
        let x = BWord::rho(3);
        let y = word(3, 3, false, false);
        let out = b_mu(&p, &[&x, &y]);
        assert_eq!(out, Combo::singleton(BTerm::word(&p, word(3, 3, true, false))));
        let items = vec![BTerm::word(&p, x), BTerm::word(&p, y)];
        assert!(b_relation_sum(&p, &WeightVector::zero(&p), &items).is_zero());
    }

    #[test]
    fn relation_sum_with_weight_insertion() {
        // The U_0 insertion against weight e_0 closes the relation on a
        // single full-loop word: d(d(w)) + pushes = 0 termwise.
        let p = p3();
        let e0 = WeightVector::unit(&p, 0);
        // One bare rho: d(rho_i) = V_i; the weighted relation couples it
        // to mu_2 against U_0 summands.
        for i in 1..=3 {
            let items = vec![BTerm::rho(&p, i)];
            let sum = b_relation_sum(&p, &e0, &items);
            assert!(sum.is_zero(), "weighted relation failed on rho_{i}: {:?}", sum);
        }
    }

    #[test]
    fn relation_sum_sweep_small() {
        // Exhaustive check of the A-infinity relations over all pairs of
        // words up to three sigmas, with and without the central weight.
        let p = p3();
        let words = all_words(&p, 3);
        let zero = WeightVector::zero(&p);
        let e0 = WeightVector::unit(&p, 0);
        for x in &words {
            let items = vec![BTerm::word(&p, x.clone())];
            assert!(b_relation_sum(&p, &e0, &items).is_zero(), "e0 relation on {x:?}");
            for y in &words {
                let items = vec![BTerm::word(&p, x.clone()), BTerm::word(&p, y.clone())];
                let s = b_relation_sum(&p, &zero, &items);
                assert!(s.is_zero(), "relation failed on ({x:?}, {y:?}): {s:?}");
            }
        }
        // Triples of short words (sigmas and singly flanked length-1 words).
        let short: Vec<BWord> = words.iter().filter(|w| w.letters() <= 2).cloned().collect();
        for x in &short {
            for y in &short {
                for z in &short {
                    let items = vec![
                        BTerm::word(&p, x.clone()),
                        BTerm::word(&p, y.clone()),
                        BTerm::word(&p, z.clone()),
                    ];
                    let s = b_relation_sum(&p, &zero, &items);
                    assert!(s.is_zero(), "relation failed on ({x:?}, {y:?}, {z:?}): {s:?}");
                }
            }
        }
    }

    #[test]
    fn homology_census_at_len_two() {
        let p = p3();
        let classes = b_homology(&p, 2);
        assert_eq!(classes.len(), 6);
        let mut singles = 0;
        let mut doubles = 0;
        for (m, rep) in &classes {
            assert_eq!(rep.len(), 1);
            let t = rep.iter().next().unwrap();
            if let BBody::Word(w) = &t.body {
                assert!(!w.left_rho && !w.right_rho);
                match w.len {
                    1 => {
                        singles += 1;
                        assert_eq!(*m, -1);
                    }
                    2 => {
                        doubles += 1;
                        assert_eq!(*m, -3);
                    }
                    other => panic!("unexpected class length {other}"),
                }
            } else {
                panic!("non-word class");
            }
        }
        assert_eq!((singles, doubles), (3, 3));
    }
}
