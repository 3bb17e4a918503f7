//! The bimodules tying the two algebras together, and the duality checks.
//!
//! Three structures live here:
//!
//! * the AA-bimodule `Y`, with `B` acting on the left and `A` on the right,
//!   spanned by one generator `{i}` per spoke.  Its operations
//!   `m_{k|n}^w(b_k, ..., b_1, x, a_1, ..., a_n)` are recognized at the
//!   sequence level ([`y_recognize`]): chained idempotents anchored at the
//!   module generator, a Maslov count, and the existence of an
//!   order-preserving *matching* pairing every basic letter, weight, and
//!   `V`-coefficient on one side with a partner of equal Alexander grading
//!   on the other ([`y_matching`]);
//! * the DD-bimodule `X`, with one generator `x̄_i` (the complement of
//!   `{i}`) per spoke and structure map
//!   `δ¹(x̄_i) = U_i ⊗ ρ_i ⊗ x̄_i + s_i ⊗ σ_i ⊗ x̄_{i+1}`.  Its defining
//!   relation sums the tensor-algebra operations over all iterates `δⁿ`,
//!   and the nonzero terms *before* cancellation form a precise census
//!   ([`dd_relation_check`]);
//! * the box products `X ⊠ Y` and `Y ⊠ X`, computed for zero or one
//!   outer algebra input ([`box_delta_xy`], [`box_delta_yx`]).  Both have
//!   vanishing `δ¹₁`, so each determines an algebra endomorphism
//!   ([`extract_phi`]); `φ₁` is the identity, and the higher `φ_k` vanish
//!   for parity reasons ([`verify_phi_vanishing`]), which is what reduces
//!   both box products to the identity bimodule.

use crate::algebra_a::{a_mul, a_op, ABody, AElement, ATerm};
use crate::algebra_b::{b_mul, b_op, b_render, BBody, BElement, BTerm, BWord};
use crate::diagonal::{tensor_mu, weights_of_total, Diagonal};
use crate::ring::{
    alexander_of_weight, maslov_of_vmonomial, maslov_of_weight, Combo,
    MaslovGrade, Params, VMonomial, WeightVector,
};
use std::collections::BTreeMap;

/// A generator `{i}` of the bimodule `Y`, anchored at spoke `i`.
///
/// Both idempotent chains of an operation start at `i`; the Maslov grading
/// of every generator is `0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct YGen {
    /// The spoke `1 <= i <= N`.
    pub i: usize,
}

/// A generator `x̄_i` of the bimodule `X`: the complement `{1..N} \ {i}`,
/// in bijection with [`YGen`] via `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct XGen {
    /// The spoke `1 <= i <= N` whose complement this is.
    pub i: usize,
}

/// An operation query on `Y`: a weight, the `B`-inputs in written order
/// `(b_k, ..., b_1)` (the last entry acts first), the module generator,
/// and the `A`-inputs in acting order `(a_1, ..., a_n)`.
#[derive(Clone, Debug)]
pub struct YQuery {
    /// The operation weight.
    pub w: WeightVector,
    /// The `B`-inputs, written order.
    pub bs: Vec<BTerm>,
    /// The module generator.
    pub x: YGen,
    /// The `A`-inputs, acting order.
    pub aas: Vec<ATerm>,
}

/// A basic letter on the `A`-side, in acting order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ALetter {
    /// The letter `U_i`.
    U(usize),
    /// The letter `s_i`.
    S(usize),
}

/// A basic letter on the `B`-side, in acting (chronological) order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BLetter {
    /// The letter `rho_i`.
    Rho(usize),
    /// The letter `sigma_i`.
    Sigma(usize),
}

/// An item on the `A`-side of a matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AItem {
    /// The `pos`-th basic letter of the `A`-input sequence.
    Letter(usize, ALetter),
    /// A petal or outer weight `e_i`, `1 <= i <= N + 1`.
    Weight(usize),
    /// A `V_0` factor from some input coefficient.
    V0,
}

/// An item on the `B`-side of a matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BItem {
    /// The `pos`-th basic letter of the `B`-input sequence.
    Letter(usize, BLetter),
    /// A central weight `e_0`.
    WeightE0,
    /// A `V_i` factor (`1 <= i <= N + 1`) from some input coefficient.
    V(usize),
}

/// A matching: pairs of items of equal Alexander grading, with the
/// letter-letter pairs order-preserving on both sides.
pub type Matching = Vec<(AItem, BItem)>;

/// The basic-item decomposition of a query: ordered letters on each side
/// plus pooled counts of `V`-coefficient factors.
///
/// `V`-factors are central, so they are pooled without regard to which
/// input carried them: `V_0` counts toward the `A`-side (it can only match
/// a central weight `e_0`, which is counted on the `B`-side), while `V_i`
/// and `V_{N+1}` count toward the `B`-side (they can only match petal or
/// outer weights, counted on the `A`-side).
struct BasicItems {
    /// `A`-side letters, acting order.
    eta: Vec<ALetter>,
    /// `B`-side letters, acting order.
    tau: Vec<BLetter>,
    /// Total `V_0` exponent over all input coefficients.
    v0: u32,
    /// Total `V_i` exponent per region, `1 <= i <= N + 1`.
    v: Vec<u32>,
}

fn basic_items(params: &Params, q: &YQuery) -> BasicItems {
    let mut eta = Vec::new();
    let mut v0 = 0u32;
    let mut v = vec![0u32; params.num_regions()];
    let mut pool = |coeff: &VMonomial| {
        v0 += coeff.0[0];
        for i in 1..params.num_regions() {
            v[i] += coeff.0[i];
        }
    };
    for a in &q.aas {
        pool(&a.coeff);
        match &a.body {
            ABody::One | ABody::IdempotentUnit(_) => {}
            ABody::UPower { spoke, pow } => {
                for _ in 0..*pow {
                    eta.push(ALetter::U(*spoke));
                }
            }
            ABody::Chord { start, steps } => {
                for t in 0..*steps as usize {
                    eta.push(ALetter::S(params.spoke_add(*start, t)));
                }
            }
        }
    }
    let mut tau = Vec::new();
    // Written order is last-acting first, so walk the B-inputs backwards;
    // within a word, the written-right flank acts first.
    for b in q.bs.iter().rev() {
        pool(&b.coeff);
        match &b.body {
            BBody::One | BBody::Unit(_) => {}
            BBody::Word(w) => {
                if w.len == 0 {
                    tau.push(BLetter::Rho(w.start));
                    continue;
                }
                if w.right_rho {
                    tau.push(BLetter::Rho(w.start));
                }
                for t in 0..w.len as usize {
                    tau.push(BLetter::Sigma(params.spoke_add(w.start, t)));
                    if t + 1 < w.len as usize {
                        tau.push(BLetter::Rho(params.spoke_add(w.start, t + 1)));
                    }
                }
                if w.left_rho {
                    tau.push(BLetter::Rho(w.cod(params)));
                }
            }
        }
    }
    BasicItems { eta, tau, v0, v }
}

/// Searches for a matching on a query's basic items.
///
/// The rules: letters match their namesakes (`U_i ↔ rho_i`, `s_i ↔
/// sigma_i`) with the order preserved on both sides; a petal weight `e_i`
/// matches either a `V_i` factor or a `rho_i` letter; the outer weight
/// `e_{N+1}` matches only `V_{N+1}`; the central weight `e_0` matches only
/// `V_0`; weights never match weights; every item must be matched.
pub fn y_matching(params: &Params, q: &YQuery) -> Option<Matching> {
    let items = basic_items(params, q);
    // Bookkeeping matches first: the forced weight-coefficient pairs.
    if items.v0 != q.w.0[0] {
        return None;
    }
    if items.v[params.outer()] != q.w.0[params.outer()] {
        return None;
    }
    // Each spoke weight absorbs its V_i factors; the remainder must be
    // spent on rho letters.
    let mut needed = vec![0u32; params.n + 1];
    for i in 1..=params.n {
        needed[i] = q.w.0[i].checked_sub(items.v[i])?;
    }
    // Order-preserving search over the two letter sequences, spending the
    // weight quotas on rho letters as we go.
    fn search(
        eta: &[ALetter],
        tau: &[BLetter],
        p: usize,
        qq: usize,
        used: &mut [u32],
        needed: &[u32],
        pairs: &mut Matching,
    ) -> bool {
        if qq == tau.len() {
            return p == eta.len() && used == needed;
        }
        // Letter-letter match.
        if p < eta.len() {
            let compatible = matches!(
                (eta[p], tau[qq]),
                (ALetter::U(i), BLetter::Rho(j)) if i == j
            ) || matches!(
                (eta[p], tau[qq]),
                (ALetter::S(i), BLetter::Sigma(j)) if i == j
            );
            if compatible {
                pairs.push((AItem::Letter(p, eta[p]), BItem::Letter(qq, tau[qq])));
                if search(eta, tau, p + 1, qq + 1, used, needed, pairs) {
                    return true;
                }
                pairs.pop();
            }
        }
        // Weight-letter match on a rho.
        if let BLetter::Rho(i) = tau[qq] {
            if used[i] < needed[i] {
                used[i] += 1;
                pairs.push((AItem::Weight(i), BItem::Letter(qq, tau[qq])));
                if search(eta, tau, p, qq + 1, used, needed, pairs) {
                    return true;
                }
                pairs.pop();
                used[i] -= 1;
            }
        }
        false
    }
    let mut pairs: Matching = Vec::new();
    let mut used = vec![0u32; params.n + 1];
    if !search(&items.eta, &items.tau, 0, 0, &mut used, &needed, &mut pairs) {
        return None;
    }
    for _ in 0..items.v0 {
        pairs.push((AItem::V0, BItem::WeightE0));
    }
    for i in 1..=params.n {
        for _ in 0..items.v[i] {
            pairs.push((AItem::Weight(i), BItem::V(i)));
        }
    }
    for _ in 0..items.v[params.outer()] {
        pairs.push((AItem::Weight(params.outer()), BItem::V(params.outer())));
    }
    Some(pairs)
}

/// Follows an idempotent chain through a list of `(initial, final)`
/// idempotent pairs, starting at `start`.  Bodies without idempotents
/// (central elements) pass through.
fn chain(start: usize, steps: impl Iterator<Item = (Option<usize>, Option<usize>)>) -> Option<usize> {
    let mut cur = start;
    for (ini, fin) in steps {
        match (ini, fin) {
            (None, None) => {}
            (Some(i), Some(f)) => {
                if i != cur {
                    return None;
                }
                cur = f;
            }
            _ => unreachable!("bodies have either both idempotents or neither"),
        }
    }
    Some(cur)
}

/// Recognizes an operation of `Y` on a query.
///
/// Returns the output generator iff (i) both idempotent chains start at
/// the module generator and end at a common spoke, (ii) the Maslov count
/// `m(w) + Σ m(a_i) + Σ m(b_i) + k + n - 1` vanishes, and (iii) the total
/// Alexander grading is even and the query admits a matching.  Strict
/// unitality needs no special case: a unit among the inputs of any higher
/// operation leaves an unmatched partner letter or breaks the count, while
/// the one-input unit actions `m_{0|1}(x, ι) = m_{1|0}(ι, x) = x` pass all
/// three conditions.
pub fn y_recognize(params: &Params, q: &YQuery) -> Option<YGen> {
    // (i) Idempotents.
    let ya = chain(
        q.x.i,
        q.aas
            .iter()
            .map(|a| (a.body.initial(), a.body.final_idem(params))),
    )?;
    let yb = chain(
        q.x.i,
        q.bs.iter().rev().map(|b| (b.body.dom(), b.body.cod(params))),
    )?;
    if ya != yb {
        return None;
    }
    // (ii) Maslov.
    let mut m: MaslovGrade = maslov_of_weight(params, &q.w);
    for a in &q.aas {
        m += crate::algebra_a::a_maslov(params, a);
    }
    for b in &q.bs {
        m += crate::algebra_b::b_gradings(params, b).0;
    }
    m += q.bs.len() as i64 + q.aas.len() as i64 - 1;
    if m != 0 {
        return None;
    }
    // (iii) Alexander.
    let mut alex = alexander_of_weight(params, &q.w);
    for a in &q.aas {
        alex = alex.plus(&crate::algebra_a::a_alexander(params, a));
    }
    for b in &q.bs {
        alex = alex.plus(&crate::algebra_b::b_gradings(params, b).1);
    }
    if !alex.is_even() {
        return None;
    }
    y_matching(params, q)?;
    Some(YGen { i: ya })
}

/// The operation of `Y` on a query as an element: a singleton on
/// recognition, zero otherwise.
pub fn y_op(params: &Params, q: &YQuery) -> Combo<YGen> {
    match y_recognize(params, q) {
        Some(y) => Combo::singleton(y),
        None => Combo::zero(),
    }
}

/// The full A-infinity bimodule relation sum on a query: over every
/// weight split, sum the compositions through an inner `A`-block, an
/// inner `B`-block, and an inner bimodule operation (consuming an acting
/// prefix on both sides), mod 2.  Zero for every query iff the relations
/// hold.
pub fn y_relation_sum(params: &Params, q: &YQuery) -> Combo<YGen> {
    let k = q.bs.len();
    let n = q.aas.len();
    let mut total = Combo::zero();
    for (w_in, w_out) in q.w.splits() {
        // Inner A-side blocks (including empty weighted insertions).
        for start in 0..=n {
            for len in 0..=(n - start) {
                if len == 0 && w_in.is_zero() {
                    continue;
                }
                let inner = a_op(
                    params,
                    &w_in,
                    &q.aas[start..start + len]
                        .iter()
                        .map(|t| Combo::singleton(t.clone()))
                        .collect::<Vec<_>>(),
                );
                for t in inner.iter() {
                    let mut aas = q.aas[..start].to_vec();
                    aas.push(t.clone());
                    aas.extend_from_slice(&q.aas[start + len..]);
                    total.add(y_op(
                        params,
                        &YQuery {
                            w: w_out.clone(),
                            bs: q.bs.clone(),
                            x: q.x,
                            aas,
                        },
                    ));
                }
            }
        }
        // Inner B-side blocks (written order; contiguous either way).
        for start in 0..=k {
            for len in 0..=(k - start) {
                if len == 0 && w_in.is_zero() {
                    continue;
                }
                let inner = b_op(
                    params,
                    &w_in,
                    &q.bs[start..start + len]
                        .iter()
                        .map(|t| Combo::singleton(t.clone()))
                        .collect::<Vec<_>>(),
                );
                for t in inner.iter() {
                    let mut bs = q.bs[..start].to_vec();
                    bs.push(t.clone());
                    bs.extend_from_slice(&q.bs[start + len..]);
                    total.add(y_op(
                        params,
                        &YQuery {
                            w: w_out.clone(),
                            bs,
                            x: q.x,
                            aas: q.aas.clone(),
                        },
                    ));
                }
            }
        }
        // Inner bimodule operations: an acting prefix on both sides.  The
        // acting B-prefix is a written suffix.
        for j_b in 0..=k {
            for j_a in 0..=n {
                let inner = y_op(
                    params,
                    &YQuery {
                        w: w_in.clone(),
                        bs: q.bs[k - j_b..].to_vec(),
                        x: q.x,
                        aas: q.aas[..j_a].to_vec(),
                    },
                );
                for y in inner.iter() {
                    total.add(y_op(
                        params,
                        &YQuery {
                            w: w_out.clone(),
                            bs: q.bs[..k - j_b].to_vec(),
                            x: *y,
                            aas: q.aas[j_a..].to_vec(),
                        },
                    ));
                }
            }
        }
    }
    total
}

/// The structure map `δ¹` of the DD-bimodule `X`:
/// `δ¹(x̄_i) = U_i ⊗ ρ_i ⊗ x̄_i + s_i ⊗ σ_i ⊗ x̄_{i+1}`.
pub fn dd_delta1(params: &Params, x: &XGen) -> Vec<(ATerm, BTerm, XGen)> {
    vec![
        (
            ATerm::u(params, x.i),
            BTerm::rho(params, x.i),
            XGen { i: x.i },
        ),
        (
            ATerm::s(params, x.i),
            BTerm::sigma(params, x.i),
            XGen {
                i: params.next_spoke(x.i),
            },
        ),
    ]
}

/// All `2^n` summands of the iterate `δⁿ` starting at a generator: the
/// emitted `A`- and `B`-outputs in acting order and the final generator.
pub fn dd_paths(params: &Params, start: &XGen, n: usize) -> Vec<(Vec<ATerm>, Vec<BTerm>, XGen)> {
    let mut paths = vec![(Vec::new(), Vec::new(), *start)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(2 * paths.len());
        for (aas, bs, g) in &paths {
            for (a, b, g2) in dd_delta1(params, g) {
                let mut aas = aas.clone();
                let mut bs = bs.clone();
                aas.push(a);
                bs.push(b);
                next.push((aas, bs, g2));
            }
        }
        paths = next;
    }
    paths
}

/// A census class of a nonzero term in the DD structure relation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DDClass {
    /// `U_i ⊗ V_i` for `1 <= i <= N` (one term per occurrence).
    UV(usize),
    /// `U_{N+1} ⊗ V_{N+1}` (each occurrence spreads over the `N`
    /// idempotent summands `s_{ii} ⊗ V_{N+1}`).
    OuterPair,
    /// `V_0 ⊗ U_0` (each occurrence spreads over the `2N` flanked loop
    /// summands of `U_0`).
    CentralPair,
    /// Anything else: a relation failure.
    Other(String),
}

/// The result of [`dd_relation_check`].
#[derive(Clone, Debug)]
pub struct DDReport {
    /// Did the full relation sum cancel for every generator?
    pub relations_hold: bool,
    /// Raw term counts per census class, over all generators.
    pub census: BTreeMap<DDClass, usize>,
    /// Number of nonzero terms inspected.
    pub terms: usize,
}

impl DDReport {
    /// Does the census agree with the expected table: `U_i ⊗ V_i` twice
    /// for each `1 <= i <= N`, `U_{N+1} ⊗ V_{N+1}` twice (`2N` raw
    /// terms), `V_0 ⊗ U_0` twice (`4N` raw terms), and nothing else?
    pub fn census_matches(&self, params: &Params) -> bool {
        let mut expect: BTreeMap<DDClass, usize> = BTreeMap::new();
        for i in 1..=params.n {
            expect.insert(DDClass::UV(i), 2);
        }
        expect.insert(DDClass::OuterPair, 2 * params.n);
        expect.insert(DDClass::CentralPair, 4 * params.n);
        self.census == expect
    }
}

/// Pins an output pair to the idempotent frame `(from, to)` of its path:
/// central bodies become idempotent units, anything whose ends do not
/// match the frame is zero in the bimodule.
fn pin_output(
    params: &Params,
    from: usize,
    to: usize,
    ta: &ATerm,
    tb: &BTerm,
) -> Option<(ATerm, BTerm)> {
    let a_body = match &ta.body {
        ABody::One => {
            if from == to {
                ABody::IdempotentUnit(from)
            } else {
                return None;
            }
        }
        body => {
            if body.initial() != Some(from) || body.final_idem(params) != Some(to) {
                return None;
            }
            body.clone()
        }
    };
    let b_body = match &tb.body {
        BBody::One => {
            if from == to {
                BBody::Unit(from)
            } else {
                return None;
            }
        }
        body => {
            if body.dom() != Some(from) || body.cod(params) != Some(to) {
                return None;
            }
            body.clone()
        }
    };
    Some((
        ATerm {
            coeff: ta.coeff.clone(),
            body: a_body,
        },
        BTerm {
            coeff: tb.coeff.clone(),
            body: b_body,
        },
    ))
}

fn classify(params: &Params, ta: &ATerm, tb: &BTerm) -> DDClass {
    let n = params.n as u32;
    match (&ta.body, &tb.body) {
        (ABody::UPower { spoke, pow: 1 }, BBody::Unit(_))
            if ta.coeff.is_one() && tb.coeff == VMonomial::var(params, *spoke) =>
        {
            DDClass::UV(*spoke)
        }
        (ABody::Chord { steps, .. }, BBody::Unit(_))
            if *steps == n
                && ta.coeff.is_one()
                && tb.coeff == VMonomial::var(params, params.outer()) =>
        {
            DDClass::OuterPair
        }
        (ABody::IdempotentUnit(_), BBody::Word(w))
            if ta.coeff == VMonomial::var(params, 0)
                && tb.coeff.is_one()
                && w.len == n
                && (w.left_rho ^ w.right_rho) =>
        {
            DDClass::CentralPair
        }
        _ => DDClass::Other(format!("{ta} (x) {}", b_render(params, tb))),
    }
}

/// Verifies the DD structure relation `Σ (μ_n^w ⊗ I) ∘ δⁿ = 0` for every
/// generator, over `0 <= n <= 2N` and all weights within the diagonal's
/// cap, and collects the census of nonzero terms before cancellation.
///
/// The `n = 1`, `w = 0` term is the tensor differential `id ⊗ ∂_B`; all
/// other terms evaluate the weighted diagonal on the `δⁿ` summands.
pub fn dd_relation_check(params: &Params, diag: &Diagonal) -> DDReport {
    let mut census: BTreeMap<DDClass, usize> = BTreeMap::new();
    let mut terms = 0usize;
    let mut relations_hold = true;
    let zero = WeightVector::zero(params);
    for i in 1..=params.n {
        let start = XGen { i };
        let mut total: Combo<(ATerm, BTerm, XGen)> = Combo::zero();
        let record = |total: &mut Combo<(ATerm, BTerm, XGen)>,
                          from: usize,
                          end: XGen,
                          ta: &ATerm,
                          tb: &BTerm,
                          census: &mut BTreeMap<DDClass, usize>,
                          terms: &mut usize| {
            if let Some((ta, tb)) = pin_output(params, from, end.i, ta, tb) {
                *census.entry(classify(params, &ta, &tb)).or_insert(0) += 1;
                *terms += 1;
                total.toggle((ta, tb, end));
            }
        };
        for n in 0..=2 * params.n {
            for wt in 0..=diag.max_weight {
                for w in weights_of_total(params, wt) {
                    if n == 0 && w.is_zero() {
                        continue;
                    }
                    if n == 1 && w.is_zero() {
                        // The tensor differential.
                        for (aas, bs, end) in dd_paths(params, &start, 1) {
                            let db = b_op(params, &zero, &[Combo::singleton(bs[0].clone())]);
                            for tb in db.iter() {
                                record(&mut total, i, end, &aas[0], tb, &mut census, &mut terms);
                            }
                        }
                        continue;
                    }
                    for (aas, bs, end) in dd_paths(params, &start, n) {
                        let inputs: Vec<(AElement, BElement)> = aas
                            .iter()
                            .zip(&bs)
                            .map(|(a, b)| {
                                (Combo::singleton(a.clone()), Combo::singleton(b.clone()))
                            })
                            .collect();
                        for (ta, tb) in tensor_mu(params, diag, &w, &inputs).iter() {
                            record(&mut total, i, end, ta, tb, &mut census, &mut terms);
                        }
                    }
                }
            }
        }
        if !total.is_zero() {
            relations_hold = false;
        }
    }
    DDReport {
        relations_hold,
        census,
        terms,
    }
}

/// Iterated multiplication `f_i` on the `A`-side of a box product: the
/// product of the emitted `A`-outputs, with `f_0` the idempotent unit.
fn f_iter_a(params: &Params, gen: usize, outs: &[ATerm]) -> Option<ATerm> {
    let mut acc = ATerm::bare(params, ABody::IdempotentUnit(gen));
    for t in outs {
        acc = a_mul(params, &acc, t)?;
    }
    Some(acc)
}

/// Iterated multiplication on the `B`-side: the emitted outputs compose
/// right to left, so later emissions multiply from the written left.
fn f_iter_b(params: &Params, gen: usize, outs: &[BTerm]) -> Option<BTerm> {
    let mut acc: Option<BWord> = None;
    for t in outs {
        let BBody::Word(w) = &t.body else {
            return None;
        };
        acc = Some(match acc {
            None => {
                if w.dom() != gen {
                    return None;
                }
                w.clone()
            }
            Some(prev) => b_mul(params, w, &prev)?,
        });
    }
    Some(match acc {
        None => BTerm {
            coeff: VMonomial::one(params),
            body: BBody::Unit(gen),
        },
        Some(w) => BTerm::word(params, w),
    })
}

/// The DA operation `δ¹_{1+j}` of `X ⊠ Y` on a generator component:
/// sums, over all iterates `δ^i` of `X`, the `Y`-operations consuming the
/// emitted `B`-outputs together with the given `A`-inputs, and collapses
/// the emitted `A`-outputs by iterated multiplication.  Restricted to
/// `j <= 1` outer inputs.
pub fn box_delta_xy(
    params: &Params,
    w: &WeightVector,
    gen: usize,
    a_inputs: &[ATerm],
) -> Combo<(ATerm, usize)> {
    assert!(a_inputs.len() <= 1, "box products are computed for j <= 1");
    let mut out = Combo::zero();
    for i in 0..=2 * params.n + 2 {
        for (aas, bs, end) in dd_paths(params, &XGen { i: gen }, i) {
            let q = YQuery {
                w: w.clone(),
                bs: bs.iter().rev().cloned().collect(),
                x: YGen { i: gen },
                aas: a_inputs.to_vec(),
            };
            let Some(y) = y_recognize(params, &q) else {
                continue;
            };
            if y.i != end.i {
                continue;
            }
            if let Some(f) = f_iter_a(params, gen, &aas) {
                out.toggle((f, end.i));
            }
        }
    }
    out
}

/// The DA operation `δ¹_{1+j}` of `Y ⊠ X`, with `B` on the outside:
/// the emitted `A`-outputs of `δ^i` feed the `A`-side of a `Y`-operation
/// and the emitted `B`-outputs are collapsed by multiplication.
pub fn box_delta_yx(
    params: &Params,
    w: &WeightVector,
    gen: usize,
    b_inputs: &[BTerm],
) -> Combo<(BTerm, usize)> {
    assert!(b_inputs.len() <= 1, "box products are computed for j <= 1");
    let mut out = Combo::zero();
    for i in 0..=2 * params.n + 2 {
        for (aas, bs, end) in dd_paths(params, &XGen { i: gen }, i) {
            let q = YQuery {
                w: w.clone(),
                bs: b_inputs.to_vec(),
                x: YGen { i: gen },
                aas,
            };
            let Some(y) = y_recognize(params, &q) else {
                continue;
            };
            if y.i != end.i {
                continue;
            }
            if let Some(f) = f_iter_b(params, gen, &bs) {
                out.toggle((f, end.i));
            }
        }
    }
    out
}

/// One computed DA operation value of `X ⊠ Y`.
#[derive(Clone, Debug)]
pub struct DAOperation {
    /// The operation weight.
    pub w: WeightVector,
    /// The generator component acted on.
    pub gen: usize,
    /// The outer `A`-inputs (at most one).
    pub inputs: Vec<ATerm>,
    /// The value in `A ⊗ (generator)`.
    pub value: Combo<(ATerm, usize)>,
}

/// Computes the `δ¹₁` and `δ¹₂` table of `X ⊠ Y`: all weights of total
/// `<= 1` for the input-free operations, and the unweighted `δ¹₂` on
/// every bare body with at most `max_pow` letters.
pub fn xy_operations(params: &Params, max_pow: u32) -> Vec<DAOperation> {
    let mut ops = Vec::new();
    for wt in 0..=1u32 {
        for w in weights_of_total(params, wt) {
            for gen in 1..=params.n {
                ops.push(DAOperation {
                    w: w.clone(),
                    gen,
                    inputs: Vec::new(),
                    value: box_delta_xy(params, &w, gen, &[]),
                });
            }
        }
    }
    let zero = WeightVector::zero(params);
    for a in a_basis(params, max_pow) {
        let gen = a.body.initial().expect("basis bodies carry idempotents");
        let value = box_delta_xy(params, &zero, gen, std::slice::from_ref(&a));
        ops.push(DAOperation {
            w: zero.clone(),
            gen,
            inputs: vec![a],
            value,
        });
    }
    ops
}

/// All bare bodies of `A` with at most `max_pow` basic letters.
fn a_basis(params: &Params, max_pow: u32) -> Vec<ATerm> {
    let mut out = Vec::new();
    for i in 1..=params.n {
        for p in 1..=max_pow {
            out.push(ATerm {
                coeff: VMonomial::one(params),
                body: ABody::UPower { spoke: i, pow: p },
            });
        }
        for steps in 1..=max_pow {
            out.push(ATerm::chord(params, i, steps));
        }
    }
    out
}

/// The algebra endomorphism extracted from a `δ¹₁ = 0` DA bimodule on a
/// single generator: `φ_j` is the algebra output of `δ¹_{1+j}`.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    /// The arity-1 table `φ₁` on bare bodies.
    pub phi1: BTreeMap<ATerm, AElement>,
}

impl Homomorphism {
    /// Looks up `φ₁` on a tabulated body.
    pub fn phi1(&self, a: &ATerm) -> Option<&AElement> {
        self.phi1.get(a)
    }

    /// Is the tabulated `φ₁` the identity?
    pub fn is_identity(&self) -> bool {
        self.phi1
            .iter()
            .all(|(a, v)| *v == Combo::singleton(a.clone()))
    }
}

/// Extracts the homomorphism from a computed DA operation table, failing
/// if some input-free operation (`δ¹₁`) is nonzero.
pub fn extract_phi(ops: &[DAOperation]) -> Result<Homomorphism, String> {
    let mut phi1 = BTreeMap::new();
    for op in ops {
        if op.inputs.is_empty() {
            if !op.value.is_zero() {
                return Err(format!(
                    "delta^1_1 is nonzero at weight {} on generator {}",
                    op.w, op.gen
                ));
            }
            continue;
        }
        if op.inputs.len() == 1 && op.w.is_zero() {
            let value: AElement = op.value.iter().map(|(t, _)| t.clone()).collect();
            phi1.insert(op.inputs[0].clone(), value);
        }
    }
    Ok(Homomorphism { phi1 })
}

/// The conclusion of the graded-vanishing argument for the higher `φ_k`.
#[derive(Clone, Debug)]
pub struct PhiVanishing {
    /// Per arity `k`: the Maslov grading any nonzero `φ_k` value would
    /// need on generator inputs (always odd).
    pub a_side: Vec<(usize, MaslovGrade)>,
    /// Number of homology classes of `B` checked for the dual argument.
    pub b_side_classes: usize,
}

/// Verifies that `φ_k = 0` for `2 <= k <= k_max` on both sides, by the
/// grading arguments.
///
/// On the `A`-side: every element has even Maslov grading (the ground
/// variables all have even grading and the bodies sit in grading 0), while
/// a nonzero `φ_k` would need grading `Σ m(a_i) + m(w) + k - 1` when the
/// corresponding `μ_k^w` is nonzero — odd, since nonzero operations only
/// exist in even arity `k = j(2N-2) + 2 - 2|w|` — and grading `-1` when it
/// vanishes.  On the `B`-side: every homology class in lengths
/// `<= max_len` has Maslov grading equal to minus its total Alexander
/// grading, while a nonzero `φ̄_k` value would need Maslov grading one
/// more than minus the (additive) Alexander total of its inputs.
pub fn verify_phi_vanishing(
    params: &Params,
    k_max: usize,
    max_len: u32,
) -> Result<PhiVanishing, String> {
    // Ground-ring parity: every variable has even Maslov grading.
    for r in 0..params.num_regions() {
        if maslov_of_vmonomial(params, &VMonomial::var(params, r)) % 2 != 0 {
            return Err(format!("V_{r} has odd Maslov grading"));
        }
    }
    // Arity parity: nonzero weighted operations have even arity, so the
    // two cases of the required grading are k - 1 (k even) and -1 (k odd),
    // both odd.
    if (2 * params.n as i64 - 2) % 2 != 0 {
        return Err("odd operation-count step".into());
    }
    let mut a_side = Vec::new();
    for k in 2..=k_max {
        let required: MaslovGrade = if k % 2 == 0 { k as i64 - 1 } else { -1 };
        if required % 2 == 0 {
            return Err(format!("phi_{k} has an even target grading"));
        }
        a_side.push((k, required));
    }
    // B-side: every homology class has m = -(total Alexander grading), so
    // no class sits one grading above the additive total of any inputs.
    let classes = crate::algebra_b::b_homology(params, max_len);
    for (m, rep) in &classes {
        for t in rep.iter() {
            let (mt, at) = crate::algebra_b::b_gradings(params, t);
            if mt != *m || mt != -at.total() {
                return Err(format!(
                    "homology class {} breaks the degree count",
                    b_render(params, t)
                ));
            }
        }
    }
    Ok(PhiVanishing {
        a_side,
        b_side_classes: classes.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagonal::{build_diagonal, verify_diagonal};
    use crate::tree::RightMovingConfig;

    fn p3() -> Params {
        Params::new(3)
    }

    fn query(w: WeightVector, bs: Vec<BTerm>, x: usize, aas: Vec<ATerm>) -> YQuery {
        YQuery {
            w,
            bs,
            x: YGen { i: x },
            aas,
        }
    }

    #[test]
    fn matchings_on_basic_pairs() {
        let p = p3();
        // (rho_1, {1}, U_1): U_1 <-> rho_1.
        let q = query(
            WeightVector::zero(&p),
            vec![BTerm::rho(&p, 1)],
            1,
            vec![ATerm::u(&p, 1)],
        );
        let m = y_matching(&p, &q).unwrap();
        assert_eq!(
            m,
            vec![(
                AItem::Letter(0, ALetter::U(1)),
                BItem::Letter(0, BLetter::Rho(1))
            )]
        );
        // (sigma_1, {1}, s_1): s_1 <-> sigma_1.
        let q = query(
            WeightVector::zero(&p),
            vec![BTerm::sigma(&p, 1)],
            1,
            vec![ATerm::s(&p, 1)],
        );
        let m = y_matching(&p, &q).unwrap();
        assert_eq!(
            m,
            vec![(
                AItem::Letter(0, ALetter::S(1)),
                BItem::Letter(0, BLetter::Sigma(1))
            )]
        );
    }

    #[test]
    fn matchings_respect_order() {
        let p = p3();
        // Acting order sigma_1 then rho_2 on the B-side pairs with
        // (s_1, U_2) but not with the rearranged (U_2, s_1): the letters
        // may not cross.
        let bs = vec![BTerm::rho(&p, 2), BTerm::sigma(&p, 1)];
        let good = query(
            WeightVector::zero(&p),
            bs.clone(),
            1,
            vec![ATerm::s(&p, 1), ATerm::u(&p, 2)],
        );
        assert!(y_matching(&p, &good).is_some());
        let crossed = query(
            WeightVector::zero(&p),
            bs,
            1,
            vec![ATerm::u(&p, 2), ATerm::s(&p, 1)],
        );
        assert!(y_matching(&p, &crossed).is_none());
    }

    #[test]
    fn recognition_of_basic_operations() {
        let p = p3();
        // m_{1|1}(rho_1, {1}, U_1) = {1}.
        let q = query(
            WeightVector::zero(&p),
            vec![BTerm::rho(&p, 1)],
            1,
            vec![ATerm::u(&p, 1)],
        );
        assert_eq!(y_recognize(&p, &q), Some(YGen { i: 1 }));
        // m_{1|1}(sigma_1, {1}, s_1) = {2}.
        let q = query(
            WeightVector::zero(&p),
            vec![BTerm::sigma(&p, 1)],
            1,
            vec![ATerm::s(&p, 1)],
        );
        assert_eq!(y_recognize(&p, &q), Some(YGen { i: 2 }));
        // m_{1|0}^{e_0}(V_0, x) = x.
        let v0 = BTerm {
            coeff: VMonomial::var(&p, 0),
            body: BBody::One,
        };
        for i in 1..=3 {
            let q = query(WeightVector::unit(&p, 0), vec![v0.clone()], i, vec![]);
            assert_eq!(y_recognize(&p, &q), Some(YGen { i }));
        }
        // Mismatched idempotents and broken counts give nothing.
        let q = query(
            WeightVector::zero(&p),
            vec![BTerm::rho(&p, 2)],
            1,
            vec![ATerm::u(&p, 1)],
        );
        assert_eq!(y_recognize(&p, &q), None);
        let q = query(WeightVector::zero(&p), vec![], 1, vec![ATerm::u(&p, 1)]);
        assert_eq!(y_recognize(&p, &q), None);
    }

    #[test]
    fn unit_actions_come_from_recognition() {
        let p = p3();
        let unit = ATerm::bare(&p, ABody::IdempotentUnit(1));
        let q = query(WeightVector::zero(&p), vec![], 1, vec![unit.clone()]);
        assert_eq!(y_recognize(&p, &q), Some(YGen { i: 1 }));
        // The wrong idempotent acts as zero, and a unit inside a higher
        // operation kills it.
        let q = query(WeightVector::zero(&p), vec![], 2, vec![unit.clone()]);
        assert_eq!(y_recognize(&p, &q), None);
        let q = query(
            WeightVector::zero(&p),
            vec![BTerm::rho(&p, 1)],
            1,
            vec![unit],
        );
        assert_eq!(y_recognize(&p, &q), None);
    }

    #[test]
    fn relation_witnesses_cancel_in_pairs() {
        let p = p3();
        // Differential vs. push at weight e_1 on (rho_1, {1}).
        let q = query(WeightVector::unit(&p, 1), vec![BTerm::rho(&p, 1)], 1, vec![]);
        // Both contributing compositions are nonzero on their own.
        let diff_leg = query(
            WeightVector::unit(&p, 1),
            vec![BTerm {
                coeff: VMonomial::var(&p, 1),
                body: BBody::Unit(1),
            }],
            1,
            vec![],
        );
        assert_eq!(y_recognize(&p, &diff_leg), Some(YGen { i: 1 }));
        let push_leg = query(
            WeightVector::zero(&p),
            vec![BTerm::rho(&p, 1)],
            1,
            vec![ATerm::u(&p, 1)],
        );
        assert_eq!(y_recognize(&p, &push_leg), Some(YGen { i: 1 }));
        assert!(y_relation_sum(&p, &q).is_zero());

        // Pull vs. split on (rho_1, rho_1, {1}, U_1, U_1).
        let q = query(
            WeightVector::zero(&p),
            vec![BTerm::rho(&p, 1), BTerm::rho(&p, 1)],
            1,
            vec![ATerm::u(&p, 1), ATerm::u(&p, 1)],
        );
        let pull_leg = query(
            WeightVector::zero(&p),
            vec![BTerm::rho(&p, 1), BTerm::rho(&p, 1)],
            1,
            vec![ATerm {
                coeff: VMonomial::one(&p),
                body: ABody::UPower { spoke: 1, pow: 2 },
            }],
        );
        assert_eq!(y_recognize(&p, &pull_leg), Some(YGen { i: 1 }));
        assert!(y_relation_sum(&p, &q).is_zero());
    }

    #[test]
    fn relation_sweep_small() {
        // Exhaustive relation check over short basic-letter queries.
        let p = p3();
        let mut b_letters = Vec::new();
        let mut a_letters = Vec::new();
        for i in 1..=3 {
            b_letters.push(BTerm::rho(&p, i));
            b_letters.push(BTerm::sigma(&p, i));
            a_letters.push(ATerm::u(&p, i));
            a_letters.push(ATerm::s(&p, i));
        }
        let mut weights = vec![WeightVector::zero(&p)];
        weights.extend((0..p.num_regions()).map(|r| WeightVector::unit(&p, r)));
        let mut checked = 0usize;
        for k in 0..=2usize {
            for n in 0..=(3 - k) {
                let mut bs_choices: Vec<Vec<BTerm>> = vec![vec![]];
                for _ in 0..k {
                    bs_choices = bs_choices
                        .iter()
                        .flat_map(|pfx| {
                            b_letters.iter().map(move |b| {
                                let mut v = pfx.clone();
                                v.push(b.clone());
                                v
                            })
                        })
                        .collect();
                }
                let mut as_choices: Vec<Vec<ATerm>> = vec![vec![]];
                for _ in 0..n {
                    as_choices = as_choices
                        .iter()
                        .flat_map(|pfx| {
                            a_letters.iter().map(move |a| {
                                let mut v = pfx.clone();
                                v.push(a.clone());
                                v
                            })
                        })
                        .collect();
                }
                for bs in &bs_choices {
                    for aas in &as_choices {
                        for w in &weights {
                            for x in 1..=3 {
                                let q = query(w.clone(), bs.clone(), x, aas.clone());
                                let s = y_relation_sum(&p, &q);
                                assert!(s.is_zero(), "relation failed on {q:?}: {s:?}");
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(checked > 1000);
    }

    #[test]
    fn dd_structure_relation_and_census() {
        let p = p3();
        let config = RightMovingConfig::default();
        let diag = build_diagonal(&p, 2 * p.n, 1, &config);
        verify_diagonal(&p, &diag, &config).unwrap();
        let report = dd_relation_check(&p, &diag);
        assert!(report.relations_hold, "census: {:?}", report.census);
        assert!(
            report.census_matches(&p),
            "unexpected census: {:?}",
            report.census
        );
        // 2 terms per U_i (x) V_i, 2N for the outer pair, 4N central.
        assert_eq!(report.terms, 2 * p.n + 2 * p.n + 4 * p.n);
    }

    #[test]
    fn box_products_give_the_identity() {
        let p = p3();
        let zero = WeightVector::zero(&p);
        // delta^1_1 vanishes for both box products at every small weight.
        for wt in 0..=1u32 {
            for w in weights_of_total(&p, wt) {
                for g in 1..=3 {
                    assert!(box_delta_xy(&p, &w, g, &[]).is_zero());
                    assert!(box_delta_yx(&p, &w, g, &[]).is_zero());
                }
            }
        }
        // delta^1_2 is the identity on the short chords.
        for i in 1..=3usize {
            let out = box_delta_xy(&p, &zero, i, &[ATerm::u(&p, i)]);
            assert_eq!(out, Combo::singleton((ATerm::u(&p, i), i)));
            let out = box_delta_xy(&p, &zero, i, &[ATerm::s(&p, i)]);
            assert_eq!(out, Combo::singleton((ATerm::s(&p, i), p.next_spoke(i))));
            let out = box_delta_yx(&p, &zero, i, &[BTerm::rho(&p, i)]);
            assert_eq!(out, Combo::singleton((BTerm::rho(&p, i), i)));
            let out = box_delta_yx(&p, &zero, i, &[BTerm::sigma(&p, i)]);
            assert_eq!(
                out,
                Combo::singleton((BTerm::sigma(&p, i), p.next_spoke(i)))
            );
        }
    }

    #[test]
    fn phi_is_identity_and_multiplicative() {
        let p = p3();
        let ops = xy_operations(&p, 2 * p.n as u32);
        let phi = extract_phi(&ops).unwrap();
        assert!(phi.is_identity());
        // Multiplicativity on all tabulated pairs with nonzero product.
        let basis = a_basis(&p, p.n as u32);
        for x in &basis {
            for y in &basis {
                if let Some(xy) = a_mul(&p, x, y) {
                    let lhs = phi.phi1(&xy).cloned().unwrap_or_else(|| {
                        // Products can leave the tabulated range; recompute.
                        let g = xy.body.initial().unwrap();
                        box_delta_xy(&p, &WeightVector::zero(&p), g, &[xy.clone()])
                            .iter()
                            .map(|(t, _)| t.clone())
                            .collect()
                    });
                    let rhs = crate::algebra_a::a_mul_elements(
                        &p,
                        phi.phi1(x).unwrap(),
                        phi.phi1(y).unwrap(),
                    );
                    assert_eq!(lhs, rhs, "phi_1 not multiplicative on {x}, {y}");
                }
            }
        }
    }

    #[test]
    fn phi_higher_terms_vanish() {
        let p = p3();
        let report = verify_phi_vanishing(&p, 4, 2 * p.n as u32).unwrap();
        assert_eq!(report.a_side, vec![(2, 1), (3, -1), (4, 3)]);
        assert!(report.b_side_classes >= 6);
    }
}
