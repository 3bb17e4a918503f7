//! Ground ring, gradings, and `F_2` linear-combination containers.
//!
//! The ground ring for both algebras is `R = F_2[V_0, V_1, ..., V_{N+1}]`,
//! one variable per region of the star: `V_0` for the central region, `V_i`
//! for petal `i` (`1 <= i <= N`), and `V_{N+1}` for the outer petal.
//! Weighted operations are indexed by *weight vectors*, formal sums of the
//! basis weights `e_0, ..., e_{N+1}` counting how many times each region is
//! wrapped.
//!
//! Two gradings are in play:
//!
//! * a *Maslov* grading valued in `Z`, and
//! * an *Alexander* grading valued in `Z^{2N}` with one coordinate per
//!   angular slot of the star (slot `2i - 1` on spoke `i`, slot `2i` on the
//!   arc between spokes `i` and `i + 1`).
//!
//! The tables are:
//!
//! | object      | Maslov       | Alexander                        |
//! |-------------|--------------|----------------------------------|
//! | `e_i`, `i <= N`   | `2`          | slot `2i - 1`              |
//! | `e_{N+1}`   | `2`          | all even slots                   |
//! | `e_0`       | `-(2N - 2)`  | all slots                        |
//! | `V_i`, `i <= N`   | `-2`         | slot `2i - 1`              |
//! | `V_{N+1}`   | `-2`         | all even slots                   |
//! | `V_0`       | `2N - 2`     | all slots                        |
//!
//! All linear algebra is over `F_2`, so elements of free modules are stored
//! as ordered sets of basis terms; adding a term toggles its membership
//! ([`Combo`], [`combo_add`]).

use std::collections::BTreeSet;
use std::fmt;

/// Maslov gradings are plain integers.
pub type MaslovGrade = i64;

/// Global parameters of the star-shaped diagram.
///
/// `n` is the number of spokes `N >= 2`.  Everything else (petal count,
/// number of angular slots, ground-ring variable count) is derived.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    /// The number of spokes `N`.
    pub n: usize,
}

impl Params {
    /// Creates parameters for an `N`-spoke star.  Panics if `N < 2`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "the star needs at least two spokes");
        Params { n }
    }

    /// Number of regions, hence of ground-ring variables and of basis
    /// weights: `N + 2` (center, `N` petals, outer petal).
    pub fn num_regions(&self) -> usize {
        self.n + 2
    }

    /// Number of angular slots around the star: `2N`.
    pub fn num_slots(&self) -> usize {
        2 * self.n
    }

    /// Index of the outer petal, `N + 1`.
    pub fn outer(&self) -> usize {
        self.n + 1
    }

    /// Cyclic spoke arithmetic: `i + d` reduced into `1..=N`.
    pub fn spoke_add(&self, i: usize, d: usize) -> usize {
        (i - 1 + d) % self.n + 1
    }

    /// Successor spoke of `i` (cyclically).
    pub fn next_spoke(&self, i: usize) -> usize {
        self.spoke_add(i, 1)
    }
}

/// A weight vector: multiplicities `(w_0, ..., w_{N+1})` of the basis
/// weights `e_0, ..., e_{N+1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(pub Vec<u32>);

impl WeightVector {
    /// The zero weight.
    pub fn zero(params: &Params) -> Self {
        WeightVector(vec![0; params.num_regions()])
    }

    /// The basis weight `e_idx`.
    pub fn unit(params: &Params, idx: usize) -> Self {
        let mut w = Self::zero(params);
        w.0[idx] = 1;
        w
    }

    /// Is this the zero weight?
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Total weight `|w|` (sum of multiplicities).
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise sum.
    pub fn plus(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, if nonnegative.
    pub fn checked_sub(&self, other: &WeightVector) -> Option<WeightVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(WeightVector)
    }

    /// Componentwise comparison `self <= other`.
    pub fn le(&self, other: &WeightVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All ordered decompositions `self = w1 + w2` (componentwise).
    pub fn splits(&self) -> Vec<(WeightVector, WeightVector)> {
        let mut out = vec![(WeightVector(Vec::new()), WeightVector(Vec::new()))];
        for &c in &self.0 {
            let mut next = Vec::new();
            for (w1, w2) in &out {
                for a in 0..=c {
                    let mut w1 = w1.clone();
                    let mut w2 = w2.clone();
                    w1.0.push(a);
                    w2.0.push(c - a);
                    next.push((w1, w2));
                }
            }
            out = next;
        }
        out
    }

    /// Is this weight supported on the petals only (`e_1, ..., e_{N+1}`)?
    pub fn is_petal_only(&self) -> bool {
        self.0[0] == 0
    }

    /// Is this weight supported on the center only (a multiple of `e_0`)?
    pub fn is_central_only(&self) -> bool {
        self.0.iter().skip(1).all(|&c| c == 0)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if c == 1 {
                write!(f, "e{i}")?;
            } else {
                write!(f, "{c}e{i}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A monomial `V_0^{c_0} ... V_{N+1}^{c_{N+1}}` in the ground ring.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VMonomial(pub Vec<u32>);

impl VMonomial {
    /// The unit monomial `1`.
    pub fn one(params: &Params) -> Self {
        VMonomial(vec![0; params.num_regions()])
    }

    /// The single variable `V_idx`.
    pub fn var(params: &Params, idx: usize) -> Self {
        let mut m = Self::one(params);
        m.0[idx] = 1;
        m
    }

    /// Is this the unit monomial?
    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Product of monomials (exponents add).
    pub fn times(&self, other: &VMonomial) -> VMonomial {
        VMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> VMonomial {
        VMonomial(self.0.iter().map(|&c| c * k).collect())
    }

    /// The monomial `V^w = prod_i V_i^{w_i}` recording a weight vector.
    pub fn from_weight(w: &WeightVector) -> VMonomial {
        VMonomial(w.0.clone())
    }
}

impl fmt::Display for VMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if c == 1 {
                write!(f, "V{i}")?;
            } else {
                write!(f, "V{i}^{c}")?;
            }
        }
        Ok(())
    }
}

/// An Alexander grading: one integer per angular slot, indexed `1..=2N`
/// (stored zero-based).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlexanderVector(pub Vec<i64>);

impl AlexanderVector {
    /// The zero grading.
    pub fn zero(params: &Params) -> Self {
        AlexanderVector(vec![0; params.num_slots()])
    }

    /// The grading of a single slot (1-based slot index).
    pub fn slot(params: &Params, s: usize) -> Self {
        let mut a = Self::zero(params);
        a.0[s - 1] = 1;
        a
    }

    /// Sum of all even slots (the spoke-to-spoke arcs).
    pub fn all_even(params: &Params) -> Self {
        let mut a = Self::zero(params);
        for i in 1..=params.n {
            a.0[2 * i - 1] = 1;
        }
        a
    }

    /// Sum of all slots.
    pub fn all(params: &Params) -> Self {
        AlexanderVector(vec![1; params.num_slots()])
    }

    /// Componentwise sum.
    pub fn plus(&self, other: &AlexanderVector) -> AlexanderVector {
        AlexanderVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference.
    pub fn minus(&self, other: &AlexanderVector) -> AlexanderVector {
        AlexanderVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Scales by an integer.
    pub fn scale(&self, k: i64) -> AlexanderVector {
        AlexanderVector(self.0.iter().map(|&a| a * k).collect())
    }

    /// Is every coordinate even?  (The mod-2 vanishing test.)
    pub fn is_even(&self) -> bool {
        self.0.iter().all(|&a| a % 2 == 0)
    }

    /// Is this the zero vector?
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Total (sum of coordinates).
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Maslov grading of a weight vector.
pub fn maslov_of_weight(params: &Params, w: &WeightVector) -> MaslovGrade {
    let central = -(2 * params.n as i64 - 2) * w.0[0] as i64;
    let petals: i64 = w.0.iter().skip(1).map(|&c| 2 * c as i64).sum();
    central + petals
}

/// Alexander grading of a weight vector.
pub fn alexander_of_weight(params: &Params, w: &WeightVector) -> AlexanderVector {
    let mut a = AlexanderVector::zero(params).plus(&AlexanderVector::all(params).scale(w.0[0] as i64));
    for i in 1..=params.n {
        a = a.plus(&AlexanderVector::slot(params, 2 * i - 1).scale(w.0[i] as i64));
    }
    a.plus(&AlexanderVector::all_even(params).scale(w.0[params.outer()] as i64))
}

/// Maslov grading of a ground-ring monomial.
pub fn maslov_of_vmonomial(params: &Params, m: &VMonomial) -> MaslovGrade {
    let central = (2 * params.n as i64 - 2) * m.0[0] as i64;
    let rest: i64 = m.0.iter().skip(1).map(|&c| -2 * c as i64).sum();
    central + rest
}

/// Alexander grading of a ground-ring monomial.  The table matches the
/// weights: `A(V_i)` equals `A(e_i)` for every region `i`.
pub fn alexander_of_vmonomial(params: &Params, m: &VMonomial) -> AlexanderVector {
    alexander_of_weight(params, &WeightVector(m.0.clone()))
}

/// A finite `F_2`-linear combination of basis terms of type `T`.
///
/// Terms present in the set have coefficient `1`; adding a term twice
/// cancels it.  `T` must carry a total order so that combinations have a
/// canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Combo<T: Ord>(pub BTreeSet<T>);

impl<T: Ord> Default for Combo<T> {
    fn default() -> Self {
        Combo(BTreeSet::new())
    }
}

impl<T: Ord> Combo<T> {
    /// The zero combination.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The combination with a single term.
    pub fn singleton(t: T) -> Self {
        let mut c = Self::zero();
        c.toggle(t);
        c
    }

    /// Adds one term mod 2.
    pub fn toggle(&mut self, t: T) {
        if !self.0.remove(&t) {
            self.0.insert(t);
        }
    }

    /// Adds another combination mod 2 (symmetric difference).
    pub fn add(&mut self, other: Combo<T>) {
        for t in other.0 {
            self.toggle(t);
        }
    }

    /// Is this the zero combination?
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Is the combination empty?  (Alias of [`Combo::is_zero`].)
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Iterates over the terms.
    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.0.iter()
    }

    /// Maps each term through `f`, summing mod 2.
    pub fn map<U: Ord>(self, mut f: impl FnMut(T) -> U) -> Combo<U> {
        let mut out = Combo::zero();
        for t in self.0 {
            out.toggle(f(t));
        }
        out
    }
}

impl<T: Ord> FromIterator<T> for Combo<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut c = Combo::zero();
        for t in iter {
            c.toggle(t);
        }
        c
    }
}

/// Adds a single term to an `F_2` combination, cancelling mod 2.
///
/// Free-function form of [`Combo::toggle`], convenient with iterator
/// pipelines.
pub fn combo_add<T: Ord>(combo: &mut Combo<T>, term: T) {
    combo.toggle(term);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Params {
        Params::new(3)
    }

    #[test]
    fn maslov_of_basis_weights() {
        let p = p3();
        // e_0 wraps the center: m(e_0) = -(2N - 2) = -4 at N = 3.
        assert_eq!(maslov_of_weight(&p, &WeightVector::unit(&p, 0)), -4);
        for i in 1..=4 {
            assert_eq!(maslov_of_weight(&p, &WeightVector::unit(&p, i)), 2);
        }
    }

    #[test]
    fn alexander_of_basis_weights() {
        let p = p3();
        // e_2 occupies the petal slot on spoke 2, i.e. slot 3.
        assert_eq!(
            alexander_of_weight(&p, &WeightVector::unit(&p, 2)),
            AlexanderVector(vec![0, 0, 1, 0, 0, 0])
        );
        // The outer petal e_4 covers every arc slot.
        assert_eq!(
            alexander_of_weight(&p, &WeightVector::unit(&p, 4)),
            AlexanderVector(vec![0, 1, 0, 1, 0, 1])
        );
        // The center covers everything.
        assert_eq!(
            alexander_of_weight(&p, &WeightVector::unit(&p, 0)),
            AlexanderVector(vec![1; 6])
        );
    }

    #[test]
    fn maslov_of_monomials() {
        let p = p3();
        assert_eq!(maslov_of_vmonomial(&p, &VMonomial::var(&p, 0)), 4);
        assert_eq!(maslov_of_vmonomial(&p, &VMonomial::var(&p, 2)), -2);
        assert_eq!(maslov_of_vmonomial(&p, &VMonomial::var(&p, 4)), -2);
        // Monomial and weight gradings are opposite for matching regions.
        for i in 0..p.num_regions() {
            assert_eq!(
                maslov_of_vmonomial(&p, &VMonomial::var(&p, i)),
                -maslov_of_weight(&p, &WeightVector::unit(&p, i))
            );
        }
    }

    #[test]
    fn weight_splits_count() {
        let p = p3();
        let w = WeightVector::unit(&p, 1).plus(&WeightVector::unit(&p, 2));
        // Each unit component splits two ways: 2 * 2 = 4 ordered splits.
        assert_eq!(w.splits().len(), 4);
        for (a, b) in w.splits() {
            assert_eq!(a.plus(&b), w);
        }
    }

    #[test]
    fn combos_cancel_mod_2() {
        let mut c = Combo::zero();
        combo_add(&mut c, "x");
        combo_add(&mut c, "y");
        combo_add(&mut c, "x");
        assert_eq!(c.len(), 1);
        assert!(c.iter().any(|&t| t == "y"));
    }
}
