//! Arithmetic of the Cayley-Dickson algebras 𝔸ₙ over the reals.
//!
//! An element of 𝔸ₙ is stored as its 2ⁿ real coordinates. The doubling split
//! places the first entry `x₁` in the low half and the second entry `x₂` in
//! the high half, so coordinate `i` is the basis element `eᵢ`. Products follow
//!
//! ```text
//! (x₁, x₂)(y₁, y₂) = (x₁y₁ − ȳ₂x₂, y₂x₁ + x₂ȳ₁),    conj(x₁, x₂) = (conj(x₁), −x₂)
//! ```
//!
//! with real multiplication at level 0. Other doubling conventions permute
//! signs in the basis tables but leave spectra unchanged.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sampling::{rng_from_seed, uniform_coords};

/// Highest supported level; 𝔸₈ has dimension 256.
pub const MAX_LEVEL: u32 = 8;

/// Residual tolerance relative to the operand scale `1 + ∏‖operand‖`.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Residual above which a failed identity is considered witnessed.
pub const WITNESS_THRESHOLD: f64 = 1e-6;

#[derive(Clone, PartialEq, Serialize)]
pub struct CdElement {
    level: u32,
    coords: Vec<f64>,
}

impl fmt::Debug for CdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}{:?}", self.level, self.coords)
    }
}

fn check_level(level: u32) -> Result<()> {
    if level > MAX_LEVEL {
        return Err(Error::UnsupportedLevel(level));
    }
    Ok(())
}

impl CdElement {
    /// Builds an element from exactly `2^level` coordinates. No normalization.
    pub fn new(level: u32, coords: Vec<f64>) -> Result<Self> {
        check_level(level)?;
        let dim = 1usize << level;
        if coords.len() != dim {
            return Err(Error::input(format!("level {level} needs {dim} coordinates, got {}", coords.len())));
        }
        Ok(Self { level, coords })
    }

    pub fn zero(level: u32) -> Result<Self> {
        check_level(level)?;
        Ok(Self { level, coords: vec![0.0; 1 << level] })
    }

    pub fn scalar(level: u32, value: f64) -> Result<Self> {
        let mut x = Self::zero(level)?;
        x.coords[0] = value;
        Ok(x)
    }

    pub fn one(level: u32) -> Result<Self> {
        Self::scalar(level, 1.0)
    }

    /// The basis element `e_index`.
    pub fn basis(level: u32, index: usize) -> Result<Self> {
        let mut x = Self::zero(level)?;
        if index >= x.coords.len() {
            return Err(Error::input(format!("basis index {index} out of range for level {level}")));
        }
        x.coords[index] = 1.0;
        Ok(x)
    }

    /// Coordinates drawn uniformly from [-1, 1].
    pub fn random<R: Rng + ?Sized>(level: u32, rng: &mut R) -> Result<Self> {
        check_level(level)?;
        Ok(Self { level, coords: uniform_coords(rng, 1 << level) })
    }

    pub fn random_seeded(level: u32, seed: u64) -> Result<Self> {
        Self::random(level, &mut rng_from_seed(seed))
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    pub fn real_part(&self) -> f64 {
        self.coords[0]
    }

    /// The doubling entries `(x₁, x₂)` of an element at level ≥ 1.
    pub fn split(&self) -> Result<(CdElement, CdElement)> {
        if self.level == 0 {
            return Err(Error::input("a level-0 element has no doubling split"));
        }
        let h = self.dim() / 2;
        let lower = self.level - 1;
        Ok((
            CdElement { level: lower, coords: self.coords[..h].to_vec() },
            CdElement { level: lower, coords: self.coords[h..].to_vec() },
        ))
    }

    /// The element `(x₁, x₂)` one level up.
    pub fn from_pair(x1: &CdElement, x2: &CdElement) -> Result<Self> {
        same_level(x1, x2)?;
        let mut coords = Vec::with_capacity(2 * x1.dim());
        coords.extend_from_slice(&x1.coords);
        coords.extend_from_slice(&x2.coords);
        Self::new(x1.level + 1, coords)
    }

    /// Canonical embedding `x ↦ (x, 0, …)` into a higher level.
    pub fn embed(&self, level: u32) -> Result<Self> {
        check_level(level)?;
        if level < self.level {
            return Err(Error::input(format!("cannot embed level {} into level {level}", self.level)));
        }
        let mut coords = vec![0.0; 1 << level];
        coords[..self.dim()].copy_from_slice(&self.coords);
        Ok(Self { level, coords })
    }

    pub fn conjugate(&self) -> CdElement {
        let mut coords = self.coords.clone();
        conj_in_place(&mut coords);
        CdElement { level: self.level, coords }
    }

    pub fn multiply(&self, other: &CdElement) -> Result<CdElement> {
        same_level(self, other)?;
        let mut out = vec![0.0; self.dim()];
        mul_into(&self.coords, &other.coords, &mut out);
        Ok(CdElement { level: self.level, coords: out })
    }

    /// Real part of `x·x̄`.
    pub fn norm_sq(&self) -> f64 {
        let mut out = vec![0.0; self.dim()];
        mul_into(&self.coords, &self.conjugate().coords, &mut out);
        out[0]
    }

    /// Euclidean norm of the coordinate vector.
    pub fn norm(&self) -> f64 {
        dot(&self.coords, &self.coords).sqrt()
    }

    /// The real scalar `½(xȳ + yx̄)`.
    pub fn inner(&self, other: &CdElement) -> Result<f64> {
        let a = self.multiply(&other.conjugate())?;
        let b = other.multiply(&self.conjugate())?;
        Ok(0.5 * (a.coords[0] + b.coords[0]))
    }

    /// `x − Re(x)`: coordinate 0 zeroed.
    pub fn imaginary_part(&self) -> CdElement {
        let mut coords = self.coords.clone();
        coords[0] = 0.0;
        CdElement { level: self.level, coords }
    }

    pub fn scale(&self, factor: f64) -> CdElement {
        CdElement { level: self.level, coords: self.coords.iter().map(|c| c * factor).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0.0)
    }

    pub fn max_abs(&self) -> f64 {
        self.coords.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

fn same_level(x: &CdElement, y: &CdElement) -> Result<()> {
    if x.level != y.level {
        return Err(Error::LevelMismatch(x.level, y.level));
    }
    Ok(())
}

pub fn commutator(x: &CdElement, y: &CdElement) -> Result<CdElement> {
    Ok(&x.multiply(y)? - &y.multiply(x)?)
}

/// `(xy)z − x(yz)`
pub fn associator(x: &CdElement, y: &CdElement, z: &CdElement) -> Result<CdElement> {
    same_level(x, z)?;
    Ok(&x.multiply(y)?.multiply(z)? - &x.multiply(&y.multiply(z)?)?)
}

/// Whether `[a, a, x] = 0` for every `x`. The associator is linear in its
/// last slot, so it suffices to test the basis:
/// `max_j ‖[a, a, e_j]‖ ≤ tol·(1 + ‖a‖²)`.
pub fn is_alternative(a: &CdElement, tol: f64) -> bool {
    alternativity_defect(a) <= tol * (1.0 + dot(&a.coords, &a.coords))
}

/// `max_j ‖[a, a, e_j]‖`.
pub fn alternativity_defect(a: &CdElement) -> f64 {
    let n = a.dim();
    let mut aa = vec![0.0; n];
    mul_into(&a.coords, &a.coords, &mut aa);
    let mut basis = vec![0.0; n];
    let mut left = vec![0.0; n];
    let mut inner = vec![0.0; n];
    let mut right = vec![0.0; n];
    let mut worst: f64 = 0.0;
    for j in 0..n {
        basis[j] = 1.0;
        mul_into(&aa, &basis, &mut left);
        mul_into(&a.coords, &basis, &mut inner);
        mul_into(&a.coords, &inner, &mut right);
        basis[j] = 0.0;
        let d: f64 = left.iter().zip(&right).map(|(l, r)| (l - r) * (l - r)).sum();
        worst = worst.max(d.sqrt());
    }
    worst
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn conj_in_place(v: &mut [f64]) {
    for c in v.iter_mut().skip(1) {
        *c = -*c;
    }
}

/// `out = x·y` on raw coordinate slices of equal power-of-two length.
pub(crate) fn mul_into(x: &[f64], y: &[f64], out: &mut [f64]) {
    let n = x.len();
    debug_assert!(n == y.len() && n == out.len() && n.is_power_of_two());
    match n {
        1 => out[0] = x[0] * y[0],
        2 => {
            // (a, b)(c, d) = (ac − db, da + bc)
            out[0] = x[0] * y[0] - y[1] * x[1];
            out[1] = y[1] * x[0] + x[1] * y[0];
        }
        _ => {
            let h = n / 2;
            let (x1, x2) = x.split_at(h);
            let (y1, y2) = y.split_at(h);
            let mut y1c = y1.to_vec();
            conj_in_place(&mut y1c);
            let mut y2c = y2.to_vec();
            conj_in_place(&mut y2c);
            let mut tmp = vec![0.0; h];
            let (o1, o2) = out.split_at_mut(h);

            mul_into(x1, y1, o1);
            mul_into(&y2c, x2, &mut tmp);
            o1.iter_mut().zip(&tmp).for_each(|(o, t)| *o -= t);

            mul_into(y2, x1, o2);
            mul_into(x2, &y1c, &mut tmp);
            o2.iter_mut().zip(&tmp).for_each(|(o, t)| *o += t);
        }
    }
}

impl Add for &CdElement {
    type Output = CdElement;

    /// Panics on a level mismatch.
    fn add(self, rhs: &CdElement) -> CdElement {
        assert_eq!(self.level, rhs.level, "level mismatch");
        CdElement { level: self.level, coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &CdElement {
    type Output = CdElement;

    /// Panics on a level mismatch.
    fn sub(self, rhs: &CdElement) -> CdElement {
        assert_eq!(self.level, rhs.level, "level mismatch");
        CdElement { level: self.level, coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &CdElement {
    type Output = CdElement;

    fn neg(self) -> CdElement {
        self.scale(-1.0)
    }
}

impl Mul for &CdElement {
    type Output = CdElement;

    /// Panics on a level mismatch; use [`CdElement::multiply`] for a checked product.
    fn mul(self, rhs: &CdElement) -> CdElement {
        self.multiply(rhs).expect("level mismatch")
    }
}

// ---------------------------------------------------------------------------
// Identity ladder

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    SelfConjugate,
    Commutative,
    Associative,
    Alternative,
    Flexible,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::SelfConjugate,
        Identity::Commutative,
        Identity::Associative,
        Identity::Alternative,
        Identity::Flexible,
    ];

    /// Highest level at which the identity holds throughout 𝔸ₙ (`None`: every level).
    pub fn max_level(self) -> Option<u32> {
        match self {
            Identity::SelfConjugate => Some(0),
            Identity::Commutative => Some(1),
            Identity::Associative => Some(2),
            Identity::Alternative => Some(3),
            Identity::Flexible => None,
        }
    }

    pub fn expected_at(self, level: u32) -> bool {
        self.max_level().is_none_or(|m| level <= m)
    }

    pub fn name(self) -> &'static str {
        match self {
            Identity::SelfConjugate => "self-conjugate",
            Identity::Commutative => "commutative",
            Identity::Associative => "associative",
            Identity::Alternative => "alternative",
            Identity::Flexible => "flexible",
        }
    }

    /// Scaled residual of the identity on `(x, y, z)`.
    pub fn residual(self, x: &CdElement, y: &CdElement, z: &CdElement) -> Result<f64> {
        let (nx, ny, nz) = (x.norm(), y.norm(), z.norm());
        let (defect, scale) = match self {
            Identity::SelfConjugate => ((x - &x.conjugate()).norm(), 1.0 + nx),
            Identity::Commutative => (commutator(x, y)?.norm(), 1.0 + nx * ny),
            Identity::Associative => (associator(x, y, z)?.norm(), 1.0 + nx * ny * nz),
            Identity::Alternative => (associator(x, x, y)?.norm(), 1.0 + nx * nx * ny),
            Identity::Flexible => (associator(x, y, x)?.norm(), 1.0 + nx * nx * ny),
        };
        Ok(defect / scale)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub z: Vec<f64>,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityResult {
    pub identity: Identity,
    pub holds: bool,
    pub expected: bool,
    pub max_residual: f64,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyReport {
    pub level: u32,
    pub trials: usize,
    pub seed: u64,
    pub tol: f64,
    pub results: Vec<IdentityResult>,
}

impl PropertyReport {
    pub fn result(&self, identity: Identity) -> &IdentityResult {
        self.results.iter().find(|r| r.identity == identity).expect("every identity is evaluated")
    }

    /// Whether every identity behaves as the ladder predicts at this level.
    pub fn matches_ladder(&self) -> bool {
        self.results.iter().all(|r| r.holds == r.expected)
    }
}

/// Evaluates the five identities on `trials` random triples drawn from `seed`.
///
/// An identity holds when the largest scaled residual is at most `tol`; when it
/// does not, the worst triple is kept as a witness.
pub fn property_report(level: u32, trials: usize, seed: u64, tol: f64) -> Result<PropertyReport> {
    check_level(level)?;
    if trials == 0 {
        return Err(Error::input("trials must be at least 1"));
    }
    if tol <= 0.0 {
        return Err(Error::input("tolerance must be positive"));
    }
    let mut rng = rng_from_seed(seed);
    let triples: Vec<[CdElement; 3]> = (0..trials)
        .map(|_| {
            Ok([
                CdElement::random(level, &mut rng)?,
                CdElement::random(level, &mut rng)?,
                CdElement::random(level, &mut rng)?,
            ])
        })
        .collect::<Result<_>>()?;

    let mut results = Vec::with_capacity(Identity::ALL.len());
    for identity in Identity::ALL {
        let mut worst = (0.0f64, 0usize);
        for (i, [x, y, z]) in triples.iter().enumerate() {
            let r = identity.residual(x, y, z)?;
            if r > worst.0 {
                worst = (r, i);
            }
        }
        let holds = worst.0 <= tol;
        let witness = (!holds).then(|| {
            let [x, y, z] = &triples[worst.1];
            Witness { x: x.coords.clone(), y: y.coords.clone(), z: z.coords.clone(), residual: worst.0 }
        });
        results.push(IdentityResult {
            identity,
            holds,
            expected: identity.expected_at(level),
            max_residual: worst.0,
            witness,
        });
    }
    Ok(PropertyReport { level, trials, seed, tol, results })
}

/// `e_i e_j = sign · e_k` in 𝔸_level, as `(sign, k)`.
pub fn basis_product(level: u32, i: usize, j: usize) -> Result<(i8, usize)> {
    let p = CdElement::basis(level, i)?.multiply(&CdElement::basis(level, j)?)?;
    let (k, v) = p
        .coords
        .iter()
        .enumerate()
        .find(|(_, v)| **v != 0.0)
        .ok_or_else(|| Error::Consistency(format!("e{i}·e{j} vanished")))?;
    Ok((if *v > 0.0 { 1 } else { -1 }, k))
}

/// Signed basis multiplication table; row `i`, column `j` holds `e_i e_j`.
pub fn multiplication_table(level: u32) -> Result<Vec<Vec<(i8, usize)>>> {
    check_level(level)?;
    let n = 1usize << level;
    (0..n).map(|i| (0..n).map(|j| basis_product(level, i, j)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(level: u32, i: usize) -> CdElement {
        CdElement::basis(level, i).unwrap()
    }

    fn close(a: &CdElement, b: &CdElement, tol: f64) -> bool {
        (a - b).max_abs() <= tol
    }

    #[test]
    fn make_element() {
        let x = CdElement::new(0, vec![3.5]).unwrap();
        assert_eq!(x.coords(), &[3.5]);
        let i = CdElement::new(1, vec![0.0, 1.0]).unwrap();
        assert_eq!(i, e(1, 1));
        let q = CdElement::new(2, vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(q.coords(), &[1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn make_element_errors() {
        assert!(matches!(CdElement::new(2, vec![1.0; 3]), Err(Error::Input(_))));
        assert!(matches!(CdElement::new(9, vec![0.0; 512]), Err(Error::UnsupportedLevel(9))));
        assert!(CdElement::new(8, vec![0.0; 256]).is_ok());
    }

    #[test]
    fn conjugate_basis() {
        for level in 0..=MAX_LEVEL {
            assert_eq!(e(level, 0).conjugate(), e(level, 0));
        }
        assert_eq!(e(3, 5).conjugate(), -&e(3, 5));
    }

    #[test]
    fn imaginary_unit_squares_to_minus_one() {
        let i = e(1, 1);
        assert_eq!((&i * &i).coords(), &[-1.0, 0.0]);
    }

    #[test]
    fn quaternion_units() {
        // e1 = (i, 0), e2 = (0, 1): (i,0)(0,1) = (i·0 − 1̄·0, 1·i + 0·0̄) = (0, i) = e3
        let prod = &e(2, 1) * &e(2, 2);
        assert_eq!(prod, e(2, 3));
        // same value through the level-1 recursion directly
        let i = e(1, 1);
        let one = e(1, 0);
        let zero = CdElement::zero(1).unwrap();
        let x = CdElement::from_pair(&i, &zero).unwrap();
        let y = CdElement::from_pair(&zero, &one).unwrap();
        let lhs = &x * &y;
        let expect = CdElement::from_pair(
            &(&(&i * &zero) - &(&one.conjugate() * &zero)),
            &(&(&one * &i) + &(&zero * &zero.conjugate())),
        )
        .unwrap();
        assert_eq!(lhs, expect);
    }

    #[test]
    fn unit_law() {
        let mut rng = rng_from_seed(3);
        for level in 0..=7 {
            let one = CdElement::one(level).unwrap();
            for _ in 0..10 {
                let x = CdElement::random(level, &mut rng).unwrap();
                assert_eq!(&one * &x, x);
                assert_eq!(&x * &one, x);
            }
        }
    }

    #[test]
    fn conjugation_is_an_involution_and_reverses_products() {
        let mut rng = rng_from_seed(4);
        for level in 0..=7 {
            for _ in 0..100 {
                let x = CdElement::random(level, &mut rng).unwrap();
                assert_eq!(x.conjugate().conjugate(), x);
            }
            for _ in 0..10 {
                let x = CdElement::random(level, &mut rng).unwrap();
                let y = CdElement::random(level, &mut rng).unwrap();
                let scale = 1.0 + x.norm() * y.norm();
                let lhs = (&x * &y).conjugate();
                let rhs = &y.conjugate() * &x.conjugate();
                assert!(close(&lhs, &rhs, 1e-10 * scale), "level {level}");
            }
        }
    }

    #[test]
    fn norm_sq_of_basis_is_one() {
        for level in 0..=7 {
            for i in 0..(1usize << level) {
                assert!((e(level, i).norm_sq() - 1.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn norm_is_multiplicative_up_to_octonions() {
        let mut rng = rng_from_seed(5);
        for level in 0..=3 {
            for _ in 0..100 {
                let x = CdElement::random(level, &mut rng).unwrap();
                let y = CdElement::random(level, &mut rng).unwrap();
                let lhs = (&x * &y).norm_sq();
                let rhs = x.norm_sq() * y.norm_sq();
                assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs));
            }
        }
    }

    #[test]
    fn sedenion_zero_divisor_fixture() {
        // found by searching products (e_i + e_j)(e_k − e_l) in 𝔸₄
        let x = &e(4, 1) + &e(4, 10);
        let y = &e(4, 4) - &e(4, 15);
        assert!((&x * &y).is_zero());
        assert_eq!(x.norm_sq() * y.norm_sq(), 4.0);
    }

    #[test]
    fn inner_product() {
        let mut rng = rng_from_seed(6);
        for level in 0..=7 {
            let x = CdElement::random(level, &mut rng).unwrap();
            let y = CdElement::random(level, &mut rng).unwrap();
            assert!((x.inner(&x).unwrap() - x.norm_sq()).abs() <= 1e-12 * (1.0 + x.norm_sq()));
            let d = dot(x.coords(), y.coords());
            assert!((x.inner(&y).unwrap() - d).abs() <= 1e-12 * (1.0 + x.norm() * y.norm()));
        }
        for level in 2..=7 {
            assert_eq!(e(level, 1).inner(&e(level, 2)).unwrap(), 0.0);
        }
        assert!(matches!(e(2, 1).inner(&e(3, 1)), Err(Error::LevelMismatch(2, 3))));
    }

    #[test]
    fn flexible_inner_product_identities() {
        let mut rng = rng_from_seed(7);
        for level in 0..=7 {
            for _ in 0..5 {
                let [x, y, z] = [0, 1, 2].map(|_| CdElement::random(level, &mut rng).unwrap());
                let scale = 1.0 + x.norm() * y.norm() * z.norm();
                let a = x.inner(&(&y * &z)).unwrap();
                let b = (&x * &z.conjugate()).inner(&y).unwrap();
                let c = (&y.conjugate() * &x).inner(&z).unwrap();
                assert!((a - b).abs() <= 1e-10 * scale, "level {level}");
                assert!((a - c).abs() <= 1e-10 * scale, "level {level}");
            }
        }
    }

    #[test]
    fn imaginary_part() {
        assert!(e(3, 0).imaginary_part().is_zero());
        assert_eq!(e(3, 3).imaginary_part(), e(3, 3));
        let x = CdElement::random_seeded(5, 1).unwrap();
        let half = (&x - &x.conjugate()).scale(0.5);
        assert!(close(&x.imaginary_part(), &half, 1e-15));
    }

    #[test]
    fn commutators_and_associators_vanish_where_expected() {
        let mut rng = rng_from_seed(8);
        for _ in 0..50 {
            for level in 0..=1 {
                let x = CdElement::random(level, &mut rng).unwrap();
                let y = CdElement::random(level, &mut rng).unwrap();
                assert!(commutator(&x, &y).unwrap().max_abs() < 1e-14);
            }
            for level in 0..=2 {
                let [x, y, z] = [0, 1, 2].map(|_| CdElement::random(level, &mut rng).unwrap());
                assert!(associator(&x, &y, &z).unwrap().max_abs() < 1e-13);
            }
        }
        for level in 0..=7 {
            let x = CdElement::random(level, &mut rng).unwrap();
            let y = CdElement::random(level, &mut rng).unwrap();
            let scale = 1.0 + x.norm_sq() * y.norm();
            assert!(associator(&x, &y, &x).unwrap().norm() <= 1e-10 * scale);
        }
        assert!(commutator(&e(2, 1), &e(3, 1)).is_err());
    }

    #[test]
    fn octonions_are_alternative() {
        let mut rng = rng_from_seed(9);
        for _ in 0..100 {
            assert!(is_alternative(&CdElement::random(3, &mut rng).unwrap(), DEFAULT_TOL));
        }
    }

    #[test]
    fn generic_sedenions_are_not_alternative() {
        let mut rng = rng_from_seed(10);
        let failures =
            (0..100).filter(|_| !is_alternative(&CdElement::random(4, &mut rng).unwrap(), DEFAULT_TOL)).count();
        assert!(failures >= 95, "{failures}");
    }

    #[test]
    fn embedded_octonions_are_alternative_in_sedenions() {
        let mut rng = rng_from_seed(11);
        for _ in 0..100 {
            let x = CdElement::random(3, &mut rng).unwrap().embed(4).unwrap();
            assert!(is_alternative(&x, DEFAULT_TOL));
        }
    }

    #[test]
    fn ladder_matches_expectations() {
        for level in 0..=5 {
            let report = property_report(level, 200, 42, DEFAULT_TOL).unwrap();
            assert!(report.matches_ladder(), "level {level}: {report:?}");
            for r in &report.results {
                if let Some(w) = &r.witness {
                    let args = [&w.x, &w.y, &w.z].map(|c| CdElement::new(level, c.clone()).unwrap());
                    let again = r.identity.residual(&args[0], &args[1], &args[2]).unwrap();
                    assert_eq!(again, w.residual);
                    assert!(again > WITNESS_THRESHOLD);
                }
            }
        }
    }

    #[test]
    fn property_report_rejects_bad_arguments() {
        assert!(property_report(3, 0, 1, DEFAULT_TOL).is_err());
        assert!(property_report(3, 10, 1, 0.0).is_err());
        assert!(property_report(9, 10, 1, DEFAULT_TOL).is_err());
    }

    #[test]
    fn octonion_table_matches_fixture() {
        let expect = [
            "+0 +1 +2 +3 +4 +5 +6 +7",
            "+1 -0 +3 -2 +5 -4 -7 +6",
            "+2 -3 -0 +1 +6 +7 -4 -5",
            "+3 +2 -1 -0 +7 -6 +5 -4",
            "+4 -5 -6 -7 -0 +1 +2 +3",
            "+5 +4 -7 +6 -1 -0 -3 +2",
            "+6 +7 +4 -5 -2 +3 -0 -1",
            "+7 -6 +5 +4 -3 -2 +1 -0",
        ];
        let table = multiplication_table(3).unwrap();
        for (row, want) in table.iter().zip(expect) {
            let got: Vec<String> = row.iter().map(|(s, k)| format!("{}{k}", if *s > 0 { '+' } else { '-' })).collect();
            assert_eq!(got.join(" "), want);
        }
    }
}
