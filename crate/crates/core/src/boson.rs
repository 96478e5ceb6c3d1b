//! Exact symbolic algebra of the two-mode boson algebra with normal order as
//! the canonical form.
//!
//! Every operator is a finite complex-linear combination of normal-ordered
//! monomials a†^{p_a} b†^{p_b} a^{q_a} b^{q_b}. Products are rewritten back
//! into this form with the canonical commutators [a,a†] = [b,b†] = 1; the two
//! modes commute with each other. Canonicity makes equality coefficient-wise.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Coefficients with magnitude at or below this are dropped after every
/// arithmetic operation, so cancellation residue cannot accumulate.
pub const PRUNE_TOL: f64 = 1e-14;

/// Oscillator mode label; the two modes are conventionally called a and b.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    A = 0,
    B = 1,
}

/// A normal-ordered monomial a†^{p_a} b†^{p_b} a^{q_a} b^{q_b}.
///
/// Exponents are stored per mode so the canonical key is just the exponent
/// arrays; the all-zero monomial is the identity operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalMonomial {
    /// Creation exponents (p_a, p_b).
    pub create: [u32; 2],
    /// Annihilation exponents (q_a, q_b).
    pub annihilate: [u32; 2],
}

impl NormalMonomial {
    pub fn new(p_a: u32, p_b: u32, q_a: u32, q_b: u32) -> Self {
        Self {
            create: [p_a, p_b],
            annihilate: [q_a, q_b],
        }
    }

    pub fn identity() -> Self {
        Self::new(0, 0, 0, 0)
    }

    pub fn is_identity(&self) -> bool {
        self.create == [0, 0] && self.annihilate == [0, 0]
    }

    /// Swaps creation and annihilation exponents per mode (the dagger of an
    /// already normal-ordered monomial, before re-normal-ordering).
    fn reversed(&self) -> Self {
        Self {
            create: self.annihilate,
            annihilate: self.create,
        }
    }

    pub fn is_number_conserving(&self) -> bool {
        self.create[0] + self.create[1] == self.annihilate[0] + self.annihilate[1]
    }

    /// Largest single exponent; used to bound truncation margins.
    pub fn max_exponent(&self) -> u32 {
        *self.create.iter().chain(self.annihilate.iter()).max().unwrap()
    }
}

/// Finite complex-linear combination of normal-ordered two-mode monomials.
#[derive(Debug, Clone, PartialEq)]
pub struct BosonPolynomial {
    terms: BTreeMap<NormalMonomial, Complex64>,
}

fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * f64::from(n - i) / f64::from(i + 1);
    }
    acc
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

impl BosonPolynomial {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    /// The identity operator.
    pub fn one() -> Self {
        Self::monomial(NormalMonomial::identity(), Complex64::new(1.0, 0.0))
    }

    pub fn monomial(m: NormalMonomial, coeff: Complex64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff.norm() > PRUNE_TOL {
            terms.insert(m, coeff);
        }
        Self { terms }
    }

    /// Annihilation operator of the given mode.
    pub fn annihilator(mode: Mode) -> Self {
        let mut q = [0, 0];
        q[mode as usize] = 1;
        Self::monomial(
            NormalMonomial { create: [0, 0], annihilate: q },
            Complex64::new(1.0, 0.0),
        )
    }

    /// Creation operator of the given mode.
    pub fn creator(mode: Mode) -> Self {
        let mut p = [0, 0];
        p[mode as usize] = 1;
        Self::monomial(
            NormalMonomial { create: p, annihilate: [0, 0] },
            Complex64::new(1.0, 0.0),
        )
    }

    /// Number operator of the given mode.
    pub fn number(mode: Mode) -> Self {
        let mut e = [0, 0];
        e[mode as usize] = 1;
        Self::monomial(
            NormalMonomial { create: e, annihilate: e },
            Complex64::new(1.0, 0.0),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalMonomial, &Complex64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &NormalMonomial) -> Complex64 {
        self.terms.get(m).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn max_coeff(&self) -> f64 {
        self.terms.values().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_number_conserving(&self) -> bool {
        self.terms.keys().all(NormalMonomial::is_number_conserving)
    }

    /// Largest single exponent over all terms.
    pub fn max_exponent(&self) -> u32 {
        self.terms.keys().map(NormalMonomial::max_exponent).max().unwrap_or(0)
    }

    fn prune(mut self) -> Self {
        self.terms.retain(|_, coeff| coeff.norm() > PRUNE_TOL);
        self
    }

    fn add_term(terms: &mut BTreeMap<NormalMonomial, Complex64>, m: NormalMonomial, coeff: Complex64) {
        let entry = terms.entry(m).or_insert(Complex64::new(0.0, 0.0));
        *entry += coeff;
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, coeff)| (*m, coeff * factor)).collect(),
        }
        .prune()
    }

    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// Normal-ordered product of two monomials via the per-mode rewrite
    /// a^q a†^p = Σ_k C(q,k) C(p,k) k! a†^{p−k} a^{q−k}.
    fn multiply_monomials(
        out: &mut BTreeMap<NormalMonomial, Complex64>,
        m1: &NormalMonomial,
        m2: &NormalMonomial,
        coeff: Complex64,
    ) {
        let (q1a, q1b) = (m1.annihilate[0], m1.annihilate[1]);
        let (p2a, p2b) = (m2.create[0], m2.create[1]);
        for k in 0..=q1a.min(p2a) {
            let wa = binomial(q1a, k) * binomial(p2a, k) * factorial(k);
            for l in 0..=q1b.min(p2b) {
                let wb = binomial(q1b, l) * binomial(p2b, l) * factorial(l);
                let m = NormalMonomial {
                    create: [m1.create[0] + p2a - k, m1.create[1] + p2b - l],
                    annihilate: [q1a - k + m2.annihilate[0], q1b - l + m2.annihilate[1]],
                };
                Self::add_term(out, m, coeff * (wa * wb));
            }
        }
    }

    /// Normal-ordered product; distributes over addition and is associative.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                Self::multiply_monomials(&mut out, m1, m2, c1 * c2);
            }
        }
        Self { terms: out }.prune()
    }

    /// Hermitian adjoint: conjugate coefficients and swap creation and
    /// annihilation exponents per mode. Reversing the factor order of a
    /// normal-ordered monomial lands back in normal order because the two
    /// modes commute, so no rewrite step is needed.
    pub fn adjoint(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, coeff)| (m.reversed(), coeff.conj()))
                .collect(),
        }
        .prune()
    }

    /// Commutator [self, other] = self·other − other·self, normal-ordered.
    pub fn commutator(&self, other: &Self) -> Self {
        &self.multiply(other) - &other.multiply(self)
    }

    pub fn max_coeff_delta(&self, other: &Self) -> f64 {
        let mut max = 0.0f64;
        for m in self.terms.keys().chain(other.terms.keys()) {
            max = max.max((self.coeff(m) - other.coeff(m)).norm());
        }
        max
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_coeff_delta(other) <= tol
    }
}

impl Add for &BosonPolynomial {
    type Output = BosonPolynomial;

    fn add(self, rhs: &BosonPolynomial) -> BosonPolynomial {
        let mut terms = self.terms.clone();
        for (m, coeff) in &rhs.terms {
            BosonPolynomial::add_term(&mut terms, *m, *coeff);
        }
        BosonPolynomial { terms }.prune()
    }
}

impl Sub for &BosonPolynomial {
    type Output = BosonPolynomial;

    fn sub(self, rhs: &BosonPolynomial) -> BosonPolynomial {
        let mut terms = self.terms.clone();
        for (m, coeff) in &rhs.terms {
            BosonPolynomial::add_term(&mut terms, *m, -coeff);
        }
        BosonPolynomial { terms }.prune()
    }
}

impl Neg for &BosonPolynomial {
    type Output = BosonPolynomial;

    fn neg(self) -> BosonPolynomial {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for &BosonPolynomial {
    type Output = BosonPolynomial;

    fn mul(self, rhs: &BosonPolynomial) -> BosonPolynomial {
        self.multiply(rhs)
    }
}

impl fmt::Display for BosonPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(m, coeff)| {
                let re = if coeff.re == 0.0 { 0.0 } else { coeff.re };
                let im = if coeff.im == 0.0 { 0.0 } else { coeff.im };
                format!(
                    "({}{:+}i)·ad^{} bd^{} a^{} b^{}",
                    re, im, m.create[0], m.create[1], m.annihilate[0], m.annihilate[1]
                )
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// Returns λ with P = λ·Q coefficient-wise within `tol` (relative to the
/// largest coefficient magnitude of Q), `None` if P is not proportional to Q,
/// and an error for Q = 0. P = 0 yields λ = 0.
pub fn proportionality(p: &BosonPolynomial, q: &BosonPolynomial, tol: f64) -> Result<Option<Complex64>> {
    if q.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let q_scale = q.max_coeff();
    // anchor on Q's largest-magnitude monomial (first such in canonical order)
    let (anchor, q_anchor) = q
        .terms
        .iter()
        .fold(None, |best: Option<(&NormalMonomial, &Complex64)>, (m, c)| match best {
            Some((_, bc)) if bc.norm() >= c.norm() => best,
            _ => Some((m, c)),
        })
        .expect("nonzero polynomial has terms");
    let lambda = p.coeff(anchor) / q_anchor;
    let residual = p.max_coeff_delta(&q.scale(lambda));
    if residual <= tol * q_scale {
        Ok(Some(lambda))
    } else {
        Ok(None)
    }
}
