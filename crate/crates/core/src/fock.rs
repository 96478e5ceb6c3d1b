//! Concrete matrix representations of boson polynomials: truncated two-mode
//! Fock spaces and the fixed-excitation (spin-j) subspace.
//!
//! The fixed-N basis is ordered by descending n_a so that |e⟩ ↔ |1,0⟩ and
//! |g⟩ ↔ |0,1⟩ match the qubit convention of the matrix picture.

use num_complex::Complex64;

use crate::boson::{BosonPolynomial, NormalMonomial};
use crate::matrix::ComplexMatrix;

/// Hard truncation of the two-mode Fock space at occupation `n_max` per mode.
///
/// The basis is |n_a, n_b⟩ for 0 ≤ n_a, n_b ≤ n_max with index
/// n_a·(n_max+1) + n_b; amplitudes leaving the truncated space are dropped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockTruncation {
    pub n_max: u32,
}

impl FockTruncation {
    pub fn new(n_max: u32) -> Self {
        Self { n_max }
    }

    pub fn dim(&self) -> usize {
        ((self.n_max + 1) * (self.n_max + 1)) as usize
    }

    pub fn index(&self, n_a: u32, n_b: u32) -> usize {
        (n_a * (self.n_max + 1) + n_b) as usize
    }
}

/// The subspace with fixed total excitation N = n_a + n_b, dimension N+1.
///
/// N = 2j identifies the spin-j representation; the basis |n_a, n_b⟩ is
/// ordered by descending n_a, so index k holds |N−k, k⟩.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixedExcitationSubspace {
    pub total: u32,
}

impl FixedExcitationSubspace {
    pub fn new(total: u32) -> Self {
        Self { total }
    }

    pub fn dim(&self) -> usize {
        (self.total + 1) as usize
    }

    /// Row/column index of |n_a, N−n_a⟩.
    pub fn index(&self, n_a: u32) -> usize {
        (self.total - n_a) as usize
    }

    /// Occupations (n_a, n_b) at basis index k.
    pub fn occupations(&self, k: usize) -> (u32, u32) {
        let n_a = self.total - k as u32;
        (n_a, k as u32)
    }
}

/// Product n·(n−1)···(n−q+1) under a square root: amplitude of a^q|n⟩.
fn lowering_amp(n: u32, q: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..q {
        acc *= f64::from(n - i);
    }
    acc.sqrt()
}

/// Product (s+1)(s+2)···(s+p) under a square root: amplitude of a†^p|s⟩.
fn raising_amp(s: u32, p: u32) -> f64 {
    let mut acc = 1.0;
    for i in 1..=p {
        acc *= f64::from(s + i);
    }
    acc.sqrt()
}

/// Amplitude and target of one normal-ordered term applied to |n_a, n_b⟩;
/// `None` when the annihilators kill the state.
fn apply_term(m: &NormalMonomial, n_a: u32, n_b: u32) -> Option<(u32, u32, f64)> {
    let (q_a, q_b) = (m.annihilate[0], m.annihilate[1]);
    if q_a > n_a || q_b > n_b {
        return None;
    }
    let (s_a, s_b) = (n_a - q_a, n_b - q_b);
    let (p_a, p_b) = (m.create[0], m.create[1]);
    let amp = lowering_amp(n_a, q_a) * lowering_amp(n_b, q_b) * raising_amp(s_a, p_a) * raising_amp(s_b, p_b);
    Some((s_a + p_a, s_b + p_b, amp))
}

/// Matrix of P on the truncated Fock space, entries ⟨m_a,m_b|P|n_a,n_b⟩.
///
/// Amplitudes whose target exceeds the truncation are dropped; products of
/// represented operators therefore agree with the represented product only
/// on indices sufficiently far below `n_max`.
pub fn fock_represent(p: &BosonPolynomial, trunc: FockTruncation) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(trunc.dim(), trunc.dim());
    for n_a in 0..=trunc.n_max {
        for n_b in 0..=trunc.n_max {
            let col = trunc.index(n_a, n_b);
            for (m, coeff) in p.terms() {
                if let Some((t_a, t_b, amp)) = apply_term(m, n_a, n_b) {
                    if t_a <= trunc.n_max && t_b <= trunc.n_max {
                        let row = trunc.index(t_a, t_b);
                        out[(row, col)] += coeff * amp;
                    }
                }
            }
        }
    }
    out
}

/// Matrix of Π_N P Π_N on the fixed-excitation subspace, computed exactly via
/// the ladder rules (no truncation artifacts).
pub fn fixed_n_represent(p: &BosonPolynomial, n: u32) -> ComplexMatrix {
    let sub = FixedExcitationSubspace::new(n);
    let mut out = ComplexMatrix::zeros(sub.dim(), sub.dim());
    for k in 0..sub.dim() {
        let (n_a, n_b) = sub.occupations(k);
        for (m, coeff) in p.terms() {
            if let Some((t_a, t_b, amp)) = apply_term(m, n_a, n_b) {
                if t_a + t_b == n {
                    out[(sub.index(t_a), k)] += coeff * amp;
                }
            }
        }
    }
    out
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Complete operator basis of the fixed-N subspace: the (N+1)² normalized
/// number-conserving monomials a†^i b†^{N−i} a^j b^{N−j} / √(i!(N−i)!j!(N−j)!),
/// whose fixed-N representations are exactly the matrix units
/// |n_a=i⟩⟨n_a=j|. Element (i, j) sits at index i·(N+1) + j.
pub fn operator_basis(n: u32) -> Vec<BosonPolynomial> {
    let mut basis = Vec::with_capacity(((n + 1) * (n + 1)) as usize);
    for i in 0..=n {
        for j in 0..=n {
            let norm = (factorial(i) * factorial(n - i) * factorial(j) * factorial(n - j)).sqrt();
            basis.push(BosonPolynomial::monomial(
                NormalMonomial::new(i, n - i, j, n - j),
                Complex64::new(1.0 / norm, 0.0),
            ));
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boson::Mode;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn number_operator_on_truncated_space() {
        let n_a = BosonPolynomial::number(Mode::A);
        let rep = fock_represent(&n_a, FockTruncation::new(2));
        let expected: Vec<f64> = vec![0., 0., 0., 1., 1., 1., 2., 2., 2.];
        for (k, want) in expected.iter().enumerate() {
            assert!((rep[(k, k)] - c(*want, 0.0)).norm() <= 1e-15);
        }
        assert!(rep.max_abs_diff(&{
            let mut d = ComplexMatrix::zeros(9, 9);
            for (k, want) in expected.iter().enumerate() {
                d[(k, k)] = c(*want, 0.0);
            }
            d
        }) <= 1e-15);
    }

    #[test]
    fn annihilator_ladder_entries() {
        let a = BosonPolynomial::annihilator(Mode::A);
        let trunc = FockTruncation::new(1);
        let rep = fock_represent(&a, trunc);
        // nonzero entries: ⟨0,0|a|1,0⟩ = 1 and ⟨0,1|a|1,1⟩ = 1
        assert_eq!(rep[(trunc.index(0, 0), trunc.index(1, 0))], c(1.0, 0.0));
        assert_eq!(rep[(trunc.index(0, 1), trunc.index(1, 1))], c(1.0, 0.0));
        let nonzeros = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| rep[(i, j)].norm() > 1e-15)
            .count();
        assert_eq!(nonzeros, 2);
    }

    #[test]
    fn product_representation_matches_on_interior() {
        let x = BosonPolynomial::creator(Mode::A).multiply(&BosonPolynomial::annihilator(Mode::B));
        let y = BosonPolynomial::creator(Mode::B).multiply(&BosonPolynomial::annihilator(Mode::A));
        let trunc = FockTruncation::new(4);
        let lhs = fock_represent(&x.multiply(&y), trunc);
        let rhs = &fock_represent(&x, trunc) * &fock_represent(&y, trunc);
        let margin = (x.max_exponent() + y.max_exponent()) as usize;
        let interior = trunc.n_max as usize - margin;
        for ra in 0..=interior {
            for rb in 0..=interior {
                for ca in 0..=interior {
                    for cb in 0..=interior {
                        let (r, col) = (trunc.index(ra as u32, rb as u32), trunc.index(ca as u32, cb as u32));
                        assert!((lhs[(r, col)] - rhs[(r, col)]).norm() <= 1e-10);
                    }
                }
            }
        }
    }

    #[test]
    fn fixed_n_gives_pauli_raising() {
        let raise = BosonPolynomial::creator(Mode::A).multiply(&BosonPolynomial::annihilator(Mode::B));
        let rep = fixed_n_represent(&raise, 1);
        assert!(rep.approx_eq(&crate::matrix::sigma_plus(), 1e-15));
    }

    #[test]
    fn fixed_n_population_difference_is_sigma3() {
        let diff = &BosonPolynomial::number(Mode::A) - &BosonPolynomial::number(Mode::B);
        let rep = fixed_n_represent(&diff, 1);
        assert!(rep.approx_eq(&crate::matrix::sigma3(), 1e-15));
    }

    #[test]
    fn fixed_n_total_number_is_scalar() {
        let total = &BosonPolynomial::number(Mode::A) + &BosonPolynomial::number(Mode::B);
        let rep = fixed_n_represent(&total, 2);
        assert!(rep.approx_eq(&ComplexMatrix::identity(3).scale(c(2.0, 0.0)), 1e-15));
    }

    #[test]
    fn operator_basis_elements_are_matrix_units() {
        for n in [1u32, 2] {
            let basis = operator_basis(n);
            let dim = (n + 1) as usize;
            assert_eq!(basis.len(), dim * dim);
            for i in 0..=n {
                for j in 0..=n {
                    let rep = fixed_n_represent(&basis[(i * (n + 1) + j) as usize], n);
                    let mut unit = ComplexMatrix::zeros(dim, dim);
                    unit[((n - i) as usize, (n - j) as usize)] = c(1.0, 0.0);
                    assert!(rep.approx_eq(&unit, 1e-12), "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn operator_basis_full_rank_when_vectorized() {
        // the representations being exactly the matrix units, the stacked
        // vectorizations form a permutation matrix
        let n = 2;
        let basis = operator_basis(n);
        let dim = (n + 1) as usize;
        let mut stacked = ComplexMatrix::zeros(dim * dim, basis.len());
        for (k, e) in basis.iter().enumerate() {
            let v = fixed_n_represent(e, n).vec_columns();
            for (r, z) in v.iter().enumerate() {
                stacked[(r, k)] = *z;
            }
        }
        for k in 0..basis.len() {
            let col_norm: f64 = (0..dim * dim).map(|r| stacked[(r, k)].norm_sqr()).sum();
            assert!((col_norm - 1.0).abs() <= 1e-12);
        }
        let gram = &stacked.adjoint() * &stacked;
        assert!(gram.approx_eq(&ComplexMatrix::identity(basis.len()), 1e-12));
    }

    #[test]
    fn adjoint_representation_is_conjugate_transpose() {
        let p = &BosonPolynomial::creator(Mode::A)
            .multiply(&BosonPolynomial::annihilator(Mode::B))
            .scale(c(0.3, 0.4))
            + &BosonPolynomial::number(Mode::B).scale(c(0.0, 1.0));
        for n in [1u32, 2, 3] {
            let lhs = fixed_n_represent(&p.adjoint(), n);
            let rhs = fixed_n_represent(&p, n).adjoint();
            assert!(lhs.approx_eq(&rhs, 1e-12));
        }
    }

    #[test]
    fn number_conserving_homomorphism_on_fixed_n() {
        let x = BosonPolynomial::creator(Mode::A).multiply(&BosonPolynomial::annihilator(Mode::B));
        let y = BosonPolynomial::creator(Mode::B).multiply(&BosonPolynomial::annihilator(Mode::A));
        for n in [1u32, 2] {
            let lhs = fixed_n_represent(&x.multiply(&y), n);
            let rhs = &fixed_n_represent(&x, n) * &fixed_n_represent(&y, n);
            assert!(lhs.approx_eq(&rhs, 1e-12));
        }
    }
}
