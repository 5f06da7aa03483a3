use num_traits::Zero;
use rand::Rng;

use super::{BinaryForm, DualForm};
use crate::exactlin::scalar::falling;
use crate::exactlin::{LinearSubspace, Matrix, Scalar};
use crate::Error;

/// Weight of `X^{s-j} Y^j` acting on `x^{d-i} y^i`: the partial derivative
/// `∂x^{s-j} ∂y^j` produces this multiple of `x^{d-i-s+j} y^{i-j}`.
fn weight(d: usize, s: usize, i: usize, j: usize) -> Scalar {
    if j > i || s - j > d - i {
        return Scalar::zero();
    }
    Scalar::from_integer(falling(d - i, s - j) * falling(i, j))
}

/// Apolarity action: `g` acts on `f` as the differential operator obtained by
/// substituting `X = ∂/∂x`, `Y = ∂/∂y`.
pub fn contract(g: &DualForm, f: &BinaryForm) -> Result<BinaryForm, Error> {
    let (s, d) = (g.degree(), f.degree());
    if s > d {
        return Err(Error::DegreeTooLarge { dual: s, form: d });
    }
    let out = (0..=d - s)
        .map(|k| {
            g.coeffs().iter().enumerate().fold(Scalar::zero(), |acc, (j, gj)| {
                let fi = &f.coeffs()[k + j];
                if gj.is_zero() || fi.is_zero() {
                    acc
                } else {
                    acc + gj * fi * weight(d, s, k + j, j)
                }
            })
        })
        .collect();
    Ok(BinaryForm::from_vec(out))
}

/// Matrix of `g ↦ contract(g, f)` from degree-`s` dual forms to degree `d - s` forms:
/// `(d-s+1) × (s+1)`, column `j` is the image of `X^{s-j} Y^j`.
pub fn catalecticant(f: &BinaryForm, s: usize) -> Matrix {
    let d = f.degree();
    assert!(s <= d, "catalecticant degree {s} exceeds form degree {d}");
    let mut m = Matrix::zeros(d - s + 1, s + 1);
    for k in 0..=d - s {
        for j in 0..=s {
            let fi = &f.coeffs()[k + j];
            if !fi.is_zero() {
                m.set(k, j, fi * weight(d, s, k + j, j));
            }
        }
    }
    m
}

/// Matrix of `f ↦ contract(g, f)` on degree-`d` forms: `(d-s+1) × (d+1)`.
pub fn contraction_matrix(g: &DualForm, d: usize) -> Result<Matrix, Error> {
    let s = g.degree();
    if s > d {
        return Err(Error::DegreeTooLarge { dual: s, form: d });
    }
    let mut m = Matrix::zeros(d - s + 1, d + 1);
    for k in 0..=d - s {
        for (j, gj) in g.coeffs().iter().enumerate() {
            if !gj.is_zero() {
                m.set(k, k + j, gj * weight(d, s, k + j, j));
            }
        }
    }
    Ok(m)
}

/// Forms of degree `d` annihilated by `g`. For squarefree `g` of degree at most
/// `d + 1` this is the span of the powers `l^d` over the roots of `g`; for general
/// `g` it is the span of the scheme cut out by `g`.
pub fn apolar_span(g: &DualForm, d: usize) -> Result<LinearSubspace, Error> {
    if g.is_zero() {
        return Err(Error::ZeroForm);
    }
    if g.degree() > d {
        return Ok(LinearSubspace::whole(d));
    }
    Ok(contraction_matrix(g, d)?.kernel())
}

/// Degree-`t` part of the apolar ideal of a form.
#[derive(Clone, Debug)]
pub struct ApolarSlice {
    pub source_form: BinaryForm,
    pub slice_degree: usize,
    pub basis: Vec<DualForm>,
}

impl ApolarSlice {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn element(&self, coeffs: &[Scalar]) -> DualForm {
        DualForm::combination(&self.basis, coeffs)
    }

    /// Pseudo-random integer combination of the basis, nonzero.
    pub fn random_element<R: Rng>(&self, rng: &mut R, h: i64) -> Option<DualForm> {
        if self.basis.is_empty() {
            return None;
        }
        loop {
            let c = crate::rng::random_vec(rng, self.basis.len(), h);
            let g = self.element(&c);
            if !g.is_zero() {
                return Some(g);
            }
        }
    }

    pub fn contains(&self, g: &DualForm) -> bool {
        g.degree() == self.slice_degree
            && (g.degree() > self.source_form.degree()
                || contract(g, &self.source_form).map(|r| r.is_zero()).unwrap_or(false))
    }
}

/// Basis of the degree-`t` apolar forms of `f`, `0 ≤ t ≤ d + 1`. At `t = d + 1` every
/// dual form annihilates `f`.
pub fn apolar_slice(f: &BinaryForm, t: usize) -> Result<ApolarSlice, Error> {
    let d = f.degree();
    if t > d + 1 {
        return Err(Error::Precondition(format!("slice degree {t} exceeds d + 1 = {}", d + 1)));
    }
    let basis = if t == d + 1 {
        (0..=t).map(|j| DualForm::monomial(t, j)).collect()
    } else {
        catalecticant(f, t)
            .kernel()
            .basis()
            .iter()
            .map(|row| DualForm::from_vec(row.clone()))
            .collect()
    };
    Ok(ApolarSlice { source_form: f.clone(), slice_degree: t, basis })
}
