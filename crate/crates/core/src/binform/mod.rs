//! Binary forms, the apolarity action, catalecticants, graded apolar slices,
//! squarefree tests and the division family behind the irredundancy certificate.
//!
//! A [`BinaryForm`] of degree `d` in `x, y` stores the coefficient of `x^{d-i} y^i`
//! at index `i`; the same vector is the homogeneous coordinate vector of a point of
//! `P^d`. A [`DualForm`] lives in the dual variables `X, Y`, which act on binary
//! forms as `∂/∂x` and `∂/∂y`.
//!
//! A point `(a:b)` of `P^1` corresponds to the power `(ax + by)^d` on the rational
//! normal curve and to the dual linear form `bX - aY`, which annihilates that power.
//! A dual form therefore encodes the set of its projective roots.

mod apolar;
mod division;
mod squarefree;

use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::exactlin::scalar::{binomial, normalize_projective, parse_scalar};
use crate::exactlin::Scalar;
use crate::Error;

pub use apolar::{apolar_slice, apolar_span, catalecticant, contract, contraction_matrix, ApolarSlice};
pub use division::{
    division_family, irredundancy_certificate, is_irredundant, quotient_at, DivisionFamily,
};
pub use squarefree::{
    find_squarefree_element, gcd, gcd_all, resultant, squarefree, squarefree_via_discriminant,
    squarefree_via_gcd,
};

#[doc(hidden)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Primal;
#[doc(hidden)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dual;

/// Homogeneous form in two variables; `V` tags which pair of variables.
pub struct Form<V> {
    coeffs: Vec<Scalar>,
    _vars: PhantomData<V>,
}

impl<V> Clone for Form<V> {
    fn clone(&self) -> Self {
        Form { coeffs: self.coeffs.clone(), _vars: PhantomData }
    }
}

impl<V> PartialEq for Form<V> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<V> Eq for Form<V> {}

impl<V> std::hash::Hash for Form<V> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

/// Form in `x, y`; equivalently a point of `P^d`.
pub type BinaryForm = Form<Primal>;
/// Form in the differential variables `X, Y`.
pub type DualForm = Form<Dual>;

impl<V> Form<V> {
    /// Builds a form from `degree + 1` coefficients.
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::Precondition("a form needs at least one coefficient".into()));
        }
        Ok(Form { coeffs, _vars: PhantomData })
    }

    pub(crate) fn from_vec(coeffs: Vec<Scalar>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Form { coeffs, _vars: PhantomData }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_vec(coeffs.iter().map(|&c| Scalar::from_integer(c.into())).collect())
    }

    pub fn zero(degree: usize) -> Self {
        Self::from_vec(vec![Scalar::zero(); degree + 1])
    }

    /// The monomial with exponent `j` on the second variable.
    pub fn monomial(degree: usize, j: usize) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[j] = Scalar::one();
        f
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Value at `(u, v)`: `Σ c_j u^{deg-j} v^j`.
    pub fn eval(&self, u: &Scalar, v: &Scalar) -> Scalar {
        let d = self.degree();
        let mut upow = vec![Scalar::one(); d + 1];
        let mut vpow = vec![Scalar::one(); d + 1];
        for i in 1..=d {
            upow[i] = &upow[i - 1] * u;
            vpow[i] = &vpow[i - 1] * v;
        }
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Scalar::zero(), |acc, (j, c)| acc + c * &upow[d - j] * &vpow[j])
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_vec(out)
    }

    /// Exact quotient `self / g`; `None` when `g` is zero, too large, or does not divide.
    pub fn div_exact(&self, g: &Self) -> Option<Self> {
        let j0 = g.second_variable_multiplicity()?;
        let (d, e) = (self.degree(), g.degree());
        if e > d {
            return None;
        }
        let inv = g.coeffs[j0].recip();
        let mut h = vec![Scalar::zero(); d - e + 1];
        for k in 0..h.len() {
            let mut acc = self.coeffs.get(k + j0).cloned().unwrap_or_default();
            for j in (j0 + 1)..=e.min(k + j0) {
                acc -= &g.coeffs[j] * &h[k + j0 - j];
            }
            h[k] = acc * &inv;
        }
        let h = Self::from_vec(h);
        (g.mul(&h) == *self).then_some(h)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_vec(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Sum of two forms of equal degree.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "adding forms of different degrees");
        Self::from_vec(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    /// Linear combination `Σ c_i f_i` of forms sharing one degree.
    pub fn combination(forms: &[Self], coeffs: &[Scalar]) -> Self {
        assert_eq!(forms.len(), coeffs.len());
        assert!(!forms.is_empty());
        let mut out = vec![Scalar::zero(); forms[0].coeffs.len()];
        for (f, c) in forms.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(&f.coeffs) {
                *o += c * x;
            }
        }
        Self::from_vec(out)
    }

    /// Partial derivative with respect to the first variable.
    pub fn derivative_first(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return Self::zero(0);
        }
        Self::from_vec((0..d).map(|j| &self.coeffs[j] * Scalar::from_integer((d - j).into())).collect())
    }

    /// Partial derivative with respect to the second variable.
    pub fn derivative_second(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return Self::zero(0);
        }
        Self::from_vec((0..d).map(|j| &self.coeffs[j + 1] * Scalar::from_integer((j + 1).into())).collect())
    }

    /// Multiplicity of the root `(1:0)`, i.e. the largest power of the second variable
    /// dividing the form. `None` for the zero form.
    pub fn second_variable_multiplicity(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Scalar multiple with first nonzero coefficient equal to one.
    pub fn monic(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(lead) => {
                let inv = lead.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Projective normalization: coprime integer coefficients, first nonzero positive.
    pub fn normalized(&self) -> Self {
        Self::from_vec(normalize_projective(&self.coeffs))
    }

    /// Whether the two forms agree up to a nonzero scalar.
    pub fn proportional(&self, other: &Self) -> bool {
        self.degree() == other.degree() && self.normalized() == other.normalized()
    }

    pub fn random<R: Rng>(rng: &mut R, degree: usize, h: i64) -> Self {
        loop {
            let f = Self::from_vec(crate::rng::random_vec(rng, degree + 1, h));
            if !f.is_zero() {
                return f;
            }
        }
    }

    /// Parses the `d:c0,c1,...,cd` encoding.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let (deg, rest) =
            s.trim().split_once(':').ok_or_else(|| Error::Parse(format!("missing `:` in `{s}`")))?;
        let d: usize =
            deg.trim().parse().map_err(|_| Error::Parse(format!("bad degree `{deg}`")))?;
        let coeffs: Vec<Scalar> = rest.split(',').map(parse_scalar).collect::<Result<_, _>>()?;
        if coeffs.len() != d + 1 {
            return Err(Error::Parse(format!(
                "degree {d} needs {} coefficients, found {}",
                d + 1,
                coeffs.len()
            )));
        }
        Ok(Self::from_vec(coeffs))
    }
}

impl BinaryForm {
    /// `(a x + b y)^d`, the point `(a:b)` of `P^1` on the degree-`d` rational normal curve.
    pub fn power_of_linear(a: &Scalar, b: &Scalar, d: usize) -> Self {
        let f = DualForm::from_vec(vec![a.clone(), b.clone()]);
        let coeffs = f.pow_coeffs(d);
        Self::from_vec(coeffs)
    }

    /// Integer-coordinate version of [`BinaryForm::power_of_linear`].
    pub fn power_of_linear_i64(a: i64, b: i64, d: usize) -> Self {
        Self::power_of_linear(&Scalar::from_integer(a.into()), &Scalar::from_integer(b.into()), d)
    }

    /// `x^d + y^d`.
    pub fn binomial_pure_powers(d: usize) -> Self {
        let mut f = Self::zero(d);
        f.coeffs[0] = Scalar::one();
        f.coeffs[d] += Scalar::one();
        f
    }
}

impl DualForm {
    /// The linear dual form `vX - uY`, vanishing at `(u:v)`.
    pub fn vanishing_at(u: &Scalar, v: &Scalar) -> Self {
        Self::from_vec(vec![v.clone(), -u.clone()])
    }

    /// Product of the linear forms vanishing at the given points.
    pub fn from_roots(roots: &[(Scalar, Scalar)]) -> Self {
        roots
            .iter()
            .fold(Self::from_vec(vec![Scalar::one()]), |acc, (u, v)| acc.mul(&Self::vanishing_at(u, v)))
    }

    fn pow_coeffs(&self, d: usize) -> Vec<Scalar> {
        // (a X + b Y)^d expanded with binomial weights
        let (a, b) = (&self.coeffs[0], &self.coeffs[1]);
        (0..=d)
            .map(|i| {
                let c: BigInt = binomial(d as u64, i as u64);
                Scalar::from_integer(c) * num_traits::pow(a.clone(), d - i) * num_traits::pow(b.clone(), i)
            })
            .collect()
    }
}

impl<V> fmt::Display for Form<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.degree())?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl<V> fmt::Debug for Form<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form({self})")
    }
}

impl<V> std::str::FromStr for Form<V> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::{int, ratio};

    #[test]
    fn encoding_roundtrip() {
        for s in ["4:0,1,0,0,0", "2:1,0,1", "3:1/2,-7,0,22/3"] {
            let f = BinaryForm::parse(s).unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!(BinaryForm::parse("3:1,2").is_err());
        assert!(BinaryForm::parse("1,2").is_err());
        assert!(BinaryForm::parse("1:1,q").is_err());
    }

    #[test]
    fn power_of_linear_has_binomial_weights() {
        let f = BinaryForm::power_of_linear_i64(1, 2, 3);
        assert_eq!(f, BinaryForm::from_i64(&[1, 6, 12, 8]));
    }

    #[test]
    fn vanishing_form_kills_its_point() {
        let g = DualForm::vanishing_at(&ratio(2, 3), &int(-1));
        assert!(g.eval(&ratio(2, 3), &int(-1)).is_zero());
        assert!(!g.eval(&int(1), &int(1)).is_zero());
    }

    #[test]
    fn derivatives() {
        // X^2 Y + 3 Y^3 -> d/dX = 2XY, d/dY = X^2 + 9Y^2
        let g = DualForm::from_i64(&[0, 1, 0, 3]);
        assert_eq!(g.derivative_first(), DualForm::from_i64(&[0, 2, 0]));
        assert_eq!(g.derivative_second(), DualForm::from_i64(&[1, 0, 9]));
        assert_eq!(g.second_variable_multiplicity(), Some(1));
    }

    #[test]
    fn exact_division() {
        let a = BinaryForm::from_i64(&[0, 1, 2]);
        let b = BinaryForm::from_i64(&[3, 0, -1, 5]);
        assert_eq!(a.mul(&b).div_exact(&a), Some(b.clone()));
        assert_eq!(a.mul(&b).div_exact(&b), Some(a.clone()));
        assert_eq!(b.div_exact(&a), None);
        assert_eq!(a.div_exact(&BinaryForm::zero(1)), None);
    }
}
