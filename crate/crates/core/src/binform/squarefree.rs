use num_traits::{One, Zero};

use super::{DualForm, Form};
use crate::exactlin::{Matrix, Scalar};
use crate::Error;

// Dense univariate polynomials, ascending coefficients, trailing zeros trimmed.
type Poly = Vec<Scalar>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn make_monic(p: Poly) -> Poly {
    match p.last() {
        Some(lead) if !lead.is_one() => {
            let inv = lead.recip();
            p.into_iter().map(|c| c * &inv).collect()
        }
        _ => p,
    }
}

fn poly_rem(mut a: Poly, b: &Poly) -> Poly {
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    while a.len() > db {
        let shift = a.len() - 1 - db;
        let f = a.last().unwrap() * &lead_inv;
        if !f.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                a[shift + i] -= &f * bc;
            }
        }
        a.pop();
        a = trim(a);
    }
    a
}

fn poly_gcd(a: Poly, b: Poly) -> Poly {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = poly_rem(a, &b);
        a = make_monic(b);
        b = make_monic(r);
    }
    make_monic(a)
}

fn poly_derivative(p: &Poly) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * Scalar::from_integer(k.into())).collect())
}

/// `g(z, 1)` as an ascending polynomial in `z`.
fn dehomogenize<V>(g: &Form<V>) -> Poly {
    trim(g.coeffs().iter().rev().cloned().collect())
}

/// Sylvester matrix determinant of two coefficient sequences, listed from the highest
/// power of the first variable down. Leading zeros are kept, so the result is the
/// homogeneous resultant: it vanishes exactly when the forms share a projective root.
fn sylvester(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    if size == 0 {
        return Scalar::one();
    }
    let mut s = Matrix::zeros(size, size);
    for i in 0..n {
        for (j, c) in a.iter().enumerate() {
            s.set(i, i + j, c.clone());
        }
    }
    for i in 0..m {
        for (j, c) in b.iter().enumerate() {
            s.set(n + i, i + j, c.clone());
        }
    }
    s.determinant()
}

/// Homogeneous resultant of two binary forms.
pub fn resultant<V>(f: &Form<V>, g: &Form<V>) -> Scalar {
    sylvester(f.coeffs(), g.coeffs())
}

/// Squarefree test: `g` has `deg g` distinct projective roots iff its two partial
/// derivatives have no common projective root.
pub fn squarefree<V>(g: &Form<V>) -> Result<bool, Error> {
    if g.is_zero() {
        return Err(Error::ZeroForm);
    }
    if g.degree() <= 1 {
        return Ok(true);
    }
    Ok(!resultant(&g.derivative_first(), &g.derivative_second()).is_zero())
}

/// Squarefree test through the gcd of the partial derivatives.
pub fn squarefree_via_gcd<V>(g: &Form<V>) -> Result<bool, Error> {
    if g.is_zero() {
        return Err(Error::ZeroForm);
    }
    if g.degree() <= 1 {
        return Ok(true);
    }
    Ok(gcd(&g.derivative_first(), &g.derivative_second())?.degree() == 0)
}

/// Squarefree test by dehomogenizing: the root at `(1:0)` must be simple and the
/// affine part must have nonzero discriminant.
pub fn squarefree_via_discriminant<V>(g: &Form<V>) -> Result<bool, Error> {
    let at_infinity = g.second_variable_multiplicity().ok_or(Error::ZeroForm)?;
    if at_infinity >= 2 {
        return Ok(false);
    }
    let p = dehomogenize(g);
    if p.len() <= 2 {
        return Ok(true);
    }
    let dp = poly_derivative(&p);
    let a: Vec<Scalar> = p.iter().rev().cloned().collect();
    let b: Vec<Scalar> = dp.iter().rev().cloned().collect();
    Ok(!sylvester(&a, &b).is_zero())
}

/// Greatest common divisor of two binary forms, normalized so its first nonzero
/// coefficient is one. The root `(1:0)` is tracked separately since dehomogenizing
/// the second variable to one would drop it.
pub fn gcd<V>(f: &Form<V>, g: &Form<V>) -> Result<Form<V>, Error> {
    match (f.second_variable_multiplicity(), g.second_variable_multiplicity()) {
        (None, None) => Err(Error::ZeroForm),
        (None, Some(_)) => Ok(g.monic()),
        (Some(_), None) => Ok(f.monic()),
        (Some(mf), Some(mg)) => {
            let p = poly_gcd(dehomogenize(f), dehomogenize(g));
            let m = mf.min(mg);
            let mut coeffs = vec![Scalar::zero(); m];
            coeffs.extend(p.into_iter().rev());
            Ok(Form::from_vec(coeffs).monic())
        }
    }
}

/// Gcd of a nonempty list of forms; zero forms are ignored.
pub fn gcd_all<V>(forms: &[Form<V>]) -> Result<Form<V>, Error> {
    let mut it = forms.iter().filter(|f| !f.is_zero());
    let first = it.next().ok_or(Error::ZeroForm)?.monic();
    it.try_fold(first, |acc, f| {
        if acc.degree() == 0 {
            Ok(acc)
        } else {
            gcd(&acc, f)
        }
    })
}

/// Deterministically decides whether the span of `basis` (dual forms of one degree
/// `t`) contains a squarefree element, returning one if so.
///
/// A nonsquarefree common factor rules every element out. Otherwise the
/// discriminant restricted to the affine chart `c_0 = 1` is a polynomial of degree at
/// most `2t - 2` in each remaining coefficient, so it is nonzero somewhere on the grid
/// `{0, …, 2t-2}^{m-1}` unless it vanishes identically. The grid is scanned in shells
/// of increasing max-norm.
pub fn find_squarefree_element(basis: &[DualForm]) -> Result<Option<DualForm>, Error> {
    if basis.is_empty() {
        return Ok(None);
    }
    let t = basis[0].degree();
    if t <= 1 {
        return Ok(basis.iter().find(|g| !g.is_zero()).cloned());
    }
    if !squarefree(&gcd_all(basis)?)? {
        return Ok(None);
    }
    let m = basis.len();
    let bound = 2 * t - 2;
    let try_coeffs = |lambda: &[usize]| -> Result<Option<DualForm>, Error> {
        let mut coeffs = vec![Scalar::one()];
        coeffs.extend(lambda.iter().map(|&l| Scalar::from_integer(l.into())));
        let g = DualForm::combination(basis, &coeffs);
        Ok(if !g.is_zero() && squarefree(&g)? { Some(g) } else { None })
    };
    if m > 1 {
        if let Some(g) = try_coeffs(&vec![1; m - 1])? {
            return Ok(Some(g));
        }
    }
    for shell in 0..=bound {
        let mut lambda = vec![0usize; m - 1];
        loop {
            if lambda.iter().copied().max().unwrap_or(0) == shell {
                if let Some(g) = try_coeffs(&lambda)? {
                    return Ok(Some(g));
                }
            }
            // odometer over {0..shell}^{m-1}
            let mut i = 0;
            while i < lambda.len() {
                if lambda[i] < shell {
                    lambda[i] += 1;
                    break;
                }
                lambda[i] = 0;
                i += 1;
            }
            if i == lambda.len() {
                break;
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::int;

    #[test]
    fn squarefree_examples() {
        // XY(X - Y)
        let g = DualForm::from_i64(&[0, 1, 0]).mul(&DualForm::from_i64(&[1, -1]));
        assert!(squarefree(&g).unwrap());
        assert!(!squarefree(&DualForm::from_i64(&[0, 0, 1])).unwrap());
        // X^4 - Y^4
        assert!(squarefree(&DualForm::from_i64(&[1, 0, 0, 0, -1])).unwrap());
        assert!(matches!(squarefree(&DualForm::zero(3)), Err(Error::ZeroForm)));
    }

    #[test]
    fn squarefree_routes_agree_on_roots_at_infinity() {
        let cases = [
            (DualForm::from_i64(&[0, 0, 1, 1]), false), // Y^2 (X + Y)
            (DualForm::from_i64(&[1, 1, 0, 0]), false), // X^2 (X + Y)
            (DualForm::from_i64(&[0, 1, 1]), true),     // Y (X + Y)
            (DualForm::from_i64(&[0, 0, 0, 5]), false),
            (DualForm::from_i64(&[3]), true),
        ];
        for (g, expected) in cases {
            assert_eq!(squarefree(&g).unwrap(), expected, "{g}");
            assert_eq!(squarefree_via_gcd(&g).unwrap(), expected, "{g}");
            assert_eq!(squarefree_via_discriminant(&g).unwrap(), expected, "{g}");
        }
    }

    #[test]
    fn gcd_examples() {
        let xy = DualForm::from_i64(&[0, 1, 0]);
        let x2 = DualForm::from_i64(&[1, 0, 0]);
        assert_eq!(gcd(&xy, &x2).unwrap(), DualForm::from_i64(&[1, 0]));
        let g = DualForm::from_i64(&[2, -4, 6]);
        assert!(gcd(&g, &g).unwrap().proportional(&g));
        let a = DualForm::from_i64(&[1, 0, -1]);
        let b = DualForm::from_i64(&[1, 2, 1]);
        assert_eq!(gcd(&a, &b).unwrap(), DualForm::from_i64(&[1, 1]));
        // common root at (1:0)
        let c = DualForm::from_i64(&[0, 1, 3]);
        let e = DualForm::from_i64(&[0, 0, 2]);
        assert_eq!(gcd(&c, &e).unwrap(), DualForm::from_i64(&[0, 1]));
        assert!(gcd(&DualForm::zero(2), &DualForm::zero(1)).is_err());
        assert_eq!(gcd(&DualForm::zero(2), &a).unwrap(), a);
    }

    #[test]
    fn resultant_detects_common_root() {
        let f = DualForm::from_roots(&[(int(1), int(2)), (int(3), int(-1))]);
        let g = DualForm::from_roots(&[(int(3), int(-1)), (int(0), int(1))]);
        assert!(resultant(&f, &g).is_zero());
        let h = DualForm::from_roots(&[(int(5), int(1))]);
        assert!(!resultant(&f, &h).is_zero());
    }

    #[test]
    fn squarefree_element_search() {
        // pencil spanned by Y^2 * X and X^2 * Y: every element divisible by XY,
        // generic element X Y (X + c Y) squarefree
        let basis = vec![DualForm::from_i64(&[0, 1, 0, 0]), DualForm::from_i64(&[0, 0, 1, 0])];
        let g = find_squarefree_element(&basis).unwrap().unwrap();
        assert!(squarefree(&g).unwrap());
        // all elements divisible by Y^2
        let basis = vec![DualForm::from_i64(&[0, 0, 1, 0]), DualForm::from_i64(&[0, 0, 0, 1])];
        assert!(find_squarefree_element(&basis).unwrap().is_none());
    }
}
