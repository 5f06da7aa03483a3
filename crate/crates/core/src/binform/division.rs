use num_traits::Zero;

use super::{catalecticant, gcd_all, squarefree, BinaryForm, DualForm};
use crate::exactlin::Scalar;
use crate::Error;

/// Forms in the root parameters `(u, v)` whose common zeros on the roots of `g` are
/// exactly the roots whose removal leaves a form still apolar to `F`.
///
/// Two charts are kept. In the `v` chart the quotient `g / (vX - uY)` is scaled by
/// `v^t`, which degenerates at the root `(1:0)`; the `u` chart scales by `u^t` and
/// degenerates at `(0:1)`. At every other root both charts express the same
/// conditions.
#[derive(Clone, Debug)]
pub struct DivisionFamily {
    pub v_chart: Vec<DualForm>,
    pub u_chart: Vec<DualForm>,
}

impl DivisionFamily {
    pub fn forms(&self) -> impl Iterator<Item = &DualForm> {
        self.v_chart.iter().chain(&self.u_chart)
    }
}

/// Coefficients of the scaled quotients as forms of degree `t - 1` in `(u, v)`.
fn scaled_quotients(g: &DualForm) -> (Vec<DualForm>, Vec<DualForm>) {
    let t = g.degree();
    let c = g.coeffs();
    let mut v_chart = Vec::with_capacity(t);
    let mut u_chart = Vec::with_capacity(t);
    for k in 0..t {
        let mut hv = vec![Scalar::zero(); t];
        for (i, gi) in c.iter().enumerate().take(k + 1) {
            hv[t - 1 - k + i] = gi.clone();
        }
        v_chart.push(hv);
        let mut hu = vec![Scalar::zero(); t];
        for (i, gi) in c.iter().enumerate().skip(k + 1) {
            hu[i - k - 1] = -gi.clone();
        }
        u_chart.push(hu);
    }
    (
        v_chart.into_iter().map(DualForm::from_vec).collect(),
        u_chart.into_iter().map(DualForm::from_vec).collect(),
    )
}

/// Division family of a squarefree `g` of degree `2 ≤ t ≤ d + 1` against `F`.
pub fn division_family(g: &DualForm, f: &BinaryForm) -> Result<DivisionFamily, Error> {
    let (t, d) = (g.degree(), f.degree());
    if t < 2 || t > d + 1 {
        return Err(Error::Precondition(format!("division family needs 2 <= t <= d + 1, got t = {t}, d = {d}")));
    }
    if !squarefree(g)? {
        return Err(Error::NotSquarefree);
    }
    let cat = catalecticant(f, t - 1);
    let (hv, hu) = scaled_quotients(g);
    let apply = |h: &[DualForm]| -> Vec<DualForm> {
        (0..cat.rows())
            .map(|m| {
                let coeffs: Vec<Scalar> = cat.row(m).to_vec();
                DualForm::combination(h, &coeffs)
            })
            .collect()
    };
    Ok(DivisionFamily { v_chart: apply(&hv), u_chart: apply(&hu) })
}

/// Exact quotient of `g` by the linear form `vX - uY`, for a root `(u:v)` of `g`.
pub fn quotient_at(g: &DualForm, u: &Scalar, v: &Scalar) -> Result<DualForm, Error> {
    if u.is_zero() && v.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !g.eval(u, v).is_zero() {
        return Err(Error::Precondition(format!("({u}:{v}) is not a root of {g}")));
    }
    let t = g.degree();
    if t == 0 {
        return Err(Error::Precondition("constant form has no roots".into()));
    }
    let c = g.coeffs();
    let mut h = vec![Scalar::zero(); t];
    if !v.is_zero() {
        // v h_k - u h_{k-1} = g_k, solved upward
        for k in 0..t {
            let prev = if k == 0 { Scalar::zero() } else { u * &h[k - 1] };
            h[k] = (&c[k] + prev) / v;
        }
    } else {
        // solved downward from -u h_{t-1} = g_t
        for k in (0..t).rev() {
            let next = if k + 1 == t { Scalar::zero() } else { v * &h[k + 1] };
            h[k] = (next - &c[k + 1]) / u;
        }
    }
    Ok(DualForm::from_vec(h))
}

/// Gcd of `g` with every member of its division family. `g` is redundant for `F`
/// exactly when this has positive degree.
pub fn irredundancy_certificate(g: &DualForm, f: &BinaryForm) -> Result<DualForm, Error> {
    let family = division_family(g, f)?;
    let mut forms = vec![g.clone()];
    forms.extend(family.forms().cloned());
    gcd_all(&forms)
}

/// Whether the roots of the squarefree apolar form `g` span `F` irredundantly: no
/// proper subset of the roots still spans it.
pub fn is_irredundant(g: &DualForm, f: &BinaryForm) -> Result<bool, Error> {
    if g.degree() <= 1 {
        if g.is_zero() {
            return Err(Error::ZeroForm);
        }
        return Ok(!f.is_zero());
    }
    Ok(irredundancy_certificate(g, f)?.degree() == 0)
}
