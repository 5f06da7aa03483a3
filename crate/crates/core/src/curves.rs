//! Rational curves `P^1 → P^r` given by binary forms, the two-decomposition point
//! `q = ⟨S⟩ ∩ ⟨A⟩`, and linear projection from a point.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;

use crate::binform::{gcd_all, BinaryForm};
use crate::exactlin::scalar::{binomial, is_zero_vec, parse_scalar};
use crate::exactlin::{LinearSubspace, Matrix, Scalar};
use crate::rng::random_int;
use crate::Error;

/// A curve `(x:y) ↦ (f_0(x,y) : … : f_r(x,y))` with linearly independent components
/// of a common degree `e`.
#[derive(Clone, PartialEq, Eq)]
pub struct ParamCurve {
    components: Vec<BinaryForm>,
}

impl ParamCurve {
    pub fn new(components: Vec<BinaryForm>) -> Result<Self, Error> {
        if components.len() < 2 {
            return Err(Error::Precondition("a curve needs at least two components".into()));
        }
        let e = components[0].degree();
        if let Some(f) = components.iter().find(|f| f.degree() != e) {
            return Err(Error::Precondition(format!("components have degrees {e} and {}", f.degree())));
        }
        let rows: Vec<Vec<Scalar>> = components.iter().map(|f| f.coeffs().to_vec()).collect();
        if Matrix::from_rows(e + 1, rows).rank() < components.len() {
            return Err(Error::Degenerate("curve components are linearly dependent".into()));
        }
        Ok(Self { components })
    }

    /// `(x^r, x^{r-1} y, …, y^r)`.
    pub fn rational_normal(r: usize) -> Self {
        Self { components: (0..=r).map(|i| BinaryForm::monomial(r, i)).collect() }
    }

    /// `t ↦ (t^{a_0} : … : t^{a_r})` for distinct exponents, homogenized to degree `max a_i`.
    pub fn monomial_curve(exponents: &[usize]) -> Result<Self, Error> {
        let e = exponents.iter().copied().max().ok_or_else(|| Error::Precondition("no exponents".into()))?;
        Self::new(exponents.iter().map(|&a| BinaryForm::monomial(e, a)).collect())
    }

    /// Monomial curve of degree `r + 1` omitting `t^r`: `{0, …, r-1, r+1}`.
    pub fn gap_curve(r: usize) -> Self {
        let mut exps: Vec<usize> = (0..r).collect();
        exps.push(r + 1);
        Self::monomial_curve(&exps).expect("distinct exponents")
    }

    /// Random components of degree `e ≥ r` with entries in `[-h, h]`.
    pub fn random<R: Rng>(rng: &mut R, r: usize, e: usize, h: i64) -> Result<Self, Error> {
        if e < r {
            return Err(Error::Precondition(format!("degree {e} is below r = {r}")));
        }
        for _ in 0..100 {
            let comps = (0..=r).map(|_| BinaryForm::random(rng, e, h)).collect();
            if let Ok(c) = Self::new(comps) {
                return Ok(c);
            }
        }
        Err(Error::RetriesExhausted(100))
    }

    /// Parses `r e` followed by `r + 1` lines of `e + 1` coefficients each
    /// (comma or whitespace separated). Lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty curve file".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|s| s.parse().map_err(|_| Error::Parse(format!("bad header `{header}`"))))
            .collect::<Result<_, _>>()?;
        let [r, e] = nums[..] else {
            return Err(Error::Parse(format!("header must be `r e`, got `{header}`")));
        };
        let mut comps = Vec::with_capacity(r + 1);
        for line in lines {
            let coeffs: Vec<Scalar> = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(parse_scalar)
                .collect::<Result<_, _>>()?;
            if coeffs.len() != e + 1 {
                return Err(Error::Parse(format!("component needs {} coefficients, found {}", e + 1, coeffs.len())));
            }
            comps.push(BinaryForm::new(coeffs)?);
        }
        if comps.len() != r + 1 {
            return Err(Error::Parse(format!("expected {} components, found {}", r + 1, comps.len())));
        }
        Self::new(comps)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.r(), self.degree());
        for f in &self.components {
            let cs: Vec<String> = f.coeffs().iter().map(ToString::to_string).collect();
            s.push_str(&cs.join(","));
            s.push('\n');
        }
        s
    }

    /// Ambient projective dimension.
    pub fn r(&self) -> usize {
        self.components.len() - 1
    }

    pub fn degree(&self) -> usize {
        self.components[0].degree()
    }

    pub fn components(&self) -> &[BinaryForm] {
        &self.components
    }

    /// Whether the components are the monomials `x^{r-i} y^i` up to a common scalar.
    pub fn is_rational_normal(&self) -> bool {
        let r = self.r();
        self.degree() == r && {
            let lead = self.components[0].coeffs()[0].clone();
            !lead.is_zero() && self.components.iter().enumerate().all(|(i, f)| *f == BinaryForm::monomial(r, i).scale(&lead))
        }
    }

    /// Whether `e = r`: the components then span every form of degree `r`, so the
    /// curve is a rational normal curve after a change of coordinates.
    pub fn is_normal_up_to_coordinates(&self) -> bool {
        self.degree() == self.r()
    }

    /// Image of `(a:b)`.
    pub fn point_at(&self, a: &Scalar, b: &Scalar) -> Result<Vec<Scalar>, Error> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroVector);
        }
        let p: Vec<Scalar> = self.components.iter().map(|f| f.eval(a, b)).collect();
        if is_zero_vec(&p) {
            return Err(Error::Degenerate(format!("({a}:{b}) is a base point of the curve")));
        }
        Ok(p)
    }

    /// Image of the parameter `(1:t)`.
    pub fn curve_point(&self, t: &Scalar) -> Result<Vec<Scalar>, Error> {
        self.point_at(&Scalar::one(), t)
    }

    /// Image of `(0:1)`: the leading coefficients in the second variable.
    pub fn point_at_infinity(&self) -> Result<Vec<Scalar>, Error> {
        self.point_at(&Scalar::zero(), &Scalar::one())
    }

    /// Whether distinct parameters in `params` have distinct images.
    pub fn injective_on(&self, params: &[Scalar]) -> Result<bool, Error> {
        let pts: Vec<Vec<Scalar>> = params.iter().map(|t| self.curve_point(t)).collect::<Result<_, _>>()?;
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                if params[i] != params[j] && Matrix::from_rows(self.r() + 1, vec![pts[i].clone(), pts[j].clone()]).rank() < 2 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for ParamCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        write!(f, "ParamCurve[{}]", cs.join("; "))
    }
}

/// Named test curves in `P^r`: the rational normal curve, the gap curve, and a random
/// curve of degree `r + 1`.
pub fn curve_zoo<R: Rng>(rng: &mut R, r: usize, h: i64) -> Result<Vec<(&'static str, ParamCurve)>, Error> {
    Ok(vec![
        ("rnc", ParamCurve::rational_normal(r)),
        ("gap", ParamCurve::gap_curve(r)),
        ("random", ParamCurve::random(rng, r, r + 1, h)?),
    ])
}

/// The point of the degree-`r` rational normal curve's span corresponding to a
/// binary form: coordinate `i` of `(1, t, …, t^r)` matches coefficient
/// `C(r, i) t^i` of `(x + t y)^r`.
pub fn rnc_point_to_form(p: &[Scalar]) -> Result<BinaryForm, Error> {
    let r = p.len().checked_sub(1).ok_or(Error::ZeroVector)?;
    BinaryForm::new(p.iter().enumerate().map(|(i, c)| c * Scalar::from_integer(binomial(r as u64, i as u64))).collect())
}

/// Result of [`construct_qsa`].
#[derive(Clone, Debug)]
pub struct QsaResult {
    pub q: Vec<Scalar>,
    pub span_s: LinearSubspace,
    pub span_a: LinearSubspace,
    pub s_irredundant: bool,
    pub a_irredundant: bool,
}

fn irredundant(points: &[Vec<Scalar>], q: &[Scalar]) -> Result<bool, Error> {
    let ambient = q.len() - 1;
    for skip in 0..points.len() {
        let rest: Vec<Vec<Scalar>> = points.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, p)| p.clone()).collect();
        if LinearSubspace::span(ambient, &rest)?.contains(q)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For `r` even and disjoint parameter lists of size `r/2 + 1`, intersects the spans
/// of their images and returns the intersection point together with irredundancy of
/// both sets. Fails with [`Error::Degenerate`] when either span is too small or the
/// intersection is not a single point.
pub fn construct_qsa(c: &ParamCurve, s_params: &[Scalar], a_params: &[Scalar]) -> Result<QsaResult, Error> {
    let r = c.r();
    if r % 2 != 0 {
        return Err(Error::Precondition(format!("r = {r} must be even")));
    }
    let m = r / 2 + 1;
    if s_params.len() != m || a_params.len() != m {
        return Err(Error::Precondition(format!("both parameter lists need {m} entries")));
    }
    let mut all: Vec<&Scalar> = s_params.iter().chain(a_params).collect();
    all.sort();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition("parameter lists must be disjoint and without repeats".into()));
    }
    let s_pts: Vec<Vec<Scalar>> = s_params.iter().map(|t| c.curve_point(t)).collect::<Result<_, _>>()?;
    let a_pts: Vec<Vec<Scalar>> = a_params.iter().map(|t| c.curve_point(t)).collect::<Result<_, _>>()?;
    let span_s = LinearSubspace::span(r, &s_pts)?;
    let span_a = LinearSubspace::span(r, &a_pts)?;
    if span_s.rank() != m || span_a.rank() != m {
        return Err(Error::Degenerate("a parameter set spans less than its expected dimension".into()));
    }
    let meet = span_s.intersect(&span_a)?;
    if !meet.is_point() {
        return Err(Error::Degenerate(format!("spans meet in projective dimension {}", meet.proj_dim())));
    }
    let q = meet.basis()[0].clone();
    Ok(QsaResult {
        s_irredundant: irredundant(&s_pts, &q)?,
        a_irredundant: irredundant(&a_pts, &q)?,
        q,
        span_s,
        span_a,
    })
}

/// Draws `2(r/2 + 1)` distinct integer parameters in `[-h, h]`.
pub fn random_parameters<R: Rng>(rng: &mut R, r: usize, h: i64) -> (Vec<Scalar>, Vec<Scalar>) {
    let m = r / 2 + 1;
    let mut ps: Vec<Scalar> = Vec::with_capacity(2 * m);
    while ps.len() < 2 * m {
        let t = random_int(rng, h);
        if !ps.contains(&t) {
            ps.push(t);
        }
    }
    let a = ps.split_off(m);
    (ps, a)
}

/// Linear projection `P^r ⇢ P^{r-1}` with center `o`: `p ↦ p - (p_j / o_j) o` with
/// coordinate `j` dropped, `j` the first nonzero coordinate of `o`.
#[derive(Clone, Debug)]
pub struct Projection {
    center: Vec<Scalar>,
    matrix: Matrix,
}

impl Projection {
    pub fn new(o: &[Scalar]) -> Result<Self, Error> {
        let j = o.iter().position(|c| !c.is_zero()).ok_or(Error::ZeroVector)?;
        let r = o.len() - 1;
        let mut m = Matrix::zeros(r, r + 1);
        for (row, k) in (0..=r).filter(|&k| k != j).enumerate() {
            m.set(row, k, Scalar::one());
            m.set(row, j, -(&o[k] / &o[j]));
        }
        Ok(Self { center: o.to_vec(), matrix: m })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn center(&self) -> &[Scalar] {
        &self.center
    }

    fn check_len(&self, p: &[Scalar]) -> Result<(), Error> {
        if p.len() != self.center.len() {
            return Err(Error::AmbientMismatch { expected: self.center.len(), found: p.len() });
        }
        Ok(())
    }

    pub fn point(&self, p: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        self.check_len(p)?;
        let img = self.matrix.mul_vec(p);
        if is_zero_vec(&img) {
            return Err(Error::Precondition("cannot project the center".into()));
        }
        Ok(img)
    }

    pub fn points(&self, ps: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>, Error> {
        ps.iter().map(|p| self.point(p)).collect()
    }

    /// Image of a linear space: its dimension drops by one exactly when it contains the center.
    pub fn subspace(&self, s: &LinearSubspace) -> Result<LinearSubspace, Error> {
        if s.ambient_dim() + 1 != self.center.len() {
            return Err(Error::AmbientMismatch { expected: self.center.len(), found: s.ambient_dim() + 1 });
        }
        let imgs: Vec<Vec<Scalar>> = s.basis().iter().map(|b| self.matrix.mul_vec(b)).collect();
        LinearSubspace::span(self.center.len() - 2, &imgs)
    }

    /// Image curve. The components are composed with the projection and their common
    /// factor removed, so projecting from a simple curve point lowers the degree by one.
    pub fn curve(&self, c: &ParamCurve) -> Result<ParamCurve, Error> {
        if c.r() + 1 != self.center.len() {
            return Err(Error::AmbientMismatch { expected: self.center.len(), found: c.r() + 1 });
        }
        let rows = self.matrix.row_vecs();
        let comps: Vec<BinaryForm> =
            rows.iter().map(|row| BinaryForm::combination(c.components(), row)).collect();
        if comps.iter().all(BinaryForm::is_zero) {
            return Err(Error::Degenerate("projection collapses the curve".into()));
        }
        let common = gcd_all(&comps)?;
        let reduced: Vec<BinaryForm> = comps
            .iter()
            .map(|f| {
                if f.is_zero() {
                    Some(BinaryForm::zero(c.degree() - common.degree()))
                } else {
                    f.div_exact(&common)
                }
            })
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Degenerate("common factor does not divide the components".into()))?;
        ParamCurve::new(reduced)
    }
}

/// Projection of a curve from `o`; see [`Projection::curve`].
pub fn project_curve(c: &ParamCurve, o: &[Scalar]) -> Result<ParamCurve, Error> {
    Projection::new(o)?.curve(c)
}

/// Projection of a point list from `o`, none of which may equal `o`.
pub fn project_points(ps: &[Vec<Scalar>], o: &[Scalar]) -> Result<Vec<Vec<Scalar>>, Error> {
    Projection::new(o)?.points(ps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::{int, normalize_projective};
    use crate::rankengine::rank_profile;
    use crate::rng::seeded;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn evaluation() {
        let rnc = ParamCurve::rational_normal(4);
        assert_eq!(rnc.curve_point(&int(3)).unwrap(), ints(&[1, 3, 9, 27, 81]));
        let gap = ParamCurve::gap_curve(4);
        assert_eq!(gap.degree(), 5);
        assert_eq!(gap.curve_point(&int(2)).unwrap(), ints(&[1, 2, 4, 8, 32]));
        assert_eq!(gap.point_at_infinity().unwrap(), ints(&[0, 0, 0, 0, 1]));
        assert!(rnc.is_rational_normal());
        assert!(!gap.is_rational_normal());
    }

    #[test]
    fn dependent_components_rejected() {
        let f = BinaryForm::from_i64(&[1, 2, 3]);
        assert!(ParamCurve::new(vec![f.clone(), f.scale(&int(2)), BinaryForm::monomial(2, 1)]).is_err());
    }

    #[test]
    fn base_point_is_an_error() {
        let c = ParamCurve::new(vec![BinaryForm::from_i64(&[0, 1, 0]), BinaryForm::from_i64(&[0, 0, 1])]).unwrap();
        assert!(c.point_at_infinity().is_ok());
        assert!(matches!(c.curve_point(&int(0)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn parse_round_trip() {
        let gap = ParamCurve::gap_curve(4);
        let back = ParamCurve::parse(&gap.to_text()).unwrap();
        assert_eq!(back, gap);
        assert!(ParamCurve::parse("2 2\n1,0,0\n0,1,0\n").is_err());
        assert!(ParamCurve::parse("# rnc\n2 2\n1 0 0\n0 1 0\n0 0 1\n").unwrap().is_rational_normal());
    }

    #[test]
    fn qsa_on_rnc_has_generic_rank() {
        let rnc = ParamCurve::rational_normal(4);
        let res = construct_qsa(&rnc, &ints(&[0, 1, 2]), &ints(&[-1, 3, 5])).unwrap();
        assert!(res.s_irredundant && res.a_irredundant);
        let p = rank_profile(&rnc_point_to_form(&res.q).unwrap()).unwrap();
        assert_eq!((p.border_rank, p.rank), (3, 3));
    }

    #[test]
    fn qsa_on_gap_curve() {
        let gap = ParamCurve::gap_curve(4);
        let res = construct_qsa(&gap, &ints(&[1, 2, 4]), &ints(&[-1, -3, 7])).unwrap();
        assert!(res.s_irredundant && res.a_irredundant);
        assert!(res.span_s.contains(&res.q).unwrap() && res.span_a.contains(&res.q).unwrap());
    }

    #[test]
    fn qsa_preconditions() {
        let rnc = ParamCurve::rational_normal(4);
        assert!(construct_qsa(&rnc, &ints(&[0, 1, 2]), &ints(&[2, 3, 5])).is_err());
        assert!(construct_qsa(&rnc, &ints(&[0, 1]), &ints(&[2, 3, 5])).is_err());
        assert!(construct_qsa(&ParamCurve::rational_normal(3), &ints(&[0, 1]), &ints(&[2, 3])).is_err());
    }

    #[test]
    fn rnc_projects_to_rnc() {
        let rnc = ParamCurve::rational_normal(5);
        let o = rnc.curve_point(&int(2)).unwrap();
        let img = project_curve(&rnc, &o).unwrap();
        assert_eq!((img.r(), img.degree()), (4, 4));
        assert!(img.is_normal_up_to_coordinates());
        // the image of (1:t) for t ≠ 2 is the projection of the original point
        for t in [-1, 0, 3, 7] {
            let p = Projection::new(&o).unwrap().point(&rnc.curve_point(&int(t)).unwrap()).unwrap();
            let q = img.curve_point(&int(t)).unwrap();
            assert_eq!(normalize_projective(&p), normalize_projective(&q));
        }
        // projecting from a point off the curve keeps the degree
        let off = ints(&[1, 0, 0, 0, 0, 1]);
        assert_eq!(project_curve(&rnc, &off).unwrap().degree(), 5);
    }

    #[test]
    fn triangle_projection() {
        let pts = vec![ints(&[0, 1, 0]), ints(&[0, 0, 1])];
        let img = project_points(&pts, &ints(&[1, 0, 0])).unwrap();
        assert_eq!(img, vec![ints(&[1, 0]), ints(&[0, 1])]);
        assert!(project_points(&[ints(&[2, 0, 0])], &ints(&[1, 0, 0])).is_err());
    }

    #[test]
    fn projecting_spans() {
        let o = ints(&[1, 1, 1, 1]);
        let pr = Projection::new(&o).unwrap();
        let through = LinearSubspace::span(3, &[o.clone(), ints(&[1, 0, 0, 0])]).unwrap();
        let away = LinearSubspace::span(3, &[ints(&[0, 1, 0, 0]), ints(&[1, 0, 0, 0])]).unwrap();
        assert_eq!(pr.subspace(&through).unwrap().rank(), 1);
        assert_eq!(pr.subspace(&away).unwrap().rank(), 2);
    }

    #[test]
    fn zoo_is_nondegenerate() {
        let mut rng = seeded(3);
        for r in [4, 6] {
            for (_, c) in curve_zoo(&mut rng, r, 10).unwrap() {
                assert_eq!(c.r(), r);
                assert!(c.injective_on(&ints(&[-3, -1, 0, 2, 5])).unwrap());
            }
        }
    }
}
