use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use super::{eval_monomials_int, monomials, PointSet, VeroneseMap};
use crate::binform::{apolar_slice, apolar_span, BinaryForm, DualForm};
use crate::exactlin::scalar::to_scalars;
use crate::exactlin::{integer_rank, LinearSubspace, Matrix, Scalar};
use crate::rankengine::{draw_decomposition, prescribed_profile_form_with};
use crate::rng::{random_nonzero_int, random_vec, seeded, DEFAULT_HEIGHT};
use crate::Error;

const MAX_RETRIES: usize = 50;

/// A point `q ∈ P^r` spanned irredundantly by `q′ ∈ ⟨ν_d(L)⟩` of binary profile
/// `(b, d + 2 - b)` and the images of `|U| = k - d - 2 + b` general points off `L`.
#[derive(Clone, Debug)]
pub struct A43Instance {
    pub n: usize,
    pub d: usize,
    pub b: usize,
    pub k: usize,
    pub map: VeroneseMap,
    /// `q′` as a binary form on the line `L = {x_2 = … = x_n = 0}`.
    pub qprime: BinaryForm,
    /// `q′` included in `P^r`.
    pub qprime_point: Vec<Scalar>,
    /// The rank decomposition `E` of `q′` used for the genericity checks on `U`.
    pub e_form: DualForm,
    pub u: PointSet,
    /// Coefficients of `q′` followed by those of `ν_d(u_i)`.
    pub mixing: Vec<Scalar>,
    pub q: Vec<Scalar>,
}

impl A43Instance {
    pub fn u_size(&self) -> usize {
        self.u.len()
    }

    pub fn u_images(&self) -> Vec<Vec<Scalar>> {
        self.u.points().iter().map(|p| self.map.embed(p).expect("valid point")).collect()
    }

    /// `⟨ν_d(U) ∪ {q′}⟩`.
    pub fn expected_span(&self) -> LinearSubspace {
        let mut rows = self.u_images();
        rows.push(self.qprime_point.clone());
        LinearSubspace::span(self.map.ambient_dim(), &rows).expect("consistent lengths")
    }
}

fn check_params(n: usize, d: usize, b: usize, k: usize) -> Result<usize, Error> {
    if n < 2 || d < 8 || 2 * b < 4 || 2 * b > d || k + b < d + 2 || k > 2 * d - 2 {
        return Err(Error::Precondition(format!(
            "need n >= 2, d >= 8, 4 <= 2b <= d, d + 2 - b <= k <= 2d - 2; got n = {n}, d = {d}, b = {b}, k = {k}"
        )));
    }
    let u = k + b - d - 2;
    if u == 0 {
        return Err(Error::Precondition(format!(
            "k = d + 2 - b = {k} leaves U empty; the construction requires |U| >= 1, i.e. k >= d + 3 - b"
        )));
    }
    Ok(u)
}

fn int_rank(rows: &[Vec<BigInt>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    integer_rank(rows.to_vec(), cols)
}

/// Checked open conditions standing in for "general" `U`: off the line, no three
/// collinear, no six on a plane conic, `⟨ν_d(U)⟩ ∩ ⟨ν_d(L)⟩ = ∅`, and `U` imposes
/// independent conditions on forms vanishing on `E` in every degree `1..=d`.
fn u_is_general(map: &VeroneseMap, u: &[Vec<BigInt>], e_form: &DualForm) -> Result<bool, Error> {
    let n = map.n();
    let d = map.d();
    if u.iter().any(|p| p[2..].iter().all(Zero::is_zero)) {
        return Ok(false);
    }
    if u.iter().tuple_combinations().any(|(a, b, c)| int_rank(&[a.clone(), b.clone(), c.clone()]) < 3) {
        return Ok(false);
    }
    let quadrics = monomials(n, 2);
    for six in u.iter().combinations(6) {
        let rows: Vec<Vec<BigInt>> = six.iter().map(|p| (*p).clone()).collect();
        if int_rank(&rows) <= 3 {
            let vals: Vec<Vec<BigInt>> = six.iter().map(|p| eval_monomials_int(p, &quadrics)).collect();
            if int_rank(&vals) < 6 {
                return Ok(false);
            }
        }
    }
    let e_size = e_form.degree();
    for t in 1..=d {
        let mt = VeroneseMap::new(n, t)?;
        let mut rows: Vec<Vec<Scalar>> =
            u.iter().map(|p| to_scalars(&eval_monomials_int(p, mt.monomials()))).collect();
        for v in apolar_span(e_form, t)?.basis() {
            rows.push(mt.line_inclusion(v)?);
        }
        let total = mt.monomials().len();
        let h0_a = total - Matrix::from_rows(total, rows).rank();
        let h0_e = total - (t + 1).min(e_size);
        if h0_a != h0_e.saturating_sub(u.len()) {
            return Ok(false);
        }
    }
    let mut rows: Vec<Vec<Scalar>> = u.iter().map(|p| to_scalars(&eval_monomials_int(p, map.monomials()))).collect();
    rows.extend(map.line_subspace().basis().iter().cloned());
    Ok(Matrix::from_rows(map.monomials().len(), rows).rank() == u.len() + d + 1)
}

/// Whether `q` lies in `⟨points⟩` and in no span of all but one of them.
fn irredundantly_spanned(ambient: usize, points: &[Vec<Scalar>], q: &[Scalar]) -> Result<bool, Error> {
    if !LinearSubspace::span(ambient, points)?.contains(q)? {
        return Ok(false);
    }
    for skip in 0..points.len() {
        let rest: Vec<Vec<Scalar>> =
            points.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, p)| p.clone()).collect();
        if LinearSubspace::span(ambient, &rest)?.contains(q)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn build<R: Rng>(rng: &mut R, n: usize, d: usize, b: usize, k: usize, mixing: Option<&[Scalar]>) -> Result<A43Instance, Error> {
    let u_size = check_params(n, d, b, k)?;
    if let Some(m) = mixing {
        if m.len() != u_size + 1 {
            return Err(Error::Precondition(format!("expected {} mixing coefficients, got {}", u_size + 1, m.len())));
        }
    }
    let h = DEFAULT_HEIGHT;
    let map = VeroneseMap::new(n, d)?;
    let qprime = prescribed_profile_form_with(rng, d, b, h)?;
    let rank = d + 2 - b;
    let slice = apolar_slice(&qprime, rank)?;
    let mut e_form = None;
    for _ in 0..MAX_RETRIES {
        if let Some(s) = draw_decomposition(&qprime, &slice, rng, h)? {
            if s.irredundant {
                e_form = Some(s.g);
                break;
            }
        }
    }
    let e_form = e_form.ok_or(Error::RetriesExhausted(MAX_RETRIES))?;
    let mut u_int = None;
    for _ in 0..MAX_RETRIES {
        let cand: Vec<Vec<BigInt>> = (0..u_size)
            .map(|_| random_vec(rng, n + 1, h).into_iter().map(|x| x.to_integer()).collect())
            .collect();
        if u_is_general(&map, &cand, &e_form)? {
            u_int = Some(cand);
            break;
        }
    }
    let u_int = u_int.ok_or(Error::RetriesExhausted(MAX_RETRIES))?;
    let u = PointSet::new(n, u_int.iter().map(|p| to_scalars(p)).collect())?;
    let mixing: Vec<Scalar> = match mixing {
        Some(m) => m.to_vec(),
        None => (0..=u_size).map(|_| random_nonzero_int(rng, h)).collect(),
    };
    let qprime_point = map.include_form(&qprime)?;
    let mut generators = vec![qprime_point.clone()];
    generators.extend(u.points().iter().map(|p| map.embed(p)).collect::<Result<Vec<_>, _>>()?);
    let mut q = vec![Scalar::zero(); map.monomials().len()];
    for (c, g) in mixing.iter().zip(&generators) {
        for (x, y) in q.iter_mut().zip(g) {
            *x += c * y;
        }
    }
    if q.iter().all(Zero::is_zero) || !irredundantly_spanned(map.ambient_dim(), &generators, &q)? {
        return Err(Error::Degenerate("q is not irredundantly spanned by q′ and ν_d(U)".into()));
    }
    Ok(A43Instance { n, d, b, k, map, qprime, qprime_point, e_form, u, mixing, q })
}

/// Builds an instance with random nonzero mixing coefficients.
pub fn a43_construct(n: usize, d: usize, b: usize, k: usize, seed: u64) -> Result<A43Instance, Error> {
    build(&mut seeded(seed), n, d, b, k, None)
}

/// Builds an instance with the given mixing coefficients (for `q′` first, then each
/// point of `U`); fails when they do not span `q` irredundantly.
pub fn a43_construct_with_mixing(n: usize, d: usize, b: usize, k: usize, seed: u64, mixing: &[Scalar]) -> Result<A43Instance, Error> {
    build(&mut seeded(seed), n, d, b, k, Some(mixing))
}

/// Outcome of [`a43_verify`].
#[derive(Clone, Debug)]
pub struct A43Report {
    pub u_size: usize,
    pub samples_requested: usize,
    pub samples_used: usize,
    /// Every `⟨ν_d(E) ∪ ν_d(U)⟩` contains `q`.
    pub containment: bool,
    /// The intersection statement applies (`k ≤ 2d - 3`).
    pub part2_asserted: bool,
    pub intersection_dim: isize,
    pub expected_dim: isize,
    /// Folded intersection equals `⟨ν_d(U) ∪ {q′}⟩`.
    pub intersection_matches: bool,
    /// Intersection meets `⟨ν_d(L)⟩` exactly in `q′`.
    pub qprime_recovered: bool,
    /// Intersection is spanned by `q′` and `ν_d(U)`, with `ν_d(U)` inside it.
    pub u_span_recovered: bool,
    /// Always false: only `r_X(q) ≤ k` follows from the construction.
    pub rank_certified: bool,
    pub note: String,
    pub pass: bool,
}

/// Samples rank decompositions `E` of `q′` on the line, checks `q ∈ ⟨ν_d(E ∪ U)⟩`
/// for each, and compares the folded intersection of these spans with
/// `⟨ν_d(U) ∪ {q′}⟩`.
pub fn a43_verify(inst: &A43Instance, n_samples: usize, seed: u64) -> Result<A43Report, Error> {
    let map = &inst.map;
    let ambient = map.ambient_dim();
    let mut rng = seeded(seed);
    let rank = inst.d + 2 - inst.b;
    let slice = apolar_slice(&inst.qprime, rank)?;
    let u_span = LinearSubspace::span(ambient, &inst.u_images())?;
    let mut seen: Vec<DualForm> = Vec::new();
    let mut containment = true;
    let mut folded: Option<LinearSubspace> = None;
    let mut draws = 0;
    while seen.len() < n_samples && draws < 20 * n_samples.max(1) {
        draws += 1;
        let Some(s) = draw_decomposition(&inst.qprime, &slice, &mut rng, DEFAULT_HEIGHT)? else {
            continue;
        };
        if !s.irredundant || seen.contains(&s.g) {
            continue;
        }
        let span = map.include_line_subspace(&s.span)?.join(&u_span)?;
        containment &= span.contains(&inst.q)?;
        folded = Some(match folded {
            None => span,
            Some(w) => w.intersect(&span)?,
        });
        seen.push(s.g);
    }
    let w = folded.unwrap_or_else(|| LinearSubspace::whole(ambient));
    let expected = inst.expected_span();
    let intersection_matches = w == expected && w.proj_dim() == inst.u_size() as isize;
    let on_line = w.intersect(&map.line_subspace())?;
    let qprime_recovered = on_line == LinearSubspace::point(&inst.qprime_point)?;
    let u_span_recovered = w.contains_subspace(&u_span)? && w == on_line.join(&u_span)?;
    let part2_asserted = inst.k <= 2 * inst.d - 3;
    let containment = containment && seen.len() == n_samples;
    let pass = containment && (!part2_asserted || (intersection_matches && qprime_recovered && u_span_recovered));
    let note = if part2_asserted {
        "rank r_X(q) = k not certified; only r_X(q) <= k follows from the construction".to_string()
    } else {
        "k = 2d - 2: containment checks only; intersection statement outside its hypothesis; rank not certified".to_string()
    };
    Ok(A43Report {
        u_size: inst.u_size(),
        samples_requested: n_samples,
        samples_used: seen.len(),
        containment,
        part2_asserted,
        intersection_dim: w.proj_dim(),
        expected_dim: inst.u_size() as isize,
        intersection_matches,
        qprime_recovered,
        u_span_recovered,
        rank_certified: false,
        note,
        pass,
    })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rankengine::rank_profile;

    #[test]
    fn parameter_ranges() {
        assert!(a43_construct(2, 8, 2, 8, 0).is_err());
        assert!(a43_construct(2, 7, 2, 9, 0).is_err());
        assert!(a43_construct(2, 8, 5, 10, 0).is_err());
        assert!(a43_construct(2, 8, 2, 15, 0).is_err());
    }

    #[test]
    fn small_instance_verifies() {
        let inst = a43_construct(2, 8, 2, 10, 1).unwrap();
        assert_eq!(inst.u_size(), 2);
        assert_eq!(inst.map.ambient_dim(), 44);
        let p = rank_profile(&inst.qprime).unwrap();
        assert_eq!((p.border_rank, p.rank), (2, 8));
        let r = a43_verify(&inst, 12, 2).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.intersection_dim, 2);
    }

    #[test]
    fn profile_four_instance() {
        let inst = a43_construct(2, 8, 4, 12, 3).unwrap();
        assert_eq!(inst.u_size(), 6);
        let p = rank_profile(&inst.qprime).unwrap();
        assert_eq!((p.border_rank, p.rank), (4, 6));
    }

    #[test]
    fn zero_mixing_coefficient_is_redundant() {
        let mixing: Vec<Scalar> = [3, 0, -2].iter().map(|&c| Scalar::from_integer(c.into())).collect();
        assert!(matches!(a43_construct_with_mixing(2, 8, 2, 10, 1, &mixing), Err(Error::Degenerate(_))));
    }

    #[test]
    fn top_of_range_is_containment_only() {
        let inst = a43_construct(2, 8, 2, 14, 5).unwrap();
        let r = a43_verify(&inst, 4, 1).unwrap();
        assert!(!r.part2_asserted);
        assert!(r.containment);
    }
}
