use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use super::{eval_monomials_int, monomials, PointSet};
use crate::exactlin::scalar::{dot, normalize_projective, primitive_integer, to_scalars};
use crate::exactlin::{integer_rank, LinearSubspace, Matrix, Scalar};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// `d + 2` collinear points.
    Line,
    /// `2d + 2` points on a reduced conic; on a line pair, `d + 1` on each line and
    /// the node excluded.
    Conic,
    /// `3d` points on a plane cubic, cut out on it by a degree-`d` curve.
    CubicCompleteIntersection,
    /// `3d + 1` points on a plane cubic.
    Cubic,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::Line => "line",
            WitnessKind::Conic => "conic",
            WitnessKind::CubicCompleteIntersection => "cubic-CI",
            WitnessKind::Cubic => "cubic",
        }
    }
}

/// A subset `F ⊆ S` in one of the configurations forcing `h¹(I_F(d)) > 0`.
#[derive(Clone, Debug)]
pub struct Witness {
    pub kind: WitnessKind,
    /// Indices into the input point set.
    pub points: Vec<usize>,
    /// Linear span of the supporting locus: the line itself, or the plane of the
    /// conic or cubic.
    pub support: LinearSubspace,
    /// Equation of the conic or cubic in coordinates of the canonical basis of
    /// `support`, monomials in the crate's order; empty for lines.
    pub equation: Vec<Scalar>,
    pub reducible: bool,
    /// `h¹(I_F(d))`, recomputed on the witness subset.
    pub h1: usize,
}

/// `h⁰(I_S(t))` and `h¹(I_S(t))` for a finite set of points, with an optional
/// configuration witness.
#[derive(Clone, Debug)]
pub struct H1Report {
    pub n: usize,
    pub t: usize,
    pub size: usize,
    pub h0: usize,
    pub h1: usize,
    pub witness: Option<Witness>,
    /// False when the configuration search was not run.
    pub searched: bool,
}

fn eval_rank(points: &[Vec<BigInt>], monos: &[Vec<usize>]) -> usize {
    let rows: Vec<Vec<BigInt>> = points.iter().map(|p| eval_monomials_int(p, monos)).collect();
    integer_rank(rows, monos.len())
}

fn h_values_int(n: usize, points: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let monos = monomials(n, t);
    let rank = eval_rank(points, &monos);
    (monos.len() - rank, points.len() - rank)
}

/// Hilbert function data of `S` in degree `t ≥ 1` from the rank of the evaluation
/// matrix of all degree-`t` monomials.
pub fn h_values(s: &PointSet, t: usize) -> Result<H1Report, Error> {
    if t == 0 {
        return Err(Error::Precondition("twist t must be at least 1".into()));
    }
    let (h0, h1) = h_values_int(s.n(), &s.integer_points(), t);
    Ok(H1Report { n: s.n(), t, size: s.len(), h0, h1, witness: None, searched: false })
}

fn rank_of(points: &[&Vec<BigInt>]) -> usize {
    let cols = points[0].len();
    integer_rank(points.iter().map(|p| (*p).clone()).collect(), cols)
}

/// Points of a plane: indices into `S` and primitive integer coordinates with
/// respect to the plane's canonical basis.
struct Plane {
    span: LinearSubspace,
    members: Vec<usize>,
    coords: Vec<Vec<BigInt>>,
}

struct Search {
    n: usize,
    d: usize,
    pts: Vec<Vec<BigInt>>,
}

impl Search {
    fn span(&self, idx: &[usize]) -> LinearSubspace {
        let rows: Vec<Vec<Scalar>> = idx.iter().map(|&i| to_scalars(&self.pts[i])).collect();
        LinearSubspace::span(self.n, &rows).expect("consistent lengths")
    }

    fn verified(&self, kind: WitnessKind, points: Vec<usize>, support: LinearSubspace, equation: Vec<Scalar>, reducible: bool) -> Option<Witness> {
        let sub: Vec<Vec<BigInt>> = points.iter().map(|&i| self.pts[i].clone()).collect();
        let (_, h1) = h_values_int(self.n, &sub, self.d);
        (h1 > 0).then_some(Witness { kind, points, support, equation, reducible, h1 })
    }

    /// Lines carrying at least `min` points, as sorted member lists.
    fn heavy_lines(&self, min: usize) -> Vec<Vec<usize>> {
        let m = self.pts.len();
        let mut lines: Vec<Vec<usize>> = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                if lines.iter().any(|l| l.contains(&i) && l.contains(&j)) {
                    continue;
                }
                let members: Vec<usize> = (0..m)
                    .filter(|&k| k == i || k == j || rank_of(&[&self.pts[i], &self.pts[j], &self.pts[k]]) <= 2)
                    .collect();
                if members.len() >= min {
                    lines.push(members);
                }
            }
        }
        lines
    }

    /// Planes carrying at least `min` points.
    fn heavy_planes(&self, min: usize) -> Vec<Plane> {
        let m = self.pts.len();
        if m < min {
            return Vec::new();
        }
        let mut member_sets: Vec<Vec<usize>> = Vec::new();
        if self.n == 2 {
            member_sets.push((0..m).collect());
        } else {
            for (i, j, k) in (0..m).tuple_combinations() {
                if member_sets.iter().any(|s| s.contains(&i) && s.contains(&j) && s.contains(&k)) {
                    continue;
                }
                if rank_of(&[&self.pts[i], &self.pts[j], &self.pts[k]]) < 3 {
                    continue;
                }
                let members: Vec<usize> = (0..m)
                    .filter(|&l| {
                        l == i || l == j || l == k || rank_of(&[&self.pts[i], &self.pts[j], &self.pts[k], &self.pts[l]]) <= 3
                    })
                    .collect();
                if members.len() >= min {
                    member_sets.push(members);
                }
            }
        }
        member_sets
            .into_iter()
            .filter_map(|members| {
                let span = self.span(&members);
                if span.rank() != 3 {
                    return None;
                }
                let coords = members
                    .iter()
                    .map(|&i| span.coordinates(&to_scalars(&self.pts[i])).ok().flatten().map(|c| primitive_integer(&c)))
                    .collect::<Option<Vec<_>>>()?;
                Some(Plane { span, members, coords })
            })
            .collect()
    }

    fn line_witness(&self, lines: &[Vec<usize>]) -> Option<Witness> {
        lines.iter().filter(|l| l.len() >= self.d + 2).find_map(|l| {
            let f = l[..self.d + 2].to_vec();
            let support = self.span(&f[..2]);
            self.verified(WitnessKind::Line, f, support, Vec::new(), false)
        })
    }

    fn line_pair_witness(&self, lines: &[Vec<usize>]) -> Option<Witness> {
        let d = self.d;
        for (a, b) in lines.iter().tuple_combinations() {
            let la = self.span(&a[..2]);
            let lb = self.span(&b[..2]);
            let node = la.intersect(&lb).ok()?;
            if !node.is_point() {
                continue;
            }
            let off_node = |l: &Vec<usize>| -> Vec<usize> {
                l.iter().copied().filter(|&i| !node.contains(&to_scalars(&self.pts[i])).unwrap_or(false)).collect()
            };
            let (fa, fb) = (off_node(a), off_node(b));
            if fa.len() < d + 1 || fb.len() < d + 1 {
                continue;
            }
            let mut f: Vec<usize> = fa[..d + 1].iter().chain(&fb[..d + 1]).copied().collect();
            f.sort_unstable();
            let support = la.join(&lb).ok()?;
            let equation = self.plane_equation(&support, &f, 2);
            if let Some(w) = self.verified(WitnessKind::Conic, f, support, equation, true) {
                return Some(w);
            }
        }
        None
    }

    /// First kernel vector of the degree-`deg` evaluation matrix of the given points in
    /// plane coordinates.
    fn plane_equation(&self, plane: &LinearSubspace, idx: &[usize], deg: usize) -> Vec<Scalar> {
        let monos = monomials(2, deg);
        let rows: Vec<Vec<Scalar>> = idx
            .iter()
            .map(|&i| {
                let c = plane.coordinates(&to_scalars(&self.pts[i])).ok().flatten().expect("point in plane");
                to_scalars(&eval_monomials_int(&primitive_integer(&c), &monos))
            })
            .collect();
        Matrix::from_rows(monos.len(), rows).kernel_vectors().into_iter().next().unwrap_or_default()
    }

    fn smooth_conic_witness(&self, plane: &Plane) -> Option<Witness> {
        let need = 2 * self.d + 2;
        let size = plane.members.len();
        if size < need {
            return None;
        }
        let monos = monomials(2, 2);
        let values: Vec<Vec<BigInt>> = plane.coords.iter().map(|c| eval_monomials_int(c, &monos)).collect();
        let head = size - need + 5;
        let mut tried: Vec<Vec<Scalar>> = Vec::new();
        for five in (0..head).combinations(5) {
            let rows: Vec<Vec<Scalar>> = five.iter().map(|&i| to_scalars(&values[i])).collect();
            let kernel = Matrix::from_rows(6, rows).kernel_vectors();
            if kernel.len() != 1 {
                continue;
            }
            let q = normalize_projective(&kernel[0]);
            if tried.contains(&q) {
                continue;
            }
            tried.push(q.clone());
            if !conic_is_smooth(&q) {
                continue;
            }
            let on: Vec<usize> = (0..size)
                .filter(|&i| dot(&q, &to_scalars(&values[i])).is_zero())
                .collect();
            if on.len() >= need {
                let f: Vec<usize> = on[..need].iter().map(|&i| plane.members[i]).collect();
                if let Some(w) = self.verified(WitnessKind::Conic, f, plane.span.clone(), q, false) {
                    return Some(w);
                }
            }
        }
        None
    }

    /// Subsets of the plane of size `size` lying on a cubic, passed to `accept`.
    fn cubic_subsets(&self, plane: &Plane, size: usize, mut accept: impl FnMut(Vec<usize>, Vec<Scalar>) -> Option<Witness>) -> Option<Witness> {
        let total = plane.members.len();
        if total < size {
            return None;
        }
        let monos = monomials(2, 3);
        let values: Vec<Vec<BigInt>> = plane.coords.iter().map(|c| eval_monomials_int(c, &monos)).collect();
        for excluded in (0..total).combinations(total - size) {
            let keep: Vec<usize> = (0..total).filter(|i| !excluded.contains(i)).collect();
            let rows: Vec<Vec<BigInt>> = keep.iter().map(|&i| values[i].clone()).collect();
            if integer_rank(rows.clone(), 10) == 10 {
                continue;
            }
            let kernel = Matrix::from_rows(10, rows.iter().map(|r| to_scalars(r)).collect()).kernel_vectors();
            let f: Vec<usize> = keep.iter().map(|&i| plane.members[i]).collect();
            if let Some(w) = accept(f, kernel.into_iter().next().unwrap_or_default()) {
                return Some(w);
            }
        }
        None
    }
}

/// Determinant test on the symmetric matrix of a conic with coefficients in the order
/// `x², xy, xz, y², yz, z²`.
fn conic_is_smooth(q: &[Scalar]) -> bool {
    let two = Scalar::from_integer(2.into());
    let m = Matrix::from_rows(
        3,
        vec![
            vec![&q[0] * &two, q[1].clone(), q[2].clone()],
            vec![q[1].clone(), &q[3] * &two, q[4].clone()],
            vec![q[2].clone(), q[4].clone(), &q[5] * &two],
        ],
    );
    !m.determinant().is_zero()
}

/// Computes `h⁰, h¹` of `I_S(d)` and searches `S` for a subset in one of the four
/// configurations (line, reduced conic, cubic complete intersection, plane cubic)
/// that force `h¹ > 0`. Every returned witness is re-verified by computing `h¹` on
/// the subset itself. Requires `d ≥ 6` and `|S| ≤ 4d - 5`, where a positive `h¹`
/// always comes from such a subset.
pub fn detect_configuration(s: &PointSet, d: usize) -> Result<H1Report, Error> {
    if d < 6 {
        return Err(Error::Precondition(format!("configuration search needs d >= 6, got {d}")));
    }
    if s.len() > 4 * d - 5 {
        return Err(Error::Precondition(format!("configuration search needs |S| <= 4d - 5 = {}, got {}", 4 * d - 5, s.len())));
    }
    let mut report = h_values(s, d)?;
    report.searched = true;
    let search = Search { n: s.n(), d, pts: s.integer_points() };
    let lines = search.heavy_lines(d + 1);
    report.witness = search.line_witness(&lines).or_else(|| search.line_pair_witness(&lines));
    if report.witness.is_none() && s.len() >= 2 * d + 2 {
        let planes = search.heavy_planes(2 * d + 2);
        report.witness = planes
            .iter()
            .find_map(|p| search.smooth_conic_witness(p))
            .or_else(|| {
                planes.iter().find_map(|p| {
                    search.cubic_subsets(p, 3 * d + 1, |f, eq| {
                        search.verified(WitnessKind::Cubic, f, p.span.clone(), eq, false)
                    })
                })
            })
            .or_else(|| {
                planes.iter().find_map(|p| {
                    search.cubic_subsets(p, 3 * d, |f, eq| {
                        search.verified(WitnessKind::CubicCompleteIntersection, f, p.span.clone(), eq, false)
                    })
                })
            });
    }
    Ok(report)
}
