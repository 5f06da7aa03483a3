use rand::seq::SliceRandom;
use rand::Rng;

use super::{PointSet, WitnessKind};
use crate::exactlin::scalar::normalize_projective;
use crate::exactlin::{Matrix, Scalar};
use crate::rng::random_vec;
use crate::Error;

/// Point configurations planted by [`planted_configuration`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlantedKind {
    /// `d + 2` points on a line.
    Line,
    /// `2d + 2` points on a smooth conic.
    SmoothConic,
    /// `d + 1` points on each of two lines, the node excluded.
    LinePair,
    /// `3d` points cut out on a nodal plane cubic by `d` lines.
    CompleteIntersection,
    /// `3d + 1` points on a nodal plane cubic.
    Cubic,
    /// Random points, no planted structure.
    Generic,
}

impl PlantedKind {
    pub const ALL: [PlantedKind; 6] = [
        PlantedKind::Line,
        PlantedKind::SmoothConic,
        PlantedKind::LinePair,
        PlantedKind::CompleteIntersection,
        PlantedKind::Cubic,
        PlantedKind::Generic,
    ];

    pub fn expected_witness(self) -> Option<WitnessKind> {
        match self {
            PlantedKind::Line => Some(WitnessKind::Line),
            PlantedKind::SmoothConic | PlantedKind::LinePair => Some(WitnessKind::Conic),
            PlantedKind::CompleteIntersection => Some(WitnessKind::CubicCompleteIntersection),
            PlantedKind::Cubic => Some(WitnessKind::Cubic),
            PlantedKind::Generic => None,
        }
    }

    pub fn planted_size(self, d: usize) -> usize {
        match self {
            PlantedKind::Line => d + 2,
            PlantedKind::SmoothConic | PlantedKind::LinePair => 2 * d + 2,
            PlantedKind::CompleteIntersection => 3 * d,
            PlantedKind::Cubic => 3 * d + 1,
            PlantedKind::Generic => 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PlantedInstance {
    pub kind: PlantedKind,
    pub d: usize,
    pub points: PointSet,
    /// Indices of the planted configuration inside `points`.
    pub planted: Vec<usize>,
}

fn int(v: i64) -> Scalar {
    Scalar::from_integer(v.into())
}

fn push_distinct(out: &mut Vec<Vec<Scalar>>, keys: &mut Vec<Vec<Scalar>>, p: Vec<Scalar>) -> bool {
    let key = normalize_projective(&p);
    if key.iter().all(num_traits::Zero::is_zero) || keys.contains(&key) {
        return false;
    }
    keys.push(key);
    out.push(p);
    true
}

/// `count` distinct random integer points of `P^n` with coordinates in `[-h, h]`.
pub fn generic_points<R: Rng>(rng: &mut R, n: usize, count: usize, h: i64) -> PointSet {
    let mut pts = Vec::with_capacity(count);
    let mut keys = Vec::with_capacity(count);
    while pts.len() < count {
        push_distinct(&mut pts, &mut keys, random_vec(rng, n + 1, h));
    }
    PointSet::new(n, pts).expect("distinct nonzero points")
}

/// Distinct integers in `[-h, h]` avoiding `forbidden`.
fn distinct_ints<R: Rng>(rng: &mut R, count: usize, h: i64, forbidden: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(count);
    while out.len() < count {
        let v = rng.gen_range(-h..=h);
        if !forbidden.contains(&v) && !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// Random injective linear map `P^2 → P^n` as an `(n+1) × 3` integer matrix.
fn random_plane_map<R: Rng>(rng: &mut R, n: usize, h: i64) -> Matrix {
    loop {
        let m = Matrix::from_rows(3, (0..=n).map(|_| random_vec(rng, 3, h)).collect());
        if m.rank() == 3 {
            return m;
        }
    }
}

/// Point `(t² - 1 : t(t² - 1) : 1)` of the nodal cubic `y²z = x²(x + z)`, node at `t = ±1`.
fn nodal_cubic_point(t: &Scalar) -> Vec<Scalar> {
    let w = t * t - int(1);
    vec![w.clone(), t * &w, int(1)]
}

/// `3d` parameters on the nodal cubic, grouped in collinear triples: three smooth
/// points with parameters `t_1, t_2, t_3` are collinear iff `t_1t_2 + t_1t_3 + t_2t_3 = -1`.
fn complete_intersection_params<R: Rng>(rng: &mut R, d: usize, h: i64) -> Vec<Scalar> {
    let mut params: Vec<Scalar> = Vec::with_capacity(3 * d);
    let bad = [int(1), int(-1)];
    while params.len() < 3 * d {
        let (a, b) = (rng.gen_range(-h..=h), rng.gen_range(-h..=h));
        if a + b == 0 || a == b {
            continue;
        }
        let (t1, t2) = (int(a), int(b));
        let t3 = (int(-1) - &t1 * &t2) / (&t1 + &t2);
        let triple = [t1, t2, t3];
        let fresh = triple.iter().all(|t| !bad.contains(t) && !params.contains(t))
            && triple[2] != triple[0]
            && triple[2] != triple[1];
        if fresh {
            params.extend(triple);
        }
    }
    params
}

/// A configuration of the given kind in `P^n`, `n ≥ 2`, padded with random points up
/// to a total drawn uniformly from the sizes allowed by `|S| ≤ 4d - 5`, then shuffled.
pub fn planted_configuration<R: Rng>(rng: &mut R, kind: PlantedKind, n: usize, d: usize, h: i64) -> Result<PlantedInstance, Error> {
    if n < 2 {
        return Err(Error::Precondition(format!("planted configurations need n >= 2, got {n}")));
    }
    let cap = 4 * d - 5;
    let core = kind.planted_size(d);
    if core > cap {
        return Err(Error::Precondition(format!("{kind:?} needs {core} points, above 4d - 5 = {cap}")));
    }
    let plane_points: Vec<Vec<Scalar>> = match kind {
        PlantedKind::Line | PlantedKind::Generic => Vec::new(),
        PlantedKind::SmoothConic => distinct_ints(rng, core, h, &[])
            .into_iter()
            .map(|t| vec![int(1), int(t), int(t * t)])
            .collect(),
        PlantedKind::LinePair => {
            let a = distinct_ints(rng, d + 1, h, &[]);
            let b = distinct_ints(rng, d + 1, h, &[]);
            a.into_iter()
                .map(|t| vec![int(1), int(0), int(t)])
                .chain(b.into_iter().map(|t| vec![int(0), int(1), int(t)]))
                .collect()
        }
        PlantedKind::CompleteIntersection => complete_intersection_params(rng, d, h).iter().map(nodal_cubic_point).collect(),
        PlantedKind::Cubic => distinct_ints(rng, core, h, &[1, -1]).into_iter().map(|t| nodal_cubic_point(&int(t))).collect(),
    };
    let mut pts: Vec<Vec<Scalar>> = Vec::new();
    let mut keys: Vec<Vec<Scalar>> = Vec::new();
    if kind == PlantedKind::Line {
        let (a, b) = loop {
            let a = random_vec(rng, n + 1, h);
            let b = random_vec(rng, n + 1, h);
            if Matrix::from_rows(n + 1, vec![a.clone(), b.clone()]).rank() == 2 {
                break (a, b);
            }
        };
        for t in distinct_ints(rng, core, h, &[]) {
            let p: Vec<Scalar> = a.iter().zip(&b).map(|(x, y)| x + y * int(t)).collect();
            push_distinct(&mut pts, &mut keys, p);
        }
        while pts.len() < core {
            let t = rng.gen_range(-10 * h..=10 * h);
            let p: Vec<Scalar> = a.iter().zip(&b).map(|(x, y)| x * int(t) + y).collect();
            push_distinct(&mut pts, &mut keys, p);
        }
    } else if !plane_points.is_empty() {
        let m = random_plane_map(rng, n, h);
        for p in plane_points {
            push_distinct(&mut pts, &mut keys, m.mul_vec(&p));
        }
    }
    let planted_count = pts.len();
    debug_assert_eq!(planted_count, core);
    let low = if kind == PlantedKind::Generic { d + 2 } else { core };
    let total = rng.gen_range(low..=cap);
    while pts.len() < total {
        push_distinct(&mut pts, &mut keys, random_vec(rng, n + 1, h));
    }
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.shuffle(rng);
    let shuffled: Vec<Vec<Scalar>> = order.iter().map(|&i| pts[i].clone()).collect();
    let planted: Vec<usize> = (0..order.len()).filter(|&j| order[j] < planted_count).collect();
    Ok(PlantedInstance { kind, d, points: PointSet::new(n, shuffled)?, planted })
}
