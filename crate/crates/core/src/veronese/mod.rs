//! Veronese embeddings `ν_d: P^n → P^r`, Hilbert functions of finite point sets,
//! detection of the point configurations that force `h¹(I_S(d)) > 0`, and
//! construction and verification of points spanned by a rank-`(d+2-b)` point of a
//! line's curve together with general points off the line.
//!
//! Monomials are exponent vectors `(e_0, …, e_n)` with `Σ e_i = d`, ordered
//! lexicographically descending; for `n = 2, d = 2` the order is
//! `x², xy, xz, y², yz, z²`.

mod a43;
mod hilbert;
mod planted;

pub use a43::{a43_construct, a43_construct_with_mixing, a43_verify, A43Instance, A43Report};
pub use hilbert::{detect_configuration, h_values, H1Report, Witness, WitnessKind};
pub use planted::{generic_points, planted_configuration, PlantedInstance, PlantedKind};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::binform::{apolar_span, BinaryForm, DualForm};
use crate::exactlin::scalar::{binomial, normalize_projective, parse_scalar, primitive_integer};
use crate::exactlin::{LinearSubspace, Scalar};
use crate::Error;

/// Exponent vectors of degree `d` in `n + 1` variables, lexicographically descending.
pub fn monomials(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn fill(prefix: &mut Vec<usize>, left: usize, vars: usize, out: &mut Vec<Vec<usize>>) {
        if vars == 1 {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            fill(prefix, left - e, vars - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(&mut Vec::new(), d, n + 1, &mut out);
    out
}

/// Values of all monomials in `monos` at the integer point `p`.
pub(crate) fn eval_monomials_int(p: &[BigInt], monos: &[Vec<usize>]) -> Vec<BigInt> {
    let d = monos.first().map(|m| m.iter().sum()).unwrap_or(0);
    let powers: Vec<Vec<BigInt>> = p
        .iter()
        .map(|x| {
            let mut pw = vec![BigInt::one(); d + 1];
            for i in 1..=d {
                pw[i] = &pw[i - 1] * x;
            }
            pw
        })
        .collect();
    monos
        .iter()
        .map(|m| m.iter().enumerate().fold(BigInt::one(), |acc, (i, &e)| acc * &powers[i][e]))
        .collect()
}

/// The degree-`d` Veronese embedding of `P^n`.
#[derive(Clone, Debug)]
pub struct VeroneseMap {
    n: usize,
    d: usize,
    monomials: Vec<Vec<usize>>,
}

impl VeroneseMap {
    pub fn new(n: usize, d: usize) -> Result<Self, Error> {
        if n == 0 || d == 0 {
            return Err(Error::Precondition(format!("Veronese map needs n >= 1 and d >= 1, got n = {n}, d = {d}")));
        }
        Ok(VeroneseMap { n, d, monomials: monomials(n, d) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn monomials(&self) -> &[Vec<usize>] {
        &self.monomials
    }

    /// `r = C(n + d, n) - 1`.
    pub fn ambient_dim(&self) -> usize {
        self.monomials.len() - 1
    }

    pub fn embed(&self, p: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        if p.len() != self.n + 1 {
            return Err(Error::AmbientMismatch { expected: self.n + 1, found: p.len() });
        }
        if p.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(self
            .monomials
            .iter()
            .map(|m| m.iter().zip(p).fold(Scalar::one(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e)))
            .collect())
    }

    /// Index of the monomial `x_0^{d-i} x_1^i`.
    fn line_index(&self, i: usize) -> usize {
        let mut target = vec![0; self.n + 1];
        target[0] = self.d - i;
        target[1] = i;
        self.monomials.iter().position(|m| *m == target).expect("line monomial present")
    }

    /// Linear inclusion of binary forms of degree `d` on the line `L = {x_2 = … = x_n = 0}`
    /// into `P^r`, sending `(a x + b y)^d` to `ν_d(a : b : 0 : … : 0)`. The coefficient of
    /// `x^{d-i} y^i` lands on the monomial `x_0^{d-i} x_1^i`, divided by `C(d, i)`.
    pub fn line_inclusion(&self, coeffs: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        if coeffs.len() != self.d + 1 {
            return Err(Error::AmbientMismatch { expected: self.d + 1, found: coeffs.len() });
        }
        let mut out = vec![Scalar::zero(); self.monomials.len()];
        for (i, c) in coeffs.iter().enumerate() {
            out[self.line_index(i)] = c / Scalar::from_integer(binomial(self.d as u64, i as u64));
        }
        Ok(out)
    }

    /// Image of a subspace of `P^d` (binary forms) under [`VeroneseMap::line_inclusion`].
    pub fn include_line_subspace(&self, s: &LinearSubspace) -> Result<LinearSubspace, Error> {
        let rows: Vec<Vec<Scalar>> =
            s.basis().iter().map(|b| self.line_inclusion(b)).collect::<Result<_, _>>()?;
        LinearSubspace::span(self.ambient_dim(), &rows)
    }

    /// `⟨ν_d(E)⟩` for the point set `E ⊂ L` carried by a squarefree dual form on the line.
    pub fn line_span(&self, g: &DualForm) -> Result<LinearSubspace, Error> {
        self.include_line_subspace(&apolar_span(g, self.d)?)
    }

    /// `⟨ν_d(L)⟩`, the coordinate subspace of the line monomials.
    pub fn line_subspace(&self) -> LinearSubspace {
        let rows: Vec<Vec<Scalar>> = (0..=self.d)
            .map(|i| {
                let mut v = vec![Scalar::zero(); self.monomials.len()];
                v[self.line_index(i)] = Scalar::one();
                v
            })
            .collect();
        LinearSubspace::span(self.ambient_dim(), &rows).expect("consistent lengths")
    }

    pub fn include_form(&self, f: &BinaryForm) -> Result<Vec<Scalar>, Error> {
        self.line_inclusion(f.coeffs())
    }
}

/// Finite set of pairwise distinct points of `P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    n: usize,
    points: Vec<Vec<Scalar>>,
}

impl PointSet {
    pub fn new(n: usize, points: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let mut seen: Vec<Vec<Scalar>> = Vec::with_capacity(points.len());
        for p in &points {
            if p.len() != n + 1 {
                return Err(Error::AmbientMismatch { expected: n + 1, found: p.len() });
            }
            if p.iter().all(Zero::is_zero) {
                return Err(Error::ZeroVector);
            }
            let key = normalize_projective(p);
            if seen.contains(&key) {
                return Err(Error::Precondition(format!("repeated point {}", key.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(":"))));
            }
            seen.push(key);
        }
        Ok(PointSet { n, points })
    }

    /// Parses one point per line, `a0:a1:...:an`; blank lines and `#` comments skipped.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut points = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let p: Vec<Scalar> = line.split(':').map(parse_scalar).collect::<Result<_, _>>()?;
            points.push(p);
        }
        let Some(first) = points.first() else {
            return Err(Error::Parse("point set file has no points".into()));
        };
        if first.len() < 2 {
            return Err(Error::Parse("points need at least two coordinates".into()));
        }
        Self::new(first.len() - 1, points)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Scalar>] {
        &self.points
    }

    pub fn subset(&self, idx: &[usize]) -> PointSet {
        PointSet { n: self.n, points: idx.iter().map(|&i| self.points[i].clone()).collect() }
    }

    pub(crate) fn integer_points(&self) -> Vec<Vec<BigInt>> {
        self.points.iter().map(|p| primitive_integer(p)).collect()
    }

    pub fn to_text(&self) -> String {
        self.points
            .iter()
            .map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(":") + "\n")
            .collect()
    }
}
