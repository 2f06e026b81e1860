//! Cartan data and Weyl group machinery for the three affine algebras
//! handled by this crate, plus the conformal scalars attached to their
//! standard modules.
//!
//! Conventions: generalized Cartan matrix entries are `gcm[i][j] =
//! alpha_j(h_i)` (value of the j-th simple root on the i-th simple
//! coroot). A weight is stored by its coordinates `(lambda(h_0), ...,
//! lambda(h_{l}))`; the level is the comark-weighted coordinate sum.
//! Weyl group elements are tracked through the orbit of a regular
//! dominant weight `lambda`: the point for `w` is the coefficient vector
//! `c` with `w(lambda) = lambda - sum_i c[i] alpha_i`, which determines
//! `w` uniquely, together with `det(w)` as a parity.

use std::collections::{HashMap, VecDeque};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rat::{format_rat, rat, rint, Rat};

/// The affine algebras with implemented character support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algebra {
    /// Untwisted affinization of sl2.
    A1_1,
    /// Untwisted affinization of sl3.
    A2_1,
    /// Twisted affinization of sl3 (order-2 diagram twist).
    A2_2,
}

impl Algebra {
    pub const ALL: [Algebra; 3] = [Algebra::A1_1, Algebra::A2_1, Algebra::A2_2];

    pub fn label(self) -> &'static str {
        match self {
            Algebra::A1_1 => "a1_1",
            Algebra::A2_1 => "a2_1",
            Algebra::A2_2 => "a2_2",
        }
    }

    pub fn from_label(s: &str) -> Result<Self> {
        match s {
            "a1_1" => Ok(Algebra::A1_1),
            "a2_1" => Ok(Algebra::A2_1),
            "a2_2" => Ok(Algebra::A2_2),
            other => Err(Error::InvalidInput(format!(
                "unknown algebra `{other}`; expected a1_1, a2_1 or a2_2"
            ))),
        }
    }

    /// Number of simple roots (`l + 1` for affine rank `l`).
    pub fn rank(self) -> usize {
        match self {
            Algebra::A1_1 | Algebra::A2_2 => 2,
            Algebra::A2_1 => 3,
        }
    }

    pub fn gcm(self) -> Vec<Vec<i64>> {
        match self {
            Algebra::A1_1 => vec![vec![2, -2], vec![-2, 2]],
            Algebra::A2_1 => vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]],
            Algebra::A2_2 => vec![vec![2, -1], vec![-4, 2]],
        }
    }

    /// Marks: the vector annihilating the transposed Cartan matrix, with
    /// the standard normalization.
    pub fn marks(self) -> Vec<i64> {
        match self {
            Algebra::A1_1 => vec![1, 1],
            Algebra::A2_1 => vec![1, 1, 1],
            Algebra::A2_2 => vec![1, 2],
        }
    }

    /// Comarks: the vector annihilating the Cartan matrix. Levels are
    /// comark-weighted coordinate sums.
    pub fn comarks(self) -> Vec<i64> {
        match self {
            Algebra::A1_1 => vec![1, 1],
            Algebra::A2_1 => vec![1, 1, 1],
            Algebra::A2_2 => vec![2, 1],
        }
    }

    /// Order of the diagram automorphism in the twisted realization.
    pub fn twist(self) -> u32 {
        match self {
            Algebra::A1_1 | Algebra::A2_1 => 1,
            Algebra::A2_2 => 2,
        }
    }

    /// Dual Coxeter number (sum of comarks).
    pub fn dual_coxeter(self) -> i64 {
        self.comarks().iter().sum()
    }

    /// Consistency of the stored Cartan data: marks annihilate the rows,
    /// comarks annihilate the columns, and both start at the canonical
    /// normalization.
    pub fn validate(self) -> Result<()> {
        let gcm = self.gcm();
        let n = self.rank();
        let marks = self.marks();
        let comarks = self.comarks();
        for (i, row) in gcm.iter().enumerate() {
            let against_marks: i64 = row.iter().zip(&marks).map(|(&a, &m)| a * m).sum();
            if against_marks != 0 {
                return Err(Error::IdentityViolation(format!(
                    "marks fail to annihilate row {i} of the {} Cartan matrix",
                    self.label()
                )));
            }
        }
        for j in 0..n {
            let against_comarks: i64 =
                gcm.iter().zip(&comarks).map(|(row, &m)| m * row[j]).sum();
            if against_comarks != 0 {
                return Err(Error::IdentityViolation(format!(
                    "comarks fail to annihilate column {j} of the {} Cartan matrix",
                    self.label()
                )));
            }
        }
        Ok(())
    }

    pub fn describe(self) -> Value {
        json!({
            "label": self.label(),
            "rank": self.rank(),
            "gcm": self.gcm(),
            "marks": self.marks(),
            "comarks": self.comarks(),
            "twist": self.twist(),
            "dual_coxeter": self.dual_coxeter(),
        })
    }
}

/// A dominant integral weight, stored by coroot coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighestWeight {
    pub algebra: Algebra,
    pub coords: Vec<i64>,
}

impl HighestWeight {
    pub fn new(algebra: Algebra, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != algebra.rank() {
            return Err(Error::InvalidInput(format!(
                "{} needs {} weight coordinates, got {}",
                algebra.label(),
                algebra.rank(),
                coords.len()
            )));
        }
        if coords.iter().any(|&c| c < 0) {
            return Err(Error::InvalidInput(format!(
                "weight coordinates must be nonnegative, got {coords:?}"
            )));
        }
        Ok(HighestWeight { algebra, coords })
    }

    pub fn level(&self) -> i64 {
        self.coords.iter().zip(self.algebra.comarks()).map(|(&c, a)| c * a).sum()
    }

    /// Coordinates of `lambda + rho` (each coordinate plus one).
    pub fn shifted_coords(&self) -> Vec<i64> {
        self.coords.iter().map(|&c| c + 1).collect()
    }
}

/// All dominant integral weights of the given level, in a deterministic
/// order.
///
/// For `A1_1` the level-k family is `(k0, k - k0)`, `k0 = 0..=k`. For
/// `A2_2` levels must be odd, `2k + 1`, and the family is
/// `(k0, 2k + 1 - 2 k0)`, `k0 = 0..=k`; both families have `k + 1`
/// members. For `A2_1` all coordinate triples of the level are listed.
pub fn standard_weights(algebra: Algebra, level: i64) -> Result<Vec<HighestWeight>> {
    if level < 1 {
        return Err(Error::InvalidInput(format!("level must be >= 1, got {level}")));
    }
    let mut out = Vec::new();
    match algebra {
        Algebra::A1_1 => {
            for k0 in 0..=level {
                out.push(HighestWeight::new(algebra, vec![k0, level - k0])?);
            }
        }
        Algebra::A2_2 => {
            if level % 2 == 0 {
                return Err(Error::UnsupportedLevelParity(level));
            }
            let k = (level - 1) / 2;
            for k0 in 0..=k {
                out.push(HighestWeight::new(algebra, vec![k0, level - 2 * k0])?);
            }
        }
        Algebra::A2_1 => {
            for k0 in 0..=level {
                for k1 in 0..=(level - k0) {
                    out.push(HighestWeight::new(algebra, vec![k0, k1, level - k0 - k1])?);
                }
            }
        }
    }
    Ok(out)
}

/// One Weyl group element seen through the orbit of a regular dominant
/// weight: `w(lambda) = lambda - sum_i cvec[i] alpha_i`, `parity = det(w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPoint {
    pub cvec: Vec<i64>,
    pub parity: i8,
}

impl OrbitPoint {
    /// Weighted degree `sum_i s[i] * cvec[i]`.
    pub fn degree(&self, s: &[i64]) -> i64 {
        self.cvec.iter().zip(s).map(|(&c, &w)| c * w).sum()
    }
}

/// Enumerates the Weyl orbit of the regular dominant weight with
/// coordinates `lam_plus_rho`, keeping points of `s`-weighted degree at
/// most `max_degree`. `s` must be strictly positive so that degree grows
/// along the orbit and the truncated orbit is finite.
///
/// Walks the orbit by simple reflections, which change one coefficient:
/// reflecting the point `mu` in direction `j` adds `mu(h_j)` to `cvec[j]`.
/// Only length-increasing steps (`mu(h_j) > 0`) are taken; every orbit
/// point is reached that way through a reduced word, with degree strictly
/// increasing, so pruning at `max_degree` loses nothing below it.
pub fn weyl_orbit(
    algebra: Algebra,
    lam_plus_rho: &[i64],
    s: &[i64],
    max_degree: i64,
) -> Result<Vec<OrbitPoint>> {
    let n = algebra.rank();
    if lam_plus_rho.len() != n {
        return Err(Error::InvalidInput(format!(
            "{} needs {} coordinates, got {}",
            algebra.label(),
            n,
            lam_plus_rho.len()
        )));
    }
    if lam_plus_rho.iter().any(|&x| x <= 0) {
        return Err(Error::NonRegularWeight(lam_plus_rho.to_vec()));
    }
    if s.len() != n || s.iter().any(|&x| x <= 0) {
        return Err(Error::InvalidInput(format!(
            "specialization weights must be {n} positive integers, got {s:?}"
        )));
    }
    let gcm = algebra.gcm();
    let mut seen: HashMap<Vec<i64>, i8> = HashMap::new();
    let mut queue: VecDeque<(Vec<i64>, i8, i64)> = VecDeque::new();
    let start = vec![0i64; n];
    seen.insert(start.clone(), 1);
    queue.push_back((start, 1, 0));
    let mut out = Vec::new();
    while let Some((cvec, parity, degree)) = queue.pop_front() {
        out.push(OrbitPoint { cvec: cvec.clone(), parity });
        for j in 0..n {
            // mu(h_j) for mu = lambda - sum_i cvec[i] alpha_i.
            let mut mu_j = lam_plus_rho[j];
            for i in 0..n {
                mu_j -= cvec[i] * gcm[j][i];
            }
            if mu_j <= 0 {
                // mu_j < 0 walks back toward shorter elements; mu_j == 0
                // cannot happen on the orbit of a regular weight.
                debug_assert!(mu_j != 0, "reflection fixed a regular orbit point");
                continue;
            }
            let next_degree = degree + s[j] * mu_j;
            if next_degree > max_degree {
                continue;
            }
            let mut next = cvec.clone();
            next[j] += mu_j;
            let next_parity = -parity;
            match seen.get(&next) {
                Some(&p) if p != next_parity => {
                    return Err(Error::ParityConflict(next));
                }
                Some(_) => {}
                None => {
                    seen.insert(next.clone(), next_parity);
                    queue.push_back((next, next_parity, next_degree));
                }
            }
        }
    }
    out.sort_by(|a, b| a.degree(s).cmp(&b.degree(s)).then_with(|| a.cvec.cmp(&b.cvec)));
    Ok(out)
}

/// Central charges and lowest conformal weights attached to the level-k
/// pair of module families, all exact rationals.
///
/// `c1` is the Virasoro central charge of the level-k sl2 family and
/// `c1_tilde = c1 - 8k/3` its shift under the rescaled grading; `c` is
/// the central charge of the rank-one lattice-dressed family at level
/// `2k + 1` and `c2 = c - 2` drops the two free bosons. `h` and `h_nu`
/// are the lowest conformal weights of the `k0`-th module in the plain
/// and twisted gradings, `lam` the lowest weight of the vacuum-space
/// module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConformalData {
    pub k: i64,
    pub k0: i64,
    pub c1: Rat,
    pub c1_tilde: Rat,
    pub c: Rat,
    pub c2: Rat,
    pub h: Rat,
    pub h_nu: Rat,
    pub lam: Rat,
    /// Common anomaly exponent `h - c1_tilde/24 = h_nu - c1/24`.
    pub anomaly: Rat,
}

pub(crate) fn check_family_params(k: i64, k0: i64) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidInput(format!("k must be >= 1, got {k}")));
    }
    if !(0..=k).contains(&k0) {
        return Err(Error::InvalidInput(format!("k0 must lie in 0..={k}, got {k0}")));
    }
    Ok(())
}

impl ConformalData {
    pub fn new(k: i64, k0: i64) -> Result<Self> {
        check_family_params(k, k0)?;
        let c1 = rat(3 * k, k + 2);
        let c1_tilde = &c1 - rat(8 * k, 3);
        let c = rat(4 * (2 * k + 1), k + 2);
        let c2 = &c - rint(2);
        let h = rat(3 * k0 * k0 - 2 * k0 * k - k * k + 2 * k0 - 2 * k, 12 * (k + 2));
        let h_nu = rat(9 * k0 * k0 - 6 * k0 * k + k * k + 6 * k0 + 2 * k, 36 * (k + 2));
        let lam = rat(
            18 * k0 * k0 - 12 * k0 * k + 2 * k * k + 12 * k0 + 31 * k,
            144 * (k + 2),
        );
        let anomaly = &h - &c1_tilde / rint(24);
        let data = ConformalData { k, k0, c1, c1_tilde, c, c2, h, h_nu, lam, anomaly };
        data.check()?;
        Ok(data)
    }

    /// The shifted-weight coincidences this crate leans on everywhere:
    /// both gradings produce one anomaly exponent, with closed form
    /// `(18 k0^2 - 12 k0 k + 2 k^2 + 12 k0 - 5k) / (72 (k + 2))`, and the
    /// vacuum-space exponent is half of it.
    fn check(&self) -> Result<()> {
        let (k, k0) = (self.k, self.k0);
        let closed = rat(
            18 * k0 * k0 - 12 * k0 * k + 2 * k * k + 12 * k0 - 5 * k,
            72 * (k + 2),
        );
        let from_h = &self.h - &self.c1_tilde / rint(24);
        let from_h_nu = &self.h_nu - &self.c1 / rint(24);
        let from_lam = &self.lam - &self.c2 / rint(24);
        if from_h != closed || from_h_nu != closed {
            return Err(Error::IdentityViolation(format!(
                "anomaly exponents disagree at k={k}, k0={k0}: {} vs {} vs {}",
                format_rat(&from_h),
                format_rat(&from_h_nu),
                format_rat(&closed)
            )));
        }
        if rint(2) * &from_lam != closed {
            return Err(Error::IdentityViolation(format!(
                "vacuum-space exponent is not half the anomaly at k={k}, k0={k0}: {} vs {}",
                format_rat(&from_lam),
                format_rat(&closed)
            )));
        }
        if self.c2 != rint(2) * &self.c1 {
            return Err(Error::IdentityViolation(format!(
                "c2 != 2 c1 at k={k}: {} vs {}",
                format_rat(&self.c2),
                format_rat(&self.c1)
            )));
        }
        Ok(())
    }

    /// Exponent of the vacuum-space trace prefactor, `lam - c2/24`.
    pub fn vacuum_anomaly(&self) -> Rat {
        &self.lam - &self.c2 / rint(24)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "k0": self.k0,
            "c1": format_rat(&self.c1),
            "c1_tilde": format_rat(&self.c1_tilde),
            "c": format_rat(&self.c),
            "c2": format_rat(&self.c2),
            "h": format_rat(&self.h),
            "h_nu": format_rat(&self.h_nu),
            "lambda": format_rat(&self.lam),
            "anomaly": format_rat(&self.anomaly),
        })
    }
}

/// The three anomaly exponents `(h - c1_tilde/24, h_nu - c1/24,
/// lam - c2/24)`; the first two agree and the third is half of them.
pub fn anomaly_exponents(k: i64, k0: i64) -> Result<(Rat, Rat, Rat)> {
    let data = ConformalData::new(k, k0)?;
    Ok((
        &data.h - &data.c1_tilde / rint(24),
        &data.h_nu - &data.c1 / rint(24),
        data.vacuum_anomaly(),
    ))
}

/// Top conformal weight of the `k0`-th vacuum-space module under the full
/// tensor-product grading. Sits exactly `5/72` above the vacuum-space
/// lowest weight `lam`.
pub fn l0_top_eigenvalue(k: i64, k0: i64) -> Result<Rat> {
    let data = ConformalData::new(k, k0)?;
    let top = rat(
        18 * k0 * k0 - 12 * k0 * k + 2 * k * k + 12 * k0 + 41 * k + 20,
        144 * (k + 2),
    );
    if &top - rat(5, 72) != data.lam {
        return Err(Error::IdentityViolation(format!(
            "top eigenvalue minus 5/72 differs from the vacuum-space weight at k={k}, k0={k0}"
        )));
    }
    Ok(top)
}
