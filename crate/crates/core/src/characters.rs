//! Characters of standard modules, computed from the Weyl orbit form of
//! the character formula, together with their congruence product forms
//! and the specialization duality connecting the two rank-two families.
//!
//! The level-k family pairs the `A1_1` modules `(k0, k - k0)` with the
//! `A2_2` modules `(k0, 2k + 1 - 2 k0)`, `k0 = 0..=k`. Specializing the
//! first family at `(1, 2)` and the second at `(1, 1)` produces the same
//! series up to the fixed factor `P(q) = prod (1 - q^n)^{-1}` over
//! `n = 1, 5 mod 6`; both sides also expand as congruence products
//! modulo `4(k + 2)`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::algebra::{check_family_params, weyl_orbit, Algebra, HighestWeight};
use crate::error::{Error, Result};
use crate::mseries::MSeries;
use crate::qseries::{p_series, ProductFactor, ProductSpec, QSeries, SeriesComparison};
use crate::rat::{format_rat, rat, rint};

/// Alternating orbit sum `sum_w det(w) q^{deg_s(w)}` for the orbit of the
/// weight with coordinates `lam_plus_rho`, as an integer-lattice series.
pub fn orbit_alternating_sum(
    algebra: Algebra,
    lam_plus_rho: &[i64],
    s: &[i64],
    order: i64,
) -> Result<QSeries> {
    if order < 0 {
        return Err(Error::InvalidInput(format!("order must be >= 0, got {order}")));
    }
    let mut coeffs = vec![BigInt::zero(); (order + 1) as usize];
    for p in weyl_orbit(algebra, lam_plus_rho, s, order)? {
        coeffs[p.degree(s) as usize] += BigInt::from(p.parity);
    }
    Ok(QSeries::from_parts(1, rint(0), rint(order), coeffs))
}

/// Character of the standard module with highest weight `weight`,
/// specialized by `q^{c_i} <- e^{-alpha_i}` with exponents `s`, as a
/// series in `q` up to `q^order`. Quotient of the two alternating orbit
/// sums; the denominator starts with 1, so the division is exact.
pub fn specialized_character(weight: &HighestWeight, s: &[i64], order: i64) -> Result<QSeries> {
    let alg = weight.algebra;
    let num = orbit_alternating_sum(alg, &weight.shifted_coords(), s, order)?;
    let den = orbit_alternating_sum(alg, &vec![1; alg.rank()], s, order)?;
    Ok(&num * &den.invert()?)
}

fn orbit_mseries(
    algebra: Algebra,
    lam_plus_rho: &[i64],
    weights: &[i64],
    order: i64,
) -> Result<MSeries> {
    let mut out = MSeries::new(algebra.rank(), weights, order);
    for p in weyl_orbit(algebra, lam_plus_rho, weights, order)? {
        out.add_term(&p.cvec, BigInt::from(p.parity));
    }
    Ok(out)
}

/// Unspecialized character in the root-lattice variables `x_i =
/// e^{-alpha_i}`, truncated at `weights`-weighted total degree `order`.
/// Specializing the result by any positive `s` agrees with
/// [`specialized_character`] wherever both are defined.
pub fn unspecialized_character(
    weight: &HighestWeight,
    weights: &[i64],
    order: i64,
) -> Result<MSeries> {
    let alg = weight.algebra;
    let num = orbit_mseries(alg, &weight.shifted_coords(), weights, order)?;
    let den = orbit_mseries(alg, &vec![1; alg.rank()], weights, order)?;
    num.mul(&den.invert()?)
}

/// Whether the level-k pair `k0` is the exceptional one, `3 k0 = 2k + 1`
/// (possible only for `k = 1 mod 3`). The exceptional module has a
/// different congruence product shape.
pub fn is_exceptional(k: i64, k0: i64) -> bool {
    3 * k0 == 2 * k + 1
}

fn residues_mod(m: i64, values: impl IntoIterator<Item = i64>) -> BTreeSet<u32> {
    values.into_iter().map(|v| v.rem_euclid(m) as u32).collect()
}

fn a1_product_factors(k: i64, k0: i64) -> Result<Vec<ProductFactor>> {
    check_family_params(k, k0)?;
    let m = 4 * (k + 2);
    if is_exceptional(k, k0) {
        // 3 k0 = 2k + 1 forces k = 1 mod 3, so 2(k + 2)/3 is integral.
        let a = 2 * (k + 2) / 3;
        let plus = residues_mod(m, [a, m - a]);
        let skipped = residues_mod(m, [0, 2 * (k + 2), a, m - a, 2 * a, m - 2 * a]);
        let minus: BTreeSet<u32> =
            (0..m as u32).filter(|r| !skipped.contains(r)).collect();
        Ok(vec![
            ProductFactor::new(m as u32, plus, 1),
            ProductFactor::new(m as u32, minus, -1),
        ])
    } else {
        let excluded = residues_mod(
            m,
            [
                0,
                2 * (k + 2),
                k0 + 1,
                -(k0 + 1),
                2 * k - k0 + 3,
                -(2 * k - k0 + 3),
                2 * (k - k0 + 1),
                -2 * (k - k0 + 1),
            ],
        );
        let kept: BTreeSet<u32> =
            (0..m as u32).filter(|r| !excluded.contains(r)).collect();
        Ok(vec![ProductFactor::new(m as u32, kept, -1)])
    }
}

/// Congruence product form of the specialized character of the `k0`-th
/// level-k module, modulo `4(k + 2)`. For `A1_1` this is the
/// `(1, 2)`-specialization; for `A2_2` the `(1, 1)`-specialization, which
/// carries one extra factor `P(q)` (inverse product over `n = 1, 5 mod
/// 6`). No product form is wired up for `A2_1`.
pub fn product_spec(algebra: Algebra, k: i64, k0: i64) -> Result<ProductSpec> {
    match algebra {
        Algebra::A1_1 => Ok(ProductSpec::new(a1_product_factors(k, k0)?)),
        Algebra::A2_2 => {
            let mut factors = vec![ProductFactor::new(6, [1, 5], -1)];
            factors.extend(a1_product_factors(k, k0)?);
            Ok(ProductSpec::new(factors))
        }
        Algebra::A2_1 => Err(Error::InvalidInput(
            "no congruence product form implemented for a2_1".into(),
        )),
    }
}

/// One `k0`-slot of a duality check: both specialized characters, their
/// comparison after stripping `P(q)` from the twisted side, and the
/// outcome of the independent congruence product cross-checks.
#[derive(Debug, Clone)]
pub struct DualityCase {
    pub k0: i64,
    pub exceptional: bool,
    /// `(1, 2)`-specialized `A1_1` character of `(k0, k - k0)`.
    pub lhs: QSeries,
    /// `P(q)^{-1}` times the `(1, 1)`-specialized `A2_2` character of
    /// `(k0, 2k + 1 - 2 k0)`.
    pub rhs: QSeries,
    pub comparison: SeriesComparison,
    pub lhs_matches_product: bool,
    pub rhs_matches_product: bool,
}

#[derive(Debug, Clone)]
pub struct DualityReport {
    pub k: i64,
    pub order: i64,
    pub cases: Vec<DualityCase>,
}

impl DualityReport {
    pub fn all_hold(&self) -> bool {
        self.cases.iter().all(|c| {
            c.comparison.equal && c.lhs_matches_product && c.rhs_matches_product
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "identity": "specialization_duality",
            "k": self.k,
            "order": self.order,
            "holds": self.all_hold(),
            "cases": self.cases.iter().map(|c| {
                json!({
                    "k0": c.k0,
                    "exceptional": c.exceptional,
                    "equal": c.comparison.equal,
                    "compared_order": format_rat(&c.comparison.compared_order),
                    "max_abs_diff": c.comparison.max_abs_diff.to_string(),
                    "first_mismatch": c.comparison.first_mismatch.as_ref().map(|(e, a, b)| json!({
                        "exponent": format_rat(e),
                        "lhs": a.to_string(),
                        "rhs": b.to_string(),
                    })),
                    "lhs_matches_product": c.lhs_matches_product,
                    "rhs_matches_product": c.rhs_matches_product,
                    "lhs": c.lhs.to_json(),
                    "rhs": c.rhs.to_json(),
                })
            }).collect::<Vec<_>>(),
        })
    }
}

/// Checks, for every `k0` at level `k`, that the `(1, 2)`-specialized
/// `A1_1` character equals `P(q)^{-1}` times the `(1, 1)`-specialized
/// `A2_2` character, and that each side independently matches its
/// congruence product expansion.
pub fn verify_duality(k: i64, order: i64) -> Result<DualityReport> {
    check_family_params(k, 0)?;
    let p_inv = p_series(order).invert()?;
    let mut cases = Vec::new();
    for k0 in 0..=k {
        let a1w = HighestWeight::new(Algebra::A1_1, vec![k0, k - k0])?;
        let lhs = specialized_character(&a1w, &[1, 2], order)?;
        let a2w = HighestWeight::new(Algebra::A2_2, vec![k0, 2 * k + 1 - 2 * k0])?;
        let chi2 = specialized_character(&a2w, &[1, 1], order)?;
        let rhs = &chi2 * &p_inv;
        let comparison = lhs.compare(&rhs);
        let lhs_matches_product =
            lhs.eq_to_min_order(&product_spec(Algebra::A1_1, k, k0)?.expand(order));
        let rhs_matches_product =
            chi2.eq_to_min_order(&product_spec(Algebra::A2_2, k, k0)?.expand(order));
        cases.push(DualityCase {
            k0,
            exceptional: is_exceptional(k, k0),
            lhs,
            rhs,
            comparison,
            lhs_matches_product,
            rhs_matches_product,
        });
    }
    Ok(DualityReport { k, order, cases })
}

/// Graded dimension of the `k0`-th level-k vacuum space, on the lattice
/// of sixth powers: the `(1, 1)`-specialized `A2_2` character with
/// `q -> q^{1/6}` divided by `P(q^{1/6})`. The equivalent route through
/// the `(1, 2)`-specialized `A1_1` character with `q -> q^{1/6}` is
/// computed too and must agree. `char_order` is the truncation order of
/// the underlying characters, so the result is exact up to
/// `q^{char_order/6}`.
pub fn vacuum_graded_dim(k: i64, k0: i64, char_order: i64) -> Result<QSeries> {
    check_family_params(k, k0)?;
    let sixth = rat(1, 6);
    let a2w = HighestWeight::new(Algebra::A2_2, vec![k0, 2 * k + 1 - 2 * k0])?;
    let chi2 = specialized_character(&a2w, &[1, 1], char_order)?;
    let p_inv = p_series(char_order).invert()?;
    let twisted_route = (&chi2 * &p_inv).substitute_power(&sixth)?;
    let a1w = HighestWeight::new(Algebra::A1_1, vec![k0, k - k0])?;
    let sl2_route =
        specialized_character(&a1w, &[1, 2], char_order)?.substitute_power(&sixth)?;
    let cmp = twisted_route.compare(&sl2_route);
    if !cmp.equal {
        let (e, a, b) = cmp.first_mismatch.expect("unequal comparison has a mismatch");
        return Err(Error::IdentityViolation(format!(
            "vacuum graded dimension routes disagree at k={k}, k0={k0}: \
             coefficient of q^{} is {a} vs {b}",
            format_rat(&e)
        )));
    }
    Ok(twisted_route)
}
