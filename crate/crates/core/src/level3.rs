//! The level-3 vacuum module over the untwisted affine sl3, worked out
//! in full: its unspecialized character, the string functions of the
//! maximal dominant weights, the theta-sum assembly of the character
//! from those string functions, homogeneous-grading projections, and
//! the graded-dimension comparisons distinguishing the Heisenberg coset
//! of this module from the level-one sl2 tensor square.
//!
//! Variables follow the character convention `u = e^{-alpha_0}`,
//! `v = e^{-alpha_1}`, `w = e^{-alpha_2}`, stored as the three exponent
//! slots of an [`MSeries`].

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::algebra::{Algebra, HighestWeight};
use crate::characters::unspecialized_character;
use crate::error::{Error, Result};
use crate::mseries::MSeries;
use crate::qseries::{ProductFactor, ProductSpec, QSeries};
use crate::qtraces::TraceSpec;
use crate::rat::{rat, rint};

fn vacuum_weight() -> HighestWeight {
    HighestWeight::new(Algebra::A2_1, vec![3, 0, 0]).expect("fixed valid weight")
}

/// Unspecialized character of the level-3 vacuum module, truncated at
/// total degree `order` in `(u, v, w)`.
pub fn character(order: i64) -> Result<MSeries> {
    character_weighted(&[1, 1, 1], order)
}

/// Same character truncated by a weighted degree instead; useful when a
/// later specialization weights the variables unevenly.
pub fn character_weighted(weights: &[i64], order: i64) -> Result<MSeries> {
    unspecialized_character(&vacuum_weight(), weights, order)
}

fn ceil_sqrt(n: i64) -> i64 {
    debug_assert!(n >= 0);
    let s = n.sqrt();
    if s * s < n {
        s + 1
    } else {
        s
    }
}

/// Total-degree order that makes the character complete over every term
/// with first exponent at most `c0`.
///
/// Weights `mu` of the module satisfy `|mu + rho|^2 <= |Lambda + rho|^2`.
/// For this module, writing `mu = Lambda - c0 alpha_0 - c1 alpha_1 -
/// c2 alpha_2`, the inequality becomes `(x + y) + (x^2 - xy + y^2) <=
/// 6 c0` with `x = c0 - c1`, `y = c0 - c2`, whence `c1 + c2 <= 2 c0 + 2 +
/// 2 sqrt(6 c0 + 1)` and the total degree is at most this plus `c0`.
pub fn t3_bound(c0: i64) -> i64 {
    3 * c0 + 2 + ceil_sqrt(24 * c0 + 4)
}

/// Counterpart of [`t3_bound`] for the basic module over affine sl2:
/// there `|mu + rho|^2 <= |Lambda + rho|^2` gives `(1/2 + c0 - c1)^2 <=
/// 3 c0 + 1/4`, so the total degree is at most `2 c0 + 1/2 +
/// sqrt(3 c0 + 1/4)`.
pub fn t1_bound(c0: i64) -> i64 {
    2 * c0 + 1 + ceil_sqrt(3 * c0 + 1)
}

/// Graded dimension of the module under the homogeneous grading (degree
/// = first exponent), complete through `q^c0_max`. Needs the paraboloid
/// bound: no positive specialization reaches this projection.
pub fn homogeneous_projection(chv: &MSeries, c0_max: i64) -> Result<QSeries> {
    if chv.weights() != [1, 1, 1] {
        return Err(Error::IncompatibleTruncation(
            "homogeneous projection expects unit weights".into(),
        ));
    }
    if chv.order() < t3_bound(c0_max) {
        return Err(Error::InsufficientOrder(format!(
            "character order {} cannot certify the projection through q^{c0_max}; \
             need {}",
            chv.order(),
            t3_bound(c0_max)
        )));
    }
    Ok(chv.project_first_var(c0_max))
}

/// Homogeneous graded dimension computed from scratch at the smallest
/// certifying truncation.
pub fn homogeneous_series(c0_max: i64) -> Result<QSeries> {
    homogeneous_projection(&character(t3_bound(c0_max))?, c0_max)
}

/// The string functions of the four maximal dominant weights, stored as
/// plain series in one variable. With `D = depth`:
/// the `n`-th coefficients are the character coefficients at
/// `(n, n, n)`, `(n, n-1, n-1)` (carrying the extra power of `uvw`),
/// `(n+2, n, n+1)` and `(n+2, n+1, n)`, for `n` up to `D`, `D + 1`, `D`,
/// `D` respectively.
#[derive(Debug, Clone)]
pub struct StringFunctions {
    pub depth: i64,
    pub sf: [QSeries; 4],
}

/// Reads the four string functions off a computed character. The deepest
/// lookup is at exponents `(depth + 2, depth, depth + 1)`, so the
/// character must be truncated at total degree `3 depth + 3` or later.
pub fn extract_string_functions(chv: &MSeries, depth: i64) -> Result<StringFunctions> {
    if depth < 0 {
        return Err(Error::InvalidInput(format!("depth must be >= 0, got {depth}")));
    }
    if chv.order() < 3 * depth + 3 {
        return Err(Error::InsufficientOrder(format!(
            "character order {} is too small for string functions of depth {depth}; \
             need {}",
            chv.order(),
            3 * depth + 3
        )));
    }
    let dim = |e: [i64; 3]| chv.coefficient(&e).expect("within character order");
    let mut sf1 = vec![BigInt::zero(); (depth + 1) as usize];
    let mut sf2 = vec![BigInt::zero(); (depth + 2) as usize];
    let mut sf3 = vec![BigInt::zero(); (depth + 1) as usize];
    let mut sf4 = vec![BigInt::zero(); (depth + 1) as usize];
    for n in 0..=depth {
        sf1[n as usize] = dim([n, n, n]);
        sf2[(n + 1) as usize] = dim([n + 1, n, n]);
        sf3[n as usize] = dim([n + 2, n, n + 1]);
        sf4[n as usize] = dim([n + 2, n + 1, n]);
    }
    Ok(StringFunctions {
        depth,
        sf: [
            QSeries::from_parts(1, rint(0), rint(depth), sf1),
            QSeries::from_parts(1, rint(0), rint(depth + 1), sf2),
            QSeries::from_parts(1, rint(0), rint(depth), sf3),
            QSeries::from_parts(1, rint(0), rint(depth), sf4),
        ],
    })
}

/// Box radius for the theta sums: outside `max(|m|, |n|) <= r` every
/// monomial of every family has total degree above `order`.
///
/// With `r = max(|m|, |n|)` the quadratic form `m^2 + n^2 - mn` is at
/// least `3 r^2 / 4`, each family's linear part is at least `-18 r`, and
/// each constant at least `-2`, so the degree is at least
/// `27 r^2 / 4 - 18r - 2 >= (9 r^2 - 48 r - 4) / 2`.
fn theta_box_radius(order: i64) -> i64 {
    // smallest r with (9 r^2 - 48 r - 4) / 2 > order, plus one for slack
    (24 + ceil_sqrt(612 + 18 * order.max(0))) / 9 + 2
}

fn diagonal_embedding(s: &QSeries, order: i64) -> MSeries {
    let mut out = MSeries::new_with_negative_exponents(3, &[1, 1, 1], order);
    for (e, c) in s.support() {
        let n = crate::rat::floor_i64(&e);
        debug_assert_eq!(rint(n), e, "string functions live on the integer lattice");
        out.add_term(&[n, n, n], c);
    }
    out
}

/// Rebuilds the character from its string functions: each of the four
/// series multiplies a two-parameter family of monomials in `(u, v, w)`,
/// summed over the integer pairs `(m, n)`. Individual monomials leave
/// the positive cone, the assembled sum may not; that is checked here.
/// Complete through total degree `order`, which requires string
/// functions of depth at least `order / 3`.
pub fn theta_assembly(sf: &StringFunctions, order: i64) -> Result<MSeries> {
    if 3 * sf.depth < order {
        return Err(Error::InsufficientOrder(format!(
            "string functions of depth {} cannot assemble total degree {order}; \
             need depth {}",
            sf.depth,
            (order + 2) / 3
        )));
    }
    let r = theta_box_radius(order);
    let mut thetas: Vec<MSeries> = (0..4)
        .map(|_| MSeries::new_with_negative_exponents(3, &[1, 1, 1], order))
        .collect();
    for m in -r..=r {
        for n in -r..=r {
            let q = m * m + n * n - m * n;

            thetas[0].add_term(&[3 * q, 3 * q - 3 * m, 3 * q - 3 * n], BigInt::from(1));

            // three pairs of families, all weighted by the second string
            // function; each pair is a monomial and its reflected partner
            let t = 3 * q - (2 * m - n);
            thetas[1].add_term(&[t, t + 1 - 3 * m, t - 3 * n], BigInt::from(1));
            let t2 = t + 2 * (2 * m - n);
            thetas[1].add_term(&[t2, t2 - 1 - 3 * m, t2 - 3 * n], BigInt::from(1));

            let t = 3 * q - (2 * n - m);
            thetas[1].add_term(&[t, t - 3 * m, t + 1 - 3 * n], BigInt::from(1));
            let t2 = t + 2 * (2 * n - m);
            thetas[1].add_term(&[t2, t2 - 3 * m, t2 - 1 - 3 * n], BigInt::from(1));

            let t = 3 * q - (m + n);
            thetas[1].add_term(&[t, t + 1 - 3 * m, t + 1 - 3 * n], BigInt::from(1));
            let t2 = t + 2 * (m + n);
            thetas[1].add_term(&[t2, t2 - 1 - 3 * m, t2 - 1 - 3 * n], BigInt::from(1));

            // the last two families are each other's mirror under the
            // diagram flip swapping v and w, as their defining weights are
            let t = 3 * (q + m - n) + 2;
            thetas[2].add_term(&[t, t + 1 - 3 * n, t - 1 - 3 * m], BigInt::from(1));
            thetas[3].add_term(&[t, t - 1 - 3 * m, t + 1 - 3 * n], BigInt::from(1));
        }
    }
    let mut total = MSeries::new_with_negative_exponents(3, &[1, 1, 1], order);
    for (theta, s) in thetas.iter().zip(&sf.sf) {
        total = total.add(&theta.mul(&diagonal_embedding(s, order))?)?;
    }
    if !total.support_in_cone() {
        return Err(Error::IdentityViolation(
            "assembled character has terms outside the positive cone".into(),
        ));
    }
    Ok(total)
}

fn eta_square_spec() -> ProductSpec {
    ProductSpec::new(vec![ProductFactor::new(1, [0], 2)])
}

/// The `(4, 1, 1)`-specialized character on the sixth-root lattice.
/// `char_order` is the `(4, 1, 1)`-weighted truncation, so the result is
/// exact through `q^{char_order / 6}`.
pub fn specialization_411(char_order: i64) -> Result<QSeries> {
    character_weighted(&[4, 1, 1], char_order)?
        .specialize(&[4, 1, 1])?
        .substitute_power(&rat(1, 6))
}

/// Trace of the whole level-3 vertex algebra: homogeneous graded
/// dimension with central charge 4.
pub fn full_voa_trace(c0_max: i64) -> Result<TraceSpec> {
    Ok(TraceSpec {
        central_charge: rint(4),
        lowest_weight: rint(0),
        body: homogeneous_series(c0_max)?,
    })
}

/// Graded dimension of the vacuum space of the level-3 module under its
/// Heisenberg subalgebra: the homogeneous graded dimension divided by
/// the two-boson Fock space, `prod (1 - q^n)^{-2}`.
pub fn vacuum_dimension_series(c0_max: i64) -> Result<QSeries> {
    let full = homogeneous_series(c0_max)?;
    Ok(&full * &eta_square_spec().expand(c0_max))
}

/// Diagonal of the character: the string function of the highest weight
/// itself, which is what survives collecting `v`- and `w`-free terms
/// after `u -> q v^{-1} w^{-1}`.
pub fn diagonal_string_function(chv: &MSeries) -> Result<QSeries> {
    chv.collect_degree_zero()
}

/// Trace of the charge-zero part of the Heisenberg coset: body is the
/// diagonal string function times `prod (1 - q^n)^2`, central charge 2.
pub fn coset_trace(chv: &MSeries) -> Result<TraceSpec> {
    let diag = diagonal_string_function(chv)?;
    let order = crate::rat::floor_i64(diag.order());
    Ok(TraceSpec {
        central_charge: rint(2),
        lowest_weight: rint(0),
        body: &diag * &eta_square_spec().expand(order),
    })
}

/// Trace of the basic module over affine sl2 (the level-one vacuum
/// algebra): homogeneous graded dimension with central charge 1.
pub fn sl2_vacuum_trace(c0_max: i64) -> Result<TraceSpec> {
    let w = HighestWeight::new(Algebra::A1_1, vec![1, 0])?;
    let chv = unspecialized_character(&w, &[1, 1], t1_bound(c0_max))?;
    Ok(TraceSpec {
        central_charge: rint(1),
        lowest_weight: rint(0),
        body: chv.project_first_var(c0_max),
    })
}

/// Trace of the tensor square of the basic sl2 module: squared body,
/// doubled central charge.
pub fn tensor_square_trace(c0_max: i64) -> Result<TraceSpec> {
    let single = sl2_vacuum_trace(c0_max)?;
    Ok(TraceSpec {
        central_charge: rint(2),
        lowest_weight: rint(0),
        body: single.body.pow(2),
    })
}

/// The two graded-dimension comparisons that separate the coset from the
/// sl2 side: both must fail, already in degree one.
pub fn distinguishing_comparisons(
    chv: &MSeries,
    c0_max: i64,
) -> Result<Vec<(&'static str, crate::qseries::SeriesComparison)>> {
    let coset = coset_trace(chv)?;
    let single = sl2_vacuum_trace(c0_max)?;
    let square = tensor_square_trace(c0_max)?;
    Ok(vec![
        ("coset_vs_sl2_vacuum", coset.body.compare(&single.body)),
        ("coset_vs_tensor_square", coset.body.compare(&square.body)),
    ])
}

/// Everything above, computed at consistent truncations and bundled for
/// reporting. `assembly_order` drives the string-function depth; the
/// character order grows to whatever the deepest consumer needs.
pub fn snapshot(homogeneous_max: i64, assembly_order: i64) -> Result<Value> {
    let depth = (assembly_order + 2) / 3;
    let char_order = t3_bound(homogeneous_max).max(3 * depth + 3);
    let chv = character(char_order)?;

    let sf = extract_string_functions(&chv, depth)?;
    let assembled = theta_assembly(&sf, assembly_order)?;
    let assembly_cmp = assembled.compare(&chv)?;

    let spec411 = specialization_411(21)?;
    let full = full_voa_trace(homogeneous_max)?;
    let vacuum_dims = vacuum_dimension_series(homogeneous_max)?;
    let coset = coset_trace(&chv)?;
    let single = sl2_vacuum_trace(homogeneous_max.max(3))?;
    let square = tensor_square_trace(homogeneous_max.max(3))?;
    let distinguishing = distinguishing_comparisons(&chv, homogeneous_max.max(3))?;

    Ok(json!({
        "character_order": char_order,
        "specialization_411": spec411.to_json(),
        "full_trace": full.to_json(),
        "vacuum_dimensions": vacuum_dims.to_json(),
        "coset_trace": coset.to_json(),
        "sl2_vacuum_trace": single.to_json(),
        "tensor_square_trace": square.to_json(),
        "string_functions": sf.sf.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
        "theta_assembly": {
            "order": assembly_order,
            "matches_character": assembly_cmp.equal,
            "first_mismatch": assembly_cmp.first_mismatch.as_ref().map(|(e, a, b)| json!({
                "exponents": e.to_vec(),
                "assembled": a.to_string(),
                "character": b.to_string(),
            })),
        },
        "distinguishing_comparisons": distinguishing.iter().map(|(label, cmp)| json!({
            "comparison": label,
            "equal": cmp.equal,
            "first_mismatch": cmp.first_mismatch.as_ref().map(|(e, a, b)| json!({
                "exponent": crate::rat::format_rat(e),
                "lhs": a.to_string(),
                "rhs": b.to_string(),
            })),
        })).collect::<Vec<_>>(),
    }))
}
