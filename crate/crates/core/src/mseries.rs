//! Truncated multivariate series for unspecialized characters.
//!
//! An [`MSeries`] is a sparse polynomial in two or three variables,
//! truncated on the cone of weighted total degree: terms whose degree
//! `sum_i weights[i] * exps[i]` exceeds `order` are unknown and never
//! stored or reported. Keys carry the degree so that degreewise
//! operations (inversion, bounded products) stay near-linear per degree
//! slice.
//!
//! The default mode only admits exponents `>= 0`. Theta-series assembly
//! temporarily needs integer exponents of either sign (the summands reach
//! outside the cone and cancel there); [`MSeries::new_with_negative_exponents`]
//! enables that mode, and the two modes never mix inside one binary
//! operation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::qseries::QSeries;
use crate::rat::{rat, rint};

pub const MAX_VARS: usize = 3;

type Exps = [i64; MAX_VARS];

/// Sparse weighted-degree truncated series. Unused exponent slots beyond
/// `nvars` stay zero.
#[derive(Debug, Clone)]
pub struct MSeries {
    nvars: usize,
    weights: Vec<i64>,
    order: i64,
    allow_negative: bool,
    terms: BTreeMap<(i64, Exps), BigInt>,
}

/// Coefficientwise comparison result up to the smaller order.
#[derive(Debug, Clone)]
pub struct MComparison {
    pub equal: bool,
    pub compared_order: i64,
    pub first_mismatch: Option<(Exps, BigInt, BigInt)>,
}

impl MSeries {
    pub fn new(nvars: usize, weights: &[i64], order: i64) -> Self {
        assert!(nvars == 2 || nvars == 3, "nvars must be 2 or 3");
        assert_eq!(weights.len(), nvars, "one weight per variable");
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        MSeries {
            nvars,
            weights: weights.to_vec(),
            order,
            allow_negative: false,
            terms: BTreeMap::new(),
        }
    }

    /// Same as [`MSeries::new`] but permitting integer exponents of either
    /// sign in every variable.
    pub fn new_with_negative_exponents(nvars: usize, weights: &[i64], order: i64) -> Self {
        let mut s = MSeries::new(nvars, weights, order);
        s.allow_negative = true;
        s
    }

    /// The constant series 1.
    pub fn one(nvars: usize, weights: &[i64], order: i64) -> Self {
        let mut s = MSeries::new(nvars, weights, order);
        s.add_term(&vec![0; nvars], BigInt::one());
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn allows_negative_exponents(&self) -> bool {
        self.allow_negative
    }

    pub fn degree_of(&self, exps: &[i64]) -> i64 {
        assert_eq!(exps.len(), self.nvars);
        exps.iter().zip(&self.weights).map(|(&e, &w)| e * w).sum()
    }

    fn key(&self, exps: &[i64]) -> (i64, Exps) {
        let mut padded = [0i64; MAX_VARS];
        padded[..self.nvars].copy_from_slice(exps);
        (self.degree_of(exps), padded)
    }

    fn check_exps(&self, exps: &[i64]) {
        assert_eq!(exps.len(), self.nvars, "wrong exponent tuple length");
        if !self.allow_negative {
            assert!(exps.iter().all(|&e| e >= 0), "negative exponent in cone mode");
        }
    }

    /// Adds `coeff` at `exps`, silently dropping contributions beyond the
    /// truncation order and zero results.
    pub fn add_term(&mut self, exps: &[i64], coeff: BigInt) {
        self.check_exps(exps);
        if coeff.is_zero() {
            return;
        }
        let key = self.key(exps);
        if key.0 > self.order {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Coefficient at `exps`: `None` beyond the truncation order, `Some(0)`
    /// at known-zero points (absent from the map, or negative exponents in
    /// cone mode).
    pub fn coefficient(&self, exps: &[i64]) -> Option<BigInt> {
        assert_eq!(exps.len(), self.nvars);
        let deg = self.degree_of(exps);
        if deg > self.order {
            return None;
        }
        if !self.allow_negative && exps.iter().any(|&e| e < 0) {
            return Some(BigInt::zero());
        }
        let key = self.key(exps);
        Some(self.terms.get(&key).cloned().unwrap_or_else(BigInt::zero))
    }

    /// Stored nonzero terms in degree order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigInt)> {
        self.terms.iter().map(|((_, e), c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every stored exponent tuple is componentwise nonnegative.
    pub fn support_in_cone(&self) -> bool {
        self.terms.keys().all(|(_, e)| e.iter().all(|&x| x >= 0))
    }

    fn compatible(&self, other: &MSeries) -> Result<()> {
        if self.nvars != other.nvars
            || self.weights != other.weights
            || self.allow_negative != other.allow_negative
        {
            return Err(Error::IncompatibleTruncation(format!(
                "nvars {}/{}, weights {:?}/{:?}, negative-exponent mode {}/{}",
                self.nvars,
                other.nvars,
                self.weights,
                other.weights,
                self.allow_negative,
                other.allow_negative
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &MSeries) -> Result<MSeries> {
        self.compatible(other)?;
        let order = self.order.min(other.order);
        let mut out = self.clone();
        out.order = order;
        out.terms.retain(|&(d, _), _| d <= order);
        for (&(d, e), c) in &other.terms {
            if d > order {
                continue;
            }
            let slot = out.terms.entry((d, e)).or_insert_with(BigInt::zero);
            *slot += c;
            if slot.is_zero() {
                out.terms.remove(&(d, e));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> MSeries {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        out
    }

    pub fn sub(&self, other: &MSeries) -> Result<MSeries> {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, k: &BigInt) -> MSeries {
        let mut out = self.clone();
        if k.is_zero() {
            out.terms.clear();
            return out;
        }
        for c in out.terms.values_mut() {
            *c = &*c * k;
        }
        out
    }

    pub fn mul(&self, other: &MSeries) -> Result<MSeries> {
        self.compatible(other)?;
        let order = self.order.min(other.order);
        let mut out = MSeries {
            nvars: self.nvars,
            weights: self.weights.clone(),
            order,
            allow_negative: self.allow_negative,
            terms: BTreeMap::new(),
        };
        // In cone mode degrees are nonnegative, so inner iteration can stop
        // once the degree budget is used up. With negative exponents the
        // budget prune only applies from the partner's minimal degree.
        let min_b = other.terms.keys().next().map(|&(d, _)| d).unwrap_or(0);
        for (&(da, ea), ca) in &self.terms {
            if da + min_b > order {
                if !self.allow_negative {
                    break;
                }
                continue;
            }
            for (&(db, eb), cb) in other.terms.range(..=(order - da, [i64::MAX; MAX_VARS])) {
                debug_assert!(da + db <= order);
                let mut e = [0i64; MAX_VARS];
                for i in 0..MAX_VARS {
                    e[i] = ea[i] + eb[i];
                }
                let slot = out.terms.entry((da + db, e)).or_insert_with(BigInt::zero);
                *slot += ca * cb;
                if slot.is_zero() {
                    out.terms.remove(&(da + db, e));
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse in cone mode. Requires constant term `+1` or
    /// `-1`.
    pub fn invert(&self) -> Result<MSeries> {
        assert!(!self.allow_negative, "inversion is defined on the exponent cone only");
        let unit = self
            .terms
            .get(&(0, [0; MAX_VARS]))
            .cloned()
            .unwrap_or_else(BigInt::zero);
        if !(unit == BigInt::one() || unit == -BigInt::one()) {
            return Err(Error::NonUnitConstantTerm(unit.to_string()));
        }
        // Degreewise recursion b_d = -unit * sum_{e=1..d} a_e b_{d-e},
        // b_0 = unit; all products land exactly at degree d.
        let mut inv = MSeries {
            nvars: self.nvars,
            weights: self.weights.clone(),
            order: self.order,
            allow_negative: false,
            terms: BTreeMap::new(),
        };
        inv.terms.insert((0, [0; MAX_VARS]), unit.clone());
        for d in 1..=self.order {
            let mut bucket: BTreeMap<Exps, BigInt> = BTreeMap::new();
            for (&(da, ea), ca) in self.terms.range((1, [i64::MIN; MAX_VARS])..=(d, [i64::MAX; MAX_VARS])) {
                let db = d - da;
                for (&(_, eb), cb) in inv.terms.range((db, [i64::MIN; MAX_VARS])..=(db, [i64::MAX; MAX_VARS])) {
                    let mut e = [0i64; MAX_VARS];
                    for i in 0..MAX_VARS {
                        e[i] = ea[i] + eb[i];
                    }
                    let slot = bucket.entry(e).or_insert_with(BigInt::zero);
                    *slot += ca * cb;
                }
            }
            for (e, c) in bucket {
                let v = -(&unit * c);
                if !v.is_zero() {
                    inv.terms.insert((d, e), v);
                }
            }
        }
        Ok(inv)
    }

    /// Specialization homomorphism: the monomial with exponents `c` maps to
    /// `q^{sum_i s[i] c[i]}`. Requires strictly positive `s` and cone mode.
    ///
    /// The resulting order is the largest exponent whose coefficient cannot
    /// receive contributions from terms beyond this truncation: a dropped
    /// term has weighted degree at least `order + 1`, hence specialized
    /// exponent at least `(order + 1) * min_i(s[i] / weights[i])`.
    pub fn specialize(&self, s: &[i64]) -> Result<QSeries> {
        if self.allow_negative {
            return Err(Error::InvalidInput(
                "specialize requires cone-mode exponents".into(),
            ));
        }
        if s.len() != self.nvars || s.iter().any(|&x| x <= 0) {
            return Err(Error::InvalidInput(format!(
                "specialization weights must be {} positive integers, got {:?}",
                self.nvars, s
            )));
        }
        let min_ratio = s
            .iter()
            .zip(&self.weights)
            .map(|(&si, &wi)| rat(si, wi))
            .min()
            .expect("nonempty weights");
        let bound = rint(self.order + 1) * min_ratio;
        let out_order = crate::rat::floor_i64(&bound)
            - if bound.is_integer() { 1 } else { 0 };
        let mut coeffs = vec![BigInt::zero(); (out_order.max(-1) + 1) as usize];
        for ((_, e), c) in &self.terms {
            let exp: i64 = e.iter().zip(s).map(|(&ei, &si)| ei * si).sum();
            if exp <= out_order {
                coeffs[exp as usize] += c;
            }
        }
        Ok(QSeries::from_parts(1, rint(0), rint(out_order), coeffs))
    }

    /// Projection onto powers of the first variable: the monomial with
    /// exponents `c` maps to `q^{c[0]}`.
    ///
    /// No truncation order on this cone can bound the projection on its
    /// own (terms of huge degree can still have small first exponent), so
    /// the caller must pass the exponent range it knows to be complete
    /// from the structure of the series. Coefficients beyond
    /// `complete_order` are discarded.
    pub fn project_first_var(&self, complete_order: i64) -> QSeries {
        let mut coeffs = vec![BigInt::zero(); (complete_order.max(-1) + 1) as usize];
        for ((_, e), c) in &self.terms {
            if e[0] <= complete_order {
                coeffs[e[0] as usize] += c;
            }
        }
        QSeries::from_parts(1, rint(0), rint(complete_order), coeffs)
    }

    /// Substitutes the first variable by `q * v2^{-1} * v3^{-1}` and keeps
    /// the terms with zero residual exponent on `v2` and `v3`; the term at
    /// `(c, c, c)` is the only survivor in its class and maps to `q^c`.
    /// Only defined for three variables.
    pub fn collect_degree_zero(&self) -> Result<QSeries> {
        if self.nvars != 3 {
            return Err(Error::InvalidInput(
                "collect_degree_zero needs a three-variable series".into(),
            ));
        }
        let wsum: i64 = self.weights.iter().sum();
        let out_order = self.order.div_euclid(wsum);
        let mut coeffs = vec![BigInt::zero(); (out_order.max(-1) + 1) as usize];
        for ((_, e), c) in &self.terms {
            if e[1] == e[0] && e[2] == e[0] && e[0] <= out_order {
                debug_assert!(e[0] >= 0);
                coeffs[e[0] as usize] += c;
            }
        }
        Ok(QSeries::from_parts(1, rint(0), rint(out_order), coeffs))
    }

    /// Coefficientwise comparison up to the smaller order. Requires equal
    /// variable counts and weights; exponent modes may differ.
    pub fn compare(&self, other: &MSeries) -> Result<MComparison> {
        if self.nvars != other.nvars || self.weights != other.weights {
            return Err(Error::IncompatibleTruncation(format!(
                "nvars {}/{}, weights {:?}/{:?}",
                self.nvars, other.nvars, self.weights, other.weights
            )));
        }
        let compared_order = self.order.min(other.order);
        let mut first_mismatch = None;
        let mut keys: Vec<(i64, Exps)> = Vec::new();
        for (&k, _) in self.terms.iter().chain(other.terms.iter()) {
            if k.0 <= compared_order {
                keys.push(k);
            }
        }
        keys.sort();
        keys.dedup();
        for (d, e) in keys {
            let a = self.terms.get(&(d, e)).cloned().unwrap_or_else(BigInt::zero);
            let b = other.terms.get(&(d, e)).cloned().unwrap_or_else(BigInt::zero);
            if a != b {
                first_mismatch = Some((e, a, b));
                break;
            }
        }
        Ok(MComparison { equal: first_mismatch.is_none(), compared_order, first_mismatch })
    }

    pub fn eq_to_min_order(&self, other: &MSeries) -> Result<bool> {
        Ok(self.compare(other)?.equal)
    }

    pub fn to_json(&self) -> Value {
        let names = ["u", "v", "w"];
        let mut rows: Vec<(Exps, String)> = self
            .terms
            .iter()
            .map(|((_, e), c)| (*e, c.to_string()))
            .collect();
        rows.sort();
        json!({
            "vars": names[..self.nvars],
            "order": self.order,
            "weights": self.weights,
            "terms": rows
                .into_iter()
                .map(|(e, c)| {
                    let mut row: Vec<Value> =
                        e[..self.nvars].iter().map(|&x| json!(x)).collect();
                    row.push(json!(c));
                    Value::Array(row)
                })
                .collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(nvars: usize, weights: &[i64], order: i64, terms: &[(&[i64], i64)]) -> MSeries {
        let mut s = MSeries::new(nvars, weights, order);
        for &(e, c) in terms {
            s.add_term(e, BigInt::from(c));
        }
        s
    }

    /// Brute-force oracle: multiply two exponent->coefficient lists
    /// directly and drop everything beyond the weighted order.
    fn naive_mul(
        a: &[(&[i64], i64)],
        b: &[(&[i64], i64)],
        weights: &[i64],
        order: i64,
    ) -> BTreeMap<Vec<i64>, i64> {
        let mut out = BTreeMap::new();
        for &(ea, ca) in a {
            for &(eb, cb) in b {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let deg: i64 = e.iter().zip(weights).map(|(&x, &w)| x * w).sum();
                if deg <= order {
                    *out.entry(e).or_insert(0) += ca * cb;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    #[test]
    fn truncation_drops_and_hides() {
        let w = [1, 1, 1];
        let mut s = MSeries::new(3, &w, 4);
        s.add_term(&[4, 1, 0], BigInt::one()); // degree 5 > 4: dropped
        s.add_term(&[2, 1, 1], BigInt::from(3));
        assert_eq!(s.coefficient(&[2, 1, 1]), Some(BigInt::from(3)));
        assert_eq!(s.coefficient(&[4, 1, 0]), None);
        assert_eq!(s.coefficient(&[1, 1, 1]), Some(BigInt::zero()));
        assert_eq!(s.term_count(), 1);
    }

    #[test]
    fn mul_matches_naive_oracle() {
        let w = [1, 2, 1];
        let a_terms: &[(&[i64], i64)] = &[(&[0, 0, 0], 1), (&[1, 0, 0], 2), (&[0, 1, 0], -1), (&[0, 0, 3], 5)];
        let b_terms: &[(&[i64], i64)] = &[(&[0, 0, 0], 1), (&[2, 0, 0], 1), (&[0, 1, 1], 4)];
        let a = poly(3, &w, 6, a_terms);
        let b = poly(3, &w, 6, b_terms);
        let ab = a.mul(&b).unwrap();
        let oracle = naive_mul(a_terms, b_terms, &w, 6);
        for (e, c) in &oracle {
            assert_eq!(ab.coefficient(e), Some(BigInt::from(*c)), "at {e:?}");
        }
        assert_eq!(ab.term_count(), oracle.len());
    }

    #[test]
    fn incompatible_operands_are_rejected() {
        let a = MSeries::one(3, &[1, 1, 1], 5);
        let b = MSeries::one(3, &[4, 1, 1], 5);
        assert!(matches!(a.mul(&b), Err(Error::IncompatibleTruncation(_))));
        let c = MSeries::one(2, &[1, 1], 5);
        assert!(matches!(a.add(&c), Err(Error::IncompatibleTruncation(_))));
        let mut d = MSeries::new_with_negative_exponents(3, &[1, 1, 1], 5);
        d.add_term(&[0, 0, 0], BigInt::one());
        assert!(matches!(a.add(&d), Err(Error::IncompatibleTruncation(_))));
    }

    #[test]
    fn invert_round_trips() {
        let w = [1, 1, 1];
        let a = poly(
            3,
            &w,
            8,
            &[(&[0, 0, 0], 1), (&[1, 0, 0], -2), (&[0, 1, 0], 1), (&[1, 1, 1], 3)],
        );
        let inv = a.invert().unwrap();
        let prod = a.mul(&inv).unwrap();
        assert!(prod.eq_to_min_order(&MSeries::one(3, &w, 8)).unwrap());

        let neg_unit = poly(3, &w, 6, &[(&[0, 0, 0], -1), (&[2, 0, 1], 7)]);
        let prod = neg_unit.mul(&neg_unit.invert().unwrap()).unwrap();
        assert!(prod.eq_to_min_order(&MSeries::one(3, &w, 6)).unwrap());
    }

    #[test]
    fn invert_requires_unit_constant_term() {
        let a = poly(3, &[1, 1, 1], 4, &[(&[0, 0, 0], 2)]);
        assert!(matches!(a.invert(), Err(Error::NonUnitConstantTerm(_))));
        let b = poly(3, &[1, 1, 1], 4, &[(&[1, 0, 0], 1)]);
        assert!(matches!(b.invert(), Err(Error::NonUnitConstantTerm(_))));
    }

    #[test]
    fn specialize_is_a_homomorphism_on_examples() {
        let w = [1, 1, 1];
        let a = poly(3, &w, 10, &[(&[0, 0, 0], 1), (&[1, 2, 0], 3), (&[0, 0, 1], -2)]);
        let b = poly(3, &w, 10, &[(&[0, 0, 0], 1), (&[1, 0, 1], 1)]);
        let s = [2, 1, 3];
        let lhs = a.mul(&b).unwrap().specialize(&s).unwrap();
        let rhs = a.specialize(&s).unwrap().mul(&b.specialize(&s).unwrap());
        assert!(lhs.eq_to_min_order(&rhs));
    }

    #[test]
    fn specialize_order_is_conservative() {
        // weights (1,1,1), order 9, s = (4,1,1): a dropped degree-10 term
        // could specialize as low as q^10, so exponents <= 9 are complete.
        let s = MSeries::one(3, &[1, 1, 1], 9).specialize(&[4, 1, 1]).unwrap();
        assert_eq!(s.order(), &rint(9));
        // s = (2,3,3): minimal ratio 2, bound 20, so order 19.
        let s = MSeries::one(3, &[1, 1, 1], 9).specialize(&[2, 3, 3]).unwrap();
        assert_eq!(s.order(), &rint(19));
        // matching weights keep the order.
        let s = MSeries::one(3, &[4, 1, 1], 21).specialize(&[4, 1, 1]).unwrap();
        assert_eq!(s.order(), &rint(21));
    }

    #[test]
    fn specialization_weights_are_validated() {
        let a = MSeries::one(3, &[1, 1, 1], 5);
        assert!(a.specialize(&[1, 0, 1]).is_err());
        assert!(a.specialize(&[1, 1]).is_err());
    }

    #[test]
    fn collect_degree_zero_keeps_the_diagonal() {
        let w = [1, 1, 1];
        let mut s = MSeries::new(3, &w, 9);
        s.add_term(&[0, 0, 0], BigInt::one());
        s.add_term(&[1, 1, 1], BigInt::from(5));
        s.add_term(&[2, 1, 1], BigInt::from(7)); // u^2 v w: residual v^-1 w^-1
        s.add_term(&[2, 2, 2], BigInt::from(3));
        let d = s.collect_degree_zero().unwrap();
        assert_eq!(d.order(), &rint(3));
        assert_eq!(d.coefficient_int(0), Some(BigInt::one()));
        assert_eq!(d.coefficient_int(1), Some(BigInt::from(5)));
        assert_eq!(d.coefficient_int(2), Some(BigInt::from(3)));
        assert_eq!(d.coefficient_int(3), Some(BigInt::zero()));
        assert_eq!(d.coefficient_int(4), None);
    }

    #[test]
    fn projection_sums_first_variable_slices() {
        let w = [1, 1, 1];
        let mut s = MSeries::new(3, &w, 9);
        s.add_term(&[0, 0, 0], BigInt::one());
        s.add_term(&[1, 0, 2], BigInt::from(2));
        s.add_term(&[1, 3, 0], BigInt::from(4));
        s.add_term(&[2, 0, 0], BigInt::from(9));
        let p = s.project_first_var(2);
        assert_eq!(p.coefficient_int(0), Some(BigInt::from(1)));
        assert_eq!(p.coefficient_int(1), Some(BigInt::from(6)));
        assert_eq!(p.coefficient_int(2), Some(BigInt::from(9)));
        assert_eq!(p.coefficient_int(3), None);
    }

    #[test]
    fn negative_exponent_mode_tracks_degrees() {
        let w = [1, 1, 1];
        let mut s = MSeries::new_with_negative_exponents(3, &w, 6);
        s.add_term(&[3, -3, 1], BigInt::one()); // degree 1
        s.add_term(&[0, 2, -1], BigInt::from(4)); // degree 1
        assert_eq!(s.coefficient(&[3, -3, 1]), Some(BigInt::one()));
        assert!(!s.support_in_cone());
        let t = s.mul(&s).unwrap();
        assert_eq!(t.coefficient(&[3, -1, 0]), Some(BigInt::from(8)));
        assert_eq!(t.coefficient(&[6, -6, 2]), Some(BigInt::one()));
    }

    #[test]
    fn comparison_respects_smaller_order() {
        let w = [1, 1, 1];
        let a = poly(3, &w, 8, &[(&[0, 0, 0], 1), (&[2, 2, 2], 5)]);
        let b = poly(3, &w, 4, &[(&[0, 0, 0], 1)]);
        let cmp = a.compare(&b).unwrap();
        assert!(cmp.equal);
        assert_eq!(cmp.compared_order, 4);
        let c = poly(3, &w, 4, &[(&[0, 0, 0], 1), (&[1, 0, 0], 2)]);
        let cmp = a.compare(&c).unwrap();
        assert!(!cmp.equal);
        assert_eq!(cmp.first_mismatch.unwrap().0, [1, 0, 0]);
    }

    #[test]
    fn json_terms_are_lexicographically_sorted() {
        let w = [1, 1, 1];
        let s = poly(3, &w, 5, &[(&[0, 1, 0], 2), (&[0, 0, 2], 3), (&[1, 0, 0], 1)]);
        let j = s.to_json();
        assert_eq!(j["weights"], json!([1, 1, 1]));
        assert_eq!(
            j["terms"],
            json!([[0, 0, 2, "3"], [0, 1, 0, "2"], [1, 0, 0, "1"]])
        );
    }
}
