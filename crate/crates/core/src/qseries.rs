//! Truncated power series in one variable `q` with exact integer
//! coefficients and fractional exponents.
//!
//! A [`QSeries`] stores coefficients on the exponent lattice
//! `shift + j/grain` for `j = 0, 1, 2, ...` together with a truncation
//! `order`: coefficients at exponents `> order` are *unknown*, not zero,
//! and accessors refuse to report them. Binary operations track how far
//! the result is trustworthy (`min` of the input orders for addition, the
//! sharper `min(a.order + b.shift, b.order + a.shift)` for products).
//!
//! [`ProductSpec`] describes products of congruence-filtered factors
//! `prod (1 - q^n)^e` over `n` in fixed residue classes, the shape in
//! which all specialized character formulas in this crate arrive.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rat::{format_rat, rat, rint, Rat};

/// Dense truncated series on the lattice `shift + j/grain`.
#[derive(Debug, Clone)]
pub struct QSeries {
    grain: u32,
    shift: Rat,
    order: Rat,
    coeffs: Vec<BigInt>,
}

/// Outcome of a coefficientwise comparison of two series up to the smaller
/// truncation order.
#[derive(Debug, Clone)]
pub struct SeriesComparison {
    pub equal: bool,
    pub compared_order: Rat,
    /// Exponent and both coefficients at the first differing lattice point.
    pub first_mismatch: Option<(Rat, BigInt, BigInt)>,
    pub max_abs_diff: BigInt,
}

fn stored_len(grain: u32, shift: &Rat, order: &Rat) -> usize {
    let span = (order - shift) * rint(grain as i64);
    if span < rint(0) {
        return 0;
    }
    (crate::rat::floor_i64(&span) + 1) as usize
}

impl QSeries {
    /// Series with the given lattice data. `coeffs` must already have the
    /// stored length implied by `(grain, shift, order)`.
    pub fn from_parts(grain: u32, shift: Rat, order: Rat, coeffs: Vec<BigInt>) -> Self {
        assert!(grain >= 1, "grain must be positive");
        assert_eq!(
            coeffs.len(),
            stored_len(grain, &shift, &order),
            "coefficient count does not match the truncation order"
        );
        QSeries { grain, shift, order, coeffs }
    }

    /// Integer-exponent series `c[0] + c[1] q + ...` known up to `q^order`.
    pub fn from_ints(coeffs: &[i64], order: i64) -> Self {
        let mut v: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        assert!(coeffs.len() as i64 <= order + 1, "more coefficients than the order admits");
        v.resize((order + 1) as usize, BigInt::zero());
        QSeries::from_parts(1, rint(0), rint(order), v)
    }

    /// The zero series, known up to `q^order`.
    pub fn zero(order: i64) -> Self {
        QSeries::from_ints(&[], order)
    }

    /// The constant series 1, known up to `q^order`.
    pub fn one(order: i64) -> Self {
        QSeries::from_ints(&[1], order)
    }

    /// `c * q^exp`, known up to `order`.
    pub fn monomial(exp: Rat, coeff: BigInt, order: Rat) -> Self {
        let len = stored_len(1, &exp, &order);
        let mut coeffs = vec![BigInt::zero(); len];
        if len > 0 {
            coeffs[0] = coeff;
        } else {
            assert!(coeff.is_zero(), "monomial exponent lies beyond the order");
        }
        QSeries { grain: 1, shift: exp, order, coeffs }
    }

    pub fn grain(&self) -> u32 {
        self.grain
    }

    pub fn shift(&self) -> &Rat {
        &self.shift
    }

    pub fn order(&self) -> &Rat {
        &self.order
    }

    /// Exponent of the stored slot `j`.
    pub fn exponent_at(&self, j: usize) -> Rat {
        &self.shift + rat(j as i64, self.grain as i64)
    }

    /// Coefficient at exponent `exp`. Returns `None` beyond the truncation
    /// order (the value is unknown there, never zero by fiat) and `Some(0)`
    /// at known-zero exponents off the lattice or below the shift.
    pub fn coefficient(&self, exp: &Rat) -> Option<BigInt> {
        if exp > &self.order {
            return None;
        }
        let t = (exp - &self.shift) * rint(self.grain as i64);
        if t < rint(0) || !t.is_integer() {
            return Some(BigInt::zero());
        }
        let j = t.to_integer().to_usize().expect("index overflow");
        Some(self.coeffs.get(j).cloned().unwrap_or_else(BigInt::zero))
    }

    /// Coefficient at the integer exponent `n`.
    pub fn coefficient_int(&self, n: i64) -> Option<BigInt> {
        self.coefficient(&rint(n))
    }

    /// Known `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn support(&self) -> Vec<(Rat, BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (self.exponent_at(j), c.clone()))
            .collect()
    }

    /// All stored `(exponent, coefficient)` pairs, including zeros.
    pub fn entries(&self) -> Vec<(Rat, BigInt)> {
        (0..self.coeffs.len()).map(|j| (self.exponent_at(j), self.coeffs[j].clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Mantissa polynomial `sum coeffs[j] t^j` evaluated exactly at `t`.
    /// The shift is ignored; rebase both sides first when comparing.
    pub fn eval_mantissa(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + Rat::from_integer(c.clone());
        }
        acc
    }

    /// Common lattice for `self` and `other`: a grain both lattices embed
    /// into, with the shift difference an exact lattice step count.
    fn common_grain(&self, other: &QSeries) -> u32 {
        let mut g = (self.grain as u64).lcm(&(other.grain as u64));
        let diff = &self.shift - &other.shift;
        let den = diff.denom().to_u64().expect("shift denominator overflow");
        g = g.lcm(&den);
        u32::try_from(g).expect("grain overflow")
    }

    /// Coefficients rebased onto `(grain, base_shift)` covering exponents
    /// up to `order`. `grain` must be a multiple of `self.grain` and
    /// `base_shift` must differ from `self.shift` by a lattice step.
    fn rebase(&self, grain: u32, base_shift: &Rat, order: &Rat) -> Vec<BigInt> {
        let len = stored_len(grain, base_shift, order);
        let mut out = vec![BigInt::zero(); len];
        let stride = (grain / self.grain) as usize;
        let off = (&self.shift - base_shift) * rint(grain as i64);
        assert!(off.is_integer() && !off.is_negative(), "shift not on the common lattice");
        let off = off.to_integer().to_usize().expect("offset overflow");
        for (j, c) in self.coeffs.iter().enumerate() {
            let idx = off + j * stride;
            if idx >= len {
                break;
            }
            out[idx] = c.clone();
        }
        out
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let grain = self.common_grain(other);
        let shift = self.shift.clone().min(other.shift.clone());
        let order = self.order.clone().min(other.order.clone());
        let mut coeffs = self.rebase(grain, &shift, &order);
        for (j, c) in other.rebase(grain, &shift, &order).into_iter().enumerate() {
            coeffs[j] += c;
        }
        QSeries { grain, shift, order, coeffs }
    }

    pub fn neg(&self) -> QSeries {
        let mut s = self.clone();
        for c in &mut s.coeffs {
            *c = -std::mem::take(c);
        }
        s
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, k: &BigInt) -> QSeries {
        let mut s = self.clone();
        for c in &mut s.coeffs {
            *c = &*c * k;
        }
        s
    }

    /// Product truncated at `min(a.order + b.shift, b.order + a.shift)`:
    /// an unknown tail coefficient of one factor first influences the
    /// product at its own exponent plus the other factor's leading shift.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        // Plain lcm here: product lattices never need shift folding, the
        // shifts add instead of competing.
        let grain = u32::try_from((self.grain as u64).lcm(&(other.grain as u64)))
            .expect("grain overflow");
        let shift = &self.shift + &other.shift;
        let order = (&self.order + &other.shift).min(&other.order + &self.shift);
        let len = stored_len(grain, &shift, &order);
        // Rebasing against its own shift scatters each factor onto the
        // common grain, so plain index sums convolve correctly below.
        let a = self.rebase(grain, &self.shift, &self.order);
        let b = other.rebase(grain, &other.shift, &other.order);
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() || i >= len {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !cb.is_zero() {
                    coeffs[i + j] += ca * cb;
                }
            }
        }
        QSeries { grain, shift, order, coeffs }
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, n: u32) -> QSeries {
        let mut acc: Option<QSeries> = None;
        let mut base = self.clone();
        let mut n = n;
        if n == 0 {
            // Keep the truncation the caller would get from multiplying:
            // the empty product is exact, so only the caller's order matters.
            return QSeries::from_parts(
                self.grain,
                rint(0),
                self.order.clone(),
                {
                    let mut v = vec![BigInt::zero(); stored_len(self.grain, &rint(0), &self.order)];
                    if !v.is_empty() {
                        v[0] = BigInt::one();
                    }
                    v
                },
            );
        }
        while n > 0 {
            if n & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc.unwrap()
    }

    /// Multiplicative inverse. Requires a unit leading coefficient
    /// (`+1` or `-1` at the shift exponent).
    pub fn invert(&self) -> Result<QSeries> {
        let lead = self.coeffs.first().cloned().unwrap_or_else(BigInt::zero);
        if !(lead == BigInt::one() || lead == -BigInt::one()) {
            return Err(Error::NonUnitLeadingCoefficient(lead.to_string()));
        }
        let n = self.coeffs.len();
        let mut inv = vec![BigInt::zero(); n];
        inv[0] = lead.clone();
        for j in 1..n {
            let mut acc = BigInt::zero();
            for i in 1..=j {
                if !self.coeffs[i].is_zero() && !inv[j - i].is_zero() {
                    acc += &self.coeffs[i] * &inv[j - i];
                }
            }
            // lead is self-inverse, so dividing by it is multiplying by it.
            inv[j] = -(&lead * acc);
        }
        let shift = -self.shift.clone();
        let order = &self.order - rint(2) * &self.shift;
        Ok(QSeries { grain: self.grain, shift, order, coeffs: inv })
    }

    /// Exponent substitution `q -> q^p` for positive rational `p`.
    pub fn substitute_power(&self, p: &Rat) -> Result<QSeries> {
        if !p.is_positive() {
            return Err(Error::InvalidInput(format!(
                "substitute_power needs a positive exponent, got {}",
                format_rat(p)
            )));
        }
        let pn = p.numer().to_u64().expect("substitution numerator overflow");
        let pd = p.denom().to_u64().expect("substitution denominator overflow");
        let g = pn.gcd(&(pd * self.grain as u64));
        let grain = u32::try_from(pd * self.grain as u64 / g).expect("grain overflow");
        let stride = (pn / g) as usize;
        let shift = p * &self.shift;
        let order = p * &self.order;
        let len = stored_len(grain, &shift, &order);
        let mut coeffs = vec![BigInt::zero(); len];
        for (j, c) in self.coeffs.iter().enumerate() {
            // Every stored exponent stays within the rescaled order.
            let idx = j * stride;
            assert!(idx < len, "substitution index out of range");
            coeffs[idx] = c.clone();
        }
        Ok(QSeries { grain, shift, order, coeffs })
    }

    /// Multiplication by the monomial `q^r`: shifts every exponent and the
    /// order by `r` without touching coefficients.
    pub fn shift_exponent(&self, r: &Rat) -> QSeries {
        QSeries {
            grain: self.grain,
            shift: &self.shift + r,
            order: &self.order + r,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Restriction to exponents `<= order`. The new order may not exceed
    /// the known range.
    pub fn truncate(&self, order: &Rat) -> QSeries {
        assert!(order <= &self.order, "cannot extend a series by truncating");
        let len = stored_len(self.grain, &self.shift, order);
        QSeries {
            grain: self.grain,
            shift: self.shift.clone(),
            order: order.clone(),
            coeffs: self.coeffs[..len.min(self.coeffs.len())].to_vec(),
        }
    }

    /// Coefficientwise comparison up to the smaller order.
    pub fn compare(&self, other: &QSeries) -> SeriesComparison {
        let grain = self.common_grain(other);
        let compared_order = self.order.clone().min(other.order.clone());
        let shift = self.shift.clone().min(other.shift.clone());
        let a = self.rebase(grain, &shift, &compared_order);
        let b = other.rebase(grain, &shift, &compared_order);
        let mut first_mismatch = None;
        let mut max_abs_diff = BigInt::zero();
        for j in 0..a.len().max(b.len()) {
            let ca = a.get(j).cloned().unwrap_or_else(BigInt::zero);
            let cb = b.get(j).cloned().unwrap_or_else(BigInt::zero);
            if ca != cb {
                let diff = (&ca - &cb).abs();
                if first_mismatch.is_none() {
                    let exp = &shift + rat(j as i64, grain as i64);
                    first_mismatch = Some((exp, ca, cb));
                }
                if diff > max_abs_diff {
                    max_abs_diff = diff;
                }
            }
        }
        SeriesComparison {
            equal: first_mismatch.is_none(),
            compared_order,
            first_mismatch,
            max_abs_diff,
        }
    }

    /// True when all coefficients agree up to the smaller order.
    pub fn eq_to_min_order(&self, other: &QSeries) -> bool {
        self.compare(other).equal
    }

    pub fn to_json(&self) -> Value {
        json!({
            "grain": self.grain,
            "shift": format_rat(&self.shift),
            "order": format_rat(&self.order),
            "coefficients": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    /// CSV rows `exponent,coefficient`, one stored lattice point per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("exponent,coefficient\n");
        for (e, c) in self.entries() {
            out.push_str(&format!("{},{}\n", format_rat(&e), c));
        }
        out
    }
}

impl std::fmt::Display for QSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (e, c) in self.support() {
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            }
            let a = c.abs();
            if e.is_zero() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "q^({})", format_rat(&e))?;
            } else {
                write!(f, "{a} q^({})", format_rat(&e))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^({}))", format_rat(&(self.order.clone() + rat(1, self.grain as i64))))
    }
}

impl std::ops::Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries::add(self, rhs)
    }
}

impl std::ops::Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries::sub(self, rhs)
    }
}

impl std::ops::Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        QSeries::mul(self, rhs)
    }
}

impl std::ops::Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries::neg(self)
    }
}

/// One congruence-filtered factor `prod_{n >= 1, n mod modulus in residues}
/// (1 - q^n)^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductFactor {
    pub modulus: u32,
    pub residues: BTreeSet<u32>,
    pub exponent: i32,
}

impl ProductFactor {
    pub fn new(modulus: u32, residues: impl IntoIterator<Item = u32>, exponent: i32) -> Self {
        let residues: BTreeSet<u32> = residues.into_iter().collect();
        assert!(modulus >= 1, "modulus must be positive");
        assert!(!residues.is_empty(), "residue set must be nonempty");
        assert!(residues.iter().all(|&r| r < modulus), "residues must lie in [0, modulus)");
        assert!(exponent != 0, "factor exponent must be nonzero");
        ProductFactor { modulus, residues, exponent }
    }
}

/// A finite list of congruence factors, expanded jointly.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProductSpec {
    pub factors: Vec<ProductFactor>,
}

impl ProductSpec {
    pub fn new(factors: Vec<ProductFactor>) -> Self {
        ProductSpec { factors }
    }

    /// Expands the product to `q^order` (grain 1, shift 0).
    pub fn expand(&self, order: i64) -> QSeries {
        assert!(order >= 0, "order must be nonnegative");
        let n_max = order as usize;
        let mut c = vec![BigInt::zero(); n_max + 1];
        c[0] = BigInt::one();
        for f in &self.factors {
            for n in 1..=n_max {
                if !f.residues.contains(&((n as u64 % f.modulus as u64) as u32)) {
                    continue;
                }
                for _ in 0..f.exponent.unsigned_abs() {
                    if f.exponent < 0 {
                        // multiply by 1/(1 - q^n): c[j] += c[j - n], ascending
                        for j in n..=n_max {
                            let add = c[j - n].clone();
                            c[j] += add;
                        }
                    } else {
                        // multiply by (1 - q^n): c[j] -= c[j - n], descending
                        for j in (n..=n_max).rev() {
                            let sub = c[j - n].clone();
                            c[j] -= sub;
                        }
                    }
                }
            }
        }
        QSeries::from_parts(1, rint(0), rint(order), c)
    }

    pub fn to_json(&self) -> Value {
        json!(self
            .factors
            .iter()
            .map(|f| {
                json!({
                    "modulus": f.modulus,
                    "residues": f.residues.iter().collect::<Vec<_>>(),
                    "exponent": f.exponent,
                })
            })
            .collect::<Vec<_>>())
    }
}

/// `prod_{n = +-1 mod 6} (1 - q^n)^{-1}`, expanded to `q^order`. The inverse
/// Euler-type factor that converts between the two specialized character
/// normalizations used throughout this crate.
pub fn p_series(order: i64) -> QSeries {
    p_product_spec().expand(order)
}

/// The [`ProductSpec`] behind [`p_series`].
pub fn p_product_spec() -> ProductSpec {
    ProductSpec::new(vec![ProductFactor::new(6, [1, 5], -1)])
}
