//! Rational series `Σ coeff · Σ_{k ∈ Δ ∩ N^I_{>0}} L^{-v(k)} T^{ℓ(k)}` as formal
//! sums of cone terms.

use std::fmt;

use super::cone::{Cone, Constraint, LinearForm, Named, Relation};
use super::fm::{self, Rel, Row};
use super::scan::FiberScanner;
use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, MotivicClass};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeTerm {
    coeff: MotivicClass,
    cone: Cone,
    degree: LinearForm,
    weight: LinearForm,
}

impl ConeTerm {
    /// Fails with `NotSummable` unless `degree` is positive on `Δ̄ \ {0}`.
    pub fn new(
        coeff: MotivicClass,
        cone: Cone,
        degree: LinearForm,
        weight: LinearForm,
    ) -> Result<Self> {
        let n = cone.n_vars();
        for f in [&degree, &weight] {
            if f.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: f.len(),
                });
            }
        }
        if !degree_is_positive(&cone, &degree) {
            return Err(Error::NotSummable);
        }
        Ok(Self {
            coeff,
            cone,
            degree,
            weight,
        })
    }

    /// `coeff · Π_i L^{-w_i} T^{N_i} / (1 - L^{-w_i} T^{N_i})` over the open orthant.
    pub fn orthant(coeff: MotivicClass, degree: Vec<i64>, weight: Vec<i64>) -> Result<Self> {
        let cone = Cone::orthant(degree.len());
        Self::new(coeff, cone, LinearForm(degree), LinearForm(weight))
    }

    pub fn coeff(&self) -> &MotivicClass {
        &self.coeff
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn degree(&self) -> &LinearForm {
        &self.degree
    }

    pub fn weight(&self) -> &LinearForm {
        &self.weight
    }

    fn with_coeff(&self, coeff: MotivicClass) -> Self {
        Self {
            coeff,
            ..self.clone()
        }
    }

    /// `Σ_{k ∈ Δ, ℓ(k) = n} L^{-v(k)}` as a Laurent polynomial.
    pub fn fiber_sum(&self, n: i64) -> LaurentPoly {
        LaurentPoly::from_terms(FiberScanner::new(&self.cone, &self.degree).weights(n, &self.weight))
    }
}

/// `ℓ > 0` on `Δ̄ \ {0}`, decided as infeasibility of
/// `Δ̄ ∧ ℓ ≤ 0 ∧ Σ k_i > 0` in the closed orthant. Empty cones pass.
pub(crate) fn degree_is_positive(cone: &Cone, degree: &LinearForm) -> bool {
    if !cone.is_feasible() {
        return true;
    }
    let n = cone.n_vars();
    let mut rows = cone.closure_rows();
    rows.push(Row::new(
        degree.coeffs().iter().map(|&c| -(c as i128)).collect(),
        0,
        Rel::Ge,
    ));
    rows.push(Row::new(vec![1; n], 0, Rel::Gt));
    !fm::is_feasible(n, rows)
}

impl fmt::Display for ConeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) · Σ_{{k∈Δ}} L^{{-({})}} T^{{{}}}, Δ = {}",
            self.coeff,
            Named(&self.weight, self.cone.vars()),
            Named(&self.degree, self.cone.vars()),
            self.cone
        )
    }
}

/// A formal sum of cone terms with coefficients over a common base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSeries {
    base: String,
    terms: Vec<ConeTerm>,
}

impl ConeSeries {
    pub fn empty(base: impl Into<String>) -> Self {
        Self {
            base: base.into(),
            terms: Vec::new(),
        }
    }

    pub fn from_terms(base: impl Into<String>, terms: Vec<ConeTerm>) -> Result<Self> {
        let base = base.into();
        for t in &terms {
            if t.coeff.base() != base {
                return Err(Error::BaseMismatch {
                    left: base,
                    right: t.coeff.base().to_string(),
                });
            }
        }
        Ok(Self { base, terms })
    }

    /// `L^a T^b / (1 - L^a T^b)` with coefficient `[pt]` over `base`.
    pub fn geom_over(base: impl Into<String>, a: i64, b: i64) -> Result<Self> {
        if b <= 0 {
            return Err(Error::InvalidDegree(b));
        }
        let base = base.into();
        let term = ConeTerm::orthant(MotivicClass::one(base.clone()), vec![b], vec![-a])?;
        Ok(Self {
            base,
            terms: vec![term],
        })
    }

    /// [`ConeSeries::geom_over`] with base `k`.
    pub fn geom(a: i64, b: i64) -> Result<Self> {
        Self::geom_over("k", a, b)
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn terms(&self) -> &[ConeTerm] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_base(&self, other: &Self) -> Result<()> {
        if self.base != other.base {
            return Err(Error::BaseMismatch {
                left: self.base.clone(),
                right: other.base.clone(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(Self {
            base: self.base.clone(),
            terms,
        })
    }

    /// Multiply every coefficient by a Laurent polynomial.
    pub fn scale(&self, k: &LaurentPoly) -> Self {
        Self {
            base: self.base.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| t.with_coeff(t.coeff.scale(k)))
                .collect(),
        }
    }

    /// Multiply every coefficient by a class over the same base.
    pub fn scale_class(&self, c: &MotivicClass) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(t.with_coeff(t.coeff.try_mul(c)?)))
            .collect::<Result<_>>()?;
        if c.base() != self.base {
            return Err(Error::BaseMismatch {
                left: self.base.clone(),
                right: c.base().to_string(),
            });
        }
        Ok(Self {
            base: self.base.clone(),
            terms,
        })
    }

    pub fn push(&self, new_base: &str) -> Self {
        Self {
            base: new_base.to_string(),
            terms: self
                .terms
                .iter()
                .map(|t| t.with_coeff(t.coeff.push(new_base)))
                .collect(),
        }
    }

    /// Cauchy product in `T`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for p in &self.terms {
            for q in &other.terms {
                terms.push(ConeTerm {
                    coeff: p.coeff.try_mul(&q.coeff)?,
                    cone: p.cone.product(&q.cone),
                    degree: p.degree.direct_sum(&q.degree),
                    weight: p.weight.direct_sum(&q.weight),
                });
            }
        }
        Ok(Self {
            base: self.base.clone(),
            terms,
        })
    }

    /// Coefficientwise product, realised on the fiber cones
    /// `{(k, k') ∈ Δ × Δ' : ℓ(k) = ℓ'(k')}`.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for p in &self.terms {
            for q in &other.terms {
                let n2 = q.cone.n_vars();
                let fiber = p.degree.direct_sum(&q.degree.neg());
                let cone = p
                    .cone
                    .product(&q.cone)
                    .with_constraint(Constraint::new(fiber, Relation::Zero))?;
                // ℓ ⊕ 0 stays positive: ℓ(k) = 0 on the closure forces k = 0, then ℓ'(k') = 0.
                terms.push(ConeTerm {
                    coeff: p.coeff.try_mul(&q.coeff)?,
                    cone,
                    degree: p.degree.pad(0, n2),
                    weight: p.weight.direct_sum(&q.weight),
                });
            }
        }
        Ok(Self {
            base: self.base.clone(),
            terms,
        })
    }

    /// Coefficient of `T^n`.
    pub fn coefficient(&self, n: i64) -> MotivicClass {
        let mut out = MotivicClass::zero(self.base.clone());
        if n < 1 {
            return out;
        }
        for t in &self.terms {
            let poly = t.fiber_sum(n);
            if !poly.is_zero() {
                out = out
                    .try_add(&t.coeff.scale(&poly))
                    .expect("terms share the series base");
            }
        }
        out
    }

    /// Coefficients of `T^n` for `n` in `range`, reusing each term's projection.
    pub fn coefficients(&self, range: std::ops::RangeInclusive<i64>) -> Vec<MotivicClass> {
        let mut out: Vec<MotivicClass> = range
            .clone()
            .map(|_| MotivicClass::zero(self.base.clone()))
            .collect();
        for t in &self.terms {
            let scanner = FiberScanner::new(&t.cone, &t.degree);
            for (slot, n) in out.iter_mut().zip(range.clone()) {
                if n < 1 {
                    continue;
                }
                let poly = LaurentPoly::from_terms(scanner.weights(n, &t.weight));
                if !poly.is_zero() {
                    *slot = slot
                        .try_add(&t.coeff.scale(&poly))
                        .expect("terms share the series base");
                }
            }
        }
        out
    }

    /// `lim_{T→∞}`: each term contributes `coeff · χ_c(Δ)`.
    pub fn limit(&self) -> MotivicClass {
        let mut out = MotivicClass::zero(self.base.clone());
        for t in &self.terms {
            let chi = t.cone.chi();
            if chi != 0 {
                out = out
                    .try_add(&t.coeff.scale(&LaurentPoly::constant(chi)))
                    .expect("terms share the series base");
            }
        }
        out
    }
}

impl fmt::Display for ConeSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt() -> MotivicClass {
        MotivicClass::one("k")
    }

    #[test]
    fn geom_coefficients() {
        let g = ConeSeries::geom(2, 3).unwrap();
        assert_eq!(g.coefficient(6), MotivicClass::lefschetz_pow("k", 4));
        assert!(g.coefficient(5).is_zero());
        assert_eq!(g.limit(), pt().neg());
        assert_eq!(ConeSeries::geom(1, 0), Err(Error::InvalidDegree(0)));
    }

    #[test]
    fn geom_limits() {
        for (a, b) in [(3, 1), (-2, 2), (0, 5)] {
            assert_eq!(ConeSeries::geom(a, b).unwrap().limit(), pt().neg());
        }
    }

    #[test]
    fn product_of_all_ones_series() {
        let g = ConeSeries::geom(0, 1).unwrap();
        let p = g.mul(&g).unwrap();
        for n in 1..12 {
            assert_eq!(p.coefficient(n), MotivicClass::from_poly("k", LaurentPoly::constant(n - 1)));
        }
        assert_eq!(p.limit(), pt());
    }

    #[test]
    fn hadamard_square_of_geom() {
        let g = ConeSeries::geom(1, 1).unwrap();
        let h = g.hadamard(&g).unwrap();
        let g2 = ConeSeries::geom(2, 1).unwrap();
        for n in 1..10 {
            assert_eq!(h.coefficient(n), g2.coefficient(n));
        }
        assert_eq!(h.limit(), pt().neg());
    }

    #[test]
    fn empty_operands() {
        let g = ConeSeries::geom(1, 1).unwrap();
        let e = ConeSeries::empty("k");
        assert!(g.mul(&e).unwrap().is_empty());
        assert!(g.hadamard(&e).unwrap().is_empty());
        assert_eq!(g.add(&e).unwrap(), g);
        assert!(e.coefficient(3).is_zero());
    }

    #[test]
    fn cancellation() {
        let g = ConeSeries::geom(1, 1).unwrap();
        let s = g.add(&g.scale(&LaurentPoly::constant(-1))).unwrap();
        for n in 1..6 {
            assert!(s.coefficient(n).is_zero());
        }
    }

    #[test]
    fn non_positive_degree_is_rejected() {
        let cone = Cone::orthant(2);
        let r = ConeTerm::new(pt(), cone.clone(), LinearForm(vec![1, 0]), LinearForm::zeros(2));
        assert_eq!(r, Err(Error::NotSummable));
        // restricting to k1 <= k0 makes k0 a valid degree
        let c = cone.with_constraint(Constraint::ge(vec![1, -1])).unwrap();
        assert!(ConeTerm::new(pt(), c, LinearForm(vec![1, 0]), LinearForm::zeros(2)).is_ok());
    }

    #[test]
    fn half_space_term_has_zero_limit() {
        let c = Cone::orthant(2).with_constraint(Constraint::ge(vec![1, -1])).unwrap();
        let t = ConeTerm::new(pt(), c, LinearForm(vec![1, 1]), LinearForm::zeros(2)).unwrap();
        let s = ConeSeries::from_terms("k", vec![t]).unwrap();
        assert!(s.limit().is_zero());
    }

    #[test]
    fn batch_and_single_coefficients_agree() {
        let g = ConeSeries::geom(1, 2).unwrap();
        let p = g.mul(&ConeSeries::geom(-1, 3).unwrap()).unwrap();
        let batch = p.coefficients(1..=15);
        for (i, c) in batch.iter().enumerate() {
            assert_eq!(*c, p.coefficient(i as i64 + 1));
        }
    }
}
