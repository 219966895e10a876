//! The generalized Poincaré series `Σ_n Σ_{m ≤ γn} L^{-ℓ(n,m)} ∫_{X_{n,m}} |ω| T^n`
//! and the volume of `X_{≥γ}`.
//!
//! With auxiliary orders `M_{ij}`, the cone `Δ_I = {k > 0 : min_j M_j·k ≤ γ N·k}`
//! is a union; it is split into the cones `Δ_{I,l}` on which `l` is the first
//! index attaining the minimum.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::cone::{chi_union, Cone, ConeSeries, ConeTerm, Constraint, LinearForm, Relation};
use crate::cone::Named;
use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, MotivicClass};

use super::data::{Gauge, ResolutionData, Stratum};
use super::formulas::compositions;

/// A non-negative rational `q/p` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gamma {
    pub num: i64,
    pub den: i64,
}

impl Gamma {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 || num * den.signum() < 0 {
            return Err(Error::Input(format!("gamma must be a non-negative rational, got {num}/{den}")));
        }
        let g = num.gcd(&den);
        let s = den.signum();
        Ok(Self {
            num: s * num / g,
            den: s * den / g,
        })
    }

    pub fn integer(n: i64) -> Result<Self> {
        Self::new(n, 1)
    }

    /// `m ≤ γ n`, cleared of denominators.
    pub fn admits(&self, n: i64, m: i64) -> bool {
        self.den * m <= self.num * n
    }
}

impl FromStr for Gamma {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Input(format!("cannot parse gamma `{s}`; expected q or q/p"));
        match s.split_once('/') {
            Some((q, p)) => Self::new(
                q.trim().parse().map_err(|_| bad())?,
                p.trim().parse().map_err(|_| bad())?,
            ),
            None => Self::integer(s.trim().parse().map_err(|_| bad())?),
        }
    }
}

impl fmt::Display for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// `ℓ(n, m) = a n + b m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct EllForm {
    pub a: i64,
    pub b: i64,
}

impl EllForm {
    pub const ZERO: EllForm = EllForm { a: 0, b: 0 };

    pub fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn eval(&self, n: i64, m: i64) -> i64 {
        self.a * n + self.b * m
    }

    /// `ℓ ≥ 0` on `{0 ≤ m ≤ γ n}`: checked on the two extreme rays.
    pub fn validate(&self, gamma: Gamma) -> Result<()> {
        let on_m_zero = self.a >= 0;
        let on_m_max = self.a * gamma.den + self.b * gamma.num >= 0;
        if on_m_zero && on_m_max {
            Ok(())
        } else {
            Err(Error::InvalidForm(format!(
                "{self} is negative somewhere on 0 <= m <= {gamma} n"
            )))
        }
    }
}

impl FromStr for EllForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Input(format!("cannot parse ell `{s}`; expected a,b"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        Ok(Self {
            a: a.trim().parse().map_err(|_| bad())?,
            b: b.trim().parse().map_err(|_| bad())?,
        })
    }
}

impl fmt::Display for EllForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = ["n".to_string(), "m".to_string()];
        write!(f, "l(n,m) = {}", Named(&LinearForm(vec![self.a, self.b]), &vars))
    }
}

struct Orders {
    /// `N·k` on `Z^I`.
    n_form: LinearForm,
    /// `M_j·k` on `Z^I`, one per auxiliary function.
    m_forms: Vec<LinearForm>,
}

fn orders_on(data: &ResolutionData, idx: &[usize], r: usize) -> Orders {
    let n_form = LinearForm(idx.iter().map(|&i| data.strata[i].n).collect());
    let m_forms = (0..r)
        .map(|j| {
            LinearForm(
                idx.iter()
                    .map(|&i| data.strata[i].m.as_ref().expect("validated")[j])
                    .collect(),
            )
        })
        .collect();
    Orders { n_form, m_forms }
}

fn vars_of(ids: &[String]) -> Vec<String> {
    ids.iter().map(|id| format!("k_{id}")).collect()
}

/// `q N·k - p M_l·k ≥ 0`
fn gamma_constraint(o: &Orders, gamma: Gamma, l: usize) -> Constraint {
    let form = o.n_form.scale(gamma.num).sub(&o.m_forms[l].scale(gamma.den));
    Constraint::new(form, Relation::NonNegative)
}

fn resolve_subset(data: &ResolutionData, ids: &[&str]) -> Result<(Vec<String>, Vec<usize>)> {
    let mut idx = Vec::new();
    for id in ids {
        idx.push(
            data.index_of(id)
                .ok_or_else(|| Error::Input(format!("unknown stratum `{id}`")))?,
        );
    }
    Ok((ids.iter().map(|s| s.to_string()).collect(), idx))
}

fn delta_cones_for(data: &ResolutionData, gamma: Gamma, ids: &[String], idx: &[usize]) -> Result<Vec<Cone>> {
    let r = data.orders_len()?;
    let o = orders_on(data, idx, r);
    let vars = vars_of(ids);
    (0..r)
        .map(|l| {
            let mut cs = vec![gamma_constraint(&o, gamma, l)];
            for j in 0..r {
                if j == l {
                    continue;
                }
                let diff = o.m_forms[j].sub(&o.m_forms[l]);
                let rel = if j < l { Relation::Positive } else { Relation::NonNegative };
                cs.push(Constraint::new(diff, rel));
            }
            Cone::new(vars.clone(), cs)
        })
        .collect()
}

/// `Δ_{I,1}, ..., Δ_{I,r}` for the subset `ids`.
pub fn delta_cones(data: &ResolutionData, gamma: Gamma, ids: &[&str]) -> Result<Vec<Cone>> {
    data.check()?;
    let (ids, idx) = resolve_subset(data, ids)?;
    delta_cones_for(data, gamma, &ids, &idx)
}

/// The pieces `{q N·k ≥ p M_j·k}` whose union is `Δ_I`.
pub fn delta_union(data: &ResolutionData, gamma: Gamma, ids: &[&str]) -> Result<Vec<Cone>> {
    data.check()?;
    let r = data.orders_len()?;
    let (ids, idx) = resolve_subset(data, ids)?;
    let o = orders_on(data, &idx, r);
    let vars = vars_of(&ids);
    (0..r)
        .map(|j| Cone::new(vars.clone(), vec![gamma_constraint(&o, gamma, j)]))
        .collect()
}

fn l_minus_one(s: &Stratum<'_>) -> LaurentPoly {
    LaurentPoly::l_minus_one_pow(s.idx.len() as u32 - 1)
}

pub fn generalized_poincare(
    data: &ResolutionData,
    gamma: Gamma,
    ell: EllForm,
    gauge: Gauge,
) -> Result<ConeSeries> {
    ell.validate(gamma)?;
    let r = data.orders_len()?;
    let mut terms = Vec::new();
    for s in data.strata_sets()? {
        let o = orders_on(data, &s.idx, r);
        let alphas: Vec<i64> = s.idx.iter().map(|&i| data.alpha(i, gauge)).collect::<Result<_>>()?;
        let coeff = s.class.scale(&l_minus_one(&s)).shift(-(data.d as i64));
        for (l, cone) in delta_cones_for(data, gamma, s.ids, &s.idx)?.into_iter().enumerate() {
            if !cone.is_feasible() {
                continue;
            }
            // α'_{i,l} = α_i + a N_i + b M_{il}
            let weight = alphas
                .iter()
                .zip(o.n_form.coeffs().iter().zip(o.m_forms[l].coeffs()))
                .map(|(al, (n, m))| al + ell.a * n + ell.b * m)
                .collect();
            terms.push(ConeTerm::new(coeff.clone(), cone, o.n_form.clone(), LinearForm(weight))?);
        }
    }
    ConeSeries::from_terms(data.base.clone(), terms)
}

/// Coefficient of `T^n` by direct enumeration of compositions, with
/// `m = min_j Σ k_i M_{ij}`.
pub fn generalized_at_level(
    data: &ResolutionData,
    gamma: Gamma,
    ell: EllForm,
    gauge: Gauge,
    n: i64,
) -> Result<MotivicClass> {
    ell.validate(gamma)?;
    let r = data.orders_len()?;
    let mut acc = MotivicClass::zero(data.base.clone());
    for s in data.strata_sets()? {
        let o = orders_on(data, &s.idx, r);
        let alphas: Vec<i64> = s.idx.iter().map(|&i| data.alpha(i, gauge)).collect::<Result<_>>()?;
        let mut inner = LaurentPoly::zero();
        compositions(o.n_form.coeffs(), n, &mut |k| {
            let m = o.m_forms.iter().map(|f| f.eval(k)).min().expect("r >= 1");
            if gamma.admits(n, m) {
                let w: i64 = k.iter().zip(&alphas).map(|(a, b)| a * b).sum();
                inner.add_term(-(w + ell.eval(n, m)), 1);
            }
        });
        if !inner.is_zero() {
            acc = acc.try_add(&s.class.scale(&(&l_minus_one(&s) * &inner)))?;
        }
    }
    Ok(acc.shift(-(data.d as i64)))
}

/// `-L^d lim` of the generalized series for a given `ℓ`.
pub fn mv_at_least_with(data: &ResolutionData, gamma: Gamma, ell: EllForm, gauge: Gauge) -> Result<MotivicClass> {
    let p = generalized_poincare(data, gamma, ell, gauge)?;
    Ok(p.limit().shift(data.d as i64).neg())
}

/// `Σ_I (L-1)^{|I|-1} [Ẽ_I°] (-χ_c(Δ_I))`, with `χ_c(Δ_I)` taken over the
/// union directly rather than through the decomposition.
pub fn mv_at_least_by_union(data: &ResolutionData, gamma: Gamma) -> Result<MotivicClass> {
    let r = data.orders_len()?;
    let mut acc = MotivicClass::zero(data.base.clone());
    for s in data.strata_sets()? {
        let o = orders_on(data, &s.idx, r);
        let vars = vars_of(s.ids);
        let pieces = (0..r)
            .map(|j| Cone::new(vars.clone(), vec![gamma_constraint(&o, gamma, j)]))
            .collect::<Result<Vec<_>>>()?;
        let chi = chi_union(&pieces)?;
        if chi != 0 {
            acc = acc.try_add(&s.class.scale(&l_minus_one(&s).scale(-chi)))?;
        }
    }
    Ok(acc)
}

/// `MV(X_{≥γ})`, from the `ℓ = 0` series and checked against the union count.
pub fn mv_at_least(data: &ResolutionData, gamma: Gamma, gauge: Gauge) -> Result<MotivicClass> {
    let via_series = mv_at_least_with(data, gamma, EllForm::ZERO, gauge)?;
    let via_union = mv_at_least_by_union(data, gamma)?;
    if via_series != via_union {
        return Err(Error::ConsistencyFailure(format!(
            "decomposed cones give {} but the union gives {}",
            via_series.canonical(),
            via_union.canonical()
        )));
    }
    Ok(via_series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::data::StratumDatum;
    use crate::zeta::formulas::{motivic_volume, poincare_series};

    fn one_stratum(m: Vec<i64>) -> ResolutionData {
        ResolutionData::new(1, "k")
            .with_stratum(StratumDatum::new("E", 1).alpha(0).orders(m))
            .with_class(&["E"], MotivicClass::lefschetz_pow("k", 1))
    }

    #[test]
    fn gamma_parsing() {
        assert_eq!("1/2".parse::<Gamma>().unwrap(), Gamma { num: 1, den: 2 });
        assert_eq!("4/2".parse::<Gamma>().unwrap(), Gamma { num: 2, den: 1 });
        assert_eq!("3".parse::<Gamma>().unwrap(), Gamma { num: 3, den: 1 });
        assert!("-1/2".parse::<Gamma>().is_err());
        assert!("x".parse::<Gamma>().is_err());
    }

    #[test]
    fn ell_validation() {
        let g = Gamma::new(1, 2).unwrap();
        assert!(EllForm::new(0, 1).validate(g).is_ok());
        assert!(EllForm::new(2, -1).validate(g).is_ok());
        assert!(EllForm::new(1, -3).validate(g).is_err());
        assert!(EllForm::new(-1, 0).validate(g).is_err());
    }

    #[test]
    fn zero_orders_reduce_to_poincare() {
        let data = one_stratum(vec![0]);
        let g = generalized_poincare(&data, Gamma::integer(0).unwrap(), EllForm::ZERO, Gauge::Explicit).unwrap();
        let p = poincare_series(&data, Gauge::Explicit).unwrap();
        assert_eq!(g.coefficients(1..=8), p.coefficients(1..=8));
        assert_eq!(
            mv_at_least(&data, Gamma::integer(0).unwrap(), Gauge::Explicit).unwrap(),
            motivic_volume(&data, Gauge::Explicit).unwrap()
        );
    }

    #[test]
    fn unit_order_and_gamma() {
        let data = one_stratum(vec![1]);
        let one = Gamma::integer(1).unwrap();
        let g = generalized_poincare(&data, one, EllForm::ZERO, Gauge::Explicit).unwrap();
        let p = poincare_series(&data, Gauge::Explicit).unwrap();
        assert_eq!(g.coefficients(1..=8), p.coefficients(1..=8));
        let half = Gamma::new(1, 2).unwrap();
        assert!(generalized_poincare(&data, half, EllForm::ZERO, Gauge::Explicit).unwrap().is_empty());
        assert!(mv_at_least(&data, half, Gauge::Explicit).unwrap().is_zero());
    }

    #[test]
    fn decomposition_examples() {
        let data = one_stratum(vec![1, 2]);
        let cones = delta_cones(&data, Gamma::integer(1).unwrap(), &["E"]).unwrap();
        assert_eq!(cones.len(), 2);
        assert!(cones[0].is_feasible());
        assert!(!cones[1].is_feasible());

        let tie = one_stratum(vec![3, 3]);
        let cones = delta_cones(&tie, Gamma::integer(5).unwrap(), &["E"]).unwrap();
        assert!(cones[0].is_feasible());
        assert!(!cones[1].is_feasible());
    }

    #[test]
    fn missing_orders() {
        let data = ResolutionData::new(1, "k").with_stratum(StratumDatum::new("E", 1).alpha(0));
        assert_eq!(
            generalized_poincare(&data, Gamma::integer(1).unwrap(), EllForm::ZERO, Gauge::Explicit),
            Err(Error::MissingOrders("E".into()))
        );
    }
}
