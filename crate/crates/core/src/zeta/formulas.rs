//! Per-level integrals, Poincaré series, motivic volumes, zeta functions and
//! nearby cycles from resolution data.

use crate::cone::{ConeSeries, ConeTerm};
use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, MotivicClass};

use super::data::{Gauge, ResolutionData, Stratum};

/// Visits every `k ∈ Z^I_{≥1}` with `Σ k_i N_i = n`.
pub(crate) fn compositions(ns: &[i64], n: i64, visit: &mut dyn FnMut(&[i64])) {
    fn go(ns: &[i64], rest: i64, k: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64])) {
        let i = k.len();
        if i == ns.len() {
            if rest == 0 {
                visit(k);
            }
            return;
        }
        // leave room for k_j >= 1 on the remaining strata
        let tail: i64 = ns[i + 1..].iter().sum();
        let mut ki = 1;
        while ki * ns[i] + tail <= rest {
            k.push(ki);
            go(ns, rest - ki * ns[i], k, visit);
            k.pop();
            ki += 1;
        }
    }
    go(ns, n, &mut Vec::with_capacity(ns.len()), visit);
}

fn l_minus_one(s: &Stratum<'_>) -> LaurentPoly {
    LaurentPoly::l_minus_one_pow(s.idx.len() as u32 - 1)
}

fn orders(data: &ResolutionData, s: &Stratum<'_>, gauge: Gauge) -> Result<(Vec<i64>, Vec<i64>)> {
    let ns = s.idx.iter().map(|&i| data.strata[i].n).collect();
    let alphas = s
        .idx
        .iter()
        .map(|&i| data.alpha(i, gauge))
        .collect::<Result<_>>()?;
    Ok((ns, alphas))
}

/// `L^{-d} Σ_C [C] L^{-ord_C(ω)}` for a smooth model.
pub fn smooth_integral(base: &str, components: &[(MotivicClass, i64)], d: u32) -> Result<MotivicClass> {
    let mut acc = MotivicClass::zero(base);
    for (class, ord) in components {
        acc = acc.try_add(&class.shift(-ord))?;
    }
    Ok(acc.shift(-(d as i64)))
}

/// `∫ |ω(n)|` by enumerating every composition `Σ k_i N_i = n`.
pub fn integral_at_level(data: &ResolutionData, n: i64, gauge: Gauge) -> Result<MotivicClass> {
    let mut acc = MotivicClass::zero(data.base.clone());
    for s in data.strata_sets()? {
        let (ns, alphas) = orders(data, &s, gauge)?;
        let mut inner = LaurentPoly::zero();
        compositions(&ns, n, &mut |k| {
            let w: i64 = k.iter().zip(&alphas).map(|(a, b)| a * b).sum();
            inner.add_term(-w, 1);
        });
        if !inner.is_zero() {
            acc = acc.try_add(&s.class.scale(&(&l_minus_one(&s) * &inner)))?;
        }
    }
    Ok(acc.shift(-(data.d as i64)))
}

/// One open-orthant term per nonempty stratum, degree `N`, weight `α`.
pub fn poincare_series(data: &ResolutionData, gauge: Gauge) -> Result<ConeSeries> {
    let mut terms = Vec::new();
    for s in data.strata_sets()? {
        let (ns, alphas) = orders(data, &s, gauge)?;
        let coeff = s.class.scale(&l_minus_one(&s)).shift(-(data.d as i64));
        terms.push(ConeTerm::orthant(coeff, ns, alphas)?);
    }
    ConeSeries::from_terms(data.base.clone(), terms)
}

/// `Σ_I (1 - L)^{|I|-1} [Ẽ_I°]`.
pub fn motivic_volume_closed_form(data: &ResolutionData) -> Result<MotivicClass> {
    let mut acc = MotivicClass::zero(data.base.clone());
    for s in data.strata_sets()? {
        let sign = LaurentPoly::one_minus_l_pow(s.idx.len() as u32 - 1);
        acc = acc.try_add(&s.class.scale(&sign))?;
    }
    Ok(acc)
}

/// `-L^d · lim P(T)`.
pub fn motivic_volume_via_limit(data: &ResolutionData, gauge: Gauge) -> Result<MotivicClass> {
    let p = poincare_series(data, gauge)?;
    Ok(p.limit().shift(data.d as i64).neg())
}

/// The motivic volume, computed in closed form and checked against the
/// limit of the Poincaré series.
pub fn motivic_volume(data: &ResolutionData, gauge: Gauge) -> Result<MotivicClass> {
    let closed = motivic_volume_closed_form(data)?;
    let via_limit = motivic_volume_via_limit(data, gauge)?;
    if closed != via_limit {
        return Err(Error::ConsistencyFailure(format!(
            "closed form {} differs from -L^d lim P = {}",
            closed.canonical(),
            via_limit.canonical()
        )));
    }
    Ok(closed)
}

fn nus(data: &ResolutionData, s: &Stratum<'_>) -> Result<Vec<i64>> {
    s.idx.iter().map(|&i| data.nu(i)).collect()
}

/// `Z_f(T) = L^d [ (L^{-d} · LT/(1 - LT)) ∗ Σ_I (L-1)^{|I|-1} [Ẽ_I°] Π L^{-ν_i}T^{N_i}/(1 - L^{-ν_i}T^{N_i}) ]`,
/// with `d` the relative dimension of the data.
pub fn zeta_series(data: &ResolutionData) -> Result<ConeSeries> {
    let mut terms = Vec::new();
    for s in data.strata_sets()? {
        let ns: Vec<i64> = s.idx.iter().map(|&i| data.strata[i].n).collect();
        let coeff = s.class.scale(&l_minus_one(&s));
        terms.push(ConeTerm::orthant(coeff, ns, nus(data, &s)?)?);
    }
    let inner = ConeSeries::from_terms(data.base.clone(), terms)?;
    let d = data.d as i64;
    let lt = ConeSeries::geom_over(data.base.clone(), 1, 1)?.scale(&LaurentPoly::l_pow(-d));
    Ok(lt.hadamard(&inner)?.scale(&LaurentPoly::l_pow(d)))
}

/// `Σ_I (L-1)^{|I|-1} [Ẽ_I°] Σ_{Σ k_i N_i = n} L^{Σ k_i (N_i - ν_i)}` by enumeration.
pub fn zeta_at_level(data: &ResolutionData, n: i64) -> Result<MotivicClass> {
    let mut acc = MotivicClass::zero(data.base.clone());
    for s in data.strata_sets()? {
        let ns: Vec<i64> = s.idx.iter().map(|&i| data.strata[i].n).collect();
        let nu = nus(data, &s)?;
        let mut inner = LaurentPoly::zero();
        compositions(&ns, n, &mut |k| {
            let e: i64 = k.iter().zip(ns.iter().zip(&nu)).map(|(k, (a, b))| k * (a - b)).sum();
            inner.add_term(e, 1);
        });
        if !inner.is_zero() {
            acc = acc.try_add(&s.class.scale(&(&l_minus_one(&s) * &inner)))?;
        }
    }
    Ok(acc)
}

/// `S_f = Σ_I (1 - L)^{|I|-1} [Ẽ_I°]`, over the data's base.
pub fn nearby_cycles(data: &ResolutionData) -> Result<MotivicClass> {
    motivic_volume_closed_form(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::GeneratorSymbol;
    use crate::zeta::data::StratumDatum;

    fn single(n: i64, alpha: i64, d: u32) -> ResolutionData {
        ResolutionData::new(d, "k")
            .with_stratum(StratumDatum::new("E", n).alpha(alpha).nu(1))
            .with_class(&["E"], MotivicClass::one("k"))
    }

    #[test]
    fn composition_count() {
        let mut c = 0;
        compositions(&[1, 1, 1], 6, &mut |_| c += 1);
        assert_eq!(c, 10);
        let mut c = 0;
        compositions(&[2, 3], 1, &mut |_| c += 1);
        assert_eq!(c, 0);
    }

    #[test]
    fn smooth_integral_examples() {
        let pt = MotivicClass::one("k");
        assert_eq!(smooth_integral("k", &[(pt.clone(), 0)], 3).unwrap(), MotivicClass::lefschetz_pow("k", -3));
        let a2 = MotivicClass::lefschetz_pow("A^2", 2);
        let u = smooth_integral("A^2", &[(a2, 2 * 3)], 2).unwrap();
        assert_eq!(u.push("k"), MotivicClass::lefschetz_pow("k", -2 * 3 - 2 + 2));
        assert!(smooth_integral("k", &[], 2).unwrap().is_zero());
    }

    #[test]
    fn single_stratum_levels() {
        let data = single(1, 0, 2);
        for n in 1..6 {
            assert_eq!(integral_at_level(&data, n, Gauge::Explicit).unwrap(), MotivicClass::lefschetz_pow("k", -2));
        }
        let data = single(2, 1, 1);
        for n in 1..9 {
            let got = integral_at_level(&data, n, Gauge::Explicit).unwrap();
            if n % 2 == 1 {
                assert!(got.is_zero());
            } else {
                assert_eq!(got, MotivicClass::lefschetz_pow("k", -1 - n / 2));
            }
        }
    }

    #[test]
    fn two_strata_volume() {
        let sym = |s: &str| MotivicClass::symbol(&GeneratorSymbol::new(s, 1, "k").unwrap());
        let data = ResolutionData::new(1, "k")
            .with_stratum(StratumDatum::new("1", 1).alpha(0))
            .with_stratum(StratumDatum::new("2", 1).alpha(0))
            .with_class(&["1"], sym("a"))
            .with_class(&["2"], sym("b"))
            .with_class(&["1", "2"], sym("c"));
        let expect = sym("a")
            .try_add(&sym("b"))
            .unwrap()
            .try_add(&sym("c").scale(&LaurentPoly::one_minus_l_pow(1)))
            .unwrap();
        assert_eq!(motivic_volume(&data, Gauge::Explicit).unwrap(), expect);
    }

    #[test]
    fn smooth_zeta_coefficient_is_the_class() {
        let data = ResolutionData::new(0, "k")
            .with_stratum(StratumDatum::new("E", 1).nu(1))
            .with_class(&["E"], MotivicClass::one("k"));
        let z = zeta_series(&data).unwrap();
        for n in 1..8 {
            assert_eq!(zeta_at_level(&data, n).unwrap(), MotivicClass::one("k"));
            assert_eq!(z.coefficient(n), MotivicClass::one("k"));
        }
    }

    #[test]
    fn missing_discrepancy() {
        let data = ResolutionData::new(1, "k")
            .with_stratum(StratumDatum::new("E", 1))
            .with_class(&["E"], MotivicClass::one("k"));
        assert_eq!(zeta_series(&data), Err(Error::MissingDiscrepancy("E".into())));
    }
}
