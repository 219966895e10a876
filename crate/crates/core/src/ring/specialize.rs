use std::collections::BTreeMap;

use super::class::{GeneratorSymbol, MotivicClass, UNIT_SYMBOL};
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MissingPolicy {
    #[default]
    Error,
    Zero,
}

/// A ring homomorphism out of the free module: `L` goes to a unit of
/// `Z[L, L^-1]`, each symbol to an integer. Product symbols not listed
/// explicitly evaluate to the product of their factors' values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationMap {
    pub lefschetz_value: LaurentPoly,
    pub symbol_values: BTreeMap<String, i64>,
    pub missing_policy: MissingPolicy,
}

impl SpecializationMap {
    /// Euler characteristic with compact supports: `L -> 1`.
    pub fn euler(symbol_values: BTreeMap<String, i64>) -> Self {
        Self {
            lefschetz_value: LaurentPoly::one(),
            symbol_values,
            missing_policy: MissingPolicy::Error,
        }
    }

    pub fn with_policy(mut self, policy: MissingPolicy) -> Self {
        self.missing_policy = policy;
        self
    }

    fn symbol_value(&self, name: &str) -> Result<i64> {
        if name == UNIT_SYMBOL {
            return Ok(1);
        }
        if let Some(&v) = self.symbol_values.get(name) {
            return Ok(v);
        }
        let factors = GeneratorSymbol::factors(name);
        if factors.len() > 1 {
            let mut acc = 1;
            for f in factors {
                acc *= self.symbol_value(f)?;
            }
            return Ok(acc);
        }
        match self.missing_policy {
            MissingPolicy::Error => Err(Error::MissingSymbol(name.to_string())),
            MissingPolicy::Zero => Ok(0),
        }
    }

    pub fn apply(&self, class: &MotivicClass) -> Result<LaurentPoly> {
        let (sign, exp) = self
            .lefschetz_value
            .as_unit()
            .ok_or_else(|| Error::NonInvertibleLefschetz(self.lefschetz_value.canonical()))?;
        let mut out = LaurentPoly::zero();
        for (sym, coeff) in class.terms() {
            let v = self.symbol_value(&sym.name)?;
            out += &coeff.substitute_unit(sign, exp).scale(v);
        }
        Ok(out)
    }

    /// Convenience for `L -> 1` maps: the integer value.
    pub fn apply_integer(&self, class: &MotivicClass) -> Result<i64> {
        let p = self.apply(class)?;
        Ok(p.eval_at_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn euler_kills_one_minus_l_squared() {
        let s = GeneratorSymbol::new("s", 1, "k").unwrap();
        let c = MotivicClass::term(&s, LaurentPoly::one_minus_l_pow(2));
        let m = SpecializationMap::euler(values(&[("s", 7)]));
        assert_eq!(m.apply_integer(&c).unwrap(), 0);
    }

    #[test]
    fn euler_of_mu_n() {
        let s = GeneratorSymbol::new("mu_5", 5, "k").unwrap();
        let m = SpecializationMap::euler(values(&[("mu_5", 5)]));
        assert_eq!(m.apply_integer(&MotivicClass::symbol(&s)).unwrap(), 5);
    }

    #[test]
    fn euler_of_lefschetz_power() {
        let m = SpecializationMap::euler(BTreeMap::new());
        let c = MotivicClass::lefschetz_pow("k", 4);
        assert_eq!(m.apply(&c).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn missing_symbol_policies() {
        let s = GeneratorSymbol::new("s", 1, "k").unwrap();
        let c = MotivicClass::symbol(&s);
        let m = SpecializationMap::euler(BTreeMap::new());
        assert_eq!(m.apply(&c), Err(Error::MissingSymbol("s".into())));
        let m = m.with_policy(MissingPolicy::Zero);
        assert!(m.apply(&c).unwrap().is_zero());
    }

    #[test]
    fn product_symbols_multiply_factor_values() {
        let a = MotivicClass::symbol(&GeneratorSymbol::new("a", 2, "k").unwrap());
        let b = MotivicClass::symbol(&GeneratorSymbol::new("b", 3, "k").unwrap());
        let m = SpecializationMap::euler(values(&[("a", 2), ("b", 3)]));
        assert_eq!(m.apply_integer(&a.try_mul(&b).unwrap()).unwrap(), 6);
    }

    #[test]
    fn non_unit_lefschetz_value_is_rejected() {
        let m = SpecializationMap {
            lefschetz_value: LaurentPoly::constant(2),
            symbol_values: BTreeMap::new(),
            missing_policy: MissingPolicy::Error,
        };
        assert!(matches!(
            m.apply(&MotivicClass::one("k")),
            Err(Error::NonInvertibleLefschetz(_))
        ));
    }
}
