//! Classes in the equivariant Grothendieck ring, modelled as the free
//! `Z[L, L^-1]`-module on μ-tagged stratum symbols over a fixed base.
//!
//! Canonical rendering grammar (used by the CLI and golden files):
//!
//! ```text
//! class := "0" | term (" + " term)*
//! term  := "(" poly ") * [" name "; mu=" int "; base=" base "]"
//! poly  := "0" | mono (" + " mono)*        -- exponents strictly descending
//! mono  := int "*L^" int
//! ```
//!
//! Terms appear in ascending order of symbol name.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Name of the unit symbol (the class of the base itself).
pub const UNIT_SYMBOL: &str = "pt";

/// Separator between factors of a product symbol.
pub const PRODUCT_SEPARATOR: char = '⊗';

/// A generator `[X -> S, σ]`: a named stratum class with its μ_m-level.
///
/// Two symbols with the same name are the same generator; `mu_order` is
/// metadata that is validated against stratum multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSymbol {
    pub name: String,
    pub mu_order: u64,
    pub base: String,
}

impl GeneratorSymbol {
    pub fn new(name: impl Into<String>, mu_order: u64, base: impl Into<String>) -> Result<Self> {
        let name = name.into();
        let base = base.into();
        if name.is_empty() {
            return Err(Error::InvalidSymbol("empty name".into()));
        }
        if mu_order == 0 {
            return Err(Error::InvalidSymbol(format!("`{name}` has mu order 0")));
        }
        if base.is_empty() {
            return Err(Error::InvalidSymbol(format!("`{name}` has an empty base")));
        }
        if name == UNIT_SYMBOL && mu_order != 1 {
            return Err(Error::InvalidSymbol("`pt` must have mu order 1".into()));
        }
        Ok(Self { name, mu_order, base })
    }

    pub fn unit(base: impl Into<String>) -> Self {
        Self {
            name: UNIT_SYMBOL.to_string(),
            mu_order: 1,
            base: base.into(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.name == UNIT_SYMBOL
    }

    /// Factor names of a (possibly product) symbol name, `pt` removed.
    pub fn factors(name: &str) -> Vec<&str> {
        name.split(PRODUCT_SEPARATOR)
            .filter(|s| *s != UNIT_SYMBOL && !s.is_empty())
            .collect()
    }

    /// Name of the product symbol: the sorted multiset of factors.
    pub fn product_name(a: &str, b: &str) -> String {
        let mut factors: Vec<&str> = Self::factors(a);
        factors.extend(Self::factors(b));
        if factors.is_empty() {
            return UNIT_SYMBOL.to_string();
        }
        factors.sort_unstable();
        let sep = PRODUCT_SEPARATOR.to_string();
        factors.join(&sep)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct ClassTerm {
    mu_order: u64,
    coeff: LaurentPoly,
}

/// An element of `M_S^μ̂` over the base `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MotivicClass {
    base: String,
    terms: BTreeMap<String, ClassTerm>,
}

impl MotivicClass {
    pub fn zero(base: impl Into<String>) -> Self {
        Self {
            base: base.into(),
            terms: BTreeMap::new(),
        }
    }

    /// The unit `[pt]` over `base`.
    pub fn one(base: impl Into<String>) -> Self {
        Self::from_poly(base, LaurentPoly::one())
    }

    /// `poly * [pt]`
    pub fn from_poly(base: impl Into<String>, poly: LaurentPoly) -> Self {
        let base = base.into();
        let mut c = Self::zero(base.clone());
        c.add_symbol_term(&GeneratorSymbol::unit(base), poly);
        c
    }

    /// `L^exp * [pt]`
    pub fn lefschetz_pow(base: impl Into<String>, exp: i64) -> Self {
        Self::from_poly(base, LaurentPoly::l_pow(exp))
    }

    /// `1 * [symbol]`, over the symbol's base.
    pub fn symbol(sym: &GeneratorSymbol) -> Self {
        Self::term(sym, LaurentPoly::one())
    }

    /// `coeff * [symbol]`, over the symbol's base.
    pub fn term(sym: &GeneratorSymbol, coeff: LaurentPoly) -> Self {
        let mut c = Self::zero(sym.base.clone());
        c.add_symbol_term(sym, coeff);
        c
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending symbol-name order.
    pub fn terms(&self) -> impl Iterator<Item = (GeneratorSymbol, &LaurentPoly)> + '_ {
        self.terms.iter().map(move |(name, t)| {
            (
                GeneratorSymbol {
                    name: name.clone(),
                    mu_order: t.mu_order,
                    base: self.base.clone(),
                },
                &t.coeff,
            )
        })
    }

    pub fn coeff_of(&self, name: &str) -> LaurentPoly {
        self.terms
            .get(name)
            .map(|t| t.coeff.clone())
            .unwrap_or_default()
    }

    pub fn mu_order_of(&self, name: &str) -> Option<u64> {
        self.terms.get(name).map(|t| t.mu_order)
    }

    /// Adds `coeff * [sym]` in place; the symbol's base is ignored in favour
    /// of the class base. Repeated names merge their μ-levels by lcm.
    fn add_symbol_term(&mut self, sym: &GeneratorSymbol, coeff: LaurentPoly) {
        self.add_named(&sym.name, sym.mu_order, &coeff);
    }

    fn add_named(&mut self, name: &str, mu_order: u64, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(name.to_string()).or_insert(ClassTerm {
            mu_order,
            coeff: LaurentPoly::zero(),
        });
        entry.mu_order = entry.mu_order.lcm(&mu_order);
        entry.coeff += coeff;
        if entry.coeff.is_zero() {
            self.terms.remove(name);
        }
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

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let mut out = self.clone();
        for (name, t) in &other.terms {
            out.add_named(name, t.mu_order, &t.coeff);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&LaurentPoly::constant(-1))
    }

    /// Bilinear extension of the symbol product `s ⊗ t`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let mut out = Self::zero(self.base.clone());
        for (n1, t1) in &self.terms {
            for (n2, t2) in &other.terms {
                let name = GeneratorSymbol::product_name(n1, n2);
                let mu = t1.mu_order.lcm(&t2.mu_order);
                out.add_named(&name, mu, &(&t1.coeff * &t2.coeff));
            }
        }
        Ok(out)
    }

    /// Multiply every coefficient by a Laurent polynomial.
    pub fn scale(&self, k: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.base.clone());
        for (name, t) in &self.terms {
            out.add_named(name, t.mu_order, &(&t.coeff * k));
        }
        out
    }

    /// Multiply by `L^exp`.
    pub fn shift(&self, exp: i64) -> Self {
        let mut out = self.clone();
        for t in out.terms.values_mut() {
            t.coeff = t.coeff.shift(exp);
        }
        out
    }

    /// Pushforward to `new_base`: relabels the base, keeps all terms.
    pub fn push(&self, new_base: impl Into<String>) -> Self {
        Self {
            base: new_base.into(),
            terms: self.terms.clone(),
        }
    }

    /// Renames symbols via `map`; names absent from the map are kept.
    pub fn rename(&self, map: &BTreeMap<String, String>) -> Self {
        let mut out = Self::zero(self.base.clone());
        for (name, t) in &self.terms {
            let new = map.get(name).cloned().unwrap_or_else(|| name.clone());
            out.add_named(&new, t.mu_order, &t.coeff);
        }
        out
    }

    pub fn sum<'a, I>(base: &str, items: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a MotivicClass>,
    {
        let mut acc = Self::zero(base);
        for c in items {
            acc = acc.try_add(c)?;
        }
        Ok(acc)
    }

    /// See the module docs for the grammar.
    pub fn canonical(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(name, t)| {
                format!(
                    "({}) * [{}; mu={}; base={}]",
                    t.coeff.canonical(),
                    name,
                    t.mu_order,
                    self.base
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for MotivicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (name, t) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if name == UNIT_SYMBOL {
                write!(f, "({})", t.coeff)?;
            } else if t.coeff == LaurentPoly::one() {
                write!(f, "[{name}]")?;
            } else {
                write!(f, "({})[{name}]", t.coeff)?;
            }
        }
        Ok(())
    }
}
