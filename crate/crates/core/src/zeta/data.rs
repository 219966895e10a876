//! Resolution combinatorics: strata with multiplicities and orders, and the
//! classes of the covers `[Ẽ_I°]`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::ring::MotivicClass;

/// One component `E_i` of the special fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumDatum {
    pub id: String,
    /// Multiplicity `N_i`.
    pub n: i64,
    /// Discrepancy numerator `ν_i`.
    pub nu: Option<i64>,
    /// Order `α_i` of the gauge form.
    pub alpha: Option<i64>,
    /// Orders `M_{i1..ir}` of auxiliary functions.
    pub m: Option<Vec<i64>>,
}

impl StratumDatum {
    pub fn new(id: impl Into<String>, n: i64) -> Self {
        Self {
            id: id.into(),
            n,
            nu: None,
            alpha: None,
            m: None,
        }
    }

    pub fn nu(mut self, nu: i64) -> Self {
        self.nu = Some(nu);
        self
    }

    pub fn alpha(mut self, alpha: i64) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub fn orders(mut self, m: Vec<i64>) -> Self {
        self.m = Some(m);
        self
    }
}

/// `[Ẽ_I°]` for one nonempty subset `I` of the strata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumClass {
    pub ids: Vec<String>,
    pub class: MotivicClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionData {
    /// Pure relative dimension.
    pub d: u32,
    pub base: String,
    pub strata: Vec<StratumDatum>,
    /// Subsets without an entry are empty strata.
    pub classes: Vec<StratumClass>,
    /// Optional Euler characteristics of the symbols, used by `L -> 1` checks.
    pub euler: BTreeMap<String, i64>,
}

/// How the orders `α_i` are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Gauge {
    /// Use the `alpha` field of every stratum.
    #[default]
    Explicit,
    /// `α_i = ν_i - N_i`, the orders of `ω/df`.
    GelfandLeray,
}

/// A resolved subset `I` with everything the formulas need.
#[derive(Clone, Debug)]
pub(crate) struct Stratum<'a> {
    pub ids: &'a [String],
    pub idx: Vec<usize>,
    pub class: &'a MotivicClass,
}

impl ResolutionData {
    pub fn new(d: u32, base: impl Into<String>) -> Self {
        Self {
            d,
            base: base.into(),
            strata: Vec::new(),
            classes: Vec::new(),
            euler: BTreeMap::new(),
        }
    }

    pub fn with_stratum(mut self, s: StratumDatum) -> Self {
        self.strata.push(s);
        self
    }

    pub fn with_class(mut self, ids: &[&str], class: MotivicClass) -> Self {
        self.classes.push(StratumClass {
            ids: ids.iter().map(|s| s.to_string()).collect(),
            class,
        });
        self
    }

    pub fn with_euler(mut self, symbol: &str, value: i64) -> Self {
        self.euler.insert(symbol.to_string(), value);
        self
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.strata.iter().position(|s| s.id == id)
    }

    pub fn class_of(&self, ids: &[&str]) -> Option<&MotivicClass> {
        let want: BTreeSet<&str> = ids.iter().copied().collect();
        self.classes
            .iter()
            .find(|c| c.ids.iter().map(String::as_str).collect::<BTreeSet<_>>() == want)
            .map(|c| &c.class)
    }

    /// `N_I = gcd_{i ∈ I} N_i`.
    pub fn n_of(&self, idx: &[usize]) -> i64 {
        idx.iter().fold(0, |g, &i| g.gcd(&self.strata[i].n))
    }

    pub fn alpha(&self, i: usize, gauge: Gauge) -> Result<i64> {
        let s = &self.strata[i];
        match gauge {
            Gauge::Explicit => s.alpha.ok_or_else(|| Error::MissingFormOrder(s.id.clone())),
            Gauge::GelfandLeray => {
                let nu = s.nu.ok_or_else(|| Error::MissingDiscrepancy(s.id.clone()))?;
                Ok(nu - s.n)
            }
        }
    }

    pub fn nu(&self, i: usize) -> Result<i64> {
        let s = &self.strata[i];
        s.nu.ok_or_else(|| Error::MissingDiscrepancy(s.id.clone()))
    }

    /// Explicit when every stratum carries `alpha`, otherwise Gelfand–Leray.
    pub fn default_gauge(&self) -> Gauge {
        if self.strata.iter().all(|s| s.alpha.is_some()) {
            Gauge::Explicit
        } else {
            Gauge::GelfandLeray
        }
    }

    /// Number `r` of auxiliary functions, if every stratum carries `M`.
    pub fn orders_len(&self) -> Result<usize> {
        let mut r = None;
        for s in &self.strata {
            let m = s.m.as_ref().ok_or_else(|| Error::MissingOrders(s.id.clone()))?;
            match r {
                None => r = Some(m.len()),
                Some(r) if r != m.len() => {
                    return Err(Error::Validation(format!(
                        "stratum `{}` has {} orders, expected {r}",
                        s.id,
                        m.len()
                    )))
                }
                _ => {}
            }
        }
        match r {
            Some(0) | None => Err(Error::MissingOrders(
                self.strata.first().map(|s| s.id.clone()).unwrap_or_default(),
            )),
            Some(r) => Ok(r),
        }
    }

    /// Resolved strata; fails on the first structural error.
    pub(crate) fn strata_sets(&self) -> Result<Vec<Stratum<'_>>> {
        self.check()?;
        Ok(self
            .classes
            .iter()
            .filter(|c| !c.class.is_zero())
            .map(|c| Stratum {
                ids: &c.ids,
                idx: c
                    .ids
                    .iter()
                    .map(|id| self.index_of(id).expect("validated"))
                    .collect(),
                class: &c.class,
            })
            .collect())
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        if self.base.is_empty() {
            r.errors.push("empty base".into());
        }
        let mut seen = BTreeSet::new();
        for s in &self.strata {
            if s.id.is_empty() {
                r.errors.push("stratum with empty id".into());
            }
            if !seen.insert(s.id.as_str()) {
                r.errors.push(format!("duplicate stratum id `{}`", s.id));
            }
            if s.n < 1 {
                r.errors.push(format!("stratum `{}`: N = {} < 1", s.id, s.n));
            }
            if let Some(nu) = s.nu {
                if nu < 1 {
                    r.errors.push(format!("stratum `{}`: nu = {nu} < 1", s.id));
                }
            }
            if let Some(m) = &s.m {
                if m.iter().any(|&x| x < 0) {
                    r.errors.push(format!("stratum `{}`: negative order in M", s.id));
                }
            }
        }
        let m_lens: BTreeSet<usize> = self
            .strata
            .iter()
            .filter_map(|s| s.m.as_ref().map(Vec::len))
            .collect();
        if m_lens.len() > 1 {
            r.errors.push("strata carry M vectors of different lengths".into());
        }
        let mut subsets = BTreeSet::new();
        for c in &self.classes {
            let label = format!("{{{}}}", c.ids.join(","));
            if c.ids.is_empty() {
                r.errors.push("class for the empty subset".into());
                continue;
            }
            let set: BTreeSet<&str> = c.ids.iter().map(String::as_str).collect();
            if set.len() != c.ids.len() {
                r.errors.push(format!("{label}: repeated id"));
            }
            if !subsets.insert(set) {
                r.errors.push(format!("{label}: subset listed twice"));
            }
            let mut idx = Vec::new();
            for id in &c.ids {
                match self.index_of(id) {
                    Some(i) => idx.push(i),
                    None => r.errors.push(format!("{label}: unknown stratum `{id}`")),
                }
            }
            if c.class.base() != self.base {
                r.errors.push(format!(
                    "{label}: class base `{}` differs from data base `{}`",
                    c.class.base(),
                    self.base
                ));
            }
            if idx.len() == c.ids.len() && idx.iter().all(|&i| self.strata[i].n >= 1) {
                let n_i = self.n_of(&idx);
                for (sym, _) in c.class.terms() {
                    if n_i % sym.mu_order as i64 != 0 {
                        r.errors.push(format!(
                            "{label}: symbol `{}` has mu order {} not dividing N_I = {n_i}",
                            sym.name, sym.mu_order
                        ));
                    }
                }
            }
            if c.ids.len() > self.d as usize + 1 {
                r.warnings.push(format!(
                    "{label}: {} strata meet but the total space has dimension {}",
                    c.ids.len(),
                    self.d + 1
                ));
            }
        }
        r
    }

    pub fn check(&self) -> Result<()> {
        let r = self.validate();
        if r.errors.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(r.errors.join("\n")))
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub errors: Vec<String>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.errors.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.errors {
            writeln!(f, "error: {e}")?;
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}
