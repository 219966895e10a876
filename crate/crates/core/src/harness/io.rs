//! JSON documents for resolution data and verification inputs.
//!
//! ```json
//! {
//!   "d": 1,
//!   "base": "k",
//!   "strata": [{"id": "E1", "N": 2, "nu": 2, "M": [1, 1]}],
//!   "classes": [
//!     {"I": ["E1"], "class": [{"symbol": "E1~", "mu": 2, "coeff": {"0": 1}}]}
//!   ],
//!   "euler": {"E1~": 2}
//! }
//! ```
//!
//! `coeff` maps exponents of `L` to integers. The writer emits exponents in
//! descending order and omits absent optional fields, so files it produces
//! read back and write out byte for byte.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::examples::{GlossaryEntry, IdentityInstance};
use crate::error::{Error, Result};
use crate::ring::{GeneratorSymbol, LaurentPoly, MotivicClass};
use crate::zeta::{EllForm, Gamma, ResolutionData, StratumClass, StratumDatum};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DataDoc {
    d: u32,
    base: String,
    strata: Vec<StratumDoc>,
    #[serde(default)]
    classes: Vec<ClassDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    euler: BTreeMap<String, i64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StratumDoc {
    id: String,
    #[serde(rename = "N")]
    n: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nu: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<i64>,
    #[serde(rename = "M", default, skip_serializing_if = "Option::is_none")]
    m: Option<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassDoc {
    #[serde(rename = "I")]
    ids: Vec<String>,
    class: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    symbol: String,
    mu: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    base: Option<String>,
    coeff: Map<String, Value>,
}

fn poly_from_doc(map: &Map<String, Value>, at: &str) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero();
    for (k, v) in map {
        let exp: i64 = k
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("{at}: exponent `{k}` is not an integer")))?;
        let c = v
            .as_i64()
            .ok_or_else(|| Error::Input(format!("{at}: coefficient of L^{k} is not an integer")))?;
        p.add_term(exp, c);
    }
    Ok(p)
}

fn poly_to_doc(p: &LaurentPoly) -> Map<String, Value> {
    p.terms()
        .rev()
        .map(|(e, c)| (e.to_string(), Value::from(c)))
        .collect()
}

fn class_from_doc(terms: &[TermDoc], base: &str, at: &str) -> Result<MotivicClass> {
    let mut class = MotivicClass::zero(base);
    for (j, t) in terms.iter().enumerate() {
        let at = format!("{at}.class[{j}]");
        let term_base = t.base.clone().unwrap_or_else(|| base.to_string());
        let s = GeneratorSymbol::new(t.symbol.clone(), t.mu, term_base)
            .map_err(|e| Error::Input(format!("{at}: {e}")))?;
        let c = MotivicClass::term(&s, poly_from_doc(&t.coeff, &at)?);
        class = class
            .try_add(&c)
            .map_err(|e| Error::Input(format!("{at}: {e}")))?;
    }
    Ok(class)
}

fn class_to_doc(class: &MotivicClass) -> Vec<TermDoc> {
    class
        .terms()
        .map(|(s, c)| TermDoc {
            symbol: s.name,
            mu: s.mu_order,
            base: None,
            coeff: poly_to_doc(c),
        })
        .collect()
}

impl DataDoc {
    fn into_data(self) -> Result<ResolutionData> {
        let mut data = ResolutionData::new(self.d, self.base.clone());
        data.euler = self.euler;
        for s in self.strata {
            data.strata.push(StratumDatum {
                id: s.id,
                n: s.n,
                nu: s.nu,
                alpha: s.alpha,
                m: s.m,
            });
        }
        for (i, c) in self.classes.iter().enumerate() {
            let class = class_from_doc(&c.class, &self.base, &format!("classes[{i}]"))?;
            data.classes.push(StratumClass {
                ids: c.ids.clone(),
                class,
            });
        }
        Ok(data)
    }

    fn from_data(data: &ResolutionData) -> Self {
        Self {
            d: data.d,
            base: data.base.clone(),
            strata: data
                .strata
                .iter()
                .map(|s| StratumDoc {
                    id: s.id.clone(),
                    n: s.n,
                    nu: s.nu,
                    alpha: s.alpha,
                    m: s.m.clone(),
                })
                .collect(),
            classes: data
                .classes
                .iter()
                .map(|c| ClassDoc {
                    ids: c.ids.clone(),
                    class: class_to_doc(&c.class),
                })
                .collect(),
            euler: data.euler.clone(),
        }
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed {what}: {e}")))
}

fn pretty<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

/// Parses and validates a resolution-data document.
pub fn data_from_json(text: &str) -> Result<ResolutionData> {
    let data = parse::<DataDoc>(text, "resolution data")?.into_data()?;
    data.check()?;
    Ok(data)
}

pub fn data_to_json(data: &ResolutionData) -> String {
    pretty(&DataDoc::from_data(data))
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

pub fn read_data(path: &Path) -> Result<ResolutionData> {
    data_from_json(&read_text(path)?)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GlossaryDoc {
    symbol: String,
    mu: u64,
    euler: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdentityDoc {
    d1: u32,
    d2: u32,
    d3: u32,
    data_f: DataDoc,
    data_ftilde: DataDoc,
    #[serde(default)]
    glossary: Vec<GlossaryDoc>,
}

pub fn identity_from_json(text: &str) -> Result<IdentityInstance> {
    let doc: IdentityDoc = parse(text, "identity instance")?;
    if doc.d1 < 1 {
        return Err(Error::Input("identity instance needs d1 >= 1".into()));
    }
    let data_f = doc.data_f.into_data()?;
    let data_ftilde = doc.data_ftilde.into_data()?;
    data_f.check()?;
    data_ftilde.check()?;
    Ok(IdentityInstance {
        d1: doc.d1,
        d2: doc.d2,
        d3: doc.d3,
        data_f,
        data_ftilde,
        glossary: doc
            .glossary
            .into_iter()
            .map(|g| GlossaryEntry {
                symbol: g.symbol,
                mu: g.mu,
                euler: g.euler,
            })
            .collect(),
    })
}

pub fn identity_to_json(inst: &IdentityInstance) -> String {
    pretty(&IdentityDoc {
        d1: inst.d1,
        d2: inst.d2,
        d3: inst.d3,
        data_f: DataDoc::from_data(&inst.data_f),
        data_ftilde: DataDoc::from_data(&inst.data_ftilde),
        glossary: inst
            .glossary
            .iter()
            .map(|g| GlossaryDoc {
                symbol: g.symbol.clone(),
                mu: g.mu,
                euler: g.euler,
            })
            .collect(),
    })
}

/// Two datasets and a symbol identification from the first to the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitInput {
    pub a: ResolutionData,
    pub b: ResolutionData,
    pub ident: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct UnitDoc {
    a: DataDoc,
    b: DataDoc,
    ident: BTreeMap<String, String>,
}

pub fn unit_from_json(text: &str) -> Result<UnitInput> {
    let doc: UnitDoc = parse(text, "unit-invariance input")?;
    let a = doc.a.into_data()?;
    let b = doc.b.into_data()?;
    a.check()?;
    b.check()?;
    Ok(UnitInput {
        a,
        b,
        ident: doc.ident,
    })
}

pub fn unit_to_json(input: &UnitInput) -> String {
    pretty(&UnitDoc {
        a: DataDoc::from_data(&input.a),
        b: DataDoc::from_data(&input.b),
        ident: input.ident.clone(),
    })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairDoc {
    a: DataDoc,
    b: DataDoc,
}

pub fn pair_from_json(text: &str) -> Result<(ResolutionData, ResolutionData)> {
    let doc: PairDoc = parse(text, "dataset pair")?;
    let a = doc.a.into_data()?;
    let b = doc.b.into_data()?;
    a.check()?;
    b.check()?;
    Ok((a, b))
}

pub fn pair_to_json(a: &ResolutionData, b: &ResolutionData) -> String {
    pretty(&PairDoc {
        a: DataDoc::from_data(a),
        b: DataDoc::from_data(b),
    })
}

/// A dataset, a value of `γ` and the forms `ℓ` to compare.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllInput {
    pub data: ResolutionData,
    pub gamma: Gamma,
    pub ells: Vec<EllForm>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EllDoc {
    data: DataDoc,
    gamma: String,
    ells: Vec<[i64; 2]>,
}

pub fn ell_from_json(text: &str) -> Result<EllInput> {
    let doc: EllDoc = parse(text, "ell-independence input")?;
    let data = doc.data.into_data()?;
    data.check()?;
    Ok(EllInput {
        data,
        gamma: doc.gamma.parse()?,
        ells: doc.ells.iter().map(|[a, b]| EllForm::new(*a, *b)).collect(),
    })
}

pub fn ell_to_json(input: &EllInput) -> String {
    pretty(&EllDoc {
        data: DataDoc::from_data(&input.data),
        gamma: input.gamma.to_string(),
        ells: input.ells.iter().map(|e| [e.a, e.b]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::examples::{builtin_examples, identity_xy_plus_z};

    #[test]
    fn builtins_round_trip() {
        for e in builtin_examples() {
            let text = data_to_json(&e.data);
            let back = data_from_json(&text).unwrap();
            assert_eq!(back, e.data, "{}", e.name);
            assert_eq!(data_to_json(&back), text, "{}", e.name);
        }
    }

    #[test]
    fn identity_round_trip() {
        let inst = identity_xy_plus_z(3).unwrap();
        let text = identity_to_json(&inst);
        assert_eq!(identity_from_json(&text).unwrap(), inst);
    }

    #[test]
    fn coefficients_written_in_descending_order() {
        let p = LaurentPoly::from_terms([(0, 1), (2, 1), (1, -2)]);
        let keys: Vec<_> = poly_to_doc(&p).keys().cloned().collect();
        assert_eq!(keys, ["2", "1", "0"]);
    }

    #[test]
    fn diagnostics_name_the_problem() {
        let err = data_from_json(r#"{"d": 1, "base": "k", "strata": [{"id": "a"}]}"#).unwrap_err();
        assert!(err.to_string().contains("missing field `N`"), "{err}");
        assert!(err.to_string().contains("line 1"), "{err}");

        let bad_exp = r#"{"d": 1, "base": "k", "strata": [{"id": "a", "N": 1}],
            "classes": [{"I": ["a"], "class": [{"symbol": "s", "mu": 1, "coeff": {"x": 1}}]}]}"#;
        let err = data_from_json(bad_exp).unwrap_err();
        assert!(err.to_string().contains("classes[0].class[0]"), "{err}");

        let bad_mu = r#"{"d": 1, "base": "k", "strata": [{"id": "a", "N": 2}],
            "classes": [{"I": ["a"], "class": [{"symbol": "s", "mu": 3, "coeff": {"0": 1}}]}]}"#;
        assert!(matches!(data_from_json(bad_mu), Err(Error::Validation(_))));
    }

    #[test]
    fn foreign_term_base_is_rejected() {
        let text = r#"{"d": 1, "base": "k", "strata": [{"id": "a", "N": 1}],
            "classes": [{"I": ["a"], "class": [{"symbol": "s", "mu": 1, "base": "A^1", "coeff": {"0": 1}}]}]}"#;
        let err = data_from_json(text).unwrap_err();
        assert!(err.to_string().contains("base"), "{err}");
    }
}
