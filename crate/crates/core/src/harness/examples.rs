//! Built-in resolution data.
//!
//! Derivations of the non-trivial datasets:
//!
//! **Cusp `x² + y³` at the origin.** Three point blow-ups give exceptional
//! curves `E1, E2, E3` with `(N, ν) = (2,2), (3,3), (6,5)` and the strict
//! transform `C` with `(1,1)`. `E3` meets `E1`, `E2` and `C` once each; `E1`,
//! `E2` are lines minus a point and `E3` is a line minus three points, so
//! `χ(E1°) = χ(E2°) = 1`, `χ(E3°) = -1`. The covers of the open strata over the
//! origin are named `E1~, E2~, E3~` (levels 2, 3, 6) and `E13~, E23~` for the
//! two crossing points (levels 2, 3); the crossing `C ∩ E3` has `N_I = 1`, so
//! its cover is a point. With `g = (x, y)` the orders are `M = (1,1), (2,1),
//! (3,2)` on `E1, E2, E3` and `(0,0)` on `C`.
//!
//! **`xy + z²` over the `x`-axis.** One blow-up of the origin of `A³`: the
//! exceptional plane has `(N, ν) = (2, 3)` and meets `C` in a smooth conic.
//! Over the axis, `C°` is the punctured axis `(L - 1)`, the conic is `L + 1`,
//! and the double cover of `P² ∖ conic` branched nowhere is
//! `{xy + z² = 1}` with `μ₂` acting by `-1`, whose class is `L(L - 1) + L[μ₂]`.
//!
//! **`xy + z³` over the `x`-axis.** Blow up the `x`-axis (divisor `D1`,
//! `(N, ν) = (1, 2)`), then the point where the strict transform is singular
//! (divisor `E2`, `(3, 4)`). The open strata over the axis are
//! `D1° = L² - L`, `E2°` with cover `(L - 1)² + L[μ₃]`, the curves
//! `C ∩ D1 = 2L - 1`, `C ∩ E2 = D1 ∩ E2 = L - 1` and two triple points.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::ring::{GeneratorSymbol, LaurentPoly, MotivicClass};
use crate::zeta::{Gauge, ResolutionData, StratumDatum};

/// How an expected value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// A published worked example.
    Published,
    /// Immediate from the definitions.
    Trivial,
    /// Computed independently for this crate.
    Derived,
}

/// A named dataset with the values it must reproduce.
#[derive(Clone, Debug)]
pub struct ExampleSpec {
    pub name: String,
    pub description: String,
    pub data: ResolutionData,
    pub gauge: Gauge,
    /// Output name (`mv`, `nearby`) to value, pushed to the base `k`.
    pub expected: BTreeMap<String, MotivicClass>,
    pub provenance: Provenance,
    /// `χ_c(E_I°)` of the open strata (before taking covers).
    pub stratum_euler: Vec<(Vec<String>, i64)>,
    /// Values of `γ` to probe the generalized series with, for `M`-decorated data.
    pub gammas: Vec<String>,
}

impl ExampleSpec {
    fn new(name: &str, description: &str, data: ResolutionData, provenance: Provenance) -> Self {
        let gauge = data.default_gauge();
        Self {
            name: name.to_string(),
            description: description.to_string(),
            data,
            gauge,
            expected: BTreeMap::new(),
            provenance,
            stratum_euler: Vec::new(),
            gammas: Vec::new(),
        }
    }

    fn expect(mut self, output: &str, value: MotivicClass) -> Self {
        self.expected.insert(output.to_string(), value);
        self
    }

    fn euler(mut self, ids: &[&str], chi: i64) -> Self {
        self.stratum_euler
            .push((ids.iter().map(|s| s.to_string()).collect(), chi));
        self
    }
}

fn sym(name: &str, mu: u64, base: &str) -> MotivicClass {
    MotivicClass::symbol(&GeneratorSymbol::new(name, mu, base).expect("valid symbol"))
}

fn poly(base: &str, terms: &[(i64, i64)]) -> MotivicClass {
    MotivicClass::from_poly(base, LaurentPoly::from_terms(terms.iter().copied()))
}

fn add(a: MotivicClass, b: MotivicClass) -> MotivicClass {
    a.try_add(&b).expect("same base")
}

/// The open unit ball `Spf R[[x_1..x_d]]`: a single point, `MV = 1`.
pub fn ball_open(d: u32) -> ResolutionData {
    ResolutionData::new(d, "k")
        .with_stratum(StratumDatum::new("X0", 1).alpha(0))
        .with_class(&["X0"], MotivicClass::one("k"))
}

/// The closed ball of radius `|ϖ^p|` with gauge form `dx`: special fiber
/// `A^d`, form order `d·p`.
pub fn ball_closed(d: u32, p: u32) -> ResolutionData {
    let base = format!("A^{d}");
    ResolutionData::new(d, base.clone())
        .with_stratum(StratumDatum::new("X0", 1).alpha((d * p) as i64))
        .with_class(&["X0"], MotivicClass::lefschetz_pow(base, d as i64))
}

/// Name of the `μ_N` symbol used by `z^N`; `pt` when `N = 1`.
pub fn mu_symbol(n: u64) -> String {
    if n == 1 {
        "pt".to_string()
    } else {
        format!("mu_{n}")
    }
}

/// `[μ_N]` over `k`.
pub fn mu_class(n: u64) -> MotivicClass {
    if n == 1 {
        MotivicClass::one("k")
    } else {
        sym(&mu_symbol(n), n, "k")
    }
}

/// `z^N` near the origin of `A¹`: one stratum of multiplicity `N`, cover `μ_N`.
pub fn z_power(n: u64) -> ResolutionData {
    let mut data = ResolutionData::new(0, "k")
        .with_stratum(StratumDatum::new("0", n as i64).nu(1))
        .with_class(&["0"], mu_class(n));
    if n > 1 {
        data = data.with_euler(&mu_symbol(n), n as i64);
    }
    data
}

fn cusp_with(names: [&str; 5]) -> ResolutionData {
    let [e1, e2, e3, e13, e23] = names;
    ResolutionData::new(1, "k")
        .with_stratum(StratumDatum::new("C", 1).nu(1).orders(vec![0, 0]))
        .with_stratum(StratumDatum::new("E1", 2).nu(2).orders(vec![1, 1]))
        .with_stratum(StratumDatum::new("E2", 3).nu(3).orders(vec![2, 1]))
        .with_stratum(StratumDatum::new("E3", 6).nu(5).orders(vec![3, 2]))
        .with_class(&["E1"], sym(e1, 2, "k"))
        .with_class(&["E2"], sym(e2, 3, "k"))
        .with_class(&["E3"], sym(e3, 6, "k"))
        .with_class(&["E1", "E3"], sym(e13, 2, "k"))
        .with_class(&["E2", "E3"], sym(e23, 3, "k"))
        .with_class(&["C", "E3"], MotivicClass::one("k"))
        .with_euler(e1, 2)
        .with_euler(e2, 3)
        .with_euler(e3, -6)
        .with_euler(e13, 2)
        .with_euler(e23, 3)
}

pub const CUSP_SYMBOLS: [&str; 5] = ["E1~", "E2~", "E3~", "E13~", "E23~"];
pub const TWISTED_CUSP_SYMBOLS: [&str; 5] = ["F1~", "F2~", "F3~", "F13~", "F23~"];

/// `x² + y³` at the origin.
pub fn cusp() -> ResolutionData {
    cusp_with(CUSP_SYMBOLS)
}

/// `(1 + x)(x² + y³)`: same combinatorics, covers named independently.
pub fn cusp_twisted() -> ResolutionData {
    cusp_with(TWISTED_CUSP_SYMBOLS)
}

/// Symbol identification between [`cusp`] and [`cusp_twisted`].
pub fn cusp_identification() -> BTreeMap<String, String> {
    CUSP_SYMBOLS
        .iter()
        .zip(TWISTED_CUSP_SYMBOLS)
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

/// Resolution data of `xy + z^N` over the `x`-axis, for `N ∈ {1, 2, 3}`.
pub fn xy_plus_z(n: u64) -> Option<ResolutionData> {
    let b = "A^1";
    let data = match n {
        1 => ResolutionData::new(2, b)
            .with_stratum(StratumDatum::new("C", 1).nu(1))
            .with_class(&["C"], MotivicClass::lefschetz_pow(b, 1)),
        2 => ResolutionData::new(2, b)
            .with_stratum(StratumDatum::new("C", 1).nu(1))
            .with_stratum(StratumDatum::new("E", 2).nu(3))
            .with_class(&["C"], poly(b, &[(1, 1), (0, -1)]))
            .with_class(&["E"], add(sym("mu_2", 2, b).shift(1), poly(b, &[(2, 1), (1, -1)])))
            .with_class(&["C", "E"], poly(b, &[(1, 1), (0, 1)]))
            .with_euler("mu_2", 2),
        3 => ResolutionData::new(2, b)
            .with_stratum(StratumDatum::new("C", 1).nu(1))
            .with_stratum(StratumDatum::new("D1", 1).nu(2))
            .with_stratum(StratumDatum::new("E2", 3).nu(4))
            .with_class(&["D1"], poly(b, &[(2, 1), (1, -1)]))
            .with_class(&["E2"], add(poly(b, &[(2, 1), (1, -2), (0, 1)]), sym("mu_3", 3, b).shift(1)))
            .with_class(&["C", "D1"], poly(b, &[(1, 2), (0, -1)]))
            .with_class(&["C", "E2"], poly(b, &[(1, 1), (0, -1)]))
            .with_class(&["D1", "E2"], poly(b, &[(1, 1), (0, -1)]))
            .with_class(&["C", "D1", "E2"], poly(b, &[(0, 2)]))
            .with_euler("mu_3", 3),
        _ => return None,
    };
    Some(data)
}

/// A symbol of the shared alphabet of an identity instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlossaryEntry {
    pub symbol: String,
    pub mu: u64,
    pub euler: i64,
}

/// An instance `∫_{A^{d1}} S_f = L^{d1} S_{f̃,0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityInstance {
    pub d1: u32,
    pub d2: u32,
    pub d3: u32,
    pub data_f: ResolutionData,
    pub data_ftilde: ResolutionData,
    pub glossary: Vec<GlossaryEntry>,
}

impl IdentityInstance {
    pub fn euler_values(&self) -> BTreeMap<String, i64> {
        self.glossary
            .iter()
            .map(|g| (g.symbol.clone(), g.euler))
            .collect()
    }
}

/// `f = xy + z^N` with `d1 = d2 = d3 = 1`.
pub fn identity_xy_plus_z(n: u64) -> Option<IdentityInstance> {
    let data_f = xy_plus_z(n)?;
    let mut glossary = Vec::new();
    if n > 1 {
        glossary.push(GlossaryEntry {
            symbol: mu_symbol(n),
            mu: n,
            euler: n as i64,
        });
    }
    Some(IdentityInstance {
        d1: 1,
        d2: 1,
        d3: 1,
        data_f,
        data_ftilde: z_power(n),
        glossary,
    })
}

/// Every built-in dataset with its expected values.
pub fn builtin_examples() -> Vec<ExampleSpec> {
    let mut out = Vec::new();
    for d in 1..=5u32 {
        out.push(
            ExampleSpec::new(
                &format!("ball_open_{d}"),
                &format!("open unit ball of dimension {d}"),
                ball_open(d),
                Provenance::Published,
            )
            .expect("mv", MotivicClass::one("k"))
            .euler(&["X0"], 1),
        );
        for p in 0..=3u32 {
            let name = if p == 0 {
                format!("ball_closed_{d}")
            } else {
                format!("ball_closed_{d}_p{p}")
            };
            out.push(
                ExampleSpec::new(
                    &name,
                    &format!("closed ball of dimension {d} and radius |ϖ^{p}|"),
                    ball_closed(d, p),
                    Provenance::Published,
                )
                .expect("mv", MotivicClass::lefschetz_pow("k", d as i64))
                .euler(&["X0"], 1),
            );
        }
    }
    for n in 1..=4u64 {
        out.push(
            ExampleSpec::new(
                &format!("z_pow_{n}"),
                &format!("z^{n} at the origin"),
                z_power(n),
                Provenance::Derived,
            )
            .expect("nearby", mu_class(n))
            .euler(&["0"], 1),
        );
    }
    let cusp_spec = |name: &str, desc: &str, data: ResolutionData, names: [&str; 5]| {
        let mut spec = ExampleSpec::new(name, desc, data, Provenance::Derived);
        let [e1, e2, e3, e13, e23] = names;
        let one_minus_l = LaurentPoly::one_minus_l_pow(1);
        let crossings = add(add(sym(e13, 2, "k"), sym(e23, 3, "k")), MotivicClass::one("k"));
        let nearby = add(
            add(add(sym(e1, 2, "k"), sym(e2, 3, "k")), sym(e3, 6, "k")),
            crossings.scale(&one_minus_l),
        );
        spec = spec
            .expect("nearby", nearby)
            .euler(&["E1"], 1)
            .euler(&["E2"], 1)
            .euler(&["E3"], -1)
            .euler(&["E1", "E3"], 1)
            .euler(&["E2", "E3"], 1)
            .euler(&["C", "E3"], 1);
        spec.gammas = vec!["0".into(), "1/3".into(), "1/2".into(), "1".into(), "2".into()];
        spec
    };
    out.push(cusp_spec("cusp", "x^2 + y^3 at the origin", cusp(), CUSP_SYMBOLS));
    out.push(cusp_spec(
        "cusp_twisted",
        "(1 + x)(x^2 + y^3) at the origin",
        cusp_twisted(),
        TWISTED_CUSP_SYMBOLS,
    ));
    for n in 1..=3u64 {
        let data = xy_plus_z(n).expect("n <= 3");
        let mut spec = ExampleSpec::new(
            &format!("xy_plus_z{n}"),
            &format!("xy + z^{n} over the x-axis"),
            data,
            Provenance::Derived,
        )
        .expect("nearby", mu_class(n).shift(1));
        spec = match n {
            1 => spec.euler(&["C"], 1),
            2 => spec.euler(&["C"], 0).euler(&["E"], 1).euler(&["C", "E"], 2),
            _ => spec
                .euler(&["D1"], 0)
                .euler(&["E2"], 1)
                .euler(&["C", "D1"], 1)
                .euler(&["C", "E2"], 0)
                .euler(&["D1", "E2"], 0)
                .euler(&["C", "D1", "E2"], 2),
        };
        out.push(spec);
    }
    out
}

pub fn find_example(name: &str) -> Option<ExampleSpec> {
    builtin_examples().into_iter().find(|e| e.name == name)
}

/// Names of the identity instances, as accepted by [`find_identity`].
pub fn identity_names() -> Vec<String> {
    (1..=3).map(|n| format!("identity_xy_plus_z{n}")).collect()
}

pub fn find_identity(name: &str) -> Option<IdentityInstance> {
    let n: u64 = name.strip_prefix("identity_xy_plus_z")?.parse().ok()?;
    identity_xy_plus_z(n)
}

/// `χ_c(E_I°)` weighted A'Campo sum `Σ_i N_i χ_c(E_i°)` over single strata.
pub fn a_campo_sum(spec: &ExampleSpec) -> Result<i64> {
    let mut total = 0;
    for (ids, chi) in &spec.stratum_euler {
        if let [id] = ids.as_slice() {
            let i = spec
                .data
                .index_of(id)
                .ok_or_else(|| crate::Error::Input(format!("unknown stratum `{id}`")))?;
            total += spec.data.strata[i].n * chi;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_builtins_validate() {
        for e in builtin_examples() {
            let r = e.data.validate();
            assert!(r.is_ok(), "{}: {r}", e.name);
            assert!(r.warnings.is_empty(), "{}: {r}", e.name);
        }
    }

    #[test]
    fn names_are_unique() {
        let names: std::collections::BTreeSet<_> =
            builtin_examples().into_iter().map(|e| e.name).collect();
        assert_eq!(names.len(), builtin_examples().len());
    }

    #[test]
    fn cusp_a_campo() {
        assert_eq!(a_campo_sum(&find_example("cusp").unwrap()).unwrap(), -1);
    }
}
