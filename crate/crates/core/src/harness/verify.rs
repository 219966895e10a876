//! End-to-end checks with pass/fail reports.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::examples::{
    a_campo_sum, builtin_examples, ball_closed, ball_open, cusp, cusp_identification,
    cusp_twisted, find_example, identity_xy_plus_z, ExampleSpec, IdentityInstance,
};
use super::random;
use crate::cone::ConeSeries;
use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, MotivicClass, SpecializationMap, UNIT_SYMBOL};
use crate::zeta::{
    generalized_at_level, generalized_poincare, integral_at_level, motivic_volume,
    motivic_volume_closed_form, motivic_volume_via_limit, mv_at_least_by_union, mv_at_least_with,
    nearby_cycles, poincare_series, zeta_at_level, zeta_series, EllForm, Gamma, Gauge,
    ResolutionData,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records `Err` as a failed check instead of propagating it.
    pub fn push_result(&mut self, name: impl Into<String>, r: Result<Option<String>>) {
        match r {
            Ok(None) => self.push(name, true, ""),
            Ok(Some(why)) => self.push(name, false, why),
            Err(e) => self.push(name, false, format!("error: {e}")),
        }
    }

    pub fn extend(&mut self, other: Report) {
        let prefix = other.title;
        for mut c in other.checks {
            c.name = format!("{prefix}: {}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// `name: detail` of the first failing check.
    pub fn first_failure(&self) -> Option<String> {
        self.checks
            .iter()
            .find(|c| !c.passed)
            .map(|c| format!("{}: {}", c.name, c.detail))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "  {tag} {}", c.name)?;
            } else {
                writeln!(f, "  {tag} {}: {}", c.name, c.detail)?;
            }
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} checks, {} failed: {}",
            self.checks.len(),
            failed,
            if failed == 0 { "PASS" } else { "FAIL" }
        )
    }
}

fn diff(lhs: &MotivicClass, rhs: &MotivicClass) -> Option<String> {
    if lhs == rhs {
        return None;
    }
    let delta = match lhs.push("k").try_sub(&rhs.push("k")) {
        Ok(d) => d.canonical(),
        Err(e) => e.to_string(),
    };
    Some(format!(
        "left {} right {} difference {}",
        lhs.canonical(),
        rhs.canonical(),
        delta
    ))
}

fn euler_map(values: &BTreeMap<String, i64>) -> SpecializationMap {
    SpecializationMap::euler(values.clone())
}

/// `Σ_n` agreement of a series with a per-level oracle for `n = 1..=max_n`.
pub fn compare_levels(
    series: &ConeSeries,
    max_n: i64,
    mut level: impl FnMut(i64) -> Result<MotivicClass>,
) -> Result<Option<String>> {
    for (i, c) in series.coefficients(1..=max_n).into_iter().enumerate() {
        let n = i as i64 + 1;
        let want = level(n)?;
        if let Some(d) = diff(&c, &want) {
            return Ok(Some(format!("T^{n}: {d}")));
        }
    }
    Ok(None)
}

/// Poincaré coefficients against the per-level integral.
pub fn check_poincare_levels(data: &ResolutionData, gauge: Gauge, max_n: i64) -> Result<Option<String>> {
    let p = poincare_series(data, gauge)?;
    compare_levels(&p, max_n, |n| integral_at_level(data, n, gauge))
}

/// Zeta coefficients (Hadamard construction) against the per-level formula.
pub fn check_zeta_levels(data: &ResolutionData, max_n: i64) -> Result<Option<String>> {
    let z = zeta_series(data)?;
    compare_levels(&z, max_n, |n| zeta_at_level(data, n))
}

/// `L^d · P` with the Gelfand–Leray gauge equals the zeta series coefficientwise.
pub fn check_zeta_is_normalized_poincare(data: &ResolutionData, max_n: i64) -> Result<Option<String>> {
    let p = poincare_series(data, Gauge::GelfandLeray)?.scale(&LaurentPoly::l_pow(data.d as i64));
    let z = zeta_series(data)?;
    let zs = z.coefficients(1..=max_n);
    for (i, c) in p.coefficients(1..=max_n).into_iter().enumerate() {
        if let Some(d) = diff(&c, &zs[i]) {
            return Ok(Some(format!("T^{}: {d}", i + 1)));
        }
    }
    Ok(None)
}

/// Closed form of the motivic volume against `-L^d lim P`.
pub fn check_mv_dual(data: &ResolutionData, gauge: Gauge) -> Result<Option<String>> {
    let closed = motivic_volume_closed_form(data)?;
    let limit = motivic_volume_via_limit(data, gauge)?;
    Ok(diff(&closed, &limit))
}

/// Coefficientwise and limit laws of the Hadamard product.
pub fn check_hadamard_laws(p: &ConeSeries, q: &ConeSeries, max_n: i64) -> Result<Option<String>> {
    let h = p.hadamard(q)?;
    let (hc, pc, qc) = (
        h.coefficients(1..=max_n),
        p.coefficients(1..=max_n),
        q.coefficients(1..=max_n),
    );
    for i in 0..max_n as usize {
        let want = pc[i].try_mul(&qc[i])?;
        if let Some(d) = diff(&hc[i], &want) {
            return Ok(Some(format!("T^{}: {d}", i + 1)));
        }
    }
    let lhs = h.limit();
    let rhs = p.limit().try_mul(&q.limit())?.neg();
    Ok(diff(&lhs, &rhs).map(|d| format!("limit: {d}")))
}

/// Per-level agreement of the generalized series.
pub fn check_generalized_levels(
    data: &ResolutionData,
    gamma: Gamma,
    ell: EllForm,
    gauge: Gauge,
    max_n: i64,
) -> Result<Option<String>> {
    let g = generalized_poincare(data, gamma, ell, gauge)?;
    compare_levels(&g, max_n, |n| generalized_at_level(data, gamma, ell, gauge, n))
}

/// `∫_{A^{d1}} S_f = L^{d1} S_{f̃,0}` as classes, plus Euler specializations.
pub fn verify_identity(inst: &IdentityInstance) -> Result<Report> {
    let mut r = Report::new(format!(
        "identity (d1, d2, d3) = ({}, {}, {})",
        inst.d1, inst.d2, inst.d3
    ));
    let lhs = nearby_cycles(&inst.data_f)?.push("k");
    let rhs = nearby_cycles(&inst.data_ftilde)?
        .push("k")
        .shift(inst.d1 as i64);
    r.push(
        "class equality",
        lhs == rhs,
        diff(&lhs, &rhs).unwrap_or_else(|| lhs.canonical()),
    );
    let m = euler_map(&inst.euler_values());
    match (m.apply_integer(&lhs), m.apply_integer(&rhs)) {
        (Ok(a), Ok(b)) => r.push("euler specialization", a == b, format!("{a} vs {b}")),
        (Err(e), _) | (_, Err(e)) => r.push("euler specialization", false, format!("error: {e}")),
    }
    Ok(r)
}

fn symbols_of(data: &ResolutionData) -> BTreeSet<String> {
    data.classes
        .iter()
        .flat_map(|c| c.class.terms().map(|(s, _)| s.name))
        .filter(|n| n != UNIT_SYMBOL)
        .collect()
}

/// Equality of nearby cycles of two presentations differing by a unit.
pub fn verify_unit_invariance(
    a: &ResolutionData,
    b: &ResolutionData,
    ident: &BTreeMap<String, String>,
) -> Result<Report> {
    let (sa, sb) = (symbols_of(a), symbols_of(b));
    let keys: BTreeSet<String> = ident.keys().cloned().collect();
    let values: BTreeSet<String> = ident.values().cloned().collect();
    if keys != sa {
        return Err(Error::InvalidIdentification(format!(
            "domain {keys:?} differs from the symbols {sa:?} of the first dataset"
        )));
    }
    if values.len() != ident.len() || values != sb {
        return Err(Error::InvalidIdentification(format!(
            "image {values:?} is not a bijection onto the symbols {sb:?} of the second dataset"
        )));
    }
    let mut r = Report::new("unit invariance");
    let shape = |d: &ResolutionData| -> BTreeMap<String, (i64, Option<i64>)> {
        d.strata.iter().map(|s| (s.id.clone(), (s.n, s.nu))).collect()
    };
    let (ha, hb) = (shape(a), shape(b));
    r.push(
        "strata multiplicities",
        ha == hb,
        if ha == hb { String::new() } else { format!("{ha:?} vs {hb:?}") },
    );
    let na = nearby_cycles(a)?.rename(ident);
    let nb = nearby_cycles(b)?;
    r.push("nearby cycles", na == nb, diff(&na, &nb).unwrap_or_default());
    if a.strata.iter().chain(&b.strata).all(|s| s.nu.is_some()) {
        let za = zeta_series(a)?.coefficients(1..=12);
        let zb = zeta_series(b)?.coefficients(1..=12);
        let bad = za
            .iter()
            .zip(&zb)
            .position(|(x, y)| x.rename(ident) != *y);
        r.push(
            "zeta coefficients n <= 12",
            bad.is_none(),
            bad.map(|i| format!("first difference at T^{}", i + 1)).unwrap_or_default(),
        );
    }
    Ok(r)
}

/// `-L^{d1+d2} lim (P_a ∗ P_b) = MV(a) · MV(b)` and coefficientwise products.
pub fn verify_hadamard_multiplicativity(a: &ResolutionData, b: &ResolutionData) -> Result<Report> {
    let mut r = Report::new("hadamard multiplicativity");
    let (ga, gb) = (a.default_gauge(), b.default_gauge());
    let pa = poincare_series(a, ga)?.push("k");
    let pb = poincare_series(b, gb)?.push("k");
    let h = pa.hadamard(&pb)?;
    let lhs = h.limit().shift((a.d + b.d) as i64).neg();
    let rhs = motivic_volume(a, ga)?.push("k").try_mul(&motivic_volume(b, gb)?.push("k"))?;
    r.push("volume of the product", lhs == rhs, diff(&lhs, &rhs).unwrap_or_else(|| lhs.canonical()));
    let (hc, ac, bc) = (h.coefficients(1..=20), pa.coefficients(1..=20), pb.coefficients(1..=20));
    let mut bad = None;
    for i in 0..20 {
        if hc[i] != ac[i].try_mul(&bc[i])? {
            bad = Some(i + 1);
            break;
        }
    }
    r.push(
        "coefficients n <= 20",
        bad.is_none(),
        bad.map(|n| format!("differs at T^{n}")).unwrap_or_default(),
    );
    Ok(r)
}

/// `MV(X_{≥γ})` for each `ℓ`, compared with each other, with the union count
/// and (optionally) with an expected value.
pub fn verify_ell_independence(
    data: &ResolutionData,
    gamma: Gamma,
    ells: &[EllForm],
    gauge: Gauge,
    expected: Option<&MotivicClass>,
) -> Result<Report> {
    let mut r = Report::new(format!("l-independence at gamma = {gamma}"));
    let reference = mv_at_least_by_union(data, gamma)?;
    for ell in ells {
        let v = mv_at_least_with(data, gamma, *ell, gauge)?;
        r.push(ell.to_string(), v == reference, diff(&v, &reference).unwrap_or_else(|| v.canonical()));
        r.push_result(
            format!("{ell}: coefficients n <= 12"),
            check_generalized_levels(data, gamma, *ell, gauge, 12),
        );
    }
    let p0 = generalized_poincare(data, gamma, EllForm::ZERO, gauge)?;
    let pm = generalized_poincare(data, gamma, EllForm::new(0, 1), gauge)?;
    let delta = p0.limit().try_sub(&pm.limit())?;
    r.push(
        "lim P(l=0) - lim P(l=m)",
        delta.is_zero(),
        delta.canonical(),
    );
    if let Some(want) = expected {
        r.push("expected value", *want == reference, diff(&reference, want).unwrap_or_default());
    }
    Ok(r)
}

/// Every check applicable to a built-in dataset.
pub fn verify_example(spec: &ExampleSpec, max_n: i64) -> Result<Report> {
    let data = &spec.data;
    let mut r = Report::new(spec.name.clone());
    let report = data.validate();
    r.push("validation", report.is_ok(), report.to_string().trim().to_string());
    for (output, want) in &spec.expected {
        let got = match output.as_str() {
            "mv" => motivic_volume(data, spec.gauge),
            "nearby" => nearby_cycles(data),
            other => Err(Error::Input(format!("unknown output `{other}`"))),
        };
        r.push_result(format!("expected {output}"), got.map(|g| diff(&g.push("k"), want)));
    }
    r.push_result("MV closed form = -L^d lim P", check_mv_dual(data, spec.gauge));
    r.push_result(
        format!("P coefficients = level integrals, n <= {max_n}"),
        check_poincare_levels(data, spec.gauge, max_n),
    );
    if data.strata.iter().all(|s| s.nu.is_some()) {
        r.push_result(
            format!("Z coefficients = level formula, n <= {max_n}"),
            check_zeta_levels(data, max_n),
        );
        r.push_result(
            format!("Z = L^d P(omega/df), n <= {max_n}"),
            check_zeta_is_normalized_poincare(data, max_n),
        );
    }
    if !spec.stratum_euler.is_empty() {
        r.push_result("cover Euler characteristics", check_cover_euler(spec));
        r.push_result("A'Campo sum", check_a_campo(spec));
    }
    if data.strata.iter().all(|s| s.m.is_some()) {
        for g in &spec.gammas {
            let gamma: Gamma = g.parse()?;
            let ells = ell_family(gamma);
            r.extend(verify_ell_independence(data, gamma, &ells, spec.gauge, None)?);
        }
    }
    Ok(r)
}

/// `{0, m, 2n - m}`, keeping the forms that are valid for `γ`.
pub fn ell_family(gamma: Gamma) -> Vec<EllForm> {
    [EllForm::ZERO, EllForm::new(0, 1), EllForm::new(2, -1)]
        .into_iter()
        .filter(|e| e.validate(gamma).is_ok())
        .collect()
}

/// `χ_c([Ẽ_I°]) = N_I · χ_c(E_I°)` for every listed stratum.
pub fn check_cover_euler(spec: &ExampleSpec) -> Result<Option<String>> {
    let m = euler_map(&spec.data.euler);
    for (ids, chi) in &spec.stratum_euler {
        let refs: Vec<&str> = ids.iter().map(String::as_str).collect();
        let class = spec
            .data
            .class_of(&refs)
            .cloned()
            .unwrap_or_else(|| MotivicClass::zero(spec.data.base.clone()));
        let idx: Vec<usize> = ids
            .iter()
            .map(|id| spec.data.index_of(id).ok_or_else(|| Error::Input(format!("unknown stratum `{id}`"))))
            .collect::<Result<_>>()?;
        let got = m.apply_integer(&class)?;
        let want = spec.data.n_of(&idx) * chi;
        if got != want {
            return Ok(Some(format!("{{{}}}: {got} vs N_I * chi = {want}", ids.join(","))));
        }
    }
    Ok(None)
}

/// Euler characteristic of the nearby cycles against `Σ_i N_i χ_c(E_i°)`.
pub fn check_a_campo(spec: &ExampleSpec) -> Result<Option<String>> {
    let m = euler_map(&spec.data.euler);
    let got = m.apply_integer(&nearby_cycles(&spec.data)?)?;
    let want = a_campo_sum(spec)?;
    Ok((got != want).then(|| format!("{got} vs {want}")))
}

/// Euler characteristic of the nearby cycles from the data's symbol values.
pub fn nearby_euler(data: &ResolutionData) -> Result<i64> {
    let m = euler_map(&data.euler);
    m.apply_integer(&nearby_cycles(data)?)
}

/// Built-in suite plus `cases` seeded random checks of each kind.
pub fn run_suite(seed: u64, cases: usize) -> Result<Report> {
    let mut r = Report::new(format!("suite (seed {seed}, {cases} random cases)"));
    for spec in builtin_examples() {
        r.extend(verify_example(&spec, 30)?);
    }
    for n in 1..=3 {
        let inst = identity_xy_plus_z(n).expect("n <= 3");
        let mut rep = verify_identity(&inst)?;
        rep.title = format!("identity xy + z^{n}");
        r.extend(rep);
    }
    r.extend(verify_unit_invariance(&cusp(), &cusp_twisted(), &cusp_identification())?);
    for (name, a, b) in [
        ("ball x ball", ball_closed(1, 0), ball_closed(1, 0)),
        ("ball x open ball", ball_closed(1, 0), ball_open(1)),
        ("cusp x ball", cusp(), ball_closed(1, 1)),
    ] {
        let mut rep = verify_hadamard_multiplicativity(&a, &b)?;
        rep.title = format!("hadamard {name}");
        r.extend(rep);
    }
    let annulus = motivic_volume(&ball_closed(1, 0), Gauge::Explicit)?
        .push("k")
        .try_sub(&motivic_volume(&ball_closed(1, 2), Gauge::Explicit)?.push("k"))?;
    r.push("annulus volume", annulus.is_zero(), annulus.canonical());

    let mut g = random::rng(seed);
    for i in 0..cases {
        let p = random::cone_series(&mut g, "k");
        let q = random::cone_series(&mut g, "k");
        r.push_result(format!("random hadamard pair {i}"), check_hadamard_laws(&p, &q, 12));
    }
    for i in 0..cases {
        let data = random::dataset(&mut g);
        let checks = || -> Result<Option<String>> {
            for check in [
                check_poincare_levels(&data, Gauge::Explicit, 12)?,
                check_zeta_levels(&data, 12)?,
                check_mv_dual(&data, Gauge::Explicit)?,
            ] {
                if check.is_some() {
                    return Ok(check);
                }
            }
            for gamma in ["1/2", "1", "2"] {
                let rep = verify_ell_independence(
                    &data,
                    gamma.parse()?,
                    &ell_family(gamma.parse()?),
                    Gauge::Explicit,
                    None,
                )?;
                let first = rep.failures().next().map(|c| format!("gamma {gamma}: {}: {}", c.name, c.detail));
                if first.is_some() {
                    return Ok(first);
                }
            }
            Ok(None)
        };
        r.push_result(format!("random dataset {i}"), checks());
    }
    Ok(r)
}

/// Suite entry for a single dataset file.
pub fn verify_data(data: &ResolutionData, seed_name: &str) -> Result<Report> {
    let spec = ExampleSpec {
        name: seed_name.to_string(),
        description: String::new(),
        data: data.clone(),
        gauge: data.default_gauge(),
        expected: BTreeMap::new(),
        provenance: super::examples::Provenance::Trivial,
        stratum_euler: Vec::new(),
        gammas: if data.strata.iter().all(|s| s.m.is_some()) {
            vec!["1".into()]
        } else {
            Vec::new()
        },
    };
    verify_example(&spec, 20)
}

/// Looks up a built-in by name for CLI and examples.
pub fn example_or_err(name: &str) -> Result<ExampleSpec> {
    find_example(name).ok_or_else(|| Error::Input(format!("no built-in example named `{name}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_instances_pass() {
        for n in 1..=3 {
            let r = verify_identity(&identity_xy_plus_z(n).unwrap()).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn perturbed_identity_fails_with_diff() {
        let mut inst = identity_xy_plus_z(2).unwrap();
        let c = &mut inst.data_f.classes[0].class;
        *c = c.try_add(&MotivicClass::one("A^1")).unwrap();
        let r = verify_identity(&inst).unwrap();
        assert!(!r.passed());
        assert!(r.checks[0].detail.contains("difference (1*L^0) * [pt; mu=1; base=k]"), "{r}");
    }

    #[test]
    fn unit_invariance_controls() {
        let ok = verify_unit_invariance(&cusp(), &cusp_twisted(), &cusp_identification()).unwrap();
        assert!(ok.passed(), "{ok}");
        let id: BTreeMap<String, String> = symbols_of(&cusp()).into_iter().map(|s| (s.clone(), s)).collect();
        assert!(verify_unit_invariance(&cusp(), &cusp(), &id).unwrap().passed());
        let mut bad = cusp_twisted();
        bad.strata[1].n = 4;
        assert!(!verify_unit_invariance(&cusp(), &bad, &cusp_identification()).unwrap().passed());
        let mut partial = cusp_identification();
        partial.remove("E1~");
        assert!(matches!(
            verify_unit_invariance(&cusp(), &cusp_twisted(), &partial),
            Err(Error::InvalidIdentification(_))
        ));
    }

    #[test]
    fn ell_negative_control() {
        let data = cusp();
        let one: Gamma = "1".parse().unwrap();
        let third: Gamma = "1/3".parse().unwrap();
        let other = mv_at_least_by_union(&data, third).unwrap();
        let r = verify_ell_independence(&data, one, &ell_family(one), Gauge::GelfandLeray, Some(&other)).unwrap();
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1, "{r}");
    }
}
