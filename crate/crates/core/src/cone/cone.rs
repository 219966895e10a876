//! Half-open rational polyhedral cones inside the open positive orthant.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use super::fm::{self, Rel, Row};
use crate::error::{Error, Result};

/// An integral linear form on `Z^I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm(pub Vec<i64>);

impl LinearForm {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Self(coeffs)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The `i`-th coordinate function on `Z^n`.
    pub fn coordinate(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn eval(&self, k: &[i64]) -> i64 {
        self.0.iter().zip(k).map(|(a, b)| a * b).sum()
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }

    /// `self ⊕ other` on `Z^{I ⊔ I'}`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    /// Extends by `extra` zero coordinates.
    pub fn pad(&self, before: usize, after: usize) -> Self {
        let mut v = vec![0; before];
        v.extend_from_slice(&self.0);
        v.extend(std::iter::repeat_n(0, after));
        Self(v)
    }

    fn to_i128(&self) -> Vec<i128> {
        self.0.iter().map(|&c| c as i128).collect()
    }

    /// Primitive representative with positive leading coefficient, and the
    /// sign that was applied.
    fn primitive(&self) -> (Self, i64) {
        let g = self.0.iter().fold(0i64, |g, &c| g.gcd(&c));
        let lead = self.0.iter().copied().find(|&c| c != 0).unwrap_or(1);
        let s = lead.signum();
        (Self(self.0.iter().map(|c| c / g * s).collect()), s)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_form(f, &self.0, None)
    }
}

/// A form rendered with a cone's variable names.
pub(crate) struct Named<'a>(pub &'a LinearForm, pub &'a [String]);

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_form(f, &self.0 .0, Some(self.1))
    }
}

fn fmt_form(f: &mut fmt::Formatter<'_>, coeffs: &[i64], vars: Option<&[String]>) -> fmt::Result {
    let mut first = true;
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let name = match vars {
            Some(v) => v[i].clone(),
            None => format!("k{i}"),
        };
        let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
        if first {
            if c < 0 {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        if abs == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{abs}{name}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    /// `f >= 0`
    NonNegative,
    /// `f > 0`
    Positive,
    /// `f = 0`
    Zero,
}

impl Relation {
    fn rel(self) -> Rel {
        match self {
            Relation::NonNegative => Rel::Ge,
            Relation::Positive => Rel::Gt,
            Relation::Zero => Rel::Eq,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::NonNegative => ">=",
            Relation::Positive => ">",
            Relation::Zero => "=",
        }
    }

    /// Signs (of `f`) allowed by the relation, as a mask over [+, 0, -].
    fn sign_mask(self) -> u8 {
        match self {
            Relation::NonNegative => POS | ZERO,
            Relation::Positive => POS,
            Relation::Zero => ZERO,
        }
    }

    pub fn holds(self, value: i64) -> bool {
        match self {
            Relation::NonNegative => value >= 0,
            Relation::Positive => value > 0,
            Relation::Zero => value == 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub form: LinearForm,
    pub relation: Relation,
}

impl Constraint {
    pub fn new(form: LinearForm, relation: Relation) -> Self {
        Self { form, relation }
    }

    pub fn ge(coeffs: Vec<i64>) -> Self {
        Self::new(LinearForm(coeffs), Relation::NonNegative)
    }

    pub fn gt(coeffs: Vec<i64>) -> Self {
        Self::new(LinearForm(coeffs), Relation::Positive)
    }

    pub fn eq(coeffs: Vec<i64>) -> Self {
        Self::new(LinearForm(coeffs), Relation::Zero)
    }

    pub fn holds_at(&self, k: &[i64]) -> bool {
        self.relation.holds(self.form.eval(k))
    }

    pub(crate) fn row(&self) -> Row {
        Row::new(self.form.to_i128(), 0, self.relation.rel())
    }

    fn pad(&self, before: usize, after: usize) -> Self {
        Self::new(self.form.pad(before, after), self.relation)
    }
}

const POS: u8 = 1;
const ZERO: u8 = 2;
const NEG: u8 = 4;

/// `{k ∈ R^I_{>0} : constraints}`. The open-orthant condition is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone {
    vars: Vec<String>,
    constraints: Vec<Constraint>,
}

impl Cone {
    pub fn new(vars: Vec<String>, constraints: Vec<Constraint>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        for c in &constraints {
            if c.form.len() != vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: vars.len(),
                    found: c.form.len(),
                });
            }
        }
        Ok(Self { vars, constraints })
    }

    /// The open orthant `R^n_{>0}` with variables `k0..k{n-1}`.
    pub fn orthant(n: usize) -> Self {
        Self {
            vars: (0..n).map(|i| format!("k{i}")).collect(),
            constraints: Vec::new(),
        }
    }

    pub fn orthant_named(vars: Vec<String>) -> Result<Self> {
        Self::new(vars, Vec::new())
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn with_constraint(&self, c: Constraint) -> Result<Self> {
        let mut cs = self.constraints.clone();
        cs.push(c);
        Self::new(self.vars.clone(), cs)
    }

    /// `Δ × Δ'` in `R^{I ⊔ I'}`.
    pub fn product(&self, other: &Cone) -> Cone {
        let (n1, n2) = (self.n_vars(), other.n_vars());
        let mut vars = self.vars.clone();
        for v in &other.vars {
            let mut name = v.clone();
            while vars.contains(&name) {
                name.push('\'');
            }
            vars.push(name);
        }
        let mut constraints: Vec<Constraint> =
            self.constraints.iter().map(|c| c.pad(0, n2)).collect();
        constraints.extend(other.constraints.iter().map(|c| c.pad(n1, 0)));
        Cone { vars, constraints }
    }

    /// Membership of an integer point (all coordinates must be positive).
    pub fn contains(&self, k: &[i64]) -> bool {
        k.len() == self.n_vars()
            && k.iter().all(|&x| x > 0)
            && self.constraints.iter().all(|c| c.holds_at(k))
    }

    pub(crate) fn rows(&self) -> Vec<Row> {
        let n = self.n_vars();
        let mut rows: Vec<Row> = (0..n)
            .map(|i| {
                let mut c = vec![0i128; n];
                c[i] = 1;
                Row::new(c, 0, Rel::Gt)
            })
            .collect();
        rows.extend(self.constraints.iter().map(Constraint::row));
        rows
    }

    /// Rows of the closure `Δ̄` (strictness relaxed, closed orthant).
    pub(crate) fn closure_rows(&self) -> Vec<Row> {
        self.rows()
            .into_iter()
            .map(|mut r| {
                if r.rel == Rel::Gt {
                    r.rel = Rel::Ge;
                }
                r
            })
            .collect()
    }

    pub fn is_feasible(&self) -> bool {
        fm::is_feasible(self.n_vars(), self.rows())
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> Result<usize> {
        if !self.is_feasible() {
            return Err(Error::EmptyCone);
        }
        let n = self.n_vars();
        let mut equalities: Vec<Vec<i64>> = Vec::new();
        for c in &self.constraints {
            match c.relation {
                Relation::Zero => equalities.push(c.form.0.clone()),
                Relation::NonNegative => {
                    let mut rows = self.rows();
                    rows.push(Row::new(c.form.to_i128(), 0, Rel::Gt));
                    if !fm::is_feasible(n, rows) {
                        equalities.push(c.form.0.clone());
                    }
                }
                Relation::Positive => {}
            }
        }
        Ok(n - rank(&equalities))
    }

    /// Euler characteristic with compact supports of the cone as a point set.
    pub fn chi(&self) -> i64 {
        let n = self.n_vars();
        let mut masks: BTreeMap<LinearForm, u8> = BTreeMap::new();
        for c in &self.constraints {
            if c.form.is_zero() {
                if c.relation == Relation::Positive {
                    return 0;
                }
                continue;
            }
            let (h, s) = c.form.primitive();
            let mut m = c.relation.sign_mask();
            if s < 0 {
                m = flip_mask(m);
            }
            *masks.entry(h).or_insert(POS | ZERO | NEG) &= m;
        }
        let hyperplanes: Vec<(LinearForm, u8)> = masks.into_iter().collect();
        if hyperplanes.iter().any(|(_, m)| *m == 0) {
            return 0;
        }
        let mut total = 0;
        let mut chosen = Vec::with_capacity(hyperplanes.len());
        walk_cells(n, &hyperplanes, &mut chosen, &mut |signs| {
            total += cell_sign(n, &hyperplanes, signs);
        });
        total
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{} > 0", self.vars.join(", "))?;
        for c in &self.constraints {
            write!(f, "; ")?;
            fmt_form(f, &c.form.0, Some(&self.vars))?;
            write!(f, " {} 0", c.relation.symbol())?;
        }
        write!(f, "}}")
    }
}

fn flip_mask(m: u8) -> u8 {
    let mut out = m & ZERO;
    if m & POS != 0 {
        out |= NEG;
    }
    if m & NEG != 0 {
        out |= POS;
    }
    out
}

fn sign_row(h: &LinearForm, sign: u8) -> Row {
    match sign {
        POS => Row::new(h.to_i128(), 0, Rel::Gt),
        ZERO => Row::new(h.to_i128(), 0, Rel::Eq),
        _ => Row::new(h.neg().to_i128(), 0, Rel::Gt),
    }
}

fn orthant_rows(n: usize) -> Vec<Row> {
    (0..n)
        .map(|i| {
            let mut c = vec![0i128; n];
            c[i] = 1;
            Row::new(c, 0, Rel::Gt)
        })
        .collect()
}

/// Depth-first enumeration of the nonempty cells of the arrangement that
/// respect each hyperplane's allowed sign mask; infeasible prefixes prune.
fn walk_cells(
    n: usize,
    hyperplanes: &[(LinearForm, u8)],
    chosen: &mut Vec<u8>,
    visit: &mut dyn FnMut(&[u8]),
) {
    let depth = chosen.len();
    let mut rows = orthant_rows(n);
    rows.extend(
        chosen
            .iter()
            .zip(hyperplanes)
            .map(|(&s, (h, _))| sign_row(h, s)),
    );
    if !fm::is_feasible(n, rows) {
        return;
    }
    if depth == hyperplanes.len() {
        visit(chosen);
        return;
    }
    for s in [POS, ZERO, NEG] {
        if hyperplanes[depth].1 & s != 0 {
            chosen.push(s);
            walk_cells(n, hyperplanes, chosen, visit);
            chosen.pop();
        }
    }
}

/// `(-1)^dim` of a nonempty cell: it is open in the span cut out by its
/// zero-sign hyperplanes.
fn cell_sign(n: usize, hyperplanes: &[(LinearForm, u8)], signs: &[u8]) -> i64 {
    let zeros: Vec<Vec<i64>> = signs
        .iter()
        .zip(hyperplanes)
        .filter(|(&s, _)| s == ZERO)
        .map(|(_, (h, _))| h.0.clone())
        .collect();
    let dim = n - rank(&zeros);
    if dim.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Euler characteristic with compact supports of a finite union of cones on
/// the same variables, computed on the common refinement of all their
/// hyperplanes.
pub fn chi_union(cones: &[Cone]) -> Result<i64> {
    let Some(first) = cones.first() else {
        return Ok(0);
    };
    let n = first.n_vars();
    if let Some(bad) = cones.iter().find(|c| c.n_vars() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.n_vars(),
        });
    }
    let mut set: BTreeMap<LinearForm, u8> = BTreeMap::new();
    for cone in cones {
        for c in &cone.constraints {
            if !c.form.is_zero() {
                set.insert(c.form.primitive().0, POS | ZERO | NEG);
            }
        }
    }
    let hyperplanes: Vec<(LinearForm, u8)> = set.into_iter().collect();
    let mut total = 0;
    let mut chosen = Vec::new();
    walk_cells(n, &hyperplanes, &mut chosen, &mut |signs| {
        let inside = cones.iter().any(|cone| {
            cone.constraints.iter().all(|c| {
                if c.form.is_zero() {
                    return c.relation != Relation::Positive;
                }
                let (h, s) = c.form.primitive();
                let idx = hyperplanes
                    .binary_search_by(|(g, _)| g.cmp(&h))
                    .expect("hyperplane collected");
                let mut sign = signs[idx];
                if s < 0 {
                    sign = flip_mask(sign);
                }
                c.relation.sign_mask() & sign != 0
            })
        });
        if inside {
            total += cell_sign(n, &hyperplanes, signs);
        }
    });
    Ok(total)
}

/// Exact rank of an integer matrix given by rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let Some(cols) = m.first().map(Vec::len) else {
        return 0;
    };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let pivot = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x = a * *x - b * y;
                }
                let g = m[i].iter().fold(0i128, |g, &x| g.gcd(&x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Exact feasibility of `vars` under `constraints` plus the open orthant.
pub fn feasible(n_vars: usize, constraints: &[Constraint]) -> bool {
    let mut rows = orthant_rows(n_vars);
    rows.extend(constraints.iter().map(Constraint::row));
    fm::is_feasible(n_vars, rows)
}
