//! Enumeration of the lattice points of `Δ ∩ {ℓ = n}` for a sequence of `n`.
//!
//! Variables are ordered `(n, k_1, ..., k_m)`. Projecting away `k_m`, then
//! `k_{m-1}`, and so on yields one bound system per level, so a loop nest
//! visits only values whose prefix extends to a rational solution. The
//! projections are computed once and reused for every `n`.

use std::collections::BTreeMap;

use super::cone::{Cone, LinearForm, Relation};
use super::fm::{self, Rel, Row};

pub(crate) struct FiberScanner {
    m: usize,
    /// `levels[i]` constrains `(n, k_1..k_{i+1})`.
    levels: Vec<Vec<Row>>,
    exact: Vec<Row>,
    feasible: bool,
}

impl FiberScanner {
    pub fn new(cone: &Cone, degree: &LinearForm) -> Self {
        let m = cone.n_vars();
        let width = m + 1;
        let lift = |coeffs: &[i64]| -> Vec<i128> {
            let mut v = vec![0i128; width];
            for (i, &c) in coeffs.iter().enumerate() {
                v[i + 1] = c as i128;
            }
            v
        };
        let mut rows = Vec::new();
        for i in 0..m {
            let mut c = vec![0i128; width];
            c[i + 1] = 1;
            rows.push(Row::new(c, -1, Rel::Ge));
        }
        for c in cone.constraints() {
            let coeffs = lift(c.form.coeffs());
            // an integer-valued form is > 0 exactly when it is >= 1
            rows.push(match c.relation {
                Relation::NonNegative => Row::new(coeffs, 0, Rel::Ge),
                Relation::Positive => Row::new(coeffs, -1, Rel::Ge),
                Relation::Zero => Row::new(coeffs, 0, Rel::Eq),
            });
        }
        let mut ell = lift(degree.coeffs());
        ell[0] = -1;
        rows.push(Row::new(ell, 0, Rel::Eq));
        let exact = rows.clone();

        let mut levels = vec![Vec::new(); m];
        let mut current = fm::simplify(rows);
        for var in (1..=m).rev() {
            let Some(sys) = current else { break };
            levels[var - 1] = sys.clone();
            current = fm::eliminate(sys, var);
        }
        let feasible = current.is_some();
        Self {
            m,
            levels,
            exact,
            feasible,
        }
    }

    /// Histogram `exponent of L^{-v(k)} -> multiplicity` over the fiber at `n`.
    pub fn weights(&self, n: i64, weight: &LinearForm) -> BTreeMap<i64, i64> {
        let mut out = BTreeMap::new();
        if !self.feasible {
            return out;
        }
        let mut point = vec![0i128; self.m + 1];
        point[0] = n as i128;
        self.descend(1, &mut point, &mut |k| {
            let v: i64 = weight
                .coeffs()
                .iter()
                .zip(&k[1..])
                .map(|(&a, &b)| a * b as i64)
                .sum();
            *out.entry(-v).or_insert(0) += 1;
        });
        out.retain(|_, c| *c != 0);
        out
    }

    fn descend(&self, var: usize, point: &mut Vec<i128>, visit: &mut dyn FnMut(&[i128])) {
        if var > self.m {
            if self.exact.iter().all(|r| r.satisfied_by(point)) {
                visit(point);
            }
            return;
        }
        let Some((lo, hi)) = bounds(&self.levels[var - 1], var, point) else {
            return;
        };
        for x in lo..=hi {
            point[var] = x;
            self.descend(var + 1, point, visit);
        }
        point[var] = 0;
    }
}

/// Integer range for variable `var` given values of all earlier variables.
fn bounds(rows: &[Row], var: usize, point: &[i128]) -> Option<(i128, i128)> {
    let mut lo = i128::MIN;
    let mut hi = i128::MAX;
    for r in rows {
        let a = r.coeffs[var];
        let rest: i128 = r.constant
            + r.coeffs[..var]
                .iter()
                .zip(&point[..var])
                .map(|(c, x)| c * x)
                .sum::<i128>();
        if a == 0 {
            // a row on earlier variables only
            let ok = match r.rel {
                Rel::Ge => rest >= 0,
                Rel::Gt => rest > 0,
                Rel::Eq => rest == 0,
            };
            if !ok {
                return None;
            }
            continue;
        }
        // a * x + rest REL 0
        match r.rel {
            Rel::Eq => {
                if rest % a != 0 {
                    return None;
                }
                let x = -rest / a;
                lo = lo.max(x);
                hi = hi.min(x);
            }
            Rel::Ge if a > 0 => lo = lo.max(div_ceil(-rest, a)),
            Rel::Ge => hi = hi.min(div_floor(rest, -a)),
            Rel::Gt if a > 0 => lo = lo.max(div_floor(-rest, a) + 1),
            Rel::Gt => hi = hi.min(div_ceil(rest, -a) - 1),
        }
    }
    assert!(
        lo != i128::MIN && hi != i128::MAX,
        "fiber unbounded in k{var}; degree form not positive on the cone"
    );
    (lo <= hi).then_some((lo, hi))
}

fn div_floor(a: i128, b: i128) -> i128 {
    a.div_euclid(b) - if b < 0 && a.rem_euclid(b) != 0 { 1 } else { 0 }
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -div_floor(-a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::cone::Constraint;

    fn count(cone: &Cone, degree: Vec<i64>, n: i64) -> i64 {
        let zero = LinearForm::zeros(cone.n_vars());
        FiberScanner::new(cone, &LinearForm(degree))
            .weights(n, &zero)
            .values()
            .sum()
    }

    #[test]
    fn compositions_of_n_into_two_parts() {
        let c = Cone::orthant(2);
        for n in 1..10 {
            assert_eq!(count(&c, vec![1, 1], n), n - 1);
        }
    }

    #[test]
    fn strict_tightening() {
        // k0 > k1, k0 + k1 = n
        let c = Cone::new(
            vec!["a".into(), "b".into()],
            vec![Constraint::gt(vec![1, -1])],
        )
        .unwrap();
        assert_eq!(count(&c, vec![1, 1], 4), 1);
        assert_eq!(count(&c, vec![1, 1], 5), 2);
    }

    #[test]
    fn divisibility_via_equality() {
        let c = Cone::orthant(1);
        assert_eq!(count(&c, vec![3], 6), 1);
        assert_eq!(count(&c, vec![3], 5), 0);
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(div_floor(-7, 2), -4);
        assert_eq!(div_floor(7, -2), -4);
        assert_eq!(div_ceil(7, 2), 4);
        assert_eq!(div_ceil(-7, 2), -3);
    }
}
