//! Exact Fourier–Motzkin elimination over the rationals for mixed systems
//! of equalities, non-strict and strict affine inequalities.

use std::collections::HashMap;

use num_integer::Integer;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Rel {
    Ge,
    Gt,
    Eq,
}

/// `coeffs · x + constant  REL  0`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Row {
    pub coeffs: Vec<i128>,
    pub constant: i128,
    pub rel: Rel,
}

impl Row {
    pub fn new(coeffs: Vec<i128>, constant: i128, rel: Rel) -> Self {
        Self { coeffs, constant, rel }
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Truth value of a row without variables.
    fn holds_trivially(&self) -> bool {
        match self.rel {
            Rel::Ge => self.constant >= 0,
            Rel::Gt => self.constant > 0,
            Rel::Eq => self.constant == 0,
        }
    }

    fn normalize(mut self) -> Self {
        let g = self
            .coeffs
            .iter()
            .fold(self.constant.abs(), |g, &c| g.gcd(&c));
        if g > 1 {
            for c in &mut self.coeffs {
                *c /= g;
            }
            self.constant /= g;
        }
        if self.rel == Rel::Eq {
            let lead = self.coeffs.iter().copied().find(|&c| c != 0).unwrap_or(self.constant);
            if lead < 0 {
                for c in &mut self.coeffs {
                    *c = -*c;
                }
                self.constant = -self.constant;
            }
        }
        self
    }

    /// Evaluate `coeffs · x + constant` at an integer point.
    pub fn eval(&self, x: &[i128]) -> i128 {
        self.coeffs
            .iter()
            .zip(x)
            .map(|(a, b)| a * b)
            .sum::<i128>()
            + self.constant
    }

    pub fn satisfied_by(&self, x: &[i128]) -> bool {
        let v = self.eval(x);
        match self.rel {
            Rel::Ge => v >= 0,
            Rel::Gt => v > 0,
            Rel::Eq => v == 0,
        }
    }
}

/// Normalizes rows, drops trivial ones and keeps the strongest row among
/// parallel inequalities. Returns `None` if a trivially false row appears.
pub(crate) fn simplify(rows: Vec<Row>) -> Option<Vec<Row>> {
    let mut ineqs: HashMap<Vec<i128>, (i128, Rel)> = HashMap::new();
    let mut eqs: HashMap<Vec<i128>, i128> = HashMap::new();
    let mut order: Vec<(Vec<i128>, bool)> = Vec::new();
    for row in rows {
        let row = row.normalize();
        if row.is_trivial() {
            if !row.holds_trivially() {
                return None;
            }
            continue;
        }
        match row.rel {
            Rel::Eq => match eqs.get(&row.coeffs) {
                Some(&c) if c != row.constant => return None,
                Some(_) => {}
                None => {
                    order.push((row.coeffs.clone(), true));
                    eqs.insert(row.coeffs, row.constant);
                }
            },
            rel => match ineqs.get_mut(&row.coeffs) {
                Some(slot) => {
                    // smaller constant is stronger; strict wins ties
                    if row.constant < slot.0 || (row.constant == slot.0 && rel == Rel::Gt) {
                        *slot = (row.constant, rel);
                    }
                }
                None => {
                    order.push((row.coeffs.clone(), false));
                    ineqs.insert(row.coeffs, (row.constant, rel));
                }
            },
        }
    }
    let out = order
        .into_iter()
        .map(|(coeffs, is_eq)| {
            if is_eq {
                let c = eqs[&coeffs];
                Row::new(coeffs, c, Rel::Eq)
            } else {
                let (c, rel) = ineqs[&coeffs];
                Row::new(coeffs, c, rel)
            }
        })
        .collect();
    Some(out)
}

/// Eliminates variable `var`, returning an equivalent (over Q) system in the
/// remaining variables; the column for `var` is kept and is identically zero.
pub(crate) fn eliminate(rows: Vec<Row>, var: usize) -> Option<Vec<Row>> {
    if let Some(pos) = rows
        .iter()
        .position(|r| r.rel == Rel::Eq && r.coeffs[var] != 0)
    {
        let mut rows = rows;
        let pivot = rows.swap_remove(pos);
        let p = pivot.coeffs[var];
        let out = rows
            .into_iter()
            .map(|r| substitute(&pivot, p, r, var))
            .collect();
        return simplify(out);
    }

    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut out = Vec::new();
    for r in rows {
        match r.coeffs[var].signum() {
            1 => pos.push(r),
            -1 => neg.push(r),
            _ => out.push(r),
        }
    }
    for p in &pos {
        for n in &neg {
            let a = p.coeffs[var];
            let b = -n.coeffs[var];
            let coeffs = p
                .coeffs
                .iter()
                .zip(&n.coeffs)
                .map(|(x, y)| b * x + a * y)
                .collect();
            let rel = if p.rel == Rel::Gt || n.rel == Rel::Gt {
                Rel::Gt
            } else {
                Rel::Ge
            };
            out.push(Row::new(coeffs, b * p.constant + a * n.constant, rel));
        }
    }
    simplify(out)
}

fn substitute(pivot: &Row, p: i128, r: Row, var: usize) -> Row {
    let c = r.coeffs[var];
    if c == 0 {
        return r;
    }
    // |p| * r - sign(p) * c * pivot has a zero coefficient at `var`.
    let s = p.signum();
    let ap = p.abs();
    let coeffs = r
        .coeffs
        .iter()
        .zip(&pivot.coeffs)
        .map(|(x, y)| ap * x - s * c * y)
        .collect();
    Row::new(coeffs, ap * r.constant - s * c * pivot.constant, r.rel)
}

/// Exact rational feasibility of a mixed system.
pub(crate) fn is_feasible(n_vars: usize, rows: Vec<Row>) -> bool {
    let Some(mut rows) = simplify(rows) else {
        return false;
    };
    let mut remaining: Vec<usize> = (0..n_vars).collect();
    while !remaining.is_empty() {
        // cheapest variable first: equalities, then smallest pos*neg product
        let (idx, _) = remaining
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let has_eq = rows.iter().any(|r| r.rel == Rel::Eq && r.coeffs[v] != 0);
                let p = rows.iter().filter(|r| r.coeffs[v] > 0).count();
                let n = rows.iter().filter(|r| r.coeffs[v] < 0).count();
                (i, if has_eq { 0 } else { 1 + p * n })
            })
            .min_by_key(|&(_, cost)| cost)
            .expect("nonempty");
        let v = remaining.swap_remove(idx);
        match eliminate(rows, v) {
            Some(r) => rows = r,
            None => return false,
        }
        if rows.is_empty() {
            return true;
        }
    }
    rows.iter().all(|r| r.holds_trivially())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(c: &[i128], k: i128, rel: Rel) -> Row {
        Row::new(c.to_vec(), k, rel)
    }

    #[test]
    fn strict_contradiction() {
        // x > 0, -x >= 0
        assert!(!is_feasible(1, vec![row(&[1], 0, Rel::Gt), row(&[-1], 0, Rel::Ge)]));
        // x >= 0, -x >= 0 is the origin
        assert!(is_feasible(1, vec![row(&[1], 0, Rel::Ge), row(&[-1], 0, Rel::Ge)]));
    }

    #[test]
    fn equality_substitution() {
        // x > 0, y > 0, x - y = 0
        let rows = vec![
            row(&[1, 0], 0, Rel::Gt),
            row(&[0, 1], 0, Rel::Gt),
            row(&[1, -1], 0, Rel::Eq),
        ];
        assert!(is_feasible(2, rows));
    }

    #[test]
    fn hand_eliminated_example() {
        // x > 0, y > 0, 2x - 3y >= 0, y - x > 0
        let rows = vec![
            row(&[1, 0], 0, Rel::Gt),
            row(&[0, 1], 0, Rel::Gt),
            row(&[2, -3], 0, Rel::Ge),
            row(&[-1, 1], 0, Rel::Gt),
        ];
        assert!(!is_feasible(2, rows));
    }

    #[test]
    fn affine_bounds() {
        // 1 <= x, x <= 1/2 infeasible; 2x - 1 >= 0, 1 - x >= 0 feasible
        assert!(!is_feasible(1, vec![row(&[1], -1, Rel::Ge), row(&[-2], 1, Rel::Ge)]));
        assert!(is_feasible(1, vec![row(&[2], -1, Rel::Ge), row(&[-1], 1, Rel::Ge)]));
    }

    #[test]
    fn inconsistent_parallel_equalities() {
        let rows = vec![row(&[1, 1], 0, Rel::Eq), row(&[2, 2], -2, Rel::Eq)];
        assert!(!is_feasible(2, rows));
    }
}
