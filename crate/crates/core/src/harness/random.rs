//! Seeded generators for cones, cone series and small resolution datasets.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

use crate::cone::{Cone, ConeSeries, ConeTerm, Constraint, LinearForm, Relation};
use crate::ring::{GeneratorSymbol, LaurentPoly, MotivicClass};
use crate::zeta::{ResolutionData, StratumDatum};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A cone in `R^n_{>0}` with up to `max_extra` constraints, coefficients in `[-3, 3]`.
pub fn cone(rng: &mut Rng64, n: usize, max_extra: usize) -> Cone {
    let k = rng.gen_range(0..=max_extra);
    let constraints = (0..k)
        .map(|_| {
            let form = LinearForm((0..n).map(|_| rng.gen_range(-3..=3)).collect());
            let rel = *[Relation::NonNegative, Relation::Positive, Relation::Zero]
                .choose(rng)
                .expect("nonempty");
            Constraint::new(form, rel)
        })
        .collect();
    Cone::new((0..n).map(|i| format!("k{i}")).collect(), constraints).expect("consistent sizes")
}

/// A small class: a Laurent polynomial times `pt` or one of two symbols.
pub fn class(rng: &mut Rng64, base: &str) -> MotivicClass {
    let mut poly = LaurentPoly::zero();
    for _ in 0..rng.gen_range(1..=2) {
        poly.add_term(rng.gen_range(-2..=2), rng.gen_range(-2..=2));
    }
    if poly.is_zero() {
        poly = LaurentPoly::one();
    }
    match rng.gen_range(0..3) {
        0 => MotivicClass::from_poly(base, poly),
        i => {
            let (name, mu) = if i == 1 { ("a", 2) } else { ("b", 3) };
            let s = GeneratorSymbol::new(name, mu, base).expect("valid");
            MotivicClass::term(&s, poly)
        }
    }
}

/// A series of one or two terms over cones with `|I| ≤ 3`, degree
/// coefficients in `[1, 3]` and weights in `[-3, 3]`.
pub fn cone_series(rng: &mut Rng64, base: &str) -> ConeSeries {
    let terms = (0..rng.gen_range(1..=2))
        .map(|_| {
            let n = rng.gen_range(1..=3);
            let c = cone(rng, n, 2);
            let degree = LinearForm((0..n).map(|_| rng.gen_range(1..=3)).collect());
            let weight = LinearForm((0..n).map(|_| rng.gen_range(-3..=3)).collect());
            ConeTerm::new(class(rng, base), c, degree, weight)
                .expect("positive degree on the orthant")
        })
        .collect();
    ConeSeries::from_terms(base, terms).expect("single base")
}

/// A dataset with 1 to 3 strata, `N ∈ [1, 4]`, `ν ∈ [1, 5]`, `α ∈ [-3, 3]`,
/// `M ∈ [0, 3]^r`, and classes whose μ-levels divide `N_I`.
pub fn dataset(rng: &mut Rng64) -> ResolutionData {
    let s = rng.gen_range(1..=3);
    let r = rng.gen_range(1..=2);
    let d = rng.gen_range(s as u32 - 1..=3);
    let mut data = ResolutionData::new(d, "k");
    for i in 0..s {
        data = data.with_stratum(
            StratumDatum::new(format!("S{i}"), rng.gen_range(1..=4))
                .nu(rng.gen_range(1..=5))
                .alpha(rng.gen_range(-3..=3))
                .orders((0..r).map(|_| rng.gen_range(0..=3)).collect()),
        );
    }
    for mask in 1u32..(1 << s) {
        if rng.gen_bool(0.3) {
            continue;
        }
        let idx: Vec<usize> = (0..s).filter(|i| mask & (1 << i) != 0).collect();
        let n_i = data.n_of(&idx);
        let divisors: Vec<i64> = (1..=n_i).filter(|m| n_i % m == 0).collect();
        let mut class = MotivicClass::zero("k");
        for _ in 0..rng.gen_range(1..=2) {
            let mu = *divisors.choose(rng).expect("1 divides");
            let name = if mu == 1 && rng.gen_bool(0.5) {
                "pt".to_string()
            } else {
                format!("c{mask}_{mu}")
            };
            let sym = GeneratorSymbol::new(name, mu as u64, "k").expect("valid");
            let poly = LaurentPoly::from_terms([(rng.gen_range(-2..=2), rng.gen_range(1..=3))]);
            class = class.try_add(&MotivicClass::term(&sym, poly)).expect("same base");
        }
        let ids: Vec<String> = idx.iter().map(|i| format!("S{i}")).collect();
        let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
        data = data.with_class(&ids, class);
    }
    debug_assert!(data.validate().is_ok());
    data
}
