//   Copyright 2026 The tugames Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

use proptest::prelude::*;

use tugames::classify::{self, classify, property_suite, Property, Solution, SuiteConfig};
use tugames::game::{marginal_vectors, Coalition, Game, PayoffVector};
use tugames::generate;
use tugames::lovasz::lovasz_eval;
use tugames::rational::{int, ratio};
use tugames::solutions;

fn game(n: usize, seed: u64) -> Game {
    generate::random_game(n, &mut generate::rng(seed))
}

/// `v̂((x+y)/2) ≥ (v̂(x) + v̂(y))/2` on the given pairs.
fn midpoint_concave(v: &Game, pairs: &[(PayoffVector, PayoffVector)]) -> bool {
    let half = ratio(1, 2);
    pairs.iter().all(|(x, y)| {
        let mid = x.add(y).scale(&half);
        lovasz_eval(v, &mid).unwrap() * int(2) >= lovasz_eval(v, x).unwrap() + lovasz_eval(v, y).unwrap()
    })
}

fn probe_pairs(n: usize, seed: u64) -> Vec<(PayoffVector, PayoffVector)> {
    let incidence: Vec<PayoffVector> = Coalition::all(n).map(|a| a.incidence(n)).collect();
    let mut pairs: Vec<_> = incidence
        .iter()
        .flat_map(|a| incidence.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let mut rng = generate::rng(seed);
    for _ in 0..50 {
        let x = PayoffVector::new((0..n).map(|_| generate::random_rational(&mut rng)).collect());
        let y = PayoffVector::new((0..n).map(|_| generate::random_rational(&mut rng)).collect());
        pairs.push((x, y));
    }
    pairs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classification_invariants(n in 1usize..=4, seed in any::<u64>()) {
        for v in [game(n, seed), generate::supermodular_game(n, &mut generate::rng(seed))] {
            let c = classify(&v);
            if c.supermodular && c.submodular {
                prop_assert!(c.additive);
            }
            if c.supermodular {
                prop_assert!(c.superadditive);
            }
            for (lo, hi) in &c.reasonable_bounds {
                prop_assert!(lo <= hi);
            }
        }
    }

    #[test]
    fn supermodularity_four_ways(n in 2usize..=4, seed in any::<u64>(), perturb in any::<bool>()) {
        let mut rng = generate::rng(seed);
        let mut v = generate::supermodular_game(n, &mut rng);
        if perturb {
            v = generate::break_supermodularity(&v, &mut rng);
        }
        let sup = classify::is_supermodular(&v);
        let core = solutions::core(&v);
        prop_assert_eq!(sup, marginal_vectors(&v).iter().all(|x| core.contains(x)));
        prop_assert_eq!(sup, classify::core_equals_weber(&v).unwrap());
        prop_assert_eq!(sup, midpoint_concave(&v, &probe_pairs(n, seed)));
    }

    #[test]
    fn gamma_star_is_individual_rationality_of_marginal_vectors(n in 1usize..=5, seed in any::<u64>(), kind in 0u8..3) {
        let mut rng = generate::rng(seed);
        let v = match kind {
            0 => generate::weakly_superadditive_game(n, &mut rng),
            1 if n >= 2 => generate::outside_gamma_star(n, &mut rng),
            _ => generate::random_game(n, &mut rng),
        };
        prop_assert_eq!(classify::is_weakly_superadditive(&v), classify::marginal_vectors_individually_rational(&v));
    }
}

#[test]
fn subadditivity_on_random_pairs() {
    let games: Vec<Game> = (0..12).map(|k| game(3, 900 + k)).collect();
    for solution in [Solution::Intermediate, Solution::Weber] {
        let report = property_suite(&games, solution, &SuiteConfig::default()).unwrap();
        assert!(
            report.get(Property::Suba).passed,
            "{:?}",
            report.get(Property::Suba).witness
        );
    }
}

#[test]
fn covariance_with_exact_recomputation() {
    let mut rng = generate::rng(5);
    for _ in 0..5 {
        let v = generate::random_game(3, &mut rng);
        let z = generate::random_additive(3, &mut rng);
        let config = SuiteConfig {
            alpha: int(2),
            shift: (0..3).map(|i| z.singleton_value(i).clone()).collect(),
        };
        let report = property_suite(std::slice::from_ref(&v), Solution::Intermediate, &config).unwrap();
        assert!(report.get(Property::Cov).passed);
    }
}

#[test]
fn core_superadditivity_and_individual_rationality() {
    let mut rng = generate::rng(8);
    let games: Vec<Game> = (0..6).map(|_| generate::supermodular_game(3, &mut rng)).collect();
    let report = property_suite(&games, Solution::Core, &SuiteConfig::default()).unwrap();
    for p in [
        Property::Ne,
        Property::Con,
        Property::Po,
        Property::Ir,
        Property::Supa,
        Property::An,
        Property::Cov,
    ] {
        assert!(report.get(p).passed, "{p}");
    }
}

#[test]
fn weber_outside_gamma_star_has_a_marginal_witness() {
    let v = generate::outside_gamma_star(3, &mut generate::rng(4));
    let report = property_suite(std::slice::from_ref(&v), Solution::Weber, &SuiteConfig::default()).unwrap();
    let ir = report.get(Property::Ir);
    assert!(!ir.passed);
    let point: Vec<String> = serde_json::from_value(ir.witness.as_ref().unwrap()["point"].clone()).unwrap();
    let x = PayoffVector::new(point.iter().map(|s| tugames::rational::parse(s).unwrap()).collect());
    assert!(marginal_vectors(&v).contains(&x));
}

#[test]
fn report_json_shape() {
    let star = Game::from_fn(3, |a| int([0, 0, 2, 3][a.len()]));
    let report = property_suite(std::slice::from_ref(&star), Solution::Weber, &SuiteConfig::default()).unwrap();
    let value = report.to_json();
    assert_eq!(value["solution"], "weber");
    assert_eq!(value["properties"]["ETP"]["status"], "fail");
    assert_eq!(value["properties"]["PO"]["status"], "pass");
    let c = classify(&star).to_json();
    assert_eq!(c["superadditive"], true);
    assert_eq!(c["substitute_pairs"].as_array().unwrap().len(), 3);
}
