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

//! Acceptance checks. Each prints one PASS/FAIL line; the process exits
//! nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use tugames::classify::{self, property_suite, Property, Solution, SuiteConfig};
use tugames::families::{self, SimpleGameView};
use tugames::game::{enumerate_chains, enumerate_chains_capped, marginal_vectors, ordered_bell, Chain, Coalition};
use tugames::generate;
use tugames::geometry::{set_equal, HPolytope, Label, PolyUnion, Region};
use tugames::oracle::{self, FanPoint, ProbePoint};
use tugames::rational::{int, ratio};
use tugames::solutions::{self, Method};
use tugames::{Game, PayoffVector, Rational, VPolytope};

type Check = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn lift<T>(r: tugames::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn p(xs: &[i64]) -> PayoffVector {
    PayoffVector::from_ints(xs)
}

fn hull(points: &[PayoffVector]) -> VPolytope {
    VPolytope::from_points(points[0].len(), points.to_vec())
}

fn union_of(pieces: &[&[PayoffVector]]) -> Region {
    let mut u = PolyUnion::new(pieces[0][0].len());
    for (k, piece) in pieces.iter().enumerate() {
        u.push(Label::Index(k), hull(piece).to_h());
    }
    Region::U(u)
}

fn same(a: &Region, b: &Region) -> Result<bool, String> {
    lift(set_equal(a, b))
}

fn vertices(h: &HPolytope) -> Result<Vec<PayoffVector>, String> {
    Ok(lift(h.vertices())?.vertices().to_vec())
}

fn example_one() -> Game {
    Game::from_fn(3, |a| int((a.contains(0) && a.len() >= 2) as i64))
}

fn star() -> Game {
    Game::from_fn(3, |a| int([0, 0, 2, 3][a.len()]))
}

fn disconnected_simple() -> Game {
    Game::from_fn(3, |a| int((a.contains(0) || (a.contains(1) && a.contains(2))) as i64))
}

/// Seeded random games shared by several checks.
fn random_corpus(n: usize, count: usize) -> Vec<Game> {
    (0..count)
        .map(|k| generate::random_game(n, &mut generate::rng(10_000 * n as u64 + k as u64)))
        .collect()
}

fn example_one_golden() -> Check {
    let v = example_one();
    ensure(vertices(&solutions::core(&v))? == vec![p(&[1, 0, 0])], || {
        "core is not {(1,0,0)}".into()
    })?;
    let w = solutions::weber(&v);
    ensure(w.vertices() == [p(&[0, 0, 1]), p(&[0, 1, 0]), p(&[1, 0, 0])], || {
        format!("Weber set {:?}", w.vertices())
    })?;
    let expected = union_of(&[&[p(&[1, 0, 0]), p(&[0, 1, 0])], &[p(&[1, 0, 0]), p(&[0, 0, 1])]]);
    let routes: Vec<(&str, Region)> = vec![
        ("chains", Region::U(lift(solutions::intermediate(&v, Method::Chains))?)),
        (
            "marginal cores",
            Region::U(lift(solutions::intermediate(&v, Method::MarginalCores))?),
        ),
        (
            "simple-game formula",
            Region::U(families::intermediate_simple(&lift(SimpleGameView::from_game(&v))?)),
        ),
        (
            "glove formula",
            Region::U(lift(families::intermediate_glove_relabeled(
                3,
                Coalition::from_players([1]),
            ))?),
        ),
        (
            "limiting superdifferential",
            Region::U(lift(oracle::limiting_superdiff(&v, ProbePoint::Grand))?),
        ),
    ];
    for (name, region) in &routes {
        ensure(same(region, &expected)?, || {
            format!("{name} route differs from the two-segment union")
        })?;
    }
    let frechet = lift(oracle::frechet_superdiff(&v, &Coalition::grand(3).incidence(3)))?;
    ensure(vertices(&frechet)? == vec![p(&[1, 0, 0])], || {
        "Fréchet superdifferential at χ_N is not the core".into()
    })?;
    ensure(lift(oracle::clarke_superdiff(&v))? == w, || {
        "Clarke superdifferential is not the Weber set".into()
    })
}

fn star_golden() -> Check {
    let v = star();
    ensure(vertices(&solutions::core(&v))? == vec![p(&[1, 1, 1])], || {
        "core is not {(1,1,1)}".into()
    })?;
    let mut hexagon: Vec<PayoffVector> = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
        .iter()
        .map(|x| p(x))
        .collect();
    hexagon.sort();
    ensure(solutions::weber(&v).vertices() == hexagon.as_slice(), || {
        "Weber set is not the hexagon".into()
    })?;
    let m = lift(solutions::intermediate(&v, Method::Chains))?;
    let mut segments = 0;
    for (component, pts) in lift(m.component_vertices())? {
        if pts.vertices().len() == 2 {
            segments += 1;
            let Label::Chain(chain) = &component.label else {
                return Err("unlabeled component".into());
            };
            let pair = chain.coalitions()[0];
            ensure(chain.len() == 2 && pair.len() == 2, || {
                format!("segment from chain {chain}")
            })?;
            let k = (0..3).find(|&i| !pair.contains(i)).unwrap();
            let ends: Vec<PayoffVector> = pair
                .players()
                .map(|i| {
                    let mut x = vec![0; 3];
                    x[i] = 2;
                    x[k] = 1;
                    p(&x)
                })
                .collect();
            ensure(pts.vertices() == hull(&ends).vertices(), || {
                format!("segment of {chain} is {:?}", pts.vertices())
            })?;
        } else {
            ensure(pts.vertices().len() == 1, || "component of dimension above one".into())?;
        }
    }
    ensure(segments == 3, || format!("{segments} segments instead of three"))?;
    for i in 1..=3 {
        let chain = lift(Chain::from_set(3, [Coalition::from_players([i]), Coalition::grand(3)]))?;
        ensure(solutions::chain_component(&v, &chain).is_empty(), || {
            format!("M for {chain} is nonempty")
        })?;
    }
    let expected = union_of(&[
        &[p(&[0, 2, 1]), p(&[2, 0, 1])],
        &[p(&[0, 1, 2]), p(&[2, 1, 0])],
        &[p(&[1, 0, 2]), p(&[1, 2, 0])],
    ]);
    ensure(same(&Region::U(m), &expected)?, || {
        "M differs from the three segments".into()
    })
}

fn disconnected_simple_golden() -> Check {
    let v = disconnected_simple();
    ensure(solutions::core(&v).is_empty(), || "core is nonempty".into())?;
    ensure(vertices(&solutions::imputations(&v))? == vec![p(&[1, 0, 0])], || {
        "imputations are not {(1,0,0)}".into()
    })?;
    let m = Region::U(lift(solutions::intermediate(&v, Method::Chains))?);
    let point = [p(&[1, 0, 0])];
    let edge = [p(&[0, 1, 0]), p(&[0, 0, 1])];
    ensure(same(&m, &union_of(&[&point, &edge]))?, || {
        "M differs from the point and the segment".into()
    })?;
    ensure(hull(&point).to_h().intersect(&hull(&edge).to_h()).is_empty(), || {
        "the two pieces meet".into()
    })?;
    let half = ratio(1, 2);
    let probes = [
        edge[0].clone(),
        edge[1].clone(),
        PayoffVector::new(vec![int(0), half.clone(), half.clone()]),
    ];
    for b in &probes {
        let mid = point[0].add(b).scale(&half);
        ensure(!m.contains(&mid), || format!("midpoint {mid} lies in M"))?;
    }
    Ok(())
}

fn chain_counts() -> Check {
    ensure(lift(enumerate_chains(3))?.len() == 13, || {
        "n=3 does not give 13 chains".into()
    })?;
    ensure(lift(enumerate_chains(4))?.len() == 75, || {
        "n=4 does not give 75 chains".into()
    })?;
    for n in 1..=8 {
        let chains = lift(enumerate_chains_capped(n, 8))?;
        // independent count: ordered partitions by number of blocks via surjections
        let surjections: u128 = (1..=n).map(|k| surjection_count(n, k)).sum();
        ensure(
            chains.len() as u128 == ordered_bell(n) && ordered_bell(n) == surjections,
            || {
                format!(
                    "n={n}: {} chains, recurrence {}, surjections {surjections}",
                    chains.len(),
                    ordered_bell(n)
                )
            },
        )?;
        if n <= 5 {
            let distinct: std::collections::HashSet<&Chain> = chains.iter().collect();
            ensure(distinct.len() == chains.len(), || format!("duplicate chains at n={n}"))?;
        }
    }
    Ok(())
}

/// Surjections from an `n`-set onto a `k`-set, by inclusion-exclusion.
fn surjection_count(n: usize, k: usize) -> u128 {
    let mut total: i128 = 0;
    let mut binom: i128 = 1;
    for j in 0..=k {
        let term = binom * ((k - j) as i128).pow(n as u32);
        total += if j % 2 == 0 { term } else { -term };
        binom = binom * (k - j) as i128 / (j + 1) as i128;
    }
    total as u128
}

fn oracle_equivalence() -> Check {
    for n in 2..=4 {
        for (k, v) in random_corpus(n, 200).iter().enumerate() {
            let chains = lift(solutions::intermediate(v, Method::Chains))?;
            let cores = lift(solutions::intermediate(v, Method::MarginalCores))?;
            let limiting = lift(oracle::limiting_superdiff(v, ProbePoint::Grand))?;
            for (((a, b), c), chain) in chains
                .components()
                .iter()
                .zip(cores.components())
                .zip(limiting.components())
                .zip(lift(enumerate_chains(n))?)
            {
                let fan = lift(oracle::frechet_superdiff(v, &FanPoint::new(&chain).point))?;
                ensure(same(&Region::H(fan), &Region::H(a.polytope.clone()))?, || {
                    format!("n={n} game {k}: Fréchet set at the fan point of {chain} differs from M_H")
                })?;
                ensure(a.empty == b.empty && a.empty == c.empty, || {
                    format!("n={n} game {k}: emptiness of {chain}")
                })?;
            }
            let chains = Region::U(chains);
            ensure(same(&chains, &Region::U(cores))?, || {
                format!("n={n} game {k}: chains vs marginal cores")
            })?;
            ensure(same(&chains, &Region::U(limiting))?, || {
                format!("n={n} game {k}: chains vs limiting")
            })?;
        }
    }
    Ok(())
}

fn sandwich_and_hull() -> Check {
    for n in 2..=4 {
        for (k, v) in random_corpus(n, 200).iter().enumerate() {
            if let Some(x) = lift(classify::sandwich_witness(v))? {
                return Err(format!("n={n} game {k}: {x} breaks C ⊆ M ⊆ W"));
            }
            let m = lift(solutions::intermediate(v, Method::Chains))?;
            let hull = lift(m.hull())?;
            ensure(same(&Region::V(hull), &Region::V(solutions::weber(v)))?, || {
                format!("n={n} game {k}: conv M differs from W")
            })?;
        }
    }
    Ok(())
}

fn supermodular_equivalences() -> Check {
    let mut rng = generate::rng(77);
    for k in 0..100 {
        let n = 2 + k % 3;
        let v = generate::supermodular_game(n, &mut rng);
        ensure(lift(classify::core_equals_intermediate(&v))?, || {
            format!("supermodular game {k}: C ≠ M")
        })?;
        ensure(lift(classify::core_equals_weber(&v))?, || {
            format!("supermodular game {k}: C ≠ W")
        })?;
        let broken = generate::break_supermodularity(&v, &mut rng);
        ensure(!classify::is_supermodular(&broken), || {
            format!("perturbed game {k} is still supermodular")
        })?;
        ensure(!lift(classify::core_equals_intermediate(&broken))?, || {
            format!("perturbed game {k}: C = M")
        })?;
        let sub = generate::submodular_game(n, &mut rng);
        ensure(lift(classify::intermediate_is_marginal_vectors(&sub))?, || {
            format!("submodular game {k}: M is not the set of marginal vectors")
        })?;
    }
    Ok(())
}

fn glove_theorems() -> Check {
    for n in 2..=6 {
        for q in 1..=n / 2 {
            let p_ = n - q;
            let v = lift(families::make_glove(p_, q))?;
            let core = Region::H(solutions::core(&v));
            ensure(same(&Region::H(lift(families::glove_core(p_, q))?), &core)?, || {
                format!("({p_},{q}): core")
            })?;
            let expected_core: Vec<PayoffVector> = if p_ > q {
                vec![Coalition::grand(n).difference(Coalition::grand(p_)).incidence(n)]
            } else {
                vec![
                    Coalition::grand(p_).incidence(n),
                    Coalition::grand(n).difference(Coalition::grand(p_)).incidence(n),
                ]
            };
            ensure(same(&core, &Region::V(hull(&expected_core)))?, || {
                format!("({p_},{q}): core shape")
            })?;
            let m = lift(solutions::intermediate(&v, Method::Chains))?;
            for component in m.components() {
                let Label::Chain(chain) = &component.label else {
                    return Err("unlabeled component".into());
                };
                match families::glove_predicted_component(p_, q, chain) {
                    None => ensure(component.empty, || format!("({p_},{q}) {chain}: predicted empty"))?,
                    Some(h) => ensure(
                        !component.empty && same(&Region::H(h), &Region::H(component.polytope.clone()))?,
                        || format!("({p_},{q}) {chain}: block cases mispredict the component"),
                    )?,
                }
            }
            let formula = Region::U(lift(families::intermediate_glove(p_, q))?);
            ensure(same(&formula, &Region::U(m))?, || {
                format!("({p_},{q}): matching formula differs from M")
            })?;
        }
    }
    Ok(())
}

fn simple_game_theorem() -> Check {
    for n in 1..=4 {
        for antichain in families::antichains(n) {
            let view = lift(SimpleGameView::from_minimal_winning(n, &antichain))?;
            let v = view.to_game();
            let label = || format!("n={n} minimal winners {antichain:?}");
            ensure(lift(SimpleGameView::from_game(&v))? == view, || {
                format!("{}: view round trip", label())
            })?;
            let m = lift(solutions::intermediate(&v, Method::Chains))?;
            ensure(
                same(&Region::U(families::intermediate_simple(&view)), &Region::U(m.clone()))?,
                || format!("{}: union of faces differs from M", label()),
            )?;
            ensure(
                same(
                    &Region::H(families::core_simple(&view)),
                    &Region::H(solutions::core(&v)),
                )?,
                || format!("{}: intersection of faces differs from C", label()),
            )?;
            if (0..n).all(|i| v.singleton_value(i) == &Rational::from_integer(0.into())) {
                ensure(
                    lift(tugames::geometry::is_subset(
                        &Region::U(m),
                        &Region::H(solutions::imputations(&v)),
                    ))?,
                    || format!("{}: M ⊄ I", label()),
                )?;
            }
        }
    }
    Ok(())
}

fn property_table() -> Check {
    let corpus = random_corpus(3, 200);
    let config = SuiteConfig::default();
    let always = [
        Property::Ne,
        Property::Po,
        Property::Suba,
        Property::An,
        Property::Re,
        Property::Cov,
    ];
    let mut rng = generate::rng(99);
    let nulls: Vec<Game> = (0..20)
        .map(|k| generate::with_null_player(3, k % 3, &mut rng))
        .collect();
    let dummies: Vec<Game> = (0..20)
        .map(|k| generate::with_dummy_player(3, k % 3, &mut rng))
        .collect();
    for solution in [Solution::Intermediate, Solution::Weber] {
        let report = lift(property_suite(&corpus, solution, &config))?;
        for property in always {
            let r = report.get(property);
            ensure(r.passed && r.checks > 0, || {
                format!("{} fails {property}: {:?}", solution.name(), r.witness)
            })?;
        }
        let np = lift(property_suite(&nulls, solution, &config))?;
        let r = np.get(Property::Np);
        ensure(r.passed && r.checks > 0, || {
            format!("{} fails NP: {:?}", solution.name(), r.witness)
        })?;
        let dum = lift(property_suite(&dummies, solution, &config))?;
        let r = dum.get(Property::Dum);
        ensure(r.passed && r.checks > 0, || {
            format!("{} fails DUM: {:?}", solution.name(), r.witness)
        })?;
    }
    let inside: Vec<Game> = (0..50)
        .map(|_| generate::weakly_superadditive_game(3, &mut rng))
        .collect();
    let outside: Vec<Game> = (0..20).map(|_| generate::outside_gamma_star(3, &mut rng)).collect();
    for v in corpus.iter().chain(&inside) {
        if classify::is_weakly_superadditive(v) {
            let r = lift(property_suite(std::slice::from_ref(v), Solution::Intermediate, &config))?;
            ensure(r.get(Property::Ir).passed, || {
                format!("IR fails for M inside Γ*: {v:?}")
            })?;
        }
    }
    let mut failures = 0;
    for v in &outside {
        let r = lift(property_suite(std::slice::from_ref(v), Solution::Intermediate, &config))?;
        if !r.get(Property::Ir).passed {
            failures += 1;
        }
    }
    ensure(failures == outside.len(), || {
        format!(
            "IR for M failed on only {failures} of {} games outside Γ*",
            outside.len()
        )
    })?;
    let star_report = lift(property_suite(&[star()], Solution::Intermediate, &config))?;
    let etp = star_report.get(Property::Etp);
    ensure(!etp.passed && etp.witness.is_some(), || {
        "ETP is not falsified on the star game".into()
    })?;
    ensure(marginal_vectors(&star()).len() == 6, || {
        "star game marginal vectors".into()
    })
}

/// Name, time limit and body of one criterion.
type Criterion = (&'static str, Duration, fn() -> Check);

fn main() -> ExitCode {
    let checks: [Criterion; 10] = [
        ("Example 1 golden values", Duration::from_secs(1), example_one_golden),
        ("star game golden values", Duration::from_secs(1), star_golden),
        (
            "disconnected simple game golden values",
            Duration::from_secs(1),
            disconnected_simple_golden,
        ),
        ("chain counts", Duration::from_secs(30), chain_counts),
        ("oracle equivalence", Duration::from_secs(120), oracle_equivalence),
        (
            "sandwich and convexification",
            Duration::from_secs(600),
            sandwich_and_hull,
        ),
        (
            "supermodularity equivalences",
            Duration::from_secs(600),
            supermodular_equivalences,
        ),
        ("glove theorems", Duration::from_secs(60), glove_theorems),
        ("simple-game theorem", Duration::from_secs(600), simple_game_theorem),
        ("property table", Duration::from_secs(600), property_table),
    ];
    let mut failed = 0;
    for (name, limit, check) in checks {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= limit, || {
                format!("took {:.2}s, limit {}s", elapsed.as_secs_f64(), limit.as_secs())
            })
        });
        match outcome {
            Ok(()) => println!("PASS  {name} ({:.2}s)", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name} ({:.2}s): {why}", elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
