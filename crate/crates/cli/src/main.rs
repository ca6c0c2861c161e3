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

//! `tugames`: solve TU games from the command line.

mod input;
mod plot;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use tugames::classify::{self, Property, Solution, SuiteConfig};
use tugames::game::{game_to_json, PayoffVector};
use tugames::geometry::{subset_witness, HPolytope, PolyUnion, Region};
use tugames::oracle::{self, ProbePoint};
use tugames::solutions::{self, Method};
use tugames::{families, lovasz, rational, Game};

use input::Input;

#[derive(Parser, Debug)]
#[command(name = "tugames", version, about = "Exact solution sets of TU coalitional games")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the result here instead of stdout.
    #[arg(long, short, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lovász extension of the game at a point.
    Eval {
        #[command(flatten)]
        input: Input,
        /// Comma-separated rationals, one per player.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// The core.
    Core {
        #[command(flatten)]
        input: Input,
        /// Also emit the H-representation.
        #[arg(long)]
        emit_h: bool,
    },
    /// The Weber set.
    Weber {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        emit_h: bool,
    },
    /// The imputation set.
    Imputations {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        emit_h: bool,
    },
    /// The intermediate set, one component per chain.
    Intermediate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = MethodArg::Chains)]
        method: MethodArg,
        /// Cross-check against the other method; exit 2 on mismatch.
        #[arg(long)]
        verify: bool,
        /// Drop components contained in another one.
        #[arg(long)]
        minimal: bool,
        #[arg(long)]
        emit_h: bool,
    },
    /// Structural properties of the game.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Axiomatic property checks of the solution concepts on the given games.
    Properties {
        #[command(flatten)]
        input: Input,
        /// Solution concepts to examine; all three by default.
        #[arg(long, value_enum)]
        solution: Vec<SolutionArg>,
    },
    /// Compare a solution set with its superdifferential counterpart; exit 2 on mismatch.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        check: SolutionArg,
        #[arg(long, value_enum, default_value_t = AtArg::Grand)]
        at: AtArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Chains)]
        method: MethodArg,
    },
    /// SVG picture of core, intermediate and Weber sets of a three-player game.
    Plot {
        #[command(flatten)]
        input: Input,
    },
    /// Membership of points in a polytope or union read from JSON.
    Contains {
        /// Polytope JSON (with H-representation) or union JSON; `-` reads stdin.
        #[arg(long, value_name = "PATH", default_value = "-")]
        polytope: PathBuf,
        /// Point to test; when absent, the listed vertices are checked and a miss exits 2.
        #[arg(long, allow_hyphen_values = true)]
        point: Vec<String>,
    },
    /// Emit a glove game file.
    Glove {
        #[arg(long)]
        left: usize,
        #[arg(long)]
        right: usize,
    },
    /// Emit a simple game file from its minimal winning coalitions.
    Simple {
        #[arg(long, value_name = "SETS")]
        minimal_winning: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Chains,
    Cores,
}

impl MethodArg {
    fn method(self) -> Method {
        match self {
            MethodArg::Chains => Method::Chains,
            MethodArg::Cores => Method::MarginalCores,
        }
    }

    fn other(self) -> MethodArg {
        match self {
            MethodArg::Chains => MethodArg::Cores,
            MethodArg::Cores => MethodArg::Chains,
        }
    }

    fn name(self) -> &'static str {
        match self {
            MethodArg::Chains => "chains",
            MethodArg::Cores => "cores",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SolutionArg {
    Core,
    Intermediate,
    Weber,
}

impl SolutionArg {
    fn solution(self) -> Solution {
        match self {
            SolutionArg::Core => Solution::Core,
            SolutionArg::Intermediate => Solution::Intermediate,
            SolutionArg::Weber => Solution::Weber,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AtArg {
    Zero,
    Grand,
}

/// Why a run did not succeed, and with which exit status.
#[derive(Debug)]
pub struct Failure {
    kind: &'static str,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            kind: "usage",
            message: message.into(),
        }
    }

    pub fn io(path: &Path, err: std::io::Error) -> Self {
        Failure {
            kind: "io",
            message: format!("{}: {err}", path.display()),
        }
    }
}

impl From<tugames::Error> for Failure {
    fn from(e: tugames::Error) -> Self {
        Failure {
            kind: e.kind(),
            message: e.to_string(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)
    }
}

/// What a successful run produced.
enum Output {
    Json(Value),
    /// JSON whose verification failed; written out, then exit 2.
    Mismatch(Value),
    Text(String),
}

fn parse_point(text: &str, n: usize) -> Result<PayoffVector, Failure> {
    let coords = rational::parse_list(text)?;
    if coords.len() != n {
        return Err(tugames::Error::DimensionMismatch {
            expected: n,
            found: coords.len(),
        }
        .into());
    }
    Ok(PayoffVector::new(coords))
}

/// Solution-set JSON: the polytope format, with the constraint rows only
/// under `--emit-h`.
fn polytope_json(name: &str, n: usize, body: Value, emit_h: bool) -> Value {
    let mut out = Map::new();
    out.insert("solution".into(), json!(name));
    out.insert("n".into(), json!(n));
    let empty = body["vertices"].as_array().is_none_or(Vec::is_empty);
    out.insert("empty".into(), json!(empty));
    if let Value::Object(fields) = body {
        for (k, v) in fields {
            if emit_h || k == "vertices" {
                out.insert(k, v);
            }
        }
    }
    Value::Object(out)
}

fn union_json(union: &PolyUnion, emit_h: bool) -> Value {
    let mut value = union.to_json();
    if !emit_h {
        for c in value["components"].as_array_mut().into_iter().flatten() {
            if let Value::Object(entry) = c {
                entry.remove("equalities");
                entry.remove("inequalities");
            }
        }
    }
    value
}

fn intermediate(game: &Game, method: MethodArg, max_n: usize) -> Result<PolyUnion, Failure> {
    Ok(solutions::intermediate_capped(game, method.method(), max_n)?)
}

/// Points of `a` outside `b` and of `b` outside `a`.
fn difference(a: &Region, b: &Region) -> Result<Value, Failure> {
    let to = |w: Option<PayoffVector>| w.map(|x| json!(x.to_strings()));
    Ok(json!({
        "only_first": to(subset_witness(a, b)?),
        "only_second": to(subset_witness(b, a)?),
    }))
}

fn run(command: Command) -> Result<Output, Failure> {
    Ok(match command {
        Command::Eval { input, point } => {
            let game = input.game()?;
            let x = parse_point(&point, game.n())?;
            let value = lovasz::lovasz_eval(&game, &x)?;
            Output::Json(json!({ "point": x.to_strings(), "value": rational::format(&value) }))
        }
        Command::Core { input, emit_h } => {
            let game = input.game()?;
            Output::Json(polytope_json(
                "core",
                game.n(),
                solutions::core(&game).to_json(),
                emit_h,
            ))
        }
        Command::Imputations { input, emit_h } => {
            let game = input.game()?;
            Output::Json(polytope_json(
                "imputations",
                game.n(),
                solutions::imputations(&game).to_json(),
                emit_h,
            ))
        }
        Command::Weber { input, emit_h } => {
            let game = input.game()?;
            Output::Json(polytope_json(
                "weber",
                game.n(),
                solutions::weber(&game).to_json(),
                emit_h,
            ))
        }
        Command::Intermediate {
            input,
            method,
            verify,
            minimal,
            emit_h,
        } => {
            let game = input.game()?;
            let union = intermediate(&game, method, input.max_n)?;
            let mut verified = None;
            let mut diff = None;
            if verify {
                let other = intermediate(&game, method.other(), input.max_n)?;
                let d = difference(&Region::U(union.clone()), &Region::U(other))?;
                verified = Some(d["only_first"].is_null() && d["only_second"].is_null());
                diff = Some(d);
            }
            let union = if minimal { union.minimal()? } else { union };
            let mut out = json!({
                "solution": "intermediate",
                "n": game.n(),
                "method": method.name(),
            });
            out["components"] = union_json(&union, emit_h)["components"].take();
            if let Some(ok) = verified {
                out["verified"] = json!(ok);
                if !ok {
                    out["difference"] = diff.unwrap_or_default();
                    return Ok(Output::Mismatch(out));
                }
            }
            Output::Json(out)
        }
        Command::Classify { input } => Output::Json(classify::classify(&input.game()?).to_json()),
        Command::Properties { input, solution } => {
            let games = input.games()?;
            let n = games[0].n();
            if games.iter().any(|g| g.n() != n) {
                return Err(Failure::usage("all games must have the same number of players"));
            }
            let chosen = if solution.is_empty() {
                vec![SolutionArg::Core, SolutionArg::Intermediate, SolutionArg::Weber]
            } else {
                solution
            };
            let mut reports = Vec::new();
            for s in chosen {
                reports.push(classify::property_suite(&games, s.solution(), &SuiteConfig::default())?.to_json());
            }
            Output::Json(json!({
                "games": games.len(),
                "properties": Property::ALL.iter().map(|p| p.code()).collect::<Vec<_>>(),
                "reports": reports,
            }))
        }
        Command::Oracle {
            input,
            check,
            at,
            method,
        } => {
            let game = input.game()?;
            let n = game.n();
            let (reference, probe, name) = match check {
                SolutionArg::Intermediate => {
                    let at = match at {
                        AtArg::Zero => ProbePoint::Zero,
                        AtArg::Grand => ProbePoint::Grand,
                    };
                    (
                        Region::U(intermediate(&game, method, input.max_n)?),
                        Region::U(oracle::limiting_superdiff_capped(&game, at, input.max_n)?),
                        "limiting",
                    )
                }
                SolutionArg::Weber => {
                    tugames::game::check_players(n, input.max_n)?;
                    (
                        Region::V(solutions::weber(&game)),
                        Region::V(oracle::clarke_superdiff(&game)?),
                        "clarke",
                    )
                }
                SolutionArg::Core => (
                    Region::H(solutions::core(&game)),
                    Region::H(oracle::frechet_superdiff(&game, &PayoffVector::zeros(n))?),
                    "frechet",
                ),
            };
            let d = difference(&reference, &probe)?;
            let pass = d["only_first"].is_null() && d["only_second"].is_null();
            let out = json!({
                "check": format!("{check:?}").to_lowercase(),
                "superdifferential": name,
                "status": if pass { "pass" } else { "fail" },
                "difference": d,
            });
            if pass {
                Output::Json(out)
            } else {
                Output::Mismatch(out)
            }
        }
        Command::Plot { input } => {
            let game = input.game()?;
            if game.n() != 3 {
                return Err(Failure::usage("plot needs a three-player game"));
            }
            Output::Text(plot::svg(&game, &solutions::solve(&game)?)?)
        }
        Command::Contains { polytope, point } => contains(&polytope, &point)?,
        Command::Glove { left, right } => Output::Json(game_to_json(&families::make_glove(left, right)?)),
        Command::Simple { minimal_winning, n } => Output::Json(game_to_json(&input::simple_game(
            &minimal_winning,
            n,
            tugames::game::HARD_MAX_PLAYERS,
        )?)),
    })
}

/// Reads a single polytope or a union of components.
fn contains(path: &PathBuf, points: &[String]) -> Result<Output, Failure> {
    let text = input::read_source(path)?;
    let value: Value = serde_json::from_str(&text).map_err(tugames::Error::from)?;
    let entries: Vec<&Value> = match value.get("components") {
        Some(Value::Array(items)) => items.iter().collect(),
        Some(_) => return Err(tugames::Error::InvalidPolytope("components must be a list".into()).into()),
        None => vec![&value],
    };
    let mut pieces: Vec<HPolytope> = Vec::new();
    let mut listed: Vec<PayoffVector> = Vec::new();
    for entry in entries {
        if entry.get("equalities").is_none() && entry.get("inequalities").is_none() {
            return Err(
                tugames::Error::InvalidPolytope("no constraint rows; produce the input with --emit-h".into()).into(),
            );
        }
        let (p, vertices) = HPolytope::from_json(entry)?;
        listed.extend(vertices);
        pieces.push(p);
    }
    let dim = pieces[0].dim();
    if let Some(p) = pieces.iter().find(|p| p.dim() != dim) {
        return Err(tugames::Error::DimensionMismatch {
            expected: dim,
            found: p.dim(),
        }
        .into());
    }
    let verify = points.is_empty();
    let tested = if verify {
        listed
    } else {
        points.iter().map(|t| parse_point(t, dim)).collect::<Result<_, _>>()?
    };
    let results: Vec<Value> = tested
        .iter()
        .map(|x| json!({ "point": x.to_strings(), "contains": pieces.iter().any(|p| p.contains(x)) }))
        .collect();
    let all = results.iter().all(|r| r["contains"] == json!(true));
    let out = json!({ "results": results, "all": all });
    Ok(if verify && !all {
        Output::Mismatch(out)
    } else {
        Output::Json(out)
    })
}

fn emit(target: Option<&Path>, text: &str) -> Result<(), Failure> {
    match target {
        Some(path) => fs::write(path, text).map_err(|e| Failure::io(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn fail(failure: &Failure) -> ExitCode {
    eprintln!(
        "{}",
        json!({ "error": { "kind": failure.kind, "message": failure.message } })
    );
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&Failure::usage(e.to_string().trim_end())),
    };
    let (text, status) = match run(cli.command) {
        Ok(Output::Json(v)) => (pretty(&v), ExitCode::SUCCESS),
        Ok(Output::Mismatch(v)) => (pretty(&v), ExitCode::from(2)),
        Ok(Output::Text(t)) => (t, ExitCode::SUCCESS),
        Err(f) => return fail(&f),
    };
    match emit(cli.output.as_deref(), &text) {
        Ok(()) => status,
        Err(f) => fail(&f),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
