use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use skew_bracoids::bridge::{
    almost_classical_oracle_count, alpha_to_beta, beta_to_alpha, embedding_pair_from_bracoid, enumerate_almost_classical,
    g_stability_check, CosetSpace,
};
use skew_bracoids::constructions::{brace_envelope, d2n_family, find_identification, induce};
use skew_bracoids::json::{
    permutations, to_canonical_string, BracoidJson, ClassificationJson, EmbeddingJson, GroupJson, SolutionJson,
};
use skew_bracoids::ybe::{braid_failure, compare_solutions, solution_from_bracoid, Isomorphism, SolutionInvariants};
use skew_bracoids::{Error, Limits, SkewBracoid, Subgroup};

mod render;

#[derive(Parser, Debug)]
#[command(name = "bracoid", version, about = "Build, classify and verify finite skew bracoids and their Yang-Baxter solutions")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Largest group order accepted by subgroup enumeration.
    #[arg(long, global = true)]
    order_cap: Option<usize>,
    /// Largest holomorph order accepted.
    #[arg(long, global = true)]
    hol_cap: Option<usize>,
    /// Use all cores for enumeration and braid verification.
    #[arg(long, global = true)]
    parallel: bool,
    /// TOML file with `order_cap`, `hol_cap`, `format` and `parallel`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Direction {
    /// Use whichever map is present; with both, derive from alpha and check beta.
    Auto,
    AlphaToBeta,
    BetaToAlpha,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The bracoid (D_2n, C_d) with r^i s^j ⊙ η^k = η^(i + (-1)^j k).
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Check the bracoid axioms and echo the bracoid.
    Validate { file: Option<PathBuf> },
    /// Stabilizer, complements and the contains/almost/almost-classical flags.
    Classify { file: Option<PathBuf> },
    /// Quotient by the kernel of the action.
    Reduce { file: Option<PathBuf> },
    /// Induce a bracoid from an outer bracoid and an inner one on the stabilizer.
    Induce {
        #[arg(long)]
        outer: PathBuf,
        #[arg(long)]
        inner: PathBuf,
        /// Members of a normal complement to the outer stabilizer.
        #[arg(long, value_delimiter = ',', required = true)]
        complement: Vec<usize>,
        /// Image in the outer group of each inner multiplicative element.
        /// Found by search when omitted.
        #[arg(long, value_delimiter = ',')]
        identification: Option<Vec<usize>>,
    },
    /// Almost classical bracoids with a given additive group, from Hol(N).
    EnumerateAc {
        /// Group JSON for N.
        #[arg(long)]
        additive: PathBuf,
        /// Emit only the bracoid at this position.
        #[arg(long)]
        pick: Option<usize>,
    },
    /// The skew brace (G, ★) whose quotient by S recovers the bracoid.
    Envelope {
        file: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', required = true)]
        complement: Vec<usize>,
    },
    /// Yang-Baxter solution on G from a complement H.
    Solve {
        #[arg(long)]
        bracoid: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', required = true)]
        complement: Vec<usize>,
    },
    /// Check the braid relation and recompute the flags of a solution.
    VerifyYbe {
        #[arg(long)]
        solution: Option<PathBuf>,
    },
    /// The embedding pair (α, β) of a bracoid, with X = G/S.
    Embedding { file: Option<PathBuf> },
    /// Translate between N → Perm(X) and G → Perm(N).
    Translate {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        direction: Direction,
    },
    /// Equality, invariants and (for small sizes) isomorphism of two solutions.
    Compare { first: PathBuf, second: PathBuf },
}

#[derive(Deserialize, Default, Debug)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    order_cap: Option<usize>,
    hol_cap: Option<usize>,
    format: Option<Format>,
    parallel: Option<bool>,
}

#[derive(Debug, Clone, Copy)]
struct Config {
    limits: Limits,
    format: Format,
    parallel: bool,
}

enum Failure {
    /// Exit 1.
    Input { code: &'static str, message: String },
    /// Exit 1 or 2 depending on the error.
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn input(code: &'static str, message: impl Into<String>) -> Failure {
    Failure::Input { code, message: message.into() }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// What a command writes to stdout.
enum Output {
    Json(Value),
    Text(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input { code, message }) => {
            eprintln!("{}", to_canonical_string(&json!({"code": code, "message": message, "witness": null})));
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("{}", to_canonical_string(&e.to_json()));
            ExitCode::from(if e.is_verification_failure() { 2 } else { 1 })
        }
    }
}

fn load_config(global: &GlobalArgs) -> CliResult<Config> {
    let file = match &global.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| input("Io", format!("{}: {e}", path.display())))?;
            toml::from_str::<FileConfig>(&text).map_err(|e| input("Config", e.to_string()))?
        }
        None => FileConfig::default(),
    };
    let defaults = Limits::default();
    let limits = Limits {
        order_cap: global.order_cap.or(file.order_cap).unwrap_or(defaults.order_cap),
        hol_cap: global.hol_cap.or(file.hol_cap).unwrap_or(defaults.hol_cap),
    };
    if limits.order_cap == 0 || limits.hol_cap == 0 {
        return Err(input("Config", "caps must be positive"));
    }
    Ok(Config {
        limits,
        format: global.format.or(file.format).unwrap_or(Format::Json),
        parallel: global.parallel || file.parallel.unwrap_or(false),
    })
}

fn run(cli: Cli) -> CliResult<()> {
    let config = load_config(&cli.global)?;
    let threads = if config.parallel { 0 } else { 1 };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| input("Runtime", e.to_string()))?;
    let output = pool.install(|| execute(cli.command, &config))?;
    match output {
        Output::Json(v) => println!("{}", to_canonical_string(&v)),
        Output::Text(t) => print!("{t}"),
    }
    Ok(())
}

fn read_source(path: Option<&Path>) -> CliResult<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| input("Io", format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| input("Io", format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn read_json<T: DeserializeOwned>(path: Option<&Path>) -> CliResult<T> {
    let text = read_source(path)?;
    let name = path.map_or("stdin".to_string(), |p| p.display().to_string());
    serde_json::from_str(&text).map_err(|e| input("Parse", format!("{name}: {e}")))
}

fn read_bracoid(path: Option<&Path>) -> CliResult<(SkewBracoid, BracoidJson)> {
    let j: BracoidJson = read_json(path)?;
    Ok((j.to_bracoid()?, j))
}

fn subgroup_of(b: &SkewBracoid, members: &[usize]) -> CliResult<Subgroup> {
    let g = b.multiplicative();
    if let Some(&x) = members.iter().find(|&&x| x >= g.order()) {
        return Err(input("Shape", format!("complement member {x} is not an element of a group of order {}", g.order())));
    }
    Ok(Subgroup::new(g, members.to_vec())?)
}

fn bracoid_output(config: &Config, b: &SkewBracoid, provenance: Option<Value>) -> Output {
    match config.format {
        Format::Json => {
            let j = BracoidJson::from(b);
            let j = match provenance {
                Some(p) => j.with_provenance(p),
                None => j,
            };
            Output::Json(serde_json::to_value(j).expect("serializable"))
        }
        Format::Text => Output::Text(render::bracoid(b)),
    }
}

fn execute(command: Command, config: &Config) -> CliResult<Output> {
    let limits = &config.limits;
    match command {
        Command::Family { n, d } => {
            if n == 0 {
                return Err(input("Shape", "n must be positive"));
            }
            let b = d2n_family(n, d)?;
            Ok(bracoid_output(config, &b, Some(json!({"construction": "family", "n": n, "d": d}))))
        }
        Command::Validate { file } => {
            let (b, j) = read_bracoid(file.as_deref())?;
            Ok(bracoid_output(config, &b, j.provenance))
        }
        Command::Classify { file } => {
            let (b, _) = read_bracoid(file.as_deref())?;
            let c = b.classify(limits)?;
            Ok(match config.format {
                Format::Json => Output::Json(serde_json::to_value(ClassificationJson::from(&c)).expect("serializable")),
                Format::Text => Output::Text(render::classification(&b, &c)),
            })
        }
        Command::Reduce { file } => {
            let (b, j) = read_bracoid(file.as_deref())?;
            let r = b.reduced_form()?;
            let prov = json!({"construction": "reduce", "kernel": b.kernel().members(), "projection": r.projection, "source": j.provenance});
            Ok(bracoid_output(config, &r.bracoid, Some(prov)))
        }
        Command::Induce { outer, inner, complement, identification } => {
            let (ob, oj) = read_bracoid(Some(&outer))?;
            let (ib, ij) = read_bracoid(Some(&inner))?;
            let h = subgroup_of(&ob, &complement)?;
            let ident = match identification {
                Some(v) => v,
                None => find_identification(&ob, &ib)
                    .ok_or_else(|| Error::StabilizerMismatch { reason: "no isomorphism onto the stabilizer".into() })?,
            };
            let induced = induce(&ob, &h, &ib, &ident)?;
            let prov = json!({
                "construction": "induce",
                "complement": induced.complement.members(),
                "identification": induced.identification,
                "projection": induced.projection,
                "outer": oj.provenance,
                "inner": ij.provenance,
            });
            Ok(bracoid_output(config, &induced.result, Some(prov)))
        }
        Command::EnumerateAc { additive, pick } => {
            let n = read_json::<GroupJson>(Some(&additive))?.to_group()?;
            let e = enumerate_almost_classical(&n, limits)?;
            let oracle = almost_classical_oracle_count(&n, limits)?;
            if e.count() != oracle {
                return Err(Error::Internal(format!("enumeration found {} classes but the oracle found {oracle}", e.count())).into());
            }
            if let Some(i) = pick {
                let b = e.bracoids.get(i).ok_or_else(|| input("Shape", format!("only {} bracoids", e.count())))?;
                let prov = json!({"construction": "enumerate-ac", "index": i, "holomorph_subgroup": e.subgroups[i].members().members()});
                return Ok(bracoid_output(config, b, Some(prov)));
            }
            Ok(match config.format {
                Format::Json => Output::Json(json!({
                    "count": e.count(),
                    "oracle_count": oracle,
                    "equivalence": "conjugation by Aut(N)",
                    "bracoids": e.bracoids.iter().map(BracoidJson::from).collect::<Vec<_>>(),
                })),
                Format::Text => Output::Text(render::enumeration(&e.bracoids, oracle)),
            })
        }
        Command::Envelope { file, complement } => {
            let (b, j) = read_bracoid(file.as_deref())?;
            let h = subgroup_of(&b, &complement)?;
            let env = brace_envelope(&b, &h)?;
            let prov = json!({
                "construction": "envelope",
                "complement": h.members(),
                "stabilizer": env.stabilizer.members(),
                "witness": env.witness,
                "source": j.provenance,
            });
            Ok(bracoid_output(config, &env.brace, Some(prov)))
        }
        Command::Solve { bracoid, complement } => {
            let (b, _) = read_bracoid(bracoid.as_deref())?;
            let h = subgroup_of(&b, &complement)?;
            let s = solution_from_bracoid(&b, &h)?;
            Ok(match config.format {
                Format::Json => Output::Json(serde_json::to_value(SolutionJson::from(&s)).expect("serializable")),
                Format::Text => Output::Text(render::solution(&s)),
            })
        }
        Command::VerifyYbe { solution } => {
            let s = read_json::<SolutionJson>(solution.as_deref())?.to_solution()?;
            if let Some(e) = braid_failure(&s) {
                return Err(e.into());
            }
            Ok(match config.format {
                Format::Json => Output::Json(serde_json::to_value(SolutionJson::from(&s)).expect("serializable")),
                Format::Text => Output::Text(render::solution(&s)),
            })
        }
        Command::Embedding { file } => {
            let (b, _) = read_bracoid(file.as_deref())?;
            let pair = embedding_pair_from_bracoid(&b)?;
            Ok(match config.format {
                Format::Json => Output::Json(serde_json::to_value(EmbeddingJson::from(&pair)).expect("serializable")),
                Format::Text => Output::Text(render::embedding(&pair, g_stability_check(&pair))),
            })
        }
        Command::Translate { file, direction } => translate(read_json(file.as_deref())?, direction, config),
        Command::Compare { first, second } => {
            let s1 = read_json::<SolutionJson>(Some(&first))?.to_solution()?;
            let s2 = read_json::<SolutionJson>(Some(&second))?.to_solution()?;
            let c = compare_solutions(&s1, &s2)?;
            let iso = match &c.isomorphism {
                Isomorphism::Found(f) => json!({"status": "found", "map": f}),
                Isomorphism::None => json!({"status": "none"}),
                Isomorphism::Unknown => json!({"status": "unknown"}),
            };
            let report = json!({
                "equal": c.equal,
                "first_difference": c.first_difference.map(|(x, y)| [x, y]),
                "invariants": [invariants_json(&c.invariants.0), invariants_json(&c.invariants.1)],
                "isomorphism": iso,
            });
            Ok(match config.format {
                Format::Json => Output::Json(report),
                Format::Text => Output::Text(render::comparison(&report)),
            })
        }
    }
}

fn invariants_json(i: &SolutionInvariants) -> Value {
    json!({
        "cycle_type": i.cycle_type,
        "sigma_image_sizes": i.sigma_image_sizes,
        "tau_image_sizes": i.tau_image_sizes,
        "fixed_points": i.fixed_points,
        "diagonal_fixed_points": i.diagonal_fixed_points,
    })
}

fn translate(j: EmbeddingJson, direction: Direction, config: &Config) -> CliResult<Output> {
    let g = j.multiplicative.to_group()?;
    let n = j.additive.to_group()?;
    if let Some(&x) = j.subgroup.iter().find(|&&x| x >= g.order()) {
        return Err(input("Shape", format!("subgroup member {x} out of range")));
    }
    let sub = Subgroup::new(&g, j.subgroup.clone())?;
    let space = CosetSpace::new(g, sub)?;
    if space.size() != j.x_size {
        return Err(input("Shape", format!("X_size is {} but G/G′ has {} points", j.x_size, space.size())));
    }
    let alpha = j.maps.alpha.as_deref().map(permutations).transpose()?;
    let beta = j.maps.beta.as_deref().map(permutations).transpose()?;
    let pair = match (direction, alpha, beta) {
        (Direction::AlphaToBeta | Direction::Auto, Some(alpha), beta) => {
            let pair = alpha_to_beta(&space, &n, alpha)?;
            if direction == Direction::Auto {
                if let Some(given) = beta {
                    if let Some(i) = (0..given.len().max(pair.beta.len())).find(|&i| given.get(i) != pair.beta.get(i)) {
                        return Err(Error::InconsistentMaps { map: "beta".into(), index: i }.into());
                    }
                }
            }
            pair
        }
        (Direction::BetaToAlpha | Direction::Auto, _, Some(beta)) => beta_to_alpha(&space, &n, beta)?,
        (Direction::AlphaToBeta, None, _) => return Err(input("Shape", "maps.alpha is required")),
        _ => return Err(input("Shape", "maps.alpha or maps.beta is required")),
    };
    let stability = g_stability_check(&pair);
    Ok(match config.format {
        Format::Json => Output::Json(serde_json::to_value(EmbeddingJson::from(&pair)).expect("serializable")),
        Format::Text => Output::Text(render::embedding(&pair, stability)),
    })
}
