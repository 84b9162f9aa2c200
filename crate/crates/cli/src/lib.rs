//! Command-line front end: every subcommand reads workspace files, calls one
//! library operation and writes the result in the matching text format.

mod config;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use tropchar::classes::{
    admissibility_check, class_mul_with, class_pushforward, complete_intersection_class, critical_count,
    euler_characteristic, euler_discriminant_fan, grading_convert, intersection_class, invariance_rank,
    singular_combine,
};
use tropchar::cycles::{
    intersection_number, is_balanced, pullback, pushforward, stable_intersection_with, IntersectOptions,
};
use tropchar::genericity::{
    compute_classes_surface3, find_generic_projection, is_immersed, is_submersed, ExternalOracle, GenericityReport,
    GenericityWitness, Mode, OracleSpec, SearchOptions,
};
use tropchar::polyhedra::common_refinement;
use tropchar::semistable::{
    boundary_decomposition_check, build_semistable_3to2, check_weakly_semistable, isotopy_report,
    tripod_counterexample, tripod_cycle, tripod_positivity_witness, LadderProfile, Tripod,
};
use tropchar::workbench::format;
use tropchar::workbench::{ObjectKind, WorkspaceObject};
use tropchar::{Error, Fan, LatticePolytope, ProjectionMap, TropicalClass, TropicalCycle};

pub use config::Config;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ORACLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "tropchar", version, about = "Tropical cycles, characteristic classes and semistable fans")]
struct Cli {
    /// Write the result here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// TOML configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Overrides `search_bound`.
    #[arg(long, global = true)]
    search_bound: Option<u32>,
    /// Run single-threaded regardless of the configuration.
    #[arg(long, global = true)]
    no_parallel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Two {
    a: PathBuf,
    b: PathBuf,
}

#[derive(Args, Debug)]
struct MapAnd {
    map: PathBuf,
    input: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exit 0 when the cycle is balanced.
    CheckBalanced { cycle: PathBuf },
    /// Common refinement of two fans.
    Refine(Two),
    /// Tropical hypersurface of a polytope.
    PolytopeTrop { polytope: PathBuf },
    /// Normalized volume of a polytope.
    Volume { polytope: PathBuf },
    /// Stable intersection of two cycles.
    Intersect(Two),
    /// Intersection number of cycles of complementary dimension.
    Number(Two),
    /// Pushforward of a cycle along a matrix.
    Push(MapAnd),
    /// Pullback of a cycle along a surjective matrix.
    Pull(MapAnd),
    /// Cross product of two cycles.
    Cross(Two),
    ClassMul(Two),
    ClassPush(MapAnd),
    GradeConvert { class: PathBuf },
    /// Class of `k` generic equations with the given Newton polytope.
    HypersurfaceClass {
        polytope: PathBuf,
        #[arg(short, long, default_value_t = 1)]
        k: usize,
    },
    Euler { class: PathBuf },
    EulerDiscriminant { class: PathBuf, map: PathBuf },
    SingularCombine {
        smooth: PathBuf,
        lifted: PathBuf,
        #[arg(long)]
        dim_u: usize,
    },
    IntersectionClass(Two),
    InvarianceRank { class: PathBuf },
    CritCount { support: PathBuf, class: PathBuf },
    Admissible { support: PathBuf, class: PathBuf },
    Immersed(MapAnd),
    Submersed(MapAnd),
    /// Search for a generic projection of the given rank.
    Genproj {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        immerse: Vec<PathBuf>,
        #[arg(long)]
        submerse: Vec<PathBuf>,
    },
    /// Characteristic classes of a surface in the 3-torus from an oracle.
    Classes3 {
        surface: PathBuf,
        #[arg(long)]
        oracle: Option<String>,
        #[arg(long)]
        timeout: Option<u64>,
    },
    SemistableCheck { sigma: PathBuf, sigma_prime: PathBuf, map: PathBuf },
    SemistableBuild { fan: PathBuf },
    /// Tripod cycle of a ladder profile or semistable pair.
    Tripod {
        profile: PathBuf,
        #[arg(long)]
        column: usize,
        #[arg(long)]
        rung: i64,
        #[arg(long, default_value_t = 1)]
        weight: i64,
    },
    /// Witness that a tripod combination is not effective, from `column:rung:coefficient` terms,
    /// or with `--exhaustive LO:HI` a search over all coefficient vectors.
    TripodWitness {
        profile: PathBuf,
        #[arg(allow_hyphen_values = true)]
        terms: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        exhaustive: Option<String>,
    },
    IsotopyCheck { general: PathBuf, special: PathBuf, map: PathBuf },
    DecomposeCheck { general: PathBuf, special: PathBuf, boundary: Vec<PathBuf> },
    /// Kind, name and content digest of a workspace file.
    Digest { file: PathBuf },
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = Result<Outcome, Failure>;

/// `ok = false` maps to exit 1; `notes` go to standard error.
struct Outcome {
    text: String,
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn text(text: String) -> Self {
        Outcome { text, ok: true, notes: Vec::new() }
    }

    fn verdict(ok: bool, notes: Vec<String>) -> Self {
        Outcome { text: format!("{ok}\n"), ok, notes }
    }
}

struct Ctx {
    config: Config,
}

impl Ctx {
    fn intersect_opts(&self) -> IntersectOptions {
        IntersectOptions {
            retry_budget: self.config.displacement_retry_budget,
            offset: 0,
            parallel: self.config.parallel,
        }
    }

    fn search_opts(&self) -> SearchOptions {
        SearchOptions { search_bound: self.config.search_bound, offset: 0 }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load<T>(path: &Path, parse: impl Fn(&str) -> tropchar::Result<T>) -> Result<T, Failure> {
    let text = read(path)?;
    parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn cycle(path: &Path) -> Result<TropicalCycle, Failure> {
    load(path, format::parse_cycle)
}

fn class(path: &Path) -> Result<TropicalClass, Failure> {
    load(path, format::parse_class)
}

fn fan(path: &Path) -> Result<Fan, Failure> {
    load(path, format::parse_fan)
}

fn map(path: &Path) -> Result<ProjectionMap, Failure> {
    Ok(ProjectionMap::new(load(path, format::parse_matrix)?)?)
}

/// A `polytope` file, or the convex hull of a `points` file.
fn polytope(path: &Path) -> Result<LatticePolytope, Failure> {
    load(path, |text| {
        if format::Lines::new(text).peek().is_some_and(|l| l.starts_with("points")) {
            format::parse_support(text)?.polytope()
        } else {
            format::parse_polytope(text)
        }
    })
}

/// A bare `profile` block or the profile of a semistable pair.
fn profile(path: &Path) -> Result<LadderProfile, Failure> {
    load(path, |text| match ObjectKind::detect(text) {
        Ok(ObjectKind::SemistablePair) => Ok(format::parse_semistable_pair(text)?.profile),
        _ => format::parse_profile(text),
    })
}

fn witness_text(w: &GenericityWitness) -> String {
    match w {
        GenericityWitness::Collapsed(c) => format!("cone {c} collapses under the map"),
        GenericityWitness::Overlap(a, b) => format!("images of cones {a} and {b} overlap"),
        GenericityWitness::FiberTooLarge { cone, fiber_dim } => format!("cone {cone} has {fiber_dim}-dimensional fibres"),
    }
}

fn genericity(rep: GenericityReport) -> Outcome {
    Outcome::verdict(rep.holds(), rep.witnesses.iter().map(witness_text).collect())
}

fn parse_term(s: &str) -> Result<(Tripod, BigInt), Failure> {
    let bad = || Failure::Usage(format!("tripod term `{s}` is not column:rung:coefficient"));
    let parts: Vec<&str> = s.split(':').collect();
    let [c, j, k] = parts[..] else { return Err(bad()) };
    let column = c.parse().map_err(|_| bad())?;
    let j = j.parse().map_err(|_| bad())?;
    let k: BigInt = k.parse().map_err(|_| bad())?;
    Ok((Tripod::new(column, j, BigInt::from(1)), k))
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<i64>, Failure> {
    let bad = || Failure::Usage(format!("range `{s}` is not LO:HI"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    Ok(lo.parse().map_err(|_| bad())?..=hi.parse().map_err(|_| bad())?)
}

fn execute(cmd: &Command, ctx: &Ctx) -> CmdResult {
    let opts = ctx.intersect_opts();
    Ok(match cmd {
        Command::CheckBalanced { cycle: p } => {
            let rep = is_balanced(&cycle(p)?);
            let notes = rep.failures.iter().map(|c| format!("unbalanced around {c}")).collect();
            Outcome::verdict(rep.balanced, notes)
        }
        Command::Refine(t) => Outcome::text(format::write_fan(&common_refinement(&fan(&t.a)?, &fan(&t.b)?)?)),
        Command::PolytopeTrop { polytope: p } => Outcome::text(format::write_cycle(&polytope(p)?.trop()?)),
        Command::Volume { polytope: p } => Outcome::text(format!("{}\n", polytope(p)?.lattice_volume())),
        Command::Intersect(t) => {
            Outcome::text(format::write_cycle(&stable_intersection_with(&cycle(&t.a)?, &cycle(&t.b)?, &opts)?))
        }
        Command::Number(t) => Outcome::text(format!("{}\n", intersection_number(&cycle(&t.a)?, &cycle(&t.b)?)?)),
        Command::Push(m) => Outcome::text(format::write_cycle(&pushforward(&map(&m.map)?, &cycle(&m.input)?)?)),
        Command::Pull(m) => Outcome::text(format::write_cycle(&pullback(&map(&m.map)?, &cycle(&m.input)?)?)),
        Command::Cross(t) => Outcome::text(format::write_cycle(&cycle(&t.a)?.cross_product(&cycle(&t.b)?).canonicalize())),
        Command::ClassMul(t) => Outcome::text(format::write_class(&class_mul_with(&class(&t.a)?, &class(&t.b)?, &opts)?)),
        Command::ClassPush(m) => Outcome::text(format::write_class(&class_pushforward(&map(&m.map)?, &class(&m.input)?)?)),
        Command::GradeConvert { class: p } => Outcome::text(format::write_class(&grading_convert(&class(p)?)?)),
        Command::HypersurfaceClass { polytope: p, k } => {
            let a = polytope(p)?;
            let n = a.ambient();
            Outcome::text(format::write_class(&complete_intersection_class(&a, *k, n)?))
        }
        Command::Euler { class: p } => Outcome::text(format!("{}\n", euler_characteristic(&class(p)?)?)),
        Command::EulerDiscriminant { class: c, map: m } => {
            Outcome::text(format::write_cycle(&euler_discriminant_fan(&class(c)?, &map(m)?)?))
        }
        Command::SingularCombine { smooth, lifted, dim_u } => {
            Outcome::text(format::write_class(&singular_combine(&class(smooth)?, &class(lifted)?, *dim_u)?))
        }
        Command::IntersectionClass(t) => Outcome::text(format::write_class(&intersection_class(&class(&t.a)?, &class(&t.b)?)?)),
        Command::InvarianceRank { class: p } => {
            let rep = invariance_rank(&class(p)?)?;
            let mut s = format!("rank {}\n", rep.rank);
            for (k, r) in &rep.lineality_ranks {
                s.push_str(&format!("lineality {k} {r}\n"));
            }
            Outcome::text(s)
        }
        Command::CritCount { support, class: c } => {
            let a = load(support, format::parse_support)?;
            Outcome::text(format!("{}\n", critical_count(&a, &class(c)?)?))
        }
        Command::Admissible { support, class: c } => {
            let a = load(support, format::parse_support)?;
            let rep = admissibility_check(&a, &class(c)?)?;
            Outcome::verdict(rep.admissible, rep.violations.iter().map(ToString::to_string).collect())
        }
        Command::Immersed(m) => genericity(is_immersed(&map(&m.map)?, &cycle(&m.input)?)?),
        Command::Submersed(m) => genericity(is_submersed(&map(&m.map)?, &cycle(&m.input)?)?),
        Command::Genproj { rank, immerse, submerse } => {
            let mut fans = Vec::new();
            for p in immerse {
                fans.push((cycle(p)?, Mode::Immerse));
            }
            for p in submerse {
                fans.push((cycle(p)?, Mode::Submerse));
            }
            let p = find_generic_projection(&fans, *rank, &ctx.search_opts())?;
            Outcome::text(format::write_matrix(p.matrix()))
        }
        Command::Classes3 { surface, oracle, timeout } => {
            let command = oracle
                .clone()
                .or_else(|| ctx.config.oracle_command.clone())
                .ok_or_else(|| Failure::Usage("classes3 needs --oracle or `oracle_command` in the config".into()))?;
            let secs = timeout.unwrap_or(ctx.config.oracle_timeout_seconds);
            let spec = OracleSpec::new(command, std::time::Duration::from_secs(secs));
            let mut oracle = ExternalOracle::new(spec);
            let (c, _) = compute_classes_surface3(&cycle(surface)?, &mut oracle, &ctx.search_opts())?;
            Outcome::text(format::write_class(&c))
        }
        Command::SemistableCheck { sigma, sigma_prime, map: m } => {
            let rep = check_weakly_semistable(&fan(sigma)?, &fan(sigma_prime)?, &map(m)?)?;
            Outcome::verdict(rep.semistable, rep.witnesses.iter().map(ToString::to_string).collect())
        }
        Command::SemistableBuild { fan: f } => Outcome::text(format::write_semistable_pair(&build_semistable_3to2(&fan(f)?)?)),
        Command::Tripod { profile: p, column, rung, weight } => {
            let t = Tripod::new(*column, *rung, BigInt::from(*weight));
            Outcome::text(format::write_cycle(&tripod_cycle(&profile(p)?, &t)?))
        }
        Command::TripodWitness { profile: p, terms, exhaustive } => {
            let prof = profile(p)?;
            match (exhaustive, terms.is_empty()) {
                (Some(r), true) => match tripod_counterexample(&prof, parse_range(r)?) {
                    None => Outcome::text("no counterexample\n".into()),
                    Some(coeffs) => {
                        let shown: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
                        Outcome {
                            text: format!("counterexample {}\n", shown.join(" ")),
                            ok: false,
                            notes: vec!["combination with no positive ray".into()],
                        }
                    }
                },
                (None, false) => {
                    let combo = terms.iter().map(|s| parse_term(s)).collect::<Result<Vec<_>, _>>()?;
                    match tripod_positivity_witness(&prof, &combo)? {
                        Some(w) => Outcome::text(format!("{w}\n")),
                        None => Outcome {
                            text: "none\n".into(),
                            ok: false,
                            notes: vec!["combination has no positive ray".into()],
                        },
                    }
                }
                _ => return Err(Failure::Usage("give either tripod terms or --exhaustive LO:HI".into())),
            }
        }
        Command::IsotopyCheck { general, special, map: m } => {
            let rep = isotopy_report(&cycle(general)?, &cycle(special)?, &map(m)?)?;
            let text = format!(
                "pushforwards-equal {}\nimmersed {}\nhypotheses-met {}\nconclusion-holds {}\ninconsistent {}\n",
                rep.pushforwards_equal, rep.immersed, rep.hypotheses_met, rep.conclusion_holds, rep.inconsistent
            );
            let notes = if rep.inconsistent {
                vec!["hypotheses hold but the fibres differ".into()]
            } else {
                Vec::new()
            };
            Outcome { text, ok: !rep.inconsistent, notes }
        }
        Command::DecomposeCheck { general, special, boundary } => {
            let parts = boundary.iter().map(|p| cycle(p)).collect::<Result<Vec<_>, _>>()?;
            let ok = boundary_decomposition_check(&cycle(general)?, &cycle(special)?, &parts)?;
            let notes = if ok { Vec::new() } else { vec!["general fibre differs from special fibre plus boundary".into()] };
            Outcome::verdict(ok, notes)
        }
        Command::Digest { file } => {
            let text = read(file)?;
            let name = file.file_stem().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
            let obj = WorkspaceObject::parse(name, &text).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            Outcome::text(format!("{} {} {}\n", obj.kind(), obj.name(), obj.digest()))
        }
    })
}

fn exit_for(e: &Error) -> i32 {
    match e {
        Error::Oracle(_) => EXIT_ORACLE,
        Error::Inadmissible(_) | Error::SearchExhausted(_) => EXIT_FALSE,
        _ => EXIT_USAGE,
    }
}

/// Runs one command line, writing to the given streams; returns the exit status.
pub fn run_with_io<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut config = match &cli.config {
        Some(p) => match Config::load(p) {
            Ok(c) => c,
            Err(e) => {
                let _ = writeln!(err, "error: config {e}");
                return EXIT_USAGE;
            }
        },
        None => Config::default(),
    };
    if let Some(b) = cli.search_bound {
        config.search_bound = b;
    }
    if cli.no_parallel {
        config.parallel = false;
    }
    let ctx = Ctx { config };
    let result = if ctx.config.parallel {
        execute(&cli.command, &ctx)
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(1).build() {
            Ok(pool) => pool.install(|| execute(&cli.command, &ctx)),
            Err(e) => Err(Failure::Usage(format!("thread pool: {e}"))),
        }
    };
    match result {
        Ok(o) => {
            for n in &o.notes {
                let _ = writeln!(err, "{n}");
            }
            let written = match &cli.output {
                Some(p) => std::fs::write(p, &o.text).map_err(|e| format!("{}: {e}", p.display())),
                None => out.write_all(o.text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            if o.ok {
                EXIT_OK
            } else {
                EXIT_FALSE
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_for(&e)
        }
    }
}

/// Runs one command line against the process streams.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(argv, &mut stdout.lock(), &mut stderr.lock())
}
