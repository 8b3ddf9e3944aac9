use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use geodual::format::{format_set_line, parse_family, parse_hg, parse_imp, parse_mf, write_hg, write_imp, write_mf};
use geodual::oracle::generate;
use geodual::{oracle, ElementSet, GroundSet, ImplicationalBase, MeetFamily};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod run;

#[derive(Parser)]
#[command(
    name = "geodual",
    version,
    about = "Translate between implicational bases and meet-irreducible families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the meet-irreducible closed sets of a ranked base.
    Ccm {
        input: PathBuf,
        /// Prefix each meet with the element `j` whose family it belongs to.
        #[arg(long, conflicts_with = "mf")]
        by_element: bool,
        /// Start with an `elements:` header so the output is a .mf file.
        #[arg(long, conflicts_with = "json")]
        mf: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Recover the critical base from a meet-irreducible family.
    Sid {
        input: PathBuf,
        /// Recompute the meets of the result and compare with the input.
        #[arg(long)]
        verify: bool,
        /// Reject members that are intersections of larger members.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Print the critical base of an acyclic standard base.
    CriticalBase {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compute a rank function or report why none exists.
    RankCheck {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two antichains of closed sets are dual.
    DualCheck {
        input: PathBuf,
        #[arg(long)]
        plus: PathBuf,
        #[arg(long)]
        minus: PathBuf,
    },
    /// Turn a duality instance into a meet-family check on an extended base.
    Reduce {
        input: PathBuf,
        #[arg(long)]
        plus: PathBuf,
        #[arg(long)]
        minus: PathBuf,
        /// Meet family of the input base; computed when omitted.
        #[arg(long)]
        meets: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        imp_out: PathBuf,
        #[arg(long, value_name = "PATH")]
        mf_out: PathBuf,
    },
    /// Run ccm then sid and compare with the critical base.
    Roundtrip { input: PathBuf },
    /// Brute-force references and instance generators.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args, Clone, Copy)]
struct Jobs {
    /// Worker threads for the per-element loop.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
}

#[derive(Subcommand)]
enum OracleCommand {
    ClosedSets {
        input: PathBuf,
    },
    Meets {
        input: PathBuf,
    },
    Joins {
        input: PathBuf,
    },
    /// Minimal generators of one element.
    Mingens {
        input: PathBuf,
        element: String,
        /// Keep only the critical ones.
        #[arg(long)]
        critical: bool,
    },
    /// Maximal closed sets disjoint from the given labels.
    MaximalAvoiding {
        input: PathBuf,
        labels: Vec<String>,
    },
    Transversals {
        input: PathBuf,
    },
    /// Exhaustive search for a rank function.
    RankSearch {
        input: PathBuf,
    },
    /// Print a random instance.
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum InstanceKind {
    Ranked,
    Acyclic,
    Distributive,
    Unranked,
    Hypergraph,
}

#[derive(Args)]
struct GenerateArgs {
    kind: InstanceKind,
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of rank levels (ranked instances).
    #[arg(long, default_value_t = 3)]
    levels: usize,
    /// Upper bound on implications or edges.
    #[arg(long, default_value_t = 12)]
    size: usize,
    #[arg(long, default_value_t = 3)]
    max_premise: usize,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_imp(path: &Path) -> Result<ImplicationalBase> {
    parse_imp(&read(path)?).with_context(|| path.display().to_string())
}

fn load_mf(path: &Path) -> Result<MeetFamily> {
    parse_mf(&read(path)?).with_context(|| path.display().to_string())
}

/// A family over the ground set of `base`.
fn load_family(path: &Path, ground: &GroundSet) -> Result<Vec<ElementSet>> {
    let (g, sets) = parse_family(&read(path)?).with_context(|| path.display().to_string())?;
    if &g != ground {
        bail!(geodual::Error::GroundMismatch);
    }
    Ok(sets)
}

fn write_sets(out: &mut impl Write, ground: &GroundSet, sets: &[ElementSet]) -> io::Result<()> {
    for s in sets {
        writeln!(out, "{}", format_set_line(ground, s))?;
    }
    Ok(())
}

fn oracle_command(cmd: OracleCommand, out: &mut impl Write) -> Result<u8> {
    match cmd {
        OracleCommand::ClosedSets { input } => {
            let base = load_imp(&input)?;
            write_sets(out, base.ground(), &oracle::all_closed_sets(&base)?)?;
        }
        OracleCommand::Meets { input } => {
            let base = load_imp(&input)?;
            write_sets(out, base.ground(), &oracle::meets_brute(&base)?)?;
        }
        OracleCommand::Joins { input } => {
            let base = load_imp(&input)?;
            write_sets(out, base.ground(), &oracle::joins_brute(&base)?)?;
        }
        OracleCommand::Mingens {
            input,
            element,
            critical,
        } => {
            let base = load_imp(&input)?;
            let b = base
                .ground()
                .position(&element)
                .with_context(|| format!("unknown element {element:?}"))?;
            let gens = if critical {
                oracle::critical_mingens_brute(&base, b)?
            } else {
                oracle::mingens_brute(&base, b)?
            };
            write_sets(out, base.ground(), &gens)?;
        }
        OracleCommand::MaximalAvoiding { input, labels } => {
            let base = load_imp(&input)?;
            let b = base.ground().set_of(labels.iter().map(String::as_str))?;
            write_sets(out, base.ground(), &oracle::maximal_avoiding_brute(&base, &b)?)?;
        }
        OracleCommand::Transversals { input } => {
            let (ground, h) = parse_hg(&read(&input)?).with_context(|| input.display().to_string())?;
            write_sets(out, &ground, &oracle::transversals_brute(&h)?)?;
        }
        OracleCommand::RankSearch { input } => {
            let base = load_imp(&input)?;
            let found = oracle::rank_exists_brute(&base)?;
            writeln!(out, "{}", if found { "ranked" } else { "unranked" })?;
        }
        OracleCommand::Generate(args) => generate_instance(&args, out)?,
    }
    Ok(0)
}

fn generate_instance(args: &GenerateArgs, out: &mut impl Write) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let n = args.n;
    if n > geodual::set::MAX_ELEMENTS {
        bail!(geodual::Error::GuardExceeded {
            size: n,
            limit: geodual::set::MAX_ELEMENTS
        });
    }
    let text = match args.kind {
        InstanceKind::Ranked => write_imp(&generate::random_ranked_base(
            &mut rng,
            n,
            args.levels,
            args.size,
            args.max_premise,
        )),
        InstanceKind::Acyclic => write_imp(&generate::random_acyclic_base(&mut rng, n, args.size, args.max_premise)),
        InstanceKind::Distributive => write_imp(&generate::random_distributive_base(&mut rng, n, args.size)),
        InstanceKind::Unranked => {
            if n < 3 {
                bail!(geodual::Error::Precondition(
                    "unranked instances need at least three elements".into()
                ));
            }
            write_imp(&generate::random_unranked_base(&mut rng, n, args.size))
        }
        InstanceKind::Hypergraph => {
            let h = generate::random_hypergraph(&mut rng, n, args.size);
            write_hg(&GroundSet::numbered(n), &h)
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn dispatch(cli: Cli) -> Result<u8> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Ccm {
            input,
            by_element,
            mf,
            json,
            jobs,
        } => {
            let base = load_imp(&input)?;
            run::ccm(
                &base,
                run::CcmOutput { by_element, mf, json },
                jobs.jobs.into(),
                &mut out,
            )
        }
        Command::Sid {
            input,
            verify,
            strict,
            json,
            jobs,
        } => {
            let m = load_mf(&input)?;
            run::sid(
                &m,
                geodual::SidOptions { verify, strict },
                json,
                jobs.jobs.into(),
                &mut out,
            )
        }
        Command::CriticalBase { input, json } => {
            let base = load_imp(&input)?;
            let crit = geodual::critical_base(&base)?;
            if json {
                run::write_json_implications(&mut out, &crit)?;
            } else {
                out.write_all(write_imp(&crit).as_bytes())?;
            }
            Ok(0)
        }
        Command::RankCheck { input, json } => run::rank_check(&load_imp(&input)?, json, &mut out),
        Command::DualCheck { input, plus, minus } => {
            let base = load_imp(&input)?;
            let plus = geodual::Antichain::new(&base, load_family(&plus, base.ground())?)?;
            let minus = geodual::Antichain::new(&base, load_family(&minus, base.ground())?)?;
            let dual = geodual::check_dual(&base, &plus, &minus)?;
            writeln!(out, "{}", if dual { "dual" } else { "not dual" })?;
            Ok(0)
        }
        Command::Reduce {
            input,
            plus,
            minus,
            meets,
            imp_out,
            mf_out,
        } => {
            let base = load_imp(&input)?;
            let plus = geodual::Antichain::new(&base, load_family(&plus, base.ground())?)?;
            let minus = geodual::Antichain::new(&base, load_family(&minus, base.ground())?)?;
            let meets = match meets {
                Some(path) => load_mf(&path)?,
                None => run::meets_of(&base)?,
            };
            let (omega, family) = geodual::reduce_dual_to_cmi(&base, &plus, &minus, &meets)?;
            fs::write(&imp_out, write_imp(&omega)).with_context(|| format!("cannot write {}", imp_out.display()))?;
            fs::write(&mf_out, write_mf(&family)).with_context(|| format!("cannot write {}", mf_out.display()))?;
            Ok(0)
        }
        Command::Roundtrip { input } => run::roundtrip(&load_imp(&input)?, &mut out),
        Command::Oracle(cmd) => oracle_command(cmd, &mut out),
    }
}

/// 1 for unreadable or malformed input, 2 for a violated precondition,
/// 3 for a failed verification.
fn exit_code(err: &anyhow::Error) -> u8 {
    use geodual::Error as E;
    match err.downcast_ref::<E>() {
        Some(E::VerificationFailed(_)) => 3,
        Some(
            E::Cyclic
            | E::NotStandard
            | E::NotRanked(_)
            | E::InvalidRank
            | E::NotConvexGeometry(_)
            | E::InvalidMeetFamily(_)
            | E::InvalidAntichain(_)
            | E::GuardExceeded { .. }
            | E::Precondition(_),
        ) => 2,
        _ => 1,
    }
}

fn is_broken_pipe(err: &anyhow::Error) -> bool {
    err.downcast_ref::<io::Error>()
        .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) if is_broken_pipe(&err) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
