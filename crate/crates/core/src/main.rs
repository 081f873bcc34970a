//! Command-line front end: every library capability behind one thin binary.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use extball::covering::{
    self, bounds_table, counting_lower_bound, exhaustive_c, is_short_covering, SearchOptions,
};
use extball::gf::{self, Field};
use extball::hamming::{
    ball, domain_aq, domain_dq, extended_ball, restricted_extended_ball,
    restricted_extended_ball_formula, Vec3, VecSet,
};
use extball::intersections::{
    family_e, family_g, family_h, restricted_extended_intersection_size, rho, rho_min,
    rho_min_exhaustive,
};
use extball::report::reproduce_paper;
use extball::symmetry::{construction_certificate, orbits_on, GroupKind, S3Subgroup};
use extball::{Error, Result};

#[derive(Parser)]
#[command(
    name = "extball",
    version,
    about = "Extended Hamming balls in F_q^3: cardinalities, intersecting families, short coverings"
)]
struct Cli {
    /// Field selector `q[:poly]`, e.g. `5` or `8:x^3+x^2+1`.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Config file with per-q modulus overrides (`q = x^3+x+1` lines).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Emit JSON where the command supports it.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for pair scans and search.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Describe the selected field: modulus, generator, primitive elements.
    Field,
    /// The radius-1 ball around a vector.
    Ball { vector: String },
    /// The extended ball of a vector and its restriction to D_q.
    ExtBall { vector: String },
    /// rho(u, v) with its witness scalars and the intersection size.
    Rho {
        u: String,
        v: String,
        /// One `"u","v",rho,size` line instead of text.
        #[arg(long)]
        csv: bool,
    },
    /// Minimum of rho over D_q x D_q: closed form, optionally confirmed
    /// exhaustively.
    RhoMin {
        #[arg(long)]
        exhaustive: bool,
    },
    /// theta of a family of (restricted) extended balls.
    Theta {
        #[arg(long, value_enum, default_value_t = FamilyArg::E)]
        family: FamilyArg,
    },
    /// Orbit table of a group action on a domain.
    Orbits {
        #[arg(long, value_enum, default_value_t = GroupArg::S3k)]
        group: GroupArg,
        #[arg(long, value_enum, default_value_t = DomainArg::All)]
        domain: DomainArg,
    },
    /// Covering construction from an N-invariant set; prints the
    /// certificate JSON.
    Metodo {
        /// File with one vector per line.
        #[arg(long = "L")]
        l_file: PathBuf,
        #[arg(long = "N", value_enum, default_value_t = SubgroupArg::Triv)]
        n: SubgroupArg,
    },
    /// Check whether a vector set is a short covering; exit 0 iff it is.
    VerifyCover {
        /// File with one vector per line.
        #[arg(long, conflicts_with = "builtin")]
        vectors: Option<PathBuf>,
        /// Use the published 6-vector cover (q = 8 or 9).
        #[arg(long)]
        builtin: bool,
    },
    /// Counting lower-bound certificate for q in {7, 8, 9}; prints JSON.
    LowerBound,
    /// Exhaustive computation of the minimum cover size.
    SearchC {
        #[arg(long)]
        max_m: Option<usize>,
        /// Drop the necessary-shape pruning (assumption-free mode, q <= 5).
        #[arg(long)]
        no_prune: bool,
        /// Enumerate every minimal cover (not implemented).
        #[arg(long)]
        enumerate_all: bool,
    },
    /// Known bounds on c(q) over a range of prime powers.
    Bounds {
        /// Inclusive range, e.g. 2..13.
        #[arg(long, default_value = "2..13")]
        range: String,
        #[arg(long)]
        csv: bool,
    },
    /// Run the full verification suite; exit 0 iff every claim passes.
    ReproducePaper {
        /// Inclusive field range, e.g. 4..9.
        #[arg(long, default_value = "2..13")]
        range: String,
        /// Write `<out>.txt` and `<out>.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// {E~(u) : u in D_q}
    #[value(name = "E", alias = "e")]
    E,
    /// {E~(u) : u != 0}
    #[value(name = "H", alias = "h")]
    H,
    /// {E(u) : u in F_q^3}
    #[value(name = "G", alias = "g")]
    G,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    /// S3 x K: permutations with uniform scaling
    S3k,
    /// full wreath product: independent scalings
    Wreath,
    /// 3-cycle subgroup with uniform scaling
    Cyc3k,
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    All,
    #[value(name = "Aq", alias = "aq")]
    Aq,
    #[value(name = "Dq", alias = "dq")]
    Dq,
}

#[derive(Clone, Copy, ValueEnum)]
enum SubgroupArg {
    Triv,
    Cyc3,
    Full,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn selected_field(cli: &Cli) -> Result<Field> {
    let spec = cli
        .field
        .as_deref()
        .ok_or_else(|| Error::UnsupportedField("this command needs --field q[:poly]".into()))?;
    let overrides: Option<HashMap<u16, Vec<u16>>> = match &cli.config {
        Some(path) => Some(gf::load_poly_overrides(path)?),
        None => None,
    };
    gf::field_from_spec(spec, overrides.as_ref())
}

fn read_vectors(f: &Field, path: &Path) -> Result<Vec<Vec3>> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(Vec3::parse(f, line)?);
    }
    Ok(out)
}

fn parse_range(s: &str) -> Result<(u16, u16)> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| Error::Parse(format!("expected a..b, got {s:?}")))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: u16 = lo
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad bound in {s:?}")))?;
    let hi: u16 = hi
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad bound in {s:?}")))?;
    Ok((lo, hi))
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Field => {
            let f = selected_field(cli)?;
            println!("{f}");
            println!(
                "characteristic {}, degree {}",
                f.characteristic(),
                f.degree()
            );
            println!("xi = {} (code {})", f.format_elem(f.xi()), f.xi().code());
            let prim: Vec<String> = f
                .primitive_elements()
                .iter()
                .map(|&g| f.format_elem(g))
                .collect();
            println!("primitive elements: {}", prim.join(", "));
        }
        Command::Ball { vector } => {
            let f = selected_field(cli)?;
            let u = Vec3::parse(&f, vector)?;
            let b = ball(&f, u);
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "center": u.display(&f),
                        "size": b.len(),
                        "members": b.members().map(|v| v.display(&f)).collect::<Vec<_>>(),
                    })
                );
            } else {
                println!(
                    "|B({})| = {} (3q-2 = {})",
                    u.display(&f),
                    b.len(),
                    3 * f.q() - 2
                );
                println!("{}", b.display(&f));
            }
        }
        Command::ExtBall { vector } => {
            let f = selected_field(cli)?;
            let u = Vec3::parse(&f, vector)?;
            let e = extended_ball(&f, u);
            let tilde = restricted_extended_ball(&f, u);
            let formula = restricted_extended_ball_formula(&f, u);
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "center": u.display(&f),
                        "weight": u.weight(),
                        "distinct": u.distinct_coords(),
                        "extended_size": e.len(),
                        "restricted_size": tilde.len(),
                        "restricted_formula": formula,
                    })
                );
            } else {
                println!(
                    "u = ({}), weight {}, {} distinct values",
                    u.display(&f),
                    u.weight(),
                    u.distinct_coords()
                );
                println!("|E(u)|  = {}", e.len());
                println!("|E~(u)| = {} (formula {})", tilde.len(), formula);
            }
        }
        Command::Rho { u, v, csv } => {
            let f = selected_field(cli)?;
            let u = Vec3::parse(&f, u)?;
            let v = Vec3::parse(&f, v)?;
            let r = rho(&f, u, v)?;
            let size = restricted_extended_intersection_size(&f, u, v)?;
            if *csv {
                println!(
                    "\"{}\",\"{}\",{},{}",
                    u.display(&f),
                    v.display(&f),
                    r.value(),
                    size
                );
            } else if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "u": u.display(&f),
                        "v": v.display(&f),
                        "rho": r.value(),
                        "intersection_size": size,
                        "witnesses": r.witnesses().iter().map(|(mu, pts)| serde_json::json!({
                            "mu": f.format_elem(*mu),
                            "points": pts.iter().map(|p| p.display(&f)).collect::<Vec<_>>(),
                        })).collect::<Vec<_>>(),
                    })
                );
            } else {
                println!("rho({}; {}) = {}", u.display(&f), v.display(&f), r.value());
                for (mu, pts) in r.witnesses() {
                    let pts: Vec<String> =
                        pts.iter().map(|p| format!("({})", p.display(&f))).collect();
                    println!("  mu = {}: {}", f.format_elem(*mu), pts.join(", "));
                }
                println!("|E~(u) ∩ E~(v)| = {size}");
            }
        }
        Command::RhoMin { exhaustive } => {
            let f = selected_field(cli)?;
            let closed = rho_min(&f)?;
            if *exhaustive {
                let scanned = rho_min_exhaustive(&f)?;
                println!(
                    "rho({}) = {closed} (closed form); exhaustive scan gives {scanned}",
                    f.q()
                );
                if scanned != closed {
                    return Ok(ExitCode::FAILURE);
                }
            } else {
                println!("rho({}) = {closed} (closed form)", f.q());
            }
        }
        Command::Theta { family } => {
            let f = selected_field(cli)?;
            let (name, fam) = match family {
                FamilyArg::E => ("E", family_e(&f)?),
                FamilyArg::H => ("H", family_h(&f)?),
                FamilyArg::G => ("G", family_g(&f)?),
            };
            let theta = fam.theta_with_threads(cli.threads.max(1))?;
            println!(
                "theta({name}) = {theta} over GF({}) ({} members)",
                f.q(),
                fam.len()
            );
        }
        Command::Orbits { group, domain } => {
            let f = selected_field(cli)?;
            let kind = match group {
                GroupArg::S3k => GroupKind::S3_X_K,
                GroupArg::Wreath => GroupKind::Wreath,
                GroupArg::Cyc3k => GroupKind::CYC3_X_K,
            };
            let dom = match domain {
                DomainArg::All => VecSet::full(f.q()),
                DomainArg::Aq => domain_aq(&f),
                DomainArg::Dq => domain_dq(&f),
            };
            let elements = kind.elements(&f);
            let orbits = orbits_on(&f, &elements, &dom);
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "group_order": elements.len(),
                        "orbits": orbits.iter().map(|o| serde_json::json!({
                            "representative": o.representative.display(&f),
                            "size": o.len(),
                        })).collect::<Vec<_>>(),
                    })
                );
            } else {
                println!(
                    "{} orbits under a group of order {}",
                    orbits.len(),
                    elements.len()
                );
                println!("{:14}  size", "representative");
                for o in &orbits {
                    println!("({:12})  {}", o.representative.display(&f), o.len());
                }
            }
        }
        Command::Metodo { l_file, n } => {
            let f = selected_field(cli)?;
            let l = read_vectors(&f, l_file)?;
            let n = match n {
                SubgroupArg::Triv => S3Subgroup::Trivial,
                SubgroupArg::Cyc3 => S3Subgroup::Cyclic3,
                SubgroupArg::Full => S3Subgroup::Full,
            };
            let cert = construction_certificate(&f, n, &l)?;
            println!("{:#}", cert.to_json(&f));
            if !cert.verified {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::VerifyCover { vectors, builtin } => {
            let f = selected_field(cli)?;
            let vectors = match (vectors, builtin) {
                (Some(path), false) => read_vectors(&f, path)?,
                (None, true) => covering::builtin_cover_vectors(&f, f.xi())?,
                _ => {
                    return Err(Error::Parse(
                        "pass exactly one of --vectors FILE or --builtin".into(),
                    ))
                }
            };
            let check = is_short_covering(&f, &vectors)?;
            if cli.json {
                let cert = covering::CoveringCertificate::ExplicitCover {
                    q: f.q(),
                    vectors: vectors.clone(),
                    uncovered: check.uncovered.members().collect(),
                    verified: check.covers,
                };
                println!("{:#}", cert.to_json(&f));
            } else if check.covers {
                println!(
                    "short covering: {} extended balls cover all {} points of F_{}^3",
                    vectors.len(),
                    (f.q() as usize).pow(3),
                    f.q()
                );
            } else {
                println!(
                    "not a short covering; {} uncovered points:",
                    check.uncovered.len()
                );
                println!("{}", check.uncovered.display(&f));
            }
            if !check.covers {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::LowerBound => {
            let f = selected_field(cli)?;
            let cert = counting_lower_bound(&f)?;
            println!("{:#}", cert.to_json(&f));
            if !cert.verified() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::SearchC {
            max_m,
            no_prune,
            enumerate_all,
        } => {
            if *enumerate_all {
                return Err(Error::LimitExceeded(
                    "enumerating all minimal covers is not implemented".into(),
                ));
            }
            let f = selected_field(cli)?;
            let opts = SearchOptions {
                max_m: *max_m,
                shape_pruning: !no_prune,
                threads: cli.threads.max(1),
            };
            let cert = exhaustive_c(&f, &opts)?;
            if cli.json {
                println!("{:#}", cert.to_json(&f));
            } else {
                println!("c({}) = {}", f.q(), cert.m());
                if let covering::CoveringCertificate::ExhaustiveSearch { cover, levels, .. } = &cert
                {
                    let cover: Vec<String> = cover
                        .iter()
                        .map(|v| format!("({})", v.display(&f)))
                        .collect();
                    println!("cover: {}", cover.join(", "));
                    for l in levels {
                        let what = if l.found {
                            "found a cover"
                        } else if l.shape_constrained {
                            "exhausted (necessary shapes)"
                        } else {
                            "exhausted"
                        };
                        println!("  m = {}: {what}, {} nodes", l.m, l.nodes);
                    }
                }
            }
        }
        Command::Bounds { range, csv } => {
            let (lo, hi) = parse_range(range)?;
            let qs: Vec<u16> = (lo..=hi)
                .filter(|&q| gf::factor_prime_power(q as u64).is_some())
                .collect();
            let rows = bounds_table(&qs)?;
            if *csv {
                println!("q,lower,upper,source");
                for r in &rows {
                    println!("{},{},{},{}", r.q, r.lower, r.upper, r.source);
                }
            } else {
                println!(
                    "{:>3}  {:>7}  {:>7}  {:>9}  source",
                    "q", "lower", "upper", "formula"
                );
                for r in &rows {
                    let formula = match (r.formula_lower, r.formula_upper) {
                        (Some(lo), Some(hi)) => format!("[{lo},{hi}]"),
                        _ => "-".into(),
                    };
                    println!(
                        "{:>3}  {:>7}  {:>7}  {:>9}  {}",
                        r.q, r.lower, r.upper, formula, r.source
                    );
                }
            }
        }
        Command::ReproducePaper { range, out } => {
            let (lo, hi) = parse_range(range)?;
            let report = reproduce_paper(lo, hi, cli.threads.max(1))?;
            if cli.json {
                println!("{:#}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if let Some(prefix) = out {
                report.write_files(prefix)?;
            }
            if !report.all_pass() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
