//! The `ybmagma` command-line tool.
//!
//! Exit codes: 0 success or law holds, 1 law fails (with a `WITNESS` line),
//! 2 usage or parse error, 3 guard exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::builders::{build_solution, SolutionSpec};
use crate::census::{
    census_simple_bls, enumerate_structures, function_conjugacy_census, CensusQuery, CensusRow,
    Constraint, Mode, Parallelism, Representative,
};
use crate::error::{Error, Result};
use crate::families::{
    analyze_family, family_iso, odometer_canonicalize, FunctionFamily, OdometerTriple,
};
use crate::finite::{BiMagma, CayleyTable, FiniteFunction, Permutation, RMap};
use crate::ideals::{decomposition_report, ideals, is_simple_as, IdealKind, Target};
use crate::io::{parse_structure, to_json_value, to_plain, Structure};
use crate::laws::{
    check_bimagma_law, check_magma_law, check_rmap_law, BiMagmaLaw, MagmaLaw, RMapLaw,
};
use crate::morphisms::{are_isomorphic, find_homomorphisms, homomorphisms};
use crate::plonka::{
    bi_plonka_partition, bijectivize, plonka_partition, structured_iso, structured_iso_bimagma,
    Extremity,
};
use crate::verdict::{Verdict, Witness};
use crate::Guards;

#[derive(Parser, Debug)]
#[command(
    name = "ybmagma",
    version,
    about = "Finite Yang-Baxter solutions, Płonka magmas and bi-magmas"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
}

#[derive(Args, Debug)]
pub struct Input {
    /// Structure file, or `-` for standard input.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ExtremityArg {
    Coarsest,
    Finest,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Variant {
    Identity,
    Flip,
    Lyubashenko,
    Ess,
    Odometer,
    SkewBrace,
    FromRightPlonkaOpposite,
    BlsFromPartition,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check one law on a structure.
    Check {
        #[command(flatten)]
        io: Input,
        /// Law name; `rmap:` or `bimagma:` prefixes select the reading of a bi-magma.
        #[arg(long)]
        law: String,
    },
    /// Płonka partition of a right Płonka magma or a Płonka bi-magma.
    Decompose {
        #[command(flatten)]
        io: Input,
        #[arg(long, value_enum, default_value_t = ExtremityArg::Coarsest)]
        extremity: ExtremityArg,
    },
    /// Decide isomorphism of two structures of the same kind.
    Iso {
        #[command(flatten)]
        io: Input,
        #[arg(long)]
        other: PathBuf,
    },
    /// List every ideal.
    Ideals {
        #[command(flatten)]
        io: Input,
        #[arg(long)]
        kind: Option<String>,
    },
    /// Decide simplicity.
    Simple {
        #[command(flatten)]
        io: Input,
        #[arg(long)]
        kind: Option<String>,
    },
    /// Finest valid partition, bi-connectedness and decomposability of an R-map.
    Report {
        #[command(flatten)]
        io: Input,
    },
    /// Odometer triple of a commuting incompressible pair.
    ClassifyOdometer {
        #[command(flatten)]
        io: Input,
    },
    /// Build a named solution.
    Build {
        #[arg(long, value_enum)]
        variant: Option<Variant>,
        /// A solution spec as JSON, instead of --variant.
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        /// Images as a comma-separated list.
        #[arg(long)]
        f: Option<String>,
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        h1: Option<usize>,
        #[arg(long)]
        h2: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// Brace, magma or partition input for the variants that need one.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Count structures up to isomorphism; prints tab-separated rows.
    Census {
        #[arg(long)]
        n: usize,
        /// Run every size from --n to --n-max.
        #[arg(long)]
        n_max: Option<usize>,
        /// Repeatable; conjunction of laws and predicates.
        #[arg(long)]
        constraint: Vec<String>,
        /// Census of simple BLS solutions by both routes instead of a query.
        #[arg(long, conflicts_with_all = ["constraint", "conjugacy"])]
        simple_bls: bool,
        /// Conjugacy classes of self-maps instead of a query.
        #[arg(long, conflicts_with = "constraint")]
        conjugacy: bool,
        /// With --conjugacy: connected maps only.
        #[arg(long, requires = "conjugacy")]
        connected: bool,
        #[arg(long)]
        representatives: bool,
        /// Worker threads; 0 picks the machine default. Sequential when absent.
        #[arg(long)]
        workers: Option<usize>,
        /// Disable the structure-theorem shortcuts.
        #[arg(long)]
        no_lemmas: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Reflection of a self-map into bijective maps.
    Bijectivize {
        #[command(flatten)]
        io: Input,
    },
    /// Every homomorphism from one structure to another.
    Morphisms {
        #[command(flatten)]
        io: Input,
        #[arg(long)]
        other: PathBuf,
    },
}

/// Output of one invocation.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

fn read(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| Error::invalid(format!("cannot read standard input: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &PathBuf) -> Result<Structure> {
    parse_structure(&read(path)?)
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn render(format: Format, plain: String, json: Value) -> String {
    match format {
        Format::Plain => plain,
        Format::Json => serde_json::to_string_pretty(&json).expect("JSON values serialize") + "\n",
    }
}

/// Renders a verdict; failures exit with code 1 and a WITNESS line.
fn verdict_outcome(format: Format, what: &str, v: &Verdict) -> Outcome {
    let (plain, code) = match v.witness() {
        None => (format!("{what}: holds\n"), 0),
        Some(w) => (format!("{what}: fails\n{w}\n{}\n", w.machine_line()), 1),
    };
    let json = json!({ "law": what, "holds": v.holds(), "witness": v.witness() });
    Outcome {
        code,
        stdout: render(format, plain, json),
        stderr: String::new(),
    }
}

fn split_prefix(law: &str) -> (Option<&str>, &str) {
    match law.split_once(':') {
        Some((p, l)) => (Some(p), l),
        None => (None, law),
    }
}

fn check(s: &Structure, law: &str) -> Result<Verdict> {
    let (prefix, name) = split_prefix(law);
    let as_rmap = |r: &RMap| -> Result<Verdict> {
        if prefix != Some("bimagma") {
            if let Ok(l) = name.parse::<RMapLaw>() {
                return Ok(check_rmap_law(r, l));
            }
        }
        let l: BiMagmaLaw = name.parse()?;
        Ok(check_bimagma_law(&r.to_bimagma(), l))
    };
    match s {
        Structure::Magma(t) => Ok(check_magma_law(t, name.parse::<MagmaLaw>()?)),
        Structure::BiMagma(b) => as_rmap(&RMap::from_bimagma(b)),
        Structure::RMap(r) => as_rmap(r),
        Structure::Function(f) => family_check(&FunctionFamily::new(vec![f.clone()])?, name),
        Structure::Family(fam) => family_check(fam, name),
    }
}

fn family_check(fam: &FunctionFamily, name: &str) -> Result<Verdict> {
    let a = analyze_family(fam);
    let flag = |ok: bool, what: &str| -> Verdict {
        if ok {
            Verdict::pass()
        } else {
            Verdict::fail(Witness::Missing {
                what: what.to_string(),
            })
        }
    };
    match name {
        "commuting" => Ok(flag(a.commuting, "pairwise commutation")),
        "bijective" => Ok(flag(a.bijective_members, "bijectivity of every member")),
        "connected" => Ok(flag(a.connected, "connectedness")),
        "incompressible" => Ok(match fam.compressing_subset() {
            None => Verdict::pass(),
            Some(elements) => Verdict::fail(Witness::Subset { condition: "closed subset".into(), elements }),
        }),
        other => Err(Error::invalid(format!(
            "unknown family property {other:?}; use commuting, bijective, connected or incompressible"
        ))),
    }
}

fn maps_plain(out: &mut String, name: &str, maps: &[Vec<FiniteFunction>]) {
    for (i, row) in maps.iter().enumerate() {
        for (j, f) in row.iter().enumerate() {
            let _ = writeln!(out, "{name}[{i}][{j}] = {}", join(f.images()));
        }
    }
}

fn blocks_plain(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| format!("{{{}}}", join(b)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn decompose(s: &Structure, e: Extremity, format: Format) -> Result<String> {
    match s {
        Structure::Magma(t) => {
            let p = plonka_partition(t, e)?;
            let mut plain = format!("blocks: {}\n", blocks_plain(p.blocks.blocks()));
            maps_plain(&mut plain, "f", &p.maps);
            Ok(render(
                format,
                plain,
                serde_json::to_value(&p).expect("serializable"),
            ))
        }
        Structure::BiMagma(_) | Structure::RMap(_) => {
            let b = match s {
                Structure::BiMagma(b) => b.clone(),
                Structure::RMap(r) => r.to_bimagma(),
                _ => unreachable!(),
            };
            let p = bi_plonka_partition(&b, e)?;
            let mut plain = format!("blocks: {}\n", blocks_plain(p.blocks.blocks()));
            maps_plain(&mut plain, "f", &p.f);
            maps_plain(&mut plain, "g", &p.g);
            Ok(render(
                format,
                plain,
                serde_json::to_value(&p).expect("serializable"),
            ))
        }
        _ => Err(Error::invalid("decompose needs a magma, bi-magma or R-map")),
    }
}

fn iso(a: &Structure, b: &Structure) -> Result<Option<Permutation>> {
    let right_plonka = |t: &CayleyTable| check_magma_law(t, MagmaLaw::RightPlonka).holds();
    let plonka_bi = |t: &BiMagma| check_bimagma_law(t, BiMagmaLaw::PlonkaBimagma).holds();
    match (a, b) {
        (Structure::Magma(x), Structure::Magma(y)) if right_plonka(x) && right_plonka(y) => {
            structured_iso(x, y)
        }
        (Structure::Magma(x), Structure::Magma(y)) => are_isomorphic(x, y),
        (Structure::BiMagma(x), Structure::BiMagma(y)) if plonka_bi(x) && plonka_bi(y) => {
            structured_iso_bimagma(x, y)
        }
        (Structure::BiMagma(x), Structure::BiMagma(y)) => are_isomorphic(x, y),
        (Structure::RMap(x), Structure::RMap(y)) => are_isomorphic(x, y),
        (Structure::Function(x), Structure::Function(y)) => Ok(family_iso(
            &FunctionFamily::new(vec![x.clone()])?,
            &FunctionFamily::new(vec![y.clone()])?,
        )),
        (Structure::Family(x), Structure::Family(y)) => Ok(family_iso(x, y)),
        _ => Err(Error::invalid(format!(
            "cannot compare a {} with a {}",
            a.kind(),
            b.kind()
        ))),
    }
}

fn ideal_target<'a>(s: &'a Structure, kind: Option<&str>) -> Result<(Target<'a>, IdealKind)> {
    let kind: Option<IdealKind> = kind.map(str::parse).transpose()?;
    Ok(match s {
        Structure::Magma(t) => (Target::Magma(t), kind.unwrap_or(IdealKind::MagmaTwoSided)),
        Structure::BiMagma(b) => (
            Target::BiMagma(b),
            kind.unwrap_or(IdealKind::BimagmaRightLeft),
        ),
        Structure::RMap(r) => (Target::RMap(r), kind.unwrap_or(IdealKind::RmapIdeal)),
        _ => return Err(Error::invalid("ideals need a magma, bi-magma or R-map")),
    })
}

fn spec_from_flags(cmd: &Command) -> Result<SolutionSpec> {
    let Command::Build {
        variant,
        spec,
        n,
        f,
        g,
        p,
        h1,
        h2,
        m,
        d,
        input,
        ..
    } = cmd
    else {
        unreachable!("only called for build")
    };
    if let Some(path) = spec {
        return serde_json::from_str(&read(path)?).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        });
    }
    let need = |v: &Option<usize>, flag: &str| {
        v.ok_or_else(|| Error::invalid(format!("--{flag} is required")))
    };
    let function = |v: &Option<String>, flag: &str| -> Result<FiniteFunction> {
        let text = v
            .as_ref()
            .ok_or_else(|| Error::invalid(format!("--{flag} is required")))?;
        let images = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::invalid(format!("--{flag}: bad entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteFunction::new(images)
    };
    let structure = || -> Result<Structure> {
        load(
            input
                .as_ref()
                .ok_or_else(|| Error::invalid("--input is required for this variant"))?,
        )
    };
    let variant =
        variant.ok_or_else(|| Error::invalid("one of --variant or --spec is required"))?;
    Ok(match variant {
        Variant::Identity => SolutionSpec::Identity { n: need(n, "n")? },
        Variant::Flip => SolutionSpec::Flip { n: need(n, "n")? },
        Variant::Lyubashenko => SolutionSpec::Lyubashenko {
            f: function(f, "f")?,
            g: function(g, "g")?,
        },
        Variant::Ess => SolutionSpec::Ess {
            p: need(p, "p")?,
            h1: need(h1, "h1")?,
            h2: need(h2, "h2")?,
        },
        Variant::Odometer => SolutionSpec::OdometerSolution {
            triple: OdometerTriple::new(need(m, "m")?, need(n, "n")?, need(d, "d")?)?,
        },
        Variant::SkewBrace => match structure()? {
            Structure::BiMagma(brace) => SolutionSpec::SkewBraceSolution { brace },
            _ => return Err(Error::invalid("skew-brace needs a bi-magma input")),
        },
        Variant::FromRightPlonkaOpposite => match structure()? {
            Structure::Magma(magma) => SolutionSpec::FromRightPlonkaOpposite { magma },
            _ => {
                return Err(Error::invalid(
                    "from-right-plonka-opposite needs a magma input",
                ))
            }
        },
        Variant::BlsFromPartition => {
            let path = input
                .as_ref()
                .ok_or_else(|| Error::invalid("--input is required for this variant"))?;
            let partition = serde_json::from_str(&read(path)?).map_err(|e| Error::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
            SolutionSpec::BlsFromPartition { partition }
        }
    })
}

fn census(cmd: &Command) -> Result<Outcome> {
    let Command::Census {
        n,
        n_max,
        constraint,
        simple_bls,
        conjugacy,
        connected,
        representatives,
        workers,
        no_lemmas,
        format,
    } = cmd
    else {
        unreachable!("only called for census")
    };
    let sizes = *n..=n_max.unwrap_or(*n);
    let mut rows: Vec<CensusRow> = Vec::new();
    let mut reps: Vec<(usize, Vec<Representative>)> = Vec::new();
    let mut code = 0;
    for size in sizes {
        let start = std::time::Instant::now();
        if *simple_bls {
            let c = census_simple_bls(size)?;
            let agree = c.routes_agree != Some(false) && c.failed_triples.is_empty();
            if !agree || c.route_a as u64 != c.expected() {
                code = 1;
            }
            let elapsed_ms = start.elapsed().as_millis();
            let triples = OdometerTriple::all_of_size(size).len() as u64;
            rows.push(CensusRow {
                n: size,
                label: "simple_bls:route_a".into(),
                class_count: c.route_a as u64,
                raw_count: triples,
                elapsed_ms,
            });
            if let Some(b) = c.route_b {
                let label = if agree {
                    "simple_bls:route_b"
                } else {
                    "simple_bls:route_b [routes disagree]"
                };
                rows.push(CensusRow {
                    n: size,
                    label: label.into(),
                    class_count: b as u64,
                    raw_count: b as u64,
                    elapsed_ms,
                });
            }
        } else if *conjugacy {
            let c = function_conjugacy_census(size, *connected)?;
            let label = if *connected {
                "conjugacy:connected"
            } else {
                "conjugacy:all"
            };
            let elapsed_ms = start.elapsed().as_millis();
            if !c.agree() {
                code = 1;
            }
            let raw = if *connected {
                0
            } else {
                (size as u64).pow(size as u32)
            };
            for (method, count) in [("orbits", c.orbit_count), ("graphs", c.graph_count)] {
                rows.push(CensusRow {
                    n: size,
                    label: format!("{label}:{method}"),
                    class_count: count as u64,
                    raw_count: if *connected { count as u64 } else { raw },
                    elapsed_ms,
                });
            }
        } else {
            let constraints = constraint
                .iter()
                .map(|c| c.parse::<Constraint>())
                .collect::<Result<Vec<_>>>()?;
            let mut q = CensusQuery::new(size, constraints)?;
            if *representatives {
                q = q.with_mode(Mode::Representatives);
            }
            if let Some(w) = workers {
                q = q.with_parallelism(Parallelism::Workers(*w));
            }
            if *no_lemmas {
                q = q.without_lemmas();
            }
            let r = enumerate_structures(&q)?;
            rows.push(r.row);
            reps.push((size, r.representatives));
        }
    }
    let mut plain = format!("{}\n", CensusRow::TSV_HEADER);
    for r in &rows {
        plain.push_str(&r.to_tsv());
        plain.push('\n');
    }
    if *representatives {
        for (_, list) in &reps {
            for rep in list {
                plain.push('\n');
                plain.push_str(&to_plain(&representative_structure(rep)));
            }
        }
    }
    let json = json!({
        "rows": rows,
        "representatives": reps.iter().flat_map(|(_, l)| l.iter().map(|r| to_json_value(&representative_structure(r)))).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        code,
        stdout: render(*format, plain, json),
        stderr: String::new(),
    })
}

fn representative_structure(r: &Representative) -> Structure {
    match r {
        Representative::Magma { table } => Structure::Magma(table.clone()),
        Representative::Bimagma { bimagma } => Structure::BiMagma(bimagma.clone()),
    }
}

fn morphisms(a: &Structure, b: &Structure) -> Result<Vec<Vec<usize>>> {
    let guards = Guards::default();
    match (a, b) {
        (Structure::Magma(x), Structure::Magma(y)) => homomorphisms(x, y, &guards),
        (Structure::BiMagma(x), Structure::BiMagma(y)) => homomorphisms(x, y, &guards),
        (Structure::RMap(x), Structure::RMap(y)) => Ok(find_homomorphisms(x, y)?
            .into_iter()
            .map(|m| m.images)
            .collect()),
        _ => Err(Error::invalid(format!(
            "cannot map a {} into a {}",
            a.kind(),
            b.kind()
        ))),
    }
}

fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Check { io, law } => {
            let s = load(&io.input)?;
            Ok(verdict_outcome(io.format, law, &check(&s, law)?))
        }
        Command::Decompose { io, extremity } => {
            let e = match extremity {
                ExtremityArg::Coarsest => Extremity::Coarsest,
                ExtremityArg::Finest => Extremity::Finest,
            };
            Ok(Outcome::ok(decompose(&load(&io.input)?, e, io.format)?))
        }
        Command::Iso { io, other } => {
            let (a, b) = (load(&io.input)?, load(other)?);
            let found = iso(&a, &b)?;
            let plain = match &found {
                Some(p) => format!("isomorphic\n{}\n", join(p.images())),
                None => "not isomorphic\n".to_string(),
            };
            let json = json!({ "isomorphic": found.is_some(), "map": found.as_ref().map(|p| p.images().to_vec()) });
            Ok(Outcome {
                code: if found.is_some() { 0 } else { 1 },
                stdout: render(io.format, plain, json),
                stderr: String::new(),
            })
        }
        Command::Ideals { io, kind } => {
            let s = load(&io.input)?;
            let (target, kind) = ideal_target(&s, kind.as_deref())?;
            let list = ideals(target, kind)?;
            let plain: String = list.iter().map(|i| format!("{}\n", join(i))).collect();
            Ok(Outcome::ok(render(
                io.format,
                plain,
                json!({ "kind": kind.name(), "ideals": list }),
            )))
        }
        Command::Simple { io, kind } => {
            let s = load(&io.input)?;
            let (target, kind) = ideal_target(&s, kind.as_deref())?;
            let v = is_simple_as(target, kind)?;
            Ok(verdict_outcome(
                io.format,
                &format!("simple ({})", kind.name()),
                &v,
            ))
        }
        Command::Report { io } => {
            let r = match load(&io.input)? {
                Structure::RMap(r) => r,
                Structure::BiMagma(b) => RMap::from_bimagma(&b),
                other => {
                    return Err(Error::invalid(format!(
                        "report needs an R-map or bi-magma, not a {}",
                        other.kind()
                    )))
                }
            };
            let rep = decomposition_report(&r);
            let ess = match rep.ess_indecomposable {
                Some(b) => b.to_string(),
                None => "unknown (guard exceeded)".to_string(),
            };
            let plain = format!(
                "finest_valid_partition: {}\nbiconnected: {}\ness_indecomposable: {ess}\n",
                blocks_plain(rep.finest_valid_partition.blocks()),
                rep.biconnected
            );
            Ok(Outcome::ok(render(
                io.format,
                plain,
                serde_json::to_value(&rep).expect("serializable"),
            )))
        }
        Command::ClassifyOdometer { io } => {
            let fam = match load(&io.input)? {
                Structure::Family(f) if f.len() == 2 => f,
                _ => {
                    return Err(Error::invalid(
                        "classify-odometer needs a family with two members",
                    ))
                }
            };
            let m = fam.members();
            let t = odometer_canonicalize(&m[0], &m[1])?;
            let plain = format!("{} {} {}\n", t.m, t.n, t.d);
            Ok(Outcome::ok(render(
                io.format,
                plain,
                json!({ "m": t.m, "n": t.n, "d": t.d }),
            )))
        }
        Command::Build { format, .. } => {
            let r = build_solution(&spec_from_flags(cmd)?)?;
            let s = Structure::RMap(r);
            Ok(Outcome::ok(render(
                *format,
                to_plain(&s),
                to_json_value(&s),
            )))
        }
        Command::Census { .. } => census(cmd),
        Command::Bijectivize { io } => {
            let f = match load(&io.input)? {
                Structure::Function(f) => f,
                other => {
                    return Err(Error::invalid(format!(
                        "bijectivize needs a function, not a {}",
                        other.kind()
                    )))
                }
            };
            let b = bijectivize(&f);
            let plain = format!(
                "{}unit {}\n",
                to_plain(&Structure::Function(b.target.clone())),
                join(&b.unit.images)
            );
            Ok(Outcome::ok(render(
                io.format,
                plain,
                serde_json::to_value(&b).expect("serializable"),
            )))
        }
        Command::Morphisms { io, other } => {
            let list = morphisms(&load(&io.input)?, &load(other)?)?;
            let mut plain = format!("count {}\n", list.len());
            for m in &list {
                plain.push_str(&join(m));
                plain.push('\n');
            }
            Ok(Outcome::ok(render(
                io.format,
                plain,
                json!({ "count": list.len(), "morphisms": list }),
            )))
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::LawFails { .. } => 1,
        Error::Invalid(_) | Error::Parse { .. } | Error::Unsupported(_) => 2,
        Error::GuardExceeded { .. } => 3,
    }
}

/// Runs a parsed command, turning errors into exit codes and messages.
pub fn run(cli: &Cli) -> Outcome {
    match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            let mut stdout = String::new();
            if let Error::LawFails { witness, .. } = &e {
                stdout = format!("{}\n", witness.machine_line());
            }
            Outcome {
                code: exit_code(&e),
                stdout,
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

/// Parses arguments and runs; usage errors exit with code 2.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}
