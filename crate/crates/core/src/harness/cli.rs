//! The `ptd` command line.
//!
//! Exit status 0 on success, 1 when a verification fails, 2 on usage or format errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use super::certify::{certify_all, DEFAULT_MAX_POINTS};
use super::search::search_small;
use crate::constructions::{catalog, gammal1_is_transitive, gammal1_orbit_is_transitive, zsigmondy_ppd, GammaL1Subgroup, MAX_FIELD_ORDER};
use crate::data::DataSource;
use crate::design::{read_design, write_design, DesignFile};
use crate::error::{Error, Result};
use crate::permgroup::{action_report, parse_group, read_group, write_group, GeneratedGroup};
use crate::verify::{certificate, classify_block_action, verify, Mode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ptd", version, about = "Construct and certify pairwise transitive 2-designs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a catalog row and write its design and group files.
    Construct {
        /// Row tag such as `Table1:line2(4,2)`.
        tag: Option<String>,
        /// Output prefix; writes PREFIX.dsg and PREFIX.grp.
        #[arg(long)]
        out: Option<PathBuf>,
        /// List the available tags.
        #[arg(long)]
        list: bool,
    },
    /// Order, rank and primitivity of a group.
    Group {
        #[command(flatten)]
        source: GroupSource,
        /// Write the group back out as a .grp file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parameters of a design file.
    Params {
        #[arg(long)]
        design: PathBuf,
    },
    /// Pairwise transitivity certificate for a design and group.
    Verify {
        #[arg(long)]
        design: PathBuf,
        #[arg(long)]
        group: PathBuf,
        #[arg(long, default_value = "both")]
        mode: Mode,
        /// Translation subgroup for the nicely-affine test.
        #[arg(long)]
        translations: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify every catalog row.
    CertifyAll {
        #[arg(long, default_value_t = DEFAULT_MAX_POINTS)]
        max_points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Transitivity of <τ^i, τ^j σ^t> on the non-zero elements of GF(p^d).
    Gammal1 {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        i: u64,
        #[arg(long)]
        j: u64,
        #[arg(long)]
        t: u32,
        /// Also compute the orbit of 1.
        #[arg(long)]
        check: bool,
    },
    /// Primitive prime divisors of p^d - 1.
    Zsigmondy {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u32,
    },
    /// Orbit designs of a group of degree at most 20.
    Search {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, default_value_t = 3)]
        k_min: usize,
        /// Defaults to half the degree.
        #[arg(long)]
        k_max: Option<usize>,
        /// Also list orbit 2-designs that are not pairwise transitive.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GroupSource {
    /// A .grp file.
    #[arg(long)]
    group: Option<PathBuf>,
    /// A bundled group file such as `m11_12.grp`.
    #[arg(long)]
    bundled: Option<String>,
}

impl GroupSource {
    fn load(&self, data: &DataSource) -> Result<GeneratedGroup> {
        match (&self.group, &self.bundled) {
            (Some(path), _) => Ok(read_group(path)?.group),
            (None, Some(name)) => Ok(parse_group(&data.read(name)?, name)?.group),
            (None, None) => Err(Error::InvalidArgument("no group given".into())),
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DesignNotPreserved { .. } | Error::MethodsDisagree(_) | Error::ConstructionCondition { .. } => EXIT_FAILED,
        _ => EXIT_USAGE,
    }
}

fn load_design(path: &Path) -> Result<DesignFile> {
    read_design(path)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)?;
    Ok(())
}

fn with_extension(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn execute(command: Command, data: &DataSource, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Construct { tag, out: prefix, list } => {
            let rows = catalog();
            if list {
                for row in &rows {
                    writeln!(out, "{}\t{}", row.tag, row.expected)?;
                }
                return Ok(EXIT_OK);
            }
            let tag = tag.ok_or_else(|| Error::InvalidArgument("a row tag or --list is required".into()))?;
            let row = rows
                .iter()
                .find(|r| r.tag == tag)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown tag `{tag}`; try --list")))?;
            let built = row.build(data)?;
            writeln!(out, "tag: {}", row.tag)?;
            writeln!(out, "design: {}", built.design.label())?;
            writeln!(out, "parameters: {}", built.design.parameters())?;
            match &built.group {
                Some(g) => writeln!(out, "group: {} of order {}", g.label(), g.order())?,
                None => writeln!(out, "group: unavailable")?,
            }
            if let Some(prefix) = prefix {
                let dsg = with_extension(&prefix, "dsg");
                write_file(&dsg, &write_design(&built.design))?;
                writeln!(out, "wrote {}", dsg.display())?;
                if let Some(g) = &built.group {
                    let grp = with_extension(&prefix, "grp");
                    write_file(&grp, &write_group(g))?;
                    writeln!(out, "wrote {}", grp.display())?;
                }
                if let Some(n) = &built.translations {
                    let grp = with_extension(&prefix, "translations.grp");
                    write_file(&grp, &write_group(n))?;
                    writeln!(out, "wrote {}", grp.display())?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Group { source, out: path } => {
            let group = source.load(data)?;
            let report = action_report(&group)?;
            let sizes: Vec<String> = report.suborbit_sizes.iter().map(usize::to_string).collect();
            writeln!(out, "label: {}", group.label())?;
            writeln!(out, "degree: {}", group.degree())?;
            writeln!(out, "order: {}", group.order())?;
            writeln!(out, "transitive: {}", report.transitive)?;
            writeln!(out, "rank: {}", report.rank)?;
            writeln!(out, "suborbits: {}", sizes.join(","))?;
            writeln!(out, "two_transitive: {}", report.two_transitive)?;
            writeln!(out, "primitive: {}", report.primitive)?;
            if let Some(path) = path {
                write_file(&path, &write_group(&group))?;
            }
            Ok(EXIT_OK)
        }
        Command::Params { design } => {
            let file = load_design(&design)?;
            let params = file.design.parameters();
            writeln!(out, "design: {}", file.design.label())?;
            if !params.is_two_design() {
                writeln!(out, "v: {}", params.v)?;
                writeln!(out, "b: {}", params.b)?;
                writeln!(out, "not a t-design (t≥2)")?;
                return Ok(EXIT_OK);
            }
            let mut cert = crate::verify::Certificate::new();
            cert.parameters(&params);
            write!(out, "{cert}")?;
            writeln!(out, "identities: {}", params.identities_hold())?;
            writeln!(out, "fisher: {}", params.fisher_holds())?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            design,
            group,
            mode,
            translations,
            out: path,
        } => {
            let start = Instant::now();
            let design = load_design(&design)?.design;
            let group = read_group(&group)?.group;
            let translations = translations.map(|p| read_group(&p)).transpose()?.map(|f| f.group);
            let report = verify(&design, &group, mode)?;
            let block = classify_block_action(&design, &group, translations.as_ref())?;
            let cert = certificate(&design, &group, &report, Some(&block), start.elapsed());
            write!(out, "{cert}")?;
            if let Some(path) = path {
                write_file(&path, &cert.to_string())?;
            }
            Ok(if report.verdict { EXIT_OK } else { EXIT_FAILED })
        }
        Command::CertifyAll { max_points, out: path } => {
            let bundle = certify_all(max_points, data);
            write!(out, "{bundle}")?;
            for row in bundle.failures() {
                writeln!(out, "failed: {} ({})", row.tag, row.status)?;
            }
            if let Some(path) = path {
                write_file(&path, &bundle.to_string())?;
            }
            Ok(if bundle.passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Gammal1 { p, d, i, j, t, check } => {
            let s = GammaL1Subgroup::new(p, d, i, j, t)?;
            let transitive = gammal1_is_transitive(&s);
            writeln!(out, "subgroup: {s}")?;
            writeln!(out, "order: {}", s.order())?;
            writeln!(out, "transitive: {}", if transitive { "yes" } else { "no" })?;
            if check {
                if p.checked_pow(d).is_some_and(|q| q <= MAX_FIELD_ORDER) {
                    let orbit = gammal1_orbit_is_transitive(&s)?;
                    writeln!(out, "orbit check: {}", if orbit { "yes" } else { "no" })?;
                    if orbit != transitive {
                        return Ok(EXIT_FAILED);
                    }
                } else {
                    writeln!(out, "orbit check: skipped, field larger than {MAX_FIELD_ORDER}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Zsigmondy { p, d } => {
            let primes: Vec<String> = zsigmondy_ppd(p, d)?.iter().map(u64::to_string).collect();
            writeln!(out, "primitive prime divisors of {p}^{d}-1: {{{}}}", primes.join(", "))?;
            Ok(EXIT_OK)
        }
        Command::Search { source, k_min, k_max, all } => {
            let group = source.load(data)?;
            let k_max = k_max.unwrap_or(group.degree() / 2);
            let results = search_small(&group, k_min..=k_max)?;
            let mut hits = 0;
            for r in &results {
                if r.verdict {
                    hits += 1;
                }
                if r.verdict || all {
                    writeln!(out, "{r}")?;
                }
            }
            writeln!(out, "hits: {hits}")?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (program name first) and runs the subcommand, writing reports to `out`
/// and diagnostics to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let data = DataSource::from_env();
    match execute(cli.command, &data, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// [`run_with`] on the process arguments and standard streams.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(std::iter::once("ptd").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gammal1_full_group() {
        let (code, out, _) = call(&["gammal1", "--p", "2", "--d", "4", "--i", "1", "--j", "0", "--t", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("transitive: yes"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["gammal1", "--p", "4", "--d", "1", "--i", "1", "--j", "0", "--t", "1"]).0, 2);
        assert_eq!(call(&["construct", "no-such-row"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn zsigmondy_lists_primes() {
        let (code, out, _) = call(&["zsigmondy", "--p", "2", "--d", "4"]);
        assert_eq!(code, 0);
        assert!(out.contains("{5}"));
    }
}
