//! Batch command-line front end: decomposition of a single level, table
//! regeneration over a range of levels, verification suites, and pattern
//! multiplicity sweeps. Results go to stdout (JSON or TSV), diagnostics to
//! stderr. Exit codes: 0 success, 1 error, 2 ambiguous recursion.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use specht_decomp::{
    decompose_class_function, permutation_character_enum, permutation_character_wreath,
    verify_iso, verify_section4, Decomposer, Family, FamilyKind, LevelResult, Method,
    PartitionPattern, PatternLevel, Uniqueness, VerifyReport,
};

const CACHE_ENV: &str = "SPECHT_DECOMP_CACHE";

#[derive(Parser)]
#[command(name = "specht-decomp", version, about = "Exact Specht-module decompositions of matching and cycle-decomposition modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    C,
    D,
}

impl FamilyArg {
    fn kind(self) -> FamilyKind {
        match self {
            FamilyArg::C => FamilyKind::C,
            FamilyArg::D => FamilyKind::D,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Recursion,
    Oracle,
    #[value(name = "closed-form")]
    ClosedForm,
}

impl MethodArg {
    fn method(self) -> Method {
        match self {
            MethodArg::Recursion => Method::Recursion,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::ClosedForm => Method::ClosedForm,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

#[derive(Clone, Copy)]
struct NRange {
    lo: u32,
    hi: u32,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some((a, b)) = s.split_once("..") {
            let lo = a.parse().map_err(|_| format!("bad range start {a:?}"))?;
            let hi = b.parse().map_err(|_| format!("bad range end {b:?}"))?;
            if lo == 0 || hi < lo {
                return Err(format!("empty or invalid range {s:?}"));
            }
            Ok(NRange { lo, hi })
        } else {
            let n: u32 = s.parse().map_err(|_| format!("bad level {s:?}"))?;
            if n == 0 {
                return Err("level must be at least 1".into());
            }
            Ok(NRange { lo: n, hi: n })
        }
    }
}

#[derive(Args)]
struct CommonOpts {
    /// Stabilizer family: C (block matchings) or D (cycle decompositions).
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Block size m >= 2.
    #[arg(long)]
    m: u32,
    /// Cache directory for computed levels (also settable via SPECHT_DECOMP_CACHE).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Disable the level cache entirely.
    #[arg(long)]
    no_cache: bool,
    /// Refuse object enumerations larger than this.
    #[arg(long, default_value_t = specht_decomp::DEFAULT_ENUM_CAP)]
    enum_cap: u64,
    /// Abort the recursion solver after this many solutions.
    #[arg(long, default_value_t = 16)]
    solution_cap: usize,
    /// Worker thread count (0 = automatic).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

impl CommonOpts {
    fn validate(&self) -> Result<(), String> {
        if self.m < 2 {
            return Err("--m must be at least 2".into());
        }
        Ok(())
    }

    fn decomposer(&self) -> Decomposer {
        let cache_dir = if self.no_cache {
            None
        } else {
            self.cache_dir
                .clone()
                .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
        };
        let mut dec = Decomposer::new().with_cache_dir(cache_dir);
        dec.enum_cap = self.enum_cap;
        dec.solution_cap = self.solution_cap;
        dec
    }

    fn init_jobs(&self) {
        if self.jobs > 0 {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(self.jobs)
                .build_global();
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decompose one level into irreducibles.
    Decompose {
        #[command(flatten)]
        common: CommonOpts,
        /// Number of blocks n.
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "recursion")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Regenerate decomposition rows over a range of levels.
    Table {
        #[command(flatten)]
        common: CommonOpts,
        /// Level range, e.g. 2..5 (inclusive) or a single level.
        #[arg(long)]
        n: NRange,
        #[arg(long, value_enum, default_value = "recursion")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "tsv")]
        format: FormatArg,
        /// Cross-validate each row against the character-averaging oracle.
        #[arg(long)]
        cross_check: bool,
    },
    /// Run a verification suite; exit 0 iff every check passes.
    Verify {
        /// One of: section4, iso, oracle-agreement.
        #[arg(long)]
        suite: String,
        /// Highest level for section4 / oracle-agreement.
        #[arg(long, default_value_t = 6)]
        n_max: u32,
        /// Matching count parameter for the iso suite (levels 2..=n).
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long, value_enum, default_value = "c")]
        family: FamilyArg,
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long, default_value_t = specht_decomp::DEFAULT_ENUM_CAP)]
        enum_cap: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Sweep pattern multiplicities over a range of levels.
    Patterns {
        #[command(flatten)]
        common: CommonOpts,
        /// Comma-separated patterns in digit form, e.g. 0,42,51.
        #[arg(long)]
        patterns: String,
        /// Level range, e.g. 5..8.
        #[arg(long)]
        n: NRange,
        /// full (level n) or minus (level n-).
        #[arg(long, default_value = "full")]
        level: String,
        #[arg(long, value_enum, default_value = "tsv")]
        format: FormatArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Decompose {
            common,
            n,
            method,
            format,
        } => {
            common.validate()?;
            common.init_jobs();
            let family = Family::new(common.family.kind(), common.m, n);
            let dec = common.decomposer();
            let result = dec
                .decompose(&family, method.method())
                .map_err(|e| e.to_string())?;
            print_level(&result, format);
            Ok(exit_for(&result))
        }
        Command::Table {
            common,
            n,
            method,
            format,
            cross_check,
        } => {
            common.validate()?;
            common.init_jobs();
            let dec = common.decomposer();
            let mut levels = Vec::new();
            let mut first_mult = None;
            let mut ambiguous = false;
            for level_n in n.lo..=n.hi {
                let family = Family::new(common.family.kind(), common.m, level_n);
                let result = dec
                    .decompose(&family, method.method())
                    .map_err(|e| e.to_string())?;
                if cross_check {
                    let oracle = dec
                        .decompose(&family, Method::Oracle)
                        .map_err(|e| format!("cross-check failed: {e}"))?;
                    if oracle.multiplicities != result.multiplicities {
                        return Err(format!(
                            "cross-check mismatch at n={level_n}: recursion and oracle disagree"
                        ));
                    }
                }
                if first_mult.is_none() && result.multiplicities.max_multiplicity() >= 2 {
                    first_mult = Some(level_n);
                }
                ambiguous |= result.is_ambiguous();
                levels.push(result);
            }
            match format {
                FormatArg::Tsv => {
                    for result in &levels {
                        let row: Vec<String> = result
                            .multiplicities
                            .iter()
                            .map(|(p, k)| if k == 1 { format!("[{p}]") } else { format!("[{p}]x{k}") })
                            .collect();
                        let flag = if Some(result.n()) == first_mult { "*" } else { "" };
                        println!("{}\t{}\t{}", result.n(), flag, row.join(" "));
                    }
                }
                FormatArg::Json => {
                    let doc = serde_json::json!({
                        "levels": levels,
                        "first_level_with_multiplicity": first_mult,
                    });
                    println!("{doc}");
                }
            }
            Ok(ExitCode::from(if ambiguous { 2 } else { 0 }))
        }
        Command::Verify {
            suite,
            n_max,
            n,
            family,
            m,
            enum_cap,
            jobs,
        } => {
            if jobs > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
            }
            let report = match suite.as_str() {
                "section4" => {
                    if n_max < 5 {
                        return Err("--n-max must be at least 5 for section4".into());
                    }
                    verify_section4(&Decomposer::new(), n_max).map_err(|e| e.to_string())?
                }
                "iso" => {
                    let mut report = VerifyReport::default();
                    for k in 2..=n.max(2) {
                        let part = verify_iso(k, 100_000).map_err(|e| e.to_string())?;
                        report.checks.extend(part.checks);
                    }
                    report
                }
                "oracle-agreement" => {
                    let mut report = VerifyReport::default();
                    for level_n in 1..=n_max {
                        let f = Family::new(family.kind(), m, level_n);
                        let from_enum = decompose_class_function(
                            &permutation_character_enum(&f, enum_cap).map_err(|e| e.to_string())?,
                        )
                        .map_err(|e| e.to_string())?;
                        let from_wreath =
                            permutation_character_wreath(&f).map_err(|e| e.to_string())?;
                        report.push(
                            format!("{}_{}, n={level_n}: oracles agree", family.kind().letter(), m),
                            from_enum == from_wreath,
                            format!("{} irreducibles", from_wreath.len()),
                        );
                    }
                    report
                }
                other => return Err(format!("unknown suite {other:?}")),
            };
            let doc = serde_json::json!({
                "suite": suite,
                "all_passed": report.all_passed(),
                "checks": report.checks,
            });
            println!("{doc}");
            Ok(ExitCode::from(if report.all_passed() { 0 } else { 1 }))
        }
        Command::Patterns {
            common,
            patterns,
            n,
            level,
            format,
        } => {
            common.validate()?;
            common.init_jobs();
            let level = match level.as_str() {
                "full" => PatternLevel::Full,
                "minus" => PatternLevel::Minus,
                other => return Err(format!("unknown level {other:?} (use full or minus)")),
            };
            let parsed: Vec<PartitionPattern> = patterns
                .split(',')
                .map(|s| s.trim().parse())
                .collect::<Result<_, _>>()?;
            let dec = common.decomposer();
            let family = Family::new(common.family.kind(), common.m, 1);
            let mut rows = Vec::new();
            for pattern in &parsed {
                for level_n in n.lo..=n.hi {
                    let mult = dec
                        .mult_of_pattern(&family, pattern, level_n, level)
                        .map_err(|e| e.to_string())?;
                    rows.push((pattern.to_string(), level_n, mult));
                }
            }
            match format {
                FormatArg::Tsv => {
                    for (pattern, level_n, mult) in &rows {
                        println!("{pattern}\t{level_n}\t{mult}");
                    }
                }
                FormatArg::Json => {
                    let doc: Vec<_> = rows
                        .iter()
                        .map(|(pattern, level_n, mult)| {
                            serde_json::json!({"pattern": pattern, "n": level_n, "mult": mult})
                        })
                        .collect();
                    println!("{}", serde_json::Value::Array(doc));
                }
            }
            Ok(ExitCode::from(0))
        }
    }
}

fn print_level(result: &LevelResult, format: FormatArg) {
    match format {
        FormatArg::Json => {
            println!("{}", serde_json::to_string(result).expect("serializable"));
        }
        FormatArg::Tsv => {
            for (p, k) in result.multiplicities.iter() {
                println!("{p}\t{k}");
            }
        }
    }
}

fn exit_for(result: &LevelResult) -> ExitCode {
    match result.uniqueness {
        Uniqueness::Ambiguous(_) => ExitCode::from(2),
        _ => ExitCode::from(0),
    }
}
