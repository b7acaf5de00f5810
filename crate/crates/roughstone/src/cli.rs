//! Command-line front end: `table`, `check`, `iso` and `selftest`.
//!
//! Spaces come from a line-oriented file format (see
//! [`crate::space::parse_space`]):
//!
//! ```text
//! universe: w x y z
//! block: w x
//! block: y z
//! ```
//!
//! `table` prints one row per subset of the universe (or per distinct
//! rough pair with `--distinct`) with the columns X, X̲, X̄, X̄ᶜ, the
//! ternary partition, and the chain vectors over U and over the classes.
//! `check` audits the rough set algebra law by law; `iso` verifies the
//! class collapse, the coordinate map α and the embedding into the chain
//! power over U; `selftest` runs the crate's verification battery.
//!
//! Exit codes: 0 success (and, for `check`, algebra has a core), 1 usage
//! or parse error, 2 a checked property failed.

use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::morphisms::{alpha_map, class_collapse, embed_prsa_into_c3u, phi};
use crate::selftest;
use crate::set::IndexSet;
use crate::space::{parse_space, ApproximationSpace};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PROPERTY: i32 = 2;

/// Full-table mode enumerates 2^|U| subsets.
pub const FULL_TABLE_UNIVERSE_LIMIT: usize = 20;
/// Distinct mode enumerates the rough carrier directly.
pub const DISTINCT_TABLE_LIMIT: usize = 1_000_000;

#[derive(Parser)]
#[command(
    name = "roughstone",
    version,
    about = "Rough set algebras over finite approximation spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the rough table of a space file
    Table {
        file: PathBuf,
        /// One row per distinct rough pair instead of per subset
        #[arg(long)]
        distinct: bool,
        /// Tab-separated output instead of aligned columns
        #[arg(long)]
        tsv: bool,
    },
    /// Audit the rough set algebra of a space file
    Check { file: PathBuf },
    /// Verify the isomorphism and embedding chain of a space file
    Iso { file: PathBuf },
    /// Run the built-in verification battery
    Selftest,
}

/// Entry point used by the binary.
pub fn run_from_env() -> i32 {
    run(std::env::args_os())
}

/// Parses arguments and dispatches; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return code;
        }
    };
    match cli.command {
        Command::Table {
            file,
            distinct,
            tsv,
        } => cmd_table(&file, distinct, tsv),
        Command::Check { file } => cmd_check(&file),
        Command::Iso { file } => cmd_iso(&file),
        Command::Selftest => cmd_selftest(),
    }
}

fn load_space(path: &Path) -> Result<ApproximationSpace, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_space(&text)
        .map_err(|e| format!("{}:{}:{}: {}", path.display(), e.line, e.column, e.kind))
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("universe of {got} elements exceeds the full-table limit of {limit}; try --distinct")]
    UniverseTooLarge { got: usize, limit: usize },
    #[error("{got} distinct rough pairs exceed the table limit of {limit}")]
    TooManyPairs { got: usize, limit: usize },
}

/// A rendered rough table: fixed seven-column layout, deterministic row
/// order.
pub struct RoughTable {
    rows: Vec<[String; 7]>,
}

impl RoughTable {
    pub const HEADER: [&'static str; 7] =
        ["X", "lower", "upper", "upper^c", "TP_U", "C3^U", "C3^E"];

    /// One row per subset X ⊆ U, in binary-counter order (element i is
    /// bit i, so the subsets read ∅, {u₀}, {u₁}, {u₀,u₁}, ..).
    pub fn full(space: &ApproximationSpace) -> Result<Self, TableError> {
        let n = space.universe_len();
        if n > FULL_TABLE_UNIVERSE_LIMIT {
            return Err(TableError::UniverseTooLarge {
                got: n,
                limit: FULL_TABLE_UNIVERSE_LIMIT,
            });
        }
        let rows = (0..1u64 << n)
            .map(|mask| Self::row(space, &IndexSet::from_mask(n, mask)))
            .collect();
        Ok(RoughTable { rows })
    }

    /// One row per distinct rough pair, in canonical carrier order. The
    /// X column shows the canonical representative: the lower
    /// approximation plus the first element of every boundary block.
    pub fn distinct(space: &ApproximationSpace) -> Result<Self, TableError> {
        let count = space.carrier_size();
        if count > DISTINCT_TABLE_LIMIT {
            return Err(TableError::TooManyPairs {
                got: count,
                limit: DISTINCT_TABLE_LIMIT,
            });
        }
        let rows = space
            .enumerate_carrier()
            .iter()
            .map(|pair| {
                let mut x = pair.lower().clone();
                for block in space.blocks() {
                    if block.is_subset_of(&pair.boundary()) {
                        x.insert(block.iter().next().expect("blocks are nonempty"));
                    }
                }
                Self::row(space, &x)
            })
            .collect();
        Ok(RoughTable { rows })
    }

    fn row(space: &ApproximationSpace, x: &IndexSet) -> [String; 7] {
        let pair = space.rough_pair(x);
        let tp = phi(&pair);
        [
            space.render_subset(x),
            space.render_subset(pair.lower()),
            space.render_subset(pair.upper()),
            space.render_subset(&pair.upper().complement()),
            tp.render(space.names()),
            crate::morphisms::alpha(&tp).to_string(),
            space.block_trichotomy(&pair).to_string(),
        ]
    }

    pub fn rows(&self) -> &[[String; 7]] {
        &self.rows
    }

    /// Tab-separated rendering, header row included.
    pub fn to_tsv(&self) -> String {
        let mut out = Self::HEADER.join("\t");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }

    /// Space-aligned rendering, header row included.
    pub fn to_aligned(&self) -> String {
        let width = |col: usize| {
            self.rows
                .iter()
                .map(|r| r[col].chars().count())
                .chain([Self::HEADER[col].chars().count()])
                .max()
                .unwrap_or(0)
        };
        let widths: Vec<usize> = (0..7).map(width).collect();
        let render_line = |cells: &[String]| {
            let mut line = String::new();
            for (i, cell) in cells.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(cell);
                if i + 1 < cells.len() {
                    let pad = widths[i] - cell.chars().count();
                    line.extend(std::iter::repeat_n(' ', pad));
                }
            }
            line.push('\n');
            line
        };
        let header: Vec<String> = Self::HEADER.iter().map(|s| s.to_string()).collect();
        let mut out = render_line(&header);
        for row in &self.rows {
            out.push_str(&render_line(row.as_slice()));
        }
        out
    }
}

fn cmd_table(path: &Path, distinct: bool, tsv: bool) -> i32 {
    let space = match load_space(path) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    let table = if distinct {
        RoughTable::distinct(&space)
    } else {
        RoughTable::full(&space)
    };
    match table {
        Ok(table) => {
            print!(
                "{}",
                if tsv {
                    table.to_tsv()
                } else {
                    table.to_aligned()
                }
            );
            EXIT_OK
        }
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_USAGE
        }
    }
}

fn cmd_check(path: &Path) -> i32 {
    let space = match load_space(path) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    let algebra = match space.build_prsa() {
        Ok(a) => a,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_USAGE;
        }
    };

    println!("universe: {}", space.names().join(" "));
    let block_text: Vec<String> = space
        .blocks()
        .iter()
        .map(|b| space.render_subset(b))
        .collect();
    println!("classes: {}", block_text.join(" "));
    let sizes: Vec<String> = space.blocks().iter().map(|b| b.len().to_string()).collect();
    println!("class sizes: {}", sizes.join(" "));
    println!("distinct rough pairs: {}", algebra.len());

    let verdict = algebra.verify_crdsa();
    for report in &verdict.law_reports {
        println!("{report}");
    }
    let core_text: Vec<&str> = verdict.core.iter().map(|&e| algebra.label(e)).collect();
    println!(
        "core: {}",
        if core_text.is_empty() {
            "∅".to_string()
        } else {
            format!("{{{}}}", core_text.join(","))
        }
    );
    let crisp = space.crisp_sets().len();
    println!(
        "center: {} elements (= {crisp} crisp pairs)",
        algebra.center().len()
    );
    println!("atoms: {}", algebra.atoms().len());

    let is_crdsa = verdict.holds();
    debug_assert_eq!(is_crdsa, space.is_crdsa_space());
    println!("crdsa: {}", if is_crdsa { "yes" } else { "no" });
    match space.core_witness() {
        Some(x) => {
            let pair = space.rough_pair(&x);
            println!(
                "core witness: {} -> {}",
                space.render_subset(&x),
                space.render_pair(&pair)
            );
        }
        None => println!("core witness: none"),
    }
    if is_crdsa {
        EXIT_OK
    } else {
        EXIT_PROPERTY
    }
}

fn cmd_iso(path: &Path) -> i32 {
    let space = match load_space(path) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    let crdsa = space.is_crdsa_space();
    if crdsa {
        println!(
            "space: {} classes, all of size >= 2 -> crdsa",
            space.block_count()
        );
    } else {
        println!(
            "space: some class is a singleton -> not a crdsa; \
             embedding checks limited to lattice structure and the 0/1 constants"
        );
    }

    let collapse = match class_collapse(&space) {
        Ok(m) => m,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_USAGE;
        }
    };
    let embed = embed_prsa_into_c3u(&space).expect("carrier already fit the table cap");
    let class_names: Vec<String> = (0..space.block_count()).map(|e| format!("e{e}")).collect();
    let coord = match alpha_map(&class_names) {
        Ok(m) => m,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_USAGE;
        }
    };

    let mut failed = false;
    let mut show = |name: &str, report: crate::algebra::LawReport| {
        if report.holds() {
            println!("{name}: verified");
        } else {
            failed = true;
            println!(
                "{name}: FAILED ({})",
                report.counterexample().expect("failed report").equation
            );
        }
    };
    if crdsa {
        show(
            "class collapse R -> C3^E (isomorphism)",
            collapse.is_isomorphism(),
        );
    } else {
        show(
            "class collapse R -> C3^E (embedding)",
            collapse.is_embedding(),
        );
    }
    show("alpha TP_E -> C3^E (isomorphism)", coord.is_isomorphism());
    show("phi;alpha R -> C3^U (embedding)", embed.is_embedding());

    println!("map:");
    let prsa = collapse.source();
    for e in prsa.elements() {
        println!(
            "  {}  ->  {}  ->  {}",
            prsa.label(e),
            collapse.image(e),
            embed.image(e)
        );
    }
    if failed {
        EXIT_PROPERTY
    } else {
        EXIT_OK
    }
}

fn cmd_selftest() -> i32 {
    let outcomes = selftest::run_all();
    let mut all_ok = true;
    for outcome in &outcomes {
        println!("{outcome}");
        all_ok &= outcome.passed();
    }
    if all_ok {
        println!("selftest: all {} checks passed", outcomes.len());
        EXIT_OK
    } else {
        println!("selftest: FAILURES present");
        EXIT_PROPERTY
    }
}
