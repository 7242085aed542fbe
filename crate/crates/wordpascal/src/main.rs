//! Thin command-line front end over the library.
//!
//! Every subcommand is deterministic: identical inputs produce
//! byte-identical artifacts. Exit status 0 on success, 2 on usage or
//! validation errors, 1 on internal failures.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wordpascal::hausdorff::{convergence_csv, convergence_rows};
use wordpascal::render::{render_grid_pbm, render_pieces_svg};
use wordpascal::star::{enumerate_star_pairs_with_cap, pairs_to_csv, pairs_to_json};
use wordpascal::triangle::{build_grid_with_cap, counters_csv, squares, DEPTH_CAP};
use wordpascal::word::{binom_words, binom_words_mod, Modulus, Word};
use wordpascal::{build_a0, build_an, PieceSet};

#[derive(Parser)]
#[command(
    name = "wordpascal",
    version,
    about = "Binomial coefficients of words and their fractal triangle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TriangleFormat {
    Pbm,
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the binomial coefficient of two binary words; with --p also
    /// the residue.
    Coeff {
        u: String,
        v: String,
        #[arg(long)]
        p: Option<u32>,
    },
    /// Materialize the depth-n triangle; print the square count for the
    /// residue class and optionally write an artifact.
    Triangle {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long, value_enum)]
        format: Option<TriangleFormat>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEPTH_CAP)]
        cap: u32,
    },
    /// Enumerate star pairs up to a length bound; print the count.
    Stars {
        #[arg(long = "max-len")]
        max_len: u32,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long, value_enum)]
        format: Option<ListFormat>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = wordpascal::star::LEN_CAP)]
        cap: u32,
    },
    /// Build the depth-n approximant from star pairs up to a length
    /// bound; write its SVG and JSON next to the output stem and print
    /// the segment count.
    Fractal {
        #[arg(long = "max-len")]
        max_len: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1024)]
        canvas: u32,
        #[arg(long, default_value_t = 1.0)]
        stroke: f64,
    },
    /// Hausdorff-distance diagnostics between U_n and a fixed
    /// approximant, as CSV.
    Converge {
        n_min: u32,
        n_max: u32,
        #[arg(long = "max-len", default_value_t = 8)]
        max_len: u32,
        #[arg(long, default_value_t = 4)]
        an: u32,
        #[arg(long = "grid-exp", default_value_t = 12)]
        grid_exp: u32,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(failure)) => failure.report(),
        Err(_) => {
            eprintln!("wordpascal: internal assertion failure");
            ExitCode::from(1)
        }
    }
}

enum Failure {
    Validation(String),
    Io(std::io::Error),
}

impl Failure {
    fn report(self) -> ExitCode {
        match self {
            Failure::Validation(msg) => {
                eprintln!("wordpascal: {msg}");
                ExitCode::from(2)
            }
            Failure::Io(err) => {
                eprintln!("wordpascal: io error: {err}");
                ExitCode::from(1)
            }
        }
    }
}

impl From<wordpascal::Error> for Failure {
    fn from(e: wordpascal::Error) -> Self {
        Failure::Validation(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

// Artifacts are written atomically: temp file in the target directory,
// then rename.
fn write_atomic(path: &Path, contents: &str) -> Result<(), Failure> {
    let dir = path
        .parent()
        .filter(|d| !d.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        tmp.as_file()
            .set_permissions(std::fs::Permissions::from_mode(0o644))?;
    }
    tmp.persist(path).map_err(|e| Failure::Io(e.error))?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Coeff { u, v, p } => {
            let u = Word::parse(&u)?;
            let v = Word::parse(&v)?;
            let exact = binom_words(&u, &v);
            match p {
                Some(p) => {
                    let m = Modulus::new(p, 1)?;
                    println!("{exact} {}", binom_words_mod(&u, &v, m));
                }
                None => println!("{exact}"),
            }
        }
        Command::Triangle {
            n,
            p,
            r,
            format,
            out,
            cap,
        } => {
            let grid = build_grid_with_cap(n, p, cap)?;
            let set = squares(&grid, r)?;
            println!("{}", set.len());
            if let Some(format) = format {
                let out = out
                    .ok_or_else(|| Failure::Validation("--out is required with --format".into()))?;
                let artifact = match format {
                    TriangleFormat::Pbm => render_grid_pbm(&grid, r)?.to_p1(),
                    TriangleFormat::Json => set.to_json(),
                    TriangleFormat::Csv => counters_csv(n),
                    TriangleFormat::Svg => {
                        let pieces = PieceSet::from_squares(&set.normalized())?;
                        render_pieces_svg(&pieces, 1.0, 1024)
                    }
                };
                write_atomic(&out, &artifact)?;
            }
        }
        Command::Stars {
            max_len,
            p,
            r,
            format,
            out,
            cap,
        } => {
            let m = Modulus::new(p, r)?;
            let pairs = enumerate_star_pairs_with_cap(max_len, m, cap)?;
            println!("{}", pairs.len());
            if let Some(format) = format {
                let out = out
                    .ok_or_else(|| Failure::Validation("--out is required with --format".into()))?;
                let artifact = match format {
                    ListFormat::Json => pairs_to_json(&pairs),
                    ListFormat::Csv => pairs_to_csv(&pairs),
                };
                write_atomic(&out, &artifact)?;
            }
        }
        Command::Fractal {
            max_len,
            n,
            p,
            r,
            out,
            canvas,
            stroke,
        } => {
            let m = Modulus::new(p, r)?;
            let a0 = build_a0(max_len, m)?;
            let an = build_an(&a0, n);
            let pieces = PieceSet::from_segments(&an)?;
            println!("{}", an.len());
            write_atomic(
                &out.with_extension("svg"),
                &render_pieces_svg(&pieces, stroke, canvas),
            )?;
            write_atomic(&out.with_extension("json"), &an.to_json())?;
        }
        Command::Converge {
            n_min,
            n_max,
            max_len,
            an,
            grid_exp,
            p,
            r,
            out,
        } => {
            let m = Modulus::new(p, r)?;
            let rows = convergence_rows(n_min, n_max, max_len, an, grid_exp, m)?;
            let csv = convergence_csv(&rows);
            match out {
                Some(path) => write_atomic(&path, &csv)?,
                None => print!("{csv}"),
            }
        }
    }
    Ok(())
}
