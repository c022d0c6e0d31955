//! Command-line front-end for the concurrence-vector library.
//!
//! One subcommand per analysis; results go to stdout (or `--out`),
//! diagnostics to stderr. Exit codes: 0 success, 1 domain error
//! (bad state file, unnormalized input, infeasible parameters),
//! 2 usage error. Floats are printed with 12 significant digits.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use cvec::geometry::{edge_scan, enclosed_volume, surface, EdgeScanMode, SubspaceBasis};
use cvec::io::{load_document, StateDocument};
use cvec::{
    build_ladder_set, catalog, catalog_state, check_secular, concurrence_vector_mixed,
    concurrence_vector_pure, entropy_bounds, entropy_report, named_basis, positive_roots,
    verify_commutators, ConcurrenceVector, DensityMatrix, PureState, BASIS_NAMES,
};

#[derive(Parser)]
#[command(
    name = "cvec",
    about = "Concurrence-vector analyses for bipartite qudit states",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

/// A pure-state input: a catalog name or a JSON state file.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct StateInput {
    /// Catalog state name, e.g. su3.phi1 or bell.psi-
    #[arg(long)]
    state: Option<String>,
    /// Path to a pure-state JSON file
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct OutputOpts {
    /// Output format
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Write results to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in state catalog with concurrence norms
    Catalog {
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Concurrence vector of a pure state
    Concurrence {
        #[command(flatten)]
        input: StateInput,
        /// Rescale file amplitudes to unit norm
        #[arg(long)]
        normalize: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Entropy report of a pure state
    Entropy {
        #[command(flatten)]
        input: StateInput,
        #[arg(long)]
        normalize: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Residual of the secular equation at the computed spectrum
    SecularCheck {
        #[command(flatten)]
        input: StateInput,
        #[arg(long)]
        normalize: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Mixed-state concurrence vector from a density-matrix (or pure) file
    Mixed {
        /// Path to a state JSON file (density matrix or pure state)
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        normalize: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Concurrence surface r(theta, phi) over a named 3-state basis
    Surface {
        /// Basis name: su3.psi- | su3.psi+ | su3.phi | so3.triplet | so3.pentad | so3.singlet
        #[arg(long)]
        basis: String,
        #[arg(long, default_value_t = 64)]
        n_theta: usize,
        #[arg(long, default_value_t = 64)]
        n_phi: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Volume enclosed by a concurrence surface, with convergence delta
    Volume {
        #[arg(long)]
        basis: String,
        #[arg(long, default_value_t = 400)]
        n_theta: usize,
        #[arg(long, default_value_t = 400)]
        n_phi: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Norm of the concurrence vector over the edge family p, q
    EdgeScan {
        #[arg(long, default_value_t = 360)]
        grid: usize,
        #[arg(long, value_enum, default_value_t = ScanMode::Ellipse)]
        mode: ScanMode,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Entropy envelope inf/sup versus the concurrence norm (qutrit pair)
    EntropyBounds {
        /// Single |C| value to bound
        #[arg(long, group = "what", required = true)]
        norm: Option<f64>,
        /// Sweep this many |C| samples over [0, sqrt(4/3)] instead
        #[arg(long, group = "what")]
        samples: Option<usize>,
        /// det rho_B grid resolution per |C|
        #[arg(long, default_value_t = 128)]
        grid: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Check the ladder-operator commutation relations for dimension N
    VerifyAlgebra {
        #[arg(long)]
        dim: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ScanMode {
    Ellipse,
    Rectangle,
}

/// 12 significant digits, stable across platforms.
fn sig(x: f64) -> String {
    format!("{x:.11e}")
}

fn load_pure(input: &StateInput, normalize: bool) -> cvec::Result<PureState> {
    if let Some(name) = &input.state {
        return Ok(catalog_state(name)?.state);
    }
    let path = input.file.as_ref().expect("clap group guarantees one");
    match load_document(path)? {
        StateDocument::Pure(f) => f.to_state(normalize),
        StateDocument::Density(_) => Err(cvec::Error::StateFile(format!(
            "{}: density matrix given where a pure state is required",
            path.display()
        ))),
    }
}

fn load_basis(name: &str) -> cvec::Result<SubspaceBasis> {
    let states = named_basis(name)?;
    SubspaceBasis::new(states)
}

fn pair_labels(cv: &ConcurrenceVector) -> cvec::Result<Vec<(String, String)>> {
    let ra = positive_roots(cv.dim_a())?;
    let rb = positive_roots(cv.dim_b())?;
    Ok(cv
        .pairs()
        .iter()
        .map(|&(a, b)| (ra[a].label(), rb[b].label()))
        .collect())
}

fn write_vector(
    w: &mut dyn Write,
    format: Format,
    title: &str,
    cv: &ConcurrenceVector,
    components: &[Complex64],
) -> cvec::Result<()> {
    let labels = pair_labels(cv)?;
    let res: std::io::Result<()> = (|| match format {
        Format::Text => {
            writeln!(w, "{title} ({}x{})", cv.dim_a(), cv.dim_b())?;
            for (k, ((a, b), z)) in labels.iter().zip(components).enumerate() {
                writeln!(w, "  C[{}] ({a}, {b}) = {} {}", k + 1, sig(z.re), sig(z.im))?;
            }
            writeln!(w, "  norm^2 = {}", sig(cv.norm_sq()))?;
            writeln!(w, "  norm   = {}", sig(cv.norm()))?;
            Ok(())
        }
        Format::Csv => {
            writeln!(w, "slot,alpha,beta,re,im")?;
            for (k, ((a, b), z)) in labels.iter().zip(components).enumerate() {
                writeln!(w, "{},{a},{b},{},{}", k + 1, sig(z.re), sig(z.im))?;
            }
            Ok(())
        }
        Format::Json => {
            let comps: Vec<serde_json::Value> = labels
                .iter()
                .zip(components)
                .map(|((a, b), z)| {
                    serde_json::json!({"alpha": a, "beta": b, "re": z.re, "im": z.im})
                })
                .collect();
            let doc = serde_json::json!({
                "dimA": cv.dim_a(),
                "dimB": cv.dim_b(),
                "components": comps,
                "normSq": cv.norm_sq(),
                "norm": cv.norm(),
            });
            // serializing a serde_json::Value cannot fail
            let text = serde_json::to_string_pretty(&doc).expect("JSON value");
            writeln!(w, "{text}")
        }
    })();
    res.map_err(|e| cvec::Error::StateFile(format!("write: {e}")))
}

fn dispatch(cli: Cli, w: &mut dyn Write) -> cvec::Result<()> {
    match cli.command {
        Command::Catalog { output } => with_output(&output, w, |w| {
            let entries = catalog();
            match output.format {
                Format::Text => {
                    writeln!(w, "{} catalog states (use with --state NAME)", entries.len())
                        .map_err(write_err)?;
                    for e in &entries {
                        let n2 = concurrence_vector_pure(&e.state)?.norm_sq();
                        writeln!(
                            w,
                            "  {:<12} {}x{}  norm^2 = {}",
                            e.name,
                            e.state.dim_a(),
                            e.state.dim_b(),
                            sig(n2)
                        )
                        .map_err(write_err)?;
                    }
                    writeln!(w, "named bases: {}", BASIS_NAMES.join(", ")).map_err(write_err)?;
                    Ok(())
                }
                Format::Csv => {
                    writeln!(w, "name,dimA,dimB,normSq").map_err(write_err)?;
                    for e in &entries {
                        let n2 = concurrence_vector_pure(&e.state)?.norm_sq();
                        writeln!(
                            w,
                            "{},{},{},{}",
                            e.name,
                            e.state.dim_a(),
                            e.state.dim_b(),
                            sig(n2)
                        )
                        .map_err(write_err)?;
                    }
                    Ok(())
                }
                Format::Json => {
                    let mut rows = Vec::new();
                    for e in &entries {
                        let n2 = concurrence_vector_pure(&e.state)?.norm_sq();
                        rows.push(serde_json::json!({
                            "name": e.name,
                            "dimA": e.state.dim_a(),
                            "dimB": e.state.dim_b(),
                            "normSq": n2,
                        }));
                    }
                    let doc = serde_json::json!({"states": rows, "bases": BASIS_NAMES});
                    writeln!(w, "{}", json_pretty(&doc)?).map_err(write_err)
                }
            }
        }),
        Command::Concurrence {
            input,
            normalize,
            output,
        } => {
            let ps = load_pure(&input, normalize)?;
            let cv = concurrence_vector_pure(&ps)?;
            let comps = cv.components().to_vec();
            let title = input.state.as_deref().unwrap_or("pure state").to_string();
            with_output(&output, w, |w| {
                write_vector(w, output.format, &title, &cv, &comps)
            })
        }
        Command::Entropy {
            input,
            normalize,
            output,
        } => {
            let ps = load_pure(&input, normalize)?;
            let rep = entropy_report(&ps)?;
            with_output(&output, w, |w| match output.format {
                Format::Text => {
                    writeln!(w, "von Neumann entropy = {} bits", sig(rep.von_neumann))
                        .map_err(write_err)?;
                    writeln!(w, "linear entropy      = {}", sig(rep.linear)).map_err(write_err)?;
                    let squares: Vec<String> =
                        rep.schmidt_squares.iter().map(|&k| sig(k)).collect();
                    writeln!(w, "schmidt squares     = [{}]", squares.join(", "))
                        .map_err(write_err)?;
                    writeln!(w, "det rho_B           = {}", sig(rep.det_rho_b)).map_err(write_err)
                }
                Format::Csv => {
                    writeln!(w, "vonNeumann,linear,detRhoB").map_err(write_err)?;
                    writeln!(
                        w,
                        "{},{},{}",
                        sig(rep.von_neumann),
                        sig(rep.linear),
                        sig(rep.det_rho_b)
                    )
                    .map_err(write_err)
                }
                Format::Json => {
                    let doc = serde_json::json!({
                        "vonNeumann": rep.von_neumann,
                        "linear": rep.linear,
                        "schmidtSquares": rep.schmidt_squares,
                        "detRhoB": rep.det_rho_b,
                    });
                    writeln!(w, "{}", json_pretty(&doc)?).map_err(write_err)
                }
            })
        }
        Command::SecularCheck {
            input,
            normalize,
            output,
        } => {
            let ps = load_pure(&input, normalize)?;
            let residual = check_secular(&ps)?;
            with_output(&output, w, |w| match output.format {
                Format::Json => {
                    writeln!(w, "{}", serde_json::json!({ "residual": residual }))
                        .map_err(write_err)
                }
                _ => writeln!(w, "secular residual = {}", sig(residual)).map_err(write_err),
            })
        }
        Command::Mixed {
            file,
            normalize,
            output,
        } => {
            let rho = match load_document(&file)? {
                StateDocument::Density(f) => f.to_density()?,
                StateDocument::Pure(f) => DensityMatrix::from_pure(&f.to_state(normalize)?)?,
            };
            let cv = concurrence_vector_mixed(&rho)?;
            let comps = cv.components().to_vec();
            with_output(&output, w, |w| {
                write_vector(w, output.format, "mixed state", &cv, &comps)
            })
        }
        Command::Surface {
            basis,
            n_theta,
            n_phi,
            output,
        } => {
            let b = load_basis(&basis)?;
            let samples = surface(&b, n_theta, n_phi)?;
            with_output(&output, w, |w| match output.format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = samples
                        .iter()
                        .map(|s| {
                            serde_json::json!({"theta": s.theta, "phi": s.phi, "radius": s.radius})
                        })
                        .collect();
                    writeln!(w, "{}", json_pretty(&rows)?).map_err(write_err)
                }
                _ => {
                    writeln!(w, "theta,phi,radius").map_err(write_err)?;
                    for s in &samples {
                        writeln!(w, "{},{},{}", sig(s.theta), sig(s.phi), sig(s.radius))
                            .map_err(write_err)?;
                    }
                    Ok(())
                }
            })
        }
        Command::Volume {
            basis,
            n_theta,
            n_phi,
            output,
        } => {
            let b = load_basis(&basis)?;
            let fine = enclosed_volume(&b, n_theta, n_phi)?;
            let coarse = enclosed_volume(&b, (n_theta / 2).max(2), (n_phi / 2).max(2))?;
            let delta = (fine - coarse).abs();
            with_output(&output, w, |w| match output.format {
                Format::Json => {
                    let doc = serde_json::json!({
                        "basis": basis,
                        "nTheta": n_theta,
                        "nPhi": n_phi,
                        "volume": fine,
                        "convergenceDelta": delta,
                    });
                    writeln!(w, "{}", json_pretty(&doc)?).map_err(write_err)
                }
                Format::Csv => {
                    writeln!(w, "basis,nTheta,nPhi,volume,convergenceDelta").map_err(write_err)?;
                    writeln!(w, "{basis},{n_theta},{n_phi},{},{}", sig(fine), sig(delta))
                        .map_err(write_err)
                }
                Format::Text => {
                    writeln!(w, "volume = {} ({n_theta}x{n_phi} grid)", sig(fine))
                        .map_err(write_err)?;
                    writeln!(w, "convergence delta vs half grid = {}", sig(delta))
                        .map_err(write_err)
                }
            })
        }
        Command::EdgeScan { grid, mode, output } => {
            let scan_mode = match mode {
                ScanMode::Ellipse => EdgeScanMode::Ellipse,
                ScanMode::Rectangle => EdgeScanMode::Rectangle,
            };
            let scan = edge_scan(grid, scan_mode)?;
            with_output(&output, w, |w| match output.format {
                Format::Json => {
                    let point = |p: &cvec::geometry::EdgePoint| {
                        serde_json::json!({"p": p.p, "q": p.q, "norm": p.norm})
                    };
                    let doc = serde_json::json!({
                        "points": scan.points.iter().map(point).collect::<Vec<_>>(),
                        "zeros": scan.zeros.iter().map(point).collect::<Vec<_>>(),
                    });
                    writeln!(w, "{}", json_pretty(&doc)?).map_err(write_err)
                }
                _ => {
                    writeln!(w, "p,q,norm").map_err(write_err)?;
                    for pt in &scan.points {
                        writeln!(w, "{},{},{}", sig(pt.p), sig(pt.q), sig(pt.norm))
                            .map_err(write_err)?;
                    }
                    Ok(())
                }
            })
        }
        Command::EntropyBounds {
            norm,
            samples,
            grid,
            output,
        } => {
            let cmax = (4.0f64 / 3.0).sqrt();
            let rows: Vec<(f64, f64, f64)> = if let Some(k) = samples {
                if k < 2 {
                    return Err(cvec::Error::Domain("samples must be at least 2".into()));
                }
                let mut rows = Vec::with_capacity(k);
                for i in 0..k {
                    let c = cmax * i as f64 / (k - 1) as f64;
                    let (inf, sup) = entropy_bounds(c, grid)?;
                    rows.push((c, inf, sup));
                }
                rows
            } else {
                let c = norm.expect("clap group guarantees one");
                let (inf, sup) = entropy_bounds(c, grid)?;
                vec![(c, inf, sup)]
            };
            with_output(&output, w, |w| match output.format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(c, inf, sup)| {
                            serde_json::json!({"norm": c, "inf": inf, "sup": sup})
                        })
                        .collect();
                    writeln!(w, "{}", json_pretty(&rows)?).map_err(write_err)
                }
                _ => {
                    writeln!(w, "norm,inf,sup").map_err(write_err)?;
                    for (c, inf, sup) in &rows {
                        writeln!(w, "{},{},{}", sig(*c), sig(*inf), sig(*sup))
                            .map_err(write_err)?;
                    }
                    Ok(())
                }
            })
        }
        Command::VerifyAlgebra { dim, output } => {
            let ls = build_ladder_set(dim)?;
            let rep = verify_commutators(&ls);
            with_output(&output, w, |w| match output.format {
                Format::Json => {
                    let doc = serde_json::json!({
                        "dim": dim,
                        "positiveRoots": ls.roots.len(),
                        "maxResidual": rep.max_residual,
                        "violations": rep.violations,
                        "compositeSignChecks": rep.composite_signs.len(),
                    });
                    writeln!(w, "{}", json_pretty(&doc)?).map_err(write_err)
                }
                _ => {
                    writeln!(w, "dimension {dim}: {} positive roots", ls.roots.len())
                        .map_err(write_err)?;
                    writeln!(w, "max residual {}", sig(rep.max_residual)).map_err(write_err)?;
                    writeln!(
                        w,
                        "violations {} / composite sign checks {}",
                        rep.violations.len(),
                        rep.composite_signs.len()
                    )
                    .map_err(write_err)
                }
            })?;
            if rep.violations.is_empty() {
                Ok(())
            } else {
                Err(cvec::Error::Domain(format!(
                    "{} commutator violations",
                    rep.violations.len()
                )))
            }
        }
    }
}

fn write_err(e: std::io::Error) -> cvec::Error {
    cvec::Error::StateFile(format!("write: {e}"))
}

fn json_pretty<T: serde::Serialize>(value: &T) -> cvec::Result<String> {
    serde_json::to_string_pretty(value)
        .map_err(|e| cvec::Error::StateFile(format!("serialize: {e}")))
}

/// Routes output to `--out` when given, else the provided writer.
fn with_output(
    opts: &OutputOpts,
    w: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> cvec::Result<()>,
) -> cvec::Result<()> {
    match &opts.out {
        Some(path) => {
            let mut file = std::fs::File::create(path)
                .map_err(|e| cvec::Error::StateFile(format!("{}: {e}", path.display())))?;
            body(&mut file)?;
            file.flush()
                .map_err(|e| cvec::Error::StateFile(format!("{}: {e}", path.display())))
        }
        None => body(w),
    }
}

/// Parses and runs a full command line; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are successful exits
            let code = if e.exit_code() == 0 { 0 } else { 2 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                eprint!("{e}");
            }
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
