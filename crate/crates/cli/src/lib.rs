//! Command-line front end: dielectric curves, force curves, Δ% curves and
//! the two figure datasets, all as CSV.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use lifshitz_core::dielectric::drude_eps_izeta;
use lifshitz_core::materials::{
    dry_gold, write_curve_csv, write_eps_csv, write_eps_ratio_csv, write_labelled_curves_csv,
    EpsRatioRecord,
};
use lifshitz_core::{
    bruggeman_mix, builtin_table1, delta_curve, force_curve, log_grid, ColeColeForm,
    DielectricModel, LayerStack, MaterialDatabase, QuadratureSpec,
};

/// Built-in gold rows plotted in the dielectric-ratio figure.
pub const FIG1_ROWS: [f64; 4] = [1.33, 1.42, 1.51, 1.60];

/// Liquids of the Δ% figure: database name and the matching built-in gold row.
pub const FIG2_LIQUIDS: [(&str, f64); 3] = [("water", 1.33), ("ccl3f", 1.42), ("cbr3f", 1.60)];

#[derive(Debug, Parser)]
#[command(
    name = "lifshitz",
    version,
    about = "Lifshitz pressure between metal slabs across liquid gaps"
)]
pub struct Cli {
    /// Write CSV here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Directory of *.material files.
    #[arg(long, global = true, value_name = "DIR")]
    pub materials: Option<PathBuf>,
    /// Relative tolerance of every integral.
    #[arg(long, global = true, value_name = "X")]
    pub rel_tol: Option<f64>,
    /// Integrand evaluations allowed per integral.
    #[arg(long, global = true, value_name = "N")]
    pub max_evals: Option<usize>,
    /// Evaluate Cole-Cole liquids with the static and high-frequency roles
    /// exchanged, so that ε(i·0) equals the high-frequency value.
    #[arg(long, global = true)]
    pub paper_literal_colecole: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// ε(iζ) of one model on a log-spaced ζ grid.
    Eps {
        /// Model reference: vacuum, const:X, au:N (built-in gold row) or a database name.
        model: String,
        #[command(flatten)]
        grid: ZetaGrid,
    },
    /// Pressure of a slab | gap | slab stack on a log-spaced separation grid.
    Force {
        slab1: String,
        gap: String,
        slab2: String,
        #[command(flatten)]
        grid: SeparationGrid,
    },
    /// Percent difference between dry and liquid-matched Au across a liquid.
    Delta {
        liquid: String,
        /// Built-in gold row (ambient index) of the reference slabs.
        dry: f64,
        /// Built-in gold row of the liquid-matched slabs.
        wet: f64,
        #[command(flatten)]
        grid: SeparationGrid,
    },
    /// Bruggeman effective permittivity of a metal/fluid mixture.
    Mix {
        eps_metal: f64,
        eps_fluid: f64,
        metal_fraction: f64,
    },
    /// Ratios ε(iζ)/ε_D(iζ) of the liquid-matched gold rows to dry Au.
    Fig1 {
        #[command(flatten)]
        grid: ZetaGrid,
    },
    /// Δ% against separation for water, CCl₃F and CBr₃F.
    Fig2 {
        #[command(flatten)]
        grid: SeparationGrid,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ZetaGrid {
    #[arg(long, default_value_t = 1e-3, value_name = "EV")]
    pub zeta_min: f64,
    #[arg(long, default_value_t = 1e2, value_name = "EV")]
    pub zeta_max: f64,
    #[arg(long = "zeta-points", default_value_t = 60, value_name = "N")]
    pub points: usize,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct SeparationGrid {
    #[arg(long, default_value_t = 10.0, value_name = "NM")]
    pub d_min: f64,
    #[arg(long, default_value_t = 1000.0, value_name = "NM")]
    pub d_max: f64,
    #[arg(long = "d-points", default_value_t = 40, value_name = "N")]
    pub points: usize,
}

/// Failure classes, mapped onto exit codes by [`run`].
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => f.write_str(m),
        }
    }
}

impl From<lifshitz_core::Error> for Failure {
    fn from(e: lifshitz_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn log_points(lo: f64, hi: f64, n: usize, what: &str) -> Result<Vec<f64>, Failure> {
    if !(lo > 0.0 && lo.is_finite() && hi.is_finite()) {
        return Err(Failure::Usage(format!(
            "{what} grid must be positive and finite"
        )));
    }
    match n {
        0 => Err(Failure::Usage(format!(
            "{what} grid needs at least one point"
        ))),
        1 if lo == hi => Ok(vec![lo]),
        1 => Err(Failure::Usage(format!(
            "a one-point {what} grid needs equal bounds"
        ))),
        _ if hi > lo => Ok(log_grid(lo, hi, n)),
        _ => Err(Failure::Usage(format!(
            "{what} grid must be strictly increasing, got [{lo}, {hi}]"
        ))),
    }
}

impl ZetaGrid {
    pub fn points(&self) -> Result<Vec<f64>, Failure> {
        log_points(self.zeta_min, self.zeta_max, self.points, "zeta")
    }
}

impl SeparationGrid {
    pub fn points(&self) -> Result<Vec<f64>, Failure> {
        log_points(self.d_min, self.d_max, self.points, "separation")
    }
}

/// Lazily loaded material database plus the options that modify its models.
struct Materials {
    dir: PathBuf,
    db: Option<MaterialDatabase>,
    literal_colecole: bool,
}

impl Materials {
    fn database(&mut self) -> Result<&MaterialDatabase, Failure> {
        if self.db.is_none() {
            let db = MaterialDatabase::load_dir(&self.dir).map_err(|e| {
                Failure::Domain(format!("material database {}: {e}", self.dir.display()))
            })?;
            self.db = Some(db);
        }
        Ok(self.db.as_ref().expect("loaded above"))
    }

    fn named(&mut self, name: &str) -> Result<DielectricModel, Failure> {
        let literal = self.literal_colecole;
        let mut model = self.database()?.get(name)?.model.clone();
        if let DielectricModel::ColeCole(p) = &mut model {
            if literal {
                p.form = ColeColeForm::Literal;
            }
        }
        Ok(model)
    }

    /// Resolve `vacuum`, `const:X`, `au:N` or a database name.
    fn resolve(&mut self, reference: &str) -> Result<DielectricModel, Failure> {
        if reference == "vacuum" {
            return Ok(DielectricModel::Vacuum);
        }
        if let Some(v) = reference.strip_prefix("const:") {
            let eps: f64 = v
                .parse()
                .map_err(|_| Failure::Usage(format!("`{v}` in `{reference}` is not a number")))?;
            let model = DielectricModel::Constant(eps);
            model.validate()?;
            return Ok(model);
        }
        if let Some(v) = reference.strip_prefix("au:") {
            return Ok(DielectricModel::Drude(table_row(v)?));
        }
        self.named(reference)
    }
}

fn table_row(text: &str) -> Result<lifshitz_core::DrudeParams, Failure> {
    let n: f64 = text
        .parse()
        .map_err(|_| Failure::Usage(format!("`{text}` is not an ambient index")))?;
    Ok(builtin_table1(n)?)
}

fn row_params(n: f64) -> Result<lifshitz_core::DrudeParams, Failure> {
    Ok(builtin_table1(n)?)
}

/// Shipped database: `./materials` if present, otherwise the copy in the
/// source tree.
pub fn default_materials_dir() -> PathBuf {
    let local = PathBuf::from("materials");
    if local.is_dir() {
        local
    } else {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("../../materials")
    }
}

fn quadrature(cli: &Cli) -> Result<QuadratureSpec, Failure> {
    let mut q = QuadratureSpec::default();
    if let Some(t) = cli.rel_tol {
        q.rel_tol = t;
    }
    if let Some(n) = cli.max_evals {
        q.max_evals = n;
    }
    q.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(q)
}

/// Produce the full output of one invocation in memory.
pub fn execute(cli: &Cli) -> Result<Vec<u8>, Failure> {
    let quad = quadrature(cli)?;
    let mut materials = Materials {
        dir: cli.materials.clone().unwrap_or_else(default_materials_dir),
        db: None,
        literal_colecole: cli.paper_literal_colecole,
    };
    let mut out = Vec::new();
    match &cli.command {
        Command::Eps { model, grid } => {
            let zetas = grid.points()?;
            let model = materials.resolve(model)?;
            let rows = zetas
                .iter()
                .map(|&z| Ok((z, model.eval(z, &quad)?)))
                .collect::<Result<Vec<_>, Failure>>()?;
            write_eps_csv(&rows, &mut out)?;
        }
        Command::Force {
            slab1,
            gap,
            slab2,
            grid,
        } => {
            let ds = grid.points()?;
            let stack = LayerStack::new(
                materials.resolve(slab1)?,
                materials.resolve(slab2)?,
                materials.resolve(gap)?,
                ds[0],
            )?;
            write_curve_csv(&force_curve(&stack, &ds, &quad)?, &mut out)?;
        }
        Command::Delta {
            liquid,
            dry,
            wet,
            grid,
        } => {
            let ds = grid.points()?;
            let liquid = materials.resolve(liquid)?;
            let curve = delta_curve(&liquid, &row_params(*dry)?, &row_params(*wet)?, &ds, &quad)?;
            write_curve_csv(&curve, &mut out)?;
        }
        Command::Mix {
            eps_metal,
            eps_fluid,
            metal_fraction,
        } => {
            let v = bruggeman_mix(*eps_metal, *eps_fluid, *metal_fraction)?;
            writeln!(out, "{v}")?;
        }
        Command::Fig1 { grid } => {
            let zetas = grid.points()?;
            let dry = dry_gold();
            let omega_pd = dry.plasma_frequency();
            let mut rows = Vec::with_capacity(zetas.len() * FIG1_ROWS.len());
            for n in FIG1_ROWS {
                let wet = row_params(n)?;
                for &z in &zetas {
                    rows.push(EpsRatioRecord {
                        zeta_over_omega_pd: z / omega_pd,
                        eps_ratio: drude_eps_izeta(&wet, z, &quad)?
                            / drude_eps_izeta(&dry, z, &quad)?,
                        ambient_index: n,
                    });
                }
            }
            write_eps_ratio_csv(&rows, &mut out)?;
        }
        Command::Fig2 { grid } => {
            let ds = grid.points()?;
            let dry = dry_gold();
            let mut curves = Vec::with_capacity(FIG2_LIQUIDS.len());
            for (name, n) in FIG2_LIQUIDS {
                let liquid = materials.named(name)?;
                curves.push((n, delta_curve(&liquid, &dry, &row_params(n)?, &ds, &quad)?));
            }
            write_labelled_curves_csv(&curves, &mut out)?;
        }
    }
    Ok(out)
}

/// Write `bytes` to `path` through a temporary file in the same directory,
/// so that the destination either keeps its old content or gets all of it.
pub fn write_atomically(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Parse `argv`, execute, and return the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = execute(&cli).and_then(|bytes| match &cli.out {
        Some(path) => write_atomically(path, &bytes)
            .map_err(|e| Failure::Domain(format!("writing {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(&bytes)?;
            stdout.flush()?;
            Ok(())
        }
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            eprintln!("error: {f}");
            match f {
                Failure::Usage(_) => EXIT_USAGE,
                Failure::Domain(_) => EXIT_DOMAIN,
            }
        }
    }
}
