//! Subcommand implementations. Each returns a [`ScanResult`]; the binary
//! only parses flags and writes CSV.

use clap::{Args, Parser, Subcommand, ValueEnum};

use holoent::observables::{
    self, two_point_correlator_log, IntervalPair, MiPhase, TransitionModel,
};
use holoent::theta::{Sector, DEFAULT_TOL};
use holoent::{BulkGeometry, MeraNetwork, Regime, SiteInterval};

use crate::scan::{grid, ScanResult};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Flag combinations the parser cannot catch; exit status 2.
    #[error("{0}")]
    Usage(String),
    /// Scan-level failures (every row failed, invalid physics input); exit 1.
    #[error("{0}")]
    Computation(String),
}

fn usage(msg: impl ToString) -> CliError {
    CliError::Usage(msg.to_string())
}

#[derive(Parser, Debug)]
#[command(
    name = "holoent",
    version,
    about = "Holographic entanglement observables: geodesics, entropies, mutual information, correlators, MERA cuts",
    propagate_version = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write CSV to this file instead of standard output
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    /// Prefix the CSV with `# key = value` metadata lines
    #[arg(long, global = true)]
    pub header_comments: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Geodesic length vs boundary separation
    Geodesic(GeodesicArgs),
    /// Single-interval entanglement entropy vs interval size
    Entropy(EntropyArgs),
    /// Mutual information of two equal intervals vs separation (or cross ratio)
    MiScan(MiScanArgs),
    /// Finite-size MI transition point x0 vs |tau| = LT
    X0Scan(X0ScanArgs),
    /// Two-point correlator and its local log-slope vs separation
    Correlator(CorrelatorArgs),
    /// MERA causal-cone overlap levels, minimal cuts and regimes
    Mera(MeraArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GeometryChoice {
    /// Pure AdS3
    Ads,
    /// Non-rotating BTZ black hole
    Btz,
    /// Rotating BTZ black hole
    BtzRot,
}

impl std::fmt::Display for GeometryChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GeometryChoice::Ads => "ads",
            GeometryChoice::Btz => "btz",
            GeometryChoice::BtzRot => "btz-rot",
        })
    }
}

#[derive(Args, Debug, Clone)]
pub struct GeometryArgs {
    /// Bulk background
    #[arg(long, value_enum, default_value_t = GeometryChoice::Ads)]
    pub geometry: GeometryChoice,
    /// Outer horizon r+ (btz, btz-rot)
    #[arg(long, default_value_t = 1.0)]
    pub r_plus: f64,
    /// Inner horizon r- (btz-rot only)
    #[arg(long, default_value_t = 0.0)]
    pub r_minus: f64,
    /// AdS radius (all positions in these units)
    #[arg(long, default_value_t = 1.0)]
    pub ads_radius: f64,
    /// UV cutoff epsilon
    #[arg(long, default_value_t = 1e-3)]
    pub uv_cutoff: f64,
    /// Central charge c = 3l/(2G); overrides the default G = 1/2
    #[arg(long)]
    pub central_charge: Option<f64>,
}

impl GeometryArgs {
    pub fn build(&self) -> Result<BulkGeometry, CliError> {
        let base = match self.geometry {
            GeometryChoice::Ads => Ok(BulkGeometry::pure_ads()),
            GeometryChoice::Btz => BulkGeometry::non_rotating(self.r_plus),
            GeometryChoice::BtzRot => BulkGeometry::rotating(self.r_plus, self.r_minus),
        };
        let mut g = base
            .and_then(|g| g.with_ads_radius(self.ads_radius))
            .and_then(|g| g.with_uv_cutoff(self.uv_cutoff))
            .map_err(usage)?;
        if let Some(c) = self.central_charge {
            g = g.with_central_charge(c).map_err(usage)?;
        }
        Ok(g)
    }

    fn describe(&self, scan: &mut ScanResult) {
        scan.meta("geometry", self.geometry);
        scan.meta("r_plus", self.r_plus);
        scan.meta("r_minus", self.r_minus);
        scan.meta("ads_radius", self.ads_radius);
        scan.meta("uv_cutoff", self.uv_cutoff);
        if let Some(c) = self.central_charge {
            scan.meta("central_charge", c);
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct RangeArgs {
    #[arg(long)]
    pub from: f64,
    #[arg(long)]
    pub to: f64,
    #[arg(long, default_value_t = 50)]
    pub steps: usize,
    /// Logarithmic instead of linear spacing
    #[arg(long)]
    pub log_grid: bool,
}

impl RangeArgs {
    fn values(&self) -> Result<Vec<f64>, CliError> {
        grid(self.from, self.to, self.steps, self.log_grid).map_err(usage)
    }

    fn describe(&self, scan: &mut ScanResult) {
        scan.meta("from", self.from);
        scan.meta("to", self.to);
        scan.meta("steps", self.steps);
        scan.meta("log_grid", self.log_grid);
    }
}

fn base_scan(command: &str, header: &[&str]) -> ScanResult {
    let mut scan = ScanResult::new(header);
    scan.meta("tool", format!("holoent {}", env!("CARGO_PKG_VERSION")));
    scan.meta("command", command);
    scan
}

#[derive(Args, Debug)]
pub struct GeodesicArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,
    #[command(flatten)]
    pub range: RangeArgs,
}

pub fn cmd_geodesic(args: &GeodesicArgs) -> Result<ScanResult, CliError> {
    let g = args.geometry.build()?;
    let mut scan = base_scan("geodesic", &["dx", "length"]);
    args.geometry.describe(&mut scan);
    args.range.describe(&mut scan);
    for dx in args.range.values()? {
        let len = g
            .geodesic_length(0.0, dx)
            .map_err(|e| CliError::Computation(e.to_string()))?;
        scan.push_row(vec![dx, len]);
    }
    Ok(scan)
}

#[derive(Args, Debug)]
pub struct EntropyArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,
    #[command(flatten)]
    pub range: RangeArgs,
}

pub fn cmd_entropy(args: &EntropyArgs) -> Result<ScanResult, CliError> {
    let g = args.geometry.build()?;
    let mut scan = base_scan("entropy", &["l_a", "entropy"]);
    args.geometry.describe(&mut scan);
    args.range.describe(&mut scan);
    for la in args.range.values()? {
        let s = observables::interval_entropy(&g, 0.0, la)
            .map_err(|e| CliError::Computation(e.to_string()))?;
        scan.push_row(vec![la, s]);
    }
    Ok(scan)
}

#[derive(Args, Debug)]
pub struct MiScanArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,
    /// Interval size
    #[arg(long, default_value_t = 1.0)]
    pub l: f64,
    /// Tie the horizon to the block size: beta = 2*pi*l (btz only)
    #[arg(long)]
    pub tie_horizon: bool,
    #[arg(long)]
    pub d_from: Option<f64>,
    #[arg(long)]
    pub d_to: Option<f64>,
    #[arg(long)]
    pub x_from: Option<f64>,
    #[arg(long)]
    pub x_to: Option<f64>,
    #[arg(long, default_value_t = 50)]
    pub steps: usize,
    #[arg(long)]
    pub log_grid: bool,
}

pub fn cmd_mi_scan(args: &MiScanArgs) -> Result<ScanResult, CliError> {
    if args.l.is_nan() || args.l <= 0.0 {
        return Err(usage("--l must be > 0"));
    }
    let mut geometry_args = args.geometry.clone();
    if args.tie_horizon {
        if geometry_args.geometry != GeometryChoice::Btz {
            return Err(usage("--tie-horizon applies to --geometry btz"));
        }
        // beta = 2 pi l  <=>  r_plus = ads_radius^2 / l
        geometry_args.r_plus = geometry_args.ads_radius * geometry_args.ads_radius / args.l;
    }
    let g = geometry_args.build()?;

    let x_range = (args.x_from, args.x_to);
    let d_range = (args.d_from, args.d_to);
    let separations: Vec<f64> = match (x_range, d_range) {
        ((Some(_), _) | (_, Some(_)), (Some(_), _) | (_, Some(_))) => {
            return Err(usage("give either an x-range or a d-range, not both"));
        }
        ((Some(xf), Some(xt)), _) => {
            if !(0.0 < xf && xf < 1.0 && 0.0 < xt && xt < 1.0) {
                return Err(usage("cross ratios must lie in (0,1)"));
            }
            grid(xf, xt, args.steps, args.log_grid)
                .map_err(usage)?
                .into_iter()
                .map(|x| args.l * (1.0 / x.sqrt() - 1.0))
                .collect()
        }
        ((None, None), (df, dt)) => {
            let (df, dt) = (df.unwrap_or(0.1 * args.l), dt.unwrap_or(2.0 * args.l));
            if !(df > 0.0 && dt > 0.0) {
                return Err(usage("separations must be > 0"));
            }
            grid(df, dt, args.steps, args.log_grid).map_err(usage)?
        }
        _ => return Err(usage("x-range needs both --x-from and --x-to")),
    };

    let mut scan = base_scan("mi-scan", &["d", "x", "i_unclamped", "i", "phase_connected"]);
    geometry_args.describe(&mut scan);
    scan.meta("l", args.l);
    scan.meta("tie_horizon", args.tie_horizon);
    if let (Some(xf), Some(xt)) = (args.x_from, args.x_to) {
        scan.meta("x_from", xf);
        scan.meta("x_to", xt);
    } else {
        scan.meta("d_from", args.d_from.unwrap_or(0.1 * args.l));
        scan.meta("d_to", args.d_to.unwrap_or(2.0 * args.l));
    }
    scan.meta("steps", args.steps);
    scan.meta("log_grid", args.log_grid);
    for d in separations {
        let pair = IntervalPair::new(0.0, args.l, args.l + d, 2.0 * args.l + d)
            .map_err(|e| CliError::Computation(e.to_string()))?;
        let mi = observables::mutual_information(&g, &pair)
            .map_err(|e| CliError::Computation(e.to_string()))?;
        let phase = match mi.phase {
            MiPhase::Connected => 1.0,
            MiPhase::Disconnected => 0.0,
        };
        scan.push_row(vec![
            d,
            pair.cross_ratio(),
            mi.unclamped(g.newton_constant()),
            mi.value,
            phase,
        ]);
    }
    Ok(scan)
}

#[derive(Args, Debug)]
pub struct X0ScanArgs {
    /// Root the rotating (near-extremal) model instead of the non-rotating one
    #[arg(long)]
    pub rotating: bool,
    /// Theta sector (3 or 4)
    #[arg(long, default_value_t = 3)]
    pub sector: u8,
    /// Central charge of the boundary CFT
    #[arg(long, default_value_t = 3.0)]
    pub central_charge: f64,
    /// Interval size as a fraction of the system length
    #[arg(long, default_value_t = 0.125)]
    pub l_frac: f64,
    /// Theta-series truncation tolerance
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = 0.5)]
    pub tau_from: f64,
    #[arg(long, default_value_t = 50.0)]
    pub tau_to: f64,
    #[arg(long, default_value_t = 8)]
    pub steps: usize,
    #[arg(long)]
    pub log_grid: bool,
}

pub fn cmd_x0_scan(args: &X0ScanArgs) -> Result<ScanResult, CliError> {
    let sector = Sector::try_from(args.sector).map_err(usage)?;
    let model = if args.rotating {
        TransitionModel::RotatingTorus
    } else {
        TransitionModel::NonRotatingTorus
    };
    let mut scan = base_scan("x0-scan", &["tau_abs", "inv_tau", "x0"]);
    scan.meta("model", if args.rotating { "rotating" } else { "non-rotating" });
    scan.meta("sector", args.sector);
    scan.meta("central_charge", args.central_charge);
    scan.meta("l_frac", args.l_frac);
    scan.meta("tol", args.tol);
    scan.meta("tau_from", args.tau_from);
    scan.meta("tau_to", args.tau_to);
    scan.meta("steps", args.steps);
    scan.meta("log_grid", args.log_grid);

    let mut failures = 0usize;
    let taus = grid(args.tau_from, args.tau_to, args.steps, args.log_grid).map_err(usage)?;
    let total = taus.len();
    for tau in taus {
        match observables::transition_point_with_tol(
            model,
            tau,
            sector,
            args.central_charge,
            args.l_frac,
            args.tol,
        ) {
            Ok(x0) => scan.push_row(vec![tau, 1.0 / tau, x0]),
            Err(e) => {
                eprintln!("warning: tau_abs = {tau}: {e}");
                scan.push_row(vec![tau, 1.0 / tau, f64::NAN]);
                failures += 1;
            }
        }
    }
    if failures == total {
        return Err(CliError::Computation(
            "no transition point found on any grid row".into(),
        ));
    }
    Ok(scan)
}

#[derive(Args, Debug)]
pub struct CorrelatorArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,
    /// Scaling dimension of the probe operator
    #[arg(long, default_value_t = 1.0)]
    pub delta: f64,
    #[command(flatten)]
    pub range: RangeArgs,
}

pub fn cmd_correlator(args: &CorrelatorArgs) -> Result<ScanResult, CliError> {
    let g = args.geometry.build()?;
    let xs = args.range.values()?;
    let log_corr: Vec<f64> = xs
        .iter()
        .map(|&dx| {
            two_point_correlator_log(&g, args.delta, 0.0, dx)
                .map_err(|e| CliError::Computation(e.to_string()))
        })
        .collect::<Result<_, _>>()?;

    let mut scan = base_scan("correlator", &["dx", "corr", "log_slope"]);
    args.geometry.describe(&mut scan);
    scan.meta("delta", args.delta);
    args.range.describe(&mut scan);
    let n = xs.len();
    for i in 0..n {
        // centered differences of log corr (one-sided at the ends)
        let (a, b) = if n == 1 {
            (i, i)
        } else if i == 0 {
            (0, 1)
        } else if i == n - 1 {
            (n - 2, n - 1)
        } else {
            (i - 1, i + 1)
        };
        let slope = if a == b {
            f64::NAN
        } else {
            (log_corr[b] - log_corr[a]) / (xs[b] - xs[a])
        };
        scan.push_row(vec![xs[i], log_corr[i].exp(), slope]);
    }
    Ok(scan)
}

#[derive(Args, Debug)]
pub struct MeraArgs {
    /// Branching factor (2 or 3)
    #[arg(long, default_value_t = 2)]
    pub branch: usize,
    #[arg(long, default_value_t = 65536)]
    pub n_sites: usize,
    /// Block sizes, comma separated
    #[arg(long, value_delimiter = ',', default_value = "2,4,8,16,32,64,128,256,512")]
    pub l: Vec<usize>,
    /// Separations, comma separated (ignored with --single-block)
    #[arg(long, value_delimiter = ',', default_value = "2,4,8,16,32,64,128,256")]
    pub d: Vec<usize>,
    /// Single-block mode: emit (l, cut_length) for the log-scaling fit
    #[arg(long)]
    pub single_block: bool,
    /// Entropy per traced bond
    #[arg(long, default_value_t = 1.0)]
    pub bond_entropy: f64,
}

pub fn cmd_mera(args: &MeraArgs) -> Result<ScanResult, CliError> {
    let net = MeraNetwork::new(args.n_sites, args.branch)
        .and_then(|n| n.with_bond_entropy(args.bond_entropy))
        .map_err(usage)?;
    let base = args.n_sites / 3;
    let block = |lo: usize, l: usize| SiteInterval::new(lo, lo + l - 1).map_err(usage);

    if args.single_block {
        let mut scan = base_scan("mera", &["l", "cut_length"]);
        describe_mera(args, &mut scan);
        for &l in &args.l {
            let cut = net
                .minimal_cut(&[block(base, l)?])
                .map_err(|e| CliError::Computation(e.to_string()))?;
            scan.push_row(vec![l as f64, cut.length]);
        }
        return Ok(scan);
    }

    let mut scan = base_scan(
        "mera",
        &[
            "l",
            "d",
            "overlap_level",
            "cut_connected",
            "cut_disconnected",
            "regime_connected",
        ],
    );
    describe_mera(args, &mut scan);
    for &l in &args.l {
        for &d in &args.d {
            let a = block(base, l)?;
            let b = block(base + l - 1 + d, l)?;
            let run = || -> Result<Vec<f64>, holoent::MeraError> {
                let overlap = net
                    .cone_overlap_level(a, b)?
                    .map(|k| k as f64)
                    .unwrap_or(f64::NAN);
                let con = net.connected_cut(a, b)?;
                let dis = net.disconnected_cut(a, b)?;
                let regime = match holoent::mera::regime_classify(l, d, args.branch)? {
                    Regime::Connected => 1.0,
                    Regime::Disconnected => 0.0,
                };
                Ok(vec![l as f64, d as f64, overlap, con.length, dis.length, regime])
            };
            scan.push_row(run().map_err(|e| CliError::Computation(e.to_string()))?);
        }
    }
    Ok(scan)
}

fn describe_mera(args: &MeraArgs, scan: &mut ScanResult) {
    scan.meta("branch", args.branch);
    scan.meta("n_sites", args.n_sites);
    scan.meta("bond_entropy", args.bond_entropy);
    scan.meta("single_block", args.single_block);
    scan.meta(
        "l",
        args.l.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
    );
    scan.meta(
        "d",
        args.d.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
    );
    scan.meta("block_base", args.n_sites / 3);
}

/// Dispatches a parsed command to its implementation.
pub fn run_command(command: &Command) -> Result<ScanResult, CliError> {
    match command {
        Command::Geodesic(a) => cmd_geodesic(a),
        Command::Entropy(a) => cmd_entropy(a),
        Command::MiScan(a) => cmd_mi_scan(a),
        Command::X0Scan(a) => cmd_x0_scan(a),
        Command::Correlator(a) => cmd_correlator(a),
        Command::Mera(a) => cmd_mera(a),
    }
}
