//! Run configuration: layered defaults ← JSON config file ← command-line
//! flags, resolved into concrete packet/grid/sweep objects, and
//! re-serialized into the provenance comment that heads every CSV output.

use std::path::Path;

use serde::{Deserialize, Serialize};
use toa_core::core::{GaussianPacket, MomentumGrid, PhysicalParams};
use toa_core::spectral::Regulator;

use crate::CliError;

/// Figure-style fallbacks used when neither the config file nor a flag
/// supplies a value.
mod defaults {
    pub const X0: f64 = -5.0;
    pub const K0: f64 = 20.0;
    pub const DELTA: f64 = 0.5;
    pub const HBAR: f64 = 1.0;
    pub const MASS: f64 = 1.0;
    pub const EPSILON: f64 = 1e-3;
    pub const N_K: usize = 4096;
    pub const DETECTORS: [f64; 6] = [-5.0, -3.0, -1.0, 1.0, 3.0, 5.0];
}

/// Per-command defaults for the time sweep.
#[derive(Debug, Clone, Copy)]
pub struct TimeDefaults {
    pub t_min: f64,
    pub t_max: f64,
    pub n_t: usize,
}

/// Arrival-time sweeps cover the full reference window.
pub const ARRIVAL_TIMES: TimeDefaults = TimeDefaults {
    t_min: -0.1,
    t_max: 0.8,
    n_t: 451,
};

/// Position-density slices: six frames from release to detection.
pub const SLICE_TIMES: TimeDefaults = TimeDefaults {
    t_min: 0.0,
    t_max: 0.5,
    n_t: 6,
};

/// Raw, partial configuration as read from a JSON file. Lines starting
/// with `#` are treated as comments; unknown keys are rejected.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct FileConfig {
    pub x0: Option<f64>,
    pub k0: Option<f64>,
    pub delta: Option<f64>,
    pub hbar: Option<f64>,
    pub mass: Option<f64>,
    pub epsilon: Option<f64>,
    pub k_min: Option<f64>,
    pub k_max: Option<f64>,
    pub n_k: Option<usize>,
    pub t_min: Option<f64>,
    pub t_max: Option<f64>,
    pub n_t: Option<usize>,
    pub detectors: Option<Vec<f64>>,
    pub window: Option<f64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let raw = std::fs::read_to_string(path).map_err(|e| {
            CliError::Config(format!("cannot read config {}: {e}", path.display()))
        })?;
        let stripped: String = raw
            .lines()
            .filter(|line| !line.trim_start().starts_with('#'))
            .collect::<Vec<_>>()
            .join("\n");
        serde_json::from_str(&stripped).map_err(|e| {
            CliError::Config(format!("invalid config {}: {e}", path.display()))
        })
    }
}

/// The same option set as supplied on the command line (all optional).
/// Flags take precedence over the config file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub x0: Option<f64>,
    pub k0: Option<f64>,
    pub delta: Option<f64>,
    pub hbar: Option<f64>,
    pub mass: Option<f64>,
    pub epsilon: Option<f64>,
    pub k_min: Option<f64>,
    pub k_max: Option<f64>,
    pub n_k: Option<usize>,
    pub t_min: Option<f64>,
    pub t_max: Option<f64>,
    pub n_t: Option<usize>,
    pub detectors: Option<Vec<f64>>,
    pub window: Option<f64>,
}

/// Fully resolved run setup: every value concrete, every object validated.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub packet: GaussianPacket,
    pub params: PhysicalParams,
    pub regulator: Regulator,
    pub grid: MomentumGrid,
    pub times: Vec<f64>,
    pub detectors: Vec<f64>,
    pub window: Option<f64>,
    provenance: Provenance,
}

/// Concrete configuration echoed into output headers; field order fixes
/// the serialized layout, keeping reruns byte-identical.
#[derive(Debug, Clone, Serialize)]
struct Provenance {
    x0: f64,
    k0: f64,
    delta: f64,
    hbar: f64,
    mass: f64,
    epsilon: f64,
    k_min: f64,
    k_max: f64,
    n_k: usize,
    t_min: f64,
    t_max: f64,
    n_t: usize,
    detectors: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    window: Option<f64>,
}

fn config_err(e: toa_core::Error) -> CliError {
    CliError::Config(e.to_string())
}

/// Merges file and flag layers over the built-in defaults and validates
/// everything a command needs before any computation starts.
pub fn resolve(
    file: &FileConfig,
    flags: &Overrides,
    time_defaults: TimeDefaults,
) -> Result<Resolved, CliError> {
    let x0 = flags.x0.or(file.x0).unwrap_or(defaults::X0);
    let k0 = flags.k0.or(file.k0).unwrap_or(defaults::K0);
    let delta = flags.delta.or(file.delta).unwrap_or(defaults::DELTA);
    let hbar = flags.hbar.or(file.hbar).unwrap_or(defaults::HBAR);
    let mass = flags.mass.or(file.mass).unwrap_or(defaults::MASS);
    let epsilon = flags.epsilon.or(file.epsilon).unwrap_or(defaults::EPSILON);
    let n_k = flags.n_k.or(file.n_k).unwrap_or(defaults::N_K);
    let t_min = flags.t_min.or(file.t_min).unwrap_or(time_defaults.t_min);
    let t_max = flags.t_max.or(file.t_max).unwrap_or(time_defaults.t_max);
    let n_t = flags.n_t.or(file.n_t).unwrap_or(time_defaults.n_t);
    let detectors = flags
        .detectors
        .clone()
        .or_else(|| file.detectors.clone())
        .unwrap_or_else(|| defaults::DETECTORS.to_vec());
    let window = flags.window.or(file.window);

    let params = PhysicalParams::new(hbar, mass, epsilon).map_err(config_err)?;
    let regulator = Regulator::from_params(&params).map_err(config_err)?;
    let packet = GaussianPacket::with_params(x0, k0, delta, params).map_err(config_err)?;

    if n_k < 2 {
        return Err(CliError::Config(format!("n_k must be at least 2, got {n_k}")));
    }
    if n_t < 2 {
        return Err(CliError::Config(format!("n_t must be at least 2, got {n_t}")));
    }
    let grid = match (flags.k_min.or(file.k_min), flags.k_max.or(file.k_max)) {
        (Some(lo), Some(hi)) => MomentumGrid::new(lo, hi, n_k).map_err(config_err)?,
        (None, None) => MomentumGrid::for_packet_sized(&packet, &params, n_k).map_err(config_err)?,
        _ => {
            return Err(CliError::Config(
                "k_min and k_max must be given together (or neither)".into(),
            ))
        }
    };

    if !(t_min.is_finite() && t_max.is_finite()) {
        return Err(CliError::Config(format!(
            "time window must be finite, got [{t_min}, {t_max}]"
        )));
    }
    if t_min > t_max {
        return Err(CliError::Config(format!(
            "time window is reversed: [{t_min}, {t_max}]"
        )));
    }
    if detectors.is_empty() {
        return Err(CliError::Config("detector list must not be empty".into()));
    }
    if detectors.iter().any(|x| !x.is_finite()) {
        return Err(CliError::Config("detector positions must be finite".into()));
    }
    if let Some(w) = window {
        if !(w.is_finite() && w >= 0.0) {
            return Err(CliError::Config(format!(
                "smoothing window must be finite and nonnegative, got {w}"
            )));
        }
    }

    // A degenerate window means a single sample at that time.
    let times: Vec<f64> = if t_min == t_max {
        vec![t_min]
    } else {
        let step = (t_max - t_min) / (n_t - 1) as f64;
        (0..n_t).map(|j| t_min + j as f64 * step).collect()
    };

    let provenance = Provenance {
        x0,
        k0,
        delta,
        hbar,
        mass,
        epsilon,
        k_min: grid.k_min(),
        k_max: grid.k_max(),
        n_k,
        t_min,
        t_max,
        n_t,
        detectors: detectors.clone(),
        window,
    };

    Ok(Resolved {
        packet,
        params,
        regulator,
        grid,
        times,
        detectors,
        window,
        provenance,
    })
}

impl Resolved {
    /// `#`-prefixed header lines recording the exact configuration.
    pub fn provenance_comments(&self, command: &str) -> String {
        let json = serde_json::to_string(&self.provenance)
            .expect("provenance serialization cannot fail");
        format!("# command: {command}\n# config: {json}\n")
    }

    /// The single detector required by commands that observe one point.
    pub fn sole_detector(&self, command: &str) -> Result<f64, CliError> {
        if self.detectors.len() != 1 {
            return Err(CliError::Config(format!(
                "{command} needs exactly one detector, got {} (pass --detectors X)",
                self.detectors.len()
            )));
        }
        Ok(self.detectors[0])
    }
}
