//! CSV emission. Floats use 15 significant digits in exponent form, so a
//! given configuration always produces the same bytes.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use itdual_core::duality::CrossValidation;
use itdual_core::{Detection, Phase, Profile, Root, Star};

use crate::config::RunConfig;

/// `{:.14e}`; the sign of zero is dropped.
pub fn fmt_float(x: f64) -> String {
    if x == 0.0 {
        format!("{:.14e}", 0.0)
    } else {
        format!("{x:.14e}")
    }
}

fn create(dir: &Path, name: &str) -> io::Result<BufWriter<File>> {
    fs::create_dir_all(dir)?;
    Ok(BufWriter::new(File::create(dir.join(name))?))
}

/// Copy of the effective configuration, written next to the tables.
pub fn write_config_snapshot(dir: &Path, cfg: &RunConfig) -> io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join("config.toml");
    fs::write(&path, cfg.to_toml_string())?;
    Ok(path)
}

pub fn write_phases(dir: &Path, rows: &[Vec<Phase>]) -> io::Result<()> {
    let mut w = create(dir, "phases.csv")?;
    writeln!(w, "k,m,delta_hat")?;
    for row in rows {
        for r in row {
            writeln!(w, "{},{},{}", fmt_float(r.k), r.m, fmt_float(r.delta_hat))?;
        }
    }
    w.flush()
}

pub fn write_star(dir: &Path, track: &[Star]) -> io::Result<()> {
    let mut w = create(dir, "star.csv")?;
    writeln!(w, "k,delta_star,argmax_mode,regime")?;
    for s in track {
        writeln!(w, "{},{},{},{}", fmt_float(s.k), fmt_float(s.delta_star), s.argmax_mode, s.regime.as_str())?;
    }
    w.flush()
}

pub fn write_roots(dir: &Path, roots: &[Root]) -> io::Result<()> {
    let mut w = create(dir, "roots.csv")?;
    writeln!(w, "m,k,residual,multiplicity_hint")?;
    for r in roots {
        writeln!(w, "{},{},{},{}", r.m, fmt_float(r.k), fmt_float(r.residual), r.multiplicity_hint)?;
    }
    w.flush()
}

/// One row per event; unmatched events leave the last two columns empty.
/// The cross-validation verdict follows as a `#` comment line.
pub fn write_detected(dir: &Path, check: &CrossValidation<f64>) -> io::Result<()> {
    let mut w = create(dir, "detected.csv")?;
    writeln!(w, "k_estimate,side,mode,peak_phase,matched_k,mismatch")?;
    for d in &check.detected {
        write_detection(&mut w, d)?;
    }
    writeln!(w, "# verdict: {}", check.verdict())?;
    w.flush()
}

fn write_detection(w: &mut impl Write, d: &Detection) -> io::Result<()> {
    let (matched_k, mismatch) = match d.matched_root {
        Some((root, gap)) => (fmt_float(root.k), fmt_float(gap)),
        None => (String::new(), String::new()),
    };
    writeln!(
        w,
        "{},{},{},{},{},{}",
        fmt_float(d.k_estimate),
        d.approach_side.as_str(),
        d.mode,
        fmt_float(d.peak_phase),
        matched_k,
        mismatch
    )
}

/// Column name for a ladder offset, e.g. `ladder_1e-2`.
pub fn ladder_column(offset: f64) -> String {
    format!("ladder_{offset:e}")
}

pub fn write_profile(dir: &Path, profile: &Profile) -> io::Result<()> {
    let mut w = create(dir, "profile.csv")?;
    let mut header = String::from("r,value");
    for step in &profile.ladder {
        header.push(',');
        header.push_str(&ladder_column(step.offset));
    }
    writeln!(w, "{header}")?;
    for (i, (&r, &v)) in profile.limit.r_samples.iter().zip(&profile.limit.values).enumerate() {
        write!(w, "{},{}", fmt_float(r), fmt_float(v))?;
        for step in &profile.ladder {
            write!(w, ",{}", fmt_float(step.values[i]))?;
        }
        writeln!(w)?;
    }
    w.flush()?;

    let mut w = create(dir, "ladder.csv")?;
    writeln!(w, "offset,k,phase,distance")?;
    for step in &profile.ladder {
        writeln!(
            w,
            "{},{},{},{}",
            fmt_float(step.offset),
            fmt_float(step.k),
            fmt_float(step.phase),
            fmt_float(step.distance)
        )?;
    }
    w.flush()
}
