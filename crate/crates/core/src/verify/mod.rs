//! Randomized verification sweeps over every implemented identity.
//!
//! Exact cases clear denominators and compare formal series (or rational
//! functions) coefficient by coefficient. Float cases report a relative
//! residual and pass when it is at most `2^{-(p-16)}` times a condition
//! factor. Parameters are drawn per trial from a seeded ChaCha stream, so a
//! report depends only on its configuration.

mod checks;
pub mod golden;
pub mod sample;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::numerics::{BigFloat, Precision, Scalar};
use checks::{check_float, ExactTrial};
pub use sample::{draw, Draw, DrawStrings};

macro_rules! identities {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
        pub enum IdentityId {
            $(#[serde(rename = $name)] $variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name,)*
                }
            }
        }

        impl FromStr for IdentityId {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, String> {
                match s {
                    $($name => Ok(IdentityId::$variant),)*
                    _ => Err(format!("unknown identity {s:?}")),
                }
            }
        }
    };
}

identities! {
    Trr1phi1 => "3trr_1phi1",
    Trr1phi1Tilde => "3trr_1phi1_2",
    Trr0phi1 => "3trr_0phi1",
    TrrJ3 => "3trr_J3",
    TrrJ2 => "3trr_J2",
    RelationSt => "relation_ST",
    RelationTildeSt => "relation_tStT",
    RelationUv => "relation_UV",
    SEqCaxStilde => "S_eq_cax_Stilde",
    Lommel2 => "lommel2",
    Lommel3 => "lommel3",
    ChuVandermonde => "chu_vandermonde",
    Lemma31 => "lemma31",
    Special1phi1 => "special_1phi1",
    Special0phi1 => "special_0phi1",
    J1J2 => "J1_J2",
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn cube(k: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for a in -k..=k {
        for b in -k..=k {
            for c in -k..=k {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

fn square(k: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for a in -k..=k {
        for b in -k..=k {
            out.push(vec![a, b]);
        }
    }
    out
}

impl IdentityId {
    /// Shift indices enumerated for this identity. `max_shift` bounds the
    /// recurrence grids; the oracle identities use fixed small ranges.
    pub fn shifts(self, max_shift: i64, mode: Mode) -> Vec<Vec<i64>> {
        use IdentityId::*;
        match self {
            Trr1phi1 | Trr1phi1Tilde | RelationSt | RelationTildeSt | SEqCaxStilde => {
                cube(max_shift)
            }
            Trr0phi1 | RelationUv | TrrJ3 | TrrJ2 => square(max_shift),
            Lommel2 | Lommel3 => (1..=6).map(|m| vec![m]).collect(),
            ChuVandermonde => (0..=8).map(|j| vec![j]).collect(),
            Lemma31 => {
                let mut out = Vec::new();
                for r in 0..=1 {
                    for j in 0..=4 {
                        for n1 in 0..=if r == 1 { 2 } else { 0 } {
                            for s in 0..=1 {
                                out.push(vec![r, j, n1, s]);
                            }
                        }
                    }
                }
                out
            }
            Special1phi1 => match mode {
                Mode::Exact => (0..=6).map(|m| vec![m]).collect(),
                Mode::Float => vec![vec![]],
            },
            Special0phi1 | J1J2 => vec![vec![]],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Mode {
    #[serde(rename = "exact-formal")]
    Exact,
    #[serde(rename = "float")]
    Float,
}

impl Mode {
    fn flag(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped-pole")]
    SkippedPole,
}

/// Exact cases report the first nonvanishing coefficient; float cases the relative residual.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Residual {
    Coefficient { index: usize, value: String },
    Relative(String),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseResult {
    pub id: IdentityId,
    pub shifts: Vec<i64>,
    pub trial: u64,
    pub params: Arc<DrawStrings>,
    pub mode: Mode,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Residual>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub repro: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepConfig {
    pub suite: Vec<IdentityId>,
    pub max_shift: i64,
    pub trials: u64,
    pub seed: u64,
    pub modes: Vec<Mode>,
    pub order: usize,
    pub precision: u32,
    /// Multiplier on `2^{-(p-16)}` for float passes.
    pub cond: f64,
    #[serde(skip)]
    pub jobs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub only_shift: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub only_trial: Option<u64>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            suite: IdentityId::ALL.to_vec(),
            max_shift: 4,
            trials: 100,
            seed: 0,
            modes: vec![Mode::Exact, Mode::Float],
            order: crate::numerics::DEFAULT_ORDER,
            precision: crate::numerics::DEFAULT_PRECISION,
            cond: 1e3,
            jobs: 1,
            only_shift: None,
            only_trial: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped_pole: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub config: SweepConfig,
    pub cases: Vec<CaseResult>,
    pub totals: Totals,
    /// Wall time of the sweep; kept out of the JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn success(&self) -> bool {
        self.totals.fail == 0
    }

    pub fn totals_for(&self, id: IdentityId, mode: Mode) -> Totals {
        tally(self.cases.iter().filter(|c| c.id == id && c.mode == mode))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Per-identity counts, followed by every failing case.
    pub fn table(&self) -> String {
        let mut out = format!(
            "{:<18} {:<12} {:>8} {:>8} {:>6} {:>6}\n",
            "identity", "mode", "cases", "pass", "fail", "pole"
        );
        for &id in &self.config.suite {
            for &mode in &self.config.modes {
                let t = self.totals_for(id, mode);
                if t.total == 0 {
                    continue;
                }
                out += &format!(
                    "{:<18} {:<12} {:>8} {:>8} {:>6} {:>6}\n",
                    id.name(),
                    mode.flag(),
                    t.total,
                    t.pass,
                    t.fail,
                    t.skipped_pole
                );
            }
        }
        let t = &self.totals;
        out += &format!(
            "total: {} cases, {} pass, {} fail, {} skipped-pole in {:.2?}\n",
            t.total, t.pass, t.fail, t.skipped_pole, self.elapsed
        );
        for c in self.cases.iter().filter(|c| c.status == Status::Fail) {
            out += &format!(
                "FAIL {} {:?} trial {}: {}\n  {}\n",
                c.id,
                c.shifts,
                c.trial,
                c.detail.as_deref().unwrap_or(""),
                c.repro.as_deref().unwrap_or("")
            );
        }
        out
    }
}

fn tally<'a>(cases: impl Iterator<Item = &'a CaseResult>) -> Totals {
    let mut t = Totals::default();
    for c in cases {
        t.total += 1;
        match c.status {
            Status::Pass => t.pass += 1,
            Status::Fail => t.fail += 1,
            Status::SkippedPole => t.skipped_pole += 1,
        }
    }
    t
}

fn repro(cfg: &SweepConfig, id: IdentityId, mode: Mode, trial: u64, shifts: &[i64]) -> String {
    let mut s = format!(
        "qcontig verify --suite {} --mode {} --max-shift {} --trials {} --seed {} --order {} --prec {} --cond {} --only-trial {}",
        id,
        mode.flag(),
        cfg.max_shift,
        cfg.trials,
        cfg.seed,
        cfg.order,
        cfg.precision,
        cfg.cond,
        trial
    );
    if !shifts.is_empty() {
        let list: Vec<String> = shifts.iter().map(i64::to_string).collect();
        s += &format!(" --only-shift={}", list.join(","));
    }
    s
}

struct Verdict {
    status: Status,
    residual: Option<Residual>,
    detail: Option<String>,
}

fn verdict_exact(r: crate::error::Result<checks::ExactOutcome>) -> Verdict {
    match r {
        Ok(None) => Verdict {
            status: Status::Pass,
            residual: None,
            detail: None,
        },
        Ok(Some(m)) => Verdict {
            status: Status::Fail,
            detail: Some(format!("coefficient {} is {}", m.index, m.value)),
            residual: Some(Residual::Coefficient {
                index: m.index,
                value: m.value.to_string(),
            }),
        },
        Err(e) => error_verdict(e),
    }
}

fn verdict_float(r: crate::error::Result<BigFloat>, threshold: &BigFloat) -> Verdict {
    match r {
        Ok(res) => {
            let pass = res <= *threshold;
            Verdict {
                status: if pass { Status::Pass } else { Status::Fail },
                detail: (!pass).then(|| format!("relative residual {:.3e}", res.to_f64())),
                residual: Some(Residual::Relative(format!("{:.6e}", res.to_f64()))),
            }
        }
        Err(e) => error_verdict(e),
    }
}

fn error_verdict(e: Error) -> Verdict {
    Verdict {
        status: if e.is_pole() {
            Status::SkippedPole
        } else {
            Status::Fail
        },
        residual: None,
        detail: Some(e.to_string()),
    }
}

fn run_trial(cfg: &SweepConfig, trial: u64) -> Vec<CaseResult> {
    let d = draw(cfg.seed, trial);
    let params = Arc::new(d.strings());
    let prec = Precision(cfg.precision);
    let threshold =
        BigFloat::exp2(prec, 16 - cfg.precision as i32) * &BigFloat::new(prec, cfg.cond);
    let mut out = Vec::new();
    for &mode in &cfg.modes {
        let mut exact = ExactTrial::new(&d, cfg.order);
        for &id in &cfg.suite {
            for shifts in id.shifts(cfg.max_shift, mode) {
                if cfg.only_shift.as_ref().is_some_and(|s| *s != shifts) {
                    continue;
                }
                let v = match mode {
                    Mode::Exact => verdict_exact(exact.check(id, &shifts)),
                    Mode::Float => verdict_float(check_float(id, &shifts, &d, prec), &threshold),
                };
                let repro =
                    (v.status == Status::Fail).then(|| repro(cfg, id, mode, trial, &shifts));
                out.push(CaseResult {
                    id,
                    shifts,
                    trial,
                    params: params.clone(),
                    mode,
                    status: v.status,
                    residual: v.residual,
                    detail: v.detail,
                    repro,
                });
            }
        }
    }
    out
}

/// Runs every identity of `cfg.suite` over its shift grid for each trial.
///
/// Trials fan out over `cfg.jobs` threads; cases are sorted by
/// `(id, mode, trial, shifts)` before the report is assembled.
pub fn run_sweep(cfg: &SweepConfig) -> Report {
    let start = Instant::now();
    let trials: Vec<u64> = match cfg.only_trial {
        Some(t) => vec![t],
        None => (0..cfg.trials).collect(),
    };
    let mut cases: Vec<CaseResult> = if cfg.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| trials.par_iter().flat_map(|&t| run_trial(cfg, t)).collect())
    } else {
        trials.iter().flat_map(|&t| run_trial(cfg, t)).collect()
    };
    cases.sort_by(|a, b| {
        (a.id, a.mode, a.trial, &a.shifts).cmp(&(b.id, b.mode, b.trial, &b.shifts))
    });
    let totals = tally(cases.iter());
    Report {
        config: cfg.clone(),
        cases,
        totals,
        elapsed: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(modes: Vec<Mode>) -> SweepConfig {
        SweepConfig {
            max_shift: 1,
            trials: 2,
            seed: 11,
            modes,
            order: 16,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn names_round_trip() {
        for &id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        assert_eq!(IdentityId::ALL.len(), 16);
    }

    #[test]
    fn every_identity_has_both_modes() {
        let r = run_sweep(&small(vec![Mode::Exact, Mode::Float]));
        for &id in IdentityId::ALL {
            for mode in [Mode::Exact, Mode::Float] {
                let t = r.totals_for(id, mode);
                assert!(t.total > 0, "{id} {mode:?}");
                assert_eq!(t.fail, 0, "{id} {mode:?}\n{}", r.table());
            }
        }
    }

    #[test]
    fn identity_shift_sweep_passes() {
        let cfg = SweepConfig {
            max_shift: 0,
            trials: 1,
            ..SweepConfig::default()
        };
        assert!(run_sweep(&cfg).success());
    }

    #[test]
    fn deterministic_json() {
        let cfg = small(vec![Mode::Exact]);
        assert_eq!(run_sweep(&cfg).to_json(), run_sweep(&cfg).to_json());
    }
}
