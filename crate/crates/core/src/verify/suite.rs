//! Named suites split into independent jobs, so a caller can run them on
//! a thread pool and still print a deterministic report.

use std::fmt;
use std::str::FromStr;

use super::{
    basis_dimensions, basis_triangularity, cover_rules, double_eta_table, elementary_identities,
    family_identities, hat_cover_rules, hat_eta_table, hat_sums, ideal_witnesses, quotient_laws,
    reconstruction, splitting, weyl_laws, EtaCache, IdentityRange, Report, SampleConfig,
};
use crate::error::EtaError;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Tables,
    Identities,
    Covers,
    Hat,
    Splitting,
    Basis,
    All,
}

impl Suite {
    pub const NAMES: &'static [&'static str] = &[
        "tables",
        "identities",
        "covers",
        "hat",
        "splitting",
        "basis",
        "all",
    ];
}

impl FromStr for Suite {
    type Err = EtaError;

    fn from_str(s: &str) -> Result<Self, EtaError> {
        Ok(match s {
            "tables" => Suite::Tables,
            "identities" => Suite::Identities,
            "covers" => Suite::Covers,
            "hat" | "hat-sum" => Suite::Hat,
            "splitting" => Suite::Splitting,
            "basis" | "reconstruction" => Suite::Basis,
            "all" => Suite::All,
            other => {
                return Err(EtaError::Parse {
                    pos: 0,
                    msg: format!(
                        "unknown suite {other:?}; expected one of {}",
                        Suite::NAMES.join(", ")
                    ),
                })
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Tables => "tables",
            Suite::Identities => "identities",
            Suite::Covers => "covers",
            Suite::Hat => "hat",
            Suite::Splitting => "splitting",
            Suite::Basis => "basis",
            Suite::All => "all",
        };
        f.write_str(name)
    }
}

/// Overrides for the default ranges. `None` keeps the default.
#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub k: Option<u32>,
    pub n: Option<u32>,
    pub seed: Option<u64>,
    pub max_weight: Option<u32>,
}

impl SuiteConfig {
    fn ks(&self, default: &[u32]) -> Vec<u32> {
        match self.k {
            Some(k) => vec![k],
            None => default.to_vec(),
        }
    }
}

/// One independently runnable piece of a suite.
pub struct Job {
    pub label: String,
    run: Box<dyn FnOnce() -> Report + Send>,
}

impl Job {
    fn new(label: impl Into<String>, run: impl FnOnce() -> Report + Send + 'static) -> Self {
        Job {
            label: label.into(),
            run: Box::new(run),
        }
    }

    pub fn run(self) -> Report {
        (self.run)()
    }
}

impl fmt::Debug for Job {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Job").field("label", &self.label).finish()
    }
}

/// The jobs of `suite`, in the order their reports should be printed.
pub fn jobs(suite: Suite, cfg: &SuiteConfig) -> Vec<Job> {
    let mut out = Vec::new();
    let c = cfg.clone();
    match suite {
        Suite::All => {
            for s in [
                Suite::Tables,
                Suite::Identities,
                Suite::Covers,
                Suite::Hat,
                Suite::Basis,
                Suite::Splitting,
            ] {
                out.extend(jobs(s, cfg));
            }
        }
        Suite::Tables => {
            out.push(Job::new("tables", || {
                let mut r = double_eta_table();
                r.extend(hat_eta_table());
                r
            }));
        }
        Suite::Identities => {
            let max_k = c.k.unwrap_or(3);
            let seed = c.seed.unwrap_or(SampleConfig::default().seed);
            let sample = SampleConfig {
                seed,
                max_k,
                ..SampleConfig::default()
            };
            let range = IdentityRange {
                max_k,
                ..IdentityRange::default()
            };
            out.push(Job::new("family identities", move || family_identities(range)));
            out.push(Job::new("weyl laws", move || weyl_laws(sample)));
            let quotient = SampleConfig {
                samples: 60,
                max_degree: 8,
                ..sample
            };
            out.push(Job::new("quotient laws", move || quotient_laws(quotient)));
            out.push(Job::new("elementary", || elementary_identities(8, 6)));
        }
        Suite::Covers => {
            let n = c.n.unwrap_or(5);
            for k in c.ks(&[1, 2]) {
                out.push(Job::new(format!("covers k={k} n={n}"), move || {
                    let mut cache = EtaCache::new();
                    let mut r = cover_rules(k, n, &mut cache);
                    r.extend(ideal_witnesses(k, &mut cache));
                    r.extend(hat_cover_rules(k, n, &mut cache));
                    r
                }));
            }
        }
        Suite::Hat => {
            let ks = c.ks(&[1, 2]);
            let w = c.max_weight.unwrap_or(8);
            out.push(Job::new("hat sums", move || {
                hat_sums(&ks, w, &mut EtaCache::new())
            }));
        }
        Suite::Basis => {
            let ks = c.ks(&[1, 2]);
            let w = c.max_weight.unwrap_or(8);
            out.push(Job::new("triangularity", move || {
                basis_triangularity(&ks, w, &mut EtaCache::new())
            }));
            let ks = c.ks(&[1, 2, 3]);
            let d = c.max_weight.unwrap_or(10);
            out.push(Job::new("dimensions", move || basis_dimensions(&ks, d)));
            let k = c.k.unwrap_or(1);
            let n = c.n.unwrap_or(k + 3);
            out.push(Job::new(format!("reconstruction k={k} n={n}"), move || {
                reconstruction(k, n, &mut EtaCache::new())
            }));
        }
        Suite::Splitting => {
            let ks = c.ks(&[1, 2]);
            let w = c.max_weight.unwrap_or(6);
            out.push(Job::new("splitting", move || {
                splitting(&ks, w, &mut EtaCache::new())
            }));
        }
    }
    out
}
