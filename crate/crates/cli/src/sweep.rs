//! Exhaustive sweeps, one share-nothing job per triangulation.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use syzygy_core::polygon::enumerate_polygon_triangulations;
use syzygy_core::surface::{normalized_triangulations, Triangulation};
use syzygy_core::verify::{check_polygon, check_triangulation, PolygonCheck, SweepSummary, Tally};
use syzygy_core::Field;

use crate::CliError;

fn pool(jobs: usize) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| CliError::Input(format!("--jobs: {e}")))
}

/// Runs every check on the given triangulations and merges the results.
pub fn run(tris: &[Triangulation], f: Field, seed: u64, jobs: usize) -> Result<(SweepSummary, Duration), CliError> {
    let start = Instant::now();
    let parts: Vec<Result<SweepSummary, CliError>> = pool(jobs)?.install(|| {
        tris.par_iter()
            .map(|t| {
                let c = check_triangulation(t, f, seed)?;
                let mut s = SweepSummary::default();
                s.absorb(t, &c);
                Ok(s)
            })
            .collect()
    });
    let mut total = SweepSummary::default();
    for p in parts {
        total.merge(&p?);
    }
    Ok((total, start.elapsed()))
}

/// All triangulations of the once-punctured `n`-gon up to a global
/// change of tags.
pub fn punctured(n: usize, f: Field, seed: u64, jobs: usize) -> Result<(SweepSummary, Duration), CliError> {
    run(&normalized_triangulations(n), f, seed, jobs)
}

#[derive(Clone, Debug, Default)]
pub struct PolygonSummary {
    pub triangulations: usize,
    pub cmp: Tally,
    pub period3: Tally,
    /// Internal triangles met.
    pub triangles: usize,
}

impl PolygonSummary {
    pub fn absorb(&mut self, c: &PolygonCheck) {
        self.triangulations += 1;
        self.cmp.record(c.cmp_match);
        self.period3.merge(&c.period3);
        self.triangles += c.t;
    }

    pub fn ok(&self) -> bool {
        self.cmp.ok() && self.period3.ok()
    }
}

pub fn polygon(n: usize, f: Field, jobs: usize) -> Result<(PolygonSummary, Duration), CliError> {
    let start = Instant::now();
    let tris = enumerate_polygon_triangulations(n);
    let checks: Vec<Result<PolygonCheck, CliError>> =
        pool(jobs)?.install(|| tris.par_iter().map(|t| Ok(check_polygon(t, f)?)).collect());
    let mut s = PolygonSummary::default();
    for c in checks {
        s.absorb(&c?);
    }
    Ok((s, start.elapsed()))
}
