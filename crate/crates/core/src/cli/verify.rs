use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{closed_form_checks, ClosedFormCheck, PavingReport};
use crate::cli::job::Job;
use crate::combinatorics::{
    cell_dimension_bundle, valid_unchecked, MatrixIndexData, MultiTableau, Permutation,
};
use crate::matrixforms::{
    cell_dimension_rank_oracle, point_count_oracle, PrimeField, POINT_COUNT_GUARD,
};
use crate::roots::{cell_dimension_root, is_nonempty_root, RootSets};
use crate::{Error, Result};

/// Outcome of every oracle run by `verify`.
#[derive(Clone, Debug, Serialize)]
pub struct Verification {
    pub bundle: bool,
    pub root: bool,
    pub rank_oracle: bool,
    pub nonempty: bool,
    /// Keyed by `q`; primes that were skipped are absent.
    pub point_count: BTreeMap<String, bool>,
    pub closed_forms: Vec<ClosedFormCheck>,
    #[serde(skip)]
    pub first_disagreement: Option<String>,
    #[serde(skip)]
    pub warnings: Vec<String>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.first_disagreement.is_none()
    }

    fn disagree(&mut self, msg: String) {
        self.first_disagreement.get_or_insert(msg);
    }
}

pub fn verify(job: &Job, mt: &MultiTableau, report: &PavingReport) -> Result<Verification> {
    let h = &job.h;
    let n = mt.n();
    let index = MatrixIndexData::for_tableau(mt);
    let roots = RootSets::for_tableau(mt, h)?;
    let mut v = Verification {
        bundle: true,
        root: true,
        rank_oracle: true,
        nonempty: true,
        point_count: BTreeMap::new(),
        closed_forms: Vec::new(),
        first_disagreement: None,
        warnings: Vec::new(),
    };

    let enumerated: BTreeSet<&Permutation> = report.cells.iter().map(|c| &c.permutation).collect();
    for w in Permutation::all(n) {
        let tableau = valid_unchecked(mt, &w, h);
        let bundle = index.is_nonempty(&w, h);
        let root = is_nonempty_root(&w, &roots);
        let listed = enumerated.contains(&w);
        if !(tableau == bundle && bundle == root && root == listed) {
            v.nonempty = false;
            v.disagree(format!(
                "nonemptiness of w = {w}: tableau {tableau}, bundle {bundle}, root {root}, enumerated {listed}"
            ));
            break;
        }
    }

    for cell in &report.cells {
        let w = &cell.permutation;
        let bundle = cell_dimension_bundle(w, &index, h)?;
        if bundle != cell.dimension {
            v.bundle = false;
            v.disagree(format!(
                "w = {w}: tableau dimension {}, bundle dimension {bundle}",
                cell.dimension
            ));
        }
        let root = cell_dimension_root(w, &roots)?;
        if root != cell.dimension {
            v.root = false;
            v.disagree(format!(
                "w = {w}: tableau dimension {}, root dimension {root}",
                cell.dimension
            ));
        }
    }

    let seed = job.spec.seed;
    let oracle = |(idx, cell): (usize, &crate::combinatorics::CellRecord)| {
        cell_dimension_rank_oracle(&cell.permutation, mt, h, seed.wrapping_add(idx as u64))
    };
    let ranks: Vec<Result<usize>> = if job.spec.jobs == 1 {
        report.cells.iter().enumerate().map(oracle).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(job.spec.jobs)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
            .install(|| report.cells.par_iter().enumerate().map(oracle).collect())
    };
    for (cell, rank) in report.cells.iter().zip(ranks) {
        let rank = rank?;
        if rank != cell.dimension {
            v.rank_oracle = false;
            v.disagree(format!(
                "w = {}: tableau dimension {}, rank oracle dimension {rank}",
                cell.permutation, cell.dimension
            ));
        }
    }

    let dims: BTreeMap<&Permutation, usize> = report
        .cells
        .iter()
        .map(|c| (&c.permutation, c.dimension))
        .collect();
    for &q in &job.spec.q_list {
        let field =
            PrimeField::new(q).map_err(|_| Error::Parse(format!("--q: {q} is not a prime")))?;
        if field.order() < mt.tableaux().len() as u64 {
            v.warnings.push(format!(
                "skipping q = {q}: F_{q} has fewer than {} distinct eigenvalues",
                mt.tableaux().len()
            ));
            continue;
        }
        if n > POINT_COUNT_GUARD && !job.spec.force {
            v.warnings.push(format!(
                "skipping q = {q}: point count guard n = {n} > {POINT_COUNT_GUARD} (pass --force to override)"
            ));
            continue;
        }
        let counts = point_count_oracle(mt, h, q, job.spec.force)?;
        let mut ok = true;
        for (w, &count) in &counts.per_cell {
            let expected = dims.get(w).map_or(0, |&d| q.pow(d as u32));
            if count != expected {
                ok = false;
                v.disagree(format!(
                    "w = {w}: {count} points over F_{q}, expected {expected}"
                ));
            }
        }
        let poincare = report.poincare_at(q);
        if counts.total != poincare {
            ok = false;
            v.disagree(format!(
                "{} points over F_{q}, but P({q}) = {poincare}",
                counts.total
            ));
        }
        v.point_count.insert(q.to_string(), ok);
    }

    v.closed_forms = closed_form_checks(&job.jordan, h, report);
    for c in v.closed_forms.clone() {
        if !c.passed {
            v.disagree(format!(
                "{}: expected {}, got {}",
                c.name, c.expected, c.actual
            ));
        }
    }
    Ok(v)
}
