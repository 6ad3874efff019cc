use rayon::prelude::*;

use crate::action::MagmaAction;
use crate::algebra::{enumerate_maps, FiniteMagma, FiniteMap};
use crate::enumeration::sbp::Parallelism;
use crate::enumeration::structures::{enumerate_structures, Dedup, StructureFilter};
use crate::error::{AlgebraError, Result};

/// Largest carrier order for either side of the census.
pub const MAX_CENSUS_ORDER: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CensusFlags {
    pub valid: bool,
    /// Only set on valid actions.
    pub representable: bool,
    /// Only set on valid actions.
    pub associative: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    /// Position in the deterministic sweep order `(θ, φ, h, t)`.
    pub index: u64,
    pub action: MagmaAction,
    pub flags: CensusFlags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CensusSummary {
    pub total: u64,
    pub valid: u64,
    pub representable: u64,
    pub associative: u64,
    pub representable_not_associative: u64,
    pub associative_not_representable: u64,
}

impl CensusSummary {
    fn record(&mut self, f: CensusFlags) {
        self.total += 1;
        if f.valid {
            self.valid += 1;
            self.representable += f.representable as u64;
            self.associative += f.associative as u64;
            self.representable_not_associative += (f.representable && !f.associative) as u64;
            self.associative_not_representable += (f.associative && !f.representable) as u64;
        }
    }

    fn merge(mut self, o: CensusSummary) -> CensusSummary {
        self.total += o.total;
        self.valid += o.valid;
        self.representable += o.representable;
        self.associative += o.associative;
        self.representable_not_associative += o.representable_not_associative;
        self.associative_not_representable += o.associative_not_representable;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub summary: CensusSummary,
    /// Valid actions where representability and associativity disagree,
    /// in sweep order.
    pub flagged: Vec<CensusEntry>,
}

pub fn classify(action: &MagmaAction) -> CensusFlags {
    if !action.is_action() {
        return CensusFlags::default();
    }
    CensusFlags {
        valid: true,
        representable: action.is_representable().holds(),
        associative: action
            .is_associative_action()
            .expect("R is closed on a valid action")
            .holds(),
    }
}

/// Classifies every six-tuple with `|X| = x_order`, `|B| = b_order` and
/// calls `visit` on each. Tuples are indexed by `((θ·Nφ + φ)·Nh + h)·Nt + t`
/// with every component in lexicographic order; under `Parallel` the
/// visitor runs concurrently and out of order, so it should only collect.
pub fn visit_census<F>(x_order: usize, b_order: usize, mode: Parallelism, visit: F) -> Result<CensusSummary>
where
    F: Fn(u64, &MagmaAction, CensusFlags) + Sync,
{
    for n in [x_order, b_order] {
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        if n > MAX_CENSUS_ORDER {
            return Err(AlgebraError::OrderTooLarge {
                requested: n,
                limit: MAX_CENSUS_ORDER,
            });
        }
    }
    let thetas = enumerate_structures(b_order, StructureFilter::Magma, Dedup::None)?;
    let hs: Vec<FiniteMap> = enumerate_maps(x_order, b_order).collect();
    let ts: Vec<FiniteMap> = enumerate_maps(b_order, x_order).collect();
    let cells = (x_order * b_order).pow(2);
    let n_phi = (x_order as u64).pow(cells as u32);
    let (n_h, n_t) = (hs.len() as u64, ts.len() as u64);

    let mut jobs = Vec::new();
    for ti in 0..thetas.len() {
        for hi in 0..hs.len() {
            for si in 0..ts.len() {
                jobs.push((ti, hi, si));
            }
        }
    }
    let sweep = |&(ti, hi, si): &(usize, usize, usize)| -> CensusSummary {
        sweep_phi(&thetas[ti], &hs[hi], &ts[si], cells, |phi_index, action, flags| {
            let index = ((ti as u64 * n_phi + phi_index) * n_h + hi as u64) * n_t + si as u64;
            visit(index, action, flags);
        })
    };
    Ok(match mode {
        Parallelism::Sequential => jobs.iter().map(sweep).fold(CensusSummary::default(), CensusSummary::merge),
        Parallelism::Parallel => jobs
            .par_iter()
            .map(sweep)
            .reduce(CensusSummary::default, CensusSummary::merge),
    })
}

fn sweep_phi(
    theta: &FiniteMagma,
    h: &FiniteMap,
    t: &FiniteMap,
    cells: usize,
    mut visit: impl FnMut(u64, &MagmaAction, CensusFlags),
) -> CensusSummary {
    let x_order = h.dom();
    let mut phi = vec![0usize; cells];
    let mut action = MagmaAction::new(theta.clone(), phi.clone(), h.clone(), t.clone()).expect("dimensions agree");
    let mut summary = CensusSummary::default();
    let mut index = 0u64;
    loop {
        action.set_phi(&phi);
        let flags = classify(&action);
        summary.record(flags);
        visit(index, &action, flags);
        index += 1;
        // odometer, last cell fastest
        let mut i = cells;
        loop {
            if i == 0 {
                return summary;
            }
            i -= 1;
            phi[i] += 1;
            if phi[i] < x_order {
                break;
            }
            phi[i] = 0;
        }
    }
}

/// The full census with the disagreeing valid actions collected.
pub fn action_census(x_order: usize, b_order: usize) -> Result<Census> {
    action_census_with(x_order, b_order, Parallelism::Parallel)
}

pub fn action_census_with(x_order: usize, b_order: usize, mode: Parallelism) -> Result<Census> {
    let flagged = std::sync::Mutex::new(Vec::new());
    let summary = visit_census(x_order, b_order, mode, |index, action, flags| {
        if flags.valid && flags.representable != flags.associative {
            flagged.lock().expect("poisoned").push(CensusEntry {
                index,
                action: action.clone(),
                flags,
            });
        }
    })?;
    let mut flagged = flagged.into_inner().expect("poisoned");
    flagged.sort_by_key(|e| e.index);
    Ok(Census { summary, flagged })
}
