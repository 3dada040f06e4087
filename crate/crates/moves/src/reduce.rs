use crate::dipole::{
    eliminate_in_place, find_dipoles, is_proper_dipole_with, DipoleCheck, DipoleHandle, Properness,
};
use crate::log::{Move, MoveLog};
use crate::MoveError;
use gem_core::{g_count, residues, surface_residues, Color, Gem};
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_steps: usize,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn steps(max_steps: usize) -> Self {
        Budget {
            max_steps,
            max_time: None,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::steps(100_000)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Every component has order two.
    SphereCertified,
    Reduced,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::SphereCertified => "sphere_certified",
            Verdict::Reduced => "reduced",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ReduceOptions {
    pub budget: Budget,
    pub seed: Option<u64>,
    /// Extra randomized runs tried when the deterministic one does not
    /// certify; only used with a seed.
    pub restarts: usize,
    pub check: DipoleCheck,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions {
            budget: Budget::default(),
            seed: None,
            restarts: 8,
            check: DipoleCheck::Exact,
        }
    }
}

/// Eliminates proper dipoles, largest r first and smallest vertex id on ties,
/// until none is left or the budget runs out.
pub fn greedy_reduce(g: &Gem, budget: &Budget, seed: Option<u64>) -> (Gem, MoveLog, Verdict) {
    greedy_reduce_with(
        g,
        &ReduceOptions {
            budget: budget.clone(),
            seed,
            ..ReduceOptions::default()
        },
    )
}

pub fn greedy_reduce_with(g: &Gem, opts: &ReduceOptions) -> (Gem, MoveLog, Verdict) {
    let start = Instant::now();
    let mut best = run(g, opts, None, start);
    if best.2 == Verdict::SphereCertified {
        return best;
    }
    if let Some(seed) = opts.seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..opts.restarts {
            let cand = run(g, opts, Some(&mut rng), start);
            let better = cand.2 == Verdict::SphereCertified || cand.0.order() < best.0.order();
            if better {
                best = cand;
            }
            if best.2 == Verdict::SphereCertified {
                break;
            }
        }
    }
    best
}

fn run(
    g: &Gem,
    opts: &ReduceOptions,
    mut rng: Option<&mut ChaCha8Rng>,
    start: Instant,
) -> (Gem, MoveLog, Verdict) {
    let mut h = g.clone();
    let mut log = MoveLog::default();
    let out_of_time = |s: &Instant| opts.budget.max_time.is_some_and(|t| s.elapsed() > t);
    while log.len() < opts.budget.max_steps && !out_of_time(&start) {
        let Some(d) = next_dipole(&h, opts.check, rng.as_deref_mut()) else {
            break;
        };
        let before = h.order();
        eliminate_in_place(&mut h, &d).expect("detected dipole eliminates cleanly");
        log.push(Move::Eliminate(d), before, h.order());
    }
    let verdict = verdict_of(&h);
    (h, log, verdict)
}

fn next_dipole(
    g: &Gem,
    check: DipoleCheck,
    mut rng: Option<&mut ChaCha8Rng>,
) -> Option<DipoleHandle> {
    let proper = |d: &DipoleHandle| is_proper_dipole_with(g, d, check) == Properness::Proper;
    for r in (1..g.colors()).rev() {
        let found = find_dipoles(g, r);
        let pick = match rng.as_deref_mut() {
            None => found.into_iter().find(|d| proper(d)),
            Some(rng) => {
                let ok: Vec<DipoleHandle> = found.into_iter().filter(|d| proper(d)).collect();
                ok.choose(rng).cloned()
            }
        };
        if pick.is_some() {
            return pick;
        }
    }
    None
}

fn verdict_of(g: &Gem) -> Verdict {
    let all: Vec<Color> = (0..g.colors() as Color).collect();
    let part = residues(g, &all);
    if part.blocks().iter().all(|b| b.len() == 2) {
        Verdict::SphereCertified
    } else {
        Verdict::Reduced
    }
}

/// True when every 3-colored residue is a 2-sphere.
pub fn residues_are_spheres(g: &Gem) -> bool {
    g.colors() < 4 || surface_residues(g).iter().all(|s| s.chi == 2)
}

/// Cancels 1-dipoles of color 2 until the graph without color 2 is
/// connected.
pub fn merge_2hat_residues(g: &Gem) -> Result<(Gem, MoveLog), MoveError> {
    let hat: Vec<Color> = (0..g.colors() as Color).filter(|&c| c != 2).collect();
    let mut h = g.clone();
    let mut log = MoveLog::default();
    while g_count(&h, &hat) > 1 {
        let d = find_dipoles(&h, 1)
            .into_iter()
            .find(|d| d.colors == [2])
            .ok_or_else(|| MoveError::NoDipoleFound("no 1-dipole of color 2".into()))?;
        log.apply(&mut h, Move::Eliminate(d))?;
    }
    debug_assert_eq!(g_count(&h, &hat), 1);
    Ok((h, log))
}

/// Eliminates dipoles whose color set is exactly `colors` until none is left.
/// The caller vouches for properness.
pub fn sweep_dipoles(g: &Gem, colors: &[Color]) -> Result<(Gem, MoveLog), MoveError> {
    let mut want = colors.to_vec();
    want.sort_unstable();
    let mut h = g.clone();
    let mut log = MoveLog::default();
    while let Some(d) = find_dipoles(&h, want.len())
        .into_iter()
        .find(|d| d.colors == want)
    {
        log.apply(&mut h, Move::Eliminate(d))?;
    }
    Ok((h, log))
}
