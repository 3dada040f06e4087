use crate::report::{Bounds, Case, Check, InvariantError, InvariantReport, Witnesses};
use builder::{crossing_vertex as cv, Build};
use diagram::{AugmentedDiagram, MarkerPlan};
use gem_core::{all_cyclic_permutations, g_count, genus_min, genus_wrt, CyclicPermutation, Gem};
use moves::{
    greedy_reduce_with, merge_2hat_residues, Budget, DipoleHandle, Move, MoveLog, ReduceOptions,
};

#[derive(Clone, Debug)]
pub struct WitnessOptions {
    pub budget_steps: usize,
    /// One greedy reduction per entry; `None` is the deterministic run.
    pub seeds: Vec<Option<u64>>,
    pub restarts: usize,
    /// Run the manifold check to fill in the singular colors.
    pub check_manifold: bool,
}

impl Default for WitnessOptions {
    fn default() -> Self {
        WitnessOptions {
            budget_steps: 100_000,
            seeds: vec![None, Some(1), Some(2), Some(3)],
            restarts: 8,
            check_manifold: true,
        }
    }
}

fn check(name: &str, holds: bool, detail: String) -> Check {
    Check {
        name: name.into(),
        holds,
        detail,
    }
}

fn le(name: &str, w: i64, b: i64) -> Check {
    check(name, w <= b, format!("{w} <= {b}"))
}

fn eq(name: &str, w: i64, b: i64) -> Check {
    check(name, w == b, format!("{w} == {b}"))
}

/// Everything that does not depend on the case.
fn base_report(
    aug: &AugmentedDiagram,
    gamma: &Gem,
    opts: &WitnessOptions,
) -> Result<InvariantReport, InvariantError> {
    if gamma.colors() != 5 {
        return Err(InvariantError::WrongColors(gamma.colors()));
    }
    let d = &aug.base;
    let mut genus_table = Vec::new();
    for eps in all_cyclic_permutations(5) {
        let g = genus_wrt(gamma, &eps)?;
        genus_table.push((eps, g));
    }
    let main = CyclicPermutation::new(&[1, 0, 2, 3, 4]).expect("permutation");
    let genus_built = genus_wrt(gamma, &main)?;
    let mut g = vec![vec![0; 5]; 5];
    for i in 0..5u8 {
        for j in 0..5u8 {
            if i != j {
                g[i as usize][j as usize] = g_count(gamma, &[i, j]);
            }
        }
    }
    let singular_colors = if opts.check_manifold {
        verify::manifold_check(gamma).singular_colors
    } else {
        Vec::new()
    };
    let (mut genus, mut genus_order) = genus_min(gamma)?;
    let mut min_order = gamma.order();
    let mut greedy_orders = Vec::new();
    for &seed in &opts.seeds {
        let ro = ReduceOptions {
            budget: Budget::steps(opts.budget_steps),
            seed,
            restarts: opts.restarts,
            ..ReduceOptions::default()
        };
        let (h, _, _) = greedy_reduce_with(gamma, &ro);
        let h = h.compacted().0;
        let (gh, eh) = genus_min(&h)?;
        if gh < genus {
            genus = gh;
            genus_order = eh;
        }
        min_order = min_order.min(h.order());
        greedy_orders.push(h.order());
    }
    let curls = aug.curl_count();
    Ok(InvariantReport {
        case: Case::Framed,
        s: d.s(),
        l: d.l(),
        m: d.m(),
        s_bar: d.s_bar(),
        u: None,
        m_alpha: aug.faces.m_alpha,
        curls,
        tbar_sum: aug.tbar.iter().sum(),
        order: gamma.order(),
        genus_table,
        g,
        singular_colors,
        bounds: Bounds::default(),
        witnesses: Witnesses {
            genus_built,
            genus,
            genus_order,
            complexity: min_order as i64 / 2 - 1,
            merged_order: None,
            dotted_reduced_order: None,
            greedy_orders,
            seeds: opts.seeds.clone(),
        },
        checks: Vec::new(),
    })
}

/// Bounds for a diagram without dotted components, with `gamma` built from
/// `aug`. The trivial knot is flagged through `case`.
pub fn bounds_framed(
    aug: &AugmentedDiagram,
    gamma: &Gem,
    opts: &WitnessOptions,
) -> Result<InvariantReport, InvariantError> {
    let d = &aug.base;
    if d.m() > 0 {
        return Err(InvariantError::HasDottedComponents);
    }
    let mut r = base_report(aug, gamma, opts)?;
    if d.is_trivial_circle() {
        r.case = Case::TrivialKnot;
    }
    let (s, l, t) = (r.s as i64, r.l as i64, r.curls as i64);
    r.bounds.genus_alpha = Some(r.m_alpha as i64 + l);
    r.bounds.genus_framed = Some(s + l + 1);
    r.bounds.complexity_framed = Some(4 * s - l + 2 * t);

    let (merged, _) = merge_2hat_residues(gamma)?;
    let merged = merged.order();
    r.witnesses.merged_order = Some(merged);
    let w = &mut r.witnesses;
    w.complexity = w.complexity.min(merged as i64 / 2 - 1);

    let w = &r.witnesses;
    r.checks = vec![
        eq("built genus is s+l+1", w.genus_built, s + l + 1),
        le("genus witness <= m_alpha+l", w.genus, r.m_alpha as i64 + l),
        le("genus witness <= s+l+1", w.genus, s + l + 1),
        eq(
            "merged complexity is 4s-l+2t",
            merged as i64 / 2 - 1,
            4 * s - l + 2 * t,
        ),
        le("complexity witness <= 4s-l+2t", w.complexity, 4 * s - l + 2 * t),
    ];
    Ok(r)
}

/// Eliminates the two {0,1,4}-dipoles sitting on every dotted arc that runs
/// from one undercrossing to the next.
pub fn dotted_reduction(aug: &AugmentedDiagram, gamma: &Gem) -> Result<(Gem, MoveLog), InvariantError> {
    let d = &aug.base;
    let mut h = gamma.clone();
    let mut log = MoveLog::default();
    for comp in d.components.iter().filter(|c| c.is_dotted()) {
        for &a in &comp.arcs {
            let (Some((x, 2)), Some((y, 0))) = (d.tail(a), d.head(a)) else {
                continue;
            };
            for (p, q) in [(cv(x, 1, 1), cv(y, 0, 0)), (cv(x, 2, 0), cv(y, 3, 1))] {
                let dh = DipoleHandle {
                    x: p,
                    y: q,
                    colors: vec![0, 1, 4],
                };
                log.apply(&mut h, Move::Eliminate(dh))?;
            }
        }
    }
    Ok((h, log))
}

/// Bounds for a diagram with dotted components, built with `plan`.
pub fn bounds_kirby(
    aug: &AugmentedDiagram,
    plan: Option<&MarkerPlan>,
    gamma: &Gem,
    opts: &WitnessOptions,
) -> Result<InvariantReport, InvariantError> {
    let d = &aug.base;
    if d.m() == 0 {
        return Err(InvariantError::NoDottedComponents);
    }
    let plan = plan.ok_or(InvariantError::PlanMissing)?;
    let mut r = base_report(aug, gamma, opts)?;
    r.case = Case::Kirby;
    r.u = Some(plan.u);
    let (s, sb, l, m, t, u) = (
        r.s as i64,
        r.s_bar as i64,
        r.l as i64,
        r.m as i64,
        r.curls as i64,
        plan.u as i64,
    );
    let gu = s + (l - m) + u + 1;
    let gk = s + sb + (l - m) + 1;
    let kk = 2 * s + 2 * sb + 2 * m - 1 + 2 * t;
    r.bounds.genus_kirby_u = Some(gu);
    r.bounds.genus_kirby = Some(gk);
    r.bounds.complexity_kirby = Some(kk);

    let (reduced, _) = dotted_reduction(aug, gamma)?;
    let ro = reduced.order();
    r.witnesses.dotted_reduced_order = Some(ro);
    let w = &mut r.witnesses;
    w.complexity = w.complexity.min(ro as i64 / 2 - 1);

    let w = &r.witnesses;
    r.checks = vec![
        le("u <= s_bar", u, sb),
        le("s+(l-m)+u+1 <= s+s_bar+(l-m)+1", gu, gk),
        le("built genus <= s+(l-m)+u+1", w.genus_built, gu),
        le("genus witness <= s+(l-m)+u+1", w.genus, gu),
        eq(
            "dotted reduction order is 4s+4s_bar+4m+4t",
            ro as i64,
            4 * s + 4 * sb + 4 * m + 4 * t,
        ),
        le("complexity witness <= 2s+2s_bar+2m-1+2t", w.complexity, kk),
    ];
    Ok(r)
}

/// Picks the framed or Kirby bounds for a finished build.
pub fn report_for(b: &Build, opts: &WitnessOptions) -> Result<InvariantReport, InvariantError> {
    if b.is_framed() {
        bounds_framed(b.aug(), &b.gamma, opts)
    } else {
        bounds_kirby(b.aug(), Some(&b.plan), &b.gamma, opts)
    }
}
