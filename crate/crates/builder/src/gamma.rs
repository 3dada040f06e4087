use crate::lambda::{crossing_vertex as cv, Lambda};
use crate::BuildError;
use diagram::{traverse, MarkerPlan, Side, Step};
use gem_core::{Color, Gem, Vertex};
use moves::QuadricolorSite;

const TOP: Color = 4;

fn strict(g: &mut Gem, u: Vertex, v: Vertex) -> Result<(), BuildError> {
    if g.neighbor(u, TOP).is_some() || g.neighbor(v, TOP).is_some() {
        return Err(BuildError::DoubleAssignment(u, v));
    }
    g.connect(u, v, TOP)?;
    Ok(())
}

fn soft(g: &mut Gem, u: Vertex, v: Vertex) -> Result<(), BuildError> {
    if g.neighbor(u, TOP).is_none() && g.neighbor(v, TOP).is_none() {
        g.connect(u, v, TOP)?;
    }
    Ok(())
}

fn with_triads(lam: &Lambda, sites: &[QuadricolorSite]) -> Result<Gem, BuildError> {
    let mut g = lam.gem.with_extra_color()?;
    for s in sites {
        for r in 0..3 {
            strict(&mut g, s.p[2 * r], s.p[2 * r + 1])?;
        }
    }
    Ok(g)
}

fn check_post(lam: &Lambda, g: &Gem) -> Result<(), BuildError> {
    if let Some(v) = g.vertices().find(|&v| g.neighbor(v, TOP).is_none()) {
        return Err(BuildError::Postcondition(format!("vertex {v} lacks a 4-colored edge")));
    }
    if g.restrict_colors(&[0, 1, 2, 3])? != lam.gem {
        return Err(BuildError::Postcondition("deleting color 4 does not give back Λ".into()));
    }
    if !g.classes_consistent() {
        return Err(BuildError::Postcondition("graph is not bipartite".into()));
    }
    Ok(())
}

/// Triads at the sites, then every other vertex doubles its 1-colored edge.
pub fn build_gamma_framed(lam: &Lambda, sites: &[QuadricolorSite]) -> Result<Gem, BuildError> {
    let mut g = with_triads(lam, sites)?;
    for v in lam.gem.vertices() {
        if g.neighbor(v, TOP).is_none() {
            let w = g.nbr(v, 1);
            g.connect(v, w, TOP)?;
        }
    }
    check_post(lam, &g)?;
    Ok(g)
}

/// What the highlighting walk did besides placing edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GammaLog {
    pub doublings: Vec<usize>,
    pub over_first: Vec<usize>,
}

/// Triads, highlighted pieces, doubled undercrossings, one edge per dotted
/// component, then capping off along 1-colored edges.
pub fn build_gamma_kirby(
    lam: &Lambda,
    plan: &MarkerPlan,
    sites: &[QuadricolorSite],
) -> Result<(Gem, GammaLog), BuildError> {
    let aug = &lam.aug;
    let d = &aug.base;
    let mut g = with_triads(lam, sites)?;
    let mut log = GammaLog::default();
    for st in traverse(aug, &plan.framed) {
        match st {
            Step::Double(z) => {
                strict(&mut g, cv(z, 1, 0), cv(z, 2, 1))?;
                strict(&mut g, cv(z, 3, 0), cv(z, 0, 1))?;
                log.doublings.push(z);
            }
            Step::OverFirst(z) => log.over_first.push(z),
            Step::Piece { index, piece, .. } => {
                if index > 0 {
                    let [(l0, l1), (r0, r1)] = lam.piece_edges(piece);
                    soft(&mut g, l0, r0)?;
                    soft(&mut g, l1, r1)?;
                }
            }
        }
    }
    if log.doublings != plan.doublings {
        return Err(BuildError::PlanStale("doubled crossings differ from the plan".into()));
    }
    for m in &plan.dotted {
        let (y, _) = d
            .head(m.h_arc)
            .ok_or_else(|| BuildError::PlanStale(format!("arc {} has no head", m.h_arc)))?;
        let (x, _) = d
            .tail(m.h_prime_arc)
            .ok_or_else(|| BuildError::PlanStale(format!("arc {} has no tail", m.h_prime_arc)))?;
        let (v, w) = match m.side {
            Side::Left => (cv(y, 3, 1), cv(x, 2, 0)),
            Side::Right => (cv(y, 0, 0), cv(x, 1, 1)),
        };
        strict(&mut g, v, w)?;
    }
    for v in lam.gem.vertices() {
        if g.neighbor(v, TOP).is_some() {
            continue;
        }
        let mut w = g.nbr(v, 1);
        let mut steps = 0;
        while let Some(x) = g.neighbor(w, TOP) {
            w = g.nbr(x, 1);
            steps += 1;
            if steps > g.order() {
                return Err(BuildError::Postcondition(format!(
                    "capping off from {v} does not terminate"
                )));
            }
        }
        g.connect(v, w, TOP)?;
    }
    check_post(lam, &g)?;
    Ok((g, log))
}
