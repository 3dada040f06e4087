use crate::gamma::{build_gamma_framed, build_gamma_kirby, GammaLog};
use crate::lambda::{build_lambda, Lambda};
use crate::BuildError;
use diagram::{
    curl_placements, marker_plans, plan_curls, plan_curls_at, Arc, AugmentedDiagram,
    DiagramError, KirbyDiagram, MarkerPlan,
};
use gem_core::Gem;
use itertools::Itertools;
use moves::{Budget, QuadricolorSite, ReduceOptions};
use std::collections::BTreeMap;
use std::fmt::Write;
use verify::manifold_check_with;

#[derive(Clone, Debug)]
pub struct BuildOptions {
    /// Marker plans tried per curl placement.
    pub max_plans: usize,
    /// Curl placements tried when none is pinned.
    pub max_placements: usize,
    /// Reject plans whose output fails the manifold check.
    pub verify: bool,
    pub reduce_steps: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_plans: 64,
            max_placements: 16,
            verify: true,
            reduce_steps: 100_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Build {
    pub lambda: Lambda,
    pub plan: MarkerPlan,
    pub sites: Vec<QuadricolorSite>,
    pub gamma: Gem,
    pub log: GammaLog,
    /// Rejected attempts, one line each.
    pub rejected: Vec<String>,
    /// The output passed the manifold check (or checking was off).
    pub accepted: bool,
}

impl Build {
    pub fn aug(&self) -> &AugmentedDiagram {
        &self.lambda.aug
    }

    /// Procedure B was used (no dotted components).
    pub fn is_framed(&self) -> bool {
        self.lambda.aug.base.m() == 0
    }
}

/// Builds Γ for a single plan.
pub fn build_with_plan(
    lam: &Lambda,
    plan: &MarkerPlan,
) -> Result<(Gem, Vec<QuadricolorSite>, GammaLog), BuildError> {
    let sites: Vec<_> = plan.framed.iter().map(|f| f.site).collect();
    let q = lam.locate_quadricolors(&sites)?;
    if lam.aug.base.m() == 0 {
        let g = build_gamma_framed(lam, &q)?;
        Ok((g, q, GammaLog::default()))
    } else {
        let (g, log) = build_gamma_kirby(lam, plan, &q)?;
        Ok((g, q, log))
    }
}

fn placements(d: &KirbyDiagram, limit: usize) -> Vec<BTreeMap<usize, Arc>> {
    let framed: Vec<usize> = (0..d.l()).filter(|&j| !d.components[j].is_dotted()).collect();
    if !d.pins.xmarks.is_empty() || framed.is_empty() || d.is_trivial_circle() {
        return vec![BTreeMap::new()];
    }
    framed
        .iter()
        .map(|&j| curl_placements(d, j))
        .multi_cartesian_product()
        .take(limit)
        .map(|arcs| framed.iter().copied().zip(arcs).collect())
        .collect()
}

/// Plans curls and markers and builds Γ, moving on to the next plan when a
/// vertex would get two 4-colored edges or the result fails the manifold
/// check. Falls back to the first buildable plan if none passes.
pub fn build(d: &KirbyDiagram, opts: &BuildOptions) -> Result<Build, BuildError> {
    let reduce = ReduceOptions {
        budget: Budget::steps(opts.reduce_steps),
        ..ReduceOptions::default()
    };
    let mut rejected = Vec::new();
    let mut fallback: Option<Build> = None;
    let mut last_err: Option<BuildError> = None;
    for at in placements(d, opts.max_placements) {
        let aug = if at.is_empty() {
            plan_curls(d)?
        } else {
            plan_curls_at(d, &at)?
        };
        let lam = build_lambda(&aug)?;
        let plans = match marker_plans(&aug, opts.max_plans) {
            Ok(p) => p,
            Err(e @ DiagramError::NoPlanFound(_)) => {
                rejected.push(format!("curls at {at:?}: {e}"));
                last_err = Some(e.into());
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        for (k, plan) in plans.into_iter().enumerate() {
            let (gamma, sites, log) = match build_with_plan(&lam, &plan) {
                Ok(x) => x,
                Err(e @ (BuildError::DoubleAssignment(..) | BuildError::NoQuadricolor(_))) => {
                    rejected.push(format!("curls at {at:?}, plan {k}: {e}"));
                    last_err = Some(e);
                    continue;
                }
                Err(e) => return Err(e),
            };
            let ok = !opts.verify || manifold_check_with(&gamma, &reduce).passes(&[4]);
            let b = Build {
                lambda: lam.clone(),
                plan,
                sites,
                gamma,
                log,
                rejected: Vec::new(),
                accepted: ok,
            };
            if ok {
                return Ok(Build { rejected, ..b });
            }
            rejected.push(format!("curls at {at:?}, plan {k}: manifold check failed"));
            fallback.get_or_insert(b);
        }
    }
    match fallback {
        Some(b) => Ok(Build { rejected, ..b }),
        None => Err(last_err.unwrap_or_else(|| {
            DiagramError::NoPlanFound("no curl placement admits a plan".into()).into()
        })),
    }
}

/// `.sites` sidecar: one `site` line per framed component.
pub fn sites_text(sites: &[QuadricolorSite]) -> String {
    let mut s = String::new();
    for q in sites {
        let p: Vec<String> = q.p.iter().map(|v| v.to_string()).collect();
        writeln!(s, "site component={} p={}", q.component, p.join(",")).unwrap();
    }
    s
}

pub fn parse_sites(text: &str) -> Result<Vec<QuadricolorSite>, BuildError> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let t = raw.split('#').next().unwrap().trim();
        if t.is_empty() {
            continue;
        }
        let bad = |msg: &str| BuildError::SitesSyntax {
            line: k + 1,
            msg: msg.into(),
        };
        let mut component = None;
        let mut p = None;
        let mut toks = t.split_whitespace();
        if toks.next() != Some("site") {
            return Err(bad("expected `site`"));
        }
        for tok in toks {
            match tok.split_once('=') {
                Some(("component", v)) => component = v.parse().ok(),
                Some(("p", v)) => {
                    let vs: Result<Vec<u32>, _> = v.split(',').map(str::parse).collect();
                    p = vs.ok().and_then(|v| <[u32; 6]>::try_from(v).ok());
                }
                _ => return Err(bad(&format!("unexpected `{tok}`"))),
            }
        }
        match (component, p) {
            (Some(component), Some(p)) => out.push(QuadricolorSite { p, component }),
            _ => return Err(bad("need component=<j> and p=<six ids>")),
        }
    }
    Ok(out)
}
