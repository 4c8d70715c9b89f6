use super::characterize::{corona_base, is_c4, pendant_condition, two_pendant_condition};
use super::{Status, TheoremId, Witness};
use crate::error::SolverError;
use crate::graph::Bipartition;
use crate::invariants::Analysis;

fn holds(ok: bool) -> Status {
    if ok {
        Status::Holds
    } else {
        Status::Violated
    }
}

fn not_applicable(w: &mut Witness, reason: &'static str) -> Result<Status, SolverError> {
    w.set("reason", reason);
    Ok(Status::NotApplicable)
}

pub(super) fn evaluate(
    id: TheoremId,
    a: &Analysis<'_>,
    w: &mut Witness,
) -> Result<Status, SolverError> {
    let g = a.graph();
    let n = g.order();
    use TheoremId::*;
    match id {
        Eq1 => {
            let (alpha, beta) = (a.alpha()?, a.beta()?);
            w.set("alpha", alpha).set("beta", beta).set("n", n);
            Ok(holds(alpha + beta == n))
        }
        Eq2 => {
            let (m, beta) = (a.matching_number(), a.beta()?);
            w.set("matching", m).set("beta", beta).set("n", n);
            Ok(holds(m <= (n / 2).min(beta)))
        }
        Eq3 => {
            if !g.is_bipartite() {
                return not_applicable(w, "not bipartite");
            }
            let (m, beta) = (a.matching_number(), a.beta()?);
            w.set("matching", m).set("beta", beta);
            Ok(holds(m == beta))
        }
        Eq4 => {
            let (gamma, alpha) = (a.gamma()?, a.alpha()?);
            w.set("gamma", gamma).set("alpha", alpha);
            Ok(holds(gamma <= alpha))
        }
        Eq5 => {
            if g.has_isolated_vertex() {
                return not_applicable(w, "isolated vertex");
            }
            let (gamma, beta) = (a.gamma()?, a.beta()?);
            w.set("gamma", gamma).set("beta", beta);
            Ok(holds(gamma <= beta))
        }
        Eq6 => {
            let (gamma, tau, git) = (a.gamma()?, a.tau_i()?, a.gamma_it()?);
            w.set("gamma", gamma).set("tau_i", tau).set("gamma_it", git);
            Ok(holds(gamma.max(tau) <= git))
        }
        T1_1 => {
            if g.has_isolated_vertex() {
                return not_applicable(w, "isolated vertex");
            }
            let (git, beta) = (a.gamma_it()?, a.beta()?);
            w.set("gamma_it", git)
                .set("beta", beta)
                .set("gamma_it_set", a.it_dominating_sets()?.witness());
            Ok(holds(git <= beta + 1))
        }
        T1_2 => {
            if g.is_complete() {
                return not_applicable(w, "complete graph");
            }
            if !g.is_connected() {
                return not_applicable(w, "disconnected");
            }
            let alpha = a.alpha()?;
            if 2 * alpha < n {
                return not_applicable(w, "alpha < n/2");
            }
            let git = a.gamma_it()?;
            w.set("n", n)
                .set("alpha", alpha)
                .set("gamma_it", git)
                .set("gamma_it_set", a.it_dominating_sets()?.witness());
            Ok(holds(2 * git <= n))
        }
        L2_1 => lemma_complement(a, w),
        T2_4 | C2_4a => {
            if !g.is_connected() {
                return not_applicable(w, "disconnected");
            }
            if id == T2_4 && n < 2 {
                return not_applicable(w, "no edge");
            }
            let (alpha, m) = (a.alpha()?, a.matching_number());
            if alpha <= m {
                return not_applicable(w, "alpha <= matching");
            }
            w.set("alpha", alpha).set("matching", m);
            if id == T2_4 {
                let core = a.core()?;
                w.set("core", core).set("xi", core.len());
                Ok(holds(core.len() + m > alpha))
            } else {
                let tau = a.transversals()?;
                w.set("tau_i", tau.size).set("tau_i_set", tau.witness());
                Ok(holds(tau.size == 1))
            }
        }
        T2_5 => {
            if !g.is_bipartite() {
                return not_applicable(w, "not bipartite");
            }
            // Some bipartition is unbalanced iff some component's colour
            // classes differ in size.
            let unbalanced = g.components().into_iter().find(|&c| {
                let (h, _) = g.induced_subgraph(c);
                let b = h.bipartition().expect("component of a bipartite graph");
                b.x.len() != b.y.len()
            });
            let Some(component) = unbalanced else {
                return not_applicable(w, "every bipartition is balanced");
            };
            let (gamma, git) = (a.gamma()?, a.gamma_it()?);
            w.set("unbalanced_component", component)
                .set("gamma", gamma)
                .set("gamma_it", git);
            Ok(holds(git <= gamma + 1))
        }
        T2_6 | Tree => {
            let applicable = if id == T2_6 {
                g.is_connected() && g.is_bipartite()
            } else {
                g.is_tree()
            };
            if !applicable {
                return not_applicable(
                    w,
                    if id == T2_6 {
                        "not a connected bipartite graph"
                    } else {
                        "not a tree"
                    },
                );
            }
            let (gamma, git) = (a.gamma()?, a.gamma_it()?);
            w.set("gamma", gamma)
                .set("gamma_it", git)
                .set("gamma_set", a.dominating_sets()?.witness())
                .set("gamma_it_set", a.it_dominating_sets()?.witness());
            Ok(holds(git == gamma || git == gamma + 1))
        }
        Sand => {
            if !g.is_connected() {
                return not_applicable(w, "disconnected");
            }
            let (gamma, git, delta) = (a.gamma()?, a.gamma_it()?, g.min_degree());
            w.set("gamma", gamma)
                .set("gamma_it", git)
                .set("min_degree", delta);
            Ok(holds(gamma <= git && git <= gamma + delta))
        }
        T3_2 | T3_2Nec | T3_2Suf | T3_1Orig => pendant_characterization(id, a, w),
        T3_3 => {
            if n % 2 == 1 {
                return not_applicable(w, "odd order");
            }
            if g.has_isolated_vertex() {
                return not_applicable(w, "isolated vertex");
            }
            let gamma = a.gamma()?;
            let mut structured = true;
            let mut offending = None;
            for comp in g.components() {
                let (h, _) = g.induced_subgraph(comp);
                if !(is_c4(&h) || corona_base(&h).is_some()) {
                    structured = false;
                    offending.get_or_insert(comp);
                }
            }
            w.set("gamma", gamma)
                .set("n", n)
                .set("components_c4_or_corona", structured);
            if let Some(c) = offending {
                w.set("other_component", c);
            }
            Ok(holds((2 * gamma == n) == structured))
        }
        C3_4 => {
            if !g.is_connected() {
                return not_applicable(w, "disconnected");
            }
            if n % 2 == 1 || n < 4 {
                return not_applicable(w, "order is not even and >= 4");
            }
            let gamma = a.gamma()?;
            if 2 * gamma != n {
                return not_applicable(w, "gamma != n/2");
            }
            let git = a.it_dominating_sets()?;
            w.set("gamma", gamma)
                .set("gamma_it", git.size)
                .set("gamma_it_sets", git.sets.clone());
            Ok(holds(2 * git.size == n))
        }
        T3_5 => half_order_sufficient(a, w),
        T4_1 => {
            if !g.is_connected() || n < 3 {
                return not_applicable(w, "not connected with n >= 3");
            }
            let total = a.total_dominating_sets()?.expect("connected, n >= 3");
            w.set("gamma_t", total.size)
                .set("gamma_t_set", total.witness())
                .set("n", n);
            Ok(holds(3 * total.size <= 2 * n))
        }
        Gtt => {
            if g.has_isolated_vertex() {
                return not_applicable(w, "isolated vertex");
            }
            let gtt = a.it_total_dominating_sets()?.expect("no isolated vertex");
            let git = a.gamma_it()?;
            w.set("gamma_tt", gtt.size)
                .set("gamma_tt_set", gtt.witness())
                .set("gamma_it", git);
            Ok(holds(gtt.size >= git))
        }
        Conj1 => {
            if g.is_complete() {
                return not_applicable(w, "complete graph");
            }
            if !g.is_connected() {
                return not_applicable(w, "disconnected");
            }
            let git = a.it_dominating_sets()?;
            let bound = n.div_ceil(2);
            w.set("gamma_it", git.size)
                .set("gamma_it_set", git.witness())
                .set("bound", bound)
                .set("n", n);
            Ok(holds(git.size <= bound))
        }
    }
}

/// `Ω(G)` is the edge set of `Ḡ` when `Ḡ` is triangle-free with an edge, so
/// independent transversals of `G` are exactly vertex covers of `Ḡ`.
fn lemma_complement(a: &Analysis<'_>, w: &mut Witness) -> Result<Status, SolverError> {
    let g = a.graph();
    if g.is_complete() {
        return not_applicable(w, "complete graph");
    }
    let comp = g.complement();
    if !comp.is_triangle_free() {
        return not_applicable(w, "complement has a triangle");
    }
    let ca = Analysis::new(&comp);
    let (beta_c, alpha_c) = (ca.beta()?, ca.alpha()?);
    let tau = a.transversals()?;
    let git = a.gamma_it()?;
    let n = g.order();
    w.set("tau_i", tau.size)
        .set("tau_i_set", tau.witness())
        .set("beta_complement", beta_c)
        .set("alpha_complement", alpha_c)
        .set("gamma_it", git)
        .set("n", n);
    Ok(holds(tau.size == beta_c && git + alpha_c >= n))
}

/// Bipartitions `(X, Y)` with `|X| <= |Y|` and `γ = |X|`.
fn characterized_sides(a: &Analysis<'_>) -> Result<Vec<Bipartition>, SolverError> {
    let gamma = a.gamma()?;
    let mut sides: Vec<Bipartition> = a
        .graph()
        .all_bipartitions()?
        .into_iter()
        .filter(|b| b.x.len() <= b.y.len() && b.x.len() == gamma)
        .collect();
    sides.sort_by_key(|b| b.x);
    sides.dedup();
    Ok(sides)
}

fn pendant_characterization(
    id: TheoremId,
    a: &Analysis<'_>,
    w: &mut Witness,
) -> Result<Status, SolverError> {
    use TheoremId::*;
    let g = a.graph();
    if !g.is_bipartite() {
        return not_applicable(w, "not bipartite");
    }
    if g.has_isolated_vertex() {
        return not_applicable(w, "isolated vertex");
    }
    let sides = characterized_sides(a)?;
    if sides.is_empty() {
        return not_applicable(w, "no bipartition with |X| <= |Y| and gamma = |X|");
    }
    let gamma = a.gamma()?;
    let git = a.gamma_it()?;
    let increased = git == gamma + 1;
    w.set("gamma", gamma).set("gamma_it", git);

    let mut applicable = false;
    for b in &sides {
        let cond = if id == T3_1Orig {
            two_pendant_condition(g, b.x)
        } else {
            pendant_condition(g, b.x)
        }
        .expect("bipartition side is independent");
        let relevant = match id {
            T3_2Nec => increased,
            T3_2Suf => cond.holds,
            _ => true,
        };
        if !relevant {
            continue;
        }
        applicable = true;
        if increased != cond.holds {
            w.set("x", b.x)
                .set("y", b.y)
                .set("condition", cond.holds)
                .set("condition_witness", cond.witness)
                .set(
                    "failed_direction",
                    if increased {
                        "gamma_it = gamma + 1 but condition fails"
                    } else {
                        "condition holds but gamma_it = gamma"
                    },
                )
                .set("gamma_sets", a.dominating_sets()?.sets.clone())
                .set("omega", a.omega()?.sets.clone());
            return Ok(Status::Violated);
        }
        w.set("x", b.x).set("condition", cond.holds);
    }
    if !applicable {
        return not_applicable(w, "implication premise is false");
    }
    Ok(Status::Holds)
}

fn half_order_sufficient(a: &Analysis<'_>, w: &mut Witness) -> Result<Status, SolverError> {
    let g = a.graph();
    let n = g.order();
    if !g.is_bipartite() {
        return not_applicable(w, "not bipartite");
    }
    if n % 2 == 1 {
        return not_applicable(w, "odd order");
    }
    if g.components().iter().any(|c| c.len() <= 2) {
        return not_applicable(w, "component of order <= 2");
    }
    let gamma = a.gamma()?;
    let case = if 2 * gamma == n {
        Some(1)
    } else if 2 * gamma + 2 == n {
        let side = g
            .all_bipartitions()?
            .into_iter()
            .filter(|b| 2 * b.x.len() + 2 == n)
            .find(|b| pendant_condition(g, b.x).expect("independent side").holds);
        if let Some(b) = side {
            w.set("x", b.x);
            Some(2)
        } else {
            None
        }
    } else {
        None
    };
    let Some(case) = case else {
        return not_applicable(w, "neither case applies");
    };
    let git = a.gamma_it()?;
    w.set("case", case)
        .set("gamma", gamma)
        .set("gamma_it", git)
        .set("n", n);
    Ok(holds(2 * git == n))
}
