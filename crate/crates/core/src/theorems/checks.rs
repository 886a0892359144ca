//! The encodings. Each function evaluates hypothesis and conclusion on one
//! subject. ρ' always comes from the exact search.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::extraconn::search::{min_extra_cut, status};
use crate::families::FamilySpec;
use crate::graph::{reach, Edge, Graph, VertexSet};

use super::{certificate, Check, CheckConfig, CheckError, Subject, TheoremCheck, Verdict};

type Res = Result<Verdict, CheckError>;

const PASS: Res = Ok(Verdict::Pass);
const VACUOUS: Res = Ok(Verdict::VacuousPass);

fn fail(s: &Subject, id: &str, detail: String) -> Res {
    Ok(certificate(s, id, detail, None, None))
}

fn one(id: &'static str, statement: &'static str, eval: super::EvalFn) -> TheoremCheck {
    TheoremCheck {
        id,
        parts: vec![Check::new(id, statement, eval)],
    }
}

pub(super) fn registry() -> Vec<TheoremCheck> {
    vec![
        one(
            "T1.2",
            "connected, order >= 2(δ+1), not the hub-and-cliques graph G*_{n,δ} ⇒ λ^(h) exists and λ^(h) <= ξ_h for 0 <= h <= δ",
            t1_2,
        ),
        one(
            "L1.4",
            "for a λ^(h)-graph with λ^(h) <= ξ_h (h <= 2): super-λ^(h) ⇔ no (h+1)-extra cut or λ^(h+1) > ξ_h",
            l1_4,
        ),
        one(
            "T1.6",
            "super-λ^(h) ⇒ deleting the edges at a minimum-degree vertex destroys the property, so ρ^(h) <= δ−1",
            t1_6,
        ),
        one("L2.1", "λ'-optimal ⇒ λ = δ", l2_1),
        TheoremCheck {
            id: "L2.2",
            parts: vec![
                Check::new("L2.2i", "λ'-optimal and |F| <= δ−1 ⇒ G−F is λ'-connected (sampled F)", l2_2i),
                Check::new(
                    "L2.2ii",
                    "λ'-graph with G−F λ''-connected ⇒ G is λ''-connected and λ''(G−F) >= λ''(G) − |F| (sampled F)",
                    l2_2ii,
                ),
            ],
        },
        one("T2.3", "super-λ' and not λ''-connected ⇒ ρ' = δ−1", t2_3),
        TheoremCheck {
            id: "T2.4",
            parts: vec![
                Check::new("T2.4i", "λ''-connected super-λ' with η >= δ ⇒ ρ' >= min(λ''−ξ−1, δ−1)", t2_4i),
                Check::new("T2.4ii", "λ''-connected super-λ' edge-regular ⇒ ρ' >= min(λ''−ξ, δ−1)", t2_4ii),
            ],
        },
        one("L3.1", "3-regular super-λ' of order 2n, n >= 4 ⇒ girth > 4 and n ≠ 4", l3_1),
        one("T3.2", "3-regular super-λ' of order 2n: n ∈ {2,3} ⇒ ρ' = 2; n >= 5 ⇒ ρ' = 1", t3_2),
        one("L3.3", "k-regular λ''-optimal, k >= 4 ⇒ (super-λ' ⇔ girth >= 4 or k >= 5)", l3_3),
        one("T3.4", "k-regular λ''-optimal, k >= 4, girth >= 4 ⇒ k−2 <= ρ' <= k−1", t3_4),
        one(
            "L3.6",
            "m-connected, |X| >= m, |X̄| >= m ⇒ E(X) holds m independent edges (sampled X, m = κ)",
            l3_6,
        ),
        one(
            "T3.7",
            "k-regular λ''-optimal, girth 3, k >= 5, (k−2)-connected, not super-λ'' ⇒ k−4 <= ρ' <= k−3",
            t3_7,
        ),
        TheoremCheck {
            id: "T3.8",
            parts: vec![
                Check::new("T3.8i", "k-regular super-λ'', k >= 4, girth >= 4 ⇒ ρ' = k−1", t3_8i),
                Check::new(
                    "T3.8ii",
                    "k-regular super-λ'', girth 3: k >= 6 ⇒ ρ' >= k−3; k = 5 ⇒ ρ' = 2",
                    t3_8ii,
                ),
            ],
        },
        one("L3.9", "transitive, degree k >= 4, girth >= 5 ⇒ λ''-optimal with λ'' = 3k−4", l3_9),
        one("L3.10", "C4-free transitive, degree k >= 4, λ''-optimal ⇒ super-λ''", l3_10),
        one("C3.11", "transitive, degree k >= 4, girth >= 5 ⇒ ρ' = k−1", c3_11),
        one("L4.1", "triangle-free of order n ⇒ |E| <= n²/4", l4_1),
        one(
            "T4.3",
            "G(G0,G1;M) with G_i triangle-free k-regular super-λ of order n, min(n, λ'_0+λ'_1) > 3k−1 ⇒ super-λ'' and ρ' = k",
            t4_3,
        ),
        one("L4.4", "Q_n: λ' = 2n−2 and λ'-optimal for n >= 2; super-λ for n >= 3", l4_4),
        one("C4.5", "Q_n with n >= 5 ⇒ super-λ'', super-λ' and ρ' = n−1", c4_5),
        one(
            "T4.7",
            "ring of m >= 4 k-regular k-edge-connected triangle-free parts of order n > ⌈(3k+2)/2⌉, k >= 3 ⇒ super-λ'' and ρ' = k+1",
            t4_7,
        ),
    ]
}

pub(super) fn auxiliary() -> Vec<Check> {
    vec![
        Check::new("CHAIN", "λ^(0) <= λ^(1) <= …, and λ^(h) exists whenever λ^(h+1) does", chain),
        Check::new(
            "CIRCULANT",
            "G(cd^m, d) with 1 < c < d, c ≠ 3, d >= 4, m >= 2 ⇒ super-λ'' and ρ' = 2m (c = 2) or 2m+1 (c >= 4)",
            circulant_rho,
        ),
        Check::new("TORUS", "C(d1,…,dn) with n >= 3, all d_i >= 4 ⇒ super-λ'' and ρ' = 2n−1", torus_rho),
        Check::new(
            "CIRCULANT-DEGREE",
            "G(cd^m, d) with 1 <= c < d has degree 2m−1 (c = 1, d = 2), 2m (c = 1, d > 2), 2m+1 (c = 2), 2m+2 (c > 2)",
            circulant_degree,
        ),
    ]
}

fn rng_for(cfg: &CheckConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
}

fn girth_at_least(s: &Subject, g: usize) -> bool {
    s.girth().is_none_or(|x| x >= g)
}

/// Whether `g` is `n` copies of `K_d` all joined to one extra vertex.
pub(super) fn is_hub_and_cliques(g: &Graph, d: usize) -> bool {
    let n = g.order();
    if d == 0 || n < d + 1 || !(n - 1).is_multiple_of(d) {
        return false;
    }
    (0..n).filter(|&x| g.degree(x) == n - 1).any(|x| {
        let rest = g.vertices().without(x);
        g.components_within(rest)
            .iter()
            .all(|c| c.len() == d && c.iter().all(|v| g.degree(v) == d))
    })
}

fn t1_2(s: &Subject, _: &CheckConfig) -> Res {
    if !s.connected() {
        return VACUOUS;
    }
    let d = s.delta();
    if s.order() < 2 * (d + 1) || is_hub_and_cliques(&s.graph, d) {
        return VACUOUS;
    }
    for h in 0..=d {
        let xi = s.xi_h(h);
        match (s.lambda(h)?, xi) {
            (None, _) => return fail(s, "T1.2", format!("no {h}-extra cut exists")),
            (Some(l), Some(x)) if l <= x => {}
            (Some(l), x) => return fail(s, "T1.2", format!("λ^({h}) = {l} exceeds ξ_{h} = {x:?}")),
        }
    }
    PASS
}

fn l1_4(s: &Subject, _: &CheckConfig) -> Res {
    if !s.connected() {
        return VACUOUS;
    }
    let mut applicable = false;
    for h in 0..=2 {
        let Some(cut) = s.cut(h)? else { continue };
        let xi = s.xi_h(h).expect("an h-extra cut implies a connected (h+1)-set");
        let by_def = cut.value == xi && cut.violator.is_none();
        let by_next = s.lambda(h + 1)?.is_none_or(|l| l > xi);
        if cut.value > xi {
            if by_def != by_next {
                s.note(format!(
                    "L1.4 at h = {h}: λ^({h}) = {} > ξ_{h} = {xi}; the criterion says super but the graph is not optimal",
                    cut.value
                ));
            }
            continue;
        }
        applicable = true;
        if by_def != by_next {
            let frag = cut.violator.or(Some(cut.witness));
            return Ok(certificate(
                s,
                "L1.4",
                format!("h = {h}: super by definition is {by_def}, by the criterion {by_next}"),
                frag,
                None,
            ));
        }
    }
    if applicable {
        PASS
    } else {
        VACUOUS
    }
}

fn t1_6(s: &Subject, _: &CheckConfig) -> Res {
    if !s.connected() {
        return VACUOUS;
    }
    let g = &s.graph;
    let d = s.delta();
    let v = (0..g.order()).find(|&v| g.degree(v) == d).expect("nonempty graph");
    let star: Vec<Edge> = g.neighbors(v).iter().map(|w| Edge::new(v, w)).collect();
    let mut applicable = false;
    for h in 0..=2 {
        if !s.is_super(h)? {
            continue;
        }
        applicable = true;
        let rows = g.rows_without(&star);
        if status(&rows, h, false, s.budget())?.is_super() {
            return Ok(certificate(
                s,
                "T1.6",
                format!("h = {h}: still super after deleting the edges at vertex {v}"),
                None,
                Some(&star),
            ));
        }
        if h == 1 {
            let rho = s.rho1_value()?;
            if rho + 1 > d {
                return fail(s, "T1.6", format!("ρ' = {rho} exceeds δ−1 = {}", d as i64 - 1));
            }
        }
    }
    if applicable {
        PASS
    } else {
        VACUOUS
    }
}

fn l2_1(s: &Subject, _: &CheckConfig) -> Res {
    if !s.connected() || !s.optimal(1)? {
        return VACUOUS;
    }
    let (l, d) = (s.graph.edge_connectivity(), s.delta());
    if l == d {
        PASS
    } else {
        fail(s, "L2.1", format!("λ = {l} but δ = {d}"))
    }
}

fn random_faults(g: &Graph, rng: &mut ChaCha8Rng, size: usize) -> Vec<Edge> {
    let edges = g.edges();
    let mut f: Vec<Edge> = sample(rng, edges.len(), size).iter().map(|i| edges[i]).collect();
    f.sort();
    f
}

fn connected_rows(rows: &[VertexSet]) -> bool {
    let all = VertexSet::full(rows.len());
    reach(rows, 0, all) == all
}

fn l2_2i(s: &Subject, cfg: &CheckConfig) -> Res {
    if !s.connected() || s.cut(1)?.is_none() || !s.optimal(1)? {
        return VACUOUS;
    }
    let d = s.delta();
    if d <= 1 {
        // Only F = ∅ qualifies, and G itself is a λ'-graph.
        return PASS;
    }
    let mut rng = rng_for(cfg, 0x22a);
    for _ in 0..cfg.samples {
        s.budget().check()?;
        let size = rng.gen_range(1..d);
        let f = random_faults(&s.graph, &mut rng, size);
        let rows = s.graph.rows_without(&f);
        let ok = connected_rows(&rows) && min_extra_cut(&rows, 1, false, s.budget())?.is_some();
        if !ok {
            return Ok(certificate(s, "L2.2i", "G − F is not λ'-connected".into(), None, Some(&f)));
        }
    }
    PASS
}

fn l2_2ii(s: &Subject, cfg: &CheckConfig) -> Res {
    if !s.connected() || s.cut(1)?.is_none() {
        return VACUOUS;
    }
    let m = s.graph.size();
    let max = m.min(s.delta() + 1).max(1);
    let mut rng = rng_for(cfg, 0x22b);
    let mut applicable = false;
    for _ in 0..cfg.samples {
        s.budget().check()?;
        let size = rng.gen_range(1..=max);
        let f = random_faults(&s.graph, &mut rng, size);
        let rows = s.graph.rows_without(&f);
        if !connected_rows(&rows) {
            continue;
        }
        let Some(after) = min_extra_cut(&rows, 2, false, s.budget())? else { continue };
        applicable = true;
        let detail = match s.lambda(2)? {
            None => "G − F is λ''-connected but G is not".to_string(),
            Some(l) if after.value + f.len() >= l => continue,
            Some(l) => format!("λ''(G − F) = {} < λ''(G) − |F| = {l} − {}", after.value, f.len()),
        };
        return Ok(certificate(s, "L2.2ii", detail, Some(after.witness), Some(&f)));
    }
    if applicable {
        PASS
    } else {
        VACUOUS
    }
}

fn super1(s: &Subject) -> Result<bool, CheckError> {
    Ok(s.connected() && s.is_super(1)?)
}

fn t2_3(s: &Subject, _: &CheckConfig) -> Res {
    if !super1(s)? || s.lambda(2)?.is_some() {
        return VACUOUS;
    }
    let (rho, d) = (s.rho1_value()?, s.delta());
    if rho + 1 == d {
        PASS
    } else {
        fail(s, "T2.3", format!("ρ' = {rho} but δ−1 = {}", d as i64 - 1))
    }
}

fn t2_4(s: &Subject, id: &str, edge_regular: bool) -> Res {
    if !super1(s)? {
        return VACUOUS;
    }
    let Some(l2) = s.lambda(2)? else { return VACUOUS };
    let g = &s.graph;
    let d = s.delta();
    let hyp = if edge_regular {
        g.is_edge_regular().unwrap_or(false)
    } else {
        g.eta().is_ok_and(|eta| eta >= d)
    };
    if !hyp {
        return VACUOUS;
    }
    let xi = s.xi().expect("connected graph with δ >= 1") as i64;
    let slack = if edge_regular { 0 } else { 1 };
    let bound = (l2 as i64 - xi - slack).min(d as i64 - 1);
    let rho = s.rho1_value()? as i64;
    if rho >= bound {
        PASS
    } else {
        fail(s, id, format!("ρ' = {rho} below the bound {bound} (λ'' = {l2}, ξ = {xi}, δ = {d})"))
    }
}

fn t2_4i(s: &Subject, _: &CheckConfig) -> Res {
    t2_4(s, "T2.4i", false)
}

fn t2_4ii(s: &Subject, _: &CheckConfig) -> Res {
    t2_4(s, "T2.4ii", true)
}

fn l3_1(s: &Subject, _: &CheckConfig) -> Res {
    if s.regular() != Some(3) || s.order() < 8 || !super1(s)? {
        return VACUOUS;
    }
    if !girth_at_least(s, 5) {
        return fail(s, "L3.1", format!("girth {:?} is at most 4", s.girth()));
    }
    if s.order() == 8 {
        return fail(s, "L3.1", "super-λ' cubic graph of order 8".into());
    }
    PASS
}

fn t3_2(s: &Subject, _: &CheckConfig) -> Res {
    if s.regular() != Some(3) || !super1(s)? {
        return VACUOUS;
    }
    let expected = match s.order() {
        4 | 6 => 2,
        8 => {
            s.note("T3.2: super-λ' cubic graph of order 8 encountered".into());
            return VACUOUS;
        }
        _ => 1,
    };
    let rho = s.rho1_value()?;
    if rho == expected {
        PASS
    } else {
        fail(s, "T3.2", format!("ρ' = {rho}, expected {expected}"))
    }
}

/// `Some(k)` for a connected k-regular λ''-optimal graph with k >= `min_k`.
fn regular_l2_optimal(s: &Subject, min_k: usize) -> Result<Option<usize>, CheckError> {
    match s.regular() {
        Some(k) if k >= min_k && s.connected() && s.optimal(2)? => Ok(Some(k)),
        _ => Ok(None),
    }
}

fn l3_3(s: &Subject, _: &CheckConfig) -> Res {
    let Some(k) = regular_l2_optimal(s, 4)? else { return VACUOUS };
    let sup = s.is_super(1)?;
    let predicted = girth_at_least(s, 4) || k >= 5;
    if sup == predicted {
        PASS
    } else {
        let frag = s.cut(1)?.and_then(|c| c.violator);
        Ok(certificate(
            s,
            "L3.3",
            format!("super-λ' is {sup}, but girth {:?} and k = {k} predict {predicted}", s.girth()),
            frag,
            None,
        ))
    }
}

/// ρ' of a graph the conclusion claims to be super-λ'; a failure otherwise.
fn rho_or_fail(s: &Subject, id: &str) -> Result<Result<usize, Verdict>, CheckError> {
    if !s.is_super(1)? {
        let frag = s.cut(1)?.and_then(|c| c.violator);
        return Ok(Err(certificate(s, id, "not super-λ'".into(), frag, None)));
    }
    Ok(Ok(s.rho1_value()?))
}

fn window(s: &Subject, id: &str, lo: i64, hi: i64) -> Res {
    let rho = match rho_or_fail(s, id)? {
        Ok(r) => r as i64,
        Err(v) => return Ok(v),
    };
    if (lo..=hi).contains(&rho) {
        PASS
    } else {
        let witness = s.rho1()?.and_then(|r| r.witness.clone());
        Ok(certificate(
            s,
            id,
            format!("ρ' = {rho} outside [{lo}, {hi}]"),
            None,
            witness.as_ref().map(|w| w.as_slice()),
        ))
    }
}

fn t3_4(s: &Subject, _: &CheckConfig) -> Res {
    let Some(k) = regular_l2_optimal(s, 4)? else { return VACUOUS };
    if !girth_at_least(s, 4) {
        return VACUOUS;
    }
    window(s, "T3.4", k as i64 - 2, k as i64 - 1)
}

fn l3_6(s: &Subject, cfg: &CheckConfig) -> Res {
    let n = s.order();
    if !s.connected() || n < 2 {
        return VACUOUS;
    }
    let m = s.kappa();
    if m == 0 || n < 2 * m {
        return VACUOUS;
    }
    let mut rng = rng_for(cfg, 0x36);
    for _ in 0..cfg.samples {
        s.budget().check()?;
        let size = rng.gen_range(m..=n - m);
        let x = VertexSet::from_iter(sample(&mut rng, n, size).iter());
        let got = s.graph.max_independent_boundary_edges(x).expect("both sides nonempty");
        if got < m {
            return Ok(certificate(
                s,
                "L3.6",
                format!("only {got} independent boundary edges, κ = {m}"),
                Some(x),
                None,
            ));
        }
    }
    PASS
}

fn t3_7(s: &Subject, _: &CheckConfig) -> Res {
    let Some(k) = regular_l2_optimal(s, 5)? else { return VACUOUS };
    if s.girth() != Some(3) || s.kappa() < k - 2 || s.is_super(2)? {
        return VACUOUS;
    }
    window(s, "T3.7", k as i64 - 4, k as i64 - 3)
}

/// `Some(k)` for a connected k-regular super-λ'' graph with k >= `min_k`.
fn regular_l2_super(s: &Subject, min_k: usize) -> Result<Option<usize>, CheckError> {
    match s.regular() {
        Some(k) if k >= min_k && s.connected() && s.is_super(2)? => Ok(Some(k)),
        _ => Ok(None),
    }
}

fn t3_8i(s: &Subject, _: &CheckConfig) -> Res {
    let Some(k) = regular_l2_super(s, 4)? else { return VACUOUS };
    if !girth_at_least(s, 4) {
        return VACUOUS;
    }
    window(s, "T3.8i", k as i64 - 1, k as i64 - 1)
}

fn t3_8ii(s: &Subject, _: &CheckConfig) -> Res {
    let Some(k) = regular_l2_super(s, 5)? else { return VACUOUS };
    if s.girth() != Some(3) {
        return VACUOUS;
    }
    if k == 5 {
        window(s, "T3.8ii", 2, 2)
    } else {
        window(s, "T3.8ii", k as i64 - 3, k as i64 - 1)
    }
}

fn transitive_regular(s: &Subject, min_k: usize) -> Option<usize> {
    match s.regular() {
        Some(k) if k >= min_k && s.transitive() && s.connected() => Some(k),
        _ => None,
    }
}

fn l3_9(s: &Subject, _: &CheckConfig) -> Res {
    let Some(k) = transitive_regular(s, 4) else { return VACUOUS };
    if !girth_at_least(s, 5) {
        return VACUOUS;
    }
    let l2 = s.lambda(2)?;
    if s.optimal(2)? && l2 == Some(3 * k - 4) {
        PASS
    } else {
        fail(s, "L3.9", format!("λ'' = {l2:?}, ξ_2 = {:?}, 3k−4 = {}", s.xi_h(2), 3 * k - 4))
    }
}

fn l3_10(s: &Subject, _: &CheckConfig) -> Res {
    if transitive_regular(s, 4).is_none() || !s.graph.is_c4_free() || !s.optimal(2)? {
        return VACUOUS;
    }
    if s.is_super(2)? {
        PASS
    } else {
        let frag = s.cut(2)?.and_then(|c| c.violator);
        Ok(certificate(s, "L3.10", "λ''-optimal but not super-λ''".into(), frag, None))
    }
}

fn c3_11(s: &Subject, _: &CheckConfig) -> Res {
    let Some(k) = transitive_regular(s, 4) else { return VACUOUS };
    if !girth_at_least(s, 5) {
        return VACUOUS;
    }
    window(s, "C3.11", k as i64 - 1, k as i64 - 1)
}

fn l4_1(s: &Subject, _: &CheckConfig) -> Res {
    if !s.graph.is_triangle_free() {
        return VACUOUS;
    }
    let (n, m) = (s.order(), s.graph.size());
    if 4 * m <= n * n {
        PASS
    } else {
        fail(s, "L4.1", format!("{m} edges on {n} vertices"))
    }
}

/// Super-λ'' and ρ' equal to `expected`.
fn super2_with_rho(s: &Subject, id: &str, expected: usize) -> Res {
    if !s.is_super(2)? {
        let frag = s.cut(2)?.and_then(|c| c.violator.or(Some(c.witness)));
        return Ok(certificate(s, id, "not super-λ''".into(), frag, None));
    }
    window(s, id, expected as i64, expected as i64)
}

/// Subjects for composition parts, sharing the parent's budget.
fn part_subjects(s: &Subject, parts: &[FamilySpec]) -> Result<Vec<Subject>, CheckError> {
    parts.iter().map(|p| Subject::from_spec(p, s.budget().clone())).collect()
}

fn t4_3(s: &Subject, _: &CheckConfig) -> Res {
    let Some((a, b)) = s.spec.as_ref().and_then(FamilySpec::matching_parts) else { return VACUOUS };
    let parts = part_subjects(s, &[a, b])?;
    let n = parts[0].order();
    let Some(k) = parts[0].regular() else { return VACUOUS };
    let mut lam1 = 0;
    for p in &parts {
        if p.order() != n || p.regular() != Some(k) || !p.graph.is_triangle_free() || !p.connected() {
            return VACUOUS;
        }
        if !p.is_super(0)? {
            return VACUOUS;
        }
        let Some(l) = p.lambda(1)? else { return VACUOUS };
        lam1 += l;
    }
    if n.min(lam1) < 3 * k {
        return VACUOUS;
    }
    if !s.connected() {
        return fail(s, "T4.3", "composition is disconnected".into());
    }
    super2_with_rho(s, "T4.3", k)
}

fn l4_4(s: &Subject, _: &CheckConfig) -> Res {
    let Some(FamilySpec::Hypercube(n)) = s.spec else { return VACUOUS };
    if n < 2 {
        return VACUOUS;
    }
    let l1 = s.lambda(1)?;
    if l1 != Some(2 * n - 2) || !s.optimal(1)? {
        return fail(s, "L4.4", format!("λ' = {l1:?}, ξ = {:?}", s.xi()));
    }
    if n >= 3 && !s.is_super(0)? {
        let frag = s.cut(0)?.and_then(|c| c.violator);
        return Ok(certificate(s, "L4.4", "not super-λ".into(), frag, None));
    }
    PASS
}

fn c4_5(s: &Subject, _: &CheckConfig) -> Res {
    let Some(FamilySpec::Hypercube(n)) = s.spec else { return VACUOUS };
    if n < 5 {
        return VACUOUS;
    }
    super2_with_rho(s, "C4.5", n - 1)
}

fn t4_7(s: &Subject, _: &CheckConfig) -> Res {
    let Some(specs) = s.spec.as_ref().and_then(FamilySpec::ring_parts) else { return VACUOUS };
    if specs.len() < 4 {
        return VACUOUS;
    }
    // Parts repeat in the common cases; evaluate each distinct spec once.
    let mut distinct = specs.clone();
    distinct.dedup();
    let parts = part_subjects(s, &distinct)?;
    let n = parts[0].order();
    let Some(k) = parts[0].regular() else { return VACUOUS };
    let ok = parts.iter().all(|p| {
        p.order() == n
            && p.regular() == Some(k)
            && p.graph.edge_connectivity() >= k
            && p.graph.is_triangle_free()
    });
    if !ok || k < 3 || n <= (3 * k + 3) / 2 {
        return VACUOUS;
    }
    super2_with_rho(s, "T4.7", k + 1)
}

fn chain(s: &Subject, cfg: &CheckConfig) -> Res {
    if !s.connected() {
        return VACUOUS;
    }
    let mut prev: Option<usize> = None;
    for h in 0..=cfg.chain_depth {
        let cur = s.lambda(h)?;
        match (prev, cur) {
            (_, None) => {}
            (None, Some(_)) if h > 0 => {
                return fail(s, "CHAIN", format!("λ^({h}) exists but λ^({}) does not", h - 1))
            }
            (Some(a), Some(b)) if a > b => {
                return fail(s, "CHAIN", format!("λ^({}) = {a} > λ^({h}) = {b}", h - 1))
            }
            _ => {}
        }
        prev = cur;
    }
    PASS
}

/// `(c, m)` with `n = c·d^m` and `d` not dividing `c`.
fn split_power(n: usize, d: usize) -> (usize, usize) {
    let (mut c, mut m) = (n, 0);
    while d > 1 && c % d == 0 && c > 0 {
        c /= d;
        m += 1;
    }
    (c, m)
}

fn circulant_rho(s: &Subject, _: &CheckConfig) -> Res {
    let Some(FamilySpec::Circulant { n, d }) = s.spec else { return VACUOUS };
    let (c, m) = split_power(n, d);
    if !(1 < c && c < d && c != 3 && d >= 4 && m >= 2) {
        return VACUOUS;
    }
    let expected = if c == 2 { 2 * m } else { 2 * m + 1 };
    super2_with_rho(s, "CIRCULANT", expected)
}

fn torus_rho(s: &Subject, _: &CheckConfig) -> Res {
    let Some(FamilySpec::Torus(dims)) = &s.spec else { return VACUOUS };
    if dims.len() < 3 || dims.iter().any(|&d| d < 4) {
        return VACUOUS;
    }
    super2_with_rho(s, "TORUS", 2 * dims.len() - 1)
}

fn circulant_degree(s: &Subject, _: &CheckConfig) -> Res {
    let Some(FamilySpec::Circulant { n, d }) = s.spec else { return VACUOUS };
    let (c, m) = split_power(n, d);
    if c >= d || (c == 1 && m == 0) {
        return VACUOUS;
    }
    let formula = match (c, d) {
        (1, 2) => 2 * m - 1,
        (1, _) => 2 * m,
        (2, _) => 2 * m + 1,
        _ => 2 * m + 2,
    };
    match s.regular() {
        Some(k) if k == formula => PASS,
        measured => {
            s.note(format!("circulant:{n},{d}: formula degree {formula}, measured {measured:?}"));
            fail(s, "CIRCULANT-DEGREE", format!("degree {measured:?}, formula {formula}"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::families;
    use crate::theorems::select_checks;

    fn verdict(spec: &str, id: &str) -> Verdict {
        let spec: FamilySpec = spec.parse().unwrap();
        let s = Subject::from_spec(&spec, Budget::unlimited()).unwrap();
        let [c] = select_checks(&[id]).unwrap()[..] else { panic!("one part") };
        c.evaluate(&s, &CheckConfig::default()).unwrap()
    }

    #[test]
    fn hub_and_cliques_detection() {
        assert!(is_hub_and_cliques(&families::star_composite(3, 2).unwrap(), 2));
        assert!(is_hub_and_cliques(&families::complete_bipartite(1, 5).unwrap(), 1));
        assert!(!is_hub_and_cliques(&families::petersen(), 3));
        assert!(is_hub_and_cliques(&families::complete(4).unwrap(), 3));
        assert!(!is_hub_and_cliques(&families::cycle(5).unwrap(), 2));
    }

    #[test]
    fn split_power_examples() {
        assert_eq!(split_power(32, 4), (2, 2));
        assert_eq!(split_power(8, 2), (1, 3));
        assert_eq!(split_power(12, 4), (3, 1));
        assert_eq!(split_power(5, 4), (5, 0));
    }

    #[test]
    fn q4_verdicts() {
        assert_eq!(verdict("hypercube:4", "T1.6"), Verdict::Pass);
        assert_eq!(verdict("hypercube:4", "C4.5"), Verdict::VacuousPass);
        assert_eq!(verdict("hypercube:4", "L4.4"), Verdict::Pass);
        assert_eq!(verdict("hypercube:4", "T3.4"), Verdict::Pass);
        assert_eq!(verdict("hypercube:4", "T3.8i"), Verdict::VacuousPass);
        assert_eq!(verdict("hypercube:4", "T4.3"), Verdict::VacuousPass);
        assert_eq!(verdict("hypercube:4", "C3.11"), Verdict::VacuousPass);
    }

    #[test]
    fn small_exact_cases() {
        assert_eq!(verdict("complete:4", "T3.2"), Verdict::Pass);
        assert_eq!(verdict("bipartite:3,3", "T3.2"), Verdict::Pass);
        assert_eq!(verdict("petersen", "T3.2"), Verdict::Pass);
        assert_eq!(verdict("petersen", "L3.1"), Verdict::Pass);
        assert_eq!(verdict("remark25", "T2.4i"), Verdict::VacuousPass);
        assert_eq!(verdict("remark27:2", "T2.4ii"), Verdict::VacuousPass);
        assert_eq!(verdict("cartesian:K2,K3,K3", "T2.4ii"), Verdict::Pass);
        assert_eq!(verdict("torus:4,4", "T3.4"), Verdict::Pass);
        assert_eq!(verdict("star:3,2", "T1.2"), Verdict::VacuousPass);
        assert_eq!(verdict("cycle:8", "L1.4"), Verdict::Pass);
    }

    #[test]
    fn circulant_degree_formula() {
        for (n, d) in [(8, 2), (16, 2), (8, 4), (12, 4), (32, 4), (18, 3), (5, 6)] {
            let spec = format!("circulant:{n},{d}");
            assert_eq!(verdict(&spec, "CIRCULANT-DEGREE"), Verdict::Pass, "{spec}");
        }
        assert_eq!(verdict("circulant:5,4", "CIRCULANT-DEGREE"), Verdict::VacuousPass);
    }

    #[test]
    fn composition_checks() {
        assert_eq!(verdict("cartesian:K4,K4", "T3.7"), Verdict::Pass);
        assert_eq!(verdict("matching:C4,C4:identity", "T4.3"), Verdict::VacuousPass);
    }

    #[test]
    fn sampled_checks_pass_on_known_graphs() {
        for spec in ["hypercube:4", "petersen", "remark25", "cartesian:K2,K3,K3"] {
            for id in ["L2.2i", "L2.2ii", "L3.6"] {
                assert!(!verdict(spec, id).is_fail(), "{spec} {id}");
            }
        }
        assert_eq!(verdict("hypercube:4", "L3.6"), Verdict::Pass);
    }

    #[test]
    fn forged_failure_reverifies_as_not_reproducible() {
        let s = Subject::from_spec(&FamilySpec::Petersen, Budget::unlimited()).unwrap();
        let Verdict::Fail(cert) = fail(&s, "L4.1", "forged".into()).unwrap() else { unreachable!() };
        let again = crate::theorems::reverify(&cert, &CheckConfig::default(), Budget::unlimited());
        assert_eq!(again, Ok(false));
    }
}
