use std::collections::{HashMap, HashSet};

use num::{BigInt, BigRational, Signed};

use crate::csf::{
    a_coefficient_via_tableaux, a_coefficients, c_by_length, chromatic_polynomial, chromatic_symmetric_function,
    evaluate, f_coefficients, proper_coloring_count, CsfReport,
};
use crate::error::Result;
use crate::orderstruct::{
    acyclic_orientation_sink_counts, acyclic_orientations, enumerate_graphs, enumerate_posets, Graph, GraphFilter,
    Poset, PosetFilter,
};
use crate::partitions::{compositions_of, partitions_of, Partition};
use crate::symfunc::{inverse_kostka_matrix, inverse_kostka_matrix_algebraic, kostka, kostka_matrix};
use crate::tableaux::{
    enumerate_p_tableaux, enumerate_srht, hook_tableaux_inducing, orientation_from_hook_tableau, sigma,
    SpecialRimHookPTableau, SpecialRimHookTabloid,
};

use super::{run, Report};

/// Largest palette used by the specialization cross-check.
pub const MAX_PALETTE: usize = 4;

fn poset_instances(max_n: usize, filter: PosetFilter) -> Result<Vec<(String, Poset)>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for (i, p) in enumerate_posets(n, filter)?.enumerate() {
            out.push((format!("poset n={n} #{i:06}"), p));
        }
    }
    Ok(out)
}

fn graph_instances(max_n: usize) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for (i, g) in enumerate_graphs(n, GraphFilter::default())?.enumerate() {
            out.push((format!("graph n={n} #{i:06}"), g));
        }
    }
    Ok(out)
}

fn describe(p: &Poset) -> String {
    let covers: Vec<String> = p.cover_relations().iter().map(|(u, v)| format!("{u}<{v}")).collect();
    if covers.is_empty() {
        format!("antichain of {}", p.len())
    } else {
        covers.join(" ")
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// `f_λ` equals the number of P-tableaux of shape `λ`, for (3+1)-free `P`.
pub fn verify_gasharov(max_n: usize, jobs: usize) -> Result<Report> {
    let instances = poset_instances(max_n, PosetFilter::THREE_PLUS_ONE_FREE)?;
    run("gasharov", &[("max_n", max_n)], jobs, instances, |p| {
        let mut msgs = Vec::new();
        for c in f_coefficients(&p.incomparability_graph())? {
            let count = enumerate_p_tableaux(p, &c.partition)?.len() as i64;
            if count != c.value {
                msgs.push(format!(
                    "[{}] f_{{{}}} = {} but there are {count} P-tableaux",
                    describe(p),
                    c.partition,
                    c.value
                ));
            }
        }
        Ok(msgs)
    })
}

/// The signed count of special rim hook P-tableaux of type `λ` equals the
/// e-coefficient `a_λ`; also `a = K⁻¹ f`.
pub fn verify_theorem1(max_n: usize, jobs: usize) -> Result<Report> {
    let instances = poset_instances(max_n, PosetFilter::THREE_PLUS_ONE_FREE)?;
    let kinv: HashMap<usize, Vec<Vec<i64>>> = (1..=max_n).map(|d| (d, inverse_kostka_matrix(d))).collect();
    run("theorem1", &[("max_n", max_n)], jobs, instances, |p| {
        let g = p.incomparability_graph();
        let a = a_coefficients(&g)?;
        let f = f_coefficients(&g)?;
        let kinv = &kinv[&p.len()];
        let mut msgs = Vec::new();
        for (i, c) in a.iter().enumerate() {
            let signed = a_coefficient_via_tableaux(p, &c.partition)?;
            if signed != c.value {
                msgs.push(format!(
                    "[{}] a_{{{}}} = {} but the signed tableau count is {signed}",
                    describe(p),
                    c.partition,
                    c.value
                ));
            }
            let via_f: i64 = kinv[i].iter().zip(&f).map(|(k, f)| k * f.value).sum();
            if via_f != c.value {
                msgs.push(format!(
                    "[{}] a_{{{}}} = {} but K⁻¹f gives {via_f}",
                    describe(p),
                    c.partition,
                    c.value
                ));
            }
        }
        Ok(msgs)
    })
}

/// `π_k = Σ_ℓ C(ℓ-1, k-1) κ_ℓ` for every poset, with the explicit
/// correspondence checked orientation by orientation.
pub fn verify_lemma1(max_n: usize, jobs: usize) -> Result<Report> {
    let instances = poset_instances(max_n, PosetFilter::ALL)?;
    run("lemma1", &[("max_n", max_n)], jobs, instances, |p| {
        let n = p.len();
        let g = p.incomparability_graph();
        let orientations = acyclic_orientations(&g)?;
        let kappa = acyclic_orientation_sink_counts(&g)?.to_vec(n);
        let mut msgs = Vec::new();
        for k in 1..=n {
            let shape = Partition::hook(n, k)?;
            let tableaux = enumerate_p_tableaux(p, &shape)?;
            let pi = tableaux.len() as u64;
            let rhs: u64 = (1..=n).map(|l| binomial(l - 1, k - 1) * kappa[l - 1]).sum();
            if pi != rhs {
                msgs.push(format!("[{}] pi_{k} = {pi} but the sink sum is {rhs}", describe(p)));
            }
            let mut produced = HashSet::new();
            for o in &orientations {
                let built = hook_tableaux_inducing(p, o, k)?;
                let expected = binomial(o.sink_count() - 1, k - 1);
                if built.len() as u64 != expected {
                    msgs.push(format!(
                        "[{}] orientation {:?} with {} sinks yields {} tableaux for k={k}, expected {expected}",
                        describe(p),
                        o.arcs(),
                        o.sink_count(),
                        built.len()
                    ));
                }
                for t in built {
                    if orientation_from_hook_tableau(p, &t)? != *o {
                        msgs.push(format!("[{}] tableau {:?} does not induce {:?}", describe(p), t.rows(), o.arcs()));
                    }
                    if !produced.insert(t.clone()) {
                        msgs.push(format!("[{}] tableau {:?} built twice", describe(p), t.rows()));
                    }
                }
            }
            let all: HashSet<_> = tableaux.into_iter().collect();
            if produced != all {
                msgs.push(format!(
                    "[{}] constructions give {} hook tableaux with k={k}, enumeration gives {}",
                    describe(p),
                    produced.len(),
                    all.len()
                ));
            }
        }
        Ok(msgs)
    })
}

fn sink_check(g: &Graph, label: &str) -> Result<Vec<String>> {
    let n = g.len();
    let c = c_by_length(&a_coefficients(g)?, n);
    let kappa = acyclic_orientation_sink_counts(g)?.to_vec(n);
    let kappa: Vec<i64> = kappa.into_iter().map(|k| k as i64).collect();
    Ok(if c == kappa {
        Vec::new()
    } else {
        vec![format!("[{label}] c = {c:?} but kappa = {kappa:?}")]
    })
}

/// `c_ℓ = κ_ℓ` on incomparability graphs of (3+1)-free posets and on all
/// graphs.
pub fn verify_sink_theorem(max_n_posets: usize, max_n_graphs: usize, jobs: usize) -> Result<Report> {
    let mut instances: Vec<(String, (Graph, String))> = poset_instances(max_n_posets, PosetFilter::THREE_PLUS_ONE_FREE)?
        .into_iter()
        .map(|(id, p)| (id, (p.incomparability_graph(), describe(&p))))
        .collect();
    instances.extend(graph_instances(max_n_graphs)?.into_iter().map(|(id, g)| {
        let label = g.describe();
        (id, (g, label))
    }));
    run(
        "sink-theorem",
        &[("max_n_posets", max_n_posets), ("max_n_graphs", max_n_graphs)],
        jobs,
        instances,
        |(g, label)| sink_check(g, label),
    )
}

/// The involution on non-hook special rim hook P-tableaux: an involution,
/// sign-reversing, fixing the P-tableau and the number of hooks, so that the
/// non-hook terms cancel for each hook count.
pub fn verify_sigma(max_n: usize, jobs: usize) -> Result<Report> {
    let instances = poset_instances(max_n, PosetFilter::THREE_PLUS_ONE_FREE)?;
    let mut non_hook: HashMap<usize, Vec<(Partition, Vec<SpecialRimHookTabloid>)>> = HashMap::new();
    for d in 1..=max_n {
        let shapes = partitions_of(d)
            .into_iter()
            .filter(|mu| !mu.is_hook().unwrap_or(true))
            .map(|mu| {
                let tabloids = enumerate_srht(&mu, None);
                (mu, tabloids)
            })
            .collect();
        non_hook.insert(d, shapes);
    }
    run("sigma", &[("max_n", max_n)], jobs, instances, |p| {
        let n = p.len();
        let mut msgs = Vec::new();
        let mut signed_by_hooks = vec![0i64; n + 1];
        for (mu, tabloids) in &non_hook[&n] {
            for t in enumerate_p_tableaux(p, mu)? {
                for r in tabloids {
                    let x = SpecialRimHookPTableau::new(t.clone(), r.clone())?;
                    signed_by_hooks[r.hook_count()] += x.sign();
                    let y = match sigma(&x) {
                        Ok(y) => y,
                        Err(e) => {
                            msgs.push(format!("[{}] sigma failed on {mu}: {e}", describe(p)));
                            continue;
                        }
                    };
                    let mut problems = Vec::new();
                    if let Err(e) = y.tabloid().check() {
                        problems.push(format!("image is not a tabloid ({e})"));
                    }
                    if y.sign() != -x.sign() {
                        problems.push("sign not reversed".to_string());
                    }
                    if y.tableau() != x.tableau() {
                        problems.push("P-tableau changed".to_string());
                    }
                    if y.tabloid().hook_count() != r.hook_count() {
                        problems.push("hook count changed".to_string());
                    }
                    if sigma(&y).ok().as_ref() != Some(&x) {
                        problems.push("not an involution".to_string());
                    }
                    if !problems.is_empty() {
                        msgs.push(format!(
                            "[{}] shape {mu}, tableau {:?}, tabloid {:?}: {}",
                            describe(p),
                            t.rows(),
                            r.hooks().iter().map(|h| h.cells().to_vec()).collect::<Vec<_>>(),
                            problems.join(", ")
                        ));
                    }
                }
            }
        }
        for (l, s) in signed_by_hooks.iter().enumerate() {
            if *s != 0 {
                msgs.push(format!("[{}] non-hook terms with {l} hooks sum to {s}", describe(p)));
            }
        }
        Ok(msgs)
    })
}

/// For an ordinal sum of antichains of sizes `ν`, `f_μ = ∏ ν_i! · K_{μ,ν}`.
pub fn verify_ordinal_sum_identity(max_total: usize, jobs: usize) -> Result<Report> {
    let mut instances = Vec::new();
    for total in 1..=max_total {
        for nu in compositions_of(total) {
            let id = nu.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            instances.push((format!("nu n={total} ({id})"), nu));
        }
    }
    run("ordinal-sum", &[("max_total", max_total)], jobs, instances, |nu| {
        let p = Poset::ordinal_sum_of_antichains(nu);
        let weight: i64 = nu.iter().map(|&v| (1..=v as i64).product::<i64>()).product();
        let mut msgs = Vec::new();
        for c in f_coefficients(&p.incomparability_graph())? {
            let expected = weight * kostka(&c.partition, nu)? as i64;
            if expected != c.value {
                msgs.push(format!("f_{{{}}} = {} but the Kostka formula gives {expected}", c.partition, c.value));
            }
        }
        Ok(msgs)
    })
}

/// The tabloid matrix times the Kostka matrix is the identity, and agrees
/// with exact inversion.
pub fn verify_inverse_kostka(max_d: usize, jobs: usize) -> Result<Report> {
    let instances: Vec<(String, usize)> = (1..=max_d).map(|d| (format!("degree {d:02}"), d)).collect();
    run("inverse-kostka", &[("max_d", max_d)], jobs, instances, |&d| {
        let kinv = inverse_kostka_matrix(d);
        let k = kostka_matrix(d);
        let ps = partitions_of(d);
        let mut msgs = Vec::new();
        for (i, row) in kinv.iter().enumerate() {
            for j in 0..ps.len() {
                let entry: i64 = row.iter().zip(&k).map(|(a, krow)| a * krow[j]).sum();
                if entry != i64::from(i == j) {
                    msgs.push(format!("(K⁻¹K)[{}][{}] = {entry}", ps[i], ps[j]));
                }
            }
        }
        if inverse_kostka_matrix_algebraic(d)? != kinv {
            msgs.push("tabloid counts differ from the exact inverse".to_string());
        }
        Ok(msgs)
    })
}

/// `X_G(1^k)` counts proper `k`-colourings, and `Σ κ_ℓ = |χ_G(-1)|`.
pub fn verify_specialization(max_n: usize, jobs: usize) -> Result<Report> {
    let instances = graph_instances(max_n)?;
    run(
        "specialization",
        &[("max_n", max_n), ("palette", MAX_PALETTE)],
        jobs,
        instances,
        |g| {
            let x = chromatic_symmetric_function(g)?;
            let mut msgs = Vec::new();
            for k in 0..=MAX_PALETTE {
                let direct = proper_coloring_count(g, k);
                let special = x.specialize_ones(k)?;
                if special != BigRational::from_integer(BigInt::from(direct)) {
                    msgs.push(format!("[{}] X(1^{k}) = {special} but {direct} colourings", g.describe()));
                }
            }
            let total = acyclic_orientation_sink_counts(g)?.total();
            let at_minus_one = evaluate(&chromatic_polynomial(g)?, -1).abs();
            if at_minus_one != BigRational::from_integer(BigInt::from(total)) {
                msgs.push(format!(
                    "[{}] {total} acyclic orientations but |chi(-1)| = {at_minus_one}",
                    g.describe()
                ));
            }
            Ok(msgs)
        },
    )
}

/// Every e-coefficient of every (3+1)-free incomparability graph is
/// nonnegative. Violations carry the full coefficient report.
pub fn scan_e_positivity(max_n: usize, jobs: usize) -> Result<Report> {
    let instances = poset_instances(max_n, PosetFilter::THREE_PLUS_ONE_FREE)?;
    let lookup: HashMap<String, Poset> = instances.iter().cloned().collect();
    let mut report = run("e-positivity", &[("max_n", max_n)], jobs, instances, |p| {
        Ok(a_coefficients(&p.incomparability_graph())?
            .into_iter()
            .filter(|c| c.value < 0)
            .map(|c| format!("[{}] a_{{{}}} = {}", describe(p), c.partition, c.value))
            .collect())
    })?;
    for w in &mut report.failures {
        let p = &lookup[&w.instance];
        w.report = Some(CsfReport::new(describe(p), &p.incomparability_graph())?);
    }
    Ok(report)
}
