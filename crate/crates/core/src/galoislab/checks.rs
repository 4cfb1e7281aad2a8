//! One function per theorem id. Each returns a verdict whose FAIL witness
//! names the first offending subgroup, subfield or element.

use super::orbits::{orbit_minpoly, splitting_failures};
use super::{Lattice, Verdict};
use crate::autgroup::{
    automorphisms, find_isomorphism, fixed_space, is_stable, pointwise_stabilizer, quotient_table,
    restriction_map, subfield_tower,
};
use crate::config::CONJUGATOR_BUDGET;
use crate::csalg::{
    bimodule_hom_dim, find_conjugator, group_part, is_g_stable, is_simple, span_closure, Simplicity, Subalgebra,
};
use crate::error::{Error, Result};
use crate::exactcore::linalg;
use crate::tower::{Certificate, GroundField};

const NOT_G: &str = "not a G-extension";

const GALOIS_ONLY: [&str; 11] = [
    "Thm-1Jun25-1",
    "Thm-1Jun25-2",
    "Thm-1Jun25-3",
    "Thm-11Jun25-1",
    "Thm-11Jun25-3",
    "Thm-19Jun25",
    "Lemma-ac1Jun25",
    "Lemma-bc1Jun25",
    "Lemma-a19Jun25",
    "Lemma-b19Jun25-1",
    "Lemma-b19Jun25-2",
];

/// PASS when nothing failed, otherwise FAIL carrying the first failure.
fn verdict(id: &str, failures: Vec<String>) -> Verdict {
    match failures.len() {
        0 => Verdict::pass(id),
        1 => Verdict::fail(id, failures[0].clone()),
        k => Verdict::fail(id, format!("{} (and {} more)", failures[0], k - 1)),
    }
}

/// Combines simplicity verdicts for a list of named algebras.
fn simplicity_verdict(id: &str, results: Vec<(String, Simplicity)>) -> Verdict {
    let mut failures = Vec::new();
    let mut undecided = Vec::new();
    let mut probabilistic = false;
    for (name, s) in results {
        match s.simple {
            Some(false) => failures.push(format!("{name} is not simple: {}", s.method)),
            None => undecided.push(name),
            Some(true) => probabilistic |= s.probabilistic,
        }
    }
    if !failures.is_empty() {
        return verdict(id, failures);
    }
    if !undecided.is_empty() {
        return Verdict::skipped(id, format!("simplicity undecided for {}", undecided.join(", ")));
    }
    if probabilistic {
        return Verdict::probabilistic(id, "random ideal test in positive characteristic");
    }
    Verdict::pass(id)
}

/// Centralizers computed once and shared by several checks.
struct Ctx<'l, 'a, K: GroundField> {
    lat: &'l Lattice<'a, K>,
    /// `C_E(image of L^H_k)`.
    cimg: Vec<Subalgebra<K::Elem>>,
    /// `C_E(L ⋊ H_k)`.
    cskew: Vec<Subalgebra<K::Elem>>,
}

pub(super) fn run_all<K: GroundField>(lat: &Lattice<K>) -> Result<Vec<Verdict>> {
    let cimg = lat.images.iter().map(|a| lat.commutant(a)).collect::<Result<Vec<_>>>()?;
    let cskew = lat
        .skews
        .iter()
        .map(|s| lat.commutant(&s.algebra))
        .collect::<Result<Vec<_>>>()?;
    let cx = Ctx { lat, cimg, cskew };
    let mut out = vec![
        g_extension(&cx),
        fixed_field_of_group(&cx),
        skew_is_direct(&cx),
        skew_commutant(&cx),
        bimodules(&cx),
        maximal_subfield(&cx),
    ];
    out.extend(double_centralizer(&cx)?);
    out.push(skews_are_simple(&cx)?);
    out.push(endomorphism_ring(&cx)?);
    out.push(skew_enumeration(&cx));
    out.push(stable_enumeration(&cx));
    out.push(noether_skolem(&cx)?);
    if lat.galois {
        out.push(subfield_to_subalgebra(&cx));
        out.push(subalgebra_to_subfield(&cx));
        out.push(correspondence(&cx));
        out.push(stable_subalgebras(&cx));
        out.push(galois_subfields(&cx)?);
        out.push(quotient_iso(&cx)?);
        out.push(relative_degree(&cx));
        out.push(relative_group(&cx));
        out.push(normality_criterion(&cx));
        out.push(orbit_minpolys(&cx)?);
        out.push(splitting(&cx));
    } else {
        out.extend(GALOIS_ONLY.iter().map(|id| Verdict::skipped(id, NOT_G)));
    }
    Ok(out)
}

fn g_extension<K: GroundField>(cx: &Ctx<K>) -> Verdict {
    let lat = cx.lat;
    let order = lat.group().order();
    let n = lat.n;
    let skew = lat.skews[lat.whole()].algebra.dim();
    let by_order = order == n;
    let by_dim = skew == n * n;
    let evidence = format!("|G| = {order}, [L:K] = {n}, dim L x G = {skew}, dim E = {}", n * n);
    if order > n {
        return Verdict::fail("Prop-A8May25", format!("|G| exceeds [L:K]: {evidence}"));
    }
    if by_order != by_dim {
        return Verdict::fail("Prop-A8May25", format!("criteria disagree: {evidence}"));
    }
    Verdict::pass("Prop-A8May25")
}

fn fixed_field_of_group<K: GroundField>(cx: &Ctx<K>) -> Verdict {
    let lat = cx.lat;
    let d = lat.subfields[lat.whole()].degree;
    let order = lat.group().order();
    let mut failures = Vec::new();
    if d * order != lat.n {
        failures.push(format!("[L^G:K] = {d}, |G| = {order}, [L:K] = {}", lat.n));
    }
    verdict("Thm-BC24Mar25-1", failures)
}

fn skew_is_direct<K: GroundField>(cx: &Ctx<K>) -> Verdict {
    let lat = cx.lat;
    let w = lat.whole();
    let s = &lat.skews[w];
    let index = lat.n / lat.subfields[w].degree;
    let mut failures = Vec::new();
    if !s.direct || s.algebra.dim() != lat.n * index {
        failures.push(format!(
            "dim L x G = {}, [L:K] [L:L^G] = {}",
            s.algebra.dim(),
            lat.n * index
        ));
    }
    if !s.rule_holds {
        failures.push("multiplication rule fails on a labeled pair".into());
    }
    if !cx.cimg[w].same_as(&s.algebra) {
        failures.push(format!("L x G differs from E(L/L^G) of dim {}", cx.cimg[w].dim()));
    }
    verdict("Thm-BC24Mar25-2", failures)
}

fn skew_commutant<K: GroundField>(cx: &Ctx<K>) -> Verdict {
    let lat = cx.lat;
    let w = lat.whole();
    let mut failures = Vec::new();
    if !cx.cskew[w].same_as(&lat.images[w]) {
        failures.push(format!(
            "commutant of L x G has dim {}, L^G has dim {}",
            cx.cskew[w].dim(),
            lat.images[w].dim()
        ));
    }
    verdict("Thm-BC24Mar25-5", failures)
}

fn bimodules<K: GroundField>(cx: &Ctx<K>) -> Verdict {
    let lat = cx.lat;
    let m = lat.group().order();
    let mut failures = Vec::new();
    for g in 0..m {
        for h in 0..m {
            let d = bimodule_hom_dim(lat.tower, lat.group(), g, h);
            if d != usize::from(g == h) {
                failures.push(format!("Hom(L g{g}, L g{h}) has dimension {d} over L"));
            }
        }
    }
    verdict("Thm-BC24Mar25-6", failures)
}

fn maximal_subfield<K: GroundField>(cx: &Ctx<K>) -> Verdict {
    let lat = cx.lat;
    let mut failures = Vec::new();
    if lat.subgroups[0].elements != [0] {
        failures.push("first subgroup is not trivial".into());
    } else {
        if lat.images[0].dim() != lat.n {
            failures.push(format!("image of L has dim {}", lat.images[0].dim()));
        }
        if !cx.cimg[0].same_as(&lat.images[0]) {
            failures.push(format!("C_E(L) has dim {}, not {}", cx.cimg[0].dim(), lat.n));
        }
    }
    verdict("Thm-B24Mar25-1", failures)
}

/// Double centralizer, simplicity of centralizers and the dimension product,
/// over every subfield image and every `L ⋊ H`.
fn double_centralizer<K: GroundField>(cx: &Ctx<K>) -> Result<Vec<Verdict>> {
    let lat = cx.lat;
    let f = lat.tower.field();
    let nn = lat.n * lat.n;
    let mut dc = Vec::new();
    let mut dims = Vec::new();
    let mut simple = Vec::new();
    let inputs = lat
        .images
        .iter()
        .zip(&cx.cimg)
        .enumerate()
        .map(|(k, (b, c))| (format!("L^H{k}"), b, c))
        .chain(
            lat.skews
                .iter()
                .zip(&cx.cskew)
                .enumerate()
                .map(|(k, (s, c))| (format!("L x H{k}"), &s.algebra, c)),
        );
    for (name, b, c) in inputs {
        let cc = lat.commutant(c)?;
        if !cc.same_as(b) {
            dc.push(format!("{name}: C(C(B)) has dim {}, B has dim {}", cc.dim(), b.dim()));
        }
        if b.dim() * c.dim() != nn {
            dims.push(format!("{name}: {} * {} != {nn}", b.dim(), c.dim()));
        }
        simple.push((format!("C_E({name})"), is_simple(f, c, lat.cfg.mc_trials)?));
    }
    Ok(vec![
        verdict("Thm-DCThm-1", dc),
        simplicity_verdict("Thm-DCThm-2", simple),
        verdict("Thm-DCThm-3", dims),
    ])
}

fn skews_are_simple<K: GroundField>(cx: &Ctx<K>) -> Result<Verdict> {
    let lat = cx.lat;
    let f = lat.tower.field();
    let results = lat
        .skews
        .iter()
        .enumerate()
        .map(|(k, s)| Ok((format!("L x H{k}"), is_simple(f, &s.algebra, lat.cfg.mc_trials)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(simplicity_verdict("Prop-A24Mar25-1", results))
}

fn endomorphism_ring<K: GroundField>(cx: &Ctx<K>) -> Result<Verdict> {
    let lat = cx.lat;
    let mut failures = Vec::new();
    for (k, b) in cx.cimg.iter().enumerate() {
        let end = lat.commutant(b)?;
        if !end.same_as(&lat.images[k]) {
            failures.push(format!("End over C_E(L^H{k}) has dim {}, not {}", end.dim(), lat.images[k].dim()));
        }
    }
    Ok(verdict("Cor-aB24Mar25-3", failures))
}

fn skew_enumeration<K: GroundField>(cx: &Ctx<K>) -> Verdict {
    let lat = cx.lat;
    let f = lat.tower.field();
    let top = &lat.skews[lat.whole()].algebra;
    let mut failures = Vec::new();
    if lat.skews.len() != lat.subgroups.len() {
        failures.push(format!("{} algebras for {} subgroups", lat.skews.len(), lat.subgroups.len()));
    }
    for (k, (s, h)) in lat.skews.iter().zip(&lat.subgroups).enumerate() {
        if !s.direct || !s.rule_holds {
            failures.push(format!("L x H{k} is not a direct skew product"));
        }
        if !lat.images[0].is_subalgebra_of(f, &s.algebra) || !s.algebra.is_subalgebra_of(f, top) {
            failures.push(format!("L x H{k} does not lie between L and L x G"));
        }
        if !s.algebra.is_closed(f) {
            failures.push(format!("L x H{k} is not closed under products"));
        }
        let part = group_part(f, lat.group(), &s.algebra);
        if part != h.elements {
            failures.push(format!("(L x H{k}) ∩ G = {part:?}, H{k} = {:?}", h.elements));
        }
        for (j, t) in lat.skews[..k].iter().enumerate() {
            if t.algebra.same_as(&s.algebra) {
                failures.push(format!("L x H{j} = L x H{k}"));
            }
        }
    }
    verdict("Cor-a24Mar25-1", failures)
}

fn stable_enumeration<K: GroundField>(cx: &Ctx<K>) -> Verdict {
    let lat = cx.lat;
    let f = lat.tower.field();
    let mut failures = Vec::new();
    for (k, (s, h)) in lat.skews.iter().zip(&lat.subgroups).enumerate() {
        let stable = is_g_stable(f, lat.group(), &s.algebra);
        if stable != h.normal {
            failures.push(format!("L x H{k}: G-stable = {stable}, {} normal = {}", lat.describe_subgroup(k), h.normal));
        }
    }
    verdict("Cor-a24Mar25-2", failures)
}

/// For every subfield M and every g: the embeddings `M -> E` given by
/// `m -> M(m)` and `m -> M(g m)` are conjugate by a unit.
fn noether_skolem<K: GroundField>(cx: &Ctx<K>) -> Result<Verdict> {
    let lat = cx.lat;
    let f = lat.tower.field();
    let n = lat.n;
    let mut failures = Vec::new();
    for (k, m) in lat.subfields.iter().enumerate() {
        let a = lat.tower.left_mul_matrix(&m.primitive);
        for g in 1..lat.group().order() {
            let b = lat.tower.left_mul_matrix(&lat.group().element(g).apply(f, &m.primitive));
            let u = match find_conjugator(f, n, &[a.clone()], &[b.clone()], CONJUGATOR_BUDGET) {
                Ok(u) => u,
                Err(Error::ConjugatorBudget { budget }) => {
                    failures.push(format!("L^H{k}, g{g}: no conjugating unit among {budget} candidates"));
                    continue;
                }
                Err(e) => return Err(e),
            };
            let inv = linalg::inverse(f, &u).expect("accepted conjugators are invertible");
            let target = span_closure(f, n, &[b])?;
            let moved = lat.images[k]
                .basis()
                .iter()
                .all(|x| target.contains(f, &linalg::mat_mul(f, &linalg::mat_mul(f, &u, x), &inv)));
            if !moved || target.dim() != lat.images[k].dim() {
                failures.push(format!("L^H{k}, g{g}: u A u^-1 differs from B"));
            }
        }
    }
    Ok(verdict("Thm-NoetherSkolem", failures))
}

/// `G(L/M)` for each subfield, as an index into the subgroup list.
fn stabilizer_index<K: GroundField>(lat: &Lattice<K>, k: usize) -> Option<usize> {
    let stab = pointwise_stabilizer(lat.tower, lat.group(), &lat.subfields[k].basis);
    lat.subgroups.iter().position(|h| h.elements == stab)
}

fn subfield_to_subalgebra<K: GroundField>(cx: &Ctx<K>) -> Verdict {
    let lat = cx.lat;
    let mut failures = Vec::new();
    for k in 0..lat.subfields.len() {
        match stabilizer_index(lat, k) {
            Some(j) if cx.cimg[k].same_as(&lat.skews[j].algebra) => {}
            Some(j) => failures.push(format!(
                "C_E(L^H{k}) has dim {}, L x G^M = L x H{j} has dim {}",
                cx.cimg[k].dim(),
                lat.skews[j].algebra.dim()
            )),
            None => failures.push(format!("G(L/L^H{k}) is not in the subgroup list")),
        }
    }
    verdict("Thm-1Jun25-1", failures)
}

fn subalgebra_to_subfield<K: GroundField>(cx: &Ctx<K>) -> Verdict {
    let lat = cx.lat;
    let f = lat.tower.field();
    let mut failures = Vec::new();
    for (k, s) in lat.skews.iter().enumerate() {
        let part = group_part(f, lat.group(), &s.algebra);
        match lat.subgroups.iter().position(|h| h.elements == part) {
            Some(j) if cx.cskew[k].same_as(&lat.images[j]) => {}
            Some(j) => failures.push(format!(
                "C_E(L x H{k}) has dim {}, L^(A∩G) = L^H{j} has dim {}",
                cx.cskew[k].dim(),
                lat.images[j].dim()
            )),
            None => failures.push(format!("(L x H{k}) ∩ G = {part:?} is not a listed subgroup")),
        }
    }
    verdict("Thm-1Jun25-2", failures)
}

fn correspondence<K: GroundField>(cx: &Ctx<K>) -> Verdict {
    let lat = cx.lat;
    let f = lat.tower.field();
    let order = lat.group().order();
    let mut failures = Vec::new();
    for (k, (h, m)) in lat.subgroups.iter().zip(&lat.subfields).enumerate() {
        let stab = pointwise_stabilizer(lat.tower, lat.group(), &m.basis);
        if stab != h.elements {
            failures.push(format!("G(L/L^H{k}) = {stab:?} differs from {}", lat.describe_subgroup(k)));
        }
        if fixed_space(lat.tower, lat.group(), &stab) != m.basis {
            failures.push(format!("L^G(L/M) differs from M for {}", lat.describe_subfield(k)));
        }
        if m.degree * h.order() != order {
            failures.push(format!("[L^H{k}:K] = {} but |G|/|H{k}| = {}/{}", m.degree, order, h.order()));
        }
        for j in 0..k {
            if lat.subfields[j].basis == m.basis {
                failures.push(format!("H{j} and H{k} have the same fixed field"));
            }
        }
    }
    for i in 0..lat.subgroups.len() {
        for j in 0..lat.subgroups.len() {
            let sub = lat.subgroups[i].is_subset_of(&lat.subgroups[j]);
            let sup = lat.subfields[i].basis.contains_subspace(f, &lat.subfields[j].basis);
            if sub != sup {
                failures.push(format!("H{i} ⊆ H{j} is {sub} but L^H{j} ⊆ L^H{i} is {sup}"));
            }
        }
    }
    verdict("Thm-1Jun25-3", failures)
}

fn stable_subalgebras<K: GroundField>(cx: &Ctx<K>) -> Verdict {
    let lat = cx.lat;
    let f = lat.tower.field();
    let mut failures = Vec::new();
    for (k, c) in cx.cimg.iter().enumerate() {
        let stable = is_g_stable(f, lat.group(), c);
        let normal = stabilizer_index(lat, k).map(|j| lat.subgroups[j].normal);
        if normal != Some(stable) {
            failures.push(format!("C_E(L^H{k}): G-stable = {stable}, G^M normal = {normal:?}"));
        }
    }
    verdict("Thm-11Jun25-1", failures)
}

/// Three criteria for each subfield Γ: Γ/K is Galois as its own tower,
/// Γ is G-stable, `G(L/Γ)` is normal.
fn galois_subfields<K: GroundField>(cx: &Ctx<K>) -> Result<Verdict> {
    let lat = cx.lat;
    let f = lat.tower.field();
    let mut failures = Vec::new();
    for (k, m) in lat.subfields.iter().enumerate() {
        let sub = subfield_tower(f, m)?;
        let own = automorphisms(&sub, lat.cfg)?.group.order() == m.degree;
        let stable = is_stable(lat.tower, lat.group(), &m.basis);
        let normal = stabilizer_index(lat, k).map(|j| lat.subgroups[j].normal);
        if normal != Some(own) || own != stable {
            failures.push(format!(
                "{}: Galois = {own}, G-stable = {stable}, normal = {normal:?}",
                lat.describe_subfield(k)
            ));
        }
    }
    Ok(verdict("Thm-11Jun25-3", failures))
}

fn quotient_iso<K: GroundField>(cx: &Ctx<K>) -> Result<Verdict> {
    let lat = cx.lat;
    let mut failures = Vec::new();
    for (k, (h, m)) in lat.subgroups.iter().zip(&lat.subfields).enumerate() {
        let r = match restriction_map(lat.tower, lat.group(), m, lat.cfg) {
            Ok(r) => r,
            Err(Error::NotStable) => {
                if h.normal {
                    failures.push(format!("{} is normal but L^H{k} is not G-stable", lat.describe_subgroup(k)));
                }
                continue;
            }
            Err(e) => return Err(e),
        };
        if !h.normal {
            failures.push(format!("L^H{k} is G-stable but {} is not normal", lat.describe_subgroup(k)));
            continue;
        }
        if !r.homomorphism || !r.surjective {
            failures.push(format!(
                "restriction to L^H{k}: homomorphism = {}, surjective = {}",
                r.homomorphism, r.surjective
            ));
        }
        if r.kernel != h.elements || r.kernel_pointwise != h.elements {
            failures.push(format!(
                "restriction to L^H{k}: kernel {:?}, pointwise {:?}, expected {:?}",
                r.kernel, r.kernel_pointwise, h.elements
            ));
        }
        let (q, _) = quotient_table(lat.group().cayley(), &h.elements);
        if find_isomorphism(&q, r.target.cayley()).is_none() {
            failures.push(format!("G/H{k} is not isomorphic to G(L^H{k}/K)"));
        }
    }
    Ok(verdict("Thm-19Jun25", failures))
}

fn relative_degree<K: GroundField>(cx: &Ctx<K>) -> Verdict {
    let lat = cx.lat;
    let mut failures = Vec::new();
    for (k, m) in lat.subfields.iter().enumerate() {
        let stab = pointwise_stabilizer(lat.tower, lat.group(), &m.basis);
        if stab.len() * m.degree != lat.n {
            failures.push(format!("|G^M| = {} but [L:M] = {} for M = L^H{k}", stab.len(), lat.n / m.degree));
        }
    }
    verdict("Lemma-ac1Jun25", failures)
}

/// `G(L/M)` as the M-linear automorphisms (`S_g` commutes with `M(m)`)
/// against `G^M` as the automorphisms fixing M pointwise.
fn relative_group<K: GroundField>(cx: &Ctx<K>) -> Verdict {
    let lat = cx.lat;
    let f = lat.tower.field();
    let mut failures = Vec::new();
    for (k, m) in lat.subfields.iter().enumerate() {
        let mults: Vec<_> = m.basis.basis().iter().map(|b| lat.tower.left_mul_matrix(b)).collect();
        let linear: Vec<usize> = (0..lat.group().order())
            .filter(|&g| {
                let s = lat.group().matrix(g);
                mults
                    .iter()
                    .all(|x| linalg::mat_mul(f, s, x) == linalg::mat_mul(f, x, s))
            })
            .collect();
        let fixing = pointwise_stabilizer(lat.tower, lat.group(), &m.basis);
        if linear != fixing {
            failures.push(format!("M = L^H{k}: M-linear {linear:?}, fixing M {fixing:?}"));
        }
    }
    verdict("Lemma-bc1Jun25", failures)
}

fn normality_criterion<K: GroundField>(cx: &Ctx<K>) -> Verdict {
    let lat = cx.lat;
    let g = lat.group();
    let mut failures = Vec::new();
    for (k, m) in lat.subfields.iter().enumerate() {
        let stab = pointwise_stabilizer(lat.tower, g, &m.basis);
        let normal = (0..g.order()).all(|x| stab.iter().all(|&h| stab.contains(&g.mul(g.mul(x, h), g.inv(x)))));
        let stable = is_stable(lat.tower, g, &m.basis);
        if normal != stable {
            failures.push(format!("L^H{k}: G(L/Γ) normal = {normal}, Γ G-stable = {stable}"));
        }
    }
    verdict("Lemma-a19Jun25", failures)
}

/// Elements whose orbit polynomials are checked: the generators above the
/// ground, their sum, and every subfield primitive element.
fn probe_elements<K: GroundField>(lat: &Lattice<K>) -> Vec<Vec<K::Elem>> {
    let t = lat.tower;
    let mut out: Vec<Vec<K::Elem>> = (0..t.levels().len()).map(|i| t.generator(i)).collect();
    let sum = out.iter().fold(t.zero(), |acc, g| t.add(&acc, g));
    out.push(sum);
    out.extend(lat.subfields.iter().map(|m| m.primitive.clone()));
    let mut uniq = Vec::new();
    for e in out {
        if !uniq.contains(&e) {
            uniq.push(e);
        }
    }
    uniq
}

fn orbit_minpolys<K: GroundField>(cx: &Ctx<K>) -> Result<Verdict> {
    let lat = cx.lat;
    let t = lat.tower;
    let f = t.field();
    let mut failures = Vec::new();
    let mut undecided = Vec::new();
    for l in probe_elements(lat) {
        let name = t.format_elem(&l);
        let om = orbit_minpoly(t, lat.group(), &l);
        if om.poly.is_none() {
            failures.push(format!("orbit polynomial of {name} has a coefficient outside K"));
            continue;
        }
        if !om.agrees {
            failures.push(format!("orbit polynomial of {name} differs from its minimal polynomial"));
            continue;
        }
        match f.irreducible_over(&om.oracle, "x")? {
            Certificate::Irreducible(_) => {}
            Certificate::Reducible(w) => failures.push(format!("orbit polynomial of {name} has factor {w}")),
            Certificate::Unknown => undecided.push(name),
        }
    }
    if failures.is_empty() && !undecided.is_empty() {
        return Ok(Verdict::skipped(
            "Lemma-b19Jun25-1",
            format!("irreducibility undecided for {}", undecided.join(", ")),
        ));
    }
    Ok(verdict("Lemma-b19Jun25-1", failures))
}

fn splitting<K: GroundField>(cx: &Ctx<K>) -> Verdict {
    verdict("Lemma-b19Jun25-2", splitting_failures(cx.lat.tower, cx.lat.group()))
}
