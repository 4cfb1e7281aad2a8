//! Acceptance gate over the golden towers. Prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use gext::autgroup::{
    automorphisms, find_isomorphism, fixed_space, is_stable, pointwise_stabilizer, quotient_table, restriction_map,
    subfield_tower, AutGroup,
};
use gext::config::CONJUGATOR_BUDGET;
use gext::csalg::{bimodule_hom_dim, find_conjugator, group_part, is_g_stable, Subalgebra};
use gext::exactcore::{linalg, rat};
use gext::galoislab::{full_verify, lattice_report, orbit_minpoly, splitting_failures, Lattice, Report, Status};
use gext::tower::{build_tower, GroundField, ParsedTower};
use gext::{Rational, Rationals, RunConfig, Tower};

/// Wall-clock bound for classifying all nine towers.
const CLASSIFY_LIMIT: Duration = Duration::from_secs(10);
/// Wall-clock bound for the full suite on the S3 tower.
const S3_VERIFY_LIMIT: Duration = Duration::from_secs(60);

const T1: &str = "t1_sqrt2";
const T2: &str = "t2_cbrt2";
const T3: &str = "t3_klein4";
const T4: &str = "t4_cyclic3";
const T5: &str = "t5_s3";
const T6: &str = "t6_gf16";
const T7: &str = "t7_gf64";
const T8: &str = "t8_gf81";
const T9: &str = "t9_trivial";
const ALL: [&str; 9] = [T1, T2, T3, T4, T5, T6, T7, T8, T9];

type Outcome = Result<String, String>;

fn path(name: &str) -> String {
    format!("{}/../../towers/{name}.tower", env!("CARGO_MANIFEST_DIR"))
}

fn load(name: &str) -> String {
    std::fs::read_to_string(path(name)).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Something to run on a tower whatever its ground field.
trait Visit {
    type Out;
    fn visit<K: GroundField>(self, t: &Tower<K>) -> Self::Out;
}

fn with_tower<V: Visit>(name: &str, v: V) -> V::Out {
    match build_tower(&load(name), false).unwrap() {
        ParsedTower::Rational(abs) => match abs.over_base() {
            Some(t) => v.visit(&t),
            None => v.visit(&abs.over_ground()),
        },
        ParsedTower::Prime(abs) => match abs.over_base() {
            Some(t) => v.visit(&t),
            None => v.visit(&abs.over_ground()),
        },
    }
}

fn rational_tower(name: &str) -> Tower<Rationals> {
    match build_tower(&load(name), false).unwrap() {
        ParsedTower::Rational(abs) => abs.over_base().unwrap(),
        ParsedTower::Prime(_) => panic!("{name} is not over Q"),
    }
}

fn group_of<K: GroundField>(t: &Tower<K>) -> AutGroup<K::Elem> {
    automorphisms(t, &RunConfig::default()).unwrap().group
}

fn verify(name: &str) -> Report {
    full_verify(&load(name), &RunConfig::default()).unwrap()
}

fn status(r: &Report, id: &str) -> Status {
    r.verdict(id).map(|v| v.status).unwrap_or(Status::Fail)
}

fn classifier() -> Outcome {
    let start = Instant::now();
    for name in ALL {
        let r = lattice_report(&load(name), &RunConfig::default()).map_err(|e| format!("{name}: {e}"))?;
        let n = r.tower.degree;
        let by_order = r.group.order == n;
        let by_dim = r.subfields.last().unwrap().skew_dim == n * n;
        ensure(by_order == by_dim, || format!("{name}: |G| = n is {by_order}, dim = n^2 is {by_dim}"))?;
        ensure(r.galois == (name != T2), || format!("{name}: galois = {}", r.galois))?;
    }
    let took = start.elapsed();
    ensure(took < CLASSIFY_LIMIT, || format!("took {took:?}"))?;
    Ok(format!("T1, T3-T9 Galois, T2 not; both criteria agree; {:.1}s total", took.as_secs_f64()))
}

fn skew_dimension() -> Outcome {
    for name in ALL {
        let r = lattice_report(&load(name), &RunConfig::default()).map_err(|e| e.to_string())?;
        let n = r.tower.degree;
        let top = r.subfields.last().unwrap();
        ensure(top.skew_dim == n * (n / top.degree), || {
            format!("{name}: dim L x G = {}, [L:K][L:L^G] = {}", top.skew_dim, n * (n / top.degree))
        })?;
    }
    Ok("dim L x G = [L:K][L:L^G] on all nine towers".into())
}

fn double_centralizer() -> Outcome {
    let mut s3 = Duration::ZERO;
    for name in [T1, T2, T3, T4, T5, T6, T7, T8] {
        let start = Instant::now();
        let r = verify(name);
        if name == T5 {
            s3 = start.elapsed();
        }
        for id in ["Thm-DCThm-1", "Thm-DCThm-3"] {
            ensure(status(&r, id) == Status::Pass, || format!("{name} {id}: {:?}", r.verdict(id)))?;
        }
    }
    ensure(s3 < S3_VERIFY_LIMIT, || format!("T5 took {s3:?}"))?;
    Ok(format!("C(C(B)) = B and dim B dim C(B) = dim E on T1-T8; T5 in {:.1}s", s3.as_secs_f64()))
}

struct Correspondence;

impl Visit for Correspondence {
    type Out = Result<usize, String>;
    fn visit<K: GroundField>(self, t: &Tower<K>) -> Self::Out {
        let cfg = RunConfig::default();
        let lat = Lattice::compute(t, &cfg).map_err(|e| e.to_string())?;
        let g = lat.group();
        let f = t.field();
        for (k, (h, m)) in lat.subgroups.iter().zip(&lat.subfields).enumerate() {
            let back = pointwise_stabilizer(t, g, &m.basis);
            ensure(back == h.elements, || format!("G(L/L^H{k}) != H{k}"))?;
            ensure(fixed_space(t, g, &back) == m.basis, || format!("L^G(L/M{k}) != M{k}"))?;
        }
        for (i, hi) in lat.subgroups.iter().enumerate() {
            for (j, hj) in lat.subgroups.iter().enumerate() {
                let reversed = lat.subfields[i].basis.contains_subspace(f, &lat.subfields[j].basis);
                ensure(hi.is_subset_of(hj) == reversed, || format!("order not reversed for H{i}, H{j}"))?;
            }
        }
        let distinct = (0..lat.subfields.len())
            .filter(|&k| (0..k).all(|j| lat.subfields[j].basis != lat.subfields[k].basis))
            .count();
        ensure(distinct == lat.subgroups.len(), || format!("{distinct} subfields, {} subgroups", lat.subgroups.len()))?;
        Ok(distinct)
    }
}

fn correspondence_counts() -> Outcome {
    for (name, expected) in [(T3, 5), (T4, 2), (T5, 6), (T7, 4)] {
        let got = with_tower(name, Correspondence).map_err(|e| format!("{name}: {e}"))?;
        ensure(got == expected, || format!("{name}: {got} <-> {got}, expected {expected}"))?;
    }
    Ok("T3 5<->5, T4 2<->2, T5 6<->6, T7 4<->4; composites are identities".into())
}

fn commutant_pairing(name: &str) -> Result<(), String> {
    let t = rational_tower(name);
    let cfg = RunConfig::default();
    let lat = Lattice::compute(&t, &cfg).map_err(|e| e.to_string())?;
    let f = t.field();
    for (k, m) in lat.subfields.iter().enumerate() {
        let stab = pointwise_stabilizer(&t, lat.group(), &m.basis);
        let j = lat.subgroups.iter().position(|h| h.elements == stab).ok_or("stabilizer not listed")?;
        let c = lat.commutant(&lat.images[k]).map_err(|e| e.to_string())?;
        ensure(c.same_as(&lat.skews[j].algebra), || format!("{name}: C_E(M{k}) != L x G^M"))?;
    }
    for (k, s) in lat.skews.iter().enumerate() {
        let part = group_part(f, lat.group(), &s.algebra);
        let j = lat.subgroups.iter().position(|h| h.elements == part).ok_or("group part not listed")?;
        ensure(j == k, || format!("{name}: (L x H{k}) ∩ G is H{j}"))?;
        let c = lat.commutant(&s.algebra).map_err(|e| e.to_string())?;
        ensure(c.same_as(&lat.images[k]), || format!("{name}: C_E(L x H{k}) != L^H{k}"))?;
    }
    Ok(())
}

fn commutants() -> Outcome {
    commutant_pairing(T3)?;
    commutant_pairing(T5)?;
    Ok("C_E(M) = L x G^M and C_E(L x H) = L^H on T3 and T5".into())
}

fn own_galois(t: &Tower<Rationals>, lat: &Lattice<Rationals>, k: usize) -> bool {
    let sub = subfield_tower(t.field(), &lat.subfields[k]).unwrap();
    automorphisms(&sub, &RunConfig::default()).unwrap().group.order() == lat.subfields[k].degree
}

fn galois_subfields() -> Outcome {
    let cfg = RunConfig::default();
    let t = rational_tower(T5);
    let lat = Lattice::compute(&t, &cfg).map_err(|e| e.to_string())?;
    let galois: Vec<usize> = (0..lat.subfields.len()).filter(|&k| own_galois(&t, &lat, k)).collect();
    let normal: Vec<usize> = (0..lat.subgroups.len()).filter(|&k| lat.subgroups[k].normal).collect();
    ensure(galois == normal, || format!("T5 Galois subfields {galois:?}, normal subgroups {normal:?}"))?;
    let degrees: Vec<usize> = galois.iter().map(|&k| lat.subfields[k].degree).collect();
    let orders: Vec<usize> = normal.iter().map(|&k| lat.subgroups[k].order()).collect();
    ensure(degrees == [6, 2, 1] && orders == [1, 3, 6], || format!("degrees {degrees:?}, orders {orders:?}"))?;
    for (k, m) in lat.subfields.iter().enumerate().filter(|(_, m)| m.degree == 3) {
        ensure(!is_stable(&t, lat.group(), &m.basis) && !own_galois(&t, &lat, k), || {
            format!("cubic subfield M{k} passes stability or the Galois test")
        })?;
    }
    let t3 = rational_tower(T3);
    let lat3 = Lattice::compute(&t3, &cfg).map_err(|e| e.to_string())?;
    let all = (0..lat3.subfields.len()).all(|k| own_galois(&t3, &lat3, k));
    ensure(all && lat3.subfields.len() == 5, || "T3 has a non-Galois subfield".into())?;
    Ok("T5 Galois subfields Q, quadratic, L <-> 1, A3, S3; cubics fail both tests; T3 all 5 Galois".into())
}

struct Restrictions;

impl Visit for Restrictions {
    type Out = Result<usize, String>;
    fn visit<K: GroundField>(self, t: &Tower<K>) -> Self::Out {
        let cfg = RunConfig::default();
        let lat = Lattice::compute(t, &cfg).map_err(|e| e.to_string())?;
        let g = lat.group();
        let mut checked = 0;
        for (k, h) in lat.subgroups.iter().enumerate().filter(|(_, h)| h.normal) {
            let r = restriction_map(t, g, &lat.subfields[k], &cfg).map_err(|e| format!("H{k}: {e}"))?;
            ensure(r.homomorphism && r.surjective, || format!("H{k}: restriction not a surjective hom"))?;
            ensure(r.kernel == h.elements, || format!("H{k}: kernel {:?}", r.kernel))?;
            let (q, _) = quotient_table(g.cayley(), &h.elements);
            ensure(find_isomorphism(&q, r.target.cayley()).is_some(), || format!("G/H{k} not isomorphic"))?;
            checked += 1;
        }
        Ok(checked)
    }
}

fn restriction() -> Outcome {
    let mut total = 0;
    for name in [T3, T5, T7] {
        total += with_tower(name, Restrictions).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("image of restriction ≅ G/kernel for {total} Galois subfields of T3, T5, T7"))
}

struct Splits;

impl Visit for Splits {
    type Out = Vec<String>;
    fn visit<K: GroundField>(self, t: &Tower<K>) -> Self::Out {
        splitting_failures(t, &group_of(t))
    }
}

fn rationals(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x, 1)).collect()
}

fn orbit_polynomials() -> Outcome {
    let t3 = rational_tower(T3);
    let g3 = group_of(&t3);
    let l = t3.add(&t3.generator(0), &t3.generator(1));
    let om = orbit_minpoly(&t3, &g3, &l);
    let expected = rationals(&[1, 0, -10, 0, 1]);
    ensure(om.poly.as_ref().map(|p| p.coeffs()) == Some(&expected[..]), || format!("T3: {:?}", om.poly))?;
    ensure(om.agrees && om.oracle.coeffs() == &expected[..], || "T3: oracle disagrees".into())?;
    let t4 = rational_tower(T4);
    let g4 = group_of(&t4);
    let om = orbit_minpoly(&t4, &g4, &t4.generator(0));
    ensure(om.orbit_size == 3, || format!("T4: orbit of size {}", om.orbit_size))?;
    let cubic = rationals(&[1, -3, 0, 1]);
    ensure(om.agrees && om.poly.as_ref().map(|p| p.coeffs()) == Some(&cubic[..]), || format!("T4: {:?}", om.poly))?;
    for name in [T1, T3, T4, T5, T6, T7, T8, T9] {
        let failures = with_tower(name, Splits);
        ensure(failures.is_empty(), || format!("{name}: {}", failures.join("; ")))?;
    }
    Ok("x^4 - 10x^2 + 1 on T3, x^3 - 3x + 1 from an orbit of 3 on T4; minpolys split on all Galois towers".into())
}

struct Stable;

impl Visit for Stable {
    type Out = Result<(usize, usize), String>;
    fn visit<K: GroundField>(self, t: &Tower<K>) -> Self::Out {
        let cfg = RunConfig::default();
        let lat = Lattice::compute(t, &cfg).map_err(|e| e.to_string())?;
        let f = t.field();
        let top = &lat.skews.last().unwrap().algebra;
        for (k, s) in lat.skews.iter().enumerate() {
            ensure(s.direct && s.rule_holds && s.algebra.is_closed(f), || format!("L x H{k} malformed"))?;
            ensure(lat.images[0].is_subalgebra_of(f, &s.algebra) && s.algebra.is_subalgebra_of(f, top), || {
                format!("L x H{k} not between L and L x G")
            })?;
        }
        let mut stable = 0;
        for (s, h) in lat.skews.iter().zip(&lat.subgroups) {
            let st = is_g_stable(f, lat.group(), &s.algebra);
            ensure(st == h.normal, || "G-stable list differs from normal subgroups".into())?;
            stable += usize::from(st);
        }
        Ok((lat.skews.len(), stable))
    }
}

fn intermediate_algebras() -> Outcome {
    for (name, count) in [(T2, 1), (T3, 5), (T5, 6)] {
        let (got, stable) = with_tower(name, Stable).map_err(|e| format!("{name}: {e}"))?;
        ensure(got == count, || format!("{name}: {got} algebras, expected {count}"))?;
        if name == T5 {
            ensure(stable == 3, || format!("T5: {stable} G-stable"))?;
        }
    }
    Ok("A(L x G, L): T2 1, T3 5, T5 6; G-stable ones match normal subgroups (T5: 3)".into())
}

fn noether_skolem() -> Outcome {
    let t = rational_tower(T3);
    let f = t.field();
    let n = t.degree();
    let s = t.generator(0);
    let a = t.left_mul_matrix(&s);
    let b = t.left_mul_matrix(&t.neg(&s));
    let u = find_conjugator(f, n, &[a.clone()], &[b.clone()], CONJUGATOR_BUDGET).map_err(|e| e.to_string())?;
    let inv = linalg::inverse(f, &u).ok_or("conjugator is singular")?;
    ensure(linalg::mat_mul(f, &linalg::mat_mul(f, &u, &a), &inv) == b, || "u a u^-1 != b".into())?;
    let image = Subalgebra::span(f, n, &[linalg::identity(f, n), a.clone()], "Q(s)");
    let moved = image.basis().iter().all(|x| image.contains(f, &linalg::mat_mul(f, &linalg::mat_mul(f, &u, x), &inv)));
    ensure(moved, || "u does not preserve the image of Q(sqrt 2)".into())?;
    Ok("unit u with u M(s) u^-1 = M(-s) on T3, verified exactly".into())
}

struct HomMatrix;

impl Visit for HomMatrix {
    type Out = Result<(), String>;
    fn visit<K: GroundField>(self, t: &Tower<K>) -> Self::Out {
        let g = group_of(t);
        for i in 0..g.order() {
            for j in 0..g.order() {
                let d = bimodule_hom_dim(t, &g, i, j);
                ensure(d == usize::from(i == j), || format!("Hom(L g{i}, L g{j}) has dimension {d}"))?;
            }
        }
        Ok(())
    }
}

fn bimodules() -> Outcome {
    with_tower(T1, HomMatrix).map_err(|e| format!("T1: {e}"))?;
    with_tower(T6, HomMatrix).map_err(|e| format!("T6: {e}"))?;
    Ok("hom-dimension matrix is the identity on T1 and T6".into())
}

fn determinism() -> Outcome {
    let run = |name: &str| {
        Command::new(env!("CARGO_BIN_EXE_gext"))
            .args(["verify", "--json", &path(name)])
            .output()
            .unwrap()
    };
    for name in ALL {
        let first = run(name);
        let second = run(name);
        ensure(first.status.code() == Some(0), || format!("{name}: exit {:?}", first.status.code()))?;
        ensure(first.stdout == second.stdout, || format!("{name}: outputs differ"))?;
    }
    Ok("verify --json is byte-identical across two runs on every golden tower".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("galois classifier", classifier),
        ("skew algebra dimension", skew_dimension),
        ("double centralizer", double_centralizer),
        ("correspondence counts", correspondence_counts),
        ("commutant pairing", commutants),
        ("galois subfields", galois_subfields),
        ("restriction", restriction),
        ("orbit polynomials", orbit_polynomials),
        ("intermediate algebras", intermediate_algebras),
        ("noether-skolem", noether_skolem),
        ("bimodule homs", bimodules),
        ("json determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
