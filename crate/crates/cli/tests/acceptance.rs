//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Every comparison is exact equality of canonical
//! forms; there is no tolerance anywhere.

use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use glacalc_core::catalog::{builtin_algebras, morphism_fixtures, perturbed_algebras, shared};
use glacalc_core::coeffring::{RatFunc, Rational};
use glacalc_core::extcalc::oracle::{all_tuples, ext_diff_eval, wedge_eval};
use glacalc_core::extcalc::{
    ce_exactness, cohomology_dimensions, ext_diff, increasing_tuples, interior, lie_derivative,
    maurer_cartan, pullback, validate_morphism, wedge, Form,
};
use glacalc_core::gla::{bracket, heisenberg, sl2, validate_axioms, Algebra, Element};
use glacalc_core::idsys::{cartan_equivalence, frobenius_certificate, Subspace};
use glacalc_core::random::RandomSource;
use glacalc_core::report::Sampling;
use num_traits::Zero;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.1?}, limit {limit:?}"))?;
    Ok(t)
}

fn sign(q: usize) -> i64 {
    if q % 2 == 0 {
        1
    } else {
        -1
    }
}

fn signed(f: &Form, s: i64) -> Form {
    f.scale(&RatFunc::from_int(f.algebra().nvars(), s))
}

fn w(a: &Form, b: &Form) -> Form {
    wedge(a, b).unwrap()
}

fn axiom_suite() -> Outcome {
    let start = Instant::now();
    let sampling = Sampling::default();
    let good = shared(builtin_algebras());
    for (name, alg) in &good {
        let r = validate_axioms(alg, sampling);
        ensure(r.all_passed(), || format!("{name}: {:?}", r.first_failure()))?;
    }
    let bad = shared(perturbed_algebras());
    ensure(bad.len() == 5, || format!("{} perturbed tables", bad.len()))?;
    for (name, alg) in &bad {
        let r = validate_axioms(alg, sampling);
        let fail = r.first_failure().ok_or_else(|| format!("{name} passed"))?;
        ensure(fail.witness.is_some(), || format!("{name}: failure without witness"))?;
    }
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!("{} valid, {} perturbed rejected with witnesses, {t:.1?}", good.len(), bad.len()))
}

/// All Cartan-calculus identities on one random instance.
fn cartan_instance(alg: &Arc<Algebra>, src: &mut RandomSource) -> Result<(), String> {
    let p = alg.dim();
    let top = p.min(3);
    let q = src.index(top + 1);
    let r = src.index(top.min(p - q) + 1);
    let (om, th) = (src.form(alg, q), src.form(alg, r));
    let (z, v) = (src.element(alg), src.element(alg));
    let d = ext_diff;
    let i = |u: &Element, f: &Form| interior(u, f).unwrap();
    let l = |u: &Element, f: &Form| lie_derivative(u, f).unwrap();
    let zero = |k: usize| Form::zero(alg, k);

    ensure(d(&d(&om)).is_zero(), || format!("d d != 0 in degree {q}"))?;

    let cartan = if q == 0 { i(&z, &d(&om)) } else { &d(&i(&z, &om)) + &i(&z, &d(&om)) };
    ensure(l(&z, &om) == cartan, || format!("L_z != d i_z + i_z d in degree {q}"))?;

    if q > 0 {
        let lhs = &l(&v, &i(&z, &om)) - &i(&z, &l(&v, &om));
        let vz = bracket(&v, &z).unwrap();
        ensure(lhs == i(&vz, &om), || format!("[L_v, i_z] != i_[v,z] in degree {q}"))?;
    }

    let lhs = d(&w(&om, &th));
    let rhs = &w(&d(&om), &th) + &signed(&w(&om, &d(&th)), sign(q));
    ensure(lhs == rhs, || format!("d not a graded derivation ({q},{r})"))?;

    if q + r > 0 {
        let mut rhs = zero(q + r - 1);
        if q > 0 {
            rhs = &rhs + &w(&i(&z, &om), &th);
        }
        if r > 0 {
            rhs = &rhs + &signed(&w(&om, &i(&z, &th)), sign(q));
        }
        ensure(i(&z, &w(&om, &th)) == rhs, || format!("i_z not a graded derivation ({q},{r})"))?;
    }

    ensure(l(&z, &d(&om)) == d(&l(&z, &om)), || format!("L_z d != d L_z in degree {q}"))?;
    Ok(())
}

fn cartan_identities() -> Outcome {
    let start = Instant::now();
    let all = shared(builtin_algebras());
    for (k, (name, alg)) in all.iter().enumerate() {
        for n in 0..16u64 {
            let mut src = RandomSource::new(1000 * k as u64 + n);
            cartan_instance(alg, &mut src).map_err(|e| format!("{name} seed {n}: {e}"))?;
        }
    }
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("{} algebras x 16 instances, {t:.1?}", all.len()))
}

fn basis_args(alg: &Arc<Algebra>, t: &[usize]) -> Vec<Element> {
    t.iter().map(|&a| Element::basis(alg, a)).collect()
}

fn oracle_agreement() -> Outcome {
    let mut src = RandomSource::new(7);
    let mut pool = shared(builtin_algebras());
    for p in [4, 5] {
        for _ in 0..2 {
            pool.push((format!("random p={p}"), src.constant_lie_algebra(p).algebra.into_shared()));
        }
    }
    let mut compared = 0usize;
    for (name, alg) in &pool {
        let p = alg.dim();
        let tuples = |k: usize, src: &mut RandomSource| -> Vec<Vec<Element>> {
            if p <= 4 {
                all_tuples(p, k).iter().map(|t| basis_args(alg, t)).collect()
            } else {
                (0..16).map(|_| (0..k).map(|_| src.element(alg)).collect()).collect()
            }
        };
        for q in 0..p {
            let om = src.form(alg, q);
            let dom = ext_diff(&om);
            for args in tuples(q + 1, &mut src) {
                let want = ext_diff_eval(&om, &args).unwrap();
                ensure(dom.eval(&args).unwrap() == want, || format!("{name}: d in degree {q}"))?;
                compared += 1;
            }
            for r in 0..=(p - q) {
                let th = src.form(alg, r);
                let prod = w(&om, &th);
                for args in tuples(q + r, &mut src) {
                    let want = wedge_eval(&om, &th, &args).unwrap();
                    ensure(prod.eval(&args).unwrap() == want, || format!("{name}: wedge ({q},{r})"))?;
                    compared += 1;
                }
            }
        }
    }
    Ok(format!("{compared} evaluations on {} algebras", pool.len()))
}

fn maurer_cartan_suite() -> Outcome {
    let all = shared(builtin_algebras());
    for (name, alg) in &all {
        let mc = maurer_cartan(alg);
        ensure(mc.all_equal(), || format!("{name}: a structure equation differs"))?;
    }
    let h = heisenberg(0).into_shared();
    let line = maurer_cartan(&h).equations[2].line();
    ensure(line == "d t^3 = -t^1∧t^2", || format!("heisenberg printed `{line}`"))?;

    // d x^i against ρ^i_a t^a assembled here from the anchor
    let mut charts = 0;
    for (name, alg) in all.iter().filter(|(n, _)| n.contains("tangent")) {
        let n = alg.nvars();
        for i in 0..n {
            let dx = ext_diff(&Form::scalar(alg, RatFunc::var(n, i)));
            let mut expected = Form::zero(alg, 1);
            for a in 0..alg.dim() {
                expected = &expected + &Form::coframe(alg, a).scale(alg.anchor(a, i));
            }
            ensure(dx == expected, || format!("{name}: d x^{}", i + 1))?;
        }
        let rel = maurer_cartan(alg).anchor_relations;
        ensure(rel.len() == n && rel.iter().all(|r| r.equal), || format!("{name}: anchor relations"))?;
        charts += 1;
    }
    ensure(charts == 5, || format!("{charts} tangent charts"))?;
    Ok(format!("{} algebras; `{line}`; d x^i on {charts} tangent-line charts", all.len()))
}

fn rank_over_q(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = &row[col] / &pivot[col];
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x -= &f * y;
            }
        }
        rank += 1;
    }
    rank
}

/// Kernel and image dimensions of d on basis cochains, evaluated through the
/// literal formula.
fn brute_force_cohomology(alg: &Arc<Algebra>) -> Vec<usize> {
    let p = alg.dim();
    let rank_d: Vec<usize> = (0..=p)
        .map(|q| {
            if q == p {
                return 0;
            }
            let rows = increasing_tuples(p, q)
                .into_iter()
                .map(|idx| {
                    let f = Form::from_coeffs(alg, q, [(idx, RatFunc::one(0))]).unwrap();
                    increasing_tuples(p, q + 1)
                        .iter()
                        .map(|t| {
                            let v = ext_diff_eval(&f, &basis_args(alg, t)).unwrap();
                            v.constant_value().unwrap()
                        })
                        .collect()
                })
                .collect();
            rank_over_q(rows)
        })
        .collect();
    (0..=p)
        .map(|q| increasing_tuples(p, q).len() - rank_d[q] - if q == 0 { 0 } else { rank_d[q - 1] })
        .collect()
}

fn cohomology_fixture() -> Outcome {
    let h = heisenberg(0).into_shared();
    let dims = cohomology_dimensions(&h).map_err(|e| e.to_string())?;
    let oracle = brute_force_cohomology(&h);
    ensure(dims == oracle, || format!("dims {dims:?}, brute force {oracle:?}"))?;
    ensure(dims[1] == 2, || format!("H^1 has dimension {}", dims[1]))?;
    let omega = signed(&w(&Form::coframe(&h, 0), &Form::coframe(&h, 1)), -1);
    let eta = ce_exactness(&omega).map_err(|e| e.to_string())?.ok_or("omega reported not exact")?;
    ensure(eta == Form::coframe(&h, 2), || format!("eta = {eta}"))?;
    ensure(ext_diff(&eta) == omega, || "d eta != omega".into())?;
    Ok(format!("dims {dims:?} match brute force; eta = {eta}"))
}

fn embed(alg: &Arc<Algebra>, v: &[RatFunc]) -> Element {
    let n = alg.nvars();
    let coeffs = v.iter().map(|c| RatFunc::constant(n, c.constant_value().unwrap())).collect();
    Element::new(alg, coeffs).unwrap()
}

/// Checks one subspace: identical verdicts, an independent closure reading,
/// and the certificate when involutive.
fn equivalence_on(e: &Subspace) -> Result<bool, String> {
    let rep = cartan_equivalence(e, None).map_err(|x| x.to_string())?;
    let verdicts = [rep.direct.involutive, rep.frobenius.involutive, rep.eas.passed()];
    ensure(verdicts.iter().all(|&v| v == verdicts[0]), || format!("verdicts {verdicts:?}"))?;
    let gens = e.generators();
    let closed = gens.iter().all(|u| gens.iter().all(|v| e.contains(&bracket(u, v).unwrap())));
    ensure(closed == verdicts[0], || "verdicts disagree with bracket closure".into())?;

    let cert = frobenius_certificate(e).map_err(|x| x.to_string())?;
    if let Some(omega) = &cert.omega {
        let r = cert.rank;
        for (k, row) in omega.iter().enumerate() {
            let mut sum = Form::zero(e.algebra(), 2);
            for (j, om) in row.iter().enumerate() {
                sum = &sum + &w(om, &cert.coframe[r + j]);
            }
            ensure(ext_diff(&cert.coframe[r + k]) == sum, || format!("certificate row {}", r + k + 1))?;
        }
    }
    ensure(cert.omega.is_some() == verdicts[0], || "certificate presence".into())?;
    Ok(verdicts[0])
}

fn frobenius_cartan() -> Outcome {
    let start = Instant::now();
    let mut coordinate = 0;
    for alg in [heisenberg(0).into_shared(), sl2(0).into_shared()] {
        for mask in 1u32..(1 << alg.dim()) {
            let idx: Vec<usize> = (0..alg.dim()).filter(|i| mask & (1 << i) != 0).collect();
            let e = Subspace::coordinate(&alg, &idx).unwrap();
            equivalence_on(&e).map_err(|x| format!("coordinate {idx:?}: {x}"))?;
            coordinate += 1;
        }
    }
    let mut involutive = 0;
    for seed in 0..50u64 {
        let mut src = RandomSource::new(seed);
        let p = 2 + (seed % 4) as usize;
        let rla = src.constant_lie_algebra(p);
        let alg = rla.algebra.into_shared();
        // alternate between spans inside a known subalgebra and free spans
        let standard: Vec<Vec<RatFunc>> = (0..p)
            .map(|i| (0..p).map(|j| RatFunc::from_int(0, (i == j) as i64)).collect())
            .collect();
        let pool = if seed % 2 == 0 && rla.subalgebra.len() >= 2 { &rla.subalgebra } else { &standard };
        let [a, b] = src.rank2_in(pool);
        let e = Subspace::new(&alg, vec![embed(&alg, &a), embed(&alg, &b)]).unwrap();
        involutive += equivalence_on(&e).map_err(|x| format!("seed {seed}: {x}"))? as usize;
    }
    let t = within(start, Duration::from_secs(120))?;
    Ok(format!(
        "{coordinate} coordinate subspaces, 50 random rank-2 ({involutive} involutive), {t:.1?}"
    ))
}

fn pullback_functoriality() -> Outcome {
    let mut checked = 0;
    for (k, (name, phi)) in morphism_fixtures().iter().enumerate() {
        if !validate_morphism(phi, Sampling::default()).all_passed() {
            continue;
        }
        let target = phi.target();
        let p = target.dim();
        for n in 0..16u64 {
            let mut src = RandomSource::new(500 * k as u64 + n);
            let q = src.index(p + 1);
            let r = src.index(p - q + 1);
            let (om, th) = (src.form(target, q), src.form(target, r));
            let pb = |f: &Form| pullback(phi, f).unwrap();
            ensure(pb(&ext_diff(&om)) == ext_diff(&pb(&om)), || format!("{name} seed {n}: d"))?;
            ensure(pb(&w(&om, &th)) == w(&pb(&om), &pb(&th)), || format!("{name} seed {n}: wedge"))?;
        }
        checked += 1;
    }
    ensure(checked == morphism_fixtures().len(), || format!("only {checked} fixtures validated"))?;
    Ok(format!("{checked} fixtures x 16 instances"))
}

const COMMANDS: [&str; 15] = [
    "validate", "mc", "eval", "d", "wedge", "lie", "interior", "pullback", "annihilator",
    "involutive", "frobenius", "cartan", "eas", "symplectic", "cohomology",
];

fn cli_runs() -> Vec<Vec<&'static str>> {
    let mut runs: Vec<Vec<&str>> = Vec::new();
    let files = [
        "heisenberg.gla", "heisenberg_table.gla", "sl2.gla", "der_plus_f.gla", "chart.gla",
        "morphisms.gla", "plane.gla", "errors/antisymmetry.gla", "errors/undeclared.gla",
        "errors/syntax.gla",
    ];
    // every command with its defaults on every file, then targeted calls
    for file in files {
        for cmd in COMMANDS {
            runs.push(vec![cmd, file]);
        }
    }
    let targeted: &[&[&str]] = &[
        &["frobenius", "heisenberg.gla", "E12"],
        &["frobenius", "heisenberg.gla", "E13"],
        &["cartan", "heisenberg.gla", "Eu"],
        &["eas", "heisenberg.gla", "I13", "E13"],
        &["eval", "heisenberg.gla", "w12", "u", "t2"],
        &["wedge", "heisenberg.gla", "th1", "th2"],
        &["lie", "der_plus_f.gla", "v", "w2"],
        &["interior", "der_plus_f.gla", "v", "w2"],
        &["cartan", "sl2.gla", "ef"],
        &["mc", "chart.gla", "Tm"],
        &["validate", "chart.gla", "B"],
        &["validate", "morphisms.gla", "broken"],
        &["pullback", "morphisms.gla", "collapse", "a12"],
        &["cohomology", "heisenberg.gla", "w12"],
    ];
    runs.extend(targeted.iter().map(|r| r.to_vec()));
    runs
}

fn run_cli(run: &[&str]) -> Vec<u8> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_glacalc"));
    cmd.arg(run[0]).arg("--machine").arg("--file").arg(dir.join(run[1]));
    for a in &run[2..] {
        cmd.arg("--arg").arg(a);
    }
    let out = cmd.output().expect("binary runs");
    let mut bytes = out.stdout;
    bytes.extend(out.stderr);
    bytes.extend(format!("exit={:?}\n", out.status.code()).into_bytes());
    bytes
}

fn cli_determinism() -> Outcome {
    let runs = cli_runs();
    let first: Vec<Vec<u8>> = runs.iter().map(|r| run_cli(r)).collect();
    let second: Vec<Vec<u8>> = runs.iter().map(|r| run_cli(r)).collect();
    for ((r, a), b) in runs.iter().zip(&first).zip(&second) {
        ensure(a == b, || format!("{r:?} differs between runs"))?;
    }
    // every command must produce at least one real report, not only errors
    let reported: Vec<&str> = runs
        .iter()
        .zip(&first)
        .filter(|(_, b)| b.starts_with(b"command="))
        .map(|(r, _)| r[0])
        .collect();
    let silent: Vec<&&str> = COMMANDS.iter().filter(|c| !reported.contains(c)).collect();
    ensure(silent.is_empty(), || format!("no report from {silent:?}"))?;
    let reports = reported.len();
    Ok(format!("{} invocations ({reports} reports) byte-identical", runs.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("axiom suite", axiom_suite),
        ("cartan identities", cartan_identities),
        ("oracle agreement", oracle_agreement),
        ("maurer-cartan", maurer_cartan_suite),
        ("frobenius/cartan equivalence", frobenius_cartan),
        ("pullback functoriality", pullback_functoriality),
        ("cohomology fixture", cohomology_fixture),
        ("cli determinism", cli_determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
