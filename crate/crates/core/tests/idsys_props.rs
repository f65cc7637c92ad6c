use std::sync::Arc;

use glacalc_core::catalog::{builtin_algebras, shared};
use glacalc_core::coeffring::RatFunc;
use glacalc_core::extcalc::{ext_diff, wedge, Form};
use glacalc_core::gla::{Algebra, Element};
use glacalc_core::idsys::{
    annihilator, cartan_equivalence, frobenius_certificate, involutive_direct, Subspace,
};
use glacalc_core::random::RandomSource;
use proptest::prelude::*;

fn subsets(p: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1 << p)).map(move |mask| (0..p).filter(|&i| mask & (1 << i) != 0).collect())
}

fn lift(alg: &Arc<Algebra>, v: &[RatFunc]) -> Element {
    // constant vectors live in the zero-variable ring
    let n = alg.nvars();
    let coeffs = v
        .iter()
        .map(|c| RatFunc::constant(n, c.constant_value().unwrap()))
        .collect();
    Element::new(alg, coeffs).unwrap()
}

/// `dθ^α = Σ_γ ω^α_γ ∧ θ^γ` over the annihilator indices, recomputed here
/// from the certificate's own pieces.
fn assert_certificate_reconstructs(e: &Subspace) {
    let cert = frobenius_certificate(e).unwrap();
    let p = e.algebra().dim();
    let r = cert.rank;
    for (a, th) in cert.coframe.iter().enumerate() {
        for (b, s) in cert.basis.iter().enumerate() {
            assert_eq!(th.eval(&[s.clone()]).unwrap().is_one(), a == b);
        }
    }
    let Some(omega) = cert.omega else {
        assert!(!cert.obstruction.is_empty());
        return;
    };
    assert!(cert.obstruction.is_empty());
    for alpha in r..p {
        let mut sum = Form::zero(e.algebra(), 2);
        for gamma in r..p {
            sum = &sum + &wedge(&omega[alpha - r][gamma - r], &cert.coframe[gamma]).unwrap();
        }
        assert_eq!(ext_diff(&cert.coframe[alpha]), sum);
    }
}

#[test]
fn procedures_agree_on_every_coordinate_subspace() {
    for (name, alg) in shared(builtin_algebras()) {
        for idx in subsets(alg.dim()) {
            let e = Subspace::coordinate(&alg, &idx).unwrap();
            let report = cartan_equivalence(&e, None)
                .unwrap_or_else(|err| panic!("{name} {idx:?}: {err}"));
            // closure under the bracket, read off the structure table
            let closed = idx.iter().all(|&a| {
                idx.iter().all(|&b| {
                    (0..alg.dim()).all(|c| idx.contains(&c) || alg.structure(a, b, c).is_zero())
                })
            });
            assert_eq!(report.involutive(), closed, "{name} {idx:?}");
            assert_certificate_reconstructs(&e);
        }
    }
}

#[test]
fn annihilator_pairs_to_zero() {
    let mut src = RandomSource::new(31);
    for (name, alg) in shared(builtin_algebras()) {
        let p = alg.dim();
        for r in 1..=p {
            let gens: Vec<Element> = (0..r).map(|_| src.element(&alg)).collect();
            let Ok(e) = Subspace::new(&alg, gens) else { continue };
            let ann = annihilator(&e);
            assert_eq!(ann.len(), p - r, "{name}");
            for th in &ann {
                for s in e.generators() {
                    assert!(th.eval(&[s.clone()]).unwrap().is_zero(), "{name}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn subalgebras_of_random_lie_algebras_are_involutive(seed in any::<u64>(), p in 3usize..=5) {
        let mut src = RandomSource::new(seed);
        let rla = src.constant_lie_algebra(p);
        let alg = rla.algebra.into_shared();
        let gens = rla.subalgebra.iter().map(|v| lift(&alg, v)).collect();
        let e = Subspace::new(&alg, gens).unwrap();
        let report = cartan_equivalence(&e, None).unwrap();
        prop_assert!(report.involutive());
        assert_certificate_reconstructs(&e);
    }

    #[test]
    fn random_subspaces_get_one_verdict(seed in any::<u64>(), p in 2usize..=5) {
        let mut src = RandomSource::new(seed);
        let alg = src.constant_lie_algebra(p).algebra.into_shared();
        let r = 1 + src.index(p);
        let gens: Vec<Element> = (0..r)
            .map(|_| {
                let coeffs = (0..p).map(|_| RatFunc::from_int(0, src.int(-2, 2))).collect();
                Element::new(&alg, coeffs).unwrap()
            })
            .collect();
        let Ok(e) = Subspace::new(&alg, gens) else { return Ok(()) };
        let report = cartan_equivalence(&e, None).unwrap();
        // independent reading: every pairwise bracket stays in the span
        let closed = e.generators().iter().all(|u| {
            e.generators().iter().all(|v| e.contains(&glacalc_core::gla::bracket(u, v).unwrap()))
        });
        prop_assert_eq!(report.involutive(), closed);
        assert_certificate_reconstructs(&e);
    }

}

proptest! {
    // dense function coefficients make these the expensive cases
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn function_coefficient_subspaces_get_one_verdict(seed in any::<u64>()) {
        let mut src = RandomSource::new(seed);
        let all = shared(builtin_algebras());
        let (name, alg) = all[src.index(all.len())].clone();
        let p = alg.dim();
        let r = 1 + src.index(p);
        let gens: Vec<Element> = (0..r).map(|_| src.element(&alg)).collect();
        let Ok(e) = Subspace::new(&alg, gens) else { return Ok(()) };
        let report = cartan_equivalence(&e, None);
        prop_assert!(report.is_ok(), "{}: {:?}", name, report.err());
    }

    #[test]
    fn verdict_survives_recombination(seed in any::<u64>()) {
        let mut src = RandomSource::new(seed);
        let all = shared(builtin_algebras());
        let (name, alg) = all[src.index(all.len())].clone();
        let p = alg.dim();
        let n = alg.nvars();
        let idx: Vec<usize> = (0..p).filter(|_| src.index(2) == 0).collect();
        prop_assume!(!idx.is_empty());
        let e = Subspace::coordinate(&alg, &idx).unwrap();
        // unit upper-triangular mixing, then rescale by nonzero functions
        let gens = e.generators();
        let mut mixed = Vec::new();
        for i in 0..gens.len() {
            let mut g = gens[i].clone();
            for later in &gens[i + 1..] {
                g = &g + &later.scale(&src.ratfunc(n));
            }
            let mut f = src.proper_ratfunc(n);
            while f.is_zero() {
                f = src.proper_ratfunc(n);
            }
            mixed.push(g.scale(&f));
        }
        let e2 = Subspace::new(&alg, mixed).unwrap();
        let v1 = frobenius_certificate(&e).unwrap().involutive;
        let v2 = frobenius_certificate(&e2).unwrap().involutive;
        prop_assert_eq!(v1, v2, "{} {:?}", name, idx);
        prop_assert_eq!(involutive_direct(&e2).involutive, v1, "{}", name);
    }
}
