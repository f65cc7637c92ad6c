use std::sync::Arc;

use glacalc_core::catalog::{base_algebras, builtin_algebras, doubling, perturbed_algebras, shared, shift};
use glacalc_core::coeffring::{parse_ratfunc, RatFunc};
use glacalc_core::gla::{
    anchor_apply, basis_jacobiator, bracket, build_algebra, bullet, deform, identity, jacobiator,
    structure_from_brackets, substitute, tangent_chart, validate_axioms, Algebra, DiffeoPair,
    Element,
};
use glacalc_core::random::RandomSource;
use glacalc_core::report::Sampling;
use proptest::prelude::*;

fn algebras() -> Vec<(String, Arc<Algebra>)> {
    shared(builtin_algebras())
}

fn rf(s: &str, m: usize) -> RatFunc {
    let names = glacalc_core::coeffring::default_var_names(m);
    parse_ratfunc(s, &names).unwrap()
}

/// Right-hand side of `[t_a, f t_b] = f [t_a, t_b] + ρ(t_a)(f) t_b` read
/// straight off the tables.
fn leibniz_on_generators(alg: &Arc<Algebra>, a: usize, b: usize, f: &RatFunc) -> Element {
    let n = alg.nvars();
    let mut coeffs: Vec<RatFunc> = (0..alg.dim()).map(|c| f * alg.structure(a, b, c)).collect();
    let mut rho_f = RatFunc::zero(n);
    for i in 0..n {
        rho_f = &rho_f + &(alg.anchor(a, i) * &f.partial(i).unwrap());
    }
    coeffs[b] = &coeffs[b] + &rho_f;
    Element::new(alg, coeffs).unwrap()
}

#[test]
fn closed_form_bracket_reproduces_generator_rule() {
    let mut src = RandomSource::new(11);
    for (name, alg) in algebras() {
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                let f = src.proper_ratfunc(alg.nvars());
                let lhs = bracket(&Element::basis(&alg, a), &Element::basis(&alg, b).scale(&f)).unwrap();
                assert_eq!(lhs, leibniz_on_generators(&alg, a, b, &f), "{name} ({a},{b})");
            }
        }
    }
}

#[test]
fn builtins_validate_and_perturbed_tables_fail() {
    for (name, alg) in algebras() {
        let r = validate_axioms(&alg, Sampling::default());
        assert!(r.all_passed(), "{name}: {:?}", r.first_failure());
    }
    for (name, alg) in shared(perturbed_algebras()) {
        let r = validate_axioms(&alg, Sampling::default());
        let bad = r.first_failure().unwrap_or_else(|| panic!("{name} passed"));
        assert!(bad.witness.is_some(), "{name}");
    }
}

/// Σ_cyc [t_a, [t_b, t_c]] via the general bracket on basis elements.
fn jacobiator_via_brackets(alg: &Arc<Algebra>, a: usize, b: usize, c: usize) -> Element {
    let t = |k| Element::basis(alg, k);
    jacobiator(&t(a), &t(b), &t(c))
}

#[test]
fn basis_jacobi_agrees_with_nested_brackets() {
    let mut all = algebras();
    all.extend(shared(perturbed_algebras()));
    for (name, alg) in all {
        let p = alg.dim();
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    let via = jacobiator_via_brackets(&alg, a, b, c);
                    for mu in 0..p {
                        assert_eq!(&basis_jacobiator(&alg, a, b, c, mu), via.coeff(mu), "{name}");
                    }
                }
            }
        }
    }
}

#[test]
fn jacobi_witness_tables() {
    let one = RatFunc::one(0);
    let build = |entries: &[(usize, usize, usize, RatFunc)]| {
        build_algebra(0, 3, vec![vec![]; 3], structure_from_brackets(3, 0, entries))
            .unwrap()
            .into_shared()
    };
    // [t1,t2] = t3 with [t2,t3] = t1: every cyclic term has a zero factor
    let spread = build(&[(1, 2, 3, one.clone()), (2, 3, 1, one.clone())]);
    for mu in 0..3 {
        assert!(jacobiator_via_brackets(&spread, 0, 1, 2).coeff(mu).is_zero());
    }
    assert!(validate_axioms(&spread, Sampling::default()).all_passed());

    // [t1,t2] = t3 with [t1,t3] = t1 breaks it: [t3,[t1,t2]] + [t2,[t3,t1]] = t3
    let broken = build(&[(1, 2, 3, one.clone()), (1, 3, 1, one)]);
    let via = jacobiator_via_brackets(&broken, 0, 1, 2);
    assert!(via.coeff(2).is_one());
    let r = validate_axioms(&broken, Sampling::default());
    let c = r.check("basis-jacobi").unwrap();
    assert_eq!(c.witness.as_ref().unwrap().indices, vec![1, 2, 3]);
}

/// X•Y(f) = Y^i X(∂_i f) + ρ(X)(Y^i) ∂_i f with ρ(∂_a) = row a of `r`.
fn bullet_literal(r: &[Vec<RatFunc>], x: &[RatFunc], y: &[RatFunc], f: &RatFunc) -> RatFunc {
    let m = x.len();
    let d = |g: &RatFunc, i: usize| g.partial(i).unwrap();
    let rho = |v: &[RatFunc], g: &RatFunc| {
        let mut acc = RatFunc::zero(m);
        for a in 0..m {
            for k in 0..m {
                acc = &acc + &(&(&v[a] * &r[a][k]) * &d(g, k));
            }
        }
        acc
    };
    let mut acc = RatFunc::zero(m);
    for i in 0..m {
        let second: RatFunc = (0..m).fold(RatFunc::zero(m), |s, j| &s + &(&x[j] * &d(&d(f, i), j)));
        acc = &acc + &(&y[i] * &second);
        acc = &acc + &(&rho(x, &y[i]) * &d(f, i));
    }
    acc
}

#[test]
fn bullet_closed_form_matches_composition_definition() {
    let mats = vec![
        identity(1),
        identity(2),
        vec![vec![rf("x1", 1)]],
        vec![vec![rf("2", 2), rf("1", 2)], vec![rf("0", 2), rf("3", 2)]],
        vec![vec![rf("x2", 2), rf("0", 2)], vec![rf("0", 2), rf("1", 2)]],
    ];
    let mut src = RandomSource::new(5);
    for r in mats {
        let alg = bullet(r.clone()).unwrap().into_shared();
        let m = alg.nvars();
        for _ in 0..8 {
            let x = src.element(&alg);
            let y = src.element(&alg);
            let f = src.ratfunc(m);
            let br = bracket(&x, &y).unwrap();
            // the basis element t_k is ∂_k itself
            let mut closed = RatFunc::zero(m);
            for k in 0..m {
                closed = &closed + &(br.coeff(k) * &f.partial(k).unwrap());
            }
            let literal = &bullet_literal(&r, x.coeffs(), y.coeffs(), &f)
                - &bullet_literal(&r, y.coeffs(), x.coeffs(), &f);
            assert_eq!(closed, literal);
        }
    }
}

/// z^a ρ^i_a · (∂_i(f∘h) ∘ h⁻¹).
fn deformed_action(base: &Algebra, h: &DiffeoPair, z: &[RatFunc], f: &RatFunc) -> RatFunc {
    let m = base.nvars();
    let fh = f.compose(h.forward()).unwrap();
    let mut acc = RatFunc::zero(m);
    for (a, za) in z.iter().enumerate() {
        for i in 0..m {
            let d = fh.partial(i).unwrap().compose(h.inverse()).unwrap();
            acc = &acc + &(&(za * base.anchor(a, i)) * &d);
        }
    }
    acc
}

fn mobius() -> DiffeoPair {
    DiffeoPair::new(vec![rf("x1/(1 - x1)", 1)], vec![rf("x1/(1 + x1)", 1)]).unwrap()
}

fn mixing() -> DiffeoPair {
    DiffeoPair::new(
        vec![rf("x1 + x2", 2), rf("x2 - 3", 2)],
        vec![rf("x1 - x2 - 3", 2), rf("x2 + 3", 2)],
    )
    .unwrap()
}

fn cubic_shear() -> DiffeoPair {
    DiffeoPair::new(
        vec![rf("x1 + x2^3", 2), rf("x2", 2)],
        vec![rf("x1 - x2^3", 2), rf("x2", 2)],
    )
    .unwrap()
}

#[test]
fn deformed_anchor_matches_direct_action() {
    let mut src = RandomSource::new(9);
    let cases: Vec<(Algebra, DiffeoPair)> = vec![
        (tangent_chart(1).unwrap(), shift(1)),
        (tangent_chart(1).unwrap(), doubling(1)),
        (tangent_chart(1).unwrap(), mobius()),
        (bullet(vec![vec![rf("x1", 1)]]).unwrap(), mobius()),
        (tangent_chart(2).unwrap(), mixing()),
        (tangent_chart(2).unwrap(), cubic_shear()),
        (glacalc_core::gla::der_plus_f(2).unwrap(), cubic_shear()),
    ];
    for (base, h) in cases {
        let def = deform(&base, &h).unwrap().into_shared();
        for _ in 0..6 {
            let z = src.element(&def);
            let f = src.proper_ratfunc(base.nvars());
            let via_anchor = anchor_apply(&z, &f).unwrap();
            assert_eq!(via_anchor, deformed_action(&base, &h, z.coeffs(), &f));
        }
        assert_eq!(def.structure_table(), base.structure_table());
    }
}

#[test]
fn deform_examples_on_the_line() {
    let t = tangent_chart(1).unwrap();
    assert_eq!(deform(&t, &shift(1)).unwrap(), t);
    assert_eq!(deform(&t, &doubling(1)).unwrap().anchor(0, 0), &rf("2", 1));
    assert_eq!(deform(&t, &mobius()).unwrap().anchor(0, 0), &rf("(1 + x1)^2", 1));
}

#[test]
fn deform_round_trip_for_affine_maps() {
    let cases: Vec<(Algebra, DiffeoPair)> = vec![
        (tangent_chart(1).unwrap(), shift(1)),
        (tangent_chart(1).unwrap(), doubling(1)),
        (tangent_chart(2).unwrap(), mixing()),
        (bullet(vec![vec![rf("x1", 1)]]).unwrap(), doubling(1)),
        (glacalc_core::gla::der_plus_f(2).unwrap(), mixing()),
    ];
    for (a, h) in cases {
        let there = deform(&a, &h).unwrap();
        assert_eq!(deform(&there, &h.inverted()).unwrap(), a);
    }
    // away from affine maps the Jacobian factors do not cancel
    let t = tangent_chart(1).unwrap();
    let there = deform(&t, &mobius()).unwrap();
    let back = deform(&there, &mobius().inverted()).unwrap();
    assert_eq!(back.anchor(0, 0), &rf("(1 + x1)^2*(1 - x1)^2", 1));
}

#[test]
fn pullback_substitutes_into_every_entry() {
    let a = bullet(vec![vec![rf("x1", 1)]]).unwrap();
    assert_eq!(substitute(&a, &[rf("x1^2", 1)]).unwrap().anchor(0, 0), &rf("x1^2", 1));
    for (name, alg) in base_algebras() {
        let m = alg.nvars();
        let id = DiffeoPair::identity(m);
        assert_eq!(glacalc_core::gla::pullback(&alg, &id).unwrap(), alg, "{name}");
        if m > 0 {
            assert_eq!(deform(&alg, &id).unwrap(), alg, "{name}");
        }
    }
}

#[test]
fn singular_jacobian_is_reported() {
    // a "pair" that only round-trips because both maps ignore x2 is rejected
    // earlier; the determinant check itself guards the deformation formula
    let t = tangent_chart(1).unwrap();
    let h = DiffeoPair::identity(1);
    assert!(deform(&t, &h).is_ok());
    let bad = DiffeoPair::new(vec![rf("1", 1)], vec![rf("x1", 1)]);
    assert!(bad.is_err());
}

fn pick(seed: u64) -> (String, Arc<Algebra>, RandomSource) {
    let all = algebras();
    let mut src = RandomSource::new(seed);
    let k = src.index(all.len());
    let (n, a) = all[k].clone();
    (n, a, src)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_is_biadditive_and_antisymmetric(seed in any::<u64>()) {
        let (name, alg, mut src) = pick(seed);
        let (u, v, w) = (src.element(&alg), src.element(&alg), src.element(&alg));
        let br = |a: &Element, b: &Element| bracket(a, b).unwrap();
        prop_assert_eq!(br(&(&u + &v), &w), &br(&u, &w) + &br(&v, &w), "{}", name);
        prop_assert_eq!(br(&u, &v), -&br(&v, &u), "{}", name);
        prop_assert!(br(&u, &u).is_zero());
    }

    #[test]
    fn leibniz_rule_for_elements(seed in any::<u64>()) {
        let (name, alg, mut src) = pick(seed);
        let (u, v) = (src.element(&alg), src.element(&alg));
        let f = src.proper_ratfunc(alg.nvars());
        let lhs = bracket(&u, &v.scale(&f)).unwrap();
        let rhs = &bracket(&u, &v).unwrap().scale(&f) + &v.scale(&anchor_apply(&u, &f).unwrap());
        prop_assert_eq!(lhs, rhs, "{}", name);
    }

    #[test]
    fn jacobi_and_anchor_morphism(seed in any::<u64>()) {
        let (name, alg, mut src) = pick(seed);
        let (u, v, w) = (src.element(&alg), src.element(&alg), src.element(&alg));
        prop_assert!(jacobiator(&u, &v, &w).is_zero(), "{}", name);
        let f = src.ratfunc(alg.nvars());
        let rho = |x: &Element, g: &RatFunc| anchor_apply(x, g).unwrap();
        let lhs = rho(&bracket(&u, &v).unwrap(), &f);
        let rhs = &rho(&u, &rho(&v, &f)) - &rho(&v, &rho(&u, &f));
        prop_assert_eq!(lhs, rhs, "{}", name);
    }

    #[test]
    fn anchor_is_additive_and_a_derivation(seed in any::<u64>()) {
        let (_, alg, mut src) = pick(seed);
        let (u, v) = (src.element(&alg), src.element(&alg));
        let (f, g) = (src.ratfunc(alg.nvars()), src.ratfunc(alg.nvars()));
        let rho = |x: &Element, h: &RatFunc| anchor_apply(x, h).unwrap();
        prop_assert_eq!(rho(&(&u + &v), &f), &rho(&u, &f) + &rho(&v, &f));
        prop_assert_eq!(rho(&u, &(&f * &g)), &(&rho(&u, &f) * &g) + &(&f * &rho(&u, &g)));
        prop_assert!(rho(&u, &RatFunc::from_int(alg.nvars(), 7)).is_zero());
    }
}
