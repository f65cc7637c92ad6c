//! Named fixtures: the built-in algebras, their chart deformations, tables
//! that break an axiom on purpose, and morphisms between them.

use std::sync::Arc;

use crate::coeffring::{RatFunc, Rational};
use crate::extcalc::Morphism;
use crate::gla::{
    abelian, build_algebra, bullet, deform, der_plus_f, heisenberg, identity, pullback, sl2,
    structure_from_brackets, tangent_chart, Algebra, DiffeoPair, Element,
};

/// h(x) = x + 1 componentwise.
pub fn shift(m: usize) -> DiffeoPair {
    let one = RatFunc::one(m);
    let fwd = (0..m).map(|i| &RatFunc::var(m, i) + &one).collect();
    let inv = (0..m).map(|i| &RatFunc::var(m, i) - &one).collect();
    DiffeoPair::new(fwd, inv).expect("translation")
}

/// h(x) = 2x componentwise.
pub fn doubling(m: usize) -> DiffeoPair {
    let half = Rational::new(1.into(), 2.into());
    let fwd = (0..m).map(|i| RatFunc::var(m, i).scale(&Rational::from_integer(2.into()))).collect();
    let inv = (0..m).map(|i| RatFunc::var(m, i).scale(&half)).collect();
    DiffeoPair::new(fwd, inv).expect("dilation")
}

/// The undeformed built-ins.
pub fn base_algebras() -> Vec<(String, Algebra)> {
    let mut out = vec![
        ("heisenberg".to_string(), heisenberg(0)),
        ("sl2".to_string(), sl2(0)),
    ];
    for m in 1..=3 {
        out.push((format!("der_plus_f({m})"), der_plus_f(m).unwrap()));
    }
    for m in 1..=2 {
        out.push((format!("bullet(id{m})"), bullet(identity(m)).unwrap()));
    }
    out.push(("tangent(1)".to_string(), tangent_chart(1).unwrap()));
    out
}

/// Built-ins plus the deformation and pullback of every one with variables
/// along `shift` and `doubling`.
pub fn builtin_algebras() -> Vec<(String, Algebra)> {
    let base = base_algebras();
    let mut out = base.clone();
    for (name, alg) in &base {
        let m = alg.nvars();
        if m == 0 {
            continue;
        }
        for (hname, h) in [("x+1", shift(m)), ("2x", doubling(m))] {
            out.push((format!("deform({name},{hname})"), deform(alg, &h).unwrap()));
            out.push((format!("pullback({name},{hname})"), pullback(alg, &h).unwrap()));
        }
    }
    out
}

/// Tables that build (they are antisymmetric) but violate an axiom.
pub fn perturbed_algebras() -> Vec<(String, Algebra)> {
    let c0 = |k| RatFunc::from_int(0, k);
    let zero0 = |p| vec![vec![]; p];
    let mut out = Vec::new();

    let s = structure_from_brackets(3, 0, &[(1, 2, 3, c0(1)), (1, 3, 1, c0(1))]);
    out.push(("heisenberg+[t1,t3]=t1", build_algebra(0, 3, zero0(3), s)));

    let s = structure_from_brackets(3, 0, &[(1, 2, 2, c0(3)), (1, 3, 3, c0(-2)), (2, 3, 1, c0(1))]);
    out.push(("sl2 with [t1,t2]=3t2", build_algebra(0, 3, zero0(3), s)));

    let base = der_plus_f(1).unwrap();
    let s = structure_from_brackets(2, 1, &[(1, 2, 1, RatFunc::var(1, 0))]);
    out.push((
        "der_plus_f(1)+[t1,t2]=x*t1",
        build_algebra(1, 2, base.anchor_matrix().clone(), s),
    ));

    let s = structure_from_brackets(2, 2, &[(1, 2, 1, RatFunc::one(2))]);
    out.push(("bullet(id2)+[t1,t2]=t1", build_algebra(2, 2, identity(2), s)));

    let mut anchor = vec![vec![RatFunc::zero(1)]; 3];
    anchor[2][0] = RatFunc::one(1);
    let s = structure_from_brackets(3, 1, &[(1, 2, 3, RatFunc::one(1))]);
    out.push(("heisenberg with rho(t3)=d/dx", build_algebra(1, 3, anchor, s)));

    out.into_iter()
        .map(|(n, a)| (n.to_string(), a.expect("antisymmetric")))
        .collect()
}

/// Morphisms that respect bracket and anchor.
pub fn morphism_fixtures() -> Vec<(String, Morphism)> {
    let mut out = Vec::new();
    let h = heisenberg(0).into_shared();
    out.push(("id(heisenberg)".to_string(), Morphism::identity(&h)));

    let scale: Vec<Element> = [1, 2, 2]
        .iter()
        .enumerate()
        .map(|(a, &k)| Element::basis(&h, a).scale(&RatFunc::from_int(0, k)))
        .collect();
    out.push(("heisenberg scaling".to_string(), Morphism::from_images(&h, &h, &scale).unwrap()));

    let s = sl2(0).into_shared();
    out.push(("id(sl2)".to_string(), Morphism::identity(&s)));

    // t1, t2 ↦ t1, t3 embeds the abelian plane
    let ab = abelian(2, 0).into_shared();
    let images = [Element::basis(&h, 0), Element::basis(&h, 2)];
    out.push(("plane into heisenberg".to_string(), Morphism::from_images(&ab, &h, &images).unwrap()));

    // ∂ ↦ ∂ + x·e, e ↦ e has a non-constant matrix
    let d = der_plus_f(1).unwrap().into_shared();
    let x = RatFunc::var(1, 0);
    let img0 = Element::new(&d, vec![RatFunc::one(1), x]).unwrap();
    let images = [img0, Element::basis(&d, 1)];
    out.push(("der_plus_f(1) shear".to_string(), Morphism::from_images(&d, &d, &images).unwrap()));

    let t = deform(&tangent_chart(1).unwrap(), &doubling(1)).unwrap().into_shared();
    out.push(("id(deformed chart)".to_string(), Morphism::identity(&t)));
    out
}

pub fn shared(list: Vec<(String, Algebra)>) -> Vec<(String, Arc<Algebra>)> {
    list.into_iter().map(|(n, a)| (n, a.into_shared())).collect()
}
