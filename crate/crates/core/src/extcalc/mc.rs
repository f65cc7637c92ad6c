use std::sync::Arc;

use crate::coeffring::{RatFunc, Rational};
use crate::gla::Algebra;

use super::form::Form;
use super::ops::{ext_diff, wedge};

/// `d t^a` next to `−½ Σ_{b,c} L^a_bc t^b∧t^c`.
#[derive(Debug, Clone)]
pub struct StructureEquation {
    pub index: usize,
    pub computed: Form,
    pub expected: Form,
    pub equal: bool,
}

impl StructureEquation {
    pub fn line(&self) -> String {
        format!("d t^{} = {}", self.index + 1, self.computed)
    }
}

/// `d x^i` next to `ρ^i_a t^a`.
#[derive(Debug, Clone)]
pub struct AnchorRelation {
    pub var: usize,
    pub computed: Form,
    pub expected: Form,
    pub equal: bool,
}

impl AnchorRelation {
    pub fn line(&self) -> String {
        let names = self.computed.algebra().var_names();
        format!("d {} = {}", names[self.var], self.computed)
    }
}

#[derive(Debug, Clone)]
pub struct MaurerCartan {
    pub equations: Vec<StructureEquation>,
    pub anchor_relations: Vec<AnchorRelation>,
}

impl MaurerCartan {
    pub fn all_equal(&self) -> bool {
        self.equations.iter().all(|e| e.equal) && self.anchor_relations.iter().all(|r| r.equal)
    }
}

pub fn maurer_cartan(alg: &Arc<Algebra>) -> MaurerCartan {
    let p = alg.dim();
    let n = alg.nvars();
    let half = Rational::new((-1).into(), 2.into());
    let equations = (0..p)
        .map(|a| {
            let computed = ext_diff(&Form::coframe(alg, a));
            let mut expected = Form::zero(alg, 2);
            for b in 0..p {
                for c in 0..p {
                    let l = alg.structure(b, c, a);
                    if l.is_zero() {
                        continue;
                    }
                    let tt = wedge(&Form::coframe(alg, b), &Form::coframe(alg, c)).expect("same algebra");
                    expected = &expected + &tt.scale(&l.scale(&half));
                }
            }
            let equal = computed == expected;
            StructureEquation {
                index: a,
                computed,
                expected,
                equal,
            }
        })
        .collect();
    let anchor_relations = (0..n)
        .map(|i| {
            let computed = ext_diff(&Form::scalar(alg, RatFunc::var(n, i)));
            let mut expected = Form::zero(alg, 1);
            for a in 0..p {
                expected = &expected + &Form::coframe(alg, a).scale(alg.anchor(a, i));
            }
            let equal = computed == expected;
            AnchorRelation {
                var: i,
                computed,
                expected,
                equal,
            }
        })
        .collect();
    MaurerCartan {
        equations,
        anchor_relations,
    }
}
