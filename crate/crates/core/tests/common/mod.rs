//! A naive reference oracle kept apart from the library: its own homset
//! enumerator and its own equivalence, built by uniting each term with the
//! result of every single left-to-right equation step.

#![allow(dead_code)]

use std::collections::HashMap;

use sigmapi::terms::{Side, Term};
use sigmapi::types::{Ty, TyKind};

/// Every cut-free generator-free term `x -> a`.
pub fn terms(x: &Ty, a: &Ty) -> Vec<Term> {
    let mut out = Vec::new();
    if matches!(a.kind(), TyKind::One) {
        out.push(Term::Bang);
    }
    if matches!(x.kind(), TyKind::Zero) {
        out.push(Term::Quest);
    }
    if let TyKind::Prod(x0, x1) = x.kind() {
        for (i, xi) in [(Side::Left, x0), (Side::Right, x1)] {
            out.extend(terms(xi, a).into_iter().map(|t| Term::proj(i, t)));
        }
    }
    if let TyKind::Sum(a0, a1) = a.kind() {
        for (j, aj) in [(Side::Left, a0), (Side::Right, a1)] {
            out.extend(terms(x, aj).into_iter().map(|t| Term::inj(j, t)));
        }
    }
    if let TyKind::Prod(a0, a1) = a.kind() {
        let rights = terms(x, a1);
        for l in terms(x, a0) {
            out.extend(rights.iter().map(|r| Term::tuple(l.clone(), r.clone())));
        }
    }
    if let TyKind::Sum(x0, x1) = x.kind() {
        let rights = terms(x1, a);
        for l in terms(x0, a) {
            out.extend(rights.iter().map(|r| Term::cotuple(l.clone(), r.clone())));
        }
    }
    out
}

/// Results of one left-to-right equation step anywhere inside `t : x -> a`.
fn steps(t: &Term, x: &Ty) -> Vec<Term> {
    let mut out = Vec::new();
    match t {
        Term::Proj(i, b) => {
            match &**b {
                Term::Tuple(f, g) => out.push(Term::tuple(
                    Term::proj(*i, (**f).clone()),
                    Term::proj(*i, (**g).clone()),
                )),
                Term::Bang => out.push(Term::Bang),
                _ => {}
            }
            let xi = match x.kind() {
                TyKind::Prod(x0, x1) => i.pick((x0, x1)),
                _ => unreachable!(),
            };
            out.extend(steps(b, xi).into_iter().map(|s| Term::proj(*i, s)));
        }
        Term::Inj(j, b) => {
            match &**b {
                Term::Cotuple(f, g) => out.push(Term::cotuple(
                    Term::inj(*j, (**f).clone()),
                    Term::inj(*j, (**g).clone()),
                )),
                Term::Proj(i, f) => out.push(Term::proj(*i, Term::inj(*j, (**f).clone()))),
                Term::Quest => out.push(Term::Quest),
                _ => {}
            }
            out.extend(steps(b, x).into_iter().map(|s| Term::inj(*j, s)));
        }
        Term::Tuple(l, r) => {
            if let (Term::Quest, Term::Quest) = (&**l, &**r) {
                out.push(Term::Quest);
            }
            for s in steps(l, x) {
                out.push(Term::tuple(s, (**r).clone()));
            }
            for s in steps(r, x) {
                out.push(Term::tuple((**l).clone(), s));
            }
        }
        Term::Cotuple(l, r) => {
            match (&**l, &**r) {
                (Term::Tuple(a, b), Term::Tuple(c, d)) => out.push(Term::tuple(
                    Term::cotuple((**a).clone(), (**c).clone()),
                    Term::cotuple((**b).clone(), (**d).clone()),
                )),
                (Term::Bang, Term::Bang) => out.push(Term::Bang),
                _ => {}
            }
            let (x0, x1) = match x.kind() {
                TyKind::Sum(x0, x1) => (x0, x1),
                _ => unreachable!(),
            };
            for s in steps(l, x0) {
                out.push(Term::cotuple(s, (**r).clone()));
            }
            for s in steps(r, x1) {
                out.push(Term::cotuple((**l).clone(), s));
            }
        }
        Term::Bang => {
            if matches!(x.kind(), TyKind::Zero) {
                out.push(Term::Quest);
            }
        }
        Term::Quest | Term::Gen(_) => {}
    }
    out
}

/// A homset split into classes.
pub struct Classes {
    pub terms: Vec<Term>,
    pub class: Vec<usize>,
    pub count: usize,
    index: HashMap<Term, usize>,
}

impl Classes {
    pub fn of(&self, t: &Term) -> usize {
        self.class[*self.index.get(t).unwrap_or_else(|| panic!("{t} is not in the homset"))]
    }

    pub fn same(&self, f: &Term, g: &Term) -> bool {
        self.of(f) == self.of(g)
    }
}

pub fn classes(x: &Ty, a: &Ty) -> Classes {
    let terms = terms(x, a);
    let index: HashMap<Term, usize> = terms.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
    let mut parent: Vec<usize> = (0..terms.len()).collect();
    fn root(p: &mut [usize], mut k: usize) -> usize {
        while p[k] != k {
            p[k] = p[p[k]];
            k = p[k];
        }
        k
    }
    for (k, t) in terms.iter().enumerate() {
        for s in steps(t, x) {
            let m = index[&s];
            let (rk, rm) = (root(&mut parent, k), root(&mut parent, m));
            parent[rk.max(rm)] = rk.min(rm);
        }
    }
    let mut number = HashMap::new();
    let class: Vec<usize> = (0..terms.len())
        .map(|k| {
            let r = root(&mut parent, k);
            let n = number.len();
            *number.entry(r).or_insert(n)
        })
        .collect();
    Classes {
        count: number.len(),
        terms,
        class,
        index,
    }
}

/// Every type pair with both sizes at most `max`.
pub fn type_pairs(max: u64) -> Vec<(Ty, Ty)> {
    let tys = sigmapi::types::types_up_to(max);
    tys.iter()
        .flat_map(|x| tys.iter().map(move |a| (x.clone(), a.clone())))
        .collect()
}
