//! Cut-free proof terms, the raw surface terms that still admit identities
//! and cuts, and the typing judgment relating both to a homset.
//!
//! Terms are untyped syntax trees. A term is checked against a pair of
//! types `dom -> cod`, and because every rule is syntax directed the types
//! of all subterms follow from the root pair: [`Arrow`] packages a checked
//! term with its homset and every traversal recovers subterm types top-down.

use std::fmt;
use std::sync::Arc;

use crate::error::{AstPath, Expected, TypingError};
use crate::graph::GeneratorGraph;
use crate::types::{Name, Ty, TyKind, TypeMetrics};

/// Index of a binary projection or injection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Left, Side::Right];

    pub fn index(self) -> usize {
        match self {
            Side::Left => 0,
            Side::Right => 1,
        }
    }

    pub fn from_index(i: usize) -> Option<Side> {
        match i {
            0 => Some(Side::Left),
            1 => Some(Side::Right),
            _ => None,
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    /// Picks the component of a pair.
    pub fn pick<T>(self, pair: (T, T)) -> T {
        match self {
            Side::Left => pair.0,
            Side::Right => pair.1,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// A cut-free, identity-free proof term.
///
/// The derived ordering ranks constructors `!`, `?`, projections,
/// injections, tuples, cotuples, generator arrows, with index 0 before 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    /// `!`: any object to `1`.
    Bang,
    /// `?`: `0` to any object.
    Quest,
    Proj(Side, Arc<Term>),
    Inj(Side, Arc<Term>),
    Tuple(Arc<Term>, Arc<Term>),
    Cotuple(Arc<Term>, Arc<Term>),
    /// A path of generator edges; the empty path is a generator identity.
    Gen(Arc<[Name]>),
}

impl Term {
    pub fn proj(i: Side, body: Term) -> Term {
        Term::Proj(i, Arc::new(body))
    }

    pub fn inj(j: Side, body: Term) -> Term {
        Term::Inj(j, Arc::new(body))
    }

    pub fn tuple(a: Term, b: Term) -> Term {
        Term::Tuple(Arc::new(a), Arc::new(b))
    }

    pub fn cotuple(a: Term, b: Term) -> Term {
        Term::Cotuple(Arc::new(a), Arc::new(b))
    }

    pub fn gen<I, S>(path: I) -> Term
    where
        I: IntoIterator<Item = S>,
        S: Into<Name>,
    {
        Term::Gen(path.into_iter().map(Into::into).collect())
    }

    pub fn metrics(&self) -> TypeMetrics {
        term_metrics(self)
    }

    pub fn size(&self) -> u64 {
        term_metrics(self).size
    }

    /// Number of syntax nodes; a generator path is one node.
    pub fn node_count(&self) -> usize {
        match self {
            Term::Bang | Term::Quest | Term::Gen(_) => 1,
            Term::Proj(_, b) | Term::Inj(_, b) => 1 + b.node_count(),
            Term::Tuple(a, b) | Term::Cotuple(a, b) => 1 + a.node_count() + b.node_count(),
        }
    }

    pub fn has_generators(&self) -> bool {
        match self {
            Term::Bang | Term::Quest => false,
            Term::Gen(_) => true,
            Term::Proj(_, b) | Term::Inj(_, b) => b.has_generators(),
            Term::Tuple(a, b) | Term::Cotuple(a, b) => a.has_generators() || b.has_generators(),
        }
    }
}

/// Sizes and heights of cut-free terms: leaves count 1, each constructor
/// adds 1. A generator path counts one plus its length and has height 1.
pub fn term_metrics(t: &Term) -> TypeMetrics {
    match t {
        Term::Bang | Term::Quest => TypeMetrics { size: 1, height: 1 },
        Term::Gen(p) => TypeMetrics {
            size: 1 + p.len() as u64,
            height: 1,
        },
        Term::Proj(_, b) | Term::Inj(_, b) => {
            let m = term_metrics(b);
            TypeMetrics {
                size: m.size + 1,
                height: m.height + 1,
            }
        }
        Term::Tuple(a, b) | Term::Cotuple(a, b) => {
            let (l, r) = (term_metrics(a), term_metrics(b));
            TypeMetrics {
                size: 1 + l.size + r.size,
                height: 1 + l.height.max(r.height),
            }
        }
    }
}

/// A term checked against its homset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub dom: Ty,
    pub cod: Ty,
    pub term: Term,
}

impl Arrow {
    /// Type-checks `term : dom -> cod`.
    pub fn new(term: Term, dom: Ty, cod: Ty, graph: &GeneratorGraph) -> Result<Arrow, TypingError> {
        check(&term, &dom, &cod, graph)?;
        Ok(Arrow { dom, cod, term })
    }

    /// Packages a term the caller already knows to be well typed.
    pub fn trusted(term: Term, dom: Ty, cod: Ty) -> Arrow {
        Arrow { dom, cod, term }
    }

    pub fn has_generators(&self) -> bool {
        self.dom.has_generators() || self.cod.has_generators() || self.term.has_generators()
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} -> {}", self.term, self.dom, self.cod)
    }
}

/// Surface terms: the cut-free constructors plus identities and cuts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RawTerm {
    Bang,
    Quest,
    Proj(Side, Box<RawTerm>),
    Inj(Side, Box<RawTerm>),
    Tuple(Box<RawTerm>, Box<RawTerm>),
    Cotuple(Box<RawTerm>, Box<RawTerm>),
    Gen(Vec<Name>),
    Id(Ty),
    Cut(Box<RawTerm>, Box<RawTerm>),
}

impl RawTerm {
    /// The cut-free term, when there are no identities or cuts.
    pub fn to_term(&self) -> Option<Term> {
        Some(match self {
            RawTerm::Bang => Term::Bang,
            RawTerm::Quest => Term::Quest,
            RawTerm::Proj(i, b) => Term::proj(*i, b.to_term()?),
            RawTerm::Inj(j, b) => Term::inj(*j, b.to_term()?),
            RawTerm::Tuple(a, b) => Term::tuple(a.to_term()?, b.to_term()?),
            RawTerm::Cotuple(a, b) => Term::cotuple(a.to_term()?, b.to_term()?),
            RawTerm::Gen(p) => Term::Gen(p.iter().cloned().collect()),
            RawTerm::Id(_) | RawTerm::Cut(..) => return None,
        })
    }
}

impl From<&Term> for RawTerm {
    fn from(t: &Term) -> RawTerm {
        match t {
            Term::Bang => RawTerm::Bang,
            Term::Quest => RawTerm::Quest,
            Term::Proj(i, b) => RawTerm::Proj(*i, Box::new((&**b).into())),
            Term::Inj(j, b) => RawTerm::Inj(*j, Box::new((&**b).into())),
            Term::Tuple(a, b) => RawTerm::Tuple(Box::new((&**a).into()), Box::new((&**b).into())),
            Term::Cotuple(a, b) => {
                RawTerm::Cotuple(Box::new((&**a).into()), Box::new((&**b).into()))
            }
            Term::Gen(p) => RawTerm::Gen(p.to_vec()),
        }
    }
}

struct Checker<'g> {
    graph: &'g GeneratorGraph,
    path: Vec<usize>,
}

impl Checker<'_> {
    fn fail(&self, expected: Expected, dom: &Ty, cod: &Ty) -> TypingError {
        TypingError {
            location: AstPath(self.path.clone()),
            expected,
            dom: dom.clone(),
            cod: cod.clone(),
            detail: None,
        }
    }

    fn child<T>(&mut self, i: usize, f: impl FnOnce(&mut Self) -> T) -> T {
        self.path.push(i);
        let r = f(self);
        self.path.pop();
        r
    }

    fn term(&mut self, t: &Term, dom: &Ty, cod: &Ty) -> Result<(), TypingError> {
        match t {
            Term::Bang => self.bang(dom, cod),
            Term::Quest => self.quest(dom, cod),
            Term::Proj(i, b) => {
                let x = self.product_dom(dom, cod)?;
                self.child(0, |c| c.term(b, i.pick(x), cod))
            }
            Term::Inj(j, b) => {
                let a = self.sum_cod(dom, cod)?;
                self.child(0, |c| c.term(b, dom, j.pick(a)))
            }
            Term::Tuple(l, r) => {
                let (a, b) = self.product_cod(dom, cod)?;
                self.child(0, |c| c.term(l, dom, a))?;
                self.child(1, |c| c.term(r, dom, b))
            }
            Term::Cotuple(l, r) => {
                let (x, y) = self.sum_dom(dom, cod)?;
                self.child(0, |c| c.term(l, x, cod))?;
                self.child(1, |c| c.term(r, y, cod))
            }
            Term::Gen(p) => self.gen(p, dom, cod),
        }
    }

    fn raw(&mut self, t: &RawTerm, dom: &Ty, cod: &Ty) -> Result<(), TypingError> {
        match t {
            RawTerm::Bang => self.bang(dom, cod),
            RawTerm::Quest => self.quest(dom, cod),
            RawTerm::Proj(i, b) => {
                let x = self.product_dom(dom, cod)?;
                self.child(0, |c| c.raw(b, i.pick(x), cod))
            }
            RawTerm::Inj(j, b) => {
                let a = self.sum_cod(dom, cod)?;
                self.child(0, |c| c.raw(b, dom, j.pick(a)))
            }
            RawTerm::Tuple(l, r) => {
                let (a, b) = self.product_cod(dom, cod)?;
                self.child(0, |c| c.raw(l, dom, a))?;
                self.child(1, |c| c.raw(r, dom, b))
            }
            RawTerm::Cotuple(l, r) => {
                let (x, y) = self.sum_dom(dom, cod)?;
                self.child(0, |c| c.raw(l, x, cod))?;
                self.child(1, |c| c.raw(r, y, cod))
            }
            RawTerm::Gen(p) => self.gen(p, dom, cod),
            RawTerm::Id(t) => {
                if t == dom && t == cod {
                    self.graph
                        .check_type(t)
                        .map_err(|e| TypingError {
                            detail: Some(e),
                            ..self.fail(Expected::Exactly(t.clone()), dom, cod)
                        })
                } else {
                    Err(self.fail(Expected::Exactly(t.clone()), dom, cod))
                }
            }
            RawTerm::Cut(l, r) => {
                let mid = cut_type(l, r, dom, cod, self.graph)
                    .ok_or_else(|| self.fail(Expected::CutAnnotation, dom, cod))?;
                self.child(0, |c| c.raw(l, dom, &mid))?;
                self.child(1, |c| c.raw(r, &mid, cod))
            }
        }
    }

    fn bang(&self, dom: &Ty, cod: &Ty) -> Result<(), TypingError> {
        if cod.is_one() {
            Ok(())
        } else {
            Err(self.fail(Expected::TerminalCodomain, dom, cod))
        }
    }

    fn quest(&self, dom: &Ty, cod: &Ty) -> Result<(), TypingError> {
        if dom.is_zero() {
            Ok(())
        } else {
            Err(self.fail(Expected::InitialDomain, dom, cod))
        }
    }

    fn product_dom<'t>(&self, dom: &'t Ty, cod: &Ty) -> Result<(&'t Ty, &'t Ty), TypingError> {
        dom.as_prod().ok_or_else(|| self.fail(Expected::ProductDomain, dom, cod))
    }

    fn sum_dom<'t>(&self, dom: &'t Ty, cod: &Ty) -> Result<(&'t Ty, &'t Ty), TypingError> {
        dom.as_sum().ok_or_else(|| self.fail(Expected::SumDomain, dom, cod))
    }

    fn product_cod<'t>(&self, dom: &Ty, cod: &'t Ty) -> Result<(&'t Ty, &'t Ty), TypingError> {
        cod.as_prod().ok_or_else(|| self.fail(Expected::ProductCodomain, dom, cod))
    }

    fn sum_cod<'t>(&self, dom: &Ty, cod: &'t Ty) -> Result<(&'t Ty, &'t Ty), TypingError> {
        cod.as_sum().ok_or_else(|| self.fail(Expected::SumCodomain, dom, cod))
    }

    fn gen(&self, path: &[Name], dom: &Ty, cod: &Ty) -> Result<(), TypingError> {
        match (dom.kind(), cod.kind()) {
            (TyKind::Gen(x), TyKind::Gen(y)) => {
                self.graph.check_path(path, x, y).map_err(|e| TypingError {
                    detail: Some(e),
                    ..self.fail(Expected::GeneratorHomset, dom, cod)
                })
            }
            _ => Err(self.fail(Expected::GeneratorHomset, dom, cod)),
        }
    }
}

/// Type-checks a cut-free term against `dom -> cod`. Errors report the
/// leftmost-outermost failing position.
pub fn check(t: &Term, dom: &Ty, cod: &Ty, graph: &GeneratorGraph) -> Result<(), TypingError> {
    let mut c = Checker {
        graph,
        path: Vec::new(),
    };
    for ty in [dom, cod] {
        graph.check_type(ty).map_err(|e| TypingError {
            detail: Some(e),
            ..c.fail(Expected::Exactly(ty.clone()), dom, cod)
        })?;
    }
    c.term(t, dom, cod)
}

/// Type-checks a raw term. The middle type of every cut is synthesized from
/// its left factor, or failing that from its right factor.
pub fn check_raw(t: &RawTerm, dom: &Ty, cod: &Ty, graph: &GeneratorGraph) -> Result<(), TypingError> {
    let mut c = Checker {
        graph,
        path: Vec::new(),
    };
    for ty in [dom, cod] {
        graph.check_type(ty).map_err(|e| TypingError {
            detail: Some(e),
            ..c.fail(Expected::Exactly(ty.clone()), dom, cod)
        })?;
    }
    c.raw(t, dom, cod)
}

/// Checks `t : dom -> cod` and returns the typed cut-free term. Raw terms
/// containing identities or cuts are rejected here; `compose::eliminate`
/// accepts them.
pub fn infer(t: &RawTerm, dom: &Ty, cod: &Ty, graph: &GeneratorGraph) -> Result<Arrow, TypingError> {
    check_raw(t, dom, cod, graph)?;
    let term = t.to_term().ok_or_else(|| TypingError {
        location: AstPath::default(),
        expected: Expected::CutFree,
        dom: dom.clone(),
        cod: cod.clone(),
        detail: None,
    })?;
    Ok(Arrow {
        dom: dom.clone(),
        cod: cod.clone(),
        term,
    })
}

pub(crate) fn cut_type(l: &RawTerm, r: &RawTerm, dom: &Ty, cod: &Ty, graph: &GeneratorGraph) -> Option<Ty> {
    synth_cod(l, dom, graph).or_else(|| synth_dom(r, cod, graph))
}

/// The codomain forced by a raw term at a given domain, if any.
fn synth_cod(t: &RawTerm, dom: &Ty, graph: &GeneratorGraph) -> Option<Ty> {
    match t {
        RawTerm::Bang => Some(Ty::one()),
        RawTerm::Quest | RawTerm::Inj(..) => None,
        RawTerm::Proj(i, b) => synth_cod(b, i.pick(dom.as_prod()?), graph),
        RawTerm::Tuple(a, b) => Some(Ty::prod(synth_cod(a, dom, graph)?, synth_cod(b, dom, graph)?)),
        RawTerm::Cotuple(a, b) => {
            let (x, y) = dom.as_sum()?;
            synth_cod(a, x, graph).or_else(|| synth_cod(b, y, graph))
        }
        RawTerm::Gen(p) => match p.last() {
            None => dom.as_gen().map(|_| dom.clone()),
            Some(e) => graph.edge(e).map(|(_, t)| Ty::gen(t.clone())),
        },
        RawTerm::Id(t) => Some(t.clone()),
        RawTerm::Cut(l, r) => match synth_cod(l, dom, graph) {
            Some(mid) => synth_cod(r, &mid, graph),
            None => fixed_cod(r, graph),
        },
    }
}

/// The codomain of a raw term whatever its domain.
fn fixed_cod(t: &RawTerm, graph: &GeneratorGraph) -> Option<Ty> {
    match t {
        RawTerm::Bang => Some(Ty::one()),
        RawTerm::Id(t) => Some(t.clone()),
        RawTerm::Gen(p) => p.last().and_then(|e| graph.edge(e)).map(|(_, t)| Ty::gen(t.clone())),
        RawTerm::Tuple(a, b) => Some(Ty::prod(fixed_cod(a, graph)?, fixed_cod(b, graph)?)),
        RawTerm::Cotuple(a, b) => fixed_cod(a, graph).or_else(|| fixed_cod(b, graph)),
        RawTerm::Cut(l, r) => fixed_cod(r, graph).or_else(|| synth_cod(r, &fixed_cod(l, graph)?, graph)),
        RawTerm::Quest | RawTerm::Proj(..) | RawTerm::Inj(..) => None,
    }
}

/// The domain of a raw term whatever its codomain.
fn fixed_dom(t: &RawTerm, graph: &GeneratorGraph) -> Option<Ty> {
    match t {
        RawTerm::Quest => Some(Ty::zero()),
        RawTerm::Id(t) => Some(t.clone()),
        RawTerm::Gen(p) => p.first().and_then(|e| graph.edge(e)).map(|(s, _)| Ty::gen(s.clone())),
        RawTerm::Cotuple(a, b) => Some(Ty::sum(fixed_dom(a, graph)?, fixed_dom(b, graph)?)),
        RawTerm::Tuple(a, b) => fixed_dom(a, graph).or_else(|| fixed_dom(b, graph)),
        RawTerm::Cut(l, r) => fixed_dom(l, graph).or_else(|| synth_dom(l, &fixed_dom(r, graph)?, graph)),
        RawTerm::Bang | RawTerm::Proj(..) | RawTerm::Inj(..) => None,
    }
}

/// The domain forced by a raw term at a given codomain, if any.
fn synth_dom(t: &RawTerm, cod: &Ty, graph: &GeneratorGraph) -> Option<Ty> {
    match t {
        RawTerm::Quest => Some(Ty::zero()),
        RawTerm::Bang | RawTerm::Proj(..) => None,
        RawTerm::Inj(j, b) => synth_dom(b, j.pick(cod.as_sum()?), graph),
        RawTerm::Cotuple(a, b) => Some(Ty::sum(synth_dom(a, cod, graph)?, synth_dom(b, cod, graph)?)),
        RawTerm::Tuple(a, b) => {
            let (x, y) = cod.as_prod()?;
            synth_dom(a, x, graph).or_else(|| synth_dom(b, y, graph))
        }
        RawTerm::Gen(p) => match p.first() {
            None => cod.as_gen().map(|_| cod.clone()),
            Some(e) => graph.edge(e).map(|(s, _)| Ty::gen(s.clone())),
        },
        RawTerm::Id(t) => Some(t.clone()),
        RawTerm::Cut(l, r) => match synth_dom(r, cod, graph) {
            Some(mid) => synth_dom(l, &mid, graph),
            None => fixed_dom(l, graph),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_raw, parse_type};

    fn ty(s: &str) -> Ty {
        parse_type(s).unwrap()
    }

    fn infer_str(t: &str, dom: &str, cod: &str) -> Result<Arrow, TypingError> {
        infer(&parse_raw(t).unwrap(), &ty(dom), &ty(cod), &GeneratorGraph::empty())
    }

    #[test]
    fn infer_examples() {
        let a = infer_str("p0 ?", "0*0", "0").unwrap();
        assert_eq!(a.term, Term::proj(Side::Left, Term::Quest));
        let b = infer_str("s0 !", "1", "1+1").unwrap();
        assert_eq!(b.term, Term::inj(Side::Left, Term::Bang));
        let e = infer_str("!", "1", "0").unwrap_err();
        assert_eq!(e.expected, Expected::TerminalCodomain);
        assert_eq!(e.location, AstPath::default());
    }

    #[test]
    fn reports_leftmost_outermost_failure() {
        let e = infer_str("<!, s1 ?>", "1", "1*(1+1)").unwrap_err();
        assert_eq!(e.location, AstPath(vec![1, 0]));
        assert_eq!(e.expected, Expected::InitialDomain);
        let e = infer_str("{?, !}", "1+1", "1").unwrap_err();
        assert_eq!(e.location, AstPath(vec![0]));
    }

    #[test]
    fn metrics_examples() {
        assert_eq!(term_metrics(&Term::Bang), TypeMetrics { size: 1, height: 1 });
        assert_eq!(
            term_metrics(&Term::inj(Side::Left, Term::Bang)),
            TypeMetrics { size: 2, height: 2 }
        );
        assert_eq!(
            term_metrics(&Term::tuple(Term::Quest, Term::Quest)),
            TypeMetrics { size: 3, height: 2 }
        );
        assert_eq!(term_metrics(&Term::gen(["k", "l"])).size, 3);
    }

    #[test]
    fn cuts_need_a_synthesizable_middle() {
        assert!(infer_str("p0 ? ; s0 id:0", "0*0", "0+1").is_err_and(|e| e.expected == Expected::CutFree));
        let g = GeneratorGraph::empty();
        let raw = parse_raw("? ; s0 !").unwrap();
        // `?` fixes nothing on its right and `s0 !` fixes nothing on its left.
        let e = check_raw(&raw, &ty("0"), &ty("1+1"), &g).unwrap_err();
        assert_eq!(e.expected, Expected::CutAnnotation);
        let raw = parse_raw("? ; id:1 ; s0 !").unwrap();
        assert!(check_raw(&raw, &ty("0"), &ty("1+1"), &g).is_ok());
    }

    #[test]
    fn generator_paths_are_checked() {
        let mut g = GeneratorGraph::empty();
        g.add_node("x").unwrap();
        g.add_node("y").unwrap();
        g.add_edge("k", "x", "y").unwrap();
        assert!(check(&Term::gen(["k"]), &Ty::gen("x"), &Ty::gen("y"), &g).is_ok());
        assert!(check(&Term::gen(Vec::<&str>::new()), &Ty::gen("x"), &Ty::gen("x"), &g).is_ok());
        assert!(check(&Term::gen(["k"]), &Ty::gen("y"), &Ty::gen("x"), &g).is_err());
        assert!(check(&Term::Bang, &Ty::gen("q"), &Ty::one(), &g).is_err());
    }
}
