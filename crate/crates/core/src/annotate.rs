//! Pointedness and copointedness of terms, with witnesses.
//!
//! Terms live in a hash-consed [`Arena`] of typed nodes. Each node carries
//! two bits, computed once from its children when the node is created:
//!
//! * *pointed*: the term is `! ; p` for some point `p : 1 -> cod`;
//! * *copointed*: the term is `c ; ?` for some copoint `c : dom -> 0`.
//!
//! Points and copoints are alone in their equivalence classes, so two
//! witnesses denote the same arrow exactly when they are the same node.

use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::compose::compose;
use crate::terms::{Side, Term};
use crate::types::{Name, Ty, TyKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TyId(u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TyShape {
    Zero,
    One,
    Gen,
    Sum(TyId, TyId),
    Prod(TyId, TyId),
}

#[derive(Debug, Clone)]
pub(crate) struct TyInfo {
    pub(crate) ty: Ty,
    pub(crate) shape: TyShape,
    pub(crate) pointed: bool,
    pub(crate) copointed: bool,
    pub(crate) initial: bool,
    pub(crate) terminal: bool,
    pub(crate) generators: bool,
    point: Option<Option<NodeId>>,
    copoint: Option<Option<NodeId>>,
}

/// The outermost constructor of a node, with children as node ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Shape {
    Bang,
    Quest,
    Proj(Side, NodeId),
    Inj(Side, NodeId),
    Tuple(NodeId, NodeId),
    Cotuple(NodeId, NodeId),
    Gen(Arc<[Name]>),
}

#[derive(Debug, Clone)]
pub(crate) struct Node {
    pub(crate) shape: Shape,
    pub(crate) dom: TyId,
    pub(crate) cod: TyId,
    pub(crate) pointed: bool,
    pub(crate) copointed: bool,
    point: Option<NodeId>,
    copoint: Option<NodeId>,
}

/// Pointedness data of one term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Annotation {
    pub pointed: bool,
    pub copointed: bool,
    /// A point `p : 1 -> cod` with `t = ! ; p`.
    pub point_witness: Option<Term>,
    /// A copoint `c : dom -> 0` with `t = c ; ?`.
    pub copoint_witness: Option<Term>,
}

impl Annotation {
    pub fn is_disconnect(&self) -> bool {
        self.pointed && self.copointed
    }

    pub fn is_definite(&self) -> bool {
        !self.pointed && !self.copointed
    }
}

/// Hash-consed store of typed, annotated terms.
#[derive(Debug, Clone)]
pub struct Arena {
    pub(crate) tys: Vec<TyInfo>,
    ty_index: FxHashMap<Ty, TyId>,
    pub(crate) nodes: Vec<Node>,
    index: FxHashMap<(Shape, TyId, TyId), NodeId>,
    pub(crate) zero: TyId,
    pub(crate) one: TyId,
    pub(crate) restrict_memo: FxHashMap<(NodeId, u8), NodeId>,
    pub(crate) factor_memo: FxHashMap<(NodeId, u8), Option<NodeId>>,
}

impl Default for Arena {
    fn default() -> Self {
        Arena::new()
    }
}

impl Arena {
    pub fn new() -> Arena {
        let mut a = Arena {
            tys: Vec::new(),
            ty_index: FxHashMap::default(),
            nodes: Vec::new(),
            index: FxHashMap::default(),
            zero: TyId(0),
            one: TyId(0),
            restrict_memo: FxHashMap::default(),
            factor_memo: FxHashMap::default(),
        };
        a.zero = a.intern(&Ty::zero());
        a.one = a.intern(&Ty::one());
        a
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn intern(&mut self, ty: &Ty) -> TyId {
        if let Some(&id) = self.ty_index.get(ty) {
            return id;
        }
        let shape = match ty.kind() {
            TyKind::Zero => TyShape::Zero,
            TyKind::One => TyShape::One,
            TyKind::Gen(_) => TyShape::Gen,
            TyKind::Sum(a, b) => TyShape::Sum(self.intern(a), self.intern(b)),
            TyKind::Prod(a, b) => TyShape::Prod(self.intern(a), self.intern(b)),
        };
        let id = TyId(self.tys.len() as u32);
        self.tys.push(TyInfo {
            ty: ty.clone(),
            shape,
            pointed: ty.is_pointed(),
            copointed: ty.is_copointed(),
            initial: ty.is_initial(),
            terminal: ty.is_terminal(),
            generators: ty.has_generators(),
            point: None,
            copoint: None,
        });
        self.ty_index.insert(ty.clone(), id);
        id
    }

    pub fn ty(&self, t: TyId) -> &Ty {
        &self.tys[t.0 as usize].ty
    }

    pub(crate) fn info(&self, t: TyId) -> &TyInfo {
        &self.tys[t.0 as usize]
    }

    pub(crate) fn sum_parts(&self, t: TyId) -> (TyId, TyId) {
        match self.info(t).shape {
            TyShape::Sum(a, b) => (a, b),
            _ => panic!("expected a sum type, found {}", self.ty(t)),
        }
    }

    pub(crate) fn prod_parts(&self, t: TyId) -> (TyId, TyId) {
        match self.info(t).shape {
            TyShape::Prod(a, b) => (a, b),
            _ => panic!("expected a product type, found {}", self.ty(t)),
        }
    }

    pub(crate) fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.index()]
    }

    pub fn shape(&self, id: NodeId) -> &Shape {
        &self.node(id).shape
    }

    pub fn dom(&self, id: NodeId) -> &Ty {
        self.ty(self.node(id).dom)
    }

    pub fn cod(&self, id: NodeId) -> &Ty {
        self.ty(self.node(id).cod)
    }

    pub fn pointed(&self, id: NodeId) -> bool {
        self.node(id).pointed
    }

    pub fn copointed(&self, id: NodeId) -> bool {
        self.node(id).copointed
    }

    pub fn point_witness(&self, id: NodeId) -> Option<NodeId> {
        self.node(id).point
    }

    pub fn copoint_witness(&self, id: NodeId) -> Option<NodeId> {
        self.node(id).copoint
    }

    pub fn annotation(&self, id: NodeId) -> Annotation {
        let n = self.node(id);
        Annotation {
            pointed: n.pointed,
            copointed: n.copointed,
            point_witness: n.point.map(|p| self.term(p)),
            copoint_witness: n.copoint.map(|c| self.term(c)),
        }
    }

    /// Reads a node back as a syntax tree.
    pub fn term(&self, id: NodeId) -> Term {
        match &self.node(id).shape {
            Shape::Bang => Term::Bang,
            Shape::Quest => Term::Quest,
            Shape::Proj(i, b) => Term::proj(*i, self.term(*b)),
            Shape::Inj(j, b) => Term::inj(*j, self.term(*b)),
            Shape::Tuple(a, b) => Term::tuple(self.term(*a), self.term(*b)),
            Shape::Cotuple(a, b) => Term::cotuple(self.term(*a), self.term(*b)),
            Shape::Gen(p) => Term::Gen(p.clone()),
        }
    }

    /// Imports a term already checked against `dom -> cod`.
    pub fn import(&mut self, t: &Term, dom: &Ty, cod: &Ty) -> NodeId {
        let mut visits = 0;
        self.import_counted(t, dom, cod, &mut visits)
    }

    /// As [`Arena::import`], adding the number of syntax positions
    /// visited (a generator path counts one per edge plus one) to `visits`.
    pub fn import_counted(&mut self, t: &Term, dom: &Ty, cod: &Ty, visits: &mut usize) -> NodeId {
        let (d, c) = (self.intern(dom), self.intern(cod));
        self.import_at(t, d, c, visits)
    }

    pub(crate) fn import_at(&mut self, t: &Term, dom: TyId, cod: TyId, visits: &mut usize) -> NodeId {
        *visits += 1;
        let shape = match t {
            Term::Bang => Shape::Bang,
            Term::Quest => Shape::Quest,
            Term::Proj(i, b) => {
                let x = i.pick(self.prod_parts(dom));
                Shape::Proj(*i, self.import_at(b, x, cod, visits))
            }
            Term::Inj(j, b) => {
                let a = j.pick(self.sum_parts(cod));
                Shape::Inj(*j, self.import_at(b, dom, a, visits))
            }
            Term::Tuple(l, r) => {
                let (a, b) = self.prod_parts(cod);
                let l = self.import_at(l, dom, a, visits);
                Shape::Tuple(l, self.import_at(r, dom, b, visits))
            }
            Term::Cotuple(l, r) => {
                let (x, y) = self.sum_parts(dom);
                let l = self.import_at(l, x, cod, visits);
                Shape::Cotuple(l, self.import_at(r, y, cod, visits))
            }
            Term::Gen(p) => {
                *visits += p.len();
                Shape::Gen(p.clone())
            }
        };
        self.mk(shape, dom, cod)
    }

    /// The node for `shape : dom -> cod`, creating and annotating it if new.
    pub(crate) fn mk(&mut self, shape: Shape, dom: TyId, cod: TyId) -> NodeId {
        let key = (shape, dom, cod);
        if let Some(&id) = self.index.get(&key) {
            return id;
        }
        let (shape, dom, cod) = key;
        let (sp, sc) = self.structural_bits(&shape, dom, cod);
        let pointed = sp || (sc && self.info(cod).pointed);
        let copointed = sc || (sp && self.info(dom).copointed);
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(Node {
            shape: shape.clone(),
            dom,
            cod,
            pointed,
            copointed,
            point: None,
            copoint: None,
        });
        self.index.insert((shape.clone(), dom, cod), id);
        // Witness construction may look this very node up again: a point
        // witnesses itself.
        let point = match (pointed, sp) {
            (false, _) => None,
            (true, true) => self.structural_point(&shape, dom, cod),
            (true, false) => self.point_of_id(cod),
        };
        let copoint = match (copointed, sc) {
            (false, _) => None,
            (true, true) => self.structural_copoint(&shape, dom, cod),
            (true, false) => self.copoint_of_id(dom),
        };
        let n = &mut self.nodes[id.index()];
        n.point = point;
        n.copoint = copoint;
        id
    }

    fn structural_bits(&self, shape: &Shape, dom: TyId, cod: TyId) -> (bool, bool) {
        let n = |id: NodeId| self.node(id);
        match *shape {
            Shape::Bang => (true, self.info(dom).copointed),
            Shape::Quest => (self.info(cod).pointed, true),
            Shape::Proj(_, b) | Shape::Inj(_, b) => (n(b).pointed, n(b).copointed),
            Shape::Tuple(a, b) => {
                let (ta, tb) = self.prod_parts(cod);
                let sp = n(a).pointed && n(b).pointed;
                let sc = n(a).copointed
                    && n(b).copointed
                    && (self.info(ta).pointed || self.info(tb).pointed || n(a).copoint == n(b).copoint);
                (sp, sc)
            }
            Shape::Cotuple(a, b) => {
                let (tx, ty) = self.sum_parts(dom);
                let sc = n(a).copointed && n(b).copointed;
                let sp = n(a).pointed
                    && n(b).pointed
                    && (self.info(tx).copointed || self.info(ty).copointed || n(a).point == n(b).point);
                (sp, sc)
            }
            Shape::Gen(_) => (false, false),
        }
    }

    fn structural_point(&mut self, shape: &Shape, dom: TyId, cod: TyId) -> Option<NodeId> {
        let pw = |a: &Arena, id: NodeId| a.node(id).point.expect("pointed child has a witness");
        let one = self.one;
        Some(match *shape {
            Shape::Bang => self.mk(Shape::Bang, one, one),
            Shape::Quest => return self.point_of_id(cod),
            Shape::Proj(_, b) => pw(self, b),
            Shape::Inj(j, b) => {
                let p = pw(self, b);
                self.mk(Shape::Inj(j, p), one, cod)
            }
            Shape::Tuple(a, b) => {
                let (pa, pb) = (pw(self, a), pw(self, b));
                self.mk(Shape::Tuple(pa, pb), one, cod)
            }
            Shape::Cotuple(a, b) => {
                if self.info(self.sum_parts(dom).0).copointed {
                    pw(self, b)
                } else {
                    pw(self, a)
                }
            }
            Shape::Gen(_) => unreachable!("generator arrows are never pointed"),
        })
    }

    fn structural_copoint(&mut self, shape: &Shape, dom: TyId, cod: TyId) -> Option<NodeId> {
        let cw = |a: &Arena, id: NodeId| a.node(id).copoint.expect("copointed child has a witness");
        let zero = self.zero;
        Some(match *shape {
            Shape::Bang => return self.copoint_of_id(dom),
            Shape::Quest => self.mk(Shape::Quest, zero, zero),
            Shape::Proj(i, b) => {
                let c = cw(self, b);
                self.mk(Shape::Proj(i, c), dom, zero)
            }
            Shape::Inj(_, b) => cw(self, b),
            Shape::Tuple(a, b) => {
                if self.info(self.prod_parts(cod).0).pointed {
                    cw(self, b)
                } else {
                    cw(self, a)
                }
            }
            Shape::Cotuple(a, b) => {
                let (ca, cb) = (cw(self, a), cw(self, b));
                self.mk(Shape::Cotuple(ca, cb), dom, zero)
            }
            Shape::Gen(_) => unreachable!("generator arrows are never copointed"),
        })
    }

    /// The leftmost point `1 -> t`, if `t` is pointed.
    pub(crate) fn point_of_id(&mut self, t: TyId) -> Option<NodeId> {
        if let Some(p) = self.info(t).point {
            return p;
        }
        let one = self.one;
        let p = match self.info(t).shape {
            TyShape::One => Some(self.mk(Shape::Bang, one, one)),
            TyShape::Zero | TyShape::Gen => None,
            TyShape::Prod(a, b) => match (self.point_of_id(a), self.point_of_id(b)) {
                (Some(pa), Some(pb)) => Some(self.mk(Shape::Tuple(pa, pb), one, t)),
                _ => None,
            },
            TyShape::Sum(a, b) => match self.point_of_id(a) {
                Some(pa) => Some(self.mk(Shape::Inj(Side::Left, pa), one, t)),
                None => self
                    .point_of_id(b)
                    .map(|pb| self.mk(Shape::Inj(Side::Right, pb), one, t)),
            },
        };
        self.tys[t.0 as usize].point = Some(p);
        p
    }

    /// The leftmost copoint `t -> 0`, if `t` is copointed.
    pub(crate) fn copoint_of_id(&mut self, t: TyId) -> Option<NodeId> {
        if let Some(c) = self.info(t).copoint {
            return c;
        }
        let zero = self.zero;
        let c = match self.info(t).shape {
            TyShape::Zero => Some(self.mk(Shape::Quest, zero, zero)),
            TyShape::One | TyShape::Gen => None,
            TyShape::Sum(a, b) => match (self.copoint_of_id(a), self.copoint_of_id(b)) {
                (Some(ca), Some(cb)) => Some(self.mk(Shape::Cotuple(ca, cb), t, zero)),
                _ => None,
            },
            TyShape::Prod(a, b) => match self.copoint_of_id(a) {
                Some(ca) => Some(self.mk(Shape::Proj(Side::Left, ca), t, zero)),
                None => self
                    .copoint_of_id(b)
                    .map(|cb| self.mk(Shape::Proj(Side::Right, cb), t, zero)),
            },
        };
        self.tys[t.0 as usize].copoint = Some(c);
        c
    }

    pub fn point_of(&mut self, t: &Ty) -> Option<NodeId> {
        let t = self.intern(t);
        self.point_of_id(t)
    }

    pub fn copoint_of(&mut self, t: &Ty) -> Option<NodeId> {
        let t = self.intern(t);
        self.copoint_of_id(t)
    }

    /// `c ; ?_cod` for a copoint `c`: the same tree with its codomain
    /// replaced.
    pub(crate) fn copoint_then_quest(&mut self, c: NodeId, cod: TyId) -> NodeId {
        let n = self.node(c).clone();
        let shape = match n.shape {
            Shape::Quest => Shape::Quest,
            Shape::Proj(i, b) => Shape::Proj(i, self.copoint_then_quest(b, cod)),
            Shape::Cotuple(a, b) => {
                let a = self.copoint_then_quest(a, cod);
                Shape::Cotuple(a, self.copoint_then_quest(b, cod))
            }
            _ => unreachable!("copoints are built from ?, projections and cotuples"),
        };
        self.mk(shape, n.dom, cod)
    }

    /// `!_dom ; p` for a point `p`: the same tree with its domain replaced.
    pub(crate) fn bang_then_point(&mut self, p: NodeId, dom: TyId) -> NodeId {
        let n = self.node(p).clone();
        let shape = match n.shape {
            Shape::Bang => Shape::Bang,
            Shape::Inj(j, b) => Shape::Inj(j, self.bang_then_point(b, dom)),
            Shape::Tuple(a, b) => {
                let a = self.bang_then_point(a, dom);
                Shape::Tuple(a, self.bang_then_point(b, dom))
            }
            _ => unreachable!("points are built from !, injections and tuples"),
        };
        self.mk(shape, dom, n.cod)
    }

    /// The unique arrow `dom -> cod` that is both pointed and copointed.
    pub fn disconnect(&mut self, dom: &Ty, cod: &Ty) -> Option<NodeId> {
        let (d, c) = (self.intern(dom), self.intern(cod));
        let copoint = self.copoint_of_id(d)?;
        self.point_of_id(c)?;
        Some(self.copoint_then_quest(copoint, c))
    }
}

/// A term together with the arena holding its annotated nodes.
#[derive(Debug, Clone)]
pub struct AnnotatedTerm {
    pub arena: Arena,
    pub root: NodeId,
    /// Syntax positions visited while annotating.
    pub visits: usize,
}

/// One row of a node-by-node annotation listing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeReport {
    /// Child indices from the root.
    pub path: Vec<usize>,
    pub term: Term,
    pub dom: Ty,
    pub cod: Ty,
    pub annotation: Annotation,
}

impl AnnotatedTerm {
    pub fn term(&self) -> Term {
        self.arena.term(self.root)
    }

    pub fn dom(&self) -> &Ty {
        self.arena.dom(self.root)
    }

    pub fn cod(&self) -> &Ty {
        self.arena.cod(self.root)
    }

    pub fn annotation(&self) -> Annotation {
        self.arena.annotation(self.root)
    }

    /// Every subterm in preorder with its annotation.
    pub fn nodes(&self) -> Vec<NodeReport> {
        let mut out = Vec::new();
        let mut stack = vec![(self.root, Vec::new())];
        while let Some((id, path)) = stack.pop() {
            let children: Vec<NodeId> = match *self.arena.shape(id) {
                Shape::Proj(_, b) | Shape::Inj(_, b) => vec![b],
                Shape::Tuple(a, b) | Shape::Cotuple(a, b) => vec![a, b],
                _ => vec![],
            };
            for (k, c) in children.into_iter().enumerate().rev() {
                let mut p: Vec<usize> = path.clone();
                p.push(k);
                stack.push((c, p));
            }
            out.push(NodeReport {
                path,
                term: self.arena.term(id),
                dom: self.arena.dom(id).clone(),
                cod: self.arena.cod(id).clone(),
                annotation: self.arena.annotation(id),
            });
        }
        out
    }
}

/// Annotates a term checked against `dom -> cod` in a single bottom-up pass.
pub fn annotate(t: &Term, dom: &Ty, cod: &Ty) -> AnnotatedTerm {
    let mut arena = Arena::new();
    let mut visits = 0;
    let root = arena.import_counted(t, dom, cod, &mut visits);
    AnnotatedTerm { arena, root, visits }
}

pub fn point_of(t: &Ty) -> Option<Term> {
    let mut a = Arena::new();
    a.point_of(t).map(|p| a.term(p))
}

pub fn copoint_of(t: &Ty) -> Option<Term> {
    let mut a = Arena::new();
    a.copoint_of(t).map(|c| a.term(c))
}

/// The unique pointed and copointed arrow `dom -> cod`, when `dom` is
/// copointed and `cod` is pointed.
pub fn disconnect(dom: &Ty, cod: &Ty) -> Option<Term> {
    let c = copoint_of(dom)?;
    let p = point_of(cod)?;
    let through = compose(&Term::Quest, &p).expect("? composes with anything");
    Some(compose(&c, &through).expect("copoints compose with ?"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_term, parse_type};

    fn ann(t: &str, dom: &str, cod: &str) -> Annotation {
        annotate(&parse_term(t).unwrap(), &parse_type(dom).unwrap(), &parse_type(cod).unwrap()).annotation()
    }

    fn term(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    fn ty(s: &str) -> Ty {
        parse_type(s).unwrap()
    }

    #[test]
    fn annotation_examples() {
        let a = ann("s1 !", "0*0", "0+1");
        assert!(a.is_disconnect());
        assert_eq!(a.point_witness, Some(term("s1 !")));
        assert_eq!(a.copoint_witness, Some(term("p0 ?")));

        let a = ann("p0 ?", "0*0", "0");
        assert!(!a.pointed && a.copointed);
        assert_eq!(a.copoint_witness, Some(term("p0 ?")));

        let a = ann("s0 !", "1*1", "1+1");
        assert!(a.pointed && !a.copointed);
        assert_eq!(a.point_witness, Some(term("s0 !")));
    }

    #[test]
    fn identity_on_a_sum_of_points_is_not_pointed() {
        assert!(ann("{s0 !, s1 !}", "1+1", "1+1").is_definite());
        assert!(ann("{s0 !, s0 !}", "1+1", "1+1").pointed);
    }

    #[test]
    fn injected_disconnects_are_disconnects() {
        let a = ann("s0 p0 ?", "0*0", "0+1");
        assert!(a.is_disconnect());
        assert_eq!(a.point_witness, Some(term("s1 !")));
    }

    #[test]
    fn tuples_of_copointed_maps_need_a_shared_copoint() {
        assert!(!ann("<p0 ?, p1 ?>", "0*0", "0*0").copointed);
        assert!(ann("<p0 ?, p0 ?>", "0*0", "0*0").copointed);
        assert!(ann("<p0 ?, p1 ?>", "0*0", "1*0").copointed);
    }

    #[test]
    fn points_and_copoints_of_types() {
        assert_eq!(point_of(&ty("1+1")), Some(term("s0 !")));
        assert_eq!(point_of(&ty("0")), None);
        assert_eq!(copoint_of(&ty("0*1")), Some(term("p0 ?")));
        assert_eq!(copoint_of(&ty("1*0")), Some(term("p1 ?")));
        assert_eq!(copoint_of(&ty("x")), None);
    }

    #[test]
    fn disconnects() {
        assert_eq!(disconnect(&ty("0*0"), &ty("1+1")), Some(term("p0 ?")));
        assert_eq!(disconnect(&ty("1"), &ty("1+1")), None);
        assert_eq!(disconnect(&ty("0"), &ty("1")), Some(Term::Quest));
        let mut a = Arena::new();
        let d = a.disconnect(&ty("(0+0)*1"), &ty("1*(0+1)")).unwrap();
        assert!(a.pointed(d) && a.copointed(d));
        assert_eq!(a.term(d), term("p0 {?, ?}"));
    }

    #[test]
    fn annotation_visits_every_position_once() {
        let t = term("{<p0 ?, s1 !>, <!, s0 !>}");
        let a = annotate(&t, &ty("(0*1)+1"), &ty("1*(1+1)"));
        assert_eq!(a.visits as u64, t.size());
        assert_eq!(a.nodes().len(), t.node_count());
        assert_eq!(a.nodes()[2].path, vec![0, 0]);
    }

    #[test]
    fn hash_consing_shares_equal_subterms() {
        let mut a = Arena::new();
        let x = a.import(&term("s0 !"), &ty("1"), &ty("1+1"));
        let y = a.import(&term("s0 !"), &ty("1"), &ty("1+1"));
        let z = a.import(&term("s0 !"), &ty("0"), &ty("1+1"));
        assert_eq!(x, y);
        assert_ne!(x, z);
    }
}
