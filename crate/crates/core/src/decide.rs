//! Equality of generator-free terms.
//!
//! The recursion splits sum domains and product codomains until both sides
//! are maps from a product (or `1`) to a sum (or `0`). There, maps that
//! factor through a point or a copoint are compared by their witnesses, and
//! definite maps are compared corner by corner, with a projection-shaped and
//! an injection-shaped term related through a single bouncer.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::annotate::{Arena, NodeId, Shape, TyShape};
use crate::terms::{Arrow, Side, Term};

/// Why two terms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Witness {
    /// Both are the unique pointed and copointed arrow of the homset.
    Disconnect(Term),
    /// Both are `! ; p` for this point.
    SharedPoint(Term),
    /// Both are `c ; ?` for this copoint.
    SharedCopoint(Term),
    /// `π_i(h)` is one side and `σ_j(h)` the other.
    Bouncer(Term),
    /// Both have the same outer constructor and equal bodies.
    SyntacticRecursion,
}

/// Why two terms differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    CornerMismatch,
    PointMismatch,
    CopointMismatch,
    LiftFailure,
    /// The restrictions to this summand of the domain, or this factor of
    /// the codomain, differ.
    Component(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equal(Option<Witness>),
    NotEqual(Reason),
    /// Generators occur; only the oracle can answer.
    RequiresOracle,
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal(_))
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::CornerMismatch => f.write_str("corner-mismatch"),
            Reason::PointMismatch => f.write_str("point-mismatch"),
            Reason::CopointMismatch => f.write_str("copoint-mismatch"),
            Reason::LiftFailure => f.write_str("lift-failure"),
            Reason::Component(k) => write!(f, "component {k}"),
        }
    }
}

impl Witness {
    pub fn tag(&self) -> &'static str {
        match self {
            Witness::Disconnect(_) => "disconnect",
            Witness::SharedPoint(_) => "shared-point",
            Witness::SharedCopoint(_) => "shared-copoint",
            Witness::Bouncer(_) => "bouncer",
            Witness::SyntacticRecursion => "syntactic-recursion",
        }
    }

    pub fn term(&self) -> Option<&Term> {
        match self {
            Witness::Disconnect(t) | Witness::SharedPoint(t) | Witness::SharedCopoint(t) | Witness::Bouncer(t) => {
                Some(t)
            }
            Witness::SyntacticRecursion => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Equal(None) => f.write_str("Equal"),
            Verdict::Equal(Some(w)) => write!(f, "Equal ({})", w.tag().replace('-', " ")),
            Verdict::NotEqual(r) => write!(f, "NotEqual ({r})"),
            Verdict::RequiresOracle => f.write_str("RequiresOracle"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum W {
    Plain,
    Disconnect(NodeId),
    SharedPoint(NodeId),
    SharedCopoint(NodeId),
    Bouncer(NodeId),
    Syntactic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum V {
    Eq(W),
    Ne(Reason),
}

impl V {
    fn is_eq(self) -> bool {
        matches!(self, V::Eq(_))
    }
}

/// Work done by one decision.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    /// Recursive calls plus nodes visited by restriction and factoring.
    pub steps: u64,
    pub calls: u64,
    pub visits: u64,
}

const RESTRICT_DOM: u8 = 0;
const RESTRICT_COD: u8 = 2;

impl Arena {
    /// `σ_k ; f` for `f : X0 + X1 -> A`.
    pub fn restrict_dom(&mut self, f: NodeId, k: Side, visits: &mut u64) -> NodeId {
        let key = (f, RESTRICT_DOM + k.index() as u8);
        *visits += 1;
        if let Some(&r) = self.restrict_memo.get(&key) {
            return r;
        }
        let n = self.node(f).clone();
        let x = k.pick(self.sum_parts(n.dom));
        let r = if matches!(self.info(x).shape, TyShape::Zero) {
            self.mk(Shape::Quest, x, n.cod)
        } else {
            match n.shape {
                Shape::Cotuple(a, b) => k.pick((a, b)),
                Shape::Bang => self.mk(Shape::Bang, x, n.cod),
                Shape::Inj(j, b) => {
                    let b = self.restrict_dom(b, k, visits);
                    self.mk(Shape::Inj(j, b), x, n.cod)
                }
                Shape::Tuple(a, b) => {
                    let a = self.restrict_dom(a, k, visits);
                    let b = self.restrict_dom(b, k, visits);
                    self.mk(Shape::Tuple(a, b), x, n.cod)
                }
                _ => unreachable!("no other constructor has a sum domain"),
            }
        };
        self.restrict_memo.insert(key, r);
        r
    }

    /// `f ; π_k` for `f : X -> A0 × A1`.
    pub fn restrict_cod(&mut self, f: NodeId, k: Side, visits: &mut u64) -> NodeId {
        let key = (f, RESTRICT_COD + k.index() as u8);
        *visits += 1;
        if let Some(&r) = self.restrict_memo.get(&key) {
            return r;
        }
        let n = self.node(f).clone();
        let a = k.pick(self.prod_parts(n.cod));
        let r = if matches!(self.info(a).shape, TyShape::One) {
            self.mk(Shape::Bang, n.dom, a)
        } else {
            match n.shape {
                Shape::Tuple(l, r) => k.pick((l, r)),
                Shape::Quest => self.mk(Shape::Quest, n.dom, a),
                Shape::Proj(i, b) => {
                    let b = self.restrict_cod(b, k, visits);
                    self.mk(Shape::Proj(i, b), n.dom, a)
                }
                Shape::Cotuple(l, r) => {
                    let l = self.restrict_cod(l, k, visits);
                    let r = self.restrict_cod(r, k, visits);
                    self.mk(Shape::Cotuple(l, r), n.dom, a)
                }
                _ => unreachable!("no other constructor has a product codomain"),
            }
        };
        self.restrict_memo.insert(key, r);
        r
    }
}

/// Decision procedure state: an arena of imported terms and a memo of
/// decided sub-problems.
#[derive(Debug, Clone)]
pub struct Decider {
    pub arena: Arena,
    memo: FxHashMap<(NodeId, NodeId), V>,
    memo_limit: usize,
    stats: Stats,
}

impl Default for Decider {
    fn default() -> Self {
        Decider::new()
    }
}

impl Decider {
    pub fn new() -> Decider {
        Decider::with_arena(Arena::new())
    }

    pub fn with_arena(arena: Arena) -> Decider {
        Decider {
            arena,
            memo: FxHashMap::default(),
            memo_limit: 1 << 22,
            stats: Stats::default(),
        }
    }

    pub fn import(&mut self, a: &Arrow) -> NodeId {
        self.arena.import(&a.term, &a.dom, &a.cod)
    }

    pub fn stats(&self) -> Stats {
        self.stats
    }

    pub fn reset_stats(&mut self) {
        self.stats = Stats::default();
    }

    fn needs_oracle(&self, f: NodeId) -> bool {
        let n = self.arena.node(f);
        self.arena.info(n.dom).generators || self.arena.info(n.cod).generators
    }

    /// Decides two parallel nodes of the arena.
    pub fn decide(&mut self, f: NodeId, g: NodeId) -> Verdict {
        self.check_parallel(f, g);
        if self.needs_oracle(f) {
            return Verdict::RequiresOracle;
        }
        let v = self.eq(f, g, false);
        self.verdict(v)
    }

    /// As [`Decider::decide`] without building witness terms.
    pub fn equal(&mut self, f: NodeId, g: NodeId) -> Option<bool> {
        self.check_parallel(f, g);
        if self.needs_oracle(f) {
            return None;
        }
        Some(self.eq(f, g, false).is_eq())
    }

    /// The bouncer step alone, for definite `f` and `g` where one is
    /// injection-shaped and the other projection-shaped.
    pub fn equivalent(&mut self, f: NodeId, g: NodeId) -> Verdict {
        self.check_parallel(f, g);
        debug_assert!(
            !self.arena.pointed(f) && !self.arena.copointed(f),
            "equivalent needs definite terms"
        );
        if self.needs_oracle(f) {
            return Verdict::RequiresOracle;
        }
        let v = match (self.arena.shape(f).clone(), self.arena.shape(g).clone()) {
            (Shape::Inj(j, p), Shape::Proj(i, q)) | (Shape::Proj(i, q), Shape::Inj(j, p)) => {
                self.bounce(f, j, p, i, q)
            }
            _ => panic!("equivalent needs one injection-shaped and one projection-shaped term"),
        };
        self.verdict(v)
    }

    fn check_parallel(&self, f: NodeId, g: NodeId) {
        let (a, b) = (self.arena.node(f), self.arena.node(g));
        assert!(
            a.dom == b.dom && a.cod == b.cod,
            "terms are not parallel: {} -> {} and {} -> {}",
            self.arena.dom(f),
            self.arena.cod(f),
            self.arena.dom(g),
            self.arena.cod(g)
        );
    }

    fn verdict(&self, v: V) -> Verdict {
        let t = |n: NodeId| self.arena.term(n);
        match v {
            V::Eq(W::Plain) => Verdict::Equal(None),
            V::Eq(W::Disconnect(n)) => Verdict::Equal(Some(Witness::Disconnect(t(n)))),
            V::Eq(W::SharedPoint(n)) => Verdict::Equal(Some(Witness::SharedPoint(t(n)))),
            V::Eq(W::SharedCopoint(n)) => Verdict::Equal(Some(Witness::SharedCopoint(t(n)))),
            V::Eq(W::Bouncer(n)) => Verdict::Equal(Some(Witness::Bouncer(t(n)))),
            V::Eq(W::Syntactic) => Verdict::Equal(Some(Witness::SyntacticRecursion)),
            V::Ne(r) => Verdict::NotEqual(r),
        }
    }

    fn eq(&mut self, f: NodeId, g: NodeId, memo: bool) -> V {
        self.stats.calls += 1;
        self.stats.steps += 1;
        if f == g {
            return V::Eq(W::Plain);
        }
        if memo {
            if let Some(&v) = self.memo.get(&(f, g)) {
                return v;
            }
        }
        let v = self.eq_uncached(f, g);
        if memo {
            if self.memo.len() >= self.memo_limit {
                self.memo.clear();
            }
            self.memo.insert((f, g), v);
        }
        v
    }

    fn restrict(&mut self, f: NodeId, k: Side, dom: bool) -> NodeId {
        let mut visits = 0;
        let r = if dom {
            self.arena.restrict_dom(f, k, &mut visits)
        } else {
            self.arena.restrict_cod(f, k, &mut visits)
        };
        self.stats.visits += visits;
        self.stats.steps += visits;
        r
    }

    fn eq_uncached(&mut self, f: NodeId, g: NodeId) -> V {
        let (dom, cod) = {
            let n = self.arena.node(f);
            (n.dom, n.cod)
        };
        let (di, ci) = (self.arena.info(dom), self.arena.info(cod));
        if di.initial || ci.terminal {
            let w = if self.arena.pointed(f) && self.arena.copointed(f) {
                let c = self.arena.copoint_of_id(dom).expect("copointed domain");
                W::Disconnect(self.arena.copoint_then_quest(c, cod))
            } else {
                W::Plain
            };
            return V::Eq(w);
        }
        let (dshape, cshape) = (di.shape, ci.shape);
        if let TyShape::Sum(..) = dshape {
            return self.components(f, g, true);
        }
        if let TyShape::Prod(..) = cshape {
            return self.components(f, g, false);
        }
        if let TyShape::One | TyShape::Gen = dshape {
            // Points: both must be injections.
            return self.same_corner(f, g);
        }
        if let TyShape::Zero | TyShape::Gen = cshape {
            // Copoints: both must be projections.
            return self.same_corner(f, g);
        }
        // A product mapping to a sum.
        let (fp, fc) = (self.arena.pointed(f), self.arena.copointed(f));
        let (gp, gc) = (self.arena.pointed(g), self.arena.copointed(g));
        if fp != gp {
            return V::Ne(Reason::PointMismatch);
        }
        if fc != gc {
            return V::Ne(Reason::CopointMismatch);
        }
        match (fp, fc) {
            (true, true) => {
                let c = self.arena.copoint_witness(f).expect("copointed");
                V::Eq(W::Disconnect(self.arena.copoint_then_quest(c, cod)))
            }
            (true, false) => {
                let (pf, pg) = (
                    self.arena.point_witness(f).expect("pointed"),
                    self.arena.point_witness(g).expect("pointed"),
                );
                match self.eq(pf, pg, true) {
                    V::Eq(_) => V::Eq(W::SharedPoint(pf)),
                    V::Ne(_) => V::Ne(Reason::PointMismatch),
                }
            }
            (false, true) => {
                let (cf, cg) = (
                    self.arena.copoint_witness(f).expect("copointed"),
                    self.arena.copoint_witness(g).expect("copointed"),
                );
                match self.eq(cf, cg, true) {
                    V::Eq(_) => V::Eq(W::SharedCopoint(cf)),
                    V::Ne(_) => V::Ne(Reason::CopointMismatch),
                }
            }
            (false, false) => match (self.arena.shape(f).clone(), self.arena.shape(g).clone()) {
                (Shape::Inj(j, p), Shape::Proj(i, q)) => self.bounce(f, j, p, i, q),
                (Shape::Proj(i, q), Shape::Inj(j, p)) => self.bounce(f, j, p, i, q),
                _ => self.same_corner(f, g),
            },
        }
    }

    fn components(&mut self, f: NodeId, g: NodeId, dom: bool) -> V {
        for k in Side::BOTH {
            let (fk, gk) = (self.restrict(f, k, dom), self.restrict(g, k, dom));
            if let V::Ne(_) = self.eq(fk, gk, true) {
                return V::Ne(Reason::Component(k.index()));
            }
        }
        V::Eq(W::Plain)
    }

    fn same_corner(&mut self, f: NodeId, g: NodeId) -> V {
        let (sf, sg) = (self.arena.shape(f).clone(), self.arena.shape(g).clone());
        match (sf, sg) {
            (Shape::Inj(j, p), Shape::Inj(k, q)) | (Shape::Proj(j, p), Shape::Proj(k, q)) => {
                if j != k {
                    return V::Ne(Reason::CornerMismatch);
                }
                match self.eq(p, q, true) {
                    V::Eq(_) => V::Eq(W::Syntactic),
                    ne => ne,
                }
            }
            (Shape::Gen(p), Shape::Gen(q)) if p == q => V::Eq(W::Syntactic),
            _ => V::Ne(Reason::CornerMismatch),
        }
    }

    /// `f = σ_j(p)` against `g = π_i(q)` at `X0 × X1 -> A0 + A1`.
    fn bounce(&mut self, f: NodeId, j: Side, p: NodeId, i: Side, q: NodeId) -> V {
        let (dom, cod) = {
            let n = self.arena.node(f);
            (n.dom, n.cod)
        };
        let (x, a) = (self.arena.prod_parts(dom), self.arena.sum_parts(cod));
        let (aj, aj_other) = (j.pick(a), j.other().pick(a));
        let (xi, xi_other) = (i.pick(x), i.other().pick(x));
        let monic = !self.arena.info(aj_other).pointed || self.arena.info(aj).pointed;
        let epic = !self.arena.info(xi_other).copointed || self.arena.info(xi).copointed;
        let mut visits = 0usize;
        if monic {
            match self.arena.factor_inj(q, j, &mut visits) {
                Some(h) => {
                    let ph = self.arena.mk(Shape::Proj(i, h), dom, aj);
                    self.count(visits);
                    self.lifted(ph, p, h)
                }
                None => {
                    self.count(visits);
                    V::Ne(Reason::LiftFailure)
                }
            }
        } else if epic {
            match self.arena.factor_proj(p, i, &mut visits) {
                Some(h) => {
                    let sh = self.arena.mk(Shape::Inj(j, h), xi, cod);
                    self.count(visits);
                    self.lifted(sh, q, h)
                }
                None => {
                    self.count(visits);
                    V::Ne(Reason::LiftFailure)
                }
            }
        } else {
            // Hom(X_i, A_j) is empty: X_i is pointed and A_j copointed.
            V::Ne(Reason::LiftFailure)
        }
    }

    fn lifted(&mut self, a: NodeId, b: NodeId, h: NodeId) -> V {
        match self.eq(a, b, true) {
            V::Eq(_) => V::Eq(W::Bouncer(h)),
            ne => ne,
        }
    }

    fn count(&mut self, visits: usize) {
        self.stats.visits += visits as u64;
        self.stats.steps += visits as u64;
    }
}

/// Decides whether two parallel arrows are equal.
pub fn equal(f: &Arrow, g: &Arrow) -> Verdict {
    decide_with_stats(f, g).0
}

/// As [`equal`], also reporting the work done.
pub fn decide_with_stats(f: &Arrow, g: &Arrow) -> (Verdict, Stats) {
    assert!(f.dom == g.dom && f.cod == g.cod, "terms are not parallel");
    let mut d = Decider::new();
    let (a, b) = (d.import(f), d.import(g));
    let v = d.decide(a, b);
    (v, d.stats())
}

/// The bouncer step for `f = σ_j(·)` against `g = π_i(·)` (either order).
pub fn equivalent(f: &Arrow, g: &Arrow) -> Verdict {
    let mut d = Decider::new();
    let (a, b) = (d.import(f), d.import(g));
    d.equivalent(a, b)
}
