//! Factoring terms through a coproduct injection or a product projection.

use crate::annotate::{AnnotatedTerm, Arena, NodeId, Shape};
use crate::terms::Side;

const INJ: u8 = 0;
const PROJ: u8 = 2;

impl Arena {
    /// `f'` with `σ_j(f') ≡ f`, for `f : X -> A0 + A1`.
    pub fn factor_inj(&mut self, f: NodeId, j: Side, visits: &mut usize) -> Option<NodeId> {
        let key = (f, INJ + j.index() as u8);
        if let Some(&r) = self.factor_memo.get(&key) {
            *visits += 1;
            return r;
        }
        *visits += 1;
        let n = self.node(f).clone();
        let target = j.pick(self.sum_parts(n.cod));
        let r = match n.shape {
            Shape::Inj(k, b) if k == j => Some(b),
            Shape::Quest => Some(self.mk(Shape::Quest, n.dom, target)),
            _ if n.copointed => {
                let c = self.copoint_witness(f).expect("copointed");
                Some(self.copoint_then_quest(c, target))
            }
            Shape::Inj(..) => None,
            Shape::Cotuple(a, b) => match self.factor_inj(a, j, visits) {
                Some(fa) => self
                    .factor_inj(b, j, visits)
                    .map(|fb| self.mk(Shape::Cotuple(fa, fb), n.dom, target)),
                None => None,
            },
            Shape::Proj(i, b) => self
                .factor_inj(b, j, visits)
                .map(|fb| self.mk(Shape::Proj(i, fb), n.dom, target)),
            _ => unreachable!("no other constructor has a sum codomain"),
        };
        self.factor_memo.insert(key, r);
        r
    }

    /// `f'` with `π_i(f') ≡ f`, for `f : X0 × X1 -> A`.
    pub fn factor_proj(&mut self, f: NodeId, i: Side, visits: &mut usize) -> Option<NodeId> {
        let key = (f, PROJ + i.index() as u8);
        if let Some(&r) = self.factor_memo.get(&key) {
            *visits += 1;
            return r;
        }
        *visits += 1;
        let n = self.node(f).clone();
        let source = i.pick(self.prod_parts(n.dom));
        let r = match n.shape {
            Shape::Proj(k, b) if k == i => Some(b),
            Shape::Bang => Some(self.mk(Shape::Bang, source, n.cod)),
            _ if n.pointed => {
                let p = self.point_witness(f).expect("pointed");
                Some(self.bang_then_point(p, source))
            }
            Shape::Proj(..) => None,
            Shape::Tuple(a, b) => match self.factor_proj(a, i, visits) {
                Some(fa) => self
                    .factor_proj(b, i, visits)
                    .map(|fb| self.mk(Shape::Tuple(fa, fb), source, n.cod)),
                None => None,
            },
            Shape::Inj(j, b) => self
                .factor_proj(b, i, visits)
                .map(|fb| self.mk(Shape::Inj(j, fb), source, n.cod)),
            _ => unreachable!("no other constructor has a product domain"),
        };
        self.factor_memo.insert(key, r);
        r
    }
}

/// Outcome of a factorization, with the number of nodes visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factored {
    pub node: Option<NodeId>,
    pub visits: usize,
}

/// Factors `f : X -> A0 + A1` through `σ_j`; the result lives in `f.arena`.
pub fn factor_inj(f: &mut AnnotatedTerm, j: Side) -> Factored {
    assert!(f.cod().as_sum().is_some(), "factor_inj needs a sum codomain");
    let mut visits = 0;
    let node = f.arena.factor_inj(f.root, j, &mut visits);
    Factored { node, visits }
}

/// Factors `f : X0 × X1 -> A` through `π_i`; the result lives in `f.arena`.
pub fn factor_proj(f: &mut AnnotatedTerm, i: Side) -> Factored {
    assert!(f.dom().as_prod().is_some(), "factor_proj needs a product domain");
    let mut visits = 0;
    let node = f.arena.factor_proj(f.root, i, &mut visits);
    Factored { node, visits }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annotate::annotate;
    use crate::syntax::{parse_term, parse_type};
    use crate::terms::Term;

    fn at(t: &str, dom: &str, cod: &str) -> AnnotatedTerm {
        annotate(&parse_term(t).unwrap(), &parse_type(dom).unwrap(), &parse_type(cod).unwrap())
    }

    fn inj(t: &str, dom: &str, cod: &str, j: Side) -> Option<Term> {
        let mut a = at(t, dom, cod);
        let r = factor_inj(&mut a, j);
        r.node.map(|n| a.arena.term(n))
    }

    fn proj(t: &str, dom: &str, cod: &str, i: Side) -> Option<Term> {
        let mut a = at(t, dom, cod);
        let r = factor_proj(&mut a, i);
        r.node.map(|n| a.arena.term(n))
    }

    fn term(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    #[test]
    fn injection_examples() {
        assert_eq!(inj("s0 <!, !>", "1", "(1*1)+0", Side::Left), Some(term("<!, !>")));
        assert_eq!(inj("p0 s0 ?", "0*1", "0+0", Side::Right), Some(term("p0 ?")));
        assert_eq!(inj("s1 !", "1", "0+1", Side::Left), None);
    }

    #[test]
    fn projection_examples() {
        assert_eq!(proj("p1 s0 !", "1*1", "1+0", Side::Right), Some(term("s0 !")));
        assert_eq!(proj("s0 p0 !", "1*1", "1+0", Side::Left), Some(term("s0 !")));
        assert_eq!(proj("p0 ?", "0*0", "0", Side::Right), None);
    }

    #[test]
    fn cotuples_factor_branchwise() {
        assert_eq!(
            inj("{s0 !, p0 s0 !}", "1+(1*1)", "1+1", Side::Left),
            Some(term("{!, p0 !}"))
        );
        assert_eq!(inj("{s0 !, s1 !}", "1+1", "1+1", Side::Left), None);
    }

    #[test]
    fn factoring_maintains_annotations() {
        let mut a = at("{p0 s0 ?, s0 !}", "(0*1)+1", "1+0");
        let r = factor_inj(&mut a, Side::Left).node.unwrap();
        let fresh = annotate(&a.arena.term(r), a.arena.dom(r), a.arena.cod(r));
        assert_eq!(fresh.annotation(), a.arena.annotation(r));
    }

    #[test]
    fn visits_are_linear() {
        let t = "{p0 s1 <!, !>, p1 s1 <!, !>}";
        let mut a = at(t, "((1*1)*1)+(1*(1*1))", "0+(1*1)");
        let size = term(t).size() as usize;
        let r = factor_inj(&mut a, Side::Right);
        assert!(r.node.is_some());
        assert!(r.visits <= 2 * size);
    }
}
