//! Composition by cut elimination.

use crate::error::ComposeError;
use crate::terms::{RawTerm, Side, Term};
use crate::types::{Ty, TyKind};

/// The cut-free composite `f ; g` (first `f`, then `g`).
///
/// Principal cuts fire first, then commutations on the right, then on the
/// left. `? ; g` and `f ; !` short-circuit everything.
pub fn compose(f: &Term, g: &Term) -> Result<Term, ComposeError> {
    use Term::*;
    match (f, g) {
        (Quest, _) => Ok(Quest),
        (_, Bang) => Ok(Bang),
        (Tuple(f0, f1), Proj(i, g)) => compose(i.pick((f0, f1)), g),
        (Inj(j, f), Cotuple(g0, g1)) => compose(f, j.pick((g0, g1))),
        (Gen(p), Gen(q)) => Ok(Term::gen(p.iter().chain(q.iter()).cloned())),
        (_, Inj(j, g)) => Ok(Term::inj(*j, compose(f, g)?)),
        (_, Tuple(g0, g1)) => Ok(Term::tuple(compose(f, g0)?, compose(f, g1)?)),
        (Proj(i, f), _) => Ok(Term::proj(*i, compose(f, g)?)),
        (Cotuple(f0, f1), _) => Ok(Term::cotuple(compose(f0, g)?, compose(f1, g)?)),
        _ => Err(ComposeError::Mismatch {
            left: f.to_string(),
            right: g.to_string(),
        }),
    }
}

/// Eliminates every identity and cut from a well-typed raw term.
pub fn eliminate(r: &RawTerm) -> Result<Term, ComposeError> {
    Ok(match r {
        RawTerm::Bang => Term::Bang,
        RawTerm::Quest => Term::Quest,
        RawTerm::Proj(i, b) => Term::proj(*i, eliminate(b)?),
        RawTerm::Inj(j, b) => Term::inj(*j, eliminate(b)?),
        RawTerm::Tuple(a, b) => Term::tuple(eliminate(a)?, eliminate(b)?),
        RawTerm::Cotuple(a, b) => Term::cotuple(eliminate(a)?, eliminate(b)?),
        RawTerm::Gen(p) => Term::gen(p.iter().cloned()),
        RawTerm::Id(t) => identity(t),
        RawTerm::Cut(l, r) => match (&**l, &**r) {
            (RawTerm::Id(_), r) => eliminate(r)?,
            (l, RawTerm::Id(_)) => eliminate(l)?,
            (l, r) => compose(&eliminate(l)?, &eliminate(r)?)?,
        },
    })
}

/// The η-expanded identity, with `σ_j(?)` read as `?` and `π_i(!)` as `!`.
pub fn identity(t: &Ty) -> Term {
    match t.kind() {
        TyKind::Zero => Term::Quest,
        TyKind::One => Term::Bang,
        TyKind::Gen(_) => Term::gen(std::iter::empty::<&str>()),
        TyKind::Sum(a, b) => {
            let side = |j: Side, t: &Ty| match identity(t) {
                Term::Quest => Term::Quest,
                body => Term::inj(j, body),
            };
            Term::cotuple(side(Side::Left, a), side(Side::Right, b))
        }
        TyKind::Prod(a, b) => {
            let side = |i: Side, t: &Ty| match identity(t) {
                Term::Bang => Term::Bang,
                body => Term::proj(i, body),
            };
            Term::tuple(side(Side::Left, a), side(Side::Right, b))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GeneratorGraph;
    use crate::syntax::{parse_raw, parse_term, parse_type};
    use crate::terms::{check, check_raw};

    fn elim(s: &str) -> Term {
        eliminate(&parse_raw(s).unwrap()).unwrap()
    }

    #[test]
    fn beta_laws() {
        assert_eq!(elim("<p0 ?, !> ; p1 id:1"), Term::Bang);
        assert_eq!(elim("<p0 ?, s1 !> ; p1 {?, s0 !}"), parse_term("s0 !").unwrap());
        assert_eq!(elim("s0 ! ; {s1 !, ?}"), parse_term("s1 !").unwrap());
    }

    #[test]
    fn commutes_past_injections() {
        assert_eq!(elim("p0 ? ; s0 id:0"), parse_term("s0 p0 ?").unwrap());
    }

    #[test]
    fn identities() {
        assert_eq!(identity(&parse_type("1").unwrap()), Term::Bang);
        assert_eq!(identity(&parse_type("0+1").unwrap()), parse_term("{?, s1 !}").unwrap());
        assert_eq!(identity(&parse_type("x").unwrap()), parse_term("@[]").unwrap());
        assert_eq!(
            identity(&parse_type("(1+1)*0").unwrap()),
            parse_term("<p0 {s0 !, s1 !}, p1 ?>").unwrap()
        );
    }

    #[test]
    fn generator_paths_concatenate() {
        let mut g = GeneratorGraph::empty();
        for n in ["x", "y", "z"] {
            g.add_node(n).unwrap();
        }
        g.add_edge("k", "x", "y").unwrap();
        g.add_edge("l", "y", "z").unwrap();
        let (x, z) = (parse_type("x").unwrap(), parse_type("z").unwrap());
        let raw = parse_raw("@k ; id:y ; @l").unwrap();
        assert!(check_raw(&raw, &x, &z, &g).is_ok());
        let t = elim("@k ; id:y ; @l");
        assert_eq!(t, parse_term("@[k, l]").unwrap());
        assert!(check(&t, &x, &z, &g).is_ok());
    }

    #[test]
    fn mismatched_shapes_are_reported() {
        assert!(compose(&Term::Bang, &Term::Quest).is_err());
    }
}
