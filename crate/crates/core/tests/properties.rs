use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sigmapi::annotate::annotate;
use sigmapi::compose::{compose, identity};
use sigmapi::decide::{equal, Verdict};
use sigmapi::factor::{factor_inj, factor_proj};
use sigmapi::oracle::{random_walk, Oracle};
use sigmapi::terms::{Arrow, Side, Term};
use sigmapi::types::{types_up_to, Ty};

const MAX_TYPE: u64 = 7;

struct Gen {
    rng: ChaCha8Rng,
    oracle: Oracle,
    types: Vec<Ty>,
}

impl Gen {
    fn new(seed: u64) -> Gen {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            oracle: Oracle::default(),
            types: types_up_to(MAX_TYPE),
        }
    }

    fn ty(&mut self) -> Ty {
        self.types.choose(&mut self.rng).unwrap().clone()
    }

    fn term(&mut self, x: &Ty, a: &Ty) -> Option<Term> {
        self.oracle.random_term(x, a, &mut self.rng).unwrap()
    }

    /// A random inhabited homset and a term in it.
    fn arrow(&mut self) -> (Ty, Ty, Term) {
        loop {
            let (x, a) = (self.ty(), self.ty());
            if let Some(t) = self.term(&x, &a) {
                return (x, a, t);
            }
        }
    }

    fn walk(&mut self, t: &Term, x: &Ty, a: &Ty) -> Term {
        let steps = self.rng.gen_range(1..30);
        random_walk(t, x, a, steps, &mut self.rng)
    }
}

fn same(f: &Term, g: &Term, x: &Ty, a: &Ty) -> bool {
    let v = equal(
        &Arrow::trusted(f.clone(), x.clone(), a.clone()),
        &Arrow::trusted(g.clone(), x.clone(), a.clone()),
    );
    assert_ne!(v, Verdict::RequiresOracle);
    v.is_equal()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rewriting_preserves_equality(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let (x, a, f) = g.arrow();
        let h = g.walk(&f, &x, &a);
        prop_assert!(same(&f, &h, &x, &a), "{} vs {} : {} -> {}", f, h, x, a);
        prop_assert!(same(&f, &f, &x, &a));
    }

    #[test]
    fn equality_is_symmetric_and_transitive(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let (x, a, f) = g.arrow();
        let h = g.term(&x, &a).unwrap();
        let k = g.walk(&h, &x, &a);
        prop_assert_eq!(same(&f, &h, &x, &a), same(&h, &f, &x, &a));
        prop_assert_eq!(same(&f, &h, &x, &a), same(&f, &k, &x, &a));
    }

    #[test]
    fn equality_is_a_congruence(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let (x, a, f) = g.arrow();
        let f2 = if g.rng.gen_bool(0.5) { g.walk(&f, &x, &a) } else { g.term(&x, &a).unwrap() };
        let eq = same(&f, &f2, &x, &a);
        let other = g.ty();
        for j in Side::BOTH {
            let cod = match j {
                Side::Left => Ty::sum(a.clone(), other.clone()),
                Side::Right => Ty::sum(other.clone(), a.clone()),
            };
            let (l, r) = (Term::inj(j, f.clone()), Term::inj(j, f2.clone()));
            if eq {
                prop_assert!(same(&l, &r, &x, &cod));
            }
        }
        for i in Side::BOTH {
            let dom = match i {
                Side::Left => Ty::prod(x.clone(), other.clone()),
                Side::Right => Ty::prod(other.clone(), x.clone()),
            };
            if eq {
                prop_assert!(same(&Term::proj(i, f.clone()), &Term::proj(i, f2.clone()), &dom, &a));
            }
        }
        if let Some(k) = g.term(&x, &other) {
            let cod = Ty::prod(a.clone(), other.clone());
            let (l, r) = (Term::tuple(f.clone(), k.clone()), Term::tuple(f2.clone(), k));
            prop_assert_eq!(same(&l, &r, &x, &cod), eq);
        }
        if let Some(k) = g.term(&other, &a) {
            let dom = Ty::sum(x.clone(), other.clone());
            let (l, r) = (Term::cotuple(f.clone(), k.clone()), Term::cotuple(f2.clone(), k));
            prop_assert_eq!(same(&l, &r, &dom, &a), eq);
        }
        let next = g.ty();
        if let Some(k) = g.term(&a, &next) {
            if eq {
                let (l, r) = (compose(&f, &k).unwrap(), compose(&f2, &k).unwrap());
                prop_assert!(same(&l, &r, &x, &next));
            }
        }
    }

    #[test]
    fn composition_is_associative_and_unital(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let (x, y, f) = g.arrow();
        prop_assert!(same(&compose(&identity(&x), &f).unwrap(), &f, &x, &y));
        prop_assert!(same(&compose(&f, &identity(&y)).unwrap(), &f, &x, &y));
        let z = g.ty();
        let w = g.ty();
        if let (Some(h1), Some(h2)) = (g.term(&y, &z), g.term(&z, &w)) {
            let left = compose(&compose(&f, &h1).unwrap(), &h2).unwrap();
            let right = compose(&f, &compose(&h1, &h2).unwrap()).unwrap();
            prop_assert!(same(&left, &right, &x, &w), "({} ; {}) ; {}", f, h1, h2);
        }
    }

    #[test]
    fn annotation_witnesses_rebuild_the_term(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let (x, a, t) = g.arrow();
        let at = annotate(&t, &x, &a);
        prop_assert_eq!(at.visits as u64, t.size());
        let ann = at.annotation();
        prop_assert_eq!(ann.pointed, ann.point_witness.is_some());
        prop_assert_eq!(ann.copointed, ann.copoint_witness.is_some());
        if let Some(p) = &ann.point_witness {
            prop_assert!(same(&compose(&Term::Bang, p).unwrap(), &t, &x, &a));
        }
        if let Some(c) = &ann.copoint_witness {
            prop_assert!(same(&compose(c, &Term::Quest).unwrap(), &t, &x, &a));
        }
        for n in at.nodes() {
            let fresh = annotate(&n.term, &n.dom, &n.cod).annotation();
            prop_assert_eq!(fresh, n.annotation);
        }
    }

    #[test]
    fn factorizations_are_sound_and_find_injections(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let (x, a, t) = g.arrow();
        if let Some((a0, a1)) = a.as_sum() {
            for j in Side::BOTH {
                let mut at = annotate(&t, &x, &a);
                let r = factor_inj(&mut at, j);
                prop_assert!(r.visits as u64 <= 2 * t.size());
                if let Some(h) = r.node {
                    let h = at.arena.term(h);
                    prop_assert!(same(&Term::inj(j, h), &t, &x, &a));
                }
                let aj = j.pick((a0, a1));
                if let Some(h) = g.term(&x, aj) {
                    let disguised = g.walk(&Term::inj(j, h), &x, &a);
                    let mut at = annotate(&disguised, &x, &a);
                    prop_assert!(factor_inj(&mut at, j).node.is_some(), "{} through s{}", disguised, j.index());
                }
            }
        }
        if let Some((x0, x1)) = x.as_prod() {
            for i in Side::BOTH {
                let mut at = annotate(&t, &x, &a);
                let r = factor_proj(&mut at, i);
                prop_assert!(r.visits as u64 <= 2 * t.size());
                if let Some(h) = r.node {
                    let h = at.arena.term(h);
                    prop_assert!(same(&Term::proj(i, h), &t, &x, &a));
                }
                let xi = i.pick((x0, x1));
                if let Some(h) = g.term(xi, &a) {
                    let disguised = g.walk(&Term::proj(i, h), &x, &a);
                    let mut at = annotate(&disguised, &x, &a);
                    prop_assert!(factor_proj(&mut at, i).node.is_some(), "{} through p{}", disguised, i.index());
                }
            }
        }
    }
}
