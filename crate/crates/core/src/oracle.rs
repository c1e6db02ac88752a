//! Exhaustive ground truth: homset enumeration, equivalence classes under
//! the permuting conversions, and bouncer search in the diagram of
//! cardinals of a sum-product square.
//!
//! Everything here is exponential in the size of the types and guarded by
//! an explicit bound on the number of terms it may touch.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use rand::Rng;

use crate::error::OracleError;
use crate::graph::GeneratorGraph;
use crate::terms::{Side, Term};
use crate::types::{Name, Ty};

pub const DEFAULT_GUARD: u128 = 1_000_000;

/// An equivalence class of cut-free terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqClass {
    /// Sorted, without duplicates.
    pub members: Vec<Term>,
    /// The least member.
    pub canonical: Term,
}

impl EqClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.members.binary_search(t).is_ok()
    }
}

/// Classes of a whole homset, indexed like its enumeration.
#[derive(Debug, Clone)]
pub struct Partition {
    pub terms: Arc<Vec<Term>>,
    /// Class number of each term; classes are numbered by first member.
    pub class: Vec<u32>,
    pub classes: usize,
    index: HashMap<Term, u32>,
}

impl Partition {
    pub fn index_of(&self, t: &Term) -> Option<usize> {
        self.index.get(t).map(|&i| i as usize)
    }

    pub fn class_of(&self, t: &Term) -> Option<u32> {
        self.index_of(t).map(|i| self.class[i])
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.class[a] == self.class[b]
    }
}

/// A path in the diagram of cardinals. Consecutive terms are related by an
/// elementary pair `f = π_i(h)`, `σ_j(h) = g`, in one direction or the
/// other, and `bouncers[k]` is the `h` between `terms[k]` and `terms[k+1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CardinalPath {
    pub terms: Vec<Term>,
    pub bouncers: Vec<Term>,
}

impl CardinalPath {
    pub fn len(&self) -> usize {
        self.bouncers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bouncers.is_empty()
    }
}

/// Number of terms, largest size and largest height in a homset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Extremes {
    pub count: u128,
    pub max_size: u64,
    pub max_height: u64,
}

impl Extremes {
    fn merge(&mut self, o: Extremes) {
        if o.count == 0 {
            return;
        }
        self.count = self.count.saturating_add(o.count);
        self.max_size = self.max_size.max(o.max_size);
        self.max_height = self.max_height.max(o.max_height);
    }
}

type Key = (Ty, Ty);

/// A corner homset of a square and a class within it.
type Corner = (usize, u32);

/// The oracle over a fixed generator graph, caching homset enumerations.
#[derive(Debug, Clone)]
pub struct Oracle {
    graph: GeneratorGraph,
    guard: u128,
    counts: HashMap<Key, u128>,
    lists: HashMap<Key, Arc<Vec<Term>>>,
    extremes: HashMap<Key, Extremes>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(GeneratorGraph::empty())
    }
}

impl Oracle {
    pub fn new(graph: GeneratorGraph) -> Oracle {
        Oracle {
            graph,
            guard: DEFAULT_GUARD,
            counts: HashMap::new(),
            lists: HashMap::new(),
            extremes: HashMap::new(),
        }
    }

    pub fn with_guard(mut self, guard: u128) -> Oracle {
        self.guard = guard;
        self
    }

    pub fn guard(&self) -> u128 {
        self.guard
    }

    pub fn graph(&self) -> &GeneratorGraph {
        &self.graph
    }

    /// Drops cached enumerations.
    pub fn clear_cache(&mut self) {
        self.lists.clear();
    }

    fn paths(&self, x: &Ty, a: &Ty) -> Result<Vec<Vec<Name>>, OracleError> {
        match (x.as_gen(), a.as_gen()) {
            (Some(s), Some(t)) => {
                if !self.graph.is_acyclic() {
                    return Err(OracleError::CyclicGraph);
                }
                Ok(self.graph.paths(s, t, self.graph.nodes().len()))
            }
            _ => Ok(Vec::new()),
        }
    }

    /// Number of cut-free terms `x -> a`, saturating.
    pub fn count(&mut self, x: &Ty, a: &Ty) -> Result<u128, OracleError> {
        let key = (x.clone(), a.clone());
        if let Some(&c) = self.counts.get(&key) {
            return Ok(c);
        }
        let mut c: u128 = 0;
        if a.is_one() {
            c += 1;
        }
        if x.is_zero() {
            c += 1;
        }
        if let Some((x0, x1)) = x.as_prod() {
            c = c.saturating_add(self.count(x0, a)?).saturating_add(self.count(x1, a)?);
        }
        if let Some((a0, a1)) = a.as_sum() {
            c = c.saturating_add(self.count(x, a0)?).saturating_add(self.count(x, a1)?);
        }
        if let Some((a0, a1)) = a.as_prod() {
            c = c.saturating_add(self.count(x, a0)?.saturating_mul(self.count(x, a1)?));
        }
        if let Some((x0, x1)) = x.as_sum() {
            c = c.saturating_add(self.count(x0, a)?.saturating_mul(self.count(x1, a)?));
        }
        c = c.saturating_add(self.paths(x, a)?.len() as u128);
        self.counts.insert(key, c);
        Ok(c)
    }

    /// Count, largest size and largest height of the terms `x -> a`,
    /// without listing them.
    pub fn extremes(&mut self, x: &Ty, a: &Ty) -> Result<Extremes, OracleError> {
        let key = (x.clone(), a.clone());
        if let Some(&e) = self.extremes.get(&key) {
            return Ok(e);
        }
        let leaf = Extremes {
            count: 1,
            max_size: 1,
            max_height: 1,
        };
        let unary = |e: Extremes| Extremes {
            count: e.count,
            max_size: e.max_size + 1,
            max_height: e.max_height + 1,
        };
        let binary = |l: Extremes, r: Extremes| {
            if l.count == 0 || r.count == 0 {
                Extremes::default()
            } else {
                Extremes {
                    count: l.count.saturating_mul(r.count),
                    max_size: 1 + l.max_size + r.max_size,
                    max_height: 1 + l.max_height.max(r.max_height),
                }
            }
        };
        let mut e = Extremes::default();
        if a.is_one() {
            e.merge(leaf);
        }
        if x.is_zero() {
            e.merge(leaf);
        }
        if let Some((x0, x1)) = x.as_prod() {
            e.merge(unary(self.extremes(x0, a)?));
            e.merge(unary(self.extremes(x1, a)?));
        }
        if let Some((a0, a1)) = a.as_sum() {
            e.merge(unary(self.extremes(x, a0)?));
            e.merge(unary(self.extremes(x, a1)?));
        }
        if let Some((a0, a1)) = a.as_prod() {
            e.merge(binary(self.extremes(x, a0)?, self.extremes(x, a1)?));
        }
        if let Some((x0, x1)) = x.as_sum() {
            e.merge(binary(self.extremes(x0, a)?, self.extremes(x1, a)?));
        }
        for p in self.paths(x, a)? {
            e.merge(Extremes {
                count: 1,
                max_size: 1 + p.len() as u64,
                max_height: 1,
            });
        }
        self.extremes.insert(key, e);
        Ok(e)
    }

    fn check_guard(&mut self, x: &Ty, a: &Ty) -> Result<(), OracleError> {
        let n = self.count(x, a)?;
        if n > self.guard {
            return Err(OracleError::GuardExceeded {
                what: "homset size",
                reached: n,
                limit: self.guard,
            });
        }
        Ok(())
    }

    /// Every cut-free term `x -> a`, constructors ordered `!`, `?`, `π0`,
    /// `π1`, `σ0`, `σ1`, tuples, cotuples, generator paths.
    pub fn enumerate(&mut self, x: &Ty, a: &Ty) -> Result<Arc<Vec<Term>>, OracleError> {
        self.check_guard(x, a)?;
        self.list(x, a)
    }

    fn list(&mut self, x: &Ty, a: &Ty) -> Result<Arc<Vec<Term>>, OracleError> {
        let key = (x.clone(), a.clone());
        if let Some(l) = self.lists.get(&key) {
            return Ok(l.clone());
        }
        let mut out = Vec::new();
        if a.is_one() {
            out.push(Term::Bang);
        }
        if x.is_zero() {
            out.push(Term::Quest);
        }
        if let Some((x0, x1)) = x.as_prod() {
            for (i, xi) in [(Side::Left, x0), (Side::Right, x1)] {
                for t in self.list(xi, a)?.iter() {
                    out.push(Term::Proj(i, Arc::new(t.clone())));
                }
            }
        }
        if let Some((a0, a1)) = a.as_sum() {
            for (j, aj) in [(Side::Left, a0), (Side::Right, a1)] {
                for t in self.list(x, aj)?.iter() {
                    out.push(Term::Inj(j, Arc::new(t.clone())));
                }
            }
        }
        if let Some((a0, a1)) = a.as_prod() {
            let (l, r) = (self.list(x, a0)?, self.list(x, a1)?);
            for s in l.iter() {
                let s = Arc::new(s.clone());
                for t in r.iter() {
                    out.push(Term::Tuple(s.clone(), Arc::new(t.clone())));
                }
            }
        }
        if let Some((x0, x1)) = x.as_sum() {
            let (l, r) = (self.list(x0, a)?, self.list(x1, a)?);
            for s in l.iter() {
                let s = Arc::new(s.clone());
                for t in r.iter() {
                    out.push(Term::Cotuple(s.clone(), Arc::new(t.clone())));
                }
            }
        }
        for p in self.paths(x, a)? {
            out.push(Term::gen(p));
        }
        let out = Arc::new(out);
        self.lists.insert(key, out.clone());
        Ok(out)
    }

    /// The `idx`-th term of [`Oracle::enumerate`], without listing.
    pub fn nth(&mut self, x: &Ty, a: &Ty, mut idx: u128) -> Result<Option<Term>, OracleError> {
        if a.is_one() {
            if idx == 0 {
                return Ok(Some(Term::Bang));
            }
            idx -= 1;
        }
        if x.is_zero() {
            if idx == 0 {
                return Ok(Some(Term::Quest));
            }
            idx -= 1;
        }
        if let Some((x0, x1)) = x.as_prod() {
            for (i, xi) in [(Side::Left, x0), (Side::Right, x1)] {
                let n = self.count(xi, a)?;
                if idx < n {
                    return Ok(self.nth(xi, a, idx)?.map(|t| Term::proj(i, t)));
                }
                idx -= n;
            }
        }
        if let Some((a0, a1)) = a.as_sum() {
            for (j, aj) in [(Side::Left, a0), (Side::Right, a1)] {
                let n = self.count(x, aj)?;
                if idx < n {
                    return Ok(self.nth(x, aj, idx)?.map(|t| Term::inj(j, t)));
                }
                idx -= n;
            }
        }
        if let Some((a0, a1)) = a.as_prod() {
            let (n0, n1) = (self.count(x, a0)?, self.count(x, a1)?);
            let n = n0.saturating_mul(n1);
            if idx < n {
                let (l, r) = (self.nth(x, a0, idx / n1)?, self.nth(x, a1, idx % n1)?);
                return Ok(l.zip(r).map(|(l, r)| Term::tuple(l, r)));
            }
            idx -= n;
        }
        if let Some((x0, x1)) = x.as_sum() {
            let (n0, n1) = (self.count(x0, a)?, self.count(x1, a)?);
            let n = n0.saturating_mul(n1);
            if idx < n {
                let (l, r) = (self.nth(x0, a, idx / n1)?, self.nth(x1, a, idx % n1)?);
                return Ok(l.zip(r).map(|(l, r)| Term::cotuple(l, r)));
            }
            idx -= n;
        }
        let paths = self.paths(x, a)?;
        Ok(paths.into_iter().nth(idx as usize).map(Term::gen))
    }

    /// A uniformly random term `x -> a`, if the homset is inhabited.
    pub fn random_term<R: Rng>(&mut self, x: &Ty, a: &Ty, rng: &mut R) -> Result<Option<Term>, OracleError> {
        let n = self.count(x, a)?;
        if n == 0 {
            return Ok(None);
        }
        self.nth(x, a, rng.gen_range(0..n))
    }

    /// The equivalence class of `t : dom -> cod`.
    pub fn class_of(&self, t: &Term, dom: &Ty, cod: &Ty) -> Result<EqClass, OracleError> {
        let mut seen: HashSet<Term> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(t.clone());
        queue.push_back(t.clone());
        while let Some(u) = queue.pop_front() {
            for v in neighbors(&u, dom, cod) {
                if seen.insert(v.clone()) {
                    if seen.len() as u128 > self.guard {
                        return Err(self.class_guard(seen.len()));
                    }
                    queue.push_back(v);
                }
            }
        }
        let mut members: Vec<Term> = seen.into_iter().collect();
        members.sort();
        let canonical = members[0].clone();
        Ok(EqClass { members, canonical })
    }

    fn class_guard(&self, n: usize) -> OracleError {
        OracleError::GuardExceeded {
            what: "class size",
            reached: n as u128,
            limit: self.guard,
        }
    }

    /// Whether `f` and `g : dom -> cod` are in the same class; stops as soon
    /// as `g` is reached.
    pub fn same_class(&self, f: &Term, g: &Term, dom: &Ty, cod: &Ty) -> Result<bool, OracleError> {
        if f == g {
            return Ok(true);
        }
        let mut seen: HashSet<Term> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(f.clone());
        queue.push_back(f.clone());
        while let Some(u) = queue.pop_front() {
            for v in neighbors(&u, dom, cod) {
                if &v == g {
                    return Ok(true);
                }
                if seen.insert(v.clone()) {
                    if seen.len() as u128 > self.guard {
                        return Err(self.class_guard(seen.len()));
                    }
                    queue.push_back(v);
                }
            }
        }
        Ok(false)
    }

    /// Splits the homset `x -> a` into classes.
    pub fn partition(&mut self, x: &Ty, a: &Ty) -> Result<Partition, OracleError> {
        let terms = self.enumerate(x, a)?;
        let index: HashMap<Term, u32> = terms.iter().enumerate().map(|(i, t)| (t.clone(), i as u32)).collect();
        let mut parent: Vec<u32> = (0..terms.len() as u32).collect();
        fn find(p: &mut [u32], mut i: u32) -> u32 {
            while p[i as usize] != i {
                p[i as usize] = p[p[i as usize] as usize];
                i = p[i as usize];
            }
            i
        }
        for (i, t) in terms.iter().enumerate() {
            for v in neighbors(t, x, a) {
                let j = *index
                    .get(&v)
                    .unwrap_or_else(|| panic!("rewrite of {t} left the homset {x} -> {a}: {v}"));
                let (ri, rj) = (find(&mut parent, i as u32), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj) as usize] = ri.min(rj);
                }
            }
        }
        let mut number: HashMap<u32, u32> = HashMap::new();
        let mut class = Vec::with_capacity(terms.len());
        for i in 0..terms.len() as u32 {
            let r = find(&mut parent, i);
            let next = number.len() as u32;
            class.push(*number.entry(r).or_insert(next));
        }
        Ok(Partition {
            classes: number.len(),
            terms,
            class,
            index,
        })
    }

    /// A shortest path between two terms of a square `X0 × X1 -> A0 + A1`,
    /// each given as `σ_j(·)` or `π_i(·)`.
    pub fn cardinal_path(&mut self, f: &Term, g: &Term, dom: &Ty, cod: &Ty) -> Result<Option<CardinalPath>, OracleError> {
        let not_square = || OracleError::NotInSquare(format!("{dom} -> {cod}"));
        let (x0, x1) = dom.as_prod().ok_or_else(not_square)?;
        let (a0, a1) = cod.as_sum().ok_or_else(not_square)?;
        let (x, a) = ([x0.clone(), x1.clone()], [a0.clone(), a1.clone()]);
        // Corners 0, 1 hold Hom(X0 × X1, A_j); corners 2, 3 hold Hom(X_i, A0 + A1).
        let mut parts = Vec::new();
        for aj in &a {
            parts.push(self.partition(dom, aj)?);
        }
        for xi in &x {
            parts.push(self.partition(xi, cod)?);
        }
        let locate = |t: &Term| -> Result<(usize, u32), OracleError> {
            let (corner, body) = match t {
                Term::Inj(j, b) => (j.index(), b),
                Term::Proj(i, b) => (2 + i.index(), b),
                _ => return Err(OracleError::NotInSquare(t.to_string())),
            };
            let c = parts[corner]
                .class_of(body)
                .ok_or_else(|| OracleError::NotInSquare(t.to_string()))?;
            Ok((corner, c))
        };
        let (start, goal) = (locate(f)?, locate(g)?);
        let mut edges: HashMap<Corner, Vec<(Corner, Term)>> = HashMap::new();
        for i in Side::BOTH {
            for j in Side::BOTH {
                for h in self.enumerate(&x[i.index()], &a[j.index()])?.iter() {
                    let n = (j.index(), parts[j.index()].class_of(&Term::proj(i, h.clone())).expect("in homset"));
                    let w = (2 + i.index(), parts[2 + i.index()].class_of(&Term::inj(j, h.clone())).expect("in homset"));
                    edges.entry(n).or_default().push((w, h.clone()));
                    edges.entry(w).or_default().push((n, h.clone()));
                }
            }
        }
        let mut prev: HashMap<Corner, Option<(Corner, Term)>> = HashMap::new();
        prev.insert(start, None);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            if u == goal {
                break;
            }
            for (v, h) in edges.get(&u).into_iter().flatten() {
                if !prev.contains_key(v) {
                    prev.insert(*v, Some((u, h.clone())));
                    queue.push_back(*v);
                }
            }
        }
        if !prev.contains_key(&goal) {
            return Ok(None);
        }
        let rep = |(corner, class): (usize, u32)| {
            let p = &parts[corner];
            let body = p.terms[p.class.iter().position(|&c| c == class).expect("class has a member")].clone();
            if corner < 2 {
                Term::inj(Side::from_index(corner).expect("side"), body)
            } else {
                Term::proj(Side::from_index(corner - 2).expect("side"), body)
            }
        };
        let (mut terms, mut bouncers) = (vec![g.clone()], Vec::new());
        let mut at = goal;
        while let Some(Some((from, h))) = prev.get(&at) {
            bouncers.push(h.clone());
            terms.push(if *from == start { f.clone() } else { rep(*from) });
            at = *from;
        }
        terms.reverse();
        bouncers.reverse();
        Ok(Some(CardinalPath { terms, bouncers }))
    }

    /// Every `h : X_i -> A_j` with `π_i(h) ≡ f_side` in `X0 × X1 -> A_j`
    /// and `σ_j(h) ≡ g_side` in `X_i -> A0 + A1`.
    pub fn find_bouncers(
        &mut self,
        f_side: &Term,
        g_side: &Term,
        i: Side,
        j: Side,
        dom: &Ty,
        cod: &Ty,
    ) -> Result<Vec<Term>, OracleError> {
        let not_square = || OracleError::NotInSquare(format!("{dom} -> {cod}"));
        let xi = i.pick(dom.as_prod().ok_or_else(not_square)?).clone();
        let aj = j.pick(cod.as_sum().ok_or_else(not_square)?).clone();
        let f_class = self.class_of(f_side, dom, &aj)?;
        let g_class = self.class_of(g_side, &xi, cod)?;
        Ok(self
            .enumerate(&xi, &aj)?
            .iter()
            .filter(|h| {
                f_class.contains(&Term::proj(i, (*h).clone())) && g_class.contains(&Term::inj(j, (*h).clone()))
            })
            .cloned()
            .collect())
    }
}

/// Every term one equation away from `t : dom -> cod`, each equation used
/// in both directions at every position.
pub fn neighbors(t: &Term, dom: &Ty, cod: &Ty) -> Vec<Term> {
    let mut out = Vec::new();
    root_rewrites(t, dom, cod, &mut out);
    match t {
        Term::Proj(i, b) => {
            let xi = i.pick(dom.as_prod().expect("typed"));
            for v in neighbors(b, xi, cod) {
                out.push(Term::proj(*i, v));
            }
        }
        Term::Inj(j, b) => {
            let aj = j.pick(cod.as_sum().expect("typed"));
            for v in neighbors(b, dom, aj) {
                out.push(Term::inj(*j, v));
            }
        }
        Term::Tuple(l, r) => {
            let (a0, a1) = cod.as_prod().expect("typed");
            for v in neighbors(l, dom, a0) {
                out.push(Term::Tuple(Arc::new(v), r.clone()));
            }
            for v in neighbors(r, dom, a1) {
                out.push(Term::Tuple(l.clone(), Arc::new(v)));
            }
        }
        Term::Cotuple(l, r) => {
            let (x0, x1) = dom.as_sum().expect("typed");
            for v in neighbors(l, x0, cod) {
                out.push(Term::Cotuple(Arc::new(v), r.clone()));
            }
            for v in neighbors(r, x1, cod) {
                out.push(Term::Cotuple(l.clone(), Arc::new(v)));
            }
        }
        Term::Bang | Term::Quest | Term::Gen(_) => {}
    }
    out
}

fn root_rewrites(t: &Term, dom: &Ty, cod: &Ty, out: &mut Vec<Term>) {
    use Term::*;
    match t {
        Proj(i, b) => match &**b {
            Tuple(f, g) => out.push(Term::tuple(Proj(*i, f.clone()), Proj(*i, g.clone()))),
            Inj(j, f) => out.push(Term::inj(*j, Proj(*i, f.clone()))),
            Bang => out.push(Bang),
            _ => {}
        },
        Inj(j, b) => match &**b {
            Cotuple(f, g) => out.push(Term::cotuple(Inj(*j, f.clone()), Inj(*j, g.clone()))),
            Proj(i, f) => out.push(Term::proj(*i, Inj(*j, f.clone()))),
            Quest => out.push(Quest),
            _ => {}
        },
        Tuple(l, r) => match (&**l, &**r) {
            (Proj(i, f), Proj(k, g)) if i == k => out.push(Term::proj(*i, Tuple(f.clone(), g.clone()))),
            (Cotuple(a, c), Cotuple(b, d)) => out.push(Term::cotuple(
                Tuple(a.clone(), b.clone()),
                Tuple(c.clone(), d.clone()),
            )),
            (Quest, Quest) => out.push(Quest),
            _ => {}
        },
        Cotuple(l, r) => match (&**l, &**r) {
            (Inj(j, f), Inj(k, g)) if j == k => out.push(Term::inj(*j, Cotuple(f.clone(), g.clone()))),
            (Tuple(a, b), Tuple(c, d)) => out.push(Term::tuple(
                Cotuple(a.clone(), c.clone()),
                Cotuple(b.clone(), d.clone()),
            )),
            (Bang, Bang) => out.push(Bang),
            _ => {}
        },
        Bang => {
            if dom.as_prod().is_some() {
                out.push(Term::proj(Side::Left, Bang));
                out.push(Term::proj(Side::Right, Bang));
            }
            if dom.as_sum().is_some() {
                out.push(Term::cotuple(Bang, Bang));
            }
            if dom.is_zero() {
                out.push(Quest);
            }
        }
        Quest => {
            if cod.as_sum().is_some() {
                out.push(Term::inj(Side::Left, Quest));
                out.push(Term::inj(Side::Right, Quest));
            }
            if cod.as_prod().is_some() {
                out.push(Term::tuple(Quest, Quest));
            }
            if cod.is_one() {
                out.push(Bang);
            }
        }
        Gen(_) => {}
    }
}

/// Applies `steps` random single equations starting from `t`.
pub fn random_walk<R: Rng>(t: &Term, dom: &Ty, cod: &Ty, steps: usize, rng: &mut R) -> Term {
    let mut t = t.clone();
    for _ in 0..steps {
        let ns = neighbors(&t, dom, cod);
        if ns.is_empty() {
            break;
        }
        t = ns[rng.gen_range(0..ns.len())].clone();
    }
    t
}
