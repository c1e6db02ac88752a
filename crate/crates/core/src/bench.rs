//! A family of balanced types and term pairs for measuring the decision
//! procedure.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::compose::identity;
use crate::decide::{decide_with_stats, Verdict};
use crate::oracle::random_walk;
use crate::terms::{Arrow, Side, Term};
use crate::types::Ty;

/// The full binary type of the given height whose operators alternate
/// between sums (just above the leaves) and products, with leaves
/// `1 1 0 0 1 1 0 0 ...` from left to right.
pub fn balanced_type(height: u32) -> Ty {
    fn go(h: u32, depth_from_leaves: u32, next_leaf: &mut u32) -> Ty {
        if h == 1 {
            let k = *next_leaf;
            *next_leaf += 1;
            return if (k / 2) % 2 == 0 { Ty::one() } else { Ty::zero() };
        }
        let l = go(h - 1, depth_from_leaves - 1, next_leaf);
        let r = go(h - 1, depth_from_leaves - 1, next_leaf);
        if depth_from_leaves % 2 == 1 {
            Ty::sum(l, r)
        } else {
            Ty::prod(l, r)
        }
    }
    assert!(height >= 1, "heights start at 1");
    go(height, height - 1, &mut 0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchCase {
    pub height: u32,
    pub label: &'static str,
    pub left: Arrow,
    pub right: Arrow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub height: u32,
    pub label: &'static str,
    pub size_x: u64,
    pub size_a: u64,
    pub steps: u64,
    pub micros: u128,
    pub verdict: Verdict,
}

pub const CSV_HEADER: &str = "height,size_X,size_A,steps,micros";

impl BenchRow {
    pub fn csv(&self) -> String {
        format!("{},{},{},{},{}", self.height, self.size_x, self.size_a, self.steps, self.micros)
    }
}

/// The identity twisted on its leftmost `1 + 1` component.
fn twist(t: &Term) -> Option<Term> {
    let swap = Term::cotuple(Term::inj(Side::Right, Term::Bang), Term::inj(Side::Left, Term::Bang));
    let straight = Term::cotuple(Term::inj(Side::Left, Term::Bang), Term::inj(Side::Right, Term::Bang));
    if *t == straight {
        return Some(swap);
    }
    match t {
        Term::Proj(i, b) => twist(b).map(|b| Term::proj(*i, b)),
        Term::Inj(j, b) => twist(b).map(|b| Term::inj(*j, b)),
        Term::Tuple(a, b) => match twist(a) {
            Some(a) => Some(Term::Tuple(a.into(), b.clone())),
            None => twist(b).map(|b| Term::Tuple(a.clone(), b.into())),
        },
        Term::Cotuple(a, b) => match twist(a) {
            Some(a) => Some(Term::Cotuple(a.into(), b.clone())),
            None => twist(b).map(|b| Term::Cotuple(a.clone(), b.into())),
        },
        _ => None,
    }
}

/// For each height, the identity against a seeded random rewriting of
/// itself, and against a twisted identity.
pub fn cases(min_height: u32, max_height: u32, seed: u64) -> Vec<BenchCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for h in min_height..=max_height {
        let t = balanced_type(h);
        let id = identity(&t);
        let walked = random_walk(&id, &t, &t, t.size() as usize, &mut rng);
        let arrow = |term: Term| Arrow::trusted(term, t.clone(), t.clone());
        out.push(BenchCase {
            height: h,
            label: "rewritten",
            left: arrow(id.clone()),
            right: arrow(walked),
        });
        if let Some(tw) = twist(&id) {
            out.push(BenchCase {
                height: h,
                label: "twisted",
                left: arrow(id.clone()),
                right: arrow(tw),
            });
        }
    }
    out
}

pub fn run(case: &BenchCase) -> BenchRow {
    let start = Instant::now();
    let (verdict, stats) = decide_with_stats(&case.left, &case.right);
    let micros = start.elapsed().as_micros();
    BenchRow {
        height: case.height,
        label: case.label,
        size_x: case.left.dom.size(),
        size_a: case.left.cod.size(),
        steps: stats.steps,
        micros,
        verdict,
    }
}
