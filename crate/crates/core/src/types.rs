//! Objects of the free category: `0`, `1`, generators, binary sums and
//! binary products.
//!
//! A [`Ty`] is an immutable, reference-counted tree. Every node caches its
//! size, height, structural hash and the pointed/copointed predicates, so
//! all of those lookups are constant time once a type has been built.

use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

/// Name of a generator object or generator edge.
pub type Name = Arc<str>;

/// An object of the free category.
#[derive(Clone)]
pub struct Ty(Arc<TyNode>);

struct TyNode {
    kind: TyKind,
    size: u32,
    height: u32,
    pointed: bool,
    copointed: bool,
    initial: bool,
    terminal: bool,
    generators: bool,
    hash: u64,
}

/// The outermost constructor of a type.
#[derive(Clone, PartialEq, Eq)]
pub enum TyKind {
    Zero,
    One,
    Gen(Name),
    Sum(Ty, Ty),
    Prod(Ty, Ty),
}

/// Size and height of a type or a term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeMetrics {
    pub size: u64,
    pub height: u64,
}

impl Ty {
    fn build(kind: TyKind) -> Ty {
        let mut h = DefaultHasher::new();
        let node = match &kind {
            TyKind::Zero => {
                0u8.hash(&mut h);
                TyNode::leaf(kind.clone(), false, true, true, false, false)
            }
            TyKind::One => {
                1u8.hash(&mut h);
                TyNode::leaf(kind.clone(), true, false, false, true, false)
            }
            TyKind::Gen(name) => {
                2u8.hash(&mut h);
                name.hash(&mut h);
                TyNode::leaf(kind.clone(), false, false, false, false, true)
            }
            TyKind::Sum(a, b) => {
                3u8.hash(&mut h);
                a.0.hash.hash(&mut h);
                b.0.hash.hash(&mut h);
                TyNode {
                    kind: kind.clone(),
                    size: 1 + a.0.size + b.0.size,
                    height: 1 + a.0.height.max(b.0.height),
                    pointed: a.0.pointed || b.0.pointed,
                    copointed: a.0.copointed && b.0.copointed,
                    initial: a.0.initial && b.0.initial,
                    terminal: (a.0.terminal && b.0.initial) || (a.0.initial && b.0.terminal),
                    generators: a.0.generators || b.0.generators,
                    hash: 0,
                }
            }
            TyKind::Prod(a, b) => {
                4u8.hash(&mut h);
                a.0.hash.hash(&mut h);
                b.0.hash.hash(&mut h);
                TyNode {
                    kind: kind.clone(),
                    size: 1 + a.0.size + b.0.size,
                    height: 1 + a.0.height.max(b.0.height),
                    pointed: a.0.pointed && b.0.pointed,
                    copointed: a.0.copointed || b.0.copointed,
                    initial: (a.0.initial && b.0.terminal) || (a.0.terminal && b.0.initial),
                    terminal: a.0.terminal && b.0.terminal,
                    generators: a.0.generators || b.0.generators,
                    hash: 0,
                }
            }
        };
        Ty(Arc::new(TyNode {
            hash: h.finish(),
            ..node
        }))
    }

    pub fn zero() -> Ty {
        Ty::build(TyKind::Zero)
    }

    pub fn one() -> Ty {
        Ty::build(TyKind::One)
    }

    pub fn gen(name: impl Into<Name>) -> Ty {
        Ty::build(TyKind::Gen(name.into()))
    }

    pub fn sum(a: Ty, b: Ty) -> Ty {
        Ty::build(TyKind::Sum(a, b))
    }

    pub fn prod(a: Ty, b: Ty) -> Ty {
        Ty::build(TyKind::Prod(a, b))
    }

    pub fn kind(&self) -> &TyKind {
        &self.0.kind
    }

    pub fn metrics(&self) -> TypeMetrics {
        TypeMetrics {
            size: self.0.size as u64,
            height: self.0.height as u64,
        }
    }

    pub fn size(&self) -> u64 {
        self.0.size as u64
    }

    pub fn height(&self) -> u64 {
        self.0.height as u64
    }

    /// `Hom(1, self)` is inhabited.
    pub fn is_pointed(&self) -> bool {
        self.0.pointed
    }

    /// `Hom(self, 0)` is inhabited.
    pub fn is_copointed(&self) -> bool {
        self.0.copointed
    }

    /// Isomorphic to `0` by the unit laws `A + 0 = A` and `A * 1 = A`.
    pub fn is_initial(&self) -> bool {
        self.0.initial
    }

    /// Isomorphic to `1` by the unit laws.
    pub fn is_terminal(&self) -> bool {
        self.0.terminal
    }

    pub fn has_generators(&self) -> bool {
        self.0.generators
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.kind(), TyKind::Zero)
    }

    pub fn is_one(&self) -> bool {
        matches!(self.kind(), TyKind::One)
    }

    /// Components of a sum.
    pub fn as_sum(&self) -> Option<(&Ty, &Ty)> {
        match self.kind() {
            TyKind::Sum(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// Components of a product.
    pub fn as_prod(&self) -> Option<(&Ty, &Ty)> {
        match self.kind() {
            TyKind::Prod(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_gen(&self) -> Option<&Name> {
        match self.kind() {
            TyKind::Gen(n) => Some(n),
            _ => None,
        }
    }

    /// Every generator name occurring in the type, left to right.
    pub fn generators(&self) -> Vec<Name> {
        fn go(t: &Ty, out: &mut Vec<Name>) {
            match t.kind() {
                TyKind::Zero | TyKind::One => {}
                TyKind::Gen(n) => out.push(n.clone()),
                TyKind::Sum(a, b) | TyKind::Prod(a, b) => {
                    go(a, out);
                    go(b, out);
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    fn rank(&self) -> u8 {
        match self.kind() {
            TyKind::Zero => 0,
            TyKind::One => 1,
            TyKind::Gen(_) => 2,
            TyKind::Sum(..) => 3,
            TyKind::Prod(..) => 4,
        }
    }
}

impl TyNode {
    fn leaf(
        kind: TyKind,
        pointed: bool,
        copointed: bool,
        initial: bool,
        terminal: bool,
        generators: bool,
    ) -> TyNode {
        TyNode {
            kind,
            size: 1,
            height: 1,
            pointed,
            copointed,
            initial,
            terminal,
            generators,
            hash: 0,
        }
    }
}

impl PartialEq for Ty {
    fn eq(&self, other: &Ty) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.hash == other.0.hash
                && self.0.size == other.0.size
                && self.0.kind == other.0.kind)
    }
}

impl Eq for Ty {}

impl Hash for Ty {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

impl Ord for Ty {
    fn cmp(&self, other: &Ty) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        match (self.kind(), other.kind()) {
            (TyKind::Gen(a), TyKind::Gen(b)) => a.cmp(b),
            (TyKind::Sum(a, b), TyKind::Sum(c, d)) | (TyKind::Prod(a, b), TyKind::Prod(c, d)) => {
                a.cmp(c).then_with(|| b.cmp(d))
            }
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Ty {
    fn partial_cmp(&self, other: &Ty) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Precedence: `*` binds tighter than `+`, both associate to the right.
impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            TyKind::Zero => f.write_str("0"),
            TyKind::One => f.write_str("1"),
            TyKind::Gen(n) => f.write_str(n),
            TyKind::Sum(a, b) => {
                if a.as_sum().is_some() {
                    write!(f, "({a}) + {b}")
                } else {
                    write!(f, "{a} + {b}")
                }
            }
            TyKind::Prod(a, b) => {
                let wrap = |t: &Ty| matches!(t.kind(), TyKind::Sum(..) | TyKind::Prod(..));
                let wrap_right = |t: &Ty| matches!(t.kind(), TyKind::Sum(..));
                match (wrap(a), wrap_right(b)) {
                    (false, false) => write!(f, "{a} * {b}"),
                    (true, false) => write!(f, "({a}) * {b}"),
                    (false, true) => write!(f, "{a} * ({b})"),
                    (true, true) => write!(f, "({a}) * ({b})"),
                }
            }
        }
    }
}

impl fmt::Debug for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ty({self})")
    }
}

/// Size and height, with generators counting as leaves.
pub fn metrics(t: &Ty) -> TypeMetrics {
    t.metrics()
}

/// `1 -> t` is inhabited. Structural: `1` yes, `0` and generators no,
/// products need both factors, sums need one summand.
pub fn type_pointed(t: &Ty) -> bool {
    t.is_pointed()
}

/// `t -> 0` is inhabited; the dual of [`type_pointed`].
pub fn type_copointed(t: &Ty) -> bool {
    t.is_copointed()
}

/// All generator-free types of exactly the given size, in a fixed order.
/// Sizes are always odd, so even sizes yield nothing.
pub fn types_of_size(size: u64) -> Vec<Ty> {
    let mut table: Vec<Vec<Ty>> = vec![Vec::new(); size as usize + 1];
    for n in 1..=size as usize {
        if n == 1 {
            table[1] = vec![Ty::zero(), Ty::one()];
            continue;
        }
        let mut out = Vec::new();
        for left in (1..n.saturating_sub(1)).step_by(2) {
            let right = n - 1 - left;
            for a in &table[left] {
                for b in &table[right] {
                    out.push(Ty::sum(a.clone(), b.clone()));
                    out.push(Ty::prod(a.clone(), b.clone()));
                }
            }
        }
        table[n] = out;
    }
    table.pop().unwrap_or_default()
}

/// All generator-free types with size at most `max`.
pub fn types_up_to(max: u64) -> Vec<Ty> {
    (1..=max).flat_map(types_of_size).collect()
}
