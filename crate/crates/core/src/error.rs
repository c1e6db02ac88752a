use std::fmt;

use thiserror::Error;

use crate::types::Ty;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("node `{0}` is declared twice")]
    DuplicateNode(String),
    #[error("edge `{0}` is declared twice")]
    DuplicateEdge(String),
    #[error("unknown generator `{0}`")]
    UnknownNode(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("path breaks at `{edge}`: expected node `{expected}`, found `{found}`")]
    BrokenPath {
        edge: String,
        expected: String,
        found: String,
    },
}

/// Position of a subterm: child indices from the root.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AstPath(pub Vec<usize>);

impl fmt::Display for AstPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        f.write_str("root")?;
        for i in &self.0 {
            write!(f, ".{i}")?;
        }
        Ok(())
    }
}

/// What the failing rule needed from the homset it was checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expected {
    /// `!` needs the codomain `1`.
    TerminalCodomain,
    /// `?` needs the domain `0`.
    InitialDomain,
    ProductDomain,
    SumDomain,
    ProductCodomain,
    SumCodomain,
    GeneratorHomset,
    /// An identity or a cut boundary fixed to this type.
    Exactly(Ty),
    /// A cut whose middle type cannot be synthesized from either side.
    CutAnnotation,
    /// A cut-free, identity-free term.
    CutFree,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::TerminalCodomain => f.write_str("codomain 1"),
            Expected::InitialDomain => f.write_str("domain 0"),
            Expected::ProductDomain => f.write_str("a product domain"),
            Expected::SumDomain => f.write_str("a sum domain"),
            Expected::ProductCodomain => f.write_str("a product codomain"),
            Expected::SumCodomain => f.write_str("a sum codomain"),
            Expected::GeneratorHomset => f.write_str("generator domain and codomain"),
            Expected::Exactly(t) => write!(f, "type {t}"),
            Expected::CutAnnotation => f.write_str("an inferable cut (add `id:T`)"),
            Expected::CutFree => f.write_str("a cut-free term"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("type error at {location}: expected {expected}, found {dom} -> {cod}{}", detail.as_ref().map(|d| format!(" ({d})")).unwrap_or_default())]
pub struct TypingError {
    pub location: AstPath,
    pub expected: Expected,
    pub dom: Ty,
    pub cod: Ty,
    pub detail: Option<GraphError>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComposeError {
    #[error("cannot compose `{left}` with `{right}`: the shapes do not meet at a common type")]
    Mismatch { left: String, right: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle guard exceeded: {what} reached {reached} (limit {limit})")]
    GuardExceeded {
        what: &'static str,
        reached: u128,
        limit: u128,
    },
    #[error("generator graph has a cycle; homsets are infinite")]
    CyclicGraph,
    #[error("terms must be parallel: {0}")]
    NotParallel(String),
    #[error("not a term of a sum-product square: {0}")]
    NotInSquare(String),
}

/// Everything that can go wrong while loading a declaration file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("line {line}: {name}: {source}")]
    Typing {
        name: String,
        line: usize,
        #[source]
        source: TypingError,
    },
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("term `{0}` is declared twice")]
    Duplicate(String),
    #[error("line {line}: {name}: {source}")]
    Compose {
        name: String,
        line: usize,
        #[source]
        source: ComposeError,
    },
}
