//! Text syntax for types, terms and declaration files.
//!
//! ```text
//! type  ::= prod ('+' type)?          sums are right associative
//! prod  ::= atom ('*' prod)?          and bind looser than products
//! atom  ::= '0' | '1' | ident | '(' type ')'
//!
//! term  ::= unit (';' unit)*          cut, only in raw terms
//! unit  ::= '!' | '?' | 'p0' unit | 'p1' unit | 's0' unit | 's1' unit
//!         | '<' term ',' term '>' | '{' term ',' term '}'
//!         | '@' ident | '@' '[' ident,* ']' | 'id' ':' type | '(' term ')'
//!
//! file  ::= ('graph' '{' ('node' ident ';' | 'edge' ident ':' ident '->' ident ';')* '}')?
//!           ('term' ident ':' type '->' type '=' term ';')*
//! ```
//!
//! `#` starts a line comment.

use std::fmt;

use crate::error::SyntaxError;
use crate::graph::GeneratorGraph;
use crate::terms::{RawTerm, Side, Term};
use crate::types::{Name, Ty};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Sym(&'static str),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Sym(s) => write!(f, "`{s}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

const SYMBOLS: &[&str] = &[
    "->", "!", "?", "<", ">", "{", "}", "(", ")", ",", ";", ":", "+", "*", "@", "[", "]", "=",
];

fn lex(src: &str) -> Result<Vec<Spanned>, SyntaxError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_alphanumeric() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            out.push(Spanned {
                tok: Tok::Ident(word),
                line,
                column: col,
            });
            col += i - start;
            continue;
        }
        let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
        match SYMBOLS.iter().find(|s| rest.starts_with(**s)) {
            Some(s) => {
                out.push(Spanned {
                    tok: Tok::Sym(s),
                    line,
                    column: col,
                });
                i += s.len();
                col += s.len();
            }
            None => {
                return Err(SyntaxError {
                    line,
                    column: col,
                    message: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Parser, SyntaxError> {
        Ok(Parser {
            toks: lex(src)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> SyntaxError {
        let s = &self.toks[self.pos];
        SyntaxError {
            line: s.line,
            column: s.column,
            message: message.into(),
        }
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(t) if *t == s)
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Ident(t) if t == w)
    }

    fn expect_sym(&mut self, s: &'static str) -> Result<(), SyntaxError> {
        if self.is_sym(s) {
            self.next();
            Ok(())
        } else {
            Err(self.error(format!("expected `{s}`, found {}", self.peek())))
        }
    }

    fn expect_word(&mut self, w: &str) -> Result<(), SyntaxError> {
        if self.is_word(w) {
            self.next();
            Ok(())
        } else {
            Err(self.error(format!("expected `{w}`, found {}", self.peek())))
        }
    }

    fn ident(&mut self) -> Result<String, SyntaxError> {
        match self.peek().clone() {
            Tok::Ident(s) if is_name(&s) => {
                self.next();
                Ok(s)
            }
            t => Err(self.error(format!("expected a name, found {t}"))),
        }
    }

    fn expect_eof(&self) -> Result<(), SyntaxError> {
        match self.peek() {
            Tok::Eof => Ok(()),
            t => Err(self.error(format!("unexpected {t} after end of input"))),
        }
    }

    fn ty(&mut self) -> Result<Ty, SyntaxError> {
        let left = self.prod()?;
        if self.is_sym("+") {
            self.next();
            Ok(Ty::sum(left, self.ty()?))
        } else {
            Ok(left)
        }
    }

    fn prod(&mut self) -> Result<Ty, SyntaxError> {
        let left = self.ty_atom()?;
        if self.is_sym("*") {
            self.next();
            Ok(Ty::prod(left, self.prod()?))
        } else {
            Ok(left)
        }
    }

    fn ty_atom(&mut self) -> Result<Ty, SyntaxError> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "0" => {
                self.next();
                Ok(Ty::zero())
            }
            Tok::Ident(s) if s == "1" => {
                self.next();
                Ok(Ty::one())
            }
            Tok::Ident(s) if is_name(&s) => {
                self.next();
                Ok(Ty::gen(s.as_str()))
            }
            Tok::Sym("(") => {
                self.next();
                let t = self.ty()?;
                self.expect_sym(")")?;
                Ok(t)
            }
            t => Err(self.error(format!("expected a type, found {t}"))),
        }
    }

    fn starts_unit(&self) -> bool {
        match self.peek() {
            Tok::Sym(s) => matches!(*s, "!" | "?" | "<" | "{" | "@" | "("),
            Tok::Ident(w) => matches!(w.as_str(), "p0" | "p1" | "s0" | "s1" | "id"),
            Tok::Eof => false,
        }
    }

    fn term(&mut self) -> Result<RawTerm, SyntaxError> {
        let mut acc = self.unit()?;
        while self.is_sym(";") && self.starts_unit_after_semicolon() {
            self.next();
            let rhs = self.unit()?;
            acc = RawTerm::Cut(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn starts_unit_after_semicolon(&mut self) -> bool {
        self.pos += 1;
        let yes = self.starts_unit();
        self.pos -= 1;
        yes
    }

    fn unit(&mut self) -> Result<RawTerm, SyntaxError> {
        match self.peek().clone() {
            Tok::Sym("!") => {
                self.next();
                Ok(RawTerm::Bang)
            }
            Tok::Sym("?") => {
                self.next();
                Ok(RawTerm::Quest)
            }
            Tok::Sym("<") => {
                self.next();
                let a = self.term()?;
                self.expect_sym(",")?;
                let b = self.term()?;
                self.expect_sym(">")?;
                Ok(RawTerm::Tuple(Box::new(a), Box::new(b)))
            }
            Tok::Sym("{") => {
                self.next();
                let a = self.term()?;
                self.expect_sym(",")?;
                let b = self.term()?;
                self.expect_sym("}")?;
                Ok(RawTerm::Cotuple(Box::new(a), Box::new(b)))
            }
            Tok::Sym("(") => {
                self.next();
                let t = self.term()?;
                self.expect_sym(")")?;
                Ok(t)
            }
            Tok::Sym("@") => {
                self.next();
                if self.is_sym("[") {
                    self.next();
                    let mut path = Vec::new();
                    while !self.is_sym("]") {
                        if !path.is_empty() {
                            self.expect_sym(",")?;
                        }
                        path.push(Name::from(self.ident()?.as_str()));
                    }
                    self.next();
                    Ok(RawTerm::Gen(path))
                } else {
                    Ok(RawTerm::Gen(vec![Name::from(self.ident()?.as_str())]))
                }
            }
            Tok::Ident(w) => {
                let prefix = |s: &str| match s {
                    "p0" => Some((true, Side::Left)),
                    "p1" => Some((true, Side::Right)),
                    "s0" => Some((false, Side::Left)),
                    "s1" => Some((false, Side::Right)),
                    _ => None,
                };
                if let Some((is_proj, side)) = prefix(&w) {
                    self.next();
                    let body = Box::new(self.unit()?);
                    return Ok(if is_proj {
                        RawTerm::Proj(side, body)
                    } else {
                        RawTerm::Inj(side, body)
                    });
                }
                if w == "id" {
                    self.next();
                    self.expect_sym(":")?;
                    return Ok(RawTerm::Id(self.ty()?));
                }
                Err(self.error(format!("expected a term, found `{w}`")))
            }
            t => Err(self.error(format!("expected a term, found {t}"))),
        }
    }
}

fn is_name(s: &str) -> bool {
    s.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
}

pub fn parse_type(src: &str) -> Result<Ty, SyntaxError> {
    let mut p = Parser::new(src)?;
    let t = p.ty()?;
    p.expect_eof()?;
    Ok(t)
}

pub fn parse_raw(src: &str) -> Result<RawTerm, SyntaxError> {
    let mut p = Parser::new(src)?;
    let t = p.term()?;
    p.expect_eof()?;
    Ok(t)
}

/// Parses a term that must be free of identities and cuts.
pub fn parse_term(src: &str) -> Result<Term, SyntaxError> {
    let raw = parse_raw(src)?;
    raw.to_term().ok_or_else(|| SyntaxError {
        line: 1,
        column: 1,
        message: "identities and cuts are not allowed here".into(),
    })
}

/// One `term name : A -> B = t ;` declaration, before type checking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Declaration {
    pub name: String,
    pub dom: Ty,
    pub cod: Ty,
    pub body: RawTerm,
    pub line: usize,
}

/// A parsed declaration file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    pub graph: GeneratorGraph,
    pub declarations: Vec<Declaration>,
}

pub fn parse_document(src: &str) -> Result<Document, SyntaxError> {
    let mut p = Parser::new(src)?;
    let mut doc = Document::default();
    if p.is_word("graph") {
        p.next();
        p.expect_sym("{")?;
        while !p.is_sym("}") {
            let (line, column) = (p.toks[p.pos].line, p.toks[p.pos].column);
            let graph_err = |e: crate::error::GraphError| SyntaxError {
                line,
                column,
                message: e.to_string(),
            };
            if p.is_word("node") {
                p.next();
                let n = p.ident()?;
                p.expect_sym(";")?;
                doc.graph.add_node(n.as_str()).map_err(graph_err)?;
            } else if p.is_word("edge") {
                p.next();
                let e = p.ident()?;
                p.expect_sym(":")?;
                let s = p.ident()?;
                p.expect_sym("->")?;
                let t = p.ident()?;
                p.expect_sym(";")?;
                doc.graph
                    .add_edge(e.as_str(), s.as_str(), t.as_str())
                    .map_err(graph_err)?;
            } else {
                return Err(p.error(format!("expected `node`, `edge` or `}}`, found {}", p.peek())));
            }
        }
        p.next();
    }
    while !matches!(p.peek(), Tok::Eof) {
        let line = p.toks[p.pos].line;
        p.expect_word("term")?;
        let name = p.ident()?;
        p.expect_sym(":")?;
        let dom = p.ty()?;
        p.expect_sym("->")?;
        let cod = p.ty()?;
        p.expect_sym("=")?;
        let body = p.term()?;
        p.expect_sym(";")?;
        doc.declarations.push(Declaration {
            name,
            dom,
            cod,
            body,
            line,
        });
    }
    Ok(doc)
}

fn fmt_path(path: &[Name], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if path.len() == 1 {
        return write!(f, "@{}", path[0]);
    }
    f.write_str("@[")?;
    for (i, e) in path.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        f.write_str(e)?;
    }
    f.write_str("]")
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Bang => f.write_str("!"),
            Term::Quest => f.write_str("?"),
            Term::Proj(i, b) => write!(f, "p{i} {b}"),
            Term::Inj(j, b) => write!(f, "s{j} {b}"),
            Term::Tuple(a, b) => write!(f, "<{a}, {b}>"),
            Term::Cotuple(a, b) => write!(f, "{{{a}, {b}}}"),
            Term::Gen(p) => fmt_path(p, f),
        }
    }
}

impl fmt::Display for RawTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Prefix operators take a single unit, so a cut below one needs parentheses.
        struct Unit<'a>(&'a RawTerm);
        impl fmt::Display for Unit<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                match self.0 {
                    RawTerm::Cut(..) => write!(f, "({})", self.0),
                    t => write!(f, "{t}"),
                }
            }
        }
        match self {
            RawTerm::Bang => f.write_str("!"),
            RawTerm::Quest => f.write_str("?"),
            RawTerm::Proj(i, b) => write!(f, "p{i} {}", Unit(b)),
            RawTerm::Inj(j, b) => write!(f, "s{j} {}", Unit(b)),
            RawTerm::Tuple(a, b) => write!(f, "<{a}, {b}>"),
            RawTerm::Cotuple(a, b) => write!(f, "{{{a}, {b}}}"),
            RawTerm::Gen(p) => fmt_path(p, f),
            RawTerm::Id(t) => write!(f, "id:{t}"),
            RawTerm::Cut(a, b) => match &**b {
                RawTerm::Cut(..) => write!(f, "{a} ; ({b})"),
                _ => write!(f, "{a} ; {b}"),
            },
        }
    }
}

/// Prints a term on a single line.
pub fn print(t: &Term) -> String {
    t.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_term("p0 ?").unwrap(), Term::proj(Side::Left, Term::Quest));
        assert_eq!(
            parse_term("<! , s1 !>").unwrap(),
            Term::tuple(Term::Bang, Term::inj(Side::Right, Term::Bang))
        );
        assert_eq!(print(&Term::cotuple(Term::Bang, Term::Bang)), "{!, !}");
    }

    #[test]
    fn cut_is_left_associative_and_stops_before_declarations() {
        let t = parse_raw("! ; s0 id:1 ; p0 ?").unwrap();
        assert!(matches!(&t, RawTerm::Cut(l, _) if matches!(**l, RawTerm::Cut(..))));
        let doc = parse_document(
            "# sample\ngraph { node x; node y; edge k : x -> y; }\n\
             term a : 0 * 0 -> 0 = p0 ? ;\nterm b : x -> y = @k ; @[] ;\n",
        )
        .unwrap();
        assert_eq!(doc.declarations.len(), 2);
        assert_eq!(doc.declarations[1].line, 4);
        assert!(matches!(doc.declarations[1].body, RawTerm::Cut(..)));
        assert_eq!(doc.graph.nodes().len(), 2);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = parse_term("<!, ").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        let e = parse_document("term a : 0 -> 1 = !\nterm").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_type("1 + $").unwrap_err();
        assert_eq!(e.column, 5);
    }

    #[test]
    fn raw_printing_round_trips() {
        for s in ["p0 (! ; s0 !)", "! ; (s0 ! ; id:1 + 1)", "<id:0 * 1, @[]>", "{@[k, l], @k}"] {
            let t = parse_raw(s).unwrap();
            assert_eq!(parse_raw(&t.to_string()).unwrap(), t);
        }
    }

    fn arb_term() -> impl Strategy<Value = Term> {
        let leaf = prop_oneof![
            Just(Term::Bang),
            Just(Term::Quest),
            prop::collection::vec("[a-z]{1,3}", 0..3).prop_map(|p| Term::gen(p.iter().map(|s| s.as_str()))),
        ];
        leaf.prop_recursive(5, 40, 2, |inner| {
            prop_oneof![
                (any::<bool>(), inner.clone()).prop_map(|(b, t)| Term::proj(if b { Side::Left } else { Side::Right }, t)),
                (any::<bool>(), inner.clone()).prop_map(|(b, t)| Term::inj(if b { Side::Left } else { Side::Right }, t)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::tuple(a, b)),
                (inner.clone(), inner).prop_map(|(a, b)| Term::cotuple(a, b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(t in arb_term()) {
            prop_assert_eq!(parse_term(&print(&t)).unwrap(), t);
        }
    }
}
