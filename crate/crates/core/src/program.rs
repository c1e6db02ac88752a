//! Loading declaration files: parse, check every declaration against its
//! homset, then eliminate cuts.

use crate::compose::eliminate;
use crate::error::{LoadError, TypingError};
use crate::graph::GeneratorGraph;
use crate::syntax::parse_document;
use crate::terms::{check, check_raw, Arrow};

#[derive(Debug, Clone)]
pub struct Program {
    pub graph: GeneratorGraph,
    /// Declarations in file order, cut-free.
    pub arrows: Vec<(String, Arrow)>,
}

impl Program {
    pub fn get(&self, name: &str) -> Option<&Arrow> {
        self.arrows.iter().find(|(n, _)| n == name).map(|(_, a)| a)
    }
}

pub fn load(src: &str) -> Result<Program, LoadError> {
    let doc = parse_document(src)?;
    let mut arrows: Vec<(String, Arrow)> = Vec::new();
    for d in doc.declarations {
        if arrows.iter().any(|(n, _)| *n == d.name) {
            return Err(LoadError::Duplicate(d.name));
        }
        let typing = |source: TypingError| LoadError::Typing {
            name: d.name.clone(),
            line: d.line,
            source,
        };
        doc.graph.check_type(&d.dom)?;
        doc.graph.check_type(&d.cod)?;
        check_raw(&d.body, &d.dom, &d.cod, &doc.graph).map_err(typing)?;
        let term = eliminate(&d.body).map_err(|source| LoadError::Compose {
            name: d.name.clone(),
            line: d.line,
            source,
        })?;
        check(&term, &d.dom, &d.cod, &doc.graph).map_err(typing)?;
        arrows.push((d.name, Arrow::trusted(term, d.dom, d.cod)));
    }
    Ok(Program {
        graph: doc.graph,
        arrows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Expected;
    use crate::syntax::parse_term;

    #[test]
    fn loads_and_eliminates_cuts() {
        let p = load(
            "graph { node x; node y; edge k : x -> y; }\n\
             term f : 0*0 -> 0+1 = p0 ? ; s0 id:0 ;\n\
             term g : x -> y = @k ;\n",
        )
        .unwrap();
        assert_eq!(p.get("f").unwrap().term, parse_term("s0 p0 ?").unwrap());
        assert!(p.get("g").unwrap().has_generators());
    }

    #[test]
    fn reports_type_errors_with_the_declaration() {
        let e = load("term ok : 0 -> 1 = ! ;\nterm bad : 1 -> 0 = ! ;\n").unwrap_err();
        match e {
            LoadError::Typing { name, line, source } => {
                assert_eq!((name.as_str(), line), ("bad", 2));
                assert_eq!(source.expected, Expected::TerminalCodomain);
            }
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn rejects_duplicates_and_unknown_generators() {
        assert!(matches!(
            load("term a : 0 -> 1 = ! ;\nterm a : 0 -> 1 = ? ;"),
            Err(LoadError::Duplicate(_))
        ));
        assert!(matches!(load("term a : x -> 1 = ! ;"), Err(LoadError::Graph(_))));
    }
}
