//! The script language: ring declarations, ideal and module bindings and
//! commands, resolved into a flat list of statements.

use std::collections::HashMap;

use primdec_core::polyring::{
    parse_polynomial_at, FreeElement, MonomialOrder, Polynomial, Ring, RingRef, Submodule,
};
use thiserror::Error;

/// Syntax or binding error with a 1-based position.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Primdec,
    Hull,
    Minass,
    Localize,
    Validate,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Primdec => "primdec",
            CommandKind::Hull => "hull",
            CommandKind::Minass => "minass",
            CommandKind::Localize => "localize",
            CommandKind::Validate => "validate",
        }
    }

    fn from_keyword(word: &str) -> Option<Self> {
        Some(match word {
            "primdec" => CommandKind::Primdec,
            "hull" => CommandKind::Hull,
            "minass" => CommandKind::Minass,
            "localize" => CommandKind::Localize,
            "validate" => CommandKind::Validate,
            _ => return None,
        })
    }
}

/// A command with its operands already looked up.
#[derive(Clone, Debug)]
pub struct Command {
    pub kind: CommandKind,
    pub target: String,
    pub value: Submodule,
    /// Second operand of `localize`.
    pub ideal: Option<(String, Submodule)>,
    /// File operand of `validate`, as written.
    pub path: Option<String>,
    pub line: usize,
}

#[derive(Clone, Debug)]
pub enum Statement {
    Ring { name: String, ring: RingRef },
    Bind { name: String, value: Submodule },
    Command(Command),
}

#[derive(Clone, Debug, Default)]
pub struct Script {
    pub statements: Vec<Statement>,
}

impl Script {
    pub fn commands(&self) -> impl Iterator<Item = &Command> {
        self.statements.iter().filter_map(|s| match s {
            Statement::Command(c) => Some(c),
            _ => None,
        })
    }
}

pub fn parse(source: &str) -> Result<Script, ParseError> {
    let mut p = Parser {
        src: source,
        pos: 0,
        ring: None,
        env: HashMap::new(),
    };
    let mut statements = Vec::new();
    loop {
        p.skip_trivia();
        if p.pos == p.src.len() {
            return Ok(Script { statements });
        }
        statements.push(p.statement()?);
    }
}

struct Binding {
    ring: String,
    value: Submodule,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    ring: Option<(String, RingRef)>,
    env: HashMap<String, Binding>,
}

impl<'a> Parser<'a> {
    fn error_at(&self, offset: usize, message: impl Into<String>) -> ParseError {
        let before = &self.src[..offset.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn line(&self) -> usize {
        self.src[..self.pos].matches('\n').count() + 1
    }

    /// Skips whitespace and `//` comments.
    fn skip_trivia(&mut self) {
        loop {
            let rest = &self.src[self.pos..];
            let trimmed = rest.trim_start();
            self.pos += rest.len() - trimmed.len();
            if trimmed.starts_with("//") {
                self.pos += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                return;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_trivia();
        self.src[self.pos..].chars().next()
    }

    fn describe_next(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            let found = self.describe_next();
            Err(self.error(format!("expected '{c}', found {found}")))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<(String, usize), ParseError> {
        self.skip_trivia();
        let start = self.pos;
        let rest = &self.src[start..];
        let first_ok = rest.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_');
        if !first_ok {
            let found = self.describe_next();
            return Err(self.error(format!("expected an identifier, found {found}")));
        }
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        self.pos += len;
        Ok((rest[..len].to_string(), start))
    }

    fn integer(&mut self) -> Result<(String, usize), ParseError> {
        self.skip_trivia();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            let found = self.describe_next();
            return Err(self.error(format!("expected a number, found {found}")));
        }
        self.pos += len;
        Ok((rest[..len].to_string(), start))
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        let (word, at) = self.ident()?;
        match word.as_str() {
            "ring" => self.ring_decl(),
            "ideal" => self.binding(false),
            "module" => self.binding(true),
            _ => match CommandKind::from_keyword(&word) {
                Some(kind) => self.command(kind),
                None => Err(self.error_at(at, format!("unknown statement '{word}'"))),
            },
        }
    }

    fn ring_decl(&mut self) -> Result<Statement, ParseError> {
        let (name, _) = self.ident()?;
        self.expect('=')?;
        let (chr, at) = self.integer()?;
        if chr.trim_start_matches('0') != "" {
            return Err(self.error_at(at, "only characteristic 0 supported"));
        }
        self.expect(',')?;
        self.expect('(')?;
        self.skip_trivia();
        let vars_at = self.pos;
        let mut vars = vec![self.ident()?.0];
        while self.eat(',') {
            vars.push(self.ident()?.0);
        }
        self.expect(')')?;
        self.expect(',')?;
        let order = self.order(vars.len())?;
        self.expect(';')?;
        let ring = Ring::new(vars, order).map_err(|e| self.error_at(vars_at, e.to_string()))?;
        self.ring = Some((name.clone(), ring.clone()));
        Ok(Statement::Ring { name, ring })
    }

    fn order(&mut self, nvars: usize) -> Result<MonomialOrder, ParseError> {
        let (word, at) = self.ident()?;
        match word.as_str() {
            "dp" => Ok(MonomialOrder::degrevlex()),
            "lp" => Ok(MonomialOrder::lex()),
            "wp" => {
                self.expect('(')?;
                let mut weights = Vec::new();
                loop {
                    let (w, w_at) = self.integer()?;
                    match w.parse::<u32>() {
                        Ok(v) if v > 0 => weights.push(v),
                        _ => return Err(self.error_at(w_at, "weights must be positive integers")),
                    }
                    if !self.eat(',') {
                        break;
                    }
                }
                self.expect(')')?;
                if weights.len() != nvars {
                    return Err(self.error_at(
                        at,
                        format!("wp needs {nvars} weights, found {}", weights.len()),
                    ));
                }
                Ok(MonomialOrder::weighted_revlex(weights))
            }
            _ => Err(self.error_at(at, format!("unknown ordering '{word}' (expected dp, lp or wp)"))),
        }
    }

    fn active_ring(&self, at: usize) -> Result<(String, RingRef), ParseError> {
        self.ring
            .clone()
            .ok_or_else(|| self.error_at(at, "no active ring; declare one with 'ring'"))
    }

    fn polynomial(&mut self, ring: &RingRef) -> Result<Polynomial, ParseError> {
        self.skip_trivia();
        match parse_polynomial_at(ring, self.src, self.pos) {
            Ok((p, end)) => {
                self.pos = end;
                Ok(p)
            }
            Err(primdec_core::Error::Parse { offset, message }) => Err(self.error_at(offset, message)),
            Err(e) => Err(self.error(e.to_string())),
        }
    }

    fn binding(&mut self, module: bool) -> Result<Statement, ParseError> {
        let (name, at) = self.ident()?;
        let (ring_name, ring) = self.active_ring(at)?;
        self.expect('=')?;
        let value = if module {
            let mut gens: Vec<FreeElement> = Vec::new();
            loop {
                self.skip_trivia();
                let vec_at = self.pos;
                self.expect('[')?;
                let mut comps = vec![self.polynomial(&ring)?];
                while self.eat(',') {
                    comps.push(self.polynomial(&ring)?);
                }
                self.expect(']')?;
                if let Some(first) = gens.first() {
                    if first.rank() != comps.len() {
                        return Err(self.error_at(
                            vec_at,
                            format!("vector has {} entries, expected {}", comps.len(), first.rank()),
                        ));
                    }
                }
                gens.push(FreeElement::new(comps));
                if !self.eat(',') {
                    break;
                }
            }
            let rank = gens[0].rank();
            Submodule::new(&ring, rank, gens).map_err(|e| self.error_at(at, e.to_string()))?
        } else {
            let mut polys = vec![self.polynomial(&ring)?];
            while self.eat(',') {
                polys.push(self.polynomial(&ring)?);
            }
            Submodule::ideal(&ring, polys).map_err(|e| self.error_at(at, e.to_string()))?
        };
        self.expect(';')?;
        self.env.insert(
            name.clone(),
            Binding {
                ring: ring_name,
                value: value.clone(),
            },
        );
        Ok(Statement::Bind { name, value })
    }

    fn lookup(&self, name: &str, at: usize) -> Result<Submodule, ParseError> {
        let (active, _) = self.active_ring(at)?;
        match self.env.get(name) {
            None => Err(self.error_at(at, format!("unknown identifier '{name}'"))),
            Some(b) if b.ring != active => Err(self.error_at(
                at,
                format!("'{name}' belongs to ring '{}', but the active ring is '{active}'", b.ring),
            )),
            Some(b) => Ok(b.value.clone()),
        }
    }

    fn command(&mut self, kind: CommandKind) -> Result<Statement, ParseError> {
        let line = self.line();
        let (target, at) = self.ident()?;
        let value = self.lookup(&target, at)?;
        let mut ideal = None;
        let mut path = None;
        match kind {
            CommandKind::Localize => {
                self.expect(',')?;
                let (name, j_at) = self.ident()?;
                let j = self.lookup(&name, j_at)?;
                if !j.is_ideal() {
                    return Err(self.error_at(j_at, format!("'{name}' is a module, expected an ideal")));
                }
                ideal = Some((name, j));
            }
            CommandKind::Validate => {
                self.expect(',')?;
                path = Some(self.path()?);
            }
            _ => {}
        }
        self.expect(';')?;
        Ok(Statement::Command(Command {
            kind,
            target,
            value,
            ideal,
            path,
            line,
        }))
    }

    /// A double-quoted string, or the raw text up to the next `;`.
    fn path(&mut self) -> Result<String, ParseError> {
        if self.eat('"') {
            let rest = &self.src[self.pos..];
            let Some(end) = rest.find('"') else {
                return Err(self.error("unterminated string"));
            };
            self.pos += end + 1;
            return Ok(rest[..end].to_string());
        }
        let rest = &self.src[self.pos..];
        let end = rest.find(';').unwrap_or(rest.len());
        let text = rest[..end].trim();
        if text.is_empty() {
            return Err(self.error("expected a file name"));
        }
        self.pos += end;
        Ok(text.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_statements() {
        let s = parse("ring r=0,(x,y),dp; ideal I=x^2,x*y; primdec I;").unwrap();
        assert_eq!(s.statements.len(), 3);
        let c = s.commands().next().unwrap();
        assert_eq!(c.kind, CommandKind::Primdec);
        assert_eq!(c.value.to_string(), "x^2,x*y");
    }

    #[test]
    fn positions_are_one_based() {
        let e = parse("ring r=0,(x,y),dp;\nideal I = x^2, q;").unwrap_err();
        assert_eq!((e.line, e.column), (2, 16));
        assert!(e.message.contains("unknown variable 'q'"), "{e}");
    }

    #[test]
    fn comments_and_quoted_paths() {
        let s = parse("// header\nring r=0,(x),lp; ideal I=x; // tail\nvalidate I, \"a b.json\";").unwrap();
        assert_eq!(s.commands().next().unwrap().path.as_deref(), Some("a b.json"));
    }
}
