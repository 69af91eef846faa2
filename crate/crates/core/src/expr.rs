//! The space-expression language of the command line.
//!
//! ```text
//! space     := sphere(n) | point | wedge(space, space) | smash(space, space)
//!            | sym(n, space) | susp(space) | cone(space) | load("path")
//! inclusion := id(space) | base(space) | wedge_left(space, space) | cone_incl(space)
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::pss_json;
use crate::sset::{
    cone, extend_levels, point, smash, sphere, suspend, sym_power, wedge, Inclusion, PointedSimplicialSet,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceExpr {
    Sphere(usize),
    Point,
    Wedge(Box<SpaceExpr>, Box<SpaceExpr>),
    Smash(Box<SpaceExpr>, Box<SpaceExpr>),
    Sym(usize, Box<SpaceExpr>),
    Susp(Box<SpaceExpr>),
    Cone(Box<SpaceExpr>),
    Load(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InclusionExpr {
    Id(SpaceExpr),
    Base(SpaceExpr),
    WedgeLeft(SpaceExpr, SpaceExpr),
    ConeIncl(SpaceExpr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Space(SpaceExpr),
    Inclusion(InclusionExpr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Arg {
    Call { name: String, args: Vec<Arg>, pos: usize },
    Int { value: i64, pos: usize },
    Str { value: String, pos: usize },
}

impl Arg {
    fn pos(&self) -> usize {
        match self {
            Arg::Call { pos, .. } | Arg::Int { pos, .. } | Arg::Str { pos, .. } => *pos,
        }
    }
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.into() })
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => err(self.pos, format!("expected '{c}', found '{d}'")),
            None => err(self.pos, format!("expected '{c}', found end of input")),
        }
    }

    fn arg(&mut self) -> Result<Arg> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(c) if c == '-' || c.is_ascii_digit() => {
                self.pos += 1;
                while self.text[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let lit = &self.text[start..self.pos];
                match lit.parse::<i64>() {
                    Ok(value) => Ok(Arg::Int { value, pos: start }),
                    Err(_) => err(start, format!("bad integer '{lit}'")),
                }
            }
            Some('"') => {
                self.pos += 1;
                match self.text[self.pos..].find('"') {
                    Some(len) => {
                        let value = self.text[self.pos..self.pos + len].to_string();
                        self.pos += len + 1;
                        Ok(Arg::Str { value, pos: start })
                    }
                    None => err(start, "unterminated string"),
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                while self.text[self.pos..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name = self.text[start..self.pos].to_string();
                let mut args = Vec::new();
                if self.peek() == Some('(') {
                    self.pos += 1;
                    if self.peek() != Some(')') {
                        loop {
                            args.push(self.arg()?);
                            if self.peek() == Some(',') {
                                self.pos += 1;
                            } else {
                                break;
                            }
                        }
                    }
                    self.expect(')')?;
                }
                Ok(Arg::Call { name, args, pos: start })
            }
            Some(c) => err(start, format!("unexpected '{c}'")),
            None => err(start, "unexpected end of input"),
        }
    }
}

fn arity(name: &str, args: &[Arg], want: usize, pos: usize) -> Result<()> {
    if args.len() != want {
        return err(pos, format!("{name} takes {want} argument(s), got {}", args.len()));
    }
    Ok(())
}

fn nat(a: &Arg) -> Result<usize> {
    match a {
        Arg::Int { value, pos } if *value < 0 => err(*pos, format!("n must be non-negative, got {value}")),
        Arg::Int { value, .. } => Ok(*value as usize),
        other => err(other.pos(), "expected a non-negative integer"),
    }
}

fn space(a: &Arg) -> Result<SpaceExpr> {
    let Arg::Call { name, args, pos } = a else {
        return err(a.pos(), "expected a space expression");
    };
    let pos = *pos;
    let sub = |k: usize| space(&args[k]).map(Box::new);
    Ok(match name.as_str() {
        "sphere" => {
            arity(name, args, 1, pos)?;
            SpaceExpr::Sphere(nat(&args[0])?)
        }
        "point" => {
            arity(name, args, 0, pos)?;
            SpaceExpr::Point
        }
        "wedge" | "smash" => {
            arity(name, args, 2, pos)?;
            if name == "wedge" {
                SpaceExpr::Wedge(sub(0)?, sub(1)?)
            } else {
                SpaceExpr::Smash(sub(0)?, sub(1)?)
            }
        }
        "sym" => {
            arity(name, args, 2, pos)?;
            SpaceExpr::Sym(nat(&args[0])?, sub(1)?)
        }
        "susp" | "cone" => {
            arity(name, args, 1, pos)?;
            if name == "susp" {
                SpaceExpr::Susp(sub(0)?)
            } else {
                SpaceExpr::Cone(sub(0)?)
            }
        }
        "load" => {
            arity(name, args, 1, pos)?;
            match &args[0] {
                Arg::Str { value, .. } => SpaceExpr::Load(value.clone()),
                other => return err(other.pos(), "load expects a quoted path"),
            }
        }
        "id" | "base" | "wedge_left" | "cone_incl" => {
            return err(pos, format!("{name}(...) is an inclusion, a space is expected here"))
        }
        _ => return err(pos, format!("unknown constructor '{name}'")),
    })
}

fn top(a: &Arg) -> Result<Expr> {
    if let Arg::Call { name, args, pos } = a {
        let pos = *pos;
        let incl = match name.as_str() {
            "id" | "base" | "cone_incl" => {
                arity(name, args, 1, pos)?;
                let e = space(&args[0])?;
                Some(match name.as_str() {
                    "id" => InclusionExpr::Id(e),
                    "base" => InclusionExpr::Base(e),
                    _ => InclusionExpr::ConeIncl(e),
                })
            }
            "wedge_left" => {
                arity(name, args, 2, pos)?;
                Some(InclusionExpr::WedgeLeft(space(&args[0])?, space(&args[1])?))
            }
            _ => None,
        };
        if let Some(i) = incl {
            return Ok(Expr::Inclusion(i));
        }
    }
    space(a).map(Expr::Space)
}

/// Parses a space or inclusion expression.
pub fn parse(text: &str) -> Result<Expr> {
    let mut lx = Lexer { text, pos: 0 };
    let a = lx.arg()?;
    if let Some(c) = lx.peek() {
        return err(lx.pos, format!("trailing input starting at '{c}'"));
    }
    top(&a)
}

pub fn parse_space(text: &str) -> Result<SpaceExpr> {
    match parse(text)? {
        Expr::Space(s) => Ok(s),
        Expr::Inclusion(_) => err(0, "expected a space, found an inclusion"),
    }
}

pub fn parse_inclusion(text: &str) -> Result<InclusionExpr> {
    match parse(text)? {
        Expr::Inclusion(i) => Ok(i),
        Expr::Space(_) => err(0, "expected an inclusion (id, base, wedge_left or cone_incl)"),
    }
}

impl SpaceExpr {
    /// Upper bound on the geometric dimension of the value. Files are read to find theirs.
    pub fn dim(&self) -> Result<usize> {
        Ok(match self {
            SpaceExpr::Sphere(n) => *n,
            SpaceExpr::Point => 0,
            SpaceExpr::Wedge(a, b) => a.dim()?.max(b.dim()?),
            SpaceExpr::Smash(a, b) => a.dim()? + b.dim()?,
            SpaceExpr::Sym(n, a) => n * a.dim()?,
            SpaceExpr::Susp(a) | SpaceExpr::Cone(a) => a.dim()? + 1,
            SpaceExpr::Load(path) => {
                let x = pss_json::read_file(path)?;
                x.geometric_dim().unwrap_or(x.dim_bound())
            }
        })
    }

    /// Builds the value with levels `0..=dim_bound`.
    pub fn eval(&self, dim_bound: usize) -> Result<PointedSimplicialSet> {
        Ok(match self {
            SpaceExpr::Sphere(n) => {
                if dim_bound < *n {
                    return Err(Error::Truncation {
                        needed: *n,
                        have: dim_bound,
                    });
                }
                sphere(*n, dim_bound)?
            }
            SpaceExpr::Point => point(dim_bound),
            SpaceExpr::Wedge(a, b) => wedge(&a.eval(dim_bound)?, &b.eval(dim_bound)?),
            SpaceExpr::Smash(a, b) => smash(&a.eval(dim_bound)?, &b.eval(dim_bound)?),
            SpaceExpr::Sym(0, _) => sphere(0, dim_bound)?,
            SpaceExpr::Sym(n, a) => sym_power(*n, &a.eval(dim_bound)?),
            SpaceExpr::Susp(a) => suspend(&a.eval(dim_bound)?),
            SpaceExpr::Cone(a) => cone(&a.eval(dim_bound)?).0,
            SpaceExpr::Load(path) => extend_levels(&pss_json::read_file(path)?, dim_bound)?,
        })
    }
}

impl InclusionExpr {
    pub fn target_dim(&self) -> Result<usize> {
        match self {
            InclusionExpr::Id(e) | InclusionExpr::Base(e) => e.dim(),
            InclusionExpr::WedgeLeft(a, b) => Ok(a.dim()?.max(b.dim()?)),
            InclusionExpr::ConeIncl(e) => Ok(e.dim()? + 1),
        }
    }

    pub fn eval(&self, dim_bound: usize) -> Result<Inclusion> {
        Ok(match self {
            InclusionExpr::Id(e) => Inclusion::identity(&e.eval(dim_bound)?),
            InclusionExpr::Base(e) => Inclusion::basepoint(&e.eval(dim_bound)?),
            InclusionExpr::WedgeLeft(a, b) => Inclusion::wedge_left(&a.eval(dim_bound)?, &b.eval(dim_bound)?),
            InclusionExpr::ConeIncl(e) => cone(&e.eval(dim_bound)?).1,
        })
    }
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceExpr::Sphere(n) => write!(f, "sphere({n})"),
            SpaceExpr::Point => write!(f, "point"),
            SpaceExpr::Wedge(a, b) => write!(f, "wedge({a}, {b})"),
            SpaceExpr::Smash(a, b) => write!(f, "smash({a}, {b})"),
            SpaceExpr::Sym(n, a) => write!(f, "sym({n}, {a})"),
            SpaceExpr::Susp(a) => write!(f, "susp({a})"),
            SpaceExpr::Cone(a) => write!(f, "cone({a})"),
            SpaceExpr::Load(p) => write!(f, "load({p:?})"),
        }
    }
}

impl fmt::Display for InclusionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InclusionExpr::Id(e) => write!(f, "id({e})"),
            InclusionExpr::Base(e) => write!(f, "base({e})"),
            InclusionExpr::WedgeLeft(a, b) => write!(f, "wedge_left({a}, {b})"),
            InclusionExpr::ConeIncl(e) => write!(f, "cone_incl({e})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{format_homology, reduced_homology};

    #[test]
    fn parses_examples() {
        let s = parse("sym(2, sphere(1))").unwrap();
        assert_eq!(s, Expr::Space(SpaceExpr::Sym(2, Box::new(SpaceExpr::Sphere(1)))));
        let i = parse(" wedge_left( sphere(1) , sphere(2) ) ").unwrap();
        assert_eq!(
            i,
            Expr::Inclusion(InclusionExpr::WedgeLeft(SpaceExpr::Sphere(1), SpaceExpr::Sphere(2)))
        );
        assert_eq!(parse_space("load(\"a b.json\")").unwrap(), SpaceExpr::Load("a b.json".into()));
        assert_eq!(parse_space("point()").unwrap(), SpaceExpr::Point);
    }

    #[test]
    fn reports_positions() {
        let pos = |t: &str| match parse(t) {
            Err(Error::Parse { pos, msg }) => (pos, msg),
            other => panic!("{other:?}"),
        };
        let (p, m) = pos("sym(-1, point)");
        assert_eq!(p, 4);
        assert!(m.contains("non-negative"));
        assert_eq!(pos("sphere(1, 2)").0, 0);
        assert_eq!(pos("wedge(point, torus(1))").0, 13);
        assert!(pos("torus(1)").1.contains("unknown constructor"));
        assert_eq!(pos("point point").0, 6);
        assert!(parse("sphere(1").is_err());
        assert!(parse_space("id(point)").is_err());
        assert!(parse_inclusion("point").is_err());
        assert!(parse_space("wedge(id(point), point)").is_err());
    }

    #[test]
    fn display_round_trips() {
        for t in ["sym(2, wedge(sphere(1), susp(point)))", "cone_incl(smash(sphere(0), cone(sphere(1))))"] {
            let e = parse(t).unwrap();
            let shown = match &e {
                Expr::Space(s) => s.to_string(),
                Expr::Inclusion(i) => i.to_string(),
            };
            assert_eq!(shown, t);
        }
    }

    #[test]
    fn dims_and_values() {
        let e = parse_space("sym(2, sphere(1))").unwrap();
        assert_eq!(e.dim().unwrap(), 2);
        assert_eq!(format_homology(&reduced_homology(&e.eval(3).unwrap()).unwrap()), "H̃_* = 0");
        let s0 = parse_space("sym(0, sphere(3))").unwrap().eval(1).unwrap();
        assert_eq!(format_homology(&reduced_homology(&s0).unwrap()), "H_0 = Z");
        assert!(matches!(
            parse_space("sphere(2)").unwrap().eval(1),
            Err(Error::Truncation { needed: 2, have: 1 })
        ));
        let i = parse_inclusion("cone_incl(sphere(1))").unwrap();
        assert_eq!(i.target_dim().unwrap(), 2);
        assert!(i.eval(2).unwrap().map().validate().is_ok());
    }

    #[test]
    fn load_extends_stored_levels() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s1.json");
        pss_json::write_file(&sphere(1, 1).unwrap(), &path).unwrap();
        let e = parse_space(&format!("sym(2, load({:?}))", path.to_str().unwrap())).unwrap();
        assert_eq!(e.dim().unwrap(), 2);
        let x = e.eval(2).unwrap();
        assert_eq!(format_homology(&reduced_homology(&x).unwrap()), "H̃_* = 0");
    }
}
