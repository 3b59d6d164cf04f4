//! Family-spec mini-grammar used on the command line.
//!
//! ```text
//! expr   := family ':' ints | 'osum(' expr (',' expr)+ ')' | 'dsum(' expr (',' expr)+ ')'
//!         | 'dual(' expr ')' | builtin
//! family := chain | antichain | ferrers | shifted | zigzag | N | M | minO
//! builtin:= jdt9 | twin5
//! ```

use super::{
    antichain, chain, ferrers, jdt9, m_poset, minuscule_ordinal, n_poset, shifted_ferrers, twin_fail5, zigzag,
    Partition, Poset, MAX_ELEMENTS,
};
use crate::error::{Error, Result};

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        match self.text[start..self.pos].parse::<usize>() {
            Ok(v) => Ok(v),
            Err(_) => Err(Error::Parse { pos: start, msg: "integer out of range".into() }),
        }
    }

    /// Integers separated by commas; a comma followed by a non-digit ends the list.
    fn ints(&mut self) -> Result<Vec<usize>> {
        let mut out = vec![self.int()?];
        loop {
            let save = self.pos;
            self.skip_ws();
            if self.peek() != Some(',') {
                self.pos = save;
                return Ok(out);
            }
            self.pos += 1;
            self.skip_ws();
            if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos = save;
                return Ok(out);
            }
            out.push(self.int()?);
        }
    }

    fn args(&mut self) -> Result<Vec<Poset>> {
        self.eat('(')?;
        let mut items = vec![self.expr()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.pos += 1;
                    items.push(self.expr()?);
                }
                Some(')') => {
                    self.pos += 1;
                    return Ok(items);
                }
                _ => return self.err("expected ',' or ')'"),
            }
        }
    }

    fn expr(&mut self) -> Result<Poset> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident();
        match name {
            "osum" | "dsum" => {
                let items = self.args()?;
                if items.len() < 2 {
                    return Err(Error::Parse { pos: start, msg: format!("{name} needs at least two operands") });
                }
                let total: usize = items.iter().map(Poset::len).sum();
                if total > MAX_ELEMENTS {
                    return Err(Error::Cap { what: "poset size", cap: MAX_ELEMENTS, got: total });
                }
                let mut it = items.into_iter();
                let first = it.next().expect("non-empty");
                Ok(it.fold(first, |acc, q| if name == "osum" { acc.ordinal_sum(&q) } else { acc.disjoint_union(&q) }))
            }
            "dual" => {
                let items = self.args()?;
                if items.len() != 1 {
                    return Err(Error::Parse { pos: start, msg: "dual takes one operand".into() });
                }
                Ok(items[0].dual())
            }
            "jdt9" => Ok(jdt9()),
            "twin5" => Ok(twin_fail5()),
            "" => self.err("expected a family name"),
            family => {
                self.eat(':')?;
                let arg_pos = self.pos;
                let args = self.ints()?;
                let wrong = |expected: &str| Error::Parse { pos: arg_pos, msg: format!("{family} takes {expected}") };
                let one = |args: &[usize]| if args.len() == 1 { Ok(args[0]) } else { Err(wrong("one integer")) };
                match family {
                    "chain" | "antichain" => {
                        let m = one(&args)?;
                        if m > MAX_ELEMENTS {
                            return Err(Error::Cap { what: "poset size", cap: MAX_ELEMENTS, got: m });
                        }
                        Ok(if family == "chain" { chain(m) } else { antichain(m) })
                    }
                    "ferrers" => ferrers(&Partition::new(args)?),
                    "shifted" => {
                        let shape = Partition::new(args.clone()).map_err(|_| Error::Strictness(args))?;
                        shifted_ferrers(&shape)
                    }
                    "zigzag" => zigzag(one(&args)?),
                    "minO" => minuscule_ordinal(one(&args)?),
                    "N" => match args[..] {
                        [a, b, c] => n_poset(a, b, c),
                        _ => Err(wrong("three integers")),
                    },
                    "M" => match args[..] {
                        [a, b] => m_poset(a, b),
                        _ => Err(wrong("two integers")),
                    },
                    _ => Err(Error::Parse { pos: start, msg: format!("unknown family {family:?}") }),
                }
            }
        }
    }
}

/// Parses strings such as `"ferrers:3,2"` or `"osum(antichain:3,chain:1)"`.
pub fn parse_family_spec(text: &str) -> Result<Poset> {
    let mut p = Parser { text, pos: 0 };
    let poset = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return p.err("trailing input");
    }
    Ok(poset)
}
