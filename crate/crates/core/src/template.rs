//! Parameter substitution for catalog families.
//!
//! A family string such as `SU({m-2})xT^1` has `{...}` holes holding integer
//! expressions in the family parameters (`+ - * %`, parentheses, implicit
//! multiplication as in `2m`). Instance ids look like `su-block[m=5]`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

pub type Params = BTreeMap<String, i64>;

/// Replace every `{expr}` in `s`. The literal `{e}` (trivial group) is kept.
pub fn substitute(s: &str, params: &Params) -> Result<String> {
    let mut out = String::with_capacity(s.len());
    let mut rest = s;
    while let Some(open) = rest.find('{') {
        out.push_str(&rest[..open]);
        let close = rest[open..]
            .find('}')
            .map(|c| open + c)
            .ok_or_else(|| Error::Catalog(format!("unclosed brace in `{s}`")))?;
        let body = &rest[open + 1..close];
        if body == "e" && !params.contains_key("e") {
            out.push_str("{e}");
        } else {
            out.push_str(&eval(body, params)?.to_string());
        }
        rest = &rest[close + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

/// Evaluate an integer expression.
pub fn eval(expr: &str, params: &Params) -> Result<i64> {
    let tokens = tokenize(expr)?;
    let mut p = Parser {
        tokens: &tokens,
        pos: 0,
        params,
        src: expr,
    };
    let v = p.sum()?;
    if p.pos != tokens.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let n: String = chars[start..i].iter().collect();
            out.push(Tok::Num(n.parse().map_err(|_| {
                Error::Catalog(format!("number out of range in `{s}`"))
            })?));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/%()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Catalog(format!("unexpected `{c}` in `{s}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Tok],
    pos: usize,
    params: &'a Params,
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Catalog(format!("{what} in expression `{}`", self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn sum(&mut self) -> Result<i64> {
        let mut v = self.product()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.product()?;
            v = if c == '+' { v + rhs } else { v - rhs };
        }
        Ok(v)
    }

    fn product(&mut self) -> Result<i64> {
        let mut v = self.unary()?;
        loop {
            match self.peek().cloned() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    v *= self.unary()?;
                }
                Some(Tok::Op(c @ ('/' | '%'))) => {
                    self.pos += 1;
                    let m = self.unary()?;
                    if m == 0 {
                        return Err(self.error("division by zero"));
                    }
                    v = if c == '/' {
                        v.div_euclid(m)
                    } else {
                        v.rem_euclid(m)
                    };
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')) => {
                    v *= self.unary()?;
                }
                _ => return Ok(v),
            }
        }
    }

    fn unary(&mut self) -> Result<i64> {
        match self.peek().cloned() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(n)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.params
                    .get(&name)
                    .copied()
                    .ok_or_else(|| self.error(&format!("unknown parameter `{name}`")))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(self.error("missing `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.error("expected a term")),
        }
    }
}

/// Split `family[a=1,b=-3]` into the family name and its parameters.
pub fn parse_instance_id(id: &str) -> Result<(String, Params)> {
    let id = id.trim();
    let Some(open) = id.find('[') else {
        return Ok((id.to_string(), Params::new()));
    };
    let body = id[open + 1..]
        .strip_suffix(']')
        .ok_or_else(|| Error::Catalog(format!("malformed instance id `{id}`")))?;
    let mut params = Params::new();
    for kv in body.split(',').filter(|s| !s.trim().is_empty()) {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::Catalog(format!("malformed parameter `{kv}` in `{id}`")))?;
        let v: i64 = v
            .trim()
            .parse()
            .map_err(|_| Error::Catalog(format!("non-integer parameter `{kv}` in `{id}`")))?;
        if params.insert(k.trim().to_string(), v).is_some() {
            return Err(Error::Catalog(format!(
                "repeated parameter `{k}` in `{id}`"
            )));
        }
    }
    Ok((id[..open].to_string(), params))
}

/// Render an instance id with parameters in the given order.
pub fn instance_id(family: &str, order: &[String], params: &Params) -> String {
    if order.is_empty() {
        return family.to_string();
    }
    let body: Vec<String> = order
        .iter()
        .map(|k| format!("{k}={}", params.get(k).copied().unwrap_or(0)))
        .collect();
    format!("{family}[{}]", body.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(kv: &[(&str, i64)]) -> Params {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn affine_expressions() {
        let p = params(&[("m", 5), ("d", 3)]);
        assert_eq!(eval("2m+1", &p).unwrap(), 11);
        assert_eq!(eval("2*m - 3", &p).unwrap(), 7);
        assert_eq!(eval("1 + d % 2", &p).unwrap(), 2);
        assert_eq!(eval("-(m-7)", &p).unwrap(), 2);
        assert_eq!(eval("2 - 1/(m-4)", &p).unwrap(), 1);
        assert_eq!(eval("-7/2", &p).unwrap(), -4);
        assert!(eval("m/(d-3)", &p).is_err());
        assert!(eval("q", &p).is_err());
        assert!(eval("m)", &p).is_err());
    }

    #[test]
    fn substitution() {
        let p = params(&[("m", 4)]);
        assert_eq!(substitute("SU({m})xSU({m-2})", &p).unwrap(), "SU(4)xSU(2)");
        assert_eq!(substitute("{e}", &p).unwrap(), "{e}");
        assert!(substitute("SU({m", &p).is_err());
    }

    #[test]
    fn instance_ids() {
        let (f, p) = parse_instance_id("brieskorn-kminus[m=6, d=-4]").unwrap();
        assert_eq!(f, "brieskorn-kminus");
        assert_eq!(p, params(&[("m", 6), ("d", -4)]));
        let order = vec!["m".to_string(), "d".to_string()];
        assert_eq!(instance_id(&f, &order, &p), "brieskorn-kminus[m=6,d=-4]");
        assert_eq!(parse_instance_id("g2-in-spin7").unwrap().1, Params::new());
        assert!(parse_instance_id("x[m=1").is_err());
        assert!(parse_instance_id("x[m=a]").is_err());
    }
}
