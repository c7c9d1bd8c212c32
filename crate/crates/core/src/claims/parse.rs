//! Recursive-descent parser for ledger files.
//!
//! Predicates bind loosest to tightest as `=>` (right associative), `or`,
//! `and`, then `not`/`!( )`. Expressions use the usual precedence with `^`
//! right associative and binding tighter than unary minus.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use thiserror::Error;

use super::ast::*;
use crate::degrees::Witness;
use crate::groups::{build, scan_head, Head};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: duplicate claim id {id}")]
    DuplicateId { id: String, line: usize },
    #[error("line {line}, column {col}: parameter {param} in {id} is not bound by a quantifier")]
    UnboundParameter {
        id: String,
        param: char,
        line: usize,
        col: usize,
    },
}

type PResult<T> = Result<T, ParseError>;

/// Parses a ledger into its entries, in file order.
pub fn parse_ledger(text: &str) -> PResult<Vec<Claim>> {
    let mut p = Parser {
        src: text,
        pos: 0,
        bound: Vec::new(),
        entry: String::new(),
    };
    let mut claims = Vec::new();
    let mut ids = BTreeSet::new();
    loop {
        let comments = p.skip_ws();
        if p.pos == p.src.len() {
            break;
        }
        let claim = p.entry(comments)?;
        if !ids.insert(claim.id.clone()) {
            return Err(ParseError::DuplicateId {
                id: claim.id,
                line: claim.line,
            });
        }
        claims.push(claim);
    }
    Ok(claims)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    /// Parameters bound by the current entry's quantifiers.
    bound: Vec<char>,
    entry: String,
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn line_col(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, col)
    }

    fn error_at<T>(&self, pos: usize, msg: impl Into<String>) -> PResult<T> {
        let (line, col) = self.line_col(pos);
        Err(ParseError::Syntax {
            line,
            col,
            msg: msg.into(),
        })
    }

    fn error<T>(&self, msg: impl Into<String>) -> PResult<T> {
        self.error_at(self.pos, msg)
    }

    /// Skips whitespace and `#` comments, returning the comment texts of the
    /// last run not separated by a blank line.
    fn skip_ws(&mut self) -> Vec<String> {
        let mut comments = Vec::new();
        let mut newlines = 0;
        while let Some(c) = self.peek() {
            if c == '\n' {
                newlines += 1;
                if newlines > 1 {
                    comments.clear();
                }
                self.pos += 1;
            } else if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else if c == '#' {
                let end = self.rest().find('\n').map_or(self.src.len(), |i| self.pos + i);
                comments.push(self.src[self.pos + 1..end].trim().to_string());
                self.pos = end;
                newlines = 0;
            } else {
                break;
            }
        }
        comments
    }

    fn at(&mut self, tok: &str) -> bool {
        self.skip_ws();
        self.rest().starts_with(tok)
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.at(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> PResult<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            let found: String = self.rest().chars().take(12).collect();
            self.error(format!("expected '{tok}', found '{found}'"))
        }
    }

    fn at_word(&mut self, word: &str) -> bool {
        self.at(word)
            && !self.rest()[word.len()..]
                .chars()
                .next()
                .is_some_and(is_ident_char)
    }

    fn eat_word(&mut self, word: &str) -> bool {
        if self.at_word(word) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        if !rest.starts_with(|c: char| c.is_ascii_alphabetic()) {
            return None;
        }
        let len = rest.find(|c: char| !is_ident_char(c)).unwrap_or(rest.len());
        self.pos += len;
        Some(&rest[..len])
    }

    fn integer(&mut self) -> PResult<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.rest().starts_with('-');
        let digits_from = start + neg as usize;
        let len = self.src[digits_from..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.src.len() - digits_from);
        if len == 0 {
            return self.error("expected an integer");
        }
        self.pos = digits_from + len;
        Ok(self.src[start..self.pos].parse().expect("validated digits"))
    }

    fn small<T: TryFrom<BigInt>>(&mut self, what: &str) -> PResult<T> {
        let start = self.pos;
        let v = self.integer()?;
        T::try_from(v).or_else(|_| self.error_at(start, format!("{what} out of range")))
    }

    fn entry(&mut self, comments: Vec<String>) -> PResult<Claim> {
        let (line, _) = self.line_col(self.pos);
        let kind = if self.eat_word("claim") {
            ClaimKind::Claim
        } else if self.eat_word("axiom") {
            ClaimKind::Axiom
        } else {
            return self.error("expected 'claim' or 'axiom'");
        };
        self.skip_ws();
        let rest = self.rest();
        let id_len = rest
            .find(|c: char| !(is_ident_char(c) || c == '.' || c == '-'))
            .unwrap_or(rest.len());
        if id_len == 0 {
            return self.error("expected a claim id");
        }
        let id = rest[..id_len].to_string();
        self.pos += id_len;
        self.entry = id.clone();
        let anchor = self.quoted()?;
        self.bound.clear();
        let mut quantifiers = Vec::new();
        while self.eat_word("forall") {
            let at = self.pos;
            let param = match self.ident() {
                Some(name) if name.len() == 1 => name.chars().next().expect("one char"),
                _ => return self.error_at(at, "expected a single-letter parameter"),
            };
            if self.bound.contains(&param) {
                return self.error_at(at, format!("parameter {param} is bound twice"));
            }
            if !self.eat_word("in") {
                return self.error("expected 'in'");
            }
            let domain = self.domain()?;
            self.bound.push(param);
            quantifiers.push(Quantifier { param, domain });
        }
        self.expect(":")?;
        let predicate = self.pred()?;
        self.skip_ws();
        if self.pos < self.src.len() && !self.at_word("claim") && !self.at_word("axiom") {
            return self.error("unexpected input after predicate");
        }
        if kind == ClaimKind::Claim && contains_external(&predicate) {
            return self.error_at(self.pos, format!("claim {id} uses external(), which only axioms may"));
        }
        Ok(Claim {
            id,
            kind,
            anchor,
            description: comments.join(" "),
            quantifiers,
            predicate,
            line,
        })
    }

    fn quoted(&mut self) -> PResult<String> {
        self.expect("\"")?;
        let mut out = String::new();
        let mut chars = self.rest().char_indices();
        while let Some((i, c)) = chars.next() {
            match c {
                '"' => {
                    self.pos += i + 1;
                    return Ok(out);
                }
                '\\' => match chars.next() {
                    Some((_, e)) => out.push(e),
                    None => break,
                },
                '\n' => break,
                c => out.push(c),
            }
        }
        self.error("unterminated string")
    }

    fn interval<T: TryFrom<BigInt>>(&mut self) -> PResult<(T, T)>
    where
        T: PartialOrd,
    {
        self.expect("[")?;
        let lo = self.small("lower bound")?;
        self.expect("..")?;
        let hi_at = self.pos;
        let hi = self.small("upper bound")?;
        self.expect("]")?;
        if lo > hi {
            return self.error_at(hi_at, "empty domain");
        }
        Ok((lo, hi))
    }

    fn domain(&mut self) -> PResult<Domain> {
        if self.at("[") {
            let (lo, hi) = self.interval()?;
            return Ok(Domain::Range { lo, hi });
        }
        let at = self.pos;
        match self.ident() {
            Some("primepowers") => {
                let (lo, hi) = self.interval()?;
                Ok(Domain::PrimePowers { lo, hi })
            }
            Some("primes") => {
                let (lo, hi) = self.interval()?;
                Ok(Domain::Primes { lo, hi })
            }
            Some("powersof") => {
                self.expect("(")?;
                let base_at = self.pos;
                let base: u64 = self.small("base")?;
                if !crate::arith::is_prime_u64(base) {
                    return self.error_at(base_at, format!("powersof() needs a prime, got {base}"));
                }
                self.expect(")")?;
                let (lo, hi) = self.interval()?;
                Ok(Domain::PowersOf { base, lo, hi })
            }
            _ => self.error_at(at, "expected a domain"),
        }
    }

    fn pred(&mut self) -> PResult<Pred> {
        let left = self.disjunction()?;
        if self.eat("=>") {
            let right = self.pred()?;
            return Ok(Pred::Implies(Box::new(left), Box::new(right)));
        }
        Ok(left)
    }

    fn disjunction(&mut self) -> PResult<Pred> {
        let mut left = self.conjunction()?;
        while self.eat_word("or") {
            let right = self.conjunction()?;
            left = Pred::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> PResult<Pred> {
        let mut left = self.pred_unary()?;
        while self.eat_word("and") {
            let right = self.pred_unary()?;
            left = Pred::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn pred_unary(&mut self) -> PResult<Pred> {
        if self.eat_word("not") {
            return Ok(Pred::Not(Box::new(self.pred_unary()?)));
        }
        if self.eat("!(") {
            let inner = self.pred()?;
            self.expect(")")?;
            return Ok(Pred::Not(Box::new(inner)));
        }
        let save = self.pos;
        let negated = self.eat("!");
        let atom = if self.at_word("divides") {
            self.eat_word("divides");
            self.expect("(")?;
            let a = self.expr()?;
            self.expect(",")?;
            let b = self.expr()?;
            self.expect(")")?;
            Some(Pred::Divides(a, b))
        } else if self.at_word("subset") {
            self.eat_word("subset");
            self.expect("(")?;
            let a = self.pi()?;
            self.expect(",")?;
            let b = self.pi()?;
            self.expect(")")?;
            Some(Pred::Subset(a, b))
        } else if self.at_word("member") {
            self.eat_word("member");
            self.expect("(")?;
            let x = self.expr()?;
            self.expect(",")?;
            let g = self.pi()?;
            self.expect(")")?;
            Some(Pred::Member(x, g))
        } else if !negated && self.at_word("external") {
            self.eat_word("external");
            self.expect("(")?;
            let text = self.quoted()?;
            self.expect(")")?;
            Some(Pred::External(text))
        } else {
            None
        };
        match atom {
            Some(p) if negated => return Ok(Pred::Not(Box::new(p))),
            Some(p) => return Ok(p),
            None if negated => return self.error_at(save, "expected divides, subset or member after '!'"),
            None => {}
        }
        if self.at("(") {
            if let Some(p) = self.try_parenthesized_pred() {
                return Ok(p);
            }
        }
        self.comparison()
    }

    /// Parses `( pred )` when the parenthesis encloses a whole predicate;
    /// otherwise rewinds so the text can be read as an expression.
    fn try_parenthesized_pred(&mut self) -> Option<Pred> {
        let save = self.pos;
        self.eat("(");
        if let Ok(p) = self.pred() {
            if self.eat(")") {
                let next = self.rest().trim_start();
                let continues_expr = !next.starts_with("=>")
                    && next.starts_with(['+', '-', '*', '/', '^', '=', '<', '>', '!']);
                if !continues_expr {
                    return Some(p);
                }
            }
        }
        self.pos = save;
        None
    }

    fn comparison(&mut self) -> PResult<Pred> {
        let left = self.expr()?;
        self.skip_ws();
        let ops = [
            ("<=", RelOp::Le),
            (">=", RelOp::Ge),
            ("!=", RelOp::Ne),
            ("<", RelOp::Lt),
            (">", RelOp::Gt),
            ("=", RelOp::Eq),
        ];
        let op = ops
            .iter()
            .find(|(tok, _)| self.rest().starts_with(tok) && !(*tok == "=" && self.rest().starts_with("=>")))
            .copied();
        let Some((tok, op)) = op else {
            return self.error("expected a relation (=, !=, <, <=, >, >=)");
        };
        self.pos += tok.len();
        let right = self.expr()?;
        Ok(Pred::Compare(op, left, right))
    }

    fn pi(&mut self) -> PResult<GroupTemplate> {
        if !self.eat_word("pi") {
            return self.error("expected pi(...)");
        }
        self.expect("(")?;
        let g = self.group()?;
        self.expect(")")?;
        Ok(g)
    }

    fn group(&mut self) -> PResult<GroupTemplate> {
        self.skip_ws();
        let start = self.pos;
        let Some((head, len)) = scan_head(self.rest()) else {
            return self.error("expected a group name");
        };
        self.pos += len;
        let head = match head {
            Head::Fixed(g) => return Ok(GroupTemplate::Fixed(g)),
            Head::Family(h) => h,
        };
        let mut args = Vec::new();
        if !(head.is_complete() && self.peek() != Some('(')) {
            self.expect("(")?;
            args.push(self.expr()?);
            while self.eat(",") {
                args.push(self.expr()?);
            }
            self.expect(")")?;
        }
        let literal: Option<Vec<u64>> = args
            .iter()
            .map(|a| match a {
                Expr::Int(v) => u64::try_from(v).ok(),
                _ => None,
            })
            .collect();
        match literal {
            Some(values) => match build(head, &values) {
                Ok(g) => Ok(GroupTemplate::Fixed(g)),
                Err(e) => self.error_at(start, e.to_string()),
            },
            None => Ok(GroupTemplate::Family { head, args }),
        }
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut left = self.term()?;
        loop {
            let op = if self.eat("+") {
                BinOp::Add
            } else if self.at("-") && !self.at("->") {
                self.eat("-");
                BinOp::Sub
            } else {
                return Ok(left);
            };
            let right = self.term()?;
            left = Expr::Bin(op, Box::new(left), Box::new(right));
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut left = self.unary()?;
        loop {
            let op = if self.eat("*") {
                BinOp::Mul
            } else if self.eat("/") {
                BinOp::Div
            } else {
                return Ok(left);
            };
            let right = self.unary()?;
            left = Expr::Bin(op, Box::new(left), Box::new(right));
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        if self.eat("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat("^") {
            let exp = self.unary()?;
            return Ok(Expr::Bin(BinOp::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<Expr> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => return Ok(Expr::Int(self.integer()?)),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(")")?;
                return Ok(e);
            }
            _ => {}
        }
        let Some(name) = self.ident() else {
            return self.error("expected an expression");
        };
        if self.peek() != Some('(') {
            let mut chars = name.chars();
            return match (chars.next(), chars.next()) {
                (Some(c), None) if self.bound.contains(&c) => Ok(Expr::Param(c)),
                (Some(c), None) => {
                    let (line, col) = self.line_col(start);
                    Err(ParseError::UnboundParameter {
                        id: self.entry.clone(),
                        param: c,
                        line,
                        col,
                    })
                }
                _ => self.error_at(start, format!("unknown identifier '{name}'")),
            };
        }
        self.pos += 1;
        let expr = if let Some(f) = GroupFunc::from_name(name) {
            Expr::Group(f, self.group()?)
        } else if name == "bound" {
            let key_at = self.pos;
            let key = self.ident_with_digits()?;
            if crate::degrees::bound_constant(&key).is_err() {
                return self.error_at(key_at, format!("unknown bound constant {key}"));
            }
            Expr::Bound(key)
        } else if name == "wdeg" {
            let at = self.pos;
            let wname = self.ident_with_digits()?;
            let w = Witness::from_name(&wname).or_else(|e| self.error_at(at, e.to_string()))?;
            let mut args = Vec::new();
            while self.eat(",") {
                args.push(self.expr()?);
            }
            if args.len() != w.params().len() {
                return self.error_at(at, format!("{w} takes ({})", w.params().join(", ")));
            }
            Expr::Witness(w, args)
        } else if let Some(f) = Func::from_name(name) {
            let mut args = vec![self.expr()?];
            while self.eat(",") {
                args.push(self.expr()?);
            }
            if args.len() != f.arity() {
                return self.error_at(start, format!("{name} takes {} argument(s)", f.arity()));
            }
            Expr::Call(f, args)
        } else {
            return self.error_at(start, format!("unknown function '{name}'"));
        };
        self.expect(")")?;
        Ok(expr)
    }

    /// Identifier that may start with a letter and contain digits and `_`,
    /// as in `phi_7_1` or `d2_3D4_3`.
    fn ident_with_digits(&mut self) -> PResult<String> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest.find(|c: char| !is_ident_char(c)).unwrap_or(rest.len());
        if len == 0 {
            return self.error("expected a name");
        }
        self.pos += len;
        Ok(rest[..len].to_string())
    }
}

fn contains_external(p: &Pred) -> bool {
    match p {
        Pred::External(_) => true,
        Pred::Not(a) => contains_external(a),
        Pred::And(a, b) | Pred::Or(a, b) | Pred::Implies(a, b) => {
            contains_external(a) || contains_external(b)
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_claim() {
        let claims = parse_ledger("claim c1 \"anchor\" forall n in [1..100]: n*(n-1) != 36").unwrap();
        assert_eq!(claims.len(), 1);
        assert_eq!(claims[0].quantifiers.len(), 1);
        assert_eq!(claims[0].anchor, "anchor");
        assert!(matches!(claims[0].predicate, Pred::Compare(RelOp::Ne, _, _)));
    }

    #[test]
    fn unbound_parameter() {
        let err = parse_ledger("claim c1 \"a\" forall n in [1..3]: n*m != 36").unwrap_err();
        assert_eq!(
            err,
            ParseError::UnboundParameter {
                id: "c1".into(),
                param: 'm',
                line: 1,
                col: 36
            }
        );
    }

    #[test]
    fn duplicate_id() {
        let text = "claim a \"x\": 1 = 1\nclaim a \"y\": 2 = 2\n";
        assert_eq!(
            parse_ledger(text).unwrap_err(),
            ParseError::DuplicateId { id: "a".into(), line: 2 }
        );
    }

    #[test]
    fn syntax_error_position() {
        let text = "# header\nclaim a \"x\" forall q in primepowers[2..9]:\n  q +* 2 = 3\n";
        match parse_ledger(text).unwrap_err() {
            ParseError::Syntax { line, col, .. } => assert_eq!((line, col), (3, 6)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn predicates_and_templates() {
        let text = r#"
# Suzuki fields only
claim b "x" forall m in [1..3]:
  !subset(pi(2B2(2^(2*m+1))), pi(G2(3))) and (m >= 1 => member(l(2, 4), pi(A(5))))
axiom c "y": external("cited")
claim d "z" forall q in powersof(3)[1..3] forall n in [2..4]:
  (q + 1) * 2 > n or divides(ppart(order(L(n, q)), 3), q^6)
"#;
        let claims = parse_ledger(text).unwrap();
        assert_eq!(claims.len(), 3);
        assert_eq!(claims[0].description, "Suzuki fields only");
        assert_eq!(claims[1].kind, ClaimKind::Axiom);
        assert!(matches!(claims[0].predicate, Pred::And(_, _)));
        assert!(matches!(claims[2].predicate, Pred::Or(_, _)));
    }

    #[test]
    fn literal_groups_validated_at_parse_time() {
        let err = parse_ledger("claim a \"x\": subset(pi(S4(2)), pi(A(6)))").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { .. }), "{err:?}");
        let err = parse_ledger("claim a \"x\": external(\"t\")").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { .. }));
    }
}
