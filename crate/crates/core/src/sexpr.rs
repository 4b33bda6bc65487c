//! Reader and printer for S-expressions.
//!
//! An S-expression is a word, an unsigned integer, or a parenthesized list of
//! S-expressions. Words are maximal runs of characters other than parentheses
//! and whitespace; a token made entirely of digits is always a number atom.
//! `'` is not reader syntax: `(' (a b c))` is an ordinary two-element list
//! whose head is the word `'`.

use num_bigint::BigUint;
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum SExpr {
    /// A word atom. Never starts with a digit, never empty.
    Word(String),
    /// An unsigned arbitrary-precision integer atom.
    Num(BigUint),
    /// A list; `List(vec![])` is the empty list `()`, which counts as atomic.
    List(Vec<SExpr>),
}

impl SExpr {
    pub fn word(w: impl Into<String>) -> SExpr {
        SExpr::Word(w.into())
    }

    pub fn num(n: u64) -> SExpr {
        SExpr::Num(BigUint::from(n))
    }

    pub fn list(elems: Vec<SExpr>) -> SExpr {
        SExpr::List(elems)
    }

    pub fn nil() -> SExpr {
        SExpr::List(Vec::new())
    }

    /// Words, numbers, and the empty list are atoms.
    pub fn is_atom(&self) -> bool {
        match self {
            SExpr::Word(_) | SExpr::Num(_) => true,
            SExpr::List(elems) => elems.is_empty(),
        }
    }
}

impl fmt::Display for SExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SExpr::Word(w) => f.write_str(w),
            SExpr::Num(n) => write!(f, "{n}"),
            SExpr::List(elems) => {
                f.write_str("(")?;
                for (i, e) in elems.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{e}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for SExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input: no expression found")]
    EmptyInput,
    #[error("unbalanced parentheses")]
    UnbalancedParens,
    #[error("trailing input after the first expression")]
    TrailingInput,
    #[error("invalid token {0:?}: a token starting with a digit must be all digits")]
    InvalidToken(String),
}

/// Canonical printed form: single spaces between siblings, none next to parens.
pub fn print(expr: &SExpr) -> String {
    expr.to_string()
}

/// Parse exactly one S-expression; surrounding whitespace is permitted.
pub fn parse(text: &str) -> Result<SExpr, ParseError> {
    let tokens = tokenize(text)?;
    let mut pos = 0;
    if pos == tokens.len() {
        return Err(ParseError::EmptyInput);
    }
    let expr = parse_expr(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(ParseError::TrailingInput);
    }
    Ok(expr)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Open,
    Close,
    Atom(SExpr),
}

fn classify_token(tok: &str) -> Result<SExpr, ParseError> {
    let mut chars = tok.chars();
    let first = chars.next().expect("tokens are nonempty");
    if first.is_ascii_digit() {
        if tok.chars().all(|c| c.is_ascii_digit()) {
            // Leading zeros are accepted on input; the canonical print form
            // drops them.
            let n = tok
                .bytes()
                .fold(BigUint::zero(), |acc, d| acc * 10u32 + (d - b'0'));
            Ok(SExpr::Num(n))
        } else {
            Err(ParseError::InvalidToken(tok.to_string()))
        }
    } else {
        Ok(SExpr::Word(tok.to_string()))
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut word = String::new();
    let mut flush = |word: &mut String, tokens: &mut Vec<Token>| -> Result<(), ParseError> {
        if !word.is_empty() {
            tokens.push(Token::Atom(classify_token(word)?));
            word.clear();
        }
        Ok(())
    };
    for c in text.chars() {
        match c {
            '(' => {
                flush(&mut word, &mut tokens)?;
                tokens.push(Token::Open);
            }
            ')' => {
                flush(&mut word, &mut tokens)?;
                tokens.push(Token::Close);
            }
            c if c.is_whitespace() => flush(&mut word, &mut tokens)?,
            c => word.push(c),
        }
    }
    flush(&mut word, &mut tokens)?;
    Ok(tokens)
}

fn parse_expr(tokens: &[Token], pos: &mut usize) -> Result<SExpr, ParseError> {
    match &tokens[*pos] {
        Token::Atom(a) => {
            *pos += 1;
            Ok(a.clone())
        }
        Token::Close => Err(ParseError::UnbalancedParens),
        Token::Open => {
            *pos += 1;
            let mut elems = Vec::new();
            loop {
                match tokens.get(*pos) {
                    None => return Err(ParseError::UnbalancedParens),
                    Some(Token::Close) => {
                        *pos += 1;
                        return Ok(SExpr::List(elems));
                    }
                    Some(_) => elems.push(parse_expr(tokens, pos)?),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_the_nested_product_sum() {
        let e = parse("(+ (* a b) (* c d))").unwrap();
        assert_eq!(
            e,
            SExpr::list(vec![
                SExpr::word("+"),
                SExpr::list(vec![SExpr::word("*"), SExpr::word("a"), SExpr::word("b")]),
                SExpr::list(vec![SExpr::word("*"), SExpr::word("c"), SExpr::word("d")]),
            ])
        );
    }

    #[test]
    fn single_number_token() {
        assert_eq!(parse("0").unwrap(), SExpr::num(0));
        assert_eq!(parse("  42  ").unwrap(), SExpr::num(42));
        assert_eq!(parse("007").unwrap(), SExpr::num(7));
    }

    #[test]
    fn nested_lists() {
        assert_eq!(
            parse("((1 2) 3)").unwrap(),
            SExpr::list(vec![
                SExpr::list(vec![SExpr::num(1), SExpr::num(2)]),
                SExpr::num(3)
            ])
        );
    }

    #[test]
    fn quote_is_an_ordinary_word() {
        let e = parse("(' (a b c))").unwrap();
        match &e {
            SExpr::List(elems) => {
                assert_eq!(elems.len(), 2);
                assert_eq!(elems[0], SExpr::word("'"));
            }
            _ => panic!("expected a list"),
        }
    }

    #[test]
    fn canonical_print() {
        assert_eq!(
            print(&SExpr::list(vec![SExpr::num(1), SExpr::num(2), SExpr::num(3)])),
            "(1 2 3)"
        );
        assert_eq!(print(&SExpr::nil()), "()");
        assert_eq!(print(&SExpr::num(120)), "120");
    }

    #[test]
    fn error_cases() {
        assert_eq!(parse(""), Err(ParseError::EmptyInput));
        assert_eq!(parse("   "), Err(ParseError::EmptyInput));
        assert_eq!(parse("(a b"), Err(ParseError::UnbalancedParens));
        assert_eq!(parse(")"), Err(ParseError::UnbalancedParens));
        assert_eq!(parse("a b"), Err(ParseError::TrailingInput));
        assert_eq!(parse("(a) b"), Err(ParseError::TrailingInput));
        assert_eq!(parse("2x"), Err(ParseError::InvalidToken("2x".into())));
    }

    #[test]
    fn empty_list_is_atomic() {
        assert!(SExpr::nil().is_atom());
        assert!(SExpr::word("w").is_atom());
        assert!(SExpr::num(3).is_atom());
        assert!(!parse("(a)").unwrap().is_atom());
    }

    pub(crate) fn arb_sexpr() -> impl Strategy<Value = SExpr> {
        let word = proptest::string::string_regex("[a-z+*=^'][a-z0-9'*+^=-]{0,5}")
            .unwrap()
            .prop_map(SExpr::Word);
        let num = any::<u64>().prop_map(SExpr::num);
        let leaf = prop_oneof![word, num, Just(SExpr::nil())];
        leaf.prop_recursive(4, 48, 6, |inner| {
            proptest::collection::vec(inner, 1..6).prop_map(SExpr::List)
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(e in arb_sexpr()) {
            let printed = print(&e);
            prop_assert_eq!(parse(&printed).unwrap(), e);
        }

        #[test]
        fn reprint_is_idempotent(s in "[a-z0-9() ']{0,40}") {
            if let Ok(e) = parse(&s) {
                let once = print(&e);
                let twice = print(&parse(&once).unwrap());
                prop_assert_eq!(once, twice);
            }
        }

        #[test]
        fn parse_is_total(s in "\\PC{0,40}") {
            // Any input either parses or produces exactly one of the
            // documented errors; no panic, no other outcome.
            match parse(&s) {
                Ok(_) => {}
                Err(ParseError::EmptyInput)
                | Err(ParseError::UnbalancedParens)
                | Err(ParseError::TrailingInput)
                | Err(ParseError::InvalidToken(_)) => {}
            }
        }
    }
}
