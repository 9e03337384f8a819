//! Lossless Java tokenizer.
//!
//! Lexes Java source at the Java-8 lexical level into a flat token stream
//! that preserves every byte of the input: whitespace, newlines, and
//! comments are first-class tokens, so concatenating all token texts
//! reproduces the source exactly. Generic angle brackets are emitted as
//! plain operators; disambiguation happens downstream.

use crate::error::{Error, Result};

/// Lexical class of a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Keyword,
    Identifier,
    /// Any numeric literal without a long suffix (int, hex, float, double).
    LiteralInt,
    /// Integer literal carrying an `l`/`L` suffix.
    LiteralLong,
    LiteralString,
    LiteralChar,
    Operator,
    Separator,
    Comment,
    /// Horizontal whitespace (spaces, tabs, form feeds) without newlines.
    Whitespace,
    /// One line terminator: `\n`, `\r`, or `\r\n`.
    Newline,
}

/// One lexical token with its exact source slice and 1-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub line: usize,
    pub column: usize,
}

impl Token {
    pub fn is_trivia(&self) -> bool {
        matches!(
            self.kind,
            TokenKind::Whitespace | TokenKind::Newline | TokenKind::Comment
        )
    }
}

const KEYWORDS: &[&str] = &[
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const",
    "continue", "default", "do", "double", "else", "enum", "extends", "final", "finally", "float",
    "for", "goto", "if", "implements", "import", "instanceof", "int", "interface", "long",
    "native", "new", "package", "private", "protected", "public", "return", "short", "static",
    "strictfp", "super", "switch", "synchronized", "this", "throw", "throws", "transient", "try",
    "void", "volatile", "while", "true", "false", "null",
];

/// Multi-character operators, longest first so maximal munch works by scan order.
const OPERATORS: &[&str] = &[
    ">>>=", ">>>", ">>=", "<<=", "->", "::", "==", "!=", "<=", ">=", "&&", "||", "++", "--",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>", "+", "-", "*", "/", "%", "&",
    "|", "^", "!", "~", "=", "<", ">", "?", ":",
];

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    column: usize,
    tokens: Vec<Token>,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src,
            bytes: src.as_bytes(),
            pos: 0,
            line: 1,
            column: 1,
            tokens: Vec::new(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn peek_at(&self, off: usize) -> Option<u8> {
        self.bytes.get(self.pos + off).copied()
    }

    fn emit(&mut self, kind: TokenKind, start: usize) {
        let text = &self.src[start..self.pos];
        self.tokens.push(Token {
            kind,
            text: text.to_string(),
            line: self.line,
            column: self.column,
        });
        // Advance the line/column cursor over the emitted text.
        let mut chars = text.chars().peekable();
        while let Some(ch) = chars.next() {
            match ch {
                '\r' => {
                    if chars.peek() == Some(&'\n') {
                        chars.next();
                    }
                    self.line += 1;
                    self.column = 1;
                }
                '\n' => {
                    self.line += 1;
                    self.column = 1;
                }
                _ => self.column += 1,
            }
        }
    }

    fn bump(&mut self, n: usize) {
        self.pos += n;
    }

    fn eat_while(&mut self, pred: impl Fn(u8) -> bool) {
        while let Some(b) = self.peek() {
            if pred(b) {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn lex_newline(&mut self) {
        let start = self.pos;
        if self.peek() == Some(b'\r') {
            self.bump(1);
            if self.peek() == Some(b'\n') {
                self.bump(1);
            }
        } else {
            self.bump(1); // '\n'
        }
        self.emit(TokenKind::Newline, start);
    }

    fn lex_whitespace(&mut self) {
        let start = self.pos;
        self.eat_while(|b| b == b' ' || b == b'\t' || b == 0x0c);
        self.emit(TokenKind::Whitespace, start);
    }

    fn lex_line_comment(&mut self) {
        let start = self.pos;
        self.bump(2);
        self.eat_while(|b| b != b'\n' && b != b'\r');
        self.emit(TokenKind::Comment, start);
    }

    fn lex_block_comment(&mut self) -> Result<()> {
        let start = self.pos;
        let (line, column) = (self.line, self.column);
        self.bump(2);
        loop {
            match self.peek() {
                Some(b'*') if self.peek_at(1) == Some(b'/') => {
                    self.bump(2);
                    self.emit(TokenKind::Comment, start);
                    return Ok(());
                }
                Some(_) => self.bump(1),
                None => {
                    return Err(Error::UnterminatedToken {
                        what: "block comment",
                        line,
                        column,
                    })
                }
            }
        }
    }

    fn lex_string(&mut self) -> Result<()> {
        let start = self.pos;
        let (line, column) = (self.line, self.column);
        self.bump(1);
        loop {
            match self.peek() {
                Some(b'"') => {
                    self.bump(1);
                    self.emit(TokenKind::LiteralString, start);
                    return Ok(());
                }
                Some(b'\\') => self.bump(2.min(self.bytes.len() - self.pos)),
                Some(b'\n') | Some(b'\r') | None => {
                    return Err(Error::UnterminatedToken {
                        what: "string literal",
                        line,
                        column,
                    })
                }
                Some(_) => self.bump(1),
            }
        }
    }

    fn lex_char(&mut self) -> Result<()> {
        let start = self.pos;
        let (line, column) = (self.line, self.column);
        self.bump(1);
        loop {
            match self.peek() {
                Some(b'\'') => {
                    self.bump(1);
                    self.emit(TokenKind::LiteralChar, start);
                    return Ok(());
                }
                Some(b'\\') => self.bump(2.min(self.bytes.len() - self.pos)),
                Some(b'\n') | Some(b'\r') | None => {
                    return Err(Error::UnterminatedToken {
                        what: "character literal",
                        line,
                        column,
                    })
                }
                Some(_) => self.bump(1),
            }
        }
    }

    fn lex_number(&mut self) {
        let start = self.pos;
        let mut is_float = false;
        if self.peek() == Some(b'0')
            && matches!(self.peek_at(1), Some(b'x') | Some(b'X') | Some(b'b') | Some(b'B'))
        {
            self.bump(2);
            self.eat_while(|b| b.is_ascii_hexdigit() || b == b'_');
        } else {
            self.eat_while(|b| b.is_ascii_digit() || b == b'_');
            if self.peek() == Some(b'.') && self.peek_at(1).map_or(false, |b| b.is_ascii_digit()) {
                is_float = true;
                self.bump(1);
                self.eat_while(|b| b.is_ascii_digit() || b == b'_');
            }
            if matches!(self.peek(), Some(b'e') | Some(b'E')) {
                let mut ahead = 1;
                if matches!(self.peek_at(1), Some(b'+') | Some(b'-')) {
                    ahead = 2;
                }
                if self.peek_at(ahead).map_or(false, |b| b.is_ascii_digit()) {
                    is_float = true;
                    self.bump(ahead);
                    self.eat_while(|b| b.is_ascii_digit() || b == b'_');
                }
            }
        }
        let mut kind = TokenKind::LiteralInt;
        match self.peek() {
            Some(b'l') | Some(b'L') if !is_float => {
                self.bump(1);
                kind = TokenKind::LiteralLong;
            }
            Some(b'f') | Some(b'F') | Some(b'd') | Some(b'D') => {
                self.bump(1);
            }
            _ => {}
        }
        self.emit(kind, start);
    }

    fn lex_word(&mut self) {
        let start = self.pos;
        self.eat_while(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'$' || b >= 0x80);
        let text = &self.src[start..self.pos];
        let kind = if KEYWORDS.contains(&text) {
            TokenKind::Keyword
        } else {
            TokenKind::Identifier
        };
        self.emit(kind, start);
    }

    fn run(mut self) -> Result<Vec<Token>> {
        while let Some(b) = self.peek() {
            match b {
                b'\n' | b'\r' => self.lex_newline(),
                b' ' | b'\t' | 0x0c => self.lex_whitespace(),
                b'/' => match self.peek_at(1) {
                    Some(b'/') => self.lex_line_comment(),
                    Some(b'*') => self.lex_block_comment()?,
                    _ => self.lex_operator_or_separator(),
                },
                b'"' => self.lex_string()?,
                b'\'' => self.lex_char()?,
                b'0'..=b'9' => self.lex_number(),
                b'.' if self.peek_at(1).map_or(false, |c| c.is_ascii_digit()) => self.lex_number(),
                b if b.is_ascii_alphabetic() || b == b'_' || b == b'$' || b >= 0x80 => {
                    self.lex_word()
                }
                _ => self.lex_operator_or_separator(),
            }
        }
        Ok(self.tokens)
    }

    fn lex_operator_or_separator(&mut self) {
        let start = self.pos;
        let rest = &self.src[self.pos..];
        // Varargs before plain dot.
        if rest.starts_with("...") {
            self.bump(3);
            self.emit(TokenKind::Separator, start);
            return;
        }
        if matches!(
            self.peek(),
            Some(b'(') | Some(b')') | Some(b'{') | Some(b'}') | Some(b'[') | Some(b']')
                | Some(b';') | Some(b',') | Some(b'.') | Some(b'@')
        ) {
            self.bump(1);
            self.emit(TokenKind::Separator, start);
            return;
        }
        for op in OPERATORS {
            if rest.starts_with(op) {
                self.bump(op.len());
                self.emit(TokenKind::Operator, start);
                return;
            }
        }
        // Unknown byte (e.g. `#`): keep it as a separator so the stream
        // stays lossless and downstream checks simply ignore it.
        self.bump(1);
        while !self.src.is_char_boundary(self.pos) {
            self.bump(1);
        }
        self.emit(TokenKind::Separator, start);
    }
}

/// Tokenize Java source into a lossless token stream.
///
/// Returns an error only for unterminated strings, characters, and block
/// comments; everything else degrades to operator/separator tokens.
pub fn tokenize(source: &str) -> Result<Vec<Token>> {
    Lexer::new(source).run()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(tokens: &[Token]) -> String {
        tokens.iter().map(|t| t.text.as_str()).collect()
    }

    #[test]
    fn int_declaration() {
        let tokens = tokenize("int x;").unwrap();
        let sig: Vec<_> = tokens
            .iter()
            .map(|t| (t.kind, t.text.as_str()))
            .collect();
        assert_eq!(
            sig,
            vec![
                (TokenKind::Keyword, "int"),
                (TokenKind::Whitespace, " "),
                (TokenKind::Identifier, "x"),
                (TokenKind::Separator, ";"),
            ]
        );
    }

    #[test]
    fn long_literal_lowercase_ell() {
        let tokens = tokenize("long n = 1l;").unwrap();
        let long_tok = tokens
            .iter()
            .find(|t| t.kind == TokenKind::LiteralLong)
            .unwrap();
        assert_eq!(long_tok.text, "1l");
        assert_eq!(long_tok.line, 1);
        assert_eq!(long_tok.column, 10);
    }

    #[test]
    fn unterminated_string_reports_position() {
        let err = tokenize("\"abc").unwrap_err();
        match err {
            Error::UnterminatedToken { what, line, column } => {
                assert_eq!(what, "string literal");
                assert_eq!(line, 1);
                assert_eq!(column, 1);
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn roundtrip_mixed_source() {
        let src = "class A {\n  // note\n  String s = \"a b\\\"c\";\n  char c = '\\n';\n  long n = 0x1FL;\n  double d = 1.5e-3;\n}\n";
        let tokens = tokenize(src).unwrap();
        assert_eq!(texts(&tokens), src);
    }

    #[test]
    fn crlf_is_one_newline_token() {
        let tokens = tokenize("int a;\r\nint b;").unwrap();
        let newlines: Vec<_> = tokens
            .iter()
            .filter(|t| t.kind == TokenKind::Newline)
            .collect();
        assert_eq!(newlines.len(), 1);
        assert_eq!(newlines[0].text, "\r\n");
        let b = tokens
            .iter()
            .find(|t| t.text == "b")
            .unwrap();
        assert_eq!(b.line, 2);
    }

    #[test]
    fn positions_non_decreasing() {
        let src = "public class A { void f() { int i = 0; i += 1; } }";
        let tokens = tokenize(src).unwrap();
        let mut prev = (0usize, 0usize);
        for t in &tokens {
            assert!((t.line, t.column) > prev, "position regressed at {:?}", t);
            prev = (t.line, t.column);
        }
    }

    #[test]
    fn shift_operators_maximal_munch() {
        let tokens = tokenize("a >>= b >>> c >> d;").unwrap();
        let ops: Vec<_> = tokens
            .iter()
            .filter(|t| t.kind == TokenKind::Operator)
            .map(|t| t.text.as_str())
            .collect();
        assert_eq!(ops, vec![">>=", ">>>", ">>"]);
    }

    #[test]
    fn varargs_and_method_ref() {
        let tokens = tokenize("void f(int... xs) { g(A::b); }").unwrap();
        assert!(tokens.iter().any(|t| t.text == "..."));
        assert!(tokens.iter().any(|t| t.text == "::"));
    }

    #[test]
    fn float_is_not_long() {
        let tokens = tokenize("double d = 2.5f; long n = 10L;").unwrap();
        let kinds: Vec<_> = tokens
            .iter()
            .filter(|t| matches!(t.kind, TokenKind::LiteralInt | TokenKind::LiteralLong))
            .map(|t| (t.kind, t.text.as_str()))
            .collect();
        assert_eq!(
            kinds,
            vec![
                (TokenKind::LiteralInt, "2.5f"),
                (TokenKind::LiteralLong, "10L"),
            ]
        );
    }

    #[test]
    fn unterminated_block_comment() {
        assert!(matches!(
            tokenize("/* never closed"),
            Err(Error::UnterminatedToken { what: "block comment", .. })
        ));
    }

    #[test]
    fn stray_bytes_degrade_to_separators() {
        let src = "int a; # weird £";
        let tokens = tokenize(src).unwrap();
        assert_eq!(texts(&tokens), src);
    }
}
