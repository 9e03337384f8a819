//! Brace-level structural view of a token stream.
//!
//! Builds just enough structure for the style checks: nested brace blocks
//! tagged by role, declarations with their name and modifier tokens, import
//! statements, semicolon-terminated statement spans, and switch arms. This
//! is deliberately not a Java grammar; malformed input degrades to an
//! `unbalanced` tree instead of failing.

use crate::lex::{Token, TokenKind};

/// Role of a brace-delimited region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    ClassBody,
    MethodBody,
    /// Body of if/else/for/while/do/try/catch/finally/synchronized.
    ControlBody,
    SwitchBody,
    /// Array initializers, lambdas, anonymous classes, initializer blocks,
    /// bare blocks — anything the checks do not inspect structurally.
    Other,
}

/// One brace block: token indices of `{` and `}` plus its role.
#[derive(Debug, Clone)]
pub struct Block {
    pub kind: BlockKind,
    pub open: usize,
    /// Index of the matching `}`; `None` when the block never closes.
    pub close: Option<usize>,
    /// Keyword that introduced a control/switch body (`if`, `else`, ...).
    pub introducer: Option<String>,
    /// Nesting depth; top-level blocks have depth 1.
    pub depth: usize,
    /// Index into `blocks` of the enclosing block.
    pub parent: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeclKind {
    Type,
    Method,
    MemberField,
    Parameter,
    LocalVariable,
}

/// A named declaration with its modifier tokens.
#[derive(Debug, Clone)]
pub struct Declaration {
    pub kind: DeclKind,
    /// Token index of the declared name (always an identifier).
    pub name: usize,
    /// Token indices of modifier keywords, in source order.
    pub modifiers: Vec<usize>,
    /// Token indices of annotation `@` signs preceding the declaration.
    pub annotations: Vec<usize>,
    /// Whether the declaration carries `static`.
    pub is_static: bool,
    /// True for type declarations at brace depth zero.
    pub top_level: bool,
}

#[derive(Debug, Clone)]
pub struct Import {
    pub path: String,
    pub is_star: bool,
    pub is_static: bool,
    pub line: usize,
    /// Token span of the whole statement including the `;`.
    pub span: (usize, usize),
}

/// A semicolon-terminated statement span (excludes for-header semicolons).
#[derive(Debug, Clone)]
pub struct Statement {
    pub start: usize,
    /// Index of the terminating `;`.
    pub end: usize,
    pub start_line: usize,
    pub end_line: usize,
    /// Index into `blocks` of the enclosing block, if any.
    pub block: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArmKind {
    Case,
    Default,
}

/// One `case`/`default` group inside a switch body.
#[derive(Debug, Clone)]
pub struct SwitchArm {
    pub kind: ArmKind,
    /// Token index of the `case`/`default` keyword.
    pub label: usize,
    /// Tokens of the arm body: after the label colon, up to the next label
    /// or the end of the switch body (exclusive).
    pub body: (usize, usize),
}

#[derive(Debug, Clone)]
pub struct Switch {
    /// Index into `blocks` of the switch body.
    pub block: usize,
    /// Token index of the `switch` keyword.
    pub keyword: usize,
    pub arms: Vec<SwitchArm>,
    pub has_default: bool,
}

/// Structural view over a token stream. Indices refer to that stream.
#[derive(Debug, Clone, Default)]
pub struct StructureTree {
    pub blocks: Vec<Block>,
    pub declarations: Vec<Declaration>,
    pub imports: Vec<Import>,
    pub has_package: bool,
    /// Line of the `package` statement, when present.
    pub package_line: Option<usize>,
    pub package_span: Option<(usize, usize)>,
    pub statements: Vec<Statement>,
    pub switches: Vec<Switch>,
    /// Brace nesting was inconsistent; structure-dependent checks skip.
    pub unbalanced: bool,
}

impl StructureTree {
    /// Kind of the innermost block containing token index `i`, if any.
    pub fn block_at(&self, i: usize) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (bi, b) in self.blocks.iter().enumerate() {
            let close = b.close.unwrap_or(usize::MAX);
            if b.open < i && i < close {
                match best {
                    Some(prev) if self.blocks[prev].depth >= b.depth => {}
                    _ => best = Some(bi),
                }
            }
        }
        best
    }
}

/// Index of the previous non-trivia token before `i`.
fn prev_significant(tokens: &[Token], i: usize) -> Option<usize> {
    (0..i).rev().find(|&j| !tokens[j].is_trivia())
}

/// Index of the next non-trivia token at or after `i`.
pub(crate) fn next_significant(tokens: &[Token], i: usize) -> Option<usize> {
    (i..tokens.len()).find(|&j| !tokens[j].is_trivia())
}

/// Walk back from a `(`-matching `)` at `close` to find its `(`.
fn matching_open_paren(tokens: &[Token], close: usize) -> Option<usize> {
    let mut depth = 0i32;
    for j in (0..=close).rev() {
        match tokens[j].text.as_str() {
            ")" => depth += 1,
            "(" => {
                depth -= 1;
                if depth == 0 {
                    return Some(j);
                }
            }
            _ => {}
        }
    }
    None
}

const MODIFIER_KEYWORDS: &[&str] = &[
    "public",
    "protected",
    "private",
    "abstract",
    "default",
    "static",
    "final",
    "transient",
    "volatile",
    "synchronized",
    "native",
    "strictfp",
];

pub(crate) fn is_modifier(text: &str) -> bool {
    MODIFIER_KEYWORDS.contains(&text)
}

struct Parser<'a> {
    tokens: &'a [Token],
    tree: StructureTree,
    /// Stack of indices into `tree.blocks`.
    stack: Vec<usize>,
}

impl<'a> Parser<'a> {
    fn current_block(&self) -> Option<usize> {
        self.stack.last().copied()
    }

    fn current_kind(&self) -> Option<BlockKind> {
        self.current_block().map(|b| self.tree.blocks[b].kind)
    }

    /// Classify the `{` at token index `i` from its left context.
    fn classify_open(&self, i: usize) -> (BlockKind, Option<String>) {
        let Some(prev) = prev_significant(self.tokens, i) else {
            return (BlockKind::Other, None);
        };
        let prev_text = self.tokens[prev].text.as_str();
        match prev_text {
            "do" | "else" | "try" | "finally" => {
                return (BlockKind::ControlBody, Some(prev_text.to_string()));
            }
            "->" | "=" | "," | "{" | "[" | "]" => return (BlockKind::Other, None),
            ")" => {
                if let Some(open) = matching_open_paren(self.tokens, prev) {
                    if let Some(before) = prev_significant(self.tokens, open) {
                        let kw = self.tokens[before].text.as_str();
                        match kw {
                            "if" | "for" | "while" | "catch" | "synchronized" | "try" => {
                                return (BlockKind::ControlBody, Some(kw.to_string()));
                            }
                            "switch" => return (BlockKind::SwitchBody, Some("switch".into())),
                            _ => {}
                        }
                        // `new Foo(...) {` — anonymous class body.
                        if self.header_contains(open, "new") {
                            return (BlockKind::Other, None);
                        }
                        // A parameter list directly inside a class body is a
                        // method or constructor definition.
                        if self.current_kind() == Some(BlockKind::ClassBody)
                            && self.tokens[before].kind == TokenKind::Identifier
                        {
                            return (BlockKind::MethodBody, None);
                        }
                    }
                }
                (BlockKind::Other, None)
            }
            _ => {
                // `class A ... {`, `enum E {`, `interface I {` headers.
                for kw in ["class", "interface", "enum"] {
                    if self.header_contains(i, kw) {
                        return (BlockKind::ClassBody, Some(kw.to_string()));
                    }
                }
                (BlockKind::Other, None)
            }
        }
    }

    /// Whether the declaration header ending at `end` contains `word`.
    /// The header starts after the previous `;`, `{`, or `}`.
    fn header_contains(&self, end: usize, word: &str) -> bool {
        for j in (0..end).rev() {
            let t = &self.tokens[j];
            if t.is_trivia() {
                continue;
            }
            match t.text.as_str() {
                ";" | "{" | "}" => return false,
                w if w == word => return true,
                _ => {}
            }
        }
        false
    }

    fn parse(mut self) -> StructureTree {
        let tokens = self.tokens;
        let mut i = 0;
        let mut paren_depth: i32 = 0;
        // Statement start candidate: first significant token after the last
        // boundary (`;`, `{`, `}`, or case label colon).
        let mut stmt_start: Option<usize> = None;

        while i < tokens.len() {
            let t = &tokens[i];
            if t.is_trivia() {
                i += 1;
                continue;
            }
            if stmt_start.is_none() {
                stmt_start = Some(i);
            }
            match t.text.as_str() {
                "(" => paren_depth += 1,
                ")" => paren_depth -= 1,
                "{" => {
                    let (kind, introducer) = self.classify_open(i);
                    let depth = self.stack.len() + 1;
                    let parent = self.current_block();
                    self.tree.blocks.push(Block {
                        kind,
                        open: i,
                        close: None,
                        introducer,
                        depth,
                        parent,
                    });
                    self.stack.push(self.tree.blocks.len() - 1);
                    stmt_start = None;
                }
                "}" => {
                    match self.stack.pop() {
                        Some(b) => self.tree.blocks[b].close = Some(i),
                        None => self.tree.unbalanced = true,
                    }
                    stmt_start = None;
                }
                ";" if paren_depth == 0 => {
                    let start = stmt_start.unwrap_or(i);
                    let head = tokens[start].text.as_str();
                    if head == "import" {
                        self.record_import(start, i);
                    } else if head == "package" {
                        self.tree.has_package = true;
                        self.tree.package_line = Some(tokens[start].line);
                        self.tree.package_span = Some((start, i));
                    } else {
                        self.tree.statements.push(Statement {
                            start,
                            end: i,
                            start_line: tokens[start].line,
                            end_line: tokens[i].line,
                            block: self.current_block(),
                        });
                    }
                    stmt_start = None;
                }
                ":" if paren_depth == 0 => {
                    // Case/default label colons end a "statement" region.
                    if let Some(s) = stmt_start {
                        if matches!(tokens[s].text.as_str(), "case" | "default") {
                            stmt_start = None;
                        }
                    }
                }
                _ => {}
            }
            i += 1;
        }
        if !self.stack.is_empty() {
            self.tree.unbalanced = true;
        }

        self.collect_declarations();
        self.collect_switches();
        self.tree
    }

    fn record_import(&mut self, start: usize, end: usize) {
        let tokens = self.tokens;
        let mut is_static = false;
        let mut is_star = false;
        let mut path = String::new();
        for t in &tokens[start + 1..end] {
            if t.is_trivia() {
                continue;
            }
            match t.text.as_str() {
                "static" => is_static = true,
                "*" => is_star = true,
                "." => {
                    if !is_star {
                        path.push('.');
                    }
                }
                other => path.push_str(other),
            }
        }
        let path = path.trim_end_matches('.').to_string();
        self.tree.imports.push(Import {
            path,
            is_star,
            is_static,
            line: tokens[start].line,
            span: (start, end),
        });
    }

    /// Gather modifier and annotation tokens between the previous boundary
    /// and `at`, walking left.
    fn modifiers_before(&self, at: usize) -> (Vec<usize>, Vec<usize>, bool) {
        let tokens = self.tokens;
        let mut mods = Vec::new();
        let mut annos = Vec::new();
        let mut is_static = false;
        let mut j = at;
        loop {
            let Some(p) = prev_significant(tokens, j) else { break };
            let text = tokens[p].text.as_str();
            if is_modifier(text) {
                if text == "static" {
                    is_static = true;
                }
                mods.push(p);
                j = p;
            } else if tokens[p].kind == TokenKind::Identifier
                && prev_significant(tokens, p)
                    .map_or(false, |q| tokens[q].text == "@")
            {
                let at_sign = prev_significant(tokens, p).unwrap();
                annos.push(at_sign);
                j = at_sign;
            } else if text == ")" {
                // Annotation with arguments: @Name(...)
                if let Some(open) = matching_open_paren(tokens, p) {
                    if let Some(name) = prev_significant(tokens, open) {
                        if tokens[name].kind == TokenKind::Identifier {
                            if let Some(at_sign) = prev_significant(tokens, name) {
                                if tokens[at_sign].text == "@" {
                                    annos.push(at_sign);
                                    j = at_sign;
                                    continue;
                                }
                            }
                        }
                    }
                }
                break;
            } else {
                break;
            }
        }
        mods.reverse();
        annos.reverse();
        (mods, annos, is_static)
    }

    fn collect_declarations(&mut self) {
        let tokens = self.tokens;
        let mut decls = Vec::new();
        for (i, t) in tokens.iter().enumerate() {
            match t.text.as_str() {
                "class" | "interface" | "enum" => {
                    // Skip `.class` literals and `Foo.class`.
                    if let Some(p) = prev_significant(tokens, i) {
                        if tokens[p].text == "." {
                            continue;
                        }
                    }
                    if let Some(n) = next_significant(tokens, i + 1) {
                        if tokens[n].kind == TokenKind::Identifier {
                            let (mods, annos, is_static) = self.modifiers_before(i);
                            let top_level = self.tree.block_at(i).is_none();
                            decls.push(Declaration {
                                kind: DeclKind::Type,
                                name: n,
                                modifiers: mods,
                                annotations: annos,
                                is_static,
                                top_level,
                            });
                        }
                    }
                }
                _ => {}
            }
        }
        // Methods: blocks tagged MethodBody point back at `name(params)`.
        // Also catch `;`-terminated (abstract/interface) method declarations.
        let method_blocks: Vec<usize> = self
            .tree
            .blocks
            .iter()
            .filter(|b| b.kind == BlockKind::MethodBody)
            .map(|b| b.open)
            .collect();
        for open in method_blocks {
            if let Some((name, params)) = self.method_header_before(open) {
                let (mods, annos, is_static) = self.modifiers_before(self.decl_header_start(name));
                decls.push(Declaration {
                    kind: DeclKind::Method,
                    name,
                    modifiers: mods,
                    annotations: annos,
                    is_static,
                    top_level: false,
                });
                decls.extend(params);
            }
        }
        // Field and local variable declarations from statement spans.
        let statements: Vec<Statement> = self.tree.statements.clone();
        for st in &statements {
            let in_class_body = st
                .block
                .map(|b| self.tree.blocks[b].kind == BlockKind::ClassBody)
                .unwrap_or(false);
            let in_code_body = st
                .block
                .map(|b| {
                    matches!(
                        self.tree.blocks[b].kind,
                        BlockKind::MethodBody | BlockKind::ControlBody | BlockKind::SwitchBody
                    )
                })
                .unwrap_or(false);
            if !in_class_body && !in_code_body {
                continue;
            }
            let kind = if in_class_body {
                DeclKind::MemberField
            } else {
                DeclKind::LocalVariable
            };
            for name in variable_names_in(tokens, st.start, st.end) {
                let (mods, annos, is_static) = self.modifiers_before(st.start + 1);
                // modifiers_before walks left from a position *after* the
                // first token; recompute from the statement head instead.
                let _ = (&mods, &annos);
                let (mods, annos, is_static2) = self.modifiers_at_statement(st.start);
                decls.push(Declaration {
                    kind,
                    name,
                    modifiers: mods,
                    annotations: annos,
                    is_static: is_static || is_static2,
                    top_level: false,
                });
            }
        }
        // For-header declarations (`for (int i = 0; ...)`, `for (T x : xs)`).
        for (i, t) in tokens.iter().enumerate() {
            if t.text == "for" && t.kind == TokenKind::Keyword {
                if let Some(open) = next_significant(tokens, i + 1) {
                    if tokens[open].text == "(" {
                        if let Some(close) = matching_close_paren(tokens, open) {
                            decls.extend(self.for_header_locals(open, close));
                        }
                    }
                }
            }
        }
        self.tree.declarations.extend(decls);
    }

    /// Start of the declaration header owning the token at `name`: walks
    /// left past type tokens to just after the previous boundary.
    fn decl_header_start(&self, name: usize) -> usize {
        let tokens = self.tokens;
        for j in (0..name).rev() {
            if tokens[j].is_trivia() {
                continue;
            }
            if matches!(tokens[j].text.as_str(), ";" | "{" | "}") {
                return j + 1;
            }
        }
        0
    }

    /// Extract modifiers sitting at the *front* of a statement.
    fn modifiers_at_statement(&self, start: usize) -> (Vec<usize>, Vec<usize>, bool) {
        let tokens = self.tokens;
        let mut mods = Vec::new();
        let mut annos = Vec::new();
        let mut is_static = false;
        let mut j = start;
        while j < tokens.len() {
            if tokens[j].is_trivia() {
                j += 1;
                continue;
            }
            let text = tokens[j].text.as_str();
            if is_modifier(text) {
                if text == "static" {
                    is_static = true;
                }
                mods.push(j);
                j += 1;
            } else if text == "@" {
                annos.push(j);
                j += 1;
                // Skip annotation name and optional argument list.
                if let Some(n) = next_significant(tokens, j) {
                    j = n + 1;
                    if let Some(p) = next_significant(tokens, j) {
                        if tokens[p].text == "(" {
                            if let Some(close) = matching_close_paren(tokens, p) {
                                j = close + 1;
                            }
                        }
                    }
                }
            } else {
                break;
            }
        }
        (mods, annos, is_static)
    }

    /// Given the `{` of a method body, find the method name identifier and
    /// its parameter declarations.
    fn method_header_before(&self, open: usize) -> Option<(usize, Vec<Declaration>)> {
        let tokens = self.tokens;
        let mut j = prev_significant(tokens, open)?;
        // Skip a `throws X, Y` clause.
        loop {
            let text = tokens[j].text.as_str();
            if text == ")" {
                break;
            }
            if tokens[j].kind == TokenKind::Identifier
                || text == ","
                || text == "throws"
                || text == "."
            {
                j = prev_significant(tokens, j)?;
            } else {
                return None;
            }
        }
        let close = j;
        let popen = matching_open_paren(tokens, close)?;
        let name = prev_significant(tokens, popen)?;
        if tokens[name].kind != TokenKind::Identifier {
            return None;
        }
        let params = parameter_names_in(tokens, popen, close)
            .into_iter()
            .map(|p| Declaration {
                kind: DeclKind::Parameter,
                name: p,
                modifiers: Vec::new(),
                annotations: Vec::new(),
                is_static: false,
                top_level: false,
            })
            .collect();
        Some((name, params))
    }

    fn for_header_locals(&self, open: usize, close: usize) -> Vec<Declaration> {
        let tokens = self.tokens;
        let mut out = Vec::new();
        // Enhanced for: `Type name : expr`.
        let colon = (open..close).find(|&j| {
            tokens[j].text == ":" && tokens[j].kind == TokenKind::Operator
        });
        if let Some(c) = colon {
            if let Some(name) = prev_significant(tokens, c) {
                if tokens[name].kind == TokenKind::Identifier {
                    if let Some(before) = prev_significant(tokens, name) {
                        if is_type_like(&tokens[before]) {
                            out.push(Declaration {
                                kind: DeclKind::LocalVariable,
                                name,
                                modifiers: Vec::new(),
                                annotations: Vec::new(),
                                is_static: false,
                                top_level: false,
                            });
                        }
                    }
                }
            }
            return out;
        }
        // Classic for: declarations live before the first `;`.
        let first_semi = (open..close).find(|&j| tokens[j].text == ";");
        if let Some(semi) = first_semi {
            for name in variable_names_in(tokens, open + 1, semi) {
                out.push(Declaration {
                    kind: DeclKind::LocalVariable,
                    name,
                    modifiers: Vec::new(),
                    annotations: Vec::new(),
                    is_static: false,
                    top_level: false,
                });
            }
        }
        out
    }

    fn collect_switches(&mut self) {
        let tokens = self.tokens;
        let blocks = self.tree.blocks.clone();
        for (bi, b) in blocks.iter().enumerate() {
            if b.kind != BlockKind::SwitchBody {
                continue;
            }
            let Some(close) = b.close else { continue };
            // Locate the `switch` keyword for reporting.
            let mut keyword = b.open;
            if let Some(p) = prev_significant(tokens, b.open) {
                if tokens[p].text == ")" {
                    if let Some(o) = matching_open_paren(tokens, p) {
                        if let Some(k) = prev_significant(tokens, o) {
                            keyword = k;
                        }
                    }
                }
            }
            let mut arms: Vec<SwitchArm> = Vec::new();
            let mut has_default = false;
            let mut depth = 0i32;
            let mut j = b.open + 1;
            while j < close {
                let t = &tokens[j];
                if t.is_trivia() {
                    j += 1;
                    continue;
                }
                match t.text.as_str() {
                    "{" => depth += 1,
                    "}" => depth -= 1,
                    "case" | "default" if depth == 0 => {
                        // `default` can also be a modifier; inside a switch
                        // body at depth 0 it is a label when followed by `:`.
                        let is_label = {
                            let mut k = j + 1;
                            let mut pd = 0i32;
                            loop {
                                let Some(n) = next_significant(tokens, k) else { break false };
                                match tokens[n].text.as_str() {
                                    "(" => pd += 1,
                                    ")" => pd -= 1,
                                    ":" if pd == 0 => break true,
                                    ";" | "{" | "}" => break false,
                                    _ => {}
                                }
                                k = n + 1;
                            }
                        };
                        if is_label {
                            if let Some(prev_arm) = arms.last_mut() {
                                prev_arm.body.1 = j;
                            }
                            let kind = if t.text == "default" {
                                has_default = true;
                                ArmKind::Default
                            } else {
                                ArmKind::Case
                            };
                            // Arm body starts after the label colon.
                            let mut body_start = j + 1;
                            let mut pd = 0i32;
                            while let Some(n) = next_significant(tokens, body_start) {
                                match tokens[n].text.as_str() {
                                    "(" => pd += 1,
                                    ")" => pd -= 1,
                                    ":" if pd == 0 => {
                                        body_start = n + 1;
                                        break;
                                    }
                                    _ => {}
                                }
                                body_start = n + 1;
                            }
                            arms.push(SwitchArm {
                                kind,
                                label: j,
                                body: (body_start, close),
                            });
                        }
                    }
                    _ => {}
                }
                j += 1;
            }
            self.tree.switches.push(Switch {
                block: bi,
                keyword,
                arms,
                has_default,
            });
        }
    }
}

/// Find the `)` matching the `(` at `open`.
pub(crate) fn matching_close_paren(tokens: &[Token], open: usize) -> Option<usize> {
    let mut depth = 0i32;
    for (j, t) in tokens.iter().enumerate().skip(open) {
        match t.text.as_str() {
            "(" => depth += 1,
            ")" => {
                depth -= 1;
                if depth == 0 {
                    return Some(j);
                }
            }
            _ => {}
        }
    }
    None
}

fn is_type_like(t: &Token) -> bool {
    t.kind == TokenKind::Identifier
        || matches!(
            t.text.as_str(),
            "int" | "long" | "short" | "byte" | "char" | "boolean" | "float" | "double" | ">" | "]"
        )
}

/// Declared variable names in a declaration statement `tokens[start..=end]`.
///
/// Returns an empty list when the span does not look like a variable
/// declaration (`Type name ...`). Handles generics, arrays, and multiple
/// comma-separated declarators with initializers.
fn variable_names_in(tokens: &[Token], start: usize, end: usize) -> Vec<usize> {
    let mut sig: Vec<usize> = (start..end)
        .filter(|&j| !tokens[j].is_trivia())
        .collect();
    // Drop leading modifiers and annotations.
    while let Some(&first) = sig.first() {
        let text = tokens[first].text.as_str();
        if is_modifier(text) {
            sig.remove(0);
        } else if text == "@" {
            sig.remove(0);
            if !sig.is_empty() {
                sig.remove(0); // annotation name
                if sig.first().map(|&j| tokens[j].text == "(").unwrap_or(false) {
                    let mut depth = 0i32;
                    while let Some(&j) = sig.first() {
                        match tokens[j].text.as_str() {
                            "(" => depth += 1,
                            ")" => {
                                depth -= 1;
                                sig.remove(0);
                                if depth == 0 {
                                    break;
                                }
                                continue;
                            }
                            _ => {}
                        }
                        sig.remove(0);
                    }
                }
            }
        } else {
            break;
        }
    }
    if sig.len() < 2 {
        return Vec::new();
    }
    // The first token must start a type.
    let head = &tokens[sig[0]];
    let head_is_type = head.kind == TokenKind::Identifier
        || matches!(
            head.text.as_str(),
            "int" | "long" | "short" | "byte" | "char" | "boolean" | "float" | "double"
        );
    if !head_is_type {
        return Vec::new();
    }
    // Scan the type: qualified names, generics, arrays. The declared name is
    // the first identifier followed by `=`, `,`, `[`-`]` then those, or the
    // end of the statement.
    let mut names = Vec::new();
    let mut k = 1; // position in sig; sig[0] is the type head
    let mut angle = 0i32;
    // Walk the remainder of the type.
    while k < sig.len() {
        let t = &tokens[sig[k]];
        match t.text.as_str() {
            "<" => angle += 1,
            ">" => angle -= 1,
            ">>" => angle -= 2,
            ">>>" => angle -= 3,
            "." | "," | "?" | "extends" | "super" | "[" | "]" => {}
            _ if t.kind == TokenKind::Identifier && angle == 0 => {
                // Candidate name: check the following significant token.
                let next = sig.get(k + 1).map(|&j| tokens[j].text.as_str());
                match next {
                    Some("=") | Some(",") | Some(";") | Some("[") | None => break,
                    Some(".") | Some("<") => {
                        // Still part of a qualified or generic type.
                        k += 1;
                        continue;
                    }
                    _ if next.map_or(true, |n| n != "(") => break,
                    _ => return Vec::new(), // `name(` — a call or method, not a declaration
                }
            }
            _ if t.kind == TokenKind::Identifier => {}
            _ => return Vec::new(),
        }
        k += 1;
    }
    if k >= sig.len() {
        return Vec::new();
    }
    names.push(sig[k]);
    // Further declarators after top-level commas.
    let mut depth = 0i32;
    angle = 0;
    let mut j = k + 1;
    while j < sig.len() {
        let t = &tokens[sig[j]];
        match t.text.as_str() {
            "(" | "[" | "{" => depth += 1,
            ")" | "]" | "}" => depth -= 1,
            "<" => angle += 1,
            ">" => angle = (angle - 1).max(0),
            "," if depth == 0 && angle == 0 => {
                if let Some(&n) = sig.get(j + 1) {
                    if tokens[n].kind == TokenKind::Identifier {
                        names.push(n);
                    }
                }
            }
            _ => {}
        }
        j += 1;
    }
    names
}

/// Parameter name tokens inside `( ... )` given by `open..close`.
fn parameter_names_in(tokens: &[Token], open: usize, close: usize) -> Vec<usize> {
    let mut names = Vec::new();
    let mut depth = 0i32;
    let mut angle = 0i32;
    let mut segment: Vec<usize> = Vec::new();
    let mut push_segment = |seg: &mut Vec<usize>, names: &mut Vec<usize>| {
        // Name is the last identifier in the segment (skipping `[]`).
        for &j in seg.iter().rev() {
            let t = &tokens[j];
            if t.text == "]" || t.text == "[" {
                continue;
            }
            if t.kind == TokenKind::Identifier {
                names.push(j);
            }
            break;
        }
        seg.clear();
    };
    for j in open + 1..close {
        let t = &tokens[j];
        if t.is_trivia() {
            continue;
        }
        match t.text.as_str() {
            "(" | "[" => depth += 1,
            ")" | "]" => depth -= 1,
            "<" => angle += 1,
            ">" => angle -= 1,
            ">>" => angle -= 2,
            ">>>" => angle -= 3,
            "," if depth == 0 && angle == 0 => {
                push_segment(&mut segment, &mut names);
                continue;
            }
            _ => {}
        }
        segment.push(j);
    }
    if !segment.is_empty() {
        push_segment(&mut segment, &mut names);
    }
    names
}

/// Build the structural view of a token stream. Never fails: malformed
/// input yields a tree with `unbalanced` set.
pub fn parse_structure(tokens: &[Token]) -> StructureTree {
    Parser {
        tokens,
        tree: StructureTree::default(),
        stack: Vec::new(),
    }
    .parse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lex::tokenize;

    fn parse(src: &str) -> (Vec<Token>, StructureTree) {
        let tokens = tokenize(src).unwrap();
        let tree = parse_structure(&tokens);
        (tokens, tree)
    }

    #[test]
    fn class_with_method() {
        let (tokens, tree) = parse("class A { void f() {} }");
        let types: Vec<_> = tree
            .declarations
            .iter()
            .filter(|d| d.kind == DeclKind::Type)
            .collect();
        assert_eq!(types.len(), 1);
        assert_eq!(tokens[types[0].name].text, "A");
        assert!(types[0].top_level);
        let methods: Vec<_> = tree
            .declarations
            .iter()
            .filter(|d| d.kind == DeclKind::Method)
            .collect();
        assert_eq!(methods.len(), 1);
        assert_eq!(tokens[methods[0].name].text, "f");
        assert!(tree
            .blocks
            .iter()
            .any(|b| b.kind == BlockKind::MethodBody));
        assert!(!tree.unbalanced);
    }

    #[test]
    fn star_import() {
        let (_, tree) = parse("import java.util.*;\n");
        assert_eq!(tree.imports.len(), 1);
        assert_eq!(tree.imports[0].path, "java.util");
        assert!(tree.imports[0].is_star);
        assert_eq!(tree.imports[0].line, 1);
    }

    #[test]
    fn unbalanced_is_flagged() {
        let (_, tree) = parse("class A { {");
        assert!(tree.unbalanced);
    }

    #[test]
    fn deterministic() {
        let src = "class A { int x; void f(int p) { for (int i = 0; i < p; i++) { x += i; } } }";
        let (_, t1) = parse(src);
        let (_, t2) = parse(src);
        assert_eq!(format!("{t1:?}"), format!("{t2:?}"));
    }

    #[test]
    fn control_blocks_tagged() {
        let (_, tree) = parse(
            "class A { void f(boolean b) { if (b) { } else { } while (b) { } do { } while (b); } }",
        );
        let controls: Vec<_> = tree
            .blocks
            .iter()
            .filter(|bl| bl.kind == BlockKind::ControlBody)
            .map(|bl| bl.introducer.clone().unwrap())
            .collect();
        assert_eq!(controls, vec!["if", "else", "while", "do"]);
    }

    #[test]
    fn switch_arms_and_default() {
        let (_, tree) = parse(
            "class A { void f(int x) { switch (x) { case 1: f(x); break; case 2: default: break; } } }",
        );
        assert_eq!(tree.switches.len(), 1);
        let sw = &tree.switches[0];
        assert_eq!(sw.arms.len(), 3);
        assert!(sw.has_default);
        assert_eq!(sw.arms[0].kind, ArmKind::Case);
        assert_eq!(sw.arms[2].kind, ArmKind::Default);
    }

    #[test]
    fn fields_and_locals() {
        let (tokens, tree) = parse(
            "class A { private int count; void f() { String name = \"x\"; int a, b; } }",
        );
        let fields: Vec<_> = tree
            .declarations
            .iter()
            .filter(|d| d.kind == DeclKind::MemberField)
            .map(|d| tokens[d.name].text.clone())
            .collect();
        assert_eq!(fields, vec!["count"]);
        let locals: Vec<_> = tree
            .declarations
            .iter()
            .filter(|d| d.kind == DeclKind::LocalVariable)
            .map(|d| tokens[d.name].text.clone())
            .collect();
        assert_eq!(locals, vec!["name", "a", "b"]);
    }

    #[test]
    fn parameters_with_generics_and_arrays() {
        let (tokens, tree) = parse(
            "class A { void f(Map<String, Integer> map, int[] xs, String... rest) {} }",
        );
        let params: Vec<_> = tree
            .declarations
            .iter()
            .filter(|d| d.kind == DeclKind::Parameter)
            .map(|d| tokens[d.name].text.clone())
            .collect();
        assert_eq!(params, vec!["map", "xs", "rest"]);
    }

    #[test]
    fn method_call_is_not_declaration() {
        let (tokens, tree) = parse("class A { void f() { g(1); h.i(2); } }");
        assert!(tree
            .declarations
            .iter()
            .filter(|d| d.kind == DeclKind::LocalVariable)
            .next()
            .is_none(), "calls misread as declarations: {:?}", tree.declarations.iter().map(|d| &tokens[d.name].text).collect::<Vec<_>>());
    }
}
