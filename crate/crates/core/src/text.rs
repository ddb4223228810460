//! Text normalization and word tokenization.
//!
//! Raw Uzbek text mixes several apostrophe code points for the `o‘`/`g‘`
//! letters and the tutuq belgisi. Normalization maps all of them onto two
//! canonical marks and lowercases letters; tokenization then splits the text
//! into word, number and punctuation tokens, keeping byte spans into the
//! original input.

use crate::error::InputError;

/// Canonical modifier for `o‘` and `g‘` (MODIFIER LETTER TURNED COMMA).
pub const TURNED_COMMA: char = '\u{02BB}';
/// Canonical word-internal apostrophe, the tutuq belgisi (MODIFIER LETTER APOSTROPHE).
pub const TUTUQ: char = '\u{02BC}';

/// Marks that become [`TURNED_COMMA`] when they follow `o` or `g`.
const OG_MARKS: [char; 5] = ['\u{2019}', '\u{2018}', '\u{0027}', '\u{0060}', TURNED_COMMA];

fn is_apostrophe_like(c: char) -> bool {
    matches!(
        c,
        '\u{0027}'
            | '\u{0060}'
            | '\u{00B4}'
            | '\u{02B9}'
            | '\u{02BB}'
            | '\u{02BC}'
            | '\u{2018}'
            | '\u{2019}'
            | '\u{2032}'
    )
}

fn is_letter(c: char) -> bool {
    (c.is_alphabetic() && !is_apostrophe_like(c)) || ('\u{0300}'..='\u{036F}').contains(&c)
}

/// Map one apostrophe-like code point given the (already lowercased) previous character.
fn canonical_mark(c: char, prev: Option<char>) -> char {
    if matches!(prev, Some('o' | 'g')) && OG_MARKS.contains(&c) {
        TURNED_COMMA
    } else {
        TUTUQ
    }
}

/// Canonicalize apostrophes and lowercase letters; everything else passes through.
pub fn normalize_text(raw: &str) -> String {
    let mut out = String::with_capacity(raw.len() + raw.len() / 4);
    let mut prev: Option<char> = None;
    for c in raw.chars() {
        if is_apostrophe_like(c) {
            let m = canonical_mark(c, prev);
            out.push(m);
            prev = Some(m);
        } else {
            for lc in c.to_lowercase() {
                out.push(lc);
                prev = Some(lc);
            }
        }
    }
    out
}

/// Validate raw input bytes as UTF-8.
pub fn decode(bytes: &[u8]) -> Result<&str, InputError> {
    std::str::from_utf8(bytes).map_err(|e| InputError {
        offset: e.valid_up_to(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Word,
    Punctuation,
    Number,
}

/// Byte range `[start, end)` into the tokenized input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    /// Exact input slice at `span`.
    pub surface: String,
    /// Lowercased form with canonical apostrophes.
    pub normalized: String,
    pub span: Span,
    pub kind: TokenKind,
}

impl Token {
    fn new(input: &str, start: usize, end: usize, kind: TokenKind) -> Self {
        let surface = &input[start..end];
        Token {
            surface: surface.to_string(),
            normalized: normalize_text(surface),
            span: Span { start, end },
            kind,
        }
    }

    pub fn is_word(&self) -> bool {
        self.kind == TokenKind::Word
    }
}

/// Split text into tokens.
///
/// Whitespace separates tokens and is dropped. Inside a whitespace-free chunk,
/// letter runs (with apostrophes), digit runs (`12`, `3,14`, `2.5.1`) and
/// punctuation runs become separate tokens, so `katta-katta` yields two words
/// around a `-` token. Apostrophes at the edges of a letter run are split off
/// as punctuation, except a trailing mark right after `g` (`tog‘`).
///
/// Accepts raw or normalized text; normalized token forms are the same either way.
pub fn tokenize(text: &str) -> Vec<Token> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let byte_at = |i: usize| chars.get(i).map_or(text.len(), |&(b, _)| b);
    let mut tokens = Vec::new();
    let mut i = 0;

    while i < chars.len() {
        let c = chars[i].1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }

        if c.is_ascii_digit() {
            let start = i;
            i += 1;
            loop {
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let sep = chars.get(i).map(|p| p.1);
                let next_digit = chars.get(i + 1).is_some_and(|p| p.1.is_ascii_digit());
                if matches!(sep, Some('.' | ',')) && next_digit {
                    i += 1;
                } else {
                    break;
                }
            }
            tokens.push(Token::new(
                text,
                byte_at(start),
                byte_at(i),
                TokenKind::Number,
            ));
            continue;
        }

        if is_letter(c) || is_apostrophe_like(c) {
            let start = i;
            while i < chars.len() && (is_letter(chars[i].1) || is_apostrophe_like(chars[i].1)) {
                i += 1;
            }
            push_word_run(text, &chars[start..i], byte_at(i), &mut tokens);
            continue;
        }

        let start = i;
        while i < chars.len() {
            let c = chars[i].1;
            if c.is_whitespace() || c.is_ascii_digit() || is_letter(c) || is_apostrophe_like(c) {
                break;
            }
            i += 1;
        }
        tokens.push(Token::new(
            text,
            byte_at(start),
            byte_at(i),
            TokenKind::Punctuation,
        ));
    }
    tokens
}

/// Emit a letter/apostrophe run, peeling edge apostrophes into punctuation tokens.
fn push_word_run(text: &str, run: &[(usize, char)], run_end: usize, out: &mut Vec<Token>) {
    let byte_at = |i: usize| run.get(i).map_or(run_end, |&(b, _)| b);

    let lead = run.iter().take_while(|p| is_apostrophe_like(p.1)).count();
    if lead == run.len() {
        out.push(Token::new(
            text,
            byte_at(0),
            run_end,
            TokenKind::Punctuation,
        ));
        return;
    }

    let mut end = run.len();
    while end > lead && is_apostrophe_like(run[end - 1].1) {
        end -= 1;
    }
    // keep one mark after a final g, where it is part of the letter gʻ;
    // after a final o it is far more often a closing quote
    if end < run.len() {
        let last = run[end - 1].1.to_lowercase().next();
        if last == Some('g') && OG_MARKS.contains(&run[end].1) {
            end += 1;
        }
    }

    // stray combining marks with no base letter are not a word
    if !run[lead..end]
        .iter()
        .any(|p| p.1.is_alphabetic() && !is_apostrophe_like(p.1))
    {
        out.push(Token::new(
            text,
            byte_at(0),
            run_end,
            TokenKind::Punctuation,
        ));
        return;
    }

    if lead > 0 {
        out.push(Token::new(
            text,
            byte_at(0),
            byte_at(lead),
            TokenKind::Punctuation,
        ));
    }
    out.push(Token::new(
        text,
        byte_at(lead),
        byte_at(end),
        TokenKind::Word,
    ));
    if end < run.len() {
        out.push(Token::new(
            text,
            byte_at(end),
            run_end,
            TokenKind::Punctuation,
        ));
    }
}

/// Keep only word tokens, in order.
pub fn filter_tokens(tokens: Vec<Token>) -> Vec<Token> {
    tokens.into_iter().filter(Token::is_word).collect()
}

/// True when `form` is already normalized and forms exactly one word token.
pub fn is_normalized_word(form: &str) -> bool {
    if form.is_empty() || normalize_text(form) != form {
        return false;
    }
    match tokenize(form).as_slice() {
        [t] => t.is_word() && t.normalized == form && t.surface == form,
        _ => false,
    }
}
