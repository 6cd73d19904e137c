//! Best-effort extraction of paragraph text from saved (often dirty) HTML.
//!
//! Emits the text content of every `<p>` element in document order, nested
//! inline tags stripped, paragraphs joined by a single newline. An unclosed
//! `<p>` consumes text until the next block-level boundary. Script and
//! style content is never emitted. Output never contains `<` or `>`.

const BLOCK_TAGS: &[&str] = &[
    "p", "div", "table", "ul", "ol", "li", "h1", "h2", "h3", "h4", "h5", "h6", "section",
    "article", "header", "footer", "aside", "nav", "blockquote", "form", "main", "figure", "body",
    "html",
];

#[derive(Debug, PartialEq)]
enum Token {
    Text(String),
    Open(String),
    Close(String),
}

/// Minimal tolerant tokenizer: splits into tags and text, skipping
/// comments and declarations. A `<` that never closes is treated as text.
fn tokenize(html: &str) -> Vec<Token> {
    let bytes = html.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    let mut text_start = 0;
    while i < bytes.len() {
        if bytes[i] != b'<' {
            i += 1;
            continue;
        }
        // comment or declaration
        if html[i..].starts_with("<!--") {
            push_text(&mut tokens, &html[text_start..i]);
            let end = html[i + 4..].find("-->").map(|p| i + 4 + p + 3).unwrap_or(html.len());
            i = end;
            text_start = i;
            continue;
        }
        if html[i..].starts_with("<!") || html[i..].starts_with("<?") {
            push_text(&mut tokens, &html[text_start..i]);
            let end = html[i..].find('>').map(|p| i + p + 1).unwrap_or(html.len());
            i = end;
            text_start = i;
            continue;
        }
        // candidate tag: must start with a letter or '/'
        let rest = &bytes[i + 1..];
        let is_tag = rest
            .first()
            .map(|&b| b.is_ascii_alphabetic() || b == b'/')
            .unwrap_or(false);
        if !is_tag {
            i += 1;
            continue;
        }
        match html[i..].find('>') {
            Some(p) => {
                push_text(&mut tokens, &html[text_start..i]);
                let inner = &html[i + 1..i + p];
                let closing = inner.starts_with('/');
                let name: String = inner
                    .trim_start_matches('/')
                    .chars()
                    .take_while(|c| c.is_ascii_alphanumeric())
                    .collect::<String>()
                    .to_ascii_lowercase();
                if !name.is_empty() {
                    if closing {
                        tokens.push(Token::Close(name));
                    } else {
                        tokens.push(Token::Open(name));
                    }
                }
                i += p + 1;
                text_start = i;
            }
            None => {
                // unterminated tag: drop the rest as markup junk
                push_text(&mut tokens, &html[text_start..i]);
                i = html.len();
                text_start = i;
            }
        }
    }
    push_text(&mut tokens, &html[text_start..]);
    tokens
}

fn push_text(tokens: &mut Vec<Token>, text: &str) {
    if !text.is_empty() {
        tokens.push(Token::Text(text.to_string()));
    }
}

/// Decode the handful of entities that matter for word content. `&lt;` and
/// `&gt;` become spaces so extracted text stays free of markup delimiters.
fn decode_entities(text: &str) -> String {
    text.replace("&nbsp;", " ")
        .replace("&lt;", " ")
        .replace("&gt;", " ")
        .replace("&quot;", "\"")
        .replace("&#39;", "'")
        .replace("&apos;", "'")
        .replace("&amp;", "&")
        .replace('<', " ")
        .replace('>', " ")
}

/// Concatenate the text of every paragraph element, in document order,
/// joined by single newlines.
pub fn extract_paragraphs(raw_html: &str) -> String {
    let mut paragraphs: Vec<String> = Vec::new();
    let mut current: Option<String> = None;
    let mut skip_depth = 0usize; // inside <script>/<style>
    for token in tokenize(raw_html) {
        match token {
            Token::Open(name) => match name.as_str() {
                "script" | "style" => skip_depth += 1,
                "p" => {
                    // implicit close of an unclosed paragraph
                    finish(&mut paragraphs, &mut current);
                    current = Some(String::new());
                }
                "br" => {
                    if let Some(p) = current.as_mut() {
                        p.push(' ');
                    }
                }
                _ if BLOCK_TAGS.contains(&name.as_str()) => {
                    finish(&mut paragraphs, &mut current);
                }
                _ => {} // inline tag: stripped, text flows through
            },
            Token::Close(name) => match name.as_str() {
                "script" | "style" => skip_depth = skip_depth.saturating_sub(1),
                "p" => finish(&mut paragraphs, &mut current),
                _ if BLOCK_TAGS.contains(&name.as_str()) => {
                    finish(&mut paragraphs, &mut current);
                }
                _ => {}
            },
            Token::Text(text) => {
                if skip_depth == 0 {
                    if let Some(p) = current.as_mut() {
                        p.push_str(&decode_entities(&text));
                    }
                }
            }
        }
    }
    finish(&mut paragraphs, &mut current);
    paragraphs.join("\n")
}

fn finish(paragraphs: &mut Vec<String>, current: &mut Option<String>) {
    if let Some(text) = current.take() {
        paragraphs.push(normalize_spaces(&text));
    }
}

fn normalize_spaces(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}
