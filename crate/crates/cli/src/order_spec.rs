//! Order spec strings.
//!
//! ```text
//! shortlex:y^-1,x^-1,x,y
//! weighted:x=1,x^-1=4,y=4,y^-1=4;tie=y^-1,x^-1,x,y
//! weighted:x=(1,0),x^-1=(1,0),y=(0,1),y^-1=(0,1)
//! treesum:forbidden=x^2,x*y;base=shortlex:x,y,x^-1,y^-1
//! treesum:around=x*y;base=shortlex:x,y,x^-1,y^-1
//! lewin:forbidden=x,x^-1;base=shortlex:x,y,x^-1,y^-1
//! ```

use std::collections::BTreeSet;

use fga::orders::{Order, PrefixTree, Shortlex};
use fga::words::{Alphabet, Letter, Word};

const KEYWORDS: &[&str] = &["shortlex", "weighted", "treesum", "lewin", "forbidden", "around", "base", "tie", "e"];

/// Generator names mentioned anywhere in `spec`, sorted.
pub fn infer_alphabet(spec: &str) -> Result<Alphabet, String> {
    let names = identifiers(spec).into_iter().filter(|n| !KEYWORDS.contains(&n.as_str()));
    Alphabet::new(names.collect::<BTreeSet<_>>()).map_err(|e| format!("order spec `{spec}`: {e}"))
}

/// Identifiers in `text` (letters, digits and `_`, not starting with a digit).
pub fn identifiers(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for c in text.chars().chain(std::iter::once(' ')) {
        if c.is_ascii_alphanumeric() || c == '_' {
            cur.push(c);
        } else if !cur.is_empty() {
            if !cur.starts_with(|c: char| c.is_ascii_digit()) {
                out.push(cur.clone());
            }
            cur.clear();
        }
    }
    out
}

pub fn parse_order(spec: &str, alphabet: &Alphabet) -> Result<Order, String> {
    let err = |msg: String| format!("order spec `{spec}`: {msg}");
    let (kind, body) = spec.trim().split_once(':').ok_or_else(|| err("missing `kind:`".into()))?;
    match kind.trim() {
        "shortlex" => Ok(Order::Shortlex(parse_shortlex(body, alphabet).map_err(err)?)),
        "weighted" => parse_weighted(body, alphabet).map_err(err),
        "treesum" | "lewin" => {
            let (tree_part, base) = body.split_once(";base=").ok_or_else(|| err("missing `;base=`".into()))?;
            let tree = parse_tree(tree_part, alphabet).map_err(err)?;
            let base = parse_order(base, alphabet)?;
            Ok(if kind.trim() == "lewin" { Order::lewin(base, tree) } else { Order::tree_sum(base, tree) })
        }
        other => Err(err(format!("unknown order kind `{other}`"))),
    }
}

fn parse_shortlex(body: &str, alphabet: &Alphabet) -> Result<Shortlex, String> {
    let body = body.trim();
    let body = body.strip_prefix("shortlex:").unwrap_or(body);
    let ranking = body
        .split(',')
        .map(|l| alphabet.parse_letter(l.trim()).map_err(|e| e.to_string()))
        .collect::<Result<Vec<Letter>, _>>()?;
    Shortlex::new(&ranking, alphabet.rank()).map_err(|e| e.to_string())
}

fn parse_weighted(body: &str, alphabet: &Alphabet) -> Result<Order, String> {
    let (weights_part, tie) = match body.split_once(";tie=") {
        Some((w, t)) => (w, Some(t)),
        None => (body, None),
    };
    let tie = match tie {
        Some(t) => parse_shortlex(t, alphabet)?,
        None => Shortlex::natural(alphabet.rank()),
    };
    let mut weights: Vec<Option<Vec<i64>>> = vec![None; 2 * alphabet.rank()];
    for entry in split_outside_parens(weights_part, &[',', ';']) {
        let (letter, vector) = entry.split_once('=').ok_or_else(|| format!("bad weight entry `{entry}`"))?;
        let letter = alphabet.parse_letter(letter.trim()).map_err(|e| e.to_string())?;
        let vector = vector.trim();
        let inner = vector.strip_prefix('(').and_then(|v| v.strip_suffix(')')).unwrap_or(vector);
        let v = inner
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| format!("bad weight `{vector}`")))
            .collect::<Result<Vec<_>, _>>()?;
        weights[letter.code()] = Some(v);
    }
    let weights = weights
        .into_iter()
        .enumerate()
        .map(|(code, w)| w.ok_or_else(|| format!("no weight for {}", alphabet.format_letter(Letter::from_code(code)))))
        .collect::<Result<Vec<_>, _>>()?;
    Order::weighted_shortlex(weights, tie).map_err(|e| e.to_string())
}

fn parse_tree(part: &str, alphabet: &Alphabet) -> Result<PrefixTree, String> {
    let (key, list) = part.split_once('=').ok_or_else(|| format!("bad tree `{part}`"))?;
    let words = list
        .split(',')
        .map(|w| alphabet.parse_word(w.trim()).map_err(|e| e.to_string()))
        .collect::<Result<Vec<Word>, _>>()?;
    match key.trim() {
        "forbidden" => PrefixTree::new(words, alphabet).map_err(|e| e.to_string()),
        "around" => PrefixTree::around_finite(&words, alphabet).map_err(|e| e.to_string()),
        other => Err(format!("unknown tree key `{other}`")),
    }
}

fn split_outside_parens<'a>(text: &'a str, seps: &[char]) -> Vec<&'a str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if depth == 0 && seps.contains(&c) => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out.into_iter().map(str::trim).filter(|s| !s.is_empty()).collect()
}
