//! Text form of a morphism: `a->aabcacba,b->aa,c->a`.
//!
//! Rules are comma separated, each `letter->image` with single-character
//! letters. Whitespace anywhere is ignored. The alphabet is the rule letters
//! in the order given. Errors carry the 1-based rule number and the 1-based
//! character column in the original input.

use super::Morphism;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

struct RawRule {
    index: usize,
    text: String,
    letter: (char, usize),
    image: Vec<(char, usize)>,
}

fn err(rule: &RawRule, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        rule: format!("rule {} `{}`", rule.index, rule.text.trim()),
        column,
        message: message.into(),
    }
}

pub fn parse_morphism(text: &str) -> Result<Morphism> {
    let mut rules = Vec::new();
    let mut start = 0usize;
    let chars: Vec<char> = text.chars().collect();
    for (index, chunk) in chars.split(|&c| c == ',').enumerate() {
        let chunk_start = start;
        start += chunk.len() + 1;
        let text: String = chunk.iter().collect();
        let significant: Vec<(char, usize)> = chunk
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, &c)| (c, chunk_start + i + 1))
            .collect();
        let mut rule = RawRule {
            index: index + 1,
            text,
            letter: (' ', chunk_start + 1),
            image: Vec::new(),
        };
        let Some(arrow) = significant
            .windows(2)
            .position(|w| w[0].0 == '-' && w[1].0 == '>')
        else {
            let column = significant.first().map_or(chunk_start + 1, |s| s.1);
            return Err(err(&rule, column, "expected `letter->image`"));
        };
        match arrow {
            0 => return Err(err(&rule, significant[0].1, "missing letter before `->`")),
            1 => rule.letter = significant[0],
            _ => {
                return Err(err(
                    &rule,
                    significant[1].1,
                    "letters must be single characters",
                ))
            }
        }
        rule.image = significant[arrow + 2..].to_vec();
        if rule.image.is_empty() {
            return Err(err(&rule, significant[arrow + 1].1 + 1, "empty image"));
        }
        if let Some(&(_, col)) = rule.image.iter().find(|(c, _)| *c == '-' || *c == '>') {
            return Err(err(&rule, col, "unexpected `->` in image"));
        }
        rules.push(rule);
    }

    let mut symbols = Vec::with_capacity(rules.len());
    for rule in &rules {
        if symbols.contains(&rule.letter.0) {
            return Err(err(
                rule,
                rule.letter.1,
                format!("duplicate rule for {:?}", rule.letter.0),
            ));
        }
        symbols.push(rule.letter.0);
    }
    let alphabet = Alphabet::new(symbols)?;
    let mut images = Vec::with_capacity(rules.len());
    for rule in &rules {
        let mut letters = Vec::with_capacity(rule.image.len());
        for &(c, col) in &rule.image {
            let l = alphabet
                .letter(c)
                .ok_or_else(|| err(rule, col, format!("{c:?} has no rule of its own")))?;
            letters.push(l);
        }
        images.push(Word::new(&alphabet, letters));
    }
    Morphism::new(&alphabet, images)
}

impl std::str::FromStr for Morphism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_morphism(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn parse_err(s: &str) -> (String, usize) {
        match parse_morphism(s).unwrap_err() {
            Error::Parse { rule, column, .. } => (rule, column),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn parses_and_ignores_whitespace() {
        let m = parse_morphism(" a -> aabcacba , b->a a,c->a ").unwrap();
        assert_eq!(m.to_string(), "a->aabcacba,b->aa,c->a");
        assert_eq!(m.alphabet().symbols(), ['a', 'b', 'c']);
    }

    #[test]
    fn round_trips_corpus() {
        for m in [
            corpus::fibonacci(),
            corpus::thue_morse(),
            corpus::bucci_vaslet(),
            corpus::z_family(3),
            corpus::hks_counterexample(),
            corpus::conjugacy_example(),
            corpus::aba_bab(),
            corpus::section8_mu_pi().0,
        ] {
            assert_eq!(parse_morphism(&m.to_string()).unwrap(), m);
        }
    }

    #[test]
    fn errors_name_rule_and_column() {
        assert_eq!(parse_err("a->ab,b"), ("rule 2 `b`".to_string(), 7));
        assert_eq!(parse_err("a->ab,bb->a"), ("rule 2 `bb->a`".to_string(), 8));
        assert_eq!(parse_err("a->ab,b->"), ("rule 2 `b->`".to_string(), 10));
        assert_eq!(parse_err("a->ac,b->a"), ("rule 1 `a->ac`".to_string(), 5));
        assert_eq!(parse_err("a->b,a->a"), ("rule 2 `a->a`".to_string(), 6));
        assert_eq!(parse_err("->a"), ("rule 1 `->a`".to_string(), 1));
    }
}
