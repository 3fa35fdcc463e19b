//! Line-oriented text formats for profiles, order vectors and planner
//! preferences.
//!
//! Profile:
//!
//! ```text
//! alternatives: a b c
//! voters: 2
//! 1: a b | c
//! 2: c a b |
//! ```
//!
//! The bar follows the last acceptable label. Order vectors use the same
//! header with bar-free lines. A planner preference lists every nonempty
//! subset once per line, best first, labels comma-separated. `#` starts a
//! comment everywhere.

use crate::error::{Error, Result};
use crate::model::{
    Alt, AltSet, Alternatives, OrderVector, PreferenceApproval, PresentationOrder, Profile,
};
use crate::planner::PlannerPreference;

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
        }
    }
}

impl<'a> Iterator for Lines<'a> {
    /// (1-based line number, content without comment, trimmed)
    type Item = (usize, &'a str);

    fn next(&mut self) -> Option<Self::Item> {
        for (i, raw) in self.inner.by_ref() {
            let content = raw.split('#').next().unwrap_or("").trim();
            if !content.is_empty() {
                return Some((i + 1, content));
            }
        }
        None
    }
}

fn malformed(line: usize, msg: impl Into<String>) -> Error {
    Error::Malformed {
        line,
        msg: msg.into(),
    }
}

fn keyed<'a>(line: usize, content: &'a str, key: &str) -> Result<&'a str> {
    let (k, rest) = content
        .split_once(':')
        .ok_or_else(|| malformed(line, format!("expected '{key}:'")))?;
    if k.trim() != key {
        return Err(malformed(
            line,
            format!("expected '{key}:', found '{}'", k.trim()),
        ));
    }
    Ok(rest)
}

/// Parses the shared `alternatives:` / `voters:` header.
fn parse_header(lines: &mut Lines<'_>) -> Result<(Alternatives, usize, usize)> {
    let (line, content) = lines
        .next()
        .ok_or_else(|| malformed(1, "missing 'alternatives:' header"))?;
    let labels: Vec<String> = keyed(line, content, "alternatives")?
        .split_whitespace()
        .map(str::to_string)
        .collect();
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::DuplicateAlternative {
                line,
                label: l.clone(),
            });
        }
    }
    let alts = Alternatives::new(labels).map_err(|e| malformed(line, e.to_string()))?;

    let (vline, content) = lines
        .next()
        .ok_or_else(|| malformed(line + 1, "missing 'voters:' header"))?;
    let n: usize = keyed(vline, content, "voters")?
        .trim()
        .parse()
        .map_err(|_| malformed(vline, "voter count is not a number"))?;
    if n == 0 {
        return Err(malformed(vline, "voter count must be at least 1"));
    }
    Ok((alts, n, vline))
}

fn split_voter_line(line: usize, content: &str, expected_id: usize) -> Result<&str> {
    let (id, rest) = content
        .split_once(':')
        .ok_or_else(|| malformed(line, "expected '<id>:'"))?;
    match id.trim().parse::<usize>() {
        Ok(v) if v == expected_id => Ok(rest),
        Ok(v) => Err(malformed(
            line,
            format!("expected voter {expected_id}, found {v}"),
        )),
        Err(_) => Err(malformed(line, format!("invalid voter id '{}'", id.trim()))),
    }
}

fn lookup(alts: &Alternatives, line: usize, label: &str, seen: &mut AltSet) -> Result<Alt> {
    let x = alts.index_of(label).ok_or_else(|| Error::UnknownLabel {
        line,
        label: label.to_string(),
    })?;
    if seen.contains(x) {
        return Err(Error::DuplicateAlternative {
            line,
            label: label.to_string(),
        });
    }
    *seen = seen.with(x);
    Ok(x)
}

fn parse_ranking_line(alts: &Alternatives, line: usize, body: &str) -> Result<PreferenceApproval> {
    let spaced = body.replace('|', " | ");
    let mut ranking = Vec::with_capacity(alts.len());
    let mut threshold = None;
    let mut seen = AltSet::EMPTY;
    for token in spaced.split_whitespace() {
        if token == "|" {
            if threshold.is_some() {
                return Err(malformed(line, "more than one '|'"));
            }
            threshold = Some(ranking.len());
            continue;
        }
        ranking.push(lookup(alts, line, token, &mut seen)?);
    }
    let threshold = threshold.ok_or(Error::MissingBar { line })?;
    if ranking.len() != alts.len() {
        return Err(malformed(
            line,
            format!(
                "ranking lists {} of {} alternatives",
                ranking.len(),
                alts.len()
            ),
        ));
    }
    if threshold == 0 {
        return Err(malformed(line, "no acceptable alternative before '|'"));
    }
    PreferenceApproval::new(ranking, threshold).map_err(|e| malformed(line, e.to_string()))
}

fn parse_order_line(alts: &Alternatives, line: usize, body: &str) -> Result<PresentationOrder> {
    let mut seq = Vec::with_capacity(alts.len());
    let mut seen = AltSet::EMPTY;
    for token in body.split_whitespace() {
        if token.contains('|') {
            return Err(malformed(line, "order lines carry no '|'"));
        }
        seq.push(lookup(alts, line, token, &mut seen)?);
    }
    if seq.len() != alts.len() {
        return Err(malformed(
            line,
            format!("order lists {} of {} alternatives", seq.len(), alts.len()),
        ));
    }
    PresentationOrder::new(seq).map_err(|e| malformed(line, e.to_string()))
}

fn parse_body<T>(
    text: &str,
    mut parse_line: impl FnMut(&Alternatives, usize, &str) -> Result<T>,
) -> Result<(Alternatives, Vec<T>)> {
    let mut lines = Lines::new(text);
    let (alts, n, header_line) = parse_header(&mut lines)?;
    let mut items = Vec::with_capacity(n);
    let mut last_line = header_line;
    for (line, content) in lines {
        last_line = line;
        if items.len() == n {
            return Err(Error::VoterCountMismatch {
                line,
                expected: n,
                found: n + 1,
            });
        }
        let body = split_voter_line(line, content, items.len() + 1)?;
        items.push(parse_line(&alts, line, body)?);
    }
    if items.len() != n {
        return Err(Error::VoterCountMismatch {
            line: last_line,
            expected: n,
            found: items.len(),
        });
    }
    Ok((alts, items))
}

pub fn parse_profile(text: &str) -> Result<(Alternatives, Profile)> {
    let (alts, voters) = parse_body(text, parse_ranking_line)?;
    Ok((alts, Profile::new(voters)?))
}

pub fn parse_orders(text: &str) -> Result<(Alternatives, OrderVector)> {
    let (alts, orders) = parse_body(text, parse_order_line)?;
    Ok((alts, OrderVector::new(orders)?))
}

fn format_header(alts: &Alternatives, n: usize) -> String {
    format!("alternatives: {}\nvoters: {n}\n", alts.labels().join(" "))
}

pub fn format_profile(alts: &Alternatives, profile: &Profile) -> String {
    let mut out = format_header(alts, profile.n());
    for (i, p) in profile.voters().iter().enumerate() {
        let (acc, rest) = p.ranking().split_at(p.threshold());
        out.push_str(&format!("{}: {} |", i + 1, alts.format_sequence(acc)));
        if !rest.is_empty() {
            out.push(' ');
            out.push_str(&alts.format_sequence(rest));
        }
        out.push('\n');
    }
    out
}

pub fn format_orders(alts: &Alternatives, orders: &OrderVector) -> String {
    let mut out = format_header(alts, orders.n());
    for (i, o) in orders.orders().iter().enumerate() {
        out.push_str(&format!(
            "{}: {}\n",
            i + 1,
            alts.format_sequence(o.as_slice())
        ));
    }
    out
}

/// Reads a planner preference; every nonempty subset must appear exactly once.
pub fn parse_preference(text: &str, alts: &Alternatives) -> Result<PlannerPreference> {
    let mut order = Vec::new();
    for (line, content) in Lines::new(text) {
        let mut set = AltSet::EMPTY;
        for token in content.split(',').map(str::trim) {
            if token.is_empty() {
                return Err(malformed(line, "empty label in subset"));
            }
            lookup(alts, line, token, &mut set)?;
        }
        order.push(set);
    }
    PlannerPreference::new(alts.len(), order)
}

pub fn format_preference(alts: &Alternatives, pref: &PlannerPreference) -> String {
    pref.order()
        .iter()
        .map(|&s| format!("{}\n", alts.join_set(s, ",")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "alternatives: a b c\nvoters: 3\n1: a b | c\n2: c a b |\n3: b | a c\n";

    #[test]
    fn parses_bar_positions() {
        let (alts, p) = parse_profile(SAMPLE).unwrap();
        assert_eq!(alts.len(), 3);
        assert_eq!(p.voter(0).ranking(), &[0, 1, 2]);
        assert_eq!(p.voter(0).threshold(), 2);
        assert_eq!(p.voter(1).ranking(), &[2, 0, 1]);
        assert!(p.voter(1).is_tolerant());
        assert_eq!(p.voter(2).threshold(), 1);
    }

    #[test]
    fn canonical_round_trip() {
        let (alts, p) = parse_profile(SAMPLE).unwrap();
        assert_eq!(format_profile(&alts, &p), SAMPLE);
    }

    #[test]
    fn comments_and_spacing_are_ignored() {
        let messy = "# header\nalternatives:  a b c   \nvoters: 3 # three\n\n1: a b|c\n2:c a b |\n3: b | a c\n";
        let (alts, p) = parse_profile(messy).unwrap();
        assert_eq!(format_profile(&alts, &p), SAMPLE);
    }

    #[test]
    fn duplicate_alternative_reports_line() {
        let text = "alternatives: a b c\nvoters: 3\n1: a b | c\n2: c a b |\n3: a a | b\n";
        assert_eq!(
            parse_profile(text).unwrap_err(),
            Error::DuplicateAlternative {
                line: 5,
                label: "a".into()
            }
        );
    }

    #[test]
    fn parse_errors() {
        let unknown = "alternatives: a b c\nvoters: 1\n1: a d | c\n";
        assert!(matches!(
            parse_profile(unknown),
            Err(Error::UnknownLabel { line: 3, .. })
        ));
        let no_bar = "alternatives: a b c\nvoters: 1\n1: a b c\n";
        assert_eq!(
            parse_profile(no_bar).unwrap_err(),
            Error::MissingBar { line: 3 }
        );
        let short = "alternatives: a b c\nvoters: 2\n1: a b | c\n";
        assert!(matches!(
            parse_profile(short),
            Err(Error::VoterCountMismatch {
                expected: 2,
                found: 1,
                ..
            })
        ));
        let long = "alternatives: a b c\nvoters: 1\n1: a b | c\n2: a b | c\n";
        assert!(matches!(
            parse_profile(long),
            Err(Error::VoterCountMismatch { line: 4, .. })
        ));
        let leading_bar = "alternatives: a b c\nvoters: 1\n1: | a b c\n";
        assert!(matches!(
            parse_profile(leading_bar),
            Err(Error::Malformed { line: 3, .. })
        ));
    }

    #[test]
    fn orders_round_trip() {
        let text = "alternatives: x y z\nvoters: 2\n1: z x y\n2: x y z\n";
        let (alts, o) = parse_orders(text).unwrap();
        assert_eq!(o.order(0).as_slice(), &[2, 0, 1]);
        assert_eq!(format_orders(&alts, &o), text);
        assert!(parse_orders("alternatives: x y z\nvoters: 1\n1: z x | y\n").is_err());
    }

    #[test]
    fn preference_file_must_cover_all_subsets() {
        let alts = Alternatives::default_labels(2).unwrap();
        let pref = parse_preference("a\na,b\nb\n", &alts).unwrap();
        assert_eq!(format_preference(&alts, &pref), "a\na,b\nb\n");
        assert!(parse_preference("a\nb\n", &alts).is_err());
        assert!(parse_preference("a\na,b\nb\na\n", &alts).is_err());
    }
}
