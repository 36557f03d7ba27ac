//! Line-oriented text format for Morse words and braid words.

use super::{check_end, step, validate_colors, MorseEvent, MorseWord};
use crate::error::{Error, Result};

struct Line<'a> {
    no: usize,
    toks: Vec<(usize, &'a str)>,
}

fn lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut start = None;
        for (j, c) in body.char_indices() {
            match (c.is_whitespace(), start) {
                (false, None) => start = Some(j),
                (true, Some(s)) => {
                    toks.push((s + 1, &body[s..j]));
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(s) = start {
            toks.push((s + 1, &body[s..]));
        }
        if !toks.is_empty() {
            out.push(Line { no: i + 1, toks });
        }
    }
    out
}

fn parse_usize(line: &Line, idx: usize, what: &str) -> Result<usize> {
    let (col, tok) = match line.toks.get(idx) {
        Some(t) => *t,
        None => {
            let col = line.toks.last().map_or(1, |(c, t)| c + t.len());
            return Err(Error::parse(line.no, col, format!("missing {what}")));
        }
    };
    tok.parse().map_err(|_| Error::parse(line.no, col, format!("expected {what}, found '{tok}'")))
}

fn expect_len(line: &Line, n: usize) -> Result<()> {
    if line.toks.len() > n {
        let (col, tok) = line.toks[n];
        return Err(Error::parse(line.no, col, format!("unexpected '{tok}'")));
    }
    Ok(())
}

/// Parses the `sl` format.
pub fn parse_morse(text: &str) -> Result<MorseWord> {
    let ls = lines(text);
    let mut it = ls.iter();
    let header = it.next().ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    if header.toks[0].1 != "sl" {
        return Err(Error::parse(header.no, header.toks[0].0, "expected 'sl <n>'"));
    }
    let n = parse_usize(header, 1, "strand count")?;
    expect_len(header, 2)?;
    if n == 0 {
        return Err(Error::parse(header.no, header.toks[1].0, "strand count must be positive"));
    }
    let cl = it.next().ok_or_else(|| Error::parse(header.no + 1, 1, "expected 'colors'"))?;
    if cl.toks[0].1 != "colors" {
        return Err(Error::parse(cl.no, cl.toks[0].0, "expected 'colors c1 ... cn'"));
    }
    let mut colors = Vec::with_capacity(n);
    for k in 1..cl.toks.len() {
        colors.push(parse_usize(cl, k, "color")?);
    }
    validate_colors(n, &colors).map_err(|e| Error::parse(cl.no, cl.toks[0].0, e.to_string()))?;

    let mut state = vec![true; n];
    let mut events = Vec::new();
    let mut ended = None;
    for line in it {
        if let Some(end_line) = ended {
            return Err(Error::parse(line.no, line.toks[0].0, format!("content after 'end' on line {end_line}")));
        }
        let (col, kw) = line.toks[0];
        let ev = match kw {
            "end" => {
                expect_len(line, 1)?;
                ended = Some(line.no);
                continue;
            }
            "x" => {
                let i = parse_usize(line, 1, "position")?;
                let ev = match line.toks.get(2).map(|t| t.1) {
                    Some("+") => MorseEvent::CrossPos(i),
                    Some("-") => MorseEvent::CrossNeg(i),
                    _ => {
                        let c = line.toks.get(2).map_or(col + 3, |t| t.0);
                        return Err(Error::parse(line.no, c, "expected '+' or '-'"));
                    }
                };
                expect_len(line, 3)?;
                ev
            }
            "cap" => {
                let i = parse_usize(line, 1, "position")?;
                expect_len(line, 2)?;
                MorseEvent::Cap(i)
            }
            "cup" => {
                let i = parse_usize(line, 1, "position")?;
                let ev = match line.toks.get(2).map(|t| t.1) {
                    Some("<") => MorseEvent::CupL(i),
                    Some(">") => MorseEvent::CupR(i),
                    _ => {
                        let c = line.toks.get(2).map_or(col + 4, |t| t.0);
                        return Err(Error::parse(line.no, c, "expected '<' or '>'"));
                    }
                };
                expect_len(line, 3)?;
                ev
            }
            other => return Err(Error::parse(line.no, col, format!("unknown event '{other}'"))),
        };
        step(&mut state, &ev).map_err(|m| Error::parse(line.no, line.toks[1].0, m))?;
        events.push(ev);
    }
    let end_line = ended.ok_or_else(|| {
        let last = ls.last().map_or(1, |l| l.no);
        Error::parse(last, 1, "missing 'end'")
    })?;
    check_end(n, &state).map_err(|m| Error::parse(end_line, 1, m))?;
    MorseWord::new(n, colors, events)
}

/// Parses `braid <n>: s1 s2' s1`; an apostrophe marks an inverse generator.
pub fn parse_braid(text: &str) -> Result<MorseWord> {
    let ls = lines(text);
    let line = ls.first().ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    if let Some(extra) = ls.get(1) {
        return Err(Error::parse(extra.no, extra.toks[0].0, "braid input is a single line"));
    }
    if line.toks[0].1 != "braid" {
        return Err(Error::parse(line.no, line.toks[0].0, "expected 'braid <n>:'"));
    }
    let (col, ntok) = *line
        .toks
        .get(1)
        .ok_or_else(|| Error::parse(line.no, 7, "missing strand count"))?;
    let (ntext, rest_in_tok) = match ntok.find(':') {
        Some(p) => (&ntok[..p], &ntok[p + 1..]),
        None => return Err(Error::parse(line.no, col + ntok.len(), "expected ':' after strand count")),
    };
    let n: usize = ntext
        .parse()
        .map_err(|_| Error::parse(line.no, col, format!("expected strand count, found '{ntext}'")))?;
    if n == 0 {
        return Err(Error::parse(line.no, col, "strand count must be positive"));
    }
    let mut gens_toks: Vec<(usize, &str)> = Vec::new();
    if !rest_in_tok.is_empty() {
        gens_toks.push((col + ntext.len() + 1, rest_in_tok));
    }
    gens_toks.extend(line.toks[2..].iter().copied());
    let mut gens = Vec::with_capacity(gens_toks.len());
    for (c, tok) in gens_toks {
        let (body, positive) = match tok.strip_suffix('\'') {
            Some(b) => (b, false),
            None => (tok, true),
        };
        let idx = body
            .strip_prefix('s')
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| Error::parse(line.no, c, format!("expected generator like s1 or s1', found '{tok}'")))?;
        if idx == 0 || idx >= n {
            return Err(Error::parse(line.no, c, format!("generator s{idx} out of range for {n} strands")));
        }
        gens.push((idx, positive));
    }
    MorseWord::from_braid(n, &gens)
}

/// Parses either format, chosen by the first keyword.
pub fn parse_input(text: &str) -> Result<MorseWord> {
    let ls = lines(text);
    match ls.first().map(|l| l.toks[0].1) {
        Some("braid") => parse_braid(text),
        Some(_) => parse_morse(text),
        None => Err(Error::parse(1, 1, "empty input")),
    }
}
