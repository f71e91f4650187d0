//! Line-oriented text formats.
//!
//! Every document starts with a header keyword: `HG` (hypergraph, optionally
//! followed by a `LABELS` block making it a blow-up), `SS` (set system),
//! `LPSOL` (LP solution), `COVER` (rounding output), `MATCHING` and `GREEDY`.
//! Blank lines and lines starting with `#` are ignored. Parse errors carry
//! the 1-based physical line number.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hypergraph::{BlowUp, Hypergraph};
use crate::lp::{LpKind, LpMode, LpSolution, LpValue, Rational};
use crate::rounding::CoverResult;
use crate::setcover::{GreedyTrace, SetSystem};

/// A cover as read back from text. Metadata lines are kept verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverDoc {
    pub ids: Vec<usize>,
    pub meta: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Hyper(Hypergraph),
    BlowUp(BlowUp),
    Sets(SetSystem),
    Lp(LpSolution),
    Cover(CoverDoc),
    Matching(Vec<usize>),
    Greedy(GreedyTrace),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Hyper(_) => "HG",
            Document::BlowUp(_) => "HG+LABELS",
            Document::Sets(_) => "SS",
            Document::Lp(_) => "LPSOL",
            Document::Cover(_) => "COVER",
            Document::Matching(_) => "MATCHING",
            Document::Greedy(_) => "GREEDY",
        }
    }
}

/// Parsing options.
#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Drop repeated edges instead of failing.
    pub dedup: bool,
}

struct Line<'a> {
    no: usize,
    words: Vec<&'a str>,
}

struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_no: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let lines: Vec<Line<'a>> = text
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                let l = l.trim();
                (!l.is_empty() && !l.starts_with('#')).then(|| Line { no: i + 1, words: l.split_whitespace().collect() })
            })
            .collect();
        let last_no = text.lines().count();
        Cursor { lines, pos: 0, last_no }
    }

    fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    fn next(&mut self, what: &str) -> Result<&Line<'a>> {
        let no = self.last_no + 1;
        let line = self
            .lines
            .get(self.pos)
            .ok_or_else(|| Error::parse(no, format!("unexpected end of input, expected {what}")))?;
        self.pos += 1;
        Ok(line)
    }
}

fn num<T: FromStr>(line: &Line<'_>, idx: usize, what: &str) -> Result<T> {
    let w = line
        .words
        .get(idx)
        .ok_or_else(|| Error::parse(line.no, format!("missing {what}")))?;
    w.parse().map_err(|_| Error::parse(line.no, format!("invalid {what} '{w}'")))
}

fn ints(line: &Line<'_>, from: usize, what: &str) -> Result<Vec<usize>> {
    (from..line.words.len()).map(|i| num(line, i, what)).collect()
}

fn expect_len(line: &Line<'_>, len: usize, what: &str) -> Result<()> {
    if line.words.len() != len {
        return Err(Error::parse(
            line.no,
            format!("{what} line has {} fields, expected {len}", line.words.len()),
        ));
    }
    Ok(())
}

fn keyed<'b>(line: &Line<'b>, idx: usize, key: &str) -> Result<&'b str> {
    let w = line.words.get(idx).ok_or_else(|| Error::parse(line.no, format!("missing {key}=")))?;
    w.strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| Error::parse(line.no, format!("expected {key}=<value>, got '{w}'")))
}

fn parse_value(s: &str, no: usize) -> Result<LpValue> {
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.parse().map_err(|_| Error::parse(no, format!("invalid numerator in '{s}'")))?;
        let d: BigInt = d.parse().map_err(|_| Error::parse(no, format!("invalid denominator in '{s}'")))?;
        if d == BigInt::from(0) {
            return Err(Error::parse(no, "zero denominator"));
        }
        Ok(LpValue::Exact(Rational::new(n, d)))
    } else {
        s.parse::<f64>().map(LpValue::Float).map_err(|_| Error::parse(no, format!("invalid number '{s}'")))
    }
}

fn parse_hyper(cur: &mut Cursor<'_>, opts: ParseOptions) -> Result<Document> {
    let header = cur.next("HG header")?;
    expect_len(header, 4, "HG header")?;
    let (hno, t, n, m): (usize, usize, usize, usize) =
        (header.no, num(header, 1, "t")?, num(header, 2, "n")?, num(header, 3, "m")?);
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let line = cur.next(&format!("edge {i}"))?;
        let e = ints(line, 0, "vertex id")?;
        if e.len() != t {
            return Err(Error::parse(line.no, format!("edge has {} vertices, expected {t}", e.len())));
        }
        if let Some(&v) = e.iter().find(|&&v| v >= n) {
            return Err(Error::parse(line.no, format!("vertex {v} outside 0..{n}")));
        }
        edges.push(e);
    }
    let built = if opts.dedup { Hypergraph::new_dedup(t, n, edges) } else { Hypergraph::new(t, n, edges) };
    let h = built.map_err(|e| Error::parse(hno, e.to_string()))?;
    if cur.peek().is_some_and(|l| l.words[0] == "LABELS") {
        let lh = cur.next("LABELS")?;
        let lno = lh.no;
        let declared: Option<(usize, usize)> = match lh.words.len() {
            1 => None,
            3 => Some((num(lh, 1, "k")?, num(lh, 2, "base n")?)),
            _ => return Err(Error::parse(lno, "LABELS header takes either no fields or `<k> <base_n>`")),
        };
        let mut labels = Vec::with_capacity(h.n());
        for v in 0..h.n() {
            let line = cur.next(&format!("label of vertex {v}"))?;
            let l = ints(line, 0, "base vertex id")?;
            if let Some((k, _)) = declared {
                if l.len() != k {
                    return Err(Error::parse(line.no, format!("label has {} entries, expected {k}", l.len())));
                }
            }
            labels.push(l);
        }
        let (k, base_n) = match declared {
            Some(d) => d,
            None => (
                labels.first().map_or(1, Vec::len),
                labels.iter().flatten().max().map_or(0, |&x| x + 1),
            ),
        };
        let b = BlowUp::from_parts(h, labels, k, base_n).map_err(|e| Error::parse(lno, e.to_string()))?;
        return Ok(Document::BlowUp(b));
    }
    Ok(Document::Hyper(h))
}

fn parse_sets(cur: &mut Cursor<'_>) -> Result<Document> {
    let header = cur.next("SS header")?;
    expect_len(header, 3, "SS header")?;
    let (hno, n, m): (usize, usize, usize) = (header.no, num(header, 1, "n")?, num(header, 2, "m")?);
    let mut sets = Vec::with_capacity(m);
    for i in 0..m {
        let line = cur.next(&format!("set {i}"))?;
        let size: usize = num(line, 0, "set size")?;
        let s = ints(line, 1, "element")?;
        if s.len() != size {
            return Err(Error::parse(line.no, format!("set lists {} elements, declared {size}", s.len())));
        }
        sets.push(s);
    }
    SetSystem::new(n, sets).map(Document::Sets).map_err(|e| Error::parse(hno, e.to_string()))
}

fn parse_lp(cur: &mut Cursor<'_>) -> Result<Document> {
    let header = cur.next("LPSOL header")?;
    expect_len(header, 4, "LPSOL header")?;
    let kind = match header.words[1] {
        "vc" => LpKind::Primal,
        "matching" => LpKind::Dual,
        other => return Err(Error::parse(header.no, format!("unknown LP kind '{other}'"))),
    };
    let mode = LpMode::from_str(header.words[2]).map_err(|e| Error::parse(header.no, e.to_string()))?;
    let len: usize = num(header, 3, "value count")?;
    let mut values = Vec::with_capacity(len);
    for i in 0..len {
        let line = cur.next(&format!("value {i}"))?;
        expect_len(line, 2, "value")?;
        let id: usize = num(line, 0, "id")?;
        if id != i {
            return Err(Error::parse(line.no, format!("expected id {i}, got {id}")));
        }
        values.push(parse_value(line.words[1], line.no)?);
    }
    let line = cur.next("OBJ line")?;
    if line.words.len() != 2 || line.words[0] != "OBJ" {
        return Err(Error::parse(line.no, "expected `OBJ <value>`"));
    }
    let objective = parse_value(line.words[1], line.no)?;
    Ok(Document::Lp(LpSolution { kind, mode, values, objective }))
}

fn parse_id_block(cur: &mut Cursor<'_>, key: &str) -> Result<Vec<usize>> {
    let header = cur.next(key)?;
    expect_len(header, 2, key)?;
    let size: usize = num(header, 1, "size")?;
    let mut ids = Vec::with_capacity(size);
    for i in 0..size {
        let line = cur.next(&format!("id {i}"))?;
        expect_len(line, 1, "id")?;
        ids.push(num(line, 0, "id")?);
    }
    Ok(ids)
}

const COVER_META: [&str; 4] = ["BREAKDOWN", "LP", "SEED", "CHOSEN"];

fn parse_cover(cur: &mut Cursor<'_>) -> Result<Document> {
    let ids = parse_id_block(cur, "COVER")?;
    let mut meta = Vec::new();
    while let Some(line) = cur.peek() {
        if !COVER_META.contains(&line.words[0]) {
            break;
        }
        if line.words[0] == "BREAKDOWN" {
            for (i, key) in ["U", "SPRIME", "PARITY"].iter().enumerate() {
                let v = keyed(line, i + 1, key)?;
                v.parse::<usize>().map_err(|_| Error::parse(line.no, format!("invalid {key} count '{v}'")))?;
            }
        }
        meta.push(line.words.join(" "));
        cur.pos += 1;
    }
    Ok(Document::Cover(CoverDoc { ids, meta }))
}

fn parse_greedy(cur: &mut Cursor<'_>) -> Result<Document> {
    let header = cur.next("GREEDY header")?;
    expect_len(header, 2, "GREEDY header")?;
    let picks: usize = num(header, 1, "pick count")?;
    let mut trace = GreedyTrace::default();
    for _ in 0..picks {
        let line = cur.next("pick")?;
        expect_len(line, 3, "pick")?;
        trace.picked.push(num(line, 0, "set id")?);
        trace.newly_covered.push(num(line, 1, "newly covered")?);
        trace.uncovered_after.push(num(line, 2, "remaining")?);
    }
    Ok(Document::Greedy(trace))
}

/// Parses every document in `text`, in order.
pub fn parse_documents(text: &str, opts: ParseOptions) -> Result<Vec<Document>> {
    let mut cur = Cursor::new(text);
    let mut docs = Vec::new();
    while let Some(line) = cur.peek() {
        let doc = match line.words[0] {
            "HG" => parse_hyper(&mut cur, opts)?,
            "SS" => parse_sets(&mut cur)?,
            "LPSOL" => parse_lp(&mut cur)?,
            "COVER" => parse_cover(&mut cur)?,
            "MATCHING" => Document::Matching(parse_id_block(&mut cur, "MATCHING")?),
            "GREEDY" => parse_greedy(&mut cur)?,
            other => return Err(Error::parse(line.no, format!("unknown document header '{other}'"))),
        };
        docs.push(doc);
    }
    Ok(docs)
}

/// Parses a single hypergraph; a blow-up is accepted and its labels dropped.
pub fn parse_hypergraph(text: &str, opts: ParseOptions) -> Result<Hypergraph> {
    match parse_documents(text, opts)?.into_iter().next() {
        Some(Document::Hyper(h)) => Ok(h),
        Some(Document::BlowUp(b)) => Ok(b.hyper().clone()),
        Some(d) => Err(Error::parse(1, format!("expected HG document, found {}", d.kind()))),
        None => Err(Error::parse(1, "empty input")),
    }
}

pub fn parse_setsystem(text: &str) -> Result<SetSystem> {
    match parse_documents(text, ParseOptions::default())?.into_iter().next() {
        Some(Document::Sets(s)) => Ok(s),
        Some(d) => Err(Error::parse(1, format!("expected SS document, found {}", d.kind()))),
        None => Err(Error::parse(1, "empty input")),
    }
}

fn push_edges(out: &mut String, h: &Hypergraph) {
    writeln!(out, "HG {} {} {}", h.t(), h.n(), h.m()).unwrap();
    for e in h.edges() {
        push_row(out, e);
    }
}

fn push_row(out: &mut String, row: &[usize]) {
    let mut first = true;
    for x in row {
        if !first {
            out.push(' ');
        }
        first = false;
        write!(out, "{x}").unwrap();
    }
    out.push('\n');
}

pub fn format_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    push_edges(&mut out, h);
    out
}

/// `HG` block followed by `LABELS <k> <base_n>` and one label per vertex.
pub fn format_blowup(b: &BlowUp) -> String {
    let mut out = String::new();
    push_edges(&mut out, b.hyper());
    writeln!(out, "LABELS {} {}", b.k(), b.base_n()).unwrap();
    for l in b.labels() {
        push_row(&mut out, l);
    }
    out
}

pub fn format_setsystem(s: &SetSystem) -> String {
    let mut out = String::new();
    writeln!(out, "SS {} {}", s.n(), s.len()).unwrap();
    for set in s.sets() {
        write!(out, "{}", set.len()).unwrap();
        for x in set {
            write!(out, " {x}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn format_lp_solution(x: &LpSolution) -> String {
    let kind = match x.kind {
        LpKind::Primal => "vc",
        LpKind::Dual => "matching",
    };
    let mode = match x.mode {
        LpMode::Exact => "exact",
        LpMode::Float => "float",
    };
    let mut out = String::new();
    writeln!(out, "LPSOL {kind} {mode} {}", x.values.len()).unwrap();
    for (i, v) in x.values.iter().enumerate() {
        writeln!(out, "{i} {v}").unwrap();
    }
    writeln!(out, "OBJ {}", x.objective).unwrap();
    out
}

fn opt_value(v: &Option<LpValue>) -> String {
    v.as_ref().map_or_else(|| "NA".to_string(), |v| v.to_string())
}

fn opt_size(v: Option<usize>) -> String {
    v.map_or_else(|| "NA".to_string(), |v| v.to_string())
}

pub fn format_cover(r: &CoverResult) -> String {
    let mut out = String::new();
    writeln!(out, "COVER {}", r.size()).unwrap();
    for v in r.cover.members() {
        writeln!(out, "{v}").unwrap();
    }
    let b = &r.breakdown;
    writeln!(out, "BREAKDOWN U={} SPRIME={} PARITY={}", b.u.len(), b.s_prime.len(), b.parity_class.len()).unwrap();
    writeln!(out, "LP OPT={} RESIDUAL={}", opt_value(&r.lp_opt), opt_value(&r.lp_opt_residual)).unwrap();
    writeln!(out, "SEED {} TRIAL {}", r.seed, r.trial_index).unwrap();
    writeln!(
        out,
        "CHOSEN {} ROUNDING={} FALLBACK={}",
        r.source.name(),
        opt_size(r.rounding_size),
        opt_size(r.fallback_size)
    )
    .unwrap();
    out
}

pub fn format_matching(ids: &[usize]) -> String {
    let mut out = String::new();
    writeln!(out, "MATCHING {}", ids.len()).unwrap();
    for i in ids {
        writeln!(out, "{i}").unwrap();
    }
    out
}

pub fn format_greedy_trace(tr: &GreedyTrace) -> String {
    let mut out = String::new();
    writeln!(out, "GREEDY {}", tr.len()).unwrap();
    for i in 0..tr.len() {
        writeln!(out, "{} {} {}", tr.picked[i], tr.newly_covered[i], tr.uncovered_after[i]).unwrap();
    }
    out
}
