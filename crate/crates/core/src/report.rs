//! Report building and rendering: generator expressions, the embedded reference
//! tables, single-code reports and text/JSON/CSV output.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cyclic::{CanonicalGens, CrtProfile, CyclicCode};
use crate::error::{Error, ParseError, Result};
use crate::factor::Factorization;
use crate::image::{params, BinaryParams, Caps, CodeSummary, SearchReport};
use crate::poly::{PolyR, PolyZ4};
use crate::ring::RElem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// One term `c·u^e·x^k·g_a·g_b...` of a generator expression.
fn parse_term(term: &str, lifts: &[PolyZ4]) -> Result<PolyR> {
    let bad = || Error::Parse(ParseError::BadExpr(term.to_string()));
    let b = term.as_bytes();
    let mut i = 0;
    while i < b.len() && b[i].is_ascii_digit() {
        i += 1;
    }
    let coeff: i64 = if i == 0 { 1 } else { term[..i].parse().map_err(|_| bad())? };
    let mut scalar = RElem::from_ints(coeff, 0);
    if b.get(i) == Some(&b'u') {
        scalar = scalar * RElem::U;
        i += 1;
    }
    let mut p = PolyZ4::one();
    while i < b.len() {
        match b[i] {
            b'g' => {
                let start = i + 1;
                i = start;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let k: usize = term[start..i].parse().map_err(|_| bad())?;
                let g = k.checked_sub(1).and_then(|k| lifts.get(k)).ok_or(ParseError::BadFactorIndex(k))?;
                p = &p * g;
            }
            b'x' => {
                i += 1;
                let mut e = 1;
                if b.get(i) == Some(&b'^') {
                    let start = i + 1;
                    i = start;
                    while i < b.len() && b[i].is_ascii_digit() {
                        i += 1;
                    }
                    e = term[start..i].parse().map_err(|_| bad())?;
                }
                p = p.shift(e);
            }
            _ => return Err(bad()),
        }
    }
    Ok(p.to_r().scale(scalar))
}

/// A generator written with the lifted factors, e.g. `ug1g2+2ug1`, `g1+2`, `3u`.
/// `g_k` is the k-th lift of [`Factorization`] order.
pub fn parse_expression(expr: &str, lifts: &[PolyZ4]) -> Result<PolyR> {
    let expr: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if expr.is_empty() {
        return Err(ParseError::EmptyPoly.into());
    }
    let mut acc = PolyR::zero();
    let mut sign_neg = false;
    let mut start = 0;
    let bytes = expr.as_bytes();
    for i in 0..=bytes.len() {
        if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && i > 0 && bytes[i - 1] != b'^') {
            let term = &expr[start..i];
            let term = term.strip_prefix('+').unwrap_or(term);
            let (neg, term) = match term.strip_prefix('-') {
                Some(t) => (true, t),
                None => (false, term),
            };
            if term.is_empty() {
                return Err(ParseError::BadExpr(expr.clone()).into());
            }
            let t = parse_term(term, lifts)?;
            acc = if neg ^ sign_neg { &acc - &t } else { &acc + &t };
            sign_neg = false;
            start = i;
        }
    }
    Ok(acc)
}

/// Parses a `;`-separated generator list. Each entry is either the wire form
/// (ascending coefficients, `a:b` for `a + ub`) or a factor expression.
pub fn parse_generators(s: &str, fact: &Factorization) -> Result<Vec<PolyR>> {
    s.split(';')
        .map(str::trim)
        .filter(|g| !g.is_empty())
        .map(|g| {
            if g.chars().all(|c| c.is_ascii_digit() || c == ':' || c == ',' || c == ' ') {
                Ok(g.parse::<PolyR>()?)
            } else {
                parse_expression(g, &fact.z4_lifts)
            }
        })
        .collect()
}

/// Code descriptor exchanged as JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub n: usize,
    #[serde(default)]
    pub generators: Vec<PolyR>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crt_profile: Option<CrtProfile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<CanonicalGens>,
}

impl CodeDescriptor {
    /// The code, from the CRT profile, the canonical data or the generators, in that order.
    pub fn to_code(&self, fact: &Factorization) -> Result<CyclicCode> {
        if let Some(p) = &self.crt_profile {
            CyclicCode::from_crt_profile(p, fact)
        } else if let Some(c) = &self.canonical {
            CyclicCode::from_canonical(self.n, c)
        } else {
            CyclicCode::from_generators(self.n, self.generators.clone())
        }
    }
}

/// How a table row's group is expanded into concrete codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expand {
    Single,
    /// `i = 1..=k`
    Each(usize),
    /// `i < j`, both in `1..=k`
    Pairs(usize),
}

/// A row group of a reference table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedRow {
    pub template: String,
    pub expand: Expand,
    pub rank: u32,
}

/// A reference table of nonzero cyclic codes with their rank values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedTable {
    pub which: u8,
    pub n: usize,
    pub rows: Vec<ExpectedRow>,
}

const TABLE_1: &str = "\
2g{i}, ug1+2u | i=2 | 2
2g{i}, ug2+2u | i=2 | 1
2g{i}, 3u | i=2 | 3
2, ug1+2u | - | 2
2, ug2+2u | - | 1
2, 3u | - | 3
g1+2, 3u | - | 3
g2+2, 3u | - | 3
";

const TABLE_2_U_PARTS: [(&str, u32); 13] = [
    ("ug1g2+2ug1", 3),
    ("ug1g2+2ug2", 3),
    ("ug1g2+2u", 3),
    ("ug1g3+2ug1", 3),
    ("ug1g3+2ug3", 3),
    ("ug1g3+2u", 3),
    ("ug2g3+2ug2", 1),
    ("ug2g3+2ug3", 1),
    ("ug2g3+2u", 1),
    ("ug1+2u", 6),
    ("ug2+2u", 4),
    ("ug3+2u", 4),
    ("3u", 7),
];

const TABLE_2_TAIL: &str = "\
g1g2+2g1, ug1+2u | - | 6
g1g2+2g1, ug2+2u | - | 4
g1g2+2g1, 3u | - | 7
g1g2+2g2, ug1+2u | - | 6
g1g2+2g2, ug2+2u | - | 4
g1g2+2g2, 3u | - | 7
g1g2+2, ug1+2u | - | 6
g1g2+2, ug2+2u | - | 4
g1g2+2, 3u | - | 7
g1g3+2g1, ug1+2u | - | 6
g1g3+2g1, ug3+2u | - | 4
g1g3+2g1, 3u | - | 7
g1g3+2g3, ug1+2u | - | 6
g1g3+2g3, ug3+2u | - | 4
g1g3+2g3, 3u | - | 7
g1g3+2, ug1+2u | - | 6
g1g3+2, ug3+2u | - | 4
g1g3+2, 3u | - | 7
g2g3+2g2, ug2+2u | - | 4
g2g3+2g2, ug3+2u | - | 4
g2g3+2g2, 3u | - | 7
g2g3+2g3, ug2+2u | - | 4
g2g3+2g3, ug3+2u | - | 4
g2g3+2g3, 3u | - | 7
g2g3+2, ug2+2u | - | 4
g2g3+2, ug3+2u | - | 4
g2g3+2, 3u | - | 7
g1+2, 3u | - | 7
g2+2, 3u | - | 7
g3+2, 3u | - | 7
";

fn parse_rows(text: &str) -> Vec<ExpectedRow> {
    text.lines()
        .map(|line| {
            let parts: Vec<&str> = line.split('|').map(str::trim).collect();
            let expand = match parts[1] {
                "-" => Expand::Single,
                e if e.starts_with("i<j=") => Expand::Pairs(e[4..].parse().unwrap()),
                e => Expand::Each(e[2..].parse().unwrap()),
            };
            ExpectedRow { template: parts[0].to_string(), expand, rank: parts[2].parse().unwrap() }
        })
        .collect()
}

impl ExpectedTable {
    pub fn get(which: u8) -> Option<ExpectedTable> {
        match which {
            1 => Some(ExpectedTable { which, n: 3, rows: parse_rows(TABLE_1) }),
            2 => {
                let mut rows = Vec::new();
                for (first, expand) in [("2g{i}g{j}", Expand::Pairs(3)), ("2g{i}", Expand::Each(3)), ("2", Expand::Single)] {
                    for (u_part, rank) in TABLE_2_U_PARTS {
                        rows.push(ExpectedRow { template: format!("{first}, {u_part}"), expand, rank });
                    }
                }
                rows.extend(parse_rows(TABLE_2_TAIL));
                Some(ExpectedTable { which, n: 7, rows })
            }
            _ => None,
        }
    }

    /// Concrete generator lists `(label, generators, expected rank)` for every row instance.
    pub fn instances(&self) -> Vec<(String, u32)> {
        let mut out = Vec::new();
        for row in &self.rows {
            let subst: Vec<(usize, usize)> = match row.expand {
                Expand::Single => vec![(0, 0)],
                Expand::Each(k) => (1..=k).map(|i| (i, 0)).collect(),
                Expand::Pairs(k) => (1..=k).flat_map(|i| (i + 1..=k).map(move |j| (i, j))).collect(),
            };
            for (i, j) in subst {
                let s = row.template.replace("{i}", &i.to_string()).replace("{j}", &j.to_string());
                out.push((s, row.rank));
            }
        }
        out
    }
}

/// Outcome for one concrete table row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowResult {
    pub generators: String,
    pub expected_rank: u32,
    pub paper_rank: Option<u32>,
    pub nakayama_count: u32,
    pub log2_size: u32,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub which: u8,
    pub n: usize,
    pub rows: Vec<TableRowResult>,
    pub mismatches: usize,
}

/// Builds every row's code from its generators and compares `n - deg f3` with the table.
pub fn check_table(table: &ExpectedTable) -> Result<TableReport> {
    let fact = Factorization::new(table.n)?;
    let mut rows = Vec::new();
    for (label, expected) in table.instances() {
        let gens = label.split(',').map(|g| parse_expression(g, &fact.z4_lifts)).collect::<Result<Vec<_>>>()?;
        let code = CyclicCode::from_generators(table.n, gens)?;
        let paper_rank = code.canonical_form(&fact).ok().map(|c| c.paper_rank(table.n));
        rows.push(TableRowResult {
            generators: format!("<{label}>"),
            expected_rank: expected,
            paper_rank,
            nakayama_count: code.nakayama_count(),
            log2_size: code.log2_size(),
            matches: paper_rank == Some(expected),
        });
    }
    let mismatches = rows.iter().filter(|r| !r.matches).count();
    Ok(TableReport { which: table.which, n: table.n, rows, mismatches })
}

/// Everything `code info` prints about one code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeInfo {
    pub n: usize,
    pub generators: Vec<PolyR>,
    pub log2_size: u32,
    pub canonical: Option<CanonicalGens>,
    pub residue_generators: Option<(PolyZ4, PolyZ4)>,
    pub residue_log2_size: u32,
    pub torsion_generators: Option<(PolyZ4, PolyZ4)>,
    pub torsion_log2_size: u32,
    pub paper_rank: Option<u32>,
    pub nakayama_count: u32,
    pub d_lee: Option<u32>,
    pub image: BinaryParams,
}

pub fn code_info(code: &CyclicCode, fact: &Factorization, caps: &Caps) -> Result<CodeInfo> {
    let residue = code.residue_code();
    let torsion = code.torsion_code();
    let canonical = code.canonical_form(fact).ok();
    let image = params(code, caps)?;
    Ok(CodeInfo {
        n: code.n(),
        generators: code.generators().to_vec(),
        log2_size: code.log2_size(),
        paper_rank: canonical.as_ref().map(|c| c.paper_rank(code.n())),
        canonical,
        residue_generators: residue.generator_pair(fact),
        residue_log2_size: residue.log2_size(),
        torsion_generators: torsion.generator_pair(fact),
        torsion_log2_size: torsion.log2_size(),
        nakayama_count: code.nakayama_count(),
        d_lee: image.min_distance,
        image,
    })
}

fn opt(v: Option<u32>, none: &str) -> String {
    v.map_or(none.to_string(), |v| v.to_string())
}

pub const CSV_HEADER: [&str; 11] = [
    "n",
    "generators",
    "log2_size",
    "paper_rank",
    "nakayama_count",
    "d_lee",
    "image_length",
    "image_log2_size",
    "image_d",
    "linear",
    "qc4",
];

fn csv_record(s: &CodeSummary) -> [String; 11] {
    [
        s.n.to_string(),
        s.generators.clone(),
        s.log2_size.to_string(),
        opt(s.paper_rank, "n/a"),
        s.nakayama_count.to_string(),
        opt(s.d_lee, "inf"),
        s.image_length.to_string(),
        s.image_log2_size.to_string(),
        opt(s.image_d, "inf"),
        s.linear.to_string(),
        s.qc4.to_string(),
    ]
}

pub fn summaries_csv(rows: &[CodeSummary]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for s in rows {
        w.write_record(csv_record(s)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
}

pub fn summaries_text(rows: &[CodeSummary]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<28} {:>5} {:>6} {:>5} {:>5} {:>6} {:>6} {:>6}  {}",
        "profile", "log2", "rank", "gens", "d", "image", "linear", "qc4", "generators"
    );
    for s in rows {
        let profile = s.crt_profile.as_ref().map_or("-".to_string(), |p| p.to_string());
        let _ = writeln!(
            out,
            "{:<28} {:>5} {:>6} {:>5} {:>5} {:>6} {:>6} {:>6}  {}",
            profile,
            s.log2_size,
            opt(s.paper_rank, "n/a"),
            s.nakayama_count,
            opt(s.d_lee, "inf"),
            format!("({},{})", s.image_length, s.image_log2_size),
            s.linear,
            s.qc4,
            s.generators
        );
    }
    out
}

pub fn render_summaries(rows: &[CodeSummary], format: Format) -> String {
    match format {
        Format::Text => summaries_text(rows),
        Format::Csv => summaries_csv(rows),
        Format::Json => serde_json::to_string_pretty(rows).expect("summaries serialize") + "\n",
    }
}

pub fn render_search(report: &SearchReport, format: Format) -> String {
    let pick = |idx: &[usize]| idx.iter().map(|&i| report.rows[i].clone()).collect::<Vec<_>>();
    let top = pick(&report.top);
    let pareto = pick(&report.pareto);
    match format {
        Format::Csv => summaries_csv(&top),
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                n: usize,
                codes: usize,
                top: &'a [CodeSummary],
                pareto: &'a [CodeSummary],
            }
            let out = Out { n: report.n, codes: report.rows.len(), top: &top, pareto: &pareto };
            serde_json::to_string_pretty(&out).expect("search serializes") + "\n"
        }
        Format::Text => format!(
            "{} cyclic codes of length {} (images of length {}), ranked by d, then size\n\ntop {}:\n{}\nPareto front (d vs log2 size):\n{}",
            report.rows.len(),
            report.n,
            4 * report.n,
            top.len(),
            summaries_text(&top),
            summaries_text(&pareto)
        ),
    }
}

pub fn render_factorization(f: &Factorization, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(f).expect("factorization serializes") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["index", "f2_factor", "z4_lift", "idempotent"]).expect("in-memory write");
            for i in 0..f.m() {
                w.write_record([
                    (i + 1).to_string(),
                    f.f2_factors[i].to_string(),
                    f.z4_lifts[i].to_string(),
                    f.idempotents[i].to_string(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8")
        }
        Format::Text => {
            let mut out = format!("x^{}-1: {} irreducible factors over F2\n", f.n, f.m());
            for i in 0..f.m() {
                let _ = writeln!(
                    out,
                    "g{}: {:<24} lift {:<24} [{}]  idempotent {}",
                    i + 1,
                    f.f2_factors[i].pretty(),
                    f.z4_lifts[i].pretty(),
                    f.z4_lifts[i],
                    f.idempotents[i].pretty()
                );
            }
            out
        }
    }
}

pub fn render_table(r: &TableReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("table serializes") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["generators", "expected_rank", "paper_rank", "nakayama_count", "log2_size", "matches"])
                .expect("in-memory write");
            for row in &r.rows {
                w.write_record([
                    row.generators.clone(),
                    row.expected_rank.to_string(),
                    opt(row.paper_rank, "n/a"),
                    row.nakayama_count.to_string(),
                    row.log2_size.to_string(),
                    row.matches.to_string(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8")
        }
        Format::Text => {
            let mut out = format!("table {} (n = {}), rank read as n - deg f3\n", r.which, r.n);
            let _ = writeln!(out, "{:<36} {:>8} {:>6} {:>5} {:>5}  status", "generators", "expected", "rank", "gens", "log2");
            for row in &r.rows {
                let _ = writeln!(
                    out,
                    "{:<36} {:>8} {:>6} {:>5} {:>5}  {}",
                    row.generators,
                    row.expected_rank,
                    opt(row.paper_rank, "n/a"),
                    row.nakayama_count,
                    row.log2_size,
                    if row.matches { "ok" } else { "MISMATCH" }
                );
            }
            let _ = writeln!(out, "{} rows, {} mismatches", r.rows.len(), r.mismatches);
            out
        }
    }
}

pub fn render_code_info(info: &CodeInfo, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(info).expect("info serializes") + "\n",
        Format::Csv => {
            let s = CodeSummary {
                n: info.n,
                generators: info.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ; "),
                crt_profile: None,
                log2_size: info.log2_size,
                paper_rank: info.paper_rank,
                nakayama_count: info.nakayama_count,
                d_lee: info.d_lee,
                image_length: info.image.length,
                image_log2_size: info.image.log2_size,
                image_d: info.image.min_distance,
                linear: info.image.is_linear_set,
                qc4: info.image.is_qc4,
                checks: info.image.checks,
            };
            summaries_csv(&[s])
        }
        Format::Text => {
            let pair = |p: &Option<(PolyZ4, PolyZ4)>| {
                p.as_ref().map_or("none found".to_string(), |(a, b)| format!("<{} + 2({})>", a.pretty(), b.pretty()))
            };
            let mut out = String::new();
            let gens: Vec<String> = info.generators.iter().map(|g| g.pretty()).collect();
            let _ = writeln!(out, "n                {}", info.n);
            let _ = writeln!(out, "generators       <{}>", gens.join(", "));
            let _ = writeln!(out, "log2 |C|         {}", info.log2_size);
            match &info.canonical {
                Some(c) => {
                    let _ = writeln!(
                        out,
                        "canonical        f1={} f2={} f14={} f3={} f4={}",
                        c.f1.pretty(),
                        c.f2.pretty(),
                        c.f14.pretty(),
                        c.f3.pretty(),
                        c.f4.pretty()
                    );
                }
                None => {
                    let _ = writeln!(out, "canonical        n/a");
                }
            }
            let _ = writeln!(out, "residue          {}  log2 size {}", pair(&info.residue_generators), info.residue_log2_size);
            let _ = writeln!(out, "torsion          {}  log2 size {}", pair(&info.torsion_generators), info.torsion_log2_size);
            let _ = writeln!(out, "paper rank       {}", opt(info.paper_rank, "n/a"));
            let _ = writeln!(out, "nakayama count   {}", info.nakayama_count);
            let _ = writeln!(out, "min Lee weight   {}", opt(info.d_lee, "inf"));
            let _ = writeln!(
                out,
                "Gray image       length {}, 2^{} words, d {}, linear {}, 4-QC {} ({} check)",
                info.image.length,
                info.image.log2_size,
                opt(info.image.min_distance, "inf"),
                info.image.is_linear_set,
                info.image.is_qc4,
                info.image.checks.as_str()
            );
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        let f = Factorization::new(3).unwrap();
        let l = &f.z4_lifts;
        assert_eq!(parse_expression("3u", l).unwrap(), "0:3".parse().unwrap());
        assert_eq!(parse_expression("2", l).unwrap(), "2".parse().unwrap());
        assert_eq!(parse_expression("g1+2", l).unwrap(), "1:0,1:0".parse().unwrap());
        assert_eq!(parse_expression("ug1+2u", l).unwrap(), "0:1,0:1".parse().unwrap());
        assert_eq!(parse_expression("2g1g2", l).unwrap(), "2,0,0,2".parse().unwrap());
        assert_eq!(parse_expression("x^2 - 1", l).unwrap(), "3,0,1".parse().unwrap());
        assert!(parse_expression("g3", l).is_err());
        assert!(parse_expression("2q", l).is_err());
        assert!(parse_expression("", l).is_err());
    }

    #[test]
    fn generator_lists() {
        let f = Factorization::new(3).unwrap();
        let g = parse_generators("2 ; 0:3", &f).unwrap();
        assert_eq!(g, vec!["2".parse().unwrap(), "0:3".parse().unwrap()]);
        assert_eq!(parse_generators("2; 3u", &f).unwrap(), g);
    }

    #[test]
    fn table_shapes() {
        assert_eq!(ExpectedTable::get(1).unwrap().rows.len(), 8);
        assert_eq!(ExpectedTable::get(1).unwrap().instances().len(), 11);
        let t2 = ExpectedTable::get(2).unwrap();
        assert_eq!(t2.rows.len(), 69);
        assert_eq!(t2.instances().len(), 13 * 7 + 30);
        assert!(ExpectedTable::get(3).is_none());
    }

    #[test]
    fn table_one_matches() {
        let r = check_table(&ExpectedTable::get(1).unwrap()).unwrap();
        assert_eq!(r.mismatches, 0, "{}", render_table(&r, Format::Text));
    }

    #[test]
    fn csv_columns() {
        let csv = summaries_csv(&[]);
        assert_eq!(csv.trim(), CSV_HEADER.join(","));
    }
}
