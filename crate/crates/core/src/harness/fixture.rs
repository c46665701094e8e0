//! Line-oriented fixture files.
//!
//! ```text
//! # dihedral group of order 8
//! group D8
//! backend pc
//! prime 2
//! ngens 3
//! pow 2 = 3^1
//! comm 2 1 = 3^1
//! end
//!
//! aut flip on D8
//! image 1 = 1^1
//! image 2 = 2^1 3^1
//! end
//!
//! action A on D8 = flip
//! check lemma_3_3 on D8 k=2 p=2
//! ```

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Location, Result};
use crate::group::{
    build_group, format_cycles, parse_cycles, Automorphism, BuildOptions, FiniteGroup,
    GroupElement, GroupSpec, Homomorphism, NormalWord, PcPresentation, PermutationGenSet,
};
use crate::util::gcd;

use super::CATALOG;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDecl {
    pub name: String,
    pub spec: GroupSpec,
}

/// Right-hand side of an `image` line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ImageValue {
    /// Normal word over a pc presentation.
    Word(NormalWord),
    /// Disjoint cycles over `{1..degree}`, stored 0-based.
    Cycles(Vec<u32>),
    /// Product of named permutation generators with integer exponents.
    GenWord(Vec<(String, i64)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutDecl {
    pub name: String,
    pub group: String,
    /// `(generator reference, image)`: a 1-based pc index or a permutation
    /// generator name.
    pub images: Vec<(String, ImageValue)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionDecl {
    pub name: String,
    pub group: String,
    pub auts: Vec<String>,
}

/// An isomorphism between two group fixtures, given on generators of the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoDecl {
    pub name: String,
    pub source: String,
    pub target: String,
    pub images: Vec<(String, ImageValue)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckDecl {
    pub check: String,
    pub target: String,
    pub params: Vec<(String, String)>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FixtureFile {
    pub groups: Vec<GroupDecl>,
    pub auts: Vec<AutDecl>,
    pub actions: Vec<ActionDecl>,
    pub isos: Vec<IsoDecl>,
    pub checks: Vec<CheckDecl>,
}

impl FixtureFile {
    pub fn group(&self, name: &str) -> Option<&GroupDecl> {
        self.groups.iter().find(|g| g.name == name)
    }

    /// Appends every declaration of `other`; names must stay unique.
    pub fn merge(&mut self, other: FixtureFile) -> Result<()> {
        let mut seen: HashMap<String, ()> = self.names().map(|n| (n.to_string(), ())).collect();
        for n in other.names() {
            if seen.insert(n.to_string(), ()).is_some() {
                return Err(Error::DuplicateName {
                    location: Location { line: 0, column: 0 },
                    name: n.to_string(),
                });
            }
        }
        self.groups.extend(other.groups);
        self.auts.extend(other.auts);
        self.actions.extend(other.actions);
        self.isos.extend(other.isos);
        self.checks.extend(other.checks);
        Ok(())
    }

    fn names(&self) -> impl Iterator<Item = &str> {
        self.groups
            .iter()
            .map(|g| g.name.as_str())
            .chain(self.auts.iter().map(|a| a.name.as_str()))
            .chain(self.actions.iter().map(|a| a.name.as_str()))
            .chain(self.isos.iter().map(|i| i.name.as_str()))
    }
}

struct Line<'a> {
    number: usize,
    /// `(0-based byte column, token)`.
    tokens: Vec<(usize, &'a str)>,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn loc(&self, k: usize) -> Location {
        let column = self.tokens.get(k).map_or(self.text.len(), |t| t.0) + 1;
        Location { line: self.number, column }
    }

    fn err(&self, k: usize, message: impl Into<String>) -> Error {
        Error::Syntax { location: self.loc(k), message: message.into() }
    }

    fn get(&self, k: usize, what: &str) -> Result<&'a str> {
        self.tokens.get(k).map(|t| t.1).ok_or_else(|| self.err(k, format!("expected {what}")))
    }

    fn expect(&self, k: usize, keyword: &str) -> Result<()> {
        match self.tokens.get(k) {
            Some((_, t)) if *t == keyword => Ok(()),
            _ => Err(self.err(k, format!("expected `{keyword}`"))),
        }
    }

    fn number<T: std::str::FromStr>(&self, k: usize, what: &str) -> Result<T> {
        self.get(k, what)?.parse().map_err(|_| self.err(k, format!("expected {what}")))
    }

    fn done(&self, k: usize) -> Result<()> {
        if k < self.tokens.len() {
            Err(self.err(k, "unexpected trailing input"))
        } else {
            Ok(())
        }
    }

    /// Raw text from token `k` to the end of the line.
    fn rest(&self, k: usize) -> &'a str {
        self.tokens.get(k).map_or("", |t| self.text[t.0..].trim_end())
    }
}

fn tokenize(number: usize, raw: &str) -> Line<'_> {
    let text = raw.split('#').next().unwrap_or("");
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push((s, &text[s..]));
    }
    Line { number, tokens, text }
}

/// A reference to be resolved once the whole file is read.
struct Pending {
    location: Location,
    name: String,
}

pub fn parse_fixture(text: &str) -> Result<FixtureFile> {
    let lines: Vec<Line> = text
        .lines()
        .enumerate()
        .map(|(i, l)| tokenize(i + 1, l))
        .filter(|l| !l.tokens.is_empty())
        .collect();
    let mut out = FixtureFile::default();
    let mut names: HashMap<String, Location> = HashMap::new();
    let mut declare = |name: &str, location: Location| -> Result<()> {
        if names.insert(name.to_string(), location).is_some() {
            return Err(Error::DuplicateName { location, name: name.to_string() });
        }
        Ok(())
    };
    // Deferred resolution: (kind expected, reference).
    let mut group_refs: Vec<Pending> = Vec::new();
    let mut aut_refs: Vec<(Pending, String)> = Vec::new();
    let mut target_refs: Vec<Pending> = Vec::new();
    let mut image_blocks: Vec<(usize, bool, String, Vec<(Location, String, RawImage)>)> = Vec::new();

    let mut k = 0;
    while k < lines.len() {
        let line = &lines[k];
        let keyword = line.tokens[0].1;
        match keyword {
            "group" => {
                let name = line.get(1, "a group name")?;
                line.done(2)?;
                declare(name, line.loc(1))?;
                let (spec, next) = parse_group_block(&lines, k + 1, name)?;
                out.groups.push(GroupDecl { name: name.to_string(), spec });
                k = next;
                continue;
            }
            "aut" => {
                let name = line.get(1, "an automorphism name")?;
                line.expect(2, "on")?;
                let group = line.get(3, "a group name")?;
                line.done(4)?;
                declare(name, line.loc(1))?;
                group_refs.push(Pending { location: line.loc(3), name: group.to_string() });
                let (images, next) = parse_image_block(&lines, k + 1)?;
                image_blocks.push((out.auts.len(), false, group.to_string(), images));
                out.auts.push(AutDecl { name: name.to_string(), group: group.to_string(), images: Vec::new() });
                k = next;
                continue;
            }
            "iso" => {
                let name = line.get(1, "an isomorphism name")?;
                line.expect(2, "from")?;
                let source = line.get(3, "a group name")?;
                line.expect(4, "to")?;
                let target = line.get(5, "a group name")?;
                line.done(6)?;
                declare(name, line.loc(1))?;
                group_refs.push(Pending { location: line.loc(3), name: source.to_string() });
                group_refs.push(Pending { location: line.loc(5), name: target.to_string() });
                let (images, next) = parse_image_block(&lines, k + 1)?;
                image_blocks.push((out.isos.len(), true, source.to_string(), images));
                out.isos.push(IsoDecl {
                    name: name.to_string(),
                    source: source.to_string(),
                    target: target.to_string(),
                    images: Vec::new(),
                });
                k = next;
                continue;
            }
            "action" => {
                let name = line.get(1, "an action name")?;
                line.expect(2, "on")?;
                let group = line.get(3, "a group name")?;
                line.expect(4, "=")?;
                declare(name, line.loc(1))?;
                group_refs.push(Pending { location: line.loc(3), name: group.to_string() });
                let mut auts = Vec::new();
                for t in 5..line.tokens.len() {
                    let a = line.tokens[t].1;
                    aut_refs.push((Pending { location: line.loc(t), name: a.to_string() }, group.to_string()));
                    auts.push(a.to_string());
                }
                if auts.is_empty() {
                    return Err(line.err(5, "expected at least one automorphism"));
                }
                out.actions.push(ActionDecl { name: name.to_string(), group: group.to_string(), auts });
            }
            "check" => {
                let check = line.get(1, "a check name")?;
                if !CATALOG.contains(&check) || check == "all" {
                    return Err(line.err(1, format!("unknown check `{check}`; known checks: {}", CATALOG.join(", "))));
                }
                line.expect(2, "on")?;
                let target = line.get(3, "a target name")?;
                target_refs.push(Pending { location: line.loc(3), name: target.to_string() });
                let params = parse_params(line, 4)?;
                out.checks.push(CheckDecl { check: check.to_string(), target: target.to_string(), params });
            }
            other => return Err(line.err(0, format!("unexpected `{other}`"))),
        }
        k += 1;
    }

    let unresolved = |p: &Pending| Error::UnresolvedReference { location: p.location, name: p.name.clone() };
    for p in &group_refs {
        if out.group(&p.name).is_none() {
            return Err(unresolved(p));
        }
    }
    for (p, group) in &aut_refs {
        match out.auts.iter().find(|a| a.name == p.name) {
            None => return Err(unresolved(p)),
            Some(a) if &a.group != group => {
                return Err(Error::Syntax {
                    location: p.location,
                    message: format!("automorphism `{}` acts on `{}`, not `{group}`", a.name, a.group),
                })
            }
            Some(_) => {}
        }
    }
    for p in &target_refs {
        let known = out.group(&p.name).is_some()
            || out.actions.iter().any(|a| a.name == p.name)
            || out.isos.iter().any(|i| i.name == p.name);
        if !known {
            return Err(unresolved(p));
        }
    }
    for (idx, is_iso, source, raw) in image_blocks {
        let src = &out.group(&source).unwrap().spec;
        let dst = if is_iso { out.group(&out.isos[idx].target).unwrap().spec.clone() } else { src.clone() };
        let mut images = Vec::new();
        for (location, gen, value) in raw {
            check_generator_ref(src, &gen, location)?;
            images.push((gen, resolve_image(&dst, value, location)?));
        }
        if is_iso {
            out.isos[idx].images = images;
        } else {
            out.auts[idx].images = images;
        }
    }
    Ok(out)
}

fn parse_params(line: &Line, from: usize) -> Result<Vec<(String, String)>> {
    let rest = line.rest(from);
    let base = line.tokens.get(from).map_or(0, |t| t.0);
    let bytes = rest.as_bytes();
    let mut params = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let loc = Location { line: line.number, column: base + start + 1 };
        let eq = rest[i..].find('=').map(|e| e + i);
        let Some(eq) = eq.filter(|&e| !rest[start..e].contains(char::is_whitespace) && e > start) else {
            return Err(Error::Syntax { location: loc, message: "expected key=value".into() });
        };
        let key = &rest[start..eq];
        i = eq + 1;
        let vstart = i;
        if bytes.get(i) == Some(&b'(') {
            let mut depth = 0i32;
            while i < bytes.len() {
                match bytes[i] {
                    b'(' => depth += 1,
                    b')' => {
                        depth -= 1;
                        if depth == 0 {
                            i += 1;
                            break;
                        }
                    }
                    _ => {}
                }
                i += 1;
            }
            if depth != 0 {
                return Err(Error::Syntax {
                    location: Location { line: line.number, column: base + vstart + 1 },
                    message: "unbalanced parentheses in value".into(),
                });
            }
        } else {
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
                i += 1;
            }
        }
        if i == vstart {
            return Err(Error::Syntax { location: loc, message: format!("missing value for `{key}`") });
        }
        if params.iter().any(|(k, _): &(String, String)| k == key) {
            return Err(Error::Syntax { location: loc, message: format!("parameter `{key}` given twice") });
        }
        params.push((key.to_string(), rest[vstart..i].to_string()));
    }
    Ok(params)
}

fn find_end(lines: &[Line], from: usize, what: &str) -> Result<usize> {
    (from..lines.len())
        .find(|&k| lines[k].tokens[0].1 == "end")
        .ok_or_else(|| lines[from.saturating_sub(1)].err(0, format!("`{what}` block has no `end`")))
}

fn parse_word(line: &Line, from: usize, ngens: usize, p: u32) -> Result<NormalWord> {
    let mut word: NormalWord = Vec::new();
    for t in from..line.tokens.len() {
        let tok = line.tokens[t].1;
        let (i, e) = match tok.split_once('^') {
            Some((i, e)) => (i.parse::<usize>(), e.parse::<u32>()),
            None => (tok.parse::<usize>(), Ok(1)),
        };
        let (Ok(i), Ok(e)) = (i, e) else {
            return Err(line.err(t, format!("expected a factor `i^e`, found `{tok}`")));
        };
        if i == 0 || i > ngens {
            return Err(line.err(t, format!("generator index {i} out of range 1..={ngens}")));
        }
        if e == 0 || e >= p {
            return Err(line.err(t, format!("exponent {e} out of range 1..{p}")));
        }
        if word.last().is_some_and(|&(j, _)| j >= i) {
            return Err(line.err(t, "generator indices must increase"));
        }
        word.push((i, e));
    }
    Ok(word)
}

fn parse_group_block(lines: &[Line], from: usize, name: &str) -> Result<(GroupSpec, usize)> {
    let end = find_end(lines, from, "group")?;
    let header = &lines[from - 1];
    let backend_line = lines[from..end]
        .iter()
        .find(|l| l.tokens[0].1 == "backend")
        .ok_or_else(|| header.err(1, format!("group `{name}` has no `backend` line")))?;
    let backend = backend_line.get(1, "`pc` or `perm`")?;
    backend_line.done(2)?;
    let spec = match backend {
        "pc" => {
            let mut prime = None;
            let mut ngens = None;
            for l in &lines[from..end] {
                match l.tokens[0].1 {
                    "prime" => {
                        prime = Some((l.number(1, "a prime")?, l));
                        l.done(2)?;
                    }
                    "ngens" => {
                        ngens = Some(l.number(1, "a generator count")?);
                        l.done(2)?;
                    }
                    _ => {}
                }
            }
            let (p, pl): (u32, &Line) = prime.ok_or_else(|| header.err(1, format!("pc group `{name}` has no `prime`")))?;
            let n: usize = ngens.ok_or_else(|| header.err(1, format!("pc group `{name}` has no `ngens`")))?;
            let mut pc = PcPresentation::new(p, n).map_err(|e| pl.err(1, e.to_string()))?;
            for l in &lines[from..end] {
                match l.tokens[0].1 {
                    "backend" | "prime" | "ngens" => {}
                    "pow" => {
                        let i: usize = l.number(1, "a generator index")?;
                        l.expect(2, "=")?;
                        let w = parse_word(l, 3, n, p)?;
                        pc.set_power(i, w).map_err(|e| l.err(1, e.to_string()))?;
                    }
                    "comm" => {
                        let j: usize = l.number(1, "a generator index")?;
                        let i: usize = l.number(2, "a generator index")?;
                        l.expect(3, "=")?;
                        let w = parse_word(l, 4, n, p)?;
                        pc.set_commutator(j, i, w).map_err(|e| l.err(1, e.to_string()))?;
                    }
                    other => return Err(l.err(0, format!("unexpected `{other}` in a pc group"))),
                }
            }
            GroupSpec::Pc(pc)
        }
        "perm" => {
            let degree_line = lines[from..end]
                .iter()
                .find(|l| l.tokens[0].1 == "degree")
                .ok_or_else(|| header.err(1, format!("perm group `{name}` has no `degree`")))?;
            let degree: usize = degree_line.number(1, "a degree")?;
            degree_line.done(2)?;
            let mut gs = PermutationGenSet::new(degree);
            for l in &lines[from..end] {
                match l.tokens[0].1 {
                    "backend" | "degree" => {}
                    "gen" => {
                        let g = l.get(1, "a generator name")?;
                        l.expect(2, "=")?;
                        if gs.generators().iter().any(|(n, _)| n == g) {
                            return Err(Error::DuplicateName { location: l.loc(1), name: g.to_string() });
                        }
                        if g.parse::<i64>().is_ok() || g.contains('^') {
                            return Err(l.err(1, "generator names must not be numbers or contain `^`"));
                        }
                        let images = parse_cycles(l.rest(3), degree).map_err(|m| l.err(3, m))?;
                        gs.add_images(g, images).map_err(|e| l.err(3, e.to_string()))?;
                    }
                    other => return Err(l.err(0, format!("unexpected `{other}` in a perm group"))),
                }
            }
            GroupSpec::Perm(gs)
        }
        other => return Err(backend_line.err(1, format!("unknown backend `{other}`"))),
    };
    Ok((spec, end + 1))
}

/// An `image` right-hand side before the target backend is known.
enum RawImage {
    Text(usize, String),
}

fn parse_image_block(lines: &[Line], from: usize) -> Result<(Vec<(Location, String, RawImage)>, usize)> {
    let end = find_end(lines, from, "image")?;
    let mut out = Vec::new();
    for l in &lines[from..end] {
        if l.tokens[0].1 != "image" {
            return Err(l.err(0, format!("expected `image`, found `{}`", l.tokens[0].1)));
        }
        let gen = l.get(1, "a generator")?;
        l.expect(2, "=")?;
        let col = l.tokens.get(3).map_or(l.text.len(), |t| t.0);
        out.push((l.loc(1), gen.to_string(), RawImage::Text(col, l.rest(3).to_string())));
    }
    Ok((out, end + 1))
}

fn check_generator_ref(spec: &GroupSpec, gen: &str, location: Location) -> Result<()> {
    let ok = match spec {
        GroupSpec::Pc(pc) => gen.parse::<usize>().is_ok_and(|i| i >= 1 && i <= pc.ngens()),
        GroupSpec::Perm(gs) => gs.generators().iter().any(|(n, _)| n == gen),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::UnresolvedReference { location, name: gen.to_string() })
    }
}

fn resolve_image(dst: &GroupSpec, raw: RawImage, location: Location) -> Result<ImageValue> {
    let RawImage::Text(col, text) = raw;
    let at = |offset: usize| Location { line: location.line, column: col + offset + 1 };
    match dst {
        GroupSpec::Pc(pc) => {
            let line = tokenize(location.line, &text);
            parse_word(&line, 0, pc.ngens(), pc.prime())
                .map(ImageValue::Word)
                .map_err(|e| match e {
                    Error::Syntax { location: l, message } => Error::Syntax { location: at(l.column - 1), message },
                    e => e,
                })
        }
        GroupSpec::Perm(gs) => {
            let trimmed = text.trim();
            if trimmed.starts_with('(') || trimmed.is_empty() {
                return parse_cycles(trimmed, gs.degree())
                    .map(ImageValue::Cycles)
                    .map_err(|message| Error::Syntax { location: at(0), message });
            }
            let mut word = Vec::new();
            let mut offset = 0;
            for tok in text.split_whitespace() {
                offset = text[offset..].find(tok).map_or(offset, |o| o + offset);
                let (name, e) = match tok.split_once('^') {
                    Some((n, e)) => (n, e.parse::<i64>().map_err(|_| Error::Syntax {
                        location: at(offset),
                        message: format!("bad exponent in `{tok}`"),
                    })?),
                    None => (tok, 1),
                };
                if !gs.generators().iter().any(|(n, _)| n == name) {
                    return Err(Error::UnresolvedReference { location: at(offset), name: name.to_string() });
                }
                word.push((name.to_string(), e));
                offset += tok.len();
            }
            Ok(ImageValue::GenWord(word))
        }
    }
}

fn format_word(w: &NormalWord) -> String {
    w.iter().map(|(i, e)| format!("{i}^{e}")).collect::<Vec<_>>().join(" ")
}

fn format_image(v: &ImageValue) -> String {
    match v {
        ImageValue::Word(w) => format_word(w),
        ImageValue::Cycles(c) => format_cycles(c),
        ImageValue::GenWord(w) => w
            .iter()
            .map(|(n, e)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect::<Vec<_>>()
            .join(" "),
    }
}

/// Renders a fixture in the grammar accepted by [`parse_fixture`].
pub fn serialize_fixture(f: &FixtureFile) -> String {
    let mut s = String::new();
    for g in &f.groups {
        writeln!(s, "group {}", g.name).unwrap();
        match &g.spec {
            GroupSpec::Pc(pc) => {
                writeln!(s, "backend pc\nprime {}\nngens {}", pc.prime(), pc.ngens()).unwrap();
                for i in 1..=pc.ngens() {
                    if !pc.power(i).is_empty() {
                        writeln!(s, "pow {i} = {}", format_word(pc.power(i))).unwrap();
                    }
                }
                for j in 1..=pc.ngens() {
                    for i in 1..j {
                        if !pc.commutator(j, i).is_empty() {
                            writeln!(s, "comm {j} {i} = {}", format_word(pc.commutator(j, i))).unwrap();
                        }
                    }
                }
            }
            GroupSpec::Perm(gs) => {
                writeln!(s, "backend perm\ndegree {}", gs.degree()).unwrap();
                for (n, images) in gs.generators() {
                    writeln!(s, "gen {n} = {}", format_cycles(images)).unwrap();
                }
            }
        }
        s.push_str("end\n\n");
    }
    for a in &f.auts {
        writeln!(s, "aut {} on {}", a.name, a.group).unwrap();
        for (g, v) in &a.images {
            writeln!(s, "image {g} = {}", format_image(v)).unwrap();
        }
        s.push_str("end\n\n");
    }
    for i in &f.isos {
        writeln!(s, "iso {} from {} to {}", i.name, i.source, i.target).unwrap();
        for (g, v) in &i.images {
            writeln!(s, "image {g} = {}", format_image(v)).unwrap();
        }
        s.push_str("end\n\n");
    }
    for a in &f.actions {
        writeln!(s, "action {} on {} = {}", a.name, a.group, a.auts.join(" ")).unwrap();
    }
    if !f.actions.is_empty() {
        s.push('\n');
    }
    for c in &f.checks {
        write!(s, "check {} on {}", c.check, c.target).unwrap();
        for (k, v) in &c.params {
            write!(s, " {k}={v}").unwrap();
        }
        s.push('\n');
    }
    s
}

/// Closed automorphism group generated by an action's automorphisms.
#[derive(Debug, Clone)]
pub struct ActionFixture {
    pub name: String,
    pub group: String,
    pub generators: Vec<Automorphism>,
    /// All elements of `A`, identity first, then in breadth-first order from
    /// the generators as listed.
    pub elements: Vec<Automorphism>,
    /// `gcd(|A|, |G|) = 1`.
    pub coprime: bool,
}

impl ActionFixture {
    pub fn new(name: &str, group: &FiniteGroup, generators: Vec<Automorphism>) -> Self {
        let mut elements = vec![Automorphism::identity(group)];
        let mut k = 0;
        while k < elements.len() {
            for g in &generators {
                let next = elements[k].then(g);
                if !elements.contains(&next) {
                    elements.push(next);
                }
            }
            k += 1;
        }
        let coprime = gcd(elements.len() as u64, group.order() as u64) == 1;
        Self { name: name.to_string(), group: group.name().to_string(), generators, elements, coprime }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// `A^# = A \ {1}`.
    pub fn nontrivial(&self) -> &[Automorphism] {
        &self.elements[1..]
    }

    /// If `A` is elementary abelian of order `q^2`, returns `q`.
    pub fn noncyclic_q_squared(&self) -> Option<u64> {
        let n = self.order() as u64;
        let q = (2..n).find(|q| q * q == n)?;
        if !crate::util::is_prime(q) {
            return None;
        }
        let all_order_q = self.nontrivial().iter().all(|a| a.order() == q);
        let abelian = self
            .elements
            .iter()
            .all(|a| self.elements.iter().all(|b| a.then(b) == b.then(a)));
        (all_order_q && abelian).then_some(q)
    }

    pub fn involutions(&self) -> Vec<&Automorphism> {
        self.nontrivial().iter().filter(|a| a.order() == 2).collect()
    }
}

/// Groups, automorphisms and actions built from a fixture file. Groups that
/// fail to build are kept with their error.
#[derive(Debug)]
pub struct BuiltFixture {
    pub file: FixtureFile,
    pub groups: BTreeMap<String, std::result::Result<FiniteGroup, String>>,
    pub auts: BTreeMap<String, std::result::Result<Automorphism, String>>,
    pub actions: BTreeMap<String, std::result::Result<ActionFixture, String>>,
    pub isos: BTreeMap<String, std::result::Result<Homomorphism, String>>,
}

impl BuiltFixture {
    pub fn group(&self, name: &str) -> Result<&FiniteGroup> {
        match self.groups.get(name) {
            Some(Ok(g)) => Ok(g),
            Some(Err(e)) => Err(Error::MalformedSpec(format!("group `{name}` failed to build: {e}"))),
            None => Err(Error::MalformedSpec(format!("no group `{name}`"))),
        }
    }
}

pub(crate) fn element_of(g: &FiniteGroup, spec: &GroupSpec, value: &ImageValue) -> Result<usize> {
    match (spec, value) {
        (GroupSpec::Pc(pc), ImageValue::Word(w)) => {
            let mut v = vec![0u32; pc.ngens()];
            for &(i, e) in w {
                v[i - 1] = e;
            }
            g.index_of(&GroupElement::Exponents(v))
        }
        (GroupSpec::Perm(_), ImageValue::Cycles(c)) => g.index_of(&GroupElement::Images(c.clone())),
        (GroupSpec::Perm(gs), ImageValue::GenWord(w)) => {
            let mut x = g.identity();
            for (name, e) in w {
                let k = gs.generators().iter().position(|(n, _)| n == name).ok_or(Error::ForeignElement)?;
                x = g.mul(x, g.pow(g.generators()[k], *e));
            }
            Ok(x)
        }
        _ => Err(Error::ForeignElement),
    }
}

pub(crate) fn generator_of(g: &FiniteGroup, spec: &GroupSpec, gen: &str) -> Result<usize> {
    match spec {
        GroupSpec::Pc(pc) => {
            let i: usize = gen.parse().map_err(|_| Error::ForeignElement)?;
            let mut v = vec![0u32; pc.ngens()];
            *v.get_mut(i.wrapping_sub(1)).ok_or(Error::ForeignElement)? = 1;
            g.index_of(&GroupElement::Exponents(v))
        }
        GroupSpec::Perm(gs) => {
            let k = gs.generators().iter().position(|(n, _)| n == gen).ok_or(Error::ForeignElement)?;
            Ok(g.generators()[k])
        }
    }
}

/// Builds every declaration; build failures are recorded per name.
pub fn build_fixture(file: &FixtureFile, opts: &BuildOptions) -> BuiltFixture {
    use rayon::prelude::*;
    let groups: BTreeMap<_, _> = file
        .groups
        .par_iter()
        .map(|d| (d.name.clone(), build_group(&d.name, &d.spec, opts).map_err(|e| e.to_string())))
        .collect();
    let spec_of = |name: &str| &file.group(name).unwrap().spec;
    let mut auts = BTreeMap::new();
    for a in &file.auts {
        let built = match &groups[&a.group] {
            Err(e) => Err(format!("group `{}` failed to build: {e}", a.group)),
            Ok(g) => (|| {
                let spec = spec_of(&a.group);
                let mut gens = Vec::new();
                let mut images = Vec::new();
                for (gen, v) in &a.images {
                    gens.push(generator_of(g, spec, gen)?);
                    images.push(element_of(g, spec, v)?);
                }
                // unlisted generators are fixed
                let all: Vec<usize> = match spec {
                    GroupSpec::Pc(pc) => (1..=pc.ngens()).map(|i| generator_of(g, spec, &i.to_string())).collect::<Result<_>>()?,
                    GroupSpec::Perm(_) => g.generators().to_vec(),
                };
                for x in all {
                    if !gens.contains(&x) {
                        gens.push(x);
                        images.push(x);
                    }
                }
                Automorphism::from_images(g, &gens, &images)
            })()
            .map_err(|e| e.to_string()),
        };
        auts.insert(a.name.clone(), built);
    }
    let mut actions = BTreeMap::new();
    for act in &file.actions {
        let built = match &groups[&act.group] {
            Err(e) => Err(format!("group `{}` failed to build: {e}", act.group)),
            Ok(g) => act
                .auts
                .iter()
                .map(|n| auts[n].clone().map_err(|e| format!("automorphism `{n}`: {e}")))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map(|gens| ActionFixture::new(&act.name, g, gens)),
        };
        actions.insert(act.name.clone(), built);
    }
    let mut isos = BTreeMap::new();
    for iso in &file.isos {
        let built = match (&groups[&iso.source], &groups[&iso.target]) {
            (Ok(src), Ok(dst)) => (|| {
                let (ss, ds) = (spec_of(&iso.source), spec_of(&iso.target));
                let mut gens = Vec::new();
                let mut images = Vec::new();
                for (gen, v) in &iso.images {
                    gens.push(generator_of(src, ss, gen)?);
                    images.push(element_of(dst, ds, v)?);
                }
                Homomorphism::from_images(src, dst, &gens, &images)
            })()
            .map_err(|e| e.to_string()),
            _ => Err("source or target group failed to build".to_string()),
        };
        isos.insert(iso.name.clone(), built);
    }
    BuiltFixture { file: file.clone(), groups, auts, actions, isos }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let f = parse_fixture("group C2\nbackend pc\nprime 2\nngens 1\npow 1 =\nend").unwrap();
        let built = build_fixture(&f, &BuildOptions::default());
        assert_eq!(built.group("C2").unwrap().order(), 2);
    }

    #[test]
    fn unresolved_group_has_location() {
        let text = "group C2\nbackend pc\nprime 2\nngens 1\nend\naut a on C3\nimage 1 = 1^1\nend\n";
        match parse_fixture(text) {
            Err(Error::UnresolvedReference { location, name }) => {
                assert_eq!(name, "C3");
                assert_eq!((location.line, location.column), (6, 10));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn diagnostics() {
        let dup = "group A\nbackend pc\nprime 2\nngens 1\nend\ngroup A\nbackend pc\nprime 2\nngens 1\nend\n";
        assert!(matches!(parse_fixture(dup), Err(Error::DuplicateName { location, .. }) if location.line == 6));
        let bad = "group A\nbackend pc\nprime 2\nngens 2\npow 1 = 2^3\nend\n";
        assert!(matches!(parse_fixture(bad), Err(Error::Syntax { location, .. }) if location == Location { line: 5, column: 9 }));
        let unknown = "group A\nbackend pc\nprime 2\nngens 1\nend\ncheck nope on A\n";
        assert!(matches!(parse_fixture(unknown), Err(Error::Syntax { .. })));
        assert!(matches!(parse_fixture("group A\nbackend pc\n"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn perm_words_and_params() {
        let text = "group S3\nbackend perm\ndegree 3\ngen r = (1 2 3)\ngen s = (1 2)\nend\n\
                    aut c on S3\nimage r = r^-1\nimage s = s r\nend\n\
                    action A on S3 = c\n\
                    check word_law on S3 word=(pow (comm x0 x1) 3) expect=pass\n";
        let f = parse_fixture(text).unwrap();
        assert_eq!(f.checks[0].params[0], ("word".into(), "(pow (comm x0 x1) 3)".into()));
        let again = parse_fixture(&serialize_fixture(&f)).unwrap();
        assert_eq!(f, again);
        let built = build_fixture(&f, &BuildOptions::default());
        let a = built.actions["A"].as_ref().unwrap();
        assert_eq!(a.order(), 2);
        assert!(!a.coprime);
    }
}
