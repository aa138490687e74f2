//! Line-oriented presentation files.
//!
//! ```text
//! # comment
//! [ring]
//! char = 3
//! vars = t1 t2
//! degrees = 2 2
//!
//! [module m]
//! cover = 2 2
//! rel = t2, 2*t1
//!
//! [complex C]
//! modules = K0 K1
//! augment = M
//! iota = 1, 1, 0, 0
//! map 0 = 1
//! ```
//!
//! `cover` lists generator degrees. Each `rel` row gives the coordinates of
//! one relation. In a complex, each `iota` row is the image of the next
//! generator of the augmenting module in `K0`, and each `map i` row is the
//! image of the next generator of `Ki` in `K(i+1)`. Printing is canonical.

use std::fmt::Write as _;

use crate::complexes::{Augmentation, CochainComplex};
use crate::error::{Error, Result};
use crate::module::ModulePresentation;
use crate::poly::{parse_polynomial, Polynomial};
use crate::ring::{is_identifier, GradedRing, DEFAULT_VAR_DEGREE};
use crate::vector::Vector;

#[derive(Clone, Debug)]
pub struct NamedComplex {
    pub name: String,
    pub modules: Vec<String>,
    pub augment: Option<String>,
    pub complex: CochainComplex,
}

#[derive(Clone, Debug)]
pub struct PresentationFile {
    ring: GradedRing,
    modules: Vec<(String, ModulePresentation)>,
    complexes: Vec<NamedComplex>,
}

impl PresentationFile {
    pub fn new(ring: &GradedRing) -> Self {
        PresentationFile {
            ring: ring.clone(),
            modules: Vec::new(),
            complexes: Vec::new(),
        }
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn modules(&self) -> &[(String, ModulePresentation)] {
        &self.modules
    }

    pub fn complexes(&self) -> &[NamedComplex] {
        &self.complexes
    }

    pub fn module(&self, name: &str) -> Option<&ModulePresentation> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn complex(&self, name: &str) -> Option<&NamedComplex> {
        self.complexes.iter().find(|c| c.name == name)
    }

    fn check_fresh(&self, name: &str) -> Result<()> {
        if !is_identifier(name) {
            return Err(Error::Semantic(format!("`{name}` is not a valid name")));
        }
        if self.module(name).is_some() || self.complex(name).is_some() {
            return Err(Error::Semantic(format!("duplicate name `{name}`")));
        }
        Ok(())
    }

    pub fn add_module(&mut self, name: &str, m: ModulePresentation) -> Result<()> {
        self.check_fresh(name)?;
        self.ring.check_same(m.ring())?;
        self.modules.push((name.to_string(), m));
        Ok(())
    }

    /// Adds a complex whose terms are the named modules, which must already
    /// be present and match the complex's terms.
    pub fn add_complex(
        &mut self,
        name: &str,
        modules: &[&str],
        augment: Option<&str>,
        complex: CochainComplex,
    ) -> Result<()> {
        self.check_fresh(name)?;
        self.ring.check_same(complex.ring())?;
        let same = |a: &ModulePresentation, b: &ModulePresentation| {
            a.cover_shifts() == b.cover_shifts() && a.relations() == b.relations()
        };
        if modules.len() != complex.modules().len() {
            return Err(Error::Semantic(format!("complex `{name}` has the wrong number of modules")));
        }
        for (n, m) in modules.iter().zip(complex.modules()) {
            let found = self
                .module(n)
                .ok_or_else(|| Error::Semantic(format!("unknown module `{n}`")))?;
            if !same(found, m) {
                return Err(Error::Semantic(format!("module `{n}` differs from the complex term")));
            }
        }
        match (augment, complex.augmentation()) {
            (None, None) => {}
            (Some(n), Some(a)) => {
                let found = self
                    .module(n)
                    .ok_or_else(|| Error::Semantic(format!("unknown module `{n}`")))?;
                if !same(found, &a.module) {
                    return Err(Error::Semantic(format!("module `{n}` differs from the augmentation")));
                }
            }
            _ => return Err(Error::Semantic(format!("augmentation of `{name}` does not match"))),
        }
        self.complexes.push(NamedComplex {
            name: name.to_string(),
            modules: modules.iter().map(|s| s.to_string()).collect(),
            augment: augment.map(str::to_string),
            complex,
        });
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::default().run(text)
    }

    pub fn print(&self) -> String {
        let mut out = String::new();
        let r = &self.ring;
        out.push_str("[ring]\n");
        kv(&mut out, "char", &r.characteristic().to_string());
        kv(&mut out, "vars", &r.var_names().join(" "));
        kv(&mut out, "degrees", &join_nums(r.var_degrees()));
        for (name, m) in &self.modules {
            let _ = write!(out, "\n[module {name}]\n");
            kv(&mut out, "cover", &join_nums(m.cover_shifts()));
            for rel in m.relations() {
                kv(&mut out, "rel", &row(r, rel, m.rank()));
            }
        }
        for c in &self.complexes {
            let _ = write!(out, "\n[complex {}]\n", c.name);
            kv(&mut out, "modules", &c.modules.join(" "));
            if let (Some(name), Some(a)) = (&c.augment, c.complex.augmentation()) {
                kv(&mut out, "augment", name);
                let k0 = c.complex.module(0).rank();
                for v in &a.map {
                    kv(&mut out, "iota", &row(r, v, k0));
                }
            }
            for (i, cols) in c.complex.maps().iter().enumerate() {
                let tgt = c.complex.module(i + 1).rank();
                for v in cols {
                    kv(&mut out, &format!("map {i}"), &row(r, v, tgt));
                }
            }
        }
        out
    }
}

fn kv(out: &mut String, key: &str, value: &str) {
    if value.is_empty() {
        let _ = writeln!(out, "{key} =");
    } else {
        let _ = writeln!(out, "{key} = {value}");
    }
}

fn join_nums<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn row(ring: &GradedRing, v: &Vector, rank: usize) -> String {
    v.coordinates(ring, rank)
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn semantic(line: usize, e: impl std::fmt::Display) -> Error {
    Error::Semantic(format!("line {line}: {e}"))
}

/// A value with the 1-based column where it starts.
#[derive(Clone, Debug)]
struct Located {
    line: usize,
    column: usize,
    text: String,
}

impl Located {
    /// Whitespace-separated tokens with their columns.
    fn words(&self) -> Vec<(usize, &str)> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, ch) in self.text.char_indices().chain(std::iter::once((self.text.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    out.push((self.column + s, &self.text[s..i]));
                    start = None;
                }
                _ => {}
            }
        }
        out
    }

    fn integers<T: std::str::FromStr>(&self, what: &str) -> Result<Vec<T>> {
        self.words()
            .into_iter()
            .map(|(col, w)| {
                w.parse()
                    .map_err(|_| parse_error(self.line, col, format!("expected {what}, found `{w}`")))
            })
            .collect()
    }

    /// Comma-separated polynomials; an empty value is the empty row.
    fn row(&self, ring: &GradedRing) -> Result<Vec<Polynomial>> {
        if self.text.trim().is_empty() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut offset = 0;
        for piece in self.text.split(',') {
            let lead = piece.len() - piece.trim_start().len();
            let col = self.column + offset + lead;
            let p = parse_polynomial(ring, piece.trim())
                .map_err(|(c, m)| parse_error(self.line, col + c, m))?;
            out.push(p);
            offset += piece.len() + 1;
        }
        Ok(out)
    }
}

enum Section {
    None,
    Ring,
    Module(usize),
    Complex(usize),
}

#[derive(Default)]
struct RingDraft {
    char: Option<Located>,
    vars: Option<Located>,
    degrees: Option<Located>,
    line: usize,
}

struct ModuleDraft {
    name: String,
    line: usize,
    cover: Option<Located>,
    rels: Vec<Located>,
}

struct ComplexDraft {
    name: String,
    line: usize,
    modules: Option<Located>,
    augment: Option<Located>,
    iota: Vec<Located>,
    maps: Vec<(usize, Located)>,
}

#[derive(Default)]
struct Parser {
    ring: Option<RingDraft>,
    modules: Vec<ModuleDraft>,
    complexes: Vec<ComplexDraft>,
}

fn set_once(slot: &mut Option<Located>, key: &str, value: Located) -> Result<()> {
    if slot.is_some() {
        return Err(parse_error(value.line, 1, format!("duplicate key `{key}`")));
    }
    *slot = Some(value);
    Ok(())
}

impl Parser {
    fn run(mut self, text: &str) -> Result<PresentationFile> {
        let mut section = Section::None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim();
            if trimmed.is_empty() {
                continue;
            }
            let indent = content.len() - content.trim_start().len();
            if let Some(inner) = trimmed.strip_prefix('[') {
                let Some(inner) = inner.strip_suffix(']') else {
                    return Err(parse_error(line, indent + trimmed.len(), "expected `]`"));
                };
                section = self.header(line, indent + 2, inner)?;
                continue;
            }
            let Some(eq) = trimmed.find('=') else {
                return Err(parse_error(line, indent + 1, "expected `key = value`"));
            };
            let key = trimmed[..eq].trim_end();
            let after = &trimmed[eq + 1..];
            let value = Located {
                line,
                column: indent + eq + 2 + (after.len() - after.trim_start().len()),
                text: after.trim().to_string(),
            };
            let key_col = indent + 1;
            match &section {
                Section::None => {
                    return Err(parse_error(line, key_col, "key outside of a section"));
                }
                Section::Ring => {
                    let r = self.ring.as_mut().unwrap();
                    match key {
                        "char" => set_once(&mut r.char, key, value)?,
                        "vars" => set_once(&mut r.vars, key, value)?,
                        "degrees" => set_once(&mut r.degrees, key, value)?,
                        _ => return Err(parse_error(line, key_col, format!("unknown key `{key}` in [ring]"))),
                    }
                }
                Section::Module(k) => {
                    let m = &mut self.modules[*k];
                    match key {
                        "cover" => set_once(&mut m.cover, key, value)?,
                        "rel" => m.rels.push(value),
                        _ => return Err(parse_error(line, key_col, format!("unknown key `{key}` in [module]"))),
                    }
                }
                Section::Complex(k) => {
                    let c = &mut self.complexes[*k];
                    let mut parts = key.split_whitespace();
                    match (parts.next(), parts.next(), parts.next()) {
                        (Some("modules"), None, _) => set_once(&mut c.modules, key, value)?,
                        (Some("augment"), None, _) => set_once(&mut c.augment, key, value)?,
                        (Some("iota"), None, _) => c.iota.push(value),
                        (Some("map"), Some(i), None) => {
                            let i: usize = i.parse().map_err(|_| {
                                parse_error(line, key_col + 4, format!("expected a map index, found `{i}`"))
                            })?;
                            c.maps.push((i, value));
                        }
                        _ => {
                            return Err(parse_error(line, key_col, format!("unknown key `{key}` in [complex]")))
                        }
                    }
                }
            }
        }
        self.build()
    }

    fn header(&mut self, line: usize, column: usize, inner: &str) -> Result<Section> {
        let mut words = inner.split_whitespace();
        let kind = words.next().unwrap_or("");
        let name = words.next();
        if words.next().is_some() {
            return Err(parse_error(line, column, "too many words in section header"));
        }
        match (kind, name) {
            ("ring", None) => {
                if self.ring.is_some() {
                    return Err(parse_error(line, column, "duplicate [ring] section"));
                }
                if !self.modules.is_empty() || !self.complexes.is_empty() {
                    return Err(parse_error(line, column, "[ring] must come first"));
                }
                self.ring = Some(RingDraft {
                    line,
                    ..Default::default()
                });
                Ok(Section::Ring)
            }
            ("module" | "complex", Some(name)) => {
                if self.ring.is_none() {
                    return Err(parse_error(line, column, "[ring] must come first"));
                }
                if !is_identifier(name) {
                    return Err(parse_error(line, column, format!("`{name}` is not a valid name")));
                }
                if kind == "module" {
                    self.modules.push(ModuleDraft {
                        name: name.to_string(),
                        line,
                        cover: None,
                        rels: Vec::new(),
                    });
                    Ok(Section::Module(self.modules.len() - 1))
                } else {
                    self.complexes.push(ComplexDraft {
                        name: name.to_string(),
                        line,
                        modules: None,
                        augment: None,
                        iota: Vec::new(),
                        maps: Vec::new(),
                    });
                    Ok(Section::Complex(self.complexes.len() - 1))
                }
            }
            _ => Err(parse_error(line, column, format!("unknown section `[{inner}]`"))),
        }
    }

    fn build(self) -> Result<PresentationFile> {
        let Some(rd) = self.ring else {
            return Err(Error::Semantic("missing [ring] section".into()));
        };
        let ring = build_ring(&rd)?;
        let mut file = PresentationFile::new(&ring);
        for md in &self.modules {
            let cover: Vec<i32> = match &md.cover {
                Some(c) => c.integers("a degree")?,
                None => return Err(semantic(md.line, format!("module `{}` has no cover", md.name))),
            };
            let mut rels = Vec::new();
            for rel in &md.rels {
                let coords = rel.row(&ring)?;
                if coords.len() != cover.len() {
                    return Err(semantic(
                        rel.line,
                        format!("relation has {} entries, cover has rank {}", coords.len(), cover.len()),
                    ));
                }
                let v = Vector::from_coordinates(&coords);
                if !v.is_zero() && v.homogeneous_degree(&cover).is_none() {
                    return Err(semantic(rel.line, "relation is not homogeneous (degree mismatch)"));
                }
                rels.push(v);
            }
            let m = ModulePresentation::new(&ring, cover, rels).map_err(|e| semantic(md.line, e))?;
            file.add_module(&md.name, m).map_err(|e| semantic(md.line, e))?;
        }
        for cd in &self.complexes {
            let complex = build_complex(&file, cd)?;
            let names: Vec<&str> = cd
                .modules
                .as_ref()
                .map(|m| m.words().into_iter().map(|(_, w)| w).collect())
                .unwrap_or_default();
            let augment = cd.augment.as_ref().map(|a| a.text.as_str());
            file.add_complex(&cd.name, &names, augment, complex)
                .map_err(|e| semantic(cd.line, e))?;
        }
        Ok(file)
    }
}

fn build_ring(rd: &RingDraft) -> Result<GradedRing> {
    let Some(ch) = &rd.char else {
        return Err(semantic(rd.line, "missing `char`"));
    };
    let p: Vec<u64> = ch.integers("a characteristic")?;
    let [p] = p[..] else {
        return Err(parse_error(ch.line, ch.column, "expected one characteristic"));
    };
    let Some(vars) = &rd.vars else {
        return Err(semantic(rd.line, "missing `vars`"));
    };
    let names: Vec<String> = vars.words().into_iter().map(|(_, w)| w.to_string()).collect();
    let degrees: Vec<u32> = match &rd.degrees {
        Some(d) => d.integers("a positive degree")?,
        None => vec![DEFAULT_VAR_DEGREE; names.len()],
    };
    GradedRing::new(p, names, degrees).map_err(|e| semantic(rd.line, e))
}

fn build_complex(file: &PresentationFile, cd: &ComplexDraft) -> Result<CochainComplex> {
    let ring = file.ring();
    let lookup = |line: usize, name: &str| -> Result<ModulePresentation> {
        file.module(name)
            .cloned()
            .ok_or_else(|| semantic(line, format!("unknown module `{name}`")))
    };
    let mut modules = Vec::new();
    if let Some(m) = &cd.modules {
        for (_, w) in m.words() {
            modules.push(lookup(m.line, w)?);
        }
    }
    let rows_to_columns = |rows: &[&Located], target_rank: usize| -> Result<Vec<Vector>> {
        rows.iter()
            .map(|l| {
                let coords = l.row(ring)?;
                if coords.len() != target_rank {
                    return Err(semantic(
                        l.line,
                        format!("row has {} entries, target has rank {target_rank}", coords.len()),
                    ));
                }
                Ok(Vector::from_coordinates(&coords))
            })
            .collect()
    };
    let mut maps = Vec::new();
    for i in 0..modules.len().saturating_sub(1) {
        let rows: Vec<&Located> = cd.maps.iter().filter(|(k, _)| *k == i).map(|(_, l)| l).collect();
        if rows.len() != modules[i].rank() {
            return Err(semantic(
                cd.line,
                format!("map {i} needs {} rows, found {}", modules[i].rank(), rows.len()),
            ));
        }
        maps.push(rows_to_columns(&rows, modules[i + 1].rank())?);
    }
    if let Some((i, l)) = cd.maps.iter().find(|(k, _)| k + 1 >= modules.len().max(1)) {
        return Err(semantic(l.line, format!("map {i} has no target")));
    }
    let augmentation = match &cd.augment {
        None => {
            if let Some(l) = cd.iota.first() {
                return Err(semantic(l.line, "`iota` without `augment`"));
            }
            None
        }
        Some(a) => {
            let module = lookup(a.line, &a.text)?;
            if modules.is_empty() {
                return Err(semantic(a.line, "augmentation into an empty complex"));
            }
            let rows: Vec<&Located> = cd.iota.iter().collect();
            if rows.len() != module.rank() {
                return Err(semantic(
                    cd.line,
                    format!("`iota` needs {} rows, found {}", module.rank(), rows.len()),
                ));
            }
            let map = rows_to_columns(&rows, modules[0].rank())?;
            Some(Augmentation { module, map })
        }
    };
    CochainComplex::new(ring, modules, maps, augmentation).map_err(|e| semantic(cd.line, e))
}
