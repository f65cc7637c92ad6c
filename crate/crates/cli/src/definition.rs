//! Definition files.
//!
//! A file is a sequence of sections. Each section declares one named object
//! and may only refer to objects declared above it:
//!
//! ```text
//! [ring]
//! vars = x, y
//!
//! [algebra A]
//! dim = 3
//! bracket 1 2 3 = 1        # [t1, t2] = 1·t3, and [t2, t1] = -t3
//! rho 1 1 = x
//!
//! [form w]
//! algebra = A
//! degree = 2
//! 1 2 = x*y
//! ```
//!
//! `#` starts a comment. Errors carry the 1-based line and column of the
//! offending text.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use glacalc_core::coeffring::{parse_ratfunc, RatFunc};
use glacalc_core::extcalc::{sort_with_sign, Form, Morphism};
use glacalc_core::gla::{
    abelian, build_algebra, bullet, deform, der_plus_f, heisenberg, pullback, sl2, tangent_chart,
    Algebra, AnchorMatrix, DiffeoPair, Element,
};
use glacalc_core::idsys::{IdealSpec, Subspace};
use glacalc_core::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinitionError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for DefinitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for DefinitionError {}

type Parsed<T> = Result<T, DefinitionError>;

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Parsed<T> {
    Err(DefinitionError {
        line,
        column,
        message: message.into(),
    })
}

/// Objects of one kind in declaration order.
#[derive(Debug, Clone)]
pub struct Named<T>(Vec<(String, T)>);

impl<T> Default for Named<T> {
    fn default() -> Self {
        Named(Vec::new())
    }
}

impl<T> Named<T> {
    pub fn get(&self, name: &str) -> Option<&T> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn first(&self) -> Option<(&str, &T)> {
        self.0.first().map(|(n, v)| (n.as_str(), v))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &T)> {
        self.0.iter().map(|(n, v)| (n.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, Default)]
pub struct Definition {
    pub vars: Vec<String>,
    pub algebras: Named<Arc<Algebra>>,
    pub diffeos: Named<DiffeoPair>,
    pub elements: Named<Element>,
    pub forms: Named<Form>,
    pub subspaces: Named<Subspace>,
    pub morphisms: Named<Morphism>,
    pub ideals: Named<IdealSpec>,
}

struct Entry {
    key: String,
    value: String,
    line: usize,
    key_col: usize,
    value_col: usize,
}

impl Entry {
    fn key_tokens(&self) -> Vec<&str> {
        self.key.split_whitespace().collect()
    }

    fn fail<T>(&self, message: impl Into<String>) -> Parsed<T> {
        err(self.line, self.value_col, message)
    }

    fn fail_key<T>(&self, message: impl Into<String>) -> Parsed<T> {
        err(self.line, self.key_col, message)
    }
}

struct Section {
    kind: String,
    name: String,
    line: usize,
    name_col: usize,
    entries: Vec<Entry>,
}

impl Section {
    fn fail<T>(&self, message: impl Into<String>) -> Parsed<T> {
        err(self.line, self.name_col, message)
    }

    fn single(&self, key: &str) -> Parsed<Option<&Entry>> {
        let mut found = self.entries.iter().filter(|e| e.key == key);
        let first = found.next();
        if let Some(dup) = found.next() {
            return dup.fail_key(format!("`{key}` given twice"));
        }
        Ok(first)
    }

    fn required(&self, key: &str) -> Parsed<&Entry> {
        match self.single(key)? {
            Some(e) => Ok(e),
            None => self.fail(format!("[{} {}] needs `{key} = ...`", self.kind, self.name)),
        }
    }
}

fn column(text: &str, byte: usize) -> usize {
    text[..byte].chars().count() + 1
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

fn split_sections(text: &str) -> Parsed<Vec<Section>> {
    let mut sections: Vec<Section> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let start = body.len() - body.trim_start().len();
        if trimmed.starts_with('[') {
            let Some(inner) = trimmed.strip_prefix('[').and_then(|t| t.strip_suffix(']')) else {
                return err(line, column(raw, start), "section header must end with `]`");
            };
            let mut words = inner.split_whitespace();
            let kind = words.next().unwrap_or("").to_string();
            let name = words.next().unwrap_or("").to_string();
            if let Some(extra) = words.next() {
                let at = start + trimmed.find(extra).unwrap_or(0);
                return err(line, column(raw, at), format!("unexpected `{extra}` in section header"));
            }
            let name_at = if name.is_empty() {
                start + 1
            } else {
                let after_kind = inner.find(&kind).unwrap_or(0) + kind.len();
                start + 1 + after_kind + inner[after_kind..].find(&name).unwrap_or(0)
            };
            sections.push(Section {
                kind,
                name,
                line,
                name_col: column(raw, name_at),
                entries: Vec::new(),
            });
            continue;
        }
        let Some(eq) = body.find('=') else {
            return err(line, column(raw, start), "expected `key = value`");
        };
        let Some(section) = sections.last_mut() else {
            return err(line, column(raw, start), "entry before the first section header");
        };
        let key = body[..eq].trim().to_string();
        if key.is_empty() {
            return err(line, column(raw, eq), "missing key before `=`");
        }
        let after = &body[eq + 1..];
        let value_at = eq + 1 + (after.len() - after.trim_start().len());
        section.entries.push(Entry {
            key,
            value: after.trim().to_string(),
            line,
            key_col: column(raw, start),
            value_col: column(raw, value_at),
        });
    }
    Ok(sections)
}

/// Comma-separated items with their column offsets inside the value.
fn split_list(value: &str) -> Vec<(usize, &str)> {
    if value.trim().is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut at = 0;
    for piece in value.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        out.push((value[..at + lead].chars().count(), piece.trim()));
        at += piece.len() + 1;
    }
    out
}

fn parse_index(e: &Entry, token: &str, bound: usize, what: &str) -> Parsed<usize> {
    match token.parse::<usize>() {
        Ok(i) if (1..=bound).contains(&i) => Ok(i - 1),
        _ => e.fail_key(format!("{what} index `{token}` is not in 1..{bound}")),
    }
}

fn parse_count(e: &Entry) -> Parsed<usize> {
    e.value
        .parse::<usize>()
        .or_else(|_| e.fail(format!("expected a nonnegative integer, got `{}`", e.value)))
}

/// Parses the whole file, building every object as its section ends.
pub fn parse_definition(text: &str) -> Parsed<Definition> {
    let mut b = Builder::default();
    for section in split_sections(text)? {
        b.section(&section)?;
    }
    Ok(b.def)
}

#[derive(Default)]
struct Builder {
    def: Definition,
    names: HashSet<String>,
    ring_seen: bool,
}

impl Builder {
    fn section(&mut self, s: &Section) -> Parsed<()> {
        if s.kind == "ring" {
            return self.ring(s);
        }
        if s.name.is_empty() {
            return s.fail(format!("[{}] needs a name", s.kind));
        }
        if !is_identifier(&s.name) {
            return s.fail(format!("`{}` is not a valid name", s.name));
        }
        if self.names.contains(&s.name) || self.def.vars.contains(&s.name) {
            return s.fail(format!("`{}` is already declared", s.name));
        }
        let name = s.name.clone();
        match s.kind.as_str() {
            "algebra" => {
                let alg = self.algebra(s)?;
                self.def.algebras.0.push((name.clone(), Arc::new(alg)));
            }
            "diffeo" => {
                let h = self.diffeo(s)?;
                self.def.diffeos.0.push((name.clone(), h));
            }
            "element" => {
                let z = self.element(s)?;
                self.def.elements.0.push((name.clone(), z));
            }
            "form" => {
                let w = self.form(s)?;
                self.def.forms.0.push((name.clone(), w));
            }
            "subspace" => {
                let e = self.subspace(s)?;
                self.def.subspaces.0.push((name.clone(), e));
            }
            "morphism" => {
                let phi = self.morphism(s)?;
                self.def.morphisms.0.push((name.clone(), phi));
            }
            "ideal" => {
                let i = self.ideal(s)?;
                self.def.ideals.0.push((name.clone(), i));
            }
            other => return err(s.line, 2, format!("unknown section kind `{other}`")),
        }
        self.names.insert(name);
        Ok(())
    }

    fn nvars(&self) -> usize {
        self.def.vars.len()
    }

    fn expr(&self, e: &Entry, text: &str, offset: usize) -> Parsed<RatFunc> {
        parse_ratfunc(text, &self.def.vars).map_err(|pe| DefinitionError {
            line: e.line,
            column: e.value_col + offset + pe.column - 1,
            message: pe.message,
        })
    }

    fn only_keys(&self, s: &Section, allowed: &[&str], indexed: bool) -> Parsed<()> {
        for e in &s.entries {
            let head = e.key_tokens()[0];
            let numeric = head.parse::<usize>().is_ok();
            if !allowed.contains(&head) && !(indexed && numeric) {
                return e.fail_key(format!("unknown key `{}` in [{}]", e.key, s.kind));
            }
        }
        Ok(())
    }

    fn ring(&mut self, s: &Section) -> Parsed<()> {
        if self.ring_seen {
            return s.fail("only one [ring] section is allowed");
        }
        if !self.names.is_empty() {
            return s.fail("[ring] must come before every other section");
        }
        if !s.name.is_empty() {
            return s.fail("[ring] takes no name");
        }
        self.ring_seen = true;
        self.only_keys(s, &["vars"], false)?;
        let Some(e) = s.single("vars")? else { return Ok(()) };
        for (off, v) in split_list(&e.value) {
            if !is_identifier(v) {
                return err(e.line, e.value_col + off, format!("`{v}` is not a valid variable name"));
            }
            if self.def.vars.iter().any(|w| w == v) {
                return err(e.line, e.value_col + off, format!("variable `{v}` repeated"));
            }
            self.def.vars.push(v.to_string());
        }
        Ok(())
    }

    fn lookup_algebra(&self, e: &Entry, name: &str) -> Parsed<Arc<Algebra>> {
        match self.def.algebras.get(name) {
            Some(a) => Ok(a.clone()),
            None => e.fail(format!("undeclared algebra `{name}`")),
        }
    }

    /// The `algebra = NAME` entry, or the only algebra declared so far.
    fn owner(&self, s: &Section) -> Parsed<Arc<Algebra>> {
        if let Some(e) = s.single("algebra")? {
            return self.lookup_algebra(e, &e.value);
        }
        match self.def.algebras.len() {
            1 => Ok(self.def.algebras.first().unwrap().1.clone()),
            0 => s.fail("no algebra declared above"),
            _ => s.fail("several algebras are declared; add `algebra = NAME`"),
        }
    }

    fn map_engine(&self, s: &Section, e: Error) -> DefinitionError {
        DefinitionError {
            line: s.line,
            column: s.name_col,
            message: e.to_string(),
        }
    }

    fn algebra(&self, s: &Section) -> Parsed<Algebra> {
        self.only_keys(s, &["ctor", "row", "dim", "bracket", "L", "rho", "labels"], false)?;
        let m = self.nvars();
        let alg = match s.single("ctor")? {
            Some(c) => {
                if let Some(e) = s.entries.iter().find(|e| ["dim", "bracket", "L", "rho"].contains(&e.key_tokens()[0])) {
                    return e.fail_key("table entries cannot be combined with `ctor`");
                }
                self.constructed(s, c)?
            }
            None => self.table(s)?,
        };
        let alg = alg.with_var_names(self.def.vars.clone()).map_err(|e| self.map_engine(s, e))?;
        debug_assert_eq!(alg.nvars(), m);
        match s.single("labels")? {
            None => Ok(alg),
            Some(e) => {
                let labels = split_list(&e.value);
                for &(off, l) in &labels {
                    if !is_identifier(l) {
                        return err(e.line, e.value_col + off, format!("`{l}` is not a valid label"));
                    }
                }
                let labels: Vec<String> = labels.into_iter().map(|(_, l)| l.to_string()).collect();
                alg.with_labels(labels).or_else(|x| e.fail(x.to_string()))
            }
        }
    }

    fn constructed(&self, s: &Section, c: &Entry) -> Parsed<Algebra> {
        let m = self.nvars();
        let words: Vec<&str> = c.value.split_whitespace().collect();
        let arity = |n: usize| -> Parsed<()> {
            if words.len() == n + 1 {
                Ok(())
            } else {
                c.fail(format!("`{}` takes {n} argument(s)", words[0]))
            }
        };
        if words.is_empty() {
            return c.fail("missing constructor name");
        }
        if words[0] != "bullet" {
            if let Some(r) = s.entries.iter().find(|e| e.key == "row") {
                return r.fail_key("`row` is only used with `ctor = bullet`");
            }
        }
        let built = match words[0] {
            "heisenberg" => {
                arity(0)?;
                Ok(heisenberg(m))
            }
            "sl2" => {
                arity(0)?;
                Ok(sl2(m))
            }
            "abelian" => {
                arity(1)?;
                let p = words[1]
                    .parse::<usize>()
                    .or_else(|_| c.fail(format!("`{}` is not a dimension", words[1])))?;
                Ok(abelian(p, m))
            }
            "der_plus_f" => {
                arity(0)?;
                der_plus_f(m)
            }
            "tangent" => {
                arity(0)?;
                tangent_chart(m)
            }
            "bullet" => {
                arity(0)?;
                let rows: Vec<&Entry> = s.entries.iter().filter(|e| e.key == "row").collect();
                if rows.len() != m {
                    return c.fail(format!("bullet needs {m} `row` lines, found {}", rows.len()));
                }
                let mut matrix: AnchorMatrix = Vec::new();
                for r in rows {
                    let items = split_list(&r.value);
                    if items.len() != m {
                        return r.fail(format!("row needs {m} entries, found {}", items.len()));
                    }
                    let row = items
                        .into_iter()
                        .map(|(off, t)| self.expr(r, t, off))
                        .collect::<Parsed<Vec<_>>>()?;
                    matrix.push(row);
                }
                bullet(matrix)
            }
            "deform" | "pullback" => {
                arity(2)?;
                let base = self.lookup_algebra(c, words[1])?;
                let Some(h) = self.def.diffeos.get(words[2]) else {
                    return c.fail(format!("undeclared diffeo `{}`", words[2]));
                };
                if words[0] == "deform" {
                    deform(&base, h)
                } else {
                    pullback(&base, h)
                }
            }
            other => return c.fail(format!("unknown constructor `{other}`")),
        };
        built.map_err(|e| DefinitionError {
            line: c.line,
            column: c.value_col,
            message: e.to_string(),
        })
    }

    fn table(&self, s: &Section) -> Parsed<Algebra> {
        let m = self.nvars();
        let dim_entry = s.required("dim")?;
        let p = parse_count(dim_entry)?;
        let mut anchor = vec![vec![RatFunc::zero(m); m]; p];
        let mut structure = vec![vec![vec![RatFunc::zero(m); p]; p]; p];
        let mut assigned: HashSet<(usize, usize, usize)> = HashSet::new();
        let mut origin: Vec<((usize, usize, usize), usize, usize)> = Vec::new();
        for e in &s.entries {
            let toks = e.key_tokens();
            match toks[0] {
                "bracket" | "L" => {
                    if toks.len() != 4 {
                        return e.fail_key(format!("`{}` takes three indices", toks[0]));
                    }
                    let a = parse_index(e, toks[1], p, "basis")?;
                    let b = parse_index(e, toks[2], p, "basis")?;
                    let c = parse_index(e, toks[3], p, "basis")?;
                    let f = self.expr(e, &e.value, 0)?;
                    let mut targets = vec![(a, b, c, f.clone())];
                    if toks[0] == "bracket" {
                        if a == b {
                            return e.fail_key("a bracket of an element with itself is zero");
                        }
                        targets.push((b, a, c, -&f));
                    }
                    for (a, b, c, f) in targets {
                        if !assigned.insert((a, b, c)) {
                            return e.fail_key(format!("L^{}_{}{} is set twice", c + 1, a + 1, b + 1));
                        }
                        structure[a][b][c] = f;
                    }
                    origin.push(((a, b, c), e.line, e.key_col));
                }
                "rho" => {
                    if toks.len() != 3 {
                        return e.fail_key("`rho` takes a basis index and a variable index");
                    }
                    let a = parse_index(e, toks[1], p, "basis")?;
                    let i = parse_index(e, toks[2], m, "variable")?;
                    anchor[a][i] = self.expr(e, &e.value, 0)?;
                }
                _ => {}
            }
        }
        build_algebra(m, p, anchor, structure).map_err(|x| match x {
            Error::AntisymmetryViolated { alpha, beta, gamma } => {
                // point at the entry that set either side of the failing pair
                let (line, column) = origin
                    .iter()
                    .find(|(k, _, _)| {
                        *k == (alpha - 1, beta - 1, gamma - 1) || *k == (beta - 1, alpha - 1, gamma - 1)
                    })
                    .map(|&(_, l, c)| (l, c))
                    .unwrap_or((s.line, s.name_col));
                DefinitionError {
                    line,
                    column,
                    message: format!(
                        "L^{gamma}_{alpha}{beta} and L^{gamma}_{beta}{alpha} are not opposite (antisymmetry violated)"
                    ),
                }
            }
            other => self.map_engine(s, other),
        })
    }

    fn diffeo(&self, s: &Section) -> Parsed<DiffeoPair> {
        self.only_keys(s, &["forward", "inverse"], false)?;
        let m = self.nvars();
        let mut maps = Vec::new();
        for key in ["forward", "inverse"] {
            let e = s.required(key)?;
            let items = split_list(&e.value);
            if items.len() != m {
                return e.fail(format!("{key} needs {m} components, found {}", items.len()));
            }
            let comps = items
                .into_iter()
                .map(|(off, t)| self.expr(e, t, off))
                .collect::<Parsed<Vec<_>>>()?;
            maps.push(comps);
        }
        let inv = maps.pop().unwrap();
        let fwd = maps.pop().unwrap();
        DiffeoPair::new(fwd, inv).map_err(|e| self.map_engine(s, e))
    }

    fn basis_index(alg: &Algebra, token: &str) -> Option<usize> {
        if let Some(a) = alg.labels().iter().position(|l| l == token) {
            return Some(a);
        }
        match token.parse::<usize>() {
            Ok(i) if (1..=alg.dim()).contains(&i) => Some(i - 1),
            _ => None,
        }
    }

    fn element(&self, s: &Section) -> Parsed<Element> {
        let alg = self.owner(s)?;
        let mut coeffs = vec![RatFunc::zero(alg.nvars()); alg.dim()];
        let mut seen = vec![false; alg.dim()];
        for e in s.entries.iter().filter(|e| e.key != "algebra") {
            let Some(a) = Self::basis_index(&alg, &e.key) else {
                return e.fail_key(format!("`{}` is not a basis label or index", e.key));
            };
            if std::mem::replace(&mut seen[a], true) {
                return e.fail_key(format!("coefficient of `{}` given twice", e.key));
            }
            coeffs[a] = self.expr(e, &e.value, 0)?;
        }
        Element::new(&alg, coeffs).map_err(|x| self.map_engine(s, x))
    }

    /// An element name, a basis label, or `0`.
    fn element_ref(&self, alg: &Arc<Algebra>, e: &Entry, off: usize, token: &str) -> Parsed<Element> {
        if token == "0" {
            return Ok(Element::zero(alg));
        }
        if let Some(z) = self.def.elements.get(token) {
            if !Arc::ptr_eq(z.algebra(), alg) && **z.algebra() != **alg {
                return err(e.line, e.value_col + off, format!("`{token}` belongs to another algebra"));
            }
            return Element::new(alg, z.coeffs().to_vec()).map_err(|x| DefinitionError {
                line: e.line,
                column: e.value_col + off,
                message: x.to_string(),
            });
        }
        if let Some(a) = alg.labels().iter().position(|l| l == token) {
            return Ok(Element::basis(alg, a));
        }
        err(e.line, e.value_col + off, format!("undeclared element or basis label `{token}`"))
    }

    fn form(&self, s: &Section) -> Parsed<Form> {
        let alg = self.owner(s)?;
        let q = parse_count(s.required("degree")?)?;
        if q > alg.dim() {
            return s.fail(format!("degree {q} exceeds the dimension {}", alg.dim()));
        }
        let mut w = Form::zero(&alg, q);
        let mut seen: Vec<Vec<usize>> = Vec::new();
        for e in &s.entries {
            let toks = e.key_tokens();
            if e.key == "algebra" || e.key == "degree" {
                continue;
            }
            if q == 0 {
                if e.key != "value" {
                    return e.fail_key("a 0-form has a single entry `value = ...`");
                }
            } else if toks.len() != q {
                return e.fail_key(format!("a {q}-form coefficient needs {q} indices"));
            }
            let raw: Vec<usize> = if q == 0 {
                Vec::new()
            } else {
                toks.iter()
                    .map(|t| match Self::basis_index(&alg, t) {
                        Some(a) => Ok(a),
                        None => e.fail_key(format!("`{t}` is not a basis label or index")),
                    })
                    .collect::<Parsed<_>>()?
            };
            let Some((idx, flip)) = sort_with_sign(&raw) else {
                return e.fail_key("repeated index: that coefficient is zero by antisymmetry");
            };
            if seen.contains(&idx) {
                return e.fail_key("coefficient given twice");
            }
            let mut c = self.expr(e, &e.value, 0)?;
            if flip {
                c = -&c;
            }
            w.set_coeff(idx.clone(), c);
            seen.push(idx);
        }
        Ok(w)
    }

    fn subspace(&self, s: &Section) -> Parsed<Subspace> {
        self.only_keys(s, &["algebra", "gens"], false)?;
        let alg = self.owner(s)?;
        let e = s.required("gens")?;
        let gens = split_list(&e.value)
            .into_iter()
            .map(|(off, t)| self.element_ref(&alg, e, off, t))
            .collect::<Parsed<Vec<_>>>()?;
        if gens.is_empty() {
            return e.fail("a subspace needs at least one generator");
        }
        Subspace::new(&alg, gens).or_else(|x| e.fail(x.to_string()))
    }

    fn morphism(&self, s: &Section) -> Parsed<Morphism> {
        self.only_keys(s, &["source", "target", "images"], false)?;
        let src_entry = s.required("source")?;
        let source = self.lookup_algebra(src_entry, &src_entry.value)?;
        let tgt_entry = s.required("target")?;
        let target = self.lookup_algebra(tgt_entry, &tgt_entry.value)?;
        let e = s.required("images")?;
        let images = split_list(&e.value)
            .into_iter()
            .map(|(off, t)| self.element_ref(&target, e, off, t))
            .collect::<Parsed<Vec<_>>>()?;
        Morphism::from_images(&source, &target, &images).or_else(|x| e.fail(x.to_string()))
    }

    fn ideal(&self, s: &Section) -> Parsed<IdealSpec> {
        self.only_keys(s, &["algebra", "gens", "cap"], false)?;
        let alg = self.owner(s)?;
        let e = s.required("gens")?;
        let mut gens = Vec::new();
        for (off, t) in split_list(&e.value) {
            let Some(w) = self.def.forms.get(t) else {
                return err(e.line, e.value_col + off, format!("undeclared form `{t}`"));
            };
            if **w.algebra() != *alg {
                return err(e.line, e.value_col + off, format!("`{t}` belongs to another algebra"));
            }
            gens.push(w.clone());
        }
        let cap = s.single("cap")?.map(parse_count).transpose()?;
        IdealSpec::new(&alg, gens, cap).or_else(|x| e.fail(x.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_point_into_expressions() {
        let text = "[ring]\nvars = x\n[algebra A]\nctor = tangent\n[element u]\nt1 = x + )\n";
        let e = parse_definition(text).unwrap_err();
        assert_eq!((e.line, e.column), (6, 10));
    }

    #[test]
    fn list_offsets() {
        assert_eq!(split_list("a, bb ,c"), vec![(0, "a"), (3, "bb"), (7, "c")]);
        assert!(split_list("  ").is_empty());
    }

    #[test]
    fn bracket_lines_antisymmetrize() {
        let d = parse_definition("[algebra H]\ndim = 3\nbracket 1 2 3 = 1\n").unwrap();
        let h = d.algebras.get("H").unwrap();
        assert_eq!(**h, heisenberg(0));
    }

    #[test]
    fn raw_entries_are_checked() {
        let e = parse_definition("[algebra H]\ndim = 3\nL 1 2 3 = 1\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("antisymmetry"), "{}", e.message);
    }

    #[test]
    fn forward_references_are_rejected() {
        let text = "[subspace E]\nalgebra = H\ngens = t1\n[algebra H]\nctor = heisenberg\n";
        let e = parse_definition(text).unwrap_err();
        assert_eq!((e.line, e.column), (2, 11));
        assert!(e.message.contains("undeclared algebra `H`"));
    }

    #[test]
    fn form_indices_sort_with_sign() {
        let text = "[algebra H]\nctor = heisenberg\n[form w]\ndegree = 2\n2 1 = 3\n";
        let d = parse_definition(text).unwrap();
        let w = d.forms.get("w").unwrap();
        assert_eq!(w.coeff(&[0, 1]), RatFunc::from_int(0, -3));
    }
}
