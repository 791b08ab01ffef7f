//! Line-oriented instance files.
//!
//! ```text
//! name s3-over-a3
//! field rational            # or: field prime 5
//! algebra group s3          # matrix N | group cyclic N | group ... end | explicit ... end
//! sub
//!   1
//!   (123) + (132)
//! end
//! coalgebra group           # group | groupoid | delta/counit/antipode ... end
//! hopf group cyclic 2       # optional second algebra H, same syntax as `algebra`
//! coalgebra group
//! coaction                  # coproduct | rho/map ... end
//!   map 1 g g g 1 1
//! end
//! ```
//!
//! Explicit blocks use `const i j k c` for `h_i h_j ∋ c h_k`,
//! `delta i j k c` for `Δ(h_k) ∋ c h_i⊗h_j`, `antipode i j c` for
//! `S(h_i) ∋ c h_j` and `rho i j k c` for `ρ(a_k) ∋ c a_i⊗h_j`. Indices are
//! basis labels or 0-based integers; omitted constants are zero.

use crate::algebra::{Extension, FdAlgebra, Group};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{vector, Matrix};

#[derive(Clone, Debug)]
pub struct Coalgebra {
    pub coproduct: Matrix,
    pub counit: Vec<Scalar>,
    pub antipode: Option<Matrix>,
}

#[derive(Clone, Debug)]
pub struct AlgebraBlock {
    pub algebra: FdAlgebra,
    pub group: Option<Group>,
    pub coalgebra: Option<Coalgebra>,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub field: Field,
    pub algebra: AlgebraBlock,
    /// Spanning vectors of the subalgebra `B`.
    pub sub: Option<Vec<Vec<Scalar>>>,
    pub hopf: Option<AlgebraBlock>,
    /// `dim A · dim H × dim A`
    pub coaction: Option<Matrix>,
}

impl Instance {
    /// The algebra carrying the coalgebra used by weak Hopf commands.
    pub fn coalgebra_carrier(&self) -> &AlgebraBlock {
        match &self.hopf {
            Some(h) if self.coaction.is_some() => h,
            _ => &self.algebra,
        }
    }
}

static CATALOG: &[(&str, &str)] = &[
    ("s3-over-a3", include_str!("../catalog/s3-over-a3.d2")),
    ("s3-over-c2", include_str!("../catalog/s3-over-c2.d2")),
    ("m2-diagonal", include_str!("../catalog/m2-diagonal.d2")),
    ("m3-diagonal", include_str!("../catalog/m3-diagonal.d2")),
    ("m2-f2", include_str!("../catalog/m2-f2.d2")),
    ("groupoid-1", include_str!("../catalog/groupoid-1.d2")),
    ("c2", include_str!("../catalog/c2.d2")),
    ("c3", include_str!("../catalog/c3.d2")),
    ("s3", include_str!("../catalog/s3.d2")),
];

pub fn catalog_names() -> Vec<&'static str> {
    CATALOG.iter().map(|(n, _)| *n).collect()
}

pub fn catalog_source(name: &str) -> Option<&'static str> {
    CATALOG.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn catalog_instance(name: &str) -> Result<Instance> {
    let src = catalog_source(name).ok_or_else(|| Error::Parse(format!("no catalog instance named `{name}`")))?;
    parse_instance(src)
}

fn located(line: usize, message: impl Into<String>) -> Error {
    Error::Located { line, message: message.into() }
}

fn relocate(line: usize, e: Error) -> Error {
    match e {
        Error::Located { .. } => e,
        other => located(line, other.to_string()),
    }
}

/// Tokenised block lines with their line numbers.
type Entries = Vec<(usize, Vec<String>)>;

enum Pending {
    Group { start: usize, elements: Vec<String>, rows: Vec<Vec<String>>, for_hopf: bool },
    Explicit { start: usize, dim: Option<usize>, labels: Option<Vec<String>>, unit: Option<Vec<String>>, consts: Vec<(usize, [String; 4])>, for_hopf: bool },
    Sub { lines: Vec<(usize, String)> },
    Coalgebra { start: usize, entries: Entries },
    Coaction { start: usize, entries: Entries },
}

struct Parser {
    name: Option<String>,
    field: Option<Field>,
    algebra: Option<AlgebraBlock>,
    hopf: Option<AlgebraBlock>,
    sub_lines: Option<Vec<(usize, String)>>,
    coaction: Option<(usize, Entries)>,
    coaction_coproduct: Option<usize>,
    /// Whether a `coalgebra` line now refers to `hopf`.
    last_is_hopf: bool,
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut p = Parser {
        name: None,
        field: None,
        algebra: None,
        hopf: None,
        sub_lines: None,
        coaction: None,
        coaction_coproduct: None,
        last_is_hopf: false,
    };
    let mut pending: Option<Pending> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if let Some(block) = pending.as_mut() {
            if toks == ["end"] {
                let block = pending.take().expect("block open");
                p.close(block, line_no)?;
                continue;
            }
            match block {
                Pending::Group { elements, rows, .. } => match toks[0] {
                    "elements" => *elements = toks[1..].iter().map(|s| s.to_string()).collect(),
                    "row" => rows.push(toks[1..].iter().map(|s| s.to_string()).collect()),
                    other => return Err(located(line_no, format!("unexpected `{other}` in group block"))),
                },
                Pending::Explicit { dim, labels, unit, consts, .. } => match toks[0] {
                    "dim" => {
                        let n = toks.get(1).and_then(|t| t.parse().ok()).ok_or_else(|| located(line_no, "dim needs a positive integer"))?;
                        *dim = Some(n);
                    }
                    "labels" => *labels = Some(toks[1..].iter().map(|s| s.to_string()).collect()),
                    "unit" => *unit = Some(toks[1..].iter().map(|s| s.to_string()).collect()),
                    "const" => {
                        if toks.len() != 5 {
                            return Err(located(line_no, "const needs `i j k scalar`"));
                        }
                        consts.push((line_no, [toks[1].into(), toks[2].into(), toks[3].into(), toks[4].into()]));
                    }
                    other => return Err(located(line_no, format!("unexpected `{other}` in algebra block"))),
                },
                Pending::Sub { lines } => lines.push((line_no, line.to_string())),
                Pending::Coalgebra { entries, .. } | Pending::Coaction { entries, .. } => {
                    entries.push((line_no, toks.iter().map(|s| s.to_string()).collect()))
                }
            }
            continue;
        }
        match toks[0] {
            "name" => p.name = Some(toks[1..].join(" ")),
            "field" => {
                if p.algebra.is_some() {
                    return Err(located(line_no, "field must precede the algebra"));
                }
                p.field = Some(match toks.get(1..) {
                    Some(["rational"]) => Field::Rational,
                    Some(["prime", q]) => {
                        let q: u64 = q.parse().map_err(|_| located(line_no, format!("invalid modulus `{q}`")))?;
                        Field::prime(q).map_err(|e| relocate(line_no, e))?
                    }
                    _ => return Err(located(line_no, "expected `field rational` or `field prime P`")),
                });
            }
            "algebra" | "hopf" => {
                let for_hopf = toks[0] == "hopf";
                if for_hopf && p.algebra.is_none() {
                    return Err(located(line_no, "`hopf` must follow `algebra`"));
                }
                if (for_hopf && p.hopf.is_some()) || (!for_hopf && p.algebra.is_some()) {
                    return Err(located(line_no, format!("duplicate `{}` block", toks[0])));
                }
                let field = p.field();
                let block = match &toks[1..] {
                    ["matrix", n] => {
                        let n: usize = n.parse().ok().filter(|&n| n > 0).ok_or_else(|| located(line_no, "matrix size must be a positive integer"))?;
                        Some(AlgebraBlock { algebra: FdAlgebra::matrix_algebra(n, field), group: None, coalgebra: None })
                    }
                    ["group", "s3"] => Some(group_block(Group::s3(), field)),
                    ["group", "cyclic", n] => {
                        let n: usize = n.parse().ok().filter(|&n| n > 0).ok_or_else(|| located(line_no, "cyclic order must be a positive integer"))?;
                        Some(group_block(Group::cyclic(n), field))
                    }
                    ["group"] => {
                        pending = Some(Pending::Group { start: line_no, elements: Vec::new(), rows: Vec::new(), for_hopf });
                        None
                    }
                    [] => {
                        pending = Some(Pending::Explicit { start: line_no, dim: None, labels: None, unit: None, consts: Vec::new(), for_hopf });
                        None
                    }
                    _ => return Err(located(line_no, format!("unknown algebra shortcut `{}`", toks[1..].join(" ")))),
                };
                if let Some(b) = block {
                    p.set_algebra(b, for_hopf);
                }
                p.last_is_hopf = for_hopf;
            }
            "sub" => {
                if p.sub_lines.is_some() {
                    return Err(located(line_no, "duplicate `sub` block"));
                }
                pending = Some(Pending::Sub { lines: Vec::new() });
            }
            "coalgebra" => {
                let field = p.field();
                let target = p.current(line_no)?;
                if target.coalgebra.is_some() {
                    return Err(located(line_no, "duplicate `coalgebra` block"));
                }
                match &toks[1..] {
                    ["group"] => {
                        let g = target.group.clone().ok_or_else(|| located(line_no, "`coalgebra group` needs a group algebra"))?;
                        target.coalgebra = Some(group_coalgebra(&g, field));
                    }
                    ["groupoid"] => {
                        let n = target.algebra.dim();
                        let m = (1..=n).find(|m| m * m == n).filter(|_| target.group.is_none());
                        let m = m.ok_or_else(|| located(line_no, "`coalgebra groupoid` needs a matrix algebra"))?;
                        let w = crate::weak_hopf::WeakHopfAlgebra::groupoid(m, field);
                        target.coalgebra = Some(Coalgebra {
                            coproduct: w.bialgebra.coproduct,
                            counit: w.bialgebra.counit,
                            antipode: Some(w.antipode),
                        });
                    }
                    [] => pending = Some(Pending::Coalgebra { start: line_no, entries: Vec::new() }),
                    _ => return Err(located(line_no, format!("unknown coalgebra shortcut `{}`", toks[1..].join(" ")))),
                }
            }
            "coaction" => {
                if p.coaction.is_some() || p.coaction_coproduct.is_some() {
                    return Err(located(line_no, "duplicate `coaction` block"));
                }
                match &toks[1..] {
                    ["coproduct"] => p.coaction_coproduct = Some(line_no),
                    [] => pending = Some(Pending::Coaction { start: line_no, entries: Vec::new() }),
                    _ => return Err(located(line_no, "expected `coaction` or `coaction coproduct`")),
                }
            }
            other => return Err(located(line_no, format!("unknown directive `{other}`"))),
        }
    }
    if pending.is_some() {
        return Err(located(text.lines().count(), "unterminated block (missing `end`)"));
    }
    p.finish()
}

fn group_block(g: Group, field: Field) -> AlgebraBlock {
    AlgebraBlock { algebra: FdAlgebra::group_algebra(&g, field), group: Some(g), coalgebra: None }
}

fn group_coalgebra(g: &Group, field: Field) -> Coalgebra {
    let h = crate::hopf::HopfAlgebra::group_algebra(g, field);
    Coalgebra { coproduct: h.coproduct, counit: h.counit, antipode: Some(h.antipode) }
}

fn index_of(labels: &[String], tok: &str, line: usize) -> Result<usize> {
    if let Some(i) = labels.iter().position(|l| l == tok) {
        return Ok(i);
    }
    match tok.parse::<usize>() {
        Ok(i) if i < labels.len() => Ok(i),
        _ => Err(located(line, format!("unknown basis element `{tok}`"))),
    }
}

fn scalar(field: Field, tok: &str, line: usize) -> Result<Scalar> {
    field.parse(tok).map_err(|e| relocate(line, e))
}

/// Parses `vec c1 c2 ...` or a signed sum such as `1/2 e11 - e22 + 3*g`.
/// Labels containing `+`, `-` or `*` cannot appear in sums.
pub fn parse_element(alg: &FdAlgebra, text: &str, line: usize) -> Result<Vec<Scalar>> {
    let field = alg.field();
    let n = alg.dim();
    let labels = alg.labels();
    let words: Vec<&str> = text.split_whitespace().collect();
    if words.first() == Some(&"vec") {
        if words.len() != n + 1 {
            return Err(located(line, format!("coordinate vector needs {n} entries")));
        }
        return words[1..].iter().map(|t| scalar(field, t, line)).collect();
    }
    let spaced: String = text
        .chars()
        .flat_map(|c| match c {
            '+' | '-' => vec![' ', c, ' '],
            '*' => vec![' '],
            _ => vec![c],
        })
        .collect();
    let toks: Vec<&str> = spaced.split_whitespace().collect();
    let mut out = vector::zeros(field, n);
    let mut negate = false;
    let mut coef: Option<Scalar> = None;
    for (i, &tok) in toks.iter().enumerate() {
        match tok {
            "+" => continue,
            "-" => {
                negate = !negate;
                continue;
            }
            _ => {}
        }
        let term_ends = i + 1 == toks.len() || matches!(toks[i + 1], "+" | "-");
        let is_label = labels.iter().any(|l| l == tok);
        if is_label && (coef.is_some() || term_ends) {
            let mut c = coef.take().unwrap_or_else(|| field.one());
            if negate {
                c = -c;
            }
            negate = false;
            let k = index_of(labels, tok, line)?;
            out[k].add_mul(&c, &field.one());
        } else if coef.is_none() {
            coef = Some(scalar(field, tok, line)?);
        } else {
            return Err(located(line, format!("expected a basis label, found `{tok}`")));
        }
    }
    if coef.is_some() {
        return Err(located(line, "coefficient without a basis label"));
    }
    Ok(out)
}

impl Parser {
    fn field(&self) -> Field {
        self.field.unwrap_or(Field::Rational)
    }

    fn set_algebra(&mut self, b: AlgebraBlock, for_hopf: bool) {
        if for_hopf {
            self.hopf = Some(b);
        } else {
            self.algebra = Some(b);
        }
    }

    fn current(&mut self, line: usize) -> Result<&mut AlgebraBlock> {
        let slot = if self.last_is_hopf { &mut self.hopf } else { &mut self.algebra };
        slot.as_mut().ok_or_else(|| located(line, "`coalgebra` must follow an algebra"))
    }

    fn close(&mut self, block: Pending, end_line: usize) -> Result<()> {
        let field = self.field();
        match block {
            Pending::Group { start, elements, rows, for_hopf } => {
                if elements.is_empty() {
                    return Err(located(start, "group block needs `elements`"));
                }
                let mut table = Vec::with_capacity(rows.len());
                for row in &rows {
                    table.push(row.iter().map(|t| index_of(&elements, t, end_line)).collect::<Result<Vec<_>>>()?);
                }
                let g = Group::new(elements, table).map_err(|e| relocate(start, e))?;
                self.set_algebra(group_block(g, field), for_hopf);
            }
            Pending::Explicit { start, dim, labels, unit, consts, for_hopf } => {
                let n = dim.or(labels.as_ref().map(Vec::len)).ok_or_else(|| located(start, "algebra block needs `dim` or `labels`"))?;
                let labels = labels.unwrap_or_else(|| (0..n).map(|i| format!("x{i}")).collect());
                if labels.len() != n {
                    return Err(located(start, "label count differs from dim"));
                }
                let mut table = vec![field.zero(); n * n * n];
                for (line, [i, j, k, c]) in &consts {
                    let (i, j, k) = (index_of(&labels, i, *line)?, index_of(&labels, j, *line)?, index_of(&labels, k, *line)?);
                    table[(i * n + j) * n + k] = scalar(field, c, *line)?;
                }
                let unit = match unit {
                    Some(toks) if toks.len() == n => toks.iter().map(|t| scalar(field, t, start)).collect::<Result<Vec<_>>>()?,
                    Some(toks) if toks.len() == 1 => vector::unit(field, n, index_of(&labels, &toks[0], start)?),
                    _ => return Err(located(start, "algebra block needs `unit` (a label or a coordinate vector)")),
                };
                let algebra = FdAlgebra::new(field, labels, table, unit).map_err(|e| relocate(end_line, e))?;
                self.set_algebra(AlgebraBlock { algebra, group: None, coalgebra: None }, for_hopf);
            }
            Pending::Sub { lines } => self.sub_lines = Some(lines),
            Pending::Coalgebra { start, entries } => {
                let target = self.current(start)?;
                let alg = &target.algebra;
                let n = alg.dim();
                let labels = alg.labels().to_vec();
                let mut coproduct = Matrix::zeros(field, n * n, n);
                let mut counit = None;
                let mut antipode: Option<Matrix> = None;
                for (line, toks) in entries {
                    match toks[0].as_str() {
                        "delta" if toks.len() == 5 => {
                            let (i, j, k) = (index_of(&labels, &toks[1], line)?, index_of(&labels, &toks[2], line)?, index_of(&labels, &toks[3], line)?);
                            coproduct.set(i * n + j, k, scalar(field, &toks[4], line)?);
                        }
                        "counit" if toks.len() == n + 1 => {
                            counit = Some(toks[1..].iter().map(|t| scalar(field, t, line)).collect::<Result<Vec<_>>>()?);
                        }
                        "antipode" if toks.len() == 4 => {
                            let (i, j) = (index_of(&labels, &toks[1], line)?, index_of(&labels, &toks[2], line)?);
                            antipode.get_or_insert_with(|| Matrix::zeros(field, n, n)).set(j, i, scalar(field, &toks[3], line)?);
                        }
                        _ => return Err(located(line, format!("malformed coalgebra entry `{}`", toks.join(" ")))),
                    }
                }
                let counit = counit.ok_or_else(|| located(start, "coalgebra block needs `counit`"))?;
                target.coalgebra = Some(Coalgebra { coproduct, counit, antipode });
            }
            Pending::Coaction { start, entries } => self.coaction = Some((start, entries)),
        }
        Ok(())
    }

    fn finish(self) -> Result<Instance> {
        let field = self.field();
        let algebra = self.algebra.ok_or_else(|| located(1, "instance declares no `algebra`"))?;
        let sub = match self.sub_lines {
            None => None,
            Some(lines) => {
                let vecs = lines.iter().map(|(l, t)| parse_element(&algebra.algebra, t, *l)).collect::<Result<Vec<_>>>()?;
                let first = lines.first().map_or(1, |(l, _)| *l);
                Extension::new(algebra.algebra.clone(), &vecs).map_err(|e| relocate(first, e))?;
                Some(vecs)
            }
        };
        let na = algebra.algebra.dim();
        let coaction = if let Some(line) = self.coaction_coproduct {
            if self.hopf.is_some() {
                return Err(located(line, "`coaction coproduct` needs A = H (omit `hopf`)"));
            }
            let c = algebra.coalgebra.as_ref().ok_or_else(|| located(line, "`coaction coproduct` needs a coalgebra on the algebra"))?;
            Some(c.coproduct.clone())
        } else if let Some((start, entries)) = self.coaction {
            let h = self.hopf.as_ref().ok_or_else(|| located(start, "a coaction block needs a `hopf` algebra"))?;
            let nh = h.algebra.dim();
            let (la, lh) = (algebra.algebra.labels(), h.algebra.labels());
            let mut rho = Matrix::zeros(field, na * nh, na);
            for (line, toks) in entries {
                match toks[0].as_str() {
                    "rho" if toks.len() == 5 => {
                        let (i, j, k) = (index_of(la, &toks[1], line)?, index_of(lh, &toks[2], line)?, index_of(la, &toks[3], line)?);
                        rho.set(i * nh + j, k, scalar(field, &toks[4], line)?);
                    }
                    "map" if toks.len() == na + 1 => {
                        for (k, t) in toks[1..].iter().enumerate() {
                            let j = index_of(lh, t, line)?;
                            rho.set(k * nh + j, k, field.one());
                        }
                    }
                    _ => return Err(located(line, format!("malformed coaction entry `{}`", toks.join(" ")))),
                }
            }
            Some(rho)
        } else {
            None
        };
        Ok(Instance { name: self.name.unwrap_or_else(|| "unnamed".into()), field, algebra, sub, hopf: self.hopf, coaction })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_shortcut() {
        let i = parse_instance("field rational\nalgebra matrix 2\n").unwrap();
        assert_eq!(i.algebra.algebra.dim(), 4);
        assert_eq!(i.algebra.algebra.labels()[1], "e12");
    }

    #[test]
    fn group_block_with_extension() {
        let src = "algebra group\n elements e a b\n row e a b\n row a b e\n row b e a\nend\nsub\n e\n a + b\nend\n";
        let i = parse_instance(src).unwrap();
        assert_eq!(i.algebra.group.as_ref().unwrap().order(), 3);
        let sub = i.sub.unwrap();
        assert_eq!(sub[1], vec![Field::Rational.zero(), Field::Rational.one(), Field::Rational.one()]);
    }

    #[test]
    fn label_sums() {
        let a = FdAlgebra::matrix_algebra(2, Field::Rational);
        let v = parse_element(&a, "1/2 e11 - e22 + 3*e12", 1).unwrap();
        let f = Field::Rational;
        assert_eq!(v, vec![f.parse("1/2").unwrap(), f.from_i64(3), f.zero(), f.from_i64(-1)]);
        assert_eq!(parse_element(&a, "vec 1 0 0 -1", 1).unwrap(), vec![f.one(), f.zero(), f.zero(), f.from_i64(-1)]);
        assert_eq!(parse_element(&a, "e11-2*e22", 1).unwrap(), vec![f.one(), f.zero(), f.zero(), f.from_i64(-2)]);
        assert!(parse_element(&a, "2 3", 4).is_err());
    }

    #[test]
    fn non_associative_constants_are_located() {
        // x·x = y, y·x = x, x·y = 0: (xx)x = x but x(xx) = 0
        let src = "algebra\n labels 1 x y\n unit 1\n const 1 1 1 1\n const 1 x x 1\n const 1 y y 1\n const x 1 x 1\n const y 1 y 1\n const x x y 1\n const y x x 1\nend\n";
        let err = parse_instance(src).unwrap_err();
        assert!(matches!(err, Error::Located { line: 11, .. }), "{err}");
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(parse_instance("field prime 4\n"), Err(Error::Located { line: 1, .. })));
        assert!(matches!(parse_instance("algebra group\n elements a b\n row a a\n row a b\nend\n"), Err(Error::Located { .. })));
        assert!(matches!(parse_instance("algebra matrix 2\nsub\n e11\n"), Err(Error::Located { .. })));
        assert!(matches!(parse_instance("algebra matrix 2\nfrobnicate\n"), Err(Error::Located { line: 2, .. })));
        assert!(matches!(parse_instance("algebra matrix 2\nsub\n e11\n e12\nend\n"), Err(Error::Located { line: 3, .. })));
    }

    #[test]
    fn catalog_parses() {
        for name in catalog_names() {
            catalog_instance(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
}
