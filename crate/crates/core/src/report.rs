//! Check reports in text and structured (JSON) form.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::checks::CheckList;
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

/// One suite of a report: asserted checks plus informational values.
#[derive(Clone, Debug)]
pub struct Section {
    pub name: String,
    pub checks: CheckList,
    pub values: Vec<(String, Value)>,
}

impl Section {
    pub fn new(name: impl Into<String>) -> Section {
        Section { name: name.into(), checks: CheckList::new(), values: Vec::new() }
    }

    pub fn value(&mut self, key: impl Into<String>, v: impl Into<Value>) -> &mut Section {
        self.values.push((key.into(), v.into()));
        self
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) -> &mut Section {
        self.checks.push(name, passed);
        self
    }

    pub fn extend(&mut self, prefix: &str, checks: CheckList) -> &mut Section {
        if prefix.is_empty() {
            for c in checks.items() {
                self.checks.push(c.name.clone(), c.passed);
            }
        } else {
            self.checks.extend_prefixed(prefix, checks);
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.all_passed()
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub instance: String,
    pub command: String,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(instance: impl Into<String>, command: impl Into<String>) -> Report {
        Report { instance: instance.into(), command: command.into(), sections: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.sections.iter().all(Section::passed)
    }

    pub fn check_count(&self) -> usize {
        self.sections.iter().map(|s| s.checks.items().len()).sum()
    }

    pub fn failures(&self) -> Vec<String> {
        self.sections
            .iter()
            .flat_map(|s| s.checks.failures().into_iter().map(move |f| format!("{}: {f}", s.name)))
            .collect()
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    /// Looks up `section.key` among the values.
    pub fn value(&self, section: &str, key: &str) -> Option<&Value> {
        self.section(section)?.values.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serialises");
                s.push('\n');
                s
            }
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("instance: {}\ncommand: {}\n", self.instance, self.command);
        for s in &self.sections {
            out.push_str(&format!("\n[{}]\n", s.name));
            for (k, v) in &s.values {
                let shown = match v {
                    Value::String(t) => t.clone(),
                    other => other.to_string(),
                };
                out.push_str(&format!("  {k} = {shown}\n"));
            }
            for c in s.checks.items() {
                out.push_str(&format!("  {} {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name));
            }
        }
        let failed = self.failures().len();
        out.push_str(&format!(
            "\nverdict: {} ({} checks, {} failed)\n",
            if self.passed() { "pass" } else { "fail" },
            self.check_count(),
            failed
        ));
        out
    }

    /// A flat document: `values` keyed by `section.key`, `checks` as an
    /// ordered array. Object keys come out sorted.
    pub fn to_json(&self) -> Value {
        let mut values = Map::new();
        let mut checks = Vec::new();
        for s in &self.sections {
            for (k, v) in &s.values {
                values.insert(format!("{}.{k}", s.name), v.clone());
            }
            for c in s.checks.items() {
                checks.push(json!({ "section": s.name, "name": c.name, "passed": c.passed }));
            }
        }
        json!({
            "instance": self.instance,
            "command": self.command,
            "passed": self.passed(),
            "failed": self.failures().len(),
            "values": values,
            "checks": checks,
        })
    }
}

/// Short SHA-256 fingerprint of a matrix's field, shape and entries.
pub fn matrix_hash(m: &Matrix) -> String {
    let mut h = Sha256::new();
    h.update(format!("{} {}x{}", m.field(), m.rows(), m.cols()));
    for x in m.data() {
        h.update(b";");
        h.update(x.to_string());
    }
    h.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn structured_keys_are_sorted_and_stable() {
        let mut r = Report::new("x", "d2");
        let mut s = Section::new("zeta");
        s.value("b", 2).value("a", 1).check("ok", true);
        r.sections.push(s);
        let text = r.render(Format::Structured);
        assert!(text.find("\"zeta.a\"").unwrap() < text.find("\"zeta.b\"").unwrap());
        assert_eq!(text, r.render(Format::Structured));
        assert!(r.passed());
    }

    #[test]
    fn failures_are_named() {
        let mut r = Report::new("x", "d2");
        let mut s = Section::new("d2");
        s.check("left quasibase found", false);
        r.sections.push(s);
        assert_eq!(r.failures(), vec!["d2: left quasibase found".to_string()]);
        assert!(r.to_text().contains("FAIL left quasibase found"));
    }

    #[test]
    fn hash_distinguishes_matrices() {
        let f = Field::Rational;
        assert_ne!(matrix_hash(&Matrix::identity(f, 2)), matrix_hash(&Matrix::zeros(f, 2, 2)));
        assert_eq!(matrix_hash(&Matrix::identity(f, 2)).len(), 16);
    }
}
