//! Named pass/fail results collected by the verification suites.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// An ordered list of named checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckList {
    items: Vec<Check>,
}

impl CheckList {
    pub fn new() -> CheckList {
        CheckList::default()
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool) {
        self.items.push(Check { name: name.into(), passed });
    }

    /// Appends another list with every name prefixed by `prefix/`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckList) {
        for c in other.items {
            self.items.push(Check { name: format!("{prefix}/{}", c.name), passed: c.passed });
        }
    }

    pub fn items(&self) -> &[Check] {
        &self.items
    }

    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.items.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }

    /// Looks a check up by exact name.
    pub fn get(&self, name: &str) -> Option<bool> {
        self.items.iter().find(|c| c.name == name).map(|c| c.passed)
    }
}
