use crate::lincore::LinMap;

/// The two sides of a diagram that failed to commute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub lhs: LinMap,
    pub rhs: LinMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub holds: bool,
    /// Present exactly when `holds` is false.
    pub witness: Option<Witness>,
}

/// An ordered list of named diagram checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub entries: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records whether `lhs == rhs`, keeping both sides as a witness if not.
    pub fn check(&mut self, name: impl Into<String>, lhs: LinMap, rhs: LinMap) -> bool {
        let holds = lhs == rhs;
        self.entries.push(AxiomCheck {
            name: name.into(),
            holds,
            witness: (!holds).then_some(Witness { lhs, rhs }),
        });
        holds
    }

    /// Records a check with no matrix witness (e.g. an invertibility test).
    pub fn flag(&mut self, name: impl Into<String>, holds: bool) {
        self.entries.push(AxiomCheck {
            name: name.into(),
            holds,
            witness: None,
        });
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.entries.extend(other.entries);
    }

    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.entries.iter().filter(|e| !e.holds)
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.failures().map(|e| e.name.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// True iff every entry whose name starts with `prefix` holds.
    pub fn holds_with_prefix(&self, prefix: &str) -> bool {
        self.entries
            .iter()
            .filter(|e| e.name.starts_with(prefix))
            .all(|e| e.holds)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
