use std::collections::{BTreeMap, BTreeSet};

/// Declared inclusions between embeddings into a common ambient group, up to
/// conjugacy. Queries are reflexive and transitive.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Containments {
    edges: BTreeMap<String, BTreeSet<String>>,
}

impl Containments {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn declare(&mut self, outer: impl Into<String>, inner: impl Into<String>) {
        self.edges
            .entry(outer.into())
            .or_default()
            .insert(inner.into());
    }

    pub fn contains(&self, outer: &str, inner: &str) -> bool {
        let mut seen = BTreeSet::new();
        let mut stack = vec![outer];
        while let Some(cur) = stack.pop() {
            if cur == inner {
                return true;
            }
            if !seen.insert(cur) {
                continue;
            }
            if let Some(next) = self.edges.get(cur) {
                stack.extend(next.iter().map(String::as_str));
            }
        }
        false
    }

    pub fn len(&self) -> usize {
        self.edges.values().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.edges
            .iter()
            .flat_map(|(o, is)| is.iter().map(move |i| (o.as_str(), i.as_str())))
    }
}
