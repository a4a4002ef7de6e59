//! Report sections and their two renderings.

use std::fmt::{Display, Write};

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    #[default]
    Text,
    /// One `name = value` per line.
    Kv,
}

#[derive(Debug)]
pub struct Section {
    title: String,
    /// Prefix for keys in key-value mode; empty for unprefixed keys.
    prefix: String,
    entries: Vec<(String, String)>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            prefix: String::new(),
            entries: Vec::new(),
        }
    }

    pub fn prefixed(title: impl Into<String>) -> Self {
        let title = title.into();
        Self {
            prefix: format!("{title}."),
            title,
            entries: Vec::new(),
        }
    }

    pub fn put(&mut self, key: impl Into<String>, value: impl Display) -> &mut Self {
        self.entries.push((key.into(), value.to_string()));
        self
    }
}

#[derive(Debug, Default)]
pub struct Report {
    sections: Vec<Section>,
}

impl Report {
    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn render(&self, mode: OutputMode) -> String {
        let mut out = String::new();
        for (i, s) in self.sections.iter().enumerate() {
            match mode {
                OutputMode::Kv => {
                    for (k, v) in &s.entries {
                        let _ = writeln!(out, "{}{k} = {v}", s.prefix);
                    }
                }
                OutputMode::Text => {
                    if i > 0 {
                        out.push('\n');
                    }
                    let _ = writeln!(out, "[{}]", s.title);
                    let width = s.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                    for (k, v) in &s.entries {
                        let _ = writeln!(out, "  {k:<width$}  {v}");
                    }
                }
            }
        }
        out
    }
}
