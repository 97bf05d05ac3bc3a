//! Shared reader for the line-delimited, tab-separated record files used by
//! graph documents, question banks, chunk logs and record fixtures.
//!
//! Blank lines and lines starting with `#` are skipped. Every other line is
//! split on TAB; the first field is the record tag.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line<'a> {
    /// 1-based line number in the source.
    pub number: usize,
    pub fields: Vec<&'a str>,
}

impl<'a> Line<'a> {
    pub fn tag(&self) -> &'a str {
        self.fields[0]
    }
}

pub fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
            return None;
        }
        Some(Line {
            number: i + 1,
            fields: raw.split('\t').collect(),
        })
    })
}

/// Split a `|`-separated list, dropping empty entries.
pub fn split_list(field: &str) -> Vec<String> {
    field
        .split('|')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_owned)
        .collect()
}
