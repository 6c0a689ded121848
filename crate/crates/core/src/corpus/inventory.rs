use std::collections::{BTreeSet, HashMap};
use std::io::BufRead;
use std::path::Path;

use crate::{Error, Result};

/// The explicit, versioned set of codepoint sequences treated as emojis.
///
/// Multi-codepoint sequences (ZWJ families, modifier sequences) are kept as
/// single entries and matched longest-first by the tokenizer.
#[derive(Debug, Clone)]
pub struct EmojiInventory {
    sequences: BTreeSet<String>,
    version: String,
    /// First char -> matching sequences, longest (in bytes) first.
    by_first: HashMap<char, Vec<String>>,
}

impl EmojiInventory {
    pub fn new<I, S>(sequences: I, version: impl Into<String>) -> Result<EmojiInventory>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut set = BTreeSet::new();
        for seq in sequences {
            let seq = seq.into();
            if seq.is_empty() {
                return Err(Error::InvalidArgument(
                    "emoji inventory may not contain an empty sequence".into(),
                ));
            }
            set.insert(seq);
        }
        if set.is_empty() {
            return Err(Error::InvalidArgument("emoji inventory is empty".into()));
        }

        let mut by_first: HashMap<char, Vec<String>> = HashMap::new();
        for seq in &set {
            let first = seq.chars().next().expect("sequence is non-empty");
            by_first.entry(first).or_default().push(seq.clone());
        }
        for seqs in by_first.values_mut() {
            // Longest first so the scan prefers full ZWJ sequences; equal
            // lengths ordered by codepoints for determinism.
            seqs.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        }

        Ok(EmojiInventory {
            sequences: set,
            version: version.into(),
            by_first,
        })
    }

    /// Reads an inventory file: one emoji per line, either the literal
    /// sequence or space-separated hex codepoints (`1F602` or
    /// `1F468 200D 1F469 200D 1F467`). Lines starting with `#` are ignored.
    pub fn from_reader<R: BufRead>(reader: R, version: impl Into<String>) -> Result<EmojiInventory> {
        let mut sequences = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| Error::Parse {
                line: idx + 1,
                message: e.to_string(),
            })?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            sequences.push(parse_inventory_line(line, idx + 1)?);
        }
        EmojiInventory::new(sequences, version)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<EmojiInventory> {
        let path = path.as_ref();
        let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        let version = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| "unversioned".to_string());
        EmojiInventory::from_reader(std::io::BufReader::new(file), version)
    }

    pub fn version(&self) -> &str {
        &self.version
    }

    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    pub fn contains(&self, seq: &str) -> bool {
        self.sequences.contains(seq)
    }

    /// Sequences in codepoint order.
    pub fn sequences(&self) -> impl Iterator<Item = &str> {
        self.sequences.iter().map(|s| s.as_str())
    }

    /// The longest inventory sequence that `text` starts with, if any.
    pub(crate) fn match_prefix<'a>(&'a self, text: &str) -> Option<&'a str> {
        let first = text.chars().next()?;
        let candidates = self.by_first.get(&first)?;
        candidates
            .iter()
            .find(|seq| text.starts_with(seq.as_str()))
            .map(|s| s.as_str())
    }
}

fn parse_inventory_line(line: &str, line_no: usize) -> Result<String> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let all_hex = fields
        .iter()
        .all(|f| f.len() >= 2 && f.len() <= 6 && f.chars().all(|c| c.is_ascii_hexdigit()));
    if all_hex {
        let mut seq = String::new();
        for field in &fields {
            let cp = u32::from_str_radix(field, 16).map_err(|e| Error::Parse {
                line: line_no,
                message: format!("bad codepoint {field:?}: {e}"),
            })?;
            let ch = char::from_u32(cp).ok_or_else(|| Error::Parse {
                line: line_no,
                message: format!("U+{cp:04X} is not a valid scalar value"),
            })?;
            seq.push(ch);
        }
        Ok(seq)
    } else {
        // Literal sequence; internal whitespace is not part of any emoji.
        Ok(fields.concat())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_inventory() {
        assert!(EmojiInventory::new(Vec::<String>::new(), "v").is_err());
        assert!(EmojiInventory::new(vec![""], "v").is_err());
    }

    #[test]
    fn parses_hex_and_literal_lines() {
        let text = "# comment\n1F602\n\u{1F340}\n1F468 200D 1F469 200D 1F467\n";
        let inv = EmojiInventory::from_reader(text.as_bytes(), "test").unwrap();
        assert_eq!(inv.len(), 3);
        assert!(inv.contains("\u{1F602}"));
        assert!(inv.contains("\u{1F340}"));
        assert!(inv.contains("\u{1F468}\u{200D}\u{1F469}\u{200D}\u{1F467}"));
    }

    #[test]
    fn dedupes_sequences() {
        let inv = EmojiInventory::new(vec!["\u{1F602}", "\u{1F602}"], "v").unwrap();
        assert_eq!(inv.len(), 1);
    }

    #[test]
    fn prefix_match_prefers_longest() {
        let family = "\u{1F468}\u{200D}\u{1F469}\u{200D}\u{1F467}";
        let inv = EmojiInventory::new(vec![family, "\u{1F468}"], "v").unwrap();
        let text = format!("{family}!");
        assert_eq!(inv.match_prefix(&text), Some(family));
        assert_eq!(inv.match_prefix("\u{1F468}x"), Some("\u{1F468}"));
        assert_eq!(inv.match_prefix("plain"), None);
    }
}
