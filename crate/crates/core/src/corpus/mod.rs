//! Corpus handling: record parsing, emoji extraction, tokenization, date
//! features, seasonal slicing, and prediction-dataset construction.

mod dataset;
mod inventory;
mod parse;
mod tokenize;

pub use dataset::{
    build_prediction_dataset, build_seasonal_slices, frequency_table, DatasetParams, Example,
    PredictionDataset, SeasonalSlices, Split,
};
pub use inventory::EmojiInventory;
pub use parse::{parse_corpus, parse_corpus_reader, resolve_timestamp, ParseMode, ParsedCorpus};
pub use tokenize::{extract_emojis, tokenize};

use chrono::{Datelike, NaiveDateTime, Timelike};
use serde::{Deserialize, Serialize};

/// One timestamped short text with its extracted emoji occurrences.
///
/// `timestamp` is the local civil time of posting; `tz_offset_minutes` is the
/// UTC offset it was derived from (0 when the source record carried none).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Message {
    pub id: String,
    pub text: String,
    pub timestamp: NaiveDateTime,
    pub tz_offset_minutes: i32,
    /// Token sequence produced by [`tokenize`].
    pub tokens: Vec<String>,
    /// Emoji occurrences in `text`, in scan order.
    pub emojis: Vec<EmojiOccurrence>,
}

impl Message {
    pub fn date_features(&self) -> DateFeatures {
        DateFeatures::from_datetime(&self.timestamp)
    }

    pub fn season(&self) -> Season {
        self.date_features().season
    }
}

/// A single emoji match in a text: the matched sequence and its byte span.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmojiOccurrence {
    pub token: String,
    pub start: usize,
    pub end: usize,
}

/// Meteorological Northern-hemisphere season buckets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Season {
    Spring,
    Summer,
    Autumn,
    Winter,
}

impl Season {
    pub const ALL: [Season; 4] = [Season::Spring, Season::Summer, Season::Autumn, Season::Winter];

    /// Mar-May Spring, Jun-Aug Summer, Sep-Nov Autumn, Dec-Feb Winter.
    pub fn from_month(month: u32) -> Season {
        match month {
            3..=5 => Season::Spring,
            6..=8 => Season::Summer,
            9..=11 => Season::Autumn,
            _ => Season::Winter,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Season::Spring => "spring",
            Season::Summer => "summer",
            Season::Autumn => "autumn",
            Season::Winter => "winter",
        }
    }

    pub fn index(self) -> usize {
        match self {
            Season::Spring => 0,
            Season::Summer => 1,
            Season::Autumn => 2,
            Season::Winter => 3,
        }
    }
}

impl std::str::FromStr for Season {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Season> {
        match s.to_ascii_lowercase().as_str() {
            "spring" => Ok(Season::Spring),
            "summer" => Ok(Season::Summer),
            "autumn" | "fall" => Ok(Season::Autumn),
            "winter" => Ok(Season::Winter),
            other => Err(crate::Error::InvalidArgument(format!(
                "unknown season {other:?}"
            ))),
        }
    }
}

impl std::fmt::Display for Season {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Calendar features of a posting time: month 1-12, day of week 1-7
/// (Monday = 1), hour of day 1-24, and the season bucket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DateFeatures {
    pub month: u8,
    pub day_of_week: u8,
    pub hour: u8,
    pub season: Season,
}

impl DateFeatures {
    /// Derives the features from a local civil time. The hour index is the
    /// 0-23 clock hour plus one.
    pub fn from_datetime(ts: &NaiveDateTime) -> DateFeatures {
        let month = ts.month();
        DateFeatures {
            month: month as u8,
            day_of_week: ts.weekday().number_from_monday() as u8,
            hour: (ts.hour() + 1) as u8,
            season: Season::from_month(month),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::NaiveDate;

    fn dt(y: i32, mo: u32, d: u32, h: u32, mi: u32) -> NaiveDateTime {
        NaiveDate::from_ymd_opt(y, mo, d)
            .unwrap()
            .and_hms_opt(h, mi, 0)
            .unwrap()
    }

    #[test]
    fn date_features_friday_morning() {
        // 2017-03-17 is a Friday.
        let f = DateFeatures::from_datetime(&dt(2017, 3, 17, 9, 30));
        assert_eq!((f.month, f.day_of_week, f.hour), (3, 5, 10));
        assert_eq!(f.season, Season::Spring);
    }

    #[test]
    fn date_features_midnight_rolls_to_hour_one() {
        // 2016-12-25 is a Sunday.
        let f = DateFeatures::from_datetime(&dt(2016, 12, 25, 0, 0));
        assert_eq!((f.month, f.day_of_week, f.hour), (12, 7, 1));
        assert_eq!(f.season, Season::Winter);
    }

    #[test]
    fn date_features_last_hour_of_day() {
        // 2016-07-04 is a Monday.
        let f = DateFeatures::from_datetime(&dt(2016, 7, 4, 23, 59));
        assert_eq!((f.month, f.day_of_week, f.hour), (7, 1, 24));
        assert_eq!(f.season, Season::Summer);
    }

    #[test]
    fn season_boundaries() {
        for (m, s) in [
            (1, Season::Winter),
            (2, Season::Winter),
            (3, Season::Spring),
            (5, Season::Spring),
            (6, Season::Summer),
            (8, Season::Summer),
            (9, Season::Autumn),
            (11, Season::Autumn),
            (12, Season::Winter),
        ] {
            assert_eq!(Season::from_month(m), s, "month {m}");
        }
    }
}
