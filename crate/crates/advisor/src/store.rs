//! Append-only event log, one JSON-lines file per session.
//!
//! The first line records how the session was created; every later line is
//! one [`Event`]. Replaying the lines through [`Session`] rebuilds it.

use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use uuid::Uuid;

use crate::error::AdvisorError;
use crate::session::{Event, Mode, Session};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Record {
    Created { mode: Mode, seed: Option<u64> },
    Rolled { faces: Vec<u8> },
    Acted { action: tenk_core::ActionId },
}

impl From<&Event> for Record {
    fn from(e: &Event) -> Self {
        match e {
            Event::Rolled { faces } => Record::Rolled { faces: faces.clone() },
            Event::Acted { action } => Record::Acted { action: *action },
        }
    }
}

#[derive(Debug, Clone)]
pub struct EventLog {
    dir: PathBuf,
}

impl EventLog {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self, AdvisorError> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(EventLog { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, id: Uuid) -> PathBuf {
        self.dir.join(format!("{id}.jsonl"))
    }

    fn write(file: &mut File, record: &Record) -> Result<(), AdvisorError> {
        let mut line = serde_json::to_string(record).expect("records serialize");
        line.push('\n');
        file.write_all(line.as_bytes())?;
        file.flush()?;
        Ok(())
    }

    pub fn create(&self, session: &Session) -> Result<(), AdvisorError> {
        let mut file = OpenOptions::new()
            .write(true)
            .create_new(true)
            .open(self.path(session.id))?;
        Self::write(
            &mut file,
            &Record::Created {
                mode: session.mode,
                seed: session.seed,
            },
        )
    }

    pub fn append(&self, id: Uuid, events: &[Event]) -> Result<(), AdvisorError> {
        if events.is_empty() {
            return Ok(());
        }
        let mut file = OpenOptions::new().append(true).open(self.path(id))?;
        for e in events {
            Self::write(&mut file, &e.into())?;
        }
        Ok(())
    }

    /// Rebuilds every logged session.
    pub fn restore(&self) -> Result<Vec<Session>, AdvisorError> {
        let mut sessions = Vec::new();
        for entry in fs::read_dir(&self.dir)? {
            let path = entry?.path();
            if path.extension().and_then(|e| e.to_str()) != Some("jsonl") {
                continue;
            }
            sessions.push(self.restore_one(&path)?);
        }
        sessions.sort_by_key(|s| s.id);
        Ok(sessions)
    }

    fn restore_one(&self, path: &Path) -> Result<Session, AdvisorError> {
        let corrupt = |msg: String| AdvisorError::CorruptLog(format!("{}: {msg}", path.display()));
        let id: Uuid = path
            .file_stem()
            .and_then(|s| s.to_str())
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| corrupt("file name is not a session id".into()))?;
        let mut lines = BufReader::new(File::open(path)?).lines();
        let first = lines.next().ok_or_else(|| corrupt("empty log".into()))??;
        let Record::Created { mode, seed } =
            serde_json::from_str(&first).map_err(|e| corrupt(e.to_string()))?
        else {
            return Err(corrupt("first record must be the creation".into()));
        };
        let mut session = Session::new(id, mode, seed);
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let event = match serde_json::from_str(&line).map_err(|e| corrupt(e.to_string()))? {
                Record::Created { .. } => return Err(corrupt("session created twice".into())),
                Record::Rolled { faces } => Event::Rolled { faces },
                Record::Acted { action } => Event::Acted { action },
            };
            session.replay(&event)?;
        }
        Ok(session)
    }
}
