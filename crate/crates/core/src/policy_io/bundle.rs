use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::action::ActionId;
use crate::dice::Configuration;
use crate::error::{Error, Result};
use crate::solver::{reachable_states_with, Decision, Solution, STOPPING_BOUNDARY};
use crate::state::GameState;
use crate::value::to_decimal;
use crate::variants::ActionSubset;

pub const FORMAT_VERSION: u32 = 1;

/// Decimal places in the advisory `value_dec` column.
pub const EXPORT_PLACES: u32 = 10;

const CSV_HEADER: &str = "tau,f,o,t,n,value_num,value_den,value_dec,action,reachable";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Csv,
    Json,
}

impl ExportFormat {
    /// Guesses from a file extension, defaulting to CSV.
    pub fn from_path(path: &Path) -> ExportFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => ExportFormat::Json,
            _ => ExportFormat::Csv,
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            ExportFormat::Csv => "csv",
            ExportFormat::Json => "json",
        }
    }
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.extension())
    }
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ExportFormat::Csv),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::Parse(format!("unknown export format `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportMetadata {
    pub format_version: u32,
    pub solver_version: String,
    pub arithmetic: String,
    pub variant: String,
    pub threshold: u32,
}

impl ExportMetadata {
    pub fn new(variant: &ActionSubset) -> Self {
        ExportMetadata {
            format_version: FORMAT_VERSION,
            solver_version: env!("CARGO_PKG_VERSION").to_string(),
            arithmetic: "exact-rational".to_string(),
            variant: variant.to_string(),
            threshold: STOPPING_BOUNDARY,
        }
    }
}

/// One state. The initial state has no configuration and `n = 5`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportRow {
    pub tau: u32,
    pub f: Option<u8>,
    pub o: Option<u8>,
    pub t: Option<u8>,
    pub n: u8,
    pub value_num: String,
    pub value_den: String,
    pub value_dec: String,
    pub action: ActionId,
    pub reachable: bool,
}

impl ExportRow {
    fn new(state: GameState, value: &BigRational, action: ActionId, reachable: bool) -> Self {
        let (tau, config, n) = match state {
            GameState::Active { tau, config, n } => (tau, Some(config), n),
            _ => (0, None, 5),
        };
        ExportRow {
            tau,
            f: config.map(|c| c.fives()),
            o: config.map(|c| c.ones()),
            t: config.map(|c| c.triple()),
            n,
            value_num: value.numer().to_string(),
            value_den: value.denom().to_string(),
            value_dec: to_decimal(value, EXPORT_PLACES),
            action,
            reachable,
        }
    }

    /// The state this row describes.
    pub fn state(&self) -> Result<GameState> {
        match (self.f, self.o, self.t) {
            (None, None, None) => {
                if self.tau != 0 || self.n != 5 {
                    return Err(Error::Malformed(format!(
                        "initial-state row must have tau 0 and n 5, got tau {} n {}",
                        self.tau, self.n
                    )));
                }
                Ok(GameState::Initial)
            }
            (Some(f), Some(o), Some(t)) => {
                let config = Configuration::new(f, o, t)
                    .map_err(|e| Error::Malformed(e.to_string()))?;
                GameState::active(self.tau, config, self.n).map_err(|e| Error::Malformed(e.to_string()))
            }
            _ => Err(Error::Malformed(format!(
                "row at tau {} has a partial configuration",
                self.tau
            ))),
        }
    }

    /// The exact value from the numerator and denominator columns.
    pub fn value(&self) -> Result<BigRational> {
        let num: BigInt = self
            .value_num
            .parse()
            .map_err(|_| Error::Malformed(format!("bad numerator `{}`", self.value_num)))?;
        let den: BigInt = self
            .value_den
            .parse()
            .map_err(|_| Error::Malformed(format!("bad denominator `{}`", self.value_den)))?;
        if !den.is_positive() {
            return Err(Error::Malformed(format!("non-positive denominator `{den}`")));
        }
        Ok(BigRational::new(num, den))
    }
}

/// A solved table with the metadata needed to check where it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportBundle {
    pub metadata: ExportMetadata,
    pub rows: Vec<ExportRow>,
}

impl ExportBundle {
    /// The initial state first, then every solved cell in `(τ, config, n)`
    /// order. Reachability is under the variant's own actions.
    pub fn from_solution(solution: &Solution, variant: &ActionSubset) -> Self {
        let reach = reachable_states_with(|a| variant.contains(a));
        let mut rows = vec![ExportRow::new(
            GameState::Initial,
            solution.initial_value(),
            ActionId::Roll,
            true,
        )];
        rows.extend(solution.cells().map(|(state, d)| {
            let GameState::Active { tau, config, n } = state else {
                unreachable!("cells are active states")
            };
            ExportRow::new(state, &d.value, d.action, reach.contains(tau, config, n))
        }));
        ExportBundle {
            metadata: ExportMetadata::new(variant),
            rows,
        }
    }

    /// Rebuilds the solution; every admissible cell must appear exactly once.
    pub fn to_solution(&self) -> Result<Solution> {
        check_version(self.metadata.format_version)?;
        let mut solution = Solution::empty();
        let mut initial = None;
        let mut seen = 0usize;
        for row in &self.rows {
            let value = row.value()?;
            match row.state()? {
                GameState::Initial => {
                    if initial.replace(value).is_some() {
                        return Err(Error::Malformed("initial state listed twice".into()));
                    }
                }
                GameState::Active { tau, config, n } => {
                    if tau >= STOPPING_BOUNDARY {
                        return Err(Error::Malformed(format!(
                            "row at tau {tau} is beyond the stopping boundary"
                        )));
                    }
                    if solution.decision(tau, config, n).is_some() {
                        return Err(Error::Malformed(format!("({tau}, [{config}], {n}) listed twice")));
                    }
                    solution.set(
                        tau,
                        config,
                        n,
                        Decision {
                            value,
                            action: row.action,
                        },
                    );
                    seen += 1;
                }
                GameState::Terminal => unreachable!("rows never describe the absorbing state"),
            }
        }
        let expected = Solution::empty_cell_count();
        if seen != expected {
            return Err(Error::Malformed(format!("expected {expected} cells, found {seen}")));
        }
        let initial = initial.ok_or_else(|| Error::Malformed("initial state missing".into()))?;
        solution.set_initial(initial);
        Ok(solution)
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        let m = &self.metadata;
        writeln!(out, "# format_version={}", m.format_version)?;
        writeln!(out, "# solver_version={}", m.solver_version)?;
        writeln!(out, "# arithmetic={}", m.arithmetic)?;
        writeln!(out, "# variant={}", m.variant)?;
        writeln!(out, "# threshold={}", m.threshold)?;
        let mut writer = csv::Writer::from_writer(out);
        for row in &self.rows {
            writer.serialize(row)?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv output is utf-8")
    }

    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut fields = std::collections::HashMap::new();
        for line in text.lines().take_while(|l| l.starts_with('#')) {
            let (k, v) = line[1..]
                .trim()
                .split_once('=')
                .ok_or_else(|| Error::Malformed(format!("bad metadata line `{line}`")))?;
            fields.insert(k.trim().to_string(), v.trim().to_string());
        }
        let get = |k: &str| {
            fields
                .get(k)
                .cloned()
                .ok_or_else(|| Error::Malformed(format!("metadata `{k}` missing")))
        };
        let number = |k: &str| -> Result<u32> {
            get(k)?
                .parse()
                .map_err(|_| Error::Malformed(format!("metadata `{k}` is not a number")))
        };
        let format_version = number("format_version")?;
        check_version(format_version)?;
        let metadata = ExportMetadata {
            format_version,
            solver_version: get("solver_version")?,
            arithmetic: get("arithmetic")?,
            variant: get("variant")?,
            threshold: number("threshold")?,
        };

        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let header: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
        if header.join(",") != CSV_HEADER {
            return Err(Error::Malformed(format!("unexpected header `{}`", header.join(","))));
        }
        let rows = reader
            .deserialize()
            .collect::<std::result::Result<Vec<ExportRow>, _>>()
            .map_err(|e| Error::Malformed(e.to_string()))?;
        Ok(ExportBundle { metadata, rows })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("bundle serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        // check the version before the rows, so old files get the clearer error
        let probe: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        let version = probe
            .pointer("/metadata/format_version")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| Error::Malformed("metadata.format_version missing".into()))?;
        check_version(version as u32)?;
        serde_json::from_value(probe).map_err(|e| Error::Malformed(e.to_string()))
    }
}

fn check_version(found: u32) -> Result<()> {
    if found != FORMAT_VERSION {
        return Err(Error::VersionMismatch {
            found,
            expected: FORMAT_VERSION,
        });
    }
    Ok(())
}

/// Writes `solution` to `path` in `format`.
pub fn export_table(
    solution: &Solution,
    variant: &ActionSubset,
    format: ExportFormat,
    path: &Path,
) -> Result<ExportBundle> {
    let bundle = ExportBundle::from_solution(solution, variant);
    let text = match format {
        ExportFormat::Csv => bundle.to_csv_string(),
        ExportFormat::Json => bundle.to_json_string(),
    };
    fs::write(path, text)?;
    Ok(bundle)
}

/// Reads an export written by [`export_table`]; the format is detected from
/// the content.
pub fn import_table(path: &Path) -> Result<ExportBundle> {
    let text = fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        ExportBundle::from_json_str(&text)
    } else {
        ExportBundle::from_csv_str(&text)
    }
}
