//! Write the solved table to CSV and JSON, read both back, and confirm the
//! exact values survive.

use tenk_core::policy_io::{export_table, import_table, ExportFormat};
use tenk_core::ActionSubset;

fn main() {
    let dir = std::env::temp_dir().join("tenk-export-example");
    std::fs::create_dir_all(&dir).unwrap();
    let solution = tenk_core::solve_backward();
    for format in [ExportFormat::Csv, ExportFormat::Json] {
        let path = dir.join(format!("policy.{}", format.extension()));
        let written = export_table(&solution, &ActionSubset::all(), format, &path).unwrap();
        let read = import_table(&path).unwrap();
        let same = read.to_solution().unwrap() == solution;
        let size = std::fs::metadata(&path).unwrap().len();
        println!("{}: {} rows, {size} bytes, round trip exact: {same}", path.display(), written.rows.len());
    }
    let csv = std::fs::read_to_string(dir.join("policy.csv")).unwrap();
    for line in csv.lines().take(8) {
        println!("{line}");
    }
}
