//! Serialized value and policy tables, and the printed-table rendering.

mod bundle;
mod table;

pub use bundle::{
    export_table, import_table, ExportBundle, ExportFormat, ExportMetadata, ExportRow, EXPORT_PLACES,
    FORMAT_VERSION,
};
pub use table::{
    published_table, render_published_table, CellMismatch, PublishedTable, TableCell, TableColumn, TableDiff, COLUMNS,
};
