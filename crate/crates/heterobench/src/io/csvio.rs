use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use super::{IoError, Result};

/// Shortest decimal that round-trips to the same `f64`.
pub(crate) fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

pub(crate) struct CsvOut {
    inner: csv::Writer<BufWriter<File>>,
    path: std::path::PathBuf,
}

impl CsvOut {
    pub(crate) fn create(path: &Path) -> Result<Self> {
        let file = File::create(path).map_err(|e| IoError::io(path, e))?;
        let inner = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(BufWriter::new(file));
        Ok(CsvOut {
            inner,
            path: path.to_path_buf(),
        })
    }

    pub(crate) fn row<I, T>(&mut self, fields: I) -> Result<()>
    where
        I: IntoIterator<Item = T>,
        T: AsRef<[u8]>,
    {
        self.inner.write_record(fields).map_err(|e| self.csv_err(e))
    }

    pub(crate) fn finish(mut self) -> Result<()> {
        self.inner.flush().map_err(|e| IoError::io(&self.path, e))
    }

    fn csv_err(&self, e: csv::Error) -> IoError {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => IoError::io(&self.path, io),
            other => IoError::invalid(&self.path, format!("{other:?}")),
        }
    }
}

/// A parsed data row with its 1-based line number.
pub(crate) struct Row {
    pub line: u64,
    pub fields: csv::StringRecord,
}

impl Row {
    pub(crate) fn get<'a>(&'a self, path: &Path, i: usize) -> Result<&'a str> {
        self.fields.get(i).ok_or_else(|| {
            IoError::parse(
                path,
                self.line,
                format!("expected at least {} fields", i + 1),
            )
        })
    }

    pub(crate) fn parse<T: FromStr>(&self, path: &Path, i: usize, what: &str) -> Result<T>
    where
        T::Err: std::fmt::Display,
    {
        let raw = self.get(path, i)?;
        raw.trim()
            .parse()
            .map_err(|e| IoError::parse(path, self.line, format!("bad {what} {raw:?}: {e}")))
    }

    pub(crate) fn expect_len(&self, path: &Path, n: usize) -> Result<()> {
        if self.fields.len() != n {
            return Err(IoError::parse(
                path,
                self.line,
                format!("expected {n} fields, found {}", self.fields.len()),
            ));
        }
        Ok(())
    }
}

/// Reads every row of a delimited file. With `header`, the first row is
/// returned separately.
pub(crate) fn read_rows(
    path: &Path,
    delimiter: u8,
    header: bool,
) -> Result<(Option<csv::StringRecord>, Vec<Row>)> {
    let file = File::open(path).map_err(|e| IoError::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .delimiter(delimiter)
        .from_reader(std::io::BufReader::new(file));
    let mut head = None;
    let mut rows = Vec::new();
    let mut record = csv::StringRecord::new();
    loop {
        let more = reader.read_record(&mut record).map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            match e.into_kind() {
                csv::ErrorKind::Io(io) => IoError::io(path, io),
                other => IoError::parse(path, line, format!("{other:?}")),
            }
        })?;
        if !more {
            break;
        }
        let line = record.position().map_or(0, |p| p.line());
        if header && head.is_none() {
            head = Some(record.clone());
            continue;
        }
        rows.push(Row {
            line,
            fields: record.clone(),
        });
    }
    if header && head.is_none() {
        return Err(IoError::invalid(path, "missing header row"));
    }
    Ok((head, rows))
}

/// Reads a file written by this crate: comma-delimited with the exact
/// header `expected`.
pub(crate) fn read_table(path: &Path, expected: &[String]) -> Result<Vec<Row>> {
    let (head, rows) = read_rows(path, b',', true)?;
    let head = head.expect("header requested");
    if head.iter().ne(expected.iter().map(String::as_str)) {
        return Err(IoError::parse(
            path,
            1,
            format!(
                "expected header {:?}, found {:?}",
                expected.join(","),
                head.iter().collect::<Vec<_>>().join(",")
            ),
        ));
    }
    Ok(rows)
}

pub(crate) fn write_text(path: &Path, text: &str) -> Result<()> {
    let mut f = File::create(path).map_err(|e| IoError::io(path, e))?;
    f.write_all(text.as_bytes())
        .map_err(|e| IoError::io(path, e))
}

pub(crate) fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| IoError::io(path, e))
}
