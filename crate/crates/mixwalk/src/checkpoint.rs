//! Append-only checkpoint of finished enumeration partitions.
//!
//! Layout (little endian): the magic `MWCK`, a `u32` version, the order as
//! `u32`, and the functor labels as a `u32` count followed by length-prefixed
//! strings. Then one record per finished partition:
//!
//! ```text
//! u32 partition id
//! u64 digraph count
//! per functor: u32 class count, then per class
//!     u32 key length, key bytes, u64 size, u64 graphs
//! u64 FNV-1a hash of every preceding byte of the record
//! ```

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use mixwalk_core::enumerate::{ClassKey, ClassMap, ClassStats};

use crate::error::{CliError, Result};

const MAGIC: &[u8; 4] = b"MWCK";
const VERSION: u32 = 1;

/// Result of one partition: how many digraphs it held and their classes per functor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionResult {
    pub digraphs: u64,
    pub classes: Vec<ClassMap>,
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf29ce484222325, |h, &b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

fn put_u32(buf: &mut Vec<u8>, v: u32) {
    buf.extend_from_slice(&v.to_le_bytes());
}

fn put_u64(buf: &mut Vec<u8>, v: u64) {
    buf.extend_from_slice(&v.to_le_bytes());
}

fn put_str(buf: &mut Vec<u8>, s: &str) {
    put_u32(buf, s.len() as u32);
    buf.extend_from_slice(s.as_bytes());
}

pub fn encode_record(id: u32, r: &PartitionResult) -> Vec<u8> {
    let mut buf = Vec::new();
    put_u32(&mut buf, id);
    put_u64(&mut buf, r.digraphs);
    for map in &r.classes {
        put_u32(&mut buf, map.len() as u32);
        for (k, s) in map.iter() {
            put_str(&mut buf, &k.0);
            put_u64(&mut buf, s.size);
            put_u64(&mut buf, s.graphs);
        }
    }
    let h = fnv1a(&buf);
    put_u64(&mut buf, h);
    buf
}

fn header(order: usize, labels: &[String]) -> Vec<u8> {
    let mut buf = MAGIC.to_vec();
    put_u32(&mut buf, VERSION);
    put_u32(&mut buf, order as u32);
    put_u32(&mut buf, labels.len() as u32);
    for l in labels {
        put_str(&mut buf, l);
    }
    buf
}

struct Cursor<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn take(&mut self, n: usize) -> Option<&'a [u8]> {
        let s = self.data.get(self.pos..self.pos.checked_add(n)?)?;
        self.pos += n;
        Some(s)
    }

    fn u32(&mut self) -> Option<u32> {
        self.take(4).map(|b| u32::from_le_bytes(b.try_into().unwrap()))
    }

    fn u64(&mut self) -> Option<u64> {
        self.take(8).map(|b| u64::from_le_bytes(b.try_into().unwrap()))
    }

    fn string(&mut self) -> Option<String> {
        let n = self.u32()? as usize;
        String::from_utf8(self.take(n)?.to_vec()).ok()
    }
}

/// Finished partitions recorded in an existing file, plus a writer for new ones.
pub struct Checkpoint {
    path: PathBuf,
    file: BufWriter<File>,
}

impl Checkpoint {
    /// Opens `path`, creating it if needed. Returns the recorded partitions.
    pub fn open(path: &Path, order: usize, labels: &[String]) -> Result<(Checkpoint, BTreeMap<u32, PartitionResult>)> {
        let expected = header(order, labels);
        let done = if path.exists() {
            let mut data = Vec::new();
            File::open(path)?.read_to_end(&mut data)?;
            read_records(path, &data, &expected, labels.len())?
        } else {
            let mut f = File::create(path)?;
            f.write_all(&expected)?;
            f.sync_all()?;
            BTreeMap::new()
        };
        let file = OpenOptions::new().append(true).open(path)?;
        Ok((Checkpoint { path: path.to_path_buf(), file: BufWriter::new(file) }, done))
    }

    pub fn append(&mut self, id: u32, r: &PartitionResult) -> Result<()> {
        self.file.write_all(&encode_record(id, r))?;
        self.file.flush()?;
        Ok(())
    }

    pub fn path(&self) -> &Path {
        &self.path
    }
}

fn corrupt(path: &Path, partition: String, reason: &str) -> CliError {
    CliError::Checkpoint { path: path.display().to_string(), partition, reason: reason.into() }
}

/// Decodes every record after the header.
pub fn read_records(path: &Path, data: &[u8], expected_header: &[u8], functors: usize) -> Result<BTreeMap<u32, PartitionResult>> {
    if data.len() < expected_header.len() || &data[..expected_header.len()] != expected_header {
        return Err(corrupt(path, "header".into(), "header does not match this order and table set"));
    }
    let mut c = Cursor { data, pos: expected_header.len() };
    let mut out = BTreeMap::new();
    let mut last: Option<u32> = None;
    while c.pos < data.len() {
        let start = c.pos;
        let after = || last.map_or("after header".to_string(), |p| format!("after {}", p));
        let id = c.u32().ok_or_else(|| corrupt(path, after(), "truncated record"))?;
        let truncated = || corrupt(path, id.to_string(), "truncated record");
        let digraphs = c.u64().ok_or_else(truncated)?;
        let mut classes = Vec::with_capacity(functors);
        for _ in 0..functors {
            let n = c.u32().ok_or_else(truncated)?;
            let mut map = ClassMap::new();
            for _ in 0..n {
                let key = c.string().ok_or_else(truncated)?;
                let size = c.u64().ok_or_else(truncated)?;
                let graphs = c.u64().ok_or_else(truncated)?;
                map.add(ClassKey(key), ClassStats { size, graphs });
            }
            classes.push(map);
        }
        let body_end = c.pos;
        let stored = c.u64().ok_or_else(truncated)?;
        if fnv1a(&data[start..body_end]) != stored {
            return Err(corrupt(path, id.to_string(), "checksum mismatch"));
        }
        if out.insert(id, PartitionResult { digraphs, classes }).is_some() {
            return Err(corrupt(path, id.to_string(), "partition recorded twice"));
        }
        last = Some(id);
    }
    Ok(out)
}
