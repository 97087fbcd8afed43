//! On-disk cache: `<cache>/<type>/kl.bin`, `h.bin`, `manifest.json`.
//!
//! Binary files are little-endian, length-prefixed records behind a magic
//! tag, the format version and the group fingerprint. The manifest repeats
//! the key fields and records a SHA-256 per file.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::coxeter::{Elem, GroupTable};
use crate::error::{Error, Result};
use crate::exactnum::IntPoly;

use super::htable::{HScope, HTable};
use super::kl::KLStore;

pub const CACHE_FORMAT_VERSION: u32 = 1;
const KL_MAGIC: &[u8; 4] = b"KLST";
const H_MAGIC: &[u8; 4] = b"HTAB";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub format_version: u32,
    pub group: String,
    pub order: usize,
    pub fingerprint: String,
    pub kl_sha256: String,
    pub h_scope: Option<HScope>,
    pub h_sha256: Option<String>,
}

/// `<root>/<type>`.
pub fn group_cache_dir(root: &Path, g: &GroupTable) -> PathBuf {
    root.join(g.name())
}

struct Writer {
    buf: Vec<u8>,
}

impl Writer {
    fn new(magic: &[u8; 4], fingerprint: &str) -> Self {
        let mut w = Writer { buf: Vec::new() };
        w.buf.extend_from_slice(magic);
        w.u32(CACHE_FORMAT_VERSION);
        w.bytes(fingerprint.as_bytes());
        w
    }
    fn u32(&mut self, x: u32) {
        self.buf.extend_from_slice(&x.to_le_bytes());
    }
    fn u64(&mut self, x: u64) {
        self.buf.extend_from_slice(&x.to_le_bytes());
    }
    fn i32(&mut self, x: i32) {
        self.buf.extend_from_slice(&x.to_le_bytes());
    }
    fn i64(&mut self, x: i64) {
        self.buf.extend_from_slice(&x.to_le_bytes());
    }
    fn bytes(&mut self, b: &[u8]) {
        self.u64(b.len() as u64);
        self.buf.extend_from_slice(b);
    }
    fn poly(&mut self, p: &IntPoly) {
        let (low, c) = p.dense();
        self.i32(low);
        self.u32(c.len() as u32);
        for &x in c {
            self.i64(x);
        }
    }
    fn pool(&mut self, pool: &[IntPoly]) {
        self.u64(pool.len() as u64);
        for p in pool {
            self.poly(p);
        }
    }
}

struct Reader<'a> {
    data: &'a [u8],
    pos: usize,
}

fn truncated() -> Error {
    Error::CacheInvalid("truncated cache record".into())
}

impl<'a> Reader<'a> {
    fn open(data: &'a [u8], magic: &[u8; 4], fingerprint: &str) -> Result<Self> {
        let mut r = Reader { data, pos: 0 };
        if r.take(4)? != magic {
            return Err(Error::CacheInvalid("bad magic".into()));
        }
        let v = r.u32()?;
        if v != CACHE_FORMAT_VERSION {
            return Err(Error::CacheInvalid(format!(
                "cache format version {v}, expected {CACHE_FORMAT_VERSION}"
            )));
        }
        let fp = r.bytes()?;
        if fp != fingerprint.as_bytes() {
            return Err(Error::CacheInvalid("group fingerprint mismatch".into()));
        }
        Ok(r)
    }
    fn take(&mut self, k: usize) -> Result<&'a [u8]> {
        let end = self.pos.checked_add(k).ok_or_else(truncated)?;
        let s = self.data.get(self.pos..end).ok_or_else(truncated)?;
        self.pos = end;
        Ok(s)
    }
    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }
    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
    fn i32(&mut self) -> Result<i32> {
        Ok(i32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }
    fn i64(&mut self) -> Result<i64> {
        Ok(i64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
    fn len(&mut self) -> Result<usize> {
        let n = self.u64()? as usize;
        if n > self.data.len() {
            return Err(truncated());
        }
        Ok(n)
    }
    fn bytes(&mut self) -> Result<&'a [u8]> {
        let n = self.len()?;
        self.take(n)
    }
    fn poly(&mut self) -> Result<IntPoly> {
        let low = self.i32()?;
        let k = self.u32()? as usize;
        let mut c = Vec::with_capacity(k.min(1024));
        for _ in 0..k {
            c.push(self.i64()?);
        }
        Ok(IntPoly::from_coeffs(low, c))
    }
    fn pool(&mut self) -> Result<Vec<IntPoly>> {
        let n = self.len()?;
        (0..n).map(|_| self.poly()).collect()
    }
    fn finish(&self) -> Result<()> {
        if self.pos != self.data.len() {
            return Err(Error::CacheInvalid("trailing bytes in cache file".into()));
        }
        Ok(())
    }
}

pub fn encode_kl(kl: &KLStore) -> Vec<u8> {
    let mut w = Writer::new(KL_MAGIC, &kl.fingerprint);
    w.u64(kl.n as u64);
    w.pool(&kl.pool);
    w.u64(kl.index.len() as u64);
    for &i in &kl.index {
        w.u32(i);
    }
    for row in &kl.mu {
        w.u64(row.len() as u64);
        for &(x, m) in row {
            w.u32(x);
            w.i64(m);
        }
    }
    w.buf
}

pub fn decode_kl(data: &[u8], fingerprint: &str) -> Result<KLStore> {
    let mut r = Reader::open(data, KL_MAGIC, fingerprint)?;
    let n = r.len()?;
    let pool = r.pool()?;
    let k = r.len()?;
    if k != n * n {
        return Err(Error::CacheInvalid("KL index has the wrong size".into()));
    }
    let mut index = Vec::with_capacity(k);
    for _ in 0..k {
        index.push(r.u32()?);
    }
    let mut mu = Vec::with_capacity(n);
    for _ in 0..n {
        let m = r.len()?;
        let mut row = Vec::with_capacity(m);
        for _ in 0..m {
            row.push((r.u32()? as Elem, r.i64()?));
        }
        mu.push(row);
    }
    r.finish()?;
    if index.iter().any(|&i| i != u32::MAX && i as usize >= pool.len()) {
        return Err(Error::CacheInvalid("KL index out of range".into()));
    }
    Ok(KLStore {
        n,
        fingerprint: fingerprint.to_string(),
        pool,
        index,
        mu,
    })
}

pub fn encode_h(h: &HTable, fingerprint: &str) -> Vec<u8> {
    let mut w = Writer::new(H_MAGIC, fingerprint);
    w.u32(match h.scope {
        HScope::Generators => 0,
        HScope::AllPairs => 1,
    });
    w.u64(h.n as u64);
    w.u64(h.lefts.len() as u64);
    for &x in &h.lefts {
        w.u32(x);
    }
    w.pool(&h.pool);
    w.u64(h.rows.len() as u64);
    for row in &h.rows {
        w.u64(row.len() as u64);
        for &(z, id) in row {
            w.u32(z);
            w.u32(id);
        }
    }
    w.buf
}

pub fn decode_h(data: &[u8], fingerprint: &str) -> Result<HTable> {
    let mut r = Reader::open(data, H_MAGIC, fingerprint)?;
    let scope = match r.u32()? {
        0 => HScope::Generators,
        1 => HScope::AllPairs,
        k => return Err(Error::CacheInvalid(format!("unknown h scope tag {k}"))),
    };
    let n = r.len()?;
    let nl = r.len()?;
    let mut lefts = Vec::with_capacity(nl);
    for _ in 0..nl {
        lefts.push(r.u32()? as Elem);
    }
    let pool = r.pool()?;
    let nr = r.len()?;
    if nr != n * nl {
        return Err(Error::CacheInvalid("h row count does not match".into()));
    }
    let mut rows = Vec::with_capacity(nr);
    for _ in 0..nr {
        let m = r.len()?;
        let mut row = Vec::with_capacity(m);
        for _ in 0..m {
            let z = r.u32()?;
            let id = r.u32()?;
            if z as usize >= n || id as usize >= pool.len() {
                return Err(Error::CacheInvalid("h entry out of range".into()));
            }
            row.push((z as Elem, id));
        }
        rows.push(row);
    }
    r.finish()?;
    let mut left_pos = vec![u32::MAX; n];
    for (i, &x) in lefts.iter().enumerate() {
        if x as usize >= n {
            return Err(Error::CacheInvalid("h left factor out of range".into()));
        }
        left_pos[x as usize] = i as u32;
    }
    Ok(HTable {
        scope,
        n,
        lefts,
        left_pos,
        rows,
        pool,
    })
}

fn sha_hex(b: &[u8]) -> String {
    hex::encode(Sha256::digest(b))
}

fn write_atomic(path: &Path, data: &[u8]) -> io::Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(data)?;
        f.sync_all()?;
    }
    fs::rename(tmp, path)
}

fn read_file(path: &Path) -> Result<Vec<u8>> {
    let mut f = fs::File::open(path).map_err(|e| Error::CacheInvalid(format!("{}: {e}", path.display())))?;
    let mut b = Vec::new();
    f.read_to_end(&mut b)?;
    Ok(b)
}

/// Write `kl.bin`, optionally `h.bin`, then `manifest.json` last.
pub fn cache_save(dir: &Path, g: &GroupTable, kl: &KLStore, h: Option<&HTable>) -> Result<()> {
    fs::create_dir_all(dir)?;
    let fp = g.fingerprint();
    let kl_bytes = encode_kl(kl);
    write_atomic(&dir.join("kl.bin"), &kl_bytes)?;
    let (h_scope, h_sha) = match h {
        Some(h) => {
            let b = encode_h(h, &fp);
            write_atomic(&dir.join("h.bin"), &b)?;
            (Some(h.scope), Some(sha_hex(&b)))
        }
        None => (None, None),
    };
    let manifest = Manifest {
        format_version: CACHE_FORMAT_VERSION,
        group: g.name().to_string(),
        order: g.order(),
        fingerprint: fp,
        kl_sha256: sha_hex(&kl_bytes),
        h_scope,
        h_sha256: h_sha,
    };
    let mut text = serde_json::to_string_pretty(&manifest)?;
    text.push('\n');
    write_atomic(&dir.join("manifest.json"), text.as_bytes())?;
    Ok(())
}

pub fn read_manifest(dir: &Path) -> Result<Manifest> {
    let b = read_file(&dir.join("manifest.json"))?;
    serde_json::from_slice(&b).map_err(|e| Error::CacheInvalid(format!("manifest: {e}")))
}

/// Load and validate. Any mismatch is `Error::CacheInvalid`.
pub fn cache_load(dir: &Path, g: &GroupTable) -> Result<(KLStore, Option<HTable>)> {
    let m = read_manifest(dir)?;
    if m.format_version != CACHE_FORMAT_VERSION {
        return Err(Error::CacheInvalid(format!(
            "cache format version {}, expected {CACHE_FORMAT_VERSION}",
            m.format_version
        )));
    }
    let fp = g.fingerprint();
    if m.fingerprint != fp || m.group != g.name() || m.order != g.order() {
        return Err(Error::CacheInvalid(format!(
            "cache at {} belongs to {} (order {}), not {}",
            dir.display(),
            m.group,
            m.order,
            g.name()
        )));
    }
    let kl_bytes = read_file(&dir.join("kl.bin"))?;
    if sha_hex(&kl_bytes) != m.kl_sha256 {
        return Err(Error::CacheInvalid("kl.bin checksum mismatch".into()));
    }
    let kl = decode_kl(&kl_bytes, &fp)?;
    let h = match &m.h_sha256 {
        Some(sha) => {
            let b = read_file(&dir.join("h.bin"))?;
            if &sha_hex(&b) != sha {
                return Err(Error::CacheInvalid("h.bin checksum mismatch".into()));
            }
            Some(decode_h(&b, &fp)?)
        }
        None => None,
    };
    Ok((kl, h))
}
