//! On-disk cache of computed `H_n` polynomials.
//!
//! One JSON file per `(g, p, n, tprec)`, written to a temporary file in the
//! same directory and renamed into place, so concurrent runs never observe a
//! partial entry. Entries carry `format_version`; anything stale, corrupt or
//! keyed differently is recomputed and overwritten.

use std::io::Write;
use std::path::{Path, PathBuf};

use higgsmotive::higgs::{default_tprec, hn, CurveParams, HnPoly};
use higgsmotive::Result;
use serde_json::{json, Value};

pub const FORMAT_VERSION: u64 = 1;

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    /// A missing or non-directory path disables caching.
    pub fn new(dir: Option<PathBuf>) -> Self {
        let dir = dir.filter(|d| d.is_dir());
        Cache { dir }
    }

    fn key(params: CurveParams, n: u32, tprec: i64) -> Value {
        json!({"g": params.g, "p": params.p, "n": n, "tprec": tprec})
    }

    fn path(dir: &Path, params: CurveParams, n: u32, tprec: i64) -> PathBuf {
        dir.join(format!("hn-g{}-p{}-n{n}-t{tprec}.json", params.g, params.p))
    }

    fn load(path: &Path, key: &Value) -> std::result::Result<HnPoly, String> {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        let v: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        let version = v["format_version"].as_u64();
        if version != Some(FORMAT_VERSION) {
            return Err(format!(
                "format version {version:?}, expected {FORMAT_VERSION}"
            ));
        }
        if &v["key"] != key {
            return Err(format!("entry is for {}", v["key"]));
        }
        HnPoly::from_json(&v["value"]).map_err(|e| e.to_string())
    }

    fn store(dir: &Path, path: &Path, key: Value, h: &HnPoly) -> std::io::Result<()> {
        let doc = json!({"format_version": FORMAT_VERSION, "key": key, "value": h.to_json()});
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(serde_json::to_string(&doc)?.as_bytes())?;
        tmp.persist(path).map_err(|e| e.error)?;
        Ok(())
    }

    pub fn hn(&self, params: CurveParams, n: u32, tprec: Option<i64>) -> Result<HnPoly> {
        let Some(dir) = &self.dir else {
            return hn(params, n, tprec);
        };
        let tp = tprec.unwrap_or_else(|| default_tprec(params, n));
        let key = Self::key(params, n, tp);
        let path = Self::path(dir, params, n, tp);
        if path.exists() {
            match Self::load(&path, &key) {
                Ok(h) => return Ok(h),
                Err(e) => eprintln!("warning: ignoring cache entry {}: {e}", path.display()),
            }
        }
        let h = hn(params, n, Some(tp))?;
        if let Err(e) = Self::store(dir, &path, key, &h) {
            eprintln!("warning: could not write {}: {e}", path.display());
        }
        Ok(h)
    }
}
