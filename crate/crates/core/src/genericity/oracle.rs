use std::fs::File;
use std::path::Path;
use std::process::{Command, Stdio};
use std::thread;
use std::time::{Duration, Instant};

use crate::cycles::{stable_intersection_with, IntersectOptions, TropicalCycle};
use crate::error::{Error, Result};
use crate::workbench::format::{parse_cycle, write_cycle, write_oracle_request};

use super::ProjectionMap;

/// Source of tropicalized critical loci `Trop Cr p` for a variety given by `Trop U`.
pub trait TropOracle {
    fn query(&mut self, p: &ProjectionMap, trop_u: &TropicalCycle) -> Result<TropicalCycle>;
}

/// An external command invoked as `<command> <request> <response>`.
///
/// Tokens `{request}` and `{response}` in the template are replaced by the
/// file paths; when neither occurs the two paths are appended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleSpec {
    pub command: String,
    pub timeout: Duration,
}

impl OracleSpec {
    pub fn new(command: impl Into<String>, timeout: Duration) -> Self {
        OracleSpec { command: command.into(), timeout }
    }

    fn argv(&self, request: &Path, response: &Path) -> Result<Vec<String>> {
        let req = request.to_string_lossy().into_owned();
        let resp = response.to_string_lossy().into_owned();
        let mut toks: Vec<String> = self.command.split_whitespace().map(str::to_owned).collect();
        if toks.is_empty() {
            return Err(Error::Oracle("empty oracle command".into()));
        }
        let templated = toks.iter().any(|t| t.contains("{request}") || t.contains("{response}"));
        if templated {
            for t in toks.iter_mut() {
                *t = t.replace("{request}", &req).replace("{response}", &resp);
            }
        } else {
            toks.push(req);
            toks.push(resp);
        }
        Ok(toks)
    }
}

pub struct ExternalOracle {
    spec: OracleSpec,
}

impl ExternalOracle {
    pub fn new(spec: OracleSpec) -> Self {
        ExternalOracle { spec }
    }
}

fn io_err(what: &str, e: std::io::Error) -> Error {
    Error::Oracle(format!("{what}: {e}"))
}

impl TropOracle for ExternalOracle {
    fn query(&mut self, p: &ProjectionMap, trop_u: &TropicalCycle) -> Result<TropicalCycle> {
        let dir = tempfile::tempdir().map_err(|e| io_err("temporary directory", e))?;
        let request = dir.path().join("request");
        let response = dir.path().join("response");
        let errlog = dir.path().join("stderr");
        std::fs::write(&request, write_oracle_request(p.matrix(), trop_u)).map_err(|e| io_err("writing request", e))?;
        let argv = self.spec.argv(&request, &response)?;
        let stderr = File::create(&errlog).map_err(|e| io_err("stderr capture", e))?;
        let mut child = Command::new(&argv[0])
            .args(&argv[1..])
            .stdin(Stdio::null())
            .stdout(Stdio::null())
            .stderr(stderr)
            .spawn()
            .map_err(|e| io_err(&format!("spawning `{}`", argv[0]), e))?;
        let start = Instant::now();
        let status = loop {
            if let Some(s) = child.try_wait().map_err(|e| io_err("waiting", e))? {
                break s;
            }
            if start.elapsed() >= self.spec.timeout {
                let _ = child.kill();
                let _ = child.wait();
                return Err(Error::Oracle(format!("timed out after {:?}", self.spec.timeout)));
            }
            thread::sleep(Duration::from_millis(5));
        };
        if !status.success() {
            let log = std::fs::read_to_string(&errlog).unwrap_or_default();
            return Err(Error::Oracle(format!("command exited with {status}: {}", log.trim())));
        }
        let text = std::fs::read_to_string(&response).map_err(|e| io_err("reading response", e))?;
        parse_cycle(&text).map_err(|e| Error::Oracle(format!("unparsable response: {e}")))
    }
}

/// Responses of a schön hypersurface: for a rank-`r` request, `T^(n-r+1)` with
/// `T = Trop U`, i.e. the self-intersection of `Trop U` down to dimension `r - 1`.
pub fn schon_response(p: &ProjectionMap, trop_u: &TropicalCycle, opts: &IntersectOptions) -> Result<TropicalCycle> {
    let n = trop_u.ambient();
    if p.source_rank() != n {
        return Err(Error::DimensionMismatch(format!("projection from R^{} for a cycle in R^{n}", p.source_rank())));
    }
    let r = p.target_rank();
    if r == 0 || r > trop_u.dim() + 1 {
        return Err(Error::InvalidInput(format!("no critical locus for a rank-{r} request")));
    }
    let k = r - 1;
    if trop_u.codim() == 0 {
        return Ok(TropicalCycle::zero(n, k));
    }
    let mut acc = trop_u.clone();
    while acc.dim() > k {
        if acc.is_zero() {
            return Ok(TropicalCycle::zero(n, k));
        }
        acc = stable_intersection_with(&acc, trop_u, opts)?;
    }
    if acc.dim() != k {
        return Ok(TropicalCycle::zero(n, k));
    }
    Ok(acc)
}

/// In-process version of the bundled mock oracle.
#[derive(Clone, Debug, Default)]
pub struct SchonMockOracle {
    pub opts: IntersectOptions,
    pub queries: usize,
}

impl TropOracle for SchonMockOracle {
    fn query(&mut self, p: &ProjectionMap, trop_u: &TropicalCycle) -> Result<TropicalCycle> {
        self.queries += 1;
        schon_response(p, trop_u, &self.opts)
    }
}

/// Writes the response file for a request file; the body of the mock-oracle executable.
pub fn answer_request_file(request: &Path, response: &Path) -> Result<()> {
    let text = std::fs::read_to_string(request).map_err(|e| io_err("reading request", e))?;
    let (m, c) = crate::workbench::format::parse_oracle_request(&text)?;
    let p = ProjectionMap::new(m)?;
    let out = schon_response(&p, &c, &IntersectOptions::default())?;
    std::fs::write(response, write_cycle(&out)).map_err(|e| io_err("writing response", e))
}
