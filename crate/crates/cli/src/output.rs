//! Output sinks: stdout, or a file replaced atomically.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

/// `# meta:` line carrying the full argument vector.
pub fn meta_line() -> String {
    let args: Vec<String> = std::env::args().collect();
    format!("# meta: {}\n", args.join(" "))
}

/// Writes `body` to `out`, or to stdout when `out` is `None`. Files are
/// written to a sibling temporary and renamed into place.
pub fn emit(out: Option<&Path>, body: &str) -> io::Result<()> {
    match out {
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()
        }
        Some(path) => {
            let tmp = temp_path(path);
            let result = (|| {
                let mut f = fs::File::create(&tmp)?;
                f.write_all(body.as_bytes())?;
                f.sync_all()?;
                fs::rename(&tmp, path)
            })();
            if result.is_err() {
                let _ = fs::remove_file(&tmp);
            }
            result
        }
    }
}

fn temp_path(path: &Path) -> PathBuf {
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!(".{name}.{}.tmp", std::process::id()))
}
