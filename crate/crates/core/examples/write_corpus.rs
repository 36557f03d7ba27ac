//! Regenerates the `corpus/` directory at the workspace root.

use std::path::Path;

fn main() -> std::io::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    std::fs::create_dir_all(&dir)?;
    for e in strlink::corpus::standard() {
        std::fs::write(dir.join(e.file_name()), &e.text)?;
    }
    Ok(())
}
