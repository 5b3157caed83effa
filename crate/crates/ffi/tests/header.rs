use std::path::Path;
use std::process::Command;

const PROGRAM: &str = r#"
#include "strathom.h"
#include <stdio.h>

int main(void) {
    StrathomAlgebra *a = NULL;
    size_t dim = 0, n = 0;
    if (strathom_algebra_fixture("FX-43", NULL, &a) != STRATHOM_STATUS_OK) return 1;
    strathom_algebra_dim(a, &dim, &n);
    strathom_algebra_free(a);
    printf("%zu %zu\n", dim, n);
    return dim == 5 ? 0 : 2;
}
"#;

/// The generated header compiles as C and as C++.
#[test]
fn header_compiles() {
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    assert!(include.join("strathom.h").exists());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(&src, PROGRAM).unwrap();
    for (compiler, extra) in [("cc", vec!["-std=c99"]), ("c++", vec!["-x", "c++"])] {
        let status = Command::new(compiler)
            .args(&extra)
            .args(["-Wall", "-Werror", "-fsyntax-only", "-I"])
            .arg(&include)
            .arg(&src)
            .status();
        match status {
            Ok(s) => assert!(s.success(), "{compiler} rejected the header"),
            Err(e) => eprintln!("skipping {compiler}: {e}"),
        }
    }
}
