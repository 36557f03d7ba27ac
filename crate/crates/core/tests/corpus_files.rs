use std::path::Path;

#[test]
fn shipped_corpus_matches_generator() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    for e in strlink::corpus::standard() {
        let text = std::fs::read_to_string(dir.join(e.file_name())).unwrap_or_else(|_| panic!("missing {}", e.file_name()));
        assert_eq!(text, e.text, "{}", e.name);
    }
}
