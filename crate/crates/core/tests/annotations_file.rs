use trinoise_core::closed_forms::{render_annotations, ANNOTATIONS};

const SHIPPED: &str = include_str!("../annotations.txt");

#[test]
fn shipped_file_matches_table() {
    assert_eq!(SHIPPED, render_annotations());
}

#[test]
fn every_line_has_four_fields() {
    assert_eq!(SHIPPED.lines().count(), ANNOTATIONS.len());
    for line in SHIPPED.lines() {
        let fields: Vec<_> = line.split(" | ").collect();
        assert_eq!(fields.len(), 4, "{line}");
        assert!(fields.iter().all(|f| !f.trim().is_empty()), "{line}");
    }
}
