use fitting::corpus::{builtin_catalog, load_corpus, load_group_file, parse_grp, to_grp, Source};
use fitting::{build_group, Error};

#[test]
fn builtin_entries_survive_grp_round_trip() {
    for entry in builtin_catalog() {
        let text = to_grp(&entry.spec);
        let spec = parse_grp(&text).unwrap();
        assert_eq!(spec, entry.spec);
        let (a, b) = (
            build_group(&entry.spec, 360).unwrap(),
            build_group(&spec, 360).unwrap(),
        );
        assert_eq!(a.order(), b.order());
        let n = a.order();
        for x in 0..n {
            assert_eq!(a.perm(x), b.perm(x), "{} element {x}", entry.name());
            for y in 0..n {
                assert_eq!(a.mul(x, y), b.mul(x, y));
            }
        }
    }
}

#[test]
fn directory_corpus_loads_in_name_order() {
    let dir = tempfile::tempdir().unwrap();
    let catalog = builtin_catalog();
    for (file, name) in [("b.grp", "S3"), ("a.grp", "Q8"), ("c.grp", "A4")] {
        let e = catalog.iter().find(|e| e.name() == name).unwrap();
        std::fs::write(dir.path().join(file), to_grp(&e.spec)).unwrap();
    }
    std::fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
    let corpus = load_corpus(dir.path(), 360).unwrap();
    let names: Vec<&str> = corpus.iter().map(|e| e.name()).collect();
    assert_eq!(names, ["Q8", "S3", "A4"]);
    assert!(matches!(corpus[0].source, Source::File(_)));
}

#[test]
fn file_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.grp");
    std::fs::write(
        &path,
        "# a broken file\nname X\ndegree 3\ngen (0 1 2)\ngen (0 1\n",
    )
    .unwrap();
    match load_group_file(&path, 360) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
        other => panic!("expected a parse error, got {other:?}"),
    }
    std::fs::write(&path, "name X\ndegree 3\ngen (0 5)\n").unwrap();
    assert!(matches!(
        load_group_file(&path, 360),
        Err(Error::DegreeMismatch {
            line: 3,
            point: 5,
            degree: 3
        })
    ));
    assert!(matches!(
        load_group_file(&dir.path().join("missing.grp"), 360),
        Err(Error::Io(_))
    ));
}
