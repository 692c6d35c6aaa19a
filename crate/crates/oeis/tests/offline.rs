use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use trigpoly_oeis::{bfile, crosscheck, AId, Client, OeisError, Source, Transport, GENERATORS};

/// Counts calls and serves a fixed body.
#[derive(Clone, Default)]
struct Recording {
    calls: Arc<AtomicUsize>,
    body: String,
}

impl Transport for Recording {
    fn get(&self, _url: &str) -> Result<String, String> {
        self.calls.fetch_add(1, Ordering::SeqCst);
        Ok(self.body.clone())
    }
}

struct Unreachable;

impl Transport for Unreachable {
    fn get(&self, url: &str) -> Result<String, String> {
        panic!("offline client touched the network: {url}");
    }
}

fn id(s: &str) -> AId {
    s.parse().unwrap()
}

#[test]
fn bundled_sequences_match_offline() {
    let client = Client::with_transport(Unreachable, None, true);
    let mut checked = 0;
    for gen in GENERATORS {
        match crosscheck(&client, gen.id, 30) {
            Ok(report) => {
                assert_eq!(report.comparisons, 30);
                checked += 1;
            }
            Err(OeisError::NotAvailableOffline(s)) => assert_eq!(s, "A053139"),
            Err(e) => panic!("{e}"),
        }
    }
    assert_eq!(checked, 8);
}

#[test]
fn spec_examples() {
    let client = Client::with_transport(Unreachable, None, true);
    let f = client.fetch_sequence(id("A000108"), 5).unwrap();
    assert_eq!(f.source, Source::Bundled);
    assert_eq!(f.terms, [1, 1, 2, 5, 14].map(BigInt::from));
    let f = client.fetch_sequence(id("A005408"), 4).unwrap();
    assert_eq!(f.terms, [1, 3, 5, 7].map(BigInt::from));
    assert!(matches!(
        client.fetch_sequence(id("A999999"), 3),
        Err(OeisError::NotAvailableOffline(_))
    ));
    crosscheck(&client, id("A000330"), 6).unwrap();
    crosscheck(&client, id("A014963"), 10).unwrap();
    crosscheck(&client, id("A000290"), 5).unwrap();
    crosscheck(&client, id("A005585"), 6).unwrap();
}

#[test]
fn offline_never_calls_transport() {
    let dir = tempfile::tempdir().unwrap();
    let rec = Recording::default();
    let client = Client::with_transport(rec.clone(), Some(dir.path().to_path_buf()), true);
    assert!(client.fetch_sequence(id("A053139"), 10).is_err());
    assert!(client.fetch_sequence(id("A000001"), 10).is_err());
    assert!(crosscheck(&client, id("A053139"), 5).is_err());
    assert_eq!(rec.calls.load(Ordering::SeqCst), 0);
}

#[test]
fn network_result_is_cached() {
    let dir = tempfile::tempdir().unwrap();
    let rec = Recording {
        calls: Arc::default(),
        body: "# phi(n) - mu(n)\n1 0\n2 2\n3 3\n4 2\n5 5\n".into(),
    };
    let online = Client::with_transport(rec.clone(), Some(dir.path().to_path_buf()), false);
    let f = online.fetch_sequence(id("A053139"), 10).unwrap();
    assert_eq!(f.source, Source::Network);
    assert_eq!(f.offset, 1);
    assert!(dir.path().join("b053139.txt").exists());
    let again = online.fetch_sequence(id("A053139"), 10).unwrap();
    assert_eq!(again.source, Source::Cached);
    assert_eq!(rec.calls.load(Ordering::SeqCst), 1);

    // the cache also serves an offline client
    let offline = Client::with_transport(Unreachable, Some(dir.path().to_path_buf()), true);
    assert_eq!(crosscheck(&offline, id("A053139"), 5).unwrap().comparisons, 5);
}

#[test]
fn malformed_download_is_not_cached() {
    let dir = tempfile::tempdir().unwrap();
    let rec = Recording {
        calls: Arc::default(),
        body: "<html>not found</html>\n".into(),
    };
    let client = Client::with_transport(rec, Some(dir.path().to_path_buf()), false);
    let e = client.fetch_sequence(id("A000002"), 5).unwrap_err();
    assert!(matches!(e, OeisError::Parse { line: 1, .. }), "{e}");
    assert!(!dir.path().join("b000002.txt").exists());
}

#[test]
fn mismatch_is_located() {
    let dir = tempfile::tempdir().unwrap();
    let mut terms: Vec<BigInt> = (1..=10u64).map(|d| BigInt::from(trigpoly_core::combinatorics::totient(d) as i64 - trigpoly_core::combinatorics::moebius(d))).collect();
    terms[6] += 1;
    std::fs::write(dir.path().join("b053139.txt"), bfile::render(1, &terms)).unwrap();
    let client = Client::with_transport(Unreachable, Some(dir.path().to_path_buf()), true);
    match crosscheck(&client, id("A053139"), 10) {
        Err(OeisError::Mismatch { index, .. }) => assert_eq!(index, 7),
        other => panic!("{other:?}"),
    }
    assert!(matches!(crosscheck(&client, id("A053139"), 11), Err(OeisError::TooFewTerms { .. })));
}
