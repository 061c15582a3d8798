//! Write designs and certificates as JSON and read them back.

use std::error::Error;

use designlink::downlinks::downlink;
use designlink::generators::steiner_triple_system;
use designlink::io::{decode_design, encode_certificate, encode_design, read_document, write_atomic, Document};

pub fn run() -> Result<(), Box<dyn Error>> {
    let d = steiner_triple_system(9)?;
    let text = encode_design(&d);
    assert_eq!(decode_design(&text)?, d);
    println!("{}", text.lines().take(6).collect::<Vec<_>>().join("\n"));

    let dir = tempfile::tempdir()?;
    let path = dir.path().join("sts9.cert.json");
    write_atomic(&path, &encode_certificate(&downlink(&d, false)?))?;
    match read_document(&path)? {
        Document::Certificate(c) => println!("read back a certificate to order {}", c.target_order()),
        Document::Design(_) => unreachable!("a certificate was written"),
    }

    let err = decode_design(r#"{"v":1,"host":{"kind":"complete","v":4},"pattern":{"kind":"path"},"blocks":[]}"#);
    println!("{}", err.expect_err("missing k"));
    Ok(())
}

fn main() {
    run().expect("example failed");
}
