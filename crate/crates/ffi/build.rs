use std::env;
use std::fs;
use std::path::PathBuf;

fn main() {
    let dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").expect("set by cargo"));
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    let config = cbindgen::Config::from_file(dir.join("cbindgen.toml")).expect("valid cbindgen.toml");
    let bindings = cbindgen::Builder::new()
        .with_crate(&dir)
        .with_config(config)
        .generate()
        .expect("header generation");
    let mut text = Vec::new();
    bindings.write(&mut text);
    let header = dir.join("include").join("schurlie.h");
    // rewrite only on change so the header's mtime stays stable
    if fs::read(&header).ok().as_deref() != Some(&text[..]) {
        fs::create_dir_all(header.parent().expect("has parent")).expect("create include/");
        fs::write(&header, text).expect("write header");
    }
}
