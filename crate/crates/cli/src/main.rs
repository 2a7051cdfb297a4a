use std::io::{Read, Write};

fn main() -> anyhow::Result<()> {
    let args: Vec<_> = std::env::args_os().skip(1).collect();
    // stdin is only ever read as the file `-`
    let mut stdin = Vec::new();
    if args.iter().any(|a| a == "-") {
        std::io::stdin().read_to_end(&mut stdin)?;
    }
    let out = vsbraid_cli::run(args, &stdin);
    std::io::stdout().write_all(out.stdout.as_bytes())?;
    std::io::stderr().write_all(out.stderr.as_bytes())?;
    std::process::exit(out.code);
}
