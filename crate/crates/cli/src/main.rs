fn main() {
    let limit = std::env::var(matchgap_cli::LIMIT_ENV).ok();
    let code = matchgap_cli::run(
        std::env::args_os(),
        limit.as_deref(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
