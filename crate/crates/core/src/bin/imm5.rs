use clap::Parser;

fn main() {
    let cli = imm5::cli::Cli::parse();
    let code = imm5::cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
