use clap::Parser;

fn main() {
    let cli = lsab_cli::Cli::parse();
    std::process::exit(lsab_cli::run(&cli));
}
