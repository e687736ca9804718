use std::process::ExitCode;

fn main() -> ExitCode {
    let out = fuzzysoft::cli::run(std::env::args_os());
    if out.code == 2 {
        eprint!("{}", out.text);
    } else {
        print!("{}", out.text);
    }
    ExitCode::from(out.code as u8)
}
