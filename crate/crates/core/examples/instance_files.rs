//! Parsing an instance file and running commands on it.

use depth2::cli::{exit_code, run_command, Command};
use depth2::instance::parse_instance;
use depth2::report::Format;

const C4_OVER_C2: &str = "
name c4-over-c2
field rational
algebra group
  elements 1 a a2 a3
  row 1  a  a2 a3
  row a  a2 a3 1
  row a2 a3 1  a
  row a3 1  a  a2
end
sub
  1
  a2
end
coalgebra group
";

fn main() -> depth2::Result<()> {
    let inst = parse_instance(C4_OVER_C2)?;
    for cmd in [Command::D2, Command::Normality] {
        let out = run_command(cmd, &inst);
        println!("exit {}", exit_code(&out));
        print!("{}", out?.render(Format::Text));
    }
    let out = run_command(Command::HopfAlgebroid, &inst)?;
    print!("{}", out.render(Format::Structured));
    if let Err(e) = parse_instance("algebra matrix 2\nsub\n e11\n e12\nend\n") {
        println!("rejected: {e}");
    }
    Ok(())
}
