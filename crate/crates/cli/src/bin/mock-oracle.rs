//! Stand-in for an external tropicalization oracle: answers a request file as
//! a schön hypersurface would, `mock-oracle <request> <response>`.

use std::path::Path;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let [_, request, response] = &args[..] else {
        eprintln!("usage: mock-oracle <request> <response>");
        return ExitCode::from(2);
    };
    match tropchar::genericity::answer_request_file(Path::new(request), Path::new(response)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mock-oracle: {e}");
            ExitCode::from(1)
        }
    }
}
