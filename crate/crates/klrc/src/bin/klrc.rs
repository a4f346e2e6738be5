fn main() {
    // die quietly when a pipe consumer closes early (e.g. `klrc ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(klrc::io::cli_dispatch(std::env::args().collect()));
}
