#pragma once

namespace umbilic::cli {

/// Entry point of the umbilic executable.
int run_app(int argc, char** argv);

}  // namespace umbilic::cli
