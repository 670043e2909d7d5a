#include "umbilic/cli/app.hpp"

int main(int argc, char** argv) { return umbilic::cli::run_app(argc, argv); }
