#include "antisym/cli.hpp"

int main(int argc, char** argv) {
    return antisym::cli::run(argc, argv);
}
