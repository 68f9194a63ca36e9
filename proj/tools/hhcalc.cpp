#include "hhcalc/cli.hpp"

int main(int argc, char** argv) {
    return hhcalc::cli::main(argc, argv);
}
