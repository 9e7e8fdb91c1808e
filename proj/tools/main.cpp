#include "ancred/cli/commands.hpp"

int main(int argc, char** argv) {
    return ancred::cli::run(argc, argv);
}
