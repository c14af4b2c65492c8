#include "bsw/cli.hpp"

int main(int argc, char** argv) { return bsw::run(argc, argv); }
