#include "geowind/cli.hpp"

int main(int argc, char** argv) { return geowind::runCli(argc, argv); }
