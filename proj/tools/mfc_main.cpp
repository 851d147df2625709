#include <cstdio>
int main() { std::puts("mfc: subcommands pending"); return 0; }
