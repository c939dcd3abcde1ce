#include <cstdio>

int main() {
    std::puts("flatknot: subcommands pending");
    return 0;
}
