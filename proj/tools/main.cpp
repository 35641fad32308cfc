#include <cstdio>

int main() {
    std::puts("exacthh: command-line interface not wired up yet");
    return 3;
}
