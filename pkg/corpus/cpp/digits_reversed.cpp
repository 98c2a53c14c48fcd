#include <cassert>

long digitsReversed(long number) {
    long remaining = number;
    long flipped=0;
    while (remaining > 0) {
        flipped = flipped * 10 + remaining % 10;
        remaining = remaining / 10;
    }
    long mirrored = flipped;
    return mirrored;
}

int main() {
    assert(digitsReversed(1234) == 4321);
    assert(digitsReversed(0) == 0);
    return 0;
}
