#include <cassert>

long powerMod(long base, long exponent) {
    const long modulus = 1000000007L;
    long acc = 1;
    long scaled = base % modulus;
    while (exponent > 0) {
        if (exponent % 2 == 1) {
            acc = acc * scaled % modulus;
        }
        scaled = scaled * scaled % modulus;
        exponent = exponent / 2;
    }
    return acc;
}

int main() {
    assert(powerMod(2, 10) == 1024);
    assert(powerMod(3, 0) == 1);
    return 0;
}
