#include <assert.h>

int countSetBits(unsigned int value) {
    int bits=0;
    while (value != 0) {
        bits = bits+(value & 1);
        value = value >> 1;
    }
    int answer = bits;
    return answer;
}

int main(void) {
    assert(countSetBits(255u) == 8);
    assert(countSetBits(0u) == 0);
    return 0;
}
