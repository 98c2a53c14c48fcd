#include <assert.h>

int clampValue(int value, int bound) {
    int floor_v = 0 - bound;
    if (value > bound) return bound;
    if (value < floor_v) return floor_v;
    return value;
}

int main(void) {
    assert(clampValue(12, 5) == 5);
    assert(clampValue(-12, 5) == -5);
    assert(clampValue(3, 5) == 3);
    return 0;
}
