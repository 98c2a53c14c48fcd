#include <assert.h>

int gcdIterative(int first, int second) {
    int a = first;
    int b = second;
    while (b != 0) {
        int rem = a % b;
        a = b;
        b = rem;
    }
    if (a < 0) a = 0 - a;
    return a;
}

int main(void) {
    assert(gcdIterative(48, 18) == 6);
    assert(gcdIterative(-21, 14) == 7);
    return 0;
}
